//! The two-term category: complexes `P_{-1} -> P_0` of projective modules,
//! morphisms up to homotopy, E-groups, cones, decomposition, silting tests,
//! silting enumeration and the Bongartz triangle.

use serde_json::{json, Value};

use crate::algebra::{expand_mult, Algebra};
use crate::complex::{self, cone, left_approximation, Cochain, Complex, KHom};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::homology::{element_matrix, min_presentation, projective_cover};
use crate::modrep::{ModMap, Rep};
use crate::par;

/// `P(m_minus1) --diff--> P(m0)` with both terms standard projective sums
/// (summands ordered by vertex, then copy).
#[derive(Clone, Debug)]
pub struct TwoTermComplex {
    m_minus1: Vec<usize>,
    m0: Vec<usize>,
    p_minus1: Rep,
    p0: Rep,
    diff: ModMap,
}

impl TwoTermComplex {
    pub fn new(alg: &Algebra, m_minus1: Vec<usize>, m0: Vec<usize>, diff: ModMap) -> Result<Self> {
        let n = alg.num_vertices();
        if m_minus1.len() != n || m0.len() != n {
            return Err(Error::Shape(format!("multiplicity vectors need {n} entries")));
        }
        let p_minus1 = alg.projective_sum(&m_minus1);
        let p0 = alg.projective_sum(&m0);
        if diff.source_dims() != p_minus1.dims() || diff.target_dims() != p0.dims() || !diff.is_intertwiner(&p_minus1, &p0) {
            return Err(Error::Inconsistent("differential is not a module map between the given projectives".into()));
        }
        Ok(TwoTermComplex { m_minus1, m0, p_minus1, p0, diff })
    }

    /// Differential given by its element matrix (see [`Algebra::projective_map`]).
    pub fn from_entries(alg: &Algebra, m_minus1: Vec<usize>, m0: Vec<usize>, entries: &[Vec<Vec<u32>>]) -> Result<Self> {
        let diff = alg.projective_map(&m_minus1, &m0, entries);
        TwoTermComplex::new(alg, m_minus1, m0, diff)
    }

    /// `P(mult)` in degree 0.
    pub fn stalk(alg: &Algebra, mult: &[usize]) -> Self {
        let p0 = alg.projective_sum(mult);
        let p_minus1 = alg.projective_sum(&vec![0; mult.len()]);
        let diff = ModMap::zero(&p_minus1, &p0);
        TwoTermComplex { m_minus1: vec![0; mult.len()], m0: mult.to_vec(), p_minus1, p0, diff }
    }

    /// `P(mult)[1]`, concentrated in degree -1.
    pub fn shifted(alg: &Algebra, mult: &[usize]) -> Self {
        let p_minus1 = alg.projective_sum(mult);
        let p0 = alg.projective_sum(&vec![0; mult.len()]);
        let diff = ModMap::zero(&p_minus1, &p0);
        TwoTermComplex { m_minus1: mult.to_vec(), m0: vec![0; mult.len()], p_minus1, p0, diff }
    }

    /// The minimal projective presentation `P_M` of a module.
    pub fn presentation(alg: &Algebra, m: &Rep) -> Self {
        let pres = min_presentation(alg, m);
        TwoTermComplex { m_minus1: pres.m1, m0: pres.m0, p_minus1: pres.p1, p0: pres.p0, diff: pres.d }
    }

    pub fn m_minus1(&self) -> &[usize] {
        &self.m_minus1
    }

    pub fn m0(&self) -> &[usize] {
        &self.m0
    }

    pub fn p_minus1(&self) -> &Rep {
        &self.p_minus1
    }

    pub fn p0(&self) -> &Rep {
        &self.p0
    }

    pub fn diff(&self) -> &ModMap {
        &self.diff
    }

    pub fn is_zero(&self) -> bool {
        self.m_minus1.iter().chain(&self.m0).all(|&m| m == 0)
    }

    /// The g-vector `[P_0] - [P_{-1}]`.
    pub fn g_vector(&self) -> Vec<i64> {
        self.m0.iter().zip(&self.m_minus1).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn to_complex(&self) -> Complex {
        Complex::new(-1, vec![self.p_minus1.clone(), self.p0.clone()], vec![self.diff.clone()]).expect("two-term complex")
    }

    pub fn h0(&self) -> Rep {
        self.p0.cokernel_of(&self.diff).0
    }

    pub fn h_minus1(&self) -> Rep {
        self.p_minus1.kernel_of(&self.diff).0
    }

    /// Rewrites a complex (up to homotopy) in standard two-term form: contractible
    /// summands are dropped and the rest must live in degrees -1 and 0 with
    /// projective terms. `None` when that is impossible.
    pub fn from_complex(alg: &Algebra, c: &Complex) -> Option<Self> {
        let parts: Vec<Complex> = c.decompose().into_iter().filter(|s| !s.is_acyclic()).collect();
        let mut std_parts = Vec::with_capacity(parts.len());
        for s in parts {
            let (a, b) = s.support()?;
            if a < -1 || b > 0 {
                return None;
            }
            std_parts.push(standardize(alg, &s.padded(-1, 0))?);
        }
        Some(TwoTermComplex::direct_sum(alg, &std_parts))
    }

    /// Direct sum in standard form.
    pub fn direct_sum(alg: &Algebra, parts: &[TwoTermComplex]) -> Self {
        let n = alg.num_vertices();
        let m1: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.m_minus1[v]).sum()).collect();
        let m0: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.m0[v]).sum()).collect();
        let src_pos = summand_positions(&m1, parts.iter().map(|p| p.m_minus1.as_slice()));
        let tgt_pos = summand_positions(&m0, parts.iter().map(|p| p.m0.as_slice()));
        let zero = vec![0u32; alg.dim()];
        let mut entries = vec![vec![zero; src_pos.iter().map(|s| s.len()).sum()]; tgt_pos.iter().map(|t| t.len()).sum()];
        for (k, p) in parts.iter().enumerate() {
            let e = element_matrix(alg, &p.m_minus1, &p.m0, &p.diff);
            for (i, row) in e.into_iter().enumerate() {
                for (j, x) in row.into_iter().enumerate() {
                    entries[tgt_pos[k][i]][src_pos[k][j]] = x;
                }
            }
        }
        TwoTermComplex::from_entries(alg, m1, m0, &entries).expect("sum of module maps")
    }

    /// Deterministic JSON: multiplicities by vertex label and the differential
    /// as a matrix of path combinations.
    pub fn to_json(&self, alg: &Algebra) -> Value {
        let q = alg.quiver();
        let mults = |m: &[usize]| -> Value {
            let mut o = serde_json::Map::new();
            for (v, &k) in m.iter().enumerate() {
                o.insert(q.vertices()[v].clone(), json!(k));
            }
            Value::Object(o)
        };
        let e = element_matrix(alg, &self.m_minus1, &self.m0, &self.diff);
        let diff: Vec<Vec<Value>> = e
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let terms: Vec<Value> =
                            x.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| json!({"coeff": c, "path": alg.path_basis()[k].label(q)})).collect();
                        Value::Array(terms)
                    })
                    .collect()
            })
            .collect();
        json!({"degMinus1": mults(&self.m_minus1), "deg0": mults(&self.m0), "diff": diff})
    }
}

// Index of each part's summands inside the combined standard sum.
fn summand_positions<'a>(total: &[usize], parts: impl Iterator<Item = &'a [usize]>) -> Vec<Vec<usize>> {
    let mut start: Vec<usize> = Vec::with_capacity(total.len());
    let mut acc = 0;
    for &t in total {
        start.push(acc);
        acc += t;
    }
    let mut used = vec![0usize; total.len()];
    let mut out = Vec::new();
    for m in parts {
        let pos = expand_mult(m)
            .into_iter()
            .map(|v| {
                let p = start[v] + used[v];
                used[v] += 1;
                p
            })
            .collect();
        out.push(pos);
    }
    out
}

/// Standard form of a complex with projective terms in the window `[-1, 0]`.
fn standardize(alg: &Algebra, c: &Complex) -> Option<TwoTermComplex> {
    let t1 = c.term(-1);
    let t0 = c.term(0);
    let (m1, pi1) = projective_iso(alg, &t1)?;
    let (m0, pi0) = projective_iso(alg, &t0)?;
    let diff = pi0.inverse()?.compose(&c.diff(-1)).compose(&pi1);
    TwoTermComplex::new(alg, m1, m0, diff).ok()
}

// `P(mult) -> t`, an isomorphism when `t` is projective.
fn projective_iso(alg: &Algebra, t: &Rep) -> Option<(Vec<usize>, ModMap)> {
    let cover = projective_cover(alg, t);
    (cover.p.total_dim() == t.total_dim()).then_some((cover.mult, cover.epi))
}

/// Morphisms `X -> Y[shift]` in the homotopy category.
pub fn hom_k(x: &TwoTermComplex, y: &TwoTermComplex, shift: i32) -> KHom {
    complex::hom_k(&x.to_complex(), &y.to_complex(), shift)
}

/// `dim E(X, Y) = dim Hom(X, Y[1])`.
pub fn e_dim(x: &TwoTermComplex, y: &TwoTermComplex) -> usize {
    hom_k(x, y, 1).dim()
}

/// Indecomposable summands up to homotopy, contractible pieces removed.
pub fn decompose(alg: &Algebra, x: &TwoTermComplex) -> Vec<TwoTermComplex> {
    x.to_complex().decompose().into_iter().filter(|s| !s.is_acyclic()).map(|s| standardize(alg, &s).expect("summand of a two-term complex")).collect()
}

/// Isomorphism in the homotopy category, for complexes without contractible summands.
pub fn k_iso(x: &TwoTermComplex, y: &TwoTermComplex) -> bool {
    x.m_minus1 == y.m_minus1 && x.m0 == y.m0 && x.to_complex().is_chain_isomorphic(&y.to_complex())
}

pub fn position_k_iso(list: &[TwoTermComplex], x: &TwoTermComplex) -> Option<usize> {
    list.iter().position(|y| k_iso(x, y))
}

/// The mapping cone of a chain map, and its two-term reduction if it has one.
#[derive(Clone, Debug)]
pub struct ConeReport {
    pub cone: Complex,
    pub two_term: Option<TwoTermComplex>,
}

pub fn cone_of(alg: &Algebra, f: &Cochain, x: &TwoTermComplex, y: &TwoTermComplex) -> ConeReport {
    let c = cone(f, &x.to_complex(), &y.to_complex()).cone;
    let two_term = TwoTermComplex::from_complex(alg, &c);
    ConeReport { cone: c, two_term }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiltingVerdict {
    pub presilting: bool,
    pub silting: bool,
    pub distinct_summands: usize,
}

pub fn silting_test(alg: &Algebra, x: &TwoTermComplex) -> SiltingVerdict {
    let presilting = e_dim(x, x) == 0;
    let mut distinct: Vec<TwoTermComplex> = Vec::new();
    for s in decompose(alg, x) {
        if position_k_iso(&distinct, &s).is_none() {
            distinct.push(s);
        }
    }
    let distinct_summands = distinct.len();
    SiltingVerdict { presilting, silting: presilting && distinct_summands == alg.num_vertices(), distinct_summands }
}

/// A basic two-term silting complex, with its summands as indices into the
/// context's two-term universe.
#[derive(Clone, Debug)]
pub struct SiltingObject {
    pub summands: Vec<usize>,
    pub complex: TwoTermComplex,
}

/// All basic two-term silting complexes: cliques of `n` pairwise E-orthogonal
/// candidates among `{P_M : M τ-rigid} ∪ {P_v[1]}`.
pub fn enumerate_two_term_silting(ctx: &Context) -> Result<Vec<SiltingObject>> {
    let n = ctx.alg.num_vertices();
    let e = ctx.e_table();
    let nm = ctx.modules.len();
    let cands: Vec<usize> = (0..ctx.two_term.len()).filter(|&i| i >= nm || ctx.modules[i].tau_rigid).collect();
    for &c in &cands {
        if e[c][c] != 0 {
            return Err(Error::Inconsistent(format!("candidate {} has a self-extension", ctx.two_term_names[c])));
        }
    }
    let compatible = |i: usize, j: usize| e[i][j] == 0 && e[j][i] == 0;
    let per_first: Vec<Vec<Vec<usize>>> = par::map_range(cands.len(), |k| {
        let mut out = Vec::new();
        let mut stack = vec![cands[k]];
        extend_cliques(&cands[k + 1..], n, &compatible, &mut stack, &mut out);
        out
    });
    let mut result = Vec::new();
    for clique in per_first.into_iter().flatten() {
        let parts: Vec<TwoTermComplex> = clique.iter().map(|&i| ctx.two_term[i].clone()).collect();
        let complex = TwoTermComplex::direct_sum(&ctx.alg, &parts);
        let verdict = silting_test(&ctx.alg, &complex);
        if !verdict.silting {
            return Err(Error::Inconsistent(format!("clique {clique:?} fails the silting test: {verdict:?}")));
        }
        result.push(SiltingObject { summands: clique, complex });
    }
    Ok(result)
}

fn extend_cliques<F: Fn(usize, usize) -> bool>(rest: &[usize], n: usize, ok: &F, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if stack.len() == n {
        out.push(stack.clone());
        return;
    }
    for (k, &c) in rest.iter().enumerate() {
        if stack.iter().all(|&s| ok(s, c)) {
            stack.push(c);
            extend_cliques(&rest[k + 1..], n, ok, stack, out);
            stack.pop();
        }
    }
}

/// `A -> V -> U -> A[1]` with `A -> V` a minimal left `add P`-approximation.
#[derive(Clone, Debug)]
pub struct BongartzTriangle {
    pub v: TwoTermComplex,
    pub u: TwoTermComplex,
    /// Indices into the summand list of `P` for the decomposition of `V` and `U`.
    pub v_summands: Vec<usize>,
    pub u_summands: Vec<usize>,
}

pub fn bongartz_triangle(alg: &Algebra, p_summands: &[TwoTermComplex]) -> Result<BongartzTriangle> {
    let list: Vec<Complex> = p_summands.iter().map(|p| p.to_complex()).collect();
    let a = TwoTermComplex::stalk(alg, &vec![1; alg.num_vertices()]).to_complex();
    let approx = left_approximation(&list, &a);
    let v = if approx.objects.is_empty() {
        TwoTermComplex::stalk(alg, &vec![0; alg.num_vertices()])
    } else {
        TwoTermComplex::from_complex(alg, &approx.sum).ok_or_else(|| Error::Inconsistent("approximation is not two-term".into()))?
    };
    let c = cone(&approx.map, &a, &approx.sum).cone;
    let u = TwoTermComplex::from_complex(alg, &c).ok_or_else(|| Error::Inconsistent("Bongartz cone is not two-term".into()))?;
    let locate = |x: &TwoTermComplex| -> Result<Vec<usize>> {
        decompose(alg, x).iter().map(|s| position_k_iso(p_summands, s).ok_or_else(|| Error::Inconsistent("Bongartz term outside add P".into()))).collect()
    };
    let v_summands = locate(&v)?;
    let u_summands = locate(&u)?;
    Ok(BongartzTriangle { v, u, v_summands, u_summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep;

    fn alg() -> Algebra {
        Algebra::from_json(include_str!("../fixtures/a3_rel.json")).unwrap()
    }

    #[test]
    fn h_minus1_of_presentation_of_s1() {
        let a = alg();
        let x = TwoTermComplex::presentation(&a, &a.simple(0));
        assert!(modrep::iso(&x.h0(), &a.simple(0)));
        assert!(modrep::iso(&x.h_minus1(), &a.simple(2)));
    }

    #[test]
    fn stalk_of_a_decomposes_into_projectives() {
        let a = alg();
        let x = TwoTermComplex::stalk(&a, &[1, 1, 1]);
        let parts = decompose(&a, &x);
        assert_eq!(parts.len(), 3);
        assert!(silting_test(&a, &x).silting);
        assert!(silting_test(&a, &TwoTermComplex::shifted(&a, &[1, 1, 1])).silting);
    }

    #[test]
    fn identity_complex_is_contractible() {
        let a = alg();
        let p = a.projective(1);
        let x = TwoTermComplex::new(&a, vec![0, 1, 0], vec![0, 1, 0], ModMap::identity(&p)).unwrap();
        assert!(decompose(&a, &x).is_empty());
        assert!(TwoTermComplex::from_complex(&a, &x.to_complex()).unwrap().is_zero());
    }

    #[test]
    fn sum_splits_back() {
        let a = alg();
        let x = TwoTermComplex::presentation(&a, &a.simple(0));
        let y = TwoTermComplex::shifted(&a, &[0, 0, 1]);
        let s = TwoTermComplex::direct_sum(&a, &[x.clone(), y.clone()]);
        let parts = decompose(&a, &s);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().any(|p| k_iso(p, &x)) && parts.iter().any(|p| k_iso(p, &y)));
    }

    #[test]
    fn stalk_hom_matches_module_hom() {
        let a = alg();
        let q = TwoTermComplex::stalk(&a, &[0, 1, 0]);
        let pm = TwoTermComplex::presentation(&a, &a.simple(1));
        assert_eq!(hom_k(&q, &pm, 0).dim(), modrep::hom_dim(&a.projective(1), &a.simple(1)));
        assert_eq!(hom_k(&pm, &TwoTermComplex::shifted(&a, &[1, 0, 0]), 0).dim(), 0);
    }

    #[test]
    fn presentation_maps_to_its_own_degree_minus_one_term() {
        // the identity of P^{-1} is not null-homotopic since d is radical
        let a = alg();
        for v in 0..a.num_vertices() {
            let pm = TwoTermComplex::presentation(&a, &a.simple(v));
            if pm.m_minus1().iter().all(|&m| m == 0) {
                continue;
            }
            assert!(hom_k(&pm, &TwoTermComplex::shifted(&a, pm.m_minus1()), 0).dim() > 0);
        }
    }
}

#[cfg(test)]
mod enumeration_tests {
    use super::*;
    use crate::modrep::EnumConfig;

    fn ctx(text: &str) -> Context {
        Context::new(Algebra::from_json(text).unwrap(), EnumConfig::default()).unwrap()
    }

    #[test]
    fn silting_counts_on_small_fixtures() {
        let k = ctx(include_str!("../fixtures/k.json"));
        assert_eq!(enumerate_two_term_silting(&k).unwrap().len(), 2);
        let a2 = ctx(include_str!("../fixtures/a2.json"));
        assert_eq!(enumerate_two_term_silting(&a2).unwrap().len(), 5);
    }

    #[test]
    fn bongartz_terms_lie_in_add_p() {
        let c = ctx(include_str!("../fixtures/a3_rel.json"));
        let all = enumerate_two_term_silting(&c).unwrap();
        for s in &all {
            let parts: Vec<TwoTermComplex> = s.summands.iter().map(|&i| c.two_term[i].clone()).collect();
            bongartz_triangle(&c.alg, &parts).unwrap();
        }
    }
}
