//! Hom, Ext¹, projective covers, injective envelopes, minimal presentations,
//! the Auslander-Reiten translate and stable Hom modulo injectives.

use crate::algebra::{expand_mult, Algebra, Path};
use crate::error::Result;
use crate::exactla::{span, FpMatrix};
use crate::modrep::{hom_basis, ModMap, Rep};

/// A basis of `Hom(source, target)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Rep,
    pub target: Rep,
    pub basis: Vec<ModMap>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn hom(m: &Rep, n: &Rep) -> Result<HomSpace> {
    m.check_same_quiver(n)?;
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis: hom_basis(m, n) })
}

/// Dimension of the span of a family of maps with common source and target.
pub fn span_dim(maps: &[ModMap]) -> usize {
    let Some(first) = maps.first() else { return 0 };
    let flats: Vec<Vec<u32>> = maps.iter().map(|m| m.flatten()).collect();
    span::rank(first.field(), flats[0].len(), &flats)
}

/// Basis (chosen among the inputs) of the span of a family of maps.
pub fn span_basis(maps: &[ModMap]) -> Vec<ModMap> {
    let Some(first) = maps.first() else { return Vec::new() };
    let flats: Vec<Vec<u32>> = maps.iter().map(|m| m.flatten()).collect();
    let len = flats[0].len();
    if len == 0 {
        return Vec::new();
    }
    let rep = FpMatrix::from_columns(first.field(), len, &flats).reduce();
    rep.pivots.iter().map(|&c| maps[c].clone()).collect()
}

/// `P(mult) ->> M` with `mult[v]` the multiplicity of the simple `S_v` in the top of `M`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub mult: Vec<usize>,
    pub p: Rep,
    pub epi: ModMap,
}

/// Per-vertex basis of `rad M = Σ_a im M_a`.
pub fn radical_basis(m: &Rep) -> Vec<FpMatrix> {
    let f = m.field();
    (0..m.dims().len())
        .map(|v| {
            let cols: Vec<Vec<u32>> = m.quiver().arrows().iter().enumerate().filter(|(_, a)| a.target == v).flat_map(|(ai, _)| m.mat(ai).columns()).collect();
            FpMatrix::from_columns(f, m.dims()[v], &span::basis(f, m.dims()[v], &cols))
        })
        .collect()
}

pub fn top_dims(m: &Rep) -> Vec<usize> {
    radical_basis(m).iter().zip(m.dims()).map(|(r, &d)| d - r.cols()).collect()
}

pub fn projective_cover(alg: &Algebra, m: &Rep) -> Cover {
    let f = alg.field();
    let n = alg.num_vertices();
    let rad = radical_basis(m);
    let gens: Vec<Vec<Vec<u32>>> = (0..n).map(|v| span::complement(f, m.dims()[v], &rad[v].columns(), &span::standard_basis(m.dims()[v]))).collect();
    let mult: Vec<usize> = gens.iter().map(|g| g.len()).collect();
    let p = alg.projective_sum(&mult);
    let blocks = (0..n)
        .map(|j| {
            let mut cols = Vec::new();
            for (v, gv) in gens.iter().enumerate() {
                for c in gv {
                    for &bi in alg.paths_between(v, j) {
                        let path: &Path = &alg.path_basis()[bi];
                        cols.push(m.path_matrix(v, &path.arrows).mul_vec(c));
                    }
                }
            }
            FpMatrix::from_columns(f, m.dims()[j], &cols)
        })
        .collect();
    let epi = ModMap::new(f, blocks);
    debug_assert!(epi.is_intertwiner(&p, m) && epi.is_surjective());
    Cover { mult, p, epi }
}

/// `M >-> I` with `I` injective, computed through the dual over `A^op`.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub mult: Vec<usize>,
    pub i: Rep,
    pub mono: ModMap,
}

pub fn injective_envelope(alg: &Algebra, op: &Algebra, m: &Rep) -> Envelope {
    let dm = m.dual(op.quiver());
    let cover = projective_cover(op, &dm);
    let i = cover.p.dual(alg.quiver());
    let mono = ModMap::new(alg.field(), cover.epi.blocks().iter().map(|b| b.transpose()).collect());
    debug_assert!(mono.is_intertwiner(m, &i) && mono.is_injective());
    Envelope { mult: cover.mult, i, mono }
}

/// Indecomposable injective `I_v = D(P_v)` of `A^op`.
pub fn injective(alg: &Algebra, op: &Algebra, v: usize) -> Rep {
    op.projective(v).dual(alg.quiver())
}

/// Minimal projective presentation `P(m1) --d--> P(m0) --epi-->> M`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub m1: Vec<usize>,
    pub m0: Vec<usize>,
    pub p1: Rep,
    pub p0: Rep,
    pub d: ModMap,
    pub epi: ModMap,
}

pub fn min_presentation(alg: &Algebra, m: &Rep) -> Presentation {
    let c0 = projective_cover(alg, m);
    let (k, kinc) = c0.p.kernel_of(&c0.epi);
    let c1 = projective_cover(alg, &k);
    let d = kinc.compose(&c1.epi);
    Presentation { m1: c1.mult, m0: c0.mult, p1: c1.p, p0: c0.p, d, epi: c0.epi }
}

/// Element matrix of a map between standard projective sums:
/// `out[i][j]` is the element for source summand `j` into target summand `i`.
pub fn element_matrix(alg: &Algebra, src: &[usize], tgt: &[usize], f: &ModMap) -> Vec<Vec<Vec<u32>>> {
    let sv = expand_mult(src);
    let tv = expand_mult(tgt);
    let (_, sincl, _) = split_sum(alg, &sv);
    let (_, _, tproj) = split_sum(alg, &tv);
    tv.iter()
        .enumerate()
        .map(|(i, &ti)| sv.iter().enumerate().map(|(j, &sj)| alg.element_of_map(ti, sj, &tproj[i].compose(f).compose(&sincl[j]))).collect())
        .collect()
}

fn split_sum(alg: &Algebra, verts: &[usize]) -> (Rep, Vec<ModMap>, Vec<ModMap>) {
    if verts.is_empty() {
        return (Rep::zero(alg.quiver().clone(), alg.field()), Vec::new(), Vec::new());
    }
    let parts: Vec<Rep> = verts.iter().map(|&v| alg.projective(v)).collect();
    Rep::direct_sum(&parts).expect("same quiver")
}

/// Coordinates in `op` of the reversed residue class of an element of `alg`.
fn reverse_element(alg: &Algebra, op: &Algebra, x: &[u32]) -> Vec<u32> {
    let f = alg.field();
    let mut out = vec![0u32; op.dim()];
    for (k, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let p = &alg.path_basis()[k];
        let rev = Path { start: p.end, end: p.start, arrows: p.arrows.iter().rev().copied().collect() };
        for (o, &z) in out.iter_mut().zip(&op.path_coords(&rev)) {
            *o = f.add(*o, f.mul(c, z));
        }
    }
    out
}

/// `Hom_A(d, A)` for a map `d: P(m1) -> P(m0)`, as the map of `A^op`-projectives
/// `P'(m0) -> P'(m1)` (using `Hom_A(A e_v, A) = e_v A`).
pub fn dualize_projective_map(alg: &Algebra, op: &Algebra, m1: &[usize], m0: &[usize], d: &ModMap) -> ModMap {
    let x = element_matrix(alg, m1, m0, d);
    let rows = expand_mult(m1).len();
    let cols = expand_mult(m0).len();
    let entries: Vec<Vec<Vec<u32>>> = (0..rows).map(|j| (0..cols).map(|i| reverse_element(alg, op, &x[i][j])).collect()).collect();
    op.projective_map(m0, m1, &entries)
}

/// Auslander-Bridger transpose `Tr M`, a module over `A^op`.
pub fn transpose(alg: &Algebra, op: &Algebra, m: &Rep) -> Rep {
    let pres = min_presentation(alg, m);
    let dd = dualize_projective_map(alg, op, &pres.m1, &pres.m0, &pres.d);
    let target = op.projective_sum(&pres.m1);
    target.cokernel_of(&dd).0
}

/// `τ M = D Tr M`. Projective summands of `M` contribute nothing because the
/// minimal presentation of a projective is `0 -> P`.
pub fn tau(alg: &Algebra, op: &Algebra, m: &Rep) -> Rep {
    transpose(alg, op, m).dual(alg.quiver())
}

/// `τ⁻¹ M = Tr D M`.
pub fn tau_inverse(alg: &Algebra, op: &Algebra, m: &Rep) -> Rep {
    let dm = m.dual(op.quiver());
    transpose(op, alg, &dm)
}

/// `Ext¹(M, N)` from the minimal presentation of `M`.
#[derive(Clone, Debug)]
pub struct Ext1Report {
    pub dim: usize,
    /// Maps `P^{-1} -> N` vanishing on `ker d`, representing a basis of the quotient.
    pub cocycle_basis: Vec<ModMap>,
}

pub fn ext1(alg: &Algebra, m: &Rep, n: &Rep) -> Result<Ext1Report> {
    m.check_same_quiver(n)?;
    let pres = min_presentation(alg, m);
    Ok(ext1_from_presentation(&pres, n))
}

pub fn ext1_from_presentation(pres: &Presentation, n: &Rep) -> Ext1Report {
    let f = n.field();
    let (_, kinc) = pres.p1.kernel_of(&pres.d);
    let h1 = hom_basis(&pres.p1, n);
    if h1.is_empty() {
        return Ext1Report { dim: 0, cocycle_basis: Vec::new() };
    }
    // cocycles: combinations of h1 vanishing on ker d
    let restricted: Vec<Vec<u32>> = h1.iter().map(|h| h.compose(&kinc).flatten()).collect();
    let rlen = restricted[0].len();
    let cocycles: Vec<ModMap> = if rlen == 0 {
        h1.clone()
    } else {
        FpMatrix::from_columns(f, rlen, &restricted).kernel().iter().map(|c| ModMap::lin_comb(f, c, &h1, pres.p1.dims(), n.dims())).collect()
    };
    let boundaries: Vec<ModMap> = hom_basis(&pres.p0, n).iter().map(|g| g.compose(&pres.d)).collect();
    let len = h1[0].flatten().len();
    let bflat: Vec<Vec<u32>> = boundaries.iter().map(|b| b.flatten()).collect();
    let cflat: Vec<Vec<u32>> = cocycles.iter().map(|c| c.flatten()).collect();
    let reps = span::complement(f, len, &bflat, &cflat);
    let cocycle_basis: Vec<ModMap> = reps.iter().map(|v| ModMap::from_flat(f, pres.p1.dims(), n.dims(), v)).collect();
    Ext1Report { dim: cocycle_basis.len(), cocycle_basis }
}

/// Dimension of `Hom(N, M)` modulo maps factoring through an injective.
pub fn stable_hom_mod_inj(alg: &Algebra, op: &Algebra, n: &Rep, m: &Rep) -> usize {
    let total = hom_basis(n, m);
    if total.is_empty() {
        return 0;
    }
    let env = injective_envelope(alg, op, n);
    let through: Vec<ModMap> = hom_basis(&env.i, m).iter().map(|g| g.compose(&env.mono)).collect();
    total.len() - span_dim(&through)
}

pub fn is_projective(alg: &Algebra, m: &Rep) -> bool {
    let c = projective_cover(alg, m);
    c.p.total_dim() == m.total_dim()
}

pub fn is_injective(alg: &Algebra, op: &Algebra, m: &Rep) -> bool {
    injective_envelope(alg, op, m).i.total_dim() == m.total_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{is_indecomposable, iso};

    fn a3_rel() -> (Algebra, Algebra) {
        let a = Algebra::from_json(include_str!("../fixtures/a3_rel.json")).unwrap();
        let op = a.opposite().unwrap();
        (a, op)
    }

    #[test]
    fn cover_of_s1_has_kernel_s2() {
        let (a, _) = a3_rel();
        let s1 = a.simple(0);
        let c = projective_cover(&a, &s1);
        assert_eq!(c.mult, vec![1, 0, 0]);
        let (k, _) = c.p.kernel_of(&c.epi);
        assert!(iso(&k, &a.simple(1)));
    }

    #[test]
    fn cover_of_s2_has_kernel_s3() {
        let (a, _) = a3_rel();
        let c = projective_cover(&a, &a.simple(1));
        let (k, _) = c.p.kernel_of(&c.epi);
        assert!(iso(&k, &a.simple(2)));
    }

    #[test]
    fn presentation_of_s1() {
        let (a, _) = a3_rel();
        let p = min_presentation(&a, &a.simple(0));
        assert_eq!(p.m0, vec![1, 0, 0]);
        assert_eq!(p.m1, vec![0, 1, 0]);
    }

    #[test]
    fn presentation_of_projective_is_trivial() {
        let (a, _) = a3_rel();
        let p = min_presentation(&a, &a.projective(1));
        assert_eq!(p.m1, vec![0, 0, 0]);
        assert_eq!(p.m0, vec![0, 1, 0]);
    }

    #[test]
    fn tau_of_s1_is_s2() {
        let (a, op) = a3_rel();
        assert!(iso(&tau(&a, &op, &a.simple(0)), &a.simple(1)));
        assert!(tau(&a, &op, &a.projective(0)).is_zero());
    }

    #[test]
    fn ext_between_simples() {
        let (a, _) = a3_rel();
        assert_eq!(ext1(&a, &a.simple(0), &a.simple(1)).unwrap().dim, 1);
        assert_eq!(ext1(&a, &a.simple(0), &a.simple(2)).unwrap().dim, 0);
        assert_eq!(ext1(&a, &a.projective(0), &a.simple(1)).unwrap().dim, 0);
    }

    #[test]
    fn hom_from_p1_to_s1_is_one_dimensional() {
        let (a, _) = a3_rel();
        assert_eq!(hom(&a.projective(0), &a.simple(0)).unwrap().dim(), 1);
    }

    #[test]
    fn injectives_are_indecomposable_and_stable_hom_vanishes() {
        let (a, op) = a3_rel();
        for v in 0..3 {
            let i = injective(&a, &op, v);
            assert!(is_indecomposable(&i));
            assert!(is_injective(&a, &op, &i));
            assert_eq!(stable_hom_mod_inj(&a, &op, &i, &a.regular()), 0);
        }
    }
}
