//! Bound quiver algebras `kQ/I` with an explicit path basis, and algebras
//! given by structure constants.
//!
//! Paths are written first-applied-first: `[a, b]` means "`a`, then `b`", so
//! the relation usually written `βα` on `1 -> 2 -> 3` is the path `[α, β]`.
//! Modules are left modules; the arrow `a: i -> j` acts by a matrix from the
//! vertex-`i` space to the vertex-`j` space.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{span, Fp, FpMatrix};
use crate::modrep::{ModMap, Rep};
use crate::quiver::{Arrow, Quiver};

const PATH_LENGTH_CAP: usize = 32;
const PATH_COUNT_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// `self` followed by `then`, if the endpoints match.
    pub fn then(&self, then: &Path) -> Option<Path> {
        if self.end != then.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Some(Path { start: self.start, end: then.end, arrows })
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", q.vertices()[self.start]);
        }
        self.arrows.iter().rev().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("")
    }
}

/// A uniform linear combination of paths of length at least two.
pub type Relation = Vec<(u32, Path)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// The JSON description of an algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
}

impl AlgebraSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `A = kQ/I` together with a basis of residue classes of paths and normal forms.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    field: Fp,
    quiver: Arc<Quiver>,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    normal: HashMap<Path, Vec<u32>>,
    cutoff: usize,
    // proj_basis[v][j]: indices of basis paths from v to j
    proj_basis: Vec<Vec<Vec<usize>>>,
}

impl Algebra {
    pub fn parse(spec: &AlgebraSpecFile) -> Result<Self> {
        let field = Fp::new(spec.field.p)?;
        let vertices = spec.quiver.vertices.clone();
        let vindex: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        if vindex.len() != vertices.len() {
            return Err(Error::Parse("duplicate vertex name".into()));
        }
        let mut arrows = Vec::with_capacity(spec.quiver.arrows.len());
        for a in &spec.quiver.arrows {
            let lookup = |v: &str| vindex.get(v).copied().ok_or_else(|| Error::UnknownName(v.to_string()));
            arrows.push(Arrow { name: a.name.clone(), source: lookup(&a.source)?, target: lookup(&a.target)? });
        }
        let quiver = Quiver::new(vertices, arrows)?;
        if (0..quiver.num_arrows()).any(|i| quiver.arrow_index(&quiver.arrow(i).name).ok() != Some(i)) {
            return Err(Error::Parse("duplicate arrow name".into()));
        }
        let mut relations = Vec::new();
        for rel in &spec.relations {
            let mut terms = Vec::new();
            for t in rel {
                if t.path.is_empty() {
                    return Err(Error::NotAdmissible("relation term with an empty path".into()));
                }
                let idx: Vec<usize> = t.path.iter().map(|n| quiver.arrow_index(n)).collect::<Result<_>>()?;
                terms.push((field.reduce(t.coeff), path_of(&quiver, &idx)?));
            }
            relations.push(terms);
        }
        let name = spec.name.clone().unwrap_or_else(|| "A".into());
        Algebra::new(name, field, Arc::new(quiver), relations)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Algebra::parse(&AlgebraSpecFile::from_json(text)?)
    }

    pub fn new(name: String, field: Fp, quiver: Arc<Quiver>, relations: Vec<Relation>) -> Result<Self> {
        let relations: Vec<Relation> = relations.into_iter().map(|r| normalize_relation(field, r)).filter(|r| !r.is_empty()).collect();
        for r in &relations {
            let (s, e) = (r[0].1.start, r[0].1.end);
            for (_, p) in r {
                if p.len() < 2 {
                    return Err(Error::NotAdmissible("relations must be combinations of paths of length at least two".into()));
                }
                if p.start != s || p.end != e {
                    return Err(Error::NotAdmissible("relation mixes paths with different endpoints".into()));
                }
            }
        }
        let mut prev: Option<(usize, Vec<Path>, NormalForms)> = None;
        for cutoff in 1..=PATH_LENGTH_CAP + 1 {
            let (basis, normal) = truncated_basis(field, &quiver, &relations, cutoff)?;
            if let Some((pc, pb, pn)) = prev.take() {
                if pb.len() == basis.len() {
                    let proj_basis = proj_basis(&quiver, &pb);
                    return Ok(Algebra { name, field, quiver, relations, basis: pb, normal: pn, cutoff: pc, proj_basis });
                }
            }
            prev = Some((cutoff, basis, normal));
        }
        Err(Error::NotAdmissible(format!("path basis does not stabilize below length {PATH_LENGTH_CAP}")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn path_basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Paths of length at least this are zero in `A`.
    pub fn nilpotency_cutoff(&self) -> usize {
        self.cutoff
    }

    /// Coordinates of the residue class of a path in the path basis.
    pub fn path_coords(&self, p: &Path) -> Vec<u32> {
        if p.len() >= self.cutoff {
            return vec![0; self.dim()];
        }
        self.normal.get(p).cloned().unwrap_or_else(|| vec![0; self.dim()])
    }

    /// `x * y` in `A`, where `y` is applied first.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let Some(p) = self.basis[j].then(&self.basis[i]) else { continue };
                let c = f.mul(a, b);
                for (o, &z) in out.iter_mut().zip(&self.path_coords(&p)) {
                    *o = f.add(*o, f.mul(c, z));
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<u32> {
        self.basis.iter().map(|p| u32::from(p.is_trivial())).collect()
    }

    /// Whether every relation acts as zero on `m`.
    pub fn satisfies_relations(&self, m: &Rep) -> bool {
        self.relations.iter().all(|r| {
            let (s, e) = (r[0].1.start, r[0].1.end);
            let mut acc = FpMatrix::zeros(self.field, m.dims()[e], m.dims()[s]);
            for (c, p) in r {
                acc = acc.add(&m.path_matrix(s, &p.arrows).scale(*c));
            }
            acc.is_zero()
        })
    }

    /// Checks that `m` is a module over this algebra.
    pub fn check_module(&self, m: &Rep) -> Result<()> {
        if !crate::modrep::same_quiver(m.quiver(), &self.quiver) || m.field() != self.field {
            return Err(Error::AlgebraMismatch);
        }
        if !self.satisfies_relations(m) {
            return Err(Error::Inconsistent("representation violates a relation".into()));
        }
        Ok(())
    }

    /// Indices of basis paths from `v` to `j`.
    pub fn paths_between(&self, v: usize, j: usize) -> &[usize] {
        &self.proj_basis[v][j]
    }

    /// The indecomposable projective `P_v = A e_v`: its vertex-`j` space has
    /// the basis paths from `v` to `j`, and arrows act by post-concatenation.
    pub fn projective(&self, v: usize) -> Rep {
        let pb = &self.proj_basis[v];
        let dims: Vec<usize> = pb.iter().map(|x| x.len()).collect();
        let mats = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let cols: Vec<Vec<u32>> = pb[a.source]
                    .iter()
                    .map(|&bi| {
                        let p = self.basis[bi].then(&Path { start: a.source, end: a.target, arrows: vec![ai] }).expect("composable");
                        let c = self.path_coords(&p);
                        pb[a.target].iter().map(|&k| c[k]).collect()
                    })
                    .collect();
                FpMatrix::from_columns(self.field, dims[a.target], &cols)
            })
            .collect();
        Rep::from_parts(self.quiver.clone(), self.field, dims, mats)
    }

    pub fn simple(&self, v: usize) -> Rep {
        Rep::simple(self.quiver.clone(), self.field, v)
    }

    /// `⊕_v P_v^{mult[v]}`, summands ordered by vertex then copy.
    pub fn projective_sum(&self, mult: &[usize]) -> Rep {
        let parts: Vec<Rep> = mult.iter().enumerate().flat_map(|(v, &m)| std::iter::repeat_n(self.projective(v), m)).collect();
        if parts.is_empty() {
            return Rep::zero(self.quiver.clone(), self.field);
        }
        Rep::sum(&parts).expect("same quiver")
    }

    /// The regular module `A = ⊕_v P_v`.
    pub fn regular(&self) -> Rep {
        self.projective_sum(&vec![1; self.num_vertices()])
    }

    /// Right multiplication by an element `x ∈ e_t A e_s` (a combination of
    /// basis paths from `s` to `t`), as the module map `P_t -> P_s`, `p ↦ p x`.
    pub fn right_mult(&self, s: usize, t: usize, x: &[u32]) -> ModMap {
        let f = self.field;
        let blocks = (0..self.num_vertices())
            .map(|j| {
                let src = &self.proj_basis[t][j];
                let tgt = &self.proj_basis[s][j];
                let mut m = FpMatrix::zeros(f, tgt.len(), src.len());
                for (c, &pi) in src.iter().enumerate() {
                    for &qi in &self.proj_basis[s][t] {
                        if x[qi] == 0 {
                            continue;
                        }
                        let prod = self.basis[qi].then(&self.basis[pi]).expect("composable");
                        let coords = self.path_coords(&prod);
                        for (r, &k) in tgt.iter().enumerate() {
                            let v = f.add(m.get(r, c), f.mul(x[qi], coords[k]));
                            m.set(r, c, v);
                        }
                    }
                }
                m
            })
            .collect();
        ModMap::new(f, blocks)
    }

    /// Module map `P(src) -> P(tgt)` between standard projective sums.
    /// `entries[i][j]` is a combination of basis paths from the vertex of the
    /// `i`-th target summand to the vertex of the `j`-th source summand.
    pub fn projective_map(&self, src: &[usize], tgt: &[usize], entries: &[Vec<Vec<u32>>]) -> ModMap {
        let sv = expand_mult(src);
        let tv = expand_mult(tgt);
        let ps = self.projective_sum(src);
        let pt = self.projective_sum(tgt);
        let (_, _, sproj) = sum_maps(self, &sv);
        let (_, tincl, _) = sum_maps(self, &tv);
        let mut out = ModMap::zero(&ps, &pt);
        for (i, &ti) in tv.iter().enumerate() {
            for (j, &sj) in sv.iter().enumerate() {
                let x = &entries[i][j];
                if x.iter().all(|&c| c == 0) {
                    continue;
                }
                let r = self.right_mult(ti, sj, x);
                out = out.add(&tincl[i].compose(&r).compose(&sproj[j]));
            }
        }
        out
    }

    /// The element of `e_t A e_s` corresponding to a map `P_t -> P_s`
    /// (the image of `e_t`).
    pub fn element_of_map(&self, s: usize, t: usize, f: &ModMap) -> Vec<u32> {
        let col = self.proj_basis[t][t].iter().position(|&bi| self.basis[bi].is_trivial()).expect("e_t in P_t");
        let v = f.block(t).column(col);
        let mut x = vec![0u32; self.dim()];
        for (r, &k) in self.proj_basis[s][t].iter().enumerate() {
            x[k] = v[r];
        }
        x
    }

    /// Linear action of the basis element `b` on the total space of `m`
    /// (vertex spaces stacked in order).
    pub fn action_matrix(&self, m: &Rep, b: usize) -> FpMatrix {
        let p = &self.basis[b];
        let offs = offsets(m.dims());
        let total = m.total_dim();
        let mut out = FpMatrix::zeros(self.field, total, total);
        out.write_block(offs[p.end], offs[p.start], &m.path_matrix(p.start, &p.arrows));
        out
    }

    /// `A^op`: arrows and relation paths reversed.
    pub fn opposite(&self) -> Result<Algebra> {
        let q = Arc::new(self.quiver.opposite());
        let rels = self
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(c, p)| {
                        let arrows: Vec<usize> = p.arrows.iter().rev().copied().collect();
                        (*c, Path { start: p.end, end: p.start, arrows })
                    })
                    .collect()
            })
            .collect();
        Algebra::new(format!("{}^op", self.name), self.field, q, rels)
    }

    /// Structure-constant form of `A` with the same basis.
    pub fn sc_algebra(&self) -> ScAlgebra {
        let d = self.dim();
        let e = span::standard_basis(d);
        ScAlgebra::from_products(self.field, d, self.unit(), |i, j| self.mul(&e[i], &e[j])).expect("path algebras are associative")
    }
}

pub(crate) fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut o = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for &d in dims {
        o.push(acc);
        acc += d;
    }
    o
}

pub(crate) fn expand_mult(mult: &[usize]) -> Vec<usize> {
    mult.iter().enumerate().flat_map(|(v, &m)| std::iter::repeat_n(v, m)).collect()
}

fn sum_maps(alg: &Algebra, verts: &[usize]) -> (Rep, Vec<ModMap>, Vec<ModMap>) {
    if verts.is_empty() {
        return (Rep::zero(alg.quiver.clone(), alg.field), Vec::new(), Vec::new());
    }
    let parts: Vec<Rep> = verts.iter().map(|&v| alg.projective(v)).collect();
    Rep::direct_sum(&parts).expect("same quiver")
}

fn path_of(q: &Quiver, arrows: &[usize]) -> Result<Path> {
    for w in arrows.windows(2) {
        if q.arrow(w[0]).target != q.arrow(w[1]).source {
            return Err(Error::Parse(format!("arrows {} and {} do not compose", q.arrow(w[0]).name, q.arrow(w[1]).name)));
        }
    }
    Ok(Path { start: q.arrow(arrows[0]).source, end: q.arrow(arrows[arrows.len() - 1]).target, arrows: arrows.to_vec() })
}

fn normalize_relation(field: Fp, r: Relation) -> Relation {
    let mut acc: BTreeMap<Path, u32> = BTreeMap::new();
    for (c, p) in r {
        let e = acc.entry(p).or_insert(0);
        *e = field.add(*e, c % field.p());
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|(p, c)| (c, p)).collect()
}

fn all_paths(q: &Quiver, max_len_exclusive: usize) -> Result<Vec<Path>> {
    let mut out: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 1..max_len_exclusive {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == p.end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { start: p.start, end: a.target, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > PATH_COUNT_CAP {
            return Err(Error::NotAdmissible("too many paths before the basis stabilized".into()));
        }
        frontier = next;
    }
    Ok(out)
}

/// Coordinates of each path in the path basis.
type NormalForms = HashMap<Path, Vec<u32>>;

/// Basis and normal forms of `kQ / (I + J^cutoff)`. Pivots prefer long paths,
/// so the basis consists of the shortest representatives.
fn truncated_basis(field: Fp, q: &Quiver, rels: &[Relation], cutoff: usize) -> Result<(Vec<Path>, NormalForms)> {
    let mut paths = all_paths(q, cutoff)?;
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for r in rels {
        let (s, e) = (r[0].1.start, r[0].1.end);
        let min_len = r.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        if min_len >= cutoff {
            continue;
        }
        let before: Vec<&Path> = paths.iter().filter(|p| p.end == s && p.len() + min_len < cutoff).collect();
        let after: Vec<&Path> = paths.iter().filter(|p| p.start == e && p.len() + min_len < cutoff).collect();
        for b in &before {
            for a in &after {
                if b.len() + a.len() + min_len >= cutoff {
                    continue;
                }
                let mut v = vec![0u32; paths.len()];
                for (c, p) in r {
                    let full = b.then(p).and_then(|x| x.then(a)).expect("composable");
                    if full.len() < cutoff {
                        let i = index[&full];
                        v[i] = field.add(v[i], *c);
                    }
                }
                gens.push(v);
            }
        }
    }
    let n = paths.len();
    let rref = if gens.is_empty() { None } else { Some(FpMatrix::from_rows(field, &gens, n).reduce()) };
    let mut is_pivot = vec![None; n];
    if let Some(rep) = &rref {
        for (row, &c) in rep.pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
    }
    let mut basis: Vec<Path> = (0..n).filter(|&i| is_pivot[i].is_none()).map(|i| paths[i].clone()).collect();
    basis.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let bindex: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut normal = HashMap::with_capacity(n);
    for (i, p) in paths.iter().enumerate() {
        let mut v = vec![0u32; basis.len()];
        match is_pivot[i] {
            None => v[bindex[p]] = 1,
            Some(row) => {
                let rep = rref.as_ref().expect("pivot implies relations");
                for (c, &x) in rep.rref.row(row).iter().enumerate() {
                    if x != 0 && c != i {
                        debug_assert!(is_pivot[c].is_none());
                        v[bindex[&paths[c]]] = field.neg(x);
                    }
                }
            }
        }
        normal.insert(p.clone(), v);
    }
    Ok((basis, normal))
}

fn proj_basis(q: &Quiver, basis: &[Path]) -> Vec<Vec<Vec<usize>>> {
    let n = q.num_vertices();
    let mut pb = vec![vec![Vec::new(); n]; n];
    for (i, p) in basis.iter().enumerate() {
        pb[p.start][p.end].push(i);
    }
    pb
}

/// An associative unital algebra given by structure constants:
/// `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScAlgebra {
    field: Fp,
    dim: usize,
    structure: Vec<u32>,
    unit: Vec<u32>,
}

impl ScAlgebra {
    /// Checks associativity on all basis triples and unitality on all basis elements.
    pub fn new(field: Fp, dim: usize, structure: Vec<u32>, unit: Vec<u32>) -> Result<Self> {
        if structure.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::Shape("structure constants do not match the dimension".into()));
        }
        let a = ScAlgebra { field, dim, structure, unit };
        let e = span::standard_basis(dim);
        for i in 0..dim {
            if a.mul(&a.unit, &e[i]) != e[i] || a.mul(&e[i], &a.unit) != e[i] {
                return Err(Error::Inconsistent(format!("unit fails on basis element {i}")));
            }
            for j in 0..dim {
                let ij = a.basis_product(i, j).to_vec();
                for k in 0..dim {
                    let jk = a.basis_product(j, k).to_vec();
                    if a.mul(&ij, &e[k]) != a.mul(&e[i], &jk) {
                        return Err(Error::Inconsistent(format!("associativity fails on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn from_products<F>(field: Fp, dim: usize, unit: Vec<u32>, product: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Vec<u32>,
    {
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::Shape("product has the wrong length".into()));
                }
                structure.extend(v);
            }
        }
        ScAlgebra::new(field, dim, structure, unit)
    }

    /// Algebra spanned by linear operators closed under composition;
    /// `b_i b_j` is the operator `maps[i] ∘ maps[j]`.
    pub fn from_endomorphisms(field: Fp, maps: &[FpMatrix]) -> Result<Self> {
        let dim = maps.len();
        let Some(first) = maps.first() else {
            return Err(Error::Inconsistent("empty basis".into()));
        };
        let len = first.rows() * first.cols();
        let flats: Vec<Vec<u32>> = maps.iter().map(|m| m.entries().to_vec()).collect();
        let ech = FpMatrix::from_columns(field, len, &flats).reduce();
        if ech.rank != dim {
            return Err(Error::Inconsistent("endomorphisms are linearly dependent".into()));
        }
        let coords = |m: &FpMatrix| ech.solve(m.entries()).ok_or_else(|| Error::Inconsistent("basis is not closed under composition".into()));
        let unit = coords(&FpMatrix::identity(field, first.rows()))?;
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for a in maps {
            for b in maps {
                structure.extend(coords(&a.mul(b))?);
            }
        }
        ScAlgebra::new(field, dim, structure, unit)
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn structure(&self) -> &[u32] {
        &self.structure
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let o = (i * self.dim + j) * self.dim;
        &self.structure[o..o + self.dim]
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = f.mul(a, b);
                for (o, &z) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = f.add(*o, f.mul(c, z));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` in the basis.
    pub fn left_mult_matrix(&self, x: &[u32]) -> FpMatrix {
        let cols: Vec<Vec<u32>> = span::standard_basis(self.dim).iter().map(|e| self.mul(x, e)).collect();
        FpMatrix::from_columns(self.field, self.dim, &cols)
    }

    /// Whether `phi` (a matrix in the bases) is a unital algebra homomorphism `self -> other`.
    pub fn is_homomorphism(&self, other: &ScAlgebra, phi: &FpMatrix) -> bool {
        if phi.mul_vec(&self.unit) != other.unit {
            return false;
        }
        let e = span::standard_basis(self.dim);
        (0..self.dim).all(|i| (0..self.dim).all(|j| phi.mul_vec(&self.mul(&e[i], &e[j])) == other.mul(&phi.mul_vec(&e[i]), &phi.mul_vec(&e[j]))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(json: &str) -> Algebra {
        Algebra::from_json(json).unwrap()
    }

    const A3_REL: &str = r#"{"field":{"p":2},"quiver":{"vertices":["1","2","3"],
        "arrows":[{"name":"alpha","source":"1","target":"2"},{"name":"beta","source":"2","target":"3"}]},
        "relations":[[{"coeff":1,"path":["alpha","beta"]}]]}"#;

    #[test]
    fn a3_with_relation_has_dimension_five() {
        let a = spec(A3_REL);
        assert_eq!(a.dim(), 5);
        let labels: Vec<String> = a.path_basis().iter().map(|p| p.label(a.quiver())).collect();
        assert_eq!(labels, vec!["e1", "e2", "e3", "alpha", "beta"]);
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = spec(A3_REL);
        assert_eq!(a.projective(0).dims(), &[1, 1, 0]);
        assert_eq!(a.projective(2).dims(), &[0, 0, 1]);
        let total: usize = (0..3).map(|v| a.projective(v).total_dim()).sum();
        assert_eq!(total, a.dim());
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = spec(
            r#"{"field":{"p":2},"quiver":{"vertices":["1"],"arrows":[{"name":"x","source":"1","target":"1"}]},
            "relations":[[{"coeff":1,"path":["x","x"]}]]}"#,
        );
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn loop_without_relations_is_rejected() {
        let r = Algebra::from_json(r#"{"field":{"p":2},"quiver":{"vertices":["1"],"arrows":[{"name":"x","source":"1","target":"1"}]},"relations":[]}"#);
        assert!(matches!(r, Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn unknown_arrow_is_a_parse_error() {
        let r = Algebra::from_json(r#"{"field":{"p":2},"quiver":{"vertices":["1"],"arrows":[]},"relations":[[{"coeff":1,"path":["y","y"]}]]}"#);
        assert!(matches!(r, Err(Error::UnknownName(_))));
    }

    #[test]
    fn commutativity_relation_keeps_one_long_path() {
        // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ba = dc
        let a = spec(
            r#"{"field":{"p":3},"quiver":{"vertices":["1","2","3","4"],"arrows":[
            {"name":"a","source":"1","target":"2"},{"name":"b","source":"2","target":"4"},
            {"name":"c","source":"1","target":"3"},{"name":"d","source":"3","target":"4"}]},
            "relations":[[{"coeff":1,"path":["a","b"]},{"coeff":-1,"path":["c","d"]}]]}"#,
        );
        assert_eq!(a.dim(), 4 + 4 + 1);
        assert_eq!(a.projective(0).dims(), &[1, 1, 1, 1]);
    }

    #[test]
    fn opposite_is_an_involution_on_dimensions() {
        let a = spec(A3_REL);
        let op = a.opposite().unwrap();
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.opposite().unwrap().sc_algebra(), a.sc_algebra());
    }

    #[test]
    fn two_by_two_matrices_from_unit_maps() {
        let f = Fp::new(2).unwrap();
        let mut units = Vec::new();
        for r in 0..2 {
            for c in 0..2 {
                let mut m = FpMatrix::zeros(f, 2, 2);
                m.set(r, c, 1);
                units.push(m);
            }
        }
        let b = ScAlgebra::from_endomorphisms(f, &units).unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(b.unit(), &[1, 0, 0, 1]);
        // E_01 E_10 = E_00
        assert_eq!(b.basis_product(1, 2), &[1, 0, 0, 0]);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        let f = Fp::new(2).unwrap();
        // dim 2, unit e0, b1*b1 = b0 + b1 ... but make b1*b1 = b0 and break unit
        let mut s = vec![0u32; 8];
        s[0] = 1; // e0 e0 = e0
        s[3] = 1; // e0 b1 = b1
        s[4] = 0; // b1 e0 = 0: breaks unitality
        s[6] = 1;
        assert!(ScAlgebra::new(f, 2, s, vec![1, 0]).is_err());
    }
}
