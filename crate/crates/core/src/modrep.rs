//! Representations of quivers over `F_p`, module maps, Krull-Schmidt
//! decomposition, isomorphism tests and the brute-force enumerator of
//! indecomposables.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{span, Fp, FpMatrix};
use crate::par;
use crate::quiver::Quiver;

/// A representation: one space per vertex (by dimension) and one matrix per
/// arrow `a: s -> t` of shape `dims[t] x dims[s]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    quiver: Arc<Quiver>,
    field: Fp,
    dims: Vec<usize>,
    mats: Vec<FpMatrix>,
}

/// A family of linear maps, one per vertex; `blocks[v]` is `dims_target[v] x dims_source[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMap {
    field: Fp,
    blocks: Vec<FpMatrix>,
}

/// A direct summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Rep,
    pub incl: ModMap,
    pub proj: ModMap,
}

pub(crate) fn same_quiver(a: &Arc<Quiver>, b: &Arc<Quiver>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, field: Fp, dims: Vec<usize>, mats: Vec<FpMatrix>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() || mats.len() != quiver.num_arrows() {
            return Err(Error::Shape("dimension vector or arrow count does not match the quiver".into()));
        }
        for (a, m) in quiver.arrows().iter().zip(&mats) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Shape(format!("arrow {} needs a {}x{} matrix, got {}x{}", a.name, dims[a.target], dims[a.source], m.rows(), m.cols())));
            }
            if m.field() != field {
                return Err(Error::ModulusMismatch(field.p(), m.field().p()));
            }
        }
        Ok(Rep { quiver, field, dims, mats })
    }

    pub(crate) fn from_parts(quiver: Arc<Quiver>, field: Fp, dims: Vec<usize>, mats: Vec<FpMatrix>) -> Self {
        debug_assert!(Rep::new(quiver.clone(), field, dims.clone(), mats.clone()).is_ok());
        Rep { quiver, field, dims, mats }
    }

    pub fn zero(quiver: Arc<Quiver>, field: Fp) -> Self {
        let dims = vec![0; quiver.num_vertices()];
        let mats = vec![FpMatrix::zeros(field, 0, 0); quiver.num_arrows()];
        Rep { quiver, field, dims, mats }
    }

    pub fn simple(quiver: Arc<Quiver>, field: Fp, v: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        let mats = quiver.arrows().iter().map(|a| FpMatrix::zeros(field, dims[a.target], dims[a.source])).collect();
        Rep { quiver, field, dims, mats }
    }

    #[inline]
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[inline]
    pub fn mats(&self) -> &[FpMatrix] {
        &self.mats
    }

    #[inline]
    pub fn mat(&self, arrow: usize) -> &FpMatrix {
        &self.mats[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn check_same_quiver(&self, other: &Rep) -> Result<()> {
        if !same_quiver(&self.quiver, &other.quiver) || self.field != other.field {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Matrix of a path given as arrows in the order they are applied.
    pub fn path_matrix(&self, start: usize, path: &[usize]) -> FpMatrix {
        let mut m = FpMatrix::identity(self.field, self.dims[start]);
        for &a in path {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Sort key: total dimension, dimension vector, then matrix entries.
    pub fn sort_key(&self) -> (usize, Vec<usize>, Vec<u32>) {
        let entries = self.mats.iter().flat_map(|m| m.entries().iter().copied()).collect();
        (self.total_dim(), self.dims.clone(), entries)
    }

    /// Transport of structure along invertible per-vertex matrices `g`:
    /// the new arrow matrices are `g_t M_a g_s^{-1}`.
    pub fn conjugate(&self, g: &[FpMatrix]) -> Result<Rep> {
        let inv: Vec<FpMatrix> =
            g.iter().map(|m| m.inverse().ok_or_else(|| Error::Inconsistent("change of basis is not invertible".into()))).collect::<Result<_>>()?;
        let mats = self.quiver.arrows().iter().zip(&self.mats).map(|(a, m)| g[a.target].mul(m).mul(&inv[a.source])).collect();
        Ok(Rep { quiver: self.quiver.clone(), field: self.field, dims: self.dims.clone(), mats })
    }

    /// Vector space dual as a representation of the opposite quiver.
    pub fn dual(&self, opposite: &Arc<Quiver>) -> Rep {
        let mats = self.mats.iter().map(|m| m.transpose()).collect();
        Rep { quiver: opposite.clone(), field: self.field, dims: self.dims.clone(), mats }
    }

    /// Direct sum with the canonical inclusions and projections.
    pub fn direct_sum(parts: &[Rep]) -> Result<(Rep, Vec<ModMap>, Vec<ModMap>)> {
        let first = parts.first().ok_or_else(|| Error::Inconsistent("empty direct sum".into()))?;
        for p in parts {
            first.check_same_quiver(p)?;
        }
        let quiver = first.quiver.clone();
        let field = first.field;
        let n = quiver.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let mut mats: Vec<FpMatrix> = quiver.arrows().iter().map(|a| FpMatrix::zeros(field, dims[a.target], dims[a.source])).collect();
        let mut offsets = vec![0usize; n];
        let mut incls = Vec::new();
        let mut projs = Vec::new();
        for p in parts {
            for (ai, a) in quiver.arrows().iter().enumerate() {
                mats[ai].write_block(offsets[a.target], offsets[a.source], &p.mats[ai]);
            }
            let mut ib = Vec::with_capacity(n);
            let mut pb = Vec::with_capacity(n);
            for v in 0..n {
                let mut i = FpMatrix::zeros(field, dims[v], p.dims[v]);
                i.write_block(offsets[v], 0, &FpMatrix::identity(field, p.dims[v]));
                pb.push(i.transpose());
                ib.push(i);
            }
            incls.push(ModMap { field, blocks: ib });
            projs.push(ModMap { field, blocks: pb });
            for (o, d) in offsets.iter_mut().zip(&p.dims) {
                *o += d;
            }
        }
        Ok((Rep { quiver, field, dims, mats }, incls, projs))
    }

    pub fn sum(parts: &[Rep]) -> Result<Rep> {
        Ok(Rep::direct_sum(parts)?.0)
    }

    /// Power `self^k`; `k = 0` gives the zero representation.
    pub fn power(&self, k: usize) -> Rep {
        if k == 0 {
            return Rep::zero(self.quiver.clone(), self.field);
        }
        Rep::sum(&vec![self.clone(); k]).expect("same quiver")
    }

    /// The subrepresentation spanned per vertex by the columns of `basis[v]`
    /// (columns must be independent), with its inclusion.
    pub fn submodule(&self, basis: &[FpMatrix]) -> Result<(Rep, ModMap)> {
        let ech: Vec<_> = basis.iter().map(|b| b.reduce()).collect();
        let mut mats = Vec::with_capacity(self.mats.len());
        for (a, m) in self.quiver.arrows().iter().zip(&self.mats) {
            let image = m.mul(&basis[a.source]);
            let mut cols = Vec::with_capacity(image.cols());
            for c in 0..image.cols() {
                let x = ech[a.target].solve(&image.column(c)).ok_or_else(|| Error::Inconsistent(format!("subspace is not stable under arrow {}", a.name)))?;
                cols.push(x);
            }
            mats.push(FpMatrix::from_columns(self.field, basis[a.target].cols(), &cols));
        }
        let dims = basis.iter().map(|b| b.cols()).collect();
        let sub = Rep { quiver: self.quiver.clone(), field: self.field, dims, mats };
        Ok((sub, ModMap { field: self.field, blocks: basis.to_vec() }))
    }

    /// Quotient by the subrepresentation spanned by `basis`, with the
    /// projection and a per-vertex linear section of it.
    pub fn quotient(&self, basis: &[FpMatrix]) -> Result<(Rep, ModMap, Vec<FpMatrix>)> {
        let f = self.field;
        let mut projs = Vec::new();
        let mut sections = Vec::new();
        for (v, b) in basis.iter().enumerate() {
            let d = self.dims[v];
            let base = b.columns();
            let comp = span::complement(f, d, &base, &span::standard_basis(d));
            let mut all = base.clone();
            all.extend(comp.iter().cloned());
            let s = FpMatrix::from_columns(f, d, &all);
            let inv = s.inverse().ok_or_else(|| Error::Inconsistent("submodule basis is not independent".into()))?;
            let k = base.len();
            projs.push(inv.submatrix(k, d - k, 0, d));
            sections.push(FpMatrix::from_columns(f, d, &comp));
        }
        let mut mats = Vec::with_capacity(self.mats.len());
        for (a, m) in self.quiver.arrows().iter().zip(&self.mats) {
            let image = m.mul(&basis[a.source]);
            if !projs[a.target].mul(&image).is_zero() {
                return Err(Error::Inconsistent(format!("subspace is not stable under arrow {}", a.name)));
            }
            mats.push(projs[a.target].mul(m).mul(&sections[a.source]));
        }
        let dims = sections.iter().map(|s| s.cols()).collect();
        let q = Rep { quiver: self.quiver.clone(), field: f, dims, mats };
        Ok((q, ModMap { field: f, blocks: projs }, sections))
    }

    /// Kernel of `f: self -> _` as a subrepresentation of `self`.
    pub fn kernel_of(&self, f: &ModMap) -> (Rep, ModMap) {
        let basis: Vec<FpMatrix> = f.blocks.iter().enumerate().map(|(v, b)| FpMatrix::from_columns(self.field, self.dims[v], &b.kernel())).collect();
        self.submodule(&basis).expect("kernel of a module map is a submodule")
    }

    /// Image of `f: _ -> self` as a subrepresentation of `self`.
    pub fn image_of(&self, f: &ModMap) -> (Rep, ModMap) {
        let basis = f.image_basis(&self.dims);
        self.submodule(&basis).expect("image of a module map is a submodule")
    }

    /// Cokernel of `f: _ -> self`.
    pub fn cokernel_of(&self, f: &ModMap) -> (Rep, ModMap) {
        let basis = f.image_basis(&self.dims);
        let (q, p, _) = self.quotient(&basis).expect("image of a module map is a submodule");
        (q, p)
    }

    /// Sum of the images of the given maps into `self`, as a per-vertex basis.
    pub fn span_of_images(&self, maps: &[ModMap]) -> Vec<FpMatrix> {
        (0..self.dims.len())
            .map(|v| {
                let cols: Vec<Vec<u32>> = maps.iter().flat_map(|m| m.blocks[v].columns()).collect();
                FpMatrix::from_columns(self.field, self.dims[v], &span::basis(self.field, self.dims[v], &cols))
            })
            .collect()
    }
}

impl ModMap {
    pub fn new(field: Fp, blocks: Vec<FpMatrix>) -> Self {
        ModMap { field, blocks }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Self {
        let blocks = (0..source.dims.len()).map(|v| FpMatrix::zeros(source.field, target.dims[v], source.dims[v])).collect();
        ModMap { field: source.field, blocks }
    }

    pub fn identity(m: &Rep) -> Self {
        ModMap { field: m.field, blocks: m.dims.iter().map(|&d| FpMatrix::identity(m.field, d)).collect() }
    }

    #[inline]
    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    #[inline]
    pub fn block(&self, v: usize) -> &FpMatrix {
        &self.blocks[v]
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn source_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.cols()).collect()
    }

    pub fn target_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rows()).collect()
    }

    /// `self ∘ before`
    pub fn compose(&self, before: &ModMap) -> ModMap {
        ModMap { field: self.field, blocks: self.blocks.iter().zip(&before.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &ModMap) -> ModMap {
        ModMap { field: self.field, blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &ModMap) -> ModMap {
        ModMap { field: self.field, blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> ModMap {
        ModMap { field: self.field, blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> ModMap {
        ModMap { field: self.field, blocks: self.blocks.iter().map(|a| a.neg()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn inverse(&self) -> Option<ModMap> {
        let blocks = self.blocks.iter().map(|b| b.inverse()).collect::<Option<Vec<_>>>()?;
        Some(ModMap { field: self.field, blocks })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.blocks.iter().all(|b| b.is_nilpotent())
    }

    pub fn pow(&self, e: usize) -> ModMap {
        ModMap { field: self.field, blocks: self.blocks.iter().map(|b| b.pow(e)).collect() }
    }

    pub fn is_intertwiner(&self, source: &Rep, target: &Rep) -> bool {
        source.quiver.arrows().iter().enumerate().all(|(ai, a)| target.mats[ai].mul(&self.blocks[a.source]) == self.blocks[a.target].mul(&source.mats[ai]))
    }

    /// Per-vertex basis of the image.
    pub fn image_basis(&self, target_dims: &[usize]) -> Vec<FpMatrix> {
        self.blocks.iter().enumerate().map(|(v, b)| FpMatrix::from_columns(self.field, target_dims[v], &b.reduce().image)).collect()
    }

    /// All entries, block after block, row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
    }

    pub fn from_flat(field: Fp, source_dims: &[usize], target_dims: &[usize], flat: &[u32]) -> ModMap {
        let mut off = 0;
        let blocks = source_dims
            .iter()
            .zip(target_dims)
            .map(|(&s, &t)| {
                let data: Vec<i64> = flat[off..off + s * t].iter().map(|&x| x as i64).collect();
                off += s * t;
                FpMatrix::from_entries(field, t, s, data).expect("block size")
            })
            .collect();
        ModMap { field, blocks }
    }

    pub fn lin_comb(field: Fp, coeffs: &[u32], maps: &[ModMap], source_dims: &[usize], target_dims: &[usize]) -> ModMap {
        let len: usize = source_dims.iter().zip(target_dims).map(|(s, t)| s * t).sum();
        let flats: Vec<Vec<u32>> = maps.iter().map(|m| m.flatten()).collect();
        let v = span::lin_comb(field, len, coeffs, &flats);
        ModMap::from_flat(field, source_dims, target_dims, &v)
    }
}

/// Basis of `Hom(M, N)`: solutions of `N_a f_s = f_t M_a` for every arrow.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<ModMap> {
    let f = m.field;
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let rows: usize = m.quiver.arrows().iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
    let mut eq = FpMatrix::zeros(f, rows, unknowns);
    let mut r0 = 0;
    for (ai, a) in m.quiver.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (&m.mats[ai], &n.mats[ai]);
        // (N_a f_s)_{ij} - (f_t M_a)_{ij}
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let row = r0 + i * m.dims[s] + j;
                for k in 0..n.dims[s] {
                    let c = na.get(i, k);
                    if c != 0 {
                        let col = offsets[s] + k * m.dims[s] + j;
                        eq.set(row, col, f.add(eq.get(row, col), c));
                    }
                }
                for k in 0..m.dims[t] {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let col = offsets[t] + i * m.dims[t] + k;
                        eq.set(row, col, f.sub(eq.get(row, col), c));
                    }
                }
            }
        }
        r0 += n.dims[t] * m.dims[s];
    }
    eq.kernel().into_iter().map(|x| ModMap::from_flat(f, &m.dims, &n.dims, &x)).collect()
}

pub fn hom_dim(m: &Rep, n: &Rep) -> usize {
    hom_basis(m, n).len()
}

/// An endomorphism that is neither nilpotent nor invertible, if one exists.
///
/// Exhaustive over `End(M)` when it has at most `2^16` elements; otherwise
/// basis elements, pairwise sums and seeded random combinations are tried.
pub fn find_splitting_endo(m: &Rep, end: &[ModMap]) -> Option<ModMap> {
    let f = m.field;
    let d = end.len();
    let useful = |phi: &ModMap| !phi.is_nilpotent() && !phi.is_iso();
    let src = m.dims.clone();
    let comb = |coeffs: &[u32]| ModMap::lin_comb(f, coeffs, end, &src, &src);
    for e in end {
        if useful(e) {
            return Some(e.clone());
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            let s = end[i].add(&end[j]);
            if useful(&s) {
                return Some(s);
            }
        }
    }
    let size = (f.p() as f64).powi(d as i32);
    if size <= 65536.0 {
        let total = (f.p() as usize).pow(d as u32);
        let mut coeffs = vec![0u32; d];
        for idx in 0..total {
            let mut x = idx;
            for c in coeffs.iter_mut().rev() {
                *c = (x % f.p() as usize) as u32;
                x /= f.p() as usize;
            }
            let phi = comb(&coeffs);
            if useful(&phi) {
                return Some(phi);
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ d as u64);
    for _ in 0..256 {
        let coeffs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..f.p())).collect();
        let phi = comb(&coeffs);
        if useful(&phi) {
            return Some(phi);
        }
    }
    None
}

pub fn is_indecomposable(m: &Rep) -> bool {
    if m.is_zero() {
        return false;
    }
    let end = hom_basis(m, m);
    end.len() == 1 || find_splitting_endo(m, &end).is_none()
}

/// Fitting decomposition `M = ker phi^N ⊕ im phi^N`.
fn fitting_split(m: &Rep, phi: &ModMap) -> (Summand, Summand) {
    let big = phi.pow(m.dims.iter().copied().max().unwrap_or(0).max(1));
    let f = m.field;
    let ker: Vec<FpMatrix> = big.blocks.iter().enumerate().map(|(v, b)| FpMatrix::from_columns(f, m.dims[v], &b.kernel())).collect();
    let img = big.image_basis(&m.dims);
    let (k, ki) = m.submodule(&ker).expect("Fitting kernel is a submodule");
    let (i, ii) = m.submodule(&img).expect("Fitting image is a submodule");
    let mut kp = Vec::new();
    let mut ip = Vec::new();
    for v in 0..m.dims.len() {
        let s = ki.blocks[v].hstack(&ii.blocks[v]);
        let inv = s.inverse().expect("Fitting decomposition is direct");
        let kd = k.dims[v];
        kp.push(inv.submatrix(0, kd, 0, m.dims[v]));
        ip.push(inv.submatrix(kd, i.dims[v], 0, m.dims[v]));
    }
    (Summand { rep: k, incl: ki, proj: ModMap { field: f, blocks: kp } }, Summand { rep: i, incl: ii, proj: ModMap { field: f, blocks: ip } })
}

/// Krull-Schmidt decomposition with split inclusions and projections, sorted
/// by [`Rep::sort_key`] of the summands.
pub fn decompose_with_maps(m: &Rep) -> Vec<Summand> {
    let mut out = Vec::new();
    let mut stack = vec![Summand { rep: m.clone(), incl: ModMap::identity(m), proj: ModMap::identity(m) }];
    while let Some(s) = stack.pop() {
        if s.rep.is_zero() {
            continue;
        }
        let end = hom_basis(&s.rep, &s.rep);
        let split = if end.len() == 1 { None } else { find_splitting_endo(&s.rep, &end) };
        match split {
            None => out.push(s),
            Some(phi) => {
                let (a, b) = fitting_split(&s.rep, &phi);
                for part in [a, b] {
                    stack.push(Summand { incl: s.incl.compose(&part.incl), proj: part.proj.compose(&s.proj), rep: part.rep });
                }
            }
        }
    }
    out.sort_by_key(|s| s.rep.sort_key());
    out
}

pub fn decompose(m: &Rep) -> Vec<Rep> {
    decompose_with_maps(m).into_iter().map(|s| s.rep).collect()
}

/// Isomorphism of indecomposables with equal dimension vectors: some pair of
/// basis maps `f: M -> N`, `g: N -> M` has `g f` invertible, and then `f` is an iso.
pub fn indecomposable_iso(m: &Rep, n: &Rep) -> Option<ModMap> {
    if m.dims != n.dims {
        return None;
    }
    let fs = hom_basis(m, n);
    if fs.is_empty() {
        return None;
    }
    if let Some(f) = fs.iter().find(|f| f.is_iso()) {
        return Some(f.clone());
    }
    let gs = hom_basis(n, m);
    for f in &fs {
        for g in &gs {
            if g.compose(f).is_iso() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// Isomorphism test with an explicit invertible intertwiner as witness.
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<Option<ModMap>> {
    m.check_same_quiver(n)?;
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModMap::zero(m, n)));
    }
    let dm = decompose_with_maps(m);
    let dn = decompose_with_maps(n);
    if dm.len() != dn.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.len()];
    let mut witness = ModMap::zero(m, n);
    for a in &dm {
        let mut found = false;
        for (j, b) in dn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(f) = indecomposable_iso(&a.rep, &b.rep) {
                used[j] = true;
                witness = witness.add(&b.incl.compose(&f).compose(&a.proj));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    debug_assert!(witness.is_iso() && witness.is_intertwiner(m, n));
    Ok(Some(witness))
}

pub fn iso(m: &Rep, n: &Rep) -> bool {
    matches!(is_isomorphic(m, n), Ok(Some(_)))
}

/// Index of the entry of `list` isomorphic to the indecomposable `m`.
pub fn position_iso(list: &[Rep], m: &Rep) -> Option<usize> {
    list.iter().position(|x| x.dims == m.dims && indecomposable_iso(x, m).is_some())
}

/// Multiplicity vector of `m` over the list of indecomposables `list`.
pub fn multiplicities(list: &[Rep], m: &Rep) -> Option<Vec<usize>> {
    let mut mult = vec![0; list.len()];
    for s in decompose(m) {
        mult[position_iso(list, &s)?] += 1;
    }
    Some(mult)
}

/// Limits for [`enumerate_reps`].
#[derive(Clone, Copy, Debug)]
pub struct EnumConfig {
    /// Maximal total dimension.
    pub bound: usize,
    /// Maximal number of matrix tuples examined.
    pub guard: u128,
    /// Stop after the first total dimension without new indecomposables.
    pub stop_at_gap: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { bound: 6, guard: 10_000_000, stop_at_gap: true }
    }
}

fn dim_vectors(n: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, total, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn candidate_count(quiver: &Quiver, p: u32, dims: &[usize]) -> u128 {
    let entries: u32 = quiver.arrows().iter().map(|a| (dims[a.source] * dims[a.target]) as u32).sum();
    (p as u128).checked_pow(entries).unwrap_or(u128::MAX)
}

/// Iso-invariants used to skip pointless isomorphism tests.
fn quick_invariant(m: &Rep, end_dim: usize) -> Vec<usize> {
    let mut key: Vec<usize> = m.mats.iter().map(|x| x.rank()).collect();
    key.push(end_dim);
    key
}

/// All indecomposable representations of `quiver` of total dimension at most
/// `cfg.bound` that satisfy `valid`, up to isomorphism, ordered by
/// [`Rep::sort_key`]. Each class is represented by its lexicographically
/// smallest matrix tuple.
pub fn enumerate_reps<F>(quiver: &Arc<Quiver>, field: Fp, cfg: EnumConfig, valid: F) -> Result<Vec<Rep>>
where
    F: Fn(&Rep) -> bool + Sync + Send,
{
    let p = field.p();
    let mut found: Vec<Rep> = Vec::new();
    let mut examined: u128 = 0;
    for total in 1..=cfg.bound {
        let dvs: Vec<Vec<usize>> =
            dim_vectors(quiver.num_vertices(), total).into_iter().filter(|d| quiver.is_connected_on(&d.iter().map(|&x| x > 0).collect::<Vec<_>>())).collect();
        let estimate: u128 = dvs.iter().map(|d| candidate_count(quiver, p, d)).fold(0u128, |a, b| a.saturating_add(b));
        examined = examined.saturating_add(estimate);
        if examined > cfg.guard {
            return Err(Error::Guard { what: format!("enumeration of representations of total dimension {total}"), estimate: examined, limit: cfg.guard });
        }
        let mut level = Vec::new();
        for d in &dvs {
            level.extend(enumerate_dim_vector(quiver, field, d, &valid));
        }
        if level.is_empty() && cfg.stop_at_gap {
            break;
        }
        found.extend(level);
    }
    found.sort_by_key(|r| r.sort_key());
    Ok(found)
}

fn enumerate_dim_vector<F>(quiver: &Arc<Quiver>, field: Fp, dims: &[usize], valid: &F) -> Vec<Rep>
where
    F: Fn(&Rep) -> bool + Sync + Send,
{
    let p = field.p() as u128;
    let shapes: Vec<(usize, usize)> = quiver.arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let count = p.pow(entries as u32);
    let chunks = 64u128.min(count).max(1);
    let per = count.div_ceil(chunks);
    let decode = |mut idx: u128| -> Rep {
        let mut flat = vec![0i64; entries];
        for x in flat.iter_mut().rev() {
            *x = (idx % p) as i64;
            idx /= p;
        }
        let mut off = 0;
        let mats = shapes
            .iter()
            .map(|&(r, c)| {
                let m = FpMatrix::from_entries(field, r, c, flat[off..off + r * c].to_vec()).expect("shape");
                off += r * c;
                m
            })
            .collect();
        Rep::from_parts(quiver.clone(), field, dims.to_vec(), mats)
    };
    let hits: Vec<Vec<(Rep, usize)>> = par::map_range(chunks as usize, |c| {
        let lo = c as u128 * per;
        let hi = ((c as u128 + 1) * per).min(count);
        let mut out = Vec::new();
        for idx in lo..hi {
            let r = decode(idx);
            if !valid(&r) {
                continue;
            }
            let end = hom_basis(&r, &r);
            if end.len() == 1 || find_splitting_endo(&r, &end).is_none() {
                out.push((r, end.len()));
            }
        }
        out
    });
    let mut reps: Vec<Rep> = Vec::new();
    let mut keys: Vec<Vec<usize>> = Vec::new();
    for (r, end_dim) in hits.into_iter().flatten() {
        let key = quick_invariant(&r, end_dim);
        let dup = reps.iter().zip(&keys).any(|(x, k)| *k == key && indecomposable_iso(x, &r).is_some());
        if !dup {
            reps.push(r);
            keys.push(key);
        }
    }
    reps
}

/// JSON form of a single module: `{"dims": [...], "mats": {"arrow": [[...]]}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dims: Vec<usize>,
    pub mats: BTreeMap<String, Vec<Vec<i64>>>,
}

impl ModuleFile {
    pub fn from_rep(m: &Rep) -> Self {
        let mats = m
            .quiver
            .arrows()
            .iter()
            .zip(&m.mats)
            .map(|(a, x)| (a.name.clone(), (0..x.rows()).map(|r| x.row(r).iter().map(|&e| e as i64).collect()).collect()))
            .collect();
        ModuleFile { dims: m.dims.clone(), mats }
    }

    pub fn to_rep(&self, quiver: &Arc<Quiver>, field: Fp) -> Result<Rep> {
        let mut mats = Vec::with_capacity(quiver.num_arrows());
        for a in quiver.arrows() {
            let (r, c) = (
                *self.dims.get(a.target).ok_or_else(|| Error::Parse("dimension vector too short".into()))?,
                *self.dims.get(a.source).ok_or_else(|| Error::Parse("dimension vector too short".into()))?,
            );
            let m = match self.mats.get(&a.name) {
                None => FpMatrix::zeros(field, r, c),
                Some(rows) => {
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(Error::Shape(format!("matrix of arrow {} has the wrong shape", a.name)));
                    }
                    FpMatrix::from_entries(field, r, c, rows.concat())?
                }
            };
            mats.push(m);
        }
        for name in self.mats.keys() {
            quiver.arrow_index(name)?;
        }
        Rep::new(quiver.clone(), field, self.dims.clone(), mats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::new(vec!["1".into(), "2".into()], vec![Arrow { name: "a".into(), source: 0, target: 1 }]).unwrap())
    }

    #[test]
    fn simple_plus_simple_splits() {
        let f = Fp::new(2).unwrap();
        let s = Rep::simple(a2(), f, 0);
        let m = Rep::sum(&[s.clone(), s.clone()]).unwrap();
        let parts = decompose(&m);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|x| iso(x, &s)));
    }

    #[test]
    fn hom_between_simples_at_different_vertices_vanishes() {
        let f = Fp::new(2).unwrap();
        assert_eq!(hom_dim(&Rep::simple(a2(), f, 0), &Rep::simple(a2(), f, 1)), 0);
    }

    #[test]
    fn a2_has_three_indecomposables() {
        let f = Fp::new(3).unwrap();
        let found = enumerate_reps(&a2(), f, EnumConfig { bound: 4, ..Default::default() }, |_| true).unwrap();
        let dims: Vec<_> = found.iter().map(|r| r.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn gap_stop_agrees_with_full_search() {
        let f = Fp::new(2).unwrap();
        let a = enumerate_reps(&a2(), f, EnumConfig { bound: 4, stop_at_gap: true, ..Default::default() }, |_| true);
        let b = enumerate_reps(&a2(), f, EnumConfig { bound: 4, stop_at_gap: false, ..Default::default() }, |_| true);
        assert_eq!(a.unwrap(), b.unwrap());
    }

    #[test]
    fn guard_aborts_large_searches() {
        let f = Fp::new(2).unwrap();
        let r = enumerate_reps(&Arc::new(Quiver::loops(2)), f, EnumConfig { bound: 6, guard: 1000, stop_at_gap: false }, |_| true);
        assert!(matches!(r, Err(Error::Guard { .. })));
    }

    #[test]
    fn module_file_round_trip() {
        let f = Fp::new(2).unwrap();
        let m = Rep::new(a2(), f, vec![1, 1], vec![FpMatrix::identity(f, 1)]).unwrap();
        let file = ModuleFile::from_rep(&m);
        assert_eq!(file.to_rep(&a2(), f).unwrap(), m);
    }
}
