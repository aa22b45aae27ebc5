//! Bounded cochain complexes of representations, the Hom complex and its
//! cohomology (morphisms in the homotopy category), mapping cones and
//! Krull-Schmidt decomposition of complexes.
//!
//! A complex with terms in degrees `lo..lo+len` is the same thing as a
//! representation of `Q x A_len` (see [`Quiver::linear_extension`]) whose
//! vertical arrows compose to zero, and chain maps are its morphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{span, Fp, FpMatrix};
use crate::modrep::{self, hom_basis, ModMap, Rep};
use crate::quiver::Quiver;

#[derive(Clone, Debug)]
pub struct Complex {
    quiver: Arc<Quiver>,
    field: Fp,
    lo: i32,
    terms: Vec<Rep>,
    // diffs[k]: terms[k] -> terms[k + 1]
    diffs: Vec<ModMap>,
}

/// A homogeneous element of the Hom complex `Hom^degree(X, Y)`:
/// `maps[k]: X^{lo_X + k} -> Y^{lo_X + k + degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: i32,
    pub maps: Vec<ModMap>,
}

impl Complex {
    pub fn new(lo: i32, terms: Vec<Rep>, diffs: Vec<ModMap>) -> Result<Self> {
        let first = terms.first().ok_or_else(|| Error::Inconsistent("complex without terms".into()))?;
        if diffs.len() + 1 != terms.len() {
            return Err(Error::Shape("a complex needs one differential between consecutive terms".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            terms[k].check_same_quiver(&terms[k + 1])?;
            if !d.is_intertwiner(&terms[k], &terms[k + 1]) {
                return Err(Error::Inconsistent(format!("differential {k} is not a module map")));
            }
            if k + 1 < diffs.len() && !diffs[k + 1].compose(d).is_zero() {
                return Err(Error::Inconsistent(format!("d∘d is nonzero at position {k}")));
            }
        }
        Ok(Complex { quiver: first.quiver().clone(), field: first.field(), lo, terms, diffs })
    }

    pub(crate) fn from_parts(lo: i32, terms: Vec<Rep>, diffs: Vec<ModMap>) -> Self {
        debug_assert!(Complex::new(lo, terms.clone(), diffs.clone()).is_ok());
        let first = &terms[0];
        Complex { quiver: first.quiver().clone(), field: first.field(), lo, terms, diffs }
    }

    pub fn zero(quiver: Arc<Quiver>, field: Fp) -> Self {
        let z = Rep::zero(quiver.clone(), field);
        Complex { quiver, field, lo: 0, terms: vec![z], diffs: Vec::new() }
    }

    pub fn stalk(m: Rep, degree: i32) -> Self {
        Complex { quiver: m.quiver().clone(), field: m.field(), lo: degree, terms: vec![m], diffs: Vec::new() }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn terms(&self) -> &[Rep] {
        &self.terms
    }

    pub fn term(&self, deg: i32) -> Rep {
        self.term_ref(deg).cloned().unwrap_or_else(|| Rep::zero(self.quiver.clone(), self.field))
    }

    pub fn term_ref(&self, deg: i32) -> Option<&Rep> {
        if deg < self.lo || deg > self.hi() {
            return None;
        }
        Some(&self.terms[(deg - self.lo) as usize])
    }

    /// `d^deg: X^deg -> X^{deg+1}`.
    pub fn diff(&self, deg: i32) -> ModMap {
        if deg >= self.lo && deg < self.hi() {
            return self.diffs[(deg - self.lo) as usize].clone();
        }
        ModMap::zero(&self.term(deg), &self.term(deg + 1))
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(|t| t.total_dim()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Degrees carrying nonzero terms, as an inclusive range.
    pub fn support(&self) -> Option<(i32, i32)> {
        let nz: Vec<i32> = (self.lo..=self.hi()).filter(|&d| self.term_ref(d).is_some_and(|t| !t.is_zero())).collect();
        Some((*nz.first()?, *nz.last()?))
    }

    /// `X[s]`: `X[s]^n = X^{n+s}` with differential `(-1)^s d`.
    pub fn shift(&self, s: i32) -> Complex {
        let diffs = if s % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.neg()).collect() };
        Complex { quiver: self.quiver.clone(), field: self.field, lo: self.lo - s, terms: self.terms.clone(), diffs }
    }

    /// The same complex viewed in the degree window `lo..=hi` (which must contain the support).
    pub fn padded(&self, lo: i32, hi: i32) -> Complex {
        let terms: Vec<Rep> = (lo..=hi).map(|d| self.term(d)).collect();
        let diffs = (lo..hi).map(|d| self.diff(d)).collect();
        Complex { quiver: self.quiver.clone(), field: self.field, lo, terms, diffs }
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> Complex {
        match self.support() {
            None => Complex::zero(self.quiver.clone(), self.field),
            Some((a, b)) => self.padded(a, b),
        }
    }

    /// `dim H^deg` for each degree of the window.
    pub fn homology_dims(&self) -> Vec<(i32, usize)> {
        (self.lo..=self.hi())
            .map(|d| {
                let t = self.term(d).total_dim();
                let out = self.diff(d).rank();
                let inc = self.diff(d - 1).rank();
                (d, t - out - inc)
            })
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_dims().iter().all(|&(_, h)| h == 0)
    }

    /// `H^deg` as a representation.
    pub fn homology(&self, deg: i32) -> Rep {
        let term = self.term(deg);
        let (z, zinc) = term.kernel_of(&self.diff(deg));
        let d_in = self.diff(deg - 1);
        // express the incoming boundary inside the cycles
        let f = self.field;
        let blocks: Vec<FpMatrix> = (0..z.dims().len())
            .map(|v| {
                let ech = zinc.block(v).reduce();
                let cols: Vec<Vec<u32>> = d_in.block(v).columns().iter().map(|c| ech.solve(c).expect("boundaries are cycles")).collect();
                FpMatrix::from_columns(f, z.dims()[v], &cols)
            })
            .collect();
        z.cokernel_of(&ModMap::new(f, blocks)).0
    }

    fn ext_quiver(&self) -> Arc<Quiver> {
        Arc::new(self.quiver.linear_extension(self.terms.len()))
    }

    /// The complex as a representation of `Q x A_len`.
    pub fn to_rep(&self) -> Rep {
        let n = self.quiver.num_vertices();
        let q = self.ext_quiver();
        let dims: Vec<usize> = self.terms.iter().flat_map(|t| t.dims().iter().copied()).collect();
        let mut mats = Vec::with_capacity(q.num_arrows());
        for t in &self.terms {
            mats.extend(t.mats().iter().cloned());
        }
        for d in &self.diffs {
            for v in 0..n {
                mats.push(d.block(v).clone());
            }
        }
        Rep::from_parts(q, self.field, dims, mats)
    }

    fn complex_of_rep(&self, r: &Rep) -> Complex {
        let n = self.quiver.num_vertices();
        let na = self.quiver.num_arrows();
        let len = self.terms.len();
        let terms: Vec<Rep> = (0..len)
            .map(|c| {
                let dims = r.dims()[c * n..(c + 1) * n].to_vec();
                let mats = r.mats()[c * na..(c + 1) * na].to_vec();
                Rep::from_parts(self.quiver.clone(), self.field, dims, mats)
            })
            .collect();
        let diffs = (0..len.saturating_sub(1)).map(|c| ModMap::new(self.field, r.mats()[len * na + c * n..len * na + (c + 1) * n].to_vec())).collect();
        Complex { quiver: self.quiver.clone(), field: self.field, lo: self.lo, terms, diffs }
    }

    fn cochain_of_rep_map(&self, m: &ModMap, degree: i32) -> Cochain {
        let n = self.quiver.num_vertices();
        let maps = (0..self.terms.len()).map(|c| ModMap::new(self.field, m.blocks()[c * n..(c + 1) * n].to_vec())).collect();
        Cochain { degree, maps }
    }

    /// Direct sum over a common degree window, with inclusions and projections.
    pub fn direct_sum(parts: &[Complex]) -> Result<(Complex, Vec<Cochain>, Vec<Cochain>)> {
        let first = parts.first().ok_or_else(|| Error::Inconsistent("empty direct sum".into()))?;
        let lo = parts.iter().map(|p| p.lo).min().unwrap_or(0);
        let hi = parts.iter().map(|p| p.hi()).max().unwrap_or(0);
        let padded: Vec<Complex> = parts.iter().map(|p| p.padded(lo, hi)).collect();
        let reps: Vec<Rep> = padded.iter().map(|p| p.to_rep()).collect();
        let (sum, incl, proj) = Rep::direct_sum(&reps)?;
        let shape = first.padded(lo, hi);
        let total = shape.complex_of_rep(&sum);
        let incl = incl.iter().enumerate().map(|(k, m)| restrict_cochain(&padded[k].cochain_of_rep_map(m, 0), &padded[k], &parts[k])).collect();
        let proj = proj.iter().map(|m| total.cochain_of_rep_map(m, 0)).collect();
        Ok((total, incl, proj))
    }

    /// Decomposition in the category of complexes. Summands keep the degree
    /// window of `self`; inclusions and projections are chain maps.
    pub fn decompose_with_maps(&self) -> Vec<(Complex, Cochain, Cochain)> {
        if self.is_zero() {
            return Vec::new();
        }
        modrep::decompose_with_maps(&self.to_rep())
            .into_iter()
            .map(|s| (self.complex_of_rep(&s.rep), self.cochain_of_rep_map(&s.incl, 0), self.cochain_of_rep_map(&s.proj, 0)))
            .collect()
    }

    pub fn decompose(&self) -> Vec<Complex> {
        self.decompose_with_maps().into_iter().map(|(c, _, _)| c).collect()
    }

    /// Isomorphism of complexes (chain isomorphism), comparing over a common window.
    pub fn is_chain_isomorphic(&self, other: &Complex) -> bool {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let a = self.padded(lo, hi).to_rep();
        let b = other.padded(lo, hi).to_rep();
        modrep::iso(&a, &b)
    }

    /// Chain maps `self -> other` (degree-0 cocycles), as a basis.
    pub fn chain_maps(&self, other: &Complex) -> Vec<Cochain> {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let a = self.padded(lo, hi);
        let b = other.padded(lo, hi);
        hom_basis(&a.to_rep(), &b.to_rep())
            .iter()
            .map(|m| {
                let c = a.cochain_of_rep_map(m, 0);
                restrict_cochain(&c, &a, self)
            })
            .collect()
    }
}

// Re-index a cochain defined on a padded source back onto `target_shape`'s window.
fn restrict_cochain(c: &Cochain, padded: &Complex, original: &Complex) -> Cochain {
    let off = (original.lo - padded.lo) as usize;
    Cochain { degree: c.degree, maps: c.maps[off..off + original.terms.len()].to_vec() }
}

impl Cochain {
    pub fn zero(x: &Complex, y: &Complex, degree: i32) -> Self {
        let maps = (x.lo..=x.hi()).map(|i| ModMap::zero(&x.term(i), &y.term(i + degree))).collect();
        Cochain { degree, maps }
    }

    /// Component `X^i -> Y^{i+degree}`.
    pub fn at(&self, x: &Complex, y: &Complex, i: i32) -> ModMap {
        if i < x.lo || i > x.hi() {
            return ModMap::zero(&x.term(i), &y.term(i + self.degree));
        }
        self.maps[(i - x.lo) as usize].clone()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        Cochain { degree: self.degree, maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        Cochain { degree: self.degree, maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> Cochain {
        Cochain { degree: self.degree, maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> Cochain {
        Cochain { degree: self.degree, maps: self.maps.iter().map(|a| a.neg()).collect() }
    }

    pub fn flatten(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.flatten()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn lin_comb(coeffs: &[u32], items: &[Cochain], x: &Complex, y: &Complex, degree: i32) -> Cochain {
        let mut acc = Cochain::zero(x, y, degree);
        for (c, it) in coeffs.iter().zip(items) {
            if *c != 0 {
                acc = acc.add(&it.scale(*c));
            }
        }
        acc
    }

    /// `g ∘ f` for `f ∈ Hom^s(X, Y)` and `g = self ∈ Hom^t(Y, Z)`.
    pub fn compose(&self, f: &Cochain, x: &Complex, y: &Complex, z: &Complex) -> Cochain {
        let degree = self.degree + f.degree;
        let maps = (x.lo..=x.hi())
            .map(|i| {
                let fi = f.at(x, y, i);
                let g = self.at(y, z, i + f.degree);
                g.compose(&fi)
            })
            .collect();
        Cochain { degree, maps }
    }

    /// Whether `self ∈ Hom^0(X, Y)` commutes with the differentials.
    pub fn is_chain_map(&self, x: &Complex, y: &Complex) -> bool {
        differential(self, x, y).is_zero()
    }

    /// The induced element of `Hom^n(X[s], Y[s])`.
    pub fn shift(&self, s: i32) -> Cochain {
        // f: X -> Y of degree n becomes X[s] -> Y[s] with sign (-1)^{s n}
        if (s * self.degree) % 2 == 0 {
            self.clone()
        } else {
            self.neg()
        }
    }
}

/// `D(f) = d_Y f - (-1)^n f d_X` for `f ∈ Hom^n(X, Y)`.
pub fn differential(f: &Cochain, x: &Complex, y: &Complex) -> Cochain {
    let n = f.degree;
    let sign_neg = n % 2 == 0;
    let maps = (x.lo..=x.hi())
        .map(|i| {
            let a = y.diff(i + n).compose(&f.at(x, y, i));
            let b = f.at(x, y, i + 1).compose(&x.diff(i));
            if sign_neg {
                a.sub(&b)
            } else {
                a.add(&b)
            }
        })
        .collect();
    Cochain { degree: n + 1, maps }
}

/// Basis of `Hom^n(X, Y) = ⊕_i Hom(X^i, Y^{i+n})`.
pub fn hom_n_basis(x: &Complex, y: &Complex, n: i32) -> Vec<Cochain> {
    let mut out = Vec::new();
    for (k, i) in (x.lo..=x.hi()).enumerate() {
        let src = &x.terms[k];
        let Some(tgt) = y.term_ref(i + n) else { continue };
        for b in hom_basis(src, tgt) {
            let mut c = Cochain::zero(x, y, n);
            c.maps[k] = b;
            out.push(c);
        }
    }
    out
}

/// `H^n` of the Hom complex: morphisms `X -> Y[n]` in the homotopy category.
#[derive(Clone, Debug)]
pub struct KHom {
    pub source: Complex,
    pub target: Complex,
    pub degree: i32,
    /// Cocycles representing a basis of the cohomology.
    pub basis: Vec<Cochain>,
    boundaries: Vec<Vec<u32>>,
    flat_len: usize,
}

impl KHom {
    pub fn compute(x: &Complex, y: &Complex, n: i32) -> KHom {
        let f = x.field;
        let cn = hom_n_basis(x, y, n);
        let flat_len = Cochain::zero(x, y, n).flatten().len();
        if cn.is_empty() {
            return KHom { source: x.clone(), target: y.clone(), degree: n, basis: Vec::new(), boundaries: Vec::new(), flat_len };
        }
        let dn: Vec<Vec<u32>> = cn.iter().map(|c| differential(c, x, y).flatten()).collect();
        let dlen = dn[0].len();
        let cocycles: Vec<Cochain> = if dlen == 0 {
            cn.clone()
        } else {
            FpMatrix::from_columns(f, dlen, &dn).kernel().iter().map(|coeffs| Cochain::lin_comb(coeffs, &cn, x, y, n)).collect()
        };
        let boundaries: Vec<Vec<u32>> = hom_n_basis(x, y, n - 1).iter().map(|c| differential(c, x, y).flatten()).collect();
        let boundaries = span::basis(f, flat_len, &boundaries);
        let cflat: Vec<Vec<u32>> = cocycles.iter().map(|c| c.flatten()).collect();
        let chosen = span::complement(f, flat_len, &boundaries, &cflat);
        let basis = chosen
            .iter()
            .map(|v| {
                let idx = cflat.iter().position(|c| c == v).expect("chosen among cocycles");
                cocycles[idx].clone()
            })
            .collect();
        KHom { source: x.clone(), target: y.clone(), degree: n, basis, boundaries, flat_len }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether a cocycle is null-homotopic.
    pub fn is_boundary(&self, c: &Cochain) -> bool {
        let f = self.source.field;
        span::contains(f, self.flat_len, &self.boundaries, &c.flatten())
    }

    /// Coordinates of the class of a cocycle in [`KHom::basis`].
    pub fn coords(&self, c: &Cochain) -> Option<Vec<u32>> {
        let f = self.source.field;
        let mut cols: Vec<Vec<u32>> = self.basis.iter().map(|b| b.flatten()).collect();
        cols.extend(self.boundaries.iter().cloned());
        if self.flat_len == 0 {
            return Some(Vec::new());
        }
        let x = FpMatrix::from_columns(f, self.flat_len, &cols).reduce().solve(&c.flatten())?;
        Some(x[..self.basis.len()].to_vec())
    }

    /// Dimension of the span of the classes of the given cocycles.
    pub fn class_rank(&self, cs: &[Cochain]) -> usize {
        let f = self.source.field;
        let mut all = self.boundaries.clone();
        all.extend(cs.iter().map(|c| c.flatten()));
        span::rank(f, self.flat_len, &all) - self.boundaries.len()
    }
}

pub fn hom_k(x: &Complex, y: &Complex, n: i32) -> KHom {
    KHom::compute(x, y, n)
}

/// Mapping cone of a chain map `f: X -> Y`, with the triangle maps
/// `Y -> Cone(f) -> X[1]`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub cone: Complex,
    pub from_target: Cochain,
    pub to_shift: Cochain,
}

/// `Cone(f)^n = X^{n+1} ⊕ Y^n` with `d = [[-d_X, 0], [f, d_Y]]`.
pub fn cone(f: &Cochain, x: &Complex, y: &Complex) -> Cone {
    assert_eq!(f.degree, 0, "cone of a degree-0 chain map");
    let lo = (x.lo - 1).min(y.lo);
    let hi = (x.hi() - 1).max(y.hi());
    let mut terms = Vec::new();
    let mut incl_x = Vec::new();
    let mut incl_y = Vec::new();
    let mut proj_x = Vec::new();
    let mut proj_y = Vec::new();
    for n in lo..=hi {
        let (t, i, p) = Rep::direct_sum(&[x.term(n + 1), y.term(n)]).expect("same quiver");
        terms.push(t);
        incl_x.push(i[0].clone());
        incl_y.push(i[1].clone());
        proj_x.push(p[0].clone());
        proj_y.push(p[1].clone());
    }
    let mut diffs = Vec::new();
    for (k, n) in (lo..hi).enumerate() {
        let px = &proj_x[k];
        let py = &proj_y[k];
        let a = incl_x[k + 1].compose(&x.diff(n + 1).neg()).compose(px);
        let b = incl_y[k + 1].compose(&f.at(x, y, n + 1)).compose(px);
        let c = incl_y[k + 1].compose(&y.diff(n)).compose(py);
        diffs.push(a.add(&b).add(&c));
    }
    let cone = Complex::from_parts(lo, terms, diffs);
    let from_target = Cochain { degree: 0, maps: (y.lo..=y.hi()).map(|n| incl_y[(n - lo) as usize].clone()).collect() };
    let xs = x.shift(1);
    let to_shift = Cochain {
        degree: 0,
        maps: (lo..=hi)
            .map(|n| if (x.lo..=x.hi()).contains(&(n + 1)) { proj_x[(n - lo) as usize].clone() } else { ModMap::zero(&cone.term(n), &xs.term(n)) })
            .collect(),
    };
    Cone { cone, from_target, to_shift }
}

/// An approximation `⊕ list[objects[c]] -> Z` (right) or `Z -> ⊕ list[objects[c]]` (left).
#[derive(Clone, Debug)]
pub struct Approximation {
    pub objects: Vec<usize>,
    pub sum: Complex,
    pub map: Cochain,
}

/// A list of complexes with its Hom table, reusable across approximations.
#[derive(Clone, Debug)]
pub struct ApproxList {
    pub list: Vec<Complex>,
    // table[i][j]: basis of hom_k(list[i], list[j], 0)
    table: Vec<Vec<Vec<Cochain>>>,
}

impl ApproxList {
    pub fn new(list: Vec<Complex>) -> Self {
        let n = list.len();
        let flat = crate::par::map_range(n * n, |k| hom_k(&list[k / n], &list[k % n], 0).basis);
        let mut it = flat.into_iter();
        let table = (0..n).map(|_| (0..n).map(|_| it.next().expect("n*n entries")).collect()).collect();
        ApproxList { list, table }
    }

    /// Minimal right `add(list)`-approximation of `z` in the homotopy category.
    /// Starts from the universal map and removes summands while the
    /// approximation property survives.
    pub fn right(&self, z: &Complex) -> Approximation {
        let list = &self.list;
        let homs: Vec<KHom> = list.iter().map(|x| hom_k(x, z, 0)).collect();
        let copies: Vec<(usize, Cochain)> = homs.iter().enumerate().flat_map(|(i, h)| h.basis.iter().map(move |b| (i, b.clone()))).collect();
        let works = |copies: &[(usize, Cochain)]| {
            homs.iter().enumerate().all(|(i, h)| {
                let img: Vec<Cochain> = copies.iter().flat_map(|(j, b)| self.table[i][*j].iter().map(move |g| b.compose(g, &list[i], &list[*j], z))).collect();
                h.class_rank(&img) == h.dim()
            })
        };
        let copies = prune(copies, works);
        let objects: Vec<usize> = copies.iter().map(|(i, _)| *i).collect();
        if copies.is_empty() {
            let sum = Complex::zero(z.quiver.clone(), z.field);
            let map = Cochain::zero(&sum, z, 0);
            return Approximation { objects, sum, map };
        }
        let parts: Vec<Complex> = copies.iter().map(|(i, _)| list[*i].clone()).collect();
        let (sum, _, proj) = Complex::direct_sum(&parts).expect("nonempty");
        let mut map = Cochain::zero(&sum, z, 0);
        for ((i, b), p) in copies.iter().zip(&proj) {
            map = map.add(&b.compose(p, &sum, &list[*i], z));
        }
        Approximation { objects, sum, map }
    }

    /// Minimal left `add(list)`-approximation of `z` in the homotopy category.
    pub fn left(&self, z: &Complex) -> Approximation {
        let list = &self.list;
        let homs: Vec<KHom> = list.iter().map(|x| hom_k(z, x, 0)).collect();
        let copies: Vec<(usize, Cochain)> = homs.iter().enumerate().flat_map(|(i, h)| h.basis.iter().map(move |b| (i, b.clone()))).collect();
        let works = |copies: &[(usize, Cochain)]| {
            homs.iter().enumerate().all(|(i, h)| {
                let img: Vec<Cochain> = copies.iter().flat_map(|(j, b)| self.table[*j][i].iter().map(move |g| g.compose(b, z, &list[*j], &list[i]))).collect();
                h.class_rank(&img) == h.dim()
            })
        };
        let copies = prune(copies, works);
        let objects: Vec<usize> = copies.iter().map(|(i, _)| *i).collect();
        if copies.is_empty() {
            let sum = Complex::zero(z.quiver.clone(), z.field);
            let map = Cochain::zero(z, &sum, 0);
            return Approximation { objects, sum, map };
        }
        let parts: Vec<Complex> = copies.iter().map(|(i, _)| list[*i].clone()).collect();
        let (sum, incl, _) = Complex::direct_sum(&parts).expect("nonempty");
        let mut map = Cochain::zero(z, &sum, 0);
        for ((i, b), e) in copies.iter().zip(&incl) {
            map = map.add(&e.compose(b, z, &list[*i], &sum));
        }
        Approximation { objects, sum, map }
    }
}

// Drops copies from the back while `works` still holds.
fn prune<T: Clone, F: Fn(&[T]) -> bool>(mut copies: Vec<T>, works: F) -> Vec<T> {
    let mut k = copies.len();
    while k > 0 {
        k -= 1;
        let mut trial = copies.clone();
        trial.remove(k);
        if works(&trial) {
            copies = trial;
        }
    }
    copies
}

pub fn right_approximation(list: &[Complex], z: &Complex) -> Approximation {
    ApproxList::new(list.to_vec()).right(z)
}

pub fn left_approximation(list: &[Complex], z: &Complex) -> Approximation {
    ApproxList::new(list.to_vec()).left(z)
}

/// Whether the two complexes carry the same underlying base quiver.
pub fn same_base(a: &Complex, b: &Complex) -> bool {
    modrep::same_quiver(&a.quiver, &b.quiver) && a.field == b.field
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn alg() -> Algebra {
        Algebra::from_json(include_str!("../fixtures/a3_rel.json")).unwrap()
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let a = alg();
        let x = Complex::stalk(a.projective(0), 0);
        let id = Cochain { degree: 0, maps: vec![ModMap::identity(&a.projective(0))] };
        let c = cone(&id, &x, &x);
        assert!(c.cone.is_acyclic());
        assert!(c.to_shift.is_chain_map(&c.cone, &x.shift(1)));
        assert!(c.from_target.is_chain_map(&x, &c.cone));
    }

    #[test]
    fn hom_between_stalks_matches_module_hom() {
        let a = alg();
        let x = Complex::stalk(a.projective(1), 0);
        let y = Complex::stalk(a.projective(0), 0);
        assert_eq!(hom_k(&x, &y, 0).dim(), modrep::hom_dim(&a.projective(1), &a.projective(0)));
        assert_eq!(hom_k(&x, &y, 1).dim(), 0);
    }

    #[test]
    fn homotopy_kills_contractible_maps() {
        let a = alg();
        let p = a.projective(0);
        let x = Complex::new(-1, vec![p.clone(), p.clone()], vec![ModMap::identity(&p)]).unwrap();
        assert_eq!(hom_k(&x, &x, 0).dim(), 0);
        assert!(x.decompose().iter().all(|c| c.is_acyclic()));
    }

    #[test]
    fn direct_sum_of_complexes_splits_back() {
        let a = alg();
        let x = Complex::stalk(a.projective(0), 0);
        let y = Complex::stalk(a.projective(2), -1);
        let (s, _, _) = Complex::direct_sum(&[x, y]).unwrap();
        assert_eq!(s.decompose().len(), 2);
    }
}
