//! Torsion theory in the module category: traces, generated and perpendicular
//! classes, approximations, support τ-tilting modules, left weak cotorsion
//! pairs and the triples they form with torsion pairs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::exactla::span;
use crate::homology::span_dim;
use crate::modrep::{self, hom_basis, position_iso, ModMap, Rep};
use crate::par;
use crate::report::Report;

/// Sum of the images of all maps from members of `list` into `m`, with its inclusion.
pub fn trace(list: &[Rep], m: &Rep) -> (Rep, ModMap) {
    let maps: Vec<ModMap> = list.iter().flat_map(|t| hom_basis(t, m)).collect();
    let basis = m.span_of_images(&maps);
    m.submodule(&basis).expect("a sum of images is a submodule")
}

pub fn in_gen(list: &[Rep], m: &Rep) -> bool {
    trace(list, m).0.total_dim() == m.total_dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SubcatKind {
    GenOf(String),
    HomPerp(String),
    Ext1Perp(String),
    Explicit,
}

/// A full additive subcategory, given by its indecomposables (sorted module indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcat {
    pub indecs: Vec<usize>,
    pub kind: SubcatKind,
}

impl Subcat {
    pub fn explicit(mut indecs: Vec<usize>) -> Self {
        indecs.sort_unstable();
        indecs.dedup();
        Subcat { indecs, kind: SubcatKind::Explicit }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indecs.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn intersection(&self, other: &Subcat) -> Vec<usize> {
        self.indecs.iter().copied().filter(|&i| other.contains(i)).collect()
    }

    pub fn reps(&self, ctx: &Context) -> Vec<Rep> {
        self.indecs.iter().map(|&i| ctx.modules[i].rep.clone()).collect()
    }

    pub fn names(&self, ctx: &Context) -> Vec<String> {
        ctx.name_list(&self.indecs)
    }

    /// Whether every indecomposable summand of `m` is listed.
    pub fn contains_module(&self, ctx: &Context, m: &Rep) -> bool {
        ctx.summand_indices(m).is_ok_and(|s| s.iter().all(|&i| self.contains(i)))
    }
}

/// Display name of a direct sum of indecomposables.
pub fn sum_name(ctx: &Context, idx: &[usize]) -> String {
    sum_name_of(&ctx.name_list(idx))
}

pub fn sum_name_of(names: &[String]) -> String {
    if names.is_empty() {
        return "0".into();
    }
    names.join("⊕")
}

pub fn gen_of(ctx: &Context, seed: &[usize]) -> Subcat {
    let list: Vec<Rep> = seed.iter().map(|&i| ctx.modules[i].rep.clone()).collect();
    let indecs: Vec<usize> = (0..ctx.modules.len()).filter(|&i| in_gen(&list, &ctx.modules[i].rep)).collect();
    Subcat { indecs, kind: SubcatKind::GenOf(sum_name(ctx, seed)) }
}

/// `seed⊥ = {M : Hom(seed, M) = 0}`.
pub fn hom_perp(ctx: &Context, seed: &[usize]) -> Subcat {
    let hom = ctx.hom_table();
    let indecs = (0..ctx.modules.len()).filter(|&m| seed.iter().all(|&t| hom[t][m] == 0)).collect();
    Subcat { indecs, kind: SubcatKind::HomPerp(sum_name(ctx, seed)) }
}

/// `⊥¹X = {M : Ext¹(M, X) = 0}`, decided through the Auslander-Reiten formula
/// and cross-checked against presentations.
pub fn ext1_left_perp(ctx: &Context, list: &[usize]) -> Result<Subcat> {
    let ar = ctx.ext_ar_table();
    let direct = ctx.ext_table();
    let mut indecs = Vec::new();
    for m in 0..ctx.modules.len() {
        for &x in list {
            if ar[m][x] != direct[m][x] {
                return Err(Error::Inconsistent(format!(
                    "Ext¹({}, {}): {} by the AR formula, {} by presentations",
                    ctx.modules[m].name, ctx.modules[x].name, ar[m][x], direct[m][x]
                )));
            }
        }
        if list.iter().all(|&x| ar[m][x] == 0) {
            indecs.push(m);
        }
    }
    Ok(Subcat { indecs, kind: SubcatKind::Ext1Perp(format!("⊥¹[{}]", sum_name(ctx, list))) })
}

/// `X^{⊥1} = {M : Ext¹(X, M) = 0}`.
pub fn ext1_right_perp(ctx: &Context, list: &[usize]) -> Subcat {
    let ext = ctx.ext_table();
    let indecs = (0..ctx.modules.len()).filter(|&m| list.iter().all(|&x| ext[x][m] == 0)).collect();
    Subcat { indecs, kind: SubcatKind::Ext1Perp(format!("[{}]⊥¹", sum_name(ctx, list))) }
}

/// `{M : Hom(M, X) = 0}`.
pub fn hom_left_perp(ctx: &Context, list: &[usize]) -> Subcat {
    let hom = ctx.hom_table();
    let indecs = (0..ctx.modules.len()).filter(|&m| list.iter().all(|&x| hom[m][x] == 0)).collect();
    Subcat { indecs, kind: SubcatKind::HomPerp(format!("⊥[{}]", sum_name(ctx, list))) }
}

/// An approximation by `add(list)`: `sum -> M` (right) or `M -> sum` (left).
#[derive(Clone, Debug)]
pub struct ModApprox {
    /// Positions in the list, one per summand copy of `sum`.
    pub objects: Vec<usize>,
    pub sum: Rep,
    pub map: ModMap,
}

fn sum_with_maps(list: &[Rep], objects: &[usize], template: &Rep) -> (Rep, Vec<ModMap>, Vec<ModMap>) {
    if objects.is_empty() {
        return (Rep::zero(template.quiver().clone(), template.field()), Vec::new(), Vec::new());
    }
    let parts: Vec<Rep> = objects.iter().map(|&i| list[i].clone()).collect();
    Rep::direct_sum(&parts).expect("same quiver")
}

fn list_homs(list: &[Rep]) -> Vec<Vec<Vec<ModMap>>> {
    let n = list.len();
    let flat = par::map_range(n * n, |k| hom_basis(&list[k / n], &list[k % n]));
    let mut it = flat.into_iter();
    (0..n).map(|_| (0..n).map(|_| it.next().expect("n*n entries")).collect()).collect()
}

/// Right `add(list)`-approximation of `m`: the universal map, pruned to a
/// minimal one when asked.
pub fn right_approx(list: &[Rep], m: &Rep, minimal: bool) -> ModApprox {
    let homs: Vec<Vec<ModMap>> = list.iter().map(|x| hom_basis(x, m)).collect();
    let mut copies: Vec<(usize, ModMap)> = homs.iter().enumerate().flat_map(|(i, h)| h.iter().map(move |b| (i, b.clone()))).collect();
    if minimal {
        let table = list_homs(list);
        let works = |copies: &[(usize, ModMap)]| {
            homs.iter().enumerate().all(|(i, h)| {
                let img: Vec<ModMap> = copies.iter().flat_map(|(j, b)| table[i][*j].iter().map(move |g| b.compose(g))).collect();
                span_dim(&img) == h.len()
            })
        };
        prune(&mut copies, works);
    }
    let objects: Vec<usize> = copies.iter().map(|(i, _)| *i).collect();
    let (sum, _, proj) = sum_with_maps(list, &objects, m);
    let mut map = ModMap::zero(&sum, m);
    for ((_, b), p) in copies.iter().zip(&proj) {
        map = map.add(&b.compose(p));
    }
    ModApprox { objects, sum, map }
}

/// Left `add(list)`-approximation of `m`.
pub fn left_approx(list: &[Rep], m: &Rep, minimal: bool) -> ModApprox {
    let homs: Vec<Vec<ModMap>> = list.iter().map(|x| hom_basis(m, x)).collect();
    let mut copies: Vec<(usize, ModMap)> = homs.iter().enumerate().flat_map(|(i, h)| h.iter().map(move |b| (i, b.clone()))).collect();
    if minimal {
        let table = list_homs(list);
        let works = |copies: &[(usize, ModMap)]| {
            homs.iter().enumerate().all(|(i, h)| {
                let img: Vec<ModMap> = copies.iter().flat_map(|(j, b)| table[*j][i].iter().map(move |g| g.compose(b))).collect();
                span_dim(&img) == h.len()
            })
        };
        prune(&mut copies, works);
    }
    let objects: Vec<usize> = copies.iter().map(|(i, _)| *i).collect();
    let (sum, incl, _) = sum_with_maps(list, &objects, m);
    let mut map = ModMap::zero(m, &sum);
    for ((_, b), e) in copies.iter().zip(&incl) {
        map = map.add(&e.compose(b));
    }
    ModApprox { objects, sum, map }
}

fn prune<T: Clone, F: Fn(&[T]) -> bool>(copies: &mut Vec<T>, works: F) {
    let mut k = copies.len();
    while k > 0 {
        k -= 1;
        let mut trial = copies.clone();
        trial.remove(k);
        if works(&trial) {
            *copies = trial;
        }
    }
}

/// Whether every map from a list member into `m` factors through `approx`.
pub fn is_right_approx(list: &[Rep], approx: &ModApprox, m: &Rep) -> bool {
    list.iter().all(|x| {
        let through: Vec<ModMap> = hom_basis(x, &approx.sum).iter().map(|g| approx.map.compose(g)).collect();
        span_dim(&through) == modrep::hom_dim(x, m)
    })
}

/// Whether every map from `m` into a list member factors through `approx`.
pub fn is_left_approx(list: &[Rep], approx: &ModApprox, m: &Rep) -> bool {
    list.iter().all(|x| {
        let through: Vec<ModMap> = hom_basis(&approx.sum, x).iter().map(|g| g.compose(&approx.map)).collect();
        span_dim(&through) == modrep::hom_dim(m, x)
    })
}

/// Test surface for "for every module" statements: all indecomposables and
/// all sums of two of them.
pub fn test_modules(ctx: &Context) -> Vec<(String, Rep)> {
    let n = ctx.modules.len();
    let mut out: Vec<(String, Rep)> = ctx.modules.iter().map(|m| (m.name.clone(), m.rep.clone())).collect();
    for i in 0..n {
        for j in i..n {
            out.push((sum_name(ctx, &[i, j]), ctx.sum_of(&[i, j])));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct LwEntry {
    pub module: String,
    #[serde(rename = "rightApprox")]
    pub right_approx: Vec<String>,
    pub kernel: Vec<String>,
    pub epic: bool,
    #[serde(rename = "kernelInT")]
    pub kernel_in_t: bool,
    #[serde(rename = "leftApprox")]
    pub left_approx: Vec<String>,
    pub cokernel: Vec<String>,
    #[serde(rename = "cokernelInC")]
    pub cokernel_in_c: bool,
    #[serde(rename = "leftInjective")]
    pub left_injective: bool,
}

fn names_of(ctx: &Context, m: &Rep) -> Vec<String> {
    match ctx.summand_indices(m) {
        Ok(idx) => ctx.name_list(&idx),
        Err(_) => vec!["<outside universe>".into()],
    }
}

/// Left weak cotorsion pair check: Ext-orthogonality, and for every test
/// module an epic right C-approximation with kernel in T and a left
/// T-approximation with cokernel in C.
pub fn lw_verify(ctx: &Context, c: &Subcat, t: &Subcat) -> Report {
    let mut rep = Report::new("lw-cotorsion", format!("(add{{{}}}, add{{{}}})", c.names(ctx).join(","), t.names(ctx).join(",")), ctx.modules.len(), 2);
    let ext = ctx.ext_table();
    let bad: Vec<(usize, usize)> = c.indecs.iter().flat_map(|&x| t.indecs.iter().map(move |&y| (x, y))).filter(|&(x, y)| ext[x][y] != 0).collect();
    rep.check("ext-orthogonal", bad.is_empty(), bad.first().map(|&(x, y)| json!({"c": ctx.modules[x].name, "t": ctx.modules[y].name})));
    let c_reps = c.reps(ctx);
    let t_reps = t.reps(ctx);
    let surface = test_modules(ctx);
    let entries: Vec<LwEntry> = par::map(&surface, |(name, m)| {
        let f = right_approx(&c_reps, m, true);
        let epic = f.map.is_surjective();
        let (k, _) = f.sum.kernel_of(&f.map);
        let g = left_approx(&t_reps, m, true);
        let (q, _) = g.sum.cokernel_of(&g.map);
        LwEntry {
            module: name.clone(),
            right_approx: f.objects.iter().map(|&i| ctx.modules[c.indecs[i]].name.clone()).collect(),
            kernel: names_of(ctx, &k),
            epic,
            kernel_in_t: t.contains_module(ctx, &k),
            left_approx: g.objects.iter().map(|&i| ctx.modules[t.indecs[i]].name.clone()).collect(),
            cokernel: names_of(ctx, &q),
            cokernel_in_c: c.contains_module(ctx, &q),
            left_injective: g.map.is_injective(),
        }
    });
    let first = |pred: &dyn Fn(&LwEntry) -> bool| entries.iter().find(|e| !pred(e)).map(|e| json!(e.module));
    rep.check("right-approximation-epic", entries.iter().all(|e| e.epic), first(&|e| e.epic));
    rep.check("kernel-in-T", entries.iter().all(|e| e.kernel_in_t), first(&|e| e.kernel_in_t));
    rep.check("cokernel-in-C", entries.iter().all(|e| e.cokernel_in_c), first(&|e| e.cokernel_in_c));
    rep.data = json!({"perModule": entries});
    rep
}

/// Torsion pair check over a universe of indecomposables: Hom-orthogonality
/// and the canonical sequence `0 -> tN -> N -> N/tN -> 0` with `tN` the trace
/// of the torsion class, for every universe member.
pub fn torsion_pair_verify(universe: &[Rep], names: &[String], t: &[usize], f: &[usize]) -> Report {
    let mut rep = Report::new("torsion-pair", format!("|T|={}, |F|={}", t.len(), f.len()), universe.len(), 1);
    let bad = t.iter().flat_map(|&x| f.iter().map(move |&y| (x, y))).find(|&(x, y)| modrep::hom_dim(&universe[x], &universe[y]) != 0);
    rep.check("hom-orthogonal", bad.is_none(), bad.map(|(x, y)| json!({"t": names[x], "f": names[y]})));
    let t_reps: Vec<Rep> = t.iter().map(|&i| universe[i].clone()).collect();
    let in_add = |m: &Rep, list: &[usize]| modrep::decompose(m).iter().all(|s| position_iso(universe, s).is_some_and(|i| list.contains(&i)));
    let failures: Vec<String> = par::filter_map(&(0..universe.len()).collect::<Vec<_>>(), |&i| {
        let n = &universe[i];
        let (tn, inc) = trace(&t_reps, n);
        let (q, _) = n.cokernel_of(&inc);
        (!(in_add(&tn, t) && in_add(&q, f))).then(|| names[i].clone())
    });
    rep.check("trace-decomposition", failures.is_empty(), failures.first().map(|s| json!(s)));
    let missing_t = (0..universe.len()).find(|&i| t.contains(&i) != in_gen(&t_reps, &universe[i]));
    rep.check("torsion-class-is-gen-closed", missing_t.is_none(), missing_t.map(|i| json!(names[i])));
    rep
}

/// Whether `Gen(list) ⊆ add(list)` over the enumerated indecomposables.
pub fn factor_closed(ctx: &Context, list: &Subcat) -> bool {
    gen_of(ctx, &list.indecs).indecs.iter().all(|&i| list.contains(i))
}

/// A basic support τ-tilting module `⊕ modules` together with the vertices
/// of the projectives in its τ-rigid pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportTauTilting {
    pub modules: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl SupportTauTilting {
    pub fn name(&self, ctx: &Context) -> String {
        sum_name(ctx, &self.modules)
    }

    pub fn module(&self, ctx: &Context) -> Rep {
        ctx.sum_of(&self.modules)
    }
}

/// All basic support τ-tilting modules, as τ-rigid pairs `(M, P)` with
/// `|M| + |P| = n`, computed from module-level Hom into translates.
pub fn enumerate_support_tau_tilting(ctx: &Context) -> Vec<SupportTauTilting> {
    let n = ctx.num_vertices();
    let nm = ctx.modules.len();
    let rigid: Vec<usize> = (0..nm).filter(|&i| ctx.modules[i].tau_rigid).collect();
    let tau_hom: Vec<Vec<usize>> = par::map_range(nm, |i| (0..nm).map(|j| modrep::hom_dim(&ctx.modules[i].rep, &ctx.modules[j].tau)).collect());
    // candidates: modules then vertices (offset by nm)
    let cands: Vec<usize> = rigid.iter().copied().chain((0..n).map(|v| nm + v)).collect();
    let ok = |a: usize, b: usize| match (a < nm, b < nm) {
        (true, true) => tau_hom[a][b] == 0 && tau_hom[b][a] == 0,
        (true, false) => ctx.modules[a].rep.dims()[b - nm] == 0,
        (false, true) => ctx.modules[b].rep.dims()[a - nm] == 0,
        (false, false) => true,
    };
    let per_first: Vec<Vec<Vec<usize>>> = par::map_range(cands.len(), |k| {
        let mut out = Vec::new();
        let mut stack = vec![cands[k]];
        cliques(&cands[k + 1..], n, &ok, &mut stack, &mut out);
        out
    });
    per_first
        .into_iter()
        .flatten()
        .map(|c| SupportTauTilting {
            modules: c.iter().copied().filter(|&i| i < nm).collect(),
            vertices: c.iter().copied().filter(|&i| i >= nm).map(|i| i - nm).collect(),
        })
        .collect()
}

fn cliques<F: Fn(usize, usize) -> bool>(rest: &[usize], n: usize, ok: &F, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if stack.len() == n {
        out.push(stack.clone());
        return;
    }
    for (k, &c) in rest.iter().enumerate() {
        if stack.iter().all(|&s| ok(s, c)) {
            stack.push(c);
            cliques(&rest[k + 1..], n, ok, stack, out);
            stack.pop();
        }
    }
}

/// Direct test: τ-rigid, and the number of summands plus the number of
/// vertices outside the support is `n`.
pub fn is_support_tau_tilting(ctx: &Context, modules: &[usize]) -> bool {
    let t = ctx.sum_of(modules);
    let tau_t =
        if modules.is_empty() { t.clone() } else { Rep::sum(&modules.iter().map(|&i| ctx.modules[i].tau.clone()).collect::<Vec<_>>()).expect("same quiver") };
    let mut distinct = modules.to_vec();
    distinct.dedup();
    let outside = t.dims().iter().filter(|&&d| d == 0).count();
    distinct.len() == modules.len() && modrep::hom_dim(&t, &tau_t) == 0 && modules.len() + outside == ctx.num_vertices()
}

/// `(⊥¹Gen T, Gen T, T⊥)`.
#[derive(Clone, Debug)]
pub struct Triple {
    pub t: Vec<usize>,
    pub c: Subcat,
    pub tc: Subcat,
    pub f: Subcat,
}

pub fn triple(ctx: &Context, t: &[usize]) -> Result<Triple> {
    let tc = gen_of(ctx, t);
    let c = ext1_left_perp(ctx, &tc.indecs)?;
    let f = hom_perp(ctx, t);
    Ok(Triple { t: t.to_vec(), c, tc, f })
}

/// The inverse of the triple map, read as `add T = C ∩ T`; the variant
/// `T ∩ F` is evaluated alongside.
#[derive(Clone, Debug, Serialize)]
pub struct TripleInverse {
    pub module: Vec<usize>,
    #[serde(rename = "roundTrips")]
    pub round_trips: bool,
    #[serde(rename = "variantModule")]
    pub variant_module: Vec<usize>,
    #[serde(rename = "variantRoundTrips")]
    pub variant_round_trips: bool,
}

pub fn triple_inverse(ctx: &Context, tr: &Triple) -> TripleInverse {
    let module = tr.c.intersection(&tr.tc);
    let variant_module = tr.tc.intersection(&tr.f);
    let same = |idx: &[usize]| modrep::iso(&ctx.sum_of(idx), &ctx.sum_of(&tr.t));
    TripleInverse { round_trips: same(&module), variant_round_trips: same(&variant_module), module, variant_module }
}

/// Triple checks: lw pair, torsion pair and the round trip.
pub fn triple_report(ctx: &Context, tr: &Triple) -> Report {
    let mut rep = Report::new("triple", sum_name(ctx, &tr.t), ctx.modules.len(), 2);
    let lw = lw_verify(ctx, &tr.c, &tr.tc);
    rep.merge("lw:", &lw);
    let names: Vec<String> = ctx.modules.iter().map(|m| m.name.clone()).collect();
    let tp = torsion_pair_verify(&ctx.reps(), &names, &tr.tc.indecs, &tr.f.indecs);
    rep.merge("torsion:", &tp);
    let inv = triple_inverse(ctx, tr);
    rep.check("inverse-round-trip", inv.round_trips, Some(json!(ctx.name_list(&inv.module))));
    rep.data = json!({
        "C": tr.c.names(ctx),
        "T": tr.tc.names(ctx),
        "F": tr.f.names(ctx),
        "inverse": {
            "CcapT": ctx.name_list(&inv.module),
            "TcapF": ctx.name_list(&inv.variant_module),
            "variantRoundTrips": inv.variant_round_trips,
        },
    });
    rep
}

/// Dimension of `Hom(X, Y)` modulo maps factoring through `add(ideal)`.
pub fn quotient_hom_dim(x: &Rep, y: &Rep, ideal: &[Rep]) -> usize {
    let total = modrep::hom_dim(x, y);
    if total == 0 {
        return 0;
    }
    let through: Vec<ModMap> = ideal
        .iter()
        .flat_map(|i| {
            let fs = hom_basis(x, i);
            let gs = hom_basis(i, y);
            fs.iter().flat_map(|f| gs.iter().map(move |g| g.compose(f))).collect::<Vec<_>>()
        })
        .collect();
    total - span_dim(&through)
}

/// `C/(C∩T) ≃ F`: cardinality of surviving indecomposables, a Hom-dimension
/// preserving bijection, and the candidate functor `X ↦ X / trace(C∩T, X)`.
pub fn quotient_equivalence_check(ctx: &Context, tr: &Triple) -> Report {
    let mut rep = Report::new("quotient-equivalence", sum_name(ctx, &tr.t), ctx.modules.len(), 1);
    let ideal_idx = tr.c.intersection(&tr.tc);
    let ideal: Vec<Rep> = ideal_idx.iter().map(|&i| ctx.modules[i].rep.clone()).collect();
    let survivors: Vec<usize> = tr.c.indecs.iter().copied().filter(|i| !ideal_idx.contains(i)).collect();
    // survivors are exactly the indecomposables that stay nonzero in the quotient
    let nonzero: Vec<usize> = tr.c.indecs.iter().copied().filter(|&i| quotient_hom_dim(&ctx.modules[i].rep, &ctx.modules[i].rep, &ideal) > 0).collect();
    rep.check("survivors-nonzero", nonzero == survivors, Some(json!(ctx.name_list(&nonzero))));
    rep.check("cardinality", survivors.len() == tr.f.len(), Some(json!({"survivors": ctx.name_list(&survivors), "F": tr.f.names(ctx)})));
    let q: Vec<Vec<usize>> =
        survivors.iter().map(|&a| survivors.iter().map(|&b| quotient_hom_dim(&ctx.modules[a].rep, &ctx.modules[b].rep, &ideal)).collect()).collect();
    let hom = ctx.hom_table();
    let fh: Vec<Vec<usize>> = tr.f.indecs.iter().map(|&a| tr.f.indecs.iter().map(|&b| hom[a][b]).collect()).collect();
    let matching = if survivors.len() == tr.f.len() { find_matching(&q, &fh) } else { None };
    rep.check("hom-dimensions", matching.is_some(), Some(json!({"quotient": q, "F": fh})));
    // candidate functor: torsion-free quotient by the trace of C ∩ T
    let images: Vec<Option<usize>> = survivors
        .iter()
        .map(|&i| {
            let m = &ctx.modules[i].rep;
            let (_, inc) = trace(&ideal, m);
            let (img, _) = m.cokernel_of(&inc);
            ctx.module_index(&img).filter(|j| tr.f.contains(*j))
        })
        .collect();
    let functor_ok = images.iter().all(|x| x.is_some()) && {
        let perm: Vec<usize> = images.iter().map(|x| x.expect("checked")).collect();
        let mut s = perm.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == perm.len() && survivors.iter().enumerate().all(|(a, _)| survivors.iter().enumerate().all(|(b, _)| q[a][b] == hom[perm[a]][perm[b]]))
    };
    rep.data = json!({
        "survivors": ctx.name_list(&survivors),
        "F": tr.f.names(ctx),
        "candidateFunctor": {
            "images": images.iter().map(|x| x.map(|j| ctx.modules[j].name.clone())).collect::<Vec<_>>(),
            "matches": functor_ok,
        },
    });
    rep
}

// A bijection `σ` with `q[a][b] = f[σa][σb]`.
fn find_matching(q: &[Vec<usize>], f: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(q: &[Vec<usize>], f: &[Vec<usize>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let a = perm.len();
        if a == q.len() {
            return true;
        }
        for s in 0..f.len() {
            if used[s] {
                continue;
            }
            let fits = (0..a).all(|b| q[a][b] == f[s][perm[b]] && q[b][a] == f[perm[b]][s]) && q[a][a] == f[s][s];
            if fits {
                used[s] = true;
                perm.push(s);
                if go(q, f, perm, used) {
                    return true;
                }
                perm.pop();
                used[s] = false;
            }
        }
        false
    }
    let mut perm = Vec::new();
    let mut used = vec![false; f.len()];
    go(q, f, &mut perm, &mut used).then_some(perm)
}

/// Whether the universal map `A -> T^t`, `t = dim Hom(A, T)`, is a monomorphism.
pub fn is_faithful(ctx: &Context, t: &[usize]) -> bool {
    if t.is_empty() {
        return ctx.alg.regular().is_zero();
    }
    let list: Vec<Rep> = t.iter().map(|&i| ctx.modules[i].rep.clone()).collect();
    left_approx(&list, &ctx.alg.regular(), false).map.is_injective()
}

const COSET_SAMPLE: usize = 64;
const COSET_EXHAUSTIVE: u64 = 256;

/// Whether some left `Gen T`-approximation of `m` is injective with cokernel
/// in `C`: searches `(g, h): M -> T_0 ⊕ X` over the minimal approximation `g`
/// and maps `h` into single members and the universal target.
pub fn injective_left_approx_exists(ctx: &Context, tr: &Triple, m: &Rep, seed: u64) -> bool {
    let t_reps = tr.tc.reps(ctx);
    let g = left_approx(&t_reps, m, true);
    let works = |target: &Rep, map: &ModMap| -> bool { map.is_injective() && tr.c.contains_module(ctx, &target.cokernel_of(map).0) };
    if works(&g.sum, &g.map) {
        return true;
    }
    let universal = left_approx(&t_reps, m, false);
    let mut extras: Vec<(Rep, Option<ModMap>)> = t_reps.iter().map(|x| (x.clone(), None)).collect();
    extras.push((universal.sum.clone(), Some(universal.map.clone())));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (x, fixed) in &extras {
        let (target, incl, _) = Rep::direct_sum(&[g.sum.clone(), x.clone()]).expect("same quiver");
        let base = incl[0].compose(&g.map);
        if let Some(u) = fixed {
            if works(&target, &base.add(&incl[1].compose(u))) {
                return true;
            }
            continue;
        }
        let hs = hom_basis(m, x);
        let f = m.field();
        for coeffs in span::coefficient_vectors(f, hs.len(), COSET_EXHAUSTIVE, COSET_SAMPLE, &mut rng) {
            let h = ModMap::lin_comb(f, &coeffs, &hs, m.dims(), x.dims());
            if works(&target, &base.add(&incl[1].compose(&h))) {
                return true;
            }
        }
    }
    false
}

/// `T` is tilting iff faithful, compared with the cotorsion criterion: every
/// indecomposable admits an injective left approximation with cokernel in `C`.
pub fn tilting_specialization_check(ctx: &Context, tr: &Triple, seed: u64) -> Report {
    let mut rep = Report::new("tilting-specialization", sum_name(ctx, &tr.t), ctx.modules.len(), 1);
    let faithful = is_faithful(ctx, &tr.t);
    let per: Vec<bool> = par::map(&ctx.modules, |m| injective_left_approx_exists(ctx, tr, &m.rep, seed));
    let cotorsion = per.iter().all(|&b| b);
    let blocked: Vec<String> = ctx.modules.iter().zip(&per).filter(|(_, &b)| !b).map(|(m, _)| m.name.clone()).collect();
    rep.record("faithful-iff-injective-approximations", faithful == cotorsion, json!({"faithful": faithful, "cotorsion": cotorsion, "blocked": blocked}));
    rep
}

/// Hasse diagram of the torsion classes `Gen T`, ordered by inclusion.
pub fn torsion_poset_dot(ctx: &Context, stt: &[SupportTauTilting]) -> String {
    let classes: Vec<Subcat> = stt.iter().map(|t| gen_of(ctx, &t.modules)).collect();
    let subset = |a: &Subcat, b: &Subcat| a.indecs.iter().all(|&i| b.contains(i));
    let mut out = String::from("digraph torsion_classes {\n  rankdir=BT;\n");
    for (i, t) in stt.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", t.name(ctx)));
    }
    for a in 0..stt.len() {
        for b in 0..stt.len() {
            if a == b || !subset(&classes[a], &classes[b]) || classes[a].len() == classes[b].len() {
                continue;
            }
            let between = (0..stt.len()).any(|c| {
                c != a
                    && c != b
                    && subset(&classes[a], &classes[c])
                    && subset(&classes[c], &classes[b])
                    && classes[c].len() != classes[a].len()
                    && classes[c].len() != classes[b].len()
            });
            if !between {
                out.push_str(&format!("  n{a} -> n{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn triple_json(ctx: &Context, tr: &Triple) -> Value {
    json!({"T": sum_name(ctx, &tr.t), "C": tr.c.names(ctx), "torsion": tr.tc.names(ctx), "F": tr.f.names(ctx)})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::modrep::EnumConfig;

    fn ctx() -> Context {
        Context::new(Algebra::from_json(include_str!("../fixtures/a3_rel.json")).unwrap(), EnumConfig::default()).unwrap()
    }

    fn idx(c: &Context, names: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = names.iter().map(|n| c.module_by_name(n).unwrap()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn traces_on_simple_one() {
        let c = ctx();
        let s1 = &c.modules[c.module_by_name("S_1").unwrap()].rep;
        let t = c.sum_of(&idx(&c, &["P_1", "P_2", "S_2"]));
        assert_eq!(trace(&[t], s1).0.total_dim(), 1);
        let p2 = c.modules[c.module_by_name("P_2").unwrap()].rep.clone();
        assert_eq!(trace(&[p2], s1).0.total_dim(), 0);
    }

    #[test]
    fn example_classes() {
        let c = ctx();
        let t = idx(&c, &["P_1", "P_2", "S_2"]);
        let tr = triple(&c, &t).unwrap();
        assert_eq!(tr.tc.indecs, idx(&c, &["P_1", "P_2", "S_2", "S_1"]));
        assert_eq!(tr.c.indecs, idx(&c, &["P_3", "P_2", "P_1", "S_2"]));
        assert!(triple_inverse(&c, &tr).round_trips);
    }

    #[test]
    fn support_tau_tilting_count_matches_silting() {
        let c = ctx();
        let stt = enumerate_support_tau_tilting(&c);
        assert_eq!(stt.len(), crate::twoterm::enumerate_two_term_silting(&c).unwrap().len());
        assert!(stt.iter().all(|s| is_support_tau_tilting(&c, &s.modules)));
    }
}
