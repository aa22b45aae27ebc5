//! Acceptance suite: one line per criterion, exit status nonzero if any fails.
//! Every comparison is exact (integer dimensions and counts, tolerance 0).

use std::time::Instant;

use tau_cotorsion::algebra::Algebra;
use tau_cotorsion::bbridge::bb_report;
use tau_cotorsion::context::Context;
use tau_cotorsion::cotorsion::{galois_pairs, hrs_check, induced_torsion_pair, pair_of_silting, verify_complete_cotorsion, CotorsionPair, Universe};
use tau_cotorsion::modrep::EnumConfig;
use tau_cotorsion::report::Report;
use tau_cotorsion::suite::{count_check, explicit_pair, tau_e_check};
use tau_cotorsion::torsion::{
    enumerate_support_tau_tilting, factor_closed, is_support_tau_tilting, lw_verify, quotient_equivalence_check, sum_name, tilting_specialization_check,
    triple, triple_report, Subcat, SupportTauTilting,
};
use tau_cotorsion::twoterm::{enumerate_two_term_silting, SiltingObject};

const SEED: u64 = 20;
const FIXTURES: [&str; 5] = ["k", "dual_numbers", "a2", "a3", "a3_rel"];
const EXAMPLE: &str = "a3_rel";

struct Fixture {
    name: &'static str,
    ctx: Context,
    stt: Vec<SupportTauTilting>,
    silting: Vec<SiltingObject>,
}

fn load(name: &'static str) -> Fixture {
    let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let alg = Algebra::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    let ctx = Context::new(alg, EnumConfig::default()).unwrap();
    let stt = enumerate_support_tau_tilting(&ctx);
    let silting = enumerate_two_term_silting(&ctx).unwrap();
    Fixture { name, ctx, stt, silting }
}

/// Tally of cases with the first failure kept as a witness.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn add(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn report(&mut self, fx: &str, r: &Report) {
        self.add(r.passed(), || format!("{fx}: {} {} {:?}", r.kind, r.pair, r.failed_checks()));
    }

    fn pass(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    fn detail(&self) -> String {
        match &self.first {
            None => format!("{} cases", self.cases),
            Some(w) => format!("{}/{} cases failed, first: {w}", self.failures, self.cases),
        }
    }
}

fn criterion_1(fx: &Fixture) -> (bool, String) {
    let ctx = &fx.ctx;
    let mut names: Vec<String> = ctx.modules.iter().map(|m| m.name.clone()).collect();
    names.sort();
    let names_ok = names == ["P_1", "P_2", "P_3", "S_1", "S_2"];
    let p3 = ctx.module_by_name("P_3");
    let alias_ok = p3.is_some() && p3 == ctx.module_by_name("S_3");
    let mut pairs_ok = true;
    for t in ["P_2,P_1,S_2", "P_2,P_1,S_2,S_1"] {
        let (c, t) = explicit_pair(ctx, "P_3,P_2,P_1,S_2", t).unwrap();
        pairs_ok &= lw_verify(ctx, &c, &t).passed();
    }
    (names_ok && alias_ok && pairs_ok, format!("modules {names:?}, P_3=S_3 {alias_ok}, both lw pairs {pairs_ok}"))
}

fn criterion_2(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        for s in &fx.stt {
            let tr = triple(&fx.ctx, &s.modules).unwrap();
            t.report(fx.name, &triple_report(&fx.ctx, &tr));
        }
    }
    t
}

fn criterion_3(fxs: &[Fixture]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for fx in fxs {
        let r = count_check(&fx.ctx, SEED).unwrap();
        ok &= r.passed();
        parts.push(format!("{} {}", fx.name, r.data["silting"]));
        if fx.name == "a2" {
            ok &= r.data["silting"] == 5;
        }
    }
    (ok, parts.join(", "))
}

fn criterion_4(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        for s in &fx.silting {
            let pair = pair_of_silting(&fx.ctx, &s.summands);
            let (_, r) = induced_torsion_pair(&fx.ctx, &pair).unwrap();
            let ok = r.get("h0-v-equals-gen-h0-p").is_some_and(|c| c.pass);
            t.add(ok, || format!("{}: {}", fx.name, r.pair));
        }
    }
    t
}

fn criterion_5(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        t.report(fx.name, &tau_e_check(&fx.ctx));
    }
    t
}

fn criterion_6(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        for s in &fx.silting {
            t.report(fx.name, &hrs_check(&fx.ctx, s, SEED));
        }
    }
    t
}

fn criterion_7(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        for s in &fx.stt {
            let tr = triple(&fx.ctx, &s.modules).unwrap();
            t.report(fx.name, &quotient_equivalence_check(&fx.ctx, &tr));
        }
    }
    t
}

fn criterion_8(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        for s in &fx.silting {
            let r = bb_report(&fx.ctx, s, SEED).unwrap();
            let required = ["end-dimension", "y-equivalence-hom-dims", "x-equivalence-hom-dims"];
            let torsion = r.checks.iter().any(|c| c.name.starts_with("torsion:"));
            let present = required.iter().all(|n| r.get(n).is_some());
            t.add(present && torsion && r.passed(), || format!("{}: {} {:?}", fx.name, r.pair, r.failed_checks()));
        }
    }
    t
}

fn criterion_9(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    for fx in fxs {
        for s in &fx.stt {
            let tr = triple(&fx.ctx, &s.modules).unwrap();
            t.report(fx.name, &tilting_specialization_check(&fx.ctx, &tr, SEED));
        }
    }
    t
}

fn criterion_10(fxs: &[Fixture]) -> Tally {
    let mut t = Tally::default();
    let ex = fxs.iter().find(|f| f.name == EXAMPLE).unwrap();
    let ctx = &ex.ctx;

    // (mod A, add of injectives): lw, but the right side is not closed under quotients.
    let all = Subcat::explicit((0..ctx.modules.len()).collect());
    let inj = Subcat::explicit((0..ctx.modules.len()).filter(|&i| ctx.modules[i].injective.is_some()).collect());
    t.add(lw_verify(ctx, &all, &inj).passed(), || "(mod A, inj) is not lw".into());
    t.add(!factor_closed(ctx, &inj), || "injectives are factor closed".into());

    // Dropping one object from the left list of a valid lw pair breaks it with a named check.
    let (c, tt) = explicit_pair(ctx, "P_3,P_2,P_1,S_2", "P_2,P_1,S_2").unwrap();
    for drop in &c.indecs {
        let bad = Subcat::explicit(c.indecs.iter().copied().filter(|i| i != drop).collect());
        let r = lw_verify(ctx, &bad, &tt);
        t.add(!r.passed() && !r.failed_checks().is_empty(), || format!("C without {} still verifies", ctx.modules[*drop].name));
    }

    // A τ-tilting module (sincere, n summands) with one more summand is not support τ-tilting.
    for s in ex.stt.iter().filter(|s| s.vertices.is_empty()) {
        for extra in (0..ctx.modules.len()).filter(|i| !s.modules.contains(i)) {
            let mut more = s.modules.clone();
            more.push(extra);
            more.sort_unstable();
            t.add(!is_support_tau_tilting(ctx, &more), || format!("{} passes", sum_name(ctx, &more)));
        }
    }

    // Dropping a non-seed object from V of a complete cotorsion pair breaks it.
    let universe = Universe::two_term(ctx);
    for s in &ex.silting {
        let pair = pair_of_silting(ctx, &s.summands);
        let Some(k) = pair.v.iter().position(|i| !pair.seed.contains(i)) else { continue };
        let mut v = pair.v.clone();
        v.remove(k);
        let corrupt = CotorsionPair { seed: pair.seed.clone(), u: pair.u.clone(), v };
        let r = verify_complete_cotorsion(&universe, &corrupt, ctx.cap, SEED);
        t.add(!r.passed(), || format!("corrupted V of {} verifies", r.pair));
    }

    // Galois-closed pairs other than the silting ones are rejected.
    let pairs = galois_pairs(&universe).unwrap();
    let rejected = pairs.iter().filter(|p| !verify_complete_cotorsion(&universe, p, ctx.cap, SEED).passed()).count();
    t.add(rejected == pairs.len() - ex.silting.len(), || format!("{rejected} of {} Galois pairs rejected", pairs.len()));
    t
}

/// A named criterion and its evaluation.
type Criterion<'a> = (&'a str, Box<dyn Fn() -> (bool, String) + 'a>);

fn main() {
    let start = Instant::now();
    let fxs: Vec<Fixture> = FIXTURES.into_iter().map(load).collect();
    let example = fxs.iter().find(|f| f.name == EXAMPLE).unwrap();
    let tally = |t: Tally| (t.pass(), t.detail());
    let criteria: Vec<Criterion> = vec![
        ("example modules and lw pairs", Box::new(|| criterion_1(example))),
        ("triple round trip", Box::new(|| tally(criterion_2(&fxs)))),
        ("independent counts agree", Box::new(|| criterion_3(&fxs))),
        ("H0 of V(P) is Gen H0(P)", Box::new(|| tally(criterion_4(&fxs)))),
        ("tau versus E and the AR formula", Box::new(|| tally(criterion_5(&fxs)))),
        ("shifted pair in add P * add P[1]", Box::new(|| tally(criterion_6(&fxs)))),
        ("quotient equivalences", Box::new(|| tally(criterion_7(&fxs)))),
        ("endomorphism side", Box::new(|| tally(criterion_8(&fxs)))),
        ("tilting iff faithful", Box::new(|| tally(criterion_9(&fxs)))),
        ("negative controls", Box::new(|| tally(criterion_10(&fxs)))),
    ];
    let mut failed = 0;
    for (i, (what, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let (pass, detail) = run();
        println!("criterion {:>2} {} | {what} | {detail} | tolerance 0 | {:.1?}", i + 1, if pass { "PASS" } else { "FAIL" }, t0.elapsed());
        failed += usize::from(!pass);
    }
    println!("acceptance: {} of {} criteria pass in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
