//! Whole-algebra verification runs, and resolution of the object names used
//! on the command line.

use serde_json::{json, Value};

use crate::bbridge::bb_report;
use crate::context::Context;
use crate::cotorsion::{
    cotorsion_report, galois_pairs, h0_quotient_check, hrs_check, induced_torsion_pair, torsion_classes, verify_complete_cotorsion, Universe,
};
use crate::error::{Error, Result};
use crate::modrep;
use crate::par;
use crate::report::Report;
use crate::torsion::{
    enumerate_support_tau_tilting, is_support_tau_tilting, quotient_equivalence_check, sum_name, tilting_specialization_check, triple, triple_report, Subcat,
};
use crate::twoterm::{enumerate_two_term_silting, SiltingObject};

fn split_names(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty() && *s != "0").collect()
}

/// Module indices for a comma separated list of names or keys; `0` or an
/// empty list is the zero module.
pub fn resolve_modules(ctx: &Context, list: &str) -> Result<Vec<usize>> {
    split_names(list).into_iter().map(|n| ctx.module_by_name(n).ok_or_else(|| Error::UnknownName(n.into()))).collect()
}

/// Two-term universe indices for names such as `P(S_2)` or `P_3[1]`.
pub fn resolve_two_term(ctx: &Context, list: &str) -> Result<Vec<usize>> {
    let nm = ctx.modules.len();
    split_names(list)
        .into_iter()
        .map(|n| {
            if let Some(i) = ctx.two_term_names.iter().position(|t| t == n) {
                return Ok(i);
            }
            if let Some(inner) = n.strip_prefix("P(").and_then(|r| r.strip_suffix(')')) {
                return ctx.module_by_name(inner).ok_or_else(|| Error::UnknownName(n.into()));
            }
            if let Some(v) = n.strip_prefix("P_").and_then(|r| r.strip_suffix("[1]")) {
                return ctx.alg.quiver().vertices().iter().position(|x| x == v).map(|v| nm + v).ok_or_else(|| Error::UnknownName(n.into()));
            }
            Err(Error::UnknownName(n.into()))
        })
        .collect()
}

/// The enumerated silting object with exactly these summands, if any.
pub fn find_silting(ctx: &Context, summands: &[usize]) -> Result<Option<SiltingObject>> {
    let mut want = summands.to_vec();
    want.sort_unstable();
    Ok(enumerate_two_term_silting(ctx)?.into_iter().find(|s| {
        let mut got = s.summands.clone();
        got.sort_unstable();
        got == want
    }))
}

/// A report with a single failing check, for objects that fail a precondition.
pub fn precondition_failure(kind: &str, label: &str, ctx: &Context, check: &str) -> Report {
    let mut rep = Report::new(kind, label, ctx.modules.len(), ctx.cap);
    rep.check(check, false, None);
    rep
}

/// `Hom(M, τN) = 0` iff `E(P_N, P_M) = 0` over all indecomposable pairs, and
/// `Ext¹(M, N)` from presentations agrees with the stable Hom into `τM`.
pub fn tau_e_check(ctx: &Context) -> Report {
    let mut rep = Report::new("tau-e-correspondence", ctx.alg.name(), ctx.modules.len(), 1);
    let n = ctx.modules.len();
    let e = ctx.e_table();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let bad = par::filter_map(&pairs, |&(m, k)| {
        let hom_zero = modrep::hom_dim(&ctx.modules[m].rep, &ctx.modules[k].tau) == 0;
        (hom_zero != (e[k][m] == 0)).then_some((m, k))
    });
    rep.check("hom-tau-vanishing-iff-e-vanishing", bad.is_empty(), bad.first().map(|&(m, k)| json!({"M": ctx.modules[m].name, "N": ctx.modules[k].name})));
    let (ext, ar) = (ctx.ext_table(), ctx.ext_ar_table());
    let bad: Vec<&(usize, usize)> = pairs.iter().filter(|&&(i, j)| ext[i][j] != ar[i][j]).collect();
    rep.check(
        "ext-equals-stable-hom",
        bad.is_empty(),
        bad.first().map(|&&(i, j)| json!({"M": ctx.modules[i].name, "N": ctx.modules[j].name, "ext": ext[i][j], "stable": ar[i][j]})),
    );
    rep
}

/// Counts from independent enumerations: two-term silting objects, support
/// τ-tilting modules, complete cotorsion pairs among all Galois-closed pairs
/// of the two-term universe, and torsion classes of `mod A`.
pub fn count_check(ctx: &Context, seed: u64) -> Result<Report> {
    let mut rep = Report::new("counts", ctx.alg.name(), ctx.two_term.len(), ctx.cap);
    let silting = enumerate_two_term_silting(ctx)?.len();
    let stt = enumerate_support_tau_tilting(ctx).len();
    let universe = Universe::two_term(ctx);
    let pairs = galois_pairs(&universe)?;
    let complete = par::map(&pairs, |p| verify_complete_cotorsion(&universe, p, ctx.cap, seed).passed()).into_iter().filter(|&b| b).count();
    let torsion = torsion_classes(ctx)?.len();
    let counts = json!({"silting": silting, "supportTauTilting": stt, "completeCotorsion": complete, "galoisPairs": pairs.len(), "torsionClasses": torsion});
    rep.record("counts-agree", silting == stt && stt == complete && complete == torsion, counts.clone());
    rep.data = counts;
    Ok(rep)
}

fn summary(rep: &Report) -> Value {
    json!(rep.failed_checks())
}

/// Every suite on one algebra; one check per sub-report, full sub-reports in
/// the data section.
pub fn verify_all(ctx: &Context, seed: u64) -> Result<Report> {
    let mut rep = Report::new("verify-all", ctx.alg.name(), ctx.modules.len(), ctx.cap);
    let mut reports: Vec<Value> = Vec::new();
    let mut add = |rep: &mut Report, name: String, sub: Report| {
        rep.check(&name, sub.passed(), Some(summary(&sub)));
        reports.push(sub.to_json());
    };

    add(&mut rep, "tau-e-correspondence".into(), tau_e_check(ctx));
    add(&mut rep, "counts".into(), count_check(ctx, seed)?);
    add(&mut rep, "h0-quotient".into(), h0_quotient_check(ctx));

    for t in enumerate_support_tau_tilting(ctx) {
        let name = sum_name(ctx, &t.modules);
        if !is_support_tau_tilting(ctx, &t.modules) {
            add(&mut rep, format!("stt {name}"), precondition_failure("support-tau-tilting", &name, ctx, "support-tau-tilting"));
            continue;
        }
        let tr = triple(ctx, &t.modules)?;
        add(&mut rep, format!("triple {name}"), triple_report(ctx, &tr));
        add(&mut rep, format!("quotient {name}"), quotient_equivalence_check(ctx, &tr));
        add(&mut rep, format!("tilting {name}"), tilting_specialization_check(ctx, &tr, seed));
    }

    for s in enumerate_two_term_silting(ctx)? {
        let (pair, cot) = cotorsion_report(ctx, &s, seed);
        let label = cot.pair.clone();
        add(&mut rep, format!("cotorsion {label}"), cot);
        let (_, induced) = induced_torsion_pair(ctx, &pair)?;
        add(&mut rep, format!("induced {label}"), induced);
        add(&mut rep, format!("hrs {label}"), hrs_check(ctx, &s, seed));
        add(&mut rep, format!("bb {label}"), bb_report(ctx, &s, seed)?);
    }
    rep.data = json!({"algebra": ctx.alg.name(), "seed": seed, "reports": reports});
    Ok(rep)
}

/// `(C, T)` from explicit name lists.
pub fn explicit_pair(ctx: &Context, c: &str, t: &str) -> Result<(Subcat, Subcat)> {
    Ok((Subcat::explicit(resolve_modules(ctx, c)?), Subcat::explicit(resolve_modules(ctx, t)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::modrep::EnumConfig;

    fn ctx() -> Context {
        Context::new(Algebra::from_json(include_str!("../fixtures/a3_rel.json")).unwrap(), EnumConfig::default()).unwrap()
    }

    #[test]
    fn names_resolve() {
        let c = ctx();
        assert_eq!(resolve_modules(&c, "0").unwrap(), Vec::<usize>::new());
        assert_eq!(resolve_modules(&c, "P_3").unwrap(), resolve_modules(&c, "S_3").unwrap());
        assert!(matches!(resolve_modules(&c, "Q_9"), Err(Error::UnknownName(_))));
        let idx = resolve_two_term(&c, "P(S_3), P_1[1]").unwrap();
        assert_eq!(c.two_term_names[idx[0]], "P(P_3)");
        assert_eq!(c.two_term_names[idx[1]], "P_1[1]");
    }

    #[test]
    fn tau_e_and_counts() {
        let c = ctx();
        assert!(tau_e_check(&c).passed());
        let counts = count_check(&c, 1).unwrap();
        assert!(counts.passed());
        assert_eq!(counts.data["silting"], 12);
    }

    #[test]
    fn non_silting_is_not_found() {
        let c = ctx();
        let idx = resolve_two_term(&c, "P(P_1),P_1[1]").unwrap();
        assert!(find_silting(&c, &idx).unwrap().is_none());
    }
}
