//! Property tests: exact linear algebra against brute-force oracles, and
//! structural invariants of modules and two-term complexes.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use tau_cotorsion::algebra::Algebra;
use tau_cotorsion::complex::hom_k;
use tau_cotorsion::context::Context;
use tau_cotorsion::exactla::{Fp, FpMatrix};
use tau_cotorsion::modrep::{self, decompose, is_indecomposable, EnumConfig, Rep};

fn matrix(p: u32, max: usize) -> impl Strategy<Value = FpMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p as i64, r * c).prop_map(move |e| FpMatrix::from_entries(Fp::new(p).unwrap(), r, c, e).unwrap())
    })
}

fn any_matrix() -> impl Strategy<Value = FpMatrix> {
    prop_oneof![matrix(2, 6), matrix(3, 5), matrix(5, 4)]
}

/// Rank over F_2 as log2 of the size of the row space, by enumerating every
/// combination of rows.
fn f2_rank_oracle(m: &FpMatrix) -> usize {
    let rows: Vec<u64> = (0..m.rows()).map(|r| m.row(r).iter().enumerate().fold(0u64, |acc, (c, &x)| acc | (u64::from(x) << c))).collect();
    let mut span = BTreeSet::new();
    for mask in 0u32..(1 << rows.len()) {
        span.insert(rows.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |acc, (_, &r)| acc ^ r));
    }
    span.len().trailing_zeros() as usize
}

fn ctx(name: &str) -> &'static Context {
    static A3: OnceLock<Context> = OnceLock::new();
    static A3_REL: OnceLock<Context> = OnceLock::new();
    let (cell, text) = match name {
        "a3" => (&A3, include_str!("../fixtures/a3.json")),
        _ => (&A3_REL, include_str!("../fixtures/a3_rel.json")),
    };
    cell.get_or_init(|| Context::new(Algebra::from_json(text).unwrap(), EnumConfig::default()).unwrap())
}

/// A random representation of the linearly oriented A_3 quiver over F_2.
fn a3_rep() -> impl Strategy<Value = Rep> {
    proptest::collection::vec(0usize..=2, 3).prop_flat_map(|dims| {
        let q = ctx("a3").alg.quiver().clone();
        let sizes: Vec<usize> = q.arrows().iter().map(|a| dims[a.source] * dims[a.target]).collect();
        let total: usize = sizes.iter().sum();
        proptest::collection::vec(0i64..2, total).prop_map(move |e| {
            let f = Fp::new(2).unwrap();
            let mut at = 0;
            let mats = q
                .arrows()
                .iter()
                .zip(&sizes)
                .map(|(a, &n)| {
                    let m = FpMatrix::from_entries(f, dims[a.target], dims[a.source], e[at..at + n].to_vec()).unwrap();
                    at += n;
                    m
                })
                .collect();
            Rep::new(q.clone(), f, dims.clone(), mats).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_matches_f2_oracle(m in matrix(2, 6)) {
        prop_assert_eq!(m.rank(), f2_rank_oracle(&m));
    }

    #[test]
    fn reduce_is_idempotent(m in any_matrix()) {
        let once = m.reduce();
        let twice = once.rref.reduce();
        prop_assert_eq!(&twice.rref, &once.rref);
        prop_assert_eq!(twice.rank, once.rank);
    }

    #[test]
    fn rank_nullity_and_transpose(m in any_matrix()) {
        let r = m.reduce();
        prop_assert_eq!(r.rank, m.rank());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(r.rank + r.nullity(), m.cols());
        for k in &r.kernel {
            prop_assert!(m.mul_vec(k).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_round_trip(m in any_matrix(), seed in any::<u64>()) {
        let p = m.field().p();
        let x: Vec<u32> = (0..m.cols()).map(|i| (seed.rotate_left(i as u32 * 7) % u64::from(p)) as u32).collect();
        let b = m.mul_vec(&x);
        let y = m.reduce().solve(&b);
        prop_assert!(y.is_some());
        prop_assert_eq!(m.mul_vec(&y.unwrap()), b);
    }

    #[test]
    fn decomposition_invariants(m in a3_rep()) {
        let parts = decompose(&m);
        let mut dims = vec![0usize; 3];
        for s in &parts {
            prop_assert!(is_indecomposable(s));
            for (d, x) in dims.iter_mut().zip(s.dims()) {
                *d += x;
            }
        }
        prop_assert_eq!(&dims, m.dims());
        if !parts.is_empty() {
            prop_assert!(modrep::iso(&Rep::sum(&parts).unwrap(), &m));
        }
    }

    #[test]
    fn two_term_hom_vanishes_outside_degrees_minus_one_to_one(i in 0usize..64, j in 0usize..64) {
        let c = ctx("a3_rel");
        let n = c.two_term.len();
        let (x, y) = (c.two_term[i % n].to_complex(), c.two_term[j % n].to_complex());
        prop_assert_eq!(hom_k(&x, &y, 2).dim(), 0);
        prop_assert_eq!(hom_k(&x, &y, -2).dim(), 0);
    }

    #[test]
    fn e_vanishing_matches_hom_into_tau(name in prop_oneof![Just("a3"), Just("a3_rel")], i in 0usize..64, j in 0usize..64) {
        let c = ctx(name);
        let n = c.modules.len();
        let (m, k) = (i % n, j % n);
        let hom = modrep::hom_dim(&c.modules[k].rep, &c.modules[m].tau);
        prop_assert_eq!(c.e_table()[m][k] == 0, hom == 0);
    }
}
