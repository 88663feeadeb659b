mod support;

use proptest::prelude::*;
use spinterp::blackbox::{make_instance, InstanceConfig};
use spinterp::decode::{cheb_probe_plan, decode_e, power_probe_plan};
use spinterp::{Basis, PrimeField, SparsePoly};

use support::naive_eval;

fn basis_strategy() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::Power), Just(Basis::Chebyshev1)]
}

/// Mismatches of `f` against every probe the decoder made, recomputed from
/// the hidden polynomial and the error plan with the naive evaluator.
fn naive_mismatches(
    f: &SparsePoly,
    hidden: &SparsePoly,
    errors: &std::collections::BTreeMap<spinterp::Felt, spinterp::Felt>,
    points: &[spinterp::Felt],
) -> usize {
    points
        .iter()
        .filter(|&&x| {
            let seen = errors.get(&x).copied().unwrap_or_else(|| naive_eval(hidden, x).unwrap());
            naive_eval(f, x).unwrap() != seen
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn every_listed_candidate_is_consistent(basis in basis_strategy(), b in 1usize..=3, e in 0usize..=4, seed in any::<u64>()) {
        let d = 30;
        let cfg = InstanceConfig { p: 10007, basis, b, d, e, t: None };
        let (inst, _) = make_instance(&cfg, seed).unwrap();
        let plan = match basis {
            Basis::Power => power_probe_plan(inst.field, b, d, e, seed).unwrap(),
            Basis::Chebyshev1 => cheb_probe_plan(inst.field, b, d, e, seed).unwrap(),
        };
        let points = plan.points();
        let mut oracle = inst.oracle().unwrap();
        let res = decode_e(&mut oracle, basis, b, d, e, inst.field, seed).unwrap();
        prop_assert_eq!(res.probes_used, points.len());
        prop_assert!(res.candidates.iter().any(|c| c.poly == inst.hidden));
        prop_assert!(res.candidates.len() <= res.list_bound);
        for c in &res.candidates {
            prop_assert!(c.poly.sparsity() <= b);
            prop_assert!(c.poly.max_abs_degree() <= d);
            prop_assert_eq!(c.mismatches.len(), naive_mismatches(&c.poly, &inst.hidden, &inst.errors, &points));
            prop_assert!(c.mismatches.len() <= e);
        }
    }

    #[test]
    fn library_evaluation_matches_naive(basis in basis_strategy(), terms in prop::collection::vec((0i64..200, -50i64..50), 0..6), x in 1u64..10007) {
        let f = PrimeField::new(10007).unwrap();
        let signed: Vec<(i64, i64)> = terms
            .iter()
            .enumerate()
            .map(|(k, &(d, c))| if basis == Basis::Power && k % 2 == 1 { (-d, c) } else { (d, c) })
            .collect();
        let poly = SparsePoly::from_ints(f, basis, &signed).unwrap();
        let x = f.elem(x);
        prop_assert_eq!(poly.eval(x).unwrap(), naive_eval(&poly, x).unwrap());
    }
}

#[test]
fn decoding_is_deterministic() {
    for basis in [Basis::Power, Basis::Chebyshev1] {
        let cfg = InstanceConfig { p: 10007, basis, b: 3, d: 40, e: 4, t: None };
        let (inst, _) = make_instance(&cfg, 99).unwrap();
        let run = || {
            let mut oracle = inst.oracle().unwrap();
            let res = decode_e(&mut oracle, basis, 3, 40, 4, inst.field, 99).unwrap();
            (
                res.candidates.iter().map(|c| (c.poly.clone(), c.mismatches.clone())).collect::<Vec<_>>(),
                oracle.probe_log().to_vec(),
            )
        };
        assert_eq!(run(), run());
    }
}
