use num_bigint::BigInt;
use proptest::prelude::*;

use wildcolor::sequences::{evaluate_identity, format_reports, index_grid};
use wildcolor::{
    a_seq, b_seq, classic_sequence, cross_check_graphs, hankel_det_b, minimal_recurrence, verify_identity,
    ChiEngine, Classic, IdentityId, SeqParams,
};

#[test]
fn sequences_match_graphs_on_the_grid() {
    let mut engine = ChiEngine::default();
    for p in SeqParams::grid(4) {
        cross_check_graphs(p, 10, &mut engine).unwrap();
    }
}

#[test]
fn hankel_closed_form() {
    for p in SeqParams::grid(6) {
        assert!(hankel_det_b(p).agrees(), "{p}");
    }
}

#[test]
fn minimal_order_dichotomy() {
    for p in SeqParams::grid(4) {
        let r = minimal_recurrence(&b_seq(p, 12), 3).unwrap().expect("order 3 always fits");
        let short = p.k() <= 1 || p.l() == 0;
        assert_eq!(r.order() <= 2, short, "{p}: {r}");
        if !short {
            let expected = [p.k() + p.l() - 2, p.k() + 2 * p.l() - 1, p.l()];
            let got: Vec<BigInt> = r.coeffs().iter().map(|c| c.to_integer()).collect();
            assert_eq!(got, expected.map(BigInt::from).to_vec());
        }
    }
}

#[test]
fn path_sequence_has_order_two() {
    for p in SeqParams::grid(4).filter(|p| p.l() > 0) {
        let values = a_seq(p, 12).split_off(1);
        let r = minimal_recurrence(&values, 3).unwrap().unwrap();
        assert!(r.order() <= 2, "{p}: {r}");
    }
}

#[test]
fn shifted_sum_recurrence() {
    for p in SeqParams::grid(4) {
        let b = b_seq(p, 20);
        let c = |n: usize| &b[n - 1] + &b[n - 2];
        let step = BigInt::from(p.k() + p.l()) - 1;
        let l = BigInt::from(p.l());
        for n in 4..=20 {
            assert_eq!(c(n), &step * c(n - 1) + &l * c(n - 2), "{p} n={n}");
        }
        assert!(verify_identity(IdentityId::L3_2, p, 20).unwrap().passed());
        assert!(verify_identity(IdentityId::L3_1, p, 20).unwrap().passed());
    }
}

#[test]
fn three_graph_identities() {
    for l in 1..=4 {
        let p = SeqParams::new(1, l).unwrap();
        for id in [IdentityId::T1_1, IdentityId::T1_2, IdentityId::T1_3, IdentityId::T1_4, IdentityId::T1_5, IdentityId::P1] {
            let report = verify_identity(id, p, 20).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0);
        }
    }
}

#[test]
fn classical_identities() {
    let p = SeqParams::new(1, 1).unwrap();
    let reports: Vec<_> = [IdentityId::C1, IdentityId::C2, IdentityId::C3, IdentityId::C4, IdentityId::C5, IdentityId::FL, IdentityId::PELL]
        .into_iter()
        .map(|id| verify_identity(id, p, 25).unwrap())
        .collect();
    let text = format_reports(&reports);
    assert!(text.lines().last().unwrap().starts_with("ok=true"), "{text}");
}

#[test]
fn lucas_from_cycles_and_fibonacci_from_paths() {
    let p = SeqParams::new(1, 1).unwrap();
    let fib = classic_sequence(Classic::Fibonacci, 32);
    let lucas = classic_sequence(Classic::Lucas, 30);
    let a = a_seq(p, 30);
    let b = b_seq(p, 30);
    for n in 1..=30 {
        assert_eq!(a[n], fib[n + 2]);
        assert_eq!(b[n - 1], lucas[n - 1]);
    }
}

#[test]
fn wrong_identities_are_caught() {
    // T1.5 with the proof-step index t-1 in the last term is false by itself
    let p = SeqParams::new(1, 2).unwrap();
    let (lhs, rhs) = evaluate_identity(IdentityId::P1, p, &[2, 2, 2]).unwrap();
    assert_eq!(lhs, rhs);
    let (t15, _) = evaluate_identity(IdentityId::T1_5, p, &[2, 2, 2]).unwrap();
    assert_eq!(t15, vec![BigInt::from(1224)]);
    // the proof-step right side differs from the T1.5 right side unless a_{t-1} = a_{t-2}
    let (_, p1_rhs) = evaluate_identity(IdentityId::P1, p, &[2, 2, 2]).unwrap();
    assert_ne!(p1_rhs, t15);
}

proptest! {
    #[test]
    fn backward_step_recovers_one(l in 1u32..50) {
        let p = SeqParams::new(1, l).unwrap();
        let a = a_seq(p, 2);
        let l = BigInt::from(l);
        // a_0 = (a_2 - l a_1) / l
        prop_assert_eq!((&a[2] - &l * &a[1]) / &l, BigInt::from(1));
    }

    #[test]
    fn grids_only_hold_in_domain_points(max in 0u64..30) {
        for id in IdentityId::ALL {
            for idx in index_grid(id, max) {
                prop_assert!(id.principal_index(&idx) <= max);
                for (&(_, min), &v) in id.domain().iter().zip(&idx) {
                    prop_assert!(v >= min);
                }
            }
        }
    }
}
