use hyperconn::conditions::{check, Mode, TheoremId, Verdict};
use hyperconn::degseq::DegreeSequence;
use hyperconn::realizations::RealizationQuery;
use proptest::prelude::*;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// (r, sorted degrees) with every entry at most C(n-1, r-1).
fn sequence(max_n: usize) -> impl Strategy<Value = (usize, Vec<u64>)> {
    (2usize..=3, 2usize..=max_n).prop_flat_map(|(r, n)| {
        let n = n.max(r + 1);
        let cap = binom(n as u64 - 1, r as u64 - 1);
        (Just(r), (0..=cap).prop_flat_map(move |hi| proptest::collection::vec(0..=hi, n)))
    })
}

/// Like [`sequence`] but with entries in the upper half of the range, where
/// the partition conditions tend to hold.
fn dense_sequence(max_n: usize) -> impl Strategy<Value = (usize, Vec<u64>)> {
    (2usize..=3, 2usize..=max_n).prop_flat_map(|(r, n)| {
        let n = n.max(r + 1);
        let cap = binom(n as u64 - 1, r as u64 - 1);
        (Just(r), proptest::collection::vec(cap / 2..=cap, n))
    })
}

fn seq(r: usize, v: &[u64]) -> DegreeSequence {
    DegreeSequence::from_degrees(v, r).unwrap()
}

fn key(v: &Verdict) -> (bool, Option<usize>) {
    (v.is_satisfied(), v.j())
}

/// 1-based entry with index <= 0 reported as absent.
fn entry(d: &DegreeSequence, idx: i64) -> Option<u64> {
    (idx >= 1).then(|| d.get(idx as usize))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn two_edge_conditions_agree((r, v) in sequence(14)) {
        let d = seq(r, &v);
        let t22 = check(TheoremId::T22, &d, None, Mode::Sound).unwrap();
        let t23 = check(TheoremId::T23, &d, Some(2), Mode::Sound).unwrap();
        let c25 = check(TheoremId::C25, &d, None, Mode::Sound).unwrap();
        prop_assert_eq!(key(&t22), key(&t23));
        prop_assert_eq!(key(&t22), key(&c25));
    }

    #[test]
    fn partition_conditions_imply_single_tuple((r, v) in dense_sequence(14), k in 1u64..=3) {
        let d = seq(r, &v);
        if !check(TheoremId::T23, &d, Some(k), Mode::Sound).unwrap().is_satisfied() {
            return Ok(());
        }
        let n = d.len() as u64;
        let shift = (r as u64 - 1) * (k - 1);
        // Small sides handled by families A and B; j = n/2 is family C.
        for j in (r as u64 + 1).max(shift)..n.div_ceil(2) {
            let lower = binom(j - 1, r as u64 - 1);
            let upper = binom(n - j - 1, r as u64 - 1);
            let antecedent = entry(&d, (j - shift) as i64).is_none_or(|x| x <= lower)
                && entry(&d, j as i64).is_none_or(|x| x < lower + k);
            let consequent = d.get(n as usize - 1) + 1 >= upper + k || d.get(n as usize) >= upper + k;
            prop_assert!(!antecedent || consequent, "j={} d={}", j, d);
        }
    }

    #[test]
    fn violations_re_evaluate((r, v) in sequence(10), k in 1u64..=3) {
        let d = seq(r, &v);
        for id in TheoremId::ALL {
            for mode in [Mode::Sound, Mode::PaperLiteral] {
                let k = id.needs_k().then_some(if matches!(id, TheoremId::T21 | TheoremId::T42) { k.max(2) } else { k });
                if let Ok(verdict) = check(id, &d, k, mode) {
                    prop_assert!(verdict.witness_holds(&d), "{} {:?} d={}", id, mode, d);
                }
            }
        }
    }

    #[test]
    fn realizations_have_the_requested_degrees((r, v) in sequence(6)) {
        let d = seq(r, &v);
        let q = RealizationQuery { d: d.clone(), limit: Some(20), budget: Some(1_000_000) };
        if let Ok(iter) = q.iter() {
            for h in iter {
                let Ok(h) = h else { break };
                prop_assert_eq!(h.degree_sequence().unwrap(), d.clone());
            }
        }
    }
}
