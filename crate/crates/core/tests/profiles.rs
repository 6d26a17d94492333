use hyperconn::combinatorics::{enumerate_profiles, enumerate_profiles_with, CrossingProfile, ProfileBounds};

/// Every (t, s) with entries bounded by the side sizes, filtered by the
/// admissibility list written out directly.
fn naive(c: usize, r: usize, j: usize, n: usize) -> Vec<(Vec<u64>, Vec<u64>)> {
    let cap = |i: usize| (c / i) as u64 * (r as u64 - 1);
    let suffix = |v: &[u64], i: usize| v[i - 1..].iter().sum::<u64>();
    let admissible = |t: &[u64], s: &[u64]| {
        let w: u64 = (1..=c).map(|i| i as u64 * (t[i - 1] + s[i - 1])).sum();
        let ones = t[0] + s[0];
        let side = (c * (r - 1)) as u64;
        w == (c * r) as u64
            && ones >= c as u64
            && ones <= (c * r) as u64
            && (2..=c).all(|i| t[i - 1] + s[i - 1] <= cap(i))
            && (2..c).all(|i| suffix(t, i) <= cap(i) && suffix(s, i) <= cap(i))
            && (1..=side.min(j as u64)).contains(&suffix(t, 1))
            && (1..=side.min((n - j) as u64)).contains(&suffix(s, 1))
    };
    let vectors = |len: usize, max: u64| {
        let mut all = vec![vec![]];
        for _ in 0..len {
            all = all.into_iter().flat_map(|v: Vec<u64>| (0..=max).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        all
    };
    let mut out = Vec::new();
    for t in vectors(c, j as u64) {
        for s in vectors(c, (n - j) as u64) {
            if admissible(&t, &s) {
                out.push((t.clone(), s));
            }
        }
    }
    out
}

fn pairs(ps: &[CrossingProfile]) -> Vec<(Vec<u64>, Vec<u64>)> {
    ps.iter().map(|p| (p.t.clone(), p.s.clone())).collect()
}

#[test]
fn enumeration_matches_filter_in_lexicographic_order() {
    for c in 1..=3usize {
        for r in 2..=4usize {
            for n in 2 * r..=9 {
                for j in r..=n / 2 {
                    let got = enumerate_profiles(c, r, j, n);
                    assert_eq!(pairs(&got), naive(c, r, j, n), "c={c} r={r} j={j} n={n}");
                    assert!(got.iter().all(CrossingProfile::is_valid));
                }
            }
        }
    }
}

#[test]
fn no_profiles_when_crossings_outnumber_vertices() {
    assert!(enumerate_profiles(13, 4, 5, 12).is_empty());
    assert!(enumerate_profiles(165, 4, 6, 12).is_empty());
}

#[test]
fn min_degree_three_list_admits_wider_pairs() {
    let bounds = ProfileBounds::min_degree_three(4);
    let got = enumerate_profiles_with(&bounds, 5, 10);
    assert!(got.iter().all(|p| p.satisfies(&bounds)));
    assert!(got.iter().any(|p| p.t[1] + p.s[1] > 3));
    assert!(got.windows(2).all(|w| (&w[0].t, &w[0].s) < (&w[1].t, &w[1].s)));
}
