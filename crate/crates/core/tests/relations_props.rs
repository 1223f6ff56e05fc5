use proptest::prelude::*;
use wqo::relations::{
    find_descending_cycle, find_good_pair, is_almost_full_exhaustive, is_almost_full_on_finite,
    is_bad, is_reflexive_on, is_transitive_on, is_well_founded_on_finite, strict_part,
};
use wqo::Relation;

fn from_mask(n: usize, mask: u64) -> Relation<usize> {
    Relation::new(move |x: &usize, y: &usize| mask & (1 << (x * n + y)) != 0)
}

// Independent reading: a cycle is a closed walk, found by repeated squaring
// of the adjacency matrix.
fn has_cycle_by_powers(rel: &Relation<usize>, n: usize) -> bool {
    let mut reach = vec![vec![false; n]; n];
    for (x, row) in reach.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = rel.holds(&y, &x);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..n).any(|i| reach[i][i])
}

#[test]
fn almost_full_characterizations_agree_on_small_carriers() {
    for n in 0..=2usize {
        let carrier: Vec<usize> = (0..n).collect();
        for mask in 0..(1u64 << (n * n)) {
            let rel = from_mask(n, mask);
            assert_eq!(
                is_almost_full_on_finite(&rel, &carrier),
                is_almost_full_exhaustive(&rel, &carrier),
                "n={n} mask={mask:b}"
            );
        }
    }
}

#[test]
fn cycle_detection_matches_closure() {
    for n in 0..=3usize {
        let carrier: Vec<usize> = (0..n).collect();
        for mask in 0..(1u64 << (n * n)) {
            let rel = from_mask(n, mask);
            let cycle = find_descending_cycle(&rel, &carrier);
            assert_eq!(
                cycle.is_some(),
                has_cycle_by_powers(&rel, n),
                "n={n} mask={mask:b}"
            );
            if let Some(c) = cycle {
                for (i, x) in c.iter().enumerate() {
                    let next = &c[(i + 1) % c.len()];
                    assert!(
                        rel.holds(next, x),
                        "cycle step {x} -> {next} is not descending"
                    );
                }
            }
            assert_eq!(
                is_well_founded_on_finite(&rel, &carrier),
                !has_cycle_by_powers(&rel, n)
            );
        }
    }
}

#[test]
fn preorder_strict_part_is_well_founded() {
    for n in 0..=3usize {
        let carrier: Vec<usize> = (0..n).collect();
        for mask in 0..(1u64 << (n * n)) {
            let rel = from_mask(n, mask);
            if is_reflexive_on(&rel, &carrier) && is_transitive_on(&rel, &carrier) {
                assert!(is_well_founded_on_finite(&strict_part(&rel), &carrier));
            }
        }
    }
}

proptest! {
    #[test]
    fn good_pair_absent_iff_bad(
        mask in any::<u16>(),
        seq in proptest::collection::vec(0usize..4, 0..8),
    ) {
        let rel = from_mask(4, u64::from(mask));
        prop_assert_eq!(find_good_pair(&rel, &seq).is_none(), is_bad(&rel, &seq));
    }

    #[test]
    fn good_pair_is_least(
        mask in any::<u16>(),
        seq in proptest::collection::vec(0usize..4, 0..8),
    ) {
        let rel = from_mask(4, u64::from(mask));
        let mut all = Vec::new();
        for j in 0..seq.len() {
            for i in 0..j {
                if rel.holds(&seq[i], &seq[j]) {
                    all.push((i, j));
                }
            }
        }
        prop_assert_eq!(find_good_pair(&rel, &seq), all.into_iter().min());
    }

    #[test]
    fn strict_part_is_stable(mask in any::<u16>(), x in 0usize..4, y in 0usize..4) {
        let rel = from_mask(4, u64::from(mask));
        let once = strict_part(&rel);
        let twice = strict_part(&once);
        prop_assert_eq!(once.holds(&x, &y), twice.holds(&x, &y));
        prop_assert!(!(once.holds(&x, &y) && once.holds(&y, &x)));
    }
}
