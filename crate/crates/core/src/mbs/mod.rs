//! Minimal bad sequences at a finite horizon.
//!
//! An [`MbsContext`] bundles an object universe (a membership test), a strong
//! relation deciding goodness, and a strict weak order used for minimality,
//! together with a predecessor enumerator and a rank function certifying that
//! the weak order is well-founded. [`check_locale_axioms`] verifies the four
//! required properties on a finite universe:
//!
//! * right-compatibility: `x ⊴ y` and `y ◁ z` imply `x ⊴ z`;
//! * well-foundedness of `◁`;
//! * transitivity of `◁`;
//! * `◁` reflects membership: `x ◁ y` with `y` a member makes `x` a member.
//!
//! [`minimize_bad_sequence`] turns a bad sequence of length `L` into one that
//! is minimal at every position. Candidates are drawn from the weak closure
//! of the input's elements, and each position takes a `◁`-minimal candidate
//! that still admits a bad completion of length `L`.

mod instances;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use instances::{broken_list_context, broken_tree_context, list_context, tree_context};

use crate::error::{Error, Result};
use crate::relations::{find_descending_cycle, find_good_pair, is_bad, FiniteSeq, Relation};
use crate::DEFAULT_CLOSURE_GUARD;
use search::BadSearch;

type Member<T> = Arc<dyn Fn(&T) -> bool + Send + Sync>;
type Predecessors<T> = Arc<dyn Fn(&T) -> Vec<T> + Send + Sync>;
type Rank<T> = Arc<dyn Fn(&T) -> usize + Send + Sync>;

/// An instance of the minimal-bad-sequence interface.
pub struct MbsContext<T> {
    vals_member: Member<T>,
    strong: Relation<T>,
    weak_lt: Relation<T>,
    weak_predecessors: Predecessors<T>,
    rank: Rank<T>,
    closure_guard: usize,
}

impl<T: Clone> Clone for MbsContext<T> {
    fn clone(&self) -> Self {
        MbsContext {
            vals_member: Arc::clone(&self.vals_member),
            strong: self.strong.clone(),
            weak_lt: self.weak_lt.clone(),
            weak_predecessors: Arc::clone(&self.weak_predecessors),
            rank: Arc::clone(&self.rank),
            closure_guard: self.closure_guard,
        }
    }
}

impl<T> fmt::Debug for MbsContext<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MbsContext")
            .field("closure_guard", &self.closure_guard)
            .finish_non_exhaustive()
    }
}

impl<T> MbsContext<T> {
    pub fn new(
        vals_member: impl Fn(&T) -> bool + Send + Sync + 'static,
        strong: Relation<T>,
        weak_lt: Relation<T>,
        weak_predecessors: impl Fn(&T) -> Vec<T> + Send + Sync + 'static,
        rank: impl Fn(&T) -> usize + Send + Sync + 'static,
    ) -> Self {
        MbsContext {
            vals_member: Arc::new(vals_member),
            strong,
            weak_lt,
            weak_predecessors: Arc::new(weak_predecessors),
            rank: Arc::new(rank),
            closure_guard: DEFAULT_CLOSURE_GUARD,
        }
    }

    pub fn with_closure_guard(mut self, limit: usize) -> Self {
        self.closure_guard = limit;
        self
    }

    pub fn is_member(&self, x: &T) -> bool {
        (self.vals_member)(x)
    }

    pub fn strong(&self) -> &Relation<T> {
        &self.strong
    }

    pub fn weak_lt(&self) -> &Relation<T> {
        &self.weak_lt
    }

    pub fn weak_predecessors(&self, x: &T) -> Vec<T> {
        (self.weak_predecessors)(x)
    }

    pub fn rank(&self, x: &T) -> usize {
        (self.rank)(x)
    }
}

impl<T: PartialEq> MbsContext<T> {
    /// Reflexive closure of the weak order.
    pub fn weak_le(&self, x: &T, y: &T) -> bool {
        x == y || self.weak_lt.holds(x, y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    fn from_option(w: Option<W>) -> Self {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellFoundednessWitness<T> {
    /// `x0 ▷ x1 ▷ .. ▷ xk ▷ x0` inside the universe.
    Cycle(Vec<T>),
    /// `lower ◁ upper` but `rank(lower) >= rank(upper)`.
    RankNotDecreasing { lower: T, upper: T },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<T> {
    /// Witness `(x, y, z)`: `x ⊴ y`, `y ◁ z`, not `x ⊴ z`.
    pub right_compatibility: Verdict<(T, T, T)>,
    pub well_foundedness: Verdict<WellFoundednessWitness<T>>,
    /// Witness `(x, y, z)`: `x ◁ y`, `y ◁ z`, not `x ◁ z`.
    pub transitivity: Verdict<(T, T, T)>,
    /// Witness `(x, y)`: `x ◁ y`, `y` a member, `x` not.
    pub reflects_membership: Verdict<(T, T)>,
}

impl<T> AxiomReport<T> {
    pub fn all_pass(&self) -> bool {
        self.right_compatibility.passed()
            && self.well_foundedness.passed()
            && self.transitivity.passed()
            && self.reflects_membership.passed()
    }
}

fn canonical<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    items
        .iter()
        .cloned()
        .collect::<BTreeSet<T>>()
        .into_iter()
        .collect()
}

/// Exhaustively checks the four axioms over `universe`, reporting the first
/// counterexample of each in canonical order.
pub fn check_locale_axioms<T: Ord + Clone>(ctx: &MbsContext<T>, universe: &[T]) -> AxiomReport<T> {
    let u = canonical(universe);

    let mut right_compat = None;
    'rc: for x in &u {
        for y in &u {
            if !ctx.strong.holds(x, y) {
                continue;
            }
            for z in &u {
                if ctx.weak_lt.holds(y, z) && !ctx.strong.holds(x, z) {
                    right_compat = Some((x.clone(), y.clone(), z.clone()));
                    break 'rc;
                }
            }
        }
    }

    let mut wf = find_descending_cycle(&ctx.weak_lt, &u).map(WellFoundednessWitness::Cycle);
    if wf.is_none() {
        'rank: for lower in &u {
            for upper in &u {
                if ctx.weak_lt.holds(lower, upper) && ctx.rank(lower) >= ctx.rank(upper) {
                    wf = Some(WellFoundednessWitness::RankNotDecreasing {
                        lower: lower.clone(),
                        upper: upper.clone(),
                    });
                    break 'rank;
                }
            }
        }
    }

    let transitivity = crate::relations::first_transitivity_violation(&ctx.weak_lt, &u)
        .map(|(x, y, z)| (x.clone(), y.clone(), z.clone()));

    let mut reflects = None;
    'refl: for y in u.iter().filter(|y| ctx.is_member(y)) {
        let mut below: BTreeSet<T> = ctx.weak_predecessors(y).into_iter().collect();
        below.extend(u.iter().filter(|x| ctx.weak_lt.holds(x, y)).cloned());
        for x in below {
            if ctx.weak_lt.holds(&x, y) && !ctx.is_member(&x) {
                reflects = Some((x, y.clone()));
                break 'refl;
            }
        }
    }

    AxiomReport {
        right_compatibility: Verdict::from_option(right_compat),
        well_foundedness: Verdict::from_option(wf),
        transitivity: Verdict::from_option(transitivity),
        reflects_membership: Verdict::from_option(reflects),
    }
}

/// First `(x, y)` where the predecessor enumerator and the weak relation
/// disagree: `y` is listed as a predecessor of `x` without `y ◁ x`, or
/// `y ◁ x` holds for a universe element `y` that is not listed.
pub fn check_predecessor_consistency<T: Ord + Clone>(
    ctx: &MbsContext<T>,
    universe: &[T],
) -> Option<(T, T)> {
    let u = canonical(universe);
    for x in &u {
        let listed: BTreeSet<T> = ctx.weak_predecessors(x).into_iter().collect();
        if let Some(y) = listed.iter().find(|y| !ctx.weak_lt.holds(y, x)) {
            return Some((x.clone(), y.clone()));
        }
        if let Some(y) = u
            .iter()
            .find(|y| ctx.weak_lt.holds(y, x) && !listed.contains(*y))
        {
            return Some((x.clone(), y.clone()));
        }
    }
    None
}

/// `r[j] = f[j]` for `j < n`, `r[j] = g[j]` otherwise.
pub fn splice<T: Clone>(n: usize, f: &[T], g: &[T]) -> Result<FiniteSeq<T>> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: g.len(),
        });
    }
    Ok((0..f.len())
        .map(|j| if n <= j { g[j].clone() } else { f[j].clone() })
        .collect())
}

/// The least set containing `seed` and closed under weak predecessors, in
/// canonical order.
pub fn weak_closure<T: Ord + Clone>(ctx: &MbsContext<T>, seed: &[T]) -> Result<Vec<T>> {
    let mut seen: BTreeSet<T> = BTreeSet::new();
    let mut todo: Vec<T> = Vec::new();
    for x in seed {
        if seen.insert(x.clone()) {
            todo.push(x.clone());
        }
    }
    while let Some(x) = todo.pop() {
        for y in ctx.weak_predecessors(&x) {
            if seen.insert(y.clone()) {
                if seen.len() > ctx.closure_guard {
                    return Err(Error::ClosureOverflow {
                        limit: ctx.closure_guard,
                    });
                }
                todo.push(y);
            }
        }
    }
    if seen.len() > ctx.closure_guard {
        return Err(Error::ClosureOverflow {
            limit: ctx.closure_guard,
        });
    }
    Ok(seen.into_iter().collect())
}

/// Can `prefix` be extended with elements of `candidates` to a bad sequence
/// of length `len`? Plain backtracking in canonical candidate order.
pub fn extends_to_bad<T: Ord + Clone>(
    ctx: &MbsContext<T>,
    prefix: &[T],
    candidates: &[T],
    len: usize,
) -> bool {
    if !is_bad(&ctx.strong, prefix) {
        return false;
    }
    let cands = canonical(candidates);
    let mut seq: Vec<T> = prefix.to_vec();
    backtrack(&ctx.strong, &mut seq, &cands, len)
}

fn backtrack<T: Clone>(strong: &Relation<T>, seq: &mut Vec<T>, cands: &[T], len: usize) -> bool {
    if seq.len() >= len {
        return true;
    }
    for c in cands {
        if seq.iter().any(|p| strong.holds(p, c)) {
            continue;
        }
        seq.push(c.clone());
        if backtrack(strong, seq, cands, len) {
            return true;
        }
        seq.pop();
    }
    false
}

/// Finite-horizon minimality at position `n`: no `y ◁ f[n]` from
/// `candidate_space` starts, after `f[..n]`, a bad sequence of length
/// `f.len()` whose tail lies in `candidate_space`.
pub fn is_min_at<T: Ord + Clone>(
    ctx: &MbsContext<T>,
    f: &[T],
    n: usize,
    candidate_space: &[T],
) -> bool {
    assert!(
        n < f.len(),
        "position {n} out of range for length {}",
        f.len()
    );
    let space = canonical(candidate_space);
    let mut prefix: Vec<T> = f[..n].to_vec();
    for y in space.iter().filter(|y| ctx.weak_lt.holds(y, &f[n])) {
        prefix.push(y.clone());
        let extends = extends_to_bad(ctx, &prefix, &space, f.len());
        prefix.pop();
        if extends {
            return false;
        }
    }
    true
}

/// [`is_min_at`] by brute force: enumerates every `g` agreeing with `f`
/// before `n`, with `g[n] ◁ f[n]` and `g[i]` in the space for `i >= n`, and
/// checks that each is good. Exponential in `f.len() - n`.
pub fn is_min_at_exhaustive<T: Ord + Clone>(
    ctx: &MbsContext<T>,
    f: &[T],
    n: usize,
    candidate_space: &[T],
) -> bool {
    assert!(
        n < f.len(),
        "position {n} out of range for length {}",
        f.len()
    );
    let space = canonical(candidate_space);
    let below: Vec<&T> = space
        .iter()
        .filter(|y| ctx.weak_lt.holds(y, &f[n]))
        .collect();
    if below.is_empty() {
        return true;
    }
    let tail = f.len() - n - 1;
    let mut digits = vec![0usize; tail];
    for y in below {
        loop {
            let g: Vec<T> = f[..n]
                .iter()
                .cloned()
                .chain(std::iter::once(y.clone()))
                .chain(digits.iter().map(|&d| space[d].clone()))
                .collect();
            if is_bad(&ctx.strong, &g) {
                return false;
            }
            let mut pos = tail;
            let mut wrapped = true;
            while pos > 0 {
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < space.len() {
                    wrapped = false;
                    break;
                }
                digits[pos] = 0;
            }
            if wrapped {
                break;
            }
        }
    }
    true
}

/// Builds a bad sequence of the same length as `f` that is minimal at every
/// position.
///
/// Working left to right over the weak closure of `f`'s elements, each
/// position receives a candidate that keeps a bad completion possible and
/// has no such candidate strictly below it; ties go to the canonically
/// smallest.
pub fn minimize_bad_sequence<T: Ord + Clone>(ctx: &MbsContext<T>, f: &[T]) -> Result<FiniteSeq<T>> {
    if f.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let Some(i) = f.iter().position(|x| !ctx.is_member(x)) {
        return Err(Error::NotInUniverse(i));
    }
    if let Some((i, j)) = find_good_pair(&ctx.strong, f) {
        return Err(Error::NotBad(i, j));
    }

    let space = weak_closure(ctx, f)?;
    let len = f.len();
    let mut search = BadSearch::new(&ctx.strong, &space);
    let mut allowed = search.all();
    let mut out = Vec::with_capacity(len);

    for n in 0..len {
        let remaining = len - n - 1;
        let qualifying: Vec<usize> = allowed
            .iter()
            .filter(|&x| {
                let next = search.after(&allowed, x);
                search.extends(&next, remaining)
            })
            .collect();
        let chosen = qualifying
            .iter()
            .copied()
            .find(|&x| {
                !qualifying
                    .iter()
                    .any(|&y| y != x && ctx.weak_lt.holds(&space[y], &space[x]))
            })
            .expect("a bad completion exists, so a minimal qualifying candidate exists");
        allowed = search.after(&allowed, chosen);
        out.push(space[chosen].clone());
    }
    Ok(FiniteSeq::new(out))
}

/// A longest bad sequence over `candidates`, found by memoized exhaustive
/// search; among longest sequences the lexicographically least in canonical
/// order is returned.
///
/// The search horizon is `|candidates|`. For a reflexive strong relation
/// this is no restriction, since a bad sequence cannot repeat an element.
pub fn longest_bad_sequence<T: Ord + Clone>(ctx: &MbsContext<T>, candidates: &[T]) -> FiniteSeq<T> {
    let space = canonical(candidates);
    let horizon = space.len();
    let mut search = BadSearch::new(&ctx.strong, &space);
    let mut allowed = search.all();
    let mut out = Vec::new();
    let mut remaining = search.longest(&allowed, horizon);
    while remaining > 0 {
        let next = allowed
            .iter()
            .find(|&c| {
                let after = search.after(&allowed, c);
                1 + search.longest(&after, remaining - 1) == remaining
            })
            .expect("the memoized length is attained by some candidate");
        out.push(space[next].clone());
        allowed = search.after(&allowed, next);
        remaining -= 1;
    }
    FiniteSeq::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::alphabet;
    use crate::list::{enumerate_lists, ListVal};
    use crate::tree::{enumerate_trees, Tree};
    use crate::DEFAULT_UNIVERSE_GUARD as GUARD;

    fn l(names: &[&str]) -> ListVal {
        ListVal::from_names(names)
    }

    fn a_lists(lens: &[usize]) -> Vec<ListVal> {
        lens.iter().map(|&k| l(&vec!["a"; k])).collect()
    }

    fn single_letter() -> MbsContext<ListVal> {
        list_context(Relation::equality(), alphabet(["a"]))
    }

    #[test]
    fn axioms_hold_for_lists() {
        let ab = alphabet(["a", "b"]);
        let ctx = list_context(Relation::equality(), ab.clone());
        let universe = enumerate_lists(&ab, 3, GUARD).unwrap();
        let report = check_locale_axioms(&ctx, &universe);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(check_predecessor_consistency(&ctx, &universe), None);
    }

    #[test]
    fn axioms_hold_for_trees() {
        let ab = alphabet(["a", "b"]);
        let ctx = tree_context(Relation::equality(), ab.clone());
        let universe = enumerate_trees(&ab, 3, GUARD).unwrap();
        let report = check_locale_axioms(&ctx, &universe);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(check_predecessor_consistency(&ctx, &universe), None);
    }

    #[test]
    fn broken_context_fails_right_compatibility() {
        let ab = alphabet(["a", "b"]);
        let ctx = broken_list_context(ab.clone());
        let universe = enumerate_lists(&ab, 2, GUARD).unwrap();
        let report = check_locale_axioms(&ctx, &universe);
        assert!(!report.right_compatibility.passed());
        assert!(report.well_foundedness.passed());
        assert!(report.transitivity.passed());
        assert!(report.reflects_membership.passed());
        let (x, y, z) = report.right_compatibility.witness().unwrap().clone();
        assert_eq!((x, y, z), (l(&[]), l(&[]), l(&["a"])));
    }

    #[test]
    fn rank_violation_is_reported() {
        let ctx = MbsContext::new(
            |_: &u32| true,
            Relation::new(|x: &u32, y: &u32| x <= y),
            Relation::new(|x: &u32, y: &u32| x < y),
            |x: &u32| (0..*x).collect(),
            |_: &u32| 0,
        );
        let report = check_locale_axioms(&ctx, &[0, 1, 2]);
        assert_eq!(
            report.well_foundedness,
            Verdict::Fail(WellFoundednessWitness::RankNotDecreasing { lower: 0, upper: 1 })
        );
    }

    #[test]
    fn membership_reflection_failure() {
        // evens only, but predecessors include odds
        let ctx = MbsContext::new(
            |x: &u32| x.is_multiple_of(2),
            Relation::new(|x: &u32, y: &u32| x <= y),
            Relation::new(|x: &u32, y: &u32| x < y),
            |x: &u32| (0..*x).collect(),
            |x: &u32| *x as usize,
        );
        let report = check_locale_axioms(&ctx, &[0, 2]);
        assert_eq!(report.reflects_membership, Verdict::Fail((1, 2)));
    }

    #[test]
    fn splice_cases() {
        let f = [1, 2, 3];
        let g = [7, 8, 9];
        assert_eq!(splice(0, &f, &g).unwrap().as_slice(), &g);
        assert_eq!(splice(3, &f, &g).unwrap().as_slice(), &f);
        let s = splice(2, &f, &g).unwrap();
        assert_eq!((s[1], s[2]), (2, 9));
        assert_eq!(
            splice(1, &f, &g[..2]),
            Err(Error::LengthMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn closure_examples() {
        let ctx = single_letter();
        assert_eq!(
            weak_closure(&ctx, &a_lists(&[2])).unwrap(),
            a_lists(&[0, 1, 2])
        );
        assert!(weak_closure(&ctx, &[]).unwrap().is_empty());
        let tctx = tree_context(Relation::equality(), alphabet(["a"]));
        assert_eq!(
            weak_closure(&tctx, &[Tree::leaf("a")]).unwrap(),
            vec![Tree::leaf("a")]
        );
    }

    #[test]
    fn closure_guard_trips() {
        let ctx = single_letter().with_closure_guard(2);
        assert_eq!(
            weak_closure(&ctx, &a_lists(&[3])),
            Err(Error::ClosureOverflow { limit: 2 })
        );
    }

    #[test]
    fn closure_guard_catches_infinite_branching() {
        // every n has n + 1 as a "predecessor": never closes
        let ctx = MbsContext::new(
            |_: &u64| true,
            Relation::new(|x: &u64, y: &u64| x == y),
            Relation::new(|x: &u64, y: &u64| x > y),
            |x: &u64| vec![x + 1],
            |_: &u64| 0,
        )
        .with_closure_guard(50);
        assert_eq!(
            weak_closure(&ctx, &[0]),
            Err(Error::ClosureOverflow { limit: 50 })
        );
    }

    #[test]
    fn extension_examples() {
        let ctx = single_letter();
        let cands = a_lists(&[1, 0]);
        assert!(extends_to_bad(&ctx, &a_lists(&[1]), &cands, 2));
        assert!(!extends_to_bad(&ctx, &a_lists(&[0]), &cands, 2));
        assert!(extends_to_bad(&ctx, &a_lists(&[2, 1]), &cands, 2));
    }

    #[test]
    fn min_at_examples() {
        let ctx = single_letter();
        // nothing below [] at all
        assert!(is_min_at(&ctx, &a_lists(&[0]), 0, &a_lists(&[0])));
        let space = a_lists(&[1, 0]);
        let f = a_lists(&[1, 0]);
        assert!(is_min_at(&ctx, &f, 0, &space));
        assert!(is_min_at_exhaustive(&ctx, &f, 0, &space));
        let space = a_lists(&[2, 1, 0]);
        let f = a_lists(&[2, 0]);
        assert!(!is_min_at(&ctx, &f, 0, &space));
        assert!(!is_min_at_exhaustive(&ctx, &f, 0, &space));
    }

    #[test]
    fn minimize_examples() {
        let ctx = single_letter();
        let m = minimize_bad_sequence(&ctx, &a_lists(&[3, 1])).unwrap();
        assert_eq!(m.as_slice(), a_lists(&[1, 0]).as_slice());
        let m = minimize_bad_sequence(&ctx, &a_lists(&[3, 2, 1])).unwrap();
        assert_eq!(m.as_slice(), a_lists(&[2, 1, 0]).as_slice());
        let again = minimize_bad_sequence(&ctx, &m).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn minimize_errors() {
        let ctx = single_letter();
        assert_eq!(minimize_bad_sequence(&ctx, &[]), Err(Error::EmptySequence));
        assert_eq!(
            minimize_bad_sequence(&ctx, &a_lists(&[1, 2])),
            Err(Error::NotBad(0, 1))
        );
        assert_eq!(
            minimize_bad_sequence(&ctx, &[l(&["b"])]),
            Err(Error::NotInUniverse(0))
        );
    }

    #[test]
    fn longest_examples() {
        let ctx = single_letter();
        let universe = enumerate_lists(&alphabet(["a"]), 3, GUARD).unwrap();
        let best = longest_bad_sequence(&ctx, &universe);
        assert_eq!(best.as_slice(), a_lists(&[3, 2, 1, 0]).as_slice());

        let one = vec![l(&["a"])];
        assert_eq!(longest_bad_sequence(&ctx, &one).len(), 1);
        assert!(longest_bad_sequence(&ctx, &[]).is_empty());
    }

    #[test]
    fn longest_over_chain() {
        let ctx = MbsContext::new(
            |_: &u32| true,
            Relation::new(|x: &u32, y: &u32| x <= y),
            Relation::new(|x: &u32, y: &u32| x < y),
            |x: &u32| (0..*x).collect(),
            |x: &u32| *x as usize,
        );
        assert_eq!(
            longest_bad_sequence(&ctx, &[0, 1, 2]).as_slice(),
            &[2, 1, 0]
        );
    }

    #[test]
    fn longest_over_two_letters() {
        let ab = alphabet(["a", "b"]);
        let ctx = list_context(Relation::equality(), ab.clone());
        let universe = enumerate_lists(&ab, 2, GUARD).unwrap();
        let best = longest_bad_sequence(&ctx, &universe);
        assert!(is_bad(ctx.strong(), &best));
        let mut brute = 0;
        let mut seq = Vec::new();
        brute_longest(&ctx, &universe, &mut seq, &mut brute);
        assert_eq!(best.len(), brute);
    }

    fn brute_longest(
        ctx: &MbsContext<ListVal>,
        u: &[ListVal],
        seq: &mut Vec<ListVal>,
        best: &mut usize,
    ) {
        *best = (*best).max(seq.len());
        for c in u {
            if seq.iter().any(|p| ctx.strong().holds(p, c)) {
                continue;
            }
            seq.push(c.clone());
            brute_longest(ctx, u, seq, best);
            seq.pop();
        }
    }
}
