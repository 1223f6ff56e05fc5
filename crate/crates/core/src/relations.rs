//! Binary relations as predicates, finite sequences, and the finite-carrier
//! versions of the basic order-theoretic properties.
//!
//! Infinite sequences are replaced by [`FiniteSeq`]; every predicate that
//! quantifies over infinite sequences has a finite-carrier counterpart here
//! whose horizon is explicit.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

type Predicate<T> = Arc<dyn Fn(&T, &T) -> bool + Send + Sync>;

/// An evaluable binary predicate, optionally paired with a finite carrier.
///
/// The predicate must be total and deterministic. Cloning is cheap.
pub struct Relation<T> {
    eval: Predicate<T>,
    carrier: Option<Vec<T>>,
}

impl<T> Clone for Relation<T>
where
    T: Clone,
{
    fn clone(&self) -> Self {
        Relation {
            eval: Arc::clone(&self.eval),
            carrier: self.carrier.clone(),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Relation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Relation")
            .field("carrier", &self.carrier)
            .finish_non_exhaustive()
    }
}

impl<T> Relation<T> {
    pub fn new<F>(eval: F) -> Self
    where
        F: Fn(&T, &T) -> bool + Send + Sync + 'static,
    {
        Relation {
            eval: Arc::new(eval),
            carrier: None,
        }
    }

    /// Attaches a finite carrier (the set `A`).
    pub fn with_carrier(mut self, carrier: impl IntoIterator<Item = T>) -> Self {
        self.carrier = Some(carrier.into_iter().collect());
        self
    }

    #[inline]
    pub fn holds(&self, x: &T, y: &T) -> bool {
        (self.eval)(x, y)
    }

    pub fn carrier(&self) -> Option<&[T]> {
        self.carrier.as_deref()
    }
}

impl<T: 'static> Relation<T> {
    /// The relation that never holds.
    pub fn empty() -> Self {
        Relation::new(|_, _| false)
    }
}

impl<T: PartialEq + 'static> Relation<T> {
    pub fn equality() -> Self {
        Relation::new(|x: &T, y: &T| x == y)
    }
}

impl<T> Relation<T>
where
    T: Ord + Clone + Send + Sync + 'static,
{
    /// A relation given by an explicit pair set.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (T, T)>) -> Self {
        let pairs: BTreeSet<(T, T)> = pairs.into_iter().collect();
        Relation::new(move |x: &T, y: &T| pairs.contains(&(x.clone(), y.clone())))
    }
}

/// The strict part `x < y  <=>  x <= y && !(y <= x)`. The carrier is kept.
pub fn strict_part<T: Clone + 'static>(rel: &Relation<T>) -> Relation<T> {
    let eval = Arc::clone(&rel.eval);
    Relation {
        eval: Arc::new(move |x: &T, y: &T| eval(x, y) && !eval(y, x)),
        carrier: rel.carrier.clone(),
    }
}

pub fn is_reflexive_on<T>(rel: &Relation<T>, carrier: &[T]) -> bool {
    carrier.iter().all(|a| rel.holds(a, a))
}

pub fn is_transitive_on<T>(rel: &Relation<T>, carrier: &[T]) -> bool {
    first_transitivity_violation(rel, carrier).is_none()
}

/// First `(a, b, c)` in carrier order with `a ~ b`, `b ~ c` but not `a ~ c`.
pub fn first_transitivity_violation<'a, T>(
    rel: &Relation<T>,
    carrier: &'a [T],
) -> Option<(&'a T, &'a T, &'a T)> {
    for a in carrier {
        for b in carrier {
            if !rel.holds(a, b) {
                continue;
            }
            for c in carrier {
                if rel.holds(b, c) && !rel.holds(a, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// An indexable finite sequence; the finite stand-in for `nat => a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FiniteSeq<T>(Vec<T>);

impl<T> FiniteSeq<T> {
    pub fn new(items: Vec<T>) -> Self {
        FiniteSeq(items)
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }
}

impl<T> Deref for FiniteSeq<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T> From<Vec<T>> for FiniteSeq<T> {
    fn from(items: Vec<T>) -> Self {
        FiniteSeq(items)
    }
}

impl<T> FromIterator<T> for FiniteSeq<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        FiniteSeq(iter.into_iter().collect())
    }
}

impl<T> IntoIterator for FiniteSeq<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a FiniteSeq<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Lexicographically least `(i, j)` with `i < j` and `seq[i] ~ seq[j]`.
pub fn find_good_pair<T>(rel: &Relation<T>, seq: &[T]) -> Option<(usize, usize)> {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if rel.holds(&seq[i], &seq[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_bad<T>(rel: &Relation<T>, seq: &[T]) -> bool {
    find_good_pair(rel, seq).is_none()
}

pub fn is_good<T>(rel: &Relation<T>, seq: &[T]) -> bool {
    !is_bad(rel, seq)
}

/// A descending cycle `x0, x1, .., xk` inside the carrier with
/// `x(i+1) ~ x(i)` and `x0 ~ xk`, if one exists. A self-loop is a cycle of
/// length one. On a finite carrier, an infinite descending sequence exists
/// exactly when such a cycle does.
pub fn find_descending_cycle<T: Clone>(rel: &Relation<T>, carrier: &[T]) -> Option<Vec<T>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Fresh,
        Open,
        Done,
    }

    let n = carrier.len();
    // successors[x] = the y with y ~ x, i.e. one descending step from x.
    let successors: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| rel.holds(&carrier[y], &carrier[x]))
                .collect()
        })
        .collect();
    let mut marks = vec![Mark::Fresh; n];

    for root in 0..n {
        if marks[root] != Mark::Fresh {
            continue;
        }
        // Iterative DFS: path holds (node, next successor index).
        let mut path: Vec<(usize, usize)> = vec![(root, 0)];
        marks[root] = Mark::Open;
        while let Some(&mut (node, ref mut next)) = path.last_mut() {
            if let Some(&succ) = successors[node].get(*next) {
                *next += 1;
                match marks[succ] {
                    Mark::Fresh => {
                        marks[succ] = Mark::Open;
                        path.push((succ, 0));
                    }
                    Mark::Open => {
                        let start = path.iter().position(|&(v, _)| v == succ).unwrap();
                        return Some(
                            path[start..]
                                .iter()
                                .map(|&(v, _)| carrier[v].clone())
                                .collect(),
                        );
                    }
                    Mark::Done => {}
                }
            } else {
                marks[node] = Mark::Done;
                path.pop();
            }
        }
    }
    None
}

/// Well-foundedness on a finite carrier: no descending cycle.
pub fn is_well_founded_on_finite<T: Clone>(rel: &Relation<T>, carrier: &[T]) -> bool {
    find_descending_cycle(rel, carrier).is_none()
}

/// Almost-fullness on a finite carrier.
///
/// Any sequence of length `|carrier| + 1` repeats an element, so on a finite
/// carrier almost-fullness coincides with reflexivity.
pub fn is_almost_full_on_finite<T>(rel: &Relation<T>, carrier: &[T]) -> bool {
    is_reflexive_on(rel, carrier)
}

/// Self-check for [`is_almost_full_on_finite`]: enumerates every sequence of
/// length `|carrier| + 1` over the carrier and tests that each is good.
///
/// Runs in `|carrier|^(|carrier| + 1)` steps; meant for carriers of four or
/// five elements.
pub fn is_almost_full_exhaustive<T>(rel: &Relation<T>, carrier: &[T]) -> bool {
    let n = carrier.len();
    if n == 0 {
        return true;
    }
    let len = n + 1;
    let mut digits = vec![0usize; len];
    loop {
        let seq: Vec<&T> = digits.iter().map(|&d| &carrier[d]).collect();
        let good = (0..len).any(|i| (i + 1..len).any(|j| rel.holds(seq[i], seq[j])));
        if !good {
            return false;
        }
        // odometer increment
        let mut pos = len;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
        }
    }
}
