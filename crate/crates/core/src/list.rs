//! Homeomorphic embedding on finite lists, the strict suffix order, and
//! bounded list universes.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::label::{Alphabet, Label};
use crate::relations::Relation;

/// A finite list of atoms.
///
/// Ordered canonically: shorter lists first, then lexicographically by atom.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ListVal(Vec<Label>);

impl ListVal {
    pub fn new(elements: Vec<Label>) -> Self {
        ListVal(elements)
    }

    pub fn empty() -> Self {
        ListVal(Vec::new())
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Self {
        ListVal(names.iter().map(|n| Label::new(n.as_ref())).collect())
    }

    pub fn elements(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x # self`
    pub fn cons(&self, head: Label) -> ListVal {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(head);
        v.extend(self.0.iter().cloned());
        ListVal(v)
    }

    /// Strict suffixes, longest first.
    pub fn strict_suffixes(&self) -> impl Iterator<Item = ListVal> + '_ {
        (1..=self.0.len()).map(move |k| ListVal(self.0[k..].to_vec()))
    }
}

impl Ord for ListVal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ListVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ListVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ListVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Embedding of `xs` into `ys` with an arbitrary element relation.
///
/// Greedy leftmost matching: each element of `xs` takes the first remaining
/// position of `ys` it relates to. Matching earlier never leaves a shorter
/// remainder than matching later, so greedy finds a monotone matching iff one
/// exists.
pub fn embeds_by<T, U, F>(xs: &[T], ys: &[U], mut related: F) -> bool
where
    F: FnMut(&T, &U) -> bool,
{
    let mut rest = ys.iter();
    'outer: for x in xs {
        for y in rest.by_ref() {
            if related(x, y) {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Homeomorphic embedding of `xs` into `ys` with respect to `base`.
pub fn list_embeds(base: &Relation<Label>, xs: &ListVal, ys: &ListVal) -> bool {
    embeds_by(&xs.0, &ys.0, |x, y| base.holds(x, y))
}

/// `ys = us @ xs` with `us` non-empty.
pub fn is_strict_suffix(xs: &ListVal, ys: &ListVal) -> bool {
    ys.len() > xs.len() && ys.0.ends_with(&xs.0)
}

/// Number of lists of length at most `maxlen` over `k` atoms, saturating.
pub fn list_universe_size(k: usize, maxlen: usize) -> usize {
    let mut total: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=maxlen {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(k);
    }
    total
}

/// All lists over `alphabet` of length at most `maxlen`, in canonical order.
pub fn enumerate_lists(alphabet: &Alphabet, maxlen: usize, guard: usize) -> Result<Vec<ListVal>> {
    let size = list_universe_size(alphabet.len(), maxlen);
    if size > guard {
        return Err(Error::UniverseTooLarge { size, limit: guard });
    }
    let mut out = vec![ListVal::empty()];
    let mut layer = vec![ListVal::empty()];
    for _ in 0..maxlen {
        if alphabet.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for xs in &layer {
            for a in alphabet {
                let mut v = xs.0.clone();
                v.push(a.clone());
                next.push(ListVal(v));
            }
        }
        // appending to lexicographically sorted prefixes keeps the layer sorted
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// The embedding pairs derivable inside the bounded universe from the three
/// rules
///
/// ```text
///   [] <= ys
///   xs <= ys            ==>  xs <= y # ys
///   x ~ y,  xs <= ys    ==>  x # xs <= y # ys
/// ```
///
/// computed as a least fixpoint by forward chaining from the axiom instances.
pub fn list_embed_oracle(
    base: &Relation<Label>,
    alphabet: &Alphabet,
    maxlen: usize,
    guard: usize,
) -> Result<BTreeSet<(ListVal, ListVal)>> {
    let universe = enumerate_lists(alphabet, maxlen, guard)?;
    let mut derived: BTreeSet<(ListVal, ListVal)> = BTreeSet::new();
    let mut queue: VecDeque<(ListVal, ListVal)> = VecDeque::new();

    for ys in &universe {
        let fact = (ListVal::empty(), ys.clone());
        if derived.insert(fact.clone()) {
            queue.push_back(fact);
        }
    }

    while let Some((xs, ys)) = queue.pop_front() {
        if ys.len() >= maxlen {
            continue;
        }
        let mut fresh = Vec::new();
        for y in alphabet {
            fresh.push((xs.clone(), ys.cons(y.clone())));
            if xs.len() < maxlen {
                for x in alphabet {
                    if base.holds(x, y) {
                        fresh.push((xs.cons(x.clone()), ys.cons(y.clone())));
                    }
                }
            }
        }
        for fact in fresh {
            if derived.insert(fact.clone()) {
                queue.push_back(fact);
            }
        }
    }
    Ok(derived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::alphabet;
    use crate::DEFAULT_UNIVERSE_GUARD as GUARD;

    fn l(names: &[&str]) -> ListVal {
        ListVal::from_names(names)
    }

    fn eq() -> Relation<Label> {
        Relation::equality()
    }

    #[test]
    fn embedding_examples() {
        assert!(list_embeds(&eq(), &l(&[]), &l(&["b"])));
        assert!(list_embeds(&eq(), &l(&["a", "b"]), &l(&["a", "a", "b"])));
        assert!(!list_embeds(&eq(), &l(&["b", "a"]), &l(&["a", "b"])));
        assert!(!list_embeds(&eq(), &l(&["a"]), &l(&[])));
    }

    #[test]
    fn embedding_uses_base() {
        let base = Relation::from_pairs([(Label::from("a"), Label::from("b"))]);
        assert!(list_embeds(&base, &l(&["a"]), &l(&["c", "b"])));
        assert!(!list_embeds(&base, &l(&["a"]), &l(&["a"])));
    }

    #[test]
    fn oracle_small_cases() {
        let a = alphabet(["a"]);
        let got = list_embed_oracle(&eq(), &a, 1, GUARD).unwrap();
        let want: BTreeSet<_> = [
            (l(&[]), l(&[])),
            (l(&[]), l(&["a"])),
            (l(&["a"]), l(&["a"])),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let ab = alphabet(["a", "b"]);
        let got = list_embed_oracle(&eq(), &ab, 0, GUARD).unwrap();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(l(&[]), l(&[]))]);

        let got = list_embed_oracle(&Relation::new(|_, _| true), &ab, 3, GUARD).unwrap();
        assert!(got.iter().all(|(xs, ys)| xs.is_empty() || !ys.is_empty()));
    }

    #[test]
    fn oracle_guard() {
        let ab = alphabet(["a", "b"]);
        assert_eq!(
            list_embed_oracle(&eq(), &ab, 3, 10),
            Err(Error::UniverseTooLarge {
                size: 15,
                limit: 10
            })
        );
    }

    #[test]
    fn strict_suffix() {
        assert!(is_strict_suffix(&l(&["b", "c"]), &l(&["a", "b", "c"])));
        assert!(!is_strict_suffix(&l(&["a", "b"]), &l(&["a", "b"])));
        assert!(is_strict_suffix(&l(&[]), &l(&["a"])));
        assert!(!is_strict_suffix(&l(&["a", "b"]), &l(&["a", "b", "c"])));
    }

    #[test]
    fn enumeration() {
        let ab = alphabet(["a", "b"]);
        let lists = enumerate_lists(&ab, 2, GUARD).unwrap();
        assert_eq!(lists.len(), 7);
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
        assert_eq!(lists[3], l(&["a", "a"]));
        assert_eq!(lists[4], l(&["a", "b"]));

        assert_eq!(
            enumerate_lists(&Alphabet::new(), 3, GUARD).unwrap(),
            vec![l(&[])]
        );
        assert_eq!(
            enumerate_lists(&alphabet(["a"]), 0, GUARD).unwrap(),
            vec![l(&[])]
        );
    }

    #[test]
    fn display() {
        assert_eq!(l(&["a", "b", "c"]).to_string(), "[a,b,c]");
        assert_eq!(l(&[]).to_string(), "[]");
    }

    #[test]
    fn suffixes() {
        let got: Vec<_> = l(&["a", "b"]).strict_suffixes().collect();
        assert_eq!(got, vec![l(&["b"]), l(&[])]);
    }
}
