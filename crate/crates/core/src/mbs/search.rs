//! Memoized bitset search for bad sequences over an indexed candidate space.
//!
//! Only the constructors use this; the public checkers in the parent module
//! evaluate the strong relation directly.

use std::collections::HashMap;

use crate::relations::Relation;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn full(n: usize) -> Bits {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Bits(words)
    }

    pub(crate) fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    pub(crate) fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

pub(crate) struct BadSearch {
    /// dominated[p]: candidates c with p ~ c, i.e. forbidden after p.
    dominated: Vec<Bits>,
    size: usize,
    memo: HashMap<(Bits, usize), usize>,
}

impl BadSearch {
    pub(crate) fn new<T>(strong: &Relation<T>, space: &[T]) -> BadSearch {
        let n = space.len();
        let dominated = space
            .iter()
            .map(|p| {
                let mut b = Bits::empty(n);
                for (c, x) in space.iter().enumerate() {
                    if strong.holds(p, x) {
                        b.set(c);
                    }
                }
                b
            })
            .collect();
        BadSearch {
            dominated,
            size: n,
            memo: HashMap::new(),
        }
    }

    pub(crate) fn all(&self) -> Bits {
        Bits::full(self.size)
    }

    /// Candidates still allowed after appending `p`.
    pub(crate) fn after(&self, allowed: &Bits, p: usize) -> Bits {
        allowed.minus(&self.dominated[p])
    }

    /// Length of the longest bad extension using only `allowed` candidates,
    /// capped at `horizon`.
    pub(crate) fn longest(&mut self, allowed: &Bits, horizon: usize) -> usize {
        if horizon == 0 {
            return 0;
        }
        let key = (allowed.clone(), horizon);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut best = 0;
        let options: Vec<usize> = allowed.iter().collect();
        for c in options {
            let next = self.after(allowed, c);
            best = best.max(1 + self.longest(&next, horizon - 1));
            if best == horizon {
                break;
            }
        }
        self.memo.insert(key, best);
        best
    }

    /// Some bad extension of exactly `remaining` more elements exists.
    pub(crate) fn extends(&mut self, allowed: &Bits, remaining: usize) -> bool {
        self.longest(allowed, remaining) == remaining
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_roundtrip() {
        let mut b = Bits::empty(130);
        for i in [0, 63, 64, 129] {
            b.set(i);
        }
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(Bits::full(65).iter().count(), 65);
        assert_eq!(Bits::full(64).iter().count(), 64);
        assert!(Bits::full(3).minus(&b).contains(1));
        assert!(!Bits::full(3).minus(&b).contains(0));
    }

    #[test]
    fn longest_over_a_chain() {
        // 0 <= 1 <= 2: bad sequences strictly descend
        let le = Relation::new(|x: &u32, y: &u32| x <= y);
        let mut s = BadSearch::new(&le, &[0, 1, 2]);
        let all = s.all();
        assert_eq!(s.longest(&all, 10), 3);
        assert!(s.extends(&all, 3));
        assert!(!s.extends(&all, 4));
    }
}
