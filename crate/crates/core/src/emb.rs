//! The `Emb` rewrite system on ground trees
//!
//! ```text
//!   f(ts) -> t       if t in set ts
//!   f(ts) -> g(ss)   if g ~ f and ss is ts with zero or more children deleted
//! ```
//!
//! closed under contexts, together with a brute-force check that
//! `s <= t` holds exactly when `t ->+ s`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::label::{Alphabet, Label};
use crate::relations::{is_reflexive_on, Relation};
use crate::tree::{enumerate_trees, tree_embeds, Tree};

/// How the diagonal `s = t` is treated by [`verify_emb_equivalence`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalConvention {
    /// The base is reflexive on the labels: `t <= t` is matched by
    /// `t ->+ t or s = t`.
    ReflexiveIdentity,
    /// The base is not reflexive on the labels: embedding is compared
    /// against `->+` alone.
    StrictOnly,
}

impl fmt::Display for DiagonalConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagonalConvention::ReflexiveIdentity => "reflexive base, diagonal matched by identity",
            DiagonalConvention::StrictOnly => "strict closure only",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disagreement {
    /// `s <= t` holds but `t` does not rewrite to `s`.
    EmbedsWithoutReach,
    /// `t ->+ s` but `s <= t` fails.
    ReachesWithoutEmbed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The smaller side `s`.
    pub embedded: Tree,
    /// The larger side `t`.
    pub host: Tree,
    pub kind: Disagreement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub pairs_checked: usize,
    pub agrees: bool,
    pub first_counterexample: Option<Counterexample>,
    pub convention: DiagonalConvention,
}

fn relabel_candidates(base: &Relation<Label>, t: &Tree) -> Vec<Label> {
    match base.carrier() {
        Some(c) => c
            .iter()
            .cloned()
            .collect::<Alphabet>()
            .into_iter()
            .collect(),
        None => t.labels().into_iter().collect(),
    }
}

/// All trees reachable from `t` in exactly one `Emb` step.
///
/// Relabeling candidates come from the base relation's carrier, or from the
/// labels of `t` when the relation has none. The identity instance of the
/// second rule is not a step.
pub fn emb_one_step(base: &Relation<Label>, t: &Tree) -> BTreeSet<Tree> {
    let labels = relabel_candidates(base, t);
    let mut out = BTreeSet::new();
    steps_into(base, &labels, t, &mut out);
    out
}

fn steps_into(base: &Relation<Label>, labels: &[Label], t: &Tree, out: &mut BTreeSet<Tree>) {
    // keep one child
    out.extend(t.children.iter().cloned());

    // relabel the root downwards and keep a subsequence of the children
    let k = t.children.len();
    assert!(
        k < usize::BITS as usize,
        "too many children to enumerate deletions"
    );
    for g in labels.iter().filter(|g| base.holds(g, &t.label)) {
        for keep in 0..(1usize << k) {
            if *g == t.label && keep == (1usize << k) - 1 {
                continue;
            }
            let children = t
                .children
                .iter()
                .enumerate()
                .filter(|(i, _)| keep & (1 << i) != 0)
                .map(|(_, c)| c.clone())
                .collect();
            out.insert(Tree::node(g.clone(), children));
        }
    }

    // context closure
    for (i, c) in t.children.iter().enumerate() {
        let mut inner = BTreeSet::new();
        steps_into(base, labels, c, &mut inner);
        for r in inner {
            out.insert(t.with_child(i, r));
        }
    }
}

/// Every tree reachable from `t` in one or more steps.
///
/// Breadth-first with a visited set; steps never add nodes, so the search
/// stays inside the finitely many trees of size at most `|t|`.
pub fn emb_reachable(base: &Relation<Label>, t: &Tree) -> BTreeSet<Tree> {
    let labels = relabel_candidates(base, t);
    let mut visited: BTreeSet<Tree> = BTreeSet::new();
    let mut frontier: BTreeSet<Tree> = BTreeSet::new();
    steps_into(base, &labels, t, &mut frontier);
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for u in frontier {
            if visited.insert(u.clone()) {
                steps_into(base, &labels, &u, &mut next);
            }
        }
        next.retain(|u| !visited.contains(u));
        frontier = next;
    }
    visited
}

/// `t ->+ s`.
pub fn emb_reaches(base: &Relation<Label>, t: &Tree, s: &Tree) -> bool {
    if s.size() > t.size() {
        return false;
    }
    let labels = relabel_candidates(base, t);
    let mut visited: BTreeSet<Tree> = BTreeSet::new();
    let mut frontier: BTreeSet<Tree> = BTreeSet::new();
    steps_into(base, &labels, t, &mut frontier);
    while !frontier.is_empty() {
        if frontier.contains(s) {
            return true;
        }
        let mut next = BTreeSet::new();
        for u in frontier {
            // nothing smaller than s can rewrite back up to it
            if u.size() < s.size() {
                continue;
            }
            if visited.insert(u.clone()) {
                steps_into(base, &labels, &u, &mut next);
            }
        }
        next.retain(|u| !visited.contains(u));
        frontier = next;
    }
    false
}

/// Checks `s <= t  <=>  t ->+ s` over every ordered pair of trees in the
/// universe, in canonical order.
pub fn verify_emb_equivalence(
    base: &Relation<Label>,
    labels: &Alphabet,
    maxsize: usize,
    guard: usize,
) -> Result<EquivalenceReport> {
    let universe = enumerate_trees(labels, maxsize, guard)?;
    let label_vec: Vec<Label> = labels.iter().cloned().collect();
    let base = base.clone().with_carrier(label_vec.iter().cloned());
    let convention = if is_reflexive_on(&base, &label_vec) {
        DiagonalConvention::ReflexiveIdentity
    } else {
        DiagonalConvention::StrictOnly
    };

    let reach: Vec<BTreeSet<Tree>> = universe.iter().map(|t| emb_reachable(&base, t)).collect();

    let mut pairs_checked = 0;
    for s in &universe {
        for (t, reachable) in universe.iter().zip(&reach) {
            pairs_checked += 1;
            let embeds = tree_embeds(&base, s, t);
            let rewrites = reachable.contains(s)
                || (convention == DiagonalConvention::ReflexiveIdentity && s == t);
            if embeds != rewrites {
                let kind = if embeds {
                    Disagreement::EmbedsWithoutReach
                } else {
                    Disagreement::ReachesWithoutEmbed
                };
                return Ok(EquivalenceReport {
                    pairs_checked,
                    agrees: false,
                    first_counterexample: Some(Counterexample {
                        embedded: s.clone(),
                        host: t.clone(),
                        kind,
                    }),
                    convention,
                });
            }
        }
    }
    Ok(EquivalenceReport {
        pairs_checked,
        agrees: true,
        first_counterexample: None,
        convention,
    })
}
