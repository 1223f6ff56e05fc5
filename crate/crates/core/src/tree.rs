//! Finite ordered labeled trees, homeomorphic (Kruskal) embedding, the proper
//! subtree order, and bounded tree universes.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::label::{Alphabet, Label};
use crate::list::embeds_by;
use crate::relations::Relation;

/// `Node(label, children)`. Always has at least the root node.
///
/// The canonical order compares size first, then the canonical
/// serialization (`f(a,g(b))`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    pub label: Label,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn node(label: impl Into<Label>, children: Vec<Tree>) -> Tree {
        Tree {
            label: label.into(),
            children,
        }
    }

    pub fn leaf(label: impl Into<Label>) -> Tree {
        Tree::node(label, Vec::new())
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    pub fn labels(&self) -> Alphabet {
        let mut out = Alphabet::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Alphabet) {
        out.insert(self.label.clone());
        for c in &self.children {
            c.collect_labels(out);
        }
    }

    /// Every node strictly below the root, deduplicated, in canonical order.
    pub fn proper_subtrees(&self) -> BTreeSet<Tree> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<&Tree> = self.children.iter().collect();
        while let Some(t) = stack.pop() {
            stack.extend(t.children.iter());
            out.insert(t.clone());
        }
        out
    }

    /// This tree with child `index` replaced.
    pub fn with_child(&self, index: usize, child: Tree) -> Tree {
        let mut children = self.children.clone();
        children[index] = child;
        Tree {
            label: self.label.clone(),
            children,
        }
    }

    fn serial_bytes(&self) -> SerialBytes<'_> {
        SerialBytes {
            stack: vec![Piece::Tree(self)],
        }
    }
}

/// Lazy byte stream of the canonical serialization, used for ordering
/// without allocating strings.
struct SerialBytes<'a> {
    stack: Vec<Piece<'a>>,
}

enum Piece<'a> {
    Tree(&'a Tree),
    Label(&'a [u8]),
    Byte(u8),
}

impl Iterator for SerialBytes<'_> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        loop {
            match self.stack.pop()? {
                Piece::Byte(b) => return Some(b),
                Piece::Label(bytes) => {
                    if let Some((&first, rest)) = bytes.split_first() {
                        if !rest.is_empty() {
                            self.stack.push(Piece::Label(rest));
                        }
                        return Some(first);
                    }
                }
                Piece::Tree(t) => {
                    if !t.children.is_empty() {
                        self.stack.push(Piece::Byte(b')'));
                        for (i, c) in t.children.iter().enumerate().rev() {
                            self.stack.push(Piece::Tree(c));
                            if i > 0 {
                                self.stack.push(Piece::Byte(b','));
                            }
                        }
                        self.stack.push(Piece::Byte(b'('));
                    }
                    self.stack.push(Piece::Label(t.label.as_str().as_bytes()));
                }
            }
        }
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.size()
            .cmp(&other.size())
            .then_with(|| self.serial_bytes().cmp(other.serial_bytes()))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn tree_size(t: &Tree) -> usize {
    t.size()
}

/// Homeomorphic embedding `s <= t` with respect to `base` on labels.
///
/// `s` embeds into `Node(g, ts)` if it is one of the children or embeds into
/// one, or if `s = Node(f, ss)` with `f ~ g` and `ss` list-embeds into `ts`
/// with this relation on elements. For a reflexive base the "is one of the
/// children" case is subsumed by "embeds into one".
pub fn tree_embeds(base: &Relation<Label>, s: &Tree, t: &Tree) -> bool {
    // the embedding maps nodes of s injectively into t
    if s.size() > t.size() {
        return false;
    }
    embeds_rec(base, s, t)
}

fn embeds_rec(base: &Relation<Label>, s: &Tree, t: &Tree) -> bool {
    if t.children.iter().any(|c| c == s || embeds_rec(base, s, c)) {
        return true;
    }
    base.holds(&s.label, &t.label)
        && embeds_by(&s.children, &t.children, |a, b| embeds_rec(base, a, b))
}

/// `s` occurs strictly below the root of `t`.
pub fn is_proper_subtree(s: &Tree, t: &Tree) -> bool {
    t.children.iter().any(|c| c == s || is_proper_subtree(s, c))
}

fn catalan(n: usize) -> usize {
    // C(n) = C(n-1) * 2(2n-1) / (n+1), saturating
    let mut c: usize = 1;
    for k in 1..=n {
        c = c.saturating_mul(2 * (2 * k - 1)) / (k + 1);
    }
    c
}

/// Number of ordered trees with at most `maxsize` nodes over `k` labels,
/// saturating.
pub fn tree_universe_size(k: usize, maxsize: usize) -> usize {
    let mut total: usize = 0;
    for n in 1..=maxsize {
        let labelings = (0..n).fold(1usize, |acc, _| acc.saturating_mul(k));
        total = total.saturating_add(catalan(n - 1).saturating_mul(labelings));
    }
    total
}

/// All trees with labels from `labels` and at most `maxsize` nodes, ordered
/// by size and then serialization.
pub fn enumerate_trees(labels: &Alphabet, maxsize: usize, guard: usize) -> Result<Vec<Tree>> {
    let size = tree_universe_size(labels.len(), maxsize);
    if size > guard {
        return Err(Error::UniverseTooLarge { size, limit: guard });
    }
    if labels.is_empty() || maxsize == 0 {
        return Ok(Vec::new());
    }
    // by_size[n]: trees of exactly n nodes; forests[m]: child lists of m nodes
    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); maxsize + 1];
    let mut forests: Vec<Vec<Vec<Tree>>> = vec![Vec::new(); maxsize];
    forests[0].push(Vec::new());
    for n in 1..=maxsize {
        let mut trees = Vec::new();
        for label in labels {
            for children in &forests[n - 1] {
                trees.push(Tree::node(label.clone(), children.clone()));
            }
        }
        trees.sort();
        by_size[n] = trees;
        if n < maxsize {
            // forests of total size n: first tree of size k, then a forest of n - k
            let mut fs = Vec::new();
            for k in 1..=n {
                for first in &by_size[k] {
                    for rest in &forests[n - k] {
                        let mut f = Vec::with_capacity(rest.len() + 1);
                        f.push(first.clone());
                        f.extend(rest.iter().cloned());
                        fs.push(f);
                    }
                }
            }
            forests[n] = fs;
        }
    }
    Ok(by_size.into_iter().flatten().collect())
}

/// Dense embedding table over an indexed tree universe.
#[derive(Clone, Debug)]
pub struct EmbedTable {
    pub universe: Vec<Tree>,
    holds: Vec<bool>,
}

impl EmbedTable {
    pub fn holds(&self, s: usize, t: usize) -> bool {
        self.holds[s * self.universe.len() + t]
    }

    /// Derived pairs in canonical order.
    pub fn pairs(&self) -> BTreeSet<(Tree, Tree)> {
        let n = self.universe.len();
        let mut out = BTreeSet::new();
        for s in 0..n {
            for t in 0..n {
                if self.holds(s, t) {
                    out.insert((self.universe[s].clone(), self.universe[t].clone()));
                }
            }
        }
        out
    }
}

/// The embedding pairs derivable inside the bounded universe from the four
/// rules
///
/// ```text
///   t in set ts                        ==>  t <= Node f ts
///   f ~ g,  ss <=* ts                  ==>  Node f ss <= Node g ts
///   s <= t,  t <= u                    ==>  s <= u
///   s <= t                             ==>  Node f (ss @ s # ts) <= Node f (ss @ t # ts)
/// ```
///
/// where `<=*` is list embedding with the relation itself on elements. The
/// rules are applied in rounds until no new pair appears.
pub fn tree_embed_oracle_table(
    base: &Relation<Label>,
    labels: &Alphabet,
    maxsize: usize,
    guard: usize,
) -> Result<EmbedTable> {
    let universe = enumerate_trees(labels, maxsize, guard)?;
    let n = universe.len();
    let index: HashMap<&Tree, usize> = universe.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let children: Vec<Vec<usize>> = universe
        .iter()
        .map(|t| t.children.iter().map(|c| index[c]).collect())
        .collect();
    let mut rel = vec![false; n * n];

    for (u, kids) in children.iter().enumerate() {
        for &c in kids {
            rel[c * n + u] = true;
        }
    }

    loop {
        let mut changed = false;

        // node rule
        for s in 0..n {
            for t in 0..n {
                if rel[s * n + t] || !base.holds(&universe[s].label, &universe[t].label) {
                    continue;
                }
                if star(&rel, n, &children[s], &children[t]) {
                    rel[s * n + t] = true;
                    changed = true;
                }
            }
        }

        // context rule
        for u in 0..n {
            for (pos, &c) in children[u].iter().enumerate() {
                for t in 0..n {
                    if !rel[c * n + t] {
                        continue;
                    }
                    let replaced = universe[u].with_child(pos, universe[t].clone());
                    if let Some(&v) = index.get(&replaced) {
                        if !rel[u * n + v] {
                            rel[u * n + v] = true;
                            changed = true;
                        }
                    }
                }
            }
        }

        // transitivity, closed in one Warshall pass
        for k in 0..n {
            for s in 0..n {
                if !rel[s * n + k] {
                    continue;
                }
                for u in 0..n {
                    if rel[k * n + u] && !rel[s * n + u] {
                        rel[s * n + u] = true;
                        changed = true;
                    }
                }
            }
        }

        if !changed {
            break;
        }
    }

    Ok(EmbedTable {
        universe,
        holds: rel,
    })
}

/// Pair-set form of [`tree_embed_oracle_table`].
pub fn tree_embed_oracle(
    base: &Relation<Label>,
    labels: &Alphabet,
    maxsize: usize,
    guard: usize,
) -> Result<BTreeSet<(Tree, Tree)>> {
    Ok(tree_embed_oracle_table(base, labels, maxsize, guard)?.pairs())
}

// The list rules read literally: [] <=* ys; xs <=* ys ==> xs <=* y#ys;
// x <= y, xs <=* ys ==> x#xs <=* y#ys.
fn star(rel: &[bool], n: usize, xs: &[usize], ys: &[usize]) -> bool {
    match (xs.split_first(), ys.split_first()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((&x, xs_rest)), Some((&y, ys_rest))) => {
            star(rel, n, xs, ys_rest) || (rel[x * n + y] && star(rel, n, xs_rest, ys_rest))
        }
    }
}
