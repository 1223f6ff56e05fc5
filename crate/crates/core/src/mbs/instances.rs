//! The list and tree instantiations, plus deliberately broken variants used
//! to exercise the axiom checker.

use crate::label::{Alphabet, Label};
use crate::list::{is_strict_suffix, list_embeds, ListVal};
use crate::relations::Relation;
use crate::tree::{is_proper_subtree, tree_embeds, Tree};

use super::MbsContext;

/// Lists over `alphabet`, embedding w.r.t. `base`, strict suffix as the weak
/// order, length as rank.
pub fn list_context(base: Relation<Label>, alphabet: Alphabet) -> MbsContext<ListVal> {
    let strong = Relation::new(move |xs: &ListVal, ys: &ListVal| list_embeds(&base, xs, ys));
    list_shaped(strong, alphabet)
}

/// List equality as the strong relation. Right-compatibility fails.
pub fn broken_list_context(alphabet: Alphabet) -> MbsContext<ListVal> {
    list_shaped(Relation::equality(), alphabet)
}

fn list_shaped(strong: Relation<ListVal>, alphabet: Alphabet) -> MbsContext<ListVal> {
    MbsContext::new(
        move |xs: &ListVal| xs.elements().iter().all(|a| alphabet.contains(a)),
        strong,
        Relation::new(is_strict_suffix),
        |xs: &ListVal| xs.strict_suffixes().collect(),
        ListVal::len,
    )
}

/// Trees over `labels`, homeomorphic embedding w.r.t. `base`, proper subtree
/// as the weak order, node count as rank.
pub fn tree_context(base: Relation<Label>, labels: Alphabet) -> MbsContext<Tree> {
    let strong = Relation::new(move |s: &Tree, t: &Tree| tree_embeds(&base, s, t));
    tree_shaped(strong, labels)
}

/// Tree equality as the strong relation. Right-compatibility fails.
pub fn broken_tree_context(labels: Alphabet) -> MbsContext<Tree> {
    tree_shaped(Relation::equality(), labels)
}

fn tree_shaped(strong: Relation<Tree>, labels: Alphabet) -> MbsContext<Tree> {
    MbsContext::new(
        move |t: &Tree| t.labels().is_subset(&labels),
        strong,
        Relation::new(is_proper_subtree),
        |t: &Tree| t.proper_subtrees().into_iter().collect(),
        Tree::size,
    )
}
