//! Text formats: trees, lists, base relations, and sequence files.
//!
//! ```text
//! tree  := label | label "(" ")" | label "(" tree ("," tree)* ")"
//! list  := "[" (label ("," label)*)? "]"
//! label := [A-Za-z0-9_]+
//! ```
//!
//! Whitespace is allowed between tokens. Relation files are line oriented:
//! `x <= y` declares a pair, `alphabet: a b c` declares extra labels, and
//! blank lines or lines starting with `#` are skipped.

use std::collections::BTreeSet;

use thiserror::Error;
use wqo::{Alphabet, Label, ListVal, Relation, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at offset {offset}: {message}")]
    At { offset: usize, message: String },
    #[error("parse error on line {line}: {message}")]
    Line { line: usize, message: String },
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::At {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn label(&mut self) -> Result<Label, ParseError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| !is_label_char(c)).unwrap_or(rest.len());
        if len == 0 {
            return self.error("expected a label");
        }
        self.pos += len;
        Ok(Label::new(&rest[..len]))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            self.error("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    fn tree(&mut self) -> Result<Tree, ParseError> {
        let label = self.label()?;
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            self.pos += 1;
            if self.peek() == Some(')') {
                self.pos += 1;
            } else {
                loop {
                    children.push(self.tree()?);
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return self.error("expected `,` or `)`"),
                    }
                }
            }
        }
        Ok(Tree::node(label, children))
    }
}

fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub fn parse_tree(text: &str) -> Result<Tree, ParseError> {
    let mut cur = Cursor::new(text);
    let t = cur.tree()?;
    cur.finish()?;
    Ok(t)
}

pub fn parse_list(text: &str) -> Result<ListVal, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect('[')?;
    let mut elements = Vec::new();
    if cur.peek() == Some(']') {
        cur.pos += 1;
    } else {
        loop {
            elements.push(cur.label()?);
            match cur.peek() {
                Some(',') => cur.pos += 1,
                Some(']') => {
                    cur.pos += 1;
                    break;
                }
                _ => return cur.error("expected `,` or `]`"),
            }
        }
    }
    cur.finish()?;
    Ok(ListVal::new(elements))
}

pub fn parse_label(text: &str) -> Result<Label, ParseError> {
    let mut cur = Cursor::new(text);
    let l = cur.label()?;
    cur.finish()?;
    Ok(l)
}

/// A base relation on labels as read from a relation file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BaseRelationSpec {
    pub pairs: BTreeSet<(Label, Label)>,
    /// Labels from the pairs plus any `alphabet:` declarations.
    pub labels: Alphabet,
    pub reflexive_closure: bool,
}

impl BaseRelationSpec {
    /// Adds every diagonal pair over the label set.
    pub fn close_reflexively(&mut self) {
        self.reflexive_closure = true;
        for l in &self.labels {
            self.pairs.insert((l.clone(), l.clone()));
        }
    }

    /// The relation, with the label set as carrier.
    pub fn to_relation(&self) -> Relation<Label> {
        Relation::from_pairs(self.pairs.iter().cloned()).with_carrier(self.labels.iter().cloned())
    }
}

pub fn parse_relation(text: &str, reflexive: bool) -> Result<BaseRelationSpec, ParseError> {
    let mut spec = BaseRelationSpec::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at_line = |e: ParseError| match e {
            ParseError::At { message, .. } => ParseError::Line {
                line: line_no,
                message,
            },
            other => other,
        };
        if let Some(rest) = line.strip_prefix("alphabet:") {
            for name in rest.split_whitespace() {
                spec.labels.insert(parse_label(name).map_err(at_line)?);
            }
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("<=") else {
            return Err(ParseError::Line {
                line: line_no,
                message: "expected `x <= y` or `alphabet: ...`".into(),
            });
        };
        let x = parse_label(lhs).map_err(at_line)?;
        let y = parse_label(rhs).map_err(at_line)?;
        spec.labels.insert(x.clone());
        spec.labels.insert(y.clone());
        spec.pairs.insert((x, y));
    }
    if reflexive {
        spec.close_reflexively();
    }
    Ok(spec)
}

/// One object per line; blank lines and `#` comments are skipped.
pub fn parse_seq_lines<T>(
    text: &str,
    parse: impl Fn(&str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse(line).map_err(|e| ParseError::Line {
            line: idx + 1,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees() {
        let t = parse_tree("f(a,g(b))").unwrap();
        assert_eq!(
            t,
            Tree::node(
                "f",
                vec![Tree::leaf("a"), Tree::node("g", vec![Tree::leaf("b")])]
            )
        );
        assert_eq!(parse_tree("a").unwrap(), Tree::leaf("a"));
        assert_eq!(parse_tree("a()").unwrap(), Tree::leaf("a"));
        assert_eq!(parse_tree(" f ( a , b ) ").unwrap().to_string(), "f(a,b)");
    }

    #[test]
    fn tree_errors() {
        assert_eq!(
            parse_tree("f("),
            Err(ParseError::At {
                offset: 2,
                message: "expected a label".into()
            })
        );
        assert!(matches!(
            parse_tree("f(a"),
            Err(ParseError::At { offset: 3, .. })
        ));
        assert!(matches!(
            parse_tree("f(a))"),
            Err(ParseError::At { offset: 4, .. })
        ));
        assert!(matches!(
            parse_tree(""),
            Err(ParseError::At { offset: 0, .. })
        ));
        assert!(matches!(
            parse_tree("f(a,)"),
            Err(ParseError::At { offset: 4, .. })
        ));
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("[a,b,c]").unwrap().len(), 3);
        assert!(parse_list("[]").unwrap().is_empty());
        assert_eq!(parse_list(" [ a , b ] ").unwrap().to_string(), "[a,b]");
        assert!(matches!(
            parse_list("[a,]"),
            Err(ParseError::At { offset: 3, .. })
        ));
        assert!(parse_list("a,b").is_err());
        assert!(parse_list("[a b]").is_err());
    }

    #[test]
    fn relations() {
        let spec = parse_relation("a <= b", false).unwrap();
        assert_eq!(
            spec.pairs,
            [(Label::from("a"), Label::from("b"))].into_iter().collect()
        );

        let spec = parse_relation("a <= b", true).unwrap();
        let want: BTreeSet<_> = [("a", "b"), ("a", "a"), ("b", "b")]
            .into_iter()
            .map(|(x, y)| (Label::from(x), Label::from(y)))
            .collect();
        assert_eq!(spec.pairs, want);

        assert!(matches!(
            parse_relation("a < b", false),
            Err(ParseError::Line { line: 1, .. })
        ));

        let spec = parse_relation("# comment\n\nalphabet: a b c\nb<=c\n", true).unwrap();
        assert_eq!(spec.labels.len(), 3);
        assert_eq!(spec.pairs.len(), 4);
        let rel = spec.to_relation();
        assert!(rel.holds(&Label::from("b"), &Label::from("c")));
        assert!(!rel.holds(&Label::from("c"), &Label::from("b")));

        assert!(matches!(
            parse_relation("a <= b\nalphabet: x-y", false),
            Err(ParseError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn sequence_files() {
        let got = parse_seq_lines("# header\n[a,a]\n\n[a]\n", parse_list).unwrap();
        assert_eq!(got.len(), 2);
        assert!(matches!(
            parse_seq_lines("[a]\n[a,\n", parse_list),
            Err(ParseError::Line { line: 2, .. })
        ));
    }
}
