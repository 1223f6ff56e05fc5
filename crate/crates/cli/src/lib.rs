//! Command-line front end for the `wqo` crate.
//!
//! [`run`] executes a parsed [`Cli`] and returns the exit code together
//! with the text destined for stdout and stderr, so that the binary is a thin
//! wrapper and tests can drive commands in-process.

pub mod parse;

use std::fmt::{Display, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use wqo::emb::verify_emb_equivalence;
use wqo::list::enumerate_lists;
use wqo::mbs::{
    broken_list_context, broken_tree_context, check_locale_axioms, list_context,
    longest_bad_sequence, minimize_bad_sequence, tree_context, AxiomReport, MbsContext, Verdict,
    WellFoundednessWitness,
};
use wqo::relations::find_good_pair;
use wqo::tree::{enumerate_trees, tree_embeds};
use wqo::{list::list_embeds, Alphabet, Label, ListVal, Relation, Tree};

pub use parse::{
    parse_label, parse_list, parse_relation, parse_seq_lines, parse_tree, BaseRelationSpec,
    ParseError,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wqo",
    version,
    about = "Embedding orders, Emb rewriting, and bad sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RelArgs {
    /// Relation file with `x <= y` lines and optional `alphabet:` lines
    #[arg(long, value_name = "FILE")]
    pub rel: PathBuf,
    /// Add every diagonal pair to the relation
    #[arg(long)]
    pub refl: bool,
    /// Maximum universe size to enumerate
    #[arg(long, value_name = "N", default_value_t = wqo::DEFAULT_UNIVERSE_GUARD)]
    pub guard: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    List,
    Tree,
    Atom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjKind {
    List,
    Tree,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide list embedding
    EmbedList {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(allow_hyphen_values = true)]
        xs: String,
        #[arg(allow_hyphen_values = true)]
        ys: String,
    },
    /// Decide tree embedding
    EmbedTree {
        #[command(flatten)]
        rel: RelArgs,
        s: String,
        t: String,
    },
    /// Print the least indices `i j` with `s[i] <= s[j]`
    GoodPair {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long, value_enum)]
        kind: SeqKind,
        #[arg(long, value_name = "FILE")]
        seq: PathBuf,
    },
    /// Minimize a bad sequence position by position
    Minimize {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long, value_enum)]
        kind: ObjKind,
        #[arg(long, value_name = "FILE")]
        seq: PathBuf,
    },
    /// Compare tree embedding with Emb reachability
    EmbCheck {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<String>,
        #[arg(long)]
        maxsize: usize,
    },
    /// Check the minimal-bad-sequence axioms on a bounded universe
    Axioms {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long, value_enum)]
        kind: ObjKind,
        #[arg(long)]
        maxsize: usize,
        /// Use equality as the strong relation
        #[arg(long = "break")]
        broken: bool,
    },
    /// Print a longest bad sequence over a bounded universe
    MaxBad {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long, value_enum)]
        kind: ObjKind,
        #[arg(long)]
        maxsize: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.stderr = note;
        self
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    ParseFile { path: PathBuf, source: ParseError },
    #[error("argument `{arg}`: {source}")]
    ParseArg { arg: String, source: ParseError },
    #[error("label `{0}` is not declared in the relation file")]
    UnknownLabel(Label),
    #[error(transparent)]
    Core(#[from] wqo::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(wqo::Error::NotBad(..)) => EXIT_FAILS,
            _ => EXIT_ERROR,
        }
    }
}

/// Runs a parsed invocation. Never panics on bad input; every failure maps
/// to exit code 1 or 2 with a diagnostic on stderr.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_relation(args: &RelArgs) -> Result<BaseRelationSpec, CliError> {
    let text = read(&args.rel)?;
    parse_relation(&text, args.refl).map_err(|source| CliError::ParseFile {
        path: args.rel.clone(),
        source,
    })
}

fn parse_arg<T>(text: &str, p: impl Fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    p(text).map_err(|source| CliError::ParseArg {
        arg: text.to_string(),
        source,
    })
}

fn load_seq<T>(path: &Path, p: impl Fn(&str) -> Result<T, ParseError>) -> Result<Vec<T>, CliError> {
    let text = read(path)?;
    parse_seq_lines(&text, p).map_err(|source| CliError::ParseFile {
        path: path.to_path_buf(),
        source,
    })
}

fn check_labels<'a>(
    spec: &BaseRelationSpec,
    labels: impl IntoIterator<Item = &'a Label>,
) -> Result<(), CliError> {
    for l in labels {
        if !spec.labels.contains(l) {
            return Err(CliError::UnknownLabel(l.clone()));
        }
    }
    Ok(())
}

fn lines<T: Display>(items: &[T]) -> String {
    let mut out = String::new();
    for x in items {
        writeln!(out, "{x}").unwrap();
    }
    out
}

fn verdict_code(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::EmbedList { rel, xs, ys } => {
            let spec = load_relation(rel)?;
            let xs = parse_arg(xs, parse_list)?;
            let ys = parse_arg(ys, parse_list)?;
            check_labels(&spec, xs.elements().iter().chain(ys.elements()))?;
            let holds = list_embeds(&spec.to_relation(), &xs, &ys);
            Ok(Outcome::new(verdict_code(holds), format!("{holds}\n")))
        }
        Command::EmbedTree { rel, s, t } => {
            let spec = load_relation(rel)?;
            let s = parse_arg(s, parse_tree)?;
            let t = parse_arg(t, parse_tree)?;
            check_labels(&spec, s.labels().iter().chain(t.labels().iter()))?;
            let holds = tree_embeds(&spec.to_relation(), &s, &t);
            Ok(Outcome::new(verdict_code(holds), format!("{holds}\n")))
        }
        Command::GoodPair { rel, kind, seq } => {
            let spec = load_relation(rel)?;
            let base = spec.to_relation();
            let found = match kind {
                SeqKind::Atom => {
                    let s = load_seq(seq, parse_label)?;
                    check_labels(&spec, &s)?;
                    find_good_pair(&base, &s)
                }
                SeqKind::List => {
                    let s = load_seq(seq, parse_list)?;
                    check_labels(&spec, s.iter().flat_map(|xs| xs.elements()))?;
                    let rel =
                        Relation::new(move |a: &ListVal, b: &ListVal| list_embeds(&base, a, b));
                    find_good_pair(&rel, &s)
                }
                SeqKind::Tree => {
                    let s = load_seq(seq, parse_tree)?;
                    let labels: Alphabet = s.iter().flat_map(Tree::labels).collect();
                    check_labels(&spec, &labels)?;
                    let rel = Relation::new(move |a: &Tree, b: &Tree| tree_embeds(&base, a, b));
                    find_good_pair(&rel, &s)
                }
            };
            Ok(match found {
                Some((i, j)) => Outcome::new(EXIT_HOLDS, format!("{i} {j}\n")),
                None => Outcome::new(EXIT_FAILS, "none\n".to_string()),
            })
        }
        Command::Minimize { rel, kind, seq } => {
            let spec = load_relation(rel)?;
            let base = spec.to_relation();
            let out = match kind {
                ObjKind::List => {
                    let s = load_seq(seq, parse_list)?;
                    check_labels(&spec, s.iter().flat_map(|xs| xs.elements()))?;
                    let ctx = list_context(base, spec.labels.clone());
                    lines(&minimize_bad_sequence(&ctx, &s)?)
                }
                ObjKind::Tree => {
                    let s = load_seq(seq, parse_tree)?;
                    let labels: Alphabet = s.iter().flat_map(Tree::labels).collect();
                    check_labels(&spec, &labels)?;
                    let ctx = tree_context(base, spec.labels.clone());
                    lines(&minimize_bad_sequence(&ctx, &s)?)
                }
            };
            Ok(Outcome::new(EXIT_HOLDS, out))
        }
        Command::EmbCheck {
            rel,
            labels,
            maxsize,
        } => {
            let spec = load_relation(rel)?;
            let labels = labels
                .iter()
                .map(|l| parse_arg(l, parse_label))
                .collect::<Result<Alphabet, _>>()?;
            check_labels(&spec, &labels)?;
            let report = verify_emb_equivalence(&spec.to_relation(), &labels, *maxsize, rel.guard)?;
            let mut out = format!(
                "agrees: {} ({} pairs)\n",
                report.agrees, report.pairs_checked
            );
            if let Some(cx) = &report.first_counterexample {
                writeln!(
                    out,
                    "counterexample: {} <= {} ({:?})",
                    cx.embedded, cx.host, cx.kind
                )
                .unwrap();
            }
            Ok(Outcome::new(verdict_code(report.agrees), out)
                .with_note(format!("convention: {}\n", report.convention)))
        }
        Command::Axioms {
            rel,
            kind,
            maxsize,
            broken,
        } => {
            let spec = load_relation(rel)?;
            let base = spec.to_relation();
            let labels = spec.labels.clone();
            let report = match kind {
                ObjKind::List => {
                    let universe = enumerate_lists(&labels, *maxsize, rel.guard)?;
                    let ctx = if *broken {
                        broken_list_context(labels)
                    } else {
                        list_context(base, labels)
                    };
                    render_axioms(&check_locale_axioms(&ctx, &universe))
                }
                ObjKind::Tree => {
                    let universe = enumerate_trees(&labels, *maxsize, rel.guard)?;
                    let ctx = if *broken {
                        broken_tree_context(labels)
                    } else {
                        tree_context(base, labels)
                    };
                    render_axioms(&check_locale_axioms(&ctx, &universe))
                }
            };
            Ok(report)
        }
        Command::MaxBad { rel, kind, maxsize } => {
            let spec = load_relation(rel)?;
            let base = spec.to_relation();
            let labels = spec.labels.clone();
            let out = match kind {
                ObjKind::List => {
                    let universe = enumerate_lists(&labels, *maxsize, rel.guard)?;
                    max_bad(&list_context(base, labels), &universe)
                }
                ObjKind::Tree => {
                    let universe = enumerate_trees(&labels, *maxsize, rel.guard)?;
                    max_bad(&tree_context(base, labels), &universe)
                }
            };
            Ok(Outcome::new(EXIT_HOLDS, out))
        }
    }
}

fn max_bad<T: Ord + Clone + Display>(ctx: &MbsContext<T>, universe: &[T]) -> String {
    lines(&longest_bad_sequence(ctx, universe))
}

fn tuple<T: Display>(items: &[&T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn render_axioms<T: Display>(report: &AxiomReport<T>) -> Outcome {
    fn line<W>(out: &mut String, name: &str, v: &Verdict<W>, show: impl Fn(&W) -> String) {
        match v {
            Verdict::Pass => writeln!(out, "{name}: pass").unwrap(),
            Verdict::Fail(w) => writeln!(out, "{name}: fail {}", show(w)).unwrap(),
        }
    }
    let mut out = String::new();
    line(
        &mut out,
        "right-compatibility",
        &report.right_compatibility,
        |(x, y, z)| tuple(&[x, y, z]),
    );
    line(
        &mut out,
        "well-foundedness",
        &report.well_foundedness,
        |w| match w {
            WellFoundednessWitness::Cycle(c) => {
                format!("cycle {}", tuple(&c.iter().collect::<Vec<_>>()))
            }
            WellFoundednessWitness::RankNotDecreasing { lower, upper } => {
                format!("rank {}", tuple(&[lower, upper]))
            }
        },
    );
    line(
        &mut out,
        "transitivity",
        &report.transitivity,
        |(x, y, z)| tuple(&[x, y, z]),
    );
    line(
        &mut out,
        "reflects-membership",
        &report.reflects_membership,
        |(x, y)| tuple(&[x, y]),
    );
    Outcome::new(verdict_code(report.all_pass()), out)
}
