//! Command-line front end.
//!
//! Reports are line-oriented `key=value`. Exit status: 0 on success, 1 when
//! a tested predicate comes out negative (`covers --expect`, `verify` with
//! discrepancies), 2 on usage or input errors.

use std::io::Read;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cover;
use crate::enumerate::{self, Mode};
use crate::error::{Error, Result};
use crate::format::{self, Format, Parsed};
use crate::invariants::{curve_data, CurveData};
use crate::involution::to_involution;
use crate::oracle;

#[derive(Debug, Parser)]
#[command(
    name = "dessin",
    about = "Coverings and invariants of plane trees and unicellular dessins"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Walk,
    Rotation,
    Involution,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Walk => Format::Walk,
            FormatArg::Rotation => Format::Rotation,
            FormatArg::Involution => Format::Involution,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Tree,
    Chain,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Rooted,
    Unrooted,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report n, o, genus, d_c, d_s and divisor order of a tree
    Invariants {
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Literal, file path, or '-' for standard input
        input: String,
    },
    /// Print the normalized involution as 2n integers
    Phi {
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long)]
        canonical: bool,
        input: String,
    },
    /// Test whether the input covers a d-edged tree, chain or star
    Covers {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        input: String,
    },
    /// Print the d-edged dessin covered by the input
    Quotient {
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum)]
        out_format: Option<FormatArg>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        input: String,
    },
    /// List plane trees with a given number of edges
    Enumerate {
        #[arg(long)]
        edges: usize,
        #[arg(long, value_enum, default_value = "unrooted")]
        mode: ModeArg,
        #[arg(long)]
        count_only: bool,
        /// Comma-separated comparisons over n, o, genus, d_c, d_s, order
        #[arg(long)]
        filter: Option<String>,
    },
    /// Find a tree with 2g+2 odd vertices and divisor order m
    Search {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 14)]
        max_edges: usize,
    },
    /// Cross-check every covering criterion on all small trees
    Verify {
        #[arg(long, default_value_t = 10)]
        max_edges: usize,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(e: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    N,
    O,
    Genus,
    DC,
    DS,
    Order,
}

/// Conjunction of comparisons such as `genus=1,order>=3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    terms: Vec<(Field, Op, usize)>,
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for raw in s.split(',') {
            let term = raw.trim();
            if term.is_empty() {
                continue;
            }
            let pos = term
                .find(['=', '!', '<', '>'])
                .ok_or_else(|| Error::Parse(format!("filter term without operator: '{term}'")))?;
            let (key, rest) = term.split_at(pos);
            let (op, value) = [
                ("<=", Op::Le),
                (">=", Op::Ge),
                ("!=", Op::Ne),
                ("==", Op::Eq),
                ("=", Op::Eq),
                ("<", Op::Lt),
                (">", Op::Gt),
            ]
            .iter()
            .find_map(|(sym, op)| rest.strip_prefix(sym).map(|v| (*op, v)))
            .ok_or_else(|| Error::Parse(format!("bad operator in '{term}'")))?;
            let field = match key.trim() {
                "n" => Field::N,
                "o" => Field::O,
                "genus" => Field::Genus,
                "d_c" => Field::DC,
                "d_s" => Field::DS,
                "order" => Field::Order,
                other => return Err(Error::Parse(format!("unknown filter key '{other}'"))),
            };
            let value = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad value in '{term}'")))?;
            terms.push((field, op, value));
        }
        Ok(Filter { terms })
    }
}

impl Filter {
    pub fn matches(&self, data: &CurveData) -> bool {
        self.terms.iter().all(|&(field, op, v)| {
            let x = match field {
                Field::N => data.n,
                Field::O => data.o,
                Field::Genus => data.genus,
                Field::DC => data.d_c,
                Field::DS => data.d_s,
                Field::Order => data.divisor_order,
            };
            match op {
                Op::Eq => x == v,
                Op::Ne => x != v,
                Op::Lt => x < v,
                Op::Le => x <= v,
                Op::Gt => x > v,
                Op::Ge => x >= v,
            }
        })
    }
}

fn read_input(input: &str, stdin: &mut dyn Read) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    let path = std::path::Path::new(input);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {input}: {e}")));
    }
    Ok(input.to_string())
}

fn load(input: &str, format: Option<FormatArg>, stdin: &mut dyn Read) -> Result<Parsed> {
    let text = read_input(input, stdin)?;
    let format = format
        .map(Format::from)
        .unwrap_or_else(|| Format::detect(&text));
    format::parse(&text, format)
}

fn curve_report(data: &CurveData) -> String {
    format!(
        "n={}\no={}\ngenus={}\nd_c={}\nd_s={}\norder={}\n",
        data.n, data.o, data.genus, data.d_c, data.d_s, data.divisor_order
    )
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome> {
    match command {
        Command::Invariants { format, input } => {
            let tree = load(&input, format, stdin)?.into_tree()?;
            Ok(Outcome::ok(curve_report(&curve_data(&tree))))
        }
        Command::Phi {
            format,
            canonical,
            input,
        } => {
            let parsed = load(&input, format, stdin)?;
            let mut inv = to_involution(parsed.map())?;
            if canonical {
                inv = inv.canonical_form();
            }
            Ok(Outcome::ok(format!("{inv}\n")))
        }
        Command::Covers {
            target,
            d,
            expect,
            format,
            input,
        } => {
            let parsed = load(&input, format, stdin)?;
            let inv = to_involution(parsed.map())?;
            if d == 0 {
                return Err(Error::ZeroDivisor);
            }
            let mut out = String::new();
            let covers = match target {
                Target::Tree => {
                    let report = cover::covers_dessin(&inv, d)?;
                    if let Some(q) = &report.quotient {
                        out.push_str(&format!("quotient={q}\n"));
                    }
                    if let Some(reason) = report.reason {
                        out.push_str(&format!("reason={reason}\n"));
                    }
                    report.covers
                }
                Target::Chain | Target::Star => {
                    if parsed.as_tree().is_none() {
                        return Err(Error::NotATree(parsed.map().genus()));
                    }
                    match target {
                        Target::Chain => cover::covers_chain(&inv, d),
                        _ => cover::covers_star(&inv, d),
                    }
                }
            };
            let mut stdout = format!("covers={covers}\n");
            stdout.push_str(&out);
            let code = match expect {
                Some(Expect::Yes) if !covers => 1,
                Some(Expect::No) if covers => 1,
                _ => 0,
            };
            Ok(Outcome {
                code,
                stdout,
                stderr: String::new(),
            })
        }
        Command::Quotient {
            d,
            out_format,
            format,
            input,
        } => {
            let parsed = load(&input, format, stdin)?;
            let inv = to_involution(parsed.map())?;
            let q = cover::quotient(&inv, d)?;
            let qmap = q.to_map();
            let out_format = out_format.map(Format::from).unwrap_or(if q.is_tree() {
                Format::Walk
            } else {
                Format::Involution
            });
            let text = format::emit(&qmap, out_format)?;
            let text = match out_format {
                Format::Rotation => text.trim_end().replace('\n', ";"),
                _ => text,
            };
            Ok(Outcome::ok(format!("quotient={text}\n")))
        }
        Command::Enumerate {
            edges,
            mode,
            count_only,
            filter,
        } => {
            if edges == 0 {
                return Err(Error::Precondition("--edges must be positive".into()));
            }
            let filter = filter.as_deref().map(Filter::from_str).transpose()?;
            let mode = match mode {
                ModeArg::Rooted => Mode::Rooted,
                ModeArg::Unrooted => Mode::Unrooted,
            };
            let mut out = String::new();
            let mut count = 0usize;
            for inv in enumerate::trees(edges, mode) {
                if let Some(f) = &filter {
                    let tree = inv.to_tree()?;
                    if !f.matches(&curve_data(&tree)) {
                        continue;
                    }
                }
                count += 1;
                if !count_only {
                    out.push_str("tree=");
                    out.push_str(&inv.to_walk().expect("enumerated trees are non-crossing"));
                    out.push('\n');
                }
            }
            out.push_str(&format!("count={count}\n"));
            Ok(Outcome::ok(out))
        }
        Command::Search {
            genus,
            order,
            max_edges,
        } => {
            let out = match enumerate::search_genus_order(genus, order, max_edges) {
                Some(w) => format!(
                    "found=true\ntree={}\n{}",
                    w.involution.to_walk().expect("witness is a tree"),
                    curve_report(&w.data)
                ),
                None => "found=false\n".to_string(),
            };
            Ok(Outcome::ok(out))
        }
        Command::Verify { max_edges } => {
            let report = oracle::cross_check_all(max_edges);
            let mut out = String::new();
            for (n, count) in &report.trees_per_n {
                out.push_str(&format!("trees.{n}={count}\n"));
            }
            out.push_str(&format!("divisor_checks={}\n", report.divisor_checks));
            out.push_str(&format!("coverings={}\n", report.coverings));
            out.push_str(&format!("chain_coverings={}\n", report.chain_coverings));
            out.push_str(&format!("star_coverings={}\n", report.star_coverings));
            for d in &report.discrepancies {
                out.push_str(&format!("discrepancy={d}\n"));
            }
            out.push_str(&format!("discrepancies={}\n", report.discrepancies.len()));
            Ok(Outcome {
                code: if report.is_clean() { 0 } else { 1 },
                stdout: out,
                stderr: String::new(),
            })
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(cli.command, stdin).unwrap_or_else(Outcome::input_error)
}
