//! Command-line front end.
//!
//! [`run`] takes the argument vector and returns the exit code together
//! with everything written to stdout and stderr, so the binary is a thin
//! wrapper and tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 domain error (for example a non-constant given
//! to `member`, or a failed Gröbner check), 2 usage or parse error.

pub mod output;
pub mod parser;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::basis_combinatorics::{
    enumerate_normal, enumerate_normal_bidegree, graded_dimension, oracle_kernel,
    reconstruct_from_lead,
};
use crate::constants_kernel::{decompose, decompose_traced, Decomposition, TraceStep};
use crate::error::Error;
use crate::exact_poly::XYPolynomial;
use crate::xu_presentation::{
    buchberger_report, dill_compare, normal_form, RelationId, RelationSet, UMonomial, UPolynomial,
};

use output::{u_monomial_json, u_terms_json, xy_monomial_json, xy_terms_json, OutputDocument};
use parser::{parse_xu, parse_xy, ParseError};

#[derive(Parser, Debug)]
#[command(
    name = "weitzenbock",
    about = "Constants of the derivation sum x_i d/dy_i: membership, decomposition, normal forms, bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Number of variable pairs (x_1..x_n, y_1..y_n).
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..=64))]
    n: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Include wall-clock time in the output.
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug, Clone)]
struct Grading {
    /// Total degree of the image in K[X,Y] (x counts 1, u counts 2).
    #[arg(long, conflicts_with = "bidegree")]
    weight: Option<u32>,
    /// Bidegree (deg_X, deg_Y) of the image in K[X,Y].
    #[arg(long, num_args = 2, value_names = ["D1", "D2"])]
    bidegree: Option<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RingArg {
    Xy,
    Xu,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the derivation to a polynomial in x, y.
    Delta {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Decide membership in the kernel and decompose if it holds.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        trace: bool,
        expr: String,
    },
    /// Write a constant as a polynomial in x(i), u(i,j).
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        trace: bool,
        expr: String,
    },
    /// Normal form of a polynomial in x, u modulo the relations.
    Normalform {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Leading monomial: lex in K[X,Y], DILL in K[X,U].
    Lead {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "xy")]
        ring: RingArg,
        expr: String,
    },
    /// Compare two monomials of K[X,U] in the DILL order.
    DillCmp {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// List the normal (non-crossing) basis monomials.
    EnumBasis {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grading: Grading,
    },
    /// Dimension of a graded piece by counting basis monomials.
    Dim {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grading: Grading,
    },
    /// Dimension of a graded piece by linear algebra on the derivation.
    OracleDim {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grading: Grading,
        /// Also print an explicit kernel basis.
        #[arg(long)]
        basis: bool,
    },
    /// Check that the relations form a reduced Gröbner basis.
    VerifyGb {
        #[command(flatten)]
        common: Common,
        /// Stop after this many S-polynomial reductions.
        #[arg(long)]
        max_pairs: Option<usize>,
        /// Remove a relation first, e.g. "s(1,2,3)" or "r(1,2,3,4)".
        #[arg(long, value_parser = parse_relation_id)]
        drop: Vec<RelationId>,
    },
    /// Recover the normal monomial with a given leading monomial in K[X,Y].
    Reconstruct {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Delta { common, .. }
            | Command::Member { common, .. }
            | Command::Decompose { common, .. }
            | Command::Normalform { common, .. }
            | Command::Lead { common, .. }
            | Command::DillCmp { common, .. }
            | Command::EnumBasis { common, .. }
            | Command::Dim { common, .. }
            | Command::OracleDim { common, .. }
            | Command::VerifyGb { common, .. }
            | Command::Reconstruct { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Delta { .. } => "delta",
            Command::Member { .. } => "member",
            Command::Decompose { .. } => "decompose",
            Command::Normalform { .. } => "normalform",
            Command::Lead { .. } => "lead",
            Command::DillCmp { .. } => "dill-cmp",
            Command::EnumBasis { .. } => "enum-basis",
            Command::Dim { .. } => "dim",
            Command::OracleDim { .. } => "oracle-dim",
            Command::VerifyGb { .. } => "verify-gb",
            Command::Reconstruct { .. } => "reconstruct",
        }
    }
}

fn parse_relation_id(s: &str) -> Result<RelationId, String> {
    let s = s.trim();
    let (kind, rest) = s.split_at(1.min(s.len()));
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("expected s(i,j,k) or r(i,j,k,l), got {s:?}"))?;
    let idx = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    match (kind, idx.as_slice()) {
        ("s", &[i, j, k]) => Ok(RelationId::S([i, j, k])),
        ("r", &[i, j, k, l]) => Ok(RelationId::R([i, j, k, l])),
        _ => Err(format!("expected s(i,j,k) or r(i,j,k,l), got {s:?}")),
    }
}

/// Everything a CLI invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(format!("parse error at {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// What a successful command produced: the document, and optionally a
/// domain-level failure to report after printing it.
struct Outcome {
    doc: OutputDocument,
    failure: Option<String>,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    RunOutput {
                        code: 0,
                        stdout: rendered,
                        stderr: String::new(),
                    }
                }
                _ => RunOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };

    let common = cli.command.common().clone();
    let started = Instant::now();
    let result = execute(&cli.command);
    let elapsed = started.elapsed();

    match result {
        Ok(Outcome { mut doc, failure }) => {
            if common.timing {
                doc.timing_us = Some(elapsed.as_micros() as u64);
            }
            let stdout = if common.json {
                doc.to_json()
            } else {
                doc.to_text()
            };
            match failure {
                None => RunOutput {
                    code: 0,
                    stdout,
                    stderr: String::new(),
                },
                Some(msg) => RunOutput {
                    code: 1,
                    stdout,
                    stderr: format!("error: {msg}\n"),
                },
            }
        }
        Err(Failure::Usage(msg)) => RunOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => RunOutput {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn grading(g: &Grading) -> Result<Grade, Failure> {
    match (&g.weight, &g.bidegree) {
        (Some(w), None) => Ok(Grade::Weight(*w)),
        (None, Some(b)) => Ok(Grade::Bidegree(b[0], b[1])),
        _ => Err(Failure::Usage(
            "one of --weight <W> or --bidegree <D1> <D2> is required".into(),
        )),
    }
}

#[derive(Clone, Copy)]
enum Grade {
    Weight(u32),
    Bidegree(u32, u32),
}

impl Grade {
    fn json(self) -> Value {
        match self {
            Grade::Weight(w) => json!({ "weight": w }),
            Grade::Bidegree(a, b) => json!({ "bidegree": [a, b] }),
        }
    }

    fn text(self) -> String {
        match self {
            Grade::Weight(w) => format!("weight {w}"),
            Grade::Bidegree(a, b) => format!("bidegree ({a},{b})"),
        }
    }

    /// The bidegrees making up this grade.
    fn bidegrees(self) -> Vec<(u32, u32)> {
        match self {
            Grade::Bidegree(a, b) => vec![(a, b)],
            Grade::Weight(w) => (0..=w).map(|d2| (w - d2, d2)).collect(),
        }
    }
}

fn trace_text(step: &TraceStep) -> String {
    match step {
        TraceStep::BaseCase => "base case n = 1".into(),
        TraceStep::RecurseOnN { vars } => format!("recurse on n = {vars}"),
        TraceStep::StripXPower { var, power: 1 } => format!("strip x({var})"),
        TraceStep::StripXPower { var, power } => format!("strip x({var})^{power}"),
        TraceStep::DivideU12 => "divide by u(1,2)".into(),
        TraceStep::RewriteUsn { var, degree: 1 } => {
            format!("rewrite y({var}) part with u(s,{var})")
        }
        TraceStep::RewriteUsn { var, degree } => {
            format!("rewrite y({var})^{degree} part with u(s,{var})")
        }
    }
}

fn add_decomposition(doc: &mut OutputDocument, d: &Decomposition) {
    doc.field(
        "decomposition",
        d.result.to_string(),
        u_terms_json(&d.result),
    );
    if let Some(trace) = &d.trace {
        let lines: Vec<String> = trace.iter().map(trace_text).collect();
        doc.list("trace", &lines, json!(lines));
    }
}

fn single_monomial(p: &UPolynomial, text: &str) -> Result<UMonomial, Failure> {
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if num_traits::One::is_one(*c) => Ok((*m).clone()),
        _ => Err(Failure::Usage(format!("{text:?} is not a monomial"))),
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    let n = cmd.common().n as usize;
    let mut doc = OutputDocument::new(cmd.name(), n);
    let mut failure = None;

    match cmd {
        Command::Delta { expr, .. } => {
            let f = parse_xy(expr, n)?;
            doc.input(f.to_string());
            let d = f.delta();
            doc.field("result", d.to_string(), xy_terms_json(&d));
        }
        Command::Member { expr, trace, .. } | Command::Decompose { expr, trace, .. } => {
            let f = parse_xy(expr, n)?;
            doc.input(f.to_string());
            let is_member = matches!(cmd, Command::Member { .. });
            if !f.is_constant() {
                if is_member {
                    doc.field("result", "false".into(), json!(false));
                    let d = f.delta();
                    doc.field("delta", d.to_string(), xy_terms_json(&d));
                    failure = Some(Error::NotAConstant.to_string());
                } else {
                    return Err(Error::NotAConstant.into());
                }
            } else {
                let d = if *trace {
                    decompose_traced(&f)?
                } else {
                    decompose(&f)?
                };
                if is_member {
                    doc.field("result", "true".into(), json!(true));
                    add_decomposition(&mut doc, &d);
                } else {
                    doc.field("result", d.result.to_string(), u_terms_json(&d.result));
                    if let Some(trace) = &d.trace {
                        let lines: Vec<String> = trace.iter().map(trace_text).collect();
                        doc.list("trace", &lines, json!(lines));
                    }
                }
            }
        }
        Command::Normalform { expr, .. } => {
            let p = parse_xu(expr, n)?;
            doc.input(p.to_string());
            let nf = normal_form(&p, &RelationSet::new(n))?;
            doc.field("result", nf.to_string(), u_terms_json(&nf));
        }
        Command::Lead { expr, ring, .. } => match ring {
            RingArg::Xy => {
                let f = parse_xy(expr, n)?;
                doc.input(f.to_string());
                let m = f.lead_xy()?;
                doc.field("result", m.to_string(), xy_monomial_json(&m));
            }
            RingArg::Xu => {
                let p = parse_xu(expr, n)?;
                doc.input(p.to_string());
                let m = p.lead_dill()?;
                doc.field("result", m.to_string(), u_monomial_json(&m));
            }
        },
        Command::DillCmp { left, right, .. } => {
            let a = single_monomial(&parse_xu(left, n)?, left)?;
            let b = single_monomial(&parse_xu(right, n)?, right)?;
            doc.input(a.to_string());
            doc.input(b.to_string());
            let ord = match dill_compare(&a, &b)? {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            doc.field("result", ord.into(), json!(ord));
        }
        Command::EnumBasis { grading: g, .. } => {
            let grade = grading(g)?;
            doc.input(grade.text());
            doc.set_input_json(grade.json());
            let basis = match grade {
                Grade::Weight(w) => enumerate_normal(n, w),
                Grade::Bidegree(a, b) => enumerate_normal_bidegree(n, a, b),
            };
            let lines: Vec<String> = basis.iter().map(UMonomial::to_string).collect();
            let js: Vec<Value> = basis.iter().map(u_monomial_json).collect();
            doc.list("basis", &lines, Value::Array(js));
        }
        Command::Dim { grading: g, .. } => {
            let grade = grading(g)?;
            doc.input(grade.text());
            doc.set_input_json(grade.json());
            let dim: usize = grade
                .bidegrees()
                .into_iter()
                .map(|(a, b)| graded_dimension(n, a, b))
                .sum();
            doc.field("result", dim.to_string(), json!(dim));
        }
        Command::OracleDim {
            grading: g, basis, ..
        } => {
            let grade = grading(g)?;
            doc.input(grade.text());
            doc.set_input_json(grade.json());
            let kernels: Vec<_> = grade
                .bidegrees()
                .into_iter()
                .map(|(a, b)| oracle_kernel(n, a, b))
                .collect();
            let dim: usize = kernels.iter().map(|k| k.dimension).sum();
            doc.field("result", dim.to_string(), json!(dim));
            if *basis {
                let polys: Vec<&XYPolynomial> = kernels.iter().flat_map(|k| &k.basis).collect();
                let lines: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
                let js: Vec<Value> = polys.iter().map(|p| xy_terms_json(p)).collect();
                doc.list("basis", &lines, Value::Array(js));
            }
        }
        Command::VerifyGb {
            max_pairs, drop, ..
        } => {
            let mut rel = RelationSet::new(n);
            for id in drop {
                if rel.get(*id).is_none() {
                    return Err(Failure::Usage(format!("no relation {id} for n = {n}")));
                }
                rel = rel.without(*id);
                doc.input(format!("drop {id}"));
            }
            let report = buchberger_report(&rel, *max_pairs);
            let ok = report.passed();
            doc.field("result", ok.to_string(), json!(ok));
            doc.field(
                "relations",
                report.relations.to_string(),
                json!(report.relations),
            );
            doc.field(
                "pairs",
                report.pairs_total.to_string(),
                json!(report.pairs_total),
            );
            doc.field(
                "coprime_skipped",
                report.pairs_coprime.to_string(),
                json!(report.pairs_coprime),
            );
            doc.field(
                "reduced_pairs",
                report.pairs_reduced.to_string(),
                json!(report.pairs_reduced),
            );
            doc.field(
                "truncated",
                report.truncated.to_string(),
                json!(report.truncated),
            );
            doc.field(
                "reduced",
                report.is_reduced().to_string(),
                json!(report.is_reduced()),
            );
            let lines: Vec<String> = report
                .failures
                .iter()
                .map(|f| format!("S({}, {}) -> {}", f.left, f.right, f.remainder))
                .collect();
            let js: Vec<Value> = report
                .failures
                .iter()
                .map(|f| {
                    json!({
                        "left": f.left.to_string(),
                        "right": f.right.to_string(),
                        "remainder": u_terms_json(&f.remainder),
                    })
                })
                .collect();
            doc.list("failures", &lines, Value::Array(js));
            if !ok {
                failure = Some(if report.truncated && report.failures.is_empty() {
                    "verification stopped at --max-pairs before completing".to_string()
                } else {
                    "relations do not form a reduced Gröbner basis".to_string()
                });
            }
        }
        Command::Reconstruct { expr, .. } => {
            let f = parse_xy(expr, n)?;
            doc.input(f.to_string());
            let m = match f.terms().collect::<Vec<_>>().as_slice() {
                [(m, c)] if num_traits::One::is_one(*c) => (*m).clone(),
                _ => return Err(Failure::Usage(format!("{expr:?} is not a monomial"))),
            };
            let w = reconstruct_from_lead(&m)?;
            doc.field("result", w.to_string(), u_monomial_json(&w));
        }
    }
    Ok(Outcome { doc, failure })
}
