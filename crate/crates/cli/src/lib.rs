//! Command-line front end: argument definitions, expression input and the
//! subcommand implementations. `main.rs` only maps results to exit codes.

pub mod parse;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;
use sl2pair::freealg::{CanonicalMonomial, QuotientPolynomial};
use sl2pair::genmat::{self, independence_report, is_graded_weak_identity};
use sl2pair::orders::{cmp_total, embedder, minimal_elements};
use sl2pair::specht::{
    chain_demo, factorize_embedding, membership_bounded, reduce_by, ReductionStep, DEFAULT_LIFT_CAP,
};
use sl2pair::stream::stream_order;

pub use parse::{parse, parse_free, SyntaxError};

#[derive(Debug, Parser)]
#[command(name = "sl2pair", version, about = "Graded weak identities of (M2, sl2) over the integers")]
pub struct Cli {
    /// Machine-readable output; errors go to stderr as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form, leading term first.
    Normalize { expr: String },
    /// Decide whether the expression is a graded weak identity.
    IsIdentity { expr: String },
    /// Compare two monomials in the basis well-order.
    Compare { a: String, b: String },
    /// Find a witness for a ≤′ b.
    Embed {
        a: String,
        b: String,
        #[arg(long, default_value = "greedy")]
        embedder: String,
    },
    /// Factor the larger monomial as N·φ̃(M)·P.
    Factor { m: String, target: String },
    /// Reduce a polynomial against generators.
    Reduce {
        f: String,
        generators: Vec<String>,
        /// Write the reduction trace (JSON) to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Also test membership among lifts of degree at most this.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Grow a generator set along a stream until it stops growing.
    ChainDemo {
        /// One expression per line; defaults to enumerating monomials.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "graded")]
        order: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long, default_value_t = 3)]
        indices: u32,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Certify independence of the generic evaluations of the basis.
    Independence {
        #[arg(long, default_value_t = genmat::DEFAULT_DEGREE)]
        degree: u32,
        #[arg(long, default_value_t = genmat::DEFAULT_INDICES)]
        indices: u32,
        #[arg(long, default_value_t = genmat::DEFAULT_MONOMIAL_CAP)]
        cap: usize,
    },
    /// Minimal elements of a set of monomials under ≤′.
    PwosMin {
        exprs: Vec<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(#[from] sl2pair::Error),
    #[error("`{0}` is not a single monomial")]
    NotMonomial(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax(_) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let kind = match self {
            CliError::Syntax(_) => "SyntaxError",
            CliError::Usage(_) => "UsageError",
            CliError::Domain(e) => match e {
                sl2pair::Error::GradeMismatch { .. } => "GradeMismatch",
                sl2pair::Error::InvalidMonomial(_) => "InvalidMonomial",
                sl2pair::Error::InvalidProfile(_) => "InvalidProfile",
                sl2pair::Error::ZeroPolynomial => "ZeroPolynomial",
                sl2pair::Error::NotEmbeddable { .. } => "NotEmbeddable",
                sl2pair::Error::InvalidTrace(_) => "InvalidTrace",
                sl2pair::Error::ResourceBound { .. } => "ResourceBound",
                sl2pair::Error::UnknownStrategy { .. } => "UnknownStrategy",
            },
            CliError::NotMonomial(_) => "NotMonomial",
            CliError::Io { .. } => "IoError",
        };
        let mut v = json!({ "error": kind, "message": self.to_string() });
        if let CliError::Syntax(e) = self {
            v["offset"] = json!(e.offset);
            v["expected"] = json!(e.expected);
        }
        v
    }
}

fn polynomial(text: &str) -> Result<QuotientPolynomial, CliError> {
    Ok(parse_free(text)?.normalize())
}

fn monomial(text: &str) -> Result<CanonicalMonomial, CliError> {
    let p = polynomial(text)?;
    let m = match (p.len(), p.terms().next()) {
        (1, Some((m, _))) => m.clone(),
        _ => return Err(CliError::NotMonomial(text.trim().to_string())),
    };
    Ok(m)
}

/// Non-blank lines with `#` comments stripped.
pub fn read_expressions(path: &Path) -> Result<Vec<String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn to_value<T: serde::Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("serializable")
}

fn describe_step(s: &ReductionStep) -> String {
    match s {
        ReductionStep::Lift {
            step,
            against,
            beta,
            phi,
            n,
            p,
        } => {
            let p: Vec<String> = p.iter().map(|i| format!("z{i}")).collect();
            let p = if p.is_empty() { "1".to_string() } else { p.join("*") };
            format!("step {step}: subtract {beta} * lift of g{against} (phi = {phi}, N = {n}, P = {p})")
        }
        ReductionStep::Frozen { step, frozen } => {
            format!("step {step}: keep {}", frozen.to_polynomial())
        }
    }
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    let mut out = String::new();
    match &cli.command {
        Command::Normalize { expr } => {
            let p = polynomial(expr)?;
            if json {
                out = pretty(&to_value(&p));
            } else {
                writeln!(out, "{p}").unwrap();
            }
        }
        Command::IsIdentity { expr } => {
            let id = is_graded_weak_identity(&parse_free(expr)?);
            if json {
                out = pretty(&json!({ "identity": id }));
            } else {
                writeln!(out, "{id}").unwrap();
            }
        }
        Command::Compare { a, b } => {
            let o = match cmp_total(&monomial(a)?, &monomial(b)?) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            if json {
                out = pretty(&json!({ "order": o }));
            } else {
                writeln!(out, "{o}").unwrap();
            }
        }
        Command::Embed { a, b, embedder: name } => {
            let e = embedder(name)?;
            let w = e.embed(&monomial(a)?, &monomial(b)?);
            if json {
                out = pretty(&json!({ "phi": w }));
            } else {
                match w {
                    Some(phi) => writeln!(out, "{phi}").unwrap(),
                    None => writeln!(out, "incomparable").unwrap(),
                }
            }
        }
        Command::Factor { m, target } => {
            let t = factorize_embedding(&monomial(m)?, &monomial(target)?)?;
            if json {
                out = pretty(&to_value(&t));
            } else {
                writeln!(out, "{t}").unwrap();
            }
        }
        Command::Reduce {
            f,
            generators,
            trace,
            degree,
        } => {
            let f = polynomial(f)?;
            let gens = generators
                .iter()
                .map(|g| polynomial(g))
                .collect::<Result<Vec<_>, _>>()?;
            let r = reduce_by(&f, &gens)?;
            if let Some(path) = trace {
                let text = serde_json::to_string_pretty(&r.trace).expect("serializable") + "\n";
                std::fs::write(path, text).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            let member = match degree {
                Some(d) => Some(membership_bounded(&f, &gens, *d, DEFAULT_LIFT_CAP)?),
                None => None,
            };
            if json {
                let mut v = json!({ "remainder": r.remainder, "trace": r.trace });
                if let Some(m) = member {
                    v["member"] = json!(m);
                }
                out = pretty(&v);
            } else {
                writeln!(out, "remainder: {}", r.remainder).unwrap();
                for s in &r.trace {
                    writeln!(out, "{}", describe_step(s)).unwrap();
                }
                if let (Some(m), Some(d)) = (member, degree) {
                    writeln!(out, "member up to degree {d}: {m}").unwrap();
                }
            }
        }
        Command::ChainDemo {
            input,
            order,
            seed,
            degree,
            indices,
            budget,
        } => {
            if *budget == 0 {
                return Err(CliError::Usage("--budget must be at least 1".into()));
            }
            let stream: Vec<QuotientPolynomial> = match input {
                Some(path) => read_expressions(path)?
                    .iter()
                    .map(|e| polynomial(e))
                    .collect::<Result<_, _>>()?,
                None => stream_order(order, *seed)?
                    .enumerate(*degree, *indices)
                    .into_iter()
                    .map(QuotientPolynomial::from)
                    .collect(),
            };
            let rep = chain_demo(stream, *budget);
            if json {
                out = pretty(&rep.to_json());
            } else {
                for g in &rep.adjoined {
                    writeln!(out, "step {}: {}", g.step, g.lt.to_polynomial()).unwrap();
                }
                match rep.stabilized_at() {
                    Some(k) => writeln!(
                        out,
                        "stabilized at step {k} of {} ({} generators)",
                        rep.processed,
                        rep.generators.len()
                    )
                    .unwrap(),
                    None => writeln!(out, "still growing after {} elements", rep.processed).unwrap(),
                }
            }
        }
        Command::Independence {
            degree,
            indices,
            cap,
        } => {
            let r = independence_report(*degree, *indices, *cap)?;
            if json {
                out = pretty(&to_value(&r));
            } else {
                writeln!(out, "{r}").unwrap();
            }
        }
        Command::PwosMin { exprs, input } => {
            let mut all = exprs.clone();
            if let Some(path) = input {
                all.extend(read_expressions(path)?);
            }
            let ms = all.iter().map(|e| monomial(e)).collect::<Result<Vec<_>, _>>()?;
            let mins = minimal_elements(&ms);
            if json {
                out = pretty(&to_value(&mins));
            } else {
                for m in &mins {
                    writeln!(out, "{m}").unwrap();
                }
            }
        }
    }
    Ok(out)
}
