//! Command-line front end. `run` is pure apart from the optional `--output`
//! file, so it can be driven from tests.

use crate::classify::classify;
use crate::emit::{to_dot, to_json, to_text};
use crate::error::Error;
use crate::lie::StructureConstants;
use crate::multiplets::{main_multiplet, reduced_multiplet, singlet, special_reduced, Multiplet};
use crate::rational::{fmt_q_list, parse_q_list, Q};
use crate::rootsys::{build_algebra, AlgebraSpec, Root, Weight};
use crate::singvec::{bgg_locus_weight, compare_with_oracle, SingularCheck};
use crate::sweep::{bgg_sweep, oracle_sweep, requests, OracleOutcome};
use crate::verma::VermaModule;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(name = "sopq", about = "Multiplets and singular vectors for so(p,q)")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the artifact to this file instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Main multiplet for labels m_1..m_{h+1} ≥ 1.
    Main {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        labels: String,
    },
    /// Reduced multiplet with m_j = 0.
    Reduced {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        labels: String,
    },
    /// Special reduced pair (p+q odd); μ, μ′ odd.
    Special {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        mu2: Option<u32>,
        #[arg(long)]
        labels: String,
    },
    /// c = 0 singlet; labels are m_2..m_h.
    Singlet {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        mu: Option<u32>,
        #[arg(long, default_value = "")]
        labels: String,
    },
    /// Distinguished representations for one label tuple.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        labels: String,
        #[arg(long, default_value_t = 3)]
        nu_range: u32,
    },
    /// Closed-form singular vector for (β, m) at a BGG-locus weight Λ.
    Singvec {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        m: u32,
        /// Λ in ε-coordinates; defaults to a generic point of the BGG locus.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// BGG sweep plus singular-vector oracle on every arrow up to a degree.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        sweep_labels: u32,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },
    /// BGG consistency of every generated multiplet with labels up to a bound.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        sweep_labels: u32,
    },
}

/// Exit status and emitted text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// 0 success, 1 verification failure, 2 invalid input.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

enum Failure {
    Invalid(String),
    Verification(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Step<T> = std::result::Result<T, Failure>;

fn multiplet_artifact(m: &Multiplet, format: Format) -> String {
    match format {
        Format::Text => to_text(m),
        Format::Json => to_json(m) + "\n",
        Format::Dot => to_dot(m),
    }
}

fn no_dot(format: Format) -> Step<()> {
    if format == Format::Dot {
        return Err(Failure::Invalid(
            "--format dot applies to multiplet verbs only".into(),
        ));
    }
    Ok(())
}

fn labels(s: &str) -> Step<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(parse_q_list(s)?)
}

/// Default weight: a fixed generic seed moved onto the BGG locus.
fn generic_weight(spec: &AlgebraSpec, beta: &Root, m: u32) -> Weight {
    let seed: Vec<Q> = (0..spec.rank)
        .map(|i| Q::new(2 * i as i64 + 1, 3 * i as i64 + 7))
        .collect();
    bgg_locus_weight(&spec.root_system(), beta, m, &seed)
}

fn singvec_verb(
    spec: &AlgebraSpec,
    beta: &str,
    m: u32,
    weight: Option<&str>,
    format: Format,
) -> Step<String> {
    no_dot(format)?;
    if m == 0 {
        return Err(Failure::Invalid("m must be a positive integer".into()));
    }
    let beta = Root::parse(beta, spec.rank)?;
    let lambda = match weight {
        Some(w) => {
            let w = Weight(parse_q_list(w)?);
            if w.rank() != spec.rank {
                return Err(Error::RankMismatch {
                    weight: w.rank(),
                    root: spec.rank,
                }
                .into());
            }
            w
        }
        None => generic_weight(spec, &beta, m),
    };
    let sc = Arc::new(StructureConstants::new(spec.n_complex()));
    let cmp = compare_with_oracle(sc.clone(), &beta, m, &lambda)?;
    let residual: Vec<String> = match &cmp.check {
        SingularCheck::Verified => Vec::new(),
        SingularCheck::Residual(r) => {
            let module = VermaModule::new(sc, &lambda, Default::default());
            r.iter()
                .map(|(i, v)| format!("e{} v = {}", i + 1, module.format(v)))
                .collect()
        }
    };
    let text = match format {
        Format::Json => {
            let doc = serde_json::json!({
                "spec": { "p": spec.p, "q": spec.q },
                "root": beta.to_string(),
                "chain": cmp.chain.to_string(),
                "m": m,
                "weight": fmt_q_list(&lambda.0),
                "closed_form": cmp.poly.to_string(),
                "terms": cmp.poly.len(),
                "verified": cmp.check.is_verified(),
                "residual": residual,
                "slice_dim": cmp.slice_dim,
                "kernel_dim": cmp.kernel_dim,
                "spans_kernel": cmp.spans_kernel,
            });
            serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
        }
        _ => {
            let mut out = format!(
                "chain {}\nweight [{}]\nm {m}\nclosed form ({} terms): {}\n",
                cmp.chain,
                fmt_q_list(&lambda.0),
                cmp.poly.len(),
                cmp.poly
            );
            if residual.is_empty() {
                out.push_str("raising images: all zero\n");
            } else {
                for r in &residual {
                    out.push_str(&format!("residual {r}\n"));
                }
            }
            out.push_str(&format!(
                "verma kernel: dim {} in slice of dim {}; closed form spans it: {}\n",
                cmp.kernel_dim,
                cmp.slice_dim,
                if cmp.spans_kernel { "yes" } else { "no" }
            ));
            out
        }
    };
    if cmp.check.is_verified() && cmp.spans_kernel {
        Ok(text)
    } else {
        Err(Failure::Verification(
            text,
            "closed form is not the singular vector".into(),
        ))
    }
}

fn verify_verb(
    spec: &AlgebraSpec,
    max_label: u32,
    max_degree: u32,
    format: Format,
) -> Step<String> {
    no_dot(format)?;
    let report = bgg_sweep(spec, max_label);
    let mults: Vec<Multiplet> = requests(spec, max_label)
        .iter()
        .filter_map(|r| r.build(spec).ok())
        .collect();
    let items = oracle_sweep(&mults, max_degree);
    let count = |f: fn(&OracleOutcome) -> bool| items.iter().filter(|i| f(&i.outcome)).count();
    let closed = count(|o| *o == OracleOutcome::ClosedForm);
    let kernel_only = count(|o| matches!(o, OracleOutcome::KernelOnly(_)));
    let failed: Vec<String> = items
        .iter()
        .filter_map(|i| match &i.outcome {
            OracleOutcome::Failed(msg) => Some(format!("{} {}: {msg}", i.multiplet, i.arrow)),
            _ => None,
        })
        .collect();
    let text = match format {
        Format::Json => {
            let doc = serde_json::json!({
                "spec": { "p": spec.p, "q": spec.q },
                "multiplets": report.items.len(),
                "differential_arrows": report.arrows(),
                "bgg_violations": report.violations(),
                "oracle_arrows": items.len(),
                "closed_form": closed,
                "kernel_only": kernel_only,
                "failures": failed,
            });
            serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
        }
        _ => {
            let mut out = format!(
                "so({},{}) labels <= {max_label}, degree <= {max_degree}\n\
                 multiplets {}\ndifferential arrows {}\nbgg violations {}\n\
                 oracle arrows {}\n  closed form verified {closed}\n  verma kernel only {kernel_only}\n  failures {}\n",
                spec.p,
                spec.q,
                report.items.len(),
                report.arrows(),
                report.violations(),
                items.len(),
                failed.len()
            );
            for f in &failed {
                out.push_str(&format!("FAIL {f}\n"));
            }
            out
        }
    };
    if report.violations() == 0 && failed.is_empty() {
        Ok(text)
    } else {
        Err(Failure::Verification(text, "verification failed".into()))
    }
}

fn dispatch(verb: &Verb) -> Step<(String, Option<String>)> {
    let common = match verb {
        Verb::Main { common, .. }
        | Verb::Reduced { common, .. }
        | Verb::Special { common, .. }
        | Verb::Singlet { common, .. }
        | Verb::Classify { common, .. }
        | Verb::Singvec { common, .. }
        | Verb::Verify { common, .. }
        | Verb::Sweep { common, .. } => common,
    };
    let spec = build_algebra(common.p, common.q)?;
    let format = common.format;
    let text = match verb {
        Verb::Main { labels: l, .. } => {
            multiplet_artifact(&main_multiplet(&spec, &labels(l)?)?, format)
        }
        Verb::Reduced { j, labels: l, .. } => {
            multiplet_artifact(&reduced_multiplet(&spec, *j, &labels(l)?)?, format)
        }
        Verb::Special {
            j,
            mu,
            mu2,
            labels: l,
            ..
        } => multiplet_artifact(&special_reduced(&spec, *j, *mu, *mu2, &labels(l)?)?, format),
        Verb::Singlet { mu, labels: l, .. } => {
            multiplet_artifact(&singlet(&spec, *mu, &labels(l)?)?, format)
        }
        Verb::Classify {
            labels: l,
            nu_range,
            ..
        } => {
            no_dot(format)?;
            let report = classify(&spec, &labels(l)?, *nu_range)?;
            match format {
                Format::Json => report.to_json() + "\n",
                _ => report.to_table(),
            }
        }
        Verb::Singvec {
            beta, m, weight, ..
        } => singvec_verb(&spec, beta, *m, weight.as_deref(), format)?,
        Verb::Verify {
            sweep_labels,
            max_degree,
            ..
        } => verify_verb(&spec, *sweep_labels, *max_degree, format)?,
        Verb::Sweep { sweep_labels, .. } => {
            no_dot(format)?;
            let report = bgg_sweep(&spec, *sweep_labels);
            if report.violations() > 0 {
                return Err(Failure::Verification(
                    report.text(),
                    "BGG violations found".into(),
                ));
            }
            report.text()
        }
    };
    Ok((text, common.output.clone()))
}

fn deliver(text: String, output: Option<&str>, code: i32, stderr: String) -> Outcome {
    match output {
        None => Outcome {
            code,
            stdout: text,
            stderr,
        },
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr,
            },
            Err(e) => Outcome::invalid(format!("cannot write {path}: {e}")),
        },
    }
}

/// Parses `argv` (without the program name) and executes one verb.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("sopq".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: e.to_string(),
                },
            };
        }
    };
    let output = match &cli.verb {
        Verb::Singvec { common, .. } | Verb::Verify { common, .. } | Verb::Sweep { common, .. } => {
            common.output.clone()
        }
        _ => None,
    };
    match dispatch(&cli.verb) {
        Ok((text, out)) => deliver(text, out.as_deref(), 0, String::new()),
        Err(Failure::Invalid(msg)) => Outcome::invalid(msg),
        Err(Failure::Verification(text, msg)) => {
            deliver(text, output.as_deref(), 1, format!("error: {msg}\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_json_has_four_nodes() {
        let out = run([
            "main", "--p", "3", "--q", "2", "--labels", "1,1", "--format", "json",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["nodes"].as_array().unwrap().len(), 4);
        let spec = build_algebra(3, 2).unwrap();
        let direct = main_multiplet(&spec, &[Q::from_integer(1), Q::from_integer(1)]).unwrap();
        assert_eq!(out.stdout, to_json(&direct) + "\n");
    }

    #[test]
    fn classify_so32_singletons() {
        let out = run(["classify", "--p", "3", "--q", "2", "--labels", "1,1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let rows: Vec<&str> = out
            .stdout
            .lines()
            .filter(|l| l.contains("singleton"))
            .collect();
        assert!(rows.iter().any(|l| l.contains("1/2")), "{}", out.stdout);
        assert!(rows.len() >= 2, "{}", out.stdout);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run(["main", "--p", "2", "--q", "3", "--labels", "1,1"]).code,
            2
        );
        assert_eq!(
            run(["main", "--p", "3", "--q", "2", "--labels", "1"]).code,
            2
        );
        assert_eq!(
            run(["main", "--p", "3", "--q", "2", "--labels", "1,1", "--bogus"]).code,
            2
        );
        assert_eq!(run(["frobnicate"]).code, 2);
        assert_eq!(
            run(["special", "--p", "4", "--q", "2", "--j", "1", "--mu", "1", "--labels", "1,1,1"])
                .code,
            2
        );
        assert_eq!(
            run(["classify", "--p", "3", "--q", "2", "--labels", "1,1", "--format", "dot"]).code,
            2
        );
        let off = run([
            "singvec", "--p", "3", "--q", "2", "--beta", "e1", "--m", "1", "--weight", "0,0",
        ]);
        assert_eq!(off.code, 2);
        assert!(off.stderr.contains("BGG"));
        assert_eq!(run(["--help"]).code, 0);
    }

    #[test]
    fn singvec_default_weight_verifies() {
        let out = run([
            "singvec", "--p", "3", "--q", "2", "--beta", "e1+e2", "--m", "1",
        ]);
        assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
        assert!(out.stdout.contains("3 terms"));
        assert!(out.stdout.contains("all zero"));
    }

    #[test]
    fn verify_so42() {
        let out = run([
            "verify",
            "--p",
            "4",
            "--q",
            "2",
            "--sweep-labels",
            "3",
            "--max-degree",
            "2",
        ]);
        assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
        assert!(out.stdout.contains("bgg violations 0"));
    }

    #[test]
    fn deterministic() {
        let args = ["sweep", "--p", "5", "--q", "2", "--sweep-labels", "2"];
        let a = run(args);
        assert_eq!(a.code, 0);
        assert_eq!(a, run(args));
        let dot = [
            "main", "--p", "4", "--q", "2", "--labels", "1,2,1", "--format", "dot",
        ];
        assert_eq!(run(dot), run(dot));
    }
}
