//! Command-line front end. [`run`] takes the full argument list and returns
//! the exit code with everything that would be printed, so the binary stays a
//! two-line wrapper and the commands are testable in-process.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.

use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::casimir::express_casimir;
use crate::element::Element;
use crate::error::CasimirError;
use crate::filtration::{is_filtration, Filtration};
use crate::morphisms::{sigma_bi, sigma_racah, tau_bi, tau_racah, zeta, AlgebraMap};
use crate::presentations::{bannai_ito, builtin_by_name, racah, Presentation, PresentationId};
use crate::verify::run_all;
use crate::weight::WeightVector;

#[derive(Debug, Parser)]
#[command(
    name = "racah-bi",
    version,
    about = "Exact rewriting in the Racah and Bannai-Ito algebras"
)]
struct Cli {
    /// Print elements and reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce an expression to normal form.
    Reduce {
        /// `racah`, `bi`, `bi-rebased`, or a system-definition file.
        alg: String,
        expr: String,
    },
    /// Check every overlap ambiguity of a presentation.
    Confluence { alg: String },
    /// Apply ζ (Racah → Bannai–Ito) or a D6 generator.
    Map(MapArgs),
    #[command(subcommand)]
    Filtration(FiltrationCommand),
    #[command(subcommand)]
    Casimir(CasimirCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
struct MapArgs {
    /// `zeta`, `sigma` or `tau`.
    map: String,
    expr: String,
    /// Algebra for `sigma`/`tau`: `racah` or `bi`.
    #[arg(long, default_value = "racah")]
    alg: String,
}

#[derive(Debug, Subcommand)]
enum FiltrationCommand {
    /// Whether a weight vector (w_X,w_Y,w_Z,w_κ,w_λ,w_μ) gives a filtration.
    Check { weights: String },
    /// Terms of weight at least `n` in the normal form of a Bannai–Ito element.
    Lead {
        weights: String,
        n: u64,
        expr: String,
    },
}

#[derive(Debug, Subcommand)]
enum CasimirCommand {
    /// Write ζ of a central Racah element as P(ι, κ, λ, μ).
    Express { expr: String },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Run the whole verification suite.
    All,
}

pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: impl Into<String>) -> Self {
        Outcome {
            code: 0,
            output: output.into(),
        }
    }

    fn failed(output: impl Into<String>) -> Self {
        Outcome {
            code: 1,
            output: output.into(),
        }
    }

    fn usage(output: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            output: output.into(),
        }
    }
}

fn load_presentation(alg: &str) -> Result<Arc<Presentation>, Outcome> {
    if let Some(p) = builtin_by_name(alg) {
        return Ok(p);
    }
    let text = std::fs::read_to_string(alg).map_err(|e| {
        Outcome::usage(format!(
            "unknown algebra {alg:?} (expected racah, bi, bi-rebased or a definition file): {e}"
        ))
    })?;
    Presentation::from_definition_text(PresentationId::Custom(String::new()), &text)
        .map(Arc::new)
        .map_err(|e| Outcome::usage(format!("{alg}: {e}")))
}

fn parse_in(p: &Presentation, expr: &str) -> Result<Element, Outcome> {
    p.parse(expr).map_err(|e| Outcome::usage(format!("{e}")))
}

fn parse_weights(text: &str) -> Result<WeightVector, Outcome> {
    let w = WeightVector::parse(text)
        .ok_or_else(|| Outcome::usage(format!("bad weight vector {text:?}")))?;
    if w.len() != 6 {
        return Err(Outcome::usage(format!(
            "weight vector needs 6 entries (w_X,w_Y,w_Z,w_κ,w_λ,w_μ), got {}",
            w.len()
        )));
    }
    Ok(w)
}

fn render(e: &Element, as_json: bool) -> String {
    if as_json {
        e.to_json().to_string()
    } else {
        e.to_text()
    }
}

fn action(name: &str, alg: &str) -> Result<&'static AlgebraMap, Outcome> {
    match (name, alg) {
        ("sigma" | "σ", "racah") => Ok(sigma_racah()),
        ("tau" | "τ", "racah") => Ok(tau_racah()),
        ("sigma" | "σ", "bi") => Ok(sigma_bi()),
        ("tau" | "τ", "bi") => Ok(tau_bi()),
        ("zeta" | "ζ", _) => Ok(zeta()),
        _ => Err(Outcome::usage(format!(
            "unknown map {name:?} on {alg:?}; expected zeta, or sigma/tau with --alg racah|bi"
        ))),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, Outcome> {
    let as_json = cli.json;
    Ok(match cli.command {
        Command::Reduce { alg, expr } => {
            let p = load_presentation(&alg)?;
            Outcome::ok(render(&parse_in(&p, &expr)?, as_json))
        }
        Command::Confluence { alg } => {
            let p = load_presentation(&alg)?;
            let reports = p.system().check_confluence();
            let confluent = reports.iter().all(|r| r.resolvable);
            let a = p.alphabet();
            let output = if as_json {
                let items: Vec<_> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "word": r.word.to_text(a),
                            "resolvable": r.resolvable,
                            "involves_commutation": r.involves_commutation,
                            "left": r.left_result.to_json(),
                            "right": r.right_result.to_json(),
                        })
                    })
                    .collect();
                json!({ "confluent": confluent, "ambiguities": items }).to_string()
            } else {
                let mut lines: Vec<String> = reports
                    .iter()
                    .map(|r| {
                        let status = if r.resolvable { "resolvable" } else { "UNRESOLVED" };
                        let mut line = format!(
                            "{}: {status} -> {}",
                            r.word.to_text(a),
                            r.left_result.to_text()
                        );
                        if !r.resolvable {
                            line.push_str(&format!(" | {}", r.right_result.to_text()));
                        }
                        line
                    })
                    .collect();
                lines.push(format!(
                    "{} ambiguities, confluent: {}",
                    reports.len(),
                    if confluent { "yes" } else { "no" }
                ));
                lines.join("\n")
            };
            if confluent {
                Outcome::ok(output)
            } else {
                Outcome::failed(output)
            }
        }
        Command::Map(MapArgs { map, expr, alg }) => {
            let m = action(&map, &alg)?;
            let e = parse_in(m.source(), &expr)?;
            let image = m.apply(&e).map_err(|e| Outcome::usage(e.to_string()))?;
            Outcome::ok(render(&image, as_json))
        }
        Command::Filtration(FiltrationCommand::Check { weights }) => {
            let w = parse_weights(&weights)?;
            let yes = is_filtration(&w).map_err(|e| Outcome::usage(e.to_string()))?;
            if as_json {
                Outcome::ok(json!({ "weights": w.as_slice(), "filtration": yes }).to_string())
            } else {
                Outcome::ok(format!("filtration: {}", if yes { "yes" } else { "no" }))
            }
        }
        Command::Filtration(FiltrationCommand::Lead { weights, n, expr }) => {
            let f = Filtration::bannai_ito(parse_weights(&weights)?)
                .map_err(|e| Outcome::usage(e.to_string()))?;
            let e = parse_in(&bannai_ito(), &expr)?;
            Outcome::ok(render(&f.leading_form(&e, n), as_json))
        }
        Command::Casimir(CasimirCommand::Express { expr }) => {
            let e = parse_in(&racah(), &expr)?;
            match express_casimir(&e) {
                Ok(p) if as_json => Outcome::ok(json!({ "polynomial": p.to_text() }).to_string()),
                Ok(p) => Outcome::ok(p.to_text()),
                Err(err @ CasimirError::NotCentral(_)) => Outcome::failed(err.to_string()),
                Err(err) => Outcome::usage(err.to_string()),
            }
        }
        Command::Verify(VerifyCommand::All) => {
            let results = run_all();
            let failed = results.iter().filter(|r| !r.passed).count();
            let output = if as_json {
                serde_json::to_string_pretty(&results).expect("results serialize")
            } else {
                let mut lines: Vec<String> = results.iter().map(|r| r.to_string()).collect();
                lines.push(format!("{} passed, {failed} failed", results.len() - failed));
                lines.join("\n")
            };
            if failed == 0 {
                Outcome::ok(output)
            } else {
                Outcome::failed(output)
            }
        }
    })
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                output: e.render().to_string(),
            };
        }
    };
    dispatch(cli).unwrap_or_else(|o| o)
}
