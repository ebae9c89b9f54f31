//! Command-line front end. [`run`] does all the work and returns the exit
//! code and both output streams, so it can be tested without a process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 semantic error.

use std::ffi::OsString;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::brandt::{embed, embed_inverse, fiber, require_restricted, BrandtElem};
use crate::dot::hasse_dot;
use crate::equations::{Side, SolutionSet};
use crate::error::{Error, Result};
use crate::family::{are_translate_equivalent, AtomicFamily};
use crate::order::{
    idempotent_chain_census, maximal_chain_census, maximal_chain_down, nat_leq, order_witness,
};
use crate::report::VerificationReport;
use crate::semigroup::BElem;
use crate::text::{parse_nat, split_top_level};
use crate::topology::{
    check_inversion_ac, check_shift_continuity_ac, check_tau1_annihilation, check_tau1_closed,
    find_zero_witness, phi, prop49_violation, AcNbhd, Nbhd, Tau1Nbhd,
};
use crate::universe::BoundedUniverse;
use crate::verify::{verification_suite, verification_suite_json};
use crate::{brandt, equations, Nat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "brandt-omega",
    version,
    about = "Exact arithmetic in B_omega^F over atomic families"
)]
struct Cli {
    /// Support of the atomic family, e.g. `0,1,3` or `0,2,+5` (`+t` is every k ≥ t).
    #[arg(long, global = true, default_value = "0,1,3")]
    family: String,

    /// Sweep bound for enumerations and checks.
    #[arg(long, global = true, env = "BRANDT_OMEGA_BOUND", default_value_t = 6)]
    bound: Nat,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiply two elements: `(i,j,k)` and `0`, or with --brandt `(row;val;col)` and `O`.
    Mul {
        #[arg(long)]
        brandt: bool,
        a: String,
        b: String,
    },
    /// Solve A·X = B (--left) or X·A = B (--right) in the restricted subsemigroup.
    #[command(group(ArgGroup::new("side").required(true).args(["left", "right"])))]
    Solve {
        #[arg(long)]
        left: bool,
        #[arg(long)]
        right: bool,
        a: String,
        b: String,
    },
    /// Maximal chain below an element, top-down.
    Chain { x: String },
    /// Chain-length census of the idempotents; `--output dot` draws their Hasse diagram.
    Census {
        /// Count maximal chains of the band instead of chains below each idempotent.
        #[arg(long)]
        maximal: bool,
    },
    /// Decide whether the family is a translate of another.
    Iso {
        #[arg(long)]
        other: String,
    },
    /// Restricted elements with the given row and column.
    Fiber { row: String, col: String },
    /// Map `(i,j,k)` to Brandt coordinates, or back with --inverse.
    Embed {
        #[arg(long)]
        inverse: bool,
        x: String,
    },
    /// Test x ≼ y in the natural partial order.
    Order { x: String, y: String },
    /// Neighbourhood checks in the restricted subsemigroup.
    Topo {
        #[command(subcommand)]
        command: TopoCommand,
    },
    /// Run the bounded verification suite.
    Verify,
}

#[derive(Subcommand, Debug)]
enum TopoCommand {
    /// Inversion inclusion for an `ac:` neighbourhood, plus shift continuity at --elem.
    AcCheck {
        #[arg(long)]
        nbhd: String,
        #[arg(long)]
        elem: Option<String>,
    },
    /// U_n·U_n ⊆ U_n, plus annihilation of U_{max+1} by --elem.
    T1Check {
        #[arg(long)]
        n: String,
        #[arg(long)]
        elem: Option<String>,
    },
    /// No element of the neighbourhood has its φ- or ψ-image in M.
    Prop49 {
        #[arg(long)]
        nbhd: String,
        /// Comma-separated idempotents, e.g. `(5;0;5),(6;0;6)`.
        #[arg(long, default_value = "")]
        m: String,
    },
    /// Some d ∈ D with a·d = O or d·a = O.
    Witness {
        #[arg(long)]
        a: String,
        #[arg(long)]
        d: String,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Response {
    text: String,
    json: Value,
    dot: Option<String>,
    code: i32,
}

impl Response {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Response {
            text: text.into(),
            json,
            dot: None,
            code: EXIT_OK,
        }
    }

    fn report(report: VerificationReport) -> Self {
        let code = if report.passed { EXIT_OK } else { EXIT_FAILED };
        Response {
            text: report.to_string(),
            json: to_json(&report),
            dot: None,
            code,
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("output types serialize")
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(response) => render(cli.output, response),
        Err(e) => Outcome {
            code: if e.is_parse() {
                EXIT_PARSE
            } else {
                EXIT_SEMANTIC
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(output: Output, response: Response) -> Outcome {
    let stdout = match output {
        Output::Text => response.text,
        Output::Json => {
            serde_json::to_string_pretty(&response.json).expect("json values serialize")
        }
        Output::Dot => match response.dot {
            Some(dot) => {
                return Outcome {
                    code: response.code,
                    stdout: dot,
                    stderr: String::new(),
                }
            }
            None => {
                return Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: "error: dot output is only available for census\n".into(),
                }
            }
        },
    };
    Outcome {
        code: response.code,
        stdout: if stdout.is_empty() {
            stdout
        } else {
            stdout + "\n"
        },
        stderr: String::new(),
    }
}

fn belem(s: &str, f: &AtomicFamily) -> Result<BElem> {
    s.parse::<BElem>()?.validate(f)
}

fn restricted(s: &str, f: &AtomicFamily) -> Result<BrandtElem> {
    require_restricted(s.parse()?, f)
}

/// Brandt form as given, or `(i,j,k)` / `0` through the embedding.
fn equation_side(s: &str, f: &AtomicFamily) -> Result<BrandtElem> {
    let t = s.trim();
    if t == "O" || t.contains(';') {
        restricted(t, f)
    } else {
        Ok(embed(belem(t, f)?))
    }
}

fn brandt_list(s: &str, f: &AtomicFamily) -> Result<Vec<BrandtElem>> {
    split_top_level(s, ',')?
        .into_iter()
        .map(|item| restricted(item, f))
        .collect()
}

fn lines<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

fn execute(cli: &Cli) -> Result<Response> {
    let f: AtomicFamily = cli.family.parse()?;
    let bound = cli.bound;
    match &cli.command {
        Command::Mul {
            brandt: false,
            a,
            b,
        } => {
            let product = belem(a, &f)? * belem(b, &f)?;
            Ok(Response::new(product.to_string(), to_json(&product)))
        }
        Command::Mul { brandt: true, a, b } => {
            let a = a.parse::<BrandtElem>()?.validate(&f)?;
            let b = b.parse::<BrandtElem>()?.validate(&f)?;
            let product = brandt::brandt_multiply(a, b);
            Ok(Response::new(product.to_string(), to_json(&product)))
        }
        Command::Solve { left, a, b, .. } => {
            let side = if *left { Side::Left } else { Side::Right };
            let (a, b) = (equation_side(a, &f)?, equation_side(b, &f)?);
            let solutions = match side {
                Side::Left => equations::solve_left(a, b, &f)?,
                Side::Right => equations::solve_right(a, b, &f)?,
            };
            Ok(match &solutions {
                SolutionSet::Finite { solutions: list } if list.is_empty() => {
                    Response::new("none", json!([]))
                }
                SolutionSet::Finite { solutions: list } => {
                    Response::new(lines(list), to_json(list))
                }
                SolutionSet::InfiniteZeroCase { .. } => {
                    Response::new(solutions.to_string(), to_json(&solutions))
                }
            })
        }
        Command::Chain { x } => {
            let chain = maximal_chain_down(belem(x, &f)?, &f);
            let text: Vec<String> = chain.iter().map(ToString::to_string).collect();
            Ok(Response::new(text.join(" "), to_json(&chain)))
        }
        Command::Census { maximal } => {
            let census = if *maximal {
                maximal_chain_census(&f, bound)
            } else {
                idempotent_chain_census(&f, bound)
            };
            let text: Vec<String> = census.iter().map(|(len, n)| format!("{len} {n}")).collect();
            let mut response = Response::new(text.join("\n"), to_json(&census));
            response.dot = Some(hasse_dot(&f, bound));
            Ok(response)
        }
        Command::Iso { other } => {
            let other: AtomicFamily = other.parse()?;
            Ok(match are_translate_equivalent(&f, &other) {
                Some(n) => Response::new(format!("n={n}"), json!({ "n": n })),
                None => Response::new("not-isomorphic", json!({ "n": null })),
            })
        }
        Command::Fiber { row, col } => {
            let elems = fiber(parse_nat(row)?, parse_nat(col)?, &f);
            Ok(Response::new(lines(&elems), to_json(&elems)))
        }
        Command::Embed { inverse: false, x } => {
            let image = embed(belem(x, &f)?);
            Ok(Response::new(image.to_string(), to_json(&image)))
        }
        Command::Embed { inverse: true, x } => {
            let pre = embed_inverse(x.parse()?, &f)?;
            Ok(Response::new(pre.to_string(), to_json(&pre)))
        }
        Command::Order { x, y } => {
            let (x, y) = (belem(x, &f)?, belem(y, &f)?);
            let leq = nat_leq(x, y);
            let witness = order_witness(x, y, &f);
            Ok(Response::new(
                leq.to_string(),
                json!({ "leq": leq, "witness": witness }),
            ))
        }
        Command::Topo { command } => topo(command, &f, bound),
        Command::Verify => Ok(verify_suite(&f, bound)),
    }
}

fn topo(command: &TopoCommand, f: &AtomicFamily, bound: Nat) -> Result<Response> {
    match command {
        TopoCommand::AcCheck { nbhd, elem } => {
            let u: AcNbhd = nbhd.parse()?;
            let mut reports = vec![check_inversion_ac(&u, f, bound)];
            if let Some(x) = elem {
                reports.push(check_shift_continuity_ac(&u, restricted(x, f)?, f, bound)?);
            }
            Ok(Response::report(VerificationReport::all(
                reports,
                u.to_string(),
            )))
        }
        TopoCommand::T1Check { n, elem } => {
            let u = Tau1Nbhd::new(parse_nat(n)?);
            let mut reports = vec![check_tau1_closed(u, f, bound)];
            if let Some(x) = elem {
                reports.push(check_tau1_annihilation(restricted(x, f)?, f, bound)?);
            }
            Ok(Response::report(VerificationReport::all(reports, "")))
        }
        TopoCommand::Prop49 { nbhd, m } => {
            let u: Nbhd = nbhd.parse()?;
            let m = brandt_list(m, f)?;
            let checked = BoundedUniverse::restricted(f, bound).len() as u64;
            let report = match prop49_violation(&u, &m, f, bound)? {
                None => VerificationReport::pass(checked, format!("no element of {u} maps into M")),
                Some(v) => {
                    let image = if m.contains(&phi(v)) { "φ" } else { "ψ" };
                    VerificationReport::fail(
                        checked,
                        vec![v.to_string()],
                        format!("{image}-image lies in M"),
                    )
                }
            };
            Ok(Response::report(report))
        }
        TopoCommand::Witness { a, d } => {
            let a = restricted(a, f)?;
            let d = brandt_list(d, f)?;
            if a.is_zero() || d.iter().any(|e| e.is_zero()) {
                return Err(Error::ZeroNotAllowed);
            }
            Ok(match find_zero_witness(a, &d) {
                Some(w) => Response::new(w.to_string(), to_json(&w)),
                None => Response {
                    code: EXIT_FAILED,
                    ..Response::new("none", Value::Null)
                },
            })
        }
    }
}

fn verify_suite(f: &AtomicFamily, bound: Nat) -> Response {
    let suite = verification_suite(f, bound);
    let all_passed = suite.iter().all(|(_, r)| r.passed);
    let text: Vec<String> = suite
        .iter()
        .map(|(name, r)| format!("{name}: {r}"))
        .collect();
    Response {
        code: if all_passed { EXIT_OK } else { EXIT_FAILED },
        ..Response::new(text.join("\n"), verification_suite_json(&suite))
    }
}
