//! Command-line front end. [`run`] does all the work and returns what
//! should be printed, so the binary is a thin wrapper and tests can drive
//! the interface in-process.

use std::ffi::OsString;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::dpower::{
    compare, dom_inexpressibility_suite, incomparability_suite, sdp_equiv_complement_check, InvariantHandle, Mode,
    SuiteKind,
};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, make_family, parse_graph_file, write_graph_file, FamilySpec, Graph};
use crate::invariants::{compute, count_colorings, PolyKind, PolyValue};
use crate::orthopoly::{ortho, OrthoFamily};
use crate::poly::{format_rational, parse_rational, BiPoly, UniPoly};
use crate::properties::GraphProperty;
use crate::recognition::{
    brute_recognize, check_p_unique, chromatic_screen, family_recognize, identity_suite, maxcl_trivial_recognize,
    IdentityBounds,
};
use crate::recurrence::{fit_family, DEFAULT_HOLDOUT};

/// Version tag of the JSON run reports.
pub const SCHEMA: &str = "graphpoly.run/1";

#[derive(Debug, Parser)]
#[command(name = "graphpoly", version, about = "Exact graph polynomial workbench")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Max vertices for vertex-subset sums.
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.vertex_subsets)]
    pub cap_n: usize,
    /// Max edges for edge-subset sums (including Tutte).
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.edge_subsets)]
    pub cap_m: usize,
    /// Max vertices for set-partition sums.
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.partition)]
    pub cap_partition: usize,
    /// Max order for enumerating graphs up to isomorphism.
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.enumeration)]
    pub cap_enum: usize,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Emit a JSON run report instead of plain text where both exist.
    #[arg(long, global = true)]
    pub json: bool,
}

impl GlobalArgs {
    fn caps(&self) -> Caps {
        Caps {
            vertex_subsets: self.cap_n,
            edge_subsets: self.cap_m,
            partition: self.cap_partition,
            enumeration: self.cap_enum,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a graph polynomial.
    Compute {
        /// char, charL, mu, mgen, chrom, genchrom:<prop>, ind:<prop>, span:<prop>, tutte, indep, dom, maxcl
        #[arg(long)]
        poly: String,
        /// Graph file path or family spec such as family:cycle:5.
        #[arg(long)]
        graph: String,
        /// Evaluate at this integer instead of printing the polynomial.
        #[arg(long)]
        at: Option<String>,
        /// Generalized chromatic counts where empty colour classes must
        /// belong to the property too (requires --at).
        #[arg(long)]
        strict_empty_classes: bool,
    },
    /// Print an orthogonal polynomial.
    Ortho {
        /// T, U, He or L
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Fit a C-finite recurrence to a polynomial over a family range.
    Fit {
        #[arg(long)]
        poly: String,
        /// Family with index range, e.g. cycle:3..14
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, default_value_t = DEFAULT_HOLDOUT)]
        holdout: usize,
    },
    /// Find the graphs realising a polynomial.
    Recognize {
        #[arg(long)]
        poly: String,
        /// File holding the polynomial, or the polynomial text itself.
        #[arg(long)]
        input: String,
        /// Look the polynomial up in this indexed family instead.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 5)]
        bound: usize,
    },
    /// Check whether a graph is determined by a polynomial up to a bound.
    Unique {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        bound: usize,
    },
    /// Necessary conditions for being a chromatic polynomial.
    Screen {
        #[arg(long)]
        input: String,
    },
    /// Build a graph with a prescribed maximal-clique polynomial.
    MaxclBuild {
        #[arg(long)]
        input: String,
    },
    /// Compare two invariants by distinctive power.
    Compare {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        /// dp or sdp
        #[arg(long, default_value = "dp")]
        mode: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Run a packaged suite: incomparability, dom, sdp-complement, identities.
    Suite {
        #[arg(long)]
        name: String,
        /// ind, span or genchrom
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        property: Option<String>,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// List graphs up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses a graph argument: a `family:` spec, a graph file, or a bare
/// family spec.
pub fn load_graph(arg: &str) -> Result<(Graph, Option<FamilySpec>)> {
    if arg.starts_with("family:") {
        let spec: FamilySpec = arg.parse()?;
        return Ok((make_family(&spec)?, Some(spec)));
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("reading {arg}: {e}")))?;
        return Ok((parse_graph_file(&text)?, None));
    }
    let spec: FamilySpec = arg
        .parse()
        .map_err(|e| Error::input(format!("'{arg}' is neither a graph file nor a family spec ({e})")))?;
    Ok((make_family(&spec)?, Some(spec)))
}

fn read_text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::input(format!("reading {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_range(s: &str) -> Result<(String, usize, usize)> {
    let bad = || Error::input(format!("family range '{s}' should look like cycle:3..14"));
    let s = s.strip_prefix("family:").unwrap_or(s);
    let (name, range) = s.split_once(':').ok_or_else(bad)?;
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    Ok((name.to_string(), a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

struct Report {
    command: &'static str,
    inputs: Value,
    outputs: Value,
    flags: Vec<String>,
}

fn render(report: Report, caps: &Caps, elapsed_ms: u128) -> String {
    let doc = json!({
        "schema": SCHEMA,
        "command": report.command,
        "inputs": report.inputs,
        "outputs": report.outputs,
        "caps": caps,
        "flags": report.flags,
        "timing_ms": elapsed_ms,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json");
    s.push('\n');
    s
}

/// Either plain text or a JSON report.
enum Output {
    Text(String),
    Json(Report),
}

fn execute(cmd: &Command, global: &GlobalArgs, caps: &Caps, diag: &mut String) -> Result<Output> {
    match cmd {
        Command::Compute {
            poly,
            graph,
            at,
            strict_empty_classes,
        } => {
            let kind: PolyKind = poly.parse()?;
            let (g, spec) = load_graph(graph)?;
            let mut flags = Vec::new();
            if spec.as_ref().is_some_and(FamilySpec::is_degenerate) {
                flags.push("degenerate-family".to_string());
            }
            if let PolyKind::Span(d) = &kind {
                let checked = d.clone().with_closure_checked(6, caps.enumeration.min(7))?;
                if !checked.closure_verified() {
                    flags.push("closure-unverified".to_string());
                }
            }
            if *strict_empty_classes {
                flags.push("strict-empty-classes".to_string());
            }
            let value = compute(&g, &kind, caps)?;
            let evaluated = match at {
                None => {
                    if *strict_empty_classes {
                        return Err(Error::input("--strict-empty-classes needs --at <k>"));
                    }
                    None
                }
                Some(x) => Some(match (&kind, *strict_empty_classes) {
                    (PolyKind::GenChrom(c), true) => {
                        let k: usize = x
                            .parse()
                            .map_err(|_| Error::input("--strict-empty-classes needs a nonnegative integer --at"))?;
                        count_colorings(&g, c, k, true, caps)?.to_string()
                    }
                    (_, true) => return Err(Error::input("--strict-empty-classes applies to genchrom:<prop> only")),
                    (_, false) => {
                        let x = parse_rational(x)?;
                        match &value {
                            PolyValue::Uni(p) => format_rational(&p.eval(&x)),
                            PolyValue::Bi(_) => return Err(Error::input("--at needs a univariate polynomial")),
                        }
                    }
                }),
            };
            for f in &flags {
                diag.push_str(&format!("note: {f}\n"));
            }
            if !global.json {
                return Ok(Output::Text(format!("{}\n", evaluated.as_ref().unwrap_or(&value.to_string()))));
            }
            let basis = match value {
                PolyValue::Uni(_) => "monomial",
                PolyValue::Bi(_) => "monomial-grid",
            };
            Ok(Output::Json(Report {
                command: "compute",
                inputs: json!({ "poly": poly, "graph": graph, "at": at }),
                outputs: json!({
                    "poly_kind": kind.to_string(),
                    "graph": write_graph_file(&g),
                    "signature": g.signature(),
                    "coefficients": value.to_string(),
                    "basis": basis,
                    "value_at": evaluated,
                }),
                flags,
            }))
        }
        Command::Ortho { family, n } => {
            let fam: OrthoFamily = family.parse()?;
            let p = ortho(fam, *n);
            if !global.json {
                return Ok(Output::Text(format!("{p}\n")));
            }
            Ok(Output::Json(Report {
                command: "ortho",
                inputs: json!({ "family": family, "n": n }),
                outputs: json!({ "polynomial": p }),
                flags: vec![],
            }))
        }
        Command::Fit {
            poly,
            family,
            max_order,
            max_deg,
            holdout,
        } => {
            let kind: PolyKind = poly.parse()?;
            let (name, a, b) = parse_range(family)?;
            let report = fit_family(&kind, &name, a, b, *max_order, *max_deg, *holdout, caps)?;
            let flags = if report.degenerate_members.is_empty() {
                vec![]
            } else {
                vec!["degenerate-family".to_string()]
            };
            Ok(Output::Json(Report {
                command: "fit",
                inputs: json!({ "poly": poly, "family": family, "max_order": max_order, "max_deg": max_deg, "holdout": holdout }),
                outputs: to_json(&report),
                flags,
            }))
        }
        Command::Recognize {
            poly,
            input,
            family,
            bound,
        } => {
            let kind: PolyKind = poly.parse()?;
            let text = read_text(input)?;
            let outputs = match family {
                Some(fam) => {
                    let p: UniPoly = text.parse()?;
                    to_json(&family_recognize(&p, &kind, fam, caps)?)
                }
                None => {
                    let target = match kind {
                        PolyKind::Tutte => PolyValue::Bi(text.parse::<BiPoly>()?),
                        _ => PolyValue::Uni(text.parse::<UniPoly>()?),
                    };
                    to_json(&brute_recognize(&target, &kind, *bound, caps)?)
                }
            };
            Ok(Output::Json(Report {
                command: "recognize",
                inputs: json!({ "poly": poly, "input": text.trim(), "family": family, "bound": bound }),
                outputs,
                flags: vec!["bounded-universe".to_string()],
            }))
        }
        Command::Unique { poly, graph, bound } => {
            let kind: PolyKind = poly.parse()?;
            let (g, _) = load_graph(graph)?;
            let verdict = check_p_unique(&g, &kind, *bound, caps)?;
            Ok(Output::Json(Report {
                command: "unique",
                inputs: json!({ "poly": poly, "graph": graph, "bound": bound }),
                outputs: to_json(&verdict),
                flags: vec!["bounded-universe".to_string()],
            }))
        }
        Command::Screen { input } => {
            let p: UniPoly = read_text(input)?.parse()?;
            Ok(Output::Json(Report {
                command: "screen",
                inputs: json!({ "input": p }),
                outputs: to_json(&chromatic_screen(&p)),
                flags: vec![],
            }))
        }
        Command::MaxclBuild { input } => {
            let p: UniPoly = read_text(input)?.parse()?;
            let g = maxcl_trivial_recognize(&p)?;
            Ok(Output::Json(Report {
                command: "maxcl-build",
                inputs: json!({ "input": p }),
                outputs: json!({ "graph": g, "signature": g.signature(), "verified": true }),
                flags: vec![],
            }))
        }
        Command::Compare { p, q, mode, bound } => {
            let (hp, hq): (InvariantHandle, InvariantHandle) = (p.parse()?, q.parse()?);
            let mode: Mode = mode.parse()?;
            let report = compare(&hp, &hq, mode, *bound, caps)?;
            Ok(Output::Json(Report {
                command: "compare",
                inputs: json!({ "p": p, "q": q, "mode": mode, "bound": bound }),
                outputs: to_json(&report),
                flags: vec!["bounded-universe".to_string()],
            }))
        }
        Command::Suite {
            name,
            kind,
            i,
            j,
            property,
            bound,
        } => {
            let inputs = json!({ "name": name, "kind": kind, "i": i, "j": j, "property": property, "bound": bound });
            let outputs = match name.as_str() {
                "incomparability" => {
                    let cases: Vec<(SuiteKind, usize, usize)> = match (kind, i, j) {
                        (Some(k), Some(i), Some(j)) => vec![(k.parse()?, *i, *j)],
                        (None, None, None) => {
                            let mut v = Vec::new();
                            for k in [SuiteKind::Ind, SuiteKind::Span] {
                                v.extend([(k, 3, 5), (k, 5, 3), (k, 4, 6)]);
                            }
                            v.extend([(SuiteKind::GenChrom, 3, 4), (SuiteKind::GenChrom, 4, 3)]);
                            v
                        }
                        _ => return Err(Error::input("give all of --kind, --i, --j or none of them")),
                    };
                    let reports = cases
                        .into_iter()
                        .map(|(k, i, j)| incomparability_suite(k, i, j, caps))
                        .collect::<Result<Vec<_>>>()?;
                    json!({ "all_passed": reports.iter().all(|r| r.passed), "cases": reports })
                }
                "dom" => to_json(&dom_inexpressibility_suite(caps)?),
                "sdp-complement" => {
                    let c: GraphProperty = property.as_deref().unwrap_or("connected").parse()?;
                    let k: SuiteKind = kind.as_deref().unwrap_or("ind").parse()?;
                    to_json(&sdp_equiv_complement_check(&c, k, bound.unwrap_or(6), caps)?)
                }
                "identities" => {
                    let bounds = bound.map_or(
                        IdentityBounds {
                            cycle_path: 12,
                            clique: 10,
                            bipartite: 5,
                        },
                        IdentityBounds::uniform,
                    );
                    to_json(&identity_suite(bounds)?)
                }
                other => {
                    return Err(Error::input(format!(
                        "unknown suite '{other}'; expected incomparability, dom, sdp-complement or identities"
                    )))
                }
            };
            Ok(Output::Json(Report {
                command: "suite",
                inputs,
                outputs,
                flags: vec!["bounded-universe".to_string()],
            }))
        }
        Command::Enumerate { n, count_only } => {
            let classes = enumerate_graphs(*n, caps.enumeration)?;
            if !global.json {
                let text = if *count_only {
                    format!("{}\n", classes.len())
                } else {
                    classes.iter().map(write_graph_file).collect::<Vec<_>>().join("\n")
                };
                return Ok(Output::Text(text));
            }
            let outputs = if *count_only {
                json!({ "count": classes.len() })
            } else {
                json!({ "count": classes.len(), "graphs": to_json(&*classes) })
            };
            Ok(Output::Json(Report {
                command: "enumerate",
                inputs: json!({ "n": n }),
                outputs,
                flags: vec![],
            }))
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let caps = cli.global.caps();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot start {} workers: {e}\n", cli.global.jobs),
            }
        }
    };
    let start = Instant::now();
    let mut diag = String::new();
    let result = pool.install(|| execute(&cli.command, &cli.global, &caps, &mut diag));
    match result {
        Ok(Output::Text(stdout)) => Outcome {
            code: 0,
            stdout,
            stderr: diag,
        },
        Ok(Output::Json(report)) => Outcome {
            code: 0,
            stdout: render(report, &caps, start.elapsed().as_millis()),
            stderr: diag,
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("{diag}error: {e}\n"),
        },
    }
}
