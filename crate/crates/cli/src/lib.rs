//! The `zkring` command line.
//!
//! Exit codes: 0 on success, 1 when methods disagree, a model check fails or an
//! obstruction is found, 2 on usage, input or parse errors.

mod input;
mod render;

use std::ffi::OsString;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zkring_core::checklist::reproduction_checklist;
use zkring_core::complex::io::to_cplx;
use zkring_core::hochster::{bigraded_betti_with, ZkBetti, DEFAULT_MAX_VERTICES};
use zkring_core::homology::ChainComplexZ;
use zkring_core::resolutions::{cross_check_with, taylor_cohomology_with, DEFAULT_MAX_MISSING_FACES};
use zkring_core::ring::presentation_from;
use zkring_core::{csp_obstructions, koszul_cohomology, parse_model, verify_csp_model, Error, GroupData, HochsterOptions};

pub use input::{builtin, resolve};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zkring", version, about = "Integral cohomology of moment-angle complexes")]
pub struct Cli {
    /// Worker threads; 1 forces the sequential path.
    #[arg(long, global = true, env = "ZKRING_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Vertex cap for subset enumeration.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Hochster,
    Koszul,
    Taylor,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a builtin complex in `.cplx` format.
    Construct {
        /// p28-8, polygon, simplex-boundary, cross-polytope, truncated-simplex or join.
        name: String,
        params: Vec<String>,
    },
    /// Reduced simplicial (co)homology of K.
    Betti { input: String },
    /// Cohomology groups of Z_K.
    Zk {
        input: String,
        #[arg(long, value_enum, default_value = "hochster")]
        method: Method,
        /// Also print the bigraded table.
        #[arg(long)]
        bigraded: bool,
    },
    /// Ring presentation of H*(Z_K) as JSON.
    Ring { input: String },
    /// Compare the Hochster, Koszul and Taylor computations.
    Crosscheck { input: String },
    /// Obstructions to Z_K being a connected sum of sphere products.
    Classify { input: String },
    /// Check H*(Z_K) against a connected-sum model such as `3,3,6;5,7*8;6,6*8`.
    Verify {
        input: String,
        #[arg(long)]
        model: String,
    },
    /// Rebuild P28-8 and run the full verification checklist.
    Paper,
}

/// A finished report and its exit code.
struct Report {
    body: String,
    code: i32,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, code: EXIT_OK }
    }

    fn json(v: &Value, code: i32) -> Self {
        let mut body = serde_json::to_string_pretty(v).expect("json value serialises");
        body.push('\n');
        Report { body, code }
    }
}

fn totals_json(betti: &ZkBetti) -> Value {
    betti
        .iter()
        .map(|(p, g)| json!({ "p": p, "rank": g.rank, "torsion": g.torsion }))
        .collect()
}

fn bidegree_json(table: &std::collections::BTreeMap<(isize, usize), GroupData>) -> Value {
    table
        .iter()
        .filter(|(_, g)| !g.is_zero())
        .map(|((i, j), g)| json!({ "i": i, "j2": j, "rank": g.rank, "torsion": g.torsion }))
        .collect()
}

impl Cli {
    fn options(&self) -> HochsterOptions {
        HochsterOptions {
            threads: self.threads.map_or(0, |t| t as usize),
            max_vertices: self.max_vertices.unwrap_or(DEFAULT_MAX_VERTICES),
            ..HochsterOptions::default()
        }
    }

    fn run(&self) -> Result<Report> {
        let opts = self.options();
        match &self.command {
            Command::Construct { name, params } => Ok(Report::ok(to_cplx(&builtin(name, params)?))),
            Command::Betti { input } => {
                let k = resolve(input)?;
                let (h, c) = ChainComplexZ::of_complex(&k).groups();
                if self.json {
                    let list = |s: &zkring_core::HomologySummary| -> Value {
                        s.nonzero()
                            .map(|(d, g)| json!({ "degree": d, "rank": g.rank, "torsion": g.torsion }))
                            .collect()
                    };
                    let v = json!({
                        "m": k.m(),
                        "dim": k.dim(),
                        "f_vector": k.f_vector(),
                        "homology": list(&h),
                        "cohomology": list(&c),
                    });
                    Ok(Report::json(&v, EXIT_OK))
                } else {
                    Ok(Report::ok(render::simplicial(&k, &h, &c)))
                }
            }
            Command::Zk { input, method, bigraded } => self.zk(&resolve(input)?, *method, *bigraded, &opts),
            Command::Ring { input } => {
                let k = resolve(input)?;
                let betti = bigraded_betti_with(&k, &opts)?;
                Ok(Report::json(&presentation_from(&k, &betti).to_json(), EXIT_OK))
            }
            Command::Crosscheck { input } => {
                let k = resolve(input)?;
                match cross_check_with(&k, &opts, DEFAULT_MAX_MISSING_FACES) {
                    Ok(rep) => {
                        if self.json {
                            let table = rep.hochster.iter().cloned().collect();
                            let v = json!({
                                "agree": true,
                                "bidegrees": rep.bidegrees,
                                "taylor_strata": rep.taylor_strata,
                                "table": bidegree_json(&table),
                            });
                            Ok(Report::json(&v, EXIT_OK))
                        } else {
                            Ok(Report::ok(format!(
                                "hochster, koszul and taylor agree on {} bidegrees and {} taylor strata\n",
                                rep.bidegrees, rep.taylor_strata
                            )))
                        }
                    }
                    Err(Error::MethodDisagreement { location, detail }) => {
                        if self.json {
                            let v = json!({ "agree": false, "location": location, "detail": detail });
                            Ok(Report::json(&v, EXIT_FAILED))
                        } else {
                            Ok(Report {
                                body: format!("methods disagree at {location}: {detail}\n"),
                                code: EXIT_FAILED,
                            })
                        }
                    }
                    Err(e) => Err(e.into()),
                }
            }
            Command::Classify { input } => {
                let k = resolve(input)?;
                let rep = csp_obstructions(&k)?;
                let code = if rep.obstructed() { EXIT_FAILED } else { EXIT_OK };
                if self.json {
                    let mut v = serde_json::to_value(&rep)?;
                    v["obstructed"] = json!(rep.obstructed());
                    Ok(Report::json(&v, code))
                } else {
                    Ok(Report {
                        body: render::obstructions(&rep),
                        code,
                    })
                }
            }
            Command::Verify { input, model } => {
                let k = resolve(input)?;
                let model = parse_model(model)?;
                let rep = match verify_csp_model(&k, &model) {
                    Ok(rep) => rep,
                    Err(Error::TorsionPresent(detail)) => {
                        return Ok(Report {
                            body: format!("inconsistent: torsion present, {detail}\n"),
                            code: EXIT_FAILED,
                        })
                    }
                    Err(e) => return Err(e.into()),
                };
                let code = if rep.consistent() { EXIT_OK } else { EXIT_FAILED };
                if self.json {
                    let mut v = serde_json::to_value(&rep)?;
                    v["consistent"] = json!(rep.consistent());
                    Ok(Report::json(&v, code))
                } else {
                    Ok(Report {
                        body: render::model(&rep),
                        code,
                    })
                }
            }
            Command::Paper => {
                let list = reproduction_checklist(&opts)?;
                let code = if list.passed() { EXIT_OK } else { EXIT_FAILED };
                if self.json {
                    let mut v = serde_json::to_value(&list)?;
                    v["passed"] = json!(list.passed());
                    Ok(Report::json(&v, code))
                } else {
                    Ok(Report {
                        body: render::checklist(&list),
                        code,
                    })
                }
            }
        }
    }

    fn zk(&self, k: &zkring_core::SimplicialComplex, method: Method, bigraded: bool, opts: &HochsterOptions) -> Result<Report> {
        let name = match method {
            Method::Hochster => "hochster",
            Method::Koszul => "koszul",
            Method::Taylor => "taylor",
            Method::All => "all",
        };
        let (totals, table, detail) = match method {
            Method::Hochster | Method::All => {
                if method == Method::All {
                    if let Err(Error::MethodDisagreement { location, detail }) =
                        cross_check_with(k, opts, DEFAULT_MAX_MISSING_FACES)
                    {
                        return Ok(Report {
                            body: format!("methods disagree at {location}: {detail}\n"),
                            code: EXIT_FAILED,
                        });
                    }
                }
                let b = bigraded_betti_with(k, opts)?;
                let text = render::hochster_entries(&b);
                let entries = b.to_json()["bigraded"].clone();
                (b.total(), entries, text)
            }
            Method::Koszul => {
                let t = koszul_cohomology(k);
                (ZkBetti::from_bidegrees(&t), bidegree_json(&t), render::bidegrees(&t))
            }
            Method::Taylor => {
                let t = taylor_cohomology_with(k, DEFAULT_MAX_MISSING_FACES)?;
                (ZkBetti::from_bidegrees(&t), bidegree_json(&t), render::bidegrees(&t))
            }
        };
        if self.json {
            let mut v = json!({
                "m": k.m(),
                "dim": k.dim(),
                "method": name,
                "total": totals_json(&totals),
            });
            if bigraded {
                v["bigraded"] = table;
            }
            return Ok(Report::json(&v, EXIT_OK));
        }
        let mut body = render::totals(k, name, &totals);
        if bigraded {
            body.push('\n');
            body.push_str(&detail);
        }
        Ok(Report::ok(body))
    }

    fn emit(&self, report: &Report) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, &report.body).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(report.body.as_bytes())?;
                stdout.flush()?;
                Ok(())
            }
        }
    }
}

fn configure_threads(cli: &Cli) {
    if let Some(n) = cli.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global();
    }
    if let Some(cap) = cli.max_vertices {
        if cap > DEFAULT_MAX_VERTICES {
            eprintln!("warning: vertex cap raised to {cap}; subset enumeration visits 2^m full subcomplexes");
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    configure_threads(&cli);
    let outcome = cli.run().and_then(|report| cli.emit(&report).map(|_| report.code));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}
