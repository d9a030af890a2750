use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use noc::enumerative::{degree, theorem_multiplicities};
use noc::exactalg::rational::to_display;
use noc::exactalg::Poly;
use noc::hierarchy::build_hierarchy_over;
use noc::invariants::net::NetJson;
use noc::invariants::{j12_at, j6_at, plucker, stability, Net};
use noc::orbitdata::{canonical_name, Dataset};
use noc::report::{run_check, verify_all};
use noc::resolver::{class_amu, class_of, factored_display, solve_class_in, Mu};
use noc::thom::tp_orbit;
use noc::{NocError, Result};

#[derive(Parser)]
#[command(name = "noc", version, about = "Exact computations on nets of conics")]
struct Cli {
    /// Orbit dataset (JSON) replacing the built-in table.
    #[arg(long, global = true, value_name = "FILE")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ThomFormat {
    Schur,
    Roots,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// The orbit table.
    Orbits {
        /// Names only, one per line.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Equivariant classes of orbit closures.
    Classes {
        #[arg(long)]
        orbit: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Degrees of the projectivized orbit closures.
    Degrees {
        #[arg(long)]
        orbit: Option<String>,
    },
    /// Pullbacks of cubic-curve classes along the determinant map.
    Multiplicities {
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Adjacency graph of orbit closures.
    Hierarchy {
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Invariants of a rational net given as JSON.
    Invariants {
        #[arg(long, value_name = "FILE")]
        net: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Thom polynomial of a Σ⁰ orbit for p target roots.
    Thom {
        #[arg(long)]
        orbit: String,
        #[arg(long, default_value_t = 3)]
        p: usize,
        #[arg(long, value_enum, default_value = "schur")]
        format: ThomFormat,
    },
    /// Re-derives and checks every identity; exit status 1 on any failure.
    VerifyAll {
        /// Run a single check.
        #[arg(long)]
        only: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
}

/// The dataset in use and whether it is the built-in one.
fn dataset(path: &Option<PathBuf>) -> Result<(Dataset, bool)> {
    match path {
        None => Ok((Dataset::builtin().clone(), true)),
        Some(p) => {
            let s = std::fs::read_to_string(p).map_err(|e| NocError::Invalid(format!("{}: {e}", p.display())))?;
            Ok((Dataset::from_json(&s)?, false))
        }
    }
}

/// Class by name; the codimension-one family is `A_mu` / `A_inf`.
fn class(data: &Dataset, builtin: bool, name: &str) -> Result<Poly> {
    match name {
        "A_mu" | "A" => return class_amu(Mu::Finite),
        "A_inf" => return class_amu(Mu::Infinity),
        _ => {}
    }
    let o = data.orbit(name)?;
    if builtin {
        class_of(&o.name)
    } else {
        solve_class_in(data, o).map(|s| s.class)
    }
}

/// Names with a class: the family, then every orbit of codimension 2..=17.
fn class_names(data: &Dataset) -> Vec<String> {
    let mut v = vec!["A_mu".to_string(), "A_inf".to_string()];
    v.extend(data.iter().filter(|o| (2..18).contains(&o.codim)).map(|o| o.name.clone()));
    v
}

#[derive(Serialize)]
struct ClassRow {
    name: String,
    class: String,
}

#[derive(Serialize)]
struct InvariantsJson {
    j6: String,
    j12: String,
    stability: String,
    corank: usize,
    plucker: Vec<String>,
}

fn run(cli: Cli) -> Result<ExitCode> {
    let (data, builtin) = dataset(&cli.fixtures)?;
    match cli.cmd {
        Cmd::Orbits { list, format } => match format {
            TextOrJson::Json => println!("{}", data.to_json()),
            TextOrJson::Text if list => data.iter().for_each(|o| println!("{}", o.name)),
            TextOrJson::Text => {
                println!("{:<8} {:>5} {:<8} {:<8} witness", "orbit", "codim", "stratum", "dual");
                for o in data.iter() {
                    let w = o.witness.as_ref().map_or("-".into(), |w| format!("{w:?}"));
                    let dual = o.dual.clone().unwrap_or_else(|| "-".into());
                    println!("{:<8} {:>5} {:<8} {:<8} {w}", o.name, o.codim, format!("{:?}", o.stratum), dual);
                }
            }
        },
        Cmd::Classes { orbit, format } => {
            let names = match orbit {
                Some(n) => vec![canonical_name(&n)],
                None => class_names(&data),
            };
            let mut rows = Vec::new();
            for n in names {
                rows.push(ClassRow { class: factored_display(&class(&data, builtin, &n)?), name: n });
            }
            match format {
                TextOrJson::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize")),
                TextOrJson::Text if rows.len() == 1 => println!("{}", rows[0].class),
                TextOrJson::Text => rows.iter().for_each(|r| println!("{:<8} {}", r.name, r.class)),
            }
        }
        Cmd::Degrees { orbit } => match orbit {
            Some(n) => println!("{}", to_display(&degree(&class(&data, builtin, &canonical_name(&n))?)?)),
            None => {
                for n in class_names(&data) {
                    println!("{:<8} {}", n, to_display(&degree(&class(&data, builtin, &n)?)?));
                }
            }
        },
        Cmd::Multiplicities { format } => {
            let rows = theorem_multiplicities()?;
            match format {
                TextOrJson::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize")),
                TextOrJson::Text => rows.iter().for_each(|r| println!("{r}")),
            }
        }
        Cmd::Hierarchy { format } => {
            let g = build_hierarchy_over(&data)?;
            match format {
                GraphFormat::Dot => print!("{}", g.to_dot()),
                GraphFormat::Json => println!("{}", g.to_json()),
            }
        }
        Cmd::Invariants { net, format } => {
            let s = std::fs::read_to_string(&net).map_err(|e| NocError::Invalid(format!("{}: {e}", net.display())))?;
            let j: NetJson = serde_json::from_str(&s).map_err(|e| NocError::Parse(e.to_string()))?;
            let n = Net::from_json(&j)?;
            let (a, b, st) = stability(&n)?;
            debug_assert_eq!((j6_at(&n)?, j12_at(&n)?), (a.clone(), b.clone()));
            let w = plucker(&n)?;
            let out = InvariantsJson {
                j6: to_display(&a),
                j12: to_display(&b),
                stability: st.to_string(),
                corank: n.corank()?,
                plucker: w.coords().iter().map(to_display).collect(),
            };
            match format {
                TextOrJson::Json => println!("{}", serde_json::to_string_pretty(&out).expect("serializes")),
                TextOrJson::Text => {
                    println!("J6 = {}", out.j6);
                    println!("J12 = {}", out.j12);
                    println!("{}", out.stability);
                    println!("corank = {}", out.corank);
                    println!("psi = {w}");
                }
            }
        }
        Cmd::Thom { orbit, p, format } => {
            let r = tp_orbit(&orbit, p)?;
            match format {
                ThomFormat::Schur => println!("{}", r.schur),
                ThomFormat::Roots => println!("{}", r.roots()?),
                ThomFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("serializes"))
                }
            }
        }
        Cmd::VerifyAll { only, format } => {
            let report = match only {
                Some(id) if (1..=15).contains(&id) => noc::report::VerifyReport { rows: vec![run_check(id, &data)] },
                Some(id) => return Err(NocError::Invalid(format!("no check {id}; checks are 1..=15"))),
                None => verify_all(&data, |r| {
                    eprintln!("[{:>7.2}s] {:>2} {}", r.elapsed.as_secs_f64(), r.id, r.status)
                }),
            };
            match format {
                TextOrJson::Json => println!("{}", report.to_json()),
                TextOrJson::Text => print!("{}", report.render(false)),
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("noc: {e}");
            ExitCode::from(2)
        }
    }
}
