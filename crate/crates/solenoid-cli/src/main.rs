//! Command-line surface for the solenoid library.
//!
//! Every subcommand prints deterministically: rationals reduced, adele
//! overrides in ascending prime order. `--json` switches the encoding;
//! exact values are emitted as reduced-rational strings. Exit codes:
//! 0 success, 1 domain error (message on stderr), 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::process::ExitCode;

use solenoid::extension::{congruent_z, congruent_z0};
use solenoid::parse::{class_to_json, parse_adele_class, parse_ext_spec, rigid_to_json};
use solenoid::{decompose, frac_p, Prime, QuadraticField, Rat};

#[derive(Parser)]
#[command(
    name = "solenoid",
    version,
    about = "Exact arithmetic for the adele class group of Q and rigidified extensions of Q by Z"
)]
struct Cli {
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p-adic fractional part of a rational
    Frac {
        /// The prime p
        #[arg(short = 'p', long = "prime")]
        prime: u64,
        /// The rational, as `n` or `n/d`
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Split q = u - v with u p-integral and v in [0,1) with p-power denominator
    Decompose {
        /// The prime p
        #[arg(short = 'p', long = "prime")]
        prime: u64,
        /// The rational, as `n` or `n/d`
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Evaluate the character of a rigidified extension at a rational
    Delta {
        /// Extension spec, e.g. "sigma=1/3; 5:1"
        #[arg(long)]
        ext: String,
        /// Evaluation point
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Baer sum of two rigidified extensions
    Sum {
        #[arg(long)]
        e0: String,
        #[arg(long)]
        e1: String,
    },
    /// Decide congruence of two extensions, printing the witness shift
    Congruent {
        /// Require the congruence to respect the splittings
        #[arg(long)]
        rigid: bool,
        #[arg(long)]
        e0: String,
        #[arg(long)]
        e1: String,
    },
    /// Canonical solenoid element of a rigidified extension
    Solenoid {
        #[arg(long)]
        ext: String,
    },
    /// Add two adele classes
    ClassAdd {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Decide equality of two adele classes
    ClassEq {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Quadratic-field invariants: discriminant and Haar mass
    Field {
        /// Squarefree integer defining Q(sqrt(d))
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(value_enum, default_value_t = FieldAction::Info)]
        action: FieldAction,
    },
    /// Run the seeded deterministic property suites
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldAction {
    /// Everything below
    Info,
    /// Just the squared Haar mass
    Haar,
    /// The trace Gram matrix and its determinant
    Gram,
}

fn run(cli: Cli) -> solenoid::Result<i32> {
    match cli.command {
        Command::Frac { prime, value } => {
            let p = Prime::new(prime)?;
            let q: Rat = value.parse()?;
            let part = frac_p(&q, p);
            if cli.json {
                println!(
                    "{}",
                    json!({"prime": p.to_string(), "value": part.value().to_string()})
                );
            } else {
                println!("{}", part.value());
            }
        }
        Command::Decompose { prime, value } => {
            let p = Prime::new(prime)?;
            let q: Rat = value.parse()?;
            let (u, v) = decompose(&q, p);
            if cli.json {
                println!("{}", json!({"u": u.to_string(), "v": v.to_string()}));
            } else {
                println!("u={u} v={v}");
            }
        }
        Command::Delta { ext, q } => {
            let e = parse_ext_spec(&ext)?.into_rigid();
            let q: Rat = q.parse()?;
            let value = e.delta_bar(&q)?;
            if cli.json {
                println!("{}", json!({"value": value.to_string()}));
            } else {
                println!("{value}");
            }
        }
        Command::Sum { e0, e1 } => {
            let e0 = parse_ext_spec(&e0)?.into_rigid();
            let e1 = parse_ext_spec(&e1)?.into_rigid();
            let sum = e0.baer_sum(&e1);
            if cli.json {
                println!("{}", rigid_to_json(&sum));
            } else {
                println!("{sum}");
            }
        }
        Command::Congruent { rigid, e0, e1 } => {
            let s0 = parse_ext_spec(&e0)?;
            let s1 = parse_ext_spec(&e1)?;
            let witness = if rigid {
                congruent_z0(&s0.into_rigid(), &s1.into_rigid())
            } else {
                congruent_z(
                    &solenoid::ExtPresentation::new(s0.finite_adele()),
                    &solenoid::ExtPresentation::new(s1.finite_adele()),
                )
            };
            match (cli.json, witness) {
                (false, Some(w)) => println!("witness d={}", w.d()),
                (false, None) => println!("none"),
                (true, Some(w)) => {
                    println!("{}", json!({"congruent": true, "d": w.d().to_string()}))
                }
                (true, None) => println!("{}", json!({"congruent": false})),
            }
        }
        Command::Solenoid { ext } => {
            let e = parse_ext_spec(&ext)?.into_rigid();
            let class = e.to_solenoid();
            if cli.json {
                println!("{}", class_to_json(&class));
            } else {
                println!("{class}");
            }
        }
        Command::ClassAdd { x, y } => {
            let sum = &parse_adele_class(&x)? + &parse_adele_class(&y)?;
            if cli.json {
                println!("{}", class_to_json(&sum));
            } else {
                println!("{sum}");
            }
        }
        Command::ClassEq { x, y } => {
            let equal = parse_adele_class(&x)? == parse_adele_class(&y)?;
            if cli.json {
                println!("{}", json!({"equal": equal}));
            } else {
                println!("{equal}");
            }
        }
        Command::Field { d, action } => {
            let k = QuadraticField::new(d)?;
            let (gram, det) = k.trace_gram();
            match (cli.json, action) {
                (false, FieldAction::Haar) => {
                    println!("haar_mass_squared={}", k.haar_mass_squared())
                }
                (false, FieldAction::Gram) => {
                    println!(
                        "gram=[[{},{}],[{},{}]] det={det}",
                        gram[0][0], gram[0][1], gram[1][0], gram[1][1]
                    );
                }
                (false, FieldAction::Info) => {
                    println!("d={d}");
                    println!("disc={}", k.disc());
                    println!("haar_mass_squared={}", k.haar_mass_squared());
                    let mass = k.haar_mass();
                    println!("haar_mass={mass} approx={}", mass.approx());
                }
                (true, FieldAction::Gram) => {
                    let rows: Vec<Vec<String>> = gram
                        .iter()
                        .map(|row| row.iter().map(|n| n.to_string()).collect())
                        .collect();
                    println!(
                        "{}",
                        json!({"d": d.to_string(), "gram": rows, "det": det.to_string()})
                    );
                }
                (true, _) => {
                    println!(
                        "{}",
                        json!({
                            "d": d.to_string(),
                            "disc": k.disc().to_string(),
                            "haar_mass_squared": k.haar_mass_squared().to_string(),
                        })
                    );
                }
            }
        }
        Command::Selftest { seed, cases } => {
            let outcomes = solenoid::selftest::run_suites(seed, cases);
            let all_ok = outcomes.iter().all(|o| o.ok());
            if cli.json {
                let suites: Vec<_> = outcomes
                    .iter()
                    .map(|o| json!({"name": o.name, "passed": o.passed, "total": o.total}))
                    .collect();
                println!(
                    "{}",
                    json!({"seed": seed, "cases": cases, "suites": suites, "ok": all_ok})
                );
            } else {
                let mut passed = 0;
                let mut total = 0;
                for o in &outcomes {
                    println!("{}: {}/{}", o.name, o.passed, o.total);
                    passed += o.passed;
                    total += o.total;
                }
                println!(
                    "selftest: {passed}/{total} {}",
                    if all_ok { "ok" } else { "FAILED" }
                );
            }
            if !all_ok {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
