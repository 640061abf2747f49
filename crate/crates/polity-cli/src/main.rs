//! Command line front end: file in, JSON out, scriptable exit codes.
//!
//! Exit code contract: 0 when the operation succeeds (or a check holds),
//! 1 for a semantic negative (check fails, no witness), 2 for input
//! errors of any kind.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polity::morphism::{
    are_g_isomorphic, are_pair_isomorphic, check_c_map, check_g_map, check_p_map, check_pair_map,
    find_ground_witness, Mode, Verdict,
};
use polity::oracle::{verify_proposition, OracleBounds};
use polity::{canonical, delegation, fixtures, io as pio, projection, voting};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "polity",
    version,
    about = "Coalition complexes, aspiration covers, and their transformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Bc,
    Sc,
    Bp,
    Sp,
    Bg,
    Sg,
    B,
    S,
}

impl CheckKind {
    fn mode(self) -> Mode {
        match self {
            CheckKind::Bc | CheckKind::Bp | CheckKind::Bg | CheckKind::B => Mode::B,
            CheckKind::Sc | CheckKind::Sp | CheckKind::Sg | CheckKind::S => Mode::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PairKind {
    B,
    S,
}

impl PairKind {
    fn mode(self) -> Mode {
        match self {
            PairKind::B => Mode::B,
            PairKind::S => Mode::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoKind {
    Bg,
    Sg,
    B,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawSuite {
    Functor,
    Naturality,
    Category,
}

#[derive(Args)]
struct MapInput {
    /// Map document; omitted components are identities.
    #[arg(long)]
    map: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Knit of a site: the formation of exactly realized coalitions.
    Knit { site: PathBuf },
    /// Nerve of a site: the structure of coalitions sharing a state.
    Nerve {
        site: PathBuf,
        /// Emit DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Canonical site of a formation.
    Canon { formation: PathBuf },
    /// Check a morphism of the given kind between two documents.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        map: MapInput,
        domain: PathBuf,
        codomain: PathBuf,
    },
    /// Search a ground map completing a base map to a pair morphism.
    Find {
        #[arg(long, value_enum)]
        kind: PairKind,
        #[command(flatten)]
        map: MapInput,
        domain: PathBuf,
        codomain: PathBuf,
    },
    /// Decide isomorphism between two sites.
    Iso {
        #[arg(long, value_enum)]
        kind: IsoKind,
        left: PathBuf,
        right: PathBuf,
    },
    /// Analyze one delegation over a structure.
    Delegation {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        formation: PathBuf,
    },
    /// Drop one dimension of a product-ground site.
    Project {
        #[arg(long)]
        drop: String,
        site: PathBuf,
    },
    /// List maximal viable coalitions reaching the quota.
    Winning {
        #[arg(long)]
        weights: PathBuf,
        site: PathBuf,
    },
    /// Run a law suite on seeded random morphisms.
    Laws {
        #[arg(long, value_enum)]
        suite: LawSuite,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: u64,
    },
    /// Run one proposition check from the verification catalog.
    Oracle {
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 3)]
        max_base: usize,
        #[arg(long, default_value_t = 3)]
        max_ground: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: u64,
    },
    /// Write a bundled fixture set into a directory.
    Demo {
        name: String,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

fn read_input(path: &PathBuf) -> polity::Result<String> {
    if path.as_os_str() == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        Ok(buffer)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_site(path: &PathBuf) -> polity::Result<polity::PSite> {
    pio::parse_site(&read_input(path)?)
}

fn load_formation(path: &PathBuf) -> polity::Result<polity::Complex> {
    pio::parse_formation(&read_input(path)?)
}

fn map_text(map: &MapInput) -> polity::Result<String> {
    match &map.map {
        Some(path) => read_input(path),
        None => Ok("{}".to_string()),
    }
}

fn verdict_outcome(verdict: &Verdict) -> ExitCode {
    println!(
        "{}",
        serde_json::to_string_pretty(verdict).expect("verdict serializes")
    );
    if verdict.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> polity::Result<ExitCode> {
    match cli.command {
        Command::Knit { site } => {
            let a = load_site(&site)?;
            print!("{}", pio::render_formation(&a.knit()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Nerve { site, dot } => {
            let a = load_site(&site)?;
            let nerve = a.nerve();
            if dot {
                print!("{}", pio::render_nerve_dot(&nerve));
            } else {
                print!("{}", pio::render_formation(nerve.complex()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon { formation } => {
            let x = load_formation(&formation)?;
            let site = canonical::canonical_site(&x)?;
            print!("{}", pio::render_site(&site));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            kind,
            map,
            domain,
            codomain,
        } => {
            let text = map_text(&map)?;
            let verdict = match kind {
                CheckKind::Bc | CheckKind::Sc => {
                    let x = load_formation(&domain)?;
                    let y = load_formation(&codomain)?;
                    let phi = pio::parse_base_map(&text, x.base(), y.base())?;
                    check_c_map(kind.mode(), &phi, &x, &y)?
                }
                CheckKind::Bp | CheckKind::Sp => {
                    let a = load_site(&domain)?;
                    let b = load_site(&codomain)?;
                    let phi = pio::parse_base_map(&text, a.base(), b.base())?;
                    check_p_map(kind.mode(), &phi, &a, &b)?
                }
                CheckKind::Bg | CheckKind::Sg => {
                    let a = load_site(&domain)?;
                    let b = load_site(&codomain)?;
                    let f = pio::parse_ground_map(&text, a.ground(), b.ground())?;
                    check_g_map(kind.mode(), &f, &a, &b)?
                }
                CheckKind::B | CheckKind::S => {
                    let a = load_site(&domain)?;
                    let b = load_site(&codomain)?;
                    let m = pio::parse_pair_map(&text, &a, &b)?;
                    check_pair_map(kind.mode(), &m, &a, &b)?
                }
            };
            Ok(verdict_outcome(&verdict))
        }
        Command::Find {
            kind,
            map,
            domain,
            codomain,
        } => {
            let a = load_site(&domain)?;
            let b = load_site(&codomain)?;
            let phi = pio::parse_base_map(&map_text(&map)?, a.base(), b.base())?;
            match find_ground_witness(kind.mode(), &phi, &a, &b)? {
                Some(f) => {
                    print!("{}", pio::render_ground_map(&f));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NONE");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Iso { kind, left, right } => {
            let a = load_site(&left)?;
            let b = load_site(&right)?;
            match kind {
                IsoKind::Bg | IsoKind::Sg => {
                    let mode = if matches!(kind, IsoKind::Bg) {
                        Mode::B
                    } else {
                        Mode::S
                    };
                    let isomorphic = are_g_isomorphic(mode, &a, &b)?;
                    println!("{}", json!({ "isomorphic": isomorphic }));
                    Ok(if isomorphic {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    })
                }
                IsoKind::B | IsoKind::S => {
                    let mode = if matches!(kind, IsoKind::B) {
                        Mode::B
                    } else {
                        Mode::S
                    };
                    match are_pair_isomorphic(mode, &a, &b)? {
                        Some((phi, psi)) => {
                            let doc = json!({
                                "base_map": serde_json::from_str::<serde_json::Value>(
                                    &pio::render_base_map(&phi))?["base_map"],
                                "inverse": serde_json::from_str::<serde_json::Value>(
                                    &pio::render_base_map(&psi))?["base_map"],
                            });
                            println!("{}", serde_json::to_string_pretty(&doc)?);
                            Ok(ExitCode::SUCCESS)
                        }
                        None => {
                            println!("NONE");
                            Ok(ExitCode::from(1))
                        }
                    }
                }
            }
        }
        Command::Delegation {
            from,
            to,
            formation,
        } => {
            let x = load_formation(&formation)?;
            let e = polity::SimplicialComplex::new(x)?;
            let d = delegation::Delegation::new(e.base().clone(), &from, &to)?;
            let simplicial = delegation::is_simplicial_delegation(&e, &d)?.holds;
            let friendly = delegation::is_friendly_delegation(&e, &d)?.holds;
            let image = polity::morphism::c_image(&d.function(), e.complex())?;
            let minus = delegation::without_agent(&e, d.delegating());
            let witness = delegation::friendly_foundation_witness(&e, &d)?;
            let doc = json!({
                "simplicial": simplicial,
                "friendly": friendly,
                "image": pio::formation_value(&image),
                "minus": pio::formation_value(minus.complex()),
                "foundation_witness": witness.map(|w| pio::site_value(&w)),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Project { drop, site } => {
            let a = load_site(&site)?;
            let projected = projection::project_site(&a, &drop)?;
            print!("{}", pio::render_site(&projected));
            Ok(ExitCode::SUCCESS)
        }
        Command::Winning { weights, site } => {
            let a = load_site(&site)?;
            let w = pio::parse_weights(&read_input(&weights)?)?;
            let winners = voting::winning_viable(&a, &w)?;
            let list: Vec<serde_json::Value> = winners
                .iter()
                .map(|c| {
                    let seats = voting::coalition_weight(&a, &w, *c).expect("validated weights");
                    json!({
                        "members": c.labels(a.base()),
                        "weight": seats,
                    })
                })
                .collect();
            let doc = json!({ "quota": w.quota(), "coalitions": list });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Laws {
            suite,
            seed,
            trials,
        } => {
            let id = match suite {
                LawSuite::Functor => "FUNCTOR_LAWS",
                LawSuite::Naturality => "NATURALITY",
                LawSuite::Category => "CATEGORY_LAWS",
            };
            let bounds = OracleBounds {
                max_base: 3,
                max_ground: 4,
                trials,
                seed,
            };
            let report = verify_proposition(id, &bounds)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Oracle {
            check,
            max_base,
            max_ground,
            seed,
            trials,
        } => {
            let bounds = OracleBounds {
                max_base,
                max_ground,
                trials,
                seed,
            };
            let report = verify_proposition(&check, &bounds)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Demo { name, dir } => {
            let written = fixtures::write_demo(&name, &dir)?;
            for path in written {
                println!("{}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
