//! Command-line interface for finite gamma-semigroups and their
//! Q-fuzzy ideal theory.
//!
//! Exit codes: 0 when every check agrees, 1 when a discrepancy was
//! found, 2 on input or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use qgamma_cli::error::{CliError, Result};
use qgamma_cli::formats::{parse_gsem, parse_qfz, render_qfz};
use qgamma_cli::report::render_all;
use qgamma_cli::search::run_search;
use qgamma_cli::verify::{run_all, run_verify, VerifyOptions};
use qgamma_core::algebra::{is_ideal, is_regular, CrispSubset, GammaSemigroup, Regularity, Side};
use qgamma_core::composition::compose;
use qgamma_core::fixtures;
use qgamma_core::grade::Grade;
use qgamma_core::operators::{
    build_left_operator, build_right_operator, plus_fuzzy, plus_prime_fuzzy, star_fuzzy,
    star_prime_fuzzy, OperatorSemigroup,
};
use qgamma_core::qfuzzy::{is_q_fuzzy_ideal, FuzzyIdealCheck};

#[derive(Parser)]
#[command(
    name = "qgamma",
    version,
    about = "Validate finite gamma-semigroups and verify their Q-fuzzy ideal theorems"
)]
struct Cli {
    /// Also write the standard output to this file.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::Both => Side::TwoSided,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    /// R -> S on fuzzy subsets of the right operator semigroup
    Star,
    /// S -> R
    StarPrime,
    /// L -> S on fuzzy subsets of the left operator semigroup
    Plus,
    /// S -> L
    PlusPrime,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a GSEM file and validate every associativity axiom
    Validate { gsem: PathBuf },
    /// Test regularity; prints one witness per element or the failure
    Regular { gsem: PathBuf },
    /// Test whether the listed elements form a left/right/two-sided ideal
    Ideal {
        gsem: PathBuf,
        /// Members of the subset, by label
        elements: Vec<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Test whether a QFZ fuzzy subset is a Q-fuzzy ideal
    Qideal {
        gsem: PathBuf,
        qfz: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Print the level set of a fuzzy subset at threshold t
    Level {
        gsem: PathBuf,
        qfz: PathBuf,
        /// Threshold, e.g. 7/10 or 0.7
        #[arg(long)]
        t: String,
    },
    /// Print the sorted image of a fuzzy subset
    Image { gsem: PathBuf, qfz: PathBuf },
    /// Sup-min composition of two fuzzy subsets, printed as QFZ
    Compose {
        gsem: PathBuf,
        qfz1: PathBuf,
        qfz2: PathBuf,
    },
    /// Build an operator semigroup: classes, multiplication, unity
    Operators {
        gsem: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Apply a transfer map to a fuzzy subset, printed as QFZ
    Map {
        gsem: PathBuf,
        /// Over S for star-prime/plus-prime, over the operator
        /// semigroup's classes for star/plus
        qfz: PathBuf,
        #[arg(long, value_enum)]
        kind: MapArg,
    },
    /// Run theorem checks; without a structure, sweeps the bundled ones
    Verify {
        /// GSEM file, or a bundled name: LZ3, CONST2, MOD16, MOD4MUL
        structure: Option<String>,
        /// A theorem id such as 3.7 or crisp-4.7, or "all"
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Number of evenly spaced grid points
        #[arg(long, default_value_t = 5)]
        grid: usize,
        #[arg(long = "q-size", default_value_t = 1)]
        q_size: usize,
    },
    /// Enumerate all small structures and hunt for criterion discrepancies
    Search {
        #[arg(long)]
        property: String,
        #[arg(long = "max-s", default_value_t = 2)]
        max_s: usize,
        #[arg(long = "max-g", default_value_t = 1)]
        max_g: usize,
        #[arg(long, default_value_t = 5)]
        grid: usize,
        #[arg(long = "q-size", default_value_t = 1)]
        q_size: usize,
    },
}

fn load_gsem(path: &PathBuf) -> Result<GammaSemigroup> {
    let text = std::fs::read_to_string(path)?;
    parse_gsem(&text)
}

fn load_structure(name_or_path: &str) -> Result<(String, GammaSemigroup)> {
    for (name, g) in fixtures::all() {
        if name == name_or_path {
            return Ok((name.to_string(), g));
        }
    }
    let path = PathBuf::from(name_or_path);
    let g = load_gsem(&path)?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| name_or_path.to_string());
    Ok((id, g))
}

fn build_operator(g: &GammaSemigroup, kind: KindArg) -> Result<OperatorSemigroup> {
    Ok(match kind {
        KindArg::Left => build_left_operator(g)?,
        KindArg::Right => build_right_operator(g)?,
    })
}

fn render_operator(os: &OperatorSemigroup) -> String {
    let g = os.source();
    let mut out = format!("kind: {}\nclasses: {}\n", os.kind(), os.len());
    for (ci, class) in os.classes().iter().enumerate() {
        let members: Vec<String> = class
            .members
            .iter()
            .map(|&(i, j)| match os.kind() {
                qgamma_core::operators::OperatorKind::Left => {
                    format!("({},{})", g.carrier().name(i), g.gamma().name(j))
                }
                qgamma_core::operators::OperatorKind::Right => {
                    format!("({},{})", g.gamma().name(i), g.carrier().name(j))
                }
            })
            .collect();
        out.push_str(&format!(
            "class {ci} {}: {}\n",
            os.carrier().name(ci),
            members.join(" ")
        ));
    }
    out.push_str("mult:\n");
    for i in 0..os.len() {
        let row: Vec<String> = (0..os.len()).map(|j| os.mult(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    match os.unity() {
        Some(u) => out.push_str(&format!("unity: {}\n", os.carrier().name(u))),
        None => out.push_str("unity: none\n"),
    }
    out
}

/// Runs a command, producing the stdout text and whether a discrepancy
/// was found.
fn run(command: Command) -> Result<(String, bool)> {
    match command {
        Command::Validate { gsem } => {
            let g = load_gsem(&gsem)?;
            Ok((
                format!(
                    "ok: |S|={} |G|={} both-sided={}\n",
                    g.carrier().len(),
                    g.gamma().len(),
                    g.both_sided()
                ),
                false,
            ))
        }
        Command::Regular { gsem } => {
            let g = load_gsem(&gsem)?;
            let text = match is_regular(&g) {
                Regularity::Regular { witnesses } => {
                    let pairs: Vec<String> = witnesses
                        .iter()
                        .enumerate()
                        .map(|(x, &b)| format!("{}:{}", g.carrier().name(x), g.gamma().name(b)))
                        .collect();
                    format!("regular: true\nwitness: {}\n", pairs.join(" "))
                }
                Regularity::NotRegular { failing } => {
                    format!("regular: false\nfailing: {}\n", g.carrier().name(failing))
                }
            };
            Ok((text, false))
        }
        Command::Ideal {
            gsem,
            elements,
            side,
        } => {
            let g = load_gsem(&gsem)?;
            let mut indices = Vec::new();
            for label in &elements {
                match g.carrier().lookup(label) {
                    Some(i) => indices.push(i),
                    None => {
                        return Err(CliError::Usage(format!(
                            "element {label:?} is not in the carrier"
                        )))
                    }
                }
            }
            let subset = CrispSubset::from_indices(g.carrier().clone(), indices);
            let side: Side = side.into();
            let holds = is_ideal(&g, &subset, side)?;
            Ok((format!("ideal({side}): {holds}\n"), false))
        }
        Command::Qideal { gsem, qfz, side } => {
            let g = load_gsem(&gsem)?;
            let mu = parse_qfz(&std::fs::read_to_string(qfz)?, g.carrier())?;
            let side: Side = side.into();
            match is_q_fuzzy_ideal(&g, &mu, side)? {
                FuzzyIdealCheck::Holds => {
                    Ok((format!("q-fuzzy-ideal({side}): true\n"), false))
                }
                FuzzyIdealCheck::Violated(v) => Ok((
                    format!(
                        "q-fuzzy-ideal({side}): false\nwitness: {}\n",
                        v.describe(&g, &mu)
                    ),
                    false,
                )),
            }
        }
        Command::Level { gsem, qfz, t } => {
            let g = load_gsem(&gsem)?;
            let mu = parse_qfz(&std::fs::read_to_string(qfz)?, g.carrier())?;
            let t = Grade::from_str(&t)?;
            Ok((format!("{}\n", mu.level_set(t)), false))
        }
        Command::Image { gsem, qfz } => {
            let g = load_gsem(&gsem)?;
            let mu = parse_qfz(&std::fs::read_to_string(qfz)?, g.carrier())?;
            let grades: Vec<String> = mu.image().iter().map(|g| g.to_string()).collect();
            Ok((format!("{{{}}}\n", grades.join(",")), false))
        }
        Command::Compose { gsem, qfz1, qfz2 } => {
            let g = load_gsem(&gsem)?;
            let m1 = parse_qfz(&std::fs::read_to_string(qfz1)?, g.carrier())?;
            let m2 = parse_qfz(&std::fs::read_to_string(qfz2)?, g.carrier())?;
            let c = compose(&g, &m1, &m2)?;
            Ok((render_qfz(&c), false))
        }
        Command::Operators { gsem, kind } => {
            let g = load_gsem(&gsem)?;
            let os = build_operator(&g, kind)?;
            Ok((render_operator(&os), false))
        }
        Command::Map { gsem, qfz, kind } => {
            let g = load_gsem(&gsem)?;
            let text = std::fs::read_to_string(qfz)?;
            let mapped = match kind {
                MapArg::Star => {
                    let r = build_right_operator(&g)?;
                    let mu = parse_qfz(&text, r.carrier())?;
                    star_fuzzy(&r, &mu)?
                }
                MapArg::StarPrime => {
                    let r = build_right_operator(&g)?;
                    let sigma = parse_qfz(&text, g.carrier())?;
                    star_prime_fuzzy(&r, &sigma)?
                }
                MapArg::Plus => {
                    let l = build_left_operator(&g)?;
                    let delta = parse_qfz(&text, l.carrier())?;
                    plus_fuzzy(&l, &delta)?
                }
                MapArg::PlusPrime => {
                    let l = build_left_operator(&g)?;
                    let eta = parse_qfz(&text, g.carrier())?;
                    plus_prime_fuzzy(&l, &eta)?
                }
            };
            Ok((render_qfz(&mapped), false))
        }
        Command::Verify {
            structure,
            theorem,
            grid,
            q_size,
        } => {
            let opts = VerifyOptions {
                grid_points: grid,
                q_size,
            };
            let targets: Vec<(String, GammaSemigroup)> = match &structure {
                Some(s) => vec![load_structure(s)?],
                None => fixtures::all()
                    .into_iter()
                    .map(|(n, g)| (n.to_string(), g))
                    .collect(),
            };
            let mut reports = Vec::new();
            for (id, g) in &targets {
                if theorem == "all" {
                    let (mut rs, skips) = run_all(g, id, &opts)?;
                    for s in skips {
                        eprintln!("# {s}");
                    }
                    reports.append(&mut rs);
                } else {
                    reports.push(run_verify(g, id, &theorem, &opts)?);
                }
            }
            for r in &reports {
                eprintln!(
                    "# {} on {}: {} cases in {:?}",
                    r.theorem, r.structure, r.tally.cases, r.elapsed
                );
            }
            let found = reports.iter().any(|r| !r.all_agree());
            Ok((render_all(&reports), found))
        }
        Command::Search {
            property,
            max_s,
            max_g,
            grid,
            q_size,
        } => {
            let report = run_search(&property, max_s, max_g, grid, q_size)?;
            eprintln!(
                "# search {} over {}: {} cases in {:?}",
                report.theorem, report.structure, report.tally.cases, report.elapsed
            );
            let found = !report.all_agree();
            Ok((report.render(), found))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, discrepancy)) => {
            print!("{text}");
            if let Some(path) = cli.output {
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if discrepancy {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
