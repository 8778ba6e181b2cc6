//! Command-line surface for the cluster-algebra frieze engine.
//!
//! Exit codes: 0 ok, 2 malformed input, 3 internal inconsistency,
//! 4 inconclusive (budget exhausted).

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use frieze_core::belt::{knit_with_ctx, ptolemy_seed};
use frieze_core::cartan::CartanMatrix;
use frieze_core::coxeter::{bedard_numbers, coxeter_orbit, f_map};
use frieze_core::error::Error;
use frieze_core::frieze::{
    bfz_reconstruct, enumerate_friezes, frieze_point_check, propagate, BfzReconstruction,
    Propagation, Regime,
};
use frieze_core::matrix::{ExtMatrix, IntMat};
use frieze_core::morph::{
    property_f_check, pullback_frieze, quasi_hom, universal_hom, FVerdict, QuasiHomSpec,
};
use frieze_core::seed::{explore, Seed, SeedJson, DEFAULT_NODE_BUDGET};

#[derive(Parser)]
#[command(name = "friezer", version, about = "Exact cluster-algebra frieze engine")]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply a mutation word to a seed file
    Mutate {
        /// JSON seed file
        #[arg(long)]
        seed: PathBuf,
        /// Comma-separated 1-based directions, e.g. 1,2,1
        #[arg(long, default_value = "")]
        word: String,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Breadth-first closure of mutations from a seed
    Explore {
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long)]
        r#type: Option<String>,
        #[arg(long, value_enum, default_value_t = Coeffs::Trivial)]
        coeffs: Coeffs,
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Belt subcommands
    #[command(subcommand)]
    Belt(BeltCmd),
    /// Frieze subcommands
    #[command(subcommand)]
    Frieze(FriezeCmd),
    /// Coxeter subcommands
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Morphism subcommands
    #[command(subcommand)]
    Morph(MorphCmd),
}

#[derive(Subcommand)]
enum BeltCmd {
    /// Knit the acyclic belt over a window and dump u(i, m)
    Dump {
        #[command(flatten)]
        pattern: PatternArgs,
        /// Window as lo:hi (must contain 0)
        #[arg(long, default_value = "0:5")]
        window: String,
        /// Dump coefficient columns p(i, m) instead of variables
        #[arg(long, default_value_t = false)]
        columns: bool,
    },
}

#[derive(Subcommand)]
enum FriezeCmd {
    /// Exhaustively enumerate friezes of a finite type up to a bound
    Enumerate {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, default_value_t = 8)]
        bound: u64,
        /// Frozen values, comma separated (all 1 when omitted)
        #[arg(long, default_value = "")]
        frozen: String,
    },
    /// Propagate one initial column and report the pattern or rejection
    Check {
        #[command(flatten)]
        pattern: PatternArgs,
        /// Initial column f(., 0), comma separated
        #[arg(long)]
        init: String,
        #[arg(long, default_value = "")]
        frozen: String,
        #[arg(long, default_value = "0:8")]
        window: String,
    },
    /// Check a candidate frieze point in a coefficient regime
    CheckPoint {
        #[arg(long)]
        r#type: String,
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long)]
        point: String,
    },
    /// Reconstruct z_{r+1}..z_{2r} from (z, p) in the BFZ regime
    ReconstructBfz {
        #[arg(long)]
        r#type: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        p: String,
    },
}

#[derive(Subcommand)]
enum CoxeterCmd {
    /// Orbit data: i*, h(i;c), Bedard numbers, and the gliding map F
    Report {
        #[arg(long)]
        r#type: String,
    },
}

#[derive(Subcommand)]
enum MorphCmd {
    /// Certify Property F for a quasi-homomorphism spec file
    #[command(name = "check-F", alias = "check-f")]
    CheckF {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Universal coefficients: P^univ rows and the solved E for a target P
    Universal {
        #[arg(long)]
        r#type: String,
        #[arg(long, value_enum, default_value_t = Coeffs::Bfz)]
        coeffs: Coeffs,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Pull a target frieze back along a quasi-homomorphism spec
    Pullback {
        #[arg(long)]
        spec: PathBuf,
        /// Values of the target frieze on its initial extended cluster
        #[arg(long)]
        frieze: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegimeArg {
    Bfz,
    Principal,
    TrivialV,
    TrivialW,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coeffs {
    Trivial,
    Principal,
    Bfz,
    Ptolemy,
}

/// Exactly one input source: a named type (with a coefficient regime) or an
/// explicit seed file.
#[derive(Args)]
struct PatternArgs {
    #[arg(long)]
    r#type: Option<String>,
    #[arg(long, value_enum, default_value_t = Coeffs::Trivial)]
    coeffs: Coeffs,
    #[arg(long)]
    seed: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct MorphSpecJson {
    source: SeedJson,
    target: SeedJson,
    #[serde(default)]
    t0_word: Vec<usize>,
    #[serde(default)]
    tbar0_word: Vec<usize>,
    #[serde(rename = "R")]
    r_mat: Vec<Vec<i64>>,
    #[serde(rename = "E")]
    e_mat: Vec<Vec<i64>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconclusive | Error::BudgetExceeded(_) => 4,
        Error::InexactDivision
        | Error::DivisionByZero
        | Error::Internal(_)
        | Error::NotHomogeneous
        | Error::NoSolution => 3,
        _ => 2,
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Input(format!("io: {e}"))
}

fn parse_csv_ints(s: &str) -> Result<Vec<BigInt>, Error> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Input(format!("bad integer {t:?}")))
        })
        .collect()
}

fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad direction {t:?}")))
        })
        .collect()
}

fn parse_window(s: &str) -> Result<(i64, i64), Error> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::Input("window must be lo:hi".into()))?;
    let lo = lo.trim().parse().map_err(|_| Error::Input("bad window".into()))?;
    let hi = hi.trim().parse().map_err(|_| Error::Input("bad window".into()))?;
    Ok((lo, hi))
}

/// The Cartan data, coefficient block, and root seed of a named pattern.
fn named_pattern(t: &str, coeffs: Coeffs) -> Result<(CartanMatrix, IntMat, Seed), Error> {
    let a = CartanMatrix::of_type(t)?;
    let r = a.rank();
    let p = match coeffs {
        Coeffs::Trivial => IntMat::zeros(0, r),
        Coeffs::Principal => IntMat::identity(r),
        Coeffs::Bfz => a.build_ua(),
        Coeffs::Ptolemy => {
            let (b, p) = ptolemy_seed(r)?;
            if b != a.build_ba() {
                return Err(Error::Input(format!(
                    "Ptolemy coefficients require type A_r, got {t}"
                )));
            }
            p
        }
    };
    let ext = ExtMatrix::new(IntMat::stack(&a.build_ba(), &p)?, r)?;
    let seed = Seed::with_default_names(ext)?;
    Ok((a, p, seed))
}

fn load_seed(path: &PathBuf) -> Result<Seed, Error> {
    let text = std::fs::read_to_string(path).map_err(io_err)?;
    let json: SeedJson =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad seed: {e}")))?;
    Seed::from_json(&json)
}

fn pattern_from_args(args: &PatternArgs) -> Result<(CartanMatrix, IntMat, Seed), Error> {
    match (&args.r#type, &args.seed) {
        (Some(t), None) => named_pattern(t, args.coeffs),
        (None, Some(path)) => {
            let seed = load_seed(path)?;
            let b = seed.matrix().principal();
            let r = b.nrows();
            let mut rows = vec![vec![0i64; r]; r];
            for (i, row) in rows.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = if i == j { 2 } else { -b[(i, j)].abs() };
                }
            }
            let a = CartanMatrix::from_rows(&rows)
                .map_err(|_| Error::Input("seed matrix is not Cartan-shaped".into()))?;
            if a.build_ba() != b {
                return Err(Error::Input(
                    "belt/frieze commands need an acyclic seed with B = B_A".into(),
                ));
            }
            Ok((a, seed.matrix().coefficient_part(), seed))
        }
        _ => Err(Error::Input(
            "exactly one of --type and --seed must be given".into(),
        )),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Mutate { seed, word, out } => {
            let s = load_seed(&seed)?;
            let word = parse_word(&word)?;
            let t = s.apply_word(&word)?;
            let out_json = serde_json::to_string_pretty(&t.to_json()).expect("serializable");
            match out {
                Some(path) => std::fs::write(path, out_json).map_err(io_err)?,
                None => println!("{out_json}"),
            }
            Ok(())
        }
        Cmd::Explore {
            seed,
            r#type,
            coeffs,
            depth,
            budget,
        } => {
            let root = match (seed, r#type) {
                (Some(path), None) => load_seed(&path)?,
                (None, Some(t)) => named_pattern(&t, coeffs)?.2,
                _ => {
                    return Err(Error::Input(
                        "exactly one of --type and --seed must be given".into(),
                    ))
                }
            };
            let ex = explore(&root, depth, budget)?;
            #[derive(Serialize)]
            struct Report {
                distinct_cluster_variables: usize,
                seeds: usize,
                closed: bool,
                depth_reached: usize,
                variables: Vec<String>,
            }
            let rep = Report {
                distinct_cluster_variables: ex.variables.len(),
                seeds: ex.seeds,
                closed: ex.closed,
                depth_reached: ex.depth_reached,
                variables: ex.variables.iter().map(|v| v.to_string()).collect(),
            };
            match cli.format {
                Format::Json => print_json(&rep),
                _ => {
                    println!("variables\t{}", rep.distinct_cluster_variables);
                    println!("seeds\t{}", rep.seeds);
                    println!("closed\t{}", rep.closed);
                    for v in &rep.variables {
                        println!("{v}");
                    }
                }
            }
            Ok(())
        }
        Cmd::Belt(BeltCmd::Dump {
            pattern,
            window,
            columns,
        }) => {
            let (a, p, seed) = pattern_from_args(&pattern)?;
            let (lo, hi) = parse_window(&window)?;
            let belt = knit_with_ctx(&a, &p, lo, hi, seed.ctx().clone())?;
            let r = a.rank();
            let cell = |i: usize, m: i64| -> Result<String, Error> {
                Ok(if columns {
                    format!("{:?}", belt.p(i, m)?)
                } else {
                    belt.u(i, m)?.to_string()
                })
            };
            match cli.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Cell {
                        i: usize,
                        m: i64,
                        u: String,
                        p: Vec<i64>,
                    }
                    let mut cells = Vec::new();
                    for i in 1..=r {
                        for m in lo..=hi {
                            cells.push(Cell {
                                i,
                                m,
                                u: belt.u(i, m)?.to_string(),
                                p: belt.p(i, m)?.to_vec(),
                            });
                        }
                    }
                    print_json(&cells);
                }
                Format::Tsv => {
                    let mut header = vec!["i\\m".to_string()];
                    for m in lo..=hi {
                        header.push(m.to_string());
                    }
                    println!("{}", header.join("\t"));
                    for i in 1..=r {
                        let mut row = vec![i.to_string()];
                        for m in lo..=hi {
                            row.push(cell(i, m)?);
                        }
                        println!("{}", row.join("\t"));
                    }
                }
                Format::Ascii => {
                    let mut entries = Vec::new();
                    for i in 1..=r {
                        for m in lo..=hi {
                            entries.push((i, m, cell(i, m)?));
                        }
                    }
                    print!("{}", render::staggered(&entries, lo));
                }
            }
            Ok(())
        }
        Cmd::Frieze(cmd) => run_frieze(cmd, cli.format),
        Cmd::Coxeter(CoxeterCmd::Report { r#type }) => {
            let a = CartanMatrix::of_type(&r#type)?;
            let cd = coxeter_orbit(&a)?;
            let bed = bedard_numbers(&a).ok();
            #[derive(Serialize)]
            struct Row {
                i: usize,
                istar: usize,
                h_i: i64,
                bedard_m_i: Option<i64>,
                f_map: String,
            }
            #[derive(Serialize)]
            struct Report {
                r#type: String,
                coxeter_number: i64,
                rows: Vec<Row>,
            }
            let rows: Vec<Row> = (1..=a.rank())
                .map(|i| {
                    let (istar, shift) = f_map(&cd, i, 0).expect("indecomposable");
                    Row {
                        i,
                        istar: cd.istar(i),
                        h_i: cd.h_of(i),
                        bedard_m_i: bed.as_ref().map(|b| b[i - 1]),
                        f_map: format!("F({i}, m) = ({istar}, m + {shift})"),
                    }
                })
                .collect();
            let rep = Report {
                r#type: r#type.clone(),
                coxeter_number: cd.coxeter_number(),
                rows,
            };
            match cli.format {
                Format::Json => print_json(&rep),
                _ => {
                    println!("type\t{}\th\t{}", rep.r#type, rep.coxeter_number);
                    println!("i\ti*\th(i;c)\tm_i\tF");
                    for row in &rep.rows {
                        println!(
                            "{}\t{}\t{}\t{}\t{}",
                            row.i,
                            row.istar,
                            row.h_i,
                            row.bedard_m_i.map(|m| m.to_string()).unwrap_or_default(),
                            row.f_map
                        );
                    }
                }
            }
            Ok(())
        }
        Cmd::Morph(cmd) => run_morph(cmd, cli.format),
    }
}

fn run_frieze(cmd: FriezeCmd, format: Format) -> Result<(), Error> {
    match cmd {
        FriezeCmd::Enumerate {
            pattern,
            bound,
            frozen,
        } => {
            let (a, p, _) = pattern_from_args(&pattern)?;
            let mut fp = parse_csv_ints(&frozen)?;
            if fp.is_empty() {
                fp = vec![BigInt::from(1); p.nrows()];
            }
            let out = enumerate_friezes(&a, &p, &fp, bound)?;
            #[derive(Serialize)]
            struct Report {
                count: usize,
                bound: u64,
                max_entry: String,
                friezes: Vec<Vec<String>>,
            }
            let rep = Report {
                count: out.friezes.len(),
                bound: out.bound,
                max_entry: out.max_entry.to_string(),
                friezes: out
                    .friezes
                    .iter()
                    .map(|f| f.values.iter().map(|v| v.to_string()).collect())
                    .collect(),
            };
            match format {
                Format::Json => print_json(&rep),
                _ => {
                    println!(
                        "count\t{}\tbound\t{}\tmax_entry\t{}",
                        rep.count, rep.bound, rep.max_entry
                    );
                    for f in &rep.friezes {
                        println!("{}", f.join("\t"));
                    }
                }
            }
            Ok(())
        }
        FriezeCmd::Check {
            pattern,
            init,
            frozen,
            window,
        } => {
            let (a, p, _) = pattern_from_args(&pattern)?;
            let init = parse_csv_ints(&init)?;
            let mut fp = parse_csv_ints(&frozen)?;
            if fp.is_empty() {
                fp = vec![BigInt::from(1); p.nrows()];
            }
            let (lo, hi) = parse_window(&window)?;
            match propagate(&a, &p, &init, &fp, lo, hi)? {
                Propagation::Pattern(pat) => {
                    #[derive(Serialize)]
                    struct Report {
                        verdict: bool,
                        values: Vec<Vec<String>>,
                    }
                    let values: Vec<Vec<String>> = (1..=a.rank())
                        .map(|i| (lo..=hi).map(|m| pat.f[&(i, m)].to_string()).collect())
                        .collect();
                    match format {
                        Format::Json => print_json(&Report {
                            verdict: true,
                            values,
                        }),
                        Format::Tsv => {
                            println!("verdict\ttrue");
                            for (i, row) in values.iter().enumerate() {
                                println!("{}\t{}", i + 1, row.join("\t"));
                            }
                        }
                        Format::Ascii => {
                            let mut entries = Vec::new();
                            for i in 1..=a.rank() {
                                for m in lo..=hi {
                                    entries.push((i, m, pat.f[&(i, m)].to_string()));
                                }
                            }
                            print!("{}", render::staggered(&entries, lo));
                        }
                    }
                }
                Propagation::Rejected { at } => {
                    #[derive(Serialize)]
                    struct Report {
                        verdict: bool,
                        rejected_at: (usize, i64),
                    }
                    match format {
                        Format::Json => print_json(&Report {
                            verdict: false,
                            rejected_at: at,
                        }),
                        _ => println!("verdict\tfalse\trejected_at\t({}, {})", at.0, at.1),
                    }
                }
            }
            Ok(())
        }
        FriezeCmd::CheckPoint {
            r#type,
            regime,
            point,
        } => {
            let a = CartanMatrix::of_type(&r#type)?;
            let point = parse_csv_ints(&point)?;
            let regime = match regime {
                RegimeArg::Bfz => Regime::Bfz,
                RegimeArg::Principal => Regime::Principal,
                RegimeArg::TrivialV => Regime::TrivialV,
                RegimeArg::TrivialW => Regime::TrivialW,
            };
            let rep = frieze_point_check(regime, &a, &point)?;
            match format {
                Format::Json => print_json(&rep),
                _ => {
                    println!("verdict\t{}", rep.verdict);
                    for w in &rep.witnesses {
                        println!("witness\t{w}");
                    }
                }
            }
            Ok(())
        }
        FriezeCmd::ReconstructBfz { r#type, z, p } => {
            let a = CartanMatrix::of_type(&r#type)?;
            let z = parse_csv_ints(&z)?;
            let p = parse_csv_ints(&p)?;
            #[derive(Serialize)]
            struct Report {
                verdict: bool,
                z_full: Option<Vec<String>>,
                rejected_index: Option<usize>,
            }
            let rep = match bfz_reconstruct(&a, &z, &p)? {
                BfzReconstruction::Accepted(full) => Report {
                    verdict: true,
                    z_full: Some(full.iter().map(|v| v.to_string()).collect()),
                    rejected_index: None,
                },
                BfzReconstruction::Rejected { index } => Report {
                    verdict: false,
                    z_full: None,
                    rejected_index: Some(index),
                },
            };
            match format {
                Format::Json => print_json(&rep),
                _ => println!(
                    "verdict\t{}\t{}",
                    rep.verdict,
                    rep.z_full
                        .map(|v| v.join(","))
                        .unwrap_or_else(|| format!("rejected_at {}", rep.rejected_index.unwrap()))
                ),
            }
            Ok(())
        }
    }
}

fn run_morph(cmd: MorphCmd, format: Format) -> Result<(), Error> {
    match cmd {
        MorphCmd::CheckF { spec, budget } => {
            let hom = load_hom(&spec)?;
            let verdict = property_f_check(&hom, budget)?;
            #[derive(Serialize)]
            struct Report {
                property_f: bool,
                /// definitive for finite type; bounded evidence otherwise
                definitive: bool,
                checked: usize,
                witness: Option<String>,
            }
            let rep = match verdict {
                FVerdict::Holds { exhaustive, checked } => Report {
                    property_f: true,
                    definitive: exhaustive,
                    checked,
                    witness: None,
                },
                FVerdict::Fails { witness } => Report {
                    property_f: false,
                    definitive: true,
                    checked: 0,
                    witness: Some(witness.to_string()),
                },
            };
            match format {
                Format::Json => print_json(&rep),
                _ => println!(
                    "property_f\t{}\tdefinitive\t{}",
                    rep.property_f, rep.definitive
                ),
            }
            Ok(())
        }
        MorphCmd::Universal {
            r#type,
            coeffs,
            budget,
        } => {
            let (a, p, _) = named_pattern(&r#type, coeffs)?;
            let (data, _hom) = universal_hom(&a.build_ba(), &p, budget)?;
            #[derive(Serialize)]
            struct Report {
                puniv_rows: Vec<Vec<i64>>,
                variables: Vec<String>,
                e: Vec<Vec<i64>>,
            }
            let rep = Report {
                puniv_rows: data.puniv.rows_vec(),
                variables: data.variables.iter().map(|v| v.to_string()).collect(),
                e: data.e.rows_vec(),
            };
            match format {
                Format::Json => print_json(&rep),
                _ => {
                    println!("puniv");
                    for row in &rep.puniv_rows {
                        println!("{row:?}");
                    }
                    println!("E");
                    for row in &rep.e {
                        println!("{row:?}");
                    }
                }
            }
            Ok(())
        }
        MorphCmd::Pullback {
            spec,
            frieze,
            budget,
        } => {
            let hom = load_hom(&spec)?;
            let values = parse_csv_ints(&frieze)?;
            let h = frieze_core::frieze::Frieze::new(values, hom.target().rank())?;
            let back = pullback_frieze(&hom, &h, budget)?;
            #[derive(Serialize)]
            struct Report {
                values: Vec<String>,
            }
            let rep = Report {
                values: back.values.iter().map(|v| v.to_string()).collect(),
            };
            match format {
                Format::Json => print_json(&rep),
                _ => println!("{}", rep.values.join(",")),
            }
            Ok(())
        }
    }
}

fn load_hom(path: &PathBuf) -> Result<frieze_core::morph::Hom, Error> {
    let text = std::fs::read_to_string(path).map_err(io_err)?;
    let json: MorphSpecJson =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad morph spec: {e}")))?;
    let spec = QuasiHomSpec {
        source_root: Seed::from_json(&json.source)?,
        target_root: Seed::from_json(&json.target)?,
        t0_word: json.t0_word,
        tbar0_word: json.tbar0_word,
        r_mat: IntMat::from_rows(&json.r_mat)?,
        e_mat: IntMat::from_rows(&json.e_mat)?,
    };
    quasi_hom(&spec)
}
