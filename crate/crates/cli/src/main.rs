use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use knotcert::braid::BraidWord;
use knotcert::floer::{self, Complex, Rational64};
use knotcert::irred::{decide_irreducible_logged, IrredConfig, IrredVerdict};
use knotcert::par::Exec;
use knotcert::pipeline::{certify_with, scan_family, KnotDescriptor, Verdict};
use knotcert::symmetry::{detect_rotational_antisymmetry, parse_facts};
use knotcert::{IntPoly, LaurentPoly};

const INCONCLUSIVE: u8 = 2;
const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "knotcert",
    version,
    about = "Certify Miyazaki knots and compute knot Floer concordance invariants"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Alexander polynomial of a braid closure, e.g. `alex "3: 1 -2 1 -2"`.
    Alex { braid: String },
    /// Braid diagnostics.
    Braid {
        #[command(subcommand)]
        cmd: BraidCmd,
    },
    /// Decide irreducibility over Q. Exit 0 irreducible, 1 reducible, 2 unknown.
    Irred {
        poly: String,
        /// Print the evidence log.
        #[arg(long)]
        explain: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Symmetry derivations.
    Sym {
        #[command(subcommand)]
        cmd: SymCmd,
    },
    /// Invariants of a CFK^∞ model complex given as JSON.
    Floer {
        file: PathBuf,
        /// Report V_0..V_N.
        #[arg(long, default_value_t = 3)]
        vk: u32,
        /// Sample Υ at t (a fraction in [0, 2]); repeatable.
        #[arg(long, value_name = "a/b")]
        upsilon: Vec<String>,
    },
    /// Certify a knot descriptor (JSON). Prints the certificate as JSON.
    Certify {
        file: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Scan the family P_n(4_1) for n = 1..=max.
    Scan {
        #[arg(long, default_value_t = 99)]
        max: i64,
        /// Worker threads; 1 runs sequentially, 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the table as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Permutation cycles, homogeneity, Euler characteristic, genus, Δ.
    Info { braid: String },
}

#[derive(Subcommand)]
enum SymCmd {
    /// Saturate a facts file and print every derived fact with its origin.
    Derive { file: PathBuf },
}

#[derive(Args)]
struct Bounds {
    #[arg(long)]
    shift_bound: Option<i64>,
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long)]
    sieve_primes: Option<usize>,
    #[arg(long)]
    subset_cap: Option<usize>,
}

impl Bounds {
    fn config(&self) -> IrredConfig {
        let d = IrredConfig::default();
        IrredConfig {
            shift_bound: self.shift_bound.unwrap_or(d.shift_bound),
            prime_bound: self.prime_bound.unwrap_or(d.prime_bound),
            sieve_min_primes: self.sieve_primes.unwrap_or(d.sieve_min_primes),
            subset_cap: self.subset_cap.unwrap_or(d.subset_cap),
            ..d
        }
    }
}

type Outcome = Result<u8, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn braid(text: &str) -> Result<BraidWord, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn alex(text: &str) -> Outcome {
    let delta = braid(text)?
        .alexander_of_closure()
        .map_err(|e| e.to_string())?;
    println!("{delta}");
    Ok(0)
}

fn braid_info(text: &str) -> Outcome {
    let b = braid(text)?;
    println!("braid: {b}");
    println!("strands: {}", b.strands());
    println!("length: {}", b.len());
    let cycles: Vec<String> = b
        .closure_cycles()
        .iter()
        .map(|c| {
            format!(
                "({})",
                c.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect();
    println!("cycles: {}", cycles.join(""));
    println!("components: {}", cycles.len());
    println!("homogeneous: {}", b.is_homogeneous());
    if !b.closure_is_knot() {
        return Ok(0);
    }
    let s = b.bennequin_euler().map_err(|e| e.to_string())?;
    println!("euler: {}", s.euler);
    match s.genus {
        Some(g) => println!("genus: {g}"),
        None => println!("genus: -"),
    }
    println!(
        "alexander: {}",
        b.alexander_of_closure().map_err(|e| e.to_string())?
    );
    let sym =
        detect_rotational_antisymmetry(&b, "P").map_or("-".to_string(), |f| f.data.to_string());
    println!("antisymmetry: {sym}");
    Ok(0)
}

fn irred(text: &str, explain: bool, cfg: &IrredConfig) -> Outcome {
    let p: LaurentPoly = text.parse().map_err(|e| format!("{e}"))?;
    let lo = p.min_exp().ok_or("the zero polynomial")?;
    let f = IntPoly::try_from(&p.shift(-lo)).map_err(|e| e.to_string())?;
    let d = decide_irreducible_logged(&f, cfg).map_err(|e| e.to_string())?;
    let code = match &d.verdict {
        IrredVerdict::Irreducible { certificate } => {
            println!("irreducible: {certificate}");
            0
        }
        IrredVerdict::Reducible { factor } => {
            println!("reducible: factor {factor}");
            1
        }
        IrredVerdict::Unknown { .. } => {
            println!("unknown");
            INCONCLUSIVE
        }
    };
    if explain {
        for line in &d.log {
            println!("  {line}");
        }
    }
    Ok(code)
}

fn sym_derive(path: &Path) -> Outcome {
    let fb = parse_facts(&read(path)?).map_err(|e| e.to_string())?;
    print!("{}", fb.saturate().report());
    Ok(0)
}

fn parse_t(s: &str) -> Result<Rational64, String> {
    s.parse()
        .map_err(|_| format!("expected a fraction a/b, got {s:?}"))
}

fn floer_cmd(path: &Path, vk: u32, upsilon: &[String]) -> Outcome {
    let c = Complex::from_json(&read(path)?).map_err(|e| e.to_string())?;
    let ts = if upsilon.is_empty() {
        vec![Rational64::new(1, 2), Rational64::new(1, 1)]
    } else {
        upsilon
            .iter()
            .map(|s| parse_t(s))
            .collect::<Result<_, _>>()?
    };
    let r = floer::report(&c, vk, &ts).map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&r).expect("report serializes")
    );
    Ok(0)
}

fn certify(path: &Path, cfg: &IrredConfig) -> Outcome {
    let d = KnotDescriptor::from_json(&read(path)?).map_err(|e| e.to_string())?;
    let c = certify_with(&d, cfg).map_err(|e| e.to_string())?;
    println!("{}", c.to_json());
    eprintln!("{}: {}", c.knot, c.verdict);
    Ok(match c.verdict {
        Verdict::Inconclusive(_) => INCONCLUSIVE,
        _ => 0,
    })
}

fn scan(max: i64, jobs: usize, out: Option<&Path>) -> Outcome {
    let exec = match jobs {
        0 => Exec::Parallel,
        1 => Exec::Sequential,
        n => Exec::Jobs(n),
    };
    let rows = scan_family(max, exec).map_err(|e| e.to_string())?;
    println!(
        "{:>3}  {:>4}  {:<14}  {:<26}  {:<8}  {:>7}",
        "n", "w", "tier", "certificate", "symmetry", "ms"
    );
    for r in &rows {
        println!(
            "{:>3}  {:>4}  {:<14}  {:<26}  {:<8}  {:>7}",
            r.n, r.winding, r.tier, r.certificate, r.symmetry, r.millis
        );
    }
    let unknown = rows.iter().filter(|r| !r.is_irreducible()).count();
    println!(
        "{} rows, {} irreducible, {} not certified",
        rows.len(),
        rows.len() - unknown,
        unknown
    );
    if let Some(path) = out {
        let mut w = csv::Writer::from_path(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for r in &rows {
            w.serialize(r).map_err(|e| e.to_string())?;
        }
        w.flush().map_err(|e| e.to_string())?;
    }
    Ok(if unknown == 0 { 0 } else { INCONCLUSIVE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Alex { braid } => alex(braid),
        Cmd::Braid {
            cmd: BraidCmd::Info { braid },
        } => braid_info(braid),
        Cmd::Irred {
            poly,
            explain,
            bounds,
        } => irred(poly, *explain, &bounds.config()),
        Cmd::Sym {
            cmd: SymCmd::Derive { file },
        } => sym_derive(file),
        Cmd::Floer { file, vk, upsilon } => floer_cmd(file, *vk, upsilon),
        Cmd::Certify { file, bounds } => certify(file, &bounds.config()),
        Cmd::Scan { max, jobs, out } => scan(*max, *jobs, out.as_deref()),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
