use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pnu::harness::{parse_suites, run_corpus, to_json, Corpus, RunOptions, Summary};
use pnu::nu::{build_nu_with, NuOptions};
use pnu::perm::group_exponent;
use pnu::pgroup::{is_potent, is_powerful, m_of, profile};
use pnu::presentation::{catalog_group, GroupSpec};
use pnu::coset::{regular_group, DEFAULT_MAX_COSETS};
use pnu::{Error, Result};

#[derive(Parser)]
#[command(name = "pnu", version, about = "Exponent bounds for nu(G) and the non-abelian tensor square of small p-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the p-group profile and structural predicates of a group.
    Analyze {
        /// Group spec, e.g. `dihedral:16` or `product:cyclic:4,cyclic:2`.
        spec: GroupSpec,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Build nu(G) and print orders and exponents of its distinguished subgroups.
    Nu {
        spec: GroupSpec,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Run the verification suites over a corpus and write a JSON report.
    Verify {
        /// Corpus file (TOML). The shipped default corpus is used when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Suite name, comma-separated list, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        max_cosets: Option<usize>,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-verdict wall time (makes reports run-dependent).
        #[arg(long)]
        timings: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Analyze { spec, max_cosets } => {
            analyze(&spec, max_cosets)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Nu { spec, max_cosets } => {
            nu(&spec, max_cosets)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            corpus,
            suite,
            seed,
            jobs,
            max_cosets,
            out,
            timings,
        } => {
            let corpus = match corpus {
                Some(path) => Corpus::load(&path)?,
                None => Corpus::default_corpus(),
            };
            let opts = RunOptions {
                seed,
                jobs,
                timings,
                max_cosets,
                suites: (suite != "all").then(|| parse_suites(&suite)).transpose()?,
            };
            let verdicts = run_corpus(&corpus, &opts);
            let json = to_json(&verdicts);
            match out {
                Some(path) => std::fs::write(&path, json).map_err(|e| Error::Io(e.to_string()))?,
                None => print!("{json}"),
            }
            let summary = Summary::of(&verdicts);
            eprintln!("{summary}");
            Ok(if summary.fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn prime_of(spec: &GroupSpec) -> Result<u64> {
    spec.prime()
        .ok_or_else(|| Error::InvalidSpec {
            spec: spec.to_string(),
            reason: "not a p-group family".into(),
        })
}

fn analyze(spec: &GroupSpec, max_cosets: usize) -> Result<()> {
    let g = regular_group(&catalog_group(spec)?, max_cosets)?;
    let p = prime_of(spec)?;
    let prof = profile(&g, p)?;
    println!("group      {spec}");
    println!("order      {}^{} = {}", p, prof.n, prof.order());
    println!("class      {}", prof.class);
    println!("coclass    {}", prof.coclass);
    println!("exponent   {}", prof.exponent);
    println!("gamma_i    {:?}", prof.series_orders);
    if prof.coclass >= 1 {
        println!("m(p, r)    {}", m_of(p, prof.coclass).m);
    }
    println!("powerful   {}", is_powerful(&g, p)?);
    println!("potent     {}", is_potent(&g, p)?);
    println!("max class  {}", prof.coclass == 1 && prof.n >= 2);
    Ok(())
}

fn nu(spec: &GroupSpec, max_cosets: usize) -> Result<()> {
    let nu = build_nu_with(&catalog_group(spec)?, &NuOptions { max_cosets })?;
    println!("group      {spec}");
    let rows = [
        ("G", nu.base()),
        ("nu(G)", nu.nu()),
        ("[G,G^phi]", nu.tensor()),
        ("Delta", nu.delta()),
        ("mu", nu.mu()),
        ("Theta", nu.theta()),
        ("M(G)", nu.schur()),
    ];
    println!("{:<11}{:>10}{:>10}", "", "order", "exponent");
    for (name, h) in rows {
        println!("{name:<11}{:>10}{:>10}", h.order(), group_exponent(h)?);
    }
    Ok(())
}
