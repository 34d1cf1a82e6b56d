//! Command-line driver: parse an ideal file, run an engine (or the
//! Buchberger oracle), print the basis, stats and trace, and optionally
//! verify the result.
//!
//! Exit codes: 0 on success, 1 on a failed verification or basis check,
//! 2 on usage and parse errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use siggb::engine::{self, EngineConfig, InsertPolicy, Mode, ModuleOrderSpec, Variant};
use siggb::oracle;
use siggb::poly::Polynomial;
use siggb::problem::{self, Family, ProblemFile};

#[derive(Parser)]
#[command(name = "siggb", about = "Gröbner bases over prime fields via signature-based engines")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a Gröbner basis of the ideal in a problem file
    Run(RunArgs),
    /// Print a generated benchmark problem file
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        n: usize,
    },
    /// Check that a file of polynomials is a Gröbner basis of a problem's ideal
    Check {
        problem: PathBuf,
        basis: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "gvwhs")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "pot")]
    module_order: ModuleOrderArg,
    /// Insertion policy (f5gen only)
    #[arg(long, value_enum, default_value = "block-end")]
    insert: InsertArg,
    #[arg(long, value_enum, default_value = "fast")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "on")]
    criteria: CriteriaArg,
    /// Print one EVENT line per engine event
    #[arg(long)]
    trace: bool,
    /// Print the run counters as a key=value block
    #[arg(long)]
    stats: bool,
    /// Emit the reduced Gröbner basis
    #[arg(long)]
    reduce: bool,
    /// Re-check the result against the Buchberger oracle
    #[arg(long)]
    verify: bool,
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Gvwhs,
    F5g,
    F5b,
    F5gen,
    Buchberger,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleOrderArg {
    Pot,
    Gw,
}

#[derive(Clone, Copy, ValueEnum)]
enum InsertArg {
    BlockEnd,
    AfterFirstComponent,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum CriteriaArg {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cyclic,
    Katsura,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run(args) => run_cmd(args),
        Cmd::Gen { family, n } => gen_cmd(family, n),
        Cmd::Check { problem, basis } => check_cmd(problem, basis),
    }
}

/// Writes to stdout, exiting quietly when the reader hangs up.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

fn load_problem(path: &PathBuf) -> Result<ProblemFile, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    problem::parse_problem(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn print_basis(pf: &ProblemFile, basis: Vec<Polynomial>) {
    let ring = pf.ring();
    for p in oracle::sort_by_lm(&ring, basis) {
        emit(&format!("{}\n", ring.render(&p, &pf.vars)));
    }
}

fn run_cmd(args: RunArgs) -> ExitCode {
    let pf = match load_problem(&args.file) {
        Ok(pf) => pf,
        Err(code) => return code,
    };
    let ring = pf.ring();

    if matches!(args.algorithm, AlgorithmArg::Buchberger) {
        let gb = oracle::buchberger(&ring, &pf.polys);
        print_basis(&pf, gb);
        return ExitCode::SUCCESS;
    }

    let variant = match args.algorithm {
        AlgorithmArg::Gvwhs => Variant::Gvwhs,
        AlgorithmArg::F5g => Variant::F5g,
        AlgorithmArg::F5b => Variant::F5b,
        AlgorithmArg::F5gen => Variant::F5gen,
        AlgorithmArg::Buchberger => unreachable!(),
    };
    let cfg = EngineConfig {
        variant,
        module_order: match args.module_order {
            ModuleOrderArg::Pot => ModuleOrderSpec::Pot,
            ModuleOrderArg::Gw => ModuleOrderSpec::Gw,
        },
        insert_policy: match args.insert {
            InsertArg::BlockEnd => InsertPolicy::BlockEnd,
            InsertArg::AfterFirstComponent => InsertPolicy::AfterFirstComponent,
        },
        mode: match args.mode {
            ModeArg::Fast => Mode::Fast,
            ModeArg::Verify => Mode::Verify,
        },
        criteria: matches!(args.criteria, CriteriaArg::On),
        trace: args.trace,
        var_names: Some(pf.vars.clone()),
    };

    let result = match engine::run(&ring, &pf.polys, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if result.zero_ideal {
        eprintln!("warning: all input polynomials are zero; the ideal is (0)");
    }
    if result.identity_violations > 0 {
        eprintln!(
            "error: {} verification identity violations",
            result.identity_violations
        );
        return ExitCode::from(1);
    }
    if let Some(trace) = &result.trace {
        emit(trace);
    }
    let basis = if args.reduce {
        ring.interreduce(result.basis.clone())
    } else {
        result.basis.clone()
    };
    print_basis(&pf, basis);
    if args.stats {
        emit(&result.stats.render());
    }
    if args.verify {
        let report = oracle::verify_gb(&ring, &result.basis);
        let expected = oracle::buchberger(&ring, &pf.polys);
        if !report.is_gb {
            eprintln!(
                "verify: FAILED (S-pair {:?} does not reduce to zero)",
                report.failing_spair
            );
            return ExitCode::from(1);
        }
        if report.reduced_basis != expected {
            eprintln!("verify: FAILED (reduced basis differs from the Buchberger oracle)");
            return ExitCode::from(1);
        }
        emit("verify: ok\n");
    }
    ExitCode::SUCCESS
}

fn gen_cmd(family: FamilyArg, n: usize) -> ExitCode {
    let family = match family {
        FamilyArg::Cyclic => Family::Cyclic,
        FamilyArg::Katsura => Family::Katsura,
    };
    match problem::gen_benchmark(family, n) {
        Ok(pf) => {
            emit(&pf.render());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn check_cmd(problem_path: PathBuf, basis_path: PathBuf) -> ExitCode {
    let pf = match load_problem(&problem_path) {
        Ok(pf) => pf,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(&basis_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", basis_path.display());
            return ExitCode::from(2);
        }
    };
    let candidate = match problem::parse_poly_list(&text, &pf) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", basis_path.display());
            return ExitCode::from(2);
        }
    };
    let ring = pf.ring();
    let report = oracle::verify_gb(&ring, &candidate);
    if !report.is_gb {
        eprintln!(
            "check: FAILED (S-pair {:?} does not reduce to zero)",
            report.failing_spair
        );
        return ExitCode::from(1);
    }
    let expected = oracle::buchberger(&ring, &pf.polys);
    if report.reduced_basis != expected {
        eprintln!("check: FAILED (candidate generates a different ideal)");
        return ExitCode::from(1);
    }
    emit("check: ok\n");
    ExitCode::SUCCESS
}
