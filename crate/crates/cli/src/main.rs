//! `powerlap`: Laplacian spectra of power graphs of finite abelian groups.
//!
//! Exit codes: 0 success, 1 a verification or count check failed, 2 usage or
//! parse error (including "no spectrum route applies").

mod commands;
mod params;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, TableSpec, Target, VerifySet};
use params::{parse_pmn, parse_rs};
use powerlap::oracle::DEFAULT_ORACLE_CAP;
use powerlap::verify::DEFAULT_ENUM_CAP;
use powerlap::Caps;
use render::Format;

#[derive(Parser)]
#[command(
    name = "powerlap",
    version,
    about = "Exact Laplacian spectra of power graphs of finite abelian groups"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Largest matrix handed to the exact characteristic polynomial.
    #[arg(long, global = true, env = "ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Largest group that may be enumerated or realized as a graph.
    #[arg(long, global = true, env = "ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct GroupTarget {
    /// Group descriptor such as "Z2^3 x Z4^2".
    #[arg(long)]
    group: Option<String>,
    /// Z_{p^m}^n as p,m,n.
    #[arg(long, value_parser = parse_pmn, value_name = "P,M,N")]
    pmn: Option<(u64, u32, u32)>,
    /// Z_2^r x Z_4^s as r,s.
    #[arg(long, value_parser = parse_rs, value_name = "R,S")]
    rs: Option<(u32, u32)>,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct FamilyTarget {
    #[arg(long, value_parser = parse_pmn, value_name = "P,M,N")]
    pmn: Option<(u64, u32, u32)>,
    #[arg(long, value_parser = parse_rs, value_name = "R,S")]
    rs: Option<(u32, u32)>,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct VerifyTarget {
    #[arg(long)]
    group: Option<String>,
    #[arg(long, value_parser = parse_pmn, value_name = "P,M,N")]
    pmn: Option<(u64, u32, u32)>,
    #[arg(long, value_parser = parse_rs, value_name = "R,S")]
    rs: Option<(u32, u32)>,
    /// Grid such as "p<=5,m<=3,n<=3,ordercap=300".
    #[arg(long, value_name = "GRID")]
    all_pmn: Option<String>,
    /// Grid such as "r<=4,s<=3,ordercap=300".
    #[arg(long, value_name = "GRID")]
    all_rs: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian spectrum of one group: closed form if in a family, else the oracle.
    Spectrum(GroupTarget),
    /// Join/union decomposition of the power graph.
    Structure(FamilyTarget),
    /// Cross-check every applicable spectrum route.
    Verify {
        #[command(flatten)]
        target: VerifyTarget,
        /// Record per-group wall-clock time.
        #[arg(long)]
        timing: bool,
    },
    /// Structural flags of the power graph.
    Classify(GroupTarget),
    /// Element order and degree class counts of Z_2^r x Z_4^s.
    Counts {
        #[arg(long, value_parser = parse_rs, value_name = "R,S")]
        rs: (u32, u32),
    },
    /// Closed-form spectra over parameter lists or grids, without building graphs.
    Table {
        #[arg(long, value_parser = parse_pmn, value_name = "P,M,N")]
        pmn: Vec<(u64, u32, u32)>,
        /// Grid such as "p=2..3,m=1..2,n=1..2"; p is restricted to primes.
        #[arg(long, value_name = "GRID")]
        pmn_grid: Option<String>,
        #[arg(long, value_parser = parse_rs, value_name = "R,S")]
        rs: Vec<(u32, u32)>,
        /// Grid such as "r=0..2,s=1..2".
        #[arg(long, value_name = "GRID")]
        rs_grid: Option<String>,
    },
}

impl From<GroupTarget> for Target {
    fn from(t: GroupTarget) -> Target {
        match (t.group, t.pmn, t.rs) {
            (Some(g), _, _) => Target::Group(g),
            (_, Some((p, m, n)), _) => Target::Pmn(p, m, n),
            (_, _, Some((r, s))) => Target::Rs(r, s),
            _ => unreachable!("clap requires one target"),
        }
    }
}

impl From<FamilyTarget> for Target {
    fn from(t: FamilyTarget) -> Target {
        match (t.pmn, t.rs) {
            (Some((p, m, n)), _) => Target::Pmn(p, m, n),
            (_, Some((r, s))) => Target::Rs(r, s),
            _ => unreachable!("clap requires one target"),
        }
    }
}

impl From<VerifyTarget> for VerifySet {
    fn from(t: VerifyTarget) -> VerifySet {
        match t {
            VerifyTarget { all_pmn: Some(g), .. } => VerifySet::AllPmn(g),
            VerifyTarget { all_rs: Some(g), .. } => VerifySet::AllRs(g),
            VerifyTarget { group, pmn, rs, .. } => VerifySet::One(GroupTarget { group, pmn, rs }.into()),
        }
    }
}

fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        enumeration: cli.enum_cap,
        oracle: cli.oracle_cap,
    };
    let result = match cli.command {
        Command::Spectrum(t) => commands::spectrum(&t.into(), caps),
        Command::Structure(t) => commands::structure(&t.into()),
        Command::Verify { target, timing } => commands::verify(&target.into(), caps, timing),
        Command::Classify(t) => commands::classify(&t.into(), caps),
        Command::Counts { rs: (r, s) } => commands::counts(r, s, caps),
        Command::Table {
            pmn,
            pmn_grid,
            rs,
            rs_grid,
        } => commands::table(&TableSpec {
            pmn,
            pmn_grid,
            rs,
            rs_grid,
        }),
    };
    match result {
        Ok(out) => {
            emit(&out.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            emit(&out.render(cli.format));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
