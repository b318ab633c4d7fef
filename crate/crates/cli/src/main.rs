use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use asr_core::basis_sets::{self, enumerate_capped, Filter, IntervalSet, DEFAULT_CEILING};
use asr_core::exceptional::{self, check_record, check_unique_max, e8_lists, family};
use asr_core::intervals::Interval;
use asr_core::suites::{run_all, Suite};
use asr_core::symplectic::{epsilon, epsilon_rows, f_map, UnorderedSymbol};
use asr_core::table::{render, table};
use asr_core::tableaux::{self, catalan, dot, pairs_to_symbol, shift, tableau_to_pairs};
use asr_core::Error;

#[derive(Parser)]
#[command(
    name = "asr",
    version,
    about = "Interval basis sets, shifted tableaux and two-row symbols"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    Half,
    Reduced,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::Half => Filter::Half,
            FilterArg::Reduced => Filter::Reduced,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Counts,
    Roundtrip,
    Epsilon,
    Lattice,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Counts => vec![Suite::Counts],
            SuiteArg::Roundtrip => vec![Suite::Roundtrip],
            SuiteArg::Epsilon => vec![Suite::Epsilon],
            SuiteArg::Lattice => vec![Suite::Lattice],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List basis sets for one D.
    Enumerate {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the half-set / reduced-set / symbol table.
    Table {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one basis set through every stage down to its symbol.
    Symbol {
        #[arg(long)]
        d: u32,
        /// A JSON array of intervals such as [[3,3],[2,4]], or a full
        /// {"D": .., "intervals": ..} object.
        #[arg(long)]
        set: String,
    },
    /// Run the property suites for D = 0, 2, ..., d-max.
    Verify {
        #[arg(long)]
        d_max: u32,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Show the tabulated data for an exceptional family.
    Exceptional {
        #[arg(long, required_unless_present = "dump_data")]
        size: Option<u32>,
        #[arg(long)]
        check: bool,
        /// Print the embedded data document instead.
        #[arg(long)]
        dump_data: bool,
    },
    /// Compare the half, reduced and symbol counts against Catalan numbers.
    Catalan {
        #[arg(long)]
        d_max: u32,
    },
    /// Print the embedded exceptional data document.
    DumpData,
}

/// Failure of a check, as opposed to bad input.
#[derive(Debug)]
struct VerificationFailed(String);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn ceiling() -> anyhow::Result<u32> {
    match std::env::var("ASR_D_CEILING") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("ASR_D_CEILING={v:?} is not an integer")),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

fn parse_set(d: u32, text: &str) -> anyhow::Result<IntervalSet> {
    let value: serde_json::Value = serde_json::from_str(text).context("--set is not valid JSON")?;
    if value.is_object() {
        let set: IntervalSet =
            serde_json::from_value(value).context("--set is not an interval set")?;
        if set.d() != d {
            bail!("--set has D = {} but --d is {d}", set.d());
        }
        return Ok(set);
    }
    let intervals: Vec<Interval> =
        serde_json::from_value(value).context("--set is not a list of [a,b] pairs")?;
    Ok(IntervalSet::new(d, intervals)?)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Enumerate { d, filter, format } => {
            let sets = enumerate_capped(d, filter.into(), ceiling()?)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&sets)?),
                Format::Text => sets.iter().for_each(|s| println!("{s}")),
            }
        }
        Command::Table { d, format } => {
            let rows = table(d)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&rows)?),
                Format::Text => print!("{}", render(&rows)),
            }
        }
        Command::Symbol { d, set } => symbol(d, &set)?,
        Command::Verify { d_max, suite } => {
            let checks = run_all(&suite.suites(), d_max, ceiling()?)?;
            let failed = checks.iter().filter(|c| !c.pass).count();
            for c in &checks {
                println!("{c}");
            }
            println!("{} checks, {failed} failed", checks.len());
            if failed > 0 {
                return Err(VerificationFailed(format!("{failed} checks failed")).into());
            }
        }
        Command::Exceptional {
            dump_data: true, ..
        }
        | Command::DumpData => print!("{}", exceptional::DATA),
        Command::Exceptional { size, check, .. } => {
            let size = size.expect("clap requires --size here");
            exceptional_family(size, check)?
        }
        Command::Catalan { d_max } => {
            let limit = ceiling()?;
            let mut ok = true;
            println!("D half reduced symbols catalan");
            for d in (0..=d_max).step_by(2) {
                let half = enumerate_capped(d, Filter::Half, limit)?.len();
                let reduced = enumerate_capped(d, Filter::Reduced, limit)?.len();
                let symbols = tableaux::enumerate_distinguished_symbols(d)?.len();
                let cat = catalan((d + 2) / 2) as usize;
                let agree = half == cat && reduced == cat && symbols == cat;
                ok &= agree;
                println!(
                    "{d} {half} {reduced} {symbols} {cat}{}",
                    if agree { "" } else { " MISMATCH" }
                );
            }
            if !ok {
                return Err(VerificationFailed("counts differ from Catalan numbers".into()).into());
            }
        }
    }
    Ok(())
}

fn symbol(d: u32, text: &str) -> anyhow::Result<()> {
    let set = parse_set(d, text)?;
    if let basis_sets::Verdict::ViolatesP0(..) | basis_sets::Verdict::ViolatesP1(..) =
        basis_sets::validate(&set)
    {
        bail!("{set} is not a basis set: {:?}", basis_sets::validate(&set));
    }
    let reduced = basis_sets::reduce(&set)?;
    let forest = dot(&reduced)?;
    let tableau = shift(&forest);
    let pairs = tableau_to_pairs(&tableau);
    let sym = pairs_to_symbol(&pairs);
    let eps_set = epsilon(&set)?;
    let eps_rows = epsilon_rows(&tableau);
    let via_f = f_map(eps_rows);
    println!("set:        {set}");
    println!("reduced:    {reduced}");
    println!("forest:     {forest}");
    println!("tableau:    {tableau}");
    println!("pairs:      {pairs}");
    println!("symbol:     {}", sym.inline());
    println!("eps(set):   {eps_set}");
    println!("eps(rows):  {eps_rows}");
    println!("f(eps):     {via_f}");
    let agrees = UnorderedSymbol::from(&sym) == via_f && epsilon(&reduced)? == eps_rows;
    println!("cross-check: {}", if agrees { "pass" } else { "FAIL" });
    if !agrees {
        return Err(VerificationFailed("symbol routes disagree".into()).into());
    }
    Ok(())
}

fn exceptional_family(size: u32, check: bool) -> anyhow::Result<()> {
    let record = family(size)?;
    println!(
        "family size {}: Γ_c = {} (order {})",
        record.size,
        record.gamma,
        record.gamma.order()
    );
    for k in &record.keys {
        let groups: Vec<String> = k.groups.iter().map(|g| g.to_string()).collect();
        println!("  L({}) = {{{}}}", k.key, groups.join(", "));
        println!("  L'({}) = {{{}}}", k.key, k.labels.join(", "));
    }
    println!("almost special: {{{}}}", record.almost_special.join(", "));
    if let Ok(lists) = e8_lists(record) {
        for (key, dims) in lists {
            let dims: Vec<String> = dims.iter().map(|x| x.to_string()).collect();
            println!("  E8 L'({key}) = {{{}}}", dims.join(", "));
        }
    }
    if check {
        let verdicts = check_unique_max(record);
        for v in &verdicts {
            println!(
                "unique max {}: {} {:?}",
                v.key,
                if v.pass { "pass" } else { "FAIL" },
                v.orders
            );
        }
        let shape = check_record(record);
        match &shape {
            Ok(()) => println!(
                "almost special consistency: pass, {} labels",
                record.almost_special.len()
            ),
            Err(e) => println!("almost special consistency: FAIL ({e})"),
        }
        if shape.is_err() || verdicts.iter().any(|v| !v.pass) {
            return Err(VerificationFailed(format!("family {size} failed its checks")).into());
        }
        println!("check: pass");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<VerificationFailed>().is_some() {
                return ExitCode::from(1);
            }
            match e.downcast_ref::<Error>() {
                Some(Error::InternalConsistency(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
