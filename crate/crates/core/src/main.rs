use affsph::report::{parse_weights, run, AnalysisRequest, OutputFormat, ReportError};
use affsph::{adapted::DEFAULT_SUBSET_CAP, oracle::DEFAULT_DIM_CAP};
use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "affsph", version, about = "Tangent spaces of moduli of affine spherical varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a group and a free monoid of dominant weights.
    Analyze {
        /// Dynkin type, e.g. "A1xA1" or "B3".
        #[arg(long)]
        group: String,
        /// Basis of the monoid in fundamental coordinates, e.g. "[[2,0],[4,2]]".
        /// "[]" is accepted for the trivial monoid.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        json: bool,
        /// Recompute the tangent weights from explicit modules and compare.
        #[arg(long)]
        oracle: bool,
        /// Enumerate N-adapted subsets and candidate components.
        #[arg(long)]
        subsets: bool,
        #[arg(long)]
        max_subset_size: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: usize,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        irrep_dim_cap: usize,
    },
}

fn fail(err: ReportError, json: bool) -> ExitCode {
    if json {
        eprintln!("{}", serde_json::to_string_pretty(&err.to_json()).expect("error serializes"));
    } else {
        eprintln!("error: {err}");
    }
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let Command::Analyze { group, weights, json, oracle, subsets, max_subset_size, subset_cap, irrep_dim_cap } =
        Cli::parse().command;
    let parsed = match parse_weights(&weights) {
        Ok(w) => w,
        Err(e) => return fail(e, json),
    };
    let mut req = AnalysisRequest::new(&group, parsed);
    req.allow_empty = weights.trim() == "[]";
    req.run_oracle = oracle;
    req.enumerate_subsets = subsets;
    req.max_subset_size = max_subset_size;
    req.subset_cap = subset_cap;
    req.irrep_dim_cap = irrep_dim_cap;
    req.output_format = if json { OutputFormat::Json } else { OutputFormat::Text };
    let report = match run(&req) {
        Ok(r) => r,
        Err(e) => return fail(e, json),
    };
    match req.output_format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Text => print!("{}", report.render_text()),
    }
    if report.oracle_disagrees() {
        let o = report.oracle.as_ref().expect("oracle ran");
        eprintln!("oracle disagreement");
        eprintln!("  combinatorial: {{{}}}", report.tangent.weights.join(", "));
        eprintln!("  oracle:        {{{}}}", o.weights.join(", "));
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
