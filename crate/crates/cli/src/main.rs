// SPDX-License-Identifier: Apache-2.0

//! `qtpg`: synthesize oracles, generate test suites, simulate faults and
//! grade coverage from the command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qtpg::boolfn::{bist_residue, esop_min_cubes, is_affine, pprm_expand, BooleanFunction, EXACT_MAX_K};
use qtpg::campaign::{
    campaign_report, complexity_report, enumerate_single_faults, multi_fault_experiment, run_campaign, CampaignConfig,
    FaultModels,
};
use qtpg::circuit::{build_oracle, check_oracle_shape, Circuit, Gate};
use qtpg::sim::{apply_faulty, measure_distribution, prepare, FaultSpec, Measurement};
use qtpg::testgen::{characterize_device, characterize_gate, gen_suite, Suite, SuiteFile};
use qtpg::Execution;

use output::{read_input, write_output};

/// Coverage fell short of the reference table.
#[derive(Debug, thiserror::Error)]
#[error("coverage regression: {0}")]
struct CoverageFailure(String);

#[derive(Parser)]
#[command(
    name = "qtpg",
    version,
    about = "Test generation and fault coverage for k-CN quantum oracles"
)]
struct Cli {
    /// Amplitude tolerance used by every numeric comparison.
    #[arg(long, global = true, default_value_t = qtpg::tolerance::DEFAULT_TOLERANCE)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the PPRM oracle circuit for a Boolean function.
    Synth {
        /// Function file (`k=` with `tt=` or `minterms=`); `-` reads stdin.
        function: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Generate a test suite with expected outcomes for an oracle circuit.
    GenTests {
        circuit: PathBuf,
        #[arg(long, default_value = "standard")]
        suite: Suite,
        #[command(flatten)]
        out: Output,
    },
    /// Simulate a circuit from a basis state, or every plan of a suite.
    Simulate {
        circuit: PathBuf,
        /// Basis state such as `00001`, q0 first.
        #[arg(long, conflicts_with = "tests", required_unless_present = "tests")]
        init: Option<String>,
        /// Suite file from `gen-tests`.
        #[arg(long)]
        tests: Option<PathBuf>,
        #[arg(long, default_value = "computational")]
        measure: Measurement,
        /// Fault such as `X@w3:q1:p=1`, `init@q2:b=1` or `stuck1@q0:b=1`; repeatable.
        #[arg(long = "fault", value_name = "SPEC")]
        faults: Vec<FaultSpec>,
        #[command(flatten)]
        out: Output,
    },
    /// Run the twelve characterization cases of an MCX gate.
    Characterize {
        /// Gate such as `MCX t=q2 c=q0+,q1+`.
        #[arg(long)]
        gate: Gate,
        /// Device circuit standing in for the gate; the ideal gate when omitted.
        #[arg(long)]
        device: Option<PathBuf>,
        #[arg(long = "fault", value_name = "SPEC")]
        faults: Vec<FaultSpec>,
        #[command(flatten)]
        out: Output,
    },
    /// Inject single faults under every plan and grade requirement coverage.
    Campaign(CampaignArgs),
    /// Exact minimum ESOP and the cheapest affine residue of a function.
    Esop {
        function: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Render a campaign report as text.
    Report {
        report: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct CampaignArgs {
    circuit: PathBuf,
    /// Suite file from `gen-tests`.
    tests: PathBuf,
    /// Fault models to enumerate: comma list of pauli, init, measure, all.
    #[arg(long, default_value = "all")]
    faults: String,
    /// Pauli placement probability; repeatable.
    #[arg(long = "p", default_values_t = [1.0])]
    probabilities: Vec<f64>,
    /// Bias of init and measurement faults.
    #[arg(long, default_value_t = 1.0)]
    bias: f64,
    /// Explicit fault list replacing the enumerated one; repeatable.
    #[arg(long = "fault", value_name = "SPEC")]
    explicit: Vec<FaultSpec>,
    /// Also inject faults into the tests' own preparation and response stages.
    #[arg(long)]
    include_qbist: bool,
    /// Function-dependent term of the classical bound k+4+2ne.
    #[arg(long)]
    ne: Option<usize>,
    /// Also run a multi-fault experiment with this many faults per trial.
    #[arg(long)]
    multi: Option<usize>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evaluate faults on one thread.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    out: Output,
}

fn load_function(path: &PathBuf) -> Result<BooleanFunction> {
    let text = read_input(path)?;
    text.parse().with_context(|| format!("{}", path.display()))
}

fn load_circuit(path: &PathBuf) -> Result<Circuit> {
    let text = read_input(path)?;
    text.parse().with_context(|| format!("{}", path.display()))
}

fn load_suite(path: &PathBuf, oracle: &Circuit) -> Result<SuiteFile> {
    let text = read_input(path)?;
    let file: SuiteFile = serde_json::from_str(&text).with_context(|| format!("{}", path.display()))?;
    if file.width != oracle.width() {
        bail!(
            "{}: plans for width {}, circuit has width {}",
            path.display(),
            file.width,
            oracle.width()
        );
    }
    Ok(file)
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn synth(function: &PathBuf, out: &Output) -> Result<()> {
    let f = load_function(function)?;
    let pprm = pprm_expand(&f);
    let oracle = build_oracle(&pprm);
    eprintln!("pprm: {pprm}");
    match is_affine(&f) {
        Some(a) => eprintln!("affine: yes ({})", a.describe(f.k())),
        None => eprintln!("affine: no"),
    }
    eprintln!("gates: {}", oracle.len());
    write_output(out.output.as_deref(), &oracle.to_string())
}

fn gen_tests(circuit: &PathBuf, suite: Suite, out: &Output) -> Result<()> {
    let oracle = load_circuit(circuit)?;
    check_oracle_shape(&oracle)?;
    let plans = gen_suite(&oracle, suite)?;
    eprintln!("{suite} suite: {} plans", plans.len());
    write_output(out.output.as_deref(), &pretty(&SuiteFile::new(suite, &plans))?)
}

fn distribution_json(d: &qtpg::sim::OutcomeDistribution) -> Value {
    let map: serde_json::Map<String, Value> = d.iter().map(|(o, p)| (o.to_string(), json!(p))).collect();
    Value::Object(map)
}

fn simulate(
    circuit: &PathBuf,
    init: Option<&str>,
    tests: Option<&PathBuf>,
    measure: Measurement,
    faults: &[FaultSpec],
    out: &Output,
) -> Result<()> {
    let c = load_circuit(circuit)?;
    let doc = if let Some(tests) = tests {
        let plans = load_suite(tests, &c)?.to_plans()?;
        let rows: Vec<Value> = plans
            .iter()
            .map(|p| -> Result<Value> {
                let composed = p.circuit(&c)?;
                for f in faults {
                    f.validate(&composed)?;
                }
                let d = p.distribution(&c, faults)?;
                Ok(json!({
                    "test": p.name,
                    "expected": p.expected.to_string(),
                    "pass_probability": d.probability(&p.expected),
                    "outcomes": distribution_json(&d),
                }))
            })
            .collect::<Result<_>>()?;
        json!({ "plans": rows })
    } else {
        let init = init.expect("clap requires --init without --tests");
        let state = prepare(c.width(), init)?;
        for f in faults {
            f.validate(&c)?;
        }
        let (measure_faults, state_faults): (Vec<FaultSpec>, Vec<FaultSpec>) =
            faults.iter().partition(|f| f.is_measurement());
        let ensemble = apply_faulty(&c, &state, &state_faults)?;
        let d = measure_distribution(&ensemble, measure, &measure_faults)?;
        json!({ "init": init, "measurement": measure.to_string(), "outcomes": distribution_json(&d) })
    };
    write_output(out.output.as_deref(), &pretty(&doc)?)
}

fn characterize(gate: &Gate, device: Option<&PathBuf>, faults: &[FaultSpec], out: &Output) -> Result<()> {
    let report = match device {
        None if faults.is_empty() => characterize_gate(gate)?,
        None => {
            let width = gate
                .controls()
                .iter()
                .map(|c| c.qubit)
                .chain([gate.target()])
                .max()
                .unwrap_or(0)
                + 1;
            characterize_device(gate, &Circuit::from_gates(width, [gate.clone()])?, faults)?
        }
        Some(path) => characterize_device(gate, &load_circuit(path)?, faults)?,
    };
    eprintln!("{}: {}/{} cases pass", report.gate, report.passed(), report.cases.len());
    write_output(out.output.as_deref(), &pretty(&report)?)
}

fn campaign(args: &CampaignArgs) -> Result<()> {
    let oracle = load_circuit(&args.circuit)?;
    check_oracle_shape(&oracle)?;
    let file = load_suite(&args.tests, &oracle)?;
    let plans = file.to_plans()?;
    let faults = if args.explicit.is_empty() {
        let mut models = FaultModels::parse_list(&args.faults)?;
        models.pauli_probabilities = args.probabilities.clone();
        models.bias = args.bias;
        enumerate_single_faults(&oracle, &models)
    } else {
        args.explicit.clone()
    };
    for f in &faults {
        f.validate(&oracle)?;
    }
    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let config = CampaignConfig {
        include_qbist: args.include_qbist,
        execution,
        ..CampaignConfig::default()
    };
    let matrix = run_campaign(&oracle, file.suite, &plans, &faults, &config)?;
    let mut report = campaign_report(&matrix, &complexity_report(&oracle, args.ne)?);
    if let Some(n) = args.multi {
        report.experiments.multi_fault = Some(multi_fault_experiment(
            &oracle,
            &plans,
            n,
            args.trials,
            args.seed,
            execution,
        )?);
    }
    let qbist = report.records.iter().filter(|r| r.region != "oracle").count();
    eprintln!(
        "{} suite: {} plans, {} oracle faults",
        file.suite,
        plans.len(),
        faults.len()
    );
    if qbist > 0 {
        eprintln!("included {qbist} records for QBIST-stage faults, which are excluded by default");
    }
    eprint!("{}", output::render_matrix(&serde_json::to_value(&report.matrix)?));
    write_output(args.out.output.as_deref(), &pretty(&report)?)?;
    if !report.matrix.meets_reference {
        let missed: Vec<String> = report
            .matrix
            .reference
            .iter()
            .filter(|c| !c.met)
            .map(|c| format!("{} {}", c.requirement, c.column))
            .collect();
        return Err(CoverageFailure(missed.join(", ")).into());
    }
    Ok(())
}

fn esop(function: &PathBuf, out: &Output) -> Result<()> {
    let f = load_function(function)?;
    let mut text = String::new();
    if f.k() <= EXACT_MAX_K {
        let (cost, witness) = esop_min_cubes(&f)?;
        text += &format!("esop cost: {cost}\nesop: {witness}\n");
    } else {
        text += &format!("esop cost: unavailable for k > {EXACT_MAX_K}\n");
    }
    let residue = bist_residue(&f);
    text += &format!(
        "affine: {}\nresidue cubes: {}\nresidue: {}\nexact: {}\n",
        residue.affine.describe(f.k()),
        residue.esop.len(),
        residue.esop,
        residue.exact
    );
    write_output(out.output.as_deref(), &text)
}

fn report(path: &PathBuf, out: &Output) -> Result<()> {
    let text = read_input(path)?;
    let doc: Value = serde_json::from_str(&text).with_context(|| format!("{}", path.display()))?;
    let matrix = doc.get("matrix").context("report has no matrix section")?;
    let mut rendered = output::render_matrix(matrix);
    if let Some(checks) = doc.pointer("/census/checks").and_then(Value::as_array) {
        rendered += "\ngate counts\n";
        for c in checks {
            let field = |k: &str| c.get(k).and_then(Value::as_str).unwrap_or_default().to_string();
            let verdict = if c.get("matches").and_then(Value::as_bool) == Some(true) {
                "ok"
            } else {
                "differs"
            };
            rendered += &format!(
                "  {:<20} {:<18} formula {:<14} measured {:<14} {verdict}\n",
                field("tests"),
                field("formula"),
                field("formula_value"),
                field("measured")
            );
        }
    }
    write_output(out.output.as_deref(), &rendered)
}

fn run(cli: Cli) -> Result<()> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        bail!("--tolerance must be a positive number");
    }
    qtpg::tolerance::set_tolerance(cli.tolerance);
    match &cli.command {
        Command::Synth { function, out } => synth(function, out),
        Command::GenTests { circuit, suite, out } => gen_tests(circuit, *suite, out),
        Command::Simulate {
            circuit,
            init,
            tests,
            measure,
            faults,
            out,
        } => simulate(circuit, init.as_deref(), tests.as_ref(), *measure, faults, out),
        Command::Characterize {
            gate,
            device,
            faults,
            out,
        } => characterize(gate, device.as_ref(), faults, out),
        Command::Campaign(args) => campaign(args),
        Command::Esop { function, out } => esop(function, out),
        Command::Report { report: path, out } => report(path, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<CoverageFailure>() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
