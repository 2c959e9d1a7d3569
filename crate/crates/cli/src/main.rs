// Copyright 2026 The lgt-cost Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! `lgt-cost`: resource estimates for qubitized lattice gauge theory simulation.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use serde_json::Value;

use lgt_cost::cost::{assemble_total, AlphaConvention, EncodingModel, EstimateOptions, FastForwardMethod, TimeScaling};
use lgt_cost::lieb_robinson::{lieb_robinson_for, KappaSearch};
use lgt_cost::model::{GaugeGroup, PhysicalParams};
use lgt_cost::report::{emit_figure_data, emit_table, write_figure_csv, write_table_csv, write_table_json, Figure, SweepConfig, TrotterReference};
use lgt_cost::verify;

#[derive(Parser)]
#[command(name = "lgt-cost", version, about = "T-gate and qubit estimates for simulating lattice gauge theories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full cost breakdown for one parameter set.
    Estimate {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sweep over epsilon, N and a and compare with the bundled reference tables.
    ///
    /// Without overrides the sweep and conventions of the reference table for `--group` are used.
    Table {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Lieb-Robinson velocity bound and HHKL block side (U(1) only).
    LiebRobinson {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Numeric series behind one of the resource plots.
    Figure {
        #[arg(value_enum)]
        figure: FigureArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the exhaustive circuit and Pauli-algebra oracles.
    VerifyCircuits,
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    /// `key = value` file with any of a, g, m, d, N, lambda, lambda0, time, epsilon, group.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    group: Option<GaugeGroup>,
    /// Spatial dimension.
    #[arg(long = "dim")]
    d: Option<u32>,
    /// Linear lattice size; a comma list sweeps in `table`.
    #[arg(long = "N", value_delimiter = ',')]
    n: Vec<u64>,
    /// Lattice spacing; a comma list sweeps in `table`.
    #[arg(long, value_delimiter = ',')]
    a: Vec<f64>,
    #[arg(long)]
    g: Option<f64>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    lambda: Option<u64>,
    /// Target error; a comma list sweeps in `table`.
    #[arg(long, value_delimiter = ',')]
    epsilon: Vec<f64>,
    /// Evolution time.
    #[arg(long)]
    time: Option<f64>,
}

#[derive(Args, Clone, Default)]
struct ModelArgs {
    #[arg(long, value_enum)]
    encoding: Option<EncodingArg>,
    #[arg(long, value_enum)]
    hhkl: Option<Switch>,
    #[arg(long, value_enum)]
    time_scaling: Option<ScalingArg>,
    /// Force a fast-forwarding circuit instead of the cheaper one.
    #[arg(long, value_enum)]
    fast_forward: Option<FastForwardArg>,
    #[arg(long, value_enum)]
    alpha: Option<AlphaArg>,
    /// Use this velocity bound instead of computing one.
    #[arg(long)]
    v_lr: Option<f64>,
}

#[derive(Args, Clone)]
struct OutArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum EncodingArg {
    Sparse,
    Lcu,
}

#[derive(ValueEnum, Clone, Copy)]
enum Switch {
    On,
    Off,
}

#[derive(ValueEnum, Clone, Copy)]
enum ScalingArg {
    Evolution,
    PerUnitTime,
}

#[derive(ValueEnum, Clone, Copy)]
enum FastForwardArg {
    Arithmetic,
    Qrom,
}

#[derive(ValueEnum, Clone, Copy)]
enum AlphaArg {
    Plain,
    ColourWeighted,
}

#[derive(ValueEnum, Clone, Copy)]
enum FigureArg {
    FastForwardCrossover,
    BlockEncodingTotals,
    FinalComparison,
    SuBlockEncodings,
}

impl From<FigureArg> for Figure {
    fn from(f: FigureArg) -> Self {
        match f {
            FigureArg::FastForwardCrossover => Figure::FastForwardCrossover,
            FigureArg::BlockEncodingTotals => Figure::BlockEncodingTotals,
            FigureArg::FinalComparison => Figure::FinalComparison,
            FigureArg::SuBlockEncodings => Figure::SuBlockEncodings,
        }
    }
}

type Error = Box<dyn std::error::Error>;

fn single<T: Copy>(name: &str, values: &[T]) -> Result<Option<T>, Error> {
    match values {
        [] => Ok(None),
        [v] => Ok(Some(*v)),
        _ => Err(format!("`--{name}` takes one value here").into()),
    }
}

impl ParamArgs {
    /// Defaults, then the config file, then explicit flags. List flags keep their first value.
    fn base(&self, mut p: PhysicalParams) -> Result<PhysicalParams, Error> {
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            p = PhysicalParams::from_config_str(&text)?;
        }
        if let Some(group) = self.group {
            // two dimensions for U(1) and three otherwise, unless set explicitly
            if self.config.is_none() && self.d.is_none() {
                p.d = if group == GaugeGroup::U1 { 2 } else { 3 };
            }
            p.group = group;
        }
        p.d = self.d.unwrap_or(p.d);
        p.n = self.n.first().copied().unwrap_or(p.n);
        p.a = self.a.first().copied().unwrap_or(p.a);
        p.g = self.g.unwrap_or(p.g);
        p.m = self.m.unwrap_or(p.m);
        p.lambda = self.lambda.unwrap_or(p.lambda);
        p.epsilon = self.epsilon.first().copied().unwrap_or(p.epsilon);
        p.time = self.time.unwrap_or(p.time);
        Ok(p)
    }

    fn params(&self) -> Result<PhysicalParams, Error> {
        single("N", &self.n)?;
        single("a", &self.a)?;
        single("epsilon", &self.epsilon)?;
        let p = self.base(PhysicalParams::default())?;
        p.validate()?;
        Ok(p)
    }
}

impl ModelArgs {
    fn apply(&self, mut o: EstimateOptions) -> EstimateOptions {
        if let Some(e) = self.encoding {
            o.model = match e {
                EncodingArg::Sparse => EncodingModel::Sparse,
                EncodingArg::Lcu => EncodingModel::Lcu,
            };
        }
        if let Some(h) = self.hhkl {
            o.hhkl = matches!(h, Switch::On);
        }
        if let Some(s) = self.time_scaling {
            o.time_scaling = match s {
                ScalingArg::Evolution => TimeScaling::Evolution,
                ScalingArg::PerUnitTime => TimeScaling::PerUnitTime,
            };
        }
        if let Some(f) = self.fast_forward {
            o.ff_method = Some(match f {
                FastForwardArg::Arithmetic => FastForwardMethod::Arithmetic,
                FastForwardArg::Qrom => FastForwardMethod::Qrom,
            });
        }
        if let Some(a) = self.alpha {
            o.alpha = match a {
                AlphaArg::Plain => AlphaConvention::Plain,
                AlphaArg::ColourWeighted => AlphaConvention::ColourWeighted,
            };
        }
        o.v_lr = self.v_lr.or(o.v_lr);
        o
    }

    /// The non-Abelian groups have no velocity bound, so they default to the whole lattice with
    /// the sparse encoding.
    fn options_for(&self, group: GaugeGroup) -> EstimateOptions {
        let base = match group {
            GaugeGroup::U1 => EstimateOptions::default(),
            _ => EstimateOptions { model: EncodingModel::Sparse, hhkl: false, ..Default::default() },
        };
        self.apply(base)
    }
}

fn sink(out: &OutArgs) -> Result<Box<dyn Write>, Error> {
    Ok(match &out.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Flattens nested JSON into `path,value` lines.
fn flatten(prefix: &str, v: &Value, lines: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, child, lines);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), child, lines);
            }
        }
        Value::String(s) => lines.push((prefix.to_string(), s.clone())),
        Value::Null => lines.push((prefix.to_string(), String::new())),
        other => lines.push((prefix.to_string(), other.to_string())),
    }
}

fn write_record(value: &Value, out: &OutArgs) -> Result<(), Error> {
    let mut w = sink(out)?;
    match out.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, value)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut lines = Vec::new();
            flatten("", value, &mut lines);
            writeln!(w, "field,value")?;
            for (k, v) in lines {
                writeln!(w, "{k},{v}")?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Estimate { params, model, out } => {
            let p = params.params()?;
            let opts = model.options_for(p.group);
            info!("estimating {} d={} N={} a={} eps={}", p.group, p.d, p.n, p.a, p.epsilon);
            let report = assemble_total(&p, &opts)?;
            report.audit()?;
            write_record(&serde_json::to_value(&report)?, &out)?;
        }
        Command::Table { params, model, out } => {
            let group = params.group.unwrap_or(GaugeGroup::U1);
            let mut cfg = SweepConfig::reference(group);
            cfg.base = params.base(cfg.base)?;
            cfg.base.group = group;
            cfg.options = model.apply(cfg.options);
            if !params.epsilon.is_empty() {
                cfg.epsilons = params.epsilon.clone();
            }
            if !params.n.is_empty() {
                cfg.ns = params.n.clone();
            }
            if !params.a.is_empty() {
                cfg.spacings = params.a.clone();
            }
            info!("sweeping {} rows for {group}", cfg.tuples().len());
            let table = emit_table(&cfg, &TrotterReference::bundled())?;
            let w = sink(&out)?;
            match out.format {
                Format::Csv => write_table_csv(&table.rows, w)?,
                Format::Json => write_table_json(&table, w)?,
            }
        }
        Command::LiebRobinson { params, out } => {
            let p = params.params()?;
            let bound = lieb_robinson_for(&p, &KappaSearch::default())?;
            let mut value = serde_json::to_value(&bound)?;
            value["block_side"] = Value::from(bound.block_size());
            write_record(&value, &out)?;
        }
        Command::Figure { figure, out } => {
            let points = emit_figure_data(figure.into())?;
            let mut w = sink(&out)?;
            match out.format {
                Format::Csv => write_figure_csv(&points, w)?,
                Format::Json => {
                    serde_json::to_writer_pretty(&mut w, &points)?;
                    writeln!(w)?;
                    w.flush()?;
                }
            }
        }
        Command::VerifyCircuits => {
            let mut all = true;
            for r in verify::run_all() {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!("{status} {}: {} cases", r.name, r.cases);
                for f in r.failures.iter().take(10) {
                    println!("    {f}");
                }
                all &= r.passed();
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        // a closed pipe (e.g. `| head`) is not an error
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
