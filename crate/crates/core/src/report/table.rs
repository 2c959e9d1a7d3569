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

//! Comparison tables against the bundled reference costs.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{improvement, ReportError, TrotterReference, REFERENCE_VERSION};
use crate::cost::{assemble_total, AlphaConvention, EncodingModel, EstimateOptions, TimeScaling};
use crate::lieb_robinson::lieb_robinson_for;
use crate::model::{GaugeGroup, PhysicalParams};

/// Formula conventions in force for every emitted table.
pub const CONVENTIONS: &[&str] = &[
    "register widths and iteration counts use ceil(log2); the Dyson segment count K keeps natural logs real",
    "mass value register width is max(1, ceil(log2(N_B^d / 2)))",
    "the side-length term 2 N_B (2 log L + 1) in the magnetic block encodings is read as 2 N_B^d (2 log L + 1)",
    "alpha = 2 (g_M + g_GM + |g_B|) sites for every group unless the colour-weighted norm is requested",
    "alpha_E uses the largest Casimir eigenvalue: L^2, L(L+1) or L^2 + 2L",
    "SU(2) and SU(3) matrix-element values use p = 64 bits in all three block encodings",
    "negative arithmetic blocks at truncation 1 are floored at zero",
    "fast-forwarding uses the cheaper available circuit unless one is requested",
    "HHKL block side is min(N, ceil(v_LR)); whole-lattice qubits scale by N^d / N_B^d",
    "each segment makes K HAM-T queries",
];

/// Sweep over `(ε, N, a)` with everything else fixed.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub base: PhysicalParams,
    pub options: EstimateOptions,
    pub epsilons: Vec<f64>,
    pub ns: Vec<u64>,
    pub spacings: Vec<f64>,
}

impl SweepConfig {
    /// Layout and conventions of the bundled reference rows for `group`.
    ///
    /// U(1) rows use the LCU encoding with HHKL blocks and are per unit time; the non-Abelian
    /// rows use the sparse encoding over the whole lattice for the full evolution time.
    pub fn reference(group: GaugeGroup) -> Self {
        let u1 = group == GaugeGroup::U1;
        SweepConfig {
            base: PhysicalParams { a: 1.0, g: 10.0, m: 10.0, d: if u1 { 2 } else { 3 }, n: 100, lambda: 10, time: 10.0, group, ..Default::default() },
            options: EstimateOptions {
                model: if u1 { EncodingModel::Lcu } else { EncodingModel::Sparse },
                hhkl: u1,
                time_scaling: if u1 { TimeScaling::PerUnitTime } else { TimeScaling::Evolution },
                alpha: AlphaConvention::Plain,
                ..Default::default()
            },
            epsilons: vec![1e-3, 1e-1],
            ns: if u1 { vec![100, 1000] } else { vec![1000, 100] },
            spacings: vec![1.0, 0.1, 0.01],
        }
    }

    pub fn tuples(&self) -> Vec<(f64, u64, f64)> {
        let mut out = Vec::new();
        for &e in &self.epsilons {
            for &n in &self.ns {
                for &a in &self.spacings {
                    out.push((e, n, a));
                }
            }
        }
        out
    }
}

/// One table row; CSV headers follow the printed tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub epsilon: f64,
    #[serde(rename = "N")]
    pub n: u64,
    pub a: f64,
    #[serde(rename = "v_LR")]
    pub v_lr: Option<f64>,
    #[serde(rename = "T_Trotter")]
    pub t_trotter: Option<f64>,
    #[serde(rename = "T_Qubit.")]
    pub t_qubit: f64,
    #[serde(rename = "Q_Trotter")]
    pub q_trotter: Option<f64>,
    #[serde(rename = "Q_Qubit.")]
    pub q_qubit: f64,
    #[serde(rename = "Improvement")]
    pub improvement: Option<f64>,
}

const HEADER: [&str; 9] = ["epsilon", "N", "a", "v_LR", "T_Trotter", "T_Qubit.", "Q_Trotter", "Q_Qubit.", "Improvement"];

/// Computed over printed qubitized values, when the reference has them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub epsilon: f64,
    pub n: u64,
    pub a: f64,
    pub t_ratio: f64,
    pub q_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableMeta {
    pub code_version: &'static str,
    pub reference_version: u32,
    pub group: GaugeGroup,
    pub d: u32,
    pub encoding: EncodingModel,
    pub hhkl: bool,
    pub time_scaling: TimeScaling,
    pub alpha: AlphaConvention,
    pub conventions: Vec<&'static str>,
    pub assumptions: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableOutput {
    pub meta: TableMeta,
    pub rows: Vec<ComparisonRow>,
    pub residuals: Vec<Residual>,
}

pub fn emit_table(cfg: &SweepConfig, reference: &TrotterReference) -> Result<TableOutput, ReportError> {
    let group = cfg.base.group;
    // one velocity bound per spacing, shared by every row with that spacing
    let bounds: Vec<(f64, Option<f64>)> = if cfg.options.hhkl && cfg.options.v_lr.is_none() {
        let mut spacings = cfg.spacings.clone();
        spacings.dedup();
        spacings
            .par_iter()
            .map(|&a| {
                let p = PhysicalParams { a, ..cfg.base };
                lieb_robinson_for(&p, &cfg.options.search).map(|b| (a, Some(b.v_lr))).map_err(|e| ReportError::Cost(e.into()))
            })
            .collect::<Result<_, _>>()?
    } else {
        cfg.spacings.iter().map(|&a| (a, cfg.options.v_lr)).collect()
    };
    let bound_for = |a: f64| bounds.iter().find(|(s, _)| *s == a).and_then(|(_, v)| *v);

    let computed: Vec<(ComparisonRow, Option<Residual>)> = cfg
        .tuples()
        .par_iter()
        .map(|&(epsilon, n, a)| {
            let params = PhysicalParams { epsilon, n, a, ..cfg.base };
            let opts = EstimateOptions { v_lr: bound_for(a).or(cfg.options.v_lr), ..cfg.options };
            let report = assemble_total(&params, &opts)?;
            let r = reference.lookup(group, epsilon, n, a);
            let (t_q, q_q) = (report.total.value, report.qubits_total.value);
            let imp = match r {
                Some(r) => Some(improvement(r.t_trotter.value, r.q_trotter.value, t_q, q_q)?),
                None => None,
            };
            let residual = r.map(|r| Residual { epsilon, n, a, t_ratio: t_q / r.t_qubit.value, q_ratio: q_q / r.q_qubit.value });
            let row = ComparisonRow {
                epsilon,
                n,
                a,
                v_lr: report.v_lr,
                t_trotter: r.map(|r| r.t_trotter.value),
                t_qubit: t_q,
                q_trotter: r.map(|r| r.q_trotter.value),
                q_qubit: q_q,
                improvement: imp,
            };
            Ok((row, residual))
        })
        .collect::<Result<_, ReportError>>()?;

    let mut assumptions = Vec::new();
    if group != GaugeGroup::U1 {
        assumptions.push(format!("m = {} and g = {} assumed for the non-Abelian rows", cfg.base.m, cfg.base.g));
    }
    if cfg.options.time_scaling == TimeScaling::PerUnitTime {
        assumptions.push("totals are per unit evolution time".to_string());
    }
    let (rows, residuals) = computed.into_iter().unzip::<_, _, Vec<_>, Vec<_>>();
    Ok(TableOutput {
        meta: TableMeta {
            code_version: env!("CARGO_PKG_VERSION"),
            reference_version: REFERENCE_VERSION.max(reference.version),
            group,
            d: cfg.base.d,
            encoding: cfg.options.model,
            hhkl: cfg.options.hhkl,
            time_scaling: cfg.options.time_scaling,
            alpha: cfg.options.alpha,
            conventions: CONVENTIONS.to_vec(),
            assumptions,
        },
        rows,
        residuals: residuals.into_iter().flatten().collect(),
    })
}

/// Full-precision CSV with a header row, also for an empty table.
pub fn write_table_csv<W: Write>(rows: &[ComparisonRow], out: W) -> Result<(), ReportError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_table_csv(text: &str) -> Result<Vec<ComparisonRow>, ReportError> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != HEADER {
        return Err(ReportError::Reference(format!("unexpected header {headers:?}")));
    }
    Ok(rdr.deserialize().collect::<Result<_, _>>()?)
}

pub fn write_table_json<W: Write>(table: &TableOutput, out: W) -> Result<(), ReportError> {
    serde_json::to_writer_pretty(out, table)?;
    Ok(())
}
