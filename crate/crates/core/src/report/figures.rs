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

//! Numeric series behind the resource plots. Nothing is rendered.

use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ReportError, TrotterReference};
use crate::cost::{
    assemble_total, cc_block_total, cheapest_fastforward, t_fastforward, CostError, EncodingModel, EstimateOptions, FastForwardMethod,
};
use crate::model::{GaugeGroup, PhysicalParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Figure {
    /// Per-link fast-forwarding cost against the truncation.
    FastForwardCrossover,
    /// U(1) block-encoding totals against the block side.
    BlockEncodingTotals,
    /// U(1) whole-simulation costs against the target error.
    FinalComparison,
    /// SU(2) and SU(3) block encodings against the electric-field cost.
    SuBlockEncodings,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::FastForwardCrossover, Figure::BlockEncodingTotals, Figure::FinalComparison, Figure::SuBlockEncodings];

    pub fn name(self) -> &'static str {
        match self {
            Figure::FastForwardCrossover => "fast-forward-crossover",
            Figure::BlockEncodingTotals => "block-encoding-totals",
            Figure::FinalComparison => "final-comparison",
            Figure::SuBlockEncodings => "su-block-encodings",
        }
    }
}

impl FromStr for Figure {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ReportError::Reference(format!("unknown figure `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigurePoint {
    pub series: String,
    pub x: f64,
    pub y: f64,
}

fn pt(series: impl Into<String>, x: f64, y: f64) -> FigurePoint {
    FigurePoint { series: series.into(), x, y }
}

const CROSSOVER_EPSILONS: [f64; 2] = [1e-1, 1e-8];
const CROSSOVER_MAX_LAMBDA: u64 = 100;
const BLOCK_LAMBDA: u64 = 5;
const BLOCK_EPSILON: f64 = 1e-3;
const BLOCK_SIDES: std::ops::RangeInclusive<u64> = 2..=64;
const FINAL_EPSILONS: [f64; 4] = [1e-8, 1e-5, 1e-3, 1e-1];

fn per_link(group: GaugeGroup, lambda: u64, epsilon: f64, method: FastForwardMethod) -> Result<f64, CostError> {
    t_fastforward(group, lambda, epsilon, method, 1, 1).map(|c| c.per_link as f64)
}

pub fn emit_figure_data(figure: Figure) -> Result<Vec<FigurePoint>, ReportError> {
    let mut out = Vec::new();
    match figure {
        Figure::FastForwardCrossover => {
            for eps in CROSSOVER_EPSILONS {
                for lambda in 2..=CROSSOVER_MAX_LAMBDA {
                    let x = lambda as f64;
                    let arith = per_link(GaugeGroup::U1, lambda, eps, FastForwardMethod::Arithmetic)?;
                    let qrom = per_link(GaugeGroup::U1, lambda, eps, FastForwardMethod::Qrom)?;
                    out.push(pt(format!("arithmetic eps={eps:e}"), x, arith));
                    out.push(pt(format!("qrom eps={eps:e}"), x, qrom));
                    out.push(pt(format!("arithmetic/qrom eps={eps:e}"), x, arith / qrom));
                }
            }
        }
        Figure::BlockEncodingTotals => {
            for nb in BLOCK_SIDES {
                let x = nb as f64;
                let sparse = cc_block_total(EncodingModel::Sparse, GaugeGroup::U1, nb, 2, BLOCK_LAMBDA, BLOCK_EPSILON)?;
                let lcu = cc_block_total(EncodingModel::Lcu, GaugeGroup::U1, nb, 2, BLOCK_LAMBDA, BLOCK_EPSILON)?;
                let electric = cheapest_fastforward(GaugeGroup::U1, BLOCK_LAMBDA, BLOCK_EPSILON, 2, nb)?;
                out.push(pt("T sparse", x, sparse.total as f64));
                out.push(pt("T lcu", x, lcu.total as f64));
                out.push(pt("T electric", x, electric.total as f64));
                out.push(pt("T sparse/lcu", x, sparse.total as f64 / lcu.total as f64));
                out.push(pt("Q sparse", x, sparse.qubits as f64));
                out.push(pt("Q lcu", x, lcu.qubits as f64));
                out.push(pt("Q sparse/lcu", x, sparse.qubits as f64 / lcu.qubits as f64));
            }
        }
        Figure::FinalComparison => {
            let base = PhysicalParams { a: 0.1, n: 100, time: 10.0, lambda: 10, m: 10.0, g: 10.0, d: 2, ..Default::default() };
            let mut v_lr = None;
            for eps in FINAL_EPSILONS {
                for model in [EncodingModel::Lcu, EncodingModel::Sparse] {
                    let p = PhysicalParams { epsilon: eps, ..base };
                    let r = assemble_total(&p, &EstimateOptions { model, v_lr, ..Default::default() })?;
                    v_lr = r.v_lr;
                    out.push(pt(format!("T {model}"), eps, r.total.value));
                    out.push(pt(format!("volume {model}"), eps, r.total.value * r.qubits_total.value));
                }
            }
            // Trotter points exist only where the bundled tables have them
            let reference = TrotterReference::bundled();
            for row in reference.rows_for(GaugeGroup::U1).filter(|r| r.n == base.n && r.a == base.a) {
                out.push(pt("T trotter", row.epsilon, row.t_trotter.value));
                out.push(pt("volume trotter", row.epsilon, row.t_trotter.value * row.q_trotter.value));
            }
        }
        Figure::SuBlockEncodings => {
            for group in [GaugeGroup::SU2, GaugeGroup::SU3] {
                for nb in BLOCK_SIDES {
                    let x = nb as f64;
                    let block = cc_block_total(EncodingModel::Sparse, group, nb, 3, BLOCK_LAMBDA, BLOCK_EPSILON)?;
                    let electric = cheapest_fastforward(group, BLOCK_LAMBDA, BLOCK_EPSILON, 3, nb)?;
                    out.push(pt(format!("T block {group}"), x, block.total as f64));
                    out.push(pt(format!("T electric {group}"), x, electric.total as f64));
                    out.push(pt(format!("block/electric {group}"), x, block.total as f64 / electric.total as f64));
                    out.push(pt(format!("Q {group}"), x, block.qubits as f64));
                }
            }
        }
    }
    Ok(out)
}

pub fn write_figure_csv<W: Write>(points: &[FigurePoint], out: W) -> Result<(), ReportError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(["series", "x", "y"])?;
    for p in points {
        w.serialize(p)?;
    }
    w.flush()?;
    Ok(())
}

/// Smallest `Λ` from which U(1) arithmetic fast-forwarding is strictly cheaper up to `lambda_max`.
pub fn u1_fastforward_crossover(epsilon: f64, lambda_max: u64) -> Result<Option<u64>, ReportError> {
    let mut start = None;
    for lambda in 1..=lambda_max {
        let arith = per_link(GaugeGroup::U1, lambda, epsilon, FastForwardMethod::Arithmetic)?;
        let qrom = per_link(GaugeGroup::U1, lambda, epsilon, FastForwardMethod::Qrom)?;
        if arith < qrom {
            start.get_or_insert(lambda);
        } else {
            start = None;
        }
    }
    Ok(start)
}

/// Largest `Λ` such that the SU(3) QROM is no dearer than arithmetic for every truncation up to it.
pub fn su3_qrom_cheaper_up_to(epsilon: f64, lambda_max: u64) -> Result<u64, ReportError> {
    let mut last = 0;
    for lambda in 1..=lambda_max {
        let arith = per_link(GaugeGroup::SU3, lambda, epsilon, FastForwardMethod::Arithmetic)?;
        let qrom = per_link(GaugeGroup::SU3, lambda, epsilon, FastForwardMethod::Qrom)?;
        if qrom > arith {
            break;
        }
        last = lambda;
    }
    Ok(last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_names_round_trip() {
        for f in Figure::ALL {
            assert_eq!(f.name().parse::<Figure>().unwrap(), f);
        }
        assert!("fig3".parse::<Figure>().is_err());
    }

    #[test]
    fn crossover_series_cover_both_errors() {
        let pts = emit_figure_data(Figure::FastForwardCrossover).unwrap();
        assert_eq!(pts.len(), 2 * 3 * 99);
        // the logarithmic error term is shared, so only the table part differs
        assert_eq!(u1_fastforward_crossover(1e-1, 100).unwrap(), u1_fastforward_crossover(1e-8, 100).unwrap());
    }

    #[test]
    fn small_truncation_favours_arithmetic() {
        let a = per_link(GaugeGroup::U1, 2, 1e-3, FastForwardMethod::Arithmetic).unwrap();
        let q = per_link(GaugeGroup::U1, 2, 1e-3, FastForwardMethod::Qrom).unwrap();
        assert!(a <= q);
    }
}
