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

//! Reference data, comparison tables and figure series.

mod figures;
mod improvement;
mod reference;
mod table;

use thiserror::Error;

use crate::cost::CostError;

pub use figures::{emit_figure_data, write_figure_csv, su3_qrom_cheaper_up_to, u1_fastforward_crossover, Figure, FigurePoint};
pub use improvement::{format_sig, improvement, interval_check, round_sig, IntervalCheck};
pub use reference::{Printed, ReferenceRow, TrotterReference, REFERENCE_VERSION};
pub use table::{emit_table, Residual, TableMeta, parse_table_csv, write_table_csv, write_table_json, ComparisonRow, SweepConfig, TableOutput, CONVENTIONS};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("counts must be positive: {0}")]
    NonPositive(String),
    #[error("reference data: {0}")]
    Reference(String),
    #[error(transparent)]
    Cost(#[from] CostError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
