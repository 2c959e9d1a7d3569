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

//! Closed-form T-gate and qubit counts for qubitized lattice gauge theory simulation.
//!
//! Register widths and iteration counts use `⌈log₂⌉`; the Dyson-series segment count `K`
//! keeps its natural logarithms real. Integer stage counts are exact `u128`; anything scaled
//! by the norm `α` is `f64`.

mod assemble;
mod blocks;
mod fastforward;
mod oracles;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lieb_robinson::LrError;
use crate::model::{ceil_log2, ceil_log2_f, GaugeGroup, ModelError};

pub use assemble::{
    alpha_norms, assemble_ham_t, assemble_total, dyson_segments, AlphaConvention, CostReport, EstimateOptions, HamT, Stage,
    TimeScaling,
};
pub use blocks::{block_qubits, cc_block_total, t_cc_block, BlockEncoding};
pub use fastforward::{cheapest_fastforward, t_fastforward, FastForwardCost, FastForwardMethod};
pub use oracles::{
    arithmetic_block, t_lcu_gm_select_single, t_lcu_oracles, t_sparse_oracles, t_su_gauge_oracles, SuGaugeOracles, SU2_FINAL_STATES,
    SU2_SID_CALLS, SU3_FINAL_STATES, SU3_SID_CALLS,
};

/// Matrix-element precision used for SU(2) and SU(3) sparse encodings (double precision).
pub const SU_VALUE_BITS: u64 = 64;

#[derive(Debug, Error, PartialEq)]
pub enum CostError {
    #[error("{what} is not available for {group}")]
    Unsupported { what: &'static str, group: GaugeGroup },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    LiebRobinson(#[from] LrError),
    #[error("audit failed for `{field}`: stored {stored}, recomputed {recomputed}")]
    Audit { field: &'static str, stored: String, recomputed: String },
    #[error("count overflows 128 bits in `{0}`")]
    Overflow(&'static str),
}

/// How the Hamiltonian is accessed by the block encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingModel {
    Sparse,
    Lcu,
}

impl std::fmt::Display for EncodingModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EncodingModel::Sparse => "sparse",
            EncodingModel::Lcu => "lcu",
        })
    }
}

impl std::str::FromStr for EncodingModel {
    type Err = CostError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sparse" => Ok(EncodingModel::Sparse),
            "lcu" => Ok(EncodingModel::Lcu),
            other => Err(CostError::Invalid(format!("unknown encoding `{other}` (expected sparse or lcu)"))),
        }
    }
}

/// Hamiltonian term being block encoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Term {
    Mass,
    GaugeMatter,
    Magnetic,
}

impl Term {
    pub const ALL: [Term; 3] = [Term::Mass, Term::GaugeMatter, Term::Magnetic];
}

// Integer helpers shared by the formula files. Everything is evaluated in i128 so that the
// printed expressions can be transcribed literally, then checked into u128.

pub(crate) fn lg(x: u128) -> i128 {
    ceil_log2(x) as i128
}

pub(crate) fn lg_inv_eps(epsilon: f64) -> i128 {
    ceil_log2_f(1.0 / epsilon) as i128
}

/// Width of the mass-value register, `⌈log₂(n/2)⌉` but at least one bit.
pub(crate) fn mass_register_width(sites: u128) -> i128 {
    (ceil_log2_f(sites as f64 / 2.0) as i128).max(1)
}

pub(crate) fn to_count(v: i128, what: &'static str) -> Result<u128, CostError> {
    u128::try_from(v).map_err(|_| CostError::Invalid(format!("`{what}` evaluated to the negative count {v}")))
}

/// `N^d` with overflow detection.
pub(crate) fn volume(n: u64, d: u32) -> Result<u128, CostError> {
    (n as u128).checked_pow(d).ok_or(CostError::Overflow("lattice volume"))
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<(), CostError> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(CostError::Invalid(format!("epsilon must lie in (0, 1), got {epsilon}")))
    }
}
