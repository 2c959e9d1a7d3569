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

//! Reference semantics for the reversible circuit primitives priced by the cost model.

mod constants;
mod fastforward;
mod qrom;
mod sid;

use thiserror::Error;

pub use constants::CostConstants;
pub use fastforward::{fastforward_phase_check, phase_kernel_angles};
pub use qrom::{casimir_table_su2, qrom_lookup, square_table};
pub use sid::{sid_apply, sid_apply_total, sid_toffoli_count, SignedRegister};

#[derive(Debug, Error, PartialEq)]
pub enum CircuitError {
    #[error("SID precondition violated: |{value}| exceeds {bound} for a {p}-bit magnitude")]
    SidOverflow { value: i64, p: u32, bound: i64 },
    #[error("SID input is the non-canonical negative zero")]
    NegativeZero,
    #[error("QROM index {index} out of range for table of length {len}")]
    QromIndex { index: usize, len: usize },
    #[error("eigenvalue overflow: k² = {square} needs more than {p_bits} bits")]
    EigenvalueOverflow { square: u64, p_bits: u32 },
}
