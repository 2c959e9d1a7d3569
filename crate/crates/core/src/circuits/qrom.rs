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

use super::CircuitError;

pub fn qrom_lookup(table: &[i64], index: usize) -> Result<i64, CircuitError> {
    table.get(index).copied().ok_or(CircuitError::QromIndex { index, len: table.len() })
}

/// `k²` for `k ∈ [−lambda, lambda]`; entry `k + lambda` holds `k²`.
pub fn square_table(lambda: i64) -> Vec<i64> {
    (-lambda..=lambda).map(|k| k * k).collect()
}

/// SU(2) Casimir `j(j+1)` scaled by 4, for `j = 0, ½, …, lambda`; entry `2j` holds `4j(j+1)`.
pub fn casimir_table_su2(lambda: u64) -> Vec<i64> {
    (0..=2 * lambda as i64).map(|two_j| two_j * (two_j + 2)).collect()
}
