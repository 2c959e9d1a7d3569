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

//! Fast-forwarded evolution under the on-site electric energy.

use serde::{Deserialize, Serialize};

use super::{check_epsilon, lg, lg_inv_eps, to_count, volume, CostError};
use crate::model::GaugeGroup;

/// How the eigenvalue register is filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FastForwardMethod {
    /// Squaring or multiplication circuits computed on the fly.
    Arithmetic,
    /// Precomputed eigenvalue table.
    Qrom,
}

impl std::fmt::Display for FastForwardMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FastForwardMethod::Arithmetic => "arithmetic",
            FastForwardMethod::Qrom => "qrom",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FastForwardCost {
    pub method: FastForwardMethod,
    pub per_link: u128,
    /// `per_link · d · N_B^d`.
    pub total: u128,
    pub formula: &'static str,
}

/// T-count of `exp(-it H_E)` on one block of `nb^d` sites with `d` links per site.
pub fn t_fastforward(
    group: GaugeGroup,
    lambda: u64,
    epsilon: f64,
    method: FastForwardMethod,
    d: u32,
    nb: u64,
) -> Result<FastForwardCost, CostError> {
    if lambda == 0 {
        return Err(CostError::Invalid("truncation must be at least 1".into()));
    }
    check_epsilon(epsilon)?;
    let lam = lambda as i128;
    let le = lg_inv_eps(epsilon);
    let l = lg(lambda as u128);
    let (per_link, formula) = match (group, method) {
        (GaugeGroup::U1, FastForwardMethod::Arithmetic) => (4 * l * (2 * l - 1) + 8 * l * le, "u1.ff.arithmetic"),
        (GaugeGroup::U1, FastForwardMethod::Qrom) => (2 * (4 * lam - 4) + 8 * l * le, "u1.ff.qrom"),
        (GaugeGroup::SU2, FastForwardMethod::Qrom) => {
            (2 * (4 * lam - 4) + 4 * lg((lambda as u128) * (lambda as u128 + 1)) * le, "su2.ff.qrom")
        }
        (GaugeGroup::SU2, FastForwardMethod::Arithmetic) => {
            return Err(CostError::Unsupported { what: "arithmetic fast-forwarding", group })
        }
        (GaugeGroup::SU3, _) => {
            let x = lg((lambda as u128) * (lambda as u128 + 3));
            match method {
                // the table term is negative at Λ = 1; a lookup cannot cost fewer than zero gates
                FastForwardMethod::Qrom => ((2 * (2 * lam * lam - 4)).max(0) + 4 * x * le, "su3.ff.qrom"),
                FastForwardMethod::Arithmetic => (2 * (99 * x * x - 60 * x - 16) + 4 * x * le, "su3.ff.arithmetic"),
            }
        }
    };
    let per_link = to_count(per_link, formula)?;
    let links = volume(nb, d)?.checked_mul(d as u128).ok_or(CostError::Overflow("link count"))?;
    let total = per_link.checked_mul(links).ok_or(CostError::Overflow("fast-forward total"))?;
    Ok(FastForwardCost { method, per_link, total, formula })
}

/// The cheaper of the methods available for `group` (QROM on ties).
pub fn cheapest_fastforward(group: GaugeGroup, lambda: u64, epsilon: f64, d: u32, nb: u64) -> Result<FastForwardCost, CostError> {
    let qrom = t_fastforward(group, lambda, epsilon, FastForwardMethod::Qrom, d, nb)?;
    match t_fastforward(group, lambda, epsilon, FastForwardMethod::Arithmetic, d, nb) {
        Ok(arith) if arith.total < qrom.total => Ok(arith),
        _ => Ok(qrom),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u1_qrom_hand_value() {
        let ff = t_fastforward(GaugeGroup::U1, 10, 1e-8, FastForwardMethod::Qrom, 2, 3).unwrap();
        assert_eq!(ff.per_link, 2 * 36 + 8 * 4 * 27);
        assert_eq!(ff.total, ff.per_link * 2 * 9);
    }

    #[test]
    fn u1_arithmetic_not_worse_at_two() {
        for eps in [1e-1, 1e-8] {
            let a = t_fastforward(GaugeGroup::U1, 2, eps, FastForwardMethod::Arithmetic, 1, 1).unwrap();
            let q = t_fastforward(GaugeGroup::U1, 2, eps, FastForwardMethod::Qrom, 1, 1).unwrap();
            assert!(a.per_link <= q.per_link);
        }
    }

    #[test]
    fn su2_has_no_arithmetic_variant() {
        assert!(matches!(
            t_fastforward(GaugeGroup::SU2, 4, 1e-3, FastForwardMethod::Arithmetic, 3, 2),
            Err(CostError::Unsupported { .. })
        ));
        assert_eq!(cheapest_fastforward(GaugeGroup::SU2, 4, 1e-3, 3, 2).unwrap().method, FastForwardMethod::Qrom);
    }

    #[test]
    fn su3_formulas() {
        // Λ = 10: Λ(Λ+3) = 130, ⌈log₂⌉ = 8; ε = 1e-3 gives 10
        let q = t_fastforward(GaugeGroup::SU3, 10, 1e-3, FastForwardMethod::Qrom, 1, 1).unwrap();
        assert_eq!(q.per_link, 2 * 196 + 4 * 8 * 10);
        let a = t_fastforward(GaugeGroup::SU3, 10, 1e-3, FastForwardMethod::Arithmetic, 1, 1).unwrap();
        assert_eq!(a.per_link, 2 * (99 * 64 - 480 - 16) + 320);
        assert_eq!(t_fastforward(GaugeGroup::SU3, 1, 0.5, FastForwardMethod::Qrom, 1, 1).unwrap().per_link, 4 * 2);
    }

    #[test]
    fn bad_inputs() {
        assert!(t_fastforward(GaugeGroup::U1, 0, 1e-3, FastForwardMethod::Qrom, 2, 2).is_err());
        assert!(t_fastforward(GaugeGroup::U1, 4, 1.5, FastForwardMethod::Qrom, 2, 2).is_err());
    }
}
