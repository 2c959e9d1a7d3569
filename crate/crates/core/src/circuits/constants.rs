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

use crate::model::ceil_log2_f;

/// T-gate prices of the primitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostConstants;

impl CostConstants {
    pub const T_PER_TOFFOLI: u64 = 4;

    /// Single-qubit rotation synthesised to precision `epsilon`.
    pub fn t_rotation(epsilon: f64) -> u64 {
        4 * Self::log_inv_eps(epsilon) as u64
    }

    /// `⌈log₂(1/ε)⌉`.
    pub fn log_inv_eps(epsilon: f64) -> u32 {
        ceil_log2_f(1.0 / epsilon)
    }

    /// QROM over `len` entries.
    pub fn t_qrom(len: u64) -> u64 {
        (4 * len).saturating_sub(4)
    }

    /// Unary iteration over `len` indices.
    pub fn t_unary(len: u64) -> u64 {
        (4 * len).saturating_sub(4)
    }

    /// Karatsuba multiplication of two `p`-bit numbers.
    pub fn t_karatsuba(p: u64) -> u64 {
        4 * (4 * p * p).saturating_sub(3 * p)
    }

    /// Squaring a `w`-bit number.
    pub fn t_square(w: u64) -> u64 {
        4 * w * w.saturating_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(CostConstants::t_qrom(1), 0);
        assert_eq!(CostConstants::t_qrom(10), 36);
        assert_eq!(CostConstants::t_unary(4), 12);
        assert_eq!(CostConstants::t_rotation(1e-8), 4 * 27);
        assert_eq!(CostConstants::t_rotation(1e-3), 40);
        assert_eq!(CostConstants::t_karatsuba(3), 4 * 27);
        assert_eq!(CostConstants::t_square(4), 48);
        assert_eq!(CostConstants::t_square(0), 0);
    }

    #[test]
    fn monotone() {
        for x in 1..200u64 {
            assert!(CostConstants::t_qrom(x + 1) >= CostConstants::t_qrom(x));
            assert!(CostConstants::t_karatsuba(x + 1) >= CostConstants::t_karatsuba(x));
            assert!(CostConstants::t_square(x + 1) >= CostConstants::t_square(x));
        }
        let mut prev = 0;
        for e in 1..20 {
            let t = CostConstants::t_rotation(10f64.powi(-e));
            assert!(t >= prev);
            prev = t;
        }
    }
}
