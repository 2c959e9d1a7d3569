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

/// Sign-magnitude register: value `(−1)^sign · magnitude`, magnitude in `[0, 2^p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedRegister {
    pub p: u32,
    pub sign: bool,
    pub magnitude: u64,
}

impl SignedRegister {
    /// Canonical encoding of `value`; zero always carries sign 0.
    pub fn from_value(p: u32, value: i64) -> Self {
        SignedRegister { p, sign: value < 0, magnitude: value.unsigned_abs() }
    }

    pub fn value(&self) -> i64 {
        let m = self.magnitude as i64;
        if self.sign {
            -m
        } else {
            m
        }
    }

    fn max_magnitude(&self) -> i64 {
        (1i64 << self.p) - 1
    }
}

/// Controlled signed increment (`inc = true`) or decrement on a sign-magnitude register.
pub fn sid_apply(r: SignedRegister, ctrl: bool, inc: bool) -> Result<SignedRegister, CircuitError> {
    if r.sign && r.magnitude == 0 {
        return Err(CircuitError::NegativeZero);
    }
    let bound = r.max_magnitude() - 1;
    if r.value().abs() > bound {
        return Err(CircuitError::SidOverflow { value: r.value(), p: r.p, bound });
    }
    Ok(sid_apply_total(r, ctrl, inc))
}

/// Total version of [`sid_apply`], a permutation of all `2^{p+1}` register states.
///
/// Overflow at `±(2^p − 1)` wraps to the opposite-sign extreme and the non-canonical negative
/// zero is a fixed point. Neither case is covered by the [`sid_apply`] contract.
pub fn sid_apply_total(r: SignedRegister, ctrl: bool, inc: bool) -> SignedRegister {
    if !ctrl || (r.sign && r.magnitude == 0) {
        return r;
    }
    let max = r.max_magnitude();
    let v = r.value();
    let next = match (inc, v) {
        (true, v) if v == max => -max,
        (false, v) if v == -max => max,
        (true, v) => v + 1,
        (false, v) => v - 1,
    };
    SignedRegister::from_value(r.p, next)
}

/// Toffoli count of one controlled SID gate on a `width`-bit magnitude.
pub fn sid_toffoli_count(width: u32) -> u64 {
    2 * width as u64 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg(p: u32, v: i64) -> SignedRegister {
        SignedRegister::from_value(p, v)
    }

    #[test]
    fn examples() {
        let r = reg(3, 5);
        assert_eq!(sid_apply(r, false, true).unwrap(), r);
        assert_eq!(sid_apply(reg(3, 3), true, true).unwrap().value(), 4);
        let down = sid_apply(reg(3, 0), true, false).unwrap();
        assert_eq!((down.sign, down.magnitude), (true, 1));
        let up = sid_apply(reg(3, -1), true, true).unwrap();
        assert_eq!((up.sign, up.magnitude), (false, 0));
    }

    #[test]
    fn precondition_enforced() {
        assert!(matches!(sid_apply(reg(3, 7), true, true), Err(CircuitError::SidOverflow { .. })));
        assert!(matches!(sid_apply(reg(3, -7), false, true), Err(CircuitError::SidOverflow { .. })));
        let neg_zero = SignedRegister { p: 2, sign: true, magnitude: 0 };
        assert_eq!(sid_apply(neg_zero, true, true), Err(CircuitError::NegativeZero));
    }

    #[test]
    fn wraparound_is_outside_contract() {
        assert_eq!(sid_apply_total(reg(2, 3), true, true).value(), -3);
        assert_eq!(sid_apply_total(reg(2, -3), true, false).value(), 3);
    }

    #[test]
    fn toffoli_counts() {
        assert_eq!(sid_toffoli_count(1), 3);
        assert_eq!(sid_toffoli_count(5), 11);
    }
}
