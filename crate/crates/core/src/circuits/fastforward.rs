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

use num_complex::Complex64;

use super::CircuitError;

/// Rotation angles `−2^j t mod 2π` applied to bit `j` of the eigenvalue register.
pub fn phase_kernel_angles(t: f64, p_bits: u32) -> Vec<f64> {
    (0..p_bits).map(|j| (-(2f64.powi(j as i32)) * t).rem_euclid(std::f64::consts::TAU)).collect()
}

/// Loads `k²` into a `p_bits` register and accumulates one phase per set bit.
pub fn fastforward_phase_check(k: i64, t: f64, p_bits: u32) -> Result<Complex64, CircuitError> {
    let square = (k * k) as u64;
    if p_bits < 64 && square >> p_bits != 0 {
        return Err(CircuitError::EigenvalueOverflow { square, p_bits });
    }
    let angles = phase_kernel_angles(t, p_bits);
    let mut phase = Complex64::new(1.0, 0.0);
    for (j, theta) in angles.iter().enumerate() {
        if (square >> j) & 1 == 1 {
            phase *= Complex64::from_polar(1.0, *theta);
        }
    }
    Ok(phase)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(fastforward_phase_check(0, 1.3, 4).unwrap(), Complex64::new(1.0, 0.0));
        let p = fastforward_phase_check(3, 0.1, 4).unwrap();
        assert!((p - Complex64::from_polar(1.0, -0.9)).norm() < 1e-12);
        assert_eq!(
            fastforward_phase_check(4, 0.1, 4),
            Err(CircuitError::EigenvalueOverflow { square: 16, p_bits: 4 })
        );
    }
}
