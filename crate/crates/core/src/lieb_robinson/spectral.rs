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

//! Spectral radius of nonnegative matrices by two independent routes.

use faer::complex_native::c64;
use nalgebra::DMatrix;

use super::LrError;

/// Parlett-Reinsch balancing by powers of two, so the similarity is exact in floating point.
fn balance(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let mut b = m.clone();
    let mut converged = false;
    for _ in 0..1000 {
        if converged {
            break;
        }
        converged = true;
        for i in 0..n {
            let c: f64 = (0..n).filter(|&j| j != i).map(|j| b[(j, i)].abs()).sum();
            let r: f64 = (0..n).filter(|&j| j != i).map(|j| b[(i, j)].abs()).sum();
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let (mut cc, mut rr) = (c, r);
            while cc < rr / 2.0 {
                cc *= 2.0;
                rr /= 2.0;
                f *= 2.0;
            }
            while cc > rr * 2.0 {
                cc /= 2.0;
                rr *= 2.0;
                f /= 2.0;
            }
            if (cc + rr) < 0.95 * (c + r) {
                converged = false;
                for j in 0..n {
                    b[(i, j)] /= f;
                    b[(j, i)] *= f;
                }
            }
        }
    }
    b
}

/// Largest eigenvalue modulus from a full eigendecomposition of the balanced matrix.
pub fn spectral_radius_dense(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    if n == 0 {
        return 0.0;
    }
    let b = balance(m);
    let f = faer::Mat::<f64>::from_fn(n, n, |i, j| b[(i, j)]);
    f.eigenvalues::<c64>().iter().map(|z| z.abs()).fold(0.0, f64::max)
}

/// Perron root by power iteration on `M + I`, bracketed by Collatz-Wielandt bounds.
///
/// Returns the upper bound once the bracket is narrower than `rel_tol` relative. The shift
/// keeps the iteration convergent when the spectrum is symmetric about zero.
pub fn perron_root_power(m: &DMatrix<f64>, rel_tol: f64, max_iter: usize) -> Result<f64, LrError> {
    let n = m.nrows();
    if n == 0 {
        return Ok(0.0);
    }
    if m.iter().any(|v| *v < 0.0) {
        return Err(LrError::Dimension("power iteration requires a nonnegative matrix".into()));
    }
    let shifted = m + DMatrix::<f64>::identity(n, n);
    let mut x = nalgebra::DVector::<f64>::from_element(n, 1.0);
    let mut upper = f64::INFINITY;
    for _ in 0..max_iter {
        let y = &shifted * &x;
        let mut lo = f64::INFINITY;
        let mut hi: f64 = 0.0;
        for i in 0..n {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        upper = hi;
        if hi - lo <= rel_tol * hi {
            return Ok(hi - 1.0);
        }
        let norm = y.max();
        x = y / norm;
    }
    Err(LrError::NonConvergence { best: upper - 1.0, iterations: max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_spectrum() {
        // path graph on 3 vertices: eigenvalues ±√2, 0
        let m = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
        let dense = spectral_radius_dense(&m);
        assert!((dense - 2f64.sqrt()).abs() < 1e-12);
        let power = perron_root_power(&m, 1e-12, 10_000).unwrap();
        assert!((power - dense).abs() < 1e-10);
    }

    #[test]
    fn non_symmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 4.0, 1.0, 1.0]);
        assert!((spectral_radius_dense(&m) - 3.0).abs() < 1e-12);
        assert!((perron_root_power(&m, 1e-13, 10_000).unwrap() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn balancing_preserves_spectrum() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 1e8, 1e-8, 1.0]);
        assert!((spectral_radius_dense(&m) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_negative_and_reports_cap() {
        let neg = DMatrix::from_row_slice(1, 1, &[-1.0]);
        assert!(perron_root_power(&neg, 1e-9, 10).is_err());
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.5, 0.0]);
        assert!(matches!(perron_root_power(&m, 1e-15, 1), Err(LrError::NonConvergence { .. })));
    }
}
