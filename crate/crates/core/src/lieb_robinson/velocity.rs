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

//! Minimisation of `ω(iκ s)/κ` over `κ > 0` and over sign directions.

use rayon::prelude::*;
use serde::Serialize;

use super::sigma::{CoeffMatrix, FormKind, SigmaMatrix};
use super::spectral::spectral_radius_dense;
use super::LrError;

/// Search settings for the `κ` minimisation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaSearch {
    pub kappa_min: f64,
    pub kappa_max: f64,
    /// Log-spaced grid points scanned before refinement.
    pub grid: usize,
    /// Relative bracket width at which golden-section refinement stops.
    pub rel_tol: f64,
    pub max_iter: usize,
    /// How many times the bracket may grow by a decade when the grid minimum sits on an edge.
    pub max_widen: u32,
    pub form: FormKind,
}

impl Default for KappaSearch {
    fn default() -> Self {
        KappaSearch {
            kappa_min: 1e-3,
            kappa_max: 50.0,
            grid: 200,
            rel_tol: 1e-6,
            max_iter: 500,
            max_widen: 6,
            form: FormKind::Majorana,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectionResult {
    pub signs: Vec<f64>,
    pub kappa: f64,
    pub omega: f64,
    pub velocity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VelocityBound {
    /// Worst direction's bound.
    pub v_lr: f64,
    pub kappa_star: f64,
    pub omega: f64,
    pub directions: Vec<DirectionResult>,
    /// Number of bracket widenings that were needed.
    pub widened: u32,
}

impl VelocityBound {
    /// Integer block size `⌈v_LR⌉`.
    pub fn block_size(&self) -> u64 {
        self.v_lr.ceil() as u64
    }
}

/// All `2^d` vectors of ±1.
pub fn all_sign_configs(d: usize) -> Vec<Vec<f64>> {
    (0..1usize << d)
        .map(|mask| (0..d).map(|b| if (mask >> b) & 1 == 1 { -1.0 } else { 1.0 }).collect())
        .collect()
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let points = points.max(2);
    let (a, b) = (lo.ln(), hi.ln());
    (0..points).map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp()).collect()
}

/// `ω(iκ s)`: spectral radius of the coefficient matrix at imaginary wavevector.
pub fn omega_at(cm: &CoeffMatrix, kappa: f64, signs: &[f64]) -> Result<f64, LrError> {
    Ok(spectral_radius_dense(&cm.at_imag(kappa, signs)?))
}

/// Minimum of `ω/κ` over a plain log grid, without refinement.
pub fn grid_scan(cm: &CoeffMatrix, signs: &[f64], lo: f64, hi: f64, points: usize) -> Result<(f64, f64), LrError> {
    let grid = log_grid(lo, hi, points);
    let vals: Vec<f64> = grid
        .par_iter()
        .map(|&k| omega_at(cm, k, signs).map(|w| w / k))
        .collect::<Result<_, _>>()?;
    let (i, v) = vals
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |(bi, bv), (i, &v)| if v < bv { (i, v) } else { (bi, bv) });
    Ok((grid[i], v))
}

fn minimize_direction(cm: &CoeffMatrix, signs: &[f64], search: &KappaSearch) -> Result<(DirectionResult, u32), LrError> {
    let (mut lo, mut hi) = (search.kappa_min, search.kappa_max);
    let mut widened = 0;
    let objective = |k: f64| omega_at(cm, k, signs).map(|w| w / k);
    loop {
        let grid = log_grid(lo, hi, search.grid);
        let vals: Vec<f64> = grid.par_iter().map(|&k| objective(k)).collect::<Result<_, _>>()?;
        let best = (0..vals.len()).fold(0, |b, i| if vals[i] < vals[b] { i } else { b });
        let at_edge = best == 0 || best == vals.len() - 1;
        if at_edge && widened < search.max_widen {
            if best == 0 {
                lo /= 10.0;
            } else {
                hi *= 10.0;
            }
            widened += 1;
            log::warn!("κ minimiser on the search edge; widening bracket to [{lo:e}, {hi:e}]");
            continue;
        }
        if at_edge {
            log::warn!("κ minimiser still on the bracket edge after {widened} widenings");
        }
        let mut a = grid[best.saturating_sub(1)];
        let mut b = grid[(best + 1).min(grid.len() - 1)];
        let ratio = (5f64.sqrt() - 1.0) / 2.0;
        let mut c = b - ratio * (b - a);
        let mut d = a + ratio * (b - a);
        let (mut fc, mut fd) = (objective(c)?, objective(d)?);
        let mut iter = 0;
        while (b - a) > search.rel_tol * 0.5 * (a + b) {
            iter += 1;
            if iter > search.max_iter {
                return Err(LrError::NonConvergence { best: fc.min(fd), iterations: iter });
            }
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - ratio * (b - a);
                fc = objective(c)?;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + ratio * (b - a);
                fd = objective(d)?;
            }
        }
        let mut kappa = 0.5 * (a + b);
        let mut value = objective(kappa)?;
        if vals[best] < value {
            kappa = grid[best];
            value = vals[best];
        }
        let omega = value * kappa;
        return Ok((DirectionResult { signs: signs.to_vec(), kappa, omega, velocity: value }, widened));
    }
}

/// Upper bound `max_s min_κ ω(iκ s)/κ` on the Lieb-Robinson velocity.
pub fn velocity_bound(sig: &SigmaMatrix, c: &[f64], sign_configs: &[Vec<f64>], search: &KappaSearch) -> Result<VelocityBound, LrError> {
    if sign_configs.is_empty() {
        return Err(LrError::NoDirections);
    }
    let cm = CoeffMatrix::new(sig, c, search.form)?;
    let mut directions = Vec::with_capacity(sign_configs.len());
    let mut widened = 0;
    for signs in sign_configs {
        let (res, w) = minimize_direction(&cm, signs, search)?;
        widened = widened.max(w);
        directions.push(res);
    }
    let worst = directions
        .iter()
        .max_by(|a, b| a.velocity.total_cmp(&b.velocity))
        .expect("nonempty")
        .clone();
    Ok(VelocityBound { v_lr: worst.velocity, kappa_star: worst.kappa, omega: worst.omega, directions, widened })
}
