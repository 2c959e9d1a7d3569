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

//! Majorana form of the U(1) matter Hamiltonian used for the velocity bound.
//!
//! Electric terms are on-site and commute with everything relevant, and magnetic terms act on
//! links only, so neither enters the anticommutation graph.

use crate::model::{Couplings, GaugeGroup, PhysicalParams};

use super::sigma::{coefficient_vector, sigma_from_terms, LatticeTerm, SigmaMatrix};
use super::velocity::{all_sign_configs, velocity_bound, KappaSearch, VelocityBound};
use super::LrError;

const GAMMA: usize = 0;
const GAMMA_BAR: usize = 1;

/// Translation classes of the model with their term coefficients.
#[derive(Debug, Clone)]
pub struct ClassModel {
    pub sigma: SigmaMatrix,
    pub h: Vec<f64>,
    pub labels: Vec<String>,
}

impl ClassModel {
    pub fn coefficients(&self) -> Vec<f64> {
        coefficient_vector(&self.h)
    }
}

/// Named term shape: (cell offset, Majorana flavour) pairs.
type Shape = (String, Vec<(Vec<i64>, usize)>);

fn class_shapes(d: usize) -> Vec<Shape> {
    let origin = vec![0i64; d];
    let mut shapes = vec![("mass".to_string(), vec![(origin.clone(), GAMMA), (origin.clone(), GAMMA_BAR)])];
    for mu in 0..d {
        let mut step = origin.clone();
        step[mu] = 1;
        for (name, r0, r1) in [("gg", GAMMA, GAMMA), ("gb", GAMMA, GAMMA_BAR), ("bg", GAMMA_BAR, GAMMA), ("bb", GAMMA_BAR, GAMMA_BAR)] {
            shapes.push((format!("hop{mu}-{name}"), vec![(origin.clone(), r0), (step.clone(), r1)]));
        }
    }
    shapes
}

/// Every term of the model on a periodic lattice of side `extent`, grouped by class.
pub fn u1_lattice_terms(d: usize, extent: usize) -> Vec<LatticeTerm> {
    let cells = extent.pow(d as u32);
    let mut out = Vec::new();
    for (_, shape) in class_shapes(d) {
        for idx in 0..cells {
            let mut r = idx;
            let cell: Vec<i64> = (0..d)
                .map(|_| {
                    let c = (r % extent) as i64;
                    r /= extent;
                    c
                })
                .collect();
            let support = shape
                .iter()
                .map(|(off, row)| (cell.iter().zip(off).map(|(c, o)| (c + o).rem_euclid(extent as i64)).collect(), *row))
                .collect();
            out.push(LatticeTerm { support });
        }
    }
    out
}

/// Mass term `i(g_M/2)γγ̄` and, per direction, four hopping bilinears with weight `g_GM/4`.
pub fn u1_majorana_model(d: usize, couplings: &Couplings) -> Result<ClassModel, LrError> {
    let sigma = sigma_from_terms(&u1_lattice_terms(d, 4), 2, &vec![4; d])?;
    let shapes = class_shapes(d);
    let h = shapes
        .iter()
        .map(|(name, _)| if name == "mass" { couplings.g_m / 2.0 } else { couplings.g_gm / 4.0 })
        .collect();
    Ok(ClassModel { sigma, h, labels: shapes.into_iter().map(|(n, _)| n).collect() })
}

/// Velocity bound for a U(1) theory; SU(2) and SU(3) have no σ model and are rejected.
pub fn lieb_robinson_for(params: &PhysicalParams, search: &KappaSearch) -> Result<VelocityBound, LrError> {
    if params.group != GaugeGroup::U1 {
        return Err(LrError::UnsupportedGroup(params.group));
    }
    let model = u1_majorana_model(params.d as usize, &params.couplings())?;
    velocity_bound(&model.sigma, &model.coefficients(), &all_sign_configs(params.d as usize), search)
}
