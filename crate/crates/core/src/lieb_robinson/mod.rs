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

//! Lieb-Robinson velocity bound for translation-invariant lattice Hamiltonians.
//!
//! Terms are encoded as columns of Laurent polynomials over F2, the reduced Gram matrix
//! `σ†Λσ` gives the Fourier-space anticommutation graph, and the bound is
//! `min_κ ω(iκ)/κ` with `ω` the Perron root of the weighted graph.

mod laurent;
mod majorana;
mod sigma;
mod spectral;
mod velocity;

use thiserror::Error;

use crate::model::GaugeGroup;

pub use laurent::LaurentPoly;
pub use majorana::{lieb_robinson_for, u1_lattice_terms, u1_majorana_model, ClassModel};
pub use sigma::{coeff_matrix_at, coefficient_vector, sigma_from_terms, CoeffMatrix, FormKind, LatticeTerm, LaurentMatrix, SigmaMatrix};
pub use spectral::{perron_root_power, spectral_radius_dense};
pub use velocity::{all_sign_configs, grid_scan, omega_at, velocity_bound, DirectionResult, KappaSearch, VelocityBound};

#[derive(Debug, Error, PartialEq)]
pub enum LrError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("terms are not translation invariant: class {class} occurs {found} times on {cells} cells")]
    NotTranslationInvariant { class: usize, found: usize, cells: usize },
    #[error("no convergence after {iterations} iterations (best value so far {best})")]
    NonConvergence { best: f64, iterations: usize },
    #[error("no Lieb-Robinson model for {0}; only U(1) is supported")]
    UnsupportedGroup(GaugeGroup),
    #[error("at least one sign configuration is required")]
    NoDirections,
}
