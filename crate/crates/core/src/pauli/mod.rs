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

//! Symplectic Pauli algebra and the fermion-to-qubit encoded Hamiltonians.

mod graph;
mod gs;
mod lattice;
mod symplectic;
mod terms;
mod vc;

use thiserror::Error;

pub use graph::{commutativity_graph, CommutativityGraph};
pub use gs::{build_gs_generators, GsGenerators};
pub use lattice::{Boundary, Lattice2D, LinkDir};
pub use symplectic::{matrix_element_phase, pauli_to_symplectic, symplectic_product, SymplecticVec};
pub use terms::{parse_terms, write_terms, BosonAction, EncodedTerm, LinkAction, TermAnchor, TermOrigin};
pub use vc::{build_vc_hamiltonian, jw_majorana, majorana_product};

#[derive(Debug, Error, PartialEq)]
pub enum PauliError {
    #[error("unknown Pauli letter `{0}`")]
    UnknownLetter(char),
    #[error("length mismatch: {0} vs {1} qubits")]
    LengthMismatch(usize, usize),
    #[error("staggered lattice requires even linear size (got N = {0})")]
    OddLattice(usize),
    #[error("lattice needs at least two sites per side (got N = {0})")]
    TooSmall(usize),
    #[error("term list line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
