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

use super::{symplectic_product, EncodedTerm};

/// Undirected anticommutation graph over the fermionic terms of a term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativityGraph {
    /// Index into the input list for each vertex.
    pub vertices: Vec<usize>,
    /// Sorted neighbour lists, by vertex position.
    pub adjacency: Vec<Vec<usize>>,
}

impl CommutativityGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }
}

/// Builds the graph over mass and gauge-matter terms; magnetic and auxiliary terms are skipped.
pub fn commutativity_graph(terms: &[EncodedTerm]) -> CommutativityGraph {
    let vertices: Vec<usize> = (0..terms.len()).filter(|&i| terms[i].origin.is_fermionic()).collect();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let (u, v) = (&terms[vertices[a]].pauli, &terms[vertices[b]].pauli);
            if symplectic_product(u, v).unwrap_or(false) {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    CommutativityGraph { vertices, adjacency }
}
