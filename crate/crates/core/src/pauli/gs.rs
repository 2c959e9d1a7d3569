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

//! Generalized superfast encoding: vertex parities and edge bilinears.

use crate::model::GaugeGroup;

use super::SymplecticVec;

/// Generators on an open `N^d` lattice.
///
/// Each vertex owns `d` qubits carrying `2d` local, mutually anticommuting edge operators,
/// followed by `n_c − 1` qubits for the remaining colours.
#[derive(Debug, Clone)]
pub struct GsGenerators {
    pub qubits_per_vertex: usize,
    pub num_qubits: usize,
    /// `V_v` for every vertex, indexed by vertex.
    pub vertex: Vec<SymplecticVec>,
    /// `E_{v,v'}` for every ordered pair of neighbours.
    pub edges: Vec<((usize, usize), SymplecticVec)>,
}

impl GsGenerators {
    pub fn edge(&self, v: usize, w: usize) -> Option<&SymplecticVec> {
        self.edges.iter().find(|(k, _)| *k == (v, w)).map(|(_, e)| e)
    }
}

fn vertex_coords(v: usize, d: u32, n: usize) -> Vec<usize> {
    let mut r = v;
    (0..d)
        .map(|_| {
            let c = r % n;
            r /= n;
            c
        })
        .collect()
}

/// Local edge operator `c_j` of vertex `v`: on the vertex's `d` qubits, `Z…Z X` for even `j`
/// and `Z…Z Y` for odd `j`, with the string over the first `j/2` qubits.
fn local_edge_op(num_qubits: usize, base: usize, j: usize) -> SymplecticVec {
    let mut x = vec![false; num_qubits];
    let mut z = vec![false; num_qubits];
    let q = j / 2;
    for bit in z.iter_mut().skip(base).take(q) {
        *bit = true;
    }
    x[base + q] = true;
    z[base + q] = j % 2 == 1;
    SymplecticVec::from_bits(x, z, 0).expect("equal lengths")
}

pub fn build_gs_generators(d: u32, n: usize, group: GaugeGroup) -> GsGenerators {
    let d = d.max(1);
    let qubits_per_vertex = d as usize + group.n_colors() as usize - 1;
    let vertices = n.pow(d);
    let num_qubits = vertices * qubits_per_vertex;
    let base = |v: usize| v * qubits_per_vertex;

    let vertex = (0..vertices)
        .map(|v| {
            let prod = (0..2 * d as usize).fold(SymplecticVec::identity(num_qubits), |acc, j| {
                acc.mul(&local_edge_op(num_qubits, base(v), j)).expect("equal lengths")
            });
            // (−i)^d
            let e = prod.phase_exp();
            prod.with_phase(e + 3 * (d % 4) as u8)
        })
        .collect();

    let mut edges = Vec::new();
    for v in 0..vertices {
        let coords = vertex_coords(v, d, n);
        for (mu, &c) in coords.iter().enumerate().take(d as usize) {
            if c + 1 >= n {
                continue;
            }
            let w = v + n.pow(mu as u32);
            let e = local_edge_op(num_qubits, base(v), 2 * mu)
                .mul(&local_edge_op(num_qubits, base(w), 2 * mu + 1))
                .expect("equal lengths");
            let flipped = {
                let p = e.phase_exp();
                e.clone().with_phase(p + 2)
            };
            edges.push(((v, w), e));
            edges.push(((w, v), flipped));
        }
    }
    GsGenerators { qubits_per_vertex, num_qubits, vertex, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::symplectic_product;

    #[test]
    fn vertex_parity_weight_is_dimension() {
        for d in 1..=3 {
            let g = build_gs_generators(d, 2, GaugeGroup::U1);
            for v in &g.vertex {
                assert_eq!(v.weight(), d as usize);
                assert!(v.is_hermitian());
            }
        }
    }

    #[test]
    fn edge_orientation_flips_phase() {
        let g = build_gs_generators(2, 3, GaugeGroup::SU2);
        assert_eq!(g.qubits_per_vertex, 3);
        for ((v, w), e) in &g.edges {
            let back = g.edge(*w, *v).unwrap();
            assert!(e.same_letters(back));
            assert_eq!((e.phase_exp() + 4 - back.phase_exp()) % 4, 2);
            assert!(e.is_hermitian());
        }
    }

    #[test]
    fn algebra_on_small_lattices() {
        for (d, n) in [(1, 4), (2, 3), (3, 2)] {
            let g = build_gs_generators(d, n, GaugeGroup::U1);
            for ((a, b), e) in &g.edges {
                for ((c, dd), f) in &g.edges {
                    let shared = [a, b].iter().filter(|x| **x == c || **x == dd).count();
                    if (a, b) == (c, dd) || (a, b) == (dd, c) {
                        continue;
                    }
                    assert_eq!(symplectic_product(e, f).unwrap(), shared == 1, "E{a}{b} vs E{c}{dd}");
                }
                for (v, vop) in g.vertex.iter().enumerate() {
                    let touches = v == *a || v == *b;
                    assert_eq!(symplectic_product(vop, e).unwrap(), touches);
                }
            }
        }
    }
}
