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

//! Square lattice with the fermion ordering and per-site qubit layout of the VC encoding.

use super::PauliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    #[default]
    Open,
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkDir {
    Horizontal,
    Vertical,
}

/// `N × N` lattice of sites `(k, l)` (column, row).
///
/// Sites are ordered row by row, alternating direction on odd rows, so the parity of the
/// scalar index always equals the parity of `k + l`. Each site holds `n_c` colours, each an
/// interleaved (physical, auxiliary) qubit pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice2D {
    n: usize,
    colors: usize,
    boundary: Boundary,
    order: Vec<(usize, usize)>,
    index: Vec<usize>,
}

impl Lattice2D {
    pub fn new(n: usize, colors: usize, boundary: Boundary) -> Result<Self, PauliError> {
        if n < 2 {
            return Err(PauliError::TooSmall(n));
        }
        let mut order = Vec::with_capacity(n * n);
        let mut index = vec![0; n * n];
        for l in 0..n {
            for step in 0..n {
                let k = if l % 2 == 0 { step } else { n - 1 - step };
                index[l * n + k] = order.len();
                order.push((k, l));
            }
        }
        Ok(Lattice2D { n, colors: colors.max(1), boundary, order, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn num_sites(&self) -> usize {
        self.n * self.n
    }

    /// Scalar position of site `(k, l)` in the fermion ordering.
    pub fn site_index(&self, k: usize, l: usize) -> usize {
        self.index[l * self.n + k]
    }

    pub fn site_coords(&self, s: usize) -> (usize, usize) {
        self.order[s]
    }

    pub fn qubits_per_site(&self) -> usize {
        2 * self.colors
    }

    pub fn num_qubits(&self) -> usize {
        self.num_sites() * self.qubits_per_site()
    }

    pub fn physical_qubit(&self, s: usize, color: usize) -> usize {
        (s * self.colors + color) * 2
    }

    pub fn aux_qubit(&self, s: usize, color: usize) -> usize {
        self.physical_qubit(s, color) + 1
    }

    pub fn site_of_qubit(&self, q: usize) -> usize {
        q / self.qubits_per_site()
    }

    /// Neighbour of `(k, l)` one step along `dir`, if the link exists.
    pub fn neighbor(&self, k: usize, l: usize, dir: LinkDir) -> Option<(usize, usize)> {
        let (k2, l2) = match dir {
            LinkDir::Horizontal => (k + 1, l),
            LinkDir::Vertical => (k, l + 1),
        };
        match (self.boundary, k2 < self.n && l2 < self.n) {
            (_, true) => Some((k2, l2)),
            (Boundary::Open, false) => None,
            (Boundary::Periodic, false) => Some((k2 % self.n, l2 % self.n)),
        }
    }

    /// Identifier of the link leaving `(k, l)` along `dir`.
    pub fn link_id(&self, k: usize, l: usize, dir: LinkDir) -> usize {
        2 * (l * self.n + k) + matches!(dir, LinkDir::Vertical) as usize
    }

    /// Lower-left corners of all plaquettes.
    pub fn plaquettes(&self) -> Vec<(usize, usize)> {
        let span = match self.boundary {
            Boundary::Open => self.n - 1,
            Boundary::Periodic => self.n,
        };
        (0..span).flat_map(|l| (0..span).map(move |k| (k, l))).collect()
    }

    /// Staggering sign `(−1)^{k+l}`.
    pub fn stagger(&self, k: usize, l: usize) -> f64 {
        if (k + l) % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_bijective_and_parity_preserving() {
        for n in [2, 3, 4, 6] {
            let lat = Lattice2D::new(n, 1, Boundary::Open).unwrap();
            let mut seen = vec![false; n * n];
            for l in 0..n {
                for k in 0..n {
                    let s = lat.site_index(k, l);
                    assert!(!seen[s]);
                    seen[s] = true;
                    assert_eq!(lat.site_coords(s), (k, l));
                    assert_eq!(s % 2, (k + l) % 2, "n={n} ({k},{l})");
                }
            }
        }
    }

    #[test]
    fn explicit_order_2x2() {
        let lat = Lattice2D::new(2, 1, Boundary::Open).unwrap();
        let order: Vec<_> = (0..4).map(|s| lat.site_coords(s)).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (1, 1), (0, 1)]);
    }

    #[test]
    fn qubit_layout_interleaves() {
        let lat = Lattice2D::new(2, 3, Boundary::Open).unwrap();
        assert_eq!(lat.num_qubits(), 24);
        assert_eq!(lat.physical_qubit(1, 2), 10);
        assert_eq!(lat.aux_qubit(1, 2), 11);
        assert_eq!(lat.site_of_qubit(11), 1);
    }

    #[test]
    fn neighbours_and_plaquettes() {
        let open = Lattice2D::new(4, 1, Boundary::Open).unwrap();
        assert_eq!(open.neighbor(3, 0, LinkDir::Horizontal), None);
        assert_eq!(open.plaquettes().len(), 9);
        let per = Lattice2D::new(4, 1, Boundary::Periodic).unwrap();
        assert_eq!(per.neighbor(3, 0, LinkDir::Horizontal), Some((0, 0)));
        assert_eq!(per.neighbor(1, 3, LinkDir::Vertical), Some((1, 0)));
        assert_eq!(per.plaquettes().len(), 16);
        assert!(Lattice2D::new(1, 1, Boundary::Open).is_err());
    }
}
