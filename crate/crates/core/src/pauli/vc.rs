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

//! Kogut-Susskind Hamiltonian in the Verstraete-Cirac encoding.
//!
//! Every term is built as the Jordan-Wigner image of a product of Majorana operators in the
//! lattice fermion order, so the encoded operators obey exactly the fermionic algebra.
//! Vertical hopping is multiplied by the auxiliary bilinear of its link, which cancels the
//! long Jordan-Wigner string and leaves an operator supported on the two sites it couples.

use crate::model::{Couplings, GaugeGroup};

use super::lattice::{Lattice2D, LinkDir};
use super::terms::{BosonAction, EncodedTerm, LinkAction, TermAnchor, TermOrigin};
use super::{PauliError, SymplecticVec};

/// Jordan-Wigner image of the Majorana `γ_j` (`bar = false`) or `γ̄_j` (`bar = true`).
pub fn jw_majorana(n_qubits: usize, mode: usize, bar: bool) -> SymplecticVec {
    let mut x = vec![false; n_qubits];
    let mut z = vec![false; n_qubits];
    z[..mode].fill(true);
    x[mode] = true;
    z[mode] = bar;
    SymplecticVec::from_bits(x, z, 0).expect("equal lengths")
}

/// Ordered product of Majoranas, left to right.
pub fn majorana_product(n_qubits: usize, ops: &[(usize, bool)]) -> SymplecticVec {
    ops.iter().fold(SymplecticVec::identity(n_qubits), |acc, &(m, bar)| {
        acc.mul(&jw_majorana(n_qubits, m, bar)).expect("equal lengths")
    })
}

/// Folds a phase of `-1` or `-i` into the real coefficient, leaving phase 0 or 1.
fn normalize(coeff: f64, pauli: SymplecticVec) -> (f64, SymplecticVec) {
    let e = pauli.phase_exp();
    if e >= 2 {
        (-coeff, pauli.with_phase(e - 2))
    } else {
        (coeff, pauli)
    }
}

fn times_i(p: SymplecticVec, k: u8) -> SymplecticVec {
    let e = p.phase_exp();
    p.with_phase(e + k)
}

/// Auxiliary bilinear `i μ_lower μ_upper` of the vertical link leaving `(k, l)` in colour `c`.
///
/// Even columns use `γ̄` at the lower end and `γ` at the upper end, odd columns the reverse,
/// so each auxiliary Majorana belongs to exactly one link.
fn vertical_stabilizer(lat: &Lattice2D, k: usize, l: usize, c: usize) -> Option<SymplecticVec> {
    let (k2, l2) = lat.neighbor(k, l, LinkDir::Vertical)?;
    let nq = lat.num_qubits();
    let lower = lat.aux_qubit(lat.site_index(k, l), c);
    let upper = lat.aux_qubit(lat.site_index(k2, l2), c);
    let lower_bar = k % 2 == 0;
    Some(times_i(majorana_product(nq, &[(lower, lower_bar), (upper, !lower_bar)]), 1))
}

/// Emits mass, hopping, magnetic and auxiliary stabilizer terms of the VC-encoded Hamiltonian.
pub fn build_vc_hamiltonian(lat: &Lattice2D, group: GaugeGroup, c: &Couplings) -> Result<Vec<EncodedTerm>, PauliError> {
    let n = lat.n();
    if n % 2 != 0 {
        return Err(PauliError::OddLattice(n));
    }
    let nc = group.n_colors() as usize;
    if lat.colors() != nc {
        return Err(PauliError::LengthMismatch(lat.colors(), nc));
    }
    let nq = lat.num_qubits();
    let mut terms = Vec::new();

    // mass: g_M (−1)^{k+l} ψ†ψ, constant dropped, ψ†ψ → ½ iγγ̄ = −½ Z
    for s in 0..lat.num_sites() {
        let (k, l) = lat.site_coords(s);
        for col in 0..nc {
            let q = lat.physical_qubit(s, col);
            let p = times_i(majorana_product(nq, &[(q, false), (q, true)]), 1);
            let (coeff, pauli) = normalize(0.5 * c.g_m * lat.stagger(k, l), p);
            terms.push(EncodedTerm {
                coeff,
                pauli,
                boson_actions: Vec::new(),
                origin: TermOrigin::Mass,
                anchor: TermAnchor { site: s, partner: s, component: col as u8 },
            });
        }
    }

    // hopping: g_GM ψ†_{x,a} U_ab ψ_{x+μ,b} + h.c.
    for dir in [LinkDir::Horizontal, LinkDir::Vertical] {
        for s in 0..lat.num_sites() {
            let (k, l) = lat.site_coords(s);
            let Some((k2, l2)) = lat.neighbor(k, l, dir) else { continue };
            let t = lat.site_index(k2, l2);
            let link = lat.link_id(k, l, dir);
            let (origin, sign) = match dir {
                LinkDir::Horizontal => (TermOrigin::GaugeMatterH, 1.0),
                LinkDir::Vertical => (TermOrigin::GaugeMatterV, if l % 2 == 0 { -1.0 } else { 1.0 }),
            };
            for a in 0..nc {
                let stab = match dir {
                    LinkDir::Horizontal => None,
                    LinkDir::Vertical => vertical_stabilizer(lat, k, l, a),
                };
                for b in 0..nc {
                    let (i, j) = (lat.physical_qubit(s, a), lat.physical_qubit(t, b));
                    // ψ†_i ψ_j = ¼(γ_iγ_j + iγ_iγ̄_j − iγ̄_iγ_j + γ̄_iγ̄_j)
                    let parts = [((false, false), 0u8), ((false, true), 1), ((true, false), 3), ((true, true), 0)];
                    for (comp, ((bi, bj), ph)) in parts.into_iter().enumerate() {
                        let mut p = times_i(majorana_product(nq, &[(i, bi), (j, bj)]), ph);
                        if let Some(st) = &stab {
                            p = p.mul(st)?;
                        }
                        let coeff = 0.25 * c.g_gm * sign;
                        let component = (4 * (a * nc + b) + comp) as u8;
                        let forward = BosonAction { link, colors: (a as u8, b as u8), action: LinkAction::Raise };
                        let adj = p.adjoint();
                        let (cf, pf) = normalize(coeff, p);
                        terms.push(EncodedTerm {
                            coeff: cf,
                            pauli: pf,
                            boson_actions: vec![forward],
                            origin,
                            anchor: TermAnchor { site: s, partner: t, component },
                        });
                        let (cb, pb) = normalize(coeff, adj);
                        terms.push(EncodedTerm {
                            coeff: cb,
                            pauli: pb,
                            boson_actions: vec![forward.adjoint()],
                            origin,
                            anchor: TermAnchor { site: t, partner: s, component },
                        });
                    }
                }
            }
        }
    }

    // magnetic: g_B Tr(U_bottom U_right U_top† U_left†) + h.c.
    for (k, l) in lat.plaquettes() {
        let s = lat.site_index(k, l);
        let (kr, _) = lat.neighbor(k, l, LinkDir::Horizontal).expect("plaquette corner");
        let (_, lu) = lat.neighbor(k, l, LinkDir::Vertical).expect("plaquette corner");
        let bottom = lat.link_id(k, l, LinkDir::Horizontal);
        let right = lat.link_id(kr, l, LinkDir::Vertical);
        let top = lat.link_id(k, lu, LinkDir::Horizontal);
        let left = lat.link_id(k, l, LinkDir::Vertical);
        let mut component = 0u8;
        for al in 0..nc as u8 {
            for be in 0..nc as u8 {
                for ga in 0..nc as u8 {
                    for de in 0..nc as u8 {
                        let fwd = vec![
                            BosonAction { link: bottom, colors: (al, be), action: LinkAction::Raise },
                            BosonAction { link: right, colors: (be, ga), action: LinkAction::Raise },
                            BosonAction { link: top, colors: (de, ga), action: LinkAction::Lower },
                            BosonAction { link: left, colors: (al, de), action: LinkAction::Lower },
                        ];
                        let back: Vec<_> = fwd.iter().map(|b| b.adjoint()).collect();
                        for actions in [fwd, back] {
                            terms.push(EncodedTerm {
                                coeff: c.g_b,
                                pauli: SymplecticVec::identity(nq),
                                boson_actions: actions,
                                origin: TermOrigin::Magnetic,
                                anchor: TermAnchor { site: s, partner: s, component },
                            });
                            component = component.wrapping_add(1);
                        }
                    }
                }
            }
        }
    }

    // auxiliary stabilizers: products of vertical link bilinears in adjacent columns
    for (k, l) in lat.plaquettes() {
        let (kr, _) = lat.neighbor(k, l, LinkDir::Horizontal).expect("plaquette corner");
        for col in 0..nc {
            let left = vertical_stabilizer(lat, k, l, col).expect("plaquette has vertical link");
            let right = vertical_stabilizer(lat, kr, l, col).expect("plaquette has vertical link");
            let (coeff, pauli) = normalize(1.0, left.mul(&right)?);
            terms.push(EncodedTerm {
                coeff,
                pauli,
                boson_actions: Vec::new(),
                origin: TermOrigin::Aux,
                anchor: TermAnchor { site: lat.site_index(k, l), partner: lat.site_index(kr, l), component: col as u8 },
            });
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{symplectic_product, Boundary};

    fn couplings() -> Couplings {
        Couplings { g_m: 10.0, g_gm: 5.0, g_e: 50.0, g_b: -0.5 }
    }

    #[test]
    fn majoranas_anticommute_pairwise() {
        let nq = 4;
        let ops: Vec<_> = (0..nq).flat_map(|m| [jw_majorana(nq, m, false), jw_majorana(nq, m, true)]).collect();
        for (i, a) in ops.iter().enumerate() {
            for (j, b) in ops.iter().enumerate() {
                assert_eq!(symplectic_product(a, b).unwrap(), i != j);
            }
        }
    }

    #[test]
    fn odd_lattice_rejected() {
        let lat = Lattice2D::new(3, 1, Boundary::Open).unwrap();
        assert_eq!(build_vc_hamiltonian(&lat, GaugeGroup::U1, &couplings()), Err(PauliError::OddLattice(3)));
    }

    #[test]
    fn mass_terms_on_2x2() {
        let lat = Lattice2D::new(2, 1, Boundary::Open).unwrap();
        let terms = build_vc_hamiltonian(&lat, GaugeGroup::U1, &couplings()).unwrap();
        let mass: Vec<_> = terms.iter().filter(|t| t.origin == TermOrigin::Mass).collect();
        assert_eq!(mass.len(), 4);
        for t in mass {
            let s = t.anchor.site;
            assert_eq!(t.pauli.weight(), 1);
            assert_eq!(t.pauli.letter(lat.physical_qubit(s, 0)), 'Z');
            assert_eq!(t.pauli.phase_exp(), 0);
            let sign = if s % 2 == 0 { -1.0 } else { 1.0 };
            assert_eq!(t.coeff, sign * 0.5 * 10.0, "site {s}");
        }
    }

    #[test]
    fn vertical_terms_have_weight_four() {
        let lat = Lattice2D::new(2, 1, Boundary::Open).unwrap();
        let terms = build_vc_hamiltonian(&lat, GaugeGroup::U1, &couplings()).unwrap();
        let vert: Vec<_> = terms.iter().filter(|t| t.origin == TermOrigin::GaugeMatterV).collect();
        assert_eq!(vert.len(), 2 * 8);
        for t in vert {
            assert_eq!(t.pauli.weight(), 4, "{t}");
        }
    }
}
