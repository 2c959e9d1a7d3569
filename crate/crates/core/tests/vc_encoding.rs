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

use std::collections::HashMap;

use lgt_cost::model::{Couplings, GaugeGroup};
use lgt_cost::pauli::{
    build_vc_hamiltonian, commutativity_graph, parse_terms, symplectic_product, write_terms, Boundary, EncodedTerm, Lattice2D,
    SymplecticVec, TermOrigin,
};

fn couplings() -> Couplings {
    Couplings { g_m: 10.0, g_gm: 5.0, g_e: 50.0, g_b: -0.005 }
}

fn build(n: usize, group: GaugeGroup, boundary: Boundary) -> (Lattice2D, Vec<EncodedTerm>) {
    let lat = Lattice2D::new(n, group.n_colors() as usize, boundary).unwrap();
    let terms = build_vc_hamiltonian(&lat, group, &couplings()).unwrap();
    (lat, terms)
}

fn count(terms: &[EncodedTerm], origin: TermOrigin) -> usize {
    terms.iter().filter(|t| t.origin == origin).count()
}

#[test]
fn term_counts_on_open_lattices() {
    for group in GaugeGroup::ALL {
        let nc = group.n_colors() as usize;
        for n in [2usize, 4] {
            let (_, terms) = build(n, group, Boundary::Open);
            let links = n * (n - 1);
            let plaquettes = (n - 1) * (n - 1);
            assert_eq!(count(&terms, TermOrigin::Mass), n * n * nc);
            // four Majorana components per colour pair, each with its conjugate
            assert_eq!(count(&terms, TermOrigin::GaugeMatterH), 8 * nc * nc * links);
            assert_eq!(count(&terms, TermOrigin::GaugeMatterV), 8 * nc * nc * links);
            assert_eq!(count(&terms, TermOrigin::Magnetic), 2 * nc.pow(4) * plaquettes);
            assert_eq!(count(&terms, TermOrigin::Aux), nc * plaquettes);
        }
    }
}

/// Moves a phase of −1 into the coefficient, as the builder does.
fn canonical(coeff: f64, p: SymplecticVec) -> (f64, SymplecticVec) {
    let e = p.phase_exp();
    if e >= 2 {
        (-coeff, p.with_phase(e - 2))
    } else {
        (coeff, p)
    }
}

#[test]
fn term_list_is_closed_under_conjugation() {
    for group in [GaugeGroup::U1, GaugeGroup::SU2] {
        let (_, terms) = build(4, group, Boundary::Open);
        for t in &terms {
            let adj = t.adjoint();
            let (c, p) = canonical(adj.coeff, adj.pauli.clone());
            let found = terms.iter().any(|u| u.origin == t.origin && u.coeff == c && u.pauli == p && u.boson_actions == adj.boson_actions);
            assert!(found, "no conjugate for {t}");
        }
        for t in terms.iter().filter(|t| t.boson_actions.is_empty()) {
            assert!(t.pauli.is_hermitian(), "{t}");
        }
    }
}

#[test]
fn fermionic_terms_act_only_on_their_sites() {
    for group in [GaugeGroup::U1, GaugeGroup::SU2] {
        let (lat, terms) = build(4, group, Boundary::Open);
        for t in terms.iter().filter(|t| t.origin.is_fermionic()) {
            for q in t.pauli.support() {
                let s = lat.site_of_qubit(q);
                assert!(s == t.anchor.site || s == t.anchor.partner, "{t} touches site {s}");
            }
        }
        // stabilisers stay on the four corners of their plaquette
        for t in terms.iter().filter(|t| t.origin == TermOrigin::Aux) {
            let (k, l) = lat.site_coords(t.anchor.site);
            let corners = [lat.site_index(k, l), lat.site_index(k + 1, l), lat.site_index(k, l + 1), lat.site_index(k + 1, l + 1)];
            for q in t.pauli.support() {
                assert!(corners.contains(&lat.site_of_qubit(q)), "{t}");
            }
        }
    }
}

type Key = (TermOrigin, usize, usize, u8);

fn key(t: &EncodedTerm) -> Key {
    (t.origin, t.anchor.site, t.anchor.partner, t.anchor.component)
}

#[test]
fn even_translations_preserve_the_anticommutation_graph() {
    let n = 4;
    let (lat, terms) = build(n, GaugeGroup::U1, Boundary::Periodic);
    let index: HashMap<Key, usize> = terms.iter().enumerate().map(|(i, t)| (key(t), i)).collect();
    assert_eq!(index.len(), terms.len(), "anchors identify terms uniquely");
    let shift_site = |s: usize, dk: usize, dl: usize| {
        let (k, l) = lat.site_coords(s);
        lat.site_index((k + dk) % n, (l + dl) % n)
    };
    let graph = commutativity_graph(&terms);
    for (dk, dl) in [(2, 0), (0, 2), (2, 2)] {
        let image: Vec<usize> = terms
            .iter()
            .map(|t| {
                let (o, s, p, c) = key(t);
                index[&(o, shift_site(s, dk, dl), shift_site(p, dk, dl), c)]
            })
            .collect();
        for (i, a) in terms.iter().enumerate() {
            assert_eq!(a.coeff.abs(), terms[image[i]].coeff.abs());
            for (j, b) in terms.iter().enumerate().skip(i + 1) {
                let before = symplectic_product(&a.pauli, &b.pauli).unwrap();
                let after = symplectic_product(&terms[image[i]].pauli, &terms[image[j]].pauli).unwrap();
                assert_eq!(before, after, "shift ({dk}, {dl}) breaks {a} / {b}");
            }
        }
        let moved = commutativity_graph(&image.iter().map(|&i| terms[i].clone()).collect::<Vec<_>>());
        assert_eq!(moved.edge_count(), graph.edge_count());
    }
}

#[test]
fn text_format_round_trips_exactly() {
    for group in GaugeGroup::ALL {
        let (_, terms) = build(2, group, Boundary::Open);
        let text = write_terms(&terms);
        assert_eq!(parse_terms(&text).unwrap(), terms);
    }
    let (_, terms) = build(4, GaugeGroup::U1, Boundary::Periodic);
    assert_eq!(parse_terms(&write_terms(&terms)).unwrap(), terms);
}

#[test]
fn stabilisers_commute_with_each_other() {
    for n in [2, 4] {
        let (_, terms) = build(n, GaugeGroup::U1, Boundary::Open);
        let aux: Vec<_> = terms.iter().filter(|t| t.origin == TermOrigin::Aux).collect();
        for a in &aux {
            for b in &aux {
                assert!(!symplectic_product(&a.pauli, &b.pauli).unwrap());
            }
        }
    }
}
