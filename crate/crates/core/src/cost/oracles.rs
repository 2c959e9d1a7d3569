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

//! Per-term oracle costs: sparse access (`O_F`, `O_H`) and LCU (`prepare`, `select`).

use serde::Serialize;

use super::{lg, mass_register_width, to_count, volume, CostError, Term};
use crate::circuits::CostConstants;
use crate::model::{plaquette_count, GaugeGroup};

/// Controlled-SID calls replacing one increment when a gauge operator acts on a link.
pub const SU2_SID_CALLS: u128 = 6;
pub const SU3_SID_CALLS: u128 = 88;
/// Final states stored in separate registers per gauge operator.
pub const SU2_FINAL_STATES: u128 = 2;
pub const SU3_FINAL_STATES: u128 = 12;

/// `c2·L² + c1·L + c0`, an on-the-fly arithmetic block in `L = ⌈log₂Λ⌉`. May be negative.
pub fn arithmetic_block(c2: i128, c1: i128, c0: i128, lambda: u64) -> i128 {
    let l = lg(lambda as u128);
    c2 * l * l + c1 * l + c0
}

fn block_sites(nb: u64, d: u32) -> Result<i128, CostError> {
    Ok(volume(nb, d)? as i128)
}

/// `(T[O_F], T[O_H])` for a U(1) term on a block of `nb^d` sites.
pub fn t_sparse_oracles(term: Term, nb: u64, d: u32, lambda: u64) -> Result<(u128, u128), CostError> {
    let n = block_sites(nb, d)?;
    let l = lg(lambda as u128);
    let (of, oh) = match term {
        // the enumerator is a CNOT copy; the value is summed with n/2 controlled-SID gates
        Term::Mass => (0, 2 * n * (2 * mass_register_width(n as u128) + 1)),
        Term::GaugeMatter => (8 * n * l + 20 * n - 4, 32 * n - 13),
        // U(1) plaquette values are constant, so the value oracle is free
        Term::Magnetic => (32 * n * l + 20 * n, 0),
    };
    Ok((to_count(of, "u1.sparse.of")?, to_count(oh, "u1.sparse.oh")?))
}

/// `select` for one hopping direction of the U(1) gauge-matter term.
pub fn t_lcu_gm_select_single(nb: u64, d: u32, lambda: u64) -> Result<u128, CostError> {
    let n = block_sites(nb, d)?;
    to_count(8 * n * lg(lambda as u128) + 20 * n - 13, "u1.lcu.select_gm_single")
}

/// `(T[prepare], T[select])` for a U(1) term. Every `prepare` is a layer of Hadamards.
pub fn t_lcu_oracles(term: Term, nb: u64, d: u32, lambda: u64) -> Result<(u128, u128), CostError> {
    let n = block_sites(nb, d)?;
    let select = match term {
        Term::Mass => to_count(CostConstants::t_unary(n as u64) as i128, "u1.lcu.select_mass")?,
        Term::GaugeMatter => 2 * t_lcu_gm_select_single(nb, d, lambda)?,
        // same circuit as the sparse magnetic enumerator
        Term::Magnetic => t_sparse_oracles(Term::Magnetic, nb, d, lambda)?.0,
    };
    Ok((0, select))
}

/// Oracle costs for the non-Abelian groups on an `N^d` lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuGaugeOracles {
    pub of_gauge_matter: u128,
    pub oh_gauge_matter: u128,
    pub of_magnetic: u128,
    pub oh_magnetic: u128,
    pub oh_mass: u128,
}

/// Per-site coefficient of the gauge-matter enumerator: every colour configuration replaces
/// each controlled increment by a fixed number of controlled-SID calls.
pub(crate) fn su_enumerator_coefficient(group: GaugeGroup) -> Result<u128, CostError> {
    let calls = match group {
        GaugeGroup::SU2 => SU2_SID_CALLS,
        GaugeGroup::SU3 => SU3_SID_CALLS,
        GaugeGroup::U1 => return Err(CostError::Unsupported { what: "non-Abelian gauge oracles", group }),
    };
    let colours = group.link_operator_count() as u128;
    Ok(CostConstants::T_PER_TOFFOLI as u128 * colours * calls)
}

pub fn t_su_gauge_oracles(group: GaugeGroup, n_side: u64, d: u32, lambda: u64) -> Result<SuGaugeOracles, CostError> {
    if n_side == 0 || lambda == 0 {
        return Err(CostError::Invalid("lattice size and truncation must be at least 1".into()));
    }
    let coeff = su_enumerator_coefficient(group)? as i128;
    let n = block_sites(n_side, d)?;
    let nc = group.n_colors() as i128;
    let l = lg(lambda as u128);
    let plaq = plaquette_count(d, n_side)? as i128;
    let (oh_gm_extra, oh_b) = match group {
        GaugeGroup::SU2 => (8 * (d as i128 + 1) * n + 2 * arithmetic_block(71, -16, -32, lambda), 8 * arithmetic_block(71, -16, -32, lambda)),
        _ => (8 * (d as i128 + 2) * n + 12 * arithmetic_block(263, -28, -164, lambda), 48 * arithmetic_block(263, -28, -164, lambda)),
    };
    let of_gm = 4 * (nc * nc * n) - 4 + coeff * n * (2 * l + 4);
    let oh_gm = 4 * (4 * (nc * nc * n) - 4) + 3 + oh_gm_extra;
    let of_b = 4 * (nc.pow(4) * plaq) - 4 + 4 * coeff * n * (2 * l + 1);
    let oh_mass = 4 * nc * n * (2 * lg((n + nc - 2) as u128) + 1);
    // at Λ = 1 the arithmetic blocks reduce to their (negative) constants; counts floor at zero
    Ok(SuGaugeOracles {
        of_gauge_matter: to_count(of_gm, "su.of_gm")?,
        oh_gauge_matter: oh_gm.max(0) as u128,
        of_magnetic: to_count(of_b, "su.of_b")?,
        oh_magnetic: oh_b.max(0) as u128,
        oh_mass: to_count(oh_mass, "su.oh_mass")?,
    })
}
