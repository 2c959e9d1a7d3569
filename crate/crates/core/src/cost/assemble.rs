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

//! HAM-T, Dyson-series segments and whole-simulation totals.

use serde::{Deserialize, Serialize};

use super::blocks::cc_block_total;
use super::fastforward::{cheapest_fastforward, t_fastforward, FastForwardMethod};
use super::{check_epsilon, volume, CostError, EncodingModel};
use crate::lieb_robinson::{lieb_robinson_for, KappaSearch};
use crate::model::{ceil_log2_f, plaquette_count, Couplings, GaugeGroup, PhysicalParams};

/// A computed quantity and the identifier of the formula that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stage<T> {
    pub value: T,
    pub formula: &'static str,
}

fn stage<T>(value: T, formula: &'static str) -> Stage<T> {
    Stage { value, formula }
}

/// Whether the final count covers the full evolution time or a unit of time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TimeScaling {
    /// Multiply by the evolution time `T`.
    #[default]
    Evolution,
    /// Report the cost of evolving for unit time.
    PerUnitTime,
}

/// Norm used for the interaction-picture Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaConvention {
    /// `2(g_M + g_GM + |g_B|)·sites` for every group.
    #[default]
    Plain,
    /// Each coupling weighted by the number of colour-indexed operators in its term.
    ColourWeighted,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateOptions {
    pub model: EncodingModel,
    /// Split the lattice into blocks of side `⌈v_LR⌉` (U(1) only).
    pub hhkl: bool,
    /// `None` picks the cheaper available fast-forwarding circuit.
    pub ff_method: Option<FastForwardMethod>,
    pub time_scaling: TimeScaling,
    pub alpha: AlphaConvention,
    /// Reuse a velocity bound instead of recomputing it.
    pub v_lr: Option<f64>,
    pub search: KappaSearch,
}

impl Default for EstimateOptions {
    fn default() -> Self {
        EstimateOptions {
            model: EncodingModel::Lcu,
            hhkl: true,
            ff_method: None,
            time_scaling: TimeScaling::Evolution,
            alpha: AlphaConvention::Plain,
            v_lr: None,
            search: KappaSearch::default(),
        }
    }
}

/// `(α, α_E)` for a block of `sites` sites.
pub fn alpha_norms(c: &Couplings, group: GaugeGroup, lambda: u64, sites: f64, convention: AlphaConvention) -> (f64, f64) {
    let nc = group.n_colors() as f64;
    let alpha = match convention {
        AlphaConvention::Plain => 2.0 * (c.g_m + c.g_gm + c.g_b.abs()) * sites,
        AlphaConvention::ColourWeighted => 2.0 * (c.g_m * nc + c.g_gm * nc * nc + c.g_b.abs() * nc.powi(4)) * sites,
    };
    (alpha, 2.0 * c.g_e * group.max_casimir(lambda) * sites)
}

/// Segments per unit of rescaled time: `⌈−1 + 2 ln x / (ln ln x + 1)⌉` with `x = 2α/ε`.
///
/// For `x ≤ e` the double logarithm is undefined and one segment is used.
pub fn dyson_segments(alpha: f64, epsilon: f64) -> u64 {
    let x = 2.0 * alpha / epsilon;
    // also catches NaN
    if x.partial_cmp(&std::f64::consts::E) != Some(std::cmp::Ordering::Greater) {
        return 1;
    }
    let k = (-1.0 + 2.0 * x.ln() / (x.ln().ln() + 1.0)).ceil();
    (k as u64).max(1)
}

/// Cost of one HAM-T query and the quantities it depends on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HamT {
    pub alpha: f64,
    pub alpha_e: f64,
    /// `16(α + α_E)/ε`.
    pub m: f64,
    /// `⌈log₂ M⌉`: electric-field queries per HAM-T and extra ancillas.
    pub log_m: u32,
    pub fastforward: u128,
    pub fastforward_per_link: u128,
    pub fastforward_method: FastForwardMethod,
    pub block: super::BlockEncoding,
    pub ham_t: u128,
}

#[allow(clippy::too_many_arguments)]
pub fn assemble_ham_t(
    couplings: &Couplings,
    group: GaugeGroup,
    nb: u64,
    d: u32,
    lambda: u64,
    epsilon: f64,
    model: EncodingModel,
    ff_method: Option<FastForwardMethod>,
    convention: AlphaConvention,
) -> Result<HamT, CostError> {
    check_epsilon(epsilon)?;
    let sites = volume(nb, d)? as f64;
    let (alpha, alpha_e) = alpha_norms(couplings, group, lambda, sites, convention);
    let m = 16.0 * (alpha + alpha_e) / epsilon;
    let log_m = ceil_log2_f(m);
    let ff = match ff_method {
        Some(method) => t_fastforward(group, lambda, epsilon, method, d, nb)?,
        None => cheapest_fastforward(group, lambda, epsilon, d, nb)?,
    };
    let block = cc_block_total(model, group, nb, d, lambda, epsilon)?;
    let ham_t = ff
        .total
        .checked_mul(log_m as u128)
        .and_then(|v| v.checked_add(block.total))
        .ok_or(CostError::Overflow("HAM-T"))?;
    Ok(HamT {
        alpha,
        alpha_e,
        m,
        log_m,
        fastforward: ff.total,
        fastforward_per_link: ff.per_link,
        fastforward_method: ff.method,
        block,
        ham_t,
    })
}

/// Full breakdown of one estimate. Every stage names the formula it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostReport {
    pub group: GaugeGroup,
    pub model: EncodingModel,
    pub hhkl: bool,
    pub time_scaling: TimeScaling,
    pub alpha_convention: AlphaConvention,
    pub params: PhysicalParams,
    pub v_lr: Option<f64>,
    pub n_b: Stage<u64>,
    pub plaquettes: Option<u128>,
    pub value_bits: Stage<u64>,
    pub fastforward_method: FastForwardMethod,
    pub fastforward_per_link: Stage<u128>,
    pub fastforward: Stage<u128>,
    pub cc_mass: Stage<u128>,
    pub cc_gauge_matter: Stage<u128>,
    pub cc_magnetic: Stage<u128>,
    pub block_total: Stage<u128>,
    pub alpha: Stage<f64>,
    pub alpha_e: Stage<f64>,
    pub m: Stage<f64>,
    pub log_m: Stage<u32>,
    pub ham_t: Stage<u128>,
    pub k: Stage<u64>,
    pub segment: Stage<f64>,
    pub block_count: Stage<f64>,
    pub total: Stage<f64>,
    pub qubits_system: Stage<u128>,
    pub qubits_ancilla: Stage<u128>,
    pub qubits_block: Stage<u128>,
    pub qubits_total: Stage<f64>,
}

fn cc_ids(group: GaugeGroup, model: EncodingModel) -> [&'static str; 4] {
    match (group, model) {
        (GaugeGroup::U1, EncodingModel::Sparse) => ["u1.sparse.cc_mass", "u1.sparse.cc_gm", "u1.sparse.cc_b", "u1.sparse.q"],
        (GaugeGroup::U1, EncodingModel::Lcu) => ["u1.lcu.cc_mass", "u1.lcu.cc_gm", "u1.lcu.cc_b", "u1.lcu.q"],
        (GaugeGroup::SU2, _) => ["su2.sparse.cc_mass", "su2.sparse.cc_gm", "su2.sparse.cc_b", "su.q"],
        (GaugeGroup::SU3, _) => ["su3.sparse.cc_mass", "su3.sparse.cc_gm", "su3.sparse.cc_b", "su.q"],
    }
}

fn evolution_time(params: &PhysicalParams, scaling: TimeScaling) -> f64 {
    match scaling {
        TimeScaling::Evolution => params.time,
        TimeScaling::PerUnitTime => 1.0,
    }
}

pub fn assemble_total(params: &PhysicalParams, opts: &EstimateOptions) -> Result<CostReport, CostError> {
    params.validate()?;
    let group = params.group;
    if group != GaugeGroup::U1 && opts.model == EncodingModel::Lcu {
        return Err(CostError::Unsupported { what: "the LCU encoding", group });
    }
    let (n_b, v_lr) = if opts.hhkl {
        let v = match opts.v_lr {
            Some(v) => v,
            None => lieb_robinson_for(params, &opts.search)?.v_lr,
        };
        if !(v.is_finite() && v > 0.0) {
            return Err(CostError::Invalid(format!("velocity bound must be positive, got {v}")));
        }
        (stage(params.n.min(v.ceil() as u64), "hhkl.block_side"), Some(v))
    } else {
        (stage(params.n, "naive.block_side"), None)
    };
    let nb = n_b.value;
    let d = params.d;
    let couplings = params.couplings();
    let h = assemble_ham_t(&couplings, group, nb, d, params.lambda, params.epsilon, opts.model, opts.ff_method, opts.alpha)?;
    let ids = cc_ids(group, opts.model);
    let k = dyson_segments(h.alpha, params.epsilon);
    let segment = h.alpha * (h.fastforward as f64 + k as f64 * h.ham_t as f64);
    let sites_total = volume(params.n, d)? as f64;
    let sites_block = volume(nb, d)? as f64;
    let block_count = sites_total * evolution_time(params, opts.time_scaling) / sites_block;
    let qubits_block = h.block.qubits + h.log_m as u128;
    let ff_id = match (group, h.fastforward_method) {
        (GaugeGroup::U1, FastForwardMethod::Arithmetic) => "u1.ff.arithmetic",
        (GaugeGroup::U1, FastForwardMethod::Qrom) => "u1.ff.qrom",
        (GaugeGroup::SU2, _) => "su2.ff.qrom",
        (GaugeGroup::SU3, FastForwardMethod::Qrom) => "su3.ff.qrom",
        (GaugeGroup::SU3, FastForwardMethod::Arithmetic) => "su3.ff.arithmetic",
    };
    Ok(CostReport {
        group,
        model: opts.model,
        hhkl: opts.hhkl,
        time_scaling: opts.time_scaling,
        alpha_convention: opts.alpha,
        params: *params,
        v_lr,
        n_b,
        plaquettes: plaquette_count(d, nb).ok(),
        value_bits: stage(h.block.value_bits, if group == GaugeGroup::U1 { "u1.value_bits" } else { "su.value_bits" }),
        fastforward_method: h.fastforward_method,
        fastforward_per_link: stage(h.fastforward_per_link, ff_id),
        fastforward: stage(h.fastforward, "ff.block_total"),
        cc_mass: stage(h.block.cc_mass, ids[0]),
        cc_gauge_matter: stage(h.block.cc_gauge_matter, ids[1]),
        cc_magnetic: stage(h.block.cc_magnetic, ids[2]),
        block_total: stage(h.block.total, "block.sum"),
        alpha: stage(
            h.alpha,
            match opts.alpha {
                AlphaConvention::Plain => "alpha.plain",
                AlphaConvention::ColourWeighted => "alpha.colour_weighted",
            },
        ),
        alpha_e: stage(h.alpha_e, "alpha_e.casimir"),
        m: stage(h.m, "hamt.m"),
        log_m: stage(h.log_m, "hamt.log_m"),
        ham_t: stage(h.ham_t, "hamt.cost"),
        k: stage(k, "dyson.k"),
        segment: stage(segment, "dyson.segment"),
        block_count: stage(block_count, "hhkl.block_count"),
        total: stage(block_count * segment, "total"),
        qubits_system: stage(h.block.qubits, ids[3]),
        qubits_ancilla: stage(h.log_m as u128, "hamt.log_m"),
        qubits_block: stage(qubits_block, "qubits.block"),
        qubits_total: stage(qubits_block as f64 * sites_total / sites_block, "qubits.total"),
    })
}

impl CostReport {
    /// Recomputes every derived stage from the stored sub-stages and compares exactly.
    pub fn audit(&self) -> Result<(), CostError> {
        fn check<T: PartialEq + std::fmt::Debug>(field: &'static str, stored: T, recomputed: T) -> Result<(), CostError> {
            if stored == recomputed {
                Ok(())
            } else {
                Err(CostError::Audit { field, stored: format!("{stored:?}"), recomputed: format!("{recomputed:?}") })
            }
        }
        let p = &self.params;
        let six_le = 6 * ceil_log2_f(1.0 / p.epsilon) as u128;
        check("block_total", self.block_total.value, self.cc_mass.value + self.cc_gauge_matter.value + self.cc_magnetic.value + six_le)?;
        let links = volume(self.n_b.value, p.d)? * p.d as u128;
        check("fastforward", self.fastforward.value, self.fastforward_per_link.value * links)?;
        check("m", self.m.value, 16.0 * (self.alpha.value + self.alpha_e.value) / p.epsilon)?;
        check("log_m", self.log_m.value, ceil_log2_f(self.m.value))?;
        check("ham_t", self.ham_t.value, self.fastforward.value * self.log_m.value as u128 + self.block_total.value)?;
        check("k", self.k.value, dyson_segments(self.alpha.value, p.epsilon))?;
        check(
            "segment",
            self.segment.value,
            self.alpha.value * (self.fastforward.value as f64 + self.k.value as f64 * self.ham_t.value as f64),
        )?;
        let blocks = volume(p.n, p.d)? as f64 * evolution_time(p, self.time_scaling) / volume(self.n_b.value, p.d)? as f64;
        check("block_count", self.block_count.value, blocks)?;
        check("total", self.total.value, self.block_count.value * self.segment.value)?;
        check("qubits_block", self.qubits_block.value, self.qubits_system.value + self.qubits_ancilla.value)?;
        check("qubits_total", self.qubits_total.value, self.qubits_block.value as f64 * volume(p.n, p.d)? as f64 / volume(self.n_b.value, p.d)? as f64)?;
        if self.total.value < 0.0 || self.qubits_total.value < 0.0 {
            return Err(CostError::Audit { field: "total", stored: "negative".into(), recomputed: "nonnegative".into() });
        }
        Ok(())
    }
}
