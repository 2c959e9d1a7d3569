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

//! Physical parameters, derived couplings, truncation growth and lattice combinatorics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },
    #[error("no plaquettes below two dimensions (d = {0})")]
    NoPlaquettes(u32),
    #[error("unknown gauge group `{0}` (expected u1, su2 or su3)")]
    UnknownGroup(String),
    #[error("config line {line}: {reason}")]
    Config { line: usize, reason: String },
}

/// Gauge group of the lattice theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaugeGroup {
    U1,
    SU2,
    SU3,
}

impl GaugeGroup {
    pub const ALL: [GaugeGroup; 3] = [GaugeGroup::U1, GaugeGroup::SU2, GaugeGroup::SU3];

    pub fn n_colors(self) -> u32 {
        match self {
            GaugeGroup::U1 => 1,
            GaugeGroup::SU2 => 2,
            GaugeGroup::SU3 => 3,
        }
    }

    /// Number of colour-indexed link operators `U_ab` per link.
    pub fn link_operator_count(self) -> u32 {
        self.n_colors() * self.n_colors()
    }

    /// Largest eigenvalue of the electric energy operator on a link truncated at `lambda`.
    pub fn max_casimir(self, lambda: u64) -> f64 {
        let l = lambda as f64;
        match self {
            GaugeGroup::U1 => l * l,
            GaugeGroup::SU2 => l * (l + 1.0),
            GaugeGroup::SU3 => l * l + 2.0 * l,
        }
    }
}

impl fmt::Display for GaugeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaugeGroup::U1 => "u1",
            GaugeGroup::SU2 => "su2",
            GaugeGroup::SU3 => "su3",
        })
    }
}

impl FromStr for GaugeGroup {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "u1" | "u(1)" => Ok(GaugeGroup::U1),
            "su2" | "su(2)" => Ok(GaugeGroup::SU2),
            "su3" | "su(3)" => Ok(GaugeGroup::SU3),
            other => Err(ModelError::UnknownGroup(other.to_string())),
        }
    }
}

/// Lattice and theory inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Lattice spacing.
    pub a: f64,
    /// Bare gauge coupling.
    pub g: f64,
    /// Bare fermion mass.
    pub m: f64,
    /// Spatial dimension.
    pub d: u32,
    /// Linear lattice size.
    pub n: u64,
    /// Bosonic truncation.
    pub lambda: u64,
    /// Initial truncation used by the growth bound.
    pub lambda0: u64,
    /// Total evolution time.
    pub time: f64,
    /// Target simulation error.
    pub epsilon: f64,
    pub group: GaugeGroup,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        PhysicalParams {
            a: 0.1,
            g: 10.0,
            m: 10.0,
            d: 2,
            n: 100,
            lambda: 10,
            lambda0: 0,
            time: 10.0,
            epsilon: 1e-3,
            group: GaugeGroup::U1,
        }
    }
}

impl PhysicalParams {
    pub fn validate(&self) -> Result<(), ModelError> {
        fn bad(name: &'static str, reason: &str) -> Result<(), ModelError> {
            Err(ModelError::InvalidParam { name, reason: reason.to_string() })
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return bad("a", "lattice spacing must be positive");
        }
        if !(self.g > 0.0 && self.g.is_finite()) {
            return bad("g", "coupling must be positive");
        }
        if !(self.m >= 0.0 && self.m.is_finite()) {
            return bad("m", "mass must be nonnegative");
        }
        if self.d < 1 {
            return bad("d", "dimension must be at least 1");
        }
        if self.n < 2 {
            return bad("N", "linear size must be at least 2");
        }
        if self.lambda < 1 {
            return bad("lambda", "truncation must be at least 1");
        }
        if !(self.time >= 0.0 && self.time.is_finite()) {
            return bad("time", "evolution time must be nonnegative");
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return bad("epsilon", "error must lie in (0, 1)");
        }
        Ok(())
    }

    pub fn couplings(&self) -> Couplings {
        derive_couplings(self)
    }

    /// Number of lattice sites, `N^d`.
    pub fn sites(&self) -> f64 {
        (self.n as f64).powi(self.d as i32)
    }

    /// Parses the plain-text `key = value` config format.
    ///
    /// Recognised keys: `a`, `g`, `m`, `d`, `N`, `lambda`, `lambda0`, `time`, `epsilon`, `group`.
    /// Blank lines and `#` comments are ignored; `:` is accepted in place of `=`.
    /// Missing keys keep their default.
    pub fn from_config_str(text: &str) -> Result<Self, ModelError> {
        let mut p = PhysicalParams::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| ModelError::Config { line: line_no, reason: "expected `key = value`".into() })?;
            let key = key.trim();
            let value = value.trim().trim_matches('"');
            let cfg_err = |reason: String| ModelError::Config { line: line_no, reason };
            let float = |v: &str| v.parse::<f64>().map_err(|e| cfg_err(format!("`{key}`: {e}")));
            let int = |v: &str| v.parse::<u64>().map_err(|e| cfg_err(format!("`{key}`: {e}")));
            match key {
                "a" => p.a = float(value)?,
                "g" => p.g = float(value)?,
                "m" => p.m = float(value)?,
                "d" => p.d = int(value)? as u32,
                "N" | "n" => p.n = int(value)?,
                "lambda" => p.lambda = int(value)?,
                "lambda0" => p.lambda0 = int(value)?,
                "time" => p.time = float(value)?,
                "epsilon" => p.epsilon = float(value)?,
                "group" => p.group = value.parse()?,
                other => return Err(cfg_err(format!("unknown key `{other}`"))),
            }
        }
        p.validate()?;
        Ok(p)
    }
}

/// Coupling constants of the Kogut-Susskind Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    pub g_m: f64,
    pub g_gm: f64,
    pub g_e: f64,
    pub g_b: f64,
}

pub fn derive_couplings(p: &PhysicalParams) -> Couplings {
    let d = p.d as i32;
    Couplings {
        g_m: p.m,
        g_gm: 1.0 / (2.0 * p.a),
        g_e: p.g * p.g / (2.0 * p.a.powi(d - 2)),
        g_b: -1.0 / (2.0 * p.a.powi(4 - d) * p.g * p.g),
    }
}

/// Which truncation-growth bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthBound {
    /// `Λ0 + ⌈χT log₂(N Λ0 χ T / ε)⌉`, implied constant pinned to 1.
    #[default]
    Improved,
    /// `Λ0 + ⌈(χT + 1) log₂(N / ε)⌉`, the looser polylog form.
    Loose,
}

/// Growth rate `χ = c (4|g_B| + 2|g_GM|)`.
pub fn growth_rate(c: &Couplings, c_count: u32) -> f64 {
    c_count as f64 * (4.0 * c.g_b.abs() + 2.0 * c.g_gm.abs())
}

/// Truncation needed after evolving for `p.time`, starting from `p.lambda0`.
pub fn truncation_growth(p: &PhysicalParams, c_count: u32) -> u64 {
    truncation_growth_with(p, c_count, GrowthBound::Improved)
}

pub fn truncation_growth_with(p: &PhysicalParams, c_count: u32, bound: GrowthBound) -> u64 {
    let chi = growth_rate(&derive_couplings(p), c_count);
    truncation_from_rate(p.lambda0, chi, p.time, p.n as f64, p.epsilon, bound)
}

/// Growth bound evaluated from an explicit rate `chi`.
pub fn truncation_from_rate(lambda0: u64, chi: f64, time: f64, n: f64, epsilon: f64, bound: GrowthBound) -> u64 {
    let extra = match bound {
        GrowthBound::Improved => {
            if time == 0.0 || chi == 0.0 {
                return lambda0;
            }
            let arg = n * (lambda0.max(1) as f64) * chi * time / epsilon;
            chi * time * arg.max(2.0).log2()
        }
        GrowthBound::Loose => (chi * time + 1.0) * (n / epsilon).max(2.0).log2(),
    };
    lambda0 + extra.ceil() as u64
}

/// `C(d,2) N² (N+1)^{d-2}`: plaquettes of a hypercubic lattice with `N` cells per side.
pub fn plaquette_count(d: u32, n: u64) -> Result<u128, ModelError> {
    if d < 2 {
        return Err(ModelError::NoPlaquettes(d));
    }
    let pairs = (d as u128) * (d as u128 - 1) / 2;
    let n = n as u128;
    Ok(pairs * n * n * (n + 1).pow(d - 2))
}

/// Ceiled base-2 logarithm for register widths: `⌈log₂ x⌉`, zero for `x ≤ 1`.
pub fn ceil_log2(x: u128) -> u32 {
    if x <= 1 {
        0
    } else {
        128 - (x - 1).leading_zeros()
    }
}

/// `⌈log₂ x⌉` for real arguments, zero for `x ≤ 1`.
pub fn ceil_log2_f(x: f64) -> u32 {
    if x <= 1.0 {
        return 0;
    }
    let l = x.log2();
    let r = l.round();
    // exact powers of two land on integers; snap to avoid rounding one too high
    if (l - r).abs() < 1e-12 {
        r as u32
    } else {
        l.ceil() as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, g: f64, m: f64, d: u32) -> PhysicalParams {
        PhysicalParams { a, g, m, d, ..PhysicalParams::default() }
    }

    #[test]
    fn couplings_examples() {
        let c = derive_couplings(&params(0.1, 10.0, 10.0, 2));
        assert_eq!(c.g_m, 10.0);
        assert!((c.g_gm - 5.0).abs() < 1e-12);
        assert!((c.g_e - 50.0).abs() < 1e-12);
        assert!((c.g_b + 0.5).abs() < 1e-12);

        let c = derive_couplings(&params(1.0, 1.0, 0.0, 2));
        assert_eq!((c.g_m, c.g_gm, c.g_e, c.g_b), (0.0, 0.5, 0.5, -0.5));

        let c = derive_couplings(&params(1.0, 1.0, 1.0, 3));
        assert_eq!((c.g_m, c.g_gm, c.g_e, c.g_b), (1.0, 0.5, 0.5, -0.5));
    }

    #[test]
    fn couplings_d3_powers() {
        // d = 3: g_E = g² / (2a), g_B = -1 / (2 a g²)
        let c = derive_couplings(&params(0.5, 2.0, 0.0, 3));
        assert!((c.g_e - 4.0 / (2.0 * 0.5)).abs() < 1e-15);
        assert!((c.g_b + 1.0 / (2.0 * 0.5 * 4.0)).abs() < 1e-15);
    }

    #[test]
    fn growth_zero_time() {
        let p = PhysicalParams { time: 0.0, lambda0: 7, ..PhysicalParams::default() };
        assert_eq!(truncation_growth(&p, 1), 7);
    }

    #[test]
    fn growth_hand_example() {
        assert_eq!(truncation_from_rate(1, 1.0, 1.0, 2.0, 0.5, GrowthBound::Improved), 3);
        // a = 2, g = 1, d = 2 gives χ = 4·(1/8) + 2·(1/4) = 1 for U(1)
        let p = PhysicalParams { a: 2.0, g: 1.0, d: 2, n: 2, lambda0: 1, time: 1.0, epsilon: 0.5, ..Default::default() };
        assert!((growth_rate(&p.couplings(), 1) - 1.0).abs() < 1e-15);
        assert_eq!(truncation_growth(&p, 1), 3);
    }

    #[test]
    fn growth_loose_exceeds_improved_at_zero_time() {
        let p = PhysicalParams { time: 0.0, lambda0: 2, ..Default::default() };
        assert!(truncation_growth_with(&p, 1, GrowthBound::Loose) > 2);
    }

    #[test]
    fn plaquette_examples() {
        assert_eq!(plaquette_count(2, 1).unwrap(), 1);
        assert_eq!(plaquette_count(2, 4).unwrap(), 16);
        assert_eq!(plaquette_count(3, 2).unwrap(), 36);
        assert_eq!(plaquette_count(1, 4), Err(ModelError::NoPlaquettes(1)));
    }

    /// Counts unit squares of an open lattice with `n + 1` vertices per side.
    fn enumerate_plaquettes(d: u32, n: u64) -> u128 {
        let side = n + 1;
        let total = side.pow(d);
        let mut count = 0;
        for idx in 0..total {
            let mut coord = vec![0u64; d as usize];
            let mut r = idx;
            for c in coord.iter_mut() {
                *c = r % side;
                r /= side;
            }
            for mu in 0..d as usize {
                for nu in mu + 1..d as usize {
                    if coord[mu] + 1 < side && coord[nu] + 1 < side {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn plaquette_enumeration_oracle() {
        for d in 2..=3 {
            for n in 1..=4 {
                assert_eq!(plaquette_count(d, n).unwrap(), enumerate_plaquettes(d, n), "d={d} N={n}");
            }
        }
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(10), 4);
        assert_eq!(ceil_log2_f(1e3), 10);
        assert_eq!(ceil_log2_f(1e8), 27);
        assert_eq!(ceil_log2_f(1024.0), 10);
        assert_eq!(ceil_log2_f(0.5), 0);
    }

    #[test]
    fn config_parsing() {
        let text = "# heavy-ion point\na = 0.01\ng=10\nm: 10\nd = 3\nN = 100\nlambda = 12\nlambda0 = 1\ntime = 5\nepsilon = 1e-3\ngroup = su2\n";
        let p = PhysicalParams::from_config_str(text).unwrap();
        assert_eq!(p.a, 0.01);
        assert_eq!(p.d, 3);
        assert_eq!(p.n, 100);
        assert_eq!(p.lambda, 12);
        assert_eq!(p.lambda0, 1);
        assert_eq!(p.group, GaugeGroup::SU2);
        assert!(PhysicalParams::from_config_str("bogus = 1").is_err());
        assert!(PhysicalParams::from_config_str("epsilon = 2").is_err());
        assert!(PhysicalParams::from_config_str("a 1").is_err());
    }

    #[test]
    fn group_parsing() {
        assert_eq!("SU3".parse::<GaugeGroup>().unwrap(), GaugeGroup::SU3);
        assert!("so3".parse::<GaugeGroup>().is_err());
        for g in GaugeGroup::ALL {
            assert_eq!(g.to_string().parse::<GaugeGroup>().unwrap(), g);
            assert_eq!(g.link_operator_count(), g.n_colors().pow(2));
        }
    }
}
