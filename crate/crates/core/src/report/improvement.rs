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

//! Space-time volume ratios and significant-figure arithmetic.

use serde::Serialize;

use super::{Printed, ReportError};

/// `(T_trotter · Q_trotter) / (T_qubit · Q_qubit)`.
pub fn improvement(t_trotter: f64, q_trotter: f64, t_qubit: f64, q_qubit: f64) -> Result<f64, ReportError> {
    for (name, v) in [("T_Trotter", t_trotter), ("Q_Trotter", q_trotter), ("T_Qubit", t_qubit), ("Q_Qubit", q_qubit)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(ReportError::NonPositive(format!("{name} = {v}")));
        }
    }
    Ok((t_trotter * q_trotter) / (t_qubit * q_qubit))
}

/// Scientific notation with `sig` significant figures, e.g. `4.4e3`.
pub fn format_sig(x: f64, sig: usize) -> String {
    format!("{:.*e}", sig.saturating_sub(1), x)
}

pub fn round_sig(x: f64, sig: usize) -> f64 {
    format_sig(x, sig).parse().expect("formatted float parses")
}

/// Range of ratios compatible with the printed (rounded) inputs, compared with the printed ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalCheck {
    pub point: f64,
    pub lo: f64,
    pub hi: f64,
    pub printed: f64,
    /// Point estimate rounds to the printed ratio.
    pub point_match: bool,
    /// Some choice of unrounded inputs reproduces a value that rounds to the printed ratio.
    pub consistent: bool,
}

pub fn interval_check(t_trotter: &Printed, q_trotter: &Printed, t_qubit: &Printed, q_qubit: &Printed, printed: &Printed) -> Result<IntervalCheck, ReportError> {
    let point = improvement(t_trotter.value, q_trotter.value, t_qubit.value, q_qubit.value)?;
    let lo = (t_trotter.lower() * q_trotter.lower()) / (t_qubit.upper() * q_qubit.upper());
    let hi = (t_trotter.upper() * q_trotter.upper()) / (t_qubit.lower() * q_qubit.lower());
    Ok(IntervalCheck {
        point,
        lo,
        hi,
        printed: printed.value,
        point_match: format_sig(point, printed.sig as usize) == format_sig(printed.value, printed.sig as usize),
        consistent: lo <= printed.upper() && hi >= printed.lower(),
    })
}
