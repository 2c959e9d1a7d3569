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

//! Bundled reference costs, read-only.

use std::str::FromStr;

use serde::Serialize;

use super::ReportError;
use crate::model::GaugeGroup;

pub const REFERENCE_VERSION: u32 = 1;

const BUNDLED: &str = include_str!("../../data/trotter_reference.csv");

/// A number as printed, with its significant-figure count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Printed {
    pub value: f64,
    pub sig: u32,
    pub text: String,
}

impl Printed {
    /// Half a unit in the last printed digit.
    pub fn half_unit(&self) -> f64 {
        if self.value == 0.0 {
            return 0.0;
        }
        let exp = self.value.abs().log10().floor() as i32;
        0.5 * 10f64.powi(exp - self.sig as i32 + 1)
    }

    pub fn lower(&self) -> f64 {
        self.value - self.half_unit()
    }

    pub fn upper(&self) -> f64 {
        self.value + self.half_unit()
    }
}

impl FromStr for Printed {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let value: f64 = text.parse().map_err(|_| ReportError::Reference(format!("not a number: `{text}`")))?;
        let mantissa = text.split(['e', 'E']).next().unwrap_or("");
        let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
        let sig = digits.trim_start_matches('0').len().max(1) as u32;
        Ok(Printed { value, sig, text: text.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub table: String,
    pub group: GaugeGroup,
    pub d: u32,
    pub epsilon: f64,
    pub n: u64,
    pub a: f64,
    pub v_lr: Option<Printed>,
    pub t_trotter: Printed,
    pub t_qubit: Printed,
    pub q_trotter: Printed,
    pub q_qubit: Printed,
    pub improvement: Printed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrotterReference {
    pub version: u32,
    pub rows: Vec<ReferenceRow>,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
}

impl TrotterReference {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled reference data is well formed")
    }

    /// Parses the CSV layout of the bundled file; `#` lines are comments.
    pub fn parse(text: &str) -> Result<Self, ReportError> {
        let mut version = None;
        for line in text.lines() {
            if let Some(v) = line.trim().strip_prefix("# version:") {
                version = v.trim().parse().ok();
            }
        }
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for rec in rdr.records() {
            let rec = rec?;
            let field = |i: usize| rec.get(i).unwrap_or("");
            let num = |i: usize| -> Result<f64, ReportError> {
                field(i).parse().map_err(|_| ReportError::Reference(format!("bad number `{}` in column {i}", field(i))))
            };
            if rec.len() != 12 {
                return Err(ReportError::Reference(format!("expected 12 columns, found {}", rec.len())));
            }
            rows.push(ReferenceRow {
                table: field(0).to_string(),
                group: field(1).parse().map_err(|e: crate::model::ModelError| ReportError::Reference(e.to_string()))?,
                d: num(2)? as u32,
                epsilon: num(3)?,
                n: num(4)? as u64,
                a: num(5)?,
                v_lr: if field(6).is_empty() { None } else { Some(field(6).parse()?) },
                t_trotter: field(7).parse()?,
                t_qubit: field(8).parse()?,
                q_trotter: field(9).parse()?,
                q_qubit: field(10).parse()?,
                improvement: field(11).parse()?,
            });
        }
        Ok(TrotterReference { version: version.unwrap_or(REFERENCE_VERSION), rows })
    }

    pub fn rows_for(&self, group: GaugeGroup) -> impl Iterator<Item = &ReferenceRow> {
        self.rows.iter().filter(move |r| r.group == group)
    }

    pub fn lookup(&self, group: GaugeGroup, epsilon: f64, n: u64, a: f64) -> Option<&ReferenceRow> {
        self.rows.iter().find(|r| r.group == group && r.n == n && close(r.epsilon, epsilon) && close(r.a, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_figures() {
        let p: Printed = "1e11".parse().unwrap();
        assert_eq!((p.value, p.sig), (1e11, 1));
        assert_eq!(p.half_unit(), 0.5e11);
        let q: Printed = "6.0e0".parse().unwrap();
        assert_eq!(q.sig, 2);
        assert!((q.half_unit() - 0.05).abs() < 1e-15);
        assert!("x1".parse::<Printed>().is_err());
    }

    #[test]
    fn bundled_rows() {
        let r = TrotterReference::bundled();
        assert_eq!(r.version, REFERENCE_VERSION);
        assert_eq!(r.rows.len(), 36);
        for g in GaugeGroup::ALL {
            assert_eq!(r.rows_for(g).count(), 12);
        }
        let row = r.lookup(GaugeGroup::SU3, 1e-3, 1000, 1.0).unwrap();
        assert_eq!(row.improvement.value, 2.1e23);
        assert!(r.lookup(GaugeGroup::U1, 1e-5, 100, 0.1).is_none());
        assert!(r.rows_for(GaugeGroup::U1).all(|row| row.v_lr.is_some() && row.d == 2));
    }

    #[test]
    fn malformed() {
        assert!(TrotterReference::parse("table,group\nx,u1\n").is_err());
    }
}
