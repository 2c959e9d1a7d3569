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

//! Encoded Hamiltonian terms and their line-oriented text format.
//!
//! One term per line, whitespace separated:
//!
//! ```text
//! coeff  pauli  boson-actions  origin  anchor
//! 0.25   +iXYI  3:00:l         gmh     0>1#1
//! ```
//!
//! `pauli` carries a phase prefix (`+`, `+i`, `-`, `-i`). `boson-actions` is a comma list of
//! `link:ab:{r,l,n}` (raise, lower, none; `ab` the colour pair) or `-` when empty. `origin` is
//! one of `mass`, `gmh`, `gmv`, `mag`, `aux`. `anchor` is `site>partner#component`.
//! Coefficients are written in shortest round-trip form, so parsing is bit-exact.

use std::fmt;
use std::str::FromStr;

use super::{PauliError, SymplecticVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrigin {
    Mass,
    GaugeMatterH,
    GaugeMatterV,
    Magnetic,
    Aux,
}

impl TermOrigin {
    fn tag(self) -> &'static str {
        match self {
            TermOrigin::Mass => "mass",
            TermOrigin::GaugeMatterH => "gmh",
            TermOrigin::GaugeMatterV => "gmv",
            TermOrigin::Magnetic => "mag",
            TermOrigin::Aux => "aux",
        }
    }

    pub fn is_fermionic(self) -> bool {
        matches!(self, TermOrigin::Mass | TermOrigin::GaugeMatterH | TermOrigin::GaugeMatterV)
    }
}

impl FromStr for TermOrigin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "mass" => TermOrigin::Mass,
            "gmh" => TermOrigin::GaugeMatterH,
            "gmv" => TermOrigin::GaugeMatterV,
            "mag" => TermOrigin::Magnetic,
            "aux" => TermOrigin::Aux,
            other => return Err(format!("unknown origin `{other}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkAction {
    Raise,
    Lower,
    None,
}

impl LinkAction {
    pub fn flipped(self) -> Self {
        match self {
            LinkAction::Raise => LinkAction::Lower,
            LinkAction::Lower => LinkAction::Raise,
            LinkAction::None => LinkAction::None,
        }
    }
}

/// Symbolic action on a gauge link, with the colour indices of the link operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BosonAction {
    pub link: usize,
    pub colors: (u8, u8),
    pub action: LinkAction,
}

impl BosonAction {
    pub fn adjoint(self) -> Self {
        BosonAction { action: self.action.flipped(), ..self }
    }
}

impl fmt::Display for BosonAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match self.action {
            LinkAction::Raise => 'r',
            LinkAction::Lower => 'l',
            LinkAction::None => 'n',
        };
        write!(f, "{}:{}{}:{}", self.link, self.colors.0, self.colors.1, a)
    }
}

impl FromStr for BosonAction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let (Some(link), Some(colors), Some(act), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(format!("malformed boson action `{s}`"));
        };
        let link = link.parse().map_err(|e| format!("link id `{link}`: {e}"))?;
        let cb = colors.as_bytes();
        if cb.len() != 2 || !cb.iter().all(u8::is_ascii_digit) {
            return Err(format!("colour pair `{colors}`"));
        }
        let action = match act {
            "r" => LinkAction::Raise,
            "l" => LinkAction::Lower,
            "n" => LinkAction::None,
            other => return Err(format!("action `{other}`")),
        };
        Ok(BosonAction { link, colors: (cb[0] - b'0', cb[1] - b'0'), action })
    }
}

/// Which sites a term couples and which expansion component it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TermAnchor {
    pub site: usize,
    pub partner: usize,
    pub component: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EncodedTerm {
    pub coeff: f64,
    pub pauli: SymplecticVec,
    pub boson_actions: Vec<BosonAction>,
    pub origin: TermOrigin,
    pub anchor: TermAnchor,
}

impl EncodedTerm {
    /// Hermitian conjugate: conjugated phase and flipped link actions.
    pub fn adjoint(&self) -> EncodedTerm {
        EncodedTerm {
            coeff: self.coeff,
            pauli: self.pauli.adjoint(),
            boson_actions: self.boson_actions.iter().map(|b| b.adjoint()).collect(),
            origin: self.origin,
            anchor: self.anchor,
        }
    }

    /// True when the term is its own conjugate.
    pub fn is_self_adjoint(&self) -> bool {
        self.pauli.is_hermitian() && self.boson_actions.iter().all(|b| b.action == LinkAction::None)
    }
}

impl fmt::Display for EncodedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let actions = if self.boson_actions.is_empty() {
            "-".to_string()
        } else {
            self.boson_actions.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",")
        };
        let a = self.anchor;
        write!(
            f,
            "{:?} {} {} {} {}>{}#{}",
            self.coeff,
            self.pauli,
            actions,
            self.origin.tag(),
            a.site,
            a.partner,
            a.component
        )
    }
}

fn parse_line(line: &str) -> Result<EncodedTerm, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [coeff, pauli, actions, origin, anchor] = fields[..] else {
        return Err(format!("expected 5 fields, found {}", fields.len()));
    };
    let coeff: f64 = coeff.parse().map_err(|e| format!("coefficient `{coeff}`: {e}"))?;
    let pauli: SymplecticVec = pauli.parse().map_err(|e: PauliError| e.to_string())?;
    let boson_actions = if actions == "-" {
        Vec::new()
    } else {
        actions.split(',').map(str::parse).collect::<Result<_, _>>()?
    };
    let origin = origin.parse()?;
    let (site, rest) = anchor.split_once('>').ok_or("anchor missing `>`")?;
    let (partner, component) = rest.split_once('#').ok_or("anchor missing `#`")?;
    let num = |s: &str| s.parse::<usize>().map_err(|e| format!("anchor `{anchor}`: {e}"));
    let anchor = TermAnchor {
        site: num(site)?,
        partner: num(partner)?,
        component: num(component)? as u8,
    };
    Ok(EncodedTerm { coeff, pauli, boson_actions, origin, anchor })
}

pub fn write_terms(terms: &[EncodedTerm]) -> String {
    let mut out = String::new();
    for t in terms {
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out
}

/// Parses the text format; blank lines and `#` comments are skipped.
pub fn parse_terms(text: &str) -> Result<Vec<EncodedTerm>, PauliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_line(l).map_err(|reason| PauliError::Parse { line: i + 1, reason }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_round_trip() {
        let b = BosonAction { link: 17, colors: (2, 0), action: LinkAction::Lower };
        assert_eq!(b.to_string(), "17:20:l");
        assert_eq!("17:20:l".parse::<BosonAction>().unwrap(), b);
        assert!("17:2:l".parse::<BosonAction>().is_err());
        assert!("17:20:q".parse::<BosonAction>().is_err());
    }

    #[test]
    fn line_round_trip_is_bit_exact() {
        let t = EncodedTerm {
            coeff: 0.1 + 0.2,
            pauli: "-iXYZI".parse().unwrap(),
            boson_actions: vec![BosonAction { link: 3, colors: (0, 1), action: LinkAction::Raise }],
            origin: TermOrigin::GaugeMatterV,
            anchor: TermAnchor { site: 0, partner: 3, component: 2 },
        };
        let text = write_terms(std::slice::from_ref(&t));
        let back = parse_terms(&text).unwrap();
        assert_eq!(back[0].coeff.to_bits(), t.coeff.to_bits());
        assert_eq!(back[0], t);
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = parse_terms("# header\n1.0 +XX - mass\n").unwrap_err();
        assert!(matches!(err, PauliError::Parse { line: 2, .. }));
    }
}
