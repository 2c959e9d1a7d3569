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

//! Binary symplectic representation of Pauli strings.
//!
//! A [`SymplecticVec`] stands for `i^phase_exp · P_0 ⊗ P_1 ⊗ …` where each `P_k` is the
//! Hermitian letter with `x_k = 1` for X or Y and `z_k = 1` for Y or Z.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::PauliError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVec {
    x: Vec<bool>,
    z: Vec<bool>,
    phase_exp: u8,
}

impl SymplecticVec {
    pub fn identity(n: usize) -> Self {
        SymplecticVec { x: vec![false; n], z: vec![false; n], phase_exp: 0 }
    }

    pub fn from_bits(x: Vec<bool>, z: Vec<bool>, phase_exp: u8) -> Result<Self, PauliError> {
        if x.len() != z.len() {
            return Err(PauliError::LengthMismatch(x.len(), z.len()));
        }
        Ok(SymplecticVec { x, z, phase_exp: phase_exp % 4 })
    }

    /// Single-qubit letter `letter` on qubit `q` of an `n`-qubit register.
    pub fn single(n: usize, q: usize, letter: char) -> Result<Self, PauliError> {
        let mut v = SymplecticVec::identity(n);
        let (x, z) = letter_bits(letter)?;
        v.x[q] = x;
        v.z[q] = z;
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &[bool] {
        &self.x
    }

    pub fn z_bits(&self) -> &[bool] {
        &self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn with_phase(mut self, phase_exp: u8) -> Self {
        self.phase_exp = phase_exp % 4;
        self
    }

    pub fn letter(&self, q: usize) -> char {
        bits_letter(self.x[q], self.z[q])
    }

    /// Letter string without the phase prefix.
    pub fn label(&self) -> String {
        (0..self.n()).map(|q| self.letter(q)).collect()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).filter(|(x, z)| **x || **z).count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&q| self.x[q] || self.z[q]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }

    /// Operator is Hermitian iff the overall phase is real.
    pub fn is_hermitian(&self) -> bool {
        self.phase_exp % 2 == 0
    }

    /// Same letters with the phase conjugated.
    pub fn adjoint(&self) -> Self {
        SymplecticVec { x: self.x.clone(), z: self.z.clone(), phase_exp: (4 - self.phase_exp) % 4 }
    }

    /// True when the two strings have equal letters, ignoring phase.
    pub fn same_letters(&self, other: &SymplecticVec) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// Operator product `self · other` with exact phase tracking.
    pub fn mul(&self, other: &SymplecticVec) -> Result<SymplecticVec, PauliError> {
        if self.n() != other.n() {
            return Err(PauliError::LengthMismatch(self.n(), other.n()));
        }
        // Work in the X^x Z^z basis: letter(x,z) = i^{xz} X^x Z^z.
        let mut exp = self.phase_exp as u32 + other.phase_exp as u32;
        let n = self.n();
        let mut x = vec![false; n];
        let mut z = vec![false; n];
        for q in 0..n {
            let (x1, z1, x2, z2) = (self.x[q] as u32, self.z[q] as u32, other.x[q] as u32, other.z[q] as u32);
            let (x3, z3) = (x1 ^ x2, z1 ^ z2);
            exp += x1 * z1 + x2 * z2 + 2 * z1 * x2 + 3 * x3 * z3;
            x[q] = x3 == 1;
            z[q] = z3 == 1;
        }
        Ok(SymplecticVec { x, z, phase_exp: (exp % 4) as u8 })
    }

    /// Tensor product `self ⊗ other` (self on the low qubit indices).
    pub fn tensor(&self, other: &SymplecticVec) -> SymplecticVec {
        let mut x = self.x.clone();
        x.extend_from_slice(&other.x);
        let mut z = self.z.clone();
        z.extend_from_slice(&other.z);
        SymplecticVec { x, z, phase_exp: (self.phase_exp + other.phase_exp) % 4 }
    }

    pub fn phase(&self) -> Complex64 {
        i_pow(self.phase_exp as u32)
    }
}

impl fmt::Display for SymplecticVec {
    /// Phase prefix (`+`, `+i`, `-`, `-i`) followed by the letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["+", "+i", "-", "-i"][self.phase_exp as usize];
        write!(f, "{prefix}{}", self.label())
    }
}

impl FromStr for SymplecticVec {
    type Err = PauliError;

    /// Accepts an optional phase prefix (`+`, `-`, `+i`, `-i`, `i`) before the letters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else {
            (0, s)
        };
        Ok(pauli_to_symplectic(rest)?.with_phase(phase))
    }
}

fn letter_bits(c: char) -> Result<(bool, bool), PauliError> {
    match c {
        'I' => Ok((false, false)),
        'X' => Ok((true, false)),
        'Y' => Ok((true, true)),
        'Z' => Ok((false, true)),
        other => Err(PauliError::UnknownLetter(other)),
    }
}

fn bits_letter(x: bool, z: bool) -> char {
    match (x, z) {
        (false, false) => 'I',
        (true, false) => 'X',
        (true, true) => 'Y',
        (false, true) => 'Z',
    }
}

pub(crate) fn i_pow(e: u32) -> Complex64 {
    match e % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Parses a bare letter string over `{I, X, Y, Z}` with phase 0.
pub fn pauli_to_symplectic(label: &str) -> Result<SymplecticVec, PauliError> {
    let mut x = Vec::with_capacity(label.len());
    let mut z = Vec::with_capacity(label.len());
    for c in label.chars() {
        let (xb, zb) = letter_bits(c)?;
        x.push(xb);
        z.push(zb);
    }
    Ok(SymplecticVec { x, z, phase_exp: 0 })
}

/// Returns true iff the two strings anticommute: `(u.x·v.z + u.z·v.x) mod 2`.
pub fn symplectic_product(u: &SymplecticVec, v: &SymplecticVec) -> Result<bool, PauliError> {
    if u.n() != v.n() {
        return Err(PauliError::LengthMismatch(u.n(), v.n()));
    }
    let mut acc = false;
    for q in 0..u.n() {
        acc ^= (u.x[q] & v.z[q]) ^ (u.z[q] & v.x[q]);
    }
    Ok(acc)
}

/// Amplitude `(−i)^{a·b} (−1)^{b·f}` of the sparse value oracle.
///
/// This equals `⟨f⊕a| P(a,b) |f⟩` for `P(a,b) = (−i)^{a·b} X^a Z^b`, which is
/// `(−1)^{a·b}` times the Hermitian letter string with `x = a`, `z = b`.
pub fn matrix_element_phase(f: &[bool], a: &[bool], b: &[bool]) -> Complex64 {
    let dot = |u: &[bool], v: &[bool]| u.iter().zip(v).filter(|(p, q)| **p && **q).count() as u32;
    let ab = dot(a, b);
    let bf = dot(b, f);
    // (−i)^{ab} = i^{3ab}; (−1)^{bf} = i^{2bf}
    i_pow(3 * ab + 2 * bf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn label_to_bits() {
        let v = pauli_to_symplectic("XZY").unwrap();
        assert_eq!(v.x_bits(), bits("101"));
        assert_eq!(v.z_bits(), bits("011"));
        assert_eq!(v.phase_exp(), 0);
        let id = pauli_to_symplectic("III").unwrap();
        assert!(id.is_identity());
        assert_eq!(pauli_to_symplectic("XQ"), Err(PauliError::UnknownLetter('Q')));
    }

    #[test]
    fn three_letter_round_trip() {
        let letters = ['I', 'X', 'Y', 'Z'];
        for a in letters {
            for b in letters {
                for c in letters {
                    let s: String = [a, b, c].iter().collect();
                    let v = pauli_to_symplectic(&s).unwrap();
                    assert_eq!(pauli_to_symplectic(&v.label()).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let x = pauli_to_symplectic("X").unwrap();
        let z = pauli_to_symplectic("Z").unwrap();
        assert!(symplectic_product(&x, &z).unwrap());
        let xx = pauli_to_symplectic("XX").unwrap();
        let zz = pauli_to_symplectic("ZZ").unwrap();
        assert!(!symplectic_product(&xx, &zz).unwrap());
        assert!(symplectic_product(&x, &zz).is_err());
    }

    #[test]
    fn letter_multiplication_table() {
        let p = |s: &str| s.parse::<SymplecticVec>().unwrap();
        assert_eq!(p("X").mul(&p("Y")).unwrap(), p("+iZ"));
        assert_eq!(p("Y").mul(&p("X")).unwrap(), p("-iZ"));
        assert_eq!(p("Y").mul(&p("Z")).unwrap(), p("+iX"));
        assert_eq!(p("Z").mul(&p("X")).unwrap(), p("+iY"));
        assert_eq!(p("Y").mul(&p("Y")).unwrap(), p("I"));
        assert_eq!(p("-iXZ").mul(&p("iZZ")).unwrap(), p("-iYI"));
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["+XYZ", "+iIZ", "-YY", "-iXIX"] {
            assert_eq!(s.parse::<SymplecticVec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn phase_examples() {
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(matrix_element_phase(&bits("101"), &bits("110"), &bits("000")), one);
        assert_eq!(matrix_element_phase(&bits("10"), &bits("11"), &bits("10")), Complex64::new(0.0, 1.0));
    }
}
