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

//! Brute-force oracles used by the test suite and the `verify-circuits` command.
//!
//! Everything here works on explicit dense matrices or exhaustive enumeration and shares
//! no code path with the symplectic or sign-magnitude implementations it checks.

use num_complex::Complex64;

use crate::circuits::{fastforward_phase_check, sid_apply, sid_apply_total, SignedRegister};
use crate::pauli::{matrix_element_phase, pauli_to_symplectic, symplectic_product};

/// Row-major dense complex matrix of size `dim × dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense {
    pub dim: usize,
    pub data: Vec<Complex64>,
}

impl Dense {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Dense { dim, data }
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    pub fn matmul(&self, other: &Dense) -> Dense {
        let n = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Dense { dim: n, data }
    }

    pub fn kron(&self, other: &Dense) -> Dense {
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        data[(i * m + k) * dim + j * m + l] = self.get(i, j) * other.get(k, l);
                    }
                }
            }
        }
        Dense { dim, data }
    }

    pub fn scale(&self, s: Complex64) -> Dense {
        Dense { dim: self.dim, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn approx_eq(&self, other: &Dense, tol: f64) -> bool {
        self.dim == other.dim && self.data.iter().zip(&other.data).all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.data.iter().all(|v| v.norm() <= tol)
    }

    pub fn sub(&self, other: &Dense) -> Dense {
        Dense { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 2×2 matrix of a single Pauli letter.
pub fn letter_matrix(letter: char) -> Dense {
    let z = c(0.0, 0.0);
    let data = match letter {
        'I' => vec![c(1.0, 0.0), z, z, c(1.0, 0.0)],
        'X' => vec![z, c(1.0, 0.0), c(1.0, 0.0), z],
        'Y' => vec![z, c(0.0, -1.0), c(0.0, 1.0), z],
        'Z' => vec![c(1.0, 0.0), z, z, c(-1.0, 0.0)],
        other => panic!("not a Pauli letter: {other}"),
    };
    Dense { dim: 2, data }
}

/// Dense matrix of a letter string; qubit 0 is the most significant tensor factor.
pub fn pauli_matrix(label: &str) -> Dense {
    label.chars().fold(Dense::identity(1), |acc, l| acc.kron(&letter_matrix(l)))
}

/// Basis index of a bit string, qubit 0 most significant.
pub fn basis_index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

fn all_labels(n: usize) -> Vec<String> {
    let letters = ['I', 'X', 'Y', 'Z'];
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out.iter().flat_map(|s| letters.iter().map(move |l| format!("{s}{l}"))).collect();
    }
    out
}

fn all_bits(n: usize) -> Vec<Vec<bool>> {
    (0..1usize << n).map(|v| (0..n).map(|k| (v >> (n - 1 - k)) & 1 == 1).collect()).collect()
}

/// Outcome of one oracle run.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Symplectic anticommutation versus dense commutators for every pair of strings on `n` qubits.
pub fn check_commutation(max_n: usize) -> OracleReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=max_n {
        let labels = all_labels(n);
        let mats: Vec<Dense> = labels.iter().map(|l| pauli_matrix(l)).collect();
        for (i, li) in labels.iter().enumerate() {
            let u = pauli_to_symplectic(li).expect("valid label");
            for (j, lj) in labels.iter().enumerate() {
                let v = pauli_to_symplectic(lj).expect("valid label");
                let ab = mats[i].matmul(&mats[j]);
                let ba = mats[j].matmul(&mats[i]);
                let dense_anti = !ab.sub(&ba).is_zero(1e-12);
                cases += 1;
                if symplectic_product(&u, &v).expect("same length") != dense_anti {
                    failures.push(format!("{li} vs {lj}"));
                }
            }
        }
    }
    OracleReport { name: "symplectic commutation vs dense commutators", cases, failures }
}

/// Operator `(−i)^{a·b} X^a Z^b` as a dense matrix.
fn value_oracle_operator(a: &[bool], b: &[bool]) -> Dense {
    let mut op = Dense::identity(1);
    let mut ab = 0;
    for k in 0..a.len() {
        let mut m = Dense::identity(2);
        if a[k] {
            m = m.matmul(&letter_matrix('X'));
        }
        if b[k] {
            m = m.matmul(&letter_matrix('Z'));
        }
        if a[k] && b[k] {
            ab += 1;
        }
        op = op.kron(&m);
    }
    let phase = [c(1.0, 0.0), c(0.0, -1.0), c(-1.0, 0.0), c(0.0, 1.0)][ab % 4];
    op.scale(phase)
}

/// Matrix-element phase versus dense amplitudes `⟨f⊕a| P(a,b) |f⟩` for all inputs up to `max_n` bits.
pub fn check_matrix_element_phase(max_n: usize) -> OracleReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=max_n {
        let vecs = all_bits(n);
        for a in &vecs {
            for b in &vecs {
                let op = value_oracle_operator(a, b);
                // the operator must be Hermitian
                let herm = (0..op.dim).all(|r| (0..op.dim).all(|cc| (op.get(r, cc) - op.get(cc, r).conj()).norm() < 1e-12));
                if !herm {
                    failures.push(format!("P(a={a:?}, b={b:?}) not Hermitian"));
                }
                for f in &vecs {
                    let target: Vec<bool> = f.iter().zip(a).map(|(x, y)| x ^ y).collect();
                    let amp = op.get(basis_index(&target), basis_index(f));
                    let got = matrix_element_phase(f, a, b);
                    cases += 1;
                    if (amp - got).norm() > 1e-12 || (got.norm() - 1.0).abs() > 1e-15 {
                        failures.push(format!("f={f:?} a={a:?} b={b:?}: dense {amp}, formula {got}"));
                    }
                }
            }
        }
    }
    OracleReport { name: "matrix-element phase vs dense amplitudes", cases, failures }
}

/// Exhaustive SID checks: semantics against integer arithmetic, inverse pairs, and bijectivity.
pub fn check_sid(max_p: u32) -> OracleReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in 1..=max_p {
        let states: Vec<SignedRegister> = (0..2u8)
            .flat_map(|s| (0..1u64 << p).map(move |m| SignedRegister { p, sign: s == 1, magnitude: m }))
            .collect();
        let bound = (1i64 << p) - 2;
        for ctrl in [false, true] {
            for inc in [false, true] {
                let mut seen = std::collections::HashSet::new();
                for &r in &states {
                    cases += 1;
                    let out = sid_apply_total(r, ctrl, inc);
                    if ctrl && sid_apply_total(out, true, !inc) != r {
                        failures.push(format!("p={p} inc={inc}: total map not inverted at {r:?}"));
                    }
                    if !seen.insert((out.sign, out.magnitude)) {
                        failures.push(format!("p={p} ctrl={ctrl} inc={inc}: collision at {out:?}"));
                    }
                    if out.magnitude >= 1 << p {
                        failures.push(format!("p={p}: magnitude overflow {out:?}"));
                    }
                    let canonical = !(r.sign && r.magnitude == 0);
                    let v = r.value();
                    if canonical && v.abs() <= bound {
                        let expect = if !ctrl { v } else if inc { v + 1 } else { v - 1 };
                        match sid_apply(r, ctrl, inc) {
                            Ok(o) => {
                                if o.value() != expect || (o.magnitude == 0 && o.sign) || o != out {
                                    failures.push(format!("p={p} ctrl={ctrl} inc={inc} v={v}: got {o:?}"));
                                }
                                if ctrl && o.value().abs() <= bound {
                                    match sid_apply(o, true, !inc) {
                                        Ok(back) if back == r => {}
                                        other => failures.push(format!("p={p} v={v}: inverse gave {other:?}")),
                                    }
                                }
                            }
                            Err(e) => failures.push(format!("p={p} v={v}: unexpected error {e}")),
                        }
                    } else if canonical && sid_apply(r, ctrl, inc).is_ok() {
                        failures.push(format!("p={p} v={v}: precondition violation accepted"));
                    }
                }
                if seen.len() != states.len() {
                    failures.push(format!("p={p} ctrl={ctrl} inc={inc}: not a bijection"));
                }
            }
        }
    }
    OracleReport { name: "SID exhaustive semantics and bijection", cases, failures }
}

/// Bitwise phase accumulation versus `e^{-i t k²}` for `|k| ≤ max_k` and a fixed set of times.
pub fn check_fastforward(max_k: i64, times: &[f64]) -> OracleReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    let bits = 64 - ((max_k * max_k) as u64).leading_zeros();
    for k in -max_k..=max_k {
        for &t in times {
            cases += 1;
            let direct = Complex64::from_polar(1.0, -t * (k * k) as f64);
            match fastforward_phase_check(k, t, bits.max(1)) {
                Ok(p) if (p - direct).norm() <= 1e-12 && (p.norm() - 1.0).abs() <= 1e-12 => {}
                Ok(p) => failures.push(format!("k={k} t={t}: {p} vs {direct}")),
                Err(e) => failures.push(format!("k={k} t={t}: {e}")),
            }
        }
    }
    OracleReport { name: "fast-forward phase identity", cases, failures }
}

/// Deterministic spread of times in `[0, 2π)` (golden-ratio sequence).
pub fn probe_times(count: usize) -> Vec<f64> {
    let phi = 0.618_033_988_749_895_f64;
    (1..=count).map(|j| (j as f64 * phi).fract() * std::f64::consts::TAU).collect()
}

/// Runs every circuit-level oracle at the sizes used by the acceptance suite.
pub fn run_all() -> Vec<OracleReport> {
    vec![
        check_sid(4),
        check_matrix_element_phase(3),
        check_fastforward(15, &probe_times(20)),
        check_commutation(3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_letters_multiply() {
        let xy = letter_matrix('X').matmul(&letter_matrix('Y'));
        assert!(xy.approx_eq(&letter_matrix('Z').scale(c(0.0, 1.0)), 1e-15));
    }

    #[test]
    fn symplectic_mul_matches_dense() {
        for a in all_labels(2) {
            for b in all_labels(2) {
                for pa in 0..4u8 {
                    let u = pauli_to_symplectic(&a).unwrap().with_phase(pa);
                    let v = pauli_to_symplectic(&b).unwrap();
                    let w = u.mul(&v).unwrap();
                    let lhs = pauli_matrix(&a).scale(u.phase()).matmul(&pauli_matrix(&b));
                    let rhs = pauli_matrix(&w.label()).scale(w.phase());
                    assert!(lhs.approx_eq(&rhs, 1e-12), "{u} * {v} = {w}");
                }
            }
        }
    }

    #[test]
    fn spec_phase_example_via_dense() {
        // a = (1,1), b = (1,0), f = (1,0)
        let (f, a, b) = (vec![true, false], vec![true, true], vec![true, false]);
        let op = value_oracle_operator(&a, &b);
        let amp = op.get(basis_index(&[false, true]), basis_index(&f));
        assert!((amp - c(0.0, 1.0)).norm() < 1e-12);
    }
}
