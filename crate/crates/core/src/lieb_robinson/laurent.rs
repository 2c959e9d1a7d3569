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

//! Laurent polynomials with coefficients in F2.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;

/// Sum of distinct monomials `x^e`, `e ∈ Z^d`; each present monomial has coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    d_vars: usize,
    terms: BTreeSet<Vec<i32>>,
}

impl LaurentPoly {
    pub fn zero(d_vars: usize) -> Self {
        LaurentPoly { d_vars, terms: BTreeSet::new() }
    }

    pub fn one(d_vars: usize) -> Self {
        Self::monomial(vec![0; d_vars])
    }

    pub fn monomial(exponent: Vec<i32>) -> Self {
        let d_vars = exponent.len();
        let mut terms = BTreeSet::new();
        terms.insert(exponent);
        LaurentPoly { d_vars, terms }
    }

    /// Sum of monomials with F2 cancellation of repeats.
    pub fn from_exponents<I: IntoIterator<Item = Vec<i32>>>(d_vars: usize, exps: I) -> Self {
        let mut p = LaurentPoly::zero(d_vars);
        for e in exps {
            assert_eq!(e.len(), d_vars, "exponent length");
            p.toggle(e);
        }
        p
    }

    fn toggle(&mut self, e: Vec<i32>) {
        if !self.terms.remove(&e) {
            self.terms.insert(e);
        }
    }

    pub fn d_vars(&self) -> usize {
        self.d_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.terms.iter()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for e in &other.terms {
            out.toggle(e.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.d_vars);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        out
    }

    /// Substitutes every variable by its inverse.
    pub fn dagger(&self) -> LaurentPoly {
        LaurentPoly { d_vars: self.d_vars, terms: self.terms.iter().map(|e| e.iter().map(|v| -v).collect()).collect() }
    }

    /// Evaluates `Σ exp(i k·e)` over the monomials, for a complex wavevector `k`.
    pub fn eval(&self, k: &[Complex64]) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        self.terms
            .iter()
            .map(|e| {
                let dot: Complex64 = e.iter().zip(k).map(|(&n, kk)| kk * n as f64).sum();
                (i * dot).exp()
            })
            .sum()
    }

    /// Evaluation at the purely imaginary wavevector `k = iκ s`: `Σ exp(−κ s·e)`.
    pub fn eval_imag(&self, kappa: f64, signs: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|e| {
                let dot: f64 = e.iter().zip(signs).map(|(&n, s)| n as f64 * s).sum();
                (-kappa * dot).exp()
            })
            .sum()
    }
}

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for e in &self.terms {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let mut wrote = false;
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let name = VAR_NAMES.get(v).map(|s| s.to_string()).unwrap_or_else(|| format!("x{v}"));
                if p == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{p}")?;
                }
                wrote = true;
            }
            if !wrote {
                f.write_str("1")?;
            }
        }
        Ok(())
    }
}
