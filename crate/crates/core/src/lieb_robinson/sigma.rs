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

//! Translation-invariant symplectic matrices over `F2[x, x⁻¹]`.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{LaurentPoly, LrError};

/// Bilinear form used to decide anticommutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// Identity: rows are Majorana operators.
    Majorana,
    /// Off-diagonal identity blocks: rows are `n` X bits followed by `n` Z bits.
    Pauli,
}

/// `rows × cols` matrix of Laurent polynomials; one column per translation class of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMatrix {
    rows: usize,
    cols: usize,
    d_vars: usize,
    entries: Vec<LaurentPoly>,
}

impl SigmaMatrix {
    pub fn new(rows: usize, cols: usize, d_vars: usize) -> Self {
        SigmaMatrix { rows, cols, d_vars, entries: vec![LaurentPoly::zero(d_vars); rows * cols] }
    }

    pub fn from_columns(rows: usize, d_vars: usize, columns: Vec<Vec<LaurentPoly>>) -> Result<Self, LrError> {
        let cols = columns.len();
        let mut m = SigmaMatrix::new(rows, cols, d_vars);
        for (c, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(LrError::Dimension(format!("column {c} has {} rows, expected {rows}", col.len())));
            }
            for (r, p) in col.into_iter().enumerate() {
                m.set(r, c, p);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn d_vars(&self) -> usize {
        self.d_vars
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        self.entries[r * self.cols + c] = p;
    }

    /// `σ† Λ σ` reduced mod 2, a `cols × cols` Laurent matrix.
    pub fn gram(&self, form: FormKind) -> Result<LaurentMatrix, LrError> {
        let n = self.rows / 2;
        if form == FormKind::Pauli && self.rows % 2 != 0 {
            return Err(LrError::Dimension("Pauli form needs an even number of rows".into()));
        }
        let partner = |r: usize| match form {
            FormKind::Majorana => r,
            FormKind::Pauli => (r + n) % (2 * n),
        };
        let mut out = LaurentMatrix { size: self.cols, d_vars: self.d_vars, entries: Vec::new() };
        for i in 0..self.cols {
            for j in 0..self.cols {
                let mut acc = LaurentPoly::zero(self.d_vars);
                for r in 0..self.rows {
                    acc = acc.add(&self.get(r, i).dagger().mul(self.get(partner(r), j)));
                }
                out.entries.push(acc);
            }
        }
        Ok(out)
    }
}

/// Square matrix of Laurent polynomials, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    d_vars: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    /// Entry `(i, j)` equals entry `(j, i)` with every exponent negated.
    pub fn is_dagger_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| *self.get(i, j) == self.get(j, i).dagger()))
    }
}

/// Reduced Gram matrix paired with the coefficient vector `c`.
#[derive(Debug, Clone)]
pub struct CoeffMatrix {
    pub gram: LaurentMatrix,
    pub c: Vec<f64>,
}

impl CoeffMatrix {
    pub fn new(sig: &SigmaMatrix, c: &[f64], form: FormKind) -> Result<Self, LrError> {
        if c.len() != sig.cols() {
            return Err(LrError::Dimension(format!("{} coefficients for {} terms", c.len(), sig.cols())));
        }
        Ok(CoeffMatrix { gram: sig.gram(form)?, c: c.to_vec() })
    }

    /// `(c cᵀ) ⊙ f(k)` at a complex wavevector.
    pub fn at(&self, k: &[Complex64]) -> Result<DMatrix<Complex64>, LrError> {
        if k.len() != self.gram.d_vars {
            return Err(LrError::Dimension(format!("wavevector has {} components, expected {}", k.len(), self.gram.d_vars)));
        }
        let n = self.gram.size;
        Ok(DMatrix::from_fn(n, n, |i, j| self.gram.get(i, j).eval(k) * (self.c[i] * self.c[j])))
    }

    /// Real nonnegative matrix at `k = iκ s`.
    pub fn at_imag(&self, kappa: f64, signs: &[f64]) -> Result<DMatrix<f64>, LrError> {
        if signs.len() != self.gram.d_vars {
            return Err(LrError::Dimension(format!("sign vector has {} components, expected {}", signs.len(), self.gram.d_vars)));
        }
        let n = self.gram.size;
        Ok(DMatrix::from_fn(n, n, |i, j| self.gram.get(i, j).eval_imag(kappa, signs) * self.c[i] * self.c[j]))
    }
}

pub fn coeff_matrix_at(sig: &SigmaMatrix, c: &[f64], k: &[Complex64], form: FormKind) -> Result<DMatrix<Complex64>, LrError> {
    CoeffMatrix::new(sig, c, form)?.at(k)
}

/// `c_j = √2 √|h_j|`.
pub fn coefficient_vector(h: &[f64]) -> Vec<f64> {
    h.iter().map(|v| std::f64::consts::SQRT_2 * v.abs().sqrt()).collect()
}

/// Term on an explicit periodic lattice: the set of (cell, row) bits it occupies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTerm {
    pub support: Vec<(Vec<i64>, usize)>,
}

fn minimal_image(delta: i64, extent: i64) -> i64 {
    let r = delta.rem_euclid(extent);
    if 2 * r > extent {
        r - extent
    } else {
        r
    }
}

type Shape = Vec<(Vec<i32>, usize)>;

/// Canonical translation class of a term and the cell it is anchored at.
fn canonical_shape(term: &LatticeTerm, extent: &[usize]) -> (Shape, Vec<i64>) {
    let mut best: Option<(bool, Shape, Vec<i64>)> = None;
    for (anchor, _) in &term.support {
        let mut shape: Shape = term
            .support
            .iter()
            .map(|(cell, row)| {
                let off = cell
                    .iter()
                    .zip(anchor)
                    .zip(extent)
                    .map(|((c, a), &l)| minimal_image(c - a, l as i64) as i32)
                    .collect();
                (off, *row)
            })
            .collect();
        shape.sort();
        let nonneg = shape.iter().all(|(o, _)| o.iter().all(|&v| v >= 0));
        let better = match &best {
            None => true,
            Some((bn, bs, _)) => (nonneg && !bn) || (nonneg == *bn && shape < *bs),
        };
        if better {
            best = Some((nonneg, shape, anchor.clone()));
        }
    }
    let (_, shape, anchor) = best.expect("term has nonempty support");
    (shape, anchor.iter().zip(extent).map(|(a, &l)| a.rem_euclid(l as i64)).collect())
}

/// Groups explicit lattice terms into translation classes and builds their σ columns.
///
/// `rows` is the number of bits per unit cell (`2n`) and `extent` the periodic lattice size per
/// dimension. Every class must occur at every cell exactly once; otherwise the Hamiltonian is not
/// translation invariant over the declared cell and an error is returned. Columns follow the
/// order in which classes first appear.
pub fn sigma_from_terms(terms: &[LatticeTerm], rows: usize, extent: &[usize]) -> Result<SigmaMatrix, LrError> {
    let d = extent.len();
    let cells: usize = extent.iter().product();
    let mut order: Vec<Shape> = Vec::new();
    let mut anchors: HashMap<Shape, Vec<Vec<i64>>> = HashMap::new();
    for t in terms {
        if t.support.is_empty() {
            return Err(LrError::Dimension("term with empty support".into()));
        }
        for (cell, row) in &t.support {
            if cell.len() != d || *row >= rows {
                return Err(LrError::Dimension(format!("bit ({cell:?}, {row}) outside a {d}-dimensional cell of {rows} rows")));
            }
        }
        let (shape, anchor) = canonical_shape(t, extent);
        let entry = anchors.entry(shape.clone()).or_insert_with(|| {
            order.push(shape.clone());
            Vec::new()
        });
        entry.push(anchor);
    }
    let mut columns = Vec::with_capacity(order.len());
    for shape in &order {
        let mut seen = anchors[shape].clone();
        seen.sort();
        seen.dedup();
        if seen.len() != cells || anchors[shape].len() != cells {
            return Err(LrError::NotTranslationInvariant {
                class: columns.len(),
                found: anchors[shape].len(),
                cells,
            });
        }
        let mut col = vec![LaurentPoly::zero(d); rows];
        for (off, row) in shape {
            col[*row] = col[*row].add(&LaurentPoly::monomial(off.clone()));
        }
        columns.push(col);
    }
    SigmaMatrix::from_columns(rows, d, columns)
}
