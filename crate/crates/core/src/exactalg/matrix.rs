//! Exact dense matrices with rank and kernel computation: fraction-free
//! (Bareiss) elimination over the rationals, pivoted Gaussian elimination
//! over prime fields. Deterministic: the pivot is always the first nonzero
//! entry in column order.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::numtheory::{inv_mod, mul_mod, sub_mod};
use super::scalar::{ExactScalar, Field};
use crate::error::{Error, Result};

/// A dense row-major matrix over a single exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    /// Build a matrix from row-major entries, validating shape and that all
    /// entries belong to `field`.
    pub fn new(rows: usize, cols: usize, field: Field, entries: Vec<ExactScalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::MixedField);
        }
        Ok(ExactMatrix { rows, cols, field, entries })
    }

    /// Zero matrix.
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            *m.entry_mut(i, i) = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entry(&self, r: usize, c: usize) -> &ExactScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut ExactScalar {
        &mut self.entries[r * self.cols + c]
    }

    /// Matrix-vector product; used to verify kernel vectors.
    pub fn mul_vector(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        if v.iter().any(|e| e.field() != self.field) {
            return Err(Error::MixedField);
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = self.field.zero();
            for c in 0..self.cols {
                if !self.entry(r, c).is_zero() && !v[c].is_zero() {
                    acc = &acc + &(self.entry(r, c) * &v[c]);
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Prime(q) => rank_mod(&self.to_residues(q), self.rows, self.cols, q),
            Field::Rationals => rank_bareiss(self.to_scaled_integer_rows()),
        }
    }

    /// A basis of the right kernel: `cols - rank` vectors `v` with `M v = 0`.
    pub fn kernel_basis(&self) -> Vec<Vec<ExactScalar>> {
        match self.field {
            Field::Prime(q) => kernel_mod(self.to_residues(q), self.rows, self.cols, q),
            Field::Rationals => kernel_rational(self),
        }
    }

    fn to_residues(&self, _q: u64) -> Vec<u64> {
        self.entries
            .iter()
            .map(|e| e.residue().expect("prime-field matrix"))
            .collect()
    }

    /// Scale each row by the lcm of its denominators: row scaling preserves
    /// rank and lets elimination run on integers.
    fn to_scaled_integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let rats: Vec<&BigRational> = (0..self.cols)
                .map(|c| self.entry(r, c).rational().expect("rational matrix"))
                .collect();
            let mut lcm = BigInt::one();
            for x in &rats {
                lcm = num_integer::lcm(lcm, x.denom().clone());
            }
            out.push(rats.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        }
        out
    }
}

/// Rank over Z/qZ by pivoted elimination on residues.
fn rank_mod(entries: &[u64], rows: usize, cols: usize, q: u64) -> usize {
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].to_vec())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = inv_mod(m[rank][col], q).expect("nonzero pivot");
        for c in col..cols {
            m[rank][c] = mul_mod(m[rank][c], inv, q);
        }
        let (pivot_row, rest) = {
            let (a, b) = m.split_at_mut(rank + 1);
            (&a[rank], b)
        };
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor != 0 {
                for c in col..cols {
                    row[c] = sub_mod(row[c], mul_mod(factor, pivot_row[c], q), q);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Kernel over Z/qZ: reduce to RREF, then read the standard basis of the
/// null space from the free columns.
fn kernel_mod(entries: Vec<u64>, rows: usize, cols: usize, q: u64) -> Vec<Vec<ExactScalar>> {
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].to_vec())
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inv_mod(m[rank][col], q).expect("nonzero pivot");
        for c in col..cols {
            m[rank][c] = mul_mod(m[rank][c], inv, q);
        }
        for row in 0..rows {
            if row != rank && m[row][col] != 0 {
                let factor = m[row][col];
                for c in col..cols {
                    m[row][c] = sub_mod(m[row][c], mul_mod(factor, m[rank][c], q), q);
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let field = Field::Prime(q);
    free_column_basis(cols, &pivot_cols, |pivot_idx, free_col| {
        field.from_u64(m[pivot_idx][free_col])
    }, field)
}

/// Rank by Bareiss fraction-free elimination on integer rows.
fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev_pivot = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for row in rank + 1..rows {
            if m[row][col].is_zero() && pivot.is_one() {
                // Row already reduced in this column; scaling by a unit pivot
                // changes nothing.
                continue;
            }
            for c in (col + 1..cols).rev() {
                let num = &pivot * &m[row][c] - &m[row][col] * &m[rank][c];
                m[row][c] = num / &prev_pivot;
            }
            m[row][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Kernel over the rationals by straightforward RREF on `BigRational`.
fn kernel_rational(m: &ExactMatrix) -> Vec<Vec<ExactScalar>> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| m.entry(r, c).rational().expect("rational matrix").clone())
                .collect()
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for c in col..cols {
            let v = &a[rank][c] * &inv;
            a[rank][c] = v;
        }
        for row in 0..rows {
            if row != rank && !a[row][col].is_zero() {
                let factor = a[row][col].clone();
                for c in col..cols {
                    let v = &a[row][c] - &factor * &a[rank][c];
                    a[row][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    free_column_basis(cols, &pivot_cols, |pivot_idx, free_col| {
        ExactScalar::Rat(a[pivot_idx][free_col].clone())
    }, Field::Rationals)
}

/// Assemble kernel vectors from an RREF: one per free column, with 1 in the
/// free position and minus the pivot-row entries elsewhere.
fn free_column_basis<F>(
    cols: usize,
    pivot_cols: &[usize],
    rref_entry: F,
    field: Field,
) -> Vec<Vec<ExactScalar>>
where
    F: Fn(usize, usize) -> ExactScalar,
{
    let pivot_set: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for free_col in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free_col] = field.one();
        for (pivot_idx, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rref_entry(pivot_idx, free_col);
        }
        basis.push(v);
    }
    basis
}
