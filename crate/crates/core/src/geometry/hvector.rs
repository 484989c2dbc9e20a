//! Hilbert functions and their first differences as finite integer vectors.

use std::fmt;

use crate::error::{Error, Result};

/// Whether the values are a Hilbert function h_Z(0..T) or its first
/// difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HVectorKind {
    Hilbert,
    Difference,
}

/// A finite sequence of nonnegative integers tagged with its meaning. For a
/// zero-dimensional scheme the difference form is finitely supported with
/// total sum deg Z; the Hilbert form is nondecreasing and eventually equal
/// to deg Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    values: Vec<u64>,
    kind: HVectorKind,
}

impl HVector {
    pub fn hilbert(values: Vec<u64>) -> Self {
        HVector { values, kind: HVectorKind::Hilbert }
    }

    /// A difference function; trailing zeros are trimmed so the length is
    /// 1 + (last degree with a nonzero value).
    pub fn difference(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HVector { values, kind: HVectorKind::Difference }
    }

    pub fn kind(&self) -> HVectorKind {
        self.kind
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at degree `t` (0 past the stored range for differences; the
    /// final value for stabilized Hilbert functions).
    pub fn at(&self, t: usize) -> u64 {
        match self.kind {
            HVectorKind::Difference => self.values.get(t).copied().unwrap_or(0),
            HVectorKind::Hilbert => self
                .values
                .get(t)
                .copied()
                .unwrap_or_else(|| self.values.last().copied().unwrap_or(0)),
        }
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }

    /// First difference of a stabilized Hilbert function. Refuses input that
    /// has not flattened out, since the degree-sum check would fail.
    pub fn to_difference(&self) -> Result<HVector> {
        if self.kind != HVectorKind::Hilbert {
            return Err(Error::InvalidInput(
                "difference_function expects a hilbert-kind vector".into(),
            ));
        }
        let n = self.values.len();
        if n < 2 || self.values[n - 1] != self.values[n - 2] {
            return Err(Error::NotStabilized);
        }
        let mut out = Vec::with_capacity(n);
        let mut prev = 0u64;
        for &v in &self.values {
            out.push(v - prev);
            prev = v;
        }
        Ok(HVector::difference(out))
    }

    /// Partial sums of a difference function (the Hilbert function it came
    /// from).
    pub fn to_hilbert(&self) -> Result<HVector> {
        if self.kind != HVectorKind::Difference {
            return Err(Error::InvalidInput(
                "to_hilbert expects a difference-kind vector".into(),
            ));
        }
        let mut acc = 0u64;
        let values = self
            .values
            .iter()
            .map(|&v| {
                acc += v;
                acc
            })
            .collect();
        Ok(HVector::hilbert(values))
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}
