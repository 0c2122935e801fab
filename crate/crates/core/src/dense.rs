//! Small dense complex linear algebra on qubit registers.
//!
//! Qubit `q` of an `n`-qubit register is bit `n - 1 - q` of the basis index,
//! so qubit 0 is the leftmost character of a basis label such as `"011"`.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

pub type C64 = nalgebra::Complex<f64>;

pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Splits an `n`-qubit index into the kept qubits (in the given order) and
/// the remaining qubits (in ascending order).
#[derive(Clone, Debug)]
pub struct QubitSplit {
    n: usize,
    keep: Vec<usize>,
    rest: Vec<usize>,
}

impl QubitSplit {
    pub fn new(n: usize, keep: &[usize]) -> Result<Self> {
        let mut seen = alloc::vec![false; n];
        for &q in keep {
            if q >= n {
                return Err(Error::InvalidQubits(format!(
                    "qubit {q} out of range for {n} qubits"
                )));
            }
            if seen[q] {
                return Err(Error::InvalidQubits(format!("qubit {q} listed twice")));
            }
            seen[q] = true;
        }
        let rest = (0..n).filter(|q| !seen[*q]).collect();
        Ok(Self {
            n,
            keep: keep.to_vec(),
            rest,
        })
    }

    pub fn kept_dim(&self) -> usize {
        1 << self.keep.len()
    }

    pub fn rest_dim(&self) -> usize {
        1 << self.rest.len()
    }

    fn scatter(&self, value: usize, qubits: &[usize]) -> usize {
        let k = qubits.len();
        qubits.iter().enumerate().fold(0, |acc, (pos, &q)| {
            let bit = (value >> (k - 1 - pos)) & 1;
            acc | (bit << (self.n - 1 - q))
        })
    }

    /// Full register index of (kept index, rest index).
    pub fn compose(&self, kept: usize, rest: usize) -> usize {
        self.scatter(kept, &self.keep) | self.scatter(rest, &self.rest)
    }
}

fn qubit_count(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::InvalidQubits(format!(
            "dimension {dim} is not a power of two"
        )));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Reduced density matrix of a pure state on the `keep` qubits.
pub fn reduce_pure(amplitudes: &[C64], keep: &[usize]) -> Result<DMatrix<C64>> {
    let n = qubit_count(amplitudes.len())?;
    let split = QubitSplit::new(n, keep)?;
    let a = DMatrix::from_fn(split.kept_dim(), split.rest_dim(), |k, e| {
        amplitudes[split.compose(k, e)]
    });
    Ok(&a * a.adjoint())
}

/// Partial trace of a density matrix over every qubit not in `keep`.
pub fn reduce_mixed(rho: &DMatrix<C64>, keep: &[usize]) -> Result<DMatrix<C64>> {
    let n = qubit_count(rho.nrows())?;
    let split = QubitSplit::new(n, keep)?;
    let dim = split.kept_dim();
    let mut out = DMatrix::zeros(dim, dim);
    for e in 0..split.rest_dim() {
        for r in 0..dim {
            let i = split.compose(r, e);
            for c in 0..dim {
                out[(r, c)] += rho[(i, split.compose(c, e))];
            }
        }
    }
    Ok(out)
}

/// Transpose of the `qubit` factor only.
pub fn partial_transpose(rho: &DMatrix<C64>, qubit: usize) -> Result<DMatrix<C64>> {
    let n = qubit_count(rho.nrows())?;
    if qubit >= n {
        return Err(Error::InvalidQubits(format!(
            "qubit {qubit} out of range for {n} qubits"
        )));
    }
    let mask = 1 << (n - 1 - qubit);
    Ok(DMatrix::from_fn(rho.nrows(), rho.ncols(), |r, c| {
        let (rb, cb) = (r & mask, c & mask);
        rho[((r & !mask) | cb, (c & !mask) | rb)]
    }))
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Vec<f64> {
    let mut values: Vec<f64> = SymmetricEigen::new(m.clone())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn max_abs_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn hermiticity_defect(m: &DMatrix<C64>) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

pub fn trace(m: &DMatrix<C64>) -> C64 {
    m.diagonal().iter().sum()
}

pub fn projector(amplitudes: &[C64]) -> DMatrix<C64> {
    let n = amplitudes.len();
    DMatrix::from_fn(n, n, |r, c| amplitudes[r] * amplitudes[c].conj())
}

/// Tensor product of two state vectors (`left` holds the leading qubits).
pub fn kron_vec(left: &[C64], right: &[C64]) -> Vec<C64> {
    left.iter()
        .flat_map(|l| right.iter().map(move |r| l * r))
        .collect()
}
