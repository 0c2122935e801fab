//! Entanglement functionals for the cloner's reduced states.

use core::cmp::Ordering;
use core::fmt;

use alloc::format;
use nalgebra::{DMatrix, SymmetricEigen};
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::dense::{self, c64, C64};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::reduced::{PureThreeQubitState, ThreeCloneMixture, XFormTwoQubitState};
use crate::surd::SurdSum;

/// A concurrence in `[0, 1]`. `exact_zero` is set only when separability
/// was decided by exact arithmetic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConcurrenceValue {
    value: f64,
    exact_zero: bool,
}

impl ConcurrenceValue {
    pub const EXACT_ZERO: Self = Self {
        value: 0.0,
        exact_zero: true,
    };

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn is_exact_zero(&self) -> bool {
        self.exact_zero
    }
}

/// `2 max(|c| - sqrt(a e), 0)` for an X-form state.
///
/// Whether the state is separable is decided exactly from the sign of
/// `c^2 - a e`; the magnitude is evaluated as
/// `2 (c^2 - a e) / (|c| + sqrt(a e))` to avoid cancellation.
pub fn concurrence_x_form(state: &XFormTwoQubitState) -> ConcurrenceValue {
    let ae = state.a() * state.e();
    let gap = &state.c().square() - &SurdSum::from(ae.clone());
    if gap.signum() != Ordering::Greater {
        return ConcurrenceValue::EXACT_ZERO;
    }
    let denom = state.c().to_f64().abs() + rational::to_f64(&ae).sqrt();
    let value = (2.0 * gap.to_f64() / denom).clamp(0.0, 1.0);
    ConcurrenceValue {
        value,
        exact_zero: false,
    }
}

fn plogp(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        p * (1.0 / p).log2()
    }
}

/// Entanglement of formation of a two-qubit state with concurrence `c`.
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::ConcurrenceOutOfRange(c));
    }
    let x = (1.0 + (1.0 - c * c).sqrt()) / 2.0;
    Ok(plogp(x) + plogp(1.0 - x))
}

/// Closed-form clone-ancilla concurrence of the `1 -> M` cloner,
/// `(1/3) ((M+2)/M - sqrt((M-2)/M))`.
pub fn concurrence_clone_ancilla_closed(m: u32) -> Result<f64> {
    if m < 2 {
        return Err(Error::TooFewOutputs {
            what: "clone-ancilla concurrence",
            min: 2,
            m,
        });
    }
    let m = m as f64;
    let first = (m + 2.0) / m;
    let root = ((m - 2.0) / m).sqrt();
    // first - root = (first^2 - root^2) / (first + root) = (6M + 4) / M^2 / (first + root)
    Ok((6.0 * m + 4.0) / (m * m) / (first + root) / 3.0)
}

pub const DENSITY_TOLERANCE: f64 = 1e-10;

/// Checks Hermiticity, unit trace and positivity to `tol`.
pub fn validate_density_matrix(rho: &DMatrix<C64>, tol: f64) -> Result<()> {
    if rho.nrows() != rho.ncols() {
        return Err(Error::InvalidDensityMatrix(format!(
            "not square: {}x{}",
            rho.nrows(),
            rho.ncols()
        )));
    }
    let herm = dense::hermiticity_defect(rho);
    if herm > tol {
        return Err(Error::InvalidDensityMatrix(format!(
            "not Hermitian (defect {herm:e})"
        )));
    }
    let tr = dense::trace(rho);
    if (tr - c64(1.0, 0.0)).norm() > tol {
        return Err(Error::InvalidDensityMatrix(format!("trace {tr} is not 1")));
    }
    let min = dense::hermitian_eigenvalues(rho)[0];
    if min < -tol {
        return Err(Error::InvalidDensityMatrix(format!(
            "not positive semidefinite (min eigenvalue {min:e})"
        )));
    }
    Ok(())
}

/// Two-qubit concurrence of an arbitrary density matrix.
///
/// With `rho = V V^dagger`, the square roots of the eigenvalues of
/// `rho (Y rho* Y)` (`Y = sigma_y (x) sigma_y`) are the singular values of
/// `V^T Y V`, so no square root of a nearly singular matrix is taken.
pub fn wootters_concurrence(rho: &DMatrix<C64>) -> Result<f64> {
    if rho.shape() != (4, 4) {
        return Err(Error::InvalidDensityMatrix(format!(
            "expected 4x4, got {}x{}",
            rho.nrows(),
            rho.ncols()
        )));
    }
    validate_density_matrix(rho, DENSITY_TOLERANCE)?;

    let eig = SymmetricEigen::new(rho.clone());
    // eigenvalues below the rounding floor are zero
    let floor = 8.0 * f64::EPSILON;
    let factor = DMatrix::from_fn(4, 4, |r, k| {
        let p = eig.eigenvalues[k];
        let weight = if p > floor { p.sqrt() } else { 0.0 };
        eig.eigenvectors[(r, k)] * weight
    });
    let mut flip = DMatrix::<C64>::zeros(4, 4);
    flip[(0, 3)] = c64(-1.0, 0.0);
    flip[(3, 0)] = c64(-1.0, 0.0);
    flip[(1, 2)] = c64(1.0, 0.0);
    flip[(2, 1)] = c64(1.0, 0.0);
    let tau = factor.transpose() * flip * &factor;

    let mut s: alloc::vec::Vec<f64> = tau.singular_values().iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    Ok((s[0] - s[1] - s[2] - s[3]).clamp(0.0, 1.0))
}

/// Residual three-way entanglement `4 |Det|` of a pure three-qubit state,
/// with `Det` Cayley's hyperdeterminant of the amplitude cube.
pub fn three_tangle(state: &PureThreeQubitState) -> f64 {
    let a = state.amplitudes();
    let x = |i: usize| a[i];
    let d1 = x(0b000) * x(0b000) * x(0b111) * x(0b111)
        + x(0b001) * x(0b001) * x(0b110) * x(0b110)
        + x(0b010) * x(0b010) * x(0b101) * x(0b101)
        + x(0b100) * x(0b100) * x(0b011) * x(0b011);
    let d2 = x(0b000) * x(0b111) * x(0b011) * x(0b100)
        + x(0b000) * x(0b111) * x(0b101) * x(0b010)
        + x(0b000) * x(0b111) * x(0b110) * x(0b001)
        + x(0b011) * x(0b100) * x(0b101) * x(0b010)
        + x(0b011) * x(0b100) * x(0b110) * x(0b001)
        + x(0b101) * x(0b010) * x(0b110) * x(0b001);
    let d3 = x(0b000) * x(0b110) * x(0b101) * x(0b011) + x(0b111) * x(0b001) * x(0b010) * x(0b100);
    let det = d1 - d2 * 2.0 + d3 * 4.0;
    (4.0 * det.norm()).min(1.0)
}

/// `C_01^2 + C_02^2 + C_12^2` over the three two-qubit reductions.
pub fn tangle_sum(state: &PureThreeQubitState) -> f64 {
    state
        .pair_reductions()
        .iter()
        .map(|rho| {
            let c = wootters_concurrence(rho).expect("reduction of a normalized state");
            c * c
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NptWitness {
    /// `p1^2 > 3 p0 p2`
    First,
    /// `p2^2 > 3 p1 p3`
    Second,
    Neither,
}

impl NptWitness {
    pub fn as_str(self) -> &'static str {
        match self {
            NptWitness::First => "first",
            NptWitness::Second => "second",
            NptWitness::Neither => "none",
        }
    }
}

impl fmt::Display for NptWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of the partial-transpose test on a three-clone mixture.
///
/// A non-positive partial transpose certifies entanglement. A positive one
/// only rules out distillable tripartite entanglement; it does not prove
/// separability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PptVerdict {
    pub is_npt: bool,
    pub witness: NptWitness,
}

impl PptVerdict {
    pub fn certifies_entanglement(&self) -> bool {
        self.is_npt
    }
}

impl fmt::Display for PptVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_npt { "NPT" } else { "PPT" })
    }
}

/// The partial transpose (on any one qubit) of
/// `p0 |000><000| + p1 P[W(100)] + p2 P[W(110)] + p3 |111><111|`
/// is non-positive iff `p1^2 > 3 p0 p2` or `p2^2 > 3 p1 p3`.
pub fn ppt_three_clone(mix: &ThreeCloneMixture) -> PptVerdict {
    let three = Rational::from_integer(3.into());
    let [p0, p1, p2, p3] = mix.weights();
    let witness = if p1 * p1 > &three * p0 * p2 {
        NptWitness::First
    } else if p2 * p2 > &three * p1 * p3 {
        NptWitness::Second
    } else {
        NptWitness::Neither
    };
    PptVerdict {
        is_npt: witness != NptWitness::Neither,
        witness,
    }
}

#[derive(Clone, Copy)]
enum Pauli {
    X,
    Y,
}

fn pauli_expectation(amps: &[C64; 8], ops: [Pauli; 3]) -> f64 {
    let mut acc = c64(0.0, 0.0);
    for (i, amp) in amps.iter().enumerate() {
        let mut target = i;
        let mut phase = c64(1.0, 0.0);
        for (q, op) in ops.iter().enumerate() {
            let mask = 1 << (2 - q);
            if let Pauli::Y = op {
                // Y|0> = i|1>, Y|1> = -i|0>
                phase *= if i & mask == 0 {
                    c64(0.0, 1.0)
                } else {
                    c64(0.0, -1.0)
                };
            }
            target ^= mask;
        }
        acc += amps[target].conj() * phase * amp;
    }
    acc.re
}

/// `<XXX> - <XYY> - <YXY> - <YYX>`; local realism bounds it by 2.
pub fn mermin_value(state: &PureThreeQubitState) -> f64 {
    use Pauli::{X, Y};
    let a = state.amplitudes();
    pauli_expectation(a, [X, X, X])
        - pauli_expectation(a, [X, Y, Y])
        - pauli_expectation(a, [Y, X, Y])
        - pauli_expectation(a, [Y, Y, X])
}
