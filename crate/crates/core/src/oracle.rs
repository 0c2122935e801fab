//! Brute-force ground truth: the cloner output expanded in the full
//! `2^(2M-1)`-dimensional register, reduced by literal partial traces.
//!
//! Register layout: clones are qubits `0..M`, ancilla qubits `M..2M-1`.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use rand::Rng;

use crate::cloner::{output_state, CloneSpec};
use crate::dense::{self, c64, C64};
use crate::error::{Error, Result};
use crate::measures::validate_density_matrix;
use crate::rational;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// 13 qubits, i.e. `M <= 7`.
pub const MAX_QUBITS: usize = 13;
pub const NORM_TOLERANCE: f64 = 1e-12;
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
pub const PSD_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseStateVector {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl DenseStateVector {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        let len = amplitudes.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::InvalidQubits(alloc::format!(
                "{len} amplitudes is not a power of two"
            )));
        }
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                requested: num_qubits,
                limit: MAX_QUBITS,
            });
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Squared Schmidt coefficients across the cut after the first
    /// `leading` qubits, in descending order.
    pub fn schmidt_spectrum(&self, leading: usize) -> Result<Vec<f64>> {
        if leading > self.num_qubits {
            return Err(Error::InvalidQubits(alloc::format!(
                "cut after {leading} of {} qubits",
                self.num_qubits
            )));
        }
        let cols = 1 << (self.num_qubits - leading);
        let rows = 1 << leading;
        let m = DMatrix::from_fn(rows, cols, |r, c| self.amplitudes[r * cols + c]);
        let mut values: Vec<f64> = m.singular_values().iter().map(|s| s * s).collect();
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(values)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseDensityMatrix {
    num_qubits: usize,
    entries: DMatrix<C64>,
}

impl DenseDensityMatrix {
    /// Validates Hermiticity and trace to 1e-12 and positivity to 1e-10.
    pub fn new(entries: DMatrix<C64>) -> Result<Self> {
        let dim = entries.nrows();
        if dim == 0 || !dim.is_power_of_two() || entries.ncols() != dim {
            return Err(Error::InvalidDensityMatrix(alloc::format!(
                "shape {}x{} is not a qubit register",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let herm = dense::hermiticity_defect(&entries);
        if herm > HERMITIAN_TOLERANCE {
            return Err(Error::InvalidDensityMatrix(alloc::format!(
                "Hermiticity defect {herm:e}"
            )));
        }
        let tr = dense::trace(&entries);
        if (tr - c64(1.0, 0.0)).norm() > NORM_TOLERANCE {
            return Err(Error::InvalidDensityMatrix(alloc::format!("trace {tr}")));
        }
        validate_density_matrix(&entries, PSD_TOLERANCE)?;
        Ok(Self {
            num_qubits: dim.trailing_zeros() as usize,
            entries,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dimension(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }
}

/// Anything a subset of qubits can be kept from.
pub trait PartialTrace {
    fn partial_trace(&self, keep: &[usize]) -> Result<DenseDensityMatrix>;
}

impl PartialTrace for DenseStateVector {
    fn partial_trace(&self, keep: &[usize]) -> Result<DenseDensityMatrix> {
        DenseDensityMatrix::new(dense::reduce_pure(&self.amplitudes, keep)?)
    }
}

impl PartialTrace for DenseDensityMatrix {
    fn partial_trace(&self, keep: &[usize]) -> Result<DenseDensityMatrix> {
        DenseDensityMatrix::new(dense::reduce_mixed(&self.entries, keep)?)
    }
}

/// Density matrix of the `keep` qubits (listed order = output qubit order).
pub fn partial_trace<T: PartialTrace + ?Sized>(
    source: &T,
    keep: &[usize],
) -> Result<DenseDensityMatrix> {
    source.partial_trace(keep)
}

fn check_size(requested: usize) -> Result<()> {
    if requested > MAX_QUBITS {
        return Err(Error::TooManyQubits {
            requested,
            limit: MAX_QUBITS,
        });
    }
    Ok(())
}

fn dicke_amplitudes(n_qubits: usize, n_excited: usize) -> Vec<C64> {
    let count = (0..1usize << n_qubits)
        .filter(|i| i.count_ones() as usize == n_excited)
        .count();
    let amp = 1.0 / (count as f64).sqrt();
    (0..1usize << n_qubits)
        .map(|i| {
            if i.count_ones() as usize == n_excited {
                c64(amp, 0.0)
            } else {
                c64(0.0, 0.0)
            }
        })
        .collect()
}

/// Normalized symmetric state of `n_qubits` with `n_excited` ones.
pub fn dicke_vector(n_qubits: usize, n_excited: usize) -> Result<DenseStateVector> {
    check_size(n_qubits)?;
    if n_excited > n_qubits {
        return Err(Error::InvalidQubits(alloc::format!(
            "{n_excited} excitations in {n_qubits} qubits"
        )));
    }
    DenseStateVector::new(dicke_amplitudes(n_qubits, n_excited))
}

/// `|0> -> psi`, `|1> -> psi_perp` as a 2x2 matrix `[[u00, u01], [u10, u11]]`.
type Qubit2x2 = [[C64; 2]; 2];

fn apply_to_every_qubit(state: &mut [C64], gate: &Qubit2x2) {
    let n = state.len().trailing_zeros() as usize;
    for q in 0..n {
        let mask = 1 << q;
        for i in 0..state.len() {
            if i & mask == 0 {
                let (lo, hi) = (state[i], state[i | mask]);
                state[i] = gate[0][0] * lo + gate[0][1] * hi;
                state[i | mask] = gate[1][0] * lo + gate[1][1] * hi;
            }
        }
    }
}

fn cloner_output(
    spec: CloneSpec,
    clone_frame: &Qubit2x2,
    ancilla_frame: &Qubit2x2,
) -> Result<Vec<C64>> {
    let m = spec.m() as usize;
    check_size(2 * m - 1)?;
    let mut out = vec![c64(0.0, 0.0); 1 << (2 * m - 1)];
    for (j, alpha_sq) in output_state(spec).amp_sq().iter().enumerate() {
        let alpha = rational::to_f64(alpha_sq).sqrt();
        let mut clones = dicke_amplitudes(m, j);
        let mut ancilla = dicke_amplitudes(m - 1, j);
        apply_to_every_qubit(&mut clones, clone_frame);
        apply_to_every_qubit(&mut ancilla, ancilla_frame);
        for (slot, v) in out.iter_mut().zip(dense::kron_vec(&clones, &ancilla)) {
            *slot += v * alpha;
        }
    }
    Ok(out)
}

const IDENTITY: Qubit2x2 = [
    [C64 { re: 1.0, im: 0.0 }, C64 { re: 0.0, im: 0.0 }],
    [C64 { re: 0.0, im: 0.0 }, C64 { re: 1.0, im: 0.0 }],
];

/// `sum_j alpha_j |D(M, j)> (x) |D(M-1, j)>` for input `|0>^N`.
pub fn full_output_state(spec: CloneSpec) -> Result<DenseStateVector> {
    DenseStateVector::new(cloner_output(spec, &IDENTITY, &IDENTITY)?)
}

/// Minimum eigenvalue of the partial transpose on `subsystem`.
pub fn partial_transpose_min_eig(rho: &DenseDensityMatrix, subsystem: usize) -> Result<f64> {
    let pt = dense::partial_transpose(rho.entries(), subsystem)?;
    Ok(dense::hermitian_eigenvalues(&pt)[0])
}

fn single_clone_overlap(state: &[C64], psi: [C64; 2]) -> Result<f64> {
    let rho = dense::reduce_pure(state, &[0])?;
    let mut f = c64(0.0, 0.0);
    for r in 0..2 {
        for c in 0..2 {
            f += psi[r].conj() * rho[(r, c)] * psi[c];
        }
    }
    Ok(f.re)
}

/// Largest `|F(psi) - F(|0>)|` over `trials` Haar-random inputs `psi`,
/// where the output is built in the frame `{psi, psi_perp}` for the clones
/// and the conjugate frame `{psi*, psi_perp*}` for the ancilla.
pub fn universality_check<R: Rng + ?Sized>(
    spec: CloneSpec,
    trials: usize,
    rng: &mut R,
) -> Result<f64> {
    let reference = single_clone_overlap(
        &cloner_output(spec, &IDENTITY, &IDENTITY)?,
        [c64(1.0, 0.0), c64(0.0, 0.0)],
    )?;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let u: f64 = rng.random();
        let phi = 2.0 * core::f64::consts::PI * rng.random::<f64>();
        let (cos_t, sin_t) = (u.sqrt(), (1.0 - u).sqrt());
        let phase = c64(phi.cos(), phi.sin());
        let psi = [c64(cos_t, 0.0), phase * sin_t];
        let perp = [-phase.conj() * sin_t, c64(cos_t, 0.0)];
        let frame = [[psi[0], perp[0]], [psi[1], perp[1]]];
        let conj_frame = [
            [frame[0][0].conj(), frame[0][1].conj()],
            [frame[1][0].conj(), frame[1][1].conj()],
        ];
        let state = cloner_output(spec, &frame, &conj_frame)?;
        let fidelity = single_clone_overlap(&state, psi)?;
        worst = worst.max((fidelity - reference).abs());
    }
    Ok(worst)
}
