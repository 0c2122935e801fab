//! Schmidt weights of the optimal universal `N -> M` cloner.
//!
//! With input `|0>^N`, the output of `M` clones and `M - 1` ancilla qubits is
//!
//! ```text
//! sum_{j=0}^{M-N} alpha_j |D(M, j)> |D(M-1, j)>
//! alpha_j^2 = (N+1)/(M+1) * (M-N)! (M-j)! / ((M-N-j)! M!)
//! ```
//!
//! where `|D(n, j)>` is the normalized symmetric state of `n` qubits with `j`
//! of them flipped to `|1>`. Only the squares `alpha_j^2` are stored; they
//! are rational, and every reduced state depends on the amplitudes only
//! through them (or through square roots of products of them, see
//! [`crate::reduced`]).

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An `N -> M` cloner instance, `1 <= N <= M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CloneSpec {
    n_inputs: u32,
    m_outputs: u32,
}

impl CloneSpec {
    pub fn new(n_inputs: u32, m_outputs: u32) -> Result<Self> {
        if n_inputs == 0 || n_inputs > m_outputs {
            return Err(Error::InvalidSpec {
                n: n_inputs,
                m: m_outputs,
            });
        }
        Ok(Self {
            n_inputs,
            m_outputs,
        })
    }

    pub fn n(&self) -> u32 {
        self.n_inputs
    }

    pub fn m(&self) -> u32 {
        self.m_outputs
    }

    /// `M - N`, the largest Schmidt index.
    pub fn max_index(&self) -> u32 {
        self.m_outputs - self.n_inputs
    }

    pub(crate) fn require_outputs(&self, what: &'static str, min: u32) -> Result<()> {
        if self.m_outputs < min {
            return Err(Error::TooFewOutputs {
                what,
                min,
                m: self.m_outputs,
            });
        }
        Ok(())
    }
}

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) * (n - i) / (i + 1), exact at every step
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    BigInt::from(acc)
}

fn factorial(n: u32) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// `alpha_j(N, M)^2` straight from the factorial expression.
pub fn alpha_sq(spec: CloneSpec, j: u32) -> Result<Rational> {
    let (n, m) = (spec.n(), spec.m());
    if j > spec.max_index() {
        return Err(Error::IndexOutOfRange {
            j,
            max: spec.max_index(),
        });
    }
    let numer = BigUint::from(n + 1) * factorial(m - n) * factorial(m - j);
    let denom = BigUint::from(m + 1) * factorial(m - n - j) * factorial(m);
    Ok(Rational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// Integer-weighted form of the Schmidt weights:
/// `alpha_j^2 = prefactor * weights[j]` with
/// `weights[j] = (M-j)! / (M-N-j)!` and
/// `prefactor = (N+1) (M-N)! / ((M+1) M!)`.
///
/// Sums over `j` can then run in integers with a single rational scale.
#[derive(Clone, Debug)]
pub(crate) struct SchmidtWeights {
    pub prefactor: Rational,
    pub weights: Vec<BigInt>,
}

impl SchmidtWeights {
    pub fn new(spec: CloneSpec) -> Self {
        let (n, m) = (spec.n(), spec.m());
        let weights = (0..=spec.max_index())
            .map(|j| {
                // falling factorial (M-j)(M-j-1)...(M-j-N+1)
                (0..n).map(|i| BigInt::from(m - j - i)).product::<BigInt>()
            })
            .collect();
        let prefactor = Rational::new(
            BigInt::from(BigUint::from(n + 1) * factorial(m - n)),
            BigInt::from(BigUint::from(m + 1) * factorial(m)),
        );
        Self { prefactor, weights }
    }

    /// `prefactor * sum_j weights[j] * f(j) / denom`.
    pub fn weighted_sum(&self, denom: u64, f: impl Fn(i64) -> i64) -> Rational {
        let total: BigInt = self
            .weights
            .iter()
            .enumerate()
            .map(|(j, w)| w * BigInt::from(f(j as i64)))
            .sum();
        &self.prefactor * Rational::new(total, BigInt::from(denom))
    }
}

/// The cloner output in Schmidt form: `amp_sq[j] = alpha_j^2` for
/// `j = 0..=M-N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchmidtOutputState {
    spec: CloneSpec,
    amp_sq: Vec<Rational>,
}

impl SchmidtOutputState {
    pub fn spec(&self) -> CloneSpec {
        self.spec
    }

    pub fn amp_sq(&self) -> &[Rational] {
        &self.amp_sq
    }

    pub fn total(&self) -> Rational {
        self.amp_sq.iter().sum()
    }
}

pub fn output_state(spec: CloneSpec) -> SchmidtOutputState {
    let w = SchmidtWeights::new(spec);
    let amp_sq = w
        .weights
        .iter()
        .map(|wj| &w.prefactor * Rational::from_integer(wj.clone()))
        .collect();
    SchmidtOutputState { spec, amp_sq }
}
