//! Oracle-equivalence suite: every analytic constructor against the
//! brute-force expansion, for all `1 <= N <= M <= cap`, `cap <= 7`.

use alloc::vec::Vec;
use core::fmt;

use nalgebra::DMatrix;
use rand::Rng;

use crate::cloner::{output_state, CloneSpec};
use crate::dense::{self, c64, C64};
use crate::error::{Error, Result};
use crate::measures::{concurrence_x_form, ppt_three_clone, wootters_concurrence};
use crate::oracle::{self, full_output_state, partial_trace, universality_check};
use crate::rational;
use crate::reduced::{
    clone_ancilla_state, one_to_two_pure_state, single_clone_fidelity, three_clone_state,
    two_clone_state,
};

pub const MAX_CAP: u32 = 7;
pub const ENTRY_TOLERANCE: f64 = 1e-12;
pub const PARTIAL_TRANSPOSE_TOLERANCE: f64 = 1e-10;
pub const UNIVERSALITY_TOLERANCE: f64 = 1e-10;
pub const UNIVERSALITY_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// Literal `1 -> 2` output state and its two-qubit reductions.
    OneToTwoLiteral,
    TwoClones,
    CloneAncilla,
    ThreeClones,
    Fidelity,
    /// Every clone pair and every (clone, ancilla qubit) pair reduces alike.
    PairSymmetry,
    SchmidtSpectrum,
    /// Partial-transpose spectrum of three clones, and its sign against the
    /// exact verdict.
    PartialTranspose,
    /// General two-qubit concurrence of oracle reductions against the
    /// exact X-form value.
    Concurrence,
    Universality,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::OneToTwoLiteral => "one_to_two_literal",
            Check::TwoClones => "two_clones",
            Check::CloneAncilla => "clone_ancilla",
            Check::ThreeClones => "three_clones",
            Check::Fidelity => "fidelity",
            Check::PairSymmetry => "pair_symmetry",
            Check::SchmidtSpectrum => "schmidt_spectrum",
            Check::PartialTranspose => "partial_transpose",
            Check::Concurrence => "concurrence",
            Check::Universality => "universality",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOutcome {
    pub n: u32,
    pub m: u32,
    pub check: Check,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckOutcome {
    fn within(n: u32, m: u32, check: Check, deviation: f64, tolerance: f64) -> Self {
        Self {
            n,
            m,
            check,
            deviation,
            tolerance,
            passed: deviation <= tolerance,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    /// Largest deviation per check kind, in first-seen order.
    pub fn worst_by_check(&self) -> Vec<(Check, f64, bool)> {
        let mut out: Vec<(Check, f64, bool)> = Vec::new();
        for o in &self.outcomes {
            match out.iter_mut().find(|(c, _, _)| *c == o.check) {
                Some(entry) => {
                    entry.1 = entry.1.max(o.deviation);
                    entry.2 &= o.passed;
                }
                None => out.push((o.check, o.deviation, o.passed)),
            }
        }
        out
    }
}

fn real_matrix<const N: usize>(rows: [[f64; N]; N]) -> DMatrix<C64> {
    DMatrix::from_fn(N, N, |r, c| c64(rows[r][c], 0.0))
}

fn one_to_two_literal() -> Result<f64> {
    let full = full_output_state(CloneSpec::new(1, 2)?)?;
    let lit = one_to_two_pure_state();
    let mut worst = full
        .amplitudes()
        .iter()
        .zip(lit.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let (t, s) = (2.0 / 3.0, 1.0 / 6.0);
    let clones = real_matrix([
        [t, 0.0, 0.0, 0.0],
        [0.0, s, s, 0.0],
        [0.0, s, s, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ]);
    let clone_ancilla = real_matrix([
        [t, 0.0, 0.0, 1.0 / 3.0],
        [0.0, s, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
        [1.0 / 3.0, 0.0, 0.0, s],
    ]);
    worst = worst.max(dense::max_abs_diff(
        partial_trace(&full, &[0, 1])?.entries(),
        &clones,
    ));
    worst = worst.max(dense::max_abs_diff(
        partial_trace(&full, &[1, 2])?.entries(),
        &clone_ancilla,
    ));
    Ok(worst)
}

/// All checks for one `(N, M)`.
pub fn verify_spec<R: Rng + ?Sized>(spec: CloneSpec, rng: &mut R) -> Result<Vec<CheckOutcome>> {
    let (n, m) = (spec.n(), spec.m());
    let mu = m as usize;
    let full = full_output_state(spec)?;
    let mut out = Vec::new();
    let entry = |check, dev| CheckOutcome::within(n, m, check, dev, ENTRY_TOLERANCE);

    if (n, m) == (1, 2) {
        out.push(entry(Check::OneToTwoLiteral, one_to_two_literal()?));
    }

    if m >= 2 {
        let cc = partial_trace(&full, &[0, 1])?;
        let analytic_cc = two_clone_state(spec)?;
        out.push(entry(
            Check::TwoClones,
            dense::max_abs_diff(cc.entries(), &analytic_cc.to_matrix()),
        ));

        let ca = partial_trace(&full, &[0, mu])?;
        let analytic_ca = clone_ancilla_state(spec)?;
        out.push(entry(
            Check::CloneAncilla,
            dense::max_abs_diff(ca.entries(), &analytic_ca.to_matrix()),
        ));

        let mut symmetry: f64 = 0.0;
        for i in 0..mu {
            for j in (i + 1)..mu {
                let pair = partial_trace(&full, &[i, j])?;
                symmetry = symmetry.max(dense::max_abs_diff(pair.entries(), cc.entries()));
            }
            for k in mu..(2 * mu - 1) {
                let pair = partial_trace(&full, &[i, k])?;
                symmetry = symmetry.max(dense::max_abs_diff(pair.entries(), ca.entries()));
            }
        }
        out.push(entry(Check::PairSymmetry, symmetry));

        let mut conc: f64 = 0.0;
        for (oracle_rho, analytic) in [(&cc, &analytic_cc), (&ca, &analytic_ca)] {
            let numeric = wootters_concurrence(oracle_rho.entries())?;
            conc = conc.max((numeric - concurrence_x_form(analytic).value()).abs());
        }
        out.push(entry(Check::Concurrence, conc));
    }

    if m >= 3 {
        let three = partial_trace(&full, &[0, 1, 2])?;
        let mixture = three_clone_state(spec)?;
        let analytic = mixture.to_matrix();
        out.push(entry(
            Check::ThreeClones,
            dense::max_abs_diff(three.entries(), &analytic),
        ));

        let numeric_pt = dense::partial_transpose(three.entries(), 0)?;
        let analytic_pt = dense::partial_transpose(&analytic, 0)?;
        let numeric_eig = dense::hermitian_eigenvalues(&numeric_pt);
        let analytic_eig = dense::hermitian_eigenvalues(&analytic_pt);
        let spread = numeric_eig
            .iter()
            .zip(&analytic_eig)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let mut min_eig = f64::INFINITY;
        for q in 0..3 {
            min_eig = min_eig.min(oracle::partial_transpose_min_eig(&three, q)?);
        }
        let numeric_npt = min_eig < -PARTIAL_TRANSPOSE_TOLERANCE;
        let verdict = ppt_three_clone(&mixture);
        out.push(CheckOutcome {
            n,
            m,
            check: Check::PartialTranspose,
            deviation: spread,
            tolerance: PARTIAL_TRANSPOSE_TOLERANCE,
            passed: spread <= PARTIAL_TRANSPOSE_TOLERANCE && numeric_npt == verdict.is_npt,
        });
    }

    let single = partial_trace(&full, &[0])?;
    let fidelity = rational::to_f64(&single_clone_fidelity(spec));
    out.push(entry(
        Check::Fidelity,
        (single.entries()[(0, 0)].re - fidelity).abs(),
    ));

    let spectrum = full.schmidt_spectrum(mu)?;
    let mut expected: Vec<f64> = output_state(spec)
        .amp_sq()
        .iter()
        .map(rational::to_f64)
        .collect();
    expected.sort_by(|a, b| b.total_cmp(a));
    let schmidt = spectrum
        .iter()
        .enumerate()
        .map(|(i, s)| (s - expected.get(i).copied().unwrap_or(0.0)).abs())
        .fold(0.0, f64::max);
    out.push(entry(Check::SchmidtSpectrum, schmidt));

    out.push(CheckOutcome::within(
        n,
        m,
        Check::Universality,
        universality_check(spec, UNIVERSALITY_TRIALS, rng)?,
        UNIVERSALITY_TOLERANCE,
    ));

    Ok(out)
}

/// Runs [`verify_spec`] on the whole grid `1 <= N <= M <= m_cap`.
pub fn run_verification<R: Rng + ?Sized>(m_cap: u32, rng: &mut R) -> Result<VerificationReport> {
    if m_cap == 0 || m_cap > MAX_CAP {
        return Err(Error::CapOutOfRange(m_cap));
    }
    debug_assert!(2 * MAX_CAP as usize - 1 <= oracle::MAX_QUBITS);
    let mut report = VerificationReport::default();
    for m in 1..=m_cap {
        for n in 1..=m {
            report
                .outcomes
                .extend(verify_spec(CloneSpec::new(n, m)?, rng)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cap_enforced() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(run_verification(8, &mut rng), Err(Error::CapOutOfRange(8)));
        assert_eq!(run_verification(0, &mut rng), Err(Error::CapOutOfRange(0)));
    }

    #[test]
    fn cap_two_includes_literal_regression() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let report = run_verification(2, &mut rng).unwrap();
        assert!(
            report.all_passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        assert!(report
            .outcomes
            .iter()
            .any(|o| o.check == Check::OneToTwoLiteral && o.passed));
    }

    #[test]
    fn cap_five_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let report = run_verification(5, &mut rng).unwrap();
        if let Some(o) = report.failures().next() {
            panic!("{o:?}");
        }
        // 15 specs, every kind present
        let kinds = report.worst_by_check();
        assert_eq!(kinds.len(), 10);
    }
}
