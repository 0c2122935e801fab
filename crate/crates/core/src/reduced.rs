//! Closed-form reduced density matrices of the cloner output.
//!
//! By permutation symmetry of the clones (and separately of the ancilla
//! qubits) it does not matter which clones are kept; the constructors are
//! stated for the first one, two or three clones and the first ancilla
//! qubit.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_traits::{One, Signed, Zero};

use crate::cloner::{binomial, output_state, CloneSpec, SchmidtWeights};
use crate::dense::{self, c64, C64};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::surd::SurdSum;

/// Ordering of the four basis states an [`XFormTwoQubitState`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XFormBasis {
    /// `{|00>, |01>, |10>, |11>}`, used for two clones.
    Computational,
    /// `{|01>, |00>, |11>, |10>}` (clone first, ancilla second), in which the
    /// clone-ancilla state takes the X shape with the coherence between
    /// `|00>` and `|11>`.
    CloneAncilla,
}

impl XFormBasis {
    pub fn labels(self) -> [&'static str; 4] {
        match self {
            XFormBasis::Computational => ["00", "01", "10", "11"],
            XFormBasis::CloneAncilla => ["01", "00", "11", "10"],
        }
    }

    /// Computational-basis index of each position.
    pub fn indices(self) -> [usize; 4] {
        match self {
            XFormBasis::Computational => [0, 1, 2, 3],
            XFormBasis::CloneAncilla => [1, 0, 3, 2],
        }
    }
}

/// Two-qubit density matrix of the shape
///
/// ```text
/// | a 0 0 0 |
/// | 0 b c 0 |
/// | 0 c d 0 |
/// | 0 0 0 e |
/// ```
///
/// in the ordering given by [`XFormBasis`]. The diagonal is rational; the
/// coherence `c` is real and may carry square roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XFormTwoQubitState {
    basis: XFormBasis,
    a: Rational,
    b: Rational,
    c: SurdSum,
    d: Rational,
    e: Rational,
}

impl XFormTwoQubitState {
    /// Checks unit trace, a nonnegative diagonal and `c^2 <= b d`, all exactly.
    pub fn new(
        basis: XFormBasis,
        a: Rational,
        b: Rational,
        c: SurdSum,
        d: Rational,
        e: Rational,
    ) -> Result<Self> {
        if &a + &b + &d + &e != Rational::one() {
            return Err(Error::InvalidXForm("diagonal does not sum to 1"));
        }
        if [&a, &b, &d, &e].iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidXForm("negative diagonal entry"));
        }
        let slack = &SurdSum::from(&b * &d) - &c.square();
        if slack.signum() == core::cmp::Ordering::Less {
            return Err(Error::InvalidXForm("coherence exceeds sqrt(b d)"));
        }
        Ok(Self {
            basis,
            a,
            b,
            c,
            d,
            e,
        })
    }

    pub fn basis(&self) -> XFormBasis {
        self.basis
    }

    pub fn basis_labels(&self) -> [&'static str; 4] {
        self.basis.labels()
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &SurdSum {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn e(&self) -> &Rational {
        &self.e
    }

    /// The 4x4 matrix in the computational basis `{|00>, |01>, |10>, |11>}`.
    pub fn to_matrix(&self) -> DMatrix<C64> {
        let idx = self.basis.indices();
        let mut m = DMatrix::zeros(4, 4);
        for (pos, value) in [&self.a, &self.b, &self.d, &self.e].into_iter().enumerate() {
            m[(idx[pos], idx[pos])] = c64(rational::to_f64(value), 0.0);
        }
        let c = c64(self.c.to_f64(), 0.0);
        m[(idx[1], idx[2])] = c;
        m[(idx[2], idx[1])] = c;
        m
    }

    /// Populations `(p(0), p(1))` of the first qubit.
    pub fn first_qubit_marginal(&self) -> [Rational; 2] {
        let m = [&self.a, &self.b, &self.d, &self.e];
        let mut out = [Rational::zero(), Rational::zero()];
        for (pos, idx) in self.basis.indices().into_iter().enumerate() {
            out[idx >> 1] += m[pos];
        }
        out
    }
}

/// Reduced state of any two clones.
pub fn two_clone_state(spec: CloneSpec) -> Result<XFormTwoQubitState> {
    spec.require_outputs("two-clone state", 2)?;
    let m = spec.m() as i64;
    let w = SchmidtWeights::new(spec);
    let denom = (m * (m - 1)) as u64;
    let a = w.weighted_sum(denom, |j| (m - j) * (m - j - 1));
    let c = w.weighted_sum(denom, |j| j * (m - j));
    let e = w.weighted_sum(denom, |j| j * (j - 1));
    XFormTwoQubitState::new(
        XFormBasis::Computational,
        a,
        c.clone(),
        SurdSum::from(c.clone()),
        c,
        e,
    )
}

/// Reduced state of one clone and one ancilla qubit, in the
/// [`XFormBasis::CloneAncilla`] ordering.
pub fn clone_ancilla_state(spec: CloneSpec) -> Result<XFormTwoQubitState> {
    spec.require_outputs("clone-ancilla state", 2)?;
    let (n, m) = (spec.n() as i64, spec.m() as i64);
    let w = SchmidtWeights::new(spec);
    let denom = (m * (m - 1)) as u64;
    let p01 = w.weighted_sum(denom, |j| (m - j) * j);
    let p00 = w.weighted_sum(denom, |j| (m - j) * (m - 1 - j));
    let p11 = w.weighted_sum(denom, |j| j * j);
    let p10 = w.weighted_sum(denom, |j| j * (m - 1 - j));

    // <00|rho|11> couples Schmidt branches j and j+1:
    // alpha_j alpha_{j+1} (j+1) sqrt((M-j)(M-1-j)) / (M(M-1))
    //   = prefactor w_j (j+1) sqrt((M-N-j)(M-1-j)) / (M(M-1))
    let mut c = SurdSum::zero();
    for (j, wj) in w.weights.iter().enumerate().take(spec.max_index() as usize) {
        let j = j as i64;
        let coeff =
            &w.prefactor * Rational::new(wj * (j + 1), num_bigint::BigInt::from(m * (m - 1)));
        c = c + SurdSum::term(coeff, ((m - n - j) * (m - 1 - j)) as u64);
    }
    XFormTwoQubitState::new(XFormBasis::CloneAncilla, p01, p00, c, p11, p10)
}

/// Permutation-symmetric three-qubit mixture
/// `p0 |000><000| + p1 P[W(100)] + p2 P[W(110)] + p3 |111><111|`,
/// where `W(100) = (|100> + |010> + |001>)/sqrt 3` and
/// `W(110) = (|110> + |101> + |011>)/sqrt 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCloneMixture {
    weights: [Rational; 4],
}

impl ThreeCloneMixture {
    pub fn new(weights: [Rational; 4]) -> Result<Self> {
        if weights.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidMixture("negative weight"));
        }
        if weights.iter().sum::<Rational>() != Rational::one() {
            return Err(Error::InvalidMixture("weights do not sum to 1"));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[Rational; 4] {
        &self.weights
    }

    pub fn p(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn to_matrix(&self) -> DMatrix<C64> {
        let third = 1.0 / 3.0;
        let w = |p: &Rational| rational::to_f64(p) * third;
        let mut m = DMatrix::zeros(8, 8);
        m[(0, 0)] = c64(rational::to_f64(&self.weights[0]), 0.0);
        m[(7, 7)] = c64(rational::to_f64(&self.weights[3]), 0.0);
        for (p, block) in [(&self.weights[1], [4, 2, 1]), (&self.weights[2], [6, 5, 3])] {
            let v = c64(w(p), 0.0);
            for &r in &block {
                for &c in &block {
                    m[(r, c)] = v;
                }
            }
        }
        m
    }

    /// Populations `(p(0), p(1))` of any one qubit.
    pub fn single_qubit_marginal(&self) -> [Rational; 2] {
        let [p0, p1, p2, p3] = &self.weights;
        let third = rational::ratio(1, 3);
        let zero = p0 + p1 * rational::ratio(2, 3) + p2 * &third;
        let one = p1 * &third + p2 * rational::ratio(2, 3) + p3;
        [zero, one]
    }
}

/// Reduced state of any three clones. The sums for the four weights all
/// run over `j = 0..=M-N`; out-of-range binomials vanish.
pub fn three_clone_state(spec: CloneSpec) -> Result<ThreeCloneMixture> {
    spec.require_outputs("three-clone state", 3)?;
    let m = spec.m() as i64;
    let state = output_state(spec);
    let mut weights: [Rational; 4] = Default::default();
    for (j, alpha_sq) in state.amp_sq().iter().enumerate() {
        let j = j as i64;
        let total = binomial(m, j);
        for (k, slot) in weights.iter_mut().enumerate() {
            let k = k as i64;
            let multiplicity = if k == 1 || k == 2 { 3 } else { 1 };
            let count = binomial(m - 3, j - k) * multiplicity;
            *slot += alpha_sq * Rational::new(count, total.clone());
        }
    }
    ThreeCloneMixture::new(weights)
}

/// `<0|rho|0>` for a single clone. The identity cloner (`M = N`) gives 1.
pub fn single_clone_fidelity(spec: CloneSpec) -> Rational {
    if spec.m() == spec.n() {
        return Rational::one();
    }
    let pair = two_clone_state(spec).expect("M > N >= 1 implies M >= 2");
    pair.a() + pair.b()
}

/// Normalized pure state of three qubits; amplitudes indexed by the basis
/// label read as binary, qubit 0 leftmost.
#[derive(Clone, Debug, PartialEq)]
pub struct PureThreeQubitState {
    amplitudes: [C64; 8],
}

impl PureThreeQubitState {
    pub const NORM_TOLERANCE: f64 = 1e-12;

    pub fn new(amplitudes: [C64; 8]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > Self::NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self { amplitudes })
    }

    pub fn ghz() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let mut amps = [c64(0.0, 0.0); 8];
        amps[0] = c64(s, 0.0);
        amps[7] = c64(s, 0.0);
        Self { amplitudes: amps }
    }

    pub fn w() -> Self {
        let s = num_traits::Float::sqrt(1.0f64 / 3.0);
        let mut amps = [c64(0.0, 0.0); 8];
        for i in [1, 2, 4] {
            amps[i] = c64(s, 0.0);
        }
        Self { amplitudes: amps }
    }

    pub fn amplitudes(&self) -> &[C64; 8] {
        &self.amplitudes
    }

    pub fn amplitude(&self, label: &str) -> Option<C64> {
        let idx = usize::from_str_radix(label, 2).ok()?;
        (label.len() == 3).then(|| self.amplitudes[idx])
    }

    /// Reduced density matrix on the listed qubits.
    pub fn reduce(&self, keep: &[usize]) -> Result<DMatrix<C64>> {
        dense::reduce_pure(&self.amplitudes, keep)
    }

    /// The three two-qubit reductions `(01, 02, 12)`.
    pub fn pair_reductions(&self) -> Vec<DMatrix<C64>> {
        [[0, 1], [0, 2], [1, 2]]
            .iter()
            .map(|keep| self.reduce(keep).expect("valid qubit pair"))
            .collect()
    }
}

/// Output of the `1 -> 2` cloner on `|0>`: original, clone, ancilla.
pub fn one_to_two_pure_state() -> PureThreeQubitState {
    let big = num_traits::Float::sqrt(2.0f64 / 3.0);
    let small = num_traits::Float::sqrt(1.0f64 / 6.0);
    let mut amps = [c64(0.0, 0.0); 8];
    amps[0b000] = c64(big, 0.0);
    amps[0b011] = c64(small, 0.0);
    amps[0b101] = c64(small, 0.0);
    PureThreeQubitState { amplitudes: amps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn spec(n: u32, m: u32) -> CloneSpec {
        CloneSpec::new(n, m).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn two_clones_one_to_two() {
        let s = two_clone_state(spec(1, 2)).unwrap();
        assert_eq!(s.a(), &q(2, 3));
        assert_eq!(s.b(), &q(1, 6));
        assert_eq!(s.c(), &SurdSum::from(q(1, 6)));
        assert_eq!(s.d(), &q(1, 6));
        assert_eq!(s.e(), &integer(0));
        assert_eq!(s.basis_labels(), ["00", "01", "10", "11"]);
    }

    #[test]
    fn two_clones_need_two_outputs() {
        assert!(matches!(
            two_clone_state(spec(1, 1)),
            Err(Error::TooFewOutputs { min: 2, m: 1, .. })
        ));
        assert!(clone_ancilla_state(spec(1, 1)).is_err());
        assert!(three_clone_state(spec(2, 2)).is_err());
    }

    #[test]
    fn two_clones_closed_forms() {
        for m in 2..=100i64 {
            let s = two_clone_state(spec(1, m as u32)).unwrap();
            assert_eq!(s.a(), &q(3 * m + 2, 6 * m));
            assert_eq!(s.b(), &q(1, 6));
            assert_eq!(s.e(), &q(m - 2, 6 * m));

            if m >= 2 {
                let s = two_clone_state(spec(2, m as u32)).unwrap();
                let den = m * (m - 1);
                assert_eq!(s.a(), &q(3 * m * m - 2, 5 * den), "M={m}");
                assert_eq!(s.b(), &q(3 * m * m - 5 * m - 2, 20 * den), "M={m}");
                assert_eq!(s.e(), &q(m * m - 5 * m + 6, 10 * den), "M={m}");
            }
            if m >= 3 {
                let s = two_clone_state(spec((m - 2) as u32, m as u32)).unwrap();
                let den = m * m * (m * m - 1);
                assert_eq!(s.a(), &q(m.pow(4) - 5 * m * m + 8, den), "M={m}");
                assert_eq!(s.b(), &q(2 * (m * m - 3), den), "M={m}");
                assert_eq!(s.e(), &q(4, den), "M={m}");
            }
        }
    }

    #[test]
    fn two_clones_two_to_three() {
        let s = two_clone_state(spec(2, 3)).unwrap();
        assert_eq!((s.a(), s.b(), s.e()), (&q(5, 6), &q(1, 12), &integer(0)));
    }

    #[test]
    fn clone_ancilla_one_input_closed_form() {
        for m in 2..=60i64 {
            let s = clone_ancilla_state(spec(1, m as u32)).unwrap();
            assert_eq!(s.a(), &q(1, 6));
            assert_eq!(s.d(), &q(1, 6));
            assert_eq!(s.b(), &q(3 * m + 2, 6 * m));
            assert_eq!(s.c().as_rational(), Some(q(m + 2, 6 * m)), "M={m}");
            assert_eq!(s.e(), &q(m - 2, 6 * m));
            assert_eq!(s.basis_labels(), ["01", "00", "11", "10"]);
        }
        let s = clone_ancilla_state(spec(1, 2)).unwrap();
        assert_eq!(s.c().as_rational(), Some(q(1, 3)));
    }

    #[test]
    fn clone_ancilla_coherence_is_irrational_beyond_one_input() {
        let s = clone_ancilla_state(spec(2, 4)).unwrap();
        assert!(s.c().as_rational().is_none());
    }

    #[test]
    fn clone_ancilla_identity_cloner_is_product() {
        let s = clone_ancilla_state(spec(3, 3)).unwrap();
        assert_eq!(s.b(), &integer(1));
        assert!(s.c().is_zero());
    }

    #[test]
    fn three_clone_reference_values() {
        let s = three_clone_state(spec(1, 3)).unwrap();
        assert_eq!(s.weights(), &[q(1, 2), q(1, 3), q(1, 6), integer(0)]);
        let s = three_clone_state(spec(2, 3)).unwrap();
        assert_eq!(s.weights(), &[q(3, 4), q(1, 4), integer(0), integer(0)]);
        for m in 3..=100i64 {
            let s = three_clone_state(spec(1, m as u32)).unwrap();
            let den = 10 * m;
            assert_eq!(
                s.weights(),
                &[
                    q(4 * m + 3, den),
                    q(3 * m + 1, den),
                    q(2 * m - 1, den),
                    q(m - 3, den)
                ],
                "M={m}"
            );
        }
    }

    #[test]
    fn fidelity_law() {
        assert_eq!(single_clone_fidelity(spec(1, 2)), q(5, 6));
        for n in 1..6 {
            assert_eq!(single_clone_fidelity(spec(n, n)), integer(1));
        }
        for m in 2..=100i64 {
            assert_eq!(
                single_clone_fidelity(spec(1, m as u32)),
                q(2 * m + 1, 3 * m)
            );
        }
    }

    #[test]
    fn trace_positivity_and_marginals_grid() {
        for m in 2..=30u32 {
            for n in 1..=m {
                let s = spec(n, m);
                let cc = two_clone_state(s).unwrap();
                assert_eq!(cc.a() + cc.b() * integer(2) + cc.e(), integer(1));
                let ca = clone_ancilla_state(s).unwrap();
                assert_eq!(ca.a() + ca.b() + ca.d() + ca.e(), integer(1));
                // positivity checked exactly inside the constructors
                let marginal = cc.first_qubit_marginal();
                assert_eq!(marginal[0], single_clone_fidelity(s));
                assert_eq!(ca.first_qubit_marginal()[0], single_clone_fidelity(s));
                if m >= 3 {
                    let three = three_clone_state(s).unwrap();
                    assert_eq!(three.single_qubit_marginal(), marginal, "N={n} M={m}");
                }
            }
        }
    }

    #[test]
    fn x_form_validation() {
        let ok = XFormTwoQubitState::new(
            XFormBasis::Computational,
            q(1, 2),
            q(1, 4),
            SurdSum::from(q(1, 4)),
            q(1, 4),
            integer(0),
        );
        assert!(ok.is_ok());
        let too_coherent = XFormTwoQubitState::new(
            XFormBasis::Computational,
            q(1, 2),
            q(1, 4),
            SurdSum::from(q(1, 3)),
            q(1, 4),
            integer(0),
        );
        assert!(too_coherent.is_err());
        let bad_trace = XFormTwoQubitState::new(
            XFormBasis::Computational,
            q(1, 2),
            q(1, 4),
            SurdSum::zero(),
            q(1, 4),
            q(1, 4),
        );
        assert!(bad_trace.is_err());
    }

    #[test]
    fn mixture_validation() {
        assert!(ThreeCloneMixture::new([q(1, 2), q(1, 2), integer(0), integer(0)]).is_ok());
        assert!(ThreeCloneMixture::new([q(1, 2), q(1, 3), integer(0), integer(0)]).is_err());
        assert!(ThreeCloneMixture::new([q(3, 2), q(-1, 2), integer(0), integer(0)]).is_err());
    }

    #[test]
    fn one_to_two_state_reductions() {
        let psi = one_to_two_pure_state();
        let norm: f64 = psi.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-15);
        let cc = two_clone_state(spec(1, 2)).unwrap().to_matrix();
        assert!(dense::max_abs_diff(&psi.reduce(&[0, 1]).unwrap(), &cc) < 1e-15);
        let ca = clone_ancilla_state(spec(1, 2)).unwrap().to_matrix();
        assert!(dense::max_abs_diff(&psi.reduce(&[1, 2]).unwrap(), &ca) < 1e-15);
        // literal right-hand matrix of the 1 -> 2 clone-ancilla state
        let lit = [
            [2.0 / 3.0, 0.0, 0.0, 1.0 / 3.0],
            [0.0, 1.0 / 6.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [1.0 / 3.0, 0.0, 0.0, 1.0 / 6.0],
        ];
        let lit = DMatrix::from_fn(4, 4, |r, c| c64(lit[r][c], 0.0));
        assert!(dense::max_abs_diff(&ca, &lit) < 1e-15);
    }

    #[test]
    fn pure_state_validation() {
        let mut amps = [c64(0.0, 0.0); 8];
        amps[0] = c64(0.9, 0.0);
        assert!(matches!(
            PureThreeQubitState::new(amps),
            Err(Error::NotNormalized(_))
        ));
        assert_eq!(
            PureThreeQubitState::w().amplitude("010").unwrap().re,
            PureThreeQubitState::w().amplitudes()[2].re
        );
    }
}
