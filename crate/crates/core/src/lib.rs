//! Exact entanglement analysis of the optimal universal `N -> M` qubit cloner.
//!
//! The cloner output for input `|0>^N` is a Schmidt sum over symmetric
//! (Dicke) states of the `M` clones paired with Dicke states of the `M - 1`
//! ancilla qubits. Every reduced density matrix of one, two or three clones
//! (and of one clone with one ancilla qubit) is built here in closed form with
//! exact rational arithmetic, and entanglement is decided from those exact
//! entries:
//!
//! - [`cloner`]: Schmidt weights `alpha_j^2` and the output state.
//! - [`reduced`]: two-clone, clone-ancilla and three-clone reduced states.
//! - [`measures`]: concurrence, entanglement of formation, 3-tangle and the
//!   partial-transpose test for three-clone mixtures.
//! - [`oracle`]: a brute-force state-vector expansion with literal partial
//!   traces, used as independent ground truth for small `M`.
//! - [`verify`]: the oracle-equivalence suite that compares both routes.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cloner;
pub mod dense;
mod error;
pub mod measures;
pub mod oracle;
pub mod rational;
pub mod reduced;
pub mod surd;
pub mod verify;

pub use cloner::{alpha_sq, binomial, output_state, CloneSpec, SchmidtOutputState};
pub use error::{Error, Result};
pub use measures::{
    concurrence_clone_ancilla_closed, concurrence_x_form, eof_from_concurrence, mermin_value,
    ppt_three_clone, tangle_sum, three_tangle, wootters_concurrence, ConcurrenceValue, NptWitness,
    PptVerdict,
};
pub use rational::Rational;
pub use reduced::{
    clone_ancilla_state, one_to_two_pure_state, single_clone_fidelity, three_clone_state,
    two_clone_state, PureThreeQubitState, ThreeCloneMixture, XFormBasis, XFormTwoQubitState,
};
pub use surd::SurdSum;
