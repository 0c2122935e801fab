//! Finite sums `sum_i q_i * sqrt(r_i)` with rational `q_i` and distinct
//! squarefree integers `r_i`.
//!
//! The clone-ancilla coherence of the cloner output is such a sum. Because
//! square roots of distinct squarefree integers are linearly independent
//! over the rationals, a sum is zero exactly when every coefficient is zero,
//! and otherwise its sign can be certified by interval refinement. That is
//! what keeps separability decisions exact when the entries are irrational.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurdSum {
    // squarefree radicand -> nonzero coefficient
    terms: BTreeMap<BigUint, Rational>,
}

/// Splits `n` as `s^2 * r` with `r` squarefree.
fn square_split(mut n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut count = 0;
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= p;
        }
        if count % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * n)
}

impl SurdSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(value: Rational) -> Self {
        let mut out = Self::zero();
        out.insert(BigUint::one(), value);
        out
    }

    /// `coeff * sqrt(radicand)`, with the square part of `radicand` pulled
    /// into the coefficient.
    pub fn term(coeff: Rational, radicand: u64) -> Self {
        let mut out = Self::zero();
        if radicand == 0 {
            return out;
        }
        let (square, free) = square_split(radicand);
        out.insert(
            BigUint::from(free),
            coeff * Rational::from_integer(BigInt::from(square)),
        );
        out
    }

    fn insert(&mut self, radicand: BigUint, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational, if no irrational term is present.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| {
                let root = if r.is_one() {
                    1.0
                } else {
                    num_traits::Float::sqrt(r.to_f64().unwrap_or(f64::NAN))
                };
                rational::to_f64(q) * root
            })
            .sum()
    }

    /// Exact sign of the sum.
    pub fn signum(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        if self.terms.len() == 1 {
            let q = self.terms.values().next().expect("one term");
            return q.cmp(&Rational::zero());
        }
        // Nonzero by linear independence; refine until the enclosing
        // interval excludes zero.
        let mut bits = 64u32;
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo > Rational::zero() {
                return Ordering::Greater;
            }
            if hi < Rational::zero() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    /// Interval `[lo, hi]` containing the sum, from `sqrt` bounds at
    /// `bits` binary digits.
    fn enclose(&self, bits: u32) -> (Rational, Rational) {
        let scale = BigInt::one() << bits;
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (r, q) in &self.terms {
            if r.is_one() {
                lo += q;
                hi += q;
                continue;
            }
            let floor = (r << (2 * bits as usize)).sqrt();
            let below = Rational::new(BigInt::from(floor.clone()), scale.clone());
            let above = Rational::new(BigInt::from(floor) + 1, scale.clone());
            if q.is_positive() {
                lo += q * &below;
                hi += q * &above;
            } else {
                lo += q * &above;
                hi += q * &below;
            }
        }
        (lo, hi)
    }
}

impl From<Rational> for SurdSum {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}

impl Add<&SurdSum> for &SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (r, q) in &rhs.terms {
            out.insert(r.clone(), q.clone());
        }
        out
    }
}

impl Add for SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: SurdSum) -> SurdSum {
        &self + &rhs
    }
}

impl Neg for SurdSum {
    type Output = SurdSum;
    fn neg(mut self) -> SurdSum {
        for q in self.terms.values_mut() {
            *q = -q.clone();
        }
        self
    }
}

impl Sub<&SurdSum> for &SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: &SurdSum) -> SurdSum {
        self + &(-rhs.clone())
    }
}

impl Sub for SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: SurdSum) -> SurdSum {
        &self - &rhs
    }
}

impl Mul<&SurdSum> for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &SurdSum) -> SurdSum {
        let mut out = SurdSum::zero();
        for (r1, q1) in &self.terms {
            for (r2, q2) in &rhs.terms {
                // r1, r2 squarefree: r1 * r2 = g^2 * (r1/g) * (r2/g)
                let g = r1.gcd(r2);
                let radicand = (r1 / &g) * (r2 / &g);
                let coeff = q1 * q2 * Rational::from_integer(BigInt::from(g));
                out.insert(radicand, coeff);
            }
        }
        out
    }
}

impl Mul<&Rational> for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &Rational) -> SurdSum {
        let mut out = SurdSum::zero();
        for (r, q) in &self.terms {
            out.insert(r.clone(), q * rhs);
        }
        out
    }
}

/// `2/3`, `1/6*sqrt(6)`, `1/3+1/12*sqrt(2)-1/5*sqrt(6)`; radicands ascend.
impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let text = rational::render(&q.abs());
            if q.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            f.write_str(&text)?;
            if !r.is_one() {
                write!(f, "*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed surd sum: {0:?}")]
pub struct ParseSurdError(String);

impl FromStr for SurdSum {
    type Err = ParseSurdError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseSurdError(String::from(text));
        let text = text.trim();
        if text.is_empty() {
            return Err(err());
        }
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        for (i, ch) in text.char_indices() {
            if ch == '+' || ch == '-' {
                if i > start {
                    pieces.push((negative, &text[start..i]));
                } else if i != 0 {
                    return Err(err());
                }
                negative = ch == '-';
                start = i + 1;
            }
        }
        if start >= text.len() {
            return Err(err());
        }
        pieces.push((negative, &text[start..]));

        let mut out = SurdSum::zero();
        for (negative, piece) in pieces {
            let (coeff, radicand) = match piece.split_once("*sqrt(") {
                Some((coeff, rest)) => {
                    let inner = rest.strip_suffix(')').ok_or_else(err)?;
                    (coeff, inner.parse::<u64>().map_err(|_| err())?)
                }
                None => (piece, 1),
            };
            let mut q = rational::parse(coeff).ok_or_else(err)?;
            if negative {
                q = -q;
            }
            out = out + SurdSum::term(q, radicand);
        }
        Ok(out)
    }
}
