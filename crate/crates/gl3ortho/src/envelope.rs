//! Formal elements of the enveloping algebra before realization.
//!
//! An `EnvelopeElement` is a rational-linear combination of words over the
//! nine generators E_ij. Nothing is normalized beyond combining identical
//! words, and words keep their insertion order, so an element prints the
//! way it was built. Realization multiplies the generator matrices of a
//! model word by word.

use num::Zero;

use crate::matrix::RationalMatrix;
use crate::rational::{rat, Rational};
use crate::rep::Representation;

/// A generator E_ij, stored as the 1-based pair (i, j).
pub type Gen = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnvelopeElement {
    /// (word, coefficient) pairs in insertion order; no zero coefficients.
    terms: Vec<(Vec<Gen>, Rational)>,
}

impl EnvelopeElement {
    pub fn zero() -> Self {
        EnvelopeElement::default()
    }

    /// The unit (empty word).
    pub fn one() -> Self {
        EnvelopeElement::word(&[], rat(1))
    }

    pub fn generator(i: usize, j: usize) -> Self {
        assert!((1..=3).contains(&i) && (1..=3).contains(&j));
        EnvelopeElement::word(&[(i, j)], rat(1))
    }

    pub fn word(gens: &[Gen], coeff: Rational) -> Self {
        let mut e = EnvelopeElement::zero();
        e.push(gens.to_vec(), coeff);
        e
    }

    fn push(&mut self, word: Vec<Gen>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        if let Some((_, c)) = self.terms.iter_mut().find(|(w, _)| *w == word) {
            *c += coeff;
            if c.is_zero() {
                self.terms.retain(|(_, c)| !c.is_zero());
            }
        } else {
            self.terms.push((word, coeff));
        }
    }

    pub fn terms(&self) -> &[(Vec<Gen>, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest word length appearing (0 for scalars and zero).
    pub fn max_word_len(&self) -> usize {
        self.terms.iter().map(|(w, _)| w.len()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return EnvelopeElement::zero();
        }
        EnvelopeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Concatenation product in the free algebra on the generators.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = EnvelopeElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.push(w, c1 * c2);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Chevalley involution: reverse each word and swap E_ij with E_ji.
pub fn omega_element(e: &EnvelopeElement) -> EnvelopeElement {
    let mut out = EnvelopeElement::zero();
    for (w, c) in e.terms() {
        let flipped: Vec<Gen> = w.iter().rev().map(|&(i, j)| (j, i)).collect();
        out.push(flipped, c.clone());
    }
    out
}

/// Which z-element to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZKind {
    Z21,
    Z12,
    Z13,
    Z32,
    Z31,
    Z23,
}

/// The lowering/raising elements z_ij.
///
/// `literal_z31` selects the bare (E11-E22+2)E31 variant; the default
/// (false) adds the +E21E32 correction term, which is the variant whose
/// adjoint action preserves the kernel of ad E12 (the property the whole
/// construction depends on).
pub fn z_element(kind: ZKind, literal_z31: bool) -> EnvelopeElement {
    let e = EnvelopeElement::generator;
    // (E11 - E22 + 2) as a left factor
    let cartan_shift = e(1, 1).sub(&e(2, 2)).add(&EnvelopeElement::one().scale(&rat(2)));
    match kind {
        ZKind::Z21 => e(2, 1),
        ZKind::Z12 => e(1, 2),
        ZKind::Z13 => e(1, 3),
        ZKind::Z32 => e(3, 2),
        ZKind::Z31 => {
            let base = cartan_shift.mul(&e(3, 1));
            if literal_z31 {
                base
            } else {
                base.add(&e(2, 1).mul(&e(3, 2)))
            }
        }
        ZKind::Z23 => cartan_shift.mul(&e(2, 3)).sub(&e(2, 1).mul(&e(1, 3))),
    }
}

/// Which Casimir element to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirKind {
    Omega2,
    Omega3,
}

/// The gl(2) and gl(3) Casimir elements used to separate basis vectors.
pub fn casimir_element(kind: CasimirKind) -> EnvelopeElement {
    let e = EnvelopeElement::generator;
    let sq = |i: usize| e(i, i).mul(&e(i, i));
    match kind {
        CasimirKind::Omega2 => sq(1)
            .add(&sq(2))
            .add(&e(1, 1))
            .sub(&e(2, 2))
            .add(&e(2, 1).mul(&e(1, 2)).scale(&rat(2))),
        CasimirKind::Omega3 => sq(1)
            .add(&sq(2))
            .add(&sq(3))
            .add(&e(1, 1).scale(&rat(2)))
            .sub(&e(3, 3).scale(&rat(2)))
            .add(&e(2, 1).mul(&e(1, 2)).scale(&rat(2)))
            .add(&e(3, 1).mul(&e(1, 3)).scale(&rat(2)))
            .add(&e(3, 2).mul(&e(2, 3)).scale(&rat(2))),
    }
}

/// Image of an envelope element in a concrete model.
pub fn realize(e: &EnvelopeElement, rep: &Representation) -> RationalMatrix {
    let dim = rep.dim();
    let mut out = RationalMatrix::zero(dim, dim);
    for (w, c) in e.terms() {
        let mut m = RationalMatrix::identity(dim);
        for &(i, j) in w {
            m = m.mul(rep.gen(i, j)).expect("square matrices");
        }
        out = out.add(&m.scale(c)).expect("same shape");
    }
    out
}
