//! Symbolic calculus in the degree-zero part of the Weyl algebra on three
//! variables.
//!
//! Every element is kept in the normal form
//!
//! ```text
//!     sum over shifts gamma of  f_gamma(N1, N2, N3) . r^gamma
//! ```
//!
//! where N_i = p_i q_i is the i-th number operator, r_i^m stands for
//! p_i^m (m >= 0) or q_i^{-m} (m < 0), and f is evaluated at the *target*
//! exponent (apply the shift first, then the polynomial). On a monomial
//! x^k such a term acts as
//!
//! ```text
//!     f(k + gamma) . prod_{gamma_i < 0} k_i (k_i - 1) ... (k_i + gamma_i + 1)
//! ```
//!
//! The product of two normal forms stays in normal form; the reordering
//! cost is a per-coordinate polynomial correction obtained from the
//! p^a q^m identities (a falling-factorial ratio that always divides out
//! exactly). This gives a computation path for the adjoint action that
//! never touches a matrix: the polynomial families produced this way are
//! an independent check of the matrix-sampling route.
//!
//! On S^alpha(V) the central element N1 + N2 + N3 equals alpha, so
//! elements are compared after eliminating N2 = alpha - N1 - N3.

use std::collections::BTreeMap;

use num::Zero;

use crate::envelope::EnvelopeElement;
use crate::error::{Error, Result};
use crate::poly::{Poly1, Poly3};
use crate::rational::{rat, Rational};

/// Normal-form element of B3.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct B3Element {
    terms: BTreeMap<[i64; 3], Poly3>,
}

/// Falling factorial (x + offset)(x + offset - 1)...(x + offset - len + 1)
/// as a polynomial in the variable `var` of a Poly3.
fn falling(var: usize, offset: i64, len: i64) -> Poly3 {
    let mut acc = Poly3::one();
    for s in 0..len {
        acc = acc.mul(&Poly3::var(var).add(&Poly3::constant(rat(offset - s))));
    }
    acc
}

/// The q-coefficient of a shift, as a polynomial in the source exponent
/// written in terms of the target variable t = k + a: for shift a < 0 it
/// is the falling factorial of length -a starting at t - a.
fn shift_cost(var: usize, a: i64) -> Poly3 {
    if a >= 0 {
        Poly3::one()
    } else {
        falling(var, -a, -a)
    }
}

impl B3Element {
    pub fn zero() -> Self {
        B3Element::default()
    }

    pub fn one() -> Self {
        B3Element::term([0, 0, 0], Poly3::one())
    }

    pub fn term(shift: [i64; 3], f: Poly3) -> Self {
        let mut e = B3Element::zero();
        e.push(shift, f);
        e
    }

    fn push(&mut self, shift: [i64; 3], f: Poly3) {
        if f.is_zero() {
            return;
        }
        let entry = self.terms.entry(shift).or_insert_with(Poly3::zero);
        *entry = entry.add(&f);
        if entry.is_zero() {
            self.terms.remove(&shift);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<[i64; 3], Poly3> {
        &self.terms
    }

    /// E_ij as a normal-form element: the number operator on the
    /// diagonal, a bare shift off it.
    pub fn generator(i: usize, j: usize) -> Self {
        assert!((1..=3).contains(&i) && (1..=3).contains(&j));
        if i == j {
            B3Element::term([0, 0, 0], Poly3::var(i - 1))
        } else {
            let mut shift = [0i64; 3];
            shift[i - 1] += 1;
            shift[j - 1] -= 1;
            B3Element::term(shift, Poly3::one())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, f) in &other.terms {
            out.push(*s, f.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = B3Element::zero();
        for (s, f) in &self.terms {
            out.push(*s, f.scale(c));
        }
        out
    }

    /// Normal-ordered product. For each pair of terms f r^a . g r^b the
    /// result is f(N) g(N - a) rho(N) r^{a+b}, where rho collects the
    /// per-coordinate reordering factors
    ///
    ///   rho_i = cost_b(t - a - b) cost_a(t - a) / cost_{a+b}(t - a - b),
    ///
    /// a ratio of falling factorials that is always an exact polynomial.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = B3Element::zero();
        for (ga, f) in &self.terms {
            for (gb, g) in &other.terms {
                let shift = [ga[0] + gb[0], ga[1] + gb[1], ga[2] + gb[2]];
                // g evaluated at N - a
                let mut coeff = f.clone();
                let mut shifted_g = g.clone();
                for i in 0..3 {
                    shifted_g = shifted_g.shift_var(i, &rat(-ga[i]));
                }
                coeff = coeff.mul(&shifted_g);
                for i in 0..3 {
                    let (a, b) = (ga[i], gb[i]);
                    // cost_b evaluated at t - a - b, cost_a at t - a,
                    // divided by the combined cost at t - a - b; each
                    // shift_cost already sits at t - (its own shift).
                    let num = shift_cost_at(i, b, -a).mul(&shift_cost_at(i, a, 0));
                    let den = shift_cost_at(i, a + b, 0);
                    coeff = divide_in_var(&coeff.mul(&num), &den, i);
                }
                out.push(shift, coeff);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Apply to a single monomial exponent; returns (target, coefficient)
    /// pairs with nonzero coefficient.
    pub fn apply_monomial(&self, k: [i64; 3]) -> Vec<([i64; 3], Rational)> {
        let mut out = Vec::new();
        for (s, f) in &self.terms {
            let target = [k[0] + s[0], k[1] + s[1], k[2] + s[2]];
            if target.iter().any(|&t| t < 0) {
                continue;
            }
            let mut c = f.eval(&[rat(target[0]), rat(target[1]), rat(target[2])]);
            for i in 0..3 {
                if s[i] < 0 {
                    for step in 0..(-s[i]) {
                        c *= rat(k[i] - step);
                    }
                }
            }
            if !c.is_zero() {
                out.push((target, c));
            }
        }
        out
    }

    /// Eliminate N2 using the central relation N1 + N2 + N3 = alpha.
    pub fn reduce(&self, alpha: &Rational) -> Self {
        let image = Poly3::constant(alpha.clone())
            .sub(&Poly3::var(0))
            .sub(&Poly3::var(2));
        let mut out = B3Element::zero();
        for (s, f) in &self.terms {
            out.push(*s, f.substitute(1, &image));
        }
        out
    }
}

/// `shift_cost(var, a)` with the variable offset by `extra`: the cost
/// polynomial evaluated at t + extra.
fn shift_cost_at(var: usize, a: i64, extra: i64) -> Poly3 {
    shift_cost(var, a).shift_var(var, &rat(extra))
}

/// Exact division of polynomials viewed as univariate in `var` with
/// coefficients in the remaining variables; the divisor only involves
/// `var`, and the division always comes out exact here.
fn divide_in_var(num: &Poly3, den: &Poly3, var: usize) -> Poly3 {
    if den == &Poly3::one() {
        return num.clone();
    }
    let den1 = den.to_poly1_in(var);
    // split num by the exponents of the other two variables
    let others: Vec<usize> = (0..3).filter(|&v| v != var).collect();
    let mut buckets: BTreeMap<[usize; 2], Poly1> = BTreeMap::new();
    for (key, c) in num.iter() {
        let bk = [key[others[0]], key[others[1]]];
        let entry = buckets.entry(bk).or_insert_with(Poly1::zero);
        entry.set(key[var], entry.coeff(key[var]) + c);
    }
    let mut out = Poly3::zero();
    for (bk, p) in buckets {
        let q = p
            .div_exact(&den1)
            .expect("reordering factor must divide exactly");
        for (d, c) in q.iter() {
            let mut key = [0usize; 3];
            key[others[0]] = bk[0];
            key[others[1]] = bk[1];
            key[var] = *d;
            out.set(key, out.coeff(key) + c);
        }
    }
    out
}

/// Translate an envelope element into B3 via E_ij -> p_i q_j.
pub fn from_envelope(e: &EnvelopeElement) -> B3Element {
    let mut out = B3Element::zero();
    for (w, c) in e.terms() {
        let mut acc = B3Element::one();
        for &(i, j) in w {
            acc = acc.mul(&B3Element::generator(i, j));
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// Hopf adjoint action of an envelope element inside B3: every word acts
/// as the composition of generator commutators.
pub fn hopf_ad_b3(z: &EnvelopeElement, m: &B3Element) -> B3Element {
    let mut out = B3Element::zero();
    for (w, c) in z.terms() {
        let mut acc = m.clone();
        for &(i, j) in w.iter().rev() {
            acc = B3Element::generator(i, j).commutator(&acc);
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// Split a reduced element expected to be f(E33) . r^shift into the
/// polynomial f; fails with NotCyclic if extra shifts or extra variables
/// survive the reduction.
pub fn extract_cyclic(m: &B3Element, shift: [i64; 3], alpha: &Rational) -> Result<Poly1> {
    let red = m.reduce(alpha);
    if red.is_zero() {
        return Ok(Poly1::zero());
    }
    if red.terms.len() != 1 || !red.terms.contains_key(&shift) {
        return Err(Error::NotCyclic(format!(
            "expected a single shift {shift:?}, found {:?}",
            red.terms.keys().collect::<Vec<_>>()
        )));
    }
    let f = &red.terms[&shift];
    if f.degree_in(0) > 0 || f.degree_in(1) > 0 {
        return Err(Error::NotCyclic(
            "coefficient depends on more than E33 after reduction".into(),
        ));
    }
    Ok(f.to_poly1_in(2))
}
