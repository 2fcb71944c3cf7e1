//! Sparse exact polynomials in one, two, and three variables.
//!
//! `Poly1` is a polynomial in a single designated variable (E33, or alpha
//! for interpolated traces). `Poly2` lives in (H1, H2) = (E11-E22, E22-E33).
//! `Poly3` is used for symbolic computations in the diagonal coordinates
//! (either (E11, E22, E33) or the Weyl-algebra number operators).
//!
//! No zero coefficients are ever stored.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

// ---------------------------------------------------------------------------
// Poly1
// ---------------------------------------------------------------------------

/// Univariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly1 {
    coeffs: BTreeMap<usize, Rational>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1 { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly1::zero();
        p.set(0, c);
        p
    }

    pub fn one() -> Self {
        Poly1::constant(Rational::one())
    }

    /// The variable itself.
    pub fn var() -> Self {
        let mut p = Poly1::zero();
        p.set(1, Rational::one());
        p
    }

    pub fn from_coeffs(cs: &[Rational]) -> Self {
        let mut p = Poly1::zero();
        for (i, c) in cs.iter().enumerate() {
            p.set(i, c.clone());
        }
        p
    }

    pub fn set(&mut self, deg: usize, c: Rational) {
        if c.is_zero() {
            self.coeffs.remove(&deg);
        } else {
            self.coeffs.insert(deg, c);
        }
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(&deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Rational {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => Rational::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Poly1) -> Poly1 {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.set(*d, out.coeff(*d) + c);
        }
        out
    }

    pub fn sub(&self, other: &Poly1) -> Poly1 {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Poly1 {
        let mut out = Poly1::zero();
        for (d, c) in &self.coeffs {
            out.set(*d, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly1) -> Poly1 {
        let mut out = Poly1::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                out.set(d1 + d2, out.coeff(d1 + d2) + c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner over the sparse support.
        let mut acc = Rational::zero();
        let mut prev_deg = None;
        for (d, c) in self.coeffs.iter().rev() {
            let gap = prev_deg.map_or(0, |p: usize| p - d);
            for _ in 0..gap {
                acc *= x;
            }
            acc += c;
            prev_deg = Some(*d);
        }
        if let Some(d) = prev_deg {
            for _ in 0..d {
                acc *= x;
            }
        }
        acc
    }

    /// f(x + c).
    pub fn shift_arg(&self, c: &Rational) -> Poly1 {
        let mut out = Poly1::zero();
        for (d, a) in &self.coeffs {
            // expand (x+c)^d by binomials
            let mut binom = Rational::one();
            let mut cpow = Rational::one();
            for j in (0..=*d).rev() {
                // coefficient of x^j in (x+c)^d is C(d, j) c^(d-j)
                out.set(j, out.coeff(j) + a * &binom * &cpow);
                if j > 0 {
                    binom = binom * rat(j as i64) / rat((*d - j + 1) as i64);
                    cpow *= c;
                }
            }
        }
        out
    }

    /// Monic rescaling; zero stays zero.
    pub fn monic(&self) -> Poly1 {
        let lc = self.leading_coeff();
        if lc.is_zero() {
            self.clone()
        } else {
            self.scale(&lc.recip())
        }
    }

    /// Exact quotient self / divisor, or None if the division leaves a
    /// remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Poly1) -> Option<Poly1> {
        let dd = divisor.degree()?;
        let dlc = divisor.coeff(dd);
        let mut rem = self.clone();
        let mut quot = Poly1::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let c = rem.coeff(rd) / &dlc;
            let mut t = Poly1::zero();
            t.set(rd - dd, c);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Dense coefficient list c0..cd (empty for zero).
    pub fn dense_coeffs(&self) -> Vec<Rational> {
        match self.degree() {
            None => vec![],
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }
}

/// Unique interpolating polynomial through the samples, exact.
pub fn lagrange_interpolate(samples: &[(Rational, Rational)]) -> Result<Poly1> {
    for (i, (xi, _)) in samples.iter().enumerate() {
        for (xj, _) in &samples[..i] {
            if xi == xj {
                return Err(Error::DuplicateNode(crate::rational::format_rational(xi)));
            }
        }
    }
    let mut acc = Poly1::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = Poly1::constant(yi.clone());
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            // (x - xj) / (xi - xj)
            let denom = xi - xj;
            let mut lin = Poly1::var();
            lin.set(0, -xj.clone());
            term = term.mul(&lin).scale(&denom.recip());
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

/// Polynomial in (H1, H2) with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly2::zero();
        p.set((0, 0), c);
        p
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn var(which: usize) -> Self {
        let mut p = Poly2::zero();
        match which {
            0 => p.set((1, 0), Rational::one()),
            1 => p.set((0, 1), Rational::one()),
            _ => panic!("Poly2 has two variables"),
        }
        p
    }

    pub fn set(&mut self, key: (usize, usize), c: Rational) {
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
    }

    pub fn coeff(&self, key: (usize, usize)) -> Rational {
        self.coeffs.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.coeffs.iter()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|(a, b)| a + b).max()
    }

    /// Leading key in lexicographic order (first exponent, then second).
    pub fn leading_key_lex(&self) -> Option<(usize, usize)> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.set(*k, out.coeff(*k) + c);
        }
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Poly2 {
        let mut out = Poly2::zero();
        for (k, c) in &self.coeffs {
            out.set(*k, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((a1, b1), c1) in &self.coeffs {
            for ((a2, b2), c2) in &other.coeffs {
                let k = (a1 + a2, b1 + b2);
                out.set(k, out.coeff(k) + c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, h1: &Rational, h2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.coeffs {
            let mut t = c.clone();
            for _ in 0..*a {
                t *= h1;
            }
            for _ in 0..*b {
                t *= h2;
            }
            acc += t;
        }
        acc
    }

    /// Substitute each variable by an affine form c0 + c1*H1 + c2*H2.
    pub fn compose_affine(&self, h1_image: &[Rational; 3], h2_image: &[Rational; 3]) -> Poly2 {
        let img = |im: &[Rational; 3]| {
            let mut p = Poly2::constant(im[0].clone());
            p = p.add(&Poly2::var(0).scale(&im[1]));
            p.add(&Poly2::var(1).scale(&im[2]))
        };
        let p1 = img(h1_image);
        let p2 = img(h2_image);
        let mut out = Poly2::zero();
        for ((a, b), c) in &self.coeffs {
            let mut term = Poly2::constant(c.clone());
            for _ in 0..*a {
                term = term.mul(&p1);
            }
            for _ in 0..*b {
                term = term.mul(&p2);
            }
            out = out.add(&term);
        }
        out
    }

    /// f(H1 + d1, H2 + d2) for integer shifts.
    pub fn shift_args(&self, d1: i64, d2: i64) -> Poly2 {
        self.compose_affine(
            &[rat(d1), rat(1), rat(0)],
            &[rat(d2), rat(0), rat(1)],
        )
    }
}

// ---------------------------------------------------------------------------
// Poly3
// ---------------------------------------------------------------------------

/// Polynomial in three commuting variables, exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly3 {
    coeffs: BTreeMap<[usize; 3], Rational>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Poly3 { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly3::zero();
        p.set([0, 0, 0], c);
        p
    }

    pub fn one() -> Self {
        Poly3::constant(Rational::one())
    }

    pub fn var(i: usize) -> Self {
        let mut key = [0usize; 3];
        key[i] = 1;
        let mut p = Poly3::zero();
        p.set(key, Rational::one());
        p
    }

    pub fn set(&mut self, key: [usize; 3], c: Rational) {
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
    }

    pub fn coeff(&self, key: [usize; 3]) -> Rational {
        self.coeffs.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; 3], &Rational)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.set(*k, out.coeff(*k) + c);
        }
        out
    }

    pub fn sub(&self, other: &Poly3) -> Poly3 {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Poly3 {
        let mut out = Poly3::zero();
        for (k, c) in &self.coeffs {
            out.set(*k, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                let k = [k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]];
                out.set(k, out.coeff(k) + c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in &self.coeffs {
            let mut t = c.clone();
            for (i, xi) in x.iter().enumerate() {
                for _ in 0..k[i] {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn degree_in(&self, i: usize) -> usize {
        self.coeffs.keys().map(|k| k[i]).max().unwrap_or(0)
    }

    /// Substitute variable `i` by an arbitrary polynomial.
    pub fn substitute(&self, i: usize, image: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (k, c) in &self.coeffs {
            let mut rest = *k;
            rest[i] = 0;
            let mut term = Poly3::zero();
            term.set(rest, c.clone());
            for _ in 0..k[i] {
                term = term.mul(image);
            }
            out = out.add(&term);
        }
        out
    }

    /// f with variable i shifted: x_i -> x_i + c.
    pub fn shift_var(&self, i: usize, c: &Rational) -> Poly3 {
        let image = Poly3::var(i).add(&Poly3::constant(c.clone()));
        self.substitute(i, &image)
    }

    /// Project to a univariate polynomial in variable `i`; panics if any
    /// other variable actually occurs.
    pub fn to_poly1_in(&self, i: usize) -> Poly1 {
        let mut out = Poly1::zero();
        for (k, c) in &self.coeffs {
            for (j, e) in k.iter().enumerate() {
                assert!(j == i || *e == 0, "polynomial is not univariate in variable {i}");
            }
            out.set(k[i], out.coeff(k[i]) + c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn poly1_eval_examples() {
        assert_eq!(Poly1::var().eval(&rat(5)), rat(5));
        assert_eq!(Poly1::zero().eval(&rat(17)), rat(0));
    }

    #[test]
    fn poly2_eval_example() {
        // H1*H2 + 1 at (2,3) = 7
        let p = Poly2::var(0).mul(&Poly2::var(1)).add(&Poly2::one());
        assert_eq!(p.eval(&rat(2), &rat(3)), rat(7));
    }

    #[test]
    fn interpolate_line_and_constant() {
        let p = lagrange_interpolate(&[(rat(0), rat(0)), (rat(1), rat(1))]).unwrap();
        assert_eq!(p, Poly1::var());
        let q =
            lagrange_interpolate(&[(rat(0), rat(1)), (rat(1), rat(1)), (rat(2), rat(1))]).unwrap();
        assert_eq!(q, Poly1::one());
    }

    #[test]
    fn interpolate_square_checked_at_fresh_point() {
        let p = lagrange_interpolate(&[(rat(0), rat(0)), (rat(1), rat(1)), (rat(2), rat(4))])
            .unwrap();
        assert_eq!(p.eval(&rat(3)), rat(9));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn interpolate_rejects_duplicates() {
        let err = lagrange_interpolate(&[(rat(1), rat(0)), (rat(1), rat(2))]).unwrap_err();
        assert!(matches!(err, Error::DuplicateNode(_)));
    }

    #[test]
    fn shift_arg_matches_eval() {
        let p = Poly1::from_coeffs(&[rat(1), rat(-3), rat(0), rat(2)]);
        let q = p.shift_arg(&ratio(1, 2));
        for x in -3..4 {
            assert_eq!(q.eval(&rat(x)), p.eval(&(rat(x) + ratio(1, 2))));
        }
    }

    #[test]
    fn poly3_substitute_reduces() {
        // (N1 + N2 + N3)^2 with N2 -> a - N1 - N3 collapses to a^2
        let z = Poly3::var(0).add(&Poly3::var(1)).add(&Poly3::var(2));
        let sq = z.mul(&z);
        let a = rat(5);
        let image = Poly3::constant(a.clone())
            .sub(&Poly3::var(0))
            .sub(&Poly3::var(2));
        let red = sq.substitute(1, &image);
        assert_eq!(red, Poly3::constant(rat(25)));
    }
}
