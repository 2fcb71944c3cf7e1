//! The quotient algebra realized as operators on S^alpha(V).
//!
//! Everything here works with concrete matrices on the symmetric-power
//! model: the involution extended to all operators (a Fischer-weighted
//! transpose), the normalized trace and the invariant form built from it,
//! interpolation of traces across alpha, the degree-balanced shift
//! monomials u_gamma / u_nu_plus, and the adjoint action in its two
//! guises:
//!
//! * `ad_action` is the plain associative commutator with a realized
//!   element, appropriate when the element is a single Lie generator;
//! * `hopf_ad` extends the Lie-algebra adjoint action to words
//!   multiplicatively, ad(xy) = ad(x) ad(y) with each generator acting by
//!   commutator. The constructions that iterate ad of the quadratic
//!   z-elements need this version: the plain commutator of a length-2
//!   word does not preserve the kernel of ad E12 and would break the
//!   cyclic-module structure the polynomial families live in.

use std::collections::BTreeMap;

use num::One;

use crate::envelope::{realize, EnvelopeElement, Gen};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::{lagrange_interpolate, Poly1, Poly2};
use crate::rational::{factorial, rat, Rational};
use crate::rep::{build_symmetric_model, symmetric_basis, Representation, Weight};

/// Binomial dimension of S^alpha(V).
pub fn model_dim(alpha: usize) -> usize {
    (alpha + 1) * (alpha + 2) / 2
}

/// Extension of the Chevalley involution to all operators on S^alpha(V):
/// the transpose conjugated by the diagonal Fischer weights k1! k2! k3!.
pub fn omega_operator(m: &RationalMatrix, alpha: usize) -> Result<RationalMatrix> {
    let dim = model_dim(alpha);
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::ShapeMismatch(m.rows(), m.cols(), dim, dim));
    }
    let basis = symmetric_basis(alpha);
    let weights: Vec<Rational> = basis
        .iter()
        .map(|k| factorial(k.0[0]) * factorial(k.0[1]) * factorial(k.0[2]))
        .collect();
    let mut out = RationalMatrix::zero(dim, dim);
    for ((i, j), v) in m.transpose().entries() {
        out.set(*i, *j, v * &weights[*j] / &weights[*i]);
    }
    Ok(out)
}

/// Trace divided by the model dimension.
pub fn normalized_trace(m: &RationalMatrix, alpha: usize) -> Result<Rational> {
    let dim = model_dim(alpha);
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::ShapeMismatch(m.rows(), m.cols(), dim, dim));
    }
    Ok(m.trace()? / rat(dim as i64))
}

/// The invariant form <u, v> = L(u omega(v)) on operators.
pub fn invariant_form(
    u: &RationalMatrix,
    v: &RationalMatrix,
    alpha: usize,
) -> Result<Rational> {
    let om = omega_operator(v, alpha)?;
    normalized_trace(&u.mul(&om)?, alpha)
}

/// Normalized trace of an envelope element as a polynomial in alpha,
/// interpolated through the integer models alpha = 0..=d where d bounds
/// the word length. This is what "the form at generic alpha" means here.
pub fn hc_polynomial(e: &EnvelopeElement) -> Poly1 {
    let d = e.max_word_len();
    let samples: Vec<(Rational, Rational)> = (0..=d)
        .map(|a| {
            let rep = build_symmetric_model(a as i64).expect("nonnegative alpha");
            let tr = normalized_trace(&realize(e, &rep), a).expect("square");
            (rat(a as i64), tr)
        })
        .collect();
    lagrange_interpolate(&samples).expect("distinct nodes")
}

/// A degree-balanced monomial in the Weyl-algebra generators: entry i
/// encodes p_i^{m_i} for m_i >= 0 and q_i^{-m_i} for m_i < 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightShiftMonomial(pub [i64; 3]);

impl WeightShiftMonomial {
    pub fn identity() -> Self {
        WeightShiftMonomial([0; 3])
    }

    pub fn weight(&self) -> Weight {
        Weight(self.0[0], self.0[1], self.0[2])
    }
}

/// u_nu^+ for nu in Q^+ (coordinates summing to zero, k1 >= 0, k2 <= 0).
pub fn u_nu_plus(nu: Weight) -> Result<WeightShiftMonomial> {
    let u = u_gamma(nu)?;
    if nu.0 < 0 || nu.1 > 0 {
        return Err(Error::NotInQPlus(nu.0, nu.1, nu.2));
    }
    Ok(u)
}

/// u_gamma for any root-lattice weight.
pub fn u_gamma(gamma: Weight) -> Result<WeightShiftMonomial> {
    if !gamma.in_root_lattice() {
        return Err(Error::NotInRootLattice(gamma.0, gamma.1, gamma.2));
    }
    Ok(WeightShiftMonomial([gamma.0, gamma.1, gamma.2]))
}

/// Matrix of the shift monomial on S^alpha(V): all derivatives (q-factors)
/// first, then the multiplications (p-factors); degree balance keeps the
/// space invariant.
pub fn shift_realize(u: &WeightShiftMonomial, alpha: usize) -> RationalMatrix {
    let basis = symmetric_basis(alpha);
    let index: BTreeMap<_, usize> = basis.iter().enumerate().map(|(n, k)| (k.0, n)).collect();
    let dim = basis.len();
    let mut m = RationalMatrix::zero(dim, dim);
    'src: for (col, k) in basis.iter().enumerate() {
        let mut coeff = Rational::one();
        let mut target = [0i64; 3];
        for i in 0..3 {
            target[i] = k.0[i] as i64 + u.0[i];
            if u.0[i] < 0 {
                // q_i^{-m_i}: falling factorial k_i (k_i - 1) ...
                for step in 0..(-u.0[i]) {
                    let f = k.0[i] as i64 - step;
                    if f <= 0 {
                        continue 'src;
                    }
                    coeff *= rat(f);
                }
            }
        }
        if target.iter().any(|&t| t < 0) {
            continue;
        }
        let target = [target[0] as usize, target[1] as usize, target[2] as usize];
        let row = index[&target];
        m.set(row, col, coeff);
    }
    m
}

/// Envelope word realizing the same operator as `shift_realize(u)`:
/// products of E12/E32 (resp. E12/E13) collect the p- and q-factors.
/// Lets trace interpolation extend shift-monomial computations to
/// generic alpha.
pub fn shift_word(u: &WeightShiftMonomial) -> Result<EnvelopeElement> {
    let [k1, _k2, k3] = u.0;
    if !u.weight().in_root_lattice() {
        return Err(Error::NotInRootLattice(u.0[0], u.0[1], u.0[2]));
    }
    if u.0[0] < 0 || u.0[1] > 0 {
        return Err(Error::NotInQPlus(u.0[0], u.0[1], u.0[2]));
    }
    let mut word: Vec<Gen> = Vec::new();
    if k3 >= 0 {
        // p1^{k1} p3^{k3} q2^{k1+k3}
        word.extend(std::iter::repeat((1, 2)).take(k1 as usize));
        word.extend(std::iter::repeat((3, 2)).take(k3 as usize));
    } else {
        // p1^{k1} q2^{-k2} q3^{-k3}
        word.extend(std::iter::repeat((1, 2)).take((-u.0[1]) as usize));
        word.extend(std::iter::repeat((1, 3)).take((-k3) as usize));
    }
    Ok(EnvelopeElement::word(&word, Rational::one()))
}

/// Plain commutator with the realized element.
pub fn ad_action(
    z: &EnvelopeElement,
    m: &RationalMatrix,
    rep: &Representation,
) -> Result<RationalMatrix> {
    let zm = realize(z, rep);
    if zm.cols() != m.rows() {
        return Err(Error::ShapeMismatch(zm.rows(), zm.cols(), m.rows(), m.cols()));
    }
    zm.commutator(m)
}

/// Adjoint action of an envelope element through the Hopf structure:
/// each word acts as the composition of generator commutators.
pub fn hopf_ad(
    z: &EnvelopeElement,
    m: &RationalMatrix,
    rep: &Representation,
) -> Result<RationalMatrix> {
    let dim = rep.dim();
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::ShapeMismatch(m.rows(), m.cols(), dim, dim));
    }
    let mut out = RationalMatrix::zero(dim, dim);
    for (w, c) in z.terms() {
        let mut acc = m.clone();
        for &(i, j) in w.iter().rev() {
            acc = rep.gen(i, j).commutator(&acc)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// Diagonal operator f(E33) on the monomial basis.
pub fn diag_poly1(f: &Poly1, alpha: usize) -> RationalMatrix {
    let basis = symmetric_basis(alpha);
    let mut m = RationalMatrix::zero(basis.len(), basis.len());
    for (n, k) in basis.iter().enumerate() {
        m.set(n, n, f.eval(&rat(k.0[2] as i64)));
    }
    m
}

/// Diagonal operator f(H1, H2) with H1 = E11 - E22, H2 = E22 - E33.
pub fn diag_poly2(f: &Poly2, alpha: usize) -> RationalMatrix {
    let basis = symmetric_basis(alpha);
    let mut m = RationalMatrix::zero(basis.len(), basis.len());
    for (n, k) in basis.iter().enumerate() {
        let h1 = rat(k.0[0] as i64 - k.0[1] as i64);
        let h2 = rat(k.0[1] as i64 - k.0[2] as i64);
        m.set(n, n, f.eval(&h1, &h2));
    }
    m
}

/// How well the cyclic generators span an ad-weight component.
#[derive(Debug, Clone)]
pub struct SpanReport {
    pub component_dim: usize,
    pub cyclic_rank: usize,
}

impl SpanReport {
    pub fn spanned(&self) -> bool {
        self.component_dim == self.cyclic_rank
    }
}

/// Basis (as matrices) of the ad-weight-mu subspace of End(S^alpha V),
/// together with a report comparing it against the span of
/// f(E11, E22, E33) u_mu over monomials f.
pub fn weight_component_basis(
    alpha: usize,
    mu: Weight,
) -> Result<(Vec<RationalMatrix>, SpanReport)> {
    if !mu.in_root_lattice() {
        return Err(Error::NotInRootLattice(mu.0, mu.1, mu.2));
    }
    let rep = build_symmetric_model(alpha as i64).expect("nonnegative");
    let dim = rep.dim();
    // matrix units E_{rs} with weight(r) - weight(s) = mu
    let mut positions = Vec::new();
    for r in 0..dim {
        for s in 0..dim {
            let w = rep.weights[r];
            let v = rep.weights[s];
            if (w.0 - v.0, w.1 - v.1, w.2 - v.2) == (mu.0, mu.1, mu.2) {
                positions.push((r, s));
            }
        }
    }
    let basis: Vec<RationalMatrix> = positions
        .iter()
        .map(|&(r, s)| {
            let mut m = RationalMatrix::zero(dim, dim);
            m.set(r, s, Rational::one());
            m
        })
        .collect();

    // span of { E11^a E22^b u_mu } restricted to those coordinates
    let u = shift_realize(&u_gamma(mu)?, alpha);
    let monomial_basis = symmetric_basis(alpha);
    let mut candidate_rows: Vec<Vec<Rational>> = Vec::new();
    let mut rank = 0;
    'grow: for total in 0..=(2 * alpha) {
        for a in 0..=total {
            let b = total - a;
            // diag(E11^a E22^b) . u
            let mut diag = RationalMatrix::zero(dim, dim);
            for (n, k) in monomial_basis.iter().enumerate() {
                let mut v = Rational::one();
                for _ in 0..a {
                    v *= rat(k.0[0] as i64);
                }
                for _ in 0..b {
                    v *= rat(k.0[1] as i64);
                }
                diag.set(n, n, v);
            }
            let cand = diag.mul(&u)?;
            candidate_rows.push(positions.iter().map(|&(r, s)| cand.get(r, s)).collect());
            rank = row_rank(&candidate_rows);
            if rank == positions.len() {
                break 'grow;
            }
        }
    }

    Ok((basis, SpanReport { component_dim: positions.len(), cyclic_rank: rank }))
}

fn row_rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m = RationalMatrix::zero(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m.rank()
}

/// Multiplicities of the adjoint-representation constituents L^{k theta}:
/// for each k, the dimension of the space of operators of ad-weight
/// k(1,0,-1) killed by ad E12 and ad E23. Trailing zeros are trimmed, so
/// the expected output is [1; alpha + 1]; the computation runs one step
/// past alpha so a spurious nonzero there would surface.
pub fn adjoint_decomposition(alpha: usize) -> Vec<usize> {
    let rep = build_symmetric_model(alpha as i64).expect("nonnegative");
    let dim = rep.dim();
    let mut mults = Vec::new();
    for k in 0..=(alpha as i64 + 1) {
        let target = Weight(k, 0, -k);
        let mut positions = Vec::new();
        for r in 0..dim {
            for s in 0..dim {
                let w = rep.weights[r];
                let v = rep.weights[s];
                if (w.0 - v.0, w.1 - v.1, w.2 - v.2) == (target.0, target.1, target.2) {
                    positions.push((r, s));
                }
            }
        }
        if positions.is_empty() {
            mults.push(0);
            continue;
        }
        // rows: flattened entries of [E12, u] and [E23, u]; cols: units
        let mut constraints = RationalMatrix::zero(2 * dim * dim, positions.len());
        for (col, &(r, s)) in positions.iter().enumerate() {
            let mut unit = RationalMatrix::zero(dim, dim);
            unit.set(r, s, Rational::one());
            let c12 = rep.gen(1, 2).commutator(&unit).expect("square");
            let c23 = rep.gen(2, 3).commutator(&unit).expect("square");
            for ((i, j), v) in c12.entries() {
                constraints.set(i * dim + j, col, v.clone());
            }
            for ((i, j), v) in c23.entries() {
                constraints.set(dim * dim + i * dim + j, col, v.clone());
            }
        }
        mults.push(constraints.kernel_basis().len());
    }
    while mults.last() == Some(&0) {
        mults.pop();
    }
    mults
}
