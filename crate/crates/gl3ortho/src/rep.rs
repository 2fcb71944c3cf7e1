//! Concrete matrix models of irreducible gl(3)-modules.
//!
//! Two realizations are provided:
//!
//! * the symmetric-power model on S^alpha(V), where E_ij acts as the
//!   differential operator x_i d/dx_j on monomials of total degree alpha;
//! * the Gelfand-Tsetlin model for an arbitrary dominant highest weight,
//!   with the classical action formulas on GT diagrams.
//!
//! Basis orderings are deterministic: monomials are listed in decreasing
//! lexicographic order of the exponent triple (so the alpha = 1 basis is
//! x1, x2, x3), and GT diagrams in increasing lexicographic order of
//! (lambda21, lambda22, lambda11).
//!
//! In the GT raising/lowering formulas for E23 and E32 the shifted entries
//! are the middle-row ones (delta21, delta22); shifting delta11 in those
//! two lines, as sometimes printed, is inconsistent with the weights (E23
//! must raise the E22-eigenvalue, which lambda11 does not enter), and the
//! commutation self-check confirms the middle-row reading.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{rat, Rational};

/// Weight in the epsilon-coordinates of the diagonal torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub i64, pub i64, pub i64);

impl Weight {
    pub fn zero() -> Self {
        Weight(0, 0, 0)
    }

    /// Sum of coordinates vanishes, i.e. the weight lies in the root lattice.
    pub fn in_root_lattice(&self) -> bool {
        self.0 + self.1 + self.2 == 0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0 + other.0, self.1 + other.1, self.2 + other.2)
    }

    /// eps_i - eps_j for 1-based i, j.
    pub fn root(i: usize, j: usize) -> Weight {
        let mut c = [0i64; 3];
        c[i - 1] += 1;
        c[j - 1] -= 1;
        Weight(c[0], c[1], c[2])
    }

    pub fn coord(&self, i: usize) -> i64 {
        match i {
            1 => self.0,
            2 => self.1,
            3 => self.2,
            _ => panic!("weight coordinate index must be 1..=3"),
        }
    }
}

/// Dominant integral highest weight for gl(3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HighestWeight(pub i64, pub i64, pub i64);

impl HighestWeight {
    pub fn validate(&self) -> Result<()> {
        if self.0 < self.1 || self.1 < self.2 {
            return Err(Error::InvalidHighestWeight(self.0, self.1, self.2));
        }
        Ok(())
    }
}

/// Exponents of a monomial basis vector of S^alpha(V).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIndex(pub [usize; 3]);

impl MonomialIndex {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn weight(&self) -> Weight {
        Weight(self.0[0] as i64, self.0[1] as i64, self.0[2] as i64)
    }
}

/// A Gelfand-Tsetlin diagram for gl(3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GTDiagram {
    pub top: [i64; 3],
    pub mid: [i64; 2],
    pub bot: i64,
}

impl GTDiagram {
    pub fn betweenness(&self) -> bool {
        let [t1, t2, t3] = self.top;
        let [m1, m2] = self.mid;
        t1 >= m1 && m1 >= t2 && t2 >= m2 && m2 >= t3 && m1 >= self.bot && self.bot >= m2
    }

    /// Diagonal weight read off the E_ii eigenvalue formulas.
    pub fn weight(&self) -> Weight {
        let e11 = self.bot;
        let e22 = self.mid[0] + self.mid[1] - self.bot;
        let e33 = self.top.iter().sum::<i64>() - self.mid[0] - self.mid[1];
        Weight(e11, e22, e33)
    }

    /// l_ki = lambda_ki - i + 1 for the middle and top rows.
    fn l2(&self, i: usize) -> i64 {
        self.mid[i - 1] - (i as i64) + 1
    }

    fn l3(&self, i: usize) -> i64 {
        self.top[i - 1] - (i as i64) + 1
    }

    fn l1(&self) -> i64 {
        self.bot
    }

    fn shift_mid(&self, i: usize, by: i64) -> GTDiagram {
        let mut d = *self;
        d.mid[i - 1] += by;
        d
    }

    fn shift_bot(&self, by: i64) -> GTDiagram {
        let mut d = *self;
        d.bot += by;
        d
    }
}

/// Which labelling a model's basis carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisLabel {
    Monomial(MonomialIndex),
    Diagram(GTDiagram),
}

/// A finite-dimensional module with explicit generator matrices.
#[derive(Debug, Clone)]
pub struct Representation {
    pub labels: Vec<BasisLabel>,
    pub weights: Vec<Weight>,
    gens: BTreeMap<(usize, usize), RationalMatrix>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Matrix of E_ij (1-based indices).
    pub fn gen(&self, i: usize, j: usize) -> &RationalMatrix {
        self.gens
            .get(&(i, j))
            .expect("generator indices must be within 1..=3")
    }
}

/// Monomial exponents of total degree `alpha`, decreasing lexicographically.
pub fn symmetric_basis(alpha: usize) -> Vec<MonomialIndex> {
    let mut out = Vec::new();
    for k1 in (0..=alpha).rev() {
        for k2 in (0..=alpha - k1).rev() {
            out.push(MonomialIndex([k1, k2, alpha - k1 - k2]));
        }
    }
    out
}

/// The symmetric-power model S^alpha(V).
pub fn build_symmetric_model(alpha: i64) -> Result<Representation> {
    if alpha < 0 {
        return Err(Error::UnsupportedAlpha(alpha.to_string()));
    }
    let alpha = alpha as usize;
    let basis = symmetric_basis(alpha);
    let index: BTreeMap<MonomialIndex, usize> =
        basis.iter().enumerate().map(|(n, k)| (*k, n)).collect();
    let dim = basis.len();
    let mut gens = BTreeMap::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let mut m = RationalMatrix::zero(dim, dim);
            for (col, k) in basis.iter().enumerate() {
                let kj = k.0[j - 1];
                if kj == 0 {
                    continue;
                }
                let mut target = k.0;
                target[j - 1] -= 1;
                target[i - 1] += 1;
                let row = index[&MonomialIndex(target)];
                m.set(row, col, rat(kj as i64));
            }
            gens.insert((i, j), m);
        }
    }
    let weights = basis.iter().map(|k| k.weight()).collect();
    Ok(Representation {
        labels: basis.into_iter().map(BasisLabel::Monomial).collect(),
        weights,
        gens,
    })
}

/// All GT diagrams with the given top row, lexicographic in
/// (lambda21, lambda22, lambda11).
pub fn enumerate_gt_diagrams(lambda: HighestWeight) -> Result<Vec<GTDiagram>> {
    lambda.validate()?;
    let HighestWeight(t1, t2, t3) = lambda;
    let mut out = Vec::new();
    for m1 in t2..=t1 {
        for m2 in t3..=t2 {
            for b in m2..=m1 {
                out.push(GTDiagram { top: [t1, t2, t3], mid: [m1, m2], bot: b });
            }
        }
    }
    debug_assert!(out.iter().all(GTDiagram::betweenness));
    Ok(out)
}

/// The Gelfand-Tsetlin model of the irreducible module L^lambda.
pub fn build_gt_model(lambda: HighestWeight) -> Result<Representation> {
    let basis = enumerate_gt_diagrams(lambda)?;
    let index: BTreeMap<GTDiagram, usize> =
        basis.iter().enumerate().map(|(n, d)| (*d, n)).collect();
    let dim = basis.len();

    // accumulate columns: for each source diagram, a list of
    // (target diagram, coefficient); targets outside betweenness vanish.
    let build = |entries: &dyn Fn(&GTDiagram) -> Result<Vec<(GTDiagram, Rational)>>|
     -> Result<RationalMatrix> {
        let mut m = RationalMatrix::zero(dim, dim);
        for (col, d) in basis.iter().enumerate() {
            for (target, c) in entries(d)? {
                if !target.betweenness() || c.is_zero() {
                    continue;
                }
                let row = index[&target];
                m.set(row, col, m.get(row, col) + c);
            }
        }
        Ok(m)
    };

    let mut gens: BTreeMap<(usize, usize), RationalMatrix> = BTreeMap::new();

    gens.insert(
        (1, 1),
        build(&|d| Ok(vec![(*d, rat(d.bot))]))?,
    );
    gens.insert(
        (2, 2),
        build(&|d| Ok(vec![(*d, rat(d.mid[0] + d.mid[1] - d.bot))]))?,
    );
    gens.insert(
        (3, 3),
        build(&|d| {
            Ok(vec![(*d, rat(d.top.iter().sum::<i64>() - d.mid[0] - d.mid[1]))])
        })?,
    );
    gens.insert(
        (1, 2),
        build(&|d| {
            let c = -rat((d.l1() - d.l2(1)) * (d.l1() - d.l2(2)));
            Ok(vec![(d.shift_bot(1), c)])
        })?,
    );
    gens.insert(
        (2, 1),
        build(&|d| Ok(vec![(d.shift_bot(-1), Rational::one())]))?,
    );
    gens.insert(
        (2, 3),
        build(&|d| {
            let denom = d.l2(1) - d.l2(2);
            if denom == 0 {
                return Err(Error::DegenerateDiagram);
            }
            let c1 = -rat((d.l2(1) - d.l3(1)) * (d.l2(1) - d.l3(2)) * (d.l2(1) - d.l3(3)))
                / rat(denom);
            let c2 = -rat((d.l2(2) - d.l3(1)) * (d.l2(2) - d.l3(2)) * (d.l2(2) - d.l3(3)))
                / rat(-denom);
            Ok(vec![(d.shift_mid(1, 1), c1), (d.shift_mid(2, 1), c2)])
        })?,
    );
    gens.insert(
        (3, 2),
        build(&|d| {
            let denom = d.l2(1) - d.l2(2);
            if denom == 0 {
                return Err(Error::DegenerateDiagram);
            }
            let c1 = rat(d.l2(1) - d.l1()) / rat(denom);
            let c2 = rat(d.l2(2) - d.l1()) / rat(-denom);
            Ok(vec![(d.shift_mid(1, -1), c1), (d.shift_mid(2, -1), c2)])
        })?,
    );

    // The remaining generators are forced by the bracket.
    let e13 = gens[&(1, 2)].commutator(&gens[&(2, 3)]).expect("square");
    let e31 = gens[&(3, 2)].commutator(&gens[&(2, 1)]).expect("square");
    gens.insert((1, 3), e13);
    gens.insert((3, 1), e31);

    let weights = basis.iter().map(GTDiagram::weight).collect();
    Ok(Representation {
        labels: basis.into_iter().map(BasisLabel::Diagram).collect(),
        weights,
        gens,
    })
}

/// Outcome of the 81-identity bracket check.
#[derive(Debug, Clone, Default)]
pub struct CommutationReport {
    /// Pairs ((i,j),(k,l)) where [E_ij, E_kl] failed to match.
    pub failures: Vec<((usize, usize), (usize, usize))>,
}

impl CommutationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify [E_ij, E_kl] = delta_jk E_il - delta_li E_kj for all 81 pairs.
pub fn check_commutation(rep: &Representation) -> CommutationReport {
    let dim = rep.dim();
    let mut report = CommutationReport::default();
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                for l in 1..=3 {
                    let lhs = rep.gen(i, j).commutator(rep.gen(k, l)).expect("square");
                    let mut rhs = RationalMatrix::zero(dim, dim);
                    if j == k {
                        rhs = rhs.add(rep.gen(i, l)).expect("shape");
                    }
                    if l == i {
                        rhs = rhs.sub(rep.gen(k, j)).expect("shape");
                    }
                    if lhs != rhs {
                        report.failures.push(((i, j), (k, l)));
                    }
                }
            }
        }
    }
    report
}

/// Joint kernel of E12 and E23 (vectors killed by both raising operators).
pub fn vacuum_vectors(rep: &Representation) -> Vec<Vec<Rational>> {
    let dim = rep.dim();
    let mut stacked = RationalMatrix::zero(2 * dim, dim);
    for ((r, c), v) in rep.gen(1, 2).entries() {
        stacked.set(*r, *c, v.clone());
    }
    for ((r, c), v) in rep.gen(2, 3).entries() {
        stacked.set(dim + r, *c, v.clone());
    }
    stacked.kernel_basis()
}

/// Kernel of E12: the gl(2)-highest subspace.
pub fn gl2_highest_subspace(rep: &Representation) -> Vec<Vec<Rational>> {
    rep.gen(1, 2).kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_dimensions() {
        assert_eq!(build_symmetric_model(2).unwrap().dim(), 6);
        assert_eq!(build_symmetric_model(0).unwrap().dim(), 1);
        assert!(matches!(
            build_symmetric_model(-1),
            Err(Error::UnsupportedAlpha(_))
        ));
    }

    #[test]
    fn symmetric_alpha1_product_rule() {
        let rep = build_symmetric_model(1).unwrap();
        // basis order x1, x2, x3
        assert_eq!(
            rep.labels[0],
            BasisLabel::Monomial(MonomialIndex([1, 0, 0]))
        );
        let e12 = rep.gen(1, 2);
        // E12 x2 = x1, E12 x1 = 0
        assert_eq!(e12.get(0, 1), rat(1));
        assert_eq!(e12.apply(&[rat(1), rat(0), rat(0)]).unwrap(), vec![rat(0); 3]);
        // E11 = diag(1,0,0)
        assert_eq!(rep.gen(1, 1), &{
            let mut m = RationalMatrix::zero(3, 3);
            m.set(0, 0, rat(1));
            m
        });
    }

    #[test]
    fn symmetric_alpha2_product_rule() {
        let rep = build_symmetric_model(2).unwrap();
        let src = rep
            .labels
            .iter()
            .position(|l| l == &BasisLabel::Monomial(MonomialIndex([0, 2, 0])))
            .unwrap();
        let tgt = rep
            .labels
            .iter()
            .position(|l| l == &BasisLabel::Monomial(MonomialIndex([1, 1, 0])))
            .unwrap();
        // E12 x2^2 = 2 x1 x2
        assert_eq!(rep.gen(1, 2).get(tgt, src), rat(2));
    }

    #[test]
    fn gt_enumeration_counts() {
        assert_eq!(enumerate_gt_diagrams(HighestWeight(1, 0, 0)).unwrap().len(), 3);
        let zero = enumerate_gt_diagrams(HighestWeight(0, 0, 0)).unwrap();
        assert_eq!(zero, vec![GTDiagram { top: [0, 0, 0], mid: [0, 0], bot: 0 }]);
        assert_eq!(enumerate_gt_diagrams(HighestWeight(2, 0, 0)).unwrap().len(), 6);
        assert!(matches!(
            enumerate_gt_diagrams(HighestWeight(0, 1, 0)),
            Err(Error::InvalidHighestWeight(0, 1, 0))
        ));
    }

    #[test]
    fn gt_diagonal_action() {
        let rep = build_gt_model(HighestWeight(2, 1, 0)).unwrap();
        // E11 is diagonal with entry lambda11 per diagram
        for (n, label) in rep.labels.iter().enumerate() {
            let BasisLabel::Diagram(d) = label else { unreachable!() };
            assert_eq!(rep.gen(1, 1).get(n, n), rat(d.bot));
            for m in 0..rep.dim() {
                if m != n {
                    assert!(rep.gen(1, 1).get(m, n).is_zero());
                }
            }
        }
    }

    #[test]
    fn gt_e21_is_unit_shift() {
        let rep = build_gt_model(HighestWeight(2, 1, 0)).unwrap();
        for (col, label) in rep.labels.iter().enumerate() {
            let BasisLabel::Diagram(d) = label else { unreachable!() };
            let lowered = d.shift_bot(-1);
            for (row, label2) in rep.labels.iter().enumerate() {
                let BasisLabel::Diagram(t) = label2 else { unreachable!() };
                let expect = if *t == lowered { rat(1) } else { rat(0) };
                assert_eq!(rep.gen(2, 1).get(row, col), expect);
            }
        }
    }

    #[test]
    fn gt_e12_kills_exactly_top_diagrams() {
        let rep = build_gt_model(HighestWeight(3, 1, 0)).unwrap();
        for (col, label) in rep.labels.iter().enumerate() {
            let BasisLabel::Diagram(d) = label else { unreachable!() };
            let column_zero = (0..rep.dim()).all(|r| rep.gen(1, 2).get(r, col).is_zero());
            assert_eq!(column_zero, d.mid[0] == d.bot, "diagram {d:?}");
        }
    }

    #[test]
    fn commutation_small_models() {
        assert!(check_commutation(&build_symmetric_model(3).unwrap()).is_ok());
        assert!(check_commutation(&build_gt_model(HighestWeight(2, 1, 0)).unwrap()).is_ok());
        assert!(check_commutation(&build_gt_model(HighestWeight(5, 2, -1)).unwrap()).is_ok());
    }

    #[test]
    fn vacuum_and_highest_subspaces() {
        let sym4 = build_symmetric_model(4).unwrap();
        assert_eq!(vacuum_vectors(&sym4).len(), 1);
        let gt = build_gt_model(HighestWeight(3, 1, 0)).unwrap();
        assert_eq!(vacuum_vectors(&gt).len(), 1);
        let trivial = build_gt_model(HighestWeight(0, 0, 0)).unwrap();
        assert_eq!(vacuum_vectors(&trivial).len(), 1);
        assert_eq!(gl2_highest_subspace(&trivial).len(), 1);

        // symmetric alpha=2: kernel of E12 is spanned by x1^2, x1 x3, x3^2
        let sym2 = build_symmetric_model(2).unwrap();
        assert_eq!(gl2_highest_subspace(&sym2).len(), 3);

        // GT: highest subspace dimension = #diagrams with lambda21 = lambda11
        let count = gt
            .labels
            .iter()
            .filter(|l| matches!(l, BasisLabel::Diagram(d) if d.mid[0] == d.bot))
            .count();
        assert_eq!(gl2_highest_subspace(&gt).len(), count);
    }

    #[test]
    fn gt_and_symmetric_match_for_alpha_rows() {
        for alpha in 0..=4i64 {
            let sym = build_symmetric_model(alpha).unwrap();
            let gt = build_gt_model(HighestWeight(alpha, 0, 0)).unwrap();
            assert_eq!(sym.dim(), gt.dim());
            let mut ws: Vec<Weight> = sym.weights.clone();
            let mut wg: Vec<Weight> = gt.weights.clone();
            ws.sort();
            wg.sort();
            assert_eq!(ws, wg);
        }
    }
}
