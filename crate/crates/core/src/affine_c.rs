//! Type C_n^(1): the adjoint crystal `B_l = B^{1,2l}` in coordinates
//! `(x_1, …, x_n, x̄_n, …, x̄_1)`.

use crate::crystal::{AdjointModel, Crystal, Direction};
use crate::error::{Error, Result};
use crate::root_data::{RootDatum, RootFamily, Weight};
use crate::util::{binomial, compositions, join};
use crate::verify::{self, Check, Report, SideCondition};

/// Position of `x̄_j` in a barred vector kept in paper order `x̄_n, …, x̄_1`.
pub(crate) fn bar_pos(n: usize, j: usize) -> usize {
    n - j
}

/// Middle-node `f_i` (`1 ≤ i < n`) shared by types C and D.
pub(crate) fn f_middle(x: &mut [u32], xbar: &mut [u32], i: usize) -> Option<()> {
    let n = x.len();
    if x[i] >= xbar[bar_pos(n, i + 1)] {
        x[i - 1] = x[i - 1].checked_sub(1)?;
        x[i] += 1;
    } else {
        xbar[bar_pos(n, i + 1)] -= 1;
        xbar[bar_pos(n, i)] += 1;
    }
    Some(())
}

/// Middle-node `e_i` (`1 ≤ i < n`) shared by types C and D.
pub(crate) fn e_middle(x: &mut [u32], xbar: &mut [u32], i: usize) -> Option<()> {
    let n = x.len();
    if x[i] > xbar[bar_pos(n, i + 1)] {
        x[i - 1] += 1;
        x[i] -= 1;
    } else {
        xbar[bar_pos(n, i + 1)] += 1;
        let p = bar_pos(n, i);
        xbar[p] = xbar[p].checked_sub(1)?;
    }
    Some(())
}

/// `x̄_i + max(0, x_{i+1} - x̄_{i+1})`.
pub(crate) fn epsilon_middle(x: &[u32], xbar: &[u32], i: usize) -> u32 {
    let n = x.len();
    xbar[bar_pos(n, i)] + x[i].saturating_sub(xbar[bar_pos(n, i + 1)])
}

/// `x_i + max(0, x̄_{i+1} - x_{i+1})`.
pub(crate) fn phi_middle(x: &[u32], xbar: &[u32], i: usize) -> u32 {
    let n = x.len();
    x[i - 1] + xbar[bar_pos(n, i + 1)].saturating_sub(x[i])
}

pub(crate) fn signed_difference(x: &[u32], xbar: &[u32]) -> Vec<i64> {
    let n = x.len();
    (1..=n)
        .map(|j| i64::from(x[j - 1]) - i64::from(xbar[bar_pos(n, j)]))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemC {
    level: u32,
    x: Vec<u32>,
    xbar: Vec<u32>,
}

impl ElemC {
    /// `xbar` is given in paper order `x̄_n, …, x̄_1`.
    pub fn new(level: u32, x: Vec<u32>, xbar: Vec<u32>) -> Result<Self> {
        if x.len() < 2 || x.len() != xbar.len() {
            return Err(Error::InvalidElement(format!(
                "expected two blocks of equal length n ≥ 2, got {} and {}",
                x.len(),
                xbar.len()
            )));
        }
        let b = ElemC { level, x, xbar };
        let total = b.total();
        if !total.is_multiple_of(2) || total > 2 * level {
            return Err(Error::InvalidElement(format!(
                "coordinate sum {total} must be even and at most {}",
                2 * level
            )));
        }
        Ok(b)
    }

    /// Splits a paper-order tuple `(x_1, …, x_n, x̄_n, …, x̄_1)`.
    pub fn from_tuple(level: u32, tuple: &[u32]) -> Result<Self> {
        if !tuple.len().is_multiple_of(2) {
            return Err(Error::InvalidElement(format!("odd tuple length {}", tuple.len())));
        }
        let (x, xbar) = tuple.split_at(tuple.len() / 2);
        ElemC::new(level, x.to_vec(), xbar.to_vec())
    }

    pub fn tuple(&self) -> Vec<u32> {
        let mut v = self.x.clone();
        v.extend_from_slice(&self.xbar);
        v
    }

    pub fn rank(&self) -> usize {
        self.x.len()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn x(&self, j: usize) -> u32 {
        self.x[j - 1]
    }

    pub fn xbar(&self, j: usize) -> u32 {
        self.xbar[bar_pos(self.rank(), j)]
    }

    fn total(&self) -> u32 {
        self.x.iter().chain(&self.xbar).sum()
    }

    pub fn component(&self) -> u32 {
        self.total() / 2
    }

    pub fn weight_coeffs(&self) -> Vec<i64> {
        signed_difference(&self.x, &self.xbar)
    }

    /// The same coordinates viewed in `B_level`.
    pub fn at_level(&self, level: u32) -> Result<Self> {
        ElemC::new(level, self.x.clone(), self.xbar.clone())
    }

    fn checked(self) -> Option<Self> {
        (self.total() <= 2 * self.level).then_some(self)
    }

    pub fn f(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let mut b = self.clone();
        let (x1, xb1) = (self.x(1), self.xbar(1));
        let last = bar_pos(n, 1);
        match i {
            0 if x1 >= xb1 => b.x[0] += 2,
            0 if x1 + 1 == xb1 => {
                b.x[0] += 1;
                b.xbar[last] -= 1;
            }
            0 => b.xbar[last] -= 2,
            i if i == n => {
                b.x[n - 1] = b.x[n - 1].checked_sub(1)?;
                b.xbar[0] += 1;
            }
            i => f_middle(&mut b.x, &mut b.xbar, i)?,
        }
        b.checked()
    }

    pub fn e(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let mut b = self.clone();
        let (x1, xb1) = (self.x(1), self.xbar(1));
        let last = bar_pos(n, 1);
        match i {
            0 if x1 >= xb1 + 2 => b.x[0] -= 2,
            0 if x1 == xb1 + 1 => {
                b.x[0] -= 1;
                b.xbar[last] += 1;
            }
            0 => b.xbar[last] += 2,
            i if i == n => {
                b.x[n - 1] += 1;
                b.xbar[0] = b.xbar[0].checked_sub(1)?;
            }
            i => e_middle(&mut b.x, &mut b.xbar, i)?,
        }
        b.checked()
    }

    pub fn epsilon(&self, i: usize) -> u32 {
        let n = self.rank();
        match i {
            0 => (self.level - self.component()) + self.x(1).saturating_sub(self.xbar(1)),
            i if i == n => self.xbar(n),
            i => epsilon_middle(&self.x, &self.xbar, i),
        }
    }

    pub fn phi(&self, i: usize) -> u32 {
        let n = self.rank();
        match i {
            0 => (self.level - self.component()) + self.xbar(1).saturating_sub(self.x(1)),
            i if i == n => self.x(n),
            i => phi_middle(&self.x, &self.xbar, i),
        }
    }

    /// No index with both `x_j` and `x̄_j` positive.
    pub fn is_boundary(&self) -> bool {
        (1..=self.rank()).all(|j| self.x(j) == 0 || self.xbar(j) == 0)
    }
}

/// `Φ_j: B_{l-1} → B_l`, adding 1 to `x_j` and `x̄_j`.
pub fn phi_map(j: usize, b: &ElemC) -> Result<ElemC> {
    let n = b.rank();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, rank: n });
    }
    let mut out = b.clone();
    out.level += 1;
    out.x[j - 1] += 1;
    out.xbar[bar_pos(n, j)] += 1;
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct AdjointC {
    n: usize,
    l: u32,
}

impl AdjointC {
    pub fn new(n: usize, l: u32) -> Result<Self> {
        RootDatum::new(RootFamily::C, n)?;
        Ok(AdjointC { n, l })
    }

    pub fn lower(&self) -> Option<AdjointC> {
        Some(AdjointC {
            n: self.n,
            l: self.l.checked_sub(1)?,
        })
    }
}

impl Crystal for AdjointC {
    type Elem = ElemC;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::C, self.n).expect("rank checked")
    }

    fn indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    fn elements(&self) -> Vec<ElemC> {
        let mut out: Vec<ElemC> = (0..=self.l)
            .flat_map(|k| compositions(2 * k, 2 * self.n))
            .map(|t| ElemC::from_tuple(self.l, &t).expect("even sum within bound"))
            .collect();
        out.sort();
        out
    }

    fn e(&self, i: usize, b: &ElemC) -> Option<ElemC> {
        b.e(i)
    }

    fn f(&self, i: usize, b: &ElemC) -> Option<ElemC> {
        b.f(i)
    }

    fn wt(&self, b: &ElemC) -> Vec<i64> {
        b.weight_coeffs()
    }

    fn id(&self, b: &ElemC) -> String {
        format!("C{}:x={};xb={}", self.n, join(&b.x), join(&b.xbar))
    }

    fn component(&self, b: &ElemC) -> Option<u32> {
        Some(b.component())
    }

    fn tag(&self) -> String {
        format!("C{}", self.n)
    }

    fn level(&self) -> Option<u32> {
        Some(self.l)
    }
}

impl AdjointModel for AdjointC {
    fn level_value(&self) -> u32 {
        self.l
    }

    fn component_of(&self, b: &ElemC) -> u32 {
        b.component()
    }

    fn weight(&self, b: &ElemC) -> Weight {
        Weight::new(self.datum(), b.weight_coeffs()).expect("n coefficients")
    }

    fn epsilon_closed(&self, i: usize, b: &ElemC) -> u32 {
        b.epsilon(i)
    }

    fn phi_closed(&self, i: usize, b: &ElemC) -> u32 {
        b.phi(i)
    }

    fn coords(&self, b: &ElemC) -> Vec<u32> {
        b.tuple()
    }

    fn element_at(&self, coords: &[u32]) -> Result<ElemC> {
        if coords.len() != 2 * self.n {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                2 * self.n,
                coords.len()
            )));
        }
        ElemC::from_tuple(self.l, coords)
    }

    fn closed_cardinality(&self) -> u128 {
        let r = 2 * self.n as u64 - 1;
        (0..=u64::from(self.l)).map(|k| binomial(2 * k + r, r)).sum()
    }
}

/// The statements about `B_l` of type C_n^(1), checked exhaustively.
pub fn verify_section4(n: usize, l: u32, checks: &[Check]) -> Result<Report> {
    let big = AdjointC::new(n, l)?;
    let small = big.lower();
    let mut report = Report::new("c1", n, l);
    let sel = |c| verify::selected(checks, c);

    if sel(Check::Axioms) {
        report.extend(verify::axiom_checks(&big));
    }

    let include = |b: &ElemC| b.at_level(l).expect("lower level fits");
    let phi = |j: usize| move |b: &ElemC| phi_map(j, b).expect("j in range");

    if let Some(small) = &small {
        if sel(Check::Embedding) {
            report.push(verify::full_subgraph("B_{l-1} ⊆ B_l full subgraph", small, &big, include));
            report.push(verify::component_shift(Check::Embedding, "inclusion keeps k", small, &big, include, 0));
        }
        if sel(Check::Commute) {
            for j in 1..=n {
                report.extend(lift_checks(&format!("Φ_{j}"), small, &big, phi(j), 1, n));
            }
        }
    }

    let interior: std::collections::BTreeSet<ElemC> = match &small {
        Some(small) => small
            .elements()
            .iter()
            .flat_map(|b| (1..=n).map(move |j| phi_map(j, b).expect("j in range")))
            .collect(),
        None => Default::default(),
    };

    if sel(Check::Boundary) {
        let image_of = |k: u32| interior.iter().filter(|b| b.component() == k).cloned().collect();
        report.push(verify::boundary_sets("⋃ Im Φ_j = inner weights of B(kθ)", &big, image_of));
        report.push(verify::boundary_weights(&big, &interior));
        let mut t = verify::Tally::new(Check::Boundary, "boundary <=> x_j = 0 or x̄_j = 0 for all j");
        for b in big.elements() {
            t.record(b.is_boundary() != interior.contains(&b), || big.id(&b));
        }
        report.push(t.finish());
    }
    if sel(Check::Multiplicity) {
        report.push(verify::boundary_multiplicity(&big));
        report.push(verify::restricted_injective(&big, &interior));
    }
    if sel(Check::F0Landing) {
        report.extend(verify::f0_landing(&big, &interior));
    }
    Ok(report)
}

/// Component shift, weight preservation, and commutation with the classical
/// operators (when defined) and with `e_0`, `f_0` (always) for a
/// level-raising map.
pub(crate) fn lift_checks<S, T>(
    name: &str,
    small: &S,
    big: &T,
    map: impl Fn(&S::Elem) -> T::Elem + Copy,
    shift: u32,
    n: usize,
) -> Vec<verify::CheckResult>
where
    S: AdjointModel,
    T: AdjointModel,
{
    vec![
        verify::component_shift(Check::Commute, &format!("{name} raises k by {shift}"), small, big, map, shift),
        verify::map_preserves_weight(Check::Commute, &format!("{name} weight/injective"), small, big, map),
        verify::check_commutation(
            Check::Commute,
            &format!("{name} commutes with classical e_i, f_i when defined"),
            small,
            big,
            map,
            &verify::classical_ops(n),
            SideCondition::WhenDefined,
        ),
        verify::check_commutation(
            Check::Commute,
            &format!("{name} commutes with e0, f0"),
            small,
            big,
            map,
            &[(Direction::F, 0), (Direction::E, 0)],
            SideCondition::Always,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(l: u32, t: &[u32]) -> ElemC {
        ElemC::from_tuple(l, t).unwrap()
    }

    #[test]
    fn f0_branches() {
        assert_eq!(c(1, &[0, 0, 0, 0]).f(0), Some(c(1, &[2, 0, 0, 0])));
        assert_eq!(c(1, &[0, 0, 0, 2]).f(0), Some(c(1, &[0, 0, 0, 0])));
        assert_eq!(c(1, &[0, 1, 0, 1]).f(0), Some(c(1, &[1, 1, 0, 0])));
        assert_eq!(c(1, &[2, 0, 0, 0]).f(0), None);
    }

    #[test]
    fn classical_operator_examples() {
        assert_eq!(c(1, &[1, 0, 0, 1]).f(1), Some(c(1, &[0, 1, 0, 1])));
        assert_eq!(c(1, &[0, 0, 2, 0]).f(1), Some(c(1, &[0, 0, 1, 1])));
        assert_eq!(c(1, &[0, 1, 0, 1]).f(2), Some(c(1, &[0, 0, 1, 1])));
        assert_eq!(c(1, &[0, 0, 1, 1]).e(2), Some(c(1, &[0, 1, 0, 1])));
        assert_eq!(c(1, &[0, 0, 0, 0]).f(1), None);
    }

    #[test]
    fn statistics_example() {
        let b = c(2, &[1, 0, 0, 1]);
        assert_eq!(b.component(), 1);
        assert_eq!((b.epsilon(0), b.phi(0)), (1, 1));
        assert_eq!((b.epsilon(1), b.phi(1)), (1, 1));
    }

    #[test]
    fn phi_map_examples() {
        let zero = c(0, &[0, 0, 0, 0]);
        assert_eq!(phi_map(1, &zero).unwrap(), c(1, &[1, 0, 0, 1]));
        assert_eq!(phi_map(2, &zero).unwrap(), c(1, &[0, 1, 1, 0]));
        let b = c(1, &[0, 1, 0, 1]);
        let both = phi_map(1, &phi_map(2, &b).unwrap()).unwrap();
        assert_eq!(both, phi_map(2, &phi_map(1, &b).unwrap()).unwrap());
        assert_eq!(both.weight_coeffs(), b.weight_coeffs());
        assert!(phi_map(3, &zero).is_err());
    }

    #[test]
    fn invalid_tuples() {
        assert!(ElemC::from_tuple(1, &[1, 0, 0, 0]).is_err());
        assert!(ElemC::from_tuple(1, &[2, 2, 0, 0]).is_err());
        assert!(ElemC::from_tuple(1, &[0, 0, 0]).is_err());
        assert!(AdjointC::new(1, 1).is_err());
    }

    #[test]
    fn cardinalities() {
        let m = AdjointC::new(2, 1).unwrap();
        assert_eq!(m.elements().len(), 11);
        assert_eq!(m.closed_cardinality(), 11);
        let comp = m.elements().iter().filter(|b| b.component() == 1).count();
        assert_eq!(comp, 10);
    }

    #[test]
    fn ids_use_paper_order() {
        let m = AdjointC::new(2, 1).unwrap();
        assert_eq!(m.id(&c(1, &[0, 0, 0, 2])), "C2:x=0,0;xb=0,2");
        assert_eq!(c(1, &[0, 0, 0, 2]).xbar(1), 2);
    }

    #[test]
    fn small_instances_pass() {
        for (n, l) in [(2, 0), (2, 1), (2, 2)] {
            let r = verify_section4(n, l, &Check::ALL).unwrap();
            assert!(r.all_passed(), "{}", r.render());
        }
    }
}
