//! Type D_{n+1}^(2): the adjoint crystal `B_l = B^{1,l}` in coordinates
//! `(x_1, …, x_n, x_0, x̄_n, …, x̄_1)` with `x_0 ∈ {0, 1}`.

use std::collections::BTreeSet;

use crate::affine_c::{bar_pos, e_middle, epsilon_middle, f_middle, lift_checks, phi_middle, signed_difference};
use crate::crystal::{AdjointModel, Crystal};
use crate::error::{Error, Result};
use crate::root_data::{RootDatum, RootFamily, Weight};
use crate::util::{binomial, compositions, join};
use crate::verify::{self, Check, Report, Tally};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemD {
    level: u32,
    x: Vec<u32>,
    x0: bool,
    xbar: Vec<u32>,
}

impl ElemD {
    /// `xbar` is given in paper order `x̄_n, …, x̄_1`.
    pub fn new(level: u32, x: Vec<u32>, x0: bool, xbar: Vec<u32>) -> Result<Self> {
        if x.len() < 2 || x.len() != xbar.len() {
            return Err(Error::InvalidElement(format!(
                "expected two blocks of equal length n ≥ 2, got {} and {}",
                x.len(),
                xbar.len()
            )));
        }
        let b = ElemD { level, x, x0, xbar };
        if b.component() > level {
            return Err(Error::InvalidElement(format!(
                "coordinate sum {} exceeds level {level}",
                b.component()
            )));
        }
        Ok(b)
    }

    /// Splits a paper-order tuple `(x_1, …, x_n, x_0, x̄_n, …, x̄_1)`.
    pub fn from_tuple(level: u32, tuple: &[u32]) -> Result<Self> {
        if tuple.len().is_multiple_of(2) {
            return Err(Error::InvalidElement(format!("even tuple length {}", tuple.len())));
        }
        let n = tuple.len() / 2;
        let x0 = match tuple[n] {
            0 => false,
            1 => true,
            v => return Err(Error::InvalidElement(format!("x_0 = {v} is not 0 or 1"))),
        };
        ElemD::new(level, tuple[..n].to_vec(), x0, tuple[n + 1..].to_vec())
    }

    pub fn tuple(&self) -> Vec<u32> {
        let mut v = self.x.clone();
        v.push(u32::from(self.x0));
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

    pub fn x0(&self) -> bool {
        self.x0
    }

    pub fn xbar(&self, j: usize) -> u32 {
        self.xbar[bar_pos(self.rank(), j)]
    }

    pub fn component(&self) -> u32 {
        self.x.iter().chain(&self.xbar).sum::<u32>() + u32::from(self.x0)
    }

    pub fn weight_coeffs(&self) -> Vec<i64> {
        signed_difference(&self.x, &self.xbar)
    }

    pub fn at_level(&self, level: u32) -> Result<Self> {
        ElemD::new(level, self.x.clone(), self.x0, self.xbar.clone())
    }

    fn checked(self) -> Option<Self> {
        (self.component() <= self.level).then_some(self)
    }

    pub fn f(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let mut b = self.clone();
        let last = bar_pos(n, 1);
        match i {
            0 if self.x(1) >= self.xbar(1) => b.x[0] += 1,
            0 => b.xbar[last] -= 1,
            i if i == n && !self.x0 => {
                b.x[n - 1] = b.x[n - 1].checked_sub(1)?;
                b.x0 = true;
            }
            i if i == n => {
                b.x0 = false;
                b.xbar[0] += 1;
            }
            i => f_middle(&mut b.x, &mut b.xbar, i)?,
        }
        b.checked()
    }

    pub fn e(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let mut b = self.clone();
        let last = bar_pos(n, 1);
        match i {
            0 if self.x(1) > self.xbar(1) => b.x[0] -= 1,
            0 => b.xbar[last] += 1,
            i if i == n && !self.x0 => {
                b.xbar[0] = b.xbar[0].checked_sub(1)?;
                b.x0 = true;
            }
            i if i == n => {
                b.x[n - 1] += 1;
                b.x0 = false;
            }
            i => e_middle(&mut b.x, &mut b.xbar, i)?,
        }
        b.checked()
    }

    pub fn epsilon(&self, i: usize) -> u32 {
        let n = self.rank();
        match i {
            0 => (self.level - self.component()) + 2 * self.x(1).saturating_sub(self.xbar(1)),
            i if i == n => 2 * self.xbar(n) + u32::from(self.x0),
            i => epsilon_middle(&self.x, &self.xbar, i),
        }
    }

    pub fn phi(&self, i: usize) -> u32 {
        let n = self.rank();
        match i {
            0 => (self.level - self.component()) + 2 * self.xbar(1).saturating_sub(self.x(1)),
            i if i == n => 2 * self.x(n) + u32::from(self.x0),
            i => phi_middle(&self.x, &self.xbar, i),
        }
    }

    /// `x_0 = 0` and no index with both `x_j` and `x̄_j` positive.
    pub fn is_boundary(&self) -> bool {
        !self.x0 && (1..=self.rank()).all(|j| self.x(j) == 0 || self.xbar(j) == 0)
    }
}

/// `Ψ_j`: for `j < n` a map `B_{l-2} → B_l` adding 1 to `x_j` and `x̄_j`;
/// for `j = n` a map `B_{l-1} → B_l` that sets `x_0 = 1`, or trades
/// `x_0 = 1` for one more `x_n` and `x̄_n`.
pub fn psi_map(j: usize, b: &ElemD) -> Result<ElemD> {
    let n = b.rank();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, rank: n });
    }
    let mut out = b.clone();
    if j < n {
        out.level += 2;
        out.x[j - 1] += 1;
        out.xbar[bar_pos(n, j)] += 1;
    } else {
        out.level += 1;
        if b.x0 {
            out.x0 = false;
            out.x[n - 1] += 1;
            out.xbar[0] += 1;
        } else {
            out.x0 = true;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct AdjointD2 {
    n: usize,
    l: u32,
}

impl AdjointD2 {
    pub fn new(n: usize, l: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank {
                family: RootFamily::B,
                rank: n,
            });
        }
        Ok(AdjointD2 { n, l })
    }

    /// `B_{l-d}`, if `d ≤ l`.
    pub fn lower_by(&self, d: u32) -> Option<AdjointD2> {
        Some(AdjointD2 {
            n: self.n,
            l: self.l.checked_sub(d)?,
        })
    }
}

impl Crystal for AdjointD2 {
    type Elem = ElemD;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::B, self.n).expect("rank checked")
    }

    fn indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    fn elements(&self) -> Vec<ElemD> {
        let n = self.n;
        let mut out = Vec::new();
        for k in 0..=self.l {
            for x0 in [false, true] {
                let Some(rest) = k.checked_sub(u32::from(x0)) else { continue };
                for c in compositions(rest, 2 * n) {
                    let (x, xbar) = c.split_at(n);
                    out.push(ElemD::new(self.l, x.to_vec(), x0, xbar.to_vec()).expect("sum within level"));
                }
            }
        }
        out.sort();
        out
    }

    fn e(&self, i: usize, b: &ElemD) -> Option<ElemD> {
        b.e(i)
    }

    fn f(&self, i: usize, b: &ElemD) -> Option<ElemD> {
        b.f(i)
    }

    fn wt(&self, b: &ElemD) -> Vec<i64> {
        b.weight_coeffs()
    }

    fn id(&self, b: &ElemD) -> String {
        format!(
            "D{}:x={};x0={};xb={}",
            self.n,
            join(&b.x),
            u32::from(b.x0),
            join(&b.xbar)
        )
    }

    fn component(&self, b: &ElemD) -> Option<u32> {
        Some(b.component())
    }

    fn tag(&self) -> String {
        format!("D{}", self.n)
    }

    fn level(&self) -> Option<u32> {
        Some(self.l)
    }
}

impl AdjointModel for AdjointD2 {
    fn level_value(&self) -> u32 {
        self.l
    }

    fn component_of(&self, b: &ElemD) -> u32 {
        b.component()
    }

    fn weight(&self, b: &ElemD) -> Weight {
        Weight::new(self.datum(), b.weight_coeffs()).expect("n coefficients")
    }

    fn epsilon_closed(&self, i: usize, b: &ElemD) -> u32 {
        b.epsilon(i)
    }

    fn phi_closed(&self, i: usize, b: &ElemD) -> u32 {
        b.phi(i)
    }

    fn coords(&self, b: &ElemD) -> Vec<u32> {
        b.tuple()
    }

    fn element_at(&self, coords: &[u32]) -> Result<ElemD> {
        if coords.len() != 2 * self.n + 1 {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                2 * self.n + 1,
                coords.len()
            )));
        }
        ElemD::from_tuple(self.l, coords)
    }

    fn closed_cardinality(&self) -> u128 {
        let r = 2 * self.n as u64 - 1;
        (0..=u64::from(self.l))
            .map(|k| {
                let odd = if k >= 1 { binomial(k - 1 + r, r) } else { 0 };
                binomial(k + r, r) + odd
            })
            .sum()
    }
}

/// The statements about `B_l` of type D_{n+1}^(2), checked exhaustively over
/// the levels `l-2`, `l-1` and `l`.
pub fn verify_section5(n: usize, l: u32, checks: &[Check]) -> Result<Report> {
    let big = AdjointD2::new(n, l)?;
    let one_down = big.lower_by(1);
    let two_down = big.lower_by(2);
    let mut report = Report::new("d2", n, l);
    let sel = |c| verify::selected(checks, c);

    if sel(Check::Axioms) {
        report.extend(verify::axiom_checks(&big));
    }

    let include = |b: &ElemD| b.at_level(l).expect("lower level fits");
    let psi = |j: usize| move |b: &ElemD| psi_map(j, b).expect("j in range");

    if let Some(small) = &one_down {
        if sel(Check::Embedding) {
            report.push(verify::full_subgraph("B_{l-1} ⊆ B_l full subgraph", small, &big, include));
            report.push(verify::component_shift(Check::Embedding, "inclusion keeps k", small, &big, include, 0));
        }
        if sel(Check::Commute) {
            report.extend(lift_checks(&format!("Ψ_{n}"), small, &big, psi(n), 1, n));
        }
    }
    if let Some(smaller) = &two_down {
        if sel(Check::Commute) {
            for j in 1..n {
                report.extend(lift_checks(&format!("Ψ_{j}"), smaller, &big, psi(j), 2, n));
            }
        }
    }

    let mut interior = BTreeSet::new();
    if let Some(small) = &one_down {
        interior.extend(small.elements().iter().map(|b| psi_map(n, b).expect("j = n")));
    }
    if let Some(smaller) = &two_down {
        for b in smaller.elements() {
            interior.extend((1..n).map(|j| psi_map(j, &b).expect("j < n")));
        }
    }

    if sel(Check::Boundary) {
        let image_of = |k: u32| interior.iter().filter(|b| b.component() == k).cloned().collect();
        report.push(verify::boundary_sets("⋃ Im Ψ_j = inner weights of B(kθ)", &big, image_of));
        report.push(verify::boundary_weights(&big, &interior));
        let mut t = Tally::new(Check::Boundary, "boundary <=> x_0 = 0 and x_j = 0 or x̄_j = 0 for all j");
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

#[cfg(test)]
mod tests {
    use super::*;

    fn d(l: u32, t: &[u32]) -> ElemD {
        ElemD::from_tuple(l, t).unwrap()
    }

    #[test]
    fn operator_examples() {
        assert_eq!(d(1, &[0, 0, 0, 0, 0]).f(0), Some(d(1, &[1, 0, 0, 0, 0])));
        assert_eq!(d(1, &[0, 1, 0, 0, 0]).f(2), Some(d(1, &[0, 0, 1, 0, 0])));
        assert_eq!(d(1, &[0, 0, 1, 0, 0]).f(2), Some(d(1, &[0, 0, 0, 1, 0])));
        assert_eq!(d(1, &[1, 0, 0, 0, 0]).f(0), None);
        assert_eq!(d(1, &[0, 0, 0, 0, 1]).f(0), Some(d(1, &[0, 0, 0, 0, 0])));
        assert_eq!(d(1, &[0, 0, 0, 1, 0]).e(2), Some(d(1, &[0, 0, 1, 0, 0])));
        assert_eq!(d(1, &[0, 0, 1, 0, 0]).e(2), Some(d(1, &[0, 1, 0, 0, 0])));
    }

    #[test]
    fn statistics_example() {
        let b = d(2, &[0, 1, 1, 0, 0]);
        assert_eq!(b.component(), 2);
        assert_eq!((b.epsilon(2), b.phi(2)), (1, 3));
        assert_eq!((b.epsilon(0), b.phi(0)), (0, 0));
    }

    #[test]
    fn psi_examples() {
        let zero = d(0, &[0, 0, 0, 0, 0]);
        assert_eq!(psi_map(1, &zero).unwrap(), d(2, &[1, 0, 0, 0, 1]));
        assert_eq!(psi_map(2, &d(1, &[0, 1, 0, 0, 0])).unwrap(), d(2, &[0, 1, 1, 0, 0]));
        assert_eq!(psi_map(2, &d(1, &[0, 0, 1, 0, 0])).unwrap(), d(2, &[0, 1, 0, 1, 0]));
        let b = d(1, &[1, 0, 0, 0, 0]);
        assert_eq!(psi_map(2, &b).unwrap().weight_coeffs(), b.weight_coeffs());
        assert!(psi_map(0, &zero).is_err());
    }

    #[test]
    fn invalid_tuples() {
        assert!(ElemD::from_tuple(1, &[0, 0, 2, 0, 0]).is_err());
        assert!(ElemD::from_tuple(1, &[1, 0, 1, 0, 0]).is_err());
        assert!(ElemD::from_tuple(1, &[0, 0, 0, 0]).is_err());
        assert!(AdjointD2::new(1, 1).is_err());
    }

    #[test]
    fn cardinalities() {
        let m = AdjointD2::new(2, 1).unwrap();
        let comp = m.elements().iter().filter(|b| b.component() == 1).count();
        assert_eq!(comp, 5);
        assert_eq!(m.elements().len(), 6);
        assert_eq!(m.closed_cardinality(), 6);
    }

    #[test]
    fn small_instances_pass() {
        for (n, l) in [(2, 0), (2, 1), (2, 2), (2, 3)] {
            let r = verify_section5(n, l, &Check::ALL).unwrap();
            assert!(r.all_passed(), "{}", r.render());
        }
    }
}
