//! Finite root data of types A_n, C_n and B_n in epsilon coordinates, and
//! the criteria describing the weight sets `wt B(kθ)` ("shells").
//!
//! Every weight is stored by its coefficients `m_j` on the vectors `ε_j`.
//! For type A there are `n + 1` coefficients normalized to sum to zero; for
//! types C and B there are `n`.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootFamily {
    A,
    C,
    B,
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootFamily::A => "A",
            RootFamily::C => "C",
            RootFamily::B => "B",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootDatum {
    family: RootFamily,
    rank: usize,
}

impl RootDatum {
    pub fn new(family: RootFamily, rank: usize) -> Result<Self> {
        let min = match family {
            RootFamily::C => 2,
            _ => 1,
        };
        if rank < min {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(RootDatum { family, rank })
    }

    pub fn family(&self) -> RootFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of epsilon coordinates: `n + 1` for A, `n` otherwise.
    pub fn dim(&self) -> usize {
        match self.family {
            RootFamily::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Highest root for A and C, highest short root for B.
    pub fn theta(&self) -> Weight {
        let mut m = vec![0; self.dim()];
        match self.family {
            RootFamily::A => {
                m[0] = 1;
                m[self.rank] = -1;
            }
            RootFamily::C => m[0] = 2,
            RootFamily::B => m[0] = 1,
        }
        Weight::raw(*self, m)
    }

    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut m = vec![0; self.dim()];
        let n = self.rank;
        if i < n || self.family == RootFamily::A {
            m[i - 1] = 1;
            m[i] = -1;
        } else {
            m[n - 1] = match self.family {
                RootFamily::C => 2,
                _ => 1,
            };
        }
        Ok(Weight::raw(*self, m))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    datum: RootDatum,
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(datum: RootDatum, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != datum.dim() {
            return Err(Error::WeightLength {
                expected: datum.dim(),
                got: coeffs.len(),
            });
        }
        if datum.family == RootFamily::A {
            let s: i64 = coeffs.iter().sum();
            if s != 0 {
                return Err(Error::UnnormalizedWeight(s));
            }
        }
        Ok(Weight { datum, coeffs })
    }

    fn raw(datum: RootDatum, coeffs: Vec<i64>) -> Self {
        debug_assert_eq!(coeffs.len(), datum.dim());
        Weight { datum, coeffs }
    }

    pub fn zero(datum: RootDatum) -> Self {
        Weight::raw(datum, vec![0; datum.dim()])
    }

    pub fn datum(&self) -> RootDatum {
        self.datum
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The coefficient `m_j` of `ε_j`, 1-based.
    pub fn m(&self, j: usize) -> i64 {
        self.coeffs[j - 1]
    }

    /// `J(μ)`: 1-based positions with a positive coefficient.
    pub fn positive_support(&self) -> Vec<usize> {
        (1..=self.coeffs.len()).filter(|&j| self.m(j) > 0).collect()
    }

    /// Sum of the positive coefficients. For type A this is `Σ_{j∈J(μ)} m_j(μ)`.
    pub fn positive_sum(&self) -> i64 {
        self.coeffs.iter().filter(|&&c| c > 0).sum()
    }

    /// `|μ| = Σ |m_j(μ)|`.
    pub fn abs_sum(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// `⟨h_i, μ⟩` for `i` in `1..=n`.
    pub fn pairing(&self, i: usize) -> Result<i64> {
        self.datum.check_index(i)?;
        let n = self.datum.rank;
        Ok(match (self.datum.family, i == n) {
            (RootFamily::A, _) | (_, false) => self.m(i) - self.m(i + 1),
            (RootFamily::C, true) => self.m(n),
            (RootFamily::B, true) => 2 * self.m(n),
        })
    }

    /// Coordinates on the fundamental weights `ϖ_1, …, ϖ_n`.
    pub fn to_fundamental(&self) -> Vec<i64> {
        (1..=self.datum.rank)
            .map(|i| self.pairing(i).expect("index in range"))
            .collect()
    }

    /// Inverse of [`Weight::to_fundamental`]. Fails when the result would
    /// need half-integral (B) or fractional (A) epsilon coordinates.
    pub fn from_fundamental(datum: RootDatum, coords: &[i64]) -> Result<Self> {
        let n = datum.rank;
        if coords.len() != n {
            return Err(Error::WeightLength {
                expected: n,
                got: coords.len(),
            });
        }
        let non_integral = || Error::NonIntegral(coords.to_vec());
        // coefficient of ε_j in Σ a_i ϖ_i, with ϖ_n = (ε_1 + … + ε_n)/2 for B
        let suffix = |j: usize, halve_last: bool| -> i64 {
            (j..=n)
                .map(|i| if i == n && halve_last { coords[i - 1] / 2 } else { coords[i - 1] })
                .sum()
        };
        let coeffs = match datum.family {
            RootFamily::A => {
                let raw: Vec<i64> = (1..=n + 1).map(|j| suffix(j, false)).collect();
                let total: i64 = raw.iter().sum();
                let width = (n + 1) as i64;
                if total % width != 0 {
                    return Err(non_integral());
                }
                raw.iter().map(|c| c - total / width).collect()
            }
            RootFamily::C => (1..=n).map(|j| suffix(j, false)).collect(),
            RootFamily::B => {
                if coords[n - 1] % 2 != 0 {
                    return Err(non_integral());
                }
                (1..=n).map(|j| suffix(j, true)).collect()
            }
        };
        Weight::new(datum, coeffs)
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        if self.datum != other.datum {
            return Err(Error::DatumMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Weight::raw(self.datum, coeffs))
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        if self.datum != other.datum {
            return Err(Error::DatumMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Weight::raw(self.datum, coeffs))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.try_add(rhs).expect("adding weights of different root data")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.try_sub(rhs).expect("subtracting weights of different root data")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `μ ∈ wt B(kθ)`.
pub fn in_shell(mu: &Weight, k: u32) -> bool {
    let k = i64::from(k);
    match mu.datum.family {
        RootFamily::A => mu.positive_sum() <= k,
        RootFamily::C => {
            let slack = 2 * k - mu.abs_sum();
            slack >= 0 && slack % 2 == 0
        }
        RootFamily::B => mu.abs_sum() <= k,
    }
}

/// `μ ∈ wt B(kθ) \ wt B((k-1)θ)`, by the closed criterion.
pub fn on_boundary(mu: &Weight, k: u32) -> bool {
    let k = i64::from(k);
    match mu.datum.family {
        RootFamily::A => mu.positive_sum() == k,
        RootFamily::C => mu.abs_sum() == 2 * k,
        RootFamily::B => mu.abs_sum() == k,
    }
}

/// Same set as [`on_boundary`], computed from two shell memberships.
pub fn on_boundary_by_shells(mu: &Weight, k: u32) -> bool {
    in_shell(mu, k) && (k == 0 || !in_shell(mu, k - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shift {
    Up,
    Same,
    Down,
}

/// Sign pattern of `(m_1(μ), m_{n+1}(μ))` for type A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ACase {
    /// `m_1 ≥ 0`, `m_{n+1} ≤ 0`
    CaseA,
    /// `m_1 ≥ 0`, `m_{n+1} > 0`
    CaseB,
    /// `m_1 < 0`, `m_{n+1} ≤ 0`
    CaseC,
    /// `m_1 < 0`, `m_{n+1} > 0`
    CaseD,
}

impl fmt::Display for ACase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ACase::CaseA => "a",
            ACase::CaseB => "b",
            ACase::CaseC => "c",
            ACase::CaseD => "d",
        };
        f.write_str(s)
    }
}

/// Which shell `μ + θ` reaches from a boundary weight `μ` of shell `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShellClassification {
    pub shift: Shift,
    pub a_case: Option<ACase>,
}

impl ShellClassification {
    /// The shell index of `μ + θ`, or `None` when that would be `-1`.
    pub fn target(&self, k: u32) -> Option<u32> {
        match self.shift {
            Shift::Up => Some(k + 1),
            Shift::Same => Some(k),
            Shift::Down => k.checked_sub(1),
        }
    }
}

pub fn classify_shift(mu: &Weight, k: u32) -> Result<ShellClassification> {
    if !on_boundary(mu, k) {
        return Err(Error::NotOnBoundary {
            weight: mu.to_string(),
            k,
        });
    }
    let m1 = mu.m(1);
    Ok(match mu.datum.family {
        RootFamily::A => {
            let last = mu.m(mu.datum.rank + 1);
            let (shift, case) = match (m1 >= 0, last > 0) {
                (true, false) => (Shift::Up, ACase::CaseA),
                (true, true) => (Shift::Same, ACase::CaseB),
                (false, false) => (Shift::Same, ACase::CaseC),
                (false, true) => (Shift::Down, ACase::CaseD),
            };
            ShellClassification {
                shift,
                a_case: Some(case),
            }
        }
        RootFamily::C => ShellClassification {
            shift: match m1 {
                m if m >= 0 => Shift::Up,
                -1 => Shift::Same,
                _ => Shift::Down,
            },
            a_case: None,
        },
        RootFamily::B => ShellClassification {
            shift: if m1 >= 0 { Shift::Up } else { Shift::Down },
            a_case: None,
        },
    })
}

/// Every weight of `datum` whose coefficients lie in `-bound..=bound`.
pub fn weights_in_box(datum: RootDatum, bound: i64) -> Vec<Weight> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..datum.dim() {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().filter_map(|c| Weight::new(datum, c).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: RootFamily, n: usize) -> RootDatum {
        RootDatum::new(f, n).unwrap()
    }

    fn w(f: RootFamily, n: usize, c: &[i64]) -> Weight {
        Weight::new(datum(f, n), c.to_vec()).unwrap()
    }

    #[test]
    fn theta_values() {
        assert_eq!(datum(RootFamily::A, 2).theta().coeffs(), &[1, 0, -1]);
        assert_eq!(datum(RootFamily::C, 2).theta().coeffs(), &[2, 0]);
        assert_eq!(datum(RootFamily::B, 3).theta().coeffs(), &[1, 0, 0]);
    }

    #[test]
    fn simple_roots() {
        assert_eq!(datum(RootFamily::A, 2).simple_root(1).unwrap().coeffs(), &[1, -1, 0]);
        assert_eq!(datum(RootFamily::C, 2).simple_root(2).unwrap().coeffs(), &[0, 2]);
        assert_eq!(datum(RootFamily::B, 2).simple_root(2).unwrap().coeffs(), &[0, 1]);
        assert_eq!(datum(RootFamily::A, 2).simple_root(3).unwrap_err(), Error::IndexOutOfRange { index: 3, rank: 2 });
        assert!(datum(RootFamily::B, 2).simple_root(0).is_err());
    }

    #[test]
    fn theta_is_sum_of_simple_roots() {
        // A, B: θ = α_1 + … + α_n; C: θ = 2α_1 + … + 2α_{n-1} + α_n
        for n in 2..=4 {
            for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
                let d = datum(fam, n);
                let mut acc = Weight::zero(d);
                for i in 1..=n {
                    let a = d.simple_root(i).unwrap();
                    acc = &acc + &a;
                    if fam == RootFamily::C && i < n {
                        acc = &acc + &a;
                    }
                }
                assert_eq!(acc, d.theta(), "{fam} n={n}");
            }
        }
    }

    #[test]
    fn rank_and_normalization_checks() {
        assert!(RootDatum::new(RootFamily::C, 1).is_err());
        assert!(RootDatum::new(RootFamily::A, 0).is_err());
        assert_eq!(
            Weight::new(datum(RootFamily::A, 2), vec![1, 0, 0]).unwrap_err(),
            Error::UnnormalizedWeight(1)
        );
        assert!(Weight::new(datum(RootFamily::C, 2), vec![1, 0, 0]).is_err());
    }

    #[test]
    fn shell_examples() {
        assert!(in_shell(&w(RootFamily::A, 2, &[1, 0, -1]), 1));
        assert!(!in_shell(&w(RootFamily::C, 2, &[1, 0]), 1));
        assert!(!in_shell(&w(RootFamily::B, 2, &[1, 1]), 1));
        assert!(in_shell(&w(RootFamily::B, 2, &[1, 1]), 2));
        for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
            assert!(in_shell(&Weight::zero(datum(fam, 2)), 0));
        }
    }

    #[test]
    fn boundary_examples() {
        assert!(on_boundary(&w(RootFamily::C, 2, &[1, 1]), 1));
        assert!(on_boundary(&Weight::zero(datum(RootFamily::B, 3)), 0));
        assert!(!on_boundary(&w(RootFamily::A, 2, &[1, 0, -1]), 2));
        assert!(!on_boundary_by_shells(&w(RootFamily::A, 2, &[1, 0, -1]), 2));
    }

    #[test]
    fn classify_examples() {
        let c = classify_shift(&w(RootFamily::A, 2, &[1, 0, -1]), 1).unwrap();
        assert_eq!(c.shift, Shift::Up);
        assert_eq!(c.a_case, Some(ACase::CaseA));
        assert_eq!(classify_shift(&w(RootFamily::C, 2, &[-2, 0]), 1).unwrap().shift, Shift::Down);
        assert_eq!(classify_shift(&w(RootFamily::C, 2, &[-1, 1]), 1).unwrap().shift, Shift::Same);
        assert_eq!(classify_shift(&w(RootFamily::B, 2, &[-1, 0]), 1).unwrap().shift, Shift::Down);
        assert!(matches!(
            classify_shift(&w(RootFamily::A, 2, &[1, 0, -1]), 2),
            Err(Error::NotOnBoundary { .. })
        ));
    }

    #[test]
    fn shell_nesting() {
        for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
            for n in 2..=3 {
                let d = datum(fam, n);
                for mu in weights_in_box(d, 5) {
                    for k2 in 0..=4 {
                        for k in k2..=4 {
                            if in_shell(&mu, k2) {
                                assert!(in_shell(&mu, k), "{fam} {mu} {k2} {k}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_routes_agree() {
        for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
            for n in 2..=4 {
                let d = datum(fam, n);
                let bound = if n == 4 { 3 } else { 5 };
                for mu in weights_in_box(d, bound) {
                    for k in 0..=6 {
                        assert_eq!(on_boundary(&mu, k), on_boundary_by_shells(&mu, k), "{fam} {mu} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn classification_matches_direct_boundary() {
        for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
            for n in 2..=3 {
                let d = datum(fam, n);
                let theta = d.theta();
                for mu in weights_in_box(d, 6) {
                    for k in 0..=3 {
                        if !on_boundary(&mu, k) {
                            continue;
                        }
                        let class = classify_shift(&mu, k).unwrap();
                        if fam == RootFamily::B {
                            assert_ne!(class.shift, Shift::Same);
                        }
                        let shifted = &mu + &theta;
                        let target = class.target(k).expect("boundary weight never drops below shell 0");
                        assert!(on_boundary(&shifted, target), "{fam} {mu} k={k} {class:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_round_trip() {
        for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
            let d = datum(fam, 3);
            for mu in weights_in_box(d, 2) {
                let back = Weight::from_fundamental(d, &mu.to_fundamental()).unwrap();
                assert_eq!(back, mu);
            }
        }
        // ϖ_n alone is half-integral in type B
        assert!(Weight::from_fundamental(datum(RootFamily::B, 2), &[0, 1]).is_err());
        assert_eq!(
            Weight::from_fundamental(datum(RootFamily::B, 2), &[0, 2]).unwrap().coeffs(),
            &[1, 1]
        );
        // ϖ_1 + ϖ_n = θ in type A
        assert_eq!(
            Weight::from_fundamental(datum(RootFamily::A, 2), &[1, 1]).unwrap(),
            datum(RootFamily::A, 2).theta()
        );
        assert!(Weight::from_fundamental(datum(RootFamily::A, 2), &[1, 0]).is_err());
    }

    #[test]
    fn pairing_with_simple_roots_gives_cartan_diagonal() {
        for fam in [RootFamily::A, RootFamily::B, RootFamily::C] {
            let d = datum(fam, 3);
            for i in 1..=3 {
                assert_eq!(d.simple_root(i).unwrap().pairing(i).unwrap(), 2, "{fam} {i}");
            }
        }
    }
}
