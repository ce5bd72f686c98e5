//! Type A_n^(1): the Kirillov–Reshetikhin crystals `B^{1,l}` and `B^{n,l}`
//! as count vectors, and the adjoint crystal `B_l = B^{1,l} ⊗ B^{n,l}`.
//!
//! A row tableau of `B^{1,l}` is stored by its letter counts `x_j`; a
//! rectangle of `B^{n,l}` by the number `y_j` of columns `C_j` (the depth-`n`
//! column missing `j`).

use std::collections::BTreeSet;

use crate::crystal::{
    tensor_epsilon, tensor_phi, tensor_side_e, tensor_side_f, AdjointModel, Crystal, Direction, Side,
};
use crate::error::{Error, Result};
use crate::root_data::{RootDatum, RootFamily, Weight};
use crate::tableaux::{ClassicalCrystal, Shape, Tableau};
use crate::util::{binomial, compositions, join};
use crate::verify::{self, Check, Report, SideCondition, Tally};

/// `counts` with `+1` at 1-based `plus` and `-1` at `minus`; `None` if a
/// count would go negative.
fn bump(counts: &[u32], plus: usize, minus: usize) -> Option<Vec<u32>> {
    let mut v = counts.to_vec();
    v[minus - 1] = v[minus - 1].checked_sub(1)?;
    v[plus - 1] += 1;
    Some(v)
}

fn rotate_forward(v: &[u32]) -> Vec<u32> {
    let mut out = v.to_vec();
    out.rotate_right(1);
    out
}

fn rotate_backward(v: &[u32]) -> Vec<u32> {
    let mut out = v.to_vec();
    out.rotate_left(1);
    out
}

fn check_counts(v: &[u32]) -> Result<()> {
    if v.len() < 3 {
        return Err(Error::InvalidElement(format!(
            "{} counts given, rank must be at least 2",
            v.len()
        )));
    }
    Ok(())
}

/// An element of `B^{1,l}`: `x_j` = number of entries `j` in the row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowElem {
    x: Vec<u32>,
}

impl RowElem {
    pub fn new(x: Vec<u32>) -> Result<Self> {
        check_counts(&x)?;
        Ok(RowElem { x })
    }

    pub fn counts(&self) -> &[u32] {
        &self.x
    }

    pub fn x(&self, j: usize) -> u32 {
        self.x[j - 1]
    }

    pub fn rank(&self) -> usize {
        self.x.len() - 1
    }

    pub fn level(&self) -> u32 {
        self.x.iter().sum()
    }

    /// `x_1(σb) = x_{n+1}(b)`, `x_j(σb) = x_{j-1}(b)`.
    pub fn promotion(&self) -> Self {
        RowElem {
            x: rotate_forward(&self.x),
        }
    }

    pub fn promotion_inverse(&self) -> Self {
        RowElem {
            x: rotate_backward(&self.x),
        }
    }

    pub fn f(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let x = if i == 0 { bump(&self.x, 1, n + 1) } else { bump(&self.x, i + 1, i) }?;
        Some(RowElem { x })
    }

    pub fn e(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let x = if i == 0 { bump(&self.x, n + 1, 1) } else { bump(&self.x, i, i + 1) }?;
        Some(RowElem { x })
    }

    pub fn epsilon(&self, i: usize) -> u32 {
        if i == 0 {
            self.x(1)
        } else {
            self.x(i + 1)
        }
    }

    pub fn phi(&self, i: usize) -> u32 {
        if i == 0 {
            self.x(self.rank() + 1)
        } else {
            self.x(i)
        }
    }

    /// The one-row tableau.
    pub fn to_tableau(&self) -> Tableau {
        let row: Vec<usize> = (1..=self.x.len())
            .flat_map(|j| std::iter::repeat_n(j, self.x(j) as usize))
            .collect();
        Tableau::from_rows(self.rank(), vec![row]).expect("sorted row is semistandard")
    }

    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        let rows = t.rows();
        if rows.len() > 1 {
            return Err(Error::InvalidElement(format!("{t} has more than one row")));
        }
        let content = t.content();
        RowElem::new(content.into_iter().map(|c| c as u32).collect())
    }
}

/// An element of `B^{n,l}`: `y_j` = number of columns `C_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColElem {
    y: Vec<u32>,
}

impl ColElem {
    pub fn new(y: Vec<u32>) -> Result<Self> {
        check_counts(&y)?;
        Ok(ColElem { y })
    }

    pub fn counts(&self) -> &[u32] {
        &self.y
    }

    pub fn y(&self, j: usize) -> u32 {
        self.y[j - 1]
    }

    pub fn rank(&self) -> usize {
        self.y.len() - 1
    }

    pub fn level(&self) -> u32 {
        self.y.iter().sum()
    }

    pub fn promotion(&self) -> Self {
        ColElem {
            y: rotate_forward(&self.y),
        }
    }

    pub fn promotion_inverse(&self) -> Self {
        ColElem {
            y: rotate_backward(&self.y),
        }
    }

    pub fn f(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let y = if i == 0 { bump(&self.y, n + 1, 1) } else { bump(&self.y, i, i + 1) }?;
        Some(ColElem { y })
    }

    pub fn e(&self, i: usize) -> Option<Self> {
        let n = self.rank();
        let y = if i == 0 { bump(&self.y, 1, n + 1) } else { bump(&self.y, i + 1, i) }?;
        Some(ColElem { y })
    }

    pub fn epsilon(&self, i: usize) -> u32 {
        if i == 0 {
            self.y(self.rank() + 1)
        } else {
            self.y(i)
        }
    }

    pub fn phi(&self, i: usize) -> u32 {
        if i == 0 {
            self.y(1)
        } else {
            self.y(i + 1)
        }
    }

    /// The rectangle of shape `(l^n)`: from left to right the columns
    /// `C_{n+1}, …, C_1`.
    pub fn to_tableau(&self) -> Tableau {
        let n = self.rank();
        let columns = (1..=n + 1)
            .rev()
            .flat_map(|j| {
                let col: Vec<usize> = (1..=n + 1).filter(|&v| v != j).collect();
                std::iter::repeat_n(col, self.y(j) as usize)
            })
            .collect();
        Tableau::from_columns(n, columns).expect("columns C_j in decreasing j are semistandard")
    }

    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        let n = t.rank();
        let mut y = vec![0; n + 1];
        for col in t.columns() {
            if col.len() != n {
                return Err(Error::InvalidElement(format!("{t} is not a rectangle of depth {n}")));
            }
            let missing = (1..=n + 1)
                .find(|v| !col.contains(v))
                .expect("a depth-n column misses one letter");
            y[missing - 1] += 1;
        }
        ColElem::new(y)
    }
}

/// An element `b_1 ⊗ b_2` of `B_l = B^{1,l} ⊗ B^{n,l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjElemA {
    pub first: RowElem,
    pub second: ColElem,
}

impl AdjElemA {
    pub fn new(first: RowElem, second: ColElem) -> Result<Self> {
        if first.rank() != second.rank() || first.level() != second.level() {
            return Err(Error::InvalidElement(format!(
                "factors {:?} and {:?} differ in rank or level",
                first.counts(),
                second.counts()
            )));
        }
        Ok(AdjElemA { first, second })
    }

    pub fn rank(&self) -> usize {
        self.first.rank()
    }

    pub fn level(&self) -> u32 {
        self.first.level()
    }

    /// `k = l - min(x_1, y_1)`.
    pub fn component(&self) -> u32 {
        self.level() - self.first.x(1).min(self.second.y(1))
    }

    /// `Σ (x_j - y_j) ε_j`.
    pub fn weight_coeffs(&self) -> Vec<i64> {
        self.first
            .counts()
            .iter()
            .zip(self.second.counts())
            .map(|(&x, &y)| i64::from(x) - i64::from(y))
            .collect()
    }

    pub fn f(&self, i: usize) -> Option<Self> {
        match tensor_side_f(self.first.phi(i), self.second.epsilon(i)) {
            Side::Left => Some(AdjElemA {
                first: self.first.f(i)?,
                second: self.second.clone(),
            }),
            Side::Right => Some(AdjElemA {
                first: self.first.clone(),
                second: self.second.f(i)?,
            }),
        }
    }

    pub fn e(&self, i: usize) -> Option<Self> {
        match tensor_side_e(self.first.phi(i), self.second.epsilon(i)) {
            Side::Left => Some(AdjElemA {
                first: self.first.e(i)?,
                second: self.second.clone(),
            }),
            Side::Right => Some(AdjElemA {
                first: self.first.clone(),
                second: self.second.e(i)?,
            }),
        }
    }

    pub fn epsilon(&self, i: usize) -> u32 {
        tensor_epsilon(self.first.epsilon(i), self.first.phi(i), self.second.epsilon(i))
    }

    pub fn phi(&self, i: usize) -> u32 {
        tensor_phi(self.first.phi(i), self.second.epsilon(i), self.second.phi(i))
    }
}

/// `α(b_1 ⊗ b_2) = b̃_1 · b̃_2 ∈ B(kθ)`: strip `min(x_1, y_1)` letters `1`
/// and columns `C_1`, then glue the reading words into a tableau of shape
/// `(2k, k^{n-1})`.
pub fn alpha(b: &AdjElemA) -> (u32, Tableau) {
    let n = b.rank();
    let m = b.first.x(1).min(b.second.y(1));
    let k = b.level() - m;
    let mut x = b.first.counts().to_vec();
    let mut y = b.second.counts().to_vec();
    x[0] -= m;
    y[0] -= m;
    let mut word = RowElem { x }.to_tableau().reading_word();
    word.extend(ColElem { y }.to_tableau().reading_word());
    let t = Tableau::from_reading_word(n, &Shape::adjoint(n, k as usize), &word)
        .expect("glued tableau is semistandard");
    (k, t)
}

/// Inverse of [`alpha`] on `B_l`.
pub fn alpha_inverse(level: u32, t: &Tableau) -> Result<AdjElemA> {
    let n = t.rank();
    let shape = t.shape();
    let k = shape.rows().get(1).copied().unwrap_or(0);
    if shape != Shape::adjoint(n, k) || k as u32 > level {
        return Err(Error::InvalidElement(format!(
            "{t} is not in B(kθ) for any k ≤ {level}"
        )));
    }
    let word = t.reading_word();
    let mut x = vec![0u32; n + 1];
    for &v in &word[..k] {
        x[v - 1] += 1;
    }
    let mut y = vec![0u32; n + 1];
    for col in word[k..].chunks(n) {
        let missing = (1..=n + 1).find(|v| !col.contains(v)).expect("depth-n column");
        y[missing - 1] += 1;
    }
    let pad = level - k as u32;
    x[0] += pad;
    y[0] += pad;
    AdjElemA::new(RowElem::new(x)?, ColElem::new(y)?)
}

/// `Θ_j: B_{l-1} → B_l`, adding an entry `j` and a column `C_j`.
pub fn theta_map(j: usize, b: &AdjElemA) -> Result<AdjElemA> {
    let n = b.rank();
    if j == 0 || j > n + 1 {
        return Err(Error::IndexOutOfRange { index: j, rank: n + 1 });
    }
    let mut x = b.first.counts().to_vec();
    let mut y = b.second.counts().to_vec();
    x[j - 1] += 1;
    y[j - 1] += 1;
    Ok(AdjElemA {
        first: RowElem { x },
        second: ColElem { y },
    })
}

fn datum_a(n: usize) -> Result<RootDatum> {
    if n < 2 {
        return Err(Error::InvalidRank {
            family: RootFamily::A,
            rank: n,
        });
    }
    RootDatum::new(RootFamily::A, n)
}

/// `B^{1,l}` as an affine crystal.
#[derive(Clone, Copy, Debug)]
pub struct KrRow {
    n: usize,
    l: u32,
}

impl KrRow {
    pub fn new(n: usize, l: u32) -> Result<Self> {
        datum_a(n)?;
        Ok(KrRow { n, l })
    }
}

impl Crystal for KrRow {
    type Elem = RowElem;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::A, self.n).expect("rank checked")
    }

    fn indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    fn elements(&self) -> Vec<RowElem> {
        compositions(self.l, self.n + 1).into_iter().map(|x| RowElem { x }).collect()
    }

    fn e(&self, i: usize, b: &RowElem) -> Option<RowElem> {
        b.e(i)
    }

    fn f(&self, i: usize, b: &RowElem) -> Option<RowElem> {
        b.f(i)
    }

    fn wt(&self, b: &RowElem) -> Vec<i64> {
        b.counts().iter().map(|&c| i64::from(c)).collect()
    }

    fn id(&self, b: &RowElem) -> String {
        format!("A{}:x={}", self.n, join(b.counts()))
    }

    fn tag(&self) -> String {
        format!("A{}", self.n)
    }

    fn level(&self) -> Option<u32> {
        Some(self.l)
    }
}

/// `B^{n,l}` as an affine crystal.
#[derive(Clone, Copy, Debug)]
pub struct KrCol {
    n: usize,
    l: u32,
}

impl KrCol {
    pub fn new(n: usize, l: u32) -> Result<Self> {
        datum_a(n)?;
        Ok(KrCol { n, l })
    }
}

impl Crystal for KrCol {
    type Elem = ColElem;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::A, self.n).expect("rank checked")
    }

    fn indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    fn elements(&self) -> Vec<ColElem> {
        compositions(self.l, self.n + 1).into_iter().map(|y| ColElem { y }).collect()
    }

    fn e(&self, i: usize, b: &ColElem) -> Option<ColElem> {
        b.e(i)
    }

    fn f(&self, i: usize, b: &ColElem) -> Option<ColElem> {
        b.f(i)
    }

    /// Content of the rectangle: `l - y_j` entries `j`.
    fn wt(&self, b: &ColElem) -> Vec<i64> {
        b.counts().iter().map(|&c| i64::from(self.l) - i64::from(c)).collect()
    }

    fn id(&self, b: &ColElem) -> String {
        format!("A{}:y={}", self.n, join(b.counts()))
    }

    fn tag(&self) -> String {
        format!("A{}", self.n)
    }

    fn level(&self) -> Option<u32> {
        Some(self.l)
    }
}

/// The adjoint crystal `B_l` of type A_n^(1).
#[derive(Clone, Copy, Debug)]
pub struct AdjointA {
    n: usize,
    l: u32,
}

impl AdjointA {
    pub fn new(n: usize, l: u32) -> Result<Self> {
        datum_a(n)?;
        Ok(AdjointA { n, l })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `B_{l-1}`, if `l > 0`.
    pub fn lower(&self) -> Option<AdjointA> {
        Some(AdjointA {
            n: self.n,
            l: self.l.checked_sub(1)?,
        })
    }

    pub fn element(&self, x: Vec<u32>, y: Vec<u32>) -> Result<AdjElemA> {
        let b = AdjElemA::new(RowElem::new(x)?, ColElem::new(y)?)?;
        if b.rank() != self.n || b.level() != self.l {
            return Err(Error::InvalidElement(format!(
                "element has rank {} and level {}, expected {} and {}",
                b.rank(),
                b.level(),
                self.n,
                self.l
            )));
        }
        Ok(b)
    }
}

impl Crystal for AdjointA {
    type Elem = AdjElemA;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::A, self.n).expect("rank checked")
    }

    fn indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    fn elements(&self) -> Vec<AdjElemA> {
        let parts = compositions(self.l, self.n + 1);
        let mut out = Vec::with_capacity(parts.len() * parts.len());
        for x in &parts {
            for y in &parts {
                out.push(AdjElemA {
                    first: RowElem { x: x.clone() },
                    second: ColElem { y: y.clone() },
                });
            }
        }
        out
    }

    fn e(&self, i: usize, b: &AdjElemA) -> Option<AdjElemA> {
        b.e(i)
    }

    fn f(&self, i: usize, b: &AdjElemA) -> Option<AdjElemA> {
        b.f(i)
    }

    fn wt(&self, b: &AdjElemA) -> Vec<i64> {
        b.weight_coeffs()
    }

    fn id(&self, b: &AdjElemA) -> String {
        format!("A{}:x={};y={}", self.n, join(b.first.counts()), join(b.second.counts()))
    }

    fn component(&self, b: &AdjElemA) -> Option<u32> {
        Some(b.component())
    }

    fn tag(&self) -> String {
        format!("A{}", self.n)
    }

    fn level(&self) -> Option<u32> {
        Some(self.l)
    }
}

impl AdjointModel for AdjointA {
    fn level_value(&self) -> u32 {
        self.l
    }

    fn component_of(&self, b: &AdjElemA) -> u32 {
        b.component()
    }

    fn weight(&self, b: &AdjElemA) -> Weight {
        Weight::new(self.datum(), b.weight_coeffs()).expect("x and y have equal sums")
    }

    fn epsilon_closed(&self, i: usize, b: &AdjElemA) -> u32 {
        b.epsilon(i)
    }

    fn phi_closed(&self, i: usize, b: &AdjElemA) -> u32 {
        b.phi(i)
    }

    fn coords(&self, b: &AdjElemA) -> Vec<u32> {
        let mut v = b.first.counts().to_vec();
        v.extend_from_slice(b.second.counts());
        v
    }

    fn element_at(&self, coords: &[u32]) -> Result<AdjElemA> {
        let width = self.n + 1;
        if coords.len() != 2 * width {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates (x_1..x_{width}, y_1..y_{width}), got {}",
                2 * width,
                coords.len()
            )));
        }
        self.element(coords[..width].to_vec(), coords[width..].to_vec())
    }

    fn closed_cardinality(&self) -> u128 {
        let side = binomial(u64::from(self.l) + self.n as u64, self.n as u64);
        side * side
    }
}

/// The statements about `B_l` of type A_n^(1), checked exhaustively.
pub fn verify_section3(n: usize, l: u32, checks: &[Check]) -> Result<Report> {
    let big = AdjointA::new(n, l)?;
    let small = big.lower();
    let mut report = Report::new("a1", n, l);
    let sel = |c| verify::selected(checks, c);

    if sel(Check::Axioms) {
        report.extend(verify::axiom_checks(&big));
        report.extend(kr_factor_statistics(n, l)?);
    }
    if sel(Check::Promotion) {
        report.extend(promotion_checks(n, l)?);
    }
    if sel(Check::Alpha) {
        report.extend(alpha_checks(&big)?);
    }

    let theta = |j: usize| move |b: &AdjElemA| theta_map(j, b).expect("j in range");
    let upper_js: Vec<usize> = (2..=n + 1).collect();

    if sel(Check::Embedding) {
        if let Some(small) = &small {
            report.push(verify::full_subgraph("Θ_1 full subgraph", small, &big, theta(1)));
            report.push(verify::component_shift(Check::Embedding, "Θ_1 keeps k", small, &big, theta(1), 0));
            report.push(verify::map_preserves_weight(Check::Embedding, "Θ_1 weight/injective", small, &big, theta(1)));
            report.push(verify::check_commutation(
                Check::Embedding,
                "Θ_1 commutes with classical e_i, f_i",
                small,
                &big,
                theta(1),
                &verify::classical_ops(n),
                SideCondition::Always,
            ));
            report.push(verify::check_commutation(
                Check::Embedding,
                "Θ_1 f0 = f0 Θ_1 when f0 b ≠ 0",
                small,
                &big,
                theta(1),
                &[(Direction::F, 0)],
                SideCondition::WhenDefined,
            ));
            report.push(verify::check_commutation(
                Check::Embedding,
                "Θ_1 e0 = e0 Θ_1 when e0 b ≠ 0",
                small,
                &big,
                theta(1),
                &[(Direction::E, 0)],
                SideCondition::WhenDefined,
            ));
            report.push(theta1_edge_case(small, &big, Direction::F));
            report.push(theta1_edge_case(small, &big, Direction::E));
        }
    }

    if sel(Check::Commute) {
        if let Some(small) = &small {
            for &j in &upper_js {
                report.push(verify::component_shift(
                    Check::Commute,
                    &format!("Θ_{j} raises k by 1"),
                    small,
                    &big,
                    theta(j),
                    1,
                ));
                report.push(verify::map_preserves_weight(
                    Check::Commute,
                    &format!("Θ_{j} weight/injective"),
                    small,
                    &big,
                    theta(j),
                ));
                report.push(verify::check_commutation(
                    Check::Commute,
                    &format!("Θ_{j} commutes with classical e_i, f_i when defined"),
                    small,
                    &big,
                    theta(j),
                    &verify::classical_ops(n),
                    SideCondition::WhenDefined,
                ));
                report.push(verify::check_commutation(
                    Check::Commute,
                    &format!("Θ_{j} commutes with e0, f0"),
                    small,
                    &big,
                    theta(j),
                    &[(Direction::F, 0), (Direction::E, 0)],
                    SideCondition::Always,
                ));
            }
        }
    }

    let interior: BTreeSet<AdjElemA> = match &small {
        Some(small) => small
            .elements()
            .iter()
            .flat_map(|b| upper_js.iter().map(move |&j| theta_map(j, b).expect("j in range")))
            .collect(),
        None => BTreeSet::new(),
    };

    if sel(Check::Boundary) {
        let image_of = |k: u32| -> BTreeSet<AdjElemA> {
            interior.iter().filter(|b| b.component() == k).cloned().collect()
        };
        report.push(verify::boundary_sets("⋃ Im Θ_j (j ≥ 2) = inner weights of B(kθ)", &big, image_of));
        report.push(verify::boundary_weights(&big, &interior));
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

/// If `f_0 b = 0` in `B_{l-1}` then `φ_0(Θ_1 b) = 1` and `f_0 Θ_1 b ∈ B(lθ)`;
/// likewise with `e_0`, `ε_0`.
fn theta1_edge_case(small: &AdjointA, big: &AdjointA, dir: Direction) -> verify::CheckResult {
    let name = match dir {
        Direction::F => "f0 b = 0 => φ0(Θ_1 b) = 1, f0 Θ_1 b ∈ B(lθ)",
        Direction::E => "e0 b = 0 => ε0(Θ_1 b) = 1, e0 Θ_1 b ∈ B(lθ)",
    };
    let mut t = Tally::new(Check::Embedding, name);
    for b in small.elements() {
        if small.apply(dir, 0, &b).is_some() {
            continue;
        }
        let img = theta_map(1, &b).expect("j = 1");
        let stat = match dir {
            Direction::F => big.phi(0, &img),
            Direction::E => big.epsilon(0, &img),
        };
        let lands = big.apply(dir, 0, &img).map(|c| c.component());
        t.record(stat == 1 && lands == Some(big.l), || {
            format!("{}: statistic {stat}, lands in {lands:?}", big.id(&img))
        });
    }
    t.finish()
}

fn kr_factor_statistics(n: usize, l: u32) -> Result<Vec<verify::CheckResult>> {
    let row = KrRow::new(n, l)?;
    let col = KrCol::new(n, l)?;
    let mut t = Tally::new(Check::Axioms, "KR factors: closed eps/phi");
    for b in row.elements() {
        for i in 0..=n {
            let closed = (b.epsilon(i), b.phi(i));
            let iter = (row.epsilon(i, &b), row.phi(i, &b));
            t.record(closed == iter, || format!("{} i={i}: {closed:?} vs {iter:?}", row.id(&b)));
        }
    }
    for b in col.elements() {
        for i in 0..=n {
            let closed = (b.epsilon(i), b.phi(i));
            let iter = (col.epsilon(i, &b), col.phi(i, &b));
            t.record(closed == iter, || format!("{} i={i}: {closed:?} vs {iter:?}", col.id(&b)));
        }
    }
    Ok(vec![verify::axiom_inverse(&row), verify::axiom_inverse(&col), t.finish()])
}

fn promotion_checks(n: usize, l: u32) -> Result<Vec<verify::CheckResult>> {
    let row = KrRow::new(n, l)?;
    let col = KrCol::new(n, l)?;
    let mut twist = Tally::new(Check::Promotion, "σ f_j = f_{j+1} σ, σ e_j = e_{j+1} σ");
    let mut conj = Tally::new(Check::Promotion, "f_0 = σ^{-1} f_1 σ, e_0 = σ^{-1} e_1 σ");
    let mut bij = Tally::new(Check::Promotion, "σ is a weight-rotating bijection");
    for b in row.elements() {
        for j in 0..=n {
            let next = (j + 1) % (n + 1);
            for dir in [Direction::F, Direction::E] {
                let lhs = row.apply(dir, j, &b).map(|c| c.promotion());
                let rhs = row.apply(dir, next, &b.promotion());
                twist.record(lhs == rhs, || format!("{} {}{j}", row.id(&b), dir.letter()));
            }
        }
        for dir in [Direction::F, Direction::E] {
            let direct = row.apply(dir, 0, &b);
            let via = row.apply(dir, 1, &b.promotion()).map(|c| c.promotion_inverse());
            conj.record(direct == via, || format!("{} {}0", row.id(&b), dir.letter()));
        }
        bij.record(b.promotion().promotion_inverse() == b, || row.id(&b));
    }
    for b in col.elements() {
        for j in 0..=n {
            let next = (j + 1) % (n + 1);
            for dir in [Direction::F, Direction::E] {
                let lhs = col.apply(dir, j, &b).map(|c| c.promotion());
                let rhs = col.apply(dir, next, &b.promotion());
                twist.record(lhs == rhs, || format!("{} {}{j}", col.id(&b), dir.letter()));
            }
        }
        for dir in [Direction::F, Direction::E] {
            let direct = col.apply(dir, 0, &b);
            let via = col.apply(dir, 1, &b.promotion()).map(|c| c.promotion_inverse());
            conj.record(direct == via, || format!("{} {}0", col.id(&b), dir.letter()));
        }
        bij.record(b.promotion().promotion_inverse() == b, || col.id(&b));
    }
    Ok(vec![twist.finish(), conj.finish(), bij.finish()])
}

fn alpha_checks(big: &AdjointA) -> Result<Vec<verify::CheckResult>> {
    let n = big.n;
    let components: Vec<ClassicalCrystal> = (0..=big.l)
        .map(|k| ClassicalCrystal::new(n, Shape::adjoint(n, k as usize)))
        .collect::<Result<_>>()?;

    let mut bijective = Tally::new(Check::Alpha, "α is a bijection onto ⊔ B(kθ)");
    let mut image = BTreeSet::new();
    for b in big.elements() {
        let (k, t) = alpha(&b);
        let back = alpha_inverse(big.l, &t)?;
        bijective.record(back == b && image.insert((k, t.clone())), || {
            format!("{} -> k={k} {t}", big.id(&b))
        });
    }
    let target: BTreeSet<(u32, Tableau)> = components
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.elements().into_iter().map(move |t| (k as u32, t)))
        .collect();
    bijective.record(image == target, || {
        format!("image has {} tableaux, ⊔ B(kθ) has {}", image.len(), target.len())
    });

    let mut weights = Tally::new(Check::Alpha, "α preserves weights");
    let mut commute = Tally::new(Check::Alpha, "α commutes with classical e_i, f_i");
    for b in big.elements() {
        let (k, t) = alpha(&b);
        let normalized: Vec<i64> = t.content().iter().map(|c| c - i64::from(k)).collect();
        weights.record(normalized == b.weight_coeffs(), || format!("{} vs {t}", big.id(&b)));
        for i in 1..=n {
            for dir in [Direction::F, Direction::E] {
                let lhs = big.apply(dir, i, &b).map(|c| alpha(&c));
                let rhs = t.apply(i, dir).map(|s| (k, s));
                commute.record(lhs == rhs, || format!("{} {}{i}", big.id(&b), dir.letter()));
            }
        }
    }
    Ok(vec![bijective.finish(), weights.finish(), commute.finish()])
}
