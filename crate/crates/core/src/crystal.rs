//! The finite-crystal interface shared by every model, and the tensor
//! product rule.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::root_data::{RootDatum, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    E,
    F,
}

impl Direction {
    pub fn letter(self) -> char {
        match self {
            Direction::E => 'e',
            Direction::F => 'f',
        }
    }
}

/// A finite crystal with Kashiwara operators `e_i`, `f_i`. The "zero" result
/// is `None`.
pub trait Crystal {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn datum(&self) -> RootDatum;

    /// Colors of the crystal graph: `0..=n` for affine models, `1..=n` for
    /// classical ones.
    fn indices(&self) -> Vec<usize>;

    /// All elements in canonical order.
    fn elements(&self) -> Vec<Self::Elem>;

    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    /// Classical weight in epsilon coordinates (not normalized for tableaux).
    fn wt(&self, b: &Self::Elem) -> Vec<i64>;

    /// Stable vertex identifier.
    fn id(&self, b: &Self::Elem) -> String;

    /// Index `k` of the classical component `B(kθ)` containing `b`, when
    /// the model has one.
    fn component(&self, _b: &Self::Elem) -> Option<u32> {
        None
    }

    /// Family tag written into exported graphs.
    fn tag(&self) -> String;

    fn level(&self) -> Option<u32> {
        None
    }

    fn apply(&self, dir: Direction, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        match dir {
            Direction::E => self.e(i, b),
            Direction::F => self.f(i, b),
        }
    }

    /// `ε_i(b)` by iterating `e_i` until it vanishes.
    fn epsilon(&self, i: usize, b: &Self::Elem) -> u32 {
        iterate_count(|x| self.e(i, x), b)
    }

    /// `φ_i(b)` by iterating `f_i` until it vanishes.
    fn phi(&self, i: usize, b: &Self::Elem) -> u32 {
        iterate_count(|x| self.f(i, x), b)
    }
}

fn iterate_count<T>(step: impl Fn(&T) -> Option<T>, start: &T) -> u32 {
    let mut count = 0;
    let mut cur = step(start);
    while let Some(next) = cur {
        count += 1;
        assert!(count < 1_000_000, "operator string does not terminate");
        cur = step(&next);
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Factor of `b1 ⊗ b2` on which `f_i` acts: left iff `φ_i(b1) > ε_i(b2)`.
pub fn tensor_side_f(phi_left: u32, eps_right: u32) -> Side {
    if phi_left > eps_right {
        Side::Left
    } else {
        Side::Right
    }
}

/// Factor of `b1 ⊗ b2` on which `e_i` acts: left iff `φ_i(b1) ≥ ε_i(b2)`.
pub fn tensor_side_e(phi_left: u32, eps_right: u32) -> Side {
    if phi_left >= eps_right {
        Side::Left
    } else {
        Side::Right
    }
}

/// `ε_i(b1 ⊗ b2)` from the statistics of the factors.
pub fn tensor_epsilon(eps_left: u32, phi_left: u32, eps_right: u32) -> u32 {
    eps_left + eps_right.saturating_sub(phi_left)
}

/// `φ_i(b1 ⊗ b2)` from the statistics of the factors.
pub fn tensor_phi(phi_left: u32, eps_right: u32, phi_right: u32) -> u32 {
    phi_right + phi_left.saturating_sub(eps_right)
}

/// `B1 ⊗ B2` over the same index set, with statistics obtained by iteration
/// inside each factor.
pub struct TensorProduct<'a, L: Crystal, R: Crystal> {
    pub left: &'a L,
    pub right: &'a R,
}

impl<'a, L: Crystal, R: Crystal> TensorProduct<'a, L, R> {
    pub fn new(left: &'a L, right: &'a R) -> Self {
        assert_eq!(left.datum(), right.datum(), "tensor factors over different root data");
        TensorProduct { left, right }
    }
}

impl<L: Crystal, R: Crystal> Crystal for TensorProduct<'_, L, R> {
    type Elem = (L::Elem, R::Elem);

    fn datum(&self) -> RootDatum {
        self.left.datum()
    }

    fn indices(&self) -> Vec<usize> {
        self.left.indices()
    }

    fn elements(&self) -> Vec<Self::Elem> {
        let rights = self.right.elements();
        let mut out = Vec::new();
        for a in self.left.elements() {
            for b in &rights {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    fn e(&self, i: usize, (a, b): &Self::Elem) -> Option<Self::Elem> {
        match tensor_side_e(self.left.phi(i, a), self.right.epsilon(i, b)) {
            Side::Left => self.left.e(i, a).map(|a2| (a2, b.clone())),
            Side::Right => self.right.e(i, b).map(|b2| (a.clone(), b2)),
        }
    }

    fn f(&self, i: usize, (a, b): &Self::Elem) -> Option<Self::Elem> {
        match tensor_side_f(self.left.phi(i, a), self.right.epsilon(i, b)) {
            Side::Left => self.left.f(i, a).map(|a2| (a2, b.clone())),
            Side::Right => self.right.f(i, b).map(|b2| (a.clone(), b2)),
        }
    }

    fn wt(&self, (a, b): &Self::Elem) -> Vec<i64> {
        self.left
            .wt(a)
            .iter()
            .zip(self.right.wt(b))
            .map(|(x, y)| x + y)
            .collect()
    }

    fn id(&self, (a, b): &Self::Elem) -> String {
        format!("{}⊗{}", self.left.id(a), self.right.id(b))
    }

    fn tag(&self) -> String {
        format!("{}⊗{}", self.left.tag(), self.right.tag())
    }
}

/// A finite affine crystal `B_l` decomposing classically as `⊕_{k≤l} B(kθ)`.
pub trait AdjointModel: Crystal {
    fn level_value(&self) -> u32;

    /// `k` such that `b ∈ B(kθ)`.
    fn component_of(&self, b: &Self::Elem) -> u32;

    fn weight(&self, b: &Self::Elem) -> Weight;

    fn epsilon_closed(&self, i: usize, b: &Self::Elem) -> u32;

    fn phi_closed(&self, i: usize, b: &Self::Elem) -> u32;

    /// Coordinates in the order used on the command line.
    fn coords(&self, b: &Self::Elem) -> Vec<u32>;

    fn element_at(&self, coords: &[u32]) -> Result<Self::Elem>;

    /// `|B_l|` from a closed formula.
    fn closed_cardinality(&self) -> u128;

    /// The element of `B(kθ)` killed by every classical `e_i`.
    fn highest_of(&self, k: u32) -> Result<Self::Elem> {
        if k > self.level_value() {
            return Err(Error::ComponentOutOfRange {
                k,
                level: self.level_value(),
            });
        }
        self.elements()
            .into_iter()
            .find(|b| {
                self.component_of(b) == k
                    && self.indices().into_iter().filter(|&i| i > 0).all(|i| self.e(i, b).is_none())
            })
            .ok_or(Error::ComponentOutOfRange {
                k,
                level: self.level_value(),
            })
    }
}
