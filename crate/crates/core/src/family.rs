//! Runtime registry of the adjoint-crystal families, each behind the
//! [`AdjointFamily`] trait and selected by name.

use std::fmt;
use std::str::FromStr;

use crate::affine_a::{verify_section3, AdjointA};
use crate::affine_c::{verify_section4, AdjointC};
use crate::affine_d2::{verify_section5, AdjointD2};
use crate::crystal::{AdjointModel, Direction};
use crate::crystal_graph::{build_graph, CrystalGraph};
use crate::error::{Error, Result};
use crate::root_data::RootFamily;
use crate::util::join;
use crate::verify::{Check, Report};

/// Where an operator word starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Start {
    /// Coordinates in the family's command-line order.
    Coords(Vec<u32>),
    /// The classical highest weight element of `B(kθ)`.
    HighestOf(u32),
}

/// One letter of an operator word such as `f0` or `e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Op {
    pub dir: Direction,
    pub index: usize,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dir.letter(), self.index)
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not an operator like f0 or e2"));
        let mut chars = s.chars();
        let dir = match chars.next() {
            Some('e') => Direction::E,
            Some('f') => Direction::F,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let index = rest.parse().map_err(|_| bad())?;
        Ok(Op { dir, index })
    }
}

/// Parses a whitespace-separated operator word, applied left to right.
pub fn parse_word(s: &str) -> Result<Vec<Op>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Result of applying an operator word: the start element, then one step
/// per operator until one of them returns zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    pub start: String,
    pub steps: Vec<(Op, Option<String>)>,
}

impl Trajectory {
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.start);
        for (op, elem) in &self.steps {
            out.push_str(&format!("{op}\t{}\n", elem.as_deref().unwrap_or("0")));
        }
        out
    }
}

pub trait AdjointFamily: Send + Sync {
    /// Command-line name.
    fn name(&self) -> &'static str;

    /// The classical root system of the weights.
    fn root_family(&self) -> RootFamily;

    fn description(&self) -> &'static str;

    fn cardinality(&self, rank: usize, level: u32) -> Result<u128>;

    /// The crystal graph of `B_l`, or of `B(kθ)` with its classical arrows.
    fn graph(&self, rank: usize, level: u32, component: Option<u32>) -> Result<CrystalGraph>;

    fn verify(&self, rank: usize, level: u32, checks: &[Check]) -> Result<Report>;

    fn apply(&self, rank: usize, level: u32, start: &Start, word: &[Op]) -> Result<Trajectory>;
}

fn model_graph<M: AdjointModel>(m: &M, component: Option<u32>) -> Result<CrystalGraph> {
    let g = build_graph(m);
    match component {
        None => Ok(g),
        Some(k) if k > m.level_value() => Err(Error::ComponentOutOfRange {
            k,
            level: m.level_value(),
        }),
        Some(k) => {
            let classical: Vec<usize> = m.indices().into_iter().filter(|&i| i > 0).collect();
            Ok(g.induced(|node| node.k == Some(k), &classical))
        }
    }
}

fn model_apply<M: AdjointModel>(
    m: &M,
    start: &Start,
    word: &[Op],
    show: impl Fn(&M::Elem) -> String,
) -> Result<Trajectory> {
    let indices = m.indices();
    if let Some(op) = word.iter().find(|op| !indices.contains(&op.index)) {
        return Err(Error::IndexOutOfRange {
            index: op.index,
            rank: m.datum().rank(),
        });
    }
    let mut cur = match start {
        Start::Coords(c) => m.element_at(c)?,
        Start::HighestOf(k) => m.highest_of(*k)?,
    };
    let mut trajectory = Trajectory {
        start: show(&cur),
        steps: Vec::new(),
    };
    for &op in word {
        match m.apply(op.dir, op.index, &cur) {
            Some(next) => {
                trajectory.steps.push((op, Some(show(&next))));
                cur = next;
            }
            None => {
                trajectory.steps.push((op, None));
                break;
            }
        }
    }
    Ok(trajectory)
}

fn tuple<M: AdjointModel>(m: &M) -> impl Fn(&M::Elem) -> String + '_ {
    move |b| format!("({})", join(&m.coords(b)))
}

pub struct FamilyA;

impl AdjointFamily for FamilyA {
    fn name(&self) -> &'static str {
        "a1"
    }

    fn root_family(&self) -> RootFamily {
        RootFamily::A
    }

    fn description(&self) -> &'static str {
        "A_n^(1), B^{1,l} ⊗ B^{n,l}"
    }

    fn cardinality(&self, rank: usize, level: u32) -> Result<u128> {
        Ok(AdjointA::new(rank, level)?.closed_cardinality())
    }

    fn graph(&self, rank: usize, level: u32, component: Option<u32>) -> Result<CrystalGraph> {
        model_graph(&AdjointA::new(rank, level)?, component)
    }

    fn verify(&self, rank: usize, level: u32, checks: &[Check]) -> Result<Report> {
        verify_section3(rank, level, checks)
    }

    fn apply(&self, rank: usize, level: u32, start: &Start, word: &[Op]) -> Result<Trajectory> {
        let m = AdjointA::new(rank, level)?;
        model_apply(&m, start, word, |b| {
            format!("({};{})", join(b.first.counts()), join(b.second.counts()))
        })
    }
}

pub struct FamilyC;

impl AdjointFamily for FamilyC {
    fn name(&self) -> &'static str {
        "c1"
    }

    fn root_family(&self) -> RootFamily {
        RootFamily::C
    }

    fn description(&self) -> &'static str {
        "C_n^(1), B^{1,2l}"
    }

    fn cardinality(&self, rank: usize, level: u32) -> Result<u128> {
        Ok(AdjointC::new(rank, level)?.closed_cardinality())
    }

    fn graph(&self, rank: usize, level: u32, component: Option<u32>) -> Result<CrystalGraph> {
        model_graph(&AdjointC::new(rank, level)?, component)
    }

    fn verify(&self, rank: usize, level: u32, checks: &[Check]) -> Result<Report> {
        verify_section4(rank, level, checks)
    }

    fn apply(&self, rank: usize, level: u32, start: &Start, word: &[Op]) -> Result<Trajectory> {
        let m = AdjointC::new(rank, level)?;
        model_apply(&m, start, word, tuple(&m))
    }
}

pub struct FamilyD2;

impl AdjointFamily for FamilyD2 {
    fn name(&self) -> &'static str {
        "d2"
    }

    fn root_family(&self) -> RootFamily {
        RootFamily::B
    }

    fn description(&self) -> &'static str {
        "D_{n+1}^(2), B^{1,l}"
    }

    fn cardinality(&self, rank: usize, level: u32) -> Result<u128> {
        Ok(AdjointD2::new(rank, level)?.closed_cardinality())
    }

    fn graph(&self, rank: usize, level: u32, component: Option<u32>) -> Result<CrystalGraph> {
        model_graph(&AdjointD2::new(rank, level)?, component)
    }

    fn verify(&self, rank: usize, level: u32, checks: &[Check]) -> Result<Report> {
        verify_section5(rank, level, checks)
    }

    fn apply(&self, rank: usize, level: u32, start: &Start, word: &[Op]) -> Result<Trajectory> {
        let m = AdjointD2::new(rank, level)?;
        model_apply(&m, start, word, tuple(&m))
    }
}

pub struct FamilyRegistry {
    entries: Vec<Box<dyn AdjointFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry { entries: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = FamilyRegistry::empty();
        r.register(Box::new(FamilyA));
        r.register(Box::new(FamilyC));
        r.register(Box::new(FamilyD2));
        r
    }

    /// Adds a family, replacing any earlier one with the same name.
    pub fn register(&mut self, family: Box<dyn AdjointFamily>) {
        self.entries.retain(|f| f.name() != family.name());
        self.entries.push(family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn AdjointFamily> {
        self.entries
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|f| f.name()).collect()
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        FamilyRegistry::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let r = FamilyRegistry::builtin();
        assert_eq!(r.names(), vec!["a1", "c1", "d2"]);
        assert_eq!(r.get("c1").unwrap().root_family(), RootFamily::C);
        assert_eq!(r.get("b1").err(), Some(Error::UnknownFamily("b1".into())));
    }

    #[test]
    fn word_parsing() {
        let w = parse_word(" f0  e12 f1").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[1], Op { dir: Direction::E, index: 12 });
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("g1").is_err());
        assert!(parse_word("f").is_err());
        assert!(parse_word("f-1").is_err());
    }

    #[test]
    fn apply_examples() {
        let r = FamilyRegistry::builtin();
        let c = r.get("c1").unwrap();
        let t = c.apply(2, 1, &Start::Coords(vec![0, 0, 0, 0]), &parse_word("f0").unwrap()).unwrap();
        assert_eq!(t.render(), "(0,0,0,0)\nf0\t(2,0,0,0)\n");
        let t = c.apply(2, 1, &Start::Coords(vec![0, 0, 0, 0]), &[]).unwrap();
        assert_eq!(t.render(), "(0,0,0,0)\n");
        let t = c.apply(2, 1, &Start::Coords(vec![0, 0, 0, 0]), &parse_word("f0 f0 f1").unwrap()).unwrap();
        assert_eq!(t.render(), "(0,0,0,0)\nf0\t(2,0,0,0)\nf0\t0\n");

        let d = r.get("d2").unwrap();
        let t = d.apply(2, 1, &Start::Coords(vec![0; 5]), &parse_word("f0 f1").unwrap()).unwrap();
        assert_eq!(t.render(), "(0,0,0,0,0)\nf0\t(1,0,0,0,0)\nf1\t(0,1,0,0,0)\n");

        let a = r.get("a1").unwrap();
        let t = a.apply(2, 1, &Start::HighestOf(1), &parse_word("f1").unwrap()).unwrap();
        assert_eq!(t.start, "(1,0,0;0,0,1)");
        assert!(a.apply(2, 1, &Start::Coords(vec![0; 6]), &[]).is_err());
        assert!(a.apply(2, 1, &Start::HighestOf(0), &parse_word("f3").unwrap()).is_err());
    }

    #[test]
    fn component_graphs() {
        let r = FamilyRegistry::builtin();
        assert_eq!(r.get("c1").unwrap().graph(2, 1, None).unwrap().nodes.len(), 11);
        let g = r.get("d2").unwrap().graph(2, 1, Some(1)).unwrap();
        assert_eq!(g.nodes.len(), 5);
        assert!(g.edges.iter().all(|e| e.i != 0));
        assert_eq!(r.get("a1").unwrap().graph(2, 1, Some(1)).unwrap().nodes.len(), 8);
        assert!(r.get("a1").unwrap().graph(2, 1, Some(2)).is_err());
    }
}
