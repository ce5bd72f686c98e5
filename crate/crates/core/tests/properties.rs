//! Independent oracles and randomized invariants.

use std::collections::BTreeSet;

use proptest::prelude::*;

use adjcrys::affine_a::{AdjElemA, AdjointA, ColElem, KrCol, KrRow, RowElem};
use adjcrys::affine_c::{phi_map, AdjointC, ElemC};
use adjcrys::affine_d2::{psi_map, AdjointD2, ElemD};
use adjcrys::crystal::TensorProduct;
use adjcrys::crystal_graph::build_graph;
use adjcrys::family::{parse_word, FamilyRegistry, Op};
use adjcrys::root_data::{in_shell, on_boundary, on_boundary_by_shells, weights_in_box, Weight};
use adjcrys::tableaux::{apply_to_word, WordCrystal};
use adjcrys::util::parse_coords;
use adjcrys::verify::{self, Check};
use adjcrys::{AdjointModel, Crystal, CrystalGraph, Direction, Error};

/// Weights of `B(kθ)` read off a model, against the shell predicate on a
/// box large enough to contain them.
fn shells_match<M: AdjointModel>(m: &M, bound: i64) {
    let datum = m.datum();
    for k in 0..=m.level_value() {
        let from_model: BTreeSet<Weight> = m
            .elements()
            .iter()
            .filter(|b| m.component_of(b) == k)
            .map(|b| m.weight(b))
            .collect();
        let from_shell: BTreeSet<Weight> =
            weights_in_box(datum, bound).into_iter().filter(|w| in_shell(w, k)).collect();
        assert_eq!(from_model, from_shell, "{} k={k}", m.tag());
        for w in &from_shell {
            assert_eq!(on_boundary(w, k), on_boundary_by_shells(w, k));
        }
    }
}

#[test]
fn shell_predicate_matches_model_weights() {
    for n in [2, 3] {
        for l in 0..=3 {
            shells_match(&AdjointA::new(n, l).unwrap(), i64::from(l) + 1);
            shells_match(&AdjointC::new(n, l).unwrap(), 2 * i64::from(l) + 1);
            shells_match(&AdjointD2::new(n, l).unwrap(), i64::from(l) + 1);
        }
    }
}

/// `jw(b_1) · jw(b_2)` as a word of letters.
fn word_of(b: &AdjElemA) -> (usize, Vec<usize>) {
    let mut w = b.first.to_tableau().reading_word();
    let split = w.len();
    w.extend(b.second.to_tableau().reading_word());
    (split, w)
}

fn from_word(n: usize, split: usize, w: &[usize]) -> AdjElemA {
    let mut x = vec![0; n + 1];
    for &v in &w[..split] {
        x[v - 1] += 1;
    }
    let row = RowElem::new(x).unwrap();
    let mut y = vec![0; n + 1];
    for col in w[split..].chunks(n) {
        let mut sorted = col.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, col, "column stays increasing");
        let missing = (1..=n + 1).find(|v| !col.contains(v)).unwrap();
        y[missing - 1] += 1;
    }
    AdjElemA::new(row, ColElem::new(y).unwrap()).unwrap()
}

/// `f_0` conjugated by promotion, with `f_1` taken from the signature rule
/// on the letters.
fn oracle_op(b: &AdjElemA, i: usize, dir: Direction) -> Option<AdjElemA> {
    let n = b.first.rank();
    if i > 0 {
        let (split, w) = word_of(b);
        return apply_to_word(&w, i, dir).map(|w2| from_word(n, split, &w2));
    }
    let rotated = AdjElemA::new(b.first.promotion(), b.second.promotion()).unwrap();
    let moved = oracle_op(&rotated, 1, dir)?;
    Some(AdjElemA::new(moved.first.promotion_inverse(), moved.second.promotion_inverse()).unwrap())
}

#[test]
fn type_a_operators_match_letter_oracle() {
    for n in [2, 3] {
        for l in 0..=3 {
            let m = AdjointA::new(n, l).unwrap();
            for b in m.elements() {
                for i in 0..=n {
                    for dir in [Direction::E, Direction::F] {
                        assert_eq!(m.apply(dir, i, &b), oracle_op(&b, i, dir), "{} {}{i}", m.id(&b), dir.letter());
                    }
                }
            }
        }
    }
}

#[test]
fn type_a_tensor_of_kr_factors() {
    for n in [2, 3] {
        for l in 0..=2 {
            let row = KrRow::new(n, l).unwrap();
            let col = KrCol::new(n, l).unwrap();
            let tensor = TensorProduct::new(&row, &col);
            let m = AdjointA::new(n, l).unwrap();
            for (r, c) in tensor.elements() {
                let b = AdjElemA::new(r.clone(), c.clone()).unwrap();
                for i in 0..=n {
                    let via_tensor = tensor
                        .f(i, &(r.clone(), c.clone()))
                        .map(|(r2, c2)| AdjElemA::new(r2, c2).unwrap());
                    assert_eq!(m.f(i, &b), via_tensor);
                }
            }
        }
    }
}

#[test]
fn b0_element_is_killed_by_classical_f() {
    let m = AdjointA::new(2, 1).unwrap();
    let b = m.element_at(&[1, 0, 0, 1, 0, 0]).unwrap();
    assert_eq!(m.component_of(&b), 0);
    // letters 1 · 2 3: the 1 and 2 cancel, so f_1 has nowhere to act
    assert_eq!(word_of(&b).1, vec![1, 2, 3]);
    assert_eq!(m.f(1, &b), None);
    assert_eq!(oracle_op(&b, 1, Direction::F), None);
    assert_eq!(m.f(2, &b), None);
    assert_eq!(m.f(0, &b), Some(m.element_at(&[1, 0, 0, 0, 0, 1]).unwrap()));
}

#[test]
fn word_crystal_is_a_crystal() {
    let c = WordCrystal { n: 2, len: 3 };
    assert!(verify::axiom_inverse(&c).passed());
    assert_eq!(c.elements().len(), 27);
}

/// A type C model whose `f_0` takes the `x̄_1 - 2` branch when
/// `x_1 = x̄_1`. Weights still move by `θ`; `e_0` is left intact.
struct SkewedC(AdjointC);

impl Crystal for SkewedC {
    type Elem = ElemC;

    fn datum(&self) -> adjcrys::root_data::RootDatum {
        self.0.datum()
    }

    fn indices(&self) -> Vec<usize> {
        self.0.indices()
    }

    fn elements(&self) -> Vec<ElemC> {
        self.0.elements()
    }

    fn e(&self, i: usize, b: &ElemC) -> Option<ElemC> {
        self.0.e(i, b)
    }

    fn f(&self, i: usize, b: &ElemC) -> Option<ElemC> {
        if i == 0 && b.x(1) == b.xbar(1) {
            let mut t = b.tuple();
            let last = t.len() - 1;
            t[last] = t[last].checked_sub(2)?;
            return ElemC::from_tuple(b.level(), &t).ok();
        }
        self.0.f(i, b)
    }

    fn wt(&self, b: &ElemC) -> Vec<i64> {
        self.0.wt(b)
    }

    fn id(&self, b: &ElemC) -> String {
        self.0.id(b)
    }

    fn tag(&self) -> String {
        self.0.tag()
    }
}

impl AdjointModel for SkewedC {
    fn level_value(&self) -> u32 {
        self.0.level_value()
    }

    fn component_of(&self, b: &ElemC) -> u32 {
        self.0.component_of(b)
    }

    fn weight(&self, b: &ElemC) -> Weight {
        self.0.weight(b)
    }

    fn epsilon_closed(&self, i: usize, b: &ElemC) -> u32 {
        self.0.epsilon_closed(i, b)
    }

    fn phi_closed(&self, i: usize, b: &ElemC) -> u32 {
        self.0.phi_closed(i, b)
    }

    fn coords(&self, b: &ElemC) -> Vec<u32> {
        self.0.coords(b)
    }

    fn element_at(&self, coords: &[u32]) -> adjcrys::Result<ElemC> {
        self.0.element_at(coords)
    }

    fn closed_cardinality(&self) -> u128 {
        self.0.closed_cardinality()
    }
}

#[test]
fn checks_reject_a_corrupted_model() {
    let bad = SkewedC(AdjointC::new(2, 2).unwrap());
    let results = verify::axiom_checks(&bad);
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
    assert!(failed.contains(&"e/f inverse"), "{failed:?}");
    assert!(failed.contains(&"closed eps/phi"), "{failed:?}");
    assert!(!failed.contains(&"weight shifts"), "{failed:?}");
    let interior: BTreeSet<ElemC> = AdjointC::new(2, 1)
        .unwrap()
        .elements()
        .iter()
        .flat_map(|b| (1..=2).map(move |j| phi_map(j, b).unwrap()))
        .collect();
    assert!(verify::f0_landing(&bad, &interior).iter().any(|r| !r.passed()));
}

#[test]
fn reports_list_every_selected_group() {
    let registry = FamilyRegistry::builtin();
    for name in registry.names() {
        let report = registry.get(name).unwrap().verify(2, 2, &Check::ALL).unwrap();
        for check in [Check::Axioms, Check::Embedding, Check::Commute, Check::Boundary, Check::Multiplicity, Check::F0Landing] {
            assert!(report.of(check).count() > 0, "{name} lacks {check}");
        }
        let only = registry.get(name).unwrap().verify(2, 2, &[Check::Boundary]).unwrap();
        assert!(only.results.iter().all(|r| r.check == Check::Boundary));
    }
}

/// Drops `units` balls into `slots` boxes, one box index per ball.
fn counts(slots: usize, balls: &[usize]) -> Vec<u32> {
    let mut v = vec![0u32; slots];
    for &b in balls {
        v[b % slots] += 1;
    }
    v
}

fn elem_c() -> impl Strategy<Value = ElemC> {
    (2usize..=3, 0u32..=3)
        .prop_flat_map(|(n, l)| (Just(n), Just(l), 0..=l))
        .prop_flat_map(|(n, l, k)| {
            proptest::collection::vec(0usize..2 * n, 2 * k as usize)
                .prop_map(move |balls| ElemC::from_tuple(l, &counts(2 * n, &balls)).unwrap())
        })
}

fn elem_d() -> impl Strategy<Value = ElemD> {
    (2usize..=3, 0u32..=4)
        .prop_flat_map(|(n, l)| (Just(n), Just(l), 0..=l, any::<bool>()))
        .prop_flat_map(|(n, l, k, x0)| {
            let x0 = x0 && k > 0;
            let rest = (k - u32::from(x0)) as usize;
            proptest::collection::vec(0usize..2 * n, rest).prop_map(move |balls| {
                let v = counts(2 * n, &balls);
                let mut t = v[..n].to_vec();
                t.push(u32::from(x0));
                t.extend_from_slice(&v[n..]);
                ElemD::from_tuple(l, &t).unwrap()
            })
        })
}

proptest! {
    #[test]
    fn c_operators_are_partial_inverses(b in elem_c()) {
        for i in 0..=b.rank() {
            if let Some(fb) = b.f(i) {
                prop_assert_eq!(fb.e(i), Some(b.clone()));
            }
            if let Some(eb) = b.e(i) {
                prop_assert_eq!(eb.f(i), Some(b.clone()));
            }
        }
    }

    #[test]
    fn c_closed_statistics_count_steps(b in elem_c()) {
        for i in 0..=b.rank() {
            let m = AdjointC::new(b.rank(), b.level()).unwrap();
            prop_assert_eq!(b.epsilon(i), m.epsilon(i, &b));
            prop_assert_eq!(b.phi(i), m.phi(i, &b));
        }
    }

    #[test]
    fn c_lifts_keep_weight(b in elem_c(), j in 1usize..=3) {
        prop_assume!(j <= b.rank());
        let up = phi_map(j, &b).unwrap();
        prop_assert_eq!(up.weight_coeffs(), b.weight_coeffs());
        prop_assert_eq!(up.component(), b.component() + 1);
        prop_assert!(!up.is_boundary());
    }

    #[test]
    fn d_operators_are_partial_inverses(b in elem_d()) {
        for i in 0..=b.rank() {
            if let Some(fb) = b.f(i) {
                prop_assert_eq!(fb.e(i), Some(b.clone()));
            }
            let m = AdjointD2::new(b.rank(), b.level()).unwrap();
            prop_assert_eq!(b.epsilon(i), m.epsilon(i, &b));
            prop_assert_eq!(b.phi(i), m.phi(i, &b));
        }
    }

    #[test]
    fn d_lifts_keep_weight(b in elem_d(), j in 1usize..=3) {
        prop_assume!(j <= b.rank());
        let up = psi_map(j, &b).unwrap();
        prop_assert_eq!(up.weight_coeffs(), b.weight_coeffs());
        let shift = if j < b.rank() { 2 } else { 1 };
        prop_assert_eq!(up.component(), b.component() + shift);
        prop_assert_eq!(up.level(), b.level() + shift);
    }

    #[test]
    fn a_weight_shift(n in 2usize..=3, l in 0u32..=3, pick in 0usize..1000) {
        let m = AdjointA::new(n, l).unwrap();
        let elements = m.elements();
        let b = &elements[pick % elements.len()];
        let theta = m.datum().theta();
        if let Some(fb) = m.f(0, b) {
            prop_assert_eq!(m.weight(&fb), &m.weight(b) + &theta);
        }
        for i in 1..=n {
            let lhs = i64::from(m.phi(i, b)) - i64::from(m.epsilon(i, b));
            prop_assert_eq!(lhs, m.weight(b).pairing(i).unwrap());
        }
    }

    #[test]
    fn graph_json_round_trip(family in 0usize..3, n in 2usize..=3, l in 0u32..=2) {
        let registry = FamilyRegistry::builtin();
        let name = registry.names()[family];
        let g = registry.get(name).unwrap().graph(n, l, None).unwrap();
        let back = CrystalGraph::from_json(&g.to_json().unwrap()).unwrap();
        prop_assert!(back.is_functional());
        prop_assert_eq!(back, g);
    }

    #[test]
    fn op_display_round_trip(e in any::<bool>(), index in 0usize..100) {
        let op = Op { dir: if e { Direction::E } else { Direction::F }, index };
        prop_assert_eq!(op.to_string().parse::<Op>().unwrap(), op);
        prop_assert_eq!(parse_word(&format!("{op} {op}")).unwrap(), vec![op, op]);
    }

    #[test]
    fn coords_round_trip(v in proptest::collection::vec(0u32..1000, 0..8)) {
        let text = adjcrys::util::join(&v);
        prop_assert_eq!(parse_coords(&text).unwrap(), v.clone());
        prop_assert_eq!(parse_coords(&format!("({text})")).unwrap(), v);
    }
}

#[test]
fn graphs_match_models() {
    for n in [2, 3] {
        for l in 0..=2 {
            let m = AdjointD2::new(n, l).unwrap();
            let g = build_graph(&m);
            assert_eq!(g.nodes.len() as u128, m.closed_cardinality());
            assert!(g.is_functional() && g.is_connected());
        }
    }
    assert_eq!(
        FamilyRegistry::builtin().get("a1").unwrap().graph(2, 1, Some(3)).unwrap_err(),
        Error::ComponentOutOfRange { k: 3, level: 1 }
    );
}
