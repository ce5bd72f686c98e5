//! Check results, reports, and the checks shared by all three families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::crystal::{AdjointModel, Crystal, Direction};
use crate::crystal_graph::{build_graph, check_embedding};
use crate::error::Error;
use crate::root_data::{self, classify_shift, in_shell, on_boundary, RootFamily, Weight};

/// Groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Axioms,
    Embedding,
    Commute,
    Boundary,
    Multiplicity,
    F0Landing,
    Promotion,
    Alpha,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Axioms,
        Check::Embedding,
        Check::Commute,
        Check::Boundary,
        Check::Multiplicity,
        Check::F0Landing,
        Check::Promotion,
        Check::Alpha,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Axioms => "axioms",
            Check::Embedding => "embedding",
            Check::Commute => "commute",
            Check::Boundary => "boundary",
            Check::Multiplicity => "multiplicity",
            Check::F0Landing => "f0-landing",
            Check::Promotion => "promotion",
            Check::Alpha => "alpha",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: Check,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Accumulates cases of one check; keeps the first counterexample.
pub struct Tally {
    result: CheckResult,
}

impl Tally {
    pub fn new(check: Check, name: impl Into<String>) -> Self {
        Tally {
            result: CheckResult {
                check,
                name: name.into(),
                cases: 0,
                failures: 0,
                counterexample: None,
            },
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.counterexample.is_none() {
                self.result.counterexample = Some(detail());
            }
        }
    }

    pub fn finish(self) -> CheckResult {
        self.result
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub family: String,
    pub rank: usize,
    pub level: u32,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(family: impl Into<String>, rank: usize, level: u32) -> Self {
        Report {
            family: family.into(),
            rank,
            level,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, r: CheckResult) {
        self.results.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = CheckResult>) {
        self.results.extend(rs);
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }

    pub fn failed(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| !r.passed()).collect()
    }

    pub fn of(&self, check: Check) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(move |r| r.check == check)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} rank={} level={}\n", self.family, self.rank, self.level);
        let width = self.results.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let pad = " ".repeat(width - r.name.chars().count());
            out.push_str(&format!(
                "{status}  {:<12} {}{pad}  cases={}",
                r.check.name(),
                r.name,
                r.cases
            ));
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("  failures={}  first: {c}", r.failures));
            }
            out.push('\n');
        }
        let failed = self.failed().len();
        if self.results.is_empty() {
            out.push_str("no selected checks apply to this family\n");
        } else if failed == 0 {
            out.push_str(&format!("all {} checks passed\n", self.results.len()));
        } else {
            out.push_str(&format!("{failed} of {} checks failed\n", self.results.len()));
        }
        out
    }
}

/// `b' = f_i b` iff `b = e_i b'`, and both operators stay inside the crystal.
pub fn axiom_inverse<C: Crystal>(c: &C) -> CheckResult {
    let elements = c.elements();
    let set: BTreeSet<&C::Elem> = elements.iter().collect();
    let mut t = Tally::new(Check::Axioms, "e/f inverse");
    for b in &elements {
        for i in c.indices() {
            if let Some(fb) = c.f(i, b) {
                let ok = set.contains(&fb) && c.e(i, &fb).as_ref() == Some(b);
                t.record(ok, || format!("f{i} {} = {} but e{i} does not return", c.id(b), c.id(&fb)));
            }
            if let Some(eb) = c.e(i, b) {
                let ok = set.contains(&eb) && c.f(i, &eb).as_ref() == Some(b);
                t.record(ok, || format!("e{i} {} = {} but f{i} does not return", c.id(b), c.id(&eb)));
            }
        }
    }
    t.finish()
}

/// `wt(f_i b) = wt b - α_i` for classical `i`, `wt(f_0 b) = wt b + θ`.
pub fn weight_shifts<M: AdjointModel>(m: &M) -> CheckResult {
    let datum = m.datum();
    let theta = datum.theta();
    let mut t = Tally::new(Check::Axioms, "weight shifts");
    for b in m.elements() {
        let w = m.weight(&b);
        for i in m.indices() {
            if let Some(fb) = m.f(i, &b) {
                let expected = if i == 0 {
                    &w + &theta
                } else {
                    &w - &datum.simple_root(i).expect("classical index")
                };
                let got = m.weight(&fb);
                t.record(got == expected, || {
                    format!("wt(f{i} {}) = {got}, expected {expected}", m.id(&b))
                });
            }
        }
    }
    t.finish()
}

/// Closed formulas for `ε_i`, `φ_i` agree with operator iteration.
pub fn closed_statistics<M: AdjointModel>(m: &M) -> CheckResult {
    let mut t = Tally::new(Check::Axioms, "closed eps/phi");
    for b in m.elements() {
        for i in m.indices() {
            let closed = (m.epsilon_closed(i, &b), m.phi_closed(i, &b));
            let iterated = (m.epsilon(i, &b), m.phi(i, &b));
            t.record(closed == iterated, || {
                format!("{} i={i}: closed {closed:?}, iterated {iterated:?}", m.id(&b))
            });
        }
    }
    t.finish()
}

/// `φ_i(b) - ε_i(b) = ⟨h_i, wt b⟩` for classical `i`.
pub fn classical_pairing<M: AdjointModel>(m: &M) -> CheckResult {
    let mut t = Tally::new(Check::Axioms, "phi - eps = <h_i, wt>");
    for b in m.elements() {
        let w = m.weight(&b);
        for i in m.indices().into_iter().filter(|&i| i > 0) {
            let lhs = i64::from(m.phi(i, &b)) - i64::from(m.epsilon(i, &b));
            let rhs = w.pairing(i).expect("classical index");
            t.record(lhs == rhs, || format!("{} i={i}: {lhs} vs {rhs}", m.id(&b)));
        }
    }
    t.finish()
}

pub fn cardinality<M: AdjointModel>(m: &M) -> CheckResult {
    let mut t = Tally::new(Check::Axioms, "cardinality");
    let got = m.elements().len() as u128;
    let want = m.closed_cardinality();
    t.record(got == want, || format!("enumerated {got}, closed form {want}"));
    t.finish()
}

/// Connectivity of the full affine crystal graph.
pub fn connectivity<C: Crystal>(c: &C) -> CheckResult {
    let mut t = Tally::new(Check::Axioms, "connected");
    let g = build_graph(c);
    t.record(g.is_connected(), || "crystal graph is disconnected".to_string());
    t.finish()
}

pub fn axiom_checks<M: AdjointModel>(m: &M) -> Vec<CheckResult> {
    vec![
        axiom_inverse(m),
        weight_shifts(m),
        closed_statistics(m),
        classical_pairing(m),
        cardinality(m),
        connectivity(m),
    ]
}

/// `k(map b) = k(b) + shift` for every `b` of the domain.
pub fn component_shift<S, T>(
    check: Check,
    name: &str,
    small: &S,
    big: &T,
    map: impl Fn(&S::Elem) -> T::Elem,
    shift: u32,
) -> CheckResult
where
    S: AdjointModel,
    T: AdjointModel,
{
    let mut t = Tally::new(check, name);
    for b in small.elements() {
        let img = map(&b);
        let ok = big.component_of(&img) == small.component_of(&b) + shift;
        t.record(ok, || format!("{} -> {}", small.id(&b), big.id(&img)));
    }
    t.finish()
}

/// Weight preservation and injectivity of a level-raising map.
pub fn map_preserves_weight<S, T>(
    check: Check,
    name: &str,
    small: &S,
    big: &T,
    map: impl Fn(&S::Elem) -> T::Elem,
) -> CheckResult
where
    S: AdjointModel,
    T: AdjointModel,
{
    let mut t = Tally::new(check, name);
    let mut seen = BTreeMap::new();
    for b in small.elements() {
        let img = map(&b);
        let same = small.weight(&b).coeffs() == big.weight(&img).coeffs();
        let fresh = seen.insert(img.clone(), b.clone()).is_none();
        t.record(same && fresh, || {
            format!("{} -> {} (weight kept: {same}, injective: {fresh})", small.id(&b), big.id(&img))
        });
    }
    t.finish()
}

/// `⋃ images = {b ∈ B(kθ) | wt b ∈ wt B((k-1)θ)}` for each `k`, where
/// `image_of(k)` returns the union of the images landing in `B(kθ)`.
pub fn boundary_sets<M: AdjointModel>(
    name: &str,
    m: &M,
    image_of: impl Fn(u32) -> BTreeSet<M::Elem>,
) -> CheckResult {
    let mut t = Tally::new(Check::Boundary, name);
    let elements = m.elements();
    for k in 0..=m.level_value() {
        let inner: BTreeSet<M::Elem> = elements
            .iter()
            .filter(|b| m.component_of(b) == k)
            .filter(|b| k > 0 && in_shell(&m.weight(b), k - 1))
            .cloned()
            .collect();
        let images = image_of(k);
        t.record(inner == images, || {
            let extra = images.difference(&inner).next().map(|b| m.id(b));
            let missing = inner.difference(&images).next().map(|b| m.id(b));
            format!("k={k}: image-only {extra:?}, shell-only {missing:?}")
        });
    }
    t.finish()
}

/// Elements outside `interior` are exactly those whose weight lies on the
/// boundary of their own shell.
pub fn boundary_weights<M: AdjointModel>(m: &M, interior: &BTreeSet<M::Elem>) -> CheckResult {
    let mut t = Tally::new(Check::Boundary, "outside images <=> boundary weight");
    for b in m.elements() {
        let on = on_boundary(&m.weight(&b), m.component_of(&b));
        t.record(on != interior.contains(&b), || {
            format!("{} k={} boundary={on}", m.id(&b), m.component_of(&b))
        });
    }
    t.finish()
}

/// Largest absolute coefficient of a weight in `wt B(kθ)`.
fn coefficient_bound(family: RootFamily, k: u32) -> i64 {
    let k = i64::from(k);
    match family {
        RootFamily::C => 2 * k,
        _ => k,
    }
}

/// Every weight on the boundary of shell `k` occurs exactly once in `B(kθ)`.
pub fn boundary_multiplicity<M: AdjointModel>(m: &M) -> CheckResult {
    let datum = m.datum();
    let mut t = Tally::new(Check::Multiplicity, "boundary weights have multiplicity 1");
    let elements = m.elements();
    for k in 0..=m.level_value() {
        let mut counts: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for b in elements.iter().filter(|b| m.component_of(b) == k) {
            *counts.entry(m.weight(b).coeffs().to_vec()).or_default() += 1;
        }
        let bound = coefficient_bound(datum.family(), k);
        for mu in root_data::weights_in_box(datum, bound) {
            if !on_boundary(&mu, k) {
                continue;
            }
            let c = counts.get(mu.coeffs()).copied().unwrap_or(0);
            t.record(c == 1, || format!("k={k} weight {mu} has multiplicity {c}"));
        }
    }
    t.finish()
}

/// `wt` is injective on the complement of `interior`.
pub fn restricted_injective<M: AdjointModel>(m: &M, interior: &BTreeSet<M::Elem>) -> CheckResult {
    let mut t = Tally::new(Check::Multiplicity, "wt injective off the images");
    let mut seen: BTreeMap<Weight, M::Elem> = BTreeMap::new();
    for b in m.elements().into_iter().filter(|b| !interior.contains(b)) {
        let w = m.weight(&b);
        let clash = seen.get(&w).cloned();
        t.record(clash.is_none(), || {
            format!("{} and {} share weight {w}", m.id(clash.as_ref().unwrap()), m.id(&b))
        });
        seen.insert(w, b);
    }
    t.finish()
}

/// The `f_0` landing statements for elements outside the images.
pub fn f0_landing<M: AdjointModel>(m: &M, interior: &BTreeSet<M::Elem>) -> Vec<CheckResult> {
    let datum = m.datum();
    let theta = datum.theta();
    let l = m.level_value();
    let elements = m.elements();
    let mut by_weight: BTreeMap<Weight, Vec<M::Elem>> = BTreeMap::new();
    for b in elements.iter().filter(|b| !interior.contains(b)) {
        by_weight.entry(m.weight(b)).or_default().push(b.clone());
    }

    let mut zero = Tally::new(Check::F0Landing, "f0 b = 0 <=> k = l and wt b + θ ∉ wt B(lθ)");
    let mut shell = Tally::new(Check::F0Landing, "component of f0 b matches shell shift");
    let mut unique = Tally::new(Check::F0Landing, "f0 b is the unique boundary element of its weight");
    let mut no_same = Tally::new(Check::F0Landing, "no same-shell case for type B");
    for b in elements.iter().filter(|b| !interior.contains(b)) {
        let k = m.component_of(b);
        let mu = m.weight(b);
        let shifted = &mu + &theta;
        let fb = m.f(0, b);
        let predicted_zero = k == l && !in_shell(&shifted, l);
        zero.record(fb.is_none() == predicted_zero, || {
            format!("{} k={k}: f0 present={}, predicted zero={predicted_zero}", m.id(b), fb.is_some())
        });
        let class = match classify_shift(&mu, k) {
            Ok(c) => c,
            Err(e) => {
                shell.record(false, || format!("{}: {e}", m.id(b)));
                continue;
            }
        };
        if datum.family() == RootFamily::B {
            no_same.record(class.shift != root_data::Shift::Same, || m.id(b));
        }
        let Some(fb) = fb else { continue };
        let target = class.target(k);
        let got = m.component_of(&fb);
        shell.record(target == Some(got), || {
            format!("{} k={k} {:?}: f0 lands in k={got}", m.id(b), class.shift)
        });
        let candidates = by_weight.get(&shifted).map(Vec::as_slice).unwrap_or(&[]);
        let ok = !interior.contains(&fb) && candidates == std::slice::from_ref(&fb);
        unique.record(ok, || {
            format!("{} -> {}: {} boundary elements of weight {shifted}", m.id(b), m.id(&fb), candidates.len())
        });
    }
    let mut out = vec![zero.finish(), shell.finish(), unique.finish()];
    if datum.family() == RootFamily::B {
        out.push(no_same.finish());
    }
    out
}

/// Whether a commutation statement is claimed unconditionally or only when
/// the operator does not vanish on the domain element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideCondition {
    Always,
    WhenDefined,
}

/// `map(op b) = op(map b)` for every `b` of the domain and every listed
/// operator.
pub fn check_commutation<S, T>(
    check: Check,
    name: &str,
    small: &S,
    big: &T,
    map: impl Fn(&S::Elem) -> T::Elem,
    ops: &[(Direction, usize)],
    condition: SideCondition,
) -> CheckResult
where
    S: Crystal,
    T: Crystal,
{
    let mut t = Tally::new(check, name);
    for b in small.elements() {
        let mb = map(&b);
        for &(dir, i) in ops {
            let before = small.apply(dir, i, &b);
            if before.is_none() && condition == SideCondition::WhenDefined {
                continue;
            }
            let lhs = before.as_ref().map(&map);
            let rhs = big.apply(dir, i, &mb);
            t.record(lhs == rhs, || {
                format!(
                    "{}{i} at {}: map then op = {:?}, op then map = {:?}",
                    dir.letter(),
                    small.id(&b),
                    rhs.as_ref().map(|x| big.id(x)),
                    lhs.as_ref().map(|x| big.id(x))
                )
            });
        }
    }
    t.finish()
}

pub fn classical_ops(n: usize) -> Vec<(Direction, usize)> {
    (1..=n)
        .flat_map(|i| [(Direction::F, i), (Direction::E, i)])
        .collect()
}

pub fn selected(checks: &[Check], c: Check) -> bool {
    checks.contains(&c)
}

/// `map` realizes the crystal graph of `small` as a full subgraph of `big`
/// for every color of `big`.
pub fn full_subgraph<S, T>(name: &str, small: &S, big: &T, map: impl Fn(&S::Elem) -> T::Elem) -> CheckResult
where
    S: Crystal,
    T: Crystal,
{
    let gs = build_graph(small);
    let gb = build_graph(big);
    let ids: BTreeMap<String, String> = small
        .elements()
        .iter()
        .map(|b| (small.id(b), big.id(&map(b))))
        .collect();
    check_embedding(name, &gs, &gb, &ids, &big.indices())
}
