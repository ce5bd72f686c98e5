//! Finite crystal graphs: construction from any [`Crystal`], structural
//! checks, embeddings, and DOT / JSON export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::verify::{Check, CheckResult, Tally};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub k: Option<u32>,
    pub weight: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: String,
    pub dst: String,
    pub i: usize,
}

/// Vertices in canonical element order; an edge `src -> dst` colored `i`
/// means `dst = f_i src`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub family: String,
    pub rank: usize,
    pub level: Option<u32>,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn build_graph<C: Crystal>(c: &C) -> CrystalGraph {
    let elements = c.elements();
    let nodes = elements
        .iter()
        .map(|b| Node {
            id: c.id(b),
            k: c.component(b),
            weight: c.wt(b),
        })
        .collect();
    let mut edges = Vec::new();
    for b in &elements {
        for i in c.indices() {
            if let Some(fb) = c.f(i, b) {
                edges.push(Edge {
                    src: c.id(b),
                    dst: c.id(&fb),
                    i,
                });
            }
        }
    }
    CrystalGraph {
        family: c.tag(),
        rank: c.datum().rank(),
        level: c.level(),
        nodes,
        edges,
    }
}

impl CrystalGraph {
    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Subgraph induced on the kept vertices, restricted to `labels`.
    pub fn induced(&self, keep: impl Fn(&Node) -> bool, labels: &[usize]) -> CrystalGraph {
        let nodes: Vec<Node> = self.nodes.iter().filter(|n| keep(n)).cloned().collect();
        let ids: BTreeSet<&str> = nodes.iter().map(|n| n.id.as_str()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| labels.contains(&e.i))
            .filter(|e| ids.contains(e.src.as_str()) && ids.contains(e.dst.as_str()))
            .cloned()
            .collect();
        CrystalGraph {
            family: self.family.clone(),
            rank: self.rank,
            level: self.level,
            nodes,
            edges,
        }
    }

    /// Every vertex has at most one outgoing and one incoming edge per color,
    /// and every edge joins known vertices.
    pub fn is_functional(&self) -> bool {
        let ids: BTreeSet<&str> = self.nodes.iter().map(|n| n.id.as_str()).collect();
        let mut out = BTreeSet::new();
        let mut inc = BTreeSet::new();
        self.edges.iter().all(|e| {
            ids.contains(e.src.as_str())
                && ids.contains(e.dst.as_str())
                && out.insert((e.src.as_str(), e.i))
                && inc.insert((e.dst.as_str(), e.i))
        })
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let Some(first) = self.nodes.first() else {
            return true;
        };
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(&e.src).or_default().push(&e.dst);
            adj.entry(&e.dst).or_default().push(&e.src);
        }
        let mut seen = BTreeSet::from([first.id.as_str()]);
        let mut queue = VecDeque::from([first.id.as_str()]);
        while let Some(v) = queue.pop_front() {
            for &w in adj.get(v).into_iter().flatten() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    pub fn export(&self, format: Format) -> Result<String> {
        match format {
            Format::Dot => Ok(self.to_dot()),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for n in &self.nodes {
            let wt: Vec<String> = n.weight.iter().map(ToString::to_string).collect();
            let mut label = format!("{}\\nwt=({})", escape(&n.id), wt.join(","));
            if let Some(k) = n.k {
                let _ = write!(label, " k={k}");
            }
            let _ = writeln!(out, "  \"{}\" [label=\"{label}\"];", escape(&n.id));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                escape(&e.src),
                escape(&e.dst),
                e.i
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Checks that `map` embeds `small` into `big` as a full subgraph for the
/// given colors: the map is injective, every small edge has an image edge,
/// and every big edge between image vertices comes from a small edge.
pub fn check_embedding(
    name: &str,
    small: &CrystalGraph,
    big: &CrystalGraph,
    map: &BTreeMap<String, String>,
    labels: &[usize],
) -> CheckResult {
    let mut t = Tally::new(Check::Embedding, name);
    let big_ids: BTreeSet<&str> = big.nodes.iter().map(|n| n.id.as_str()).collect();
    let mut preimage: BTreeMap<&str, &str> = BTreeMap::new();
    for n in &small.nodes {
        match map.get(&n.id) {
            Some(img) => {
                let fresh = preimage.insert(img.as_str(), n.id.as_str()).is_none();
                let ok = fresh && big_ids.contains(img.as_str());
                t.record(ok, || format!("vertex {} -> {img} (injective: {fresh})", n.id));
            }
            None => t.record(false, || format!("vertex {} is not mapped", n.id)),
        }
    }
    let small_edges: BTreeSet<(&str, &str, usize)> = small
        .edges
        .iter()
        .filter(|e| labels.contains(&e.i))
        .map(|e| (e.src.as_str(), e.dst.as_str(), e.i))
        .collect();
    let big_edges: BTreeSet<(&str, &str, usize)> = big
        .edges
        .iter()
        .filter(|e| labels.contains(&e.i))
        .map(|e| (e.src.as_str(), e.dst.as_str(), e.i))
        .collect();
    for &(s, d, i) in &small_edges {
        let (Some(ms), Some(md)) = (map.get(s), map.get(d)) else {
            continue;
        };
        let present = big_edges.contains(&(ms.as_str(), md.as_str(), i));
        t.record(present, || format!("edge {s} -{i}-> {d} has no image {ms} -{i}-> {md}"));
    }
    for &(s, d, i) in &big_edges {
        let (Some(ps), Some(pd)) = (preimage.get(s), preimage.get(d)) else {
            continue;
        };
        let present = small_edges.contains(&(*ps, *pd, i));
        t.record(present, || format!("edge {s} -{i}-> {d} between images has no preimage {ps} -{i}-> {pd}"));
    }
    t.finish()
}
