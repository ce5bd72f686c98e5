//! Classical crystals `B(λ)` of type A_n realized on semistandard tableaux
//! with entries `1..=n+1`.
//!
//! Tableaux are stored column by column. Kashiwara operators act on the
//! Japanese reading word (columns right to left, each top to bottom) by the
//! signature rule, which is the tensor product rule applied letter by letter.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::crystal::{Crystal, Direction};
use crate::error::{Error, Result};
use crate::root_data::{RootDatum, RootFamily};

/// A partition with at most `n` nonzero rows. Zero rows are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    pub fn new(rows: Vec<usize>, n: usize) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not weakly decreasing")));
        }
        let rows: Vec<usize> = rows.into_iter().filter(|&r| r > 0).collect();
        if rows.len() > n {
            return Err(Error::InvalidShape(format!(
                "depth {} exceeds {n}",
                rows.len()
            )));
        }
        Ok(Shape { rows })
    }

    pub fn empty() -> Self {
        Shape { rows: Vec::new() }
    }

    /// `(2k, k^{n-1})`, the shape of `kθ` for type A_n.
    pub fn adjoint(n: usize, k: usize) -> Self {
        if k == 0 {
            return Shape::empty();
        }
        let mut rows = vec![k; n];
        rows[0] = 2 * k;
        Shape { rows }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Column heights, left to right.
    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.rows.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect()
    }
}

pub fn letter_f(i: usize, j: usize) -> Option<usize> {
    (j == i).then_some(i + 1)
}

pub fn letter_e(i: usize, j: usize) -> Option<usize> {
    (j == i + 1).then_some(i)
}

/// Position in `word` at which `e_i` (rightmost uncancelled `i+1`) or `f_i`
/// (leftmost uncancelled `i`) acts, after cancelling every `i · (i+1)` pair.
pub fn signature_position(word: &[usize], i: usize, dir: Direction) -> Option<usize> {
    let mut open_i: Vec<usize> = Vec::new();
    let mut free_upper: Vec<usize> = Vec::new();
    for (pos, &letter) in word.iter().enumerate() {
        if letter == i {
            open_i.push(pos);
        } else if letter == i + 1
            && open_i.pop().is_none() {
                free_upper.push(pos);
            }
    }
    match dir {
        Direction::E => free_upper.last().copied(),
        Direction::F => open_i.first().copied(),
    }
}

/// Apply `e_i` or `f_i` to a word regarded as a tensor product of letters.
pub fn apply_to_word(word: &[usize], i: usize, dir: Direction) -> Option<Vec<usize>> {
    let pos = signature_position(word, i, dir)?;
    let mut out = word.to_vec();
    out[pos] = match dir {
        Direction::E => letter_e(i, word[pos])?,
        Direction::F => letter_f(i, word[pos])?,
    };
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_columns(n: usize, columns: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        for (c, col) in columns.iter().enumerate() {
            if col.is_empty() || col.len() > n {
                return bad(format!("column {c} has height {}", col.len()));
            }
            if col.iter().any(|&v| v == 0 || v > n + 1) {
                return bad(format!("column {c} has an entry outside 1..={}", n + 1));
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("column {c} is not strictly increasing"));
            }
            if c > 0 {
                let prev = &columns[c - 1];
                if prev.len() < col.len() {
                    return bad("column heights increase".into());
                }
                if col.iter().zip(prev).any(|(&a, &b)| a < b) {
                    return bad(format!("row decreases at column {c}"));
                }
            }
        }
        Ok(Tableau { n, columns })
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths increase".into()));
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect();
        Tableau::from_columns(n, columns)
    }

    /// Rebuild a tableau of the given shape from its reading word.
    pub fn from_reading_word(n: usize, shape: &Shape, word: &[usize]) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "word of length {} does not fill a shape of size {}",
                word.len(),
                shape.size()
            )));
        }
        let heights = shape.column_heights();
        let mut columns = vec![Vec::new(); heights.len()];
        let mut rest = word;
        for (c, &h) in heights.iter().enumerate().rev() {
            columns[c] = rest[..h].to_vec();
            rest = &rest[h..];
        }
        Tableau::from_columns(n, columns)
    }

    /// The highest weight tableau: row `r` filled with `r`.
    pub fn highest(n: usize, shape: &Shape) -> Self {
        let columns = shape
            .column_heights()
            .into_iter()
            .map(|h| (1..=h).collect())
            .collect();
        Tableau { n, columns }
    }

    /// `C_j`: the column of depth `n` without the entry `j`.
    pub fn column_without(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n + 1 {
            return Err(Error::InvalidTableau(format!("no column C_{j} for n = {n}")));
        }
        Tableau::from_columns(n, vec![(1..=n + 1).filter(|&v| v != j).collect()])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn shape(&self) -> Shape {
        let depth = self.columns.first().map_or(0, Vec::len);
        let rows = (0..depth)
            .map(|r| self.columns.iter().filter(|c| c.len() > r).count())
            .collect();
        Shape { rows }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let depth = self.columns.first().map_or(0, Vec::len);
        (0..depth)
            .map(|r| self.columns.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.columns.iter().rev().flatten().copied().collect()
    }

    /// Number of entries equal to each of `1..=n+1`.
    pub fn content(&self) -> Vec<i64> {
        let mut c = vec![0; self.n + 1];
        for &v in self.columns.iter().flatten() {
            c[v - 1] += 1;
        }
        c
    }

    pub fn apply(&self, i: usize, dir: Direction) -> Option<Tableau> {
        let word = apply_to_word(&self.reading_word(), i, dir)?;
        let t = Tableau::from_reading_word(self.n, &self.shape(), &word)
            .expect("signature rule preserves semistandardness");
        Some(t)
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reading_word()
            .cmp(&other.reading_word())
            .then_with(|| self.shape().cmp(&other.shape()))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        if rows.is_empty() {
            return f.write_str("∅");
        }
        for (r, row) in rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(","))?;
        }
        Ok(())
    }
}

/// Every semistandard tableau of `shape` with entries in `1..=n+1`, filled
/// cell by cell in row-major order.
pub fn all_semistandard(n: usize, shape: &Shape) -> Vec<Tableau> {
    fn fill(
        n: usize,
        rows: &[usize],
        r: usize,
        c: usize,
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if r == rows.len() {
            out.push(Tableau::from_rows(n, grid.clone()).expect("filled grid is semistandard"));
            return;
        }
        if c == rows[r] {
            fill(n, rows, r + 1, 0, grid, out);
            return;
        }
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n + 1 {
            grid[r].push(v);
            fill(n, rows, r, c + 1, grid, out);
            grid[r].pop();
        }
    }
    let mut out = Vec::new();
    let mut grid = vec![Vec::new(); shape.rows().len()];
    fill(n, shape.rows(), 0, 0, &mut grid, &mut out);
    out.sort();
    out
}

/// The classical crystal `B(λ)` of type A_n.
#[derive(Clone, Debug)]
pub struct ClassicalCrystal {
    n: usize,
    shape: Shape,
}

impl ClassicalCrystal {
    pub fn new(n: usize, shape: Shape) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank {
                family: RootFamily::A,
                rank: n,
            });
        }
        if shape.rows().len() > n {
            return Err(Error::InvalidShape(format!("depth exceeds {n}")));
        }
        Ok(ClassicalCrystal { n, shape })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn highest(&self) -> Tableau {
        Tableau::highest(self.n, &self.shape)
    }
}

/// Breadth-first closure of the highest weight tableau under all `f_i`.
pub fn enumerate_crystal(crystal: &ClassicalCrystal) -> Vec<Tableau> {
    let start = crystal.highest();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for i in 1..=crystal.n {
            if let Some(next) = t.apply(i, Direction::F) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

impl Crystal for ClassicalCrystal {
    type Elem = Tableau;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::A, self.n).expect("rank checked at construction")
    }

    fn indices(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    fn elements(&self) -> Vec<Tableau> {
        enumerate_crystal(self)
    }

    fn e(&self, i: usize, b: &Tableau) -> Option<Tableau> {
        b.apply(i, Direction::E)
    }

    fn f(&self, i: usize, b: &Tableau) -> Option<Tableau> {
        b.apply(i, Direction::F)
    }

    fn wt(&self, b: &Tableau) -> Vec<i64> {
        b.content()
    }

    fn id(&self, b: &Tableau) -> String {
        format!("T{}:{}", self.n, b)
    }

    fn tag(&self) -> String {
        format!("A{}", self.n)
    }
}

/// `B(ϖ_1)^{⊗ len}` on words, operated on by the signature rule.
#[derive(Clone, Debug)]
pub struct WordCrystal {
    pub n: usize,
    pub len: usize,
}

impl Crystal for WordCrystal {
    type Elem = Vec<usize>;

    fn datum(&self) -> RootDatum {
        RootDatum::new(RootFamily::A, self.n).expect("positive rank")
    }

    fn indices(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    fn elements(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..self.len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (1..=self.n + 1).map(move |v| {
                        let mut w = w.clone();
                        w.push(v);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn e(&self, i: usize, b: &Vec<usize>) -> Option<Vec<usize>> {
        apply_to_word(b, i, Direction::E)
    }

    fn f(&self, i: usize, b: &Vec<usize>) -> Option<Vec<usize>> {
        apply_to_word(b, i, Direction::F)
    }

    fn wt(&self, b: &Vec<usize>) -> Vec<i64> {
        let mut c = vec![0; self.n + 1];
        for &v in b {
            c[v - 1] += 1;
        }
        c
    }

    fn id(&self, b: &Vec<usize>) -> String {
        let parts: Vec<String> = b.iter().map(ToString::to_string).collect();
        format!("W{}:{}", self.n, parts.join("⊗"))
    }

    fn tag(&self) -> String {
        format!("A{}", self.n)
    }
}
