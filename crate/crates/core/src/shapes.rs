//! Partitions, boxes, skew shapes and their statistics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::qt::QTMonomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("parts must be positive and weakly decreasing: {0}")]
    NotAPartition(String),
    #[error("inner partition is not contained in the outer one")]
    NotContained,
    #[error("cannot parse shape: {0}")]
    Parse(String),
}

/// A box of a Young diagram, by the coordinates of its southwest corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    /// `χ = q^x t^{-y}`.
    pub fn weight(&self) -> QTMonomial {
        QTMonomial::new(self.x, -self.y)
    }

    pub fn content(&self) -> i64 {
        self.x - self.y
    }

    pub fn transpose(&self) -> Cell {
        Cell { x: self.y, y: self.x }
    }
}

pub fn box_weight(c: Cell) -> QTMonomial {
    c.weight()
}

pub fn content(c: Cell) -> i64 {
    c.content()
}

/// Weakly decreasing positive parts; row `i` (from the bottom) has `parts[i]` boxes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ShapeError::NotAPartition(format!("{:?}", parts)));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length, zero beyond the last row.
    pub fn row(&self, y: i64) -> usize {
        if y < 0 {
            return usize::MAX;
        }
        self.0.get(y as usize).copied().unwrap_or(0)
    }

    /// Column height, zero beyond the first row.
    pub fn col(&self, x: i64) -> usize {
        if x < 0 {
            return usize::MAX;
        }
        self.0.iter().take_while(|&&p| p as i64 > x).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x >= 0 && c.y >= 0 && (c.x as usize) < self.row(c.y)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((0..w as i64).map(|x| self.col(x)).collect())
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::with_capacity(self.size());
        for (y, &len) in self.0.iter().enumerate() {
            for x in 0..len {
                v.push(Cell::new(x as i64, y as i64));
            }
        }
        v
    }

    /// Arm and leg of a box of the partition.
    pub fn arm_leg(&self, c: Cell) -> (i64, i64) {
        let arm = self.row(c.y) as i64 - c.x - 1;
        let leg = self.col(c.x) as i64 - c.y - 1;
        (arm, leg)
    }

    /// Product of the weights of all boxes.
    pub fn weight(&self) -> QTMonomial {
        self.cells().iter().fold(QTMonomial::ONE, |a, c| a * c.weight())
    }

    pub fn total_content(&self) -> i64 {
        self.cells().iter().map(|c| c.content()).sum()
    }

    /// `min_λ = -Σ legs`.
    pub fn min_stat(&self) -> i64 {
        -self.cells().iter().map(|&c| self.arm_leg(c).1).sum::<i64>()
    }

    /// `max_λ = |λ| + Σ arms`.
    pub fn max_stat(&self) -> i64 {
        self.size() as i64 + self.cells().iter().map(|&c| self.arm_leg(c).0).sum::<i64>()
    }

    /// Cells that may be added, ordered by increasing content.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut v = vec![];
        for y in 0..=self.len() as i64 {
            let x = self.row(y) as i64;
            let c = Cell::new(x, y);
            let left_ok = x == 0 || self.contains(Cell::new(x - 1, y));
            let below_ok = y == 0 || self.contains(Cell::new(x, y - 1));
            if left_ok && below_ok {
                v.push(c);
            }
        }
        v.sort_by_key(|c| c.content());
        v
    }

    /// Cells that may be removed, ordered by increasing content.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = (0..self.len() as i64)
            .filter(|&y| self.row(y) > self.row(y + 1))
            .map(|y| Cell::new(self.row(y) as i64 - 1, y))
            .collect();
        v.sort_by_key(|c| c.content());
        v
    }

    /// Inner corners (addable positions) as cells.
    pub fn inner_corner_cells(&self) -> Vec<Cell> {
        self.addable_cells()
    }

    /// Outer corners: the points diagonally northeast of removable boxes.
    pub fn outer_corner_cells(&self) -> Vec<Cell> {
        self.removable_cells().into_iter().map(|c| Cell::new(c.x + 1, c.y + 1)).collect()
    }

    pub fn with_cell(&self, c: Cell) -> Option<Partition> {
        let mut p = self.0.clone();
        let y = c.y as usize;
        if y == p.len() {
            p.push(0);
        }
        if y > p.len() || p[y] as i64 != c.x {
            return None;
        }
        p[y] += 1;
        Partition::new(p).ok()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| ShapeError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// Inner and outer corner weights, in order of increasing content.
pub fn corners(l: &Partition) -> (Vec<QTMonomial>, Vec<QTMonomial>) {
    (
        l.inner_corner_cells().iter().map(|c| c.weight()).collect(),
        l.outer_corner_cells().iter().map(|c| c.weight()).collect(),
    )
}

pub fn arm_leg(l: &Partition, c: Cell) -> (i64, i64) {
    l.arm_leg(c)
}

/// Dominance order on partitions of the same size.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    if mu.size() != lambda.size() {
        return false;
    }
    let n = mu.len().max(lambda.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..n {
        a += mu.row(i as i64);
        b += lambda.row(i as i64);
        if a > b {
            return false;
        }
    }
    true
}

/// Containment of Young diagrams.
pub fn containment_leq(mu: &Partition, lambda: &Partition) -> bool {
    mu.len() <= lambda.len() && mu.parts().iter().zip(lambda.parts()).all(|(a, b)| a <= b)
}

fn partitions_rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        partitions_rec(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> impl Iterator<Item = Partition> {
    let mut out = vec![];
    partitions_rec(n, n, &mut vec![], &mut out);
    out.into_iter()
}

/// All partitions of size at most `n`, by size, then reverse lexicographic.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

/// A skew diagram `outer \ inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !containment_leq(&inner, &outer) {
            return Err(ShapeError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(l: Partition) -> Self {
        SkewShape { outer: l, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.outer.contains(c) && !self.inner.contains(c)
    }

    /// Boxes row by row from the bottom, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut v = vec![];
        for y in 0..self.outer.len() {
            for x in self.inner.row(y as i64)..self.outer.row(y as i64) {
                v.push(Cell::new(x as i64, y as i64));
            }
        }
        v
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Sum of contents of the boxes.
    pub fn total_content(&self) -> i64 {
        self.cells().iter().map(|c| c.content()).sum()
    }

    /// Number of unordered pairs of boxes with equal content.
    pub fn same_content_pairs(&self) -> i64 {
        let mut counts = std::collections::BTreeMap::new();
        for c in self.cells() {
            *counts.entry(c.content()).or_insert(0i64) += 1;
        }
        counts.values().map(|k| k * (k - 1) / 2).sum()
    }

    /// Nonempty row intervals `(y, x_start, x_end_exclusive)`, from the top row down.
    pub fn rows_top_down(&self) -> Vec<(i64, i64, i64)> {
        (0..self.outer.len() as i64)
            .rev()
            .map(|y| (y, self.inner.row(y) as i64, self.outer.row(y) as i64))
            .filter(|(_, a, b)| a < b)
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let t = s.trim();
        // Split at the '/' between "]" and "[".
        match t.find("]/") {
            Some(i) => {
                let outer: Partition = t[..=i].parse()?;
                let inner: Partition = t[i + 2..].parse()?;
                SkewShape::new(outer, inner)
            }
            None => Ok(SkewShape::straight(t.parse()?)),
        }
    }
}

/// Shape statistics; `min` and `max` refer to the outer partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeStats {
    pub o: i64,
    pub min: i64,
    pub max: i64,
    pub samediag: i64,
}

pub fn shape_stats(sh: &SkewShape) -> ShapeStats {
    ShapeStats {
        o: sh.total_content(),
        min: sh.outer.min_stat(),
        max: sh.outer.max_stat(),
        samediag: sh.same_content_pairs(),
    }
}

/// All `λ ⊇ μ` with `|λ/μ| = n`, in reverse lexicographic order of `λ`.
pub fn enumerate_skew_over(mu: &Partition, n: usize) -> impl Iterator<Item = SkewShape> {
    let mut level: BTreeSet<Partition> = BTreeSet::new();
    level.insert(mu.clone());
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for p in level.iter() {
            for c in p.addable_cells() {
                next.insert(p.with_cell(c).unwrap());
            }
        }
        level = next;
    }
    let mu = mu.clone();
    let mut v: Vec<_> = level.into_iter().collect();
    v.reverse();
    v.into_iter().map(move |l| SkewShape { outer: l, inner: mu.clone() })
}

/// All `μ ⊆ λ` with `|λ/μ| = n`.
pub fn enumerate_skew_under(lambda: &Partition, n: usize) -> Vec<SkewShape> {
    let mut level: BTreeSet<Partition> = BTreeSet::new();
    level.insert(lambda.clone());
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for p in level.iter() {
            for c in p.removable_cells() {
                let mut parts = p.parts().to_vec();
                parts[c.y as usize] -= 1;
                next.insert(Partition::new(parts).unwrap());
            }
        }
        level = next;
    }
    let mut v: Vec<_> = level.into_iter().collect();
    v.reverse();
    v.into_iter().map(|m| SkewShape { outer: lambda.clone(), inner: m }).collect()
}

/// Every skew shape `λ/μ` with `|λ| <= max_outer` and `|λ/μ| > 0`, sorted by
/// `(|λ|, reverse-lex λ, reverse-lex μ)`.
pub fn all_skew_shapes(max_outer: usize) -> Vec<SkewShape> {
    let mut out = vec![];
    for l in partitions_up_to(max_outer) {
        let mut inners: Vec<Partition> =
            partitions_up_to(l.size().saturating_sub(1)).into_iter().filter(|m| containment_leq(m, &l)).collect();
        inners.sort();
        inners.reverse();
        for m in inners {
            out.push(SkewShape { outer: l.clone(), inner: m });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_contents() {
        assert_eq!(Cell::new(0, 0).weight(), QTMonomial::ONE);
        assert_eq!(Cell::new(1, 1).weight(), QTMonomial::new(1, -1));
        assert_eq!(Cell::new(3, 0).weight(), QTMonomial::q(3));
        assert_eq!(Cell::new(1, 2).content(), -1);
        assert_eq!(Cell::new(2, 1).content(), Cell::new(3, 2).content());
    }

    #[test]
    fn arms_and_legs() {
        let l = Partition::of(&[4, 3, 1]);
        assert_eq!(l.arm_leg(Cell::new(0, 1)), (2, 1));
        assert_eq!(l.arm_leg(Cell::new(0, 0)), (3, 2));
        assert_eq!(Partition::of(&[1]).arm_leg(Cell::new(0, 0)), (0, 0));
    }

    #[test]
    fn corner_weights() {
        let m = |a, b| QTMonomial::new(a, b);
        let (i, o) = corners(&Partition::of(&[4, 3, 1]));
        assert_eq!(i, vec![m(0, -3), m(1, -2), m(3, -1), m(4, 0)]);
        assert_eq!(o, vec![m(1, -3), m(3, -2), m(4, -1)]);
        assert_eq!(corners(&Partition::empty()), (vec![QTMonomial::ONE], vec![]));
        assert_eq!(corners(&Partition::of(&[1])), (vec![m(0, -1), m(1, 0)], vec![m(1, -1)]));
    }

    #[test]
    fn orders() {
        let p = Partition::of;
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[2, 1])));
        assert!(!dominance_leq(&p(&[2, 1]), &p(&[1, 1, 1])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
        assert!(containment_leq(&Partition::empty(), &p(&[3])));
        assert!(containment_leq(&p(&[2, 1]), &p(&[2, 2])));
        assert!(!containment_leq(&p(&[3]), &p(&[2, 2])));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        let three: Vec<_> = enumerate_partitions(3).map(|p| p.to_string()).collect();
        assert_eq!(three, vec!["[3]", "[2,1]", "[1,1,1]"]);
        assert_eq!(enumerate_partitions(5).count(), 7);
        let s: Vec<_> = enumerate_skew_over(&Partition::empty(), 2).map(|s| s.to_string()).collect();
        assert_eq!(s, vec!["[2]/[]", "[1,1]/[]"]);
        let s: Vec<_> = enumerate_skew_over(&Partition::of(&[1]), 1).map(|s| s.to_string()).collect();
        assert_eq!(s, vec!["[2]/[1]", "[1,1]/[1]"]);
        assert_eq!(enumerate_skew_over(&Partition::of(&[2, 1]), 2).count(), 5);
    }

    #[test]
    fn stats() {
        let st = shape_stats(&SkewShape::straight(Partition::of(&[1])));
        assert_eq!((st.o, st.min, st.max), (0, 0, 1));
        let row: SkewShape = "[5,2]/[2,2]".parse().unwrap();
        assert_eq!(shape_stats(&row).samediag, 0);
        assert_eq!(shape_stats(&"[2,2]/[]".parse().unwrap()).samediag, 1);
    }

    #[test]
    fn parse_display() {
        let s: SkewShape = "[4,3,1]/[2,1]".parse().unwrap();
        assert_eq!(s.to_string(), "[4,3,1]/[2,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1]/[2]".parse::<SkewShape>().is_err());
    }
}
