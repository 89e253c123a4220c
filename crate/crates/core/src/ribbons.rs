//! Ribbons, vertical and horizontal strips, ribbon tableaux and the collapse graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;
use serde_json::{json, Value};

use crate::shapes::{Cell, Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RibbonError {
    #[error("cells do not form a ribbon")]
    NotARibbon,
    #[error("ribbons overlap")]
    Overlap,
    #[error("size mismatch: shape has {shape} boxes, expected {expected}")]
    SizeMismatch { shape: usize, expected: usize },
}

/// Connected box chain with no 2x2 square, stored northwest to southeast.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    cells: Vec<Cell>,
}

impl Ribbon {
    /// Accepts the cells in any order.
    pub fn new(mut cells: Vec<Cell>) -> Result<Self, RibbonError> {
        if cells.is_empty() {
            return Err(RibbonError::NotARibbon);
        }
        cells.sort_by_key(|c| c.content());
        for w in cells.windows(2) {
            let (a, b) = (w[0], w[1]);
            let right = b.x == a.x + 1 && b.y == a.y;
            let down = b.x == a.x && b.y == a.y - 1;
            if !(right || down) {
                return Err(RibbonError::NotARibbon);
            }
        }
        Ok(Ribbon { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// Rows spanned minus one.
    pub fn height(&self) -> i64 {
        self.first().y - self.last().y
    }

    /// Columns spanned minus one.
    pub fn width(&self) -> i64 {
        self.last().x - self.first().x
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search_by_key(&c.content(), |d| d.content()).map(|i| self.cells[i] == c).unwrap_or(false)
    }

    pub fn transpose(&self) -> Ribbon {
        let mut cells: Vec<Cell> = self.cells.iter().map(|c| c.transpose()).collect();
        cells.reverse();
        Ribbon { cells }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.cells.iter().map(|c| json!([c.x, c.y])).collect())
    }
}

pub fn ribbon_height(b: &Ribbon) -> i64 {
    b.height()
}

/// Common edges of two disjoint ribbons as `(doubled diagonal position, is_vertical)`,
/// sorted northwest to southeast.
fn common_edges(b1: &Ribbon, b2: &Ribbon) -> Vec<(i64, bool)> {
    let mut v = vec![];
    for &c in b1.cells() {
        let key = 2 * c.content();
        if b2.contains(Cell::new(c.x + 1, c.y)) {
            v.push((key + 1, true));
        }
        if b2.contains(Cell::new(c.x - 1, c.y)) {
            v.push((key - 1, true));
        }
        if b2.contains(Cell::new(c.x, c.y + 1)) {
            v.push((key - 1, false));
        }
        if b2.contains(Cell::new(c.x, c.y - 1)) {
            v.push((key + 1, false));
        }
    }
    v.sort();
    v
}

fn disjoint(b1: &Ribbon, b2: &Ribbon) -> bool {
    b1.cells().iter().all(|&c| !b2.contains(c))
}

/// True iff the first common edge, scanning northwest to southeast, is vertical.
pub fn next_to(b1: &Ribbon, b2: &Ribbon) -> Result<bool, RibbonError> {
    if !disjoint(b1, b2) {
        return Err(RibbonError::Overlap);
    }
    Ok(common_edges(b1, b2).first().map(|e| e.1).unwrap_or(false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonStrip {
    pub ribbons: Vec<Ribbon>,
    pub orientation: Orientation,
}

impl RibbonStrip {
    pub fn empty(orientation: Orientation) -> Self {
        RibbonStrip { ribbons: vec![], orientation }
    }

    pub fn height(&self) -> i64 {
        self.ribbons.iter().map(Ribbon::height).sum()
    }

    pub fn width(&self) -> i64 {
        self.ribbons.iter().map(Ribbon::width).sum()
    }

    pub fn len(&self) -> usize {
        self.ribbons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ribbons.is_empty()
    }

    /// Disjointness plus the pairwise next-to condition for the orientation.
    pub fn is_valid(&self) -> bool {
        let rs: Vec<Ribbon> = match self.orientation {
            Orientation::Vertical => self.ribbons.clone(),
            Orientation::Horizontal => self.ribbons.iter().map(Ribbon::transpose).collect(),
        };
        for i in 0..rs.len() {
            for j in i + 1..rs.len() {
                match next_to(&rs[i], &rs[j]) {
                    Ok(false) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.ribbons.iter().map(Ribbon::to_json).collect())
    }
}

/// Mutable row-interval view of a skew shape used by the peeling algorithms.
#[derive(Clone, Debug)]
struct Rows {
    inner: Vec<usize>,
    outer: Vec<usize>,
}

impl Rows {
    fn from_shape(sh: &SkewShape) -> Self {
        let h = sh.outer.len();
        Rows { inner: (0..h).map(|y| sh.inner.row(y as i64)).collect(), outer: sh.outer.parts().to_vec() }
    }

    fn contains(&self, c: Cell) -> bool {
        if c.y < 0 || c.x < 0 || c.y as usize >= self.outer.len() {
            return false;
        }
        let y = c.y as usize;
        (c.x as usize) >= self.inner[y] && (c.x as usize) < self.outer[y]
    }

    fn is_empty(&self) -> bool {
        self.inner.iter().zip(&self.outer).all(|(a, b)| a >= b)
    }

    fn top_left(&self) -> Option<Cell> {
        (0..self.outer.len())
            .rev()
            .find(|&y| self.inner[y] < self.outer[y])
            .map(|y| Cell::new(self.inner[y] as i64, y as i64))
    }

    /// Removes the `n` rim cells starting at the northwest-most box, if they form
    /// a ribbon whose removal leaves a skew shape over the same inner partition.
    fn peel(&mut self, n: usize) -> Option<Ribbon> {
        let mut c = self.top_left()?;
        let mut cells = vec![c];
        while cells.len() < n {
            let r = Cell::new(c.x + 1, c.y);
            let d = Cell::new(c.x, c.y - 1);
            c = if self.contains(r) {
                r
            } else if self.contains(d) {
                d
            } else {
                return None;
            };
            cells.push(c);
        }
        if self.contains(Cell::new(c.x + 1, c.y)) {
            return None;
        }
        let mut outer = self.outer.clone();
        for cell in &cells {
            let y = cell.y as usize;
            outer[y] = outer[y].min(cell.x as usize);
        }
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        self.outer = outer;
        Some(Ribbon { cells })
    }
}

/// The unique vertical `k`-strip of `n`-ribbons covering `sh`, found by peeling outer ribbons.
pub fn cover_vertical_strip(sh: &SkewShape, n: usize, k: usize) -> Result<Option<RibbonStrip>, RibbonError> {
    if sh.size() != n * k {
        return Err(RibbonError::SizeMismatch { shape: sh.size(), expected: n * k });
    }
    if n == 0 {
        return Ok(Some(RibbonStrip::empty(Orientation::Vertical)));
    }
    let mut rows = Rows::from_shape(sh);
    let mut ribbons: Vec<Ribbon> = Vec::with_capacity(k);
    while !rows.is_empty() {
        let Some(b) = rows.peel(n) else { return Ok(None) };
        if ribbons.iter().any(|r| next_to(r, &b) != Ok(false)) {
            return Ok(None);
        }
        ribbons.push(b);
    }
    ribbons.sort();
    Ok(Some(RibbonStrip { ribbons, orientation: Orientation::Vertical }))
}

/// Horizontal analogue, through transposition.
pub fn cover_horizontal_strip(sh: &SkewShape, n: usize, k: usize) -> Result<Option<RibbonStrip>, RibbonError> {
    Ok(cover_vertical_strip(&sh.transpose(), n, k)?.map(|s| {
        let mut ribbons: Vec<Ribbon> = s.ribbons.iter().map(Ribbon::transpose).collect();
        ribbons.sort();
        RibbonStrip { ribbons, orientation: Orientation::Horizontal }
    }))
}

/// The row-sliding game: true iff all boxes are removed without a strip exceeding `n`.
pub fn bubble_game(sh: &SkewShape, n: usize) -> bool {
    let mut rows: Vec<(i64, i64)> =
        (0..sh.outer.len() as i64).map(|y| (sh.inner.row(y) as i64, sh.outer.row(y) as i64)).collect();
    let n = n as i64;
    loop {
        let Some(mut y) = (0..rows.len()).rev().find(|&y| rows[y].0 < rows[y].1) else {
            return true;
        };
        let mut strip = rows[y];
        rows[y] = (0, 0);
        loop {
            let len = strip.1 - strip.0;
            if len > n {
                return false;
            }
            if len == n {
                break;
            }
            if y == 0 {
                return false;
            }
            y -= 1;
            let slid = (strip.0 - 1, strip.1 - 1);
            let below = rows[y];
            if below.0 >= below.1 || slid.1 < below.0 || below.1 < slid.0 {
                return false;
            }
            let union = (slid.0.min(below.0), slid.1.max(below.1));
            let inter = (slid.0.max(below.0), slid.1.min(below.1));
            rows[y] = if inter.0 < inter.1 { inter } else { (0, 0) };
            strip = union;
        }
    }
}

/// Layers of vertical strips, stored bottom-up: `layers[0]` sits directly on `base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonTableau {
    pub layers: Vec<RibbonStrip>,
    pub base: Partition,
    pub shape: SkewShape,
}

impl RibbonTableau {
    pub fn height(&self) -> i64 {
        self.layers.iter().map(RibbonStrip::height).sum()
    }

    pub fn ribbons(&self) -> impl Iterator<Item = &Ribbon> {
        self.layers.iter().flat_map(|l| l.ribbons.iter())
    }

    /// Strip sizes `(ν_1, ..., ν_t)`, top layer first.
    pub fn weight(&self) -> Vec<usize> {
        self.layers.iter().rev().map(RibbonStrip::len).collect()
    }

    /// The underlying tiling, sorted.
    pub fn tiling(&self) -> Tiling {
        let mut v: Vec<Ribbon> = self.ribbons().cloned().collect();
        v.sort();
        v
    }

    /// Layers listed top-down, each a list of ribbons of `[x,y]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(self.layers.iter().rev().map(RibbonStrip::to_json).collect())
    }
}

/// A sorted list of ribbons covering a shape.
pub type Tiling = Vec<Ribbon>;

/// Partitions `κ` with `lo ⊆ κ ⊆ hi` and `|κ| - |lo| = extra`.
fn between(lo: &Partition, hi: &Partition, extra: usize) -> Vec<Partition> {
    fn rec(
        y: usize,
        lo: &Partition,
        hi: &Partition,
        left: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if y == hi.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let a = lo.row(y as i64);
        let b = hi.row(y as i64).min(cap);
        if a > b {
            return;
        }
        let rest_max: usize = (y + 1..hi.len()).map(|z| hi.row(z as i64) - lo.row(z as i64)).sum();
        for v in (a..=b).rev() {
            let used = v - a;
            if used > left || left - used > rest_max {
                continue;
            }
            cur.push(v);
            rec(y + 1, lo, hi, left - used, v, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(0, lo, hi, extra, usize::MAX, &mut vec![], &mut out);
    out
}

/// All ribbon tableaux of shape `sh` and weight `ν` (zero parts allowed); the
/// `ν_t` strip is placed first, directly on the inner partition.
pub fn enumerate_ribbon_tableaux(sh: &SkewShape, n: usize, nu: &[usize]) -> Result<Vec<RibbonTableau>, RibbonError> {
    let total: usize = nu.iter().sum();
    if sh.size() != n * total {
        return Err(RibbonError::SizeMismatch { shape: sh.size(), expected: n * total });
    }
    let bottom_up: Vec<usize> = nu.iter().rev().copied().collect();
    let mut out = vec![];
    let mut layers = vec![];
    tableaux_rec(sh, n, &bottom_up, &sh.inner.clone(), &mut layers, &mut out);
    Ok(out)
}

fn tableaux_rec(
    sh: &SkewShape,
    n: usize,
    sizes: &[usize],
    cur: &Partition,
    layers: &mut Vec<RibbonStrip>,
    out: &mut Vec<RibbonTableau>,
) {
    let Some((&k, rest)) = sizes.split_first() else {
        if cur == &sh.outer {
            out.push(RibbonTableau { layers: layers.clone(), base: sh.inner.clone(), shape: sh.clone() });
        }
        return;
    };
    for kappa in between(cur, &sh.outer, n * k) {
        let step = SkewShape { outer: kappa.clone(), inner: cur.clone() };
        if let Ok(Some(strip)) = cover_vertical_strip(&step, n, k) {
            layers.push(strip);
            tableaux_rec(sh, n, rest, &kappa, layers, out);
            layers.pop();
        }
    }
}

/// Every tiling of `sh` by `n`-ribbons, by exhaustive search.
pub fn all_tilings(sh: &SkewShape, n: usize) -> Vec<Tiling> {
    let mut free: BTreeSet<(i64, i64, i64)> = sh.cells().iter().map(|c| (c.content(), -c.y, c.x)).collect();
    let mut out = vec![];
    if n == 0 || !sh.size().is_multiple_of(n) {
        return out;
    }
    tile_rec(&mut free, n, &mut vec![], &mut out);
    for t in out.iter_mut() {
        t.sort();
    }
    out.sort();
    out
}

fn tile_rec(free: &mut BTreeSet<(i64, i64, i64)>, n: usize, cur: &mut Vec<Ribbon>, out: &mut Vec<Tiling>) {
    let Some(&(_, my, x)) = free.iter().next() else {
        out.push(cur.clone());
        return;
    };
    // The minimal-content free cell must start its ribbon.
    let start = Cell::new(x, -my);
    for pattern in 0u32..(1 << (n - 1)) {
        let mut cells = vec![start];
        let mut c = start;
        let mut ok = true;
        for i in 0..n - 1 {
            c = if pattern >> i & 1 == 1 { Cell::new(c.x, c.y - 1) } else { Cell::new(c.x + 1, c.y) };
            if !free.contains(&(c.content(), -c.y, c.x)) {
                ok = false;
                break;
            }
            cells.push(c);
        }
        if !ok {
            continue;
        }
        for c in &cells {
            free.remove(&(c.content(), -c.y, c.x));
        }
        cur.push(Ribbon { cells: cells.clone() });
        tile_rec(free, n, cur, out);
        cur.pop();
        for c in &cells {
            free.insert((c.content(), -c.y, c.x));
        }
    }
}

/// Tilings whose ribbons are pairwise not next to each other.
pub fn all_vertical_strip_tilings(sh: &SkewShape, n: usize) -> Vec<Tiling> {
    all_tilings(sh, n)
        .into_iter()
        .filter(|t| RibbonStrip { ribbons: t.clone(), orientation: Orientation::Vertical }.is_valid())
        .collect()
}

pub fn tiling_height(t: &[Ribbon]) -> i64 {
    t.iter().map(Ribbon::height).sum()
}

/// Undirected collapse graph on distinct tilings.
#[derive(Clone, Debug)]
pub struct CollapseGraph {
    pub vertices: Vec<Tiling>,
    pub edges: Vec<(usize, usize)>,
}

impl CollapseGraph {
    pub fn component_count(&self) -> usize {
        self.components_without(&[])
    }

    /// Component count after deleting the listed edges.
    pub fn components_without(&self, removed: &[(usize, usize)]) -> usize {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        let mut count = self.vertices.len();
        for e in &self.edges {
            if removed.contains(e) {
                continue;
            }
            if uf.union(e.0, e.1) {
                count -= 1;
            }
        }
        count
    }

    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.0, e.1);
        }
        uf.into_labeling()
    }

    pub fn index_of(&self, t: &[Ribbon]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(t)).ok()
    }
}

/// Edges join tilings that differ in exactly two ribbons covering the same boxes,
/// with total heights differing by exactly 2.
pub fn collapse_edges(tableaux: &[RibbonTableau]) -> CollapseGraph {
    let set: BTreeSet<Tiling> = tableaux.iter().map(RibbonTableau::tiling).collect();
    collapse_graph_of_tilings(set.into_iter().collect())
}

/// A tiling with one pair of ribbons removed, and the removed cells.
type PairComplement = (Vec<Ribbon>, Vec<Cell>);

pub fn collapse_graph_of_tilings(mut vertices: Vec<Tiling>) -> CollapseGraph {
    vertices.sort();
    vertices.dedup();
    let mut groups: HashMap<PairComplement, Vec<(usize, i64)>> = HashMap::new();
    for (vi, t) in vertices.iter().enumerate() {
        let ht = tiling_height(t);
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let mut rest = t.clone();
                rest.remove(j);
                rest.remove(i);
                let mut union: Vec<Cell> = t[i].cells().iter().chain(t[j].cells()).copied().collect();
                union.sort();
                groups.entry((rest, union)).or_default().push((vi, ht));
            }
        }
    }
    let mut edges = BTreeSet::new();
    for members in groups.values() {
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let (u, hu) = members[a];
                let (v, hv) = members[b];
                if (hu - hv).abs() == 2 {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
    }
    CollapseGraph { vertices, edges: edges.into_iter().collect() }
}

/// Ribbons of `free` containing `s`, in the order the outer chain tries them:
/// ribbons flush with the outer boundary first (up neighbours, and right
/// neighbours before the last box, lie in the ribbon or outside `free`), then
/// by how far northwest of `s` they reach.
fn chain_candidates(free: &BTreeSet<Cell>, s: Cell, n: usize) -> Vec<Vec<Cell>> {
    let mut out: Vec<(bool, usize, Vec<Cell>)> = vec![];
    for pos in 0..n {
        for pattern in 0u32..(1 << (n - 1)) {
            // Steps are read northwest to southeast; `s` sits at index `pos`.
            let mut start = s;
            for i in (0..pos).rev() {
                start = if pattern >> i & 1 == 1 {
                    Cell::new(start.x, start.y + 1)
                } else {
                    Cell::new(start.x - 1, start.y)
                };
            }
            let mut cells = vec![start];
            let mut c = start;
            for i in 0..n - 1 {
                c = if pattern >> i & 1 == 1 { Cell::new(c.x, c.y - 1) } else { Cell::new(c.x + 1, c.y) };
                cells.push(c);
            }
            if !cells.iter().all(|c| free.contains(c)) || out.iter().any(|o| o.2 == cells) {
                continue;
            }
            let outside = |d: Cell| cells.contains(&d) || !free.contains(&d);
            let hugs = cells.iter().all(|c| outside(Cell::new(c.x, c.y + 1)))
                && cells[..n - 1].iter().all(|c| outside(Cell::new(c.x + 1, c.y)));
            out.push((!hugs, n - pos, cells));
        }
    }
    out.sort();
    out.into_iter().map(|o| o.2).collect()
}

/// Builds the tiling of outer chains: each chain starts at the northwest-most
/// box and follows the outer boundary, every ribbon containing the boundary
/// successor of the previous one, until it reaches the southeast-most box or the
/// end of its component; the chain is then removed and the construction
/// repeated. Candidate ribbons are tried in the order of `chain_candidates`,
/// backtracking on dead ends. Layers hold one ribbon each.
pub fn minimal_tableau(sh: &SkewShape, n: usize) -> Option<RibbonTableau> {
    if n == 0 || !sh.size().is_multiple_of(n) {
        return None;
    }
    let mut free: BTreeSet<Cell> = sh.cells().into_iter().collect();
    let mut peeled = vec![];
    if !chain_rec(&mut free, n, None, &mut peeled) {
        return None;
    }
    tableau_from_tiling(sh, peeled)
}

/// `cont` is the box the current chain must cover next together with the
/// southeast-most box ending the chain.
fn chain_rec(free: &mut BTreeSet<Cell>, n: usize, cont: Option<(Cell, Cell)>, out: &mut Vec<Ribbon>) -> bool {
    let (s, se) = match cont {
        Some(c) => c,
        None => {
            let Some(&nw) = free.iter().min_by_key(|c| (c.content(), -c.y)) else { return true };
            (nw, *free.iter().max_by_key(|c| (c.content(), -c.y)).unwrap())
        }
    };
    for cells in chain_candidates(free, s, n) {
        for c in &cells {
            free.remove(c);
        }
        let end = *cells.last().unwrap();
        let next = if cells.contains(&se) {
            None
        } else {
            let r = Cell::new(end.x + 1, end.y);
            let d = Cell::new(end.x, end.y - 1);
            if free.contains(&r) {
                Some((r, se))
            } else if free.contains(&d) {
                Some((d, se))
            } else {
                None
            }
        };
        out.push(Ribbon { cells: cells.clone() });
        if chain_rec(free, n, next, out) {
            return true;
        }
        out.pop();
        for c in cells {
            free.insert(c);
        }
    }
    false
}

/// Orders a tiling into a tableau with one ribbon per layer, innermost first.
pub fn tableau_from_tiling(sh: &SkewShape, tiling: Vec<Ribbon>) -> Option<RibbonTableau> {
    let mut cur = sh.inner.clone();
    let mut left = tiling;
    let mut layers = vec![];
    while !left.is_empty() {
        let i = left.iter().position(|r| {
            let mut parts = cur.parts().to_vec();
            for c in r.cells() {
                let y = c.y as usize;
                if parts.len() <= y {
                    parts.resize(y + 1, 0);
                }
            }
            let mut ok = true;
            for c in r.cells() {
                ok &= !cur.contains(*c);
            }
            let mut rows: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
            for c in r.cells() {
                rows.entry(c.y as usize).or_default().push(c.x);
            }
            for (y, xs) in rows {
                let lo = *xs.iter().min().unwrap();
                if lo != parts[y] as i64 {
                    ok = false;
                }
                parts[y] += xs.len();
            }
            ok && Partition::new(parts).is_ok()
        })?;
        let r = left.remove(i);
        let mut parts = cur.parts().to_vec();
        for c in r.cells() {
            let y = c.y as usize;
            if parts.len() <= y {
                parts.resize(y + 1, 0);
            }
            parts[y] += 1;
        }
        cur = Partition::new(parts).ok()?;
        layers.push(RibbonStrip { ribbons: vec![r], orientation: Orientation::Vertical });
    }
    (cur == sh.outer).then(|| RibbonTableau { layers, base: sh.inner.clone(), shape: sh.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn rib(cells: &[(i64, i64)]) -> Ribbon {
        Ribbon::new(cells.iter().map(|&(x, y)| Cell::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn heights() {
        assert_eq!(rib(&[(0, 0), (1, 0), (2, 0)]).height(), 0);
        assert_eq!(rib(&[(0, 0), (0, 1), (0, 2)]).height(), 2);
        assert_eq!(rib(&[(0, 1), (0, 0), (1, 0)]).height(), 1);
        assert!(Ribbon::new(vec![Cell::new(0, 0), Cell::new(1, 1)]).is_err());
    }

    #[test]
    fn next_to_cases() {
        let b1 = rib(&[(0, 4), (1, 4), (1, 3), (1, 2), (1, 1), (2, 1), (3, 1)]);
        let b2 = rib(&[(2, 2), (3, 2), (4, 2), (4, 1), (4, 0), (5, 0), (6, 0)]);
        assert_eq!(next_to(&b1, &b2), Ok(true));
        assert_eq!(next_to(&b2, &b1), Ok(true));
        let far = rib(&[(5, 5), (6, 5)]);
        assert_eq!(next_to(&b1, &far), Ok(false));
        let low = rib(&[(0, 0), (1, 0)]);
        let high = rib(&[(0, 1), (1, 1)]);
        assert_eq!(next_to(&low, &high), Ok(false));
        assert_eq!(next_to(&low, &low), Err(RibbonError::Overlap));
    }

    #[test]
    fn covers() {
        let s = cover_vertical_strip(&sk("[2,2]/[]"), 2, 2).unwrap().unwrap();
        assert_eq!(s.ribbons, vec![rib(&[(0, 0), (1, 0)]), rib(&[(0, 1), (1, 1)])]);
        assert_eq!(s.height(), 0);
        let s = cover_vertical_strip(&sk("[1,1]/[]"), 2, 1).unwrap().unwrap();
        assert_eq!(s.height(), 1);
        let s = cover_vertical_strip(&sk("[2,1]/[]"), 3, 1).unwrap().unwrap();
        assert_eq!(s.height(), 1);
        assert!(cover_vertical_strip(&sk("[2]/[]"), 1, 2).unwrap().is_none());
        assert!(cover_vertical_strip(&sk("[2]/[]"), 1, 1).is_err());
        let h = cover_horizontal_strip(&sk("[2]/[]"), 1, 2).unwrap().unwrap();
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn game() {
        assert!(bubble_game(&sk("[1,1,1]/[]"), 3));
        assert!(!bubble_game(&sk("[4]/[]"), 3));
        assert!(bubble_game(&sk("[2,2]/[]"), 2));
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(enumerate_ribbon_tableaux(&sk("[1,1]/[]"), 2, &[1]).unwrap().len(), 1);
        assert_eq!(enumerate_ribbon_tableaux(&sk("[2,2]/[]"), 2, &[2]).unwrap().len(), 1);
        // Bottom domino horizontal then top horizontal, or two vertical dominoes.
        assert_eq!(enumerate_ribbon_tableaux(&sk("[2,2]/[]"), 2, &[1, 1]).unwrap().len(), 2);
        let t = &enumerate_ribbon_tableaux(&sk("[2,2]/[]"), 2, &[2, 0]).unwrap()[0];
        assert_eq!(t.weight(), vec![2, 0]);
        assert_eq!(t.to_json().to_string(), "[[[[0,0],[1,0]],[[0,1],[1,1]]],[]]");
    }

    #[test]
    fn minimal_and_collapse() {
        let m = minimal_tableau(&sk("[2,2]/[]"), 2).unwrap();
        assert_eq!(m.tiling(), vec![rib(&[(0, 0), (1, 0)]), rib(&[(0, 1), (1, 1)])]);
        assert_eq!(minimal_tableau(&sk("[1,1,1]/[]"), 3).unwrap().height(), 2);
        assert_eq!(minimal_tableau(&sk("[3]/[]"), 3).unwrap().height(), 0);
        let g = collapse_graph_of_tilings(all_tilings(&sk("[2,2]/[]"), 2));
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges, vec![(0, 1)]);
        let g = collapse_graph_of_tilings(all_tilings(&sk("[3]/[]"), 3));
        assert_eq!((g.vertices.len(), g.edges.len()), (1, 0));
    }
}
