//! Walled Brauer diagrams, their products, generators, layer idempotents,
//! ideals and partial diagrams.
//!
//! Vertices are numbered `0..n` on the top row and `n..2n` on the bottom
//! row, `n = r + t`, with the wall between positions `r-1` and `r`. In text
//! they appear 1-based, bottom vertices primed.

use std::cmp::Ordering;
use std::fmt;

use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::symgrp::Permutation;

const MAX_POINTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalledDiagram {
    r: usize,
    t: usize,
    mate: Vec<u8>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

impl WalledDiagram {
    /// Builds a diagram from its partner array and checks the wall rules.
    pub fn from_mate(r: usize, t: usize, mate: Vec<u8>) -> Result<Self> {
        let n = r + t;
        if mate.len() != 2 * n {
            return Err(Error::IndexOutOfRange(format!("{} vertices for a ({r},{t}) diagram", mate.len())));
        }
        for (v, &m) in mate.iter().enumerate() {
            let m = m as usize;
            if m >= 2 * n || m == v || mate[m] as usize != v {
                return Err(Error::IndexOutOfRange(format!("vertex {v} is not matched consistently")));
            }
            let left = |x: usize| x % n < r;
            let same_row = (v < n) == (m < n);
            if same_row && left(v) == left(m) {
                return Err(Error::IndexAcrossWall(v % n + 1));
            }
            if !same_row && left(v) != left(m) {
                return Err(Error::IndexAcrossWall(v % n + 1));
            }
        }
        Ok(WalledDiagram { r, t, mate })
    }

    pub fn identity(r: usize, t: usize) -> Self {
        let n = r + t;
        let mate = (0..2 * n).map(|v| ((v + n) % (2 * n)) as u8).collect();
        WalledDiagram { r, t, mate }
    }

    /// Top `i` joined to bottom `π(i)`; `π` must preserve the wall.
    pub fn from_permutation(r: usize, t: usize, pi: &Permutation) -> Result<Self> {
        let n = r + t;
        if pi.degree() != n {
            return Err(Error::DegreeMismatch(pi.degree(), n));
        }
        let mut mate = vec![0u8; 2 * n];
        for i in 0..n {
            let j = pi.apply(i);
            mate[i] = (n + j) as u8;
            mate[n + j] = i as u8;
        }
        Self::from_mate(r, t, mate)
    }

    /// Assembles a diagram from top arcs, bottom arcs and the vertical map
    /// (all 0-based within a row).
    pub fn from_parts(
        r: usize,
        t: usize,
        top: &[(usize, usize)],
        bottom: &[(usize, usize)],
        verticals: &[(usize, usize)],
    ) -> Result<Self> {
        let n = r + t;
        let mut mate = vec![u8::MAX; 2 * n];
        let link = |a: usize, b: usize, mate: &mut Vec<u8>| -> Result<()> {
            if a >= 2 * n || b >= 2 * n || mate[a] != u8::MAX || mate[b] != u8::MAX {
                return Err(Error::IndexOutOfRange(format!("edge {a}-{b} reuses or leaves the vertex set")));
            }
            mate[a] = b as u8;
            mate[b] = a as u8;
            Ok(())
        };
        for &(a, b) in top {
            link(a, b, &mut mate)?;
        }
        for &(a, b) in bottom {
            link(n + a, n + b, &mut mate)?;
        }
        for &(a, b) in verticals {
            link(a, n + b, &mut mate)?;
        }
        if mate.contains(&u8::MAX) {
            return Err(Error::IndexOutOfRange("some vertex has no edge".into()));
        }
        Self::from_mate(r, t, mate)
    }

    pub fn r(&self) -> usize {
        self.r
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn n(&self) -> usize {
        self.r + self.t
    }
    pub fn mate(&self) -> &[u8] {
        &self.mate
    }

    /// Partner of a vertex.
    pub fn partner(&self, v: usize) -> usize {
        self.mate[v] as usize
    }

    /// Number of horizontal edges in the top row (equal to the bottom row).
    pub fn arcs(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&v| (self.mate[v] as usize) < n && v < self.mate[v] as usize).count()
    }

    pub fn top_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).filter_map(|v| {
            let m = self.mate[v] as usize;
            (m < n && v < m).then_some((v, m))
        })
        .collect()
    }

    pub fn bottom_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (n..2 * n)
            .filter_map(|v| {
                let m = self.mate[v] as usize;
                (m >= n && v < m).then(|| (v - n, m - n))
            })
            .collect()
    }

    /// Edges as sorted vertex pairs, ordered by smaller endpoint.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        (0..self.mate.len())
            .filter_map(|v| {
                let m = self.mate[v] as usize;
                (v < m).then_some((v as u8, m as u8))
            })
            .collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.arcs() == 0
    }

    /// The permutation `i ↦ j` of a diagram without arcs.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation() {
            return None;
        }
        let n = self.n();
        Permutation::from_images((0..n).map(|i| self.mate[i] as usize - n).collect()).ok()
    }

    pub fn check_shape(&self, other: &WalledDiagram) -> Result<()> {
        if (self.r, self.t) != (other.r, other.t) {
            return Err(Error::ShapeMismatch(self.r, self.t, other.r, other.t));
        }
        Ok(())
    }

    /// Concatenation with `self` on top. Returns the number of closed loops
    /// and the reduced diagram.
    pub fn multiply(&self, other: &WalledDiagram) -> Result<(usize, WalledDiagram)> {
        self.check_shape(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &WalledDiagram) -> (usize, WalledDiagram) {
        let n = self.n();
        // rows: top 0..n, middle n..2n, bottom 2n..3n
        let mut uf = UnionFind::new(3 * n);
        for v in 0..2 * n {
            let m = self.mate[v] as usize;
            if v < m {
                uf.union(v, m);
            }
            let m2 = other.mate[v] as usize;
            if v < m2 {
                uf.union(v + n, m2 + n);
            }
        }
        let mut first: Vec<usize> = vec![usize::MAX; 3 * n];
        let mut mate = vec![0u8; 2 * n];
        let outer = |x: usize| if x < n { x } else { x - n };
        for x in (0..n).chain(2 * n..3 * n) {
            let root = uf.find(x);
            if first[root] == usize::MAX {
                first[root] = x;
            } else {
                let y = first[root];
                mate[outer(x)] = outer(y) as u8;
                mate[outer(y)] = outer(x) as u8;
            }
        }
        let mut loops = 0;
        for x in n..2 * n {
            let root = uf.find(x);
            if first[root] == usize::MAX {
                first[root] = usize::MAX - 1;
                loops += 1;
            }
        }
        (loops, WalledDiagram { r: self.r, t: self.t, mate })
    }

    /// Exchange of the two rows.
    pub fn flip(&self) -> WalledDiagram {
        let n = self.n();
        let mate = (0..2 * n).map(|v| ((self.mate[(v + n) % (2 * n)] as usize + n) % (2 * n)) as u8).collect();
        WalledDiagram { r: self.r, t: self.t, mate }
    }

    /// Writes the diagram as `π₁ · E_l · π₂` with `E_l` the nested-arc
    /// diagram and `π₁, π₂` wall-preserving permutations.
    pub fn factor(&self) -> (Permutation, usize, Permutation) {
        let (r, t, n) = (self.r, self.t, self.n());
        let top = self.top_arcs();
        let bottom = self.bottom_arcs();
        let l = top.len();
        let mut p1 = vec![usize::MAX; n];
        let mut p2 = vec![usize::MAX; n];
        for (j, &(a, b)) in top.iter().enumerate() {
            p1[a] = r - l + j;
            p1[b] = r + l - 1 - j;
        }
        for (j, &(c, d)) in bottom.iter().enumerate() {
            p2[r - l + j] = c;
            p2[r + l - 1 - j] = d;
        }
        let mut free_left = 0..r - l;
        let mut free_right = r + l..n;
        for x in 0..n {
            let m = self.mate[x] as usize;
            if m >= n {
                let slot = if x < r { free_left.next().unwrap() } else { free_right.next().unwrap() };
                p1[x] = slot;
                p2[slot] = m - n;
            }
        }
        let _ = t;
        (Permutation::from_images(p1).unwrap(), l, Permutation::from_images(p2).unwrap())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s = text;
        let body = s.trim_start();
        let mut off = s.len() - body.len();
        let rest = body.strip_prefix("wbd").ok_or_else(|| Error::parse(off, "expected `wbd`"))?;
        off += 3;
        let colon = rest.find(':').ok_or_else(|| Error::parse(off, "expected `:` after the shape"))?;
        let shape = &rest[..colon];
        let mut dims = shape.split(',');
        let shape_off = off + shape.len() - shape.trim_start().len();
        let parse_dim = |tok: Option<&str>, o: usize| -> Result<usize> {
            let tok = tok.ok_or_else(|| Error::parse(o, "expected `r,t`"))?;
            tok.trim().parse::<usize>().map_err(|_| Error::parse(o, format!("bad shape token `{}`", tok.trim())))
        };
        let r = parse_dim(dims.next(), shape_off)?;
        let t = parse_dim(dims.next(), shape_off)?;
        if dims.next().is_some() {
            return Err(Error::parse(shape_off, "shape takes exactly two numbers"));
        }
        let n = r + t;
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        let mut verts = Vec::new();
        let list = &rest[colon + 1..];
        let mut pos = off + colon + 1;
        for raw in list.split(',') {
            let tok_off = pos + raw.len() - raw.trim_start().len();
            let tok = raw.trim();
            pos += raw.len() + 1;
            let bad = || Error::parse(tok_off, format!("malformed edge `{tok}`"));
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            let vertex = |x: &str| -> Result<(usize, bool)> {
                let x = x.trim();
                let (num, bottom_row) = match x.strip_suffix('\'') {
                    Some(v) => (v, true),
                    None => (x, false),
                };
                let k = num.parse::<usize>().map_err(|_| bad())?;
                if k == 0 || k > n {
                    return Err(Error::parse(tok_off, format!("vertex `{x}` outside 1..{n}")));
                }
                Ok((k - 1, bottom_row))
            };
            let ((a, ab), (b, bb)) = (vertex(a)?, vertex(b)?);
            match (ab, bb) {
                (false, false) => top.push((a, b)),
                (true, true) => bottom.push((a, b)),
                (false, true) => verts.push((a, b)),
                (true, false) => verts.push((b, a)),
            }
        }
        Self::from_parts(r, t, &top, &bottom, &verts).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::parse(off + colon + 1, other.to_string()),
        })
    }
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let name = |v: u8| {
            let v = v as usize;
            if v < n {
                format!("{}", v + 1)
            } else {
                format!("{}'", v - n + 1)
            }
        };
        let edges: Vec<String> = self.edges().iter().map(|&(a, b)| format!("{}-{}", name(a), name(b))).collect();
        write!(f, "wbd {},{} : {}", self.r, self.t, edges.join(","))
    }
}

impl Ord for WalledDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r, self.t, self.arcs(), self.edges()).cmp(&(other.r, other.t, other.arcs(), other.edges()))
    }
}

impl PartialOrd for WalledDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `s_i`, 1-based, swapping `i` and `i+1` in both rows.
    S(usize),
    /// `e_{k,l}`, 1-based, `k ≤ r < l`.
    E(usize, usize),
}

pub fn generator(kind: Generator, r: usize, t: usize) -> Result<WalledDiagram> {
    let n = r + t;
    match kind {
        Generator::S(i) => {
            if i == r {
                return Err(Error::IndexAcrossWall(i));
            }
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange(format!("s_{i} needs 1 <= i < {n}")));
            }
            WalledDiagram::from_permutation(r, t, &Permutation::transposition(n, i, i + 1))
        }
        Generator::E(k, l) => {
            if !(1 <= k && k <= r && r < l && l <= n) {
                return Err(Error::IndexOutOfRange(format!("e_{{{k},{l}}} needs 1 <= k <= {r} < l <= {n}")));
            }
            let verts: Vec<(usize, usize)> = (0..n).filter(|&x| x != k - 1 && x != l - 1).map(|x| (x, x)).collect();
            WalledDiagram::from_parts(r, t, &[(k - 1, l - 1)], &[(k - 1, l - 1)], &verts)
        }
    }
}

/// The generating set used for module actions: every `s_i` with `i ≠ r`
/// and `e_{r,r+1}`, with their names.
pub fn standard_generators(r: usize, t: usize) -> Vec<(String, WalledDiagram)> {
    let n = r + t;
    let mut out: Vec<(String, WalledDiagram)> = (1..n)
        .filter(|&i| i != r)
        .map(|i| (format!("s{i}"), generator(Generator::S(i), r, t).unwrap()))
        .collect();
    if r >= 1 && t >= 1 {
        out.push((format!("e{},{}", r, r + 1), generator(Generator::E(r, r + 1), r, t).unwrap()));
    }
    out
}

/// Arcs `r-l+i ↔ r+l+1-i` (1-based), `i = 1..l`, in 0-based form.
pub fn nested_arcs(r: usize, l: usize) -> Vec<(usize, usize)> {
    (0..l).map(|j| (r - l + j, r + l - 1 - j)).collect()
}

/// `E_l`: nested arcs in both rows, identity elsewhere.
pub fn nested_arc_diagram(r: usize, t: usize, l: usize) -> WalledDiagram {
    let arcs = nested_arcs(r, l);
    let verts: Vec<(usize, usize)> = (0..r - l).chain(r + l..r + t).map(|x| (x, x)).collect();
    WalledDiagram::from_parts(r, t, &arcs, &arcs, &verts).unwrap()
}

/// Which shape the zero-parameter idempotent takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroIdempotentShape {
    /// Bottom arcs shifted one step right, the spare right vertex feeding
    /// bottom `r+1`.
    Shifted,
    /// Mirror image of `Shifted` across the wall, used for every layer
    /// when `r > t` so that the layer idempotents absorb each other.
    Mirrored,
}

/// Diagram of the layer-`l` idempotent when the loop parameter is zero.
pub fn zero_idempotent_diagram(r: usize, t: usize, l: usize) -> Result<(ZeroIdempotentShape, WalledDiagram)> {
    let s = r.min(t);
    if l > s {
        return Err(Error::LayerOutOfRange(l, s));
    }
    if l == 0 {
        return Ok((ZeroIdempotentShape::Shifted, WalledDiagram::identity(r, t)));
    }
    if r <= t && l < t {
        let n = r + t;
        let top = nested_arcs(r, l);
        // 1-based bottom arcs r-l+i ↔ r+l+2-i
        let bottom: Vec<(usize, usize)> = (0..l).map(|j| (r - l + j, r + l - j)).collect();
        let mut verts: Vec<(usize, usize)> = (0..r - l).map(|x| (x, x)).collect();
        verts.push((r + l, r));
        verts.extend((r + l + 1..n).map(|x| (x, x)));
        let d = WalledDiagram::from_parts(r, t, &top, &bottom, &verts)?;
        return Ok((ZeroIdempotentShape::Shifted, d));
    }
    if t < r {
        let (_, d) = zero_idempotent_diagram(t, r, l)?;
        return Ok((ZeroIdempotentShape::Mirrored, mirror(&d)));
    }
    Err(Error::NotCellularlyStratified(format!(
        "delta = 0 has no layer-{l} idempotent in B_{{{r},{t}}}: every product of two diagrams with {l} arcs closes a loop"
    )))
}

/// Reflection `k ↦ n+1-k` of both rows, which swaps the roles of the two
/// sides of the wall.
pub fn mirror(d: &WalledDiagram) -> WalledDiagram {
    let n = d.n();
    let refl = |v: usize| if v < n { n - 1 - v } else { n + (2 * n - 1 - v) };
    let mut mate = vec![0u8; 2 * n];
    for v in 0..2 * n {
        mate[refl(v)] = refl(d.partner(v)) as u8;
    }
    WalledDiagram::from_mate(d.t(), d.r(), mate).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcFilter {
    All,
    Exactly(usize),
    AtLeast(usize),
}

fn choose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in choose(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    crate::symgrp::enumerate_group(crate::symgrp::GroupKind::Sym(items.len()))
        .map(|ps| ps.iter().map(|p| p.images().iter().map(|&i| items[i]).collect()).collect())
        .unwrap_or_default()
}

/// Every set of `l` disjoint wall-crossing arcs on one row, as sorted pairs.
pub fn arc_configurations(r: usize, t: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
    let left: Vec<usize> = (0..r).collect();
    let right: Vec<usize> = (r..r + t).collect();
    let mut out = Vec::new();
    for ls in choose(&left, l) {
        for rs in choose(&right, l) {
            for perm in arrangements(&rs) {
                let mut arcs: Vec<(usize, usize)> = ls.iter().copied().zip(perm).collect();
                arcs.sort();
                out.push(arcs);
            }
        }
    }
    out.sort();
    out
}

fn exactly(r: usize, t: usize, l: usize) -> Vec<WalledDiagram> {
    let n = r + t;
    let configs = arc_configurations(r, t, l);
    let mut out = Vec::new();
    for top in &configs {
        let used_top: Vec<bool> = (0..n).map(|x| top.iter().any(|&(a, b)| a == x || b == x)).collect();
        let tl: Vec<usize> = (0..r).filter(|&x| !used_top[x]).collect();
        let tr: Vec<usize> = (r..n).filter(|&x| !used_top[x]).collect();
        for bottom in &configs {
            let used_b: Vec<bool> = (0..n).map(|x| bottom.iter().any(|&(a, b)| a == x || b == x)).collect();
            let bl: Vec<usize> = (0..r).filter(|&x| !used_b[x]).collect();
            let br: Vec<usize> = (r..n).filter(|&x| !used_b[x]).collect();
            for pl in arrangements(&bl) {
                for pr in arrangements(&br) {
                    let verts: Vec<(usize, usize)> =
                        tl.iter().copied().zip(pl.iter().copied()).chain(tr.iter().copied().zip(pr.iter().copied())).collect();
                    out.push(WalledDiagram::from_parts(r, t, top, bottom, &verts).unwrap());
                }
            }
        }
    }
    out
}

/// Closed-form count of diagrams with exactly `l` arcs.
pub fn layer_count(r: usize, t: usize, l: usize) -> u128 {
    let v = binomial(r, l) * binomial(t, l) * factorial(l);
    v * v * factorial(r - l) * factorial(t - l)
}

/// Diagrams in basis order: by arc count, then edge list.
pub fn enumerate_diagrams(r: usize, t: usize, filter: ArcFilter) -> Result<Vec<WalledDiagram>> {
    if r + t > MAX_POINTS {
        return Err(Error::DimensionTooLarge(r + t, MAX_POINTS));
    }
    let s = r.min(t);
    let layers: Vec<usize> = match filter {
        ArcFilter::All => (0..=s).collect(),
        ArcFilter::Exactly(l) => (l..=l.min(s)).collect(),
        ArcFilter::AtLeast(l) => (l..=s).collect(),
    };
    let mut out = Vec::new();
    for l in layers {
        let mut layer = exactly(r, t, l);
        layer.sort();
        out.extend(layer);
    }
    Ok(out)
}

/// A top-row configuration: `l` arcs crossing the wall, the other vertices
/// free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialDiagram {
    r: usize,
    t: usize,
    arcs: Vec<(usize, usize)>,
}

impl PartialDiagram {
    pub fn new(r: usize, t: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; r + t];
        for &(a, b) in &arcs {
            let (a, b) = (a.min(b), a.max(b));
            if a >= r || b < r || b >= r + t || used[a] || used[b] {
                return Err(Error::MalformedPartialDiagram(format!("arc {}-{}", a + 1, b + 1)));
            }
            used[a] = true;
            used[b] = true;
        }
        arcs.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
        arcs.sort();
        Ok(PartialDiagram { r, t, arcs })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn layer(&self) -> usize {
        self.arcs.len()
    }

    pub fn free_left(&self) -> usize {
        self.r - self.arcs.len()
    }

    pub fn free_right(&self) -> usize {
        self.t - self.arcs.len()
    }

    /// Top-row pattern of a diagram.
    pub fn top_of(d: &WalledDiagram) -> Self {
        PartialDiagram { r: d.r(), t: d.t(), arcs: d.top_arcs() }
    }

    /// Bottom-row pattern of a diagram.
    pub fn bottom_of(d: &WalledDiagram) -> Self {
        PartialDiagram { r: d.r(), t: d.t(), arcs: d.bottom_arcs() }
    }

    pub fn contains_arcs(&self, arcs: &[(usize, usize)]) -> bool {
        arcs.iter().all(|a| self.arcs.contains(a))
    }
}

pub fn partial_diagrams(r: usize, t: usize, l: usize) -> Result<Vec<PartialDiagram>> {
    let s = r.min(t);
    if l > s {
        return Err(Error::LayerOutOfRange(l, s));
    }
    Ok(arc_configurations(r, t, l).into_iter().map(|arcs| PartialDiagram { r, t, arcs }).collect())
}

/// Partial diagrams with `m` arcs that contain the arcs of `E_l`.
pub fn constrained_partial_diagrams(r: usize, t: usize, m: usize, l: usize) -> Result<Vec<PartialDiagram>> {
    if l > m {
        return Err(Error::LayerOutOfRange(l, m));
    }
    let inner = nested_arcs(r, l);
    Ok(partial_diagrams(r, t, m)?.into_iter().filter(|v| v.contains_arcs(&inner)).collect())
}

/// Places `v` on top of `d`. `None` when the result gains arcs; otherwise the
/// number of closed loops and the resulting configuration.
pub fn act_on_partial(v: &PartialDiagram, d: &WalledDiagram) -> Result<Option<(usize, PartialDiagram)>> {
    if (v.r, v.t) != (d.r(), d.t()) {
        return Err(Error::ShapeMismatch(v.r, v.t, d.r(), d.t()));
    }
    let n = d.n();
    // nodes: middle row 0..n (bottom of v = top of d), bottom row n..2n
    let mut uf = UnionFind::new(2 * n);
    let mut in_arc = vec![false; n];
    for &(a, b) in &v.arcs {
        uf.union(a, b);
        in_arc[a] = true;
        in_arc[b] = true;
    }
    for x in 0..2 * n {
        let m = d.partner(x);
        if x < m {
            uf.union(x, m);
        }
    }
    let mut first = vec![usize::MAX; 2 * n];
    let mut arcs = Vec::new();
    for x in (0..n).filter(|&x| !in_arc[x]).chain(n..2 * n) {
        let root = uf.find(x);
        if first[root] == usize::MAX {
            first[root] = x;
        } else {
            let y = first[root];
            if y < n {
                if x < n {
                    return Ok(None);
                }
            } else {
                arcs.push((y - n, x - n));
            }
        }
    }
    let mut loops = 0;
    for x in 0..n {
        let root = uf.find(x);
        if first[root] == usize::MAX {
            first[root] = usize::MAX - 1;
            loops += 1;
        }
    }
    Ok(Some((loops, PartialDiagram::new(v.r, v.t, arcs)?)))
}

pub fn flip(d: &WalledDiagram) -> WalledDiagram {
    d.flip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn wbd(s: &str) -> WalledDiagram {
        WalledDiagram::parse(s).unwrap()
    }

    #[test]
    fn text_format() {
        let id = WalledDiagram::identity(1, 1);
        assert_eq!(id.to_string(), "wbd 1,1 : 1-1',2-2'");
        let e = generator(Generator::E(1, 2), 1, 1).unwrap();
        assert_eq!(e.to_string(), "wbd 1,1 : 1-2,1'-2'");
        assert_eq!(wbd("wbd 1,1 : 1-2,1'-2'"), e);
        let err = WalledDiagram::parse("wbd 1,1 : 1-2,1'=2'").unwrap_err();
        assert_eq!(err, Error::parse(14, "malformed edge `1'=2'`"));
        assert!(matches!(WalledDiagram::parse("wbd 1,1 : 1-1',2-3'"), Err(Error::Parse { offset: 15, .. })));
    }

    #[test]
    fn small_products() {
        let e = generator(Generator::E(1, 2), 1, 1).unwrap();
        assert_eq!(e.multiply(&e).unwrap(), (1, e.clone()));
        let s1 = generator(Generator::S(1), 2, 1).unwrap();
        assert_eq!(s1.multiply(&s1).unwrap(), (0, WalledDiagram::identity(2, 1)));
        assert_eq!(s1.to_string(), "wbd 2,1 : 1-2',2-1',3-3'");
        assert!(matches!(e.multiply(&s1), Err(Error::ShapeMismatch(1, 1, 2, 1))));
        assert_eq!(generator(Generator::S(2), 2, 1), Err(Error::IndexAcrossWall(2)));
        assert!(matches!(generator(Generator::E(2, 1), 2, 1), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn layer_counts_and_total_dimension() {
        for r in 0..=4 {
            for t in 0..=4 {
                let all = enumerate_diagrams(r, t, ArcFilter::All).unwrap();
                assert_eq!(all.len() as u128, factorial(r + t));
                let s: u128 = (0..=r.min(t)).map(|l| layer_count(r, t, l)).sum();
                assert_eq!(s, factorial(r + t));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert_eq!(enumerate_diagrams(2, 2, ArcFilter::Exactly(1)).unwrap().len(), 16);
        assert_eq!(enumerate_diagrams(1, 1, ArcFilter::All).unwrap().len(), 2);
    }

    #[test]
    fn arc_count_never_drops() {
        for (r, t) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let all = enumerate_diagrams(r, t, ArcFilter::All).unwrap();
            for a in &all {
                for b in &all {
                    let (_, c) = a.multiply(b).unwrap();
                    assert!(c.arcs() >= a.arcs().max(b.arcs()));
                }
            }
        }
    }

    #[test]
    fn partial_diagram_counts() {
        assert_eq!(partial_diagrams(3, 2, 0).unwrap().len(), 1);
        assert_eq!(partial_diagrams(2, 2, 1).unwrap().len(), 4);
        assert_eq!(constrained_partial_diagrams(3, 3, 2, 1).unwrap().len(), 4);
        assert!(matches!(partial_diagrams(2, 1, 2), Err(Error::LayerOutOfRange(2, 1))));
    }

    #[test]
    fn action_on_partial_diagrams() {
        let e = generator(Generator::E(1, 2), 1, 1).unwrap();
        let empty = PartialDiagram::new(1, 1, vec![]).unwrap();
        assert_eq!(act_on_partial(&empty, &WalledDiagram::identity(1, 1)).unwrap(), Some((0, empty.clone())));
        assert_eq!(act_on_partial(&empty, &e).unwrap(), None);
        let v = PartialDiagram::new(1, 1, vec![(0, 1)]).unwrap();
        assert_eq!(act_on_partial(&v, &e).unwrap(), Some((1, v.clone())));
    }

    #[test]
    fn zero_idempotent_golden() {
        let (_, d) = zero_idempotent_diagram(2, 2, 1).unwrap();
        assert_eq!(d.to_string(), "wbd 2,2 : 1-1',2-3,4-3',2'-4'");
        assert_eq!(d.multiply(&d).unwrap(), (0, d.clone()));
    }

    #[test]
    fn zero_idempotents_square_without_loops() {
        for r in 1..=4 {
            for t in 1..=4 {
                for l in 1..=r.min(t) {
                    match zero_idempotent_diagram(r, t, l) {
                        Ok((_, d)) => {
                            assert_eq!(d.arcs(), l);
                            assert_eq!(d.multiply(&d).unwrap(), (0, d.clone()), "({r},{t}) l={l}");
                        }
                        Err(e) => {
                            assert_eq!((r, t), (l, l));
                            assert!(matches!(e, Error::NotCellularlyStratified(_)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_reassembles() {
        for (r, t) in [(2, 2), (3, 2), (2, 3)] {
            for d in enumerate_diagrams(r, t, ArcFilter::All).unwrap() {
                let (p1, l, p2) = d.factor();
                let a = WalledDiagram::from_permutation(r, t, &p1).unwrap();
                let b = WalledDiagram::from_permutation(r, t, &p2).unwrap();
                let (c1, x) = a.multiply(&nested_arc_diagram(r, t, l)).unwrap();
                let (c2, y) = x.multiply(&b).unwrap();
                assert_eq!((c1, c2), (0, 0));
                assert_eq!(y, d);
            }
        }
    }

    fn arb_diagram() -> impl Strategy<Value = WalledDiagram> {
        arb_pair().prop_map(|(a, _)| a)
    }

    fn arb_pair() -> impl Strategy<Value = (WalledDiagram, WalledDiagram)> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(r, t)| {
            let all = enumerate_diagrams(r, t, ArcFilter::All).unwrap();
            (prop::sample::select(all.clone()), prop::sample::select(all))
        })
    }

    proptest! {
        #[test]
        fn flip_is_an_involution(d in arb_diagram()) {
            prop_assert_eq!(d.flip().flip(), d.clone());
            prop_assert_eq!(d.flip().arcs(), d.arcs());
        }

        #[test]
        fn text_round_trip(d in arb_diagram()) {
            prop_assert_eq!(WalledDiagram::parse(&d.to_string()).unwrap(), d);
        }

        #[test]
        fn flip_reverses_products((a, b) in arb_pair()) {
            let (c, ab) = a.multiply(&b).unwrap();
            let (c2, ba) = b.flip().multiply(&a.flip()).unwrap();
            prop_assert_eq!(c, c2);
            prop_assert_eq!(ab.flip(), ba);
        }
    }
}
