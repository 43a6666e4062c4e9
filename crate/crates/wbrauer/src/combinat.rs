//! Partitions, compositions, bipartitions, tableaux and tabloids.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only parts that are already weakly decreasing and positive.
    pub fn try_from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(0, format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
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

    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `self ⊵ other`: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn is_p_regular(&self, p: u32) -> bool {
        let p = p as usize;
        let mut i = 0;
        while i < self.0.len() {
            let j = self.0[i..].iter().take_while(|&&x| x == self.0[i]).count();
            if j >= p {
                return false;
            }
            i += j;
        }
        true
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_parts(text, 0).and_then(|parts| {
            Partition::try_from_parts(parts).map_err(|_| Error::parse(0, format!("`{text}` is not weakly decreasing")))
        })
    }

    fn fmt_inner(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.fmt_inner())
    }
}

fn parse_parts(text: &str, base: usize) -> Result<Vec<usize>> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(base + lead, format!("expected `(p1,p2,...)`, got `{t}`")))?;
    parse_list(inner, base + lead + 1)
}

fn parse_list(inner: &str, base: usize) -> Result<Vec<usize>> {
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut off = base;
    for tok in inner.split(',') {
        let v = tok.trim().parse::<usize>().map_err(|_| Error::parse(off, format!("bad part `{}`", tok.trim())))?;
        out.push(v);
        off += tok.len() + 1;
    }
    Ok(out)
}

/// Nonnegative parts in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

/// A pair of partitions, an element of the bipartition set of `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.left.size(), self.right.size())
    }

    /// Componentwise dominance.
    pub fn dominates(&self, other: &Bipartition) -> bool {
        self.left.dominates(&other.left) && self.right.dominates(&other.right)
    }

    pub fn is_p_regular(&self, p: u32) -> bool {
        self.left.is_p_regular(p) && self.right.is_p_regular(p)
    }

    pub fn conjugate(&self) -> Bipartition {
        Bipartition::new(self.left.conjugate(), self.right.conjugate())
    }

    /// Parses `(p1,...|q1,...)`; `offset` locates errors inside a larger
    /// string.
    pub fn parse_at(text: &str, offset: usize) -> Result<Self> {
        let t = text.trim();
        let lead = text.len() - text.trim_start().len();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(offset + lead, format!("expected `(λ|μ)`, got `{t}`")))?;
        let bar = inner.find('|').ok_or_else(|| Error::parse(offset + lead + 1, "missing `|` between the two partitions"))?;
        let base = offset + lead + 1;
        let l = parse_list(&inner[..bar], base)?;
        let r = parse_list(&inner[bar + 1..], base + bar + 1)?;
        let left = Partition::try_from_parts(l).map_err(|_| Error::parse(base, "left part is not a partition"))?;
        let right = Partition::try_from_parts(r).map_err(|_| Error::parse(base + bar + 1, "right part is not a partition"))?;
        Ok(Bipartition { left, right })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_at(text, 0)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.left.fmt_inner(), self.right.fmt_inner())
    }
}

/// All partitions of `n`, reverse lexicographic: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `(a, b)`, left factor varying slowest.
pub fn bipartitions_of(a: usize, b: usize) -> Vec<Bipartition> {
    let rights = partitions_of(b);
    partitions_of(a)
        .into_iter()
        .flat_map(|l| rights.iter().map(move |r| Bipartition::new(l.clone(), r.clone())))
        .collect()
}

/// True iff `mu ⊴ lambda`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(lambda.dominates(mu))
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn is_p_regular(lambda: &Partition, p: u32) -> bool {
    lambda.is_p_regular(p)
}

/// Row-equivalence class of a filling, stored as the row index of each
/// entry `1..=n` (entry `i` sits at position `i-1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    row_of: Vec<u8>,
    shape: Vec<usize>,
}

impl Tabloid {
    pub fn from_rows(shape: &[usize], rows: &[Vec<usize>]) -> Self {
        let n: usize = shape.iter().sum();
        let mut row_of = vec![0u8; n];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), shape[r], "row length differs from shape");
            for &e in row {
                row_of[e - 1] = r as u8;
            }
        }
        Tabloid { row_of, shape: shape.to_vec() }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn row_of(&self) -> &[u8] {
        &self.row_of
    }

    /// Rows as sorted entry lists, the canonical form.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.shape.len()];
        for (i, &r) in self.row_of.iter().enumerate() {
            rows[r as usize].push(i + 1);
        }
        rows
    }

    /// Right action of a permutation given by its image list (0-based):
    /// entry `i` is replaced by `images[i]`.
    pub fn act(&self, images: &[usize]) -> Tabloid {
        let mut row_of = vec![0u8; self.row_of.len()];
        for (i, &r) in self.row_of.iter().enumerate() {
            row_of[images[i]] = r;
        }
        Tabloid { row_of, shape: self.shape.clone() }
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{{{}}}", rows.join(" | "))
    }
}

/// All tabloids of a shape (zero parts allowed), in lexicographic order of
/// their row-index vectors.
pub fn tabloids(shape: &[usize]) -> Vec<Tabloid> {
    fn go(i: usize, n: usize, left: &mut [usize], cur: &mut Vec<u8>, shape: &[usize], out: &mut Vec<Tabloid>) {
        if i == n {
            out.push(Tabloid { row_of: cur.clone(), shape: shape.to_vec() });
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                cur.push(r as u8);
                go(i + 1, n, left, cur, shape, out);
                cur.pop();
                left[r] += 1;
            }
        }
    }
    let n = shape.iter().sum();
    let mut out = Vec::new();
    go(0, n, &mut shape.to_vec(), &mut Vec::with_capacity(n), shape, &mut out);
    out
}

/// A bijective filling of a Young diagram by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::IndexOutOfRange(format!("tableau entry {e}")));
            }
            seen[e] = true;
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::IndexOutOfRange("tableau rows must weakly decrease".into()));
        }
        Ok(Tableau { rows })
    }

    /// Entries `1..=n` filled along rows.
    pub fn initial(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let w = self.rows.first().map_or(0, |r| r.len());
        (0..w).map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
    }

    pub fn tabloid(&self) -> Tabloid {
        let shape: Vec<usize> = self.rows.iter().map(|r| r.len()).collect();
        Tabloid::from_rows(&shape, &self.rows)
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }
}

/// Standard tableaux of a shape, generated by placing the largest entry in
/// each removable corner.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if n == 0 {
            out.push(vec![Vec::new(); shape.len()]);
            return;
        }
        for i in 0..shape.len() {
            let removable = shape[i] > 0 && shape.get(i + 1).is_none_or(|&next| next < shape[i]);
            if removable {
                shape[i] -= 1;
                let mut sub = Vec::new();
                go(shape, n - 1, &mut sub);
                shape[i] += 1;
                for mut t in sub {
                    t[i].push(n);
                    out.push(t);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut s = shape.parts().to_vec();
    go(&mut s, shape.size(), &mut out);
    let mut ts: Vec<Tableau> = out.into_iter().map(|rows| Tableau { rows }).collect();
    ts.sort_by(|a, b| a.rows.cmp(&b.rows));
    ts
}

pub fn standard_tableaux_count(shape: &Partition) -> usize {
    standard_tableaux(shape).len()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::try_from_parts(v.to_vec()).unwrap()
    }

    // Euler-style recursion on the largest allowed part, independent of the
    // generator above.
    fn count_partitions(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
        for n in 0..=12 {
            assert_eq!(partitions_of(n).len(), count_partitions(n, n));
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[3]), &p(&[1, 1, 1])).unwrap());
        assert!(!dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
        assert!(!dominance_leq(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap());
        assert_eq!(dominance_leq(&p(&[2]), &p(&[1])), Err(Error::SizeMismatch(2, 1)));
    }

    #[test]
    fn dominance_is_a_partial_order_reversed_by_conjugation() {
        for n in 0..=8 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(a.dominates(a));
                for b in &ps {
                    if a.dominates(b) && b.dominates(a) {
                        assert_eq!(a, b);
                    }
                    assert_eq!(a.dominates(b), b.conjugate().dominates(&a.conjugate()));
                    for c in &ps {
                        if a.dominates(b) && b.dominates(c) {
                            assert!(a.dominates(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn regularity() {
        assert!(!p(&[1, 1]).is_p_regular(2));
        assert!(p(&[2, 1]).is_p_regular(2));
        assert!(!p(&[3, 3, 3, 1]).is_p_regular(3));
    }

    #[test]
    fn tabloid_counts() {
        assert_eq!(tabloids(&[4]).len(), 1);
        assert_eq!(tabloids(&[1, 1]).len(), 2);
        assert_eq!(tabloids(&[2, 1]).len(), 3);
        assert_eq!(tabloids(&[0, 2, 0, 1]).len(), 3);
    }

    #[test]
    fn standard_tableaux_examples() {
        assert_eq!(standard_tableaux_count(&p(&[5])), 1);
        assert_eq!(standard_tableaux_count(&p(&[2, 1])), 2);
        assert_eq!(standard_tableaux_count(&p(&[2, 2])), 2);
        assert!(standard_tableaux(&p(&[3, 2])).iter().all(|t| t.is_standard()));
    }

    fn hook_length(shape: &Partition) -> u128 {
        let conj = shape.conjugate();
        let mut prod = 1u128;
        for (i, &row) in shape.parts().iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts()[j] - i - 1;
                prod *= (arm + leg + 1) as u128;
            }
        }
        factorial(shape.size()) / prod
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=7 {
            let s: u128 = partitions_of(n).iter().map(|l| (standard_tableaux_count(l) as u128).pow(2)).sum();
            assert_eq!(s, factorial(n));
            for l in partitions_of(n) {
                assert_eq!(standard_tableaux_count(&l) as u128, hook_length(&l));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(Partition::parse("(3,1,1)").unwrap(), p(&[3, 1, 1]));
        let b = Bipartition::parse("(2,1|)").unwrap();
        assert_eq!(b, Bipartition::new(p(&[2, 1]), Partition::empty()));
        assert_eq!(b.to_string(), "(2,1|)");
        assert!(matches!(Bipartition::parse("(1,2|1)"), Err(Error::Parse { .. })));
        assert!(matches!(Partition::parse("(2,x)"), Err(Error::Parse { offset: 3, .. })));
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..6, 0..6).prop_map(Partition::new)
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
        }

        #[test]
        fn tabloid_count_is_multinomial(shape in prop::collection::vec(0usize..4, 1..4)) {
            let n: usize = shape.iter().sum();
            let denom: u128 = shape.iter().map(|&k| factorial(k)).product();
            prop_assert_eq!(tabloids(&shape).len() as u128, factorial(n) / denom);
        }

        #[test]
        fn partition_text_round_trip(l in arb_partition()) {
            prop_assert_eq!(Partition::parse(&l.to_string()).unwrap(), l);
        }
    }
}
