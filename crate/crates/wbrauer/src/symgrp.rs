//! Permutations under the right-action convention, Young subgroups, cosets,
//! double cosets and stabilizers of partial diagrams.
//!
//! Products compose left to right: `(σ·τ)(i) = τ(σ(i))`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

const MAX_DEGREE: usize = 8;
const MAX_ORDER: u128 = 40320;

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::parse(0, format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as in the one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::parse(0, "one-line images start at 1"));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// Transposition of the 1-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// From disjoint or overlapping 1-based cycles; cycles act in order.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for c in cycles {
            let mut p = Self::identity(n);
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::IndexOutOfRange(format!("cycle point outside 1..{n}")));
                }
                p.images[a - 1] = b - 1;
            }
            let p = Self::from_images(p.images)?;
            acc = acc.compose(&p)?;
        }
        Ok(acc)
    }

    /// Parses `(1 3 4)(2 5)` or `[3,5,4,1,2]`, with the degree given for
    /// cycle notation.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let mut v = Vec::new();
            let mut off = 1;
            for tok in inner.split(',') {
                let x = tok.trim().parse::<usize>().map_err(|_| Error::parse(off, format!("bad image `{}`", tok.trim())))?;
                v.push(x);
                off += tok.len() + 1;
            }
            return Self::from_one_line(&v);
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        let mut off = 0;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::parse(off, "expected `(`"))?;
            let close = open.find(')').ok_or_else(|| Error::parse(off, "unclosed cycle"))?;
            let mut cyc = Vec::new();
            for tok in open[..close].split_whitespace() {
                cyc.push(tok.parse::<usize>().map_err(|_| Error::parse(off + 1, format!("bad point `{tok}`")))?);
            }
            cycles.push(cyc);
            off += close + 2;
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// `self·other` for equal degrees.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.degree()];
        let mut s = 1;
        for i in 0..self.degree() {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        s
    }

    /// Word in adjacent transpositions `s_k` (1-based `k`, swapping `k` and
    /// `k+1`) whose left-to-right product is `self`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble sort the one-line form; swapping positions j, j+1 replaces
        // π by s_{j+1}·π, so the swaps read in order multiply back to π.
        let mut a = self.images.clone();
        let mut word = Vec::new();
        let n = a.len();
        for end in (1..n).rev() {
            for j in 0..end {
                if a[j] > a[j + 1] {
                    a.swap(j, j + 1);
                    word.push(j + 1);
                }
            }
        }
        word
    }

    /// Disjoint cycle notation on 1-based points, fixed points omitted.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for i in 0..self.degree() {
            if seen[i] || self.images[i] == i {
                continue;
            }
            let mut cyc = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                cyc.push((j + 1).to_string());
                j = self.images[j];
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }

    /// Block sum: `self` on the first points, `other` on the rest.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let a = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&j| j + a));
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

/// An element `(σ, τ)` of a direct product of two symmetric groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductPermutation {
    pub left: Permutation,
    pub right: Permutation,
}

impl ProductPermutation {
    pub fn new(left: Permutation, right: Permutation) -> Self {
        ProductPermutation { left, right }
    }

    pub fn compose(&self, other: &ProductPermutation) -> Result<ProductPermutation> {
        Ok(ProductPermutation::new(self.left.compose(&other.left)?, self.right.compose(&other.right)?))
    }

    pub fn inverse(&self) -> Self {
        ProductPermutation::new(self.left.inverse(), self.right.inverse())
    }

    pub fn signs(&self) -> (i64, i64) {
        (self.left.sign(), self.right.sign())
    }

    /// As a block permutation of `a + b` points.
    pub fn embed(&self) -> Permutation {
        self.left.direct_sum(&self.right)
    }

    pub fn split(p: &Permutation, a: usize) -> Result<Self> {
        let (l, r) = p.images.split_at(a);
        if l.iter().any(|&i| i >= a) || r.iter().any(|&i| i < a) {
            return Err(Error::NotASubgroupElement(p.to_string()));
        }
        Ok(ProductPermutation::new(
            Permutation { images: l.to_vec() },
            Permutation { images: r.iter().map(|i| i - a).collect() },
        ))
    }
}

impl fmt::Display for ProductPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Sym(usize),
    Prod(usize, usize),
}

fn order_guard(kind: GroupKind) -> Result<()> {
    let (a, b) = match kind {
        GroupKind::Sym(a) => (a, 0),
        GroupKind::Prod(a, b) => (a, b),
    };
    if a > MAX_DEGREE || b > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(a.max(b), MAX_DEGREE));
    }
    if crate::combinat::factorial(a) * crate::combinat::factorial(b) > MAX_ORDER {
        return Err(Error::DegreeTooLarge(a + b, MAX_DEGREE));
    }
    Ok(())
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(n: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation { images: cur.clone() });
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Every element in lexicographic order of image lists; product groups are
/// returned as block permutations of `a + b` points.
pub fn enumerate_group(kind: GroupKind) -> Result<Vec<Permutation>> {
    order_guard(kind)?;
    Ok(match kind {
        GroupKind::Sym(a) => all_permutations(a),
        GroupKind::Prod(a, b) => {
            let rs = all_permutations(b);
            all_permutations(a).iter().flat_map(|l| rs.iter().map(move |r| l.direct_sum(r))).collect()
        }
    })
}

/// A permutation group on `degree` points given by generators.
#[derive(Debug, Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
}

impl Group {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        Ok(Group { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        Group { degree, generators: Vec::new() }
    }

    pub fn symmetric(degree: usize) -> Self {
        Group::young(&[degree])
    }

    /// Young subgroup preserving consecutive blocks of the given sizes.
    pub fn young(shape: &[usize]) -> Self {
        let n: usize = shape.iter().sum();
        let mut gens = Vec::new();
        let mut start = 0;
        for &b in shape {
            for k in start + 1..start + b {
                gens.push(Permutation::transposition(n, k, k + 1));
            }
            start += b;
        }
        Group { degree: n, generators: gens }
    }

    /// The full subgroup `𝔖_a × 𝔖_b` of `𝔖_{a+b}`.
    pub fn product(a: usize, b: usize) -> Self {
        Group::young(&[a, b])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Closure of the generators, sorted.
    pub fn elements(&self) -> Vec<Permutation> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut v: Vec<Permutation> = seen.into_iter().collect();
        v.sort();
        v
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements().binary_search(p).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `H·g`
    Right,
    /// `g·H`
    Left,
}

fn check_subgroup(g: &[Permutation], h: &Group) -> Result<()> {
    for x in h.generators() {
        if g.binary_search(x).is_err() {
            return Err(Error::NotASubgroupElement(x.to_string()));
        }
    }
    Ok(())
}

/// Minimal representatives, one per coset of `h` in `g`, sorted.
pub fn cosets(g: &Group, h: &Group, side: Side) -> Result<Vec<Permutation>> {
    let ge = g.elements();
    check_subgroup(&ge, h)?;
    let he = h.elements();
    let mut assigned: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for x in &ge {
        if assigned.contains(x) {
            continue;
        }
        reps.push(x.clone());
        for y in &he {
            assigned.insert(match side {
                Side::Right => y.then(x),
                Side::Left => x.then(y),
            });
        }
    }
    Ok(reps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoset {
    pub rep: Permutation,
    pub size: usize,
}

/// Double cosets `h·x·l` in `g`, with minimal representatives.
pub fn double_cosets(h: &Group, g: &Group, l: &Group) -> Result<Vec<DoubleCoset>> {
    let ge = g.elements();
    check_subgroup(&ge, h)?;
    check_subgroup(&ge, l)?;
    let he = h.elements();
    let le = l.elements();
    let mut assigned: HashSet<Permutation> = HashSet::new();
    let mut out = Vec::new();
    for x in &ge {
        if assigned.contains(x) {
            continue;
        }
        let mut size = 0;
        for a in &he {
            let ax = a.then(x);
            for b in &le {
                if assigned.insert(ax.then(b)) {
                    size += 1;
                }
            }
        }
        out.push(DoubleCoset { rep: x.clone(), size });
    }
    Ok(out)
}

/// Block sizes of `Sym(points) ∩ π⁻¹·𝔖_B·π` where `𝔖_B` preserves the
/// given blocks: the part sizes `|π(B_i) ∩ points|`.
pub fn young_intersection_shape(blocks: &[Vec<usize>], pi: &Permutation, points: &[usize]) -> Vec<usize> {
    let pts: HashSet<usize> = points.iter().copied().collect();
    blocks.iter().map(|b| b.iter().filter(|&&x| pts.contains(&pi.apply(x))).count()).collect()
}

/// Horizontal edges `(left i, right j)` between two rows of `l` points,
/// read as the permutation `i ↦ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingStabilizer {
    pub v: Permutation,
    pub elements: Vec<ProductPermutation>,
}

impl MatchingStabilizer {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The partner `τ = v⁻¹·σ·v` of `σ`.
    pub fn tau(&self, sigma: &Permutation) -> Permutation {
        self.v.inverse().then(sigma).then(&self.v)
    }
}

/// Reads edges given as 1-based pairs `(i, l + j)` into the matching `i ↦ j`.
pub fn matching_from_edges(l: usize, edges: &[(usize, usize)]) -> Result<Permutation> {
    if edges.len() != l {
        return Err(Error::MalformedPartialDiagram(format!("expected {l} edges, got {}", edges.len())));
    }
    let mut images = vec![usize::MAX; l];
    let mut hit = vec![false; l];
    for &(a, b) in edges {
        let (a, b) = if a > b { (b, a) } else { (a, b) };
        if a == 0 || a > l || b <= l || b > 2 * l {
            return Err(Error::MalformedPartialDiagram(format!("edge {a}-{b} does not cross the wall")));
        }
        let j = b - l - 1;
        if images[a - 1] != usize::MAX || hit[j] {
            return Err(Error::MalformedPartialDiagram(format!("vertex reused in edge {a}-{b}")));
        }
        images[a - 1] = j;
        hit[j] = true;
    }
    Permutation::from_images(images)
}

/// Stabilizer of a full matching under `(σ, τ)`, which moves the edge
/// `i ~ l+v(i)` to `σ(i) ~ l+τ(v(i))`.
pub fn stabilizer_of_partial_diagram(l: usize, edges: &[(usize, usize)]) -> Result<MatchingStabilizer> {
    let v = matching_from_edges(l, edges)?;
    let elements = all_permutations(l)
        .into_iter()
        .map(|s| {
            let t = v.inverse().then(&s).then(&v);
            ProductPermutation::new(s, t)
        })
        .collect();
    Ok(MatchingStabilizer { v, elements })
}

/// Brute-force stabilizer over all of `𝔖_l × 𝔖_l`.
pub fn brute_force_stabilizer(v: &Permutation) -> Vec<ProductPermutation> {
    let l = v.degree();
    let all = all_permutations(l);
    let mut out = Vec::new();
    for s in &all {
        for t in &all {
            // edge i ~ v(i) goes to s(i) ~ t(v(i)); fixed iff t∘v = v∘s
            if (0..l).all(|i| t.apply(v.apply(i)) == v.apply(s.apply(i))) {
                out.push(ProductPermutation::new(s.clone(), t.clone()));
            }
        }
    }
    out
}

/// Orbit sizes summed per key, for orbit-counting checks.
pub fn tally<K: Ord, I: IntoIterator<Item = (K, usize)>>(items: I) -> BTreeMap<K, usize> {
    let mut m = BTreeMap::new();
    for (k, v) in items {
        *m.entry(k).or_insert(0) += v;
    }
    m
}

/// Index lookup for a sorted element list.
pub fn index_map(elements: &[Permutation]) -> HashMap<Permutation, usize> {
    elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn composition_convention() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        let ab = a.compose(&b).unwrap();
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(ab, Permutation::from_one_line(&[3, 1, 2]).unwrap());
        assert_eq!(ab.cycles(), "(1 3 2)");
        assert_eq!(ab.sign(), 1);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert_eq!(a.compose(&Permutation::identity(2)), Err(Error::DegreeMismatch(3, 2)));
    }

    #[test]
    fn group_enumeration() {
        assert_eq!(enumerate_group(GroupKind::Sym(3)).unwrap().len(), 6);
        assert_eq!(enumerate_group(GroupKind::Prod(2, 1)).unwrap().len(), 2);
        assert_eq!(enumerate_group(GroupKind::Prod(2, 2)).unwrap().len(), 4);
        assert!(matches!(enumerate_group(GroupKind::Sym(9)), Err(Error::DegreeTooLarge(..))));
        let e = enumerate_group(GroupKind::Sym(4)).unwrap();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn coset_counts() {
        let s3 = Group::symmetric(3);
        assert_eq!(cosets(&s3, &Group::young(&[2, 1]), Side::Right).unwrap().len(), 3);
        assert_eq!(cosets(&Group::product(2, 2), &Group::trivial(4), Side::Left).unwrap().len(), 4);
        assert_eq!(cosets(&Group::symmetric(4), &Group::young(&[2, 2]), Side::Right).unwrap().len(), 6);
        let bad = Group::new(3, vec![Permutation::transposition(3, 2, 3)]).unwrap();
        assert!(matches!(cosets(&Group::young(&[2, 1]), &bad, Side::Right), Err(Error::NotASubgroupElement(_))));
    }

    #[test]
    fn cosets_partition_the_group() {
        let g = Group::symmetric(4);
        let h = Group::young(&[2, 1, 1]);
        let he = h.elements();
        let mut covered = HashSet::new();
        for r in cosets(&g, &h, Side::Right).unwrap() {
            for y in &he {
                assert!(covered.insert(y.then(&r)));
            }
        }
        assert_eq!(covered.len(), 24);
    }

    #[test]
    fn double_coset_extremes() {
        let g = Group::product(2, 2);
        let all = double_cosets(&g, &g, &Group::trivial(4)).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].size, 4);
        assert_eq!(double_cosets(&Group::trivial(4), &g, &Group::trivial(4)).unwrap().len(), 4);
    }

    #[test]
    fn double_cosets_of_diagonal_in_small_product() {
        // G = S_{1,1} x S_{1,1} seen as S_{2,2}; H = S_{(2),(2)} is all of
        // G, L = the diagonal swap. One double coset of size 4.
        let g = Group::product(2, 2);
        let diag = Group::new(4, vec![Permutation::parse("(1 2)(3 4)", 4).unwrap()]).unwrap();
        let dc = double_cosets(&Group::young(&[2, 2]), &g, &diag).unwrap();
        assert_eq!(dc.len(), 1);
        let left = Group::young(&[2, 1, 1]);
        let dc = double_cosets(&left, &g, &diag).unwrap();
        // orbit partition of the 4 elements: {id, (1 2)} glued with the
        // diagonal gives everything
        assert_eq!(dc.iter().map(|d| d.size).sum::<usize>(), 4);
        assert_eq!(dc.len(), 1);
    }

    #[test]
    fn fig_five_stabilizer_instance() {
        // v: 1->2, 2->1, 3->5, 4->4, 5->3
        let edges = [(1, 7), (2, 6), (3, 10), (4, 9), (5, 8)];
        let st = stabilizer_of_partial_diagram(5, &edges).unwrap();
        let sigma = Permutation::parse("(1 3 4)", 5).unwrap();
        assert_eq!(st.tau(&sigma), Permutation::parse("(2 5 4)", 5).unwrap());
        assert_eq!(st.order(), 120);
    }

    #[test]
    fn stabilizers_match_brute_force() {
        for l in 1..=4 {
            for v in all_permutations(l) {
                let edges: Vec<(usize, usize)> = (0..l).map(|i| (i + 1, l + v.apply(i) + 1)).collect();
                let st = stabilizer_of_partial_diagram(l, &edges).unwrap();
                let mut a = st.elements.clone();
                let mut b = brute_force_stabilizer(&v);
                a.sort();
                b.sort();
                assert_eq!(a, b);
                assert_eq!(a.len() as u128, crate::combinat::factorial(l));
            }
        }
        let id2 = stabilizer_of_partial_diagram(2, &[(1, 3), (2, 4)]).unwrap();
        assert!(id2.elements.iter().all(|x| x.left == x.right));
        assert!(matches!(
            stabilizer_of_partial_diagram(2, &[(1, 2), (3, 4)]),
            Err(Error::MalformedPartialDiagram(_))
        ));
    }

    #[test]
    fn intersection_shape_matches_brute_force() {
        let blocks = vec![vec![0, 1], vec![2], vec![3, 4]];
        let young = Group::young(&[2, 1, 2]).elements();
        let points = [0, 1, 2];
        for pi in all_permutations(5) {
            let shape = young_intersection_shape(&blocks, &pi, &points);
            let conj: HashSet<Permutation> = young.iter().map(|y| pi.inverse().then(y).then(&pi)).collect();
            let meet = all_permutations(5)
                .into_iter()
                .filter(|x| (3..5).all(|i| x.apply(i) == i) && conj.contains(x))
                .count();
            let want: u128 = shape.iter().map(|&k| crate::combinat::factorial(k)).product();
            assert_eq!(meet as u128, want);
        }
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn sign_is_multiplicative(a in arb_perm(6), b in arb_perm(6)) {
            prop_assert_eq!(a.then(&b).sign(), a.sign() * b.sign());
        }

        #[test]
        fn adjacent_word_reproduces(a in arb_perm(6)) {
            let mut acc = Permutation::identity(6);
            for k in a.adjacent_word() {
                acc = acc.then(&Permutation::transposition(6, k, k + 1));
            }
            prop_assert_eq!(acc, a);
        }

        #[test]
        fn text_round_trip(a in arb_perm(7)) {
            prop_assert_eq!(Permutation::parse(&a.to_string(), 7).unwrap(), a.clone());
            prop_assert_eq!(Permutation::parse(&a.cycles(), 7).unwrap(), a);
        }
    }
}
