//! Algebras with an explicit basis and a structure-constant oracle, plus the
//! two concrete families used everywhere else: the walled Brauer algebra
//! `B_{r,t}(δ)` and the group algebra `K𝔖_{a,b}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::modcore::ModuleRep;
use crate::symgrp::{enumerate_group, GroupKind, Permutation};
use crate::walled::{
    enumerate_diagrams, nested_arc_diagram, standard_generators, zero_idempotent_diagram, ArcFilter, WalledDiagram,
};

pub const MAX_REGULAR_DIM: usize = 2000;
pub const MAX_ALGEBRA_POINTS: usize = 8;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    Diagram(WalledDiagram),
    Perm(Permutation),
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisId::Diagram(d) => write!(f, "{d}"),
            BasisId::Perm(p) => write!(f, "{p}"),
        }
    }
}

type Product<F> = Arc<[(usize, <F as Field>::Elem)]>;
type MulOracle<F> = Box<dyn Fn(usize, usize) -> Vec<(usize, <F as Field>::Elem)> + Send + Sync>;

/// Finite-dimensional algebra with basis `0..dim`.
pub struct PresentedAlgebra<F: Field> {
    id: u64,
    name: String,
    field: F,
    basis: Vec<BasisId>,
    index: HashMap<BasisId, usize>,
    one: usize,
    generators: Vec<(String, usize)>,
    names: Arc<[String]>,
    mul: MulOracle<F>,
    memo: RwLock<HashMap<(usize, usize), Product<F>>>,
    involution: Option<Vec<usize>>,
}

impl<F: Field> fmt::Debug for PresentedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedAlgebra").field("name", &self.name).field("dim", &self.basis.len()).finish()
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraElement<F: Field> {
    algebra: u64,
    terms: BTreeMap<usize, F::Elem>,
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.terms == other.terms
    }
}

impl<F: Field> Eq for AlgebraElement<F> {}

impl<F: Field> AlgebraElement<F> {
    pub fn terms(&self) -> &BTreeMap<usize, F::Elem> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn algebra_id(&self) -> u64 {
        self.algebra
    }
    /// The single `(index, coefficient)` pair of a one-term element.
    pub fn as_monomial(&self) -> Option<(usize, &F::Elem)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().map(|(i, c)| (*i, c)).unwrap())
    }
}

impl<F: Field> PresentedAlgebra<F> {
    /// `mul(i, j)` returns the expansion of `basis[i]·basis[j]`.
    pub fn new(
        field: &F,
        name: impl Into<String>,
        basis: Vec<BasisId>,
        one: usize,
        generators: Vec<(String, usize)>,
        mul: MulOracle<F>,
        involution: Option<Vec<usize>>,
    ) -> Self {
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        let names: Arc<[String]> = generators.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>().into();
        PresentedAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.into(),
            field: field.clone(),
            basis,
            index,
            one,
            generators,
            names,
            mul,
            memo: RwLock::new(HashMap::new()),
            involution,
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[BasisId] {
        &self.basis
    }
    pub fn basis_id(&self, i: usize) -> &BasisId {
        &self.basis[i]
    }
    pub fn index_of(&self, b: &BasisId) -> Option<usize> {
        self.index.get(b).copied()
    }
    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }
    pub fn generator_names(&self) -> &Arc<[String]> {
        &self.names
    }
    pub fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    pub fn zero(&self) -> AlgebraElement<F> {
        AlgebraElement { algebra: self.id, terms: BTreeMap::new() }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement<F> {
        self.monomial(i, self.field.one())
    }

    pub fn monomial(&self, i: usize, c: F::Elem) -> AlgebraElement<F> {
        let mut terms = BTreeMap::new();
        if !self.field.is_zero(&c) {
            terms.insert(i, c);
        }
        AlgebraElement { algebra: self.id, terms }
    }

    pub fn one(&self) -> AlgebraElement<F> {
        self.basis_element(self.one)
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn generator(&self, name: &str) -> Option<AlgebraElement<F>> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, i)| self.basis_element(*i))
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (usize, F::Elem)>) -> AlgebraElement<F> {
        let mut x = self.zero();
        for (i, c) in terms {
            self.add_term(&mut x.terms, i, &c);
        }
        x
    }

    fn add_term(&self, terms: &mut BTreeMap<usize, F::Elem>, i: usize, c: &F::Elem) {
        let f = &self.field;
        let v = match terms.get(&i) {
            Some(old) => f.add(old, c),
            None => c.clone(),
        };
        if f.is_zero(&v) {
            terms.remove(&i);
        } else {
            terms.insert(i, v);
        }
    }

    fn check(&self, x: &AlgebraElement<F>) -> Result<()> {
        if x.algebra != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Memoized product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> Product<F> {
        if let Some(p) = self.memo.read().unwrap().get(&(i, j)) {
            return p.clone();
        }
        let p: Product<F> = (self.mul)(i, j).into();
        self.memo.write().unwrap().insert((i, j), p.clone());
        p
    }

    pub fn add(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check(x)?;
        self.check(y)?;
        let mut z = x.clone();
        for (i, c) in &y.terms {
            self.add_term(&mut z.terms, *i, c);
        }
        Ok(z)
    }

    pub fn scale(&self, c: &F::Elem, x: &AlgebraElement<F>) -> AlgebraElement<F> {
        let f = &self.field;
        if f.is_zero(c) {
            return self.zero();
        }
        AlgebraElement { algebra: x.algebra, terms: x.terms.iter().map(|(i, v)| (*i, f.mul(c, v))).collect() }
    }

    pub fn multiply(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check(x)?;
        self.check(y)?;
        let f = &self.field;
        let mut terms = BTreeMap::new();
        for (i, a) in &x.terms {
            for (j, b) in &y.terms {
                let ab = f.mul(a, b);
                for (k, c) in self.mul_basis(*i, *j).iter() {
                    self.add_term(&mut terms, *k, &f.mul(&ab, c));
                }
            }
        }
        Ok(AlgebraElement { algebra: self.id, terms })
    }

    pub fn involution(&self, x: &AlgebraElement<F>) -> Result<Option<AlgebraElement<F>>> {
        self.check(x)?;
        Ok(self.involution.as_ref().map(|inv| self.from_terms(x.terms.iter().map(|(i, c)| (inv[*i], c.clone())))))
    }

    pub fn coords(&self, x: &AlgebraElement<F>) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (i, c) in &x.terms {
            v[*i] = c.clone();
        }
        v
    }

    pub fn format(&self, x: &AlgebraElement<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        x.terms
            .iter()
            .map(|(i, c)| {
                if f.is_one(c) {
                    self.basis[*i].to_string()
                } else {
                    format!("{} * {}", f.display(c), self.basis[*i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn guard(&self) -> Result<()> {
        if self.dim() > MAX_REGULAR_DIM {
            return Err(Error::DimensionTooLarge(self.dim(), MAX_REGULAR_DIM));
        }
        Ok(())
    }

    /// Matrix of `b ↦ b·x` (right) or `b ↦ x·b` (left) in row convention.
    pub fn multiplication_matrix(&self, x: &AlgebraElement<F>, right: bool) -> Result<Mat<F>> {
        self.check(x)?;
        self.guard()?;
        let f = &self.field;
        let d = self.dim();
        let mut m = Mat::zeros(f, d, d);
        for b in 0..d {
            let be = self.basis_element(b);
            let p = if right { self.multiply(&be, x)? } else { self.multiply(x, &be)? };
            for (k, c) in p.terms {
                m.set(b, k, c);
            }
        }
        Ok(m)
    }

    /// Right regular module on the generators.
    pub fn regular_representation(&self) -> Result<ModuleRep<F>> {
        self.guard()?;
        let actions = self
            .generators
            .iter()
            .map(|(_, g)| self.multiplication_matrix(&self.basis_element(*g), true))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep::new(&self.field, self.name.clone(), self.names.clone(), self.dim(), actions))
    }

    fn triples(&self, samples: usize, seed: u64) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        if d <= 50 {
            return (0..d).flat_map(|a| (0..d).flat_map(move |b| (0..d).map(move |c| (a, b, c)))).collect();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))).collect()
    }

    /// Exhaustive on every triple for `dim ≤ 50`, else on `samples` seeded triples.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> bool {
        self.triples(samples, seed).into_iter().all(|(a, b, c)| {
            let (x, y, z) = (self.basis_element(a), self.basis_element(b), self.basis_element(c));
            let l = self.multiply(&self.multiply(&x, &y).unwrap(), &z).unwrap();
            let r = self.multiply(&x, &self.multiply(&y, &z).unwrap()).unwrap();
            l == r
        })
    }

    pub fn check_unit(&self) -> bool {
        let one = self.one();
        (0..self.dim()).all(|i| {
            let b = self.basis_element(i);
            self.multiply(&one, &b).unwrap() == b && self.multiply(&b, &one).unwrap() == b
        })
    }

    /// `i(i(x)) = x` and `i(xy) = i(y)i(x)` on every basis pair.
    pub fn check_involution(&self) -> bool {
        let Some(inv) = &self.involution else { return false };
        let d = self.dim();
        if (0..d).any(|i| inv[inv[i]] != i) {
            return false;
        }
        (0..d).all(|a| {
            (0..d).all(|b| {
                let xy = self.multiply(&self.basis_element(a), &self.basis_element(b)).unwrap();
                let lhs = self.involution(&xy).unwrap().unwrap();
                let rhs = self.multiply(&self.basis_element(inv[b]), &self.basis_element(inv[a])).unwrap();
                lhs == rhs
            })
        })
    }
}

/// Names `s1..s{a-1}, s{a+1}..s{a+b-1}` and the block transpositions.
pub fn product_group_generators(a: usize, b: usize) -> Vec<(String, Permutation)> {
    (1..a + b)
        .filter(|&i| i != a)
        .map(|i| (format!("s{i}"), Permutation::transposition(a + b, i, i + 1)))
        .collect()
}

pub fn group_algebra_tag<F: Field>(field: &F, a: usize, b: usize) -> String {
    format!("S({a},{b};{})", field.spec())
}

/// `K𝔖_{a,b}` with basis the group elements in one-line lexicographic order.
pub fn group_algebra<F: Field>(field: &F, a: usize, b: usize) -> Result<PresentedAlgebra<F>> {
    let elems = enumerate_group(GroupKind::Prod(a, b))?;
    let index: HashMap<Permutation, usize> = elems.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let one = index[&Permutation::identity(a + b)];
    let generators = product_group_generators(a, b).into_iter().map(|(n, p)| (n, index[&p])).collect();
    let involution = Some(elems.iter().map(|p| index[&p.inverse()]).collect());
    let elems2 = elems.clone();
    let index2 = index.clone();
    let one_elem = field.one();
    let mul: MulOracle<F> = Box::new(move |i, j| vec![(index2[&elems2[i].then(&elems2[j])], one_elem.clone())]);
    let basis = elems.into_iter().map(BasisId::Perm).collect();
    Ok(PresentedAlgebra::new(field, group_algebra_tag(field, a, b), basis, one, generators, mul, involution))
}

/// `B_{r,t}(δ)` over a field, with diagrams sorted by arc count so that each
/// ideal `J_l` is a suffix of the basis.
pub struct WalledBrauer<F: Field> {
    r: usize,
    t: usize,
    delta: F::Elem,
    alg: PresentedAlgebra<F>,
    diagrams: Arc<Vec<WalledDiagram>>,
    arcs: Vec<usize>,
}

impl<F: Field> fmt::Debug for WalledBrauer<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alg.name())
    }
}

impl<F: Field> WalledBrauer<F> {
    pub fn new(field: &F, r: usize, t: usize, delta: F::Elem) -> Result<Self> {
        if r + t > MAX_ALGEBRA_POINTS {
            return Err(Error::DimensionTooLarge(crate::combinat::factorial(r + t) as usize, MAX_REGULAR_DIM));
        }
        let diagrams = Arc::new(enumerate_diagrams(r, t, ArcFilter::All)?);
        let index: Arc<HashMap<WalledDiagram, usize>> =
            Arc::new(diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect());
        let arcs = diagrams.iter().map(|d| d.arcs()).collect();
        let one = index[&WalledDiagram::identity(r, t)];
        let generators = standard_generators(r, t).into_iter().map(|(n, d)| (n, index[&d])).collect();
        let involution = Some(diagrams.iter().map(|d| index[&d.flip()]).collect());
        let powers: Vec<F::Elem> = (0..=r.min(t)).map(|k| field.pow(&delta, k as u64)).collect();
        let (dg, ix) = (diagrams.clone(), index.clone());
        let mul: MulOracle<F> = Box::new(move |i, j| {
            let (loops, d) = dg[i].mul_unchecked(&dg[j]);
            vec![(ix[&d], powers[loops].clone())]
        });
        let basis = diagrams.iter().cloned().map(BasisId::Diagram).collect();
        let name = format!("B({r},{t};{};{})", field.display(&delta), field.spec());
        let alg = PresentedAlgebra::new(field, name, basis, one, generators, mul, involution);
        Ok(WalledBrauer { r, t, delta, alg, diagrams, arcs })
    }

    pub fn algebra(&self) -> &PresentedAlgebra<F> {
        &self.alg
    }
    pub fn field(&self) -> &F {
        self.alg.field()
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn s(&self) -> usize {
        self.r.min(self.t)
    }
    pub fn delta(&self) -> &F::Elem {
        &self.delta
    }
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn diagram(&self, i: usize) -> &WalledDiagram {
        &self.diagrams[i]
    }
    pub fn diagrams(&self) -> &[WalledDiagram] {
        &self.diagrams
    }
    pub fn index_of(&self, d: &WalledDiagram) -> Option<usize> {
        self.alg.index_of(&BasisId::Diagram(d.clone()))
    }
    pub fn arcs_of(&self, i: usize) -> usize {
        self.arcs[i]
    }

    /// First basis index of `J_l`.
    pub fn layer_start(&self, l: usize) -> usize {
        self.arcs.partition_point(|&a| a < l)
    }

    pub fn element(&self, d: &WalledDiagram) -> Result<AlgebraElement<F>> {
        d.check_shape(&WalledDiagram::identity(self.r, self.t))?;
        Ok(self.alg.basis_element(self.index_of(d).unwrap()))
    }

    fn check_layer(&self, l: usize) -> Result<()> {
        if l > self.s() {
            return Err(Error::LayerOutOfRange(l, self.s()));
        }
        Ok(())
    }

    /// The layer idempotent as a scalar multiple of one diagram.
    pub fn idempotent_parts(&self, l: usize) -> Result<(F::Elem, WalledDiagram)> {
        self.check_layer(l)?;
        let f = self.field();
        if f.is_zero(&self.delta) {
            if self.r == 1 && self.t == 1 {
                return Err(Error::NotCellularlyStratified("B_{1,1}(0) is not cellularly stratified".into()));
            }
            let (_, d) = zero_idempotent_diagram(self.r, self.t, l)?;
            return Ok((f.one(), d));
        }
        let c = f.inv(&f.pow(&self.delta, l as u64)).unwrap();
        Ok((c, nested_arc_diagram(self.r, self.t, l)))
    }

    pub fn idempotent(&self, l: usize) -> Result<AlgebraElement<F>> {
        let (c, d) = self.idempotent_parts(l)?;
        Ok(self.alg.monomial(self.index_of(&d).unwrap(), c))
    }

    /// Top and bottom free vertices of `e_l`, paired along its vertical
    /// edges, with tops sorted.
    pub fn free_vertices(&self, l: usize) -> Result<Vec<(usize, usize)>> {
        let (_, d) = self.idempotent_parts(l)?;
        let n = d.n();
        Ok((0..n).filter(|&v| d.partner(v) >= n).map(|v| (v, d.partner(v) - n)).collect())
    }

    /// Image of `π ∈ 𝔖_{r-l,t-l}` in `e_l B e_l`: `e_l` followed by `π` on
    /// the free bottom vertices.
    pub fn embedded_permutation(&self, l: usize, pi: &Permutation) -> Result<AlgebraElement<F>> {
        let free = self.free_vertices(l)?;
        let (a, b) = (self.r - l, self.t - l);
        if pi.degree() != a + b {
            return Err(Error::DegreeMismatch(pi.degree(), a + b));
        }
        if (0..a).any(|i| pi.apply(i) >= a) {
            return Err(Error::NotASubgroupElement(pi.to_string()));
        }
        let n = self.r + self.t;
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &(_, bot)) in free.iter().enumerate() {
            images[bot] = free[pi.apply(i)].1;
        }
        let p = WalledDiagram::from_permutation(self.r, self.t, &Permutation::from_images(images)?)?;
        let e = self.idempotent(l)?;
        self.alg.multiply(&e, &self.element(&p)?)
    }

    /// Generators of the embedded `𝔖_{r-l,t-l}` with their names.
    pub fn subgroup_generators(&self, l: usize) -> Result<Vec<(String, AlgebraElement<F>)>> {
        self.check_layer(l)?;
        product_group_generators(self.r - l, self.t - l)
            .into_iter()
            .map(|(n, p)| Ok((n, self.embedded_permutation(l, &p)?)))
            .collect()
    }

    pub fn tag(&self) -> &str {
        self.alg.name()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{PrimeField, Rationals};

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn loop_gives_delta() {
        let b = WalledBrauer::new(&Rationals, 1, 1, q(3)).unwrap();
        let e = b.algebra().generator("e1,2").unwrap();
        let sq = b.algebra().multiply(&e, &e).unwrap();
        assert_eq!(sq, b.algebra().scale(&q(3), &e));
        assert_eq!(b.algebra().format(&sq), "3 * wbd 1,1 : 1-2,1'-2'");
    }

    #[test]
    fn unit_and_bilinearity() {
        let b = WalledBrauer::new(&PrimeField::new(5), 2, 1, 2).unwrap();
        let a = b.algebra();
        assert!(a.check_unit());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let (x, y, z) = (
                a.basis_element(rng.gen_range(0..6)),
                a.basis_element(rng.gen_range(0..6)),
                a.basis_element(rng.gen_range(0..6)),
            );
            let lhs = a.multiply(&a.add(&x, &y).unwrap(), &z).unwrap();
            let rhs = a.add(&a.multiply(&x, &z).unwrap(), &a.multiply(&y, &z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let b1 = WalledBrauer::new(&Rationals, 1, 1, q(2)).unwrap();
        let b2 = WalledBrauer::new(&Rationals, 1, 1, q(2)).unwrap();
        let x = b1.algebra().one();
        let y = b2.algebra().one();
        assert!(matches!(b1.algebra().multiply(&x, &y), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn regular_dims() {
        let g = group_algebra(&Rationals, 2, 0).unwrap();
        let reg = g.regular_representation().unwrap();
        assert_eq!(reg.dim(), 2);
        assert_eq!(reg.action(0), &Mat::from_i64(&Rationals, &[&[0, 1], &[1, 0]]));
        assert_eq!(WalledBrauer::new(&Rationals, 1, 1, q(2)).unwrap().dim(), 2);
        assert_eq!(WalledBrauer::new(&Rationals, 2, 1, q(2)).unwrap().algebra().regular_representation().unwrap().dim(), 6);
    }

    #[test]
    fn associativity_and_involution() {
        for (r, t) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for d in [0, 2] {
                let b = WalledBrauer::new(&Rationals, r, t, q(d)).unwrap();
                assert!(b.algebra().check_associativity(500, 11), "({r},{t}) δ={d}");
                assert!(b.algebra().check_involution(), "({r},{t}) δ={d}");
            }
        }
        let b = WalledBrauer::new(&PrimeField::new(5), 3, 2, 3).unwrap();
        assert!(b.algebra().check_associativity(500, 12));
        let g = group_algebra(&Rationals, 2, 2).unwrap();
        assert!(g.check_associativity(0, 0) && g.check_involution() && g.check_unit());
    }

    #[test]
    fn layer_idempotents() {
        for r in 1..=3 {
            for t in 1..=3 {
                for d in [0i64, 2, 5] {
                    let b = WalledBrauer::new(&Rationals, r, t, q(d)).unwrap();
                    let a = b.algebra();
                    for l in 0..=b.s() {
                        let Ok(el) = b.idempotent(l) else {
                            assert!(d == 0 && ((r, t) == (1, 1) || l == r && l == t));
                            continue;
                        };
                        assert_eq!(a.multiply(&el, &el).unwrap(), el, "({r},{t}) δ={d} l={l}");
                        for m in 0..l {
                            let Ok(em) = b.idempotent(m) else { continue };
                            assert_eq!(a.multiply(&el, &em).unwrap(), el, "({r},{t}) δ={d} l={l} m={m}");
                            assert_eq!(a.multiply(&em, &el).unwrap(), el, "({r},{t}) δ={d} l={l} m={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zero_delta_one_one_is_refused() {
        let b = WalledBrauer::new(&Rationals, 1, 1, q(0)).unwrap();
        assert!(matches!(b.idempotent(1), Err(Error::NotCellularlyStratified(_))));
    }

    #[test]
    fn ideals_are_two_sided() {
        let b = WalledBrauer::new(&Rationals, 2, 2, q(0)).unwrap();
        let a = b.algebra();
        for l in 0..=2 {
            for i in b.layer_start(l)..b.dim() {
                for (_, g) in a.generators() {
                    for p in [a.mul_basis(i, *g), a.mul_basis(*g, i)] {
                        assert!(p.iter().all(|(k, _)| b.arcs_of(*k) >= l));
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for (r, t) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            for d in [0i64, 2] {
                let b = WalledBrauer::new(&Rationals, r, t, q(d)).unwrap();
                let a = b.algebra();
                for l in 0..=b.s() {
                    let Ok(e) = b.idempotent(l) else { continue };
                    let (x, y) = (r - l, t - l);
                    let elems = enumerate_group(GroupKind::Prod(x, y)).unwrap();
                    assert_eq!(b.embedded_permutation(l, &Permutation::identity(x + y)).unwrap(), e);
                    for p in &elems {
                        for s in &elems {
                            let lhs = a
                                .multiply(&b.embedded_permutation(l, p).unwrap(), &b.embedded_permutation(l, s).unwrap())
                                .unwrap();
                            assert_eq!(lhs, b.embedded_permutation(l, &p.then(s)).unwrap());
                        }
                    }
                }
            }
        }
    }
}
