//! Modules for the walled Brauer algebra: the poset of labels, the layer
//! functors `ind_l`, `Ind_l` and `Res_l`, cell, permutation and Young
//! modules, and cell filtrations.
//!
//! Spans of diagrams are used throughout. `e_lB` has the basis of diagrams
//! `D` with `e_l·D = D`; quotients by `J_m` drop diagrams with `m` or more
//! arcs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algcore::{group_algebra_tag, product_group_generators, WalledBrauer};
use crate::coeffs::Field;
use crate::combinat::{binomial, bipartitions_of, factorial, Bipartition};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::modcore::{
    decompose, hom_space, is_isomorphic, quotient, submodule_generated, tensor_over_subalgebra, DecompositionReport,
    HomSpace, ModuleRep, SubmoduleWitness,
};
use crate::spechtmod::{dual_specht_prod, perm_module_prod, YoungCatalog};
use crate::symgrp::{enumerate_group, GroupKind, Permutation};
use crate::walled::{enumerate_diagrams, nested_arc_diagram, ArcFilter, WalledDiagram};

/// An element `(l, (λ, μ))` of the label poset: `λ ⊢ r−l`, `μ ⊢ t−l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LambdaLabel {
    pub l: usize,
    pub shape: Bipartition,
}

impl LambdaLabel {
    pub fn new(l: usize, shape: Bipartition) -> Self {
        LambdaLabel { l, shape }
    }

    /// Parses `l:(p1,p2,...|q1,q2,...)`.
    pub fn parse(text: &str) -> Result<Self> {
        let colon = text.find(':').ok_or_else(|| Error::parse(0, "expected `l:(λ|μ)`"))?;
        let head = text[..colon].trim();
        let l = head.parse::<usize>().map_err(|_| Error::parse(0, format!("bad layer `{head}`")))?;
        let shape = Bipartition::parse_at(&text[colon + 1..], colon + 1)?;
        Ok(LambdaLabel { l, shape })
    }

    /// Checks membership in the label set of `B_{r,t}`.
    pub fn check(&self, r: usize, t: usize) -> Result<()> {
        let s = r.min(t);
        if self.l > s {
            return Err(Error::LayerOutOfRange(self.l, s));
        }
        let (a, b) = self.shape.sizes();
        if a != r - self.l || b != t - self.l {
            return Err(Error::ShapeMismatch(a, b, r - self.l, t - self.l));
        }
        Ok(())
    }
}

impl fmt::Display for LambdaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.l, self.shape)
    }
}

/// All labels of `B_{r,t}`, layer descending, shapes reverse-lexicographic.
pub fn labels(r: usize, t: usize) -> Vec<LambdaLabel> {
    (0..=r.min(t))
        .rev()
        .flat_map(|l| bipartitions_of(r - l, t - l).into_iter().map(move |b| LambdaLabel::new(l, b)))
        .collect()
}

/// `x ≤ y`: `y` sits in a strictly lower layer, or the layers agree and the
/// shape of `x` dominates that of `y`.
pub fn lambda_leq(x: &LambdaLabel, y: &LambdaLabel) -> Result<bool> {
    let (xa, xb) = x.shape.sizes();
    let (ya, yb) = y.shape.sizes();
    if xa + x.l != ya + y.l || xb + x.l != yb + y.l {
        return Err(Error::ShapeMismatch(xa + x.l, xb + x.l, ya + y.l, yb + y.l));
    }
    Ok(y.l < x.l || (x.l == y.l && x.shape.dominates(&y.shape)))
}

/// `(r−l)!(t−l)!/(m−l)!`.
pub fn layer_formula(r: usize, t: usize, l: usize, m: usize) -> u128 {
    factorial(r - l) * factorial(t - l) / factorial(m - l)
}

fn check_pair(r: usize, t: usize, l: usize, m: usize) -> Result<()> {
    let s = r.min(t);
    if m > s {
        return Err(Error::LayerOutOfRange(m, s));
    }
    if l >= m {
        return Err(Error::LayerOutOfRange(l, m.saturating_sub(1)));
    }
    Ok(())
}

/// Number of diagrams `E_l·d·E_m` (reduced) with exactly `m` arcs, over all
/// diagrams `d`: the dimension of `e_l(B/J_{m+1})e_m` for `δ ≠ 0`.
pub fn layer_dimension_by_diagrams(r: usize, t: usize, l: usize, m: usize) -> Result<usize> {
    check_pair(r, t, l, m)?;
    let el = nested_arc_diagram(r, t, l);
    let em = nested_arc_diagram(r, t, m);
    let mut seen = std::collections::HashSet::new();
    for d in enumerate_diagrams(r, t, ArcFilter::All)? {
        let (_, x) = el.multiply(&d)?;
        let (_, y) = x.multiply(&em)?;
        if y.arcs() == m {
            seen.insert(y);
        }
    }
    Ok(seen.len())
}

/// Diagonal `𝔖_k` on the first `k` points of each side of `𝔖_{a,b}`.
fn diagonal_subgroup(a: usize, b: usize, k: usize) -> Result<Vec<Permutation>> {
    Ok(enumerate_group(GroupKind::Sym(k))?
        .into_iter()
        .map(|p| {
            let mut im: Vec<usize> = (0..a + b).collect();
            for i in 0..k {
                im[i] = p.apply(i);
                im[a + i] = a + p.apply(i);
            }
            Permutation::from_images(im).unwrap()
        })
        .collect())
}

/// Left `𝔖_k` on the first `k` left points only.
fn left_subgroup(a: usize, b: usize, k: usize) -> Result<Vec<Permutation>> {
    Ok(enumerate_group(GroupKind::Sym(k))?
        .into_iter()
        .map(|p| {
            let mut im: Vec<usize> = (0..a + b).collect();
            for (i, x) in im.iter_mut().enumerate().take(k) {
                *x = p.apply(i);
            }
            Permutation::from_images(im).unwrap()
        })
        .collect())
}

/// Right cosets `H·g` of `h` in `g`, as the sorted list of canonical
/// representatives and a lookup from every element to its coset.
fn right_cosets(g: &[Permutation], h: &[Permutation]) -> (Vec<Permutation>, HashMap<Permutation, usize>) {
    let mut reps = Vec::new();
    let mut of = HashMap::new();
    for x in g {
        if of.contains_key(x) {
            continue;
        }
        let k = reps.len();
        reps.push(x.clone());
        for y in h {
            of.insert(y.then(x), k);
        }
    }
    (reps, of)
}

/// `|𝔖_{r−l,t−l}| / |H|` counted as the number of cosets of the diagonal
/// `𝔖_{m−l}`.
pub fn layer_dimension_by_cosets(r: usize, t: usize, l: usize, m: usize) -> Result<usize> {
    check_pair(r, t, l, m)?;
    let (a, b) = (r - l, t - l);
    let g = enumerate_group(GroupKind::Prod(a, b))?;
    let h = diagonal_subgroup(a, b, m - l)?;
    Ok(right_cosets(&g, &h).0.len())
}

fn group_names(a: usize, b: usize) -> Arc<[String]> {
    product_group_generators(a, b).into_iter().map(|(n, _)| n).collect::<Vec<_>>().into()
}

/// A span of diagrams, by algebra basis index.
#[derive(Debug)]
struct Span {
    basis: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl Span {
    fn new(basis: Vec<usize>) -> Self {
        let pos = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        Span { basis, pos }
    }
    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Cell filtration `M = U_0 ⊋ U_1 ⊋ ... ⊋ U_k = 0` with
/// `U_i/U_{i+1} ≅ cell(labels[i])`.
#[derive(Clone, Debug)]
pub struct FiltrationReport<F: Field> {
    pub module: ModuleRep<F>,
    pub chain: Vec<SubmoduleWitness<F>>,
    pub subquotient_labels: Vec<LambdaLabel>,
}

impl<F: Field> FiltrationReport<F> {
    pub fn subquotient_dims(&self) -> Vec<usize> {
        self.chain.windows(2).map(|w| w[0].dim() - w[1].dim()).collect()
    }

    /// Labels with multiplicity.
    pub fn label_multiset(&self) -> BTreeMap<LambdaLabel, usize> {
        let mut out = BTreeMap::new();
        for l in &self.subquotient_labels {
            *out.entry(l.clone()).or_insert(0) += 1;
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct YoungLabelReport<F: Field> {
    pub summand: ModuleRep<F>,
    pub label: LambdaLabel,
    /// Full-rank hom from the summand onto the cell module of `label`.
    pub surjection: Mat<F>,
}

#[derive(Clone, Debug)]
pub struct YoungDecomposition<F: Field> {
    pub label: LambdaLabel,
    pub report: DecompositionReport<F>,
    /// One entry per class of `report`, in class order.
    pub summands: Vec<YoungLabelReport<F>>,
    /// Broken constraints, empty on success.
    pub violations: Vec<String>,
}

impl<F: Field> YoungDecomposition<F> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn label_multiset(&self) -> BTreeMap<LambdaLabel, usize> {
        let mut out = BTreeMap::new();
        for (c, s) in self.report.classes.iter().zip(&self.summands) {
            *out.entry(s.label.clone()).or_insert(0) += c.multiplicity;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerLemmaReport {
    pub l: usize,
    pub m: usize,
    /// `e_lJ_m ≅ e_lJ_{m+1} ⊕ e_l(J_m/J_{m+1})` by an invertible hom.
    pub split: bool,
    /// The multiplication map out of the tensor product is an invertible
    /// bimodule hom.
    pub tensor_iso: bool,
    /// `dim e_l(J_m/J_{m+1})` against the counting formula.
    pub tensor_dim: bool,
    /// `e_l(B/J_{m+1})e_m ≅ K[𝔖_{r−l,t−l}/H]` with `|H| = (m−l)!`.
    pub coset_iso: bool,
    pub dim: usize,
    pub formula: u128,
}

impl LayerLemmaReport {
    pub fn passed(&self) -> bool {
        self.split && self.tensor_iso && self.tensor_dim && self.coset_iso && self.dim as u128 == self.formula
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebraJson {
    pub r: usize,
    pub t: usize,
    pub delta: String,
    pub field: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LabelJson {
    pub l: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl From<&LambdaLabel> for LabelJson {
    fn from(x: &LambdaLabel) -> Self {
        LabelJson { l: x.l, lambda: x.shape.left.parts().to_vec(), mu: x.shape.right.parts().to_vec() }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LabelledSummandJson {
    pub label: String,
    pub multiplicity: usize,
    pub dim: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct FiltrationStepJson {
    pub label: String,
    pub dim: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct BReportJson {
    pub algebra: AlgebraJson,
    pub label: LabelJson,
    pub summands: Vec<LabelledSummandJson>,
    pub filtration: Vec<FiltrationStepJson>,
    pub seed: u64,
}

/// Module constructions over one walled Brauer algebra, with caches for
/// cell modules and Young modules.
pub struct BModules<F: Field> {
    b: WalledBrauer<F>,
    seed: u64,
    spans: Mutex<HashMap<(Option<usize>, Option<usize>, usize, usize), Arc<Span>>>,
    cells: Mutex<HashMap<LambdaLabel, ModuleRep<F>>>,
    young: Mutex<HashMap<LambdaLabel, ModuleRep<F>>>,
    labelled: Mutex<HashMap<LambdaLabel, (DecompositionReport<F>, Vec<LambdaLabel>)>>,
    sym: Mutex<Option<Arc<YoungCatalog<F>>>>,
}

impl<F: Field> BModules<F> {
    pub fn new(b: WalledBrauer<F>, seed: u64) -> Self {
        BModules {
            b,
            seed,
            spans: Mutex::new(HashMap::new()),
            cells: Mutex::new(HashMap::new()),
            young: Mutex::new(HashMap::new()),
            labelled: Mutex::new(HashMap::new()),
            sym: Mutex::new(None),
        }
    }

    pub fn algebra(&self) -> &WalledBrauer<F> {
        &self.b
    }
    pub fn field(&self) -> &F {
        self.b.field()
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
    pub fn labels(&self) -> Vec<LambdaLabel> {
        labels(self.b.r(), self.b.t())
    }

    fn sym_catalog(&self) -> Result<Arc<YoungCatalog<F>>> {
        let mut g = self.sym.lock().unwrap();
        if let Some(c) = g.as_ref() {
            return Ok(c.clone());
        }
        let c = Arc::new(YoungCatalog::new(self.field(), self.seed)?);
        *g = Some(c.clone());
        Ok(c)
    }

    fn b_module(&self, dim: usize, actions: Vec<Mat<F>>) -> ModuleRep<F> {
        let alg = self.b.algebra();
        ModuleRep::new(self.field(), self.b.tag(), alg.generator_names().clone(), dim, actions)
    }

    fn group_module(&self, a: usize, b: usize, dim: usize, actions: Vec<Mat<F>>) -> ModuleRep<F> {
        ModuleRep::new(self.field(), group_algebra_tag(self.field(), a, b), group_names(a, b), dim, actions)
    }

    fn check_b(&self, n: &ModuleRep<F>) -> Result<()> {
        if n.algebra() != self.b.tag() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Product of two basis diagrams, `None` when the scalar vanishes.
    fn mul(&self, i: usize, j: usize) -> Option<(F::Elem, usize)> {
        let p = self.b.algebra().mul_basis(i, j);
        let (k, c) = &p[0];
        if self.field().is_zero(c) {
            None
        } else {
            Some((c.clone(), *k))
        }
    }

    fn monomial(&self, x: &crate::algcore::AlgebraElement<F>) -> Result<(F::Elem, usize)> {
        x.as_monomial()
            .map(|(i, c)| (c.clone(), i))
            .ok_or_else(|| Error::CheckFailed("expected a scalar multiple of a diagram".into()))
    }

    fn idempotent_mono(&self, l: usize) -> Result<(F::Elem, usize)> {
        let (c, d) = self.b.idempotent_parts(l)?;
        Ok((c, self.b.index_of(&d).unwrap()))
    }

    /// `c·(x·y)` as a monomial.
    fn scaled(&self, c: &F::Elem, x: usize, y: usize) -> Option<(F::Elem, usize)> {
        self.mul(x, y).map(|(k, d)| (self.field().mul(c, &k), d)).filter(|(k, _)| !self.field().is_zero(k))
    }

    /// Diagrams fixed by `e_l` on the left and `e_m` on the right, with arc
    /// counts in `lo..=hi`.
    fn span(&self, left: Option<usize>, right: Option<usize>, lo: usize, hi: usize) -> Result<Arc<Span>> {
        let key = (left, right, lo, hi);
        if let Some(s) = self.spans.lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let f = self.field();
        let el = left.map(|l| self.idempotent_mono(l)).transpose()?;
        let em = right.map(|m| self.idempotent_mono(m)).transpose()?;
        let fixed = |got: Option<(F::Elem, usize)>, d: usize| matches!(got, Some((c, k)) if k == d && f.is_one(&c));
        let basis = (0..self.b.dim())
            .filter(|&d| (lo..=hi).contains(&self.b.arcs_of(d)))
            .filter(|&d| el.as_ref().map_or(true, |(c, e)| fixed(self.scaled(c, *e, d), d)))
            .filter(|&d| em.as_ref().map_or(true, |(c, e)| fixed(self.scaled(c, d, *e), d)))
            .collect();
        let s = Arc::new(Span::new(basis));
        self.spans.lock().unwrap().insert(key, s.clone());
        Ok(s)
    }

    /// Matrix of `x ↦ x·a` (or `a·x`) on a span modulo `J_{cap+1}`.
    fn span_matrix(&self, span: &Span, a: (F::Elem, usize), cap: usize, left: bool) -> Result<Mat<F>> {
        let f = self.field();
        let n = span.dim();
        let mut m = Mat::zeros(f, n, n);
        for (i, &d) in span.basis.iter().enumerate() {
            let got = if left { self.scaled(&a.0, a.1, d) } else { self.scaled(&a.0, d, a.1) };
            if let Some((c, k)) = got {
                if self.b.arcs_of(k) > cap {
                    continue;
                }
                let j = *span.pos.get(&k).ok_or(Error::NotInvariant)?;
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    fn right_b_action(&self, span: &Span, cap: usize) -> Result<Vec<Mat<F>>> {
        let one = self.field().one();
        self.b.algebra().generators().iter().map(|(_, g)| self.span_matrix(span, (one.clone(), *g), cap, false)).collect()
    }

    fn sub_action(&self, span: &Span, l: usize, cap: usize, left: bool) -> Result<Vec<Mat<F>>> {
        self.b
            .subgroup_generators(l)?
            .iter()
            .map(|(_, x)| self.span_matrix(span, self.monomial(x)?, cap, left))
            .collect()
    }

    /// `e_l(B/J_{l+1})` as a right `B`-module with the left action of the
    /// embedded `𝔖_{r−l,t−l}`.
    fn layer_bimodule(&self, l: usize) -> Result<(ModuleRep<F>, Vec<Mat<F>>)> {
        let span = self.span(Some(l), None, l, l)?;
        let right = self.right_b_action(&span, l)?;
        let left = self.sub_action(&span, l, l, true)?;
        Ok((self.b_module(span.dim(), right), left))
    }

    /// `e_lB` with the same two actions.
    fn free_bimodule(&self, l: usize) -> Result<(ModuleRep<F>, Vec<Mat<F>>)> {
        let s = self.b.s();
        let span = self.span(Some(l), None, l, s)?;
        let right = self.right_b_action(&span, s)?;
        let left = self.sub_action(&span, l, s, true)?;
        Ok((self.b_module(span.dim(), right), left))
    }

    fn check_group_module(&self, x: &ModuleRep<F>, l: usize) -> Result<()> {
        self.b.idempotent_parts(l)?;
        if x.algebra() != group_algebra_tag(self.field(), self.b.r() - l, self.b.t() - l) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// `ind_l X = X ⊗ e_l(B/J_{l+1})`.
    pub fn ind(&self, x: &ModuleRep<F>, l: usize) -> Result<ModuleRep<F>> {
        self.check_group_module(x, l)?;
        let (y, left) = self.layer_bimodule(l)?;
        Ok(tensor_over_subalgebra(x, &left, &y)?.module)
    }

    /// `Ind_l X = X ⊗ e_lB`.
    pub fn induce(&self, x: &ModuleRep<F>, l: usize) -> Result<ModuleRep<F>> {
        self.check_group_module(x, l)?;
        let (y, left) = self.free_bimodule(l)?;
        Ok(tensor_over_subalgebra(x, &left, &y)?.module)
    }

    /// `ind_l` of the dual Specht module of the label's shape.
    pub fn cell_module(&self, label: &LambdaLabel) -> Result<ModuleRep<F>> {
        label.check(self.b.r(), self.b.t())?;
        if let Some(m) = self.cells.lock().unwrap().get(label) {
            return Ok(m.clone());
        }
        let m = self.ind(&dual_specht_prod(&label.shape, self.field())?, label.l)?;
        self.cells.lock().unwrap().insert(label.clone(), m.clone());
        Ok(m)
    }

    /// `M(l, (λ, μ)) = Ind_l M^{λ,μ}`.
    pub fn perm_module(&self, label: &LambdaLabel) -> Result<ModuleRep<F>> {
        label.check(self.b.r(), self.b.t())?;
        let m = perm_module_prod(label.shape.left.parts(), label.shape.right.parts(), self.field())?;
        self.induce(&m, label.l)
    }

    /// The span of all diagrams with at most `cap` arcs, i.e. `B/J_{cap+1}`
    /// (the regular module when `cap = s`).
    pub fn regular_module(&self) -> Result<ModuleRep<F>> {
        let s = self.b.s();
        let span = self.span(None, None, 0, s)?;
        Ok(self.b_module(span.dim(), self.right_b_action(&span, s)?))
    }

    fn perm_action(&self, n: &ModuleRep<F>, p: &Permutation) -> Result<Mat<F>> {
        let mut m = Mat::identity(self.field(), n.dim());
        for k in p.adjacent_word() {
            let g = n.action_by_name(&format!("s{k}")).ok_or_else(|| Error::IndexOutOfRange(format!("s{k}")))?;
            m = m.mul(g);
        }
        Ok(m)
    }

    fn nested_action(&self, n: &ModuleRep<F>, l: usize) -> Result<Mat<F>> {
        let (r, t) = (self.b.r(), self.b.t());
        let name = format!("e{},{}", r, r + 1);
        let e = n.action_by_name(&name).ok_or(Error::IndexOutOfRange(name))?;
        let mut acc = Mat::identity(self.field(), n.dim());
        for j in 0..l {
            let (a, c) = (r - l + j, r + l - 1 - j);
            let mut im: Vec<usize> = (0..r + t).collect();
            im.swap(a, r - 1);
            im.swap(c, r);
            let rs = self.perm_action(n, &Permutation::from_images(im)?)?;
            acc = acc.mul(&rs).mul(e).mul(&rs);
        }
        Ok(acc)
    }

    /// Matrix by which a diagram acts on a right `B`-module given by
    /// generator matrices.
    pub fn act_diagram(&self, n: &ModuleRep<F>, d: &WalledDiagram) -> Result<Mat<F>> {
        self.check_b(n)?;
        let (p1, l, p2) = d.factor();
        let mut m = self.perm_action(n, &p1)?;
        if l > 0 {
            m = m.mul(&self.nested_action(n, l)?);
        }
        Ok(m.mul(&self.perm_action(n, &p2)?))
    }

    fn act_monomial(&self, n: &ModuleRep<F>, x: &(F::Elem, usize)) -> Result<Mat<F>> {
        Ok(self.act_diagram(n, self.b.diagram(x.1))?.scale(&x.0))
    }

    /// `Res_l N = N·e_l` with the right action of the embedded
    /// `𝔖_{r−l,t−l}`, and the image subspace of `N`.
    pub fn res_with_span(&self, n: &ModuleRep<F>, l: usize) -> Result<(ModuleRep<F>, Subspace<F>)> {
        self.check_b(n)?;
        let e = self.act_monomial(n, &self.idempotent_mono(l)?)?;
        let image = Subspace::from_mat(&e);
        let mats = self
            .b
            .subgroup_generators(l)?
            .iter()
            .map(|(_, x)| self.act_monomial(n, &self.monomial(x)?))
            .collect::<Result<Vec<_>>>()?;
        let (a, b) = (self.b.r() - l, self.b.t() - l);
        let whole = self.group_module(a, b, n.dim(), mats);
        Ok((whole.restrict(&image)?, image))
    }

    pub fn res(&self, n: &ModuleRep<F>, l: usize) -> Result<ModuleRep<F>> {
        Ok(self.res_with_span(n, l)?.0)
    }

    /// `N·J_m`, generated by the rows of `ρ_N(E_m)`.
    pub fn ideal_submodule(&self, n: &ModuleRep<F>, m: usize) -> Result<SubmoduleWitness<F>> {
        self.check_b(n)?;
        let s = self.b.s();
        if m > s {
            return Ok(submodule_generated(n, &[])?);
        }
        let e = self.act_diagram(n, &nested_arc_diagram(self.b.r(), self.b.t(), m))?;
        submodule_generated(n, &e.to_rows())
    }

    fn cell_dim(&self, x: &LambdaLabel) -> Result<usize> {
        let span = self.span(Some(x.l), None, x.l, x.l)?;
        let v = span.dim() / (factorial(self.b.r() - x.l) * factorial(self.b.t() - x.l)) as usize;
        Ok(v * crate::combinat::standard_tableaux_count(&x.shape.left) * crate::combinat::standard_tableaux_count(&x.shape.right))
    }

    /// The unique label whose cell module is isomorphic to `q`.
    pub fn identify_cell(&self, q: &ModuleRep<F>) -> Result<LambdaLabel> {
        let mut found = Vec::new();
        for x in self.labels() {
            if self.b.idempotent_parts(x.l).is_err() || self.cell_dim(&x)? != q.dim() {
                continue;
            }
            if is_isomorphic(&self.cell_module(&x)?, q, self.seed)?.is_some() {
                found.push(x);
            }
        }
        if found.len() != 1 {
            return Err(Error::LabelAmbiguous(format!("a subquotient of dim {} matches {} cell modules", q.dim(), found.len())));
        }
        Ok(found.remove(0))
    }

    /// Chain `X = X_0 ⊋ ... ⊋ X_k = 0` with dual Specht subquotients, each
    /// step given by its shape and the basis of `X_i` in the coordinates of
    /// the outermost module.
    fn specht_chain(
        &self,
        y: &ModuleRep<F>,
        to_x: Mat<F>,
        a: usize,
        b: usize,
        rng: &mut ChaCha8Rng,
    ) -> Result<Option<Vec<(Bipartition, Mat<F>)>>> {
        if y.dim() == 0 {
            return Ok(Some(Vec::new()));
        }
        let f = self.field();
        for nu in bipartitions_of(a, b) {
            let s = dual_specht_prod(&nu, f)?;
            if s.dim() > y.dim() {
                continue;
            }
            let h = hom_space(y, &s)?;
            let Some(phi) = surjection(&h, s.dim(), rng, f) else { continue };
            let ker = Subspace::from_mat(&phi.left_kernel());
            let inner = y.restrict(&ker)?;
            let inner_to_x = ker.basis().mul(&to_x);
            if let Some(mut rest) = self.specht_chain(&inner, inner_to_x, a, b, rng)? {
                rest.insert(0, (nu, to_x));
                return Ok(Some(rest));
            }
        }
        Ok(None)
    }

    /// Cell filtration of a module built from the layer constructions.
    pub fn cell_filtration(&self, m: &ModuleRep<F>) -> Result<FiltrationReport<F>> {
        self.field().spec().require_char_not_2_3()?;
        self.check_b(m)?;
        let f = self.field();
        let s = self.b.s();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let ideals: Vec<SubmoduleWitness<F>> =
            (0..=s + 1).map(|k| self.ideal_submodule(m, k)).collect::<Result<_>>()?;
        let mut chain = Vec::new();
        let mut expected = Vec::new();
        for k in 0..=s {
            let (upper, lower) = (&ideals[k], &ideals[k + 1]);
            if upper.dim() == lower.dim() {
                continue;
            }
            self.b.idempotent_parts(k)?;
            let inner = Subspace::from_mat(&Mat::from_rows(
                f,
                upper.dim(),
                lower.basis().to_rows().iter().map(|v| upper.span.coords(v).unwrap()).collect(),
            ));
            let q = quotient(&upper.module, &inner)?;
            let (x, xspan) = self.res_with_span(&q.module, k)?;
            let (a, b) = (self.b.r() - k, self.b.t() - k);
            let steps = self
                .specht_chain(&x, Mat::identity(f, x.dim()), a, b, &mut rng)?
                .ok_or_else(|| Error::CheckFailed(format!("no dual Specht filtration of Res_{k} at layer {k}")))?;
            let ubasis = upper.basis();
            let xb = xspan.basis();
            for (nu, basis) in steps {
                let qvecs = basis.mul(&xb);
                let qi = submodule_generated(&q.module, &qvecs.to_rows())?;
                let mut rows = lower.basis().to_rows();
                for v in qi.basis().to_rows() {
                    let mut w = vec![f.zero(); upper.dim()];
                    for (j, c) in v.iter().enumerate() {
                        w[q.lifts[j]] = c.clone();
                    }
                    rows.push(ubasis.vec_mul(&w));
                }
                chain.push(submodule_generated(m, &rows)?);
                expected.push(LambdaLabel::new(k, nu));
            }
        }
        chain.push(submodule_generated(m, &[])?);
        let mut found = Vec::with_capacity(expected.len());
        for (i, want) in expected.iter().enumerate() {
            let sq = subquotient(&chain[i], &chain[i + 1])?;
            let got = self.identify_cell(&sq)?;
            if &got != want {
                return Err(Error::CheckFailed(format!("subquotient {i} is cell {got}, expected {want}")));
            }
            found.push(got);
        }
        Ok(FiltrationReport { module: m.clone(), chain, subquotient_labels: found })
    }

    /// Label of an indecomposable summand of a permutation module: the top
    /// layer `m` with `X·J_m = X` and the Young module of `Res_m(X/XJ_{m+1})`.
    pub fn summand_label(&self, x: &ModuleRep<F>) -> Result<LambdaLabel> {
        self.check_b(x)?;
        let s = self.b.s();
        let mut m = 0;
        let mut next = None;
        for k in 1..=s + 1 {
            let w = self.ideal_submodule(x, k)?;
            if w.dim() == x.dim() {
                m = k;
            } else {
                next = Some(w);
                break;
            }
        }
        let top = match next {
            Some(w) if w.dim() > 0 => quotient(x, &w.span)?.module,
            _ => x.clone(),
        };
        let r = self.res(&top, m)?;
        let cat = self.sym_catalog()?;
        let mut found = Vec::new();
        for nu in bipartitions_of(self.b.r() - m, self.b.t() - m) {
            let y = cat.young_module(&nu)?;
            if y.dim() == r.dim() && is_isomorphic(&y, &r, self.seed)?.is_some() {
                found.push(nu);
            }
        }
        if found.len() != 1 {
            return Err(Error::LabelAmbiguous(format!(
                "Res_{m} of a summand of dim {} matches {} Young modules",
                x.dim(),
                found.len()
            )));
        }
        Ok(LambdaLabel::new(m, found.remove(0)))
    }

    fn labelled(&self, label: &LambdaLabel, seed: u64) -> Result<(DecompositionReport<F>, Vec<LambdaLabel>)> {
        if seed == self.seed {
            if let Some(x) = self.labelled.lock().unwrap().get(label) {
                return Ok(x.clone());
            }
        }
        let mut rep = decompose(&self.perm_module(label)?, seed)?;
        let mut out = Vec::with_capacity(rep.classes.len());
        for c in &mut rep.classes {
            let z = self.summand_label(&c.module)?;
            c.label = Some(z.to_string());
            out.push(z);
        }
        if seed == self.seed {
            self.labelled.lock().unwrap().insert(label.clone(), (rep.clone(), out.clone()));
        }
        Ok((rep, out))
    }

    /// `Y(l, (λ, μ))`: the summand of `M(l, (λ, μ))` carrying its own label.
    pub fn young_module(&self, label: &LambdaLabel) -> Result<ModuleRep<F>> {
        self.field().spec().require_char_not_2_3()?;
        if let Some(m) = self.young.lock().unwrap().get(label) {
            return Ok(m.clone());
        }
        let (rep, labels) = self.labelled(label, self.seed)?;
        let hits: Vec<usize> = (0..labels.len()).filter(|&i| &labels[i] == label).collect();
        if hits.len() != 1 {
            return Err(Error::CheckFailed(format!("{} summand classes of M({label}) carry its label", hits.len())));
        }
        let y = rep.classes[hits[0]].module.clone();
        self.young.lock().unwrap().insert(label.clone(), y.clone());
        Ok(y)
    }

    /// Labelled decomposition of `M(l, (λ, μ))` with every structural
    /// constraint checked and failures collected in `violations`.
    pub fn young_decomposition(&self, label: &LambdaLabel, seed: u64) -> Result<YoungDecomposition<F>> {
        self.field().spec().require_char_not_2_3()?;
        label.check(self.b.r(), self.b.t())?;
        let f = self.field();
        let (report, labels) = self.labelled(label, seed)?;
        let mut violations = Vec::new();
        let own: Vec<usize> = (0..labels.len()).filter(|&i| &labels[i] == label).collect();
        match own.as_slice() {
            [i] if report.classes[*i].multiplicity == 1 => {}
            [i] => violations.push(format!("{label} appears {} times", report.classes[*i].multiplicity)),
            _ => violations.push(format!("{} classes carry the defining label {label}", own.len())),
        }
        for (i, z) in labels.iter().enumerate() {
            if z.l < label.l {
                violations.push(format!("summand label {z} lies below layer {}", label.l));
            }
            if !lambda_leq(z, label)? {
                violations.push(format!("summand label {z} is not below {label}"));
            }
            if labels[..i].contains(z) {
                violations.push(format!("two non-isomorphic summands share the label {z}"));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut summands = Vec::with_capacity(labels.len());
        for (c, z) in report.classes.iter().zip(&labels) {
            if z != label {
                let y = self.young_module(z)?;
                if is_isomorphic(&y, &c.module, seed)?.is_none() {
                    violations.push(format!("summand labelled {z} is not isomorphic to Y({z})"));
                }
            }
            let cell = self.cell_module(z)?;
            let h = hom_space(&c.module, &cell)?;
            let surj = surjection(&h, cell.dim(), &mut rng, f);
            if surj.is_none() {
                violations.push(format!("no surjection from the summand labelled {z} onto its cell module"));
            }
            summands.push(YoungLabelReport {
                summand: c.module.clone(),
                label: z.clone(),
                surjection: surj.unwrap_or_else(|| Mat::zeros(f, c.dim, cell.dim())),
            });
        }
        let sym = self.sym_catalog()?.young_modules_prod(&label.shape, seed)?.multiplicities();
        let mut layer: HashMap<Bipartition, usize> = HashMap::new();
        for (c, z) in report.classes.iter().zip(&labels) {
            if z.l == label.l {
                *layer.entry(z.shape.clone()).or_insert(0) += c.multiplicity;
            }
        }
        if layer != sym {
            violations.push(format!("layer-{} multiplicities differ from those of M^{}", label.l, label.shape));
        }
        Ok(YoungDecomposition { label: label.clone(), report, summands, violations })
    }

    /// Report in the interchange schema.
    pub fn report_json(
        &self,
        label: &LambdaLabel,
        young: Option<&YoungDecomposition<F>>,
        filtration: Option<&FiltrationReport<F>>,
        seed: u64,
    ) -> BReportJson {
        let f = self.field();
        let summands = young
            .map(|y| {
                y.report
                    .classes
                    .iter()
                    .zip(&y.summands)
                    .map(|(c, s)| LabelledSummandJson { label: s.label.to_string(), multiplicity: c.multiplicity, dim: c.dim })
                    .collect()
            })
            .unwrap_or_default();
        let filtration = filtration
            .map(|fr| {
                fr.subquotient_labels
                    .iter()
                    .zip(fr.subquotient_dims())
                    .map(|(l, d)| FiltrationStepJson { label: l.to_string(), dim: d })
                    .collect()
            })
            .unwrap_or_default();
        BReportJson {
            algebra: AlgebraJson {
                r: self.b.r(),
                t: self.b.t(),
                delta: f.display(self.b.delta()),
                field: f.spec().to_string(),
            },
            label: label.into(),
            summands,
            filtration,
            seed,
        }
    }

    /// `e_lJ_m ≅ e_lJ_{m+1} ⊕ e_l(J_m/J_{m+1})`, the tensor identification of
    /// `e_l(J_m/J_{m+1})` and the coset description of `e_l(B/J_{m+1})e_m`.
    pub fn verify_layer_lemmas(&self, l: usize, m: usize) -> Result<LayerLemmaReport> {
        let (r, t, s) = (self.b.r(), self.b.t(), self.b.s());
        check_pair(r, t, l, m)?;
        let f = self.field();
        let (a, b) = (r - l, t - l);

        let whole = self.span(Some(l), None, m, s)?;
        let upper = self.span(Some(l), None, m + 1, s)?;
        let layer = self.span(Some(l), None, m, m)?;
        let mw = self.group_module(a, b, whole.dim(), self.sub_action(&whole, l, s, true)?);
        let mu = self.group_module(a, b, upper.dim(), self.sub_action(&upper, l, s, true)?);
        let ml = self.group_module(a, b, layer.dim(), self.sub_action(&layer, l, m, true)?);
        let sum = mu.direct_sum(&ml)?;
        let mut phi = Mat::zeros(f, whole.dim(), whole.dim());
        for (i, d) in whole.basis.iter().enumerate() {
            let j = match upper.pos.get(d) {
                Some(&j) => j,
                None => upper.dim() + layer.pos[d],
            };
            phi.set(i, j, f.one());
        }
        let split = mw.is_hom_to(&sum, &phi) && phi.is_invertible();

        let (tensor_iso, tensor_dim) = self.tensor_lemma(l, m)?;
        let (coset_iso, dim) = self.coset_lemma(l, m)?;
        Ok(LayerLemmaReport { l, m, split, tensor_iso, tensor_dim, coset_iso, dim, formula: layer_formula(r, t, l, m) })
    }

    fn tensor_lemma(&self, l: usize, m: usize) -> Result<(bool, bool)> {
        let f = self.field();
        let (r, t) = (self.b.r(), self.b.t());
        let pm = self.span(Some(l), Some(m), m, m)?;
        let pmod = self.group_module(r - m, t - m, pm.dim(), self.sub_action(&pm, m, m, false)?);
        let ym = self.span(Some(m), None, m, m)?;
        let ymod = self.b_module(ym.dim(), self.right_b_action(&ym, m)?);
        let yleft = self.sub_action(&ym, m, m, true)?;
        let tp = tensor_over_subalgebra(&pmod, &yleft, &ymod)?;
        let z = self.span(Some(l), None, m, m)?;
        let zmod = self.b_module(z.dim(), self.right_b_action(&z, m)?);
        let pairs = tp.basis_pairs();
        let mut mu = Mat::zeros(f, pairs.len(), z.dim());
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if let Some((c, d)) = self.mul(pm.basis[i], ym.basis[j]) {
                if self.b.arcs_of(d) == m {
                    let col = *z.pos.get(&d).ok_or(Error::NotInvariant)?;
                    mu.set(k, col, c);
                }
            }
        }
        let right_ok = tp.module.is_hom_to(&zmod, &mu) && mu.is_invertible();
        let zleft = self.sub_action(&z, l, m, true)?;
        let mut left_ok = true;
        for ((_, g), lz) in self.b.subgroup_generators(l)?.iter().zip(&zleft) {
            let g = self.monomial(g)?;
            let pl = self.span_matrix(&pm, g, m, true)?;
            let rows: Vec<Vec<F::Elem>> = pairs
                .iter()
                .map(|&(i, j)| {
                    let terms: Vec<((usize, usize), F::Elem)> = (0..pm.dim())
                        .filter(|&i2| !f.is_zero(pl.get(i, i2)))
                        .map(|i2| ((i2, j), pl.get(i, i2).clone()))
                        .collect();
                    tp.coords_of(&terms)
                })
                .collect();
            let lt = Mat::from_rows(f, pairs.len(), rows);
            left_ok &= lt.mul(&mu) == mu.mul(lz);
        }
        let count = binomial(r - l, m - l) * binomial(t - l, m - l) * factorial(m - l);
        let vm = binomial(r, m) * binomial(t, m) * factorial(m);
        let want = count * vm * factorial(r - m) * factorial(t - m);
        Ok((right_ok && left_ok, z.dim() as u128 == want))
    }

    fn coset_lemma(&self, l: usize, m: usize) -> Result<(bool, usize)> {
        let f = self.field();
        let (a, b) = (self.b.r() - l, self.b.t() - l);
        let pm = self.span(Some(l), Some(m), m, m)?;
        let em = self.idempotent_mono(m)?;
        let g = enumerate_group(GroupKind::Prod(a, b))?;
        let mut image: HashMap<Permutation, (F::Elem, usize)> = HashMap::new();
        for p in &g {
            let x = self.monomial(&self.b.embedded_permutation(l, p)?)?;
            let c = f.mul(&x.0, &em.0);
            let v = self.scaled(&c, x.1, em.1).ok_or_else(|| Error::CheckFailed("ι(g)·e_m vanished".into()))?;
            image.insert(p.clone(), v);
        }
        let stab: Vec<Permutation> = g.iter().filter(|p| image[*p] == em).cloned().collect();
        // cosets g·H in `then` order: g.then(h) for h in H
        let mut reps: Vec<Permutation> = Vec::new();
        let mut of: HashMap<Permutation, usize> = HashMap::new();
        for p in &g {
            if of.contains_key(p) {
                continue;
            }
            for h in &stab {
                of.insert(p.then(h), reps.len());
            }
            reps.push(p.clone());
        }
        let n = reps.len();
        let mut phi = Mat::zeros(f, n, pm.dim());
        let mut cols = std::collections::HashSet::new();
        for (k, p) in reps.iter().enumerate() {
            let (c, d) = &image[p];
            let col = *pm.pos.get(d).ok_or(Error::NotInvariant)?;
            cols.insert(col);
            phi.set(k, col, c.clone());
        }
        let mut ok = stab.len() as u128 == factorial(m - l) && cols.len() == n && n == pm.dim();
        let gens = product_group_generators(a, b);
        let left = self.sub_action(&pm, l, m, true)?;
        for ((_, s), lp) in gens.iter().zip(&left) {
            let mut lc = Mat::zeros(f, n, n);
            for (k, p) in reps.iter().enumerate() {
                lc.set(k, of[&s.then(p)], f.one());
            }
            ok &= lc.mul(&phi) == phi.mul(lp);
        }
        Ok((ok && phi.is_invertible(), pm.dim()))
    }

    /// `Res_l cell(n, ν)` against `S_ν ⊗_{K𝔖_{r−n,t−n}} K[H\𝔖_{r−l,t−l}]`,
    /// with `H` the diagonal `𝔖_{n−l}` (`diagonal`) or `𝔖_{n−l}` on the left
    /// points only. Returns `true` when an isomorphism is found; for `n < l`
    /// checks that the restriction vanishes.
    pub fn res_cell_identity(&self, n: usize, l: usize, shape: &Bipartition, diagonal: bool) -> Result<bool> {
        let (r, t) = (self.b.r(), self.b.t());
        let label = LambdaLabel::new(n, shape.clone());
        let cell = self.cell_module(&label)?;
        let res = self.res(&cell, l)?;
        if n < l {
            return Ok(res.dim() == 0);
        }
        let f = self.field();
        let (a, b, k) = (r - l, t - l, n - l);
        let g = enumerate_group(GroupKind::Prod(a, b))?;
        let h = if diagonal { diagonal_subgroup(a, b, k)? } else { left_subgroup(a, b, k)? };
        let (reps, of) = right_cosets(&g, &h);
        let q = reps.len();
        let gmats = product_group_generators(a, b)
            .iter()
            .map(|(_, x)| {
                let mut mm = Mat::zeros(f, q, q);
                for (i, p) in reps.iter().enumerate() {
                    mm.set(i, of[&p.then(x)], f.one());
                }
                mm
            })
            .collect();
        let perm = self.group_module(a, b, q, gmats);
        // the remaining points carry 𝔖_{r−n,t−n}, acting on the left
        let shift = |p: &Permutation| {
            let mut im: Vec<usize> = (0..a + b).collect();
            for i in 0..r - n {
                im[k + i] = k + p.apply(i);
            }
            for j in 0..t - n {
                im[a + k + j] = a + k + p.apply(r - n + j) - (r - n);
            }
            Permutation::from_images(im).unwrap()
        };
        let left: Vec<Mat<F>> = product_group_generators(r - n, t - n)
            .iter()
            .map(|(_, x)| {
                let y = shift(x);
                let mut mm = Mat::zeros(f, q, q);
                for (i, p) in reps.iter().enumerate() {
                    mm.set(i, of[&y.then(p)], f.one());
                }
                mm
            })
            .collect();
        let tp = tensor_over_subalgebra(&dual_specht_prod(shape, f)?, &left, &perm)?;
        Ok(is_isomorphic(&res, &tp.module, self.seed)?.is_some())
    }
}

/// Full-rank element of a hom space onto a `target`-dimensional module.
fn surjection<F: Field>(h: &HomSpace<F>, target: usize, rng: &mut ChaCha8Rng, f: &F) -> Option<Mat<F>> {
    if h.dim() == 0 {
        return None;
    }
    for b in &h.basis {
        if b.rank() == target {
            return Some(b.clone());
        }
    }
    for _ in 0..16 {
        let c: Vec<F::Elem> = (0..h.dim()).map(|_| f.random(rng, 1000)).collect();
        let phi = h.combine(&c);
        if phi.rank() == target {
            return Some(phi);
        }
    }
    None
}

/// `A/B` for submodules `B ⊆ A` of the same ambient module.
pub fn subquotient<F: Field>(a: &SubmoduleWitness<F>, b: &SubmoduleWitness<F>) -> Result<ModuleRep<F>> {
    let f = a.module.field();
    let rows = b
        .basis()
        .to_rows()
        .iter()
        .map(|v| a.span.coords(v).ok_or(Error::NotInvariant))
        .collect::<Result<Vec<_>>>()?;
    let inner = Subspace::from_mat(&Mat::from_rows(f, a.dim(), rows));
    Ok(quotient(&a.module, &inner)?.module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{PrimeField, Rationals};
    use crate::combinat::Partition;

    fn bip(l: &[usize], r: &[usize]) -> Bipartition {
        Bipartition::new(Partition::new(l.to_vec()), Partition::new(r.to_vec()))
    }
    fn lab(l: usize, a: &[usize], b: &[usize]) -> LambdaLabel {
        LambdaLabel::new(l, bip(a, b))
    }
    fn over_q(r: usize, t: usize, delta: i64) -> BModules<Rationals> {
        BModules::new(WalledBrauer::new(&Rationals, r, t, Rationals.from_i64(delta)).unwrap(), 1)
    }

    #[test]
    fn label_order() {
        let x = lab(1, &[1], &[1]);
        assert!(lambda_leq(&x, &x).unwrap());
        assert!(lambda_leq(&lab(2, &[], &[]), &x).unwrap());
        assert!(!lambda_leq(&x, &lab(2, &[], &[])).unwrap());
        let (p, q) = (lab(0, &[3, 3], &[1]), lab(0, &[4, 1, 1], &[1]));
        assert!(!lambda_leq(&p, &q).unwrap() && !lambda_leq(&q, &p).unwrap());
        assert!(matches!(lambda_leq(&x, &lab(0, &[1], &[1])), Err(Error::ShapeMismatch(..))));
    }

    #[test]
    fn label_text() {
        let x = LambdaLabel::parse("1:(2,1|1)").unwrap();
        assert_eq!(x, lab(1, &[2, 1], &[1]));
        assert_eq!(x.to_string(), "1:(2,1|1)");
        assert!(matches!(LambdaLabel::parse("x:(1|1)"), Err(Error::Parse { .. })));
        assert!(matches!(LambdaLabel::parse("1:(1|1"), Err(Error::Parse { .. })));
        let all = labels(2, 1);
        assert_eq!(all.first().unwrap(), &lab(1, &[1], &[]));
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn cell_dimensions() {
        assert_eq!(over_q(1, 1, 2).cell_module(&lab(1, &[], &[])).unwrap().dim(), 1);
        let b = over_q(2, 2, 2);
        assert_eq!(b.cell_module(&lab(1, &[1], &[1])).unwrap().dim(), 4);
        assert_eq!(b.cell_module(&lab(0, &[2], &[1, 1])).unwrap().dim(), 1);
        assert_eq!(b.cell_module(&lab(2, &[], &[])).unwrap().dim(), 2);
    }

    #[test]
    fn semisimple_cells_fill_the_algebra() {
        for (r, t) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let b = over_q(r, t, 5);
            let total: usize = b.labels().iter().map(|x| b.cell_module(x).unwrap().dim().pow(2)).sum();
            assert_eq!(total, b.algebra().dim());
        }
    }

    #[test]
    fn permutation_modules() {
        let b = over_q(1, 1, 2);
        assert_eq!(b.perm_module(&lab(0, &[1], &[1])).unwrap().dim(), 2);
        // oracle: rank of left multiplication by e_1 on the regular module
        let alg = b.algebra().algebra();
        let e = b.algebra().idempotent(1).unwrap();
        let rank = alg.multiplication_matrix(&e, false).unwrap().rank();
        assert_eq!(b.perm_module(&lab(1, &[], &[])).unwrap().dim(), rank);
        assert_eq!(rank, 1);
        let b = over_q(2, 1, 2);
        assert_eq!(b.perm_module(&lab(0, &[1, 1], &[1])).unwrap().dim(), 6);
    }

    #[test]
    fn restriction() {
        let b = over_q(1, 1, 2);
        let reg = b.regular_module().unwrap();
        let alg = b.algebra().algebra();
        let e = b.algebra().idempotent(1).unwrap();
        let rank = alg.multiplication_matrix(&e, true).unwrap().rank();
        assert_eq!(b.res(&reg, 1).unwrap().dim(), rank);
        assert_eq!(rank, 1);
        assert_eq!(b.res(&reg, 0).unwrap().dim(), 2);
        let b = over_q(2, 2, 2);
        let c = b.cell_module(&lab(1, &[1], &[1])).unwrap();
        assert_eq!(b.res(&c, 2).unwrap().dim(), 0);
        assert_eq!(b.res(&c, 1).unwrap().dim(), 1);
    }

    #[test]
    fn diagram_action_matches_the_regular_module() {
        let b = over_q(2, 2, 3);
        let reg = b.regular_module().unwrap();
        let alg = b.algebra().algebra();
        for i in [0, 5, 11, 17, 23] {
            let d = b.algebra().diagram(i).clone();
            let want = alg.multiplication_matrix(&alg.basis_element(i), true).unwrap();
            assert_eq!(b.act_diagram(&reg, &d).unwrap(), want, "{d}");
        }
    }

    #[test]
    fn filtration_examples() {
        let b = over_q(1, 1, 2);
        let f = b.cell_filtration(&b.perm_module(&lab(1, &[], &[])).unwrap()).unwrap();
        assert_eq!(f.subquotient_labels, vec![lab(1, &[], &[])]);
        let b = over_q(2, 1, 2);
        let m = b.perm_module(&lab(0, &[2], &[1])).unwrap();
        let f = b.cell_filtration(&m).unwrap();
        assert!(f.subquotient_labels.contains(&lab(0, &[2], &[1])));
        assert_eq!(f.subquotient_labels.iter().filter(|x| x.l == 1).count(), 1);
        assert_eq!(f.subquotient_dims().iter().sum::<usize>(), m.dim());
        let c = b.cell_module(&lab(1, &[1], &[])).unwrap();
        assert_eq!(b.cell_filtration(&c).unwrap().subquotient_labels, vec![lab(1, &[1], &[])]);
        let bad = BModules::new(WalledBrauer::new(&PrimeField::new(3), 1, 1, PrimeField::new(3).one()).unwrap(), 0);
        let m = bad.perm_module(&lab(1, &[], &[])).unwrap();
        assert!(matches!(bad.cell_filtration(&m), Err(Error::BadCharacteristic(3))));
    }

    #[test]
    fn young_examples() {
        let b = over_q(2, 1, 5);
        for x in b.labels() {
            let y = b.young_decomposition(&x, 3).unwrap();
            assert!(y.is_valid(), "{x}: {:?}", y.violations);
            for s in &y.summands {
                let c = b.cell_module(&s.label).unwrap();
                assert!(is_isomorphic(&s.summand, &c, 0).unwrap().is_some());
            }
        }
        let f5 = PrimeField::new(5);
        let b = BModules::new(WalledBrauer::new(&f5, 2, 2, f5.from_i64(2)).unwrap(), 1);
        let x = lab(1, &[1], &[1]);
        let y = b.young_decomposition(&x, 1).unwrap();
        assert!(y.is_valid(), "{:?}", y.violations);
        assert_eq!(y.label_multiset()[&x], 1);
    }

    #[test]
    fn layer_dimensions() {
        assert_eq!(layer_dimension_by_diagrams(2, 2, 0, 1).unwrap(), 4);
        assert_eq!(layer_dimension_by_diagrams(3, 2, 1, 2).unwrap(), 2);
        assert_eq!(layer_dimension_by_diagrams(2, 2, 0, 2).unwrap(), 2);
        assert_eq!(layer_dimension_by_cosets(3, 3, 0, 2).unwrap(), 18);
        assert_eq!(layer_formula(3, 3, 0, 2), 18);
        assert!(matches!(layer_dimension_by_cosets(2, 2, 1, 1), Err(Error::LayerOutOfRange(..))));
    }

    #[test]
    fn layer_lemmas_small() {
        let b = over_q(2, 2, 2);
        for (l, m) in [(0, 1), (0, 2), (1, 2)] {
            let rep = b.verify_layer_lemmas(l, m).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn report_schema() {
        let b = over_q(1, 1, 5);
        let x = lab(1, &[], &[]);
        let y = b.young_decomposition(&x, 0).unwrap();
        let j = serde_json::to_value(b.report_json(&x, Some(&y), None, 0)).unwrap();
        assert_eq!(j["algebra"]["r"], 1);
        assert_eq!(j["label"]["l"], 1);
        assert_eq!(j["summands"].as_array().unwrap().len(), 1);
        assert_eq!(j["seed"], 0);
    }
}
