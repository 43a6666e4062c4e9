//! Right modules given by generator matrices, and the linear algebra on
//! them: homomorphism spaces, Krull–Schmidt decomposition, isomorphism
//! tests, submodules, quotients and tensor products over a subalgebra.
//!
//! A module of dimension `d` is a list of `d × d` matrices, one per named
//! generator, acting on row vectors from the right. A homomorphism
//! `φ: M → N` is a `dim M × dim N` matrix with `ρ_M(g)·φ = φ·ρ_N(g)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::coeffs::{Field, FieldSpec};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::poly;

pub const MAX_DECOMPOSE_DIM: usize = 600;

#[derive(Clone, Debug)]
pub struct ModuleRep<F: Field> {
    field: F,
    algebra: Arc<str>,
    names: Arc<[String]>,
    dim: usize,
    actions: Vec<Mat<F>>,
}

impl<F: Field> ModuleRep<F> {
    pub fn new(field: &F, algebra: impl Into<Arc<str>>, names: Arc<[String]>, dim: usize, actions: Vec<Mat<F>>) -> Self {
        assert_eq!(names.len(), actions.len(), "one matrix per generator");
        for a in &actions {
            assert!(a.rows() == dim && a.cols() == dim, "action matrix has the wrong shape");
        }
        ModuleRep { field: field.clone(), algebra: algebra.into(), names, dim, actions }
    }

    /// Same algebra and generators, new matrices.
    pub fn with_actions(&self, dim: usize, actions: Vec<Mat<F>>) -> Self {
        ModuleRep::new(&self.field, self.algebra.clone(), self.names.clone(), dim, actions)
    }

    pub fn zero_like(&self) -> Self {
        let actions = self.names.iter().map(|_| Mat::zeros(&self.field, 0, 0)).collect();
        self.with_actions(0, actions)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn algebra(&self) -> &str {
        &self.algebra
    }
    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn actions(&self) -> &[Mat<F>] {
        &self.actions
    }
    pub fn action(&self, i: usize) -> &Mat<F> {
        &self.actions[i]
    }

    pub fn action_by_name(&self, name: &str) -> Option<&Mat<F>> {
        self.names.iter().position(|n| n == name).map(|i| &self.actions[i])
    }

    pub fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra || self.names != other.names {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Matrix of a word in the generators, read left to right.
    pub fn word(&self, word: &[usize]) -> Mat<F> {
        let mut m = Mat::identity(&self.field, self.dim);
        for &g in word {
            m = m.mul(&self.actions[g]);
        }
        m
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let d = self.dim + other.dim;
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let mut m = Mat::zeros(&self.field, d, d);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(self.with_actions(d, actions))
    }

    /// Actions in a new basis whose vectors are the rows of `p` (invertible).
    pub fn change_basis(&self, p: &Mat<F>) -> Self {
        let pinv = p.inverse().expect("change of basis must be invertible");
        let actions = self.actions.iter().map(|a| p.mul(a).mul(&pinv)).collect();
        self.with_actions(self.dim, actions)
    }

    /// Induced module on an invariant subspace, or `NotInvariant`.
    pub fn restrict(&self, sub: &Subspace<F>) -> Result<Self> {
        let basis = sub.basis();
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let img = basis.mul(a);
            let mut rows = Vec::with_capacity(sub.dim());
            for i in 0..img.rows() {
                rows.push(sub.coords(img.row(i)).ok_or(Error::NotInvariant)?);
            }
            actions.push(Mat::from_rows(&self.field, sub.dim(), rows));
        }
        Ok(self.with_actions(sub.dim(), actions))
    }

    /// True iff every generator maps the span into itself.
    pub fn is_invariant(&self, sub: &Subspace<F>) -> bool {
        let basis = sub.basis();
        self.actions.iter().all(|a| {
            let img = basis.mul(a);
            (0..img.rows()).all(|i| sub.contains(img.row(i)))
        })
    }

    /// Checks that `phi` intertwines the actions of `self` and `other`.
    pub fn is_hom_to(&self, other: &Self, phi: &Mat<F>) -> bool {
        self.actions.iter().zip(&other.actions).all(|(a, b)| a.mul(phi) == phi.mul(b))
    }
}

/// Block action matrix `[A 0; 0 B]` style helpers for outer tensors.
pub fn outer_tensor<F: Field>(
    left: &ModuleRep<F>,
    right: &ModuleRep<F>,
    algebra: impl Into<Arc<str>>,
) -> ModuleRep<F> {
    let f = left.field();
    let il = Mat::identity(f, left.dim());
    let ir = Mat::identity(f, right.dim());
    let mut names: Vec<String> = left.names().to_vec();
    names.extend(right.names().iter().cloned());
    let mut actions: Vec<Mat<F>> = left.actions().iter().map(|a| a.kron(&ir)).collect();
    actions.extend(right.actions().iter().map(|b| il.kron(b)));
    ModuleRep::new(f, algebra, names.into(), left.dim() * right.dim(), actions)
}

#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Mat<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combine(&self, coeffs: &[F::Elem]) -> Mat<F> {
        let f = self.basis[0].field().clone();
        let mut m = Mat::zeros(&f, self.source_dim, self.target_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !f.is_zero(c) {
                m.add_scaled(c, b);
            }
        }
        m
    }
}

struct Spin<F: Field> {
    /// spin vectors as rows
    basis: Mat<F>,
    /// `None` for a seed, else (parent index, generator)
    origin: Vec<Option<(usize, usize)>>,
    seeds: Vec<usize>,
    /// (vector index, generator) pairs whose image was already in the span
    closing: Vec<(usize, usize)>,
}

fn spin<F: Field>(m: &ModuleRep<F>) -> Spin<F> {
    let f = m.field();
    let d = m.dim();
    let mut span = Subspace::new(f, d);
    let mut basis = Mat::zeros(f, 0, d);
    let mut origin = Vec::new();
    let mut seeds = Vec::new();
    let mut closing = Vec::new();
    let mut next_unit = 0;
    while basis.rows() < d {
        while span.contains(&unit(f, d, next_unit)) {
            next_unit += 1;
        }
        let u = unit(f, d, next_unit);
        span.insert(&u);
        seeds.push(basis.rows());
        basis.push_row(u);
        origin.push(None);
        let mut head = basis.rows() - 1;
        while head < basis.rows() {
            for g in 0..m.actions().len() {
                let w = m.action(g).vec_mul(basis.row(head));
                if span.insert(&w) {
                    basis.push_row(w);
                    origin.push(Some((head, g)));
                } else {
                    closing.push((head, g));
                }
            }
            head += 1;
        }
    }
    Spin { basis, origin, seeds, closing }
}

fn unit<F: Field>(f: &F, d: usize, i: usize) -> Vec<F::Elem> {
    (0..d).map(|j| if j == i { f.one() } else { f.zero() }).collect()
}

/// Every homomorphism `M → N`.
pub fn hom_space<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<HomSpace<F>> {
    m.same_algebra(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return Ok(HomSpace { source_dim: dm, target_dim: dn, basis: Vec::new() });
    }
    let sp = spin(m);
    let tinv = sp.basis.inverse().expect("spin basis spans the module");
    let s = sp.seeds.len();
    let mut kdim = s * dn;
    // img[j] is kdim × dn: image of spin vector j under each candidate.
    let mut img: Vec<Mat<F>> = Vec::with_capacity(dm);
    let mut seed_no = 0;
    for j in 0..dm {
        match sp.origin[j] {
            None => {
                let mut block = Mat::zeros(f, kdim, dn);
                for a in 0..dn {
                    block.set(seed_no * dn + a, a, f.one());
                }
                seed_no += 1;
                img.push(block);
            }
            Some((parent, g)) => {
                let b = img[parent].mul(n.action(g));
                img.push(b);
            }
        }
    }
    let mut pending: Vec<Mat<F>> = Vec::new();
    let mut width = 0;
    let flush = |pending: &mut Vec<Mat<F>>, img: &mut Vec<Mat<F>>, kdim: &mut usize| {
        if pending.is_empty() {
            return;
        }
        let cols: usize = pending.iter().map(|p| p.cols()).sum();
        let mut z = Mat::zeros(f, *kdim, cols);
        let mut c0 = 0;
        for p in pending.iter() {
            for i in 0..p.rows() {
                for j in 0..p.cols() {
                    z.set(i, c0 + j, p.get(i, j).clone());
                }
            }
            c0 += p.cols();
        }
        pending.clear();
        let l = z.left_kernel();
        for b in img.iter_mut() {
            *b = l.mul(b);
        }
        *kdim = l.rows();
    };
    for &(j, g) in &sp.closing {
        if kdim == 0 {
            break;
        }
        let w = m.action(g).vec_mul(sp.basis.row(j));
        let c = tinv.vec_mul(&w);
        let mut z = img[j].mul(n.action(g));
        for (i, ci) in c.iter().enumerate() {
            if !f.is_zero(ci) {
                z.add_scaled(&f.neg(ci), &img[i]);
            }
        }
        if z.is_zero() {
            continue;
        }
        width += z.cols();
        pending.push(z);
        if width >= 2 * kdim.max(1) {
            flush(&mut pending, &mut img, &mut kdim);
            width = 0;
        }
    }
    flush(&mut pending, &mut img, &mut kdim);
    let mut basis = Vec::with_capacity(kdim);
    for k in 0..kdim {
        let rows: Vec<Vec<F::Elem>> = img.iter().map(|b| b.row_vec(k)).collect();
        let phi_spin = Mat::from_rows(f, dn, rows);
        basis.push(tinv.mul(&phi_spin));
    }
    Ok(HomSpace { source_dim: dm, target_dim: dn, basis })
}

pub fn end_algebra<F: Field>(m: &ModuleRep<F>) -> Result<HomSpace<F>> {
    hom_space(m, m)
}

/// The unique eigenvalue `c` when `f - c` is nilpotent.
fn scalar_part<F: Field>(f: &Mat<F>) -> Option<F::Elem> {
    let fld = f.field();
    let d = f.rows();
    let candidates: Vec<F::Elem> = match fld.inv(&fld.from_i64(d as i64)) {
        Some(inv) => vec![fld.mul(&f.trace(), &inv)],
        None => fld.elements().unwrap_or_default(),
    };
    candidates.into_iter().find(|c| is_nilpotent(&f.sub_scalar_identity(c)))
}

pub fn is_nilpotent<F: Field>(g: &Mat<F>) -> bool {
    let mut sub = Subspace::from_mat(g);
    loop {
        if sub.dim() == 0 {
            return true;
        }
        let next = Subspace::from_mat(&sub.basis().mul(g));
        if next.dim() == sub.dim() {
            return false;
        }
        sub = next;
    }
}

/// Local endomorphism ring test: every basis element is a scalar plus a
/// nilpotent, and the nilpotent parts generate a nilpotent algebra.
pub fn is_local<F: Field>(m: &ModuleRep<F>, end: &HomSpace<F>) -> bool {
    if m.dim() == 0 {
        return false;
    }
    let mut nils = Vec::new();
    for e in &end.basis {
        match scalar_part(e) {
            Some(c) => {
                let n = e.sub_scalar_identity(&c);
                if !n.is_zero() {
                    nils.push(n);
                }
            }
            None => return false,
        }
    }
    let f = m.field();
    let mut w = Subspace::from_mat(&Mat::identity(f, m.dim()));
    for _ in 0..=m.dim() {
        if w.dim() == 0 {
            return true;
        }
        let mut next = Subspace::new(f, m.dim());
        let b = w.basis();
        for n in &nils {
            let img = b.mul(n);
            for i in 0..img.rows() {
                next.insert(img.row(i));
            }
        }
        w = next;
    }
    w.dim() == 0
}

/// Stable kernel and image of `g` (Fitting decomposition).
pub fn fitting<F: Field>(g: &Mat<F>) -> (Subspace<F>, Subspace<F>) {
    let f = g.field();
    let d = g.rows();
    let mut image = Subspace::from_mat(&Mat::identity(f, d));
    loop {
        let next = Subspace::from_mat(&image.basis().mul(g));
        if next.dim() == image.dim() {
            break;
        }
        image = next;
    }
    let mut kernel = Subspace::new(f, d);
    loop {
        // x with x·g ∈ kernel
        let non = kernel.non_pivots();
        let mut q = Mat::zeros(f, d, non.len());
        for u in 0..d {
            let mut row = g.row_vec(u);
            kernel.reduce(&mut row);
            for (c, &j) in non.iter().enumerate() {
                q.set(u, c, row[j].clone());
            }
        }
        let next = Subspace::from_mat(&q.left_kernel());
        if next.dim() == kernel.dim() {
            break;
        }
        kernel = next;
    }
    (kernel, image)
}

fn random_combination<F: Field, R: Rng>(end: &HomSpace<F>, rng: &mut R, bound: i64) -> Mat<F> {
    let f = end.basis[0].field().clone();
    let coeffs: Vec<F::Elem> = end.basis.iter().map(|_| f.random(rng, bound)).collect();
    end.combine(&coeffs)
}

fn proper_split<F: Field>(g: &Mat<F>) -> Option<(Subspace<F>, Subspace<F>)> {
    let (k, i) = fitting(g);
    let d = g.rows();
    (!(k.dim() == 0 || k.dim() == d)).then_some((k, i))
}

fn split_by_eigenvalues<F: Field, R: Rng>(fm: &Mat<F>, rng: &mut R) -> Option<(Subspace<F>, Subspace<F>)> {
    let f = fm.field();
    let d = fm.rows();
    let v: Vec<F::Elem> = (0..d).map(|_| f.random(rng, 3)).collect();
    let mp = poly::krylov_min_poly(fm, &v);
    for c in f.roots(&mp) {
        if let Some(s) = proper_split(&fm.sub_scalar_identity(&c)) {
            return Some(s);
        }
    }
    None
}

/// Common eigenspace of several generators, cut down greedily.
fn small_eigen_intersection<F: Field, R: Rng>(m: &ModuleRep<F>, rng: &mut R) -> Subspace<F> {
    let f = m.field();
    let d = m.dim();
    let mut w = Subspace::from_mat(&Mat::identity(f, d));
    for a in m.actions() {
        let v: Vec<F::Elem> = (0..d).map(|_| f.random(rng, 3)).collect();
        let mp = poly::krylov_min_poly(a, &v);
        let mut best: Option<Subspace<F>> = None;
        for c in f.roots(&mp) {
            let eig = Subspace::from_mat(&a.sub_scalar_identity(&c).left_kernel());
            let meet = w.intersect(&eig);
            if meet.dim() > 0 && best.as_ref().is_none_or(|b| meet.dim() < b.dim()) {
                best = Some(meet);
            }
        }
        if let Some(b) = best {
            w = b;
        }
    }
    w
}

/// Splitting of a module with non-local endomorphism ring, or `None` when
/// the randomized strategies all fail.
fn find_split<F: Field, R: Rng>(m: &ModuleRep<F>, end: &HomSpace<F>, rng: &mut R) -> Option<(Subspace<F>, Subspace<F>)> {
    let bound = 1000;
    for e in &end.basis {
        if scalar_part(e).is_none() {
            if let Some(s) = split_by_eigenvalues(e, rng) {
                return Some(s);
            }
        }
    }
    for _ in 0..24 {
        let fm = random_combination(end, rng, bound);
        if let Some(s) = split_by_eigenvalues(&fm, rng) {
            return Some(s);
        }
    }
    // Endomorphisms killing a vector from a small common eigenspace are
    // singular; compose with random ones to find a non-nilpotent singular map.
    let f = m.field();
    let d = m.dim();
    for _ in 0..16 {
        let w = small_eigen_intersection(m, rng);
        let wb = w.basis();
        let coeffs: Vec<F::Elem> = (0..wb.rows()).map(|_| f.random(rng, 3)).collect();
        let x = wb.vec_mul(&coeffs);
        if x.iter().all(|c| f.is_zero(c)) {
            continue;
        }
        // rows: basis index k, cols: coordinates of x·f_k
        let ann = Mat::from_rows(f, d, end.basis.iter().map(|e| e.vec_mul(&x)).collect()).left_kernel();
        for row in 0..ann.rows() {
            let a = end.combine(ann.row(row));
            for _ in 0..4 {
                let g = random_combination(end, rng, bound);
                for h in [a.mul(&g), g.mul(&a)] {
                    if let Some(s) = proper_split(&h) {
                        return Some(s);
                    }
                }
            }
        }
    }
    // Random elements of the centre.
    let k = end.dim();
    let mut conds = Mat::zeros(f, k, 0);
    for e in &end.basis {
        let mut cols = Mat::zeros(f, k, d * d);
        for (i, b) in end.basis.iter().enumerate() {
            let c = b.mul(e).sub(&e.mul(b));
            for (j, v) in (0..d).flat_map(|r| (0..d).map(move |s| (r, s))).enumerate() {
                cols.set(i, j, c.get(v.0, v.1).clone());
            }
        }
        conds = hcat(&conds, &cols);
    }
    let centre = conds.left_kernel();
    for _ in 0..16 {
        let coeffs: Vec<F::Elem> = (0..centre.rows()).map(|_| f.random(rng, bound)).collect();
        let c = centre.vec_mul(&coeffs);
        let z = end.combine(&c);
        if let Some(s) = split_by_eigenvalues(&z, rng) {
            return Some(s);
        }
    }
    None
}

fn hcat<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let f = a.field();
    Mat::from_rows(f, a.cols() + b.cols(), (0..a.rows()).map(|i| {
        let mut r = a.row_vec(i);
        r.extend(b.row(i).iter().cloned());
        r
    }).collect())
}

/// One indecomposable summand: its basis inside the ambient module and the
/// induced module.
#[derive(Clone, Debug)]
pub struct Piece<F: Field> {
    pub basis: Mat<F>,
    pub module: ModuleRep<F>,
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct SummandClass<F: Field> {
    pub module: ModuleRep<F>,
    pub dim: usize,
    pub multiplicity: usize,
    pub label: Option<String>,
    pub pieces: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport<F: Field> {
    pub dim: usize,
    pub field: FieldSpec,
    pub seed: u64,
    pub pieces: Vec<Piece<F>>,
    pub classes: Vec<SummandClass<F>>,
    /// Rows are the concatenated piece bases.
    pub certificate: Mat<F>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SummandJson {
    pub dim: usize,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct DecompositionJson {
    pub dim: usize,
    pub field: String,
    pub seed: u64,
    pub summands: Vec<SummandJson>,
    pub certificate_hash: String,
}

impl<F: Field> DecompositionReport<F> {
    pub fn certificate_hash(&self) -> String {
        let f = self.certificate.field();
        let mut h = Sha256::new();
        h.update(format!("{}x{};", self.certificate.rows(), self.certificate.cols()));
        for i in 0..self.certificate.rows() {
            for e in self.certificate.row(i) {
                h.update(f.display(e).as_bytes());
                h.update(b",");
            }
            h.update(b";");
        }
        hex::encode(h.finalize())
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            dim: self.dim,
            field: self.field.to_string(),
            seed: self.seed,
            summands: self
                .classes
                .iter()
                .map(|c| SummandJson { dim: c.dim, multiplicity: c.multiplicity, label: c.label.clone() })
                .collect(),
            certificate_hash: self.certificate_hash(),
        }
    }

    /// Checks that the certificate block-diagonalizes every action with
    /// blocks equal to the piece modules.
    pub fn verify_certificate(&self, ambient: &ModuleRep<F>) -> bool {
        if self.certificate.rows() != ambient.dim() || !self.certificate.is_invertible() {
            return false;
        }
        let conj = ambient.change_basis(&self.certificate);
        let mut off = 0;
        let mut spans = Vec::new();
        for p in &self.pieces {
            spans.push((off, p.module.dim()));
            off += p.module.dim();
        }
        for (gi, a) in conj.actions().iter().enumerate() {
            for (pi, &(o, d)) in spans.iter().enumerate() {
                for i in o..o + d {
                    for j in 0..a.cols() {
                        let inside = j >= o && j < o + d;
                        let v = a.get(i, j);
                        if inside {
                            if *v != *self.pieces[pi].module.action(gi).get(i - o, j - o) {
                                return false;
                            }
                        } else if !a.field().is_zero(v) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.classes.iter().map(|c| (c.dim, c.multiplicity)).collect();
        v.sort();
        v
    }
}

/// Pieces of `m`, as bases in the coordinates of `m`.
fn split_recursive<F: Field, R: Rng>(m: &ModuleRep<F>, rng: &mut R, out: &mut Vec<(Mat<F>, ModuleRep<F>)>) -> Result<()> {
    let f = m.field();
    if m.dim() == 0 {
        return Ok(());
    }
    let end = end_algebra(m)?;
    if end.dim() == 1 || is_local(m, &end) {
        out.push((Mat::identity(f, m.dim()), m.clone()));
        return Ok(());
    }
    let (a, b) = find_split(m, &end, rng).ok_or(Error::NonSplitField)?;
    for sub in [a, b] {
        let sm = m.restrict(&sub)?;
        let basis = sub.basis();
        let mut inner = Vec::new();
        split_recursive(&sm, rng, &mut inner)?;
        for (pb, pm) in inner {
            out.push((pb.mul(&basis), pm));
        }
    }
    Ok(())
}

/// Krull–Schmidt decomposition; deterministic for a given seed.
pub fn decompose<F: Field>(m: &ModuleRep<F>, seed: u64) -> Result<DecompositionReport<F>> {
    if m.dim() > MAX_DECOMPOSE_DIM {
        return Err(Error::DimensionTooLarge(m.dim(), MAX_DECOMPOSE_DIM));
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = Vec::new();
    split_recursive(m, &mut rng, &mut raw)?;
    raw.sort_by_key(|(b, _)| b.rows());
    let mut classes: Vec<SummandClass<F>> = Vec::new();
    let mut pieces = Vec::new();
    for (basis, module) in raw {
        let mut class = None;
        for (ci, c) in classes.iter().enumerate() {
            if c.dim == module.dim() && is_isomorphic(&c.module, &module, seed)?.is_some() {
                class = Some(ci);
                break;
            }
        }
        let ci = match class {
            Some(ci) => ci,
            None => {
                classes.push(SummandClass { module: module.clone(), dim: module.dim(), multiplicity: 0, label: None, pieces: Vec::new() });
                classes.len() - 1
            }
        };
        classes[ci].multiplicity += 1;
        classes[ci].pieces.push(pieces.len());
        pieces.push(Piece { basis, module, class: ci });
    }
    let mut certificate = Mat::zeros(f, 0, m.dim());
    for p in &pieces {
        certificate = certificate.vstack(&p.basis);
    }
    Ok(DecompositionReport { dim: m.dim(), field: f.spec(), seed, pieces, classes, certificate })
}

const EXHAUSTIVE_LIMIT: u128 = 100_000;

/// An invertible intertwiner `M → N`, if one exists.
pub fn is_isomorphic<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, seed: u64) -> Result<Option<Mat<F>>> {
    m.same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Mat::zeros(m.field(), 0, 0)));
    }
    let h = hom_space(m, n)?;
    if h.dim() == 0 {
        return Ok(None);
    }
    let back = hom_space(n, m)?;
    if back.dim() != h.dim() {
        return Ok(None);
    }
    let f = m.field();
    if h.dim() == 1 {
        return Ok(h.basis[0].is_invertible().then(|| h.basis[0].clone()));
    }
    if let Some(elems) = f.elements() {
        let q = elems.len() as u128;
        if q.checked_pow(h.dim() as u32).is_some_and(|c| c <= EXHAUSTIVE_LIMIT) {
            let mut idx = vec![0usize; h.dim()];
            loop {
                let coeffs: Vec<F::Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
                let phi = h.combine(&coeffs);
                if phi.is_invertible() {
                    return Ok(Some(phi));
                }
                let mut k = 0;
                loop {
                    if k == idx.len() {
                        return Ok(None);
                    }
                    idx[k] += 1;
                    if idx[k] < elems.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let trials = if f.elements().is_some() { 256 } else { 8 };
    for _ in 0..trials {
        let phi = random_combination(&h, &mut rng, 1000);
        if phi.is_invertible() {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct SubmoduleWitness<F: Field> {
    pub ambient: ModuleRep<F>,
    pub span: Subspace<F>,
    pub module: ModuleRep<F>,
}

impl<F: Field> SubmoduleWitness<F> {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }
    pub fn basis(&self) -> Mat<F> {
        self.span.basis()
    }
}

/// Closure of the given vectors under the action.
pub fn submodule_generated<F: Field>(m: &ModuleRep<F>, vectors: &[Vec<F::Elem>]) -> Result<SubmoduleWitness<F>> {
    let f = m.field();
    let mut span = Subspace::new(f, m.dim());
    let mut queue: Vec<Vec<F::Elem>> = Vec::new();
    for v in vectors {
        if v.len() != m.dim() {
            return Err(Error::IndexOutOfRange(format!("vector of length {} in a {}-dimensional module", v.len(), m.dim())));
        }
        if span.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for a in m.actions() {
            let w = a.vec_mul(&v);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    let module = m.restrict(&span)?;
    Ok(SubmoduleWitness { ambient: m.clone(), span, module })
}

/// Quotient module and the projection matrix `dim M × dim M/W`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub module: ModuleRep<F>,
    pub projection: Mat<F>,
    /// Ambient unit vectors whose images form the quotient basis.
    pub lifts: Vec<usize>,
}

pub fn quotient<F: Field>(m: &ModuleRep<F>, w: &Subspace<F>) -> Result<Quotient<F>> {
    if !m.is_invariant(w) {
        return Err(Error::NotInvariant);
    }
    let f = m.field();
    let d = m.dim();
    let lifts = w.non_pivots();
    let q = lifts.len();
    let mut projection = Mat::zeros(f, d, q);
    for u in 0..d {
        let c = w.quotient_coords(&unit(f, d, u));
        for (j, v) in c.into_iter().enumerate() {
            projection.set(u, j, v);
        }
    }
    let actions = m
        .actions()
        .iter()
        .map(|a| Mat::from_rows(f, q, lifts.iter().map(|&u| w.quotient_coords(a.row(u))).collect()))
        .collect();
    Ok(Quotient { module: m.with_actions(q, actions), projection, lifts })
}

/// Sparse echelon form: each stored row's smallest column is its pivot.
pub struct SparseEchelon<F: Field> {
    field: F,
    pivots: BTreeMap<usize, Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: &F) -> Self {
        SparseEchelon { field: field.clone(), pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// Fully reduced form of `v`: no entry at a pivot column remains.
    pub fn reduce(&self, v: BTreeMap<usize, F::Elem>) -> BTreeMap<usize, F::Elem> {
        let f = &self.field;
        let mut acc = v;
        let mut out = BTreeMap::new();
        while let Some((c, val)) = acc.pop_first() {
            if f.is_zero(&val) {
                continue;
            }
            match self.pivots.get(&c) {
                None => {
                    out.insert(c, val);
                }
                Some(row) => {
                    for (j, rv) in &row[1..] {
                        let e = acc.entry(*j).or_insert_with(|| f.zero());
                        *e = f.sub(e, &f.mul(&val, rv));
                    }
                }
            }
        }
        out
    }

    pub fn insert(&mut self, v: BTreeMap<usize, F::Elem>) -> bool {
        let f = self.field.clone();
        let red = self.reduce(v);
        let Some((&c, lead)) = red.iter().next() else { return false };
        let inv = f.inv(lead).unwrap();
        let row: Vec<(usize, F::Elem)> = red.iter().map(|(j, x)| (*j, f.mul(x, &inv))).collect();
        self.pivots.insert(c, row);
        true
    }
}

/// `(M ⊗ X) / ⟨m·a ⊗ x − m ⊗ a·x⟩` with the right action inherited from `X`.
///
/// `left[k]` is the matrix of the left action of the `k`-th generator of
/// `M`'s algebra on `X`, in the row convention `a·x = x·left[k]`.
pub fn tensor_over_subalgebra<F: Field>(
    m: &ModuleRep<F>,
    left: &[Mat<F>],
    x: &ModuleRep<F>,
) -> Result<TensorProduct<F>> {
    let f = m.field();
    let (dm, dx) = (m.dim(), x.dim());
    if left.len() != m.actions().len() {
        return Err(Error::ActionsIncompatible(format!(
            "{} left actions for {} generators",
            left.len(),
            m.actions().len()
        )));
    }
    for l in left {
        if l.rows() != dx || l.cols() != dx {
            return Err(Error::ActionsIncompatible("left action has the wrong size".into()));
        }
        for b in x.actions() {
            if l.mul(b) != b.mul(l) {
                return Err(Error::ActionsIncompatible("left and right actions do not commute".into()));
            }
        }
    }
    let idx = |i: usize, j: usize| i * dx + j;
    let mut ech = SparseEchelon::new(f);
    for (a, la) in m.actions().iter().zip(left) {
        for i in 0..dm {
            for j in 0..dx {
                let mut row: BTreeMap<usize, F::Elem> = BTreeMap::new();
                for (i2, c) in a.row(i).iter().enumerate() {
                    if !f.is_zero(c) {
                        row.insert(idx(i2, j), c.clone());
                    }
                }
                for (j2, c) in la.row(j).iter().enumerate() {
                    if !f.is_zero(c) {
                        let e = row.entry(idx(i, j2)).or_insert_with(|| f.zero());
                        *e = f.sub(e, c);
                    }
                }
                ech.insert(row);
            }
        }
    }
    let total = dm * dx;
    let free: Vec<usize> = (0..total).filter(|c| !ech.is_pivot(*c)).collect();
    let pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let q = free.len();
    let to_coords = |v: BTreeMap<usize, F::Elem>| -> Vec<F::Elem> {
        let mut out = vec![f.zero(); q];
        for (c, val) in ech.reduce(v) {
            out[pos[&c]] = val;
        }
        out
    };
    let mut actions = Vec::with_capacity(x.actions().len());
    for b in x.actions() {
        let rows = free
            .iter()
            .map(|&c| {
                let (i, j) = (c / dx, c % dx);
                let mut v = BTreeMap::new();
                for (j2, val) in b.row(j).iter().enumerate() {
                    if !f.is_zero(val) {
                        v.insert(idx(i, j2), val.clone());
                    }
                }
                to_coords(v)
            })
            .collect();
        actions.push(Mat::from_rows(f, q, rows));
    }
    let module = x.with_actions(q, actions);
    Ok(TensorProduct { module, free, pos, dx, ech })
}

/// A tensor quotient with the pure tensors `e_i ⊗ f_j` that survive as its
/// basis.
pub struct TensorProduct<F: Field> {
    pub module: ModuleRep<F>,
    free: Vec<usize>,
    pos: BTreeMap<usize, usize>,
    dx: usize,
    ech: SparseEchelon<F>,
}

impl<F: Field> TensorProduct<F> {
    /// Pairs `(i, j)` of the basis tensors.
    pub fn basis_pairs(&self) -> Vec<(usize, usize)> {
        self.free.iter().map(|&c| (c / self.dx, c % self.dx)).collect()
    }

    /// Coordinates of `Σ c·(e_i ⊗ f_j)` in the quotient basis.
    pub fn coords_of(&self, terms: &[((usize, usize), F::Elem)]) -> Vec<F::Elem> {
        let f = self.module.field();
        let mut v: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for ((i, j), c) in terms {
            let e = v.entry(i * self.dx + j).or_insert_with(|| f.zero());
            *e = f.add(e, c);
        }
        let mut out = vec![f.zero(); self.free.len()];
        for (c, val) in self.ech.reduce(v) {
            out[self.pos[&c]] = val;
        }
        out
    }
}
