//! Permutation, Specht, dual Specht and simple modules for `𝔖_a` and for
//! `𝔖_{a,b} = 𝔖_a × 𝔖_b`, and Young modules as labelled summands of the
//! permutation modules `M^{λ,μ}`.
//!
//! Modules of `𝔖_a` are modules of `𝔖_{a,0}`: one construction covers both.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algcore::{group_algebra_tag, product_group_generators};
use crate::coeffs::Field;
use crate::combinat::{bipartitions_of, standard_tableaux, tabloids, Bipartition, Partition, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::modcore::{decompose, is_isomorphic, quotient, DecompositionReport, ModuleRep, SubmoduleWitness};
use crate::symgrp::{Group, Permutation};

pub const MAX_SYM_DEGREE: usize = 8;
pub const MAX_PROD_DEGREE: usize = 6;
pub const MAX_YOUNG_DEGREE: usize = 5;

fn names(a: usize, b: usize) -> Arc<[String]> {
    product_group_generators(a, b).into_iter().map(|(n, _)| n).collect::<Vec<_>>().into()
}

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::DegreeTooLarge(n, max));
    }
    Ok(())
}

/// Permutation matrix of `σ` on the tabloids of `shape`, in `tabloids` order.
pub fn tabloid_action<F: Field>(field: &F, shape: &[usize], sigma: &Permutation) -> Mat<F> {
    let tabs = tabloids(shape);
    let index: HashMap<&Tabloid, usize> = tabs.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = Mat::zeros(field, tabs.len(), tabs.len());
    for (i, t) in tabs.iter().enumerate() {
        m.set(i, index[&t.act(sigma.images())], field.one());
    }
    m
}

/// `M^λ` for a composition `λ` of `a`, on the tabloid basis.
pub fn perm_module_sym<F: Field>(shape: &[usize], field: &F) -> Result<ModuleRep<F>> {
    let a: usize = shape.iter().sum();
    guard(a, MAX_SYM_DEGREE)?;
    let actions = product_group_generators(a, 0).iter().map(|(_, p)| tabloid_action(field, shape, p)).collect();
    Ok(ModuleRep::new(field, group_algebra_tag(field, a, 0), names(a, 0), tabloids(shape).len(), actions))
}

/// `X ⊠ Y` for an `𝔖_a`-module and an `𝔖_b`-module.
pub fn outer_product<F: Field>(x: &ModuleRep<F>, y: &ModuleRep<F>, a: usize, b: usize) -> ModuleRep<F> {
    let f = x.field();
    let ix = Mat::identity(f, x.dim());
    let iy = Mat::identity(f, y.dim());
    let mut actions: Vec<Mat<F>> = x.actions().iter().map(|g| g.kron(&iy)).collect();
    actions.extend(y.actions().iter().map(|g| ix.kron(g)));
    ModuleRep::new(f, group_algebra_tag(f, a, b), names(a, b), x.dim() * y.dim(), actions)
}

/// `M^{λ,μ} = M^λ ⊠ M^μ`, basis pairs of tabloids with the left index slowest.
pub fn perm_module_prod<F: Field>(left: &[usize], right: &[usize], field: &F) -> Result<ModuleRep<F>> {
    let (a, b): (usize, usize) = (left.iter().sum(), right.iter().sum());
    guard(a.max(b), MAX_PROD_DEGREE)?;
    Ok(outer_product(&perm_module_sym(left, field)?, &perm_module_sym(right, field)?, a, b))
}

fn column_group(t: &Tableau) -> Result<Vec<Permutation>> {
    let n = t.size();
    let gens: Vec<Permutation> = t
        .columns()
        .iter()
        .flat_map(|c| c.windows(2).map(|w| Permutation::transposition(n, w[0], w[1])).collect::<Vec<_>>())
        .collect();
    Ok(Group::new(n, gens)?.elements())
}

/// `e_t = {t}·Σ_{σ ∈ C_t} sgn(σ) σ` in the coordinates of `M^λ`.
pub fn polytabloid<F: Field>(t: &Tableau, field: &F) -> Result<Vec<F::Elem>> {
    let shape = t.shape();
    let tabs = tabloids(shape.parts());
    let index: HashMap<&Tabloid, usize> = tabs.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let base = t.tabloid();
    let mut v = vec![field.zero(); tabs.len()];
    for sigma in column_group(t)? {
        let i = index[&base.act(sigma.images())];
        v[i] = field.add(&v[i], &field.from_i64(sigma.sign()));
    }
    Ok(v)
}

/// Matrix of the signed column sum `k_t` acting on `M^λ`.
pub fn column_sum<F: Field>(t: &Tableau, field: &F) -> Result<Mat<F>> {
    let shape = t.shape();
    let d = tabloids(shape.parts()).len();
    let mut k = Mat::zeros(field, d, d);
    for sigma in column_group(t)? {
        k.add_scaled(&field.from_i64(sigma.sign()), &tabloid_action(field, shape.parts(), &sigma));
    }
    Ok(k)
}

/// `S^λ ⊆ M^λ`, spanned by the standard polytabloids.
pub fn specht_module<F: Field>(lambda: &Partition, field: &F) -> Result<SubmoduleWitness<F>> {
    let m = perm_module_sym(lambda.parts(), field)?;
    let vecs = standard_tableaux(lambda).iter().map(|t| polytabloid(t, field)).collect::<Result<Vec<_>>>()?;
    crate::modcore::submodule_generated(&m, &vecs)
}

/// Every generator action multiplied by its sign, `−1`.
pub fn sign_twist<F: Field>(m: &ModuleRep<F>) -> ModuleRep<F> {
    let f = m.field();
    let minus = f.from_i64(-1);
    m.with_actions(m.dim(), m.actions().iter().map(|a| a.scale(&minus)).collect())
}

/// `S_λ ≅ S^{λ'} ⊗ sgn`.
pub fn dual_specht<F: Field>(lambda: &Partition, field: &F) -> Result<ModuleRep<F>> {
    Ok(sign_twist(&specht_module(&lambda.conjugate(), field)?.module))
}

fn product_vectors<F: Field>(field: &F, xs: &[Vec<F::Elem>], ys: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| x.iter().flat_map(|a| y.iter().map(move |b| field.mul(a, b))).collect()))
        .collect()
}

/// `S^{λ,μ} ⊆ M^{λ,μ}`, spanned by `e_s ⊠ e_u` for standard `s`, `u`.
pub fn specht_prod<F: Field>(shape: &Bipartition, field: &F) -> Result<SubmoduleWitness<F>> {
    let m = perm_module_prod(shape.left.parts(), shape.right.parts(), field)?;
    let side = |p: &Partition| standard_tableaux(p).iter().map(|t| polytabloid(t, field)).collect::<Result<Vec<_>>>();
    let vecs = product_vectors(field, &side(&shape.left)?, &side(&shape.right)?);
    crate::modcore::submodule_generated(&m, &vecs)
}

/// `e_{t_λ} ⊠ e_{t_μ}` for the row-reading initial tableaux.
pub fn specht_vector_prod<F: Field>(shape: &Bipartition, field: &F) -> Result<Vec<F::Elem>> {
    let l = polytabloid(&Tableau::initial(&shape.left), field)?;
    let r = polytabloid(&Tableau::initial(&shape.right), field)?;
    Ok(product_vectors(field, &[l], &[r]).remove(0))
}

/// `k_{t_λ} ⊗ k_{t_μ}` acting on `M^{λ,μ}`.
pub fn column_sum_prod<F: Field>(shape: &Bipartition, field: &F) -> Result<Mat<F>> {
    Ok(column_sum(&Tableau::initial(&shape.left), field)?.kron(&column_sum(&Tableau::initial(&shape.right), field)?))
}

pub fn dual_specht_prod<F: Field>(shape: &Bipartition, field: &F) -> Result<ModuleRep<F>> {
    let (a, b) = shape.sizes();
    guard(a.max(b), MAX_PROD_DEGREE)?;
    Ok(outer_product(&dual_specht(&shape.left, field)?, &dual_specht(&shape.right, field)?, a, b))
}

/// `rad S = S ∩ S^⊥` for the form making the ambient basis orthonormal, in
/// the coordinates of `S`.
pub fn form_radical<F: Field>(s: &SubmoduleWitness<F>) -> Subspace<F> {
    let b = s.basis();
    Subspace::from_mat(&b.mul(&b.transpose()).left_kernel())
}

/// `D^{λ,μ} = S^{λ,μ} / rad S^{λ,μ}` for `p`-regular `λ`, `μ`.
pub fn simple_head<F: Field>(shape: &Bipartition, field: &F) -> Result<ModuleRep<F>> {
    let p = field.spec().characteristic();
    if p != 0 && !shape.is_p_regular(p) {
        return Err(Error::NotPRegular(shape.to_string(), p));
    }
    let s = specht_prod(shape, field)?;
    let rad = form_radical(&s);
    Ok(quotient(&s.module, &rad)?.module)
}

/// Young modules already identified, keyed by shape.
pub struct YoungCatalog<F: Field> {
    field: F,
    seed: u64,
    modules: Mutex<HashMap<Bipartition, ModuleRep<F>>>,
}

#[derive(Clone, Debug)]
pub struct YoungReport<F: Field> {
    pub shape: Bipartition,
    pub report: DecompositionReport<F>,
    /// Label of each class of `report`, in class order.
    pub labels: Vec<Bipartition>,
}

impl<F: Field> YoungReport<F> {
    pub fn multiplicities(&self) -> HashMap<Bipartition, usize> {
        let mut out = HashMap::new();
        for (c, l) in self.report.classes.iter().zip(&self.labels) {
            *out.entry(l.clone()).or_insert(0) += c.multiplicity;
        }
        out
    }
}

impl<F: Field> YoungCatalog<F> {
    pub fn new(field: &F, seed: u64) -> Result<Self> {
        field.spec().require_char_not_2_3()?;
        Ok(YoungCatalog { field: field.clone(), seed, modules: Mutex::new(HashMap::new()) })
    }

    /// `Y^{λ,μ}`: the summand of `M^{λ,μ}` not killed by the signed column sum.
    pub fn young_module(&self, shape: &Bipartition) -> Result<ModuleRep<F>> {
        if let Some(m) = self.modules.lock().unwrap().get(shape) {
            return Ok(m.clone());
        }
        let (a, b) = shape.sizes();
        guard(a.max(b), MAX_YOUNG_DEGREE)?;
        let m = perm_module_prod(shape.left.parts(), shape.right.parts(), &self.field)?;
        let rep = decompose(&m, self.seed)?;
        let k = column_sum_prod(shape, &self.field)?;
        let hits: Vec<_> = rep.pieces.iter().filter(|p| !p.basis.mul(&k).is_zero()).collect();
        if hits.len() != 1 {
            return Err(Error::CheckFailed(format!("{} summands of M^{shape} meet the Specht vector", hits.len())));
        }
        let y = hits[0].module.clone();
        self.modules.lock().unwrap().insert(shape.clone(), y.clone());
        Ok(y)
    }

    /// Decomposition of `M^{λ,μ}` with every summand labelled by the shape of
    /// the Young module it is isomorphic to.
    pub fn young_modules_prod(&self, shape: &Bipartition, seed: u64) -> Result<YoungReport<F>> {
        let (a, b) = shape.sizes();
        guard(a.max(b), MAX_YOUNG_DEGREE)?;
        let f = &self.field;
        let m = perm_module_prod(shape.left.parts(), shape.right.parts(), f)?;
        let mut report = decompose(&m, seed)?;
        let k = column_sum_prod(shape, f)?;
        let mut above: Vec<Bipartition> =
            bipartitions_of(a, b).into_iter().filter(|x| x != shape && x.dominates(shape)).collect();
        above.sort_by(|x, y| y.cmp(x));
        let mut labels = Vec::with_capacity(report.classes.len());
        for class in &mut report.classes {
            let own = class.pieces.iter().any(|&i| !report.pieces[i].basis.mul(&k).is_zero());
            let label = if own {
                if class.multiplicity != 1 {
                    return Err(Error::CheckFailed(format!("Y^{shape} appears {} times", class.multiplicity)));
                }
                shape.clone()
            } else {
                let mut found = Vec::new();
                for x in &above {
                    let y = self.young_module(x)?;
                    if y.dim() == class.dim && is_isomorphic(&y, &class.module, seed)?.is_some() {
                        found.push(x.clone());
                    }
                }
                if found.len() != 1 {
                    return Err(Error::LabelAmbiguous(format!(
                        "a summand of M^{shape} of dim {} matches {} Young modules",
                        class.dim,
                        found.len()
                    )));
                }
                found.remove(0)
            };
            class.label = Some(label.to_string());
            labels.push(label);
        }
        Ok(YoungReport { shape: shape.clone(), report, labels })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{PrimeField, Rationals};
    use crate::combinat::partitions_of;
    use crate::modcore::hom_space;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec())
    }
    fn bip(l: &[usize], r: &[usize]) -> Bipartition {
        Bipartition::new(part(l), part(r))
    }

    #[test]
    fn permutation_module_dims() {
        let q = Rationals;
        let m = perm_module_sym(&[3], &q).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.actions().iter().all(|a| a == &Mat::identity(&q, 1)));
        let m = perm_module_sym(&[1, 1], &q).unwrap();
        assert_eq!(m.action(0), &Mat::from_i64(&q, &[&[0, 1], &[1, 0]]));
        assert_eq!(perm_module_sym(&[2, 1], &q).unwrap().dim(), 3);
        assert_eq!(perm_module_prod(&[2], &[1], &q).unwrap().dim(), 1);
        assert_eq!(perm_module_prod(&[1, 1], &[1], &q).unwrap().dim(), 2);
        assert_eq!(perm_module_prod(&[2, 1], &[1, 1], &q).unwrap().dim(), 6);
        assert!(matches!(perm_module_sym(&[9], &q), Err(Error::DegreeTooLarge(9, 8))));
    }

    #[test]
    fn polytabloids() {
        let q = Rationals;
        let t = Tableau::new(vec![vec![1], vec![2]]).unwrap();
        // tabloids of (1,1) in row-index order: {1|2} then {2|1}
        assert_eq!(polytabloid(&t, &q).unwrap(), vec![q.one(), q.from_i64(-1)]);
        let v = polytabloid(&Tableau::initial(&part(&[2, 1])), &q).unwrap();
        let nz: Vec<_> = v.iter().filter(|x| !q.is_zero(x)).cloned().collect();
        assert_eq!(nz, vec![q.one(), q.from_i64(-1)]);
        let v = polytabloid(&Tableau::initial(&part(&[3])), &q).unwrap();
        assert_eq!(v, vec![q.one()]);
    }

    #[test]
    fn specht_dims_do_not_depend_on_the_field() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                let want = standard_tableaux(&l).len();
                assert_eq!(specht_module(&l, &Rationals).unwrap().dim(), want);
                assert_eq!(specht_module(&l, &PrimeField::new(2)).unwrap().dim(), want);
                assert_eq!(specht_module(&l, &PrimeField::new(5)).unwrap().dim(), want);
                assert_eq!(dual_specht(&l, &PrimeField::new(3)).unwrap().dim(), want);
            }
        }
    }

    #[test]
    fn dual_specht_examples() {
        let q = Rationals;
        assert_eq!(dual_specht(&part(&[3]), &q).unwrap().dim(), 1);
        assert_eq!(dual_specht(&part(&[3, 1]), &q).unwrap().dim(), 3);
        let s = specht_module(&part(&[2, 1]), &q).unwrap().module;
        let d = dual_specht(&part(&[2, 1]), &q).unwrap();
        assert!(is_isomorphic(&s, &d, 0).unwrap().is_some());
        assert_eq!(dual_specht_prod(&bip(&[2, 1], &[2]), &q).unwrap().dim(), 2);
        assert_eq!(specht_prod(&bip(&[2, 1], &[2]), &q).unwrap().dim(), 2);
    }

    #[test]
    fn specht_vector_generates() {
        let q = Rationals;
        let shape = bip(&[2, 1], &[1, 1]);
        let s = specht_prod(&shape, &q).unwrap();
        let v = specht_vector_prod(&shape, &q).unwrap();
        let gen = crate::modcore::submodule_generated(&s.ambient, &[v.clone()]).unwrap();
        assert_eq!(gen.dim(), s.dim());
        // M·k is the line through the Specht vector
        let k = column_sum_prod(&shape, &q).unwrap();
        let img = Subspace::from_mat(&k);
        assert_eq!(img.dim(), 1);
        assert!(img.contains(&v));
    }

    #[test]
    fn form_is_invariant() {
        let f = PrimeField::new(5);
        let m = perm_module_prod(&[2, 1], &[1, 1], &f).unwrap();
        for a in m.actions() {
            assert_eq!(a.mul(&a.transpose()), Mat::identity(&f, m.dim()));
        }
    }

    #[test]
    fn simple_heads() {
        let f5 = PrimeField::new(5);
        assert_eq!(simple_head(&bip(&[3], &[2]), &f5).unwrap().dim(), 1);
        assert_eq!(simple_head(&bip(&[2, 1], &[1]), &f5).unwrap().dim(), 2);
        let f2 = PrimeField::new(2);
        assert!(matches!(simple_head(&bip(&[1, 1], &[1]), &f2), Err(Error::NotPRegular(_, 2))));
        // (2,1) in characteristic 3 has a one-dimensional head
        assert_eq!(simple_head(&bip(&[2, 1], &[]), &PrimeField::new(3)).unwrap().dim(), 1);
    }

    #[test]
    fn young_modules_in_characteristic_zero() {
        let q = Rationals;
        let cat = YoungCatalog::new(&q, 0).unwrap();
        let rep = cat.young_modules_prod(&bip(&[1, 1], &[1]), 3).unwrap();
        let mult = rep.multiplicities();
        assert_eq!(mult.len(), 2);
        assert_eq!(mult[&bip(&[1, 1], &[1])], 1);
        assert_eq!(mult[&bip(&[2], &[1])], 1);
        // semisimple: every summand is a Specht module
        let m = perm_module_prod(&[2, 1], &[1, 1], &q).unwrap();
        let rep = decompose(&m, 5).unwrap();
        let total: usize = rep.classes.iter().map(|c| c.dim * c.multiplicity).sum();
        assert_eq!(total, m.dim());
        let spechts: Vec<_> = bipartitions_of(3, 2).iter().map(|x| specht_prod(x, &q).unwrap().module).collect();
        for c in &rep.classes {
            assert!(spechts.iter().any(|s| is_isomorphic(s, &c.module, 0).unwrap().is_some()));
        }
    }

    #[test]
    fn young_multiplicities_factor() {
        let f = PrimeField::new(5);
        let cat = YoungCatalog::new(&f, 0).unwrap();
        for shape in bipartitions_of(3, 2) {
            let both = cat.young_modules_prod(&shape, 1).unwrap().multiplicities();
            let left = cat.young_modules_prod(&Bipartition::new(shape.left.clone(), Partition::empty()), 1).unwrap().multiplicities();
            let right = cat.young_modules_prod(&Bipartition::new(Partition::empty(), shape.right.clone()), 1).unwrap().multiplicities();
            assert_eq!(both[&shape], 1);
            for (x, m) in &both {
                let a = left[&Bipartition::new(x.left.clone(), Partition::empty())];
                let b = right[&Bipartition::new(Partition::empty(), x.right.clone())];
                assert_eq!(*m, a * b, "{shape} at {x}");
            }
            assert_eq!(both.len(), left.len() * right.len());
        }
    }

    #[test]
    fn young_modules_refuse_small_characteristic() {
        assert!(matches!(YoungCatalog::new(&PrimeField::new(3), 0), Err(Error::BadCharacteristic(3))));
    }

    #[test]
    fn hom_vanishing_small() {
        let f = PrimeField::new(5);
        for (a, b) in [(2, 1), (3, 1), (2, 2)] {
            let shapes = bipartitions_of(a, b);
            let mods: Vec<_> = shapes.iter().map(|x| specht_prod(x, &f).unwrap().module).collect();
            for (i, x) in shapes.iter().enumerate() {
                assert_eq!(hom_space(&mods[i], &mods[i]).unwrap().dim(), 1);
                for (j, y) in shapes.iter().enumerate() {
                    if !(y.left.dominates(&x.left) && y.right.dominates(&x.right)) {
                        assert_eq!(hom_space(&mods[j], &mods[i]).unwrap().dim(), 0, "{y} -> {x}");
                    }
                }
            }
        }
    }
}
