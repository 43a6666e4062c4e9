//! Dense exact matrices over a [`Field`], row-vector conventions throughout:
//! a matrix acts on the right of row vectors, so `x ↦ x·A`.

use std::fmt;

use crate::coeffs::Field;

#[derive(Clone)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Mat<F> {}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| self.field.display(e)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat { field: field.clone(), rows: n, cols, data }
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn row_vec(&self, i: usize) -> Vec<F::Elem> {
        self.row(i).to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn push_row(&mut self, row: Vec<F::Elem>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|e| !self.field.is_zero(e)).count()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let sparse = other.nnz() * 4 < other.rows * other.cols;
        if sparse {
            let csr: Vec<Vec<(usize, F::Elem)>> = (0..other.rows)
                .map(|k| {
                    other.row(k).iter().enumerate().filter(|(_, e)| !f.is_zero(e)).map(|(j, e)| (j, e.clone())).collect()
                })
                .collect();
            for i in 0..self.rows {
                let oc = other.cols;
                let dst = &mut out.data[i * oc..(i + 1) * oc];
                for k in 0..self.cols {
                    let a = &self.data[i * self.cols + k];
                    if f.is_zero(a) {
                        continue;
                    }
                    for (j, b) in &csr[k] {
                        dst[*j] = f.add(&dst[*j], &f.mul(a, b));
                    }
                }
            }
        } else {
            for i in 0..self.rows {
                let oc = other.cols;
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k].clone();
                    if f.is_zero(&a) {
                        continue;
                    }
                    let src = &other.data[k * oc..(k + 1) * oc];
                    f.axpy(&mut out.data[i * oc..(i + 1) * oc], &a, src);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if !f.is_zero(a) {
                f.axpy(&mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &F::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.clone().axpy(&mut self.data, c, &other.data);
    }

    pub fn sub_scalar_identity(&self, c: &F::Elem) -> Self {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = self.field.sub(m.get(i, i), c);
            m.set(i, i, v);
        }
        m
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(&self.field, self.cols, idx.iter().map(|&i| self.row_vec(i)).collect())
    }

    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_rows(&self.field, c1 - c0, (r0..r1).map(|i| self.row(i)[c0..c1].to_vec()).collect())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else { continue };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let a = m.get(i, c).clone();
                    if !f.is_zero(&a) {
                        let na = f.neg(&a);
                        f.axpy(m.row_mut(i), &na, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.rows = r;
        m.data.truncate(r * m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows spanning `{x : A·xᵀ = 0}`.
    pub fn right_kernel(&self) -> Self {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let mut out = Self::zeros(f, 0, self.cols);
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            out.push_row(v);
        }
        out
    }

    /// Rows spanning `{y : y·A = 0}`.
    pub fn left_kernel(&self) -> Self {
        self.transpose().right_kernel()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn col_is_zero(&self, c: usize) -> bool {
        (0..self.rows).all(|i| self.field.is_zero(self.get(i, c)))
    }

    /// True when every row has exactly one nonzero entry and every column
    /// receives at most one, i.e. a scaled permutation matrix.
    pub fn monomial_rows(&self) -> Option<Vec<(usize, F::Elem)>> {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.rows);
        let mut seen = vec![false; self.cols];
        for i in 0..self.rows {
            let mut hit = None;
            for (j, e) in self.row(i).iter().enumerate() {
                if !f.is_zero(e) {
                    if hit.is_some() {
                        return None;
                    }
                    hit = Some((j, e.clone()));
                }
            }
            let (j, e) = hit?;
            if seen[j] {
                return None;
            }
            seen[j] = true;
            out.push((j, e));
        }
        Some(out)
    }
}

/// A subspace kept as a reduced echelon basis; coordinates of a member are
/// read off at the pivot columns.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    dim_ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: &F, dim_ambient: usize) -> Self {
        Subspace { field: field.clone(), dim_ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_mat(m: &Mat<F>) -> Self {
        let (r, pivots) = m.rref();
        Subspace { field: m.field.clone(), dim_ambient: m.cols, rows: r.to_rows(), pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Mat<F> {
        Mat::from_rows(&self.field, self.dim_ambient, self.rows.clone())
    }

    /// Subtract the projection onto the span; the result is zero iff `v` is
    /// a member.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let a = v[p].clone();
            if !f.is_zero(&a) {
                f.axpy(v, &f.neg(&a), row);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| self.field.is_zero(e))
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|e| !f.is_zero(e)) else { return false };
        let inv = f.inv(&w[p]).unwrap();
        for e in w.iter_mut() {
            *e = f.mul(e, &inv);
        }
        for row in self.rows.iter_mut() {
            let a = row[p].clone();
            if !f.is_zero(&a) {
                f.axpy(row, &f.neg(&a), &w);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    /// Coordinates with respect to [`Subspace::basis`], if `v` is a member.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of `v` with respect to a complement basis made of the
    /// non-pivot unit vectors, after reducing modulo the subspace.
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let mut is_p = vec![false; self.dim_ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        w.into_iter().enumerate().filter(|(i, _)| !is_p[*i]).map(|(_, e)| e).collect()
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.dim_ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.dim_ambient).filter(|i| !is_p[*i]).collect()
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        // Zassenhaus: rows (u, u) and (w, 0); the kernel part gives the meet.
        let n = self.dim_ambient;
        let f = &self.field;
        let mut m = Mat::zeros(f, 0, 2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(r.iter().cloned());
            m.push_row(v);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat(f.zero()).take(n));
            m.push_row(v);
        }
        let (red, pivots) = m.rref();
        let mut out = Subspace::new(f, n);
        for (i, &p) in pivots.iter().enumerate() {
            if p >= n {
                out.insert(&red.row(i)[n..]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{PrimeField, Rationals};

    #[test]
    fn inverse_round_trip() {
        let f = Rationals;
        let a = Mat::from_i64(&f, &[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(&f, 2));
        let singular = Mat::from_i64(&f, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kernels_over_prime_field() {
        let f = PrimeField::new(5);
        let a = Mat::from_i64(&f, &[&[1, 2, 3], &[0, 1, 4]]);
        let k = a.right_kernel();
        assert_eq!(k.rows(), 1);
        assert!(a.mul(&k.transpose()).is_zero());
        let lk = a.transpose().left_kernel();
        assert!(lk.mul(&a.transpose()).is_zero());
    }

    #[test]
    fn subspace_coordinates_and_meet() {
        let f = Rationals;
        let mut s = Subspace::new(&f, 3);
        assert!(s.insert(&[f.from_i64(1), f.from_i64(1), f.from_i64(0)]));
        assert!(s.insert(&[f.from_i64(0), f.from_i64(1), f.from_i64(1)]));
        assert!(!s.insert(&[f.from_i64(1), f.from_i64(2), f.from_i64(1)]));
        let v = [f.from_i64(2), f.from_i64(3), f.from_i64(1)];
        let c = s.coords(&v).unwrap();
        let back = s.basis().vec_mul(&c);
        assert_eq!(back, v.to_vec());
        let mut t = Subspace::new(&f, 3);
        t.insert(&[f.from_i64(1), f.from_i64(0), f.from_i64(0)]);
        t.insert(&[f.from_i64(0), f.from_i64(0), f.from_i64(1)]);
        assert_eq!(s.intersect(&t).dim(), 1);
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let f = PrimeField::new(7);
        let a = Mat::from_i64(&f, &[&[1, 2, 3], &[4, 5, 6]]);
        let b = Mat::from_i64(&f, &[&[0, 0, 1], &[0, 0, 0], &[2, 0, 0]]);
        let c = a.mul(&b);
        assert_eq!(c, Mat::from_i64(&f, &[&[6, 0, 1], &[12, 0, 4]]));
    }
}
