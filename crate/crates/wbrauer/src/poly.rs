//! Univariate polynomials as ascending coefficient vectors, just enough to
//! find eigenvalues that lie in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeffs::{is_prime, Field, Rationals};
use crate::linalg::{Mat, Subspace};

pub fn eval<F: Field>(f: &F, poly: &[F::Elem], x: &F::Elem) -> F::Elem {
    poly.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn trim<F: Field>(f: &F, poly: &mut Vec<F::Elem>) {
    while poly.last().is_some_and(|c| f.is_zero(c)) {
        poly.pop();
    }
}

pub fn derivative<F: Field>(f: &F, poly: &[F::Elem]) -> Vec<F::Elem> {
    let mut d: Vec<F::Elem> = poly.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect();
    trim(f, &mut d);
    d
}

/// Quotient and remainder; `b` must be nonzero after trimming.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let mut r = a.to_vec();
    trim(f, &mut r);
    let mut b = b.to_vec();
    trim(f, &mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b.last().unwrap()).unwrap();
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &lead_inv);
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bc));
        }
        q[shift] = c;
        r.pop();
        trim(f, &mut r);
    }
    (q, r)
}

pub fn monic<F: Field>(f: &F, poly: &[F::Elem]) -> Vec<F::Elem> {
    match poly.last() {
        None => Vec::new(),
        Some(l) => {
            let il = f.inv(l).unwrap();
            poly.iter().map(|c| f.mul(c, &il)).collect()
        }
    }
}

pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(f, &mut a);
    trim(f, &mut b);
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// Product of the distinct irreducible factors, up to a scalar.
pub fn squarefree_part<F: Field>(f: &F, poly: &[F::Elem]) -> Vec<F::Elem> {
    let d = derivative(f, poly);
    if d.is_empty() {
        return monic(f, poly);
    }
    let g = gcd(f, poly, &d);
    monic(f, &divrem(f, poly, &g).0)
}

/// Monic minimal polynomial of `v` under `x ↦ x·m`.
pub fn krylov_min_poly<F: Field>(m: &Mat<F>, v: &[F::Elem]) -> Vec<F::Elem> {
    let f = m.field();
    let n = m.rows();
    // Track each new Krylov vector as a combination of the previous ones:
    // rows are [vector | combination]; we reduce against the echelon rows.
    let mut space = Subspace::new(f, n + n + 1);
    let mut cur = v.to_vec();
    for k in 0..=n {
        let mut row = cur.clone();
        row.extend((0..=n).map(|j| if j == k { f.one() } else { f.zero() }));
        let mut red = row.clone();
        space.reduce(&mut red);
        if red[..n].iter().all(|e| f.is_zero(e)) {
            let mut poly: Vec<F::Elem> = red[n..].to_vec();
            trim(f, &mut poly);
            return monic(f, &poly);
        }
        space.insert(&row);
        cur = m.vec_mul(&cur);
    }
    unreachable!("Krylov sequence must become dependent within n+1 steps")
}

fn to_integer_poly(poly: &[BigRational]) -> Vec<BigInt> {
    let l = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: Vec<BigInt> = poly.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = out.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in out.iter_mut() {
            *c /= &g;
        }
    }
    out
}

fn eval_mod(poly: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Smallest `a/b` with `b·r ≡ a (mod m)` and both below `sqrt(m/2)`.
fn reconstruct(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Rational roots by p-adic lifting of the roots modulo a small prime.
pub fn rational_roots(poly: &[BigRational]) -> Vec<BigRational> {
    let q = Rationals;
    let mut p = poly.to_vec();
    trim(&q, &mut p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if p[0].is_zero() {
        roots.push(BigRational::zero());
        let k = p.iter().position(|c| !c.is_zero()).unwrap();
        p.drain(..k);
    }
    let sf = squarefree_part(&q, &p);
    if sf.len() <= 1 {
        return roots;
    }
    if sf.len() == 2 {
        roots.push(-&sf[0] / &sf[1]);
        roots.sort();
        return roots;
    }
    let ip = to_integer_poly(&sf);
    let dp: Vec<BigInt> = ip.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let lead = ip.last().unwrap().abs();
    let cst = ip[0].abs();
    let height = lead.clone().max(cst);
    let target = &height * &height * BigInt::from(2) + BigInt::one();

    let mut ell = 1009u64;
    loop {
        while !is_prime(ell) {
            ell += 2;
        }
        let li = BigInt::from(ell);
        let small: Vec<u64> = ip.iter().map(|c| c.mod_floor(&li).to_u64().unwrap()).collect();
        let f = crate::coeffs::PrimeField::new(ell as u32);
        let sm: Vec<u32> = small.iter().map(|&c| c as u32).collect();
        let dsm = derivative(&f, &sm);
        let mut smt = sm.clone();
        trim(&f, &mut smt);
        if smt.len() == sm.len() && gcd(&f, &smt, &dsm).len() == 1 {
            for r0 in f.roots(&smt) {
                let mut r = BigInt::from(r0);
                let mut m = li.clone();
                let mut ok = true;
                while m < target {
                    m = &m * &m;
                    let num = eval_mod(&ip, &r, &m);
                    let Some(den) = inv_mod(&eval_mod(&dp, &r, &m), &m) else {
                        ok = false;
                        break;
                    };
                    r = (&r - num * den).mod_floor(&m);
                }
                if !ok {
                    continue;
                }
                if let Some(c) = reconstruct(&r, &m) {
                    if eval(&q, &sf, &c).is_zero() {
                        roots.push(c);
                    }
                }
            }
            roots.sort();
            roots.dedup();
            return roots;
        }
        ell += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn expand(roots: &[BigRational], extra: &[BigRational]) -> Vec<BigRational> {
        let q = Rationals;
        let mut p = extra.to_vec();
        for r in roots {
            let mut next = vec![q.zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - c * r;
            }
            p = next;
        }
        p
    }

    #[test]
    fn recovers_planted_rational_roots() {
        let planted = [rat(3, 7), rat(-5, 2), rat(0, 1), rat(1234567, 3), rat(-5, 2)];
        // x^2 + 1 contributes no rational roots.
        let p = expand(&planted, &[rat(1, 1), rat(0, 1), rat(1, 1)]);
        let mut want: Vec<BigRational> = planted.to_vec();
        want.sort();
        want.dedup();
        assert_eq!(rational_roots(&p), want);
    }

    #[test]
    fn prime_field_roots_by_search() {
        let f = PrimeField::new(7);
        // (x-2)(x-5) = x^2 - 7x + 10 = x^2 + 3 mod 7
        assert_eq!(f.roots(&[3, 0, 1]), vec![2, 5]);
    }

    #[test]
    fn krylov_of_diagonal() {
        let q = Rationals;
        let m = Mat::from_i64(&q, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 2]]);
        let v = [q.one(), q.one(), q.one()];
        let mp = krylov_min_poly(&m, &v);
        // (x-2)(x-3) = x^2 - 5x + 6
        assert_eq!(mp, vec![q.from_i64(6), q.from_i64(-5), q.one()]);
    }
}
