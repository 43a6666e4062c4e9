//! Exact coefficients: arbitrary precision rationals and prime fields up to
//! 16 bits.
//!
//! Two layers live here. [`Scalar`] is a self-describing value that carries its
//! field and is used at API boundaries (parsing, printing, the parameter
//! delta). The [`Field`] trait is the context object the linear algebra is
//! generic over; [`Rationals`] and [`PrimeField`] implement it.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// A prime field, refusing composite or oversized characteristics.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u16::MAX as u64 || !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldSpec::Rationals => FieldKind::Rationals,
            FieldSpec::PrimeField(_) => FieldKind::PrimeField,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// Refuse characteristics 2 and 3.
    pub fn require_char_not_2_3(&self) -> Result<()> {
        match self.characteristic() {
            2 | 3 => Err(Error::BadCharacteristic(self.characteristic())),
            _ => Ok(()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_field_at(text, 0)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

fn parse_field_at(text: &str, base: usize) -> Result<FieldSpec> {
    let t = text.trim_end();
    let lead = text.len() - text.trim_start().len();
    let t = t.trim_start();
    if t == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(digits) = t.strip_prefix('F') {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(base + lead + 1, format!("expected a prime after 'F', found {digits:?}")));
        }
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::NonPrimeCharacteristic(u64::MAX))?;
        return FieldSpec::prime(p);
    }
    Err(Error::parse(base + lead, format!("expected 'Q' or 'F<prime>', found {t:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u32),
}

/// A field element together with its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn from_int(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar { field, value: Value::Rational(BigRational::from_integer(v.into())) },
            FieldSpec::PrimeField(p) => Scalar { field, value: Value::Residue(v.rem_euclid(p as i64) as u32) },
        }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_rational(field: FieldSpec, q: &BigRational) -> Result<Self> {
        match field {
            FieldSpec::Rationals => Ok(Scalar { field, value: Value::Rational(q.clone()) }),
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u32().unwrap();
                let den = q.denom().mod_floor(&pb).to_u32().unwrap();
                if den == 0 {
                    return Err(Error::DeltaNotInField(q.to_string(), field.to_string()));
                }
                let inv = PrimeField::new(p).inv(&den).unwrap();
                Ok(Scalar { field, value: Value::Residue(((num as u64 * inv as u64) % p as u64) as u32) })
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_zero(),
            Value::Residue(v) => *v == 0,
        }
    }

    /// Rational value, if the field is Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(q) => Some(q),
            Value::Residue(_) => None,
        }
    }

    /// Canonical residue, if the field is a prime field.
    pub fn as_residue(&self) -> Option<u32> {
        match &self.value {
            Value::Residue(v) => Some(*v),
            Value::Rational(_) => None,
        }
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                ArithOp::Div => {
                    if b.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    a / b
                }
            }),
            (Value::Residue(a), Value::Residue(b)) => {
                let k = PrimeField::new(self.field.characteristic());
                Value::Residue(match op {
                    ArithOp::Add => k.add(a, b),
                    ArithOp::Sub => k.sub(a, b),
                    ArithOp::Mul => k.mul(a, b),
                    ArithOp::Div => k.mul(a, &k.inv(b).ok_or(Error::DivisionByZero)?),
                })
            }
            _ => unreachable!("field tags agree"),
        };
        Ok(Scalar { field: self.field, value })
    }

    pub fn add(&self, o: &Scalar) -> Result<Scalar> {
        self.arith(o, ArithOp::Add)
    }
    pub fn sub(&self, o: &Scalar) -> Result<Scalar> {
        self.arith(o, ArithOp::Sub)
    }
    pub fn mul(&self, o: &Scalar) -> Result<Scalar> {
        self.arith(o, ArithOp::Mul)
    }
    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        self.arith(o, ArithOp::Div)
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one(self.field).div(self)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self).unwrap();
        }
        acc
    }

    /// Parse an integer or `a/b` literal as an element of `field`.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Scalar> {
        parse_scalar_at(field, text, 0)
    }
}

fn parse_int(text: &str, offset: usize) -> Result<BigInt> {
    let body = text.strip_prefix('-').unwrap_or(text);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(offset, format!("expected an integer, found {text:?}")));
    }
    Ok(text.parse::<BigInt>().expect("validated digits"))
}

fn parse_scalar_at(field: FieldSpec, text: &str, base: usize) -> Result<Scalar> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let q = match t.split_once('/') {
        None => BigRational::from_integer(parse_int(t, base + lead)?),
        Some((a, b)) => {
            let num = parse_int(a, base + lead)?;
            let den_off = base + lead + a.len() + 1;
            if b.starts_with('-') {
                return Err(Error::parse(den_off, "denominator must be positive"));
            }
            let den = parse_int(b, den_off)?;
            if den.is_zero() {
                return Err(Error::parse(den_off, "zero denominator"));
            }
            BigRational::new(num, den)
        }
    };
    Scalar::from_rational(field, &q).map_err(|_| Error::DeltaNotInField(t.to_string(), field.to_string()))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Value::Residue(v) => write!(f, "{v}"),
        }
    }
}

/// Exact arithmetic on two scalars of the same field.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    a.arith(b, op)
}

/// Parse `Q;<delta>` or `F<p>;<delta>`.
pub fn parse_field_and_delta(text: &str) -> Result<(FieldSpec, Scalar)> {
    let Some(semi) = text.find(';') else {
        return Err(Error::parse(text.len(), "expected ';' between field and delta"));
    };
    let field = parse_field_at(&text[..semi], 0)?;
    let delta = parse_scalar_at(field, &text[semi + 1..], semi + 1)?;
    Ok((field, delta))
}

/// Field context used by all generic linear algebra.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem>;
    /// Element drawn for randomized searches: uniform over a prime field, a
    /// small integer in `[-bound, bound]` over Q.
    fn random<R: Rng>(&self, rng: &mut R, bound: i64) -> Self::Elem;
    /// All elements, when the field is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// Distinct roots in the field of a polynomial with ascending
    /// coefficients.
    fn roots(&self, poly: &[Self::Elem]) -> Vec<Self::Elem>;

    /// `dst[i] += c * src[i]`.
    fn axpy(&self, dst: &mut [Self::Elem], c: &Self::Elem, src: &[Self::Elem]) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                *d = self.add(d, &self.mul(c, s));
            }
        }
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn display(&self, a: &Self::Elem) -> String {
        self.to_scalar(a).to_string()
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar { field: FieldSpec::Rationals, value: Value::Rational(a.clone()) }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<BigRational> {
        s.as_rational()
            .cloned()
            .ok_or_else(|| Error::FieldMismatch(s.field.to_string(), "Q".into()))
    }
    fn random<R: Rng>(&self, rng: &mut R, bound: i64) -> BigRational {
        BigRational::from_integer(rng.gen_range(-bound..=bound).into())
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn roots(&self, poly: &[BigRational]) -> Vec<BigRational> {
        crate::poly::rational_roots(poly)
    }
    fn axpy(&self, dst: &mut [BigRational], c: &BigRational, src: &[BigRational]) {
        if c.is_zero() {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d += c * s;
            }
        }
    }
}

/// The prime field with `p` elements, residues stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Self {
        debug_assert!(is_prime(p as u64));
        PrimeField { p }
    }

    pub fn try_new(p: u64) -> Result<Self> {
        FieldSpec::prime(p).map(|_| PrimeField { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        Some(Field::pow(self, a, self.p as u64 - 2))
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar { field: self.spec(), value: Value::Residue(*a) }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<u32> {
        match (s.field, &s.value) {
            (FieldSpec::PrimeField(p), Value::Residue(v)) if p == self.p => Ok(*v),
            _ => Err(Error::FieldMismatch(s.field.to_string(), self.spec().to_string())),
        }
    }
    fn random<R: Rng>(&self, rng: &mut R, _bound: i64) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }
    fn roots(&self, poly: &[u32]) -> Vec<u32> {
        (0..self.p).filter(|x| crate::poly::eval(self, poly, x) == 0).collect()
    }
    #[inline]
    fn axpy(&self, dst: &mut [u32], c: &u32, src: &[u32]) {
        if *c == 0 {
            return;
        }
        let p = self.p as u64;
        let c = *c as u64;
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = ((*d as u64 + c * *s as u64) % p) as u32;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Scalar {
        Scalar::parse(FieldSpec::Rationals, text).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q("1/2").add(&q("1/3")).unwrap(), q("5/6"));
    }

    #[test]
    fn residue_product_and_inverse() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = Scalar::from_int(f5, 2).mul(&Scalar::from_int(f5, 3)).unwrap();
        assert_eq!(a, Scalar::one(f5));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::from_int(f7, 2).inv().unwrap(), Scalar::from_int(f7, 4));
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        assert_eq!(q("1").div(&q("0")), Err(Error::DivisionByZero));
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(q("1").add(&Scalar::one(f5)), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn field_and_delta_literals() {
        let (f, d) = parse_field_and_delta("Q;0").unwrap();
        assert_eq!(f, FieldSpec::Rationals);
        assert!(d.is_zero());
        let (f, d) = parse_field_and_delta("F5;2").unwrap();
        assert_eq!(f, FieldSpec::PrimeField(5));
        assert_eq!(d.as_residue(), Some(2));
        assert_eq!(parse_field_and_delta("F4;1"), Err(Error::NonPrimeCharacteristic(4)));
        assert!(matches!(parse_field_and_delta("F2;1/2"), Err(Error::DeltaNotInField(..))));
        assert!(matches!(parse_field_and_delta("Q;x"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_field_and_delta("Z;1"), Err(Error::Parse { offset: 0, .. })));
        let (_, d) = parse_field_and_delta("F7;1/2").unwrap();
        assert_eq!(d.as_residue(), Some(4));
    }

    #[test]
    fn printing_is_reduced() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-6/3").to_string(), "-2");
        assert_eq!(Scalar::from_int(FieldSpec::PrimeField(7), -1).to_string(), "6");
    }

    #[test]
    fn characteristic_guard() {
        assert_eq!(FieldSpec::PrimeField(3).require_char_not_2_3(), Err(Error::BadCharacteristic(3)));
        assert!(FieldSpec::PrimeField(5).require_char_not_2_3().is_ok());
        assert!(FieldSpec::Rationals.require_char_not_2_3().is_ok());
    }
}
