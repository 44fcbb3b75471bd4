//! Exact scalars over the rationals or a prime field GF(p), p odd.
//!
//! A [`Scalar`] carries its field with it. Mixing fields through the checked
//! operations returns [`ScalarError::FieldMismatch`]; the operator impls
//! panic instead, since matrices and algebras only ever hold entries of a
//! single field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("cannot parse {text:?} as an element of {field}")]
    Parse { text: String, field: FieldSpec },
}

/// The base field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// GF(p) for an odd prime `p` below 2³².
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p == 2 {
            return Err(ScalarError::UnsupportedField(
                "GF(2): characteristic 2 is not supported".into(),
            ));
        }
        if p >= 1 << 32 {
            return Err(ScalarError::UnsupportedField(format!(
                "GF({p}): modulus too large"
            )));
        }
        if !is_prime(p) {
            return Err(ScalarError::UnsupportedField(format!(
                "GF({p}): {p} is not prime"
            )));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Always in lowest terms with a positive denominator.
    Rational(BigRational),
    /// Residue in `0..p`.
    Modular { value: u64, p: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `num / den` in the given field.
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Result<Self, ScalarError> {
        Self::from_i64(field, num).checked_div(&Self::from_i64(field, den))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::Rational(q)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Parses `"p/q"`, `"p"` (rationals) or a decimal integer reduced mod p.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self, ScalarError> {
        let bad = || ScalarError::Parse {
            text: text.to_string(),
            field,
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let reduce = |v: &BigInt| {
                    let m = BigInt::from(p);
                    (((v % &m) + &m) % &m)
                        .to_u64()
                        .expect("residue fits in u64")
                };
                let n = Scalar::Modular {
                    value: reduce(&num),
                    p,
                };
                let d = Scalar::Modular {
                    value: reduce(&den),
                    p,
                };
                n.checked_div(&d)
            }
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, p } => Scalar::Modular {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, p } => Scalar::Modular {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rational numerator and denominator, if this is a rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// Fixed total order used to pick canonical representatives: rationals
    /// compare lexicographically on (numerator, denominator), residues by
    /// value. Not the numeric order.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a
                .numer()
                .cmp(b.numer())
                .then_with(|| a.denom().cmp(b.denom())),
            (Scalar::Modular { value: a, .. }, Scalar::Modular { value: b, .. }) => a.cmp(b),
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }

    /// Every element of GF(p) in increasing residue order; `None` over Q.
    pub fn field_elements(field: FieldSpec) -> Option<impl Iterator<Item = Scalar>> {
        match field {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some((0..p).map(move |value| Scalar::Modular { value, p })),
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let m = p as u128;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldSpec::Rationals, n, d).unwrap()
    }

    #[test]
    fn rational_addition() {
        let r = scalar_arith(&q(1, 2), &q(1, 3), ArithOp::Add).unwrap();
        assert_eq!(r, q(5, 6));
        assert_eq!(r.to_string(), "5/6");
    }

    #[test]
    fn prime_field_multiplication() {
        let f = FieldSpec::prime(5).unwrap();
        let r = scalar_arith(
            &Scalar::from_i64(f, 3),
            &Scalar::from_i64(f, 4),
            ArithOp::Mul,
        );
        assert_eq!(r.unwrap(), Scalar::from_i64(f, 2));
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::Rationals;
        let r = scalar_arith(&Scalar::one(f), &Scalar::zero(f), ArithOp::Div);
        assert_eq!(r, Err(ScalarError::DivisionByZero));
        let g = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::zero(g).inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let g = FieldSpec::prime(7).unwrap();
        let r = Scalar::one(FieldSpec::Rationals).checked_add(&Scalar::one(g));
        assert!(matches!(r, Err(ScalarError::FieldMismatch(..))));
    }

    #[test]
    fn unsupported_moduli() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(3).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let f = FieldSpec::Rationals;
        assert_eq!(Scalar::parse(f, "-6/4").unwrap(), q(-3, 2));
        assert_eq!(Scalar::parse(f, "3/-6").unwrap().to_string(), "-1/2");
        assert_eq!(Scalar::parse(f, "7").unwrap().to_string(), "7");
        assert!(Scalar::parse(f, "x").is_err());
        assert_eq!(Scalar::parse(f, "1/0"), Err(ScalarError::DivisionByZero));
        let g = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::parse(g, "-1").unwrap().to_string(), "6");
        assert_eq!(Scalar::parse(g, "1/2").unwrap(), Scalar::from_i64(g, 4));
    }

    #[test]
    fn canonical_order_on_rationals() {
        assert_eq!(q(1, 3).canonical_cmp(&q(3, 1)), Ordering::Less);
        assert_eq!(q(-3, 1).canonical_cmp(&q(-1, 3)), Ordering::Less);
        assert_eq!(q(2, 5).canonical_cmp(&q(5, 2)), Ordering::Less);
    }

    fn field_strategy() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::PrimeField(3)),
            Just(FieldSpec::PrimeField(101)),
            Just(FieldSpec::PrimeField(65_521)),
        ]
    }

    fn scalars(field: FieldSpec) -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..50).prop_map(move |(n, d)| match field {
            FieldSpec::Rationals => Scalar::from_ratio(field, n, d).unwrap(),
            FieldSpec::PrimeField(_) => Scalar::from_i64(field, n * d),
        })
    }

    proptest! {
        #[test]
        fn field_axioms(
            (a, b, c) in field_strategy().prop_flat_map(|f| (scalars(f), scalars(f), scalars(f)))
        ) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Scalar::zero(a.field()));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn rational_normalization_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let x = Scalar::from_ratio(FieldSpec::Rationals, n, d).unwrap();
            let again = Scalar::parse(FieldSpec::Rationals, &x.to_string()).unwrap();
            prop_assert_eq!(&again, &x);
            let r = x.as_rational().unwrap();
            prop_assert!(num_traits::Signed::is_positive(r.denom()));
            prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
        }
    }
}
