use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{FieldSpec, Scalar};

/// Univariate polynomial over an exact field, coefficients in increasing
/// degree order with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(
            field,
            coeffs.iter().map(|&c| Scalar::from_i64(field, c)).collect(),
        )
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::new(field, vec![Scalar::one(field)])
    }

    /// `t - root`.
    pub fn linear(root: &Scalar) -> Self {
        let field = root.field();
        Self::new(field, vec![-root, Scalar::one(field)])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Coefficients from the constant term up.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(self.field), |acc, c| &(&acc * x) + c)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        Self::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.field, Vec::new());
        }
        let mut out = vec![Scalar::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.field, out)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Scalar::from_i64(self.field, i as i64))
            .collect();
        Self::new(self.field, coeffs)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if rem.len() < divisor.coeffs.len() {
            return (Self::new(self.field, Vec::new()), self.clone());
        }
        let lead_inv = divisor.leading().inv().expect("nonzero");
        let mut quot = vec![Scalar::zero(self.field); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Splits off every root lying in the base field, with multiplicity.
    /// Returns the roots (each repeated by multiplicity, in discovery order)
    /// and the residual factor with no roots in the field.
    pub fn split_linear_factors(&self) -> (Vec<(Scalar, usize)>, Polynomial) {
        let candidates = match self.field {
            FieldSpec::PrimeField(_) => Scalar::field_elements(self.field)
                .expect("finite field")
                .filter(|x| self.eval(x).is_zero())
                .collect(),
            FieldSpec::Rationals => rational_roots(self),
        };
        let mut residual = self.clone();
        let mut roots = Vec::new();
        for r in candidates {
            let lin = Polynomial::linear(&r);
            let mut mult = 0;
            loop {
                let (q, rem) = residual.div_rem(&lin);
                if !rem.is_zero() || residual.degree() == 0 {
                    break;
                }
                residual = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        (roots, residual)
    }
}

/// Distinct rational roots via the rational root test on the squarefree part.
fn rational_roots(f: &Polynomial) -> Vec<Scalar> {
    if f.degree() == 0 {
        return Vec::new();
    }
    let sqfree = f.div_rem(&f.gcd(&f.derivative())).0;
    let ints = integer_coefficients(&sqfree);
    let mut roots = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(Scalar::zero(FieldSpec::Rationals));
    }
    let a0 = ints[lowest].abs();
    let an = ints.last().expect("nonzero").abs();
    let nums = divisors(&a0);
    let dens = divisors(&an);
    for p in &nums {
        for q in &dens {
            if !p.gcd(q).is_one() {
                continue;
            }
            for sign in [1, -1] {
                let x = Scalar::from_rational(BigRational::new(p * BigInt::from(sign), q.clone()));
                if sqfree.eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

fn integer_coefficients(f: &Polynomial) -> Vec<BigInt> {
    let rats: Vec<&BigRational> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational"))
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|q| (q.numer() * &lcm) / q.denom())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors of `n > 0` by trial division. Prime factors above
/// 10⁷ are treated as prime without proof.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(10_000_000u64);
    while &d * &d <= rest && d <= limit {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.as_rational().is_some_and(|q| q.is_negative());
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Coefficients as integers when the polynomial is over Q with integral
    /// coefficients, for compact reporting.
    pub fn integral_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                let q = c.as_rational()?;
                if q.is_integer() {
                    q.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn display_and_arith() {
        let p = Polynomial::from_i64(Q, &[1, -2, 1]);
        assert_eq!(p.to_string(), "t^2 - 2t + 1");
        assert_eq!(p.derivative(), Polynomial::from_i64(Q, &[-2, 2]));
        let (q, r) = p.div_rem(&Polynomial::from_i64(Q, &[-1, 1]));
        assert_eq!(q, Polynomial::from_i64(Q, &[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn rational_root_splitting() {
        // (t - 3)^2 (3t - 1)(t^2 + 1)
        let f = Polynomial::from_i64(Q, &[-3, 1])
            .mul(&Polynomial::from_i64(Q, &[-3, 1]))
            .mul(&Polynomial::from_i64(Q, &[-1, 3]))
            .mul(&Polynomial::from_i64(Q, &[1, 0, 1]));
        let (roots, residual) = f.split_linear_factors();
        let third = Scalar::from_ratio(Q, 1, 3).unwrap();
        assert!(roots.contains(&(Scalar::from_i64(Q, 3), 2)));
        assert!(roots.contains(&(third, 1)));
        assert_eq!(residual.monic(), Polynomial::from_i64(Q, &[1, 0, 1]));
    }

    #[test]
    fn prime_field_roots() {
        let f7 = FieldSpec::prime(7).unwrap();
        // t^2 + 1 has no root mod 7; t^2 - 2 = (t - 3)(t - 4) mod 7.
        let (roots, residual) = Polynomial::from_i64(f7, &[1, 0, 1]).split_linear_factors();
        assert!(roots.is_empty());
        assert_eq!(residual.degree(), 2);
        let (roots, residual) = Polynomial::from_i64(f7, &[-2, 0, 1]).split_linear_factors();
        assert_eq!(roots.len(), 2);
        assert_eq!(residual.degree(), 0);
    }

    #[test]
    fn divisor_enumeration() {
        let ds = divisors(&BigInt::from(12));
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(ds, expect);
    }
}
