//! Exact scalars: ℚ, prime fields and cyclotomic fields.

mod cyclotomic;
pub(crate) mod prime;
mod rational;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField};
pub use rational::{ParseRationalError, Rational};

use crate::error::{Error, Result};

/// A field descriptor. Scalars remember the field they live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
    Cyclotomic(Arc<CyclotomicField>),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if prime::is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Invalid(format!("{p} is not prime")))
        }
    }

    pub fn cyclotomic(m: u32) -> Field {
        Field::Cyclotomic(Arc::new(CyclotomicField::new(m)))
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(&Rational::from_int(n)).expect("integers embed in every field")
    }

    /// Embeds a rational. Fails in F_p when p divides the denominator.
    pub fn from_rational(&self, r: &Rational) -> Result<Scalar> {
        Ok(match self {
            Field::Rational => Scalar::Rational(r.clone()),
            Field::Prime(p) => Scalar::Prime { value: r.mod_prime(*p).ok_or(Error::DivisionByZero)?, p: *p },
            Field::Cyclotomic(f) => {
                let mut coeffs = Vec::new();
                if !r.is_zero() {
                    coeffs.push(r.clone());
                }
                Scalar::Cyclotomic { coeffs, field: f.clone() }
            }
        })
    }

    /// Builds Σ c_k ζ^k in a cyclotomic field.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Result<Scalar> {
        match self {
            Field::Cyclotomic(f) => Ok(Scalar::Cyclotomic { coeffs: f.reduce(coeffs), field: f.clone() }),
            _ if coeffs.len() <= 1 => self.from_rational(coeffs.first().unwrap_or(&Rational::ZERO)),
            _ => Err(Error::MixedFields),
        }
    }

    /// ζ_m^k; only defined for cyclotomic fields.
    pub fn zeta_pow(&self, k: i64) -> Result<Scalar> {
        match self {
            Field::Cyclotomic(f) => Ok(Scalar::Cyclotomic { coeffs: f.zeta_pow(k), field: f.clone() }),
            _ => Err(Error::BadRoot),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Cyclotomic(c) => write!(f, "Q(zeta_{})", c.order()),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Prime { value: u64, p: u64 },
    Cyclotomic { coeffs: Vec<Rational>, field: Arc<CyclotomicField> },
}

fn same_cyc(a: &Arc<CyclotomicField>, b: &Arc<CyclotomicField>) -> bool {
    Arc::ptr_eq(a, b) || a.order() == b.order()
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
            Scalar::Cyclotomic { field, .. } => Field::Cyclotomic(field.clone()),
        }
    }

    pub fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Prime { p, .. }, Scalar::Prime { p: q, .. }) => p == q,
            (Scalar::Cyclotomic { field: a, .. }, Scalar::Cyclotomic { field: b, .. }) => same_cyc(a, b),
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Cyclotomic { coeffs, .. } => coeffs.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Cyclotomic { coeffs, .. } => coeffs.len() == 1 && coeffs[0].is_one(),
        }
    }

    /// The value as a rational, when it lies in the prime subfield of ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Prime { .. } => None,
            Scalar::Cyclotomic { coeffs, .. } => match coeffs.len() {
                0 => Some(Rational::ZERO),
                1 => Some(coeffs[0].clone()),
                _ => None,
            },
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) if p == q => {
                Scalar::Prime { value: prime::add_mod(*a, *b, *p), p: *p }
            }
            (Scalar::Cyclotomic { coeffs: a, field }, Scalar::Cyclotomic { coeffs: b, field: g })
                if same_cyc(field, g) =>
            {
                Scalar::Cyclotomic { coeffs: field.add(a, b), field: field.clone() }
            }
            _ => return Err(Error::MixedFields),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) if p == q => {
                Scalar::Prime { value: prime::mul_mod(*a, *b, *p), p: *p }
            }
            (Scalar::Cyclotomic { coeffs: a, field }, Scalar::Cyclotomic { coeffs: b, field: g })
                if same_cyc(field, g) =>
            {
                let coeffs = match (a.len(), b.len()) {
                    (0, _) | (_, 0) => Vec::new(),
                    (1, _) => b.iter().map(|c| c.mul(&a[0])).collect(),
                    (_, 1) => a.iter().map(|c| c.mul(&b[0])).collect(),
                    _ => field.mul(a, b),
                };
                Scalar::Cyclotomic { coeffs, field: field.clone() }
            }
            _ => return Err(Error::MixedFields),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip().ok_or(Error::DivisionByZero)?),
            Scalar::Prime { value, p } => {
                Scalar::Prime { value: prime::inv_mod(*value, *p).ok_or(Error::DivisionByZero)?, p: *p }
            }
            Scalar::Cyclotomic { coeffs, field } => {
                Scalar::Cyclotomic { coeffs: field.inv(coeffs).ok_or(Error::DivisionByZero)?, field: field.clone() }
            }
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut b = base;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// An exact square root, if one is found in the field.
    ///
    /// In cyclotomic fields only elements of the form r·ζ^k with r a
    /// rational square are recognised.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.sqrt().map(Scalar::Rational),
            Scalar::Prime { value, p } => prime::sqrt_mod(*value, *p).map(|v| Scalar::Prime { value: v, p: *p }),
            Scalar::Cyclotomic { field, .. } => {
                let fld = self.field();
                let m = field.order() as i64;
                for k in 0..m {
                    let unit = fld.zeta_pow(-k).ok()?;
                    let Some(r) = (self * &unit).as_rational() else { continue };
                    let Some(root) = r.sqrt() else { continue };
                    // a square root of ζ^k: ζ^(k/2), or ζ^((k+m)/2) when m is odd
                    let half = if k % 2 == 0 {
                        k / 2
                    } else if m % 2 == 1 {
                        (k + m) / 2
                    } else {
                        continue;
                    };
                    return Some(&fld.from_rational(&root).ok()? * &fld.zeta_pow(half).ok()?);
                }
                None
            }
        }
    }

    /// Serialized form: `"n/d"` for ℚ, the residue for F_p, one string
    /// per coefficient for cyclotomic fields.
    pub fn to_strings(&self) -> Vec<String> {
        match self {
            Scalar::Rational(r) => alloc::vec![format!("{r}")],
            Scalar::Prime { value, .. } => alloc::vec![format!("{value}")],
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().map(|c| format!("{c}")).collect(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Cyclotomic { coeffs, field } => {
                if coeffs.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{c}")?,
                        1 => write!(f, "{c}*z{}", field.order())?,
                        _ => write!(f, "{c}*z{}^{k}", field.order())?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on mixed fields; algebra data is single-field by
// construction, so a mismatch there is a bug rather than bad input.

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("mixed fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("mixed fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("mixed fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.neg()),
            Scalar::Prime { value, p } => Scalar::Prime { value: (p - value) % p, p: *p },
            Scalar::Cyclotomic { coeffs, field } => {
                Scalar::Cyclotomic { coeffs: coeffs.iter().map(Rational::neg).collect(), field: field.clone() }
            }
        }
    }
}

impl Scalar {
    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Scalar {
        -self
    }

    /// `self += a * b`, the inner step of every contraction.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = &*self + &(a * b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(Rational::new(n, d))
    }

    #[test]
    fn field_examples() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        let c4 = Field::cyclotomic(4);
        let z = c4.zeta_pow(1).unwrap();
        assert_eq!(&z * &z, c4.from_int(-1));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(&f5.from_int(3) * &f5.from_int(4), f5.from_int(2));
    }

    #[test]
    fn mixing_fails() {
        let a = Field::cyclotomic(4).one();
        let b = Field::cyclotomic(6).one();
        assert_eq!(a.try_add(&b), Err(Error::MixedFields));
        assert_eq!(q(1, 1).try_mul(&Field::Prime(5).one()), Err(Error::MixedFields));
        assert_eq!(q(1, 1).try_div(&q(0, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverses_and_roots() {
        let c = Field::cyclotomic(8);
        let x = c
            .from_coeffs(alloc::vec![
                Rational::new(1, 2),
                Rational::from_int(3),
                Rational::ZERO,
                Rational::from_int(-1)
            ])
            .unwrap();
        assert!((&x * &x.inv().unwrap()).is_one());
        let y = &c.from_int(9) * &c.zeta_pow(6).unwrap();
        let r = y.sqrt().unwrap();
        assert_eq!(&r * &r, y);
        let c3 = Field::cyclotomic(3);
        let w = c3.zeta_pow(1).unwrap();
        let s = w.sqrt().unwrap();
        assert_eq!(&s * &s, w);
        assert!(Field::Prime(7).from_int(3).sqrt().is_none());
        assert_eq!(Field::Prime(7).from_int(2).sqrt().map(|s| &s * &s), Some(Field::Prime(7).from_int(2)));
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn prime_field_rationals() {
        let f = Field::Prime(5);
        assert_eq!(f.from_rational(&Rational::new(1, 2)).unwrap(), f.from_int(3));
        assert_eq!(f.from_rational(&Rational::new(1, 5)), Err(Error::DivisionByZero));
    }
}
