use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// An element `a + b√2 + c√3 + d√6` of the biquadratic field Q(√2, √3).
///
/// The coordinates over the basis {1, √2, √3, √6} are unique, so derived
/// equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl FieldElement {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        FieldElement { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        FieldElement::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::frac(n, d))
    }

    pub fn sqrt2() -> Self {
        let z = Rational::zero;
        FieldElement::new(z(), Rational::one(), z(), z())
    }

    pub fn sqrt3() -> Self {
        let z = Rational::zero;
        FieldElement::new(z(), z(), Rational::one(), z())
    }

    pub fn sqrt6() -> Self {
        let z = Rational::zero;
        FieldElement::new(z(), z(), z(), Rational::one())
    }

    /// Coordinates in the order (1, √2, √3, √6).
    pub fn coords(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|r| r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(&self.a)
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// Sign of the first nonzero coordinate; used to split a leading minus
    /// off when rendering.
    pub fn leading_negative(&self) -> bool {
        self.coords()
            .into_iter()
            .find(|r| !r.is_zero())
            .is_some_and(|r| r.is_negative())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElement::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    fn conj_sqrt2(&self) -> Self {
        FieldElement::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    fn conj_sqrt3(&self) -> Self {
        FieldElement::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    /// Multiplicative inverse by conjugating over √3 and then over √2,
    /// which leaves a rational norm to divide by.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c3 = self.conj_sqrt3();
        // x * conj3(x) lies in Q(√2)
        let n1 = self * &c3;
        let c2 = n1.conj_sqrt2();
        let norm = (&n1 * &c2)
            .as_rational()
            .cloned()
            .expect("norm to Q is rational");
        Ok((&c3 * &c2).scale(&norm.recip()?))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(FieldElement::one(), |acc, _| &acc * self)
    }
}

/// Square root of a non-negative rational inside Q(√2, √3).
///
/// `r = n/d` has root `√(n·d)/d`; that is in the field exactly when the
/// squarefree part of `n·d` is one of 1, 2, 3, 6.
pub fn sqrt_in_field(r: &Rational) -> Result<FieldElement> {
    if r.is_negative() {
        return Err(Error::UnsupportedRadical(r.to_string()));
    }
    if r.is_zero() {
        return Ok(FieldElement::zero());
    }
    let nd: BigInt = r.numer() * r.denom();
    for (f, slot) in [(1i64, 0usize), (2, 1), (3, 2), (6, 3)] {
        let f = BigInt::from(f);
        if (&nd % &f) != BigInt::from(0) {
            continue;
        }
        let q = &nd / &f;
        let s = q.sqrt();
        if &s * &s == q {
            let coeff = Rational::new(s.abs(), r.denom().clone())?;
            let mut coords = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
            coords[slot] = coeff;
            let [a, b, c, d] = coords;
            return Ok(FieldElement::new(a, b, c, d));
        }
    }
    Err(Error::UnsupportedRadical(r.to_string()))
}

impl fmt::Display for FieldElement {
    /// Shortest radical form: `√6/2`, `-2√2/3`, `1 + √3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, rad) in self.coords().into_iter().zip(["", "√2", "√3", "√6"]) {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = coef.abs();
            if rad.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            let num = mag.numer();
            if num != &BigInt::from(1) {
                write!(f, "{num}")?;
            }
            f.write_str(rad)?;
            if mag.denom() != &BigInt::from(1) {
                write!(f, "/{}", mag.denom())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, y: &FieldElement) -> FieldElement {
        FieldElement::new(&self.a + &y.a, &self.b + &y.b, &self.c + &y.c, &self.d + &y.d)
    }
}

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, y: &FieldElement) -> FieldElement {
        FieldElement::new(&self.a - &y.a, &self.b - &y.b, &self.c - &y.c, &self.d - &y.d)
    }
}

impl Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, y: &FieldElement) -> FieldElement {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&y.a, &y.b, &y.c, &y.d);
        let two = Rational::from(2);
        let three = Rational::from(3);
        let six = Rational::from(6);
        // √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2
        let one_part = a * e + &two * &(b * f) + &three * &(c * g) + &six * &(d * h);
        let s2 = a * f + b * e + &three * &(c * h + d * g);
        let s3 = a * g + c * e + &two * &(b * h + d * f);
        let s6 = a * h + d * e + b * g + c * f;
        FieldElement::new(one_part, s2, s3, s6)
    }
}

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;

    /// Panics on a zero divisor; see [`FieldElement::checked_div`].
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("field division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        FieldElement::from_rational(r)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = FieldElement>>(iter: I) -> Self {
        iter.fold(FieldElement::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(a: i64, b: i64, c: i64, d: i64) -> FieldElement {
        FieldElement::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&fe(1, 1, 0, 0) + &fe(-1, 0, 1, 0), fe(0, 1, 1, 0));
        let x = fe(3, -2, 5, 7);
        assert_eq!(&x + &FieldElement::zero(), x);
        assert!((&FieldElement::sqrt6() + &(-FieldElement::sqrt6())).is_zero());
    }

    #[test]
    fn basis_products() {
        let (s2, s3, s6) = (FieldElement::sqrt2(), FieldElement::sqrt3(), FieldElement::sqrt6());
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s6 * &s6, FieldElement::from_int(6));
        assert_eq!(&s2 * &s6, fe(0, 0, 2, 0));
        assert_eq!(&s3 * &s6, fe(0, 3, 0, 0));
        assert_eq!(&s2 * &s2, FieldElement::from_int(2));
        assert_eq!(&s3 * &s3, FieldElement::from_int(3));
        assert_eq!(&fe(1, 1, 0, 0) * &fe(-1, 1, 0, 0), FieldElement::one());
    }

    #[test]
    fn inverse_examples() {
        let half_s2 = FieldElement::sqrt2().scale(&Rational::frac(1, 2));
        assert_eq!(FieldElement::sqrt2().inv().unwrap(), half_s2);
        assert_eq!(FieldElement::from_int(2).inv().unwrap(), FieldElement::frac(1, 2));
        assert_eq!(FieldElement::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_full_element() {
        // candidate from rationalizing (1+√2)(1+√3); the oracle is the product
        let x = fe(1, 1, 1, 1);
        let candidate = fe(1, -1, -1, 1).scale(&Rational::frac(1, 2));
        assert!((&x * &candidate).is_one());
        assert_eq!(x.inv().unwrap(), candidate);
    }

    #[test]
    fn sqrt_examples() {
        let r = sqrt_in_field(&Rational::frac(3, 2)).unwrap();
        assert_eq!(r, FieldElement::sqrt6().scale(&Rational::frac(1, 2)));
        assert_eq!(r.to_string(), "√6/2");
        assert_eq!(sqrt_in_field(&Rational::from(4)).unwrap(), FieldElement::from_int(2));
        assert!(matches!(sqrt_in_field(&Rational::from(5)), Err(Error::UnsupportedRadical(_))));
        assert!(matches!(sqrt_in_field(&Rational::from(-2)), Err(Error::UnsupportedRadical(_))));
        assert!(matches!(sqrt_in_field(&Rational::frac(1, 10)), Err(Error::UnsupportedRadical(_))));
        assert_eq!(
            sqrt_in_field(&Rational::frac(2, 3)).unwrap(),
            FieldElement::sqrt6().scale(&Rational::frac(1, 3))
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(FieldElement::zero().to_string(), "0");
        assert_eq!(FieldElement::frac(-1, 3).to_string(), "-1/3");
        assert_eq!(FieldElement::sqrt2().scale(&Rational::frac(-2, 3)).to_string(), "-2√2/3");
        assert_eq!(fe(1, 0, -1, 0).to_string(), "1 - √3");
        assert_eq!(fe(0, 1, 1, 0).to_string(), "√2 + √3");
    }

    #[test]
    fn serializes_as_four_rational_strings() {
        let x = FieldElement::new(Rational::frac(1, 2), 0.into(), 0.into(), Rational::frac(-1, 3));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"a":"1/2","b":"0","c":"0","d":"-1/3"}"#);
        let back: FieldElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
