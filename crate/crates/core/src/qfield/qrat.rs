//! Exact rational functions in `q`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{poly_div_exact, poly_gcd, LaurentPoly};
use super::QError;

/// A quotient of Laurent polynomials kept in canonical form:
///
/// - the denominator is an ordinary polynomial with nonzero constant term and
///   positive leading coefficient;
/// - numerator and denominator are coprime in `Q[q]` (after removing the
///   power of `q` from the numerator) and their integer contents are coprime;
/// - zero is `0 / 1`.
///
/// Equality is therefore structural. The derived `Ord` is a structural total
/// order used for canonical sorting only; it is not the numeric order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QRat {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies one field operation; division by zero is reported, not panicked on.
pub fn qrat_arith(a: &QRat, b: &QRat, op: ArithOp) -> Result<QRat, QError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl QRat {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_laurent(LaurentPoly::constant(n))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    /// `c * q^e`
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigInt::from(c), e))
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.low_exp();
        let (mut num, mut den) = (num.shift(-shift), den.shift(-shift));
        if !den.is_constant() {
            let g = poly_gcd(num.dense(), den.dense());
            if g.len() > 1 {
                let low = num.low_exp();
                num = LaurentPoly::from_dense(low, poly_div_exact(num.dense(), &g));
                den = LaurentPoly::from_dense(0, poly_div_exact(den.dense(), &g));
            }
        }
        let c = num.content().gcd(&den.content());
        let c = if den.leading_coeff().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        Self { num, den }
    }

    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, QError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, QError> {
        if q0.is_zero() && self.num.low_exp() < 0 {
            return Err(QError::Pole(q0.to_string()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QError::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Structural size used to pick elimination pivots: number of monomials,
    /// then total degree spread.
    pub fn complexity(&self) -> (usize, i64) {
        (
            self.num.num_terms() + self.den.num_terms(),
            self.num.high_exp() - self.num.low_exp() + self.den.high_exp(),
        )
    }

    /// Numerator and denominator as displayed: both multiplied by the power of
    /// `q` that clears negative exponents from the numerator.
    pub fn display_parts(&self) -> (LaurentPoly, LaurentPoly) {
        let s = (-self.num.low_exp()).max(0);
        (self.num.shift(s), self.den.shift(s))
    }
}

/// `q_i - q_i^-1` for `q_i = q^d`.
pub fn q_diff(d: i64) -> QRat {
    QRat::from_laurent(LaurentPoly::from_terms([
        (d, BigInt::one()),
        (-d, -BigInt::one()),
    ]))
}

/// `q^a + q^-a`
pub fn q_sum(a: i64) -> QRat {
    &QRat::q_pow(a) + &QRat::q_pow(-a)
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for &QRat {
    type Output = QRat;

    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_laurent(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QRat::canonical(&self.num + &rhs.num, self.den.clone());
        }
        QRat::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QRat {
    type Output = QRat;

    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;

    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &QRat {
    type Output = QRat;

    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_laurent(&self.num * &rhs.num);
        }
        QRat::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QRat {
    type Output = QRat;

    /// Panics on division by zero; use [`QRat::checked_div`] when the divisor
    /// is not known to be nonzero.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("QRat division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat { (&self).$m(&rhs) }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for QRat {
    /// `(num)/(den)` with polynomial numerator and denominator, or the bare
    /// numerator when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.display_parts();
        if d.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({d})")
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat[{self}]")
    }
}

impl FromStr for QRat {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, QError> {
        super::parse::parse_qrat(s)
    }
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q_diff(1) * &q_sum(1), q_diff(2));
    }

    #[test]
    fn quotient_canonical_form() {
        // (q^2+q^-2)/(q^-2-q^2) = (q^4+1)/(1-q^4)
        let v = &q_sum(2) / &(-&q_diff(2));
        let v = &v + &QRat::zero();
        assert_eq!(v.to_string(), "(-q^4 - 1)/(q^4 - 1)");
        assert_eq!(v.denom().coeff(0), BigInt::from(-1));
        assert_eq!(v, r("(q^4+1)/(1-q^4)"));
    }

    #[test]
    fn reduces_common_factors_and_content() {
        let v = r("(2*q^2 - 2)/(4*q - 4)");
        assert_eq!(v.to_string(), "(q + 1)/(2)");
        assert_eq!(r("q^3/q^5"), QRat::q_pow(-2));
        assert_eq!(r("q^3/q^5").to_string(), "(1)/(q^2)");
    }

    #[test]
    fn display_example() {
        // -q^2 + q^-2 is shown over q^2
        let v = &QRat::q_pow(-2) - &QRat::q_pow(2);
        assert_eq!(v.to_string(), "(-q^4 + 1)/(q^2)");
        assert_eq!(r("(-q^4 + 1)/(q^2)"), v);
    }

    #[test]
    fn evaluation() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(q_diff(1).eval(&two).unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(QRat::q_pow(-6).eval(&BigRational::one()).unwrap(), BigRational::one());
        let pole = q_diff(1).inv().unwrap();
        assert!(matches!(pole.eval(&BigRational::one()), Err(QError::Pole(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            qrat_arith(&QRat::one(), &QRat::zero(), ArithOp::Div),
            Err(QError::DivisionByZero)
        );
        assert!(QRat::zero().inv().is_err());
    }

    #[test]
    fn negative_powers() {
        let a = r("q - 1");
        assert_eq!(a.pow(-2).unwrap(), r("1/(q^2 - 2*q + 1)"));
    }
}
