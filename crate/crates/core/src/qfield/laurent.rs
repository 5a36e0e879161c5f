//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`.
///
/// Stored densely as `coeffs[i]` = coefficient of `q^(low + i)`. The first and
/// last stored coefficients are nonzero; the zero polynomial has no
/// coefficients (and `low == 0`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`
    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for a nonzero constant (degree-zero polynomial).
    pub fn is_constant(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficient of the highest power.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    /// Exact division of every coefficient by `c`. `c` must divide the content.
    pub(crate) fn div_exact_scalar(&self, c: &BigInt) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Coefficients of `q^-low * self`, i.e. the polynomial part with the
    /// `q`-power factored out.
    pub(crate) fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        acc * pow_rational(q0, self.low)
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high_exp().max(rhs.high_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - lo) as usize + i] += c;
        }
        LaurentPoly::from_dense(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending monomials `c*q^e`, e.g. `-q^4 + 3*q - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{mag}*q")?,
                (false, _) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// Dense polynomial helpers over Z[q]; index = degree, no trailing zeros.

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

/// Sparse pseudo-remainder of `a` by `b`; equals `prem(a, b)` up to a power of
/// `lc(b)`, which is irrelevant once primitive parts are taken.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = b.len() - 1;
    let lc = &b[n];
    let mut r = a.to_vec();
    while r.len() > n {
        let d = r.len() - 1;
        let lead = r[d].clone();
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[d - n + i] -= &lead * bc;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd in `Z[q]` with positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let (mut a, mut b) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    if a.last().unwrap().is_negative() {
        a = a.iter().map(|c| -c).collect();
    }
    a
}

/// Exact quotient `a / b` in `Z[q]`, where `b` is primitive and divides `a`.
pub(crate) fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = b.len() - 1;
    if a.len() < b.len() {
        debug_assert!(a.is_empty());
        return Vec::new();
    }
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - n];
    for d in (n..a.len()).rev() {
        let (qc, rem) = r[d].div_rem(&b[n]);
        assert!(rem.is_zero(), "inexact polynomial division");
        if qc.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            r[d - n + i] -= &qc * bc;
        }
        quot[d - n] = qc;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(quot)
}
