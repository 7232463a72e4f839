use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentScalar;
use super::poly::IntPoly;
use super::RingError;

/// Element of Q(q) as a reduced fraction of integer polynomials.
/// Invariant: gcd(num, den) = 1 over Z[q] and lc(den) > 0, so equal values
/// have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalScalar {
    num: IntPoly,
    den: IntPoly,
}

impl Default for RationalScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalScalar {
    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::new(IntPoly::constant(c.into()), IntPoly::one()).expect("nonzero denominator")
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(&LaurentScalar::q_pow(k))
    }

    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.lc().is_some_and(|c| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Self { num, den }
    }

    pub fn from_laurent(x: &LaurentScalar) -> Self {
        let Some(lo) = x.min_exp() else {
            return Self::zero();
        };
        let shift = lo.min(0);
        let hi = x.max_exp().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - shift + 1) as usize];
        for (e, c) in x.terms() {
            coeffs[(e - shift) as usize] = c.clone();
        }
        let num = IntPoly::from_coeffs(coeffs);
        let den = IntPoly::monomial(BigInt::one(), (-shift) as usize);
        Self::reduce(num, den)
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is a power of q.
    pub fn to_laurent(&self) -> Option<LaurentScalar> {
        if !self.den.is_monomial() || !self.den.lc()?.is_one() {
            return None;
        }
        let k = self.den.degree()? as i64;
        Some(LaurentScalar::from_terms(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 - k, c.clone())),
        ))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn mul_laurent(&self, x: &LaurentScalar) -> Self {
        self.mul(&Self::from_laurent(x))
    }

    /// Value at q = 1, or None when the denominator vanishes there.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let one = BigInt::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval(&one), d))
    }
}

impl From<&LaurentScalar> for RationalScalar {
    fn from(x: &LaurentScalar) -> Self {
        Self::from_laurent(x)
    }
}

fn poly_as_laurent(p: &IntPoly) -> LaurentScalar {
    LaurentScalar::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64, c.clone())),
    )
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        write!(
            f,
            "({})/({})",
            poly_as_laurent(&self.num),
            poly_as_laurent(&self.den)
        )
    }
}

impl fmt::Debug for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Zero for RationalScalar {
    fn zero() -> Self {
        RationalScalar::zero()
    }
    fn is_zero(&self) -> bool {
        RationalScalar::is_zero(self)
    }
}

impl std::ops::Add for RationalScalar {
    type Output = RationalScalar;
    fn add(self, rhs: Self) -> Self {
        RationalScalar::add(&self, &rhs)
    }
}
