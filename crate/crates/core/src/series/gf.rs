use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// A rational function `num/den` with integer coefficients that has a
/// power-series expansion at `x = 0`.
///
/// Always canonical: numerator and denominator share no polynomial factor,
/// their joint integer content is 1, and `den(0) > 0`. Equality is therefore
/// structural. The zero function is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalGF {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalGF {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = IntPolynomial::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        let d0 = den.at_zero();
        if d0.is_zero() {
            return Err(Error::NotPowerSeries(format!("({num})/({den})")));
        }
        if d0.is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalGF { num, den })
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalGF {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    /// Shorthand for literals: ascending coefficient lists.
    pub fn ratio(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(num), IntPolynomial::from_i64s(den))
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(IntPolynomial::from_i64s(&[c]))
    }

    /// `x^d`.
    pub fn x_pow(d: usize) -> Self {
        Self::from_poly(IntPolynomial::monomial(BigInt::one(), d))
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self / rhs`; fails when `rhs` is zero or the quotient has no
    /// expansion at 0.
    pub fn checked_div(&self, rhs: &RationalGF) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Maclaurin coefficients `0..=last`, from the recurrence
    /// `den(0)·a_n = num_n - Σ_{j≥1} den_j·a_{n-j}`.
    pub fn expand(&self, last: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.at_zero();
        let dens = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(last + 1);
        for n in 0..=last {
            let mut acc = self.num.coeff(n);
            for (j, dj) in dens.iter().enumerate().skip(1).take(n) {
                if !dj.is_zero() {
                    acc -= dj * &out[n - j];
                }
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralCoefficient {
                    gf: self.to_string(),
                    index: n,
                });
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Coefficient of `x^n`.
    pub fn coefficient(&self, n: usize) -> Result<BigInt> {
        Ok(self.expand(n)?.pop().expect("expansion is nonempty"))
    }

    /// Whether `seq` (indexed from 0) is the expansion of `self`: checks
    /// `Σ_j den_j·seq(n-j) = num_n` for every index of `seq`, which is the
    /// denominator recurrence for `n > deg num` and pins the initial terms
    /// below it.
    pub fn recurrence_check(&self, seq: &[BigInt]) -> bool {
        let dens = self.den.coeffs();
        (0..seq.len()).all(|n| {
            let lhs: BigInt = dens
                .iter()
                .enumerate()
                .take(n + 1)
                .map(|(j, dj)| dj * &seq[n - j])
                .sum();
            lhs == self.num.coeff(n)
        })
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("sum of power series is a power series")
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, rhs: &RationalGF) -> RationalGF {
        self + &(-rhs)
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of power series is a power series")
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;
    fn neg(self) -> RationalGF {
        RationalGF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF({self})")
    }
}

impl<'de> Deserialize<'de> for RationalGF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: IntPolynomial,
            den: IntPolynomial,
        }
        let raw = Raw::deserialize(d)?;
        RationalGF::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::ratio(num, den).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn field_identities() {
        let a = gf(&[1, 2], &[1, -3, 1]);
        assert_eq!(&a + &RationalGF::zero(), a);
        assert_eq!(&a * &RationalGF::one(), a);
        let geo = gf(&[1], &[1, -1]);
        assert_eq!(
            &geo * &RationalGF::ratio(&[1, -1], &[1]).unwrap(),
            RationalGF::one()
        );
        assert_eq!(&gf(&[0, 1], &[1, -1]) + &RationalGF::one(), geo);
        assert_eq!(&(&a - &a), &RationalGF::zero());
        assert_eq!(a.checked_div(&a).unwrap(), RationalGF::one());
    }

    #[test]
    fn canonical_form_is_reduced() {
        let f3 = gf(&[1, -1], &[1, -2, 0, 1]);
        assert_eq!(f3.num().coeffs(), ints(&[1]).as_slice());
        assert_eq!(f3.den().coeffs(), ints(&[1, -1, -1]).as_slice());
        let scaled = gf(&[-2, 2], &[-2, 4, 0, -2]);
        assert_eq!(scaled, f3);
        assert_eq!(gf(&[0, 1], &[0, 2, 2]), gf(&[1], &[2, 2]));
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            RationalGF::one().checked_div(&RationalGF::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            RationalGF::one().checked_div(&RationalGF::x_pow(1)),
            Err(Error::NotPowerSeries(_))
        ));
        assert!(RationalGF::ratio(&[1], &[]).is_err());
    }

    #[test]
    fn expansions() {
        assert_eq!(
            gf(&[1], &[1, -2]).expand(4).unwrap(),
            ints(&[1, 2, 4, 8, 16])
        );
        assert_eq!(
            gf(&[1, -1], &[1, -2, 0, 0, 1]).expand(6).unwrap(),
            ints(&[1, 1, 2, 4, 7, 13, 24])
        );
        assert_eq!(gf(&[1, -1], &[1, -2, 1]).expand(5).unwrap(), ints(&[1; 6]));
        assert!(matches!(
            gf(&[1], &[2, -1]).expand(3),
            Err(Error::NonIntegralCoefficient { index: 0, .. })
        ));
    }

    #[test]
    fn recurrence_checks() {
        let geo = gf(&[1], &[1, -1]);
        assert!(geo.recurrence_check(&ints(&[1, 1, 1, 1])));
        assert!(!geo.recurrence_check(&ints(&[1, 1, 1, 2])));
        let g = gf(&[1, 0, 5], &[1, -1]);
        assert!(g.recurrence_check(&ints(&[1, 1, 6, 6, 6])));
        assert!(!g.recurrence_check(&ints(&[1, 1, 5, 5, 5])));
    }

    #[test]
    fn json_shape() {
        let g = gf(&[1, -1, 0, 1], &[1, -2, 0, 1]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"num":[1,-1,0,1],"den":[1,-2,0,1]}"#);
        let back: RationalGF = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<RationalGF>(r#"{"num":[1],"den":[0,1]}"#).is_err());
    }
}
