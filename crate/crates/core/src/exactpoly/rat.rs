use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError};

/// Polynomial with rational coefficients stored as `num / den`.
///
/// Kept in lowest terms: `den >= 1` and `gcd(content(num), den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    num: IntPoly,
    den: BigInt,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly {
            num: IntPoly::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        IntPoly::one().into()
    }

    pub fn new(num: IntPoly, den: BigInt) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: BigInt) -> Self {
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.content().gcd(&den);
        if g.is_one() {
            RatPoly { num, den }
        } else {
            RatPoly {
                num: num.div_content(&g),
                den: den / g,
            }
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num == IntPoly::one()
    }

    /// The integer polynomial, if the denominator is 1.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }
}

impl From<IntPoly> for RatPoly {
    fn from(num: IntPoly) -> Self {
        RatPoly {
            num,
            den: BigInt::one(),
        }
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        if self.den == rhs.den {
            return RatPoly::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den);
        RatPoly::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}
