use super::{binomial, PolyError, RatPoly};

/// Truncated exponential generating function `sum_{n<=order} s_n z^n / n!`.
///
/// Slot `n` holds `s_n` itself (the coefficient of `z^n/n!`), so products and
/// compositions pick up binomial weights rather than factorial denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<RatPoly>,
}

impl EgfSeries {
    /// Builds a series of the given truncation order. Missing slots are zero;
    /// passing more than `order + 1` slots is an error.
    pub fn new(order: usize, mut coeffs: Vec<RatPoly>) -> Result<Self, PolyError> {
        if coeffs.len() > order + 1 {
            return Err(PolyError::OrderMismatch {
                left: order,
                right: coeffs.len() - 1,
            });
        }
        coeffs.resize(order + 1, RatPoly::zero());
        Ok(EgfSeries { coeffs })
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatPoly::one();
        s
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &RatPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    fn check_order(&self, other: &EgfSeries) -> Result<(), PolyError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(PolyError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &EgfSeries) -> Result<EgfSeries, PolyError> {
        self.check_order(other)?;
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Binomial convolution: `(st)_n = sum_j C(n,j) s_j t_{n-j}`.
    pub fn mul(&self, other: &EgfSeries) -> Result<EgfSeries, PolyError> {
        self.check_order(other)?;
        let coeffs = (0..=self.order())
            .map(|n| {
                let mut acc = RatPoly::zero();
                for j in 0..=n {
                    let term = &self.coeffs[j] * &other.coeffs[n - j];
                    acc = &acc + &term.scale_int(&binomial(n, j));
                }
                acc
            })
            .collect();
        Ok(EgfSeries { coeffs })
    }

    /// Formal logarithm. Requires `s_0 = 1`; the result has `t_0 = 0` and
    /// satisfies `t_n = s_n - sum_{j=1}^{n-1} C(n-1, j-1) t_j s_{n-j}`.
    pub fn log(&self) -> Result<EgfSeries, PolyError> {
        if !self.coeffs[0].is_one() {
            return Err(PolyError::BadConstantTerm);
        }
        let mut t = vec![RatPoly::zero(); self.coeffs.len()];
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for (j, tj) in t.iter().enumerate().take(n).skip(1) {
                if tj.is_zero() || self.coeffs[n - j].is_zero() {
                    continue;
                }
                let term = (tj * &self.coeffs[n - j]).scale_int(&binomial(n - 1, j - 1));
                acc = &acc - &term;
            }
            t[n] = acc;
        }
        Ok(EgfSeries { coeffs: t })
    }

    /// Formal exponential. Requires `t_0 = 0`; inverse recurrence of [`EgfSeries::log`]:
    /// `s_n = sum_{j=1}^{n} C(n-1, j-1) t_j s_{n-j}`.
    pub fn exp(&self) -> Result<EgfSeries, PolyError> {
        if !self.coeffs[0].is_zero() {
            return Err(PolyError::BadConstantTerm);
        }
        let mut s = vec![RatPoly::zero(); self.coeffs.len()];
        s[0] = RatPoly::one();
        for n in 1..self.coeffs.len() {
            let mut acc = RatPoly::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() || s[n - j].is_zero() {
                    continue;
                }
                let term = (&self.coeffs[j] * &s[n - j]).scale_int(&binomial(n - 1, j - 1));
                acc = &acc + &term;
            }
            s[n] = acc;
        }
        Ok(EgfSeries { coeffs: s })
    }
}
