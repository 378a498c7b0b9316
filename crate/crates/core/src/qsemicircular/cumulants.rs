use num_bigint::BigInt;
use serde::Serialize;

use super::{block_size_tally, moments_cf, par_sum_matchings};
use crate::combinat::{cro_within, mobius_to_top, partitions_above, Matching};
use crate::exactpoly::{EgfSeries, IntPoly, RatPoly};
use crate::graphs::{crossing_graph, TutteEngine, TutteEvaluator};
use crate::{Error, Result};

/// Classical cumulants `k_0..k_order` and their normalizations
/// `k̃_{2n} = k_{2n} / (q-1)^{n-1}`. Slot 0 and odd slots are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CumulantTable {
    k: Vec<IntPoly>,
    k_tilde: Vec<IntPoly>,
}

impl CumulantTable {
    /// Checks that odd cumulants vanish and divides out `(q-1)^{n-1}`.
    pub fn from_cumulants(k: Vec<IntPoly>) -> Result<Self> {
        let mut k_tilde = Vec::with_capacity(k.len());
        for (n, kn) in k.iter().enumerate() {
            if n % 2 == 1 {
                if !kn.is_zero() {
                    return Err(Error::OddCumulantNonzero(n));
                }
                k_tilde.push(IntPoly::zero());
            } else if n == 0 {
                k_tilde.push(kn.clone());
            } else {
                let d = IntPoly::from_i64s(&[-1, 1]).pow((n / 2 - 1) as u32);
                k_tilde.push(kn.divide_exact(&d)?);
            }
        }
        Ok(CumulantTable { k, k_tilde })
    }

    pub fn order(&self) -> usize {
        self.k.len() - 1
    }

    pub fn k(&self, n: usize) -> &IntPoly {
        &self.k[n]
    }

    pub fn k_tilde(&self, n: usize) -> &IntPoly {
        &self.k_tilde[n]
    }

    pub fn k_all(&self) -> &[IntPoly] {
        &self.k
    }

    pub fn k_tilde_all(&self) -> &[IntPoly] {
        &self.k_tilde
    }
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: order });
    }
    Ok(())
}

/// Cumulants from moments by the lattice sum
/// `k_n = Σ_{π ∈ P(n)} m_π μ(π, 1̂)`, with partitions grouped by block sizes.
pub fn cumulants_mobius(order: usize) -> Result<CumulantTable> {
    check_order(order)?;
    let m = moments_cf(order);
    let mut k = vec![IntPoly::zero()];
    for n in 1..=order {
        let mut kn = IntPoly::zero();
        for (sizes, count) in block_size_tally(n, false) {
            let m_pi: IntPoly = sizes.iter().map(|&s| m.get(s).clone()).product();
            if m_pi.is_zero() {
                continue;
            }
            kn += &m_pi.scale(&(mobius_to_top(sizes.len()) * BigInt::from(count)));
        }
        k.push(kn);
    }
    CumulantTable::from_cumulants(k)
}

/// Coefficients of `log(Σ m_n z^n/n!)`, which must all be integral.
pub(crate) fn log_of_moments(m: &[IntPoly]) -> Result<Vec<IntPoly>> {
    let order = m.len() - 1;
    let series = EgfSeries::new(order, m.iter().cloned().map(RatPoly::from).collect())?;
    series
        .log()?
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.to_int().ok_or(Error::NonIntegral(n)))
        .collect()
}

/// Cumulants as the coefficients of the log of the moment EGF.
pub fn cumulants_log(order: usize) -> Result<CumulantTable> {
    check_order(order)?;
    CumulantTable::from_cumulants(log_of_moments(moments_cf(order).as_slice())?)
}

/// `c_n = Σ q^{cro(σ)}` over connected matchings of `{1..n}`.
pub fn free_cumulants_connected(order: usize) -> Result<Vec<IntPoly>> {
    check_order(order)?;
    Ok((0..=order)
        .map(|n| {
            if n == 0 || n % 2 == 1 {
                return IntPoly::zero();
            }
            par_sum_matchings(n, |s| {
                if s.is_connected() {
                    Ok::<_, Error>(IntPoly::x_pow(crate::combinat::cro(s)))
                } else {
                    Ok(IntPoly::zero())
                }
            })
            .expect("infallible")
        })
        .collect())
}

/// Free cumulants from `m_n = Σ_{π ∈ NC(n)} c_π`, solved for `c_n` one
/// degree at a time since the top partition contributes `c_n` alone.
pub fn free_cumulants_recursion(order: usize) -> Result<Vec<IntPoly>> {
    check_order(order)?;
    let m = moments_cf(order);
    let mut c = vec![IntPoly::zero()];
    for n in 1..=order {
        let mut rest = IntPoly::zero();
        for (sizes, count) in block_size_tally(n, true) {
            if sizes.len() == 1 {
                continue;
            }
            let c_pi: IntPoly = sizes.iter().map(|&s| c[s].clone()).product();
            if !c_pi.is_zero() {
                rest += &c_pi.scale(&BigInt::from(count));
            }
        }
        c.push(m.get(n) - &rest);
    }
    Ok(c)
}

/// `k̃_{2n} = Σ T_{G(σ)}(1, q)` over connected matchings, as a table indexed
/// like [`CumulantTable`].
pub fn cumulants_tutte(order: usize) -> Result<Vec<IntPoly>> {
    cumulants_tutte_with(order, &TutteEngine::new())
}

pub fn cumulants_tutte_with(order: usize, tutte: &dyn TutteEvaluator) -> Result<Vec<IntPoly>> {
    check_order(order)?;
    (0..=order)
        .map(|n| {
            if n == 0 || n % 2 == 1 {
                return Ok(IntPoly::zero());
            }
            par_sum_matchings(n, |s| {
                if s.is_connected() {
                    Ok(tutte.tutte_1q(&crossing_graph(s).graph)?)
                } else {
                    Ok(IntPoly::zero())
                }
            })
        })
        .collect()
}

/// `W(σ) = Σ_{π ≥ σ} q^{cro(σ,π)} μ(π, 1̂)`.
pub fn w_of_matching(sigma: &Matching) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); crate::combinat::cro(sigma) + 1];
    for pi in partitions_above(sigma) {
        let c = cro_within(sigma, &pi).expect("π is above σ");
        coeffs[c] += pi.mobius_to_top();
    }
    IntPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_matchings;
    use crate::graphs::partition_sum_u;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_cumulants() {
        let t = cumulants_log(8).unwrap();
        assert_eq!(t.k(2), &IntPoly::one());
        assert_eq!(t.k(4), &poly(&[-1, 1]));
        assert_eq!(t.k(6), &poly(&[5, -9, 3, 1]));
        assert_eq!(t.k(8), &poly(&[-56, 140, -91, -8, 10, 4, 1]));
        assert_eq!(t.k_tilde(2), &IntPoly::one());
        assert_eq!(t.k_tilde(4), &IntPoly::one());
        assert_eq!(t.k_tilde(6), &poly(&[5, 1]));
        assert_eq!(t.k_tilde(8), &poly(&[56, 28, 7, 1]));
        for n in [1, 3, 5, 7] {
            assert!(t.k(n).is_zero());
        }
    }

    #[test]
    fn lattice_and_log_agree() {
        assert_eq!(cumulants_mobius(10).unwrap(), cumulants_log(10).unwrap());
    }

    #[test]
    fn larger_normalized_cumulants() {
        let t = cumulants_log(12).unwrap();
        assert_eq!(t.k_tilde(10), &poly(&[1092, 918, 450, 165, 45, 9, 1]));
        assert_eq!(
            t.k_tilde(12),
            &poly(&[32670, 39105, 28017, 15697, 7337, 2937, 1001, 286, 66, 11, 1])
        );
        assert_eq!(
            t.k(10),
            &poly(&[1092, -3450, 3330, -495, -495, -63, 25, 35, 15, 5, 1])
        );
    }

    #[test]
    fn gaussian_limit_at_one() {
        let t = cumulants_log(12).unwrap();
        assert_eq!(t.k(2).eval_int(1), BigInt::from(1));
        for n in 2..=6 {
            assert_eq!(t.k(2 * n).eval_int(1), BigInt::from(0));
        }
    }

    #[test]
    fn order_too_small() {
        assert_eq!(
            cumulants_log(1).unwrap_err(),
            Error::OrderTooSmall { min: 2, got: 1 }
        );
    }

    #[test]
    fn odd_cumulant_rejected() {
        let k = vec![IntPoly::zero(), IntPoly::one(), IntPoly::one()];
        assert_eq!(
            CumulantTable::from_cumulants(k).unwrap_err(),
            Error::OddCumulantNonzero(1)
        );
    }

    #[test]
    fn free_cumulants() {
        let a = free_cumulants_connected(12).unwrap();
        assert_eq!(a[2], IntPoly::one());
        assert_eq!(a[4], poly(&[0, 1]));
        assert_eq!(a[6], poly(&[0, 0, 3, 1]));
        assert_eq!(a, free_cumulants_recursion(12).unwrap());
        let counts: Vec<BigInt> = (1..=6).map(|n| a[2 * n].eval_int(1)).collect();
        let expect: Vec<BigInt> = [1, 1, 4, 27, 248, 2830].map(BigInt::from).to_vec();
        assert_eq!(counts, expect);
    }

    #[test]
    fn tutte_route() {
        let k = cumulants_tutte(10).unwrap();
        let t = cumulants_log(10).unwrap();
        assert_eq!(k.as_slice(), t.k_tilde_all());
        assert_eq!(k[6], poly(&[5, 1]));
    }

    #[test]
    fn w_examples() {
        let crossing = Matching::from_arches(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(w_of_matching(&crossing), poly(&[-1, 1]));
        let split = Matching::from_arches(&[(1, 2), (3, 4)]).unwrap();
        assert!(w_of_matching(&split).is_zero());
    }

    #[test]
    fn w_matches_graph_sum_and_cumulants() {
        for n2 in [2, 4, 6, 8] {
            let mut total = IntPoly::zero();
            for sigma in enumerate_matchings(n2).unwrap() {
                let w = w_of_matching(&sigma);
                assert_eq!(w, partition_sum_u(&crossing_graph(&sigma).graph).unwrap());
                total += &w;
            }
            assert_eq!(&total, cumulants_log(n2).unwrap().k(n2));
        }
    }
}
