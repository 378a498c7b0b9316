//! The free Poisson law with rate `λ`: Narayana moments, and classical
//! cumulants computed by the formal logarithm, by a double lattice sum over
//! pairs `ρ ⊴ π`, and by `T(1, 0)` over connected set partitions.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::{
    enumerate_noncrossing_partitions, enumerate_set_partitions, partitions_above_blocks, GroundSet,
    SetPartition,
};
use crate::exactpoly::{binomial, IntPoly};
use crate::graphs::{crossing_graph_partition, TutteEngine, TutteEvaluator};
use crate::qsemicircular::log_of_moments;
use crate::{Error, Result};

/// Moments `m_0..m_order` as polynomials in `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonMomentTable {
    m: Vec<IntPoly>,
}

impl PoissonMomentTable {
    pub fn order(&self) -> usize {
        self.m.len() - 1
    }

    pub fn get(&self, n: usize) -> &IntPoly {
        &self.m[n]
    }

    pub fn as_slice(&self) -> &[IntPoly] {
        &self.m
    }
}

/// Moments from the Narayana numbers `N(n,k) = C(n,k) C(n,k-1) / n`.
pub fn poisson_moments(order: usize) -> PoissonMomentTable {
    let mut m = vec![IntPoly::one()];
    for n in 1..=order {
        let mut coeffs = vec![BigInt::from(0)];
        for k in 1..=n {
            coeffs.push(binomial(n, k) * binomial(n, k - 1) / BigInt::from(n));
        }
        m.push(IntPoly::from_coeffs(coeffs));
    }
    PoissonMomentTable { m }
}

/// Moments as `Σ_{π ∈ NC(n)} λ^{#π}`, by enumeration.
pub fn poisson_moments_nc(order: usize) -> PoissonMomentTable {
    let m = (0..=order)
        .map(|n| {
            let mut coeffs = vec![BigInt::from(0); n + 1];
            for pi in enumerate_noncrossing_partitions(&GroundSet::range(n)) {
                coeffs[pi.num_blocks()] += 1;
            }
            IntPoly::from_coeffs(coeffs)
        })
        .collect();
    PoissonMomentTable { m }
}

fn check_order(order: usize) -> Result<()> {
    if order < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: order });
    }
    Ok(())
}

/// Cumulants `k_0..k_order` as the coefficients of the log of the moment EGF.
pub fn poisson_cumulants_log(order: usize) -> Result<Vec<IntPoly>> {
    check_order(order)?;
    log_of_moments(poisson_moments(order).as_slice())
}

/// `ρ ⊴ π`: `ρ` refines `π` and its restriction to each block of `π` is
/// noncrossing.
pub fn is_nc_refinement(rho: &SetPartition, pi: &SetPartition) -> bool {
    rho.refines(pi)
        && pi.blocks().iter().all(|b| {
            rho.restrict(b)
                .expect("refinement checked")
                .is_noncrossing()
        })
}

/// `W(ρ) = Σ_{π : ρ ⊴ π} μ(π, 1̂)`.
pub fn w_of_partition(rho: &SetPartition) -> BigInt {
    partitions_above_blocks(rho)
        .filter(|pi| is_nc_refinement(rho, pi))
        .map(|pi| pi.mobius_to_top())
        .sum()
}

/// Cumulants by the double lattice sum `Σ_{ρ ⊴ π} λ^{#ρ} μ(π, 1̂)`,
/// grouped as `Σ_ρ λ^{#ρ} W(ρ)`.
pub fn poisson_cumulants_mobius(order: usize) -> Result<Vec<IntPoly>> {
    check_order(order)?;
    let mut k = vec![IntPoly::zero()];
    for n in 1..=order {
        let rhos: Vec<SetPartition> = enumerate_set_partitions(&GroundSet::range(n)).collect();
        let terms: Vec<(usize, BigInt)> = rhos
            .par_iter()
            .map(|rho| (rho.num_blocks(), w_of_partition(rho)))
            .collect();
        let mut coeffs = vec![BigInt::from(0); n + 1];
        for (blocks, w) in terms {
            coeffs[blocks] += w;
        }
        k.push(IntPoly::from_coeffs(coeffs));
    }
    Ok(k)
}

/// Cumulants as `-Σ_{π connected} (-λ)^{#π} T_{G(π)}(1, 0)`.
pub fn poisson_cumulants_tutte(order: usize) -> Result<Vec<IntPoly>> {
    poisson_cumulants_tutte_with(order, &TutteEngine::new())
}

pub fn poisson_cumulants_tutte_with(
    order: usize,
    tutte: &dyn TutteEvaluator,
) -> Result<Vec<IntPoly>> {
    check_order(order)?;
    let mut k = vec![IntPoly::zero()];
    for n in 1..=order {
        let connected: Vec<SetPartition> = enumerate_set_partitions(&GroundSet::range(n))
            .filter(SetPartition::is_connected)
            .collect();
        let terms: Vec<(usize, BigInt)> = connected
            .par_iter()
            .map(|pi| {
                let t = tutte.tutte_1q(&crossing_graph_partition(pi))?.eval_int(0);
                Ok((pi.num_blocks(), t))
            })
            .collect::<Result<_>>()?;
        let mut coeffs = vec![BigInt::from(0); n + 1];
        for (blocks, t) in terms {
            // -(-1)^b = (-1)^{b+1}
            if blocks % 2 == 1 {
                coeffs[blocks] += t;
            } else {
                coeffs[blocks] -= t;
            }
        }
        k.push(IntPoly::from_coeffs(coeffs));
    }
    Ok(k)
}
