use rayon::prelude::*;

use crate::combinat::{cro, enumerate_matchings, matchings_with_first_arch, Matching};
use crate::exactpoly::IntPoly;

/// Moments `m_0..m_order` of the q-semicircular law as polynomials in `q`.
/// Odd slots are stored explicitly as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    m: Vec<IntPoly>,
}

impl MomentTable {
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

/// Moments from the Stieltjes continued fraction with weights `[h]_q`,
/// read as weighted Dyck paths: an up step costs 1, a down step from height
/// `h` costs `[h]_q = 1 + q + ... + q^{h-1}`.
pub fn moments_cf(order: usize) -> MomentTable {
    let depth = order / 2 + 1;
    let weights: Vec<IntPoly> = (0..=depth).map(IntPoly::q_integer).collect();
    // paths[h] = weighted count of prefixes of the current length ending at height h
    let mut paths = vec![IntPoly::zero(); depth + 1];
    paths[0] = IntPoly::one();
    let mut m = vec![IntPoly::one()];
    for _ in 1..=order {
        let mut next = vec![IntPoly::zero(); depth + 1];
        for h in 0..=depth {
            if paths[h].is_zero() {
                continue;
            }
            if h < depth {
                next[h + 1] += &paths[h];
            }
            if h > 0 {
                next[h - 1] += &(&paths[h] * &weights[h]);
            }
        }
        paths = next;
        m.push(paths[0].clone());
    }
    MomentTable { m }
}

/// `Σ_σ f(σ)` over all matchings of `{1..n2}`, split across threads by the
/// partner of 1. Slices are summed in partner order; exact arithmetic makes
/// the result independent of scheduling anyway.
pub(crate) fn par_sum_matchings<F, E>(n2: usize, f: F) -> Result<IntPoly, E>
where
    F: Fn(&Matching) -> Result<IntPoly, E> + Sync,
    E: Send,
{
    if n2 == 0 {
        return enumerate_matchings(0).expect("even").map(|s| f(&s)).sum();
    }
    (2..=n2 as u32)
        .into_par_iter()
        .map(|partner| {
            matchings_with_first_arch(n2, partner)
                .expect("even ground set")
                .map(|s| f(&s))
                .sum::<Result<IntPoly, E>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

/// Moments by counting matchings according to their crossings:
/// `m_{2n}(q) = Σ_{σ ∈ M(2n)} q^{cro(σ)}`.
pub fn moments_matchings(order: usize) -> MomentTable {
    let m = (0..=order)
        .map(|n| {
            if n % 2 == 1 {
                IntPoly::zero()
            } else {
                par_sum_matchings(n, |s| Ok::<_, ()>(IntPoly::x_pow(cro(s)))).expect("infallible")
            }
        })
        .collect();
    MomentTable { m }
}
