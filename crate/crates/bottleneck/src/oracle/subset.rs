//! Subset-enumeration oracle for bottleneck subset instances.

use crate::greedy::Instance;
use crate::quality::Quality;

use super::OracleError;

const BUDGET: usize = 12;

/// Enumerates every nonempty subset of the universe, computes its quality by
/// replaying removals on a fresh copy, and returns the optimum together with
/// the union of all subsets attaining it (the maximal bottleneck subset).
pub fn bottleneck_subset_oracle<I>(proto: &I) -> Result<(Quality<I::Value>, Vec<usize>), OracleError>
where
    I: Instance + Clone,
{
    let n = proto.universe();
    if n > BUDGET {
        return Err(OracleError::BudgetExceeded(n, BUDGET));
    }
    let mut best = Quality::NegInf;
    let mut union = 0u32;
    for mask in 1u32..(1 << n) {
        let mut inst = proto.clone();
        for x in 0..n {
            if mask & (1 << x) == 0 && inst.is_alive(x) {
                inst.remove(x);
            }
        }
        let mut q = Quality::PosInf;
        for x in 0..n {
            if mask & (1 << x) != 0 {
                q = q.min(inst.quality(x));
            }
        }
        if q > best {
            best = q;
            union = mask;
        } else if q == best {
            union |= mask;
        }
    }
    Ok((best, (0..n).filter(|&x| union & (1 << x) != 0).collect()))
}
