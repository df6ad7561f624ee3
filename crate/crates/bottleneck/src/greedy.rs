//! The generic decremental greedy framework.
//!
//! An [`Instance`] is a universe of dense element ids with a monotone quality
//! measure and removal state. [`decremental_greedy`] repeatedly removes an
//! element whose quality is at most the best subset quality seen so far and
//! returns the unique maximal bottleneck subset; [`known_beta`] removes every
//! element below a given target until none remain. Both produce the same
//! subset for the optimal target, under any removal policy.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::quality::Quality;

/// A monotone bottleneck subset instance.
///
/// Elements are dense ids `0..universe()`. `quality(x)` is defined only while
/// `x` is alive, and must be monotone: removing other elements never improves
/// it. Monotonicity is a documented contract, not checked at runtime; the
/// concrete instances verify it by property tests.
pub trait Instance {
    type Value: Copy + PartialOrd + fmt::Debug;

    fn universe(&self) -> usize;
    fn is_alive(&self, x: usize) -> bool;
    fn quality(&self, x: usize) -> Quality<Self::Value>;
    fn remove(&mut self, x: usize);
}

/// Picks which eligible element the greedy removes next. An element is
/// eligible when its quality is at most the current best subset quality;
/// at least one such element always exists. The returned optimum does not
/// depend on the policy.
pub trait RemovalPolicy<I: Instance> {
    fn choose(&mut self, inst: &I, alive: &[usize], bound: Quality<I::Value>) -> usize;
}

/// Default policy: minimum current quality, lowest element id on ties.
pub struct MinQuality;

impl<I: Instance> RemovalPolicy<I> for MinQuality {
    fn choose(&mut self, inst: &I, alive: &[usize], _bound: Quality<I::Value>) -> usize {
        let mut best = alive[0];
        let mut best_q = inst.quality(best);
        for &x in &alive[1..] {
            let q = inst.quality(x);
            if q < best_q || (q == best_q && x < best) {
                best = x;
                best_q = q;
            }
        }
        best
    }
}

/// Lowest-id element among the eligible ones.
pub struct LowestIdEligible;

impl<I: Instance> RemovalPolicy<I> for LowestIdEligible {
    fn choose(&mut self, inst: &I, alive: &[usize], bound: Quality<I::Value>) -> usize {
        let mut ids: Vec<usize> = alive.to_vec();
        ids.sort_unstable();
        for x in ids {
            if inst.quality(x) <= bound {
                return x;
            }
        }
        unreachable!("a minimum-quality element is always eligible")
    }
}

/// Highest-quality element among the eligible ones, lowest id on ties.
pub struct HighestEligible;

impl<I: Instance> RemovalPolicy<I> for HighestEligible {
    fn choose(&mut self, inst: &I, alive: &[usize], bound: Quality<I::Value>) -> usize {
        let mut best: Option<(Quality<I::Value>, usize)> = None;
        let mut ids: Vec<usize> = alive.to_vec();
        ids.sort_unstable();
        for x in ids {
            let q = inst.quality(x);
            if q <= bound && best.map_or(true, |(bq, _)| q > bq) {
                best = Some((q, x));
            }
        }
        best.expect("a minimum-quality element is always eligible").1
    }
}

/// Uniformly random eligible element, from a seeded generator.
pub struct SeededEligible {
    rng: ChaCha8Rng,
}

impl SeededEligible {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl<I: Instance> RemovalPolicy<I> for SeededEligible {
    fn choose(&mut self, inst: &I, alive: &[usize], bound: Quality<I::Value>) -> usize {
        let eligible: Vec<usize> =
            alive.iter().copied().filter(|&x| inst.quality(x) <= bound).collect();
        eligible[self.rng.gen_range(0..eligible.len())]
    }
}

/// Removal order with the quality each element had at its removal.
#[derive(Clone, Debug)]
pub struct GreedyTrace<V> {
    pub removals: Vec<(usize, Quality<V>)>,
    /// Best subset quality seen over the whole run.
    pub best_value: Quality<V>,
    /// Number of removals after which the best value was first attained; the
    /// survivors at that point are the maximal bottleneck subset.
    pub best_prefix: usize,
}

#[derive(Clone, Debug)]
pub struct GreedyOutcome<V> {
    pub theta: Quality<V>,
    pub subset: Vec<usize>,
    pub trace: GreedyTrace<V>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameworkError {
    #[error("empty universe")]
    EmptyUniverse,
    #[error("universe of {0} elements exceeds the size guard of {1}")]
    SizeGuard(usize, usize),
}

fn subset_after<V>(universe: usize, removals: &[(usize, Quality<V>)], prefix: usize) -> Vec<usize> {
    let mut dead = vec![false; universe];
    for &(x, _) in &removals[..prefix] {
        dead[x] = true;
    }
    (0..universe).filter(|&x| !dead[x]).collect()
}

fn min_alive_quality<I: Instance>(inst: &I, alive: &[usize]) -> Quality<I::Value> {
    let mut q = Quality::PosInf;
    for &x in alive {
        q = q.min(inst.quality(x));
    }
    q
}

/// Runs the decremental greedy to exhaustion and returns the optimal
/// bottleneck value, the maximal subset attaining it, and the full removal
/// trace. The instance is consumed (emptied) in the process.
pub fn decremental_greedy<I, P>(inst: &mut I, policy: &mut P) -> Result<GreedyOutcome<I::Value>, FrameworkError>
where
    I: Instance,
    P: RemovalPolicy<I> + ?Sized,
{
    let n = inst.universe();
    if n == 0 {
        return Err(FrameworkError::EmptyUniverse);
    }
    let mut alive: Vec<usize> = (0..n).filter(|&x| inst.is_alive(x)).collect();
    if alive.is_empty() {
        return Err(FrameworkError::EmptyUniverse);
    }

    let mut theta = Quality::NegInf;
    let mut best_prefix = 0usize;
    let mut removals = Vec::with_capacity(alive.len());

    while !alive.is_empty() {
        let q_here = min_alive_quality(inst, &alive);
        if q_here > theta {
            theta = q_here;
            best_prefix = removals.len();
        }
        let x = policy.choose(inst, &alive, theta);
        let qx = inst.quality(x);
        debug_assert!(qx <= theta, "policy returned an ineligible element");
        removals.push((x, qx));
        inst.remove(x);
        let pos = alive.iter().position(|&y| y == x).expect("chosen element must be alive");
        alive.swap_remove(pos);
    }

    let subset = subset_after(n, &removals, best_prefix);
    Ok(GreedyOutcome {
        theta,
        subset,
        trace: GreedyTrace { removals, best_value: theta, best_prefix },
    })
}

#[derive(Clone, Debug)]
pub struct KnownBetaOutcome<V> {
    pub subset: Vec<usize>,
    /// True when the target exceeded the optimum and the loop emptied the
    /// universe; the subset is then empty.
    pub exhausted: bool,
    pub removals: Vec<(usize, Quality<V>)>,
}

/// Removes every element of quality strictly below `beta` until none remain.
/// With `beta` equal to the optimal bottleneck value this terminates at the
/// maximal bottleneck subset.
pub fn known_beta<I: Instance>(
    inst: &mut I,
    beta: Quality<I::Value>,
) -> Result<KnownBetaOutcome<I::Value>, FrameworkError> {
    let n = inst.universe();
    if n == 0 {
        return Err(FrameworkError::EmptyUniverse);
    }
    let mut alive: Vec<usize> = (0..n).filter(|&x| inst.is_alive(x)).collect();
    let mut removals = Vec::new();
    loop {
        let victim = alive.iter().copied().filter(|&x| inst.quality(x) < beta).min();
        match victim {
            Some(x) => {
                removals.push((x, inst.quality(x)));
                inst.remove(x);
                let pos = alive.iter().position(|&y| y == x).unwrap();
                alive.swap_remove(pos);
            }
            None => break,
        }
    }
    alive.sort_unstable();
    Ok(KnownBetaOutcome { exhausted: alive.is_empty(), subset: alive, removals })
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("removal {index}: element {element} was not alive")]
    DeadElement { index: usize, element: usize },
    #[error("removal {index}: recorded quality {recorded} differs from recomputed {actual}")]
    QualityMismatch { index: usize, recorded: String, actual: String },
    #[error("removal {index}: element {element} was not eligible (quality {quality} > bound {bound})")]
    Ineligible { index: usize, element: usize, quality: String, bound: String },
    #[error("best value {recorded} not reproduced by replay ({actual})")]
    BestValueMismatch { recorded: String, actual: String },
}

/// Replays a trace against a fresh copy of the instance, asserting that each
/// recorded removal was eligible at its moment under the greedy's bound.
pub fn replay_trace<I: Instance>(inst: &mut I, trace: &GreedyTrace<I::Value>) -> Result<(), ReplayError> {
    let n = inst.universe();
    let mut alive: Vec<usize> = (0..n).filter(|&x| inst.is_alive(x)).collect();
    let mut theta = Quality::NegInf;
    for (index, &(x, recorded)) in trace.removals.iter().enumerate() {
        if !inst.is_alive(x) {
            return Err(ReplayError::DeadElement { index, element: x });
        }
        let q_here = min_alive_quality(inst, &alive);
        if q_here > theta {
            theta = q_here;
        }
        let actual = inst.quality(x);
        if actual != recorded {
            return Err(ReplayError::QualityMismatch {
                index,
                recorded: format!("{recorded:?}"),
                actual: format!("{actual:?}"),
            });
        }
        if actual > theta {
            return Err(ReplayError::Ineligible {
                index,
                element: x,
                quality: format!("{actual:?}"),
                bound: format!("{theta:?}"),
            });
        }
        inst.remove(x);
        let pos = alive.iter().position(|&y| y == x).unwrap();
        alive.swap_remove(pos);
    }
    if theta != trace.best_value {
        return Err(ReplayError::BestValueMismatch {
            recorded: format!("{:?}", trace.best_value),
            actual: format!("{theta:?}"),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::TableInstance;

    #[test]
    fn single_element_universe() {
        let mut inst = TableInstance::constant(1, 5);
        let out = decremental_greedy(&mut inst, &mut MinQuality).unwrap();
        assert_eq!(out.theta, Quality::Finite(5));
        assert_eq!(out.subset, vec![0]);
        assert_eq!(out.trace.best_prefix, 0);
    }

    #[test]
    fn empty_universe_is_invalid_input() {
        let mut inst = TableInstance::constant(0, 0);
        assert_eq!(
            decremental_greedy(&mut inst, &mut MinQuality).unwrap_err(),
            FrameworkError::EmptyUniverse
        );
    }

    #[test]
    fn known_beta_above_optimum_exhausts() {
        let mut inst = TableInstance::constant(3, 2);
        let out = known_beta(&mut inst, Quality::Finite(7)).unwrap();
        assert!(out.exhausted);
        assert!(out.subset.is_empty());
    }

    #[test]
    fn known_beta_at_optimum_matches_greedy() {
        for seed in 0..30u64 {
            let proto = TableInstance::random_monotone(5, seed);
            let greedy = decremental_greedy(&mut proto.clone(), &mut MinQuality).unwrap();
            let kb = known_beta(&mut proto.clone(), greedy.theta).unwrap();
            assert_eq!(kb.subset, greedy.subset, "seed {seed}");
            assert!(!kb.exhausted);
        }
    }

    #[test]
    fn policies_agree_on_value_and_subset() {
        for seed in 0..25u64 {
            let proto = TableInstance::random_monotone(6, seed);
            let a = decremental_greedy(&mut proto.clone(), &mut MinQuality).unwrap();
            let b = decremental_greedy(&mut proto.clone(), &mut LowestIdEligible).unwrap();
            let c = decremental_greedy(&mut proto.clone(), &mut HighestEligible).unwrap();
            let d =
                decremental_greedy(&mut proto.clone(), &mut SeededEligible::new(seed ^ 0xabc)).unwrap();
            assert_eq!(a.theta, b.theta);
            assert_eq!(a.theta, c.theta);
            assert_eq!(a.theta, d.theta);
            assert_eq!(a.subset, b.subset);
            assert_eq!(a.subset, c.subset);
            assert_eq!(a.subset, d.subset);
        }
    }

    #[test]
    fn traces_replay_cleanly() {
        for seed in 0..20u64 {
            let proto = TableInstance::random_monotone(6, seed);
            let out =
                decremental_greedy(&mut proto.clone(), &mut SeededEligible::new(seed)).unwrap();
            replay_trace(&mut proto.clone(), &out.trace).unwrap();
        }
    }
}
