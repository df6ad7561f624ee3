//! Exhaustive enumeration of removal sequences and the two antimatroid
//! axioms: availability persists, and availability depends only on the set
//! of prior removals, not their order.

use std::collections::{BTreeMap, BTreeSet};

use crate::greedy::{FrameworkError, Instance};
use crate::quality::Quality;

#[derive(Clone, Copy, Debug)]
pub enum SequenceAlgorithm<V> {
    /// Eligibility `q(x, S) <= Q(T)` with the best-so-far bound maintained
    /// per branch; runs until the universe is empty.
    Greedy,
    /// Eligibility `q(x, S) < beta`; stops when no element qualifies.
    KnownBeta(Quality<V>),
}

const ENUMERATION_GUARD: usize = 7;

/// All removal sequences the chosen algorithm could produce under any
/// tie-breaking, by branching over every eligible element at every state.
pub fn enumerate_removal_sequences<I>(
    proto: &I,
    algo: SequenceAlgorithm<I::Value>,
) -> Result<Vec<Vec<usize>>, FrameworkError>
where
    I: Instance + Clone,
{
    let n = proto.universe();
    if n == 0 {
        return Err(FrameworkError::EmptyUniverse);
    }
    if n > ENUMERATION_GUARD {
        return Err(FrameworkError::SizeGuard(n, ENUMERATION_GUARD));
    }

    let mut out = Vec::new();
    let alive: Vec<usize> = (0..n).filter(|&x| proto.is_alive(x)).collect();
    let mut prefix = Vec::new();
    branch(proto, algo, &alive, Quality::NegInf, &mut prefix, &mut out);
    Ok(out)
}

fn branch<I>(
    state: &I,
    algo: SequenceAlgorithm<I::Value>,
    alive: &[usize],
    theta: Quality<I::Value>,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) where
    I: Instance + Clone,
{
    let (bound, strict) = match algo {
        SequenceAlgorithm::Greedy => {
            let mut q = Quality::PosInf;
            for &x in alive {
                q = q.min(state.quality(x));
            }
            (theta.max(q), false)
        }
        SequenceAlgorithm::KnownBeta(beta) => (beta, true),
    };
    let eligible: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&x| {
            let q = state.quality(x);
            if strict {
                q < bound
            } else {
                q <= bound
            }
        })
        .collect();
    if eligible.is_empty() {
        out.push(prefix.clone());
        return;
    }
    for x in eligible {
        let mut next = state.clone();
        next.remove(x);
        let rest: Vec<usize> = alive.iter().copied().filter(|&y| y != x).collect();
        prefix.push(x);
        branch(&next, algo, &rest, bound, prefix, out);
        prefix.pop();
    }
}

#[derive(Clone, Debug)]
pub struct AntimatroidReport {
    pub ok: bool,
    pub counterexample: Option<String>,
}

/// Checks the sequence family for the two axioms. Sequences must be over the
/// same universe and repeat-free.
pub fn check_antimatroid(universe: usize, sequences: &[Vec<usize>]) -> AntimatroidReport {
    assert!(universe <= 64);
    let fail = |msg: String| AntimatroidReport { ok: false, counterexample: Some(msg) };

    // next elements observed after each ordered prefix
    let mut by_prefix: BTreeMap<Vec<usize>, BTreeSet<usize>> = BTreeMap::new();
    for seq in sequences {
        let mut seen = 0u64;
        for &x in seq {
            assert!(x < universe, "element out of universe");
            assert!(seen & (1 << x) == 0, "repeated element in sequence");
            seen |= 1 << x;
        }
        for i in 0..=seq.len() {
            let entry = by_prefix.entry(seq[..i].to_vec()).or_default();
            if i < seq.len() {
                entry.insert(seq[i]);
            }
        }
    }

    // axiom (ii): availability is a function of the removed set
    let mut by_mask: BTreeMap<u64, (Vec<usize>, BTreeSet<usize>)> = BTreeMap::new();
    for (prefix, nexts) in &by_prefix {
        let mask = prefix.iter().fold(0u64, |m, &x| m | (1 << x));
        match by_mask.get(&mask) {
            None => {
                by_mask.insert(mask, (prefix.clone(), nexts.clone()));
            }
            Some((other, expected)) if expected != nexts => {
                return fail(format!(
                    "orders {other:?} and {prefix:?} reach the same removed set \
                     but offer different removals ({expected:?} vs {nexts:?})"
                ));
            }
            Some(_) => {}
        }
    }

    // axiom (i): once removable, an element stays removable until removed
    for (&mask, (_, nexts)) in &by_mask {
        for &x in nexts {
            for &y in nexts {
                if y == x {
                    continue;
                }
                let bigger = mask | (1 << y);
                if let Some((_, nexts2)) = by_mask.get(&bigger) {
                    if !nexts2.contains(&x) {
                        return fail(format!(
                            "element {x} removable after set {mask:#b} but not \
                             after {bigger:#b}"
                        ));
                    }
                }
            }
        }
    }

    AntimatroidReport { ok: true, counterexample: None }
}
