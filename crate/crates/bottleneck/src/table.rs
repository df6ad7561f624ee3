//! Explicit quality tables: small instances with an arbitrary monotone
//! quality function, used for exhaustive testing of the framework.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::greedy::Instance;
use crate::quality::Quality;

/// An instance whose quality function is a fully materialized table indexed
/// by (element, alive-set bitmask). Cheap to clone; the table is shared.
#[derive(Clone, Debug)]
pub struct TableInstance {
    n: usize,
    alive: u32,
    table: Arc<Vec<i64>>,
}

impl TableInstance {
    const MAX_N: usize = 16;

    /// Builds an instance from `q(x, mask)` entries. Entries where
    /// `x` is not in `mask` are never read.
    pub fn from_fn(n: usize, mut q: impl FnMut(usize, u32) -> i64) -> Self {
        assert!(n <= Self::MAX_N, "table instance limited to {} elements", Self::MAX_N);
        let mut table = vec![0i64; n << n];
        for x in 0..n {
            for mask in 0..(1u32 << n) {
                if mask & (1 << x) != 0 {
                    table[(x << n) | mask as usize] = q(x, mask);
                }
            }
        }
        Self { n, alive: ((1u64 << n) - 1) as u32, table: Arc::new(table) }
    }

    /// Every element has the same quality in every state.
    pub fn constant(n: usize, value: i64) -> Self {
        Self::from_fn(n, |_, _| value)
    }

    /// A uniformly random monotone table: qualities only drop as the alive
    /// set shrinks. Built top-down from the full set.
    pub fn random_monotone(n: usize, seed: u64) -> Self {
        assert!(n >= 1 && n <= Self::MAX_N);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = ((1u64 << n) - 1) as u32;
        let mut table = vec![0i64; n << n];
        let mut masks: Vec<u32> = (1..=full).collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for mask in masks {
            for x in 0..n {
                if mask & (1 << x) == 0 {
                    continue;
                }
                let idx = (x << n) | mask as usize;
                if mask == full {
                    table[idx] = rng.gen_range(0..20);
                } else {
                    let sup_min = (0..n)
                        .filter(|&y| mask & (1 << y) == 0)
                        .map(|y| table[(x << n) | (mask | (1 << y)) as usize])
                        .min()
                        .unwrap();
                    table[idx] = sup_min - rng.gen_range(0..4);
                }
            }
        }
        Self { n, alive: full, table: Arc::new(table) }
    }

    /// The same instance with element ids relabeled by `perm` (new id
    /// `perm[x]` plays the role of old id `x`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let old = Arc::clone(&self.table);
        Self::from_fn(n, |x_new, mask_new| {
            let x_old = perm.iter().position(|&p| p == x_new).unwrap();
            let mut mask_old = 0u32;
            for y_old in 0..n {
                if mask_new & (1 << perm[y_old]) != 0 {
                    mask_old |= 1 << y_old;
                }
            }
            old[(x_old << n) | mask_old as usize]
        })
    }

    pub fn alive_mask(&self) -> u32 {
        self.alive
    }
}

impl Instance for TableInstance {
    type Value = i64;

    fn universe(&self) -> usize {
        self.n
    }

    fn is_alive(&self, x: usize) -> bool {
        self.alive & (1 << x) != 0
    }

    fn quality(&self, x: usize) -> Quality<i64> {
        debug_assert!(self.is_alive(x));
        Quality::Finite(self.table[(x << self.n) | self.alive as usize])
    }

    fn remove(&mut self, x: usize) {
        debug_assert!(self.is_alive(x));
        self.alive &= !(1 << x);
    }
}
