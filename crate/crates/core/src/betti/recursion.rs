//! Betti numbers of `I(K_m)^(s)` by iterating the Eliahou–Kervaire
//! splittings of the restricted ideals.
//!
//! Write `T(m, r, s)` for the ideal-convention table of
//! `I_{K_m \ K_r, s}`. For `1 <= r <= m` with `r != m - s - 1` the
//! splitting `L1 + L2` gives
//!
//! ```text
//! T(m, r, s) = T(m, r - 1, s) + T(m - 1, r - 1, s) + shift(T(m - 1, r - 1, s))
//! ```
//!
//! because `L1 = I_{K_m \ K_{r-1}, s}`, `L2` is `I_{K_{m-1} \ K_{r-1}, s}`
//! after deleting `x_r`, and `L1 ∩ L2 = x_r L2` (the shift moves `(i, j)` to
//! `(i + 1, j + 1)`). `T(m, 0, s)` is `T(m, m, s - m + 1)` with degrees
//! raised by `m` once `s >= m`, and `T(2, r, s)` is a single generator in
//! degree `2s`. Anything else (`s = 1`, the excluded `r`, or `r = 0` with
//! `s < m`) falls back to the Koszul oracle on the concrete ideal.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::field::FieldSpec;
use super::oracle::{betti_oracle, default_degree_cap};
use super::table::{BettiTable, Convention};
use crate::error::{Error, Result};
use crate::symbolic::{restricted_ideal, RestrictedIdealSpec};

/// `beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K)`,
/// in the ideal convention.
pub fn ek_combine(
    j_table: &BettiTable,
    k_table: &BettiTable,
    jk_table: &BettiTable,
) -> Result<BettiTable> {
    for t in [j_table, k_table, jk_table] {
        t.require(Convention::Ideal)?;
    }
    for t in [k_table, jk_table] {
        if t.field() != j_table.field() {
            return Err(Error::FieldMismatch {
                left: j_table.field().to_string(),
                right: t.field().to_string(),
            });
        }
    }
    let ambient = j_table
        .ambient()
        .max(k_table.ambient())
        .max(jk_table.ambient());
    let mut out = BettiTable::new(Convention::Ideal, ambient, j_table.field());
    out.add_scaled(j_table, 1);
    out.add_scaled(k_table, 1);
    out.add_scaled(&jk_table.shifted(1, 0), 1);
    Ok(out)
}

type Key = (usize, usize, u32, Convention);

/// Memoized evaluator of `T(m, r, s)`. Safe to share between threads; a key
/// may be computed twice under contention but always to the same value.
pub struct RecursiveBetti {
    field: FieldSpec,
    memo: Mutex<HashMap<Key, BettiTable>>,
    fallbacks: AtomicUsize,
}

impl RecursiveBetti {
    pub fn new(field: FieldSpec) -> Self {
        RecursiveBetti {
            field,
            memo: Mutex::new(HashMap::new()),
            fallbacks: AtomicUsize::new(0),
        }
    }

    /// Number of oracle evaluations used as base cases so far.
    pub fn oracle_fallbacks(&self) -> usize {
        self.fallbacks.load(Ordering::Relaxed)
    }

    /// Ideal-convention table of `I(K_m)^(s)`.
    pub fn complete(&self, m: usize, s: u32) -> Result<BettiTable> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("m must be >= 2, got {m}")));
        }
        if s == 0 {
            return Err(Error::InvalidParameter("s must be >= 1".into()));
        }
        self.restricted(m, m, s)
    }

    /// Ideal-convention table of `I_{K_m \ K_r, s}`.
    pub fn restricted(&self, m: usize, r: usize, s: u32) -> Result<BettiTable> {
        let key = (m, r, s, Convention::Ideal);
        if let Some(t) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(t.clone());
        }
        let table = self.evaluate(m, r, s)?.with_ambient(m);
        self.memo
            .lock()
            .expect("memo poisoned")
            .entry(key)
            .or_insert_with(|| table.clone());
        Ok(table)
    }

    fn evaluate(&self, m: usize, r: usize, s: u32) -> Result<BettiTable> {
        if m == 2 && s >= 1 {
            return Ok(BettiTable::from_entries(
                Convention::Ideal,
                2,
                self.field,
                [((0, 2 * s), 1)],
            ));
        }
        if s == 1 || m as i64 - s as i64 - 1 == r as i64 {
            return self.oracle(m, r, s);
        }
        if r == 0 {
            if s as usize >= m {
                let inner = self.restricted(m, m, s - m as u32 + 1)?;
                return Ok(inner.shifted(0, m as u32));
            }
            return self.oracle(m, r, s);
        }
        let left = self.restricted(m, r - 1, s)?;
        let right = self.restricted(m - 1, r - 1, s)?;
        ek_combine(&left, &right, &right.shifted(0, 1))
    }

    fn oracle(&self, m: usize, r: usize, s: u32) -> Result<BettiTable> {
        self.fallbacks.fetch_add(1, Ordering::Relaxed);
        let ideal = restricted_ideal(RestrictedIdealSpec::outside(m, r, s))?;
        Ok(betti_oracle(&ideal, self.field, default_degree_cap(&ideal))?.to_ideal())
    }
}

/// Ideal-convention Betti table of `I(K_m)^(s)` from the splitting
/// recursion, with `fallback` as the field for oracle base cases.
pub fn recursive_betti_complete(m: usize, s: u32, fallback: FieldSpec) -> Result<BettiTable> {
    RecursiveBetti::new(fallback).complete(m, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::oracle::complete_degree_cap;
    use crate::symbolic::complete_symbolic_gens;

    fn oracle_complete(m: usize, s: u32) -> BettiTable {
        let i = complete_symbolic_gens(m, s).unwrap();
        betti_oracle(&i, FieldSpec::default(), complete_degree_cap(m, s))
            .unwrap()
            .to_ideal()
    }

    #[test]
    fn combine_with_zero_tables() {
        let f = FieldSpec::default();
        let k = BettiTable::from_entries(Convention::Ideal, 3, f, [((0, 4), 2), ((1, 5), 1)]);
        let zero = BettiTable::new(Convention::Ideal, 3, f);
        assert_eq!(ek_combine(&zero, &k, &zero).unwrap(), k);
        let q = k.to_quotient();
        assert!(matches!(
            ek_combine(&zero, &q, &zero),
            Err(Error::ConventionMismatch { .. })
        ));
        let other = BettiTable::new(Convention::Ideal, 3, FieldSpec::Rationals);
        assert!(matches!(
            ek_combine(&zero, &k, &other),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn k2_base() {
        for s in 1..6 {
            let t = recursive_betti_complete(2, s, FieldSpec::default()).unwrap();
            assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 2 * s, 1)]);
        }
    }

    #[test]
    fn matches_oracle_small_grid() {
        for (m, s) in [
            (3, 2),
            (3, 3),
            (3, 4),
            (3, 5),
            (4, 2),
            (4, 3),
            (4, 4),
            (5, 3),
        ] {
            assert_eq!(
                recursive_betti_complete(m, s, FieldSpec::default()).unwrap(),
                oracle_complete(m, s),
                "m={m} s={s}"
            );
        }
    }

    #[test]
    fn large_s_avoids_oracle_for_k3() {
        let engine = RecursiveBetti::new(FieldSpec::default());
        engine.complete(3, 7).unwrap();
        // Only I(K_3) itself (s = 1) is left to the oracle: 7 -> 5 -> 3 -> 1.
        assert_eq!(engine.oracle_fallbacks(), 1);
    }

    #[test]
    fn memo_is_shared_across_threads() {
        let engine = RecursiveBetti::new(FieldSpec::default());
        let tables: Vec<BettiTable> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| scope.spawn(|| engine.complete(4, 5).unwrap()))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(tables.windows(2).all(|p| p[0] == p[1]));
    }
}
