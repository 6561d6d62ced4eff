//! Closed-form Betti tables of `I(K_2)^(s)`, `I(K_3)^(s)` and `I(K_4)^(s)`,
//! and the minimum socle degree read off the last row of a table.

use super::field::FieldSpec;
use super::oracle::{betti_oracle, complete_degree_cap};
use super::table::{BettiTable, Convention};
use crate::error::{Error, Result};
use crate::symbolic::complete_symbolic_gens;

/// Quotient-convention table of `<x1^s x2^s>`.
pub fn closed_form_k2(s: u32) -> BettiTable {
    BettiTable::from_entries(
        Convention::Quotient,
        2,
        FieldSpec::default(),
        [((0, 0), 1), ((1, 2 * s), 1)],
    )
}

/// Quotient-convention table of `I(K_3)^(s)`. Entries whose degree would be
/// a half-integer are absent.
pub fn closed_form_k3(s: u32) -> BettiTable {
    let mut t = BettiTable::new(Convention::Quotient, 3, FieldSpec::default());
    t.set(0, 0, 1);
    if s.is_multiple_of(2) {
        t.set(1, 3 * s / 2, 1);
    } else {
        t.set(2, (3 * s + 3) / 2, 2);
    }
    for j in (3 * s + 1).div_ceil(2)..=2 * s {
        t.set(1, j, 3);
    }
    for j in (3 * s + 4).div_ceil(2)..=2 * s + 1 {
        t.set(2, j, 3);
    }
    t
}

/// Quotient-convention table of `I(K_4)^(s)` for `s >= 4`, built from the
/// tables of `I(K_4)^(s-3)` and `I(K_3)^(s-2)` (either convention).
///
/// Outside the three fixed positions the value is
/// `beta_{i,j-4}(K_4^(s-3)) + 4 beta_{i-1,j-4}(K_3^(s-2)) + 4 beta_{i,j-3}(K_3^(s-2))`
/// with every table read in the ideal convention.
pub fn k4_theorem_table(
    s: u32,
    k4_lower: &BettiTable,
    k3_lower: &BettiTable,
) -> Result<BettiTable> {
    if s < 4 {
        return Err(Error::InvalidParameter(format!(
            "the K4 formula needs s >= 4, got {s}"
        )));
    }
    if k4_lower.field() != k3_lower.field() {
        return Err(Error::FieldMismatch {
            left: k4_lower.field().to_string(),
            right: k3_lower.field().to_string(),
        });
    }
    let k4 = k4_lower.to_ideal();
    let k3 = k3_lower.to_ideal();
    let mut sum = BettiTable::new(Convention::Ideal, 4, k4.field());
    sum.add_scaled(&k4.shifted(0, 4), 1);
    sum.add_scaled(&k3.shifted(1, 4), 4);
    sum.add_scaled(&k3.shifted(0, 3), 4);
    let mut t = sum.to_quotient();
    t.set(1, 2 * s, 6);
    t.set(2, 2 * s + 1, 12);
    t.set(3, 2 * s + 2, 6);
    Ok(t)
}

/// Quotient-convention table of `I(K_m)^(s)` from the closed forms.
/// Available for `m = 2`, `m = 3`, and `m = 4` with `s >= 4`; lower
/// `K_4` tables with exponent below 4 come from the oracle over `field`.
pub fn formula_table(m: usize, s: u32, field: FieldSpec) -> Result<BettiTable> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    let t = match m {
        2 => closed_form_k2(s),
        3 => closed_form_k3(s),
        4 if s >= 4 => {
            let k4_lower = if s - 3 >= 4 {
                formula_table(4, s - 3, field)?
            } else {
                let ideal = complete_symbolic_gens(4, s - 3)?;
                betti_oracle(&ideal, field, complete_degree_cap(4, s - 3))?
            };
            k4_theorem_table(s, &k4_lower, &closed_form_k3(s - 2).with_field(field))?
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "no closed form for m = {m}, s = {s} (available: m = 2, 3, and m = 4 with s >= 4)"
            )))
        }
    };
    Ok(t.with_field(field))
}

/// Minimum socle degree of `R/I` from a quotient-convention table whose
/// last row is `m - 1`: the smallest twist `a` in that row, minus `m - 1`.
pub fn min_socle_degree(table: &BettiTable, m: usize) -> Result<u32> {
    table.require(Convention::Quotient)?;
    if m < 2 {
        return Err(Error::InvalidParameter(format!("m must be >= 2, got {m}")));
    }
    let last = table.last_row().unwrap_or(0);
    if last != m - 1 {
        return Err(Error::ProjectiveDimensionMismatch {
            expected: m - 1,
            found: last,
        });
    }
    let a = table
        .entries()
        .filter(|&(i, _, _)| i == m - 1)
        .map(|(_, j, _)| j)
        .min()
        .expect("last row is nonempty");
    Ok(a - (m as u32 - 1))
}
