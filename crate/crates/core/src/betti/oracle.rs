//! Brute-force graded Betti numbers of `R/I` from the Koszul complex.
//!
//! `beta_{i,j}(R/I)` is the dimension of the `i`-th homology of the degree
//! `j` strand of `K(x_1, ..., x_m) ⊗ R/I`. For a monomial ideal that strand
//! splits into one block per multidegree `b` with `|b| = j`: the block in
//! homological degree `i` has basis `x^{b-F} e_F` over the square-free sets
//! `F ⊆ supp(b)` of size `i` with `x^{b-F} ∉ I`, and the differential drops
//! one element of `F` at a time. Each block is a small `±1` matrix whose
//! rank is computed exactly over the chosen field.
//!
//! Only multidegrees dividing the lcm of the minimal generators carry
//! homology, so the enumeration is restricted to that box.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::field::FieldSpec;
use super::table::{BettiTable, Convention};
use crate::error::{Error, Result};
use crate::monomial::{GradedMode, MonomialIdeal};

/// Default bound on the number of Koszul basis elements visited.
pub const DEFAULT_WORK_CAP: usize = 50_000_000;

/// A degree cap that covers every nonzero entry: the degree of the lcm of
/// the generators, raised to at least `max generator degree + m`.
pub fn default_degree_cap(ideal: &MonomialIdeal) -> u32 {
    let lcm = ideal.lcm_of_generators().degree();
    lcm.max(ideal.max_generator_degree() + ideal.ambient() as u32)
}

/// The degree cap used for `I(K_m)^(s)`: `2s + m + 2`.
pub fn complete_degree_cap(m: usize, s: u32) -> u32 {
    2 * s + m as u32 + 2
}

/// Quotient-convention Betti table of `R/I` for all `j <= degree_cap`.
pub fn betti_oracle(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    degree_cap: u32,
) -> Result<BettiTable> {
    betti_oracle_with_work_cap(ideal, field, degree_cap, DEFAULT_WORK_CAP)
}

pub fn betti_oracle_with_work_cap(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    degree_cap: u32,
    work_cap: usize,
) -> Result<BettiTable> {
    let m = ideal.ambient();
    let needed = ideal.max_generator_degree() + m as u32;
    if degree_cap < needed {
        return Err(Error::cap("degree", needed as usize, degree_cap as usize));
    }
    if m > 30 {
        return Err(Error::cap("variable", m, 30));
    }

    let bound: Vec<u32> = ideal.lcm_of_generators().exponents().to_vec();
    let multidegrees = box_multidegrees(&bound, degree_cap);
    let work: usize = multidegrees
        .iter()
        .map(|b| 1usize << b.iter().filter(|&&e| e > 0).count())
        .sum();
    if work > work_cap {
        return Err(Error::cap("Koszul work", work, work_cap));
    }

    let gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    let counts = multidegrees
        .par_iter()
        .map(|b| {
            let homology = block_homology(b, &gens, field);
            let j: u32 = b.iter().sum();
            homology
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(i, h)| ((i, j), h as u64))
                .collect::<Vec<_>>()
        })
        .fold(BTreeMap::new, |mut acc, v| {
            for (k, h) in v {
                *acc.entry(k).or_insert(0u64) += h;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, h) in b {
                *a.entry(k).or_insert(0) += h;
            }
            a
        });

    Ok(BettiTable::from_entries(
        Convention::Quotient,
        m,
        field,
        counts,
    ))
}

/// Every exponent vector `b <= bound` with `|b| <= degree_cap`.
fn box_multidegrees(bound: &[u32], degree_cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; bound.len()];
    fn rec(k: usize, left: u32, bound: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == bound.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=bound[k].min(left) {
            cur[k] = e;
            rec(k + 1, left - e, bound, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, degree_cap, bound, &mut cur, &mut out);
    out
}

fn in_ideal(gens: &[&[u32]], exps: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(exps).all(|(a, b)| a <= b))
}

/// Homology dimensions, indexed by homological degree, of the Koszul block
/// in multidegree `b`.
fn block_homology(b: &[u32], gens: &[&[u32]], field: FieldSpec) -> Vec<usize> {
    let support: Vec<usize> = (0..b.len()).filter(|&k| b[k] > 0).collect();
    let n = support.len();
    // Faces are subsets of the support, encoded as bitmasks over `support`.
    let mut exps = b.to_vec();
    let alive: Vec<bool> = (0usize..(1 << n))
        .map(|mask| {
            for (bit, &k) in support.iter().enumerate() {
                exps[k] = b[k] - ((mask >> bit) & 1) as u32;
            }
            !in_ideal(gens, &exps)
        })
        .collect();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 0usize..(1 << n) {
        if alive[mask] {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of d_i : C_i -> C_{i-1}
    let mut ranks = vec![0usize; n + 2];
    for i in 1..=n {
        let (src, dst) = (&by_size[i], &by_size[i - 1]);
        if src.is_empty() || dst.is_empty() {
            continue;
        }
        let index: std::collections::HashMap<usize, usize> =
            dst.iter().enumerate().map(|(r, &f)| (f, r)).collect();
        let mut matrix = vec![vec![0i64; src.len()]; dst.len()];
        for (c, &face) in src.iter().enumerate() {
            let mut sign = 1i64;
            for bit in 0..n {
                if face >> bit & 1 == 0 {
                    continue;
                }
                if let Some(&r) = index.get(&(face & !(1 << bit))) {
                    matrix[r][c] = sign;
                }
                sign = -sign;
            }
        }
        ranks[i] = field.rank(&matrix);
    }
    (0..=n)
        .map(|i| by_size[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}

/// Coefficients of `(1 - t)^m * sum_{j <= cap} dim(R/I)_j t^j`, truncated at
/// degree `cap`. These must match the alternating sums of any correct
/// quotient-convention table up to the same degree.
pub fn hilbert_numerator(ideal: &MonomialIdeal, cap: u32) -> Result<Vec<i128>> {
    let m = ideal.ambient() as u64;
    let hf: Vec<i128> = (0..=cap)
        .map(|j| {
            ideal
                .graded_dimension(j, GradedMode::Quotient, cap)
                .map(|d| d as i128)
        })
        .collect::<Result<_>>()?;
    let mut out = vec![0i128; cap as usize + 1];
    for (k, coeff) in (0..=m.min(cap as u64)).map(|k| {
        let c = crate::monomial::binomial(m, k) as i128;
        (k as usize, if k % 2 == 0 { c } else { -c })
    }) {
        for j in k..=cap as usize {
            out[j] += coeff * hf[j - k];
        }
    }
    Ok(out)
}

/// Check a quotient-convention table against the Hilbert function of `R/I`
/// up to `cap`.
pub fn hilbert_identity_holds(ideal: &MonomialIdeal, table: &BettiTable, cap: u32) -> Result<bool> {
    table.require(Convention::Quotient)?;
    Ok(hilbert_numerator(ideal, cap)? == table.alternating_numerator(cap))
}

/// Run the oracle over several fields and insist that they agree.
pub fn betti_oracle_across_fields(
    ideal: &MonomialIdeal,
    fields: &[FieldSpec],
    degree_cap: u32,
) -> Result<BettiTable> {
    let mut first: Option<BettiTable> = None;
    for &f in fields {
        let t = betti_oracle(ideal, f, degree_cap)?;
        match &first {
            None => first = Some(t),
            Some(prev) if *prev == t => {}
            Some(prev) => {
                return Err(Error::FieldDiscrepancy {
                    left: prev.field().to_string(),
                    right: f.to_string(),
                })
            }
        }
    }
    first.ok_or_else(|| Error::InvalidParameter("no fields given".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::monomial::Monomial;
    use crate::symbolic::complete_symbolic_gens;

    fn quotient(entries: &[((usize, u32), u64)]) -> BettiTable {
        BettiTable::from_entries(
            Convention::Quotient,
            0,
            FieldSpec::default(),
            entries.iter().copied(),
        )
    }

    #[test]
    fn principal_k2_powers() {
        for s in 1..6 {
            let i = MonomialIdeal::minimize(2, [Monomial::new(vec![s, s])]).unwrap();
            let t = betti_oracle(&i, FieldSpec::default(), default_degree_cap(&i)).unwrap();
            assert_eq!(t, quotient(&[((0, 0), 1), ((1, 2 * s), 1)]));
        }
    }

    #[test]
    fn triangle_edge_ideal() {
        let i = SimpleGraph::complete(3).edge_ideal();
        let t = betti_oracle(&i, FieldSpec::default(), complete_degree_cap(3, 1)).unwrap();
        assert_eq!(t, quotient(&[((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]));
    }

    #[test]
    fn k3_third_symbolic_power() {
        let i = complete_symbolic_gens(3, 3).unwrap();
        let t = betti_oracle(&i, FieldSpec::default(), complete_degree_cap(3, 3)).unwrap();
        assert_eq!(
            t,
            quotient(&[
                ((0, 0), 1),
                ((1, 5), 3),
                ((1, 6), 3),
                ((2, 6), 2),
                ((2, 7), 3)
            ])
        );
        assert!(hilbert_identity_holds(&i, &t, complete_degree_cap(3, 3)).unwrap());
    }

    #[test]
    fn zero_and_unit_ideals() {
        let z = MonomialIdeal::zero(3);
        assert_eq!(
            betti_oracle(&z, FieldSpec::default(), 5).unwrap(),
            quotient(&[((0, 0), 1)])
        );
        let u = MonomialIdeal::unit(3);
        assert!(betti_oracle(&u, FieldSpec::default(), 5)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn koszul_of_variables() {
        // R/(x1, x2, x3) is resolved by the Koszul complex itself.
        let i = MonomialIdeal::parse("x1, x2, x3", 3).unwrap();
        let t = betti_oracle(&i, FieldSpec::Rationals, 6).unwrap();
        assert_eq!(
            t,
            quotient(&[((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)])
        );
    }

    #[test]
    fn caps() {
        let i = complete_symbolic_gens(3, 3).unwrap();
        assert!(matches!(
            betti_oracle(&i, FieldSpec::default(), 8),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            betti_oracle_with_work_cap(&i, FieldSpec::default(), 11, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn characteristic_two_example() {
        // The Stanley-Reisner ideal of the 6-vertex triangulation of RP^2
        // has characteristic-dependent Betti numbers.
        let faces = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [2, 4, 6],
            [3, 5, 6],
        ];
        let mut non_faces = Vec::new();
        for a in 1..=6usize {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    if !faces.iter().any(|f| f == &[a, b, c]) {
                        let mut e = vec![0; 6];
                        e[a - 1] = 1;
                        e[b - 1] = 1;
                        e[c - 1] = 1;
                        non_faces.push(Monomial::new(e));
                    }
                }
            }
        }
        let i = MonomialIdeal::minimize(6, non_faces).unwrap();
        let cap = default_degree_cap(&i);
        let q = betti_oracle(&i, FieldSpec::Rationals, cap).unwrap();
        let two = betti_oracle(&i, FieldSpec::Prime(2), cap).unwrap();
        assert_ne!(q, two);
        assert!(matches!(
            betti_oracle_across_fields(&i, &[FieldSpec::Rationals, FieldSpec::Prime(2)], cap),
            Err(Error::FieldDiscrepancy { .. })
        ));
        assert!(hilbert_identity_holds(&i, &q, cap).unwrap());
        assert!(hilbert_identity_holds(&i, &two, cap).unwrap());
    }

    #[test]
    fn box_enumeration() {
        let all = box_multidegrees(&[2, 1], 2);
        assert_eq!(
            all,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0]]
        );
    }
}
