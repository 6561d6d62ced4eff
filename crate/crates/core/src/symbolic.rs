//! Symbolic powers of edge ideals.
//!
//! For a graph `G` the `s`-th symbolic power of `I(G)` is the intersection of
//! `<W>^s` over the minimal vertex covers `W`. A monomial lies in it exactly
//! when its exponents over every minimal cover sum to at least `s`. Complete
//! graphs have a closed description of the minimal generators, and so do
//! parallelizations of any graph once the base graph's generators are known.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{ParallelizationSpec, SimpleGraph};
use crate::monomial::{binomial, for_each_composition, Monomial, MonomialIdeal};
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolicMethod {
    /// Intersection of powers of the minimal primes.
    Intersection,
    /// Closed-form generators; complete graphs only.
    FastPathComplete,
}

#[derive(Clone, Debug)]
pub struct SymbolicPowerRequest {
    pub graph: SimpleGraph,
    pub s: u32,
    pub method: SymbolicMethod,
}

impl SymbolicPowerRequest {
    pub fn compute(&self, caps: &Caps) -> Result<MonomialIdeal> {
        match self.method {
            SymbolicMethod::Intersection => symbolic_power(&self.graph, self.s, caps),
            SymbolicMethod::FastPathComplete => {
                if !self.graph.is_complete() {
                    return Err(Error::InvalidParameter(
                        "the closed-form generators only apply to complete graphs".into(),
                    ));
                }
                complete_symbolic_gens(self.graph.vertex_count(), self.s)
            }
        }
    }
}

fn check_power(s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "symbolic power s must be >= 1".into(),
        ));
    }
    Ok(())
}

/// `<W>^s`: every monomial of degree `s` supported on `cover`.
fn prime_power(ambient: usize, cover: &[usize], s: u32) -> MonomialIdeal {
    let mut gens = Vec::new();
    for_each_composition(s, cover.len(), |parts| {
        let mut exps = vec![0; ambient];
        for (&v, &e) in cover.iter().zip(parts) {
            exps[v] = e;
        }
        gens.push(Monomial::new(exps));
    });
    MonomialIdeal::minimize_unchecked(ambient, gens)
}

/// `I(G)^(s)` as the intersection of `<W>^s` over the minimal vertex covers.
pub fn symbolic_power(g: &SimpleGraph, s: u32, caps: &Caps) -> Result<MonomialIdeal> {
    check_power(s)?;
    let m = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(MonomialIdeal::zero(m));
    }
    if s == 1 {
        return Ok(g.edge_ideal());
    }
    let covers = g.minimal_vertex_covers(caps.vertex)?;
    for c in &covers {
        let n = binomial(c.len() as u64 + s as u64 - 1, s as u64);
        if n > caps.generators as u128 {
            return Err(Error::cap(
                "generator",
                n.min(usize::MAX as u128) as usize,
                caps.generators,
            ));
        }
    }
    let components: Vec<MonomialIdeal> = covers.par_iter().map(|c| prime_power(m, c, s)).collect();
    let mut acc = components[0].clone();
    for comp in &components[1..] {
        let work = acc.len().saturating_mul(comp.len());
        if work > caps.generators {
            return Err(Error::cap("generator", work, caps.generators));
        }
        acc = acc.intersect(comp)?;
    }
    Ok(acc)
}

/// Membership in `I(G)^(s)` by the exponent-sum criterion over minimal
/// vertex covers.
pub fn membership_symbolic(w: &Monomial, g: &SimpleGraph, s: u32, caps: &Caps) -> Result<bool> {
    check_power(s)?;
    if w.ambient() != g.vertex_count() {
        return Err(Error::AmbientMismatch {
            left: g.vertex_count(),
            right: w.ambient(),
        });
    }
    if g.edge_count() == 0 {
        return Ok(false);
    }
    let exps = w.exponents();
    Ok(g.minimal_vertex_covers(caps.vertex)?
        .iter()
        .all(|c| c.iter().map(|&v| exps[v] as u64).sum::<u64>() >= s as u64))
}

/// Minimal generators of `I(K_m)^(s)`: exponent vectors with an index `i`
/// whose complementary exponents sum to `s` and whose own exponent equals
/// the largest complementary exponent.
pub fn complete_symbolic_gens(m: usize, s: u32) -> Result<MonomialIdeal> {
    check_power(s)?;
    if m < 2 {
        return Ok(MonomialIdeal::zero(m));
    }
    if s == 1 {
        return Ok(SimpleGraph::complete(m).edge_ideal());
    }
    let mut gens = Vec::new();
    for i in 0..m {
        for_each_composition(s, m - 1, |rest| {
            let top = *rest.iter().max().unwrap_or(&0);
            let mut exps = Vec::with_capacity(m);
            exps.extend_from_slice(&rest[..i]);
            exps.push(top);
            exps.extend_from_slice(&rest[i..]);
            gens.push(Monomial::new(exps));
        });
    }
    Ok(MonomialIdeal::minimize_unchecked(m, gens))
}

/// Which of the two restricted ideals of `I(K_m)^(s)` relative to the
/// induced subgraph on the first `r` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RestrictedKind {
    /// Generators using only `x_1, ..., x_r`.
    Inside,
    /// `I(K_m)^(s) ∩ <x_{r+1} ... x_m>`.
    Outside,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RestrictedIdealSpec {
    pub m: usize,
    pub r: usize,
    pub s: u32,
    pub kind: RestrictedKind,
}

impl RestrictedIdealSpec {
    pub fn inside(m: usize, r: usize, s: u32) -> Self {
        RestrictedIdealSpec {
            m,
            r,
            s,
            kind: RestrictedKind::Inside,
        }
    }

    pub fn outside(m: usize, r: usize, s: u32) -> Self {
        RestrictedIdealSpec {
            m,
            r,
            s,
            kind: RestrictedKind::Outside,
        }
    }
}

/// Build a restricted ideal. When `r = m` both kinds are `I(K_m)^(s)`.
pub fn restricted_ideal(spec: RestrictedIdealSpec) -> Result<MonomialIdeal> {
    let RestrictedIdealSpec { m, r, s, kind } = spec;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if r > m {
        return Err(Error::InvalidParameter(format!("r = {r} exceeds m = {m}")));
    }
    let full = complete_symbolic_gens(m, s)?;
    if r == m {
        return Ok(full);
    }
    match kind {
        RestrictedKind::Inside => {
            let gens = full
                .generators()
                .iter()
                .filter(|w| w.exponents()[r..].iter().all(|&e| e == 0))
                .cloned()
                .collect();
            Ok(MonomialIdeal::minimize_unchecked(m, gens))
        }
        RestrictedKind::Outside => {
            let mut tail = vec![0; m];
            tail[r..].iter_mut().for_each(|e| *e = 1);
            let tail = MonomialIdeal::minimize_unchecked(m, vec![Monomial::new(tail)]);
            full.intersect(&tail)
        }
    }
}

/// Minimal generators of `I(G^alpha)^(s)` obtained by distributing each
/// exponent `a_i` of each generator of `I(G)^(s)` over the `alpha_i`
/// duplications of `x_i` in every possible way.
pub fn parallel_symbolic_gens(
    g: &SimpleGraph,
    alpha: &[usize],
    s: u32,
    caps: &Caps,
) -> Result<(MonomialIdeal, ParallelizationSpec)> {
    let spec = ParallelizationSpec::new(alpha.to_vec(), g.vertex_count())?;
    let base = symbolic_power(g, s, caps)?;
    let total = spec.total_vertices();

    let mut expected: u128 = 0;
    for w in base.generators() {
        let mut n: u128 = 1;
        for (i, &a) in w.exponents().iter().enumerate() {
            n = n.saturating_mul(binomial(
                a as u64 + alpha[i] as u64 - 1,
                alpha[i] as u64 - 1,
            ));
        }
        expected = expected.saturating_add(n);
    }
    if expected > caps.generators as u128 {
        return Err(Error::cap(
            "generator",
            expected.min(usize::MAX as u128) as usize,
            caps.generators,
        ));
    }

    let mut out = Vec::with_capacity(expected as usize);
    for w in base.generators() {
        // Per block, every way of splitting the exponent.
        let per_block: Vec<Vec<Vec<u32>>> = w
            .exponents()
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut parts = Vec::new();
                for_each_composition(a, alpha[i], |c| parts.push(c.to_vec()));
                parts
            })
            .collect();
        let mut choice = vec![0usize; per_block.len()];
        loop {
            let mut exps = Vec::with_capacity(total);
            for (i, &c) in choice.iter().enumerate() {
                exps.extend_from_slice(&per_block[i][c]);
            }
            out.push(Monomial::new(exps));
            // odometer
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < per_block[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    Ok((MonomialIdeal::minimize_unchecked(total, out), spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str, m: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, m).unwrap()
    }

    fn k3_cubed() -> MonomialIdeal {
        ideal(
            "x1^3*x2^3, x1^2*x2^2*x3, x1^2*x2*x3^2, x1*x2^2*x3^2, x1^3*x3^3, x2^3*x3^3",
            3,
        )
    }

    #[test]
    fn k2_is_principal() {
        let caps = Caps::default();
        for s in 1..8 {
            let expected = MonomialIdeal::minimize(2, [Monomial::new(vec![s, s])]).unwrap();
            assert_eq!(
                symbolic_power(&SimpleGraph::complete(2), s, &caps).unwrap(),
                expected
            );
            assert_eq!(complete_symbolic_gens(2, s).unwrap(), expected);
        }
    }

    #[test]
    fn k3_listed_generators() {
        let caps = Caps::default();
        let k3 = SimpleGraph::complete(3);
        assert_eq!(
            symbolic_power(&k3, 2, &caps).unwrap(),
            ideal("x1^2*x2^2, x1^2*x3^2, x2^2*x3^2, x1*x2*x3", 3)
        );
        assert_eq!(symbolic_power(&k3, 3, &caps).unwrap(), k3_cubed());
        let fast = complete_symbolic_gens(3, 3).unwrap();
        assert_eq!(fast, k3_cubed());
        let mut degrees: Vec<u32> = fast.generators().iter().map(Monomial::degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![5, 5, 5, 6, 6, 6]);
    }

    #[test]
    fn fast_path_matches_intersection_k4() {
        let caps = Caps::default();
        assert_eq!(
            complete_symbolic_gens(4, 2).unwrap(),
            symbolic_power(&SimpleGraph::complete(4), 2, &caps).unwrap()
        );
    }

    #[test]
    fn s_one_and_degenerate_graphs() {
        let caps = Caps::default();
        let p4 = SimpleGraph::path(4);
        assert_eq!(symbolic_power(&p4, 1, &caps).unwrap(), p4.edge_ideal());
        assert!(symbolic_power(&SimpleGraph::edgeless(3), 2, &caps)
            .unwrap()
            .is_zero());
        assert!(symbolic_power(&p4, 0, &caps).is_err());
        assert!(complete_symbolic_gens(1, 3).unwrap().is_zero());
    }

    #[test]
    fn membership_examples() {
        let caps = Caps::default();
        let k3 = SimpleGraph::complete(3);
        let w = Monomial::parse("x1*x2*x3", 3).unwrap();
        assert!(membership_symbolic(&w, &k3, 2, &caps).unwrap());
        assert!(!membership_symbolic(&w, &k3, 3, &caps).unwrap());
        for s in 1..6 {
            let w = Monomial::new(vec![s, s]);
            assert!(membership_symbolic(&w, &SimpleGraph::complete(2), s, &caps).unwrap());
        }
        assert!(membership_symbolic(&w, &SimpleGraph::complete(4), 2, &caps).is_err());
    }

    #[test]
    fn membership_agrees_with_generators() {
        let caps = Caps::default();
        let g = SimpleGraph::cycle(5).unwrap();
        for s in 1..4 {
            let sym = symbolic_power(&g, s, &caps).unwrap();
            for deg in 0..=2 * s + 1 {
                for_each_composition(deg, 5, |e| {
                    let w = Monomial::new(e.to_vec());
                    assert_eq!(
                        membership_symbolic(&w, &g, s, &caps).unwrap(),
                        sym.contains(&w).unwrap(),
                        "{w} s={s}"
                    );
                });
            }
        }
    }

    #[test]
    fn ordinary_power_inside_symbolic() {
        let caps = Caps::default();
        for g in [
            SimpleGraph::cycle(5).unwrap(),
            SimpleGraph::complete(4),
            SimpleGraph::path(4),
        ] {
            for s in 1..4 {
                let ordinary = g.edge_ideal().power(s).unwrap();
                let sym = symbolic_power(&g, s, &caps).unwrap();
                assert!(ordinary.is_subset_of(&sym).unwrap());
            }
        }
    }

    #[test]
    fn restricted_examples() {
        for s in 2..6 {
            let inside = restricted_ideal(RestrictedIdealSpec::inside(3, 2, s)).unwrap();
            assert_eq!(inside.generators(), &[Monomial::new(vec![s, s, 0])]);
            for kind in [RestrictedKind::Inside, RestrictedKind::Outside] {
                let full = restricted_ideal(RestrictedIdealSpec {
                    m: 3,
                    r: 3,
                    s,
                    kind,
                })
                .unwrap();
                assert_eq!(full, complete_symbolic_gens(3, s).unwrap());
            }
        }
        let outside = restricted_ideal(RestrictedIdealSpec::outside(3, 0, 3)).unwrap();
        let expected = SimpleGraph::complete(3)
            .edge_ideal()
            .scale_by(&Monomial::new(vec![1, 1, 1]))
            .unwrap();
        assert_eq!(outside, expected);
        assert!(restricted_ideal(RestrictedIdealSpec::outside(3, 4, 3)).is_err());
    }

    #[test]
    fn parallel_examples() {
        let caps = Caps::default();
        let (got, _) =
            parallel_symbolic_gens(&SimpleGraph::complete(2), &[2, 1], 2, &caps).unwrap();
        assert_eq!(got, ideal("x1^2*x3^2, x1*x2*x3^2, x2^2*x3^2", 3));

        let k3 = SimpleGraph::complete(3);
        let (got, spec) = parallel_symbolic_gens(&k3, &[2, 1, 1], 2, &caps).unwrap();
        let x = |i, t| spec.flat_index(i, t);
        let mut e1 = vec![0; 4];
        e1[x(0, 1)] = 1;
        e1[x(1, 1)] = 1;
        e1[x(2, 1)] = 1;
        let mut e2 = vec![0; 4];
        e2[x(0, 2)] = 1;
        e2[x(1, 1)] = 1;
        e2[x(2, 1)] = 1;
        assert!(got.generators().contains(&Monomial::new(e1)));
        assert!(got.generators().contains(&Monomial::new(e2)));

        let (id, _) =
            parallel_symbolic_gens(&SimpleGraph::cycle(5).unwrap(), &[1; 5], 2, &caps).unwrap();
        assert_eq!(
            id,
            symbolic_power(&SimpleGraph::cycle(5).unwrap(), 2, &caps).unwrap()
        );
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            generators: 10,
            ..Caps::default()
        };
        assert!(matches!(
            symbolic_power(&SimpleGraph::complete(5), 4, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
