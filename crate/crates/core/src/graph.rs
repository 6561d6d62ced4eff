//! Finite simple graphs, their edge ideals, minimal vertex covers and
//! parallelizations.
//!
//! Vertices are 0-based internally; text input and output use 1-based
//! labels so that vertex `k` corresponds to the variable `x{k+1}`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Default bound on the vertex count accepted by cover enumeration.
pub const DEFAULT_VERTEX_CAP: usize = 24;

/// A sorted set of 0-based vertices.
pub type VertexSet = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn edgeless(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
            labels: None,
        }
    }

    /// Build from 0-based edge pairs. Loops and repeated edges are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::edgeless(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "edge {{{}, {}}} outside 1..={}",
                u + 1,
                v + 1,
                self.vertex_count
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {}", u + 1)));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidParameter(format!(
                "repeated edge {{{}, {}}}",
                u.min(v) + 1,
                u.max(v) + 1
            )));
        }
        Ok(())
    }

    pub fn complete(m: usize) -> Self {
        let mut g = SimpleGraph::edgeless(m);
        for u in 0..m {
            for v in u + 1..m {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::edgeless(n);
        for u in 1..n {
            g.edges.insert((u - 1, u));
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "a simple cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = SimpleGraph::path(n);
        g.edges.insert((0, n - 1));
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as sorted 0-based pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// True when all pairs of distinct vertices are adjacent.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.vertex_count * self.vertex_count.saturating_sub(1) / 2
    }

    /// The edge ideal: one generator `x_u x_v` per edge.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self.edges.iter().map(|&(u, v)| {
            let mut exps = vec![0; self.vertex_count];
            exps[u] = 1;
            exps[v] = 1;
            Monomial::new(exps)
        });
        // Distinct square-free quadrics never divide one another.
        MonomialIdeal::minimize_unchecked(self.vertex_count, gens.collect())
    }

    /// Whether `set` meets every edge.
    pub fn is_vertex_cover(&self, set: &[usize]) -> bool {
        let inside: BTreeSet<usize> = set.iter().copied().collect();
        self.edges
            .iter()
            .all(|(u, v)| inside.contains(u) || inside.contains(v))
    }

    /// All inclusion-minimal vertex covers, as complements of maximal
    /// independent sets, by exhaustive search over vertex subsets.
    pub fn minimal_vertex_covers(&self, vertex_cap: usize) -> Result<Vec<VertexSet>> {
        let n = self.vertex_count;
        if n > vertex_cap {
            return Err(Error::cap("vertex", n, vertex_cap));
        }
        if n > 63 {
            return Err(Error::cap("vertex", n, 63));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let full: u64 = (1u64 << n) - 1;
        let mut covers = Vec::new();
        for indep in 0..=full {
            // independent: no edge inside
            let mut ok = true;
            let mut rest = indep;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & indep != 0 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            // maximal: every outside vertex has a neighbour inside
            let mut outside = full & !indep;
            while outside != 0 {
                let v = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                if adj[v] & indep == 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                let cover = full & !indep;
                covers.push((0..n).filter(|&v| cover >> v & 1 == 1).collect::<Vec<_>>());
            }
        }
        covers.sort();
        Ok(covers)
    }

    /// The parallelization `G^alpha`: vertex `i` becomes a block of
    /// `alpha[i]` pairwise non-adjacent copies, and copies are adjacent
    /// exactly when their originals are.
    pub fn parallelize(&self, alpha: &[usize]) -> Result<(SimpleGraph, ParallelizationSpec)> {
        let spec = ParallelizationSpec::new(alpha.to_vec(), self.vertex_count)?;
        let mut g = SimpleGraph::edgeless(spec.total_vertices());
        for &(u, v) in &self.edges {
            for a in spec.block(u) {
                for b in spec.block(v) {
                    g.edges.insert((a.min(b), a.max(b)));
                }
            }
        }
        let labels = (0..self.vertex_count)
            .flat_map(|i| (1..=alpha[i]).map(move |t| format!("x{},{}", i + 1, t)))
            .collect();
        g.labels = Some(labels);
        Ok((g, spec))
    }

    /// Minimal covers of `G^alpha` obtained by replacing each vertex of a
    /// minimal cover of `G` with its whole block of duplications.
    pub fn lifted_minimal_covers(
        &self,
        spec: &ParallelizationSpec,
        vertex_cap: usize,
    ) -> Result<Vec<VertexSet>> {
        if spec.original_vertices() != self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "parallelization is for {} vertices, graph has {}",
                spec.original_vertices(),
                self.vertex_count
            )));
        }
        let mut lifted: Vec<VertexSet> = self
            .minimal_vertex_covers(vertex_cap)?
            .into_iter()
            .map(|cover| cover.into_iter().flat_map(|i| spec.block(i)).collect())
            .collect();
        lifted.sort();
        Ok(lifted)
    }

    /// Parse the edge-list format: the vertex count on the first line, then
    /// one `u v` pair (1-based) per line. Blank lines and `#` comments are
    /// ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let m: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
        if m == 0 {
            return Err(Error::Parse("vertex count must be positive".into()));
        }
        let mut g = SimpleGraph::edgeless(m);
        for line in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad edge line `{line}`")))
                })
                .collect::<Result<_>>()?;
            let [u, v] = nums[..] else {
                return Err(Error::Parse(format!(
                    "edge line `{line}` needs two vertices"
                )));
            };
            if u == 0 || v == 0 {
                return Err(Error::Parse(format!("vertices are 1-based in `{line}`")));
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// Graph sources understood by the command line: `complete:m`, `path:n`,
/// `cycle:n`.
impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unknown graph constructor `{s}`")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad size in `{s}`")))?;
        if n == 0 {
            return Err(Error::Parse("graphs need at least one vertex".into()));
        }
        match kind.trim() {
            "complete" => Ok(SimpleGraph::complete(n)),
            "path" => Ok(SimpleGraph::path(n)),
            "cycle" => SimpleGraph::cycle(n),
            other => Err(Error::Parse(format!("unknown graph constructor `{other}`"))),
        }
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, edges [", self.vertex_count)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        f.write_str("]")
    }
}

/// Records how the vertices of `G^alpha` are laid out: block `i` holds the
/// duplications `x_{i,1}, ..., x_{i,alpha_i}` at consecutive flat indices,
/// block 1 first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelizationSpec {
    alpha: Vec<usize>,
    offsets: Vec<usize>,
}

impl ParallelizationSpec {
    pub fn new(alpha: Vec<usize>, vertex_count: usize) -> Result<Self> {
        if alpha.len() != vertex_count {
            return Err(Error::InvalidParameter(format!(
                "alpha has {} entries for {} vertices",
                alpha.len(),
                vertex_count
            )));
        }
        if let Some(k) = alpha.iter().position(|&a| a == 0) {
            return Err(Error::InvalidParameter(format!(
                "alpha entry {} is zero; entries must be positive",
                k + 1
            )));
        }
        let mut offsets = Vec::with_capacity(alpha.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &a in &alpha {
            acc += a;
            offsets.push(acc);
        }
        Ok(ParallelizationSpec { alpha, offsets })
    }

    /// Parse a comma-separated list such as `2,1,1`.
    pub fn parse_alpha(text: &str) -> Result<Vec<usize>> {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad alpha entry `{t}`")))
            })
            .collect()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn original_vertices(&self) -> usize {
        self.alpha.len()
    }

    pub fn total_vertices(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Flat indices of the duplications of original vertex `i` (0-based).
    pub fn block(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    /// Flat index of `x_{i,t}` with 0-based `i` and 1-based `t`.
    pub fn flat_index(&self, i: usize, t: usize) -> usize {
        debug_assert!(t >= 1 && t <= self.alpha[i]);
        self.offsets[i] + t - 1
    }

    /// Inverse of [`flat_index`](Self::flat_index).
    pub fn original_of(&self, flat: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= flat) - 1;
        (i, flat - self.offsets[i] + 1)
    }

    pub fn product_of_alpha(&self) -> u64 {
        self.alpha.iter().map(|&a| a as u64).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference: minimal covers straight from the definition.
    fn covers_by_definition(g: &SimpleGraph) -> Vec<VertexSet> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.is_vertex_cover(&set) {
                continue;
            }
            let minimal = set.iter().all(|&drop| {
                let smaller: Vec<usize> = set.iter().copied().filter(|&v| v != drop).collect();
                !g.is_vertex_cover(&smaller)
            });
            if minimal {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn complete_graph_edges() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(SimpleGraph::complete(1).edge_count(), 0);
        assert_eq!(SimpleGraph::complete(4).edge_count(), 6);
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(
            SimpleGraph::complete(3).edge_ideal(),
            MonomialIdeal::parse("x1*x2, x1*x3, x2*x3", 3).unwrap()
        );
        assert!(SimpleGraph::edgeless(4).edge_ideal().is_zero());
        assert_eq!(SimpleGraph::complete(2).edge_ideal().to_string(), "x1*x2");
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(SimpleGraph::new(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn covers_of_complete_graphs() {
        for m in 2..7 {
            let covers = SimpleGraph::complete(m)
                .minimal_vertex_covers(DEFAULT_VERTEX_CAP)
                .unwrap();
            assert_eq!(covers.len(), m);
            assert!(covers.iter().all(|c| c.len() == m - 1));
        }
        assert_eq!(
            SimpleGraph::complete(2).minimal_vertex_covers(24).unwrap(),
            vec![vec![0], vec![1]]
        );
        assert_eq!(
            SimpleGraph::path(3).minimal_vertex_covers(24).unwrap(),
            vec![vec![0, 2], vec![1]]
        );
    }

    #[test]
    fn covers_match_definition() {
        let graphs = [
            SimpleGraph::path(5),
            SimpleGraph::cycle(5).unwrap(),
            SimpleGraph::cycle(6).unwrap(),
            SimpleGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(),
            SimpleGraph::edgeless(3),
        ];
        for g in &graphs {
            let covers = g.minimal_vertex_covers(24).unwrap();
            assert_eq!(covers, covers_by_definition(g), "{g}");
            for c in &covers {
                assert!(g.is_vertex_cover(c));
            }
        }
    }

    #[test]
    fn isolated_vertices_never_cover() {
        let g = SimpleGraph::new(4, [(0, 1)]).unwrap();
        let covers = g.minimal_vertex_covers(24).unwrap();
        assert_eq!(covers, vec![vec![0], vec![1]]);
        assert_eq!(
            SimpleGraph::edgeless(2).minimal_vertex_covers(24).unwrap(),
            vec![Vec::<usize>::new()]
        );
    }

    #[test]
    fn vertex_cap() {
        assert!(matches!(
            SimpleGraph::complete(10).minimal_vertex_covers(8),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn parallelization_of_triangle() {
        let (g, spec) = SimpleGraph::complete(3).parallelize(&[3, 1, 1]).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(spec.block(0), 0..3);
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert!(!g.has_edge(a, b));
                }
            }
            assert!(g.has_edge(a, 3) && g.has_edge(a, 4));
        }
        assert!(g.has_edge(3, 4));
        assert_eq!(g.edge_count(), 7);
        assert_eq!(spec.original_of(2), (0, 3));
        assert_eq!(spec.original_of(4), (2, 1));
        assert_eq!(spec.flat_index(2, 1), 4);
        assert_eq!(g.labels().unwrap()[1], "x1,2");
    }

    #[test]
    fn identity_parallelization() {
        let g = SimpleGraph::cycle(5).unwrap();
        let (p, spec) = g.parallelize(&[1; 5]).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(spec.total_vertices(), 5);
        assert!(g.parallelize(&[1, 1]).is_err());
        assert!(g.parallelize(&[1, 0, 1, 1, 1]).is_err());
    }

    #[test]
    fn complete_multipartite() {
        let (g, spec) = SimpleGraph::complete(3).parallelize(&[2, 3, 1]).unwrap();
        for a in 0..g.vertex_count() {
            for b in a + 1..g.vertex_count() {
                let same_block = spec.original_of(a).0 == spec.original_of(b).0;
                assert_eq!(g.has_edge(a, b), !same_block);
            }
        }
    }

    #[test]
    fn lifted_covers_examples() {
        let k3 = SimpleGraph::complete(3);
        let (p, spec) = k3.parallelize(&[3, 1, 1]).unwrap();
        let lifted = k3.lifted_minimal_covers(&spec, 24).unwrap();
        assert_eq!(lifted, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 4], vec![3, 4]]);
        assert_eq!(lifted, covers_by_definition(&p));

        let k2 = SimpleGraph::complete(2);
        let (p, spec) = k2.parallelize(&[2, 1]).unwrap();
        let lifted = k2.lifted_minimal_covers(&spec, 24).unwrap();
        assert_eq!(lifted, vec![vec![0, 1], vec![2]]);
        assert_eq!(lifted, covers_by_definition(&p));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = SimpleGraph::parse_edge_list("# triangle plus tail\n4\n1 2\n2 3\n1 3\n\n3 4\n")
            .unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(SimpleGraph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(SimpleGraph::parse_edge_list("3\n1 1\n").is_err());
        assert!(SimpleGraph::parse_edge_list("3\n0 1\n").is_err());
        assert!(SimpleGraph::parse_edge_list("3\n1 2 3\n").is_err());
        assert!(SimpleGraph::parse_edge_list("").is_err());
    }

    #[test]
    fn builtin_constructors() {
        assert_eq!("complete:4".parse::<SimpleGraph>().unwrap().edge_count(), 6);
        assert_eq!("path:4".parse::<SimpleGraph>().unwrap().edge_count(), 3);
        assert_eq!("cycle:4".parse::<SimpleGraph>().unwrap().edge_count(), 4);
        assert!("cycle:2".parse::<SimpleGraph>().is_err());
        assert!("star:3".parse::<SimpleGraph>().is_err());
    }
}
