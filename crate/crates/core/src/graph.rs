//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum supported order.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

/// An undirected simple graph with vertices `0..n`.
///
/// Symmetric adjacency with no self-loops is enforced at construction; a
/// `Graph` is never mutated afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed here so that
    /// parsers can represent the empty graph, but the named families require
    /// at least one vertex.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(Self { adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = Self::empty(n)?.adj;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self { adj })
    }

    /// Builds a graph from raw neighbor masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mask = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::BadParams(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Self { adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(|r| r.count_ones() as usize)
    }

    /// A copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Self { adj })
    }

    /// A copy of this graph with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Self { adj })
    }

    /// Whether the subgraph induced by `mask` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = self.degrees().collect();
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    /// BFS 2-coloring, component by component. The lowest vertex of each
    /// component goes to `X`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let side = color[v].unwrap();
                for u in bits(self.adj[v]) {
                    match color[u] {
                        None => {
                            color[u] = Some(!side);
                            queue.push_back(u);
                        }
                        Some(c) if c == side => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut x = 0;
        let mut y = 0;
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                x |= bit(v);
            } else {
                y |= bit(v);
            }
        }
        Some(Bipartition { x, y })
    }

    /// `G ∨ H`: disjoint copies plus every edge between them.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut out = self.disjoint_union(other)?;
        let n = self.order();
        let left = full_mask(n);
        let right = out.vertex_mask() & !left;
        for v in 0..n {
            out.adj[v] |= right;
        }
        for v in n..out.order() {
            out.adj[v] |= left;
        }
        Ok(out)
    }

    /// `G ⊔ H`: `other`'s vertices are relabeled to follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(Error::TooLarge(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << n));
        Ok(Graph { adj })
    }

    /// `t` disjoint copies of `self`.
    pub fn copies(&self, t: usize) -> Result<Graph> {
        let mut out = Graph::empty(0)?;
        for _ in 0..t {
            out = out.disjoint_union(self)?;
        }
        Ok(out)
    }

    /// Parses the plain edge-list format: a header line `n m` followed by
    /// `m` lines `u v` (0-based). Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedEdgeList("missing header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::MalformedEdgeList(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        if lines.next().is_some() {
            return Err(Error::MalformedEdgeList("trailing lines after edges".into()));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::MalformedEdgeList(format!("not a number: {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::MalformedEdgeList(format!(
            "expected two integers, got {line:?}"
        ))),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Parameters for the standard named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{a,b}` with the `a` side first.
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let n = match self {
            Family::Complete(n) | Family::Empty(n) | Family::Cycle(n) | Family::Path(n) => n,
            Family::CompleteBipartite(a, b) => a + b,
        };
        if n == 0 {
            return Err(Error::BadParams(format!("{self:?} has no vertices")));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mut edges = Vec::new();
        match self {
            Family::Complete(n) => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
            }
            Family::Empty(_) => {}
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
                }
                edges.extend((0..n).map(|v| (v, (v + 1) % n)));
            }
            Family::Path(n) => edges.extend((1..n).map(|v| (v - 1, v))),
            Family::CompleteBipartite(a, b) => {
                for u in 0..a {
                    edges.extend((a..a + b).map(|v| (u, v)));
                }
            }
        }
        Graph::from_edge_list(n, &edges)
    }
}

/// Shorthand for `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    Family::Complete(n).build()
}

/// Shorthand for `t·K_1`.
pub fn independent(t: usize) -> Result<Graph> {
    Graph::empty(t)
}

/// A nondecreasing degree sequence `d_1 ≤ … ≤ d_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Accepts any sequence with entries at most `n − 1`; sorts it.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if let Some(&d) = degrees.iter().find(|&&d| d >= n.max(1)) {
            return Err(Error::BadParams(format!(
                "degree {d} too large for length {n}"
            )));
        }
        degrees.sort_unstable();
        Ok(Self { degrees })
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// 1-based access `d_i`.
    pub fn d(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// A proper 2-coloring `(X, Y)` as vertex bitsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: u64,
    pub y: u64,
}

impl Bipartition {
    pub fn x_size(&self) -> usize {
        self.x.count_ones() as usize
    }

    pub fn y_size(&self) -> usize {
        self.y.count_ones() as usize
    }

    pub fn is_balanced(&self) -> bool {
        self.x_size() == self.y_size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_construction() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3, complete(3).unwrap());
        let e2 = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!((e2.order(), e2.size()), (2, 0));
        let dup = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
        assert!(dup.has_edge(1, 0));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(Error::TooLarge(65)));
        assert!(Graph::from_edge_list(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn joins() {
        let k1 = complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), complete(2).unwrap());

        let c4 = Family::Cycle(4).build().unwrap();
        let wheel = k1.join(&c4).unwrap();
        assert_eq!(wheel.degrees().collect::<Vec<_>>(), vec![4, 3, 3, 3, 3]);

        let g = complete(2).unwrap().join(&independent(3).unwrap()).unwrap();
        assert_eq!(g.degrees().collect::<Vec<_>>(), vec![4, 4, 2, 2, 2]);
    }

    #[test]
    fn join_too_large() {
        let a = complete(40).unwrap();
        assert_eq!(a.join(&a), Err(Error::TooLarge(80)));
    }

    #[test]
    fn unions() {
        let k1 = complete(1).unwrap();
        let two = k1.disjoint_union(&k1).unwrap();
        assert_eq!((two.order(), two.size()), (2, 0));

        let k3 = complete(3).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert!(!g.is_connected());
        assert!(g.is_connected_within(0b111));
    }

    #[test]
    fn families() {
        assert!(complete(4).unwrap().degrees().all(|d| d == 3));
        assert!(Family::Cycle(5).build().unwrap().degrees().all(|d| d == 2));
        assert!(Family::CompleteBipartite(3, 3).build().unwrap().degrees().all(|d| d == 3));
        assert_eq!(Family::Path(4).build().unwrap().size(), 3);
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Complete(0).build().is_err());
        assert_eq!(Family::Empty(65).build(), Err(Error::TooLarge(65)));
    }

    #[test]
    fn degree_sequences() {
        let star = Family::CompleteBipartite(1, 3).build().unwrap();
        assert_eq!(star.degree_sequence().as_slice(), &[1, 1, 1, 3]);
        let c6 = Family::Cycle(6).build().unwrap();
        assert_eq!(c6.degree_sequence().as_slice(), &[2; 6]);
        assert!(DegreeSequence::new(vec![3, 1, 1]).is_err());
        assert_eq!(DegreeSequence::new(vec![2, 1, 1]).unwrap().d(1), 1);
    }

    #[test]
    fn bipartitions() {
        let c4 = Family::Cycle(4).build().unwrap();
        let bp = c4.bipartition().unwrap();
        assert_eq!((bp.x, bp.y), (0b0101, 0b1010));

        assert!(Family::Cycle(5).build().unwrap().bipartition().is_none());

        let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
        let bp = k33.bipartition().unwrap();
        assert!(bp.is_balanced());
        assert_eq!(bp.x_size(), 3);
    }

    #[test]
    fn edge_list_text() {
        let c5 = Family::Cycle(5).build().unwrap();
        let text = c5.to_edge_list();
        assert!(text.starts_with("5 5\n"));
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), c5);
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
