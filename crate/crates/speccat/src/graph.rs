//! Simple undirected graphs as packed adjacency bitsets, with the
//! construction and decomposition operations the catalog needs.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
}

/// Undirected simple graph on vertices `0..n`, adjacency stored as `words`
/// 64-bit blocks per row. Symmetric with zero diagonal by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0u64; n * words],
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn triangle() -> Self {
        Self::complete(3)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u},{v})");
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.rows[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v)))
        })
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Induced subgraph on `verts`, relabeled `0..|verts|` in the given order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        for &v in verts {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
        }
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Appends `beta` disjoint triangles.
    pub fn pad_with_triangles(&self, beta: usize) -> Graph {
        let mut g = Graph::empty(self.n + 3 * beta);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for t in 0..beta {
            let base = self.n + 3 * t;
            g.add_edge(base, base + 1);
            g.add_edge(base, base + 2);
            g.add_edge(base + 1, base + 2);
        }
        g
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for (u, v) in self.edges() {
            m.set(u, v, BigInt::from(1));
            m.set(v, u, BigInt::from(1));
        }
        m
    }

    /// `A^2 - A - 2I`, the certificate matrix of the two-eigenvalue problem.
    pub fn band_certificate_matrix(&self) -> IntMatrix {
        let a = self.adjacency_matrix();
        let i2 = IntMatrix::identity(self.n).scale_i64(2);
        a.mul(&a).sub(&a).sub(&i2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let g = Graph::complete(4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.common_neighbors(0, 1), 2);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_connected());
        let isolated = Graph::empty(1);
        assert_eq!(isolated.degree(0), 0);
        assert!(isolated.is_connected());
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5);
        let h = k5.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(h, Graph::complete(3));
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(k5.induced_subgraph(&all).unwrap(), k5);
        assert_eq!(
            k5.induced_subgraph(&[0, 7]),
            Err(GraphError::VertexOutOfRange(7, 5))
        );
    }

    #[test]
    fn components_and_unions() {
        let two_k3 = Graph::triangle().pad_with_triangles(1);
        let comps = two_k3.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(
            Graph::triangle().disjoint_union(&Graph::triangle()),
            two_k3
        );
    }

    #[test]
    fn pad_matches_block_char_poly() {
        // char poly multiplies over disjoint unions
        let g = Graph::path(3);
        let h = Graph::complete(4);
        let u = g.disjoint_union(&h);
        let pu = u.adjacency_matrix().char_poly();
        let pg = g.adjacency_matrix().char_poly();
        let ph = h.adjacency_matrix().char_poly();
        assert_eq!(pu, pg.mul(&ph));
    }

    #[test]
    fn large_vertex_counts() {
        // rows spanning multiple words
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert!(!g.has_edge(0, 64));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.components().len(), 128);
    }
}
