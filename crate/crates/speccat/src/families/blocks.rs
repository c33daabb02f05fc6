//! Rectangular 0/1 blocks (J, I, 0, T_{3m}, R_{2k}, S_{2k}) and the
//! assembler that stitches them into catalog adjacency matrices.

use crate::graph::Graph;
use crate::matrix::IntMatrix;
use num_bigint::BigInt;

/// Small rectangular integer matrix used only for block assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl BlockMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BlockMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// All-ones block `J`.
    pub fn j(rows: usize, cols: usize) -> Self {
        BlockMatrix {
            rows,
            cols,
            entries: vec![1; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut b = Self::zero(n, n);
        for i in 0..n {
            b.entries[i * n + i] = 1;
        }
        b
    }

    /// Adjacency matrix `T_{3m}` of `m` disjoint triangles.
    pub fn t_triangles(m: usize) -> Self {
        let n = 3 * m;
        let mut b = Self::zero(n, n);
        for t in 0..m {
            for u in 0..3 {
                for v in 0..3 {
                    if u != v {
                        b.entries[(3 * t + u) * n + (3 * t + v)] = 1;
                    }
                }
            }
        }
        b
    }

    /// Adjacency matrix `R_{2k}` of `k` disjoint edges.
    pub fn r_matching(k: usize) -> Self {
        let n = 2 * k;
        let mut b = Self::zero(n, n);
        for p in 0..k {
            b.entries[(2 * p) * n + (2 * p + 1)] = 1;
            b.entries[(2 * p + 1) * n + (2 * p)] = 1;
        }
        b
    }

    /// The `2k x k` pair-indicator matrix `S_{2k}`: column `j` has ones in
    /// rows `2j` and `2j+1` only.
    pub fn s_pairs(k: usize) -> Self {
        let mut b = Self::zero(2 * k, k);
        for j in 0..k {
            b.entries[(2 * j) * k + j] = 1;
            b.entries[(2 * j + 1) * k + j] = 1;
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        BlockMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `self - I` for square blocks (the clique block `J - I`).
    pub fn sub_identity(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        self.sub(&Self::identity(self.rows))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        assert_eq!(self.rows, self.cols, "IntMatrix must be square");
        let mut m = IntMatrix::zeros(self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, BigInt::from(self.get(i, j)));
            }
        }
        m
    }

    /// Stitches a block grid into a graph, asserting that the result is a
    /// symmetric 0/1 matrix with zero diagonal. The symmetry assertion is the
    /// arbiter for the block orientations the source displays ambiguously.
    pub fn assemble_graph(grid: &[Vec<BlockMatrix>]) -> Graph {
        let block_rows: Vec<usize> = grid.iter().map(|r| r[0].rows).collect();
        let block_cols: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        assert_eq!(block_rows, block_cols, "block grid must be square");
        for (bi, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), block_cols.len(), "ragged block grid");
            for (bj, block) in row.iter().enumerate() {
                assert_eq!(block.rows, block_rows[bi], "row size mismatch at ({bi},{bj})");
                assert_eq!(block.cols, block_cols[bj], "col size mismatch at ({bi},{bj})");
            }
        }
        let offsets: Vec<usize> = std::iter::once(0)
            .chain(block_rows.iter().scan(0, |acc, &r| {
                *acc += r;
                Some(*acc)
            }))
            .collect();
        let n = *offsets.last().unwrap();
        let mut dense = vec![0i64; n * n];
        for (bi, row) in grid.iter().enumerate() {
            for (bj, block) in row.iter().enumerate() {
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        dense[(offsets[bi] + i) * n + (offsets[bj] + j)] = block.get(i, j);
                    }
                }
            }
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            assert_eq!(dense[i * n + i], 0, "nonzero diagonal at {i}");
            for j in (i + 1)..n {
                let e = dense[i * n + j];
                assert_eq!(e, dense[j * n + i], "asymmetric assembly at ({i},{j})");
                assert!(e == 0 || e == 1, "non-0/1 entry {e} at ({i},{j})");
                if e == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t6_is_two_triangles() {
        let t6 = BlockMatrix::t_triangles(2);
        let g = BlockMatrix::assemble_graph(&[vec![t6]]);
        assert_eq!(g, Graph::triangle().pad_with_triangles(1));
    }

    #[test]
    fn r4_is_two_edges() {
        let r4 = BlockMatrix::r_matching(2);
        let g = BlockMatrix::assemble_graph(&[vec![r4]]);
        assert_eq!(g, Graph::with_edges(4, &[(0, 1), (2, 3)]));
    }

    #[test]
    fn s6_sums() {
        let s6 = BlockMatrix::s_pairs(3);
        assert_eq!(s6.rows(), 6);
        assert_eq!(s6.cols(), 3);
        assert!(s6.col_sums().iter().all(|&c| c == 2));
        assert!(s6.row_sums().iter().all(|&r| r == 1));
    }

    #[test]
    #[should_panic(expected = "asymmetric assembly")]
    fn asymmetric_grid_rejected() {
        // wrong orientation below the diagonal (S^T instead of J - S^T)
        // breaks symmetry and must be caught by the assembler
        let js = BlockMatrix::j(6, 3).sub(&BlockMatrix::s_pairs(3));
        let rows = vec![
            vec![BlockMatrix::r_matching(3), js],
            vec![BlockMatrix::s_pairs(3).transpose(), BlockMatrix::zero(3, 3)],
        ];
        let _ = BlockMatrix::assemble_graph(&rows);
    }
}
