//! Canonical forms and exact isomorphism testing.
//!
//! The canonical labeling of a connected graph is found by iterated
//! neighborhood refinement plus backtracking over the remaining choices,
//! selecting the lexicographically least adjacency bit-string; automorphisms
//! discovered at equal leaves prune branches within the same orbit.
//! Disconnected graphs canonicalize per component, with components sorted by
//! their canonical encodings.

use crate::graph::Graph;
use crate::graph6::to_graph6;
use thiserror::Error;

/// Default vertex-count bound for canonical forms.
pub const CANONICAL_MAX_N: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("graph on {0} vertices exceeds the canonical-form bound {1}")]
    TooLarge(usize, usize),
}

/// Canonical graph6 encoding; equal iff the underlying graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Canonical form of an arbitrary graph with at most [`CANONICAL_MAX_N`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    if g.n() > CANONICAL_MAX_N {
        return Err(CanonError::TooLarge(g.n(), CANONICAL_MAX_N));
    }
    Ok(CanonicalForm(to_graph6(&canonical_relabeling(g))))
}

/// The canonically relabeled graph itself (component-sorted block diagonal).
pub fn canonical_relabeling(g: &Graph) -> Graph {
    let comps = g.components();
    if comps.len() == 1 {
        let coloring = vec![0usize; g.n()];
        let (perm, _) = canonical_labeling_connected(g, &coloring);
        return g.relabel(&perm);
    }
    let mut canon_comps: Vec<Graph> = comps
        .iter()
        .map(|c| {
            let sub = g.induced_subgraph(c).expect("component vertices in range");
            let coloring = vec![0usize; sub.n()];
            let (perm, _) = canonical_labeling_connected(&sub, &coloring);
            sub.relabel(&perm)
        })
        .collect();
    canon_comps.sort_by_key(|a| (a.n(), to_graph6(a)));
    let mut out = Graph::empty(0);
    for c in canon_comps {
        out = out.disjoint_union(&c);
    }
    out
}

/// Packed certificate of a colored graph: the (color, class size) profile
/// plus the minimal upper-triangle bit-string over all color-respecting
/// relabelings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Certificate {
    pub class_sizes: Vec<(usize, usize)>,
    pub bits: Vec<u64>,
}

/// Canonical labeling of a connected (or small arbitrary) graph under an
/// initial coloring. Returns the permutation `orig -> position` and the
/// certificate it realizes.
pub(crate) fn canonical_labeling_connected(
    g: &Graph,
    coloring: &[usize],
) -> (Vec<usize>, Certificate) {
    assert_eq!(coloring.len(), g.n());
    let mut cells = initial_cells(coloring);
    let mut s = Searcher {
        g,
        best: None,
        best_perm: Vec::new(),
        aut_gens: Vec::new(),
    };
    let mut prefix = Vec::new();
    s.refine(&mut cells);
    s.search(cells, &mut prefix);
    let class_sizes = {
        let mut by_color: Vec<(usize, usize)> = Vec::new();
        for &c in coloring {
            match by_color.iter_mut().find(|(col, _)| *col == c) {
                Some((_, n)) => *n += 1,
                None => by_color.push((c, 1)),
            }
        }
        by_color.sort_unstable();
        by_color
    };
    (
        s.best_perm,
        Certificate {
            class_sizes,
            bits: s.best.unwrap(),
        },
    )
}

fn initial_cells(coloring: &[usize]) -> Vec<Vec<usize>> {
    let mut colors: Vec<usize> = coloring.to_vec();
    colors.sort_unstable();
    colors.dedup();
    colors
        .iter()
        .map(|&c| {
            (0..coloring.len())
                .filter(|&v| coloring[v] == c)
                .collect::<Vec<usize>>()
        })
        .collect()
}

struct Searcher<'a> {
    g: &'a Graph,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    aut_gens: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    /// Iterated neighborhood refinement to an equitable partition.
    /// Sub-cells split by neighbor count, ordered by ascending count.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let words = self.g.words();
        loop {
            let mut changed = false;
            let mut si = 0;
            while si < cells.len() {
                let splitter_mask = self.mask_of(&cells[si]);
                let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut counted: Vec<(usize, usize)> = cell
                        .iter()
                        .map(|&v| {
                            let row = self.g.row(v);
                            let mut c = 0usize;
                            for w in 0..words {
                                c += (row[w] & splitter_mask[w]).count_ones() as usize;
                            }
                            (c, v)
                        })
                        .collect();
                    counted.sort_unstable();
                    let mut start = 0;
                    for i in 1..=counted.len() {
                        if i == counted.len() || counted[i].0 != counted[start].0 {
                            next.push(counted[start..i].iter().map(|&(_, v)| v).collect());
                            if start != 0 || i != counted.len() {
                                changed = true;
                            }
                            start = i;
                        }
                    }
                }
                *cells = next;
                si += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn mask_of(&self, cell: &[usize]) -> Vec<u64> {
        let mut mask = vec![0u64; self.g.words()];
        for &v in cell {
            mask[v / 64] |= 1u64 << (v % 64);
        }
        mask
    }

    fn search(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.iter().all(|c| c.len() == 1) {
            self.visit_leaf(&cells);
            return;
        }
        // first smallest non-singleton cell
        let min_len = cells
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.len())
            .min()
            .unwrap();
        let target = cells
            .iter()
            .position(|c| c.len() == min_len)
            .unwrap();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (ci, cell) in cells.iter().enumerate() {
                if ci == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            prefix.push(v);
            self.refine(&mut child);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// True iff some discovered automorphism fixing the whole prefix
    /// pointwise maps `v` into the explored set.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        if explored.is_empty() || self.aut_gens.is_empty() {
            return false;
        }
        let n = self.g.n();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while dsu[r] != r {
                r = dsu[r];
            }
            let mut c = x;
            while dsu[c] != r {
                let next = dsu[c];
                dsu[c] = r;
                c = next;
            }
            r
        }
        for gamma in &self.aut_gens {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (u, &gu) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut dsu, u), find(&mut dsu, gu));
                if a != b {
                    dsu[a] = b;
                }
            }
        }
        let rv = find(&mut dsu, v);
        explored.iter().any(|&u| find(&mut dsu, u) == rv)
    }

    fn visit_leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.n();
        let mut perm = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let cert = pack_certificate(self.g, &perm);
        match &self.best {
            None => {
                self.best = Some(cert);
                self.best_perm = perm;
            }
            Some(b) => {
                if cert < *b {
                    self.best = Some(cert);
                    self.best_perm = perm;
                } else if cert == *b {
                    // perm and best_perm realize the same labeled graph:
                    // inv(best_perm) . perm is an automorphism
                    let mut inv_best = vec![0usize; n];
                    for (v, &p) in self.best_perm.iter().enumerate() {
                        inv_best[p] = v;
                    }
                    let gamma: Vec<usize> = (0..n).map(|v| inv_best[perm[v]]).collect();
                    if gamma.iter().enumerate().any(|(i, &x)| x != i)
                        && !self.aut_gens.contains(&gamma)
                    {
                        self.aut_gens.push(gamma);
                    }
                }
            }
        }
    }
}

/// Upper-triangle adjacency bits under `perm`, packed MSB-first so that
/// `Vec<u64>` ordering is the lexicographic bit-string ordering.
fn pack_certificate(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut idx = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(inv[i], inv[j]) {
                out[idx / 64] |= 1u64 << (63 - (idx % 64));
            }
            idx += 1;
        }
    }
    out
}

/// Exact isomorphism test for graphs of any order.
///
/// Components are matched by size and canonical form when small enough,
/// falling back to refinement-guided backtracking above the canonical bound.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let mut gc = g.components();
    let mut hc = h.components();
    if gc.len() != hc.len() {
        return false;
    }
    gc.sort_by_key(|c| c.len());
    hc.sort_by_key(|c| c.len());
    // group by size and match within groups
    let gs: Vec<Graph> = gc.iter().map(|c| g.induced_subgraph(c).unwrap()).collect();
    let mut hs: Vec<Option<Graph>> = hc
        .iter()
        .map(|c| Some(h.induced_subgraph(c).unwrap()))
        .collect();
    'outer: for gi in &gs {
        for slot in hs.iter_mut() {
            if let Some(hi) = slot {
                if hi.n() == gi.n() && connected_isomorphic(gi, hi) {
                    *slot = None;
                    continue 'outer;
                }
            }
        }
        return false;
    }
    true
}

fn connected_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() <= CANONICAL_MAX_N {
        let cg = canonical_form(g).expect("within bound");
        let ch = canonical_form(h).expect("within bound");
        return cg == ch;
    }
    backtracking_isomorphic(g, h)
}

/// Refinement-guided first-match isomorphism search.
fn backtracking_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    let gcol = wl_colors(g);
    let hcol = wl_colors(h);
    let mut gsorted = gcol.clone();
    let mut hsorted = hcol.clone();
    gsorted.sort_unstable();
    hsorted.sort_unstable();
    if gsorted != hsorted {
        return false;
    }
    // assign vertices of g in order of ascending color-class rarity,
    // preferring vertices adjacent to already-assigned ones
    let mut class_size = std::collections::HashMap::new();
    for &c in &gcol {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&gcol[v]], v));
    let mut arranged: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while arranged.len() < n {
        let next = order
            .iter()
            .copied()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    arranged.iter().filter(|&&u| g.has_edge(u, v)).count(),
                    usize::MAX - class_size[&gcol[v]],
                )
            })
            .unwrap();
        placed[next] = true;
        arranged.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    assign(g, h, &gcol, &hcol, &arranged, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    h: &Graph,
    gcol: &[u64],
    hcol: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for x in 0..h.n() {
        if used[x] || hcol[x] != gcol[v] || h.degree(x) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], x));
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if assign(g, h, gcol, hcol, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[x] = false;
    }
    false
}

/// Iterated Weisfeiler-Leman vertex colors as structure hashes,
/// comparable across graphs.
fn wl_colors(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..n.min(16) {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u64> = g.neighbors(v).map(|u| colors[u]).collect();
            nb.sort_unstable();
            let mut acc = colors[v].wrapping_mul(0x9e3779b97f4a7c15);
            for c in nb {
                acc = acc
                    .rotate_left(17)
                    .wrapping_mul(0xff51afd7ed558ccd)
                    .wrapping_add(c);
            }
            next.push(acc);
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}
