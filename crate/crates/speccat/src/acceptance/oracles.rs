//! Counting oracles independent of the canonical-augmentation path:
//! cycle-index (Burnside) isomorphism-class counts with the inverse Euler
//! transform for connectivity, and a literal labeled brute-force
//! enumeration with canonical deduplication.

use crate::canon::canonical_form;
use crate::graph::Graph;
use std::collections::HashSet;

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of pairs fixed by a permutation of the given cycle type, i.e. the
/// exponent of 2 in the fixed-graph count.
fn fixed_pairs(parts: &[usize]) -> u32 {
    let mut fp = 0usize;
    for (i, &p) in parts.iter().enumerate() {
        fp += p / 2;
        for &q in &parts[i + 1..] {
            fp += gcd(p, q);
        }
    }
    fp as u32
}

/// Isomorphism classes of simple graphs on `n` vertices, by Burnside's lemma
/// over the pair action of the symmetric group.
pub fn graph_classes_burnside(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let nfact = factorial(n);
    let mut total: u128 = 0;
    for parts in partitions(n) {
        // z_lambda = prod m^{a_m} a_m!
        let mut z: u128 = 1;
        let mut mult = std::collections::BTreeMap::new();
        for &p in &parts {
            *mult.entry(p).or_insert(0u128) += 1;
        }
        for (&m, &a) in &mult {
            z *= (m as u128).pow(a as u32) * factorial(a as usize);
        }
        let perms = nfact / z;
        total += perms * (1u128 << fixed_pairs(&parts));
    }
    total / nfact
}

/// Connected class counts from all-graph class counts, by the inverse Euler
/// transform (graphs are multisets of connected graphs).
pub fn connected_from_all(all: &[u128]) -> Vec<u128> {
    let max = all.len() - 1; // all[0] == 1
    let mut b = vec![0i128; max + 1];
    let mut c = vec![0i128; max + 1];
    for n in 1..=max {
        let mut s: i128 = (n as i128) * all[n] as i128;
        for k in 1..n {
            s -= b[k] * all[n - k] as i128;
        }
        b[n] = s;
        let mut t = b[n];
        for (d, &cd) in c.iter().enumerate().take(n).skip(1) {
            if n % d == 0 {
                t -= (d as i128) * cd;
            }
        }
        assert_eq!(t % n as i128, 0, "inverse Euler transform must be exact");
        c[n] = t / n as i128;
    }
    c.iter().map(|&x| x as u128).collect()
}

/// Literal labeled enumeration over all 2^(n(n-1)/2) graphs with canonical
/// deduplication. Returns (all classes, connected classes).
pub fn labeled_brute_force_classes(n: usize) -> (usize, usize) {
    assert!(n <= 7, "labeled brute force is desk-scale only below n = 8");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut all = HashSet::new();
    let mut connected = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut g = Graph::empty(n);
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if (mask >> bit) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        let form = canonical_form(&g).expect("small graph");
        if g.is_connected() {
            connected.insert(form.clone());
        }
        all.insert(form);
    }
    (all.len(), connected.len())
}

/// All graphs of order `n` up to isomorphism, disconnected included, built
/// as multisets of connected graphs of smaller orders. Independent of the
/// all-graphs augmentation stream; used by the brute-force DS cross-check.
pub fn all_graphs_via_components(n: usize) -> Vec<Graph> {
    let connected_by_order: Vec<Vec<Graph>> = (0..=n)
        .map(|k| {
            if k == 0 {
                Vec::new()
            } else {
                crate::enumerate::connected_graphs(k).expect("within cap")
            }
        })
        .collect();
    let mut out = Vec::new();
    // choose components in weakly decreasing order of size, with replacement
    fn rec(
        remaining: usize,
        max_size: usize,
        min_index_at_max: usize,
        acc: &Graph,
        pool: &Vec<Vec<Graph>>,
        out: &mut Vec<Graph>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for size in (1..=remaining.min(max_size)).rev() {
            let start = if size == max_size { min_index_at_max } else { 0 };
            for (idx, comp) in pool[size].iter().enumerate().skip(start) {
                let next = acc.disjoint_union(comp);
                rec(remaining - size, size, idx, &next, pool, out);
            }
        }
    }
    rec(n, n, 0, &Graph::empty(0), &connected_by_order, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn burnside_matches_known_counts() {
        let known: [u128; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
        for (n, &expect) in known.iter().enumerate() {
            assert_eq!(graph_classes_burnside(n), expect, "n={n}");
        }
    }

    #[test]
    fn inverse_euler_matches_known_connected_counts() {
        let all: Vec<u128> = (0..=9).map(graph_classes_burnside).collect();
        let connected = connected_from_all(&all);
        let known: [u128; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];
        for n in 1..=9 {
            assert_eq!(connected[n], known[n - 1], "n={n}");
        }
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(labeled_brute_force_classes(4), (11, 6));
        assert_eq!(labeled_brute_force_classes(5), (34, 21));
    }

    #[test]
    fn component_built_graphs() {
        // 11 graphs on 4 vertices, 34 on 5
        assert_eq!(all_graphs_via_components(4).len(), 11);
        assert_eq!(all_graphs_via_components(5).len(), 34);
    }
}
