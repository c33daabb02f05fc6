//! The catalog: four infinite families and twenty sporadic graphs, their
//! block constructions, claimed exact spectra, and certification.

use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::poly::{factor_spectrum, ExactSpectrum, IntPolynomial};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub mod blocks;
pub mod section4;

use blocks::BlockMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("descriptor parameters out of range: {0}")]
    OutOfRange(String),
    #[error("descriptor has no two-exceptional spectrum claim: {0}")]
    NoClaim(String),
    #[error("cannot parse descriptor: {0}")]
    Parse(String),
}

/// Sporadic parameter sets, fixed by the catalog.
pub const V_PAIRS: [(usize, usize); 3] = [(2, 9), (3, 6), (6, 5)];
pub const VI_PAIRS: [(usize, usize); 9] = [
    (7, 45),
    (8, 27),
    (9, 21),
    (10, 18),
    (12, 15),
    (15, 13),
    (18, 12),
    (24, 11),
    (42, 10),
];
pub const VII_PAIRS: [(usize, usize); 2] = [(4, 4), (6, 3)];
pub const VIII_PAIRS: [(usize, usize); 4] = [(4, 10), (5, 7), (6, 6), (9, 5)];
pub const IX_PAIRS: [(usize, usize); 2] = [(3, 4), (5, 3)];

/// One catalog entry: a tagged parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyDescriptor {
    I { a: usize, k: usize },
    II { k: usize, l: usize },
    III { m: usize },
    IV { k: usize },
    V { a: usize, b: usize },
    VI { a: usize, b: usize },
    VII { a: usize, m: usize },
    VIII { a: usize, k: usize },
    IX { a: usize, k: usize },
    Friendship { t: usize, r: usize, k: usize },
}

use FamilyDescriptor as FD;

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FD::I { a, k } => write!(f, "I(a={a},k={k})"),
            FD::II { k, l } => write!(f, "II(k={k},l={l})"),
            FD::III { m } => write!(f, "III(m={m})"),
            FD::IV { k } => write!(f, "IV(k={k})"),
            FD::V { a, b } => write!(f, "V(a={a},b={b})"),
            FD::VI { a, b } => write!(f, "VI(a={a},b={b})"),
            FD::VII { a, m } => write!(f, "VII(a={a},m={m})"),
            FD::VIII { a, k } => write!(f, "VIII(a={a},k={k})"),
            FD::IX { a, k } => write!(f, "IX(a={a},k={k})"),
            FD::Friendship { t, r, k } => write!(f, "F(t={t},r={r},k={k})"),
        }
    }
}

impl FromStr for FamilyDescriptor {
    type Err = DescriptorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| DescriptorError::Parse(s.to_string()))?;
        if !s.ends_with(')') {
            return Err(DescriptorError::Parse(s.to_string()));
        }
        let kind = &s[..open];
        let body = &s[open + 1..s.len() - 1];
        let mut params = std::collections::BTreeMap::new();
        for part in body.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| DescriptorError::Parse(s.to_string()))?;
            let v: usize = value
                .trim()
                .parse()
                .map_err(|_| DescriptorError::Parse(s.to_string()))?;
            params.insert(key.trim().to_string(), v);
        }
        let get = |key: &str| {
            params
                .get(key)
                .copied()
                .ok_or_else(|| DescriptorError::Parse(format!("{s}: missing {key}")))
        };
        let desc = match kind {
            "I" => FD::I {
                a: get("a")?,
                k: get("k")?,
            },
            "II" => FD::II {
                k: get("k")?,
                l: get("l")?,
            },
            "III" => FD::III { m: get("m")? },
            "IV" => FD::IV { k: get("k")? },
            "V" => FD::V {
                a: get("a")?,
                b: get("b")?,
            },
            "VI" => FD::VI {
                a: get("a")?,
                b: get("b")?,
            },
            "VII" => FD::VII {
                a: get("a")?,
                m: get("m")?,
            },
            "VIII" => FD::VIII {
                a: get("a")?,
                k: get("k")?,
            },
            "IX" => FD::IX {
                a: get("a")?,
                k: get("k")?,
            },
            "F" => FD::Friendship {
                t: get("t")?,
                r: get("r")?,
                k: get("k")?,
            },
            _ => return Err(DescriptorError::Parse(s.to_string())),
        };
        desc.validate()?;
        Ok(desc)
    }
}

impl FamilyDescriptor {
    pub fn validate(&self) -> Result<(), DescriptorError> {
        let ok = match *self {
            FD::I { a, k } => a >= 1 && k >= 2,
            FD::II { k, l } => k >= l && l >= 2,
            FD::III { m } => m >= 3,
            FD::IV { k } => k >= 2,
            FD::V { a, b } => V_PAIRS.contains(&(a, b)),
            FD::VI { a, b } => VI_PAIRS.contains(&(a, b)),
            FD::VII { a, m } => VII_PAIRS.contains(&(a, m)),
            FD::VIII { a, k } => VIII_PAIRS.contains(&(a, k)),
            FD::IX { a, k } => IX_PAIRS.contains(&(a, k)),
            FD::Friendship { t, r, k } => {
                r <= t && k >= 1 && t >= 1 && !(k >= 2 && r == 0 && t > r)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(DescriptorError::OutOfRange(self.to_string()))
        }
    }

    /// Vertex count of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            FD::I { a, k } => a + 3 * k,
            FD::II { k, l } => 3 * (k + l),
            FD::III { m } => 3 * m,
            FD::IV { k } => 3 * k + 8,
            FD::V { a, b } => a + b + 2,
            FD::VI { a, b } => a + b + 1,
            FD::VII { a, m } => a + 3 * m,
            FD::VIII { a, k } => a + 3 * k,
            FD::IX { a, k } => a + 3 * k + 1,
            FD::Friendship { t, r, k } => k * (t - r) + r,
        }
    }
}

/// Claimed spectrum of a catalog entry: multiplicities of 2 and -1 plus the
/// residual quadratic `x^2 - T x + D` in exact integer form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimedSpectrum {
    pub mult_two: usize,
    pub mult_minus_one: usize,
    pub trace_t: i64,
    pub det_d: i64,
}

impl ClaimedSpectrum {
    pub fn residual(&self) -> IntPolynomial {
        IntPolynomial::quadratic(self.trace_t, self.det_d)
    }

    /// The two exceptional eigenvalues `(T ± sqrt(T^2 - 4D)) / 2`.
    pub fn exceptional_roots(&self) -> (f64, f64) {
        let t = self.trace_t as f64;
        let d = self.det_d as f64;
        let s = (t * t - 4.0 * d).sqrt();
        ((t + s) / 2.0, (t - s) / 2.0)
    }
}

/// Claimed exact spectrum per the catalog tables.
pub fn claimed_spectrum(desc: &FamilyDescriptor) -> Result<ClaimedSpectrum, DescriptorError> {
    desc.validate()?;
    let spec = match *desc {
        FD::I { a, k } => {
            let (a, k) = (a as i64, k as i64);
            ClaimedSpectrum {
                mult_two: (k - 1) as usize,
                mult_minus_one: (2 * k + a - 1) as usize,
                trace_t: a + 1,
                det_d: 2 * a - 2 - 3 * a * k,
            }
        }
        FD::II { k, l } => {
            let (k, l) = (k as i64, l as i64);
            ClaimedSpectrum {
                mult_two: (k + l - 2) as usize,
                mult_minus_one: (2 * (k + l)) as usize,
                trace_t: 4,
                det_d: 4 - 9 * k * l,
            }
        }
        FD::III { m } => {
            let mi = m as i64;
            ClaimedSpectrum {
                mult_two: m - 1,
                mult_minus_one: 2 * m - 1,
                trace_t: 1,
                det_d: -2 * (mi - 1) * (mi - 1),
            }
        }
        FD::IV { k } => {
            let ki = k as i64;
            ClaimedSpectrum {
                mult_two: k,
                mult_minus_one: 2 * k + 6,
                trace_t: 6,
                det_d: 5 - 24 * ki,
            }
        }
        FD::V { a, b } => {
            let (t, d) = match (a, b) {
                (2, 9) => (8, -21),  // 4 ± sqrt(37)
                (3, 6) => (6, -19),  // 3 ± 2 sqrt(7)
                (6, 5) => (8, -29),  // 4 ± 3 sqrt(5)
                _ => unreachable!(),
            };
            ClaimedSpectrum {
                mult_two: 1,
                mult_minus_one: a + b - 1,
                trace_t: t,
                det_d: d,
            }
        }
        FD::VI { a, b } => {
            let (t, d) = match (a, b) {
                (7, 45) => (48, -154),  // 24 ± sqrt(730)
                (8, 27) => (31, -104),  // (31 ± 9 sqrt(17)) / 2
                (9, 21) => (26, -90),   // 13 ± sqrt(259)
                (10, 18) => (24, -85),  // 12 ± sqrt(229)
                (12, 15) => (23, -84),  // (23 ± sqrt(865)) / 2
                (15, 13) => (24, -90),  // 12 ± 3 sqrt(26)
                (18, 12) => (26, -99),  // 13 ± 2 sqrt(67)
                (24, 11) => (31, -120), // (31 ± sqrt(1441)) / 2
                (42, 10) => (48, -189), // 24 ± 3 sqrt(85)
                _ => unreachable!(),
            };
            ClaimedSpectrum {
                mult_two: 1,
                mult_minus_one: a + b - 2,
                trace_t: t,
                det_d: d,
            }
        }
        FD::VII { a, m } => {
            let (t, d) = match (a, m) {
                (4, 4) => (2, -35), // {7, -5}
                (6, 3) => (4, -29), // 2 ± sqrt(33)
                _ => unreachable!(),
            };
            ClaimedSpectrum {
                mult_two: m,
                mult_minus_one: a + 2 * m - 2,
                trace_t: t,
                det_d: d,
            }
        }
        FD::VIII { a, k } => {
            let (t, d) = match (a, k) {
                (4, 10) => (2, -243), // 1 ± 2 sqrt(61)
                (5, 7) => (3, -144),  // (3 ± 3 sqrt(65)) / 2
                (6, 6) => (4, -125),  // 2 ± sqrt(129)
                (9, 5) => (7, -128),  // (7 ± sqrt(561)) / 2
                _ => unreachable!(),
            };
            ClaimedSpectrum {
                mult_two: k,
                mult_minus_one: a + 2 * k - 2,
                trace_t: t,
                det_d: d,
            }
        }
        FD::IX { a, k } => {
            let (t, d) = match (a, k) {
                (3, 4) => (2, -44), // 1 ± 3 sqrt(5)
                (5, 3) => (4, -39), // 2 ± sqrt(43)
                _ => unreachable!(),
            };
            ClaimedSpectrum {
                mult_two: k,
                mult_minus_one: a + 2 * k - 1,
                trace_t: t,
                det_d: d,
            }
        }
        FD::Friendship { t, r, k } => {
            if t != r + 3 || r < 1 || k < 2 {
                return Err(DescriptorError::NoClaim(desc.to_string()));
            }
            return claimed_spectrum(&FD::I { a: r, k });
        }
    };
    debug_assert_eq!(
        spec.mult_two + spec.mult_minus_one + 2,
        desc.order(),
        "multiplicity bookkeeping for {desc}"
    );
    debug_assert_eq!(
        2 * spec.mult_two as i64 - spec.mult_minus_one as i64 + spec.trace_t,
        0,
        "zero trace for {desc}"
    );
    Ok(spec)
}

/// Builds the catalog graph: the exact block adjacency matrix of the entry.
pub fn build_family(desc: &FamilyDescriptor) -> Result<Graph, DescriptorError> {
    desc.validate()?;
    let g = match *desc {
        FD::I { a, k } => {
            let rows = vec![
                vec![BlockMatrix::j(a, a).sub_identity(), BlockMatrix::j(a, 3 * k)],
                vec![BlockMatrix::j(3 * k, a), BlockMatrix::t_triangles(k)],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::II { k, l } => {
            let rows = vec![
                vec![BlockMatrix::t_triangles(k), BlockMatrix::j(3 * k, 3 * l)],
                vec![BlockMatrix::j(3 * l, 3 * k), BlockMatrix::t_triangles(l)],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::III { m } => {
            let js = BlockMatrix::j(2 * m, m).sub(&BlockMatrix::s_pairs(m));
            let rows = vec![
                vec![BlockMatrix::r_matching(m), js.clone()],
                vec![js.transpose(), BlockMatrix::zero(m, m)],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::IV { k } => {
            let rows = vec![
                vec![
                    BlockMatrix::j(6, 6).sub_identity(),
                    BlockMatrix::j(6, 3 * k),
                    BlockMatrix::zero(6, 2),
                ],
                vec![
                    BlockMatrix::j(3 * k, 6),
                    BlockMatrix::t_triangles(k),
                    BlockMatrix::j(3 * k, 2),
                ],
                vec![
                    BlockMatrix::zero(2, 6),
                    BlockMatrix::j(2, 3 * k),
                    BlockMatrix::r_matching(1),
                ],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::V { a, b } => {
            let rows = vec![
                vec![
                    BlockMatrix::j(a, a).sub_identity(),
                    BlockMatrix::j(a, b),
                    BlockMatrix::j(a, 2),
                ],
                vec![
                    BlockMatrix::j(b, a),
                    BlockMatrix::j(b, b).sub_identity(),
                    BlockMatrix::zero(b, 2),
                ],
                vec![
                    BlockMatrix::j(2, a),
                    BlockMatrix::zero(2, b),
                    BlockMatrix::r_matching(1),
                ],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::VI { a, b } => {
            let rows = vec![
                vec![
                    BlockMatrix::j(a, a).sub_identity(),
                    BlockMatrix::j(a, b),
                    BlockMatrix::j(a, 1),
                ],
                vec![
                    BlockMatrix::j(b, a),
                    BlockMatrix::j(b, b).sub_identity(),
                    BlockMatrix::zero(b, 1),
                ],
                vec![
                    BlockMatrix::j(1, a),
                    BlockMatrix::zero(1, b),
                    BlockMatrix::zero(1, 1),
                ],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::VII { a, m } => {
            let js = BlockMatrix::j(2 * m, m).sub(&BlockMatrix::s_pairs(m));
            let rows = vec![
                vec![
                    BlockMatrix::j(a, a).sub_identity(),
                    BlockMatrix::j(a, m),
                    BlockMatrix::zero(a, 2 * m),
                ],
                vec![
                    BlockMatrix::j(m, a),
                    BlockMatrix::zero(m, m),
                    js.transpose(),
                ],
                vec![
                    BlockMatrix::zero(2 * m, a),
                    js,
                    BlockMatrix::r_matching(m),
                ],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::VIII { a, k } => {
            let js = BlockMatrix::j(2 * k, k).sub(&BlockMatrix::s_pairs(k));
            let rows = vec![
                vec![
                    BlockMatrix::j(a, a).sub_identity(),
                    BlockMatrix::j(a, 2 * k),
                    BlockMatrix::zero(a, k),
                ],
                vec![
                    BlockMatrix::j(2 * k, a),
                    BlockMatrix::r_matching(k),
                    js.clone(),
                ],
                vec![
                    BlockMatrix::zero(k, a),
                    js.transpose(),
                    BlockMatrix::zero(k, k),
                ],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::IX { a, k } => {
            let js = BlockMatrix::j(2 * k, k).sub(&BlockMatrix::s_pairs(k));
            let rows = vec![
                vec![
                    BlockMatrix::j(a, a).sub_identity(),
                    BlockMatrix::j(a, 2 * k),
                    BlockMatrix::zero(a, k),
                    BlockMatrix::zero(a, 1),
                ],
                vec![
                    BlockMatrix::j(2 * k, a),
                    BlockMatrix::r_matching(k),
                    js.clone(),
                    BlockMatrix::zero(2 * k, 1),
                ],
                vec![
                    BlockMatrix::zero(k, a),
                    js.transpose(),
                    BlockMatrix::zero(k, k),
                    BlockMatrix::j(k, 1),
                ],
                vec![
                    BlockMatrix::zero(1, a),
                    BlockMatrix::zero(1, 2 * k),
                    BlockMatrix::j(1, k),
                    BlockMatrix::zero(1, 1),
                ],
            ];
            BlockMatrix::assemble_graph(&rows)
        }
        FD::Friendship { t, r, k } => {
            let group = t - r;
            let n = r + k * group;
            let mut g = Graph::empty(n);
            for u in 0..r {
                for v in (u + 1)..r {
                    g.add_edge(u, v);
                }
            }
            for c in 0..k {
                let base = r + c * group;
                for u in 0..group {
                    for v in (u + 1)..group {
                        g.add_edge(base + u, base + v);
                    }
                    for w in 0..r {
                        g.add_edge(base + u, w);
                    }
                }
            }
            g
        }
    };
    Ok(g)
}

/// One certified catalog entry: claimed and computed spectra agree exactly.
#[derive(Clone, Debug)]
pub struct Certification {
    pub descriptor: FamilyDescriptor,
    pub n: usize,
    pub claimed: ClaimedSpectrum,
    pub spectrum: ExactSpectrum,
}

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error("{descriptor}: built graph is disconnected")]
    Disconnected { descriptor: FamilyDescriptor },
    #[error(
        "{descriptor}: spectrum mismatch\n  claimed  (x-2)^{claimed_p} (x+1)^{claimed_q} ({claimed_residual})\n  computed (x-2)^{got_p} (x+1)^{got_q} ({got_residual})"
    )]
    Mismatch {
        descriptor: FamilyDescriptor,
        claimed_p: usize,
        claimed_q: usize,
        claimed_residual: IntPolynomial,
        got_p: usize,
        got_q: usize,
        got_residual: IntPolynomial,
    },
    #[error("{descriptor}: exceptional eigenvalues do not straddle (r > 2, s < -1)")]
    NotStraddling { descriptor: FamilyDescriptor },
}

/// Builds the graph, computes its exact characteristic polynomial, factors it,
/// and checks the claim `(p, q, x^2 - Tx + D)` exactly, along with
/// connectivity and the sign pattern r > 2, s < -1.
pub fn certify_family(desc: &FamilyDescriptor) -> Result<Certification, CertifyError> {
    let claimed = claimed_spectrum(desc)?;
    let graph = build_family(desc)?;
    if !graph.is_connected() {
        return Err(CertifyError::Disconnected { descriptor: *desc });
    }
    let poly = graph.adjacency_matrix().char_poly();
    let spectrum = factor_spectrum(&poly);
    let ok = spectrum.mult_two == claimed.mult_two
        && spectrum.mult_minus_one == claimed.mult_minus_one
        && spectrum.residual == claimed.residual();
    if !ok {
        return Err(CertifyError::Mismatch {
            descriptor: *desc,
            claimed_p: claimed.mult_two,
            claimed_q: claimed.mult_minus_one,
            claimed_residual: claimed.residual(),
            got_p: spectrum.mult_two,
            got_q: spectrum.mult_minus_one,
            got_residual: spectrum.residual.clone(),
        });
    }
    if !spectrum.straddles_band() {
        return Err(CertifyError::NotStraddling { descriptor: *desc });
    }
    Ok(Certification {
        descriptor: *desc,
        n: graph.n(),
        claimed,
        spectrum,
    })
}

/// All twenty sporadic descriptors (kinds V-IX).
pub fn sporadics() -> Vec<FamilyDescriptor> {
    let mut out = Vec::with_capacity(20);
    out.extend(V_PAIRS.iter().map(|&(a, b)| FD::V { a, b }));
    out.extend(VI_PAIRS.iter().map(|&(a, b)| FD::VI { a, b }));
    out.extend(VII_PAIRS.iter().map(|&(a, m)| FD::VII { a, m }));
    out.extend(VIII_PAIRS.iter().map(|&(a, k)| FD::VIII { a, k }));
    out.extend(IX_PAIRS.iter().map(|&(a, k)| FD::IX { a, k }));
    out
}

/// Sweep bounds over the infinite families.
#[derive(Clone, Copy, Debug)]
pub struct SweepBounds {
    pub max_a: usize,
    pub max_k_i: usize,
    pub max_k_ii: usize,
    pub max_m: usize,
    pub max_k_iv: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        // The standard certification sweep.
        SweepBounds {
            max_a: 20,
            max_k_i: 20,
            max_k_ii: 10,
            max_m: 30,
            max_k_iv: 20,
        }
    }
}

/// Every infinite-family descriptor within the bounds, plus all sporadics.
pub fn sweep_descriptors(bounds: &SweepBounds) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    for a in 1..=bounds.max_a {
        for k in 2..=bounds.max_k_i {
            out.push(FD::I { a, k });
        }
    }
    for k in 2..=bounds.max_k_ii {
        for l in 2..=k {
            out.push(FD::II { k, l });
        }
    }
    for m in 3..=bounds.max_m {
        out.push(FD::III { m });
    }
    for k in 2..=bounds.max_k_iv {
        out.push(FD::IV { k });
    }
    out.extend(sporadics());
    out
}

/// Every valid descriptor of the given order (Friendship omitted: it
/// coincides with kind I when it has a claim at all).
pub fn descriptors_of_order(n: usize) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    for k in 2..=n / 3 {
        if n > 3 * k {
            out.push(FD::I { a: n - 3 * k, k });
        }
    }
    if n.is_multiple_of(3) {
        let s = n / 3;
        for l in 2..=s / 2 {
            let k = s - l;
            if k >= l {
                out.push(FD::II { k, l });
            }
        }
        if s >= 3 {
            out.push(FD::III { m: s });
        }
    }
    if n >= 14 && (n - 8).is_multiple_of(3) {
        out.push(FD::IV { k: (n - 8) / 3 });
    }
    out.extend(sporadics().into_iter().filter(|d| d.order() == n));
    out
}

/// Every valid descriptor with order at most `bound` (Friendship omitted).
pub fn descriptors_up_to_order(bound: usize) -> Vec<FamilyDescriptor> {
    (1..=bound).flat_map(descriptors_of_order).collect()
}

/// The block-structure cell sizes of the built graph, in vertex order.
/// This partition is equitable for every catalog entry.
pub fn natural_block_sizes(desc: &FamilyDescriptor) -> Vec<usize> {
    match *desc {
        FD::I { a, k } => vec![a, 3 * k],
        FD::II { k, l } => vec![3 * k, 3 * l],
        FD::III { m } => vec![2 * m, m],
        FD::IV { k } => vec![6, 3 * k, 2],
        FD::V { a, b } => vec![a, b, 2],
        FD::VI { a, b } => vec![a, b, 1],
        FD::VII { a, m } => vec![a, m, 2 * m],
        FD::VIII { a, k } => vec![a, 2 * k, k],
        FD::IX { a, k } => vec![a, 2 * k, k, 1],
        FD::Friendship { t, r, k } => vec![r, k * (t - r)],
    }
}

/// Adjacency matrix of a descriptor, via the block construction.
pub fn family_adjacency(desc: &FamilyDescriptor) -> Result<IntMatrix, DescriptorError> {
    Ok(build_family(desc)?.adjacency_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn descriptor_round_trip() {
        for text in [
            "I(a=5,k=7)",
            "II(k=3,l=2)",
            "III(m=3)",
            "IV(k=2)",
            "V(a=2,b=9)",
            "VIII(a=4,k=10)",
            "F(t=4,r=1,k=2)",
        ] {
            let d: FamilyDescriptor = text.parse().unwrap();
            assert_eq!(d.to_string(), text);
        }
        assert!("I(a=0,k=2)".parse::<FamilyDescriptor>().is_err());
        assert!("V(a=4,b=4)".parse::<FamilyDescriptor>().is_err());
        assert!("nonsense".parse::<FamilyDescriptor>().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(FD::I { a: 1, k: 2 }.order(), 7);
        assert_eq!(FD::V { a: 2, b: 9 }.order(), 13);
        assert_eq!(FD::VIII { a: 4, k: 10 }.order(), 34);
        assert_eq!(FD::I { a: 1, k: 81 }.order(), 244);
        assert_eq!(FD::Friendship { t: 4, r: 1, k: 2 }.order(), 7);
    }

    #[test]
    fn kind_i_is_friendship() {
        // kind I (a, k) is the generalized friendship graph F(a+3, a, k)
        for (a, k) in [(1usize, 2usize), (2, 3), (4, 2), (3, 4)] {
            let fam = build_family(&FD::I { a, k }).unwrap();
            let fr = build_family(&FD::Friendship { t: a + 3, r: a, k }).unwrap();
            assert_eq!(
                canonical_form(&fam).unwrap(),
                canonical_form(&fr).unwrap(),
                "I(a={a},k={k})"
            );
        }
    }

    #[test]
    fn kind_iii_degree_sequence() {
        let g = build_family(&FD::III { m: 3 }).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn induced_clique_block() {
        // the K4 inside type (i) a=1, k=2: one apex plus one triangle
        let g = build_family(&FD::I { a: 1, k: 2 }).unwrap();
        let h = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert!(h.is_complete());
    }

    #[test]
    fn claimed_examples() {
        let c = claimed_spectrum(&FD::I { a: 1, k: 2 }).unwrap();
        assert_eq!((c.mult_two, c.mult_minus_one, c.trace_t, c.det_d), (1, 4, 2, -6));
        let c = claimed_spectrum(&FD::II { k: 2, l: 2 }).unwrap();
        assert_eq!((c.mult_two, c.mult_minus_one, c.trace_t, c.det_d), (2, 8, 4, -32));
        let c = claimed_spectrum(&FD::VIII { a: 4, k: 10 }).unwrap();
        assert_eq!(
            (c.mult_two, c.mult_minus_one, c.trace_t, c.det_d),
            (10, 22, 2, -243)
        );
        // kind I at (5,5): roots 3 ± sqrt(76)
        let c = claimed_spectrum(&FD::I { a: 5, k: 5 }).unwrap();
        assert_eq!((c.trace_t, c.det_d), (6, -67));
        let (r, s) = c.exceptional_roots();
        assert!((r - (3.0 + 76.0f64.sqrt())).abs() < 1e-12);
        assert!((s - (3.0 - 76.0f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn certify_small_examples() {
        for desc in [
            FD::I { a: 1, k: 2 },
            FD::I { a: 3, k: 4 },
            FD::II { k: 2, l: 2 },
            FD::III { m: 3 },
            FD::IV { k: 2 },
            FD::V { a: 2, b: 9 },
            FD::VII { a: 6, m: 3 },
            FD::IX { a: 5, k: 3 },
        ] {
            let cert = certify_family(&desc).unwrap();
            assert_eq!(cert.n, desc.order());
        }
    }

    #[test]
    fn certify_all_sporadics() {
        for desc in sporadics() {
            certify_family(&desc).unwrap_or_else(|e| panic!("{e}"));
        }
    }

    #[test]
    fn friendship_claims() {
        assert!(claimed_spectrum(&FD::Friendship { t: 4, r: 1, k: 2 }).is_ok());
        assert!(matches!(
            claimed_spectrum(&FD::Friendship { t: 5, r: 1, k: 2 }),
            Err(DescriptorError::NoClaim(_))
        ));
        // K_t cases build but carry no two-exceptional claim
        assert!(build_family(&FD::Friendship { t: 4, r: 4, k: 3 }).is_ok());
        assert!(build_family(&FD::Friendship { t: 3, r: 0, k: 2 }).is_err());
    }

    #[test]
    fn descriptors_of_order_examples() {
        let d9 = descriptors_of_order(9);
        assert!(d9.contains(&FD::I { a: 3, k: 2 }));
        assert!(d9.contains(&FD::III { m: 3 }));
        assert_eq!(d9.len(), 2);
        let d13 = descriptors_of_order(13);
        assert!(d13.contains(&FD::V { a: 2, b: 9 }));
        assert!(d13.contains(&FD::V { a: 6, b: 5 }));
    }
}
