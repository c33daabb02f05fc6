//! Cospectral-mate generation and determined-by-spectrum verdicts.
//!
//! Two padded catalog graphs `H + b K3` and `H' + b' K3` are cospectral
//! exactly when the residual quadratics agree and the multiplicity gaps
//! satisfy `q - q' = 2 (p - p')`; the padding difference is then `p - p'`.
//! The search over partner descriptors is bounded but exhaustive within the
//! bound, and every emitted witness is certified: exact characteristic
//! polynomial equality plus a non-isomorphism check.

use crate::canon::{canonical_form, is_isomorphic, CANONICAL_MAX_N};
use crate::families::{build_family, claimed_spectrum, DescriptorError, FamilyDescriptor};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::poly::IntPolynomial;
use crate::spectral::exact_spectrum;
use serde_json::{json, Value};
use thiserror::Error;

/// Which printed cospectral-pair case a witness realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremCase {
    /// type (i) a=5 with type (iv), 5k = 1 + 8k'
    IFiveWithIv,
    /// type (i) a=3 with type (ii), k = k' l'
    IThreeWithIi,
    /// type (i) (1, 81) with type (viii) (4, 10)
    IOneWithViii,
    /// two type (ii) graphs with equal products k l = k' l'
    IiWithIi,
    /// outside the printed list: a falsification witness
    Unlisted,
}

/// A certified cospectral pair of padded catalog graphs.
#[derive(Clone, Debug)]
pub struct CospectralWitness {
    pub left: (FamilyDescriptor, usize),
    pub right: (FamilyDescriptor, usize),
    pub shared_char_poly: IntPolynomial,
    pub case: TheoremCase,
}

impl CospectralWitness {
    pub fn left_graph(&self) -> Graph {
        build_family(&self.left.0)
            .expect("validated descriptor")
            .pad_with_triangles(self.left.1)
    }

    pub fn right_graph(&self) -> Graph {
        build_family(&self.right.0)
            .expect("validated descriptor")
            .pad_with_triangles(self.right.1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "left": { "descriptor": self.left.0.to_string(), "beta": self.left.1,
                      "graph6": to_graph6(&self.left_graph()) },
            "right": { "descriptor": self.right.0.to_string(), "beta": self.right.1,
                       "graph6": to_graph6(&self.right_graph()) },
            "shared_char_poly": self.shared_char_poly.coeffs().iter()
                .map(|c| c.to_string()).collect::<Vec<_>>(),
            "case": format!("{:?}", self.case),
        })
    }
}

#[derive(Debug, Error)]
pub enum DsError {
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error("witness certification failed for {left} + {lb} K3 vs {right} + {rb} K3: {reason}")]
    Certification {
        left: FamilyDescriptor,
        lb: usize,
        right: FamilyDescriptor,
        rb: usize,
        reason: String,
    },
    #[error(
        "predicate/search inconsistency for {descriptor}: bullet {predicate:?}, witness found: {witness_found}"
    )]
    Inconsistent {
        descriptor: FamilyDescriptor,
        predicate: Option<ExceptionCase>,
        witness_found: bool,
    },
}

/// Every catalog descriptor whose claimed residual quadratic is
/// `x^2 - T x + D`, found by inverting the per-kind spectrum formulas.
/// Exhaustive: each kind determines its parameters from `(T, D)`.
fn descriptors_with_residual(t: i64, d: i64, order_bound: usize) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    // kind I: T = a + 1, D = 2a - 2 - 3ak
    if t >= 2 {
        let a = (t - 1) as usize;
        let num = 2 * (t - 1) - 2 - d;
        let den = 3 * (t - 1);
        if num > 0 && num % den == 0 {
            let k = (num / den) as usize;
            if k >= 2 && a + 3 * k <= order_bound {
                out.push(FamilyDescriptor::I { a, k });
            }
        }
    }
    // kind II: T = 4, D = 4 - 9 k l
    if t == 4 && (4 - d) % 9 == 0 && d < 4 {
        let product = ((4 - d) / 9) as usize;
        for l in 2..=product {
            if l * l > product {
                break;
            }
            if product.is_multiple_of(l) {
                let k = product / l;
                if k >= l && 3 * (k + l) <= order_bound {
                    out.push(FamilyDescriptor::II { k, l });
                }
            }
        }
    }
    // kind III: T = 1, D = -2 (m - 1)^2
    if t == 1 && d < 0 && (-d) % 2 == 0 {
        let sq = (-d / 2) as usize;
        let root = (sq as f64).sqrt().round() as usize;
        if root * root == sq {
            let m = root + 1;
            if m >= 3 && 3 * m <= order_bound {
                out.push(FamilyDescriptor::III { m });
            }
        }
    }
    // kind IV: T = 6, D = 5 - 24 k
    if t == 6 && (5 - d) % 24 == 0 && d < 5 {
        let k = ((5 - d) / 24) as usize;
        if k >= 2 && 3 * k + 8 <= order_bound {
            out.push(FamilyDescriptor::IV { k });
        }
    }
    for cand in crate::families::sporadics() {
        let c = claimed_spectrum(&cand).expect("sporadic claims");
        if c.trace_t == t && c.det_d == d && cand.order() <= order_bound {
            out.push(cand);
        }
    }
    out
}

/// Uncertified partner search: all descriptors within the order bound whose
/// claimed spectrum matches after triangle padding. Returns
/// `(partner, beta_left, beta_right)` with minimal paddings.
pub fn search_partners(
    desc: &FamilyDescriptor,
    order_bound: usize,
) -> Result<Vec<(FamilyDescriptor, usize, usize)>, DescriptorError> {
    let claim = claimed_spectrum(desc)?;
    let me = normalize(desc);
    let mut out = Vec::new();
    for cand in descriptors_with_residual(claim.trace_t, claim.det_d, order_bound) {
        if cand == me {
            continue;
        }
        let c = claimed_spectrum(&cand).expect("catalog claims");
        let dp = claim.mult_two as i64 - c.mult_two as i64;
        let dq = claim.mult_minus_one as i64 - c.mult_minus_one as i64;
        if dq != 2 * dp {
            continue;
        }
        let (bl, br) = if dp >= 0 {
            (0usize, dp as usize)
        } else {
            ((-dp) as usize, 0usize)
        };
        out.push((cand, bl, br));
    }
    Ok(out)
}

/// Kind-I descriptors delegate Friendship parameters; everything else is itself.
fn normalize(desc: &FamilyDescriptor) -> FamilyDescriptor {
    match *desc {
        FamilyDescriptor::Friendship { t, r, k } if t == r + 3 => {
            FamilyDescriptor::I { a: r, k }
        }
        d => d,
    }
}

/// Labels a descriptor pair with the printed case it realizes (pure
/// parameter arithmetic, no graph construction).
pub fn theorem_case(a: &FamilyDescriptor, b: &FamilyDescriptor) -> TheoremCase {
    use FamilyDescriptor as FD;
    let pair = (a.min(b), a.max(b));
    match (pair.0, pair.1) {
        (FD::I { a: 5, k }, FD::IV { k: kp }) | (FD::IV { k: kp }, FD::I { a: 5, k }) => {
            if 5 * k == 1 + 8 * kp {
                TheoremCase::IFiveWithIv
            } else {
                TheoremCase::Unlisted
            }
        }
        (FD::I { a: 3, k }, FD::II { k: kp, l: lp })
        | (FD::II { k: kp, l: lp }, FD::I { a: 3, k }) => {
            if *k == kp * lp {
                TheoremCase::IThreeWithIi
            } else {
                TheoremCase::Unlisted
            }
        }
        (FD::I { a: 1, k: 81 }, FD::VIII { a: 4, k: 10 })
        | (FD::VIII { a: 4, k: 10 }, FD::I { a: 1, k: 81 }) => TheoremCase::IOneWithViii,
        (FD::II { k, l }, FD::II { k: kp, l: lp }) => {
            if k * l == kp * lp {
                TheoremCase::IiWithIi
            } else {
                TheoremCase::Unlisted
            }
        }
        _ => TheoremCase::Unlisted,
    }
}

/// Certifies a candidate pair: exact characteristic-polynomial equality and
/// non-isomorphism (canonical forms within the bound, component structure or
/// backtracking search above it).
fn certify_witness(
    left: (FamilyDescriptor, usize),
    right: (FamilyDescriptor, usize),
) -> Result<CospectralWitness, DsError> {
    let lg = build_family(&left.0)?.pad_with_triangles(left.1);
    let rg = build_family(&right.0)?.pad_with_triangles(right.1);
    let fail = |reason: &str| DsError::Certification {
        left: left.0,
        lb: left.1,
        right: right.0,
        rb: right.1,
        reason: reason.to_string(),
    };
    if lg.n() != rg.n() {
        return Err(fail("orders differ"));
    }
    let ls = exact_spectrum(&lg);
    let rs = exact_spectrum(&rg);
    let cospectral = ls.mult_two == rs.mult_two
        && ls.mult_minus_one == rs.mult_minus_one
        && ls.residual == rs.residual;
    if !cospectral {
        return Err(fail("characteristic polynomials differ"));
    }
    let non_isomorphic = if lg.n() <= CANONICAL_MAX_N {
        canonical_form(&lg).expect("within bound") != canonical_form(&rg).expect("within bound")
    } else {
        // above the canonical cap, component structure separates first
        let lc: Vec<usize> = lg.components().iter().map(|c| c.len()).collect();
        let rc: Vec<usize> = rg.components().iter().map(|c| c.len()).collect();
        if lc != rc {
            true
        } else {
            !is_isomorphic(&lg, &rg)
        }
    };
    if !non_isomorphic {
        return Err(fail("padded graphs are isomorphic"));
    }
    Ok(CospectralWitness {
        left,
        right,
        shared_char_poly: ls.reconstruct(),
        case: theorem_case(&left.0, &right.0),
    })
}

/// Default partner-search bound factor over the descriptor order.
pub const SEARCH_BOUND_FACTOR: usize = 10;

/// All certified cospectral witnesses involving `desc` (possibly with
/// padding on either side), searched up to ten times the descriptor order.
pub fn cospectral_mates(desc: &FamilyDescriptor) -> Result<Vec<CospectralWitness>, DsError> {
    let me = normalize(desc);
    let bound = SEARCH_BOUND_FACTOR * me.order();
    let mut out = Vec::new();
    for (partner, bl, br) in search_partners(&me, bound)? {
        out.push(certify_witness((me, bl), (partner, br))?);
    }
    Ok(out)
}

/// The published exception list: the only catalog graphs with a mate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionCase {
    /// type (i), (a, k) = (1, 81)
    IOneK81,
    /// type (i), a = 3, k composite
    IThreeComposite,
    /// type (i), a = 5, k = 5 (mod 8)
    IFiveMod8,
    /// type (ii), k l has a divisor d with l < d < k
    IiMiddleDivisor,
}

fn exception_predicate(desc: &FamilyDescriptor) -> Option<ExceptionCase> {
    match *desc {
        FamilyDescriptor::I { a: 1, k: 81 } => Some(ExceptionCase::IOneK81),
        FamilyDescriptor::I { a: 3, k } if k >= 4 && (2..k).any(|d| k % d == 0) => {
            Some(ExceptionCase::IThreeComposite)
        }
        FamilyDescriptor::I { a: 5, k } if k % 8 == 5 => Some(ExceptionCase::IFiveMod8),
        FamilyDescriptor::II { k, l } => {
            let product = k * l;
            ((l + 1)..k)
                .any(|d| product % d == 0)
                .then_some(ExceptionCase::IiMiddleDivisor)
        }
        _ => None,
    }
}

/// Determined-by-spectrum verdict for the *unpadded* catalog graph.
#[derive(Clone, Debug)]
pub struct DsVerdict {
    pub descriptor: FamilyDescriptor,
    pub is_ds: bool,
    pub exception_case: Option<ExceptionCase>,
    pub witness: Option<CospectralWitness>,
}

impl DsVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "descriptor": self.descriptor.to_string(),
            "is_ds": self.is_ds,
            "exception_case": self.exception_case.map(|c| format!("{c:?}")),
            "witness": self.witness.as_ref().map(|w| w.to_json()),
        })
    }
}

/// Decides whether the catalog graph itself (no padding) has a nonisomorphic
/// cospectral mate. The exception predicates and the bounded witness search
/// must agree for kinds I and II; disagreement is reported as an error.
pub fn is_determined_by_spectrum(desc: &FamilyDescriptor) -> Result<DsVerdict, DsError> {
    let me = normalize(desc);
    me.validate()?;
    claimed_spectrum(&me)?;
    let predicate = exception_predicate(&me);
    // A mate for the unpadded graph needs beta_left = 0.
    let bound = SEARCH_BOUND_FACTOR * me.order();
    let candidates: Vec<_> = search_partners(&me, bound)?
        .into_iter()
        .filter(|&(_, bl, _)| bl == 0)
        .collect();
    let witness = match candidates.first() {
        Some(&(partner, bl, br)) => Some(certify_witness((me, bl), (partner, br))?),
        None => None,
    };
    let predicate_applies = matches!(
        me,
        FamilyDescriptor::I { .. } | FamilyDescriptor::II { .. }
    );
    if predicate_applies && predicate.is_some() != witness.is_some() {
        return Err(DsError::Inconsistent {
            descriptor: me,
            predicate,
            witness_found: witness.is_some(),
        });
    }
    Ok(DsVerdict {
        descriptor: me,
        is_ds: witness.is_none(),
        exception_case: predicate.filter(|_| witness.is_some()),
        witness,
    })
}

/// DS summary for the generalized friendship graph with t - r = 3,
/// i.e. kind I with a = r.
pub fn friendship_ds_summary(r: usize, k: usize) -> Result<DsVerdict, DsError> {
    let desc = FamilyDescriptor::Friendship { t: r + 3, r, k };
    desc.validate()?;
    is_determined_by_spectrum(&desc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilyDescriptor as FD;

    #[test]
    fn mates_of_i_3_4() {
        let mates = cospectral_mates(&FD::I { a: 3, k: 4 }).unwrap();
        let found = mates
            .iter()
            .find(|w| w.right.0 == FD::II { k: 2, l: 2 })
            .expect("II(2,2) partner");
        assert_eq!(found.left.1, 0);
        assert_eq!(found.right.1, 1);
        assert_eq!(found.case, TheoremCase::IThreeWithIi);
    }

    #[test]
    fn mates_of_i_5_5() {
        let mates = cospectral_mates(&FD::I { a: 5, k: 5 }).unwrap();
        let found = mates
            .iter()
            .find(|w| w.right.0 == FD::IV { k: 3 })
            .expect("IV(3) partner");
        assert_eq!((found.left.1, found.right.1), (0, 1));
        assert_eq!(found.case, TheoremCase::IFiveWithIv);
        // orders 20 = 17 + 3
        assert_eq!(found.left_graph().n(), 20);
        assert_eq!(found.right_graph().n(), 20);
    }

    #[test]
    fn ds_examples() {
        // 7 prime: DS
        let v = is_determined_by_spectrum(&FD::I { a: 3, k: 7 }).unwrap();
        assert!(v.is_ds);
        assert!(v.witness.is_none());
        // kl = 8 has no divisor strictly between 2 and 4: DS
        let v = is_determined_by_spectrum(&FD::II { k: 4, l: 2 }).unwrap();
        assert!(v.is_ds);
        // kl = 12 has 3, 4 strictly between 2 and 6: not DS, witness II(4,3)
        let v = is_determined_by_spectrum(&FD::II { k: 6, l: 2 }).unwrap();
        assert!(!v.is_ds);
        assert_eq!(v.exception_case, Some(ExceptionCase::IiMiddleDivisor));
        let w = v.witness.unwrap();
        assert_eq!(w.right.0, FD::II { k: 4, l: 3 });
        assert_eq!((w.left.1, w.right.1), (0, 1));
        // composite k = 6: not DS, witness II(3,2) plus two triangles
        // (orders 21 = 15 + 6, multiplicity gap p - p' = 5 - 3 = 2)
        let v = is_determined_by_spectrum(&FD::I { a: 3, k: 6 }).unwrap();
        assert!(!v.is_ds);
        let w = v.witness.unwrap();
        assert_eq!(w.right.0, FD::II { k: 3, l: 2 });
        assert_eq!((w.left.1, w.right.1), (0, 2));
    }

    #[test]
    fn partner_side_descriptors_are_ds() {
        // the smaller partner cannot shed triangles, so it stays DS
        for desc in [FD::IV { k: 3 }, FD::II { k: 2, l: 2 }] {
            let v = is_determined_by_spectrum(&desc).unwrap();
            assert!(v.is_ds, "{desc} should be DS");
            // yet it does appear in padded witnesses
            let mates = cospectral_mates(&desc).unwrap();
            assert!(
                mates.iter().all(|w| w.left.1 > 0),
                "{desc} mates must pad the left side"
            );
            assert!(!mates.is_empty(), "{desc} has padded mates");
        }
    }

    #[test]
    fn friendship_summaries() {
        // r=1, k=80: only k=81 is excepted
        assert!(friendship_ds_summary(1, 80).unwrap().is_ds);
        // r=5, k=13 = 5 mod 8: witness IV(8)
        let v = friendship_ds_summary(5, 13).unwrap();
        assert!(!v.is_ds);
        assert_eq!(v.exception_case, Some(ExceptionCase::IFiveMod8));
        assert_eq!(v.witness.unwrap().right.0, FD::IV { k: 8 });
        // r=2: no bullet applies
        for k in [2usize, 6, 9, 16] {
            assert!(friendship_ds_summary(2, k).unwrap().is_ds);
        }
        assert!(friendship_ds_summary(0, 3).is_err());
    }

    #[test]
    fn witness_json_shape() {
        let v = is_determined_by_spectrum(&FD::I { a: 3, k: 4 }).unwrap();
        let j = v.to_json();
        assert_eq!(j["is_ds"], serde_json::json!(false));
        assert!(j["witness"]["left"]["graph6"].is_string());
        assert!(j["witness"]["shared_char_poly"].is_array());
    }
}
