//! Classical multiple zeta values: truncated evaluation with error bounds,
//! admissible-piece decomposition, the dual index, and Ohno sums.
//!
//! `zeta(k_1,...,k_r)` is the sum of `1/(m_1^{k_1} ... m_r^{k_r})` over
//! strictly increasing tuples `0 < m_1 < ... < m_r`. Evaluation runs a
//! dynamic program over the outermost variable up to a bound `M` and adds a
//! tail correction: partial sums of the inner levels are extrapolated as a
//! polynomial in `ln(m/M)` (exact for the leading behavior of weight-1
//! levels) and the remaining one-dimensional tails are summed by
//! Euler-Maclaurin.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cache::MzvCache;
use crate::combin::weak_compositions;
use crate::error::{Error, Result};

/// A multiple zeta index: positive entries, last entry at least 2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct AdmissibleIndex {
    parts: Vec<u32>,
}

impl AdmissibleIndex {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::NotAdmissible("empty index".into()));
        }
        if parts.iter().any(|&k| k == 0) {
            return Err(Error::NotAdmissible(format!("zero entry in {:?}", parts)));
        }
        if *parts.last().unwrap() < 2 {
            return Err(Error::NotAdmissible(format!(
                "last entry of {:?} must be at least 2",
                parts
            )));
        }
        Ok(AdmissibleIndex { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&k| k as u64).sum()
    }

    /// All admissible indices of the given weight, lexicographic.
    pub fn all_of_weight(weight: u32) -> Vec<AdmissibleIndex> {
        let mut out = Vec::new();
        if weight < 2 {
            return out;
        }
        let mut cur: Vec<u32> = Vec::new();
        fn rec(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<AdmissibleIndex>) {
            if rem >= 2 {
                cur.push(rem);
                out.push(AdmissibleIndex { parts: cur.clone() });
                cur.pop();
            }
            for head in 1..=rem.saturating_sub(2) {
                cur.push(head);
                rec(rem - head, cur, out);
                cur.pop();
            }
        }
        rec(weight, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for AdmissibleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", k)?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for AdmissibleIndex {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        AdmissibleIndex::new(parts)
    }
}

impl From<AdmissibleIndex> for Vec<u32> {
    fn from(k: AdmissibleIndex) -> Vec<u32> {
        k.parts
    }
}

/// The index fragment `(1,...,1, b+1)` with `a-1` leading ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AdmissiblePiece {
    pub a: u32,
    pub b: u32,
}

impl AdmissiblePiece {
    pub fn new(a: u32, b: u32) -> Self {
        assert!(a >= 1 && b >= 1, "piece arguments must be positive");
        AdmissiblePiece { a, b }
    }

    /// Swap the arguments.
    pub fn dual(&self) -> AdmissiblePiece {
        AdmissiblePiece { a: self.b, b: self.a }
    }

    /// Number of entries in the expansion.
    pub fn len(&self) -> usize {
        self.a as usize
    }

    pub fn weight(&self) -> u64 {
        self.a as u64 + self.b as u64
    }

    pub fn expand(&self) -> Vec<u32> {
        let mut v = vec![1u32; self.a as usize - 1];
        v.push(self.b + 1);
        v
    }
}

impl fmt::Display for AdmissiblePiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.a, self.b)
    }
}

/// The unique decomposition of an admissible index into admissible pieces:
/// each maximal run of ones together with the following entry `b+1 >= 2`
/// becomes `A(run+1, b)`.
pub fn decompose_pieces(k: &AdmissibleIndex) -> Vec<AdmissiblePiece> {
    let mut out = Vec::new();
    let mut ones = 0u32;
    for &entry in k.parts() {
        if entry == 1 {
            ones += 1;
        } else {
            out.push(AdmissiblePiece::new(ones + 1, entry - 1));
            ones = 0;
        }
    }
    debug_assert_eq!(ones, 0, "admissible index cannot end in 1");
    out
}

/// Concatenate piece expansions back into an index.
pub fn expand_pieces(pieces: &[AdmissiblePiece]) -> Result<AdmissibleIndex> {
    let parts: Vec<u32> = pieces.iter().flat_map(|p| p.expand()).collect();
    AdmissibleIndex::new(parts)
}

/// Dual index: reverse the piece list and swap each piece's arguments.
pub fn dual_index(k: &AdmissibleIndex) -> AdmissibleIndex {
    let pieces: Vec<AdmissiblePiece> =
        decompose_pieces(k).into_iter().rev().map(|p| p.dual()).collect();
    expand_pieces(&pieces).expect("dual of admissible index is admissible")
}

/// How a numeric value was obtained, with its truncation parameters.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EvalMeta {
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
}

impl EvalMeta {
    pub fn terms(method: &str, terms: u64) -> Self {
        EvalMeta { method: method.into(), terms: Some(terms), bound: None }
    }

    pub fn bound(method: &str, bound: u64) -> Self {
        EvalMeta { method: method.into(), terms: None, bound: Some(bound) }
    }
}

/// A numeric approximation with an absolute-error bound and provenance.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct MzvResult {
    pub value: f64,
    pub err: f64,
    pub meta: EvalMeta,
}

impl MzvResult {
    pub fn exact(value: f64, method: &str) -> Self {
        MzvResult {
            value,
            err: 0.0,
            meta: EvalMeta { method: method.into(), terms: None, bound: None },
        }
    }
}

/// Compensated accumulator; keeps long positive sums near machine accuracy.
#[derive(Clone, Copy, Default)]
pub(crate) struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

/// Euler-Maclaurin tail of `sum_{m>M} m^{-s}` for integer `s >= 2`.
pub(crate) fn power_tail(s: u32, m: u64) -> f64 {
    let s = s as f64;
    let x = m as f64;
    x.powf(1.0 - s) / (s - 1.0) - 0.5 * x.powf(-s) + s / 12.0 * x.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * x.powf(-s - 3.0)
}

/// Integral approximation of `sum_{m>M} ln^t(m/M) m^{-s}`, `t >= 1`.
fn log_power_tail(t: u32, s: u32, m: u64) -> f64 {
    let s = s as f64;
    let x = m as f64;
    let mut fact = 1.0f64;
    for i in 2..=t {
        fact *= i as f64;
    }
    fact * x.powf(1.0 - s) / (s - 1.0).powi(t as i32 + 1)
}

struct Anchor {
    /// Partial sums `P_j` at the anchor point, `j = 0..=r`.
    levels: Vec<f64>,
    point: u64,
}

impl Anchor {
    /// Corrected value: `P_r` plus the extrapolated tail of the outer sum.
    fn corrected(&self, ks: &[u32]) -> f64 {
        let r = ks.len();
        // coefficients of ln^t(m/anchor) in the extrapolation of P_j
        let mut coeffs = vec![1.0f64];
        for j in 1..r {
            if ks[j - 1] == 1 {
                let mut next = Vec::with_capacity(coeffs.len() + 1);
                next.push(self.levels[j]);
                for (t, &c) in coeffs.iter().enumerate() {
                    next.push(c / (t as f64 + 1.0));
                }
                coeffs = next;
            } else {
                coeffs = vec![self.levels[j]];
            }
        }
        let s = ks[r - 1];
        let mut tail = coeffs[0] * power_tail(s, self.point);
        for (t, &c) in coeffs.iter().enumerate().skip(1) {
            tail += c * log_power_tail(t as u32, s, self.point);
        }
        self.levels[r] + tail
    }
}

/// Evaluate a classical multiple zeta value by truncated dynamic
/// programming with tail correction. `terms` bounds the outermost
/// summation variable.
pub fn zeta_mzv(k: &AdmissibleIndex, terms: u64) -> MzvResult {
    let ks = k.parts();
    let r = ks.len();
    let m = terms.max(16).max(2 * r as u64) as usize;
    let half = m / 2;

    let mut full = Anchor { levels: vec![1.0; r + 1], point: m as u64 };
    let mut half_anchor = Anchor { levels: vec![1.0; r + 1], point: half as u64 };

    // prev[n] = P_{j-1}(n); P_0 is identically 1
    let mut prev = vec![1.0f64; m + 1];
    let mut cur = vec![0.0f64; m + 1];
    for (j, &kj) in ks.iter().enumerate() {
        let mut acc = Kahan::default();
        cur[0] = 0.0;
        for n in 1..=m {
            let w = (n as f64).powi(-(kj as i32));
            acc.add(prev[n - 1] * w);
            cur[n] = acc.value();
        }
        full.levels[j + 1] = cur[m];
        half_anchor.levels[j + 1] = cur[half];
        std::mem::swap(&mut prev, &mut cur);
    }

    let value = full.corrected(ks);
    let value_half = half_anchor.corrected(ks);
    let err = 2.0 * (value - value_half).abs() + 1e-14 * (1.0 + value.abs());
    MzvResult { value, err, meta: EvalMeta::terms("dp_tail", terms) }
}

/// The Ohno sum `sum over weak compositions e of ell` of
/// `zeta(k_1+e_1, ..., k_r+e_r)`.
pub fn ohno_sum_classical(
    k: &AdmissibleIndex,
    ell: u32,
    terms: u64,
    cache: &MzvCache,
) -> MzvResult {
    let mut value = Kahan::default();
    let mut err = 0.0f64;
    for eps in weak_compositions(ell, k.depth()) {
        let shifted: Vec<u32> = k.parts().iter().zip(&eps).map(|(&a, &e)| a + e).collect();
        let shifted = AdmissibleIndex::new(shifted).expect("shift keeps admissibility");
        let r = cache.get_or_compute(&shifted, terms);
        value.add(r.value);
        err += r.err;
    }
    MzvResult { value: value.value(), err, meta: EvalMeta::terms("ohno_classical", terms) }
}
