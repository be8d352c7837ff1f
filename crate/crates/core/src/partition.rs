//! Partitions, dominant weights and the dictionary between them.
//!
//! A partition `⟨λ_1, …, λ_r⟩` and a dominant weight `Σ a_k ω_k` describe the
//! same Young diagram: `a_k = λ_k − λ_{k+1}` is the number of columns of
//! height exactly `k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros, so two partitions are equal iff their
/// parts are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row `⟨k⟩`; empty when `k == 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// Single column `⟨1^k⟩`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Column heights, i.e. the diagram reflected through its main diagonal.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Young-diagram containment `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplicities `m_h` of each part size `h = 1..=λ_1` (index `h − 1`).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut mult = vec![0u32; self.part(0) as usize];
        for &p in &self.0 {
            mult[p as usize - 1] += 1;
        }
        mult
    }

    /// Every part occurs an even number of times (tileable by vertical dominoes).
    pub fn is_vertical_domino(&self) -> bool {
        self.multiplicities().iter().all(|m| m % 2 == 0)
    }

    /// Every part is even (tileable by horizontal dominoes).
    pub fn is_horizontal_domino(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Ordering used by serialized expansions: larger box count first, then
    /// descending lexicographic.
    pub fn graded_desc_cmp(&self, other: &Partition) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "⟩")
    }
}

/// Parses `"4,3,1"`; the empty string (or `"0"`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n as u32, n as u32, &mut cur, &mut out);
    out
}

fn fill_partitions(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions with at most `n` boxes, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions contained in `outer` (including `∅` and `outer` itself),
/// in descending lexicographic order.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        for p in (0..=outer.part(i).min(max)).rev() {
            cur.push(p);
            go(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// A dominant weight `Σ a_k ω_k` at an explicit rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight {
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("weight rank must be positive".into()));
        }
        Ok(DominantWeight { coeffs })
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight { coeffs: vec![0; rank] }
    }

    /// `m ω_node` (1-based node).
    pub fn fundamental_multiple(rank: usize, node: usize, m: u32) -> Result<Self> {
        if node == 0 || node > rank {
            return Err(Error::NodeOutOfRange { node, rank });
        }
        let mut coeffs = vec![0; rank];
        coeffs[node - 1] = m;
        Ok(DominantWeight { coeffs })
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// `λ_k = Σ_{j ≥ k} a_j`.
    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![0u32; self.coeffs.len()];
        let mut acc = 0;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            acc += a;
            parts[k] = acc;
        }
        Partition::new(parts).expect("suffix sums decrease")
    }

    pub fn from_partition(p: &Partition, rank: usize) -> Result<Self> {
        if p.len() > rank {
            return Err(Error::RankTooSmall { parts: p.len(), rank });
        }
        let coeffs = (0..rank).map(|k| p.part(k) - p.part(k + 1)).collect();
        Ok(DominantWeight { coeffs })
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| if a == 1 { format!("ω{}", i + 1) } else { format!("{a}ω{}", i + 1) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Parses `"1,2,1@rank=3"`; without the suffix the rank is the number of
/// coefficients.
impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, rank) = match s.split_once('@') {
            Some((body, suffix)) => {
                let r = suffix
                    .trim()
                    .strip_prefix("rank=")
                    .ok_or_else(|| Error::Parse(format!("expected @rank=N, got {suffix:?}")))?;
                let r = r
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad rank {r:?}: {e}")))?;
                (body, Some(r))
            }
            None => (s, None),
        };
        let mut coeffs = body
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(r) = rank {
            if coeffs.len() > r {
                return Err(Error::RankMismatch { expected: r, found: coeffs.len() });
            }
            coeffs.resize(r, 0);
        }
        DominantWeight::new(coeffs)
    }
}

pub fn partition_from_weight(w: &DominantWeight) -> Partition {
    w.to_partition()
}

pub fn weight_from_partition(p: &Partition, rank: usize) -> Result<DominantWeight> {
    DominantWeight::from_partition(p, rank)
}

/// An element `Σ c_i α_i` of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootLatticeElement {
    coords: Vec<i64>,
}

impl RootLatticeElement {
    pub fn new(coords: Vec<i64>) -> Self {
        RootLatticeElement { coords }
    }

    pub fn zero(rank: usize) -> Self {
        RootLatticeElement { coords: vec![0; rank] }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        RootLatticeElement { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        RootLatticeElement { coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        RootLatticeElement { coords }
    }

    pub fn scale(&self, k: i64) -> Self {
        RootLatticeElement { coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl fmt::Display for RootLatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("α{}", i + 1),
                -1 => format!("-α{}", i + 1),
                c => format!("{c}α{}", i + 1),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+").replace("+-", "-"))
        }
    }
}
