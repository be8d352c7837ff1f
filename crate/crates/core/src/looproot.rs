//! Root combinatorics for the loop-algebra side: the `β_{k,l}` roots, the
//! type-A support test, cone membership and the commutation checker.
//!
//! Pair labels `(k, l)` are 1-based and use the classical index `n`, which
//! equals the rank for B and C and the rank minus one for D.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Family, LieSpec};
use crate::partition::RootLatticeElement;

pub fn positive_roots(spec: &LieSpec) -> Result<Vec<RootLatticeElement>> {
    spec.positive_roots()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaRoot {
    pub k: usize,
    pub l: usize,
    pub root: Vec<i64>,
    pub weight: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct BetaSet {
    spec: LieSpec,
    labels: Vec<(usize, usize)>,
    roots: Vec<RootLatticeElement>,
}

impl BetaSet {
    /// Builds a set from explicit labelled roots, in the given order.
    pub fn from_roots(spec: &LieSpec, entries: Vec<((usize, usize), RootLatticeElement)>) -> Result<Self> {
        let all: BTreeSet<RootLatticeElement> = spec.positive_roots()?.into_iter().collect();
        for (_, r) in &entries {
            if r.rank() != spec.rank() {
                return Err(Error::RankMismatch { expected: spec.rank(), found: r.rank() });
            }
            if !all.contains(r) {
                return Err(Error::NotInPositiveRootLattice);
            }
        }
        let (labels, roots) = entries.into_iter().unzip();
        Ok(BetaSet { spec: spec.clone(), labels, roots })
    }

    pub fn spec(&self) -> &LieSpec {
        &self.spec
    }

    pub fn roots(&self) -> &[RootLatticeElement] {
        &self.roots
    }

    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The classical index `n` that labels are written against.
    pub fn classical_n(&self) -> usize {
        classical_n(&self.spec)
    }

    pub fn position(&self, k: usize, l: usize) -> Option<usize> {
        self.labels.iter().position(|&x| x == (k, l))
    }

    pub fn entries(&self) -> Vec<BetaRoot> {
        self.labels
            .iter()
            .zip(&self.roots)
            .map(|(&(k, l), r)| BetaRoot {
                k,
                l,
                root: r.coords().to_vec(),
                weight: self.spec.root_to_weight(r),
            })
            .collect()
    }
}

fn classical_n(spec: &LieSpec) -> usize {
    match spec.family() {
        Family::D => spec.rank() - 1,
        _ => spec.rank(),
    }
}

/// `α_k + ⋯ + α_{l−1} + 2α_l + ⋯` with the family-specific tail.
fn beta_kl(spec: &LieSpec, k: usize, l: usize) -> RootLatticeElement {
    let rank = spec.rank();
    let n = classical_n(spec);
    let mut v = vec![0i64; rank];
    (k - 1..l - 1).for_each(|j| v[j] = 1);
    match spec.family() {
        Family::B => (l - 1..n).for_each(|j| v[j] = 2),
        Family::C => {
            (l - 1..n - 1).for_each(|j| v[j] = 2);
            v[n - 1] = 1;
        }
        Family::D => {
            (l - 1..n - 1).for_each(|j| v[j] = 2);
            v[n - 1] = 1;
            v[n] = 1;
        }
        Family::A => unreachable!(),
    }
    RootLatticeElement::new(v)
}

/// The `β` roots in lexicographic label order. For C the long roots
/// `2α_l + ⋯ + 2α_{n−1} + α_n` (`1 ≤ l ≤ n−1`) are included with label
/// `(l, l)`.
pub fn beta_roots(spec: &LieSpec) -> Result<BetaSet> {
    if spec.family() == Family::A {
        return Err(Error::UnsupportedFamily("β roots are defined for B, C and D".into()));
    }
    let n = classical_n(spec);
    let diagonal = spec.family() == Family::C;
    let mut entries = Vec::new();
    for k in 1..n {
        let first = if diagonal { k } else { k + 1 };
        for l in first..n {
            entries.push(((k, l), beta_kl(spec, k, l)));
        }
    }
    BetaSet::from_roots(spec, entries)
}

/// True when the minimal connected sub-diagram containing `supp η` is a
/// simply-laced path.
pub fn type_a_support(eta: &RootLatticeElement, spec: &LieSpec) -> Result<bool> {
    if eta.rank() != spec.rank() {
        return Err(Error::RankMismatch { expected: spec.rank(), found: eta.rank() });
    }
    if eta.is_zero() {
        return Err(Error::ZeroRoot);
    }
    if !eta.is_nonnegative() {
        return Err(Error::NotInPositiveRootLattice);
    }
    let n = spec.rank();
    let supp: Vec<bool> = eta.coords().iter().map(|&x| x != 0).collect();
    // prune leaves outside the support until none remain
    let mut keep = vec![true; n];
    loop {
        let leaf = (0..n).find(|&i| keep[i] && !supp[i] && spec.neighbors(i).filter(|&j| keep[j]).count() <= 1);
        match leaf {
            Some(i) => keep[i] = false,
            None => break,
        }
    }
    for i in (0..n).filter(|&i| keep[i]) {
        let nbrs: Vec<usize> = spec.neighbors(i).filter(|&j| keep[j]).collect();
        if nbrs.len() > 2 || nbrs.iter().any(|&j| spec.c(i, j) * spec.c(j, i) != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `s ∈ Z_{≥0}^N` with `diff = Σ s_j β_j`, in lexicographic order.
pub fn cone_membership(diff: &RootLatticeElement, betas: &BetaSet) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if diff.rank() != betas.spec.rank() || !diff.is_nonnegative() {
        return out;
    }
    let mut rem = diff.coords().to_vec();
    let mut s = vec![0u64; betas.len()];
    cone_search(betas.roots(), 0, &mut rem, &mut s, &mut out);
    out
}

fn cone_search(roots: &[RootLatticeElement], j: usize, rem: &mut [i64], s: &mut [u64], out: &mut Vec<Vec<u64>>) {
    if j == roots.len() {
        if rem.iter().all(|&x| x == 0) {
            out.push(s.to_vec());
        }
        return;
    }
    let b = roots[j].coords();
    let cap = b
        .iter()
        .zip(rem.iter())
        .filter(|(&bi, _)| bi > 0)
        .map(|(&bi, &ri)| ri / bi)
        .min()
        .unwrap_or(0);
    for t in 0..=cap {
        if t > 0 {
            rem.iter_mut().zip(b).for_each(|(r, &bi)| *r -= bi);
        }
        s[j] = t as u64;
        cone_search(roots, j + 1, rem, s, out);
    }
    rem.iter_mut().zip(b).for_each(|(r, &bi)| *r += cap * bi);
    s[j] = 0;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub r: usize,
    pub s: Option<usize>,
    pub node: Option<usize>,
    pub root: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommuteReport {
    pub spec: String,
    pub classical_n: usize,
    pub beta_count: usize,
    pub betas: Vec<BetaRoot>,
    pub violations: Vec<Violation>,
}

impl CommuteReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn commute_check(spec: &LieSpec) -> Result<CommuteReport> {
    commute_check_set(&beta_roots(spec)?)
}

/// Runs the three commutation rules against an arbitrary ordered set.
/// Indices in the report are 1-based.
pub fn commute_check_set(betas: &BetaSet) -> Result<CommuteReport> {
    let spec = &betas.spec;
    let rank = spec.rank();
    let n = betas.classical_n();
    let positive: BTreeSet<RootLatticeElement> = spec.positive_roots()?.into_iter().collect();
    let roots = betas.roots();
    let simple: Vec<RootLatticeElement> = (0..rank).map(|i| RootLatticeElement::simple(rank, i)).collect();
    let mut violations = Vec::new();

    for (r, br) in roots.iter().enumerate() {
        for (s, bs) in roots.iter().enumerate() {
            let sum = br.add(bs);
            if positive.contains(&sum) {
                violations.push(Violation { rule: "i", r: r + 1, s: Some(s + 1), node: None, root: sum.coords().to_vec() });
            }
            for (i, a) in simple.iter().enumerate() {
                let x = sum.sub(a);
                if positive.contains(&x) {
                    violations.push(Violation { rule: "ii", r: r + 1, s: Some(s + 1), node: Some(i + 1), root: x.coords().to_vec() });
                }
            }
        }
    }
    for (r, br) in roots.iter().enumerate() {
        for (i, a) in simple.iter().enumerate() {
            let x = br.sub(a);
            if !positive.contains(&x) {
                continue;
            }
            if roots[r..].contains(&x) {
                continue;
            }
            if betas.labels[r].1 == n - 1 && i + 1 == n - 1 {
                continue;
            }
            violations.push(Violation { rule: "iii", r: r + 1, s: None, node: Some(i + 1), root: x.coords().to_vec() });
        }
    }
    Ok(CommuteReport {
        spec: spec.to_string(),
        classical_n: n,
        beta_count: roots.len(),
        betas: betas.entries(),
        violations,
    })
}
