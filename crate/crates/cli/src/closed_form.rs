//! Closed-form descriptions of a few `W` families, used as independent
//! oracles against the domino-sum computation.

use std::collections::{BTreeMap, BTreeSet};

use lrw_core::classical::{w_decomp, Group, WDecomposition};
use lrw_core::partition::{partition_from_weight, DominantWeight};
use lrw_core::Partition;

fn weight_partition(coeffs: &[u32]) -> Partition {
    partition_from_weight(&DominantWeight::new(coeffs.to_vec()).expect("nonnegative coefficients"))
}

/// `W_G(m ω_ℓ)`.
///
/// For O: every weight reachable from `m ω_ℓ` by trading one `ω_i` for
/// `ω_{i−2}` (`ω_0 = 0`), each once. For Sp this is the domino-sum itself;
/// the matching picture trades `2ω_j` for `2ω_{j−1}`.
pub fn closed_form_rectangle(m: u32, ell: usize, family: Group) -> WDecomposition {
    let top = Partition::rectangle(ell, m);
    if family == Group::Sp {
        return w_decomp(&top, Group::Sp);
    }
    let mut start = vec![0u32; ell.max(1)];
    if ell > 0 {
        start[ell - 1] = m;
    }
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(w) = stack.pop() {
        for i in 2..=w.len() {
            if w[i - 1] == 0 {
                continue;
            }
            let mut next = w.clone();
            next[i - 1] -= 1;
            if i > 2 {
                next[i - 3] += 1;
            }
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let terms = seen.iter().map(|w| (weight_partition(w), 1)).collect();
    WDecomposition::new(Group::O, top, terms)
}

/// `W_O(aω_1 + bω_2 + cω_3)`: one copy of
/// `λ − rω_2 − s(ω_3 − ω_2 + ω_1) − t(ω_3 − ω_1)` for `s ≤ a`, `r ≤ b`,
/// `s + t ≤ c`.
pub fn closed_form_abc(a: u32, b: u32, c: u32) -> WDecomposition {
    let mut terms: BTreeMap<Partition, u64> = BTreeMap::new();
    for s in 0..=a.min(c) {
        for r in 0..=b {
            for t in 0..=c - s {
                let mu = weight_partition(&[a - s + t, b - r + s, c - s - t]);
                *terms.entry(mu).or_default() += 1;
            }
        }
    }
    WDecomposition::new(Group::O, weight_partition(&[a, b, c]), terms)
}

/// `W_O(aω_2 + bω_4)`: `μ = Σ c_i ω_i ⊆ λ` with `c_1 = c_3 ≤ a`, with
/// multiplicity `1 + min(c_2, a − c_3, b − c_3 − c_4, a + b − Σ c_i)`.
pub fn closed_form_24(a: u32, b: u32) -> WDecomposition {
    let top = weight_partition(&[0, a, 0, b]);
    let (a, b) = (a as i64, b as i64);
    let mut terms = BTreeMap::new();
    for c13 in 0..=a {
        for c2 in 0..=a + b {
            for c4 in 0..=b {
                let m = 1 + c2.min(a - c13).min(b - c13 - c4).min(a + b - 2 * c13 - c2 - c4);
                if m <= 0 {
                    continue;
                }
                let mu = weight_partition(&[c13 as u32, c2 as u32, c13 as u32, c4 as u32]);
                if top.contains(&mu) {
                    terms.insert(mu, m as u64);
                }
            }
        }
    }
    WDecomposition::new(Group::O, top, terms)
}
