//! The Kirillov–Reshetikhin fermionic formula.
//!
//! For a tensor product of factors `V(m_a ω_{ℓ_a})` the multiplicity of
//! `V(λ)`, with `λ = Σ m_a ω_{ℓ_a} − Σ n_i α_i`, is a sum over
//! configurations `(ν^{(1)}, …, ν^{(r)})`, `ν^{(i)} ⊢ n_i`, of products of
//! binomials `C(P^{(k)}_n + ν^{(k)}_n, ν^{(k)}_n)` in the vacancy numbers
//! `P^{(k)}_n`. A binomial `C(a, b)` with `a < b` is zero, so every vacancy
//! number must be nonnegative, including at part sizes that do not occur.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieSpec;
use crate::partition::{partitions_of, DominantWeight, Partition};

/// One Kirillov–Reshetikhin factor `V(m ω_ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub m: u32,
    /// 1-based Dynkin node.
    pub node: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorList(Vec<Factor>);

impl FactorList {
    pub fn new(spec: &LieSpec, factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyFactors);
        }
        for f in &factors {
            if f.node == 0 || f.node > spec.rank() {
                return Err(Error::NodeOutOfRange { node: f.node, rank: spec.rank() });
            }
            if f.m == 0 {
                return Err(Error::Parse("factor multiple must be positive".into()));
            }
        }
        Ok(FactorList(factors))
    }

    pub fn single(spec: &LieSpec, m: u32, node: usize) -> Result<Self> {
        Self::new(spec, vec![Factor { m, node }])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    /// `Σ m_a ω_{ℓ_a}`.
    pub fn top_weight(&self, rank: usize) -> DominantWeight {
        let mut coeffs = vec![0u32; rank];
        for f in &self.0 {
            coeffs[f.node - 1] += f.m;
        }
        DominantWeight::new(coeffs).expect("positive rank")
    }
}

/// Parses `"1x2,2x1"` as `[(m=1, ℓ=2), (m=2, ℓ=1)]`.
pub fn parse_factors(spec: &LieSpec, s: &str) -> Result<FactorList> {
    let factors = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (m, node) = t
                .trim()
                .split_once(['x', 'X', '@'])
                .ok_or_else(|| Error::Parse(format!("expected MxNODE, got {t:?}")))?;
            let m = m.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad multiple {m:?}: {e}")))?;
            let node = node.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad node {node:?}: {e}")))?;
            Ok(Factor { m, node })
        })
        .collect::<Result<Vec<_>>>()?;
    FactorList::new(spec, factors)
}

/// A tuple of partitions `ν^{(1)}, …, ν^{(r)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    nus: Vec<Partition>,
}

impl Configuration {
    pub fn new(nus: Vec<Partition>) -> Self {
        Configuration { nus }
    }

    pub fn empty(rank: usize) -> Self {
        Configuration { nus: vec![Partition::empty(); rank] }
    }

    pub fn nus(&self) -> &[Partition] {
        &self.nus
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nus.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(n_1, …, n_r)` with `λ = top − Σ n_i α_i`. Fails unless every `n_i` is a
/// nonnegative integer.
pub fn alpha_coords(spec: &LieSpec, factors: &FactorList, lambda: &DominantWeight) -> Result<Vec<u64>> {
    if lambda.rank() != spec.rank() {
        return Err(Error::RankMismatch { expected: spec.rank(), found: lambda.rank() });
    }
    let top = factors.top_weight(spec.rank());
    let diff: Vec<i64> = top
        .coeffs()
        .iter()
        .zip(lambda.coeffs())
        .map(|(&t, &l)| t as i64 - l as i64)
        .collect();
    let root = spec.weight_to_root_integral(&diff).ok_or(Error::NotInPositiveRootLattice)?;
    root.coords()
        .iter()
        .map(|&c| u64::try_from(c).map_err(|_| Error::NotInPositiveRootLattice))
        .collect()
}

/// Cartan entry as it enters the vacancy numbers. With this orientation the
/// large-`n` limit of `P^{(k)}_n` is the `ω_k` coefficient of `λ`.
fn vc(spec: &LieSpec, k: usize, j: usize) -> i64 {
    spec.c(j, k)
}

/// Configuration stored as part multiplicities: `mult[k][h-1] = ν^{(k)}_h`.
type Multiplicities = [Vec<u32>];

fn vacancy_raw(spec: &LieSpec, factors: &FactorList, mult: &Multiplicities, k: usize, n: u64) -> i64 {
    let n = n as i64;
    let mut p: i64 = factors
        .factors()
        .iter()
        .filter(|f| f.node - 1 == k)
        .map(|f| n.min(f.m as i64))
        .sum();
    for (h, &c) in mult[k].iter().enumerate() {
        p -= 2 * n.min(h as i64 + 1) * c as i64;
    }
    for j in spec.neighbors(k) {
        let (ckj, cjk) = (-vc(spec, k, j), -vc(spec, j, k));
        for (h, &c) in mult[j].iter().enumerate() {
            p += (ckj * n).min(cjk * (h as i64 + 1)) * c as i64;
        }
    }
    p
}

fn to_multiplicities(config: &Configuration) -> Vec<Vec<u32>> {
    config.nus.iter().map(|p| p.multiplicities()).collect()
}

/// `P^{(k)}_n(ν)`; `k` is a 1-based node.
pub fn vacancy(spec: &LieSpec, factors: &FactorList, config: &Configuration, k: usize, n: u64) -> Result<i64> {
    if k == 0 || k > spec.rank() {
        return Err(Error::NodeOutOfRange { node: k, rank: spec.rank() });
    }
    if config.nus.len() != spec.rank() {
        return Err(Error::RankMismatch { expected: spec.rank(), found: config.nus.len() });
    }
    Ok(vacancy_raw(spec, factors, &to_multiplicities(config), k - 1, n))
}

/// `C(a, b)`, zero when `a < b`.
fn binomial(a: i64, b: i64) -> u128 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1))
}

struct Evaluator<'a> {
    spec: &'a LieSpec,
    factors: &'a FactorList,
    /// Past this part size every vacancy number has reached its limit.
    bound: u64,
    choices: Vec<Vec<Vec<u32>>>,
    /// Nodes whose vacancy numbers are fixed once node `k` is assigned.
    check_at: Vec<Vec<usize>>,
}

impl Evaluator<'_> {
    fn node_ok(&self, mult: &Multiplicities, k: usize) -> bool {
        (1..=self.bound).all(|n| vacancy_raw(self.spec, self.factors, mult, k, n) >= 0)
    }

    fn weight(&self, mult: &Multiplicities) -> u128 {
        let mut prod = 1u128;
        for k in 0..self.spec.rank() {
            for (h, &c) in mult[k].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let p = vacancy_raw(self.spec, self.factors, mult, k, h as u64 + 1);
                prod *= binomial(p + c as i64, c as i64);
                if prod == 0 {
                    return 0;
                }
            }
        }
        prod
    }

    fn sum(&self, k: usize, mult: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&Multiplicities, u128)) {
        if k == self.spec.rank() {
            let w = self.weight(mult);
            if w > 0 {
                visit(mult, w);
            }
            return;
        }
        for choice in &self.choices[k] {
            mult[k] = choice.clone();
            if self.check_at[k].iter().all(|&j| self.node_ok(mult, j)) {
                self.sum(k + 1, mult, visit);
            }
        }
        mult[k].clear();
    }
}

fn evaluate(
    spec: &LieSpec,
    factors: &FactorList,
    n: &[u64],
    visit: &mut dyn FnMut(&Multiplicities, u128),
) {
    let r = spec.rank();
    let max_n = n.iter().copied().max().unwrap_or(0);
    let max_m = factors.factors().iter().map(|f| f.m as u64).max().unwrap_or(0);
    let bound = (2 * max_n).max(max_m).max(1);
    let choices = n
        .iter()
        .map(|&ni| partitions_of(ni as usize).iter().map(|p| p.multiplicities()).collect())
        .collect();
    let mut check_at = vec![Vec::new(); r];
    for j in 0..r {
        let last = spec.neighbors(j).chain(std::iter::once(j)).max().expect("nonempty");
        check_at[last].push(j);
    }
    let eval = Evaluator { spec, factors, bound, choices, check_at };
    eval.sum(0, &mut vec![Vec::new(); r], visit);
}

/// `n_λ`; zero when `λ` is not below the top weight in the root lattice.
pub fn fermionic_multiplicity(spec: &LieSpec, factors: &FactorList, lambda: &DominantWeight) -> Result<u128> {
    let n = match alpha_coords(spec, factors, lambda) {
        Ok(n) => n,
        Err(Error::NotInPositiveRootLattice) => return Ok(0),
        Err(e) => return Err(e),
    };
    let mut total = 0u128;
    evaluate(spec, factors, &n, &mut |_, w| total += w);
    Ok(total)
}

/// Configurations contributing to `n_λ`, with their binomial products.
pub fn contributing_configurations(
    spec: &LieSpec,
    factors: &FactorList,
    lambda: &DominantWeight,
) -> Result<Vec<(Configuration, u128)>> {
    let n = alpha_coords(spec, factors, lambda)?;
    let mut out = Vec::new();
    evaluate(spec, factors, &n, &mut |mult, w| {
        let nus = mult
            .iter()
            .map(|m| {
                let mut parts = Vec::new();
                for (h, &c) in m.iter().enumerate().rev() {
                    parts.extend(std::iter::repeat_n(h as u32 + 1, c as usize));
                }
                Partition::new(parts).expect("descending")
            })
            .collect();
        out.push((Configuration::new(nus), w));
    });
    Ok(out)
}

/// All dominant `λ` with `n_λ > 0`, found by breadth-first descent from the
/// top weight through simple roots.
pub fn fermionic_decomp(spec: &LieSpec, factors: &FactorList) -> BTreeMap<DominantWeight, u128> {
    let r = spec.rank();
    let top = factors.top_weight(r);
    let top_i: Vec<i64> = top.coeffs().iter().map(|&c| c as i64).collect();
    // Dominant weights have nonnegative simple-root coordinates, which caps n.
    let caps: Vec<u64> = spec
        .weight_to_root(&top_i)
        .into_iter()
        .map(|q| q.floor().to_integer().max(0) as u64)
        .collect();
    let mut out = BTreeMap::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::from([vec![0u64; r]]);
    seen.insert(vec![0; r]);
    while let Some(n) = queue.pop_front() {
        let lambda: Vec<i64> = (0..r)
            .map(|i| top_i[i] - (0..r).map(|j| spec.c(i, j) * n[j] as i64).sum::<i64>())
            .collect();
        if lambda.iter().all(|&x| x >= 0) {
            let mut total = 0u128;
            evaluate(spec, factors, &n, &mut |_, w| total += w);
            if total > 0 {
                let w = DominantWeight::new(lambda.iter().map(|&x| x as u32).collect()).expect("rank > 0");
                out.insert(w, total);
            }
        }
        for i in 0..r {
            if n[i] < caps[i] {
                let mut next = n.clone();
                next[i] += 1;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Family;

    fn spec(f: Family, n: usize) -> LieSpec {
        LieSpec::new(f, n).unwrap()
    }

    fn w(c: &[u32]) -> DominantWeight {
        DominantWeight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn alpha_coords_examples() {
        let a2 = spec(Family::A, 2);
        let f = FactorList::new(&a2, vec![Factor { m: 1, node: 1 }, Factor { m: 1, node: 2 }]).unwrap();
        assert_eq!(alpha_coords(&a2, &f, &w(&[1, 1])).unwrap(), vec![0, 0]);
        assert_eq!(alpha_coords(&a2, &f, &w(&[0, 0])).unwrap(), vec![1, 1]);
        let b3 = spec(Family::B, 3);
        let f = FactorList::single(&b3, 1, 2).unwrap();
        assert_eq!(alpha_coords(&b3, &f, &w(&[0, 1, 0])).unwrap(), vec![0, 0, 0]);
        assert_eq!(alpha_coords(&b3, &f, &w(&[1, 0, 0])).unwrap(), vec![0, 1, 1]);
        assert_eq!(alpha_coords(&b3, &f, &w(&[2, 0, 0])), Err(Error::NotInPositiveRootLattice));
        assert!(alpha_coords(&b3, &f, &w(&[0, 1])).is_err());
    }

    #[test]
    fn vacancy_examples() {
        let b3 = spec(Family::B, 3);
        let f = FactorList::single(&b3, 3, 2).unwrap();
        let empty = Configuration::empty(3);
        for n in 1..=3 {
            assert_eq!(vacancy(&b3, &f, &empty, 2, n).unwrap(), n as i64);
        }
        assert_eq!(vacancy(&b3, &f, &empty, 1, 2).unwrap(), 0);
        // ν^{(2)} = ⟨1⟩, factor (m, 2), n = 1: min(1, m) − 2 and no neighbours populated.
        let c = Configuration::new(vec![Partition::empty(), Partition::row(1), Partition::empty()]);
        assert_eq!(vacancy(&b3, &f, &c, 2, 1).unwrap(), -1);
        // Node 1 sees ν^{(2)} = ⟨1⟩ through min(1·n, 1·1).
        assert_eq!(vacancy(&b3, &f, &c, 1, 1).unwrap(), 1);
        assert!(vacancy(&b3, &f, &c, 4, 1).is_err());
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn multiplicity_examples() {
        let b3 = spec(Family::B, 3);
        let f = FactorList::single(&b3, 1, 2).unwrap();
        assert_eq!(fermionic_multiplicity(&b3, &f, &w(&[0, 1, 0])).unwrap(), 1);
        assert_eq!(fermionic_multiplicity(&b3, &f, &w(&[0, 0, 0])).unwrap(), 1);
        let a2 = spec(Family::A, 2);
        let f = FactorList::new(&a2, vec![Factor { m: 1, node: 1 }, Factor { m: 1, node: 2 }]).unwrap();
        assert_eq!(fermionic_multiplicity(&a2, &f, &w(&[0, 0])).unwrap(), 1);
        assert_eq!(fermionic_multiplicity(&a2, &f, &w(&[1, 1])).unwrap(), 1);
    }

    #[test]
    fn decomp_examples() {
        let b3 = spec(Family::B, 3);
        let got = fermionic_decomp(&b3, &FactorList::single(&b3, 1, 2).unwrap());
        assert_eq!(got, BTreeMap::from([(w(&[0, 1, 0]), 1), (w(&[0, 0, 0]), 1)]));
        let c3 = spec(Family::C, 3);
        let got = fermionic_decomp(&c3, &FactorList::single(&c3, 2, 1).unwrap());
        assert_eq!(got, BTreeMap::from([(w(&[2, 0, 0]), 1), (w(&[0, 0, 0]), 1)]));
        let got = fermionic_decomp(&b3, &FactorList::single(&b3, 1, 1).unwrap());
        assert_eq!(got, BTreeMap::from([(w(&[1, 0, 0]), 1)]));
    }

    #[test]
    fn type_a_tensor_square() {
        // V(ω_1)^{⊗2} = V(2ω_1) ⊕ V(ω_2) for sl_4.
        let a3 = spec(Family::A, 3);
        let f = FactorList::new(&a3, vec![Factor { m: 1, node: 1 }, Factor { m: 1, node: 1 }]).unwrap();
        let got = fermionic_decomp(&a3, &f);
        assert_eq!(got, BTreeMap::from([(w(&[2, 0, 0]), 1), (w(&[0, 1, 0]), 1)]));
    }

    #[test]
    fn factor_parsing() {
        let b3 = spec(Family::B, 3);
        let f = parse_factors(&b3, "1x2, 2x1").unwrap();
        assert_eq!(f.factors(), &[Factor { m: 1, node: 2 }, Factor { m: 2, node: 1 }]);
        assert!(parse_factors(&b3, "1x4").is_err());
        assert!(parse_factors(&b3, "").is_err());
    }
}
