//! The ring of symmetric functions in the Schur basis.
//!
//! Expansions are sparse maps from partitions to nonzero integers. The same
//! value type carries Schur, complete-homogeneous monomial, universal
//! symplectic and universal orthogonal expansions, distinguished by
//! [`Basis`].

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableaux::{enumerate_lr_tableaux, lr_coefficient, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `s_λ`.
    Schur,
    /// Products `h_{k_1} h_{k_2} ⋯`, keyed by the sorted index multiset.
    HMonomial,
    /// Universal symplectic characters `sp_λ`.
    Sp,
    /// Universal orthogonal characters `o_λ`.
    O,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::HMonomial => "h",
            Basis::Sp => "sp",
            Basis::O => "o",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    terms: BTreeMap<Partition, i64>,
}

pub type SchurExpansion = Expansion;
pub type CharacterExpansion = Expansion;

impl Expansion {
    pub fn zero(basis: Basis) -> Self {
        Expansion { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, key: Partition) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(key, 1);
        e
    }

    /// `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut e = Self::zero(basis);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, key: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    /// `self += k · other`; bases must agree.
    pub fn add_scaled(&mut self, other: &Expansion, k: i64) -> Result<()> {
        self.expect_basis(other.basis)?;
        for (key, &c) in &other.terms {
            self.add_term(key.clone(), c * k);
        }
        Ok(())
    }

    pub fn coeff(&self, key: &Partition) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Same terms, different basis tag.
    pub fn relabel(&self, basis: Basis) -> Expansion {
        Expansion { basis, terms: self.terms.clone() }
    }

    /// Largest key by box count, ties broken by lexicographic order.
    pub fn leading_key(&self) -> Option<&Partition> {
        self.terms.keys().min_by(|a, b| a.graded_desc_cmp(b))
    }

    pub(crate) fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch { expected: basis, found: self.basis })
        }
    }

    /// Terms in descending lexicographic order of their keys.
    pub fn sorted_terms(&self) -> Vec<(&Partition, i64)> {
        self.terms.iter().rev().map(|(k, &c)| (k, c)).collect()
    }
}

#[derive(Serialize)]
struct TermRef<'a> {
    partition: &'a Partition,
    coeff: i64,
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (partition, coeff) in self.sorted_terms() {
            seq.serialize_element(&TermRef { partition, coeff })?;
        }
        seq.end()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (k, c)) in self.sorted_terms().into_iter().enumerate() {
            let sign = match (i, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.unsigned_abs();
            let body = if self.basis == Basis::HMonomial {
                if k.is_empty() {
                    "1".to_string()
                } else {
                    k.parts().iter().map(|p| format!("h{p}")).collect::<Vec<_>>().join("·")
                }
            } else {
                format!("{sym}{k}")
            };
            let mag = if mag == 1 { String::new() } else { format!("{mag}·") };
            write!(f, "{sign}{mag}{body}")?;
        }
        Ok(())
    }
}

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ` for single Schur functions.
pub fn schur_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    let max_len = mu.len() + nu.len();
    let max_first = mu.part(0) + nu.part(0);
    partitions_of(n)
        .into_iter()
        .filter(|l| l.len() <= max_len && l.part(0) <= max_first && l.contains(mu) && l.contains(nu))
        .filter_map(|l| {
            let c = lr_coefficient(&l, mu, nu);
            (c > 0).then_some((l, c))
        })
        .collect()
}

pub fn mult(a: &Expansion, b: &Expansion) -> Result<Expansion> {
    a.expect_basis(Basis::Schur)?;
    b.expect_basis(Basis::Schur)?;
    let mut out = Expansion::zero(Basis::Schur);
    for (mu, &x) in a.iter() {
        for (nu, &y) in b.iter() {
            for (lambda, c) in schur_product(mu, nu) {
                out.add_term(lambda, x * y * c as i64);
            }
        }
    }
    Ok(out)
}

/// `s_{λ/ν}` expanded by grouping LR tableaux of shape `λ/ν` by content.
pub fn skew_schur_expand(lambda: &Partition, nu: &Partition) -> Expansion {
    let mut out = Expansion::zero(Basis::Schur);
    if let Some(shape) = SkewShape::new(lambda.clone(), nu.clone()) {
        for t in enumerate_lr_tableaux(&shape) {
            out.add_term(t.content().expect("ballot tableaux have partition content"), 1);
        }
    }
    out
}

/// `s_ν^⊥` extended linearly.
pub fn skew(a: &Expansion, nu: &Partition) -> Result<Expansion> {
    a.expect_basis(Basis::Schur)?;
    let mut out = Expansion::zero(Basis::Schur);
    for (lambda, &c) in a.iter() {
        out.add_scaled(&skew_schur_expand(lambda, nu), c)?;
    }
    Ok(out)
}

/// The involution `s_λ ↦ s_{λ'}`.
pub fn omega(a: &Expansion) -> Result<Expansion> {
    a.expect_basis(Basis::Schur)?;
    Ok(Expansion::from_terms(Basis::Schur, a.iter().map(|(k, &c)| (k.conjugate(), c))))
}

/// `det(h_{λ_i − ν_j − i + j})` as a signed sum of h-monomials, with
/// `h_0 = 1` and `h_k = 0` for `k < 0`.
pub fn jacobi_trudi(lambda: &Partition, nu: &Partition) -> Expansion {
    let r = lambda.len().max(nu.len());
    let index = |i: usize, j: usize| -> i64 {
        lambda.part(i) as i64 - nu.part(j) as i64 - i as i64 + j as i64
    };
    let mut out = Expansion::zero(Basis::HMonomial);
    let mut perm: Vec<usize> = (0..r).collect();
    permutations(&mut perm, 0, 1, &mut |perm, sign| {
        let mut hs = Vec::with_capacity(r);
        for (i, &j) in perm.iter().enumerate() {
            let k = index(i, j);
            if k < 0 {
                return;
            }
            if k > 0 {
                hs.push(k as u32);
            }
        }
        hs.sort_unstable_by(|a, b| b.cmp(a));
        out.add_term(Partition::new(hs).expect("sorted"), sign);
    });
    out
}

/// Visits all permutations of `v[k..]` with their signs.
fn permutations(v: &mut Vec<usize>, k: usize, sign: i64, visit: &mut dyn FnMut(&[usize], i64)) {
    if k == v.len() {
        visit(v, sign);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, if i == k { sign } else { -sign }, visit);
        v.swap(k, i);
    }
}

/// Re-expands h-monomials in the Schur basis via `h_k = s_⟨k⟩`.
pub fn h_monomial_to_schur(a: &Expansion) -> Result<Expansion> {
    a.expect_basis(Basis::HMonomial)?;
    let mut out = Expansion::zero(Basis::Schur);
    for (key, &c) in a.iter() {
        let mut prod = Expansion::schur(Partition::empty());
        for &k in key.parts() {
            prod = mult(&prod, &Expansion::schur(Partition::row(k)))?;
        }
        out.add_scaled(&prod, c)?;
    }
    Ok(out)
}

/// Polynomial in finitely many variables: exponent vector ↦ coefficient.
pub type Polynomial = BTreeMap<Vec<u32>, i64>;

/// `s_λ(x_1, …, x_k)` as the content generating function of semi-standard
/// tableaux of shape `λ` with entries `≤ k`.
pub fn schur_polynomial(lambda: &Partition, num_vars: usize) -> Polynomial {
    let mut poly = Polynomial::new();
    if lambda.len() > num_vars {
        return poly;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (0..lambda.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut exps = vec![0u32; num_vars];
    fill_ssyt(&cells, 0, num_vars as u32, &mut grid, &mut exps, &mut poly);
    poly
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    idx: usize,
    max: u32,
    grid: &mut Vec<Vec<u32>>,
    exps: &mut Vec<u32>,
    poly: &mut Polynomial,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        *poly.entry(exps.clone()).or_insert(0) += 1;
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=max {
        grid[r][c] = v;
        exps[v as usize - 1] += 1;
        fill_ssyt(cells, idx + 1, max, grid, exps, poly);
        exps[v as usize - 1] -= 1;
    }
    grid[r][c] = 0;
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert(0);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly peeling
/// off the lexicographically leading monomial.
pub fn polynomial_to_schur(poly: &Polynomial, num_vars: usize) -> Expansion {
    let mut rest = poly.clone();
    rest.retain(|_, c| *c != 0);
    let mut out = Expansion::zero(Basis::Schur);
    while let Some((lead, &c)) = rest.iter().next_back() {
        let lambda = Partition::new(lead.clone()).expect("leading monomial of a symmetric polynomial");
        for (e, d) in schur_polynomial(&lambda, num_vars) {
            let entry = rest.entry(e.clone()).or_insert(0);
            *entry -= c * d;
            if *entry == 0 {
                rest.remove(&e);
            }
        }
        out.add_term(lambda, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u32]) -> Expansion {
        Expansion::schur(p(parts))
    }

    fn sum(terms: &[(&[u32], i64)]) -> Expansion {
        Expansion::from_terms(Basis::Schur, terms.iter().map(|(k, c)| (p(k), *c)))
    }

    fn h(terms: &[(&[u32], i64)]) -> Expansion {
        Expansion::from_terms(Basis::HMonomial, terms.iter().map(|(k, c)| (p(k), *c)))
    }

    #[test]
    fn mult_examples() {
        assert_eq!(mult(&s(&[1]), &s(&[1])).unwrap(), sum(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(mult(&s(&[3, 1]), &s(&[])).unwrap(), s(&[3, 1]));
        assert_eq!(mult(&s(&[1]), &s(&[2])).unwrap(), sum(&[(&[3], 1), (&[2, 1], 1)]));
        let hm = h(&[(&[1], 1)]);
        assert!(matches!(mult(&hm, &s(&[1])), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn skew_examples() {
        assert_eq!(
            skew(&s(&[3, 2, 1]), &p(&[1, 1])).unwrap(),
            sum(&[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(skew(&s(&[3, 2]), &p(&[])).unwrap(), s(&[3, 2]));
        assert!(skew(&s(&[2]), &p(&[1, 1])).unwrap().is_zero());
        assert_eq!(skew_schur_expand(&p(&[3, 2, 1]), &p(&[2, 2])), sum(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(skew_schur_expand(&p(&[3, 1]), &p(&[3, 1])), s(&[]));
        assert_eq!(skew_schur_expand(&p(&[2, 1]), &p(&[1])), sum(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&s(&[4])).unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(omega(&s(&[2, 1])).unwrap(), s(&[2, 1]));
        let a = sum(&[(&[3, 1], 2), (&[2], -1)]);
        assert_eq!(omega(&omega(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi(&p(&[2, 1]), &p(&[])), h(&[(&[2, 1], 1), (&[3], -1)]));
        assert_eq!(jacobi_trudi(&p(&[5]), &p(&[])), h(&[(&[5], 1)]));
        assert_eq!(jacobi_trudi(&p(&[1, 1]), &p(&[])), h(&[(&[1, 1], 1), (&[2], -1)]));
        assert!(jacobi_trudi(&p(&[1]), &p(&[1, 1])).is_zero());
        assert_eq!(jacobi_trudi(&p(&[2]), &p(&[2])), h(&[(&[], 1)]));
    }

    #[test]
    fn h_monomials_back_to_schur() {
        assert_eq!(h_monomial_to_schur(&h(&[(&[2, 1], 1), (&[3], -1)])).unwrap(), s(&[2, 1]));
        assert_eq!(h_monomial_to_schur(&h(&[(&[4], 1)])).unwrap(), s(&[4]));
        assert_eq!(
            h_monomial_to_schur(&h(&[(&[1, 1], 1)])).unwrap(),
            sum(&[(&[2], 1), (&[1, 1], 1)])
        );
    }

    #[test]
    fn schur_polynomial_examples() {
        let x1x2: Polynomial = [(vec![1, 0], 1), (vec![0, 1], 1)].into_iter().collect();
        assert_eq!(schur_polynomial(&p(&[1]), 2), x1x2);
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).is_empty());
        let deg2: Polynomial = [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)].into_iter().collect();
        assert_eq!(schur_polynomial(&p(&[2]), 2), deg2);
    }

    #[test]
    fn polynomial_round_trip() {
        let poly = poly_mul(&schur_polynomial(&p(&[2, 1]), 4), &schur_polynomial(&p(&[1]), 4));
        assert_eq!(
            polynomial_to_schur(&poly, 4),
            sum(&[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
    }

    #[test]
    fn json_is_sorted_descending() {
        let a = sum(&[(&[1, 1], 1), (&[2], 3), (&[], -1)]);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"[{"partition":[2],"coeff":3},{"partition":[1,1],"coeff":1},{"partition":[],"coeff":-1}]"#
        );
    }
}
