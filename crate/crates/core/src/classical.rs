//! Universal symplectic and orthogonal characters, GL → Sp/O branching and
//! the `W_Sp(λ)` / `W_O(λ)` families.
//!
//! Both branching and the `W` families sum `c^λ_{μν}` over a domino class of
//! `ν`; they differ only in which class goes with which group:
//!
//! | sum over `ν ∈` | `V_Sp(μ)` | `V_O(μ)` |
//! |----------------|-----------|----------|
//! | vertical       | `s_λ`     | `W_O(λ)` |
//! | horizontal     | `W_Sp(λ)` | `s_λ`    |

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Result;
use crate::partition::{sub_partitions, Partition};
use crate::schur::{mult, skew_schur_expand, Basis, Expansion};
use crate::tableaux::lr_coefficient;

/// Symplectic or orthogonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Sp,
    O,
}

impl Group {
    pub fn basis(self) -> Basis {
        match self {
            Group::Sp => Basis::Sp,
            Group::O => Basis::O,
        }
    }

    pub fn other(self) -> Group {
        match self {
            Group::Sp => Group::O,
            Group::O => Group::Sp,
        }
    }

    pub fn all() -> [Group; 2] {
        [Group::Sp, Group::O]
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Sp => write!(f, "Sp"),
            Group::O => write!(f, "O"),
        }
    }
}

impl std::str::FromStr for Group {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp" | "c" => Ok(Group::Sp),
            "o" | "so" | "b" | "d" => Ok(Group::O),
            _ => Err(crate::Error::Parse(format!("unknown group {s:?}, expected Sp or O"))),
        }
    }
}

/// Sp(2n), SO(2n+1) or SO(2n), for stable-range questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StableFamily {
    Sp,
    OOdd,
    OEven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominoClass {
    /// Every part occurs with even multiplicity.
    Vertical,
    /// Every part is even.
    Horizontal,
}

impl DominoClass {
    pub fn contains(self, nu: &Partition) -> bool {
        match self {
            DominoClass::Vertical => nu.is_vertical_domino(),
            DominoClass::Horizontal => nu.is_horizontal_domino(),
        }
    }
}

pub fn in_yv(nu: &Partition) -> bool {
    nu.is_vertical_domino()
}

pub fn in_yh(nu: &Partition) -> bool {
    nu.is_horizontal_domino()
}

/// `Σ_{ν ⊆ λ, ν ∈ class} s_{λ/ν}` in the Schur basis.
pub fn domino_skew_sum(lambda: &Partition, class: DominoClass) -> Expansion {
    let mut out = Expansion::zero(Basis::Schur);
    for nu in sub_partitions(lambda).iter().filter(|nu| class.contains(nu)) {
        out.add_scaled(&skew_schur_expand(lambda, nu), 1).expect("Schur basis");
    }
    out
}

/// `s_λ` written in the `sp` (vertical dominoes) or `o` (horizontal
/// dominoes) basis.
pub fn branch_schur(lambda: &Partition, target: Group) -> Expansion {
    let class = match target {
        Group::Sp => DominoClass::Vertical,
        Group::O => DominoClass::Horizontal,
    };
    domino_skew_sum(lambda, class).relabel(target.basis())
}

/// Linear extension of [`branch_schur`].
pub fn branch(a: &Expansion, target: Group) -> Result<Expansion> {
    a.expect_basis(Basis::Schur)?;
    let mut out = Expansion::zero(target.basis());
    for (lambda, &c) in a.iter() {
        out.add_scaled(&branch_schur(lambda, target), c)?;
    }
    Ok(out)
}

/// Inverts the unitriangular branching matrix: peels off the leading key
/// (most boxes, then lexicographically largest) until nothing remains.
pub fn to_schur(a: &Expansion) -> Result<Expansion> {
    let group = match a.basis() {
        Basis::Sp => Group::Sp,
        Basis::O => Group::O,
        other => {
            return Err(crate::Error::BasisMismatch { expected: Basis::Sp, found: other });
        }
    };
    let mut rest = a.clone();
    let mut out = Expansion::zero(Basis::Schur);
    while let Some(lead) = rest.leading_key().cloned() {
        let c = rest.coeff(&lead);
        out.add_term(lead.clone(), c);
        rest.add_scaled(&branch_schur(&lead, group), -c)?;
    }
    Ok(out)
}

/// `sp_μ sp_ν` (or `o_μ o_ν`) in its own basis.
pub fn character_product(mu: &Partition, nu: &Partition, group: Group) -> Expansion {
    let b = group.basis();
    let sm = to_schur(&Expansion::basis_element(b, mu.clone())).expect("Sp/O basis");
    let sn = to_schur(&Expansion::basis_element(b, nu.clone())).expect("Sp/O basis");
    branch(&mult(&sm, &sn).expect("Schur basis"), group).expect("Schur basis")
}

/// Coefficient of `λ` in `sp_μ sp_ν`.
pub fn d_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> i64 {
    d_coefficient_in(Group::Sp, mu, nu, lambda)
}

/// Coefficient of `λ` in the product of `μ` and `ν` taken in the given
/// group's universal-character basis.
pub fn d_coefficient_in(group: Group, mu: &Partition, nu: &Partition, lambda: &Partition) -> i64 {
    character_product(mu, nu, group).coeff(lambda)
}

/// Irreducible decomposition of `W_Sp(λ)` or `W_O(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WDecomposition {
    family: Group,
    top: Partition,
    terms: BTreeMap<Partition, u64>,
}

impl WDecomposition {
    pub fn new(family: Group, top: Partition, terms: BTreeMap<Partition, u64>) -> Self {
        let mut terms = terms;
        terms.retain(|_, m| *m > 0);
        WDecomposition { family, top, terms }
    }

    pub fn family(&self) -> Group {
        self.family
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, mu: &Partition) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Components ordered by descending box count, then descending
    /// lexicographic.
    pub fn sorted_terms(&self) -> Vec<(&Partition, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, &m)| (k, m)).collect();
        v.sort_by(|a, b| a.0.graded_desc_cmp(b.0));
        v
    }

    /// As an expansion in the `V_G` (universal character) basis.
    pub fn to_expansion(&self) -> Expansion {
        Expansion::from_terms(self.family.basis(), self.terms.iter().map(|(k, &m)| (k.clone(), m as i64)))
    }
}

#[derive(Serialize)]
struct MultRef<'a> {
    partition: &'a Partition,
    mult: u64,
}

impl Serialize for WDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<MultRef> = self
            .sorted_terms()
            .into_iter()
            .map(|(partition, mult)| MultRef { partition, mult })
            .collect();
        let mut st = serializer.serialize_struct("WDecomposition", 3)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("top", &self.top)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl fmt::Display for WDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W_{}({}) =", self.family, self.top)?;
        for (i, (mu, m)) in self.sorted_terms().into_iter().enumerate() {
            let sep = if i > 0 { " ⊕" } else { "" };
            let mult = if m > 1 { format!("{m}·") } else { String::new() };
            write!(f, "{sep} {mult}V{mu}")?;
        }
        Ok(())
    }
}

/// `W_Sp(λ) = Σ_{ν horizontal} s_{λ/ν}`, `W_O(λ) = Σ_{ν vertical} s_{λ/ν}`,
/// read off in the irreducible basis.
pub fn w_decomp(lambda: &Partition, family: Group) -> WDecomposition {
    let class = match family {
        Group::Sp => DominoClass::Horizontal,
        Group::O => DominoClass::Vertical,
    };
    let terms = domino_skew_sum(lambda, class)
        .iter()
        .map(|(k, &c)| {
            debug_assert!(c > 0);
            (k.clone(), c as u64)
        })
        .collect();
    WDecomposition::new(family, lambda.clone(), terms)
}

/// Both sides of `W(μ) ⊗ W(ν) ≅ Σ_λ c^λ_{μν} W(λ)` as `V_G` expansions.
pub fn w_tensor_check(mu: &Partition, nu: &Partition, family: Group) -> (Expansion, Expansion) {
    let basis = family.basis();
    let wm = w_decomp(mu, family);
    let wn = w_decomp(nu, family);
    let mut lhs = Expansion::zero(basis);
    for (k1, &m1) in wm.terms() {
        for (k2, &m2) in wn.terms() {
            lhs.add_scaled(&character_product(k1, k2, family), (m1 * m2) as i64)
                .expect("same basis");
        }
    }
    let mut rhs = Expansion::zero(basis);
    let prod = mult(&Expansion::schur(mu.clone()), &Expansion::schur(nu.clone())).expect("Schur basis");
    for (lambda, &c) in prod.iter() {
        debug_assert_eq!(c as u64, lr_coefficient(lambda, mu, nu));
        rhs.add_scaled(&w_decomp(lambda, family).to_expansion(), c).expect("same basis");
    }
    (lhs, rhs)
}

/// Smallest rank at which the universal character of `λ` is taken to
/// specialise to an irreducible character: `rows + 1` for Sp(2n) and
/// SO(2n+1), `rows + 2` for SO(2n). The empty partition is trivial at every
/// rank.
pub fn min_stable_rank(lambda: &Partition, family: StableFamily) -> usize {
    if lambda.is_empty() {
        return 1;
    }
    match family {
        StableFamily::Sp | StableFamily::OOdd => lambda.len() + 1,
        StableFamily::OEven => lambda.len() + 2,
    }
}
