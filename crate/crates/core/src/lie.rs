//! Classical root data: Cartan matrices, positive roots and conversions
//! between simple-root and fundamental-weight coordinates.
//!
//! Cartan entries follow `a_{ij} = ⟨α_i^∨, α_j⟩`, so the simple root `α_j`
//! has fundamental-weight coordinates given by column `j`. Node labels are
//! the usual ones: for `B_n` / `C_n` the last node carries the short / long
//! root, and for `D_n` nodes `n−1` and `n` are the spin nodes.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::RootLatticeElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieSpec {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

impl LieSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = if family == Family::D { 4 } else { 2 };
        if rank < min {
            return Err(Error::InvalidRank { family: family.letter(), rank });
        }
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
        }
        Ok(LieSpec { family, rank, cartan: a })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `a_{ij}` with 0-based node indices.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Nodes joined to `i` in the Dynkin diagram (0-based).
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| j != i && self.cartan[i][j] != 0)
    }

    /// Fundamental-weight coordinates of `Σ r_j α_j`.
    pub fn root_to_weight(&self, root: &RootLatticeElement) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * root.coords()[j]).sum())
            .collect()
    }

    /// Simple-root coordinates of a weight, as exact rationals.
    pub fn weight_to_root(&self, weight: &[i64]) -> Vec<Rational64> {
        let n = self.rank;
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> = self.cartan[i].iter().map(|&x| Rational64::from(x)).collect();
                row.push(Rational64::from(weight[i]));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r][col] != Rational64::from(0)).expect("Cartan matrix is invertible");
            m.swap(col, pivot);
            let inv = Rational64::from(1) / m[col][col];
            for x in m[col].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != col && m[r][col] != Rational64::from(0) {
                    let f = m[r][col];
                    for k in col..=n {
                        let v = m[col][k];
                        m[r][k] -= f * v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }

    /// Simple-root coordinates of a weight when they are all integers.
    pub fn weight_to_root_integral(&self, weight: &[i64]) -> Option<RootLatticeElement> {
        let coords = self
            .weight_to_root(weight)
            .into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(RootLatticeElement::new(coords))
    }

    /// `2ε_i` (1-based `i`) in simple-root coordinates, for the standard
    /// realisations `α_j = ε_j − ε_{j+1}` plus `α_n = ε_n` (B), `2ε_n` (C)
    /// or `ε_{n−1} + ε_n` (D).
    fn doubled_epsilon(&self, i: usize) -> Result<Vec<i64>> {
        let n = self.rank;
        let mut v = vec![0i64; n];
        match self.family {
            Family::B => (i - 1..n).for_each(|j| v[j] = 2),
            Family::C => {
                (i - 1..n - 1).for_each(|j| v[j] = 2);
                v[n - 1] = 1;
            }
            Family::D => {
                if i <= n - 2 {
                    (i - 1..n - 2).for_each(|j| v[j] = 2);
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                } else if i == n - 1 {
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                } else {
                    v[n - 2] = -1;
                    v[n - 1] = 1;
                }
            }
            Family::A => return Err(Error::UnsupportedFamily("type A has no ε-realisation here".into())),
        }
        Ok(v)
    }

    /// Converts `Σ e_i ε_i` to simple-root coordinates; `None` when the
    /// result is not integral (half-spin weights of D, odd ε-sums in C).
    pub fn epsilon_to_root(&self, eps_coords: &[i64]) -> Result<Option<RootLatticeElement>> {
        let mut v = vec![0i64; self.rank];
        for (i, &e) in eps_coords.iter().enumerate().filter(|(_, &e)| e != 0) {
            if i >= self.rank {
                return Err(Error::RankMismatch { expected: self.rank, found: eps_coords.len() });
            }
            for (x, d) in v.iter_mut().zip(self.doubled_epsilon(i + 1)?) {
                *x += e * d;
            }
        }
        if v.iter().any(|x| x % 2 != 0) {
            return Ok(None);
        }
        Ok(Some(RootLatticeElement::new(v.into_iter().map(|x| x / 2).collect())))
    }

    /// `R^+` in simple-root coordinates, built from the `ε` realisation:
    /// `ε_i ± ε_j` for all types, plus `ε_i` (B) or `2ε_i` (C).
    pub fn positive_roots(&self) -> Result<Vec<RootLatticeElement>> {
        let n = self.rank;
        let eps: Vec<Vec<i64>> = (1..=n).map(|i| self.doubled_epsilon(i)).collect::<Result<_>>()?;
        let combine = |terms: &[(usize, i64)]| -> RootLatticeElement {
            let mut v = vec![0i64; n];
            for &(i, k) in terms {
                for (x, e) in v.iter_mut().zip(&eps[i]) {
                    *x += k * e;
                }
            }
            debug_assert!(v.iter().all(|x| x % 2 == 0));
            RootLatticeElement::new(v.into_iter().map(|x| x / 2).collect())
        };
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                roots.push(combine(&[(i, 1), (j, -1)]));
                roots.push(combine(&[(i, 1), (j, 1)]));
            }
            match self.family {
                Family::B => roots.push(combine(&[(i, 1)])),
                Family::C => roots.push(combine(&[(i, 2)])),
                _ => {}
            }
        }
        roots.sort();
        Ok(roots)
    }
}

impl fmt::Display for LieSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Parses `"B3"`, `"D5"`, ...
impl FromStr for LieSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(Error::UnsupportedFamily(s.to_string())),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad rank in {s:?}: {e}")))?;
        LieSpec::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_shapes() {
        let b3 = LieSpec::new(Family::B, 3).unwrap();
        assert_eq!(b3.cartan(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let c3 = LieSpec::new(Family::C, 3).unwrap();
        assert_eq!(c3.cartan(), &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        let d4 = LieSpec::new(Family::D, 4).unwrap();
        assert_eq!(d4.neighbors(1).collect::<Vec<_>>(), vec![0, 2, 3]);
        assert!(LieSpec::new(Family::D, 3).is_err());
        assert!("E8".parse::<LieSpec>().is_err());
        assert_eq!("c4".parse::<LieSpec>().unwrap().to_string(), "C4");
    }

    #[test]
    fn root_counts() {
        let b2: Vec<Vec<i64>> = LieSpec::new(Family::B, 2)
            .unwrap()
            .positive_roots()
            .unwrap()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        assert_eq!(b2, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(LieSpec::new(Family::C, 2).unwrap().positive_roots().unwrap().len(), 4);
        assert_eq!(LieSpec::new(Family::D, 4).unwrap().positive_roots().unwrap().len(), 12);
        for n in 2..=8 {
            assert_eq!(LieSpec::new(Family::B, n).unwrap().positive_roots().unwrap().len(), n * n);
            assert_eq!(LieSpec::new(Family::C, n).unwrap().positive_roots().unwrap().len(), n * n);
        }
        for n in 4..=8 {
            assert_eq!(LieSpec::new(Family::D, n).unwrap().positive_roots().unwrap().len(), n * n - n);
        }
        assert!(LieSpec::new(Family::A, 3).unwrap().positive_roots().is_err());
    }

    #[test]
    fn weight_root_round_trip() {
        let d5 = LieSpec::new(Family::D, 5).unwrap();
        let root = RootLatticeElement::new(vec![1, 2, 2, 1, 1]);
        assert_eq!(d5.root_to_weight(&root), vec![0, 1, 0, 0, 0]);
        assert_eq!(d5.weight_to_root_integral(&[0, 1, 0, 0, 0]).unwrap(), root);
        // ω_4 of D_5 is a spin weight, outside the root lattice.
        assert!(d5.weight_to_root_integral(&[0, 0, 0, 1, 0]).is_none());
        let b3 = LieSpec::new(Family::B, 3).unwrap();
        assert_eq!(b3.weight_to_root_integral(&[1, 0, 0]).unwrap().coords(), &[1, 1, 1]);
        assert_eq!(b3.epsilon_to_root(&[1, 1, 0]).unwrap().unwrap().coords(), &[1, 2, 2]);
        let c3 = LieSpec::new(Family::C, 3).unwrap();
        assert_eq!(c3.epsilon_to_root(&[2, 0, 0]).unwrap().unwrap().coords(), &[2, 2, 1]);
        assert_eq!(c3.epsilon_to_root(&[1, 0, 0]).unwrap(), None);
        assert_eq!(d5.epsilon_to_root(&[1, 1, 0, 0, 0]).unwrap().unwrap(), root);
    }
}
