//! Semi-standard skew tableaux and Littlewood–Richardson enumeration.
//!
//! An LR tableau is a semi-standard filling of `λ/ν` whose reverse row word
//! (rows read right to left, top row first) is a ballot sequence. Grouping
//! LR tableaux by content expands `s_{λ/ν}` in the Schur basis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// `None` when `inner ⊄ outer`.
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        outer.contains(&inner).then_some(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn row_len(&self, r: usize) -> usize {
        (self.outer.part(r) - self.inner.part(r)) as usize
    }

    fn in_skew(&self, r: usize, c: usize) -> bool {
        (c as u32) >= self.inner.part(r) && (c as u32) < self.outer.part(r)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A filling of a skew shape; `rows[r]` lists the entries of row `r` left
/// to right (empty for rows fully covered by the inner shape).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Checks row lengths, weakly increasing rows and strictly increasing
    /// columns. Entries must be positive.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let label = shape.to_string();
        let bad = |msg: &str| Error::Parse(format!("invalid tableau on {label}: {msg}"));
        if rows.len() != shape.outer.len() {
            return Err(bad("row count"));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(bad("row length"));
            }
            if row.contains(&0) {
                return Err(bad("zero entry"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(bad("row not weakly increasing"));
            }
        }
        let t = SkewTableau { shape, rows };
        for r in 1..t.rows.len() {
            for c in t.shape.inner.part(r) as usize..t.shape.outer.part(r) as usize {
                if let (Some(above), Some(here)) = (t.entry(r - 1, c), t.entry(r, c)) {
                    if above >= here {
                        return Err(bad("column not strictly increasing"));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `r`, absolute column `c`, if that cell is in the skew diagram.
    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        if !self.shape.in_skew(r, c) {
            return None;
        }
        Some(self.rows[r][c - self.shape.inner.part(r) as usize])
    }

    pub fn reverse_row_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// `⟨n_1(T), n_2(T), …⟩`, failing when the counts are not weakly decreasing.
    pub fn content(&self) -> Result<Partition> {
        let counts = content_counts(self.rows.iter().flatten().copied());
        Partition::new(counts.clone()).map_err(|_| Error::NotAPartition(counts))
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            for _ in 0..self.shape.inner.part(r) {
                write!(f, "·")?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

fn content_counts(entries: impl Iterator<Item = u32>) -> Vec<u32> {
    let mut counts: Vec<u32> = Vec::new();
    for v in entries {
        let i = v as usize - 1;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
    }
    counts
}

pub fn reverse_row_word(t: &SkewTableau) -> Vec<u32> {
    t.reverse_row_word()
}

pub fn content(t: &SkewTableau) -> Result<Partition> {
    t.content()
}

/// Every prefix has at least as many `i`s as `(i+1)`s, for every `i ≥ 1`.
pub fn is_ballot(seq: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in seq {
        if v == 0 {
            return false;
        }
        let i = v as usize;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
        if i >= 2 && counts[i] > counts[i - 1] {
            return false;
        }
    }
    true
}

/// Depth-first filler shared by enumeration and counting.
struct LrSearch<'a> {
    shape: &'a SkewShape,
    /// `grid[r][c]` by absolute column; 0 marks an inner or unfilled cell.
    grid: Vec<Vec<u32>>,
    counts: Vec<u32>,
    limit: Option<Vec<u32>>,
    max_entry: u32,
}

impl<'a> LrSearch<'a> {
    fn new(shape: &'a SkewShape, content: Option<&Partition>) -> Self {
        let max_entry = match content {
            Some(c) => c.len() as u32,
            None => shape.outer.len() as u32,
        };
        LrSearch {
            shape,
            grid: (0..shape.outer.len())
                .map(|r| vec![0; shape.outer.part(r) as usize])
                .collect(),
            counts: vec![0; max_entry as usize + 1],
            limit: content.map(|c| {
                let mut l = vec![u32::MAX];
                l.extend_from_slice(c.parts());
                l
            }),
            max_entry,
        }
    }

    /// Visits every completed filling, cells taken in reverse-row-word order.
    fn run(&mut self, visit: &mut dyn FnMut(&Vec<Vec<u32>>)) {
        let cells: Vec<(usize, usize)> = (0..self.shape.outer.len())
            .flat_map(|r| {
                let lo = self.shape.inner.part(r) as usize;
                let hi = self.shape.outer.part(r) as usize;
                (lo..hi).rev().map(move |c| (r, c))
            })
            .collect();
        self.fill(&cells, 0, visit);
    }

    fn fill(&mut self, cells: &[(usize, usize)], idx: usize, visit: &mut dyn FnMut(&Vec<Vec<u32>>)) {
        let Some(&(r, c)) = cells.get(idx) else {
            visit(&self.grid);
            return;
        };
        // Weakly increasing rows: bounded above by the right neighbour.
        let upper = if self.shape.in_skew(r, c + 1) { self.grid[r][c + 1] } else { self.max_entry };
        // Strictly increasing columns: bounded below by the cell above.
        let lower = if r > 0 && self.shape.in_skew(r - 1, c) { self.grid[r - 1][c] + 1 } else { 1 };
        for v in lower..=upper {
            let vi = v as usize;
            if vi >= 2 && self.counts[vi] + 1 > self.counts[vi - 1] {
                continue;
            }
            if let Some(limit) = &self.limit {
                if self.counts[vi] + 1 > limit[vi] {
                    continue;
                }
            }
            self.counts[vi] += 1;
            self.grid[r][c] = v;
            self.fill(cells, idx + 1, visit);
            self.grid[r][c] = 0;
            self.counts[vi] -= 1;
        }
    }
}

/// All semi-standard tableaux of `shape` whose reverse row word is ballot,
/// sorted row by row lexicographically.
pub fn enumerate_lr_tableaux(shape: &SkewShape) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    let mut search = LrSearch::new(shape, None);
    search.run(&mut |grid| {
        let rows = grid
            .iter()
            .enumerate()
            .map(|(r, row)| row[shape.inner.part(r) as usize..].to_vec())
            .collect();
        out.push(SkewTableau { shape: shape.clone(), rows });
    });
    out.sort_by(|a, b| a.rows.cmp(&b.rows));
    out
}

/// Number of LR tableaux of `shape` with the given content.
pub fn count_lr_tableaux(shape: &SkewShape, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    let mut n = 0u64;
    LrSearch::new(shape, Some(content)).run(&mut |_| n += 1);
    n
}

/// `c^λ_{μν}`: multiplicity of `s_λ` in `s_μ s_ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(nu) {
        return 0;
    }
    match SkewShape::new(lambda.clone(), mu.clone()) {
        Some(shape) => count_lr_tableaux(&shape, nu),
        None => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn reverse_row_word_examples() {
        let t = SkewTableau::new(
            SkewShape::straight(p(&[3, 2, 1])),
            vec![vec![1, 1, 1], vec![2, 2], vec![3]],
        )
        .unwrap();
        assert_eq!(t.reverse_row_word(), vec![1, 1, 1, 2, 2, 3]);
        assert_eq!(t.content().unwrap(), p(&[3, 2, 1]));

        let empty = SkewTableau::new(SkewShape::straight(Partition::empty()), vec![]).unwrap();
        assert!(empty.reverse_row_word().is_empty());

        let one = SkewTableau::new(SkewShape::straight(p(&[1])), vec![vec![1]]).unwrap();
        assert_eq!(one.reverse_row_word(), vec![1]);
    }

    #[test]
    fn ballot_examples() {
        assert!(is_ballot(&[1, 1, 1, 2, 2, 3]));
        assert!(!is_ballot(&[2, 1]));
        assert!(is_ballot(&[]));
        assert!(!is_ballot(&[1, 2, 2]));
    }

    #[test]
    fn content_examples() {
        let col = SkewTableau::new(SkewShape::straight(p(&[1, 1])), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(col.content().unwrap(), p(&[1, 1]));
        let row = SkewTableau::new(SkewShape::straight(p(&[2])), vec![vec![1, 1]]).unwrap();
        assert_eq!(row.content().unwrap(), p(&[2]));
        let bad = SkewTableau::new(SkewShape::straight(p(&[1])), vec![vec![2]]).unwrap();
        assert_eq!(bad.content(), Err(Error::NotAPartition(vec![0, 1])));
    }

    #[test]
    fn invalid_tableaux_rejected() {
        let shape = SkewShape::straight(p(&[2, 1]));
        assert!(SkewTableau::new(shape.clone(), vec![vec![2, 1], vec![2]]).is_err());
        assert!(SkewTableau::new(shape.clone(), vec![vec![1, 1], vec![1]]).is_err());
        assert!(SkewTableau::new(shape, vec![vec![1, 1]]).is_err());
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_none());
    }

    #[test]
    fn six_component_tableaux() {
        let straight = enumerate_lr_tableaux(&skew(&[3, 2, 1], &[]));
        assert_eq!(straight.len(), 1);
        assert_eq!(straight[0].rows(), &[vec![1, 1, 1], vec![2, 2], vec![3]]);

        let middle = enumerate_lr_tableaux(&skew(&[3, 2, 1], &[1, 1]));
        assert_eq!(middle.len(), 3);
        let contents: Vec<Partition> = middle.iter().map(|t| t.content().unwrap()).collect();
        assert!(contents.contains(&p(&[3, 1])));
        assert!(contents.contains(&p(&[2, 2])));
        assert!(contents.contains(&p(&[2, 1, 1])));

        let last = enumerate_lr_tableaux(&skew(&[3, 2, 1], &[2, 2]));
        assert_eq!(last.len(), 2);
        assert_eq!(last[0].rows(), &[vec![1], vec![], vec![1]]);
        assert_eq!(last[1].rows(), &[vec![1], vec![], vec![2]]);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[1])), 0);
        for lambda in partitions_up_to(6) {
            assert_eq!(lr_coefficient(&lambda, &lambda, &Partition::empty()), 1);
        }
    }

    #[test]
    fn enumeration_is_valid_and_sorted() {
        for outer in partitions_up_to(7) {
            for inner in crate::partition::sub_partitions(&outer) {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                let ts = enumerate_lr_tableaux(&shape);
                for w in ts.windows(2) {
                    assert!(w[0].rows() < w[1].rows());
                }
                for t in ts {
                    let rebuilt = SkewTableau::new(shape.clone(), t.rows().to_vec()).unwrap();
                    assert!(is_ballot(&rebuilt.reverse_row_word()));
                    assert!(rebuilt.content().is_ok());
                }
            }
        }
    }
}
