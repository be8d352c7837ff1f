use std::collections::BTreeMap;

use lrw_core::partition::{partitions_of, partitions_up_to, sub_partitions};
use lrw_core::schur::skew_schur_expand;
use lrw_core::tableaux::{enumerate_lr_tableaux, is_ballot, lr_coefficient, SkewShape, SkewTableau};
use lrw_core::Partition;

// Independent SSYT check on the raw rows.
fn is_ssyt(t: &SkewTableau) -> bool {
    let shape = t.shape();
    let rows = t.rows();
    for (r, row) in rows.iter().enumerate() {
        let start = shape.inner().part(r) as usize;
        if row.len() != shape.outer().part(r) as usize - start {
            return false;
        }
        if row.windows(2).any(|w| w[0] > w[1]) || row.contains(&0) {
            return false;
        }
        for (i, &x) in row.iter().enumerate() {
            if let Some(above) = r.checked_sub(1).and_then(|q| t.entry(q, start + i)) {
                if above >= x {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn enumerated_tableaux_are_lr_tableaux() {
    for outer in partitions_up_to(7) {
        for inner in sub_partitions(&outer) {
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            for t in enumerate_lr_tableaux(&shape) {
                assert!(is_ssyt(&t), "{outer}/{inner}: {:?}", t.rows());
                assert!(is_ballot(&t.reverse_row_word()));
                assert!(SkewTableau::new(shape.clone(), t.rows().to_vec()).is_ok());
            }
        }
    }
}

#[test]
fn contents_reproduce_skew_expansion_up_to_8() {
    for outer in partitions_up_to(8) {
        for inner in sub_partitions(&outer) {
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            let mut by_content: BTreeMap<Partition, i64> = BTreeMap::new();
            for t in enumerate_lr_tableaux(&shape) {
                *by_content.entry(t.content().unwrap()).or_default() += 1;
            }
            assert_eq!(&by_content, skew_schur_expand(&outer, &inner).terms(), "{outer}/{inner}");
        }
    }
}

#[test]
fn lr_coefficient_is_symmetric_up_to_8() {
    for n in 0..=8 {
        for lam in partitions_of(n) {
            for mu in sub_partitions(&lam) {
                for nu in partitions_of(n - mu.size()) {
                    assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&lam, &nu, &mu), "{lam} {mu} {nu}");
                }
            }
        }
    }
}

#[test]
fn enumeration_order_is_reproducible() {
    let shape = SkewShape::new(Partition::new(vec![3, 2, 1]).unwrap(), Partition::new(vec![1]).unwrap()).unwrap();
    let a: Vec<_> = enumerate_lr_tableaux(&shape).into_iter().map(|t| t.rows().to_vec()).collect();
    let b: Vec<_> = enumerate_lr_tableaux(&shape).into_iter().map(|t| t.rows().to_vec()).collect();
    assert_eq!(a, b);
    let mut sorted = a.clone();
    sorted.sort();
    assert_eq!(a, sorted);
}

#[test]
fn ballot_examples() {
    assert!(is_ballot(&[1, 1, 2, 1, 2, 3]));
    assert!(!is_ballot(&[1, 2, 2]));
    assert!(is_ballot(&[]));
    assert!(!is_ballot(&[2]));
}
