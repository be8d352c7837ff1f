//! Worked-example and sweep checks behind `lrwkit verify`.

use std::fmt::Debug;

use serde::Serialize;

use lrw_core::classical::{d_coefficient_in, in_yh, in_yv, w_decomp, w_tensor_check, Group};
use lrw_core::fermionic::{fermionic_decomp, FactorList};
use lrw_core::lie::{Family, LieSpec};
use lrw_core::looproot::{beta_roots, commute_check};
use lrw_core::partition::{partitions_of, partitions_up_to, sub_partitions, weight_from_partition};
use lrw_core::tableaux::{enumerate_lr_tableaux, lr_coefficient, SkewShape};
use lrw_core::{DominantWeight, Partition};

use crate::closed_form::{closed_form_24, closed_form_abc, closed_form_rectangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub level: Level,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }
}

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn eq<T: PartialEq + Debug>(&mut self, name: &str, expected: T, actual: T) {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    /// A sweep: `failures` lists the offending cases, empty when all pass.
    fn sweep(&mut self, name: &str, cases: usize, failures: Vec<String>) {
        let actual = if failures.is_empty() {
            format!("{cases} cases ok")
        } else {
            format!("{} of {cases} failed, first: {}", failures.len(), failures[0])
        };
        self.checks.push(Check {
            name: name.to_string(),
            status: if failures.is_empty() { Status::Pass } else { Status::Fail },
            expected: format!("{cases} cases ok"),
            actual,
        });
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

fn dw(coeffs: &[u32]) -> DominantWeight {
    DominantWeight::new(coeffs.to_vec()).expect("literal weight")
}

fn wterms(w: &lrw_core::classical::WDecomposition) -> Vec<(String, u64)> {
    w.sorted_terms().into_iter().map(|(k, m)| (k.to_string(), m)).collect()
}

pub fn run_verify_suite(level: Level) -> VerifyReport {
    let mut s = Suite { checks: Vec::new() };
    examples(&mut s);
    let commute_max = if level == Level::Full { 8 } else { 5 };
    commute(&mut s, commute_max);
    if level == Level::Full {
        sweeps(&mut s);
    }
    let passed = s.checks.iter().filter(|c| c.status == Status::Pass).count();
    let total = s.checks.len();
    VerifyReport {
        level,
        checks: s.checks,
        summary: Summary { total, passed, failed: total - passed },
    }
}

fn examples(s: &mut Suite) {
    let lam = p(&[4, 3, 1]);
    s.eq("dictionary.431", Some(dw(&[1, 2, 1]).to_string()), weight_from_partition(&lam, 3).ok().map(|w| w.to_string()));

    let six: Vec<(String, u64)> = ["⟨3,2,1⟩", "⟨3,1⟩", "⟨2,2⟩", "⟨2,1,1⟩", "⟨2⟩", "⟨1,1⟩"]
        .iter()
        .map(|k| (k.to_string(), 1))
        .collect();
    s.eq("w_o.321.six_components", six, wterms(&w_decomp(&p(&[3, 2, 1]), Group::O)));

    let counts: Vec<usize> = [&[][..], &[1, 1], &[2, 2]]
        .iter()
        .map(|nu| enumerate_lr_tableaux(&SkewShape::new(p(&[3, 2, 1]), p(nu)).unwrap()).len())
        .collect();
    s.eq("tableaux.321.counts", vec![1, 3, 2], counts);

    let lam24 = p(&[2, 2, 1, 1]);
    let seven: usize = sub_partitions(&lam24)
        .into_iter()
        .filter(in_yv)
        .map(|nu| enumerate_lr_tableaux(&SkewShape::new(lam24.clone(), nu).unwrap()).len())
        .sum();
    s.eq("tableaux.omega2_omega4.total", 7, seven);
    s.eq("w_o.omega2_omega4.omega2_multiplicity", 2, w_decomp(&lam24, Group::O).multiplicity(&p(&[1, 1])));
    s.eq("closed_form.24.a1b1", w_decomp(&lam24, Group::O).to_string(), closed_form_24(1, 1).to_string());
    s.eq("closed_form.abc.111", w_decomp(&p(&[3, 2, 1]), Group::O).to_string(), closed_form_abc(1, 1, 1).to_string());
    s.eq(
        "closed_form.rect.o.1x2",
        w_decomp(&p(&[1, 1]), Group::O).to_string(),
        closed_form_rectangle(1, 2, Group::O).to_string(),
    );

    let d5 = LieSpec::new(Family::D, 5).expect("D5");
    let weights: Vec<Vec<i64>> = beta_roots(&d5)
        .map(|b| b.entries().into_iter().map(|e| e.weight).collect())
        .unwrap_or_default();
    s.eq(
        "roots.d5.beta_weights",
        vec![vec![0, 1, 0, 0, 0], vec![1, -1, 1, 0, 0], vec![-1, 0, 1, 0, 0]],
        weights,
    );
    let counts: Vec<(usize, usize)> = (3..=8)
        .map(|m| {
            let count = |f, r| beta_roots(&LieSpec::new(f, r).expect("rank")).map(|b| b.len()).unwrap_or(usize::MAX);
            (count(Family::B, m), count(Family::D, m + 1))
        })
        .collect();
    let same: Vec<(usize, usize)> = counts.iter().map(|&(b, _)| (b, b)).collect();
    s.eq("roots.beta_count.b_vs_d", same, counts);

    let b3 = LieSpec::new(Family::B, 3).expect("B3");
    let c3 = LieSpec::new(Family::C, 3).expect("C3");
    let fd = |spec: &LieSpec, m, node| {
        let f = FactorList::single(spec, m, node).expect("factor");
        fermionic_decomp(spec, &f).into_iter().map(|(w, c)| (w.to_string(), c)).collect::<Vec<_>>()
    };
    s.eq(
        "fermionic.b3.1x2",
        vec![("0".to_string(), 1), ("ω2".to_string(), 1)],
        fd(&b3, 1, 2),
    );
    s.eq(
        "fermionic.c3.2x1",
        vec![("0".to_string(), 1), ("2ω1".to_string(), 1)],
        fd(&c3, 2, 1),
    );
}

fn commute(s: &mut Suite, max_rank: usize) {
    for (f, lo) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        for r in lo..=max_rank {
            let spec = LieSpec::new(f, r).expect("rank");
            let violations = commute_check(&spec).map(|rep| rep.violations.len()).unwrap_or(usize::MAX);
            s.eq(&format!("roots.commute.{spec}"), 0, violations);
        }
    }
}

fn sweeps(s: &mut Suite) {
    let mut fails = Vec::new();
    let mut n = 0;
    for m in 1..=4u32 {
        for ell in 1..=4usize {
            for g in Group::all() {
                n += 1;
                let top = Partition::rectangle(ell, m);
                if closed_form_rectangle(m, ell, g) != w_decomp(&top, g) {
                    fails.push(format!("{g} {top}"));
                }
            }
        }
    }
    s.sweep("closed_form.rect.m4_l4", n, fails);

    let (mut fails, mut n) = (Vec::new(), 0);
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                n += 1;
                let cf = closed_form_abc(a, b, c);
                if cf != w_decomp(cf.top(), Group::O) {
                    fails.push(format!("({a},{b},{c})"));
                }
            }
        }
    }
    s.sweep("closed_form.abc.le3", n, fails);

    let (mut fails, mut n) = (Vec::new(), 0);
    for a in 0..=3 {
        for b in 0..=3 {
            n += 1;
            let cf = closed_form_24(a, b);
            if cf != w_decomp(cf.top(), Group::O) {
                fails.push(format!("({a},{b})"));
            }
        }
    }
    s.sweep("closed_form.24.le3", n, fails);

    let (mut fails, mut n) = (Vec::new(), 0);
    for lam in partitions_up_to(8) {
        for g in Group::all() {
            n += 1;
            let w = w_decomp(&lam, g);
            let inside = w.terms().keys().all(|mu| lam.contains(mu));
            let trivial = w.multiplicity(&Partition::empty());
            let in_class = match g {
                Group::Sp => in_yh(&lam),
                Group::O => in_yv(&lam),
            };
            if !inside || (trivial == 1) != in_class || trivial > 1 {
                fails.push(format!("{g} {lam}"));
            }
        }
    }
    s.sweep("containment_and_trivial.le8", n, fails);

    let (mut fails, mut n) = (Vec::new(), 0);
    for total in 0..=6 {
        for k in 0..=total {
            for mu in partitions_of(k) {
                for nu in partitions_of(total - k) {
                    for g in Group::all() {
                        n += 1;
                        let (lhs, rhs) = w_tensor_check(&mu, &nu, g);
                        if lhs != rhs {
                            fails.push(format!("{g} {mu} {nu}"));
                        }
                    }
                }
            }
        }
    }
    s.sweep("tensor.le6", n, fails);

    let (mut fails, mut n) = (Vec::new(), 0);
    let small = partitions_up_to(4);
    for mu in &small {
        for nu in &small {
            for lam in &partitions_up_to(mu.size() + nu.size()) {
                n += 1;
                let dsp = d_coefficient_in(Group::Sp, mu, nu, lam);
                let dor = d_coefficient_in(Group::O, mu, nu, lam);
                let top = lam.size() == mu.size() + nu.size();
                let gap = mu.size() + nu.size() - lam.size();
                let ok = dsp == dor
                    && (!top || dsp == lr_coefficient(lam, mu, nu) as i64)
                    && (gap % 2 == 0 || dsp == 0);
                if !ok {
                    fails.push(format!("{mu} {nu} {lam}"));
                }
            }
        }
    }
    s.sweep("d_coefficient.le4", n, fails);
}
