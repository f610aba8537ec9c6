//! Exhaustive verification over `S_n`.
//!
//! For every `w`: pattern smoothness against the tangent oracle, then for each
//! component the classification, the tangent and codimension formulas, the
//! closed-form KL polynomial against the recursion, the free-coordinate count
//! and the full slice verdict.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::component::{classify_component, verify_formulas};
use crate::error::{Error, Result};
use crate::kl::{kl_closed_form, KlTable};
use crate::perm::Permutation;
use crate::slice::{build_slice, verify_slice_model};
use crate::smooth::is_smooth;
use crate::tangent::{maximal_elements, singular_points, tangent_dimension};

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Fan the permutations out over the rayon pool. Output is identical
    /// either way.
    pub parallel: bool,
    /// Called with the number of permutations finished so far.
    pub progress: Option<fn(usize, usize)>,
}

impl SweepOptions {
    pub fn new(n: usize, trials: usize, seed: u64) -> Self {
        Self {
            n,
            trials,
            seed,
            parallel: true,
            progress: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FailureWitness {
    pub w: Permutation,
    pub v: Option<Permutation>,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub smoothness: usize,
    pub classification: usize,
    pub formulas: usize,
    pub kl: usize,
    pub free_count: usize,
    pub slice: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub permutations_checked: usize,
    pub singular_count: usize,
    pub smooth_count: usize,
    pub component_pairs: usize,
    /// Component pairs per type label.
    pub types: BTreeMap<String, usize>,
    /// Failed checks per check family.
    pub failed_checks: CheckCounts,
    pub failures: usize,
    pub failure_witnesses: Vec<FailureWitness>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Default)]
struct Partial {
    singular: bool,
    pairs: usize,
    types: BTreeMap<String, usize>,
    counts: CheckCounts,
    failures: Vec<FailureWitness>,
}

fn check_one(w: &Permutation, table: &mut KlTable, trials: usize, seed: u64) -> Partial {
    let mut out = Partial::default();
    let fail = |out: &mut Partial, v: Option<&Permutation>, check: &str, detail: String| {
        match check {
            "smoothness" => out.counts.smoothness += 1,
            "classification" => out.counts.classification += 1,
            "formulas" => out.counts.formulas += 1,
            "kl" => out.counts.kl += 1,
            "free-count" => out.counts.free_count += 1,
            _ => out.counts.slice += 1,
        }
        out.failures.push(FailureWitness {
            w: w.clone(),
            v: v.cloned(),
            check: check.into(),
            detail,
        });
    };

    let sing = singular_points(w);
    out.singular = !sing.is_empty();
    if is_smooth(w) != sing.is_empty() {
        let detail = format!(
            "patterns say smooth = {}, oracle finds {} singular points",
            is_smooth(w),
            sing.len()
        );
        fail(&mut out, None, "smoothness", detail);
    }

    for v in maximal_elements(&sing) {
        out.pairs += 1;
        let c = match classify_component(&v, w) {
            Ok(c) => c,
            Err(e) => {
                fail(&mut out, Some(&v), "classification", e.to_string());
                continue;
            }
        };
        *out.types.entry(c.ctype.label().to_string()).or_default() += 1;

        if !verify_formulas(&c, w) {
            fail(&mut out, Some(&v), "formulas", format!("{c:?}"));
        }

        match table.polynomial(&v, w) {
            Ok(p) if p == kl_closed_form(&c) => {}
            Ok(p) => {
                let detail = format!("closed form {} vs recursion {p}", kl_closed_form(&c));
                fail(&mut out, Some(&v), "kl", detail);
            }
            Err(e) => fail(&mut out, Some(&v), "kl", e.to_string()),
        }

        let slice = match build_slice(&c, w) {
            Ok(s) => s,
            Err(e) => {
                fail(&mut out, Some(&v), "slice-shape", e.to_string());
                continue;
            }
        };
        let m = tangent_dimension(&v, w).map(|r| r.m).unwrap_or(0);
        if slice.free.len() + v.length() != m {
            let detail = format!(
                "{} free coordinates, m - l(v) = {}",
                slice.free.len(),
                m as i64 - v.length() as i64
            );
            fail(&mut out, Some(&v), "free-count", detail);
        }
        match verify_slice_model(&slice, trials, seed) {
            Ok(verdict) if verdict.all_ok() => {}
            Ok(verdict) => {
                let check = verdict
                    .witness
                    .as_ref()
                    .map_or("unknown".to_string(), |x| x.check.clone());
                fail(
                    &mut out,
                    Some(&v),
                    &format!("slice-{check}"),
                    format!("{verdict:?}"),
                );
            }
            Err(e) => fail(&mut out, Some(&v), "slice", e.to_string()),
        }
    }
    out
}

/// Runs every check over all of `S_n`, `2 <= n <= 8`.
pub fn cmd_verify_all(opts: &SweepOptions) -> Result<SweepReport> {
    let n = opts.n;
    if !(2..=8).contains(&n) {
        return Err(Error::SweepSize(n));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let total = perms.len();
    let done = AtomicUsize::new(0);
    let tick = || {
        let k = done.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(progress) = opts.progress {
            progress(k, total);
        }
    };

    let partials: Vec<Partial> = if opts.parallel {
        perms
            .par_iter()
            .map_init(KlTable::new, |table, w| {
                let p = check_one(w, table, opts.trials, opts.seed);
                tick();
                p
            })
            .collect()
    } else {
        let mut table = KlTable::new();
        perms
            .iter()
            .map(|w| {
                let p = check_one(w, &mut table, opts.trials, opts.seed);
                tick();
                p
            })
            .collect()
    };

    let mut report = SweepReport {
        n,
        trials: opts.trials,
        seed: opts.seed,
        permutations_checked: total,
        singular_count: 0,
        smooth_count: 0,
        component_pairs: 0,
        types: BTreeMap::new(),
        failed_checks: CheckCounts::default(),
        failures: 0,
        failure_witnesses: Vec::new(),
    };
    for p in partials {
        report.singular_count += usize::from(p.singular);
        report.component_pairs += p.pairs;
        for (k, c) in p.types {
            *report.types.entry(k).or_default() += c;
        }
        let c = &mut report.failed_checks;
        c.smoothness += p.counts.smoothness;
        c.classification += p.counts.classification;
        c.formulas += p.counts.formulas;
        c.kl += p.counts.kl;
        c.free_count += p.counts.free_count;
        c.slice += p.counts.slice;
        report.failure_witnesses.extend(p.failures);
    }
    report.smooth_count = total - report.singular_count;
    report.failure_witnesses.sort();
    report.failures = report.failure_witnesses.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_s3() {
        let r = cmd_verify_all(&SweepOptions::new(3, 10, 1)).unwrap();
        assert_eq!(r.permutations_checked, 6);
        assert_eq!(r.singular_count, 0);
        assert_eq!(r.failures, 0);
    }

    #[test]
    fn sweep_s4() {
        let r = cmd_verify_all(&SweepOptions::new(4, 50, 1)).unwrap();
        assert_eq!(r.permutations_checked, 24);
        assert_eq!(r.singular_count, 2);
        assert_eq!(r.smooth_count, 22);
        assert_eq!(r.component_pairs, 2);
        assert_eq!(r.failures, 0);
        assert!(r.passed());
    }

    #[test]
    fn size_guard() {
        assert!(cmd_verify_all(&SweepOptions::new(1, 1, 1)).is_err());
        assert!(cmd_verify_all(&SweepOptions::new(9, 1, 1)).is_err());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let mut opts = SweepOptions::new(5, 10, 99);
        let a = cmd_verify_all(&opts).unwrap();
        opts.parallel = false;
        let b = cmd_verify_all(&opts).unwrap();
        assert_eq!(a, b);
    }
}
