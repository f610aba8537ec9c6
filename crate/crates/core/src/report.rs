//! Per-permutation reports bundling every computed invariant.

use serde::Serialize;

use crate::component::{enumerate_components, Component};
use crate::error::Result;
use crate::kl::{kl_closed_form, KlPoly, KlTable};
use crate::perm::Permutation;
use crate::slice::{build_slice, verify_slice_model, SliceSummary, SliceVerdict};
use crate::smooth::{find_patterns, PatternOccurrence};

pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 20010501;

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    #[serde(flatten)]
    pub component: Component,
    pub kl: KlPoly,
    pub kl_recursion: KlPoly,
    pub slice: SliceSummary,
    pub verdict: SliceVerdict,
}

impl ComponentReport {
    pub fn ok(&self) -> bool {
        self.kl == self.kl_recursion && self.verdict.all_ok()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub w: Permutation,
    pub smooth: bool,
    pub witnesses: Vec<PatternOccurrence>,
    pub components: Vec<ComponentReport>,
}

/// Components of `Sing(X_w)` with their KL polynomials, slices and verdicts.
pub fn component_reports(
    w: &Permutation,
    table: &mut KlTable,
    trials: usize,
    seed: u64,
) -> Result<Vec<ComponentReport>> {
    enumerate_components(w)?
        .into_iter()
        .map(|c| {
            let kl_recursion = table.polynomial(&c.v, w)?;
            let slice = build_slice(&c, w)?;
            let verdict = verify_slice_model(&slice, trials, seed)?;
            Ok(ComponentReport {
                kl: kl_closed_form(&c),
                kl_recursion,
                slice: slice.summary(),
                verdict,
                component: c,
            })
        })
        .collect()
}

pub fn cmd_report(w: &Permutation, trials: usize, seed: u64) -> Result<Report> {
    let witnesses = find_patterns(w);
    Ok(Report {
        w: w.clone(),
        smooth: witnesses.is_empty(),
        witnesses,
        components: component_reports(w, &mut KlTable::new(), trials, seed)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::ComponentType;

    #[test]
    fn report_for_4231() {
        let r = cmd_report(&"4231".parse().unwrap(), 20, 1).unwrap();
        assert!(!r.smooth);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.components.len(), 1);
        let c = &r.components[0];
        assert_eq!(c.component.ctype, ComponentType::T4231);
        assert_eq!(c.kl.coeffs, [1, 1]);
        assert!(c.ok());
    }

    #[test]
    fn report_for_identity() {
        let r = cmd_report(&Permutation::identity(4), 20, 1).unwrap();
        assert!(r.smooth);
        assert!(r.components.is_empty());
    }
}
