//! 4231 and 3412 pattern detection; `X_w` is singular iff one of them occurs.

use itertools::Itertools;
use serde::Serialize;

use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PatternKind {
    #[serde(rename = "4231")]
    P4231,
    #[serde(rename = "3412")]
    P3412,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PatternOccurrence {
    pub kind: PatternKind,
    /// Strictly increasing 1-indexed positions `(i, j, k, l)`.
    pub positions: [usize; 4],
}

impl PatternOccurrence {
    /// Checks the defining value inequalities against `w`.
    pub fn holds_in(&self, w: &Permutation) -> bool {
        let [i, j, k, l] = self.positions.map(|x| w.at(x));
        let increasing = self.positions.windows(2).all(|p| p[0] < p[1]);
        increasing
            && match self.kind {
                PatternKind::P4231 => l < j && j < k && k < i,
                PatternKind::P3412 => k < l && l < i && i < j,
            }
    }
}

/// All occurrences of either pattern, in lexicographic order of positions.
pub fn find_patterns(w: &Permutation) -> Vec<PatternOccurrence> {
    (1..=w.n())
        .combinations(4)
        .flat_map(|pos| {
            let positions = [pos[0], pos[1], pos[2], pos[3]];
            [PatternKind::P4231, PatternKind::P3412]
                .into_iter()
                .map(move |kind| PatternOccurrence { kind, positions })
        })
        .filter(|occ| occ.holds_in(w))
        .collect()
}

pub fn is_smooth(w: &Permutation) -> bool {
    find_patterns(w).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_occurrences() {
        let occ = find_patterns(&"4231".parse().unwrap());
        assert_eq!(
            occ,
            [PatternOccurrence {
                kind: PatternKind::P4231,
                positions: [1, 2, 3, 4]
            }]
        );
        let occ = find_patterns(&"3412".parse().unwrap());
        assert_eq!(
            occ,
            [PatternOccurrence {
                kind: PatternKind::P3412,
                positions: [1, 2, 3, 4]
            }]
        );
        assert!(find_patterns(&Permutation::identity(6)).is_empty());
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth(&Permutation::identity(5)));
        assert!(!is_smooth(&"4231".parse().unwrap()));
        assert_eq!(Permutation::all(4).filter(is_smooth).count(), 22);
        for n in 1..=3 {
            assert!(Permutation::all(n).all(|w| is_smooth(&w)));
        }
    }

    #[test]
    fn smoothness_symmetries() {
        for n in 4..=6 {
            let w0 = Permutation::longest(n);
            for w in Permutation::all(n) {
                let s = is_smooth(&w);
                assert_eq!(s, find_patterns(&w).is_empty());
                assert_eq!(s, is_smooth(&w.inverse()));
                let conj = w0.compose(&w).unwrap().compose(&w0).unwrap();
                assert_eq!(s, is_smooth(&conj), "{w}");
            }
        }
    }

    #[test]
    fn lexicographic_order() {
        let w: Permutation = "563412".parse().unwrap();
        let occ = find_patterns(&w);
        assert!(occ.len() > 1);
        assert!(occ.windows(2).all(|p| p[0].positions <= p[1].positions));
        assert!(occ.iter().all(|o| o.holds_in(&w)));
    }
}
