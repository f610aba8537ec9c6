//! Permutations in one-line notation, rank tables, length and Bruhat order.
//!
//! Positions and values are 1-indexed: `w.at(i)` is `w(i)` for `1 <= i <= n`.
//! Rank tables carry a zero 0-th row and column so that `r(p, q) - r(p - 1, q)`
//! is defined for every `p >= 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates `values` as one-line notation of a bijection on `{1..n}`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in &values {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {x} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("value {x} repeated")));
            }
        }
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    /// `w_0 = [n, n-1, ..., 1]`, the unique permutation of maximal length.
    pub fn longest(n: usize) -> Self {
        Self {
            values: (1..=n).rev().collect(),
        }
    }

    /// The transposition exchanging `i` and `j` (1-indexed, `i != j`).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut values: Vec<usize> = (1..=n).collect();
        values.swap(i - 1, j - 1);
        Self { values }
    }

    /// All `n(n-1)/2` transpositions, ordered by `(i, j)` with `i < j`.
    pub fn all_transpositions(n: usize) -> Vec<Self> {
        (1..=n)
            .tuple_combinations()
            .map(|(i, j)| Self::transposition(n, i, j))
            .collect()
    }

    /// Every element of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (1..=n).permutations(n).map(|values| Self { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `w(i)`, 1-indexed.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.n()];
        for (i, &x) in self.values.iter().enumerate() {
            values[x - 1] = i + 1;
        }
        Self { values }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_sizes(self, other)?;
        Ok(Self {
            values: other.values.iter().map(|&x| self.at(x)).collect(),
        })
    }

    /// Right multiplication by the transposition `(i j)`: swaps positions.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i - 1, j - 1);
        Self { values }
    }

    /// Left multiplication by the transposition `(a b)`: swaps values.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        Self {
            values: self
                .values
                .iter()
                .map(|&x| match x {
                    x if x == a => b,
                    x if x == b => a,
                    x => x,
                })
                .collect(),
        }
    }

    /// Number of inversions, i.e. the dimension of the Schubert cell.
    pub fn length(&self) -> usize {
        self.values
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    pub fn rank_table(&self) -> RankTable {
        RankTable::of(self)
    }

    /// Comma-separated one-line notation, e.g. `4,2,3,1`.
    pub fn to_comma_string(&self) -> String {
        self.values.iter().join(",")
    }

    /// Digit form `4231`, available when `n <= 9`.
    pub fn to_compact_string(&self) -> Option<String> {
        (self.n() <= 9).then(|| self.values.iter().join(""))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_compact_string() {
            Some(s) => f.write_str(&s),
            None => f.write_str(&self.to_comma_string()),
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_comma_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `4,2,3,1` (whitespace around entries allowed) or the digit
    /// form `4231` when the permutation has at most nine letters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad entry {:?} in {s:?}", tok.trim()))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            if s.chars().count() > 9 {
                return Err(Error::InvalidPermutation(format!(
                    "{s:?}: digit form only allowed for n <= 9, use commas"
                )));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::InvalidPermutation(format!("bad character {c:?} in {s:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(values)
    }
}

pub(crate) fn check_sizes(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        })
    }
}

/// The table `r_w(p, q) = #{i <= p : w(i) <= q}` for `0 <= p, q <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    r: Vec<usize>,
}

impl RankTable {
    pub fn of(w: &Permutation) -> Self {
        let n = w.n();
        let stride = n + 1;
        let mut r = vec![0; stride * stride];
        for p in 1..=n {
            let wp = w.at(p);
            for q in 1..=n {
                r[p * stride + q] = r[(p - 1) * stride + q] + usize::from(wp <= q);
            }
        }
        Self { n, r }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.r[p * (self.n + 1) + q]
    }

    /// Reads the permutation back: `w(p)` is the first column where row `p`
    /// gains a unit over row `p - 1`.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let values = (1..=self.n)
            .map(|p| {
                (1..=self.n)
                    .find(|&q| self.get(p, q) > self.get(p - 1, q))
                    .ok_or_else(|| {
                        Error::InvalidPermutation(format!("rank table row {p} has no jump"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }

    /// True iff `self(p, q) >= other(p, q)` everywhere.
    pub fn dominates(&self, other: &RankTable) -> bool {
        self.n == other.n && self.r.iter().zip(&other.r).all(|(a, b)| a >= b)
    }
}

/// Bruhat order: `v <= w` iff `r_v >= r_w` pointwise.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_sizes(v, w)?;
    Ok(bruhat_leq_unchecked(v, w))
}

/// Allocation-free rank comparison; both permutations must have the same size.
pub(crate) fn bruhat_leq_unchecked(v: &Permutation, w: &Permutation) -> bool {
    let n = v.n();
    debug_assert_eq!(n, w.n());
    // Row-by-row running counts #{i <= p : x(i) <= q}, kept as a difference.
    // diff[q] = r_v(p, q) - r_w(p, q) as p advances.
    let mut diff = [0i32; 64];
    let mut heap;
    let diff: &mut [i32] = if n < 64 {
        &mut diff[..=n]
    } else {
        heap = vec![0i32; n + 1];
        &mut heap
    };
    for p in 1..=n {
        let (a, b) = (v.at(p), w.at(p));
        if a < b {
            for d in &mut diff[a..b] {
                *d += 1;
            }
        } else if b < a {
            for d in &mut diff[b..a] {
                *d -= 1;
                if *d < 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Cells `(p, q)` with `1 <= p, q <= n`.
pub type Region = BTreeSet<(usize, usize)>;

/// The cells where `r_v > r_w`. Empty iff `v == w` (for `v <= w`).
pub fn region_d(v: &Permutation, w: &Permutation) -> Result<Region> {
    check_sizes(v, w)?;
    let (rv, rw) = (v.rank_table(), w.rank_table());
    let n = v.n();
    Ok((1..=n)
        .cartesian_product(1..=n)
        .filter(|&(p, q)| rv.get(p, q) > rw.get(p, q))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert!(Permutation::new(vec![1, 2, 3]).unwrap().is_identity());
        assert_eq!(Permutation::new(vec![4, 2, 3, 1]).unwrap().n(), 4);
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4,2,3,1"), p("4231"));
        assert_eq!(p(" 4, 2 ,3,1 "), p("4231"));
        assert_eq!(p("10,1,2,3,4,5,6,7,8,9").n(), 10);
        assert!("34,12".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("1,,2".parse::<Permutation>().is_err());
        assert_eq!(p("4231").to_string(), "4231");
        assert_eq!(p("4231").to_comma_string(), "4,2,3,1");
    }

    #[test]
    fn rank_table_values() {
        let id = Permutation::identity(5).rank_table();
        for a in 0..=5 {
            for b in 0..=5 {
                assert_eq!(id.get(a, b), a.min(b));
            }
        }
        assert_eq!(p("2413").rank_table().get(2, 2), 1);
        let r = p("4231").rank_table();
        assert_eq!(r.get(1, 3), 0);
        assert_eq!(r.get(3, 3), 2);
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(p("4231").length(), 5);
    }

    #[test]
    fn bruhat_examples() {
        let w = p("4231");
        assert!(bruhat_leq(&w, &w).unwrap());
        for u in Permutation::all(4) {
            assert!(bruhat_leq(&Permutation::identity(4), &u).unwrap());
        }
        assert!(bruhat_leq(&p("2143"), &w).unwrap());
        assert!(!bruhat_leq(&w, &p("2143")).unwrap());
        assert!(bruhat_leq(&p("123"), &w).is_err());
    }

    #[test]
    fn fast_bruhat_matches_rank_domination() {
        for n in 1..=5 {
            let perms: Vec<_> = Permutation::all(n).collect();
            let tables: Vec<_> = perms.iter().map(|x| x.rank_table()).collect();
            for (a, ta) in perms.iter().zip(&tables) {
                for (b, tb) in perms.iter().zip(&tables) {
                    assert_eq!(bruhat_leq_unchecked(a, b), ta.dominates(tb), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn region_examples() {
        let w = p("4231");
        assert!(region_d(&w, &w).unwrap().is_empty());
        let v = p("2143");
        let rv = v.rank_table();
        let rw = w.rank_table();
        let d = region_d(&v, &w).unwrap();
        assert!(!d.is_empty());
        for &(a, b) in &d {
            assert!((1..=3).contains(&a) && (1..=3).contains(&b));
            assert!(rv.get(a, b) > rw.get(a, b));
        }
    }

    #[test]
    fn group_operations() {
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(Permutation::longest(3), p("321"));
        assert_eq!(Permutation::all_transpositions(4).len(), 6);
        let w = p("35142");
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert!(w.compose(&p("123")).is_err());
        assert_eq!(w.swap_positions(1, 2), p("53142"));
        assert_eq!(w.swap_values(1, 2), p("35241"));
        let t = Permutation::transposition(5, 1, 2);
        assert_eq!(w.compose(&t).unwrap(), w.swap_positions(1, 2));
        assert_eq!(t.compose(&w).unwrap(), w.swap_values(1, 2));
    }
}
