//! Partitions, Young diagrams and hook lengths.
//!
//! Rows and columns are 1-based throughout, matching the usual `(i, j)` box
//! coordinates. Parts are kept weakly decreasing with no zero parts, so two
//! partitions are equal exactly when their part vectors are.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::count::{gcd, Count};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `h(i, j) = λ_i + λ'_j − i − j + 1`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if !self.contains_box(i, j) {
            return Err(Error::BoxNotInDiagram { row: i, col: j });
        }
        let col = self.parts.iter().take_while(|&&p| p >= j).count();
        Ok(self.part(i) + col + 1 - i - j)
    }

    /// All hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (r, &row) in self.parts.iter().enumerate() {
            for (c, &col) in conj.parts.iter().take(row).enumerate() {
                out.push(row + col - r - c - 1);
            }
        }
        out
    }

    pub fn is_t_core(&self, t: usize) -> Result<bool> {
        if t == 0 {
            return Err(Error::InvalidModulus);
        }
        Ok(self.hooks().iter().all(|h| h % t != 0))
    }

    pub fn is_simultaneous_core(&self, ts: &[usize]) -> Result<bool> {
        if ts.is_empty() {
            return Err(Error::EmptyModulusSet);
        }
        if ts.contains(&0) {
            return Err(Error::InvalidModulus);
        }
        Ok(self.hooks().iter().all(|h| ts.iter().all(|t| h % t != 0)))
    }

    /// Hook lengths `h(i, i)` along the main diagonal, descending.
    pub fn main_diagonal_hooks(&self) -> HookSet {
        let conj = self.conjugate();
        let values = (1..)
            .take_while(|&i| self.part(i) >= i)
            .map(|i| self.part(i) + conj.part(i) + 1 - 2 * i)
            .collect();
        HookSet {
            values,
            kind: HookKind::MainDiagonal,
        }
    }

    /// First-column hook lengths `λ_i + ℓ − i`, descending.
    pub fn first_column_hooks(&self) -> HookSet {
        let len = self.len();
        let values = self
            .parts
            .iter()
            .enumerate()
            .map(|(idx, &p)| p + len - idx - 1)
            .collect();
        HookSet {
            values,
            kind: HookKind::FirstColumn,
        }
    }

    /// The self-conjugate partition whose main-diagonal hooks are `md`.
    ///
    /// Each diagonal hook `h` contributes arm = leg = `(h − 1) / 2`.
    pub fn from_main_diagonal_hooks(md: &[usize]) -> Result<Partition> {
        let mut hooks = md.to_vec();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        if hooks.windows(2).any(|w| w[0] == w[1]) || hooks.iter().any(|h| h % 2 == 0) {
            return Err(Error::InvalidDiagonalHookSet);
        }
        let durfee = hooks.len();
        // Row i (1-based, i <= durfee) has length arm_i + i; column lengths agree.
        let lengths: Vec<usize> = hooks.iter().enumerate().map(|(idx, h)| (h - 1) / 2 + idx + 1).collect();
        let mut parts = lengths.clone();
        let depth = lengths.first().copied().unwrap_or(0);
        for i in durfee + 1..=depth {
            parts.push(lengths.iter().filter(|&&c| c >= i).count());
        }
        Partition::new(parts)
    }

    /// Inverse of [`Partition::first_column_hooks`]: `λ_i = h_i − (ℓ − i)`.
    pub fn from_first_column_hooks(hooks: &[usize]) -> Result<Partition> {
        let mut sorted = hooks.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.contains(&0) {
            return Err(Error::InvalidHookSet);
        }
        let len = sorted.len();
        let parts = sorted.iter().enumerate().map(|(idx, h)| h - (len - idx - 1)).collect();
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HookKind {
    FirstColumn,
    MainDiagonal,
}

/// A set of distinct hook lengths, kept in descending order.
///
/// Serializes as a bare JSON array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookSet {
    values: Vec<usize>,
    kind: HookKind,
}

impl Serialize for HookSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl HookSet {
    pub fn new(mut values: Vec<usize>, kind: HookKind) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        if values.windows(2).any(|w| w[0] == w[1]) || values.contains(&0) {
            return Err(match kind {
                HookKind::MainDiagonal => Error::InvalidDiagonalHookSet,
                HookKind::FirstColumn => Error::InvalidHookSet,
            });
        }
        Ok(Self { values, kind })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn kind(&self) -> HookKind {
        self.kind
    }

    pub fn contains(&self, h: usize) -> bool {
        self.values.binary_search_by(|v| h.cmp(v)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn hook_length(p: &Partition, i: usize, j: usize) -> Result<usize> {
    p.hook_length(i, j)
}

pub fn is_t_core(p: &Partition, t: usize) -> Result<bool> {
    p.is_t_core(t)
}

pub fn is_simultaneous_core(p: &Partition, ts: &[usize]) -> Result<bool> {
    p.is_simultaneous_core(ts)
}

pub fn is_self_conjugate(p: &Partition) -> bool {
    p.is_self_conjugate()
}

pub fn main_diagonal_hooks(p: &Partition) -> HookSet {
    p.main_diagonal_hooks()
}

pub fn sc_partition_from_md(md: &HookSet) -> Result<Partition> {
    Partition::from_main_diagonal_hooks(md.values())
}

pub fn first_column_hooks(p: &Partition) -> HookSet {
    p.first_column_hooks()
}

pub fn partition_from_first_column_hooks(h: &HookSet) -> Result<Partition> {
    Partition::from_first_column_hooks(h.values())
}

/// Every self-conjugate partition of weight at most `cap`, built from sets of
/// distinct odd diagonal hooks. Order: by the descending hook sequence,
/// lexicographically with smaller leading hooks first; `()` comes first.
pub fn enumerate_self_conjugate(cap: usize) -> impl Iterator<Item = Partition> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(max_hook: usize, budget: usize, chosen: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_main_diagonal_hooks(chosen).expect("distinct odd hooks"));
        let mut h = 1;
        while h < max_hook && h <= budget {
            chosen.push(h);
            rec(h, budget - h, chosen, out);
            chosen.pop();
            h += 2;
        }
    }
    // Next hook must be smaller than the previous one; seed with an odd bound above cap.
    rec(cap + 2, cap, &mut chosen, &mut out);
    out.into_iter()
}

/// Every partition of weight at most `cap` that is a simultaneous core for `ts`.
///
/// Rows are added on top of the diagram one at a time (bottom-up). Adding a top
/// row never changes a hook length of the rows below it, so each new row's hooks
/// are final the moment they are computed and any box with a hook divisible by a
/// modulus cuts the branch. Every node of the search is itself a core, which keeps
/// the search proportional to the number of cores rather than all partitions.
pub fn brute_force_cores(ts: &[usize], cap: usize) -> Result<Vec<Partition>> {
    if ts.is_empty() {
        return Err(Error::EmptyModulusSet);
    }
    if ts.contains(&0) {
        return Err(Error::InvalidModulus);
    }
    struct Search<'a> {
        ts: &'a [usize],
        cap: usize,
        // column_heights[j - 1] = rows placed so far with length >= j
        column_heights: Vec<usize>,
        rows: Vec<usize>,
        out: Vec<Partition>,
    }
    impl Search<'_> {
        fn visit(&mut self, weight: usize) {
            let mut parts = self.rows.clone();
            parts.reverse();
            self.out.push(Partition { parts });
            let min_len = self.rows.last().copied().unwrap_or(1);
            for len in min_len..=self.cap - weight {
                let ok = (1..=len).all(|j| {
                    let hook = len - j + self.column_heights[j - 1] + 1;
                    self.ts.iter().all(|t| !hook.is_multiple_of(*t))
                });
                if !ok {
                    continue;
                }
                for h in &mut self.column_heights[..len] {
                    *h += 1;
                }
                self.rows.push(len);
                self.visit(weight + len);
                self.rows.pop();
                for h in &mut self.column_heights[..len] {
                    *h -= 1;
                }
            }
        }
    }
    let mut search = Search {
        ts,
        cap,
        column_heights: vec![0; cap],
        rows: Vec::new(),
        out: Vec::new(),
    };
    search.visit(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Number of (optionally self-conjugate) simultaneous `ts`-cores of weight at most `cap`.
pub fn brute_force_core_count(ts: &[usize], cap: usize, self_conjugate_only: bool) -> Result<Count> {
    let cores = brute_force_cores(ts, cap)?;
    let n = if self_conjugate_only {
        cores.iter().filter(|p| p.is_self_conjugate()).count()
    } else {
        cores.len()
    };
    Ok(Count::from(n))
}

/// `(s² − 1)(t² − 1) / 24`, the size of the largest `(s, t)`-core.
pub fn anderson_size_cap(s: usize, t: usize) -> Result<usize> {
    if s == 0 || t == 0 || gcd(s, t) != 1 {
        return Err(Error::NonCoprimePair(s, t));
    }
    Ok((s * s - 1) * (t * t - 1) / 24)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All partitions of exactly `n`, parts bounded by `max`.
    fn partitions_of(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for mut rest in partitions_of(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    fn all_up_to(w: usize) -> Vec<Partition> {
        (0..=w)
            .flat_map(|n| partitions_of(n, n))
            .map(|v| Partition::new(v).unwrap())
            .collect()
    }

    /// Hook multiset straight from the definition: arm + leg + 1 by counting boxes.
    fn hooks_by_counting(p: &Partition) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 1..=p.len() {
            for j in 1..=p.part(i) {
                let arm = p.part(i) - j;
                let leg = (i + 1..=p.len()).filter(|&r| p.part(r) >= j).count();
                out.push(arm + leg + 1);
            }
        }
        out
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 2]).conjugate(), p(&[3, 3, 2, 2, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
    }

    #[test]
    fn hook_length_examples() {
        let lam = p(&[5, 4, 2]);
        assert_eq!(lam.hook_length(1, 1), Ok(7));
        assert_eq!(lam.hook_length(1, 5), Ok(1));
        assert_eq!(p(&[1]).hook_length(1, 1), Ok(1));
        assert_eq!(lam.hook_length(3, 3), Err(Error::BoxNotInDiagram { row: 3, col: 3 }));
        assert!(lam.hook_length(0, 1).is_err());
    }

    #[test]
    fn hooks_agree_with_box_counting() {
        for lam in all_up_to(10) {
            let mut a = lam.hooks();
            let mut b = hooks_by_counting(&lam);
            a.sort();
            b.sort();
            assert_eq!(a, b, "{lam}");
        }
    }

    #[test]
    fn core_examples() {
        let lam = p(&[6, 3, 3, 1, 1, 1]);
        for t in [8, 9, 10] {
            assert_eq!(lam.is_t_core(t), Ok(true));
        }
        assert_eq!(p(&[]).is_t_core(5), Ok(true));
        assert_eq!(p(&[2, 1]).is_t_core(3), Ok(false));
        assert_eq!(p(&[2, 1]).is_t_core(0), Err(Error::InvalidModulus));

        assert_eq!(lam.is_simultaneous_core(&[8, 9, 10]), Ok(true));
        assert_eq!(p(&[1]).is_simultaneous_core(&[2, 3]), Ok(true));
        assert_eq!(p(&[2, 1]).is_simultaneous_core(&[3, 4]), Ok(false));
        assert_eq!(p(&[1]).is_simultaneous_core(&[]), Err(Error::EmptyModulusSet));
    }

    #[test]
    fn self_conjugate_examples() {
        assert!(p(&[6, 3, 3, 1, 1, 1]).is_self_conjugate());
        assert!(!p(&[5, 4, 2]).is_self_conjugate());
        assert!(p(&[]).is_self_conjugate());
    }

    #[test]
    fn diagonal_hooks() {
        assert_eq!(p(&[6, 3, 3, 1, 1, 1]).main_diagonal_hooks().values(), &[11, 3, 1]);
        assert!(p(&[]).main_diagonal_hooks().is_empty());
        assert_eq!(p(&[5, 4, 2]).main_diagonal_hooks().values(), &[7, 4]);
    }

    #[test]
    fn from_diagonal_hooks() {
        assert_eq!(
            Partition::from_main_diagonal_hooks(&[11, 3, 1]),
            Ok(p(&[6, 3, 3, 1, 1, 1]))
        );
        assert_eq!(Partition::from_main_diagonal_hooks(&[]), Ok(p(&[])));
        assert_eq!(Partition::from_main_diagonal_hooks(&[5, 3]), Ok(p(&[3, 3, 2])));
        assert_eq!(p(&[3, 3, 2]).main_diagonal_hooks().values(), &[5, 3]);
        assert_eq!(
            Partition::from_main_diagonal_hooks(&[3, 3]),
            Err(Error::InvalidDiagonalHookSet)
        );
        assert_eq!(
            Partition::from_main_diagonal_hooks(&[4, 1]),
            Err(Error::InvalidDiagonalHookSet)
        );
    }

    #[test]
    fn first_column() {
        assert_eq!(p(&[5, 4, 2]).first_column_hooks().values(), &[7, 5, 2]);
        assert!(p(&[]).first_column_hooks().is_empty());
        assert_eq!(p(&[1, 1, 1]).first_column_hooks().values(), &[3, 2, 1]);

        assert_eq!(Partition::from_first_column_hooks(&[7, 5, 2]), Ok(p(&[5, 4, 2])));
        assert_eq!(Partition::from_first_column_hooks(&[]), Ok(p(&[])));
        assert_eq!(Partition::from_first_column_hooks(&[3, 2, 1]), Ok(p(&[1, 1, 1])));
        assert_eq!(Partition::from_first_column_hooks(&[2, 2]), Err(Error::InvalidHookSet));
    }

    #[test]
    fn first_column_round_trip() {
        for lam in all_up_to(12) {
            let h = lam.first_column_hooks();
            assert_eq!(partition_from_first_column_hooks(&h).unwrap(), lam);
        }
    }

    #[test]
    fn conjugation_invariants() {
        for lam in all_up_to(20) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
        for lam in all_up_to(12) {
            let mut a = lam.hooks();
            let mut b = lam.conjugate().hooks();
            a.sort();
            b.sort();
            assert_eq!(a, b);
            for t in 1..=6 {
                assert_eq!(lam.is_t_core(t), lam.conjugate().is_t_core(t));
            }
            assert_eq!(lam.is_t_core(1).unwrap(), lam.is_empty());
        }
    }

    #[test]
    fn self_conjugate_enumeration() {
        let got: Vec<_> = enumerate_self_conjugate(0).collect();
        assert_eq!(got, vec![p(&[])]);
        let got: Vec<_> = enumerate_self_conjugate(2).collect();
        assert_eq!(got, vec![p(&[]), p(&[1])]);
        let got: Vec<_> = enumerate_self_conjugate(4).collect();
        assert_eq!(got.len(), 4);
        for q in [p(&[]), p(&[1]), p(&[2, 1]), p(&[2, 2])] {
            assert!(got.contains(&q));
        }
    }

    #[test]
    fn self_conjugate_enumeration_matches_filter() {
        let mut by_filter: Vec<_> = all_up_to(30).into_iter().filter(|q| q.is_self_conjugate()).collect();
        let mut by_hooks: Vec<_> = enumerate_self_conjugate(30).collect();
        for q in &by_hooks {
            let md = q.main_diagonal_hooks();
            assert_eq!(md.sum(), q.weight());
            assert!(md.values().iter().all(|h| h % 2 == 1));
            assert_eq!(sc_partition_from_md(&md).unwrap(), *q);
        }
        by_filter.sort();
        by_hooks.sort();
        assert_eq!(by_filter, by_hooks);
    }

    #[test]
    fn pruned_search_matches_exhaustive_filter() {
        let everything = all_up_to(14);
        for ts in [
            vec![2],
            vec![3],
            vec![2, 3],
            vec![3, 4],
            vec![3, 5],
            vec![4, 5, 6],
            vec![5],
        ] {
            let mut naive: Vec<_> = everything
                .iter()
                .filter(|q| q.is_simultaneous_core(&ts).unwrap())
                .cloned()
                .collect();
            naive.sort();
            assert_eq!(brute_force_cores(&ts, 14).unwrap(), naive, "ts={ts:?}");
        }
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(brute_force_core_count(&[3, 4], 5, false), Ok(Count::from(5u32)));
        assert_eq!(brute_force_core_count(&[2, 3], 1, false), Ok(Count::from(2u32)));
        let cap = anderson_size_cap(8, 9).unwrap();
        assert_eq!(brute_force_core_count(&[8, 9, 10], cap, true), Ok(Count::from(35u32)));
    }

    #[test]
    fn size_cap() {
        assert_eq!(anderson_size_cap(2, 3), Ok(1));
        assert_eq!(anderson_size_cap(3, 4), Ok(5));
        assert_eq!(anderson_size_cap(8, 9), Ok(210));
        assert_eq!(anderson_size_cap(2, 4), Err(Error::NonCoprimePair(2, 4)));
        // the largest (3,4)-core really has weight 5
        let cores = brute_force_cores(&[3, 4], 20).unwrap();
        assert_eq!(cores.iter().map(|c| c.weight()).max(), Some(5));
    }

    #[test]
    fn serde_shape() {
        let lam = p(&[6, 3, 3, 1, 1, 1]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[6,3,3,1,1,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,3,2]").unwrap();
        assert_eq!(back, p(&[3, 3, 2]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
        let md = lam.main_diagonal_hooks();
        assert_eq!(serde_json::to_string(&md).unwrap(), "[11,3,1]");
    }

    #[test]
    fn invalid_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }
}
