//! Self-conjugate `(s, s+1, s+2)`-cores through the tilde poset.
//!
//! A self-conjugate partition is determined by its set of main-diagonal hooks,
//! a set of distinct odd integers. Those sets that come from `(s, s+1, s+2)`-cores
//! are exactly the lower ideals of the tilde poset (odd gaps of
//! `⟨2s, 2s+1, …, 2s+4⟩` lying above none of `s, s+1, s+2`) that contain no
//! forbidden pair `{h1, h2}` with `h1 + h2 ∈ {2s, 2s+2, 2s+4}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::gap_poset::GapPoset;
use crate::ideals::IdealSearch;
use crate::partition::{HookKind, HookSet, Partition};

#[derive(Debug, Clone)]
pub struct TildePoset {
    s: usize,
    ground: Vec<usize>,
    /// Indices of ground elements strictly below each element.
    below: Vec<Vec<usize>>,
    /// Hasse edges `(upper, lower)` of the induced order.
    covers: Vec<(usize, usize)>,
    /// `(h1, h2)` with `h1 <= h2`.
    forbidden: Vec<(usize, usize)>,
    ambient: GapPoset,
}

impl TildePoset {
    pub fn new(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("s must be at least 1".into()));
        }
        let gens: Vec<usize> = (2 * s..=2 * s + 4).collect();
        let ambient = GapPoset::new(&gens)?;
        // h is dropped when it equals or lies above any of s, s+1, s+2
        let above_core = |h: usize| (s..=s + 2).any(|x| h == x || ambient.less_than(x, h));
        let ground: Vec<usize> = ambient
            .ground()
            .iter()
            .copied()
            .filter(|&h| h % 2 == 1 && !above_core(h))
            .collect();
        let below: Vec<Vec<usize>> = ground
            .iter()
            .map(|&b| (0..ground.len()).filter(|&i| ambient.less_than(ground[i], b)).collect())
            .collect();
        let mut covers = Vec::new();
        for (bi, lower) in below.iter().enumerate() {
            for &ai in lower {
                let skipped = lower.iter().any(|&ci| ci != ai && below[ci].contains(&ai));
                if !skipped {
                    covers.push((ground[bi], ground[ai]));
                }
            }
        }
        covers.sort_unstable();
        let sums = [2 * s, 2 * s + 2, 2 * s + 4];
        let mut forbidden = Vec::new();
        for (i, &a) in ground.iter().enumerate() {
            for &b in &ground[i..] {
                if sums.contains(&(a + b)) {
                    forbidden.push((a, b));
                }
            }
        }
        Ok(Self {
            s,
            ground,
            below,
            covers,
            forbidden,
            ambient,
        })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn forbidden_pairs(&self) -> &[(usize, usize)] {
        &self.forbidden
    }

    pub fn contains(&self, h: usize) -> bool {
        self.ground.binary_search(&h).is_ok()
    }

    /// The order inherited from the gap poset of `⟨2s, …, 2s+4⟩`.
    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.contains(a) && self.contains(b) && self.ambient.less_than(a, b)
    }

    pub fn is_forbidden(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.forbidden.binary_search(&key).is_ok()
    }

    pub fn is_down_closed(&self, set: &[usize]) -> bool {
        set.iter().all(|&h| self.contains(h))
            && set.iter().all(|&h| {
                let i = self.ground.binary_search(&h).expect("checked");
                self.below[i].iter().all(|&j| set.contains(&self.ground[j]))
            })
    }

    /// The two order components: `Q` grows from the odd minimal elements below
    /// `s`, `R` from those strictly between `s + 2` and `2s`.
    pub fn components(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut q, mut r) = (Vec::new(), Vec::new());
        for (i, &h) in self.ground.iter().enumerate() {
            let base = self.below[i].iter().map(|&j| self.ground[j]).min().unwrap_or(h);
            if base < self.s {
                q.push(h);
            } else {
                r.push(h);
            }
        }
        (q, r)
    }

    fn conflict_tables(&self) -> (Vec<Vec<usize>>, Vec<bool>) {
        let n = self.ground.len();
        let mut conflicts = vec![Vec::new(); n];
        let mut self_conflict = vec![false; n];
        for &(a, b) in &self.forbidden {
            let ia = self.ground.binary_search(&a).expect("ground");
            let ib = self.ground.binary_search(&b).expect("ground");
            if ia == ib {
                self_conflict[ia] = true;
            } else {
                conflicts[ia.max(ib)].push(ia.min(ib));
            }
        }
        (conflicts, self_conflict)
    }

    /// Every down-closed subset, ignoring forbidden pairs.
    pub fn down_closed_subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let n = self.ground.len();
        IdealSearch::new(self.below.clone(), vec![Vec::new(); n], vec![false; n])
            .map(|idx| idx.into_iter().map(|i| self.ground[i]).collect())
    }

    /// Down-closed subsets containing no forbidden pair, ascending element lists.
    pub fn constrained_ideals(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let (conflicts, self_conflict) = self.conflict_tables();
        IdealSearch::new(self.below.clone(), conflicts, self_conflict)
            .map(|idx| idx.into_iter().map(|i| self.ground[i]).collect())
    }

    /// DOT with solid Hasse edges and dotted `forbidden=true` edges.
    pub fn to_dot(&self) -> String {
        let s = self.s;
        let mut out = format!("digraph \"tilde P_{{{},{},{}}}\" {{\n  rankdir=BT;\n", s, s + 1, s + 2);
        for h in &self.ground {
            let _ = writeln!(out, "  {h} [label=\"{h}\"];");
        }
        for (a, b) in &self.covers {
            let _ = writeln!(out, "  {b} -> {a};");
        }
        for (a, b) in &self.forbidden {
            let _ = writeln!(out, "  {a} -> {b} [dir=none, style=dotted, forbidden=true];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            s: usize,
            ground: &'a [usize],
            cover_edges: Vec<[usize; 2]>,
            forbidden_pairs: Vec<[usize; 2]>,
        }
        serde_json::to_string(&Out {
            s: self.s,
            ground: &self.ground,
            cover_edges: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            forbidden_pairs: self.forbidden.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("plain data")
    }
}

pub fn build_tilde_poset(s: usize) -> Result<TildePoset> {
    TildePoset::new(s)
}

pub fn forbidden_pairs(s: usize) -> Result<Vec<(usize, usize)>> {
    Ok(TildePoset::new(s)?.forbidden)
}

pub fn is_valid_md(md: &[usize], s: usize) -> Result<bool> {
    let poset = TildePoset::new(s)?;
    Ok(is_valid_md_in(&poset, md))
}

pub(crate) fn is_valid_md_in(poset: &TildePoset, md: &[usize]) -> bool {
    poset.is_down_closed(md)
        && md
            .iter()
            .enumerate()
            .all(|(i, &a)| md[i..].iter().all(|&b| !poset.is_forbidden(a, b)))
}

/// Both diagonal-hook conditions for a self-conjugate `t`-core:
/// `h > 2t ⇒ h − 2t ∈ md`, and no `h1 + h2 ≡ 0 (mod 2t)` (with `h1 = h2` allowed).
pub fn fms_conditions(md: &[usize], t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::InvalidModulus);
    }
    let m = 2 * t;
    let closed = md.iter().all(|&h| h <= m || md.contains(&(h - m)));
    let no_pair = md
        .iter()
        .enumerate()
        .all(|(i, &a)| md[i..].iter().all(|&b| (a + b) % m != 0));
    Ok(closed && no_pair)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScCoreWitness {
    pub s: usize,
    pub md: HookSet,
    #[serde(skip)]
    pub ideal: Vec<usize>,
    pub partition: Partition,
}

impl ScCoreWitness {
    fn from_ideal(s: usize, ideal: Vec<usize>) -> Self {
        let md = HookSet::new(ideal.clone(), HookKind::MainDiagonal).expect("distinct odd gaps");
        let partition = Partition::from_main_diagonal_hooks(md.values()).expect("distinct odd gaps");
        debug_assert_eq!(partition.is_simultaneous_core(&[s, s + 1, s + 2]), Ok(true));
        Self {
            s,
            md,
            ideal,
            partition,
        }
    }

    /// One JSON-lines record: `{"s":..,"md":[..],"partition":[..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

/// One witness per self-conjugate `(s, s+1, s+2)`-core.
pub fn enumerate_sc_cores(s: usize) -> Result<ScCores> {
    Ok(ScCores {
        poset: TildePoset::new(s)?,
        search: None,
    })
}

pub struct ScCores {
    poset: TildePoset,
    search: Option<IdealSearch>,
}

impl ScCores {
    pub fn poset(&self) -> &TildePoset {
        &self.poset
    }
}

impl Iterator for ScCores {
    type Item = ScCoreWitness;

    fn next(&mut self) -> Option<ScCoreWitness> {
        let poset = &self.poset;
        let search = self.search.get_or_insert_with(|| {
            let (conflicts, self_conflict) = poset.conflict_tables();
            IdealSearch::new(poset.below.clone(), conflicts, self_conflict)
        });
        let idx = search.next()?;
        let ideal = idx.into_iter().map(|i| poset.ground[i]).collect();
        Some(ScCoreWitness::from_ideal(poset.s, ideal))
    }
}

/// Number of self-conjugate `(s, s+1, s+2)`-cores; `s = 0` counts the empty partition.
pub fn count_sc_cores(s: usize) -> Count {
    if s == 0 {
        return Count::from(1u32);
    }
    let poset = TildePoset::new(s).expect("s >= 1");
    Count::from(poset.constrained_ideals().count())
}

fn check_phi_parameter(two_s: usize) -> Result<()> {
    if two_s % 2 == 1 {
        return Err(Error::PhiOddParameter);
    }
    if two_s < 4 {
        return Err(Error::InvalidParameter(format!(
            "phi parameter must be at least 4, got {two_s}"
        )));
    }
    Ok(())
}

/// Constrained ideals of the tilde poset for `(two_s, two_s+1, two_s+2)` that
/// contain `two_s − 1`, ascending element lists.
pub fn phi_domain(two_s: usize) -> Result<Vec<Vec<usize>>> {
    check_phi_parameter(two_s)?;
    let poset = TildePoset::new(two_s)?;
    Ok(poset
        .constrained_ideals()
        .filter(|ideal| ideal.contains(&(two_s - 1)))
        .collect())
}

/// The rewrite map on ideals containing `two_s − 1`.
///
/// With `4s = 2·two_s`: every `h ∈ I` in `[4s+5, 6s−1]` removes `h−4s−4, h−4s−2, h−4s`;
/// every `h ∈ I` in `[2s+7, 4s−1]` adds `4s−h, 4s−h+2, 4s−h+4`; then `two_s − 1`
/// is removed. Both rules read the original `I`.
pub fn phi(ideal: &[usize], two_s: usize) -> Result<Vec<usize>> {
    check_phi_parameter(two_s)?;
    let poset = TildePoset::new(two_s)?;
    let mut sorted = ideal.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ideal.len() || !sorted.contains(&(two_s - 1)) || !is_valid_md_in(&poset, &sorted) {
        return Err(Error::NotInPhiDomain);
    }
    let four_s = 2 * two_s;
    let six_s = 3 * two_s;
    let mut removed = BTreeSet::new();
    let mut added = BTreeSet::new();
    for &h in &sorted {
        if (four_s + 5..=six_s - 1).contains(&h) {
            removed.extend([h - four_s - 4, h - four_s - 2, h - four_s]);
        }
        if (two_s + 7..=four_s - 1).contains(&h) {
            added.extend([four_s - h, four_s - h + 2, four_s - h + 4]);
        }
    }
    let mut out: BTreeSet<usize> = sorted.into_iter().filter(|h| !removed.contains(h)).collect();
    out.extend(added);
    out.remove(&(two_s - 1));
    Ok(out.into_iter().collect())
}
