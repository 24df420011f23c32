//! Gap posets of numerical semigroups.
//!
//! For a generator set `S` with `gcd(S) = 1` the gaps (positive integers that
//! are not nonnegative combinations of `S`) form a finite poset in which `a`
//! covers `b` exactly when `a − b ∈ S`. Its lower ideals are in bijection with
//! the simultaneous `S`-cores through the first-column hook encoding.

use std::fmt::Write as _;

use serde::Serialize;

use crate::count::{gcd_all, Count};
use crate::error::{Error, Result};
use crate::ideals::IdealSearch;
use crate::partition::Partition;

/// Whether `n` is a nonnegative integer combination of `gens`.
pub fn is_generated(n: usize, gens: &[usize]) -> bool {
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for m in 1..=n {
        reachable[m] = gens.iter().any(|&g| g >= 1 && g <= m && reachable[m - g]);
    }
    reachable[n]
}

/// Sieve of generated integers, long enough that everything past the end is generated.
fn generated_table(gens: &[usize]) -> Result<Vec<bool>> {
    validate_generators(gens)?;
    let step = *gens.iter().min().expect("nonempty");
    let mut table = vec![true];
    let mut run = 1;
    while run < step {
        let m = table.len();
        let hit = gens.iter().any(|&g| g <= m && table[m - g]);
        table.push(hit);
        run = if hit { run + 1 } else { 0 };
    }
    Ok(table)
}

fn validate_generators(gens: &[usize]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if gens.contains(&0) {
        return Err(Error::InvalidParameter("generators must be positive".into()));
    }
    if gcd_all(gens) != 1 {
        return Err(Error::InfiniteGapSet);
    }
    Ok(())
}

/// The gaps of the semigroup generated by `gens`, ascending.
pub fn semigroup_gaps(gens: &[usize]) -> Result<Vec<usize>> {
    let table = generated_table(gens)?;
    Ok((1..table.len()).filter(|&n| !table[n]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapPoset {
    generators: Vec<usize>,
    ground: Vec<usize>,
    /// `(a, b)` with `a` covering `b`.
    cover_edges: Vec<(usize, usize)>,
    /// For each ground index, the indices it covers.
    lower_covers: Vec<Vec<usize>>,
    generated: Vec<bool>,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    generators: &'a [usize],
    ground: &'a [usize],
    cover_edges: Vec<[usize; 2]>,
}

impl GapPoset {
    pub fn new(gens: &[usize]) -> Result<Self> {
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let generated = generated_table(&generators)?;
        let ground: Vec<usize> = (1..generated.len()).filter(|&n| !generated[n]).collect();
        let index_of = |v: usize| ground.binary_search(&v).ok();
        let mut cover_edges = Vec::new();
        let mut lower_covers = vec![Vec::new(); ground.len()];
        for (ai, &a) in ground.iter().enumerate() {
            for &g in &generators {
                if let Some(bi) = a.checked_sub(g).and_then(index_of) {
                    cover_edges.push((a, ground[bi]));
                    lower_covers[ai].push(bi);
                }
            }
        }
        cover_edges.sort_unstable();
        Ok(Self {
            generators,
            ground,
            cover_edges,
            lower_covers,
            generated,
        })
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.cover_edges
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.ground.binary_search(&n).is_ok()
    }

    /// Strict order: `a <_P b` iff both are gaps and `b − a` is a nonzero combination.
    pub fn less_than(&self, a: usize, b: usize) -> bool {
        if !(self.contains(a) && self.contains(b)) || b <= a {
            return false;
        }
        let d = b - a;
        d >= self.generated.len() || self.generated[d]
    }

    /// Whether `a` covers `b`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.cover_edges.binary_search(&(a, b)).is_ok()
    }

    pub fn is_lower_ideal(&self, elements: &[usize]) -> bool {
        elements.iter().all(|&b| self.contains(b))
            && elements.iter().all(|&b| {
                self.ground
                    .iter()
                    .filter(|&&a| self.less_than(a, b))
                    .all(|a| elements.contains(a))
            })
    }

    /// Lower ideals, each once, in include-before-exclude order over ascending elements.
    pub fn lower_ideals(&self) -> LowerIdeals<'_> {
        let n = self.len();
        LowerIdeals {
            ground: &self.ground,
            search: IdealSearch::new(self.lower_covers.clone(), vec![Vec::new(); n], vec![false; n]),
        }
    }

    pub fn count_lower_ideals(&self) -> Count {
        Count::from(self.lower_ideals().count())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PosetJson {
            generators: &self.generators,
            ground: &self.ground,
            cover_edges: self.cover_edges.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("plain data")
    }

    /// Hasse diagram in DOT, one node per gap and one edge per cover pair.
    pub fn to_dot(&self) -> String {
        let name = self
            .generators
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let mut out = format!("digraph \"P_{{{name}}}\" {{\n  rankdir=BT;\n");
        for g in &self.ground {
            let _ = writeln!(out, "  {g} [label=\"{g}\"];");
        }
        for (a, b) in &self.cover_edges {
            let _ = writeln!(out, "  {b} -> {a};");
        }
        out.push_str("}\n");
        out
    }
}

/// A down-closed set of gaps, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LowerIdeal {
    elements: Vec<usize>,
}

impl LowerIdeal {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub struct LowerIdeals<'a> {
    ground: &'a [usize],
    search: IdealSearch,
}

impl Iterator for LowerIdeals<'_> {
    type Item = LowerIdeal;

    fn next(&mut self) -> Option<LowerIdeal> {
        let idx = self.search.next()?;
        Some(LowerIdeal {
            elements: idx.into_iter().map(|i| self.ground[i]).collect(),
        })
    }
}

pub fn build_poset(gens: &[usize]) -> Result<GapPoset> {
    GapPoset::new(gens)
}

pub fn lower_ideals(p: &GapPoset) -> LowerIdeals<'_> {
    p.lower_ideals()
}

pub fn count_lower_ideals(p: &GapPoset) -> Count {
    p.count_lower_ideals()
}

/// Every simultaneous `gens`-core, one per lower ideal of the gap poset.
pub fn cores_from_ideals(gens: &[usize]) -> Result<Vec<Partition>> {
    let poset = GapPoset::new(gens)?;
    Ok(poset
        .lower_ideals()
        .map(|ideal| Partition::from_first_column_hooks(ideal.elements()).expect("ideal elements are distinct"))
        .collect())
}
