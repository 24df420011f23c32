//! Motzkin paths and `(s, k)`-generalized Dyck paths.
//!
//! "Stays above" is weak throughout: paths may touch the x-axis (Motzkin) or
//! the diagonal (generalized Dyck). Paths are compared by step sequence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::count::{binomial, catalan, Count};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinStep {
    D,
    F,
    U,
}

impl MotzkinStep {
    fn delta(self) -> isize {
        match self {
            MotzkinStep::D => -1,
            MotzkinStep::F => 0,
            MotzkinStep::U => 1,
        }
    }

    fn mirror(self) -> Self {
        match self {
            MotzkinStep::D => MotzkinStep::U,
            MotzkinStep::F => MotzkinStep::F,
            MotzkinStep::U => MotzkinStep::D,
        }
    }

    fn as_char(self) -> char {
        match self {
            MotzkinStep::D => 'D',
            MotzkinStep::F => 'F',
            MotzkinStep::U => 'U',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathText", into = "String")]
pub struct MotzkinPath {
    steps: Vec<MotzkinStep>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self> {
        let mut height = 0isize;
        for (i, s) in steps.iter().enumerate() {
            height += s.delta();
            if height < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath("does not end on the axis".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Reflection about the vertical line through the midpoint.
    pub fn reflect(&self) -> MotzkinPath {
        MotzkinPath {
            steps: self.steps.iter().rev().map(|s| s.mirror()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.steps.len();
        (0..n).all(|i| self.steps[n - 1 - i] == self.steps[i].mirror())
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' => Ok(MotzkinStep::U),
                'D' => Ok(MotzkinStep::D),
                'F' => Ok(MotzkinStep::F),
                other => Err(Error::InvalidPath(format!("unknown Motzkin step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

/// Input form: either a compact string `"UDF"` or an array `["U","D","F"]`.
#[derive(Deserialize)]
#[serde(untagged)]
enum PathText {
    Compact(String),
    Steps(Vec<String>),
}

impl TryFrom<PathText> for MotzkinPath {
    type Error = Error;

    fn try_from(text: PathText) -> Result<Self> {
        match text {
            PathText::Compact(s) => s.parse(),
            PathText::Steps(v) => v.concat().parse(),
        }
    }
}

impl From<MotzkinPath> for String {
    fn from(p: MotzkinPath) -> String {
        p.to_string()
    }
}

/// Motzkin paths of length `n` in lexicographic order with `D < F < U`.
pub fn enumerate_motzkin(n: usize) -> MotzkinPaths {
    MotzkinPaths {
        n,
        steps: Vec::with_capacity(n),
        heights: Vec::with_capacity(n + 1),
        started: false,
        done: false,
    }
}

pub struct MotzkinPaths {
    n: usize,
    steps: Vec<MotzkinStep>,
    // heights[i] = height before step i
    heights: Vec<usize>,
    started: bool,
    done: bool,
}

impl MotzkinPaths {
    /// Step from `height` at position `pos`, keeping the endpoint reachable.
    fn feasible(&self, pos: usize, height: usize, step: MotzkinStep) -> bool {
        let after = height as isize + step.delta();
        let remaining = (self.n - pos - 1) as isize;
        after >= 0 && after <= remaining
    }

    fn fill(&mut self) {
        while self.steps.len() < self.n {
            let pos = self.steps.len();
            let h = *self.heights.last().expect("seeded");
            let step = [MotzkinStep::D, MotzkinStep::F, MotzkinStep::U]
                .into_iter()
                .find(|&s| self.feasible(pos, h, s))
                .expect("a feasible prefix always extends");
            self.steps.push(step);
            self.heights.push((h as isize + step.delta()) as usize);
        }
    }

    fn bump(&mut self) -> bool {
        while let Some(last) = self.steps.pop() {
            self.heights.pop();
            let pos = self.steps.len();
            let h = *self.heights.last().expect("seeded");
            let next = [MotzkinStep::F, MotzkinStep::U]
                .into_iter()
                .filter(|&s| s > last)
                .find(|&s| self.feasible(pos, h, s));
            if let Some(step) = next {
                self.steps.push(step);
                self.heights.push((h as isize + step.delta()) as usize);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for MotzkinPaths {
    type Item = MotzkinPath;

    fn next(&mut self) -> Option<MotzkinPath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.heights.push(0);
            self.fill();
        } else if !self.bump() {
            self.done = true;
            return None;
        }
        Some(MotzkinPath {
            steps: self.steps.clone(),
        })
    }
}

/// `M_n = Σ_i C(n, 2i) · Catalan(i)`.
pub fn motzkin_number(n: usize) -> Count {
    let n = n as u64;
    (0..=n / 2).map(|i| binomial(n, 2 * i) * catalan(i)).sum()
}

pub fn is_symmetric_motzkin(p: &MotzkinPath) -> bool {
    p.is_symmetric()
}

/// `S_n = Σ_i C(⌊n/2⌋, i) · C(i, ⌊i/2⌋)`.
pub fn symmetric_motzkin_count(n: usize) -> Count {
    let half = (n / 2) as u64;
    (0..=half).map(|i| binomial(half, i) * binomial(i, i / 2)).sum()
}

/// `S_n` for even `n`, built only from the first-return recurrence
/// `S_{2m} = M_m + Σ_{k<m} S_{2m−2k−2} · M_k`.
pub fn symmetric_motzkin_by_recurrence(n: usize) -> Result<Count> {
    if n % 2 == 1 {
        return Err(Error::RecurrenceOddLength);
    }
    let m = n / 2;
    let motzkin: Vec<Count> = (0..=m).map(motzkin_number).collect();
    // even[j] = S_{2j}
    let mut even: Vec<Count> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut s = motzkin[j].clone();
        for k in 0..j {
            s += &even[j - k - 1] * &motzkin[k];
        }
        even.push(s);
    }
    Ok(even.pop().expect("m + 1 entries"))
}

/// Steps of an `(s, k)`-generalized Dyck path. `Diag(i)` is `D_i = (i, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenDyckStep {
    Diag(usize),
    East,
    North,
}

impl GenDyckStep {
    fn mirror(self) -> Self {
        match self {
            GenDyckStep::East => GenDyckStep::North,
            GenDyckStep::North => GenDyckStep::East,
            d => d,
        }
    }

    fn displacement(self, k: usize) -> (usize, usize) {
        match self {
            GenDyckStep::Diag(i) => (i, i),
            GenDyckStep::East => (k, 0),
            GenDyckStep::North => (0, k),
        }
    }
}

impl fmt::Display for GenDyckStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenDyckStep::Diag(i) => write!(f, "D{i}"),
            GenDyckStep::East => write!(f, "E"),
            GenDyckStep::North => write!(f, "N"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenDyckPath {
    k: usize,
    s: usize,
    steps: Vec<GenDyckStep>,
}

impl GenDyckPath {
    /// Validates the step set for `k`, the diagonal condition and a square endpoint.
    pub fn new(k: usize, steps: Vec<GenDyckStep>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let (mut x, mut y) = (0usize, 0usize);
        for (i, step) in steps.iter().enumerate() {
            if let GenDyckStep::Diag(d) = step {
                if *d == 0 || *d >= k {
                    return Err(Error::InvalidPath(format!("D{d} is not a step for k = {k}")));
                }
            }
            let (dx, dy) = step.displacement(k);
            x += dx;
            y += dy;
            if y < x {
                return Err(Error::InvalidPath(format!("goes below the diagonal at step {}", i + 1)));
            }
        }
        if x != y {
            return Err(Error::InvalidPath("does not end on the diagonal".into()));
        }
        Ok(Self { k, s: x, steps })
    }

    /// Parses the space-separated form, e.g. `"N E D1"`.
    pub fn parse(k: usize, text: &str) -> Result<Self> {
        let steps = text
            .split_whitespace()
            .map(|tok| match tok {
                "N" => Ok(GenDyckStep::North),
                "E" => Ok(GenDyckStep::East),
                _ => tok
                    .strip_prefix('D')
                    .and_then(|i| i.parse().ok())
                    .map(GenDyckStep::Diag)
                    .ok_or_else(|| Error::InvalidPath(format!("unknown step {tok:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        GenDyckPath::new(k, steps)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn steps(&self) -> &[GenDyckStep] {
        &self.steps
    }

    /// Reflection about `y = s − x`: reverse the steps and swap `N` with `E`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.steps.len();
        (0..n).all(|i| self.steps[n - 1 - i] == self.steps[i].mirror())
    }
}

impl fmt::Display for GenDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

pub fn is_symmetric_gen_dyck(p: &GenDyckPath) -> bool {
    p.is_symmetric()
}

/// All `(s, k)`-generalized Dyck paths, in lexicographic order with
/// `D_1 < … < D_{k−1} < E_k < N_k`.
pub fn enumerate_gen_dyck(s: usize, k: usize) -> Result<GenDyckPaths> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut choices: Vec<GenDyckStep> = (1..k).map(GenDyckStep::Diag).collect();
    choices.push(GenDyckStep::East);
    choices.push(GenDyckStep::North);
    Ok(GenDyckPaths {
        s,
        k,
        choices,
        stack: Vec::new(),
        points: vec![(0, 0)],
        started: false,
        done: false,
    })
}

pub struct GenDyckPaths {
    s: usize,
    k: usize,
    choices: Vec<GenDyckStep>,
    // indices into `choices`
    stack: Vec<usize>,
    points: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl GenDyckPaths {
    // From (x, y) with x <= y <= s the corner (s, s) is always reachable: east
    // steps back to the diagonal (y − x is a multiple of k), then unit diagonals,
    // or for k = 1 north to y = s and then east.
    fn feasible(&self, from: (usize, usize), choice: usize) -> Option<(usize, usize)> {
        let (dx, dy) = self.choices[choice].displacement(self.k);
        let (x, y) = (from.0 + dx, from.1 + dy);
        (x <= y && y <= self.s).then_some((x, y))
    }

    fn at_end(&self) -> bool {
        self.points.last() == Some(&(self.s, self.s))
    }

    fn extend_from(&mut self, start_choice: usize) -> bool {
        let here = *self.points.last().expect("origin");
        for c in start_choice..self.choices.len() {
            if let Some(next) = self.feasible(here, c) {
                self.stack.push(c);
                self.points.push(next);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) {
        while !self.at_end() {
            let extended = self.extend_from(0);
            debug_assert!(extended, "feasible prefixes always extend");
        }
    }

    fn bump(&mut self) -> bool {
        while let Some(last) = self.stack.pop() {
            self.points.pop();
            if self.extend_from(last + 1) {
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for GenDyckPaths {
    type Item = GenDyckPath;

    fn next(&mut self) -> Option<GenDyckPath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.bump() {
            self.done = true;
            return None;
        }
        Some(GenDyckPath {
            k: self.k,
            s: self.s,
            steps: self.stack.iter().map(|&c| self.choices[c]).collect(),
        })
    }
}

pub fn symmetric_gen_dyck_count(s: usize, k: usize) -> Result<Count> {
    Ok(Count::from(
        enumerate_gen_dyck(s, k)?.filter(GenDyckPath::is_symmetric).count(),
    ))
}

/// `U ↦ N_2`, `F ↦ D_1`, `D ↦ E_2`.
pub fn motzkin_to_gen_dyck(p: &MotzkinPath) -> GenDyckPath {
    let steps = p
        .steps()
        .iter()
        .map(|s| match s {
            MotzkinStep::U => GenDyckStep::North,
            MotzkinStep::F => GenDyckStep::Diag(1),
            MotzkinStep::D => GenDyckStep::East,
        })
        .collect();
    GenDyckPath::new(2, steps).expect("Motzkin paths map onto (s,2)-paths")
}

pub fn gen_dyck_to_motzkin(p: &GenDyckPath) -> Result<MotzkinPath> {
    if p.k() != 2 {
        return Err(Error::InvalidParameter(format!("expected k = 2, got {}", p.k())));
    }
    let steps = p
        .steps()
        .iter()
        .map(|s| match s {
            GenDyckStep::North => MotzkinStep::U,
            GenDyckStep::Diag(_) => MotzkinStep::F,
            GenDyckStep::East => MotzkinStep::D,
        })
        .collect();
    MotzkinPath::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    /// All strings over {D,F,U} of length n, kept when they pass the validator.
    fn motzkin_by_filter(n: usize) -> Vec<MotzkinPath> {
        let alphabet = [MotzkinStep::D, MotzkinStep::F, MotzkinStep::U];
        let mut out = Vec::new();
        for code in 0..3usize.pow(n as u32) {
            let mut c = code;
            let mut steps = vec![MotzkinStep::D; n];
            for slot in steps.iter_mut().rev() {
                *slot = alphabet[c % 3];
                c /= 3;
            }
            if let Ok(p) = MotzkinPath::new(steps) {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn motzkin_enumeration_examples() {
        let zero: Vec<_> = enumerate_motzkin(0).collect();
        assert_eq!(zero, vec![mp("")]);
        let two: Vec<String> = enumerate_motzkin(2).map(|p| p.to_string()).collect();
        assert_eq!(two, vec!["FF", "UD"]);
        assert_eq!(enumerate_motzkin(4).count(), 9);
    }

    #[test]
    fn motzkin_enumeration_is_ordered_and_complete() {
        for n in 0..=9 {
            let got: Vec<_> = enumerate_motzkin(n).collect();
            assert_eq!(got, motzkin_by_filter(n), "n={n}");
        }
    }

    #[test]
    fn motzkin_numbers() {
        let expected = [1u32, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511];
        for (n, &m) in expected.iter().enumerate() {
            assert_eq!(motzkin_number(n), Count::from(m));
        }
        for n in 0..=12 {
            assert_eq!(Count::from(enumerate_motzkin(n).count()), motzkin_number(n));
        }
    }

    #[test]
    fn symmetry_predicate() {
        assert!(mp("UDUD").is_symmetric());
        assert!(mp("FUDF").is_symmetric());
        assert!(!mp("UDFF").is_symmetric());
        assert_eq!(mp("UDFF").reflect(), mp("FFUD"));
        for n in 0..=8 {
            for p in enumerate_motzkin(n) {
                assert_eq!(p.is_symmetric(), p.reflect() == p);
            }
        }
    }

    #[test]
    fn symmetric_counts() {
        let expected = [1u32, 1, 2, 2, 5, 5, 13, 13, 35];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(symmetric_motzkin_count(n), Count::from(v), "S_{n}");
        }
        for n in 0..=12 {
            let filtered = enumerate_motzkin(n).filter(MotzkinPath::is_symmetric).count();
            assert_eq!(Count::from(filtered), symmetric_motzkin_count(n));
        }
        for n in 0..=7 {
            assert_eq!(symmetric_motzkin_count(2 * n + 1), symmetric_motzkin_count(2 * n));
        }
    }

    #[test]
    fn recurrence() {
        assert_eq!(symmetric_motzkin_by_recurrence(2), Ok(Count::from(2u32)));
        assert_eq!(symmetric_motzkin_by_recurrence(4), Ok(Count::from(5u32)));
        assert_eq!(symmetric_motzkin_by_recurrence(8), Ok(Count::from(35u32)));
        assert_eq!(symmetric_motzkin_by_recurrence(3), Err(Error::RecurrenceOddLength));
        for n in (0..=30).step_by(2) {
            assert_eq!(symmetric_motzkin_by_recurrence(n).unwrap(), symmetric_motzkin_count(n));
        }
    }

    #[test]
    fn gen_dyck_examples() {
        assert_eq!(enumerate_gen_dyck(2, 1).unwrap().count(), 2);
        assert_eq!(enumerate_gen_dyck(4, 2).unwrap().count(), 9);
        let one: Vec<String> = enumerate_gen_dyck(1, 2).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(one, vec!["D1"]);
        assert_eq!(enumerate_gen_dyck(0, 3).unwrap().count(), 1);
        assert!(enumerate_gen_dyck(3, 0).is_err());
    }

    #[test]
    fn gen_dyck_counts() {
        for s in 0..=10 {
            assert_eq!(
                Count::from(enumerate_gen_dyck(s, 1).unwrap().count()),
                catalan(s as u64)
            );
            assert_eq!(
                Count::from(enumerate_gen_dyck(s, 2).unwrap().count()),
                motzkin_number(s)
            );
        }
    }

    #[test]
    fn gen_dyck_paths_are_valid() {
        for k in 1..=4 {
            for s in 0..=8 {
                for p in enumerate_gen_dyck(s, k).unwrap() {
                    let again = GenDyckPath::new(k, p.steps().to_vec()).unwrap();
                    assert_eq!(again.s(), s);
                    assert_eq!(GenDyckPath::parse(k, &p.to_string()).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn gen_dyck_symmetry() {
        let p = GenDyckPath::parse(2, "N E").unwrap();
        assert!(p.is_symmetric());
        assert!(GenDyckPath::parse(2, "D1 D1").unwrap().is_symmetric());
        assert!(GenDyckPath::parse(1, "N N E E").unwrap().is_symmetric());
        assert!(GenDyckPath::parse(1, "N E N E").unwrap().is_symmetric());
        assert!(!GenDyckPath::parse(1, "N E N N E E").unwrap().is_symmetric());

        assert_eq!(symmetric_gen_dyck_count(4, 1), Ok(Count::from(6u32)));
        assert_eq!(symmetric_gen_dyck_count(4, 2), Ok(Count::from(5u32)));
        assert_eq!(symmetric_gen_dyck_count(0, 3), Ok(Count::from(1u32)));
        for s in 0..=10 {
            let sym = symmetric_gen_dyck_count(s, 1).unwrap();
            assert_eq!(sym, binomial(s as u64, (s / 2) as u64));
            assert_eq!(symmetric_gen_dyck_count(s, 2).unwrap(), symmetric_motzkin_count(s));
        }
    }

    #[test]
    fn invalid_paths() {
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("UU".parse::<MotzkinPath>().is_err());
        assert!("UX".parse::<MotzkinPath>().is_err());
        assert!(GenDyckPath::parse(2, "E N").is_err());
        assert!(GenDyckPath::parse(2, "D2").is_err());
        assert!(GenDyckPath::parse(2, "N").is_err());
    }

    #[test]
    fn k2_bijection() {
        for s in 0..=10 {
            let mut images: Vec<GenDyckPath> = enumerate_motzkin(s)
                .map(|p| {
                    let q = motzkin_to_gen_dyck(&p);
                    assert_eq!(gen_dyck_to_motzkin(&q).unwrap(), p);
                    assert_eq!(q.is_symmetric(), p.is_symmetric());
                    q
                })
                .collect();
            images.sort();
            let mut direct: Vec<_> = enumerate_gen_dyck(s, 2).unwrap().collect();
            direct.sort();
            assert_eq!(images, direct);
        }
    }

    #[test]
    fn serde_forms() {
        let p = mp("UDFF");
        assert_eq!(serde_json::to_string(&p).unwrap(), "\"UDFF\"");
        let back: MotzkinPath = serde_json::from_str("\"FUDF\"").unwrap();
        assert_eq!(back, mp("FUDF"));
        let arr: MotzkinPath = serde_json::from_str(r#"["U","F","D"]"#).unwrap();
        assert_eq!(arr, mp("UFD"));
    }
}
