//! Permutations in one-line and canonical cycle form, cycle types, and the
//! cyclic statistics (excedances, cyclic valleys/peaks/double ascents/double
//! descents, fixed points).
//!
//! Positions and letters are 1-indexed everywhere in the public API. The
//! word `w` of a permutation stores `π(i)` at `w[i - 1]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A letter of `[n]`.
pub type Letter = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("letter {0} appears more than once")]
    DuplicateLetter(Letter),
    #[error("letter {letter} is outside [1, {n}]")]
    OutOfRange { letter: Letter, n: usize },
    #[error("cycles do not partition [1, {0}]")]
    NotAPartitionOfN(usize),
    #[error("empty cycle")]
    EmptyCycle,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

fn parse_err(input: &str, reason: impl Into<String>) -> PermError {
    PermError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// A bijection on `[n]` stored in one-line form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct Permutation {
    word: Vec<Letter>,
}

impl Permutation {
    /// Builds a permutation from its one-line word `π(1) π(2) ... π(n)`.
    pub fn from_one_line(word: Vec<Letter>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &letter in &word {
            if letter == 0 || letter as usize > n {
                return Err(PermError::OutOfRange { letter, n });
            }
            if std::mem::replace(&mut seen[letter as usize], true) {
                return Err(PermError::DuplicateLetter(letter));
            }
        }
        Ok(Permutation { word })
    }

    /// The caller guarantees `word` is a bijection on `[n]`.
    pub(crate) fn from_word_unchecked(word: Vec<Letter>) -> Self {
        debug_assert!(Permutation::from_one_line(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as Letter).collect(),
        }
    }

    /// Builds a permutation from any list of disjoint cycles covering `[n]`.
    /// Each inner list `(a, b, c)` maps `a -> b -> c -> a`.
    pub fn from_cycles(cycles: &[Vec<Letter>]) -> Result<Self, PermError> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut word = vec![0; n];
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(PermError::EmptyCycle);
            }
            for (idx, &letter) in cycle.iter().enumerate() {
                if letter == 0 || letter as usize > n {
                    return Err(PermError::NotAPartitionOfN(n));
                }
                let slot = &mut word[letter as usize - 1];
                if *slot != 0 {
                    return Err(PermError::NotAPartitionOfN(n));
                }
                *slot = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Permutation { word })
    }

    pub fn from_cycle_form(form: &CycleForm) -> Self {
        Permutation::from_cycles(form.cycles()).expect("canonical cycle form is a valid partition")
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn into_word(self) -> Vec<Letter> {
        self.word
    }

    /// `π(i)` for `i` in `[n]`.
    pub fn apply(&self, i: Letter) -> Letter {
        self.word[i as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (pos, &letter) in self.word.iter().enumerate() {
            inv[letter as usize - 1] = pos as Letter + 1;
        }
        Permutation { word: inv }
    }

    pub fn to_cycle_form(&self) -> CycleForm {
        let n = self.word.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        // Scanning from n downwards meets each cycle first at its maximum.
        for start in (1..=n as Letter).rev() {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next as usize] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        CycleForm { cycles }
    }

    pub fn cycle_type(&self) -> CycleType {
        let parts = self.to_cycle_form().cycles.iter().map(Vec::len).collect();
        CycleType::from_parts(parts).expect("cycle lengths are positive")
    }

    /// Number of descents `i ∈ [n-1]` with `π(i) > π(i+1)`.
    pub fn des(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn stat_sets(&self) -> StatSets {
        let inv = self.inverse();
        let mut sets = StatSets::default();
        for i in 1..=self.word.len() as Letter {
            let next = self.apply(i);
            let prev = inv.apply(i);
            if next > i {
                sets.exc.insert(i);
            }
            let target = match (prev > i, next > i) {
                _ if next == i => &mut sets.fix,
                (true, true) => &mut sets.cval,
                (false, false) => &mut sets.cpk,
                (false, true) => &mut sets.cdasc,
                (true, false) => &mut sets.cddes,
            };
            target.insert(i);
        }
        sets
    }

    pub fn stat_counts(&self) -> StatCounts {
        StatCounts::of_word(&self.word)
    }

    /// Classification of the letter `x` by comparing `π⁻¹(x)`, `x`, `π(x)`.
    pub fn classify(&self, x: Letter) -> CyclicKind {
        let next = self.apply(x);
        if next == x {
            return CyclicKind::Fixed;
        }
        let mut prev = next;
        while self.apply(prev) != x {
            prev = self.apply(prev);
        }
        CyclicKind::from_neighbours(prev, x, next)
    }

    /// Parses either the comma-separated one-line form `"3,7,1"` or the
    /// cycle form `"(5,2,1)(6)"`.
    pub fn parse(input: &str) -> Result<Self, PermError> {
        let trimmed = input.trim();
        if trimmed.starts_with('(') {
            let form: CycleForm = trimmed.parse()?;
            Ok(Permutation::from_cycle_form(&form))
        } else if trimmed.is_empty() {
            Ok(Permutation::identity(0))
        } else {
            let word = parse_letters(trimmed, input)?;
            Permutation::from_one_line(word)
        }
    }

    /// Comma-separated one-line rendering.
    pub fn to_comma_string(&self) -> String {
        join_letters(&self.word)
    }
}

fn parse_letters(list: &str, input: &str) -> Result<Vec<Letter>, PermError> {
    list.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<Letter>()
                .map_err(|e| parse_err(input, format!("bad letter {:?}: {e}", tok.trim())))
        })
        .collect()
}

fn join_letters(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(Letter::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]", self.to_comma_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_comma_string())
    }
}

impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse(s)
    }
}

impl TryFrom<Vec<Letter>> for Permutation {
    type Error = PermError;
    fn try_from(word: Vec<Letter>) -> Result<Self, Self::Error> {
        Permutation::from_one_line(word)
    }
}

impl From<Permutation> for Vec<Letter> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

/// Canonical cycle representation: every cycle starts with its largest
/// letter and cycles are sorted by increasing largest letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    cycles: Vec<Vec<Letter>>,
}

impl CycleForm {
    /// Accepts cycles in any rotation and order and canonicalizes them.
    pub fn new(cycles: Vec<Vec<Letter>>) -> Result<Self, PermError> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        let mut canon = Vec::with_capacity(cycles.len());
        for mut cycle in cycles {
            if cycle.is_empty() {
                return Err(PermError::EmptyCycle);
            }
            for &letter in &cycle {
                if letter == 0 || letter as usize > n || seen[letter as usize] {
                    return Err(PermError::NotAPartitionOfN(n));
                }
                seen[letter as usize] = true;
            }
            let top = (0..cycle.len()).max_by_key(|&i| cycle[i]).unwrap();
            cycle.rotate_left(top);
            canon.push(cycle);
        }
        canon.sort_by_key(|c| c[0]);
        Ok(CycleForm { cycles: canon })
    }

    pub fn cycles(&self) -> &[Vec<Letter>] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "({})", join_letters(cycle))?;
        }
        Ok(())
    }
}

impl FromStr for CycleForm {
    type Err = PermError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let mut rest = input.trim();
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| parse_err(input, "expected '('"))?;
            let close = body
                .find(')')
                .ok_or_else(|| parse_err(input, "unclosed cycle"))?;
            let inner = body[..close].trim();
            if inner.is_empty() {
                return Err(PermError::EmptyCycle);
            }
            cycles.push(parse_letters(inner, input)?);
            rest = body[close + 1..].trim_start();
        }
        CycleForm::new(cycles)
    }
}

/// An integer partition of `n`, used as the cycle type of a conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Parts in any order; stored weakly increasing.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self, PermError> {
        if parts.contains(&0) {
            return Err(PermError::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable();
        Ok(CycleType { parts })
    }

    pub fn from_multiplicities(mult: &BTreeMap<usize, usize>) -> Result<Self, PermError> {
        let mut parts = Vec::new();
        for (&size, &count) in mult {
            parts.extend(std::iter::repeat_n(size, count));
        }
        CycleType::from_parts(parts)
    }

    /// The type `(1, 1, ..., 1)` of the identity of `S_n`.
    pub fn ones(n: usize) -> Self {
        CycleType { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `m_i`: the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut mult = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult
    }

    /// Number of fixed points of every member of the class.
    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    /// Accepts `"1,5,5"` or the multiplicity form `"1^1 5^2"`.
    pub fn parse(input: &str) -> Result<Self, PermError> {
        let trimmed = input.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Ok(CycleType { parts: vec![] });
        }
        let bad = |reason: String| parse_err(input, reason);
        if trimmed.contains('^') {
            let mut mult = BTreeMap::new();
            for tok in trimmed.split_whitespace() {
                let (size, count) = tok
                    .split_once('^')
                    .ok_or_else(|| bad(format!("expected size^count, got {tok:?}")))?;
                let size: usize = size.parse().map_err(|e| bad(format!("{e}")))?;
                let count: usize = count.parse().map_err(|e| bad(format!("{e}")))?;
                *mult.entry(size).or_insert(0) += count;
            }
            CycleType::from_multiplicities(&mult)
        } else {
            let parts = trimmed
                .split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|e| bad(format!("{e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            CycleType::from_parts(parts)
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CycleType {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CycleType::parse(s)
    }
}

/// How a letter sits relative to its cycle neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CyclicKind {
    Valley,
    Peak,
    DoubleAscent,
    DoubleDescent,
    Fixed,
}

impl CyclicKind {
    fn from_neighbours(prev: Letter, x: Letter, next: Letter) -> Self {
        match (prev > x, next > x) {
            (true, true) => CyclicKind::Valley,
            (false, false) => CyclicKind::Peak,
            (false, true) => CyclicKind::DoubleAscent,
            (true, false) => CyclicKind::DoubleDescent,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatSets {
    pub exc: BTreeSet<Letter>,
    pub cval: BTreeSet<Letter>,
    pub cpk: BTreeSet<Letter>,
    pub cdasc: BTreeSet<Letter>,
    pub cddes: BTreeSet<Letter>,
    pub fix: BTreeSet<Letter>,
}

impl StatSets {
    pub fn counts(&self) -> StatCounts {
        StatCounts {
            exc: self.exc.len(),
            cval: self.cval.len(),
            cpk: self.cpk.len(),
            cdasc: self.cdasc.len(),
            cddes: self.cddes.len(),
            fix: self.fix.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatCounts {
    pub exc: usize,
    pub cval: usize,
    pub cpk: usize,
    pub cdasc: usize,
    pub cddes: usize,
    pub fix: usize,
}

impl StatCounts {
    /// Counts straight from a one-line word without building the inverse.
    pub fn of_word(word: &[Letter]) -> Self {
        let mut c = StatCounts::default();
        for (pos, &next) in word.iter().enumerate() {
            let i = pos as Letter + 1;
            // `i` is the predecessor of `next`; classify `next` by looking at
            // `i` and `π(next)`, and classify excedances of `i` directly.
            if next > i {
                c.exc += 1;
            }
            if next == i {
                c.fix += 1;
                continue;
            }
            let after = word[next as usize - 1];
            match CyclicKind::from_neighbours(i, next, after) {
                CyclicKind::Valley => c.cval += 1,
                CyclicKind::Peak => c.cpk += 1,
                CyclicKind::DoubleAscent => c.cdasc += 1,
                CyclicKind::DoubleDescent => c.cddes += 1,
                CyclicKind::Fixed => unreachable!(),
            }
        }
        c
    }
}

/// `(exc, cval)` of a one-line word; the hot path of class enumeration.
#[inline]
pub fn exc_cval_of_word(word: &[Letter]) -> (usize, usize) {
    let mut exc = 0;
    let mut cval = 0;
    for (pos, &next) in word.iter().enumerate() {
        let i = pos as Letter + 1;
        if next > i {
            exc += 1;
        } else if next < i && next < word[next as usize - 1] {
            cval += 1;
        }
    }
    (exc, cval)
}

/// 1-indexed positions `i` whose entry exceeds every earlier entry.
pub fn left_to_right_maxima(word: &[Letter]) -> Vec<usize> {
    let mut best = None;
    let mut out = Vec::new();
    for (pos, &letter) in word.iter().enumerate() {
        if best.is_none_or(|b| letter > b) {
            best = Some(letter);
            out.push(pos + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(word: &[Letter]) -> Permutation {
        Permutation::from_one_line(word.to_vec()).unwrap()
    }

    fn set(xs: &[Letter]) -> BTreeSet<Letter> {
        xs.iter().copied().collect()
    }

    const RUNNING: &str = "(5,2,1)(6)(8)(11,9,10,4,3,7)";

    #[test]
    fn one_line_validation() {
        assert_eq!(perm(&[3, 7, 1, 8, 9, 6, 5, 4, 2]).len(), 9);
        assert_eq!(perm(&[1]), Permutation::identity(1));
        assert_eq!(
            Permutation::from_one_line(vec![2, 2, 1]),
            Err(PermError::DuplicateLetter(2))
        );
        assert!(matches!(
            Permutation::from_one_line(vec![0, 1, 2]),
            Err(PermError::OutOfRange { letter: 0, .. })
        ));
        assert!(Permutation::from_one_line(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn canonical_cycle_form() {
        let p = perm(&[6, 4, 9, 2, 3, 7, 1, 8, 5]);
        assert_eq!(p.to_cycle_form().to_string(), "(4,2)(7,1,6)(8)(9,5,3)");
        assert_eq!(
            Permutation::identity(3).to_cycle_form().to_string(),
            "(1)(2)(3)"
        );
        let q = perm(&[3, 7, 1, 8, 9, 6, 5, 4, 2]);
        assert_eq!(q.to_cycle_form().to_string(), "(3,1)(6)(8,4)(9,2,7,5)");
    }

    #[test]
    fn from_cycle_form_examples() {
        let form: CycleForm = "(4,2)(7,1,6)(8)(9,5,3)".parse().unwrap();
        assert_eq!(
            Permutation::from_cycle_form(&form),
            perm(&[6, 4, 9, 2, 3, 7, 1, 8, 5])
        );
        assert_eq!(Permutation::parse("(1)").unwrap(), Permutation::identity(1));

        let p = Permutation::parse(RUNNING).unwrap();
        let expect = [
            (5, 2),
            (2, 1),
            (1, 5),
            (6, 6),
            (8, 8),
            (11, 9),
            (9, 10),
            (10, 4),
            (4, 3),
            (3, 7),
            (7, 11),
        ];
        for (i, v) in expect {
            assert_eq!(p.apply(i), v, "π({i})");
        }
    }

    #[test]
    fn cycle_form_canonicalizes_rotations() {
        let form: CycleForm = "(3,9,5)(1,6,7)(8)(2,4)".parse().unwrap();
        assert_eq!(form.to_string(), "(4,2)(7,1,6)(8)(9,5,3)");
        assert!("(1,2)(2,3)".parse::<CycleForm>().is_err());
        assert!("(1,3)".parse::<CycleForm>().is_err());
        assert!("(1,2".parse::<CycleForm>().is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(
            perm(&[3, 7, 1, 8, 9, 6, 5, 4, 2]).cycle_type().parts(),
            &[1, 2, 2, 4]
        );
        assert_eq!(Permutation::identity(5).cycle_type(), CycleType::ones(5));
        assert_eq!(
            Permutation::parse(RUNNING).unwrap().cycle_type().parts(),
            &[1, 1, 3, 6]
        );
    }

    #[test]
    fn cycle_type_parsing() {
        let a = CycleType::parse("1,5,5").unwrap();
        let b = CycleType::parse("1^1 5^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.multiplicity(5), 2);
        assert_eq!(a.n(), 11);
        assert_eq!(CycleType::parse("5,1,5").unwrap(), a);
        assert!(CycleType::parse("1,0").is_err());
        assert!(CycleType::parse("x").is_err());
    }

    #[test]
    fn descents() {
        assert_eq!(perm(&[3, 7, 1, 8, 9, 6, 5, 4, 2]).des(), 5);
        assert_eq!(Permutation::identity(6).des(), 0);
        assert_eq!(perm(&[5, 4, 3, 2, 1]).des(), 4);
    }

    #[test]
    fn running_example_sets() {
        let sets = Permutation::parse(RUNNING).unwrap().stat_sets();
        assert_eq!(sets.exc, set(&[1, 3, 7, 9]));
        assert_eq!(sets.cval, set(&[1, 3, 9]));
        assert_eq!(sets.cpk, set(&[5, 10, 11]));
        assert_eq!(sets.cdasc, set(&[7]));
        assert_eq!(sets.cddes, set(&[2, 4]));
        assert_eq!(sets.fix, set(&[6, 8]));

        let id = Permutation::identity(4).stat_sets();
        assert!(id.exc.is_empty() && id.cval.is_empty() && id.cpk.is_empty());
        assert!(id.cdasc.is_empty() && id.cddes.is_empty());
        assert_eq!(id.fix, set(&[1, 2, 3, 4]));

        assert_eq!(
            perm(&[3, 7, 1, 8, 9, 6, 5, 4, 2]).stat_sets().exc,
            set(&[1, 2, 4, 5])
        );
    }

    #[test]
    fn counts() {
        let c = Permutation::parse(RUNNING).unwrap().stat_counts();
        assert_eq!(
            c,
            StatCounts {
                exc: 4,
                cval: 3,
                cpk: 3,
                cdasc: 1,
                cddes: 2,
                fix: 2
            }
        );
        assert_eq!(
            Permutation::identity(7).stat_counts(),
            StatCounts {
                fix: 7,
                ..Default::default()
            }
        );
        assert_eq!(
            perm(&[2, 3, 1]).stat_counts(),
            StatCounts {
                exc: 2,
                cval: 1,
                cpk: 1,
                cdasc: 1,
                cddes: 0,
                fix: 0
            }
        );
    }

    #[test]
    fn classify_matches_sets() {
        let p = Permutation::parse(RUNNING).unwrap();
        assert_eq!(p.classify(7), CyclicKind::DoubleAscent);
        assert_eq!(p.classify(4), CyclicKind::DoubleDescent);
        assert_eq!(p.classify(9), CyclicKind::Valley);
        assert_eq!(p.classify(11), CyclicKind::Peak);
        assert_eq!(p.classify(6), CyclicKind::Fixed);
    }

    #[test]
    fn maxima_scan() {
        assert_eq!(
            left_to_right_maxima(&[4, 2, 7, 1, 6, 8, 9, 5, 3]),
            vec![1, 3, 6, 7]
        );
        assert_eq!(left_to_right_maxima(&[1, 2, 3, 4]), vec![1, 2, 3, 4]);
        assert_eq!(left_to_right_maxima(&[4, 3, 2, 1]), vec![1]);
        assert!(left_to_right_maxima(&[]).is_empty());
    }

    #[test]
    fn empty_permutation() {
        let e = Permutation::identity(0);
        assert_eq!(e.stat_counts(), StatCounts::default());
        assert_eq!(e.to_cycle_form().cycles().len(), 0);
        assert_eq!(e.cycle_type().n(), 0);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Permutation::parse("2,3,1").unwrap(), perm(&[2, 3, 1]));
        assert_eq!(Permutation::parse("(3,1,2)").unwrap(), perm(&[2, 3, 1]));
        assert!(Permutation::parse("2,2,1").is_err());
        assert!(Permutation::parse("2,a").is_err());
    }
}
