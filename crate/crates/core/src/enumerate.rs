//! Integer partitions, conjugacy-class generation and brute-force
//! distribution polynomials over classes, `S_{n,k}` and `S_{n,k,i}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::MultiPoly;
use crate::exec::{fold_items, Execution};
use crate::perm::{exc_cval_of_word, CycleType, Letter, PermError, Permutation};

/// Default enumeration guardrail: refuse classes with more members.
pub const DEFAULT_CLASS_CAP: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_CLASS_CAP`].
pub const CLASS_CAP_ENV: &str = "CYCLESTAT_CLASS_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error(
        "refusing to enumerate {size} permutations (cap {cap}; raise {CLASS_CAP_ENV} to override)"
    )]
    TooLarge { size: String, cap: u128 },
    #[error("invalid class spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Partitions of `n` in decreasing lexicographic order of their
/// weakly-decreasing part lists: `4, 31, 22, 211, 1111`.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    current: Option<Vec<usize>>,
}

impl PartitionIter {
    pub fn new(n: usize) -> Self {
        PartitionIter {
            current: Some(if n == 0 { vec![] } else { vec![n] }),
        }
    }
}

impl Iterator for PartitionIter {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        let current = self.current.take()?;
        let out = CycleType::from_parts(current.clone()).expect("positive parts");

        let mut next = current;
        let mut spill = 0;
        while next.last() == Some(&1) {
            next.pop();
            spill += 1;
        }
        if let Some(last) = next.pop() {
            let part = last - 1;
            let mut rest = spill + 1 + part;
            while rest > 0 {
                let take = part.min(rest);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn partitions_of(n: usize) -> Vec<CycleType> {
    PartitionIter::new(n).collect()
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `z_λ = Π i^{m_i} m_i!`, the order of the centralizer.
pub fn z_lambda(ct: &CycleType) -> BigUint {
    ct.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * BigUint::from(i).pow(m as u32) * factorial(m)
        })
}

/// `n!/z_λ`.
pub fn class_size(ct: &CycleType) -> BigUint {
    factorial(ct.n()) / z_lambda(ct)
}

/// A set of permutations closed under cyclic valley-hopping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum ClassSpec {
    /// The conjugacy class `S_n(λ)`.
    CycleType { lambda: CycleType },
    /// `S_{n,k}`: exactly `k` fixed points.
    FixedPoints { n: usize, k: usize },
    /// `S_{n,k,i}`: `k` fixed points and `i` cyclic valleys.
    FixedPointsAndCval { n: usize, k: usize, i: usize },
}

impl ClassSpec {
    pub fn cycle_type(lambda: CycleType) -> Self {
        ClassSpec::CycleType { lambda }
    }

    pub fn fixed_points(n: usize, k: usize) -> Result<Self, EnumError> {
        if k > n {
            return Err(EnumError::InvalidSpec(format!("k = {k} exceeds n = {n}")));
        }
        Ok(ClassSpec::FixedPoints { n, k })
    }

    pub fn fixed_points_and_cval(n: usize, k: usize, i: usize) -> Result<Self, EnumError> {
        if k > n {
            return Err(EnumError::InvalidSpec(format!("k = {k} exceeds n = {n}")));
        }
        if i > (n - k) / 2 {
            return Err(EnumError::InvalidSpec(format!(
                "i = {i} exceeds ⌊(n-k)/2⌋ = {}",
                (n - k) / 2
            )));
        }
        Ok(ClassSpec::FixedPointsAndCval { n, k, i })
    }

    pub fn n(&self) -> usize {
        match self {
            ClassSpec::CycleType { lambda } => lambda.n(),
            ClassSpec::FixedPoints { n, .. } | ClassSpec::FixedPointsAndCval { n, .. } => *n,
        }
    }

    /// Common fixed-point count `k` of all members.
    pub fn fixed_points_count(&self) -> usize {
        match self {
            ClassSpec::CycleType { lambda } => lambda.fixed_points(),
            ClassSpec::FixedPoints { k, .. } | ClassSpec::FixedPointsAndCval { k, .. } => *k,
        }
    }

    pub fn cval_filter(&self) -> Option<usize> {
        match self {
            ClassSpec::FixedPointsAndCval { i, .. } => Some(*i),
            _ => None,
        }
    }

    /// The conjugacy classes whose union contains the set.
    pub fn cycle_types(&self) -> Vec<CycleType> {
        match self {
            ClassSpec::CycleType { lambda } => vec![lambda.clone()],
            ClassSpec::FixedPoints { n, k } | ClassSpec::FixedPointsAndCval { n, k, .. } => {
                PartitionIter::new(*n)
                    .filter(|ct| ct.fixed_points() == *k)
                    .collect()
            }
        }
    }

    /// Number of permutations visited to enumerate the set.
    pub fn enumeration_size(&self) -> BigUint {
        self.cycle_types().iter().map(class_size).sum()
    }

    pub fn parse(input: &str) -> Result<Self, EnumError> {
        let trimmed = input.trim();
        if !trimmed.contains('=') {
            return Ok(ClassSpec::cycle_type(CycleType::parse(trimmed)?));
        }
        let (mut n, mut k, mut i) = (None, None, None);
        for field in trimmed.split(',') {
            let (key, value) = field.split_once('=').ok_or_else(|| {
                EnumError::InvalidSpec(format!("expected key=value in {input:?}"))
            })?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| EnumError::InvalidSpec(format!("{field:?}: {e}")))?;
            let slot = match key.trim() {
                "n" => &mut n,
                "k" => &mut k,
                "i" => &mut i,
                other => return Err(EnumError::InvalidSpec(format!("unknown key {other:?}"))),
            };
            *slot = Some(value);
        }
        match (n, k, i) {
            (Some(n), Some(k), None) => ClassSpec::fixed_points(n, k),
            (Some(n), Some(k), Some(i)) => ClassSpec::fixed_points_and_cval(n, k, i),
            _ => Err(EnumError::InvalidSpec(format!(
                "{input:?} needs n= and k=, optionally i="
            ))),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::CycleType { lambda } => write!(f, "lambda={lambda}"),
            ClassSpec::FixedPoints { n, k } => write!(f, "n={n},k={k}"),
            ClassSpec::FixedPointsAndCval { n, k, i } => write!(f, "n={n},k={k},i={i}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassSpec::parse(s)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct OpenCycle {
    anchor: Letter,
    prev: Letter,
    size: usize,
    len: usize,
}

impl OpenCycle {
    fn is_closed(&self) -> bool {
        self.len == self.size
    }
}

#[derive(Debug, Clone)]
struct Frame {
    options: Vec<usize>,
    idx: usize,
    opening: bool,
    saved: OpenCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

/// Depth-first generator of one conjugacy class.
///
/// Members are built in cycle notation: the smallest unused letter always
/// opens the next cycle, a choice is made for that cycle's length among the
/// remaining part sizes, and then its other letters are chosen in order.
/// Every member is produced exactly once, with no memory beyond the
/// current path.
#[derive(Debug, Clone)]
pub struct ClassWalker {
    n: usize,
    word: Vec<Letter>,
    used: Vec<bool>,
    remaining: Vec<usize>,
    cycle: OpenCycle,
    placed: usize,
    stack: Vec<Frame>,
    floor: usize,
    max_depth: usize,
    state: WalkState,
}

impl ClassWalker {
    pub fn new(ct: &CycleType) -> Self {
        let n = ct.n();
        let mut remaining = vec![0; n + 1];
        for &p in ct.parts() {
            remaining[p] += 1;
        }
        ClassWalker {
            n,
            word: vec![0; n],
            used: vec![false; n + 1],
            remaining,
            cycle: OpenCycle::default(),
            placed: 0,
            stack: Vec::with_capacity(n),
            floor: 0,
            max_depth: n,
            state: WalkState::Fresh,
        }
    }

    /// A walker restricted to the members whose first `prefix.len()`
    /// choices are the given option indices.
    pub fn with_prefix(ct: &CycleType, prefix: &[usize]) -> Self {
        let mut w = ClassWalker::new(ct);
        for &idx in prefix {
            let options = w.options();
            assert!(idx < options.len(), "prefix choice out of range");
            w.push(Frame {
                options,
                idx,
                opening: w.cycle.is_closed(),
                saved: w.cycle,
            });
        }
        w.floor = prefix.len();
        w
    }

    /// All choice prefixes of length `depth` (shorter if members are
    /// completed earlier); their walkers partition the class.
    pub fn prefixes(ct: &CycleType, depth: usize) -> Vec<Vec<usize>> {
        let mut w = ClassWalker::new(ct);
        w.max_depth = depth.min(w.n);
        let mut out = Vec::new();
        while w.step() {
            out.push(w.stack.iter().map(|f| f.idx).collect());
        }
        out
    }

    fn options(&self) -> Vec<usize> {
        if self.cycle.is_closed() {
            (1..=self.n).filter(|&s| self.remaining[s] > 0).collect()
        } else {
            (1..=self.n).filter(|&x| !self.used[x]).collect()
        }
    }

    fn apply(&mut self, frame: &Frame) {
        let choice = frame.options[frame.idx];
        if frame.opening {
            let anchor = (1..=self.n)
                .find(|&x| !self.used[x])
                .expect("unused letter") as Letter;
            self.used[anchor as usize] = true;
            self.remaining[choice] -= 1;
            self.cycle = OpenCycle {
                anchor,
                prev: anchor,
                size: choice,
                len: 1,
            };
        } else {
            let x = choice as Letter;
            self.used[choice] = true;
            self.word[self.cycle.prev as usize - 1] = x;
            self.cycle.prev = x;
            self.cycle.len += 1;
        }
        if self.cycle.is_closed() {
            self.word[self.cycle.prev as usize - 1] = self.cycle.anchor;
        }
        self.placed += 1;
    }

    fn undo(&mut self, frame: &Frame) {
        if frame.opening {
            self.used[self.cycle.anchor as usize] = false;
            self.remaining[frame.options[frame.idx]] += 1;
        } else {
            self.used[frame.options[frame.idx]] = false;
        }
        self.cycle = frame.saved;
        self.placed -= 1;
    }

    fn push(&mut self, frame: Frame) {
        self.apply(&frame);
        self.stack.push(frame);
    }

    fn descend(&mut self) {
        while self.placed < self.n && self.stack.len() < self.max_depth {
            let frame = Frame {
                options: self.options(),
                idx: 0,
                opening: self.cycle.is_closed(),
                saved: self.cycle,
            };
            self.push(frame);
        }
    }

    fn step(&mut self) -> bool {
        match self.state {
            WalkState::Done => false,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                self.descend();
                true
            }
            WalkState::Running => loop {
                if self.stack.len() <= self.floor {
                    self.state = WalkState::Done;
                    return false;
                }
                let mut top = self.stack.pop().expect("nonempty stack");
                self.undo(&top);
                top.idx += 1;
                if top.idx < top.options.len() {
                    self.push(top);
                    self.descend();
                    return true;
                }
            },
        }
    }

    /// The next class member's one-line word.
    pub fn next_word(&mut self) -> Option<&[Letter]> {
        if self.step() {
            debug_assert_eq!(self.placed, self.n);
            Some(&self.word)
        } else {
            None
        }
    }
}

/// Owning iterator over the members of a [`ClassSpec`].
pub struct ClassIter {
    types: std::vec::IntoIter<CycleType>,
    walker: Option<ClassWalker>,
    cval: Option<usize>,
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            if let Some(walker) = self.walker.as_mut() {
                while let Some(word) = walker.next_word() {
                    if self.cval.is_none_or(|i| exc_cval_of_word(word).1 == i) {
                        return Some(Permutation::from_word_unchecked(word.to_vec()));
                    }
                }
            }
            self.walker = Some(ClassWalker::new(&self.types.next()?));
        }
    }
}

/// Lazily streams the members of `spec` (no size guardrail).
pub fn iter_class(spec: &ClassSpec) -> ClassIter {
    ClassIter {
        types: spec.cycle_types().into_iter(),
        walker: None,
        cval: spec.cval_filter(),
    }
}

/// All of `S_n`, class by class.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    PartitionIter::new(n).flat_map(|ct| iter_class(&ClassSpec::cycle_type(ct)))
}

/// Joint `(cval, exc)` counts of an enumerated set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointTable {
    n: usize,
    counts: Vec<u64>,
}

impl JointTable {
    pub fn new(n: usize) -> Self {
        JointTable {
            n,
            counts: vec![0; (n / 2 + 1) * (n + 1)],
        }
    }

    #[inline]
    fn slot(&self, cval: usize, exc: usize) -> usize {
        cval * (self.n + 1) + exc
    }

    #[inline]
    pub fn record(&mut self, cval: usize, exc: usize) {
        let slot = self.slot(cval, exc);
        self.counts[slot] += 1;
    }

    pub fn get(&self, cval: usize, exc: usize) -> u64 {
        if cval > self.n / 2 || exc > self.n {
            return 0;
        }
        self.counts[self.slot(cval, exc)]
    }

    pub fn merge(mut self, other: JointTable) -> JointTable {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `|{π : cval(π) = i}|`.
    pub fn with_cval(&self, i: usize) -> u64 {
        (0..=self.n).map(|e| self.get(i, e)).sum()
    }

    /// `|{π : cval(π) = i, cdasc(π) = 0}|`, i.e. `exc = cval = i`.
    pub fn with_cval_no_cdasc(&self, i: usize) -> u64 {
        self.get(i, i)
    }

    /// `Σ s^cval t^exc`.
    pub fn joint(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for c in 0..=self.n / 2 {
            for e in 0..=self.n {
                let count = self.get(c, e);
                if count > 0 {
                    p.add_term(
                        (c as u32, e as u32),
                        num_rational::BigRational::from_integer(count.into()),
                    );
                }
            }
        }
        p
    }

    pub fn exc(&self) -> MultiPoly {
        MultiPoly::from_t_coeffs(
            (0..=self.n)
                .map(|e| (0..=self.n / 2).map(|c| self.get(c, e)).sum::<u64>())
                .collect(),
        )
    }

    pub fn cval(&self) -> MultiPoly {
        MultiPoly::from_t_coeffs((0..=self.n / 2).map(|c| self.with_cval(c)).collect())
    }
}

/// Choice depth used to split a class into independent chunks.
const SPLIT_DEPTH: usize = 3;

/// Enumeration settings: guardrail and execution strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    pub cap: u128,
    pub execution: Execution,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_CLASS_CAP,
            execution: Execution::default(),
        }
    }
}

impl Enumerator {
    pub fn sequential() -> Self {
        Enumerator {
            execution: Execution::Sequential,
            ..Default::default()
        }
    }

    pub fn with_cap(self, cap: u128) -> Self {
        Enumerator { cap, ..self }
    }

    pub fn with_execution(self, execution: Execution) -> Self {
        Enumerator { execution, ..self }
    }

    /// Defaults, with the cap taken from `CYCLESTAT_CLASS_CAP` when set.
    pub fn from_env() -> Result<Self, EnumError> {
        match std::env::var(CLASS_CAP_ENV) {
            Ok(raw) => {
                let cap =
                    raw.trim().replace('_', "").parse::<u128>().map_err(|e| {
                        EnumError::InvalidSpec(format!("{CLASS_CAP_ENV}={raw:?}: {e}"))
                    })?;
                Ok(Enumerator::default().with_cap(cap))
            }
            Err(_) => Ok(Enumerator::default()),
        }
    }

    pub fn check_size(&self, spec: &ClassSpec) -> Result<(), EnumError> {
        let size = spec.enumeration_size();
        if size.to_u128().is_none_or(|s| s > self.cap) {
            return Err(EnumError::TooLarge {
                size: size.to_string(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Folds every member word of `spec` into an accumulator.
    ///
    /// `merge` must be associative and commutative; the class is split by
    /// the first few construction choices and chunks may run concurrently.
    pub fn fold_words<A, Init, Step, Merge>(
        &self,
        spec: &ClassSpec,
        init: Init,
        step: Step,
        merge: Merge,
    ) -> Result<A, EnumError>
    where
        A: Send,
        Init: Fn() -> A + Sync + Send,
        Step: Fn(&mut A, &[Letter]) + Sync + Send,
        Merge: Fn(A, A) -> A + Sync + Send,
    {
        self.check_size(spec)?;
        let cval = spec.cval_filter();
        let chunks: Vec<(CycleType, Vec<usize>)> = spec
            .cycle_types()
            .into_iter()
            .flat_map(|ct| {
                let prefixes = if self.execution.is_parallel() {
                    ClassWalker::prefixes(&ct, SPLIT_DEPTH)
                } else {
                    vec![vec![]]
                };
                prefixes.into_iter().map(move |p| (ct.clone(), p))
            })
            .collect();
        Ok(fold_items(
            self.execution,
            &chunks,
            &init,
            |mut acc, (ct, prefix)| {
                let mut walker = ClassWalker::with_prefix(ct, prefix);
                while let Some(word) = walker.next_word() {
                    if cval.is_none_or(|i| exc_cval_of_word(word).1 == i) {
                        step(&mut acc, word);
                    }
                }
                acc
            },
            &merge,
        ))
    }

    pub fn joint_table(&self, spec: &ClassSpec) -> Result<JointTable, EnumError> {
        let n = spec.n();
        self.fold_words(
            spec,
            || JointTable::new(n),
            |table, word| {
                let (exc, cval) = exc_cval_of_word(word);
                table.record(cval, exc);
            },
            JointTable::merge,
        )
    }

    /// `E(Π; t) = Σ t^exc`.
    pub fn dist_exc(&self, spec: &ClassSpec) -> Result<MultiPoly, EnumError> {
        Ok(self.joint_table(spec)?.exc())
    }

    /// `Σ t^cval`.
    pub fn dist_cval(&self, spec: &ClassSpec) -> Result<MultiPoly, EnumError> {
        Ok(self.joint_table(spec)?.cval())
    }

    /// `Σ s^cval t^exc`.
    pub fn dist_joint(&self, spec: &ClassSpec) -> Result<MultiPoly, EnumError> {
        Ok(self.joint_table(spec)?.joint())
    }

    /// `|S_{n,k,i}|` by enumeration.
    pub fn count_snki(&self, n: usize, k: usize, i: usize) -> Result<u64, EnumError> {
        if k > n || i > (n - k) / 2 {
            return Ok(0);
        }
        Ok(self
            .joint_table(&ClassSpec::fixed_points_and_cval(n, k, i)?)?
            .total())
    }
}

pub fn dist_exc(spec: &ClassSpec) -> Result<MultiPoly, EnumError> {
    Enumerator::default().dist_exc(spec)
}

pub fn dist_cval(spec: &ClassSpec) -> Result<MultiPoly, EnumError> {
    Enumerator::default().dist_cval(spec)
}

pub fn dist_joint(spec: &ClassSpec) -> Result<MultiPoly, EnumError> {
    Enumerator::default().dist_joint(spec)
}

pub fn count_snki(n: usize, k: usize, i: usize) -> Result<u64, EnumError> {
    Enumerator::default().count_snki(n, k, i)
}
