//! Foata's fundamental transformation, x-factorizations, valley-hopping on
//! one-line words, and cyclic valley-hopping on permutations.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::MultiPoly;
use crate::perm::{left_to_right_maxima, CyclicKind, Letter, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopError {
    #[error("letter {0} does not occur in the word")]
    LetterNotPresent(Letter),
}

/// Virtual letter placed before the first or after the last entry of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Zero,
    Infinity,
}

impl Boundary {
    fn exceeds(self, x: Letter) -> bool {
        matches!(self, Boundary::Infinity) && x > 0
    }
}

/// `word = w1 · w2 · x · w4 · w5`, where `w2` and `w4` are the maximal runs
/// of letters smaller than `x` on either side of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XFactorization {
    pub w1: Vec<Letter>,
    pub w2: Vec<Letter>,
    pub x: Letter,
    pub w4: Vec<Letter>,
    pub w5: Vec<Letter>,
    /// Shape of `x` in the word, boundaries included.
    pub kind: CyclicKind,
}

impl XFactorization {
    /// Whether `φ_x` moves anything.
    pub fn hops(&self) -> bool {
        matches!(
            self.kind,
            CyclicKind::DoubleAscent | CyclicKind::DoubleDescent
        )
    }

    pub fn concat(&self) -> Vec<Letter> {
        let mut out =
            Vec::with_capacity(self.w1.len() + self.w2.len() + self.w4.len() + self.w5.len() + 1);
        out.extend_from_slice(&self.w1);
        out.extend_from_slice(&self.w2);
        out.push(self.x);
        out.extend_from_slice(&self.w4);
        out.extend_from_slice(&self.w5);
        out
    }

    /// `w1 · w4 · x · w2 · w5`.
    pub fn swapped(&self) -> Vec<Letter> {
        let mut out =
            Vec::with_capacity(self.w1.len() + self.w2.len() + self.w4.len() + self.w5.len() + 1);
        out.extend_from_slice(&self.w1);
        out.extend_from_slice(&self.w4);
        out.push(self.x);
        out.extend_from_slice(&self.w2);
        out.extend_from_slice(&self.w5);
        out
    }
}

pub fn x_factorize(
    word: &[Letter],
    x: Letter,
    left: Boundary,
    right: Boundary,
) -> Result<XFactorization, HopError> {
    let pos = word
        .iter()
        .position(|&l| l == x)
        .ok_or(HopError::LetterNotPresent(x))?;
    let mut start = pos;
    while start > 0 && word[start - 1] < x {
        start -= 1;
    }
    let mut end = pos + 1;
    while end < word.len() && word[end] < x {
        end += 1;
    }
    let left_bigger = match pos.checked_sub(1) {
        Some(p) => word[p] > x,
        None => left.exceeds(x),
    };
    let right_bigger = match word.get(pos + 1) {
        Some(&r) => r > x,
        None => right.exceeds(x),
    };
    let kind = match (left_bigger, right_bigger) {
        (true, true) => CyclicKind::Valley,
        (false, false) => CyclicKind::Peak,
        (false, true) => CyclicKind::DoubleAscent,
        (true, false) => CyclicKind::DoubleDescent,
    };
    Ok(XFactorization {
        w1: word[..start].to_vec(),
        w2: word[start..pos].to_vec(),
        x,
        w4: word[pos + 1..end].to_vec(),
        w5: word[end..].to_vec(),
        kind,
    })
}

/// Erases the parentheses of the canonical cycle form.
pub fn foata(p: &Permutation) -> Permutation {
    let word = p.to_cycle_form().cycles().concat();
    Permutation::from_word_unchecked(word)
}

/// Cuts the word before every left-to-right maximum and reads the pieces as
/// cycles.
pub fn foata_inverse(p: &Permutation) -> Permutation {
    let word = p.word();
    let n = word.len();
    let cuts = left_to_right_maxima(word);
    let mut out = vec![0; n];
    for (idx, &start) in cuts.iter().enumerate() {
        let end = cuts.get(idx + 1).map_or(n, |&next| next - 1);
        let cycle = &word[start - 1..end];
        for (j, &letter) in cycle.iter().enumerate() {
            out[letter as usize - 1] = cycle[(j + 1) % cycle.len()];
        }
    }
    Permutation::from_word_unchecked(out)
}

fn phi_word(word: &[Letter], x: Letter, left: Boundary, right: Boundary) -> Vec<Letter> {
    let f = x_factorize(word, x, left, right).expect("x is a letter of the permutation");
    if f.hops() {
        f.swapped()
    } else {
        word.to_vec()
    }
}

/// Ordinary valley-hopping `φ_S` with `π(0) = π(n+1) = ∞`.
///
/// Letters of `S` outside `[n]` are ignored.
pub fn phi(p: &Permutation, letters: &BTreeSet<Letter>) -> Permutation {
    let n = p.len() as Letter;
    let mut word = p.word().to_vec();
    for &x in letters.iter().filter(|&&x| (1..=n).contains(&x)) {
        word = phi_word(&word, x, Boundary::Infinity, Boundary::Infinity);
    }
    Permutation::from_word_unchecked(word)
}

/// A single cyclic hop `ψ_x`.
pub fn psi_letter(p: &Permutation, x: Letter) -> Permutation {
    if x == 0 || x as usize > p.len() {
        return p.clone();
    }
    match p.classify(x) {
        CyclicKind::DoubleAscent | CyclicKind::DoubleDescent => {
            let word = phi_word(foata(p).word(), x, Boundary::Zero, Boundary::Infinity);
            foata_inverse(&Permutation::from_word_unchecked(word))
        }
        _ => p.clone(),
    }
}

/// Cyclic valley-hopping `ψ_S`.
pub fn psi(p: &Permutation, letters: &BTreeSet<Letter>) -> Permutation {
    letters
        .iter()
        .fold(p.clone(), |acc, &x| psi_letter(&acc, x))
}

/// One orbit of cyclic valley-hopping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// The member without cyclic double ascents.
    pub representative: Permutation,
    pub size: u64,
    pub cval: usize,
    pub fix: usize,
    /// Sorted, when requested.
    pub members: Option<Vec<Permutation>>,
}

impl OrbitReport {
    /// `n - fix - 2·cval`, the log₂ of the orbit size.
    pub fn free_letters(&self) -> usize {
        self.representative.len() - self.fix - 2 * self.cval
    }
}

/// The letters ψ can move: cyclic double ascents and double descents.
fn hoppable(p: &Permutation) -> Vec<Letter> {
    let sets = p.stat_sets();
    sets.cdasc.union(&sets.cddes).copied().collect()
}

/// Enumerates `{ψ_S(p)}` by running over subsets of the hoppable letters.
pub fn orbit_members(p: &Permutation) -> Vec<Permutation> {
    let letters = hoppable(p);
    assert!(letters.len() < 64, "orbit too large to enumerate");
    let subsets = 1u64 << letters.len();
    let member = |mask: u64| {
        let chosen: BTreeSet<Letter> = letters
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        psi(p, &chosen)
    };
    let mut members: Vec<Permutation> = crate::exec::map_range(subsets, member);
    members.sort();
    members.dedup();
    members
}

pub fn orbit(p: &Permutation, collect_members: bool) -> OrbitReport {
    let members = orbit_members(p);
    let counts = p.stat_counts();
    let representative = psi(p, &p.stat_sets().cdasc);
    OrbitReport {
        representative,
        size: members.len() as u64,
        cval: counts.cval,
        fix: counts.fix,
        members: collect_members.then_some(members),
    }
}

/// `Σ_{π ∈ Orb(p)} t^{exc(π)}` by enumeration.
pub fn orbit_exc_polynomial(p: &Permutation) -> MultiPoly {
    let mut counts = vec![0u64; p.len() + 1];
    for member in orbit_members(p) {
        counts[member.stat_counts().exc] += 1;
    }
    MultiPoly::from_t_coeffs(counts)
}
