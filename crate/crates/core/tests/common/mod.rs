//! Independent oracles: lexicographic S_n, statistics straight from the
//! definitions, and brute-force distributions. The functions in this file
//! never call the library; `props` checks the library against them.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub mod props;

/// All of S_n in lexicographic order (next-permutation).
pub fn lex_perms(n: usize) -> Vec<Vec<u32>> {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![w.clone()];
    loop {
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return out;
        };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
        w.swap(i - 1, j);
        w[i..].reverse();
        out.push(w.clone());
    }
}

pub fn inverse(w: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Stats {
    pub exc: usize,
    pub cval: usize,
    pub cpk: usize,
    pub cdasc: usize,
    pub cddes: usize,
    pub fix: usize,
    pub des: usize,
}

/// Statistics by comparing `π⁻¹(i), i, π(i)` for every letter.
pub fn stats(w: &[u32]) -> Stats {
    let inv = inverse(w);
    let mut s = Stats::default();
    for i in 1..=w.len() as u32 {
        let (before, after) = (inv[i as usize - 1], w[i as usize - 1]);
        if i < after {
            s.exc += 1;
        }
        match (before.cmp(&i), i.cmp(&after)) {
            _ if before == i => s.fix += 1,
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => s.cval += 1,
            (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => s.cpk += 1,
            (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => s.cdasc += 1,
            _ => s.cddes += 1,
        }
    }
    s.des = w.windows(2).filter(|p| p[0] > p[1]).count();
    s
}

/// Cycle lengths, sorted increasingly.
pub fn cycle_type(w: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; w.len()];
    let mut parts = Vec::new();
    for start in 0..w.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = w[i] as usize - 1;
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    parts.sort_unstable();
    parts
}

/// `(cval, exc) -> count` over the members of S_n selected by `keep`.
pub fn joint_counts(n: usize, keep: impl Fn(&[u32]) -> bool) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for w in lex_perms(n) {
        if keep(&w) {
            let s = stats(&w);
            *out.entry((s.cval, s.exc)).or_insert(0) += 1;
        }
    }
    out
}

/// `Σ_{π ∈ S_n} t^{des(π)+1}` as a coefficient vector, `[1]` for n = 0.
pub fn eulerian_by_descents(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut coeffs = vec![0u64; n + 1];
    for w in lex_perms(n) {
        coeffs[stats(&w).des + 1] += 1;
    }
    coeffs
}

/// All partitions of `n` as weakly increasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in min..=rest {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}
