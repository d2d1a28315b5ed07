//! `|S_{n,k,i}|` from the exponential generating function
//!
//! `1 + Σ |S_{n,k,i}| u^k t^i x^n/n! = √(1-t) e^{(u-1)x} / (√(1-t) cosh(x√(1-t)) - sinh(x√(1-t)))`.
//!
//! Dividing through by `√(1-t)` leaves the radical-free denominator
//! `Σ_m (1-t)^m x^{2m}/(2m)! - Σ_m (1-t)^m x^{2m+1}/(2m+1)!`, so the whole
//! computation is a power series in `x` with polynomial coefficients in `u`
//! and `t` (stored as `s` and `t` of a [`MultiPoly`]).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::report::{Claim, Instance, VerificationReport};
use super::FormulaError;
use crate::algebra::MultiPoly;
use crate::enumerate::Enumerator;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn inv_factorial(n: usize) -> BigRational {
    BigRational::new(BigInt::one(), factorial(n))
}

/// `|S_{n,k,i}|` for `1 ≤ n ≤ n_max`, read off the generating function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnkiTable {
    n_max: usize,
    /// `(n, k, i, count)` with zero counts omitted, sorted.
    rows: Vec<(usize, usize, usize, u64)>,
}

impl SnkiTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, n: usize, k: usize, i: usize) -> u64 {
        self.rows
            .binary_search_by(|&(a, b, c, _)| (a, b, c).cmp(&(n, k, i)))
            .map(|pos| self.rows[pos].3)
            .unwrap_or(0)
    }

    pub fn rows(&self) -> &[(usize, usize, usize, u64)] {
        &self.rows
    }
}

/// Expands the generating function through `x^{n_max}`.
pub fn egf_snki(n_max: usize) -> Result<SnkiTable, FormulaError> {
    if n_max == 0 {
        return Err(FormulaError::Unsupported(
            "egf_snki needs n_max >= 1".into(),
        ));
    }
    let one_minus_t = MultiPoly::one() - MultiPoly::t();

    // Denominator coefficients d_j of x^j.
    let denom: Vec<MultiPoly> = (0..=n_max)
        .map(|j| {
            let sign = if j % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            one_minus_t
                .pow((j / 2) as u32)
                .scale(&(sign * inv_factorial(j)))
        })
        .collect();

    // 1/denominator; d_0 = 1 so no division is needed.
    let mut recip: Vec<MultiPoly> = Vec::with_capacity(n_max + 1);
    recip.push(MultiPoly::one());
    for j in 1..=n_max {
        let acc: MultiPoly = (1..=j).map(|l| &denom[l] * &recip[j - l]).sum();
        recip.push(-acc);
    }

    // e^{(u-1)x}
    let u_minus_one = MultiPoly::s() - MultiPoly::one();
    let exp: Vec<MultiPoly> = (0..=n_max)
        .map(|j| u_minus_one.pow(j as u32).scale(&inv_factorial(j)))
        .collect();

    let mut rows = Vec::new();
    for n in 1..=n_max {
        let coeff: MultiPoly = (0..=n).map(|j| &exp[j] * &recip[n - j]).sum();
        let coeff = coeff.scale(&BigRational::from_integer(factorial(n)));
        coeff.require_integral()?;
        for ((k, i), c) in coeff.terms() {
            if c.is_zero() {
                continue;
            }
            let count = c
                .to_integer()
                .to_u64()
                .ok_or_else(|| FormulaError::Unsupported(format!("count {c} out of range")))?;
            rows.push((n, k as usize, i as usize, count));
        }
    }
    rows.sort_unstable();
    Ok(SnkiTable { n_max, rows })
}

/// Compares the generating-function table with enumeration for every
/// `(n, k, i)` with `n ≤ n_max`, one report per `n`.
pub fn egf_check(en: &Enumerator, n_max: usize) -> Result<Vec<VerificationReport>, FormulaError> {
    let table = egf_snki(n_max)?;
    (1..=n_max)
        .map(|n| {
            let mut from_egf = MultiPoly::zero();
            let mut counted = MultiPoly::zero();
            for k in 0..=n {
                for i in 0..=(n - k) / 2 {
                    let a = BigRational::from_integer(table.get(n, k, i).into());
                    let b = BigRational::from_integer(en.count_snki(n, k, i)?.into());
                    from_egf = from_egf + MultiPoly::monomial(a, k as u32, i as u32);
                    counted = counted + MultiPoly::monomial(b, k as u32, i as u32);
                }
            }
            Ok(VerificationReport::compare(
                Claim::Egf,
                Instance::Size { n },
                from_egf,
                counted,
            ))
        })
        .collect()
}
