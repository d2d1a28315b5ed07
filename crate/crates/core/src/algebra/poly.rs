use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Exponent pair `(deg_s, deg_t)`.
pub type Exponent = (u32, u32);

/// Sparse polynomial in `s` and `t` over the rationals. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        MultiPoly::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        MultiPoly::constant(rat(c))
    }

    pub fn s() -> Self {
        MultiPoly::monomial(BigRational::one(), 1, 0)
    }

    pub fn t() -> Self {
        MultiPoly::monomial(BigRational::one(), 0, 1)
    }

    pub fn monomial(c: BigRational, deg_s: u32, deg_t: u32) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term((deg_s, deg_t), c);
        p
    }

    /// `Σ c_j t^j` from integer coefficients.
    pub fn from_t_coeffs<I: Into<BigInt>>(coeffs: Vec<I>) -> Self {
        MultiPoly::from_t_rationals(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into())),
        )
    }

    pub fn from_t_rationals(coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut p = MultiPoly::zero();
        for (j, c) in coeffs.into_iter().enumerate() {
            p.add_term((0, j as u32), c);
        }
        p
    }

    /// Adds `c·s^a·t^b` in place.
    pub fn add_term(&mut self, exp: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_s: u32, deg_t: u32) -> BigRational {
        self.terms
            .get(&(deg_s, deg_t))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing `(deg_s, deg_t)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree_s(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0)
    }

    pub fn is_univariate_t(&self) -> bool {
        self.terms.keys().all(|e| e.0 == 0)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate_at(&self, s0: &BigRational, t0: &BigRational) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (&(a, b), c)| {
                acc + c
                    * num_traits::pow(s0.clone(), a as usize)
                    * num_traits::pow(t0.clone(), b as usize)
            })
    }

    /// Sets `s = s0`, keeping `t`.
    pub fn substitute_s(&self, s0: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((0, b), c * num_traits::pow(s0.clone(), a as usize));
        }
        out
    }

    /// Sets `t = t0`, keeping `s`.
    pub fn substitute_t_only(&self, t0: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((a, 0), c * num_traits::pow(t0.clone(), b as usize));
        }
        out
    }

    pub fn swap_variables(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `s^i`, as a polynomial in `t`.
    pub fn s_coefficient(&self, i: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0 == i)
                .map(|(&(_, b), c)| ((0, b), c.clone()))
                .collect(),
        }
    }

    /// Dense `t` coefficients `c_0..=c_deg` of a polynomial free of `s`.
    pub fn t_coeffs(&self) -> Result<Vec<BigRational>, AlgebraError> {
        if !self.is_univariate_t() {
            return Err(AlgebraError::NotUnivariate);
        }
        let mut out = vec![BigRational::zero(); self.degree_t() as usize + 1];
        for (&(_, b), c) in &self.terms {
            out[b as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Fails with the first non-integer coefficient.
    pub fn require_integral(&self) -> Result<(), AlgebraError> {
        match self.terms.iter().find(|(_, c)| !c.is_integer()) {
            None => Ok(()),
            Some((&(a, b), c)) => Err(AlgebraError::NonIntegral {
                deg_s: a,
                deg_t: b,
                coeff: c.to_string(),
            }),
        }
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// First exponent, in term order, where the two polynomials differ.
    pub fn first_difference(&self, other: &MultiPoly) -> Option<Exponent> {
        let keys: std::collections::BTreeSet<Exponent> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.into_iter()
            .find(|&(a, b)| self.coeff(a, b) != other.coeff(a, b))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Renders terms in increasing `(deg_s, deg_t)` order, e.g.
/// `1386*s^2*t^2 + 8316*s^2*t^3`; rationals print as `p/q`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (name, deg) in [("s", a), ("t", b)] {
                match deg {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    d => factors.push(format!("{name}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly { (&self).$method(&rhs) }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly { (&self).$method(rhs) }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |acc, p| acc * p)
    }
}
