use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, MultiPoly};

/// A bivariate power series in `s`, `t` known exactly up to total degree
/// `order`.
///
/// Coefficients are stored by homogeneous component: `graded[d][i]` is the
/// coefficient of `s^i t^(d-i)`. Every operation works one homogeneous
/// degree at a time, which makes inversion and square roots plain
/// recurrences.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    graded: Vec<Vec<BigRational>>,
}

fn zero_component(d: usize) -> Vec<BigRational> {
    vec![BigRational::zero(); d + 1]
}

/// Adds `x · y` of two homogeneous components into `out`.
fn mul_into(out: &mut [BigRational], x: &[BigRational], y: &[BigRational]) {
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if !b.is_zero() {
                out[i + j] += a * b;
            }
        }
    }
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            graded: (0..=order).map(zero_component).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut out = TruncSeries::zero(order);
        out.graded[0][0] = c;
        out
    }

    pub fn s(order: usize) -> Self {
        TruncSeries::from_poly(&MultiPoly::s(), order)
    }

    pub fn t(order: usize) -> Self {
        TruncSeries::from_poly(&MultiPoly::t(), order)
    }

    /// Drops every term of total degree above `order`.
    pub fn from_poly(p: &MultiPoly, order: usize) -> Self {
        let mut out = TruncSeries::zero(order);
        for ((a, b), c) in p.terms() {
            let d = (a + b) as usize;
            if d <= order {
                out.graded[d][a as usize] = c.clone();
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.graded.len() - 1
    }

    pub fn coeff(&self, deg_s: u32, deg_t: u32) -> BigRational {
        let d = (deg_s + deg_t) as usize;
        self.graded
            .get(d)
            .map_or_else(BigRational::zero, |g| g[deg_s as usize].clone())
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.graded[0][0]
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        TruncSeries {
            graded: self.graded[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> TruncSeries {
        TruncSeries {
            graded: self
                .graded
                .iter()
                .map(|g| g.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> TruncSeries {
        let mut base = self.clone();
        let mut acc = TruncSeries::one(self.order());
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

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<TruncSeries, AlgebraError> {
        let a0 = self.constant_term().clone();
        if a0.is_zero() {
            return Err(AlgebraError::NonUnit);
        }
        let inv0 = a0.recip();
        let mut out = TruncSeries::constant(inv0.clone(), self.order());
        for d in 1..=self.order() {
            let mut acc = zero_component(d);
            for k in 1..=d {
                mul_into(&mut acc, &self.graded[k], &out.graded[d - k]);
            }
            out.graded[d] = acc.into_iter().map(|x| -x * &inv0).collect();
        }
        Ok(out)
    }

    pub fn div(&self, rhs: &TruncSeries) -> Result<TruncSeries, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    /// The square root with constant term 1; the radicand must also have
    /// constant term 1.
    pub fn sqrt(&self) -> Result<TruncSeries, AlgebraError> {
        if !self.constant_term().is_one() {
            return Err(AlgebraError::SqrtConstantTerm(
                self.constant_term().to_string(),
            ));
        }
        let two = BigRational::from_integer(2.into());
        let mut out = TruncSeries::one(self.order());
        // (1 + b_1 + b_2 + ...)^2 = a  gives  2·b_d = a_d - Σ_{0<k<d} b_k·b_{d-k}.
        for d in 1..=self.order() {
            let mut acc = zero_component(d);
            for k in 1..d {
                mul_into(&mut acc, &out.graded[k], &out.graded[d - k]);
            }
            out.graded[d] = self.graded[d]
                .iter()
                .zip(acc)
                .map(|(a, c)| (a - c) / &two)
                .collect();
        }
        Ok(out)
    }

    /// Divides by `t`, losing one degree of precision.
    pub fn extract_t_factor(&self) -> Result<TruncSeries, AlgebraError> {
        if let Some(d) = (0..=self.order()).find(|&d| !self.graded[d][d].is_zero()) {
            return Err(AlgebraError::NotDivisible {
                var: 't',
                deg_s: d as u32,
                deg_t: 0,
            });
        }
        if self.order() == 0 {
            return Err(AlgebraError::PrecisionExhausted);
        }
        Ok(TruncSeries {
            graded: (0..self.order())
                .map(|d| self.graded[d + 1][..=d].to_vec())
                .collect(),
        })
    }

    /// Divides by `s`, losing one degree of precision.
    pub fn extract_s_factor(&self) -> Result<TruncSeries, AlgebraError> {
        if let Some(d) = (0..=self.order()).find(|&d| !self.graded[d][0].is_zero()) {
            return Err(AlgebraError::NotDivisible {
                var: 's',
                deg_s: 0,
                deg_t: d as u32,
            });
        }
        if self.order() == 0 {
            return Err(AlgebraError::PrecisionExhausted);
        }
        Ok(TruncSeries {
            graded: (0..self.order())
                .map(|d| self.graded[d + 1][1..].to_vec())
                .collect(),
        })
    }

    /// `f(self)` for a polynomial `f` in `t` alone.
    pub fn compose(f: &MultiPoly, arg: &TruncSeries) -> Result<TruncSeries, AlgebraError> {
        let coeffs = f.t_coeffs()?;
        let mut acc = TruncSeries::zero(arg.order());
        for c in coeffs.iter().rev() {
            acc = &acc * arg;
            acc.graded[0][0] += c;
        }
        Ok(acc)
    }

    /// Reads off a polynomial of total degree at most `max_total_degree`.
    ///
    /// Every known coefficient above that degree must vanish, and at least
    /// one degree beyond it must be known; otherwise the series is either
    /// not a polynomial or was computed at too low an order.
    pub fn to_poly(&self, max_total_degree: usize) -> Result<MultiPoly, AlgebraError> {
        if self.order() <= max_total_degree {
            return Err(AlgebraError::PrecisionTooLow {
                order: self.order(),
                needed: max_total_degree + 1,
            });
        }
        for d in max_total_degree + 1..=self.order() {
            if let Some(i) = self.graded[d].iter().position(|c| !c.is_zero()) {
                return Err(AlgebraError::Residue {
                    deg_s: i as u32,
                    deg_t: (d - i) as u32,
                });
            }
        }
        let mut out = MultiPoly::zero();
        for d in 0..=max_total_degree {
            for (i, c) in self.graded[d].iter().enumerate() {
                out.add_term((i as u32, (d - i) as u32), c.clone());
            }
        }
        Ok(out)
    }

    /// All known terms as a polynomial, without any residue check.
    pub fn to_poly_unchecked(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (d, g) in self.graded.iter().enumerate() {
            for (i, c) in g.iter().enumerate() {
                out.add_term((i as u32, (d - i) as u32), c.clone());
            }
        }
        out
    }
}

impl std::fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "TruncSeries({} + O(deg {}))",
            self.to_poly_unchecked(),
            self.order() + 1
        )
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            graded: (0..=order)
                .map(|d| {
                    self.graded[d]
                        .iter()
                        .zip(&rhs.graded[d])
                        .map(|(a, b)| a + b)
                        .collect()
                })
                .collect(),
        }
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            graded: self
                .graded
                .iter()
                .map(|g| g.iter().map(|x| -x).collect())
                .collect(),
        }
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncSeries::zero(order);
        for d in 0..=order {
            for k in 0..=d {
                mul_into(&mut out.graded[d], &self.graded[k], &rhs.graded[d - k]);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries { (&self).$method(&rhs) }
        }
        impl $tr<&TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: &TruncSeries) -> TruncSeries { (&self).$method(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
