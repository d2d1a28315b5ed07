//! Product formulas over Eulerian polynomials, evaluated exactly.
//!
//! The joint and cyclic-valley formulas substitute algebraic functions
//! (`u`, `v`, `w`) built from square roots. They are evaluated as formal
//! power series about `s = t = 0` using the square-root branch with
//! constant term 1, which is the branch that makes `u`, `v`, `w` vanish at
//! the origin.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::FormulaError;
use crate::algebra::{eulerian, rat, MultiPoly, TruncSeries};
use crate::enumerate::class_size;
use crate::perm::CycleType;

/// Extra known degrees past the largest expected term, checked to vanish.
const GUARD: usize = 2;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(n!/z_λ) · Π_i (1/(i-1)!)^{m_i}`.
fn class_prefactor(lambda: &CycleType) -> BigRational {
    let mut denom = BigInt::one();
    for (&i, &m) in &lambda.multiplicities() {
        denom *= factorial(i - 1).pow(m as u32);
    }
    BigRational::new(BigInt::from(class_size(lambda)), denom)
}

/// `Π_i A_{i-1}(x)^{m_i}` for `x` given as a series.
fn eulerian_product(lambda: &CycleType, x: &TruncSeries) -> Result<TruncSeries, FormulaError> {
    let mut acc = TruncSeries::one(x.order());
    for (&i, &m) in &lambda.multiplicities() {
        let a = TruncSeries::compose(&eulerian(i - 1), x)?;
        acc = &acc * &a.pow(m as u32);
    }
    Ok(acc)
}

/// `E_λ(t) = (n!/z_λ) Π_i [A_{i-1}(t)/(i-1)!]^{m_i}`.
pub fn brenti(lambda: &CycleType) -> Result<MultiPoly, FormulaError> {
    let mut out = MultiPoly::constant(class_prefactor(lambda));
    for (&i, &m) in &lambda.multiplicities() {
        out = out * eulerian(i - 1).pow(m as u32);
    }
    out.require_integral()?;
    Ok(out)
}

/// The pair `(u, v)` at total-degree order `order`.
///
/// `u = (1 + t² - 2st - (1-t)R) / (2(1-s)t)`,
/// `v = ((1+t)² - 2st - (1+t)R) / (2st)`, with `R = √((1+t)² - 4st)`.
pub fn joint_substitutions(order: usize) -> Result<(TruncSeries, TruncSeries), FormulaError> {
    // v loses two degrees to the division by st, u loses one.
    let work = order + 2;
    let s = TruncSeries::s(work);
    let t = TruncSeries::t(work);
    let one = TruncSeries::one(work);
    let two = rat(2);

    let one_plus_t = &one + &t;
    let st = &s * &t;
    let radicand = &(&one_plus_t * &one_plus_t) - &st.scale(&rat(4));
    let root = radicand.sqrt()?;

    let u_num = &(&(&one + &(&t * &t)) - &st.scale(&two)) - &(&(&one - &t) * &root);
    let u = u_num
        .extract_t_factor()?
        .div(&(&one - &s).scale(&two))?
        .truncate(order);

    let v_num = &(&(&one_plus_t * &one_plus_t) - &st.scale(&two)) - &(&one_plus_t * &root);
    let v = v_num
        .extract_s_factor()?
        .extract_t_factor()?
        .scale(&BigRational::new(1.into(), 2.into()));
    debug_assert_eq!(v.order(), order);
    Ok((u, v))
}

/// `E_λ^{(cval,exc)}(s,t) = (n!/z_λ) ((1+u)/(1+uv))^{n-m_1} Π [A_{i-1}(v)/(i-1)!]^{m_i}`.
pub fn theorem1_joint(lambda: &CycleType) -> Result<MultiPoly, FormulaError> {
    // 2·cval + cdasc ≤ n - m_1 bounds the total degree of every term.
    let max_degree = lambda.n() - lambda.fixed_points();
    let order = max_degree + GUARD;
    let (u, v) = joint_substitutions(order)?;
    let one = TruncSeries::one(order);
    let ratio = (&one + &u).div(&(&one + &(&u * &v)))?;
    let series = ratio.pow(max_degree as u32) * eulerian_product(lambda, &v)?;
    let out = series.scale(&class_prefactor(lambda)).to_poly(max_degree)?;
    out.require_integral()?;
    Ok(out)
}

/// `w = 2t⁻¹(1 - √(1-t)) - 1` together with `√(1-t)`, at order `order`.
pub fn cval_substitution(order: usize) -> Result<(TruncSeries, TruncSeries), FormulaError> {
    let work = order + 1;
    let one = TruncSeries::one(work);
    let root = (&one - &TruncSeries::t(work)).sqrt()?;
    let w = &(&one - &root).extract_t_factor()?.scale(&rat(2)) - &TruncSeries::one(order);
    Ok((w, root.truncate(order)))
}

/// `E_λ^{cval}(t) = (n!/z_λ)(1 + √(1-t))^{n-m_1} Π [A_{i-1}(w)/(i-1)!]^{m_i}`.
pub fn theorem6_cval(lambda: &CycleType) -> Result<MultiPoly, FormulaError> {
    let width = lambda.n() - lambda.fixed_points();
    let max_degree = width / 2;
    let order = max_degree + GUARD;
    let (w, root) = cval_substitution(order)?;
    let factor = (&TruncSeries::one(order) + &root).pow(width as u32);
    let series = factor * eulerian_product(lambda, &w)?;
    let out = series.scale(&class_prefactor(lambda)).to_poly(max_degree)?;
    out.require_integral()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn brenti_small() {
        assert_eq!(
            brenti(&ct(&[3])).unwrap(),
            MultiPoly::from_t_coeffs(vec![0, 1, 1])
        );
        assert_eq!(brenti(&CycleType::ones(5)).unwrap(), MultiPoly::one());
        let big = brenti(&ct(&[1, 5, 5])).unwrap();
        assert_eq!(big.coefficient_sum(), rat(798_336));
        assert_eq!(brenti(&ct(&[])).unwrap(), MultiPoly::one());
    }

    #[test]
    fn substitutions_vanish_at_origin() {
        let (u, v) = joint_substitutions(4).unwrap();
        assert_eq!(u.constant_term(), &rat(0));
        assert_eq!(v.constant_term(), &rat(0));
        // u = t + O(2), v = st + O(3)
        assert_eq!(u.coeff(0, 1), rat(1));
        assert_eq!(u.coeff(1, 0), rat(0));
        assert_eq!(v.coeff(1, 1), rat(1));
        let (w, _) = cval_substitution(3).unwrap();
        assert_eq!(w.coeff(0, 1), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn theorem1_small() {
        let st = MultiPoly::s() * MultiPoly::t();
        assert_eq!(
            theorem1_joint(&ct(&[3])).unwrap(),
            &st + &(&st * &MultiPoly::t())
        );
        assert_eq!(
            theorem1_joint(&CycleType::ones(4)).unwrap(),
            MultiPoly::one()
        );
        assert_eq!(theorem1_joint(&ct(&[2])).unwrap(), st);
    }

    #[test]
    fn theorem6_small() {
        assert_eq!(
            theorem6_cval(&ct(&[3])).unwrap(),
            MultiPoly::from_int(2) * MultiPoly::t()
        );
        assert_eq!(
            theorem6_cval(&CycleType::ones(3)).unwrap(),
            MultiPoly::one()
        );
    }
}
