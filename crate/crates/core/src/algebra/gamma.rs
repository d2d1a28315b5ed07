use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{AlgebraError, MultiPoly};

/// `f(t) = Σ_{i ≤ width/2} γ_i t^i (1+t)^{width-2i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaExpansion {
    /// Twice the center of symmetry.
    pub width: usize,
    #[serde(serialize_with = "serialize_rationals")]
    pub gammas: Vec<BigRational>,
    /// Every γ_i is nonnegative.
    pub positive: bool,
}

fn serialize_rationals<S: serde::Serializer>(v: &[BigRational], ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(|q| q.to_string()))
}

impl GammaExpansion {
    /// Rebuilds `Σ γ_i t^i (1+t)^{width-2i}`.
    pub fn reconstruct(&self) -> MultiPoly {
        let one_plus_t = MultiPoly::from_t_coeffs(vec![1, 1]);
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| {
                MultiPoly::monomial(g.clone(), 0, i as u32)
                    * one_plus_t.pow((self.width - 2 * i) as u32)
            })
            .sum()
    }

    /// γ as integers, if they all are.
    pub fn integer_gammas(&self) -> Option<Vec<BigInt>> {
        self.gammas
            .iter()
            .map(|g| g.is_integer().then(|| g.to_integer()))
            .collect()
    }

    pub fn is_nonneg_integral(&self) -> bool {
        self.positive && self.gammas.iter().all(BigRational::is_integer)
    }
}

/// Peels off `γ_i t^i (1+t)^{width-2i}` from the low end.
///
/// Fails when `f` has degree above `width` or is not palindromic about
/// `width/2`; a symmetric `f` with some negative γ_i is a successful
/// expansion with `positive = false`.
pub fn gamma_expand(f: &MultiPoly, width: usize) -> Result<GammaExpansion, AlgebraError> {
    let coeffs = f.t_coeffs()?;
    let degree = if f.is_zero() { 0 } else { coeffs.len() - 1 };
    if degree > width {
        return Err(AlgebraError::DegreeExceedsCenter { degree, width });
    }
    let at = |j: usize| coeffs.get(j).cloned().unwrap_or_else(BigRational::zero);
    for low in 0..=width / 2 {
        if at(low) != at(width - low) {
            return Err(AlgebraError::NotSymmetric {
                width,
                low,
                high: width - low,
            });
        }
    }

    let mut residual = f.clone();
    let one_plus_t = MultiPoly::from_t_coeffs(vec![1, 1]);
    let mut gammas = Vec::with_capacity(width / 2 + 1);
    for i in 0..=width / 2 {
        let g = residual.coeff(0, i as u32);
        if !g.is_zero() {
            let piece = MultiPoly::monomial(g.clone(), 0, i as u32)
                * one_plus_t.pow((width - 2 * i) as u32);
            residual = residual - piece;
        }
        gammas.push(g);
    }
    debug_assert!(residual.is_zero(), "symmetric input always expands");
    let positive = gammas.iter().all(|g| !g.is_negative());
    Ok(GammaExpansion {
        width,
        gammas,
        positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn eulerian_a4() {
        let f = MultiPoly::from_t_coeffs(vec![1, 11, 11, 1]);
        let g = gamma_expand(&f, 3).unwrap();
        assert_eq!(g.gammas, vec![rat(1), rat(8)]);
        assert!(g.positive);
        assert_eq!(g.reconstruct(), f);
    }

    #[test]
    fn trivial_expansions() {
        let f = MultiPoly::from_t_coeffs(vec![1, 1]).pow(4);
        assert_eq!(
            gamma_expand(&f, 4).unwrap().gammas,
            vec![rat(1), rat(0), rat(0)]
        );
        let g = gamma_expand(&MultiPoly::t(), 2).unwrap();
        assert_eq!(g.gammas, vec![rat(0), rat(1)]);
        assert_eq!(
            gamma_expand(&MultiPoly::one(), 0).unwrap().gammas,
            vec![rat(1)]
        );
    }

    #[test]
    fn failures_and_negatives() {
        let f = MultiPoly::from_t_coeffs(vec![0, 4, 1]);
        assert!(matches!(
            gamma_expand(&f, 2),
            Err(AlgebraError::NotSymmetric { .. })
        ));
        assert!(matches!(
            gamma_expand(&f, 1),
            Err(AlgebraError::DegreeExceedsCenter { .. })
        ));
        // 1 + t^2 = (1+t)^2 - 2t
        let g = gamma_expand(&MultiPoly::from_t_coeffs(vec![1, 0, 1]), 2).unwrap();
        assert_eq!(g.gammas, vec![rat(1), rat(-2)]);
        assert!(!g.positive);
        assert!(gamma_expand(&MultiPoly::s(), 2).is_err());
    }
}
