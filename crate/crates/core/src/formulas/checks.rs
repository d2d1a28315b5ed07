//! Identity checks that compare enumerated distributions against the
//! closed forms and gamma expansions, in radical-free cleared form.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::report::{Claim, Instance, VerificationReport};
use super::{brenti, theorem1_joint, theorem6_cval, FormulaError};
use crate::algebra::{gamma_expand, AlgebraError, GammaExpansion, MultiPoly};
use crate::enumerate::{ClassSpec, Enumerator, JointTable};
use crate::hopping::orbit_members;
use crate::perm::{CycleType, Permutation};

fn one_plus(p: MultiPoly) -> MultiPoly {
    MultiPoly::one() + p
}

fn one_plus_t() -> MultiPoly {
    one_plus(MultiPoly::t())
}

fn pow2(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(2).pow(e as u32))
}

/// `(s+t)^{exc-cval} (1+st)^{m-cval-exc} t^cval`, the per-permutation weight
/// on the right of the orbit identity with `m = n - k`.
fn hop_weight(width: usize, cval: usize, exc: usize) -> MultiPoly {
    let s_plus_t = MultiPoly::s() + MultiPoly::t();
    let one_plus_st = one_plus(MultiPoly::s() * MultiPoly::t());
    s_plus_t.pow((exc - cval) as u32)
        * one_plus_st.pow((width - cval - exc) as u32)
        * MultiPoly::t().pow(cval as u32)
}

fn spec_instance(spec: &ClassSpec) -> Instance {
    Instance::Spec(spec.clone())
}

fn lambda_instance(lambda: &CycleType) -> Instance {
    Instance::Spec(ClassSpec::cycle_type(lambda.clone()))
}

pub fn brenti_check(
    en: &Enumerator,
    lambda: &CycleType,
) -> Result<VerificationReport, FormulaError> {
    let spec = ClassSpec::cycle_type(lambda.clone());
    Ok(VerificationReport::compare(
        Claim::Brenti,
        lambda_instance(lambda),
        brenti(lambda)?,
        en.dist_exc(&spec)?,
    ))
}

pub fn theorem1_check(
    en: &Enumerator,
    lambda: &CycleType,
) -> Result<VerificationReport, FormulaError> {
    let spec = ClassSpec::cycle_type(lambda.clone());
    Ok(VerificationReport::compare(
        Claim::Theorem1,
        lambda_instance(lambda),
        theorem1_joint(lambda)?,
        en.dist_joint(&spec)?,
    ))
}

pub fn theorem6_check(
    en: &Enumerator,
    lambda: &CycleType,
) -> Result<VerificationReport, FormulaError> {
    let spec = ClassSpec::cycle_type(lambda.clone());
    Ok(VerificationReport::compare(
        Claim::Theorem6,
        lambda_instance(lambda),
        theorem6_cval(lambda)?,
        en.dist_cval(&spec)?,
    ))
}

/// Orbit identity for `σ` in its radical-free form
/// `(Σ_Orb t^exc)(1+s)^{n-k-2cval} = Σ_Orb (s+t)^{exc-cval}(1+st)^{n-k-cval-exc} t^cval`,
/// both sides over the enumerated orbit.
pub fn lemma1_check(sigma: &Permutation) -> VerificationReport {
    let counts = sigma.stat_counts();
    let width = sigma.len() - counts.fix;
    let members = orbit_members(sigma);
    let mut exc_sum = MultiPoly::zero();
    let mut rhs = MultiPoly::zero();
    for pi in &members {
        let c = pi.stat_counts();
        exc_sum = exc_sum + MultiPoly::t().pow(c.exc as u32);
        rhs = rhs + hop_weight(width, c.cval, c.exc);
    }
    let lhs = exc_sum * one_plus(MultiPoly::s()).pow((width - 2 * counts.cval) as u32);
    VerificationReport::compare(
        Claim::Lemma1,
        Instance::Sigma {
            sigma: sigma.to_comma_string(),
        },
        lhs,
        rhs,
    )
}

/// Gamma expansion of `E(Π; t)` plus both combinatorial readings of the
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaWitness {
    pub spec: ClassSpec,
    /// `None` when `E(Π; t)` is not symmetric about `(n-k)/2`.
    pub expansion: Option<GammaExpansion>,
    /// `|{π ∈ Π : cval = i, cdasc = 0}|`.
    pub no_cdasc_counts: Vec<u64>,
    /// `|{π ∈ Π : cval = i}| / 2^{n-k-2i}`, `None` when not divisible.
    pub scaled_counts: Vec<Option<u64>>,
}

impl GammaWitness {
    /// Nonneg integer γ that match both counts.
    pub fn holds(&self) -> bool {
        let Some(exp) = &self.expansion else {
            return false;
        };
        let Some(gammas) = exp.integer_gammas() else {
            return false;
        };
        exp.positive
            && gammas.len() == self.no_cdasc_counts.len()
            && gammas
                .iter()
                .zip(&self.no_cdasc_counts)
                .zip(&self.scaled_counts)
                .all(|((g, &a), b)| *g == BigInt::from(a) && *b == Some(a))
    }
}

fn gamma_witness(spec: &ClassSpec, table: &JointTable) -> GammaWitness {
    let width = spec.n() - spec.fixed_points_count();
    let expansion = gamma_expand(&table.exc(), width).ok();
    let no_cdasc_counts = (0..=width / 2)
        .map(|i| table.with_cval_no_cdasc(i))
        .collect();
    let scaled_counts = (0..=width / 2)
        .map(|i| {
            let all = table.with_cval(i);
            let orbit = 1u64 << (width - 2 * i);
            all.is_multiple_of(orbit).then_some(all / orbit)
        })
        .collect();
    GammaWitness {
        spec: spec.clone(),
        expansion,
        no_cdasc_counts,
        scaled_counts,
    }
}

/// Gamma-positivity of `E(Π; t)` about `(n-k)/2` for a hop-invariant `Π`.
pub fn theorem2_gamma(en: &Enumerator, spec: &ClassSpec) -> Result<GammaWitness, FormulaError> {
    let table = en.joint_table(spec)?;
    Ok(gamma_witness(spec, &table))
}

pub fn theorem2_check(
    en: &Enumerator,
    spec: &ClassSpec,
) -> Result<VerificationReport, FormulaError> {
    let table = en.joint_table(spec)?;
    let witness = gamma_witness(spec, &table);
    let width = spec.n() - spec.fixed_points_count();
    let from_counts = GammaExpansion {
        width,
        gammas: witness
            .no_cdasc_counts
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect(),
        positive: true,
    };
    let report = VerificationReport::compare(
        Claim::Theorem2,
        spec_instance(spec),
        table.exc(),
        from_counts.reconstruct(),
    );
    Ok(if witness.holds() {
        report
    } else {
        report.fail_with(format!(
            "gamma expansion {:?} disagrees with counts {:?} / {:?}",
            witness.expansion.as_ref().map(|e| &e.gammas),
            witness.no_cdasc_counts,
            witness.scaled_counts
        ))
    })
}

/// `E(Π;t)(1+s)^{n-k} = Σ_π (s+t)^{exc-cval}(1+st)^{n-k-cval-exc} t^cval (1+s)^{2cval}`.
pub fn theorem4_check(
    en: &Enumerator,
    spec: &ClassSpec,
) -> Result<VerificationReport, FormulaError> {
    let table = en.joint_table(spec)?;
    let width = spec.n() - spec.fixed_points_count();
    let one_plus_s = one_plus(MultiPoly::s());
    let lhs = table.exc() * one_plus_s.pow(width as u32);
    let mut rhs = MultiPoly::zero();
    for cval in 0..=width / 2 {
        for exc in cval..=width - cval {
            let count = table.get(cval, exc);
            if count > 0 {
                let weight = hop_weight(width, cval, exc) * one_plus_s.pow(2 * cval as u32);
                rhs = rhs + weight.scale(&BigRational::from_integer(count.into()));
            }
        }
    }
    Ok(VerificationReport::compare(
        Claim::Theorem4,
        spec_instance(spec),
        lhs,
        rhs,
    ))
}

/// `E(Π;t) = ((1+t)/2)^{n-k} E^cval(Π; 4t/(1+t)²)`, cleared to
/// `2^{n-k} E(Π;t) = Σ_i c_i 4^i t^i (1+t)^{n-k-2i}`.
pub fn theorem5_check(
    en: &Enumerator,
    spec: &ClassSpec,
) -> Result<VerificationReport, FormulaError> {
    let table = en.joint_table(spec)?;
    let width = spec.n() - spec.fixed_points_count();
    let lhs = table.exc().scale(&pow2(width));
    let cval = table.cval();
    let mut rhs = MultiPoly::zero();
    for i in 0..=width / 2 {
        let c = cval.coeff(0, i as u32);
        let term = MultiPoly::monomial(c * pow2(2 * i), 0, i as u32)
            * one_plus_t().pow((width - 2 * i) as u32);
        rhs = rhs + term;
    }
    Ok(VerificationReport::compare(
        Claim::Theorem5,
        spec_instance(spec),
        lhs,
        rhs,
    ))
}

/// Expansions of each `s^i` coefficient of the joint distribution about
/// `(n - m_1)/2`. Fails if one of them is not symmetric.
pub fn corollary2_check(
    en: &Enumerator,
    lambda: &CycleType,
) -> Result<Vec<GammaExpansion>, FormulaError> {
    let joint = en.dist_joint(&ClassSpec::cycle_type(lambda.clone()))?;
    let width = lambda.n() - lambda.fixed_points();
    (0..=width / 2)
        .map(|i| Ok(gamma_expand(&joint.s_coefficient(i as u32), width)?))
        .collect()
}

pub fn corollary2_report(
    en: &Enumerator,
    lambda: &CycleType,
) -> Result<VerificationReport, FormulaError> {
    let joint = en.dist_joint(&ClassSpec::cycle_type(lambda.clone()))?;
    let width = lambda.n() - lambda.fixed_points();
    let mut rebuilt = MultiPoly::zero();
    let mut problem = None;
    for i in 0..=width / 2 {
        match gamma_expand(&joint.s_coefficient(i as u32), width) {
            Ok(exp) => {
                if !exp.is_nonneg_integral() {
                    problem.get_or_insert(format!("s^{i} coefficient has gammas {:?}", exp.gammas));
                }
                rebuilt = rebuilt + exp.reconstruct() * MultiPoly::s().pow(i as u32);
            }
            Err(e) => {
                problem.get_or_insert(format!("s^{i} coefficient: {e}"));
            }
        }
    }
    let report = VerificationReport::compare(Claim::Cor2, lambda_instance(lambda), joint, rebuilt);
    Ok(match problem {
        Some(note) => report.fail_with(note),
        None => report,
    })
}

/// `|S_{n,k,i}| / 2^{n-k-2i} · t^i (1+t)^{n-k-2i}`.
fn snki_term(n: usize, k: usize, i: usize, count: u64) -> MultiPoly {
    let width = n - k;
    let coeff = BigRational::from_integer(count.into()) / pow2(width - 2 * i);
    MultiPoly::monomial(coeff, 0, i as u32) * one_plus_t().pow((width - 2 * i) as u32)
}

/// `E(S_{n,k};t) = Σ_i (|S_{n,k,i}|/2^{n-k-2i}) t^i (1+t)^{n-k-2i}`.
pub fn corollary3_check(
    en: &Enumerator,
    n: usize,
    k: usize,
) -> Result<VerificationReport, FormulaError> {
    let spec = ClassSpec::fixed_points(n, k)?;
    let lhs = en.dist_exc(&spec)?;
    let mut rhs = MultiPoly::zero();
    for i in 0..=(n - k) / 2 {
        rhs = rhs + snki_term(n, k, i, en.count_snki(n, k, i)?);
    }
    Ok(VerificationReport::compare(
        Claim::Cor3,
        spec_instance(&spec),
        lhs,
        rhs,
    ))
}

/// `E(S_{n,k,i};t) = (|S_{n,k,i}|/2^{n-k-2i}) t^i (1+t)^{n-k-2i}`.
pub fn corollary4_check(
    en: &Enumerator,
    n: usize,
    k: usize,
    i: usize,
) -> Result<VerificationReport, FormulaError> {
    let spec = ClassSpec::fixed_points_and_cval(n, k, i)?;
    let table = en.joint_table(&spec)?;
    let rhs = snki_term(n, k, i, table.total());
    Ok(VerificationReport::compare(
        Claim::Cor4,
        spec_instance(&spec),
        table.exc(),
        rhs,
    ))
}

/// Tries every width from `deg f` to `2·deg f` and returns the first
/// successful expansion. A nonzero polynomial can only be symmetric about
/// the midpoint of its lowest and highest degrees, so `None` means no
/// center works.
pub fn expand_about_any_center(f: &MultiPoly) -> Result<Option<GammaExpansion>, AlgebraError> {
    if !f.is_univariate_t() {
        return Err(AlgebraError::NotUnivariate);
    }
    let degree = f.degree_t() as usize;
    Ok((degree..=2 * degree.max(1)).find_map(|width| gamma_expand(f, width).ok()))
}

/// Splits a hop-invariant union over fixed-point counts: returns
/// `(k, expansion of E(Π ∩ S_{n,k}; t) about (n-k)/2)` for each `k`.
pub fn fixed_point_decomposition(
    en: &Enumerator,
    n: usize,
    ks: &[usize],
) -> Result<Vec<(usize, GammaExpansion)>, FormulaError> {
    ks.iter()
        .map(|&k| {
            let e = en.dist_exc(&ClassSpec::fixed_points(n, k)?)?;
            Ok((k, gamma_expand(&e, n - k)?))
        })
        .collect()
}

/// Small helper used by reports and the CLI: nonneg integral gammas as text.
pub fn gamma_strings(exp: &GammaExpansion) -> Vec<String> {
    exp.gammas.iter().map(|g| g.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::from_parts(parts.to_vec()).unwrap()
    }

    fn en() -> Enumerator {
        Enumerator::default()
    }

    #[test]
    fn lemma1_examples() {
        let id = lemma1_check(&Permutation::identity(4));
        assert!(id.passed());
        assert_eq!(id.lhs, MultiPoly::one());

        let three = lemma1_check(&Permutation::parse("2,3,1").unwrap());
        assert!(three.passed());
        let expect = MultiPoly::from_t_coeffs(vec![0, 1, 1]) * one_plus(MultiPoly::s());
        assert_eq!(three.lhs, expect);

        let big = lemma1_check(&Permutation::parse("(5,2,1)(6)(8)(11,9,10,4,3,7)").unwrap());
        assert!(big.passed());
    }

    #[test]
    fn theorem2_examples() {
        let der = theorem2_gamma(&en(), &ClassSpec::fixed_points(3, 0).unwrap()).unwrap();
        assert!(der.holds());
        assert_eq!(der.expansion.unwrap().gammas, vec![rat(0), rat(1)]);

        let id = theorem2_gamma(&en(), &ClassSpec::cycle_type(CycleType::ones(4))).unwrap();
        assert!(id.holds());
        assert_eq!(id.expansion.unwrap().gammas, vec![rat(1)]);

        let mixed = theorem2_gamma(&en(), &ClassSpec::cycle_type(ct(&[1, 2, 2, 4]))).unwrap();
        assert!(mixed.holds());
        assert!(
            theorem2_check(&en(), &ClassSpec::cycle_type(ct(&[1, 2, 2, 4])))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn corollary_examples() {
        let c3 = corollary3_check(&en(), 3, 0).unwrap();
        assert!(c3.passed());
        assert_eq!(c3.lhs, MultiPoly::from_t_coeffs(vec![0, 1, 1]));
        assert_eq!(corollary3_check(&en(), 4, 4).unwrap().lhs, MultiPoly::one());
        let der4 = corollary3_check(&en(), 4, 0).unwrap();
        assert!(der4.passed());
        assert_eq!(der4.lhs.coefficient_sum(), rat(9));

        let c4 = corollary4_check(&en(), 3, 0, 1).unwrap();
        assert!(c4.passed());
        assert_eq!(c4.rhs, MultiPoly::from_t_coeffs(vec![0, 1, 1]));
        assert_eq!(
            corollary4_check(&en(), 5, 5, 0).unwrap().rhs,
            MultiPoly::one()
        );
        assert!(corollary4_check(&en(), 5, 1, 1).unwrap().passed());
    }

    #[test]
    fn theorem4_and_5_examples() {
        let three = ClassSpec::cycle_type(ct(&[3]));
        let r4 = theorem4_check(&en(), &three).unwrap();
        assert!(r4.passed());
        // (t + t²)(1 + s)^3
        let expect = MultiPoly::from_t_coeffs(vec![0, 1, 1]) * one_plus(MultiPoly::s()).pow(3);
        assert_eq!(r4.lhs, expect);
        assert!(
            theorem4_check(&en(), &ClassSpec::cycle_type(CycleType::ones(3)))
                .unwrap()
                .passed()
        );
        assert!(
            theorem4_check(&en(), &ClassSpec::fixed_points(4, 0).unwrap())
                .unwrap()
                .passed()
        );

        // 2^3 (t + t²) = 2 · 4t · (1+t)
        let r5 = theorem5_check(&en(), &ClassSpec::fixed_points(3, 0).unwrap()).unwrap();
        assert!(r5.passed());
        assert_eq!(r5.lhs, MultiPoly::from_t_coeffs(vec![0, 8, 8]));
        assert!(
            theorem5_check(&en(), &ClassSpec::cycle_type(CycleType::ones(2)))
                .unwrap()
                .passed()
        );
        assert!(
            theorem5_check(&en(), &ClassSpec::cycle_type(ct(&[1, 2, 2])))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn corollary2_examples() {
        let three = corollary2_check(&en(), &ct(&[3])).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(three[1].gammas, vec![rat(0), rat(1)]);
        assert!(three[0].gammas.iter().all(|g| *g == rat(0)));
        let id = corollary2_check(&en(), &CycleType::ones(3)).unwrap();
        assert_eq!(id.len(), 1);
        assert_eq!(id[0].gammas, vec![rat(1)]);
        assert!(corollary2_report(&en(), &ct(&[2, 3])).unwrap().passed());
    }

    #[test]
    fn single_center_search() {
        // 4t + t², from S_{3,0} ∪ S_{3,1}
        let f = MultiPoly::from_t_coeffs(vec![0, 4, 1]);
        assert_eq!(expand_about_any_center(&f).unwrap(), None);
        let g = MultiPoly::from_t_coeffs(vec![0, 1, 1]);
        assert_eq!(expand_about_any_center(&g).unwrap().unwrap().width, 3);
    }
}
