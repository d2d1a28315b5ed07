//! Runs one claim over a range of instances.

use super::checks::{
    brenti_check, corollary2_report, corollary3_check, corollary4_check, lemma1_check,
    theorem1_check, theorem2_check, theorem4_check, theorem5_check, theorem6_check,
};
use super::egf::egf_check;
use super::report::{Claim, VerificationReport};
use super::FormulaError;
use crate::enumerate::{all_permutations, partitions_of, ClassSpec, Enumerator};
use crate::exec::map_slice;
use crate::perm::{CycleType, Permutation};

/// One unit of work in a batch.
#[derive(Debug, Clone)]
enum Job {
    Class(Claim, CycleType),
    Spec(Claim, ClassSpec),
    Orbit(Permutation),
    Egf(usize),
}

impl Job {
    fn run(&self, en: &Enumerator) -> Result<Vec<VerificationReport>, FormulaError> {
        let single = |r: VerificationReport| Ok(vec![r]);
        match self {
            Job::Class(claim, lambda) => {
                let spec = ClassSpec::cycle_type(lambda.clone());
                match claim {
                    Claim::Brenti => single(brenti_check(en, lambda)?),
                    Claim::Theorem1 => single(theorem1_check(en, lambda)?),
                    Claim::Theorem6 => single(theorem6_check(en, lambda)?),
                    Claim::Cor2 => single(corollary2_report(en, lambda)?),
                    other => Job::Spec(*other, spec).run(en),
                }
            }
            Job::Spec(claim, spec) => match (claim, spec) {
                (Claim::Theorem2, _) => single(theorem2_check(en, spec)?),
                (Claim::Theorem4, _) => single(theorem4_check(en, spec)?),
                (Claim::Theorem5, _) => single(theorem5_check(en, spec)?),
                (Claim::Cor3, ClassSpec::FixedPoints { n, k }) => {
                    single(corollary3_check(en, *n, *k)?)
                }
                (Claim::Cor4, ClassSpec::FixedPointsAndCval { n, k, i }) => {
                    single(corollary4_check(en, *n, *k, *i)?)
                }
                _ => Err(FormulaError::Unsupported(format!("{claim} on {spec}"))),
            },
            Job::Orbit(sigma) => single(lemma1_check(sigma)),
            Job::Egf(n_max) => egf_check(en, *n_max),
        }
    }
}

fn jobs_for(claim: Claim, n_max: usize) -> Result<Vec<Job>, FormulaError> {
    let sizes = 1..=n_max;
    let classes = || {
        sizes
            .clone()
            .flat_map(partitions_of)
            .map(move |lambda| Job::Class(claim, lambda))
            .collect::<Vec<_>>()
    };
    let fixed_points = || -> Result<Vec<Job>, FormulaError> {
        let mut out = Vec::new();
        for n in sizes.clone() {
            for k in 0..=n {
                out.push(Job::Spec(claim, ClassSpec::fixed_points(n, k)?));
            }
        }
        Ok(out)
    };
    Ok(match claim {
        Claim::Brenti | Claim::Theorem1 | Claim::Theorem6 | Claim::Cor2 => classes(),
        Claim::Theorem2 | Claim::Theorem4 | Claim::Theorem5 => {
            let mut jobs = classes();
            jobs.extend(fixed_points()?);
            jobs
        }
        Claim::Cor3 => fixed_points()?,
        Claim::Cor4 => {
            let mut out = Vec::new();
            for n in sizes {
                for k in 0..=n {
                    for i in 0..=(n - k) / 2 {
                        out.push(Job::Spec(claim, ClassSpec::fixed_points_and_cval(n, k, i)?));
                    }
                }
            }
            out
        }
        // One representative per orbit: the unique member with no cyclic double ascent.
        Claim::Lemma1 => sizes
            .flat_map(all_permutations)
            .filter(|p| p.stat_counts().cdasc == 0)
            .map(Job::Orbit)
            .collect(),
        Claim::Egf => vec![Job::Egf(n_max)],
    })
}

/// Checks `claim` on every instance up to size `n_max`, or only on `lambda`
/// when given. Instances may run concurrently; the returned order is fixed.
pub fn verify_batch(
    en: &Enumerator,
    claim: Claim,
    n_max: usize,
    lambda: Option<&CycleType>,
) -> Result<Vec<VerificationReport>, FormulaError> {
    let jobs = match lambda {
        Some(lambda) if claim.takes_lambda() => vec![Job::Class(claim, lambda.clone())],
        Some(_) => {
            return Err(FormulaError::Unsupported(format!(
                "{claim} is not parameterized by a cycle type"
            )))
        }
        None => jobs_for(claim, n_max)?,
    };
    let results = map_slice(en.execution, &jobs, |job| job.run(en));
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Every claim in turn, in the fixed order of [`Claim::ALL`].
pub fn verify_all(en: &Enumerator, n_max: usize) -> Result<Vec<VerificationReport>, FormulaError> {
    let mut out = Vec::new();
    for claim in Claim::ALL {
        out.extend(verify_batch(en, claim, n_max, None)?);
    }
    Ok(out)
}
