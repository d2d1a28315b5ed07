//! Properties of the hopping actions, each returning the first violation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclestat::hopping::{foata, foata_inverse, orbit, phi, psi, psi_letter};
use cyclestat::perm::Permutation;

pub type Check = Result<(), String>;

fn subset(mask: u32, n: usize) -> BTreeSet<u32> {
    (1..=n as u32)
        .filter(|x| mask >> (x - 1) & 1 == 1)
        .collect()
}

/// Involution, how ψ_S moves each statistic set, and cycle-type
/// preservation, for one `(π, S)`.
pub fn action_at(p: &Permutation, s: &BTreeSet<u32>) -> Check {
    let q = psi(p, s);
    if psi(&q, s) != *p {
        return Err(format!("psi not an involution at {p} S={s:?}"));
    }
    let phi_once = phi(p, s);
    if phi(&phi_once, s) != *p {
        return Err(format!("phi not an involution at {p} S={s:?}"));
    }
    let (a, b) = (p.stat_sets(), q.stat_sets());
    let cdasc: BTreeSet<u32> = a
        .cdasc
        .difference(s)
        .chain(s.intersection(&a.cddes))
        .copied()
        .collect();
    let cddes: BTreeSet<u32> = a
        .cddes
        .difference(s)
        .chain(s.intersection(&a.cdasc))
        .copied()
        .collect();
    if b.cval != a.cval || b.cpk != a.cpk || b.fix != a.fix || b.cdasc != cdasc || b.cddes != cddes
    {
        return Err(format!(
            "stat sets of psi({p}, {s:?}) = {q} break the hopping rules"
        ));
    }
    if q.cycle_type() != p.cycle_type() {
        return Err(format!("psi({p}, {s:?}) = {q} changed the cycle type"));
    }
    Ok(())
}

/// `ψ_x ψ_y = ψ_y ψ_x` for all letters.
pub fn commutes(p: &Permutation) -> Check {
    let n = p.len() as u32;
    for x in 1..=n {
        let px = psi_letter(p, x);
        for y in x + 1..=n {
            if psi_letter(&px, y) != psi_letter(&psi_letter(p, y), x) {
                return Err(format!("psi_{x} and psi_{y} do not commute at {p}"));
            }
        }
    }
    Ok(())
}

/// Orbit closure under single-letter hops, independent of the library's
/// subset enumeration.
pub fn closure(p: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([p.clone()]);
    let mut stack = vec![p.clone()];
    while let Some(q) = stack.pop() {
        for x in 1..=q.len() as u32 {
            let r = psi_letter(&q, x);
            if seen.insert(r.clone()) {
                stack.push(r);
            }
        }
    }
    seen
}

/// Orbit size `2^{n-fix-2cval}` and a unique `cdasc = 0` member equal to
/// `ψ_{Cdasc(π)}(π)`.
pub fn orbit_laws(p: &Permutation) -> Check {
    let c = p.stat_counts();
    let members = closure(p);
    let expect = 1usize << (p.len() - c.fix - 2 * c.cval);
    let report = orbit(p, true);
    if members.len() != expect || report.size as usize != expect {
        return Err(format!(
            "orbit of {p}: closure {} library {} expected {expect}",
            members.len(),
            report.size
        ));
    }
    if report
        .members
        .as_ref()
        .unwrap()
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        != members
    {
        return Err(format!("orbit members of {p} disagree with the closure"));
    }
    let reps: Vec<&Permutation> = members
        .iter()
        .filter(|m| m.stat_counts().cdasc == 0)
        .collect();
    if reps.len() != 1
        || *reps[0] != psi(p, &p.stat_sets().cdasc)
        || report.representative != *reps[0]
    {
        return Err(format!("orbit of {p}: representatives {reps:?}"));
    }
    Ok(())
}

pub fn foata_round_trip(p: &Permutation) -> Check {
    if foata_inverse(&foata(p)) != *p {
        return Err(format!("foata round trip fails at {p}"));
    }
    Ok(())
}

/// Every property for `π` over every `S ⊆ [n]`.
pub fn all_subsets(p: &Permutation) -> Check {
    let n = p.len();
    for mask in 0..1u32 << n {
        action_at(p, &subset(mask, n))?;
    }
    commutes(p)?;
    orbit_laws(p)?;
    foata_round_trip(p)
}

/// Singletons and a handful of caller-chosen subsets.
pub fn singletons_and(p: &Permutation, extra: &[BTreeSet<u32>]) -> Check {
    for x in 1..=p.len() as u32 {
        action_at(p, &BTreeSet::from([x]))?;
    }
    for s in extra {
        action_at(p, s)?;
    }
    Ok(())
}
