//! Decision procedures on type quadruples.
//!
//! A quadruple is admissible iff some interval partition realizes it: the
//! countable types are exactly those with `α+β+1 = δ` or
//! (`α+β+1 > δ` and `γ = ℵ₀`), and the uncountable ones are exactly those
//! with `α = 𝔠` and countable β, γ, δ.
//!
//! Embeddability of the corresponding refinements is decided by a fixed
//! table. The positive clauses: a separable space embeds into any
//! non-discrete one, and anything embeds into a non-separable non-discrete
//! one. The negative clauses follow from standard subspace facts — a
//! subspace of a separable metrizable space is separable, and a subspace of
//! a discrete space is discrete — so a discrete target admits only the
//! discrete type, and a separable target rejects every non-separable source.

use crate::cardinal::Cardinal;
use crate::partition::TypeQuadruple;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("type {0} is not admissible")]
pub struct InadmissibleType(pub TypeQuadruple);

/// Packaged embeddability answers for an ordered pair of types.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EmbedVerdict {
    pub forward: bool,
    pub backward: bool,
    pub homeomorphic: bool,
}

/// Membership in the countable admissible set.
pub fn in_q1(t: &TypeQuadruple) -> bool {
    let all_countable = [&t.alpha, &t.beta, &t.gamma, &t.delta]
        .iter()
        .all(|c| c.is_countable());
    if !all_countable {
        return false;
    }
    let lhs = t.alpha.add(&t.beta).add(&Cardinal::one());
    lhs == t.delta || (lhs > t.delta && t.gamma == Cardinal::Aleph0)
}

/// Membership in the uncountable admissible set.
pub fn in_q2(t: &TypeQuadruple) -> bool {
    t.alpha == Cardinal::Continuum
        && [&t.beta, &t.gamma, &t.delta]
            .iter()
            .all(|c| c.is_countable())
}

pub fn is_admissible(t: &TypeQuadruple) -> bool {
    in_q1(t) || in_q2(t)
}

fn ensure_admissible(t: &TypeQuadruple) -> Result<(), InadmissibleType> {
    if is_admissible(t) {
        Ok(())
    } else {
        Err(InadmissibleType(t.clone()))
    }
}

/// Separable iff the partition is countable (α ≤ ℵ₀).
pub fn is_separable(t: &TypeQuadruple) -> Result<bool, InadmissibleType> {
    ensure_admissible(t)?;
    Ok(t.alpha.is_countable())
}

/// Discrete iff the partition is all singletons, type (𝔠,0,0,0).
pub fn is_discrete(t: &TypeQuadruple) -> Result<bool, InadmissibleType> {
    ensure_admissible(t)?;
    Ok(
        t.alpha == Cardinal::Continuum
            && t.beta.is_zero()
            && t.gamma.is_zero()
            && t.delta.is_zero(),
    )
}

/// The type quadruple is a complete homeomorphism invariant.
pub fn homeomorphic(t1: &TypeQuadruple, t2: &TypeQuadruple) -> Result<bool, InadmissibleType> {
    ensure_admissible(t1)?;
    ensure_admissible(t2)?;
    Ok(t1 == t2)
}

/// Is the refinement of type `t1` homeomorphic to a subspace of the one of
/// type `t2`?
pub fn embeddable(t1: &TypeQuadruple, t2: &TypeQuadruple) -> Result<bool, InadmissibleType> {
    ensure_admissible(t1)?;
    ensure_admissible(t2)?;
    let d1 = is_discrete(t1)?;
    let d2 = is_discrete(t2)?;
    let s1 = is_separable(t1)?;
    let s2 = is_separable(t2)?;
    Ok((!d2 && (s1 || !s2)) || (d1 && d2))
}

pub fn compare(t1: &TypeQuadruple, t2: &TypeQuadruple) -> Result<EmbedVerdict, InadmissibleType> {
    Ok(EmbedVerdict {
        forward: embeddable(t1, t2)?,
        backward: embeddable(t2, t1)?,
        homeomorphic: homeomorphic(t1, t2)?,
    })
}

/// The α ∈ {0..3, ℵ₀, 𝔠}, β,γ,δ ∈ {0..3, ℵ₀} test grid, admissible members
/// only.
pub fn admissible_grid() -> Vec<TypeQuadruple> {
    let alphas: Vec<Cardinal> = (0..=3)
        .map(Cardinal::fin)
        .chain([Cardinal::Aleph0, Cardinal::Continuum])
        .collect();
    let rest: Vec<Cardinal> = (0..=3)
        .map(Cardinal::fin)
        .chain([Cardinal::Aleph0])
        .collect();
    let mut out = Vec::new();
    for a in &alphas {
        for b in &rest {
            for g in &rest {
                for d in &rest {
                    let t = TypeQuadruple {
                        alpha: a.clone(),
                        beta: b.clone(),
                        gamma: g.clone(),
                        delta: d.clone(),
                    };
                    if is_admissible(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TypeQuadruple {
        s.parse().unwrap()
    }

    #[test]
    fn q1_membership() {
        assert!(in_q1(&t("(0,0,0,1)")));
        assert!(in_q1(&t("(0,0,aleph0,0)")));
        assert!(!in_q1(&t("(0,0,3,0)")));
        assert!(in_q1(&t("(aleph0,2,0,aleph0)")));
        assert!(!in_q1(&t("(continuum,0,0,0)")));
    }

    #[test]
    fn q2_membership() {
        assert!(in_q2(&t("(continuum,0,0,0)")));
        assert!(in_q2(&t("(continuum,aleph0,aleph0,aleph0)")));
        assert!(!in_q2(&t("(aleph0,0,0,1)")));
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&t("(2,1,0,4)")));
        assert!(!is_admissible(&t("(2,1,0,5)")));
        assert!(is_admissible(&t("(continuum,5,0,0)")));
    }

    #[test]
    fn separability_and_discreteness() {
        assert_eq!(is_separable(&t("(0,0,0,1)")), Ok(true));
        assert_eq!(is_discrete(&t("(0,0,0,1)")), Ok(false));
        assert_eq!(is_separable(&t("(continuum,0,0,0)")), Ok(false));
        assert_eq!(is_discrete(&t("(continuum,0,0,0)")), Ok(true));
        assert_eq!(is_separable(&t("(continuum,1,0,0)")), Ok(false));
        assert_eq!(is_discrete(&t("(continuum,1,0,0)")), Ok(false));
        assert!(is_separable(&t("(2,1,0,5)")).is_err());
    }

    #[test]
    fn homeomorphy_is_type_equality() {
        assert_eq!(homeomorphic(&t("(1,2,0,4)"), &t("(1,2,0,4)")), Ok(true));
        assert_eq!(
            homeomorphic(&t("(0,0,aleph0,0)"), &t("(0,0,aleph0,1)")),
            Ok(false)
        );
        assert_eq!(
            homeomorphic(&t("(continuum,0,0,0)"), &t("(continuum,0,0,1)")),
            Ok(false)
        );
    }

    #[test]
    fn embeddability_examples() {
        assert_eq!(
            embeddable(&t("(0,0,0,1)"), &t("(aleph0,1,0,aleph0)")),
            Ok(true)
        );
        assert_eq!(
            embeddable(&t("(continuum,1,0,0)"), &t("(continuum,0,0,0)")),
            Ok(false)
        );
        assert_eq!(
            embeddable(&t("(continuum,0,0,0)"), &t("(continuum,0,0,0)")),
            Ok(true)
        );
        assert_eq!(
            embeddable(&t("(continuum,1,0,0)"), &t("(0,0,0,1)")),
            Ok(false)
        );
    }
}
