//! Seeded randomized self-checks.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjoint::{adjunction_bijection, triangle_identities, unit_monic_check, ProfunctorP};
use crate::colimits::tensor_commute_check;
use crate::error::{CatError, Result};
use crate::flat::{is_flat, is_flat_via_elements};
use crate::generate::{random_category, random_flat_presheaf, random_presheaf, random_set_functor, CategoryShape};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    /// Cases abandoned because a search exceeded its budget.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            cases: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} skipped, {} failures",
            self.name,
            self.cases,
            self.skipped,
            self.failures.len()
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, " (first: {first})")?;
        }
        Ok(())
    }
}

const SMALL: CategoryShape = CategoryShape {
    max_objects: 3,
    max_arrows: 6,
    max_carrier: 2,
    terminal: false,
};

const TINY: CategoryShape = CategoryShape {
    max_objects: 2,
    max_arrows: 4,
    max_carrier: 2,
    terminal: false,
};

/// The three computations of `F ⊗ P` agree on random pairs.
pub fn tensor_suite(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("tensor-commute");
    for case in 0..cases {
        let cat = random_category(&mut rng, SMALL);
        let f = random_presheaf(&mut rng, &cat, 2);
        let p = random_set_functor(&mut rng, &cat, 2);
        report.cases += 1;
        match tensor_commute_check(&f, &p) {
            Ok(_) => {}
            Err(CatError::CommutationFailure { detail }) => report.failures.push(format!("case {case}: {detail}")),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Hom bijection, triangle identities and the two monicity criteria on
/// random profunctors.
pub fn adjunction_suite(seed: u64, cases: usize, budget: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("adjunction");
    for case in 0..cases {
        let c = random_category(&mut rng, TINY);
        let d = random_category(&mut rng, TINY);
        let h = random_set_functor(&mut rng, &c.product(&d.opposite()), 2);
        let p = ProfunctorP::from_bifunctor(&c, &d, &h)?;
        let f = random_set_functor(&mut rng, &d, 2);
        let g = random_set_functor(&mut rng, &c, 2);
        report.cases += 1;
        match adjunction_case(&p, &f, &g, budget) {
            Ok(None) => {}
            Ok(Some(why)) => report.failures.push(format!("case {case}: {why}")),
            Err(CatError::SearchBudgetExceeded { .. }) => report.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

fn adjunction_case(
    p: &ProfunctorP,
    f: &crate::SetFunctor,
    g: &crate::SetFunctor,
    budget: u64,
) -> Result<Option<String>> {
    if !adjunction_bijection(p, f, g, budget)?.mutually_inverse() {
        return Ok(Some("tau and chi are not mutually inverse".into()));
    }
    let (first, second) = triangle_identities(p, f, g, budget)?;
    if !first || !second {
        return Ok(Some(format!("triangle identities: {first}, {second}")));
    }
    for b in 0..p.target().num_objects() {
        let m = unit_monic_check(p, f, b, budget)?;
        if m.unit_injective != m.tilde_injective {
            return Ok(Some(format!("monic criteria disagree at `{}`", p.target().object_name(b))));
        }
    }
    Ok(None)
}

/// The direct flatness conditions agree with filteredness of the category of
/// elements.
pub fn flat_agreement_suite(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("flat-agreement");
    for case in 0..cases {
        let cat = random_category(&mut rng, SMALL);
        let f = if rng.gen_bool(0.3) {
            random_flat_presheaf(&mut rng, &cat)
        } else {
            random_presheaf(&mut rng, &cat, 2)
        };
        report.cases += 1;
        let (direct, via) = (is_flat(&f), is_flat_via_elements(&f)?);
        if direct != via {
            report.failures.push(format!("case {case}: conditions say {direct}, elements say {via}"));
        }
    }
    Ok(report)
}

/// All three suites, as run by the command-line self-test.
pub fn selftest(seed: u64, budget: u64) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        tensor_suite(seed, 200)?,
        adjunction_suite(seed, 50, budget)?,
        flat_agreement_suite(seed, 500)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfun::DEFAULT_BUDGET;

    #[test]
    fn selftest_passes_and_is_reproducible() {
        let a = selftest(3, DEFAULT_BUDGET).unwrap();
        assert!(a.iter().all(SuiteReport::passed), "{a:?}");
        assert_eq!(a, selftest(3, DEFAULT_BUDGET).unwrap());
    }
}
