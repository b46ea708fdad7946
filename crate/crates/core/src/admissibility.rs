//! Which chains give regular, strictly isospectral extensions.
//!
//! The verdict rests on an exact Sturm count of the Wronskian polynomial on
//! `(0, inf)`. The charge conditions are evaluated alongside as the predicted
//! classification, so a disagreement between the two is visible in the report.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::chain::{charge, seed_wronskian, zero_free_part, ChainSpec, ChargeRecord, Step};
use crate::error::{Error, Result};
use crate::exact::rational::{self, int};
use crate::exact::{positive_root_count, rat, GaugedFunction, Rational};
use crate::isotonic::{IsotonicParams, Sign};

/// Behavior of a transported seed as `x -> inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfinityClass {
    Diverges,
    Vanishes,
}

impl InfinityClass {
    fn of(f: &GaugedFunction) -> Self {
        if f.exp_coeff().is_positive() {
            InfinityClass::Diverges
        } else {
            InfinityClass::Vanishes
        }
    }
}

/// Boundary condition at one step of the `+`-first reordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixCheck {
    pub step: Step,
    /// Charge of the steps before this one.
    pub prefix_charge: i64,
    /// `a > -q` for a `+` step, `a > 1 - q` for a `-` step.
    pub threshold: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub chain: ChainSpec,
    pub charge: ChargeRecord,
    /// `alpha > n` for each `-` step (always true for `+`), in chain order.
    pub seed_conditions: Vec<bool>,
    /// `-` steps with `a > n >= alpha`, where the two readings of the seed
    /// constraint disagree.
    pub a_alpha_ambiguous: Vec<Step>,
    pub prefix_checks: Vec<PrefixCheck>,
    /// Index into `prefix_checks` of the first failing condition.
    pub failing_prefix: Option<usize>,
    /// Positive roots of the Wronskian polynomial; `None` when the seeds or
    /// the Wronskian cannot be formed.
    pub nodeless_certificate: Option<usize>,
    pub origin_exponent: Option<Rational>,
    pub origin_exponent_exact: Option<Rational>,
    pub infinity_class: Option<InfinityClass>,
    /// The reciprocal of the last transported seed fails to be square
    /// integrable, so no level is added below the spectrum.
    pub inverse_state_excluded: Option<bool>,
}

impl AdmissibilityReport {
    pub fn conditions_hold(&self) -> bool {
        self.seed_conditions.iter().all(|&c| c) && self.failing_prefix.is_none()
    }

    pub fn admissible(&self) -> bool {
        self.conditions_hold() && self.nodeless_certificate == Some(0)
    }

    /// Human-readable reason for a rejection.
    pub fn rejection_reason(&self) -> Option<String> {
        let alpha = self.chain.params().alpha();
        if let Some((s, _)) = self
            .chain
            .steps()
            .iter()
            .zip(&self.seed_conditions)
            .find(|(_, ok)| !**ok)
        {
            return Some(format!("step {s} needs alpha > {}, got alpha = {alpha}", s.n));
        }
        if let Some(i) = self.failing_prefix {
            let c = &self.prefix_checks[i];
            return Some(format!(
                "step {} after charge {} needs a > {}",
                c.step, c.prefix_charge, c.threshold
            ));
        }
        match self.nodeless_certificate {
            Some(0) => None,
            Some(n) => Some(format!("Wronskian has {n} zero(s) on the positive half-line")),
            None => Some("Wronskian could not be formed".to_string()),
        }
    }
}

/// Per-step boundary conditions on the `+`-first reordering.
pub fn prefix_checks(chain: &ChainSpec) -> Vec<PrefixCheck> {
    let a = chain.params().a();
    let mut q = 0i64;
    chain
        .reordered()
        .steps()
        .iter()
        .map(|&step| {
            let threshold = match step.sign {
                Sign::Plus => int(-q),
                Sign::Minus => int(1 - q),
            };
            let check = PrefixCheck { step, prefix_charge: q, holds: *a > threshold, threshold };
            q += step.sign.as_i64();
            check
        })
        .collect()
}

/// Closed form `i_m (alpha + q) - 1/2` for the exponent at `0+` of the last
/// seed transported through the chain, `q` the full chain charge.
pub fn origin_exponent(chain: &ChainSpec) -> Option<Rational> {
    let last = chain.steps().last()?;
    let q = int(chain.charge().q);
    Some(int(last.sign.as_i64()) * (chain.params().alpha() + q) - rat(1, 2))
}

/// The last seed carried through the steps before it,
/// `W(phi_1..phi_m) / W(phi_1..phi_{m-1})`.
pub fn transported_last_seed(chain: &ChainSpec) -> Result<GaugedFunction> {
    if chain.is_empty() {
        return Err(Error::InvalidParams("empty chain has no seed".to_string()));
    }
    let full = seed_wronskian(chain)?;
    let prefix = seed_wronskian(&chain.prefix(chain.len() - 1))?;
    Ok(full.div(&prefix)?)
}

pub fn admissible(chain: &ChainSpec) -> AdmissibilityReport {
    let alpha = chain.params().alpha();
    let a = chain.params().a();
    let seed_conditions: Vec<bool> = chain
        .steps()
        .iter()
        .map(|s| s.sign == Sign::Plus || alpha > int(s.n as i64))
        .collect();
    let a_alpha_ambiguous = chain
        .steps()
        .iter()
        .filter(|s| s.sign == Sign::Minus && *a > int(s.n as i64) && alpha <= int(s.n as i64))
        .copied()
        .collect();
    let checks = prefix_checks(chain);
    let failing_prefix = checks.iter().position(|c| !c.holds);

    let wronskian = seed_wronskian(chain).ok();
    let nodeless_certificate = wronskian
        .as_ref()
        .and_then(|w| positive_root_count(&zero_free_part(w)).ok());
    let transported = if chain.is_empty() { None } else { transported_last_seed(chain).ok() };
    let origin_exponent_exact = transported.as_ref().and_then(GaugedFunction::origin_exponent);
    let inverse_state_excluded = transported.as_ref().and_then(|f| {
        let e = f.origin_exponent()?;
        // 1/f ~ x^{-e} e^{-cz}: square integrable iff -e > -1/2 and -c < 0
        let integrable = -e > rat(-1, 2) && f.exp_coeff().is_positive();
        Some(!integrable)
    });

    AdmissibilityReport {
        chain: chain.clone(),
        charge: chain.charge(),
        seed_conditions,
        a_alpha_ambiguous,
        prefix_checks: checks,
        failing_prefix,
        nodeless_certificate,
        origin_exponent: origin_exponent(chain),
        origin_exponent_exact,
        infinity_class: transported.as_ref().map(InfinityClass::of),
        inverse_state_excluded,
    }
}

/// Leading behavior of a two-step transported seed at both ends, as
/// computed from the exact closed form and as predicted case by case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepLeading {
    pub origin_exponent: Rational,
    pub infinity_exponent: Rational,
    pub infinity_class: InfinityClass,
    pub origin_sign: i32,
    pub infinity_sign: i32,
}

/// Exact leading data of `W(phi_1, phi_2) / phi_1`.
pub fn two_step_leading(chain: &ChainSpec) -> Result<TwoStepLeading> {
    if chain.len() != 2 {
        return Err(Error::InvalidParams(format!(
            "two-step asymptotics need exactly two steps, got {}",
            chain.len()
        )));
    }
    let f = transported_last_seed(chain)?;
    let origin_exponent = f.origin_exponent().ok_or(Error::ZeroWronskian)?;
    let infinity_exponent = f.infinity_exponent().ok_or(Error::ZeroWronskian)?;
    Ok(TwoStepLeading {
        origin_exponent,
        infinity_exponent,
        infinity_class: InfinityClass::of(&f),
        origin_sign: rational::sign(&f.origin_coefficient()),
        infinity_sign: rational::sign(&f.infinity_coefficient()),
    })
}

/// Case-by-case prediction for the two-step transported seed; the sign is
/// shared by both ends.
pub fn two_step_predicted(steps: [Step; 2], params: &IsotonicParams) -> TwoStepLeading {
    let alpha = params.alpha();
    let [s1, s2] = steps;
    let n2 = int(s2.n as i64);
    let order = match s2.n.cmp(&s1.n) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    };
    let parity = if s2.n % 2 == 0 { 1 } else { -1 };
    let (origin, infinity, class, sign) = match (s1.sign, s2.sign) {
        (Sign::Plus, Sign::Plus) => {
            (&alpha + rat(3, 2), int(2) * &n2 + &alpha - rat(1, 2), InfinityClass::Diverges, order)
        }
        (Sign::Minus, Sign::Minus) => (
            -&alpha + rat(3, 2),
            int(2) * &n2 - &alpha - rat(1, 2),
            InfinityClass::Vanishes,
            parity * order,
        ),
        (Sign::Minus, Sign::Plus) => {
            (&alpha - rat(1, 2), int(2) * &n2 + &alpha + rat(3, 2), InfinityClass::Diverges, 1)
        }
        (Sign::Plus, Sign::Minus) => (
            -&alpha - rat(1, 2),
            int(2) * &n2 - &alpha + rat(3, 2),
            InfinityClass::Vanishes,
            -parity,
        ),
    };
    TwoStepLeading {
        origin_exponent: origin,
        infinity_exponent: infinity,
        infinity_class: class,
        origin_sign: sign,
        infinity_sign: sign,
    }
}

/// Counts of `+` and `-` steps.
pub fn chain_charge(steps: &[Step]) -> ChargeRecord {
    charge(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn chain(steps: Vec<Step>, a: Rational) -> ChainSpec {
        ChainSpec::new(steps, IsotonicParams::new(int(1), a).unwrap()).unwrap()
    }

    #[test]
    fn charges() {
        assert_eq!(chain_charge(&[Step::plus(1), Step::plus(2)]).q, 2);
        assert_eq!(chain_charge(&[Step::minus(1), Step::minus(2)]).q, -2);
        assert_eq!(chain_charge(&[Step::plus(1), Step::minus(2)]).q, 0);
        let c = chain_charge(&[Step::plus(1), Step::minus(2), Step::plus(3)]);
        assert_eq!((c.q_plus, c.q_minus, c.q), (2, 1, 1));
    }

    #[test]
    fn verdicts() {
        let r = admissible(&chain(vec![Step::plus(1), Step::plus(2)], int(2)));
        assert!(r.admissible());
        let r = admissible(&chain(vec![Step::minus(1), Step::minus(2)], int(2)));
        assert!(!r.admissible());
        assert_eq!(r.seed_conditions, vec![true, false]);
        assert_eq!(r.nodeless_certificate, None);
        let r = admissible(&chain(vec![Step::minus(1), Step::minus(2)], int(4)));
        assert!(r.admissible());
        assert_eq!(r.nodeless_certificate, Some(0));
        assert_eq!(r.inverse_state_excluded, Some(true));
    }

    #[test]
    fn ambiguous_seed_reading_is_flagged() {
        let r = admissible(&chain(vec![Step::minus(2)], rat(9, 4)));
        assert_eq!(r.a_alpha_ambiguous, vec![Step::minus(2)]);
        assert!(!r.admissible());
    }

    #[test]
    fn origin_exponents() {
        let p = |steps| origin_exponent(&chain(steps, int(4))).unwrap();
        let alpha = rat(7, 2);
        assert_eq!(p(vec![Step::plus(1), Step::plus(2)]), &alpha + rat(3, 2));
        assert_eq!(p(vec![Step::plus(1), Step::minus(2)]), -&alpha - rat(1, 2));
        assert_eq!(p(vec![Step::plus(3)]), &alpha + rat(1, 2));
    }

    #[test]
    fn two_step_cases_match_prediction() {
        let params = IsotonicParams::new(int(1), int(4)).unwrap();
        for (s1, s2) in [
            (Step::plus(1), Step::plus(2)),
            (Step::minus(1), Step::minus(2)),
            (Step::minus(1), Step::plus(2)),
            (Step::plus(1), Step::minus(2)),
            (Step::plus(3), Step::plus(1)),
            (Step::minus(3), Step::minus(1)),
        ] {
            let c = ChainSpec::new(vec![s1, s2], params.clone()).unwrap();
            assert_eq!(two_step_leading(&c).unwrap(), two_step_predicted([s1, s2], &params), "{c}");
        }
        assert!(two_step_leading(&chain(vec![Step::plus(1)], int(2))).is_err());
    }

    #[test]
    fn sign_examples() {
        let p = IsotonicParams::new(int(1), int(4)).unwrap();
        assert_eq!(two_step_predicted([Step::plus(1), Step::plus(2)], &p).origin_sign, 1);
        assert_eq!(two_step_predicted([Step::minus(1), Step::minus(2)], &p).origin_sign, 1);
        let pm = two_step_predicted([Step::plus(1), Step::minus(2)], &p);
        assert_eq!((pm.infinity_class, pm.infinity_sign), (InfinityClass::Vanishes, -1));
        assert!(pm.origin_exponent < Rational::zero());
    }
}
