use std::fmt;

use crate::error::{Error, Result};
use crate::isotonic::{seed_state, IsotonicParams, SeedState, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub n: u32,
    pub sign: Sign,
}

impl Step {
    pub fn new(n: u32, sign: Sign) -> Self {
        Step { n, sign }
    }

    pub fn plus(n: u32) -> Self {
        Step::new(n, Sign::Plus)
    }

    pub fn minus(n: u32) -> Self {
        Step::new(n, Sign::Minus)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.n, self.sign.as_char())
    }
}

/// Counts of `+` and `-` steps; `q = q_plus - q_minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ChargeRecord {
    pub q_plus: i64,
    pub q_minus: i64,
    pub q: i64,
}

pub fn charge(steps: &[Step]) -> ChargeRecord {
    let q_plus = steps.iter().filter(|s| s.sign == Sign::Plus).count() as i64;
    let q_minus = steps.len() as i64 - q_plus;
    ChargeRecord { q_plus, q_minus, q: q_plus - q_minus }
}

/// An ordered sequence of seeds applied to one oscillator. Steps are
/// pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    steps: Vec<Step>,
    params: IsotonicParams,
}

impl ChainSpec {
    pub fn new(steps: Vec<Step>, params: IsotonicParams) -> Result<Self> {
        for (i, s) in steps.iter().enumerate() {
            if steps[..i].contains(s) {
                return Err(Error::DuplicateStep { n: s.n, sign: s.sign.as_char() });
            }
        }
        Ok(ChainSpec { steps, params })
    }

    pub fn empty(params: IsotonicParams) -> Self {
        ChainSpec { steps: Vec::new(), params }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn params(&self) -> &IsotonicParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn charge(&self) -> ChargeRecord {
        charge(&self.steps)
    }

    /// The same chain with every `+` step ahead of every `-` step, relative
    /// order otherwise kept.
    pub fn reordered(&self) -> ChainSpec {
        let (plus, minus): (Vec<Step>, Vec<Step>) =
            self.steps.iter().partition(|s| s.sign == Sign::Plus);
        ChainSpec { steps: plus.into_iter().chain(minus).collect(), params: self.params.clone() }
    }

    pub fn with_params(&self, params: IsotonicParams) -> ChainSpec {
        ChainSpec { steps: self.steps.clone(), params }
    }

    /// The chain on the oscillator with `a + 1`.
    pub fn shifted(&self) -> ChainSpec {
        self.with_params(self.params.shifted())
    }

    pub fn prefix(&self, len: usize) -> ChainSpec {
        ChainSpec { steps: self.steps[..len].to_vec(), params: self.params.clone() }
    }

    pub fn seeds(&self) -> Result<Vec<SeedState>> {
        self.steps.iter().map(|s| seed_state(s.n, s.sign, &self.params)).collect()
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(Step::to_string).collect();
        write!(f, "[{}] ({})", steps.join(","), self.params)
    }
}

/// Every chain of at most `max_len` distinct steps with `n` in `ns`, in
/// lexicographic order of step sequences.
pub fn enumerate_chains(max_len: usize, ns: &[u32], params: &IsotonicParams) -> Vec<ChainSpec> {
    let steps: Vec<Step> = ns
        .iter()
        .flat_map(|&n| [Step::plus(n), Step::minus(n)])
        .collect();
    let mut out = vec![ChainSpec::empty(params.clone())];
    let mut frontier: Vec<Vec<Step>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for s in &steps {
                if !prefix.contains(s) {
                    let mut longer = prefix.clone();
                    longer.push(*s);
                    next.push(longer);
                }
            }
        }
        out.extend(next.iter().map(|s| ChainSpec { steps: s.clone(), params: params.clone() }));
        frontier = next;
    }
    out
}
