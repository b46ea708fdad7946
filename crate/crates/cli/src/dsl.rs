//! Chain specifications such as `"1+,2-"`: comma-separated steps, each a seed
//! index followed by `+` or `-`. The empty string is the unextended oscillator.

use isodbt::chain::{ChainSpec, Step};
use isodbt::exact::{int, parse_rational};
use isodbt::isotonic::{IsotonicParams, Sign};
use thiserror::Error;

use crate::error::CliError;

/// Largest seed index accepted; higher indices build polynomials whose
/// exact construction is not interactive.
pub const MAX_SEED_INDEX: u32 = 40;
pub const MAX_CHAIN_LEN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{reason} at position {position} ({token:?})")]
pub struct ChainParseError {
    /// Character offset of the token in the input.
    pub position: usize,
    pub token: String,
    pub reason: ParseReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseReason {
    #[error("empty step")]
    EmptyStep,
    #[error("expected a seed index followed by '+' or '-'")]
    Malformed,
    #[error("seed index above {MAX_SEED_INDEX}")]
    IndexTooLarge,
    #[error("more than {MAX_CHAIN_LEN} steps")]
    TooLong,
    #[error("same-sign duplicate of an earlier step, the seed Wronskian vanishes")]
    Duplicate,
    #[error("seed needs alpha > {n}, got alpha = {alpha}")]
    SeedConstraint { n: u32, alpha: String },
}

impl ParseReason {
    /// Well-formed input naming a chain that cannot be regular.
    pub fn is_constraint(&self) -> bool {
        matches!(self, ParseReason::Duplicate | ParseReason::SeedConstraint { .. })
    }
}

fn parse_step(token: &str) -> Result<Step, ParseReason> {
    let sign = match token.chars().last() {
        Some('+') => Sign::Plus,
        Some('-' | '\u{2212}') => Sign::Minus,
        _ => return Err(ParseReason::Malformed),
    };
    let digits = &token[..token.len() - token.chars().last().map_or(0, char::len_utf8)];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseReason::Malformed);
    }
    match digits.parse::<u32>() {
        Ok(n) if n <= MAX_SEED_INDEX => Ok(Step::new(n, sign)),
        _ => Err(ParseReason::IndexTooLarge),
    }
}

/// Syntax only: well-formed, bounded and free of repeated steps.
pub fn parse_steps(text: &str) -> Result<Vec<Step>, ChainParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut steps: Vec<Step> = Vec::new();
    let mut offset = 0;
    for raw in text.split(',') {
        let token = raw.trim();
        let lead = if token.is_empty() { 0 } else { raw.chars().take_while(|c| c.is_whitespace()).count() };
        let error = |reason| ChainParseError { position: offset + lead, token: token.to_string(), reason };
        if token.is_empty() {
            return Err(error(ParseReason::EmptyStep));
        }
        let step = parse_step(token).map_err(error)?;
        if steps.contains(&step) {
            return Err(error(ParseReason::Duplicate));
        }
        if steps.len() == MAX_CHAIN_LEN {
            return Err(error(ParseReason::TooLong));
        }
        steps.push(step);
        offset += raw.chars().count() + 1;
    }
    Ok(steps)
}

/// A validated chain on the given oscillator; every `-` seed needs `alpha > n`.
pub fn parse_chain(text: &str, params: &IsotonicParams) -> Result<ChainSpec, ChainParseError> {
    let steps = parse_steps(text)?;
    let alpha = params.alpha();
    let mut offset = 0;
    for raw in text.split(',') {
        let token = raw.trim();
        if let Ok(step) = parse_step(token) {
            if step.sign == Sign::Minus && alpha <= int(step.n as i64) {
                let lead = raw.chars().take_while(|c| c.is_whitespace()).count();
                return Err(ChainParseError {
                    position: offset + lead,
                    token: token.to_string(),
                    reason: ParseReason::SeedConstraint { n: step.n, alpha: alpha.to_string() },
                });
            }
        }
        offset += raw.chars().count() + 1;
    }
    Ok(ChainSpec::new(steps, params.clone()).expect("steps are distinct"))
}

/// Oscillator parameters from `p/q` strings.
pub fn parse_params(omega: &str, a: &str) -> Result<IsotonicParams, CliError> {
    let value = |name: &str, text: &str| {
        parse_rational(text).map_err(|_| CliError::Input(format!("--{name} expects an exact rational p/q, got {text:?}")))
    };
    IsotonicParams::new(value("omega", omega)?, value("a", a)?).map_err(CliError::input)
}

/// Canonical text of a chain, the inverse of `parse_steps`.
pub fn format_steps(steps: &[Step]) -> String {
    steps.iter().map(Step::to_string).collect::<Vec<_>>().join(",")
}
