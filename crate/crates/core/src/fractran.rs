//! Parser and exact-arithmetic interpreter for Fractran programs.
//!
//! A program is a finite ordered list of positive fractions. One step
//! multiplies the current value by the first fraction that yields an integer;
//! when none does, the program halts. Divisibility is decided by exact
//! remainder, never floating point.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// A positive rational in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    numer: BigUint,
    denom: BigUint,
}

impl Fraction {
    pub fn new(numer: BigUint, denom: BigUint) -> Result<Self, FractranError> {
        if numer.is_zero() {
            return Err(FractranError::ZeroNumerator);
        }
        if denom.is_zero() {
            return Err(FractranError::ZeroDenominator);
        }
        let g = numer.gcd(&denom);
        Ok(Fraction {
            numer: &numer / &g,
            denom: &denom / &g,
        })
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    /// `⌈numer/denom⌉`, computed exactly as `(numer + denom - 1) div denom`.
    pub fn ceil(&self) -> BigUint {
        (&self.numer + &self.denom - BigUint::one()) / &self.denom
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // p/q < r/s  iff  p*s < r*q for positive denominators.
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractranError {
    #[error("program must contain at least one fraction")]
    Empty,
    #[error("numerator must be positive")]
    ZeroNumerator,
    #[error("denominator must be positive")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("program is empty")]
    EmptyProgram,
    #[error("malformed fraction `{0}`, expected `numerator/denominator`")]
    MalformedToken(String),
    #[error("numerator must be positive")]
    ZeroNumerator,
    #[error("denominator must be positive")]
    ZeroDenominator,
}

/// An ordered, nonempty list of positive fractions.
#[derive(Debug, Clone)]
pub struct FractranProgram {
    fractions: Vec<Fraction>,
    source: Option<String>,
}

impl PartialEq for FractranProgram {
    fn eq(&self, other: &Self) -> bool {
        self.fractions == other.fractions
    }
}

impl Eq for FractranProgram {}

impl FractranProgram {
    pub fn new(fractions: Vec<Fraction>) -> Result<Self, FractranError> {
        if fractions.is_empty() {
            return Err(FractranError::Empty);
        }
        Ok(FractranProgram {
            fractions,
            source: None,
        })
    }

    /// Parses whitespace- or comma-separated `p/q` tokens; parentheses are
    /// treated as separators so the display form `(33/20, 5/11, ...)` parses
    /// as written.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let is_sep = |c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')';
        let mut fractions = Vec::new();
        let mut position = 0;
        let bytes_total = text.len();
        while position < bytes_total {
            let rest = &text[position..];
            let skipped = rest.len() - rest.trim_start_matches(is_sep).len();
            position += skipped;
            if position >= bytes_total {
                break;
            }
            let rest = &text[position..];
            let token_len = rest.find(is_sep).unwrap_or(rest.len());
            let token = &rest[..token_len];
            fractions.push(parse_token(token, position)?);
            position += token_len;
        }
        if fractions.is_empty() {
            return Err(ParseError {
                position: 0,
                kind: ParseErrorKind::EmptyProgram,
            });
        }
        Ok(FractranProgram {
            fractions,
            source: Some(String::from(text)),
        })
    }

    pub fn fractions(&self) -> &[Fraction] {
        &self.fractions
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    /// The largest fraction of the program (as a rational).
    pub fn max_fraction(&self) -> &Fraction {
        self.fractions.iter().max().expect("program is nonempty")
    }

    /// One iteration of the program extended with a halt sink: maps 0 to 0,
    /// otherwise multiplies by the first applicable fraction, and returns 0
    /// when no fraction applies (the program halts on that input).
    pub fn step(&self, n: &BigUint) -> BigUint {
        if n.is_zero() {
            return BigUint::zero();
        }
        for fraction in &self.fractions {
            let (q, r) = (n * &fraction.numer).div_rem(&fraction.denom);
            if r.is_zero() {
                return q;
            }
        }
        BigUint::zero()
    }

    /// Iterates [`step`](Self::step) from `n`, recording the trajectory. Stops
    /// when the program halts (the halt value stays last; the 0 marker is not
    /// appended) or after `max_steps` iterations.
    pub fn run(&self, n: &BigUint, max_steps: usize) -> FractranRun {
        let mut values = Vec::with_capacity(16);
        values.push(n.clone());
        let mut halted = false;
        for _ in 0..max_steps {
            let next = self.step(values.last().expect("nonempty"));
            if next.is_zero() {
                halted = true;
                break;
            }
            values.push(next);
        }
        FractranRun { values, halted }
    }
}

impl fmt::Display for FractranProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fraction) in self.fractions.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{fraction}")?;
        }
        Ok(())
    }
}

fn parse_token(token: &str, position: usize) -> Result<Fraction, ParseError> {
    let malformed = || ParseError {
        position,
        kind: ParseErrorKind::MalformedToken(String::from(token)),
    };
    let (numer, denom) = token.split_once('/').ok_or_else(malformed)?;
    if numer.is_empty()
        || denom.is_empty()
        || !numer.bytes().all(|b| b.is_ascii_digit())
        || !denom.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(malformed());
    }
    let numer: BigUint = numer.parse().map_err(|_| malformed())?;
    let denom: BigUint = denom.parse().map_err(|_| malformed())?;
    Fraction::new(numer, denom).map_err(|e| ParseError {
        position,
        kind: match e {
            FractranError::ZeroNumerator => ParseErrorKind::ZeroNumerator,
            FractranError::ZeroDenominator => ParseErrorKind::ZeroDenominator,
            FractranError::Empty => unreachable!("single fraction"),
        },
    })
}

/// The recorded trajectory of a bounded run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractranRun {
    values: Vec<BigUint>,
    halted: bool,
}

impl FractranRun {
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn halted(&self) -> bool {
        self.halted
    }

    pub fn final_value(&self) -> &BigUint {
        self.values.last().expect("run records the start value")
    }

    pub fn steps_taken(&self) -> usize {
        self.values.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Computes 13^(Hamming weight of N) when fed 2^N.
    pub(crate) const WEIGHT_PROGRAM: &str = "33/20 5/11 13/10 1/5 2/3 10/7 7/2";

    fn nat(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn parse_weight_program() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        assert_eq!(p.fractions().len(), 7);
        assert_eq!(p.fractions()[0], Fraction::new(nat(33), nat(20)).unwrap());
        assert_eq!(p.fractions()[6], Fraction::new(nat(7), nat(2)).unwrap());
    }

    #[test]
    fn parse_accepts_parens_and_commas() {
        let p = FractranProgram::parse("(33/20, 5/11, 13/10, 1/5, 2/3, 10/7, 7/2)").unwrap();
        assert_eq!(p, FractranProgram::parse(WEIGHT_PROGRAM).unwrap());
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        let p = FractranProgram::parse("6/4").unwrap();
        assert_eq!(p.fractions()[0], Fraction::new(nat(3), nat(2)).unwrap());
    }

    #[test]
    fn parse_single_fraction() {
        let p = FractranProgram::parse("3/2").unwrap();
        assert_eq!(p.fractions().len(), 1);
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        let err = FractranProgram::parse("1/0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(err.position, 0);
    }

    #[test]
    fn parse_rejects_malformed_tokens() {
        let err = FractranProgram::parse("3/2 7").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(matches!(err.kind, ParseErrorKind::MalformedToken(_)));
        assert!(FractranProgram::parse("3//2").is_err());
        assert!(FractranProgram::parse("-3/2").is_err());
    }

    #[test]
    fn parse_rejects_empty_program() {
        let err = FractranProgram::parse("  ,, ").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::EmptyProgram);
    }

    #[test]
    fn step_examples() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        assert_eq!(p.step(&nat(8)), nat(28));
        assert_eq!(p.step(&nat(169)), nat(0));
        assert_eq!(p.step(&nat(0)), nat(0));
    }

    #[test]
    fn step_picks_first_applicable_fraction() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        // 40 is divisible by 20 (first fraction) and by 10 and 2 further down.
        assert_eq!(p.step(&nat(40)), nat(66));
    }

    #[test]
    fn run_weight_program_from_eight() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        let run = p.run(&nat(8), 100);
        let expected: Vec<BigUint> = [8u64, 28, 40, 66, 30, 39, 26, 91, 130, 169]
            .iter()
            .map(|&v| nat(v))
            .collect();
        assert_eq!(run.values(), expected.as_slice());
        assert!(run.halted());
    }

    #[test]
    fn run_doubling_never_halts() {
        let p = FractranProgram::parse("2/1").unwrap();
        let run = p.run(&nat(1), 50);
        assert!(!run.halted());
        assert_eq!(run.values().len(), 51);
        assert_eq!(*run.final_value(), BigUint::from(2u8).pow(50));
    }

    #[test]
    fn run_zero_input_halts_immediately() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        let run = p.run(&nat(0), 10);
        assert!(run.halted());
        assert_eq!(run.values(), &[nat(0)]);
    }

    #[test]
    fn hamming_weight_property() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        for n in 0u32..=12 {
            let input = BigUint::from(2u8).pow(n);
            let run = p.run(&input, 100_000);
            assert!(run.halted(), "no halt for 2^{n}");
            let expected = BigUint::from(13u8).pow(n.count_ones());
            assert_eq!(*run.final_value(), expected, "wrong output for 2^{n}");
        }
    }

    #[test]
    fn max_fraction_and_ceil() {
        let p = FractranProgram::parse(WEIGHT_PROGRAM).unwrap();
        assert_eq!(*p.max_fraction(), Fraction::new(nat(7), nat(2)).unwrap());
        assert_eq!(p.max_fraction().ceil(), nat(4));
        assert_eq!(Fraction::new(nat(6), nat(3)).unwrap().ceil(), nat(2));
    }
}
