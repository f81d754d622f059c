//! Integer sequences driving the calculus: Fibonacci numbers by default, or
//! any finite list of non-negative integers `a_0, a_1, ...`.
//!
//! Everything downstream (F-factorials, fibonomials, the F-derivative and
//! cobweb level sizes) only ever asks for `term(n)`, so a custom sequence
//! swaps the whole calculus over to the generalized setting.

use std::fmt;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The sequence `a_n` a calculus instance is built over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceSpec {
    /// `F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n`.
    Fibonacci,
    /// Explicit terms `a_0, a_1, ...`; indices past the end are an error.
    Custom(Arc<[BigUint]>),
}

fn fibonacci_memo() -> &'static RwLock<Vec<BigUint>> {
    static MEMO: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(vec![BigUint::zero(), BigUint::one()]))
}

fn fibonacci(n: usize) -> BigUint {
    {
        let memo = fibonacci_memo().read().expect("fibonacci memo poisoned");
        if let Some(v) = memo.get(n) {
            return v.clone();
        }
    }
    let mut memo = fibonacci_memo().write().expect("fibonacci memo poisoned");
    while memo.len() <= n {
        let k = memo.len();
        let next = &memo[k - 1] + &memo[k - 2];
        memo.push(next);
    }
    memo[n].clone()
}

impl SequenceSpec {
    pub fn custom<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        SequenceSpec::Custom(terms.into_iter().map(Into::into).collect())
    }

    /// Parses one non-negative integer per line, index 0 first. Blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse_terms(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let value: BigUint = line.parse().map_err(|_| {
                Error::Parse(format!(
                    "line {}: expected a non-negative integer, got {line:?}",
                    lineno + 1
                ))
            })?;
            terms.push(value);
        }
        if terms.is_empty() {
            return Err(Error::Parse("sequence file holds no terms".into()));
        }
        Ok(SequenceSpec::Custom(terms.into()))
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse_terms(&text)
    }

    /// Number of available terms, `None` for the infinite Fibonacci sequence.
    pub fn term_count(&self) -> Option<usize> {
        match self {
            SequenceSpec::Fibonacci => None,
            SequenceSpec::Custom(terms) => Some(terms.len()),
        }
    }

    pub fn term(&self, n: usize) -> Result<BigUint> {
        match self {
            SequenceSpec::Fibonacci => Ok(fibonacci(n)),
            SequenceSpec::Custom(terms) => terms.get(n).cloned().ok_or(Error::OutOfRange {
                index: n,
                len: terms.len(),
            }),
        }
    }

    /// `a_n` as a signed integer, for mixing with rational arithmetic.
    pub fn term_int(&self, n: usize) -> Result<BigInt> {
        self.term(n).map(BigInt::from)
    }

    /// `a_n` as an exact rational.
    pub fn term_ratio(&self, n: usize) -> Result<BigRational> {
        self.term_int(n).map(BigRational::from_integer)
    }

    /// Falling factorial `a_n a_{n-1} ... a_{n-k+1}`; empty product for `k = 0`.
    pub fn f_falling(&self, n: usize, k: usize) -> Result<BigUint> {
        if k > n {
            return Err(Error::FallingDomain { n, k });
        }
        let mut acc = BigUint::one();
        for i in (n - k + 1)..=n {
            acc *= self.term(i)?;
        }
        Ok(acc)
    }

    /// `a_n! = a_n a_{n-1} ... a_1`, with `a_0! = 1`. Zero terms among
    /// `a_1..a_n` make the factorial useless as a divisor and are rejected.
    pub fn f_factorial(&self, n: usize) -> Result<BigUint> {
        let mut acc = BigUint::one();
        for i in 1..=n {
            let t = self.term(i)?;
            if t.is_zero() {
                return Err(Error::DegenerateSequence { index: i });
            }
            acc *= t;
        }
        Ok(acc)
    }

    /// `a_n! / (a_k! a_{n-k}!)`, computed as `falling(n, k) / a_k!`.
    ///
    /// Zero for `k > n`. For the Fibonacci sequence the value is always an
    /// integer; for custom sequences it may be a proper fraction.
    pub fn fibonomial(&self, n: usize, k: usize) -> Result<BigRational> {
        if k > n {
            return Ok(BigRational::zero());
        }
        let den = self.f_factorial(k)?;
        // falling(n, k) only touches terms n-k+1..n; make sure those are usable too
        self.f_factorial(n)?;
        let num = self.f_falling(n, k)?;
        Ok(BigRational::new(num.into(), den.into()))
    }

    /// Checks that `a_1..a_n` are all nonzero.
    pub fn check_nondegenerate(&self, n: usize) -> Result<()> {
        for i in 1..=n {
            if self.term(i)?.is_zero() {
                return Err(Error::DegenerateSequence { index: i });
            }
        }
        Ok(())
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Fibonacci => f.write_str("fibonacci"),
            SequenceSpec::Custom(terms) => write!(f, "custom({} terms)", terms.len()),
        }
    }
}
