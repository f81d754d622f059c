//! Basic and Sheffer polynomial sequences of delta operators, and
//! executable forms of the identities that tie them to the operator algebra.

mod basic;
mod families;
mod verify;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::operator::OperatorSeries;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sequence::SequenceSpec;

pub use basic::{basic_sequence, rodrigues_variants, umbral_transfer, TransferPair};
pub use families::{
    bernoulli, bernoulli_s, hermite, hermite_s, laguerre_alpha, laguerre_s, sheffer_from_s,
    sheffer_recurrence,
};
pub use verify::{
    compare_with_table, expand_operator, verify_binomial_type, verify_defining_property,
    verify_first_expansion, verify_gf, verify_rodrigues, verify_s_inverse_expansion,
    verify_second_expansion, verify_sheffer_binomial, verify_sheffer_gf, verify_transfer,
    RowReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `q_0 = 1`, `q_n(0) = 0` for `n >= 1`.
    Basic,
    /// `s_0` a nonzero constant.
    Sheffer,
}

/// An indexed family `p_0, ..., p_N` with `deg p_n = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    spec: SequenceSpec,
    polys: Vec<Polynomial>,
    label: String,
    kind: SequenceKind,
}

impl PolySequence {
    pub fn new(
        spec: SequenceSpec,
        polys: Vec<Polynomial>,
        label: impl Into<String>,
        kind: SequenceKind,
    ) -> Result<Self> {
        let label = label.into();
        if polys.is_empty() {
            return Err(Error::InvalidSequence(format!("{label}: no polynomials")));
        }
        for (n, p) in polys.iter().enumerate() {
            if p.degree() != Some(n) {
                return Err(Error::InvalidSequence(format!(
                    "{label}: p_{n} has degree {:?}",
                    p.degree()
                )));
            }
        }
        match kind {
            SequenceKind::Basic => {
                if polys[0] != Polynomial::one() {
                    return Err(Error::InvalidSequence(format!("{label}: q_0 != 1")));
                }
                if let Some(n) = (1..polys.len()).find(|&n| !polys[n].coeff(0).is_zero()) {
                    return Err(Error::InvalidSequence(format!("{label}: q_{n}(0) != 0")));
                }
            }
            // degree 0 already forces a nonzero constant
            SequenceKind::Sheffer => {}
        }
        Ok(PolySequence {
            spec,
            polys,
            label,
            kind,
        })
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> Option<&Polynomial> {
        self.polys.get(n)
    }

    /// Highest index `N`.
    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// Copy with `p_n` replaced, re-checking the invariants. Mostly useful
    /// for building corrupted inputs.
    pub fn with_replaced(&self, n: usize, p: Polynomial) -> Result<Self> {
        let mut polys = self.polys.clone();
        let slot = polys
            .get_mut(n)
            .ok_or_else(|| Error::InvalidSequence(format!("no index {n}")))?;
        *slot = p;
        Self::new(self.spec.clone(), polys, self.label.clone(), self.kind)
    }

    /// First `n + 1` members.
    pub fn prefix(&self, n: usize) -> Result<Self> {
        if n > self.max_index() {
            return Err(Error::InvalidSequence(format!(
                "{}: asked for index {n}, have {}",
                self.label,
                self.max_index()
            )));
        }
        Ok(PolySequence {
            polys: self.polys[..=n].to_vec(),
            ..self.clone()
        })
    }

    /// One `n=<index>: <poly>` line per member.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (n, p) in self.polys.iter().enumerate() {
            out.push_str(&format!("n={n}: {p}\n"));
        }
        out
    }

    /// List of coefficient-triple lists, index order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.polys.iter().map(Polynomial::to_json).collect())
    }
}

/// A named identity failed at the smallest offending index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub index: usize,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at n={}: {}", self.identity, self.index, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated(Violation),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(v) => Some(v),
        }
    }

    pub(crate) fn fail(identity: &'static str, index: usize, detail: impl Into<String>) -> Self {
        Verdict::Violated(Violation {
            identity,
            index,
            detail: detail.into(),
        })
    }
}

/// `F_n / n` as a rational; only meaningful for `n >= 1`.
pub(crate) fn f_over_n(spec: &SequenceSpec, n: usize) -> Result<Rational> {
    Ok(spec.term_ratio(n)? / Rational::from_integer(n.into()))
}

/// `Σ_k coeffs[k] Q^k` as a series of `Q`'s order.
pub(crate) fn series_in(q: &OperatorSeries, coeffs: &[Rational]) -> Result<OperatorSeries> {
    let mut acc = OperatorSeries::zero(q.spec().clone(), q.order());
    let mut qk = OperatorSeries::identity(q.spec().clone(), q.order());
    for c in coeffs {
        acc = acc.try_add(&qk.scale(c))?;
        qk = qk.multiply(q)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_invariants() {
        let fib = SequenceSpec::Fibonacci;
        let ok = PolySequence::new(
            fib.clone(),
            vec![Polynomial::one(), "x".parse().unwrap(), "x^2 - x".parse().unwrap()],
            "t",
            SequenceKind::Basic,
        )
        .unwrap();
        assert_eq!(ok.render_text(), "n=0: 1\nn=1: x\nn=2: x^2 - x\n");
        assert_eq!(ok.to_json().to_string(), "[[[0,1,1]],[[1,1,1]],[[1,-1,1],[2,1,1]]]");
        assert!(ok.with_replaced(2, "x^2 + 1".parse().unwrap()).is_err());
        assert!(ok.with_replaced(1, "x^2".parse().unwrap()).is_err());
        assert!(PolySequence::new(
            fib.clone(),
            vec!["2".parse().unwrap()],
            "t",
            SequenceKind::Basic
        )
        .is_err());
        assert!(PolySequence::new(fib, vec!["2".parse().unwrap()], "t", SequenceKind::Sheffer).is_ok());
    }
}
