//! Sheffer sequences: the generic `S^{-1} q_n` route, the recurrence, and
//! the Hermite, Laguerre and Bernoulli families in closed form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{basic_sequence, f_over_n, PolySequence, SequenceKind};
use crate::error::{Error, Result};
use crate::operator::{xhat_apply, DeltaOperator, OperatorSeries};
use crate::poly::Polynomial;
use crate::rational::{rpow, Rational};
use crate::sequence::SequenceSpec;

fn check_pair(q: &DeltaOperator, s: &OperatorSeries) -> Result<()> {
    if q.spec() != s.spec() {
        return Err(Error::SpecMismatch);
    }
    if q.order() != s.order() {
        return Err(Error::OrderMismatch {
            left: q.order(),
            right: s.order(),
        });
    }
    if !s.is_invertible() {
        return Err(Error::NotInvertible);
    }
    Ok(())
}

/// Sheffer sequence of `Q` relative to `S`: `s_n = S^{-1} q_n`, `n <= N`.
pub fn sheffer_from_s(q: &DeltaOperator, s: &OperatorSeries, n_max: usize) -> Result<PolySequence> {
    check_pair(q, s)?;
    let basic = basic_sequence(q, n_max)?;
    let s_inv = s.invert()?;
    let polys = basic
        .polys()
        .iter()
        .map(|qn| s_inv.apply(qn))
        .collect::<Result<Vec<_>>>()?;
    let spec = q.spec();
    for n in 1..=n_max {
        if q.apply(&polys[n])? != polys[n - 1].scale(&spec.term_ratio(n)?) {
            return Err(Error::InvalidSequence(format!(
                "generated s_{n} fails Q s_n = F_n s_(n-1)"
            )));
        }
    }
    PolySequence::new(spec.clone(), polys, "sheffer", SequenceKind::Sheffer)
}

/// `s_{n+1} = F_{n+1}/(n+1) [x̂F − S'/S] (Q')^{-1} s_n`, where `(Q')^{-1}`
/// acts first and `S'/S` is `S' · S^{-1}`.
pub fn sheffer_recurrence(
    q: &DeltaOperator,
    s: &OperatorSeries,
    s_n: &Polynomial,
    n: usize,
) -> Result<Polynomial> {
    check_pair(q, s)?;
    let spec = q.spec();
    let lower = q.order() - 1;
    let u = q.pincherle().invert()?.apply(s_n)?;
    let log_derivative = s.pincherle().multiply(&s.truncate(lower)?.invert()?)?;
    let raised = xhat_apply(spec, &u)? - log_derivative.apply(&u)?;
    Ok(raised.scale(&f_over_n(spec, n + 1)?))
}

fn ratio(n: &num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// Hermite `S`: the inverse of `exp_F{−a ∂F²/2} = Σ_k (−a/2)^k ∂F^{2k} / F_k!`,
/// so that `S^{-1} x^n` is the closed Hermite sum.
pub fn hermite_s(spec: &SequenceSpec, a: &Rational, order: usize) -> Result<OperatorSeries> {
    let half = -a / Rational::from_integer(2.into());
    let mut coeffs = vec![Rational::zero(); order + 1];
    for k in 0..=order / 2 {
        coeffs[2 * k] = rpow(&half, k) / ratio(&spec.f_factorial(k)?);
    }
    OperatorSeries::new(spec.clone(), order, coeffs)?.invert()
}

/// `H_n = Σ_k (−a)^k / (2^k F_k!) · falling(n, 2k) · x^{n−2k}`.
pub fn hermite(spec: &SequenceSpec, a: &Rational, n_max: usize) -> Result<PolySequence> {
    let half = -a / Rational::from_integer(2.into());
    let mut polys = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for k in 0..=n / 2 {
            coeffs[n - 2 * k] = rpow(&half, k) * ratio(&spec.f_falling(n, 2 * k)?)
                / ratio(&spec.f_factorial(k)?);
        }
        polys.push(Polynomial::from_coeffs(coeffs));
    }
    PolySequence::new(spec.clone(), polys, format!("hermite(a={a})"), SequenceKind::Sheffer)
}

/// Laguerre `S = (I − ∂F)^{−α−1}`.
pub fn laguerre_s(spec: &SequenceSpec, alpha: i64, order: usize) -> Result<OperatorSeries> {
    let one_minus_d = OperatorSeries::identity(spec.clone(), order)
        .try_sub(&OperatorSeries::monomial(spec.clone(), order, 1))?;
    one_minus_d.power(-alpha - 1)
}

/// Laguerre polynomials of integer order `α >= −1`.
///
/// `α = −1` is the basic sequence of `∂F/(∂F − I)`; otherwise the closed
/// form `Σ_k F_n!/F_k! · C(α+n, n−k) · (−x)^k` with an ordinary binomial.
pub fn laguerre_alpha(spec: &SequenceSpec, alpha: i64, n_max: usize) -> Result<PolySequence> {
    if alpha < -1 {
        return Err(Error::InvalidSequence(format!(
            "laguerre order must be an integer >= -1, got {alpha}"
        )));
    }
    if alpha == -1 {
        let op = DeltaOperator::laguerre(spec.clone(), n_max + 2)?;
        let seq = basic_sequence(&op, n_max)?;
        return PolySequence::new(spec.clone(), seq.polys().to_vec(), "laguerre(alpha=-1)", SequenceKind::Basic);
    }
    let mut polys = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let nf = ratio(&spec.f_factorial(n)?);
        let top = BigInt::from(alpha + n as i64);
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let binom = num_integer::binomial(top.clone(), BigInt::from(n - k));
            let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            *c = &nf / ratio(&spec.f_factorial(k)?) * Rational::from_integer(binom) * sign;
        }
        polys.push(Polynomial::from_coeffs(coeffs));
    }
    PolySequence::new(
        spec.clone(),
        polys,
        format!("laguerre(alpha={alpha})"),
        SequenceKind::Sheffer,
    )
}

/// Bernoulli `S`, the inverse of `(E^1(∂F) − I)/∂F = Σ_{k≥1} ∂F^{k−1} / F_k!`.
pub fn bernoulli_s(spec: &SequenceSpec, order: usize) -> Result<OperatorSeries> {
    let coeffs = (0..=order)
        .map(|j| Ok(Rational::one() / ratio(&spec.f_factorial(j + 1)?)))
        .collect::<Result<Vec<_>>>()?;
    OperatorSeries::new(spec.clone(), order, coeffs)?.invert()
}

/// `B_n = Σ_k 1/F_{k+1} · C(n,k)_F · x^{n−k}`.
pub fn bernoulli(spec: &SequenceSpec, n_max: usize) -> Result<PolySequence> {
    let mut polys = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for k in 0..=n {
            let t = spec.term(k + 1)?;
            if t.is_zero() {
                return Err(Error::DegenerateSequence { index: k + 1 });
            }
            coeffs[n - k] = spec.fibonomial(n, k)? / ratio(&t);
        }
        polys.push(Polynomial::from_coeffs(coeffs));
    }
    PolySequence::new(spec.clone(), polys, "bernoulli", SequenceKind::Sheffer)
}
