//! Shift-invariant operators as truncated formal series in the F-derivative.
//!
//! An [`OperatorSeries`] of order `N` is `c_0 I + c_1 ∂F + ... + c_N ∂F^N`,
//! stored in the plain basis. The divided basis `a_k = c_k · F_k!` is the
//! indicator `Σ a_k t^k / F_k!` and is available as a view. Because every
//! element is a series in the single operator `∂F`, products are plain
//! Cauchy products and all elements commute.
//!
//! The order is fixed at construction. Combining series of different orders
//! is an error, and applying a series to a polynomial of degree above its
//! order is refused: the result would silently drop terms.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{rpow, Rational};
use crate::sequence::SequenceSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSeries {
    spec: SequenceSpec,
    coeffs: Vec<Rational>,
}

impl OperatorSeries {
    /// Series of the given order from plain-basis coefficients; missing
    /// trailing coefficients are zero.
    pub fn new(spec: SequenceSpec, order: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::OrderMismatch {
                left: coeffs.len() - 1,
                right: order,
            });
        }
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, Rational::zero());
        Ok(OperatorSeries { spec, coeffs })
    }

    pub fn zero(spec: SequenceSpec, order: usize) -> Self {
        OperatorSeries {
            spec,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn identity(spec: SequenceSpec, order: usize) -> Self {
        Self::monomial(spec, order, 0)
    }

    /// `∂F^k`; the zero series when `k` exceeds the order.
    pub fn monomial(spec: SequenceSpec, order: usize, k: usize) -> Self {
        let mut s = Self::zero(spec, order);
        if k <= order {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    /// Builds from indicator (divided-basis) coefficients `a_k`.
    pub fn from_divided(spec: SequenceSpec, order: usize, divided: Vec<Rational>) -> Result<Self> {
        let facts = factorials(&spec, order)?;
        let coeffs = divided
            .into_iter()
            .zip(facts.iter())
            .map(|(a, f)| a / f)
            .collect();
        Self::new(spec, order, coeffs)
    }

    /// `E^y(∂F) = Σ y^k ∂F^k / F_k!`.
    pub fn translation(spec: SequenceSpec, y: &Rational, order: usize) -> Result<Self> {
        let facts = factorials(&spec, order)?;
        let coeffs = facts
            .iter()
            .enumerate()
            .map(|(k, f)| rpow(y, k) / f)
            .collect();
        Self::new(spec, order, coeffs)
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Indicator coefficients `a_k = c_k · F_k!`.
    pub fn divided_coeffs(&self) -> Result<Vec<Rational>> {
        let facts = factorials(&self.spec, self.order())?;
        Ok(self.coeffs.iter().zip(&facts).map(|(c, f)| c * f).collect())
    }

    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero() && self.order() >= 1 && !self.coeffs[1].is_zero()
    }

    pub fn is_invertible(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Drops coefficients above `order`; asking for a larger order is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(OperatorSeries {
            spec: self.spec.clone(),
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    fn with_coeffs(&self, coeffs: Vec<Rational>) -> Self {
        OperatorSeries {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_coeffs(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_coeffs(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn negate(&self) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }

    /// Operator product, i.e. the plain-basis Cauchy product truncated at the
    /// common order.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_coeffs(cauchy(&self.coeffs, &other.coeffs)))
    }

    /// Multiplicative inverse by triangular solve; needs `c_0 != 0`.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(self.with_coeffs(out))
    }

    /// `T^k`; negative powers go through [`invert`](Self::invert).
    pub fn power(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Self::identity(self.spec.clone(), self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.multiply(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Graves-Pincherle derivative `T x̂F − x̂F T`, which acts as formal
    /// differentiation of the series: coefficient `k − 1` of the result is
    /// `k · c_k`. The order drops by one (order-0 input gives the zero
    /// series of order 0).
    pub fn pincherle(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(self.spec.clone(), 0);
        }
        self.with_coeffs(
            (1..=n)
                .map(|k| &self.coeffs[k] * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `P` with `self = ∂F · P`; order drops by one. Needs `c_0 = 0`.
    pub fn divide_by_derivative(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::NotDelta);
        }
        Ok(self.with_coeffs(self.coeffs[1..].to_vec()))
    }

    /// Substitutes `inner` into `self` viewed as a plain power series,
    /// dropping every term above the common order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_compatible(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let mut acc = vec![Rational::zero(); self.coeffs.len()];
        for c in self.coeffs.iter().rev() {
            acc = cauchy(&acc, &inner.coeffs);
            acc[0] += c;
        }
        Ok(self.with_coeffs(acc))
    }

    /// The series `r` with `self(r(z)) = z` through the order, solved one
    /// coefficient at a time: `r_1 = 1/c_1`, and each later `r_k` enters the
    /// `z^k` coefficient of the composition only through `c_1 r_k`.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.is_delta() {
            return Err(Error::NotDelta);
        }
        let n = self.order();
        let c1_inv = self.coeffs[1].recip();
        let mut r = Self::zero(self.spec.clone(), n);
        r.coeffs[1] = c1_inv.clone();
        for k in 2..=n {
            let composed = self.compose(&r)?;
            r.coeffs[k] = -&composed.coeffs[k] * &c1_inv;
        }
        Ok(r)
    }

    /// `Σ c_k ∂F^k p`, exact for `deg p <= order`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let Some(deg) = p.degree() else {
            return Ok(Polynomial::zero());
        };
        if deg > self.order() {
            return Err(Error::Truncation {
                degree: deg,
                order: self.order(),
            });
        }
        let terms = int_terms(&self.spec, deg)?;
        let mut out = vec![Rational::zero(); deg + 1];
        // ∂F^k x^n = F_n F_{n-1} ... F_{n-k+1} x^{n-k}
        for (n, pn) in p.coeffs().iter().enumerate() {
            if pn.is_zero() {
                continue;
            }
            let mut falling = BigInt::one();
            for k in 0..=n {
                if k > 0 {
                    falling *= &terms[n - k + 1];
                }
                let ck = &self.coeffs[k];
                if !ck.is_zero() {
                    out[n - k] += ck * pn * Rational::from_integer(falling.clone());
                }
            }
        }
        Ok(Polynomial::from_coeffs(out))
    }

    /// Plain- and divided-basis coefficient lists, one per line.
    pub fn render(&self) -> String {
        let list = |v: &[Rational]| {
            v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        };
        let divided = match self.divided_coeffs() {
            Ok(a) => format!("[{}]", list(&a)),
            Err(e) => format!("unavailable ({e})"),
        };
        format!("c: [{}]\na: {}", list(&self.coeffs), divided)
    }
}

impl fmt::Display for OperatorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn cauchy(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut out = vec![Rational::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().take(n - i).enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `F_0..F_n` as signed integers.
fn int_terms(spec: &SequenceSpec, n: usize) -> Result<Vec<BigInt>> {
    (0..=n).map(|i| spec.term_int(i)).collect()
}

/// `F_0!..F_n!` as rationals.
fn factorials(spec: &SequenceSpec, n: usize) -> Result<Vec<Rational>> {
    spec.check_nondegenerate(n)?;
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(Rational::one());
    for k in 1..=n {
        acc *= spec.term_int(k)?;
        out.push(Rational::from_integer(acc.clone()));
    }
    Ok(out)
}

/// `p(x +_F y) = E^y(∂F) p(x)`.
pub fn f_shift_value(spec: &SequenceSpec, p: &Polynomial, y: &Rational) -> Result<Polynomial> {
    let order = p.degree().unwrap_or(0);
    OperatorSeries::translation(spec.clone(), y, order)?.apply(p)
}

/// `x̂F x^n = (n+1)/F_{n+1} x^{n+1}`. Not shift invariant, so it lives
/// outside [`OperatorSeries`].
pub fn xhat_apply(spec: &SequenceSpec, p: &Polynomial) -> Result<Polynomial> {
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    spec.check_nondegenerate(deg + 1)?;
    let mut out = vec![Rational::zero(); deg + 2];
    for (n, c) in p.coeffs().iter().enumerate() {
        let factor = Rational::new(BigInt::from(n + 1), spec.term_int(n + 1)?);
        out[n + 1] = c * factor;
    }
    Ok(Polynomial::from_coeffs(out))
}

/// Left inverse of x̂F: `x^{n+1} ↦ F_{n+1}/(n+1) x^n`, constants to zero.
pub fn xhat_inverse_apply(spec: &SequenceSpec, p: &Polynomial) -> Result<Polynomial> {
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    if deg == 0 {
        return Ok(Polynomial::zero());
    }
    let mut out = vec![Rational::zero(); deg];
    for (m, c) in p.coeffs().iter().enumerate().skip(1) {
        let factor = Rational::new(spec.term_int(m)?, BigInt::from(m));
        out[m - 1] = c * factor;
    }
    Ok(Polynomial::from_coeffs(out))
}

/// An [`OperatorSeries`] with `c_0 = 0` and `c_1 != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaOperator(OperatorSeries);

impl DeltaOperator {
    pub fn new(series: OperatorSeries) -> Result<Self> {
        if series.is_delta() {
            Ok(DeltaOperator(series))
        } else {
            Err(Error::NotDelta)
        }
    }

    pub fn series(&self) -> &OperatorSeries {
        &self.0
    }

    pub fn into_series(self) -> OperatorSeries {
        self.0
    }

    /// The invertible `P` with `Q = ∂F · P`, one order lower than `Q`.
    pub fn factor(&self) -> OperatorSeries {
        self.0
            .divide_by_derivative()
            .expect("delta operators have zero constant term")
    }

    /// `∂F` itself.
    pub fn f_derivative(spec: SequenceSpec, order: usize) -> Result<Self> {
        Self::new(OperatorSeries::monomial(spec, order.max(1), 1))
    }

    /// `ΔF = E^1(∂F) − I`.
    pub fn forward_difference(spec: SequenceSpec, order: usize) -> Result<Self> {
        let e = OperatorSeries::translation(spec.clone(), &Rational::one(), order)?;
        Self::new(e.try_sub(&OperatorSeries::identity(spec, order))?)
    }

    /// `∇F = I − E^{-1}(∂F)`.
    pub fn backward_difference(spec: SequenceSpec, order: usize) -> Result<Self> {
        let e = OperatorSeries::translation(spec.clone(), &-Rational::one(), order)?;
        Self::new(OperatorSeries::identity(spec, order).try_sub(&e)?)
    }

    /// `A = ∂F E^a(∂F) = Σ a^k/F_k! ∂F^{k+1}`.
    pub fn abel(spec: SequenceSpec, a: &Rational, order: usize) -> Result<Self> {
        let e = OperatorSeries::translation(spec.clone(), a, order)?;
        let d = OperatorSeries::monomial(spec, order, 1);
        Self::new(d.multiply(&e)?)
    }

    /// `∂F / (∂F − I) = −Σ_{k≥0} ∂F^{k+1}`.
    pub fn laguerre(spec: SequenceSpec, order: usize) -> Result<Self> {
        let coeffs = (0..=order)
            .map(|k| if k == 0 { Rational::zero() } else { -Rational::one() })
            .collect();
        Self::new(OperatorSeries::new(spec, order, coeffs)?)
    }
}

impl Deref for DeltaOperator {
    type Target = OperatorSeries;
    fn deref(&self) -> &OperatorSeries {
        &self.0
    }
}

impl AsRef<OperatorSeries> for DeltaOperator {
    fn as_ref(&self) -> &OperatorSeries {
        &self.0
    }
}
