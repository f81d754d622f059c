//! Exact checks of the expansion, binomial and generating-function
//! identities. Each returns the first failing index as a [`Verdict`].

use num_traits::Zero;

use super::{basic_sequence, rodrigues_variants, series_in, umbral_transfer, PolySequence, Verdict};
use crate::error::{Error, Result};
use crate::operator::{f_shift_value, DeltaOperator, OperatorSeries};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sequence::SequenceSpec;

fn fact(spec: &SequenceSpec, n: usize) -> Result<Rational> {
    Ok(Rational::from_integer(spec.f_factorial(n)?.into()))
}

/// `Q p_n = F_n p_{n−1}` for `n = 1..N`.
pub fn verify_defining_property(seq: &PolySequence, q: &DeltaOperator) -> Result<Verdict> {
    let spec = seq.spec();
    for n in 1..=seq.max_index() {
        let lhs = q.apply(&seq.polys()[n])?;
        let rhs = seq.polys()[n - 1].scale(&spec.term_ratio(n)?);
        if lhs != rhs {
            return Ok(Verdict::fail(
                "Q p_n = F_n p_(n-1)",
                n,
                format!("Q p_n = {lhs}, F_n p_(n-1) = {rhs}"),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// `p_n(x +_F y) = Σ_k C(n,k)_F p_k(x) p_{n−k}(y)` for every `n <= N`.
pub fn verify_binomial_type(seq: &PolySequence, y: &Rational) -> Result<Verdict> {
    let spec = seq.spec();
    let polys = seq.polys();
    for n in 0..polys.len() {
        let lhs = f_shift_value(spec, &polys[n], y)?;
        let mut rhs = Polynomial::zero();
        for k in 0..=n {
            let c = spec.fibonomial(n, k)? * polys[n - k].eval(y);
            rhs = rhs + polys[k].scale(&c);
        }
        if lhs != rhs {
            return Ok(Verdict::fail(
                "binomial type",
                n,
                format!("p_n(x +_F {y}) = {lhs}, convolution = {rhs}"),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// Expansion coefficients `a_n = [T q_n(x)]_{x=0}`, `n <= N`.
pub fn expand_operator(t: &OperatorSeries, basic: &PolySequence) -> Result<Vec<Rational>> {
    basic
        .polys()
        .iter()
        .map(|qn| Ok(t.apply(qn)?.eval(&Rational::zero())))
        .collect()
}

/// Rebuilds `Σ a_n/F_n! Q^n` from [`expand_operator`] and checks it acts
/// like `T` on `x^m`, `m <= N`.
pub fn verify_first_expansion(
    t: &OperatorSeries,
    q: &DeltaOperator,
    basic: &PolySequence,
) -> Result<Verdict> {
    let spec = basic.spec();
    let a = expand_operator(t, basic)?;
    let weights = a
        .iter()
        .enumerate()
        .map(|(n, an)| Ok(an / fact(spec, n)?))
        .collect::<Result<Vec<_>>>()?;
    let rebuilt = series_in(q.series(), &weights)?;
    for m in 0..=basic.max_index() {
        let xm = Polynomial::monomial(m);
        let lhs = t.apply(&xm)?;
        let rhs = rebuilt.apply(&xm)?;
        if lhs != rhs {
            return Ok(Verdict::fail(
                "first expansion",
                m,
                format!("T x^m = {lhs}, Σ a_n/F_n! Q^n x^m = {rhs}"),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// Sheffer binomial theorem `s_n(x +_F y) = Σ_k C(n,k)_F s_k(x) q_{n−k}(y)`
/// and its corollary `s_n(x) = Σ_k C(n,k)_F s_k(0) q_{n−k}(x)`.
pub fn verify_sheffer_binomial(
    sheffer: &PolySequence,
    basic: &PolySequence,
    y: &Rational,
) -> Result<Verdict> {
    let spec = sheffer.spec();
    if spec != basic.spec() {
        return Err(Error::SpecMismatch);
    }
    let (s, q) = (sheffer.polys(), basic.polys());
    if q.len() < s.len() {
        return Err(Error::InvalidSequence("basic sequence shorter than sheffer".into()));
    }
    let zero = Rational::zero();
    for n in 0..s.len() {
        let lhs = f_shift_value(spec, &s[n], y)?;
        let mut rhs = Polynomial::zero();
        let mut corollary = Polynomial::zero();
        for k in 0..=n {
            let c = spec.fibonomial(n, k)?;
            rhs = rhs + s[k].scale(&(&c * q[n - k].eval(y)));
            corollary = corollary + q[n - k].scale(&(&c * s[k].eval(&zero)));
        }
        if lhs != rhs {
            return Ok(Verdict::fail(
                "sheffer binomial",
                n,
                format!("s_n(x +_F {y}) = {lhs}, convolution = {rhs}"),
            ));
        }
        if corollary != s[n] {
            return Ok(Verdict::fail(
                "sheffer expansion at zero",
                n,
                format!("s_n = {}, Σ C(n,k)_F s_k(0) q_(n-k) = {corollary}", s[n]),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// `S^{-1} = Σ_k s_k(0)/F_k! Q^k`, compared by action on `x^m`, `m <= N`.
pub fn verify_s_inverse_expansion(
    sheffer: &PolySequence,
    q: &DeltaOperator,
    s: &OperatorSeries,
) -> Result<Verdict> {
    let spec = sheffer.spec();
    let weights = sheffer
        .polys()
        .iter()
        .enumerate()
        .map(|(k, sk)| Ok(sk.eval(&Rational::zero()) / fact(spec, k)?))
        .collect::<Result<Vec<_>>>()?;
    let rebuilt = series_in(q.series(), &weights)?;
    let s_inv = s.invert()?;
    for m in 0..=sheffer.max_index() {
        let xm = Polynomial::monomial(m);
        let lhs = s_inv.apply(&xm)?;
        let rhs = rebuilt.apply(&xm)?;
        if lhs != rhs {
            return Ok(Verdict::fail(
                "S^-1 expansion",
                m,
                format!("S^-1 x^m = {lhs}, Σ s_k(0)/F_k! Q^k x^m = {rhs}"),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// `E^y p = Σ_k s_k(y)/F_k! Q^k S p` (the expansion theorem with `T = I`).
pub fn verify_second_expansion(
    q: &DeltaOperator,
    s: &OperatorSeries,
    sheffer: &PolySequence,
    p: &Polynomial,
    y: &Rational,
) -> Result<Verdict> {
    let spec = sheffer.spec();
    let deg = p.degree().unwrap_or(0);
    if deg > sheffer.max_index() {
        return Err(Error::InvalidSequence(format!(
            "need s_0..s_{deg}, have up to s_{}",
            sheffer.max_index()
        )));
    }
    let lhs = f_shift_value(spec, p, y)?;
    let mut term = s.apply(p)?;
    let mut rhs = Polynomial::zero();
    for k in 0..=deg {
        let w = sheffer.polys()[k].eval(y) / fact(spec, k)?;
        rhs = rhs + term.scale(&w);
        term = q.apply(&term)?;
    }
    if lhs != rhs {
        return Ok(Verdict::fail(
            "second expansion",
            deg,
            format!("p(x +_F {y}) = {lhs}, Σ s_k(y)/F_k! Q^k S p = {rhs}"),
        ));
    }
    Ok(Verdict::Holds)
}

/// `[z^k]` coefficients, `k <= n`, of `exp_F{x r(z)} = Σ_m x^m r(z)^m / F_m!`.
fn exp_f_of_x_times(r: &OperatorSeries, n: usize) -> Result<Vec<Polynomial>> {
    let spec = r.spec();
    let mut out = vec![Polynomial::zero(); n + 1];
    let mut r_pow = OperatorSeries::identity(spec.clone(), r.order());
    for m in 0..=n {
        let inv_fact = Rational::from_integer(1.into()) / fact(spec, m)?;
        for (k, slot) in out.iter_mut().enumerate() {
            let c = r_pow.coeff(k);
            if !c.is_zero() {
                *slot = &*slot + Polynomial::term(c * &inv_fact, m);
            }
        }
        r_pow = r_pow.multiply(r)?;
    }
    Ok(out)
}

/// `Σ_k q_k(x)/F_k! z^k = exp_F{x q^{-1}(z)}` through order `N`.
pub fn verify_gf(basic: &PolySequence, q: &DeltaOperator) -> Result<Verdict> {
    let spec = basic.spec();
    let n = basic.max_index();
    let r = q.compositional_inverse()?;
    let coeffs = exp_f_of_x_times(&r, n)?;
    for (k, (qk, ck)) in basic.polys().iter().zip(&coeffs).enumerate() {
        let expect = qk.scale(&(Rational::from_integer(1.into()) / fact(spec, k)?));
        if &expect != ck {
            return Ok(Verdict::fail(
                "generating function",
                k,
                format!("q_k/F_k! = {expect}, [z^k] exp_F(x q^-1(z)) = {ck}"),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// `Σ_k s_k(x)/F_k! z^k = s(q^{-1}(z))^{-1} exp_F{x q^{-1}(z)}`.
pub fn verify_sheffer_gf(
    sheffer: &PolySequence,
    q: &DeltaOperator,
    s: &OperatorSeries,
) -> Result<Verdict> {
    let spec = sheffer.spec();
    let n = sheffer.max_index();
    let r = q.compositional_inverse()?;
    let prefactor = s.compose(&r)?.invert()?;
    let exp = exp_f_of_x_times(&r, n)?;
    for k in 0..=n {
        let mut rhs = Polynomial::zero();
        for j in 0..=k {
            rhs = rhs + exp[k - j].scale(&prefactor.coeff(j));
        }
        let lhs = sheffer.polys()[k].scale(&(Rational::from_integer(1.into()) / fact(spec, k)?));
        if lhs != rhs {
            return Ok(Verdict::fail(
                "sheffer generating function",
                k,
                format!("s_k/F_k! = {lhs}, series coefficient = {rhs}"),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// All four Rodrigues variants agree with each other for `n <= N`.
pub fn verify_rodrigues(q: &DeltaOperator, n_max: usize) -> Result<Verdict> {
    for n in 0..=n_max {
        let [v1, v2, v3, v4] = rodrigues_variants(q, n)?;
        for (name, v) in [("Lagrange Q'P^(-n-1)", &v1), ("P^(-n) transfer", &v2), ("x̂F P^(-n)", &v3)] {
            if v != &v4 {
                return Ok(Verdict::fail(
                    "rodrigues agreement",
                    n,
                    format!("{name} gives {v}, recursive step gives {v4}"),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Both transfer formulas from `source` reproduce the basic sequence of
/// `target`, `n <= N`.
pub fn verify_transfer(
    target: &DeltaOperator,
    source: &DeltaOperator,
    n_max: usize,
) -> Result<Verdict> {
    let expected = basic_sequence(target, n_max)?;
    let source_basic = basic_sequence(source, n_max)?;
    for n in 0..=n_max {
        let pair = umbral_transfer(target, source, &source_basic, n)?;
        let want = &expected.polys()[n];
        if &pair.via_pincherle != want {
            return Ok(Verdict::fail(
                "umbral transfer (pincherle form)",
                n,
                format!("transfer gives {}, direct gives {want}", pair.via_pincherle),
            ));
        }
        if let Some(v) = pair.via_xhat {
            if &v != want {
                return Ok(Verdict::fail(
                    "umbral transfer (x̂F form)",
                    n,
                    format!("transfer gives {v}, direct gives {want}"),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// One row of a printed table checked against regeneration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReport {
    pub index: usize,
    pub printed: Polynomial,
    pub regenerated: Polynomial,
    /// `Q p_n = F_n p_{n−1}` holds for the regenerated row.
    pub lowering_holds: bool,
}

impl RowReport {
    pub fn matches(&self) -> bool {
        self.printed == self.regenerated
    }

    pub fn describe(&self) -> String {
        if self.matches() {
            format!("n={}: matches printed row {}", self.index, self.printed)
        } else {
            format!(
                "n={}: suspected table typo: printed {} | regenerated {} (lowering relation {})",
                self.index,
                self.printed,
                self.regenerated,
                if self.lowering_holds { "holds" } else { "FAILS" }
            )
        }
    }
}

/// Compares printed rows with a regenerated sequence. The regenerated row
/// is ground truth as long as it satisfies the lowering relation of `q`.
pub fn compare_with_table(
    regenerated: &PolySequence,
    q: &DeltaOperator,
    rows: &[(usize, Polynomial)],
) -> Result<Vec<RowReport>> {
    let spec = regenerated.spec();
    rows.iter()
        .map(|(n, printed)| {
            let n = *n;
            let row = regenerated
                .get(n)
                .ok_or_else(|| Error::InvalidSequence(format!("no regenerated row {n}")))?
                .clone();
            let lowering_holds = if n == 0 {
                q.apply(&row)?.is_zero()
            } else {
                q.apply(&row)? == regenerated.polys()[n - 1].scale(&spec.term_ratio(n)?)
            };
            Ok(RowReport {
                index: n,
                printed: printed.clone(),
                regenerated: row,
                lowering_holds,
            })
        })
        .collect()
}
