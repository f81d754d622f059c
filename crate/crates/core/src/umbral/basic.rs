use super::{f_over_n, PolySequence, SequenceKind};
use crate::error::{Error, Result};
use crate::operator::{xhat_apply, xhat_inverse_apply, DeltaOperator};
use crate::poly::Polynomial;

fn require_order(q: &DeltaOperator, n: usize) -> Result<()> {
    if q.order() < n + 1 {
        return Err(Error::Truncation {
            degree: n + 1,
            order: q.order(),
        });
    }
    Ok(())
}

/// The basic sequence `q_0..q_N` of `Q`, generated by the Rodrigues step
/// `q_n = (F_n/n) x̂F (Q')^{-1} q_{n-1}`.
///
/// Needs `Q.order() >= N + 1`. The defining relation `Q q_n = F_n q_{n-1}`
/// and `q_n(0) = 0` are re-checked on the result.
pub fn basic_sequence(q: &DeltaOperator, n_max: usize) -> Result<PolySequence> {
    require_order(q, n_max)?;
    let spec = q.spec().clone();
    let qp_inv = q.pincherle().invert()?;
    let mut polys = vec![Polynomial::one()];
    for n in 1..=n_max {
        let step = qp_inv.apply(&polys[n - 1])?;
        let next = xhat_apply(&spec, &step)?.scale(&f_over_n(&spec, n)?);
        polys.push(next);
    }
    for n in 1..=n_max {
        let lowered = q.apply(&polys[n])?;
        if lowered != polys[n - 1].scale(&spec.term_ratio(n)?) {
            return Err(Error::InvalidSequence(format!(
                "generated q_{n} fails Q q_n = F_n q_(n-1)"
            )));
        }
    }
    PolySequence::new(spec, polys, "basic", SequenceKind::Basic)
}

/// `q_n` by each of the four Lagrange/Rodrigues formulas, with `Q = ∂F P`:
///
/// 1. `Q' P^{-n-1} x^n`
/// 2. `P^{-n} x^n − (F_n/n) (P^{-n})' x^{n-1}`
/// 3. `(F_n/n) x̂F P^{-n} x^{n-1}`
/// 4. the recursive step used by [`basic_sequence`]
///
/// At `n = 0` every variant is `1`.
pub fn rodrigues_variants(q: &DeltaOperator, n: usize) -> Result<[Polynomial; 4]> {
    require_order(q, n)?;
    if n == 0 {
        return Ok(std::array::from_fn(|_| Polynomial::one()));
    }
    let spec = q.spec().clone();
    let ni = n as i64;
    let p = q.factor();
    let xn = Polynomial::monomial(n);
    let xn1 = Polynomial::monomial(n - 1);
    let fn_n = f_over_n(&spec, n)?;

    let lagrange = q.pincherle().multiply(&p.power(-ni - 1)?)?.apply(&xn)?;

    let p_neg_n = p.power(-ni)?;
    let transfer = p_neg_n.apply(&xn)? - p_neg_n.pincherle().apply(&xn1)?.scale(&fn_n);

    let xhat_form = xhat_apply(&spec, &p_neg_n.apply(&xn1)?)?.scale(&fn_n);

    let recursive = basic_sequence(q, n)?.polys()[n].clone();

    Ok([lagrange, transfer, xhat_form, recursive])
}

/// Both transfer-formula routes from one basic sequence to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferPair {
    /// `Q' (R')^{-1} S^{-n-1} P^{n+1} r_n`.
    pub via_pincherle: Polynomial,
    /// `x̂F (P S^{-1})^n x̂F^{-1} r_n`; `None` at `n = 0`, where it is undefined.
    pub via_xhat: Option<Polynomial>,
}

/// Computes `q_n` of `target = ∂F S` from `r_n` of `source = ∂F P`.
pub fn umbral_transfer(
    target: &DeltaOperator,
    source: &DeltaOperator,
    source_basic: &PolySequence,
    n: usize,
) -> Result<TransferPair> {
    if target.spec() != source.spec() {
        return Err(Error::SpecMismatch);
    }
    if target.order() != source.order() {
        return Err(Error::OrderMismatch {
            left: target.order(),
            right: source.order(),
        });
    }
    require_order(target, n)?;
    let r_n = source_basic
        .get(n)
        .ok_or_else(|| Error::InvalidSequence(format!("source sequence lacks index {n}")))?;
    let spec = target.spec().clone();
    let s = target.factor();
    let p = source.factor();
    let ni = n as i64;

    // q_n = Q' S^{-n-1} x^n and x^n = (R')^{-1} P^{n+1} r_n
    let chain = target
        .pincherle()
        .multiply(&source.pincherle().invert()?)?
        .multiply(&s.power(-ni - 1)?)?
        .multiply(&p.power(ni + 1)?)?;
    let via_pincherle = chain.apply(r_n)?;

    let via_xhat = if n == 0 {
        None
    } else {
        let ps = p.multiply(&s.invert()?)?.power(ni)?;
        let inner = ps.apply(&xhat_inverse_apply(&spec, r_n)?)?;
        Some(xhat_apply(&spec, &inner)?)
    };
    Ok(TransferPair {
        via_pincherle,
        via_xhat,
    })
}
