//! The sign subspaces `S_k^0(N; i)`.
//!
//! For `i | N^×`, `S_k^0(N; i)` is spanned by the primitive forms with
//! `a_p = -p^κ` for `p | i` and `a_p = p^κ` for the other primes of `N^×`.
//! Averaging with the characters `<h, i>` of the group of divisors of `N^×`
//! gives, for `(l, N^×) = 1`,
//!
//! ```text
//! tr(T(l) | S_k^0(N; i)) = 1/sigma_0(N^×) sum_{h | N^×} <h, i> h^{-κ} tr(T(hl) | S_k^0(N))
//! ```

use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{big_pow, nstar, rat_int, sign_pair, Factored, Rat};
use crate::error::{invalid, Error, Result};
use crate::hecke_trace::{check_weight, trace_newform, TraceQuery};

fn check_split_args(n: &Factored, l: &Factored, i: &Factored) -> Result<Factored> {
    let star = nstar(n);
    if !i.divides(star.value()) {
        return invalid(format!("i = {i} does not divide N^× = {star}"));
    }
    if !l.coprime_to(&star) {
        return invalid(format!("l = {l} is not coprime to N^× = {star}"));
    }
    Ok(star)
}

/// `tr(T(l) | S_k^0(N; i))`.
///
/// Terms with `(hl, N//hl) ≠ 1` vanish through [`trace_newform`]; this happens
/// when `l` meets a prime whose square divides `N`.
pub fn trace_split(k: u32, n: &Factored, l: &Factored, i: &Factored) -> Result<Rat> {
    check_weight(k)?;
    let star = check_split_args(n, l, i)?;
    let kappa = k / 2 - 1;
    let mut sum = Rat::zero();
    for h in star.divisors_factored() {
        let q = TraceQuery::from_factored(k, n.clone(), h.mul(l)?)?;
        let tr = trace_newform(&q)?;
        if tr.is_zero() {
            continue;
        }
        let sign = sign_pair(&h, i)?;
        sum += tr * rat_int(sign) / rat_int(big_pow(h.value() as i64, kappa));
    }
    Ok(sum / rat_int(star.num_divisors()))
}

/// `dim S_k^0(N; i)`.
pub fn dim_split(k: u32, n: &Factored, i: &Factored) -> Result<u64> {
    let v = trace_split(k, n, &Factored::one(), i)?;
    if !v.is_integer() || v.is_negative() {
        return Err(Error::Inconsistent(format!(
            "dim S_{k}^0({n}; {i}) evaluated to {v}"
        )));
    }
    v.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Inconsistent("dimension does not fit in u64".into()))
}

/// `d_k(N; i) = dim S_k^0(N; i) - [k = 2][i = 1] mu(N)`.
pub fn d_table(k: u32, n: &Factored, i: &Factored) -> Result<i64> {
    let dim = dim_split(k, n, i)? as i64;
    let correction = if k == 2 && i.is_one() { n.mobius() } else { 0 };
    Ok(dim - correction)
}

/// `dim S_k^0(N; i)` for every `i | N^×`, in increasing `i`.
pub fn split_dimensions(k: u32, n: &Factored) -> Result<Vec<(Factored, u64)>> {
    nstar(n)
        .divisors_factored()
        .into_iter()
        .map(|i| dim_split(k, n, &i).map(|d| (i, d)))
        .collect()
}
