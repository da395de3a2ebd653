use num_traits::{One, Zero};

use crate::arith::{factor, rat_int, Factored, Rat};
use crate::dimension;
use crate::error::Result;
use crate::quadratic::h_weight;

use super::lambda::{c_global, lambda_el};
use super::local::b_value;
use super::{a_coeff, t_all, TElement, TraceQuery};

/// `a_{t,l,k} h_{t,l}` times the multiplicity of `±t`.
fn weight_of(el: &TElement, l: &Factored, k: u32) -> Result<Rat> {
    let a = a_coeff(el.t, l, k)?;
    let h = h_weight(el.t as i64, l)?;
    Ok(a * h * rat_int(el.multiplicity()))
}

/// `tr(T(l) | S_k(N))` from the Eichler-Selberg trace formula. `l = 1` gives `dim S_k(N)`.
pub fn trace_full(q: &TraceQuery) -> Result<Rat> {
    let (k, level, l) = (q.weight(), q.level(), q.hecke());
    if l.is_one() {
        return Ok(rat_int(dimension::dim_full(k, level)?));
    }
    let mut sum = Rat::zero();
    for el in t_all(l)? {
        let mut inner = Rat::zero();
        for phi in factor(el.m)?.divisors() {
            inner += rat_int(b_value(el.d, phi)) * c_global(&el, l, phi, level)?;
        }
        if !inner.is_zero() {
            sum += weight_of(&el, l, k)? * inner;
        }
    }
    let mut total = -sum;
    if k == 2 {
        // prod_{p | l} (1 + p) * omega_l(N), omega_l(p^n) = p / (1 + p) for p | l
        let mut correction = Rat::one();
        for p in l.primes() {
            correction *= if level.valuation(p) > 0 {
                rat_int(p)
            } else {
                rat_int(1 + p)
            };
        }
        total += correction;
    }
    Ok(total)
}

/// `tr(T(l) | S_k^0(N))` on the newform space. `l = 1` gives `dim S_k^0(N)`.
///
/// Vanishes when `(l, N//l) ≠ 1`; otherwise
///
/// ```text
/// - sum_{t in T(l)} a_{t,l,k} h_{t,l} Lambda_{t,l}(N) + [k = 2] mu(N) prod_{p | l//N} (1 + p).
/// ```
pub fn trace_newform(q: &TraceQuery) -> Result<Rat> {
    let (k, level, l) = (q.weight(), q.level(), q.hecke());
    if l.is_one() {
        return Ok(rat_int(dimension::dim_newform(k, level)?));
    }
    if !l.coprime_to(&level.exclusive_quotient(l)) {
        return Ok(Rat::zero());
    }
    let mut sum = Rat::zero();
    for el in t_all(l)? {
        let lam = lambda_el(&el, l, level)?;
        if !lam.is_zero() {
            sum += weight_of(&el, l, k)? * lam;
        }
    }
    Ok(-sum + k2_newform_term(k, level, l))
}

/// `[k = 2] mu(N) prod_{p | l//N} (1 + p)`.
pub(crate) fn k2_newform_term(k: u32, level: &Factored, l: &Factored) -> Rat {
    if k != 2 {
        return Rat::zero();
    }
    let extra: u64 = l
        .exclusive_quotient(level)
        .primes()
        .map(|p| 1 + p)
        .product();
    rat_int(level.mobius() * extra as i64)
}
