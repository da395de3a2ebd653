//! `Lambda_{t,l} = sum_{phi | m} b_{t,l,phi} (mu * mu[l] * c_{t,l,phi})`.
//!
//! Each summand is multiplicative in `N`, the sum over `phi` is not, so the
//! definitional evaluation works summand by summand.

use num_traits::{One, Zero};

use crate::arith::{
    factor, is_prime, kd, kronecker_unchecked, mu_mu_restricted, rat_int, Factored, Rat,
};
use crate::error::Result;

use super::local::{b_value, c_local_el};
use super::{t_element, TElement};

/// `Lambda_{t,l}(N)` straight from the definition, with every local factor
/// obtained by root counting.
pub fn lambda_definitional(t: u64, l: &Factored, level: &Factored) -> Result<Rat> {
    let el = t_element(t, l)?;
    lambda_definitional_el(&el, l, level)
}

pub(crate) fn lambda_definitional_el(el: &TElement, l: &Factored, level: &Factored) -> Result<Rat> {
    let mut total = 0i128;
    for phi in factor(el.m)?.divisors() {
        let mut product = i128::from(b_value(el.d, phi));
        for &(p, e) in level.factors() {
            let mut local = 0i128;
            for j in 0..=e {
                let mm = mu_mu_restricted(l, p, e - j);
                if mm != 0 {
                    local += i128::from(mm) * i128::from(c_local_el(el, l.value(), phi, p, j)?);
                }
            }
            product *= local;
            if product == 0 {
                break;
            }
        }
        total += product;
    }
    Ok(rat_int(total))
}

/// Closed forms for `Lambda_{t,l}(N)` when `(l, N//l) = 1`:
///
/// * `(l, N) ∤ t` gives `0`;
/// * otherwise `m = 1` gives `K_d(N)`;
/// * and `m` prime gives `K_d(N m^{-v}) * g(v)` with `v = v_m(N)` and `g` the
///   table in [`prime_conductor_factor`].
///
/// `None` when none of these apply.
pub fn lambda_closed(t: u64, l: &Factored, level: &Factored) -> Result<Option<Rat>> {
    let el = t_element(t, l)?;
    lambda_closed_el(&el, l, level)
}

pub(crate) fn lambda_closed_el(
    el: &TElement,
    l: &Factored,
    level: &Factored,
) -> Result<Option<Rat>> {
    if !l.coprime_to(&level.exclusive_quotient(l)) {
        return Ok(None);
    }
    let g = l.gcd(level).value();
    if el.t % g != 0 {
        return Ok(Some(Rat::zero()));
    }
    if el.m == 1 {
        return Ok(Some(kd(el.d)?.eval(level)));
    }
    if is_prime(el.m) {
        let m = el.m;
        let v = level.valuation(m);
        let rest = kd(el.d)?.eval(&level.without_prime(m));
        return Ok(Some(rest * rat_int(prime_conductor_factor(el.d, m, v))));
    }
    Ok(None)
}

/// The factor at `m` of `Lambda_{t,l}(N)` when the conductor `m` is prime,
/// as a function of `v = v_m(N)`.
fn prime_conductor_factor(d: i64, m: u64, v: u32) -> i64 {
    let chi = i64::from(kronecker_unchecked(d, m as i64));
    let m = m as i64;
    let m_divides_d = d % m == 0;
    match (v, m_divides_d) {
        (0, _) => m + 1 - chi,
        (1, _) => chi - 1,
        (2, _) => m * m - 2 * m - 1 + chi,
        (3, false) => (m - chi) * (m - 1) * (chi - 1),
        (4, false) => -(m - chi) * m * chi,
        (3, true) => 1 - m * m,
        (4, true) => m * (1 - m),
        (5, true) => m * m,
        _ => 0,
    }
}

/// `Lambda_{t,l}(N)`, using a closed form when one applies and the definition
/// otherwise.
pub fn lambda(t: u64, l: &Factored, level: &Factored) -> Result<Rat> {
    let el = t_element(t, l)?;
    lambda_el(&el, l, level)
}

pub(crate) fn lambda_el(el: &TElement, l: &Factored, level: &Factored) -> Result<Rat> {
    match lambda_closed_el(el, l, level)? {
        Some(v) => Ok(v),
        None => lambda_definitional_el(el, l, level),
    }
}

/// `c_{t,l,phi}(N)` as a product of local counts.
pub(crate) fn c_global(el: &TElement, l: &Factored, phi: u64, level: &Factored) -> Result<Rat> {
    let mut product = Rat::one();
    for &(p, e) in level.factors() {
        product *= rat_int(c_local_el(el, l.value(), phi, p, e)?);
    }
    Ok(product)
}
