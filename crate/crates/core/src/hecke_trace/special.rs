//! Hand-specialised trace formulas for `l = 2`, `l = 3` and for levels with
//! `(l, N) > 2 sqrt(l)`. They are independent evaluations of the general
//! formula in a few explicit cases and serve as cross-checks.

use num_traits::Zero;

use crate::arith::{big_pow, kd, rat, rat_int, Factored, Rat};
use crate::error::Result;
use crate::quadratic::h_weight;

use super::lambda::lambda;
use super::trace::k2_newform_term;
use super::{a_coeff, TraceQuery};

/// `A_k`: `1` for `k ≡ 0, 2 (mod 8)`, `-1` for `k ≡ 4, 6 (mod 8)`.
pub fn a_sign_mod8(k: u32) -> i64 {
    if matches!(k % 8, 0 | 2) {
        1
    } else {
        -1
    }
}

/// `B_k`: `1` for `k ≡ 0, 2 (mod 6)`, `-2` for `k ≡ 4 (mod 6)`.
pub fn b_sign_mod6(k: u32) -> i64 {
    if k % 6 == 4 {
        -2
    } else {
        1
    }
}

fn kappa_pow(base: i64, k: u32) -> Rat {
    rat_int(big_pow(base, k / 2 - 1))
}

/// `tr(T(2) | S_k^0(N))` for `4 ∤ N`:
///
/// ```text
/// -1/2 (-2)^κ (K_{-8}(N) + A_k K_{-4}(N)) - a_{1,2,k} K_{-7}(N) - K_1(N) + [k = 2] mu(N) prod_{p | 2//N} (1 + p)
/// ```
///
/// `None` when `4 | N`.
pub fn trace_newform_l2(k: u32, level: &Factored) -> Result<Option<Rat>> {
    let q = TraceQuery::from_factored(k, level.clone(), Factored::try_from(2)?)?;
    if level.valuation(2) >= 2 {
        return Ok(None);
    }
    let two = q.hecke();
    let p = kappa_pow(-2, k);
    let value =
        -rat(1, 2) * p * (kd(-8)?.eval(level) + rat_int(a_sign_mod8(k)) * kd(-4)?.eval(level))
            - a_coeff(1, two, k)? * kd(-7)?.eval(level)
            - kd(1)?.eval(level)
            + k2_newform_term(k, level, two);
    Ok(Some(value))
}

/// `Lambda_{0,3}(N)` from its explicit table in `v_2(N)`.
pub fn lambda_0_3_table(level: &Factored) -> Result<Rat> {
    let factor = match level.valuation(2) {
        0 => 4,
        1 | 2 => -2,
        3 => -6,
        4 => 6,
        _ => 0,
    };
    Ok(kd(-3)?.eval(&level.without_prime(2)) * rat_int(factor))
}

/// `Lambda_{4,3}(N)` from its explicit table in `v_2(N)`.
pub fn lambda_4_3_table(level: &Factored) -> Result<Rat> {
    let factor = match level.valuation(2) {
        0 => 2,
        4 => -2,
        _ => 0,
    };
    Ok(kd(1)?.eval(&level.without_prime(2)) * rat_int(factor))
}

/// `tr(T(3) | S_k^0(N))` for `9 ∤ N`:
///
/// ```text
/// -1/6 (-3)^κ (Lambda_{0,3}(N) + 2 B_k K_{-3}(N)) - a_{1,3,k} K_{-11}(N) - a_{2,3,k} K_{-8}(N)
///     - 1/2 Lambda_{4,3}(N) + [k = 2] mu(N) prod_{p | 3//N} (1 + p)
/// ```
///
/// `None` when `9 | N`.
pub fn trace_newform_l3(k: u32, level: &Factored) -> Result<Option<Rat>> {
    let q = TraceQuery::from_factored(k, level.clone(), Factored::try_from(3)?)?;
    if level.valuation(3) >= 2 {
        return Ok(None);
    }
    let three = q.hecke();
    let p = kappa_pow(-3, k);
    let value = -rat(1, 6)
        * p
        * (lambda_0_3_table(level)? + rat_int(2 * b_sign_mod6(k)) * kd(-3)?.eval(level))
        - a_coeff(1, three, k)? * kd(-11)?.eval(level)
        - a_coeff(2, three, k)? * kd(-8)?.eval(level)
        - rat(1, 2) * lambda_4_3_table(level)?
        + k2_newform_term(k, level, three);
    Ok(Some(value))
}

/// When `(l, N//l) = 1` and `(l, N) > 2 sqrt(l)` only `t = 0` survives:
///
/// ```text
/// tr(T(l) | S_k^0(N)) = -h_{0,l} (-l)^κ Lambda_{0,l}(N) + [k = 2] mu(N) prod_{p | l//N} (1 + p)
/// ```
///
/// with `h_{0,l}` half the class number of `Q(sqrt(-l))`. `None` outside
/// those hypotheses.
pub fn trace_newform_large_gcd(q: &TraceQuery) -> Result<Option<Rat>> {
    let (k, level, l) = (q.weight(), q.level(), q.hecke());
    if l.value() < 2 || !l.coprime_to(&level.exclusive_quotient(l)) {
        return Ok(None);
    }
    let g = l.gcd(level).value();
    if g * g <= 4 * l.value() {
        return Ok(None);
    }
    let lam = lambda(0, l, level)?;
    let main = if lam.is_zero() {
        Rat::zero()
    } else {
        h_weight(0, l)? * kappa_pow(-(l.value() as i64), k) * lam
    };
    Ok(Some(-main + k2_newform_term(k, level, l)))
}
