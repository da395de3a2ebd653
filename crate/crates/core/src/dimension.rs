//! `dim S_k(N)` from the classical formula and `dim S_k^0(N) = (mu * mu * dim S_k)(N)`.
//!
//! ```text
//! dim S_k = (k-1)/12 eps_id + 1/4 (-1)^(k/2) eps_2 - 1/3 ((k-1)/3) eps_3 - 1/2 eps_inf + [k = 2]
//! ```
//!
//! Since `mu * mu * eps_2 = K_{-4}`, `mu * mu * eps_3 = K_{-3}` and
//! `mu * mu * 1 = mu`, the newform dimension also has the closed form
//!
//! ```text
//! (k-1)/12 (mu*mu*eps_id) + 1/4 (-1)^(k/2) K_{-4} - 1/3 ((k-1)/3) K_{-3} - 1/2 (mu*mu*eps_inf) + [k = 2] mu
//! ```

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{eps_functions, kd, kronecker, rat, rat_int, Factored, MultFn, Rat};
use crate::error::{Error, Result};
use crate::hecke_trace::check_weight;

fn coefficients(k: u32) -> (Rat, Rat, Rat) {
    let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
    let chi3 = i64::from(kronecker(i64::from(k) - 1, 3).expect("3 is nonzero"));
    (rat(i64::from(k) - 1, 12), rat(sign, 4), rat(-chi3, 3))
}

fn to_count(value: Rat, what: &str) -> Result<u64> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Inconsistent(format!("{what} evaluated to {value}")));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Inconsistent(format!("{what} does not fit in u64")))
}

fn dim_full_rat(k: u32, n: &Factored) -> Rat {
    let eps = eps_functions();
    let (c_id, c_two, c_three) = coefficients(k);
    let mut v = c_id * eps.id.eval(n) + c_two * eps.two.eval(n) + c_three * eps.three.eval(n)
        - rat(1, 2) * eps.inf.eval(n);
    if k == 2 {
        v += rat_int(1);
    }
    v
}

/// `dim S_k(N)`.
pub fn dim_full(k: u32, n: &Factored) -> Result<u64> {
    check_weight(k)?;
    to_count(dim_full_rat(k, n), &format!("dim S_{k}({n})"))
}

/// `(mu * mu * dim S_k)(N)`, summing over the divisors of `N`.
pub fn dim_newform_convolution(k: u32, n: &Factored) -> Result<Rat> {
    check_weight(k)?;
    let mu_mu = MultFn::mu_mu_restricted(&Factored::one());
    let mut total = Rat::zero();
    for d in n.divisors_factored() {
        let coeff = mu_mu.eval(&n.div_exact(&d)?);
        if !coeff.is_zero() {
            total += coeff * dim_full_rat(k, &d);
        }
    }
    Ok(total)
}

/// `(mu * mu * eps_id)(p^n)`.
fn mu_mu_eps_id(p: u64, n: u32) -> BigInt {
    let p = BigInt::from(p);
    match n {
        1 => &p - 1,
        2 => &p * &p - &p - 1,
        _ => num_traits::pow(p.clone(), n as usize - 3) * (&p - 1) * (&p * &p - 1),
    }
}

/// `(mu * mu * eps_inf)(p^n)`.
fn mu_mu_eps_inf(p: u64, n: u32) -> BigInt {
    let p = BigInt::from(p);
    match n {
        _ if n % 2 == 1 => BigInt::zero(),
        2 => p - 2,
        _ => num_traits::pow(p.clone(), (n / 2 - 2) as usize) * (&p - 1) * (&p - 1),
    }
}

/// The closed form for `dim S_k^0(N)` with the prime-power values above.
pub fn dim_newform_closed(k: u32, n: &Factored) -> Result<Rat> {
    check_weight(k)?;
    let (c_id, c_two, c_three) = coefficients(k);
    let id = MultFn::new("mu * mu * eps_id", |p, e| rat_int(mu_mu_eps_id(p, e)));
    let inf = MultFn::new("mu * mu * eps_inf", |p, e| rat_int(mu_mu_eps_inf(p, e)));
    let mut v = c_id * id.eval(n) + c_two * kd(-4)?.eval(n) + c_three * kd(-3)?.eval(n)
        - rat(1, 2) * inf.eval(n);
    if k == 2 {
        v += rat_int(n.mobius());
    }
    Ok(v)
}

/// `dim S_k^0(N)`. Both evaluations are carried out and must agree.
pub fn dim_newform(k: u32, n: &Factored) -> Result<u64> {
    let a = dim_newform_convolution(k, n)?;
    let b = dim_newform_closed(k, n)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "dim S_{k}^0({n}): convolution gives {a}, closed form gives {b}"
        )));
    }
    to_count(a, &format!("dim S_{k}^0({n})"))
}
