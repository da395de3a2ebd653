//! The factors `b_{t,l,phi}` and the local densities `c_{t,l,phi}(p^n)`.
//!
//! With `psi = m / phi` and `a = v_p(psi)`,
//!
//! ```text
//! c_{t,l,phi}(p^n) = #{ y mod p^{a+n} : p ∤ y,     y lifts to a root of x^2 - tx + l mod p^{2a+n}   }
//!                  + #{ y mod p^{a+n} : p ∤ t - y, y lifts to a root of x^2 - tx + l mod p^{2a+n+1} }
//! ```
//!
//! where the second term is present only when `p | d phi`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::arith::{is_prime, kronecker_unchecked, rat_int, Factored, Rat};
use crate::error::{invalid, Error, Result};

use super::{t_element, TElement};

fn check_phi(el: &TElement, phi: u64) -> Result<()> {
    if phi == 0 || el.m % phi != 0 {
        return invalid(format!("phi = {phi} does not divide m = {}", el.m));
    }
    Ok(())
}

/// `b_{t,l,phi} = phi * prod_{p | phi} (1 - (d/p)/p)`, an integer.
pub fn b_factor(t: u64, l: &Factored, phi: u64) -> Result<Rat> {
    let el = t_element(t, l)?;
    check_phi(&el, phi)?;
    Ok(rat_int(b_value(el.d, phi)))
}

pub(crate) fn b_value(d: i64, phi: u64) -> i64 {
    let phi_f = crate::arith::factor(phi).expect("phi is small");
    phi_f
        .factors()
        .iter()
        .map(|&(p, e)| {
            let chi = i64::from(kronecker_unchecked(d, p as i64));
            (p as i64).pow(e - 1) * (p as i64 - chi)
        })
        .product()
}

type CKey = (u64, u64, u64, u64, u32);

fn c_cache() -> &'static Mutex<HashMap<CKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<CKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Mutex::default)
}

/// `c_{t,l,phi}(p^n)` by exhaustive root counting modulo prime powers.
pub fn c_local(t: u64, l: &Factored, phi: u64, p: u64, n: u32) -> Result<u64> {
    let el = t_element(t, l)?;
    check_phi(&el, phi)?;
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    c_local_el(&el, l.value(), phi, p, n)
}

pub(crate) fn c_local_el(el: &TElement, l: u64, phi: u64, p: u64, n: u32) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    let key = (el.t, l, phi, p, n);
    if let Some(&v) = c_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&key)
    {
        return Ok(v);
    }
    let v = count_local(el, l, phi, p, n)?;
    c_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, v);
    Ok(v)
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

fn count_local(el: &TElement, l: u64, phi: u64, p: u64, n: u32) -> Result<u64> {
    let a = valuation(el.m / phi, p);
    let t = i128::from(el.t);
    let l = i128::from(l);
    let main = projected_root_count(t, l, p, 2 * a + n, a + n, |y| y % i128::from(p) != 0)?;
    let extra = if el.d % p as i64 == 0 || phi % p == 0 {
        projected_root_count(t, l, p, 2 * a + n + 1, a + n, |y| {
            (t - y) % i128::from(p) != 0
        })?
    } else {
        0
    };
    Ok(main + extra)
}

/// Counts residues `y mod p^proj_exp` satisfying `keep` that are reductions of
/// roots of `x^2 - tx + l` modulo `p^root_exp`.
fn projected_root_count(
    t: i128,
    l: i128,
    p: u64,
    root_exp: u32,
    proj_exp: u32,
    keep: impl Fn(i128) -> bool,
) -> Result<u64> {
    let p = i128::from(p);
    if p.checked_pow(root_exp).is_none_or(|m| m >= 1 << 60) {
        return Err(Error::Unsupported(format!(
            "local count modulo {p}^{root_exp} is too large"
        )));
    }
    // Roots modulo p^j for j = 1..=root_exp, each lifted from the level below.
    let poly = |x: i128, m: i128| (x * x - t * x + l).rem_euclid(m);
    let mut roots: Vec<i128> = (0..p).filter(|&x| poly(x, p) == 0).collect();
    let mut pj = p;
    for _ in 1..root_exp {
        let next = pj * p;
        roots = roots
            .iter()
            .flat_map(|&r| (0..p).map(move |i| r + i * pj))
            .filter(|&x| poly(x, next) == 0)
            .collect();
        pj = next;
    }
    let proj_mod = p.pow(proj_exp);
    let classes: BTreeSet<i128> = roots
        .into_iter()
        .map(|x| x % proj_mod)
        .filter(|&y| keep(y))
        .collect();
    Ok(classes.len() as u64)
}

/// The closed forms for `c_{t,l,phi}(p^n)`, when one applies:
///
/// * `p ∤ l m`: `1 + (d/p)` if `p ∤ d`, else `[n = 1]`;
/// * `m` prime, `m ∤ l`, `p = m`: explicit tables for `phi = 1` and `phi = m`.
///
/// Returns `None` outside those cases.
pub fn c_closed(t: u64, l: &Factored, phi: u64, p: u64, n: u32) -> Result<Option<u64>> {
    let el = t_element(t, l)?;
    check_phi(&el, phi)?;
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if n == 0 {
        return Ok(Some(1));
    }
    Ok(c_closed_el(&el, l.value(), phi, p, n))
}

pub(crate) fn c_closed_el(el: &TElement, l: u64, phi: u64, p: u64, n: u32) -> Option<u64> {
    let (d, m) = (el.d, el.m);
    let chi = i64::from(kronecker_unchecked(d, p as i64));
    let p_divides_d = d % p as i64 == 0;
    let one_if = |b: bool| u64::from(b);
    if l % p != 0 && m % p != 0 {
        return Some(if p_divides_d {
            one_if(n == 1)
        } else {
            (1 + chi) as u64
        });
    }
    if p != m || !is_prime(m) || l % m == 0 {
        return None;
    }
    if phi == 1 {
        return Some(if p_divides_d {
            one_if(n == 1)
        } else {
            (1 + chi) as u64
        });
    }
    let v = match (m == 2, p_divides_d, n) {
        (_, _, 1) => 2,
        (true, false, 2) => 3 + chi,
        (true, false, _) => 3 * (1 + chi),
        (true, true, 2) => 3,
        (true, true, 3) => 2,
        (true, true, _) => 0,
        (false, false, 2) => m as i64 + 1 + chi,
        (false, false, _) => (m as i64 + 1) * (1 + chi),
        (false, true, 2) => m as i64 + 1,
        (false, true, 3) => m as i64,
        (false, true, _) => 0,
    };
    Some(v as u64)
}
