//! Traces of `T(l)`, `l` square-free, on `S_k(N)` and on the newform space `S_k^0(N)`.
//!
//! For `l > 1` the Eichler-Selberg trace formula reads
//!
//! ```text
//! tr(T(l) | S_k(N)) = - sum_{t in T(l)} a_{t,l,k} h_{t,l} sum_{phi | m(t,l)} b_{t,l,phi} c_{t,l,phi}(N)
//!                     + [k = 2] prod_{p | l} (1 + p) * omega_l(N)
//! ```
//!
//! where `T(l)` is the set of integers `t` with `t^2 - 4l` negative or a
//! perfect square, `t^2 - 4l = d m^2` with `d` fundamental, and `c_{t,l,phi}`
//! is a multiplicative local root count. Convolving with `mu * mu[l]` turns
//! each `c` into `Lambda_{t,l}` and yields the newform trace.
//!
//! Only `t >= 0` is enumerated: `a`, `h` and `Lambda` are even in `t`, so each
//! `t > 0` counts twice.

mod lambda;
mod local;
mod special;
mod trace;

pub use lambda::{lambda, lambda_closed, lambda_definitional};
pub use local::{b_factor, c_closed, c_local};
pub use special::{
    a_sign_mod8, b_sign_mod6, lambda_0_3_table, lambda_4_3_table, trace_newform_l2,
    trace_newform_l3, trace_newform_large_gcd,
};
pub use trace::{trace_full, trace_newform};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factor, Factored, Rat};
use crate::error::{invalid, Error, Result};
use crate::quadratic::split_disc;

/// A validated `(k, N, l)`: even weight `k >= 2`, level `N`, square-free Hecke index `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TraceQuery {
    weight: u32,
    level: Factored,
    hecke: Factored,
}

impl TraceQuery {
    pub fn new(weight: u32, level: u64, hecke: u64) -> Result<Self> {
        Self::from_factored(weight, factor(level)?, factor(hecke)?)
    }

    pub fn from_factored(weight: u32, level: Factored, hecke: Factored) -> Result<Self> {
        check_weight(weight)?;
        if !hecke.is_squarefree() {
            return Err(Error::Unsupported("l not square-free".into()));
        }
        Ok(TraceQuery {
            weight,
            level,
            hecke,
        })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn level(&self) -> &Factored {
        &self.level
    }

    pub fn hecke(&self) -> &Factored {
        &self.hecke
    }

    /// `k/2 - 1`.
    pub fn kappa(&self) -> u32 {
        self.weight / 2 - 1
    }
}

pub(crate) fn check_weight(k: u32) -> Result<()> {
    if k < 2 || k % 2 == 1 {
        return invalid(format!("weight must be even and at least 2, got {k}"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TKind {
    /// `t^2 - 4l < 0`.
    Negative,
    /// `t^2 - 4l` is a nonzero perfect square.
    Square,
}

/// One nonnegative element `t` of `T(l)` with the decomposition `t^2 - 4l = d m^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TElement {
    pub t: u64,
    pub kind: TKind,
    /// Fundamental discriminant, `1` in the square case.
    pub d: i64,
    /// Conductor.
    pub m: u64,
}

impl TElement {
    /// `t^2 - 4l`.
    pub fn disc(&self) -> i64 {
        self.d * (self.m * self.m) as i64
    }

    /// How often `±t` occurs in `T(l)`.
    pub fn multiplicity(&self) -> u32 {
        if self.t == 0 {
            1
        } else {
            2
        }
    }
}

fn check_hecke_index(l: &Factored) -> Result<()> {
    if !l.is_squarefree() {
        return Err(Error::Unsupported("l not square-free".into()));
    }
    if l.value() < 2 {
        return invalid("this formula needs l >= 2");
    }
    Ok(())
}

fn exact_sqrt(n: i64) -> Option<u64> {
    if n < 0 {
        return None;
    }
    let r = n.isqrt();
    (r * r == n).then_some(r as u64)
}

/// Classifies `t >= 0` for the index `l`, failing when `t ∉ T(l)`.
pub fn t_element(t: u64, l: &Factored) -> Result<TElement> {
    check_hecke_index(l)?;
    let disc = i128::from(t) * i128::from(t) - 4 * i128::from(l.value());
    let disc = i64::try_from(disc).map_err(|_| Error::InvalidInput("t out of range".into()))?;
    let kind = if disc < 0 {
        TKind::Negative
    } else if exact_sqrt(disc).is_some() {
        TKind::Square
    } else {
        return invalid(format!("t = {t} is not in T({l})"));
    };
    let split = split_disc(disc)?;
    Ok(TElement {
        t,
        kind,
        d: split.fundamental,
        m: split.conductor,
    })
}

/// The nonnegative parts of `T_-(l)` and `T_square(l)`, each in increasing `t`.
pub fn t_sets(l: &Factored) -> Result<(Vec<TElement>, Vec<TElement>)> {
    check_hecke_index(l)?;
    let lv = l.value();
    let negative = (0..)
        .take_while(|&t: &u64| t * t < 4 * lv)
        .map(|t| t_element(t, l))
        .collect::<Result<Vec<_>>>()?;
    // t^2 - 4l = s^2 forces t = e + l/e for a divisor e of l.
    let mut square: Vec<TElement> = l
        .divisors()
        .into_iter()
        .filter(|&e| e * e < lv)
        .map(|e| t_element(e + lv / e, l))
        .collect::<Result<_>>()?;
    square.sort_by_key(|el| el.t);
    Ok((negative, square))
}

/// All nonnegative `t` in `T(l)`.
pub fn t_all(l: &Factored) -> Result<Vec<TElement>> {
    let (mut neg, sq) = t_sets(l)?;
    neg.extend(sq);
    Ok(neg)
}

/// `a_{t,l,k}`.
///
/// For `t^2 < 4l` this is `(zeta^{k-1} - eta^{k-1}) / (zeta - eta)` for the
/// roots of `X^2 - tX + l`, an integer computed by the Lucas recurrence
/// `U_0 = 0, U_1 = 1, U_{j+1} = t U_j - l U_{j-1}`. For `t^2 - 4l = s^2` the
/// roots `zeta > eta > 0` are integers and the value is `eta^{k-1} / (2 s)`.
pub fn a_coeff(t: u64, l: &Factored, k: u32) -> Result<Rat> {
    check_weight(k)?;
    let el = t_element(t, l)?;
    Ok(match el.kind {
        TKind::Negative => Rat::from_integer(lucas_u(t, l.value(), k - 1)),
        TKind::Square => {
            let s = exact_sqrt(el.disc()).expect("square discriminant");
            let eta = (t - s) / 2;
            Rat::new(
                num_traits::pow(BigInt::from(eta), (k - 1) as usize),
                BigInt::from(2 * s),
            )
        }
    })
}

pub(crate) fn lucas_u(t: u64, l: u64, index: u32) -> BigInt {
    let (t, l) = (BigInt::from(t), BigInt::from(l));
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if index == 0 {
        return prev;
    }
    for _ in 1..index {
        let next = &t * &cur - &l * &prev;
        prev = cur;
        cur = next;
    }
    cur
}
