use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use super::{factor, kronecker_unchecked, rat_int, Factored, Rat};
use crate::error::{invalid, Error, Result};

type ArithRule = dyn Fn(u64) -> Rat + Send + Sync;
type PrimePowerRule = dyn Fn(u64, u32) -> Rat + Send + Sync;

/// An arithmetic function `N -> Q`, evaluable on `1..=bound`.
///
/// Evaluating past the bound is an error rather than a silent truncation.
#[derive(Clone)]
pub struct ArithFn {
    rule: Arc<ArithRule>,
    bound: u64,
}

impl fmt::Debug for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArithFn")
            .field("bound", &self.bound)
            .finish_non_exhaustive()
    }
}

impl ArithFn {
    pub const DEFAULT_BOUND: u64 = 1_000_000;

    pub fn new(bound: u64, rule: impl Fn(u64) -> Rat + Send + Sync + 'static) -> Self {
        ArithFn {
            rule: Arc::new(rule),
            bound,
        }
    }

    pub fn from_fn(rule: impl Fn(u64) -> Rat + Send + Sync + 'static) -> Self {
        Self::new(Self::DEFAULT_BOUND, rule)
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn with_bound(&self, bound: u64) -> Self {
        ArithFn {
            rule: Arc::clone(&self.rule),
            bound,
        }
    }

    pub fn eval(&self, n: u64) -> Result<Rat> {
        if n == 0 {
            return invalid("arithmetic functions are defined on positive integers");
        }
        if n > self.bound {
            return Err(Error::BoundExceeded {
                n,
                bound: self.bound,
            });
        }
        Ok((self.rule)(n))
    }

    /// The constant function `1`.
    pub fn one() -> Self {
        Self::from_fn(|_| Rat::one())
    }

    /// The convolution unit `delta(x) = [x = 1]`.
    pub fn delta() -> Self {
        Self::from_fn(|n| if n == 1 { Rat::one() } else { Rat::zero() })
    }

    pub fn mobius() -> Self {
        Self::from_fn(|n| rat_int(factor(n).map_or(0, |f| f.mobius())))
    }

    pub fn add(&self, other: &ArithFn) -> ArithFn {
        let (f, g) = (Arc::clone(&self.rule), Arc::clone(&other.rule));
        ArithFn::new(self.bound.min(other.bound), move |n| f(n) + g(n))
    }

    pub fn scale(&self, c: Rat) -> ArithFn {
        let f = Arc::clone(&self.rule);
        ArithFn::new(self.bound, move |n| f(n) * &c)
    }

    pub fn convolve(&self, other: &ArithFn) -> ArithFn {
        convolve(self, other)
    }

    pub fn restrict(&self, l: &Factored) -> ArithFn {
        restrict(self, l)
    }
}

fn small_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Dirichlet convolution. The result is defined up to the smaller bound.
pub fn convolve(f: &ArithFn, g: &ArithFn) -> ArithFn {
    let (fr, gr) = (Arc::clone(&f.rule), Arc::clone(&g.rule));
    ArithFn::new(f.bound.min(g.bound), move |n| {
        small_divisors(n)
            .into_iter()
            .fold(Rat::zero(), |acc, d| acc + fr(n / d) * gr(d))
    })
}

/// `f[l]`: agrees with `f` on arguments coprime to `l`, zero elsewhere.
pub fn restrict(f: &ArithFn, l: &Factored) -> ArithFn {
    let fr = Arc::clone(&f.rule);
    let primes: Vec<u64> = l.primes().collect();
    ArithFn::new(f.bound, move |n| {
        if primes.iter().any(|p| n % p == 0) {
            Rat::zero()
        } else {
            fr(n)
        }
    })
}

/// A multiplicative function, given by its values on prime powers `p^e`, `e >= 1`.
///
/// Prime-power values are memoized; the cache is shared between clones and
/// never changes a result.
#[derive(Clone)]
pub struct MultFn {
    label: Arc<str>,
    rule: Arc<PrimePowerRule>,
    cache: Arc<Mutex<HashMap<(u64, u32), Rat>>>,
}

impl fmt::Debug for MultFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultFn")
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl MultFn {
    pub fn new(
        label: impl Into<String>,
        rule: impl Fn(u64, u32) -> Rat + Send + Sync + 'static,
    ) -> Self {
        MultFn {
            label: label.into().into(),
            rule: Arc::new(rule),
            cache: Arc::default(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn at_prime_power(&self, p: u64, e: u32) -> Rat {
        if e == 0 {
            return Rat::one();
        }
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        cache
            .entry((p, e))
            .or_insert_with(|| (self.rule)(p, e))
            .clone()
    }

    pub fn eval(&self, n: &Factored) -> Rat {
        n.factors()
            .iter()
            .fold(Rat::one(), |acc, &(p, e)| acc * self.at_prime_power(p, e))
    }

    pub fn eval_u64(&self, n: u64) -> Result<Rat> {
        Ok(self.eval(&factor(n)?))
    }

    /// The same function viewed as a generic [`ArithFn`].
    pub fn to_arith(&self) -> ArithFn {
        let this = self.clone();
        ArithFn::from_fn(move |n| this.eval(&factor(n).expect("n within ArithFn bound")))
    }

    /// Convolution of two multiplicative functions, computed prime power by
    /// prime power.
    pub fn convolve(&self, other: &MultFn) -> MultFn {
        let (f, g) = (self.clone(), other.clone());
        MultFn::new(
            format!("({} * {})", self.label, other.label),
            move |p, e| {
                (0..=e).fold(Rat::zero(), |acc, j| {
                    acc + f.at_prime_power(p, e - j) * g.at_prime_power(p, j)
                })
            },
        )
    }

    pub fn mobius() -> MultFn {
        MultFn::new("mu", |_, e| rat_int(if e == 1 { -1 } else { 0 }))
    }

    /// `mu * mu[l]`, from its closed prime-power values.
    pub fn mu_mu_restricted(l: &Factored) -> MultFn {
        let l = l.clone();
        MultFn::new(format!("mu * mu[{l}]"), move |p, e| {
            rat_int(mu_mu_restricted(&l, p, e))
        })
    }
}

/// `(mu * mu[l])(p^e)`: `-2, 1, 0, 0, ...` for `p ∤ l` and `-1, 0, 0, ...`
/// for `p | l` (`e = 1, 2, 3, ...`); `1` at `e = 0`.
pub fn mu_mu_restricted(l: &Factored, p: u64, e: u32) -> i64 {
    match (l.valuation(p) > 0, e) {
        (_, 0) => 1,
        (true, 1) => -1,
        (true, _) => 0,
        (false, 1) => -2,
        (false, 2) => 1,
        (false, _) => 0,
    }
}

/// `K_d`, the multiplicative function with
///
/// ```text
/// K_d(p)   = (d/p) - 1
/// K_d(p^2) = -(d/p)   if p ∤ d,   -1 if p | d
/// K_d(p^3) = 1        if p | d
/// K_d(p^n) = 0        otherwise
/// ```
///
/// `d` must be a discriminant, i.e. `d ≡ 0, 1 (mod 4)`.
pub fn kd(d: i64) -> Result<MultFn> {
    if !matches!(d.rem_euclid(4), 0 | 1) {
        return invalid(format!("K_d needs d ≡ 0, 1 mod 4, got {d}"));
    }
    Ok(MultFn::new(format!("K_{d}"), move |p, e| {
        let chi = i64::from(kronecker_unchecked(d, p as i64));
        let p_divides_d = d % p as i64 == 0;
        rat_int(match (e, p_divides_d) {
            (1, _) => chi - 1,
            (2, false) => -chi,
            (2, true) => -1,
            (3, true) => 1,
            _ => 0,
        })
    }))
}

/// The four multiplicative functions entering the dimension formula for `S_k(N)`.
#[derive(Debug, Clone)]
pub struct EpsFunctions {
    /// `p^n + p^(n-1)`: the index of `Gamma_0(N)` in `SL_2(Z)`.
    pub id: MultFn,
    /// Elliptic points of order 2.
    pub two: MultFn,
    /// Elliptic points of order 3.
    pub three: MultFn,
    /// `p^[n/2] + p^[(n-1)/2]`: the number of cusps.
    pub inf: MultFn,
}

pub fn eps_functions() -> EpsFunctions {
    let elliptic = |special: u64, disc: i64| {
        move |p: u64, e: u32| {
            if p == special {
                rat_int(i64::from(e == 1))
            } else {
                rat_int(1 + i64::from(kronecker_unchecked(disc, p as i64)))
            }
        }
    };
    EpsFunctions {
        id: MultFn::new("eps_id", |p, e| rat_int(p.pow(e) + p.pow(e - 1))),
        two: MultFn::new("eps_2", elliptic(2, -4)),
        three: MultFn::new("eps_3", elliptic(3, -3)),
        inf: MultFn::new("eps_inf", |p, e| rat_int(p.pow(e / 2) + p.pow((e - 1) / 2))),
    }
}
