//! Integer and rational utilities, and the convolution ring of arithmetic
//! functions `N -> Q`.
//!
//! The product is Dirichlet convolution `(f*g)(x) = sum_{d|x} f(x/d) g(d)`
//! with unit `delta`. `f[l]` is the restriction of `f` to arguments coprime to
//! `l`. Both generic functions ([`ArithFn`]) and multiplicative functions given
//! by their prime-power values ([`MultFn`]) are supported.

mod factored;
mod func;
mod kronecker;
mod signs;

pub use factored::{factor, is_prime, nstar, Factored};
pub use func::{
    convolve, eps_functions, kd, mu_mu_restricted, restrict, ArithFn, EpsFunctions, MultFn,
};
pub use kronecker::kronecker;
pub(crate) use kronecker::kronecker_unchecked;
pub use signs::{sign_pair, xor_divisor};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// The value as an integer if the denominator is one.
pub fn rat_to_integer(r: &Rat) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    rat_to_integer(r).and_then(|n| n.to_i64())
}

/// Writes `p` or `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` as written by [`format_rat`].
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// `base^e` as a big integer, with `base` possibly negative.
pub(crate) fn big_pow(base: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}
