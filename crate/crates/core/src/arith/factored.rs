use std::fmt;

use crate::error::{invalid, Result};

/// A positive integer together with its prime factorization.
///
/// Primes are strictly increasing and every exponent is at least one, so two
/// `Factored` values are equal exactly when the integers are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factored {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factored {
    /// Largest accepted input to [`factor`]. Trial division stays cheap below it.
    pub const MAX_VALUE: u64 = 1 << 48;

    pub fn one() -> Self {
        Factored {
            value: 1,
            factors: Vec::new(),
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Exponent of `p` in this integer (0 when `p` does not divide it).
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn divides(&self, n: u64) -> bool {
        n % self.value == 0
    }

    /// Number of positive divisors.
    pub fn num_divisors(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, e)| u64::from(e) + 1)
            .product()
    }

    /// The Möbius function.
    pub fn mobius(&self) -> i64 {
        if self.is_squarefree() {
            if self.factors.len() % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All positive divisors, already factored, in increasing order.
    pub fn divisors_factored(&self) -> Vec<Factored> {
        let mut out = vec![Factored::one()];
        for &(p, e) in &self.factors {
            let len = out.len();
            for k in 1..=e {
                for i in 0..len {
                    let mut f = out[i].clone();
                    f.value *= p.pow(k);
                    f.factors.push((p, k));
                    out.push(f);
                }
            }
        }
        out.sort();
        out
    }

    /// The part of this integer coprime to `p`.
    pub fn without_prime(&self, p: u64) -> Factored {
        let factors: Vec<_> = self
            .factors
            .iter()
            .copied()
            .filter(|&(q, _)| q != p)
            .collect();
        Factored::from_factors_unchecked(factors)
    }

    /// The factored value `gcd(self, n)`.
    pub fn gcd(&self, other: &Factored) -> Factored {
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let f = other.valuation(p);
                (f > 0).then(|| (p, e.min(f)))
            })
            .collect();
        Factored::from_factors_unchecked(factors)
    }

    /// `self // other = self / gcd(self, other)`.
    pub fn exclusive_quotient(&self, other: &Factored) -> Factored {
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let f = other.valuation(p);
                (e > f).then(|| (p, e - f))
            })
            .collect();
        Factored::from_factors_unchecked(factors)
    }

    /// Product of two factored integers.
    pub fn mul(&self, other: &Factored) -> Result<Factored> {
        let value = match self.value.checked_mul(other.value) {
            Some(v) if v <= Self::MAX_VALUE => v,
            _ => return invalid("product exceeds the factorization bound"),
        };
        let mut factors = self.factors.clone();
        for &(p, e) in &other.factors {
            match factors.iter_mut().find(|(q, _)| *q == p) {
                Some(slot) => slot.1 += e,
                None => factors.push((p, e)),
            }
        }
        factors.sort_unstable();
        Ok(Factored { value, factors })
    }

    /// Quotient by a divisor.
    pub fn div_exact(&self, other: &Factored) -> Result<Factored> {
        if self.value % other.value != 0 {
            return invalid(format!("{} does not divide {}", other.value, self.value));
        }
        Ok(self.exclusive_quotient(other))
    }

    pub fn coprime_to(&self, other: &Factored) -> bool {
        !self.primes().any(|p| other.valuation(p) > 0)
    }

    pub(crate) fn from_factors_unchecked(mut factors: Vec<(u64, u32)>) -> Factored {
        factors.sort_unstable();
        let value = factors.iter().map(|&(p, e)| p.pow(e)).product();
        Factored { value, factors }
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl TryFrom<u64> for Factored {
    type Error = crate::Error;

    fn try_from(n: u64) -> Result<Self> {
        factor(n)
    }
}

/// Factor `n` by trial division.
pub fn factor(n: u64) -> Result<Factored> {
    if n == 0 {
        return invalid("cannot factor 0");
    }
    if n > Factored::MAX_VALUE {
        return invalid(format!("{n} exceeds the factorization bound 2^48"));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factored { value: n, factors })
}

/// `N^x`: the product of the primes dividing `N` exactly once.
pub fn nstar(n: &Factored) -> Factored {
    Factored::from_factors_unchecked(
        n.factors()
            .iter()
            .copied()
            .filter(|&(_, e)| e == 1)
            .collect(),
    )
}

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n).map(|f| f.factors() == [(n, 1)]).unwrap_or(false)
}
