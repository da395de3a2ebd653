//! Truncated q-series, the Eisenstein series `C_2` and `F_7`, and the
//! primitive forms of weight 2 and 4 on `Gamma_0(14)` built from them.
//!
//! [`hecke_verify`] checks a normalized series against the Hecke relations
//! and against the trace formulas, tying the expansions back to the rest of
//! the crate.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{big_pow, factor, format_rat, kronecker, nstar, rat, rat_int, Factored, Rat};
use crate::dimension::dim_newform;
use crate::eigensplit::{dim_split, trace_split};
use crate::error::{invalid, Result};
use crate::hecke_trace::{trace_newform, TraceQuery};

pub const DEFAULT_PRECISION: usize = 128;

/// `a_0 + a_1 q + ... + a_prec q^prec + O(q^{prec+1})`.
///
/// Weight and level are bookkeeping only; nothing checks modularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rat>,
    weight: i32,
    level: u64,
}

impl QSeries {
    /// Coefficients `a_0..=a_prec`; the precision is `coeffs.len() - 1` and must be positive.
    pub fn new(coeffs: Vec<Rat>, weight: i32, level: u64) -> Result<Self> {
        if coeffs.len() < 2 {
            return invalid("a q-series needs precision at least 1");
        }
        if level == 0 {
            return invalid("level must be positive");
        }
        Ok(QSeries {
            coeffs,
            weight,
            level,
        })
    }

    pub fn from_ints(coeffs: &[i64], weight: i32, level: u64) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect(), weight, level)
    }

    fn from_fn(prec: usize, weight: i32, level: u64, f: impl Fn(usize) -> Rat) -> Result<Self> {
        if prec == 0 {
            return invalid("precision must be positive");
        }
        Self::new((0..=prec).map(f).collect(), weight, level)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// `a_n`, or `None` past the precision.
    pub fn coeff(&self, n: usize) -> Option<&Rat> {
        self.coeffs.get(n)
    }

    /// Index of the first nonzero coefficient, `None` if all known ones vanish.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn truncate(&self, prec: usize) -> Result<Self> {
        if prec == 0 || prec > self.precision() {
            return invalid(format!(
                "cannot truncate precision {} to {prec}",
                self.precision()
            ));
        }
        Self::new(self.coeffs[..=prec].to_vec(), self.weight, self.level)
    }

    fn zip(&self, other: &QSeries, f: impl Fn(&Rat, &Rat) -> Rat) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        QSeries {
            coeffs,
            weight: self.weight,
            level: self.level.lcm(&other.level),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rat) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    /// Cauchy product, truncated to the smaller precision.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let prec = self.precision().min(other.precision());
        let coeffs = (0..=prec)
            .map(|n| {
                (0..=n)
                    .filter(|&j| !self.coeffs[j].is_zero() && !other.coeffs[n - j].is_zero())
                    .fold(Rat::zero(), |acc, j| {
                        acc + &self.coeffs[j] * &other.coeffs[n - j]
                    })
            })
            .collect();
        QSeries {
            coeffs,
            weight: self.weight + other.weight,
            level: self.level.lcm(&other.level),
        }
    }

    /// `f^{(h)}(q) = f(q^h)`, at the same precision.
    pub fn v_op(&self, h: usize) -> Result<QSeries> {
        if h == 0 {
            return invalid("v_op needs h >= 1");
        }
        let coeffs = (0..=self.precision())
            .map(|n| {
                if n % h == 0 {
                    self.coeffs[n / h].clone()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        Ok(QSeries {
            coeffs,
            weight: self.weight,
            level: self.level * h as u64,
        })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{}", format_rat(c))?,
                1 => write!(f, "({})q", format_rat(c))?,
                _ => write!(f, "({})q^{n}", format_rat(c))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

/// `C_2 = 1 + 24 sum_n (sum_{d | n, d odd} d) q^n`, weight 2 on `Gamma_0(2)`.
pub fn eisenstein_c2(prec: usize) -> Result<QSeries> {
    QSeries::from_fn(prec, 2, 2, |n| {
        if n == 0 {
            return Rat::one();
        }
        rat_int(24 * divisors(n).filter(|d| d % 2 == 1).sum::<usize>() as i64)
    })
}

fn rho7(d: usize) -> i64 {
    i64::from(kronecker(d as i64, 7).expect("7 is nonzero"))
}

/// `F_7 = 1 + 2 sum_n (sum_{d | n} rho_7(d)) q^n`, weight 1 with the quadratic
/// character modulo 7.
pub fn eisenstein_f7(prec: usize) -> Result<QSeries> {
    QSeries::from_fn(prec, 1, 7, |n| {
        if n == 0 {
            return Rat::one();
        }
        rat_int(2 * divisors(n).map(rho7).sum::<i64>())
    })
}

/// `alpha = (F_7 - F_7^{(2)}) / 2`, vanishing at `q = 0`.
pub fn alpha(prec: usize) -> Result<QSeries> {
    let f7 = eisenstein_f7(prec)?;
    Ok(f7.sub(&f7.v_op(2)?).scale(&rat(1, 2)))
}

/// `gamma = (F_7^2 - 2 F_7 F_7^{(2)} + C_2^{(7)}) / 8`, of order 3.
pub fn gamma(prec: usize) -> Result<QSeries> {
    let f7 = eisenstein_f7(prec)?;
    let f7_2 = f7.v_op(2)?;
    let c2_7 = eisenstein_c2(prec)?.v_op(7)?;
    Ok(f7
        .mul(&f7)
        .sub(&f7.mul(&f7_2).scale(&rat_int(2)))
        .add(&c2_7)
        .scale(&rat(1, 8)))
}

/// The basis `F_7^2, F_7 alpha, alpha^2, gamma` of `M_2(14)`, in echelon form.
pub fn m2_14_basis(prec: usize) -> Result<[QSeries; 4]> {
    let f7 = eisenstein_f7(prec)?;
    let a = alpha(prec)?;
    Ok([f7.mul(&f7), f7.mul(&a), a.mul(&a), gamma(prec)?])
}

/// `Delta = (F_7 - F_7^{(2)}) (2 F_7^{(2)} - F_7) / 2`, the newform of weight 2 and level 14.
pub fn delta14(prec: usize) -> Result<QSeries> {
    let f7 = eisenstein_f7(prec)?;
    let f7_2 = f7.v_op(2)?;
    let left = f7.sub(&f7_2);
    let right = f7_2.scale(&rat_int(2)).sub(&f7);
    Ok(left.mul(&right).scale(&rat(1, 2)))
}

/// The two primitive forms of weight 4 and level 14:
/// `f_1 = Delta (C_2 + 7 C_2^{(7)}) / 8` with `a_2 = 2, a_7 = 7` and
/// `f_14 = Delta (3 F_7^2 - 7 F_7 F_7^{(2)} + 6 F_7^{(2)2}) / 2` with `a_2 = -2, a_7 = -7`.
pub fn weight4_forms(prec: usize) -> Result<(QSeries, QSeries)> {
    let d = delta14(prec)?;
    let c2 = eisenstein_c2(prec)?;
    let f1 = d
        .mul(&c2.add(&c2.v_op(7)?.scale(&rat_int(7))))
        .scale(&rat(1, 8));
    let f7 = eisenstein_f7(prec)?;
    let f7_2 = f7.v_op(2)?;
    let inner = f7
        .mul(&f7)
        .scale(&rat_int(3))
        .sub(&f7.mul(&f7_2).scale(&rat_int(7)))
        .add(&f7_2.mul(&f7_2).scale(&rat_int(6)));
    let f14 = d.mul(&inner).scale(&rat(1, 2));
    Ok((f1, f14))
}

/// What `a_l` is compared with for square-free `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceTarget {
    /// `tr(T(l) | S_k^0(N))`; requires `dim S_k^0(N) = 1`.
    Newform,
    /// `tr(T(l) | S_k^0(N; i))` for `(l, N^×) = 1`, plus `a_p = ±p^κ` for
    /// `p | N^×`; requires `dim S_k^0(N; i) = 1`.
    Split(Factored),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `a_{mn} = a_m a_n` for coprime `m, n`.
    Multiplicative,
    /// `a_{p^{r+1}} = a_p a_{p^r} - p^{k-1} a_{p^{r-1}}`, `p ∤ N`.
    PrimePowerGood,
    /// `a_{p^{r+1}} = a_p a_{p^r}`, `p | N`.
    PrimePowerBad,
    /// `a_l` against a trace formula.
    Trace,
    /// `a_p = ±p^κ` as prescribed by the sign class.
    Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeFailure {
    pub index: usize,
    pub relation: Relation,
    pub expected: Rat,
    pub found: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeReport {
    pub precision: usize,
    /// How many individual relations were checked before stopping.
    pub checks: usize,
    pub first_failure: Option<HeckeFailure>,
}

impl HeckeReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for HeckeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(
                f,
                "pass ({} checks up to n = {})",
                self.checks, self.precision
            ),
            Some(e) => write!(
                f,
                "fail at n = {} ({:?}): expected {}, found {}",
                e.index,
                e.relation,
                format_rat(&e.expected),
                format_rat(&e.found)
            ),
        }
    }
}

/// Checks the Hecke relations of a normalized eigenform and compares `a_l`
/// with the trace formula selected by `target`, for every index up to `prec`.
/// The report names the smallest failing index.
pub fn hecke_verify(
    f: &QSeries,
    k: u32,
    n: &Factored,
    prec: usize,
    target: &TraceTarget,
) -> Result<HeckeReport> {
    if f.coeff(1) != Some(&Rat::one()) {
        return invalid("hecke_verify needs a_1 = 1");
    }
    if prec < 1 || prec > f.precision() {
        return invalid(format!("precision {prec} outside 1..={}", f.precision()));
    }
    match target {
        TraceTarget::Newform => {
            if dim_newform(k, n)? != 1 {
                return invalid(format!("dim S_{k}^0({n}) is not 1"));
            }
        }
        TraceTarget::Split(i) => {
            if dim_split(k, n, i)? != 1 {
                return invalid(format!("dim S_{k}^0({n}; {i}) is not 1"));
            }
        }
    }
    let kappa = k / 2 - 1;
    let star = nstar(n);
    let a = |j: u64| f.coeffs[j as usize].clone();
    let mut checks = 0;
    for idx in 2..=prec as u64 {
        let fi = factor(idx)?;
        let mut expectations: Vec<(Relation, Rat)> = Vec::new();
        if let [(p, e)] = fi.factors()[..] {
            if e >= 2 {
                let (pr, pr1) = (p.pow(e - 1), p.pow(e - 2));
                let rel = if n.valuation(p) == 0 {
                    let pk = rat_int(big_pow(p as i64, k - 1));
                    (Relation::PrimePowerGood, a(p) * a(pr) - pk * a(pr1))
                } else {
                    (Relation::PrimePowerBad, a(p) * a(pr))
                };
                expectations.push(rel);
            }
        } else {
            let (p, e) = fi.factors()[0];
            let pe = p.pow(e);
            expectations.push((Relation::Multiplicative, a(pe) * a(idx / pe)));
        }
        if fi.is_squarefree() {
            match target {
                TraceTarget::Newform => {
                    let q = TraceQuery::from_factored(k, n.clone(), fi.clone())?;
                    expectations.push((Relation::Trace, trace_newform(&q)?));
                }
                TraceTarget::Split(i) => {
                    if fi.coprime_to(&star) {
                        expectations.push((Relation::Trace, trace_split(k, n, &fi, i)?));
                    } else if fi.factors().len() == 1 {
                        let sign = if i.valuation(idx) > 0 { -1 } else { 1 };
                        expectations
                            .push((Relation::Sign, rat_int(big_pow(idx as i64, kappa) * sign)));
                    }
                }
            }
        }
        for (relation, expected) in expectations {
            checks += 1;
            let found = a(idx);
            if found != expected {
                return Ok(HeckeReport {
                    precision: prec,
                    checks,
                    first_failure: Some(HeckeFailure {
                        index: idx as usize,
                        relation,
                        expected,
                        found,
                    }),
                });
            }
        }
    }
    Ok(HeckeReport {
        precision: prec,
        checks,
        first_failure: None,
    })
}
