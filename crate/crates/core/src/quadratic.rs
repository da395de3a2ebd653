//! Discriminants and class numbers of imaginary quadratic fields.
//!
//! `class_number(d)` is the class number of the field `Q(sqrt d)` for a
//! negative fundamental discriminant `d`; the contribution of non-maximal
//! orders is carried separately by the conductor sums in [`crate::hecke_trace`].

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;

use crate::arith::{factor, rat, rat_int, Factored, Rat};
use crate::error::{invalid, Result};

/// `D = d * m^2` with `d` fundamental (or `1` when `D` is a square).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiscSplit {
    pub disc: i64,
    pub fundamental: i64,
    pub conductor: u64,
}

/// Splits a discriminant `D ≡ 0, 1 (mod 4)` into fundamental part and conductor.
pub fn split_disc(disc: i64) -> Result<DiscSplit> {
    if disc == 0 {
        return invalid("discriminant must be nonzero");
    }
    if !matches!(disc.rem_euclid(4), 0 | 1) {
        return invalid(format!("{disc} is not ≡ 0, 1 mod 4"));
    }
    let abs = factor(disc.unsigned_abs())?;
    let mut core = 1i64;
    let mut square_root = 1u64;
    for &(p, e) in abs.factors() {
        if e % 2 == 1 {
            core *= p as i64;
        }
        square_root *= p.pow(e / 2);
    }
    let core = core * disc.signum();
    let (fundamental, conductor) = if core.rem_euclid(4) == 1 {
        (core, square_root)
    } else {
        // core ≡ 2, 3 mod 4, so 4 | m^2 and the factor 4 moves to d.
        (4 * core, square_root / 2)
    };
    Ok(DiscSplit {
        disc,
        fundamental,
        conductor,
    })
}

/// Whether `d` is a fundamental discriminant (`1` excluded).
pub fn is_fundamental(d: i64) -> bool {
    d != 1 && d != 0 && split_disc(d).is_ok_and(|s| s.conductor == 1)
}

fn check_negative_fundamental(d: i64) -> Result<()> {
    if d >= 0 || !is_fundamental(d) {
        return invalid(format!("{d} is not a negative fundamental discriminant"));
    }
    Ok(())
}

fn class_number_cache() -> &'static Mutex<HashMap<i64, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<i64, u64>>> = OnceLock::new();
    CACHE.get_or_init(Mutex::default)
}

/// Counts reduced primitive forms `(a, b, c)` with `b^2 - 4ac = d`.
fn count_reduced_forms(d: i64) -> u64 {
    let abs = d.unsigned_abs();
    let mut count = 0;
    let mut a = 1u64;
    // reduced forms have 3a^2 <= |d|
    while 3 * a * a <= abs {
        let a_i = a as i64;
        for b in -a_i + 1..=a_i {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a_i) != 0 {
                continue;
            }
            let c = num / (4 * a_i);
            if c < a_i || (c == a_i && b < 0) {
                continue;
            }
            if a_i.gcd(&b).gcd(&c) == 1 {
                count += 1;
            }
        }
        a += 1;
    }
    count
}

/// Class number of `Q(sqrt d)` for a negative fundamental discriminant `d`,
/// by enumerating reduced binary quadratic forms.
pub fn class_number(d: i64) -> Result<u64> {
    check_negative_fundamental(d)?;
    if let Some(&h) = class_number_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&d)
    {
        return Ok(h);
    }
    let h = count_reduced_forms(d);
    class_number_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(d, h);
    Ok(h)
}

/// Snapshot of memoized class numbers, sorted by discriminant.
pub fn cached_class_numbers() -> Vec<(i64, u64)> {
    let cache = class_number_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    let mut out: Vec<_> = cache.iter().map(|(&d, &h)| (d, h)).collect();
    out.sort_unstable();
    out
}

/// Seeds the memo table, e.g. from an on-disk cache. Entries for values
/// that are not negative fundamental discriminants are ignored.
pub fn preload_class_numbers(entries: impl IntoIterator<Item = (i64, u64)>) {
    let mut cache = class_number_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    for (d, h) in entries {
        if d < 0 && is_fundamental(d) && h > 0 {
            cache.insert(d, h);
        }
    }
}

/// Number of units of the ring of integers of `Q(sqrt d)`.
pub fn unit_count(d: i64) -> Result<u64> {
    check_negative_fundamental(d)?;
    Ok(match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    })
}

/// `h_{t,l}`: class number over unit count of `Q(sqrt(t^2 - 4l))` when
/// `t^2 - 4l < 0`, and `1` when `t^2 - 4l` is a square.
pub fn h_weight(t: i64, l: &Factored) -> Result<Rat> {
    let disc = i128::from(t) * i128::from(t) - 4 * i128::from(l.value());
    let Ok(disc) = i64::try_from(disc) else {
        return invalid("t out of range");
    };
    if disc >= 0 {
        let root = disc.isqrt();
        if root * root == disc {
            return Ok(rat_int(1));
        }
        return invalid(format!("t = {t} is not in T({l})"));
    }
    let split = split_disc(disc)?;
    let h = class_number(split.fundamental)?;
    let w = unit_count(split.fundamental)?;
    Ok(rat(h as i64, w as i64))
}
