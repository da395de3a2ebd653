//! The Kronecker symbol `(a/n)`.
//!
//! Conventions, all standard and relied on throughout the crate:
//!
//! * `(a/2)` is `0` for even `a`, `1` for `a ≡ ±1 (mod 8)` and `-1` for `a ≡ ±3 (mod 8)`.
//! * `(a/-1)` is `-1` for `a < 0` and `1` otherwise.
//! * `(a/0)` is `1` for `a = ±1` and `0` otherwise; `(0/0)` is rejected.
//! * For odd positive `n` the symbol is the Jacobi symbol, and it is extended
//!   completely multiplicatively in `n`.

use crate::error::{invalid, Result};

pub fn kronecker(a: i64, n: i64) -> Result<i32> {
    if a == 0 && n == 0 {
        return invalid("Kronecker symbol (0/0) is undefined");
    }
    Ok(kronecker_unchecked(a, n))
}

pub(crate) fn kronecker_unchecked(a: i64, n: i64) -> i32 {
    let a = i128::from(a);
    let mut n = i128::from(n);
    if n == 0 {
        return i32::from(a == 1 || a == -1);
    }
    let mut sign = 1;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
        n >>= twos;
    }
    sign * jacobi(a.rem_euclid(n), n)
}

/// Jacobi symbol for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i128, mut n: i128) -> i32 {
    let mut sign = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}
