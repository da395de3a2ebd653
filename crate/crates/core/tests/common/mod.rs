//! Golden tables for the integration tests, together with small independent
//! oracles for the quantities the tables are written in.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use newform_trace::Rat;

pub const WEIGHTS_TO_24: [u32; 12] = [2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24];

pub fn big(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn kappa(k: u32) -> u32 {
    k / 2 - 1
}

pub fn pow(base: i64, e: u32) -> Rat {
    Rat::from_integer(num_traits::pow(BigInt::from(base), e as usize))
}

pub fn delta2(k: u32) -> i64 {
    i64::from(k == 2)
}

/// `(-1)^(k/2)`.
pub fn sign_k(k: u32) -> i64 {
    if (k / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Legendre symbol `((k-1)/3)`.
pub fn chi3(k: u32) -> i64 {
    match (k - 1) % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn binomial(n: u64, r: u64) -> BigInt {
    (0..r).fold(BigInt::one(), |acc, j| {
        acc * BigInt::from(n - j) / BigInt::from(j + 1)
    })
}

/// `a_{t,l,k}` for `t^2 < 4l` as the coefficient sum
/// `sum_j (-1)^j C(k-2-j, j) t^{k-2-2j} l^j`, i.e. the complete homogeneous
/// symmetric polynomial of degree `k - 2` in the roots of `X^2 - tX + l`.
pub fn a_oracle(t: i64, l: i64, k: u32) -> Rat {
    let n = u64::from(k - 2);
    let mut sum = BigInt::zero();
    for j in 0..=n / 2 {
        let term = binomial(n - j, j)
            * num_traits::pow(BigInt::from(t), (n - 2 * j) as usize)
            * num_traits::pow(BigInt::from(l), j as usize);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rat::from_integer(sum)
}

pub fn a_sign8(k: u32) -> i64 {
    if matches!(k % 8, 0 | 2) {
        1
    } else {
        -1
    }
}

pub fn b_sign6(k: u32) -> i64 {
    if k % 6 == 4 {
        -2
    } else {
        1
    }
}

/// `12 dim S_k^0(N) = c_1 (k-1) + c_2 (-1)^(k/2) + c_3 ((k-1)/3) + c_4 + c_5 [k = 2]`,
/// one row per level `N = 1..=42`. Level 23 carries `+2/3 ((k-1)/3)`; with
/// `-2/3` the value at `k = 2` would be `2/3`.
pub const DIMENSION_FORMULAS: &[(u64, [i64; 5])] = &[
    (1, [1, 3, -4, -6, 12]),
    (2, [1, -3, 8, 0, -12]),
    (3, [2, -6, 4, 0, -12]),
    (4, [1, -3, -4, 0, 0]),
    (5, [4, 0, 8, 0, -12]),
    (6, [2, 6, -8, 0, 12]),
    (7, [6, -6, 0, 0, -12]),
    (8, [3, 3, 0, 0, 0]),
    (9, [5, 3, 4, -6, 0]),
    (10, [4, 0, -16, 0, 12]),
    (11, [10, -6, 8, 0, -12]),
    (12, [2, 6, 4, 0, 0]),
    (13, [12, 0, 0, 0, -12]),
    (14, [6, 6, 0, 0, 12]),
    (15, [8, 0, -8, 0, 12]),
    (16, [6, 0, 0, -6, 0]),
    (17, [16, 0, 8, 0, -12]),
    (18, [5, -3, -8, 0, 0]),
    (19, [18, -6, 0, 0, -12]),
    (20, [4, 0, 8, 0, 0]),
    (21, [12, 12, 0, 0, 12]),
    (22, [10, 6, -16, 0, 12]),
    (23, [22, -6, 8, 0, -12]),
    (24, [6, -6, 0, 0, 0]),
    (25, [19, -3, -4, -18, 0]),
    (26, [12, 0, 0, 0, 12]),
    (27, [16, 0, -4, 0, 0]),
    (28, [6, 6, 0, 0, 0]),
    (29, [28, 0, 8, 0, -12]),
    (30, [8, 0, 16, 0, -12]),
    (31, [30, -6, 0, 0, -12]),
    (32, [12, 0, 0, 0, 0]),
    (33, [20, 12, -8, 0, 12]),
    (34, [16, 0, -16, 0, 12]),
    (35, [24, 0, 0, 0, 12]),
    (36, [5, -3, 4, 0, 0]),
    (37, [36, 0, 0, 0, -12]),
    (38, [18, 6, 0, 0, 12]),
    (39, [24, 0, 0, 0, 12]),
    (40, [12, 0, 0, 0, 0]),
    (41, [40, 0, 8, 0, -12]),
    (42, [12, -12, 0, 0, -12]),
];

pub fn dimension_formula(c: &[i64; 5], k: u32) -> Rat {
    let twelve =
        c[0] * (i64::from(k) - 1) + c[1] * sign_k(k) + c[2] * chi3(k) + c[3] + c[4] * delta2(k);
    frac(twelve, 12)
}

/// `2 tr(T(2) | S_k^0(N)) = c_1 P + c_2 P A_k + c_3 a_{1,2,k} + c_4 + c_5 [k = 2]`
/// with `P = (-2)^κ`.
pub const TRACE_T2: &[(u64, [i64; 5])] = &[
    (1, [-1, -1, -2, -2, 6]),
    (2, [1, 1, 0, 0, -2]),
    (3, [0, 2, 4, 0, -6]),
    (5, [2, 0, 4, 0, -6]),
    (6, [0, -2, 0, 0, 2]),
    (7, [2, 2, 2, 0, -6]),
    (9, [1, -1, -2, 2, 0]),
    (10, [-2, 0, 0, 0, 2]),
    (11, [0, 2, 0, 0, -6]),
    (13, [2, 0, 4, 0, -6]),
    (14, [-2, -2, 0, 0, 2]),
    (15, [0, 0, -8, 0, 6]),
    (17, [0, 0, 4, 0, -6]),
    (18, [-1, 1, 0, 0, 0]),
    (19, [0, 2, 4, 0, -6]),
    (21, [0, -4, -4, 0, 6]),
    (22, [0, -2, 0, 0, 2]),
    (23, [2, 2, 0, 0, -6]),
    (25, [-1, 1, -2, 2, 0]),
    (26, [-2, 0, 0, 0, 2]),
    (27, [0, 0, 0, 0, 0]),
    (29, [2, 0, 0, 0, -6]),
    (30, [0, 0, 0, 0, -2]),
    (31, [2, 2, 4, 0, -6]),
    (33, [0, -4, 0, 0, 6]),
    (34, [0, 0, 0, 0, 2]),
    (35, [-4, 0, -4, 0, 6]),
    (38, [0, -2, 0, 0, 2]),
    (42, [0, 4, 0, 0, -2]),
];

pub fn trace_t2_formula(c: &[i64; 5], k: u32) -> Rat {
    let p = pow(-2, kappa(k));
    let v = &p * big(c[0])
        + &p * big(c[1] * a_sign8(k))
        + a_oracle(1, 2, k) * big(c[2])
        + big(c[3] + c[4] * delta2(k));
    v * frac(1, 2)
}

/// `3 tr(T(3) | S_k^0(N)) = c_1 P + c_2 P B_k + c_3 a_{1,3,k} + c_4 a_{2,3,k} + c_5 + c_6 [k = 2]`
/// with `P = (-3)^κ`. The level 11 row carries `-4 [k = 2]`.
pub const TRACE_T3: &[(u64, [i64; 6])] = &[
    (1, [-2, -1, -3, -3, -3, 12]),
    (2, [1, 2, 6, 3, 0, -12]),
    (3, [2, 1, 0, 0, 0, -3]),
    (4, [1, -1, -3, 3, 0, 0]),
    (5, [4, 2, 0, 6, 0, -12]),
    (6, [-1, -2, 0, 0, 0, 3]),
    (7, [0, 0, 6, 6, 0, -12]),
    (8, [3, 0, 0, -3, 0, 0]),
    (10, [-2, -4, 0, -6, 0, 12]),
    (11, [4, 2, 3, 0, 0, -12]),
    (12, [-1, 1, 0, 0, 0, 0]),
    (13, [0, 0, 6, 6, 0, -12]),
    (14, [0, 0, -12, -6, 0, 12]),
    (15, [-4, -2, 0, 0, 0, 3]),
    (16, [-3, 0, 0, 0, 3, 0]),
    (17, [4, 2, 6, 0, 0, -12]),
    (19, [0, 0, 6, 0, 0, -12]),
    (20, [-2, 2, 0, -6, 0, 0]),
    (21, [0, 0, 0, 0, 0, 3]),
    (22, [-2, -4, -6, 0, 0, 12]),
    (23, [4, 2, 0, 6, 0, -12]),
    (24, [-3, 0, 0, 0, 0, 0]),
    (25, [-2, -1, 3, -3, 3, 0]),
    (26, [0, 0, -12, -6, 0, 12]),
    (28, [0, 0, 6, -6, 0, 0]),
    (29, [4, 2, 6, 6, 0, -12]),
    (30, [2, 4, 0, 0, 0, -3]),
    (31, [0, 0, 0, 6, 0, -12]),
    (32, [0, 0, 0, 0, 0, 0]),
    (33, [-4, -2, 0, 0, 0, 3]),
    (34, [-2, -4, -12, 0, 0, 12]),
    (35, [0, 0, 0, -12, 0, 12]),
    (39, [0, 0, 0, 0, 0, 3]),
    (42, [0, 0, 0, 0, 0, -3]),
];

pub fn trace_t3_formula(c: &[i64; 6], k: u32) -> Rat {
    let p = pow(-3, kappa(k));
    let v = &p * big(c[0])
        + &p * big(c[1] * b_sign6(k))
        + a_oracle(1, 3, k) * big(c[2])
        + a_oracle(2, 3, k) * big(c[3])
        + big(c[4] + c[5] * delta2(k));
    v * frac(1, 3)
}

/// `tr(T(l) | S_k^0(N)) = c (-l)^κ + c_δ [k = 2]` as `(l, N, c, c_δ)`.
/// For `l = 26, N = 39` the constant is `mu(39) (1 + 2) = 3`.
pub const TRACE_LARGE_GCD: &[(u64, u64, i64, i64)] = &[
    (5, 5, 1, -1),
    (5, 10, -1, 1),
    (5, 15, 0, 1),
    (5, 20, -1, 0),
    (5, 30, 0, -1),
    (5, 35, 0, 1),
    (5, 40, 1, 0),
    (6, 6, -1, 1),
    (6, 30, 0, -1),
    (6, 42, 0, -1),
    (7, 7, 1, -1),
    (7, 14, 0, 1),
    (7, 21, -2, 1),
    (7, 28, 0, 0),
    (7, 35, -2, 1),
    (7, 42, 0, -1),
    (10, 10, -1, 1),
    (10, 30, 2, -1),
    (11, 11, 2, -1),
    (11, 22, -1, 1),
    (11, 33, 0, 1),
    (13, 13, 1, -1),
    (13, 26, -1, 1),
    (13, 39, -2, 1),
    (14, 14, -2, 1),
    (14, 42, 0, -1),
    (15, 15, -2, 1),
    (15, 30, 0, -1),
    (17, 17, 2, -1),
    (17, 34, -2, 1),
    (19, 19, 2, -1),
    (19, 38, -1, 1),
    (21, 21, -2, 1),
    (21, 42, 2, -1),
    (22, 11, 1, -3),
    (22, 22, -1, 1),
    (22, 33, -2, 3),
    (23, 23, 3, -1),
    (26, 13, 3, -3),
    (26, 26, -3, 1),
    (26, 39, 0, 3),
    (29, 29, 3, -1),
    (30, 15, -2, 3),
    (30, 30, 2, -1),
    (31, 31, 3, -1),
    (33, 33, -2, 1),
    (34, 17, 2, -3),
    (34, 34, -2, 1),
    (35, 35, -4, 1),
    (37, 37, 1, -1),
    (38, 19, 3, -3),
    (38, 38, -3, 1),
    (39, 13, 4, -4),
    (39, 26, 0, 4),
    (39, 39, -4, 1),
    (41, 41, 4, -1),
    (42, 14, -2, 4),
    (42, 21, -2, 3),
    (42, 42, 2, -1),
];

pub fn trace_large_gcd_formula(l: u64, c: i64, c_delta: i64, k: u32) -> Rat {
    pow(-(l as i64), kappa(k)) * big(c) + big(c_delta * delta2(k))
}

/// A table of `d_k(N; i)`: the row with base weight `k0` gives `c + s n` at
/// weight `k0 + period n`. A column lists a level and the classes `i` that
/// share the value.
pub struct SplitTable {
    pub period: u32,
    pub columns: &'static [(u64, &'static [u64])],
    pub rows: &'static [(u32, &'static [(i64, i64)])],
}

pub const SPLIT_TABLES: &[SplitTable] = &[
    // prime levels
    SplitTable {
        period: 24,
        columns: &[(2, &[1]), (2, &[2])],
        rows: &[
            (2, &[(1, 1), (0, 1)]),
            (4, &[(0, 1), (0, 1)]),
            (6, &[(0, 1), (0, 1)]),
            (8, &[(0, 1), (1, 1)]),
            (10, &[(1, 1), (0, 1)]),
            (12, &[(0, 1), (0, 1)]),
            (14, &[(1, 1), (1, 1)]),
            (16, &[(0, 1), (1, 1)]),
            (18, &[(1, 1), (0, 1)]),
            (20, &[(1, 1), (1, 1)]),
            (22, &[(1, 1), (1, 1)]),
            (24, &[(0, 1), (1, 1)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[
            (3, &[1]),
            (3, &[3]),
            (5, &[1]),
            (5, &[5]),
            (11, &[1]),
            (11, &[11]),
        ],
        rows: &[
            (2, &[(1, 1), (0, 1), (1, 2), (0, 2), (2, 5), (0, 5)]),
            (4, &[(0, 1), (0, 1), (0, 2), (1, 2), (0, 5), (2, 5)]),
            (6, &[(1, 1), (0, 1), (1, 2), (0, 2), (3, 5), (1, 5)]),
            (8, &[(0, 1), (1, 1), (1, 2), (2, 2), (2, 5), (4, 5)]),
            (10, &[(1, 1), (1, 1), (2, 2), (1, 2), (5, 5), (3, 5)]),
            (12, &[(0, 1), (1, 1), (1, 2), (2, 2), (3, 5), (5, 5)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(17, &[1]), (17, &[17]), (23, &[1]), (23, &[23])],
        rows: &[
            (2, &[(2, 8), (0, 8), (3, 11), (0, 11)]),
            (4, &[(1, 8), (3, 8), (1, 11), (4, 11)]),
            (6, &[(4, 8), (2, 8), (6, 11), (3, 11)]),
            (8, &[(4, 8), (6, 8), (5, 11), (8, 11)]),
            (10, &[(7, 8), (5, 8), (10, 11), (7, 11)]),
            (12, &[(6, 8), (8, 8), (8, 11), (11, 11)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(29, &[1]), (29, &[29]), (41, &[1]), (41, &[41])],
        rows: &[
            (2, &[(3, 14), (0, 14), (4, 20), (0, 20)]),
            (4, &[(2, 14), (5, 14), (3, 20), (7, 20)]),
            (6, &[(7, 14), (4, 14), (10, 20), (6, 20)]),
            (8, &[(7, 14), (10, 14), (10, 20), (14, 20)]),
            (10, &[(12, 14), (9, 14), (17, 20), (13, 20)]),
            (12, &[(11, 14), (14, 14), (16, 20), (20, 20)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[
            (7, &[1]),
            (7, &[7]),
            (13, &[1]),
            (13, &[13]),
            (19, &[1]),
            (19, &[19]),
        ],
        rows: &[
            (2, &[(1, 1), (0, 1), (1, 2), (0, 2), (2, 3), (0, 3)]),
            (4, &[(0, 1), (1, 1), (1, 2), (2, 2), (1, 3), (3, 3)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[(31, &[1]), (31, &[31]), (37, &[1]), (37, &[37])],
        rows: &[
            (2, &[(3, 5), (0, 5), (2, 6), (1, 6)]),
            (4, &[(2, 5), (5, 5), (4, 6), (5, 6)]),
        ],
    },
    // square-free composite levels
    SplitTable {
        period: 24,
        columns: &[(6, &[1]), (6, &[2]), (6, &[3]), (6, &[6])],
        rows: &[
            (2, &[(-1, 1), (0, 1), (0, 1), (0, 1)]),
            (4, &[(0, 1), (0, 1), (0, 1), (1, 1)]),
            (6, &[(0, 1), (0, 1), (1, 1), (0, 1)]),
            (8, &[(1, 1), (0, 1), (0, 1), (0, 1)]),
            (10, &[(0, 1), (1, 1), (0, 1), (0, 1)]),
            (12, &[(1, 1), (1, 1), (0, 1), (1, 1)]),
            (14, &[(0, 1), (0, 1), (1, 1), (0, 1)]),
            (16, &[(1, 1), (0, 1), (1, 1), (1, 1)]),
            (18, &[(0, 1), (1, 1), (1, 1), (1, 1)]),
            (20, &[(1, 1), (1, 1), (0, 1), (1, 1)]),
            (22, &[(1, 1), (1, 1), (1, 1), (0, 1)]),
            (24, &[(2, 1), (1, 1), (1, 1), (1, 1)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(10, &[1]), (10, &[2, 5, 10])],
        rows: &[
            (2, &[(-1, 1), (0, 1)]),
            (4, &[(1, 1), (0, 1)]),
            (6, &[(0, 1), (1, 1)]),
            (8, &[(1, 1), (0, 1)]),
            (10, &[(0, 1), (1, 1)]),
            (12, &[(2, 1), (1, 1)]),
        ],
    },
    SplitTable {
        period: 8,
        columns: &[(14, &[1]), (14, &[2]), (14, &[7]), (14, &[14])],
        rows: &[
            (2, &[(-1, 1), (1, 1), (0, 1), (0, 1)]),
            (4, &[(1, 1), (0, 1), (0, 1), (1, 1)]),
            (6, &[(0, 1), (1, 1), (1, 1), (0, 1)]),
            (8, &[(2, 1), (0, 1), (1, 1), (1, 1)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(15, &[1]), (15, &[3]), (15, &[5]), (15, &[15])],
        rows: &[
            (2, &[(-1, 2), (1, 2), (0, 2), (0, 2)]),
            (4, &[(1, 2), (0, 2), (0, 2), (1, 2)]),
            (6, &[(0, 2), (2, 2), (1, 2), (1, 2)]),
            (8, &[(2, 2), (0, 2), (1, 2), (1, 2)]),
            (10, &[(1, 2), (2, 2), (2, 2), (1, 2)]),
            (12, &[(3, 2), (1, 2), (2, 2), (2, 2)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[(21, &[1]), (21, &[3, 21]), (21, &[7])],
        rows: &[
            (2, &[(-1, 1), (0, 1), (1, 1)]),
            (4, &[(2, 1), (1, 1), (0, 1)]),
        ],
    },
    SplitTable {
        period: 24,
        columns: &[(22, &[1]), (22, &[2, 22]), (22, &[11])],
        rows: &[
            (2, &[(-1, 5), (0, 5), (0, 5)]),
            (4, &[(1, 5), (1, 5), (0, 5)]),
            (6, &[(1, 5), (1, 5), (2, 5)]),
            (8, &[(2, 5), (1, 5), (1, 5)]),
            (10, &[(1, 5), (2, 5), (2, 5)]),
            (12, &[(3, 5), (3, 5), (2, 5)]),
            (14, &[(2, 5), (2, 5), (3, 5)]),
            (16, &[(4, 5), (3, 5), (3, 5)]),
            (18, &[(3, 5), (4, 5), (4, 5)]),
            (20, &[(4, 5), (4, 5), (3, 5)]),
            (22, &[(4, 5), (4, 5), (5, 5)]),
            (24, &[(6, 5), (5, 5), (5, 5)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[(26, &[1]), (26, &[2, 13]), (26, &[26])],
        rows: &[
            (2, &[(-1, 1), (1, 1), (0, 1)]),
            (4, &[(2, 1), (0, 1), (1, 1)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(33, &[1]), (33, &[3]), (33, &[11]), (33, &[33])],
        rows: &[
            (2, &[(-1, 5), (1, 5), (0, 5), (0, 5)]),
            (4, &[(2, 5), (1, 5), (1, 5), (2, 5)]),
            (6, &[(1, 5), (3, 5), (2, 5), (2, 5)]),
            (8, &[(4, 5), (2, 5), (3, 5), (3, 5)]),
            (10, &[(3, 5), (4, 5), (4, 5), (3, 5)]),
            (12, &[(6, 5), (4, 5), (5, 5), (5, 5)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(34, &[1]), (34, &[2, 34]), (34, &[17])],
        rows: &[
            (2, &[(-1, 4), (0, 4), (1, 4)]),
            (4, &[(2, 4), (1, 4), (0, 4)]),
            (6, &[(1, 4), (2, 4), (3, 4)]),
            (8, &[(3, 4), (2, 4), (1, 4)]),
            (10, &[(2, 4), (3, 4), (4, 4)]),
            (12, &[(5, 4), (4, 4), (3, 4)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[(35, &[1]), (35, &[5]), (35, &[7]), (35, &[35])],
        rows: &[
            (2, &[(-1, 2), (1, 2), (2, 2), (0, 2)]),
            (4, &[(3, 2), (1, 2), (0, 2), (2, 2)]),
        ],
    },
    SplitTable {
        period: 8,
        columns: &[(38, &[1]), (38, &[2]), (38, &[19]), (38, &[38])],
        rows: &[
            (2, &[(-1, 3), (1, 3), (1, 3), (0, 3)]),
            (4, &[(2, 3), (1, 3), (0, 3), (2, 3)]),
            (6, &[(1, 3), (2, 3), (3, 3), (1, 3)]),
            (8, &[(4, 3), (2, 3), (2, 3), (3, 3)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[(39, &[1]), (39, &[3]), (39, &[13]), (39, &[39])],
        rows: &[
            (2, &[(-1, 2), (1, 2), (2, 2), (0, 2)]),
            (4, &[(3, 2), (1, 2), (0, 2), (2, 2)]),
        ],
    },
    SplitTable {
        period: 12,
        columns: &[(30, &[1, 10]), (30, &[3, 6, 15, 30]), (30, &[2, 5])],
        rows: &[
            (2, &[(1, 1), (0, 1), (0, 1)]),
            (4, &[(0, 1), (0, 1), (1, 1)]),
            (6, &[(1, 1), (0, 1), (0, 1)]),
            (8, &[(0, 1), (1, 1), (1, 1)]),
            (10, &[(1, 1), (1, 1), (0, 1)]),
            (12, &[(0, 1), (1, 1), (1, 1)]),
        ],
    },
    SplitTable {
        period: 8,
        columns: &[(42, &[1, 21]), (42, &[2, 6, 14, 42]), (42, &[3, 7])],
        rows: &[
            (2, &[(1, 1), (0, 1), (0, 1)]),
            (4, &[(0, 1), (0, 1), (1, 1)]),
            (6, &[(1, 1), (1, 1), (0, 1)]),
            (8, &[(0, 1), (1, 1), (1, 1)]),
        ],
    },
    // levels that are not square-free
    SplitTable {
        period: 12,
        columns: &[(12, &[1]), (12, &[3]), (20, &[1]), (20, &[5])],
        rows: &[
            (2, &[(0, 1), (0, 1), (0, 2), (1, 2)]),
            (4, &[(1, 1), (0, 1), (1, 2), (0, 2)]),
            (6, &[(0, 1), (0, 1), (0, 2), (1, 2)]),
            (8, &[(1, 1), (1, 1), (2, 2), (1, 2)]),
            (10, &[(0, 1), (1, 1), (1, 2), (2, 2)]),
            (12, &[(1, 1), (1, 1), (2, 2), (1, 2)]),
        ],
    },
    SplitTable {
        period: 24,
        columns: &[(18, &[1]), (18, &[2])],
        rows: &[
            (2, &[(0, 5), (0, 5)]),
            (4, &[(1, 5), (0, 5)]),
            (6, &[(1, 5), (2, 5)]),
            (8, &[(1, 5), (1, 5)]),
            (10, &[(2, 5), (2, 5)]),
            (12, &[(3, 5), (2, 5)]),
            (14, &[(2, 5), (3, 5)]),
            (16, &[(3, 5), (3, 5)]),
            (18, &[(4, 5), (4, 5)]),
            (20, &[(4, 5), (3, 5)]),
            (22, &[(4, 5), (5, 5)]),
            (24, &[(5, 5), (5, 5)]),
        ],
    },
    SplitTable {
        period: 4,
        columns: &[
            (24, &[1]),
            (24, &[3]),
            (28, &[1, 7]),
            (40, &[1]),
            (40, &[5]),
        ],
        rows: &[
            (2, &[(0, 1), (1, 1), (0, 1), (1, 2), (0, 2)]),
            (4, &[(1, 1), (0, 1), (1, 1), (1, 2), (2, 2)]),
        ],
    },
];
