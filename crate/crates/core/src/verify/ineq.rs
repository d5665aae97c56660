//! Exact evaluation of the counting argument that forces an absolutely
//! irreducible component: an upper bound on the intersection of two putative
//! components at the singular points against the lower bound given by Bezout.
//!
//! All quantities are scaled by 36 so they are integers; a square root of
//! q^t is kept symbolic and squared out when compared.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityEval {
    pub q: u64,
    pub t: u32,
    pub k_max: u32,
    /// "divides" when t | k_M, "coprime" otherwise.
    pub case: String,
    /// 36 * (upper bound) = lhs_int + lhs_sqrt * sqrt(q^t).
    pub lhs_int: String,
    pub lhs_sqrt: String,
    /// 36 * (Bezout lower bound).
    pub rhs: String,
    /// The upper bound is strictly below the lower bound.
    pub contradiction: bool,
    /// What the stated thresholds predict for `contradiction`.
    pub predicted: bool,
}

fn big(q: u64) -> BigInt {
    BigInt::from(q)
}

fn pow(q: u64, e: u32) -> BigInt {
    big(q).pow(e)
}

/// Degree of C_f: q^k_M + q^t - q - 1.
pub fn curve_degree(q: u64, t: u32, k_max: u32) -> BigInt {
    pow(q, k_max) + pow(q, t) - big(q) - 1
}

/// a + b sqrt(s) < c, exactly (b >= 0).
fn lt_with_sqrt(a: &BigInt, b: &BigInt, s: &BigInt, c: &BigInt) -> bool {
    let r = c - a;
    if r <= BigInt::from(0) {
        return false;
    }
    b * b * s < &r * &r
}

/// Predicted by the thresholds: gamma >= 3 when t | k_M, k_M >= 2t - 1 otherwise.
pub fn threshold_predicts(t: u32, k_max: u32) -> bool {
    if k_max % t == 0 {
        k_max / t >= 3
    } else {
        k_max + 1 >= 2 * t
    }
}

pub fn evaluate(q: u64, t: u32, k_max: u32) -> InequalityEval {
    let a = pow(q, t) - big(q) - 1;
    let d = curve_degree(q, t, k_max);
    let qq = pow(q, k_max + t);
    let rhs = BigInt::from(8) * &d * &d;
    let base = BigInt::from(9) * &a * &a;
    let (case, lhs_int, lhs_sqrt, contradiction) = if k_max % t == 0 {
        let lhs = &base + BigInt::from(9) * (pow(q, t) + 1) * &qq;
        let c = lhs < rhs;
        ("divides", lhs, BigInt::from(0), c)
    } else {
        let li = &base + BigInt::from(9) * &qq;
        let ls = BigInt::from(9) * &qq;
        let c = lt_with_sqrt(&li, &ls, &pow(q, t), &rhs);
        ("coprime", li, ls, c)
    };
    InequalityEval {
        q,
        t,
        k_max,
        case: case.into(),
        lhs_int: lhs_int.to_string(),
        lhs_sqrt: lhs_sqrt.to_string(),
        rhs: rhs.to_string(),
        contradiction,
        predicted: threshold_predicts(t, k_max),
    }
}

/// q^r + 1 - (D-1)(D-2) sqrt(q^r) - q^(k_M - t) - q D > 0, with D the curve degree.
pub fn point_bound_positive(q: u64, t: u32, k_max: u32, r: u32) -> bool {
    let d = curve_degree(q, t, k_max);
    let ideal = if k_max >= t { pow(q, k_max - t) } else { BigInt::from(1) };
    let a = pow(q, r) + 1 - ideal - big(q) * &d;
    let b = (&d - 1) * (&d - 2);
    if a <= BigInt::from(0) {
        return false;
    }
    &a * &a > &b * &b * pow(q, r)
}
