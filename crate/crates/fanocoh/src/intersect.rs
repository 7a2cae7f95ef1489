//! Intersection numbers for the cylinder construction on hypersurfaces.
//!
//! For lines on a degree-`d` hypersurface `X ⊂ P^{p}` (passed here as
//! `n = p + 1`, the dimension of the underlying vector space, to match the
//! rest of the crate), the pushforward of powers of the hyperplane class
//! through the incidence variety of pointed lines is governed by the
//! homogeneous polynomial `M(x, y) = ∏_{1 ≤ i ≤ j ≤ d-1} (i·x + (d-j)·y)` of
//! degree `C = binom(d, 2)`: writing `M = Σ α_i x^i y^{C-i}`, the relevant
//! pushforward coefficients are differences of consecutive `α`'s scaled by
//! `d!`. The coefficient list is palindromic, which is what kills the
//! curve-degree reading exactly when the dimension count balances.
//!
//! [`aj_class_solver`] then solves, inside `H^*(J, Q)` of a `g`-dimensional
//! principally polarized `(J, Θ)`, for the coefficients `x, y` in
//! `[curve] = x·Θ^{g-1}/(g-1)!` and `[surface] = y·Θ^{g-2}/(g-2)!` from the
//! two computed numbers `[curve]·[surface]` and `[surface]·[surface]·Θ...`,
//! using only `Θ^g = g!` and exact rational arithmetic. A fractional `x`
//! with integral `y` is the interesting outcome: the surface is a genuine
//! cycle while the curve reading fails integrality.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `∏_{1 ≤ i ≤ j ≤ d-1} (i·x + (d-j)·y)` as the coefficient list
/// `[α_0, …, α_C]` of `x^i y^{C-i}`, `C = binom(d, 2)`.
pub fn m_poly(d: u32) -> Result<Vec<BigUint>> {
    if d < 1 {
        return Err(Error::OutOfRange("m_poly needs d >= 1".into()));
    }
    let mut coeffs = vec![BigUint::one()];
    for j in 1..d {
        for i in 1..=j {
            let xc = BigUint::from(i);
            let yc = BigUint::from(d - j);
            let mut next = vec![BigUint::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c * &xc;
                next[k] += c * &yc;
            }
            coeffs = next;
        }
    }
    let palindromic = coeffs
        .iter()
        .zip(coeffs.iter().rev())
        .all(|(a, b)| a == b);
    if !palindromic {
        return Err(Error::Internal(format!(
            "M(x, y) lost its palindromic symmetry at d = {d}"
        )));
    }
    Ok(coeffs)
}

fn factorial(k: u32) -> BigUint {
    (1..=k).map(BigUint::from).product()
}

/// The two pushforward numbers for lines on a degree-`d` hypersurface in
/// `P^{n-1}`, with the sign-ambiguous readings spelled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PushforwardReport {
    pub n: usize,
    pub d: u32,
    /// Whether `3p - 4 - binom(d+2, 2) = p - 2`, i.e. the incidence of
    /// pointed lines has exactly the dimension that makes the curve class
    /// a number (and the palindromy cancellation fire).
    pub covering_equality: bool,
    /// `d! (α_{p-2-d} - α_{p-1-d})` — the curve-degree reading.
    #[serde(serialize_with = "crate::ser::bigint_str")]
    pub class_c: BigInt,
    /// `d! (α_{p-3-d} - α_{p-1-d})` — the surface reading.
    #[serde(serialize_with = "crate::ser::bigint_str")]
    pub class_l: BigInt,
    /// The two sign readings of the incidence number.
    pub n_candidates: Vec<String>,
    /// `|class_l - class_c|`.
    #[serde(serialize_with = "crate::ser::biguint_str")]
    pub n_canonical: BigUint,
}

pub fn pushforward_coeffs(n: usize, d: u32) -> Result<PushforwardReport> {
    if n < 2 || d < 2 {
        return Err(Error::OutOfRange(format!(
            "pushforward_coeffs needs n >= 2 and d >= 2, got ({n}, {d})"
        )));
    }
    let p = (n - 1) as i64;
    let alpha = m_poly(d)?;
    let c = alpha.len() as i64 - 1;
    let idx = |k: i64, what: &str| -> Result<usize> {
        if k < 0 || k > c {
            return Err(Error::OutOfRange(format!(
                "the {what} index {k} falls outside 0..={c}; the (n, d) = \
                 ({n}, {d}) family is not in the lines-compute-a-number range"
            )));
        }
        Ok(k as usize)
    };
    let d64 = i64::from(d);
    let a_c1 = idx(p - 2 - d64, "curve")?;
    let a_c2 = idx(p - 1 - d64, "curve")?;
    let a_l = idx(p - 3 - d64, "surface")?;
    let fact = BigInt::from(factorial(d));
    let class_c = &fact * (BigInt::from(alpha[a_c1].clone()) - BigInt::from(alpha[a_c2].clone()));
    let class_l = &fact * (BigInt::from(alpha[a_l].clone()) - BigInt::from(alpha[a_c2].clone()));
    let covering_equality =
        3 * p - 4 - binom_small(d64 + 2, 2) == p - 2;
    let diff = &class_l - &class_c;
    let n_candidates = vec![diff.to_string(), (-&diff).to_string()];
    let n_canonical = diff.abs().to_biguint().unwrap();
    Ok(PushforwardReport {
        n,
        d,
        covering_equality,
        class_c,
        class_l,
        n_candidates,
        n_canonical,
    })
}

fn binom_small(n: i64, k: i64) -> i64 {
    crate::plethysm::binom_i64(n, k).expect("small binomial")
}

/// `d!` times the canonical incidence number — the pairing `[curve]·[surface]`
/// handed to the class solver.
pub fn pairing_factor(n: usize, d: u32) -> Result<BigUint> {
    let report = pushforward_coeffs(n, d)?;
    Ok(BigUint::from(factorial(d)) * report.n_canonical)
}

/// The solved cycle-class coefficients on a `g`-dimensional ppav.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AJClasses {
    pub genus: u64,
    pub pairing: u64,
    pub l2: u64,
    /// `x·y = pairing / (g-1)`.
    #[serde(serialize_with = "crate::ser::ratio_obj")]
    pub xy: Ratio<BigInt>,
    /// `x²·y = l2 / (g(g-1))`.
    #[serde(serialize_with = "crate::ser::ratio_obj")]
    pub x2y: Ratio<BigInt>,
    /// Coefficient of the curve reading `Θ^{g-1}/(g-1)!`.
    #[serde(serialize_with = "crate::ser::ratio_obj")]
    pub x: Ratio<BigInt>,
    /// Coefficient of the surface `Θ^{g-2}/(g-2)!`.
    #[serde(serialize_with = "crate::ser::ratio_obj")]
    pub y: Ratio<BigInt>,
    pub y_integral: bool,
}

/// Solves `x` and `y` from `pairing = (g-1)·xy` and `l2 = g(g-1)·x²y`.
///
/// The two products pin the monomials `xy` and `x²y`, hence `x = x²y/xy`
/// and `y = (xy)²/x²y`, all exactly.
pub fn aj_class_solver(genus: u64, pairing: u64, l2: u64) -> Result<AJClasses> {
    if genus < 3 {
        return Err(Error::OutOfRange(format!(
            "the class solver needs genus >= 3, got {genus}"
        )));
    }
    if pairing == 0 || l2 == 0 {
        return Err(Error::OutOfRange(
            "the class solver needs nonzero pairing and l2".into(),
        ));
    }
    let big = |v: u64| BigInt::from(v);
    let xy = Ratio::new(big(pairing), big(genus - 1));
    let x2y = Ratio::new(big(l2), big(genus) * big(genus - 1));
    let x = &x2y / &xy;
    let y = &xy * &xy / &x2y;
    let y_integral = y.is_integer();
    Ok(AJClasses {
        genus,
        pairing,
        l2,
        xy,
        x2y,
        x,
        y,
        y_integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn m_poly_small_degrees() {
        assert_eq!(m_poly(2).unwrap(), ints(&[1, 1]));
        assert_eq!(m_poly(3).unwrap(), ints(&[2, 7, 7, 2]));
        let quartic = m_poly(4).unwrap();
        assert_eq!(quartic.len(), 7);
        assert_eq!(quartic[0], BigUint::from(12u32));
        assert_eq!(quartic[6], BigUint::from(12u32));
        let total: BigUint = quartic.iter().sum();
        assert_eq!(total, BigUint::from(1152u32)); // M(1,1)
        let rev: Vec<BigUint> = quartic.iter().rev().cloned().collect();
        assert_eq!(quartic, rev);
    }

    #[test]
    fn cubic_sixfold_ambient_pushforward() {
        let rep = pushforward_coeffs(7, 3).unwrap();
        assert!(rep.covering_equality);
        assert_eq!(rep.class_c, BigInt::from(0));
        assert_eq!(rep.class_l, BigInt::from(-30));
        assert_eq!(rep.n_canonical, BigUint::from(30u32));
        assert_eq!(rep.n_candidates, vec!["-30".to_string(), "30".to_string()]);
        assert_eq!(pairing_factor(7, 3).unwrap(), BigUint::from(180u32));
    }

    #[test]
    fn out_of_range_families_are_rejected() {
        // p - 3 - d < 0: the surface reading does not exist
        assert!(pushforward_coeffs(6, 3).is_err());
        // while a deeper ambient space runs but fails the covering equality
        let rep = pushforward_coeffs(9, 4).unwrap();
        assert!(!rep.covering_equality);
    }

    #[test]
    fn class_solver_frozen_example() {
        let sol = aj_class_solver(21, 180, 2835).unwrap();
        let q = |a: i64, b: i64| Ratio::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(sol.xy, q(9, 1));
        assert_eq!(sol.x2y, q(27, 4));
        assert_eq!(sol.x, q(3, 4));
        assert_eq!(sol.y, q(12, 1));
        assert!(sol.y_integral);
        assert!(!sol.x.is_integer());
    }

    #[test]
    fn class_solver_round_trips() {
        // plant x = 1, y = 2 at g = 3: pairing = (g-1)xy, l2 = g(g-1)x^2y
        let sol = aj_class_solver(3, 4, 12).unwrap();
        let q = |a: i64| Ratio::from_integer(BigInt::from(a));
        assert_eq!(sol.x, q(1));
        assert_eq!(sol.y, q(2));
        assert!(aj_class_solver(2, 4, 12).is_err());
        assert!(aj_class_solver(21, 0, 1).is_err());
    }
}
