//! p-adic digit combinatorics: Lucas' congruence, Fine's count of nonzero
//! binomials, and the pattern-length thresholds derived from the base-p
//! digits of a monomial degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::linalg;

/// Base-p digits of `n`, least significant first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PAdicExpansion {
    pub n: u64,
    pub p: u32,
    pub digits: Vec<u32>,
}

impl PAdicExpansion {
    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

pub fn p_adic_expansion(n: u64, p: u32) -> PAdicExpansion {
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push((rest % p as u64) as u32);
        rest /= p as u64;
    }
    PAdicExpansion { n, p, digits }
}

/// `C(m, n) mod p` for `m, n < p`.
fn small_binom(m: u32, n: u32, p: u32) -> u32 {
    if n > m {
        return 0;
    }
    let n = n.min(m - n);
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..n {
        num = linalg::mul_mod(num, m - i, p);
        den = linalg::mul_mod(den, i + 1, p);
    }
    linalg::mul_mod(num, linalg::inv_mod(den, p).expect("i+1 < p"), p)
}

/// `C(m, n) mod p` as the product of digit-wise binomials.
pub fn lucas_binom(m: u64, n: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    let (mut m, mut n) = (m, n);
    while n > 0 {
        if m == 0 {
            return 0;
        }
        let mj = (m % p as u64) as u32;
        let nj = (n % p as u64) as u32;
        if nj > mj {
            return 0;
        }
        acc = linalg::mul_mod(acc, small_binom(mj, nj, p), p);
        m /= p as u64;
        n /= p as u64;
    }
    acc
}

/// Number of `n ∈ [0, m]` with `C(m, n) ≢ 0 (mod p)`: `Π (m_j + 1)`.
pub fn fine_count(m: u64, p: u32) -> u64 {
    p_adic_expansion(m, p)
        .digits
        .iter()
        .map(|&d| d as u64 + 1)
        .product()
}

/// Pattern-length bound for monomials of reduced degree with the given
/// digits (`d_0 ≠ 0`).
///
/// For one digit this is `d_0`. Otherwise it is the maximum of `d_0` and of
/// `(d_{m+k} + 1) p^k` over every start `1 ≤ m ≤ n-1` and every run
/// `d_m = … = d_{m+k-1} = p-1` with `m + k ≤ n-1`, including `k = 0`.
pub fn theorem1_s_max(digits: &PAdicExpansion) -> u64 {
    let d = &digits.digits;
    let p = digits.p as u64;
    assert!(!d.is_empty() && d[0] != 0, "reduced degree must have d_0 != 0");
    let n = d.len();
    let mut best = d[0] as u64;
    for m in 1..n {
        let mut k = 0usize;
        while m + k < n {
            best = best.max((d[m + k] as u64 + 1) * p.pow(k as u32));
            if d[m + k] as u64 != p - 1 {
                break;
            }
            k += 1;
        }
    }
    best
}

/// Thresholds on `s` for the two emptiness constructions on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmptinessThresholds {
    /// `Π (d_i + 1)`: prime-subfield shifts of this size admit an empty pattern.
    pub s_part2: u64,
    /// Whether `Π (d_i + 1) ≤ p`, the hypothesis of that construction.
    pub part2_valid: bool,
    /// `(Π (d_i + 1) - 1) r + 1`: any shift set of this size admits one.
    pub s_part3: u64,
}

pub fn theorem1_emptiness_thresholds(digits: &PAdicExpansion, r: u32) -> EmptinessThresholds {
    let prod: u64 = digits.digits.iter().map(|&d| d as u64 + 1).product();
    EmptinessThresholds {
        s_part2: prod,
        part2_valid: prod <= digits.p as u64,
        s_part3: (prod - 1) * r as u64 + 1,
    }
}

/// A monomial degree split as `d = reduced_d · p^j` with `p^j = gcd(d, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialProfile {
    pub d: u64,
    pub j: u32,
    pub reduced_d: u64,
    pub digits: PAdicExpansion,
    pub n: usize,
    pub s_max: u64,
    pub fine_product: u64,
}

impl MonomialProfile {
    /// `d / gcd(d, q)`.
    pub fn reduced(&self) -> u64 {
        self.reduced_d
    }
}

pub fn monomial_profile(d: u64, ctx: &FieldContext) -> Result<MonomialProfile> {
    monomial_profile_for(d, ctx.p(), ctx.r())
}

pub fn monomial_profile_for(d: u64, p: u32, r: u32) -> Result<MonomialProfile> {
    let q = (p as u64).pow(r);
    if d == 0 || d >= q {
        return Err(Error::DegreeOutOfRange { d, q });
    }
    let mut j = 0;
    let mut reduced_d = d;
    while reduced_d.is_multiple_of(p as u64) {
        reduced_d /= p as u64;
        j += 1;
    }
    let digits = p_adic_expansion(reduced_d, p);
    let s_max = theorem1_s_max(&digits);
    let fine_product = fine_count(reduced_d, p);
    Ok(MonomialProfile {
        d,
        j,
        reduced_d,
        n: digits.len(),
        digits,
        s_max,
        fine_product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn exact_binom_mod(m: u64, n: u64, p: u32) -> u32 {
        if n > m {
            return 0;
        }
        let mut acc = BigUint::from(1u32);
        for i in 0..n {
            acc *= BigUint::from(m - i);
            acc /= BigUint::from(i + 1);
        }
        (acc % BigUint::from(p)).try_into().unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert!(p_adic_expansion(0, 5).digits.is_empty());
        assert_eq!(p_adic_expansion(7, 5).digits, vec![2, 1]);
        assert_eq!(p_adic_expansion(8, 3).digits, vec![2, 2]);
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom(17, 0, 3), 1);
        assert_eq!(lucas_binom(5, 2, 3), 1);
        assert_eq!(lucas_binom(7, 3, 5), 0);
        assert_eq!(exact_binom_mod(5, 2, 3), 1);
        assert_eq!(exact_binom_mod(7, 3, 5), 0);
    }

    #[test]
    fn lucas_matches_bigint_small_grid() {
        for p in [2, 3, 5, 7] {
            for m in 0..=60 {
                for n in 0..=60 {
                    assert_eq!(lucas_binom(m, n, p), exact_binom_mod(m, n, p), "{m} {n} {p}");
                }
            }
        }
    }

    #[test]
    fn fine_examples() {
        assert_eq!(fine_count(0, 7), 1);
        assert_eq!(fine_count(5, 2), 4);
        assert_eq!(fine_count(5, 3), 6);
        let nonzero: Vec<u64> = (0..=5).filter(|&n| exact_binom_mod(5, n, 2) != 0).collect();
        assert_eq!(nonzero, vec![0, 1, 4, 5]);
    }

    #[test]
    fn s_max_examples() {
        assert_eq!(theorem1_s_max(&p_adic_expansion(2, 3)), 2);
        assert_eq!(theorem1_s_max(&p_adic_expansion(8, 3)), 3);
        assert_eq!(theorem1_s_max(&p_adic_expansion(3, 2)), 2);
        // 7 = (1,1,1)_2: run of two ones from m = 1 would overrun the top digit,
        // so the best is m = 1, k = 1: (d_2 + 1) · 2 = 4.
        assert_eq!(theorem1_s_max(&p_adic_expansion(7, 2)), 4);
        // 2047 = 2^11 - 1: m = 1, k = 9 gives 2 · 2^9.
        assert_eq!(theorem1_s_max(&p_adic_expansion(2047, 2)), 1024);
    }

    #[test]
    fn threshold_examples() {
        let t = theorem1_emptiness_thresholds(&p_adic_expansion(2, 3), 2);
        assert_eq!((t.s_part2, t.part2_valid, t.s_part3), (3, true, 5));
        let t = theorem1_emptiness_thresholds(&p_adic_expansion(1, 5), 4);
        assert_eq!((t.s_part2, t.s_part3), (2, 5));
        let t = theorem1_emptiness_thresholds(&p_adic_expansion(3, 2), 3);
        assert_eq!((t.s_part2, t.part2_valid, t.s_part3), (4, false, 10));
    }

    #[test]
    fn profile_examples() {
        let pr = monomial_profile_for(3, 3, 2).unwrap();
        assert_eq!((pr.j, pr.reduced_d, pr.digits.digits.clone(), pr.s_max), (1, 1, vec![1], 1));
        let pr = monomial_profile_for(3, 2, 2).unwrap();
        assert_eq!((pr.j, pr.reduced_d, pr.n), (0, 3, 2));
        assert_eq!(pr.digits.digits, vec![1, 1]);
        let pr = monomial_profile_for(1, 2, 3).unwrap();
        assert_eq!((pr.j, pr.reduced_d, pr.s_max, pr.fine_product), (0, 1, 1, 2));
        assert!(matches!(
            monomial_profile_for(9, 3, 2),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(monomial_profile_for(0, 3, 2).is_err());
    }

    #[test]
    fn dichotomy_below_p() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            for d in 1..p as u64 {
                let e = p_adic_expansion(d, p);
                let t = theorem1_emptiness_thresholds(&e, 1);
                assert_eq!(theorem1_s_max(&e), d);
                assert_eq!(t.s_part2, d + 1);
                assert!(theorem1_s_max(&e) <= t.s_part2);
            }
        }
    }

    proptest! {
        #[test]
        fn expansion_roundtrip(n in 0u64..1_000_000, pi in 0usize..6) {
            let p = [2u32, 3, 5, 7, 11, 13][pi];
            let e = p_adic_expansion(n, p);
            prop_assert_eq!(e.value(), n);
            prop_assert!(e.digits.iter().all(|&d| d < p));
            prop_assert!(e.digits.last().is_none_or(|&d| d != 0));
        }

        #[test]
        fn profile_roundtrip(d in 1u64..2048, pi in 0usize..4) {
            let (p, r) = [(2u32, 11u32), (3, 7), (5, 5), (7, 4)][pi];
            let pr = monomial_profile_for(d, p, r).unwrap();
            prop_assert_eq!(pr.reduced_d * (p as u64).pow(pr.j), d);
            prop_assert!(!pr.reduced_d.is_multiple_of(p as u64));
            prop_assert!(pr.s_max >= pr.digits.digits[0] as u64);
            prop_assert!(pr.s_max >= 1);
            prop_assert_eq!(pr.fine_product, fine_count(pr.reduced_d, p));
        }
    }
}
