//! Certified empty pattern sets.
//!
//! Each construction finds shifts `α_i` and a nonzero `a ∈ F_p^s` such that
//! `Σ a_i T(f(ξ + α_i))` does not depend on ξ. Any target vector with a
//! different weighted sum is then unattainable. Certificates are only
//! returned after the emptiness has been confirmed by brute force.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::binomials::{lucas_binom, monomial_profile, theorem1_emptiness_thresholds};
use crate::digitfn::thue_morse_fast;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldDescriptor, FieldElement};
use crate::linalg::{add_mod, inv_mod, mul_mod, pow_mod, sub_mod};
use crate::pattern::{count_pattern, validate_shifts, PatternSpec};
use crate::poly::{DensePolynomial, FieldFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConstructionId {
    /// Monomial, shifts in the prime subfield.
    T1P2,
    /// Monomial, arbitrary shifts.
    T1P3,
    /// Polynomial over F_p, shifts in the prime subfield.
    T3P2,
    /// Polynomial, arbitrary shifts.
    T3P3,
    /// `δ^{-1}(g^p - g + c0)`, whose digit sum is constant.
    GCD71,
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T1P2" => Ok(ConstructionId::T1P2),
            "T1P3" => Ok(ConstructionId::T1P3),
            "T3P2" => Ok(ConstructionId::T3P2),
            "T3P3" => Ok(ConstructionId::T3P3),
            "GCD71" | "GCD" => Ok(ConstructionId::GCD71),
            _ => Err(Error::Parse(format!("unknown construction {s:?}"))),
        }
    }
}

/// A verified empty pattern together with the linear relation explaining it.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleCertificate {
    pub field: FieldDescriptor,
    pub function: String,
    pub construction_id: ConstructionId,
    pub shifts: Vec<String>,
    pub targets: Vec<u32>,
    pub a_vector: Vec<u32>,
    /// The value of `Σ a_i c_i` shared by every attainable target vector.
    pub attainable_sum: u32,
    pub verified: bool,
    /// `j` with `p^j = gcd(d, q)` for monomial constructions, else 0.
    pub frobenius_exponent: u32,
    /// Set when the construction was attempted below its guaranteed threshold.
    pub below_threshold: bool,
    #[serde(skip)]
    pub f: FieldFunction,
    #[serde(skip)]
    pub spec: PatternSpec,
}

/// A nonzero `a` with `Σ a_i v_i = 0`.
///
/// Vectors are scanned in order; the first one lying in the span of its
/// predecessors gets coefficient 1, later ones 0, and the result is scaled so
/// that its first nonzero entry is 1.
pub fn null_combination(vectors: &[Vec<u32>], p: u32) -> Result<Vec<u32>> {
    let s = vectors.len();
    let len = vectors.first().map_or(0, Vec::len);
    if vectors.iter().any(|v| v.len() != len) {
        return Err(Error::InvalidPattern("vectors of unequal length".into()));
    }
    // reduced rows with their pivot and the combination producing them
    let mut basis: Vec<(usize, Vec<u32>, Vec<u32>)> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut row: Vec<u32> = v.iter().map(|&x| x % p).collect();
        let mut combo = vec![0u32; s];
        combo[i] = 1;
        for (pc, b, cb) in &basis {
            let factor = row[*pc];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(b) {
                *x = sub_mod(*x, mul_mod(factor, y, p), p);
            }
            for (x, &y) in combo.iter_mut().zip(cb) {
                *x = sub_mod(*x, mul_mod(factor, y, p), p);
            }
        }
        match row.iter().position(|&x| x != 0) {
            Some(pc) => {
                let inv = inv_mod(row[pc], p)?;
                row.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
                combo.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
                basis.push((pc, row, combo));
            }
            None => {
                let lead = *combo.iter().find(|&&x| x != 0).expect("combo[i] = 1");
                let scale = inv_mod(lead, p)?;
                combo.iter_mut().for_each(|x| *x = mul_mod(*x, scale, p));
                check_combination(vectors, &combo, p)?;
                return Ok(combo);
            }
        }
    }
    Err(Error::NoDependence)
}

fn check_combination(vectors: &[Vec<u32>], a: &[u32], p: u32) -> Result<()> {
    if a.iter().all(|&x| x == 0) {
        return Err(Error::VerificationFailed("zero combination".into()));
    }
    let len = vectors.first().map_or(0, Vec::len);
    for k in 0..len {
        let sum = vectors
            .iter()
            .zip(a)
            .fold(0, |acc, (v, &ai)| add_mod(acc, mul_mod(ai, v[k] % p, p), p));
        if sum != 0 {
            return Err(Error::VerificationFailed(format!("combination nonzero at coordinate {k}")));
        }
    }
    Ok(())
}

/// The lexicographically smallest `c` with `Σ a_i c_i ≠ attainable_sum`.
pub fn violating_targets(a: &[u32], attainable_sum: u32) -> Vec<u32> {
    let mut c = vec![0u32; a.len()];
    if attainable_sum == 0 {
        let k = a.iter().rposition(|&x| x != 0).expect("a is nonzero");
        c[k] = 1;
    }
    c
}

/// The first `s` elements of the enumeration: the prime subfield `0, 1, …`
/// followed by the remaining elements in order.
pub fn prime_first_shifts(ctx: &FieldContext, s: usize) -> Vec<FieldElement> {
    debug_assert!(s as u64 <= ctx.q() as u64);
    (0..s as u32).map(FieldElement::from_index).collect()
}

fn digit_sum_of(ctx: &FieldContext, f: &FieldFunction, x: FieldElement) -> u32 {
    thue_morse_fast(ctx, f.eval(ctx, x))
}

fn weighted_offset(ctx: &FieldContext, f: &FieldFunction, shifts: &[FieldElement], a: &[u32]) -> u32 {
    let p = ctx.p();
    shifts.iter().zip(a).fold(0, |acc, (&alpha, &ai)| {
        add_mod(acc, mul_mod(ai, digit_sum_of(ctx, f, alpha), p), p)
    })
}

struct Draft {
    f: FieldFunction,
    shifts: Vec<FieldElement>,
    a: Vec<u32>,
    attainable_sum: u32,
    construction_id: ConstructionId,
    frobenius_exponent: u32,
    below_threshold: bool,
}

/// Checks the pointwise relation and the emptiness, then emits.
fn certify(ctx: &FieldContext, draft: Draft) -> Result<CounterexampleCertificate> {
    let p = ctx.p();
    let Draft { f, shifts, a, attainable_sum, .. } = &draft;
    if a.iter().all(|&x| x == 0) {
        return Err(Error::VerificationFailed("zero coefficient vector".into()));
    }
    let table: Vec<u32> = ctx.elements().map(|x| digit_sum_of(ctx, f, x)).collect();
    let mut sums = vec![0u32; ctx.q() as usize];
    for (&alpha, &ai) in shifts.iter().zip(a) {
        if ai != 0 {
            ctx.translation(alpha)
                .for_each(|x, y| sums[x] = add_mod(sums[x], mul_mod(ai, table[y as usize], p), p));
        }
    }
    for (x, &sum) in ctx.elements().zip(&sums) {
        if sum != *attainable_sum {
            return Err(Error::VerificationFailed(format!(
                "weighted digit sum at {} is {sum}, expected {attainable_sum}",
                ctx.format_element(x)
            )));
        }
    }
    let targets = violating_targets(a, *attainable_sum);
    let spec = PatternSpec::new(shifts.clone(), targets.clone());
    let count = count_pattern(ctx, f, &spec)?;
    if count != 0 {
        return Err(Error::VerificationFailed(format!("pattern has {count} elements")));
    }
    Ok(CounterexampleCertificate {
        field: ctx.descriptor(),
        function: f.describe(ctx),
        construction_id: draft.construction_id,
        shifts: shifts.iter().map(|&x| ctx.format_element(x)).collect(),
        targets,
        a_vector: a.clone(),
        attainable_sum: *attainable_sum,
        verified: true,
        frobenius_exponent: draft.frobenius_exponent,
        below_threshold: draft.below_threshold,
        f: draft.f,
        spec,
    })
}

fn check_length(ctx: &FieldContext, s: usize) -> Result<()> {
    if s == 0 || s as u64 > ctx.q() as u64 {
        return Err(Error::PreconditionViolated(format!("need 1 <= s <= q = {}, got {s}", ctx.q())));
    }
    Ok(())
}

/// Empty pattern for `X^d` with shifts `0, 1, …` in the prime subfield.
///
/// Needs `Π(d_i + 1) ≤ p` and `q ≥ s ≥ Π(d_i + 1)` for the digits of
/// `d / gcd(d, q)`. Only the first `min(s, p)` shifts carry weight.
pub fn empty_pattern_monomial(ctx: &FieldContext, d: u64, s: usize) -> Result<CounterexampleCertificate> {
    let profile = monomial_profile(d, ctx)?;
    let th = theorem1_emptiness_thresholds(&profile.digits, ctx.r());
    if !th.part2_valid {
        return Err(Error::PreconditionViolated(format!(
            "digit product {} exceeds p = {}",
            th.s_part2,
            ctx.p()
        )));
    }
    if (s as u64) < th.s_part2 {
        return Err(Error::PreconditionViolated(format!("need s >= {}, got {s}", th.s_part2)));
    }
    check_length(ctx, s)?;
    let p = ctx.p();
    let e = profile.reduced_d;
    // Over the prime subfield α^{p^j} = α, so (X+α)^d - α^d is the p^j-th
    // power of Σ_k C(e,k) α^{e-k} X^k over k ≥ 1.
    let ks: Vec<u64> = (1..=e).filter(|&k| lucas_binom(e, k, p) != 0).collect();
    let weighted = s.min(p as usize);
    let vectors: Vec<Vec<u32>> = (0..weighted as u32)
        .map(|alpha| {
            ks.iter()
                .map(|&k| mul_mod(lucas_binom(e, k, p), pow_mod(alpha, e - k, p), p))
                .collect()
        })
        .collect();
    let mut a = null_combination(&vectors, p)?;
    a.resize(s, 0);
    let f = FieldFunction::Poly(DensePolynomial::x_pow(d as usize));
    let shifts = prime_first_shifts(ctx, s);
    let attainable_sum = weighted_offset(ctx, &f, &shifts, &a);
    certify(
        ctx,
        Draft {
            f,
            shifts,
            a,
            attainable_sum,
            construction_id: ConstructionId::T1P2,
            frobenius_exponent: profile.j,
            below_threshold: false,
        },
    )
}

/// Empty pattern for the given shifts, found from the full value tables
/// `ξ ↦ T(f(ξ + α_i)) - T(f(α_i))`.
///
/// Monomials are guaranteed once `s > (Π(d_i + 1) - 1) r`, other polynomials
/// once `s > d r`. Below that the attempt is refused unless `force` is set,
/// and may then end in [`Error::NoDependence`].
pub fn empty_pattern_any_a(
    ctx: &FieldContext,
    f: &FieldFunction,
    shifts: &[FieldElement],
    force: bool,
) -> Result<CounterexampleCertificate> {
    validate_shifts(ctx, shifts)?;
    let s = shifts.len() as u64;
    let r = ctx.r() as u64;
    let (construction_id, threshold, j) = match f.monomial_degree() {
        Some(d) if d < ctx.q() as u64 => {
            let profile = monomial_profile(d, ctx)?;
            let th = theorem1_emptiness_thresholds(&profile.digits, ctx.r());
            (ConstructionId::T1P3, th.s_part3, profile.j)
        }
        _ => match f {
            FieldFunction::Poly(poly) if poly.degree() >= 1 => {
                (ConstructionId::T3P3, poly.degree() as u64 * r + 1, 0)
            }
            _ => {
                return Err(Error::PreconditionViolated(
                    "expected a monomial or a nonconstant polynomial".into(),
                ))
            }
        },
    };
    let below_threshold = s < threshold;
    if below_threshold && !force {
        return Err(Error::PreconditionViolated(format!(
            "need s >= {threshold} for a guaranteed dependence, got {s}"
        )));
    }
    let p = ctx.p();
    let table: Vec<u32> = ctx.elements().map(|x| digit_sum_of(ctx, f, x)).collect();
    let vectors: Vec<Vec<u32>> = shifts
        .iter()
        .map(|&alpha| {
            let base = table[alpha.index() as usize];
            let t = ctx.translation(alpha);
            let mut row = vec![0u32; ctx.q() as usize];
            t.for_each(|x, y| row[x] = sub_mod(table[y as usize], base, p));
            row
        })
        .collect();
    let a = null_combination(&vectors, p)?;
    let attainable_sum = weighted_offset(ctx, f, shifts, &a);
    certify(
        ctx,
        Draft {
            f: f.clone(),
            shifts: shifts.to_vec(),
            a,
            attainable_sum,
            construction_id,
            frobenius_exponent: j,
            below_threshold,
        },
    )
}

/// Empty pattern for `f ∈ F_p[X]` of degree d with `q ≥ s ≥ d + 1`, shifts
/// `0, 1, …` in the prime subfield.
///
/// When at least `d + 1` prime-subfield shifts are available the relation
/// comes from the coefficients of `f(X + α) - f(α)`; otherwise (`p ≤ d`) it
/// is searched among the value tables of all `s` shifts.
pub fn empty_pattern_polynomial(ctx: &FieldContext, f: &DensePolynomial, s: usize) -> Result<CounterexampleCertificate> {
    let d = f.degree();
    if d < 1 {
        return Err(Error::PreconditionViolated("polynomial must be nonconstant".into()));
    }
    if !f.over_prime_field(ctx) {
        return Err(Error::PreconditionViolated("coefficients must lie in F_p".into()));
    }
    if (s as i64) < d + 1 {
        return Err(Error::PreconditionViolated(format!("need s >= {}, got {s}", d + 1)));
    }
    check_length(ctx, s)?;
    let p = ctx.p();
    let shifts = prime_first_shifts(ctx, s);
    let func = FieldFunction::Poly(f.clone());
    let weighted = s.min(p as usize);
    let a = if weighted as i64 > d {
        let vectors: Vec<Vec<u32>> = shifts[..weighted]
            .iter()
            .map(|&alpha| {
                f.taylor_shift(ctx, alpha).coeffs()[1..]
                    .iter()
                    .map(|c| c.index())
                    .chain(std::iter::repeat(0))
                    .take(d as usize)
                    .collect()
            })
            .collect();
        let mut a = null_combination(&vectors, p)?;
        a.resize(s, 0);
        a
    } else {
        let mut cert = empty_pattern_any_a(ctx, &func, &shifts, true)?;
        cert.construction_id = ConstructionId::T3P2;
        cert.below_threshold = false;
        return Ok(cert);
    };
    let attainable_sum = weighted_offset(ctx, &func, &shifts, &a);
    certify(
        ctx,
        Draft {
            f: func,
            shifts,
            a,
            attainable_sum,
            construction_id: ConstructionId::T3P2,
            frobenius_exponent: 0,
            below_threshold: false,
        },
    )
}

/// `δ^{-1}(g^p - g + c0)`.
pub fn artin_schreier_function(ctx: &FieldContext, g: &DensePolynomial, c0: FieldElement) -> Result<DensePolynomial> {
    let inner = g
        .frobenius_power(ctx)
        .sub(ctx, g)
        .add(ctx, &DensePolynomial::constant(c0));
    Ok(inner.scale(ctx, ctx.inv(ctx.delta())?))
}

/// `f = δ^{-1}(g^p - g + c0)` has `T(f(ξ)) = Tr(c0)` for every ξ, so any
/// target whose first entry differs from `Tr(c0)` is unattainable.
pub fn gcd_counterexample(
    ctx: &FieldContext,
    g: &DensePolynomial,
    c0: FieldElement,
    s: usize,
) -> Result<CounterexampleCertificate> {
    if g.degree() < 1 {
        return Err(Error::PreconditionViolated("g must be nonconstant".into()));
    }
    check_length(ctx, s)?;
    let f = artin_schreier_function(ctx, g, c0)?;
    let func = FieldFunction::Poly(f);
    let expected = ctx.trace(c0);
    if let Some(x) = ctx.elements().find(|&x| digit_sum_of(ctx, &func, x) != expected) {
        return Err(Error::VerificationFailed(format!(
            "digit sum at {} differs from Tr(c0) = {expected}",
            ctx.format_element(x)
        )));
    }
    let mut a = vec![0u32; s];
    a[0] = 1;
    certify(
        ctx,
        Draft {
            f: func,
            shifts: prime_first_shifts(ctx, s),
            a,
            attainable_sum: expected,
            construction_id: ConstructionId::GCD71,
            frobenius_exponent: 0,
            below_threshold: false,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn brute_count(ctx: &FieldContext, cert: &CounterexampleCertificate) -> usize {
        ctx.elements()
            .filter(|&x| {
                cert.spec.shifts.iter().zip(&cert.targets).all(|(&a, &c)| {
                    let digits = ctx.digits_of(cert.f.eval(ctx, ctx.add(x, a)));
                    digits.iter().sum::<u32>() % ctx.p() == c
                })
            })
            .count()
    }

    #[test]
    fn null_combination_examples() {
        let a = null_combination(&[vec![1, 0], vec![0, 1], vec![1, 1]], 2).unwrap();
        assert_eq!(a, vec![1, 1, 1]);
        let a = null_combination(&[vec![2, 1, 3], vec![2, 1, 3]], 5).unwrap();
        assert_eq!(a, vec![1, 4]);
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(null_combination(&id, 3), Err(Error::NoDependence));
    }

    #[test]
    fn null_combination_matches_rref_route() {
        let vectors = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 1, 2], vec![2, 2, 2, 2], vec![1, 1, 1, 1]];
        let p = 3;
        let m: Vec<Vec<u32>> = (0..4).map(|k| vectors.iter().map(|v| v[k]).collect()).collect();
        let expect = crate::linalg::null_vector(&m, vectors.len(), p).unwrap();
        assert_eq!(null_combination(&vectors, p).unwrap(), expect);
    }

    #[test]
    fn monomial_examples() {
        let ctx = build_field(3, 2, None, None).unwrap();
        let cert = empty_pattern_monomial(&ctx, 2, 3).unwrap();
        assert_eq!(cert.a_vector, vec![1, 1, 1]);
        assert_eq!(cert.shifts, vec!["[0,0]", "[1,0]", "[2,0]"]);
        assert_eq!(brute_count(&ctx, &cert), 0);
        let tsum = (0..3)
            .map(|a| thue_morse_fast(&ctx, ctx.from_prime(a * a)))
            .sum::<u32>()
            % 3;
        assert_eq!(cert.attainable_sum, tsum);
        assert_ne!(cert.targets.iter().sum::<u32>() % 3, tsum);

        for (p, r) in [(2, 3), (3, 2), (5, 1)] {
            let ctx = build_field(p, r, None, None).unwrap();
            let cert = empty_pattern_monomial(&ctx, 1, 2).unwrap();
            assert_eq!(cert.a_vector, vec![1, ctx.p() - 1]);
            assert_eq!(brute_count(&ctx, &cert), 0);
        }
    }

    #[test]
    fn monomial_preconditions() {
        let ctx = build_field(2, 3, None, None).unwrap();
        assert!(matches!(empty_pattern_monomial(&ctx, 3, 4), Err(Error::PreconditionViolated(_))));
        let ctx = build_field(3, 2, None, None).unwrap();
        assert!(matches!(empty_pattern_monomial(&ctx, 2, 2), Err(Error::PreconditionViolated(_))));
        // X^6 = (X^2)^3 on F_9 reduces to the degree-2 case
        let cert = empty_pattern_monomial(&ctx, 6, 4).unwrap();
        assert_eq!(cert.frobenius_exponent, 1);
        assert_eq!(cert.a_vector[3], 0);
        assert_eq!(brute_count(&ctx, &cert), 0);
    }

    #[test]
    fn any_a_examples() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let f = FieldFunction::Poly(DensePolynomial::x_pow(1));
        let shifts: Vec<FieldElement> = [1, 2, 3].map(FieldElement::from_index).to_vec();
        let cert = empty_pattern_any_a(&ctx, &f, &shifts, false).unwrap();
        assert_eq!(cert.construction_id, ConstructionId::T1P3);
        assert_eq!(brute_count(&ctx, &cert), 0);

        let ctx = build_field(3, 1, None, None).unwrap();
        let f = FieldFunction::Poly(DensePolynomial::x_pow(2));
        let shifts: Vec<FieldElement> = (0..3).map(FieldElement::from_index).collect();
        let cert = empty_pattern_any_a(&ctx, &f, &shifts, false).unwrap();
        assert_eq!(brute_count(&ctx, &cert), 0);
    }

    #[test]
    fn any_a_below_threshold() {
        let ctx = build_field(2, 3, None, None).unwrap();
        let f = FieldFunction::Poly(DensePolynomial::x_pow(3));
        let shifts: Vec<FieldElement> = [0, 5].map(FieldElement::from_index).to_vec();
        assert!(matches!(
            empty_pattern_any_a(&ctx, &f, &shifts, false),
            Err(Error::PreconditionViolated(_))
        ));
        match empty_pattern_any_a(&ctx, &f, &shifts, true) {
            Ok(cert) => {
                assert!(cert.below_threshold);
                assert_eq!(brute_count(&ctx, &cert), 0);
            }
            Err(e) => assert_eq!(e, Error::NoDependence),
        }
    }

    #[test]
    fn polynomial_examples() {
        let ctx = build_field(3, 2, None, None).unwrap();
        let f = parse_polynomial(&ctx, "X^2+X").unwrap();
        let cert = empty_pattern_polynomial(&ctx, &f, 3).unwrap();
        assert_eq!(brute_count(&ctx, &cert), 0);
        assert!(matches!(
            empty_pattern_polynomial(&ctx, &parse_polynomial(&ctx, "X^2").unwrap(), 2),
            Err(Error::PreconditionViolated(_))
        ));

        let ctx = build_field(2, 2, None, None).unwrap();
        let f = parse_polynomial(&ctx, "X").unwrap();
        let cert = empty_pattern_polynomial(&ctx, &f, 2).unwrap();
        assert_eq!(cert.a_vector, vec![1, 1]);
        assert_eq!(brute_count(&ctx, &cert), 0);

        // degree above p: falls back to value tables
        let f = parse_polynomial(&ctx, "X^3+X").unwrap();
        let cert = empty_pattern_polynomial(&ctx, &f, 4).unwrap();
        assert_eq!(cert.construction_id, ConstructionId::T3P2);
        assert_eq!(brute_count(&ctx, &cert), 0);

        let omega = parse_polynomial(&ctx, "[0,1]*X").unwrap();
        assert!(empty_pattern_polynomial(&ctx, &omega, 2).is_err());
    }

    #[test]
    fn gcd_examples() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let x = DensePolynomial::x_pow(1);
        let omega = FieldElement::from_index(2);
        assert_eq!(ctx.trace(omega), 1);
        let cert = gcd_counterexample(&ctx, &x, omega, 1).unwrap();
        assert_eq!(cert.targets, vec![0]);
        assert_eq!(cert.attainable_sum, 1);
        let f = artin_schreier_function(&ctx, &x, omega).unwrap();
        assert_eq!(f.degree(), 2);

        let cert = gcd_counterexample(&ctx, &x, FieldElement::ZERO, 2).unwrap();
        assert_eq!(cert.attainable_sum, 0);
        assert_eq!(cert.targets, vec![1, 0]);

        let ctx = build_field(3, 2, None, None).unwrap();
        let cert = gcd_counterexample(&ctx, &x, FieldElement::ONE, 1).unwrap();
        assert_eq!(cert.attainable_sum, 2);
        assert_eq!(cert.targets, vec![0]);
        assert_eq!(brute_count(&ctx, &cert), 0);
    }

    #[test]
    fn certificate_json_fields() {
        let ctx = build_field(3, 2, None, None).unwrap();
        let cert = empty_pattern_monomial(&ctx, 2, 3).unwrap();
        let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
        for key in ["field", "function", "construction_id", "shifts", "targets", "a_vector", "attainable_sum", "verified"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["construction_id"], "T1P2");
    }

    proptest! {
        #[test]
        fn null_combination_is_a_relation(
            p_i in 0usize..3,
            raw in proptest::collection::vec(proptest::collection::vec(0u32..100, 3), 4..7),
        ) {
            let p = [2u32, 3, 5][p_i];
            let a = null_combination(&raw, p).unwrap();
            prop_assert!(a.iter().any(|&x| x != 0));
            prop_assert_eq!(*a.iter().find(|&&x| x != 0).unwrap(), 1);
            for k in 0..3 {
                let sum: u32 = raw.iter().zip(&a).map(|(v, &ai)| v[k] % p * ai).sum();
                prop_assert_eq!(sum % p, 0);
            }
        }
    }
}
