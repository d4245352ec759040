//! Deviation bounds for pattern counts and exact pass/fail evaluation.
//!
//! Every bound has the shape `a·√q + b` with integers `a, b ≥ 0`, so the
//! comparison `| |T(c,A,f)| - p^{r-s} | ≤ a√q + b` can be decided in integer
//! arithmetic by squaring. Floats only appear in the rendered report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::binomials::monomial_profile;
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::pattern::{count_pattern, is_degenerate, PatternSpec};
use crate::poly::FieldFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// Single target, arbitrary polynomial not of Artin–Schreier form.
    DarSar,
    /// Monomials `X^d`.
    T1,
    /// Negative powers `X^{-d}`.
    T2,
    /// Arbitrary polynomials with `gcd(d, q) = 1`.
    T3,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::DarSar => "DarSar",
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
        })
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "0" | "darsar" | "ds" => Ok(TheoremId::DarSar),
            "1" | "t1" => Ok(TheoremId::T1),
            "2" | "t2" => Ok(TheoremId::T2),
            "3" | "t3" => Ok(TheoremId::T3),
            _ => Err(Error::Parse(format!("unknown theorem {s:?}"))),
        }
    }
}

/// `sqrt_q_coeff · √q + constant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub sqrt_q_coeff: u64,
    pub constant: u64,
}

impl Bound {
    pub fn value(&self, q: u64) -> f64 {
        self.sqrt_q_coeff as f64 * (q as f64).sqrt() + self.constant as f64
    }

    /// Exactly decides `|count - p^{r-s}| ≤ a√q + b`.
    pub fn admits(&self, count: u64, p: u32, r: u32, s: usize) -> bool {
        let a = self.sqrt_q_coeff as u128;
        let b = self.constant as u128;
        let q = (p as u128).pow(r);
        let e = s as i64 - r as i64;
        if e <= 0 {
            let main = (p as u128).pow((-e) as u32);
            let dev = (count as u128).abs_diff(main);
            if dev <= b {
                return true;
            }
            let x = dev - b;
            return x * x <= a * a * q;
        }
        // main term is 1/p^e with 0 < 1/p^e < 1
        if count == 0 {
            return a > 0 || b > 0;
        }
        let n = count as u128;
        if n <= b {
            return true;
        }
        let x = n - b;
        if x * x <= a * a * q {
            return true;
        }
        if a * a * q < (x - 1) * (x - 1) {
            return false;
        }
        // (x - p^{-e})² ≤ a² q  ⟺  (x·P - 1)² ≤ a² q P², P = p^e
        let big_p = BigUint::from(p).pow(e as u32);
        let lhs = BigUint::from(x) * &big_p - 1u32;
        let rhs = BigUint::from(a) * &big_p;
        &lhs * &lhs <= &rhs * &rhs * BigUint::from(q)
    }

    /// The counts in `[0, q]` that [`Bound::admits`] accepts, as one
    /// interval (the deviation is convex in the count), or `None` if empty.
    pub fn admitted_counts(&self, p: u32, r: u32, s: usize) -> Option<(u64, u64)> {
        let q = (p as u64).pow(r);
        let admits = |n: u64| self.admits(n, p, r, s);
        let floor = if s <= r as usize { (p as u64).pow(r - s as u32) } else { 0 };
        let centre = [floor, floor + 1].into_iter().find(|&n| n <= q && admits(n))?;
        // first admitted count in [0, centre]
        let (mut lo, mut hi) = (0, centre);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if admits(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let first = lo;
        // last admitted count in [centre, q]
        let (mut lo, mut hi) = (centre, q);
        while lo < hi {
            let mid = hi - (hi - lo) / 2;
            if admits(mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Some((first, lo))
    }
}

pub fn main_term(p: u32, r: u32, s: usize) -> f64 {
    (p as f64).powi(r as i32 - s as i32)
}

pub fn deviation(count: u64, p: u32, r: u32, s: usize) -> f64 {
    (count as f64 - main_term(p, r, s)).abs()
}

/// Theorem hypotheses and bound for one `(f, s)`, independent of A and c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSetup {
    pub theorem: TheoremId,
    pub s: usize,
    pub applicable: bool,
    pub bound: Bound,
    pub function: String,
}

pub fn bound_setup(ctx: &FieldContext, theorem: TheoremId, f: &FieldFunction, s: usize) -> Result<BoundSetup> {
    let q = ctx.q() as u64;
    let p = ctx.p() as u64;
    let mismatch = |reason: &str| Error::ShapeMismatch {
        theorem: theorem.to_string(),
        reason: reason.to_string(),
    };
    let (applicable, bound) = match theorem {
        TheoremId::T1 => {
            let d = f
                .monomial_degree()
                .filter(|&d| d < q)
                .ok_or_else(|| mismatch("expected X^d with 1 <= d < q"))?;
            let profile = monomial_profile(d, ctx)?;
            let bound = Bound {
                sqrt_q_coeff: profile.reduced() - 1,
                constant: 0,
            };
            (s as u64 <= profile.s_max, bound)
        }
        TheoremId::T2 => {
            let d = match f {
                FieldFunction::Rational(m) if m.exponent() < 0 => m.exponent().unsigned_abs(),
                _ => match f.monomial_degree() {
                    Some(m) if m <= q.saturating_sub(2) => q - 1 - m,
                    _ => return Err(mismatch("expected X^-d or X^(q-1-d)")),
                },
            };
            let profile = monomial_profile(d, ctx)?;
            let bound = Bound {
                sqrt_q_coeff: (profile.reduced() + 1) * s as u64 - 2,
                constant: s as u64 + 1,
            };
            (true, bound)
        }
        TheoremId::T3 => {
            let FieldFunction::Poly(poly) = f else {
                return Err(mismatch("expected a polynomial"));
            };
            let d = poly.degree();
            if d < 1 || d as u64 >= q {
                return Err(mismatch("expected 1 <= deg f < q"));
            }
            let d = d as u64;
            let applicable = !d.is_multiple_of(p) && s as u64 <= d % p;
            (
                applicable,
                Bound {
                    sqrt_q_coeff: d - 1,
                    constant: 0,
                },
            )
        }
        TheoremId::DarSar => {
            if s != 1 {
                return Err(mismatch("single-target bound needs s = 1"));
            }
            let FieldFunction::Poly(poly) = f else {
                return Err(mismatch("expected a polynomial"));
            };
            let d = poly.degree();
            if d < 1 {
                return Err(mismatch("expected deg f >= 1"));
            }
            let applicable = !is_degenerate(ctx, &poly.scale(ctx, ctx.delta()));
            (
                applicable,
                Bound {
                    sqrt_q_coeff: d as u64 - 1,
                    constant: 0,
                },
            )
        }
    };
    Ok(BoundSetup {
        theorem,
        s,
        applicable,
        bound,
        function: f.describe(ctx),
    })
}

impl BoundSetup {
    /// Whether `count` satisfies the bound; `None` when the theorem does not apply.
    pub fn check(&self, ctx: &FieldContext, count: u64) -> Option<bool> {
        self.applicable
            .then(|| self.bound.admits(count, ctx.p(), ctx.r(), self.s))
    }

    pub fn report(&self, ctx: &FieldContext, spec: &PatternSpec, count: u64) -> BoundCheckReport {
        let desc = ctx.descriptor();
        BoundCheckReport {
            p: desc.p,
            r: desc.r,
            q: desc.q,
            modulus: desc.modulus,
            basis: desc.basis,
            function: self.function.clone(),
            theorem_id: self.theorem,
            shifts: spec.shifts.iter().map(|&a| ctx.format_element(a)).collect(),
            targets: spec.targets.clone(),
            count,
            main_term: main_term(ctx.p(), ctx.r(), self.s),
            deviation: deviation(count, ctx.p(), ctx.r(), self.s),
            bound: self.bound.value(ctx.q() as u64),
            applicable: self.applicable,
            pass: self.check(ctx, count),
            seed: None,
        }
    }
}

/// Outcome of one bound check, with everything needed to rerun it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheckReport {
    pub p: u32,
    pub r: u32,
    pub q: u64,
    pub modulus: String,
    pub basis: Vec<Vec<u32>>,
    pub function: String,
    pub theorem_id: TheoremId,
    pub shifts: Vec<String>,
    pub targets: Vec<u32>,
    pub count: u64,
    pub main_term: f64,
    pub deviation: f64,
    pub bound: f64,
    pub applicable: bool,
    pub pass: Option<bool>,
    pub seed: Option<u64>,
}

impl BoundCheckReport {
    pub fn is_violation(&self) -> bool {
        self.pass == Some(false)
    }
}

/// Counts the pattern by brute force and checks it against `theorem`.
pub fn bound_report(
    ctx: &FieldContext,
    theorem: TheoremId,
    f: &FieldFunction,
    spec: &PatternSpec,
) -> Result<BoundCheckReport> {
    spec.validate(ctx)?;
    let setup = bound_setup(ctx, theorem, f, spec.s())?;
    let count = count_pattern(ctx, f, spec)?;
    Ok(setup.report(ctx, spec, count))
}

/// Which theorems have a shape matching `f` for patterns of length `s`.
pub fn matching_theorems(ctx: &FieldContext, f: &FieldFunction, s: usize) -> Vec<TheoremId> {
    [TheoremId::DarSar, TheoremId::T1, TheoremId::T2, TheoremId::T3]
        .into_iter()
        .filter(|&t| bound_setup(ctx, t, f, s).is_ok())
        .collect()
}
