//! Polynomials over GF(p^r) and the negative-power monomials `X^{-d}`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// Dense polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensePolynomial {
    coeffs: Vec<FieldElement>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        DensePolynomial::default()
    }

    pub fn constant(c: FieldElement) -> Self {
        DensePolynomial::new(vec![c])
    }

    /// `c · X^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        DensePolynomial::new(coeffs)
    }

    /// `X^k`.
    pub fn x_pow(k: usize) -> Self {
        DensePolynomial::monomial(FieldElement::ONE, k)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Degree, with `deg(0) = -1`.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// `Some(d)` when the polynomial is exactly `X^d`.
    pub fn as_monic_monomial(&self) -> Option<u64> {
        let (last, rest) = self.coeffs.split_last()?;
        (*last == FieldElement::ONE && rest.iter().all(|c| c.is_zero()))
            .then_some(rest.len() as u64)
    }

    /// True when every coefficient lies in the prime subfield.
    pub fn over_prime_field(&self, ctx: &FieldContext) -> bool {
        self.coeffs.iter().all(|c| c.index() < ctx.p())
    }

    pub fn eval(&self, ctx: &FieldContext, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    pub fn add(&self, ctx: &FieldContext, other: &DensePolynomial) -> DensePolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[FieldElement], i: usize| v.get(i).copied().unwrap_or_default();
        DensePolynomial::new(
            (0..n)
                .map(|i| ctx.add(get(&self.coeffs, i), get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn sub(&self, ctx: &FieldContext, other: &DensePolynomial) -> DensePolynomial {
        self.add(ctx, &other.scale(ctx, ctx.neg(FieldElement::ONE)))
    }

    pub fn scale(&self, ctx: &FieldContext, c: FieldElement) -> DensePolynomial {
        DensePolynomial::new(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, ctx: &FieldContext, other: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || other.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        DensePolynomial::new(out)
    }

    /// `f(X + α)` by Horner's rule on polynomials.
    pub fn taylor_shift(&self, ctx: &FieldContext, alpha: FieldElement) -> DensePolynomial {
        let mut acc: Vec<FieldElement> = Vec::with_capacity(self.coeffs.len());
        for &c in self.coeffs.iter().rev() {
            // acc · (X + α) + c
            let mut next = vec![FieldElement::ZERO; acc.len() + 1];
            for (k, &a) in acc.iter().enumerate() {
                next[k + 1] = ctx.add(next[k + 1], a);
                next[k] = ctx.add(next[k], ctx.mul(alpha, a));
            }
            next[0] = ctx.add(next[0], c);
            acc = next;
        }
        DensePolynomial::new(acc)
    }

    /// `g(X)^p`, which in characteristic p is `Σ g_k^p X^{kp}`.
    pub fn frobenius_power(&self, ctx: &FieldContext) -> DensePolynomial {
        let p = ctx.p() as usize;
        if self.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![FieldElement::ZERO; (self.coeffs.len() - 1) * p + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k * p] = ctx.frobenius(c);
        }
        DensePolynomial::new(out)
    }

    /// Renders in the `c*X^k+…` grammar accepted by [`parse_function`].
    pub fn format(&self, ctx: &FieldContext) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            let coef = if c.index() < ctx.p() {
                c.index().to_string()
            } else {
                ctx.format_element(c)
            };
            match (k, c == FieldElement::ONE) {
                (0, _) => out.push_str(&coef),
                (_, true) => {}
                (_, false) => {
                    let _ = write!(out, "{coef}*");
                }
            }
            match k {
                0 => {}
                1 => out.push('X'),
                _ => {
                    let _ = write!(out, "X^{k}");
                }
            }
        }
        out
    }
}

/// `X^e` evaluated on F_q; a negative exponent means `ξ ↦ ξ^{-|e|}` with
/// `0 ↦ 0`, which agrees with `X^{q-1+e}` everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalMonomial {
    exponent: i64,
}

impl RationalMonomial {
    pub fn new(exponent: i64, q: u32) -> Result<Self> {
        if exponent == 0 || exponent.unsigned_abs() >= q as u64 {
            return Err(Error::Parse(format!(
                "monomial exponent {exponent} must satisfy 0 < |e| < {q}"
            )));
        }
        Ok(RationalMonomial { exponent })
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn eval(&self, ctx: &FieldContext, x: FieldElement) -> FieldElement {
        if self.exponent > 0 {
            return ctx.pow(x, self.exponent as u64);
        }
        match ctx.inv(x) {
            Ok(inv) => ctx.pow(inv, self.exponent.unsigned_abs()),
            Err(_) => FieldElement::ZERO,
        }
    }
}

/// Anything the pattern machinery can evaluate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldFunction {
    Poly(DensePolynomial),
    Rational(RationalMonomial),
}

impl FieldFunction {
    pub fn eval(&self, ctx: &FieldContext, x: FieldElement) -> FieldElement {
        match self {
            FieldFunction::Poly(f) => f.eval(ctx, x),
            FieldFunction::Rational(m) => m.eval(ctx, x),
        }
    }

    /// `Some(d)` for `X^d` written either way with a positive exponent.
    pub fn monomial_degree(&self) -> Option<u64> {
        match self {
            FieldFunction::Poly(f) => f.as_monic_monomial().filter(|&d| d > 0),
            FieldFunction::Rational(m) => (m.exponent > 0).then_some(m.exponent as u64),
        }
    }

    pub fn describe(&self, ctx: &FieldContext) -> String {
        match self {
            FieldFunction::Poly(f) => f.format(ctx),
            FieldFunction::Rational(m) => format!("X^{}", m.exponent),
        }
    }
}

impl From<DensePolynomial> for FieldFunction {
    fn from(f: DensePolynomial) -> Self {
        FieldFunction::Poly(f)
    }
}

impl From<RationalMonomial> for FieldFunction {
    fn from(m: RationalMonomial) -> Self {
        FieldFunction::Rational(m)
    }
}

/// Parses `c*X^k + … ` terms. Coefficients are element text forms or bare
/// integers in `[0, p)`; `X^-k` (alone) selects a [`RationalMonomial`].
pub fn parse_function(ctx: &FieldContext, text: &str) -> Result<FieldFunction> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty function".into()));
    }
    let terms: Vec<&str> = compact.split('+').collect();
    let mut coeffs: Vec<FieldElement> = Vec::new();
    for term in &terms {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {text:?}")));
        }
        let (coef_text, mono) = match term.find(['X', 'x']) {
            None => (Some(*term), None),
            Some(pos) => {
                let coef = &term[..pos];
                let coef = match coef {
                    "" => None,
                    c => Some(c.strip_suffix('*').ok_or_else(|| {
                        Error::Parse(format!("expected '*' before X in {term:?}"))
                    })?),
                };
                (coef, Some(&term[pos + 1..]))
            }
        };
        let coef = match coef_text {
            Some(c) => ctx.parse_element(c)?,
            None => FieldElement::ONE,
        };
        let exponent: i64 = match mono {
            None => 0,
            Some("") => 1,
            Some(rest) => rest
                .strip_prefix('^')
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?,
        };
        if exponent < 0 {
            if terms.len() != 1 || coef != FieldElement::ONE {
                return Err(Error::Parse(
                    "negative exponents are only supported as a lone X^-k".into(),
                ));
            }
            return Ok(FieldFunction::Rational(RationalMonomial::new(exponent, ctx.q())?));
        }
        let k = exponent as usize;
        if k >= 1 << 24 {
            return Err(Error::Parse(format!("exponent {k} too large")));
        }
        if coeffs.len() <= k {
            coeffs.resize(k + 1, FieldElement::ZERO);
        }
        coeffs[k] = ctx.add(coeffs[k], coef);
    }
    Ok(FieldFunction::Poly(DensePolynomial::new(coeffs)))
}

/// Parses a polynomial; rejects `X^-k`.
pub fn parse_polynomial(ctx: &FieldContext, text: &str) -> Result<DensePolynomial> {
    match parse_function(ctx, text)? {
        FieldFunction::Poly(f) => Ok(f),
        FieldFunction::Rational(_) => Err(Error::Parse(format!("{text:?} is not a polynomial"))),
    }
}
