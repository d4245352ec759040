//! Digit functions on GF(p^r): the sum-of-digits (Thue–Morse) function and the
//! Rudin–Shapiro function, both taken with respect to the context's ordered
//! basis.

use serde::Serialize;

use crate::field::{FieldContext, FieldElement};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DigitFunctionKind {
    ThueMorse,
    RudinShapiro,
}

impl DigitFunctionKind {
    pub fn eval(self, ctx: &FieldContext, x: FieldElement) -> u32 {
        match self {
            DigitFunctionKind::ThueMorse => thue_morse_fast(ctx, x),
            DigitFunctionKind::RudinShapiro => rudin_shapiro(ctx, x),
        }
    }
}

/// `T(ξ)`: the sum of the B-digits of ξ modulo p.
///
/// In debug builds the result is cross-checked against `Tr(δξ)`.
pub fn thue_morse(ctx: &FieldContext, x: FieldElement) -> u32 {
    let p = ctx.p();
    let sum = ctx
        .digits_of(x)
        .into_iter()
        .fold(0, |acc, d| linalg::add_mod(acc, d, p));
    debug_assert_eq!(sum, ctx.trace(ctx.mul(ctx.delta(), x)));
    sum
}

/// `T(ξ)` through the dual-basis identity `T(ξ) = Tr(δξ)`, by table lookup.
#[inline]
pub fn thue_morse_fast(ctx: &FieldContext, x: FieldElement) -> u32 {
    ctx.digit_sum_fast(x)
}

/// `R(ξ) = Σ x_i x_{i+1}` over consecutive B-digits; 0 when `r = 1`.
pub fn rudin_shapiro(ctx: &FieldContext, x: FieldElement) -> u32 {
    let p = ctx.p();
    ctx.digits_of(x)
        .windows(2)
        .fold(0, |acc, w| linalg::add_mod(acc, linalg::mul_mod(w[0], w[1], p), p))
}
