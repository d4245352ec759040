//! Exact arithmetic in GF(p^r).
//!
//! Elements are stored as their enumeration index: the power-basis
//! coordinates `(a_0, …, a_{r-1})` of `a_0 + a_1 θ + … + a_{r-1} θ^{r-1}` read
//! as a base-`p` number with `a_0` least significant. Index 0 is zero, index 1
//! is one, and indices below `p` are exactly the prime subfield.
//!
//! Multiplication goes through discrete log tables built once per context.
//! Digits with respect to an arbitrary ordered basis are a view computed
//! through the inverse change-of-basis matrix; arithmetic never looks at it.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;

pub const DEFAULT_Q_CAP: u64 = 1 << 20;

/// An element of GF(p^r), identified by its enumeration index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Wraps a raw index. Callers are responsible for `index < q`; use
    /// [`FieldContext::element`] for a checked conversion.
    #[inline]
    pub const fn from_index(index: u32) -> Self {
        FieldElement(index)
    }
}

/// Prime, degree and defining polynomial of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldParams {
    pub p: u32,
    pub r: u32,
    /// Monic irreducible modulus, ascending coefficients, length `r + 1`.
    pub modulus: Vec<u32>,
}

impl FieldParams {
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.r)
    }
}

/// The ordered basis B together with its trace-dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedBasis {
    pub elements: Vec<FieldElement>,
    /// Maps power-basis coordinates to B-digits: `digits = change_matrix · coords`.
    pub change_matrix: Vec<Vec<u32>>,
    pub dual: Vec<FieldElement>,
    /// Sum of the dual basis.
    pub delta: FieldElement,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over Z_p (ascending coefficients).
fn zp_poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut rem = a.to_vec();
    while rem.len() > dm {
        let lead = rem.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = rem.len() - dm;
        for (k, &mk) in m[..dm].iter().enumerate() {
            let t = linalg::mul_mod(lead, mk, p);
            rem[shift + k] = linalg::sub_mod(rem[shift + k], t, p);
        }
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
    rem
}

/// True when `poly` (ascending, monic) is irreducible over Z_p. Checked by
/// trial division against every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    if poly.len() < 2 || *poly.last().expect("nonempty") != 1 || poly.iter().any(|&c| c >= p) {
        return false;
    }
    let deg = poly.len() - 1;
    for k in 1..=deg / 2 {
        let count = (p as u64).pow(k as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(k + 1);
            let mut rest = idx;
            for _ in 0..k {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if zp_poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `r`,
/// comparing ascending coefficient lists from the constant term up.
pub fn smallest_irreducible(p: u32, r: u32) -> Vec<u32> {
    let r = r as usize;
    let mut lower = vec![0u32; r];
    loop {
        let mut cand = lower.clone();
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
        // odometer with the constant term most significant
        let mut pos = r;
        loop {
            assert!(pos > 0, "an irreducible polynomial of every degree exists");
            pos -= 1;
            lower[pos] += 1;
            if lower[pos] < p {
                break;
            }
            lower[pos] = 0;
        }
    }
}

/// Renders an ascending Z_p coefficient list as `X^2+X+1`.
pub fn format_zp_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "X".to_string(),
            _ => format!("X^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Builder for a [`FieldContext`].
#[derive(Clone, Debug)]
pub struct FieldSpec {
    pub p: u64,
    pub r: u32,
    pub modulus: Option<Vec<u32>>,
    /// Rows are the basis elements in power-basis coordinates.
    pub basis: Option<Vec<Vec<u32>>>,
    pub q_cap: u64,
}

impl FieldSpec {
    pub fn new(p: u64, r: u32) -> Self {
        FieldSpec {
            p,
            r,
            modulus: None,
            basis: None,
            q_cap: DEFAULT_Q_CAP,
        }
    }

    pub fn modulus(mut self, modulus: Vec<u32>) -> Self {
        self.modulus = Some(modulus);
        self
    }

    pub fn basis(mut self, rows: Vec<Vec<u32>>) -> Self {
        self.basis = Some(rows);
        self
    }

    pub fn q_cap(mut self, cap: u64) -> Self {
        self.q_cap = cap;
        self
    }

    pub fn build(self) -> Result<FieldContext> {
        FieldContext::new(self)
    }
}

/// `build_field` with the default cap.
pub fn build_field(
    p: u64,
    r: u32,
    modulus: Option<Vec<u32>>,
    basis: Option<Vec<Vec<u32>>>,
) -> Result<FieldContext> {
    FieldSpec {
        p,
        r,
        modulus,
        basis,
        q_cap: DEFAULT_Q_CAP,
    }
    .build()
}

/// An immutable description of GF(p^r) with a chosen ordered basis.
#[derive(Clone, Debug)]
pub struct FieldContext {
    params: FieldParams,
    q: u32,
    pow_p: Vec<u32>,
    /// `exp[i] = g^i` for `i < 2(q-1)`, so products never need a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    trace_table: Vec<u32>,
    basis: OrderedBasis,
    /// `T(ξ)` for every element, filled once the basis is known.
    digit_sum_table: Vec<u32>,
}

impl FieldContext {
    fn new(spec: FieldSpec) -> Result<Self> {
        let FieldSpec {
            p,
            r,
            modulus,
            basis,
            q_cap,
        } = spec;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let too_large = Error::FieldTooLarge { p, r, cap: q_cap };
        let q = p.checked_pow(r).ok_or(too_large.clone())?;
        if q > q_cap || q > u32::MAX as u64 {
            return Err(too_large);
        }
        let p = p as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1 || !is_irreducible(&m, p) {
                    return Err(Error::NotIrreducible(format_zp_poly(&m)));
                }
                m
            }
            None => smallest_irreducible(p, r),
        };
        let pow_p = (0..=r).map(|k| p.pow(k)).collect();
        let mut ctx = FieldContext {
            params: FieldParams { p, r, modulus },
            q: q as u32,
            pow_p,
            exp: Vec::new(),
            log: Vec::new(),
            trace_table: Vec::new(),
            basis: OrderedBasis {
                elements: Vec::new(),
                change_matrix: Vec::new(),
                dual: Vec::new(),
                delta: FieldElement::ONE,
            },
            digit_sum_table: Vec::new(),
        };
        ctx.build_log_tables();
        ctx.build_trace_table();

        let rows = match basis {
            Some(rows) => {
                if rows.len() != r as usize || rows.iter().any(|row| row.len() != r as usize) {
                    return Err(Error::SingularBasis);
                }
                rows.into_iter()
                    .map(|row| row.into_iter().map(|x| x % p).collect())
                    .collect()
            }
            None => (0..r as usize)
                .map(|i| (0..r as usize).map(|k| u32::from(i == k)).collect())
                .collect::<Vec<Vec<u32>>>(),
        };
        let elements: Vec<FieldElement> = rows.iter().map(|row| ctx.from_coords(row)).collect();
        // coords = E^T · digits, so digits = (E^T)^{-1} · coords
        let change_matrix = linalg::inverse(&linalg::transpose(&rows), p)?;
        let (dual, delta) = dual_basis(&ctx, &elements)?;
        ctx.basis = OrderedBasis {
            elements,
            change_matrix,
            dual,
            delta,
        };
        ctx.build_digit_sum_table();
        Ok(ctx)
    }

    /// Schoolbook product of two coordinate vectors reduced by the modulus.
    fn mul_coords(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.params.p;
        let r = self.params.r as usize;
        let mut prod = vec![0u32; 2 * r - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = linalg::add_mod(prod[i + j], linalg::mul_mod(x, y, p), p);
            }
        }
        let mut rem = zp_poly_rem(&prod, &self.params.modulus, p);
        rem.resize(r, 0);
        rem
    }

    fn reference_pow(&self, base: &[u32], mut e: u64) -> Vec<u32> {
        let r = self.params.r as usize;
        let mut acc = vec![0u32; r];
        acc[0] = 1;
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_coords(&acc, &b);
            }
            b = self.mul_coords(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn build_log_tables(&mut self) {
        let q = self.q as u64;
        let order = q - 1;
        let factors = prime_factors(order);
        let one = self.coords(FieldElement::ONE);
        let is_generator = |g: &[u32]| factors.iter().all(|&l| self.reference_pow(g, order / l) != one);
        // θ first, it is often primitive and keeps the table build cheap
        let theta = if self.params.r >= 2 { Some(self.params.p) } else { None };
        let generator = theta
            .into_iter()
            .chain(1..self.q)
            .map(|i| self.coords(FieldElement(i)))
            .find(|g| is_generator(g))
            .expect("the multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = one;
        for i in 0..order as u32 {
            let idx = self.from_coords(&cur).0;
            exp.push(idx);
            log[idx as usize] = i;
            cur = self.mul_coords(&cur, &generator);
        }
        let copy = exp.clone();
        exp.extend(copy);
        self.exp = exp;
        self.log = log;
    }

    fn build_trace_table(&mut self) {
        let p = self.params.p;
        let r = self.params.r;
        // Tr(θ^k) through the Frobenius sum, then extend linearly.
        let weights: Vec<u32> = (0..r)
            .map(|k| self.trace(FieldElement(self.pow_p[k as usize])))
            .collect();
        self.trace_table = self.linear_form_table(&weights, p);
    }

    fn build_digit_sum_table(&mut self) {
        let p = self.params.p;
        let delta = self.basis.delta;
        let weights: Vec<u32> = (0..self.params.r)
            .map(|k| self.trace_table[self.mul(delta, FieldElement(self.pow_p[k as usize])).0 as usize])
            .collect();
        self.digit_sum_table = self.linear_form_table(&weights, p);
    }

    /// Table of `x ↦ Σ coords_k(x) · weights[k] mod p` over the whole field.
    fn linear_form_table(&self, weights: &[u32], p: u32) -> Vec<u32> {
        let mut table = vec![0u32; self.q as usize];
        let mut block = 1usize;
        for &w in weights {
            for digit in 1..p as usize {
                let add = linalg::mul_mod(digit as u32, w, p);
                for i in 0..block {
                    table[digit * block + i] = linalg::add_mod(table[i], add, p);
                }
            }
            block *= p as usize;
        }
        table
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.params.p
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.params.r
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.params.modulus
    }

    pub fn basis(&self) -> &OrderedBasis {
        &self.basis
    }

    pub fn delta(&self) -> FieldElement {
        self.basis.delta
    }

    /// `p^k` for `k ≤ r`.
    pub fn p_pow(&self, k: u32) -> u32 {
        self.pow_p[k as usize]
    }

    /// Checked conversion from an enumeration index.
    pub fn element(&self, index: u32) -> Option<FieldElement> {
        (index < self.q).then_some(FieldElement(index))
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    /// Embeds `c mod p` into the prime subfield.
    pub fn from_prime(&self, c: u32) -> FieldElement {
        FieldElement(c % self.params.p)
    }

    pub fn coords(&self, x: FieldElement) -> Vec<u32> {
        let p = self.params.p;
        let mut rest = x.0;
        (0..self.params.r)
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> FieldElement {
        debug_assert_eq!(coords.len(), self.params.r as usize);
        let p = self.params.p;
        FieldElement(coords.iter().rev().fold(0u32, |acc, &c| acc * p + c % p))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.params.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut a, mut b) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while a != 0 || b != 0 {
            let s = a % p + b % p;
            out += if s >= p { s - p } else { s } * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.params.p;
        if p == 2 {
            return a;
        }
        let mut a = a.0;
        let mut out = 0;
        let mut place = 1;
        while a != 0 {
            out += linalg::neg_mod(a % p, p) * place;
            a /= p;
            place *= p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// `c · x` for a prime-field scalar `c`.
    pub fn scale(&self, c: u32, x: FieldElement) -> FieldElement {
        self.mul(self.from_prime(c), x)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(FieldElement(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; `x^0 = 1` for every `x`, including zero.
    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, x: FieldElement) -> FieldElement {
        self.pow(x, self.params.p as u64)
    }

    /// Absolute trace as the Frobenius sum `ξ + ξ^p + … + ξ^{p^{r-1}}`.
    pub fn trace(&self, x: FieldElement) -> u32 {
        let mut acc = FieldElement::ZERO;
        let mut conj = x;
        for _ in 0..self.params.r {
            acc = self.add(acc, conj);
            conj = self.frobenius(conj);
        }
        assert!(acc.0 < self.params.p, "trace left the prime subfield");
        acc.0
    }

    /// Trace by table lookup.
    #[inline]
    pub fn trace_fast(&self, x: FieldElement) -> u32 {
        self.trace_table[x.0 as usize]
    }

    /// Digit sum `T(ξ)` by table lookup; the table is built from `Tr(δ θ^k)`.
    #[inline]
    pub fn digit_sum_fast(&self, x: FieldElement) -> u32 {
        self.digit_sum_table[x.0 as usize]
    }

    /// B-digits `(x_1, …, x_r)` with `ξ = Σ x_j β_j`.
    pub fn digits_of(&self, x: FieldElement) -> Vec<u32> {
        linalg::mat_vec(&self.basis.change_matrix, &self.coords(x), self.params.p)
    }

    /// `Σ x_j β_j`.
    pub fn from_digits(&self, digits: &[u32]) -> FieldElement {
        digits
            .iter()
            .zip(&self.basis.elements)
            .fold(FieldElement::ZERO, |acc, (&d, &b)| self.add(acc, self.scale(d, b)))
    }

    /// Text form `[x1,…,xr]` of the B-digits.
    pub fn format_element(&self, x: FieldElement) -> String {
        let digits = self.digits_of(x);
        let parts: Vec<String> = digits.iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parses `[x1,…,xr]` (B-digits) or a bare integer in `[0, p)`.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let t = text.trim();
        let p = self.params.p;
        if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let digits = inner
                .split(',')
                .map(|d| {
                    let v: u32 = d
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad digit {d:?} in {t:?}")))?;
                    if v >= p {
                        return Err(Error::Parse(format!("digit {v} not in [0,{p})")));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<u32>>>()?;
            if digits.len() != self.params.r as usize {
                return Err(Error::Parse(format!(
                    "element {t:?} has {} digits, expected {}",
                    digits.len(),
                    self.params.r
                )));
            }
            return Ok(self.from_digits(&digits));
        }
        let v: u32 = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad field element {t:?}")))?;
        if v >= p {
            return Err(Error::Parse(format!("prime-field element {v} not in [0,{p})")));
        }
        Ok(FieldElement(v))
    }

    /// Precomputed translation `ξ ↦ ξ + α` in split form, for whole-field sweeps.
    pub fn translation(&self, alpha: FieldElement) -> Translation {
        let r = self.params.r;
        let low_digits = r.div_ceil(2);
        let lo_size = self.pow_p[low_digits as usize];
        let hi_size = self.q / lo_size;
        let (a_lo, a_hi) = (alpha.0 % lo_size, alpha.0 / lo_size);
        let lo = (0..lo_size)
            .map(|x| self.add(FieldElement(x), FieldElement(a_lo)).0)
            .collect();
        let hi = (0..hi_size)
            .map(|x| self.add(FieldElement(x), FieldElement(a_hi)).0 * lo_size)
            .collect();
        Translation { lo, hi, lo_size }
    }

    /// Short human-readable description used in reports.
    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.params.p,
            r: self.params.r,
            q: self.q as u64,
            modulus: format_zp_poly(&self.params.modulus),
            basis: self
                .basis
                .elements
                .iter()
                .map(|&b| self.coords(b))
                .collect(),
        }
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {}",
            self.params.p,
            self.params.r,
            format_zp_poly(&self.params.modulus)
        )
    }
}

/// Enough of a context to rebuild it: prime, degree, modulus and basis rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub r: u32,
    pub q: u64,
    pub modulus: String,
    /// Basis elements as power-basis coordinate rows.
    pub basis: Vec<Vec<u32>>,
}

/// `ξ ↦ ξ + α` split into a low-digit and a high-digit table, so that
/// `ξ + α = hi[ξ / lo_size] + lo[ξ % lo_size]` (no carries cross digits).
#[derive(Clone, Debug)]
pub struct Translation {
    lo: Vec<u32>,
    hi: Vec<u32>,
    lo_size: u32,
}

impl Translation {
    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.hi[(x / self.lo_size) as usize] + self.lo[(x % self.lo_size) as usize]
    }

    /// Calls `f(ξ, ξ + α)` for every ξ in enumeration order.
    #[inline]
    pub fn for_each(&self, mut f: impl FnMut(usize, u32)) {
        let mut x = 0usize;
        for &base in &self.hi {
            for &l in &self.lo {
                f(x, base + l);
                x += 1;
            }
        }
    }
}

/// Solves `Tr(δ_i β_j) = [i = j]` by Gaussian elimination on the trace form and
/// returns the dual basis and `δ = Σ δ_i`, after checking all `r²` conditions.
pub fn dual_basis(
    ctx: &FieldContext,
    elements: &[FieldElement],
) -> Result<(Vec<FieldElement>, FieldElement)> {
    let r = ctx.r() as usize;
    let p = ctx.p();
    if elements.len() != r {
        return Err(Error::SingularBasis);
    }
    // gram[k][j] = Tr(θ^k β_j); the dual coordinates Y satisfy Y · gram = I.
    let gram: Vec<Vec<u32>> = (0..r)
        .map(|k| {
            let theta_k = FieldElement(ctx.p_pow(k as u32));
            elements
                .iter()
                .map(|&b| ctx.trace(ctx.mul(theta_k, b)))
                .collect()
        })
        .collect();
    let y = linalg::inverse(&gram, p)?;
    let dual: Vec<FieldElement> = y.iter().map(|row| ctx.from_coords(row)).collect();
    for (i, &d) in dual.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            if ctx.trace(ctx.mul(d, b)) != u32::from(i == j) {
                return Err(Error::SingularBasis);
            }
        }
    }
    let delta = dual
        .iter()
        .fold(FieldElement::ZERO, |acc, &d| ctx.add(acc, d));
    assert!(!delta.is_zero(), "dual basis sums to zero");
    Ok((dual, delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldContext {
        build_field(2, 2, None, None).unwrap()
    }

    // ω = θ has index 2 in F_4
    const OMEGA: FieldElement = FieldElement(2);

    #[test]
    fn default_modulus_f4() {
        let ctx = f4();
        assert_eq!(ctx.modulus(), &[1, 1, 1]);
        assert_eq!(ctx.q(), 4);
    }

    #[test]
    fn default_modulus_enumeration_oracle() {
        // Brute force: test each candidate by checking it has no root and no
        // quadratic factor via full product enumeration.
        for (p, r) in [(2u32, 3u32), (3, 2), (3, 3), (5, 2), (2, 4)] {
            let got = smallest_irreducible(p, r);
            let mut expected = None;
            'outer: for idx in 0..(p as u64).pow(r) {
                // ascending list with constant term most significant
                let mut lower = vec![0u32; r as usize];
                let mut rest = idx;
                for pos in (0..r as usize).rev() {
                    lower[pos] = (rest % p as u64) as u32;
                    rest /= p as u64;
                }
                let mut cand = lower.clone();
                cand.push(1);
                // reducible iff it is a product of two monic polys of lower degree
                for da in 1..r as usize {
                    let db = r as usize - da;
                    for ia in 0..(p as u64).pow(da as u32) {
                        for ib in 0..(p as u64).pow(db as u32) {
                            let mk = |mut i: u64, d: usize| {
                                let mut v: Vec<u32> = (0..d)
                                    .map(|_| {
                                        let c = (i % p as u64) as u32;
                                        i /= p as u64;
                                        c
                                    })
                                    .collect();
                                v.push(1);
                                v
                            };
                            let a = mk(ia, da);
                            let b = mk(ib, db);
                            let mut prod = vec![0u32; r as usize + 1];
                            for (i, &x) in a.iter().enumerate() {
                                for (j, &y) in b.iter().enumerate() {
                                    prod[i + j] = (prod[i + j] + x * y) % p;
                                }
                            }
                            if prod == cand {
                                continue 'outer;
                            }
                        }
                    }
                }
                expected = Some(cand);
                break;
            }
            assert_eq!(Some(got), expected, "p={p} r={r}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_field(4, 1, None, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            build_field(2, 2, Some(vec![1, 0, 1]), None),
            Err(Error::NotIrreducible(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 21).build(),
            Err(Error::FieldTooLarge { .. })
        ));
        assert_eq!(
            build_field(2, 2, None, Some(vec![vec![1, 1], vec![1, 1]])).unwrap_err(),
            Error::SingularBasis
        );
        assert_eq!(build_field(3, 0, None, None).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn f4_arithmetic() {
        let ctx = f4();
        let omega_plus_one = FieldElement(3);
        assert_eq!(ctx.mul(OMEGA, OMEGA), omega_plus_one);
        assert_eq!(ctx.pow(OMEGA, 3), FieldElement::ONE);
        assert_eq!(ctx.pow(FieldElement::ZERO, 0), FieldElement::ONE);
        assert_eq!(ctx.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
        for a in ctx.elements() {
            assert_eq!(ctx.add(a, FieldElement::ZERO), a);
        }
    }

    #[test]
    fn table_mul_matches_schoolbook() {
        for (p, r) in [(2, 5), (3, 3), (5, 2), (7, 1), (2, 1), (3, 1)] {
            let ctx = build_field(p, r, None, None).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    let expect = ctx.from_coords(&ctx.mul_coords(&ctx.coords(a), &ctx.coords(b)));
                    assert_eq!(ctx.mul(a, b), expect);
                }
                if !a.is_zero() {
                    assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElement::ONE);
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let ctx = f4();
        assert_eq!(ctx.trace(FieldElement::ZERO), 0);
        assert_eq!(ctx.trace(OMEGA), 1);
        let f9 = build_field(3, 2, Some(vec![1, 0, 1]), None).unwrap();
        assert_eq!(f9.trace(FieldElement::ONE), 2);
        for x in f9.elements() {
            assert_eq!(f9.trace(x), f9.trace_fast(x));
        }
    }

    #[test]
    fn digits_examples() {
        let ctx = f4();
        assert_eq!(ctx.digits_of(FieldElement(3)), vec![1, 1]);
        assert_eq!(ctx.digits_of(FieldElement::ZERO), vec![0, 0]);
        assert_eq!(ctx.digits_of(ctx.basis().elements[0]), vec![1, 0]);
        assert_eq!(ctx.format_element(OMEGA), "[0,1]");
        assert_eq!(ctx.parse_element("[1,1]").unwrap(), FieldElement(3));
        assert_eq!(ctx.parse_element("1").unwrap(), FieldElement::ONE);
        assert!(ctx.parse_element("2").is_err());
        assert!(ctx.parse_element("[1]").is_err());
    }

    #[test]
    fn dual_basis_f4_power_basis() {
        let ctx = f4();
        let b = ctx.basis();
        assert_eq!(b.dual, vec![FieldElement(3), FieldElement::ONE]);
        assert_eq!(b.delta, OMEGA);
        // brute-force search for each dual element
        for (i, &d) in b.dual.iter().enumerate() {
            let found: Vec<FieldElement> = ctx
                .elements()
                .filter(|&x| {
                    b.elements
                        .iter()
                        .enumerate()
                        .all(|(j, &bj)| ctx.trace(ctx.mul(x, bj)) == u32::from(i == j))
                })
                .collect();
            assert_eq!(found, vec![d]);
        }
    }

    #[test]
    fn prime_field_dual_is_one() {
        let ctx = build_field(3, 1, None, None).unwrap();
        assert_eq!(ctx.basis().dual, vec![FieldElement::ONE]);
        assert_eq!(ctx.delta(), FieldElement::ONE);
    }

    #[test]
    fn dual_basis_omega_omega_squared() {
        // basis (ω, ω²) = (ω, ω+1) in power coordinates
        let ctx = build_field(2, 2, None, Some(vec![vec![0, 1], vec![1, 1]])).unwrap();
        let b = ctx.basis();
        for (i, &d) in b.dual.iter().enumerate() {
            for (j, &e) in b.elements.iter().enumerate() {
                assert_eq!(ctx.trace(ctx.mul(d, e)), u32::from(i == j));
            }
        }
    }

    #[test]
    fn translation_matches_add() {
        for (p, r) in [(2, 5), (3, 3), (5, 2), (7, 1)] {
            let ctx = build_field(p, r, None, None).unwrap();
            for a in ctx.elements() {
                let t = ctx.translation(a);
                let mut seen = 0;
                t.for_each(|x, y| {
                    assert_eq!(y, ctx.add(FieldElement(x as u32), a).index());
                    assert_eq!(t.apply(x as u32), y);
                    seen += 1;
                });
                assert_eq!(seen, ctx.q());
            }
        }
    }

    #[test]
    fn neg_and_sub() {
        let ctx = build_field(5, 2, None, None).unwrap();
        for a in ctx.elements() {
            assert_eq!(ctx.add(a, ctx.neg(a)), FieldElement::ZERO);
            for b in ctx.elements().step_by(3) {
                assert_eq!(ctx.add(ctx.sub(a, b), b), a);
            }
        }
    }
}
