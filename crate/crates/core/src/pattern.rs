//! Exhaustive pattern counting.
//!
//! For a function `f`, a shift set `A = {α_1, …, α_s}` and targets
//! `c ∈ F_p^s`, the pattern set is `{ξ ∈ F_q : T(f(ξ + α_i)) = c_i for all i}`.
//! [`count_pattern`] counts it by direct evaluation; [`PatternEngine`] is the
//! table-driven path used by sweeps and must agree with it.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::digitfn::DigitFunctionKind;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, Translation};
use crate::poly::{DensePolynomial, FieldFunction};

pub const DEFAULT_CENSUS_CAP: u64 = 1 << 20;

/// Shift set and target vector of one pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSpec {
    pub shifts: Vec<FieldElement>,
    pub targets: Vec<u32>,
}

impl PatternSpec {
    pub fn new(shifts: Vec<FieldElement>, targets: Vec<u32>) -> Self {
        PatternSpec { shifts, targets }
    }

    pub fn s(&self) -> usize {
        self.shifts.len()
    }

    pub fn validate(&self, ctx: &FieldContext) -> Result<()> {
        validate_shifts(ctx, &self.shifts)?;
        if self.targets.len() != self.shifts.len() {
            return Err(Error::InvalidPattern(format!(
                "{} targets for {} shifts",
                self.targets.len(),
                self.shifts.len()
            )));
        }
        if let Some(&c) = self.targets.iter().find(|&&c| c >= ctx.p()) {
            return Err(Error::InvalidPattern(format!("target {c} not in [0,{})", ctx.p())));
        }
        Ok(())
    }
}

pub fn validate_shifts(ctx: &FieldContext, shifts: &[FieldElement]) -> Result<()> {
    if shifts.is_empty() || shifts.len() > ctx.q() as usize {
        return Err(Error::InvalidPattern(format!(
            "pattern length {} not in [1, {}]",
            shifts.len(),
            ctx.q()
        )));
    }
    let mut seen = vec![false; ctx.q() as usize];
    for &a in shifts {
        let slot = seen
            .get_mut(a.index() as usize)
            .ok_or_else(|| Error::InvalidPattern(format!("shift index {} out of range", a.index())))?;
        if *slot {
            return Err(Error::InvalidPattern(format!(
                "duplicate shift {}",
                ctx.format_element(a)
            )));
        }
        *slot = true;
    }
    Ok(())
}

/// Counts the pattern set by evaluating `f` at every `ξ + α_i`, stopping at
/// the first mismatching coordinate.
pub fn count_pattern(ctx: &FieldContext, f: &FieldFunction, spec: &PatternSpec) -> Result<u64> {
    count_pattern_with(ctx, f, spec, DigitFunctionKind::ThueMorse)
}

pub fn count_pattern_with(
    ctx: &FieldContext,
    f: &FieldFunction,
    spec: &PatternSpec,
    kind: DigitFunctionKind,
) -> Result<u64> {
    spec.validate(ctx)?;
    let count = ctx
        .elements()
        .filter(|&x| {
            spec.shifts
                .iter()
                .zip(&spec.targets)
                .all(|(&a, &c)| kind.eval(ctx, f.eval(ctx, ctx.add(x, a))) == c)
        })
        .count();
    Ok(count as u64)
}

/// Mixed-radix index of a target vector, `c_1` most significant, so that
/// index order is lexicographic order.
pub fn target_key(targets: &[u32], p: u32) -> u64 {
    targets.iter().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
}

pub fn key_to_targets(mut key: u64, p: u32, s: usize) -> Vec<u32> {
    let mut out = vec![0u32; s];
    for slot in out.iter_mut().rev() {
        *slot = (key % p as u64) as u32;
        key /= p as u64;
    }
    out
}

/// Counts of every target vector for one `(f, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Census {
    /// Indexed by [`target_key`].
    Dense { p: u32, s: usize, counts: Vec<u64> },
    /// Only attained vectors are stored.
    Sparse { p: u32, s: usize, counts: BTreeMap<Vec<u32>, u64> },
}

impl Census {
    pub fn get(&self, targets: &[u32]) -> u64 {
        match self {
            Census::Dense { p, counts, .. } => counts[target_key(targets, *p) as usize],
            Census::Sparse { counts, .. } => counts.get(targets).copied().unwrap_or(0),
        }
    }

    pub fn total(&self) -> u64 {
        match self {
            Census::Dense { counts, .. } => counts.iter().sum(),
            Census::Sparse { counts, .. } => counts.values().sum(),
        }
    }

    /// Attained vectors and their counts, in lexicographic order.
    pub fn attained(&self) -> Vec<(Vec<u32>, u64)> {
        match self {
            Census::Dense { p, s, counts } => counts
                .iter()
                .enumerate()
                .filter(|(_, &n)| n > 0)
                .map(|(k, &n)| (key_to_targets(k as u64, *p, *s), n))
                .collect(),
            Census::Sparse { counts, .. } => counts.iter().map(|(k, &v)| (k.clone(), v)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub cap: u64,
    pub allow_sparse: bool,
    pub kind: DigitFunctionKind,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            cap: DEFAULT_CENSUS_CAP,
            allow_sparse: true,
            kind: DigitFunctionKind::ThueMorse,
        }
    }
}

/// One pass over F_q collecting the target vector of every ξ.
pub fn pattern_census(ctx: &FieldContext, f: &FieldFunction, shifts: &[FieldElement]) -> Result<Census> {
    pattern_census_with(ctx, f, shifts, CensusOptions::default())
}

pub fn pattern_census_with(
    ctx: &FieldContext,
    f: &FieldFunction,
    shifts: &[FieldElement],
    opts: CensusOptions,
) -> Result<Census> {
    validate_shifts(ctx, shifts)?;
    let engine = PatternEngine::new(ctx, f, opts.kind);
    let cells = (ctx.p() as u128).checked_pow(shifts.len() as u32);
    match cells {
        Some(c) if c <= opts.cap as u128 => Ok(Census::Dense {
            p: ctx.p(),
            s: shifts.len(),
            counts: engine.census_dense(shifts),
        }),
        _ if opts.allow_sparse => Ok(Census::Sparse {
            p: ctx.p(),
            s: shifts.len(),
            counts: engine.census_sparse(shifts),
        }),
        _ => Err(Error::CensusTooLarge {
            cells: cells.unwrap_or(u128::MAX),
            cap: opts.cap,
        }),
    }
}

/// Precomputed `ξ ↦ digitfn(f(ξ))` for one function, plus the sweep kernels.
pub struct PatternEngine<'a> {
    ctx: &'a FieldContext,
    values: Vec<u32>,
    /// Characteristic 2 only: `bits[k][w]` has bit `b` set iff the value at
    /// `64w + (b ^ k)` is 1, for every in-word offset `k`.
    bits: Option<Vec<Vec<u64>>>,
}

impl<'a> PatternEngine<'a> {
    pub fn new(ctx: &'a FieldContext, f: &FieldFunction, kind: DigitFunctionKind) -> Self {
        let values = ctx.elements().map(|x| kind.eval(ctx, f.eval(ctx, x))).collect();
        Self::from_values(ctx, values)
    }

    fn from_values(ctx: &'a FieldContext, values: Vec<u32>) -> Self {
        let bits = (ctx.p() == 2).then(|| {
            let q = values.len();
            let words = q.div_ceil(64);
            (0..q.min(64))
                .map(|k| {
                    let mut row = vec![0u64; words];
                    for (x, w) in (0..q).map(|x| (x, x / 64)) {
                        if values[(x & !63) | ((x & 63) ^ k)] == 1 {
                            row[w] |= 1 << (x & 63);
                        }
                    }
                    row
                })
                .collect()
        });
        PatternEngine { ctx, values, bits }
    }

    /// Engine for the monomial `ξ ↦ ξ^d`.
    pub fn for_monomial(ctx: &'a FieldContext, d: u64, kind: DigitFunctionKind) -> Self {
        let values = ctx
            .elements()
            .map(|x| kind.eval(ctx, ctx.pow(x, d)))
            .collect();
        Self::from_values(ctx, values)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Per-ξ mixed-radix keys of the first shifts.
    fn prefix_keys(&self, shifts: &[FieldElement]) -> Vec<u32> {
        let p = self.ctx.p();
        let vals = &self.values;
        let mut keys = vec![0u32; self.ctx.q() as usize];
        for &a in shifts {
            if p == 2 {
                let a = a.index() as usize;
                for (x, k) in keys.iter_mut().enumerate() {
                    *k = *k * 2 + vals[x ^ a];
                }
            } else {
                self.ctx.translation(a).for_each(|x, y| keys[x] = keys[x] * p + vals[y as usize]);
            }
        }
        keys
    }

    /// Dense census; requires `p^s` to fit in memory and in `u32` keys.
    pub fn census_dense(&self, shifts: &[FieldElement]) -> Vec<u64> {
        let cells = (self.ctx.p() as u64).pow(shifts.len() as u32);
        assert!(cells <= u32::MAX as u64, "dense census too large");
        let mut counts = vec![0u64; cells as usize];
        for k in self.prefix_keys(shifts) {
            counts[k as usize] += 1;
        }
        counts
    }

    pub fn census_sparse(&self, shifts: &[FieldElement]) -> BTreeMap<Vec<u32>, u64> {
        let translations: Vec<Translation> = shifts.iter().map(|&a| self.ctx.translation(a)).collect();
        let mut out = BTreeMap::new();
        for x in 0..self.ctx.q() {
            let v: Vec<u32> = translations
                .iter()
                .map(|t| self.values[t.apply(x) as usize])
                .collect();
            *out.entry(v).or_insert(0) += 1;
        }
        out
    }

    /// Characteristic-2 count: AND of the per-shift bitsets `{ξ : value(ξ + α) = c}`,
    /// finishing element by element once few candidates survive.
    fn count_bits(bits: &[Vec<u64>], values: &[u32], shifts: &[FieldElement], targets: &[u32]) -> u64 {
        let q = values.len();
        let words = q.div_ceil(64);
        let last = if q.is_multiple_of(64) { !0 } else { (1u64 << q) - 1 };
        let mut acc: Vec<u64> = (0..words).map(|w| if w + 1 == words { last } else { !0 }).collect();
        for (i, (&a, &c)) in shifts.iter().zip(targets).enumerate() {
            let (row, hi) = (&bits[a.index() as usize & 63], a.index() as usize >> 6);
            let flip = match c {
                0 => !0,
                1 => 0,
                _ => return 0,
            };
            let mut alive = 0;
            for (w, slot) in acc.iter_mut().enumerate() {
                *slot &= row[w ^ hi] ^ flip;
                alive += slot.count_ones();
            }
            if alive <= 8 {
                let rest: Vec<(usize, u32)> = shifts[i + 1..]
                    .iter()
                    .zip(&targets[i + 1..])
                    .map(|(a, &c)| (a.index() as usize, c))
                    .collect();
                let mut n = 0;
                for (w, &word) in acc.iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let x = w * 64 + word.trailing_zeros() as usize;
                        word &= word - 1;
                        if rest.iter().all(|&(a, c)| values[x ^ a] == c) {
                            n += 1;
                        }
                    }
                }
                return n;
            }
        }
        acc.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Counts for a batch of target vectors. The first shifts are hashed into
    /// a dense prefix key; only ξ whose prefix matches some target are
    /// compared on the remaining coordinates.
    pub fn counts_for(&self, shifts: &[FieldElement], targets: &[Vec<u32>], prefix_cap: u64) -> Vec<u64> {
        // repeated targets are common when f takes few values
        let mut slot: BTreeMap<&[u32], usize> = BTreeMap::new();
        let mut unique: Vec<Vec<u32>> = Vec::new();
        let index: Vec<usize> = targets
            .iter()
            .map(|c| {
                *slot.entry(c.as_slice()).or_insert_with(|| {
                    unique.push(c.clone());
                    unique.len() - 1
                })
            })
            .collect();
        let counts = self.counts_for_distinct(shifts, &unique, prefix_cap);
        index.into_iter().map(|i| counts[i]).collect()
    }

    fn counts_for_distinct(&self, shifts: &[FieldElement], targets: &[Vec<u32>], prefix_cap: u64) -> Vec<u64> {
        if let Some(bits) = &self.bits {
            return targets.iter().map(|c| Self::count_bits(bits, &self.values, shifts, c)).collect();
        }
        let p = self.ctx.p();
        let s = shifts.len();
        let mut prefix_len = 0;
        let mut cells = 1u64;
        while prefix_len < s && cells * p as u64 <= prefix_cap.max(p as u64) {
            cells *= p as u64;
            prefix_len += 1;
        }
        let keys = self.prefix_keys(&shifts[..prefix_len]);
        // bucket targets by prefix key (CSR layout)
        let mut offsets = vec![0usize; cells as usize + 1];
        let prefix_of = |c: &[u32]| target_key(&c[..prefix_len], p) as usize;
        for c in targets {
            offsets[prefix_of(c) + 1] += 1;
        }
        for i in 0..cells as usize {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut order = vec![0usize; targets.len()];
        for (ti, c) in targets.iter().enumerate() {
            let k = prefix_of(c);
            order[fill[k]] = ti;
            fill[k] += 1;
        }
        let rest: Vec<Translation> = shifts[prefix_len..]
            .iter()
            .map(|&a| self.ctx.translation(a))
            .collect();
        let mut counts = vec![0u64; targets.len()];
        for (x, &k) in keys.iter().enumerate() {
            let (lo, hi) = (offsets[k as usize], offsets[k as usize + 1]);
            for &ti in &order[lo..hi] {
                let c = &targets[ti][prefix_len..];
                let hit = rest
                    .iter()
                    .zip(c)
                    .all(|(t, &ci)| self.values[t.apply(x as u32) as usize] == ci);
                if hit {
                    counts[ti] += 1;
                }
            }
        }
        counts
    }
}

/// `δ Σ a_i f(X + α_i)`.
pub fn build_f(
    ctx: &FieldContext,
    a: &[u32],
    shifts: &[FieldElement],
    f: &DensePolynomial,
) -> DensePolynomial {
    assert_eq!(a.len(), shifts.len(), "one coefficient per shift");
    let sum = a
        .iter()
        .zip(shifts)
        .filter(|(&ai, _)| ai % ctx.p() != 0)
        .fold(DensePolynomial::zero(), |acc, (&ai, &alpha)| {
            acc.add(ctx, &f.taylor_shift(ctx, alpha).scale(ctx, ctx.from_prime(ai)))
        });
    sum.scale(ctx, ctx.delta())
}

/// A complex additive character sum with the trace histogram it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterSum {
    pub re: f64,
    pub im: f64,
    /// `histogram[t]` = number of ξ with `Tr(F(ξ)) = t`.
    pub histogram: Vec<u64>,
}

impl CharacterSum {
    pub fn from_histogram(histogram: Vec<u64>) -> Self {
        let p = histogram.len() as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (t, &n) in histogram.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let angle = 2.0 * PI * t as f64 / p;
            re += n as f64 * angle.cos();
            im += n as f64 * angle.sin();
        }
        CharacterSum { re, im, histogram }
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// True when a single trace value is attained, i.e. the sum is exactly q.
    pub fn is_trivial(&self) -> bool {
        self.histogram.iter().filter(|&&n| n > 0).count() == 1
    }
}

/// `Σ_ξ exp(2πi Tr(F(ξ)) / p)`, accumulated as an integer histogram first.
pub fn character_sum(ctx: &FieldContext, f: &DensePolynomial) -> CharacterSum {
    let mut hist = vec![0u64; ctx.p() as usize];
    for x in ctx.elements() {
        hist[ctx.trace_fast(f.eval(ctx, x)) as usize] += 1;
    }
    CharacterSum::from_histogram(hist)
}

/// True iff `ξ ↦ Tr(F(ξ))` is constant on F_q, which is what
/// `F = g^p - g + c` forces.
pub fn is_degenerate(ctx: &FieldContext, f: &DensePolynomial) -> bool {
    let first = ctx.trace_fast(f.eval(ctx, FieldElement::ZERO));
    ctx.elements().all(|x| ctx.trace_fast(f.eval(ctx, x)) == first)
}

/// `ξ ↦ Tr(δ f(ξ))`, computed through the trace rather than the digits.
pub fn trace_table(ctx: &FieldContext, f: &FieldFunction) -> Vec<u32> {
    let delta = ctx.delta();
    ctx.elements()
        .map(|x| ctx.trace_fast(ctx.mul(delta, f.eval(ctx, x))))
        .collect()
}

/// Character sums `S(a) = Σ_ξ ψ(F_a(ξ))` for every `a ∈ F_p^s`, computed from
/// the joint histogram of `Tr(δ f(ξ + α_i))` and a DFT over `F_p^s`.
/// Index `target_key(a)`.
pub fn character_sums_all(ctx: &FieldContext, f: &FieldFunction, shifts: &[FieldElement]) -> Vec<(f64, f64)> {
    character_sums_from_table(ctx, &trace_table(ctx, f), shifts)
}

pub fn character_sums_from_table(ctx: &FieldContext, table: &[u32], shifts: &[FieldElement]) -> Vec<(f64, f64)> {
    let p = ctx.p();
    let cells = (p as u64).pow(shifts.len() as u32) as usize;
    let mut keys = vec![0usize; ctx.q() as usize];
    for &a in shifts {
        ctx.translation(a)
            .for_each(|x, y| keys[x] = keys[x] * p as usize + table[y as usize] as usize);
    }
    let mut hist = vec![0u64; cells];
    for k in keys {
        hist[k] += 1;
    }
    dft_fp(p, shifts.len(), &hist)
}

/// `S(a) = Σ_c N(c) e_p(a·c)`: a forward DFT along each of the s axes.
pub fn dft_fp(p: u32, s: usize, counts: &[u64]) -> Vec<(f64, f64)> {
    let cells = counts.len();
    let mut data: Vec<(f64, f64)> = counts.iter().map(|&n| (n as f64, 0.0)).collect();
    let roots: Vec<(f64, f64)> = (0..p)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / p as f64;
            (t.cos(), t.sin())
        })
        .collect();
    let mut stride = 1usize;
    let mut line = vec![(0.0, 0.0); p as usize];
    for _ in 0..s {
        let block = stride * p as usize;
        for base in (0..cells).step_by(block) {
            for off in 0..stride {
                for (j, slot) in line.iter_mut().enumerate() {
                    *slot = data[base + off + j * stride];
                }
                for a in 0..p as usize {
                    let (mut re, mut im) = (0.0, 0.0);
                    for (c, &(x, y)) in line.iter().enumerate() {
                        let (wr, wi) = roots[(a * c) % p as usize];
                        re += x * wr - y * wi;
                        im += x * wi + y * wr;
                    }
                    data[base + off + a * stride] = (re, im);
                }
            }
        }
        stride = block;
    }
    data
}

/// Redchar check from precomputed sums `S(a)` indexed by `target_key(a)`.
pub fn redchar_from_sums(ctx: &FieldContext, census: &Census, sums: &[(f64, f64)]) -> RedcharReport {
    let (p, s) = match census {
        Census::Dense { p, s, .. } | Census::Sparse { p, s, .. } => (*p, *s),
    };
    let mut max_char_sum = 0.0f64;
    let mut worst_key = 1u64;
    for (key, &(re, im)) in sums.iter().enumerate().skip(1) {
        let m = re.hypot(im);
        if m > max_char_sum {
            max_char_sum = m;
            worst_key = key as u64;
        }
    }
    summarize_redchar(ctx, census, max_char_sum, key_to_targets(worst_key, p, s))
}

/// Outcome of checking `||T(c,A,f)| - p^{r-s}| ≤ max_{a≠0} |S(a)|` for every c.
#[derive(Clone, Debug, PartialEq)]
pub struct RedcharReport {
    /// `max_{a ≠ 0} |S(a)|`.
    pub max_char_sum: f64,
    pub worst_a: Vec<u32>,
    pub worst_targets: Vec<u32>,
    pub worst_deviation: f64,
    pub holds: bool,
}

pub const DEFAULT_REDCHAR_CAP: u64 = 1 << 12;

/// Verifies the character-sum reduction for every target vector, building
/// `F_a` explicitly for each nonzero `a`.
pub fn redchar_check(
    ctx: &FieldContext,
    f: &DensePolynomial,
    shifts: &[FieldElement],
    cap: u64,
) -> Result<RedcharReport> {
    validate_shifts(ctx, shifts)?;
    let p = ctx.p();
    let s = shifts.len();
    let count = (p as u128).pow(s as u32);
    if count - 1 > cap as u128 {
        return Err(Error::TooManyCoefficientVectors {
            count: count - 1,
            cap,
        });
    }
    let mut max_char_sum = 0.0f64;
    let mut worst_a = Vec::new();
    for key in 1..count as u64 {
        let a = key_to_targets(key, p, s);
        let m = character_sum(ctx, &build_f(ctx, &a, shifts, f)).modulus();
        if m > max_char_sum || worst_a.is_empty() {
            max_char_sum = m;
            worst_a = a;
        }
    }
    let func = FieldFunction::Poly(f.clone());
    let census = pattern_census(ctx, &func, shifts)?;
    Ok(summarize_redchar(ctx, &census, max_char_sum, worst_a))
}

/// Compares every census entry against the largest nontrivial character sum.
pub fn summarize_redchar(ctx: &FieldContext, census: &Census, max_char_sum: f64, worst_a: Vec<u32>) -> RedcharReport {
    let (p, s) = match census {
        Census::Dense { p, s, .. } | Census::Sparse { p, s, .. } => (*p, *s),
    };
    let main = (p as f64).powi(ctx.r() as i32 - s as i32);
    let tol = 1e-9 * (ctx.q() as f64);
    let mut worst_deviation = -1.0;
    let mut worst_targets = Vec::new();
    let mut holds = true;
    let total = (p as u64).pow(s as u32);
    for key in 0..total {
        let c = key_to_targets(key, p, s);
        let dev = (census.get(&c) as f64 - main).abs();
        if dev > max_char_sum + tol {
            holds = false;
        }
        if dev > worst_deviation {
            worst_deviation = dev;
            worst_targets = c;
        }
    }
    RedcharReport {
        max_char_sum,
        worst_a,
        worst_targets,
        worst_deviation,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::poly::{parse_function, parse_polynomial, RationalMonomial};

    fn fe(i: u32) -> FieldElement {
        FieldElement::from_index(i)
    }

    #[test]
    fn count_examples_f4() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let x = parse_function(&ctx, "X").unwrap();
        let x3 = parse_function(&ctx, "X^3").unwrap();
        let inv = FieldFunction::Rational(RationalMonomial::new(-1, 4).unwrap());
        assert_eq!(count_pattern(&ctx, &x, &PatternSpec::new(vec![fe(0)], vec![0])).unwrap(), 2);
        assert_eq!(count_pattern(&ctx, &x3, &PatternSpec::new(vec![fe(0)], vec![1])).unwrap(), 3);
        assert_eq!(count_pattern(&ctx, &inv, &PatternSpec::new(vec![fe(0)], vec![0])).unwrap(), 2);
        // brute force: which ξ give T(ξ^{-1}) = 0
        let zeros: Vec<u32> = ctx
            .elements()
            .filter(|&e| crate::digitfn::thue_morse(&ctx, inv.eval(&ctx, e)) == 0)
            .map(|e| e.index())
            .collect();
        // 0, and ω whose inverse ω + 1 has digit sum 0
        assert_eq!(zeros, vec![0, 2]);
    }

    #[test]
    fn invalid_specs_rejected() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let x = parse_function(&ctx, "X").unwrap();
        let dup = PatternSpec::new(vec![fe(0), fe(0)], vec![0, 0]);
        assert!(matches!(count_pattern(&ctx, &x, &dup), Err(Error::InvalidPattern(_))));
        let bad_target = PatternSpec::new(vec![fe(0)], vec![2]);
        assert!(count_pattern(&ctx, &x, &bad_target).is_err());
        let empty = PatternSpec::new(vec![], vec![]);
        assert!(count_pattern(&ctx, &x, &empty).is_err());
    }

    #[test]
    fn census_examples() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let x = parse_function(&ctx, "X").unwrap();
        let x3 = parse_function(&ctx, "X^3").unwrap();
        let c = pattern_census(&ctx, &x, &[fe(0)]).unwrap();
        assert_eq!((c.get(&[0]), c.get(&[1])), (2, 2));
        let c = pattern_census(&ctx, &x3, &[fe(0)]).unwrap();
        assert_eq!((c.get(&[0]), c.get(&[1])), (1, 3));
        assert_eq!(c.total(), 4);
    }

    #[test]
    fn census_modes_agree_with_direct_counts() {
        let ctx = build_field(3, 3, None, None).unwrap();
        let f = parse_function(&ctx, "[1,0,2]*X^4+X^2+[0,1,0]").unwrap();
        let shifts = vec![fe(0), fe(5), fe(13)];
        let dense = pattern_census(&ctx, &f, &shifts).unwrap();
        let sparse = pattern_census_with(
            &ctx,
            &f,
            &shifts,
            CensusOptions { cap: 1, ..Default::default() },
        )
        .unwrap();
        assert!(matches!(sparse, Census::Sparse { .. }));
        assert_eq!(dense.total(), 27);
        assert_eq!(sparse.total(), 27);
        let engine = PatternEngine::new(&ctx, &f, DigitFunctionKind::ThueMorse);
        let all: Vec<Vec<u32>> = (0..27).map(|k| key_to_targets(k, 3, 3)).collect();
        let batched = engine.counts_for(&shifts, &all, 3);
        for (c, &b) in all.iter().zip(&batched) {
            let direct = count_pattern(&ctx, &f, &PatternSpec::new(shifts.clone(), c.clone())).unwrap();
            assert_eq!(dense.get(c), direct);
            assert_eq!(sparse.get(c), direct);
            assert_eq!(b, direct);
        }
        assert!(matches!(
            pattern_census_with(
                &ctx,
                &f,
                &shifts,
                CensusOptions { cap: 1, allow_sparse: false, ..Default::default() }
            ),
            Err(Error::CensusTooLarge { .. })
        ));
    }

    #[test]
    fn build_f_examples() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let sq = parse_polynomial(&ctx, "X^2").unwrap();
        let f = build_f(&ctx, &[1, 1], &[fe(0), fe(1)], &sq);
        assert_eq!(f, DensePolynomial::constant(ctx.delta()));
        let single = build_f(&ctx, &[1], &[fe(2)], &sq);
        assert_eq!(single, sq.taylor_shift(&ctx, fe(2)).scale(&ctx, ctx.delta()));
        assert!(build_f(&ctx, &[0, 0], &[fe(0), fe(1)], &sq).is_zero());
    }

    #[test]
    fn character_sum_examples() {
        let ctx = build_field(2, 2, None, None).unwrap();
        let zero = DensePolynomial::zero();
        let s = character_sum(&ctx, &zero);
        assert_eq!((s.re, s.im), (4.0, 0.0));
        let lin = DensePolynomial::monomial(ctx.delta(), 1);
        assert!(character_sum(&ctx, &lin).modulus() < 1e-12);
        let f3 = build_field(3, 1, None, None).unwrap();
        let sq = parse_polynomial(&f3, "X^2").unwrap();
        assert!((character_sum(&f3, &sq).modulus() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn degeneracy_examples() {
        let ctx = build_field(2, 2, None, None).unwrap();
        assert!(is_degenerate(&ctx, &DensePolynomial::constant(fe(3))));
        assert!(!is_degenerate(&ctx, &DensePolynomial::monomial(ctx.delta(), 1)));
        let as_form = parse_polynomial(&ctx, "X^2+X").unwrap();
        assert!(is_degenerate(&ctx, &as_form));
        assert_eq!(character_sum(&ctx, &as_form).modulus(), 4.0);
    }

    #[test]
    fn fast_character_sums_match_explicit() {
        let ctx = build_field(3, 2, None, None).unwrap();
        let f = parse_polynomial(&ctx, "X^4+[1,1]*X").unwrap();
        let shifts = vec![fe(0), fe(4), fe(7)];
        let fast = character_sums_all(&ctx, &FieldFunction::Poly(f.clone()), &shifts);
        for (key, &(re, im)) in fast.iter().enumerate() {
            let a = key_to_targets(key as u64, 3, 3);
            let slow = character_sum(&ctx, &build_f(&ctx, &a, &shifts, &f));
            assert!((slow.re - re).abs() < 1e-9 && (slow.im - im).abs() < 1e-9, "a={a:?}");
        }
    }

    #[test]
    fn redchar_examples() {
        let f4 = build_field(2, 2, None, None).unwrap();
        let sq = parse_polynomial(&f4, "X^2").unwrap();
        let rep = redchar_check(&f4, &sq, &[fe(0)], 16).unwrap();
        assert!(rep.holds);
        let lin = parse_polynomial(&f4, "X").unwrap();
        let rep = redchar_check(&f4, &lin, &[fe(1)], 16).unwrap();
        assert!(rep.max_char_sum < 1e-9 && rep.worst_deviation == 0.0 && rep.holds);
        let f8 = build_field(2, 3, None, None).unwrap();
        let cube = parse_polynomial(&f8, "X^3").unwrap();
        let rep = redchar_check(&f8, &cube, &[fe(0), fe(1)], 16).unwrap();
        assert!(rep.holds);
        assert!(matches!(
            redchar_check(&f8, &cube, &[fe(0), fe(1), fe(2)], 2),
            Err(Error::TooManyCoefficientVectors { .. })
        ));
    }

    #[test]
    fn monomial_reduction_permutes_shifts() {
        // T(c, A, X^{d p^j}) = T(c, A^{p^j}, X^d)
        let ctx = build_field(3, 3, None, None).unwrap();
        for (d, j) in [(2u64, 1u32), (5, 1), (8, 1), (1, 2), (2, 2)] {
            let pj = 3u64.pow(j);
            let big = FieldFunction::Rational(RationalMonomial::new((d * pj) as i64, 27).unwrap());
            let small = FieldFunction::Rational(RationalMonomial::new(d as i64, 27).unwrap());
            let shifts = vec![fe(1), fe(4), fe(20)];
            let powered: Vec<FieldElement> = shifts.iter().map(|&a| ctx.pow(a, pj)).collect();
            let lhs = pattern_census(&ctx, &big, &shifts).unwrap();
            let rhs = pattern_census(&ctx, &small, &powered).unwrap();
            assert_eq!(lhs, rhs, "d={d} j={j}");
        }
    }

    proptest::proptest! {
        #[test]
        fn binary_counts_match_direct(
            r in 1u32..9,
            d in 1u64..40,
            picks in proptest::collection::vec(0u32..256, 1..12),
            bits in proptest::collection::vec(0u32..2, 12),
        ) {
            let ctx = build_field(2, r, None, None).unwrap();
            let q = ctx.q();
            let mut shifts: Vec<FieldElement> = picks.iter().map(|&i| fe(i % q)).collect();
            shifts.sort();
            shifts.dedup();
            let s = shifts.len();
            let f = FieldFunction::Poly(DensePolynomial::x_pow((d % q as u64).max(1) as usize));
            let engine = PatternEngine::new(&ctx, &f, DigitFunctionKind::ThueMorse);
            let mut targets = vec![bits[..s].to_vec()];
            targets.push((0..s).map(|i| engine.values()[ctx.add(fe(q - 1), shifts[i]).index() as usize]).collect());
            let got = engine.counts_for(&shifts, &targets, 4);
            for (c, n) in targets.iter().zip(got) {
                let direct = count_pattern(&ctx, &f, &PatternSpec::new(shifts.clone(), c.clone())).unwrap();
                proptest::prop_assert_eq!(n, direct);
            }
        }
    }
}
