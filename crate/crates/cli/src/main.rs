//! `ffdigit`: field setup, pattern counts, bound sweeps, certified empty
//! patterns and character sums from the command line.
//!
//! Exit codes: 0 clean, 1 mathematical violation or no dependence found,
//! 2 usage or configuration error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ffdigit::bounds::{bound_setup, deviation, main_term, matching_theorems, BoundCheckReport, TheoremId};
use ffdigit::construct::{
    empty_pattern_any_a, empty_pattern_monomial, empty_pattern_polynomial, gcd_counterexample, prime_first_shifts,
    CounterexampleCertificate, ConstructionId,
};
use ffdigit::digitfn::DigitFunctionKind;
use ffdigit::field::{FieldContext, FieldElement, FieldSpec, DEFAULT_Q_CAP};
use ffdigit::pattern::{character_sum, count_pattern_with, is_degenerate, PatternSpec};
use ffdigit::poly::{parse_function, parse_polynomial, DensePolynomial, FieldFunction};
use ffdigit::sweep::{run_sweep, RunReport, SPolicy, SweepConfig};
use ffdigit::Error;

const QCAP_ENV: &str = "FFDIGIT_QCAP";

#[derive(Parser)]
#[command(name = "ffdigit", version, about = "Sum-of-digits patterns on GF(p^r)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the modulus, basis, dual basis and δ of a field.
    Field(FieldCmd),
    /// Count one pattern set and compare it with every matching bound.
    Count(CountCmd),
    /// Run a seeded bound-verification sweep.
    Verify(VerifyCmd),
    /// Construct and verify an empty pattern set.
    Counterexample(CounterexampleCmd),
    /// Additive character sum of a polynomial.
    Charsum(CharsumCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DigitFn {
    /// Sum of digits.
    Tm,
    /// Sum of products of consecutive digits.
    Rs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Modulus coefficients, constant term first, e.g. `1,1,1` for X^2+X+1.
    #[arg(long)]
    modulus: Option<String>,
    /// Basis elements as power-basis coordinate rows, e.g. `0,1;1,1`.
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Args)]
struct FieldCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CountCmd {
    #[command(flatten)]
    field: FieldArgs,
    /// Function, e.g. `X^3`, `[0,1]*X^2+1`, `X^-1`.
    #[arg(long = "f")]
    function: String,
    /// Shift elements, e.g. `0,[1,0],[0,1]`.
    #[arg(long)]
    shifts: String,
    /// Target digits, one per shift.
    #[arg(long)]
    targets: String,
    /// Report only this theorem (`darsar`, `1`, `2`, `3`).
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long = "digit-fn", value_enum, default_value = "tm")]
    digit_fn: DigitFn,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyCmd {
    /// `darsar`, `1`, `2` or `3`.
    #[arg(long)]
    theorem: String,
    /// Primes, comma separated.
    #[arg(long, default_value = "2,3,5,7")]
    p: String,
    #[arg(long = "q-cap", default_value_t = 1 << 11)]
    q_cap: u64,
    #[arg(long = "r-max")]
    r_max: Option<u32>,
    #[arg(long = "d-min", default_value_t = 1)]
    d_min: u64,
    #[arg(long = "d-max")]
    d_max: Option<u64>,
    /// Only degrees below p.
    #[arg(long = "d-below-p")]
    d_below_p: bool,
    /// Explicit pattern lengths, comma separated (default: every length the theorem covers).
    #[arg(long)]
    s: Option<String>,
    /// Largest pattern length for Theorem 2.
    #[arg(long = "s-cap", default_value_t = 8)]
    s_cap: usize,
    /// Sampled shift sets per cell.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Use every shift set when C(q, s) is at most this.
    #[arg(long = "a-cap", default_value_t = 10_000)]
    a_cap: u64,
    /// Use every target vector when p^s is at most this.
    #[arg(long = "c-cap", default_value_t = 1 << 12)]
    c_cap: u64,
    #[arg(long = "c-samples", default_value_t = 100)]
    c_samples: usize,
    /// Random polynomials per cell (Theorem 3 and the single-target bound).
    #[arg(long, default_value_t = 200)]
    polys: usize,
    #[arg(long = "shifts-per-poly", default_value_t = 5)]
    shifts_per_poly: usize,
    /// Also check the character-sum reduction when p^s is at most this.
    #[arg(long = "redchar-cap", default_value_t = 0)]
    redchar_cap: u64,
    /// Basis rows applied to every field of the grid.
    #[arg(long)]
    basis: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit every checked row instead of violations and per-cell worst rows.
    #[arg(long = "all-rows")]
    all_rows: bool,
    /// Add wall time to the summary line.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CounterexampleCmd {
    #[command(flatten)]
    field: FieldArgs,
    /// T1P2, T1P3, T3P2, T3P3 or GCD71.
    #[arg(long)]
    construction: String,
    /// Monomial degree (or degree of X^d when no `--f` is given).
    #[arg(long)]
    d: Option<u64>,
    /// Pattern length.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long = "f")]
    function: Option<String>,
    /// Explicit shifts for T1P3 / T3P3.
    #[arg(long)]
    shifts: Option<String>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    c0: Option<String>,
    /// Attempt T1P3 / T3P3 below the guaranteed threshold.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CharsumCmd {
    #[command(flatten)]
    field: FieldArgs,
    /// Polynomial F.
    #[arg(long = "F")]
    poly: String,
    #[command(flatten)]
    output: OutputArgs,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoDependence | Error::VerificationFailed(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("csv error: {e}"))
    }
}

type CmdResult = Result<bool, Failure>;

fn field_cap() -> Result<u64, Failure> {
    match std::env::var(QCAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{QCAP_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_Q_CAP),
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("bad {what} entry {s:?}"))))
        .collect()
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<u32>>, Failure> {
    text.split(';').map(|row| parse_list(row, "basis")).collect()
}

/// Splits on commas outside brackets: `0,[1,0],2` → `0`, `[1,0]`, `2`.
fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_elements(ctx: &FieldContext, text: &str) -> Result<Vec<FieldElement>, Failure> {
    split_top_level(text)
        .iter()
        .map(|t| ctx.parse_element(t).map_err(Failure::from))
        .collect()
}

fn build(args: &FieldArgs) -> Result<FieldContext, Failure> {
    let mut spec = FieldSpec::new(args.p, args.r).q_cap(field_cap()?);
    if let Some(m) = &args.modulus {
        spec = spec.modulus(parse_list(m, "modulus")?);
    }
    if let Some(b) = &args.basis {
        spec = spec.basis(parse_matrix(b)?);
    }
    Ok(spec.build()?)
}

fn open_output(out: &OutputArgs) -> Result<Box<dyn Write>, Failure> {
    Ok(match &out.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json_only(out: &OutputArgs) -> Result<(), Failure> {
    if out.format == Format::Csv {
        return Err(Failure::Usage("this command only writes JSON".into()));
    }
    Ok(())
}

fn write_json<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(w, "{line}")?;
    Ok(())
}

#[derive(Serialize)]
struct FieldSummary {
    p: u32,
    r: u32,
    q: u64,
    modulus: String,
    basis: Vec<String>,
    basis_power_coords: Vec<Vec<u32>>,
    dual: Vec<String>,
    delta: String,
}

fn cmd_field(cmd: &FieldCmd) -> CmdResult {
    json_only(&cmd.output)?;
    let ctx = build(&cmd.field)?;
    let desc = ctx.descriptor();
    let b = ctx.basis();
    let summary = FieldSummary {
        p: desc.p,
        r: desc.r,
        q: desc.q,
        modulus: desc.modulus,
        basis: b.elements.iter().map(|&x| ctx.format_element(x)).collect(),
        basis_power_coords: desc.basis,
        dual: b.dual.iter().map(|&x| ctx.format_element(x)).collect(),
        delta: ctx.format_element(b.delta),
    };
    let mut w = open_output(&cmd.output)?;
    write_json(&mut *w, &summary)?;
    w.flush()?;
    Ok(true)
}

#[derive(Serialize)]
struct TheoremBound {
    theorem_id: TheoremId,
    bound: f64,
    applicable: bool,
    pass: Option<bool>,
}

#[derive(Serialize)]
struct CountReport {
    p: u32,
    r: u32,
    q: u64,
    modulus: String,
    basis: Vec<Vec<u32>>,
    function: String,
    digit_function: &'static str,
    shifts: Vec<String>,
    targets: Vec<u32>,
    count: u64,
    main_term: f64,
    deviation: f64,
    bounds: Vec<TheoremBound>,
}

const CSV_HEADER: [&str; 16] = [
    "p", "r", "q", "modulus", "basis", "function", "theorem_id", "shifts", "targets", "count", "main_term",
    "deviation", "bound", "applicable", "pass", "seed",
];

fn csv_record(row: &BoundCheckReport) -> Vec<String> {
    let json = |v: &dyn erased::Json| v.to_json();
    vec![
        row.p.to_string(),
        row.r.to_string(),
        row.q.to_string(),
        row.modulus.clone(),
        json(&row.basis),
        row.function.clone(),
        row.theorem_id.to_string(),
        json(&row.shifts),
        json(&row.targets),
        row.count.to_string(),
        row.main_term.to_string(),
        row.deviation.to_string(),
        row.bound.to_string(),
        row.applicable.to_string(),
        row.pass.map_or(String::new(), |b| b.to_string()),
        row.seed.map_or(String::new(), |s| s.to_string()),
    ]
}

mod erased {
    pub trait Json {
        fn to_json(&self) -> String;
    }

    impl<T: serde::Serialize> Json for T {
        fn to_json(&self) -> String {
            serde_json::to_string(self).expect("plain data serializes")
        }
    }
}

fn write_csv(w: Box<dyn Write>, rows: &[&BoundCheckReport]) -> Result<(), Failure> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for row in rows {
        out.write_record(csv_record(row))?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_count(cmd: &CountCmd) -> CmdResult {
    let ctx = build(&cmd.field)?;
    let f = parse_function(&ctx, &cmd.function)?;
    let shifts = parse_elements(&ctx, &cmd.shifts)?;
    let targets: Vec<u32> = parse_list(&cmd.targets, "target")?;
    let spec = PatternSpec::new(shifts, targets);
    let kind = match cmd.digit_fn {
        DigitFn::Tm => DigitFunctionKind::ThueMorse,
        DigitFn::Rs => DigitFunctionKind::RudinShapiro,
    };
    let count = count_pattern_with(&ctx, &f, &spec, kind)?;
    let s = spec.s();
    let theorems = match &cmd.theorem {
        Some(t) => vec![t.parse::<TheoremId>()?],
        None if kind == DigitFunctionKind::ThueMorse => matching_theorems(&ctx, &f, s),
        None => Vec::new(),
    };
    if cmd.theorem.is_some() && kind != DigitFunctionKind::ThueMorse {
        return Err(Failure::Usage("bounds apply to the sum-of-digits function only".into()));
    }
    let mut reports = Vec::new();
    for t in theorems {
        reports.push(bound_setup(&ctx, t, &f, s)?.report(&ctx, &spec, count));
    }
    let mut w = open_output(&cmd.output)?;
    if cmd.output.format == Format::Csv {
        write_csv(w, &reports.iter().collect::<Vec<_>>())?;
        return Ok(reports.iter().all(|r| !r.is_violation()));
    }
    if cmd.theorem.is_some() {
        write_json(&mut *w, &reports[0])?;
    } else {
        let desc = ctx.descriptor();
        let report = CountReport {
            p: desc.p,
            r: desc.r,
            q: desc.q,
            modulus: desc.modulus,
            basis: desc.basis,
            function: f.describe(&ctx),
            digit_function: match kind {
                DigitFunctionKind::ThueMorse => "thue_morse",
                DigitFunctionKind::RudinShapiro => "rudin_shapiro",
            },
            shifts: spec.shifts.iter().map(|&x| ctx.format_element(x)).collect(),
            targets: spec.targets.clone(),
            count,
            main_term: main_term(ctx.p(), ctx.r(), s),
            deviation: deviation(count, ctx.p(), ctx.r(), s),
            bounds: reports
                .iter()
                .map(|r| TheoremBound {
                    theorem_id: r.theorem_id,
                    bound: r.bound,
                    applicable: r.applicable,
                    pass: r.pass,
                })
                .collect(),
        };
        write_json(&mut *w, &report)?;
    }
    w.flush()?;
    Ok(reports.iter().all(|r| !r.is_violation()))
}

#[derive(Serialize)]
struct Tagged<'a, T: Serialize> {
    kind: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
struct RunSummary {
    cells: usize,
    checks: u64,
    violations: u64,
    censuses: u64,
    partition_failures: u64,
    redchar_checked: u64,
    redchar_failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_secs: Option<f64>,
}

fn verify_config(cmd: &VerifyCmd) -> Result<SweepConfig, Failure> {
    let theorem: TheoremId = cmd.theorem.parse()?;
    let mut config = SweepConfig::new(theorem);
    config.p_set = parse_list(&cmd.p, "prime")?;
    config.q_cap = cmd.q_cap;
    config.r_max = cmd.r_max;
    config.d_min = cmd.d_min;
    config.d_max = cmd.d_max;
    config.d_below_p = cmd.d_below_p;
    if let Some(s) = &cmd.s {
        config.s_policy = SPolicy::Explicit(parse_list(s, "pattern length")?);
    }
    config.s_cap = cmd.s_cap;
    config.samples_per_cell = cmd.samples;
    config.exhaustive_a_cap = cmd.a_cap;
    config.exhaustive_c_cap = cmd.c_cap;
    config.c_samples = cmd.c_samples;
    config.polys_per_cell = cmd.polys;
    config.shifts_per_poly = cmd.shifts_per_poly;
    config.redchar_cap = cmd.redchar_cap;
    config.keep_all_rows = cmd.all_rows;
    config.basis = cmd.basis.as_deref().map(parse_matrix).transpose()?;
    config.seed = cmd.seed;
    let cap = field_cap()?;
    if config.q_cap > cap {
        return Err(Failure::Usage(format!("--q-cap {} exceeds the field-size cap {cap}", config.q_cap)));
    }
    config.validate()?;
    Ok(config)
}

fn summary_of(rep: &RunReport, wall: Option<f64>) -> RunSummary {
    RunSummary {
        cells: rep.cells.len(),
        checks: rep.checks,
        violations: rep.violations,
        censuses: rep.censuses,
        partition_failures: rep.partition_failures,
        redchar_checked: rep.redchar_checked,
        redchar_failures: rep.redchar_failures,
        wall_time_secs: wall,
    }
}

fn cmd_verify(cmd: &VerifyCmd) -> CmdResult {
    let config = verify_config(cmd)?;
    let start = Instant::now();
    let rep = run_sweep(&config)?;
    let wall = cmd.timing.then(|| start.elapsed().as_secs_f64());
    let summary = summary_of(&rep, wall);
    let clean = rep.violations == 0 && rep.partition_failures == 0 && rep.redchar_failures == 0;
    let mut w = open_output(&cmd.output)?;
    match cmd.output.format {
        Format::Json => {
            write_json(&mut *w, &Tagged { kind: "header", body: &rep.header })?;
            let mut rows = rep.emitted_rows().peekable();
            for cell in &rep.cells {
                write_json(&mut *w, &Tagged { kind: "cell", body: cell })?;
                while let Some((_, row)) = rows.next_if(|(c, _)| std::ptr::eq(*c, cell)) {
                    write_json(&mut *w, &Tagged { kind: "row", body: row })?;
                }
            }
            write_json(&mut *w, &Tagged { kind: "summary", body: &summary })?;
            w.flush()?;
        }
        Format::Csv => {
            let rows: Vec<&BoundCheckReport> = rep.emitted_rows().map(|(_, r)| r).collect();
            write_csv(w, &rows)?;
            let line = serde_json::to_string(&summary).map_err(|e| Failure::Usage(e.to_string()))?;
            eprintln!("{line}");
        }
    }
    Ok(clean)
}

fn certificate_shifts(ctx: &FieldContext, cmd: &CounterexampleCmd) -> Result<Vec<FieldElement>, Failure> {
    match (&cmd.shifts, cmd.s) {
        (Some(text), _) => parse_elements(ctx, text),
        (None, Some(s)) => {
            if s == 0 || s as u64 > ctx.q() as u64 {
                return Err(Failure::Usage(format!("s must lie in [1, {}]", ctx.q())));
            }
            Ok(prime_first_shifts(ctx, s))
        }
        (None, None) => Err(Failure::Usage("give --shifts or --s".into())),
    }
}

fn certificate_function(ctx: &FieldContext, cmd: &CounterexampleCmd) -> Result<FieldFunction, Failure> {
    match (&cmd.function, cmd.d) {
        (Some(text), _) => Ok(parse_function(ctx, text)?),
        (None, Some(d)) if d >= 1 => Ok(FieldFunction::Poly(DensePolynomial::x_pow(d as usize))),
        _ => Err(Failure::Usage("give --f or --d >= 1".into())),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{flag} is required for this construction")))
}

fn cmd_counterexample(cmd: &CounterexampleCmd) -> CmdResult {
    json_only(&cmd.output)?;
    let ctx = build(&cmd.field)?;
    let id: ConstructionId = cmd.construction.parse()?;
    let cert: CounterexampleCertificate = match id {
        ConstructionId::T1P2 => empty_pattern_monomial(&ctx, need(cmd.d, "--d")?, need(cmd.s, "--s")?)?,
        ConstructionId::T1P3 | ConstructionId::T3P3 => {
            let f = certificate_function(&ctx, cmd)?;
            let shifts = certificate_shifts(&ctx, cmd)?;
            let cert = empty_pattern_any_a(&ctx, &f, &shifts, cmd.force)?;
            if cert.construction_id != id {
                return Err(Failure::Usage(format!(
                    "{id} does not fit this function; it is handled by {}",
                    cert.construction_id
                )));
            }
            cert
        }
        ConstructionId::T3P2 => {
            let f = match certificate_function(&ctx, cmd)? {
                FieldFunction::Poly(f) => f,
                FieldFunction::Rational(_) => return Err(Failure::Usage("T3P2 needs a polynomial".into())),
            };
            empty_pattern_polynomial(&ctx, &f, need(cmd.s, "--s")?)?
        }
        ConstructionId::GCD71 => {
            let g = parse_polynomial(&ctx, cmd.g.as_deref().ok_or_else(|| Failure::Usage("--g is required".into()))?)?;
            let c0 = match &cmd.c0 {
                Some(t) => ctx.parse_element(t)?,
                None => FieldElement::ZERO,
            };
            gcd_counterexample(&ctx, &g, c0, cmd.s.unwrap_or(1))?
        }
    };
    let mut w = open_output(&cmd.output)?;
    write_json(&mut *w, &cert)?;
    w.flush()?;
    Ok(true)
}

#[derive(Serialize)]
struct CharsumReport {
    p: u32,
    r: u32,
    q: u64,
    polynomial: String,
    sum_re: f64,
    sum_im: f64,
    modulus: f64,
    degree: i64,
    degenerate: bool,
    weil_bound: Option<f64>,
}

fn cmd_charsum(cmd: &CharsumCmd) -> CmdResult {
    json_only(&cmd.output)?;
    let ctx = build(&cmd.field)?;
    let f = parse_polynomial(&ctx, &cmd.poly)?;
    let sum = character_sum(&ctx, &f);
    let degenerate = is_degenerate(&ctx, &f);
    let degree = f.degree();
    let weil_bound = (!degenerate && degree >= 1).then(|| (degree - 1) as f64 * (ctx.q() as f64).sqrt());
    let report = CharsumReport {
        p: ctx.p(),
        r: ctx.r(),
        q: ctx.q() as u64,
        polynomial: f.format(&ctx),
        sum_re: sum.re,
        sum_im: sum.im,
        modulus: sum.modulus(),
        degree,
        degenerate,
        weil_bound,
    };
    let mut w = open_output(&cmd.output)?;
    write_json(&mut *w, &report)?;
    w.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Field(c) => cmd_field(c),
        Command::Count(c) => cmd_count(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Counterexample(c) => cmd_counterexample(c),
        Command::Charsum(c) => cmd_charsum(c),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Math(msg)) => {
            eprintln!("ffdigit: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ffdigit: {msg}");
            ExitCode::from(2)
        }
    }
}
