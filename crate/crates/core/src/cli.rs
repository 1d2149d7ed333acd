//! Text in and out: the point file formats, result emitters, the benchmark
//! harness, the batch verifier and the command line front end.
//!
//! Input is CSV (`color,x,y`, header optional) or JSON
//! (`{"red": [[x, y], ...], "blue": [...]}`). Coordinates are exact:
//! integers, decimals and `p/q` literals all parse without rounding.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::generators::{gen_fap, gen_omega_m, gen_random, gen_random_with, random_unit_rationals};
use crate::geometry::{contains_closed, AxisRect, Instance, Point, Scalar, Side};
use crate::oracle::{count_open_interior, is_maximal, oracle_all, oracle_best, OracleResult};
use crate::solver::{solve_all, solve_one, solve_one_presorted, CaseTag, Solution, Status, Support};

/// Integer inputs are kept as `i128` while every coordinate stays within
/// this bound, so that areas cannot overflow.
const INT_LIMIT: i64 = 1 << 62;

/// A parsed instance. Integer files get the fast path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyInstance {
    Int(Instance<i128>),
    Rational(Instance<BigRational>),
}

impl AnyInstance {
    pub fn reds(&self) -> usize {
        match self {
            AnyInstance::Int(i) => i.reds.len(),
            AnyInstance::Rational(i) => i.reds.len(),
        }
    }

    pub fn blues(&self) -> usize {
        match self {
            AnyInstance::Int(i) => i.blues.len(),
            AnyInstance::Rational(i) => i.blues.len(),
        }
    }
}

/// Parse a coordinate: `12`, `-3/4`, `2.5`, `1e-3`. The Unicode minus sign
/// is accepted in place of `-`.
pub fn parse_number(tok: &str) -> std::result::Result<BigRational, String> {
    let t = tok.trim().replace('\u{2212}', "-");
    if t.is_empty() {
        return Err("empty coordinate".into());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {tok:?}"))?;
        let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in {tok:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {tok:?}"));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(k) => {
            let e: i32 = t[k + 1..].parse().map_err(|_| format!("bad exponent in {tok:?}"))?;
            (&t[..k], e)
        }
        None => (t.as_str(), 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let all = format!("{int_part}{frac_part}");
    if all.is_empty() || !all.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("not a number: {tok:?}"));
    }
    let mut v = BigRational::from_integer(all.parse::<BigInt>().unwrap());
    let shift = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    if shift >= 0 {
        v *= scale;
    } else {
        v /= scale;
    }
    Ok(if neg { -v } else { v })
}

fn narrow(pts: &[Point<BigRational>]) -> Option<Vec<Point<i128>>> {
    let limit = BigInt::from(INT_LIMIT);
    let one = |v: &BigRational| -> Option<i128> {
        (v.is_integer() && v.numer().abs() <= limit).then(|| v.numer().to_i128().unwrap())
    };
    pts.iter().map(|p| Some(Point::new(one(&p.x)?, one(&p.y)?))).collect()
}

fn finish(reds: Vec<Point<BigRational>>, blues: Vec<Point<BigRational>>) -> Result<AnyInstance> {
    if reds.is_empty() {
        return Err(Error::NoRedPoints);
    }
    Ok(match (narrow(&reds), narrow(&blues)) {
        (Some(r), Some(b)) => AnyInstance::Int(Instance::new(r, b)),
        _ => AnyInstance::Rational(Instance::new(reds, blues)),
    })
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_csv(text: &str) -> Result<AnyInstance> {
    let (mut reds, mut blues) = (Vec::new(), Vec::new());
    let mut seen_row = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let row = raw.trim_end_matches('\r').trim();
        if row.is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        let first = !seen_row;
        seen_row = true;
        if fields.len() != 3 {
            if first && fields.iter().any(|f| parse_number(f).is_err()) {
                continue;
            }
            return Err(parse_error(line, format!("expected 3 fields, found {}", fields.len())));
        }
        let x = parse_number(fields[1]);
        let y = parse_number(fields[2]);
        let color = fields[0].to_ascii_uppercase();
        if first && color != "R" && color != "B" && (x.is_err() || y.is_err()) {
            continue; // header
        }
        let p = Point::new(x.map_err(|m| parse_error(line, m))?, y.map_err(|m| parse_error(line, m))?);
        match color.as_str() {
            "R" => reds.push(p),
            "B" => blues.push(p),
            _ => return Err(parse_error(line, format!("unknown color {:?}", fields[0]))),
        }
    }
    finish(reds, blues)
}

fn json_points(v: Option<&Value>, key: &str) -> Result<Vec<Point<BigRational>>> {
    let Some(v) = v else {
        return Ok(Vec::new());
    };
    let arr = v.as_array().ok_or_else(|| parse_error(1, format!("{key:?} must be an array")))?;
    let coord = |c: &Value| -> std::result::Result<BigRational, String> {
        match c {
            Value::Number(n) => parse_number(&n.to_string()),
            Value::String(s) => parse_number(s),
            other => Err(format!("bad coordinate {other}")),
        }
    };
    arr.iter()
        .enumerate()
        .map(|(i, p)| {
            let err = |m: String| parse_error(1, format!("{key}[{i}]: {m}"));
            match p.as_array().map(Vec::as_slice) {
                Some([x, y]) => Ok(Point::new(coord(x).map_err(err)?, coord(y).map_err(err)?)),
                _ => Err(err("expected [x, y]".into())),
            }
        })
        .collect()
}

fn parse_json(text: &str) -> Result<AnyInstance> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| parse_error(1, "expected a JSON object"))?;
    finish(json_points(obj.get("red"), "red")?, json_points(obj.get("blue"), "blue")?)
}

/// Parse an instance from CSV or JSON text (JSON when it starts with `{`).
pub fn parse_points(text: &str) -> Result<AnyInstance> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_csv(text)
    }
}

/// Canonical CSV dump: a header, reds, then blues, in input order.
pub fn dump_instance<T: Scalar>(inst: &Instance<T>) -> String {
    let mut s = String::from("color,x,y\n");
    for (c, pts) in [("R", &inst.reds), ("B", &inst.blues)] {
        for p in pts.iter() {
            let _ = writeln!(s, "{c},{},{}", p.x, p.y);
        }
    }
    s
}

pub fn dump_any(inst: &AnyInstance) -> String {
    match inst {
        AnyInstance::Int(i) => dump_instance(i),
        AnyInstance::Rational(i) => dump_instance(i),
    }
}

/// SHA-256 of the canonical dump, hex encoded.
pub fn instance_hash<T: Scalar>(inst: &Instance<T>) -> String {
    let mut h = Sha256::new();
    let mut line = String::new();
    for (c, pts) in [("R", &inst.reds), ("B", &inst.blues)] {
        for p in pts.iter() {
            line.clear();
            let _ = writeln!(line, "{c},{},{}", p.x, p.y);
            h.update(line.as_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Svg,
}

fn rect_json<T: Scalar>(r: &AxisRect<T>) -> Value {
    json!({
        "xmin": r.xmin.to_string(),
        "ymin": r.ymin.to_string(),
        "xmax": r.xmax.to_string(),
        "ymax": r.ymax.to_string(),
    })
}

fn support_json<T: Scalar>(side: Side, s: &Support<T>) -> Value {
    match s {
        Support::Blue(p) => json!({"side": side.name(), "kind": "blue", "x": p.x.to_string(), "y": p.y.to_string()}),
        Support::Wall(w) => json!({"side": side.name(), "kind": "wall", "wall": w.name()}),
    }
}

fn case_name(c: CaseTag) -> String {
    match c {
        CaseTag::Corner => "corner".into(),
        CaseTag::Pinwheel => "pinwheel".into(),
        CaseTag::Diagonal(d) => format!("diagonal {}", d.name()),
    }
}

fn directions(sides: &[Side]) -> Vec<&'static str> {
    sides.iter().map(|s| s.name()).collect()
}

pub fn solution_json<T: Scalar>(sol: &Solution<T>) -> Value {
    match (&sol.status, &sol.best) {
        (Status::Bounded, Some(best)) => {
            let area = best.rect.area();
            json!({
                "status": "bounded",
                "rect": rect_json(&best.rect),
                "area": area.to_string(),
                "area_approx": area.to_f64(),
                "forced_blue": sol.forced_blue,
                "supports": Side::ALL.iter().map(|&s| support_json(s, best.support(s))).collect::<Vec<_>>(),
                "case": best.case.number(),
                "case_kind": case_name(best.case),
                "smin": rect_json(&sol.smin),
                "smax": sol.smax.as_ref().map(rect_json),
            })
        }
        (Status::Unbounded(sides), _) => json!({"status": "unbounded", "directions": directions(sides)}),
        (Status::Bounded, None) => unreachable!("bounded solution without a rectangle"),
    }
}

fn fmt_rect<T: Scalar>(r: &AxisRect<T>) -> String {
    format!("{}\t{}\t{}\t{}", r.xmin, r.ymin, r.xmax, r.ymax)
}

/// Render a solution. SVG needs the points too, so it takes the instance.
pub fn emit_solution<T: Scalar>(inst: &Instance<T>, sol: &Solution<T>, format: Format) -> String {
    match format {
        Format::Json => format!("{:#}\n", solution_json(sol)),
        Format::Tsv => match (&sol.status, &sol.best) {
            (Status::Bounded, Some(b)) => format!(
                "bounded\t{}\t{}\t{}\t{}\n",
                fmt_rect(&b.rect),
                b.rect.area(),
                sol.forced_blue,
                case_name(b.case)
            ),
            (Status::Unbounded(s), _) => format!("unbounded\t{}\n", directions(s).join(",")),
            _ => unreachable!("bounded solution without a rectangle"),
        },
        Format::Svg => render_svg(inst, &sol.smin, sol.smax.as_ref(), sol.rect().into_iter().collect::<Vec<_>>().as_slice()),
    }
}

/// Render the result of an all-optima query.
pub fn emit_all<T: Scalar>(inst: &Instance<T>, rects: &[AxisRect<T>], format: Format) -> String {
    let area = rects.first().map(AxisRect::area);
    match format {
        Format::Json => {
            let v = json!({
                "status": "bounded",
                "count": rects.len(),
                "area": area.as_ref().map(ToString::to_string),
                "area_approx": area.as_ref().and_then(ToPrimitive::to_f64),
                "rects": rects.iter().map(rect_json).collect::<Vec<_>>(),
            });
            format!("{v:#}\n")
        }
        Format::Tsv => rects.iter().map(|r| format!("{}\t{}\n", fmt_rect(r), r.area())).collect(),
        Format::Svg => {
            let smin = crate::bounding::compute_smin(&inst.reds).expect("reds checked by the caller");
            let refs: Vec<&AxisRect<T>> = rects.iter().collect();
            render_svg(inst, &smin, None, &refs)
        }
    }
}

fn unbounded_json(sides: &[Side]) -> String {
    format!("{:#}\n", json!({"status": "unbounded", "directions": directions(sides)}))
}

const SVG_SIZE: f64 = 640.0;
const SVG_MARGIN: f64 = 24.0;

/// Points as circles (red filled, blue hollow), smin dashed, smax dotted,
/// optima solid.
pub fn render_svg<T: Scalar>(inst: &Instance<T>, smin: &AxisRect<T>, smax: Option<&AxisRect<T>>, optima: &[&AxisRect<T>]) -> String {
    let f = |v: &T| v.to_f64().unwrap_or(0.0);
    let mut xs: Vec<f64> = inst.reds.iter().chain(&inst.blues).map(|p| f(&p.x)).collect();
    let mut ys: Vec<f64> = inst.reds.iter().chain(&inst.blues).map(|p| f(&p.y)).collect();
    for r in smax.into_iter().chain(optima.iter().copied()) {
        xs.extend([f(&r.xmin), f(&r.xmax)]);
        ys.extend([f(&r.ymin), f(&r.ymax)]);
    }
    let lo = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1, y0, y1) = (lo(&xs), hi(&xs), lo(&ys), hi(&ys));
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let k = (SVG_SIZE - 2.0 * SVG_MARGIN) / span;
    let px = |x: f64| SVG_MARGIN + (x - x0) * k;
    let py = |y: f64| SVG_SIZE - SVG_MARGIN - (y - y0) * k;

    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">\n"
    );
    let mut rect = |r: &AxisRect<T>, style: &str| {
        let _ = writeln!(
            s,
            "  <rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"none\" {style}/>",
            px(f(&r.xmin)),
            py(f(&r.ymax)),
            (f(&r.xmax) - f(&r.xmin)) * k,
            (f(&r.ymax) - f(&r.ymin)) * k
        );
    };
    if let Some(m) = smax {
        rect(m, "stroke=\"gray\" stroke-dasharray=\"2 3\"");
    }
    rect(smin, "stroke=\"gray\" stroke-dasharray=\"6 3\"");
    for r in optima {
        rect(r, "stroke=\"black\" stroke-width=\"1.5\"");
    }
    for p in &inst.reds {
        let _ = writeln!(s, "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"red\"/>", px(f(&p.x)), py(f(&p.y)));
    }
    for p in &inst.blues {
        let _ = writeln!(
            s,
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"none\" stroke=\"blue\"/>",
            px(f(&p.x)),
            py(f(&p.y))
        );
    }
    s.push_str("</svg>\n");
    s
}

// ---- benchmark ----

#[derive(Debug, Clone, Serialize)]
pub struct BenchConfig {
    /// Blue counts to time.
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub presorted: bool,
    pub reds: usize,
    /// Timed runs per (size, seed).
    pub reps: usize,
    /// Untimed runs before those, to fault in pages and warm caches.
    pub warmup: usize,
    /// Blues are drawn from `[-range, range]`, reds from an eighth of it.
    pub range: i64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![1 << 16, 1 << 17, 1 << 18],
            seeds: vec![1],
            presorted: true,
            reds: 1000,
            reps: 3,
            warmup: 1,
            range: 1_000_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub blues: usize,
    pub reds: usize,
    pub median_secs: f64,
    pub min_secs: f64,
    pub max_secs: f64,
    pub samples: usize,
    pub instance_hashes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DoublingRatio {
    pub from: usize,
    pub to: usize,
    pub time_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub rows: Vec<BenchRow>,
    pub ratios: Vec<DoublingRatio>,
    /// Largest `(max - min) / median` over the rows. Timing differences
    /// below this fraction are not meaningful.
    pub noise_floor: f64,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn table(&self) -> String {
        let mut s = format!(
            "{:>10} {:>6} {:>12} {:>12} {:>12} {:>8}\n",
            "blues", "reds", "median_ms", "min_ms", "max_ms", "samples"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:>10} {:>6} {:>12.3} {:>12.3} {:>12.3} {:>8}",
                r.blues,
                r.reds,
                r.median_secs * 1e3,
                r.min_secs * 1e3,
                r.max_secs * 1e3,
                r.samples
            );
        }
        for d in &self.ratios {
            let _ = writeln!(s, "ratio {} -> {}: {:.3}", d.from, d.to, d.time_ratio);
        }
        let _ = writeln!(
            s,
            "mode: {}; noise floor: {:.1}%",
            if self.config.presorted { "presorted" } else { "unsorted" },
            self.noise_floor * 100.0
        );
        s
    }
}

pub fn bench_instance(cfg: &BenchConfig, m: usize, seed: u64) -> Result<Instance<i128>> {
    let r = cfg.range;
    let mut inst = gen_random_with(cfg.reds, m, seed, (-r / 8, r / 8), (-r, r))?;
    if cfg.presorted {
        inst.sort_blues_by_x();
    }
    Ok(inst)
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Time `solve_one` (or the presorted entry point) for every size. Runs are
/// sequential so they do not compete for cores, and each round visits every
/// size once so a slow spell on the machine hits all sizes alike.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchReport> {
    if cfg.sizes.is_empty() || cfg.seeds.is_empty() || cfg.reps == 0 || cfg.reds == 0 || cfg.range < 8 {
        return Err(Error::InvalidArgument("benchmark needs sizes, seeds, reps, reds and range >= 8".into()));
    }
    let solve = |inst: &Instance<i128>| if cfg.presorted { solve_one_presorted(inst) } else { solve_one(inst) };
    let mut times: Vec<Vec<f64>> = vec![Vec::new(); cfg.sizes.len()];
    let mut hashes: Vec<Vec<String>> = vec![Vec::new(); cfg.sizes.len()];
    for &seed in &cfg.seeds {
        let insts = cfg
            .sizes
            .iter()
            .map(|&m| bench_instance(cfg, m, seed))
            .collect::<Result<Vec<_>>>()?;
        for (k, inst) in insts.iter().enumerate() {
            hashes[k].push(instance_hash(inst));
            for _ in 0..cfg.warmup {
                std::hint::black_box(solve(inst)?);
            }
        }
        for _ in 0..cfg.reps {
            for (k, inst) in insts.iter().enumerate() {
                let t = Instant::now();
                let sol = solve(inst)?;
                times[k].push(t.elapsed().as_secs_f64());
                std::hint::black_box(sol);
            }
        }
    }
    let rows: Vec<BenchRow> = cfg
        .sizes
        .iter()
        .zip(times)
        .zip(hashes)
        .map(|((&m, mut t), h)| BenchRow {
            blues: m,
            reds: cfg.reds,
            min_secs: t.iter().copied().fold(f64::INFINITY, f64::min),
            max_secs: t.iter().copied().fold(0.0, f64::max),
            median_secs: median(&mut t),
            samples: t.len(),
            instance_hashes: h,
        })
        .collect();
    let ratios = rows
        .windows(2)
        .map(|w| DoublingRatio {
            from: w[0].blues,
            to: w[1].blues,
            time_ratio: w[1].median_secs / w[0].median_secs.max(1e-12),
        })
        .collect();
    let noise_floor = rows
        .iter()
        .map(|r| (r.max_secs - r.min_secs) / r.median_secs.max(1e-12))
        .fold(0.0, f64::max);
    Ok(BenchReport {
        config: cfg.clone(),
        rows,
        ratios,
        noise_floor,
    })
}

// ---- verify ----

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub count: u64,
    pub first_seed: u64,
    pub max_reds: usize,
    pub max_blues: usize,
    /// Coordinates in `[-range, range]`.
    pub range: i64,
    /// Also compare the all-optima sets.
    pub all: bool,
    pub threads: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            count: 1000,
            first_seed: 0,
            max_reds: 20,
            max_blues: 30,
            range: 6,
            all: true,
            threads: 4,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: u64,
    pub bounded: u64,
    pub failures: Vec<String>,
}

/// The instance `verify` uses for `seed`.
pub fn verify_instance(cfg: &VerifyConfig, seed: u64) -> Result<Instance<i128>> {
    let n = 1 + (seed as usize) % cfg.max_reds.max(1);
    let m = (seed as usize / cfg.max_reds.max(1)) % (cfg.max_blues + 1);
    gen_random(n, m, seed, (-cfg.range, cfg.range))
}

/// Compare the solver with the brute force on one instance. `Ok(true)` when
/// bounded, `Err` describes the first disagreement.
pub fn check_against_oracle<T: Scalar>(inst: &Instance<T>, all: bool) -> std::result::Result<bool, String> {
    let sol = solve_one(inst).map_err(|e| e.to_string())?;
    let oracle = oracle_best(inst).map_err(|e| e.to_string())?;
    let bounded = match &oracle {
        OracleResult::Unbounded(sides) => {
            if sol.status != Status::Unbounded(sides.clone()) {
                return Err(format!("oracle unbounded {sides:?}, solver {:?}", sol.status));
            }
            false
        }
        OracleResult::Bounded { area, min_blue, .. } => {
            let Some(rect) = sol.rect() else {
                return Err(format!("solver unbounded {:?}, oracle bounded", sol.status));
            };
            if sol.area.as_ref() != Some(area) {
                return Err(format!("area {:?} vs oracle {area}", sol.area));
            }
            if sol.forced_blue != *min_blue || count_open_interior(rect, &inst.blues) != *min_blue {
                return Err(format!("blue count {} vs oracle {min_blue}", sol.forced_blue));
            }
            if !inst.reds.iter().all(|p| contains_closed(rect, p)) {
                return Err(format!("{rect} misses a red point"));
            }
            if !is_maximal(rect, sol.smax.as_ref().expect("bounded"), &inst.blues) {
                return Err(format!("{rect} is not maximal"));
            }
            true
        }
    };
    if all && bounded {
        let mine = solve_all(inst).map_err(|e| e.to_string())?;
        let theirs = oracle_all(inst).map_err(|e| e.to_string())?;
        if mine != theirs {
            return Err(format!("all optima differ: {} vs oracle {}", mine.len(), theirs.len()));
        }
    }
    Ok(bounded)
}

/// Solver against oracle on `count` generated instances, split over threads.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.max_reds == 0 || cfg.range < 0 {
        return Err(Error::InvalidArgument("verify needs max_reds >= 1 and range >= 0".into()));
    }
    let threads = cfg.threads.max(1) as u64;
    let parts: Vec<Result<VerifyReport>> = std::thread::scope(|sc| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                sc.spawn(move || {
                    let mut rep = VerifyReport::default();
                    let mut k = t;
                    while k < cfg.count {
                        let seed = cfg.first_seed + k;
                        let inst = verify_instance(cfg, seed)?;
                        rep.checked += 1;
                        match check_against_oracle(&inst, cfg.all) {
                            Ok(b) => rep.bounded += b as u64,
                            Err(e) => rep.failures.push(format!("seed {seed}: {e}")),
                        }
                        k += threads;
                    }
                    Ok(rep)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verify worker panicked")).collect()
    });
    let mut total = VerifyReport::default();
    for p in parts {
        let p = p?;
        total.checked += p.checked;
        total.bounded += p.bounded;
        total.failures.extend(p.failures);
    }
    total.failures.sort();
    Ok(total)
}

// ---- command line ----

pub const EXIT_OK: i32 = 0;
/// `verify` found a disagreement.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNBOUNDED: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "boxsep", version, about = "Maximum separating rectangles for red and blue points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance read from a CSV or JSON file.
    Solve(SolveArgs),
    /// Write a generated instance as CSV.
    Gen(GenArgs),
    /// Time the solver on random instances of growing size.
    Bench(BenchArgs),
    /// Check the solver against the brute force on random instances.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Input file, `-` for stdin.
    #[arg(long, short, default_value = "-")]
    pub input: String,
    /// Report every optimal rectangle.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Blues are already sorted by x.
    #[arg(long)]
    pub presorted: bool,
    /// Exit with status 3 when no rectangle is bounded.
    #[arg(long)]
    pub require_bounded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    OmegaM,
    Fap,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    /// Red points (random).
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Blue points (random, omega-m).
    #[arg(long, default_value_t = 20)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coordinate bound for random instances.
    #[arg(long, default_value_t = 10)]
    pub range: i64,
    #[arg(long, default_value = "1")]
    pub x0: String,
    #[arg(long, default_value = "1")]
    pub y0: String,
    /// Comma separated values in [0, 1] (fap).
    #[arg(long, value_delimiter = ',')]
    pub values: Vec<String>,
    /// Number of random values when --values is absent (fap).
    #[arg(long, default_value_t = 10)]
    pub len: usize,
    #[arg(long, default_value_t = 100)]
    pub max_den: i64,
    /// Output file instead of stdout.
    #[arg(long, short)]
    pub output: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Blue counts, e.g. `2^16,2^17,2^18` or `65536`.
    #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "2^16,2^17,2^18")]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub seeds: Vec<u64>,
    #[arg(long)]
    pub presorted: bool,
    #[arg(long, default_value_t = 1000)]
    pub reds: usize,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    /// Print JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    #[arg(long, default_value_t = 30)]
    pub max_m: usize,
    #[arg(long, default_value_t = 6)]
    pub range: i64,
    /// Skip the all-optima comparison.
    #[arg(long)]
    pub best_only: bool,
    #[arg(long, default_value_t = 4)]
    pub threads: usize,
}

/// `2^k` or a plain count.
pub fn parse_size(s: &str) -> std::result::Result<usize, String> {
    let s = s.trim();
    match s.split_once('^') {
        Some(("2", k)) => {
            let k: u32 = k.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            1usize.checked_shl(k).filter(|_| k < usize::BITS).ok_or_else(|| format!("{s} is too large"))
        }
        Some(_) => Err(format!("only powers of two are supported: {s:?}")),
        None => s.parse().map_err(|_| format!("not a size: {s:?}")),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::NoRedPoints => EXIT_PARSE,
        Error::Unbounded(_) => EXIT_UNBOUNDED,
        _ => EXIT_USAGE,
    }
}

fn read_input(path: &str) -> std::result::Result<String, String> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map(|_| s).map_err(|e| format!("cannot read {path}: {e}"))
}

fn solve_typed<T: Scalar>(inst: &Instance<T>, a: &SolveArgs) -> Result<(String, bool)> {
    if a.all {
        return match solve_all(inst) {
            Ok(rects) => Ok((emit_all(inst, &rects, a.format), true)),
            Err(Error::Unbounded(sides)) => {
                let text = match a.format {
                    Format::Json => unbounded_json(&sides),
                    Format::Tsv => format!("unbounded\t{}\n", directions(&sides).join(",")),
                    Format::Svg => render_svg(inst, &crate::bounding::compute_smin(&inst.reds)?, None, &[]),
                };
                Ok((text, false))
            }
            Err(e) => Err(e),
        };
    }
    let sol = if a.presorted { solve_one_presorted(inst)? } else { solve_one(inst)? };
    Ok((emit_solution(inst, &sol, a.format), sol.is_bounded()))
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match read_input(&a.input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let res = parse_points(&text).and_then(|inst| match &inst {
        AnyInstance::Int(i) => solve_typed(i, a),
        AnyInstance::Rational(i) => solve_typed(i, a),
    });
    match res {
        Ok((text, bounded)) => {
            let _ = out.write_all(text.as_bytes());
            if a.require_bounded && !bounded {
                EXIT_UNBOUNDED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn gen_text(a: &GenArgs) -> Result<String> {
    match a.kind {
        GenKind::Random => {
            if a.range < 0 {
                return Err(Error::InvalidArgument("range must be non-negative".into()));
            }
            Ok(dump_instance(&gen_random(a.n, a.m, a.seed, (-a.range, a.range))?))
        }
        GenKind::OmegaM => {
            let num = |s: &str| parse_number(s).map_err(Error::InvalidArgument);
            Ok(dump_instance(&gen_omega_m(a.m, &num(&a.x0)?, &num(&a.y0)?)?))
        }
        GenKind::Fap => {
            let values = if a.values.is_empty() {
                if a.max_den < 1 || (a.len as i64) > a.max_den + 1 {
                    return Err(Error::InvalidArgument("need len <= max-den + 1 and max-den >= 1".into()));
                }
                random_unit_rationals(a.len, a.seed, a.max_den)
            } else {
                a.values
                    .iter()
                    .map(|v| parse_number(v).map_err(Error::InvalidArgument))
                    .collect::<Result<Vec<_>>>()?
            };
            Ok(dump_instance(&gen_fap(&values)?))
        }
    }
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match gen_text(a) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match &a.output {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write {path}: {e}");
                EXIT_USAGE
            }
        },
        None => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
    }
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = BenchConfig {
        sizes: a.sizes.clone(),
        seeds: a.seeds.clone(),
        presorted: a.presorted,
        reds: a.reds,
        reps: a.reps,
        ..BenchConfig::default()
    };
    match run_benchmark(&cfg) {
        Ok(rep) => {
            let text = if a.json { rep.to_json() } else { rep.table() };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = VerifyConfig {
        count: a.count,
        first_seed: a.seed,
        max_reds: a.max_n,
        max_blues: a.max_m,
        range: a.range,
        all: !a.best_only,
        threads: a.threads,
    };
    match run_verify(&cfg) {
        Ok(rep) => {
            for f in &rep.failures {
                let _ = writeln!(err, "{f}");
            }
            let _ = writeln!(
                out,
                "checked {} instances ({} bounded), {} failures",
                rep.checked,
                rep.bounded,
                rep.failures.len()
            );
            if rep.failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parse `args` (program name first) and run the command. Returns the exit
/// status: 0 ok, 2 unreadable input, 3 unbounded under `--require-bounded`,
/// 4 bad arguments, 1 when `verify` finds a disagreement.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match &cli.command {
        Command::Solve(a) => cmd_solve(a, out, err),
        Command::Gen(a) => cmd_gen(a, out, err),
        Command::Bench(a) => cmd_bench(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_number(s).unwrap()
    }

    fn w_csv() -> &'static str {
        "color,x,y\nR,0,0\nR,2,0\nR,1,1\nR,1,-1\nB,1,3\nB,1,-3\nB,4,0\nB,-2,0\nB,3,2\n"
    }

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn temp_file(name: &str, body: &str) -> String {
        let p = std::env::temp_dir().join(format!("boxsep-{}-{name}", std::process::id()));
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn numbers() {
        assert_eq!(q("12"), BigRational::from_integer(12.into()));
        assert_eq!(q("\u{2212}3/4"), BigRational::new((-3).into(), 4.into()));
        assert_eq!(q("2.5"), BigRational::new(5.into(), 2.into()));
        assert_eq!(q("-.5"), BigRational::new((-1).into(), 2.into()));
        assert_eq!(q("1e-3"), BigRational::new(1.into(), 1000.into()));
        assert_eq!(q("1.5E2"), BigRational::from_integer(150.into()));
        for bad in ["", "x", "1/0", "1.2.3", "--1", "1/", "e5"] {
            assert!(parse_number(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn csv_examples() {
        let AnyInstance::Int(i) = parse_points("R,0,0\nB,1,3\n").unwrap() else { panic!() };
        assert_eq!((i.reds.len(), i.blues.len()), (1, 1));
        let AnyInstance::Rational(i) = parse_points("B,1/2,\u{2212}3/4\nR,0,0\n").unwrap() else { panic!() };
        assert_eq!(i.blues[0], Point::new(q("1/2"), q("-3/4")));
        assert!(matches!(parse_points("G,0,0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points("R,0,0\nB,1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_points("R,0,0\n\nB,1,z\n"), Err(Error::Parse { line: 3, .. })));
        assert_eq!(parse_points("B,1,1\n"), Err(Error::NoRedPoints));
        assert_eq!(parse_points("color,x,y\n"), Err(Error::NoRedPoints));
    }

    #[test]
    fn crlf_header_and_case() {
        let a = parse_points("Color,X,Y\r\nr,0,0\r\nb,1,3\r\n").unwrap();
        let b = parse_points("R,0,0\nB,1,3").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn huge_integers_go_rational() {
        let AnyInstance::Rational(_) = parse_points("R,0,0\nB,9223372036854775807,1\n").unwrap() else {
            panic!()
        };
    }

    #[test]
    fn json_input() {
        let a = parse_points(r#"{"red": [[0, 0], [2, 0], [1, 1], [1, -1]], "blue": [[1, 3], [1, -3], [4, 0], [-2, 0], ["3", "2"]]}"#)
            .unwrap();
        assert_eq!(a, parse_points(w_csv()).unwrap());
        let AnyInstance::Rational(r) = parse_points(r#"{"red": [[0.5, "1/3"]]}"#).unwrap() else { panic!() };
        assert_eq!(r.reds[0], Point::new(q("1/2"), q("1/3")));
        assert!(matches!(parse_points("{\"red\": [[0]]}"), Err(Error::Parse { .. })));
        assert!(matches!(parse_points("{\n\"red\": [[0, 0]\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn dump_round_trip() {
        let a = parse_points(w_csv()).unwrap();
        assert_eq!(dump_any(&a), w_csv());
        assert_eq!(parse_points(&dump_any(&a)).unwrap(), a);
        let b = parse_points("R,1/2,0\nB,-7/3,5\n").unwrap();
        assert_eq!(parse_points(&dump_any(&b)).unwrap(), b);
    }

    #[test]
    fn w_json() {
        let AnyInstance::Int(inst) = parse_points(w_csv()).unwrap() else { panic!() };
        let sol = solve_one(&inst).unwrap();
        let v: Value = serde_json::from_str(&emit_solution(&inst, &sol, Format::Json)).unwrap();
        assert_eq!(v["status"], "bounded");
        assert_eq!(v["area"], "30");
        assert_eq!(v["area_approx"], 30.0);
        assert_eq!(v["forced_blue"], 0);
        assert_eq!(v["supports"].as_array().unwrap().len(), 4);
        for k in ["xmin", "ymin", "xmax", "ymax"] {
            assert!(v["rect"][k].is_string());
        }
        let tsv = emit_solution(&inst, &sol, Format::Tsv);
        assert_eq!(tsv.lines().count(), 1);
        assert!(tsv.starts_with("bounded\t"));
    }

    #[test]
    fn unbounded_json() {
        let inst = Instance::<i128>::from_coords(&[(0, 0)], &[(0, 1), (5, 5)]);
        let sol = solve_one(&inst).unwrap();
        let v: Value = serde_json::from_str(&emit_solution(&inst, &sol, Format::Json)).unwrap();
        assert_eq!(v["status"], "unbounded");
        assert_eq!(v["directions"], json!(["right", "bottom", "left"]));
        assert!(v.get("rect").is_none());
        assert_eq!(emit_solution(&inst, &sol, Format::Tsv), "unbounded\tright,bottom,left\n");
    }

    #[test]
    fn svg_structure() {
        let AnyInstance::Int(inst) = parse_points(w_csv()).unwrap() else { panic!() };
        let sol = solve_one(&inst).unwrap();
        let svg = emit_solution(&inst, &sol, Format::Svg);
        assert_eq!(svg.matches("<circle").count(), 9);
        assert_eq!(svg.matches("<rect").count(), 3);
        assert_eq!(svg.matches("fill=\"red\"").count(), 4);
        let open = Instance::<i128>::from_coords(&[(0, 0), (1, 1)], &[]);
        let svg = emit_solution(&open, &solve_one(&open).unwrap(), Format::Svg);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<rect").count(), 1);
    }

    #[test]
    fn sizes() {
        assert_eq!(parse_size("2^18"), Ok(1 << 18));
        assert_eq!(parse_size("1000"), Ok(1000));
        assert!(parse_size("3^2").is_err());
        assert!(parse_size("2^99").is_err());
    }

    #[test]
    fn bench_structure_and_determinism() {
        let cfg = BenchConfig {
            sizes: vec![256, 512, 1024],
            seeds: vec![5, 6],
            reds: 20,
            reps: 2,
            ..BenchConfig::default()
        };
        let a = run_benchmark(&cfg).unwrap();
        let b = run_benchmark(&cfg).unwrap();
        assert_eq!(a.rows.len(), 3);
        assert_eq!(a.ratios.len(), 2);
        assert!(a.rows.iter().all(|r| r.samples == 4 && r.min_secs <= r.median_secs && r.median_secs <= r.max_secs));
        let hashes = |r: &BenchReport| r.rows.iter().map(|x| x.instance_hashes.clone()).collect::<Vec<_>>();
        assert_eq!(hashes(&a), hashes(&b));
        assert_ne!(a.rows[0].instance_hashes[0], a.rows[0].instance_hashes[1]);
        let v: Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert!(a.table().contains("ratio 256 -> 512"));
        assert!(run_benchmark(&BenchConfig { sizes: vec![], ..cfg }).is_err());
    }

    #[test]
    fn verify_small_batch() {
        let cfg = VerifyConfig { count: 200, threads: 3, ..VerifyConfig::default() };
        let rep = run_verify(&cfg).unwrap();
        assert_eq!(rep.checked, 200);
        assert!(rep.failures.is_empty(), "{:?}", rep.failures);
        assert!(rep.bounded > 0);
    }

    #[test]
    fn exit_codes() {
        let good = temp_file("w.csv", w_csv());
        let (code, out, _) = run_args(&["boxsep", "solve", "--input", &good]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"area\": \"30\""));
        let (code, out, _) = run_args(&["boxsep", "solve", "--input", &good, "--all", "--format", "tsv"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 2);

        let bad = temp_file("bad.csv", "R,0,0\nG,0,0\n");
        let (code, _, err) = run_args(&["boxsep", "solve", "--input", &bad]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("line 2"), "{err}");

        let open = temp_file("open.csv", "R,0,0\nB,0,1\n");
        assert_eq!(run_args(&["boxsep", "solve", "--input", &open]).0, EXIT_OK);
        assert_eq!(run_args(&["boxsep", "solve", "--input", &open, "--require-bounded"]).0, EXIT_UNBOUNDED);
        assert_eq!(run_args(&["boxsep", "solve", "--input", &open, "--all", "--require-bounded"]).0, EXIT_UNBOUNDED);

        assert_eq!(run_args(&["boxsep", "solve", "--format", "xml"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["boxsep", "frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["boxsep", "solve", "--input", "/nonexistent/x.csv"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["boxsep", "gen", "--kind", "omega-m", "--m", "4"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["boxsep", "--help"]).0, EXIT_OK);

        let unsorted = temp_file("unsorted.csv", "R,0,0\nB,3,0\nB,-3,0\n");
        assert_eq!(run_args(&["boxsep", "solve", "--input", &unsorted, "--presorted"]).0, EXIT_USAGE);
        for f in [good, bad, open, unsorted] {
            let _ = std::fs::remove_file(f);
        }
    }

    #[test]
    fn gen_kinds() {
        let (code, out, _) = run_args(&["boxsep", "gen", "--kind", "random", "--n", "3", "--m", "5", "--seed", "7"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 9);
        let (code, out, _) = run_args(&["boxsep", "gen", "--kind", "omega-m", "--m", "8", "--x0", "2", "--y0", "3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(parse_points(&out).unwrap().blues(), 8);
        let (code, out, _) = run_args(&["boxsep", "gen", "--kind", "fap", "--values", "1/5,9/10,1"]);
        assert_eq!(code, EXIT_OK);
        let inst = parse_points(&out).unwrap();
        assert_eq!((inst.reds(), inst.blues()), (5, 6));
        assert_eq!(run_args(&["boxsep", "gen", "--kind", "fap", "--values", "1/5,2"]).0, EXIT_USAGE);
    }
}
