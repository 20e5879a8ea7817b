//! Subcommand handlers.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::io::{self, Write};

use serde::Serialize;
use statevol::metrics::{sqrt_det_g_monotone, sqrt_det_g_pullback, AdmissibleFunction, LownerMeasure, MonotoneFunction};
use statevol::quadrature::{Classified, Endpoint, ExponentProbe, QuadratureVerdict};
use statevol::qubit::{
    qubit_volume_monotone, qubit_volume_pullback, reproduce_table, table_reference, transpose_dichotomy, volume_from_measure, Reference,
    TableRecord, TransposePair,
};
use statevol::sampling::{estimate_functional_mc, estimate_volume_mc, sample_states, write_csv, McConfig, SampleSet};
use statevol::volumes::{expected_det_alpha, volume_lebesgue};
use statevol::{Error, ScalarField, SelfAdjointState};

use crate::format::sig;
use crate::{Cli, Command, Format, MeasureArg, QubitSource};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(io::Error),
    Infinite(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::ZeroAcceptance { .. } | Error::NonFiniteIntegrand { .. } | Error::NoConvergence { .. }) => 3,
            CliError::Core(_) => 2,
            CliError::Io(_) => 1,
            CliError::Infinite(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Infinite(what) => write!(f, "infinite volume for {what} (--require-finite)"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = Result<(), CliError>;

struct Out {
    format: Format,
    digits: usize,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn num(&self, x: f64) -> String {
        sig(x, self.digits)
    }

    fn opt(&self, x: Option<f64>) -> String {
        x.map(|v| self.num(v)).unwrap_or_default()
    }

    fn json<T: Serialize>(&mut self, value: &T) -> CliResult {
        serde_json::to_writer_pretty(&mut self.stdout, value)?;
        writeln!(self.stdout)?;
        Ok(())
    }

    fn line(&mut self, s: impl AsRef<str>) -> CliResult {
        writeln!(self.stdout, "{}", s.as_ref())?;
        Ok(())
    }

    fn csv(&mut self, header: &[&str], rows: &[Vec<String>]) -> CliResult {
        self.line(header.join(","))?;
        for r in rows {
            let cells: Vec<String> = r.iter().map(|c| csv_cell(c)).collect();
            self.line(cells.join(","))?;
        }
        Ok(())
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn run(cli: &Cli, streams: usize) -> CliResult {
    let mut out = Out { format: cli.global.format, digits: cli.global.digits as usize, stdout: io::stdout().lock() };
    let require_finite = cli.global.require_finite;
    match &cli.command {
        Command::Volume { field, n } => volume(&mut out, (*field).into(), *n),
        Command::ExpectedDet { field, n, alpha } => expected_det(&mut out, (*field).into(), *n, *alpha),
        Command::Sample { field, n, count, seed } => sample(&mut out, (*field).into(), *n, *count, *seed, streams),
        Command::Estimate { field, n, samples, seed, metric, pullback } => {
            let config = McConfig::new(*seed).with_streams(streams);
            estimate(&mut out, (*field).into(), *n, *samples, &config, metric.as_deref(), pullback.as_deref())
        }
        Command::Qubit { source, field } => {
            let q = qubit(source, (*field).into())?;
            print_qubit(&mut out, &q)?;
            finite_or_fail(require_finite, &q)
        }
        Command::Classify { source, field } => {
            let q = qubit(source, (*field).into())?;
            print_classify(&mut out, &q)?;
            finite_or_fail(require_finite, &q)
        }
        Command::Table { transpose: false } => table(&mut out, require_finite),
        Command::Table { transpose: true } => transpose(&mut out, require_finite),
    }
}

#[derive(Serialize)]
struct VolumeOut {
    field: ScalarField,
    n: usize,
    coeff_num: String,
    coeff_den: String,
    pi_pow: u32,
    decimal: f64,
}

fn volume(out: &mut Out, field: ScalarField, n: usize) -> CliResult {
    let v = volume_lebesgue(field, n)?;
    let rec = VolumeOut {
        field,
        n,
        coeff_num: v.coeff.numer().to_string(),
        coeff_den: v.coeff.denom().to_string(),
        pi_pow: v.pi_pow,
        decimal: v.value(),
    };
    match out.format {
        Format::Json => out.json(&rec),
        Format::Csv => {
            let row = vec![field.to_string(), n.to_string(), rec.coeff_num, rec.coeff_den, rec.pi_pow.to_string(), out.num(rec.decimal)];
            out.csv(&["field", "n", "coeff_num", "coeff_den", "pi_pow", "decimal"], &[row])
        }
        Format::Text => {
            let exact = v.to_string();
            let decimal = out.num(rec.decimal);
            if exact == decimal {
                out.line(exact)
            } else {
                out.line(format!("{exact} ≈ {decimal}"))
            }
        }
    }
}

#[derive(Serialize)]
struct ExpectedDetOut {
    field: ScalarField,
    n: usize,
    alpha: f64,
    value: f64,
    exact: Option<String>,
}

fn expected_det(out: &mut Out, field: ScalarField, n: usize, alpha: f64) -> CliResult {
    let m = expected_det_alpha(field, n, alpha)?;
    let rec = ExpectedDetOut { field, n, alpha, value: m.value, exact: m.exact.as_ref().map(|e| e.to_string()) };
    match out.format {
        Format::Json => out.json(&rec),
        Format::Csv => {
            let row = vec![field.to_string(), n.to_string(), out.num(alpha), out.num(rec.value), rec.exact.clone().unwrap_or_default()];
            out.csv(&["field", "n", "alpha", "value", "exact"], &[row])
        }
        Format::Text => {
            let decimal = out.num(rec.value);
            match rec.exact {
                Some(e) if e != decimal => out.line(format!("{decimal} = {e}")),
                _ => out.line(decimal),
            }
        }
    }
}

fn sample(out: &mut Out, field: ScalarField, n: usize, count: u64, seed: u64, streams: usize) -> CliResult {
    let config = McConfig::new(seed).with_streams(streams);
    let states = sample_states(field, n, count, &config)?;
    match out.format {
        Format::Json => {
            let set = SampleSet { field, n, seed, streams, states: states.iter().map(Into::into).collect() };
            out.json(&set)
        }
        Format::Csv | Format::Text => {
            write_csv(&mut out.stdout, field, n, &states)?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct EstimateOut {
    value: f64,
    std_error: f64,
    n_samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_accepted: Option<u64>,
    seed: u64,
}

fn estimate(
    out: &mut Out,
    field: ScalarField,
    n: usize,
    samples: u64,
    config: &McConfig,
    metric: Option<&str>,
    pullback: Option<&str>,
) -> CliResult {
    let probe = || SelfAdjointState::maximally_mixed(field, n.max(1));
    let est = match (metric, pullback) {
        (Some(id), _) => {
            let f: MonotoneFunction = id.parse()?;
            sqrt_det_g_monotone(&f, &probe())?;
            functional(field, n, samples, config, move |s| sqrt_det_g_monotone(&f, s).unwrap_or(f64::NAN))?
        }
        (None, Some(id)) => {
            let h: AdmissibleFunction = id.parse()?;
            sqrt_det_g_pullback(&h, &probe())?;
            functional(field, n, samples, config, move |s| sqrt_det_g_pullback(&h, s).unwrap_or(f64::NAN))?
        }
        (None, None) => estimate_volume_mc(field, n, samples, config)?,
    };
    let rec =
        EstimateOut { value: est.value, std_error: est.std_error, n_samples: est.n_samples, n_accepted: est.n_accepted, seed: config.seed };
    match out.format {
        Format::Json => out.json(&rec),
        Format::Csv => {
            let row = vec![
                out.num(rec.value),
                out.num(rec.std_error),
                rec.n_samples.to_string(),
                rec.n_accepted.map(|a| a.to_string()).unwrap_or_default(),
                rec.seed.to_string(),
            ];
            out.csv(&["value", "std_error", "n_samples", "n_accepted", "seed"], &[row])
        }
        Format::Text => {
            let mut s = format!("{} ± {} (n_samples = {}", out.num(rec.value), sig(rec.std_error, 3), rec.n_samples);
            if let Some(a) = rec.n_accepted {
                s.push_str(&format!(", accepted = {a}"));
            }
            s.push_str(&format!(", seed = {}, streams = {})", rec.seed, config.streams));
            out.line(s)
        }
    }
}

fn functional(
    field: ScalarField,
    n: usize,
    samples: u64,
    config: &McConfig,
    phi: impl Fn(&SelfAdjointState) -> f64 + Sync + Send,
) -> Result<statevol::sampling::McEstimate, CliError> {
    let est = estimate_functional_mc(field, n, samples, config, phi)?;
    if let Some(w) = &est.warning {
        eprintln!("statevol: warning: {w}");
    }
    Ok(est.integral)
}

struct QubitResult {
    id: String,
    field: ScalarField,
    classified: Classified,
    reference: Option<Reference>,
}

fn qubit(source: &QubitSource, field: ScalarField) -> Result<QubitResult, CliError> {
    if let Some(id) = &source.metric {
        let f: MonotoneFunction = id.parse()?;
        let classified = qubit_volume_monotone(field, &f)?;
        let reference = f.kind().filter(|_| !f.is_transposed()).map(|k| table_reference(field, k));
        return Ok(QubitResult { id: f.id(), field, classified, reference });
    }
    if let Some(id) = &source.pullback {
        let h: AdmissibleFunction = id.parse()?;
        let classified = qubit_volume_pullback(field, &h)?;
        let reference = match (&h, field) {
            (AdmissibleFunction::Identity, ScalarField::Complex) => Some(closed("sqrt(2)*pi/3", SQRT_2 * PI / 3.0)),
            (AdmissibleFunction::Identity, ScalarField::Real) => Some(closed("pi/2", PI / 2.0)),
            _ => None,
        };
        return Ok(QubitResult { id: h.id(), field, classified, reference });
    }
    let m = source.measure.expect("clap enforces one source");
    if field != ScalarField::Complex {
        return Err(Error::Unsupported("the kernel representation covers the complex field".into()).into());
    }
    let (mu, reference) = match m {
        MeasureArg::DeltaHalf => (LownerMeasure::point_mass_half(), closed("pi^2", PI * PI)),
        MeasureArg::Uniform => (LownerMeasure::uniform(), closed("2*pi^2", 2.0 * PI * PI)),
        MeasureArg::Arcsine => (LownerMeasure::arcsine(), Reference::Infinite),
    };
    let classified = volume_from_measure(&mu)?;
    Ok(QubitResult { id: format!("measure:{}", mu.name()), field, classified, reference: Some(reference) })
}

fn closed(label: &str, value: f64) -> Reference {
    Reference::Approx { label: label.into(), value }
}

fn finite_or_fail(require_finite: bool, q: &QubitResult) -> CliResult {
    if require_finite && !q.classified.verdict.is_finite() {
        return Err(CliError::Infinite(format!("{} over the {} field", q.id, q.field)));
    }
    Ok(())
}

fn endpoint_text(e: Endpoint) -> &'static str {
    match e {
        Endpoint::Zero => "t→0",
        Endpoint::One => "t→1",
    }
}

#[derive(Serialize)]
struct QubitOut<'a> {
    id: &'a str,
    field: ScalarField,
    verdict: &'static str,
    value: Option<f64>,
    err_est: Option<f64>,
    exponent: Option<f64>,
    endpoint: Option<Endpoint>,
    closed_form: Option<String>,
    rel_error: Option<f64>,
    warnings: &'a [String],
}

impl<'a> QubitOut<'a> {
    fn new(q: &'a QubitResult) -> Self {
        let (verdict, value, err_est, exponent, endpoint) = match q.classified.verdict {
            QuadratureVerdict::Finite(r) => ("finite", Some(r.value), Some(r.err_est), None, None),
            QuadratureVerdict::Infinite { exponent, endpoint } => ("infinite", None, None, Some(exponent), Some(endpoint)),
        };
        let reference_value = q.reference.as_ref().and_then(Reference::value);
        QubitOut {
            id: &q.id,
            field: q.field,
            verdict,
            value,
            err_est,
            exponent,
            endpoint,
            closed_form: q.reference.as_ref().map(Reference::label),
            rel_error: value.zip(reference_value).map(|(v, r)| (v - r).abs() / r.abs()),
            warnings: &q.classified.warnings,
        }
    }
}

fn infinite_text(exponent: f64, endpoint: Endpoint) -> String {
    if exponent.is_finite() {
        format!("infinite (exponent ≈ {exponent:.2} at {})", endpoint_text(endpoint))
    } else {
        format!("infinite (point mass at {})", endpoint_text(endpoint))
    }
}

fn print_qubit(out: &mut Out, q: &QubitResult) -> CliResult {
    let rec = QubitOut::new(q);
    match out.format {
        Format::Json => out.json(&rec),
        Format::Csv => {
            let row = vec![
                rec.id.to_string(),
                rec.field.to_string(),
                rec.verdict.to_string(),
                out.opt(rec.value),
                out.opt(rec.exponent),
                rec.closed_form.clone().unwrap_or_default(),
                rec.rel_error.map(|e| sig(e, 3)).unwrap_or_default(),
            ];
            out.csv(&["id", "field", "verdict", "value", "exponent", "closed_form", "rel_error"], &[row])
        }
        Format::Text => {
            let mut s = match q.classified.verdict {
                QuadratureVerdict::Finite(r) => out.num(r.value),
                QuadratureVerdict::Infinite { exponent, endpoint } => infinite_text(exponent, endpoint),
            };
            match (&rec.closed_form, rec.value) {
                (Some(label), Some(_)) if label != "?<inf" => s.push_str(&format!(" ({label})")),
                (Some(label), Some(_)) => s.push_str(&format!(" (reference {label})")),
                _ => {}
            }
            out.line(s)?;
            for w in rec.warnings {
                eprintln!("statevol: warning: {w}");
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ProbeOut {
    endpoint: Endpoint,
    #[serde(flatten)]
    probe: ExponentProbe,
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    #[serde(flatten)]
    result: QubitOut<'a>,
    probes: Vec<ProbeOut>,
}

fn print_classify(out: &mut Out, q: &QubitResult) -> CliResult {
    let probes: Vec<ProbeOut> = q.classified.probes.iter().map(|&(endpoint, probe)| ProbeOut { endpoint, probe }).collect();
    match out.format {
        Format::Json => out.json(&ClassifyOut { result: QubitOut::new(q), probes }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = probes
                .iter()
                .map(|p| {
                    vec![
                        q.id.clone(),
                        q.field.to_string(),
                        if q.classified.verdict.is_finite() { "finite" } else { "infinite" }.to_string(),
                        endpoint_text(p.endpoint).to_string(),
                        out.num(p.probe.exponent),
                        out.num(p.probe.slopes[0]),
                        out.num(p.probe.slopes[1]),
                        p.probe.conclusive.to_string(),
                    ]
                })
                .collect();
            out.csv(&["id", "field", "verdict", "endpoint", "exponent", "slope_near", "slope_far", "conclusive"], &rows)
        }
        Format::Text => match q.classified.verdict {
            QuadratureVerdict::Infinite { exponent, endpoint } => out.line(infinite_text(exponent, endpoint)),
            QuadratureVerdict::Finite(r) => {
                let evidence: Vec<String> =
                    probes.iter().map(|p| format!("exponent ≈ {:.2} at {}", p.probe.exponent, endpoint_text(p.endpoint))).collect();
                out.line(format!("finite ({}), volume {}", evidence.join(", "), out.num(r.value)))
            }
        },
    }
}

const TABLE_HEADER: [&str; 9] = ["id", "params", "field", "verdict", "value", "exponent", "closed_form", "rel_error", "flags"];

fn table(out: &mut Out, require_finite: bool) -> CliResult {
    let rows = reproduce_table()?;
    let records: Vec<TableRecord> = rows.iter().flat_map(|r| r.records()).collect();
    match out.format {
        Format::Json => out.json(&records)?,
        Format::Csv | Format::Text => {
            let cells: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        r.params.clone(),
                        r.field.to_string(),
                        r.verdict.to_string(),
                        out.opt(r.value),
                        r.exponent.map(|e| format!("{e:.4}")).unwrap_or_default(),
                        r.closed_form.clone(),
                        r.rel_error.map(|e| sig(e, 3)).unwrap_or_default(),
                        r.flags.clone(),
                    ]
                })
                .collect();
            if out.format == Format::Csv {
                out.csv(&TABLE_HEADER, &cells)?;
            } else {
                aligned(out, &TABLE_HEADER, &cells)?;
            }
        }
    }
    match records.iter().find(|r| r.verdict != "finite") {
        Some(r) if require_finite => Err(CliError::Infinite(format!("{} over the {} field", r.id, r.field))),
        _ => Ok(()),
    }
}

fn transpose(out: &mut Out, require_finite: bool) -> CliResult {
    let pairs: Vec<TransposePair> = transpose_dichotomy()?;
    match out.format {
        Format::Json => out.json(&pairs)?,
        Format::Csv | Format::Text => {
            let header = ["id", "volume", "transpose_volume", "self_transpose"];
            let cells: Vec<Vec<String>> = pairs
                .iter()
                .map(|p| vec![p.id.clone(), out.num(p.volume), out.num(p.transpose_volume), p.self_transpose.to_string()])
                .collect();
            if out.format == Format::Csv {
                out.csv(&header, &cells)?;
            } else {
                aligned(out, &header, &cells)?;
            }
        }
    }
    match pairs.iter().find(|p| !p.transpose_volume.is_finite()) {
        Some(p) if require_finite => Err(CliError::Infinite(format!("{}^T over the complex field", p.id))),
        _ => Ok(()),
    }
}

fn aligned(out: &mut Out, header: &[&str], rows: &[Vec<String>]) -> CliResult {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let render = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    out.line(render(header.to_vec()))?;
    for r in rows {
        out.line(render(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}
