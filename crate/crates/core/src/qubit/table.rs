use std::f64::consts::{PI, SQRT_2};

use num_rational::BigRational;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::ScalarField;
use crate::error::Result;
use crate::metrics::{monotone_catalog_swept, MonotoneFunction, MonotoneKind};
use crate::quadrature::{Classified, QuadratureVerdict};
use crate::special::ExactVolume;

use super::qubit_volume_monotone;

pub const TABLE_ALPHAS: [f64; 3] = [0.1, 0.25, 0.5];
pub const TABLE_BETAS: [f64; 3] = [0.1, 0.25, 0.4];
pub const TABLE_GAMMAS: [f64; 3] = [0.0, 0.25, 0.5];
/// Relative agreement required between a computed volume and its reference.
pub const TABLE_TOL: f64 = 5e-3;

/// What the literature table records for one cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reference {
    /// A closed form, with its exact `q·π^k` shape when it has one.
    Closed {
        label: String,
        value: f64,
        #[serde(skip)]
        exact: Option<ExactVolume>,
    },
    /// A decimal approximation, as printed.
    Approx {
        label: String,
        value: f64,
    },
    Infinite,
    /// Left open ("finite but unknown").
    Open,
}

impl Reference {
    fn closed(label: &str, value: f64) -> Self {
        Reference::Closed { label: label.into(), value, exact: None }
    }

    fn exact(num: i64, den: i64, pi_pow: u32) -> Self {
        let e = ExactVolume::new(BigRational::new(num.into(), den.into()), pi_pow);
        Reference::Closed { label: e.to_string(), value: e.value(), exact: Some(e) }
    }

    fn approx(value: f64) -> Self {
        Reference::Approx { label: format!("~{value}"), value }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            Reference::Closed { value, .. } | Reference::Approx { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Reference::Closed { label, .. } | Reference::Approx { label, .. } => label.clone(),
            Reference::Infinite => "inf".into(),
            Reference::Open => "?<inf".into(),
        }
    }
}

/// Table reference for `f` over `field`.
pub fn table_reference(field: ScalarField, kind: MonotoneKind) -> Reference {
    let complex = field == ScalarField::Complex;
    match kind {
        MonotoneKind::Sld if complex => Reference::exact(1, 1, 2),
        MonotoneKind::Sld => Reference::exact(2, 1, 1),
        MonotoneKind::Rld => Reference::Infinite,
        MonotoneKind::Km if complex => Reference::exact(2, 1, 2),
        MonotoneKind::Km => Reference::approx(8.298),
        MonotoneKind::Geo if complex => Reference::Infinite,
        MonotoneKind::Geo => Reference::exact(4, 1, 1),
        MonotoneKind::Wy if complex => Reference::closed("4pi(pi-2)", 4.0 * PI * (PI - 2.0)),
        MonotoneKind::Wy => Reference::closed("4pi(2-sqrt(2))", 4.0 * PI * (2.0 - SQRT_2)),
        MonotoneKind::Lm2 if complex => Reference::Infinite,
        MonotoneKind::Lm2 => Reference::approx(19.986),
        MonotoneKind::Lm3 if complex => Reference::exact(1, 2, 4),
        MonotoneKind::Lm3 => Reference::approx(11.51),
        MonotoneKind::Alpha(_) => Reference::Infinite,
        MonotoneKind::Beta(b) if complex => {
            let s = (b - b * b).sqrt();
            let v = PI * PI * (1.0 - 2.0 * s) / ((1.0 - 2.0 * b).powi(2) * s);
            Reference::closed("pi^2(1-2sqrt(b-b^2))/((1-2b)^2 sqrt(b-b^2))", v)
        }
        MonotoneKind::Beta(_) => Reference::Open,
        MonotoneKind::Gam(_) if complex => Reference::Infinite,
        MonotoneKind::Gam(_) => Reference::Open,
    }
}

/// One field of a table row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableCell {
    pub field: ScalarField,
    pub computed: Classified,
    pub reference: Reference,
    pub rel_error: Option<f64>,
    pub flags: Vec<&'static str>,
}

impl TableCell {
    /// Computed and reference agree: within [`TABLE_TOL`] for finite
    /// references, both infinite for infinite ones. Open cells always agree.
    pub fn agrees(&self) -> bool {
        match (&self.reference, &self.computed.verdict) {
            (Reference::Infinite, v) => !v.is_finite(),
            (Reference::Open, _) => true,
            (_, _) => self.rel_error.is_some_and(|e| e <= TABLE_TOL),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QubitVolumeRow {
    pub id: String,
    pub family: &'static str,
    pub param: Option<f64>,
    pub formula: &'static str,
    pub complex: TableCell,
    pub real: TableCell,
}

fn cell(field: ScalarField, f: &MonotoneFunction, kind: MonotoneKind) -> Result<TableCell> {
    let computed = qubit_volume_monotone(field, f)?;
    let reference = table_reference(field, kind);
    let rel_error = match (computed.verdict, reference.value()) {
        (QuadratureVerdict::Finite(r), Some(v)) => Some((r.value - v).abs() / v),
        _ => None,
    };
    let mut flags = Vec::new();
    if reference == Reference::Open {
        flags.push("reference_open");
        if !computed.verdict.is_finite() {
            flags.push("computed_infinite");
        }
    }
    if !computed.warnings.is_empty() {
        flags.push("warning");
    }
    let mut c = TableCell { field, computed, reference, rel_error, flags };
    if !c.agrees() {
        c.flags.push("mismatch");
    }
    Ok(c)
}

fn row(f: &MonotoneFunction) -> Result<QubitVolumeRow> {
    let kind = f.kind().expect("catalog rows have a kind");
    Ok(QubitVolumeRow {
        id: f.id(),
        family: kind.base_id(),
        param: kind.param(),
        formula: kind.formula(),
        complex: cell(ScalarField::Complex, f, kind)?,
        real: cell(ScalarField::Real, f, kind)?,
    })
}

/// Every catalog row for both fields, with α, β, γ swept over
/// [`TABLE_ALPHAS`], [`TABLE_BETAS`], [`TABLE_GAMMAS`]. Rows come out in
/// catalog order.
pub fn reproduce_table() -> Result<Vec<QubitVolumeRow>> {
    let functions = monotone_catalog_swept(&TABLE_ALPHAS, &TABLE_BETAS, &TABLE_GAMMAS)?;
    #[cfg(feature = "parallel")]
    let rows = functions.par_iter().map(row).collect();
    #[cfg(not(feature = "parallel"))]
    let rows = functions.iter().map(row).collect();
    rows
}

/// Flat record for CSV/JSON output, one per row and field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRecord {
    pub id: String,
    pub params: String,
    pub field: ScalarField,
    pub verdict: &'static str,
    pub value: Option<f64>,
    pub exponent: Option<f64>,
    pub closed_form: String,
    pub rel_error: Option<f64>,
    pub flags: String,
}

impl QubitVolumeRow {
    pub fn records(&self) -> [TableRecord; 2] {
        let rec = |c: &TableCell| {
            let (verdict, value, exponent) = match c.computed.verdict {
                QuadratureVerdict::Finite(r) => ("finite", Some(r.value), None),
                QuadratureVerdict::Infinite { exponent, .. } => ("infinite", None, Some(exponent)),
            };
            TableRecord {
                id: self.id.clone(),
                params: match (self.family, self.param) {
                    (fam, Some(p)) => format!("{}={p}", &fam[..1]),
                    _ => String::new(),
                },
                field: c.field,
                verdict,
                value,
                exponent,
                closed_form: c.reference.label(),
                rel_error: c.rel_error,
                flags: c.flags.join(";"),
            }
        };
        [rec(&self.complex), rec(&self.real)]
    }
}

/// Complex-field verdicts for `f` and its transpose `x / f(x)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransposePair {
    pub id: String,
    pub volume: f64,
    pub transpose_volume: f64,
    pub self_transpose: bool,
}

/// For each catalog function with a finite complex volume, the complex
/// volume of its transpose (`+∞` when divergent). This is evidence, not a
/// theorem: the expected pattern is that the transpose diverges unless `f`
/// is its own transpose.
pub fn transpose_dichotomy() -> Result<Vec<TransposePair>> {
    let mut out = Vec::new();
    for f in monotone_catalog_swept(&TABLE_ALPHAS, &TABLE_BETAS, &TABLE_GAMMAS)? {
        let v = qubit_volume_monotone(ScalarField::Complex, &f)?.verdict;
        if !v.is_finite() {
            continue;
        }
        let t = f.transpose();
        let tv = qubit_volume_monotone(ScalarField::Complex, &t)?.verdict;
        let self_transpose = (1..50).all(|i| {
            let x = 0.1 * i as f64;
            (t.eval(x) - f.eval(x)).abs() <= 1e-12 * f.eval(x)
        });
        out.push(TransposePair { id: f.id(), volume: v.value(), transpose_volume: tv.value(), self_transpose });
    }
    Ok(out)
}
