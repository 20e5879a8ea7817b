use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Generators with a closed form. Parameters are stored as given.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MonotoneKind {
    Sld,
    Rld,
    Km,
    Geo,
    Wy,
    Lm2,
    Lm3,
    Alpha(f64),
    Beta(f64),
    Gam(f64),
}

impl MonotoneKind {
    /// The ten catalog families, parameterized ones at a representative value.
    pub const FAMILIES: [MonotoneKind; 10] = [
        MonotoneKind::Sld,
        MonotoneKind::Rld,
        MonotoneKind::Km,
        MonotoneKind::Geo,
        MonotoneKind::Wy,
        MonotoneKind::Lm2,
        MonotoneKind::Lm3,
        MonotoneKind::Alpha(0.25),
        MonotoneKind::Beta(0.25),
        MonotoneKind::Gam(0.25),
    ];

    pub fn base_id(&self) -> &'static str {
        match self {
            MonotoneKind::Sld => "sld",
            MonotoneKind::Rld => "rld",
            MonotoneKind::Km => "km",
            MonotoneKind::Geo => "geo",
            MonotoneKind::Wy => "wy",
            MonotoneKind::Lm2 => "lm2",
            MonotoneKind::Lm3 => "lm3",
            MonotoneKind::Alpha(_) => "alpha",
            MonotoneKind::Beta(_) => "beta",
            MonotoneKind::Gam(_) => "gam",
        }
    }

    pub fn param(&self) -> Option<f64> {
        match *self {
            MonotoneKind::Alpha(p) | MonotoneKind::Beta(p) | MonotoneKind::Gam(p) => Some(p),
            _ => None,
        }
    }

    pub fn formula(&self) -> &'static str {
        match self {
            MonotoneKind::Sld => "(1+x)/2",
            MonotoneKind::Rld => "2x/(1+x)",
            MonotoneKind::Km => "(x-1)/log x",
            MonotoneKind::Geo => "sqrt(x)",
            MonotoneKind::Wy => "(sqrt(x)+1)^2/4",
            MonotoneKind::Lm2 => "2 sqrt(x)(x-1)/((1+x) log x)",
            MonotoneKind::Lm3 => "2(x-1)^2/((1+x)(log x)^2)",
            MonotoneKind::Alpha(_) => "x/2 (1/(ax+1-a) + 1/((1-a)x+a))",
            MonotoneKind::Beta(_) => "2(bx+1-b)((1-b)x+b)/(x+1)",
            MonotoneKind::Gam(_) => "2x^(g+1/2)/(1+x^(2g))",
        }
    }

    fn check(self) -> Result<Self> {
        let bad = match self {
            MonotoneKind::Alpha(a) => !(a > 0.0 && a <= 0.5),
            MonotoneKind::Beta(b) => !(b > 0.0 && b < 0.5),
            MonotoneKind::Gam(g) => !(0.0..=0.5).contains(&g),
            _ => false,
        };
        if bad {
            let range = match self {
                MonotoneKind::Alpha(_) => "(0, 1/2]",
                MonotoneKind::Beta(_) => "(0, 1/2)",
                _ => "[0, 1/2]",
            };
            return Err(Error::domain(format!("{} parameter {} outside {range}", self.base_id(), self.param().unwrap())));
        }
        Ok(self)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            MonotoneKind::Sld => 0.5 * (1.0 + x),
            MonotoneKind::Rld => 2.0 * x / (1.0 + x),
            MonotoneKind::Km => km(x),
            MonotoneKind::Geo => x.sqrt(),
            MonotoneKind::Wy => 0.25 * (x.sqrt() + 1.0).powi(2),
            MonotoneKind::Lm2 => 2.0 * x.sqrt() / (1.0 + x) * km(x),
            MonotoneKind::Lm3 => 2.0 * km(x).powi(2) / (1.0 + x),
            MonotoneKind::Alpha(a) => 0.5 * x * (1.0 / (a * x + 1.0 - a) + 1.0 / ((1.0 - a) * x + a)),
            MonotoneKind::Beta(b) => 2.0 * (b * x + 1.0 - b) * ((1.0 - b) * x + b) / (x + 1.0),
            MonotoneKind::Gam(g) => {
                let x2g = x.powf(2.0 * g);
                2.0 * x.sqrt() * x.powf(g) / (1.0 + x2g)
            }
        }
    }
}

/// `(x - 1) / log x`, with its Taylor series near `x = 1`.
fn km(x: f64) -> f64 {
    let e = x - 1.0;
    if e.abs() < 1e-4 {
        1.0 + e * (0.5 + e * (-1.0 / 12.0 + e * (1.0 / 24.0 - e * 19.0 / 720.0)))
    } else if e.abs() < 0.5 {
        e / e.ln_1p()
    } else {
        e / x.ln()
    }
}

type Generator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Source {
    Catalog(MonotoneKind),
    Custom { name: String, f: Generator },
}

/// An operator monotone generator `f`, possibly transposed to `x / f(x)`.
#[derive(Clone)]
pub struct MonotoneFunction {
    source: Source,
    transposed: bool,
}

impl MonotoneFunction {
    pub fn new(kind: MonotoneKind) -> Result<Self> {
        Ok(Self { source: Source::Catalog(kind.check()?), transposed: false })
    }

    /// A user-supplied generator. It is taken on trust: positivity and the
    /// symmetry `f(x) = x f(1/x)` are checked by [`has_symmetry`](Self::has_symmetry) only on demand.
    pub fn custom(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { source: Source::Custom { name: name.into(), f: Arc::new(f) }, transposed: false }
    }

    pub fn kind(&self) -> Option<MonotoneKind> {
        match self.source {
            Source::Catalog(k) => Some(k),
            Source::Custom { .. } => None,
        }
    }

    pub fn is_transposed(&self) -> bool {
        self.transposed
    }

    pub fn transpose(&self) -> Self {
        Self { source: self.source.clone(), transposed: !self.transposed }
    }

    pub fn id(&self) -> String {
        let base = match &self.source {
            Source::Catalog(k) => match k.param() {
                Some(p) => format!("{}:{p}", k.base_id()),
                None => k.base_id().to_string(),
            },
            Source::Custom { name, .. } => name.clone(),
        };
        if self.transposed {
            format!("{base}^T")
        } else {
            base
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let base = |x: f64| match &self.source {
            Source::Catalog(k) => k.eval(x),
            Source::Custom { f, .. } => f(x),
        };
        if self.transposed {
            x / base(x)
        } else {
            base(x)
        }
    }

    /// Largest relative residual of `f(x) = x f(1/x)` over a log grid on `[1e-6, 1e6]`.
    pub fn symmetry_residual(&self) -> f64 {
        log_grid(1e-6, 1e6, 241)
            .map(|x| {
                let fx = self.eval(x);
                (fx - x * self.eval(1.0 / x)).abs() / fx.abs().max(1.0)
            })
            .fold(0.0, f64::max)
    }

    pub fn has_symmetry(&self) -> bool {
        self.symmetry_residual() <= 1e-12
    }
}

pub(crate) fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(move |i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
}

impl fmt::Debug for MonotoneFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonotoneFunction({})", self.id())
    }
}

impl fmt::Display for MonotoneFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for MonotoneFunction {
    type Err = Error;

    /// Accepts `sld`, `rld`, `km`, `geo`, `wy`, `lm2`, `lm3`, `alpha:A`,
    /// `beta:B`, `gam:G`, each optionally suffixed with `^T`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_suffix("^T") {
            return Ok(inner.parse::<MonotoneFunction>()?.transpose());
        }
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => {
                let v: f64 = p.trim().parse().map_err(|_| Error::UnknownId(s.to_string()))?;
                (n.trim(), Some(v))
            }
            None => (s, None),
        };
        let kind = match (name.to_ascii_lowercase().as_str(), param) {
            ("sld", None) => MonotoneKind::Sld,
            ("rld", None) => MonotoneKind::Rld,
            ("km", None) => MonotoneKind::Km,
            ("geo", None) => MonotoneKind::Geo,
            ("wy", None) => MonotoneKind::Wy,
            ("lm2", None) => MonotoneKind::Lm2,
            ("lm3", None) => MonotoneKind::Lm3,
            ("alpha", Some(p)) => MonotoneKind::Alpha(p),
            ("beta", Some(p)) => MonotoneKind::Beta(p),
            ("gam", Some(p)) => MonotoneKind::Gam(p),
            _ => return Err(Error::UnknownId(s.to_string())),
        };
        MonotoneFunction::new(kind)
    }
}

/// The catalog with every parameterized family at its representative value.
pub fn monotone_catalog() -> Vec<MonotoneFunction> {
    MonotoneKind::FAMILIES.iter().map(|&k| MonotoneFunction::new(k).unwrap()).collect()
}

/// The catalog with α, β, γ swept over the given values.
pub fn monotone_catalog_swept(alphas: &[f64], betas: &[f64], gammas: &[f64]) -> Result<Vec<MonotoneFunction>> {
    let mut out = Vec::new();
    for kind in MonotoneKind::FAMILIES {
        let values: &[f64] = match kind {
            MonotoneKind::Alpha(_) => alphas,
            MonotoneKind::Beta(_) => betas,
            MonotoneKind::Gam(_) => gammas,
            _ => {
                out.push(MonotoneFunction::new(kind)?);
                continue;
            }
        };
        for &p in values {
            let k = match kind {
                MonotoneKind::Alpha(_) => MonotoneKind::Alpha(p),
                MonotoneKind::Beta(_) => MonotoneKind::Beta(p),
                _ => MonotoneKind::Gam(p),
            };
            out.push(MonotoneFunction::new(k)?);
        }
    }
    Ok(out)
}
