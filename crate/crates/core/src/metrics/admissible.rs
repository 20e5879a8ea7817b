use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A strictly monotone `h` on `(0, 1)` whose pull-back of the flat metric
/// through `D ↦ h(D)` defines a metric on the states.
#[derive(Clone)]
pub enum AdmissibleFunction {
    Identity,
    Log,
    /// `h(x) = p · x^{1/p}`.
    Power(f64),
    Custom {
        name: String,
        h: RealFn,
        dh: RealFn,
    },
}

impl AdmissibleFunction {
    pub fn power(p: f64) -> Result<Self> {
        if !p.is_finite() || p == 0.0 {
            return Err(Error::domain(format!("power parameter must be finite and nonzero, got {p}")));
        }
        Ok(AdmissibleFunction::Power(p))
    }

    pub fn custom(
        name: impl Into<String>,
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
        dh: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        AdmissibleFunction::Custom { name: name.into(), h: Arc::new(h), dh: Arc::new(dh) }
    }

    pub fn id(&self) -> String {
        match self {
            AdmissibleFunction::Identity => "identity".into(),
            AdmissibleFunction::Log => "log".into(),
            AdmissibleFunction::Power(p) => format!("power:{p}"),
            AdmissibleFunction::Custom { name, .. } => name.clone(),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            AdmissibleFunction::Identity => x,
            AdmissibleFunction::Log => x.ln(),
            AdmissibleFunction::Power(p) => p * x.powf(1.0 / p),
            AdmissibleFunction::Custom { h, .. } => h(x),
        }
    }

    pub fn deriv(&self, x: f64) -> f64 {
        match self {
            AdmissibleFunction::Identity => 1.0,
            AdmissibleFunction::Log => 1.0 / x,
            AdmissibleFunction::Power(p) => x.powf(1.0 / p - 1.0),
            AdmissibleFunction::Custom { dh, .. } => dh(x),
        }
    }

    /// True when `h'` is finite and nonzero on an interior grid.
    pub fn is_admissible(&self) -> bool {
        (1..1000).map(|i| i as f64 / 1000.0).all(|x| {
            let d = self.deriv(x);
            d.is_finite() && d != 0.0
        })
    }
}

impl fmt::Debug for AdmissibleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdmissibleFunction({})", self.id())
    }
}

impl fmt::Display for AdmissibleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for AdmissibleFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(':') {
            None if s.eq_ignore_ascii_case("identity") => Ok(AdmissibleFunction::Identity),
            None if s.eq_ignore_ascii_case("log") => Ok(AdmissibleFunction::Log),
            Some((name, p)) if name.trim().eq_ignore_ascii_case("power") => {
                let p: f64 = p.trim().parse().map_err(|_| Error::UnknownId(s.to_string()))?;
                AdmissibleFunction::power(p)
            }
            _ => Err(Error::UnknownId(s.to_string())),
        }
    }
}
