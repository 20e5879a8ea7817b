use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::integrate_split;

/// A density on `(0, 1)` in split form `ρ(z, 1 - z)`.
pub type Density = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

const SYMMETRY_TOL: f64 = 1e-10;
const MASS_TOL: f64 = 1e-8;

/// A symmetric probability measure on `[0, 1]`: finitely many atoms plus an
/// optional density. It represents the function `x ↦ ∫ x / ((1-t)x + t) dμ(t)`.
#[derive(Clone)]
pub struct LownerMeasure {
    name: String,
    atoms: Vec<(f64, f64)>,
    density: Option<Density>,
}

impl LownerMeasure {
    /// Builds the measure and checks unit mass and `μ([0,s]) = μ([1-s,1])`.
    pub fn new(
        name: impl Into<String>,
        atoms: Vec<(f64, f64)>,
        density: Option<impl Fn(f64, f64) -> f64 + Send + Sync + 'static>,
    ) -> Result<Self> {
        let m = Self { name: name.into(), atoms, density: density.map(|d| Arc::new(d) as Density) };
        m.validate()?;
        Ok(m)
    }

    pub fn point_mass_half() -> Self {
        Self { name: "delta:0.5".into(), atoms: vec![(0.5, 1.0)], density: None }
    }

    /// Equal atoms at `z` and `1 - z`.
    pub fn atom_pair(z: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&z) {
            return Err(Error::domain(format!("atom location {z} outside [0, 1]")));
        }
        let atoms = if z == 0.5 { vec![(0.5, 1.0)] } else { vec![(z, 0.5), (1.0 - z, 0.5)] };
        Ok(Self { name: format!("pair:{z}"), atoms, density: None })
    }

    pub fn uniform() -> Self {
        Self { name: "uniform".into(), atoms: Vec::new(), density: Some(Arc::new(|_, _| 1.0)) }
    }

    /// `1 / (π √(z(1-z)))`, the measure representing `√x`.
    pub fn arcsine() -> Self {
        Self { name: "arcsine".into(), atoms: Vec::new(), density: Some(Arc::new(|z, zc| 1.0 / (PI * (z * zc).sqrt()))) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&Density> {
        self.density.as_ref()
    }

    /// The image under `z ↦ 1 - z`.
    pub fn mirrored(&self) -> Self {
        let density = self.density.clone().map(|d| Arc::new(move |z, zc| d(zc, z)) as Density);
        Self { name: format!("{}~", self.name), atoms: self.atoms.iter().map(|&(z, w)| (1.0 - z, w)).collect(), density }
    }

    pub fn total_mass(&self) -> Result<f64> {
        let atoms: f64 = self.atoms.iter().map(|a| a.1).sum();
        let cont = match &self.density {
            Some(d) => integrate_split(|z, zc| d(z, zc), 1e-12, 1e-14)?.value,
            None => 0.0,
        };
        Ok(atoms + cont)
    }

    pub fn validate(&self) -> Result<()> {
        for &(z, w) in &self.atoms {
            if !(0.0..=1.0).contains(&z) || !(w > 0.0) {
                return Err(Error::domain(format!("invalid atom ({z}, {w})")));
            }
            let mirrored = self.atoms.iter().filter(|a| (a.0 - (1.0 - z)).abs() <= 1e-12).map(|a| a.1).sum::<f64>();
            let here = self.atoms.iter().filter(|a| (a.0 - z).abs() <= 1e-12).map(|a| a.1).sum::<f64>();
            if (mirrored - here).abs() > SYMMETRY_TOL {
                return Err(Error::domain(format!("measure `{}` is not symmetric: atom at {z} has no mirror", self.name)));
            }
        }
        if let Some(d) = &self.density {
            for i in 1..200 {
                let z = i as f64 / 400.0;
                let (a, b) = (d(z, 1.0 - z), d(1.0 - z, z));
                if !(a >= 0.0) || (a - b).abs() > SYMMETRY_TOL * a.abs().max(1.0) {
                    return Err(Error::domain(format!("density of `{}` is not symmetric at z = {z}", self.name)));
                }
            }
        }
        let mass = self.total_mass()?;
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(Error::domain(format!("measure `{}` has total mass {mass}, expected 1", self.name)));
        }
        Ok(())
    }

    /// `∫ 1 / ((1-t)x + t) dμ(t)`, which is `1 / f(x)` for the function `f`
    /// whose transpose the measure represents.
    pub fn inverse_generator(&self, x: f64) -> Result<f64> {
        let atoms: f64 = self.atoms.iter().map(|&(t, w)| w / ((1.0 - t) * x + t)).sum();
        let cont = match &self.density {
            Some(d) => integrate_split(|t, tc| d(t, tc) / (tc * x + t), 1e-12, 1e-14)?.value,
            None => 0.0,
        };
        Ok(atoms + cont)
    }
}

impl fmt::Debug for LownerMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LownerMeasure")
            .field("name", &self.name)
            .field("atoms", &self.atoms)
            .field("density", &self.density.is_some())
            .finish()
    }
}
