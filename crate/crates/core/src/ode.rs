//! Numerical return map of the Abel equation `dr/dθ = l̂(θ) r³ + m̂(θ) r²` over
//! one period, by classical fixed-step RK4.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::trig::TrigPoly;

/// Default escape bound on `|r|`.
pub const DEFAULT_BLOWUP_BOUND: f64 = 1e6;
pub const DEFAULT_STEPS: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub struct AbelInstance {
    pub l_hat: TrigPoly,
    pub m_hat: TrigPoly,
}

impl AbelInstance {
    pub fn new(l_hat: TrigPoly, m_hat: TrigPoly) -> Self {
        AbelInstance { l_hat, m_hat }
    }

    /// The equation whose moments `∫₀^θ l̂`, `∫₀^θ m̂` are `l − l(0)` and `m − m(0)`.
    pub fn from_moments(l: &TrigPoly, m: &TrigPoly) -> Self {
        AbelInstance::new(l.derivative(), m.derivative())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Error)]
#[error("solution left |r| ≤ bound near θ = {theta}")]
pub struct Blowup {
    pub theta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Converged,
    Blowup,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub r0: f64,
    /// `None` after a blowup.
    pub r_end: Option<f64>,
    pub displacement: Option<f64>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdeReport {
    pub samples: Vec<Sample>,
}

impl OdeReport {
    /// Largest `|r(2π) − r0|` over converged samples.
    pub fn max_displacement(&self) -> f64 {
        self.samples
            .iter()
            .filter_map(|s| s.displacement)
            .map(f64::abs)
            .fold(0.0, f64::max)
    }
}

/// Coefficients tabulated on the RK4 grid: `l̂`, `m̂` at `θ = j·h/2`.
struct Grid {
    h: f64,
    l: Vec<f64>,
    m: Vec<f64>,
}

impl Grid {
    fn new(inst: &AbelInstance, steps: usize) -> Self {
        let h = TAU / steps as f64;
        let nodes = 2 * steps + 1;
        let at = |f: &TrigPoly| (0..nodes).map(|j| f.eval(j as f64 * h / 2.0)).collect();
        Grid {
            h,
            l: at(&inst.l_hat),
            m: at(&inst.m_hat),
        }
    }

    fn field(&self, node: usize, r: f64) -> f64 {
        let r2 = r * r;
        self.l[node] * r2 * r + self.m[node] * r2
    }

    fn integrate(&self, r0: f64, bound: f64) -> Result<f64, Blowup> {
        let h = self.h;
        let mut r = r0;
        let steps = (self.l.len() - 1) / 2;
        for step in 0..steps {
            let j = 2 * step;
            let k1 = self.field(j, r);
            let k2 = self.field(j + 1, r + 0.5 * h * k1);
            let k3 = self.field(j + 1, r + 0.5 * h * k2);
            let k4 = self.field(j + 2, r + h * k3);
            r += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if !r.is_finite() || r.abs() > bound {
                return Err(Blowup {
                    theta: (step + 1) as f64 * h,
                });
            }
        }
        Ok(r)
    }
}

/// Fixed-step integrator configuration.
#[derive(Clone, Copy, Debug)]
pub struct Integrator {
    pub steps: usize,
    pub blowup_bound: f64,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator {
            steps: DEFAULT_STEPS,
            blowup_bound: DEFAULT_BLOWUP_BOUND,
        }
    }
}

impl Integrator {
    pub fn with_steps(steps: usize) -> Self {
        Integrator {
            steps: steps.max(1),
            ..Integrator::default()
        }
    }

    /// `r(2π)` for the solution with `r(0) = r0`.
    pub fn integrate(&self, inst: &AbelInstance, r0: f64) -> Result<f64, Blowup> {
        Grid::new(inst, self.steps.max(1)).integrate(r0, self.blowup_bound)
    }

    pub fn report(&self, inst: &AbelInstance, r0s: &[f64]) -> OdeReport {
        let grid = Grid::new(inst, self.steps.max(1));
        let samples = r0s
            .iter()
            .map(|&r0| match grid.integrate(r0, self.blowup_bound) {
                Ok(r_end) => Sample {
                    r0,
                    r_end: Some(r_end),
                    displacement: Some(r_end - r0),
                    status: Status::Converged,
                },
                Err(_) => Sample {
                    r0,
                    r_end: None,
                    displacement: None,
                    status: Status::Blowup,
                },
            })
            .collect();
        OdeReport { samples }
    }
}

pub fn integrate_abel(inst: &AbelInstance, r0: f64, steps: usize) -> Result<f64, Blowup> {
    Integrator::with_steps(steps).integrate(inst, r0)
}

pub fn poincare_report(inst: &AbelInstance, r0s: &[f64], steps: usize) -> OdeReport {
    Integrator::with_steps(steps).report(inst, r0s)
}
