//! Quadratic transforms and recorded blow-up sequences.

use serde::Serialize;

use crate::error::Result;
use crate::gf::FieldElement;

use super::bivar::BivarPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// H(X, XY) / X^d
    Theta(u32),
    /// H(XY, Y) / Y^d
    Eta(u32),
    /// H(X, alpha X + Y)
    Shear(FieldElement),
    /// H(X, Y + b)
    ShiftY(FieldElement),
}

impl Transform {
    pub fn apply(&self, h: &BivarPoly) -> Result<BivarPoly> {
        match *self {
            Transform::Theta(d) => h.theta(d),
            Transform::Eta(d) => h.eta(d),
            Transform::Shear(a) => Ok(h.shear(a)),
            Transform::ShiftY(b) => Ok(h.shift_y(b)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Transform::Theta(d) => format!("theta/{d}"),
            Transform::Eta(d) => format!("eta/{d}"),
            Transform::Shear(_) => "shear".into(),
            Transform::ShiftY(_) => "shift".into(),
        }
    }
}

/// A sequence of transforms taking `start` to `end`, with named markers
/// (e.g. the B_i values that selected the shears).
#[derive(Clone, Debug)]
pub struct BlowupTrace {
    pub start: BivarPoly,
    pub steps: Vec<Transform>,
    pub markers: Vec<(String, FieldElement)>,
    pub end: BivarPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceSummary {
    pub steps: Vec<String>,
    pub end_multiplicity: u32,
}

pub fn replay(start: &BivarPoly, steps: &[Transform]) -> Result<BivarPoly> {
    let mut h = start.clone();
    for s in steps {
        h = s.apply(&h)?;
    }
    Ok(h)
}

impl BlowupTrace {
    pub fn record(start: BivarPoly, steps: Vec<Transform>, markers: Vec<(String, FieldElement)>) -> Result<BlowupTrace> {
        let end = replay(&start, &steps)?;
        Ok(BlowupTrace { start, steps, markers, end })
    }

    /// Re-runs the steps and checks the recorded end polynomial.
    pub fn verify(&self) -> bool {
        replay(&self.start, &self.steps).map(|e| e == self.end).unwrap_or(false)
    }

    pub fn summary(&self) -> TraceSummary {
        let mut steps: Vec<String> = Vec::new();
        let mut last: Option<(String, u32)> = None;
        for s in &self.steps {
            let l = s.label();
            match &mut last {
                Some((prev, c)) if *prev == l => *c += 1,
                _ => {
                    if let Some((p, c)) = last.take() {
                        steps.push(if c > 1 { format!("{p} x{c}") } else { p });
                    }
                    last = Some((l, 1));
                }
            }
        }
        if let Some((p, c)) = last {
            steps.push(if c > 1 { format!("{p} x{c}") } else { p });
        }
        TraceSummary { steps, end_multiplicity: self.end.ord().unwrap_or(0) }
    }
}
