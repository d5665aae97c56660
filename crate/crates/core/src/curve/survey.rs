//! Singular points of D_f: the affine origin, the point P = (0:1:0), and
//! the points (0, xi) of the chart G, grouped as S (xi in F_q), Q (xi fixed by
//! every q^k_i-power that fixes it at q^t) and R (the rest).
//!
//! Besides the generic branch count, two hand-derived transformation
//! sequences are replayed: one at R points when every k_i >= t, one at S_1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::numth::{gcd, lcm};
use crate::gf::{FieldCtx, FieldElement};
use crate::linpoly::LinPoly;

use super::bivar::BivarPoly;
use super::branches::{branches_at_origin, BranchCount};
use super::build::{build_df, build_g};
use super::transform::{BlowupTrace, TraceSummary, Transform};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Group {
    Origin,
    P,
    S,
    R,
    Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct BespokeCheck {
    pub sequence: String,
    pub predicted: u64,
    pub trace: Option<TraceSummary>,
    pub replay_ok: bool,
    /// Branches at the origin of the end polynomial.
    pub trace_branches: Option<BranchCount>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularPoint {
    pub group: Group,
    /// Y-coordinate xi in the chart G (absent for the origin and P).
    pub xi: Option<Vec<u64>>,
    pub multiplicity: u32,
    pub branches: BranchCount,
    pub bespoke: Option<BespokeCheck>,
    #[serde(skip)]
    pub bespoke_trace: Option<BlowupTrace>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    pub field: String,
    pub t: u32,
    pub k_max: u32,
    pub points: Vec<SingularPoint>,
    /// Number of rational affine points of D_f checked for singularity, and
    /// any singular ones other than the origin.
    pub affine_checked: u64,
    pub extra_affine_singular: Vec<(Vec<u64>, Vec<u64>)>,
}

fn qpow(q: u64, k: u32) -> u32 {
    q.pow(k) as u32
}

/// The working field: F_{q^n} extended to contain F_{q^|k_M - t|}.
pub fn survey_field(f: &LinPoly, t: u32, ext_bound: u32) -> Result<FieldCtx> {
    let ctx = f.ctx();
    let d = f.k_max().abs_diff(t);
    if d == 0 {
        return Err(Error::InvalidArgument("k_M equals t".into()));
    }
    let m = (lcm(ctx.n() as u64, d as u64) / ctx.n() as u64) as u32;
    if m > ext_bound {
        return Err(Error::BudgetExceeded(format!("xi needs extension degree {m} > {ext_bound}")));
    }
    ctx.extension(m)
}

fn vanishes(h: &BivarPoly, x: FieldElement, y: FieldElement) -> bool {
    let c = h.ctx();
    c.is_zero(h.eval(x, y)) && c.is_zero(h.partial_x().eval(x, y)) && c.is_zero(h.partial_y().eval(x, y))
}

/// B_i = A_i (xi^(q^t) - xi^(q^k_i)) for the terms below the top one.
pub fn b_values(f: &LinPoly, t: u32, xi: FieldElement) -> Vec<(u32, FieldElement)> {
    let e = f.ctx();
    let xt = e.frobenius(xi, t as i64);
    let terms = f.terms();
    terms[..terms.len() - 1]
        .iter()
        .map(|&(k, a)| (k, e.mul(a, e.sub(xt, e.frobenius(xi, k as i64)))))
        .collect()
}

fn finish(start: &BivarPoly, steps: Vec<Transform>, markers: Vec<(String, FieldElement)>, name: &str, predicted: u64, budget: u32) -> (BespokeCheck, Option<BlowupTrace>) {
    match BlowupTrace::record(start.clone(), steps, markers) {
        Ok(tr) => {
            let tb = branches_at_origin(&tr.end, budget).ok();
            (
                BespokeCheck {
                    sequence: name.into(),
                    predicted,
                    trace: Some(tr.summary()),
                    replay_ok: tr.verify(),
                    trace_branches: tb,
                    error: None,
                },
                Some(tr),
            )
        }
        Err(e) => (
            BespokeCheck {
                sequence: name.into(),
                predicted,
                trace: None,
                replay_ok: false,
                trace_branches: None,
                error: Some(e.to_string()),
            },
            None,
        ),
    }
}

/// Sequence for R points when every k_i >= t (i >= 1) and xi is outside F_{q^t}:
/// blocks of theta/q^t separated by shears Y -> alpha_j X + Y with
/// alpha_j^(q^t) = -B_(M_j), then eta/(q^t - 1).
pub fn unique_branch_trace(f: &LinPoly, t: u32, h: &BivarPoly, xi: FieldElement, budget: u32) -> (BespokeCheck, Option<BlowupTrace>) {
    let e = h.ctx();
    let q = e.q();
    let qt = qpow(q, t);
    let km = f.k_max();
    let bs = b_values(f, t, xi);
    let mut markers: Vec<(String, FieldElement)> = bs.iter().map(|&(k, b)| (format!("B[{k}]"), b)).collect();
    let mut chosen: Vec<(u32, FieldElement)> = bs.iter().skip(1).filter(|(_, b)| !e.is_zero(*b)).copied().collect();
    chosen.reverse();
    let mut steps = Vec::new();
    let push_theta = |steps: &mut Vec<Transform>, n: u64| {
        for _ in 0..n {
            steps.push(Transform::Theta(qt));
        }
    };
    if chosen.is_empty() {
        push_theta(&mut steps, q.pow(km - t) - 1);
    } else {
        let mut prev = km;
        for (j, &(k, b)) in chosen.iter().enumerate() {
            let u = (q.pow(prev) - q.pow(k)) / q.pow(t) - if j == 0 { 1 } else { 0 };
            push_theta(&mut steps, u);
            let alpha = e.frobenius(e.neg(b), -(t as i64));
            markers.push((format!("alpha[{}]", j + 1), alpha));
            steps.push(Transform::Shear(alpha));
            prev = k;
        }
        push_theta(&mut steps, q.pow(prev - t));
    }
    steps.push(Transform::Eta(qt - 1));
    finish(h, steps, markers, "unique-branch", 1, budget)
}

/// Sequence at S_1: theta/q^t repeated, then the remaining cone is read off.
pub fn s1_trace(f: &LinPoly, t: u32, h: &BivarPoly, budget: u32) -> (BespokeCheck, Option<BlowupTrace>) {
    let q = h.ctx().q();
    let km = f.k_max();
    let qt = qpow(q, t);
    let (reps, predicted) = if km % t == 0 {
        ((q.pow(km) - 1) / (qt as u64 - 1) - 1, qt as u64)
    } else {
        let s = km % t;
        (q.pow(s) * (q.pow(km - s) - 1) / (qt as u64 - 1), q.pow(gcd(s as u64, t as u64) as u32))
    };
    let steps = (0..reps).map(|_| Transform::Theta(qt)).collect();
    finish(h, steps, Vec::new(), "s1", predicted, budget)
}

/// Surveys the singular points of D_f for a normalised f of index t.
pub fn singularity_survey(f: &LinPoly, t: u32, ext_bound: u32, budget: u32) -> Result<SingularityReport> {
    let e = survey_field(f, t, ext_bound)?;
    let f = f.over(&e)?;
    let km = f.k_max();
    let df = build_df(&f, t)?;
    let g = build_g(&f, t)?;
    let mut points = Vec::new();

    let num = df.affine_part();
    let z = e.zero();
    if vanishes(&num, z, z) {
        points.push(SingularPoint {
            group: Group::Origin,
            xi: None,
            multiplicity: num.ord().unwrap_or(0),
            branches: branches_at_origin(&num, budget)?,
            bespoke: None,
            bespoke_trace: None,
        });
    }
    let py = df.chart_y()?;
    if vanishes(&py, z, z) {
        points.push(SingularPoint {
            group: Group::P,
            xi: None,
            multiplicity: py.ord().unwrap_or(0),
            branches: branches_at_origin(&py, budget)?,
            bespoke: None,
            bespoke_trace: None,
        });
    }

    let d = km.abs_diff(t);
    let lemma_r = km > t && f.terms().iter().skip(1).all(|&(k, _)| k >= t);
    for xi in e.subfield_elements(d) {
        if !vanishes(&g, z, xi) {
            continue;
        }
        let group = if e.in_subfield(xi, 1) {
            Group::S
        } else {
            let xt = e.frobenius(xi, t as i64);
            if f.terms().iter().all(|&(k, _)| e.frobenius(xi, k as i64) == xt) {
                Group::Q
            } else {
                Group::R
            }
        };
        let h = g.translate(z, xi);
        let (bespoke, bespoke_trace) = if group == Group::R && lemma_r && !e.in_subfield(xi, t) {
            let (c, tr) = unique_branch_trace(&f, t, &h, xi, budget);
            (Some(c), tr)
        } else if group == Group::S && xi == e.one() && km >= t && t > 0 {
            let (c, tr) = s1_trace(&f, t, &h, budget);
            (Some(c), tr)
        } else {
            (None, None)
        };
        points.push(SingularPoint {
            group,
            xi: Some(e.coords(xi)),
            multiplicity: h.ord().unwrap_or(0),
            branches: branches_at_origin(&h, budget)?,
            bespoke,
            bespoke_trace,
        });
    }

    // rational affine points of D_f other than the origin
    let mut extra = Vec::new();
    let mut checked = 0u64;
    if e.order().saturating_mul(e.order()) <= 1 << 20 {
        let (nx, ny) = (num.partial_x(), num.partial_y());
        for x in e.elements() {
            let (a, ax, ay) = (num.at_x(x), nx.at_x(x), ny.at_x(x));
            for y in e.elements() {
                checked += 1;
                if (x, y) == (z, z) {
                    continue;
                }
                if e.is_zero(a.eval(y)) && e.is_zero(ax.eval(y)) && e.is_zero(ay.eval(y)) {
                    extra.push((e.coords(x), e.coords(y)));
                }
            }
        }
    }
    Ok(SingularityReport {
        field: e.spec_string(),
        t,
        k_max: km,
        points,
        affine_checked: checked,
        extra_affine_singular: extra,
    })
}
