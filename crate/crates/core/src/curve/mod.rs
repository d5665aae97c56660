//! Plane curves attached to linearized polynomials and tools for their
//! singularities.

pub mod bivar;
pub mod branches;
pub mod build;
pub mod census;
pub mod factor;
pub mod intersect;
pub mod survey;
pub mod transform;

pub use bivar::{BivarPoly, CurveJson};
pub use branches::{branches_at, branches_at_origin, multiplicity_at, BranchCount, DEFAULT_BLOWUP_BUDGET};
pub use build::{build_cf, build_df, build_g, numerator};
pub use census::{point_census, Census, CensusMode, DEFAULT_CENSUS_BUDGET};
pub use factor::{abs_irred_probe, ProbeVerdict};
pub use intersect::{bezout_check, intersection_at, BezoutReport};
pub use survey::{singularity_survey, Group, SingularityReport};
pub use transform::{BlowupTrace, Transform};
