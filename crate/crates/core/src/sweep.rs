//! Planning smoothings of non-normal singularities by sweeping the cone.
//!
//! Take a ruled surface `X → C` over an elliptic curve `C` with numerical
//! invariant `e` (so the distinguished section has `C₀² = −e`, and `e ≥ −1`),
//! and the very ample class `B = C₀ + aF`, `a ≥ e + 3`. Then `B·F = 1` and
//! `B² = −e + 2a`. Sweeping the cone over `X` onto the cone over a hyperplane
//! section `B` smooths the cone over `B`, an isolated but non-normal
//! singularity, with Milnor fiber the disc bundle over `C` of Euler number
//! `e − 2a`. That fiber has `b₁ = 2`, which no Milnor fiber of a normal
//! singularity can have.
//!
//! The normalization of that singularity is the cone obtained by contracting
//! the zero-section of the conormal bundle of `B`, a simple elliptic
//! singularity with exceptional self-intersection `−B²`.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::smoothability::{steenbrink, SteenbrinkReport};

/// Ruled-surface data `(e, a)` together with everything derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepPlan {
    pub e: i64,
    pub a: i64,
    /// `B² = −e + 2a`.
    pub b_squared: i64,
    /// Euler number `e − 2a` of the Milnor fiber disc bundle.
    pub fiber_euler: i64,
    /// Self-intersection of the elliptic exceptional curve of the normalization.
    pub normalization_weight: i64,
    pub milnor_fiber_b1: u32,
    /// The fiber deformation-retracts onto the elliptic curve.
    pub milnor_fiber_b2: u32,
    pub central_fiber_normal: bool,
}

/// Derives the plan for `C₀ + aF` on the ruled surface with invariant `e`.
pub fn sweep_invariants(e: i64, a: i64) -> Result<SweepPlan> {
    if e < -1 {
        return Err(Error::InvalidRuledSurface(e));
    }
    if a < e + 3 {
        return Err(Error::NotVeryAmple { e, a });
    }
    // F² = 0, C₀·F = 1, C₀² = −e.
    let c0_squared = -e;
    let c0_dot_f = 1;
    let b_dot_f = c0_dot_f;
    debug_assert_eq!(b_dot_f, 1, "B is a section of the ruling");
    let b_squared = c0_squared + 2 * a * c0_dot_f;
    let fiber_euler = -b_squared;
    let plan = SweepPlan {
        e,
        a,
        b_squared,
        fiber_euler,
        normalization_weight: -b_squared,
        milnor_fiber_b1: 2,
        milnor_fiber_b2: 1,
        // A normal singularity's Milnor fibers have b₁ = 0.
        central_fiber_normal: false,
    };
    debug_assert!(plan.fiber_euler <= -5);
    Ok(plan)
}

/// Every `(e, a)` whose Milnor fiber has Euler number `d`, sorted by `e`.
///
/// `e − 2a = d` forces `e ≡ d (mod 2)`, and `a ≥ e + 3` becomes
/// `e ≤ −d − 6`; the list is empty exactly when `d ≥ −4`.
pub fn plan_for_target(d: i64) -> Vec<SweepPlan> {
    let lowest = if (-1 - d).rem_euclid(2) == 0 { -1 } else { 0 };
    (lowest..=(-d - 6))
        .step_by(2)
        .map(|e| sweep_invariants(e, (e - d) / 2).expect("parameters satisfy the constraints"))
        .collect()
}

/// The normal and non-normal pictures for one self-intersection `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeadlineReport {
    pub target: i64,
    /// Obstruction on the simple elliptic graph `{weight: d, genus: 1}`.
    pub normal: SteenbrinkReport,
    pub normal_smoothable: bool,
    pub plans: Vec<SweepPlan>,
    pub notes: Vec<String>,
}

/// Compares smoothing the simple elliptic singularity of degree `−d`
/// directly with realizing its minimal resolution as a Milnor fiber of a
/// non-normal singularity.
pub fn headline_report(d: i64) -> Result<HeadlineReport> {
    let plans = plan_for_target(d);
    if plans.is_empty() {
        return Err(Error::NoPlan(d));
    }
    let normal = steenbrink(&DualGraph::new(&[(d, 1)], &[])?, None)?;
    let normal_smoothable = normal.obstructed == Some(false);
    let mut notes = Vec::new();
    if normal_smoothable {
        notes.push(format!(
            "the simple elliptic singularity of degree {} is smoothable, and the non-normal sweep also realizes its minimal resolution as a Milnor fiber",
            -d
        ));
    } else {
        notes.push(format!(
            "the simple elliptic singularity of degree {} is not smoothable (predicted mu_minus {} < 0), yet its minimal resolution, the disc bundle of Euler number {d} over an elliptic curve, is the Milnor fiber of a smoothing of a non-normal isolated singularity",
            -d, normal.mu_minus_predicted
        ));
    }
    notes.push(
        "each sweep smoothing has a Milnor fiber with b1 = 2; Milnor fibers of normal isolated singularities have b1 = 0, so the central fiber is non-normal"
            .into(),
    );
    Ok(HeadlineReport {
        target: d,
        normal,
        normal_smoothable,
        plans,
        notes,
    })
}

impl fmt::Display for HeadlineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "target self-intersection d = {}", self.target)?;
        writeln!(
            out,
            "normal (simple elliptic, E^2 = {}): mu_minus = {} -> {}",
            self.target,
            self.normal.mu_minus_predicted,
            if self.normal_smoothable {
                "unobstructed"
            } else {
                "obstructed, not smoothable"
            }
        )?;
        writeln!(out, "sweep plans: {}", self.plans.len())?;
        for p in &self.plans {
            writeln!(
                out,
                "  e = {:>3}  a = {:>3}  B^2 = {}  fiber = disc bundle, Euler {}, b1 = {}, central fiber normal = {}",
                p.e, p.a, p.b_squared, p.fiber_euler, p.milnor_fiber_b1, p.central_fiber_normal
            )?;
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        f.write_str(out.trim_end())
    }
}
