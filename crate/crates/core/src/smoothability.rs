//! Steenbrink's topological obstruction to smoothing a Gorenstein surface
//! singularity.
//!
//! For a smoothable Gorenstein singularity the negative index of the Milnor
//! fiber's intersection form satisfies
//!
//! ```text
//! μ₋ = 10 p_g − b₁(link) + (Z_K² + |I|)
//! ```
//!
//! Only the right-hand side is computable from a resolution graph; a negative
//! value proves the singularity is not smoothable.

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::classify::{is_minimally_elliptic_with_cap, is_rational};
use crate::cycles::{anticanonical_cycle, pairing, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::report::serialize_rational;

/// `b₁` of the link: the cycle rank of the graph plus twice the total genus.
pub fn link_first_betti(g: &DualGraph) -> u64 {
    g.first_betti() + 2 * g.vertices().iter().map(|v| u64::from(v.genus)).sum::<u64>()
}

/// Where the geometric genus came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PgSource {
    User,
    AutoRational,
    AutoMinimallyElliptic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteenbrinkReport {
    pub p_g: u64,
    pub p_g_source: PgSource,
    pub b1_link: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub zk_squared: BigRational,
    pub vertex_count: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub mu_minus_predicted: BigRational,
    /// `Some(μ₋ < 0)`; `None` when the graph is not numerically Gorenstein,
    /// where the formula makes no claim.
    pub obstructed: Option<bool>,
    pub numerically_gorenstein: bool,
    pub conditional: bool,
    pub notes: Vec<String>,
}

/// Evaluates the obstruction. `p_g` may be omitted for rational graphs
/// (`p_g = 0`) and for minimally elliptic numerically Gorenstein graphs
/// (`p_g = 1`).
pub fn steenbrink(g: &DualGraph, p_g: Option<u64>) -> Result<SteenbrinkReport> {
    steenbrink_with_cap(g, p_g, DEFAULT_ENUMERATION_CAP)
}

pub fn steenbrink_with_cap(g: &DualGraph, p_g: Option<u64>, cap: u64) -> Result<SteenbrinkReport> {
    let m = g.intersection_matrix();
    let z_k = anticanonical_cycle(g)?;
    let numerically_gorenstein = z_k.is_integral();
    let conditional = !g.minimality_warnings().is_empty();
    let mut notes = Vec::new();

    let (p_g, p_g_source) = match p_g {
        Some(p) => (p, PgSource::User),
        None if is_rational(g)? => (0, PgSource::AutoRational),
        None if numerically_gorenstein
            && is_minimally_elliptic_with_cap(g, cap)?.verdict == Some(true) =>
        {
            (1, PgSource::AutoMinimallyElliptic)
        }
        None => return Err(Error::PgUnderdetermined),
    };

    let b1_link = link_first_betti(g);
    let zk_squared = pairing(&z_k, &z_k, &m)?;
    let vertex_count = g.len();
    let mu_minus_predicted = BigRational::from_integer((10 * p_g as i64 - b1_link as i64).into())
        + &zk_squared
        + BigRational::from_integer((vertex_count as i64).into());

    let obstructed = if numerically_gorenstein {
        debug_assert!(mu_minus_predicted.is_integer());
        Some(mu_minus_predicted.is_negative())
    } else {
        notes.push(
            "not-applicable: Z_K is not integral, so the singularity is not Gorenstein".into(),
        );
        if !mu_minus_predicted.is_integer() {
            notes.push(format!(
                "predicted mu_minus {mu_minus_predicted} is not an integer"
            ));
        }
        None
    };
    if conditional {
        notes.push(
            "resolution is not minimal; automatic p_g and classification are conditional".into(),
        );
    }

    Ok(SteenbrinkReport {
        p_g,
        p_g_source,
        b1_link,
        zk_squared,
        vertex_count,
        mu_minus_predicted,
        obstructed,
        numerically_gorenstein,
        conditional,
        notes,
    })
}

/// Whether the simple elliptic singularity with exceptional curve of
/// self-intersection `weight` can be smoothed, read off the sign of the
/// obstruction on its one-vertex graph.
pub fn simple_elliptic_smoothable(weight: i64) -> Result<bool> {
    if weight >= 0 {
        return Err(Error::InvalidWeight(weight));
    }
    let g = DualGraph::new(&[(weight, 1)], &[])?;
    let report = steenbrink(&g, None)?;
    let obstructed = report
        .obstructed
        .expect("simple elliptic graphs are numerically Gorenstein");
    // Z_K = E, so μ₋ = 10 - 2 + (weight + 1).
    debug_assert_eq!(
        report.mu_minus_predicted,
        BigRational::from_integer((9 + weight).into())
    );
    Ok(!obstructed)
}
