//! Classification of a singularity from its resolution graph.
//!
//! Minimal ellipticity is decided twice, by independent routes: the genus
//! condition on `Z_num` and all of its proper subcycles, and the identity
//! `Z_num = Z_K`. On a minimal resolution the two must agree.

use serde::Serialize;

use crate::cycles::{
    anticanonical_cycle, arithmetic_genus, enumerate_subcycles, fundamental_cycle, Cycle,
    RationalCycle, DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::graph::DualGraph;

/// Evidence behind a negative (or undecided) minimal-ellipticity verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `p_a(Z_num) ≠ 1`.
    FundamentalGenus { pa: i64 },
    /// A subcycle `0 < D < Z_num` with `p_a(D) ≥ 1`.
    Subcycle { cycle: Cycle, pa: i64 },
    /// `Z_num ≠ Z_K`.
    Mismatch { z_num: Cycle, z_k: RationalCycle },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimallyElliptic {
    /// `None` when undecided.
    pub verdict: Option<bool>,
    /// Genus criterion; `None` when the subcycle enumeration hit its cap.
    pub by_condition1: Option<bool>,
    /// `Z_num = Z_K`.
    pub by_condition2: bool,
    pub witnesses: Vec<Witness>,
    pub conditional: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_rational: bool,
    pub is_minimally_elliptic: Option<bool>,
    pub minel_by_condition1: Option<bool>,
    pub minel_by_condition2: bool,
    pub is_simple_elliptic: bool,
    pub numerically_gorenstein: bool,
    pub pa_znum: i64,
    pub z_num: Cycle,
    pub z_k: RationalCycle,
    pub witnesses: Vec<Witness>,
    pub conditional: bool,
    pub notes: Vec<String>,
}

/// Artin's criterion: rational iff `p_a(Z_num) = 0`.
pub fn is_rational(g: &DualGraph) -> Result<bool> {
    let z = fundamental_cycle(g)?;
    Ok(arithmetic_genus(&z, g)? == 0)
}

/// A single elliptic curve, i.e. one genus-1 vertex of negative weight.
pub fn is_simple_elliptic(g: &DualGraph) -> bool {
    g.len() == 1 && g.genus(0) == 1 && g.weight(0) <= -1
}

/// `Z_K` has integral coefficients. This is only the numerical shadow of the
/// Gorenstein property, which graph data cannot decide.
pub fn numerically_gorenstein(g: &DualGraph) -> Result<bool> {
    Ok(anticanonical_cycle(g)?.is_integral())
}

pub fn is_minimally_elliptic(g: &DualGraph) -> Result<MinimallyElliptic> {
    is_minimally_elliptic_with_cap(g, DEFAULT_ENUMERATION_CAP)
}

pub fn is_minimally_elliptic_with_cap(g: &DualGraph, cap: u64) -> Result<MinimallyElliptic> {
    let z_num = fundamental_cycle(g)?;
    let z_k = anticanonical_cycle(g)?;
    let pa = arithmetic_genus(&z_num, g)?;
    Ok(minimally_elliptic_from(g, &z_num, &z_k, pa, cap))
}

fn minimally_elliptic_from(
    g: &DualGraph,
    z_num: &Cycle,
    z_k: &RationalCycle,
    pa: i64,
    cap: u64,
) -> MinimallyElliptic {
    let conditional = !g.minimality_warnings().is_empty();
    let mut witnesses = Vec::new();
    let mut notes = Vec::new();

    let by_condition1 = if pa != 1 {
        witnesses.push(Witness::FundamentalGenus { pa });
        Some(false)
    } else {
        match enumerate_subcycles(z_num, cap) {
            Ok(mut subcycles) => match subcycles.find_map(|d| {
                let pa_d = arithmetic_genus(&d, g).expect("subcycles are nonzero");
                (pa_d >= 1).then_some((d, pa_d))
            }) {
                Some((cycle, pa)) => {
                    witnesses.push(Witness::Subcycle { cycle, pa });
                    Some(false)
                }
                None => Some(true),
            },
            Err(Error::EnumerationTooLarge { cap }) => {
                notes.push(format!(
                    "condition (1) undecided: more than {cap} subcycles of Z_num; raise the enumeration cap"
                ));
                None
            }
            Err(e) => unreachable!("unexpected enumeration error: {e}"),
        }
    };

    let by_condition2 = z_k.to_integral().as_ref() == Some(z_num);
    if !by_condition2 {
        witnesses.push(Witness::Mismatch {
            z_num: z_num.clone(),
            z_k: z_k.clone(),
        });
    }

    if let Some(c1) = by_condition1 {
        if c1 != by_condition2 {
            if conditional {
                notes.push(format!(
                    "conditions (1) and (2) disagree ({c1} vs {by_condition2}); expected, since the resolution is not minimal"
                ));
            } else {
                panic!(
                    "minimal ellipticity criteria disagree on a minimal resolution: \
                     condition (1) = {c1}, condition (2) = {by_condition2}, graph {g}"
                );
            }
        }
    }

    let verdict = match by_condition1 {
        Some(c1) => Some(c1),
        None if !conditional => {
            notes.push("verdict taken from condition (2) alone".into());
            Some(by_condition2)
        }
        None => None,
    };
    if conditional {
        notes.push(
            "resolution has (-1)-curves; minimal ellipticity criteria assume a minimal resolution"
                .into(),
        );
    }

    MinimallyElliptic {
        verdict,
        by_condition1,
        by_condition2,
        witnesses,
        conditional,
        notes,
    }
}

/// Runs every predicate and collects the cycle data they rest on.
pub fn classify(g: &DualGraph, cap: u64) -> Result<ClassificationReport> {
    let z_num = fundamental_cycle(g)?;
    let z_k = anticanonical_cycle(g)?;
    let pa_znum = arithmetic_genus(&z_num, g)?;
    let minel = minimally_elliptic_from(g, &z_num, &z_k, pa_znum, cap);
    let is_rational = pa_znum == 0;
    let is_simple_elliptic = is_simple_elliptic(g);
    let numerically_gorenstein = z_k.is_integral();

    let mut notes = minel.notes;
    notes.push(
        "numerically_gorenstein means Z_K is integral; analytic Gorensteinness is stronger and not decided here".into(),
    );
    for w in g.minimality_warnings() {
        notes.push(w.to_string());
    }

    debug_assert!(!(is_rational && minel.verdict == Some(true)));
    debug_assert!(!is_simple_elliptic || minel.verdict == Some(true));

    Ok(ClassificationReport {
        is_rational,
        is_minimally_elliptic: minel.verdict,
        minel_by_condition1: minel.by_condition1,
        minel_by_condition2: minel.by_condition2,
        is_simple_elliptic,
        numerically_gorenstein,
        pa_znum,
        z_num,
        z_k,
        witnesses: minel.witnesses,
        conditional: minel.conditional,
        notes,
    })
}
