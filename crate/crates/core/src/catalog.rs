//! Named example graphs.
//!
//! Lookup is case-insensitive. `An` (n ≥ 1), `Dn` (n ≥ 4), `E6`, `E7`,
//! `E8`, `cusp3` and `SE(d)` for any negative integer `d` are recognized.

use crate::error::{Error, Result};
use crate::graph::DualGraph;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: DualGraph,
    pub notes: String,
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn minus_two(n: usize) -> Vec<(i64, u32)> {
    vec![(-2, 0); n]
}

pub fn a_n(n: usize) -> CatalogEntry {
    assert!(n >= 1);
    CatalogEntry {
        name: format!("A{n}"),
        graph: DualGraph::new(&minus_two(n), &chain(n)).expect("valid"),
        notes: format!("chain of {n} rational (-2)-curves"),
    }
}

/// Center is vertex 0, two short legs are 1 and 2, the long leg starts at 3.
pub fn d_n(n: usize) -> CatalogEntry {
    assert!(n >= 4);
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    edges.extend((4..n).map(|i| (i - 1, i)));
    CatalogEntry {
        name: format!("D{n}"),
        graph: DualGraph::new(&minus_two(n), &edges).expect("valid"),
        notes: format!("D{n} Dynkin tree of rational (-2)-curves"),
    }
}

/// Chain `0..n-1` with vertex `n-1` attached to vertex 2.
pub fn e_n(n: usize) -> CatalogEntry {
    assert!((6..=8).contains(&n));
    let mut edges = chain(n - 1);
    edges.push((2, n - 1));
    CatalogEntry {
        name: format!("E{n}"),
        graph: DualGraph::new(&minus_two(n), &edges).expect("valid"),
        notes: format!("E{n} Dynkin tree of rational (-2)-curves"),
    }
}

pub fn cusp3() -> CatalogEntry {
    CatalogEntry {
        name: "cusp3".into(),
        graph: DualGraph::new(&[(-3, 0); 3], &[(0, 1), (1, 2), (2, 0)]).expect("valid"),
        notes: "cusp singularity: triangle of rational (-3)-curves".into(),
    }
}

pub fn simple_elliptic(d: i64) -> Result<CatalogEntry> {
    if d >= 0 {
        return Err(Error::InvalidWeight(d));
    }
    Ok(CatalogEntry {
        name: format!("SE({d})"),
        graph: DualGraph::new(&[(d, 1)], &[])?,
        notes: format!("simple elliptic: one elliptic curve of self-intersection {d}"),
    })
}

/// The fixed listing shown by `catalog list`; `SE(d)` is listed for a few `d`.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=8).map(a_n).collect();
    out.extend((4..=8).map(d_n));
    out.extend((6..=8).map(e_n));
    out.push(cusp3());
    out.extend(
        [-1, -9, -10]
            .into_iter()
            .map(|d| simple_elliptic(d).expect("negative")),
    );
    out
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    let key = name.trim().to_ascii_lowercase();
    if key == "cusp3" {
        return Ok(cusp3());
    }
    if let Some(arg) = key.strip_prefix("se(").and_then(|r| r.strip_suffix(')')) {
        let d: i64 = arg.trim().parse().map_err(|_| unknown())?;
        return simple_elliptic(d).map_err(|_| unknown());
    }
    let mut chars = key.chars();
    let kind = chars.next();
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    match kind {
        Some('a') if n >= 1 => Ok(a_n(n)),
        Some('d') if n >= 4 => Ok(d_n(n)),
        Some('e') if (6..=8).contains(&n) => Ok(e_n(n)),
        _ => Err(unknown()),
    }
}
