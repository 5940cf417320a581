//! Cycles supported on the exceptional divisor and their numerical invariants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{DualGraph, IntersectionMatrix};

/// Default bound on the number of coefficient vectors visited by
/// [`enumerate_subcycles`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Integral cycle `Σ a_i E_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(pub Vec<i64>);

/// Cycle with exact rational coefficients, always in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalCycle(pub Vec<BigRational>);

impl Cycle {
    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    /// The reduced cycle `Σ E_i`.
    pub fn reduced(n: usize) -> Self {
        Cycle(vec![1; n])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_nonzero_effective(&self) -> bool {
        self.is_effective() && self.0.iter().any(|&a| a > 0)
    }

    /// `self < other`: the difference is effective and nonzero.
    pub fn is_less_than(&self, other: &Cycle) -> bool {
        self.len() == other.len()
            && self != other
            && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn to_rational(&self) -> RationalCycle {
        RationalCycle(
            self.0
                .iter()
                .map(|&a| BigRational::from_integer(a.into()))
                .collect(),
        )
    }
}

impl RationalCycle {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The integral cycle with the same coefficients, if there is one.
    pub fn to_integral(&self) -> Option<Cycle> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(Cycle)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for RationalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(BigRational::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Anything with a coefficient vector that can enter the intersection pairing.
pub trait Coefficients {
    fn rational_coefficients(&self) -> Vec<BigRational>;
}

impl Coefficients for Cycle {
    fn rational_coefficients(&self) -> Vec<BigRational> {
        self.to_rational().0
    }
}

impl Coefficients for RationalCycle {
    fn rational_coefficients(&self) -> Vec<BigRational> {
        self.0.clone()
    }
}

/// Intersection number `z1ᵀ M z2`.
pub fn pairing(
    z1: &impl Coefficients,
    z2: &impl Coefficients,
    m: &IntersectionMatrix,
) -> Result<BigRational> {
    let (a, b) = (z1.rational_coefficients(), z2.rational_coefficients());
    for v in [&a, &b] {
        if v.len() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.dim(),
                actual: v.len(),
            });
        }
    }
    let mut total = BigRational::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let entry = m.get(i, j);
            if entry != 0 {
                total += ai * bj * BigRational::from_integer(entry.into());
            }
        }
    }
    Ok(total)
}

/// `K · E_i` for every exceptional curve, by adjunction on a smooth curve:
/// `K·E_i + E_i² = 2 g_i - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDegrees(pub Vec<i64>);

impl CanonicalDegrees {
    pub fn of(g: &DualGraph) -> Self {
        CanonicalDegrees(
            g.vertices()
                .iter()
                .map(|v| 2 * i64::from(v.genus) - 2 - v.weight)
                .collect(),
        )
    }

    /// `K · Z` for an integral cycle.
    pub fn dot(&self, z: &Cycle) -> i64 {
        self.0
            .iter()
            .zip(z.coefficients())
            .map(|(k, a)| k * a)
            .sum()
    }
}

fn require_negative_definite(g: &DualGraph) -> Result<IntersectionMatrix> {
    let m = g.intersection_matrix();
    if m.is_negative_definite() {
        Ok(m)
    } else {
        Err(Error::NotNegativeDefinite)
    }
}

/// Artin's fundamental cycle via Laufer's computation sequence, adding the
/// smallest-index curve that meets the current cycle positively.
pub fn fundamental_cycle(g: &DualGraph) -> Result<Cycle> {
    fundamental_cycle_by(g, |candidates| candidates[0])
}

/// Laufer's computation sequence with a caller-chosen selection rule.
///
/// `choose` receives the (ascending, nonempty) list of vertices `i` with
/// `Z·E_i > 0` and returns the one to add next. The result does not depend on
/// the rule.
pub fn fundamental_cycle_by(
    g: &DualGraph,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Result<Cycle> {
    let m = require_negative_definite(g)?;
    let n = g.len();
    let mut z = Cycle::reduced(n);
    let mut degrees: Vec<i64> = (0..n).map(|i| m.dot_vertex(&z.0, i)).collect();
    loop {
        let positive: Vec<usize> = (0..n).filter(|&i| degrees[i] > 0).collect();
        if positive.is_empty() {
            return Ok(z);
        }
        let i = choose(&positive);
        assert!(
            positive.contains(&i),
            "selection rule must pick a positive vertex"
        );
        z.0[i] += 1;
        for (j, d) in degrees.iter_mut().enumerate() {
            *d += m.get(i, j);
        }
    }
}

/// The anticanonical cycle: the unique rational solution of
/// `Z_K · E_i = -K · E_i` for all `i`.
pub fn anticanonical_cycle(g: &DualGraph) -> Result<RationalCycle> {
    let m = require_negative_definite(g)?;
    let rhs: Vec<i64> = CanonicalDegrees::of(g).0.iter().map(|k| -k).collect();
    let z =
        crate::linalg::solve(m.rows(), &rhs).expect("negative definite matrices are invertible");
    Ok(RationalCycle(z))
}

/// `p_a(Z) = 1 + (Z² + K·Z)/2`. Integral for every integral cycle.
pub fn arithmetic_genus(z: &Cycle, g: &DualGraph) -> Result<i64> {
    let m = g.intersection_matrix();
    if z.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            actual: z.len(),
        });
    }
    if z.0.iter().all(|&a| a == 0) {
        return Err(Error::ZeroCycle);
    }
    let self_int: i64 = (0..z.len()).map(|i| z.0[i] * m.dot_vertex(&z.0, i)).sum();
    let numerator = self_int + CanonicalDegrees::of(g).dot(z);
    let pa = BigRational::one() + BigRational::new(BigInt::from(numerator), BigInt::from(2));
    assert!(
        pa.is_integer(),
        "non-integral arithmetic genus {pa} for {z}: adjunction bookkeeping is broken"
    );
    Ok(i64::try_from(pa.to_integer()).expect("arithmetic genus fits in i64"))
}

/// Every cycle `D` with `0 < D < z`, each exactly once, first coordinate
/// varying fastest.
pub fn enumerate_subcycles(z: &Cycle, cap: u64) -> Result<Subcycles> {
    assert!(
        z.is_nonzero_effective(),
        "subcycles are defined below a nonzero effective cycle"
    );
    let mut total: u64 = 1;
    for &a in &z.0 {
        total = total
            .checked_mul(a as u64 + 1)
            .filter(|&t| t <= cap)
            .ok_or(Error::EnumerationTooLarge { cap })?;
    }
    Ok(Subcycles {
        bound: z.0.clone(),
        current: vec![0; z.len()],
        done: false,
    })
}

/// Iterator returned by [`enumerate_subcycles`].
#[derive(Debug, Clone)]
pub struct Subcycles {
    bound: Vec<i64>,
    current: Vec<i64>,
    done: bool,
}

impl Subcycles {
    fn advance(&mut self) -> bool {
        for (c, &b) in self.current.iter_mut().zip(&self.bound) {
            if *c < b {
                *c += 1;
                return true;
            }
            *c = 0;
        }
        false
    }
}

impl Iterator for Subcycles {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        if self.done {
            return None;
        }
        if !self.advance() || self.current == self.bound {
            self.done = true;
            return None;
        }
        Some(Cycle(self.current.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_inline;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pairing_examples() {
        let a1 = parse_inline("-2").unwrap();
        let e = Cycle(vec![1]);
        assert_eq!(
            pairing(&e, &e, &a1.intersection_matrix()).unwrap(),
            q(-2, 1)
        );

        let d4 = parse_inline("-2,-2,-2,-2;0-1,0-2,0-3").unwrap();
        let z = Cycle(vec![2, 1, 1, 1]);
        assert_eq!(
            pairing(&z, &z, &d4.intersection_matrix()).unwrap(),
            q(-2, 1)
        );

        let cusp = parse_inline("-3,-3,-3;0-1,1-2,2-0").unwrap();
        let m = cusp.intersection_matrix();
        assert_eq!(
            pairing(&Cycle(vec![1, 1, 1]), &Cycle(vec![1, 0, 0]), &m).unwrap(),
            q(-1, 1)
        );
        assert_eq!(
            pairing(&Cycle(vec![1, 1]), &Cycle(vec![1, 0, 0]), &m),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        );
        let half = RationalCycle(vec![q(1, 2), q(0, 1), q(0, 1)]);
        assert_eq!(pairing(&half, &half, &m).unwrap(), q(-3, 4));
    }

    #[test]
    fn fundamental_cycle_examples() {
        assert_eq!(
            fundamental_cycle(&parse_inline("-2").unwrap()).unwrap(),
            Cycle(vec![1])
        );
        let d4 = parse_inline("-2,-2,-2,-2;0-1,0-2,0-3").unwrap();
        assert_eq!(fundamental_cycle(&d4).unwrap(), Cycle(vec![2, 1, 1, 1]));
        for d in 1..=12 {
            let se = parse_inline(&format!("-{d}:1")).unwrap();
            assert_eq!(fundamental_cycle(&se).unwrap(), Cycle(vec![1]));
        }
        let bad = parse_inline("-2,-2;0-1,0-1").unwrap();
        assert_eq!(fundamental_cycle(&bad), Err(Error::NotNegativeDefinite));
    }

    #[test]
    fn anticanonical_examples() {
        let z = anticanonical_cycle(&parse_inline("-2").unwrap()).unwrap();
        assert!(z.is_zero());
        let z = anticanonical_cycle(&parse_inline("-3").unwrap()).unwrap();
        assert_eq!(z.0, vec![q(1, 3)]);
        assert!(!z.is_integral());
        for d in 1..=12 {
            let z = anticanonical_cycle(&parse_inline(&format!("-{d}:1")).unwrap()).unwrap();
            assert_eq!(z.to_integral(), Some(Cycle(vec![1])));
        }
        assert_eq!(
            anticanonical_cycle(&parse_inline("1").unwrap()),
            Err(Error::NotNegativeDefinite)
        );
    }

    #[test]
    fn arithmetic_genus_examples() {
        let a1 = parse_inline("-2").unwrap();
        assert_eq!(arithmetic_genus(&Cycle(vec![1]), &a1), Ok(0));
        assert_eq!(
            arithmetic_genus(&Cycle(vec![0]), &a1),
            Err(Error::ZeroCycle)
        );
        for d in 1..=12 {
            let se = parse_inline(&format!("-{d}:1")).unwrap();
            assert_eq!(arithmetic_genus(&Cycle(vec![1]), &se), Ok(1));
        }
        let cusp = parse_inline("-3,-3,-3;0-1,1-2,2-0").unwrap();
        assert_eq!(arithmetic_genus(&Cycle(vec![1, 1, 0]), &cusp), Ok(0));
        assert_eq!(arithmetic_genus(&Cycle(vec![1, 1, 1]), &cusp), Ok(1));
    }

    #[test]
    fn canonical_degrees_satisfy_adjunction() {
        let g = parse_inline("-2:0,-5:1,-3:2;0-1,1-2").unwrap();
        let k = CanonicalDegrees::of(&g);
        for (i, v) in g.vertices().iter().enumerate() {
            assert_eq!(k.0[i] + v.weight, 2 * i64::from(v.genus) - 2);
        }
    }

    #[test]
    fn subcycle_examples() {
        assert_eq!(enumerate_subcycles(&Cycle(vec![1]), 10).unwrap().count(), 0);
        let got: Vec<Cycle> = enumerate_subcycles(&Cycle(vec![1, 1]), 10)
            .unwrap()
            .collect();
        assert_eq!(got, vec![Cycle(vec![1, 0]), Cycle(vec![0, 1])]);
        let got: Vec<Cycle> = enumerate_subcycles(&Cycle(vec![2, 1]), 10)
            .unwrap()
            .collect();
        assert_eq!(
            got,
            vec![
                Cycle(vec![1, 0]),
                Cycle(vec![2, 0]),
                Cycle(vec![0, 1]),
                Cycle(vec![1, 1])
            ]
        );
        assert_eq!(
            enumerate_subcycles(&Cycle(vec![9, 9, 9]), 999).unwrap_err(),
            Error::EnumerationTooLarge { cap: 999 }
        );
        assert_eq!(
            enumerate_subcycles(&Cycle(vec![9, 9, 9]), 1000)
                .unwrap()
                .count(),
            998
        );
    }

    #[test]
    fn partial_order() {
        let a = Cycle(vec![1, 0]);
        let b = Cycle(vec![1, 1]);
        assert!(a.is_less_than(&b));
        assert!(!b.is_less_than(&a));
        assert!(!a.is_less_than(&a));
        assert!(!Cycle(vec![0, 2]).is_less_than(&b));
    }
}
