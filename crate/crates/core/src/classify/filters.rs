//! Necessary conditions that rule out a module before any search.

use core::fmt;

use num_integer::Integer;

use super::enumerate::scale;
use crate::hodge::{HalfInt, Pairing};
use crate::linalg::Q;
use crate::rootsys::{Family, RootSystem, Weight};
use crate::weightsys::weyl_dim;
use crate::{Error, Result};

/// A violated necessary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FilterReason {
    /// `A_r` with `r + 1` odd.
    OddRankPlusOne,
    /// `A_r`, `r > 1`, complex `Sym^p` with `2p ∤ (r+1)!` or `(r+1) | 2p`.
    SymDegree,
    /// `A_r`, complex `Λ^{2k}` with `r + 1 ≢ 0 (mod 4)`.
    EvenWedge,
    /// `μ(T) = (dim V_C − 1)/2` has no integer solution.
    TargetLattice,
}

impl fmt::Display for FilterReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterReason::OddRankPlusOne => "rank-parity",
            FilterReason::SymDegree => "sym-degree",
            FilterReason::EvenWedge => "even-wedge",
            FilterReason::TargetLattice => "target-lattice",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterOutcome {
    /// The module survives. `fixed` pins one coordinate of `n`: for a
    /// self-dual `μ = p·ω_i` the value `n_i` must be 1.
    Pass { fixed: Option<(usize, i64)> },
    Fail(FilterReason),
}

/// Whether `Σ c_i n_i = (dim V_C − 1)/2` is solvable over the integers.
pub fn target_lattice_ok(rs: &RootSystem, mu: &Weight, pairing: Pairing) -> Result<bool> {
    let dim = weyl_dim(rs, mu)?;
    let nominal = match pairing {
        Pairing::SelfDualSingle => dim,
        Pairing::ComplexPair => 2 * dim,
    };
    let m = HalfInt::from_twice(nominal as i64 - 1);
    let (scaled, target, _) = scale(&[mu.root_coords()], Q::new(m.twice(), 2));
    let g = scaled[0].iter().fold(0i64, |acc, x| acc.gcd(x));
    Ok(g != 0 && target % g == 0)
}

/// The single node `i` with `μ = p·ω_i`, if any.
pub(crate) fn single_node(mu: &Weight) -> Option<(usize, i64)> {
    let mut support = mu.dynkin().iter().enumerate().filter(|(_, &x)| x != 0);
    let (i, &p) = support.next()?;
    support.next().is_none().then_some((i, p))
}

/// The fixed coordinate forced on a self-dual `μ = p·ω_i`.
pub(crate) fn top_step_hint(mu: &Weight, pairing: Pairing) -> Option<(usize, i64)> {
    match pairing {
        Pairing::SelfDualSingle => single_node(mu).map(|(i, _)| (i, 1)),
        Pairing::ComplexPair => None,
    }
}

fn factorial(n: u128) -> Option<u128> {
    (1..=n).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// Necessary conditions for type `A` modules, checked without building the
/// weight system.
pub fn type_a_filters(rs: &RootSystem, mu: &Weight, pairing: Pairing) -> Result<FilterOutcome> {
    let t = rs.lie_type();
    if t.family() != Family::A {
        return Err(Error::WrongFamily { family: t.family() });
    }
    let r = t.rank();
    if (r + 1) % 2 == 1 {
        return Ok(FilterOutcome::Fail(FilterReason::OddRankPlusOne));
    }
    if pairing == Pairing::ComplexPair {
        if let Some((i, p)) = single_node(mu) {
            if r > 1 && (i == 0 || i == r - 1) {
                let two_p = 2 * p as u128;
                let f = factorial(r as u128 + 1).ok_or(Error::Overflow)?;
                if f % two_p != 0 || two_p % (r as u128 + 1) == 0 {
                    return Ok(FilterOutcome::Fail(FilterReason::SymDegree));
                }
            }
            let node = i + 1;
            let dual_node = r + 1 - node;
            if p == 1 && (node % 2 == 0 || dual_node % 2 == 0) && (r + 1) % 4 != 0 {
                return Ok(FilterOutcome::Fail(FilterReason::EvenWedge));
            }
        }
    }
    if !target_lattice_ok(rs, mu, pairing)? {
        return Ok(FilterOutcome::Fail(FilterReason::TargetLattice));
    }
    Ok(FilterOutcome::Pass { fixed: top_step_hint(mu, pairing) })
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use alloc::vec::Vec;

    use super::*;
    use crate::rootsys::{build_root_system, LieType};

    fn a(r: usize) -> RootSystem {
        build_root_system(LieType::new(Family::A, r).unwrap()).unwrap()
    }

    #[test]
    fn a2_fails_on_parity() {
        let rs = a(2);
        let mu = rs.fundamental_weight(1).unwrap();
        assert_eq!(
            type_a_filters(&rs, &mu, Pairing::ComplexPair),
            Ok(FilterOutcome::Fail(FilterReason::OddRankPlusOne))
        );
    }

    #[test]
    fn a5_sym2_is_excluded() {
        let rs = a(5);
        let mu = rs.weight(vec![2, 0, 0, 0, 0]).unwrap();
        assert!(matches!(type_a_filters(&rs, &mu, Pairing::ComplexPair), Ok(FilterOutcome::Fail(_))));
    }

    #[test]
    fn a7_wedge2_passes() {
        let rs = a(7);
        let mu = rs.fundamental_weight(2).unwrap();
        assert_eq!(type_a_filters(&rs, &mu, Pairing::ComplexPair), Ok(FilterOutcome::Pass { fixed: None }));
    }

    #[test]
    fn a5_wedge2_fails() {
        let rs = a(5);
        let mu = rs.fundamental_weight(2).unwrap();
        assert_eq!(
            type_a_filters(&rs, &mu, Pairing::ComplexPair),
            Ok(FilterOutcome::Fail(FilterReason::EvenWedge))
        );
        let mu = rs.fundamental_weight(4).unwrap();
        assert_eq!(
            type_a_filters(&rs, &mu, Pairing::ComplexPair),
            Ok(FilterOutcome::Fail(FilterReason::EvenWedge))
        );
    }

    #[test]
    fn a3_sym_degrees() {
        let rs = a(3);
        let passing: Vec<i64> = (1..=64)
            .filter(|&p| {
                let mu = rs.weight(vec![p, 0, 0]).unwrap();
                matches!(type_a_filters(&rs, &mu, Pairing::ComplexPair), Ok(FilterOutcome::Pass { .. }))
            })
            .collect();
        assert_eq!(passing, vec![1, 3]);
    }

    #[test]
    fn real_single_node_is_pinned() {
        let rs = a(5);
        let mu = rs.fundamental_weight(3).unwrap();
        assert_eq!(
            type_a_filters(&rs, &mu, Pairing::SelfDualSingle),
            Ok(FilterOutcome::Pass { fixed: Some((2, 1)) })
        );
    }

    #[test]
    fn other_families_are_rejected() {
        let rs = build_root_system(LieType::new(Family::B, 3).unwrap()).unwrap();
        let mu = rs.fundamental_weight(1).unwrap();
        assert!(type_a_filters(&rs, &mu, Pairing::SelfDualSingle).is_err());
    }
}
