use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use super::WeightSystem;
use crate::linalg::Q;
use crate::rootsys::{RootSystem, Weight};
use crate::{Error, Limits, Result};

/// Weyl dimension of the irreducible module with highest weight `mu`.
pub fn weyl_dim(rs: &RootSystem, mu: &Weight) -> Result<u64> {
    if mu.rank() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), found: mu.rank() });
    }
    if !mu.is_dominant() {
        return Err(Error::NonDominant);
    }
    let d = rs.root_lengths();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for root in rs.positive_roots() {
        let mut top: u128 = 0;
        let mut bottom: u128 = 0;
        for ((&k, &l), &dj) in root.iter().zip(mu.dynkin()).zip(d) {
            let (k, l, dj) = (k as u128, l as u128, dj as u128);
            top = (l + 1)
                .checked_mul(k * dj)
                .and_then(|x| x.checked_add(top))
                .ok_or(Error::Overflow)?;
            bottom += k * dj;
        }
        num = num.checked_mul(top).ok_or(Error::Overflow)?;
        den = den.checked_mul(bottom).ok_or(Error::Overflow)?;
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    if den != 1 {
        return Err(Error::Internal("Weyl dimension is not an integer".into()));
    }
    u64::try_from(num).map_err(|_| Error::Overflow)
}

/// All weights of the irreducible module with highest weight `mu`, with
/// multiplicities from Freudenthal's formula.
pub fn weight_system(rs: &RootSystem, mu: &Weight, limits: &Limits) -> Result<WeightSystem> {
    let dim = weyl_dim(rs, mu)?;
    if dim > limits.dim_ceiling {
        return Err(Error::DimensionCeiling { dim, ceiling: limits.dim_ceiling });
    }

    let dominant = dominant_weights(rs, mu);
    let mults = dominant_multiplicities(rs, mu, &dominant)?;

    let mut entries = BTreeMap::new();
    for (lambda, m) in mults {
        for w in orbit(rs, &lambda) {
            entries.insert(rs.weight_unchecked(w), m);
        }
    }
    let ws = WeightSystem { highest_weight: mu.clone(), entries };
    if ws.dim() != dim {
        return Err(Error::Internal("Freudenthal total disagrees with the Weyl dimension".into()));
    }
    Ok(ws)
}

/// Dominant weights below `mu`, paired with their depth `|μ − λ|`, sorted by
/// depth.
fn dominant_weights(rs: &RootSystem, mu: &Weight) -> Vec<(usize, Vec<i64>)> {
    let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|a| rs.root_to_dynkin(a)).collect();
    let heights: Vec<usize> = rs.positive_roots().iter().map(|a| a.iter().sum::<i64>() as usize).collect();
    let mut depth: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    depth.insert(mu.dynkin().to_vec(), 0);
    queue.push_back(mu.dynkin().to_vec());
    while let Some(lambda) = queue.pop_front() {
        let here = depth[&lambda];
        for (alpha, &h) in roots.iter().zip(&heights) {
            let next: Vec<i64> = lambda.iter().zip(alpha).map(|(a, b)| a - b).collect();
            if next.iter().any(|&x| x < 0) || depth.contains_key(&next) {
                continue;
            }
            depth.insert(next.clone(), here + h);
            queue.push_back(next);
        }
    }
    let mut out: Vec<(usize, Vec<i64>)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    out.sort();
    out
}

fn dominant_multiplicities(
    rs: &RootSystem,
    mu: &Weight,
    dominant: &[(usize, Vec<i64>)],
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let r = rs.rank();
    let rho = alloc::vec![1i64; r];
    let shifted = |w: &[i64]| -> Vec<i64> { w.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top = {
        let s = shifted(mu.dynkin());
        rs.form(&s, &s)
    };
    let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|a| rs.root_to_dynkin(a)).collect();

    let mut mults: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (depth, lambda) in dominant {
        if *depth == 0 {
            mults.insert(lambda.clone(), 1);
            continue;
        }
        let s = shifted(lambda);
        let lhs = top - rs.form(&s, &s);
        if lhs <= Q::zero() {
            return Err(Error::Internal("non-positive Freudenthal denominator".into()));
        }
        let mut rhs = Q::zero();
        for alpha in &roots {
            let mut probe = lambda.clone();
            loop {
                for (x, a) in probe.iter_mut().zip(alpha) {
                    *x += a;
                }
                let mut rep = probe.clone();
                rs.to_dominant(&mut rep);
                let Some(&m) = mults.get(&rep) else { break };
                rhs += rs.form(&probe, alpha) * Q::from_integer(m as i64);
            }
        }
        let m = rhs * 2 / lhs;
        if !m.is_integer() || m.to_integer() < 0 {
            return Err(Error::Internal("Freudenthal multiplicity is not a non-negative integer".into()));
        }
        let m = m.to_integer() as u64;
        if m > 0 {
            mults.insert(lambda.clone(), m);
        }
    }
    Ok(mults)
}

/// The Weyl orbit of a dominant weight, by closure under simple reflections.
fn orbit(rs: &RootSystem, dominant: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut seen = BTreeSet::new();
    let mut stack = alloc::vec![dominant.to_vec()];
    seen.insert(dominant.to_vec());
    while let Some(w) = stack.pop() {
        for j in 0..w.len() {
            if w[j] <= 0 {
                continue;
            }
            let mut next = w.clone();
            rs.reflect(&mut next, j);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::*;
    use crate::rootsys::{build_root_system, Family, LieType};
    use crate::weightsys::is_weight_multiplicity_free;

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(LieType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        let c3 = rs(Family::C, 3);
        assert_eq!(weyl_dim(&c3, &c3.fundamental_weight(3).unwrap()), Ok(14));
        for r in 2..=10 {
            let b = rs(Family::B, r);
            assert_eq!(weyl_dim(&b, &b.fundamental_weight(r).unwrap()), Ok(1 << r));
        }
        let e7 = rs(Family::E, 7);
        assert_eq!(weyl_dim(&e7, &e7.fundamental_weight(7).unwrap()), Ok(56));
        assert_eq!(weyl_dim(&e7, &e7.zero_weight()), Ok(1));
        let e8 = rs(Family::E, 8);
        assert_eq!(weyl_dim(&e8, &e8.fundamental_weight(8).unwrap()), Ok(248));
        let f4 = rs(Family::F, 4);
        assert_eq!(weyl_dim(&f4, &f4.fundamental_weight(1).unwrap()), Ok(52));
        assert_eq!(weyl_dim(&f4, &f4.fundamental_weight(4).unwrap()), Ok(26));
        let g2 = rs(Family::G, 2);
        assert_eq!(weyl_dim(&g2, &g2.fundamental_weight(1).unwrap()), Ok(7));
        assert_eq!(weyl_dim(&g2, &g2.fundamental_weight(2).unwrap()), Ok(14));
        let e6 = rs(Family::E, 6);
        assert_eq!(weyl_dim(&e6, &e6.fundamental_weight(1).unwrap()), Ok(27));
    }

    #[test]
    fn non_dominant_is_rejected() {
        let a2 = rs(Family::A, 2);
        let w = a2.weight(vec![1, -1]).unwrap();
        assert_eq!(weyl_dim(&a2, &w), Err(Error::NonDominant));
    }

    #[test]
    fn ceiling_is_enforced() {
        let a3 = rs(Family::A, 3);
        let w = a3.weight(vec![20, 0, 0]).unwrap();
        let limits = Limits { dim_ceiling: 100, ..Limits::default() };
        assert_eq!(
            weight_system(&a3, &w, &limits),
            Err(Error::DimensionCeiling { dim: 1771, ceiling: 100 })
        );
    }

    #[test]
    fn a3_wedge2_lowering_list() {
        let a3 = rs(Family::A, 3);
        let ws = weight_system(&a3, &a3.fundamental_weight(2).unwrap(), &Limits::default()).unwrap();
        assert!(is_weight_multiplicity_free(&ws));
        let expected = vec![
            vec![0, 0, 0],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 0],
            vec![1, 1, 1],
            vec![1, 2, 1],
        ];
        assert_eq!(ws.lowering_vectors(&a3), expected);
    }

    #[test]
    fn c3_omega3_lowering_list() {
        let c3 = rs(Family::C, 3);
        let ws = weight_system(&c3, &c3.fundamental_weight(3).unwrap(), &Limits::default()).unwrap();
        assert_eq!(ws.len(), 14);
        let lv = ws.lowering_vectors(&c3);
        for v in [[0, 0, 0], [0, 0, 1], [0, 1, 1], [0, 2, 1], [0, 2, 2], [1, 1, 1], [1, 2, 1], [2, 4, 3]] {
            assert!(lv.contains(&v.to_vec()), "{v:?}");
        }
    }

    #[test]
    fn g2_standard_lowering_list() {
        let g2 = rs(Family::G, 2);
        let ws = weight_system(&g2, &g2.fundamental_weight(1).unwrap(), &Limits::default()).unwrap();
        let expected = vec![
            vec![0, 0],
            vec![1, 0],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
            vec![4, 2],
        ];
        assert_eq!(ws.lowering_vectors(&g2), expected);
    }

    #[test]
    fn a2_adjoint_has_zero_weight_twice() {
        let a2 = rs(Family::A, 2);
        let ws = weight_system(&a2, &a2.weight(vec![1, 1]).unwrap(), &Limits::default()).unwrap();
        assert_eq!(ws.dim(), 8);
        assert_eq!(ws.multiplicity(&a2.zero_weight()), 2);
        assert!(!is_weight_multiplicity_free(&ws));
    }

    #[test]
    fn trivial_module() {
        let e8 = rs(Family::E, 8);
        let ws = weight_system(&e8, &e8.zero_weight(), &Limits::default()).unwrap();
        assert_eq!(ws.dim(), 1);
        assert!(is_weight_multiplicity_free(&ws));
    }

    #[test]
    fn e8_adjoint() {
        let e8 = rs(Family::E, 8);
        let ws = weight_system(&e8, &e8.fundamental_weight(8).unwrap(), &Limits::default()).unwrap();
        assert_eq!(ws.len(), 241);
        assert_eq!(ws.multiplicity(&e8.zero_weight()), 8);
    }
}
