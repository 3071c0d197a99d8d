//! Cartan data for the simple complex Lie algebras, with Bourbaki node
//! numbering throughout.
//!
//! Conventions: `cartan[i][j] = 2(α_i, α_j) / (α_i, α_i)`, so the Dynkin labels
//! of a weight are `cartan · root_coords` and `root_coords = cartan_inv ·
//! dynkin`. Column `j` of `cartan` holds the Dynkin labels of `α_j`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::linalg::{self, Q};
use crate::{Error, Result};

/// Exact rational used for simple-root coordinates.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            _ => Err(()),
        }
    }
}

/// A simple type such as `B5` or `E7`. Construction validates the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "String", try_from = "String")
)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A string that is not a valid type name such as `B5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseLieTypeError;

impl fmt::Display for ParseLieTypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a Lie type such as B5 or E7")
    }
}

impl core::error::Error for ParseLieTypeError {}

impl FromStr for LieType {
    type Err = ParseLieTypeError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseLieTypeError> {
        let split = s.char_indices().nth(1).map_or(s.len(), |(i, _)| i);
        let (family, rank) = s.split_at(split);
        let family: Family = family.parse().map_err(|_| ParseLieTypeError)?;
        let rank: usize = rank.parse().map_err(|_| ParseLieTypeError)?;
        LieType::new(family, rank).map_err(|_| ParseLieTypeError)
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        alloc::format!("{t}")
    }
}

impl TryFrom<String> for LieType {
    type Error = ParseLieTypeError;

    fn try_from(s: String) -> core::result::Result<Self, ParseLieTypeError> {
        s.parse()
    }
}

/// A weight carried in both bases: integer Dynkin labels (coefficients on the
/// fundamental weights) and rational simple-root coordinates.
///
/// Equality, ordering and hashing only look at the Dynkin labels.
#[derive(Debug, Clone)]
pub struct Weight {
    dynkin: Vec<i64>,
    root_coords: Vec<Rational>,
}

impl Weight {
    pub fn dynkin(&self) -> &[i64] {
        &self.dynkin
    }

    pub fn root_coords(&self) -> &[Rational] {
        &self.root_coords
    }

    pub fn rank(&self) -> usize {
        self.dynkin.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.dynkin.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.dynkin.iter().all(|&x| x == 0)
    }
}

impl core::ops::Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            dynkin: self.dynkin.iter().map(|x| -x).collect(),
            root_coords: self.root_coords.iter().map(|x| -x).collect(),
        }
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.dynkin == other.dynkin
    }
}

impl Eq for Weight {}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dynkin.cmp(&other.dynkin)
    }
}

impl core::hash::Hash for Weight {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.dynkin.hash(state);
    }
}

/// Structural data of one simple root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rational>>,
    /// Squared lengths `(α_i, α_i)`, short roots normalised to the smallest value.
    root_lengths: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    weyl_vector_rho: Vec<Rational>,
    /// `duality[i]` is the node that `ω_{i+1}` is sent to by `μ ↦ μ*` (0-based).
    duality: Vec<usize>,
}

/// Builds the root system of a simple type.
pub fn build_root_system(t: LieType) -> Result<RootSystem> {
    RootSystem::new(t)
}

/// `ω_k` for `1 ≤ k ≤ rank`.
pub fn fundamental_weight(rs: &RootSystem, k: usize) -> Result<Weight> {
    rs.fundamental_weight(k)
}

/// `μ ↦ μ*`, the highest weight of the dual module.
pub fn dual_weight(rs: &RootSystem, mu: &Weight) -> Weight {
    rs.dual_weight(mu)
}

impl RootSystem {
    pub fn new(t: LieType) -> Result<Self> {
        let r = t.rank();
        let mut cartan = vec![vec![0i64; r]; r];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        };
        let mut root_lengths = vec![2i64; r];
        let mut duality: Vec<usize> = (0..r).collect();
        match t.family() {
            Family::A => {
                for i in 0..r.saturating_sub(1) {
                    link(i, i + 1);
                }
                duality.reverse();
            }
            Family::B => {
                for i in 0..r - 1 {
                    link(i, i + 1);
                }
                cartan[r - 1][r - 2] = -2;
                root_lengths[r - 1] = 1;
            }
            Family::C => {
                for i in 0..r - 1 {
                    link(i, i + 1);
                }
                cartan[r - 2][r - 1] = -2;
                for len in root_lengths.iter_mut().take(r - 1) {
                    *len = 1;
                }
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1);
                }
                link(r - 3, r - 1);
                if r % 2 == 1 {
                    duality.swap(r - 2, r - 1);
                }
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..r - 1 {
                    link(i, i + 1);
                }
                if r == 6 {
                    duality = vec![5, 1, 4, 3, 2, 0];
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
                cartan[2][1] = -2;
                root_lengths = vec![2, 2, 1, 1];
            }
            Family::G => {
                cartan[0][1] = -3;
                cartan[1][0] = -1;
                root_lengths = vec![1, 3];
            }
        }

        let cartan_inv = linalg::inverse(&cartan)
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let positive_roots = positive_roots(&cartan);
        let mut weyl_vector_rho = vec![Q::zero(); r];
        for root in &positive_roots {
            for (acc, &x) in weyl_vector_rho.iter_mut().zip(root) {
                *acc += Q::new(x, 2);
            }
        }

        Ok(RootSystem {
            lie_type: t,
            cartan,
            cartan_inv,
            root_lengths,
            positive_roots,
            weyl_vector_rho,
            duality,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<Rational>] {
        &self.cartan_inv
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// ρ in simple-root coordinates.
    pub fn weyl_vector_rho(&self) -> &[Rational] {
        &self.weyl_vector_rho
    }

    /// The duality involution on nodes, 0-based.
    pub fn duality(&self) -> &[usize] {
        &self.duality
    }

    pub fn root_lengths(&self) -> &[i64] {
        &self.root_lengths
    }

    /// Wraps Dynkin labels into a [`Weight`].
    pub fn weight(&self, dynkin: Vec<i64>) -> Result<Weight> {
        if dynkin.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), found: dynkin.len() });
        }
        let root_coords = linalg::mul_vec(&self.cartan_inv, &dynkin);
        Ok(Weight { dynkin, root_coords })
    }

    pub(crate) fn weight_unchecked(&self, dynkin: Vec<i64>) -> Weight {
        let root_coords = linalg::mul_vec(&self.cartan_inv, &dynkin);
        Weight { dynkin, root_coords }
    }

    pub fn zero_weight(&self) -> Weight {
        self.weight_unchecked(vec![0; self.rank()])
    }

    pub fn fundamental_weight(&self, k: usize) -> Result<Weight> {
        let r = self.rank();
        if k == 0 || k > r {
            return Err(Error::IndexOutOfRange { index: k, rank: r });
        }
        let mut d = vec![0; r];
        d[k - 1] = 1;
        Ok(self.weight_unchecked(d))
    }

    pub fn dual_weight(&self, mu: &Weight) -> Weight {
        let mut d = vec![0; self.rank()];
        for (i, &x) in mu.dynkin.iter().enumerate() {
            d[self.duality[i]] = x;
        }
        self.weight_unchecked(d)
    }

    pub fn is_self_dual(&self, mu: &Weight) -> bool {
        mu.dynkin.iter().enumerate().all(|(i, &x)| mu.dynkin[self.duality[i]] == x)
    }

    /// The nontrivial Dynkin diagram automorphism, as a node permutation
    /// (0-based): reversal for `A_r`, the spin-node swap for `D_r`, the flip of
    /// `E_6`. Other types have none.
    pub fn diagram_flip(&self) -> Option<Vec<usize>> {
        let r = self.rank();
        match (self.lie_type.family(), r) {
            (Family::A, r) if r >= 2 => Some((0..r).rev().collect()),
            (Family::D, _) => {
                let mut p: Vec<usize> = (0..r).collect();
                p.swap(r - 2, r - 1);
                Some(p)
            }
            (Family::E, 6) => Some(self.duality.clone()),
            _ => None,
        }
    }

    /// Dynkin labels of the simple root `α_j` (0-based).
    pub(crate) fn simple_root_dynkin(&self, j: usize) -> impl Iterator<Item = i64> + '_ {
        self.cartan.iter().map(move |row| row[j])
    }

    /// Dynkin labels of a root lattice element given in simple-root coordinates.
    pub(crate) fn root_to_dynkin(&self, coords: &[i64]) -> Vec<i64> {
        self.cartan
            .iter()
            .map(|row| row.iter().zip(coords).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Simple reflection `s_j` on Dynkin labels, in place.
    pub(crate) fn reflect(&self, dynkin: &mut [i64], j: usize) {
        let c = dynkin[j];
        if c == 0 {
            return;
        }
        for (x, a) in dynkin.iter_mut().zip(self.simple_root_dynkin(j)) {
            *x -= c * a;
        }
    }

    /// Moves Dynkin labels into the dominant chamber with simple reflections.
    pub(crate) fn to_dominant(&self, dynkin: &mut [i64]) {
        while let Some(j) = dynkin.iter().position(|&x| x < 0) {
            self.reflect(dynkin, j);
        }
    }

    /// `2(x, y)` for weights given as Dynkin labels.
    pub(crate) fn form(&self, x: &[i64], y: &[i64]) -> Rational {
        let cx = linalg::mul_vec(&self.cartan_inv, x);
        self.form_root_dynkin(&cx, y)
    }

    /// `2(x, y)` with `x` in simple-root coordinates and `y` as Dynkin labels.
    pub(crate) fn form_root_dynkin(&self, x: &[Rational], y: &[i64]) -> Rational {
        x.iter()
            .zip(y)
            .zip(&self.root_lengths)
            .fold(Q::zero(), |acc, ((c, &l), &d)| acc + *c * Q::from_integer(l * d))
    }

    /// Integer simple-root coordinates of `mu - lambda`, or `None` when the
    /// difference is not in the root lattice.
    pub fn lowering_coords(&self, mu: &Weight, lambda: &Weight) -> Option<Vec<i64>> {
        mu.root_coords
            .iter()
            .zip(&lambda.root_coords)
            .map(|(a, b)| {
                let d = a - b;
                d.is_integer().then(|| d.to_integer())
            })
            .collect()
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            // ⟨β, α_i^∨⟩
            let pairing: i64 = cartan[i].iter().zip(&beta).map(|(a, b)| a * b).sum();
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if down[i] < 0 || !seen.contains(&down) {
                    break;
                }
                p += 1;
            }
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
        roots.push(beta);
    }
    roots.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    roots
}


#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(LieType::new(f, r).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn type_names_parse() {
        assert_eq!("B5".parse::<LieType>(), LieType::new(Family::B, 5).map_err(|_| ParseLieTypeError));
        assert_eq!("a12".parse::<LieType>().map(|t| t.rank()), Ok(12));
        assert!("E9".parse::<LieType>().is_err());
        assert!("B".parse::<LieType>().is_err());
        assert!("".parse::<LieType>().is_err());
        assert!("Bx".parse::<LieType>().is_err());
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(LieType::new(Family::A, 0).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::G, 3).is_err());
        assert!(LieType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn a3_roots_and_duality() {
        let a3 = rs(Family::A, 3);
        assert_eq!(a3.positive_roots().len(), 6);
        assert_eq!(a3.duality(), &[2, 1, 0]);
    }

    #[test]
    fn d5_swaps_spin_nodes() {
        let d5 = rs(Family::D, 5);
        assert_eq!(d5.duality(), &[0, 1, 2, 4, 3]);
        assert_eq!(rs(Family::D, 6).duality(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn g2_roots_and_duality() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.duality(), &[0, 1]);
        // ω_1 = 2σ_1 + σ_2
        let w1 = g2.fundamental_weight(1).unwrap();
        assert_eq!(w1.root_coords(), &[q(2, 1), q(1, 1)]);
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Family::A, 5, 15),
            (Family::B, 4, 16),
            (Family::C, 5, 25),
            (Family::D, 5, 20),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
        ];
        for (f, r, n) in cases {
            assert_eq!(rs(f, r).positive_roots().len(), n, "{f}{r}");
        }
    }

    #[test]
    fn c3_omega3() {
        let w = rs(Family::C, 3).fundamental_weight(3).unwrap();
        assert_eq!(w.root_coords(), &[q(1, 1), q(2, 1), q(3, 2)]);
    }

    #[test]
    fn a_omega1() {
        for r in 1..=8 {
            let w = rs(Family::A, r).fundamental_weight(1).unwrap();
            let expected: Vec<Rational> =
                (1..=r as i64).map(|i| q(r as i64 + 1 - i, r as i64 + 1)).collect();
            assert_eq!(w.root_coords(), expected.as_slice());
        }
    }

    #[test]
    fn type_a_fundamental_weights_match_closed_form() {
        // ω_k = (r+1-k)/(r+1)·Σ_{i≤k} iσ_i + k/(r+1)·Σ_{i>k} (r+1-i)σ_i
        for r in 1..=9i64 {
            let a = rs(Family::A, r as usize);
            for k in 1..=r {
                let w = a.fundamental_weight(k as usize).unwrap();
                for i in 1..=r {
                    let expected = if i <= k {
                        q((r + 1 - k) * i, r + 1)
                    } else {
                        q(k * (r + 1 - i), r + 1)
                    };
                    assert_eq!(w.root_coords()[(i - 1) as usize], expected);
                }
            }
        }
    }

    #[test]
    fn e6_omega1_and_e7_omega7() {
        let w = rs(Family::E, 6).fundamental_weight(1).unwrap();
        assert_eq!(w.root_coords(), &[q(4, 3), q(1, 1), q(5, 3), q(2, 1), q(4, 3), q(2, 3)]);
        let w = rs(Family::E, 7).fundamental_weight(7).unwrap();
        let expected: Vec<Rational> = [2, 3, 4, 6, 5, 4, 3].iter().map(|&x| q(x, 2)).collect();
        assert_eq!(w.root_coords(), expected.as_slice());
    }

    #[test]
    fn b_and_d_spin_weights() {
        // B_r: ω_r = ½(σ_1 + 2σ_2 + ⋯ + rσ_r)
        let b = rs(Family::B, 6);
        let w = b.fundamental_weight(6).unwrap();
        let expected: Vec<Rational> = (1..=6).map(|i| q(i, 2)).collect();
        assert_eq!(w.root_coords(), expected.as_slice());
        // D_r: ω_1 = σ_1 + ⋯ + σ_{r-2} + ½(σ_{r-1} + σ_r)
        let d = rs(Family::D, 7);
        let w = d.fundamental_weight(1).unwrap();
        assert_eq!(w.root_coords(), &[q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 2), q(1, 2)]);
        // ω_r = ½(σ_1 + ⋯ + (r-2)σ_{r-2}) + ¼((r-2)σ_{r-1} + rσ_r)
        let w = d.fundamental_weight(7).unwrap();
        assert_eq!(w.root_coords(), &[q(1, 2), q(1, 1), q(3, 2), q(2, 1), q(5, 2), q(5, 4), q(7, 4)]);
    }

    #[test]
    fn dual_weight_examples() {
        let a5 = rs(Family::A, 5);
        let w2 = a5.fundamental_weight(2).unwrap();
        assert_eq!(a5.dual_weight(&w2), a5.fundamental_weight(4).unwrap());
        let e7 = rs(Family::E, 7);
        let w7 = e7.fundamental_weight(7).unwrap();
        assert_eq!(e7.dual_weight(&w7), w7);
        let b4 = rs(Family::B, 4);
        let mu = b4.weight(vec![3, 0, 1, 2]).unwrap();
        assert_eq!(b4.dual_weight(&mu), mu);
    }

    #[test]
    fn weight_length_is_checked() {
        let a3 = rs(Family::A, 3);
        assert_eq!(
            a3.weight(vec![1, 0]),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        );
        assert!(a3.fundamental_weight(0).is_err());
        assert!(a3.fundamental_weight(4).is_err());
    }

    #[test]
    fn rho_has_dynkin_labels_one() {
        for (f, r) in [(Family::B, 5), (Family::G, 2), (Family::F, 4), (Family::E, 7)] {
            let s = rs(f, r);
            let ones = vec![1i64; r];
            let rho = s.weight(ones).unwrap();
            assert_eq!(rho.root_coords(), s.weyl_vector_rho());
        }
    }
}
