//! Grading elements, their eigenvalues on a module, Hodge numbers, and the
//! principal predicate.
//!
//! A grading element is the integer vector `n` with `σ_i(T) = n_i`. A weight
//! `λ` with simple-root coordinates `c` has eigenvalue `λ(T) = Σ c_i n_i`,
//! which lies in `½ℤ` for every weight of a module; [`HalfInt`] stores it
//! doubled.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::linalg::Q;
use crate::rootsys::{RootSystem, Weight};
use crate::weightsys::{Compute, WeightSystem, WeightSystemSource};
use crate::{Error, Limits, Result};

/// An element of `½ℤ`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Converts an exact rational, failing unless it lies in `½ℤ`.
    pub fn from_rational(q: Q) -> Result<Self> {
        let t = q * 2;
        if t.is_integer() {
            Ok(HalfInt { twice: t.to_integer() })
        } else {
            Err(Error::NotHalfIntegral)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> Self {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// The vector `(n_1, …, n_r)` of a grading element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(transparent))]
pub struct GradingElement(pub Vec<i64>);

impl GradingElement {
    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for GradingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// How the complexified module is assembled from `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Pairing {
    /// `U` is self-dual and `V_C = U`.
    SelfDualSingle,
    /// `U` is not self-dual and `V_C = U ⊕ U*`.
    ComplexPair,
}

impl Pairing {
    pub fn natural(rs: &RootSystem, mu: &Weight) -> Pairing {
        if rs.is_self_dual(mu) {
            Pairing::SelfDualSingle
        } else {
            Pairing::ComplexPair
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Rcq {
    Real,
    Quaternionic,
    Complex,
}

impl fmt::Display for Rcq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rcq::Real => "real",
            Rcq::Quaternionic => "quaternionic",
            Rcq::Complex => "complex",
        })
    }
}

/// An irreducible module `U` together with its pairing and weight system.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    rs: Arc<RootSystem>,
    mu: Weight,
    pairing: Pairing,
    weights: Arc<WeightSystem>,
}

impl ModuleSpec {
    /// Builds a spec, computing the weight system from scratch.
    pub fn new(rs: Arc<RootSystem>, mu: Weight, pairing: Pairing, limits: &Limits) -> Result<Self> {
        Self::with_source(rs, mu, pairing, &Compute, limits)
    }

    /// Builds a spec whose pairing follows from the self-duality of `mu`.
    pub fn natural(rs: Arc<RootSystem>, mu: Weight, limits: &Limits) -> Result<Self> {
        let pairing = Pairing::natural(&rs, &mu);
        Self::new(rs, mu, pairing, limits)
    }

    pub fn with_source(
        rs: Arc<RootSystem>,
        mu: Weight,
        pairing: Pairing,
        source: &dyn WeightSystemSource,
        limits: &Limits,
    ) -> Result<Self> {
        if mu.rank() != rs.rank() {
            return Err(Error::LengthMismatch { expected: rs.rank(), found: mu.rank() });
        }
        if !mu.is_dominant() {
            return Err(Error::NonDominant);
        }
        if Pairing::natural(&rs, &mu) != pairing {
            return Err(Error::PairingMismatch);
        }
        let weights = source.weight_system(&rs, &mu, limits)?;
        Ok(ModuleSpec { rs, mu, pairing, weights })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.mu
    }

    pub fn dual_highest_weight(&self) -> Weight {
        self.rs.dual_weight(&self.mu)
    }

    pub fn pairing(&self) -> Pairing {
        self.pairing
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    /// `dim V_C` for the nominal complexification (`U` or `U ⊕ U*`).
    pub fn nominal_dim(&self) -> u64 {
        match self.pairing {
            Pairing::SelfDualSingle => self.weights.dim(),
            Pairing::ComplexPair => 2 * self.weights.dim(),
        }
    }

    /// `(dim V_C − 1)/2` for the nominal complexification.
    pub fn target_m(&self) -> HalfInt {
        HalfInt::from_twice(self.nominal_dim() as i64 - 1)
    }
}

/// `λ(T)` for the grading element `g`.
pub fn eigenvalue(rs: &RootSystem, lam: &Weight, g: &GradingElement) -> Result<HalfInt> {
    if lam.rank() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), found: lam.rank() });
    }
    if g.0.len() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), found: g.0.len() });
    }
    let v = lam
        .root_coords()
        .iter()
        .zip(&g.0)
        .fold(Q::zero(), |acc, (c, &n)| acc + *c * Q::from_integer(n));
    HalfInt::from_rational(v)
}

/// Eigenvalue multiset of a grading element on `V_C`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EigenReport {
    pub multiset: BTreeMap<HalfInt, u64>,
    /// Largest eigenvalue.
    pub m: HalfInt,
    /// `h_ℓ` for `ℓ = m, m−1, …, −m`.
    pub hodge_numbers: Vec<u64>,
    /// Some eigenvalue is not of the form `m − k` for an integer `k`.
    pub off_lattice: bool,
    pub dim: u64,
}

impl EigenReport {
    fn from_multiset(multiset: BTreeMap<HalfInt, u64>) -> Self {
        let m = multiset.keys().next_back().copied().unwrap_or(HalfInt::ZERO);
        let dim = multiset.values().sum();
        let mut hodge_numbers = Vec::new();
        let mut l = m;
        while l >= -m {
            hodge_numbers.push(multiset.get(&l).copied().unwrap_or(0));
            l = l - HalfInt::from_int(1);
        }
        let off_lattice = multiset.keys().any(|k| (m.twice() - k.twice()) % 2 != 0 || *k < -m);
        EigenReport { multiset, m, hodge_numbers, off_lattice, dim }
    }

    /// Every Hodge number equals one and nothing lies off the lattice.
    pub fn all_ones(&self) -> bool {
        !self.off_lattice && self.hodge_numbers.iter().all(|&h| h == 1)
    }
}

fn module_multiset(spec: &ModuleSpec, g: &GradingElement, copies_of_u: u64) -> Result<BTreeMap<HalfInt, u64>> {
    let mut multiset = BTreeMap::new();
    for (w, mult) in spec.weights.iter() {
        let e = eigenvalue(&spec.rs, w, g)?;
        *multiset.entry(e).or_insert(0) += mult * copies_of_u;
        if spec.pairing == Pairing::ComplexPair {
            *multiset.entry(-e).or_insert(0) += mult;
        }
    }
    Ok(multiset)
}

/// Eigenvalues of `g` on the nominal complexification: `U` when self-dual,
/// `U ⊕ U*` otherwise.
pub fn nominal_report(spec: &ModuleSpec, g: &GradingElement) -> Result<EigenReport> {
    module_multiset(spec, g, 1).map(EigenReport::from_multiset)
}

/// Eigenvalues of `g` on `V_C`. A quaternionic self-dual `U` contributes
/// `V_C = U ⊕ U`, so its multiplicities are doubled.
pub fn eigen_report(spec: &ModuleSpec, g: &GradingElement) -> Result<EigenReport> {
    let copies = match rcq_structure(spec, g)? {
        Rcq::Quaternionic => 2,
        _ => 1,
    };
    module_multiset(spec, g, copies).map(EigenReport::from_multiset)
}

/// `T^cpt`: 2 on every node where `n_i` is even, 0 elsewhere.
pub fn t_compact(g: &GradingElement) -> GradingElement {
    GradingElement(g.0.iter().map(|n| if n % 2 == 0 { 2 } else { 0 }).collect())
}

/// Real, quaternionic or complex, decided by duality and by the parity of
/// `μ(T^cpt)`.
pub fn rcq_structure(spec: &ModuleSpec, g: &GradingElement) -> Result<Rcq> {
    if !spec.rs.is_self_dual(&spec.mu) {
        return Ok(Rcq::Complex);
    }
    let v = eigenvalue(&spec.rs, &spec.mu, &t_compact(g))?;
    if !v.is_integer() {
        return Err(Error::Internal("μ(T^cpt) is not an integer for a self-dual module".into()));
    }
    Ok(if (v.twice() / 2) % 2 == 0 { Rcq::Real } else { Rcq::Quaternionic })
}

/// Why a grading element fails to be principal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RejectReason {
    NonPositiveN,
    QuaternionicSelfDual,
    MultiplicityAboveOne,
    GapInEigenvalues,
    WrongM,
    SharedWeightWithDual,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RejectReason::NonPositiveN => "non-positive n",
            RejectReason::QuaternionicSelfDual => "structure: quaternionic",
            RejectReason::MultiplicityAboveOne => "eigenvalue multiplicity above one",
            RejectReason::GapInEigenvalues => "gap in eigenvalues",
            RejectReason::WrongM => "top eigenvalue differs from (dim - 1)/2",
            RejectReason::SharedWeightWithDual => "U and U* share a weight",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    Principal,
    Rejected(RejectReason),
}

impl Verdict {
    pub fn is_principal(self) -> bool {
        self == Verdict::Principal
    }
}

/// Every clause of the principal test, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalCheck {
    pub positive_n: bool,
    pub structure: Rcq,
    pub multiplicity_free: bool,
    pub no_gaps: bool,
    pub m_matches: bool,
    pub disjoint_from_dual: bool,
    /// Eigenvalues on the nominal complexification, or `None` when they leave
    /// `½ℤ` (then no unbroken chain `m, …, −m` is possible).
    pub report: Option<EigenReport>,
}

impl PrincipalCheck {
    /// Failed clauses, in the order they are reported.
    pub fn failures(&self) -> Vec<RejectReason> {
        let clauses = [
            (self.positive_n, RejectReason::NonPositiveN),
            (self.structure != Rcq::Quaternionic, RejectReason::QuaternionicSelfDual),
            (self.multiplicity_free, RejectReason::MultiplicityAboveOne),
            (self.no_gaps, RejectReason::GapInEigenvalues),
            (self.m_matches, RejectReason::WrongM),
            (self.disjoint_from_dual, RejectReason::SharedWeightWithDual),
        ];
        clauses.iter().filter(|(ok, _)| !ok).map(|&(_, r)| r).collect()
    }

    pub fn verdict(&self) -> Verdict {
        match self.failures().first() {
            None => Verdict::Principal,
            Some(&r) => Verdict::Rejected(r),
        }
    }
}

pub fn check_principal(spec: &ModuleSpec, g: &GradingElement) -> Result<PrincipalCheck> {
    let positive_n = g.0.iter().all(|&n| n >= 1);
    let structure = rcq_structure(spec, g)?;
    let (report, multiplicity_free, no_gaps, m_matches) = match nominal_report(spec, g) {
        Ok(report) => {
            let multiplicity_free = report.multiset.values().all(|&h| h == 1);
            let no_gaps = !report.off_lattice && report.hodge_numbers.iter().all(|&h| h >= 1);
            let m_matches = report.m == spec.target_m();
            (Some(report), multiplicity_free, no_gaps, m_matches)
        }
        Err(Error::NotHalfIntegral) => (None, rational_multiplicity_free(spec, g), false, false),
        Err(e) => return Err(e),
    };
    let disjoint_from_dual = match spec.pairing {
        Pairing::SelfDualSingle => true,
        Pairing::ComplexPair => {
            let own: BTreeSet<&[i64]> = spec.weights.entries().keys().map(|w| w.dynkin()).collect();
            spec.weights.entries().keys().all(|w| {
                let neg: Vec<i64> = w.dynkin().iter().map(|x| -x).collect();
                !own.contains(neg.as_slice())
            })
        }
    };
    Ok(PrincipalCheck { positive_n, structure, multiplicity_free, no_gaps, m_matches, disjoint_from_dual, report })
}

fn rational_multiplicity_free(spec: &ModuleSpec, g: &GradingElement) -> bool {
    let value = |w: &Weight| {
        w.root_coords()
            .iter()
            .zip(&g.0)
            .fold(Q::zero(), |acc, (c, &n)| acc + *c * Q::from_integer(n))
    };
    let mut seen: BTreeMap<Q, u64> = BTreeMap::new();
    for (w, mult) in spec.weights.iter() {
        let e = value(w);
        *seen.entry(e).or_insert(0) += mult;
        if spec.pairing == Pairing::ComplexPair {
            *seen.entry(-e).or_insert(0) += mult;
        }
    }
    seen.values().all(|&m| m == 1)
}

/// Principal test; the rejection names the first failed clause.
pub fn is_principal(spec: &ModuleSpec, g: &GradingElement) -> Result<Verdict> {
    check_principal(spec, g).map(|c| c.verdict())
}
