//! Weight systems of irreducible highest-weight modules.

mod catalog;
mod freudenthal;
mod spin;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::rootsys::{RootSystem, Weight};
use crate::{Limits, Result};

pub use catalog::{mf_catalog, MfCatalogEntry};
pub use freudenthal::{weight_system, weyl_dim};
pub use spin::{spin_weight_oracle, SpinKind};

/// The weights of an irreducible module with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    highest_weight: Weight,
    entries: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    /// Assembles a weight system from parts. No invariant is checked beyond
    /// the highest weight being present.
    pub fn from_parts(highest_weight: Weight, entries: BTreeMap<Weight, u64>) -> Option<Self> {
        entries.contains_key(&highest_weight).then_some(WeightSystem { highest_weight, entries })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Dimension of the module, i.e. the sum of all multiplicities.
    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Lowering coordinates `(λ^1, …, λ^r)` of every weight, so that
    /// `λ = μ − Σ λ^i σ_i`, sorted.
    pub fn lowering_vectors(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = self
            .entries
            .keys()
            .filter_map(|w| rs.lowering_coords(&self.highest_weight, w))
            .collect();
        out.sort();
        out
    }
}

pub fn is_weight_multiplicity_free(ws: &WeightSystem) -> bool {
    ws.entries.values().all(|&m| m == 1)
}

/// Anything able to hand out weight systems, such as a cache.
pub trait WeightSystemSource: Sync {
    fn weight_system(&self, rs: &RootSystem, mu: &Weight, limits: &Limits) -> Result<Arc<WeightSystem>>;
}

/// Computes every request from scratch.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compute;

impl WeightSystemSource for Compute {
    fn weight_system(&self, rs: &RootSystem, mu: &Weight, limits: &Limits) -> Result<Arc<WeightSystem>> {
        weight_system(rs, mu, limits).map(Arc::new)
    }
}
