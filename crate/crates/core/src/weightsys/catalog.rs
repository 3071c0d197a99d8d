use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::rootsys::{Family, LieType, RootSystem, Weight};
use crate::Limits;

/// One weight-multiplicity-free irreducible module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MfCatalogEntry {
    pub lie_type: LieType,
    pub highest_weight: Weight,
    /// Short name such as `standard`, `spin`, `wedge:2` or `sym:5`.
    pub label: String,
    pub self_dual: bool,
}

/// Every nontrivial weight-multiplicity-free irreducible module of the
/// given type. For `A_r` the symmetric powers stop at the configured degree
/// ceiling.
pub fn mf_catalog(rs: &RootSystem, limits: &Limits) -> Vec<MfCatalogEntry> {
    let t = rs.lie_type();
    let r = t.rank();
    let mut picks: Vec<(String, Vec<i64>)> = Vec::new();
    let unit = |k: usize| {
        let mut d = vec![0i64; r];
        d[k - 1] = 1;
        d
    };
    match t.family() {
        Family::A => {
            for k in 1..=r {
                picks.push((format!("wedge:{k}"), unit(k)));
            }
            for a in 2..=limits.sym_degree_ceiling as i64 {
                let mut d = vec![0; r];
                d[0] = a;
                picks.push((format!("sym:{a}"), d));
            }
            if r > 1 {
                for a in 2..=limits.sym_degree_ceiling as i64 {
                    let mut d = vec![0; r];
                    d[r - 1] = a;
                    picks.push((format!("sym-dual:{a}"), d));
                }
            }
        }
        Family::B => {
            picks.push(("standard".into(), unit(1)));
            picks.push(("spin".into(), unit(r)));
        }
        Family::C => {
            picks.push(("standard".into(), unit(1)));
            if r == 2 || r == 3 {
                picks.push((format!("wedge:{r}"), unit(r)));
            }
        }
        Family::D => {
            picks.push(("standard".into(), unit(1)));
            picks.push(("spin-".into(), unit(r - 1)));
            picks.push(("spin".into(), unit(r)));
        }
        Family::E => match r {
            6 => {
                picks.push(("minuscule:1".into(), unit(1)));
                picks.push(("minuscule:6".into(), unit(6)));
            }
            7 => picks.push(("minuscule:7".into(), unit(7))),
            _ => {}
        },
        Family::F => {}
        Family::G => picks.push(("standard".into(), unit(1))),
    }
    picks
        .into_iter()
        .map(|(label, d)| {
            let highest_weight = rs.weight_unchecked(d);
            let self_dual = rs.dual_weight(&highest_weight) == highest_weight;
            MfCatalogEntry { lie_type: t, highest_weight, label, self_dual }
        })
        .collect()
}
