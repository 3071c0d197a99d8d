use alloc::vec::Vec;

use crate::rootsys::{Family, LieType};
use crate::{Error, Result};

/// Which spin module a closed-form weight list describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinKind {
    /// The spin module `ω_r` of `B_r`.
    BSpin,
    /// The half-spin module `ω_r` of `D_r`.
    DLast,
    /// The half-spin module `ω_{r−1}` of `D_r`.
    DSecondLast,
}

/// Lowering vectors `(λ^1, …, λ^r)` of a spin module, produced directly from
/// the step conditions rather than from a multiplicity computation.
///
/// For `B_r`: `λ^1 ∈ {0,1}` and `λ^i − λ^{i−1} ∈ {0,1}`.
/// For `D_r`: the same steps up to `λ^{r−2}`, then
/// `λ^r + λ^{r−1} − λ^{r−2} ∈ {0,1}` together with `λ^r − λ^{r−1} ∈ {0,1}`
/// (last node) or `λ^{r−1} − λ^r ∈ {0,1}` (second-to-last node).
pub fn spin_weight_oracle(t: LieType, which: SpinKind) -> Result<Vec<Vec<i64>>> {
    let r = t.rank();
    let mut out = match (t.family(), which) {
        (Family::B, SpinKind::BSpin) => {
            let mut out = Vec::with_capacity(1 << r);
            for bits in 0u64..(1 << r) {
                let mut v = Vec::with_capacity(r);
                let mut acc = 0;
                for i in 0..r {
                    acc += ((bits >> i) & 1) as i64;
                    v.push(acc);
                }
                out.push(v);
            }
            out
        }
        (Family::D, SpinKind::DLast | SpinKind::DSecondLast) => {
            let chain = r - 2;
            let mut out = Vec::with_capacity(1 << (r - 1));
            for bits in 0u64..(1 << chain) {
                let mut v = Vec::with_capacity(r);
                let mut acc = 0;
                for i in 0..chain {
                    acc += ((bits >> i) & 1) as i64;
                    v.push(acc);
                }
                for sum_step in 0..=1i64 {
                    for diff in 0..=1i64 {
                        // λ^{r−1} + λ^r = acc + sum_step, |λ^{r−1} − λ^r| = diff
                        let total = acc + sum_step;
                        if (total + diff) % 2 != 0 {
                            continue;
                        }
                        let high = (total + diff) / 2;
                        let low = total - high;
                        let (a, b) = if which == SpinKind::DLast { (low, high) } else { (high, low) };
                        let mut w = v.clone();
                        w.push(a);
                        w.push(b);
                        out.push(w);
                    }
                }
            }
            out
        }
        (family, _) => return Err(Error::WrongFamily { family }),
    };
    out.sort();
    Ok(out)
}
