//! Branch-and-bound search for grading elements whose eigenvalues on `V_C`
//! are exactly `m, m−1, …, −m`.
//!
//! Every weight of `V_C` is tracked by its depth `m − λ(T)`, a linear form in
//! the unknowns `n_1, …, n_r` (plus, for a complex pair, the gap `δ` between
//! the two extreme weights). At each node the smallest depth not yet covered
//! must be reached by stepping down one simple root from a weight whose depth
//! is already determined, which leaves one candidate value per free unknown.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::enumerate::scale;
use super::Orientation;
use crate::hodge::{GradingElement, HalfInt, Pairing};
use crate::linalg::Q;
use crate::rootsys::{RootSystem, Weight};
use crate::weightsys::{is_weight_multiplicity_free, WeightSystem};
use crate::{Error, Result};

/// The search problem in depth coordinates.
struct Layout {
    rank: usize,
    /// Unknowns: `n_1..n_r`, then `δ` for a complex pair.
    vars: usize,
    /// Depth of each weight as coefficients on the unknowns.
    items: Vec<Vec<i64>>,
    /// Per unknown: `(parent, child)` with `child = parent + e_var`.
    /// A `None` parent stands for a virtual weight of depth 0.
    edges: Vec<Vec<(Option<usize>, usize)>>,
    /// Scaled top-weight constraint `Σ a_i n_i = target`.
    a: Vec<i64>,
    target: i64,
    /// Scaled `δ = Σ gap_i n_i / scale`.
    gap: Option<(Vec<i64>, i64)>,
    pinned: Option<(usize, i64)>,
}

impl Layout {
    fn new(
        rs: &RootSystem,
        ws: &WeightSystem,
        pairing: Pairing,
        orientation: Orientation,
        pinned: Option<(usize, i64)>,
    ) -> Result<Self> {
        let r = rs.rank();
        let mu = ws.highest_weight();
        let own: Vec<Weight> = ws.entries().keys().cloned().collect();
        let (top, top_weights, other, other_weights) = match pairing {
            Pairing::SelfDualSingle => (mu.clone(), own, None, Vec::new()),
            Pairing::ComplexPair => {
                let dual = rs.dual_weight(mu);
                let negated: Vec<Weight> = own.iter().map(|w| -w).collect();
                match orientation {
                    Orientation::Canonical => (mu.clone(), own, Some(dual), negated),
                    Orientation::Dual => (dual, negated, Some(mu.clone()), own),
                }
            }
        };
        let vars = if other.is_some() { r + 1 } else { r };

        let lowering = |top: &Weight, w: &Weight| -> Result<Vec<i64>> {
            rs.lowering_coords(top, w).ok_or_else(|| Error::Internal("weight outside the root lattice coset".into()))
        };
        let mut items = Vec::new();
        let mut parts: Vec<BTreeMap<Vec<i64>, usize>> = Vec::new();
        for (head, weights, offset) in [(Some(&top), &top_weights, 0i64), (other.as_ref(), &other_weights, 1)] {
            let Some(head) = head else { continue };
            let mut index = BTreeMap::new();
            for w in weights {
                let mut coeffs = lowering(head, w)?;
                index.insert(coeffs.clone(), items.len());
                if vars > r {
                    coeffs.push(offset);
                }
                items.push(coeffs);
            }
            parts.push(index);
        }

        let mut edges = vec![Vec::new(); vars];
        for index in &parts {
            for (l, &i) in index {
                for (v, list) in edges.iter_mut().enumerate().take(r) {
                    let mut up = l.clone();
                    up[v] += 1;
                    if let Some(&child) = index.get(&up) {
                        list.push((Some(i), child));
                    }
                }
            }
        }
        if vars > r {
            let zero = parts[1][&vec![0; r]];
            edges[r].push((None, zero));
        }

        let m = Q::new(items.len() as i64 - 1, 2);
        let zero = vec![Q::from_integer(0); r];
        let other_coords = other.as_ref().map(|w| w.root_coords()).unwrap_or(&zero);
        let gap_q: Vec<Q> = top.root_coords().iter().zip(other_coords).map(|(a, b)| a - b).collect();
        let (scaled, target, d) = scale(&[top.root_coords(), &gap_q], m);
        let gap = (vars > r).then(|| (scaled[1].clone(), d));

        Ok(Layout { rank: r, vars, items, edges, a: scaled[0].clone(), target, gap, pinned })
    }
}

struct Node {
    vals: Vec<Option<i64>>,
    lb: Vec<i64>,
}

struct Searcher<'a> {
    lay: &'a Layout,
    size: i64,
    found: Vec<Vec<i64>>,
    depth: Vec<Option<i64>>,
    covered: Vec<bool>,
}

impl<'a> Searcher<'a> {
    /// Forces unknowns determined by the linear constraints. Returns `false`
    /// when the node is infeasible.
    fn propagate(&self, node: &mut Node) -> bool {
        let lay = self.lay;
        let r = lay.rank;
        loop {
            let mut sum = 0;
            let mut free = Vec::new();
            for i in 0..r {
                match node.vals[i] {
                    Some(v) => sum += lay.a[i] * v,
                    None => free.push(i),
                }
            }
            let floor: i64 = free.iter().map(|&i| lay.a[i] * node.lb[i]).sum();
            if sum + floor > lay.target {
                return false;
            }
            match free.len() {
                0 if sum != lay.target => return false,
                1 => {
                    let j = free[0];
                    let (q, rest) = (lay.target - sum).div_rem(&lay.a[j]);
                    if rest != 0 || q < node.lb[j] {
                        return false;
                    }
                    node.vals[j] = Some(q);
                    continue;
                }
                _ => {}
            }
            if free.is_empty() {
                if let Some((gap, d)) = &lay.gap {
                    let scaled: i64 = (0..r).map(|i| gap[i] * node.vals[i].unwrap_or(0)).sum();
                    let (delta, rest) = scaled.div_rem(d);
                    if rest != 0 {
                        return false;
                    }
                    match node.vals[r] {
                        Some(v) if v != delta => return false,
                        Some(_) => {}
                        None if delta < node.lb[r] => return false,
                        None => node.vals[r] = Some(delta),
                    }
                }
            }
            return true;
        }
    }

    fn upper_ok(&self, node: &Node, var: usize, value: i64) -> bool {
        let lay = self.lay;
        if var >= lay.rank {
            return value < self.size;
        }
        let mut total = lay.a[var] * value;
        for i in (0..lay.rank).filter(|&i| i != var) {
            total += lay.a[i] * node.vals[i].unwrap_or(node.lb[i]);
        }
        total <= lay.target
    }

    fn visit(&mut self, mut node: Node) {
        if !self.propagate(&mut node) {
            return;
        }
        let lay = self.lay;
        self.covered.iter_mut().for_each(|c| *c = false);
        let mut all_known = true;
        for (slot, coeffs) in self.depth.iter_mut().zip(&lay.items) {
            let mut known = true;
            let mut lower = 0;
            for (v, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                match node.vals[v] {
                    Some(x) => lower += c * x,
                    None => {
                        known = false;
                        lower += c * node.lb[v];
                    }
                }
            }
            if lower >= self.size {
                return;
            }
            if known {
                let d = lower as usize;
                if self.covered[d] {
                    return;
                }
                self.covered[d] = true;
                *slot = Some(lower);
            } else {
                all_known = false;
                *slot = None;
            }
        }
        if all_known {
            if node.vals.iter().all(Option::is_some) {
                self.found.push(node.vals.iter().take(lay.rank).map(|v| v.unwrap_or(0)).collect());
            }
            return;
        }
        let Some(k) = self.covered.iter().position(|&c| !c) else { return };
        let k = k as i64;

        // Smallest determined parent per free unknown.
        let mut anchors: Vec<(usize, i64)> = Vec::new();
        for v in 0..lay.vars {
            if node.vals[v].is_some() {
                continue;
            }
            let best = lay.edges[v]
                .iter()
                .filter_map(|&(p, _)| match p {
                    None => Some(0),
                    Some(p) => self.depth[p],
                })
                .min();
            if let Some(b) = best {
                anchors.push((v, b));
            }
        }

        for (idx, &(v, base)) in anchors.iter().enumerate() {
            let value = k - base;
            if value < node.lb[v].max(1) || !self.upper_ok(&node, v, value) {
                continue;
            }
            let mut vals = node.vals.clone();
            let mut lb = node.lb.clone();
            vals[v] = Some(value);
            let mut ok = true;
            for (jdx, &(w, wbase)) in anchors.iter().enumerate() {
                if jdx != idx {
                    lb[w] = lb[w].max(k - wbase + 1);
                    if !self.upper_ok(&Node { vals: vals.clone(), lb: lb.clone() }, w, lb[w]) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.visit(Node { vals, lb });
            }
        }
    }
}

/// Grading elements `n ≥ 1` making every eigenvalue of `V_C` simple and
/// consecutive, with the top weight of the chosen orientation reaching `m`.
///
/// Only eigenvalues are examined; the real/quaternionic gate is applied by the
/// caller. Results are sorted.
pub fn principal_gradings(
    rs: &RootSystem,
    ws: &WeightSystem,
    pairing: Pairing,
    orientation: Orientation,
    pinned: Option<(usize, i64)>,
) -> Result<Vec<GradingElement>> {
    if !is_weight_multiplicity_free(ws) {
        return Ok(Vec::new());
    }
    if pairing == Pairing::SelfDualSingle && orientation == Orientation::Dual {
        return Ok(Vec::new());
    }
    let lay = Layout::new(rs, ws, pairing, orientation, pinned)?;
    if lay.a.iter().any(|&x| x <= 0) {
        return Err(Error::Unbounded);
    }
    let g = lay.a.iter().fold(0i64, |acc, x| acc.gcd(x));
    if lay.target % g != 0 {
        return Ok(Vec::new());
    }
    let size = lay.items.len() as i64;
    let mut vals = vec![None; lay.vars];
    let lb = vec![1; lay.vars];
    if let Some((i, v)) = lay.pinned {
        vals[i] = Some(v);
    }
    let mut s = Searcher {
        lay: &lay,
        size,
        found: Vec::new(),
        depth: vec![None; lay.items.len()],
        covered: vec![false; lay.items.len()],
    };
    s.visit(Node { vals, lb });
    let mut out: Vec<GradingElement> = s.found.into_iter().map(GradingElement).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `(dim V_C − 1)/2` for a weight system under a pairing.
pub fn target_m(ws: &WeightSystem, pairing: Pairing) -> HalfInt {
    let dim = match pairing {
        Pairing::SelfDualSingle => ws.dim(),
        Pairing::ComplexPair => 2 * ws.dim(),
    };
    HalfInt::from_twice(dim as i64 - 1)
}
