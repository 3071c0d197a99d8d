//! Plain enumeration of the integer points of `Σ a_i n_i = M`, `n_i ≥ 1`.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::Orientation;
use crate::hodge::{GradingElement, ModuleSpec, Pairing};
use crate::linalg::{self, Q};
use crate::{Error, Result};

/// Positive integer solutions of `Σ a_i n_i = target`, in lexicographically
/// descending order, optionally restricted by `Σ b_i n_i ≤ target`.
#[derive(Debug, Clone)]
pub struct Gradings {
    a: Vec<i64>,
    bound: Option<Vec<i64>>,
    target: i64,
    /// `tail[i] = Σ_{j ≥ i} a_j`, the cheapest completion from position `i`.
    tail: Vec<i64>,
    cur: Vec<i64>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Gradings {
    /// All coefficients must be positive.
    pub fn new(a: Vec<i64>, target: i64, bound: Option<Vec<i64>>) -> Result<Self> {
        if a.is_empty() || a.iter().any(|&x| x <= 0) {
            return Err(Error::Unbounded);
        }
        let r = a.len();
        let mut tail = vec![0; r + 1];
        for i in (0..r).rev() {
            tail[i] = tail[i + 1] + a[i];
        }
        Ok(Gradings { cur: vec![1; r], a, bound, target, tail, state: State::Fresh })
    }

    /// Greedily fills positions `from..` with their largest admissible values.
    /// Returns whether the result is a solution.
    fn fill(&mut self, from: usize) -> bool {
        let r = self.a.len();
        let mut rem = self.target - (0..from).map(|j| self.a[j] * self.cur[j]).sum::<i64>();
        for i in from..r {
            if i + 1 == r {
                let (q, rest) = rem.div_rem(&self.a[i]);
                self.cur[i] = q.max(1);
                return rest == 0 && q >= 1;
            }
            let top = Integer::div_floor(&(rem - self.tail[i + 1]), &self.a[i]);
            if top < 1 {
                for x in &mut self.cur[i..] {
                    *x = 1;
                }
                return false;
            }
            self.cur[i] = top;
            rem -= self.a[i] * top;
        }
        false
    }

    /// Steps to the next candidate in descending order; `None` when exhausted.
    fn advance(&mut self) -> Option<bool> {
        let r = self.a.len();
        let j = (0..r.saturating_sub(1)).rev().find(|&j| self.cur[j] > 1)?;
        self.cur[j] -= 1;
        Some(self.fill(j + 1))
    }

    fn admissible(&self) -> bool {
        match &self.bound {
            None => true,
            Some(b) => b.iter().zip(&self.cur).map(|(x, n)| x * n).sum::<i64>() <= self.target,
        }
    }
}

impl Iterator for Gradings {
    type Item = GradingElement;

    fn next(&mut self) -> Option<GradingElement> {
        loop {
            let hit = match self.state {
                State::Done => return None,
                State::Fresh => {
                    self.state = State::Running;
                    self.fill(0)
                }
                State::Running => match self.advance() {
                    Some(hit) => hit,
                    None => {
                        self.state = State::Done;
                        return None;
                    }
                },
            };
            if self.a.len() == 1 {
                self.state = State::Done;
            }
            if hit && self.admissible() {
                return Some(GradingElement(self.cur.clone()));
            }
        }
    }
}

/// Scales rational coefficients and a rational target to integers sharing one
/// denominator.
pub(crate) fn scale(coeffs: &[&[Q]], target: Q) -> (Vec<Vec<i64>>, i64, i64) {
    let mut all: Vec<Q> = coeffs.iter().flat_map(|c| c.iter().copied()).collect();
    all.push(target);
    let d = linalg::common_denominator(&all);
    let scaled = coeffs
        .iter()
        .map(|c| c.iter().map(|x| (x * d).to_integer()).collect())
        .collect();
    (scaled, (target * d).to_integer(), d)
}

/// Candidate grading elements of a module: every `n ≥ 1` for which the
/// chosen top weight takes the value `(dim V_C − 1)/2`. For a complex pair the
/// other extreme weight is required not to exceed it.
pub fn enumerate_gradings(spec: &ModuleSpec, orientation: Orientation) -> Result<Gradings> {
    let mu = spec.highest_weight();
    let dual = spec.dual_highest_weight();
    let (top, other) = match orientation {
        Orientation::Canonical => (mu, &dual),
        Orientation::Dual => (&dual, mu),
    };
    let m = Q::new(spec.target_m().twice(), 2);
    let (scaled, target, _) = scale(&[top.root_coords(), other.root_coords()], m);
    let bound = (spec.pairing() == Pairing::ComplexPair).then(|| scaled[1].clone());
    Gradings::new(scaled[0].clone(), target, bound)
}

#[cfg(test)]
mod tests {
    use alloc::sync::Arc;

    use super::*;
    use crate::rootsys::{build_root_system, Family, LieType};
    use crate::Limits;

    fn spec(f: Family, r: usize, k: usize) -> ModuleSpec {
        let rs = Arc::new(build_root_system(LieType::new(f, r).unwrap()).unwrap());
        let mu = rs.fundamental_weight(k).unwrap();
        ModuleSpec::natural(rs, mu, &Limits::default()).unwrap()
    }

    fn brute(a: &[i64], target: i64) -> Vec<Vec<i64>> {
        let r = a.len();
        let mut out = Vec::new();
        let mut cur = vec![1i64; r];
        loop {
            if a.iter().zip(&cur).map(|(x, n)| x * n).sum::<i64>() == target {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == r {
                    out.sort();
                    out.reverse();
                    return out;
                }
                cur[i] += 1;
                if cur[i] * a[i] <= target {
                    break;
                }
                cur[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn matches_brute_force() {
        for (a, t) in [
            (vec![3, 5, 2], 31),
            (vec![1], 7),
            (vec![2], 7),
            (vec![1, 1, 1, 1], 9),
            (vec![4, 6, 10], 40),
            (vec![7, 3], 5),
        ] {
            let got: Vec<Vec<i64>> = Gradings::new(a.clone(), t, None).unwrap().map(|g| g.0).collect();
            assert_eq!(got, brute(&a, t), "{a:?} = {t}");
        }
    }

    #[test]
    fn a1_standard_is_forced() {
        let got: Vec<_> = enumerate_gradings(&spec(Family::A, 1, 1), Orientation::Canonical).unwrap().collect();
        assert_eq!(got, vec![GradingElement(vec![1])]);
    }

    #[test]
    fn c2_omega2_contains_the_answer() {
        let got: Vec<_> = enumerate_gradings(&spec(Family::C, 2, 2), Orientation::Canonical).unwrap().collect();
        assert!(got.contains(&GradingElement(vec![1, 1])));
    }

    #[test]
    fn e6_has_no_candidates() {
        let mut g = enumerate_gradings(&spec(Family::E, 6, 1), Orientation::Canonical).unwrap();
        assert_eq!(g.next(), None);
    }

    #[test]
    fn zero_coefficient_is_unbounded() {
        assert_eq!(Gradings::new(vec![1, 0], 3, None).unwrap_err(), Error::Unbounded);
    }
}
