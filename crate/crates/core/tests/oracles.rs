//! Weight data checked against constructions that share no code with the
//! Freudenthal recursion.

use std::collections::BTreeMap;
use std::sync::Arc;

use phr_core::{
    build_root_system, spin_weight_oracle, weight_system, weyl_dim, Family, LieType, Limits, RootSystem, SpinKind,
};

fn rs(f: Family, r: usize) -> Arc<RootSystem> {
    Arc::new(build_root_system(LieType::new(f, r).unwrap()).unwrap())
}

/// Number of semistandard tableaux of shape `shape` with content `content`,
/// peeling off horizontal strips of the largest entry.
fn kostka(shape: &[i64], content: &[i64]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&x| x == 0));
    };
    let rows = shape.len();
    let k = content.len();
    // Rows at index ≥ k must already be empty.
    if shape.iter().skip(k).any(|&x| x != 0) {
        return 0;
    }
    let mut total = 0;
    let mut inner = vec![0i64; rows];
    fn strips(
        shape: &[i64],
        i: usize,
        left: i64,
        inner: &mut Vec<i64>,
        rest: &[i64],
        total: &mut u64,
    ) {
        if i == shape.len() {
            if left == 0 {
                *total += kostka(inner, rest);
            }
            return;
        }
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        for v in floor..=shape[i] {
            let taken = shape[i] - v;
            if taken > left {
                continue;
            }
            inner[i] = v;
            strips(shape, i + 1, left - taken, inner, rest, total);
        }
    }
    strips(shape, 0, last, &mut inner, rest, &mut total);
    total
}

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut tail in compositions(total - first, parts - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

#[test]
fn type_a_multiplicities_match_tableau_counts() {
    for r in 1..=4usize {
        let a = rs(Family::A, r);
        let n = r + 1;
        let mut labels = vec![vec![]];
        for _ in 0..r {
            labels = labels
                .into_iter()
                .flat_map(|v: Vec<i64>| (0..=2).map(move |x| [v.clone(), vec![x]].concat()))
                .collect();
        }
        for dynkin in labels {
            if r == 4 && dynkin.iter().sum::<i64>() > 4 {
                continue;
            }
            let mu = a.weight(dynkin.clone()).unwrap();
            let ws = weight_system(&a, &mu, &Limits::default()).unwrap();
            let shape: Vec<i64> = (0..n).map(|i| dynkin[i.min(r)..].iter().sum::<i64>() * i64::from(i < r)).collect();
            let size: i64 = shape.iter().sum();
            let mut oracle = BTreeMap::new();
            for c in compositions(size, n) {
                let k = kostka(&shape, &c);
                if k > 0 {
                    let w: Vec<i64> = (0..r).map(|i| c[i] - c[i + 1]).collect();
                    oracle.insert(w, k);
                }
            }
            let ours: BTreeMap<Vec<i64>, u64> = ws.iter().map(|(w, m)| (w.dynkin().to_vec(), m)).collect();
            assert_eq!(ours, oracle, "A{r} {dynkin:?}");
        }
    }
}

#[test]
fn type_a_dimension_product_formula() {
    for r in 1..=6usize {
        let a = rs(Family::A, r);
        for seed in 0..40i64 {
            let dynkin: Vec<i64> = (0..r as i64).map(|i| (seed * (i + 3) + i * i) % 4).collect();
            let mu = a.weight(dynkin.clone()).unwrap();
            // Π_{i<j} (λ_i − λ_j + j − i)/(j − i) over the partition λ.
            let lam: Vec<i64> = (0..=r).map(|i| dynkin[i.min(r)..].iter().sum::<i64>() * i64::from(i < r)).collect();
            let mut num: u128 = 1;
            let mut den: u128 = 1;
            for i in 0..=r {
                for j in i + 1..=r {
                    num *= (lam[i] - lam[j] + (j - i) as i64) as u128;
                    den *= (j - i) as u128;
                }
            }
            assert_eq!(num % den, 0);
            assert_eq!(weyl_dim(&a, &mu).unwrap() as u128, num / den, "A{r} {dynkin:?}");
        }
    }
}

type M3 = [[i64; 3]; 3];

fn unit(i: usize, j: usize) -> M3 {
    let mut m = [[0; 3]; 3];
    m[i][j] = 1;
    m
}

fn bracket(a: &M3, b: &M3) -> M3 {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

/// The scalar `c` with `y = c·x`, if any.
fn ratio(y: &M3, x: &M3) -> Option<i64> {
    let (i, j) = (0..9).map(|t| (t / 3, t % 3)).find(|&(i, j)| x[i][j] != 0)?;
    let c = y[i][j] / x[i][j];
    (0..9).all(|t| y[t / 3][t % 3] == c * x[t / 3][t % 3]).then_some(c)
}

#[test]
fn sl3_adjoint_from_matrix_units() {
    let h1 = {
        let mut m = unit(0, 0);
        m[1][1] = -1;
        m
    };
    let h2 = {
        let mut m = unit(1, 1);
        m[2][2] = -1;
        m
    };
    let mut basis = vec![h1, h2];
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                basis.push(unit(i, j));
            }
        }
    }
    let mut oracle: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for x in &basis {
        let w = vec![ratio(&bracket(&h1, x), x).unwrap(), ratio(&bracket(&h2, x), x).unwrap()];
        *oracle.entry(w).or_insert(0) += 1;
    }
    assert_eq!(oracle[&vec![0, 0]], 2);

    let a2 = rs(Family::A, 2);
    let ws = weight_system(&a2, &a2.weight(vec![1, 1]).unwrap(), &Limits::default()).unwrap();
    let ours: BTreeMap<Vec<i64>, u64> = ws.iter().map(|(w, m)| (w.dynkin().to_vec(), m)).collect();
    assert_eq!(ours, oracle);
}

fn spin_agrees(f: Family, r: usize, node: usize, kind: SpinKind) {
    let s = rs(f, r);
    let mu = s.fundamental_weight(node).unwrap();
    let ws = weight_system(&s, &mu, &Limits::default()).unwrap();
    let oracle = spin_weight_oracle(s.lie_type(), kind).unwrap();
    assert_eq!(ws.lowering_vectors(&s), oracle, "{f}{r} node {node}");
}

#[test]
fn spin_closed_forms_match_freudenthal() {
    for r in 2..=8 {
        spin_agrees(Family::B, r, r, SpinKind::BSpin);
    }
    for r in 4..=8 {
        spin_agrees(Family::D, r, r, SpinKind::DLast);
        spin_agrees(Family::D, r, r - 1, SpinKind::DSecondLast);
    }
}

#[test]
fn standard_modules_of_classical_types() {
    // B_r: ±ε_i and 0; C_r: ±ε_i; D_r: ±ε_i, each once.
    for r in 2..=8 {
        for (f, dim) in [(Family::B, 2 * r + 1), (Family::C, 2 * r), (Family::D, 2 * r)] {
            if f == Family::D && r < 3 {
                continue;
            }
            let s = rs(f, r);
            let ws = weight_system(&s, &s.fundamental_weight(1).unwrap(), &Limits::default()).unwrap();
            assert_eq!(ws.len(), dim, "{f}{r}");
            assert_eq!(ws.dim(), dim as u64);
        }
    }
}
