//! Reference tables: every expected classification result, stated as data.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::Gate;
use crate::rootsys::{Family, LieType};
use crate::{Limits, Result};

/// One expected row: a module, a grading element, and a free-form detail
/// that is empty for plain principal solutions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Finding {
    pub lie_type: LieType,
    pub mu: Vec<i64>,
    pub n: Vec<i64>,
    pub detail: String,
}

/// Which modules of a root system a table looks at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub lie_type: LieType,
    /// Catalog labels to search; `None` means the whole catalog.
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    /// Findings are the search solutions under the given gate. With
    /// [`Gate::EigenvaluesOnly`] the detail records structure and Hodge
    /// numbers.
    Search(Gate),
    /// Findings are the catalog entries themselves (detail = label).
    Catalog,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub id: &'static str,
    pub title: &'static str,
    pub mode: TableMode,
    pub cases: Vec<Case>,
    pub expected: BTreeSet<Finding>,
    /// The published statement of this result contains a misprint; the
    /// expected set holds the corrected reading.
    pub typo_corrected: bool,
}

/// Compact Hodge-number rendering: `2^6` when constant, else a list.
pub fn hodge_detail(structure: impl core::fmt::Display, h: &[u64]) -> String {
    let h_text = match h.first() {
        Some(&first) if h.iter().all(|&x| x == first) => format!("{first}^{}", h.len()),
        _ => h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
    };
    format!("{structure}; h={h_text}")
}

fn lt(f: Family, r: usize) -> Result<LieType> {
    LieType::new(f, r)
}

fn unit(r: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[k - 1] = 1;
    v
}

fn finding(t: LieType, mu: Vec<i64>, n: Vec<i64>) -> Finding {
    Finding { lie_type: t, mu, n, detail: String::new() }
}

fn case(t: LieType, labels: &[&str]) -> Case {
    Case { lie_type: t, labels: Some(labels.iter().map(|s| s.to_string()).collect()) }
}

fn whole(t: LieType) -> Case {
    Case { lie_type: t, labels: None }
}

fn ones(r: usize) -> Vec<i64> {
    vec![1; r]
}

/// `(2^{len−1}, …, 4, 2)` followed by `tail`.
fn powers_then(len: usize, tail: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = (0..len).rev().map(|e| 1i64 << (e + 1)).collect();
    v.extend_from_slice(tail);
    v
}

fn search_table(
    id: &'static str,
    title: &'static str,
    cases: Vec<Case>,
    expected: impl IntoIterator<Item = Finding>,
) -> GoldenTable {
    GoldenTable {
        id,
        title,
        mode: TableMode::Search(Gate::Principal),
        cases,
        expected: expected.into_iter().collect(),
        typo_corrected: false,
    }
}

/// Every reference table. Parametric families run up to the rank ceiling,
/// and symmetric powers up to the degree ceiling.
pub fn golden_tables(limits: &Limits) -> Result<Vec<GoldenTable>> {
    let top = limits.rank_ceiling;
    let mut tables = Vec::new();

    // Symplectic.
    let mut cases = Vec::new();
    let mut exp = Vec::new();
    for r in 2..=top {
        let t = lt(Family::C, r)?;
        cases.push(case(t, &["standard"]));
        exp.push(finding(t, unit(r, 1), ones(r)));
    }
    tables.push(search_table("C/standard", "C_r standard module: n = (1,...,1)", cases, exp));
    let c2 = lt(Family::C, 2)?;
    tables.push(search_table(
        "C/rank2",
        "C_2 with highest weight w2: n = (1,1)",
        vec![case(c2, &["wedge:2"])],
        [finding(c2, vec![0, 1], vec![1, 1])],
    ));
    let c3 = lt(Family::C, 3)?;
    let mut t = search_table(
        "C/rank3",
        "C_3 with highest weight w3: n = (3,1,1)",
        vec![case(c3, &["wedge:3"])],
        [finding(c3, vec![0, 0, 1], vec![3, 1, 1])],
    );
    t.typo_corrected = true;
    tables.push(t);

    // Odd orthogonal.
    let mut cases = Vec::new();
    let mut exp = Vec::new();
    for r in 2..=top {
        let t = lt(Family::B, r)?;
        cases.push(case(t, &["standard"]));
        exp.push(finding(t, unit(r, 1), ones(r)));
    }
    tables.push(search_table("B/standard", "B_r standard module: n = (1,...,1)", cases, exp));
    let mut cases = Vec::new();
    let mut exp = Vec::new();
    for r in 2..=top {
        let t = lt(Family::B, r)?;
        cases.push(case(t, &["spin"]));
        if ((r - 2) * (r - 1)) % 4 == 0 {
            exp.push(finding(t, unit(r, r), powers_then(r - 2, &[1, 1])));
        }
    }
    tables.push(search_table(
        "B/spin",
        "B_r spin module: n = (2^(r-2),...,2,1,1) exactly when (r-2)(r-1) is divisible by 4",
        cases,
        exp,
    ));
    let mut cases = Vec::new();
    let mut exp = BTreeSet::new();
    for (r, structure, copies) in [(2, "real", 1), (3, "quaternionic", 2), (4, "quaternionic", 2), (5, "real", 1)] {
        let t = lt(Family::B, r)?;
        cases.push(case(t, &["spin"]));
        let h = vec![copies; 1 << r];
        exp.insert(Finding {
            lie_type: t,
            mu: unit(r, r),
            n: powers_then(r - 2, &[1, 1]),
            detail: hodge_detail(structure, &h),
        });
    }
    tables.push(GoldenTable {
        id: "B/spin-structure",
        title: "B_2..B_5 spin module: structure of the unique eigenvalue-simple grading",
        mode: TableMode::Search(Gate::EigenvaluesOnly),
        cases,
        expected: exp,
        typo_corrected: false,
    });

    // Even orthogonal.
    let mut cases = Vec::new();
    for r in 4..=top {
        cases.push(case(lt(Family::D, r)?, &["standard"]));
    }
    tables.push(search_table("D/standard", "D_r standard module: no principal grading", cases, []));
    let mut cases = Vec::new();
    let mut exp = BTreeSet::new();
    for r in 4..=top {
        let t = lt(Family::D, r)?;
        cases.push(case(t, &["standard"]));
        let h = vec![2; 2 * r];
        for tail in [[1, 2], [2, 1]] {
            let mut n = ones(r - 2);
            n.extend_from_slice(&tail);
            exp.insert(Finding { lie_type: t, mu: unit(r, 1), n, detail: hodge_detail("quaternionic", &h) });
        }
    }
    tables.push(GoldenTable {
        id: "D/standard-eigen",
        title: "D_r standard module: the two eigenvalue-simple gradings are quaternionic with h = (2,...,2)",
        mode: TableMode::Search(Gate::EigenvaluesOnly),
        cases,
        expected: exp,
        typo_corrected: false,
    });
    let mut cases = Vec::new();
    let mut exp = Vec::new();
    for r in (4..=top).filter(|r| r % 2 == 0) {
        let t = lt(Family::D, r)?;
        cases.push(case(t, &["spin-", "spin"]));
        if ((r - 3) * (r - 2)) % 4 == 0 {
            let n = powers_then(r - 3, &[1, 1, 1]);
            exp.push(finding(t, unit(r, r - 1), n.clone()));
            exp.push(finding(t, unit(r, r), n));
        }
    }
    tables.push(search_table(
        "D/spin-even",
        "D_r, r even, half-spin modules: n = (2^(r-3),...,2,1,1,1) exactly when (r-3)(r-2) is divisible by 4",
        cases,
        exp,
    ));
    let mut cases = Vec::new();
    let mut exp = Vec::new();
    for r in (5..=top).filter(|r| r % 2 == 1) {
        let t = lt(Family::D, r)?;
        cases.push(case(t, &["spin-", "spin"]));
        exp.push(finding(t, unit(r, r), powers_then(r - 2, &[1, 3])));
        exp.push(finding(t, unit(r, r - 1), powers_then(r - 2, &[3, 1])));
    }
    tables.push(search_table(
        "D/spin-odd",
        "D_r, r odd, half-spin modules: n = (2^(r-2),...,2,1,3) and its mirror",
        cases,
        exp,
    ));

    // Exceptional.
    tables.push(search_table(
        "exceptional/e6-e7",
        "E_6 and E_7: no principal grading on any catalog module",
        vec![whole(lt(Family::E, 6)?), whole(lt(Family::E, 7)?)],
        [],
    ));
    tables.push(GoldenTable {
        id: "exceptional/e8-f4",
        title: "E_8 and F_4: no weight-multiplicity-free module",
        mode: TableMode::Catalog,
        cases: vec![whole(lt(Family::E, 8)?), whole(lt(Family::F, 4)?)],
        expected: BTreeSet::new(),
        typo_corrected: false,
    });
    let g2 = lt(Family::G, 2)?;
    tables.push(search_table(
        "exceptional/g2",
        "G_2: n = (1,1) on the 7-dimensional module",
        vec![whole(g2)],
        [finding(g2, vec![1, 0], vec![1, 1])],
    ));

    // Special linear.
    let a1 = lt(Family::A, 1)?;
    tables.push(search_table(
        "A/rank1",
        "A_1: n = (1) for every symmetric power",
        vec![whole(a1)],
        (1..=limits.sym_degree_ceiling as i64).map(|p| finding(a1, vec![p], vec![1])),
    ));
    let a3 = lt(Family::A, 3)?;
    let mut t = search_table(
        "A/rank3",
        "A_3: n = (3,2,1) on w1 and n = (1,2,3) on w3, nothing else",
        vec![whole(a3)],
        [finding(a3, vec![1, 0, 0], vec![3, 2, 1]), finding(a3, vec![0, 0, 1], vec![1, 2, 3])],
    );
    t.typo_corrected = true;
    tables.push(t);
    let h = vec![2u64; 6];
    tables.push(GoldenTable {
        id: "A/rank3-wedge2",
        title: "A_3 with highest weight w2: both eigenvalue-simple gradings are quaternionic",
        mode: TableMode::Search(Gate::EigenvaluesOnly),
        cases: vec![case(a3, &["wedge:2"])],
        expected: [vec![1, 1, 2], vec![2, 1, 1]]
            .into_iter()
            .map(|n| Finding { lie_type: a3, mu: vec![0, 1, 0], n, detail: hodge_detail("quaternionic", &h) })
            .collect(),
        typo_corrected: false,
    });
    let a5 = lt(Family::A, 5)?;
    tables.push(search_table(
        "A/rank5",
        "A_5: two gradings on w1/w5 and two on w3",
        vec![whole(a5)],
        [
            finding(a5, unit(5, 1), vec![2, 4, 1, 1, 2]),
            finding(a5, unit(5, 5), vec![2, 1, 1, 4, 2]),
            finding(a5, unit(5, 3), vec![3, 2, 1, 1, 7]),
            finding(a5, unit(5, 3), vec![7, 1, 1, 2, 3]),
        ],
    ));
    for (id, title, r, list) in [
        (
            "A/rank7",
            "A_7 standard module and its dual: four gradings each",
            7usize,
            &[
                &[1, 5, 1, 3, 1, 1, 1][..],
                &[2, 3, 2, 2, 2, 1, 2],
                &[3, 1, 3, 2, 1, 3, 1],
                &[3, 2, 1, 2, 3, 2, 1],
            ][..],
        ),
        (
            "A/rank9",
            "A_9 standard module and its dual: ten gradings each",
            9,
            &[
                &[1, 2, 6, 2, 1, 1, 1, 1, 2][..],
                &[1, 3, 4, 2, 2, 1, 1, 2, 1],
                &[1, 4, 2, 3, 1, 2, 2, 1, 1],
                &[2, 1, 5, 2, 2, 1, 1, 1, 3],
                &[2, 2, 3, 3, 1, 2, 1, 2, 2],
                &[2, 3, 1, 4, 1, 1, 3, 1, 2],
                &[2, 4, 1, 1, 1, 5, 1, 1, 2],
                &[3, 1, 2, 4, 1, 1, 2, 3, 1],
                &[3, 2, 2, 1, 1, 4, 2, 2, 1],
                &[4, 1, 1, 2, 1, 3, 4, 1, 1],
            ],
        ),
    ] {
        let t = lt(Family::A, r)?;
        let mut exp = Vec::new();
        for n in list {
            exp.push(finding(t, unit(r, 1), n.to_vec()));
            exp.push(finding(t, unit(r, r), n.iter().rev().copied().collect()));
        }
        let labels = ["wedge:1".to_string(), format!("wedge:{r}")];
        tables.push(GoldenTable {
            id,
            title,
            mode: TableMode::Search(Gate::Principal),
            cases: vec![Case { lie_type: t, labels: Some(labels.to_vec()) }],
            expected: exp.into_iter().collect(),
            typo_corrected: false,
        });
    }
    Ok(tables)
}
