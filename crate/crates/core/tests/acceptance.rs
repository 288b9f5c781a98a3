//! Acceptance criteria, one PASS/FAIL line each. Every count is compared
//! exactly (tolerance zero). Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use catorbit_core::counting::{
    ballot, catalan, e_table_omega, e_table_square, verify_alternating_identity,
    verify_catalan_convolution, ETable,
};
use catorbit_core::orbits::{
    build_omega_levels, build_orbit, build_orbit_levels, build_q_orbit, classify_root,
    verify_cover, OmegaSpec, OrbitLevel,
};
use catorbit_core::partitions::enumerate_box;
use catorbit_core::symfunc::{
    basis_candidates, default_dmax, independence_check, p_of_mu, spanning_check, CheckOptions,
    SpanConvention,
};
use catorbit_core::trees::{
    build_canonical_tree, build_orbit_tree, check_label_isomorphism, NodeLabel,
};
use catorbit_core::Partition;
use num_bigint::BigInt;

/// Exact equality everywhere; kept explicit for the report.
const TOLERANCE: u32 = 0;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn square_roots(k: usize) -> Vec<Partition> {
    enumerate_box(k, k as u32)
        .into_iter()
        .filter(|l| l.is_square(k))
        .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c1() -> Outcome {
    let mut checked = 0;
    for k in 1..=5 {
        for lam in square_roots(k) {
            let fixed = lam.is_tau_fixed(k as u32).expect("k parts");
            let levels = build_orbit_levels(&lam, k, k + 7).expect("square root");
            for lvl in &levels {
                let want = catalan((lvl.level - k + 1) as u32) * if fixed { 1 } else { 2 };
                if BigInt::from(lvl.len()) != want {
                    return outcome(
                        false,
                        format!("#P^{}({lam}) = {}, expected {want}", lvl.level, lvl.len()),
                    );
                }
                checked += 1;
            }
        }
    }
    outcome(true, format!("{checked} (root, level) pairs"))
}

fn c2() -> Outcome {
    for l in 1..=9 {
        let rep = verify_cover(l).expect("level ≥ 1");
        if !rep.success() {
            return outcome(
                false,
                format!(
                    "level {l}: disjoint={} classification={} sizes={} uncovered={}",
                    rep.disjoint(),
                    rep.classification_agrees(),
                    rep.sizes_match(),
                    rep.uncovered.len()
                ),
            );
        }
    }
    outcome(true, "levels 1..=9, totals binomial(2ℓ−1, ℓ)")
}

fn c3() -> Outcome {
    let o = build_orbit(&p(&[1]), 1, 3).expect("orbit");
    let got: BTreeSet<Partition> = o.partitions().cloned().collect();
    let want: BTreeSet<Partition> = [
        p(&[1, 1, 1]),
        p(&[3, 3, 3]),
        p(&[2, 2, 1]),
        p(&[2, 2, 2]),
        p(&[3, 2, 2]),
    ]
    .into_iter()
    .collect();
    let a = got == want;
    let first = classify_root(&p(&[3, 3, 3, 2, 2, 1])).expect("in P^6");
    let b = first.root == p(&[2, 1]) && first.k == 2;
    let second = classify_root(&p(&[7, 6, 5, 3, 3, 3, 3, 3, 3, 1])).expect("in P^10");
    let c = second.root == p(&[3, 1, 1]) && second.k == 3;
    outcome(
        a && b && c,
        format!(
            "P^3((1)) match={a}; classify(3,3,3,2,2,1)=({}) k={} want (2,1); \
             classify(7,6,5,3,3,3,3,3,3,1)=({}) k={} want (3,1,1)",
            first.root, first.k, second.root, second.k
        ),
    )
}

fn label_row(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

fn c4() -> Outcome {
    let printed = [
        label_row(&["(2,2)"]),
        label_row(&["(2,3)", "(3)"]),
        label_row(&["(2,4)", "(4)", "(2,3)", "(3,3)", "(3)"]),
        label_row(&[
            "(2,5)", "(5)", "(2,3)", "(3,3)", "(4,3)", "(3)", "(2,4)", "(4)", "(2,4)", "(3,4)",
            "(4)", "(2,3)", "(3,3)", "(3)",
        ]),
    ];
    let canon = build_canonical_tree(3);
    let rows: Vec<Vec<String>> = canon
        .levels()
        .iter()
        .map(|row| row.iter().map(|n| n.label.to_string()).collect())
        .collect();
    let canon_ok = rows == printed;
    let mut iso = Vec::new();
    for (lam, k) in [
        (p(&[1]), 1),
        (p(&[2, 1]), 2),
        (p(&[3, 2, 1]), 3),
        (p(&[3, 1, 1]), 3),
    ] {
        let rep = check_label_isomorphism(&lam, k, 6).expect("square root");
        iso.push((lam, rep.isomorphic()));
    }
    let iso_ok = iso.iter().all(|(_, ok)| *ok);
    let third = build_orbit_tree(&p(&[1]), 1, 3)
        .expect("tree")
        .level(3)
        .len();
    let root_label = canon.label == NodeLabel::Pair(2, 2);
    outcome(
        canon_ok && iso_ok && third == 14 && root_label,
        format!(
            "canonical rows match={canon_ok}; isomorphic to depth 6: {}; \
             third propagation of (1) has {third} vertices",
            iso.iter()
                .map(|(l, ok)| format!("({l})={ok}"))
                .collect::<Vec<_>>()
                .join(" ")
        ),
    )
}

fn c5() -> Outcome {
    for m in 1..=5 {
        let levels = build_omega_levels(OmegaSpec::new(m).expect("m ≥ 1"), 8).expect("levels");
        for lvl in &levels {
            let want = ballot(lvl.level as i64, m as i64 - 1).expect("indices");
            if BigInt::from(lvl.len()) != want {
                return outcome(
                    false,
                    format!("#P^{}(Ω_{m}) = {}, expected {want}", lvl.level, lvl.len()),
                );
            }
        }
    }
    outcome(true, "1 ≤ m ≤ 5, 1 ≤ ℓ ≤ 8")
}

/// Compares every table cell with its closed form and with a direct count
/// over the orbit; returns the number of cells checked.
fn check_table(table: &ETable, levels: &[OrbitLevel]) -> Result<usize, String> {
    let mut cells = 0;
    for lvl in levels {
        let l = lvl.level;
        for r in 1..=lvl.bound as usize + 1 {
            let direct = lvl
                .partitions()
                .filter(|mu| mu.last() as usize >= r)
                .count();
            let value = table.get(l, r);
            let closed = table.closed_form(l, r);
            if value != BigInt::from(direct) || closed != value {
                return Err(format!(
                    "{:?}: e[{l}][{r}] table={value} closed={closed} direct={direct}",
                    table.context()
                ));
            }
            cells += 1;
        }
    }
    Ok(cells)
}

fn c6() -> Outcome {
    let mut cells = 0;
    for k in 1..=5 {
        for lam in square_roots(k) {
            let table = e_table_square(&lam, k, k + 7).expect("table");
            let levels = build_orbit_levels(&lam, k, k + 7).expect("levels");
            match check_table(&table, &levels) {
                Ok(n) => cells += n,
                Err(e) => return outcome(false, e),
            }
        }
    }
    for m in 1..=5 {
        let table = e_table_omega(m, 8).expect("table");
        let levels = build_omega_levels(OmegaSpec::new(m).expect("m ≥ 1"), 8).expect("levels");
        match check_table(&table, &levels) {
            Ok(n) => cells += n,
            Err(e) => return outcome(false, e),
        }
    }
    outcome(true, format!("{cells} cells"))
}

/// Dyck words of semilength `n`, counted by brute force over all
/// `2^(2n)` step sequences.
fn dyck_count(n: u32) -> u64 {
    let len = 2 * n;
    (0u64..1 << len)
        .filter(|&w| {
            let mut h = 0i32;
            for i in 0..len {
                h += if w >> i & 1 == 1 { 1 } else { -1 };
                if h < 0 {
                    return false;
                }
            }
            h == 0
        })
        .count() as u64
}

fn c7() -> Outcome {
    let conv = verify_catalan_convolution(12);
    let alt = verify_alternating_identity(10, 6);
    let dyck_bad: Vec<u32> = (0..=10)
        .filter(|&n| catalan(n) != BigInt::from(dyck_count(n)))
        .collect();
    outcome(
        conv.holds() && alt.holds() && dyck_bad.is_empty(),
        format!(
            "convolution {}/{} instances, alternating {}/{} instances, Dyck mismatches {:?}",
            conv.instances.iter().filter(|i| i.holds()).count(),
            conv.instances.len(),
            alt.instances.iter().filter(|i| i.holds()).count(),
            alt.instances.len(),
            dyck_bad
        ),
    )
}

fn swap_pair(r: usize, i: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..r).collect();
    perm.swap(2 * i, 2 * i + 1);
    perm
}

fn swap_blocks(r: usize, i: usize, j: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..r).collect();
    perm.swap(2 * i, 2 * j);
    perm.swap(2 * i + 1, 2 * j + 1);
    perm
}

fn c8() -> (Outcome, Vec<String>) {
    let mut info = Vec::new();
    let opts = CheckOptions::default();

    let mut a = true;
    for l in 1..=3 {
        for m in 1..=3 {
            let n = basis_candidates(l, m).expect("basis").len();
            a &= BigInt::from(n) == ballot(l as i64, m as i64 - 1).expect("indices");
        }
    }

    let mut b = true;
    let mut b_detail = Vec::new();
    for (l, m) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)] {
        let dmax = default_dmax(l, m).expect("dmax");
        let start = Instant::now();
        match independence_check(l, m, dmax, &opts) {
            Ok(rep) => {
                b &= rep.independent();
                let largest = rep
                    .degrees
                    .iter()
                    .max_by_key(|d| d.rows * d.cols)
                    .expect("degrees");
                b_detail.push(format!(
                    "ℓ={l},m={m},dmax={dmax}:{} ({}x{} largest, {:.1?})",
                    rep.independent(),
                    largest.rows,
                    largest.cols,
                    start.elapsed()
                ));
            }
            Err(e) => {
                b = false;
                b_detail.push(format!("ℓ={l},m={m}: {e}"));
            }
        }
    }

    let mut c = true;
    let mut checked = 0;
    for l in 1..=3usize {
        for mu in enumerate_box(l, 5) {
            for m in 1..=2 {
                let r = 2 * l + m;
                let poly = p_of_mu(&mu, l, m).expect("P(μ)");
                c &= poly.homogeneous_degree() == Some(mu.size() - l as u64);
                c &= poly
                    .terms()
                    .all(|(mono, _)| mono.exponents()[2 * l..].iter().all(|&e| e == 0));
                for i in 0..l {
                    c &= poly.permute_vars(&swap_pair(r, i)) == poly;
                    for j in i + 1..l {
                        c &= poly.permute_vars(&swap_blocks(r, i, j)) == poly;
                    }
                }
                checked += 1;
            }
        }
    }

    let mut d = true;
    for conv in [SpanConvention::Literal, SpanConvention::default_for(2, 1)] {
        match spanning_check(2, 1, conv, default_dmax(2, 1).expect("dmax"), &opts) {
            Ok(rep) => {
                for o in &rep.spanning {
                    info.push(format!(
                        "spanning ℓ=2 m=1 {conv}: μ=({}) degree {} → {}",
                        o.mu,
                        o.degree,
                        match o.solvable() {
                            Some(true) => "solvable".to_string(),
                            Some(false) => format!("unsolvable ({:?})", o.status),
                            None => format!("{:?}", o.status),
                        }
                    ));
                }
            }
            Err(e) => {
                d = false;
                info.push(format!("spanning ℓ=2 m=1 {conv}: error {e}"));
            }
        }
    }

    (
        outcome(
            a && b && c && d,
            format!(
                "(a) #basis=ballot: {a}; (b) independence: {b} [{}]; \
                 (c) P(μ) invariants on {checked} cases: {c}; (d) spanning runs recorded: {d}",
                b_detail.join("; ")
            ),
        ),
        info,
    )
}

fn c9() -> Outcome {
    let q = build_q_orbit(&p(&[1]), 8).expect("q-orbit");
    let p_levels = build_orbit_levels(&p(&[1]), 1, 8).expect("orbit");
    let same = q.levels.len() == p_levels.len()
        && q.levels.iter().zip(&p_levels).all(|(a, b)| {
            let x: BTreeSet<_> = a.elements.iter().map(|e| &e.partition).collect();
            let y: BTreeSet<_> = b.partitions().collect();
            x == y
        });
    let mut exercised = Vec::new();
    for lam in [p(&[2, 2]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2, 1])] {
        let q = build_q_orbit(&lam, 5).expect("q-orbit");
        let desd_fails = q
            .levels
            .iter()
            .filter(|l| !l.descendant_union_holds)
            .count();
        exercised.push((lam, q.collisions(), desd_fails, q.cardinalities()));
    }
    let dedup = exercised.iter().any(|(_, c, _, _)| *c > 0);
    outcome(
        same && dedup,
        format!(
            "(1) reproduces P-orbit to depth 8: {same}; {}",
            exercised
                .iter()
                .map(|(l, c, f, card)| format!(
                    "({l}): collisions={c}, levels without descendant union={f}, sizes={card:?}"
                ))
                .collect::<Vec<_>>()
                .join("; ")
        ),
    )
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn emit(n: u32, name: &str, (o, took): (Outcome, Duration)) -> bool {
    println!(
        "{} criterion {n} [{name}] {took:.2?}: {}",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    );
    o.pass
}

fn main() -> ExitCode {
    println!("acceptance (tolerance {TOLERANCE}: all comparisons exact)");
    let mut passed = Vec::new();
    passed.push(emit(1, "Catalan orbit sizes", timed(c1)));
    passed.push(emit(2, "cover of P^ℓ", timed(c2)));
    passed.push(emit(3, "classification examples", timed(c3)));
    let extra = classify_root(&p(&[3, 3, 2, 2, 1])).expect("in P^5");
    println!(
        "INFO criterion 3: the drawn partition (3,3,2,2,1) classifies to ({}) k={}",
        extra.root, extra.k
    );
    passed.push(emit(4, "labeled trees", timed(c4)));
    passed.push(emit(5, "ballot orbit sizes", timed(c5)));
    passed.push(emit(6, "e-tables", timed(c6)));
    passed.push(emit(7, "identities", timed(c7)));
    let ((o8, info), took) = timed(c8);
    passed.push(emit(8, "module conjecture checker", (o8, took)));
    for line in info {
        println!("INFO criterion 8: {line}");
    }
    passed.push(emit(9, "Q-orbits", timed(c9)));
    let ok = passed.iter().filter(|&&b| b).count();
    println!("acceptance: {ok} of {} criteria passed", passed.len());
    if ok == passed.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
