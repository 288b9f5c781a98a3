//! Machine-readable bodies: JSON documents, the e-table CSV, DOT graphs
//! and one-line cardinality sequences.
//!
//! JSON objects are built with `serde_json::Map`, whose keys are sorted, so
//! equal inputs give byte-identical documents.

use std::fmt::Write as _;

use catorbit_core::counting::{ETable, ETableContext, IdentityReport};
use catorbit_core::orbits::{
    Classification, CoverReport, OrbitElement, OrbitLevel, OrbitRoot, QOrbit, StepKind,
};
use catorbit_core::symfunc::{
    ConjectureReport, DegreeRecord, GradedReport, SpanOutcome, SpanStatus,
};
use catorbit_core::trees::{CanonicalNode, IsoReport, NodeLabel, OrbitTree, TreeNode};
use catorbit_core::Partition;
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

/// Integers that fit in `i64` as JSON numbers, larger ones as strings.
pub fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn elements(es: &[OrbitElement]) -> Value {
    es.iter()
        .map(|e| json!({ "parts": parts(&e.partition), "tag": e.provenance.tag() }))
        .collect()
}

pub fn orbit_level(level: &OrbitLevel) -> Value {
    let mut doc = json!({
        "level": level.level,
        "bound": level.bound,
        "size": level.len(),
        "elements": elements(&level.elements),
    });
    let obj = doc.as_object_mut().expect("object");
    match &level.root {
        OrbitRoot::Partition { root, k } => {
            obj.insert("root".into(), parts(root));
            obj.insert("k".into(), json!(k));
        }
        OrbitRoot::Omega(spec) => {
            obj.insert("omega".into(), json!(spec.m()));
        }
    }
    doc
}

/// Comma-separated integers on one line.
pub fn cardinality_line(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn q_orbit(q: &QOrbit) -> Value {
    json!({
        "lambda": parts(&q.seed),
        "cardinalities": q.cardinalities(),
        "levels": q.levels.iter().map(|l| json!({
            "index": l.index,
            "bound": l.bound,
            "size": l.elements.len(),
            "collisions": l.collisions,
            "descendant_collisions": l.descendant_collisions,
            "descendant_union_holds": l.descendant_union_holds,
            "elements": elements(&l.elements),
        })).collect::<Vec<_>>(),
    })
}

fn step_name(s: StepKind) -> &'static str {
    match s {
        StepKind::Drop => "drop",
        StepKind::ReflectDrop => "reflect-drop",
    }
}

pub fn classification(c: &Classification) -> Value {
    json!({
        "root": parts(&c.root),
        "k": c.k,
        "steps": c.steps.iter().map(|s| step_name(*s)).collect::<Vec<_>>(),
        "trace": c.trace.iter().map(parts).collect::<Vec<_>>(),
    })
}

pub fn classification_text(c: &Classification) -> String {
    let mut s = String::new();
    writeln!(s, "root {}", c.root).unwrap();
    writeln!(s, "k {}", c.k).unwrap();
    for (i, p) in c.trace.iter().enumerate() {
        match c.steps.get(i) {
            Some(step) => writeln!(s, "{p} --{}-->", step_name(*step)).unwrap(),
            None => writeln!(s, "{p}").unwrap(),
        }
    }
    s
}

pub fn cover(rep: &CoverReport) -> Value {
    json!({
        "level": rep.level,
        "orbits": rep.orbit_sizes.iter().map(|(root, k, n)| json!({
            "root": parts(root), "k": k, "size": n,
        })).collect::<Vec<_>>(),
        "total": rep.total(),
        "expected_total": rep.expected_total,
        "disjoint": rep.disjoint(),
        "classification_agrees": rep.classification_agrees(),
        "sizes_match": rep.sizes_match(),
        "overlaps": rep.overlaps.iter().map(|(mu, a, b)| json!({
            "mu": parts(mu), "roots": [parts(a), parts(b)],
        })).collect::<Vec<_>>(),
        "misclassified": rep.misclassified.iter().map(|(mu, found, owner)| json!({
            "mu": parts(mu),
            "classified": parts(found),
            "owner": owner.as_ref().map(parts),
        })).collect::<Vec<_>>(),
        "success": rep.success(),
    })
}

pub fn cover_text(rep: &CoverReport) -> String {
    let mut s = String::new();
    for (root, k, n) in &rep.orbit_sizes {
        writeln!(s, "orbit ({root}) k={k} size={n}").unwrap();
    }
    for (mu, a, b) in &rep.overlaps {
        writeln!(s, "FAIL overlap: {mu} in the orbits of ({a}) and ({b})").unwrap();
    }
    for (mu, found, owner) in &rep.misclassified {
        match owner {
            Some(o) => writeln!(s, "FAIL classify: {mu} -> ({found}) but lies in ({o})").unwrap(),
            None => writeln!(s, "FAIL uncovered: {mu} (classified to ({found}))").unwrap(),
        }
    }
    writeln!(
        s,
        "{} cover level {}: total {} of {}, disjoint={}, classification agrees={}",
        if rep.success() { "PASS" } else { "FAIL" },
        rep.level,
        rep.total(),
        rep.expected_total,
        rep.disjoint(),
        rep.classification_agrees()
    )
    .unwrap();
    s
}

/// Header `l,r,e`, then the nonzero entries by level and `r`.
pub fn etable_csv(t: &ETable) -> String {
    let mut s = String::from("l,r,e\n");
    for (l, r, e) in t.nonzero_entries() {
        writeln!(s, "{l},{r},{e}").unwrap();
    }
    s
}

pub fn etable_context(t: &ETable) -> String {
    match t.context() {
        ETableContext::Square { root, k, seeds } => {
            format!("root ({root}) k={k} seeds={seeds}")
        }
        ETableContext::Omega { m } => format!("omega m={m}"),
    }
}

pub fn identity(rep: &IdentityReport) -> Value {
    json!({
        "name": rep.name,
        "holds": rep.holds(),
        "instances": rep.instances.iter().map(|i| json!({
            "params": i.params,
            "lhs": big(&i.lhs),
            "rhs": big(&i.rhs),
            "holds": i.holds(),
        })).collect::<Vec<_>>(),
    })
}

pub fn identity_text(rep: &IdentityReport) -> String {
    let mut s = String::new();
    for i in &rep.instances {
        let params = i
            .params
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        writeln!(
            s,
            "{} {} ({params}): lhs={} rhs={}",
            if i.holds() { "PASS" } else { "FAIL" },
            rep.name,
            i.lhs,
            i.rhs
        )
        .unwrap();
    }
    let ok = rep.instances.iter().filter(|i| i.holds()).count();
    writeln!(
        s,
        "{} {}: {ok}/{} instances",
        if rep.holds() { "PASS" } else { "FAIL" },
        rep.name,
        rep.instances.len()
    )
    .unwrap();
    s
}

fn label(l: NodeLabel) -> Value {
    match l {
        NodeLabel::Pair(i, j) => json!([i, j]),
        NodeLabel::Single(r) => json!([r]),
    }
}

fn tree_node(n: &TreeNode) -> Value {
    json!({
        "partition": parts(&n.partition),
        "level": n.level,
        "label": label(n.label),
        "kind": n.kind.tag(),
        "children": n.children.iter().map(tree_node).collect::<Vec<_>>(),
    })
}

/// One tree, or the two trees of a forest, under `trees`.
pub fn orbit_tree(t: &OrbitTree, k: usize, depth: usize) -> Value {
    json!({
        "k": k,
        "depth": depth,
        "nodes": t.node_count(),
        "trees": t.roots().iter().map(tree_node).collect::<Vec<_>>(),
    })
}

fn canonical_node(n: &CanonicalNode) -> Value {
    json!({
        "label": label(n.label),
        "children": n.children.iter().map(canonical_node).collect::<Vec<_>>(),
    })
}

pub fn canonical_tree(t: &CanonicalNode, depth: usize) -> Value {
    json!({ "depth": depth, "nodes": t.node_count(), "tree": canonical_node(t) })
}

/// Preorder DOT writer; captions are escaped for double quotes.
struct Dot {
    out: String,
    next: usize,
}

impl Dot {
    fn new() -> Self {
        Dot {
            out: String::from("digraph tree {\n  node [shape=box];\n"),
            next: 0,
        }
    }

    fn node(&mut self, caption: &str) -> usize {
        let id = self.next;
        self.next += 1;
        writeln!(
            self.out,
            "  n{id} [label=\"{}\"];",
            caption.replace('"', "\\\"")
        )
        .unwrap();
        id
    }

    fn edge(&mut self, from: usize, to: usize) {
        writeln!(self.out, "  n{from} -> n{to};").unwrap();
    }

    fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}

fn dot_orbit(dot: &mut Dot, n: &TreeNode) -> usize {
    let id = dot.node(&format!("({}) | {}", n.partition, n.label));
    for c in &n.children {
        let child = dot_orbit(dot, c);
        dot.edge(id, child);
    }
    id
}

fn dot_canonical(dot: &mut Dot, n: &CanonicalNode) -> usize {
    let id = dot.node(&n.label.to_string());
    for c in &n.children {
        let child = dot_canonical(dot, c);
        dot.edge(id, child);
    }
    id
}

/// Orbit tree or forest; a forest is two unconnected roots.
pub fn orbit_tree_dot(t: &OrbitTree) -> String {
    let mut dot = Dot::new();
    for root in t.roots() {
        dot_orbit(&mut dot, root);
    }
    dot.finish()
}

pub fn canonical_tree_dot(t: &CanonicalNode) -> String {
    let mut dot = Dot::new();
    dot_canonical(&mut dot, t);
    dot.finish()
}

pub fn iso(rep: &IsoReport) -> Value {
    json!({
        "depth": rep.depth,
        "nodes_compared": rep.nodes_compared,
        "first_part_offset": rep.first_part_offset,
        "isomorphic": rep.isomorphic(),
        "mismatch": rep.mismatch.as_ref().map(|m| json!({
            "tree": m.tree,
            "depth": m.depth,
            "position": m.position,
            "detail": m.detail,
        })),
    })
}

pub fn iso_text(rep: &IsoReport) -> String {
    let mut s = String::new();
    if let Some(m) = &rep.mismatch {
        writeln!(
            s,
            "FAIL mismatch in tree {} at depth {}, position {}: {}",
            m.tree, m.depth, m.position, m.detail
        )
        .unwrap();
    }
    writeln!(
        s,
        "{} isomorphic to depth {}: {} nodes compared, first-part offset {}",
        if rep.isomorphic() { "PASS" } else { "FAIL" },
        rep.depth,
        rep.nodes_compared,
        rep.first_part_offset
    )
    .unwrap();
    s
}

fn degree(rec: &DegreeRecord) -> Value {
    json!({
        "D": rec.degree,
        "rows": rec.rows,
        "cols": rec.cols,
        "rank": rec.rank,
        "predicted": rec.predicted,
    })
}

fn span_outcome(o: &SpanOutcome) -> Option<Value> {
    let solvable = o.solvable()?;
    let mut v = json!({
        "mu": parts(&o.mu),
        "degree": o.degree,
        "rows": o.rows,
        "cols": o.cols,
        "solvable": solvable,
    });
    let obj = v.as_object_mut().expect("object");
    match &o.status {
        SpanStatus::Solvable { witness } => {
            obj.insert(
                "witness".into(),
                witness
                    .iter()
                    .map(|t| {
                        json!({
                            "nu": parts(&t.nu),
                            "shape": t.shape,
                            "coeff": t.coeff.to_string(),
                        })
                    })
                    .collect(),
            );
        }
        SpanStatus::Unsolvable {
            rank,
            rank_augmented,
        } => {
            obj.insert("rank".into(), json!(rank));
            obj.insert("rank_augmented".into(), json!(rank_augmented));
        }
        SpanStatus::InBasis | SpanStatus::AboveCutoff => {}
    }
    Some(v)
}

/// Independence and spanning results; `independence` is omitted when no
/// degrees were checked.
pub fn graded(g: &GradedReport) -> Value {
    let mut v = json!({
        "ell": g.ell,
        "m": g.m,
        "r": g.r,
        "dmax": g.dmax,
        "basis": g.basis.iter().map(parts).collect::<Vec<_>>(),
        "degrees": g.degrees.iter().map(degree).collect::<Vec<_>>(),
        "spanning": g.spanning.iter().filter_map(span_outcome).collect::<Vec<_>>(),
        "skipped": g.spanning.iter().filter(|o| o.status == SpanStatus::AboveCutoff)
            .map(|o| parts(&o.mu)).collect::<Vec<_>>(),
    });
    let obj = v.as_object_mut().expect("object");
    if let Some(c) = g.convention {
        obj.insert("convention".into(), json!(c.name()));
        obj.insert("bound".into(), json!(c.bound(g.ell)));
    }
    if !g.degrees.is_empty() {
        obj.insert("independence".into(), json!(g.independent()));
    }
    if g.convention.is_some() {
        obj.insert("spanning_verdict".into(), json!(g.spans()));
    }
    v
}

pub fn conjecture(rep: &ConjectureReport) -> Value {
    let mut v = graded(&rep.graded);
    let obj = v.as_object_mut().expect("object");
    obj.insert("independence".into(), json!(rep.independence));
    obj.insert("spanning_verdict".into(), json!(rep.spanning));
    obj.insert("rank_count_match".into(), json!(rep.rank_count_match));
    obj.insert("basis_count".into(), json!(rep.basis_count));
    obj.insert("ballot".into(), big(&rep.ballot));
    obj.insert("hilbert".into(), rep.hilbert.iter().map(degree).collect());
    obj.insert("hilbert_match".into(), json!(rep.hilbert_match));
    v
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn graded_text(g: &GradedReport) -> String {
    let mut s = String::new();
    write!(s, "ell={} m={} r={} dmax={}", g.ell, g.m, g.r, g.dmax).unwrap();
    if let Some(c) = g.convention {
        write!(s, " convention={c}").unwrap();
    }
    s.push('\n');
    let basis: Vec<String> = g.basis.iter().map(|b| format!("({b})")).collect();
    writeln!(s, "basis ({}): {}", g.basis.len(), basis.join(" ")).unwrap();
    for rec in &g.degrees {
        writeln!(
            s,
            "{} D={} rows={} cols={} rank={} predicted={}",
            verdict(rec.full_column_rank()),
            rec.degree,
            rec.rows,
            rec.cols,
            rec.rank,
            rec.predicted
        )
        .unwrap();
    }
    if !g.degrees.is_empty() {
        writeln!(
            s,
            "{} independence up to D={}",
            verdict(g.independent()),
            g.dmax
        )
        .unwrap();
    }
    for o in &g.spanning {
        match &o.status {
            SpanStatus::InBasis => {}
            SpanStatus::AboveCutoff => {
                writeln!(s, "SKIP span ({}) degree {} above dmax", o.mu, o.degree).unwrap()
            }
            SpanStatus::Solvable { witness } => writeln!(
                s,
                "PASS span ({}) degree {}: solvable with {} terms",
                o.mu,
                o.degree,
                witness.len()
            )
            .unwrap(),
            SpanStatus::Unsolvable {
                rank,
                rank_augmented,
            } => writeln!(
                s,
                "FAIL span ({}) degree {}: unsolvable, rank {rank} -> {rank_augmented} with P(μ) adjoined",
                o.mu, o.degree
            )
            .unwrap(),
        }
    }
    if g.convention.is_some() {
        writeln!(s, "{} spanning", verdict(g.spans())).unwrap();
    }
    s
}

pub fn conjecture_text(rep: &ConjectureReport) -> String {
    let mut s = graded_text(&rep.graded);
    writeln!(
        s,
        "{} rank count: #basis={} ballot={}",
        verdict(rep.rank_count_match),
        rep.basis_count,
        rep.ballot
    )
    .unwrap();
    for rec in &rep.hilbert {
        if rec.rank != rec.predicted {
            writeln!(
                s,
                "FAIL hilbert D={}: generated rank {} vs free prediction {}",
                rec.degree, rec.rank, rec.predicted
            )
            .unwrap();
        }
    }
    writeln!(s, "{} hilbert comparison", verdict(rep.hilbert_match)).unwrap();
    s
}
