//! Ordered orbit trees and the canonical labeled tree.
//!
//! The children of an orbit-tree node `ν` at level `L` are
//! `(ν:1) ≺ ⋯ ≺ (ν:ν_L) ≺ τ_{L+1}(ν:1)`. Labels follow the node kind:
//!
//! * root: `(2,2)`;
//! * d-child `μ` at level `L`: `(μ_L+1, L+2−μ_1)`;
//! * τ-child `μ`: `(μ_L+1)`.
//!
//! The first entry of every label equals the node's child count, which is
//! what makes the label propagation of the canonical tree reproduce the
//! orbit tree.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::orbits::descendants;
use crate::{Error, Partition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeLabel {
    Pair(u32, u32),
    Single(u32),
}

impl NodeLabel {
    /// First (or only) entry; equals the number of children.
    pub fn arity(self) -> u32 {
        match self {
            NodeLabel::Pair(i, _) => i,
            NodeLabel::Single(r) => r,
        }
    }

    /// Labels of the children, in order.
    pub fn children(self) -> Vec<NodeLabel> {
        match self {
            NodeLabel::Pair(i, j) => (2..=i)
                .map(|k| NodeLabel::Pair(k, j + 1))
                .chain(core::iter::once(NodeLabel::Single(j + 1)))
                .collect(),
            NodeLabel::Single(r) => (2..=r)
                .map(|k| NodeLabel::Pair(k, 3))
                .chain(core::iter::once(NodeLabel::Single(3)))
                .collect(),
        }
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeLabel::Pair(i, j) => write!(f, "({i},{j})"),
            NodeLabel::Single(r) => write!(f, "({r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Root,
    D,
    Tau,
}

impl NodeKind {
    pub fn tag(self) -> &'static str {
        match self {
            NodeKind::Root => "root",
            NodeKind::D => "d",
            NodeKind::Tau => "tau",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub partition: Partition,
    pub level: usize,
    pub label: NodeLabel,
    pub kind: NodeKind,
    pub children: Vec<TreeNode>,
}

fn label_for(mu: &Partition, level: usize, kind: NodeKind) -> NodeLabel {
    match kind {
        NodeKind::Root => NodeLabel::Pair(2, 2),
        NodeKind::D => NodeLabel::Pair(mu.last() + 1, level as u32 + 2 - mu.first()),
        NodeKind::Tau => NodeLabel::Single(mu.last() + 1),
    }
}

impl TreeNode {
    fn grow(partition: Partition, level: usize, kind: NodeKind, depth: usize) -> Result<TreeNode> {
        let label = label_for(&partition, level, kind);
        let mut children = Vec::new();
        if depth > 0 {
            let kids = descendants(&partition, level)?;
            let n = kids.len();
            for (i, child) in kids.into_iter().enumerate() {
                let kind = if i + 1 == n {
                    NodeKind::Tau
                } else {
                    NodeKind::D
                };
                children.push(TreeNode::grow(child, level + 1, kind, depth - 1)?);
            }
        }
        Ok(TreeNode {
            partition,
            level,
            label,
            kind,
            children,
        })
    }

    /// Nodes at each distance from this node, in tree order.
    pub fn levels(&self) -> Vec<Vec<&TreeNode>> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![self];
        while !cur.is_empty() {
            let next = cur.iter().flat_map(|n| n.children.iter()).collect();
            out.push(cur);
            cur = next;
        }
        out
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(TreeNode::node_count)
            .sum::<usize>()
    }

    /// Pre-order walk.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a TreeNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }
}

/// `T_λ` for a `τ_k`-fixed square root, or the two-tree forest rooted at
/// `λ` and `τ_kλ` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitTree {
    Tree(TreeNode),
    Forest(Box<[TreeNode; 2]>),
}

impl OrbitTree {
    pub fn roots(&self) -> &[TreeNode] {
        match self {
            OrbitTree::Tree(t) => core::slice::from_ref(t),
            OrbitTree::Forest(f) => &f[..],
        }
    }

    /// Nodes at distance `d` from the roots, across all trees, in order.
    pub fn level(&self, d: usize) -> Vec<&TreeNode> {
        let mut out = Vec::new();
        for r in self.roots() {
            if let Some(l) = r.levels().into_iter().nth(d) {
                out.extend(l);
            }
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.roots().iter().map(TreeNode::node_count).sum()
    }
}

fn require_square(lam: &Partition, k: usize) -> Result<()> {
    if lam.is_square(k) {
        Ok(())
    } else {
        Err(Error::NotSquare {
            partition: format!("{lam}"),
            k,
        })
    }
}

/// Builds the orbit tree (or forest) of a square root to `depth`
/// propagations.
pub fn build_orbit_tree(lam: &Partition, k: usize, depth: usize) -> Result<OrbitTree> {
    require_square(lam, k)?;
    let partner = lam.tau(k as u32)?;
    let first = TreeNode::grow(lam.clone(), k, NodeKind::Root, depth)?;
    if partner == *lam {
        Ok(OrbitTree::Tree(first))
    } else {
        let second = TreeNode::grow(partner, k, NodeKind::Root, depth)?;
        Ok(OrbitTree::Forest(Box::new([first, second])))
    }
}

/// A vertex of the canonical labeled tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalNode {
    pub label: NodeLabel,
    pub children: Vec<CanonicalNode>,
}

impl CanonicalNode {
    fn grow(label: NodeLabel, depth: usize) -> CanonicalNode {
        let children = if depth == 0 {
            Vec::new()
        } else {
            label
                .children()
                .into_iter()
                .map(|l| CanonicalNode::grow(l, depth - 1))
                .collect()
        };
        CanonicalNode { label, children }
    }

    pub fn levels(&self) -> Vec<Vec<&CanonicalNode>> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![self];
        while !cur.is_empty() {
            let next = cur.iter().flat_map(|n| n.children.iter()).collect();
            out.push(cur);
            cur = next;
        }
        out
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(CanonicalNode::node_count)
            .sum::<usize>()
    }

    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a CanonicalNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }
}

/// The canonical tree rooted at `(2,2)`, expanded `depth` times.
pub fn build_canonical_tree(depth: usize) -> CanonicalNode {
    CanonicalNode::grow(NodeLabel::Pair(2, 2), depth)
}

/// Where two trees first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Which root of a forest (0 for a single tree).
    pub tree: usize,
    pub depth: usize,
    pub position: usize,
    pub detail: alloc::string::String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub depth: usize,
    pub nodes_compared: usize,
    /// `k_1 − k_2` for root comparisons; zero against the canonical tree.
    pub first_part_offset: i64,
    pub mismatch: Option<Mismatch>,
}

impl IsoReport {
    pub fn isomorphic(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares the labels of `T_λ` (each tree of the forest) with the
/// canonical tree, level by level in order.
pub fn check_label_isomorphism(lam: &Partition, k: usize, depth: usize) -> Result<IsoReport> {
    let tree = build_orbit_tree(lam, k, depth)?;
    let canon = build_canonical_tree(depth);
    let canon_levels = canon.levels();
    let mut nodes_compared = 0;
    for (t, root) in tree.roots().iter().enumerate() {
        let levels = root.levels();
        for d in 0..=depth {
            let ours = levels.get(d).map(Vec::as_slice).unwrap_or(&[]);
            let theirs = canon_levels.get(d).map(Vec::as_slice).unwrap_or(&[]);
            if ours.len() != theirs.len() {
                return Ok(IsoReport {
                    depth,
                    nodes_compared,
                    first_part_offset: 0,
                    mismatch: Some(Mismatch {
                        tree: t,
                        depth: d,
                        position: ours.len().min(theirs.len()),
                        detail: format!("{} nodes vs {} canonical", ours.len(), theirs.len()),
                    }),
                });
            }
            for (i, (a, b)) in ours.iter().zip(theirs).enumerate() {
                nodes_compared += 1;
                let arity_ok = d == depth || a.children.len() == a.label.arity() as usize;
                if a.label != b.label || !arity_ok {
                    return Ok(IsoReport {
                        depth,
                        nodes_compared,
                        first_part_offset: 0,
                        mismatch: Some(Mismatch {
                            tree: t,
                            depth: d,
                            position: i,
                            detail: format!(
                                "{} labeled {} with {} children, canonical {}",
                                a.partition,
                                a.label,
                                a.children.len(),
                                b.label
                            ),
                        }),
                    });
                }
            }
        }
    }
    Ok(IsoReport {
        depth,
        nodes_compared,
        first_part_offset: 0,
        mismatch: None,
    })
}

/// Walks two orbit trees in parallel, matching children by position, and
/// checks at each matched pair `(μ, μ')` that `μ_1 − μ'_1 = k_1 − k_2`,
/// the last parts agree and the child counts agree.
pub fn compare_roots(
    lam1: &Partition,
    k1: usize,
    lam2: &Partition,
    k2: usize,
    depth: usize,
) -> Result<IsoReport> {
    require_square(lam1, k1)?;
    require_square(lam2, k2)?;
    if lam1.is_tau_fixed(k1 as u32)? != lam2.is_tau_fixed(k2 as u32)? {
        return Err(Error::MixedFixedness);
    }
    let t1 = build_orbit_tree(lam1, k1, depth)?;
    let t2 = build_orbit_tree(lam2, k2, depth)?;
    let offset = k1 as i64 - k2 as i64;
    let mut report = IsoReport {
        depth,
        nodes_compared: 0,
        first_part_offset: offset,
        mismatch: None,
    };
    for (t, (a, b)) in t1.roots().iter().zip(t2.roots()).enumerate() {
        if let Some(m) = match_nodes(a, b, offset, t, 0, 0, &mut report.nodes_compared) {
            report.mismatch = Some(m);
            break;
        }
    }
    Ok(report)
}

fn match_nodes(
    a: &TreeNode,
    b: &TreeNode,
    offset: i64,
    tree: usize,
    depth: usize,
    position: usize,
    count: &mut usize,
) -> Option<Mismatch> {
    *count += 1;
    let first_ok = a.partition.first() as i64 - b.partition.first() as i64 == offset;
    let last_ok = a.partition.last() == b.partition.last();
    let level_ok = a.level as i64 - b.level as i64 == offset;
    if !(first_ok && last_ok && level_ok) || a.children.len() != b.children.len() {
        return Some(Mismatch {
            tree,
            depth,
            position,
            detail: format!(
                "{} (level {}) vs {} (level {})",
                a.partition, a.level, b.partition, b.level
            ),
        });
    }
    for (i, (ca, cb)) in a.children.iter().zip(&b.children).enumerate() {
        if let Some(m) = match_nodes(ca, cb, offset, tree, depth + 1, i, count) {
            return Some(m);
        }
    }
    None
}
