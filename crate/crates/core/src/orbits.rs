//! Orbit sets `P^ℓ(λ)`, `P^ℓ(Ω_m)` and `Q^ℓ(λ)`, root classification and
//! the disjoint-cover check.
//!
//! Every builder grows one level at a time from the definition: the
//! d-part appends a part `j ≤ μ_last` to each element of the previous
//! level, the τ-part is the `τ_b` image of the d-part for the level's box
//! bound `b`, and the level is their union. Alongside, each step also forms
//! the union of descendant sets `d(ν)` and records whether the two agree,
//! so the descendant decomposition is checked on every run rather than
//! assumed.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::partitions::enumerate_box;
use crate::{Error, Partition, Result};

/// How an orbit element entered its level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// Base level of a partition-rooted orbit: `λ` or `τ_kλ` itself.
    Seed,
    DOnly,
    TauOnly,
    Both,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Seed => "seed",
            Provenance::DOnly => "d",
            Provenance::TauOnly => "tau",
            Provenance::Both => "both",
        }
    }

    pub fn in_d(self) -> bool {
        matches!(self, Provenance::DOnly | Provenance::Both)
    }

    pub fn in_tau(self) -> bool {
        matches!(self, Provenance::TauOnly | Provenance::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitElement {
    pub partition: Partition,
    pub provenance: Provenance,
}

/// `Ω_m = {(1), …, (m)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaSpec {
    m: usize,
}

impl OmegaSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::NonPositive { what: "m" });
        }
        Ok(OmegaSpec { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Box bound `ℓ+m−1` at level `ℓ`.
    pub fn bound(&self, level: usize) -> u32 {
        (level + self.m - 1) as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitRoot {
    Partition { root: Partition, k: usize },
    Omega(OmegaSpec),
}

/// Bookkeeping from the level-by-level construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Elements produced by two different parents' descendant sets,
    /// summed over all steps.
    pub descendant_collisions: usize,
    /// Elements in both the d-part and the τ-part, summed over all steps.
    pub d_tau_overlap: usize,
    /// Whether every level equalled the union of its parents' descendant
    /// sets.
    pub descendant_union_holds: bool,
}

/// One level of an orbit: every element has `level` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitLevel {
    pub level: usize,
    pub bound: u32,
    pub root: OrbitRoot,
    /// Sorted descending-lex, no duplicates.
    pub elements: Vec<OrbitElement>,
    pub stats: BuildStats,
}

impl OrbitLevel {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.elements.iter().map(|e| &e.partition)
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        self.elements
            .binary_search_by(|e| mu.cmp(&e.partition))
            .is_ok()
    }

    pub fn provenance(&self, mu: &Partition) -> Option<Provenance> {
        self.elements
            .binary_search_by(|e| mu.cmp(&e.partition))
            .ok()
            .map(|i| self.elements[i].provenance)
    }
}

type LevelMap = BTreeMap<Partition, Provenance>;

struct StepResult {
    next: LevelMap,
    descendant_collisions: usize,
    d_tau_overlap: usize,
    descendant_union_holds: bool,
}

/// `d_b(μ) = {(μ:j) : 1 ≤ j ≤ μ_last} ∪ {τ_b(μ:1)}` in tree order.
fn descendant_set(mu: &Partition, bound: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = (1..=mu.last()).map(|j| mu.appended(j)).collect();
    out.push(mu.appended(1).reflected(bound));
    out
}

/// One level of growth at box bound `bound`. Elements of `prev` must all
/// have parts `< bound`.
fn step(prev: &LevelMap, bound: u32) -> StepResult {
    let mut next = LevelMap::new();
    for mu in prev.keys() {
        for j in 1..=mu.last() {
            next.insert(mu.appended(j), Provenance::DOnly);
        }
    }
    let d_part: Vec<Partition> = next.keys().cloned().collect();
    let mut d_tau_overlap = 0;
    for nu in &d_part {
        let t = nu.reflected(bound);
        match next.get_mut(&t) {
            Some(tag) => {
                *tag = Provenance::Both;
                d_tau_overlap += 1;
            }
            None => {
                next.insert(t, Provenance::TauOnly);
            }
        }
    }

    let mut union = BTreeSet::new();
    let mut produced = 0usize;
    for mu in prev.keys() {
        for child in descendant_set(mu, bound) {
            produced += 1;
            union.insert(child);
        }
    }
    let descendant_collisions = produced - union.len();
    let descendant_union_holds =
        union.len() == next.len() && union.iter().zip(next.keys()).all(|(a, b)| a == b);

    StepResult {
        next,
        descendant_collisions,
        d_tau_overlap,
        descendant_union_holds,
    }
}

fn freeze(
    map: &LevelMap,
    level: usize,
    bound: u32,
    root: &OrbitRoot,
    stats: BuildStats,
) -> OrbitLevel {
    OrbitLevel {
        level,
        bound,
        root: root.clone(),
        elements: map
            .iter()
            .rev()
            .map(|(p, &t)| OrbitElement {
                partition: p.clone(),
                provenance: t,
            })
            .collect(),
        stats,
    }
}

/// Grows levels `first..=last` from `base`, with box bound `bound(level)`.
fn grow(
    base: LevelMap,
    first: usize,
    last: usize,
    root: &OrbitRoot,
    bound: impl Fn(usize) -> u32,
    base_stats: BuildStats,
) -> Vec<OrbitLevel> {
    let mut stats = base_stats;
    let mut out = Vec::with_capacity(last + 1 - first);
    out.push(freeze(&base, first, bound(first), root, stats));
    let mut cur = base;
    for level in first + 1..=last {
        let s = step(&cur, bound(level));
        stats.descendant_collisions += s.descendant_collisions;
        stats.d_tau_overlap += s.d_tau_overlap;
        stats.descendant_union_holds &= s.descendant_union_holds;
        out.push(freeze(&s.next, level, bound(level), root, stats));
        cur = s.next;
    }
    out
}

fn check_in_box(lam: &Partition, k: usize) -> Result<()> {
    if lam.len() != k {
        return Err(Error::PartCountMismatch {
            expected: k,
            found: lam.len(),
        });
    }
    if lam.first() as usize > k {
        return Err(Error::BoundViolation {
            part: lam.first(),
            bound: k as u32,
        });
    }
    Ok(())
}

/// `d(μ)` for `μ ∈ P^ℓ`, ordered `(μ:1) ≺ ⋯ ≺ (μ:μ_ℓ) ≺ τ_{ℓ+1}(μ:1)`.
pub fn descendants(mu: &Partition, level: usize) -> Result<Vec<Partition>> {
    check_in_box(mu, level)?;
    Ok(descendant_set(mu, level as u32 + 1))
}

/// Levels `P^k(λ), …, P^lmax(λ)` for `λ ∈ P^k`.
///
/// For a square root the descendant decomposition always holds; a
/// violation is reported as [`Error::Invariant`].
pub fn build_orbit_levels(lam: &Partition, k: usize, lmax: usize) -> Result<Vec<OrbitLevel>> {
    check_in_box(lam, k)?;
    if lmax < k {
        return Err(Error::LevelBelowRoot { level: lmax, k });
    }
    let root = OrbitRoot::Partition {
        root: lam.clone(),
        k,
    };
    let mut base = LevelMap::new();
    base.insert(lam.clone(), Provenance::Seed);
    base.insert(lam.reflected(k as u32), Provenance::Seed);
    let stats = BuildStats {
        descendant_union_holds: true,
        ..BuildStats::default()
    };
    let levels = grow(base, k, lmax, &root, |l| l as u32, stats);
    if lam.is_square(k) {
        let last = &levels[levels.len() - 1].stats;
        if last.descendant_collisions != 0 || !last.descendant_union_holds {
            return Err(Error::Invariant(format!(
                "descendant sets of the square root {lam} overlap or miss elements"
            )));
        }
    }
    Ok(levels)
}

/// `P^ℓ(λ)` for `λ ∈ P^k` and `ℓ ≥ k`.
pub fn build_orbit(lam: &Partition, k: usize, level: usize) -> Result<OrbitLevel> {
    let mut levels = build_orbit_levels(lam, k, level)?;
    Ok(levels.pop().expect("at least the base level"))
}

/// Levels `P^1(Ω_m), …, P^lmax(Ω_m)`.
pub fn build_omega_levels(spec: OmegaSpec, lmax: usize) -> Result<Vec<OrbitLevel>> {
    if lmax < 1 {
        return Err(Error::NonPositive { what: "level" });
    }
    // Ω_m is τ_m-stable, so the first level is its own d- and τ-part.
    let base: LevelMap = (1..=spec.m as u32)
        .map(|j| {
            (
                Partition::from_vec_unchecked(alloc::vec![j]),
                Provenance::Both,
            )
        })
        .collect();
    let stats = BuildStats {
        descendant_union_holds: true,
        ..BuildStats::default()
    };
    Ok(grow(
        base,
        1,
        lmax,
        &OrbitRoot::Omega(spec),
        |l| spec.bound(l),
        stats,
    ))
}

/// `P^ℓ(Ω_m)`.
pub fn build_omega_orbit(spec: OmegaSpec, level: usize) -> Result<OrbitLevel> {
    let mut levels = build_omega_levels(spec, level)?;
    Ok(levels.pop().expect("at least one level"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// `μ ↦ μ ∖ {μ_ℓ}`, taken when `μ_1 < ℓ`.
    Drop,
    /// `μ ↦ τ_ℓ(μ) ∖ {1}`, taken when `μ_1 = ℓ` and `μ_ℓ ≥ 2`.
    ReflectDrop,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// The lexicographically smaller of `{λ, τ_kλ}`.
    pub root: Partition,
    pub k: usize,
    pub steps: Vec<StepKind>,
    /// The partition before each step, then the square it stopped at.
    pub trace: Vec<Partition>,
}

/// Finds the square root whose orbit contains `μ ∈ P^ℓ`, by undoing the
/// descendant step one level at a time.
pub fn classify_root(mu: &Partition) -> Result<Classification> {
    let l = mu.len();
    check_in_box(mu, l)?;
    let mut cur = mu.clone();
    let mut steps = Vec::new();
    let mut trace = alloc::vec![cur.clone()];
    loop {
        let level = cur.len();
        if cur.is_square(level) {
            break;
        }
        if (cur.first() as usize) < level {
            cur = cur.drop_last()?;
            steps.push(StepKind::Drop);
        } else {
            cur = cur.reflected(level as u32).drop_last()?;
            steps.push(StepKind::ReflectDrop);
        }
        trace.push(cur.clone());
    }
    let k = cur.len();
    let partner = cur.reflected(k as u32);
    let root = if partner < cur { partner } else { cur };
    Ok(Classification {
        root,
        k,
        steps,
        trace,
    })
}

/// All square partitions of size `k`, one per `{λ, τ_kλ}` pair (the
/// lexicographically smaller), descending-lex.
pub fn canonical_square_roots(k: usize) -> Vec<Partition> {
    enumerate_box(k, k as u32)
        .into_iter()
        .filter(|lam| lam.is_square(k) && *lam <= lam.reflected(k as u32))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub level: usize,
    /// `(root, k, #P^ℓ(root))`, roots ordered by `k` then descending-lex.
    pub orbit_sizes: Vec<(Partition, usize, usize)>,
    pub expected_total: u64,
    /// Elements in more than one orbit, with both roots.
    pub overlaps: Vec<(Partition, Partition, Partition)>,
    /// Elements whose classified root differs from the orbit holding them.
    pub misclassified: Vec<(Partition, Partition, Option<Partition>)>,
    /// Elements of `P^ℓ` in no orbit.
    pub uncovered: Vec<Partition>,
}

impl CoverReport {
    pub fn total(&self) -> u64 {
        self.orbit_sizes.iter().map(|(_, _, n)| *n as u64).sum()
    }

    pub fn disjoint(&self) -> bool {
        self.overlaps.is_empty()
    }

    pub fn classification_agrees(&self) -> bool {
        self.misclassified.is_empty()
    }

    pub fn sizes_match(&self) -> bool {
        self.total() == self.expected_total && self.uncovered.is_empty()
    }

    pub fn success(&self) -> bool {
        self.disjoint() && self.classification_agrees() && self.sizes_match()
    }
}

/// Checks that the orbits of all square roots with `k ≤ ℓ` partition
/// `P^ℓ`, and that [`classify_root`] lands every element in the orbit that
/// actually contains it.
pub fn verify_cover(level: usize) -> Result<CoverReport> {
    if level < 1 {
        return Err(Error::NonPositive { what: "level" });
    }
    let mut owner: BTreeMap<Partition, Partition> = BTreeMap::new();
    let mut orbit_sizes = Vec::new();
    let mut overlaps = Vec::new();
    for k in 1..=level {
        for root in canonical_square_roots(k) {
            let orbit = build_orbit(&root, k, level)?;
            orbit_sizes.push((root.clone(), k, orbit.len()));
            for mu in orbit.partitions() {
                if let Some(prev) = owner.insert(mu.clone(), root.clone()) {
                    overlaps.push((mu.clone(), prev, root.clone()));
                }
            }
        }
    }
    let mut misclassified = Vec::new();
    let mut uncovered = Vec::new();
    let all = enumerate_box(level, level as u32);
    for mu in &all {
        let found = classify_root(mu)?.root;
        match owner.get(mu) {
            Some(r) if *r == found => {}
            Some(r) => misclassified.push((mu.clone(), found, Some(r.clone()))),
            None => {
                uncovered.push(mu.clone());
                misclassified.push((mu.clone(), found, None));
            }
        }
    }
    let expected_total = crate::counting::binomial(2 * level as i64 - 1, level as i64)
        .try_into()
        .unwrap_or(u64::MAX);
    Ok(CoverReport {
        level,
        orbit_sizes,
        expected_total,
        overlaps,
        misclassified,
        uncovered,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QLevel {
    /// 1-based level index; level `i` has `k+i−1` parts.
    pub index: usize,
    pub bound: u32,
    pub elements: Vec<OrbitElement>,
    /// Elements in both the d-part and the τ-part at this step.
    pub collisions: usize,
    /// Elements found more than once among the parents' descendant sets.
    pub descendant_collisions: usize,
    /// Whether the level equals the union of its parents' descendant sets.
    pub descendant_union_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QOrbit {
    pub seed: Partition,
    pub levels: Vec<QLevel>,
}

impl QOrbit {
    pub fn cardinalities(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.elements.len()).collect()
    }

    /// Total d/τ collisions over all levels.
    pub fn collisions(&self) -> usize {
        self.levels.iter().map(|l| l.collisions).sum()
    }
}

/// `Q^1(λ), …, Q^depth(λ)` for an arbitrary partition `λ` with `k` parts.
///
/// The box bound starts at `λ_1+λ_k−1` and grows by one per level. No
/// disjointness is assumed; every level is deduplicated.
pub fn build_q_orbit(lam: &Partition, depth: usize) -> Result<QOrbit> {
    if depth < 1 {
        return Err(Error::NonPositive { what: "depth" });
    }
    let start = lam.first() + lam.last() - 1;
    let mut cur = LevelMap::new();
    cur.insert(lam.clone(), Provenance::Seed);
    let t = lam.reflected(start);
    let mut collisions = 0;
    match cur.entry(t) {
        Entry::Occupied(_) => collisions = 1,
        Entry::Vacant(v) => {
            v.insert(Provenance::Seed);
        }
    }
    let mut levels = alloc::vec![QLevel {
        index: 1,
        bound: start,
        elements: freeze_q(&cur),
        collisions,
        descendant_collisions: 0,
        descendant_union_holds: true,
    }];
    for index in 2..=depth {
        let bound = start + index as u32 - 1;
        let s = step(&cur, bound);
        levels.push(QLevel {
            index,
            bound,
            elements: freeze_q(&s.next),
            collisions: s.d_tau_overlap,
            descendant_collisions: s.descendant_collisions,
            descendant_union_holds: s.descendant_union_holds,
        });
        cur = s.next;
    }
    Ok(QOrbit {
        seed: lam.clone(),
        levels,
    })
}

fn freeze_q(map: &LevelMap) -> Vec<OrbitElement> {
    map.iter()
        .rev()
        .map(|(p, &t)| OrbitElement {
            partition: p.clone(),
            provenance: t,
        })
        .collect()
}
