use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::linalg::{exact_rank, rank_bareiss, rank_rational, solve, IntMatrix};
use super::poly::{multiset_permutations, p_of_mu};
use crate::counting::{ballot, binomial};
use crate::orbits::{build_omega_orbit, OmegaSpec};
use crate::partitions::{enumerate_box, partitions_of};
use crate::{Error, Partition, Result};

/// Which partitions generate `M(ℓ,m)` in the spanning test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanConvention {
    /// `P^{ℓ,ℓ}`.
    Literal,
    /// `P^{ℓ,K}`; `K = ℓ+m−1` contains the basis.
    Bounded(u32),
}

impl SpanConvention {
    pub fn default_for(l: usize, m: usize) -> Self {
        SpanConvention::Bounded((l + m).saturating_sub(1) as u32)
    }

    /// Largest allowed part at `ℓ`.
    pub fn bound(&self, l: usize) -> u32 {
        match *self {
            SpanConvention::Literal => l as u32,
            SpanConvention::Bounded(k) => k,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SpanConvention::Literal => "literal",
            SpanConvention::Bounded(_) => "bounded",
        }
    }
}

impl fmt::Display for SpanConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpanConvention::Literal => f.write_str("literal"),
            SpanConvention::Bounded(k) => write!(f, "bounded({k})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest `rows × cols` any single matrix may have.
    pub cell_budget: u128,
    /// Recompute ranks of matrices up to 200×200 by Bareiss and by
    /// rational elimination, failing on disagreement.
    pub cross_check: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cell_budget: 4_000_000,
            cross_check: true,
        }
    }
}

const CROSS_CHECK_DIM: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// `Σ_μ p(D−d_μ, ≤ r)`: the dimension if the basis were free.
    pub predicted: usize,
}

impl DegreeRecord {
    pub fn relation_found(&self) -> bool {
        self.rank < self.predicted
    }

    pub fn full_column_rank(&self) -> bool {
        self.rank == self.cols
    }
}

/// One term `c · m_shape · P(ν)` of a spanning witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTerm {
    pub nu: Partition,
    pub shape: Vec<u32>,
    pub coeff: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanStatus {
    InBasis,
    /// `d_μ` exceeds the degree cutoff.
    AboveCutoff,
    Solvable {
        witness: Vec<WitnessTerm>,
    },
    /// `rank [A|b] = rank A + 1`.
    Unsolvable {
        rank: usize,
        rank_augmented: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanOutcome {
    pub mu: Partition,
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub status: SpanStatus,
}

impl SpanOutcome {
    /// `None` when no system was solved.
    pub fn solvable(&self) -> Option<bool> {
        match self.status {
            SpanStatus::Solvable { .. } => Some(true),
            SpanStatus::Unsolvable { .. } => Some(false),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedReport {
    pub ell: usize,
    pub m: usize,
    pub r: usize,
    pub dmax: usize,
    pub convention: Option<SpanConvention>,
    pub basis: Vec<Partition>,
    pub degrees: Vec<DegreeRecord>,
    pub spanning: Vec<SpanOutcome>,
}

impl GradedReport {
    /// Rank equals column count at every degree up to `d`.
    pub fn independent_up_to(&self, d: usize) -> bool {
        self.degrees
            .iter()
            .filter(|rec| rec.degree <= d)
            .all(DegreeRecord::full_column_rank)
    }

    pub fn independent(&self) -> bool {
        self.degrees.iter().all(DegreeRecord::full_column_rank)
    }

    /// Every tested `P(μ)` lies in the span of the basis.
    pub fn spans(&self) -> bool {
        self.spanning.iter().all(|o| o.solvable() != Some(false))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub graded: GradedReport,
    /// Rank of all generators (spanning set and basis) against the free
    /// prediction, per degree.
    pub hilbert: Vec<DegreeRecord>,
    pub basis_count: usize,
    pub ballot: BigInt,
    pub independence: bool,
    pub spanning: bool,
    pub rank_count_match: bool,
    pub hilbert_match: bool,
}

/// `{μ : μ ∈ P^ℓ(Ω_m)}`, descending-lex.
pub fn basis_candidates(l: usize, m: usize) -> Result<Vec<Partition>> {
    if l < 1 {
        return Err(Error::NonPositive { what: "ℓ" });
    }
    let orbit = build_omega_orbit(OmegaSpec::new(m)?, l)?;
    Ok(orbit.partitions().cloned().collect())
}

/// Generators of the spanning test under `convention`, descending-lex.
pub fn spanning_set(l: usize, convention: SpanConvention) -> Result<Vec<Partition>> {
    if l < 1 {
        return Err(Error::NonPositive { what: "ℓ" });
    }
    Ok(enumerate_box(l, convention.bound(l)))
}

/// `max_μ d_μ + r`.
pub fn default_dmax(l: usize, m: usize) -> Result<usize> {
    let top = basis_candidates(l, m)?
        .iter()
        .map(|mu| degree_of(mu, l))
        .max()
        .unwrap_or(0);
    Ok(top + 2 * l + m)
}

fn degree_of(mu: &Partition, l: usize) -> usize {
    mu.size() as usize - l
}

/// `P(μ)` with integer coefficients.
struct Generator {
    mu: Partition,
    degree: usize,
    terms: Vec<(Vec<u32>, i64)>,
}

fn generator(mu: &Partition, l: usize, m: usize) -> Result<Generator> {
    let poly = p_of_mu(mu, l, m)?;
    let terms = poly
        .terms()
        .map(|(mono, c)| {
            let v = c
                .to_integer()
                .to_i64()
                .filter(|_| c.is_integer())
                .ok_or_else(|| Error::Invariant(format!("coefficient {c} of P({mu})")))?;
            Ok((mono.exponents().to_vec(), v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Generator {
        mu: mu.clone(),
        degree: degree_of(mu, l),
        terms,
    })
}

/// Degree-`d` monomials in `r` variables, descending-lex, with their row
/// positions.
struct RowIndex {
    index: BTreeMap<Vec<u32>, usize>,
}

impl RowIndex {
    fn new(d: usize, r: usize) -> Self {
        let mut rows = Vec::new();
        let mut cur = vec![0u32; r];
        fill_monomials(&mut cur, 0, d as u32, &mut rows);
        let index = rows.into_iter().enumerate().map(|(i, e)| (e, i)).collect();
        RowIndex { index }
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    fn column(&self, poly: &BTreeMap<Vec<u32>, i64>) -> Result<Vec<i64>> {
        let mut col = vec![0i64; self.len()];
        for (e, &c) in poly {
            let i = self
                .index
                .get(e)
                .ok_or_else(|| Error::Invariant(String::from("monomial of the wrong degree")))?;
            col[*i] = c;
        }
        Ok(col)
    }
}

fn fill_monomials(cur: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(cur.clone());
        return;
    }
    for e in (0..=rest).rev() {
        cur[pos] = e;
        fill_monomials(cur, pos + 1, rest - e, out);
    }
}

fn monomial_count(d: usize, r: usize) -> usize {
    binomial((d + r - 1) as i64, (r - 1) as i64)
        .to_usize()
        .unwrap_or(usize::MAX)
}

/// `m_shape · P(ν)` as a sparse map.
fn shape_times(shape: &[u32], g: &Generator, r: usize) -> Result<BTreeMap<Vec<u32>, i64>> {
    let mut padded = shape.to_vec();
    padded.resize(r, 0);
    let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for e in multiset_permutations(&padded) {
        for (t, c) in &g.terms {
            let key: Vec<u32> = e.iter().zip(t).map(|(a, b)| a + b).collect();
            let slot = out.entry(key).or_insert(0);
            *slot = slot
                .checked_add(*c)
                .ok_or_else(|| Error::Invariant(String::from("coefficient overflow")))?;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Generator index and monomial shape of one column.
type ColumnLabel = (usize, Vec<u32>);

/// Columns `m_shape · P(ν)` of degree `d` over the given generators.
fn degree_columns(
    gens: &[&Generator],
    d: usize,
    r: usize,
    rows: &RowIndex,
) -> Result<(Vec<Vec<i64>>, Vec<ColumnLabel>)> {
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.degree > d {
            continue;
        }
        for shape in partitions_of(d - g.degree, r) {
            cols.push(rows.column(&shape_times(&shape, g, r)?)?);
            labels.push((gi, shape));
        }
    }
    Ok((cols, labels))
}

fn column_count(gens: &[&Generator], d: usize, r: usize) -> usize {
    gens.iter()
        .filter(|g| g.degree <= d)
        .map(|g| partitions_of(d - g.degree, r).len())
        .sum()
}

fn guard(d: usize, rows: usize, cols: usize, opts: &CheckOptions) -> Result<()> {
    let cells = rows as u128 * cols as u128;
    if cells > opts.cell_budget {
        return Err(Error::CellBudget {
            degree: d,
            cells,
            budget: opts.cell_budget,
            suggested_dmax: d.saturating_sub(1),
        });
    }
    Ok(())
}

fn checked_rank(a: &IntMatrix, opts: &CheckOptions, d: usize) -> Result<usize> {
    let rank = exact_rank(a).rank;
    if opts.cross_check && a.rows() <= CROSS_CHECK_DIM && a.cols() <= CROSS_CHECK_DIM {
        let b = rank_bareiss(a);
        let q = rank_rational(a);
        if b != rank || q != rank {
            return Err(Error::Invariant(format!(
                "rank disagreement at degree {d}: modular {rank}, Bareiss {b}, rational {q}"
            )));
        }
    }
    Ok(rank)
}

/// Rank records of the columns generated by `gens` for degrees `0..=dmax`.
fn graded_ranks(
    gens: &[&Generator],
    basis: &[&Generator],
    dmax: usize,
    r: usize,
    opts: &CheckOptions,
) -> Result<Vec<DegreeRecord>> {
    let mut out = Vec::with_capacity(dmax + 1);
    for d in 0..=dmax {
        let rows = monomial_count(d, r);
        let ncols = column_count(gens, d, r);
        guard(d, rows, ncols, opts)?;
        let index = RowIndex::new(d, r);
        let (cols, _) = degree_columns(gens, d, r, &index)?;
        let a = IntMatrix::from_columns(index.len(), &cols);
        out.push(DegreeRecord {
            degree: d,
            rows,
            cols: ncols,
            rank: checked_rank(&a, opts, d)?,
            predicted: column_count(basis, d, r),
        });
    }
    Ok(out)
}

struct Setup {
    l: usize,
    m: usize,
    r: usize,
    basis: Vec<Generator>,
}

fn setup(l: usize, m: usize) -> Result<Setup> {
    let basis = basis_candidates(l, m)?
        .iter()
        .map(|mu| generator(mu, l, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(Setup {
        l,
        m,
        r: 2 * l + m,
        basis,
    })
}

impl Setup {
    fn check_dmax(&self, dmax: usize) -> Result<()> {
        let needed = self.basis.iter().map(|g| g.degree).max().unwrap_or(0);
        if dmax < needed {
            return Err(Error::DegreeCutoff { dmax, needed });
        }
        Ok(())
    }

    fn report(&self, dmax: usize, convention: Option<SpanConvention>) -> GradedReport {
        GradedReport {
            ell: self.l,
            m: self.m,
            r: self.r,
            dmax,
            convention,
            basis: self.basis.iter().map(|g| g.mu.clone()).collect(),
            degrees: Vec::new(),
            spanning: Vec::new(),
        }
    }

    fn independence(&self, dmax: usize, opts: &CheckOptions) -> Result<Vec<DegreeRecord>> {
        let basis: Vec<&Generator> = self.basis.iter().collect();
        graded_ranks(&basis, &basis, dmax, self.r, opts)
    }

    fn spanning(
        &self,
        convention: SpanConvention,
        dmax: usize,
        opts: &CheckOptions,
    ) -> Result<Vec<SpanOutcome>> {
        let mut out = Vec::new();
        for mu in spanning_set(self.l, convention)? {
            let d = degree_of(&mu, self.l);
            let in_basis = self.basis.iter().any(|g| g.mu == mu);
            let mut outcome = SpanOutcome {
                mu: mu.clone(),
                degree: d,
                rows: 0,
                cols: 0,
                status: SpanStatus::InBasis,
            };
            if in_basis {
                out.push(outcome);
                continue;
            }
            if d > dmax {
                outcome.status = SpanStatus::AboveCutoff;
                out.push(outcome);
                continue;
            }
            let target = generator(&mu, self.l, self.m)?;
            let (rows, cols, status) = self.express(&target, opts)?;
            outcome.rows = rows;
            outcome.cols = cols;
            outcome.status = status;
            out.push(outcome);
        }
        Ok(out)
    }

    /// Solves `target = Σ_ν f_ν P(ν)` in the degree of `target`.
    fn express(
        &self,
        target: &Generator,
        opts: &CheckOptions,
    ) -> Result<(usize, usize, SpanStatus)> {
        let basis: Vec<&Generator> = self.basis.iter().collect();
        let d = target.degree;
        let rows = monomial_count(d, self.r);
        let ncols = column_count(&basis, d, self.r);
        guard(d, rows, ncols + 1, opts)?;
        let index = RowIndex::new(d, self.r);
        let (cols, labels) = degree_columns(&basis, d, self.r, &index)?;
        let b = index.column(&target.terms.iter().cloned().collect())?;
        let a = IntMatrix::from_columns(index.len(), &cols);
        let sol = solve(&a, &b);
        let status = match sol.witness {
            Some(x) => SpanStatus::Solvable {
                witness: x
                    .into_iter()
                    .zip(labels)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(coeff, (gi, shape))| WitnessTerm {
                        nu: basis[gi].mu.clone(),
                        shape,
                        coeff,
                    })
                    .collect(),
            },
            None => SpanStatus::Unsolvable {
                rank: sol.rank,
                rank_augmented: sol.rank_augmented,
            },
        };
        Ok((rows, ncols, status))
    }
}

/// Graded independence of `{P(μ) : μ ∈ P^ℓ(Ω_m)}` over `Λ_r` up to `dmax`.
pub fn independence_check(
    l: usize,
    m: usize,
    dmax: usize,
    opts: &CheckOptions,
) -> Result<GradedReport> {
    let s = setup(l, m)?;
    s.check_dmax(dmax)?;
    let mut report = s.report(dmax, None);
    report.degrees = s.independence(dmax, opts)?;
    Ok(report)
}

/// Tries to write each `P(μ)` of the spanning set outside the basis as a
/// `Λ_r`-combination of the basis, for `d_μ ≤ dmax`.
pub fn spanning_check(
    l: usize,
    m: usize,
    convention: SpanConvention,
    dmax: usize,
    opts: &CheckOptions,
) -> Result<GradedReport> {
    let s = setup(l, m)?;
    let mut report = s.report(dmax, Some(convention));
    report.spanning = s.spanning(convention, dmax, opts)?;
    Ok(report)
}

/// Independence, spanning, rank count and the per-degree comparison of
/// all generators with the free prediction, kept as separate verdicts.
pub fn conjecture_report(
    l: usize,
    m: usize,
    dmax: usize,
    convention: SpanConvention,
    opts: &CheckOptions,
) -> Result<ConjectureReport> {
    let s = setup(l, m)?;
    s.check_dmax(dmax)?;
    let mut graded = s.report(dmax, Some(convention));
    graded.degrees = s.independence(dmax, opts)?;
    graded.spanning = s.spanning(convention, dmax, opts)?;

    let extra = spanning_set(l, convention)?
        .into_iter()
        .filter(|mu| !s.basis.iter().any(|g| &g.mu == mu))
        .map(|mu| generator(&mu, l, m))
        .collect::<Result<Vec<_>>>()?;
    let basis: Vec<&Generator> = s.basis.iter().collect();
    let all: Vec<&Generator> = s.basis.iter().chain(&extra).collect();
    let hilbert = graded_ranks(&all, &basis, dmax, s.r, opts)?;

    let basis_count = s.basis.len();
    let b = ballot(l as i64, m as i64 - 1)?;
    Ok(ConjectureReport {
        independence: graded.independent(),
        spanning: graded.spans(),
        rank_count_match: BigInt::from(basis_count) == b,
        hilbert_match: hilbert.iter().all(|rec| rec.rank == rec.predicted),
        graded,
        hilbert,
        basis_count,
        ballot: b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            basis_candidates(1, 3).unwrap(),
            vec![p(&[3]), p(&[2]), p(&[1])]
        );
        assert_eq!(
            basis_candidates(2, 1).unwrap(),
            vec![p(&[2, 2]), p(&[1, 1])]
        );
        assert_eq!(basis_candidates(2, 2).unwrap().len(), 5);
        assert!(basis_candidates(2, 0).is_err());
        assert_eq!(default_dmax(2, 1).unwrap(), 2 + 5);
    }

    #[test]
    fn basis_count_is_ballot() {
        for l in 1..=4 {
            for m in 1..=4 {
                let n = basis_candidates(l, m).unwrap().len();
                assert_eq!(BigInt::from(n), ballot(l as i64, m as i64 - 1).unwrap());
            }
        }
    }

    #[test]
    fn monomial_rows() {
        let idx = RowIndex::new(2, 3);
        assert_eq!(idx.len(), 6);
        assert_eq!(idx.len(), monomial_count(2, 3));
        assert_eq!(monomial_count(0, 4), 1);
    }

    #[test]
    fn l1_m2_degree1() {
        let rep = independence_check(1, 2, 1, &opts()).unwrap();
        let d1 = &rep.degrees[1];
        assert_eq!((d1.cols, d1.rank, d1.predicted), (2, 2, 2));
        assert!(rep.independent());
    }

    #[test]
    fn l1_m1_trivial() {
        let rep = conjecture_report(1, 1, 5, SpanConvention::default_for(1, 1), &opts()).unwrap();
        assert!(rep.independence && rep.spanning && rep.rank_count_match && rep.hilbert_match);
        assert!(rep
            .graded
            .spanning
            .iter()
            .all(|o| o.status == SpanStatus::InBasis));
    }

    #[test]
    fn l2_m1_independent_to_6() {
        let rep = independence_check(2, 1, 6, &opts()).unwrap();
        assert_eq!(rep.degrees.len(), 7);
        assert!(rep.independent());
        for rec in &rep.degrees {
            assert_eq!(rec.cols, rec.predicted);
        }
    }

    #[test]
    fn l2_m1_spanning_of_21() {
        for conv in [SpanConvention::Literal, SpanConvention::default_for(2, 1)] {
            let rep = spanning_check(2, 1, conv, 7, &opts()).unwrap();
            let o = rep.spanning.iter().find(|o| o.mu == p(&[2, 1])).unwrap();
            assert_eq!(o.degree, 1);
            assert_eq!(
                o.status,
                SpanStatus::Unsolvable {
                    rank: 1,
                    rank_augmented: 2
                }
            );
            let o = rep.spanning.iter().find(|o| o.mu == p(&[2, 2])).unwrap();
            assert_eq!(o.status, SpanStatus::InBasis);
        }
    }

    #[test]
    fn witness_reproduces_target() {
        // 3·m_(1)·P((2)) − m_(2)·P((1)) for ℓ=1, m=2, r=4.
        let r = 4;
        let s = setup(1, 2).unwrap();
        let one = &s.basis.iter().find(|g| g.mu == p(&[1])).unwrap();
        let two = &s.basis.iter().find(|g| g.mu == p(&[2])).unwrap();
        let mut poly = shape_times(&[1], two, r).unwrap();
        for v in poly.values_mut() {
            *v *= 3;
        }
        for (e, c) in shape_times(&[2], one, r).unwrap() {
            *poly.entry(e).or_insert(0) -= c;
        }
        poly.retain(|_, v| *v != 0);
        let target = Generator {
            mu: p(&[9]),
            degree: 2,
            terms: poly.into_iter().collect(),
        };
        let (rows, cols, status) = s.express(&target, &opts()).unwrap();
        assert_eq!((rows, cols), (10, 2 + 1));
        let SpanStatus::Solvable { witness } = status else {
            panic!("{status:?}");
        };
        let q = |v: i64| BigRational::from_integer(v.into());
        assert_eq!(
            witness,
            vec![
                WitnessTerm {
                    nu: p(&[2]),
                    shape: vec![1],
                    coeff: q(3)
                },
                WitnessTerm {
                    nu: p(&[1]),
                    shape: vec![2],
                    coeff: q(-1)
                },
            ]
        );
    }

    #[test]
    fn bounded_spanning_fails_for_l1() {
        // x1+x2 is not symmetric in x1,x2,x3, so it is not in Λ_3·1.
        let rep = spanning_check(1, 1, SpanConvention::Bounded(2), 4, &opts()).unwrap();
        let o = rep.spanning.iter().find(|o| o.mu == p(&[2])).unwrap();
        assert_eq!(o.solvable(), Some(false));
    }

    #[test]
    fn cell_budget_guard() {
        let tight = CheckOptions {
            cell_budget: 10,
            cross_check: false,
        };
        let err = independence_check(2, 1, 6, &tight).unwrap_err();
        assert!(matches!(err, Error::CellBudget { .. }));
    }

    #[test]
    fn dmax_below_basis_degree() {
        let err = independence_check(2, 1, 1, &opts()).unwrap_err();
        assert_eq!(err, Error::DegreeCutoff { dmax: 1, needed: 2 });
    }
}
