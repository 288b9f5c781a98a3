//! Exact rank and linear solving for integer matrices.
//!
//! The fast path eliminates modulo word-sized primes. A rank found modulo
//! `p` is a lower bound for the rank over `ℚ`; it is exact when it reaches
//! `min(rows, cols)`. Otherwise the kernel of the reduced form is lifted
//! by Chinese remaindering and rational reconstruction, and every lifted
//! vector is checked against the original matrix in exact integer
//! arithmetic before the rank is accepted. If lifting does not settle,
//! the answer falls back to Gauss–Jordan elimination over `ℚ`.
//!
//! `rank_bareiss` and `rank_rational` are independent exact methods used
//! as cross-checks.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds from equal-length rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            m.row_mut(i).copy_from_slice(row);
        }
        m
    }

    /// Builds from equal-length columns.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [i64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `[A | b]`.
    pub fn augmented(&self, b: &[i64]) -> IntMatrix {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut m = IntMatrix::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            m.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            m.set(i, self.cols, bi);
        }
        m
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes below `2^31`, descending. Products of two residues fit in `u64`.
fn word_primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().filter(|&n| is_prime(n))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Reduced row echelon form modulo `p`.
struct ModRref {
    pivots: Vec<usize>,
    /// Original index of the row that supplied each pivot.
    pivot_rows: Vec<usize>,
    reduced: Vec<Vec<u64>>,
}

fn rref_mod(a: &IntMatrix, subset: Option<&[usize]>, p: u64) -> ModRref {
    let mut order: Vec<usize> = match subset {
        Some(s) => s.to_vec(),
        None => (0..a.rows).collect(),
    };
    let mut work: Vec<Vec<u64>> = order
        .iter()
        .map(|&i| a.row(i).iter().map(|&v| residue(v, p)).collect())
        .collect();
    let cols = a.cols;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == work.len() {
            break;
        }
        let Some(i) = (rank..work.len()).find(|&i| work[i][c] != 0) else {
            continue;
        };
        work.swap(rank, i);
        order.swap(rank, i);
        let inv = inv_mod(work[rank][c], p);
        for x in &mut work[rank][c..] {
            *x = *x * inv % p;
        }
        let (head, tail) = work.split_at_mut(rank);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x + nf * y) % p;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    work.truncate(rank);
    order.truncate(rank);
    ModRref {
        pivots,
        pivot_rows: order,
        reduced: work,
    }
}

/// Rank modulo the prime `p`; a lower bound for the rank over `ℚ`.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    assert!(
        p < (1 << 31) && is_prime(p),
        "modulus must be a prime below 2^31"
    );
    rref_mod(a, None, p).pivots.len()
}

/// Fraction-free (Bareiss) elimination over `ℤ`.
pub fn rank_bareiss(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|i| a.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(i) = (rank..a.rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, i);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..a.cols {
                let v = &pivot[c] * &row[j] - &f * &pivot[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = head[rank][c].clone();
        rank += 1;
    }
    rank
}

fn rref_rational(a: &IntMatrix) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let mut m: Vec<Vec<BigRational>> = (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(i) = (rank..a.rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, i);
        let inv = m[rank][c].recip();
        for x in &mut m[rank][c..] {
            *x *= &inv;
        }
        let (head, tail) = m.split_at_mut(rank);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    m.truncate(rank);
    (pivots, m)
}

/// Row echelon form over `ℚ`. Rank ignores row scaling, so each row is
/// kept as a primitive integer vector: after every update it is divided
/// by the gcd of its entries.
pub fn rank_rational(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|i| a.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(i) = (rank..a.rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, i);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot[c].gcd(&row[c]);
            let fp = &row[c] / &g;
            let fr = &pivot[c] / &g;
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = &fr * &*x - &fp * y;
            }
            let content = row[c + 1..]
                .iter()
                .fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if !content.is_zero() && !content.is_one() {
                for x in &mut row[c + 1..] {
                    *x /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMethod {
    /// Settled modulo word primes; `primes` counts the moduli used.
    Modular { primes: usize },
    /// Settled by elimination over `ℚ`.
    Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub method: RankMethod,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// Rank of `A`.
    pub rank: usize,
    /// Rank of `[A | b]`.
    pub rank_augmented: usize,
    /// Some `x` with `A x = b`, verified exactly.
    pub witness: Option<Vec<BigRational>>,
    pub method: RankMethod,
}

impl SolveReport {
    pub fn solvable(&self) -> bool {
        self.rank == self.rank_augmented
    }
}

/// Exact rank of `a` over `ℚ`.
pub fn exact_rank(a: &IntMatrix) -> RankCertificate {
    let out = analyze(a, None);
    RankCertificate {
        rank: out.rank,
        method: out.method,
    }
}

/// Decides whether `A x = b` has a rational solution and returns one.
pub fn solve(a: &IntMatrix, b: &[i64]) -> SolveReport {
    let aug = a.augmented(b);
    let out = analyze(&aug, Some(a.cols));
    SolveReport {
        rank: out.rank,
        rank_augmented: out.rank_augmented,
        witness: out.witness,
        method: out.method,
    }
}

struct Analysis {
    rank: usize,
    rank_augmented: usize,
    witness: Option<Vec<BigRational>>,
    method: RankMethod,
}

const MAX_PRIMES: usize = 256;

/// `rhs`: when set, the last column of `m` is a right-hand side and the
/// first `rhs` columns form `A`.
fn analyze(m: &IntMatrix, rhs: Option<usize>) -> Analysis {
    let a_cols = rhs.unwrap_or(m.cols);
    let mut primes = word_primes();
    let p0 = primes.next().expect("primes");
    let first = rref_mod(m, None, p0);
    let rank_a = first.pivots.iter().filter(|&&c| c < a_cols).count();
    let b_pivot = rhs.is_some() && first.pivots.last() == Some(&a_cols);
    let rank_certified = rank_a == m.rows.min(a_cols);
    let want_solution = rhs.is_some() && !b_pivot;
    if rank_certified && !want_solution {
        return Analysis {
            rank: rank_a,
            rank_augmented: rank_a + b_pivot as usize,
            witness: None,
            method: RankMethod::Modular { primes: 1 },
        };
    }
    if let Some(found) = lift(m, a_cols, rhs.is_some(), first, p0, primes, rank_certified) {
        return found;
    }
    let (pivots, reduced) = rref_rational(m);
    let rank = pivots.iter().filter(|&&c| c < a_cols).count();
    let b_pivot = rhs.is_some() && pivots.last() == Some(&a_cols);
    let witness = (rhs.is_some() && !b_pivot).then(|| {
        let mut x = vec![BigRational::zero(); a_cols];
        for (row, &c) in reduced.iter().zip(&pivots) {
            x[c] = row[a_cols].clone();
        }
        x
    });
    Analysis {
        rank,
        rank_augmented: rank + b_pivot as usize,
        witness,
        method: RankMethod::Rational,
    }
}

/// Residues of selected reduced-form entries, combined across primes.
struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    fn new(entries: &[u64], p: u64) -> Self {
        Crt {
            modulus: BigInt::from(p),
            values: entries.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    fn push(&mut self, entries: &[u64], p: u64) {
        let m_mod_p = (&self.modulus % p).try_into().unwrap_or(0u64);
        let inv = inv_mod(m_mod_p, p);
        for (x, &y) in self.values.iter_mut().zip(entries) {
            let x_mod_p: u64 = (&*x % p).try_into().unwrap_or(0);
            let delta = (y + p - x_mod_p) % p * inv % p;
            *x += &self.modulus * delta;
        }
        self.modulus *= p;
    }

    /// Cheap pre-test: a few spread-out entries reconstruct.
    fn sampled(&self) -> bool {
        let n = self.values.len();
        (0..4).all(|k| {
            n == 0
                || rational_reconstruction(&self.values[k * (n - 1) / 3], &self.modulus).is_some()
        })
    }

    fn reconstruct(&self) -> Option<Vec<BigRational>> {
        self.values
            .iter()
            .map(|v| rational_reconstruction(v, &self.modulus))
            .collect()
    }
}

/// The fraction `n/d ≡ u (mod m)` with `|n|, d ≤ √(m/2)`, if one exists.
fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Entries of the reduced form that determine the kernel basis and the
/// particular solution: pivot rows against every non-pivot column.
fn targets(pivots: &[usize], cols: usize) -> Vec<usize> {
    (0..cols)
        .filter(|c| pivots.binary_search(c).is_err())
        .collect()
}

fn gather(r: &ModRref, free: &[usize]) -> Vec<u64> {
    r.reduced
        .iter()
        .flat_map(|row| free.iter().map(move |&c| row[c]))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn lift(
    m: &IntMatrix,
    a_cols: usize,
    has_rhs: bool,
    first: ModRref,
    p0: u64,
    primes: impl Iterator<Item = u64>,
    rank_certified: bool,
) -> Option<Analysis> {
    let rows_used = first.pivot_rows.clone();
    let mut pivots = first.pivots.clone();
    let mut free = targets(&pivots, m.cols);
    let mut crt = Crt::new(&gather(&first, &free), p0);
    let mut used = 1;
    let mut next_attempt = 1;
    let mut primes = primes;
    loop {
        if used >= next_attempt {
            next_attempt = (used * 3 / 2).max(used + 1);
            if let Some(values) = crt.sampled().then(|| crt.reconstruct()).flatten() {
                if let Some(found) = certify(
                    m,
                    a_cols,
                    has_rhs,
                    &pivots,
                    &free,
                    &values,
                    rank_certified,
                    used,
                ) {
                    return Some(found);
                }
            }
        }
        if used >= MAX_PRIMES {
            return None;
        }
        let p = primes.next()?;
        let r = rref_mod(m, Some(&rows_used), p);
        used += 1;
        if r.pivots == pivots {
            crt.push(&gather(&r, &free), p);
            continue;
        }
        // A prime disagreeing with the reference: keep whichever form has
        // the larger rank, then the earlier pivots.
        let better =
            r.pivots.len() > pivots.len() || (r.pivots.len() == pivots.len() && r.pivots < pivots);
        if better {
            pivots = r.pivots.clone();
            free = targets(&pivots, m.cols);
            crt = Crt::new(&gather(&r, &free), p);
        }
    }
}

/// Rebuilds kernel vectors and the particular solution from reconstructed
/// reduced-form entries and checks them against the full matrix.
#[allow(clippy::too_many_arguments)]
fn certify(
    m: &IntMatrix,
    a_cols: usize,
    has_rhs: bool,
    pivots: &[usize],
    free: &[usize],
    values: &[BigRational],
    rank_certified: bool,
    primes: usize,
) -> Option<Analysis> {
    let rank = pivots.iter().filter(|&&c| c < a_cols).count();
    let b_pivot = has_rhs && pivots.last() == Some(&a_cols);
    let entry = |i: usize, f: usize| &values[i * free.len() + f];
    if !rank_certified {
        for (fi, &f) in free.iter().enumerate() {
            if f >= a_cols {
                continue;
            }
            // x_f = 1, x_{pivot i} = −R[i][f].
            let mut support: Vec<(usize, BigRational)> = vec![(f, BigRational::one())];
            for (i, &c) in pivots.iter().enumerate() {
                if c < a_cols {
                    support.push((c, -entry(i, fi)));
                }
            }
            if !satisfies(m, &support, None) {
                return None;
            }
        }
    }
    let witness = if has_rhs && !b_pivot {
        let bi = free.len() - 1;
        debug_assert_eq!(free[bi], a_cols);
        let mut x = vec![BigRational::zero(); a_cols];
        let mut support = Vec::new();
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = entry(i, bi).clone();
            support.push((c, x[c].clone()));
        }
        if !satisfies(m, &support, Some(a_cols)) {
            return None;
        }
        Some(x)
    } else {
        None
    };
    Some(Analysis {
        rank,
        rank_augmented: rank + b_pivot as usize,
        witness,
        method: RankMethod::Modular { primes },
    })
}

/// Checks `A x = 0`, or `A x = b` when `rhs` names the column of `b`,
/// for `x` given by its nonzero entries.
fn satisfies(m: &IntMatrix, support: &[(usize, BigRational)], rhs: Option<usize>) -> bool {
    let denom = support
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let scaled: Vec<(usize, BigInt)> = support
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&denom / v.denom())))
        .collect();
    (0..m.rows).all(|i| {
        let row = m.row(i);
        let mut acc = BigInt::zero();
        for (c, w) in &scaled {
            let a = row[*c];
            if a != 0 {
                acc += w * a;
            }
        }
        match rhs {
            Some(b) => acc == &denom * row[b],
            None => acc.is_zero(),
        }
    })
}
