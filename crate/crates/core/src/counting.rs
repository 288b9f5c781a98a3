//! Catalan and ballot numbers, the `e_{ℓ,r}` count tables and the two
//! binomial identities, all in exact integer arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Partition, Result};

/// `binomial(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `c_n = binomial(2n, n) − binomial(2n, n−1)`.
pub fn catalan(n: u32) -> BigInt {
    let n = n as i64;
    binomial(2 * n, n) - binomial(2 * n, n - 1)
}

/// `b_{ℓ,m} = binomial(2ℓ+m, ℓ) − binomial(2ℓ+m, ℓ−1)`, with `b_{ℓ,−1} = 0`.
pub fn ballot(l: i64, m: i64) -> Result<BigInt> {
    if l < 0 || m < -1 {
        return Err(Error::BallotIndex { l, m });
    }
    if m == -1 {
        return Ok(BigInt::zero());
    }
    let top = 2 * l + m;
    Ok(binomial(top, l) - binomial(top, l - 1))
}

fn ballot_nonneg(l: i64, m: i64) -> BigInt {
    if l < 0 {
        return BigInt::zero();
    }
    ballot(l, m).unwrap_or_default()
}

/// `#P^k_sq`: one for `k = 1`, else `binomial(2k−3, k−1)`.
pub fn count_square_roots(k: usize) -> BigInt {
    match k {
        0 => BigInt::zero(),
        1 => BigInt::one(),
        _ => binomial(2 * k as i64 - 3, k as i64 - 1),
    }
}

/// What an [`ETable`] counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ETableContext {
    /// Orbit of a square root of size `k`; `seeds` is `#P^k(λ)`, which is
    /// 1 for a `τ_k`-fixed root and 2 otherwise.
    Square {
        root: Partition,
        k: usize,
        seeds: u32,
    },
    /// Orbit of `Ω_m`.
    Omega { m: usize },
}

/// `e[ℓ][r]`: the number of level-`ℓ` orbit elements with last part `≥ r`.
///
/// Rows start at the first level of the context (`k` or 1); `r` starts at
/// one. Entries outside the stored range are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ETable {
    context: ETableContext,
    first_level: usize,
    rows: Vec<Vec<BigInt>>,
}

impl ETable {
    pub fn context(&self) -> &ETableContext {
        &self.context
    }

    pub fn first_level(&self) -> usize {
        self.first_level
    }

    pub fn last_level(&self) -> usize {
        self.first_level + self.rows.len() - 1
    }

    /// `e[ℓ][r]`; `r = 0` reads as `r = 1`.
    pub fn get(&self, l: usize, r: usize) -> BigInt {
        if l < self.first_level || l > self.last_level() {
            return BigInt::zero();
        }
        let row = &self.rows[l - self.first_level];
        let r = r.max(1);
        row.get(r - 1).cloned().unwrap_or_default()
    }

    /// Largest `r` that can be nonzero on row `l`.
    pub fn max_r(&self, l: usize) -> usize {
        match self.context {
            ETableContext::Square { k, .. } => l + 1 - k,
            ETableContext::Omega { m } => l + m - 1,
        }
    }

    /// Nonzero entries sorted by `(ℓ, r)`.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.push((self.first_level + i, j + 1, v.clone()));
                }
            }
        }
        out
    }

    /// The closed form for `e[ℓ][r]`.
    pub fn closed_form(&self, l: usize, r: usize) -> BigInt {
        let (l, r) = (l as i64, r.max(1) as i64);
        match &self.context {
            ETableContext::Square { k, seeds, .. } => {
                if r > l - *k as i64 + 1 {
                    return BigInt::zero();
                }
                ballot_nonneg(l - *k as i64 - r + 1, r) * *seeds
            }
            ETableContext::Omega { m } => {
                let m = *m as i64;
                if r > l + m - 1 {
                    BigInt::zero()
                } else if r >= l {
                    binomial(m + 2 * l - r - 1, l)
                } else {
                    (0..=r)
                        .map(|j| {
                            let term = binomial(r - j, j) * ballot_nonneg(l - j, m - 1);
                            if j % 2 == 0 {
                                term
                            } else {
                                -term
                            }
                        })
                        .sum()
                }
            }
        }
    }

    /// Cells where the recurrence and the closed form disagree, as
    /// `(ℓ, r, table value, closed form)`.
    pub fn closed_form_mismatches(&self) -> Vec<(usize, usize, BigInt, BigInt)> {
        let mut out = Vec::new();
        for l in self.first_level..=self.last_level() {
            for r in 1..=self.max_r(l) + 1 {
                let (got, want) = (self.get(l, r), self.closed_form(l, r));
                if got != want {
                    out.push((l, r, got, want));
                }
            }
        }
        out
    }
}

/// Fills the table by `e[ℓ][r] = e[ℓ−1][r−1] + e[ℓ][r+1]`, sweeping `r`
/// downward from the boundary value on each row.
fn fill_rows(
    first: Vec<BigInt>,
    levels: usize,
    width: impl Fn(usize) -> usize,
    boundary: BigInt,
) -> Vec<Vec<BigInt>> {
    let mut rows = vec![first];
    for i in 1..levels {
        let w = width(i);
        let prev = &rows[i - 1];
        let prev_at = |r: usize| -> BigInt {
            let r = r.max(1);
            prev.get(r - 1).cloned().unwrap_or_default()
        };
        let mut row = vec![BigInt::zero(); w];
        row[w - 1] = boundary.clone();
        for r in (1..w).rev() {
            row[r - 1] = prev_at(r - 1) + &row[r];
        }
        rows.push(row);
    }
    rows
}

/// `e_{ℓ,r}(λ)` for `k ≤ ℓ ≤ lmax`.
pub fn e_table_square(lam: &Partition, k: usize, lmax: usize) -> Result<ETable> {
    if !lam.is_square(k) {
        return Err(Error::NotSquare {
            partition: alloc::format!("{lam}"),
            k,
        });
    }
    if lmax < k {
        return Err(Error::LevelBelowRoot { level: lmax, k });
    }
    let seeds: u32 = if lam.is_tau_fixed(k as u32)? { 1 } else { 2 };
    // Row ℓ = k holds only r = 1, and every later row ends at r = ℓ−k+1
    // with the value #P^k(λ).
    let rows = fill_rows(
        vec![BigInt::from(seeds)],
        lmax - k + 1,
        |i| i + 1,
        BigInt::from(seeds),
    );
    Ok(ETable {
        context: ETableContext::Square {
            root: lam.clone(),
            k,
            seeds,
        },
        first_level: k,
        rows,
    })
}

/// `e_{ℓ,s}(Ω_m)` for `1 ≤ ℓ ≤ lmax`.
pub fn e_table_omega(m: usize, lmax: usize) -> Result<ETable> {
    if m < 1 {
        return Err(Error::NonPositive { what: "m" });
    }
    if lmax < 1 {
        return Err(Error::NonPositive { what: "lmax" });
    }
    let first = (1..=m).map(|s| BigInt::from(m - s + 1)).collect();
    let rows = fill_rows(first, lmax, |i| i + m, BigInt::one());
    Ok(ETable {
        context: ETableContext::Omega { m },
        first_level: 1,
        rows,
    })
}

/// One instance of an identity with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityInstance {
    pub params: Vec<i64>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityInstance {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub instances: Vec<IdentityInstance>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.instances.iter().all(IdentityInstance::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityInstance> {
        self.instances.iter().filter(|i| !i.holds())
    }
}

/// `ℓ·c_{ℓ+1} = Σ_{i=1}^{ℓ} (ℓ−i+2)·c_i·c_{ℓ−i+1}` for `1 ≤ ℓ ≤ lmax`.
pub fn verify_catalan_convolution(lmax: u32) -> IdentityReport {
    let instances = (1..=lmax)
        .map(|l| {
            let lhs = catalan(l + 1) * l;
            let rhs = (1..=l)
                .map(|i| catalan(i) * catalan(l - i + 1) * (l - i + 2))
                .sum();
            IdentityInstance {
                params: vec![l as i64],
                lhs,
                rhs,
            }
        })
        .collect();
    IdentityReport {
        name: "catalan-convolution",
        instances,
    }
}

/// `Σ_{j≥0} (−1)^j binomial(ℓ−j, j) b_{ℓ−j,m} = binomial(m+ℓ, ℓ)` over
/// `0 ≤ ℓ ≤ lmax`, `0 ≤ m ≤ mmax`.
pub fn verify_alternating_identity(lmax: u32, mmax: u32) -> IdentityReport {
    let mut instances = Vec::new();
    for l in 0..=lmax as i64 {
        for m in 0..=mmax as i64 {
            let lhs = (0..=l / 2)
                .map(|j| {
                    let term = binomial(l - j, j) * ballot_nonneg(l - j, m);
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            instances.push(IdentityInstance {
                params: vec![l, m],
                lhs,
                rhs: binomial(m + l, l),
            });
        }
    }
    IdentityReport {
        name: "alternating-ballot",
        instances,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Lattice paths of n up-steps and n down-steps that never dip below
    /// the axis, counted one by one.
    fn dyck_brute(n: u32) -> u64 {
        fn walk(up: u32, down: u32, height: u32) -> u64 {
            if up == 0 && down == 0 {
                return 1;
            }
            let mut total = 0;
            if up > 0 {
                total += walk(up - 1, down, height + 1);
            }
            if down > 0 && height > 0 {
                total += walk(up, down - 1, height - 1);
            }
            total
        }
        walk(n, n, 0)
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(4), big(14));
    }

    #[test]
    fn catalan_matches_dyck_paths_and_segner() {
        for n in 0..=10 {
            assert_eq!(catalan(n), BigInt::from(dyck_brute(n)), "n={n}");
        }
        for n in 1..=20u32 {
            let segner: BigInt = (0..n).map(|i| catalan(i) * catalan(n - 1 - i)).sum();
            assert_eq!(catalan(n), segner, "n={n}");
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, -1), big(0));
        assert_eq!(binomial(5, 6), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(
            binomial(60, 30),
            "118264581564861424".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot(2, 1).unwrap(), big(5));
        for l in 0..=12 {
            assert_eq!(ballot(l, 0).unwrap(), catalan(l as u32));
        }
        for m in 0..=10 {
            assert_eq!(ballot(0, m).unwrap(), big(1));
        }
        for l in 0..=10 {
            assert_eq!(ballot(l, -1).unwrap(), big(0));
        }
        assert!(ballot(-1, 0).is_err());
        assert!(ballot(1, -2).is_err());
    }

    #[test]
    fn ballot_recurrence() {
        for l in 1..=12 {
            for m in 0..=12 {
                assert_eq!(
                    ballot(l, m).unwrap(),
                    ballot(l, m - 1).unwrap() + ballot(l - 1, m + 1).unwrap(),
                    "ℓ={l} m={m}"
                );
            }
        }
    }

    #[test]
    fn square_table_examples() {
        let t = e_table_square(&p(&[1]), 1, 3).unwrap();
        assert_eq!(t.get(3, 1), big(5));
        assert_eq!(t.get(1, 1), big(1));
        assert_eq!(t.get(1, 2), big(0));
        let t = e_table_square(&p(&[3, 1, 1]), 3, 5).unwrap();
        assert_eq!(t.get(3, 1), big(2));
        assert_eq!(t.get(3, 2), big(0));
        assert_eq!(t.get(5, 1), big(10));
        assert!(t.closed_form_mismatches().is_empty());
        assert!(e_table_square(&p(&[2, 2]), 2, 4).is_err());
        assert!(e_table_square(&p(&[2, 1]), 2, 1).is_err());
    }

    #[test]
    fn omega_table_examples() {
        let t = e_table_omega(2, 2).unwrap();
        assert_eq!(t.get(2, 2), big(3));
        assert_eq!(t.get(2, 1), big(5));
        for m in 1..=6usize {
            let t = e_table_omega(m, 1).unwrap();
            for s in 1..=m + 2 {
                let want = if s <= m { (m - s + 1) as i64 } else { 0 };
                assert_eq!(t.get(1, s), big(want));
            }
        }
        let t = e_table_omega(3, 4).unwrap();
        assert_eq!(t.get(4, 1), big(90));
        assert!(e_table_omega(0, 3).is_err());
    }

    #[test]
    fn tables_agree_with_closed_forms_and_are_monotone() {
        for k in 1..=4usize {
            for lam in crate::partitions::enumerate_box(k, k as u32) {
                if !lam.is_square(k) {
                    continue;
                }
                let t = e_table_square(&lam, k, k + 8).unwrap();
                assert!(t.closed_form_mismatches().is_empty(), "{lam}");
                for l in k..=k + 8 {
                    assert_eq!(t.get(l, l - k + 2), big(0));
                    for r in 1..=t.max_r(l) {
                        assert!(t.get(l, r) >= t.get(l, r + 1));
                    }
                }
            }
        }
        for m in 1..=6 {
            let t = e_table_omega(m, 9).unwrap();
            assert!(t.closed_form_mismatches().is_empty(), "m={m}");
            for l in 1..=9 {
                assert_eq!(t.get(l, 1), ballot(l as i64, m as i64 - 1).unwrap());
                assert_eq!(t.get(l, l + m - 1), big(1));
                assert_eq!(t.get(l, l + m), big(0));
            }
        }
    }

    #[test]
    fn nonzero_entries_sorted() {
        let t = e_table_omega(2, 3).unwrap();
        let e = t.nonzero_entries();
        assert!(e.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        assert_eq!(e[0], (1, 1, big(2)));
    }

    #[test]
    fn convolution_examples() {
        let r = verify_catalan_convolution(2);
        assert_eq!(r.instances[0].lhs, big(2));
        assert_eq!(r.instances[0].rhs, big(2));
        assert_eq!(r.instances[1].lhs, big(10));
        assert_eq!(r.instances[1].rhs, big(10));
        assert!(verify_catalan_convolution(12).holds());
    }

    #[test]
    fn alternating_examples() {
        let r = verify_alternating_identity(2, 1);
        let inst = r.instances.iter().find(|i| i.params == [2, 1]).unwrap();
        assert_eq!(inst.lhs, big(3));
        assert_eq!(inst.rhs, big(3));
        for i in r.instances.iter().filter(|i| i.params[0] == 0) {
            assert_eq!(i.lhs, big(1));
        }
        assert!(verify_alternating_identity(10, 6).holds());
    }

    #[test]
    fn square_root_counts() {
        assert_eq!(count_square_roots(1), big(1));
        assert_eq!(count_square_roots(3), big(3));
        assert_eq!(count_square_roots(5), big(35));
        for k in 1..=8usize {
            let direct = crate::partitions::enumerate_box(k, k as u32)
                .iter()
                .filter(|lam| lam.is_square(k))
                .count();
            assert_eq!(count_square_roots(k), BigInt::from(direct), "k={k}");
        }
    }
}
