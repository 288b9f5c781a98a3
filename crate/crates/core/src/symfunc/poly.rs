use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Partition, Result};

/// Exponent vector over `x_1, …, x_r`.
///
/// Ordered graded-lex: total degree first, then exponents
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial(e), BigRational::one());
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in graded descending-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree if every term has the same degree; `None` for zero or
    /// mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn integer_terms(&self) -> Option<Vec<(&Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| c.is_integer().then(|| (m, c.to_integer())))
            .collect()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let negative = *c < BigRational::zero();
            if n > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let mag = if negative { -c } else { c.clone() };
            let vars: Vec<(usize, u32)> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (i, e))
                    .collect();
            if !mag.is_one() || vars.is_empty() {
                write!(f, "{mag}")?;
                if !vars.is_empty() {
                    f.write_str("*")?;
                }
            }
            for (j, (i, e)) in vars.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{}", i + 1)?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// `P_m(x_a, x_b) = Σ_{j<m} x_a^{m−j−1} x_b^j`, with `P_0 = 1`.
pub fn pm_poly(m: u32, a: usize, b: usize, r: usize) -> Result<Poly> {
    if a == b || a >= r || b >= r {
        return Err(Error::VariableIndex { a, b, r });
    }
    if m == 0 {
        return Ok(Poly::one(r));
    }
    let mut p = Poly::zero(r);
    for j in 0..m {
        let mut e = vec![0; r];
        e[a] = m - j - 1;
        e[b] = j;
        p.add_term(Monomial(e), BigRational::one());
    }
    Ok(p)
}

/// Distinct rearrangements of `values`, descending-lex.
pub(crate) fn multiset_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = values.to_vec();
    cur.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![cur.clone()];
    // Step to the lexicographic predecessor until the ascending arrangement.
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] > cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] < cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `comp(μ)`: all distinct orderings of the parts of `μ`, descending-lex.
pub fn compositions_of(mu: &Partition, slots: usize) -> Result<Vec<Vec<u32>>> {
    if mu.len() != slots {
        return Err(Error::PartCountMismatch {
            expected: slots,
            found: mu.len(),
        });
    }
    Ok(multiset_permutations(mu.parts()))
}

/// `P(μ) = Σ_{μ'∈comp(μ)} P_{μ'_1}(x_1,x_2) ⋯ P_{μ'_ℓ}(x_{2ℓ−1},x_{2ℓ})` in
/// `r = 2ℓ+m` variables.
pub fn p_of_mu(mu: &Partition, l: usize, m: usize) -> Result<Poly> {
    let r = 2 * l + m;
    let mut total = Poly::zero(r);
    for comp in compositions_of(mu, l)? {
        let mut prod = Poly::one(r);
        for (i, &part) in comp.iter().enumerate() {
            prod = &prod * &pm_poly(part, 2 * i, 2 * i + 1, r)?;
        }
        total = &total + &prod;
    }
    Ok(total)
}

/// Monomial symmetric polynomial `m_shape` in `r` variables: the sum of
/// every distinct monomial obtained by permuting the exponents of
/// `x^shape`. An empty shape gives `1`.
pub fn monomial_symmetric(r: usize, shape: &[u32]) -> Result<Poly> {
    if shape.len() > r {
        return Err(Error::TooManyParts {
            parts: shape.len(),
            r,
        });
    }
    let mut padded = shape.to_vec();
    padded.resize(r, 0);
    let mut p = Poly::zero(r);
    for e in multiset_permutations(&padded) {
        p.add_term(Monomial(e), BigRational::one());
    }
    Ok(p)
}

/// Shapes indexing the monomial basis of the degree-`d` part of `Λ_r`.
pub fn symmetric_shapes(d: usize, r: usize) -> Vec<Vec<u32>> {
    crate::partitions::partitions_of(d, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn x(r: usize, i: usize) -> Poly {
        Poly::var(r, i - 1)
    }

    #[test]
    fn pm_examples() {
        assert_eq!(pm_poly(1, 0, 1, 4).unwrap(), Poly::one(4));
        assert_eq!(pm_poly(0, 0, 1, 4).unwrap(), Poly::one(4));
        assert_eq!(pm_poly(2, 0, 1, 4).unwrap(), &x(4, 1) + &x(4, 2));
        let want = &(&(&x(4, 1) * &x(4, 1)) + &(&x(4, 1) * &x(4, 2))) + &(&x(4, 2) * &x(4, 2));
        assert_eq!(pm_poly(3, 0, 1, 4).unwrap(), want);
        assert!(pm_poly(2, 1, 1, 4).is_err());
        assert!(pm_poly(2, 0, 4, 4).is_err());
    }

    #[test]
    fn pm_properties() {
        for m in 1..=7u32 {
            let a = pm_poly(m, 0, 2, 5).unwrap();
            assert_eq!(a.len(), m as usize);
            assert_eq!(a.homogeneous_degree(), Some(m as u64 - 1));
            assert_eq!(a, pm_poly(m, 2, 0, 5).unwrap());
        }
    }

    #[test]
    fn compositions_examples() {
        assert_eq!(
            compositions_of(&p(&[2, 1]), 2).unwrap(),
            vec![vec![2, 1], vec![1, 2]]
        );
        assert_eq!(compositions_of(&p(&[2, 2]), 2).unwrap(), vec![vec![2, 2]]);
        assert_eq!(
            compositions_of(&p(&[3, 1, 1]), 3).unwrap(),
            vec![vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]]
        );
        assert_eq!(compositions_of(&p(&[3, 2, 1]), 3).unwrap().len(), 6);
        assert!(compositions_of(&p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn p_of_mu_examples() {
        assert_eq!(p_of_mu(&p(&[1, 1]), 2, 1).unwrap(), Poly::one(5));
        let want = &(&x(5, 1) + &x(5, 2)) * &(&x(5, 3) + &x(5, 4));
        assert_eq!(p_of_mu(&p(&[2, 2]), 2, 1).unwrap(), want);
        let want = &(&(&x(5, 1) + &x(5, 2)) + &x(5, 3)) + &x(5, 4);
        assert_eq!(p_of_mu(&p(&[2, 1]), 2, 1).unwrap(), want);
        assert!(p_of_mu(&p(&[2, 1]), 3, 1).is_err());
    }

    #[test]
    fn monomial_symmetric_examples() {
        let want = &(&x(3, 1) + &x(3, 2)) + &x(3, 3);
        assert_eq!(monomial_symmetric(3, &[1]).unwrap(), want);
        let want = &(&(&x(2, 1) * &x(2, 1)) * &x(2, 2)) + &(&(&x(2, 1) * &x(2, 2)) * &x(2, 2));
        assert_eq!(monomial_symmetric(2, &[2, 1]).unwrap(), want);
        assert_eq!(symmetric_shapes(2, 4), vec![vec![2], vec![1, 1]]);
        assert_eq!(monomial_symmetric(3, &[]).unwrap(), Poly::one(3));
        assert!(monomial_symmetric(2, &[1, 1, 1]).is_err());
        assert_eq!(monomial_symmetric(6, &[4, 3, 2, 1]).unwrap().len(), 360);
    }

    #[test]
    fn zero_coefficients_dropped() {
        let a = &x(2, 1) + &x(2, 2);
        let b = &a - &x(2, 2);
        assert_eq!(b, x(2, 1));
        assert!((&a - &a).is_zero());
        let c = a.scale(&q(0));
        assert!(c.is_zero());
        assert_eq!(c.homogeneous_degree(), None);
    }

    #[test]
    fn display() {
        let a = &(&x(3, 1) * &x(3, 1)).scale(&q(2)) - &x(3, 3);
        assert_eq!(a.to_string(), "2*x1^2 - x3");
        assert_eq!(Poly::one(2).to_string(), "1");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }

    #[test]
    fn graded_order() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0]);
        assert!(a > b);
        let c = Monomial::new(vec![2, 0]);
        assert!(c > a);
    }
}
