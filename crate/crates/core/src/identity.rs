//! Closed forms and summation identities, evaluated in exact integers.
//!
//! Nothing in this module enumerates sequences, monomials or trees; it is the
//! formula side that [`crate::crosscheck`] compares the brute-force side
//! against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{param, Result};

/// Arbitrary-precision signed integer used for every count in the crate.
pub type ExactInt = BigInt;

/// Serde adapter writing an [`ExactInt`] as a decimal string.
///
/// Counts overflow 64 bits quickly and many JSON consumers truncate native
/// numbers, so every count crosses a serialization boundary as text.
pub mod decimal {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::ExactInt;

    pub fn serialize<S: Serializer>(value: &ExactInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<ExactInt, D::Error> {
        let text = String::deserialize(deserializer)?;
        let valid = {
            let digits = text.strip_prefix('-').unwrap_or(&text);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid {
            return Err(de::Error::custom(format!(
                "not a decimal integer: {text:?}"
            )));
        }
        ExactInt::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| de::Error::custom(format!("not a decimal integer: {text:?}")))
    }
}

/// `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(param(format!("binomial: n = {n} is negative")));
    }
    if k < 0 || k > n {
        return Ok(ExactInt::zero());
    }
    Ok(binom(n as u64, k as u64))
}

pub fn factorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(param(format!("factorial: n = {n} is negative")));
    }
    Ok(fact(n as u64))
}

/// `base^exp`, by square-and-multiply.
pub fn power(base: i64, exp: u32) -> ExactInt {
    num_traits::pow(ExactInt::from(base), exp as usize)
}

pub(crate) fn binom(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product C(n, i) is an integer, so the division is exact.
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub(crate) fn fact(n: u64) -> ExactInt {
    (2..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Catalan number `Cat(m) = C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> ExactInt {
    let (q, r) = binom(2 * m, m).div_rem(&ExactInt::from(m + 1));
    debug_assert!(r.is_zero());
    q
}

fn check_f_args(n: u64, s: u64) -> Result<()> {
    if n == 0 {
        return Err(param("F(n, s) needs n >= 1"));
    }
    if s > n {
        return Err(param(format!(
            "F(n, s) needs 0 <= s <= n, got n = {n}, s = {s}"
        )));
    }
    Ok(())
}

/// Forest count `F(n, s) = s * n^(n-s-1)`.
///
/// `F(n, n) = 1` is returned directly, which sidesteps the `n^-1` factor of
/// the formula at `s = n`.
pub fn f_closed(n: u64, s: u64) -> Result<ExactInt> {
    check_f_args(n, s)?;
    Ok(if s == 0 {
        ExactInt::zero()
    } else if s == n {
        ExactInt::one()
    } else {
        ExactInt::from(s) * power(n as i64, (n - s - 1) as u32)
    })
}

/// Memo table for the recursion
/// `F(n, s) = sum_{j=0}^{n-s} C(n-s, j) F(n-1, s+j-1)` with
/// `F(1, 1) = 1` and `F(n, 0) = 0`.
#[derive(Clone, Debug)]
pub struct ForestTable {
    // rows[n][s], n starting at 1 (rows[0] unused).
    rows: Vec<Vec<ExactInt>>,
}

impl ForestTable {
    /// Fills every entry with `1 <= n <= max_n`.
    pub fn new(max_n: u64) -> Self {
        let max_n = max_n.max(1) as usize;
        let mut rows: Vec<Vec<ExactInt>> = vec![Vec::new(); max_n + 1];
        rows[1] = vec![ExactInt::zero(), ExactInt::one()];
        for n in 2..=max_n {
            let mut row = vec![ExactInt::zero(); n + 1];
            for (s, slot) in row.iter_mut().enumerate().skip(1) {
                let free = n - s;
                let mut sum = ExactInt::zero();
                for j in 0..=free {
                    let prev = s + j - 1;
                    sum += binom(free as u64, j as u64) * &rows[n - 1][prev];
                }
                *slot = sum;
            }
            rows[n] = row;
        }
        ForestTable { rows }
    }

    pub fn max_n(&self) -> u64 {
        (self.rows.len() - 1) as u64
    }

    pub fn get(&self, n: u64, s: u64) -> Result<&ExactInt> {
        check_f_args(n, s)?;
        self.rows
            .get(n as usize)
            .and_then(|row| row.get(s as usize))
            .ok_or_else(|| {
                param(format!(
                    "F({n}, {s}) lies beyond the table (max n = {})",
                    self.max_n()
                ))
            })
    }
}

/// `F(n, s)` evaluated through the recursion.
pub fn f_recursive(n: u64, s: u64) -> Result<ExactInt> {
    check_f_args(n, s)?;
    Ok(ForestTable::new(n).get(n, s)?.clone())
}

/// A tuple `(k_1, ..., k_{n-2})` whose partial sums obey
/// `k_1 + ... + k_i <= i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<u32>);

impl IndexTuple {
    pub fn new(ks: Vec<u32>) -> Result<Self> {
        let mut partial = 0u64;
        for (i, k) in ks.iter().enumerate() {
            partial += u64::from(*k);
            if partial > (i + 1) as u64 {
                return Err(param(format!(
                    "index tuple {ks:?}: partial sum {partial} exceeds {}",
                    i + 1
                )));
            }
        }
        Ok(IndexTuple(ks))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Lexicographic stream of every [`IndexTuple`] of length `n - 2`.
#[derive(Clone, Debug)]
pub struct IndexTuples {
    current: Option<Vec<u32>>,
}

impl Iterator for IndexTuples {
    type Item = IndexTuple;

    fn next(&mut self) -> Option<IndexTuple> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut partial: Vec<u64> = next
            .iter()
            .scan(0u64, |acc, k| {
                *acc += u64::from(*k);
                Some(*acc)
            })
            .collect();
        // Bump the rightmost entry that can grow; zeroing the tail keeps
        // every later partial sum equal to the bumped one, which stays legal.
        for i in (0..next.len()).rev() {
            if partial[i] < (i + 1) as u64 {
                next[i] += 1;
                partial[i] += 1;
                next[i + 1..].iter_mut().for_each(|k| *k = 0);
                self.current = Some(next);
                break;
            }
        }
        Some(IndexTuple(out))
    }
}

pub fn enumerate_index_tuples(n: u64) -> Result<IndexTuples> {
    if n < 2 {
        return Err(param(format!("index tuples need n >= 2, got {n}")));
    }
    Ok(IndexTuples {
        current: Some(vec![0; (n - 2) as usize]),
    })
}

/// Summand `C(n, k_1) C(n - k_1, k_2) ... ` of the binomial-product identity.
pub fn eq2_term(n: u64, tuple: &IndexTuple) -> ExactInt {
    let mut used = 0u64;
    let mut term = ExactInt::one();
    for k in tuple.as_slice() {
        term *= binom(n - used, u64::from(*k));
        used += u64::from(*k);
    }
    term
}

/// Summand `(n-1)! / (k_1! ... k_{n-2}!)` of the multinomial identity.
pub fn eq4_term(n: u64, tuple: &IndexTuple) -> ExactInt {
    let denom = tuple
        .as_slice()
        .iter()
        .fold(ExactInt::one(), |acc, k| acc * fact(u64::from(*k)));
    fact(n - 1) / denom
}

// Depth-first walk over index tuples carrying the running product, so each
// tuple costs one multiplication instead of n - 2.
fn sum_over_tuples(
    n: u64,
    step: &dyn Fn(&ExactInt, u64, u64) -> ExactInt,
    root: ExactInt,
) -> ExactInt {
    fn walk(
        pos: u64,
        len: u64,
        used: u64,
        acc: &ExactInt,
        step: &dyn Fn(&ExactInt, u64, u64) -> ExactInt,
        total: &mut ExactInt,
    ) {
        if pos == len {
            *total += acc;
            return;
        }
        for k in 0..=(pos + 1 - used) {
            let next = step(acc, used, k);
            walk(pos + 1, len, used + k, &next, step, total);
        }
    }
    let mut total = ExactInt::zero();
    walk(0, n - 2, 0, &root, step, &mut total);
    total
}

fn check_n_at_least_2(n: u64) -> Result<()> {
    if n < 2 {
        Err(param(format!("identity needs n >= 2, got {n}")))
    } else {
        Ok(())
    }
}

/// Right-hand side of
/// `(n-1)^(n-1) = sum C(n, k_1) C(n-k_1, k_2) ... C(n-(k_1+...+k_{n-3}), k_{n-2})`.
pub fn rhs_eq2(n: u64) -> Result<ExactInt> {
    check_n_at_least_2(n)?;
    Ok(sum_over_tuples(
        n,
        &|acc, used, k| acc * binom(n - used, k),
        ExactInt::one(),
    ))
}

/// Right-hand side of `(n-1)^(n-1) = sum (n-1)! / (k_1! ... k_{n-2}!)`.
pub fn rhs_eq4(n: u64) -> Result<ExactInt> {
    check_n_at_least_2(n)?;
    // (n-1)! / (k_1! ... k_i!) stays integral since k_1 + ... + k_i <= i < n.
    Ok(sum_over_tuples(n, &|acc, _, k| acc / fact(k), fact(n - 1)))
}

/// `sum_{s=1}^{n} C(n+1, s+1) F(n, s)`, the root-degree refinement of `n^n`.
pub fn rhs_eq5(n: u64) -> Result<ExactInt> {
    if n == 0 {
        return Err(param("root-degree identity needs n >= 1"));
    }
    let mut total = ExactInt::zero();
    for s in 1..=n {
        total += binom(n + 1, s + 1) * f_closed(n, s)?;
    }
    Ok(total)
}

/// Yan's count of `u_{n,k}`-parking functions,
/// `sum_{j=0}^{k} C(n, j) (k+1-j) (k+1)^(j-1) (n-k)^(n-j)`.
///
/// The `j = 0` summand collapses to `(n-k)^n` because `(k+1) (k+1)^-1 = 1`.
pub fn yan_count(n: u64, k: u64) -> Result<ExactInt> {
    if n == 0 || k >= n {
        return Err(param(format!(
            "yan_count needs 0 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    let rest = (n - k) as i64;
    let mut total = power(rest, n as u32);
    for j in 1..=k {
        total += binom(n, j)
            * (k + 1 - j)
            * power((k + 1) as i64, (j - 1) as u32)
            * power(rest, (n - j) as u32);
    }
    Ok(total)
}

/// `(n+1)^(n-1) + (n-1)^(n-1)`, the standard-monomial count of `M_n^(n-2)`.
pub fn theorem_count(n: u64) -> Result<ExactInt> {
    check_n_at_least_2(n)?;
    let e = (n - 1) as u32;
    Ok(power(n as i64 + 1, e) + power(n as i64 - 1, e))
}
