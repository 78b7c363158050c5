//! Skeleton ideals `M_n^(k)` and their standard monomials.
//!
//! `M_n^(k)` is generated by `m_sigma = prod_{i in sigma} x_i^(n - |sigma| + 1)`
//! over nonempty `sigma` with `|sigma| <= k + 1`. `k = n - 1` is the full
//! parking-function ideal `M_n`; `k = n - 2` drops only `x_1 ... x_n`.
//!
//! Entry bound: every `M_n^(k)` contains the singleton generators `x_i^n`,
//! so a standard monomial has all exponents `<= n - 1`, and searching the box
//! `[0, n-1]^n` is exhaustive.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{check_dims, param, Result};
use crate::identity::ExactInt;
use crate::seqcore::{BoundedVectors, Sequence};

const MAX_VARIABLES: usize = 63;
const MAX_GENERATORS: usize = 1 << 22;

/// Minimal generators of `M_n^(k)`, as exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    k: usize,
    generators: Vec<Sequence>,
    // (support bitmask, common exponent) per generator, same order.
    packed: Vec<(u64, u32)>,
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generators(&self) -> &[Sequence] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn subsets_of_size(n: usize, size: usize, out: &mut Vec<u64>) {
    fn walk(start: usize, n: usize, left: usize, mask: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for i in start..=(n - left) {
            walk(i + 1, n, left - 1, mask | (1 << i), out);
        }
    }
    walk(0, n, size, 0, out);
}

/// Generators of `M_n^(k)`, ordered by support size and then by support
/// (lexicographic on sorted positions).
pub fn skeleton_generators(n: usize, k: usize) -> Result<GeneratorSet> {
    if n == 0 || k >= n {
        return Err(param(format!(
            "M_n^(k) needs n >= 1 and 0 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    if n > MAX_VARIABLES {
        return Err(param(format!(
            "at most {MAX_VARIABLES} variables are supported, got {n}"
        )));
    }
    let count: u128 = (1..=k + 1)
        .map(|s| crate::identity::binom(n as u64, s as u64))
        .sum::<ExactInt>()
        .try_into()
        .unwrap_or(u128::MAX);
    if count > MAX_GENERATORS as u128 {
        return Err(param(format!(
            "M_{n}^({k}) has {count} generators, above the supported {MAX_GENERATORS}"
        )));
    }

    let mut packed = Vec::with_capacity(count as usize);
    for size in 1..=k + 1 {
        let mut masks = Vec::new();
        subsets_of_size(n, size, &mut masks);
        let exponent = (n - size + 1) as u32;
        packed.extend(masks.into_iter().map(|m| (m, exponent)));
    }
    let generators = packed
        .iter()
        .map(|&(mask, e)| {
            let v = (0..n)
                .map(|i| if mask >> i & 1 == 1 { e } else { 0 })
                .collect();
            Sequence::new(v).expect("n >= 1")
        })
        .collect();
    Ok(GeneratorSet {
        n,
        k,
        generators,
        packed,
    })
}

/// Monomial divisibility: `g_i <= m_i` for every `i`.
pub fn divides(g: &[u32], m: &[u32]) -> Result<bool> {
    check_dims(g.len(), m.len())?;
    Ok(g.iter().zip(m).all(|(a, b)| a <= b))
}

/// No generator of `gens` divides `m`.
pub fn is_standard(m: &[u32], gens: &GeneratorSet) -> Result<bool> {
    check_dims(gens.n, m.len())?;
    Ok(standard_unchecked(m, gens))
}

fn standard_unchecked(m: &[u32], gens: &GeneratorSet) -> bool {
    // A generator with support sigma and exponent e divides m exactly when
    // sigma is contained in { i : m_i >= e }.
    let mut at_least = [0u64; MAX_VARIABLES + 1];
    for (e, mask) in at_least
        .iter_mut()
        .enumerate()
        .take(gens.n + 1)
        .skip(gens.n - gens.k)
    {
        *mask = m
            .iter()
            .enumerate()
            .filter(|(_, v)| **v as usize >= e)
            .fold(0, |acc, (i, _)| acc | 1 << i);
    }
    !gens
        .packed
        .iter()
        .any(|&(mask, e)| mask & !at_least[e as usize] == 0)
}

/// Standard monomials of `M_n^(k)`, lexicographically, produced lazily from
/// the box `[0, n-1]^n`.
pub fn enumerate_standard(n: usize, k: usize) -> Result<impl Iterator<Item = Sequence>> {
    let gens = skeleton_generators(n, k)?;
    Ok(BoundedVectors::new(n, n as u32)
        .filter(move |m| standard_unchecked(m, &gens))
        .map(|m| Sequence::new(m).expect("n >= 1")))
}

/// `|enumerate_standard(n, k)|`, split across threads by first exponent.
pub fn count_standard(n: usize, k: usize) -> Result<u64> {
    let gens = skeleton_generators(n, k)?;
    Ok((0..n as u32)
        .into_par_iter()
        .map(|first| {
            BoundedVectors::with_first(n, n as u32, first)
                .filter(|m| standard_unchecked(m, &gens))
                .count() as u64
        })
        .sum())
}

fn check_raised(n: usize, raised: &BTreeSet<usize>) -> Result<()> {
    if n == 0 {
        return Err(param("raised-set count needs n >= 1"));
    }
    if let Some(bad) = raised.iter().find(|&&i| i == 0 || i > n) {
        return Err(param(format!("raised position {bad} outside 1..={n}")));
    }
    Ok(())
}

/// Standard monomials of `M_n^(n-2)` with exponent `>= 2` exactly on the
/// 1-based positions in `raised` and exponent `1` elsewhere,
/// lexicographically.
///
/// Raising every variable is never standard (the monomial is divisible by
/// some `m_sigma` with `|sigma| = n - 1`), so `|raised| = n` yields nothing.
pub fn standard_with_raised_set(n: usize, raised: &BTreeSet<usize>) -> Result<Vec<Sequence>> {
    check_raised(n, raised)?;
    if raised.len() == n {
        return Ok(Vec::new());
    }
    if n == 1 {
        // M_1^(-1) has no generators; only x_1 itself qualifies.
        return Ok(vec![Sequence::new(vec![1]).expect("nonempty")]);
    }
    let gens = skeleton_generators(n, n - 2)?;
    let positions: Vec<usize> = raised.iter().map(|i| i - 1).collect();
    // Raised exponents range over 2..=n-1.
    let side = (n as u32).saturating_sub(2);
    let mut out = Vec::new();
    for offsets in BoundedVectors::new(positions.len(), side).chain(
        // A single empty assignment when nothing is raised.
        positions.is_empty().then(Vec::new),
    ) {
        let mut m = vec![1u32; n];
        for (p, o) in positions.iter().zip(&offsets) {
            m[*p] = o + 2;
        }
        if standard_unchecked(&m, &gens) {
            out.push(Sequence::new(m).expect("n >= 1"));
        }
    }
    Ok(out)
}

pub fn count_standard_by_raised_set(n: usize, raised: &BTreeSet<usize>) -> Result<ExactInt> {
    Ok(ExactInt::from(standard_with_raised_set(n, raised)?.len()))
}
