//! Parking functions, spherical parking functions and u-vector parking
//! functions.
//!
//! All three families are defined through the ascending rearrangement
//! `c_1 <= ... <= c_n` of a sequence, so every predicate here is invariant
//! under permuting entries. Positions are 1-based in prose (`c_i < i`) and
//! 0-based in code.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::distribution::Distribution;
use crate::error::{check_dims, param, Result};
use crate::identity::{fact, ExactInt};

/// A nonempty vector of nonnegative integers: an exponent vector, a parking
/// style sequence, or a candidate u-parking function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Sequence(Vec<u32>);

impl Sequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(param("a sequence needs at least one entry"));
        }
        Ok(Sequence(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    fn sorted(&self) -> Vec<u32> {
        let mut c = self.0.clone();
        c.sort_unstable();
        c
    }
}

impl Deref for Sequence {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for Sequence {
    type Error = crate::Error;

    fn try_from(entries: Vec<u32>) -> Result<Self> {
        Sequence::new(entries)
    }
}

impl From<Sequence> for Vec<u32> {
    fn from(s: Sequence) -> Vec<u32> {
        s.0
    }
}

impl fmt::Display for Sequence {
    /// Comma separated entries, `1,0,1,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Weight vector `u` of a u-parking function. The first weight is positive,
/// otherwise `c_1 < u_1` is unsatisfiable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UVector {
    weights: Vec<u32>,
    thresholds: Vec<u64>,
}

impl UVector {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        match weights.first() {
            None => return Err(param("a u-vector needs at least one weight")),
            Some(0) => return Err(param("the first weight of a u-vector must be positive")),
            Some(_) => {}
        }
        let thresholds = weights
            .iter()
            .scan(0u64, |acc, w| {
                *acc += u64::from(*w);
                Some(*acc)
            })
            .collect();
        Ok(UVector {
            weights,
            thresholds,
        })
    }

    /// The all-ones vector, for which u-parking functions are ordinary
    /// parking functions.
    pub fn ones(n: usize) -> Result<Self> {
        UVector::new(vec![1; n])
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Partial sums `u_1 + ... + u_j`.
    pub fn thresholds(&self) -> &[u64] {
        &self.thresholds
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// `u_{n,k} = (n-k, 0 ^ (n-k-1), 1 ^ k)`, whose parking functions are the
/// standard monomials of `M_n^(k)`.
pub fn make_u_nk(n: usize, k: usize) -> Result<UVector> {
    if n == 0 || k >= n {
        return Err(param(format!(
            "u_(n,k) needs 0 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    let mut w = Vec::with_capacity(n);
    w.push((n - k) as u32);
    w.extend(std::iter::repeat_n(0, n - k - 1));
    w.extend(std::iter::repeat_n(1, k));
    UVector::new(w)
}

fn sorted_below(c: &[u32], bound: impl Fn(usize) -> u64) -> bool {
    c.iter().enumerate().all(|(i, v)| u64::from(*v) < bound(i))
}

/// Ascending rearrangement satisfies `c_i < i` for every 1-based `i`.
pub fn is_parking_function(a: &Sequence) -> bool {
    sorted_below(&a.sorted(), |i| (i + 1) as u64)
}

/// Ascending rearrangement satisfies `c_1 = 1` and `c_i < i` for `i >= 2`.
///
/// Always false at length one: spherical parking functions of length `n` are
/// the non-parking standard monomials of `M_n^(n-2)`, which needs `n >= 2`.
pub fn is_spherical_parking_function(a: &Sequence) -> bool {
    if a.len() < 2 {
        return false;
    }
    let c = a.sorted();
    c[0] == 1 && sorted_below(&c[1..], |i| (i + 2) as u64)
}

/// Ascending rearrangement satisfies `c_j < u_1 + ... + u_j` for every `j`.
pub fn is_u_parking_function(a: &Sequence, u: &UVector) -> Result<bool> {
    check_dims(u.len(), a.len())?;
    let t = u.thresholds();
    Ok(sorted_below(&a.sorted(), |i| t[i]))
}

/// Sum of entries, the total degree of the matching monomial.
pub fn degree(a: &[u32]) -> u64 {
    a.iter().map(|v| u64::from(*v)).sum()
}

/// Every vector in `[0, side)^len`, lexicographically.
#[derive(Clone, Debug)]
pub struct BoundedVectors {
    side: u32,
    // Positions before `frozen` never change.
    frozen: usize,
    current: Option<Vec<u32>>,
}

impl BoundedVectors {
    pub fn new(len: usize, side: u32) -> Self {
        let current = (len > 0 && side > 0).then(|| vec![0; len]);
        BoundedVectors {
            side,
            frozen: 0,
            current,
        }
    }

    /// Vectors in `[0, side)^len` whose first entry is `first`.
    pub fn with_first(len: usize, side: u32, first: u32) -> Self {
        let current = (len > 0 && first < side).then(|| {
            let mut v = vec![0; len];
            v[0] = first;
            v
        });
        BoundedVectors {
            side,
            frozen: 1,
            current,
        }
    }
}

impl Iterator for BoundedVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        for i in (self.frozen..next.len()).rev() {
            if next[i] + 1 < self.side {
                next[i] += 1;
                next[i + 1..].iter_mut().for_each(|v| *v = 0);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Lexicographic stream over a family that is closed under lowering any
/// entry down to `floor`, with entries in `[floor, ceiling]`.
///
/// The least completion of a valid prefix is the prefix padded with `floor`,
/// so the stream never backtracks over dead ends.
struct DownwardClosed<P> {
    floor: u32,
    ceiling: u32,
    member: P,
    current: Option<Vec<u32>>,
}

impl<P: Fn(&[u32]) -> bool> DownwardClosed<P> {
    fn new(len: usize, floor: u32, ceiling: u32, member: P) -> Self {
        let start = vec![floor; len];
        let current = (len > 0 && floor <= ceiling && member(&start)).then_some(start);
        DownwardClosed {
            floor,
            ceiling,
            member,
            current,
        }
    }
}

impl<P: Fn(&[u32]) -> bool> Iterator for DownwardClosed<P> {
    type Item = Sequence;

    fn next(&mut self) -> Option<Sequence> {
        let out = self.current.take()?;
        let mut probe = out.clone();
        'positions: for p in (0..probe.len()).rev() {
            probe[p + 1..].iter_mut().for_each(|v| *v = self.floor);
            if probe[p] < self.ceiling {
                probe[p] += 1;
                if (self.member)(&probe) {
                    self.current = Some(probe);
                    break 'positions;
                }
            }
            probe[p] = out[p];
        }
        Some(Sequence(out))
    }
}

fn spherical_slice(a: &[u32]) -> bool {
    let mut c = a.to_vec();
    c.sort_unstable();
    c.len() >= 2 && c[0] == 1 && sorted_below(&c[1..], |i| (i + 2) as u64)
}

fn parking_slice(a: &[u32]) -> bool {
    let mut c = a.to_vec();
    c.sort_unstable();
    sorted_below(&c, |i| (i + 1) as u64)
}

/// All spherical parking functions of length `n`, lexicographically.
///
/// Empty for `n = 1`; `(n-1)^(n-1)` items otherwise.
pub fn enumerate_spherical(n: usize) -> impl Iterator<Item = Sequence> {
    let ceiling = n.saturating_sub(1).max(1) as u32;
    DownwardClosed::new(if n >= 2 { n } else { 0 }, 1, ceiling, spherical_slice)
}

/// All parking functions of length `n`, lexicographically.
pub fn enumerate_parking(n: usize) -> impl Iterator<Item = Sequence> {
    DownwardClosed::new(n, 0, n.saturating_sub(1) as u32, parking_slice)
}

/// All `u`-parking functions with entries at most `ceiling`,
/// lexicographically.
pub fn enumerate_u_parking(u: &UVector, ceiling: u32) -> impl Iterator<Item = Sequence> {
    let t = u.thresholds().to_vec();
    DownwardClosed::new(u.len(), 0, ceiling, move |a: &[u32]| {
        let mut c = a.to_vec();
        c.sort_unstable();
        sorted_below(&c, |i| t[i])
    })
}

/// Spherical parking functions found by filtering all of `[0, n-1]^n`.
///
/// Any entry `>= n` breaks `c_n < n`, so the box is exhaustive.
pub fn spherical_by_filter(n: usize) -> impl Iterator<Item = Sequence> {
    BoundedVectors::new(n, n as u32)
        .map(Sequence)
        .filter(is_spherical_parking_function)
}

/// Parking functions found by filtering all of `[0, n-1]^n`.
pub fn parking_by_filter(n: usize) -> impl Iterator<Item = Sequence> {
    BoundedVectors::new(n, n as u32)
        .map(Sequence)
        .filter(is_parking_function)
}

/// A nondecreasing sequence together with the number of its distinct
/// rearrangements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub sorted: Sequence,
    pub multiplicity: ExactInt,
}

/// `len! / prod(m_v!)` over the multiplicities of the values of `c`.
pub fn rearrangements(c: &[u32]) -> ExactInt {
    let mut c = c.to_vec();
    c.sort_unstable();
    let mut denom = ExactInt::from(1);
    let mut run = 0u64;
    for i in 0..c.len() {
        run += 1;
        if i + 1 == c.len() || c[i + 1] != c[i] {
            denom *= fact(run);
            run = 0;
        }
    }
    fact(c.len() as u64) / denom
}

// Nondecreasing c with c_i in [lo, hi(i)], 0-based i.
fn nondecreasing(len: usize, lo: u32, hi: &dyn Fn(usize) -> u32) -> Vec<Vec<u32>> {
    fn walk(
        c: &mut Vec<u32>,
        len: usize,
        lo: u32,
        hi: &dyn Fn(usize) -> u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        let i = c.len();
        if i == len {
            out.push(c.clone());
            return;
        }
        let start = c.last().copied().unwrap_or(lo).max(lo);
        for v in start..=hi(i) {
            c.push(v);
            walk(c, len, lo, hi, out);
            c.pop();
        }
    }
    let mut out = Vec::new();
    walk(&mut Vec::with_capacity(len), len, lo, hi, &mut out);
    out
}

/// Sorted profiles of spherical parking functions: `c_1 = 1`,
/// `1 <= c_i <= i - 1` for `i >= 2`, ascending lexicographically.
pub fn spherical_profiles(n: usize) -> Vec<Profile> {
    if n < 2 {
        return Vec::new();
    }
    nondecreasing(n, 1, &|i| if i == 0 { 1 } else { i as u32 })
        .into_iter()
        .map(|c| Profile {
            multiplicity: rearrangements(&c),
            sorted: Sequence(c),
        })
        .collect()
}

/// Sorted profiles of parking functions: `0 <= c_i <= i - 1`.
pub fn parking_profiles(n: usize) -> Vec<Profile> {
    if n == 0 {
        return Vec::new();
    }
    nondecreasing(n, 0, &|i| i as u32)
        .into_iter()
        .map(|c| Profile {
            multiplicity: rearrangements(&c),
            sorted: Sequence(c),
        })
        .collect()
}

/// Distinct rearrangements of `profile`, lexicographically.
pub fn expand_profile(profile: &Sequence) -> impl Iterator<Item = Sequence> {
    let mut start = profile.0.clone();
    start.sort_unstable();
    let mut current = Some(start);
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Sequence(out))
    })
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Number of spherical parking functions of length `n`, summed over sorted
/// profiles with multinomial multiplicities.
pub fn count_spherical_by_profiles(n: usize) -> ExactInt {
    spherical_profiles(n)
        .into_iter()
        .map(|p| p.multiplicity)
        .sum()
}

/// Degree histogram of the spherical parking functions of length `n >= 2`.
pub fn spherical_degree_distribution(n: usize) -> Result<Distribution> {
    if n < 2 {
        return Err(param(format!(
            "spherical degree distribution needs n >= 2, got {n}"
        )));
    }
    let mut d = Distribution::new();
    for p in spherical_profiles(n) {
        d.add(degree(&p.sorted) as i64, p.multiplicity);
    }
    Ok(d)
}

/// Degree histogram of the parking functions of length `n >= 1`.
pub fn pf_degree_distribution(n: usize) -> Result<Distribution> {
    if n == 0 {
        return Err(param("parking-function degree distribution needs n >= 1"));
    }
    let mut d = Distribution::new();
    for p in parking_profiles(n) {
        d.add(degree(&p.sorted) as i64, p.multiplicity);
    }
    Ok(d)
}
