//! Brute-force oracles set against closed forms, one report per check.
//!
//! The left-hand side of every check comes from enumeration ([`crate::seqcore`],
//! [`crate::ideal`], [`crate::arbor`]); the right-hand side comes from
//! [`crate::identity`] or from a second, independent enumeration. Neither
//! side of a check reuses the other's code path.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arbor::{inversion_distribution, uprooted_statistic_distribution, TreeStatistic};
use crate::distribution::Distribution;
use crate::error::{param, Result};
use crate::ideal::{count_standard, count_standard_by_raised_set, enumerate_standard};
use crate::identity::{
    binom, decimal, f_closed, f_recursive, power, rhs_eq2, rhs_eq4, rhs_eq5, theorem_count,
    yan_count, ExactInt, ForestTable,
};
use crate::seqcore::{
    count_spherical_by_profiles, enumerate_spherical, is_parking_function,
    is_spherical_parking_function, is_u_parking_function, make_u_nk, pf_degree_distribution,
    spherical_by_filter, spherical_degree_distribution, BoundedVectors, Sequence, UVector,
};

/// Witnesses kept on a mismatch.
pub const WITNESS_CAP: usize = 10;

/// One side of a comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Quantity {
    Count {
        #[serde(with = "decimal")]
        value: ExactInt,
    },
    Distribution {
        value: Distribution,
    },
}

impl Quantity {
    pub fn count(value: impl Into<ExactInt>) -> Self {
        Quantity::Count {
            value: value.into(),
        }
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Quantity::Count { value } => write!(f, "{value}"),
            Quantity::Distribution { value } => write!(f, "{value}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lhs,
    Rhs,
}

/// Evidence of disagreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An object produced by one side only.
    Element { entries: Vec<u32>, only_in: Side },
    /// A statistic value whose counts differ.
    Bucket {
        key: i64,
        #[serde(with = "decimal")]
        lhs: ExactInt,
        #[serde(with = "decimal")]
        rhs: ExactInt,
    },
}

/// A secondary comparison that must also hold for the check to match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub matches: bool,
}

impl Comparison {
    fn new(label: impl Into<String>, lhs: Quantity, rhs: Quantity) -> Self {
        let matches = lhs == rhs;
        Comparison {
            label: label.into(),
            lhs,
            rhs,
            matches,
        }
    }
}

/// Outcome of one check.
///
/// `verdict` is `Match` exactly when `lhs == rhs` and every auxiliary
/// comparison matches; `witnesses` is empty on a match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub parameters: BTreeMap<String, i64>,
    pub lhs_label: String,
    pub rhs_label: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub auxiliary: Vec<Comparison>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    fn new(
        check_name: &str,
        parameters: &[(&str, i64)],
        (lhs_label, lhs): (&str, Quantity),
        (rhs_label, rhs): (&str, Quantity),
    ) -> Self {
        let mut r = VerificationReport {
            check_name: check_name.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            lhs_label: lhs_label.to_string(),
            rhs_label: rhs_label.to_string(),
            lhs,
            rhs,
            verdict: Verdict::Match,
            auxiliary: Vec::new(),
            annotations: Vec::new(),
            witnesses: Vec::new(),
            elapsed_ms: None,
        };
        r.settle();
        r
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }

    fn with_auxiliary(mut self, c: Comparison) -> Self {
        self.auxiliary.push(c);
        self.settle();
        self
    }

    fn annotate(mut self, note: impl Into<String>) -> Self {
        self.annotations.push(note.into());
        self
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    /// Attaches element witnesses; they are kept only on a mismatch.
    fn with_element_witnesses(mut self, w: Vec<Witness>) -> Self {
        if !w.is_empty() && self.verdict == Verdict::Match {
            // The sets disagree even though every count matched.
            self.verdict = Verdict::Mismatch;
        }
        if self.verdict == Verdict::Mismatch {
            self.witnesses.extend(w);
        }
        self
    }

    // Recomputes the verdict and bucket witnesses from the quantities.
    fn settle(&mut self) {
        let agree = self.lhs == self.rhs && self.auxiliary.iter().all(|c| c.matches);
        self.verdict = if agree {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        self.witnesses
            .retain(|w| matches!(w, Witness::Element { .. }));
        if agree {
            self.witnesses.clear();
            return;
        }
        if let (Quantity::Distribution { value: l }, Quantity::Distribution { value: r }) =
            (&self.lhs, &self.rhs)
        {
            for key in l.differing_keys(r) {
                self.witnesses.push(Witness::Bucket {
                    key,
                    lhs: l.get(key),
                    rhs: r.get(key),
                });
            }
        }
    }

    /// Keeps at most `cap` witnesses.
    pub fn cap_witnesses(mut self, cap: usize) -> Self {
        self.witnesses.truncate(cap);
        self
    }

    /// Corrupts the right-hand side by one unit and recomputes the verdict.
    ///
    /// Exists so callers can exercise their mismatch handling against a
    /// known-false oracle.
    pub fn falsify_rhs(&mut self) {
        match &mut self.rhs {
            Quantity::Count { value } => *value += 1,
            Quantity::Distribution { value } => {
                let key = value.keys().next().unwrap_or(0);
                value.add(key, 1u64);
            }
        }
        self.settle();
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(param(msg()))
    }
}

fn in_range(name: &str, value: u64, lo: u64, hi: u64) -> Result<()> {
    require((lo..=hi).contains(&value), || {
        format!("{name} needs {lo} <= n <= {hi}, got {value}")
    })
}

fn symmetric_difference(lhs: &BTreeSet<Sequence>, rhs: &BTreeSet<Sequence>) -> Vec<Witness> {
    let only = |a: &BTreeSet<Sequence>, b: &BTreeSet<Sequence>, side| {
        a.difference(b)
            .map(|s| Witness::Element {
                entries: s.entries().to_vec(),
                only_in: side,
            })
            .collect::<Vec<_>>()
    };
    let mut w = only(lhs, rhs, Side::Lhs);
    w.extend(only(rhs, lhs, Side::Rhs));
    w
}

fn index_distribution(values: impl IntoIterator<Item = (u64, ExactInt)>) -> Distribution {
    let mut d = Distribution::new();
    for (k, v) in values {
        d.add(k as i64, v);
    }
    d
}

/// Standard monomials of `M_n^(n-2)` counted by brute force against
/// `(n+1)^(n-1) + (n-1)^(n-1)`.
///
/// On a mismatch the standard set is compared element by element with the
/// union of parking and spherical parking functions.
fn theorem_main(n: u64) -> Result<VerificationReport> {
    in_range("theorem check", n, 2, 8)?;
    let start = Instant::now();
    let nn = n as usize;
    let (brute, closed) = rayon::join(|| count_standard(nn, nn - 2), || theorem_count(n));
    let report = VerificationReport::new(
        "theorem",
        &[("n", n as i64)],
        (
            "brute-force standard monomials of M_n^(n-2)",
            Quantity::count(brute?),
        ),
        ("(n+1)^(n-1) + (n-1)^(n-1)", Quantity::count(closed?)),
    );
    let witnesses = if report.is_match() {
        Vec::new()
    } else {
        let standard: BTreeSet<Sequence> = enumerate_standard(nn, nn - 2)?.collect();
        let union: BTreeSet<Sequence> = BoundedVectors::new(nn, n as u32)
            .map(|v| Sequence::new(v).expect("n >= 2"))
            .filter(|a| is_parking_function(a) || is_spherical_parking_function(a))
            .collect();
        symmetric_difference(&standard, &union)
    };
    Ok(report.with_element_witnesses(witnesses).timed(start))
}

/// Spherical count via sorted profiles against `(n-1)^(n-1)`, with the
/// lexicographic stream checked against the box filter for `n <= 7`.
fn spherical_count(n: u64) -> Result<VerificationReport> {
    in_range("spherical check", n, 2, 9)?;
    let start = Instant::now();
    let nn = n as usize;
    let mut report = VerificationReport::new(
        "spherical",
        &[("n", n as i64)],
        (
            "spherical parking functions (profile expansion)",
            Quantity::count(count_spherical_by_profiles(nn)),
        ),
        (
            "(n-1)^(n-1)",
            Quantity::count(power(n as i64 - 1, (n - 1) as u32)),
        ),
    );
    let mut witnesses = Vec::new();
    if n <= 7 {
        let (stream, filtered): (BTreeSet<Sequence>, BTreeSet<Sequence>) = rayon::join(
            || enumerate_spherical(nn).collect(),
            || spherical_by_filter(nn).collect(),
        );
        let profile_count = report.lhs.clone();
        report = report.with_auxiliary(Comparison::new(
            "profile expansion vs naive filter of [0, n-1]^n",
            profile_count,
            Quantity::count(filtered.len()),
        ));
        witnesses = symmetric_difference(&stream, &filtered);
    }
    Ok(report.with_element_witnesses(witnesses).timed(start))
}

/// Spherical degree histogram, reindexed by `k = C(n,2) - degree + 1`,
/// against the surface-inversion histogram of uprooted trees.
///
/// The statement is conjectural; a match certifies only the tested `n`.
fn conjecture(n: u64) -> Result<VerificationReport> {
    in_range("conjecture check", n, 2, 7)?;
    let start = Instant::now();
    let nn = n as usize;
    let shift = (nn * (nn - 1) / 2) as i64 + 1;
    let (degrees, trees) = rayon::join(
        || spherical_degree_distribution(nn),
        || uprooted_statistic_distribution(nn, TreeStatistic::SurfaceInversions),
    );
    let lhs = degrees?.reindex(|d| shift - d);
    Ok(VerificationReport::new(
        "conjecture",
        &[("n", n as i64)],
        (
            "spherical parking functions by C(n,2) - degree + 1",
            Quantity::Distribution { value: lhs },
        ),
        (
            "uprooted trees by surface inversions",
            Quantity::Distribution { value: trees? },
        ),
    )
    .annotate(format!(
        "conjectural statement; this report covers n = {n} only"
    ))
    .timed(start))
}

/// Parking-function degree histogram, reindexed by `k = C(n,2) - degree`,
/// against the inversion histogram of trees on `[n+1]` rooted at 1.
fn kreweras(n: u64) -> Result<VerificationReport> {
    in_range("Kreweras check", n, 1, 6)?;
    let start = Instant::now();
    let nn = n as usize;
    let (degrees, trees) = rayon::join(
        || pf_degree_distribution(nn),
        || inversion_distribution(nn + 1),
    );
    let degrees = degrees?;
    let trees = trees?;
    let choose2 = |m: usize| (m * m.saturating_sub(1) / 2) as i64;
    let lhs = degrees.reindex(|d| choose2(nn) - d);
    let printed = degrees.reindex(|d| choose2(nn + 1) - d);
    let printed_note = if printed == trees {
        "also matches".to_string()
    } else {
        format!("does not match: {printed}")
    };
    Ok(VerificationReport::new(
        "kreweras",
        &[("n", n as i64)],
        (
            "parking functions of length n by C(n,2) - degree",
            Quantity::Distribution { value: lhs },
        ),
        (
            "trees on [n+1] rooted at 1 by inversions",
            Quantity::Distribution { value: trees },
        ),
    )
    .annotate("reindexing uses C(n,2) - degree for length-n parking functions")
    .annotate(format!(
        "the C(n+1,2) - degree normalization {printed_note}"
    ))
    .timed(start))
}

/// Standard monomials of `M_n^(k)` against the `u_{n,k}`-parking functions,
/// compared as sets of exponent vectors, plus their size against Yan's
/// formula.
fn u_correspondence(n: u64, k: u64) -> Result<VerificationReport> {
    in_range("u-correspondence check", n, 1, 7)?;
    require(k < n, || {
        format!("u-correspondence check needs 0 <= k <= n - 1, got k = {k}")
    })?;
    let u = make_u_nk(n as usize, k as usize)?;
    u_correspondence_with(n, k, &u)
}

/// As `u_correspondence` but against an arbitrary weight vector.
fn u_correspondence_with(n: u64, k: u64, u: &UVector) -> Result<VerificationReport> {
    in_range("u-correspondence check", n, 1, 7)?;
    require(k < n, || {
        format!("u-correspondence check needs 0 <= k <= n - 1, got k = {k}")
    })?;
    require(u.len() == n as usize, || {
        format!("u has length {}, expected {n}", u.len())
    })?;
    let start = Instant::now();
    let nn = n as usize;
    let (standard, parking) = rayon::join(
        || enumerate_standard(nn, k as usize).map(|s| s.collect::<BTreeSet<Sequence>>()),
        || -> BTreeSet<Sequence> {
            BoundedVectors::new(nn, n as u32)
                .map(|v| Sequence::new(v).expect("n >= 1"))
                .filter(|a| is_u_parking_function(a, u).expect("lengths agree"))
                .collect()
        },
    );
    let standard = standard?;
    let witnesses = symmetric_difference(&standard, &parking);
    let weights: Vec<String> = u.weights().iter().map(u32::to_string).collect();
    Ok(VerificationReport::new(
        "u-correspondence",
        &[("n", n as i64), ("k", k as i64)],
        (
            "standard monomials of M_n^(k)",
            Quantity::count(standard.len()),
        ),
        (
            "u-parking functions with entries <= n-1",
            Quantity::count(parking.len()),
        ),
    )
    .with_auxiliary(Comparison::new(
        "standard monomial count vs Yan's formula",
        Quantity::count(standard.len()),
        Quantity::count(yan_count(n, k)?),
    ))
    .annotate(format!("u = ({})", weights.join(",")))
    .with_element_witnesses(witnesses)
    .timed(start))
}

/// Raised-set counts on `n + 1` variables against `F(n, s)` for every `s`,
/// and their weighted sum against `n^n`.
fn raised_set_formula(n: u64) -> Result<VerificationReport> {
    in_range("raised-set check", n, 2, 6)?;
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut closed = Vec::new();
    for s in 1..=n {
        let raised: BTreeSet<usize> = (1..=(n - s) as usize).collect();
        counts.push((s, count_standard_by_raised_set(n as usize + 1, &raised)?));
        closed.push((s, f_closed(n, s)?));
    }
    let weighted: ExactInt = counts.iter().map(|(s, c)| binom(n + 1, s + 1) * c).sum();
    Ok(VerificationReport::new(
        "raised-set",
        &[("n", n as i64)],
        (
            "standard monomials on n+1 variables raising n-s fixed variables, by s",
            Quantity::Distribution {
                value: index_distribution(counts),
            },
        ),
        (
            "F(n, s) = s n^(n-s-1), by s",
            Quantity::Distribution {
                value: index_distribution(closed),
            },
        ),
    )
    .with_auxiliary(Comparison::new(
        "sum_s C(n+1, s+1) * raised-set count vs n^n",
        Quantity::count(weighted),
        Quantity::count(power(n as i64, n as u32)),
    ))
    .timed(start))
}

/// Binomial-product identity against `(n-1)^(n-1)`.
fn eq2(n: u64) -> Result<VerificationReport> {
    in_range("binomial-product identity", n, 2, 16)?;
    let start = Instant::now();
    Ok(VerificationReport::new(
        "eq2",
        &[("n", n as i64)],
        (
            "sum of C(n,k_1) C(n-k_1,k_2) ... over index tuples",
            Quantity::count(rhs_eq2(n)?),
        ),
        (
            "(n-1)^(n-1)",
            Quantity::count(power(n as i64 - 1, (n - 1) as u32)),
        ),
    )
    .timed(start))
}

/// Multinomial identity against `(n-1)^(n-1)`.
fn eq4(n: u64) -> Result<VerificationReport> {
    in_range("multinomial identity", n, 2, 16)?;
    let start = Instant::now();
    Ok(VerificationReport::new(
        "eq4",
        &[("n", n as i64)],
        (
            "sum of (n-1)!/(k_1! ... k_{n-2}!) over index tuples",
            Quantity::count(rhs_eq4(n)?),
        ),
        (
            "(n-1)^(n-1)",
            Quantity::count(power(n as i64 - 1, (n - 1) as u32)),
        ),
    )
    .timed(start))
}

/// Root-degree identity against `n^n`.
fn eq5(n: u64) -> Result<VerificationReport> {
    in_range("root-degree identity", n, 1, 500)?;
    let start = Instant::now();
    Ok(VerificationReport::new(
        "eq5",
        &[("n", n as i64)],
        ("sum_s C(n+1, s+1) F(n, s)", Quantity::count(rhs_eq5(n)?)),
        ("n^n", Quantity::count(power(n as i64, n as u32))),
    )
    .timed(start))
}

/// The forest recursion against the closed form, for every `0 <= s <= n`.
fn recursion(n: u64) -> Result<VerificationReport> {
    in_range("forest recursion", n, 1, 200)?;
    let start = Instant::now();
    let table = ForestTable::new(n);
    let mut rec = Vec::new();
    let mut closed = Vec::new();
    for s in 0..=n {
        rec.push((s, table.get(n, s)?.clone()));
        closed.push((s, f_closed(n, s)?));
    }
    debug_assert_eq!(rec.last().map(|(_, v)| v.clone()), Some(f_recursive(n, n)?));
    Ok(VerificationReport::new(
        "recursion",
        &[("n", n as i64)],
        (
            "F(n, s) by recursion, by s",
            Quantity::Distribution {
                value: index_distribution(rec),
            },
        ),
        (
            "F(n, s) = s n^(n-s-1), by s",
            Quantity::Distribution {
                value: index_distribution(closed),
            },
        ),
    )
    .timed(start))
}

/// Yan's formula against brute-force standard counts of `M_n^(k)`, for one
/// `k` or for every `k` in `0..n`.
fn yan(n: u64, k: Option<u64>) -> Result<VerificationReport> {
    in_range("Yan check", n, 1, 8)?;
    if let Some(k) = k {
        require(k < n, || {
            format!("Yan check needs 0 <= k <= n - 1, got k = {k}")
        })?;
    }
    let start = Instant::now();
    let ks: Vec<u64> = match k {
        Some(k) => vec![k],
        None => (0..n).collect(),
    };
    let mut brute = Vec::new();
    let mut formula = Vec::new();
    for &k in &ks {
        brute.push((k, ExactInt::from(count_standard(n as usize, k as usize)?)));
        formula.push((k, yan_count(n, k)?));
    }
    let mut params = vec![("n", n as i64)];
    if let Some(k) = k {
        params.push(("k", k as i64));
    }
    Ok(VerificationReport::new(
        "yan",
        &params,
        (
            "brute-force standard monomials of M_n^(k), by k",
            Quantity::Distribution {
                value: index_distribution(brute),
            },
        ),
        (
            "Yan's formula, by k",
            Quantity::Distribution {
                value: index_distribution(formula),
            },
        ),
    )
    .timed(start))
}

/// The checks known to the dispatcher.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Theorem,
    Spherical,
    Conjecture,
    Kreweras,
    UCorrespondence,
    RaisedSet,
    Eq2,
    Eq4,
    Eq5,
    Recursion,
    Yan,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Theorem,
        Check::Spherical,
        Check::Conjecture,
        Check::Kreweras,
        Check::UCorrespondence,
        Check::RaisedSet,
        Check::Eq2,
        Check::Eq4,
        Check::Eq5,
        Check::Recursion,
        Check::Yan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Spherical => "spherical",
            Check::Conjecture => "conjecture",
            Check::Kreweras => "kreweras",
            Check::UCorrespondence => "u-correspondence",
            Check::RaisedSet => "raised-set",
            Check::Eq2 => "eq2",
            Check::Eq4 => "eq4",
            Check::Eq5 => "eq5",
            Check::Recursion => "recursion",
            Check::Yan => "yan",
        }
    }

    /// Runs the check keeping at most `witness_cap` witnesses (`None` keeps
    /// all of them). `k` is required by `u-correspondence`, optional for
    /// `yan` and ignored elsewhere.
    pub fn run(
        self,
        n: u64,
        k: Option<u64>,
        witness_cap: Option<usize>,
    ) -> Result<VerificationReport> {
        let report = match self {
            Check::Theorem => theorem_main(n),
            Check::Spherical => spherical_count(n),
            Check::Conjecture => conjecture(n),
            Check::Kreweras => kreweras(n),
            Check::UCorrespondence => {
                let k = k.ok_or_else(|| param("u-correspondence needs k"))?;
                u_correspondence(n, k)
            }
            Check::RaisedSet => raised_set_formula(n),
            Check::Eq2 => eq2(n),
            Check::Eq4 => eq4(n),
            Check::Eq5 => eq5(n),
            Check::Recursion => recursion(n),
            Check::Yan => yan(n, k),
        }?;
        Ok(match witness_cap {
            Some(cap) => report.cap_witnesses(cap),
            None => report,
        })
    }
}

impl std::str::FromStr for Check {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| param(format!("unknown check {s:?}")))
    }
}

pub fn check_theorem_main(n: u64) -> Result<VerificationReport> {
    Check::Theorem.run(n, None, Some(WITNESS_CAP))
}

pub fn check_spherical_count(n: u64) -> Result<VerificationReport> {
    Check::Spherical.run(n, None, Some(WITNESS_CAP))
}

pub fn check_conjecture(n: u64) -> Result<VerificationReport> {
    Check::Conjecture.run(n, None, Some(WITNESS_CAP))
}

pub fn check_kreweras(n: u64) -> Result<VerificationReport> {
    Check::Kreweras.run(n, None, Some(WITNESS_CAP))
}

pub fn check_u_correspondence(n: u64, k: u64) -> Result<VerificationReport> {
    Check::UCorrespondence.run(n, Some(k), Some(WITNESS_CAP))
}

/// The u-correspondence check against an arbitrary weight vector `u` in
/// place of `u_{n,k}`.
pub fn check_u_correspondence_with(n: u64, k: u64, u: &UVector) -> Result<VerificationReport> {
    Ok(u_correspondence_with(n, k, u)?.cap_witnesses(WITNESS_CAP))
}

pub fn check_raised_set_formula(n: u64) -> Result<VerificationReport> {
    Check::RaisedSet.run(n, None, Some(WITNESS_CAP))
}

pub fn check_eq2(n: u64) -> Result<VerificationReport> {
    Check::Eq2.run(n, None, Some(WITNESS_CAP))
}

pub fn check_eq4(n: u64) -> Result<VerificationReport> {
    Check::Eq4.run(n, None, Some(WITNESS_CAP))
}

pub fn check_eq5(n: u64) -> Result<VerificationReport> {
    Check::Eq5.run(n, None, Some(WITNESS_CAP))
}

pub fn check_recursion(n: u64) -> Result<VerificationReport> {
    Check::Recursion.run(n, None, Some(WITNESS_CAP))
}

pub fn check_yan(n: u64, k: Option<u64>) -> Result<VerificationReport> {
    Check::Yan.run(n, k, Some(WITNESS_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{is_standard, skeleton_generators};

    fn count(r: &Quantity) -> ExactInt {
        match r {
            Quantity::Count { value } => value.clone(),
            other => panic!("expected a count, got {other:?}"),
        }
    }

    fn dist(r: &Quantity) -> Distribution {
        match r {
            Quantity::Distribution { value } => value.clone(),
            other => panic!("expected a distribution, got {other:?}"),
        }
    }

    fn d(pairs: &[(i64, u64)]) -> Distribution {
        pairs.iter().copied().collect()
    }

    #[test]
    fn theorem_examples() {
        let r = check_theorem_main(4).unwrap();
        assert!(r.is_match());
        assert_eq!(count(&r.lhs), ExactInt::from(152));
        let r = check_theorem_main(2).unwrap();
        assert_eq!(count(&r.lhs), ExactInt::from(4));
        assert!(r.is_match());
        assert!(check_theorem_main(1).is_err());
        assert!(check_theorem_main(9).is_err());
    }

    #[test]
    fn spherical_examples() {
        let r = check_spherical_count(4).unwrap();
        assert!(r.is_match());
        assert_eq!(count(&r.lhs), ExactInt::from(27));
        assert_eq!(r.auxiliary.len(), 1);
        let r = check_spherical_count(2).unwrap();
        assert_eq!(count(&r.rhs), ExactInt::from(1));
        let r = check_spherical_count(8).unwrap();
        assert!(r.is_match() && r.auxiliary.is_empty());
        assert_eq!(count(&r.lhs), ExactInt::from(823_543));
    }

    #[test]
    fn conjecture_examples() {
        let r = check_conjecture(4).unwrap();
        assert!(r.is_match());
        assert_eq!(dist(&r.lhs), d(&[(0, 12), (1, 10), (2, 4), (3, 1)]));
        assert_eq!(dist(&check_conjecture(2).unwrap().rhs), d(&[(0, 1)]));
        let r = check_conjecture(6).unwrap();
        assert!(r.is_match(), "{r:?}");
        assert_eq!(dist(&r.rhs).total(), &ExactInt::from(3125));
    }

    #[test]
    fn kreweras_examples() {
        let r = check_kreweras(2).unwrap();
        assert!(r.is_match());
        assert_eq!(dist(&r.lhs), d(&[(0, 2), (1, 1)]));
        let r = check_kreweras(3).unwrap();
        assert_eq!(dist(&r.rhs), d(&[(0, 6), (1, 6), (2, 3), (3, 1)]));
        assert!(r.is_match());
        let r = check_kreweras(1).unwrap();
        assert_eq!(dist(&r.lhs), d(&[(0, 1)]));
        assert!(r.is_match());
        assert!(r.annotations.iter().any(|a| a.contains("C(n+1,2)")));
    }

    #[test]
    fn dispatcher_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("lemma".parse::<Check>().is_err());
        assert!(Check::UCorrespondence.run(3, None, None).is_err());
    }

    #[test]
    fn uncapped_witnesses() {
        let wrong = make_u_nk(5, 1).unwrap();
        let full = u_correspondence_with(5, 3, &wrong).unwrap();
        assert!(full.witnesses.len() > WITNESS_CAP);
        let capped = check_u_correspondence_with(5, 3, &wrong).unwrap();
        assert_eq!(capped.witnesses.len(), WITNESS_CAP);
        assert_eq!(&full.witnesses[..WITNESS_CAP], &capped.witnesses[..]);
    }

    #[test]
    fn u_correspondence_examples() {
        for (n, k, size) in [(4, 3, 125), (4, 2, 152), (3, 0, 27)] {
            let r = check_u_correspondence(n, k).unwrap();
            assert!(r.is_match(), "{r:?}");
            assert_eq!(count(&r.lhs), ExactInt::from(size));
            assert!(r.auxiliary.iter().all(|c| c.matches));
        }
        assert!(check_u_correspondence(3, 3).is_err());
    }

    #[test]
    fn raised_set_examples() {
        let r = check_raised_set_formula(4).unwrap();
        assert!(r.is_match());
        assert_eq!(dist(&r.lhs).get(2), ExactInt::from(8));
        assert_eq!(dist(&r.lhs).get(4), ExactInt::from(1));
        let r = check_raised_set_formula(3).unwrap();
        assert_eq!(count(&r.auxiliary[0].lhs), ExactInt::from(27));
        assert_eq!(count(&r.auxiliary[0].lhs), rhs_eq5(3).unwrap());
    }

    #[test]
    fn identity_checks() {
        for r in [
            check_eq2(4),
            check_eq4(4),
            check_eq5(3),
            check_recursion(6),
            check_yan(4, Some(2)),
            check_yan(4, None),
        ] {
            let r = r.unwrap();
            assert!(r.is_match(), "{r:?}");
        }
        assert_eq!(count(&check_eq2(4).unwrap().lhs), ExactInt::from(27));
        assert!(check_eq2(1).is_err());
        assert!(check_yan(4, Some(4)).is_err());
    }

    #[test]
    fn reports_are_deterministic_up_to_timing() {
        let strip = |mut r: VerificationReport| {
            r.elapsed_ms = None;
            r
        };
        assert_eq!(
            strip(check_conjecture(5).unwrap()),
            strip(check_conjecture(5).unwrap())
        );
        assert_eq!(
            strip(check_theorem_main(5).unwrap()),
            strip(check_theorem_main(5).unwrap())
        );
    }

    #[test]
    fn falsified_counts_mismatch() {
        let mut r = check_eq2(5).unwrap();
        r.falsify_rhs();
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert!(r.witnesses.is_empty());
        let mut r = check_conjecture(4).unwrap();
        r.falsify_rhs();
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert_eq!(
            r.witnesses,
            vec![Witness::Bucket {
                key: 0,
                lhs: ExactInt::from(12),
                rhs: ExactInt::from(13)
            }]
        );
    }

    // A wrong weight vector must produce witnesses that really separate the
    // two membership tests.
    #[test]
    fn mismatch_witnesses_replay() {
        let n = 4;
        let gens = skeleton_generators(n, 2).unwrap();
        let wrong = make_u_nk(n, 1).unwrap();
        let r = check_u_correspondence_with(n as u64, 2, &wrong).unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert!(!r.witnesses.is_empty() && r.witnesses.len() <= WITNESS_CAP);
        for w in &r.witnesses {
            let Witness::Element { entries, only_in } = w else {
                panic!("unexpected witness {w:?}");
            };
            let s = Sequence::new(entries.clone()).unwrap();
            let standard = is_standard(&s, &gens).unwrap();
            let parking = is_u_parking_function(&s, &wrong).unwrap();
            assert_ne!(standard, parking, "{s}");
            assert_eq!(standard, *only_in == Side::Lhs);
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = check_kreweras(3).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
