//! Exit criteria for the library, one line per criterion.
//!
//! Run with `cargo test -p spherical-parking --test acceptance -- --nocapture`
//! to see the pass/fail lines.

// Criterion lines go straight to the process stdout so they show up even
// when the harness captures test output.
macro_rules! report {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use spherical_parking::arbor::{
    enumerate_uprooted, uprooted_statistic_distribution, TreeStatistic,
};
use spherical_parking::crosscheck::{check_conjecture, check_kreweras, Witness};
use spherical_parking::ideal::{
    count_standard, count_standard_by_raised_set, standard_with_raised_set,
};
use spherical_parking::identity::{
    binomial, catalan, enumerate_index_tuples, eq2_term, eq4_term, f_closed, power, rhs_eq2,
    rhs_eq4, rhs_eq5, yan_count, ForestTable,
};
use spherical_parking::seqcore::{
    count_spherical_by_profiles, expand_profile, spherical_by_filter, spherical_profiles,
};
use spherical_parking::{Distribution, ExactInt, Sequence};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(v: u64) -> ExactInt {
    ExactInt::from(v)
}

fn pw(b: u64, e: u64) -> ExactInt {
    power(b as i64, e as u32)
}

fn dist(pairs: &[(i64, u64)]) -> Distribution {
    pairs.iter().copied().collect()
}

fn theorem_reproduction() -> Outcome {
    for n in 2..=7usize {
        let brute = int(count_standard(n, n - 2).map_err(|e| e.to_string())?);
        let closed = pw(n as u64 + 1, n as u64 - 1) + pw(n as u64 - 1, n as u64 - 1);
        ensure(brute == closed, || {
            format!("n = {n}: brute {brute} vs closed {closed}")
        })?;
    }
    let four = count_standard(4, 2).unwrap();
    ensure(four == 152, || {
        format!("n = 4 gave {four}, expected 5^3 + 3^3 = 152")
    })
}

fn spherical_count() -> Outcome {
    for n in 2..=8usize {
        let profiles = count_spherical_by_profiles(n);
        let expect = pw(n as u64 - 1, n as u64 - 1);
        ensure(profiles == expect, || {
            format!("n = {n}: profiles give {profiles}, expected {expect}")
        })?;
        if n <= 7 {
            let expanded: BTreeSet<Sequence> = spherical_profiles(n)
                .iter()
                .flat_map(|p| expand_profile(&p.sorted).collect::<Vec<_>>())
                .collect();
            let filtered: BTreeSet<Sequence> = spherical_by_filter(n).collect();
            ensure(expanded == filtered, || {
                format!("n = {n}: profile expansion and naive filter differ")
            })?;
        }
    }
    let mut breakdown: Vec<ExactInt> = spherical_profiles(4)
        .into_iter()
        .map(|p| p.multiplicity)
        .collect();
    breakdown.sort();
    ensure(breakdown == [1, 4, 4, 6, 12].map(int), || {
        format!("n = 4 multiplicities {breakdown:?}")
    })
}

fn identity_suite() -> Outcome {
    for n in 2..=15u64 {
        let expect = pw(n - 1, n - 1);
        let (a, b) = (rhs_eq2(n).unwrap(), rhs_eq4(n).unwrap());
        ensure(a == expect && b == expect, || {
            format!("n = {n}: eq2 {a}, eq4 {b}, expected {expect}")
        })?;
    }
    for n in 1..=14u64 {
        let v = rhs_eq5(n).unwrap();
        ensure(v == pw(n, n), || format!("eq5 n = {n}: {v}"))?;
    }
    let table = ForestTable::new(14);
    for n in 1..=14u64 {
        for s in 0..=n {
            let (r, c) = (table.get(n, s).unwrap(), f_closed(n, s).unwrap());
            ensure(*r == c, || format!("F({n},{s}): recursion {r}, closed {c}"))?;
        }
    }
    for n in 2..=12u64 {
        let count = enumerate_index_tuples(n).unwrap().count();
        // C_m = C(2m, m) / (m + 1) with m = n - 1
        let m = n as i64 - 1;
        let cat = binomial(2 * m, m).unwrap() / (m + 1);
        ensure(int(count as u64) == cat && cat == catalan(n - 1), || {
            format!("n = {n}: {count} tuples, Cat(n-1) = {cat}")
        })?;
    }
    let tuples: Vec<_> = enumerate_index_tuples(4).unwrap().collect();
    let eq2: Vec<ExactInt> = tuples.iter().map(|t| eq2_term(4, t)).collect();
    let eq4: Vec<ExactInt> = tuples.iter().map(|t| eq4_term(4, t)).collect();
    ensure(eq2 == [1, 4, 6, 4, 12].map(int), || {
        format!("eq2 terms {eq2:?}")
    })?;
    ensure(eq4 == [6, 6, 3, 6, 6].map(int), || {
        format!("eq4 terms {eq4:?}")
    })
}

fn tree_suite() -> Outcome {
    for n in 2..=7usize {
        let count = enumerate_uprooted(n).count() as u64;
        let expect = (n as u64 - 1).pow(n as u32 - 1);
        ensure(count == expect, || {
            format!("n = {n}: {count} uprooted trees, expected {expect}")
        })?;
    }
    let four = uprooted_statistic_distribution(4, TreeStatistic::RootDegree).unwrap();
    ensure(four == dist(&[(1, 18), (2, 8), (3, 1)]), || {
        format!("n = 4 root degrees {four}")
    })?;
    for n in 3..=7u64 {
        let d = uprooted_statistic_distribution(n as usize, TreeStatistic::RootDegree).unwrap();
        for s in 1..n {
            let expect = binomial(n as i64, s as i64 + 1).unwrap() * f_closed(n - 1, s).unwrap();
            let got = d.get(s as i64);
            ensure(got == expect, || {
                format!("n = {n}, s = {s}: {got} trees, expected {expect}")
            })?;
        }
    }
    Ok(())
}

fn conjecture() -> Outcome {
    for n in 2..=6u64 {
        let r = check_conjecture(n).map_err(|e| e.to_string())?;
        ensure(r.is_match(), || {
            let w: Vec<String> = r
                .witnesses
                .iter()
                .map(|w| match w {
                    Witness::Bucket { key, lhs, rhs } => format!("k={key}: {lhs} vs {rhs}"),
                    other => format!("{other:?}"),
                })
                .collect();
            format!(
                "n = {n}: {} vs {}; witnesses {}",
                r.lhs,
                r.rhs,
                w.join("; ")
            )
        })?;
        if n == 4 {
            let expect = dist(&[(0, 12), (1, 10), (2, 4), (3, 1)]);
            let want = spherical_parking::crosscheck::Quantity::Distribution { value: expect };
            ensure(r.lhs == want && r.rhs == want, || {
                format!("n = 4: {} / {}", r.lhs, r.rhs)
            })?;
        }
    }
    Ok(())
}

fn kreweras() -> Outcome {
    for n in 2..=5u64 {
        let r = check_kreweras(n).map_err(|e| e.to_string())?;
        ensure(r.is_match(), || format!("n = {n}: {} vs {}", r.lhs, r.rhs))?;
        if n == 3 {
            let want = spherical_parking::crosscheck::Quantity::Distribution {
                value: dist(&[(0, 6), (1, 6), (2, 3), (3, 1)]),
            };
            ensure(r.lhs == want && r.rhs == want, || {
                format!("n = 3: {} / {}", r.lhs, r.rhs)
            })?;
        }
    }
    Ok(())
}

fn yan_consistency() -> Outcome {
    for n in 2..=7u64 {
        for k in 0..n {
            let brute = int(count_standard(n as usize, k as usize).unwrap());
            let formula = yan_count(n, k).unwrap();
            ensure(brute == formula, || {
                format!("n = {n}, k = {k}: brute {brute}, Yan {formula}")
            })?;
        }
    }
    for n in 3..=12u64 {
        let formula = yan_count(n, n - 2).unwrap();
        let expect = pw(n + 1, n - 1) + pw(n - 1, n - 1);
        ensure(formula == expect, || {
            format!("n = {n}: Yan {formula}, expected {expect}")
        })?;
    }
    Ok(())
}

fn proof_machinery() -> Outcome {
    let raised: BTreeSet<usize> = [1, 2].into_iter().collect();
    let found: BTreeSet<Vec<u32>> = standard_with_raised_set(5, &raised)
        .unwrap()
        .into_iter()
        .map(Sequence::into_entries)
        .collect();
    let listed: BTreeSet<Vec<u32>> = [
        "33111", "34111", "43111", "32111", "23111", "42111", "24111", "22111",
    ]
    .iter()
    .map(|s| s.bytes().map(|b| u32::from(b - b'0')).collect())
    .collect();
    ensure(found == listed, || {
        format!("raised {{1,2}} on 5 variables gave {found:?}")
    })?;
    ensure(f_closed(4, 2).unwrap() == int(8), || "F(4,2) != 8".into())?;
    for n in 2..=6u64 {
        let mut total = ExactInt::from(0);
        for s in 1..=n {
            let raised: BTreeSet<usize> = (1..=(n - s) as usize).collect();
            let c = count_standard_by_raised_set(n as usize + 1, &raised).unwrap();
            total += binomial(n as i64 + 1, s as i64 + 1).unwrap() * c;
        }
        ensure(total == pw(n, n), || {
            format!("n = {n}: weighted raised-set sum {total}")
        })?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, &'static str, fn() -> Outcome, u64);
    let criteria: [Criterion; 8] = [
        (
            "1",
            "standard monomials of M_n^(n-2), n = 2..7",
            theorem_reproduction,
            30,
        ),
        (
            "2",
            "spherical count via profiles, n = 2..8",
            spherical_count,
            30,
        ),
        (
            "3",
            "identity suite (eq2, eq4, eq5, recursion, Catalan)",
            identity_suite,
            5,
        ),
        (
            "4",
            "uprooted trees and root-degree refinement",
            tree_suite,
            60,
        ),
        (
            "5",
            "surface inversions vs spherical degree, n = 2..6",
            conjecture,
            30,
        ),
        (
            "6",
            "Kreweras degree/inversion duality, n = 2..5",
            kreweras,
            10,
        ),
        ("7", "Yan's formula vs brute force", yan_consistency, 60),
        (
            "8",
            "raised-set counts reproduce F(n,s)",
            proof_machinery,
            30,
        ),
    ];
    let mut failed = Vec::new();
    for (id, name, run, budget_s) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(budget_s), || {
                format!("took {:.2?}, budget {budget_s} s", elapsed)
            })
        });
        match &outcome {
            Ok(()) => report!("[PASS] criterion {id}: {name} ({elapsed:.2?})"),
            Err(why) => {
                report!("[FAIL] criterion {id}: {name}: {why}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
