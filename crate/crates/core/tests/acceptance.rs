//! Acceptance suite. Runs every criterion in order, prints one PASS/FAIL
//! line each, and exits non-zero if any fails.

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use coweight::autgroup::{coweight_group, expected_order};
use coweight::burnside::{burnside_count, burnside_count_simplex};
use coweight::cli;
use coweight::duality::verify_dual_counts;
use coweight::enumerate::{count_classes, enumerate_hnf, sublattice_count, Relation};
use coweight::simplex::{simplex_groups, tau, verify_bijection};
use coweight::IntMatrix;

/// Exact comparisons throughout; the only tolerance is on wall-clock time.
const BIJECTION_BUDGET_SECS: f64 = 300.0;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let g = coweight_group::<i64>(2).map_err(|e| e.to_string())?;
    let gp = g.proper_subgroup().map_err(|e| e.to_string())?;
    let beta = count_classes(2, 6, &g).map_err(|e| e.to_string())?;
    let beta_plus = count_classes(2, 6, &gp).map_err(|e| e.to_string())?;
    let t = tau::<i64>(2, 6, false).map_err(|e| e.to_string())?;
    let tp = tau::<i64>(2, 6, true).map_err(|e| e.to_string())?;
    let got = (beta_plus, beta, tp, t);
    check(got == (4, 3, 4, 3), || format!("(beta+, beta, tau+, tau) = {got:?}, expected (4, 3, 4, 3)"))?;
    Ok("beta+ = tau+ = 4, beta = tau = 3 at n=2 k=6".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (n, kmax) in [(2usize, 60u64), (3, 30), (4, 12)] {
        for k in 1..=kmax {
            let r = verify_bijection::<i64>(n, k).map_err(|e| format!("n={n} k={k}: {e}"))?;
            check(r.pass, || format!("n={n} k={k}: {r:?}"))?;
            checked += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs < BIJECTION_BUDGET_SECS, || format!("took {secs:.1}s, budget {BIJECTION_BUDGET_SECS}s"))?;
    Ok(format!("{checked} (n, k) pairs, partitions and counts agree, {secs:.1}s"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for (n, kmax) in [(2usize, 40u64), (3, 40), (4, 10)] {
        let g = coweight_group::<i64>(n).map_err(|e| e.to_string())?;
        let gp = g.proper_subgroup().map_err(|e| e.to_string())?;
        for k in 1..=kmax {
            for (name, grp) in [("isometry", &g), ("proper", &gp)] {
                let orbit = count_classes(n, k, grp).map_err(|e| format!("n={n} k={k} {name}: {e}"))?;
                // burnside_count errors on a non-integer average
                let burnside = burnside_count(grp, n, k).map_err(|e| format!("n={n} k={k} {name}: {e}"))?;
                check(orbit == burnside, || format!("n={n} k={k} {name}: orbit {orbit} vs burnside {burnside}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} counts, all exact integer averages"))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut fcc_bcc = Vec::new();
    for n in 2..=4usize {
        for k in 1..=20u64 {
            for rel in [Relation::Isometry, Relation::ProperIsometry] {
                let r = verify_dual_counts::<i64>(n, k, rel).map_err(|e| format!("n={n} k={k} {rel}: {e}"))?;
                check(r.pass, || format!("n={n} k={k}: {r:?}"))?;
                if n == 3 && rel == Relation::Isometry {
                    fcc_bcc.push(r.count);
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, k, relation) triples; n=3 isometry k=1..20: {fcc_bcc:?}"))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn criterion_5() -> Outcome {
    for n in 2..=6usize {
        let g = coweight_group::<i64>(n).map_err(|e| e.to_string())?;
        let order = 2 * factorial(n + 1);
        check(g.order() == order && expected_order(n) == order, || format!("n={n}: |G| = {}", g.order()))?;
        let gp = g.proper_subgroup().map_err(|e| e.to_string())?;
        check(gp.order() == factorial(n + 1), || format!("n={n}: |G+| = {}", gp.order()))?;
        check(g.elements().iter().all(|m| m.entries().iter().all(|v| (-1..=1).contains(v))), || {
            format!("n={n}: entry outside {{-1, 0, 1}}")
        })?;
        let minus_i = IntMatrix::identity(n).neg().map_err(|e| e.to_string())?;
        check(g.contains(&minus_i), || format!("n={n}: -I missing"))?;
    }
    Ok("n=2..6: orders 2(n+1)! and (n+1)!, entries in {-1,0,1}, -I present".into())
}

fn criterion_6() -> Outcome {
    let mut total = 0u128;
    for n in 1..=4usize {
        for k in 1..=200u64 {
            let streamed = enumerate_hnf::<i64>(n, k).map_err(|e| e.to_string())?.count() as u128;
            let f = sublattice_count(n, k);
            check(streamed == f, || format!("n={n} k={k}: streamed {streamed}, recurrence {f}"))?;
            total += f;
        }
    }
    let spots = (enumerate_hnf::<i64>(2, 6).map_err(|e| e.to_string())?.count(), enumerate_hnf::<i64>(3, 2).map_err(|e| e.to_string())?.count());
    check(spots == (12, 7), || format!("f2(6), f3(2) = {spots:?}"))?;
    Ok(format!("{total} bases streamed for n<=4, k<=200; f2(6)=12, f3(2)=7"))
}

#[derive(Clone, Copy)]
enum Series {
    Sublattice(usize, Relation),
    SimplexUnoriented(usize),
}

/// Reference sequences and how far each is compared.
const REFERENCES: [(&str, Series, u64); 6] = [
    ("A003051", Series::Sublattice(2, Relation::Isometry), 400),
    ("A145394", Series::Sublattice(2, Relation::ProperIsometry), 400),
    ("A159842", Series::Sublattice(3, Relation::Isometry), 80),
    ("A173824", Series::SimplexUnoriented(4), 24),
    ("A173877", Series::SimplexUnoriented(5), 14),
    ("A173878", Series::SimplexUnoriented(6), 8),
];

fn reference_path(id: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata/oeis").join(format!("b{}.txt", &id[1..]))
}

fn parse_bfile(text: &str) -> Result<Vec<(u64, u128)>, String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let idx = it.next().and_then(|s| s.parse().ok());
            let val = it.next().and_then(|s| s.parse().ok());
            idx.zip(val).ok_or_else(|| format!("bad b-file line {l:?}"))
        })
        .collect()
}

fn compute(series: Series, k: u64) -> Result<u128, String> {
    let v = match series {
        Series::Sublattice(n, rel) => {
            let g = coweight::duality::relation_group::<i64>(n, rel).map_err(|e| e.to_string())?;
            count_classes(n, k, &g)
        }
        Series::SimplexUnoriented(n) => {
            let sg = simplex_groups::<i64>(n).map_err(|e| e.to_string())?;
            burnside_count_simplex(&sg.unoriented, n, k)
        }
    };
    v.map(u128::from).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let mut missing = Vec::new();
    let mut compared = Vec::new();
    for (id, series, kmax) in REFERENCES {
        let path = reference_path(id);
        let Ok(text) = fs::read_to_string(&path) else {
            missing.push(id);
            continue;
        };
        let terms = parse_bfile(&text).map_err(|e| format!("{id}: {e}"))?;
        let mut count = 0;
        for (k, expected) in terms.into_iter().filter(|&(k, _)| (1..=kmax).contains(&k)) {
            let got = compute(series, k)?;
            check(got == expected, || format!("{id} k={k}: computed {got}, reference {expected}"))?;
            count += 1;
        }
        check(count > 0, || format!("{id}: no comparable terms in {}", path.display()))?;
        compared.push(format!("{id}:{count}"));
    }
    check(missing.is_empty(), || {
        format!(
            "reference b-files missing: {} (fetch https://oeis.org/AXXXXXX/bXXXXXX.txt into crates/core/testdata/oeis/)",
            missing.join(", ")
        )
    })?;
    Ok(format!("terms matched {}", compared.join(" ")))
}

fn run_cli(args: &[String]) -> Result<Vec<u8>, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("coweight".to_string()).chain(args.iter().cloned()), &mut out, &mut err);
    check(code == cli::EXIT_OK, || format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err)))?;
    Ok(out)
}

fn criterion_8() -> Outcome {
    let max = std::thread::available_parallelism().map_or(1, |p| p.get());
    let commands: [&[&str]; 4] = [
        &["list", "--n", "3", "--k", "12"],
        &["list", "--n", "2", "--k", "30", "--object", "simplex", "--relation", "proper"],
        &["bfile", "--n", "2", "--kmin", "1", "--kmax", "40", "--relation", "proper"],
        &["bfile", "--n", "3", "--kmin", "1", "--kmax", "16", "--object", "simplex"],
    ];
    for cmd in commands {
        let mut outputs = Vec::new();
        for w in [1, 2, max, 1] {
            let mut args: Vec<String> = cmd.iter().map(|s| s.to_string()).collect();
            args.extend(["--workers".to_string(), w.to_string()]);
            outputs.push(run_cli(&args)?);
        }
        check(!outputs[0].is_empty(), || format!("{cmd:?}: empty output"))?;
        check(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{cmd:?}: output differs across worker counts"))?;
    }
    Ok(format!("list and bfile byte-identical for workers 1, 2, {max}"))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, f) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS ({secs:.1}s) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL ({secs:.1}s) {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
