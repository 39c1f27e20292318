//! End-to-end acceptance run: one PASS/FAIL line per criterion, each under
//! its own time limit. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclorep::verify::{run_suite, Check, Suite, VerifyOptions};

struct Criterion {
    id: u8,
    title: &'static str,
    suite: Suite,
    limit: Duration,
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        title: "cyclotomic product identity, flatness census, height of Phi_105",
        suite: Suite::Cyclotomic,
        limit: Duration::from_secs(10),
    },
    Criterion {
        id: 2,
        title: "Ramanujan sums against the root-sum residue oracle",
        suite: Suite::Ramanujan,
        limit: Duration::from_secs(60),
    },
    Criterion {
        id: 3,
        title: "Newton-Girard recursion reproduces Phi_n",
        suite: Suite::NewtonGirard,
        limit: Duration::from_secs(30),
    },
    Criterion {
        id: 4,
        title: "exact minimum degree for two-prime moduli",
        suite: Suite::TwoPrime,
        limit: Duration::from_secs(300),
    },
    Criterion {
        id: 5,
        title: "empty for prime powers without search",
        suite: Suite::Emptiness,
        limit: Duration::from_secs(1),
    },
    Criterion {
        id: 6,
        title: "bound sandwich at n = 30",
        suite: Suite::Sandwich,
        limit: Duration::from_secs(600),
    },
    Criterion {
        id: 7,
        title: "Cayley subfield law and J = g(A) for p <= 31",
        suite: Suite::Cayley,
        limit: Duration::from_secs(120),
    },
    Criterion {
        id: 8,
        title: "symmetric representation and path/cycle spectra",
        suite: Suite::Symmetric,
        limit: Duration::from_secs(60),
    },
    Criterion {
        id: 9,
        title: "bijection round-trip and statistic necessity",
        suite: Suite::Bijection,
        limit: Duration::from_secs(60),
    },
];

fn main() -> ExitCode {
    let options = VerifyOptions::default();
    let mut all_passed = true;
    for c in &CRITERIA {
        let start = Instant::now();
        let checks: Vec<Check> = run_suite(c.suite, &options);
        let elapsed = start.elapsed();
        let failed: Vec<&Check> = checks.iter().filter(|k| !k.passed).collect();
        let in_time = elapsed <= c.limit;
        let passed = !checks.is_empty() && failed.is_empty() && in_time;
        all_passed &= passed;
        println!(
            "{} criterion {}: {} ({} checks, {:.2}s of {}s)",
            if passed { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            checks.len(),
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for k in failed {
            println!("    {}: {}", k.name, k.detail);
        }
        if !in_time {
            println!("    exceeded the time limit");
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
