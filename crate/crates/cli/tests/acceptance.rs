//! Runs every acceptance criterion through the verification suite and
//! prints one PASS/FAIL line per criterion, with its witnesses.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ramcalc::suite::{self, Golden};

const BUDGET: Duration = Duration::from_secs(60);

fn main() -> ExitCode {
    let golden = Golden::default();
    let on_disk = Golden::from_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/golden").as_ref());
    let mut failed = 0;
    if on_disk.is_err() {
        println!("FAIL golden directory unreadable: {:?}", on_disk.err());
        failed += 1;
    }

    let mut criteria: Vec<u8> = suite::checks().iter().map(|c| c.criterion).collect();
    criteria.dedup();
    assert_eq!(criteria, (1..=9).collect::<Vec<u8>>(), "one check per criterion");

    let started = Instant::now();
    for def in suite::checks() {
        let t = Instant::now();
        let outcome = suite::run_check(def, &golden);
        let elapsed = t.elapsed();
        let within = elapsed < BUDGET;
        let pass = outcome.pass && within;
        println!(
            "{} criterion {}: {} ({} cases, {:.1}s)",
            if pass { "PASS" } else { "FAIL" },
            outcome.criterion,
            outcome.id,
            outcome.cases,
            elapsed.as_secs_f64()
        );
        for n in &outcome.notes {
            println!("      {n}");
        }
        for f in outcome.failures.iter().take(10) {
            println!("      failure: {f}");
        }
        if !within {
            println!("      failure: over the {}s budget", BUDGET.as_secs());
        }
        if !pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} criteria, {failed} failed, {:.1}s",
        suite::checks().len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
