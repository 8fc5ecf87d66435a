// Run every check over the corpus of groups up to a given order.

use std::collections::BTreeSet;
use std::error::Error;

use zmgroup::verifier::{build_corpus, run_corpus, Caps, Family};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let families: BTreeSet<Family> = Family::ALL.into_iter().collect();
    let specs = build_corpus(32, &families);
    let run = run_corpus(&specs, Caps::default(), true);

    let strict: Vec<&str> = run
        .outcomes
        .iter()
        .filter(|o| !o.report.equality && o.report.order <= 12)
        .map(|o| o.report.spec.label())
        .collect();
    println!("strict inequality, order <= 12: {}", strict.join(", "));
    let summary = run.summary();
    println!("{summary}");
    if summary.violations > 0 || summary.errors > 0 {
        return Err("corpus check failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
