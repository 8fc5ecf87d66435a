// The subgroup lattice of ZM(m,n,r) from triples (m1, n1, s), checked
// against a permutation representation.

use std::error::Error;

use zmgroup::verifier::{lattice_bijection_report, Caps};
use zmgroup::zm::{self, validate_zm_params};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = validate_zm_params(7, 3, 2)?;
    let a = p.a();
    let b = p.b();
    println!("{p}: a = {a}, b = {b}, b·a = {}, a^2·b = {}", p.mul(b, a), p.mul(p.pow(a, 2), b));

    let entries = zm::lattice(&p, false);
    for e in &entries {
        println!(
            "  {}  order {:>2}  cyclic {:<5}  φ {}",
            e.triple, e.order, e.cyclic, e.phi_value
        );
    }
    let s = zm::s_function_formula(&p);
    println!("S = {s}, |G| = {}", p.order());
    assert_eq!(s, p.order());

    let report = lattice_bijection_report(p, Caps::default())?;
    println!(
        "{} triples, {} subgroups by brute force, bijection {}",
        report.triples,
        report.oracle_subgroups,
        report.holds()
    );
    assert!(report.holds() && report.formula_mismatches.is_empty());

    // a triple that fails the divisibility condition
    let (canonical, checks) = zm::check_conditions(4, 2, 3)?;
    for c in checks.iter().filter(|c| !c.holds) {
        println!("ZM(4,2,{canonical}) rejected: {}", c.detail);
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
