// S(G) = Σ φ(H) over all subgroups, by brute force, for a few descriptors.

use std::error::Error;

use zmgroup::verifier::{verify_theorem, Caps, GroupSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let descs = [
        "cyclic:12",
        "symmetric:3",
        "dicyclic:2",
        "product:(cyclic:2)x(cyclic:2)",
        "product:(cyclic:2)x(cyclic:2)x(cyclic:2)",
        "alternating:4",
        "zm:7,3,2",
    ];
    for d in descs {
        let spec: GroupSpec = d.parse()?;
        let r = verify_theorem(&spec, Caps::default())?;
        let kind = if r.equality { "=" } else { ">" };
        println!(
            "{:<42} |G| = {:>2}  φ(G) = {:>2}  S(G) = {:>2} {kind} |G|  sylow cyclic: {}",
            spec.label(),
            r.order,
            r.phi_value,
            r.s_value,
            r.sylow_cyclic
        );
        assert!(r.s_value >= r.order);
        assert_eq!(r.equality, r.sylow_cyclic);
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
