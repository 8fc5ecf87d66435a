// Build permutation groups by closure and enumerate their subgroups.

use std::error::Error;

use zmgroup::group_engine::{
    direct_product, generate_group, symmetric_group, Permutation, DEFAULT_ORDER_CAP,
    DEFAULT_SUBGROUP_CAP,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // S4 from a 4-cycle and a transposition
    let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]])?;
    let t = Permutation::from_cycles(4, &[&[0, 1]])?;
    println!("generators {c} and {t}");
    let s4 = generate_group(4, vec![c, t], DEFAULT_ORDER_CAP)?;
    let subgroups = s4.all_subgroups(DEFAULT_SUBGROUP_CAP)?;
    println!(
        "|S4| = {}, exp = {}, {} subgroups, {} cyclic",
        s4.order(),
        s4.exponent(),
        subgroups.len(),
        s4.cyclic_subgroups().len()
    );
    assert_eq!(subgroups.len(), 30);
    for (order, count) in s4.element_count_by_order().into_iter().filter(|&(_, c)| c > 0) {
        println!("  {count:>2} elements of order {order}");
    }

    let s3 = symmetric_group(3, DEFAULT_ORDER_CAP)?;
    let s3xs3 = direct_product(&s3, &s3, DEFAULT_ORDER_CAP)?;
    println!(
        "S3 x S3: order {}, abelian {}, Sylow subgroups cyclic {}",
        s3xs3.order(),
        s3xs3.is_abelian(),
        s3xs3.is_sylow_cyclic()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
