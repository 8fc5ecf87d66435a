// Number theory helpers: factorization, totients, divisor sums, orders.

use std::error::Error;

use zmgroup::numtheory::{
    divisors, euler_totient, factorize, geometric_sum_mod, mod_pow, multiplicative_order,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [12u64, 360, 1001, 65536] {
        let f = factorize(n)?;
        let total: u64 = divisors(n)?
            .into_iter()
            .map(euler_totient)
            .sum::<Result<u64, _>>()?;
        println!("{n} = {f}, φ({n}) = {}, Σ_{{d|n}} φ(d) = {total}", euler_totient(n)?);
        assert_eq!(total, n);
    }

    // order of 2 modulo 7 is 3, so 1 + 2^3 + 2^6 + 2^9 ≡ 4 (mod 7)
    let ord = multiplicative_order(2, 7)?;
    let g = geometric_sum_mod(2, 3, 4, 7)?;
    println!("ord_7(2) = {ord}, 2^{ord} mod 7 = {}, Σ 2^(3i) for i<4 mod 7 = {g}", mod_pow(2, ord, 7)?);
    assert_eq!(g, 4);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
