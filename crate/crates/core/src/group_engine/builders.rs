//! Standard families as permutation groups.

use super::{generate_group, FiniteGroup, GroupError, Permutation};
use crate::numtheory::mod_pow;

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

/// Right-regular representation of a group given by a multiplication law on
/// `0..order`, generated by the images of `gens`.
fn regular(
    order: usize,
    gens: &[usize],
    law: impl Fn(usize, usize) -> usize,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    if order > cap {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let perms = gens
        .iter()
        .map(|&g| Permutation::from_image((0..order).map(|h| law(h, g)).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    generate_group(order, perms, cap)
}

/// `Z_n` acting on `n` points.
pub fn cyclic_group(n: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(invalid("cyclic group needs n >= 1"));
    }
    let gens = if n == 1 {
        Vec::new()
    } else {
        vec![Permutation::from_image((0..n).map(|i| (i + 1) % n).collect())?]
    };
    generate_group(n, gens, cap)
}

/// Dihedral group of order `2k`: the symmetries of a `k`-gon for `k >= 3`,
/// and the regular representation of `Z_2` / `Z_2 × Z_2` for `k = 1, 2`.
pub fn dihedral_group(k: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    match k {
        0 => Err(invalid("dihedral group needs k >= 1")),
        1 => metacyclic_group(1, 2, 0, cap),
        2 => metacyclic_group(2, 2, 1, cap),
        _ => {
            let rotation = Permutation::from_image((0..k).map(|i| (i + 1) % k).collect())?;
            let reflection = Permutation::from_image((0..k).map(|i| (k - i) % k).collect())?;
            generate_group(k, vec![rotation, reflection], cap)
        }
    }
}

/// Dicyclic group of order `4k`: `⟨a, x | a^2k = 1, x² = a^k, x⁻¹ax = a⁻¹⟩`.
/// `k = 2` is the quaternion group.
pub fn dicyclic_group(k: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if k == 0 {
        return Err(invalid("dicyclic group needs k >= 1"));
    }
    let m = 2 * k;
    // point i + m*j is the normal form a^i x^j
    let law = |h: usize, g: usize| {
        let (i1, j1) = (h % m, h / m);
        let (i2, j2) = (g % m, g / m);
        let twisted = if j1 == 1 { m - i2 } else { i2 };
        let carry = if j1 == 1 && j2 == 1 { k } else { 0 };
        (i1 + twisted + carry) % m + m * ((j1 + j2) % 2)
    };
    regular(2 * m, &[1, m], law, cap)
}

/// Full symmetric group on `n <= 5` points.
pub fn symmetric_group(n: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if !(1..=5).contains(&n) {
        return Err(invalid("symmetric group supported for 1 <= n <= 5"));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle])?);
    }
    generate_group(n, gens, cap)
}

/// Alternating group on `n <= 5` points, generated by the 3-cycles `(0 1 k)`.
pub fn alternating_group(n: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if !(1..=5).contains(&n) {
        return Err(invalid("alternating group supported for 1 <= n <= 5"));
    }
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
        .collect::<Result<Vec<_>, _>>()?;
    generate_group(n, gens, cap)
}

/// `Z_m ⋊ Z_n` with `b⁻¹ab = a^r`, for any `r` with `r^n ≡ 1 (mod m)`.
///
/// Acts on the `mn` normal forms `b^x a^y` (point `x*m + y`) by right
/// multiplication.
pub fn metacyclic_group(m: u64, n: u64, r: u64, cap: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 || n == 0 {
        return Err(invalid("metacyclic group needs m, n >= 1"));
    }
    let r = r % m;
    if mod_pow(r, n, m).expect("m >= 1") != 1 % m {
        return Err(invalid(format!("{r}^{n} is not 1 mod {m}")));
    }
    let order = m.checked_mul(n).ok_or_else(|| invalid("m*n overflows"))?;
    if order > cap as u64 {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let (mu, nu) = (m as usize, n as usize);
    let powers: Vec<usize> = (0..n)
        .map(|x| mod_pow(r, x, m).expect("m >= 1") as usize)
        .collect();
    let law = |h: usize, g: usize| {
        let (x1, y1) = (h / mu, h % mu);
        let (x2, y2) = (g / mu, g % mu);
        ((x1 + x2) % nu) * mu + (y1 * powers[x2] + y2) % mu
    };
    // a = (0, 1), b = (1, 0)
    let gens: Vec<usize> = [1 % mu, if nu > 1 { mu } else { 0 }]
        .into_iter()
        .filter(|&g| g != 0)
        .collect();
    regular(order as usize, &gens, law, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_engine::DEFAULT_ORDER_CAP as CAP;

    fn sorted_orders(g: &FiniteGroup) -> Vec<u64> {
        let mut v = g.element_orders().to_vec();
        v.sort_unstable();
        v
    }

    #[test]
    fn orders_and_exponents() {
        let cases: Vec<(FiniteGroup, usize, u64)> = vec![
            (cyclic_group(1, CAP).unwrap(), 1, 1),
            (cyclic_group(12, CAP).unwrap(), 12, 12),
            (dihedral_group(1, CAP).unwrap(), 2, 2),
            (dihedral_group(2, CAP).unwrap(), 4, 2),
            (dihedral_group(4, CAP).unwrap(), 8, 4),
            (dihedral_group(6, CAP).unwrap(), 12, 6),
            (dicyclic_group(1, CAP).unwrap(), 4, 4),
            (dicyclic_group(2, CAP).unwrap(), 8, 4),
            (dicyclic_group(3, CAP).unwrap(), 12, 12),
            (symmetric_group(3, CAP).unwrap(), 6, 6),
            (symmetric_group(4, CAP).unwrap(), 24, 12),
            (symmetric_group(5, CAP).unwrap(), 120, 60),
            (alternating_group(4, CAP).unwrap(), 12, 6),
            (alternating_group(5, CAP).unwrap(), 60, 30),
            (metacyclic_group(3, 2, 2, CAP).unwrap(), 6, 6),
            (metacyclic_group(4, 2, 3, CAP).unwrap(), 8, 4),
            (metacyclic_group(1, 6, 0, CAP).unwrap(), 6, 6),
        ];
        for (g, order, exp) in cases {
            assert_eq!(g.order(), order);
            assert_eq!(g.exponent(), exp, "order {order}");
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = dicyclic_group(2, CAP).unwrap();
        assert_eq!(sorted_orders(&q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn metacyclic_matches_dihedral() {
        let d4 = metacyclic_group(4, 2, 3, CAP).unwrap();
        assert_eq!(sorted_orders(&d4), sorted_orders(&dihedral_group(4, CAP).unwrap()));
        assert!(metacyclic_group(5, 2, 2, CAP).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(cyclic_group(0, CAP).is_err());
        assert!(symmetric_group(6, CAP).is_err());
        assert_eq!(
            cyclic_group(10, 5).unwrap_err(),
            GroupError::OrderCapExceeded { cap: 5 }
        );
        assert_eq!(
            metacyclic_group(7, 3, 2, 20).unwrap_err(),
            GroupError::OrderCapExceeded { cap: 20 }
        );
    }
}
