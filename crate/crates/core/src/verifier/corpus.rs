use std::collections::BTreeSet;

use super::descriptor::{Family, GroupDesc, GroupSpec};
use crate::numtheory::{gcd, mod_pow};
use crate::zm::{enumerate_valid_r, validate_zm_params};

/// Deterministic corpus of groups of order at most `max_order`, sorted by label.
///
/// The trivial group appears once: as `cyclic:1` when the cyclic family is
/// selected, otherwise as `zm:1,1,0`.
pub fn build_corpus(max_order: u64, families: &BTreeSet<Family>) -> Vec<GroupSpec> {
    let k = max_order;
    let mut out: Vec<GroupDesc> = Vec::new();
    let has = |f: Family| families.contains(&f);

    if has(Family::Cyclic) {
        out.extend((1..=k).map(GroupDesc::Cyclic));
    }
    if has(Family::Dihedral) {
        out.extend((2..=k / 2).map(GroupDesc::Dihedral));
    }
    if has(Family::Dicyclic) {
        out.extend((2..=k / 4).map(GroupDesc::Dicyclic));
    }
    if has(Family::Symmetric) {
        let named = [
            GroupDesc::Symmetric(3),
            GroupDesc::Symmetric(4),
            GroupDesc::Symmetric(5),
            GroupDesc::Alternating(4),
            GroupDesc::Alternating(5),
        ];
        out.extend(named.into_iter().filter(|d| d.order() <= k));
    }
    if has(Family::Zm) {
        for m in 1..=k {
            for n in 1..=k / m {
                if m * n == 1 && has(Family::Cyclic) {
                    continue;
                }
                for r in enumerate_valid_r(m, n) {
                    let p = validate_zm_params(m, n, r as i64).expect("r was enumerated as valid");
                    out.push(GroupDesc::Zm(p));
                }
            }
        }
    }
    if has(Family::Metacyclic) {
        // the non-ZM ones: Z_m ⋊ Z_n with a coprimality condition failing
        for m in 2..=k {
            for n in 2..=k / m {
                for r in 1..m {
                    let acts = mod_pow(r, n, m).expect("m >= 2") == 1;
                    let zm_like = gcd(m, n) == 1 && gcd(m, r - 1) == 1;
                    if acts && !zm_like {
                        out.push(GroupDesc::Metacyclic { m, n, r });
                    }
                }
            }
        }
    }
    if has(Family::Product) {
        out.extend(abelian_products(k));
        let nonabelian = [GroupDesc::Symmetric(3), GroupDesc::Dicyclic(2), GroupDesc::Alternating(4)];
        for base in nonabelian {
            let base_order = base.order();
            out.extend(
                (2..=k / base_order)
                    .map(|c| GroupDesc::Product(vec![base.clone(), GroupDesc::Cyclic(c)])),
            );
        }
        let s3 = GroupDesc::Symmetric(3);
        if s3.order() * s3.order() <= k {
            out.push(GroupDesc::Product(vec![s3.clone(), s3]));
        }
    }

    let mut specs: Vec<GroupSpec> = out.into_iter().map(GroupSpec::new).collect();
    specs.sort_by(|a, b| a.label().cmp(b.label()));
    specs.dedup_by(|a, b| a.label() == b.label());
    specs
}

// Z_a × Z_b (× Z_c) with 2 <= a <= b <= c.
fn abelian_products(k: u64) -> Vec<GroupDesc> {
    let mut out = Vec::new();
    for a in 2..=k {
        for b in a..=k / a {
            out.push(GroupDesc::Product(vec![GroupDesc::Cyclic(a), GroupDesc::Cyclic(b)]));
            for c in b..=k / (a * b) {
                out.push(GroupDesc::Product(vec![
                    GroupDesc::Cyclic(a),
                    GroupDesc::Cyclic(b),
                    GroupDesc::Cyclic(c),
                ]));
            }
        }
    }
    out
}
