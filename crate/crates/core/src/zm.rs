//! The metacyclic groups `ZM(m, n, r) = ⟨a, b | a^m = b^n = 1, b⁻¹ab = a^r⟩`
//! and their subgroup lattice.
//!
//! Elements are kept in the normal form `b^x a^y`. From `b⁻¹ab = a^r` one gets
//! `a·b^x = b^x·a^(r^x)`, so
//!
//! ```text
//! b^x1 a^y1 · b^x2 a^y2 = b^(x1+x2) a^(y1·r^x2 + y2)
//! ```
//!
//! Subgroups are indexed by triples `(m1, n1, s)` with `m1 | m`, `n1 | n`,
//! `0 <= s < m1` and `m1 | s·(r^n - 1)/(r^n1 - 1)`; the triple names
//! `⟨a^m1, b^n1 a^s⟩`, a subgroup of order `mn/(m1·n1)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::group_engine::{generate_group, FiniteGroup, GroupError, Permutation};
use crate::numtheory::{divisors, euler_totient, gcd, geometric_sum_mod, mod_pow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZmError {
    #[error("{0} must be positive")]
    Zero(&'static str),
    #[error("invalid ZM parameters: {}", describe(.0))]
    Invalid(Vec<ConditionCheck>),
    #[error("triple {triple} is not in the subgroup lattice of {params}")]
    NotInLattice {
        params: ZmParams,
        triple: LatticeTriple,
    },
}

fn describe(violations: &[ConditionCheck]) -> String {
    violations
        .iter()
        .map(|c| c.detail.as_str())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// gcd(m, n) = 1
    MnCoprime,
    /// gcd(m, r - 1) = 1
    RMinusOneCoprime,
    /// r^n ≡ 1 (mod m)
    RPowerIsOne,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::MnCoprime => "gcd(m,n)=1",
            Condition::RMinusOneCoprime => "gcd(m,r-1)=1",
            Condition::RPowerIsOne => "r^n≡1 (mod m)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: Condition,
    pub holds: bool,
    pub detail: String,
}

/// Evaluates all three conditions on `(m, n, r)`; `r` is reduced mod `m`.
pub fn check_conditions(m: u64, n: u64, r: i64) -> Result<(u64, Vec<ConditionCheck>), ZmError> {
    if m == 0 {
        return Err(ZmError::Zero("m"));
    }
    if n == 0 {
        return Err(ZmError::Zero("n"));
    }
    let r = (r as i128).rem_euclid(m as i128) as u64;
    let g_mn = gcd(m, n);
    let g_r = gcd(m, (r + m - 1) % m);
    let power = mod_pow(r, n, m).expect("m >= 1");
    let checks = vec![
        ConditionCheck {
            condition: Condition::MnCoprime,
            holds: g_mn == 1,
            detail: if g_mn == 1 {
                "gcd(m,n)=1".to_string()
            } else {
                format!("gcd(m,n)={g_mn} ≠ 1")
            },
        },
        ConditionCheck {
            condition: Condition::RMinusOneCoprime,
            holds: g_r == 1,
            detail: if g_r == 1 {
                "gcd(m,r-1)=1".to_string()
            } else {
                format!("gcd(m,r-1)={g_r} ≠ 1")
            },
        },
        ConditionCheck {
            condition: Condition::RPowerIsOne,
            holds: power == 1 % m,
            detail: if power == 1 % m {
                "r^n≡1 (mod m)".to_string()
            } else {
                format!("r^n≡{power} (mod m), not 1")
            },
        },
    ];
    Ok((r, checks))
}

/// Validated `(m, n, r)` with `r` stored as its residue in `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZmParams {
    m: u64,
    n: u64,
    r: u64,
}

pub fn validate_zm_params(m: u64, n: u64, r: i64) -> Result<ZmParams, ZmError> {
    let (r, checks) = check_conditions(m, n, r)?;
    let violations: Vec<ConditionCheck> = checks.into_iter().filter(|c| !c.holds).collect();
    if violations.is_empty() {
        Ok(ZmParams { m, n, r })
    } else {
        Err(ZmError::Invalid(violations))
    }
}

/// All `r` in `[0, m)` making `(m, n, r)` valid; empty when `gcd(m, n) != 1`.
pub fn enumerate_valid_r(m: u64, n: u64) -> Vec<u64> {
    if m == 0 || n == 0 || gcd(m, n) != 1 {
        return Vec::new();
    }
    (0..m)
        .filter(|&r| validate_zm_params(m, n, r as i64).is_ok())
        .collect()
}

/// `b^x a^y` with `0 <= x < n`, `0 <= y < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZmElement {
    pub x: u64,
    pub y: u64,
}

impl ZmElement {
    pub const IDENTITY: ZmElement = ZmElement { x: 0, y: 0 };

    pub fn new(x: u64, y: u64) -> Self {
        ZmElement { x, y }
    }
}

impl fmt::Display for ZmElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl ZmParams {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn a(&self) -> ZmElement {
        ZmElement::new(0, 1 % self.m)
    }

    pub fn b(&self) -> ZmElement {
        ZmElement::new(1 % self.n, 0)
    }

    /// `b^x a^y` with both exponents reduced.
    pub fn alpha(&self, x: u64, y: u64) -> ZmElement {
        ZmElement::new(x % self.n, y % self.m)
    }

    pub fn contains(&self, e: ZmElement) -> bool {
        e.x < self.n && e.y < self.m
    }

    /// `(x1, y1)·(x2, y2) = (x1 + x2 mod n, y1·r^x2 + y2 mod m)`.
    pub fn mul(&self, e1: ZmElement, e2: ZmElement) -> ZmElement {
        let twist = mod_pow(self.r, e2.x, self.m).expect("m >= 1");
        let y = (e1.y as u128 * twist as u128 + e2.y as u128) % self.m as u128;
        ZmElement::new((e1.x + e2.x) % self.n, y as u64)
    }

    pub fn pow(&self, e: ZmElement, mut k: u64) -> ZmElement {
        let mut acc = ZmElement::IDENTITY;
        let mut base = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `t >= 1` with `e^t` the identity, by repeated multiplication.
    pub fn element_order(&self, e: ZmElement) -> u64 {
        let mut t = 1;
        let mut acc = e;
        while acc != ZmElement::IDENTITY {
            acc = self.mul(acc, e);
            t += 1;
        }
        t
    }

    /// All `mn` elements, `x` major.
    pub fn elements(&self) -> impl Iterator<Item = ZmElement> + '_ {
        (0..self.n).flat_map(move |x| (0..self.m).map(move |y| ZmElement::new(x, y)))
    }

    /// Point index of `e` in the regular permutation representation.
    pub fn point(&self, e: ZmElement) -> usize {
        (e.x * self.m + e.y) as usize
    }

    pub fn element_at_point(&self, point: usize) -> ZmElement {
        let p = point as u64;
        ZmElement::new(p / self.m, p % self.m)
    }

    /// Closure of `gens` under multiplication.
    pub fn generated_by(&self, gens: &[ZmElement]) -> BTreeSet<ZmElement> {
        let mut members = BTreeSet::from([ZmElement::IDENTITY]);
        let mut queue = VecDeque::from([ZmElement::IDENTITY]);
        while let Some(h) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(h, g);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        members
    }
}

impl fmt::Display for ZmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZM({},{},{})", self.m, self.n, self.r)
    }
}

/// `ZM(m, n, r)` as a permutation group, with the element correspondence.
#[derive(Debug, Clone)]
pub struct ZmOracle {
    params: ZmParams,
    group: FiniteGroup,
    // group index of the element at each point
    index_by_point: Vec<usize>,
}

/// Right-regular action on the `mn` normal forms.
pub fn to_permutation_group(p: ZmParams, cap: usize) -> Result<ZmOracle, GroupError> {
    let order = p.order();
    if order > cap as u64 {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let gens = [p.a(), p.b()]
        .into_iter()
        .filter(|&g| g != ZmElement::IDENTITY)
        .map(|g| {
            Permutation::from_image(p.elements().map(|h| p.point(p.mul(h, g))).collect())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let group = generate_group(order as usize, gens, cap)?;
    let mut index_by_point = vec![0; group.order()];
    for (i, perm) in group.elements().iter().enumerate() {
        // the identity point is sent to the element itself
        index_by_point[perm.apply(0)] = i;
    }
    Ok(ZmOracle {
        params: p,
        group,
        index_by_point,
    })
}

impl ZmOracle {
    pub fn params(&self) -> ZmParams {
        self.params
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn index_of(&self, e: ZmElement) -> usize {
        self.index_by_point[self.params.point(e)]
    }

    pub fn element_of(&self, index: usize) -> ZmElement {
        let perm = &self.group.elements()[index];
        self.params.element_at_point(perm.apply(0))
    }
}

/// `(m1, n1, s)`: one subgroup of `ZM(m, n, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeTriple {
    pub m1: u64,
    pub n1: u64,
    pub s: u64,
}

impl LatticeTriple {
    pub fn new(m1: u64, n1: u64, s: u64) -> Self {
        LatticeTriple { m1, n1, s }
    }
}

impl fmt::Display for LatticeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m1, self.n1, self.s)
    }
}

/// `Σ_{k < n/n1} r^(k·n1) mod m1`, the reduced `(r^n - 1)/(r^n1 - 1)`.
fn lattice_multiplier(p: &ZmParams, m1: u64, n1: u64) -> u64 {
    geometric_sum_mod(p.r, n1, p.n / n1, m1).expect("m1 >= 1")
}

pub fn in_lattice(p: &ZmParams, t: LatticeTriple) -> bool {
    t.m1 >= 1
        && t.n1 >= 1
        && p.m.is_multiple_of(t.m1)
        && p.n.is_multiple_of(t.n1)
        && t.s < t.m1
        && (t.s as u128 * lattice_multiplier(p, t.m1, t.n1) as u128).is_multiple_of(t.m1 as u128)
}

/// Every lattice triple, ordered by `(m1, n1, s)`.
pub fn lattice_triples(p: &ZmParams) -> Vec<LatticeTriple> {
    let mut out = Vec::new();
    for m1 in divisors(p.m).expect("m >= 1") {
        for n1 in divisors(p.n).expect("n >= 1") {
            let t = lattice_multiplier(p, m1, n1);
            out.extend(
                (0..m1)
                    .filter(|&s| (s as u128 * t as u128).is_multiple_of(m1 as u128))
                    .map(|s| LatticeTriple::new(m1, n1, s)),
            );
        }
    }
    out
}

fn require_lattice(p: &ZmParams, t: LatticeTriple) -> Result<(), ZmError> {
    if in_lattice(p, t) {
        Ok(())
    } else {
        Err(ZmError::NotInLattice {
            params: *p,
            triple: t,
        })
    }
}

/// Members of `⟨a^m1, b^n1 a^s⟩`, by generator closure.
pub fn subgroup_of_triple(
    p: &ZmParams,
    t: LatticeTriple,
) -> Result<BTreeSet<ZmElement>, ZmError> {
    require_lattice(p, t)?;
    Ok(p.generated_by(&[p.alpha(0, t.m1), p.alpha(t.n1, t.s)]))
}

/// `⋃_{k=1}^{n/n1} (b^n1 a^s)^k ⟨a^m1⟩`, the coset form of the same subgroup.
pub fn coset_union(p: &ZmParams, t: LatticeTriple) -> Result<BTreeSet<ZmElement>, ZmError> {
    require_lattice(p, t)?;
    let kernel: Vec<ZmElement> = (0..p.m / t.m1).map(|j| p.alpha(0, j * t.m1)).collect();
    let g = p.alpha(t.n1, t.s);
    let mut out = BTreeSet::new();
    for k in 1..=p.n / t.n1 {
        let gk = p.pow(g, k);
        out.extend(kernel.iter().map(|&h| p.mul(gk, h)));
    }
    Ok(out)
}

/// `mn / (m1·n1)`.
pub fn subgroup_order_formula(p: &ZmParams, t: LatticeTriple) -> u64 {
    p.order() / (t.m1 * t.n1)
}

/// The subgroup is cyclic iff `b^n1 a^s` centralizes `a^m1`, i.e.
/// `r^n1 ≡ 1 (mod m/m1)`.
pub fn is_cyclic_triple(p: &ZmParams, t: LatticeTriple) -> bool {
    let kernel = p.m / t.m1;
    mod_pow(p.r, t.n1, kernel).expect("kernel order >= 1") == 1 % kernel
}

/// One row of the lattice listing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEntry {
    pub triple: LatticeTriple,
    pub order: u64,
    pub cyclic: bool,
    pub phi_value: u64,
    pub members: Option<BTreeSet<ZmElement>>,
}

pub fn lattice(p: &ZmParams, with_members: bool) -> Vec<LatticeEntry> {
    lattice_triples(p)
        .into_iter()
        .map(|triple| {
            let order = subgroup_order_formula(p, triple);
            let cyclic = is_cyclic_triple(p, triple);
            LatticeEntry {
                triple,
                order,
                cyclic,
                phi_value: if cyclic {
                    euler_totient(order).expect("order >= 1")
                } else {
                    0
                },
                members: with_members.then(|| {
                    subgroup_of_triple(p, triple).expect("triple comes from the lattice")
                }),
            }
        })
        .collect()
}

/// `S(ZM(m, n, r))` from the lattice: `Σ φ(|H|)` over the cyclic entries.
pub fn s_function_formula(p: &ZmParams) -> u64 {
    lattice(p, false).iter().map(|e| e.phi_value).sum()
}
