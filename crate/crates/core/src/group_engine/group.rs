use std::collections::{BTreeMap, HashMap, HashSet};

use super::{BitSet, GroupError, Permutation};
use crate::numtheory::{self, euler_totient, factorize};

pub const DEFAULT_ORDER_CAP: usize = 5000;
pub const DEFAULT_SUBGROUP_CAP: usize = 100_000;

/// Groups up to this order get a full Cayley table (`order²` u32 entries).
const TABLE_LIMIT: usize = 2048;

/// A permutation group together with its complete element list.
///
/// Index 0 is the identity; the rest follow breadth-first discovery order
/// from the generators. Products are by index: `mul(i, j)` is element `i`
/// followed by element `j`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
}

/// Breadth-first closure of `generators` under composition.
pub fn generate_group(
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    for g in &generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    // right[k * gens + g] = index of elements[k].then(generators[g])
    let mut right: Vec<u32> = Vec::new();
    // how each element was first reached: (parent, generator)
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];

    let mut next = 0;
    while next < elements.len() {
        for (gi, g) in generators.iter().enumerate() {
            let y = elements[next].then(g);
            let yi = match index.get(&y) {
                Some(&yi) => yi,
                None => {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    let yi = elements.len();
                    index.insert(y.clone(), yi);
                    elements.push(y);
                    parent.push((next, gi));
                    yi
                }
            };
            right.push(yi as u32);
        }
        next += 1;
    }

    let n = elements.len();
    let gens = generators.len();
    let table = (n <= TABLE_LIMIT).then(|| {
        // column j derives from column parent(j) via one generator step
        let mut t = vec![0u32; n * n];
        for i in 0..n {
            t[i * n] = i as u32;
        }
        for (j, &(pj, gj)) in parent.iter().enumerate().skip(1) {
            for i in 0..n {
                let via = t[i * n + pj] as usize;
                t[i * n + j] = right[via * gens + gj];
            }
        }
        t
    });

    let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
    let orders = elements.iter().map(permutation_order).collect();

    Ok(FiniteGroup {
        degree,
        generators,
        elements,
        index,
        table,
        inverses,
        orders,
    })
}

// lcm of cycle lengths
fn permutation_order(p: &Permutation) -> u64 {
    let mut seen = vec![false; p.degree()];
    let mut order = 1u64;
    for start in 0..p.degree() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p.apply(x);
            len += 1;
        }
        order = order / numtheory::gcd(order, len) * len;
    }
    order
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Result<&Permutation, GroupError> {
        self.elements.get(i).ok_or(GroupError::InvalidIndex {
            index: i,
            order: self.order(),
        })
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].then(&self.elements[j])],
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn element_order(&self, i: usize) -> Result<u64, GroupError> {
        self.orders.get(i).copied().ok_or(GroupError::InvalidIndex {
            index: i,
            order: self.order(),
        })
    }

    /// Element orders by index.
    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        exponent_of(self.orders.iter().copied())
    }

    /// Number of elements whose order equals the exponent.
    pub fn phi(&self) -> u64 {
        let exp = self.exponent();
        self.orders.iter().filter(|&&o| o == exp).count() as u64
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.orders.contains(&n)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g])
            .collect();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `n'_d` for every divisor `d` of `|G|`, zero counts included.
    pub fn element_count_by_order(&self) -> BTreeMap<u64, usize> {
        let mut counts: BTreeMap<u64, usize> = numtheory::divisors(self.order() as u64)
            .expect("group order is positive")
            .into_iter()
            .map(|d| (d, 0))
            .collect();
        for &o in &self.orders {
            *counts.get_mut(&o).expect("element order divides group order") += 1;
        }
        counts
    }

    /// Every Sylow subgroup is cyclic iff, for each `p^e` exactly dividing
    /// `|G|`, some element has order `p^e`.
    pub fn is_sylow_cyclic(&self) -> bool {
        let f = factorize(self.order() as u64).expect("group order is positive");
        let present: HashSet<u64> = self.orders.iter().copied().collect();
        let cyclic = f.prime_powers().all(|(_, pe)| present.contains(&pe));
        cyclic
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = BitSet::new(self.order());
        (0..self.order()).for_each(|i| {
            members.insert(i);
        });
        Subgroup {
            members,
            order: self.order(),
            generators: self.generators.iter().map(|g| self.index[g]).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = BitSet::new(self.order());
        members.insert(0);
        Subgroup {
            members,
            order: 1,
            generators: Vec::new(),
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn subgroup_generated_by(&self, gens: &[usize]) -> Result<Subgroup, GroupError> {
        let mut h = self.trivial_subgroup();
        for &g in gens {
            self.element(g)?;
            if !h.contains(g) {
                h = self.join_element(&h, g);
            }
        }
        Ok(h)
    }

    /// Validates an explicit member set as a subgroup.
    pub fn subgroup_from_members<I>(&self, members: I) -> Result<Subgroup, GroupError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = BitSet::new(self.order());
        for i in members {
            self.element(i)?;
            set.insert(i);
        }
        if !set.contains(0) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        let list: Vec<usize> = set.iter().collect();
        for &a in &list {
            if !set.contains(self.inverse(a)) {
                return Err(GroupError::NotASubgroup(format!(
                    "inverse of element {a} missing"
                )));
            }
            for &b in &list {
                if !set.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!(
                        "product of elements {a} and {b} missing"
                    )));
                }
            }
        }
        if !self.order().is_multiple_of(list.len()) {
            return Err(GroupError::NotASubgroup(format!(
                "order {} does not divide {}",
                list.len(),
                self.order()
            )));
        }
        Ok(Subgroup {
            order: list.len(),
            members: set,
            generators: list.into_iter().skip(1).collect(),
        })
    }

    /// `⟨h, g⟩` as a union of right cosets of `h` (Dimino's step).
    fn join_element(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut generators = h.generators.clone();
        generators.push(g);
        let base: Vec<usize> = h.members.iter().collect();
        let mut members = h.members.clone();
        let mut reps = vec![0usize];
        let mut next = 0;
        while next < reps.len() {
            let t = reps[next];
            next += 1;
            for &s in &generators {
                let y = self.mul(t, s);
                if members.contains(y) {
                    continue;
                }
                for &x in &base {
                    members.insert(self.mul(x, y));
                }
                reps.push(y);
            }
        }
        Subgroup {
            order: base.len() * reps.len(),
            members,
            generators,
        }
    }

    /// `{⟨g⟩ : g ∈ G}` without repeats, sorted by (order, members).
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let n = self.order();
        let mut covered = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if covered[g] {
                continue;
            }
            let mut members = BitSet::new(n);
            let mut powers = Vec::new();
            let mut x = 0;
            loop {
                members.insert(x);
                powers.push(x);
                x = self.mul(x, g);
                if x == 0 {
                    break;
                }
            }
            // powers[k] = g^k; the generators of ⟨g⟩ are g^k with gcd(k, |g|) = 1
            let ord = powers.len() as u64;
            for (k, &p) in powers.iter().enumerate() {
                if numtheory::gcd(k as u64, ord) == 1 {
                    covered[p] = true;
                }
            }
            covered[0] = true;
            out.push(Subgroup {
                order: powers.len(),
                members,
                generators: if g == 0 { Vec::new() } else { vec![g] },
            });
        }
        sort_subgroups(&mut out);
        out
    }

    /// Every subgroup, sorted by (order, members).
    ///
    /// Seeds with the cyclic subgroups and joins each newly found subgroup
    /// with every cyclic subgroup it does not already contain, until nothing
    /// new appears. Each subgroup is reachable this way because it is the join
    /// of its cyclic subgroups.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>, GroupError> {
        let cyclic = self.cyclic_subgroups();
        if cyclic.len() > cap {
            return Err(GroupError::SubgroupCapExceeded { cap });
        }
        let mut seen: HashSet<BitSet> = cyclic.iter().map(|c| c.members.clone()).collect();
        let mut all = cyclic.clone();
        let mut frontier: Vec<usize> = (0..all.len()).collect();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for &hi in &frontier {
                for c in &cyclic {
                    let Some(&g) = c.generators.first() else {
                        continue;
                    };
                    if all[hi].contains(g) {
                        continue;
                    }
                    let joined = self.join_element(&all[hi], g);
                    if seen.insert(joined.members.clone()) {
                        if all.len() >= cap {
                            return Err(GroupError::SubgroupCapExceeded { cap });
                        }
                        fresh.push(all.len());
                        all.push(joined);
                    }
                }
            }
            frontier = fresh;
        }
        sort_subgroups(&mut all);
        Ok(all)
    }

    /// `S(G)`: the sum of `φ(H)` over all subgroups `H`.
    pub fn s_function_brute(&self, cap: usize) -> Result<u64, GroupError> {
        Ok(self
            .all_subgroups(cap)?
            .iter()
            .map(|h| h.phi(self))
            .sum())
    }

    /// `Σ_{H cyclic} φ(|H|)`, which equals `|G|` for every finite group.
    pub fn cyclic_totient_sum(&self) -> u64 {
        self.cyclic_subgroups()
            .iter()
            .map(|h| euler_totient(h.order() as u64).expect("positive order"))
            .sum()
    }
}

/// Direct product acting on the disjoint union of both point sets.
pub fn direct_product(
    first: &FiniteGroup,
    second: &FiniteGroup,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    if first.order().saturating_mul(second.order()) > cap {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let id1 = Permutation::identity(first.degree());
    let id2 = Permutation::identity(second.degree());
    let gens = first
        .generators()
        .iter()
        .map(|g| g.disjoint_sum(&id2))
        .chain(second.generators().iter().map(|g| id1.disjoint_sum(g)))
        .collect();
    generate_group(first.degree() + second.degree(), gens, cap)
}

fn exponent_of(orders: impl Iterator<Item = u64>) -> u64 {
    orders.fold(1, |acc, o| acc / numtheory::gcd(acc, o) * o)
}

fn sort_subgroups(subgroups: &mut [Subgroup]) {
    subgroups.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.members.cmp(&b.members)));
}

/// A subgroup of a [`FiniteGroup`], identified by its member set.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn member_set(&self) -> &BitSet {
        &self.members
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn exponent(&self, parent: &FiniteGroup) -> u64 {
        exponent_of(self.members.iter().map(|i| parent.orders[i]))
    }

    pub fn phi(&self, parent: &FiniteGroup) -> u64 {
        let exp = self.exponent(parent);
        self.members
            .iter()
            .filter(|&i| parent.orders[i] == exp)
            .count() as u64
    }

    pub fn is_cyclic(&self, parent: &FiniteGroup) -> bool {
        let n = self.order as u64;
        self.members.iter().any(|i| parent.orders[i] == n)
    }
}
