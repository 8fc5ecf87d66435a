//! Checks `S(G) >= |G|`, with equality exactly for groups whose Sylow
//! subgroups are all cyclic, against the brute-force engine.
//!
//! Each group is analysed once ([`GroupAnalysis`]); the theorem report, the
//! Gauss identity chain, the nilpotent corollary and the p-group fact are all
//! read off that analysis. Violations are collected, never fail-fast.

mod corpus;
mod descriptor;
mod report;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

pub use corpus::build_corpus;
pub use descriptor::{Family, GroupDesc, GroupSpec};
pub use report::{write_csv, write_jsonl, write_table, ReportRecord, Summary, TheoremReport};

use crate::group_engine::{
    FiniteGroup, GroupError, Subgroup, DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_CAP,
};
use crate::numtheory::{euler_totient, factorize};
use crate::zm::{self, ZmError, ZmElement, ZmParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Zm(#[from] ZmError),
    #[error("cannot parse group descriptor: {0}")]
    Parse(String),
}

impl VerifyError {
    pub fn is_cap(&self) -> bool {
        matches!(self, VerifyError::Group(e) if e.is_cap())
    }
}

/// Resource limits for one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub order: usize,
    pub subgroups: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: DEFAULT_ORDER_CAP,
            subgroups: DEFAULT_SUBGROUP_CAP,
        }
    }
}

/// A built group with its full subgroup list.
#[derive(Debug)]
pub struct GroupAnalysis {
    spec: GroupSpec,
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
    started: Instant,
}

impl GroupAnalysis {
    pub fn new(spec: &GroupSpec, caps: Caps) -> Result<Self, VerifyError> {
        let started = Instant::now();
        let group = spec.build(caps)?;
        let subgroups = group.all_subgroups(caps.subgroups)?;
        Ok(GroupAnalysis {
            spec: spec.clone(),
            group,
            subgroups,
            started,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn s_value(&self) -> u64 {
        self.subgroups.iter().map(|h| h.phi(&self.group)).sum()
    }

    pub fn theorem_report(&self) -> TheoremReport {
        let order = self.group.order() as u64;
        let s_value = self.s_value();
        let sylow_cyclic = self.group.is_sylow_cyclic();
        let equality = s_value == order;
        let consistent = equality == sylow_cyclic;
        let formula_s = self.spec.zm_params().map(|p| zm::s_function_formula(&p));

        let mut violations = Vec::new();
        if s_value < order {
            violations.push(format!("S(G) = {s_value} < |G| = {order}"));
        }
        if !consistent {
            violations.push(format!(
                "equality is {equality} but Sylow-cyclic is {sylow_cyclic}"
            ));
        }
        if let Some(f) = formula_s {
            if f != s_value || f != order {
                violations.push(format!(
                    "lattice formula gives S = {f}, brute force {s_value}, |G| = {order}"
                ));
            }
        }
        TheoremReport {
            spec: self.spec.clone(),
            order,
            s_value,
            phi_value: self.group.phi(),
            exponent: self.group.exponent(),
            sylow_cyclic,
            equality,
            consistent,
            formula_s,
            elapsed: self.started.elapsed(),
            violations,
        }
    }

    /// `Σ_{H cyclic} φ(|H|) = |G|` and `n'_d = n_d·φ(d)` for every `d | |G|`.
    pub fn gauss_identity(&self) -> bool {
        let cyclic: Vec<&Subgroup> = self
            .subgroups
            .iter()
            .filter(|h| h.is_cyclic(&self.group))
            .collect();
        let sum: u64 = cyclic
            .iter()
            .map(|h| euler_totient(h.order() as u64).expect("positive order"))
            .sum();
        let counts_ok = self.group.element_count_by_order().into_iter().all(|(d, count)| {
            let n_d = cyclic.iter().filter(|h| h.order() as u64 == d).count() as u64;
            count as u64 == n_d * euler_totient(d).expect("positive divisor")
        });
        sum == self.group.order() as u64 && counts_ok
    }

    /// Nilpotent iff every Sylow subgroup is unique.
    pub fn is_nilpotent(&self) -> bool {
        let f = factorize(self.group.order() as u64).expect("positive order");
        let nilpotent = f.prime_powers().all(|(_, pe)| {
            self.subgroups
                .iter()
                .filter(|h| h.order() as u64 == pe)
                .count()
                == 1
        });
        nilpotent
    }

    /// For nilpotent groups: `S(G) = |G|` iff `G` is cyclic. `None` otherwise.
    pub fn corollary(&self) -> Option<bool> {
        self.is_nilpotent()
            .then(|| (self.s_value() == self.group.order() as u64) == self.group.is_cyclic())
    }

    /// For prime-power order: `φ(G) >= 1`. `None` otherwise.
    pub fn pgroup_phi_nonzero(&self) -> Option<bool> {
        let f = factorize(self.group.order() as u64).expect("positive order");
        f.is_prime_power().then(|| self.group.phi() >= 1)
    }

    pub fn outcome(&self) -> SpecOutcome {
        SpecOutcome {
            report: self.theorem_report(),
            gauss: self.gauss_identity(),
            corollary: self.corollary(),
            pgroup: self.pgroup_phi_nonzero(),
        }
    }
}

pub fn verify_theorem(spec: &GroupSpec, caps: Caps) -> Result<TheoremReport, VerifyError> {
    Ok(GroupAnalysis::new(spec, caps)?.theorem_report())
}

pub fn verify_gauss_identity(spec: &GroupSpec, caps: Caps) -> Result<bool, VerifyError> {
    Ok(GroupAnalysis::new(spec, caps)?.gauss_identity())
}

pub fn verify_corollary(spec: &GroupSpec, caps: Caps) -> Result<Option<bool>, VerifyError> {
    Ok(GroupAnalysis::new(spec, caps)?.corollary())
}

pub fn verify_pgroup_phi_nonzero(spec: &GroupSpec, caps: Caps) -> Result<Option<bool>, VerifyError> {
    Ok(GroupAnalysis::new(spec, caps)?.pgroup_phi_nonzero())
}

/// Lattice triples against the brute-force subgroup list of `ZM(m, n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBijection {
    pub triples: usize,
    pub oracle_subgroups: usize,
    pub injective: bool,
    pub surjective: bool,
    /// Triples whose subgroup has order, exponent or cyclicity differing
    /// from the formulas.
    pub formula_mismatches: Vec<zm::LatticeTriple>,
}

impl LatticeBijection {
    pub fn holds(&self) -> bool {
        self.triples == self.oracle_subgroups && self.injective && self.surjective
    }
}

pub fn lattice_bijection_report(p: ZmParams, caps: Caps) -> Result<LatticeBijection, VerifyError> {
    let oracle = zm::to_permutation_group(p, caps.order)?;
    let g = oracle.group();
    let subgroups = g.all_subgroups(caps.subgroups)?;
    let triples = zm::lattice_triples(&p);

    let mut images = std::collections::HashSet::new();
    let mut formula_mismatches = Vec::new();
    for &t in &triples {
        let members = zm::subgroup_of_triple(&p, t)?;
        let h = g.subgroup_from_members(members.iter().map(|&e: &ZmElement| oracle.index_of(e)))?;
        let expected = zm::subgroup_order_formula(&p, t);
        if h.order() as u64 != expected
            || h.exponent(g) != expected
            || h.is_cyclic(g) != zm::is_cyclic_triple(&p, t)
        {
            formula_mismatches.push(t);
        }
        images.insert(h.member_set().clone());
    }
    let surjective = subgroups.iter().all(|h| images.contains(h.member_set()));
    Ok(LatticeBijection {
        triples: triples.len(),
        oracle_subgroups: subgroups.len(),
        injective: images.len() == triples.len(),
        surjective,
        formula_mismatches,
    })
}

pub fn verify_lattice_bijection(p: ZmParams, caps: Caps) -> Result<bool, VerifyError> {
    Ok(lattice_bijection_report(p, caps)?.holds())
}

/// Everything checked for one corpus entry.
#[derive(Debug, Clone)]
pub struct SpecOutcome {
    pub report: TheoremReport,
    pub gauss: bool,
    pub corollary: Option<bool>,
    pub pgroup: Option<bool>,
}

impl SpecOutcome {
    pub fn violations(&self) -> Vec<String> {
        let mut v = self.report.violations.clone();
        if !self.gauss {
            v.push("Gauss identity chain fails".into());
        }
        if self.corollary == Some(false) {
            v.push("nilpotent group: equality does not match cyclicity".into());
        }
        if self.pgroup == Some(false) {
            v.push("p-group with φ(G) = 0".into());
        }
        v
    }
}

#[derive(Debug, Default)]
pub struct CorpusRun {
    /// Sorted by label.
    pub outcomes: Vec<SpecOutcome>,
    pub errors: Vec<(String, VerifyError)>,
}

impl CorpusRun {
    pub fn summary(&self) -> Summary {
        let equality = self.outcomes.iter().filter(|o| o.report.equality).count();
        Summary {
            groups: self.outcomes.len(),
            equality,
            strict: self.outcomes.len() - equality,
            violations: self.outcomes.iter().map(|o| o.violations().len()).sum(),
            errors: self.errors.len(),
        }
    }

    pub fn reports(&self) -> impl Iterator<Item = &TheoremReport> {
        self.outcomes.iter().map(|o| &o.report)
    }
}

/// Runs every check on every spec; with `parallel`, entries are spread over
/// the rayon pool. Output order is by label either way.
pub fn run_corpus(specs: &[GroupSpec], caps: Caps, parallel: bool) -> CorpusRun {
    let analyse = |spec: &GroupSpec| {
        GroupAnalysis::new(spec, caps)
            .map(|a| a.outcome())
            .map_err(|e| (spec.label().to_string(), e))
    };
    let results: Vec<Result<SpecOutcome, (String, VerifyError)>> = if parallel {
        specs.par_iter().map(analyse).collect()
    } else {
        specs.iter().map(analyse).collect()
    };
    let mut run = CorpusRun::default();
    for r in results {
        match r {
            Ok(o) => run.outcomes.push(o),
            Err(e) => run.errors.push(e),
        }
    }
    run.outcomes
        .sort_by(|a, b| a.report.spec.label().cmp(b.report.spec.label()));
    run.errors.sort_by(|a, b| a.0.cmp(&b.0));
    run
}

/// Elapsed time in whole milliseconds.
pub(crate) fn millis(d: Duration) -> u64 {
    d.as_millis().try_into().unwrap_or(u64::MAX)
}
