//! Group descriptors: `cyclic:N`, `dihedral:K`, `dicyclic:K`, `symmetric:N`,
//! `alternating:N`, `metacyclic:M,N,R`, `zm:M,N,R` and
//! `product:(DESC)x(DESC)[x(DESC)...]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Caps, VerifyError};
use crate::group_engine::{self, FiniteGroup};
use crate::zm::{self, ZmParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Metacyclic,
    Zm,
    Product,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::Dicyclic,
        Family::Symmetric,
        Family::Metacyclic,
        Family::Zm,
        Family::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Symmetric => "symmetric",
            Family::Metacyclic => "metacyclic",
            Family::Zm => "zm",
            Family::Product => "product",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| VerifyError::Parse(format!("unknown family '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDesc {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Symmetric(u64),
    /// Reported under the symmetric family.
    Alternating(u64),
    Metacyclic { m: u64, n: u64, r: u64 },
    Zm(ZmParams),
    Product(Vec<GroupDesc>),
}

impl GroupDesc {
    pub fn family(&self) -> Family {
        match self {
            GroupDesc::Cyclic(_) => Family::Cyclic,
            GroupDesc::Dihedral(_) => Family::Dihedral,
            GroupDesc::Dicyclic(_) => Family::Dicyclic,
            GroupDesc::Symmetric(_) | GroupDesc::Alternating(_) => Family::Symmetric,
            GroupDesc::Metacyclic { .. } => Family::Metacyclic,
            GroupDesc::Zm(_) => Family::Zm,
            GroupDesc::Product(_) => Family::Product,
        }
    }

    /// Group order, computed without building the group.
    pub fn order(&self) -> u64 {
        match self {
            GroupDesc::Cyclic(n) => *n,
            GroupDesc::Dihedral(k) => 2 * k,
            GroupDesc::Dicyclic(k) => 4 * k,
            GroupDesc::Symmetric(n) => (1..=*n).product(),
            GroupDesc::Alternating(n) => ((1..=*n).product::<u64>() / 2).max(1),
            GroupDesc::Metacyclic { m, n, .. } => m * n,
            GroupDesc::Zm(p) => p.order(),
            GroupDesc::Product(parts) => parts.iter().map(GroupDesc::order).product(),
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup, VerifyError> {
        let size = |v: u64| usize::try_from(v).unwrap_or(usize::MAX);
        let g = match self {
            GroupDesc::Cyclic(n) => group_engine::cyclic_group(size(*n), cap)?,
            GroupDesc::Dihedral(k) => group_engine::dihedral_group(size(*k), cap)?,
            GroupDesc::Dicyclic(k) => group_engine::dicyclic_group(size(*k), cap)?,
            GroupDesc::Symmetric(n) => group_engine::symmetric_group(size(*n), cap)?,
            GroupDesc::Alternating(n) => group_engine::alternating_group(size(*n), cap)?,
            GroupDesc::Metacyclic { m, n, r } => group_engine::metacyclic_group(*m, *n, *r, cap)?,
            GroupDesc::Zm(p) => zm::to_permutation_group(*p, cap)?.group().clone(),
            GroupDesc::Product(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| VerifyError::Parse("empty product".into()))?;
                let mut acc = first.build(cap)?;
                for part in iter {
                    acc = group_engine::direct_product(&acc, &part.build(cap)?, cap)?;
                }
                acc
            }
        };
        Ok(g)
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDesc::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupDesc::Dihedral(k) => write!(f, "dihedral:{k}"),
            GroupDesc::Dicyclic(k) => write!(f, "dicyclic:{k}"),
            GroupDesc::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupDesc::Alternating(n) => write!(f, "alternating:{n}"),
            GroupDesc::Metacyclic { m, n, r } => write!(f, "metacyclic:{m},{n},{r}"),
            GroupDesc::Zm(p) => write!(f, "zm:{},{},{}", p.m(), p.n(), p.r()),
            GroupDesc::Product(parts) => {
                f.write_str("product:")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "({part})")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_err(msg: impl Into<String>) -> VerifyError {
    VerifyError::Parse(msg.into())
}

fn positive(s: &str, what: &str) -> Result<u64, VerifyError> {
    match s.trim().parse::<u64>() {
        Ok(0) => Err(parse_err(format!("{what} must be positive"))),
        Ok(v) => Ok(v),
        Err(_) => Err(parse_err(format!("{what}: '{s}' is not a positive integer"))),
    }
}

fn triple(s: &str, kind: &str) -> Result<(u64, u64, i64), VerifyError> {
    let parts: Vec<&str> = s.split(',').collect();
    let [m, n, r] = parts.as_slice() else {
        return Err(parse_err(format!("{kind} expects M,N,R, got '{s}'")));
    };
    let r = r
        .trim()
        .parse::<i64>()
        .map_err(|_| parse_err(format!("{kind}: '{r}' is not an integer")))?;
    Ok((positive(m, "M")?, positive(n, "N")?, r))
}

// Splits "(a)x(b)x(c)" into ["a", "b", "c"], respecting nesting.
fn product_parts(s: &str) -> Result<Vec<&str>, VerifyError> {
    let bytes = s.as_bytes();
    let mut parts = Vec::new();
    let mut i = 0;
    loop {
        if bytes.get(i) != Some(&b'(') {
            return Err(parse_err(format!("expected '(' in product '{s}'")));
        }
        let start = i + 1;
        let mut depth = 0usize;
        let mut end = None;
        for (j, &c) in bytes.iter().enumerate().skip(i) {
            match c {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(j);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| parse_err(format!("unbalanced parentheses in '{s}'")))?;
        parts.push(&s[start..end]);
        i = end + 1;
        match bytes.get(i) {
            None => break,
            Some(b'x') => i += 1,
            Some(_) => return Err(parse_err(format!("expected 'x' between factors in '{s}'"))),
        }
    }
    if parts.len() < 2 {
        return Err(parse_err("a product needs at least two factors"));
    }
    Ok(parts)
}

impl FromStr for GroupDesc {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| parse_err(format!("'{s}' is not of the form family:args")))?;
        let desc = match kind {
            "cyclic" => GroupDesc::Cyclic(positive(args, "N")?),
            "dihedral" => GroupDesc::Dihedral(positive(args, "K")?),
            "dicyclic" => GroupDesc::Dicyclic(positive(args, "K")?),
            "symmetric" => GroupDesc::Symmetric(positive(args, "N")?),
            "alternating" => GroupDesc::Alternating(positive(args, "N")?),
            "metacyclic" => {
                let (m, n, r) = triple(args, kind)?;
                GroupDesc::Metacyclic {
                    m,
                    n,
                    r: r.rem_euclid(m as i64) as u64,
                }
            }
            "zm" => {
                let (m, n, r) = triple(args, kind)?;
                GroupDesc::Zm(zm::validate_zm_params(m, n, r)?)
            }
            "product" => GroupDesc::Product(
                product_parts(args)?
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<_, _>>()?,
            ),
            other => return Err(parse_err(format!("unknown group family '{other}'"))),
        };
        Ok(desc)
    }
}

/// A corpus entry: a descriptor and its canonical label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    desc: GroupDesc,
    label: String,
}

impl GroupSpec {
    pub fn new(desc: GroupDesc) -> Self {
        let label = desc.to_string();
        GroupSpec { desc, label }
    }

    pub fn desc(&self) -> &GroupDesc {
        &self.desc
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Family {
        self.desc.family()
    }

    pub fn zm_params(&self) -> Option<ZmParams> {
        match self.desc {
            GroupDesc::Zm(p) => Some(p),
            _ => None,
        }
    }

    pub fn build(&self, caps: Caps) -> Result<FiniteGroup, VerifyError> {
        if self.desc.order() > caps.order as u64 {
            return Err(group_engine::GroupError::OrderCapExceeded { cap: caps.order }.into());
        }
        self.desc.build(caps.order)
    }
}

impl FromStr for GroupSpec {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(GroupSpec::new(s.parse()?))
    }
}

impl From<GroupDesc> for GroupSpec {
    fn from(desc: GroupDesc) -> Self {
        GroupSpec::new(desc)
    }
}
