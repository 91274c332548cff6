//! Serializable result models. Human output is rendered from these, so a
//! cached result prints exactly like a fresh one.

use std::fmt::Write as _;

use isotypic::branching::ReciprocityReport;
use isotypic::fock::RelationCheck;
use isotypic::stable::StableResult;
use isotypic::{Decomposition, Error, Family, Group, MixedSignature, Rank, Signature};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RankOut {
    Finite(usize),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOut {
    pub family: String,
    pub rank: RankOut,
}

impl GroupOut {
    pub fn from_group(g: &Group) -> Self {
        GroupOut {
            family: g.family.tag().to_string(),
            rank: match g.rank {
                Rank::Finite(k) => RankOut::Finite(k),
                Rank::Stable => RankOut::Label("stable".into()),
            },
        }
    }

    pub fn to_group(&self) -> Result<Group, Error> {
        let family: Family = self.family.parse()?;
        Ok(match &self.rank {
            RankOut::Finite(k) => Group { family, rank: Rank::Finite(*k) },
            RankOut::Label(s) if s == "stable" => Group::stable(family),
            RankOut::Label(s) => return Err(Error::RankConstraint(format!("unknown rank {s:?}"))),
        })
    }

    fn title(&self) -> String {
        let family = match self.family.as_str() {
            "u" => "U",
            "so" => "SO",
            "sp" => "Sp",
            other => other,
        };
        match &self.rank {
            RankOut::Finite(k) => format!("{family}({k})"),
            RankOut::Label(_) => format!("{family}(∞)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOut {
    pub signature: Vec<i64>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionOut {
    pub group: GroupOut,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k0: Option<usize>,
    pub terms: Vec<TermOut>,
}

fn parts_of(sig: &Signature) -> Vec<i64> {
    sig.parts().iter().map(|&p| p as i64).collect()
}

fn sig_text(parts: &[i64]) -> String {
    if parts.is_empty() {
        "(0)".into()
    } else {
        format!("({})", parts.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
    }
}

impl DecompositionOut {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        DecompositionOut {
            group: GroupOut::from_group(&d.group()),
            k0: None,
            terms: d.iter().map(|(s, m)| TermOut { signature: parts_of(s), mult: m }).collect(),
        }
    }

    pub fn from_mixed(d: &Decomposition<MixedSignature>) -> Self {
        DecompositionOut {
            group: GroupOut::from_group(&d.group()),
            k0: None,
            terms: d.iter().map(|(s, m)| TermOut { signature: s.parts().to_vec(), mult: m }).collect(),
        }
    }

    pub fn from_stable(r: &StableResult) -> Self {
        DecompositionOut { k0: Some(r.k0), ..Self::from_decomposition(&r.stable) }
    }

    /// Rebuilds the decomposition; fails on negative parts.
    pub fn to_decomposition(&self) -> Result<Decomposition, Error> {
        let mut d = Decomposition::new(self.group.to_group()?);
        for t in &self.terms {
            d.add(Signature::canonicalize(&t.signature)?, t.mult);
        }
        Ok(d)
    }

    /// Rebuilds a mixed decomposition at the group's finite rank.
    pub fn to_mixed(&self) -> Result<Decomposition<MixedSignature>, Error> {
        let group = self.group.to_group()?;
        let mut d = Decomposition::new(group);
        for t in &self.terms {
            d.add(MixedSignature::new(t.signature.clone())?, t.mult);
        }
        Ok(d)
    }

    pub fn render(&self) -> String {
        let mut s = self.group.title();
        if let Some(k0) = self.k0 {
            let _ = write!(s, "  k0 = {k0}");
        }
        s.push('\n');
        s.push_str("  mult  signature\n");
        for t in &self.terms {
            let _ = writeln!(s, "{:>6}  {}", t.mult, sig_text(&t.signature));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimOut {
    pub group: GroupOut,
    pub signature: Vec<i64>,
    pub dim: String,
}

impl DimOut {
    pub fn render(&self) -> String {
        format!("{}\n", self.dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReciprocityRowOut {
    pub signature: Vec<i64>,
    pub side_a: u64,
    pub side_b: u64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReciprocityOut {
    pub signature: Vec<i64>,
    pub n: usize,
    pub k: usize,
    pub rows: Vec<ReciprocityRowOut>,
    pub agree: bool,
}

impl ReciprocityOut {
    pub fn from_report(r: &ReciprocityReport) -> Self {
        ReciprocityOut {
            signature: parts_of(&r.lambda),
            n: r.n,
            k: r.k,
            rows: r
                .rows
                .iter()
                .map(|row| ReciprocityRowOut {
                    signature: parts_of(&row.mu),
                    side_a: row.side_a,
                    side_b: row.side_b,
                    agree: row.agree,
                })
                .collect(),
            agree: r.all_agree(),
        }
    }

    pub fn render(&self) -> String {
        let mut s = format!("{} under SO({}) / sp({})\n", sig_text(&self.signature), self.k, 2 * self.n);
        s.push_str("  signature  SO(k)  dual  agree\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "  {:<9}  {:>5}  {:>4}  {}",
                sig_text(&r.signature),
                r.side_a,
                r.side_b,
                if r.agree { "yes" } else { "NO" }
            );
        }
        let _ = writeln!(s, "all rows agree: {}", if self.agree { "yes" } else { "no" });
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOut {
    pub factors: Vec<Vec<i64>>,
    pub mu: Vec<i64>,
    pub k: usize,
    pub identity_mult: u64,
    pub stable_mult: u64,
    pub agree: bool,
}

impl IdentityOut {
    pub fn render(&self) -> String {
        let factors: Vec<String> = self.factors.iter().map(|f| sig_text(f)).collect();
        format!(
            "trivial in {} ⊗ {}✓ at k = {}: {}\n{} in stable product: {}\nagree: {}\n",
            factors.join(" ⊗ "),
            sig_text(&self.mu),
            self.k,
            self.identity_mult,
            sig_text(&self.mu),
            self.stable_mult,
            if self.agree { "yes" } else { "no" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationOut {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub holds: bool,
}

impl RelationOut {
    pub fn from_check(c: &RelationCheck) -> Self {
        RelationOut { name: c.name.to_string(), checked: c.checked, failed: c.failures.len(), holds: c.holds() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub algebra: String,
    pub shape: Vec<usize>,
    pub relations: Vec<RelationOut>,
    pub holds: bool,
}

impl VerifyOut {
    pub fn render(&self) -> String {
        let shape: Vec<String> = self.shape.iter().map(usize::to_string).collect();
        let mut s = format!("{} relations ({})\n", self.algebra, shape.join("×"));
        for r in &self.relations {
            let _ = writeln!(
                s,
                "  {}  {}/{}  {}",
                if r.holds { "ok  " } else { "FAIL" },
                r.checked - r.failed,
                r.checked,
                r.name
            );
        }
        let _ = writeln!(s, "all relations hold: {}", if self.holds { "yes" } else { "no" });
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwvOut {
    pub kind: String,
    pub signature: Vec<i64>,
    pub n: usize,
    pub k: usize,
    pub polynomial: String,
    pub checks: Vec<CheckOut>,
}

impl HwvOut {
    pub fn render(&self) -> String {
        let mut s = format!("{} {}\n  {}\n", self.kind, sig_text(&self.signature), self.polynomial);
        for c in &self.checks {
            let _ = writeln!(s, "  {}: {}", c.name, if c.pass { "pass" } else { "FAIL" });
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOut {
    pub left: String,
    pub right: String,
    pub value: String,
}

impl PairOut {
    pub fn render(&self) -> String {
        format!("{}\n", self.value)
    }
}
