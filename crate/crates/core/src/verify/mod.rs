//! Catalog-wide verification, one batch of checks per type label.

pub mod expected;

use std::fmt;
use std::str::FromStr;

use crate::center::{
    classify, coweight_quotient, duality_pairing, induced_pairing_from, rho, rho_equivariance,
    weight_quotient, GroupHom,
};
use crate::error::Result;
use crate::fault::Fault;
use crate::reduction::{claim_check, verify_lemma2_with};
use crate::report::Verdict;
use crate::rootsys::{Family, RootSystem, TypeLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    All,
    Phi,
    Center,
    Lemma2,
    Table91,
}

impl Scope {
    pub const ALL: [Scope; 5] = [Scope::All, Scope::Phi, Scope::Center, Scope::Lemma2, Scope::Table91];

    pub fn as_str(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Phi => "phi",
            Scope::Center => "center",
            Scope::Lemma2 => "lemma2",
            Scope::Table91 => "table91",
        }
    }

    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Scope::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown scope {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    /// One task per type label on the rayon pool. Runs sequentially when the
    /// `parallel` feature is off.
    #[default]
    Parallel,
    Sequential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub label: TypeLabel,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub records: Vec<CheckRecord>,
    pub labels: Vec<TypeLabel>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.verdict.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.verdict.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub scope: Scope,
    pub max_rank: usize,
    pub faults: Vec<Fault>,
    pub execution: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            scope: Scope::All,
            max_rank: 8,
            faults: Vec::new(),
            execution: Execution::default(),
        }
    }
}

/// Classical families up to `max_rank`, plus every exceptional type.
pub fn labels(max_rank: usize) -> Vec<TypeLabel> {
    let mut out: Vec<TypeLabel> = TypeLabel::catalog(max_rank)
        .into_iter()
        .filter(|l| l.family().is_classical())
        .collect();
    for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        out.push(TypeLabel::new(f, n).expect("exceptional label"));
    }
    out.sort();
    out
}

pub fn run(options: &VerifyOptions) -> VerifyOutcome {
    let labels = labels(options.max_rank);
    let per_label = |&label: &TypeLabel| -> Vec<CheckRecord> {
        check_label(label, options.scope, &options.faults)
            .into_iter()
            .map(|verdict| CheckRecord { label, verdict })
            .collect()
    };
    let mut batches: Vec<Vec<CheckRecord>> = match options.execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            labels.par_iter().map(per_label).collect()
        }
        _ => labels.iter().map(per_label).collect(),
    };
    batches.sort_by_key(|b| b.first().map(|r| r.label));
    VerifyOutcome {
        records: batches.into_iter().flatten().collect(),
        labels,
    }
}

/// Every verdict for one label in the given scope; internal errors become
/// failed verdicts.
pub fn check_label(label: TypeLabel, scope: Scope, faults: &[Fault]) -> Vec<Verdict> {
    let r = RootSystem::build(label);
    let mut out = Vec::new();
    if scope.includes(Scope::Phi) {
        out.extend(r.check_phi_properties().verdicts);
    }
    if scope.includes(Scope::Center) {
        collect(&mut out, "center", center_checks(label, &r));
    }
    if scope.includes(Scope::Lemma2) {
        collect(&mut out, "lemma2", lemma2_checks(&r, faults));
    }
    if scope.includes(Scope::Table91) {
        collect(&mut out, "table91", table91_check(label, &r, faults).map(|v| vec![v]));
    }
    out
}

fn collect(out: &mut Vec<Verdict>, scope: &str, checks: Result<Vec<Verdict>>) {
    match checks {
        Ok(v) => out.extend(v),
        Err(e) => out.push(Verdict::fail(format!("{scope}.error"), e.to_string())),
    }
}

fn center_checks(label: TypeLabel, r: &RootSystem) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let det = crate::center::cartan_determinant(r);
    let delta = weight_quotient(r)?;
    let dual = coweight_quotient(r)?;
    out.push(if delta.order() == dual.order() && det == delta.order().into() {
        Verdict::pass("center.order")
    } else {
        Verdict::fail(
            "center.order",
            format!("|Delta| = {}, |Delta_dual| = {}, det = {det}", delta.order(), dual.order()),
        )
    });

    let duality = duality_pairing(r)?;
    out.push(if duality.is_perfect() {
        Verdict::pass("center.duality")
    } else {
        Verdict::fail("center.duality", "pairing Delta x Delta_dual is not perfect")
    });

    let h = rho(r)?;
    let class = classify(&h);
    let want = expected::rho_kind(label);
    out.push(if class.kind == want {
        Verdict::pass("center.rho_kernel")
    } else {
        Verdict::fail(
            "center.rho_kernel",
            format!("rho is {}, expected {}", class.kind.as_str(), want.as_str()),
        )
    });

    out.push(match rho_equivariance(r, &h)? {
        None => Verdict::pass("center.equivariance"),
        Some(perm) => Verdict::fail("center.equivariance", format!("fails for node permutation {perm:?}")),
    });

    let induced = induced_pairing_from(&h, &duality)?;
    out.push(if induced.is_symmetric() && induced.respects_orders() {
        Verdict::pass("center.symmetry")
    } else {
        Verdict::fail("center.symmetry", format!("induced pairing {:?}", induced.to_strings()))
    });
    Ok(out)
}

fn lemma2_checks(r: &RootSystem, faults: &[Fault]) -> Result<Vec<Verdict>> {
    let mut out = verify_lemma2_with(r, faults)?.verdicts;
    out.extend(claim_check(r)?.verdicts);
    Ok(out)
}

fn table91_check(label: TypeLabel, r: &RootSystem, faults: &[Fault]) -> Result<Verdict> {
    let mut h = rho(r)?;
    if faults.contains(&Fault::ZeroRhoOnA2) && label == TypeLabel::new(Family::A, 2)? {
        h = GroupHom::zero(h.source().clone(), h.target().clone());
    }
    let got = induced_pairing_from(&h, &duality_pairing(r)?)?;
    let want = expected::pairing(label);
    Ok(if got.values() == want.as_slice() {
        Verdict::pass("table91.pairing")
    } else {
        let show = |t: &[Vec<crate::center::QmodZ>]| -> Vec<Vec<String>> {
            t.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
        };
        Verdict::fail(
            "table91.pairing",
            format!("got {:?}, expected {:?}", show(got.values()), show(&want)),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_list() {
        let l = labels(8);
        assert_eq!(l.len(), 33);
        assert!(labels(3).contains(&TypeLabel::new(Family::E, 8).unwrap()));
        assert_eq!(labels(3).len(), 3 + 2 + 2 + 1 + 5);
    }

    #[test]
    fn execution_modes_agree() {
        let base = VerifyOptions {
            max_rank: 4,
            ..VerifyOptions::default()
        };
        let seq = run(&VerifyOptions {
            execution: Execution::Sequential,
            ..base.clone()
        });
        assert!(seq.passed(), "{:?}", seq.failures().collect::<Vec<_>>());
        assert_eq!(run(&base), seq);
    }

    #[test]
    fn faults_are_caught() {
        let lemma = run(&VerifyOptions {
            scope: Scope::Lemma2,
            max_rank: 4,
            faults: vec![Fault::DropTMultiplier],
            ..VerifyOptions::default()
        });
        assert!(lemma
            .failures()
            .any(|r| r.label.to_string() == "B3" && r.verdict.check == "lemma2.inclusion"));
        let table = run(&VerifyOptions {
            scope: Scope::Table91,
            max_rank: 3,
            faults: vec![Fault::ZeroRhoOnA2],
            ..VerifyOptions::default()
        });
        let failed: Vec<String> = table.failures().map(|r| r.label.to_string()).collect();
        assert_eq!(failed, ["A2"]);
    }

    #[test]
    fn root_counts() {
        for label in labels(8) {
            assert_eq!(RootSystem::build(label).roots().len(), expected::root_count(label), "{label}");
        }
    }
}
