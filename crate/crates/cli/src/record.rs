use num_bigint::BigInt;
use rootlattice::center::{self, FiniteAbelianGroup, PairingTable};
use rootlattice::reduction;
use rootlattice::verify::{Scope, VerifyOutcome};
use rootlattice::{Result, RootSystem, TypeLabel};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    #[serde(rename = "type")]
    pub type_label: String,
    pub nodes: Vec<usize>,
    pub d: u32,
}

/// Everything `describe` reports about one type. Node indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribeRecord {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub root_count: usize,
    pub delta: Vec<u64>,
    pub delta_generators: Vec<String>,
    pub delta_dual: Vec<u64>,
    pub delta_dual_generators: Vec<String>,
    /// Column `j` is the image of the `j`-th generator of `Delta_dual`.
    pub rho: Vec<Vec<u64>>,
    pub rho_class: String,
    pub rho_kernel: Vec<u64>,
    pub pairing: Vec<Vec<String>>,
    pub pi_r: Vec<usize>,
    pub pi_prime: Vec<usize>,
    pub components: Vec<ComponentRecord>,
}

fn generator_names(g: &FiniteAbelianGroup) -> Vec<String> {
    g.generators().iter().map(|g| g.name.clone()).collect()
}

fn small(x: &BigInt) -> i64 {
    i64::try_from(x).expect("Cartan entries are small")
}

impl DescribeRecord {
    pub fn build(label: TypeLabel) -> Result<Self> {
        let r = RootSystem::build(label);
        let n = r.rank();
        let delta = center::weight_quotient(&r)?;
        let dual = center::coweight_quotient(&r)?;
        let rho = center::rho(&r)?;
        let class = center::classify(&rho);
        let pairing = center::induced_pairing_from(&rho, &center::duality_pairing(&r)?)?;
        let p = reduction::partition(&r)?;
        let rho_matrix = (0..delta.rank())
            .map(|i| rho.images().iter().map(|img| img[i]).collect())
            .collect();
        Ok(DescribeRecord {
            type_label: label.to_string(),
            rank: n,
            cartan: (0..n)
                .map(|i| (0..n).map(|j| small(&r.cartan()[(i, j)])).collect())
                .collect(),
            root_count: r.roots().len(),
            delta: delta.invariant_factors(),
            delta_generators: generator_names(&delta),
            delta_dual: dual.invariant_factors(),
            delta_dual_generators: generator_names(&dual),
            rho: rho_matrix,
            rho_class: class.kind.as_str().to_string(),
            rho_kernel: class.kernel_factors,
            pairing: pairing.to_strings(),
            pi_r: p.pi_r().iter().map(|i| i + 1).collect(),
            pi_prime: p.pi_prime().iter().map(|i| i + 1).collect(),
            components: p
                .components()
                .iter()
                .map(|c| ComponentRecord {
                    type_label: c.label.to_string(),
                    nodes: c.nodes.iter().map(|i| i + 1).collect(),
                    d: c.d,
                })
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingRecord {
    #[serde(rename = "type")]
    pub type_label: String,
    pub generators: Vec<String>,
    pub values: Vec<Vec<String>>,
}

impl PairingRecord {
    pub fn new(label: TypeLabel, table: &PairingTable) -> Self {
        PairingRecord {
            type_label: label.to_string(),
            generators: generator_names(table.left()),
            values: table.to_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    #[serde(rename = "type")]
    pub type_label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: String,
    pub max_rank: usize,
    pub types_checked: usize,
    pub checks: Vec<CheckEntry>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(scope: Scope, max_rank: usize, outcome: &VerifyOutcome) -> Self {
        VerifyReport {
            scope: scope.to_string(),
            max_rank,
            types_checked: outcome.labels.len(),
            checks: outcome
                .records
                .iter()
                .map(|r| CheckEntry {
                    check: r.verdict.check.clone(),
                    type_label: r.label.to_string(),
                    passed: r.verdict.passed,
                    witness: r.verdict.witness.clone(),
                })
                .collect(),
            passed: outcome.passed(),
        }
    }
}
