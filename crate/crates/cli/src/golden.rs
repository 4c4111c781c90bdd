//! Reference constants checked by `kqh verify`.

use kronecker_qh::roots::ComplexRoot;
use serde::{Deserialize, Serialize};

pub const GOLDEN_JSON: &str = include_str!("../data/golden.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Golden {
    pub intersection_numbers: Vec<IntersectionNumber>,
    pub degree: i64,
    pub graded_ranks: Vec<usize>,
    pub quantum_rank: usize,
    pub dual_basis: DualBasis,
    pub quantum_products: Vec<ProductFormula>,
    pub gw_table: GwTable,
    pub degree_one_invariants: Vec<Invariant>,
    pub degree_two: DegreeTwo,
    pub quantum_chevalley: Vec<ChevalleyFormula>,
    pub cell_degrees: Vec<CellDegree>,
    pub orbits: Orbits,
    pub involution: Involution,
    pub spectrum: Spectrum,
    pub zero_eigenvalue_length: usize,
    pub residual_length: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionNumber {
    pub monomial: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualBasis {
    pub classes: Vec<String>,
    pub duals: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductFormula {
    pub left: String,
    pub right: String,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GwTable {
    pub classes: Vec<String>,
    /// `rows[i][j] = I_1(c1, classes[i], classes[j])`.
    pub rows: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Invariant {
    pub classes: [String; 3],
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeTwo {
    pub relation_normal_form: String,
    pub invariant: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChevalleyFormula {
    pub cell: String,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDegree {
    pub cell: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orbits {
    pub o2_degree: i64,
    pub o4_pairings: Vec<OrbitPairing>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitPairing {
    pub with: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Involution {
    pub swaps: Vec<(String, String)>,
    pub fixed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum {
    pub q: String,
    pub roots: Vec<ComplexRoot>,
    /// Ascending integer coefficients.
    pub repeated_factor: Vec<i64>,
}

impl Golden {
    pub fn bundled() -> Golden {
        Golden::from_json(GOLDEN_JSON).expect("bundled golden file parses")
    }

    pub fn from_json(text: &str) -> Result<Golden, serde_json::Error> {
        serde_json::from_str(text)
    }
}
