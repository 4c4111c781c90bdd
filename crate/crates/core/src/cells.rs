//! Białynicki-Birula cells: fixed points, the closure poset, and the
//! diagram of multiplication by `c1`.
//!
//! The data lives in `data/cells.json`, guarded by a sha256 checksum of its
//! canonical (compact) serialization.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chow::{ChowClass, ChowRing, CELL_BASIS, DIM};
use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::quantum::QuantumRing;
use crate::rational::int;

pub const CELLS_JSON: &str = include_str!("../data/cells.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellNode {
    pub label: String,
    pub dim: usize,
    pub fixed_point: String,
    /// Name of the closure's class, as accepted by [`ChowRing::named_class`].
    pub class: String,
    /// `<class, c1^dim>`.
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyEdge {
    pub from: String,
    pub to: String,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumFormula {
    pub cell: String,
    /// `c1 * cell`, with juxtaposition as the cup product.
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Payload {
    version: u32,
    nodes: Vec<CellNode>,
    covers: Vec<(String, String)>,
    chevalley_edges: Vec<ChevalleyEdge>,
    quantum_chevalley: Vec<QuantumFormula>,
    involution: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CellFile {
    #[serde(flatten)]
    payload: Payload,
    sha256: String,
}

fn checksum(payload: &Payload) -> String {
    let canonical = serde_json::to_string(payload).expect("serializable");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChevalleyMode {
    Classical,
    Quantum,
}

/// The 13 cells with their closure order and `c1`-diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct CellData {
    payload: Payload,
    index: BTreeMap<String, usize>,
    /// `below[a][b]`: cell `b` lies in the closure of cell `a`.
    below: Vec<Vec<bool>>,
}

impl CellData {
    /// The bundled data file.
    pub fn bundled() -> Result<Self> {
        CellData::from_json(CELLS_JSON)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CellFile = serde_json::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
        let computed = checksum(&file.payload);
        if computed != file.sha256 {
            return Err(Error::Data(format!("checksum mismatch: stored {}, computed {computed}", file.sha256)));
        }
        let payload = file.payload;
        let index: BTreeMap<String, usize> =
            payload.nodes.iter().enumerate().map(|(i, n)| (n.label.clone(), i)).collect();
        let n = payload.nodes.len();
        let mut below = vec![vec![false; n]; n];
        for (i, row) in below.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in &payload.covers {
            let (ia, ib) = (lookup(&index, a)?, lookup(&index, b)?);
            below[ia][ib] = true;
        }
        for edge in &payload.chevalley_edges {
            lookup(&index, &edge.from)?;
            lookup(&index, &edge.to)?;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if below[i][k] {
                    for j in 0..n {
                        if below[k][j] {
                            below[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(CellData { payload, index, below })
    }

    /// Serializes with a freshly computed checksum.
    pub fn to_json(&self) -> String {
        let file = CellFile { payload: self.payload.clone(), sha256: checksum(&self.payload) };
        serde_json::to_string_pretty(&file).expect("serializable") + "\n"
    }

    pub fn nodes(&self) -> &[CellNode] {
        &self.payload.nodes
    }

    pub fn covers(&self) -> &[(String, String)] {
        &self.payload.covers
    }

    pub fn chevalley_edges(&self) -> &[ChevalleyEdge] {
        &self.payload.chevalley_edges
    }

    pub fn quantum_formulas(&self) -> &[QuantumFormula] {
        &self.payload.quantum_chevalley
    }

    pub fn involution_pairs(&self) -> &[(String, String)] {
        &self.payload.involution
    }

    pub fn node(&self, label: &str) -> Result<&CellNode> {
        Ok(&self.payload.nodes[lookup(&self.index, label)?])
    }

    /// Whether `b` lies in the closure of `a`.
    pub fn poset_query(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.below[lookup(&self.index, a)?][lookup(&self.index, b)?])
    }

    pub fn class_of(&self, chow: &ChowRing, label: &str) -> Result<ChowClass> {
        chow.named_class(&self.node(label)?.class)
    }

    fn swap(&self, label: &str) -> String {
        for (a, b) in &self.payload.involution {
            if a == label {
                return b.clone();
            }
            if b == label {
                return a.clone();
            }
        }
        label.to_owned()
    }

    /// Structural problems with the poset, one message each.
    pub fn check_poset(&self) -> Vec<String> {
        let mut out = Vec::new();
        let nodes = &self.payload.nodes;
        for (a, b) in &self.payload.covers {
            let (da, db) = (self.node(a).map(|n| n.dim), self.node(b).map(|n| n.dim));
            if let (Ok(da), Ok(db)) = (da, db) {
                if da != db + 1 {
                    out.push(format!("cover {a} > {b} drops dimension by {}", da as i64 - db as i64));
                }
            }
        }
        let n = nodes.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.below[i][j] && self.below[j][i] {
                    out.push(format!("{} and {} lie in each other's closure", nodes[i].label, nodes[j].label));
                }
            }
        }
        let tops: Vec<_> = (0..n).filter(|&i| (0..n).all(|j| self.below[i][j])).collect();
        let bottoms: Vec<_> = (0..n).filter(|&j| (0..n).all(|i| self.below[i][j])).collect();
        if tops.len() != 1 {
            out.push(format!("{} top elements", tops.len()));
        }
        if bottoms.len() != 1 {
            out.push(format!("{} bottom elements", bottoms.len()));
        }
        let mut count = vec![0usize; DIM + 1];
        for node in nodes {
            if node.dim > DIM {
                out.push(format!("{} has dimension {}", node.label, node.dim));
            } else {
                count[node.dim] += 1;
            }
        }
        if count != [1, 1, 3, 3, 3, 1, 1] {
            out.push(format!("cells per dimension {count:?}"));
        }
        // The involution relabeling is a poset and diagram automorphism.
        for (a, b) in &self.payload.covers {
            let (sa, sb) = (self.swap(a), self.swap(b));
            if !self.payload.covers.iter().any(|(x, y)| *x == sa && *y == sb) {
                out.push(format!("involution image of cover {a} > {b} is not a cover"));
            }
        }
        for e in &self.payload.chevalley_edges {
            let (sa, sb) = (self.swap(&e.from), self.swap(&e.to));
            if !self.payload.chevalley_edges.iter().any(|f| f.from == sa && f.to == sb && f.weight == e.weight) {
                out.push(format!("involution image of edge {} -> {} is not an edge", e.from, e.to));
            }
        }
        out
    }

    /// Checks `{e_i}`, `{h_i}` dual, `{f_i}` orthonormal, and
    /// `<m, n> = <p, q_cell> = 1`.
    pub fn verify_cell_pairings(&self, chow: &ChowRing) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let mut expect = |a: &str, b: &str, v: i64| -> Result<()> {
            let got = chow.pairing(&self.class_of(chow, a)?, &self.class_of(chow, b)?);
            if got != int(v) {
                out.push(format!("<{a}, {b}> = {got}, expected {v}"));
            }
            Ok(())
        };
        for i in 1..=3 {
            for j in 1..=3 {
                let d = i64::from(i == j);
                expect(&format!("e{i}"), &format!("h{j}"), d)?;
                expect(&format!("f{i}"), &format!("f{j}"), d)?;
            }
        }
        expect("m", "n", 1)?;
        expect("p", "q_cell", 1)?;
        Ok(out)
    }

    /// Checks `<class, c1^dim>` against the stored degree of every cell.
    pub fn verify_degrees(&self, chow: &ChowRing) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for node in &self.payload.nodes {
            let x = chow.named_class(&node.class)?;
            let got = chow.degree_of(&x, DIM - node.dim)?;
            if got != int(node.degree) {
                out.push(format!("degree of {} is {got}, expected {}", node.label, node.degree));
            }
        }
        Ok(out)
    }

    /// Checks that the involution swaps the classes of paired cells and
    /// fixes the others.
    pub fn verify_involution(&self, chow: &ChowRing) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for node in &self.payload.nodes {
            let image = chow.involution(&self.class_of(chow, &node.label)?);
            let want = self.class_of(chow, &self.swap(&node.label))?;
            if image != want {
                out.push(format!("involution sends {} to {image}", node.label));
            }
        }
        Ok(out)
    }

    /// Compares `c1 * X` with the stored diagram (classical) or the stored
    /// formulas (quantum) for every cell `X`.
    pub fn verify_chevalley_diagram(&self, ring: &QuantumRing, mode: ChevalleyMode) -> Result<Vec<String>> {
        let chow = ring.chow();
        let c1 = ChowClass::basis(1);
        let mut out = Vec::new();
        match mode {
            ChevalleyMode::Classical => {
                let cell_basis: Vec<ChowClass> =
                    CELL_BASIS.iter().map(|n| chow.named_class(n)).collect::<Result<_>>()?;
                let slot = |x: &ChowClass| {
                    cell_basis
                        .iter()
                        .position(|b| b == x)
                        .ok_or_else(|| Error::Inconsistent(format!("{x} is not a cell class")))
                };
                for node in &self.payload.nodes {
                    let coords = chow.cell_coordinates(&chow.cup(&c1, &chow.named_class(&node.class)?));
                    for other in &self.payload.nodes {
                        if other.dim + 1 != node.dim {
                            continue;
                        }
                        let got = &coords[slot(&chow.named_class(&other.class)?)?];
                        let want = self
                            .payload
                            .chevalley_edges
                            .iter()
                            .find(|e| e.from == node.label && e.to == other.label)
                            .map_or(0, |e| e.weight);
                        if *got != int(i64::from(want)) {
                            out.push(format!(
                                "c1.{}: coefficient of {} is {got}, diagram has {want}",
                                node.label, other.label
                            ));
                        }
                    }
                }
            }
            ChevalleyMode::Quantum => {
                for f in &self.payload.quantum_chevalley {
                    let x = self.class_of(chow, &f.cell)?;
                    let got = ring.qmul_classes(&c1, &x);
                    let want = ring.literal_class(&parse_poly(&f.product)?);
                    if got != want {
                        out.push(format!(
                            "c1 * {} = {}, expected {}",
                            f.cell,
                            ring.format_in_cells(&got),
                            f.product
                        ));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Closure order, one row per dimension, followed by the covers.
    pub fn render_hasse(&self) -> String {
        let mut s = String::new();
        for d in (0..=DIM).rev() {
            let row: Vec<&str> =
                self.payload.nodes.iter().filter(|n| n.dim == d).map(|n| n.label.as_str()).collect();
            let _ = writeln!(s, "dim {d}: {}", row.join("  "));
        }
        for (a, b) in &self.payload.covers {
            let _ = writeln!(s, "  {a} > {b}");
        }
        s
    }

    /// The `c1`-diagram with edge multiplicities.
    pub fn render_chevalley(&self) -> String {
        let mut s = String::new();
        for node in &self.payload.nodes {
            let terms: Vec<String> = self
                .payload
                .chevalley_edges
                .iter()
                .filter(|e| e.from == node.label)
                .map(|e| if e.weight == 1 { e.to.clone() } else { format!("{} {}", e.weight, e.to) })
                .collect();
            if !terms.is_empty() {
                let _ = writeln!(s, "c1.{} = {}", node.label, terms.join(" + "));
            }
        }
        s
    }
}

fn lookup(index: &BTreeMap<String, usize>, label: &str) -> Result<usize> {
    index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_owned()))
}
