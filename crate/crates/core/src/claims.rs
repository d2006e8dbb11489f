//! Registry of published claims about disjointness graphs and their
//! adjudication by computation.
//!
//! Each claim is a predictor (the value the claim asserts, evaluated exactly
//! as stated, even where statements contradict each other) paired with a
//! checker that computes the true value with the solvers in
//! [`crate::invariants`] and, within their caps, the brute-force routines in
//! [`crate::oracle`]. A solver/oracle disagreement is an operational error,
//! never a verdict.

use std::cell::OnceCell;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::invariants::{self, Budget, Solved};
use crate::oracle::{self, LIMITS};
use crate::subset::{mask_label, MAX_N, MIN_N};
use crate::topo::{build_topo_graph, TopoGraph};
use crate::{are_isomorphic, corona, join};

/// Largest ground set accepted by [`verify_all`].
pub const VERIFY_MAX_N: usize = 12;

/// Parameter constraints of a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    AnyN,
    AtLeast(usize),
    Exactly(usize),
    /// A product claim over two ground sets `n` and `m`.
    Pair,
}

impl Applicability {
    fn admits(&self, n: usize, m: Option<usize>) -> bool {
        match *self {
            Applicability::AnyN => m.is_none(),
            Applicability::AtLeast(k) => m.is_none() && n >= k,
            Applicability::Exactly(k) => m.is_none() && n == k,
            Applicability::Pair => m.is_some(),
        }
    }
}

/// A registered claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    /// Which published result the claim comes from.
    pub source: &'static str,
    pub statement: &'static str,
    pub applicability: Applicability,
    /// Caveats about the published argument.
    pub note: Option<&'static str>,
}

const fn claim(
    id: &'static str,
    source: &'static str,
    statement: &'static str,
    applicability: Applicability,
) -> Claim {
    Claim {
        id,
        source,
        statement,
        applicability,
        note: None,
    }
}

static REGISTRY: [Claim; 21] = [
    claim(
        "DEF-GRAPH",
        "definition",
        "vertices are the nonempty proper subsets of X; A and B are adjacent iff A ∩ B = ∅",
        Applicability::AnyN,
    ),
    claim(
        "ISO-K2",
        "small-case proposition, n = 2",
        "for n = 2 the graph is K2",
        Applicability::Exactly(2),
    ),
    claim(
        "ISO-CORONA",
        "small-case proposition, n = 3",
        "for n = 3 the graph is the corona K3 ⊙ K1",
        Applicability::Exactly(3),
    ),
    claim(
        "CLIQUE-N",
        "clique/pendant proposition, part 1",
        "ω = n",
        Applicability::AnyN,
    ),
    claim(
        "PENDANT-N",
        "clique/pendant proposition, part 2",
        "exactly n vertices have degree 1",
        Applicability::AnyN,
    ),
    claim(
        "DELTA-MIN",
        "degree theorem, part 1",
        "δ = 1",
        Applicability::AnyN,
    ),
    claim(
        "DELTA-MAX",
        "degree theorem, part 2",
        "Δ = n − 1 + Σ_{i=2}^{n−1} C(n−1, i)",
        Applicability::AnyN,
    ),
    claim(
        "GAMMA",
        "domination theorem",
        "γ = 1 if n = 2 and γ = n if n > 2",
        Applicability::AnyN,
    ),
    claim(
        "BETA-STATED",
        "independence theorem, statement",
        "β = Σ_{i=⌊n/2⌋}^{n−1} C(n, i)",
        Applicability::AnyN,
    ),
    claim(
        "BETA-PROOF",
        "independence theorem, closing formula of the argument",
        "β = Σ_{i=n}^{2n−3} C(n, ⌈(i+1)/2⌉)",
        Applicability::AnyN,
    ),
    claim(
        "BETA-EXAMPLE",
        "worked example, n = 5",
        "β = 15 when n = 5",
        Applicability::Exactly(5),
    ),
    claim(
        "BETA-EQ-GAMMA",
        "corollary to the domination and independence theorems",
        "β = γ iff n = 3",
        Applicability::AnyN,
    ),
    claim(
        "CONNECTED",
        "connectivity theorem",
        "the graph is connected",
        Applicability::AnyN,
    ),
    claim(
        "ORDER",
        "order proposition",
        "the graph has 2^n − 2 vertices",
        Applicability::AnyN,
    ),
    claim(
        "NO-ISOLATED",
        "isolated-vertex proposition",
        "no vertex has degree 0",
        Applicability::AnyN,
    ),
    claim(
        "NULL-SUB",
        "null-subgraph proposition",
        "the graph has an induced null subgraph N_n",
        Applicability::AnyN,
    ),
    claim(
        "CORONA-GAMMA",
        "product theorem, corona part",
        "γ(G_n ⊙ G_m) = n, where n is read either as |X| or as the order of the left graph",
        Applicability::Pair,
    ),
    Claim {
        id: "JOIN-GAMMA",
        source: "product theorem, join part",
        statement: "γ(G_n + G_m) = γ(G_n) if n ≤ m, and γ(G_m) if n > m",
        applicability: Applicability::Pair,
        note: Some("checked as stated for every admissible pair"),
    },
    claim(
        "RAD-DIAM",
        "radius/diameter theorem",
        "rad = 2 and diam = 3 for n ≥ 3",
        Applicability::AtLeast(3),
    ),
    claim(
        "CUT-SINGLETON",
        "cut-vertex proposition, positive part",
        "every singleton is a cut vertex for n ≥ 3",
        Applicability::AtLeast(3),
    ),
    claim(
        "CUT-NOT-BIG",
        "cut-vertex proposition, negative part",
        "no (n−1)-element subset is a cut vertex for n ≥ 3",
        Applicability::AtLeast(3),
    ),
];

/// Every registered claim, in stable registry order.
pub fn list_claims() -> &'static [Claim] {
    &REGISTRY
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn registry_position(id: &str) -> usize {
    REGISTRY
        .iter()
        .position(|c| c.id == id)
        .unwrap_or(usize::MAX)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
    #[serde(rename = "INEXACT")]
    Inexact,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [
        Verdict::Confirmed,
        Verdict::Refuted,
        Verdict::NotApplicable,
        Verdict::Inexact,
    ];

    fn decide(agree: bool, exact: bool) -> Verdict {
        match (exact, agree) {
            (false, _) => Verdict::Inexact,
            (true, true) => Verdict::Confirmed,
            (true, false) => Verdict::Refuted,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Refuted => "REFUTED",
            Verdict::NotApplicable => "NOT-APPLICABLE",
            Verdict::Inexact => "INEXACT",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A predicted or computed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(u64),
    Text(String),
    /// Vertex subsets of a disjointness graph, by mask.
    Masks(Vec<u32>),
    None,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Text(s) => f.write_str(s),
            Value::Masks(ms) => {
                let labels: Vec<String> = ms.iter().map(|&m| mask_label(m)).collect();
                write!(f, "{{{}}}", labels.join(","))
            }
            Value::None => f.write_str("-"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => s.serialize_u64(*v),
            Value::Text(t) => s.serialize_str(t),
            Value::Masks(ms) => ms.serialize(s),
            Value::None => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "{}:{}", self.n, m),
            None => write!(f, "{}", self.n),
        }
    }
}

/// The graph a verdict was computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphSpec {
    Topo(usize),
    Corona(usize, usize),
    Join(usize, usize),
}

impl GraphSpec {
    pub fn build(&self) -> Result<SimpleGraph> {
        let topo = |k| build_topo_graph(k).map(|t| t.to_simple());
        match *self {
            GraphSpec::Topo(n) => topo(n),
            GraphSpec::Corona(n, m) => corona(&topo(n)?, &topo(m)?),
            GraphSpec::Join(n, m) => join(&topo(n)?, &topo(m)?),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Topo(n) => write!(f, "topo:{n}"),
            GraphSpec::Corona(n, m) => write!(f, "corona(topo:{n},topo:{m})"),
            GraphSpec::Join(n, m) => write!(f, "join(topo:{n},topo:{m})"),
        }
    }
}

impl Serialize for GraphSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A checkable witness, in vertex indices of the verdict's graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Clique { vertices: Vec<usize> },
    IndependentSet { vertices: Vec<usize> },
    DominatingSet { vertices: Vec<usize> },
    CutVertices { vertices: Vec<usize> },
    NonCutVertices { vertices: Vec<usize> },
    Pendants { vertices: Vec<usize> },
    Isolated { vertices: Vec<usize> },
    Degree { vertex: usize, degree: usize },
    Eccentricity { vertex: usize, eccentricity: usize },
}

impl Certificate {
    /// Re-checks the certificate on `g` from first principles.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < g.order());
        let components = |h: &SimpleGraph| invariants::connectivity(h).component_count;
        match self {
            Certificate::Clique { vertices } => in_range(vertices) && g.is_clique(vertices),
            Certificate::IndependentSet { vertices } => {
                in_range(vertices) && g.is_independent(vertices)
            }
            Certificate::DominatingSet { vertices } => {
                in_range(vertices) && g.is_dominating(vertices)
            }
            Certificate::CutVertices { vertices } | Certificate::NonCutVertices { vertices } => {
                let want_cut = matches!(self, Certificate::CutVertices { .. });
                let base = components(g);
                in_range(vertices)
                    && vertices.iter().all(|&v| {
                        let isolated = g.degree(v) == 0;
                        let after = g.without_vertex(v).map(|h| components(&h)).unwrap_or(0);
                        (after > base - usize::from(isolated)) == want_cut
                    })
            }
            Certificate::Pendants { vertices } => {
                in_range(vertices) && vertices.iter().all(|&v| g.degree(v) == 1)
            }
            Certificate::Isolated { vertices } => {
                in_range(vertices) && vertices.iter().all(|&v| g.degree(v) == 0)
            }
            Certificate::Degree { vertex, degree } => {
                *vertex < g.order() && g.degree(*vertex) == *degree
            }
            Certificate::Eccentricity {
                vertex,
                eccentricity,
            } => {
                *vertex < g.order()
                    && invariants::bfs_distances(g, *vertex)
                        .into_iter()
                        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
                        == Some(*eccentricity)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub summary: String,
    pub graph: GraphSpec,
    pub certificates: Vec<Certificate>,
}

/// An alternative reading of an ambiguous claim, judged separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reading {
    pub label: &'static str,
    pub predicted: Value,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claim: &'static str,
    pub params: Params,
    pub predicted: Value,
    pub computed: Value,
    pub verdict: Verdict,
    pub evidence: Evidence,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub readings: Vec<Reading>,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Maximum degree as the sum `n − 1 + Σ_{i=2}^{n−1} C(n−1, i)`.
pub fn stated_max_degree(n: usize) -> u64 {
    let n = n as u64;
    (n - 1) + (2..n).map(|i| binomial(n - 1, i)).sum::<u64>()
}

/// `Σ_{i=⌊n/2⌋}^{n−1} C(n, i)`.
pub fn stated_independence(n: usize) -> u64 {
    let n = n as u64;
    (n / 2..n).map(|i| binomial(n, i)).sum()
}

/// `Σ_{i=n}^{2n−3} C(n, ⌈(i+1)/2⌉)`; an empty sum for `n = 2`.
pub fn argued_independence(n: usize) -> u64 {
    let n = n as u64;
    (n..=(2 * n).saturating_sub(3))
        .map(|i| binomial(n, (i + 1).div_ceil(2)))
        .sum()
}

/// `1` for `n = 2`, `n` otherwise.
pub fn stated_domination(n: usize) -> u64 {
    if n == 2 {
        1
    } else {
        n as u64
    }
}

fn mismatch(routine: &'static str, solver: String, oracle: String) -> Error {
    Error::OracleMismatch {
        routine,
        solver,
        oracle,
    }
}

/// Lazily computed invariants of one disjointness graph.
struct Instance {
    n: usize,
    topo: TopoGraph,
    graph: SimpleGraph,
    budget: Budget,
    clique: OnceCell<Solved>,
    independence: OnceCell<Solved>,
    domination: OnceCell<Solved>,
    cuts: OnceCell<Vec<usize>>,
}

impl Instance {
    fn new(n: usize, budget: Budget) -> Result<Self> {
        let topo = build_topo_graph(n)?;
        let graph = topo.to_simple();
        Ok(Instance {
            n,
            topo,
            graph,
            budget,
            clique: OnceCell::new(),
            independence: OnceCell::new(),
            domination: OnceCell::new(),
            cuts: OnceCell::new(),
        })
    }

    fn within_enumeration_cap(&self) -> bool {
        self.graph.order() <= LIMITS.max_order_enumeration
    }

    fn clique(&self) -> Result<&Solved> {
        if let Some(s) = self.clique.get() {
            return Ok(s);
        }
        let s = invariants::clique_number(&self.graph, self.budget);
        if s.exact && self.within_enumeration_cap() {
            let o = oracle::oracle_max_clique(&self.graph)?;
            if o != s.value {
                return Err(mismatch(
                    "clique number",
                    s.value.to_string(),
                    o.to_string(),
                ));
            }
        }
        Ok(self.clique.get_or_init(|| s))
    }

    fn independence(&self) -> Result<&Solved> {
        if let Some(s) = self.independence.get() {
            return Ok(s);
        }
        let s = invariants::independence_number(&self.graph, self.budget);
        if s.exact && self.within_enumeration_cap() {
            let o = oracle::oracle_max_independent(&self.graph)?;
            if o != s.value {
                return Err(mismatch(
                    "independence number",
                    s.value.to_string(),
                    o.to_string(),
                ));
            }
        }
        Ok(self.independence.get_or_init(|| s))
    }

    fn domination(&self) -> Result<&Solved> {
        if let Some(s) = self.domination.get() {
            return Ok(s);
        }
        let s = checked_domination(&self.graph, self.budget)?;
        Ok(self.domination.get_or_init(|| s))
    }

    fn cuts(&self) -> Result<&Vec<usize>> {
        if let Some(c) = self.cuts.get() {
            return Ok(c);
        }
        let c = invariants::cut_vertices(&self.graph);
        if self.graph.order() <= LIMITS.max_order_removal {
            let o = oracle::oracle_articulation(&self.graph)?;
            if o != c {
                return Err(mismatch("cut vertices", format!("{c:?}"), format!("{o:?}")));
            }
        }
        Ok(self.cuts.get_or_init(|| c))
    }

    fn masks(&self, indices: &[usize]) -> Vec<u32> {
        indices
            .iter()
            .map(|&i| self.topo.vertex(i).mask())
            .collect()
    }

    fn indices_of_size(&self, k: usize) -> Vec<usize> {
        self.topo
            .vertices_of_size(k)
            .into_iter()
            .map(|v| self.topo.index_of(v))
            .collect()
    }

    fn labels(&self, indices: &[usize]) -> String {
        Value::Masks(self.masks(indices)).to_string()
    }
}

fn checked_domination(g: &SimpleGraph, budget: Budget) -> Result<Solved> {
    let s = invariants::domination_number(g, budget);
    if s.exact && g.order() <= LIMITS.max_order_enumeration {
        let (o, _) = oracle::oracle_min_dominating(g)?;
        if o != s.value {
            return Err(mismatch(
                "domination number",
                s.value.to_string(),
                o.to_string(),
            ));
        }
    }
    Ok(s)
}

struct Outcome {
    predicted: Value,
    computed: Value,
    agree: bool,
    exact: bool,
    summary: String,
    certificates: Vec<Certificate>,
}

fn int_outcome(predicted: u64, solved: &Solved, summary: String, cert: Certificate) -> Outcome {
    Outcome {
        predicted: Value::Int(predicted),
        computed: Value::Int(solved.value as u64),
        agree: predicted == solved.value as u64,
        exact: solved.exact,
        summary,
        certificates: vec![cert],
    }
}

fn exact_int(
    predicted: u64,
    computed: u64,
    summary: String,
    certificates: Vec<Certificate>,
) -> Outcome {
    Outcome {
        predicted: Value::Int(predicted),
        computed: Value::Int(computed),
        agree: predicted == computed,
        exact: true,
        summary,
        certificates,
    }
}

fn check_single(id: &'static str, inst: &Instance) -> Result<Outcome> {
    let n = inst.n;
    let g = &inst.graph;
    let out = match id {
        "DEF-GRAPH" => {
            // enumerate subsets as element lists and compare with the built adjacency
            let full = (1u32 << n) - 1;
            let subsets: Vec<Vec<usize>> = (1..full)
                .map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect())
                .collect();
            let mut disjoint_pairs = 0u64;
            let mut first_mismatch = None;
            for (i, a) in subsets.iter().enumerate() {
                for (j, b) in subsets.iter().enumerate().skip(i + 1) {
                    let disjoint = a.iter().all(|x| !b.contains(x));
                    disjoint_pairs += u64::from(disjoint);
                    if disjoint != g.has_edge(i, j) && first_mismatch.is_none() {
                        first_mismatch = Some((i, j));
                    }
                }
            }
            let summary = match first_mismatch {
                None => format!("edge set equals the {disjoint_pairs} disjoint pairs"),
                Some((i, j)) => format!("pair {} / {} disagrees", g.label(i), g.label(j)),
            };
            Outcome {
                predicted: Value::Int(disjoint_pairs),
                computed: Value::Int(g.size() as u64),
                agree: first_mismatch.is_none() && disjoint_pairs == g.size() as u64,
                exact: true,
                summary,
                certificates: Vec::new(),
            }
        }
        "ISO-K2" | "ISO-CORONA" => {
            let (name, target) = if id == "ISO-K2" {
                ("K2", SimpleGraph::complete(2))
            } else {
                (
                    "K3⊙K1",
                    corona(&SimpleGraph::complete(3), &SimpleGraph::complete(1))?,
                )
            };
            let iso = are_isomorphic(g, &target)?;
            Outcome {
                predicted: Value::Text(name.into()),
                computed: Value::Text(if iso {
                    name.into()
                } else {
                    format!("order {} size {}", g.order(), g.size())
                }),
                agree: iso,
                exact: true,
                summary: format!(
                    "{} isomorphic to {name} (exhaustive search)",
                    if iso { "is" } else { "is not" }
                ),
                certificates: Vec::new(),
            }
        }
        "CLIQUE-N" => {
            let s = inst.clique()?;
            let how = if inst.within_enumeration_cap() {
                "solver and oracle"
            } else {
                "solver"
            };
            int_outcome(
                n as u64,
                s,
                format!("maximum clique {} ({how})", inst.labels(&s.witness)),
                Certificate::Clique {
                    vertices: s.witness.clone(),
                },
            )
        }
        "PENDANT-N" => {
            let p = invariants::pendant_vertices(g);
            let co_singletons = inst.indices_of_size(n - 1);
            exact_int(
                n as u64,
                p.len() as u64,
                format!(
                    "pendants {}; {} the (n−1)-subsets",
                    inst.labels(&p),
                    if p == co_singletons {
                        "equal to"
                    } else {
                        "differ from"
                    }
                ),
                vec![Certificate::Pendants { vertices: p }],
            )
        }
        "DELTA-MIN" | "DELTA-MAX" => {
            let degrees = g.degrees();
            let pick = if id == "DELTA-MIN" {
                (0..g.order()).min_by_key(|&v| degrees[v])
            } else {
                (0..g.order()).max_by_key(|&v| (degrees[v], std::cmp::Reverse(v)))
            }
            .expect("graph is nonempty");
            let predicted = if id == "DELTA-MIN" {
                1
            } else {
                stated_max_degree(n)
            };
            exact_int(
                predicted,
                degrees[pick] as u64,
                format!("deg {} = {}", g.label(pick), degrees[pick]),
                vec![Certificate::Degree {
                    vertex: pick,
                    degree: degrees[pick],
                }],
            )
        }
        "GAMMA" => {
            let s = inst.domination()?;
            int_outcome(
                stated_domination(n),
                s,
                format!("minimum dominating set {}", inst.labels(&s.witness)),
                Certificate::DominatingSet {
                    vertices: s.witness.clone(),
                },
            )
        }
        "BETA-STATED" | "BETA-PROOF" | "BETA-EXAMPLE" => {
            let s = inst.independence()?;
            let predicted = match id {
                "BETA-STATED" => stated_independence(n),
                "BETA-PROOF" => argued_independence(n),
                _ => 15,
            };
            int_outcome(
                predicted,
                s,
                format!(
                    "maximum independent set of size {}: {}",
                    s.value,
                    inst.labels(&s.witness)
                ),
                Certificate::IndependentSet {
                    vertices: s.witness.clone(),
                },
            )
        }
        "BETA-EQ-GAMMA" => {
            let beta = inst.independence()?;
            let gamma = inst.domination()?;
            let word = |eq: bool| if eq { "equal" } else { "unequal" };
            let predicted = n == 3;
            let computed = beta.value == gamma.value;
            Outcome {
                predicted: Value::Text(word(predicted).into()),
                computed: Value::Text(word(computed).into()),
                agree: predicted == computed,
                exact: beta.exact && gamma.exact,
                summary: format!("β = {}, γ = {}", beta.value, gamma.value),
                certificates: vec![
                    Certificate::IndependentSet {
                        vertices: beta.witness.clone(),
                    },
                    Certificate::DominatingSet {
                        vertices: gamma.witness.clone(),
                    },
                ],
            }
        }
        "CONNECTED" => {
            let c = invariants::connectivity(g);
            let describe = |k: usize| {
                if k == 1 {
                    "connected".to_string()
                } else {
                    format!("{k} components")
                }
            };
            Outcome {
                predicted: Value::Text("connected".into()),
                computed: Value::Text(describe(c.component_count)),
                agree: c.is_connected,
                exact: true,
                summary: format!(
                    "breadth-first search found {} component(s)",
                    c.component_count
                ),
                certificates: Vec::new(),
            }
        }
        "ORDER" => exact_int(
            (1u64 << n) - 2,
            g.order() as u64,
            format!("{} vertices constructed", g.order()),
            Vec::new(),
        ),
        "NO-ISOLATED" => {
            let isolated: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 0).collect();
            let summary = format!("minimum degree {}", invariants::degree_extremes(g).0);
            exact_int(
                0,
                isolated.len() as u64,
                summary,
                vec![Certificate::Isolated { vertices: isolated }],
            )
        }
        "NULL-SUB" => {
            let co_singletons = inst.indices_of_size(n - 1);
            let target = format!("N{n}");
            if g.is_independent(&co_singletons) {
                Outcome {
                    predicted: Value::Text(target.clone()),
                    computed: Value::Text(target),
                    agree: true,
                    exact: true,
                    summary: format!(
                        "(n−1)-subsets {} induce a null graph",
                        inst.labels(&co_singletons)
                    ),
                    certificates: vec![Certificate::IndependentSet {
                        vertices: co_singletons,
                    }],
                }
            } else {
                let beta = inst.independence()?;
                let found = beta.value >= n;
                let witness: Vec<usize> = beta.witness.iter().copied().take(n).collect();
                Outcome {
                    predicted: Value::Text(target.clone()),
                    computed: Value::Text(if found {
                        target
                    } else {
                        format!("none (β = {})", beta.value)
                    }),
                    agree: found,
                    exact: found || beta.exact,
                    summary: format!(
                        "(n−1)-subsets are not independent; largest independent set {}",
                        inst.labels(&beta.witness)
                    ),
                    certificates: vec![Certificate::IndependentSet { vertices: witness }],
                }
            }
        }
        "RAD-DIAM" => {
            let ecc = invariants::eccentricities(g)?;
            if g.order() <= LIMITS.max_order_distances {
                let d = oracle::oracle_all_pairs_distances(g)?;
                let oracle_ecc: Vec<usize> = d
                    .iter()
                    .map(|row| row.iter().map(|x| x.expect("connected")).max().unwrap())
                    .collect();
                if oracle_ecc != ecc.per_vertex {
                    return Err(mismatch(
                        "eccentricities",
                        format!("{:?}", ecc.per_vertex),
                        format!("{oracle_ecc:?}"),
                    ));
                }
            }
            let center = ecc
                .per_vertex
                .iter()
                .position(|&e| e == ecc.radius)
                .unwrap();
            let periphery = ecc
                .per_vertex
                .iter()
                .position(|&e| e == ecc.diameter)
                .unwrap();
            Outcome {
                predicted: Value::Text("rad=2 diam=3".into()),
                computed: Value::Text(format!("rad={} diam={}", ecc.radius, ecc.diameter)),
                agree: (ecc.radius, ecc.diameter) == (2, 3),
                exact: true,
                summary: format!(
                    "e({}) = {}, e({}) = {}",
                    g.label(center),
                    ecc.radius,
                    g.label(periphery),
                    ecc.diameter
                ),
                certificates: vec![
                    Certificate::Eccentricity {
                        vertex: center,
                        eccentricity: ecc.radius,
                    },
                    Certificate::Eccentricity {
                        vertex: periphery,
                        eccentricity: ecc.diameter,
                    },
                ],
            }
        }
        "CUT-SINGLETON" | "CUT-NOT-BIG" => {
            let cuts = inst.cuts()?;
            let size = if id == "CUT-SINGLETON" { 1 } else { n - 1 };
            let group = inst.indices_of_size(size);
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                group.iter().partition(|v| cuts.contains(v));
            let predicted = if id == "CUT-SINGLETON" {
                inst.masks(&group)
            } else {
                Vec::new()
            };
            let computed = inst.masks(&hit);
            Outcome {
                agree: predicted == computed,
                predicted: Value::Masks(predicted),
                computed: Value::Masks(computed),
                exact: true,
                summary: format!("cut vertices {}", inst.labels(cuts)),
                certificates: vec![
                    Certificate::CutVertices { vertices: hit },
                    Certificate::NonCutVertices { vertices: miss },
                ],
            }
        }
        other => unreachable!("{other} is not a single-graph claim"),
    };
    Ok(out)
}

fn check_pair(
    id: &'static str,
    n: usize,
    m: usize,
    budget: Budget,
) -> Result<(Outcome, GraphSpec, Vec<Reading>)> {
    let spec = if id == "CORONA-GAMMA" {
        GraphSpec::Corona(n, m)
    } else {
        GraphSpec::Join(n, m)
    };
    let g = spec.build()?;
    let s = checked_domination(&g, budget)?;
    let summary = format!(
        "order {}; minimum dominating set {{{}}}",
        g.order(),
        s.witness
            .iter()
            .map(|&v| g.label(v))
            .collect::<Vec<_>>()
            .join(",")
    );
    let cert = Certificate::DominatingSet {
        vertices: s.witness.clone(),
    };
    if id == "CORONA-GAMMA" {
        let literal = n as u64;
        let structural = (1u64 << n) - 2;
        let outcome = int_outcome(literal, &s, summary, cert);
        let readings = vec![
            Reading {
                label: "literal",
                predicted: Value::Int(literal),
                verdict: Verdict::decide(literal == s.value as u64, s.exact),
            },
            Reading {
                label: "structural",
                predicted: Value::Int(structural),
                verdict: Verdict::decide(structural == s.value as u64, s.exact),
            },
        ];
        Ok((outcome, spec, readings))
    } else {
        let predicted = if n <= m {
            stated_domination(n)
        } else {
            stated_domination(m)
        };
        Ok((int_outcome(predicted, &s, summary, cert), spec, Vec::new()))
    }
}

fn not_applicable(claim: &'static Claim, params: Params, spec: GraphSpec) -> ClaimVerdict {
    let requirement = match claim.applicability {
        Applicability::AnyN => "a single ground set".to_string(),
        Applicability::AtLeast(k) => format!("n ≥ {k}"),
        Applicability::Exactly(k) => format!("n = {k}"),
        Applicability::Pair => "two ground sets n and m".to_string(),
    };
    ClaimVerdict {
        claim: claim.id,
        params,
        predicted: Value::None,
        computed: Value::None,
        verdict: Verdict::NotApplicable,
        evidence: Evidence {
            summary: format!("claim requires {requirement}"),
            graph: spec,
            certificates: Vec::new(),
        },
        readings: Vec::new(),
    }
}

fn assemble(
    claim: &'static Claim,
    params: Params,
    spec: GraphSpec,
    out: Outcome,
    readings: Vec<Reading>,
) -> ClaimVerdict {
    ClaimVerdict {
        claim: claim.id,
        params,
        verdict: Verdict::decide(out.agree, out.exact),
        predicted: out.predicted,
        computed: out.computed,
        evidence: Evidence {
            summary: out.summary,
            graph: spec,
            certificates: out.certificates,
        },
        readings,
    }
}

fn check_on(claim: &'static Claim, inst: &Instance) -> Result<ClaimVerdict> {
    let params = Params { n: inst.n, m: None };
    let spec = GraphSpec::Topo(inst.n);
    if !claim.applicability.admits(inst.n, None) {
        return Ok(not_applicable(claim, params, spec));
    }
    let out = check_single(claim.id, inst)?;
    Ok(assemble(claim, params, spec, out, Vec::new()))
}

/// Adjudicates one claim at `n` (and `m` for product claims).
///
/// ```
/// use topograph::claims::{check_claim, Verdict};
/// use topograph::Budget;
///
/// let v = check_claim("BETA-STATED", 4, None, Budget::default()).unwrap();
/// assert_eq!(v.predicted.to_string(), "10");
/// assert_eq!(v.computed.to_string(), "7");
/// assert_eq!(v.verdict, Verdict::Refuted);
/// ```
pub fn check_claim(id: &str, n: usize, m: Option<usize>, budget: Budget) -> Result<ClaimVerdict> {
    let claim = find_claim(id)?;
    for k in std::iter::once(n).chain(m) {
        if !(MIN_N..=MAX_N).contains(&k) {
            return Err(Error::OutOfRange {
                n: k,
                min: MIN_N,
                max: MAX_N,
            });
        }
    }
    let params = Params { n, m };
    match (claim.applicability, m) {
        (Applicability::Pair, Some(m)) => {
            let (out, spec, readings) = check_pair(claim.id, n, m, budget)?;
            Ok(assemble(claim, params, spec, out, readings))
        }
        (Applicability::Pair, None) => Ok(not_applicable(claim, params, GraphSpec::Topo(n))),
        (_, Some(_)) => Ok(not_applicable(claim, params, GraphSpec::Topo(n))),
        (_, None) => check_on(claim, &Instance::new(n, budget)?),
    }
}

/// Verdict counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub not_applicable: usize,
    pub inexact: usize,
}

impl Summary {
    pub fn tally(verdicts: &[ClaimVerdict]) -> Self {
        let mut s = Summary::default();
        for v in verdicts {
            match v.verdict {
                Verdict::Confirmed => s.confirmed += 1,
                Verdict::Refuted => s.refuted += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
                Verdict::Inexact => s.inexact += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CONFIRMED={} REFUTED={} NOT-APPLICABLE={} INEXACT={}",
            self.confirmed, self.refuted, self.not_applicable, self.inexact
        )
    }
}

/// Ordered pairs `(n, m)` in range whose products stay within the oracle's
/// enumeration cap.
pub fn product_pairs(claim_id: &str, n_min: usize, n_max: usize) -> Vec<(usize, usize)> {
    let topo_order = |k: usize| (1usize << k) - 2;
    let product_order = |n: usize, m: usize| match claim_id {
        "CORONA-GAMMA" => topo_order(n) * (1 + topo_order(m)),
        _ => topo_order(n) + topo_order(m),
    };
    (n_min..=n_max)
        .flat_map(|n| (n_min..=n_max).map(move |m| (n, m)))
        .filter(|&(n, m)| product_order(n, m) <= LIMITS.max_order_enumeration)
        .collect()
}

/// Checks every claim at every `n` in `n_min..=n_max`, and product claims at
/// every admissible ordered pair.
///
/// Ground sets run in parallel; the result is ordered by registry position,
/// then parameters, independent of scheduling.
pub fn verify_all(n_min: usize, n_max: usize, budget: Budget) -> Result<Vec<ClaimVerdict>> {
    if n_min > n_max {
        return Err(Error::InvalidRange { n_min, n_max });
    }
    for n in [n_min, n_max] {
        if !(MIN_N..=VERIFY_MAX_N).contains(&n) {
            return Err(Error::OutOfRange {
                n,
                min: MIN_N,
                max: VERIFY_MAX_N,
            });
        }
    }
    let single: Vec<Vec<ClaimVerdict>> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let inst = Instance::new(n, budget)?;
            REGISTRY
                .iter()
                .filter(|c| c.applicability != Applicability::Pair)
                .map(|c| check_on(c, &inst))
                .collect()
        })
        .collect::<Result<_>>()?;

    let pair_jobs: Vec<(&'static Claim, usize, usize)> = REGISTRY
        .iter()
        .filter(|c| c.applicability == Applicability::Pair)
        .flat_map(|c| {
            product_pairs(c.id, n_min, n_max)
                .into_iter()
                .map(move |(n, m)| (c, n, m))
        })
        .collect();
    let pairs: Vec<ClaimVerdict> = pair_jobs
        .into_par_iter()
        .map(|(c, n, m)| check_claim(c.id, n, Some(m), budget))
        .collect::<Result<_>>()?;

    let mut all: Vec<ClaimVerdict> = single.into_iter().flatten().chain(pairs).collect();
    all.sort_by_key(|v| (registry_position(v.claim), v.params));
    Ok(all)
}
