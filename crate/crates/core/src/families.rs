//! Named target graphs and the witness tournaments realizing them.
//!
//! Targets are disjoint unions over a small component alphabet (paths,
//! cycles, the 4-vertex star, and four specific small trees) plus isolated
//! vertices. Witnesses are the fixed tournaments `D1`..`D27` and the regular
//! 5-tournament; several families take a parameter `k >= 1` controlling an
//! isolated-vertex tail.
//!
//! Every constructor validates itself: the built digraph must be a genuine
//! multipartite tournament on its declared shape whose competition graph is
//! isomorphic to the documented target. Because fixed arc tables are
//! transcription-prone, a failed validation falls back to an exhaustive
//! search over the same shape for any orientation realizing the target
//! before reporting an error.

use crate::digraph::Digraph;
use crate::enumerate::{first_match, OrientationUniverse, Prune};
use crate::error::FamilyError;
use crate::graph::{self, Graph};
use crate::partition::{complete_multipartite, PartiteShape, VertexPartition};

/// Component alphabet for target patterns.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Component {
    /// Path on `n >= 1` vertices; `Path(1)` is a single isolated vertex.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// The star with three leaves (4 vertices).
    Star3,
    /// Star with four leaves (5 vertices).
    G1,
    /// The chair: a 4-vertex path with a pendant on an interior vertex
    /// adjacent to an end.
    G2,
    /// The 6-vertex spider with legs of lengths 2, 2, 1.
    G3,
    /// The 6-vertex caterpillar: a 5-vertex path with a pendant on the
    /// second vertex of the path.
    G4,
}

impl Component {
    pub fn order(self) -> usize {
        match self {
            Component::Path(n) => n,
            Component::Cycle(n) => n,
            Component::Star3 => 4,
            Component::G1 => 5,
            Component::G2 => 5,
            Component::G3 | Component::G4 => 6,
        }
    }

    fn validate(self) -> Result<(), FamilyError> {
        match self {
            Component::Path(n) if n == 0 => {
                Err(FamilyError::PatternConstraint("path on 0 vertices".into()))
            }
            Component::Cycle(n) if n < 3 => {
                Err(FamilyError::PatternConstraint(format!("cycle on {n} < 3 vertices")))
            }
            _ => Ok(()),
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Component::Path(n) => graph::path(n),
            Component::Cycle(n) => graph::cycle(n),
            Component::Star3 => graph::star(3),
            Component::G1 => graph::star(4),
            Component::G2 => {
                Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).expect("fixed")
            }
            Component::G3 => {
                Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).expect("fixed")
            }
            Component::G4 => {
                Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).expect("fixed")
            }
        }
    }

    pub fn name(self) -> String {
        match self {
            Component::Path(n) => format!("P{n}"),
            Component::Cycle(n) => format!("C{n}"),
            Component::Star3 => "K1,3".into(),
            Component::G1 => "G1".into(),
            Component::G2 => "G2".into(),
            Component::G3 => "G3".into(),
            Component::G4 => "G4".into(),
        }
    }
}

/// Identifiers of the four fixed connected trees.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedGraph {
    G1,
    G2,
    G3,
    G4,
}

/// The four connected triangle-free graphs beyond paths, cycles and stars
/// that occur as competition graphs of tripartite tournaments.
pub fn named_graph(id: NamedGraph) -> Graph {
    match id {
        NamedGraph::G1 => Component::G1.graph(),
        NamedGraph::G2 => Component::G2.graph(),
        NamedGraph::G3 => Component::G3.graph(),
        NamedGraph::G4 => Component::G4.graph(),
    }
}

/// Disjoint union of the components in declaration order followed by
/// `isolated` isolated vertices.
pub fn build_pattern(components: &[Component], isolated: usize) -> Result<Graph, FamilyError> {
    let mut order = isolated;
    for c in components {
        c.validate()?;
        order += c.order();
    }
    if order == 0 {
        return Err(FamilyError::PatternConstraint("empty pattern".into()));
    }
    if order > crate::MAX_VERTICES {
        return Err(FamilyError::PatternConstraint(format!("pattern order {order} > 64")));
    }
    let mut g = Graph::empty(order).expect("order validated");
    let mut base = 0;
    for c in components {
        for (u, v) in c.graph().edges() {
            g.add_edge(base + u, base + v);
        }
        base += c.order();
    }
    Ok(g)
}

/// Human-readable pattern name, e.g. `P3+P2+I2`.
pub fn pattern_name(components: &[Component], isolated: usize) -> String {
    let mut parts: Vec<String> = components.iter().map(|c| c.name()).collect();
    if isolated > 0 {
        parts.push(format!("I{isolated}"));
    }
    if parts.is_empty() {
        "I0".into()
    } else {
        parts.join("+")
    }
}

/// Decomposes a graph into recognized components plus an isolated-vertex
/// count. Components come back sorted (descending order, then kind), with
/// `Path(1)` absorbed into the isolated count. `None` if any component is
/// outside the alphabet.
pub fn match_components(g: &Graph) -> Option<(Vec<Component>, usize)> {
    let mut comps = Vec::new();
    let mut isolated = 0usize;
    for mask in g.components() {
        if mask.count_ones() == 1 {
            isolated += 1;
            continue;
        }
        comps.push(classify_component(&g.induced(mask))?);
    }
    comps.sort_by(|a, b| (b.order(), b).cmp(&(a.order(), a)));
    Some((comps, isolated))
}

fn classify_component(h: &Graph) -> Option<Component> {
    let n = h.order();
    debug_assert!(h.is_connected() && n >= 2);
    let mut degs = h.degrees();
    degs.sort_unstable();
    if degs[n - 1] <= 2 {
        // connected with max degree 2: a path or a cycle
        return if degs[0] == 1 { Some(Component::Path(n)) } else { Some(Component::Cycle(n)) };
    }
    let candidates: &[Component] = match n {
        4 => &[Component::Star3],
        5 => &[Component::G1, Component::G2],
        6 => &[Component::G3, Component::G4],
        _ => return None,
    };
    let form = h.canonical_form();
    candidates.iter().copied().find(|c| c.graph().canonical_form() == form)
}

/// Constraint on the isolated-vertex count of a pattern.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsolatedRule {
    Exactly(usize),
    AtLeast(usize),
}

impl IsolatedRule {
    pub fn admits(self, count: usize) -> bool {
        match self {
            IsolatedRule::Exactly(k) => count == k,
            IsolatedRule::AtLeast(k) => count >= k,
        }
    }
}

/// A target shape: fixed components plus an isolated-vertex constraint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphPattern {
    pub components: Vec<Component>,
    pub isolated: IsolatedRule,
}

impl GraphPattern {
    pub fn new(components: impl Into<Vec<Component>>, isolated: IsolatedRule) -> Self {
        GraphPattern { components: components.into(), isolated }
    }

    /// Whether a decomposed graph matches this pattern.
    pub fn matches(&self, components: &[Component], isolated: usize) -> bool {
        if !self.isolated.admits(isolated) {
            return false;
        }
        let mut a = self.components.clone();
        let mut b = components.to_vec();
        a.sort();
        b.sort();
        a == b
    }

    /// Materializes the pattern with a concrete isolated count.
    pub fn build(&self, isolated: usize) -> Result<Graph, FamilyError> {
        if !self.isolated.admits(isolated) {
            return Err(FamilyError::PatternConstraint(format!(
                "isolated count {isolated} violates {:?}",
                self.isolated
            )));
        }
        build_pattern(&self.components, isolated)
    }
}

/// Identifiers of the fixed witness tournaments.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WitnessId {
    D(u8),
    Reg5,
}

impl WitnessId {
    pub fn all() -> Vec<WitnessId> {
        let mut v: Vec<WitnessId> = (1..=27).map(WitnessId::D).collect();
        v.push(WitnessId::Reg5);
        v
    }

    /// Minimum parameter for parameterized families; `None` for fixed ones.
    pub fn parameter_min(self) -> Option<usize> {
        match self {
            WitnessId::D(8..=12) | WitnessId::D(18..=20) | WitnessId::D(24..=25) => Some(1),
            _ => None,
        }
    }
}

impl std::fmt::Display for WitnessId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessId::D(i) => write!(f, "D{i}"),
            WitnessId::Reg5 => write!(f, "REG5"),
        }
    }
}

impl std::str::FromStr for WitnessId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let upper = s.to_ascii_uppercase();
        if upper == "REG5" {
            return Ok(WitnessId::Reg5);
        }
        if let Some(num) = upper.strip_prefix('D') {
            if let Ok(i) = num.parse::<u8>() {
                if (1..=27).contains(&i) {
                    return Ok(WitnessId::D(i));
                }
            }
        }
        Err(FamilyError::UnknownFamily(s.into()))
    }
}

/// A validated witness: a multipartite tournament on `shape` whose
/// competition graph is isomorphic to the target pattern.
#[derive(Clone, Debug)]
pub struct Witness {
    pub digraph: Digraph,
    pub partition: VertexPartition,
    pub target: (Vec<Component>, usize),
    pub label: String,
}

impl Witness {
    pub fn shape(&self) -> &PartiteShape {
        self.partition.shape()
    }

    pub fn target_graph(&self) -> Graph {
        build_pattern(&self.target.0, self.target.1).expect("validated target")
    }
}

struct Table {
    shape: Vec<usize>,
    arcs: Vec<(usize, usize)>,
    components: Vec<Component>,
    isolated: usize,
}

/// Arc tables for the fixed and parameterized families. Vertices are
/// numbered in canonical partition order (largest part first).
fn table(id: WitnessId, k: usize) -> Table {
    use Component::*;
    match id {
        // shape (2,2,1): star with four leaves
        WitnessId::D(1) => Table {
            shape: vec![2, 2, 1],
            arcs: vec![(4, 0), (4, 1), (4, 2), (4, 3), (0, 3), (1, 2), (2, 0), (3, 1)],
            components: vec![G1],
            isolated: 0,
        },
        // shape (2,2,1): chair
        WitnessId::D(2) => Table {
            shape: vec![2, 2, 1],
            arcs: vec![(4, 1), (4, 3), (0, 4), (0, 2), (0, 3), (1, 2), (2, 4), (3, 1)],
            components: vec![G2],
            isolated: 0,
        },
        // shape (3,2,1): spider with legs 2,2,1
        WitnessId::D(3) => Table {
            shape: vec![3, 2, 1],
            arcs: vec![
                (5, 3), (5, 4), (5, 1), (3, 0), (3, 2), (4, 0), (4, 1), (0, 5), (1, 3), (2, 5),
                (2, 4),
            ],
            components: vec![G3],
            isolated: 0,
        },
        // shape (3,2,1): caterpillar
        WitnessId::D(4) => Table {
            shape: vec![3, 2, 1],
            arcs: vec![
                (5, 4), (5, 0), (5, 1), (3, 5), (3, 0), (4, 1), (4, 2), (0, 4), (1, 3), (2, 3),
                (2, 5),
            ],
            components: vec![G4],
            isolated: 0,
        },
        // 4-tournament: 3-leaf star
        WitnessId::D(5) => Table {
            shape: vec![1, 1, 1, 1],
            arcs: vec![(0, 1), (1, 3), (2, 1), (2, 3), (2, 0), (3, 0)],
            components: vec![Star3],
            isolated: 0,
        },
        // shape (2,1,1,1): 5-vertex path
        WitnessId::D(6) => Table {
            shape: vec![2, 1, 1, 1],
            arcs: vec![(0, 2), (1, 3), (1, 4), (2, 1), (2, 3), (3, 4), (3, 0), (4, 0), (4, 2)],
            components: vec![Path(5)],
            isolated: 0,
        },
        // shape (2,1,1,1): chair
        WitnessId::D(7) => Table {
            shape: vec![2, 1, 1, 1],
            arcs: vec![(0, 4), (1, 3), (4, 1), (2, 1), (2, 0), (2, 3), (3, 4), (3, 0), (4, 2)],
            components: vec![G2],
            isolated: 0,
        },
        // shape (k,1): empty graph of order k+1
        WitnessId::D(8) => Table {
            shape: vec![k, 1],
            arcs: (0..k).map(|i| (k, i)).collect(),
            components: vec![],
            isolated: k + 1,
        },
        // shape (k+1,1): one edge plus k isolated vertices
        WitnessId::D(9) => Table {
            shape: vec![k + 1, 1],
            arcs: [(0, k + 1), (1, k + 1)]
                .into_iter()
                .chain((2..=k).map(|i| (k + 1, i)))
                .collect(),
            components: vec![Path(2)],
            isolated: k,
        },
        // shape (k+2,2): two edges plus k isolated vertices
        WitnessId::D(10) => Table {
            shape: vec![k + 2, 2],
            arcs: {
                let (v1, v2) = (k + 2, k + 3);
                let mut arcs = vec![(0, v1), (0, v2), (1, v1), (1, v2)];
                for i in 2..k + 2 {
                    arcs.push((v1, i));
                    arcs.push((v2, i));
                }
                arcs
            },
            components: vec![Path(2), Path(2)],
            isolated: k,
        },
        // shape (k+3,2): P3 + P2 plus k isolated vertices
        WitnessId::D(11) => Table {
            shape: vec![k + 3, 2],
            arcs: {
                let (v1, v2) = (k + 3, k + 4);
                let mut arcs = vec![(0, v1), (1, v1), (1, v2), (2, v2), (v1, 2), (v2, 0)];
                for i in 3..k + 3 {
                    arcs.push((v1, i));
                    arcs.push((v2, i));
                }
                arcs
            },
            components: vec![Path(3), Path(2)],
            isolated: k,
        },
        // shape (k+4,2): P2 + P2 + P2 plus k isolated vertices
        WitnessId::D(12) => Table {
            shape: vec![k + 4, 2],
            arcs: {
                let (v1, v2) = (k + 4, k + 5);
                let mut arcs = vec![
                    (0, v1), (1, v1), (v2, 0), (v2, 1),
                    (2, v2), (3, v2), (v1, 2), (v1, 3),
                ];
                for i in 4..k + 4 {
                    arcs.push((v1, i));
                    arcs.push((v2, i));
                }
                arcs
            },
            components: vec![Path(2), Path(2), Path(2)],
            isolated: k,
        },
        // shape (3,2): P3 + 2 isolated
        WitnessId::D(13) => Table {
            shape: vec![3, 2],
            arcs: vec![(0, 3), (1, 3), (1, 4), (2, 4), (3, 2), (4, 0)],
            components: vec![Path(3)],
            isolated: 2,
        },
        // shape (4,4): four disjoint edges
        WitnessId::D(14) => Table {
            shape: vec![4, 4],
            arcs: vec![
                (0, 4), (1, 4), (0, 5), (1, 5), (2, 6), (2, 7), (3, 6), (3, 7),
                (4, 2), (4, 3), (5, 2), (5, 3), (6, 0), (7, 0), (6, 1), (7, 1),
            ],
            components: vec![Path(2), Path(2), Path(2), Path(2)],
            isolated: 0,
        },
        // shape (2,1,1,1): P3 + P2
        WitnessId::D(15) => Table {
            shape: vec![2, 1, 1, 1],
            arcs: vec![(2, 0), (2, 1), (2, 3), (3, 0), (3, 1), (4, 2), (4, 3), (0, 4), (1, 4)],
            components: vec![Path(3), Path(2)],
            isolated: 0,
        },
        // 4-tournament: P3 + isolated vertex
        WitnessId::D(16) => Table {
            shape: vec![1, 1, 1, 1],
            arcs: vec![(0, 2), (0, 3), (2, 3), (3, 1), (1, 0), (1, 2)],
            components: vec![Path(3)],
            isolated: 1,
        },
        // 3-cycle: empty graph of order 3
        WitnessId::D(17) => Table {
            shape: vec![1, 1, 1],
            arcs: vec![(0, 1), (1, 2), (2, 0)],
            components: vec![],
            isolated: 3,
        },
        // shape (k,1,1): one edge plus k isolated vertices
        WitnessId::D(18) => Table {
            shape: vec![k, 1, 1],
            arcs: {
                let (x, y) = (k, k + 1);
                let mut arcs = vec![(x, y)];
                for i in 0..k {
                    arcs.push((x, i));
                    arcs.push((y, i));
                }
                arcs
            },
            components: vec![Path(2)],
            isolated: k,
        },
        // shape (k+1,1,1): P3 plus k isolated vertices
        WitnessId::D(19) => Table {
            shape: vec![k + 1, 1, 1],
            arcs: {
                let (x, y) = (k + 1, k + 2);
                let mut arcs = vec![(0, x), (0, y), (x, y)];
                for i in 1..=k {
                    arcs.push((x, i));
                    arcs.push((y, i));
                }
                arcs
            },
            components: vec![Path(3)],
            isolated: k,
        },
        // shape (k+2,1,1): P4 plus k isolated vertices
        WitnessId::D(20) => Table {
            shape: vec![k + 2, 1, 1],
            arcs: {
                let (x, y) = (k + 2, k + 3);
                let mut arcs = vec![(0, x), (1, x), (1, y), (x, y), (y, 0)];
                for i in 2..k + 2 {
                    arcs.push((x, i));
                    arcs.push((y, i));
                }
                arcs
            },
            components: vec![Path(4)],
            isolated: k,
        },
        // shape (2,2,1): 3-leaf star + isolated vertex
        WitnessId::D(21) => Table {
            shape: vec![2, 2, 1],
            arcs: vec![(4, 0), (4, 1), (2, 4), (4, 3), (0, 3), (2, 0), (1, 2), (3, 1)],
            components: vec![Star3],
            isolated: 1,
        },
        // shape (3,2,1): 3-leaf star + one edge
        WitnessId::D(22) => Table {
            shape: vec![3, 2, 1],
            arcs: vec![
                (5, 3), (5, 1), (5, 2), (4, 5), (5, 0), (3, 2), (3, 1), (0, 3), (4, 0), (1, 4),
                (2, 4),
            ],
            components: vec![Star3, Path(2)],
            isolated: 0,
        },
        // shape (3,2,1): P4 + P2
        WitnessId::D(23) => Table {
            shape: vec![3, 2, 1],
            arcs: vec![
                (5, 3), (5, 1), (5, 2), (4, 5), (0, 5), (3, 2), (3, 1), (0, 3), (4, 0), (1, 4),
                (2, 4),
            ],
            components: vec![Path(4), Path(2)],
            isolated: 0,
        },
        // shape (k+2,1,1): P2 + P2 plus k isolated vertices
        WitnessId::D(24) => Table {
            shape: vec![k + 2, 1, 1],
            arcs: {
                let (x, y) = (k + 2, k + 3);
                let mut arcs = vec![(0, x), (1, x), (x, y), (y, 0), (y, 1)];
                for i in 2..k + 2 {
                    arcs.push((x, i));
                    arcs.push((y, i));
                }
                arcs
            },
            components: vec![Path(2), Path(2)],
            isolated: k,
        },
        // shape (k+3,1,1): P3 + P2 plus k isolated vertices
        WitnessId::D(25) => Table {
            shape: vec![k + 3, 1, 1],
            arcs: {
                let (x, y) = (k + 3, k + 4);
                let mut arcs = vec![(0, x), (1, y), (2, x), (x, 1), (x, y), (y, 0), (y, 2)];
                for i in 3..k + 3 {
                    arcs.push((x, i));
                    arcs.push((y, i));
                }
                arcs
            },
            components: vec![Path(3), Path(2)],
            isolated: k,
        },
        // shape (2,2,1): P3 + P2 with no isolated vertices
        WitnessId::D(26) => Table {
            shape: vec![2, 2, 1],
            arcs: vec![(4, 0), (4, 1), (2, 4), (3, 4), (0, 2), (0, 3), (1, 2), (3, 1)],
            components: vec![Path(3), Path(2)],
            isolated: 0,
        },
        // shape (2,2,2): three disjoint edges
        WitnessId::D(27) => Table {
            shape: vec![2, 2, 2],
            arcs: vec![
                (0, 4), (0, 5), (2, 0), (3, 0), (1, 4), (1, 5), (2, 1), (3, 1),
                (4, 2), (5, 2), (4, 3), (5, 3),
            ],
            components: vec![Path(2), Path(2), Path(2)],
            isolated: 0,
        },
        // the regular 5-tournament: 5-cycle
        WitnessId::Reg5 => Table {
            shape: vec![1, 1, 1, 1, 1],
            arcs: vec![
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 2), (1, 3), (2, 4), (3, 0), (4, 1),
            ],
            components: vec![Cycle(5)],
            isolated: 0,
        },
        WitnessId::D(i) => unreachable!("no table for D{i}"),
    }
}

/// Builds and validates a witness tournament.
///
/// Parameterized families (`D8`..`D12`, `D18`..`D20`, `D24`, `D25`) require
/// `parameter = Some(k)` with `k >= 1`; fixed families reject a parameter.
pub fn witness(id: WitnessId, parameter: Option<usize>) -> Result<Witness, FamilyError> {
    let k = match (id.parameter_min(), parameter) {
        (Some(min), Some(k)) if k >= min => k,
        (Some(min), Some(k)) => {
            return Err(FamilyError::ParameterOutOfRange { family: id.to_string(), got: k, min })
        }
        (Some(min), None) => {
            return Err(FamilyError::MissingParameter { family: id.to_string(), min })
        }
        (None, Some(_)) => {
            return Err(FamilyError::UnexpectedParameter { family: id.to_string() })
        }
        (None, None) => 0,
    };
    let t = table(id, k);
    if t.shape.iter().sum::<usize>() > crate::MAX_VERTICES {
        return Err(FamilyError::ParameterOutOfRange {
            family: id.to_string(),
            got: k,
            min: id.parameter_min().unwrap_or(1),
        });
    }
    let shape = PartiteShape::new(t.shape.iter().copied()).expect("table shapes are valid");
    let n = shape.order();
    let digraph = Digraph::from_arcs(n, &t.arcs).expect("table arcs are valid");
    let label = match parameter {
        Some(k) => format!("{id}(k={k})"),
        None => id.to_string(),
    };
    finish_witness(digraph, &shape, t.components, t.isolated, label)
}

/// Validates the construction; on failure, searches the shape for any
/// orientation realizing the target before giving up.
fn finish_witness(
    digraph: Digraph,
    shape: &PartiteShape,
    components: Vec<Component>,
    isolated: usize,
    label: String,
) -> Result<Witness, FamilyError> {
    let (base, partition) = complete_multipartite(shape);
    let target = build_pattern(&components, isolated)?;
    let target_form = target.canonical_form();
    let valid = digraph.underlying_graph() == base
        && digraph.competition_graph().canonical_form() == target_form;
    if valid {
        return Ok(Witness { digraph, partition, target: (components, isolated), label });
    }
    // Transcription bug: recover by exhaustive search over the same shape.
    let universe = OrientationUniverse::new(shape);
    let triangle_free_target = !target.has_triangle();
    let prune = if triangle_free_target { Prune::IndegreeLe2 } else { Prune::None };
    let found = first_match(&universe, prune, |view| {
        view.to_competition_graph().canonical_form() == target_form
    })
    .map_err(|_| FamilyError::ValidationFailure {
        family: label.clone(),
        shape: shape.sizes().to_vec(),
    })?;
    match found {
        Some(d) => Ok(Witness { digraph: d, partition, target: (components, isolated), label }),
        None => Err(FamilyError::ValidationFailure {
            family: label,
            shape: shape.sizes().to_vec(),
        }),
    }
}

/// Orientation of the complete tripartite graph with parts (2,2,2) whose
/// competition graph is a 6-cycle.
pub fn cycle6_witness() -> Witness {
    let digraph = Digraph::from_arcs(
        6,
        &[
            (4, 0), (5, 0), (0, 2), (1, 2), (2, 4), (3, 4),
            (5, 3), (0, 3), (1, 5), (2, 5), (3, 1), (4, 1),
        ],
    )
    .expect("fixed");
    let shape = PartiteShape::new([2, 2, 2]).expect("fixed");
    finish_witness(digraph, &shape, vec![Component::Cycle(6)], 0, "C6@K2,2,2".into())
        .expect("validated construction")
}

/// Orientation of the complete tripartite graph with parts (3,2,1) whose
/// competition graph is a 6-vertex path.
pub fn path6_witness() -> Witness {
    let digraph = Digraph::from_arcs(
        6,
        &[
            (5, 3), (5, 0), (5, 1), (4, 5), (2, 5), (3, 1), (3, 2), (0, 3), (0, 4), (1, 4),
            (4, 2),
        ],
    )
    .expect("fixed");
    let shape = PartiteShape::new([3, 2, 1]).expect("fixed");
    finish_witness(digraph, &shape, vec![Component::Path(6)], 0, "P6@K3,2,1".into())
        .expect("validated construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use Component::*;

    #[test]
    fn named_graphs_match_documented_degrees() {
        assert_eq!(named_graph(NamedGraph::G1).degree_sequence(), vec![4, 1, 1, 1, 1]);
        assert_eq!(named_graph(NamedGraph::G2).degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert_eq!(named_graph(NamedGraph::G3).degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        assert_eq!(named_graph(NamedGraph::G4).degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        // same degree sequence, different trees
        assert!(!named_graph(NamedGraph::G3).is_isomorphic(&named_graph(NamedGraph::G4)));
        // all connected and triangle-free
        for id in [NamedGraph::G1, NamedGraph::G2, NamedGraph::G3, NamedGraph::G4] {
            let g = named_graph(id);
            assert!(g.is_connected() && !g.has_triangle());
        }
    }

    #[test]
    fn build_pattern_layout() {
        let g = build_pattern(&[Path(3), Path(2)], 1).unwrap();
        assert_eq!(g.order(), 6);
        let sizes: Vec<u32> = g.components().iter().map(|m| m.count_ones()).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
        let empty = build_pattern(&[], 3).unwrap();
        assert_eq!((empty.order(), empty.edge_count()), (3, 0));
        let double_c4 = build_pattern(&[Cycle(4), Cycle(4)], 0).unwrap();
        assert_eq!((double_c4.order(), double_c4.edge_count()), (8, 8));
    }

    #[test]
    fn match_round_trips() {
        let cases: Vec<(Vec<Component>, usize)> = vec![
            (vec![Path(4)], 2),
            (vec![Cycle(6)], 0),
            (vec![G2, Path(2)], 0),
            (vec![Star3, Path(2)], 1),
            (vec![Path(3), Path(2), Path(2)], 0),
            (vec![], 4),
            (vec![G3], 3),
            (vec![G4, Cycle(4)], 2),
        ];
        for (comps, iso) in cases {
            let g = build_pattern(&comps, iso).unwrap();
            let (found, found_iso) = match_components(&g).expect("alphabet components");
            let mut sorted = comps.clone();
            sorted.sort_by(|a, b| (b.order(), b).cmp(&(a.order(), a)));
            assert_eq!((found, found_iso), (sorted, iso), "pattern {comps:?} iso {iso}");
        }
    }

    #[test]
    fn unrecognized_components_are_none() {
        // K4 is not in the alphabet
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(match_components(&k4), None);
        // 5-vertex tree with two degree-3 vertices is not in the alphabet
        let t = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(match_components(&t), None);
    }

    #[test]
    fn fixed_witnesses_validate() {
        for id in WitnessId::all() {
            if id.parameter_min().is_some() {
                continue;
            }
            let w = witness(id, None).unwrap();
            let c = w.digraph.competition_graph();
            assert!(c.is_isomorphic(&w.target_graph()), "{id}");
        }
    }

    #[test]
    fn parameterized_witnesses_validate_for_small_k() {
        for id in WitnessId::all() {
            let Some(min) = id.parameter_min() else { continue };
            assert_eq!(min, 1);
            for k in 1..=6 {
                let w = witness(id, Some(k)).unwrap();
                let c = w.digraph.competition_graph();
                assert!(c.is_isomorphic(&w.target_graph()), "{id} k={k}");
                // genuine multipartite tournament on the declared shape
                let (base, _) = complete_multipartite(w.shape());
                assert_eq!(w.digraph.underlying_graph(), base, "{id} k={k}");
            }
        }
    }

    #[test]
    fn parameter_requirements_enforced() {
        assert!(matches!(
            witness(WitnessId::D(8), None),
            Err(FamilyError::MissingParameter { .. })
        ));
        assert!(matches!(
            witness(WitnessId::D(8), Some(0)),
            Err(FamilyError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            witness(WitnessId::D(1), Some(2)),
            Err(FamilyError::UnexpectedParameter { .. })
        ));
    }

    #[test]
    fn documented_targets() {
        let check = |id, param: Option<usize>, comps: Vec<Component>, iso: usize| {
            let w = witness(id, param).unwrap();
            assert!(
                w.digraph
                    .competition_graph()
                    .is_isomorphic(&build_pattern(&comps, iso).unwrap()),
                "{id} {param:?}"
            );
        };
        check(WitnessId::D(1), None, vec![G1], 0);
        check(WitnessId::D(2), None, vec![G2], 0);
        check(WitnessId::D(3), None, vec![G3], 0);
        check(WitnessId::D(4), None, vec![G4], 0);
        check(WitnessId::D(5), None, vec![Star3], 0);
        check(WitnessId::D(6), None, vec![Path(5)], 0);
        check(WitnessId::D(7), None, vec![G2], 0);
        check(WitnessId::D(8), Some(3), vec![], 4);
        check(WitnessId::D(13), None, vec![Path(3)], 2);
        check(WitnessId::D(14), None, vec![Path(2), Path(2), Path(2), Path(2)], 0);
        check(WitnessId::D(15), None, vec![Path(3), Path(2)], 0);
        check(WitnessId::D(16), None, vec![Path(3)], 1);
        check(WitnessId::D(17), None, vec![], 3);
        check(WitnessId::D(21), None, vec![Star3], 1);
        check(WitnessId::D(22), None, vec![Star3, Path(2)], 0);
        check(WitnessId::D(23), None, vec![Path(4), Path(2)], 0);
        check(WitnessId::D(25), Some(2), vec![Path(3), Path(2)], 2);
        check(WitnessId::D(26), None, vec![Path(3), Path(2)], 0);
        check(WitnessId::D(27), None, vec![Path(2), Path(2), Path(2)], 0);
        check(WitnessId::Reg5, None, vec![Cycle(5)], 0);
    }

    #[test]
    fn reg5_is_regular() {
        let w = witness(WitnessId::Reg5, None).unwrap();
        let (indeg, outdeg) = w.digraph.degree_profile();
        assert!(indeg.iter().all(|&d| d == 2));
        assert!(outdeg.iter().all(|&d| d == 2));
    }

    #[test]
    fn figure_witnesses() {
        let c6 = cycle6_witness();
        assert!(c6.digraph.competition_graph().is_isomorphic(&graph::cycle(6)));
        let p6 = path6_witness();
        assert!(p6.digraph.competition_graph().is_isomorphic(&graph::path(6)));
    }

    mod round_trip_props {
        use super::*;
        use proptest::prelude::*;

        fn component_strategy() -> impl Strategy<Value = Component> {
            prop_oneof![
                (2usize..=6).prop_map(Path),
                (3usize..=6).prop_map(Cycle),
                Just(Star3),
                Just(G1),
                Just(G2),
                Just(G3),
                Just(G4),
            ]
        }

        proptest! {
            /// Building a pattern and decomposing it again recovers the
            /// component multiset and the isolated count exactly.
            #[test]
            fn build_then_match_round_trips(
                comps in proptest::collection::vec(component_strategy(), 0..4),
                iso in 0usize..=5,
            ) {
                let order: usize = comps.iter().map(|c| c.order()).sum::<usize>() + iso;
                prop_assume!(order >= 1 && order <= 40);
                let g = build_pattern(&comps, iso).unwrap();
                let (found, found_iso) = match_components(&g).expect("alphabet components");
                let mut sorted = comps.clone();
                sorted.sort_by(|a, b| (b.order(), b).cmp(&(a.order(), a)));
                prop_assert_eq!(found, sorted);
                prop_assert_eq!(found_iso, iso);
            }
        }
    }

    #[test]
    fn pattern_rules() {
        let p = GraphPattern::new(vec![Path(3)], IsolatedRule::AtLeast(1));
        assert!(p.matches(&[Path(3)], 2));
        assert!(!p.matches(&[Path(3)], 0));
        assert!(!p.matches(&[Path(4)], 1));
        assert!(p.build(0).is_err());
        assert_eq!(p.build(2).unwrap().order(), 5);
    }
}
