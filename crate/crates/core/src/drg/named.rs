use std::fmt;

use serde::Serialize;

use super::bipartition;
use crate::cayley::Graph;

/// The families the classifier needs to name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "name", rename_all = "camelCase")]
pub enum NamedGraph {
    Complete { order: usize },
    Cycle { order: usize },
    /// `K_{m,m} − mK_2`.
    CompleteBipartiteMinusMatching { m: usize },
    /// `K_{t×m}`: `t` independent parts of size `m`, all cross edges present.
    CompleteMultipartite { parts: usize, size: usize },
    /// Strongly regular with parameters `(n, (n−1)/2, (n−5)/4, (n−1)/4)`.
    /// Paley graphs land here; isomorphism to `P(q)` is not decided.
    ConferenceParameters { order: usize },
    Other,
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGraph::Complete { order } => write!(f, "K_{order}"),
            NamedGraph::Cycle { order } => write!(f, "C_{order}"),
            NamedGraph::CompleteBipartiteMinusMatching { m } => write!(f, "K_{{{m},{m}}}-{m}K_2"),
            NamedGraph::CompleteMultipartite { parts, size } => write!(f, "K_{{{parts}×{size}}}"),
            NamedGraph::ConferenceParameters { order } => write!(f, "conference graph parameters, n = {order}"),
            NamedGraph::Other => f.write_str("other"),
        }
    }
}

/// Returns the first match in the order Complete, Cycle,
/// CompleteBipartiteMinusMatching, CompleteMultipartite,
/// ConferenceParameters.
pub fn recognize_named(graph: &Graph) -> NamedGraph {
    let n = graph.order();
    let Some(k) = graph.regular_degree() else {
        return NamedGraph::Other;
    };
    if n >= 1 && k == n - 1 {
        return NamedGraph::Complete { order: n };
    }
    let connected = graph.is_connected();
    if n >= 3 && k == 2 && connected {
        return NamedGraph::Cycle { order: n };
    }
    if n.is_multiple_of(2) && n >= 6 && k == n / 2 - 1 && connected {
        if let Some(side) = bipartition(graph) {
            if side.count_ones(..) == n / 2 {
                return NamedGraph::CompleteBipartiteMinusMatching { m: n / 2 };
            }
        }
    }
    if let Some((parts, size)) = multipartite_shape(graph) {
        return NamedGraph::CompleteMultipartite { parts, size };
    }
    if has_conference_parameters(graph, k) {
        return NamedGraph::ConferenceParameters { order: n };
    }
    NamedGraph::Other
}

/// `(t, m)` when non-adjacency is an equivalence with `t ≥ 2` classes of
/// equal size `m ≥ 2`.
fn multipartite_shape(graph: &Graph) -> Option<(usize, usize)> {
    let n = graph.order();
    let class = |u: usize| {
        let mut c = graph.row(u).clone();
        c.toggle_range(..);
        c
    };
    let mut seen = vec![false; n];
    let mut parts = 0;
    let mut size = None;
    for u in 0..n {
        if seen[u] {
            continue;
        }
        let cu = class(u);
        let len = cu.count_ones(..);
        if *size.get_or_insert(len) != len {
            return None;
        }
        for v in cu.ones() {
            if seen[v] || class(v) != cu {
                return None;
            }
            seen[v] = true;
        }
        parts += 1;
    }
    let size = size?;
    (parts >= 2 && size >= 2).then_some((parts, size))
}

fn has_conference_parameters(graph: &Graph, k: usize) -> bool {
    let n = graph.order();
    if n < 5 || n % 4 != 1 || k != (n - 1) / 2 {
        return false;
    }
    let (lambda, mu) = ((n - 5) / 4, (n - 1) / 4);
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            let common = graph.row(u).intersection_count(graph.row(v));
            common == if graph.is_adjacent(u, v) { lambda } else { mu }
        })
    })
}
