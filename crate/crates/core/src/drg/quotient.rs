use fixedbitset::FixedBitSet;

use super::{antipodal_classes_from, bipartition, distance_matrix};
use crate::cayley::{CayleyGraph, Graph};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// The two halved graphs of a connected bipartite graph: each colour class
/// with adjacency "distance exactly 2". The class of vertex 0 comes first;
/// vertices keep their relative order.
pub fn halved_graphs(graph: &Graph) -> Result<(Graph, Graph)> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let side = bipartition(graph).ok_or(Error::NotBipartite)?;
    let order = graph.order();
    let half = |odd: bool| -> Graph {
        let verts: Vec<usize> = (0..order).filter(|&v| side.contains(v) == odd).collect();
        let mut rows = vec![FixedBitSet::with_capacity(verts.len()); verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            let mut two = FixedBitSet::with_capacity(order);
            for w in graph.neighbors(u) {
                two.union_with(graph.row(w));
            }
            for (j, &v) in verts.iter().enumerate() {
                if v != u && two.contains(v) {
                    rows[i].insert(j);
                }
            }
        }
        Graph::from_rows(rows).expect("distance-2 relation is symmetric")
    };
    Ok((half(false), half(true)))
}

/// Classes of the relation `d(u, v) ∈ {0, d}` for an antipodal graph.
pub fn antipodal_classes(graph: &Graph) -> Result<Vec<Vec<usize>>> {
    let dist = distance_matrix(graph)?;
    let d = dist.iter().flat_map(|r| r.iter().copied()).max().unwrap_or(0);
    antipodal_classes_from(&dist, d).ok_or(Error::NotAntipodal)
}

fn collapse(graph: &Graph, classes: &[Vec<usize>]) -> Graph {
    let mut class_of = vec![0; graph.order()];
    for (i, cls) in classes.iter().enumerate() {
        for &v in cls {
            class_of[v] = i;
        }
    }
    let m = classes.len();
    let mut rows = vec![FixedBitSet::with_capacity(m); m];
    for u in 0..graph.order() {
        for v in graph.neighbors(u) {
            let (a, b) = (class_of[u], class_of[v]);
            if a != b {
                rows[a].insert(b);
            }
        }
    }
    Graph::from_rows(rows).expect("edge relation is symmetric")
}

/// Antipodal classes become vertices; two classes are adjacent when some
/// edge joins them. Classes are ordered by least member.
pub fn antipodal_quotient(graph: &Graph) -> Result<Graph> {
    let classes = antipodal_classes(graph)?;
    Ok(collapse(graph, &classes))
}

/// `Cay(G/B, S/B)` for a normal subgroup `B`: vertices are the cosets `gB`
/// ordered by least element index, and `gB ~ gsB` for `s ∈ S ∖ B`.
pub fn cayley_quotient(x: &CayleyGraph, b: &Subgroup) -> Result<Graph> {
    let group = x.group();
    if b.parent() != group {
        return Err(Error::MixedGroups { left: group.family().to_string(), right: b.parent().family().to_string() });
    }
    if !group.is_normal(b) {
        return Err(Error::InvalidParameter(format!("{} is not normal", b.label())));
    }
    let order = group.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for g in 0..order {
        if coset_of[g] != usize::MAX {
            continue;
        }
        for h in b.members() {
            coset_of[group.mul_index(g, h.index())] = reps.len();
        }
        reps.push(g);
    }
    let m = reps.len();
    let mut rows = vec![FixedBitSet::with_capacity(m); m];
    for (i, &g) in reps.iter().enumerate() {
        for s in x.connection() {
            if b.contains(*s) {
                continue;
            }
            rows[i].insert(coset_of[group.mul_index(g, s.index())]);
        }
    }
    Graph::from_rows(rows)
}
