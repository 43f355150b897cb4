//! Distance structure of graphs: distance partitions, the distance-regularity
//! check, intersection arrays, imprimitivity, quotients, recognition of a few
//! named families and the spectrum of an intersection array.

mod array;
mod named;
mod oracle;
mod quotient;
mod spectrum;

use fixedbitset::FixedBitSet;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cayley::{CayleyGraph, Graph};
use crate::error::{Error, Result};

pub use array::IntersectionArray;
pub use named::{recognize_named, NamedGraph};
pub use oracle::distance_module_oracle;
pub use quotient::{antipodal_classes, antipodal_quotient, cayley_quotient, halved_graphs};
pub use spectrum::{intersection_matrix_spectrum, SpectrumReportOf};

/// Largest graph the general (non-Cayley) checker will take; it stores the
/// full distance matrix.
pub const MAX_GENERAL_ORDER: usize = 4096;

/// The layers `N_0(x), N_1(x), …, N_d(x)` of distances from a base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    base: usize,
    layers: Vec<FixedBitSet>,
}

impl DistancePartition {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn layers(&self) -> &[FixedBitSet] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &FixedBitSet {
        &self.layers[i]
    }

    /// Eccentricity of the base vertex.
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.count_ones(..)).collect()
    }

    /// `distance[v]` for every vertex.
    pub fn distances(&self) -> Vec<usize> {
        let mut out = vec![0; self.layers[0].len()];
        for (i, layer) in self.layers.iter().enumerate() {
            for v in layer.ones() {
                out[v] = i;
            }
        }
        out
    }
}

pub fn distance_partition(graph: &Graph, base: usize) -> Result<DistancePartition> {
    let order = graph.order();
    if base >= order {
        return Err(Error::InvalidParameter(format!("base vertex {base} out of range for {order} vertices")));
    }
    let dist = graph.distances_from(base);
    let mut layers: Vec<FixedBitSet> = Vec::new();
    for (v, d) in dist.iter().enumerate() {
        let d = d.ok_or(Error::Disconnected)?;
        while layers.len() <= d {
            layers.push(FixedBitSet::with_capacity(order));
        }
        layers[d].insert(v);
    }
    Ok(DistancePartition { base, layers })
}

/// The intersection numbers seen from one base vertex, or `None` when some
/// layer has two vertices with different counts.
fn intersection_numbers(graph: &Graph, part: &DistancePartition) -> Option<IntersectionArray> {
    let layers = part.layers();
    let d = part.eccentricity();
    let mut b = Vec::with_capacity(d);
    let mut c = Vec::with_capacity(d);
    for i in 0..=d {
        let mut seen: Option<(usize, usize)> = None;
        for y in layers[i].ones() {
            let row = graph.row(y);
            let cy = if i > 0 { row.intersection_count(&layers[i - 1]) } else { 0 };
            let by = if i < d { row.intersection_count(&layers[i + 1]) } else { 0 };
            match seen {
                None => seen = Some((cy, by)),
                Some(p) if p != (cy, by) => return None,
                _ => {}
            }
        }
        let (ci, bi) = seen?;
        if i < d {
            b.push(bi);
        }
        if i > 0 {
            c.push(ci);
        }
    }
    IntersectionArray::new(b, c).ok()
}

/// Two-colouring of a connected graph: `Some(side)` with `side[v]` true on
/// the class not containing vertex 0.
pub fn bipartition(graph: &Graph) -> Option<FixedBitSet> {
    let dist = graph.distances_from(0);
    let mut side = FixedBitSet::with_capacity(graph.order());
    for (v, d) in dist.iter().enumerate() {
        if d.is_some_and(|d| d % 2 == 1) {
            side.insert(v);
        }
    }
    let proper = (0..graph.order()).all(|u| graph.neighbors(u).all(|v| side.contains(u) != side.contains(v)));
    proper.then_some(side)
}

/// How many base vertices the general checker examines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseMode {
    /// Vertex 0 only. Valid for vertex-transitive graphs.
    Single,
    /// Every vertex; the arrays must all agree.
    All,
}

/// Outcome of a distance-regularity check.
///
/// `bipartite` and `diameter` are reported for every connected regular
/// graph; `antipodal` and `primitive` are only set for distance-regular
/// graphs. Antipodality needs `d ≥ 2`, so complete graphs are not antipodal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_drg: bool,
    pub array: Option<IntersectionArray>,
    pub bipartite: bool,
    pub antipodal: bool,
    pub antipodal_index: Option<usize>,
    pub primitive: bool,
    pub diameter: usize,
}

impl StructureReport {
    fn not_drg(bipartite: bool, diameter: usize) -> Self {
        StructureReport {
            is_drg: false,
            array: None,
            bipartite,
            antipodal: false,
            antipodal_index: None,
            primitive: false,
            diameter,
        }
    }
}

impl Serialize for StructureReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("isDRG", &self.is_drg)?;
        map.serialize_entry("array", &self.array.as_ref().map(|a| a.to_string()))?;
        map.serialize_entry("b", &self.array.as_ref().map(|a| a.b().to_vec()))?;
        map.serialize_entry("c", &self.array.as_ref().map(|a| a.c().to_vec()))?;
        map.serialize_entry("bipartite", &self.bipartite)?;
        map.serialize_entry("antipodal", &self.antipodal)?;
        map.serialize_entry("antipodalIndex", &self.antipodal_index)?;
        map.serialize_entry("primitive", &self.primitive)?;
        map.serialize_entry("diameter", &self.diameter)?;
        map.end()
    }
}

/// Checks a Cayley graph from the identity alone; left translations carry
/// this partition to every other vertex. Antipodality and primitivity are
/// read off the group: the graph is antipodal iff `{1} ∪ N_d(1)` is a
/// subgroup, and the distance-`i` graph `Cay(G, N_i(1))` is connected iff
/// `⟨N_i(1)⟩ = G`.
pub fn check_cayley(x: &CayleyGraph) -> Result<StructureReport> {
    let graph = x.graph();
    if graph.order() < 2 {
        return Err(Error::InvalidParameter("graph has fewer than two vertices".into()));
    }
    let part = distance_partition(graph, 0)?;
    let bipartite = bipartition(graph).is_some();
    let d = part.eccentricity();
    let Some(array) = intersection_numbers(graph, &part) else {
        return Ok(StructureReport::not_drg(bipartite, d));
    };
    let group = x.group();
    let mut class = part.layer(d).clone();
    class.insert(0);
    let antipodal = d >= 2
        && class.ones().all(|a| class.ones().all(|b| class.contains(group.mul_index(a, b))));
    let primitive = (1..=d).all(|i| {
        let gens: Vec<_> = part.layer(i).ones().map(|v| group.wrap(v)).collect();
        group.generated(&gens).map(|h| h.order() == group.order()).unwrap_or(false)
    });
    Ok(StructureReport {
        is_drg: true,
        array: Some(array),
        bipartite,
        antipodal,
        antipodal_index: antipodal.then(|| class.count_ones(..)),
        primitive,
        diameter: d,
    })
}

/// Full distance matrix, row per vertex.
pub(crate) fn distance_matrix(graph: &Graph) -> Result<Vec<Vec<usize>>> {
    if graph.order() > MAX_GENERAL_ORDER {
        return Err(Error::TooLarge(format!("{} vertices (limit {MAX_GENERAL_ORDER})", graph.order())));
    }
    (0..graph.order())
        .map(|u| graph.distances_from(u).into_iter().map(|d| d.ok_or(Error::Disconnected)).collect())
        .collect()
}

fn relation_connected(dist: &[Vec<usize>], i: usize) -> bool {
    let n = dist.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && dist[u][v] == i {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Distance-regularity for an arbitrary graph (quotients and halved graphs
/// are not built as Cayley graphs).
pub fn check_distance_regular(graph: &Graph, mode: BaseMode) -> Result<StructureReport> {
    if graph.order() < 2 {
        return Err(Error::InvalidParameter("graph has fewer than two vertices".into()));
    }
    if graph.regular_degree().is_none() {
        return Err(Error::NotRegular);
    }
    let dist = distance_matrix(graph)?;
    let bipartite = bipartition(graph).is_some();
    let diameter = dist.iter().flat_map(|r| r.iter().copied()).max().unwrap_or(0);
    let bases: Vec<usize> = match mode {
        BaseMode::Single => vec![0],
        BaseMode::All => (0..graph.order()).collect(),
    };
    let mut array: Option<IntersectionArray> = None;
    for &u in &bases {
        let part = distance_partition(graph, u)?;
        match (intersection_numbers(graph, &part), &array) {
            (None, _) => return Ok(StructureReport::not_drg(bipartite, diameter)),
            (Some(a), None) => array = Some(a),
            (Some(a), Some(prev)) if &a != prev => return Ok(StructureReport::not_drg(bipartite, diameter)),
            _ => {}
        }
    }
    let array = array.expect("at least one base");
    let d = array.diameter();
    let classes = antipodal_classes_from(&dist, d);
    let primitive = (1..=d).all(|i| relation_connected(&dist, i));
    Ok(StructureReport {
        is_drg: true,
        antipodal: classes.is_some(),
        antipodal_index: classes.map(|c| c[0].len()),
        array: Some(array),
        bipartite,
        primitive,
        diameter: d,
    })
}

/// Classes of the relation `d(u, v) ∈ {0, d}` when it is an equivalence
/// with equal class sizes and `d ≥ 2`; classes are sorted and ordered by
/// least member.
pub(crate) fn antipodal_classes_from(dist: &[Vec<usize>], d: usize) -> Option<Vec<Vec<usize>>> {
    if d < 2 {
        return None;
    }
    let n = dist.len();
    let class_of = |u: usize| -> Vec<usize> { (0..n).filter(|&v| dist[u][v] == 0 || dist[u][v] == d).collect() };
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let cls = class_of(u);
        for &v in &cls {
            if assigned[v] || class_of(v) != cls {
                return None;
            }
            assigned[v] = true;
        }
        classes.push(cls);
    }
    let size = classes[0].len();
    classes.iter().all(|c| c.len() == size).then_some(classes)
}
