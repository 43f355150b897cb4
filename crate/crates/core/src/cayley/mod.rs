//! Simple undirected graphs stored as bit rows, and Cayley graphs over the
//! groups of [`crate::group`].

mod spec;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, GroupFamily};
use crate::residue::ResidueSet;

pub use spec::{ConnectionSpec, GraphDescriptor};

/// Undirected simple graph on vertices `0..order`, one adjacency bit row per
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph from adjacency rows, rejecting loops and asymmetry.
    pub fn from_rows(rows: Vec<FixedBitSet>) -> Result<Self> {
        let n = rows.len();
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!("row {u} has width {} (expected {n})", row.len())));
            }
            if row.contains(u) {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if let Some(v) = row.ones().find(|&v| !rows[v].contains(u)) {
                return Err(Error::InvalidParameter(format!("adjacency not symmetric at ({u}, {v})")));
            }
        }
        Ok(Graph { rows })
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![FixedBitSet::with_capacity(order); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidParameter(format!("edge ({u}, {v}) out of range")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Self::from_rows(rows)
    }

    pub fn complete(order: usize) -> Self {
        Self::from_edges(order, (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)))).unwrap()
    }

    pub fn complete_bipartite(m: usize) -> Self {
        Self::from_edges(2 * m, (0..m).flat_map(|u| (m..2 * m).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(order: usize) -> Self {
        Self::from_edges(order, (0..order).map(|u| (u, (u + 1) % order))).unwrap()
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.rows.first().map(|r| r.count_ones(..)).unwrap_or(0);
        self.rows.iter().all(|r| r.count_ones(..) == k).then_some(k)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `vertices` (relabelled `0..len` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.is_adjacent(u, v) {
                    rows[i].insert(j);
                }
            }
        }
        Graph { rows }
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let rows = (0..n)
            .map(|u| {
                let mut r = self.rows[u].clone();
                r.toggle_range(..);
                r.set(u, false);
                r
            })
            .collect();
        Graph { rows }
    }
}

/// A Cayley graph `Cay(G, S)`: vertex `g` is adjacent to `g·s` for `s ∈ S`.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    group: Group,
    connection: Vec<GroupElement>,
    graph: Graph,
    spec: Option<ConnectionSpec>,
}

pub fn build_cayley(group: &Group, connection: &[GroupElement]) -> Result<CayleyGraph> {
    let mut s: Vec<GroupElement> = Vec::with_capacity(connection.len());
    for &g in connection {
        group.inv(g)?; // membership check
        s.push(g);
    }
    s.sort();
    s.dedup();
    let order = group.order();
    let mut mask = FixedBitSet::with_capacity(order);
    for g in &s {
        mask.insert(g.index());
    }
    if mask.contains(0) {
        return Err(Error::IdentityInSet);
    }
    if let Some(g) = s.iter().find(|g| !mask.contains(group.inv_index(g.index()))) {
        return Err(Error::NotInverseClosed(g.index()));
    }
    let mut rows = vec![FixedBitSet::with_capacity(order); order];
    for (g, row) in rows.iter_mut().enumerate() {
        for x in &s {
            row.insert(group.mul_index(g, x.index()));
        }
    }
    Ok(CayleyGraph { group: *group, connection: s, graph: Graph { rows }, spec: None })
}

pub fn build_from_spec(spec: &ConnectionSpec) -> Result<CayleyGraph> {
    let mut g = build_cayley(spec.group(), &spec.connection_set())?;
    g.spec = Some(spec.clone());
    Ok(g)
}

/// `SD(n, R, T) = Cay(SD_n, ρ^R ∪ ρ^T τ)`.
pub fn build_sd(n: usize, r: &ResidueSet, t: &ResidueSet) -> Result<CayleyGraph> {
    build_from_spec(&ConnectionSpec::new(GroupFamily::SemiDihedral(n), r.clone(), t.clone())?)
}

/// `PSD(n, R, T) = Cay(PSD_n, ρ^R ∪ ρ^T τ)`.
pub fn build_psd(n: usize, r: &ResidueSet, t: &ResidueSet) -> Result<CayleyGraph> {
    build_from_spec(&ConnectionSpec::new(GroupFamily::PseudoSemiDihedral(n), r.clone(), t.clone())?)
}

/// `Dih(n, R, T)` over the dihedral group of order `2n`.
pub fn build_dihedrant(n: usize, r: &ResidueSet, t: &ResidueSet) -> Result<CayleyGraph> {
    build_from_spec(&ConnectionSpec::new(GroupFamily::Dihedral(n), r.clone(), t.clone())?)
}

/// `Dic(n, R, T)` over the dicyclic group of order `4n`.
pub fn build_dicirculant(n: usize, r: &ResidueSet, t: &ResidueSet) -> Result<CayleyGraph> {
    build_from_spec(&ConnectionSpec::new(GroupFamily::Dicyclic(n), r.clone(), t.clone())?)
}

impl CayleyGraph {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn connection(&self) -> &[GroupElement] {
        &self.connection
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spec(&self) -> Option<&ConnectionSpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn valency(&self) -> usize {
        self.connection.len()
    }

    /// Neighbourhood read off the adjacency rows.
    pub fn neighborhood(&self, v: GroupElement) -> Result<Vec<GroupElement>> {
        self.group.inv(v)?;
        Ok(self.graph.neighbors(v.index()).map(|i| self.group.wrap(i)).collect())
    }

    /// Connectivity by breadth-first search from the identity.
    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Connectivity by the group-theoretic test `⟨S⟩ = G`.
    pub fn generates_group(&self) -> bool {
        self.group.generated(&self.connection).map(|h| h.order() == self.group.order()).unwrap_or(false)
    }
}

/// Closed-form neighbourhood for a spec-built graph:
/// `N(ρ^i) = ρ^{i+R} ∪ ρ^{i+T}τ` and `N(ρ^iτ) = ρ^{i+sT+z} ∪ ρ^{i+sR}τ`,
/// where `τρτ⁻¹ = ρ^s` and `τ² = ρ^z`. For SD this is `s = n−1`, for PSD
/// `s = n+1`.
pub fn neighborhood_formula(spec: &ConnectionSpec, v: GroupElement) -> Result<Vec<GroupElement>> {
    let g = spec.group();
    g.inv(v)?;
    let (i, is_tau) = v.parts();
    let i = i as i64;
    let s = g.twist() as i64;
    let z = g.tau_square() as i64;
    let mut out: Vec<GroupElement> = if is_tau {
        spec.t()
            .iter()
            .map(|t| g.rho(i + s * t as i64 + z))
            .chain(spec.r().iter().map(|r| g.rho_tau(i + s * r as i64)))
            .collect()
    } else {
        spec.r()
            .iter()
            .map(|r| g.rho(i + r as i64))
            .chain(spec.t().iter().map(|t| g.rho_tau(i + t as i64)))
            .collect()
    };
    out.sort();
    Ok(out)
}
