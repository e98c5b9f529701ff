//! Loopless multigraphs with stable edge identities.
//!
//! Vertices are `0..n`, edges are `0..m` in insertion order. Every
//! certificate in this crate refers to edges by identity, so parallel edges
//! stay distinguishable. Subgraph views keep a map back to the host so
//! results computed on a view can be lifted without renumbering.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
    between: HashMap<(Vertex, Vertex), Vec<EdgeId>>,
    simple: bool,
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Multigraph {}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// Builds a multigraph on `n` vertices; edge `i` is `pairs[i]`.
    pub fn build(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        let mut between: HashMap<(Vertex, Vertex), Vec<EdgeId>> = HashMap::new();
        let mut simple = true;
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(Error::Loop { index, vertex: u });
            }
            incidence[u].push(index);
            incidence[v].push(index);
            let ids = between.entry(key(u, v)).or_default();
            ids.push(index);
            if ids.len() > 1 {
                simple = false;
            }
        }
        Ok(Multigraph {
            n,
            edges: pairs.to_vec(),
            incidence,
            between,
            simple,
        })
    }

    /// Like [`Multigraph::build`] but rejects parallel edges.
    pub fn build_simple(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let g = Self::build(n, pairs)?;
        g.require_simple()?;
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self::build(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Self::build(n, &pairs).expect("complete graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn require_simple(&self) -> Result<()> {
        if self.simple {
            return Ok(());
        }
        let (&(u, v), _) = self
            .between
            .iter()
            .filter(|(_, ids)| ids.len() > 1)
            .min_by_key(|(k, _)| **k)
            .expect("non-simple graph has a parallel class");
        Err(Error::NotSimple { u, v })
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edge identities joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: Vertex, v: Vertex) -> &[EdgeId] {
        self.between.get(&key(u, v)).map_or(&[], Vec::as_slice)
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges_between(u, v).len()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.between.contains_key(&key(u, v))
    }

    /// The lowest-identity edge joining `u` and `v`, if any.
    pub fn edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edges_between(u, v).first().copied()
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.incidence[v].iter().map(|&e| self.other(e, v)).collect();
        set.into_iter().collect()
    }

    /// Distinct neighbour pairs `(u, v)` with `u < v`, ascending.
    pub fn support(&self) -> Vec<(Vertex, Vertex)> {
        let mut pairs: Vec<_> = self.between.keys().copied().collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn is_complete(&self) -> bool {
        self.between.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Every edge doubled: edges `2e` and `2e + 1` are copies of `e`.
    pub fn doubled(&self) -> Doubled {
        let mut pairs = Vec::with_capacity(2 * self.m());
        let mut origin = Vec::with_capacity(2 * self.m());
        for (e, &uv) in self.edges.iter().enumerate() {
            pairs.push(uv);
            pairs.push(uv);
            origin.push(e);
            origin.push(e);
        }
        Doubled {
            graph: Multigraph::build(self.n, &pairs).expect("doubling preserves validity"),
            origin,
        }
    }

    /// Complement of a simple graph.
    pub fn complement(&self) -> Result<Multigraph> {
        self.require_simple()?;
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Multigraph::build(self.n, &pairs)
    }

    /// First independent triple `u < v < w`, if one exists.
    pub fn independent_triple(&self) -> Option<[Vertex; 3]> {
        let adj = self.adjacency_matrix();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if adj[u][v] {
                    continue;
                }
                for w in v + 1..self.n {
                    if !adj[u][w] && !adj[v][w] {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }

    /// True iff no three vertices are pairwise non-adjacent.
    pub fn alpha_at_most_2(&self) -> bool {
        self.independent_triple().is_none()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    /// Subgraph induced by `vertices` (in the given order).
    pub fn induced(&self, vertices: &[Vertex]) -> SubgraphView {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut edge_to_host = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push((local[u], local[v]));
                edge_to_host.push(e);
            }
        }
        SubgraphView {
            graph: Multigraph::build(vertices.len(), &pairs).expect("induced subgraph is valid"),
            vertex_to_host: vertices.to_vec(),
            edge_to_host,
        }
    }

    /// Spanning subgraph without the edges in `removed`.
    pub fn without_edges(&self, removed: &EdgeSet) -> SubgraphView {
        let mut pairs = Vec::new();
        let mut edge_to_host = Vec::new();
        for (e, &uv) in self.edges.iter().enumerate() {
            if !removed.contains(e) {
                pairs.push(uv);
                edge_to_host.push(e);
            }
        }
        SubgraphView {
            graph: Multigraph::build(self.n, &pairs).expect("spanning subgraph is valid"),
            vertex_to_host: (0..self.n).collect(),
            edge_to_host,
        }
    }

    /// Degree of each vertex in the spanning subgraph `G[F]`.
    pub fn degrees_in(&self, set: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in set.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Components of `G[F]` with their regularity report.
    pub fn components_of(&self, set: &EdgeSet) -> Vec<Component> {
        let mut inc: Vec<Vec<EdgeId>> = vec![Vec::new(); self.n];
        for e in set.iter() {
            let (u, v) = self.edges[e];
            inc[u].push(e);
            inc[v].push(e);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut vertices = Vec::new();
            let mut edges = BTreeSet::new();
            while let Some(x) = stack.pop() {
                vertices.push(x);
                for &e in &inc[x] {
                    edges.insert(e);
                    let y = self.other(e, x);
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            vertices.sort_unstable();
            let min_degree = vertices.iter().map(|&x| inc[x].len()).min().unwrap_or(0);
            let max_degree = vertices.iter().map(|&x| inc[x].len()).max().unwrap_or(0);
            let shape = ComponentShape::classify(vertices.len(), min_degree, max_degree);
            out.push(Component {
                vertices,
                edges: edges.into_iter().collect(),
                min_degree,
                max_degree,
                shape,
            });
        }
        out
    }

    pub fn check_edge_set(&self, set: &EdgeSet) -> Result<()> {
        match set.iter().find(|&e| e >= self.m()) {
            Some(e) => Err(Error::UnknownEdge(e)),
            None => Ok(()),
        }
    }
}

/// A doubled multigraph together with the doubled-edge → original-edge map.
#[derive(Clone, Debug)]
pub struct Doubled {
    pub graph: Multigraph,
    pub origin: Vec<EdgeId>,
}

/// A derived graph with maps back to its host.
#[derive(Clone, Debug)]
pub struct SubgraphView {
    pub graph: Multigraph,
    pub vertex_to_host: Vec<Vertex>,
    pub edge_to_host: Vec<EdgeId>,
}

/// A set of edge identities of some host graph. `G[F]` is always the
/// spanning subgraph on all host vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EdgeSet {
    members: BTreeSet<EdgeId>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.members.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.members.remove(&e)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members.iter().copied()
    }

    pub fn extend(&mut self, other: impl IntoIterator<Item = EdgeId>) {
        self.members.extend(other);
    }

    /// True when every vertex of `xs` has positive degree in `G[F]`.
    pub fn spans(&self, g: &Multigraph, xs: impl IntoIterator<Item = Vertex>) -> bool {
        let deg = g.degrees_in(self);
        xs.into_iter().all(|x| deg[x] > 0)
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet {
            members: iter.into_iter().collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentShape {
    Trivial,
    SingleEdge,
    OddCycle,
    EvenCycle,
    /// Regular of degree >= 3 (or a 1-regular component that is not an edge,
    /// which cannot happen for connected components).
    Regular(usize),
    Irregular,
}

impl ComponentShape {
    fn classify(order: usize, min_degree: usize, max_degree: usize) -> Self {
        if order == 1 {
            return ComponentShape::Trivial;
        }
        if min_degree != max_degree {
            return ComponentShape::Irregular;
        }
        match max_degree {
            1 => ComponentShape::SingleEdge,
            2 if order % 2 == 1 => ComponentShape::OddCycle,
            2 => ComponentShape::EvenCycle,
            d => ComponentShape::Regular(d),
        }
    }

    pub fn is_regular(self) -> bool {
        !matches!(self, ComponentShape::Irregular)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub shape: ComponentShape,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn build_triangle_and_parallel_pair() {
        let k3 = triangle();
        assert_eq!(k3.m(), 3);
        assert!(k3.is_simple());
        let two = Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(two.degree(0), 2);
        assert_eq!(two.edges_between(1, 0), &[0, 1]);
        assert!(!two.is_simple());
    }

    #[test]
    fn build_rejects_loops_and_range() {
        assert_eq!(
            Multigraph::build(4, &[(0, 0)]),
            Err(Error::Loop { index: 0, vertex: 0 })
        );
        assert!(matches!(
            Multigraph::build(2, &[(0, 1), (1, 5)]),
            Err(Error::EndpointOutOfRange { index: 1, .. })
        ));
        assert!(Multigraph::build_simple(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn doubling() {
        let d = triangle().doubled();
        assert_eq!(d.graph.m(), 6);
        assert!(d.graph.degrees().iter().all(|&x| x == 4));
        assert_eq!(d.origin, vec![0, 0, 1, 1, 2, 2]);
        assert_eq!(Multigraph::empty(5).doubled().graph.m(), 0);
        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.doubled().graph.degrees(), vec![2, 4, 2]);
    }

    #[test]
    fn complements() {
        let c5 = Multigraph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let comp = c5.complement().unwrap();
        assert_eq!(comp.m(), 5);
        assert!(comp.degrees().iter().all(|&d| d == 2));
        assert_eq!(Multigraph::complete(4).complement().unwrap().m(), 0);
        assert_eq!(Multigraph::empty(3).complement().unwrap(), Multigraph::complete(3));
        let parallel = Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(parallel.complement(), Err(Error::NotSimple { u: 0, v: 1 }));
    }

    #[test]
    fn alpha_two_examples() {
        let c5 = Multigraph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.alpha_at_most_2());
        assert!(!Multigraph::empty(3).alpha_at_most_2());
        // K6 minus the perfect matching {01, 23, 45}
        let mut pairs = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    pairs.push((u, v));
                }
            }
        }
        assert!(Multigraph::build(6, &pairs).unwrap().alpha_at_most_2());
    }

    #[test]
    fn component_reports() {
        let k3 = triangle();
        let all: EdgeSet = (0..3).collect();
        let comps = k3.components_of(&all);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, ComponentShape::OddCycle);

        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let comps = p3.components_of(&(0..2).collect());
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].min_degree, comps[0].max_degree), (1, 2));
        assert!(!comps[0].shape.is_regular());

        let comps = k3.components_of(&EdgeSet::new());
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.shape == ComponentShape::Trivial));
    }

    #[test]
    fn induced_view_maps_back() {
        let k4 = Multigraph::complete(4);
        let view = k4.induced(&[3, 1, 2]);
        assert_eq!(view.graph.m(), 3);
        for (local, &host) in view.edge_to_host.iter().enumerate() {
            let (a, b) = view.graph.endpoints(local);
            let (x, y) = k4.endpoints(host);
            let mapped = key(view.vertex_to_host[a], view.vertex_to_host[b]);
            assert_eq!(mapped, key(x, y));
        }
    }
}
