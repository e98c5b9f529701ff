//! Routing between the corners of attached pairs and the corners of the
//! free-pair immersion.
//!
//! For a singleton `v`, the nodes are the pairs `A ∈ 𝔛_v` and the free
//! pairs `Y ∈ 𝔜`. An arc out of `A` is a length-2 bridge `p_A → c_A`
//! through a non-corner vertex. Colours are the free-pair corners; the side
//! of `(A, y)` is `L` when only `p_A y` exists, `M` when only `c_A y`
//! exists, and `R` when both do.

use std::collections::BTreeMap;

use serde::Serialize;

use super::colouring::links;
use super::PairColouring;
use crate::decorated::{DecoratedColouring, RegionPartition, Side};
use crate::error::{Error, Result};
use crate::graph::{ComponentShape, EdgeId, EdgeSet, Multigraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XNode {
    pub class: usize,
    pub p: Vertex,
    pub c: Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ArcHead {
    /// Index into `x_nodes`.
    Pair(usize),
    /// Index into `y_classes`.
    Free(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeArc {
    pub tail: usize,
    pub head: ArcHead,
    pub via: Vertex,
    /// `[p_tail–via, via–c_tail]`
    pub bridge: [EdgeId; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeDigraph {
    pub singleton: Vertex,
    pub x_nodes: Vec<XNode>,
    pub y_classes: Vec<Vec<Vertex>>,
    /// Free-pair corners; colour `k` is `corners[k]`.
    pub corners: Vec<Vertex>,
    /// `sides[a][k]` for node `a` and colour `k`.
    pub sides: Vec<Vec<Side>>,
    pub arcs: Vec<BridgeArc>,
}

impl BridgeDigraph {
    pub fn out_degree(&self, a: usize) -> usize {
        self.arcs.iter().filter(|arc| arc.tail == a).count()
    }

    /// `|L_A| + |M_A|`
    pub fn demand(&self, a: usize) -> usize {
        self.sides[a].iter().filter(|&&s| s != Side::R).count()
    }

    pub fn regions(&self) -> RegionPartition {
        RegionPartition::new(self.corners.len(), self.sides.clone()).expect("rows match the palette")
    }

    /// Nodes whose out-degree falls short of their demand.
    pub fn short_nodes(&self) -> Vec<usize> {
        (0..self.x_nodes.len())
            .filter(|&a| self.out_degree(a) < self.demand(a))
            .collect()
    }

    fn has_pair_arc(&self, a: usize, b: usize) -> bool {
        self.arcs
            .iter()
            .any(|arc| arc.tail == a && arc.head == ArcHead::Pair(b))
    }

    /// Keeps exactly `demand(A)` out-arcs per node: arcs into free pairs
    /// first, then one-way pair arcs, then two-way pair arcs.
    pub fn select(&self) -> Result<BridgeDigraph> {
        let mut arcs = Vec::new();
        for a in 0..self.x_nodes.len() {
            let mut out: Vec<&BridgeArc> = self.arcs.iter().filter(|arc| arc.tail == a).collect();
            out.sort_by_key(|arc| match arc.head {
                ArcHead::Free(_) => 0,
                ArcHead::Pair(b) if !self.has_pair_arc(b, a) => 1,
                ArcHead::Pair(_) => 2,
            });
            let need = self.demand(a);
            if out.len() < need {
                return Err(Error::contract(
                    format!(
                        "pair {:?} at singleton {} has {} bridges for {} corners",
                        [self.x_nodes[a].p, self.x_nodes[a].c],
                        self.singleton,
                        out.len(),
                        need
                    ),
                    String::new(),
                ));
            }
            arcs.extend(out.into_iter().take(need).cloned());
        }
        Ok(BridgeDigraph { arcs, ..self.clone() })
    }

    /// The undirected graph of two-way pair arcs and, per edge, its ends.
    pub fn double_arcs(&self) -> (Multigraph, Vec<(usize, usize)>) {
        let mut pairs = Vec::new();
        for arc in &self.arcs {
            if let ArcHead::Pair(b) = arc.head {
                if arc.tail < b && self.has_pair_arc(b, arc.tail) {
                    pairs.push((arc.tail, b));
                }
            }
        }
        pairs.sort_unstable();
        let h = Multigraph::build(self.x_nodes.len(), &pairs).expect("pairs are distinct node indices");
        (h, pairs)
    }
}

/// `D_v` for the singleton `v`, with `corners` the free-pair immersion's corners.
pub fn build_bridge_digraph(
    g: &Multigraph,
    col: &PairColouring,
    v: Vertex,
    corners: &[Vertex],
) -> Result<BridgeDigraph> {
    let dump = || crate::io::emit_edge_list(g);
    let members = col.split.x_of.get(&v).cloned().unwrap_or_default();
    let x_nodes: Vec<XNode> = members
        .iter()
        .map(|&class| {
            let (p, c) = col.split.labels[&class];
            XNode { class, p, c }
        })
        .collect();
    let y_classes: Vec<Vec<Vertex>> = col.split.y.iter().map(|&i| col.classes[i].clone()).collect();
    let is_corner = |x: Vertex| corners.contains(&x);

    let mut sides = Vec::with_capacity(x_nodes.len());
    for node in &x_nodes {
        let mut row = Vec::with_capacity(corners.len());
        for &y in corners {
            row.push(match (g.adjacent(node.c, y), g.adjacent(node.p, y)) {
                (true, true) => Side::R,
                (true, false) => Side::M,
                (false, true) => Side::L,
                (false, false) => {
                    return Err(Error::contract(
                        format!("corner {y} misses both {} and {}", node.p, node.c),
                        dump(),
                    ))
                }
            });
        }
        sides.push(row);
    }

    let mut arcs = Vec::new();
    for (a, node) in x_nodes.iter().enumerate() {
        for (b, other) in x_nodes.iter().enumerate() {
            if a == b || links(g, node.c, &col.classes[other.class]) != 2 {
                continue;
            }
            let pp = g.edge(node.p, other.p).ok_or_else(|| {
                Error::contract(
                    format!("missed vertices {} and {} are not adjacent", node.p, other.p),
                    dump(),
                )
            })?;
            let pc = g.edge(other.p, node.c).expect("c_A sees all of B");
            arcs.push(BridgeArc {
                tail: a,
                head: ArcHead::Pair(b),
                via: other.p,
                bridge: [pp, pc],
            });
        }
        for (k, class) in y_classes.iter().enumerate() {
            let via = class
                .iter()
                .copied()
                .find(|&y| !is_corner(y) && g.adjacent(y, node.p) && g.adjacent(y, node.c));
            if let Some(y) = via {
                arcs.push(BridgeArc {
                    tail: a,
                    head: ArcHead::Free(k),
                    via: y,
                    bridge: [
                        g.edge(node.p, y).expect("adjacent"),
                        g.edge(y, node.c).expect("adjacent"),
                    ],
                });
            }
        }
    }
    Ok(BridgeDigraph {
        singleton: v,
        x_nodes,
        y_classes,
        corners: corners.to_vec(),
        sides,
        arcs,
    })
}

/// One route from the free-pair corner `corners[colour]` to `c` of node `node`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Route {
    pub node: usize,
    pub colour: usize,
    /// Walk from the free-pair corner to `c_A`.
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BridgeStats {
    pub double_arcs: usize,
    pub dropped: usize,
    pub beta_paths: usize,
    pub odd_cycles: usize,
    pub shared_colour_edges: usize,
    pub detours: usize,
    pub naive: usize,
    pub direct: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum ArcState {
    Free,
    Dropped,
    Taken {
        colour: usize,
        naive: bool,
        edges: Vec<EdgeId>,
    },
}

/// Turns a decorated colouring of the two-way arc graph into routes joining
/// every node to every free-pair corner.
///
/// `d` must be the selected sub-digraph and `pairs` the edge ends returned
/// by [`BridgeDigraph::double_arcs`].
pub fn assign_bridges(
    g: &Multigraph,
    d: &BridgeDigraph,
    pairs: &[(usize, usize)],
    dec: &DecoratedColouring,
) -> Result<(Vec<Route>, BridgeStats)> {
    let fail = |msg: String| {
        Error::contract(
            format!("singleton {}: {msg}", d.singleton),
            crate::io::emit_edge_list(g),
        )
    };
    let edge = |u: Vertex, w: Vertex| g.edge(u, w).ok_or_else(|| fail(format!("missing edge {u}-{w}")));
    let node = |a: usize| &d.x_nodes[a];
    let mut stats = BridgeStats {
        double_arcs: pairs.len(),
        ..Default::default()
    };

    let mut state = vec![ArcState::Free; d.arcs.len()];
    let arc_index: BTreeMap<(usize, usize), usize> = d
        .arcs
        .iter()
        .enumerate()
        .filter_map(|(i, arc)| match arc.head {
            ArcHead::Pair(b) => Some(((arc.tail, b), i)),
            ArcHead::Free(_) => None,
        })
        .collect();
    let find = |a: usize, b: usize| {
        arc_index
            .get(&(a, b))
            .copied()
            .ok_or_else(|| fail(format!("no arc {a}->{b}")))
    };
    let mut assigned = vec![vec![false; d.corners.len()]; d.x_nodes.len()];

    // the route for colour k into `a` through `b`: y p_b c_a
    let take_via =
        |state: &mut Vec<ArcState>, assigned: &mut Vec<Vec<bool>>, a: usize, b: usize, k: usize| -> Result<()> {
            let i = find(a, b)?;
            if state[i] != ArcState::Free || assigned[a][k] {
                return Err(fail(format!("arc {a}->{b} or colour {k} used twice")));
            }
            let edges = vec![edge(d.corners[k], node(b).p)?, edge(node(b).p, node(a).c)?];
            state[i] = ArcState::Taken {
                colour: k,
                naive: false,
                edges,
            };
            assigned[a][k] = true;
            Ok(())
        };

    for (&e, &(x, _)) in &dec.alpha {
        let (a, b) = pairs[e];
        let other = if x == a { b } else { a };
        let i = find(x, other)?;
        state[i] = ArcState::Dropped;
        stats.dropped += 1;
    }

    for path in &dec.beta_paths {
        take_via(&mut state, &mut assigned, path.u, path.v, path.colour)?;
        take_via(&mut state, &mut assigned, path.v, path.w, path.colour)?;
        stats.beta_paths += 1;
    }

    let mut detour_candidates = Vec::new();
    let h = Multigraph::build(d.x_nodes.len(), pairs).expect("pairs are valid");
    for k in 0..d.corners.len() {
        let class = dec.colour_class(k);
        for comp in h.components_of(&class) {
            match comp.shape {
                ComponentShape::Trivial => {}
                ComponentShape::OddCycle => {
                    let order = cycle_order(&h, &class, &comp.vertices);
                    for i in 0..order.len() {
                        let (a, b) = (order[i], order[(i + 1) % order.len()]);
                        take_via(&mut state, &mut assigned, a, b, k)?;
                    }
                    stats.odd_cycles += 1;
                }
                ComponentShape::SingleEdge => {
                    let e = comp.edges[0];
                    let (a, b) = pairs[e];
                    match (d.sides[a][k], d.sides[b][k]) {
                        (Side::M, _) => {
                            state[find(a, b)?] = ArcState::Dropped;
                            stats.dropped += 1;
                        }
                        (_, Side::M) => {
                            state[find(b, a)?] = ArcState::Dropped;
                            stats.dropped += 1;
                        }
                        (Side::L, Side::L) => {
                            take_via(&mut state, &mut assigned, a, b, k)?;
                            take_via(&mut state, &mut assigned, b, a, k)?;
                            stats.shared_colour_edges += 1;
                        }
                        (Side::L, Side::R) => take_via(&mut state, &mut assigned, a, b, k)?,
                        (Side::R, Side::L) => take_via(&mut state, &mut assigned, b, a, k)?,
                        (Side::R, Side::R) => detour_candidates.push((a, b, k)),
                    }
                }
                _ => {
                    return Err(fail(format!(
                        "colour {k} has a component that is not an edge or odd cycle"
                    )))
                }
            }
        }
    }

    for a in 0..d.x_nodes.len() {
        for k in 0..d.corners.len() {
            if d.sides[a][k] != Side::L || assigned[a][k] {
                continue;
            }
            let i = (0..d.arcs.len())
                .find(|&i| d.arcs[i].tail == a && state[i] == ArcState::Free)
                .ok_or_else(|| fail(format!("node {a} has no free bridge for colour {k}")))?;
            let [first, second] = d.arcs[i].bridge;
            state[i] = ArcState::Taken {
                colour: k,
                naive: true,
                edges: vec![edge(d.corners[k], node(a).p)?, first, second],
            };
            assigned[a][k] = true;
            stats.naive += 1;
        }
    }

    for (a, b, k) in detour_candidates {
        let (ab, ba) = (find(a, b)?, find(b, a)?);
        let naive = |s: &ArcState| matches!(s, ArcState::Taken { naive: true, .. });
        if naive(&state[ab]) && naive(&state[ba]) {
            let y = d.corners[k];
            if let ArcState::Taken { edges, .. } = &mut state[ab] {
                let (pa, pb) = (node(a).p, node(b).p);
                *edges = vec![edges[0], edge(pa, y)?, edge(y, pb)?, edges[2]];
            }
            stats.detours += 1;
        }
    }

    let mut routes = Vec::new();
    for (i, s) in state.into_iter().enumerate() {
        if let ArcState::Taken { colour, edges, .. } = s {
            routes.push(Route {
                node: d.arcs[i].tail,
                colour,
                edges,
            });
        }
    }
    for a in 0..d.x_nodes.len() {
        for k in 0..d.corners.len() {
            match d.sides[a][k] {
                Side::L if !assigned[a][k] => return Err(fail(format!("colour {k} never reached node {a}"))),
                Side::L => {}
                Side::M | Side::R => {
                    routes.push(Route {
                        node: a,
                        colour: k,
                        edges: vec![edge(d.corners[k], node(a).c)?],
                    });
                    stats.direct += 1;
                }
            }
        }
    }
    routes.sort_by_key(|r| (r.node, r.colour));
    Ok((routes, stats))
}

/// Vertices of a cycle component in traversal order, starting at its lowest vertex.
fn cycle_order(h: &Multigraph, class: &EdgeSet, vertices: &[Vertex]) -> Vec<Vertex> {
    let start = *vertices.iter().min().expect("cycle is non-empty");
    let mut order = vec![start];
    let mut prev_edge = usize::MAX;
    let mut at = start;
    loop {
        let e = h
            .incident(at)
            .iter()
            .copied()
            .find(|&e| class.contains(e) && e != prev_edge)
            .expect("cycle vertices have degree two");
        let next = h.other(e, at);
        if next == start {
            return order;
        }
        order.push(next);
        prev_edge = e;
        at = next;
    }
}
