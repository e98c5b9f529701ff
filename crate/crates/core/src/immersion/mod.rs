//! Weak `K_χ` immersions in graphs with independence number at most 2.

mod bridges;
mod colouring;
mod faithful;
mod verify;

use serde::{Deserialize, Serialize};

pub use bridges::{assign_bridges, build_bridge_digraph, ArcHead, BridgeArc, BridgeDigraph, BridgeStats, Route, XNode};
pub use colouring::{
    audit_colouring, chi_alpha2, maximality_violation, refine_split, refine_split_counted, PairColouring, Split,
};
pub use faithful::faithful_immersion;
pub use verify::{verify_immersion, Certificate, Violation};

use crate::decorated::{critical_colouring, validate_decorated};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, SubgraphView, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionPath {
    /// Walk order: `edges` lead from `ends[0]` to `ends[1]`.
    pub ends: [Vertex; 2],
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Immersion {
    pub corners: Vec<Vertex>,
    pub paths: Vec<ImmersionPath>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faithful_wrt: Option<PairColouring>,
}

impl Immersion {
    /// All vertices as corners, joined by their edges.
    pub fn identity(g: &Multigraph) -> Result<Immersion> {
        let mut imm = Immersion {
            corners: (0..g.n()).collect(),
            paths: Vec::new(),
            faithful_wrt: None,
        };
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let e = g
                    .edge(u, v)
                    .ok_or_else(|| Error::InvalidColouring(format!("identity immersion needs edge {u}-{v}")))?;
                imm.push(u, v, vec![e]);
            }
        }
        Ok(imm)
    }

    pub fn t(&self) -> usize {
        self.corners.len()
    }

    pub fn path(&self, u: Vertex, v: Vertex) -> Option<&ImmersionPath> {
        self.paths.iter().find(|p| p.ends == [u, v] || p.ends == [v, u])
    }

    pub fn total_length(&self) -> usize {
        self.paths.iter().map(|p| p.edges.len()).sum()
    }

    pub(crate) fn push(&mut self, u: Vertex, v: Vertex, edges: Vec<EdgeId>) {
        self.paths.push(ImmersionPath { ends: [u, v], edges });
    }

    /// Relabels an immersion of `view.graph` into the host graph.
    fn lift(self, view: &SubgraphView) -> Immersion {
        Immersion {
            corners: self.corners.iter().map(|&v| view.vertex_to_host[v]).collect(),
            paths: self
                .paths
                .into_iter()
                .map(|p| ImmersionPath {
                    ends: p.ends.map(|v| view.vertex_to_host[v]),
                    edges: p.edges.iter().map(|&e| view.edge_to_host[e]).collect(),
                })
                .collect(),
            faithful_wrt: None,
        }
    }

    fn canonicalize(&mut self) {
        self.corners.sort_unstable();
        for p in &mut self.paths {
            if p.ends[0] > p.ends[1] {
                p.ends.swap(0, 1);
                p.edges.reverse();
            }
        }
        self.paths.sort_by_key(|p| p.ends);
    }
}

/// Counters and audit findings collected over a whole recursive construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditLog {
    pub levels: usize,
    pub identity: usize,
    pub drop_vertex: usize,
    pub universal: usize,
    pub merges: usize,
    pub swaps: usize,
    pub colourings_audited: usize,
    pub digraphs: usize,
    pub decorated_checked: usize,
    pub faithful_long_paths: usize,
    pub bridges: BridgeStats,
    pub violations: Vec<String>,
}

impl AuditLog {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn add(&mut self, s: &BridgeStats) {
        let b = &mut self.bridges;
        b.double_arcs += s.double_arcs;
        b.dropped += s.dropped;
        b.beta_paths += s.beta_paths;
        b.odd_cycles += s.odd_cycles;
        b.shared_colour_edges += s.shared_colour_edges;
        b.detours += s.detours;
        b.naive += s.naive;
        b.direct += s.direct;
    }
}

/// A verified weak `K_χ(G)` immersion of `g`.
pub fn construct_immersion(g: &Multigraph) -> Result<Immersion> {
    Builder::new(false).build(g)
}

/// As [`construct_immersion`], additionally checking the structural facts
/// at every recursion level and recording what each step did.
pub fn construct_immersion_audited(g: &Multigraph) -> Result<(Immersion, AuditLog)> {
    let mut b = Builder::new(true);
    let imm = b.build(g)?;
    Ok((imm, b.log))
}

struct Builder {
    audit: bool,
    log: AuditLog,
}

impl Builder {
    fn new(audit: bool) -> Self {
        Builder {
            audit,
            log: AuditLog::default(),
        }
    }

    fn build(&mut self, g: &Multigraph) -> Result<Immersion> {
        g.require_simple()?;
        if let Some(triple) = g.independent_triple() {
            return Err(Error::AlphaTooLarge(triple));
        }
        self.log.levels += 1;
        if g.n() <= 1 || g.is_complete() {
            self.log.identity += 1;
            return Immersion::identity(g);
        }
        let (chi, col) = chi_alpha2(g)?;
        let (col, swaps) = refine_split_counted(g, &col)?;
        self.log.swaps += swaps;
        if self.audit {
            self.log.colourings_audited += 1;
            let found = audit_colouring(g, &col);
            self.log.violations.extend(found);
        }

        let mut imm = if col.split.singletons.is_empty() {
            self.log.drop_vertex += 1;
            let keep: Vec<Vertex> = (0..g.n() - 1).collect();
            let view = g.induced(&keep);
            self.build(&view.graph)?.lift(&view)
        } else if col.split.x.is_empty() {
            self.log.universal += 1;
            let singles = col.singleton_vertices();
            let rest: Vec<Vertex> = (0..g.n()).filter(|v| !singles.contains(v)).collect();
            let view = g.induced(&rest);
            let mut imm = self.build(&view.graph)?.lift(&view);
            for &s in &singles {
                for &c in &imm.corners.clone() {
                    imm.push(s, c, vec![direct(g, s, c)?]);
                }
                imm.corners.push(s);
            }
            imm
        } else {
            self.log.merges += 1;
            self.merge(g, &col)?
        };
        imm.canonicalize();

        let cert = verify_immersion(g, &imm, chi);
        if let Some(v) = cert.violation {
            return Err(Error::contract(
                format!("constructed immersion rejected: {v}"),
                crate::io::emit_edge_list(g),
            ));
        }
        Ok(imm)
    }

    fn merge(&mut self, g: &Multigraph, col: &PairColouring) -> Result<Immersion> {
        let dump = || crate::io::emit_edge_list(g);
        let split = &col.split;
        let y_vertices: Vec<Vertex> = split.y.iter().flat_map(|&i| col.classes[i].clone()).collect();
        let mut rest: Vec<Vertex> = (0..g.n()).filter(|v| !y_vertices.contains(v)).collect();
        rest.sort_unstable();

        let y_view = g.induced(&{
            let mut ys = y_vertices.clone();
            ys.sort_unstable();
            ys
        });
        let y_imm = if y_vertices.is_empty() {
            Immersion {
                corners: Vec::new(),
                paths: Vec::new(),
                faithful_wrt: None,
            }
        } else {
            self.build(&y_view.graph)?.lift(&y_view)
        };
        if y_imm.corners.len() != split.y.len() {
            return Err(Error::contract(
                format!(
                    "free pairs span a K_{} immersion, expected K_{}",
                    y_imm.corners.len(),
                    split.y.len()
                ),
                dump(),
            ));
        }

        let x_view = g.induced(&rest);
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in x_view.vertex_to_host.iter().enumerate() {
            local[v] = i;
        }
        let local_classes: Vec<Vec<Vertex>> = split
            .singletons
            .iter()
            .chain(&split.x)
            .map(|&i| col.classes[i].iter().map(|&v| local[v]).collect())
            .collect();
        let local_col = PairColouring::new(&x_view.graph, local_classes)?;
        let f_imm = faithful_immersion(&x_view.graph, &local_col)?;
        self.log.faithful_long_paths += f_imm.paths.iter().filter(|p| p.edges.len() == 3).count();
        let mut imm = f_imm.lift(&x_view);
        let expected: Vec<Vertex> = {
            let mut e = col.singleton_vertices();
            e.extend(split.x.iter().map(|i| split.labels[i].1));
            e.sort_unstable();
            e
        };
        let mut got = imm.corners.clone();
        got.sort_unstable();
        if got != expected {
            return Err(Error::contract(
                format!("faithful corners {got:?} differ from labels {expected:?}"),
                dump(),
            ));
        }

        for &s in &col.singleton_vertices() {
            for &y in &y_imm.corners {
                imm.push(s, y, vec![direct(g, s, y)?]);
            }
        }

        for (&v, members) in &split.x_of {
            if members.is_empty() {
                continue;
            }
            self.log.digraphs += 1;
            let dv = build_bridge_digraph(g, col, v, &y_imm.corners)?;
            let short = dv.short_nodes();
            if !short.is_empty() {
                let msg = format!("singleton {v}: out-degree below demand at nodes {short:?}");
                self.log.violations.push(msg.clone());
                return Err(Error::contract(msg, dump()));
            }
            let d = dv.select()?;
            let (h, pairs) = d.double_arcs();
            let regions = d.regions();
            let dec = critical_colouring(&h, &regions)?;
            if self.audit {
                self.log.decorated_checked += 1;
                let report = validate_decorated(&h, &regions, &dec);
                self.log
                    .violations
                    .extend(report.failures.into_iter().map(|f| format!("singleton {v}: {f}")));
            }
            let (routes, stats) = assign_bridges(g, &d, &pairs, &dec)?;
            self.log.add(&stats);
            for r in routes {
                imm.push(d.corners[r.colour], d.x_nodes[r.node].c, r.edges);
            }
        }

        imm.corners.extend(&y_imm.corners);
        imm.paths.extend(y_imm.paths);
        Ok(imm)
    }
}

fn direct(g: &Multigraph, u: Vertex, v: Vertex) -> Result<EdgeId> {
    g.edge(u, v)
        .ok_or_else(|| Error::contract(format!("expected edge {u}-{v}"), crate::io::emit_edge_list(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::build(n, &pairs).unwrap()
    }

    #[test]
    fn complete_graphs_are_identity() {
        for n in 0..6 {
            let g = Multigraph::complete(n);
            let imm = construct_immersion(&g).unwrap();
            assert_eq!(imm.t(), n);
            assert!(imm.paths.iter().all(|p| p.edges.len() == 1));
        }
    }

    #[test]
    fn c5_gives_k3() {
        let g = cycle(5);
        let (imm, log) = construct_immersion_audited(&g).unwrap();
        assert_eq!(imm.t(), 3);
        assert!(verify_immersion(&g, &imm, 3).accepted);
        assert!(log.clean(), "{:?}", log.violations);
    }

    #[test]
    fn cocktail_party() {
        let mut pairs = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    pairs.push((u, v));
                }
            }
        }
        let g = Multigraph::build(6, &pairs).unwrap();
        let imm = construct_immersion(&g).unwrap();
        assert_eq!(imm.t(), 3);
    }

    #[test]
    fn rejects_large_alpha() {
        assert!(matches!(
            construct_immersion(&Multigraph::empty(3)),
            Err(Error::AlphaTooLarge(_))
        ));
    }
}
