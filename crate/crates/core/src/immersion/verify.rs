//! Independent checker for weak clique immersions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::Immersion;
use crate::graph::{EdgeId, Multigraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum Violation {
    CornerCount {
        expected: usize,
        found: usize,
    },
    CornerOutOfRange {
        vertex: Vertex,
    },
    DuplicateCorner {
        vertex: Vertex,
    },
    NonCornerPath {
        ends: [Vertex; 2],
    },
    DuplicatePath {
        ends: [Vertex; 2],
    },
    MissingPath {
        ends: [Vertex; 2],
    },
    UnknownEdge {
        ends: [Vertex; 2],
        edge: EdgeId,
    },
    Endpoint {
        ends: [Vertex; 2],
        detail: String,
    },
    Walk {
        ends: [Vertex; 2],
        position: usize,
    },
    EdgeReuse {
        edge: EdgeId,
        first: [Vertex; 2],
        second: [Vertex; 2],
    },
    FaithfulColouring {
        detail: String,
    },
    PseudoFaithful {
        class: Vec<Vertex>,
    },
    Confinement {
        ends: [Vertex; 2],
        edge: EdgeId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CornerCount { expected, found } => write!(f, "corner count: expected {expected}, found {found}"),
            Violation::CornerOutOfRange { vertex } => write!(f, "corner {vertex} is not a vertex"),
            Violation::DuplicateCorner { vertex } => write!(f, "duplicate corner {vertex}"),
            Violation::NonCornerPath { ends } => write!(f, "path {ends:?} does not join two corners"),
            Violation::DuplicatePath { ends } => write!(f, "two paths for pair {ends:?}"),
            Violation::MissingPath { ends } => write!(f, "no path for pair {ends:?}"),
            Violation::UnknownEdge { ends, edge } => write!(f, "path {ends:?} uses unknown edge {edge}"),
            Violation::Endpoint { ends, detail } => write!(f, "endpoint: path {ends:?} {detail}"),
            Violation::Walk { ends, position } => write!(f, "walk: path {ends:?} breaks at edge #{position}"),
            Violation::EdgeReuse { edge, first, second } => {
                write!(f, "edge reuse: edge {edge} in paths {first:?} and {second:?}")
            }
            Violation::FaithfulColouring { detail } => write!(f, "faithfulness colouring invalid: {detail}"),
            Violation::PseudoFaithful { class } => write!(f, "pseudo-faithfulness: class {class:?} holds two corners"),
            Violation::Confinement { ends, edge } => {
                write!(f, "confinement: path {ends:?} uses edge {edge} outside its two classes")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub accepted: bool,
    pub t: usize,
    pub corners: usize,
    pub paths: usize,
    pub total_length: usize,
    pub violation: Option<Violation>,
}

pub fn verify_immersion(g: &Multigraph, imm: &Immersion, t: usize) -> Certificate {
    let verdict = check(g, imm, t);
    Certificate {
        accepted: verdict.is_ok(),
        t,
        corners: imm.corners.len(),
        paths: imm.paths.len(),
        total_length: imm.paths.iter().map(|p| p.edges.len()).sum(),
        violation: verdict.err(),
    }
}

fn key(a: Vertex, b: Vertex) -> [Vertex; 2] {
    [a.min(b), a.max(b)]
}

fn check(g: &Multigraph, imm: &Immersion, t: usize) -> Result<(), Violation> {
    if imm.corners.len() != t {
        return Err(Violation::CornerCount {
            expected: t,
            found: imm.corners.len(),
        });
    }
    let mut corners = BTreeSet::new();
    for &v in &imm.corners {
        if v >= g.n() {
            return Err(Violation::CornerOutOfRange { vertex: v });
        }
        if !corners.insert(v) {
            return Err(Violation::DuplicateCorner { vertex: v });
        }
    }

    let mut by_pair = BTreeMap::new();
    for path in &imm.paths {
        let [a, b] = path.ends;
        if a == b || !corners.contains(&a) || !corners.contains(&b) {
            return Err(Violation::NonCornerPath { ends: path.ends });
        }
        if by_pair.insert(key(a, b), path).is_some() {
            return Err(Violation::DuplicatePath { ends: key(a, b) });
        }
    }
    let list: Vec<Vertex> = corners.iter().copied().collect();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            if !by_pair.contains_key(&[a, b]) {
                return Err(Violation::MissingPath { ends: [a, b] });
            }
        }
    }

    let mut owner: BTreeMap<EdgeId, [Vertex; 2]> = BTreeMap::new();
    for path in by_pair.values() {
        let ends = path.ends;
        let mut at = ends[0];
        for (position, &e) in path.edges.iter().enumerate() {
            if e >= g.m() {
                return Err(Violation::UnknownEdge { ends, edge: e });
            }
            let (u, v) = g.endpoints(e);
            if at != u && at != v {
                if position == 0 {
                    return Err(Violation::Endpoint {
                        ends,
                        detail: format!("starts with edge {e} = {u}-{v}, not at {}", ends[0]),
                    });
                }
                return Err(Violation::Walk { ends, position });
            }
            at = if at == u { v } else { u };
            if let Some(first) = owner.insert(e, ends) {
                return Err(Violation::EdgeReuse {
                    edge: e,
                    first,
                    second: ends,
                });
            }
        }
        if at != ends[1] {
            return Err(Violation::Endpoint {
                ends,
                detail: format!("ends at {at}, not at {}", ends[1]),
            });
        }
    }

    if let Some(col) = &imm.faithful_wrt {
        let class_of = col.class_of(g.n());
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Violation::FaithfulColouring {
                detail: format!("vertex {v} has no class"),
            });
        }
        let mut hit = vec![false; col.classes.len()];
        for &v in &imm.corners {
            if std::mem::replace(&mut hit[class_of[v]], true) {
                return Err(Violation::PseudoFaithful {
                    class: col.classes[class_of[v]].clone(),
                });
            }
        }
        for path in by_pair.values() {
            let allowed = [class_of[path.ends[0]], class_of[path.ends[1]]];
            for &e in &path.edges {
                let (u, v) = g.endpoints(e);
                if !allowed.contains(&class_of[u]) || !allowed.contains(&class_of[v]) {
                    return Err(Violation::Confinement {
                        ends: path.ends,
                        edge: e,
                    });
                }
            }
        }
    }
    Ok(())
}
