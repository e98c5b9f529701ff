//! Decorated cycle-matching colourings.
//!
//! Given a palette and, per vertex, a partition of the palette into
//! `L_x`, `M_x`, `R_x` with `|L_x| + |M_x| >= d(x)`, every edge ends up in
//! exactly one of three places:
//!
//! * `alpha`: the edge is charged to one endpoint `x` and a colour `c ∈ M_x`,
//!   injectively, with `x` isolated in colour class `c`;
//! * `beta`: the edge lies on a length-2 path `u v w` of colour `c` with
//!   `c ∈ L_u ∩ L_v` and `c ∈ R_w`, all three isolated in class `c`;
//! * `colour`: a cycle-matching colouring of the rest in which every odd
//!   cycle of colour `c` stays inside `{x : c ∈ L_x}`.
//!
//! Colours are processed in ascending order. Each round extracts a spanning
//! ocm set of the remaining graph, marks the vertices it misses, and repairs
//! odd cycles that leave `L` territory.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{max_f_bounded_subgraph_preferring, perfect_two_matching, FactorSubgraph};
use crate::graph::{ComponentShape, Doubled, EdgeId, EdgeSet, Multigraph, SubgraphView, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    M,
    R,
}

/// Per-vertex partition of the palette `0..palette` into `L`, `M`, `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionPartition {
    palette: usize,
    sides: Vec<Vec<Side>>,
}

impl RegionPartition {
    pub fn new(palette: usize, sides: Vec<Vec<Side>>) -> Result<Self> {
        for (vertex, row) in sides.iter().enumerate() {
            if row.len() != palette {
                return Err(Error::InvalidRegions {
                    vertex,
                    reason: format!("{} sides for a palette of {palette}", row.len()),
                });
            }
        }
        Ok(RegionPartition { palette, sides })
    }

    /// Builds the partition from explicit `L` and `M` sets; `R` is the rest.
    pub fn from_sets(palette: usize, l: &[Vec<usize>], m: &[Vec<usize>]) -> Result<Self> {
        if l.len() != m.len() {
            return Err(Error::InvalidRegions {
                vertex: l.len().min(m.len()),
                reason: "L and M cover different vertex counts".into(),
            });
        }
        let mut sides = vec![vec![Side::R; palette]; l.len()];
        for (vertex, (ls, ms)) in l.iter().zip(m).enumerate() {
            for (&c, side) in ls.iter().map(|c| (c, Side::L)).chain(ms.iter().map(|c| (c, Side::M))) {
                if c >= palette {
                    return Err(Error::InvalidRegions {
                        vertex,
                        reason: format!("colour {c} outside palette"),
                    });
                }
                if sides[vertex][c] != Side::R {
                    return Err(Error::InvalidRegions {
                        vertex,
                        reason: format!("colour {c} in both L and M"),
                    });
                }
                sides[vertex][c] = side;
            }
        }
        Ok(RegionPartition { palette, sides })
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    pub fn side(&self, x: Vertex, colour: usize) -> Side {
        self.sides[x][colour]
    }

    /// `|L_x| + |M_x|` restricted to colours `>= from`.
    pub fn available(&self, x: Vertex, from: usize) -> usize {
        self.sides[x][from.min(self.palette)..]
            .iter()
            .filter(|&&s| s != Side::R)
            .count()
    }

    pub fn check_premise(&self, g: &Multigraph) -> Result<()> {
        if self.sides.len() != g.n() {
            return Err(Error::InvalidRegions {
                vertex: self.sides.len().min(g.n()),
                reason: format!("regions for {} vertices, graph has {}", self.sides.len(), g.n()),
            });
        }
        for x in 0..g.n() {
            let available = self.available(x, 0);
            if available < g.degree(x) {
                return Err(Error::RegionPremise {
                    vertex: x,
                    available,
                    degree: g.degree(x),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaPath {
    pub colour: usize,
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    /// `[uv, vw]`
    pub edges: [EdgeId; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub colour: usize,
    /// Colours still unused when this step began (including its own).
    pub remaining: usize,
    pub removed: Vec<EdgeId>,
    pub newly_marked: Vec<Vertex>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecoratedColouring {
    pub alpha: BTreeMap<EdgeId, (Vertex, usize)>,
    pub beta_paths: Vec<BetaPath>,
    pub colour: BTreeMap<EdgeId, usize>,
    pub steps: Vec<Step>,
}

impl DecoratedColouring {
    pub fn beta(&self) -> BTreeMap<EdgeId, usize> {
        self.beta_paths
            .iter()
            .flat_map(|p| p.edges.map(|e| (e, p.colour)))
            .collect()
    }

    pub fn colour_class(&self, colour: usize) -> EdgeSet {
        self.colour
            .iter()
            .filter(|&(_, &c)| c == colour)
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Edges at positions `start, start + 2, ...` of a cycle of length `len`,
/// pairing up the `count` consecutive vertices beginning at `start`.
fn path_matching(len: usize, start: usize, count: usize) -> impl Iterator<Item = usize> {
    (0..count / 2).map(move |j| (start + 2 * j) % len)
}

/// Bound on candidate uncovered sets examined while searching for a
/// sequence of rounds that keeps marked vertices pairwise non-adjacent.
const SEARCH_BUDGET: usize = 20_000;

/// Builds the decorated colouring. Rounds are chosen by depth-first search
/// so that vertices left uncovered stay pairwise non-adjacent, and away from
/// earlier marked vertices, in the graph that remains. When the search is
/// exhausted the greedy sequence is returned; [`validate_decorated`] then
/// reports where the marking fails.
pub fn critical_colouring(g: &Multigraph, regions: &RegionPartition) -> Result<DecoratedColouring> {
    regions.check_premise(g)?;
    let mut search = Search {
        g,
        regions,
        budget: SEARCH_BUDGET,
    };
    let start = DecoratedColouring::default();
    if let Some(dec) = search.round(0, &EdgeSet::new(), &vec![false; g.n()], &start, true)? {
        return Ok(dec);
    }
    search
        .round(0, &EdgeSet::new(), &vec![false; g.n()], &start, false)?
        .ok_or_else(|| Error::contract("greedy rounds failed", crate::io::emit_edge_list(g)))
}

struct Search<'a> {
    g: &'a Multigraph,
    regions: &'a RegionPartition,
    budget: usize,
}

impl Search<'_> {
    fn round(
        &mut self,
        c: usize,
        removed: &EdgeSet,
        marked: &[bool],
        dec: &DecoratedColouring,
        strict: bool,
    ) -> Result<Option<DecoratedColouring>> {
        let g = self.g;
        let n = g.n();
        let palette = self.regions.palette();
        let view = g.without_edges(removed);
        if view.graph.m() == 0 || c == palette {
            if removed.len() != g.m() {
                if strict {
                    return Ok(None);
                }
                return Err(Error::contract(
                    format!("{} edges left after exhausting the palette", g.m() - removed.len()),
                    crate::io::emit_edge_list(g),
                ));
            }
            return Ok(Some(dec.clone()));
        }
        let remaining = palette - c;
        let cur = &view.graph;
        let doubled = cur.doubled();
        let near_marked: Vec<Vertex> = (0..n)
            .filter(|&x| !marked[x] && cur.neighbours(x).into_iter().any(|y| marked[y]))
            .collect();
        let (greedy, _) = max_f_bounded_subgraph_preferring(&doubled.graph, &near_marked)?;
        let uncovered = |h: &FactorSubgraph| -> Vec<Vertex> {
            let d = h.degrees(n);
            (0..n).filter(|&x| d[x] == 0).collect()
        };
        let greedy_u = uncovered(&greedy);
        let admissible = |u: &[Vertex]| {
            u.iter().all(|&x| {
                cur.degree(x) < remaining && cur.neighbours(x).into_iter().all(|y| !marked[y] && !u.contains(&y))
            })
        };

        let mut options = Vec::new();
        if !strict || admissible(&greedy_u) {
            options.push(greedy);
        }
        if strict {
            for u in self.alternatives(cur, remaining, marked, greedy_u.len()) {
                if u == greedy_u {
                    continue;
                }
                let rest: Vec<Vertex> = (0..n).filter(|x| !u.contains(x)).collect();
                if let Some(h) = perfect_two_matching(&doubled.graph, &rest) {
                    options.push(h);
                }
            }
        }

        for h in options {
            let mut next = dec.clone();
            let step = match colour_round(g, self.regions, &view, &doubled, &h, c, &mut next) {
                Ok(step) => step,
                Err(_) if strict => continue,
                Err(e) => return Err(e),
            };
            let mut next_removed = removed.clone();
            next_removed.extend(step.removed.iter().copied());
            let mut next_marked = marked.to_vec();
            for &x in &step.newly_marked {
                next_marked[x] = true;
            }
            next.steps.push(step);
            if let Some(done) = self.round(c + 1, &next_removed, &next_marked, &next, strict)? {
                return Ok(Some(done));
            }
        }
        Ok(None)
    }

    /// Independent sets of size `size` that may be left uncovered: every
    /// isolated vertex, plus vertices of degree below `remaining` with no
    /// marked neighbour. Draws on the shared budget.
    fn alternatives(&mut self, cur: &Multigraph, remaining: usize, marked: &[bool], size: usize) -> Vec<Vec<Vertex>> {
        let n = cur.n();
        let forced: Vec<Vertex> = (0..n).filter(|&x| cur.degree(x) == 0).collect();
        let eligible: Vec<Vertex> = (0..n)
            .filter(|&x| {
                let d = cur.degree(x);
                d > 0 && d < remaining && cur.neighbours(x).into_iter().all(|y| !marked[y])
            })
            .collect();
        let mut out = Vec::new();
        if forced.len() > size {
            return out;
        }
        fn pick(
            cur: &Multigraph,
            eligible: &[Vertex],
            from: usize,
            need: usize,
            chosen: &mut Vec<Vertex>,
            out: &mut Vec<Vec<Vertex>>,
            budget: &mut usize,
        ) {
            if *budget == 0 {
                return;
            }
            *budget -= 1;
            if need == 0 {
                let mut u = chosen.clone();
                u.sort_unstable();
                out.push(u);
                return;
            }
            for i in from..eligible.len() {
                if eligible.len() - i < need {
                    break;
                }
                let x = eligible[i];
                if chosen.iter().any(|&y| cur.adjacent(x, y)) {
                    continue;
                }
                chosen.push(x);
                pick(cur, eligible, i + 1, need - 1, chosen, out, budget);
                chosen.pop();
            }
        }
        let mut chosen = forced.clone();
        pick(
            cur,
            &eligible,
            0,
            size - forced.len(),
            &mut chosen,
            &mut out,
            &mut self.budget,
        );
        out
    }
}

/// Colours one round from the ocm set `h` of the doubled remaining graph.
fn colour_round(
    g: &Multigraph,
    regions: &RegionPartition,
    view: &SubgraphView,
    doubled: &Doubled,
    h: &FactorSubgraph,
    c: usize,
    dec: &mut DecoratedColouring,
) -> Result<Step> {
    let n = g.n();
    let cur = &view.graph;
    let remaining = regions.palette() - c;
    let to_host = |e: EdgeId| view.edge_to_host[doubled.origin[e]];
    let h_degree = h.degrees(n);
    let newly_marked: Vec<Vertex> = (0..n).filter(|&x| h_degree[x] == 0).collect();
    let mut step_removed = Vec::new();

    for cyc in &h.two_cycles {
        let e = to_host(cyc.edges[0]);
        dec.colour.insert(e, c);
        step_removed.push(e);
    }
    for cyc in &h.odd_cycles {
        let vs = &cyc.vertices;
        let es: Vec<EdgeId> = cyc.edges.iter().map(|&e| to_host(e)).collect();
        let len = vs.len();
        let lowest = |pred: &dyn Fn(Vertex) -> bool| (0..len).filter(|&i| pred(vs[i])).min_by_key(|&i| vs[i]);
        let kept: Vec<usize> = if vs.iter().all(|&x| regions.side(x, c) == Side::L) {
            (0..len).collect()
        } else if let Some(i) = lowest(&|x| regions.side(x, c) == Side::M) {
            dec.alpha.insert(es[i], (vs[i], c));
            step_removed.push(es[i]);
            path_matching(len, i + 1, len - 1).collect()
        } else if let Some(i) = lowest(&|x| regions.side(x, c) == Side::R && cur.degree(x) < remaining) {
            path_matching(len, i + 1, len - 1).collect()
        } else {
            let found = (0..len).find(|&i| {
                regions.side(vs[i], c) == Side::R
                    && regions.side(vs[(i + len - 1) % len], c) == Side::L
                    && regions.side(vs[(i + len - 2) % len], c) == Side::L
            });
            let Some(i) = found else {
                return Err(Error::contract(
                    format!("colour {c}: odd cycle {vs:?} has no L-L-R path"),
                    crate::io::emit_edge_list(g),
                ));
            };
            let (pu, pv) = ((i + len - 2) % len, (i + len - 1) % len);
            let path = BetaPath {
                colour: c,
                u: vs[pu],
                v: vs[pv],
                w: vs[i],
                edges: [es[pu], es[pv]],
            };
            step_removed.extend(path.edges);
            dec.beta_paths.push(path);
            path_matching(len, i + 1, len - 3).collect()
        };
        for p in kept {
            dec.colour.insert(es[p], c);
            step_removed.push(es[p]);
        }
    }

    step_removed.sort_unstable();
    Ok(Step {
        colour: c,
        remaining,
        removed: step_removed,
        newly_marked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecoratedReport {
    pub valid: bool,
    pub failures: Vec<String>,
}

/// Checks every clause of a decorated colouring independently of how it
/// was produced. Step records, when present, are replayed to audit the
/// marking and spanning invariants.
pub fn validate_decorated(g: &Multigraph, regions: &RegionPartition, dec: &DecoratedColouring) -> DecoratedReport {
    let mut bad = Vec::new();
    let n = g.n();
    let palette = regions.palette();
    if regions.vertex_count() != n {
        bad.push("regions do not match the vertex count".into());
        return DecoratedReport {
            valid: false,
            failures: bad,
        };
    }

    // every edge in exactly one of alpha / beta / colour
    let mut owner = vec![0usize; g.m()];
    let beta = dec.beta();
    let beta_edge_count: usize = dec.beta_paths.len() * 2;
    for e in dec.alpha.keys().chain(beta.keys()).chain(dec.colour.keys()) {
        match owner.get_mut(*e) {
            Some(o) => *o += 1,
            None => bad.push(format!("edge {e} does not exist")),
        }
    }
    if beta.len() != beta_edge_count {
        bad.push("β paths share an edge".into());
    }
    for (e, &o) in owner.iter().enumerate() {
        if o != 1 {
            bad.push(format!("edge {e} is assigned {o} times"));
        }
    }

    let class_degree = |colour: usize| -> Vec<usize> {
        let mut deg = vec![0; n];
        for (&e, &c) in &dec.colour {
            if c == colour && e < g.m() {
                let (u, v) = g.endpoints(e);
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg
    };
    let degrees: Vec<Vec<usize>> = (0..palette).map(class_degree).collect();

    // clause (1)
    let mut charged = BTreeSet::new();
    for (&e, &(x, c)) in &dec.alpha {
        if !charged.insert((x, c)) {
            bad.push(format!("α not injective: ({x}, {c}) charged twice"));
        }
        if e >= g.m() || c >= palette || x >= n {
            bad.push(format!("α({e}) = ({x}, {c}) out of range"));
            continue;
        }
        let (u, v) = g.endpoints(e);
        if x != u && x != v {
            bad.push(format!("α({e}) names {x}, not an endpoint"));
        }
        if regions.side(x, c) != Side::M {
            bad.push(format!("α({e}) = ({x}, {c}) but {c} not in M_{x}"));
        }
        if degrees[c][x] != 0 {
            bad.push(format!("α({e}) = ({x}, {c}) but {x} is not isolated in colour {c}"));
        }
    }

    // clause (2)
    let mut on_path: BTreeSet<(usize, Vertex)> = BTreeSet::new();
    for p in &dec.beta_paths {
        let [uv, vw] = p.edges;
        if uv >= g.m() || vw >= g.m() || p.colour >= palette || p.u.max(p.v).max(p.w) >= n {
            bad.push(format!("β path {:?} out of range", (p.u, p.v, p.w)));
            continue;
        }
        let joins = |e: EdgeId, a: Vertex, b: Vertex| {
            let (x, y) = g.endpoints(e);
            (x, y) == (a, b) || (x, y) == (b, a)
        };
        if !joins(uv, p.u, p.v) || !joins(vw, p.v, p.w) || p.u == p.w {
            bad.push(format!("β path {:?} is not a length-2 path", (p.u, p.v, p.w)));
        }
        let c = p.colour;
        if regions.side(p.u, c) != Side::L || regions.side(p.v, c) != Side::L || regions.side(p.w, c) != Side::R {
            bad.push(format!("β path {:?} of colour {c} violates L, L, R", (p.u, p.v, p.w)));
        }
        for x in [p.u, p.v, p.w] {
            if !on_path.insert((c, x)) {
                bad.push(format!("β paths of colour {c} share vertex {x}"));
            }
            if degrees[c][x] != 0 {
                bad.push(format!("β path vertex {x} is not isolated in colour {c}"));
            }
        }
    }

    // clause (3)
    for (&e, &c) in &dec.colour {
        if c >= palette {
            bad.push(format!("edge {e} has colour {c} outside the palette"));
        }
    }
    for c in 0..palette {
        for comp in g.components_of(&dec.colour_class(c)) {
            match comp.shape {
                ComponentShape::Trivial | ComponentShape::SingleEdge => {}
                ComponentShape::OddCycle => {
                    if let Some(&x) = comp.vertices.iter().find(|&&x| regions.side(x, c) != Side::L) {
                        bad.push(format!("odd cycle {:?} of colour {c} leaves L at {x}", comp.vertices));
                    }
                }
                _ => bad.push(format!(
                    "colour {c}: component {:?} is not an edge or odd cycle",
                    comp.vertices
                )),
            }
        }
    }

    if !dec.steps.is_empty() {
        audit_steps(g, regions, dec, &mut bad);
    }

    DecoratedReport {
        valid: bad.is_empty(),
        failures: bad,
    }
}

fn audit_steps(g: &Multigraph, regions: &RegionPartition, dec: &DecoratedColouring, bad: &mut Vec<String>) {
    let n = g.n();
    let palette = regions.palette();
    let mut removed = EdgeSet::new();
    let mut marked = vec![false; n];
    let beta = dec.beta();
    let colour_of_edge = |e: EdgeId| -> Option<usize> {
        dec.colour
            .get(&e)
            .copied()
            .or_else(|| dec.alpha.get(&e).map(|&(_, c)| c))
            .or_else(|| beta.get(&e).copied())
    };
    for step in &dec.steps {
        let c = step.colour;
        if step.remaining != palette - c {
            bad.push(format!("step {c}: recorded {} remaining colours", step.remaining));
        }
        let cur = g.without_edges(&removed).graph;
        for &e in &step.removed {
            if e >= g.m() || removed.contains(e) {
                bad.push(format!("step {c}: edge {e} removed twice or unknown"));
            } else if colour_of_edge(e) != Some(c) {
                bad.push(format!("step {c}: removed edge {e} is not of colour {c}"));
            }
        }
        let step_set: EdgeSet = step.removed.iter().copied().filter(|&e| e < g.m()).collect();
        let view = g.without_edges(&removed);
        let local_adjacent = |a: Vertex, b: Vertex| cur.adjacent(a, b);
        for (i, &x) in step.newly_marked.iter().enumerate() {
            for &y in &step.newly_marked[i + 1..] {
                if local_adjacent(x, y) {
                    bad.push(format!("step {c}: newly marked {x} and {y} are adjacent"));
                }
            }
            for y in 0..n {
                if marked[y] && local_adjacent(x, y) {
                    bad.push(format!("step {c}: newly marked {x} is adjacent to earlier marked {y}"));
                }
            }
        }
        let spanned = g.degrees_in(&step_set);
        for x in 0..n {
            if view.graph.degree(x) == step.remaining && spanned[x] == 0 {
                bad.push(format!(
                    "step {c}: vertex {x} of degree {} is not spanned",
                    step.remaining
                ));
            }
        }
        removed.extend(step_set.iter());
        for &x in &step.newly_marked {
            marked[x] = true;
        }
        let next = g.without_edges(&removed).graph;
        for x in 0..n {
            if !marked[x] && next.degree(x) > regions.available(x, c + 1) {
                bad.push(format!(
                    "step {c}: unmarked {x} has degree {} above |L'| + |M'| = {}",
                    next.degree(x),
                    regions.available(x, c + 1)
                ));
            }
        }
    }
    if removed.len() != g.m() {
        bad.push(format!("steps remove {} of {} edges", removed.len(), g.m()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_l(n: usize, palette: usize) -> RegionPartition {
        RegionPartition::new(palette, vec![vec![Side::L; palette]; n]).unwrap()
    }

    #[test]
    fn edgeless_graph_gives_empty_maps() {
        let g = Multigraph::empty(4);
        let dec = critical_colouring(&g, &all_l(4, 3)).unwrap();
        assert!(dec.alpha.is_empty() && dec.beta_paths.is_empty() && dec.colour.is_empty());
    }

    #[test]
    fn triangle_in_l_territory() {
        let g = Multigraph::complete(3);
        let regions = all_l(3, 2);
        let dec = critical_colouring(&g, &regions).unwrap();
        assert!(dec.alpha.is_empty() && dec.beta_paths.is_empty());
        assert_eq!(dec.colour.values().collect::<BTreeSet<_>>().len(), 1);
        let report = validate_decorated(&g, &regions, &dec);
        assert!(report.valid, "{:?}", report.failures);
    }

    #[test]
    fn m_vertex_takes_an_alpha_edge() {
        let g = Multigraph::complete(3);
        let mut sides = vec![vec![Side::L, Side::L]; 3];
        sides[1][0] = Side::M;
        let regions = RegionPartition::new(2, sides).unwrap();
        let dec = critical_colouring(&g, &regions).unwrap();
        assert_eq!(dec.alpha.len(), 1);
        assert_eq!(dec.alpha.values().next(), Some(&(1, 0)));
        assert!(validate_decorated(&g, &regions, &dec).valid);
    }

    #[test]
    fn premise_is_enforced() {
        let g = Multigraph::complete(3);
        let regions = RegionPartition::new(2, vec![vec![Side::L, Side::R]; 3]).unwrap();
        assert!(matches!(
            critical_colouring(&g, &regions),
            Err(Error::RegionPremise { vertex: 0, .. })
        ));
    }

    #[test]
    fn validator_rejects_non_injective_alpha() {
        let g = Multigraph::build(3, &[(0, 1), (0, 2)]).unwrap();
        let regions = RegionPartition::new(2, vec![vec![Side::M, Side::M]; 3]).unwrap();
        let mut dec = DecoratedColouring::default();
        dec.alpha.insert(0, (0, 0));
        dec.alpha.insert(1, (0, 0));
        let report = validate_decorated(&g, &regions, &dec);
        assert!(!report.valid);
        assert!(report.failures.iter().any(|f| f.contains("α not injective")));
    }

    #[test]
    fn validator_rejects_cycle_touching_r() {
        let g = Multigraph::complete(3);
        let mut sides = vec![vec![Side::L, Side::L]; 3];
        sides[2][0] = Side::R;
        let regions = RegionPartition::new(2, sides).unwrap();
        let dec = DecoratedColouring {
            colour: (0..3).map(|e| (e, 0)).collect(),
            ..Default::default()
        };
        let report = validate_decorated(&g, &regions, &dec);
        assert!(report.failures.iter().any(|f| f.contains("leaves L")));
    }

    #[test]
    fn region_sets_must_be_disjoint() {
        assert!(RegionPartition::from_sets(2, &[vec![0]], &[vec![0]]).is_err());
        let r = RegionPartition::from_sets(3, &[vec![0]], &[vec![2]]).unwrap();
        assert_eq!(r.side(0, 1), Side::R);
        assert_eq!(r.available(0, 0), 2);
        assert_eq!(r.available(0, 1), 1);
    }
}
