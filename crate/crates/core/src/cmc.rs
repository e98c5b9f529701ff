//! Cycle-matching colourings: edge colourings whose classes are
//! vertex-disjoint unions of single edges and odd cycles, with at most
//! `Δ(G)` colours.
//!
//! Each colour class is a spanning ocm set: an edge set whose components
//! are single edges or odd cycles and which touches every vertex of maximum
//! degree. Removing it lowers the maximum degree, so `Δ(G)` rounds suffice.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::max_f_bounded_subgraph;
use crate::graph::{ComponentShape, EdgeId, EdgeSet, Multigraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleMatchingColouring {
    pub colour_of: Vec<usize>,
    pub palette: usize,
    /// Maximum degree of the remaining graph when each colour was extracted.
    pub step_max_degree: Vec<usize>,
}

impl CycleMatchingColouring {
    pub fn class(&self, colour: usize) -> EdgeSet {
        self.colour_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == colour)
            .map(|(e, _)| e)
            .collect()
    }

    /// `{edge-id: colour}` with string keys, as emitted by the CLI.
    pub fn as_map(&self) -> BTreeMap<String, usize> {
        self.colour_of
            .iter()
            .enumerate()
            .map(|(e, &c)| (e.to_string(), c))
            .collect()
    }
}

/// An edge set whose components are single edges or odd cycles and which
/// spans every vertex of maximum degree.
pub fn spanning_ocm_set(g: &Multigraph) -> Result<EdgeSet> {
    if g.max_degree() == 0 {
        return Err(Error::Edgeless);
    }
    let doubled = g.doubled();
    let (h, _) = max_f_bounded_subgraph(&doubled.graph)?;
    let mut set = EdgeSet::new();
    for c in &h.two_cycles {
        set.insert(doubled.origin[c.edges[0]]);
    }
    for c in &h.odd_cycles {
        set.extend(c.edges.iter().map(|&e| doubled.origin[e]));
    }
    Ok(set)
}

/// Colours `g` with at most `Δ(g)` colours so that every class is an ocm set.
/// Valid for every `r >= 2` because 2-bounded classes are `r`-bounded.
pub fn cycle_matching_colouring(g: &Multigraph, r: usize) -> Result<CycleMatchingColouring> {
    if r < 2 {
        return Err(Error::BoundTooSmall(r));
    }
    let mut colour_of = vec![usize::MAX; g.m()];
    let mut removed = EdgeSet::new();
    let mut step_max_degree = Vec::new();
    loop {
        let view = g.without_edges(&removed);
        let delta = view.graph.max_degree();
        if delta == 0 {
            break;
        }
        let colour = step_max_degree.len();
        step_max_degree.push(delta);
        for e in spanning_ocm_set(&view.graph)?.iter() {
            let host = view.edge_to_host[e];
            colour_of[host] = colour;
            removed.insert(host);
        }
    }
    Ok(CycleMatchingColouring {
        colour_of,
        palette: step_max_degree.len(),
        step_max_degree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub colour: usize,
    pub edges: usize,
    pub single_edges: usize,
    pub odd_cycles: usize,
    pub even_cycles: usize,
    pub other_regular: usize,
    pub irregular: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouringReport {
    /// Every class is a disjoint union of regular components of degree <= r.
    pub valid: bool,
    /// Every class consists of single edges and odd cycles only.
    pub ocm_strict: bool,
    pub palette: usize,
    pub max_degree: usize,
    pub classes: Vec<ClassReport>,
    pub failures: Vec<String>,
}

pub fn validate_cm_colouring(g: &Multigraph, colouring: &CycleMatchingColouring, r: usize) -> ColouringReport {
    let mut failures = Vec::new();
    if colouring.colour_of.len() != g.m() {
        failures.push(format!(
            "colouring covers {} edges, graph has {}",
            colouring.colour_of.len(),
            g.m()
        ));
    }
    for (e, &c) in colouring.colour_of.iter().enumerate() {
        if c >= colouring.palette {
            failures.push(format!("edge {e} has colour {c} outside the palette"));
        }
    }
    let mut classes = Vec::new();
    let mut ocm_strict = true;
    for colour in 0..colouring.palette {
        let class = colouring.class(colour);
        let mut report = ClassReport {
            colour,
            edges: class.len(),
            single_edges: 0,
            odd_cycles: 0,
            even_cycles: 0,
            other_regular: 0,
            irregular: 0,
        };
        for comp in g.components_of(&class) {
            match comp.shape {
                ComponentShape::Trivial => continue,
                ComponentShape::SingleEdge => report.single_edges += 1,
                ComponentShape::OddCycle => report.odd_cycles += 1,
                ComponentShape::EvenCycle => report.even_cycles += 1,
                ComponentShape::Regular(_) => report.other_regular += 1,
                ComponentShape::Irregular => report.irregular += 1,
            }
            if !comp.shape.is_regular() {
                failures.push(format!("colour {colour}: component {:?} is not regular", comp.vertices));
            } else if comp.max_degree > r {
                failures.push(format!(
                    "colour {colour}: component {:?} is {}-regular, above r = {r}",
                    comp.vertices, comp.max_degree
                ));
            }
        }
        if report.even_cycles + report.other_regular + report.irregular > 0 {
            ocm_strict = false;
        }
        classes.push(report);
    }
    let valid = failures.is_empty();
    ColouringReport {
        valid,
        ocm_strict: valid && ocm_strict,
        palette: colouring.palette,
        max_degree: g.max_degree(),
        classes,
        failures,
    }
}

/// Exact `χ'_r` by backtracking over edge colourings (colour symmetry broken
/// by first use, per-vertex class degree capped at `r`).
pub fn brute_force_chi_prime_r(g: &Multigraph, r: usize) -> Result<usize> {
    const LIMIT: usize = 16;
    if g.m() > LIMIT {
        return Err(Error::SizeGuard {
            what: "m",
            actual: g.m(),
            limit: LIMIT,
        });
    }
    if r == 0 {
        return Err(Error::BoundTooSmall(r));
    }
    if g.m() == 0 {
        return Ok(0);
    }
    let lower = g.max_degree().div_ceil(r).max(1);
    for k in lower..=g.m() {
        let mut search = ChiSearch {
            g,
            r,
            k,
            colour: vec![usize::MAX; g.m()],
            load: vec![vec![0; g.n()]; k],
        };
        if search.run(0, 0) {
            return Ok(k);
        }
    }
    unreachable!("one colour per edge is always valid")
}

struct ChiSearch<'a> {
    g: &'a Multigraph,
    r: usize,
    k: usize,
    colour: Vec<usize>,
    load: Vec<Vec<usize>>,
}

impl ChiSearch<'_> {
    fn run(&mut self, e: EdgeId, used: usize) -> bool {
        if e == self.g.m() {
            return self.classes_regular(used);
        }
        let (u, v) = self.g.endpoints(e);
        for c in 0..(used + 1).min(self.k) {
            if self.load[c][u] == self.r || self.load[c][v] == self.r {
                continue;
            }
            self.colour[e] = c;
            self.load[c][u] += 1;
            self.load[c][v] += 1;
            if self.run(e + 1, used.max(c + 1)) {
                return true;
            }
            self.load[c][u] -= 1;
            self.load[c][v] -= 1;
        }
        self.colour[e] = usize::MAX;
        false
    }

    fn classes_regular(&self, used: usize) -> bool {
        (0..used).all(|c| {
            let class: EdgeSet = (0..self.g.m()).filter(|&e| self.colour[e] == c).collect();
            self.g.components_of(&class).iter().all(|comp| comp.shape.is_regular())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(s: usize) -> Multigraph {
        let pairs: Vec<_> = (1..=s).map(|i| (0, i)).collect();
        Multigraph::build(s + 1, &pairs).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::build(n, &pairs).unwrap()
    }

    #[test]
    fn ocm_sets() {
        let set = spanning_ocm_set(&star(3)).unwrap();
        assert_eq!(set.len(), 1);
        let k3 = Multigraph::complete(3);
        assert_eq!(spanning_ocm_set(&k3).unwrap().len(), 3);
        let c4 = cycle(4);
        let set = spanning_ocm_set(&c4).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.spans(&c4, 0..4));
        assert_eq!(spanning_ocm_set(&Multigraph::empty(3)), Err(Error::Edgeless));
    }

    #[test]
    fn colour_examples() {
        let k3 = Multigraph::complete(3);
        let col = cycle_matching_colouring(&k3, 2).unwrap();
        assert_eq!(col.palette, 1);
        for s in 1..=5 {
            assert_eq!(cycle_matching_colouring(&star(s), 3).unwrap().palette, s);
        }
        let k5 = Multigraph::complete(5);
        let col = cycle_matching_colouring(&k5, 2).unwrap();
        assert!(col.palette <= 4);
        assert!(validate_cm_colouring(&k5, &col, 2).ocm_strict);
        assert_eq!(cycle_matching_colouring(&k5, 1), Err(Error::BoundTooSmall(1)));
    }

    #[test]
    fn validator_examples() {
        let all_zero = |g: &Multigraph| CycleMatchingColouring {
            colour_of: vec![0; g.m()],
            palette: 1,
            step_max_degree: vec![],
        };
        let k3 = Multigraph::complete(3);
        assert!(validate_cm_colouring(&k3, &all_zero(&k3), 2).ocm_strict);

        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let report = validate_cm_colouring(&p3, &all_zero(&p3), 2);
        assert!(!report.valid);
        assert!(report.failures[0].contains("not regular"));

        let c4 = cycle(4);
        let report = validate_cm_colouring(&c4, &all_zero(&c4), 2);
        assert!(report.valid);
        assert!(!report.ocm_strict);
        assert_eq!(report.classes[0].even_cycles, 1);
    }

    #[test]
    fn brute_force_values() {
        assert_eq!(brute_force_chi_prime_r(&star(4), 2).unwrap(), 4);
        assert_eq!(brute_force_chi_prime_r(&Multigraph::complete(3), 2).unwrap(), 1);
        assert_eq!(brute_force_chi_prime_r(&Multigraph::complete(5), 2).unwrap(), 2);
        assert_eq!(brute_force_chi_prime_r(&Multigraph::empty(2), 2).unwrap(), 0);
        // K4 has chromatic index 3 and splits into a 4-cycle plus a matching
        assert_eq!(brute_force_chi_prime_r(&Multigraph::complete(4), 1).unwrap(), 3);
        assert_eq!(brute_force_chi_prime_r(&Multigraph::complete(4), 2).unwrap(), 2);
        assert!(matches!(
            brute_force_chi_prime_r(&Multigraph::complete(7), 2),
            Err(Error::SizeGuard { .. })
        ));
    }
}
