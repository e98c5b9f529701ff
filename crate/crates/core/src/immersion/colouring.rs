//! Optimal colourings of graphs with `α ≤ 2` and their singleton/pair split.

use std::collections::BTreeMap;

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};

/// A proper colouring whose classes have size one or two, together with the
/// split into singletons, attached pairs (`𝔛`) and free pairs (`𝔜`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairColouring {
    pub classes: Vec<Vec<Vertex>>,
    pub split: Split,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    /// Class indices of size one.
    pub singletons: Vec<usize>,
    /// Class indices of size two.
    pub pairs: Vec<usize>,
    /// Pairs with some singleton attached by exactly one edge.
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `𝔛_v`: attached pairs grouped under their lowest-index attaching singleton.
    pub x_of: BTreeMap<Vertex, Vec<usize>>,
    /// `(p, c)` for every attached pair; `p` is the vertex the attaching singleton misses.
    pub labels: BTreeMap<usize, (Vertex, Vertex)>,
}

impl PairColouring {
    pub fn new(g: &Multigraph, classes: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut classes: Vec<Vec<Vertex>> = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort();
        let mut seen = vec![false; g.n()];
        for class in &classes {
            if class.is_empty() || class.len() > 2 {
                return Err(Error::InvalidColouring(format!(
                    "class {class:?} has size {}",
                    class.len()
                )));
            }
            for &v in class {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidColouring(format!("vertex {v} in two classes")));
                }
            }
            if class.len() == 2 && g.adjacent(class[0], class[1]) {
                return Err(Error::InvalidColouring(format!("class {class:?} is not independent")));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidColouring(format!("vertex {v} is uncoloured")));
        }
        let split = compute_split(g, &classes);
        Ok(PairColouring { classes, split })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                if v < n {
                    out[v] = i;
                }
            }
        }
        out
    }

    pub fn singleton_vertices(&self) -> Vec<Vertex> {
        self.split.singletons.iter().map(|&i| self.classes[i][0]).collect()
    }

    pub fn label(&self, class: usize) -> Option<(Vertex, Vertex)> {
        self.split.labels.get(&class).copied()
    }
}

/// Number of neighbours of `v` in `class`, i.e. `|E(v, A)|` in a simple graph.
pub(crate) fn links(g: &Multigraph, v: Vertex, class: &[Vertex]) -> usize {
    class.iter().filter(|&&a| g.adjacent(v, a)).count()
}

fn compute_split(g: &Multigraph, classes: &[Vec<Vertex>]) -> Split {
    let mut split = Split::default();
    for (i, class) in classes.iter().enumerate() {
        if class.len() == 1 {
            split.singletons.push(i);
            split.x_of.insert(class[0], Vec::new());
        } else {
            split.pairs.push(i);
        }
    }
    for &a in &split.pairs {
        let class = &classes[a];
        let attached = split
            .singletons
            .iter()
            .map(|&s| classes[s][0])
            .filter(|&v| links(g, v, class) == 1)
            .min();
        match attached {
            Some(v) => {
                let (p, c) = if g.adjacent(v, class[0]) {
                    (class[1], class[0])
                } else {
                    (class[0], class[1])
                };
                split.x.push(a);
                split.labels.insert(a, (p, c));
                split.x_of.get_mut(&v).expect("singleton registered").push(a);
            }
            None => split.y.push(a),
        }
    }
    split
}

/// `χ(G)` as `n − ν(complement)`, with the matching edges as pair classes.
pub fn chi_alpha2(g: &Multigraph) -> Result<(usize, PairColouring)> {
    g.require_simple()?;
    if let Some(triple) = g.independent_triple() {
        return Err(Error::AlphaTooLarge(triple));
    }
    let n = g.n();
    let mut comp = UnGraph::<(), ()>::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|_| comp.add_node(())).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                comp.add_edge(nodes[u], nodes[v], ());
            }
        }
    }
    let matching = maximum_matching(&comp);
    let mut classes = Vec::with_capacity(n - matching.len());
    let mut used = vec![false; n];
    for (a, b) in matching.edges() {
        let (a, b) = (a.index(), b.index());
        used[a] = true;
        used[b] = true;
        classes.push(vec![a, b]);
    }
    classes.extend((0..n).filter(|&v| !used[v]).map(|v| vec![v]));
    let col = PairColouring::new(g, classes)?;
    Ok((col.len(), col))
}

/// The first attached pair `X ∈ 𝔛_v` (by `v`, then class order) with
/// `|{Y ∈ 𝔜 : |E(c_X, Y)| = 1}| > |{A ∈ 𝔛_v : |E(c_X, A)| = 2}|`.
pub fn maximality_violation(g: &Multigraph, col: &PairColouring) -> Option<(Vertex, usize)> {
    let split = &col.split;
    for (&v, xs) in &split.x_of {
        for &x in xs {
            let (_, c) = split.labels[&x];
            let lhs = split.y.iter().filter(|&&y| links(g, c, &col.classes[y]) == 1).count();
            let rhs = xs.iter().filter(|&&a| links(g, c, &col.classes[a]) == 2).count();
            if lhs > rhs {
                return Some((v, x));
            }
        }
    }
    None
}

/// Repeatedly swaps `c_X` for `v` in `X` until no attached pair violates the
/// maximality inequality. Returns the final colouring and the swap count.
pub fn refine_split_counted(g: &Multigraph, col: &PairColouring) -> Result<(PairColouring, usize)> {
    let mut col = col.clone();
    let mut swaps = 0;
    while let Some((v, x)) = maximality_violation(g, &col) {
        let (p, c) = col.split.labels[&x];
        let mut classes: Vec<Vec<Vertex>> = col
            .classes
            .iter()
            .filter(|class| **class != [v] && !class.contains(&p))
            .cloned()
            .collect();
        classes.push(vec![v, p]);
        classes.push(vec![c]);
        let next = PairColouring::new(g, classes)?;
        if next.split.x.len() <= col.split.x.len() {
            return Err(Error::contract(
                format!(
                    "swap at singleton {v}, pair {:?} did not enlarge the attached family ({} -> {})",
                    col.classes[x],
                    col.split.x.len(),
                    next.split.x.len()
                ),
                crate::io::emit_edge_list(g),
            ));
        }
        col = next;
        swaps += 1;
    }
    Ok((col, swaps))
}

pub fn refine_split(g: &Multigraph, col: &PairColouring) -> Result<PairColouring> {
    refine_split_counted(g, col).map(|(c, _)| c)
}

/// Structural facts every optimal colouring of an `α ≤ 2` graph satisfies.
/// Returns one message per violation.
pub fn audit_colouring(g: &Multigraph, col: &PairColouring) -> Vec<String> {
    let mut bad = Vec::new();
    let singles = col.singleton_vertices();
    let pairs: Vec<&Vec<Vertex>> = col.split.pairs.iter().map(|&i| &col.classes[i]).collect();

    for (i, &u) in singles.iter().enumerate() {
        for &w in &singles[i + 1..] {
            if !g.adjacent(u, w) {
                bad.push(format!("singletons {u} and {w} are not adjacent"));
            }
        }
    }

    // singletons attached to a pair by one edge all hit the same vertex of it
    for class in &pairs {
        let hits: Vec<Vertex> = singles
            .iter()
            .filter(|&&u| links(g, u, class) == 1)
            .map(|&u| if g.adjacent(u, class[0]) { class[0] } else { class[1] })
            .collect();
        if hits.windows(2).any(|w| w[0] != w[1]) {
            bad.push(format!("singletons attached to {class:?} share no neighbour there"));
        }
    }

    // at a fixed singleton, the missed vertices of its attached pairs form a clique
    for &v in &singles {
        let missed: Vec<Vertex> = pairs
            .iter()
            .filter(|class| links(g, v, class) == 1)
            .map(|class| if g.adjacent(v, class[0]) { class[1] } else { class[0] })
            .collect();
        for (i, &a) in missed.iter().enumerate() {
            for &b in &missed[i + 1..] {
                if !g.adjacent(a, b) {
                    bad.push(format!(
                        "at singleton {v}: missed vertices {a} and {b} are not adjacent"
                    ));
                }
            }
        }
    }

    for &u in &singles {
        for &v in &singles {
            if u == v {
                continue;
            }
            for (i, a) in pairs.iter().enumerate() {
                for (j, b) in pairs.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    for k in 0..2 {
                        if g.adjacent(u, a[k]) {
                            continue;
                        }
                        for l in 0..2 {
                            if g.adjacent(v, b[l]) {
                                continue;
                            }
                            let quad = [u, v, a[1 - k], b[1 - l]];
                            let complete = (0..4).all(|s| (s + 1..4).all(|t| g.adjacent(quad[s], quad[t])));
                            if !complete {
                                bad.push(format!("{quad:?} is not a K4"));
                            }
                        }
                    }
                }
            }
        }
    }

    if let Some((v, x)) = maximality_violation(g, col) {
        bad.push(format!(
            "maximality inequality fails at singleton {v}, pair {:?}",
            col.classes[x]
        ));
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::build(n, &pairs).unwrap()
    }

    fn cocktail(k: usize) -> Multigraph {
        let mut pairs = Vec::new();
        for u in 0..2 * k {
            for v in u + 1..2 * k {
                if v != u + k {
                    pairs.push((u, v));
                }
            }
        }
        Multigraph::build(2 * k, &pairs).unwrap()
    }

    #[test]
    fn chi_examples() {
        let (chi, col) = chi_alpha2(&cycle(5)).unwrap();
        assert_eq!(chi, 3);
        assert_eq!(col.split.pairs.len(), 2);
        assert_eq!(chi_alpha2(&Multigraph::complete(4)).unwrap().0, 4);
        let (chi, col) = chi_alpha2(&cocktail(3)).unwrap();
        assert_eq!(chi, 3);
        assert!(col.split.singletons.is_empty());
        assert!(matches!(
            chi_alpha2(&Multigraph::empty(3)),
            Err(Error::AlphaTooLarge(_))
        ));
    }

    #[test]
    fn c5_split_and_refinement() {
        let g = cycle(5);
        let (_, col) = chi_alpha2(&g).unwrap();
        let (refined, swaps) = refine_split_counted(&g, &col).unwrap();
        assert!(swaps <= 2);
        assert!(maximality_violation(&g, &refined).is_none());
        assert!(audit_colouring(&g, &refined).is_empty());
        let again = refine_split(&g, &refined).unwrap();
        assert_eq!(again, refined);
    }

    #[test]
    fn rejects_bad_classes() {
        let g = Multigraph::complete(3);
        assert!(PairColouring::new(&g, vec![vec![0, 1], vec![2]]).is_err());
        assert!(PairColouring::new(&g, vec![vec![0], vec![1]]).is_err());
        assert!(PairColouring::new(&g, vec![vec![0], vec![1], vec![2], vec![2]]).is_err());
    }

    #[test]
    fn labels_follow_the_missing_edge() {
        // u = 0, pair {1, 2}, edges 0-2 and 1-2 is impossible (pair independent); use 0-2 only
        let g = Multigraph::build(3, &[(0, 2)]).unwrap();
        let col = PairColouring::new(&g, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(col.split.x, vec![1]);
        assert_eq!(col.label(1), Some((1, 2)));
    }
}
