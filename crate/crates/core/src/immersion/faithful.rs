use super::{Immersion, PairColouring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};

/// A faithful `K_χ` immersion for a colouring in which every pair class has
/// a singleton attached to it by exactly one edge.
///
/// Corners are the singletons and the vertex `c_A` of each pair. Corner
/// pairs are joined by their edge when adjacent and otherwise by
/// `c_A p_B p_A c_B`.
pub fn faithful_immersion(g: &Multigraph, col: &PairColouring) -> Result<Immersion> {
    g.require_simple()?;
    let check = PairColouring::new(g, col.classes.clone())?;
    if let Some(&y) = check.split.y.first() {
        let class = &check.classes[y];
        return Err(Error::UncoveredClass {
            class: [class[0], class[1]],
        });
    }
    let col = check;
    let not_optimal = |what: String| Error::InvalidColouring(format!("colouring is not optimal: {what}"));

    let singles = col.singleton_vertices();
    for &a in &col.split.pairs {
        let (p, _) = col.split.labels[&a];
        if singles
            .iter()
            .any(|&v| g.adjacent(v, p) && super::colouring::links(g, v, &col.classes[a]) == 1)
        {
            return Err(not_optimal(format!("attachments to {:?} disagree", col.classes[a])));
        }
    }

    let mut imm = Immersion {
        corners: singles.clone(),
        paths: Vec::new(),
        faithful_wrt: None,
    };
    let mut pair_of = std::collections::BTreeMap::new();
    for &a in &col.split.pairs {
        let (p, c) = col.split.labels[&a];
        imm.corners.push(c);
        pair_of.insert(c, p);
    }
    let edge = |u: Vertex, v: Vertex| -> Result<EdgeId> {
        g.edge(u, v).ok_or_else(|| not_optimal(format!("missing edge {u}-{v}")))
    };
    let corners = imm.corners.clone();
    for (i, &u) in corners.iter().enumerate() {
        for &v in &corners[i + 1..] {
            if let Some(e) = g.edge(u, v) {
                imm.push(u, v, vec![e]);
                continue;
            }
            match (pair_of.get(&u), pair_of.get(&v)) {
                (Some(&pu), Some(&pv)) => {
                    imm.push(u, v, vec![edge(u, pv)?, edge(pv, pu)?, edge(pu, v)?]);
                }
                _ => return Err(not_optimal(format!("corners {u} and {v} are not adjacent"))),
            }
        }
    }
    imm.faithful_wrt = Some(col);
    Ok(imm)
}

#[cfg(test)]
mod tests {
    use super::super::verify_immersion;
    use super::*;

    #[test]
    fn single_pair_instance() {
        let joined = Multigraph::build(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(PairColouring::new(&joined, vec![vec![0], vec![1, 2]]).is_err());
        let g = Multigraph::build(3, &[(0, 2)]).unwrap();
        let col = PairColouring::new(&g, vec![vec![0], vec![1, 2]]).unwrap();
        let imm = faithful_immersion(&g, &col).unwrap();
        assert_eq!(imm.corners, vec![0, 2]);
        assert_eq!(imm.paths.len(), 1);
        assert_eq!(imm.paths[0].edges.len(), 1);
        assert!(verify_immersion(&g, &imm, 2).accepted);
    }

    #[test]
    fn uncovered_class_is_named() {
        // pair {1,2} fully joined to singleton 0
        let g = Multigraph::build(3, &[(0, 1), (0, 2)]).unwrap();
        let col = PairColouring::new(&g, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(
            faithful_immersion(&g, &col),
            Err(Error::UncoveredClass { class: [1, 2] })
        );
    }
}
