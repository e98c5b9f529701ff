//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decorated::{RegionPartition, Side};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};
use crate::immersion::{chi_alpha2, refine_split, PairColouring};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The complement of a triangle-free graph grown greedily: the first
/// `⌈density · C(n,2)⌉` pairs of a seeded shuffle are tried in order and
/// kept unless they close a triangle.
pub fn gen_alpha2(n: usize, density: f64, seed: u64) -> Multigraph {
    let mut r = rng(seed);
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut r);
    let attempts = ((density.clamp(0.0, 1.0) * pairs.len() as f64).ceil() as usize).min(pairs.len());
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in &pairs[..attempts] {
        if (0..n).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    let g = Multigraph::build(n, &edges).expect("complement pairs are valid");
    assert!(g.alpha_at_most_2(), "complement of a triangle-free graph has α ≤ 2");
    g
}

/// Each pair is joined with probability `density` by `1..=max_mult` parallel edges.
pub fn gen_random_multigraph(n: usize, density: f64, max_mult: usize, seed: u64) -> Multigraph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(density.clamp(0.0, 1.0)) {
                let k = r.gen_range(1..=max_mult.max(1));
                edges.extend(std::iter::repeat_n((u, v), k));
            }
        }
    }
    Multigraph::build(n, &edges).expect("pairs are valid")
}

pub fn cycle(n: usize) -> Multigraph {
    if n < 3 {
        return Multigraph::complete(n);
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::build(n, &pairs).expect("cycle")
}

pub fn star(s: usize) -> Multigraph {
    let pairs: Vec<_> = (1..=s).map(|i| (0, i)).collect();
    Multigraph::build(s + 1, &pairs).expect("star")
}

/// `K_{k×2}`: vertices `i` and `i + k` are the non-adjacent pairs.
pub fn cocktail(k: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..2 * k {
        for v in u + 1..2 * k {
            if v != u + k {
                pairs.push((u, v));
            }
        }
    }
    Multigraph::build(2 * k, &pairs).expect("cocktail party")
}

pub const FAMILIES: &[&str] = &[
    "cycle",
    "complete",
    "star",
    "cocktail",
    "doubled-cycle",
    "doubled-complete",
    "doubled-star",
    "doubled-cocktail",
    "alpha2",
    "faithful",
];

/// A named family member. `param` is the size parameter; `seed` and
/// `density` only matter for the random families.
pub fn gen_family(name: &str, param: usize, density: f64, seed: u64) -> Result<Multigraph> {
    Ok(match name {
        "cycle" => cycle(param),
        "complete" => Multigraph::complete(param),
        "star" => star(param),
        "cocktail" => cocktail(param),
        "alpha2" => gen_alpha2(param, density, seed),
        "faithful" => gen_faithful_instance(param, density, seed)?.0,
        _ => match name.strip_prefix("doubled-") {
            Some(base) if base != "faithful" && base != "alpha2" && !base.starts_with("doubled-") => {
                gen_family(base, param, density, seed)?.doubled().graph
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        },
    })
}

/// A graph with a colouring in which every pair class has a singleton
/// attached by exactly one edge: an `α ≤ 2` graph with its free pairs removed.
pub fn gen_faithful_instance(n: usize, density: f64, seed: u64) -> Result<(Multigraph, PairColouring)> {
    let g = gen_alpha2(n, density, seed);
    let (_, col) = chi_alpha2(&g)?;
    let col = refine_split(&g, &col)?;
    let keep: Vec<Vertex> = col
        .split
        .singletons
        .iter()
        .chain(&col.split.x)
        .flat_map(|&i| col.classes[i].clone())
        .collect();
    let mut sorted = keep.clone();
    sorted.sort_unstable();
    let view = g.induced(&sorted);
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in view.vertex_to_host.iter().enumerate() {
        local[v] = i;
    }
    let classes = col
        .split
        .singletons
        .iter()
        .chain(&col.split.x)
        .map(|&i| col.classes[i].iter().map(|&v| local[v]).collect())
        .collect();
    let sub = PairColouring::new(&view.graph, classes)?;
    if let Some(&y) = sub.split.y.first() {
        let c = &sub.classes[y];
        return Err(Error::UncoveredClass { class: [c[0], c[1]] });
    }
    Ok((view.graph, sub))
}

/// A random simple graph with a region partition meeting `|L_x| + |M_x| ≥ d(x)`.
/// The palette is `Δ` plus up to two spare colours.
pub fn gen_region_instance(n: usize, density: f64, seed: u64) -> (Multigraph, RegionPartition) {
    let g = gen_random_multigraph(n, density, 1, seed);
    let mut r = rng(seed ^ 0x05ee_d0f2_e610);
    let palette = g.max_degree() + r.gen_range(0..=2);
    let mut sides = Vec::with_capacity(n);
    for x in 0..n {
        let mut row: Vec<Side> = (0..palette)
            .map(|_| match r.gen_range(0..3) {
                0 => Side::L,
                1 => Side::M,
                _ => Side::R,
            })
            .collect();
        let mut open: Vec<usize> = (0..palette).filter(|&c| row[c] == Side::R).collect();
        open.shuffle(&mut r);
        while row.iter().filter(|&&s| s != Side::R).count() < g.degree(x) {
            let c = open.pop().expect("palette covers the degree");
            row[c] = if r.gen_bool(0.5) { Side::L } else { Side::M };
        }
        sides.push(row);
    }
    let regions = RegionPartition::new(palette, sides).expect("rows match the palette");
    (g, regions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::emit_edge_list;

    #[test]
    fn alpha2_examples() {
        assert!(gen_alpha2(5, 0.5, 7).alpha_at_most_2());
        assert_eq!(gen_alpha2(1, 0.3, 9), Multigraph::complete(1));
        assert_eq!(gen_alpha2(6, 0.0, 3), Multigraph::complete(6));
    }

    #[test]
    fn same_seed_same_bytes() {
        for seed in 0..5 {
            assert_eq!(
                emit_edge_list(&gen_alpha2(12, 0.6, seed)),
                emit_edge_list(&gen_alpha2(12, 0.6, seed))
            );
            assert_eq!(
                gen_random_multigraph(8, 0.5, 3, seed),
                gen_random_multigraph(8, 0.5, 3, seed)
            );
        }
    }

    #[test]
    fn families() {
        let s = gen_family("star", 4, 0.0, 0).unwrap();
        assert_eq!((s.n(), s.m(), s.max_degree()), (5, 4, 4));
        let c = gen_family("cocktail", 3, 0.0, 0).unwrap();
        assert_eq!((c.n(), c.m()), (6, 12));
        assert!(!c.adjacent(0, 3));
        assert_eq!(gen_family("cycle", 5, 0.0, 0).unwrap(), cycle(5));
        assert_eq!(gen_family("doubled-cycle", 5, 0.0, 0).unwrap().m(), 10);
        assert!(matches!(gen_family("wheel", 5, 0.0, 0), Err(Error::UnknownFamily(_))));
        assert!(gen_family("doubled-doubled-star", 3, 0.0, 0).is_err());
    }

    #[test]
    fn faithful_instances_meet_the_hypothesis() {
        for seed in 0..20 {
            let (g, col) = gen_faithful_instance(14, 0.7, seed).unwrap();
            assert!(col.split.y.is_empty());
            assert_eq!(col.len(), crate::immersion::chi_alpha2(&g).unwrap().0);
        }
    }

    #[test]
    fn region_instances_meet_the_premise() {
        for seed in 0..20 {
            let (g, regions) = gen_region_instance(10, 0.5, seed);
            regions.check_premise(&g).unwrap();
        }
    }
}
