//! Exhaustive reference computations for small graphs.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::SizeGuard { what, actual, limit });
    }
    Ok(())
}

/// Exact chromatic number, `n ≤ 12`.
pub fn brute_chi(g: &Multigraph) -> Result<usize> {
    guard("n", g.n(), 12)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = g.adjacency_matrix();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for k in 1..=n {
        let mut colour = vec![usize::MAX; n];
        if colourable(&adj, &order, 0, k, 0, &mut colour) {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

fn colourable(adj: &[Vec<bool>], order: &[Vertex], i: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 0..(used + 1).min(k) {
        if (0..adj.len()).any(|u| adj[v][u] && colour[u] == c) {
            continue;
        }
        colour[v] = c;
        if colourable(adj, order, i + 1, k, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

/// Exact independence number, `n ≤ 20`.
pub fn brute_alpha(g: &Multigraph) -> Result<usize> {
    guard("n", g.n(), 20)?;
    let n = g.n();
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    fn best(candidates: u32, masks: &[u32]) -> usize {
        if candidates == 0 {
            return 0;
        }
        let v = candidates.trailing_zeros() as usize;
        let without = best(candidates & !(1 << v), masks);
        if candidates.count_ones() as usize <= without {
            return without;
        }
        let with = 1 + best(candidates & !(1 << v) & !masks[v], masks);
        with.max(without)
    }
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    Ok(best(all, &masks))
}

/// Whether `g` contains a weak `K_t` immersion, `n ≤ 8` and `t ≤ n`.
pub fn brute_immersion_exists(g: &Multigraph, t: usize) -> Result<bool> {
    guard("n", g.n(), 8)?;
    guard("t", t, g.n())?;
    if t <= 1 {
        return Ok(true);
    }
    if g.m() < t * (t - 1) / 2 {
        return Ok(false);
    }
    let candidates: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) >= t - 1).collect();
    let mut chosen = Vec::new();
    Ok(corner_sets(g, &candidates, 0, t, &mut chosen))
}

fn corner_sets(g: &Multigraph, candidates: &[Vertex], from: usize, t: usize, chosen: &mut Vec<Vertex>) -> bool {
    if chosen.len() == t {
        let mut pairs = Vec::new();
        for (i, &a) in chosen.iter().enumerate() {
            for &b in &chosen[i + 1..] {
                pairs.push((a, b));
            }
        }
        let mut used = vec![false; g.m()];
        return route(g, &pairs, 0, &mut used);
    }
    for i in from..candidates.len() {
        if candidates.len() - i < t - chosen.len() {
            break;
        }
        chosen.push(candidates[i]);
        if corner_sets(g, candidates, i + 1, t, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn route(g: &Multigraph, pairs: &[(Vertex, Vertex)], i: usize, used: &mut [bool]) -> bool {
    if i == pairs.len() {
        return true;
    }
    let (a, b) = pairs[i];
    let mut paths = Vec::new();
    let mut on_path = vec![false; g.n()];
    on_path[a] = true;
    simple_paths(g, a, b, used, &mut on_path, &mut Vec::new(), &mut paths);
    paths.sort_by_key(Vec::len);
    for path in paths {
        for &e in &path {
            used[e] = true;
        }
        if route(g, pairs, i + 1, used) {
            return true;
        }
        for &e in &path {
            used[e] = false;
        }
    }
    false
}

fn simple_paths(
    g: &Multigraph,
    at: Vertex,
    target: Vertex,
    used: &[bool],
    on_path: &mut [bool],
    current: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
) {
    if at == target {
        out.push(current.clone());
        return;
    }
    for &e in g.incident(at) {
        let next = g.other(e, at);
        // among parallel edges only the lowest unused one is tried
        if used[e] || on_path[next] || g.edges_between(at, next).iter().any(|&f| f < e && !used[f]) {
            continue;
        }
        on_path[next] = true;
        current.push(e);
        simple_paths(g, next, target, used, on_path, current, out);
        current.pop();
        on_path[next] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::build(n, &pairs).unwrap()
    }

    fn petersen() -> Multigraph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph::build(10, &pairs).unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(brute_chi(&cycle(5)).unwrap(), 3);
        assert_eq!(brute_chi(&Multigraph::complete(4)).unwrap(), 4);
        assert_eq!(brute_chi(&petersen()).unwrap(), 3);
        assert_eq!(brute_chi(&Multigraph::empty(3)).unwrap(), 1);
        assert!(matches!(
            brute_chi(&Multigraph::empty(13)),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(brute_alpha(&cycle(5)).unwrap(), 2);
        assert_eq!(brute_alpha(&Multigraph::complete(6)).unwrap(), 1);
        assert_eq!(brute_alpha(&petersen()).unwrap(), 4);
        assert_eq!(brute_alpha(&Multigraph::empty(0)).unwrap(), 0);
        assert_eq!(brute_alpha(&Multigraph::empty(20)).unwrap(), 20);
    }

    #[test]
    fn immersion_existence() {
        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(brute_immersion_exists(&Multigraph::complete(4), 4).unwrap());
        assert!(brute_immersion_exists(&cycle(5), 3).unwrap());
        assert!(!brute_immersion_exists(&p3, 3).unwrap());
        assert!(!brute_immersion_exists(&cycle(5), 4).unwrap());
        assert!(matches!(
            brute_immersion_exists(&Multigraph::complete(9), 3),
            Err(Error::SizeGuard { .. })
        ));
    }
}
