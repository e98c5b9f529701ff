//! Maximum 2-bounded subgraphs of doubled multigraphs and their
//! deficiency certificates.
//!
//! For a multigraph in which every edge has even multiplicity and `f ≡ 2`,
//! a maximum `f`-bounded subgraph `H` can be taken to be a disjoint union of
//! 2-cycles (two parallel copies of one edge) and odd cycles. The matching
//! pair `(S, T)` of maximum deficiency certifies optimality through the
//! Lovász bound `degree_sum(H) = f(V) - def(S, T)`.
//!
//! Both are computed from a maximum matching in the bipartite double cover
//! (each vertex `v` split into `v'` and `v''`, each edge `uv` giving `u'v''`
//! and `v'u''`):
//!
//! * `T` is the set of left vertices reachable by alternating paths from
//!   exposed left vertices and `S = N(T)`. This is the unique ⊆-minimal
//!   pair of maximum deficiency.
//! * `H` pairs `S` into `T` by 2-cycles (covering every maximum-degree
//!   vertex of `T`) and covers the rest perfectly by a permutation of the
//!   double cover, split into 2-cycles and odd cycles.

use serde::Serialize;

use crate::bipartite::{maximum_matching, BipartiteMatching};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyPair {
    pub s: Vec<Vertex>,
    pub t: Vec<Vertex>,
    pub value: i64,
    pub minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoCycle {
    pub u: Vertex,
    pub v: Vertex,
    pub edges: [EdgeId; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCycle {
    /// Vertices in cycle order; `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FactorSubgraph {
    pub two_cycles: Vec<TwoCycle>,
    pub odd_cycles: Vec<OddCycle>,
}

impl FactorSubgraph {
    pub fn degree_sum(&self) -> usize {
        4 * self.two_cycles.len() + 2 * self.odd_cycles.iter().map(|c| c.edges.len()).sum::<usize>()
    }

    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; n];
        for c in &self.two_cycles {
            deg[c.u] += 2;
            deg[c.v] += 2;
        }
        for c in &self.odd_cycles {
            for &x in &c.vertices {
                deg[x] += 2;
            }
        }
        deg
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self
            .two_cycles
            .iter()
            .flat_map(|c| c.edges)
            .chain(self.odd_cycles.iter().flat_map(|c| c.edges.iter().copied()))
            .collect();
        ids.sort_unstable();
        ids
    }
}

/// `f(T) - f(S) + q(S, T) - d_{G-S}(T)` for arbitrary `f`.
pub fn deficiency(g: &Multigraph, f: &[usize], s: &[Vertex], t: &[Vertex]) -> Result<i64> {
    let n = g.n();
    let mut role = vec![0u8; n]; // 0 = rest, 1 = S, 2 = T
    for &x in s {
        if x >= n {
            return Err(Error::VertexOutOfRange(x));
        }
        role[x] = 1;
    }
    for &x in t {
        if x >= n {
            return Err(Error::VertexOutOfRange(x));
        }
        if role[x] == 1 {
            return Err(Error::OverlappingPair(x));
        }
        role[x] = 2;
    }
    let f_of = |xs: &[Vertex]| xs.iter().map(|&x| f[x] as i64).sum::<i64>();

    let mut d_t = 0i64;
    for &x in t {
        d_t += g.incident(x).iter().filter(|&&e| role[g.other(e, x)] != 1).count() as i64;
    }

    // components of G - (S ∪ T)
    let mut seen = vec![false; n];
    let mut q = 0i64;
    for start in 0..n {
        if role[start] != 0 || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut parity = 0usize;
        while let Some(x) = stack.pop() {
            parity += f[x];
            for &e in g.incident(x) {
                let y = g.other(e, x);
                match role[y] {
                    0 if !seen[y] => {
                        seen[y] = true;
                        stack.push(y);
                    }
                    2 => parity += 1,
                    _ => {}
                }
            }
        }
        if parity % 2 == 1 {
            q += 1;
        }
    }
    Ok(f_of(t) - f_of(s) + q - d_t)
}

fn require_even(g: &Multigraph) -> Result<()> {
    for (u, v) in g.support() {
        let multiplicity = g.multiplicity(u, v);
        if multiplicity % 2 == 1 {
            return Err(Error::OddMultiplicity { u, v, multiplicity });
        }
    }
    Ok(())
}

/// Left adjacency of the bipartite double cover restricted to the support.
fn double_cover(g: &Multigraph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbours(v)).collect()
}

/// The ⊆-minimal pair of maximum deficiency for `f ≡ 2`.
pub fn max_deficiency_pair(g: &Multigraph) -> Result<DeficiencyPair> {
    require_even(g)?;
    let adj = double_cover(g);
    let matching = maximum_matching(g.n(), &adj);
    Ok(pair_from_matching(g, &adj, &matching))
}

fn pair_from_matching(g: &Multigraph, adj: &[Vec<usize>], matching: &BipartiteMatching) -> DeficiencyPair {
    let (reach, _) = matching.alternating_reach(adj);
    let t: Vec<Vertex> = (0..g.n()).filter(|&v| reach[v]).collect();
    let mut in_s = vec![false; g.n()];
    for &x in &t {
        for y in g.neighbours(x) {
            in_s[y] = true;
        }
    }
    let s: Vec<Vertex> = (0..g.n()).filter(|&v| in_s[v]).collect();
    let value = 2 * t.len() as i64 - 2 * s.len() as i64;
    DeficiencyPair {
        s,
        t,
        value,
        minimal: true,
    }
}

/// A maximum 2-bounded subgraph together with its ⊆-minimal maximum
/// deficiency pair.
pub fn max_f_bounded_subgraph(g: &Multigraph) -> Result<(FactorSubgraph, DeficiencyPair)> {
    max_f_bounded_subgraph_preferring(g, &[])
}

/// As [`max_f_bounded_subgraph`], but among the vertices of `T` left
/// uncovered, avoids those in `prefer` where possible (earlier entries win).
pub fn max_f_bounded_subgraph_preferring(
    g: &Multigraph,
    prefer: &[Vertex],
) -> Result<(FactorSubgraph, DeficiencyPair)> {
    let pair = max_deficiency_pair(g)?;
    let n = g.n();
    let dump = || crate::io::emit_edge_list(g);

    let mut role = vec![0u8; n];
    for &x in &pair.s {
        role[x] = 1;
    }
    for &x in &pair.t {
        if role[x] == 1 || pair.t.iter().any(|&y| g.adjacent(x, y)) {
            return Err(Error::contract("deficiency side T is not independent of S", dump()));
        }
        role[x] = 2;
    }

    let mut h = FactorSubgraph::default();

    // S–T 2-cycles, covering the maximum-degree vertices of T first.
    let delta = g.max_degree();
    let s_index: Vec<usize> = {
        let mut idx = vec![usize::MAX; n];
        for (i, &x) in pair.s.iter().enumerate() {
            idx[x] = i;
        }
        idx
    };
    let t_index: Vec<usize> = {
        let mut idx = vec![usize::MAX; n];
        for (i, &x) in pair.t.iter().enumerate() {
            idx[x] = i;
        }
        idx
    };
    let heavy: Vec<usize> = (0..pair.t.len())
        .filter(|&i| delta > 0 && g.degree(pair.t[i]) == delta)
        .collect();
    let heavy_adj: Vec<Vec<usize>> = heavy
        .iter()
        .map(|&i| g.neighbours(pair.t[i]).into_iter().map(|y| s_index[y]).collect())
        .collect();
    let heavy_matching = maximum_matching(pair.s.len(), &heavy_adj);
    if heavy_matching.size() < heavy.len() {
        return Err(Error::contract(
            "Hall condition fails for maximum-degree vertices of T",
            dump(),
        ));
    }
    let t_adj = |i: usize| -> Vec<usize> { g.neighbours(pair.t[i]).into_iter().map(|y| s_index[y]).collect() };
    let mut covered = heavy.clone();
    let mut cover: BipartiteMatching = heavy_matching;
    for &x in prefer {
        let i = t_index.get(x).copied().unwrap_or(usize::MAX);
        if i == usize::MAX || covered.contains(&i) {
            continue;
        }
        covered.push(i);
        let adj: Vec<Vec<usize>> = covered.iter().map(|&i| t_adj(i)).collect();
        let trial = maximum_matching(pair.s.len(), &adj);
        if trial.size() == covered.len() {
            cover = trial;
        } else {
            covered.pop();
        }
    }
    let mut st = BipartiteMatching::empty(pair.s.len(), pair.t.len());
    for (hi, si) in cover.pairs() {
        st.left_mate[si] = Some(covered[hi]);
        st.right_mate[covered[hi]] = Some(si);
    }
    let s_adj: Vec<Vec<usize>> = pair
        .s
        .iter()
        .map(|&x| {
            g.neighbours(x)
                .into_iter()
                .filter(|&y| role[y] == 2)
                .map(|y| t_index[y])
                .collect()
        })
        .collect();
    st.augment(&s_adj);
    if st.size() < pair.s.len() {
        return Err(Error::contract("S cannot be saturated into T", dump()));
    }
    for (si, ti) in st.pairs() {
        h.two_cycles.push(two_cycle(g, pair.s[si], pair.t[ti]));
    }

    // Perfect 2-matching on the rest.
    let rest: Vec<Vertex> = (0..n).filter(|&v| role[v] == 0).collect();
    let Some(rest_h) = perfect_two_matching(g, &rest) else {
        return Err(Error::contract("rest of the graph has no perfect 2-matching", dump()));
    };
    h.two_cycles.extend(rest_h.two_cycles);
    h.odd_cycles.extend(rest_h.odd_cycles);
    h.two_cycles.sort_by_key(|c| (c.u.min(c.v), c.u.max(c.v)));
    h.odd_cycles.sort_by_key(|c| c.vertices.iter().copied().min());
    Ok((h, pair))
}

/// A spanning subgraph of `g[vertices]` made of 2-cycles and odd cycles, in
/// host ids, or `None` if there is none. Every edge of `g` must be doubled.
pub fn perfect_two_matching(g: &Multigraph, vertices: &[Vertex]) -> Option<FactorSubgraph> {
    let mut h = FactorSubgraph::default();
    let view = g.induced(vertices);
    let adj = double_cover(&view.graph);
    let perm = maximum_matching(vertices.len(), &adj);
    if perm.size() < vertices.len() {
        return None;
    }
    let mut done = vec![false; vertices.len()];
    for start in 0..vertices.len() {
        if done[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !done[x] {
            done[x] = true;
            cycle.push(vertices[x]);
            x = perm.left_mate[x].expect("perfect matching");
        }
        match cycle.len() {
            2 => h.two_cycles.push(two_cycle(g, cycle[0], cycle[1])),
            len if len % 2 == 1 => {
                let edges = (0..len)
                    .map(|i| g.edge(cycle[i], cycle[(i + 1) % len]).expect("cycle edge"))
                    .collect();
                h.odd_cycles.push(OddCycle { vertices: cycle, edges });
            }
            _ => {
                for pair in cycle.chunks(2) {
                    h.two_cycles.push(two_cycle(g, pair[0], pair[1]));
                }
            }
        }
    }
    h.two_cycles.sort_by_key(|c| (c.u.min(c.v), c.u.max(c.v)));
    h.odd_cycles.sort_by_key(|c| c.vertices.iter().copied().min());
    Some(h)
}

fn two_cycle(g: &Multigraph, u: Vertex, v: Vertex) -> TwoCycle {
    let ids = g.edges_between(u, v);
    TwoCycle {
        u,
        v,
        edges: [ids[0], ids[1]],
    }
}

/// Exhaustive maximum-deficiency pair over all `3^n` role assignments.
/// Ties break by fewest vertices, then lexicographically smallest `S`, then `T`.
pub fn brute_force_deficiency(g: &Multigraph, f: &[usize]) -> Result<DeficiencyPair> {
    const LIMIT: usize = 14;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::SizeGuard {
            what: "n",
            actual: n,
            limit: LIMIT,
        });
    }
    let mut mult = vec![vec![0i64; n]; n];
    let mut nb = vec![0u32; n];
    for &(u, v) in g.edges() {
        mult[u][v] += 1;
        mult[v][u] += 1;
        nb[u] |= 1 << v;
        nb[v] |= 1 << u;
    }
    let deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let members = |mask: u32| (0..n).filter(move |&i| mask >> i & 1 == 1);

    let evaluate = |s: u32, t: u32| -> i64 {
        let mut value = 0i64;
        for x in members(t) {
            value += f[x] as i64;
            let into_s: i64 = members(s).map(|y| mult[x][y]).sum();
            value -= deg[x] - into_s;
        }
        for x in members(s) {
            value -= f[x] as i64;
        }
        let mut rest = full & !s & !t;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut grow = 0;
                for x in members(frontier) {
                    grow |= nb[x];
                }
                frontier = grow & rest & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            let mut parity = 0i64;
            for x in members(comp) {
                parity += f[x] as i64 + members(t).map(|y| mult[x][y]).sum::<i64>();
            }
            value += parity & 1;
        }
        value
    };

    let key = |s: u32, t: u32| -> (Vec<Vertex>, Vec<Vertex>) { (members(s).collect(), members(t).collect()) };
    let mut best: Option<(i64, u32, u32)> = None;
    for s in 0..=full {
        let comp = full & !s;
        let mut t = comp;
        loop {
            let value = evaluate(s, t);
            let better = match best {
                None => true,
                Some((bv, bs, bt)) => {
                    let (card, bcard) = ((s | t).count_ones(), (bs | bt).count_ones());
                    value > bv || (value == bv && (card < bcard || (card == bcard && key(s, t) < key(bs, bt))))
                }
            };
            if better {
                best = Some((value, s, t));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & comp;
        }
    }
    let (value, s, t) = best.expect("at least the empty pair");
    let (s, t) = key(s, t);
    Ok(DeficiencyPair {
        s,
        t,
        value,
        minimal: true,
    })
}

/// Failures of the structural properties a maximum 2-bounded subgraph and
/// its minimal pair must satisfy. Empty means all hold.
pub fn check_factor(g: &Multigraph, h: &FactorSubgraph, pair: &DeficiencyPair) -> Vec<String> {
    let n = g.n();
    let mut bad = Vec::new();
    let f = vec![2; n];

    // components are vertex-disjoint 2-cycles and odd cycles made of real edges
    let mut seen = vec![false; n];
    let mut used = std::collections::BTreeSet::new();
    for c in &h.two_cycles {
        let [a, b] = c.edges;
        if a == b || g.edges_between(c.u, c.v).iter().filter(|&&e| e == a || e == b).count() != 2 {
            bad.push(format!("2-cycle {}-{} does not use two parallel copies", c.u, c.v));
        }
        for x in [c.u, c.v] {
            if std::mem::replace(&mut seen[x], true) {
                bad.push(format!("vertex {x} lies on two components"));
            }
        }
        used.extend(c.edges);
    }
    for c in &h.odd_cycles {
        let len = c.vertices.len();
        if len < 3 || len % 2 == 0 || c.edges.len() != len {
            bad.push(format!("cycle {:?} is not an odd cycle", c.vertices));
            continue;
        }
        for i in 0..len {
            let (u, v) = g.endpoints(c.edges[i]);
            let (x, y) = (c.vertices[i], c.vertices[(i + 1) % len]);
            if !((u, v) == (x, y) || (u, v) == (y, x)) {
                bad.push(format!("cycle edge {} does not join {x} and {y}", c.edges[i]));
            }
            if std::mem::replace(&mut seen[x], true) {
                bad.push(format!("vertex {x} lies on two components"));
            }
            used.insert(c.edges[i]);
        }
    }
    if used.len() != h.edge_ids().len() {
        bad.push("an edge identity is used twice".into());
    }

    // Lovász equality and the deficiency value
    match deficiency(g, &f, &pair.s, &pair.t) {
        Ok(value) if value == pair.value => {}
        Ok(value) => bad.push(format!("recorded deficiency {} but formula gives {value}", pair.value)),
        Err(e) => bad.push(format!("deficiency pair invalid: {e}")),
    }
    if h.degree_sum() as i64 != 2 * n as i64 - pair.value {
        bad.push(format!(
            "degree sum {} differs from f(V) - def = {}",
            h.degree_sum(),
            2 * n as i64 - pair.value
        ));
    }
    if pair.value != 2 * pair.t.len() as i64 - 2 * pair.s.len() as i64 {
        bad.push("deficiency is not 2|T| - 2|S|".into());
    }

    // T independent, N(T) = S
    let mut in_s = vec![false; n];
    let mut in_t = vec![false; n];
    pair.s.iter().for_each(|&x| in_s[x] = true);
    pair.t.iter().for_each(|&x| in_t[x] = true);
    let mut nt = vec![false; n];
    for &x in &pair.t {
        for y in g.neighbours(x) {
            if in_t[y] {
                bad.push(format!("T is not independent: {x}-{y}"));
            }
            nt[y] = true;
        }
    }
    if nt != in_s {
        bad.push("N(T) differs from S".into());
    }

    // H[S ∪ T]: 2-cycles plus |T| - |S| isolated vertices, all in T
    let inside = |x: Vertex| in_s[x] || in_t[x];
    let mut covered_inside = vec![false; n];
    for c in &h.two_cycles {
        if inside(c.u) && inside(c.v) {
            covered_inside[c.u] = true;
            covered_inside[c.v] = true;
        }
    }
    for c in &h.odd_cycles {
        if c.vertices.iter().any(|&x| inside(x)) {
            bad.push(format!("odd cycle {:?} meets S ∪ T", c.vertices));
        }
    }
    let isolated: Vec<Vertex> = (0..n).filter(|&x| inside(x) && !covered_inside[x]).collect();
    if isolated.len() as i64 != pair.t.len() as i64 - pair.s.len() as i64 || isolated.iter().any(|&x| !in_t[x]) {
        bad.push(format!("H[S ∪ T] leaves {:?} isolated", isolated));
    }

    if !hall_surplus(g, &pair.s, &in_t) {
        bad.push("some nonempty X ⊆ S has |N(X) ∩ T| <= |X|".into());
    }

    // maximum-degree vertices are covered
    let delta = g.max_degree();
    if delta > 0 {
        let deg = h.degrees(n);
        for v in 0..n {
            if g.degree(v) == delta && deg[v] != 2 {
                bad.push(format!("maximum-degree vertex {v} has H-degree {}", deg[v]));
            }
        }
    }
    bad
}

/// `|N(X) ∩ T| > |X|` for every nonempty `X ⊆ S`: equivalently, `S` with any
/// single vertex duplicated still matches into `T`.
fn hall_surplus(g: &Multigraph, s: &[Vertex], in_t: &[bool]) -> bool {
    let t: Vec<Vertex> = (0..g.n()).filter(|&x| in_t[x]).collect();
    let mut t_index = vec![usize::MAX; g.n()];
    for (i, &x) in t.iter().enumerate() {
        t_index[x] = i;
    }
    let rows: Vec<Vec<usize>> = s
        .iter()
        .map(|&x| {
            g.neighbours(x)
                .into_iter()
                .filter(|&y| in_t[y])
                .map(|y| t_index[y])
                .collect()
        })
        .collect();
    (0..s.len()).all(|dup| {
        let mut adj = rows.clone();
        adj.push(rows[dup].clone());
        maximum_matching(t.len(), &adj).size() == s.len() + 1
    })
}
