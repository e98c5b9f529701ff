//! Augmenting-path bipartite matching.

/// Matching between a left side `0..left` and a right side `0..right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
}

impl BipartiteMatching {
    pub fn empty(left: usize, right: usize) -> Self {
        BipartiteMatching {
            left_mate: vec![None; left],
            right_mate: vec![None; right],
        }
    }

    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_mate.iter().enumerate().filter_map(|(l, r)| r.map(|r| (l, r)))
    }

    /// Tries to add an augmenting path from every exposed left vertex, in
    /// index order. Vertices that are matched stay matched.
    pub fn augment(&mut self, adj: &[Vec<usize>]) {
        for start in 0..adj.len() {
            if self.left_mate[start].is_none() {
                let mut visited = vec![false; self.right_mate.len()];
                self.try_kuhn(adj, start, &mut visited);
            }
        }
    }

    fn try_kuhn(&mut self, adj: &[Vec<usize>], l: usize, visited: &mut [bool]) -> bool {
        for &r in &adj[l] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match self.right_mate[r] {
                None => true,
                Some(other) => self.try_kuhn(adj, other, visited),
            };
            if free {
                self.left_mate[l] = Some(r);
                self.right_mate[r] = Some(l);
                return true;
            }
        }
        false
    }

    /// Left vertices reachable by alternating paths from exposed left
    /// vertices (non-matching edges left→right, matching edges right→left).
    pub fn alternating_reach(&self, adj: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let mut left_seen = vec![false; adj.len()];
        let mut right_seen = vec![false; self.right_mate.len()];
        let mut stack: Vec<usize> = (0..adj.len()).filter(|&l| self.left_mate[l].is_none()).collect();
        for &l in &stack {
            left_seen[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &adj[l] {
                if right_seen[r] {
                    continue;
                }
                right_seen[r] = true;
                if let Some(next) = self.right_mate[r] {
                    if !left_seen[next] {
                        left_seen[next] = true;
                        stack.push(next);
                    }
                }
            }
        }
        (left_seen, right_seen)
    }
}

/// Maximum matching of the bipartite graph with left adjacency lists `adj`.
pub fn maximum_matching(right: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    let mut m = BipartiteMatching::empty(adj.len(), right);
    m.augment(adj);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matchings() {
        let adj = vec![vec![0, 1], vec![0], vec![1]];
        let m = maximum_matching(2, &adj);
        assert_eq!(m.size(), 2);
        let adj = vec![vec![0], vec![0], vec![0]];
        assert_eq!(maximum_matching(1, &adj).size(), 1);
        assert_eq!(maximum_matching(0, &[]).size(), 0);
    }

    #[test]
    fn augment_keeps_matched_vertices() {
        let adj = vec![vec![0, 1], vec![0]];
        let mut m = BipartiteMatching::empty(2, 2);
        m.left_mate[0] = Some(0);
        m.right_mate[0] = Some(0);
        m.augment(&adj);
        assert_eq!(m.size(), 2);
        assert_eq!(m.left_mate, vec![Some(1), Some(0)]);
    }

    #[test]
    fn reach_from_exposed() {
        // left 0,1 both only see right 0: one of them stays exposed
        let adj = vec![vec![0], vec![0]];
        let m = maximum_matching(1, &adj);
        let (left, right) = m.alternating_reach(&adj);
        assert_eq!(left, vec![true, true]);
        assert_eq!(right, vec![true]);
    }
}
