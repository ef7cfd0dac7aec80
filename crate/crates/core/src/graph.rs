//! Simple graphs on `[n]` stored as adjacency bitmasks.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Face>,
}

/// Induced odd cycles and the classification flags derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCycleCensus {
    /// Vertex sets of induced odd cycles, in cycle order (0-based).
    pub induced_odd_cycles: Vec<Vec<usize>>,
    /// `2c + 1` is the longest induced odd cycle; 0 when bipartite.
    pub c: usize,
    pub is_bipartite: bool,
    pub is_perfect: bool,
    pub is_unicyclic: bool,
}

impl Graph {
    /// Edges are 0-based pairs; duplicates are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables {
                max: MAX_VERTICES,
                got: n,
            });
        }
        let mut adj = vec![Face::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u + 1));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|k| (k, (k + 1) % n))).expect("valid cycle")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Face {
        Face::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .vertices()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> Face {
        self.adj[v]
    }

    /// `N(F)`: vertices adjacent to some vertex of `F`.
    pub fn open_neighborhood(&self, f: Face) -> Face {
        f.vertices()
            .fold(Face::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// `N[F] = F ∪ N(F)`.
    pub fn closed_neighborhood(&self, f: Face) -> Face {
        f.union(self.open_neighborhood(f))
    }

    pub fn is_independent(&self, f: Face) -> bool {
        f.vertices().all(|v| self.adj[v].is_disjoint(f))
    }

    /// Connected components of the subgraph induced on `w`.
    fn component_of(&self, start: usize, w: Face) -> Face {
        let mut seen = Face::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].intersection(w).difference(seen).vertices() {
                seen = seen.with(v);
                queue.push_back(v);
            }
        }
        seen
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// `G[W]` relabelled onto `0..|W|` in increasing order; also returns the old labels.
    pub fn induced_subgraph(&self, w: Face) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = w.vertices().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (k, &v) in labels.iter().enumerate() {
            pos[v] = k;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| w.contains(u) && w.contains(v))
            .map(|(u, v)| (pos[u], pos[v]));
        let g = Graph::from_edges(labels.len(), edges).expect("subgraph of a valid graph");
        (g, labels)
    }

    /// `G - W`.
    pub fn remove(&self, w: Face) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices().difference(w))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// All independent sets, including `∅`.
    pub fn independent_sets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        self.extend_independent(Face::EMPTY, self.vertices(), &mut out);
        out.sort();
        out
    }

    fn extend_independent(&self, cur: Face, allowed: Face, out: &mut Vec<Face>) {
        out.push(cur);
        for v in allowed.vertices() {
            // only add vertices larger than v afterwards
            let rest = allowed
                .difference(self.adj[v])
                .difference(Face::from_bits((1u64 << v) | ((1u64 << v) - 1)));
            self.extend_independent(cur.with(v), rest, out);
        }
    }

    /// `α(G)`; zero on the empty vertex set.
    pub fn independence_number(&self) -> usize {
        self.alpha_within(self.vertices())
    }

    fn alpha_within(&self, w: Face) -> usize {
        let Some(v) = w.vertices().next() else {
            return 0;
        };
        let without = self.alpha_within(w.without(v));
        if self.adj[v].intersection(w).is_empty() {
            return without + 1;
        }
        let with = 1 + self.alpha_within(w.without(v).difference(self.adj[v]));
        with.max(without)
    }

    /// 2-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("coloured");
                for v in self.adj[u].vertices() {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Vertex sets inducing a cycle (length ≥ 3), each in cycle order.
    pub fn induced_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for w in self.vertices().subsets() {
            if w.len() < 3 {
                continue;
            }
            if w.vertices().any(|v| self.adj[v].intersection(w).len() != 2) {
                continue;
            }
            let start = w.vertices().next().expect("nonempty");
            if self.component_of(start, w) != w {
                continue;
            }
            out.push(self.cycle_order(w));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Walks an induced cycle from its smallest vertex towards the smaller neighbour.
    pub fn cycle_order(&self, w: Face) -> Vec<usize> {
        let start = w.vertices().next().expect("nonempty cycle");
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self.adj[start]
            .intersection(w)
            .vertices()
            .next()
            .expect("cycle vertex has neighbours");
        while cur != start {
            order.push(cur);
            let next = self.adj[cur]
                .intersection(w)
                .without(prev)
                .vertices()
                .next()
                .expect("cycle vertex has two neighbours");
            prev = cur;
            cur = next;
        }
        order
    }

    pub fn induced_odd_cycles(&self) -> Vec<Vec<usize>> {
        self.induced_cycles()
            .into_iter()
            .filter(|c| c.len() % 2 == 1)
            .collect()
    }

    fn has_odd_hole(&self) -> bool {
        self.induced_cycles()
            .iter()
            .any(|c| c.len() >= 5 && c.len() % 2 == 1)
    }

    /// No odd hole in the graph or its complement.
    pub fn is_perfect(&self) -> bool {
        !self.has_odd_hole() && !self.complement().has_odd_hole()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n
    }

    pub fn odd_cycle_census(&self) -> Result<OddCycleCensus> {
        let induced_odd_cycles = self.induced_odd_cycles();
        let c = induced_odd_cycles
            .iter()
            .map(|cyc| (cyc.len() - 1) / 2)
            .max()
            .unwrap_or(0);
        let is_bipartite = self.is_bipartite();
        if is_bipartite != (c == 0) {
            return Err(Error::invariant(
                "bipartite-census",
                format!("2-colouring says bipartite = {is_bipartite}, cycle census gives c = {c}"),
            ));
        }
        Ok(OddCycleCensus {
            c,
            is_bipartite,
            is_perfect: self.is_perfect(),
            is_unicyclic: self.is_unicyclic(),
            induced_odd_cycles,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        write!(f, "graph on {}: {}", self.n, edges.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        g.vertices()
            .subsets()
            .filter(|s| g.is_independent(*s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]).unwrap_err(), Error::Loop(2));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        let g = graph(3, &[(1, 2), (2, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn neighbourhoods() {
        let g = graph(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (4, 5)]);
        let tri = Face::from_vertices([0, 1, 2]);
        assert_eq!(
            g.closed_neighborhood(tri),
            Face::from_vertices([0, 1, 2, 3])
        );
        assert_eq!(
            g.open_neighborhood(Face::singleton(3)),
            Face::from_vertices([0, 4])
        );
        let (rest, labels) = g.remove(g.closed_neighborhood(tri));
        assert_eq!(labels, vec![4]);
        assert_eq!(rest.independence_number(), 1);
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::cycle(5).independence_number(), 2);
        assert_eq!(Graph::cycle(6).independence_number(), 3);
        assert_eq!(Graph::from_edges(0, []).unwrap().independence_number(), 0);
        let g = graph(6, &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 5), (3, 6)]);
        assert_eq!(g.independence_number(), brute_alpha(&g));
        let sets = g.independent_sets();
        let brute: Vec<Face> = {
            let mut v: Vec<Face> = g
                .vertices()
                .subsets()
                .filter(|s| g.is_independent(*s))
                .collect();
            v.sort();
            v
        };
        assert_eq!(sets, brute);
    }

    #[test]
    fn census() {
        let c5 = Graph::cycle(5).odd_cycle_census().unwrap();
        assert_eq!(c5.c, 2);
        assert!(!c5.is_perfect && c5.is_unicyclic && !c5.is_bipartite);
        assert_eq!(c5.induced_odd_cycles, vec![vec![0, 1, 2, 3, 4]]);
        let c7 = Graph::cycle(7).odd_cycle_census().unwrap();
        assert_eq!(c7.c, 3);
        assert!(!c7.is_perfect);
        let c6 = Graph::cycle(6).odd_cycle_census().unwrap();
        assert!(c6.is_bipartite && c6.c == 0 && c6.is_perfect);
        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let census = k4.odd_cycle_census().unwrap();
        assert_eq!(census.induced_odd_cycles.len(), 4);
        assert_eq!(census.c, 1);
        assert!(census.is_perfect && !census.is_unicyclic);
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c = Graph::cycle(5).complement();
        assert_eq!(c.edge_count(), 5);
        assert!(c.neighbors(0) == Face::from_vertices([2, 3]));
        assert!(c.induced_odd_cycles().iter().any(|cyc| cyc.len() == 5));
    }

    #[test]
    fn cycle_order_walks_edges() {
        let g = graph(6, &[(1, 4), (4, 2), (2, 6), (6, 3), (3, 5), (5, 1)]);
        let order = g.cycle_order(g.vertices());
        assert_eq!(order.len(), 6);
        for k in 0..6 {
            assert!(g.has_edge(order[k], order[(k + 1) % 6]));
        }
    }

    #[test]
    fn connectivity() {
        assert!(graph(3, &[(1, 2), (2, 3)]).is_connected());
        assert!(!graph(3, &[(1, 2)]).is_connected());
    }
}
