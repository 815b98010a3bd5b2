use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use super::{int, SymmetricMatrix, Value};
use crate::error::{Error, Result};

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self.edges().map(|(i, j)| format!("{}-{}", i + 1, j + 1)).collect();
        write!(f, "Graph(n={}; {})", self.n, edges.join(" "))
    }
}

impl Graph {
    /// Builds a graph; loops are dropped and repeated edges merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![false; n * n];
        for (i, j) in edges {
            assert!(i < n && j < n, "edge ({i},{j}) out of range for n={n}");
            if i != j {
                adj[i * n + j] = true;
                adj[j * n + i] = true;
            }
        }
        let nbrs = (0..n).map(|i| (0..n).filter(|&j| adj[i * n + j]).collect()).collect();
        Graph { n, adj, nbrs }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, [])
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.nbrs[i].iter().copied().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().all(|(i, j)| other.has_edge(i, j))
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(self.n, |i, j| int(self.has_edge(i, j) as i64)).expect("n >= 1")
    }

    /// Hop distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.nbrs[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.nbrs[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `subset`, renumbered in the given order.
    pub fn induced(&self, subset: &[usize]) -> Graph {
        let k = subset.len();
        Graph::from_edges(
            k,
            (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| self.has_edge(subset[a], subset[b])),
        )
    }

    /// Shortest-path distance matrix `D_G`. Pairs in different components
    /// get `1 + n`, which exceeds every finite hop distance.
    pub fn distance_matrix(&self) -> SymmetricMatrix {
        let far = self.n + 1;
        let dist: Vec<Vec<Option<usize>>> = (0..self.n).map(|s| self.bfs_distances(s)).collect();
        SymmetricMatrix::from_fn(self.n, |i, j| int(dist[i][j].unwrap_or(far) as i64)).expect("n >= 1")
    }
}

/// `G^k`: pairs at hop distance at most `k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("graph power needs k >= 1".into()));
    }
    let n = g.n();
    let mut edges = Vec::new();
    for s in 0..n {
        let dist = g.bfs_distances(s);
        for (t, d) in dist.iter().enumerate().skip(s + 1) {
            if matches!(d, Some(d) if *d <= k) {
                edges.push((s, t));
            }
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Graph with nonnegative exact edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    // dense n*n, meaningful only on edges
    weights: Vec<Value>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, Value)>) -> Result<Self> {
        let mut weights = vec![Value::zero(); n * n];
        let mut pairs = Vec::new();
        for (i, j, w) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidArgument(format!("bad edge ({i},{j}) for n={n}")));
            }
            if w.is_negative() {
                return Err(Error::NegativeWeight { i: i + 1, j: j + 1 });
            }
            weights[i * n + j] = w.clone();
            weights[j * n + i] = w;
            pairs.push((i, j));
        }
        Ok(WeightedGraph { graph: Graph::from_edges(n, pairs), weights })
    }

    /// Unit weights on every edge of `g`.
    pub fn unweighted(g: &Graph) -> Self {
        Self::new(g.n(), g.edges().map(|(i, j)| (i, j, int(1)))).expect("unit weights are valid")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&Value> {
        self.graph.has_edge(i, j).then(|| &self.weights[i * self.n() + j])
    }

    pub fn max_weight(&self) -> Value {
        self.graph.edges().map(|(i, j)| self.weights[i * self.n() + j].clone()).max().unwrap_or_else(Value::zero)
    }

    /// `1 + n * max weight`: larger than every finite shortest-path distance.
    pub fn big_m(&self) -> Value {
        int(1) + int(self.n() as i64) * self.max_weight()
    }

    /// Weight matrix `W`: edge weights on edges, [`big_m`](Self::big_m) elsewhere.
    pub fn weight_matrix(&self) -> SymmetricMatrix {
        let m = self.big_m();
        SymmetricMatrix::from_fn(self.n(), |i, j| self.weight(i, j).cloned().unwrap_or_else(|| m.clone()))
            .expect("n >= 1")
    }

    /// All-pairs shortest distances inside the subgraph induced by `subset`
    /// (`None` = unreachable). Indexed by positions in `subset`.
    #[allow(clippy::needless_range_loop)]
    pub fn distances_within(&self, subset: &[usize]) -> Vec<Vec<Option<Value>>> {
        let k = subset.len();
        let mut d: Vec<Vec<Option<Value>>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| if a == b { Some(Value::zero()) } else { self.weight(subset[a], subset[b]).cloned() })
                    .collect()
            })
            .collect();
        for m in 0..k {
            for a in 0..k {
                let Some(dam) = d[a][m].clone() else { continue };
                for b in 0..k {
                    if let Some(dmb) = &d[m][b] {
                        let via = &dam + dmb;
                        if d[a][b].as_ref().is_none_or(|cur| via < *cur) {
                            d[a][b] = Some(via);
                        }
                    }
                }
            }
        }
        d
    }
}

/// Shortest-path metric of a weighted graph, by exact Floyd–Warshall
/// relaxation. Disconnected pairs get [`WeightedGraph::big_m`].
pub fn shortest_path_matrix(wg: &WeightedGraph) -> SymmetricMatrix {
    let all: Vec<usize> = (0..wg.n()).collect();
    let d = wg.distances_within(&all);
    let m = wg.big_m();
    SymmetricMatrix::from_fn(wg.n(), |i, j| d[i][j].clone().unwrap_or_else(|| m.clone())).expect("n >= 1")
}
