use std::collections::{BTreeSet, VecDeque};

use super::ScaleError;
use crate::slack::SymbolicSlackMatrix;

/// Bipartite graph with a node per row (`0..rows`) and per column
/// (`rows..rows + cols`), and an edge per support cell, labelled by its
/// variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonIncidenceGraph {
    rows: usize,
    cols: usize,
    endpoints: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl NonIncidenceGraph {
    pub fn new(s: &SymbolicSlackMatrix) -> Self {
        let (rows, cols) = (s.rows(), s.cols());
        let endpoints: Vec<(usize, usize)> =
            s.cells().iter().map(|&(i, j)| (i, rows + j)).collect();
        let mut adjacency = vec![Vec::new(); rows + cols];
        for (v, &(r, c)) in endpoints.iter().enumerate() {
            adjacency[r].push((v, c));
            adjacency[c].push((v, r));
        }
        Self {
            rows,
            cols,
            endpoints,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.rows + self.cols
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn is_column_node(&self, node: usize) -> bool {
        node >= self.rows
    }

    /// `(row node, column node)` of the edge labelled `v`.
    pub fn endpoints(&self, v: usize) -> (usize, usize) {
        self.endpoints[v]
    }

    /// `(variable, neighbour)` pairs in variable order.
    pub fn neighbors(&self, node: usize) -> &[(usize, usize)] {
        &self.adjacency[node]
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.node_count());
        let mut count = self.node_count();
        for &(a, b) in &self.endpoints {
            if uf.union(a, b) {
                count -= 1;
            }
        }
        count
    }
}

/// An edge of a [`SpanningForest`], pointing away from its root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForestEdge {
    pub var: usize,
    pub source: usize,
    pub dest: usize,
}

/// An acyclic edge set of a [`NonIncidenceGraph`], oriented away from one
/// root per component and listed root to leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    edges: Vec<ForestEdge>,
    roots: Vec<usize>,
}

impl SpanningForest {
    /// The maximal forest obtained by adding edges greedily in variable order.
    pub fn kruskal(graph: &NonIncidenceGraph) -> Self {
        let mut uf = UnionFind::new(graph.node_count());
        let vars: BTreeSet<usize> = (0..graph.edge_count())
            .filter(|&v| {
                let (a, b) = graph.endpoints(v);
                uf.union(a, b)
            })
            .collect();
        Self::orient(graph, &vars)
    }

    /// The forest on the given edges.
    pub fn from_edges(graph: &NonIncidenceGraph, vars: &BTreeSet<usize>) -> Result<Self, ScaleError> {
        let mut uf = UnionFind::new(graph.node_count());
        for &v in vars {
            if v >= graph.edge_count() {
                return Err(ScaleError::VariableOutOfRange {
                    var: v,
                    nvars: graph.edge_count(),
                });
            }
            let (a, b) = graph.endpoints(v);
            if !uf.union(a, b) {
                return Err(ScaleError::NotAForest(v));
            }
        }
        Ok(Self::orient(graph, vars))
    }

    /// Breadth-first orientation from the lowest column node of each
    /// component, or its lowest node if it has no column.
    fn orient(graph: &NonIncidenceGraph, vars: &BTreeSet<usize>) -> Self {
        let n = graph.node_count();
        let mut seen = vec![false; n];
        let mut edges = Vec::with_capacity(vars.len());
        let mut roots = Vec::new();
        // column nodes come first, so every component containing a column
        // is rooted at its lowest one
        let candidates = (graph.row_count()..n).chain(0..graph.row_count());
        for start in candidates {
            if seen[start] {
                continue;
            }
            roots.push(start);
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(v, w) in graph.neighbors(u) {
                    if vars.contains(&v) && !seen[w] {
                        seen[w] = true;
                        edges.push(ForestEdge {
                            var: v,
                            source: u,
                            dest: w,
                        });
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { edges, roots }
    }

    pub fn edges(&self) -> &[ForestEdge] {
        &self.edges
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|e| e.var)
    }

    /// Edge labels along the forest path from `from` to `to`.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let parent = |node: usize| self.edges.iter().find(|e| e.dest == node);
        let ancestors = |mut node: usize| {
            let mut chain = vec![(node, None)];
            while let Some(e) = parent(node) {
                node = e.source;
                chain.push((node, Some(e.var)));
            }
            chain
        };
        let up = ancestors(from);
        let down = ancestors(to);
        let meet = up.iter().position(|(n, _)| down.iter().any(|(m, _)| m == n))?;
        let meet_node = up[meet].0;
        let down_meet = down.iter().position(|(m, _)| *m == meet_node)?;
        let mut path: Vec<usize> = up[1..=meet].iter().filter_map(|&(_, v)| v).collect();
        let tail: Vec<usize> = down[1..=down_meet].iter().filter_map(|&(_, v)| v).collect();
        path.extend(tail.into_iter().rev());
        Some(path)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
