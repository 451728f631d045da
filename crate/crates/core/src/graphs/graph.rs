use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::One;

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored with the smaller endpoint first, in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u == v {
                return Err(Error::validation(format!("loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::validation(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::validation(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            list.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            adjacency,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// `n` disjoint edges `(2i, 2i+1)`.
    pub fn matching(n: usize) -> Self {
        Graph::new(2 * n, (0..n).map(|i| (2 * i, 2 * i + 1))).expect("matching is simple")
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple for n >= 3")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    /// True when no two edges share an endpoint.
    pub fn is_matching(&self) -> bool {
        self.max_degree() <= 1
    }

    /// The spanning subgraph keeping only the listed edge indices.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = usize>) -> Graph {
        Graph::new(self.vertex_count, keep.into_iter().map(|i| self.edges[i]))
            .expect("subgraph of a simple graph is simple")
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adjacency[u] {
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

    /// Reads the edge-list format: one `u v` pair per line, 0-indexed.
    /// Blank lines and lines starting with `#` are skipped. The vertex count
    /// is one more than the largest endpoint, or `min_vertices` if larger.
    pub fn parse_edge_list(text: &str, min_vertices: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut n = min_vertices;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<usize> {
                parts
                    .next()
                    .ok_or_else(|| Error::parse(format!("line {}: expected `u v`", lineno + 1)))?
                    .parse::<usize>()
                    .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))
            };
            let (u, v) = (next()?, next()?);
            if parts.next().is_some() {
                return Err(Error::parse(format!("line {}: trailing tokens", lineno + 1)));
            }
            n = n.max(u + 1).max(v + 1);
            edges.push((u, v));
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        self.edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }
}

/// Sentinel-carrying diameter: disconnected graphs have no finite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Unbounded,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(r) => Some(r),
            Diameter::Unbounded => None,
        }
    }
}

/// Maximum eccentricity over all vertices. The empty and single-vertex graphs have diameter 0.
pub fn diameter(g: &Graph) -> Diameter {
    use rayon::prelude::*;
    let eccentricities: Option<Vec<usize>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| g.bfs_distances(s).into_iter().try_fold(0, |m, d| d.map(|d| m.max(d))))
        .collect();
    match eccentricities {
        Some(e) => Diameter::Finite(e.into_iter().max().unwrap_or(0)),
        None => Diameter::Unbounded,
    }
}

/// An injective assignment of rational values to the vertices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    values: Vec<Rational>,
}

impl Labeling {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (v, x) in values.iter().enumerate() {
            if !seen.insert(x) {
                return Err(Error::validation(format!(
                    "labeling is not injective: value {} repeats at vertex {v}",
                    format_rational(x)
                )));
            }
        }
        Ok(Labeling { values })
    }

    pub fn from_integers<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<crate::arith::Integer>,
    {
        Labeling::new(values.into_iter().map(|x| Rational::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.values[v]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|x| x.denom().is_one())
    }

    /// Restricts to `vertices`, renumbered `0..vertices.len()` in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Labeling {
        Labeling {
            values: vertices.iter().map(|&v| self.values[v].clone()).collect(),
        }
    }

    /// Reads the labeling format: one `v value` per line, values as decimal
    /// integers or `p/q`. Every vertex in `0..n` must be labeled exactly once.
    pub fn parse(text: &str) -> Result<Labeling> {
        let mut entries: Vec<(usize, Rational)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (v, value) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::parse(format!("line {}: expected `v value`", lineno + 1)))?;
            let v = v
                .parse::<usize>()
                .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))?;
            entries.push((v, parse_rational(value)?));
        }
        let n = entries.iter().map(|(v, _)| v + 1).max().unwrap_or(0);
        let mut values: Vec<Option<Rational>> = vec![None; n];
        for (v, x) in entries {
            if values[v].replace(x).is_some() {
                return Err(Error::parse(format!("vertex {v} labeled twice")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(v, x)| x.ok_or_else(|| Error::parse(format!("vertex {v} has no label"))))
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(values)
    }

    /// The matching `(2i, 2i+1)` labelled by the given pairs.
    pub fn matching_from_pairs(pairs: &[(Rational, Rational)]) -> Result<(Graph, Labeling)> {
        let values = pairs.iter().flat_map(|(x, y)| [x.clone(), y.clone()]).collect();
        Ok((Graph::matching(pairs.len()), Labeling::new(values)?))
    }

    pub fn to_text(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(v, x)| format!("{v} {}\n", format_rational(x)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&Graph::path(3)), Diameter::Finite(2));
        assert_eq!(diameter(&Graph::complete(4)), Diameter::Finite(1));
        assert_eq!(diameter(&Graph::empty(2)), Diameter::Unbounded);
        assert_eq!(diameter(&Graph::cycle(7)), Diameter::Finite(3));
    }

    #[test]
    fn labeling_must_be_injective() {
        assert!(Labeling::from_integers([1, 2, 1]).is_err());
        assert!(Labeling::from_integers([1, 2, 3]).is_ok());
    }

    #[test]
    fn text_formats() {
        let g = Graph::parse_edge_list("# triangle\n0 1\n1 2\n\n2 0\n", 0).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert!(Graph::parse_edge_list("0 1 2\n", 0).is_err());
        assert!(Graph::parse_edge_list("0 x\n", 0).is_err());

        let l = Labeling::parse("1 -3/6\n0 7\n").unwrap();
        assert_eq!(l.to_text(), "0 7\n1 -1/2\n");
        assert!(Labeling::parse("0 1\n2 3\n").is_err());
        assert!(Labeling::parse("0 1\n0 3\n").is_err());
        assert!(matches!(Labeling::parse("0 1\n1 1\n"), Err(Error::Validation(_))));
    }
}
