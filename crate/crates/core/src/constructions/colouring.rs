use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::graphs::{Graph, Labeling};
use crate::Rational;

/// A proper edge colouring: `colour(e)` for each edge index of a graph, with
/// edges sharing a vertex coloured differently. Colour ids are `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    colours: Vec<usize>,
    palette: usize,
}

impl EdgeColouring {
    pub fn new(g: &Graph, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != g.edge_count() {
            return Err(Error::validation(format!(
                "{} colours given for {} edges",
                colours.len(),
                g.edge_count()
            )));
        }
        let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
        for (&(u, v), &c) in g.edges().iter().zip(&colours) {
            at_vertex[u].push(c);
            at_vertex[v].push(c);
        }
        for (v, cs) in at_vertex.iter_mut().enumerate() {
            cs.sort_unstable();
            if let Some(w) = cs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::validation(format!(
                    "colouring is not proper: two edges at vertex {v} share colour {}",
                    w[0]
                )));
            }
        }
        let palette = colours.iter().max().map_or(0, |&c| c + 1);
        Ok(EdgeColouring { colours, palette })
    }

    /// Colours edges by arbitrary ordered keys. Ids follow key order, so the
    /// smallest key gets colour 0. Returns the colouring and the key of each id.
    pub fn from_keys<K: Ord + Clone>(g: &Graph, keys: &[K]) -> Result<(Self, Vec<K>)> {
        let mut ids: BTreeMap<&K, usize> = keys.iter().map(|k| (k, 0)).collect();
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        let colours = keys.iter().map(|k| ids[k]).collect();
        let palette = ids.keys().map(|&k| k.clone()).collect();
        Ok((EdgeColouring::new(g, colours)?, palette))
    }

    /// Colours each edge `uv` by `a_u·a_v`. Proper whenever no label is zero.
    pub fn by_products(g: &Graph, l: &Labeling) -> Result<(Self, Vec<Rational>)> {
        check_labeling(g, l)?;
        let keys: Vec<Rational> = g.edges().iter().map(|&(u, v)| l.get(u) * l.get(v)).collect();
        EdgeColouring::from_keys(g, &keys)
    }

    pub fn colour(&self, edge: usize) -> usize {
        self.colours[edge]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// One more than the largest colour id.
    pub fn palette_size(&self) -> usize {
        self.palette
    }

    /// Number of colours that actually occur.
    pub fn colours_present(&self) -> usize {
        let mut seen = vec![false; self.palette];
        self.colours.iter().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&b| b).count()
    }
}

pub(crate) fn check_labeling(g: &Graph, l: &Labeling) -> Result<()> {
    if l.len() != g.vertex_count() {
        return Err(Error::validation(format!(
            "labeling has {} values for {} vertices",
            l.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Edges picked by [`greedy_colour_matching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourMatching {
    /// Indices into `g.edges()`, in selection order.
    pub edges: Vec<usize>,
    /// Colour ids of the selected classes, in selection order.
    pub colours: Vec<usize>,
    /// The number of edges the loop aimed for.
    pub target: usize,
}

impl ColourMatching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Extracts a matching from few colour classes: repeatedly take every
/// remaining edge of the most frequent colour (lowest id on ties), delete
/// all edges touching them, and stop once `⌈|E|/(4Δ)⌉` edges are taken.
///
/// With `k` colours present this uses at most `⌈k/(2Δ)⌉` classes.
pub fn greedy_colour_matching(g: &Graph, c: &EdgeColouring) -> Result<ColourMatching> {
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(ColourMatching {
            edges: Vec::new(),
            colours: Vec::new(),
            target: 0,
        });
    }
    let target = g.edge_count().div_ceil(4 * delta);
    greedy_until(g, c, target)
}

/// The selection loop of [`greedy_colour_matching`] with an explicit target.
pub(crate) fn greedy_until(g: &Graph, c: &EdgeColouring, target: usize) -> Result<ColourMatching> {
    if c.colours.len() != g.edge_count() {
        return Err(Error::validation("colouring does not match the graph"));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    let mut by_colour: Vec<Vec<usize>> = vec![Vec::new(); c.palette];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
        by_colour[c.colours[e]].push(e);
    }
    let mut count: Vec<usize> = by_colour.iter().map(Vec::len).collect();
    let mut alive = vec![true; g.edge_count()];
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        count.iter().enumerate().filter(|(_, &n)| n > 0).map(|(col, &n)| (n, Reverse(col))).collect();

    let mut edges = Vec::new();
    let mut colours = Vec::new();
    while edges.len() < target {
        let Some((n, Reverse(col))) = heap.pop() else {
            break;
        };
        if n != count[col] || n == 0 {
            continue;
        }
        colours.push(col);
        let chosen: Vec<usize> = by_colour[col].iter().copied().filter(|&e| alive[e]).collect();
        for e in chosen {
            if !alive[e] {
                continue;
            }
            edges.push(e);
            let (u, v) = g.edges()[e];
            for &f in incident[u].iter().chain(&incident[v]) {
                if alive[f] {
                    alive[f] = false;
                    let fc = c.colours[f];
                    count[fc] -= 1;
                    if count[fc] > 0 && fc != col {
                        heap.push((count[fc], Reverse(fc)));
                    }
                }
            }
        }
    }
    Ok(ColourMatching { edges, colours, target })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn improper_rejected() {
        let g = Graph::path(3);
        assert!(matches!(EdgeColouring::new(&g, vec![0, 0]), Err(Error::Validation(_))));
        assert!(EdgeColouring::new(&g, vec![0]).is_err());
        let l = Labeling::from_integers([1, 0, 2]).unwrap();
        assert!(EdgeColouring::by_products(&g, &l).is_err());
    }

    #[test]
    fn single_colour_matching() {
        let g = Graph::matching(4);
        let c = EdgeColouring::new(&g, vec![0; 4]).unwrap();
        let m = greedy_colour_matching(&g, &c).unwrap();
        assert_eq!(m.edges, vec![0, 1, 2, 3]);
        assert_eq!(m.colours, vec![0]);
        assert_eq!(m.target, 1);
    }

    #[test]
    fn triangle_three_colours() {
        let g = Graph::cycle(3);
        let c = EdgeColouring::new(&g, vec![2, 1, 0]).unwrap();
        let m = greedy_colour_matching(&g, &c).unwrap();
        assert_eq!(m.edges, vec![2]);
        assert_eq!(m.colours, vec![0]);
    }

    #[test]
    fn most_used_colour_first() {
        // path 0-1-2-3-4-5 coloured 0,1,0,1,2 ; colour 0 and 1 both have two edges
        let g = Graph::path(6);
        let c = EdgeColouring::new(&g, vec![0, 1, 0, 1, 2]).unwrap();
        let m = greedy_until(&g, &c, 3).unwrap();
        assert_eq!(m.colours, vec![0, 2]);
        assert_eq!(m.edges, vec![0, 2, 4]);
    }

    #[test]
    fn keys_and_products() {
        let g = Graph::complete(4);
        let l = Labeling::from_integers([1, 2, 3, 6]).unwrap();
        let (c, palette) = EdgeColouring::by_products(&g, &l).unwrap();
        // products 2,3,6,6,12,18: edges (0,3) and (1,2) share product 6
        assert_eq!(palette.len(), 5);
        assert_eq!(c.colour(2), c.colour(3));
        assert_eq!(c.colours_present(), 5);
        let m = greedy_colour_matching(&g, &c).unwrap();
        assert_eq!(m.colours, vec![2]);
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(3);
        let c = EdgeColouring::new(&g, vec![]).unwrap();
        assert!(greedy_colour_matching(&g, &c).unwrap().is_empty());
    }
}
