use std::collections::BTreeSet;

use serde::Serialize;

use super::{Graph, Labeling};
use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};

/// Sum set and product set of a labeling along the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProductProfile<T: Ord = Rational> {
    pub sum_set: BTreeSet<T>,
    pub product_set: BTreeSet<T>,
}

impl<T: Ord> SumProductProfile<T> {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (T, T)>) -> Self {
        let mut sum_set = BTreeSet::new();
        let mut product_set = BTreeSet::new();
        for (s, p) in pairs {
            sum_set.insert(s);
            product_set.insert(p);
        }
        SumProductProfile { sum_set, product_set }
    }

    pub fn sum_count(&self) -> usize {
        self.sum_set.len()
    }

    pub fn product_count(&self) -> usize {
        self.product_set.len()
    }

    /// `max(|sums|, |products|)`.
    pub fn sp(&self) -> usize {
        self.sum_count().max(self.product_count())
    }
}

impl SumProductProfile<Rational> {
    pub fn summary(&self) -> ProfileSummary {
        ProfileSummary {
            sum_count: self.sum_count(),
            product_count: self.product_count(),
            sp: self.sp(),
            sums: self.sum_set.iter().map(format_rational).collect(),
            products: self.product_set.iter().map(format_rational).collect(),
        }
    }
}

/// Serializable view of a profile with values as decimal strings.
#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct ProfileSummary {
    pub sum_count: usize,
    pub product_count: usize,
    pub sp: usize,
    pub sums: Vec<String>,
    pub products: Vec<String>,
}

fn check_cover(g: &Graph, l: &Labeling) -> Result<()> {
    if l.len() < g.vertex_count() {
        return Err(Error::validation(format!(
            "labeling covers {} vertices, graph has {}",
            l.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Sum and product sets of `l` along the edges of `g`.
pub fn sp_profile(g: &Graph, l: &Labeling) -> Result<SumProductProfile> {
    check_cover(g, l)?;
    Ok(SumProductProfile::from_pairs(g.edges().iter().map(|&(u, v)| {
        let (a, b) = (l.get(u), l.get(v));
        (a + b, a * b)
    })))
}

/// Sum set of `l` along the edges of `g`.
pub fn sum_set(g: &Graph, l: &Labeling) -> Result<BTreeSet<Rational>> {
    check_cover(g, l)?;
    Ok(g.edges().iter().map(|&(u, v)| l.get(u) + l.get(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let p = sp_profile(&g, &Labeling::from_integers([1, 2]).unwrap()).unwrap();
        assert_eq!((p.sum_count(), p.product_count(), p.sp()), (1, 1, 1));
        assert_eq!(p.summary().sums, vec!["3"]);
        assert_eq!(p.summary().products, vec!["2"]);

        let p = sp_profile(&Graph::path(3), &Labeling::from_integers([1, 2, 3]).unwrap()).unwrap();
        assert_eq!(p.summary().sums, vec!["3", "5"]);
        assert_eq!(p.summary().products, vec!["2", "6"]);
        assert_eq!(p.sp(), 2);
    }

    #[test]
    fn labeling_must_cover_graph() {
        let err = sp_profile(&Graph::path(3), &Labeling::from_integers([1, 2]).unwrap());
        assert!(matches!(err, Err(Error::Validation(_))));
    }
}
