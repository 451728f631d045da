//! From curve points to translate families, and from families to matchings
//! with few sums and products.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use super::{CurvePoint, SquareTriple, TripleModel};
use crate::arith::{perfect_square_root, square_clearing_factor, Integer, Rational};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Labeling};
use crate::translates::TranslateFamily;

/// Output of [`translate_family_from_curve`].
#[derive(Debug, Clone)]
pub struct CurveFamily {
    /// Translates in the original (rational) coordinates.
    pub raw: TranslateFamily,
    /// The same family scaled by the least `L` making every entry integral.
    pub cleared: TranslateFamily,
    /// Multiples `k` of the generator that produced a new translate.
    pub multiples: Vec<i64>,
    /// Multiples that were skipped, with the reason.
    pub skipped: Vec<(i64, String)>,
    /// Whether `count` distinct translates were obtained.
    pub complete: bool,
}

/// Maps `k·generator` for `k = 1..=count` to translates of the triple.
///
/// Degenerate multiples are skipped and recorded; duplicates are dropped.
/// When fewer than `count` translates survive, the family is returned with
/// `complete = false`.
pub fn translate_family_from_curve(
    triple: &SquareTriple,
    generator: &CurvePoint,
    count: usize,
) -> Result<CurveFamily> {
    if count == 0 {
        return Err(Error::domain("count must be positive"));
    }
    let model = TripleModel::new(triple.clone())?;
    let curve = model.curve();
    if !curve.contains(generator) {
        return Err(Error::validation(format!("{generator} is not on the curve")));
    }
    if curve.is_torsion(generator)? {
        return Err(Error::domain(format!("{generator} is a torsion point")));
    }

    let mut translates = Vec::new();
    let mut multiples = Vec::new();
    let mut skipped = Vec::new();
    let mut point = CurvePoint::Infinity;
    for k in 1..=count as i64 {
        point = curve.add(&point, generator)?;
        match model.point_to_translate(&point) {
            Ok(tr) if translates.contains(&tr.x) => skipped.push((k, "duplicate translate".to_string())),
            Ok(tr) => {
                translates.push(tr.x);
                multiples.push(k);
            }
            Err(Error::Degenerate(msg)) => skipped.push((k, msg)),
            Err(e) => return Err(e),
        }
    }
    let complete = translates.len() == count;
    let raw = TranslateFamily::new(triple.values().to_vec(), translates, Integer::from(1))?;
    let cleared = raw.clear_denominators();
    Ok(CurveFamily {
        raw,
        cleared,
        multiples,
        skipped,
        complete,
    })
}

/// A matching whose labels realize few sums and products.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyMatching {
    #[serde(skip)]
    pub graph: Graph,
    #[serde(skip)]
    pub labeling: Labeling,
    #[serde(serialize_with = "crate::serial::ints")]
    pub sums: Vec<Integer>,
    #[serde(serialize_with = "crate::serial::ints")]
    pub products: Vec<Integer>,
    /// Extra factor applied to the family (1 or 4) to make all labels integers.
    pub extra_scale: u32,
    /// Candidate sums rejected by the greedy step because their labels
    /// collided with labels already in use.
    #[serde(serialize_with = "crate::serial::ints")]
    pub rejected_sums: Vec<Integer>,
}

impl FamilyMatching {
    /// Edge `i` joins vertices `2i` and `2i + 1`; this yields its label pair.
    pub fn pairs(&self) -> Vec<(Integer, Integer)> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| (self.labeling.get(u).to_integer(), self.labeling.get(v).to_integer()))
            .collect()
    }
}

fn to_integer(q: &Rational) -> Integer {
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Builds a matching with `num_sums · num_products` edges, at most
/// `num_sums` distinct sums and at most `num_products` distinct products.
///
/// Write the family as `X ⊕ Y ⊆ squares` with integer `X`, `Y`. For `s² ∈ X`
/// and `y ∈ Y` the pair `((s − z)/2, (s + z)/2)` with `z = √(s² + y)` has sum
/// `s` and product `−y/4`. Fixing `num_products` values of `y`, every `s`
/// yields a block of pairs; blocks are chosen greedily so that no label is
/// reused.
///
/// If some base element is not a perfect square, the family is shifted by
/// its first translate `x₀` (base `a + x₀`, translates `x − x₀`). If a label
/// would be a half-integer, everything is multiplied by 4.
pub fn matching_from_family(
    family: &TranslateFamily,
    num_sums: usize,
    num_products: usize,
) -> Result<FamilyMatching> {
    if num_sums == 0 || num_products == 0 {
        return Err(Error::domain("num_sums and num_products must be positive"));
    }
    if !family.is_integral() {
        return Err(Error::validation(
            "family must be integral; clear denominators first",
        ));
    }
    let base: Vec<Integer> = family.base().iter().map(to_integer).collect();
    let translates: Vec<Integer> = family.translates().iter().map(to_integer).collect();

    let (xs, ys) = if base.iter().all(|a| perfect_square_root(a).is_some()) {
        (base, translates)
    } else {
        let Some(x0) = translates.first().cloned() else {
            return Err(Error::size("no translates to shift by"));
        };
        (
            base.iter().map(|a| a + &x0).collect(),
            translates.iter().map(|x| x - &x0).collect(),
        )
    };

    let ys: Vec<Integer> = ys.into_iter().filter(|y| !y.is_zero()).take(num_products).collect();
    if ys.len() < num_products {
        return Err(Error::size(format!(
            "need {num_products} nonzero translates, family has {}",
            ys.len()
        )));
    }
    if xs.len() < num_sums {
        return Err(Error::size(format!(
            "need {num_sums} base elements, family has {}",
            xs.len()
        )));
    }
    let mut roots: Vec<Integer> = xs
        .iter()
        .map(|x| perfect_square_root(x).ok_or_else(|| Error::Internal(format!("{x} is not a square"))))
        .collect::<Result<_>>()?;
    let mut ys = ys;

    let blocks_of = |roots: &[Integer], ys: &[Integer]| -> Result<Vec<Vec<Integer>>> {
        roots
            .iter()
            .map(|s| {
                ys.iter()
                    .map(|y| {
                        let v = s * s + y;
                        perfect_square_root(&v)
                            .ok_or_else(|| Error::Internal(format!("{v} is not a square")))
                    })
                    .collect()
            })
            .collect()
    };
    let mut zs = blocks_of(&roots, &ys)?;
    let four = Integer::from(4);
    let needs_scaling = ys.iter().any(|y| (y % &four) != Integer::zero())
        || roots
            .iter()
            .zip(&zs)
            .any(|(s, row)| row.iter().any(|z| ((s - z) % 2u32) != Integer::zero()));
    let extra_scale = if needs_scaling {
        roots.iter_mut().for_each(|s| *s *= 2u32);
        ys.iter_mut().for_each(|y| *y *= 4u32);
        zs.iter_mut().flatten().for_each(|z| *z *= 2u32);
        4
    } else {
        1
    };

    let mut used: BTreeSet<Integer> = BTreeSet::new();
    let mut chosen: Vec<(Integer, Vec<(Integer, Integer)>)> = Vec::new();
    let mut rejected = Vec::new();
    for (s, row) in roots.iter().zip(&zs) {
        if chosen.len() == num_sums {
            break;
        }
        let pairs: Vec<(Integer, Integer)> = row
            .iter()
            .map(|z| ((s - z) / 2u32, (s + z) / 2u32))
            .collect();
        let labels: BTreeSet<Integer> = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        if labels.len() == 2 * num_products && labels.is_disjoint(&used) {
            used.extend(labels);
            chosen.push((s.clone(), pairs));
        } else {
            rejected.push(s.clone());
        }
    }
    if chosen.len() < num_sums {
        return Err(Error::size(format!(
            "greedy selection found {} of {num_sums} compatible sums",
            chosen.len()
        )));
    }

    let mut values = Vec::with_capacity(2 * num_sums * num_products);
    for (_, pairs) in &chosen {
        for (a, b) in pairs {
            values.push(Rational::from_integer(a.clone()));
            values.push(Rational::from_integer(b.clone()));
        }
    }
    let products = ys.iter().map(|y| -(y / &four)).collect();
    Ok(FamilyMatching {
        graph: Graph::matching(num_sums * num_products),
        labeling: Labeling::new(values)?,
        sums: chosen.into_iter().map(|(s, _)| s).collect(),
        products,
        extra_scale,
        rejected_sums: rejected,
    })
}

/// The least `L` with `L²·q` integral for every entry of the family.
pub fn clearing_factor(family: &TranslateFamily) -> Integer {
    square_clearing_factor(family.base().iter().chain(family.translates()))
}
