use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::graphs::{Graph, Labeling};

/// Largest `m` accepted by [`triangle_family`]; `C(m,3)` triangles are built.
pub const TRIANGLE_MAX_M: usize = 60;

/// `C(m,3)` disjoint triangles whose edge sums all lie in
/// `S = {2·4^i : 0 ≤ i < m}`.
///
/// For sums `s₁ < s₂ < s₃` the triangle is labelled
/// `(s₁+s₃−s₂)/2, (s₁+s₂−s₃)/2, (s₂+s₃−s₁)/2`, so its edges add up to
/// `s₁`, `s₂`, `s₃`.
///
/// Two labels `(a + b − c)/2` and `(d + e − f)/2` coincide only when
/// `a + b + f = d + e + c`. Each side is a sum of powers of 4 with at most
/// two equal terms, so base-4 digits never carry and the multisets agree,
/// which forces `c = f` and the same vertex. Plain powers of two do not
/// work: `2 + 16 − 8 = 4 + 8 − 2`.
pub fn triangle_family(m: usize) -> Result<(Graph, Labeling)> {
    if m < 3 {
        return Err(Error::domain(format!("m must be at least 3, got {m}")));
    }
    if m > TRIANGLE_MAX_M {
        return Err(Error::size(format!("m = {m} exceeds {TRIANGLE_MAX_M}")));
    }
    let sums: Vec<Integer> = (0..m).map(|i| Integer::from(2) << (2 * i)).collect();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let (s1, s2, s3) = (&sums[i], &sums[j], &sums[k]);
                let v = labels.len();
                // vertices a, b, c with a+b = s1, b+c = s2, a+c = s3
                labels.push((s1 + s3 - s2) / 2);
                labels.push((s1 + s2 - s3) / 2);
                labels.push((s2 + s3 - s1) / 2);
                edges.extend([(v, v + 1), (v + 1, v + 2), (v, v + 2)]);
            }
        }
    }
    let g = Graph::new(labels.len(), edges)?;
    let l = Labeling::from_integers(labels)?;
    Ok((g, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{odd_cycle_bound, sp_profile};

    #[test]
    fn smallest_family() {
        let (g, l) = triangle_family(3).unwrap();
        assert_eq!(g.edge_count(), 3);
        let values: Vec<i64> = l.values().iter().map(|q| q.to_integer().try_into().unwrap()).collect();
        assert_eq!(values, vec![13, -11, 19]);
        let p = sp_profile(&g, &l).unwrap();
        let sums: Vec<_> = p.sum_set.iter().map(|q| q.to_integer()).collect();
        assert_eq!(sums, [2, 8, 32].map(Integer::from));
    }

    #[test]
    fn six_sums() {
        let (g, l) = triangle_family(6).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (60, 60));
        assert_eq!(sp_profile(&g, &l).unwrap().sum_count(), 6);
        assert_eq!(odd_cycle_bound(&g, 3).unwrap(), 5);
    }

    #[test]
    fn powers_of_two_collide() {
        let label = |a: i64, b: i64, c: i64| (a + b - c) / 2;
        assert_eq!(label(2, 16, 8), label(4, 8, 2));
        for m in 3..=12 {
            let (g, l) = triangle_family(m).unwrap();
            assert_eq!(sp_profile(&g, &l).unwrap().sum_count(), m);
        }
    }

    #[test]
    fn bad_m() {
        assert!(matches!(triangle_family(2), Err(Error::Domain(_))));
        assert!(matches!(triangle_family(61), Err(Error::Size(_))));
    }
}
