//! Classical beat-point notions, implemented directly on the underlying
//! structures so that they can cross-check the r-set definition.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rset::RSet;
use crate::standard::check_preorder_matrix;

fn preorder_matrix(p: &RSet) -> Result<Vec<Vec<bool>>> {
    if p.arity() != 2 {
        return Err(Error::ArityMismatch {
            left: p.arity(),
            right: 2,
        });
    }
    let n = p.len();
    let mut rel = vec![vec![false; n]; n];
    for t in p.tuples() {
        rel[t[0]][t[1]] = true;
    }
    check_preorder_matrix(&rel)?;
    Ok(rel)
}

/// Whether `candidates` has a least element under `rel`.
fn has_minimum(rel: &[Vec<bool>], candidates: &[usize]) -> bool {
    candidates.iter().any(|&m| candidates.iter().all(|&z| rel[m][z]))
}

fn has_maximum(rel: &[Vec<bool>], candidates: &[usize]) -> bool {
    candidates.iter().any(|&m| candidates.iter().all(|&z| rel[z][m]))
}

/// Upper or lower beat point of a preorder: `P_{>x}` has a minimum or
/// `P_{<x}` has a maximum, where `P_{>x} = {y ≠ x : x ≤ y}`. On a poset this
/// is the usual strict upper set; on a preorder it also contains the
/// elements equivalent to `x`.
pub fn oracle_poset_beat(p: &RSet, x: usize) -> Result<bool> {
    let rel = preorder_matrix(p)?;
    if x >= rel.len() {
        return Err(Error::ImageOutOfRange { index: x, size: rel.len() });
    }
    let n = rel.len();
    let above: Vec<usize> = (0..n).filter(|&y| y != x && rel[x][y]).collect();
    let below: Vec<usize> = (0..n).filter(|&y| y != x && rel[y][x]).collect();
    Ok(has_minimum(&rel, &above) || has_maximum(&rel, &below))
}

/// `v` is dominated by some other vertex: every maximal simplex containing
/// `v` also contains that vertex (equivalently, the link of `v` is a cone).
pub fn oracle_complex_dominated(complex: &SimplicialComplex, v: usize, arity: usize) -> Result<bool> {
    if let Some(dim) = complex.dim() {
        if arity <= dim {
            return Err(Error::ComplexEncoding { dim, arity });
        }
    }
    if v >= complex.labels().len() || !complex.contains(&[v]) {
        return Ok(false);
    }
    let star: Vec<&Vec<usize>> = complex
        .maximal_simplices()
        .into_iter()
        .filter(|s| s.contains(&v))
        .collect();
    Ok((0..complex.labels().len()).any(|w| w != v && star.iter().all(|s| s.contains(&w))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{preorder, simplicial_complex};
    use crate::strong::beat_points;

    #[test]
    fn chain_and_antichain() {
        let chain = preorder(vec!["0", "1", "2"], &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(oracle_poset_beat(&chain, 0).unwrap());
        assert!(oracle_poset_beat(&chain, 2).unwrap());
        let anti = preorder(vec!["a", "b"], &[(0, 0), (1, 1)]).unwrap();
        assert!(!oracle_poset_beat(&anti, 0).unwrap());
        assert!(beat_points(&anti).is_empty());
    }

    #[test]
    fn literal_definition_on_orders() {
        // A substituted pair (y, x) must stay related whenever (x, x) is, so
        // in a preorder a witness has to be equivalent to x.
        let chain = preorder(vec!["0", "1", "2"], &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(beat_points(&chain).is_empty());
        let pair = preorder(vec!["a", "b"], &[(0, 0), (1, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(beat_points(&pair).len(), 2);
        assert!(oracle_poset_beat(&pair, 0).unwrap());
    }

    #[test]
    fn cone_over_triangle_boundary() {
        let c = SimplicialComplex::from_simplices(
            vec!["0", "1", "2", "v"],
            vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]],
        )
        .unwrap();
        for u in 0..3 {
            assert!(oracle_complex_dominated(&c, u, 3).unwrap());
        }
        assert!(!oracle_complex_dominated(&c, 3, 3).unwrap());
        let x = simplicial_complex(3, &c).unwrap();
        let beats: Vec<usize> = beat_points(&x).iter().map(|b| b.point).collect();
        assert!((0..3).all(|u| beats.contains(&u)));
        assert!(!beats.contains(&3));
    }

    #[test]
    fn encoding_guard() {
        let c = crate::standard::triangle_boundary();
        assert!(oracle_complex_dominated(&c, 0, 1).is_err());
        assert!(!oracle_complex_dominated(&c, 0, 3).unwrap());
    }
}
