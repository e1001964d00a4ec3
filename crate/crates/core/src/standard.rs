//! Standard families of r-sets. Vertices are named `0`, `1`, ... unless noted.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rset::RSet;

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn all_tuples(members: &[usize], arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(arity)];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                members.iter().map(move |&m| {
                    let mut t = t.clone();
                    t.push(m);
                    t
                })
            })
            .collect();
    }
    out
}

/// `Σ_n`: the set `{0, ..., n}` with the full relation `[n]^r`.
pub fn sigma(arity: usize, n: usize) -> Result<RSet> {
    let members: Vec<usize> = (0..=n).collect();
    RSet::from_indices(arity, numbered(n + 1), all_tuples(&members, arity))
}

/// `I_n`: vertices `{0, ..., n}` with relation `⋃_{1≤k≤n} {k-1, k}^r`.
/// `I_0` is a single vertex with empty relation.
pub fn interval(arity: usize, n: usize) -> Result<RSet> {
    let tuples = (1..=n).flat_map(|k| all_tuples(&[k - 1, k], arity));
    RSet::from_indices(arity, numbered(n + 1), tuples)
}

/// The loopless complete graph `K_n` as a 2-set.
pub fn complete_graph(n: usize) -> Result<RSet> {
    let tuples = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| vec![a, b]));
    RSet::from_indices(2, numbered(n), tuples)
}

/// The cycle graph `C_n` as a symmetric 2-set, optionally with a loop at
/// every vertex. `n` must be at least 3.
pub fn cycle(n: usize, loops: bool) -> Result<RSet> {
    if n < 3 {
        return Err(Error::Invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut tuples = Vec::new();
    for a in 0..n {
        let b = (a + 1) % n;
        tuples.push(vec![a, b]);
        tuples.push(vec![b, a]);
        if loops {
            tuples.push(vec![a, a]);
        }
    }
    RSet::from_indices(2, numbered(n), tuples)
}

/// The 2-set `(P, ≤)` of a preorder given by `leq` pairs. Reflexivity and
/// transitivity are checked, not completed.
pub fn preorder<S: Into<String>>(elements: Vec<S>, leq: &[(usize, usize)]) -> Result<RSet> {
    let names: Vec<String> = elements.into_iter().map(Into::into).collect();
    let n = names.len();
    let mut rel = vec![vec![false; n]; n];
    for &(a, b) in leq {
        if a >= n || b >= n {
            return Err(Error::ImageOutOfRange { index: a.max(b), size: n });
        }
        rel[a][b] = true;
    }
    check_preorder_matrix(&rel)?;
    let tuples = (0..n).flat_map(|a| {
        let row = rel[a].clone();
        (0..n).filter(move |&b| row[b]).map(move |b| vec![a, b])
    });
    RSet::from_indices(2, names, tuples)
}

pub(crate) fn check_preorder_matrix(rel: &[Vec<bool>]) -> Result<()> {
    for (a, row) in rel.iter().enumerate() {
        if !row[a] {
            return Err(Error::NotPreorder(format!("element {a} is not reflexive")));
        }
        for b in (0..rel.len()).filter(|&b| row[b]) {
            for c in 0..rel.len() {
                if rel[b][c] && !row[c] {
                    return Err(Error::NotPreorder(format!(
                        "{a} <= {b} <= {c} but not {a} <= {c}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A simplicial complex as an r-set: `(x_1, ..., x_r)` is related iff
/// `{x_1, ..., x_r}` is a simplex. Requires `arity > dim`, so that every
/// simplex occurs as the underlying set of some tuple.
pub fn simplicial_complex(arity: usize, complex: &SimplicialComplex) -> Result<RSet> {
    if let Some(dim) = complex.dim() {
        if arity <= dim {
            return Err(Error::ComplexEncoding { dim, arity });
        }
    }
    let mut tuples = Vec::new();
    for simplex in complex.iter() {
        for t in all_tuples(simplex, arity) {
            // Keep only tuples whose underlying set is exactly this simplex.
            if simplex.iter().all(|v| t.contains(v)) {
                tuples.push(t);
            }
        }
    }
    RSet::from_indices(arity, complex.labels().to_vec(), tuples)
}

/// The boundary of the 2-simplex on vertices `0, 1, 2`.
pub fn triangle_boundary() -> SimplicialComplex {
    SimplicialComplex::from_simplices(numbered(3), vec![vec![0, 1], vec![1, 2], vec![0, 2]])
        .expect("valid complex")
}
