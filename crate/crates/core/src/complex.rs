//! Abstract simplicial complexes: clique complexes of r-sets and order
//! complexes of posets.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::guard::{Budget, Guards};
use crate::hom::{hom_poset, HomPoset};
use crate::poset::{FinitePoset, PosetMap};
use crate::rset::{all_tuples_over, RSet};
use crate::standard;

/// A finite abstract simplicial complex. Simplices are sorted vertex-index
/// lists, grouped by dimension and sorted lexicographically within each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    by_dim: Vec<Vec<Vec<usize>>>,
    lookup: HashSet<Vec<usize>>,
    /// `Some(d)` when only simplices of dimension `<= d` were generated.
    truncated_at: Option<usize>,
}

impl SimplicialComplex {
    /// The smallest complex containing `simplices`.
    pub fn from_simplices<S: Into<String>>(labels: Vec<S>, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut all: HashSet<Vec<usize>> = HashSet::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            if let Some(&bad) = s.iter().find(|&&v| v >= labels.len()) {
                return Err(Error::ImageOutOfRange {
                    index: bad,
                    size: labels.len(),
                });
            }
            if s.len() > 20 {
                return Err(Error::Invalid(format!("simplex with {} vertices is too large", s.len())));
            }
            if all.contains(&s) {
                continue;
            }
            let k = s.len();
            for mask in 1u32..(1 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                all.insert(face);
            }
        }
        Ok(Self::from_closed(labels, all.into_iter().collect(), None))
    }

    fn from_closed(labels: Vec<String>, simplices: Vec<Vec<usize>>, truncated_at: Option<usize>) -> Self {
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for s in simplices {
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        for layer in &mut by_dim {
            layer.sort_unstable();
        }
        let lookup = by_dim.iter().flatten().cloned().collect();
        SimplicialComplex {
            labels,
            by_dim,
            lookup,
            truncated_at,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dimension of the largest stored simplex, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Every simplex, by dimension then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.by_dim.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.lookup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lookup.is_empty()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.lookup.contains(simplex)
    }

    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Simplices not properly contained in another simplex.
    pub fn maximal_simplices(&self) -> Vec<&Vec<usize>> {
        self.iter()
            .filter(|s| {
                let next = self.simplices(s.len());
                !next.iter().any(|t| s.iter().all(|v| t.contains(v)))
            })
            .collect()
    }

    /// The face poset: all simplices ordered by inclusion.
    pub fn face_poset(&self) -> FinitePoset<Vec<usize>> {
        FinitePoset::from_order_unchecked(self.iter().cloned().collect(), |a, b| {
            a.iter().all(|v| b.contains(v))
        })
    }
}

/// Whether `clique ∪ {v}` is a clique, given that `clique` is one.
fn extends_clique(x: &RSet, clique: &[usize], v: usize) -> bool {
    let mut members = clique.to_vec();
    members.push(v);
    let mut buf = vec![v; x.arity()];
    all_tuples_over(&members, &mut buf, 0, &mut |t| !t.contains(&v) || x.contains(t))
}

/// The clique complex `Cl(x)`: nonempty vertex sets `A` with `A^r ⊆ R(x)`.
pub fn clique_complex(x: &RSet, guards: &Guards) -> Result<SimplicialComplex> {
    build_clique_complex(x, None, guards)
}

/// `Cl(x)` restricted to dimensions `<= max_dim`.
pub fn clique_complex_truncated(x: &RSet, max_dim: usize, guards: &Guards) -> Result<SimplicialComplex> {
    build_clique_complex(x, Some(max_dim), guards)
}

fn build_clique_complex(x: &RSet, max_dim: Option<usize>, guards: &Guards) -> Result<SimplicialComplex> {
    let looped: Vec<usize> = (0..x.len()).filter(|&v| x.has_loop(v)).collect();
    let mut budget = Budget::cells(guards);
    let mut out = Vec::new();
    let mut current = Vec::new();
    clique_rec(x, &looped, 0, max_dim, &mut current, &mut out, &mut budget)?;
    let truncated = max_dim.filter(|&d| out.iter().any(|s: &Vec<usize>| s.len() == d + 1));
    Ok(SimplicialComplex::from_closed(x.names().to_vec(), out, truncated))
}

fn clique_rec(
    x: &RSet,
    candidates: &[usize],
    start: usize,
    max_dim: Option<usize>,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<()> {
    if max_dim.is_some_and(|d| current.len() > d) {
        return Ok(());
    }
    for k in start..candidates.len() {
        let v = candidates[k];
        if extends_clique(x, current, v) {
            budget.tick()?;
            current.push(v);
            out.push(current.clone());
            clique_rec(x, candidates, k + 1, max_dim, current, out, budget)?;
            current.pop();
        }
    }
    Ok(())
}

/// The order complex `Δ(P)`: nonempty chains, as sorted element indices.
pub fn order_complex<E>(poset: &FinitePoset<E>, guards: &Guards) -> Result<SimplicialComplex> {
    build_order_complex(poset, None, guards)
}

/// `Δ(P)` restricted to chains of at most `max_dim + 1` elements.
pub fn order_complex_truncated<E>(
    poset: &FinitePoset<E>,
    max_dim: usize,
    guards: &Guards,
) -> Result<SimplicialComplex> {
    build_order_complex(poset, Some(max_dim), guards)
}

fn build_order_complex<E>(
    poset: &FinitePoset<E>,
    max_dim: Option<usize>,
    guards: &Guards,
) -> Result<SimplicialComplex> {
    let mut budget = Budget::cells(guards);
    let mut out = Vec::new();
    let mut chain = Vec::new();
    for i in 0..poset.len() {
        chain.push(i);
        chain_rec(poset, max_dim, &mut chain, &mut out, &mut budget)?;
        chain.pop();
    }
    let truncated = max_dim.filter(|&d| out.iter().any(|s: &Vec<usize>| s.len() == d + 1));
    let labels = (0..poset.len()).map(|i| i.to_string()).collect();
    Ok(SimplicialComplex::from_closed(labels, out, truncated))
}

fn chain_rec<E>(
    poset: &FinitePoset<E>,
    max_dim: Option<usize>,
    chain: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let mut sorted = chain.clone();
    sorted.sort_unstable();
    out.push(sorted);
    if max_dim.is_some_and(|d| chain.len() > d) {
        return Ok(());
    }
    let top = *chain.last().unwrap();
    let above: Vec<usize> = poset.above(top).collect();
    for j in above {
        chain.push(j);
        chain_rec(poset, max_dim, chain, out, budget)?;
        chain.pop();
    }
    Ok(())
}

/// The identification of `Hom(Σ_0, x)` with the face poset of `Cl(x)` via
/// `η ↦ η(0)`.
#[derive(Clone, Debug)]
pub struct FacePosetIdentification {
    pub hom: HomPoset,
    pub faces: FinitePoset<Vec<usize>>,
    pub bijection: PosetMap,
    pub is_isomorphism: bool,
}

pub fn face_poset_identification(x: &RSet, guards: &Guards) -> Result<FacePosetIdentification> {
    let point = standard::sigma(x.arity(), 0)?;
    let hom = hom_poset(&point, x, guards)?;
    let faces = clique_complex(x, guards)?.face_poset();
    let bijection = PosetMap::induced(&hom, &faces, |eta| eta.value(0).collect::<Vec<_>>())?;
    let mut hit = vec![false; faces.len()];
    let mut injective = true;
    for &j in bijection.images() {
        injective &= !std::mem::replace(&mut hit[j], true);
    }
    let bijective = injective && hom.len() == faces.len();
    let order_iso = bijective
        && (0..hom.len()).all(|i| {
            (0..hom.len()).all(|j| hom.leq(i, j) == faces.leq(bijection.apply(i), bijection.apply(j)))
        });
    Ok(FacePosetIdentification {
        hom,
        faces,
        bijection,
        is_isomorphism: order_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete_graph, cycle, sigma};

    #[test]
    fn closure_under_faces() {
        let k = SimplicialComplex::from_simplices(vec!["a", "b", "c"], vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(k.counts(), vec![3, 3, 1]);
        assert_eq!(k.dim(), Some(2));
        assert_eq!(k.maximal_simplices(), vec![&vec![0, 1, 2]]);
    }

    #[test]
    fn clique_complex_examples() {
        let g = Guards::default();
        assert!(clique_complex(&complete_graph(2).unwrap(), &g).unwrap().is_empty());
        let c4 = clique_complex(&cycle(4, true).unwrap(), &g).unwrap();
        assert_eq!(c4.counts(), vec![4, 4]);
        assert!(!c4.contains(&[0, 2]));
        let full = clique_complex(&sigma(2, 2).unwrap(), &g).unwrap();
        assert_eq!(full.len(), 7);
    }

    #[test]
    fn clique_complex_ternary_is_not_pairwise() {
        // Boundary of a triangle at arity 3: every pair is a clique, the
        // triple is not.
        let x = standard::simplicial_complex(3, &standard::triangle_boundary()).unwrap();
        let cl = clique_complex(&x, &Guards::default()).unwrap();
        assert_eq!(cl.counts(), vec![3, 3]);
    }

    #[test]
    fn order_complex_examples() {
        let g = Guards::default();
        let antichain = FinitePoset::new(vec![0, 1, 2], |a, b| a == b).unwrap();
        assert_eq!(order_complex(&antichain, &g).unwrap().counts(), vec![3]);
        let chain = FinitePoset::new(vec![0, 1, 2], |a, b| a <= b).unwrap();
        assert_eq!(order_complex(&chain, &g).unwrap().counts(), vec![3, 3, 1]);
        let t = order_complex_truncated(&chain, 1, &g).unwrap();
        assert_eq!(t.counts(), vec![3, 3]);
        assert_eq!(t.truncated_at(), Some(1));
    }

    #[test]
    fn hom_k2_k3_order_complex_is_a_twelve_gon() {
        let g = Guards::default();
        let hom = hom_poset(&complete_graph(2).unwrap(), &complete_graph(3).unwrap(), &g).unwrap();
        let k = order_complex(&hom, &g).unwrap();
        assert_eq!(k.counts(), vec![12, 12]);
    }

    #[test]
    fn face_poset_identification_examples() {
        let g = Guards::default();
        let s2 = face_poset_identification(&sigma(2, 2).unwrap(), &g).unwrap();
        assert_eq!(s2.hom.len(), 7);
        assert!(s2.is_isomorphism);
        let k2 = face_poset_identification(&complete_graph(2).unwrap(), &g).unwrap();
        assert!(k2.hom.is_empty() && k2.faces.is_empty() && k2.is_isomorphism);
        let c4 = face_poset_identification(&cycle(4, true).unwrap(), &g).unwrap();
        assert_eq!(c4.faces.len(), 8);
        assert!(c4.is_isomorphism);
    }
}
