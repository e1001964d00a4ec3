use std::collections::HashMap;
use std::fmt;

use super::{IntegerRing, SparseMatrix};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::sing::{is_degenerate, TruncatedSimplicialSet};

/// Free chain groups `C_0, ..., C_top` with boundary maps `∂_n: C_n -> C_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[n]` is `∂_n`; `∂_0` is the empty map to the zero group.
    boundaries: Vec<SparseMatrix>,
    /// Homology is meaningful only in degrees below this bound, when the
    /// complex was cut off at a dimension bound.
    trusted_below: Option<usize>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>, trusted_below: Option<usize>) -> Result<Self> {
        if boundaries.len() != ranks.len() {
            return Err(Error::Invalid("one boundary matrix per degree expected".into()));
        }
        for (n, d) in boundaries.iter().enumerate() {
            let rows = if n == 0 { 0 } else { ranks[n - 1] };
            if d.cols() != ranks[n] || d.rows() != rows {
                return Err(Error::Invalid(format!("boundary in degree {n} has the wrong shape")));
            }
        }
        Ok(ChainComplex {
            ranks,
            boundaries,
            trusted_below,
        })
    }

    pub fn empty() -> Self {
        ChainComplex {
            ranks: Vec::new(),
            boundaries: Vec::new(),
            trusted_below: None,
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    pub fn boundary(&self, n: usize) -> Option<&SparseMatrix> {
        self.boundaries.get(n)
    }

    pub fn trusted_below(&self) -> Option<usize> {
        self.trusted_below
    }

    /// `∂_{n-1} ∂_n = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        (2..self.boundaries.len()).all(|n| self.boundaries[n - 1].product_is_zero(&self.boundaries[n]))
    }
}

/// Standard oriented chains of a simplicial complex, simplices in their
/// stored order with vertices ascending.
pub fn complex_chains(complex: &SimplicialComplex) -> ChainComplex {
    let top = match complex.dim() {
        Some(d) => d,
        None => return ChainComplex::empty(),
    };
    let mut ranks = Vec::with_capacity(top + 1);
    let mut boundaries = Vec::with_capacity(top + 1);
    let mut previous: HashMap<&[usize], u32> = HashMap::new();
    for n in 0..=top {
        let layer = complex.simplices(n);
        ranks.push(layer.len());
        let columns = layer
            .iter()
            .map(|s| {
                if n == 0 {
                    return Vec::new();
                }
                (0..=n)
                    .map(|i| {
                        let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
                        (previous[face.as_slice()], if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(if n == 0 { 0 } else { ranks[n - 1] }, columns));
        previous = layer.iter().enumerate().map(|(k, s)| (s.as_slice(), k as u32)).collect();
    }
    ChainComplex {
        ranks,
        boundaries,
        trusted_below: complex.truncated_at(),
    }
}

/// Normalized chains: nondegenerate simplices as basis, alternating face
/// sums with degenerate faces dropped.
pub fn normalized_chains(s: &TruncatedSimplicialSet) -> ChainComplex {
    let top = s.dim_bound();
    let mut ranks = Vec::with_capacity(top + 1);
    let mut boundaries = Vec::with_capacity(top + 1);
    let mut previous_pos: Vec<u32> = Vec::new();
    for n in 0..=top {
        let nondeg = s.nondegenerate(n);
        let mut pos = vec![u32::MAX; s.len(n)];
        for (k, &idx) in nondeg.iter().enumerate() {
            pos[idx] = k as u32;
        }
        let columns = nondeg
            .iter()
            .map(|&idx| {
                if n == 0 {
                    return Vec::new();
                }
                let sigma = s.simplex(n, idx);
                let mut col = Vec::with_capacity(n + 1);
                let mut face = Vec::with_capacity(n);
                for i in 0..=n {
                    face.clear();
                    face.extend(sigma.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v));
                    if is_degenerate(&face) {
                        continue;
                    }
                    let row = previous_pos[s.index_of(&face).expect("faces are stored")];
                    col.push((row, if i % 2 == 0 { 1 } else { -1 }));
                }
                col
            })
            .collect();
        ranks.push(nondeg.len());
        boundaries.push(SparseMatrix::from_columns(if n == 0 { 0 } else { ranks[n - 1] }, columns));
        previous_pos = pos;
    }
    ChainComplex {
        ranks,
        boundaries,
        trusted_below: Some(top),
    }
}

/// `H_k ≅ Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup<T> {
    pub degree: usize,
    pub betti: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<T>,
    /// False in degrees at or above a truncation bound.
    pub trusted: bool,
}

impl<T: IntegerRing> HomologyGroup<T> {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Same group, ignoring the trust flag.
    pub fn same_group(&self, other: &Self) -> bool {
        self.betti == other.betti && self.torsion == other.torsion
    }
}

impl<T: IntegerRing> fmt::Display for HomologyGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" ⊕ ") };
        write!(f, "H_{} = {}", self.degree, body)?;
        if !self.trusted {
            write!(f, " (untrusted: beyond truncation)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult<T> {
    pub groups: Vec<HomologyGroup<T>>,
}

impl<T: IntegerRing> HomologyResult<T> {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Equal groups in every degree, ignoring trust flags.
    pub fn same_groups(&self, other: &Self) -> bool {
        self.groups.len() == other.groups.len() && self.groups.iter().zip(&other.groups).all(|(a, b)| a.same_group(b))
    }
}

impl<T: IntegerRing> fmt::Display for HomologyResult<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

fn compute<T: IntegerRing>(c: &ChainComplex, up_to: usize) -> HomologyResult<T> {
    let top = c.top_degree();
    // factors[n]: invariant factors of ∂_n, for the degrees needed.
    let needed = top.map_or(0, |t| t.min(up_to + 1));
    let factors: Vec<Vec<T>> = (0..=needed)
        .map(|n| match c.boundary(n) {
            Some(d) if n > 0 => d.invariant_factors::<T>(),
            _ => Vec::new(),
        })
        .collect();
    let groups = (0..=up_to)
        .map(|k| {
            let rank = c.ranks.get(k).copied().unwrap_or(0);
            let out = factors.get(k).map_or(0, Vec::len);
            let incoming = factors.get(k + 1).map(Vec::as_slice).unwrap_or(&[]);
            HomologyGroup {
                degree: k,
                betti: rank - out - incoming.len(),
                torsion: incoming.iter().filter(|t| !t.is_one()).cloned().collect(),
                trusted: c.trusted_below.is_none_or(|b| k < b),
            }
        })
        .collect();
    HomologyResult { groups }
}

/// Homology in degrees `0..=up_to`, all of which must be trustworthy.
pub fn homology<T: IntegerRing>(c: &ChainComplex, up_to: usize) -> Result<HomologyResult<T>> {
    if let Some(bound) = c.trusted_below {
        if up_to >= bound {
            return Err(Error::BeyondValidity { requested: up_to, bound });
        }
    }
    Ok(compute(c, up_to))
}

/// Homology in every stored degree, with untrusted degrees flagged.
pub fn homology_all<T: IntegerRing>(c: &ChainComplex) -> HomologyResult<T> {
    match c.top_degree() {
        Some(t) => compute(c, t),
        None => HomologyResult { groups: Vec::new() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, order_complex};
    use crate::guard::Guards;
    use crate::hom::hom_poset;
    use crate::sing::sing_truncated;
    use crate::standard::{complete_graph, cycle, sigma};
    use num_bigint::BigInt;

    type H = HomologyResult<BigInt>;

    fn g() -> Guards {
        Guards::default()
    }

    fn render(h: &H) -> Vec<String> {
        h.groups.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn full_triangle() {
        let k = SimplicialComplex::from_simplices(vec!["0", "1", "2"], vec![vec![0, 1, 2]]).unwrap();
        let c = complex_chains(&k);
        assert_eq!(c.ranks(), &[3, 3, 1]);
        assert!(c.is_complex());
        let h: H = homology(&c, 2).unwrap();
        assert_eq!(render(&h), vec!["H_0 = Z", "H_1 = 0", "H_2 = 0"]);
    }

    #[test]
    fn circle_and_point() {
        let c4 = clique_complex(&cycle(4, true).unwrap(), &g()).unwrap();
        let h: H = homology(&complex_chains(&c4), 1).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 1]);
        let point = SimplicialComplex::from_simplices(vec!["p"], vec![vec![0]]).unwrap();
        let h: H = homology(&complex_chains(&point), 2).unwrap();
        assert_eq!(render(&h), vec!["H_0 = Z", "H_1 = 0", "H_2 = 0"]);
    }

    #[test]
    fn projective_plane_torsion() {
        // Six-vertex triangulation of RP^2.
        let faces = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 5, 1],
            vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 1], vec![4, 5, 2], vec![5, 1, 3],
        ];
        let k = SimplicialComplex::from_simplices((0..6).map(|i| i.to_string()).collect(), faces).unwrap();
        let h: H = homology(&complex_chains(&k), 2).unwrap();
        assert_eq!(render(&h), vec!["H_0 = Z", "H_1 = Z/2", "H_2 = 0"]);
    }

    #[test]
    fn empty_complexes() {
        let h: H = homology(&ChainComplex::empty(), 1).unwrap();
        assert!(h.groups.iter().all(HomologyGroup::is_zero));
        let s = sing_truncated(&sigma(2, 0).unwrap(), &complete_graph(2).unwrap(), 2, &g()).unwrap();
        let h: H = homology(&normalized_chains(&s), 1).unwrap();
        assert!(h.groups.iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn normalized_chains_of_point_in_edge() {
        let s = sing_truncated(&sigma(2, 0).unwrap(), &sigma(2, 1).unwrap(), 2, &g()).unwrap();
        let c = normalized_chains(&s);
        assert_eq!(c.ranks(), &[2, 2, 2]);
        assert!(c.is_complex());
        let h: H = homology(&c, 1).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0]);
        assert!(matches!(homology::<BigInt>(&c, 2), Err(Error::BeyondValidity { requested: 2, bound: 2 })));
        assert!(!homology_all::<BigInt>(&c).groups[2].trusted);
    }

    #[test]
    fn hom_k2_k3_both_pipelines() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let poset_side: H = homology(&complex_chains(&order_complex(&hom_poset(&k2, &k3, &g()).unwrap(), &g()).unwrap()), 1).unwrap();
        assert_eq!(poset_side.betti_numbers(), vec![1, 1]);
        let s = sing_truncated(&k2, &k3, 3, &g()).unwrap();
        let c = normalized_chains(&s);
        assert!(c.is_complex());
        let sing_side: H = homology(&c, 2).unwrap();
        assert_eq!(render(&sing_side), vec!["H_0 = Z", "H_1 = Z", "H_2 = 0"]);
    }
}
