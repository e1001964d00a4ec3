//! Multi-maps and the Hom complex, as a poset under pointwise inclusion.
//!
//! Value sets are bitmasks over the codomain's vertex order, so codomains are
//! limited to 64 vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::guard::{self, Budget, Guards};
use crate::maps::tuples_completed_at;
use crate::poset::{FinitePoset, PosetMap};
use crate::rset::{self, map_images, map_index, RMap, RSet};

/// An assignment of a nonempty vertex subset of the codomain to each domain
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiMap {
    values: Vec<u64>,
    codomain: usize,
}

pub type HomPoset = FinitePoset<MultiMap>;

fn check_codomain(y: &RSet) -> Result<()> {
    if y.len() > 64 {
        Err(Error::CodomainTooLarge(y.len()))
    } else {
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

impl MultiMap {
    /// Checked constructor.
    pub fn new(x: &RSet, y: &RSet, values: Vec<u64>) -> Result<Self> {
        if !is_multimap(x, y, &values)? {
            return Err(Error::NotAMultiMap);
        }
        Ok(MultiMap {
            values,
            codomain: y.len(),
        })
    }

    pub(crate) fn unchecked(values: Vec<u64>, codomain: usize) -> Self {
        MultiMap { values, codomain }
    }

    /// The singleton-valued multi-map `x ↦ {f(x)}`.
    pub fn from_rmap(f: &RMap) -> Self {
        MultiMap {
            values: f.images().iter().map(|&v| 1u64 << v).collect(),
            codomain: f.codomain_len(),
        }
    }

    /// The underlying map, if every value is a singleton.
    pub fn as_rmap(&self) -> Option<RMap> {
        self.values
            .iter()
            .map(|&m| (m.count_ones() == 1).then(|| m.trailing_zeros() as usize))
            .collect::<Option<Vec<_>>>()
            .map(|images| RMap::unchecked(images, self.codomain))
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, x: usize) -> impl Iterator<Item = usize> {
        bits(self.values[x])
    }

    pub fn domain_len(&self) -> usize {
        self.values.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain
    }

    /// Pointwise inclusion.
    pub fn leq(&self, other: &MultiMap) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(&a, &b)| a & !b == 0)
    }

    /// `Σ_x (|η(x)| - 1)`, always finite here.
    pub fn excess(&self) -> usize {
        self.values
            .iter()
            .map(|m| m.count_ones() as usize - 1)
            .sum()
    }

    /// Name-level view: for each domain vertex, its image names.
    pub fn named(&self, x: &RSet, y: &RSet) -> Vec<(String, Vec<String>)> {
        self.values
            .iter()
            .enumerate()
            .map(|(v, &m)| {
                (
                    x.name(v).to_string(),
                    bits(m).map(|w| y.name(w).to_string()).collect(),
                )
            })
            .collect()
    }
}

/// Whether `values` is a multi-map `x -> y`: every value nonempty and
/// `η(x_1) × ... × η(x_r) ⊆ R(y)` for each `(x_1, ..., x_r) ∈ R(x)`.
pub fn is_multimap(x: &RSet, y: &RSet, values: &[u64]) -> Result<bool> {
    check_codomain(y)?;
    if values.len() != x.len() {
        return Err(Error::NotTotal {
            expected: x.len(),
            got: values.len(),
        });
    }
    if let Some(&m) = values.iter().find(|&&m| m & !full_mask(y.len()) != 0) {
        return Err(Error::ImageOutOfRange {
            index: 63 - m.leading_zeros() as usize,
            size: y.len(),
        });
    }
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    if values.contains(&0) {
        return Ok(false);
    }
    let mut masks = vec![0; x.arity()];
    Ok(x.tuples().iter().all(|t| {
        for (slot, &v) in masks.iter_mut().zip(t) {
            *slot = values[v];
        }
        y.contains_product(&masks)
    }))
}

/// All multi-maps `x -> y`, in lexicographic order of their value masks.
pub fn enumerate_multimaps(x: &RSet, y: &RSet, guards: &Guards) -> Result<Vec<MultiMap>> {
    check_codomain(y)?;
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    if y.is_empty() {
        return Ok(if x.is_empty() {
            vec![MultiMap::unchecked(Vec::new(), 0)]
        } else {
            Vec::new()
        });
    }
    let completed = tuples_completed_at(x);
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(x.len());
    let mut masks = vec![0; x.arity()];
    let mut budget = Budget::visits(guards);
    multimap_rec(x, y, &completed, &mut values, &mut masks, &mut out, &mut budget)?;
    Ok(out)
}

fn multimap_rec(
    x: &RSet,
    y: &RSet,
    completed: &[Vec<&[usize]>],
    values: &mut Vec<u64>,
    masks: &mut [u64],
    out: &mut Vec<MultiMap>,
    budget: &mut Budget,
) -> Result<()> {
    let v = values.len();
    if v == x.len() {
        out.push(MultiMap::unchecked(values.clone(), y.len()));
        return Ok(());
    }
    let full = full_mask(y.len());
    let mut candidate: u64 = 1;
    loop {
        budget.tick()?;
        values.push(candidate);
        let ok = completed[v].iter().all(|t| {
            for (slot, &a) in masks.iter_mut().zip(t.iter()) {
                *slot = values[a];
            }
            y.contains_product(masks)
        });
        if ok {
            multimap_rec(x, y, completed, values, masks, out, budget)?;
        }
        values.pop();
        if candidate == full {
            break;
        }
        candidate += 1;
    }
    Ok(())
}

/// The Hom complex `Hom(x, y)`: all multi-maps under pointwise inclusion.
pub fn hom_poset(x: &RSet, y: &RSet, guards: &Guards) -> Result<HomPoset> {
    let elements = enumerate_multimaps(x, y, guards)?;
    guard::check(
        "max_poset_elements",
        elements.len() as u64,
        guards.max_poset_elements,
    )?;
    Ok(FinitePoset::from_order_unchecked(elements, MultiMap::leq))
}

/// `(τ * η)(x) = ⋃_{y ∈ η(x)} τ(y)`.
pub fn compose(tau: &MultiMap, eta: &MultiMap) -> Result<MultiMap> {
    if eta.codomain != tau.values.len() {
        return Err(Error::DomainMismatch(format!(
            "inner multi-map lands in {} vertices, outer is defined on {}",
            eta.codomain,
            tau.values.len()
        )));
    }
    let values = eta
        .values
        .iter()
        .map(|&m| bits(m).fold(0, |acc, y| acc | tau.values[y]))
        .collect();
    Ok(MultiMap::unchecked(values, tau.codomain))
}

/// `f_*(η) = (x ↦ f(η(x)))`.
pub fn pushforward(f: &RMap, eta: &MultiMap) -> Result<MultiMap> {
    if eta.codomain != f.domain_len() {
        return Err(Error::DomainMismatch(format!(
            "multi-map lands in {} vertices, map is defined on {}",
            eta.codomain,
            f.domain_len()
        )));
    }
    if f.codomain_len() > 64 {
        return Err(Error::CodomainTooLarge(f.codomain_len()));
    }
    let values = eta
        .values
        .iter()
        .map(|&m| bits(m).fold(0, |acc, y| acc | 1u64 << f.apply(y)))
        .collect();
    Ok(MultiMap::unchecked(values, f.codomain_len()))
}

/// `f^*(η) = (x ↦ η(f(x)))`.
pub fn pullback(f: &RMap, eta: &MultiMap) -> Result<MultiMap> {
    if eta.values.len() != f.codomain_len() {
        return Err(Error::DomainMismatch(format!(
            "multi-map is defined on {} vertices, map lands in {}",
            eta.values.len(),
            f.codomain_len()
        )));
    }
    let values = f.images().iter().map(|&v| eta.values[v]).collect();
    Ok(MultiMap::unchecked(values, eta.codomain))
}

/// `f_* : Hom(x, y1) -> Hom(x, y2)` as a poset map.
pub fn pushforward_map(f: &RMap, source: &HomPoset, target: &HomPoset) -> Result<PosetMap> {
    let images = source
        .elements()
        .iter()
        .map(|eta| pushforward(f, eta))
        .collect::<Result<Vec<_>>>()?;
    locate_all(&images, target)
}

/// `f^* : Hom(x2, y) -> Hom(x1, y)` as a poset map.
pub fn pullback_map(f: &RMap, source: &HomPoset, target: &HomPoset) -> Result<PosetMap> {
    let images = source
        .elements()
        .iter()
        .map(|eta| pullback(f, eta))
        .collect::<Result<Vec<_>>>()?;
    locate_all(&images, target)
}

fn locate_all(images: &[MultiMap], target: &HomPoset) -> Result<PosetMap> {
    let index = target.index_map();
    images
        .iter()
        .map(|m| {
            index
                .get(m)
                .copied()
                .ok_or_else(|| Error::DomainMismatch("image is not in the target Hom complex".into()))
        })
        .collect::<Result<Vec<_>>>()
        .map(PosetMap::new)
}

/// Pairs `(i, j)` of elements where `j` is `i` with one more vertex added to
/// one value set. Hom complexes are down-closed in the set of assignments, so
/// these generate the order, and checking a map on them checks monotonicity.
pub fn single_additions(elements: &[MultiMap]) -> Vec<(usize, usize)> {
    let index: HashMap<&MultiMap, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut out = Vec::new();
    for (i, e) in elements.iter().enumerate() {
        let full = full_mask(e.codomain);
        for x in 0..e.values.len() {
            for c in bits(full & !e.values[x]) {
                let mut bigger = e.clone();
                bigger.values[x] |= 1 << c;
                if let Some(&j) = index.get(&bigger) {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// Outcome of checking a pair of comparison maps `F: A -> B`, `G: B -> A` with
/// `G ∘ F = id_A` and `F ∘ G >= id_B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonCheck {
    pub source_len: usize,
    pub target_len: usize,
    /// `F` lands in `B` and `G` lands in `A`.
    pub well_defined: bool,
    /// Both maps are order preserving.
    pub monotone: bool,
    /// `G ∘ F = id_A` exactly.
    pub section_is_identity: bool,
    /// `F ∘ G >= id_B` elementwise.
    pub retraction_above_identity: bool,
}

impl ComparisonCheck {
    pub fn passed(&self) -> bool {
        self.well_defined && self.monotone && self.section_is_identity && self.retraction_above_identity
    }
}

/// The maps `p: Hom(X, Y×Z) -> Hom(X, Y) × Hom(X, Z)` and
/// `i: Hom(X, Y) × Hom(X, Z) -> Hom(X, Y×Z)` with
/// `p(η) = (p1_* η, p2_* η)` and `i(η, τ)(x) = η(x) × τ(x)`.
#[derive(Clone, Debug)]
pub struct ProductComparison {
    pub hom_product: Vec<MultiMap>,
    pub hom_left: Vec<MultiMap>,
    pub hom_right: Vec<MultiMap>,
    y_len: usize,
    z_len: usize,
}

/// `p` on one element.
pub fn split_product(y_len: usize, z_len: usize, eta: &MultiMap) -> (MultiMap, MultiMap) {
    let mut left = Vec::with_capacity(eta.values.len());
    let mut right = Vec::with_capacity(eta.values.len());
    for &m in &eta.values {
        let (mut l, mut r) = (0u64, 0u64);
        for v in bits(m) {
            l |= 1 << (v / z_len);
            r |= 1 << (v % z_len);
        }
        left.push(l);
        right.push(r);
    }
    (
        MultiMap::unchecked(left, y_len),
        MultiMap::unchecked(right, z_len),
    )
}

/// `i` on one element.
pub fn join_product(y_len: usize, z_len: usize, eta: &MultiMap, tau: &MultiMap) -> MultiMap {
    let values = eta
        .values
        .iter()
        .zip(&tau.values)
        .map(|(&a, &b)| {
            let mut m = 0u64;
            for u in bits(a) {
                for w in bits(b) {
                    m |= 1 << (u * z_len + w);
                }
            }
            m
        })
        .collect();
    MultiMap::unchecked(values, y_len * z_len)
}

impl ProductComparison {
    pub fn build(x: &RSet, y: &RSet, z: &RSet, guards: &Guards) -> Result<Self> {
        let yz = rset::product(y, z)?;
        let hom_product = enumerate_multimaps(x, &yz, guards)?;
        let hom_left = enumerate_multimaps(x, y, guards)?;
        let hom_right = enumerate_multimaps(x, z, guards)?;
        guard::check(
            "max_visits",
            (hom_left.len() as u64).saturating_mul(hom_right.len() as u64),
            guards.max_visits,
        )?;
        Ok(ProductComparison {
            hom_product,
            hom_left,
            hom_right,
            y_len: y.len(),
            z_len: z.len(),
        })
    }

    pub fn p(&self, eta: &MultiMap) -> (MultiMap, MultiMap) {
        split_product(self.y_len, self.z_len, eta)
    }

    pub fn i(&self, eta: &MultiMap, tau: &MultiMap) -> MultiMap {
        join_product(self.y_len, self.z_len, eta, tau)
    }

    /// Exhaustive check of `p ∘ i = id` and `i ∘ p >= id`.
    pub fn check(&self) -> ComparisonCheck {
        let idx_prod = index_of(&self.hom_product);
        let idx_left = index_of(&self.hom_left);
        let idx_right = index_of(&self.hom_right);
        let nr = self.hom_right.len();
        let pair_count = self.hom_left.len() * nr;

        let mut well_defined = true;
        // p as indices into the pair set, i as indices into Hom(X, Y×Z).
        let p: Vec<Option<usize>> = self
            .hom_product
            .iter()
            .map(|eta| {
                let (l, r) = self.p(eta);
                match (idx_left.get(&l), idx_right.get(&r)) {
                    (Some(&a), Some(&b)) => Some(a * nr + b),
                    _ => None,
                }
            })
            .collect();
        let i: Vec<Option<usize>> = (0..pair_count)
            .map(|k| {
                let joined = self.i(&self.hom_left[k / nr], &self.hom_right[k % nr]);
                idx_prod.get(&joined).copied()
            })
            .collect();
        well_defined &= p.iter().all(Option::is_some) && i.iter().all(Option::is_some);

        let section_is_identity = well_defined
            && (0..pair_count).all(|k| p[i[k].unwrap()] == Some(k));
        let retraction_above_identity = well_defined
            && self
                .hom_product
                .iter()
                .enumerate()
                .all(|(e, eta)| eta.leq(&self.hom_product[i[p[e].unwrap()].unwrap()]));

        let monotone = well_defined && {
            let p_ok = single_additions(&self.hom_product).into_iter().all(|(a, b)| {
                let (pa, pb) = (p[a].unwrap(), p[b].unwrap());
                self.hom_left[pa / nr].leq(&self.hom_left[pb / nr])
                    && self.hom_right[pa % nr].leq(&self.hom_right[pb % nr])
            });
            let left_steps = single_additions(&self.hom_left);
            let right_steps = single_additions(&self.hom_right);
            let i_ok = left_steps.iter().all(|&(a, b)| {
                (0..nr).all(|c| {
                    self.hom_product[i[a * nr + c].unwrap()]
                        .leq(&self.hom_product[i[b * nr + c].unwrap()])
                })
            }) && right_steps.iter().all(|&(a, b)| {
                (0..self.hom_left.len()).all(|l| {
                    self.hom_product[i[l * nr + a].unwrap()]
                        .leq(&self.hom_product[i[l * nr + b].unwrap()])
                })
            });
            p_ok && i_ok
        };

        ComparisonCheck {
            source_len: pair_count,
            target_len: self.hom_product.len(),
            well_defined,
            monotone,
            section_is_identity,
            retraction_above_identity,
        }
    }
}

fn index_of(elements: &[MultiMap]) -> HashMap<&MultiMap, usize> {
    elements.iter().enumerate().map(|(i, e)| (e, i)).collect()
}

/// The maps `Φ': Hom(X×Y, Z) -> Hom(X, Z^Y)` and `Ψ': Hom(X, Z^Y) -> Hom(X×Y, Z)`:
/// `Φ'(η)(x)` is the set of `f: V(Y) -> V(Z)` with `f(y) ∈ η(x, y)` for all
/// `y`, and `Ψ'(η)(x, y) = {f(y) | f ∈ η(x)}`.
#[derive(Clone, Debug)]
pub struct ExpComparison {
    pub hom_product: Vec<MultiMap>,
    pub hom_exponential: Vec<MultiMap>,
    y_len: usize,
    z_len: usize,
}

impl ExpComparison {
    pub fn build(x: &RSet, y: &RSet, z: &RSet, guards: &Guards) -> Result<Self> {
        let xy = rset::product(x, y)?;
        let zy = rset::exponential(z, y, guards)?;
        check_codomain(&zy)?;
        Ok(ExpComparison {
            hom_product: enumerate_multimaps(&xy, z, guards)?,
            hom_exponential: enumerate_multimaps(x, &zy, guards)?,
            y_len: y.len(),
            z_len: z.len(),
        })
    }

    /// `Φ'`.
    pub fn phi(&self, eta: &MultiMap) -> MultiMap {
        let x_len = eta.values.len() / self.y_len.max(1);
        let maps = self.z_len.pow(self.y_len as u32);
        let values = (0..x_len)
            .map(|x| {
                let mut m = 0u64;
                for f in 0..maps {
                    let images = map_images(f, self.y_len, self.z_len);
                    if images
                        .iter()
                        .enumerate()
                        .all(|(y, &w)| eta.values[x * self.y_len + y] >> w & 1 == 1)
                    {
                        m |= 1 << f;
                    }
                }
                m
            })
            .collect();
        MultiMap::unchecked(values, maps)
    }

    /// `Ψ'`.
    pub fn psi(&self, eta: &MultiMap) -> MultiMap {
        let mut values = Vec::with_capacity(eta.values.len() * self.y_len);
        for &m in &eta.values {
            let maps: Vec<Vec<usize>> = bits(m)
                .map(|f| map_images(f, self.y_len, self.z_len))
                .collect();
            for y in 0..self.y_len {
                values.push(maps.iter().fold(0u64, |acc, f| acc | 1 << f[y]));
            }
        }
        MultiMap::unchecked(values, self.z_len)
    }

    /// Exhaustive check of `Ψ' ∘ Φ' = id` and `Φ' ∘ Ψ' >= id`.
    pub fn check(&self) -> ComparisonCheck {
        let idx_prod = index_of(&self.hom_product);
        let idx_exp = index_of(&self.hom_exponential);
        let phi: Vec<Option<usize>> = self
            .hom_product
            .iter()
            .map(|eta| idx_exp.get(&self.phi(eta)).copied())
            .collect();
        let psi: Vec<Option<usize>> = self
            .hom_exponential
            .iter()
            .map(|eta| idx_prod.get(&self.psi(eta)).copied())
            .collect();
        let well_defined = phi.iter().all(Option::is_some) && psi.iter().all(Option::is_some);
        let section_is_identity =
            well_defined && (0..phi.len()).all(|e| psi[phi[e].unwrap()] == Some(e));
        let retraction_above_identity = well_defined
            && self
                .hom_exponential
                .iter()
                .enumerate()
                .all(|(e, eta)| eta.leq(&self.hom_exponential[phi[psi[e].unwrap()].unwrap()]));
        let monotone = well_defined
            && single_additions(&self.hom_product).into_iter().all(|(a, b)| {
                self.hom_exponential[phi[a].unwrap()].leq(&self.hom_exponential[phi[b].unwrap()])
            })
            && single_additions(&self.hom_exponential).into_iter().all(|(a, b)| {
                self.hom_product[psi[a].unwrap()].leq(&self.hom_product[psi[b].unwrap()])
            });
        ComparisonCheck {
            source_len: self.hom_product.len(),
            target_len: self.hom_exponential.len(),
            well_defined,
            monotone,
            section_is_identity,
            retraction_above_identity,
        }
    }
}

/// The currying bijection on maps: `Φ(f)(x) = (y ↦ f(x, y))`, as a map into
/// the vertices of `Z^Y`.
pub fn curry(f: &RMap, y_len: usize, z_len: usize) -> RMap {
    let x_len = f.domain_len() / y_len.max(1);
    let images = (0..x_len)
        .map(|x| map_index(&f.images()[x * y_len..(x + 1) * y_len], z_len))
        .collect();
    RMap::unchecked(images, z_len.pow(y_len as u32))
}

/// Inverse of [`curry`]: `Ψ(g)(x, y) = g(x)(y)`.
pub fn uncurry(g: &RMap, y_len: usize, z_len: usize) -> RMap {
    let images = g
        .images()
        .iter()
        .flat_map(|&f| map_images(f, y_len, z_len))
        .collect();
    RMap::unchecked(images, z_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::enumerate_rmaps;
    use crate::standard::{complete_graph, sigma};

    fn k2() -> RSet {
        complete_graph(2).unwrap()
    }

    #[test]
    fn is_multimap_examples() {
        let x = k2();
        let swap = RMap::new(&x, &x, vec![1, 0]).unwrap();
        assert!(is_multimap(&x, &x, MultiMap::from_rmap(&swap).values()).unwrap());
        assert!(!is_multimap(&x, &x, &[0b11, 0b10]).unwrap());
        assert!(!is_multimap(&x, &x, &[0, 0b10]).unwrap());
        assert!(matches!(is_multimap(&x, &x, &[1]), Err(Error::NotTotal { .. })));
    }

    #[test]
    fn hom_k2_k2_is_discrete() {
        let x = k2();
        let p = hom_poset(&x, &x, &Guards::default()).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.strict_pairs().is_empty());
    }

    #[test]
    fn hom_k2_k3_has_twelve_elements() {
        let p = hom_poset(&k2(), &complete_graph(3).unwrap(), &Guards::default()).unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.minimal_elements().len(), 6);
    }

    #[test]
    fn hom_from_looped_point_to_k2_is_empty() {
        let p = hom_poset(&sigma(2, 0).unwrap(), &k2(), &Guards::default()).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn minimal_elements_are_rmaps() {
        let x = k2();
        let y = complete_graph(3).unwrap();
        let p = hom_poset(&x, &y, &Guards::default()).unwrap();
        let mut minimal: Vec<RMap> = p
            .minimal_elements()
            .into_iter()
            .map(|i| p.element(i).as_rmap().unwrap())
            .collect();
        minimal.sort();
        assert_eq!(minimal, enumerate_rmaps(&x, &y, &Guards::default()).unwrap());
        assert!(p.elements().iter().all(|e| e.excess() <= 2 * 3));
    }

    #[test]
    fn compose_unit_and_domain_check() {
        let x = k2();
        let y = complete_graph(3).unwrap();
        let id = MultiMap::from_rmap(&RMap::identity(&y));
        for eta in enumerate_multimaps(&x, &y, &Guards::default()).unwrap() {
            assert_eq!(compose(&id, &eta).unwrap(), eta);
        }
        let bad = MultiMap::from_rmap(&RMap::identity(&x));
        assert!(compose(&bad, &MultiMap::from_rmap(&RMap::identity(&y))).is_err());
    }

    #[test]
    fn pushforward_swap_exchanges_elements() {
        let x = k2();
        let hom = hom_poset(&x, &x, &Guards::default()).unwrap();
        let swap = RMap::new(&x, &x, vec![1, 0]).unwrap();
        let m = pushforward_map(&swap, &hom, &hom).unwrap();
        assert_eq!(m.images(), &[1, 0]);
        let id = pushforward_map(&RMap::identity(&x), &hom, &hom).unwrap();
        assert_eq!(id, PosetMap::identity(2));
    }

    #[test]
    fn pullback_along_inclusion_restricts() {
        let s0 = sigma(2, 0).unwrap();
        let s1 = sigma(2, 1).unwrap();
        let s2 = sigma(2, 2).unwrap();
        let inc = RMap::new(&s0, &s1, vec![0]).unwrap();
        let src = hom_poset(&s1, &s2, &Guards::default()).unwrap();
        let tgt = hom_poset(&s0, &s2, &Guards::default()).unwrap();
        let m = pullback_map(&inc, &src, &tgt).unwrap();
        for (i, eta) in src.elements().iter().enumerate() {
            assert_eq!(tgt.element(m.apply(i)).values(), &eta.values()[..1]);
        }
        assert!(m.is_order_preserving(&src, &tgt));
    }

    #[test]
    fn product_comparison_k2_k3_k3() {
        let k3 = complete_graph(3).unwrap();
        let cmp = ProductComparison::build(&k2(), &k3, &k3, &Guards::default()).unwrap();
        let check = cmp.check();
        assert!(check.passed(), "{check:?}");
        // On singleton-valued elements i ∘ p is the identity.
        for eta in &cmp.hom_product {
            if eta.as_rmap().is_some() {
                let (l, r) = cmp.p(eta);
                assert_eq!(&cmp.i(&l, &r), eta);
            }
        }
    }

    #[test]
    fn exp_comparison_unit_case() {
        // Y = Σ0: Hom(X × Σ0, Z) and Hom(X, Z^Σ0) are identified elementwise.
        let x = k2();
        let s0 = sigma(2, 0).unwrap();
        let z = complete_graph(3).unwrap();
        let cmp = ExpComparison::build(&x, &s0, &z, &Guards::default()).unwrap();
        assert_eq!(cmp.hom_product, cmp.hom_exponential);
        for eta in &cmp.hom_product {
            assert_eq!(&cmp.phi(eta), eta);
            assert_eq!(&cmp.psi(eta), eta);
        }
        assert!(cmp.check().passed());
    }

    #[test]
    fn exp_comparison_point_k2_k3() {
        let cmp = ExpComparison::build(
            &sigma(2, 0).unwrap(),
            &k2(),
            &complete_graph(3).unwrap(),
            &Guards::default(),
        )
        .unwrap();
        let check = cmp.check();
        assert!(check.passed(), "{check:?}");
        assert_eq!(check.source_len, 12);
    }

    #[test]
    fn curry_roundtrip() {
        let x = k2();
        let y = k2();
        let z = complete_graph(3).unwrap();
        let xy = rset::product(&x, &y).unwrap();
        let zy = rset::exponential(&z, &y, &Guards::default()).unwrap();
        let left = enumerate_rmaps(&xy, &z, &Guards::default()).unwrap();
        let right = enumerate_rmaps(&x, &zy, &Guards::default()).unwrap();
        assert_eq!(left.len(), right.len());
        for f in &left {
            let g = curry(f, y.len(), z.len());
            assert!(right.contains(&g));
            assert_eq!(&uncurry(&g, y.len(), z.len()), f);
        }
    }
}
