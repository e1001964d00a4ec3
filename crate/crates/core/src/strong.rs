//! Beat points, folds, cores and strong homotopy.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::components::{poset_component_labels, UnionFind};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::hom::{hom_poset, MultiMap};
use crate::maps::{enumerate_rmaps, find_isomorphism};
use crate::rset::{induced_subset, is_rmap, product, RMap, RSet, VertexSubset};
use crate::standard::interval;

/// `point` is a beat point of an r-set with witness `witness`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeatWitness {
    pub point: usize,
    pub witness: usize,
}

/// Replacing `point` by `witness` in any single coordinate of any tuple
/// keeps the tuple in the relation.
pub fn is_beat_witness(x: &RSet, point: usize, witness: usize) -> bool {
    if point == witness || point >= x.len() || witness >= x.len() {
        return false;
    }
    let mut buf = Vec::with_capacity(x.arity());
    x.occurrences(point).iter().all(|&(t, pos)| {
        buf.clear();
        buf.extend_from_slice(&x.tuples()[t]);
        buf[pos] = witness;
        x.contains(&buf)
    })
}

/// All beat points with their witnesses, ordered by `(point, witness)`.
pub fn beat_points(x: &RSet) -> Vec<BeatWitness> {
    (0..x.len())
        .flat_map(|point| {
            (0..x.len())
                .filter(move |&witness| is_beat_witness(x, point, witness))
                .map(move |witness| BeatWitness { point, witness })
        })
        .collect()
}

pub fn is_minimal(x: &RSet) -> bool {
    (0..x.len()).all(|p| (0..x.len()).all(|w| !is_beat_witness(x, p, w)))
}

/// Removal of one beat point, with the maps that make the inclusion a strong
/// homotopy equivalence.
#[derive(Clone, Debug)]
pub struct Fold {
    pub witness: BeatWitness,
    /// `X ∖ {x}` as an induced r-subset.
    pub folded: RSet,
    /// `i: X ∖ {x} -> X`.
    pub inclusion: RMap,
    /// `f: X -> X ∖ {x}`, sending `x` to its witness.
    pub retraction: RMap,
    /// `η(x) = {x, y}`, singletons elsewhere; a multi-map `X -> X` above
    /// both `id_X` and `i ∘ f`.
    pub eta: MultiMap,
}

/// Outcome of re-validating a fold from scratch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldCheck {
    pub retraction_valid: bool,
    pub section: bool,
    pub eta_valid: bool,
    pub eta_above_identity: bool,
    pub eta_above_composite: bool,
}

impl FoldCheck {
    pub fn passed(&self) -> bool {
        self.retraction_valid && self.section && self.eta_valid && self.eta_above_identity && self.eta_above_composite
    }
}

pub fn fold(x: &RSet, w: BeatWitness) -> Result<Fold> {
    if !is_beat_witness(x, w.point, w.witness) {
        let name = |v: usize| x.names().get(v).cloned().unwrap_or_else(|| v.to_string());
        return Err(Error::InvalidWitness {
            point: name(w.point),
            witness: name(w.witness),
        });
    }
    if x.len() > 64 {
        return Err(Error::CodomainTooLarge(x.len()));
    }
    let kept: Vec<usize> = (0..x.len()).filter(|&v| v != w.point).collect();
    let folded = induced_subset(x, &VertexSubset::new(x, kept.clone())?);
    let position = |v: usize| if v < w.point { v } else { v - 1 };
    let inclusion = RMap::new(&folded, x, kept)?;
    let retraction = RMap::new(
        x,
        &folded,
        (0..x.len())
            .map(|v| position(if v == w.point { w.witness } else { v }))
            .collect(),
    )?;
    let values = (0..x.len())
        .map(|v| if v == w.point { 1 << v | 1 << w.witness } else { 1 << v })
        .collect();
    let eta = MultiMap::new(x, x, values)?;
    Ok(Fold {
        witness: w,
        folded,
        inclusion,
        retraction,
        eta,
    })
}

impl Fold {
    /// Re-checks the fold against the original r-set without trusting the
    /// constructors.
    pub fn check(&self, x: &RSet) -> Result<FoldCheck> {
        let composite = self.inclusion.after(&self.retraction)?;
        let section = self.retraction.after(&self.inclusion)? == RMap::identity(&self.folded);
        let eta_valid = crate::hom::is_multimap(x, x, self.eta.values())?;
        let id = MultiMap::from_rmap(&RMap::identity(x));
        Ok(FoldCheck {
            retraction_valid: is_rmap(x, &self.folded, self.retraction.images())?,
            section,
            eta_valid,
            eta_above_identity: id.leq(&self.eta),
            eta_above_composite: MultiMap::from_rmap(&composite).leq(&self.eta),
        })
    }
}

/// Which beat point to fold next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldPolicy {
    /// The least `(point, witness)`.
    First,
    /// A uniformly random beat point from a seeded stream.
    Random(u64),
}

#[derive(Clone, Debug)]
pub struct Core {
    pub core: RSet,
    /// Vertices of the original r-set that survive, ascending.
    pub kept: Vec<usize>,
    /// Fold steps as (point, witness) names.
    pub folds: Vec<(String, String)>,
}

/// Folds beat points until none are left.
pub fn core(x: &RSet, policy: FoldPolicy) -> Result<Core> {
    let mut rng = match policy {
        FoldPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        FoldPolicy::First => None,
    };
    let mut current = x.clone();
    let mut kept: Vec<usize> = (0..x.len()).collect();
    let mut folds = Vec::new();
    loop {
        let beats = beat_points(&current);
        let chosen = match (&mut rng, beats.first()) {
            (_, None) => break,
            (None, Some(&w)) => w,
            (Some(rng), Some(_)) => *beats.choose(rng).unwrap(),
        };
        folds.push((
            current.name(chosen.point).to_string(),
            current.name(chosen.witness).to_string(),
        ));
        current = fold(&current, chosen)?.folded;
        kept.remove(chosen.point);
    }
    Ok(Core {
        core: current,
        kept,
        folds,
    })
}

/// A sequence of r-set maps, consecutive ones forming a clique of `Y^X`,
/// i.e. an `I_n`-homotopy from the first to the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyPath {
    pub steps: Vec<RMap>,
}

impl HomotopyPath {
    pub fn len(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks from scratch that `(k, x) ↦ h_k(x)` is a map `I_n × X -> Y`.
    pub fn validate(&self, x: &RSet, y: &RSet) -> Result<bool> {
        if self.steps.is_empty() {
            return Ok(false);
        }
        for h in &self.steps {
            if !is_rmap(x, y, h.images())? {
                return Ok(false);
            }
        }
        let domain = product(&interval(x.arity(), self.len())?, x)?;
        let n = x.len().max(1);
        let images: Vec<usize> = (0..domain.len()).map(|v| self.steps[v / n].apply(v % n)).collect();
        is_rmap(&domain, y, &images)
    }
}

/// Whether `x ↦ {h(x), g(x)}` is a multi-map, i.e. `{h, g}` is a clique of
/// `Y^X` (given that `h` and `g` are maps of r-sets).
pub fn adjacent(x: &RSet, y: &RSet, h: &RMap, g: &RMap) -> bool {
    let r = x.arity();
    let mut buf = vec![0; r];
    x.tuples().iter().all(|t| {
        (0u32..1 << r).all(|choice| {
            for (i, slot) in buf.iter_mut().enumerate() {
                let m = if choice >> i & 1 == 1 { g } else { h };
                *slot = m.apply(t[i]);
            }
            y.contains(&buf)
        })
    })
}

/// The maps `X -> Y` with adjacency given by [`adjacent`].
#[derive(Clone, Debug)]
pub struct MapGraph {
    pub maps: Vec<RMap>,
    pub adjacency: Vec<Vec<usize>>,
}

impl MapGraph {
    pub fn new(x: &RSet, y: &RSet, guards: &Guards) -> Result<Self> {
        let maps = enumerate_rmaps(x, y, guards)?;
        let mut adjacency = vec![Vec::new(); maps.len()];
        for a in 0..maps.len() {
            for b in a + 1..maps.len() {
                if adjacent(x, y, &maps[a], &maps[b]) {
                    adjacency[a].push(b);
                    adjacency[b].push(a);
                }
            }
        }
        Ok(MapGraph { maps, adjacency })
    }

    pub fn index_of(&self, f: &RMap) -> Option<usize> {
        self.maps.binary_search(f).ok()
    }

    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.maps.len());
        for (a, nbrs) in self.adjacency.iter().enumerate() {
            for &b in nbrs {
                uf.union(a, b);
            }
        }
        uf.labels()
    }

    /// A shortest path of maps from `from` to `to`, by breadth-first search.
    pub fn path(&self, from: usize, to: usize) -> Option<HomotopyPath> {
        let mut prev = vec![usize::MAX; self.maps.len()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            if a == to {
                let mut steps = vec![self.maps[to].clone()];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    steps.push(self.maps[cur].clone());
                }
                steps.reverse();
                return Some(HomotopyPath { steps });
            }
            for &b in &self.adjacency[a] {
                if prev[b] == usize::MAX {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomotopyMethod {
    /// Same component of the Hom poset.
    HomPoset,
    /// Connected by a path of pairwise adjacent maps.
    Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyVerdict {
    pub homotopic: bool,
    /// A witnessing `I_n`-homotopy, for the path method.
    pub path: Option<HomotopyPath>,
}

pub fn strongly_homotopic(
    x: &RSet,
    y: &RSet,
    f: &RMap,
    g: &RMap,
    method: HomotopyMethod,
    guards: &Guards,
) -> Result<HomotopyVerdict> {
    for m in [f, g] {
        if !is_rmap(x, y, m.images())? {
            return Err(Error::NotAMap(x.names().to_vec()));
        }
    }
    match method {
        HomotopyMethod::HomPoset => {
            let poset = hom_poset(x, y, guards)?;
            let labels = poset_component_labels(&poset);
            let index = poset.index_map();
            let locate = |m: &RMap| index[&MultiMap::from_rmap(m)];
            Ok(HomotopyVerdict {
                homotopic: labels[locate(f)] == labels[locate(g)],
                path: None,
            })
        }
        HomotopyMethod::Path => {
            let graph = MapGraph::new(x, y, guards)?;
            let (a, b) = (graph.index_of(f).unwrap(), graph.index_of(g).unwrap());
            let path = graph.path(a, b);
            Ok(HomotopyVerdict {
                homotopic: path.is_some(),
                path,
            })
        }
    }
}

/// A homotopy inverse of `f: X -> Y`, if `f` is a strong homotopy
/// equivalence. All maps `Y -> X` are tried in lexicographic order.
pub fn homotopy_inverse(x: &RSet, y: &RSet, f: &RMap, guards: &Guards) -> Result<Option<RMap>> {
    if !is_rmap(x, y, f.images())? {
        return Err(Error::NotAMap(x.names().to_vec()));
    }
    let xx = MapGraph::new(x, x, guards)?;
    let yy = MapGraph::new(y, y, guards)?;
    let (lx, ly) = (xx.component_labels(), yy.component_labels());
    let id_x = lx[xx.index_of(&RMap::identity(x)).unwrap()];
    let id_y = ly[yy.index_of(&RMap::identity(y)).unwrap()];
    for g in enumerate_rmaps(y, x, guards)? {
        let gf = g.after(f)?;
        let fg = f.after(&g)?;
        if lx[xx.index_of(&gf).unwrap()] == id_x && ly[yy.index_of(&fg).unwrap()] == id_y {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

pub fn is_strong_homotopy_equivalence(x: &RSet, y: &RSet, f: &RMap, guards: &Guards) -> Result<bool> {
    Ok(homotopy_inverse(x, y, f, guards)?.is_some())
}

/// Strong homotopy equivalence of r-sets, decided by comparing cores.
pub fn strong_equivalent_rsets(x: &RSet, y: &RSet) -> Result<bool> {
    if x.arity() != y.arity() {
        return Ok(false);
    }
    let cx = core(x, FoldPolicy::First)?;
    let cy = core(y, FoldPolicy::First)?;
    Ok(find_isomorphism(&cx.core, &cy.core).is_some())
}

/// The maps `X -> X` in the Hom-component of the identity.
pub fn identity_component_maps(x: &RSet, guards: &Guards) -> Result<Vec<RMap>> {
    let poset = hom_poset(x, x, guards)?;
    let labels = poset_component_labels(&poset);
    let id = poset.index_map()[&MultiMap::from_rmap(&RMap::identity(x))];
    Ok(poset
        .elements()
        .iter()
        .enumerate()
        .filter(|&(i, _)| labels[i] == labels[id])
        .filter_map(|(_, e)| e.as_rmap())
        .collect())
}
