//! Singular simplicial sets `Sing(T, X)`.
//!
//! An n-simplex is a map `Σ_n × T -> X`, i.e. a tuple `(f_0, ..., f_n)` of
//! r-set maps `T -> X` whose underlying set is a clique of the exponential
//! `X^T`. So the whole structure is determined by the cliques among the maps
//! `T -> X`, which [`SingularComplex`] enumerates up to a size bound; tuples
//! are then either streamed or materialized as a [`TruncatedSimplicialSet`].

use rustc_hash::FxHashMap as HashMap;

use crate::components::UnionFind;
use crate::error::{Error, Result};
use crate::guard::{self, Budget, Guards};
use crate::hom::{curry, uncurry};
use crate::maps::enumerate_rmaps;
use crate::rset::{exponential, is_rmap, product, RMap, RSet};
use crate::standard::sigma;

// Cliques are keyed by their sorted members packed into 16-bit slots
// (stored as index + 1, so that 0 marks an empty slot).
const SLOT_BITS: usize = 16;
const MAX_CLIQUE: usize = 128 / SLOT_BITS;
const MAX_VERTICES: usize = (1 << SLOT_BITS) - 1;

fn pack(sorted: &[u32]) -> u128 {
    sorted
        .iter()
        .enumerate()
        .fold(0, |key, (i, &v)| key | (v as u128 + 1) << (SLOT_BITS * i))
}

fn unpack_into(mut key: u128, out: &mut [u32; MAX_CLIQUE]) -> usize {
    let mut len = 0;
    while key != 0 {
        out[len] = (key & 0xffff) as u32 - 1;
        key >>= SLOT_BITS;
        len += 1;
    }
    len
}

fn unpack(mut key: u128) -> Vec<u32> {
    let mut out = Vec::with_capacity(4);
    while key != 0 {
        out.push((key & 0xffff) as u32 - 1);
        key >>= SLOT_BITS;
    }
    out
}

/// Key of the underlying set of a tuple of at most `MAX_CLIQUE` entries.
fn packed_set(tuple: &[u32]) -> u128 {
    let mut buf = [0u32; MAX_CLIQUE];
    let set = &mut buf[..tuple.len()];
    set.copy_from_slice(tuple);
    set.sort_unstable();
    let mut key = 0;
    let mut slot = 0;
    for (i, &v) in set.iter().enumerate() {
        if i == 0 || v != set[i - 1] {
            key |= (v as u128 + 1) << (SLOT_BITS * slot);
            slot += 1;
        }
    }
    key
}

/// Number of surjections from an `m`-set onto a `k`-set.
fn surjections(m: usize, k: usize) -> u128 {
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for j in 0..=k {
        let term = binom * (k as i128 - j as i128).pow(m as u32);
        total += if j % 2 == 0 { term } else { -term };
        binom = binom * (k as i128 - j as i128) / (j as i128 + 1);
    }
    total as u128
}

/// Whether a tuple has two equal consecutive entries.
pub fn is_degenerate(simplex: &[u32]) -> bool {
    simplex.windows(2).any(|w| w[0] == w[1])
}

/// The i-th face: delete entry `i`.
pub fn face_tuple(simplex: &[u32], i: usize) -> Result<Vec<u32>> {
    let dim = simplex.len().saturating_sub(1);
    if simplex.len() < 2 || i > dim {
        return Err(Error::FaceIndex { index: i, dim });
    }
    let mut out = simplex.to_vec();
    out.remove(i);
    Ok(out)
}

/// The i-th degeneracy: repeat entry `i`.
pub fn degeneracy_tuple(simplex: &[u32], i: usize) -> Result<Vec<u32>> {
    let dim = simplex.len().saturating_sub(1);
    if simplex.is_empty() || i > dim {
        return Err(Error::FaceIndex { index: i, dim });
    }
    let mut out = simplex.to_vec();
    out.insert(i, simplex[i]);
    Ok(out)
}

/// The cliques of `X^T` among r-set maps `T -> X`, up to `max_dim + 1`
/// members. Determines `Sing(T, X)` in dimensions `<= max_dim`.
#[derive(Clone, Debug)]
pub struct SingularComplex {
    source: RSet,
    target: RSet,
    vertices: Vec<RMap>,
    max_dim: usize,
    cliques: Vec<u128>,
    ids: HashMap<u128, u32>,
    /// For each clique below the size bound: `(v, id of clique ∪ {v})`,
    /// ascending in `v`.
    extensions: Vec<Vec<(u32, u32)>>,
    clique_counts: Vec<usize>,
}

impl SingularComplex {
    pub fn new(t: &RSet, x: &RSet, max_dim: usize, guards: &Guards) -> Result<Self> {
        if max_dim + 1 > MAX_CLIQUE {
            return Err(Error::DimensionBound {
                dim: max_dim,
                bound: MAX_CLIQUE - 1,
            });
        }
        let vertices = enumerate_rmaps(t, x, guards)?;
        if vertices.len() > MAX_VERTICES {
            return Err(Error::Invalid(format!(
                "{} maps exceed the supported {MAX_VERTICES} vertices",
                vertices.len()
            )));
        }
        let mut sc = SingularComplex {
            source: t.clone(),
            target: x.clone(),
            vertices,
            max_dim,
            cliques: Vec::new(),
            ids: HashMap::default(),
            extensions: Vec::new(),
            clique_counts: Vec::new(),
        };
        sc.enumerate_cliques(guards)?;
        Ok(sc)
    }

    fn enumerate_cliques(&mut self, guards: &Guards) -> Result<()> {
        let n = self.vertices.len() as u32;
        let mut budget = Budget::cells(guards);
        for v in 0..n {
            budget.tick()?;
            self.register(pack(&[v]));
        }
        self.clique_counts.push(n as usize);
        let mut level = 0..self.cliques.len();
        for _size in 2..=self.max_dim + 1 {
            let start = self.cliques.len();
            for id in level.clone() {
                let members = unpack(self.cliques[id]);
                let last = *members.last().unwrap();
                let mut grown = members.clone();
                for v in last + 1..n {
                    if self.extends_by_subsets(&members, v) {
                        budget.tick()?;
                        grown.push(v);
                        self.register(pack(&grown));
                        grown.pop();
                    }
                }
            }
            self.clique_counts.push(self.cliques.len() - start);
            level = start..self.cliques.len();
        }
        let below_top = self.cliques.len() - self.clique_counts.last().copied().unwrap_or(0);
        let below_top = if self.max_dim == 0 { 0 } else { below_top };
        self.extensions = (0..below_top)
            .map(|id| {
                let members = unpack(self.cliques[id]);
                (0..n)
                    .filter(|v| !members.contains(v))
                    .filter_map(|v| {
                        let mut set = members.clone();
                        set.push(v);
                        set.sort_unstable();
                        self.ids.get(&pack(&set)).map(|&nid| (v, nid))
                    })
                    .collect()
            })
            .collect();
        Ok(())
    }

    fn register(&mut self, key: u128) {
        self.ids.insert(key, self.cliques.len() as u32);
        self.cliques.push(key);
    }

    /// A choice of r entries from `members ∪ {v}` uses at most r distinct
    /// maps, so once the set is larger than r it is a clique iff every
    /// r-subset containing `v` is; those are already registered.
    fn extends_by_subsets(&self, members: &[u32], v: u32) -> bool {
        let r = self.source.arity();
        if members.len() < r || self.source.tuples().is_empty() {
            return self.extends(members, v);
        }
        let mut chosen = Vec::with_capacity(r);
        self.subsets_registered(members, 0, r - 1, v, &mut chosen)
    }

    fn subsets_registered(&self, members: &[u32], start: usize, need: usize, v: u32, chosen: &mut Vec<u32>) -> bool {
        if need == 0 {
            let mut set = chosen.clone();
            set.push(v);
            set.sort_unstable();
            return self.ids.contains_key(&pack(&set));
        }
        for k in start..=members.len() - need {
            chosen.push(members[k]);
            let ok = self.subsets_registered(members, k + 1, need - 1, v, chosen);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// Whether `members ∪ {v}` is a clique of `X^T`, given that `members` is:
    /// every index choice that uses `v` at least once must land in `R(X)`.
    fn extends(&self, members: &[u32], v: u32) -> bool {
        let mut pool = members.to_vec();
        pool.push(v);
        let mut buf = vec![0; self.source.arity()];
        self.source
            .tuples()
            .iter()
            .all(|t| self.choices(t, &pool, v, 0, false, &mut buf))
    }

    fn choices(&self, t: &[usize], pool: &[u32], v: u32, pos: usize, used: bool, buf: &mut [usize]) -> bool {
        if pos == t.len() {
            return !used || self.target.contains(buf);
        }
        for &g in pool {
            buf[pos] = self.vertices[g as usize].apply(t[pos]);
            if !self.choices(t, pool, v, pos + 1, used || g == v, buf) {
                return false;
            }
        }
        true
    }

    pub fn source(&self) -> &RSet {
        &self.source
    }

    pub fn target(&self) -> &RSet {
        &self.target
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// The 0-simplices: all r-set maps `T -> X`, lexicographically.
    pub fn vertices(&self) -> &[RMap] {
        &self.vertices
    }

    pub fn vertex_index(&self, images: &[usize]) -> Option<u32> {
        self.vertices
            .binary_search_by(|m| m.images().cmp(images))
            .ok()
            .map(|i| i as u32)
    }

    /// Number of cliques with `k + 1` members, for `k <= max_dim`.
    pub fn clique_counts(&self) -> &[usize] {
        &self.clique_counts
    }

    /// Sorted member lists of all cliques, by size then lexicographically.
    pub fn cliques(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        self.cliques.iter().map(|&k| unpack(k))
    }

    /// Whether a tuple of vertex indices is a simplex. Tuples longer than
    /// `max_dim + 1` are outside the computed range and rejected.
    pub fn contains(&self, simplex: &[u32]) -> bool {
        if simplex.is_empty() || simplex.len() > self.max_dim + 1 {
            return false;
        }
        if simplex.iter().any(|&v| v as usize >= self.vertices.len()) {
            return false;
        }
        self.ids.contains_key(&packed_set(simplex))
    }

    /// Number of n-simplices: each clique of `k` members underlies
    /// `surj(n + 1, k)` tuples.
    pub fn count(&self, n: usize) -> u128 {
        self.clique_counts
            .iter()
            .enumerate()
            .map(|(k, &c)| c as u128 * surjections(n + 1, k + 1))
            .sum()
    }

    /// Number of nondegenerate n-simplices: `k (k-1)^n`-style count of tuples
    /// without equal neighbours, summed over cliques by surjectivity.
    pub fn count_nondegenerate(&self, n: usize) -> u128 {
        // Tuples of length n+1 onto a k-set with no equal neighbours:
        // inclusion–exclusion over the missed values.
        let nondeg_onto = |k: usize| -> u128 {
            let mut total: i128 = 0;
            let mut binom: i128 = 1;
            for j in 0..=k {
                let m = (k - j) as i128;
                let all = if n == 0 { m } else { m * (m - 1).max(0).pow(n as u32) };
                total += if j % 2 == 0 { binom * all } else { -binom * all };
                binom = binom * (k as i128 - j as i128) / (j as i128 + 1);
            }
            total as u128
        };
        self.clique_counts
            .iter()
            .enumerate()
            .map(|(k, &c)| c as u128 * nondeg_onto(k + 1))
            .sum()
    }

    /// Visits the n-simplices in lexicographic order.
    pub fn for_each_simplex<F>(&self, n: usize, budget: &mut StreamBudget, mut f: F) -> Result<()>
    where
        F: FnMut(&[u32]) -> Result<()>,
    {
        if n > self.max_dim {
            return Err(Error::DimensionBound {
                dim: n,
                bound: self.max_dim,
            });
        }
        let mut prefix = Vec::with_capacity(n + 1);
        for v in 0..self.vertices.len() as u32 {
            prefix.push(v);
            self.walk(n, &mut prefix, v, budget, &mut f)?;
            prefix.pop();
        }
        Ok(())
    }

    fn walk<F>(&self, n: usize, prefix: &mut Vec<u32>, clique: u32, budget: &mut StreamBudget, f: &mut F) -> Result<()>
    where
        F: FnMut(&[u32]) -> Result<()>,
    {
        if prefix.len() == n + 1 {
            budget.0.tick()?;
            return f(prefix);
        }
        let mut buf = [0u32; MAX_CLIQUE];
        let len = unpack_into(self.cliques[clique as usize], &mut buf);
        let members = &buf[..len];
        let ext: &[(u32, u32)] = self.extensions.get(clique as usize).map_or(&[], Vec::as_slice);
        let (mut i, mut j) = (0, 0);
        while i < members.len() || j < ext.len() {
            let take_member = j == ext.len() || (i < members.len() && members[i] < ext[j].0);
            let (v, next) = if take_member {
                i += 1;
                (members[i - 1], clique)
            } else {
                j += 1;
                ext[j - 1]
            };
            prefix.push(v);
            self.walk(n, prefix, next, budget, f)?;
            prefix.pop();
        }
        Ok(())
    }

    /// Materializes dimensions `0..=dim_bound`.
    pub fn truncate(&self, dim_bound: usize, guards: &Guards) -> Result<TruncatedSimplicialSet> {
        if dim_bound > self.max_dim {
            return Err(Error::DimensionBound {
                dim: dim_bound,
                bound: self.max_dim,
            });
        }
        let total: u128 = (0..=dim_bound).map(|n| self.count(n)).sum();
        guard::check("max_cells", total.min(u64::MAX as u128) as u64, guards.max_cells)?;
        let mut budget = StreamBudget::new(guards);
        let mut simplices = Vec::with_capacity(dim_bound + 1);
        for n in 0..=dim_bound {
            let mut flat = Vec::with_capacity(self.count(n) as usize * (n + 1));
            self.for_each_simplex(n, &mut budget, |s| {
                flat.extend_from_slice(s);
                Ok(())
            })?;
            simplices.push(flat);
        }
        Ok(TruncatedSimplicialSet {
            dim_bound,
            source: self.source.clone(),
            target: self.target.clone(),
            vertices: self.vertices.clone(),
            simplices,
        })
    }

    /// Path components of the 0-simplices under the 1-simplices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertices.len());
        if self.max_dim >= 1 {
            for members in self.cliques().filter(|m| m.len() == 2) {
                uf.union(members[0] as usize, members[1] as usize);
            }
        }
        uf.classes()
    }
}

/// Caps the number of simplices visited by streaming passes.
#[derive(Debug)]
pub struct StreamBudget(Budget);

impl StreamBudget {
    pub fn new(guards: &Guards) -> Self {
        StreamBudget(Budget::new("max_streamed", guards.max_streamed))
    }
}

/// `Sing(T, X)` in dimensions `0..=N`, with simplices stored as tuples of
/// indices into the list of r-set maps `T -> X`.
#[derive(Clone, Debug)]
pub struct TruncatedSimplicialSet {
    dim_bound: usize,
    source: RSet,
    target: RSet,
    vertices: Vec<RMap>,
    /// Per dimension `n`, the n-simplices concatenated (stride `n + 1`),
    /// in lexicographic order.
    simplices: Vec<Vec<u32>>,
}

/// `Sing(T, X)` truncated at dimension `dim_bound`.
pub fn sing_truncated(t: &RSet, x: &RSet, dim_bound: usize, guards: &Guards) -> Result<TruncatedSimplicialSet> {
    SingularComplex::new(t, x, dim_bound, guards)?.truncate(dim_bound, guards)
}

impl TruncatedSimplicialSet {
    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn source(&self) -> &RSet {
        &self.source
    }

    pub fn target(&self) -> &RSet {
        &self.target
    }

    pub fn vertices(&self) -> &[RMap] {
        &self.vertices
    }

    pub fn len(&self, n: usize) -> usize {
        self.simplices.get(n).map_or(0, |s| s.len() / (n + 1))
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.dim_bound).map(|n| self.len(n)).collect()
    }

    pub fn simplex(&self, n: usize, k: usize) -> &[u32] {
        &self.simplices[n][k * (n + 1)..(k + 1) * (n + 1)]
    }

    pub fn simplices(&self, n: usize) -> impl Iterator<Item = &[u32]> {
        self.simplices
            .get(n)
            .map_or(&[][..], Vec::as_slice)
            .chunks_exact(n + 1)
    }

    /// The maps `f_0, ..., f_n` of a simplex.
    pub fn simplex_maps(&self, simplex: &[u32]) -> Vec<&RMap> {
        simplex.iter().map(|&v| &self.vertices[v as usize]).collect()
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        let n = simplex.len().checked_sub(1)?;
        if n > self.dim_bound {
            return None;
        }
        let len = self.len(n);
        let (mut lo, mut hi) = (0, len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.simplex(n, mid).cmp(simplex) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        self.index_of(simplex).is_some()
    }

    /// `d_i σ`, checked to be a stored simplex.
    pub fn face(&self, simplex: &[u32], i: usize) -> Result<Vec<u32>> {
        let out = face_tuple(simplex, i)?;
        self.stored(out)
    }

    /// `s_i σ`, which must stay within the dimension bound.
    pub fn degeneracy(&self, simplex: &[u32], i: usize) -> Result<Vec<u32>> {
        let out = degeneracy_tuple(simplex, i)?;
        if out.len() - 1 > self.dim_bound {
            return Err(Error::DimensionBound {
                dim: out.len() - 1,
                bound: self.dim_bound,
            });
        }
        self.stored(out)
    }

    fn stored(&self, simplex: Vec<u32>) -> Result<Vec<u32>> {
        if self.contains(&simplex) {
            Ok(simplex)
        } else {
            Err(Error::Invalid(format!("{simplex:?} is not a simplex")))
        }
    }

    /// Indices of the nondegenerate n-simplices.
    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        self.simplices(n)
            .enumerate()
            .filter(|(_, s)| !is_degenerate(s))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertices.len());
        for s in self.simplices(1) {
            uf.union(s[0] as usize, s[1] as usize);
        }
        uf.classes()
    }
}

/// From-scratch check that `(i, t) ↦ f_i(t)` is a map of r-sets
/// `Σ_n × T -> X`, the defining condition of a T-singular n-simplex.
pub fn singular_condition_holds(t: &RSet, x: &RSet, maps: &[&RMap]) -> Result<bool> {
    let Some(n) = maps.len().checked_sub(1) else {
        return Ok(false);
    };
    let domain = product(&sigma(t.arity(), n)?, t)?;
    let images: Vec<usize> = (0..domain.len())
        .map(|v| maps[v / t.len().max(1)].apply(v % t.len().max(1)))
        .collect();
    is_rmap(&domain, x, &images)
}

/// `(τ * σ)_i = τ_i ∘ σ_i`.
pub fn compose_simplices(tau: &[&RMap], sigma: &[&RMap]) -> Result<Vec<RMap>> {
    if tau.len() != sigma.len() {
        return Err(Error::Invalid(format!(
            "simplices of dimensions {} and {} cannot be composed",
            tau.len() as isize - 1,
            sigma.len() as isize - 1
        )));
    }
    tau.iter().zip(sigma).map(|(t, s)| t.after(s)).collect()
}

/// Outcome of comparing one dimension of an entrywise simplicial map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    pub dim: usize,
    pub source_count: u128,
    pub target_count: u128,
    /// Every source simplex is sent to a target simplex.
    pub images_valid: bool,
    pub faces_commute: bool,
    pub degeneracies_commute: bool,
}

/// Outcome of checking that an entrywise map of simplicial sets is an
/// isomorphism up to some dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub vertex_map_injective: bool,
    /// The inverse construction recovers every 0-simplex.
    pub round_trip: bool,
    pub dims: Vec<DimensionCheck>,
}

impl IsoReport {
    /// Injective on vertices, hence on tuples; with valid images and equal
    /// counts, bijective in every dimension.
    pub fn passed(&self) -> bool {
        self.vertex_map_injective
            && self.round_trip
            && self.dims.iter().all(|d| {
                d.images_valid && d.faces_commute && d.degeneracies_commute && d.source_count == d.target_count
            })
    }
}

fn check_entrywise<V, C>(
    source: &SingularComplex,
    dim_bound: usize,
    phi: &[Option<V>],
    target_contains: C,
    target_count: impl Fn(usize) -> u128,
    guards: &Guards,
) -> Result<Vec<DimensionCheck>>
where
    V: Copy + PartialEq,
    C: Fn(&[V]) -> bool,
{
    let mut budget = StreamBudget::new(guards);
    let mut dims = Vec::new();
    let map_into = |s: &[u32], out: &mut Vec<V>| -> bool {
        out.clear();
        for &v in s {
            match phi[v as usize] {
                Some(w) => out.push(w),
                None => return false,
            }
        }
        true
    };
    let (mut img, mut other, mut mapped, mut tuple) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for n in 0..=dim_bound {
        let mut images_valid = true;
        let mut faces_commute = true;
        let mut degeneracies_commute = true;
        source.for_each_simplex(n, &mut budget, |s| {
            if !map_into(s, &mut img) {
                images_valid = false;
                return Ok(());
            }
            images_valid &= target_contains(&img);
            if n > 0 {
                for i in 0..=n {
                    // d_i φ(σ) against φ(d_i σ).
                    other.clear();
                    other.extend(img.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &w)| w));
                    tuple.clear();
                    tuple.extend(s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v));
                    // Membership of the face follows from the previous
                    // dimension's image check once the two agree.
                    faces_commute &= map_into(&tuple, &mut mapped) && mapped == other;
                }
            }
            if n < dim_bound {
                for i in 0..=n {
                    other.clear();
                    other.extend_from_slice(&img);
                    other.insert(i, img[i]);
                    tuple.clear();
                    tuple.extend_from_slice(s);
                    tuple.insert(i, s[i]);
                    degeneracies_commute &= source.contains(&tuple)
                        && map_into(&tuple, &mut mapped)
                        && mapped == other
                        && target_contains(&other);
                }
            }
            Ok(())
        })?;
        dims.push(DimensionCheck {
            dim: n,
            source_count: source.count(n),
            target_count: target_count(n),
            images_valid,
            faces_commute,
            degeneracies_commute,
        });
    }
    Ok(dims)
}

fn injective<V: Copy + Eq + std::hash::Hash>(phi: &[Option<V>]) -> bool {
    let mut seen = std::collections::HashSet::new();
    phi.iter().all(|v| v.is_some_and(|v| seen.insert(v)))
}

/// `Sing(X, Y × Z) -> Sing(X, Y) × Sing(X, Z)`, `h ↦ (p_1 h, p_2 h)`
/// entrywise, checked to be an isomorphism in dimensions `0..=dim_bound`.
pub fn product_iso(x: &RSet, y: &RSet, z: &RSet, dim_bound: usize, guards: &Guards) -> Result<IsoReport> {
    let yz = product(y, z)?;
    let source = SingularComplex::new(x, &yz, dim_bound, guards)?;
    let left = SingularComplex::new(x, y, dim_bound, guards)?;
    let right = SingularComplex::new(x, z, dim_bound, guards)?;
    let nz = z.len();
    let phi: Vec<Option<(u32, u32)>> = source
        .vertices()
        .iter()
        .map(|h| {
            let a: Vec<usize> = h.images().iter().map(|&v| v / nz).collect();
            let b: Vec<usize> = h.images().iter().map(|&v| v % nz).collect();
            Some((left.vertex_index(&a)?, right.vertex_index(&b)?))
        })
        .collect();
    let round_trip = source.vertices().iter().zip(&phi).all(|(h, img)| {
        img.is_some_and(|(a, b)| {
            let (fa, fb) = (&left.vertices()[a as usize], &right.vertices()[b as usize]);
            (0..x.len()).all(|v| h.apply(v) == fa.apply(v) * nz + fb.apply(v))
        })
    });
    let contains = |pairs: &[(u32, u32)]| {
        let mut a = [0u32; MAX_CLIQUE];
        let mut b = [0u32; MAX_CLIQUE];
        for (k, p) in pairs.iter().enumerate() {
            (a[k], b[k]) = *p;
        }
        left.contains(&a[..pairs.len()]) && right.contains(&b[..pairs.len()])
    };
    let dims = check_entrywise(&source, dim_bound, &phi, contains, |n| left.count(n) * right.count(n), guards)?;
    Ok(IsoReport {
        vertex_map_injective: injective(&phi),
        round_trip,
        dims,
    })
}

/// `Sing(X × Y, Z) -> Sing(X, Z^Y)`, currying entrywise, checked to be an
/// isomorphism in dimensions `0..=dim_bound`.
pub fn curry_iso(x: &RSet, y: &RSet, z: &RSet, dim_bound: usize, guards: &Guards) -> Result<IsoReport> {
    let xy = product(x, y)?;
    let zy = exponential(z, y, guards)?;
    let source = SingularComplex::new(&xy, z, dim_bound, guards)?;
    let target = SingularComplex::new(x, &zy, dim_bound, guards)?;
    let curried: Vec<RMap> = source.vertices().iter().map(|f| curry(f, y.len(), z.len())).collect();
    let phi: Vec<Option<u32>> = curried.iter().map(|g| target.vertex_index(g.images())).collect();
    let round_trip = source
        .vertices()
        .iter()
        .zip(&curried)
        .all(|(f, g)| &uncurry(g, y.len(), z.len()) == f);
    let dims = check_entrywise(&source, dim_bound, &phi, |s| target.contains(s), |n| target.count(n), guards)?;
    Ok(IsoReport {
        vertex_map_injective: injective(&phi),
        round_trip,
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete_graph, sigma};

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(3, 1), 1);
        assert_eq!(surjections(3, 2), 6);
        assert_eq!(surjections(4, 4), 24);
        assert_eq!(surjections(2, 3), 0);
    }

    #[test]
    fn sing_of_point_in_full_edge_has_all_tuples() {
        let s = sing_truncated(&sigma(2, 0).unwrap(), &sigma(2, 1).unwrap(), 3, &g()).unwrap();
        assert_eq!(s.counts(), vec![2, 4, 8, 16]);
    }

    #[test]
    fn sing_k2_k3() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let s = sing_truncated(&k2, &k3, 1, &g()).unwrap();
        assert_eq!(s.len(0), 6);
        // Brute force over ordered pairs: f(a) != g(b) and f(b) != g(a).
        let maps = s.vertices();
        let expected = maps
            .iter()
            .flat_map(|f| maps.iter().map(move |h| (f, h)))
            .filter(|(f, h)| f.apply(0) != h.apply(1) && f.apply(1) != h.apply(0))
            .count();
        assert_eq!(s.len(1), expected);
    }

    #[test]
    fn sing_into_k2_from_point_is_empty() {
        let s = sing_truncated(&sigma(2, 0).unwrap(), &complete_graph(2).unwrap(), 2, &g()).unwrap();
        assert_eq!(s.counts(), vec![0, 0, 0]);
    }

    #[test]
    fn faces_and_degeneracies() {
        let s = sing_truncated(&sigma(2, 0).unwrap(), &sigma(2, 1).unwrap(), 2, &g()).unwrap();
        assert_eq!(s.face(&[0, 1], 0).unwrap(), vec![1]);
        assert_eq!(s.face(&[0, 1], 1).unwrap(), vec![0]);
        let sigma1 = [0, 1];
        assert_eq!(s.face(&s.degeneracy(&sigma1, 1).unwrap(), 1).unwrap(), sigma1);
        assert!(matches!(s.face(&[0], 0), Err(Error::FaceIndex { .. })));
        assert!(matches!(s.face(&[0, 1], 2), Err(Error::FaceIndex { index: 2, dim: 1 })));
        assert!(matches!(
            s.degeneracy(&[0, 1, 0], 0),
            Err(Error::DimensionBound { dim: 3, bound: 2 })
        ));
        for t in s.simplices(2) {
            for j in 1..=2 {
                for i in 0..j {
                    let a = s.face(&s.face(t, j).unwrap(), i).unwrap();
                    let b = s.face(&s.face(t, i).unwrap(), j - 1).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn stored_simplices_satisfy_the_singular_condition() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let s = sing_truncated(&k2, &k3, 2, &g()).unwrap();
        for n in 0..=2 {
            for t in s.simplices(n) {
                assert!(singular_condition_holds(&k2, &k3, &s.simplex_maps(t)).unwrap());
            }
        }
        // And conversely on all 2-tuples of maps.
        let count = (0..6u32)
            .flat_map(|a| (0..6u32).map(move |b| [a, b]))
            .filter(|t| {
                let maps: Vec<&RMap> = t.iter().map(|&v| &s.vertices()[v as usize]).collect();
                singular_condition_holds(&k2, &k3, &maps).unwrap()
            })
            .count();
        assert_eq!(count, s.len(1));
    }

    #[test]
    fn counts_match_streaming() {
        let sc = SingularComplex::new(&complete_graph(2).unwrap(), &complete_graph(3).unwrap(), 3, &g()).unwrap();
        let t = sc.truncate(3, &g()).unwrap();
        for n in 0..=3 {
            assert_eq!(sc.count(n), t.len(n) as u128);
            assert_eq!(sc.count_nondegenerate(n), t.nondegenerate(n).len() as u128);
        }
    }

    #[test]
    fn ternary_cliques_are_not_pairwise() {
        // Maps from a looped point into the boundary triangle at arity 3 are
        // its three vertices; pairs are cliques, the triple is not.
        let x = crate::standard::simplicial_complex(3, &crate::standard::triangle_boundary()).unwrap();
        let sc = SingularComplex::new(&sigma(3, 0).unwrap(), &x, 2, &g()).unwrap();
        assert_eq!(sc.clique_counts(), &[3, 3, 0]);
    }

    #[test]
    fn compose_examples() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let s = sing_truncated(&k2, &k3, 2, &g()).unwrap();
        let id3 = RMap::identity(&k3);
        for t in s.simplices(2) {
            let sig = s.simplex_maps(t);
            let ids = vec![&id3; 3];
            let composed = compose_simplices(&ids, &sig).unwrap();
            assert_eq!(composed.iter().collect::<Vec<_>>(), sig);
        }
        let f = &s.vertices()[0];
        let id2 = RMap::identity(&k2);
        assert_eq!(compose_simplices(&[f], &[&id2]).unwrap(), vec![f.clone()]);
        assert!(compose_simplices(&[f], &[]).is_err());
    }

    #[test]
    fn product_iso_small() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let report = product_iso(&k2, &k3, &k3, 2, &g()).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.dims[0].source_count, 36);
    }

    #[test]
    fn curry_iso_small() {
        let report = curry_iso(
            &sigma(2, 0).unwrap(),
            &complete_graph(2).unwrap(),
            &complete_graph(3).unwrap(),
            2,
            &g(),
        )
        .unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.dims[0].source_count, 6);
        let unit = curry_iso(&complete_graph(2).unwrap(), &sigma(2, 0).unwrap(), &complete_graph(3).unwrap(), 2, &g())
            .unwrap();
        assert!(unit.passed());
    }

    #[test]
    fn components_of_sing() {
        let k2 = complete_graph(2).unwrap();
        let sc = SingularComplex::new(&k2, &k2, 1, &g()).unwrap();
        assert_eq!(sc.components().len(), 2);
        let sc = SingularComplex::new(&k2, &complete_graph(3).unwrap(), 1, &g()).unwrap();
        assert_eq!(sc.components().len(), 1);
    }
}
