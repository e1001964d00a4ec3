//! Finite r-sets: a vertex set together with a set of r-tuples of vertices.
//!
//! Vertices are opaque names. Internally every vertex is addressed by its
//! position in the declared vertex order, and every deterministic ordering in
//! this crate follows that order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::guard::{self, Budget, Guards};

/// A finite r-set.
#[derive(Clone)]
pub struct RSet {
    arity: usize,
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// Sorted, duplicate free.
    tuples: Vec<Vec<usize>>,
    lookup: HashSet<Vec<usize>>,
    /// For each vertex, the `(tuple, position)` pairs at which it occurs.
    occurrences: Vec<Vec<(usize, usize)>>,
}

impl RSet {
    /// Builds an r-set from vertex names and tuples of names.
    pub fn new<S, T>(arity: usize, vertices: Vec<S>, relation: Vec<Vec<T>>) -> Result<Self>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let mut tuples = Vec::with_capacity(relation.len());
        for tuple in &relation {
            let as_strings = || tuple.iter().map(|s| s.as_ref().to_string()).collect();
            if tuple.len() != arity {
                return Err(Error::TupleLength {
                    tuple: as_strings(),
                    len: tuple.len(),
                    arity,
                });
            }
            let mut ids = Vec::with_capacity(arity);
            for v in tuple {
                match index.get(v.as_ref()) {
                    Some(&i) => ids.push(i),
                    None => {
                        return Err(Error::UnknownVertex {
                            tuple: as_strings(),
                            vertex: v.as_ref().to_string(),
                        })
                    }
                }
            }
            tuples.push(ids);
        }
        Ok(Self::assemble(arity, names, index, tuples))
    }

    /// Builds an r-set from vertex names and tuples of vertex indices.
    pub fn from_indices<S, I>(arity: usize, vertices: Vec<S>, relation: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = Vec<usize>>,
    {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        let n = names.len();
        let mut tuples = Vec::new();
        for tuple in relation {
            if tuple.len() != arity {
                return Err(Error::TupleLength {
                    tuple: tuple.iter().map(|i| i.to_string()).collect(),
                    len: tuple.len(),
                    arity,
                });
            }
            if let Some(&bad) = tuple.iter().find(|&&i| i >= n) {
                return Err(Error::ImageOutOfRange { index: bad, size: n });
            }
            tuples.push(tuple);
        }
        Ok(Self::assemble(arity, names, index, tuples))
    }

    fn assemble(
        arity: usize,
        names: Vec<String>,
        index: HashMap<String, usize>,
        mut tuples: Vec<Vec<usize>>,
    ) -> Self {
        tuples.sort_unstable();
        tuples.dedup();
        let lookup = tuples.iter().cloned().collect();
        let mut occurrences = vec![Vec::new(); names.len()];
        for (t, tuple) in tuples.iter().enumerate() {
            for (pos, &v) in tuple.iter().enumerate() {
                occurrences[v].push((t, pos));
            }
        }
        RSet {
            arity,
            names,
            index,
            tuples,
            lookup,
            occurrences,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex_or_err(&self, name: &str) -> Result<usize> {
        self.vertex(name)
            .ok_or_else(|| Error::NoSuchVertex(name.to_string()))
    }

    /// The relation, sorted lexicographically by vertex index.
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn relation_len(&self) -> usize {
        self.tuples.len()
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        self.lookup.contains(tuple)
    }

    /// `(tuple index, position)` pairs where `v` occurs.
    pub fn occurrences(&self, v: usize) -> &[(usize, usize)] {
        &self.occurrences[v]
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.contains(&vec![v; self.arity])
    }

    pub fn tuple_names(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&v| self.names[v].clone()).collect()
    }

    /// Whether `A_1 × ... × A_r ⊆ R`, where each `A_i` is a bitmask over the
    /// vertex order. Empty factors make the product empty, hence contained.
    pub fn contains_product(&self, masks: &[u64]) -> bool {
        debug_assert_eq!(masks.len(), self.arity);
        if masks.contains(&0) {
            return true;
        }
        let mut buf = vec![0usize; self.arity];
        self.product_rec(masks, 0, &mut buf)
    }

    fn product_rec(&self, masks: &[u64], pos: usize, buf: &mut Vec<usize>) -> bool {
        if pos == masks.len() {
            return self.lookup.contains(buf.as_slice());
        }
        let mut m = masks[pos];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            buf[pos] = v;
            if !self.product_rec(masks, pos + 1, buf) {
                return false;
            }
        }
        true
    }

    /// Whether the vertex set `members` is a clique, i.e. `A^r ⊆ R`.
    pub fn is_clique(&self, members: &[usize]) -> bool {
        if members.is_empty() {
            return true;
        }
        let mut buf = vec![members[0]; self.arity];
        all_tuples_over(members, &mut buf, 0, &mut |t| self.contains(t))
    }
}

/// Calls `pred` on every tuple over `members` of length `buf.len()`,
/// stopping at the first `false`.
pub(crate) fn all_tuples_over<F>(members: &[usize], buf: &mut [usize], pos: usize, pred: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if pos == buf.len() {
        return pred(buf);
    }
    for &m in members {
        buf[pos] = m;
        if !all_tuples_over(members, buf, pos + 1, pred) {
            return false;
        }
    }
    true
}

fn build_index(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(name.clone()));
        }
    }
    Ok(index)
}

impl PartialEq for RSet {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.names == other.names && self.tuples == other.tuples
    }
}

impl Eq for RSet {}

impl fmt::Debug for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RSet")
            .field("arity", &self.arity)
            .field("vertices", &self.names)
            .field(
                "relation",
                &self
                    .tuples
                    .iter()
                    .map(|t| self.tuple_names(t))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// A vertex map. Validity as a map of r-sets is relative to a pair of r-sets
/// and is checked by [`RMap::new`] or [`is_rmap`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RMap {
    images: Vec<usize>,
    codomain: usize,
}

impl RMap {
    /// Checked constructor: `images` must be a map of r-sets `x -> y`.
    pub fn new(x: &RSet, y: &RSet, images: Vec<usize>) -> Result<Self> {
        if let Some(bad) = first_violation(x, y, &images)? {
            return Err(Error::NotAMap(x.tuple_names(&bad)));
        }
        Ok(RMap {
            images,
            codomain: y.len(),
        })
    }

    /// Builds from a name-to-name assignment.
    pub fn from_names<'a, I>(x: &RSet, y: &RSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut images = vec![usize::MAX; x.len()];
        for (a, b) in pairs {
            images[x.vertex_or_err(a)?] = y.vertex_or_err(b)?;
        }
        let assigned = images.iter().filter(|&&i| i != usize::MAX).count();
        if assigned != x.len() {
            return Err(Error::NotTotal {
                expected: x.len(),
                got: assigned,
            });
        }
        RMap::new(x, y, images)
    }

    pub(crate) fn unchecked(images: Vec<usize>, codomain: usize) -> Self {
        RMap { images, codomain }
    }

    pub fn identity(x: &RSet) -> Self {
        RMap {
            images: (0..x.len()).collect(),
            codomain: x.len(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn domain_len(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &RMap) -> Result<RMap> {
        if first.codomain != self.images.len() {
            return Err(Error::DomainMismatch(format!(
                "cannot compose: inner codomain has {} vertices, outer domain has {}",
                first.codomain,
                self.images.len()
            )));
        }
        Ok(RMap {
            images: first.images.iter().map(|&v| self.images[v]).collect(),
            codomain: self.codomain,
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.images.len() != self.codomain {
            return false;
        }
        let mut seen = vec![false; self.codomain];
        self.images
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn inverse(&self) -> Option<RMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.codomain];
        for (a, &b) in self.images.iter().enumerate() {
            inv[b] = a;
        }
        Some(RMap {
            images: inv,
            codomain: self.images.len(),
        })
    }

    /// `(domain name, image name)` pairs in domain order.
    pub fn named<'a>(&self, x: &'a RSet, y: &'a RSet) -> Vec<(&'a str, &'a str)> {
        self.images
            .iter()
            .enumerate()
            .map(|(a, &b)| (x.name(a), y.name(b)))
            .collect()
    }
}

fn check_total(x: &RSet, y: &RSet, images: &[usize]) -> Result<()> {
    if images.len() != x.len() {
        return Err(Error::NotTotal {
            expected: x.len(),
            got: images.len(),
        });
    }
    if let Some(&bad) = images.iter().find(|&&v| v >= y.len()) {
        return Err(Error::ImageOutOfRange {
            index: bad,
            size: y.len(),
        });
    }
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    Ok(())
}

fn first_violation(x: &RSet, y: &RSet, images: &[usize]) -> Result<Option<Vec<usize>>> {
    check_total(x, y, images)?;
    let mut buf = vec![0; x.arity()];
    for t in x.tuples() {
        for (slot, &v) in buf.iter_mut().zip(t) {
            *slot = images[v];
        }
        if !y.contains(&buf) {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

/// Whether `images` carries every tuple of `x` into the relation of `y`.
pub fn is_rmap(x: &RSet, y: &RSet, images: &[usize]) -> Result<bool> {
    Ok(first_violation(x, y, images)?.is_none())
}

/// A subset of the vertices of some r-set, kept in the parent's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(parent: &RSet, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&v| v >= parent.len()) {
            return Err(Error::ImageOutOfRange {
                index: bad,
                size: parent.len(),
            });
        }
        Ok(VertexSubset { members })
    }

    pub fn from_names<S: AsRef<str>>(parent: &RSet, names: &[S]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| parent.vertex_or_err(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        VertexSubset::new(parent, ids)
    }

    pub fn all(parent: &RSet) -> Self {
        VertexSubset {
            members: (0..parent.len()).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// The induced r-subset on `subset`: every tuple of `x` with all entries in it.
pub fn induced_subset(x: &RSet, subset: &VertexSubset) -> RSet {
    let mut position = vec![usize::MAX; x.len()];
    for (i, &v) in subset.members().iter().enumerate() {
        position[v] = i;
    }
    let names: Vec<String> = subset
        .members()
        .iter()
        .map(|&v| x.name(v).to_string())
        .collect();
    let tuples = x
        .tuples()
        .iter()
        .filter(|t| t.iter().all(|&v| position[v] != usize::MAX))
        .map(|t| t.iter().map(|&v| position[v]).collect::<Vec<_>>())
        .collect();
    let index = build_index(&names).expect("subset of distinct names");
    RSet::assemble(x.arity(), names, index, tuples)
}

/// The categorical product. Vertex `(a, b)` has index `a * |Y| + b`.
pub fn product(x: &RSet, y: &RSet) -> Result<RSet> {
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    let ny = y.len();
    let names: Vec<String> = x
        .names()
        .iter()
        .flat_map(|a| y.names().iter().map(move |b| format!("({a},{b})")))
        .collect();
    let mut tuples = Vec::with_capacity(x.relation_len() * y.relation_len());
    for s in x.tuples() {
        for t in y.tuples() {
            tuples.push(s.iter().zip(t).map(|(&a, &b)| a * ny + b).collect());
        }
    }
    let index = build_index(&names)?;
    Ok(RSet::assemble(x.arity(), names, index, tuples))
}

/// The first and second projections of `x × y`.
pub fn projections(x: &RSet, y: &RSet) -> (RMap, RMap) {
    let ny = y.len();
    let n = x.len() * ny;
    (
        RMap::unchecked((0..n).map(|v| v / ny).collect(), x.len()),
        RMap::unchecked((0..n).map(|v| v % ny).collect(), ny),
    )
}

/// Index of the set map `images: V(X) -> V(Y)` among the vertices of `Y^X`.
/// Maps are ordered lexicographically with the first vertex of `X` most
/// significant.
pub fn map_index(images: &[usize], target_len: usize) -> usize {
    images.iter().fold(0, |acc, &v| acc * target_len + v)
}

/// Inverse of [`map_index`].
pub fn map_images(mut index: usize, source_len: usize, target_len: usize) -> Vec<usize> {
    let mut images = vec![0; source_len];
    for slot in images.iter_mut().rev() {
        *slot = index % target_len.max(1);
        index /= target_len.max(1);
    }
    images
}

fn map_name(x: &RSet, y: &RSet, images: &[usize]) -> String {
    let body: Vec<String> = images
        .iter()
        .enumerate()
        .map(|(a, &b)| format!("{}:{}", x.name(a), y.name(b)))
        .collect();
    format!("{{{}}}", body.join(","))
}

/// The exponential `Y^X`: all set maps `V(X) -> V(Y)`, with `(f_1, ..., f_r)`
/// related iff `(f_1(x_1), ..., f_r(x_r)) ∈ R(Y)` for every `(x_1, ..., x_r) ∈ R(X)`.
pub fn exponential(y: &RSet, x: &RSet, guards: &Guards) -> Result<RSet> {
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: y.arity(),
            right: x.arity(),
        });
    }
    let count = guard::saturating_pow(y.len(), x.len());
    guard::check("max_exp_vertices", count, guards.max_exp_vertices)?;
    let count = count as usize;
    let maps: Vec<Vec<usize>> = (0..count).map(|i| map_images(i, x.len(), y.len())).collect();
    let names: Vec<String> = maps.iter().map(|m| map_name(x, y, m)).collect();

    let r = x.arity();
    let mut prefixes: HashSet<Vec<usize>> = HashSet::new();
    for t in y.tuples() {
        for k in 1..=r {
            prefixes.insert(t[..k].to_vec());
        }
    }
    let mut budget = Budget::visits(guards);
    let mut tuples = Vec::new();
    let mut chosen = Vec::with_capacity(r);
    exp_rec(x, &maps, &prefixes, &mut chosen, &mut tuples, &mut budget)?;
    let index = build_index(&names)?;
    Ok(RSet::assemble(r, names, index, tuples))
}

fn exp_rec(
    x: &RSet,
    maps: &[Vec<usize>],
    prefixes: &HashSet<Vec<usize>>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<()> {
    let k = chosen.len();
    if k == x.arity() {
        out.push(chosen.clone());
        return Ok(());
    }
    let mut prefix = vec![0; k + 1];
    for f in 0..maps.len() {
        budget.tick()?;
        chosen.push(f);
        let ok = x.tuples().iter().all(|t| {
            for (i, &g) in chosen.iter().enumerate() {
                prefix[i] = maps[g][t[i]];
            }
            prefixes.contains(&prefix)
        });
        if ok {
            exp_rec(x, maps, prefixes, chosen, out, budget)?;
        }
        chosen.pop();
    }
    Ok(())
}
