//! Enumeration of r-set maps and isomorphism search, both by backtracking
//! over the domain vertices in declared order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::guard::{Budget, Guards};
use crate::rset::{RMap, RSet};

/// For each vertex `v`, the tuples of `x` whose largest entry is `v`: these are
/// exactly the tuples that become fully assigned once `v` is.
pub(crate) fn tuples_completed_at(x: &RSet) -> Vec<Vec<&[usize]>> {
    let mut by_last = vec![Vec::new(); x.len()];
    for t in x.tuples() {
        if let Some(&last) = t.iter().max() {
            by_last[last].push(t.as_slice());
        }
    }
    by_last
}

/// All maps of r-sets `x -> y`, in lexicographic order of their image vectors.
pub fn enumerate_rmaps(x: &RSet, y: &RSet, guards: &Guards) -> Result<Vec<RMap>> {
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    let completed = tuples_completed_at(x);
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(x.len());
    let mut budget = Budget::visits(guards);
    let mut buf = vec![0; x.arity()];
    rmap_rec(x, y, &completed, &mut images, &mut buf, &mut out, &mut budget)?;
    Ok(out)
}

fn rmap_rec(
    x: &RSet,
    y: &RSet,
    completed: &[Vec<&[usize]>],
    images: &mut Vec<usize>,
    buf: &mut [usize],
    out: &mut Vec<RMap>,
    budget: &mut Budget,
) -> Result<()> {
    let v = images.len();
    if v == x.len() {
        out.push(RMap::unchecked(images.clone(), y.len()));
        return Ok(());
    }
    for target in 0..y.len() {
        budget.tick()?;
        images.push(target);
        let ok = completed[v].iter().all(|t| {
            for (slot, &a) in buf.iter_mut().zip(t.iter()) {
                *slot = images[a];
            }
            y.contains(buf)
        });
        if ok {
            rmap_rec(x, y, completed, images, buf, out, budget)?;
        }
        images.pop();
    }
    Ok(())
}

/// Per-vertex invariant: how many tuples the vertex occurs in, keyed by the
/// set of positions it occupies there.
fn vertex_invariant(x: &RSet, v: usize) -> Vec<(u64, usize)> {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    let mut current: Option<(usize, u64)> = None;
    for &(t, pos) in x.occurrences(v) {
        match current {
            Some((ct, ref mut mask)) if ct == t => *mask |= 1 << pos,
            _ => {
                if let Some((_, mask)) = current {
                    *counts.entry(mask).or_default() += 1;
                }
                current = Some((t, 1 << pos));
            }
        }
    }
    if let Some((_, mask)) = current {
        *counts.entry(mask).or_default() += 1;
    }
    counts.into_iter().collect()
}

/// An isomorphism `x -> y` if one exists. The search is deterministic: domain
/// vertices are assigned in order, each to the first admissible unused target.
pub fn find_isomorphism(x: &RSet, y: &RSet) -> Option<RMap> {
    if x.arity() != y.arity() || x.len() != y.len() || x.relation_len() != y.relation_len() {
        return None;
    }
    let inv_x: Vec<_> = (0..x.len()).map(|v| vertex_invariant(x, v)).collect();
    let inv_y: Vec<_> = (0..y.len()).map(|v| vertex_invariant(y, v)).collect();
    let mut sorted_x = inv_x.clone();
    let mut sorted_y = inv_y.clone();
    sorted_x.sort();
    sorted_y.sort();
    if sorted_x != sorted_y {
        return None;
    }
    let completed = tuples_completed_at(x);
    let mut images = Vec::with_capacity(x.len());
    let mut used = vec![false; y.len()];
    let mut buf = vec![0; x.arity()];
    if iso_rec(x, y, &inv_x, &inv_y, &completed, &mut images, &mut used, &mut buf) {
        Some(RMap::unchecked(images, y.len()))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_rec(
    x: &RSet,
    y: &RSet,
    inv_x: &[Vec<(u64, usize)>],
    inv_y: &[Vec<(u64, usize)>],
    completed: &[Vec<&[usize]>],
    images: &mut Vec<usize>,
    used: &mut [bool],
    buf: &mut [usize],
) -> bool {
    let v = images.len();
    if v == x.len() {
        // Injective on tuples with equal relation sizes: the image is all of R(y).
        return true;
    }
    for target in 0..y.len() {
        if used[target] || inv_x[v] != inv_y[target] {
            continue;
        }
        images.push(target);
        let ok = completed[v].iter().all(|t| {
            for (slot, &a) in buf.iter_mut().zip(t.iter()) {
                *slot = images[a];
            }
            y.contains(buf)
        });
        if ok {
            used[target] = true;
            if iso_rec(x, y, inv_x, inv_y, completed, images, used, buf) {
                return true;
            }
            used[target] = false;
        }
        images.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rset::is_rmap;
    use crate::standard::{complete_graph, cycle, sigma};

    #[test]
    fn no_maps_from_looped_point_to_k2() {
        let maps = enumerate_rmaps(&sigma(2, 0).unwrap(), &complete_graph(2).unwrap(), &Guards::default());
        assert!(maps.unwrap().is_empty());
    }

    #[test]
    fn k2_to_k3_has_six_maps() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let maps = enumerate_rmaps(&k2, &k3, &Guards::default()).unwrap();
        assert_eq!(maps.len(), 6);
        assert!(maps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn identity_is_enumerated() {
        let c5 = cycle(5, false).unwrap();
        let maps = enumerate_rmaps(&c5, &c5, &Guards::default()).unwrap();
        assert!(maps.contains(&RMap::identity(&c5)));
        // Automorphisms plus the non-injective homomorphisms C5 -> C5.
        assert!(maps.iter().all(|m| is_rmap(&c5, &c5, m.images()).unwrap()));
    }

    #[test]
    fn guard_is_enforced() {
        let s = sigma(2, 3).unwrap();
        let guards = Guards {
            max_visits: 10,
            ..Guards::default()
        };
        assert!(enumerate_rmaps(&s, &s, &guards).unwrap_err().is_guard());
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = cycle(5, false).unwrap();
        assert_eq!(find_isomorphism(&c5, &c5), Some(RMap::identity(&c5)));
        assert_eq!(
            find_isomorphism(&complete_graph(2).unwrap(), &sigma(2, 1).unwrap()),
            None
        );
        // C5 with vertices renamed and listed in a different order.
        let perm = [3usize, 0, 4, 1, 2];
        let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let tuples = c5
            .tuples()
            .iter()
            .map(|t| t.iter().map(|&v| perm[v]).collect::<Vec<_>>());
        let renamed = RSet::from_indices(2, names, tuples).unwrap();
        let iso = find_isomorphism(&c5, &renamed).expect("isomorphic");
        assert!(is_rmap(&c5, &renamed, iso.images()).unwrap());
        let inv = iso.inverse().unwrap();
        assert!(is_rmap(&renamed, &c5, inv.images()).unwrap());
    }
}
