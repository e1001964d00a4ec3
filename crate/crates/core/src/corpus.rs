//! Built-in named instances and seeded random generators.

use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::io::read_rset;
use crate::rset::RSet;
use crate::standard::{complete_graph, cycle, interval, preorder, sigma, simplicial_complex, triangle_boundary};

#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub rset: RSet,
}

fn named(name: &str, rset: RSet) -> Named {
    Named {
        name: name.to_string(),
        rset,
    }
}

/// Σ₀, Σ₁, Σ₂, K₂, K₃, loopless C₅, reflexive C₄, I₂, I₃ as 2-sets and the
/// boundary of a triangle as a 3-set.
pub fn builtin() -> Vec<Named> {
    let build = || -> Result<Vec<Named>> {
        Ok(vec![
            named("sigma0", sigma(2, 0)?),
            named("sigma1", sigma(2, 1)?),
            named("sigma2", sigma(2, 2)?),
            named("k2", complete_graph(2)?),
            named("k3", complete_graph(3)?),
            named("c5", cycle(5, false)?),
            named("c4_reflexive", cycle(4, true)?),
            named("i2", interval(2, 2)?),
            named("i3", interval(2, 3)?),
            named("triangle_boundary_r3", simplicial_complex(3, &triangle_boundary())?),
        ])
    };
    build().expect("built-in instances are valid")
}

/// Ordered pairs of corpus entries with equal arity.
pub fn pairs(corpus: &[Named]) -> Vec<(&Named, &Named)> {
    corpus
        .iter()
        .flat_map(|a| corpus.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.rset.arity() == b.rset.arity())
        .collect()
}

/// Every `*.json` r-set file in a directory, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<Named>> {
    let listing = || -> std::io::Result<Vec<_>> { std::fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect() };
    let mut paths = listing().map_err(|e| Error::Invalid(format!("corpus {}: {e}", dir.display())))?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok(Named { name, rset: read_rset(&p)? })
        })
        .collect()
}

/// `default` names the built-in corpus; anything else is a directory.
pub fn resolve(spec: &str) -> Result<Vec<Named>> {
    if spec == "default" {
        Ok(builtin())
    } else {
        load_dir(Path::new(spec))
    }
}

/// An r-set with each of the `n^r` tuples present independently with
/// probability `density`.
pub fn random_rset(rng: &mut impl Rng, arity: usize, n: usize, density: f64) -> RSet {
    let total = n.pow(arity as u32);
    let tuples = (0..total).filter(|_| rng.gen_bool(density)).map(|mut code| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    });
    RSet::from_indices(arity, (0..n).map(|i| i.to_string()).collect(), tuples).expect("valid random r-set")
}

/// The random r-sets of the fold-uniqueness checks: arity 2 or 3, 1 to 7
/// vertices, density drawn from `[0.3, 0.7]`.
pub fn random_rsets(seed: u64, count: usize) -> Vec<RSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let arity = rng.gen_range(2..=3);
            let n = rng.gen_range(1..=7);
            let density = rng.gen_range(0.3..=0.7);
            random_rset(&mut rng, arity, n, density)
        })
        .collect()
}

/// A random preorder on at most `max` elements: the reflexive-transitive
/// closure of random pairs.
pub fn random_preorder(rng: &mut impl Rng, max: usize) -> RSet {
    let n = rng.gen_range(1..=max);
    let p = rng.gen_range(0.1..=0.4);
    let mut rel = vec![vec![false; n]; n];
    for (a, row) in rel.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            *cell = a == b || rng.gen_bool(p);
        }
    }
    for k in 0..n {
        let through = rel[k].clone();
        for row in rel.iter_mut().filter(|row| row[k]) {
            for (cell, &reach) in row.iter_mut().zip(&through) {
                *cell |= reach;
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| rel[a][b])
        .collect();
    preorder((0..n).map(|i| i.to_string()).collect(), &pairs).expect("closure is a preorder")
}

/// A random simplicial complex on at most `max` vertices, generated by a
/// few random facets of size 1 to 4.
pub fn random_complex(rng: &mut impl Rng, max: usize) -> SimplicialComplex {
    let n = rng.gen_range(2..=max);
    let facets = rng.gen_range(1..=n + 1);
    let mut simplices: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for _ in 0..facets {
        let size = rng.gen_range(1..=4.min(n));
        let mut members: Vec<usize> = (0..n).collect();
        for i in 0..size {
            let j = rng.gen_range(i..n);
            members.swap(i, j);
        }
        members.truncate(size);
        members.sort_unstable();
        simplices.push(members);
    }
    SimplicialComplex::from_simplices((0..n).map(|i| i.to_string()).collect(), simplices)
        .expect("valid random complex")
}
