//! Theorem checks on concrete instances. Each case ends in PASS, FAIL or
//! SKIP; a SKIP means a guard refused the instance.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{complex_chains, homology, normalized_chains, ChainComplex};
use crate::complex::{order_complex_truncated, SimplicialComplex};
use crate::components::{poset_component_labels, poset_components};
use crate::corpus::{pairs, random_complex, random_preorder, random_rsets, Named};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::hom::{hom_poset, pushforward, ExpComparison, MultiMap, ProductComparison};
use crate::maps::{enumerate_rmaps, find_isomorphism};
use crate::oracles::{oracle_complex_dominated, oracle_poset_beat};
use crate::rset::{RMap, RSet};
use crate::sing::{curry_iso, product_iso, sing_truncated};
use crate::standard::{complete_graph, sigma, simplicial_complex};
use crate::strong::{beat_points, core, fold, is_minimal, FoldPolicy, MapGraph};
use crate::Int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            cases: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.cases.push(Case {
            name: name.into(),
            outcome,
        });
    }

    /// Records `Err` guard breaches as SKIP and other errors as FAIL.
    fn record(&mut self, name: impl Into<String>, result: Result<Outcome>) {
        let outcome = match result {
            Ok(o) => o,
            Err(e) if e.is_guard() => Outcome::Skip(e.to_string()),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        self.push(name, outcome);
    }

    pub fn count(&self, which: fn(&Outcome) -> bool) -> usize {
        self.cases.iter().filter(|c| which(&c.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Pass))
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail(_)))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skip(_)))
    }

    /// No failures and at least one pass.
    pub fn ok(&self) -> bool {
        self.failed() == 0 && self.passed() > 0
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} passed, {} failed, {} skipped",
            self.suite,
            self.passed(),
            self.failed(),
            self.skipped()
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS {}", c.name)?,
                Outcome::Fail(why) => writeln!(f, "FAIL {}: {why}", c.name)?,
                Outcome::Skip(why) => writeln!(f, "SKIP {}: {why}", c.name)?,
            }
        }
        writeln!(f, "{}", self.summary())
    }
}

fn check(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(why())
    }
}

fn degrees(chains: &ChainComplex) -> Result<String> {
    Ok(homology::<Int>(chains, 2)?.to_string().trim_end().replace('\n', ", "))
}

/// Singular and Hom-poset homology agree in degrees 0..=2, as do the
/// component counts. Pairs without maps are skipped.
pub fn thm31(corpus: &[Named], guards: &Guards) -> Report {
    let mut report = Report::new("thm31");
    for (t, x) in pairs(corpus) {
        let name = format!("{} -> {}", t.name, x.name);
        let result = (|| {
            if enumerate_rmaps(&t.rset, &x.rset, guards)?.is_empty() {
                return Ok(Outcome::Skip("no maps".into()));
            }
            let poset = hom_poset(&t.rset, &x.rset, guards)?;
            let sing = sing_truncated(&t.rset, &x.rset, 3, guards)?;
            let order = order_complex_truncated(&poset, 3, guards)?;
            let (cs, co) = (normalized_chains(&sing), complex_chains(&order));
            if !cs.is_complex() || !co.is_complex() {
                return Ok(Outcome::Fail("boundary does not square to zero".into()));
            }
            let (hs, ho) = (homology::<Int>(&cs, 2)?, homology::<Int>(&co, 2)?);
            let (ns, np) = (sing.components().len(), poset_components(&poset).len());
            Ok(check(hs.same_groups(&ho) && ns == np, || {
                format!(
                    "sing [{}] / {ns} components vs hom [{}] / {np} components",
                    degrees(&cs).unwrap_or_default(),
                    degrees(&co).unwrap_or_default()
                )
            }))
        })();
        report.record(name, result);
    }
    report
}

/// Largest map set for which every ordered pair of maps is compared.
const PROP44_MAX_MAPS: usize = 400;

/// Hom-poset components and adjacency-path connectivity give the same
/// homotopy relation; every path found re-validates as an `I_n`-homotopy.
pub fn prop44(corpus: &[Named], guards: &Guards) -> Report {
    let mut report = Report::new("prop44");
    for (a, b) in pairs(corpus) {
        let name = format!("{} -> {}", a.name, b.name);
        let result = (|| {
            let (x, y) = (&a.rset, &b.rset);
            let graph = MapGraph::new(x, y, guards)?;
            if graph.maps.len() > PROP44_MAX_MAPS {
                return Ok(Outcome::Skip(format!("{} maps exceed {PROP44_MAX_MAPS}", graph.maps.len())));
            }
            let poset = hom_poset(x, y, guards)?;
            let labels = poset_component_labels(&poset);
            let index = poset.index_map();
            let by_poset: Vec<usize> = graph.maps.iter().map(|f| labels[index[&MultiMap::from_rmap(f)]]).collect();
            let by_path = graph.component_labels();
            let m = graph.maps.len();
            for i in 0..m {
                for j in 0..m {
                    let hom_verdict = by_poset[i] == by_poset[j];
                    let path = graph.path(i, j);
                    if hom_verdict != path.is_some() {
                        return Ok(Outcome::Fail(format!("methods disagree on maps {i} and {j}")));
                    }
                    if (by_path[i] == by_path[j]) != hom_verdict {
                        return Ok(Outcome::Fail(format!("component labels disagree on maps {i} and {j}")));
                    }
                    if let Some(p) = path {
                        if p.steps.first() != Some(&graph.maps[i])
                            || p.steps.last() != Some(&graph.maps[j])
                            || !p.validate(x, y)?
                        {
                            return Ok(Outcome::Fail(format!("path from map {i} to {j} does not validate")));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        })();
        report.record(name, result);
    }
    report
}

/// Number of fold policies compared per r-set: `first` plus seeded random.
pub const POLICIES: usize = 5;

fn policies(seed: u64, index: usize) -> Vec<FoldPolicy> {
    let mut out = vec![FoldPolicy::First];
    out.extend((1..POLICIES as u64).map(|k| FoldPolicy::Random(seed ^ (index as u64) << 8 ^ k)));
    out
}

/// Cores under different fold policies are pairwise isomorphic and minimal.
pub fn core_uniqueness(seed: u64, count: usize) -> Report {
    let mut report = Report::new("core-uniqueness");
    for (i, x) in random_rsets(seed, count).iter().enumerate() {
        let name = format!("random #{i} (r={}, {} vertices, {} tuples)", x.arity(), x.len(), x.relation_len());
        let result = (|| {
            let cores = policies(seed, i)
                .into_iter()
                .map(|p| core(x, p))
                .collect::<Result<Vec<_>>>()?;
            for (k, c) in cores.iter().enumerate() {
                if !is_minimal(&c.core) {
                    return Ok(Outcome::Fail(format!("core under policy {k} has a beat point")));
                }
                if c.core.len() + c.folds.len() != x.len() {
                    return Ok(Outcome::Fail(format!("policy {k} lost track of vertices")));
                }
            }
            for a in 0..cores.len() {
                for b in a + 1..cores.len() {
                    if find_isomorphism(&cores[a].core, &cores[b].core).is_none() {
                        return Ok(Outcome::Fail(format!(
                            "cores under policies {a} and {b} are not isomorphic ({} vs {} vertices)",
                            cores[a].core.len(),
                            cores[b].core.len()
                        )));
                    }
                }
            }
            Ok(Outcome::Pass)
        })();
        report.record(name, result);
    }
    report
}

/// Every beat point of every random r-set folds with a valid retraction and
/// connecting multi-map.
pub fn folds(seed: u64, count: usize) -> Report {
    let mut report = Report::new("folds");
    for (i, x) in random_rsets(seed, count).iter().enumerate() {
        for w in beat_points(x) {
            let name = format!("random #{i} fold {} onto {}", x.name(w.point), x.name(w.witness));
            let result = fold(x, w).and_then(|f| f.check(x)).map(|c| check(c.passed(), || format!("{c:?}")));
            report.record(name, result);
        }
    }
    report
}

/// The triples on which the product and exponential comparisons are run.
pub fn comparison_triples() -> Vec<(&'static str, RSet, RSet, RSet)> {
    let (s0, s1, s2) = (sigma(2, 0).unwrap(), sigma(2, 1).unwrap(), sigma(2, 2).unwrap());
    let (k2, k3) = (complete_graph(2).unwrap(), complete_graph(3).unwrap());
    vec![
        ("(sigma0, k2, k3)", s0, k2.clone(), k3.clone()),
        ("(k2, k2, k3)", k2.clone(), k2, k3),
        ("(sigma1, sigma1, sigma2)", s1.clone(), s1, s2),
    ]
}

/// Dimension up to which the simplicial isomorphisms are checked.
pub const ISO_DIM: usize = 3;

fn comparison_suite(
    suite: &str,
    hom_check: impl Fn(&RSet, &RSet, &RSet) -> Result<crate::hom::ComparisonCheck>,
    sing_check: impl Fn(&RSet, &RSet, &RSet) -> Result<crate::sing::IsoReport>,
) -> Report {
    let mut report = Report::new(suite);
    for (name, x, y, z) in comparison_triples() {
        report.record(
            format!("{name} hom"),
            hom_check(&x, &y, &z).map(|c| check(c.passed(), || format!("{c:?}"))),
        );
        report.record(
            format!("{name} sing up to dimension {ISO_DIM}"),
            sing_check(&x, &y, &z).map(|r| {
                check(r.passed(), || {
                    let bad = r.dims.iter().find(|d| {
                        !(d.images_valid && d.faces_commute && d.degeneracies_commute && d.source_count == d.target_count)
                    });
                    format!("first failing dimension: {bad:?}")
                })
            }),
        );
    }
    report
}

/// `Hom(X, Y×Z)` against `Hom(X, Y) × Hom(X, Z)`, and
/// `Sing(X, Y×Z) ≅ Sing(X, Y) × Sing(X, Z)`.
pub fn lemma27(guards: &Guards) -> Report {
    comparison_suite(
        "lemma27",
        |x, y, z| Ok(ProductComparison::build(x, y, z, guards)?.check()),
        |x, y, z| product_iso(x, y, z, ISO_DIM, guards),
    )
}

/// `Hom(X×Y, Z)` against `Hom(X, Z^Y)`, and `Sing(X×Y, Z) ≅ Sing(X, Z^Y)`.
pub fn lemma29(guards: &Guards) -> Report {
    comparison_suite(
        "lemma29",
        |x, y, z| Ok(ExpComparison::build(x, y, z, guards)?.check()),
        |x, y, z| curry_iso(x, y, z, ISO_DIM, guards),
    )
}

/// Number of random preorders and complexes in the beat-point cross-check.
pub const EXAMPLE46_PREORDERS: usize = 50;
pub const EXAMPLE46_COMPLEXES: usize = 20;

/// Beat points per vertex by the r-set definition.
fn beat_flags(x: &RSet) -> Vec<bool> {
    let mut flags = vec![false; x.len()];
    for w in beat_points(x) {
        flags[w.point] = true;
    }
    flags
}

fn disagreement(names: &[String], ours: &[bool], theirs: &[bool]) -> Option<String> {
    (0..ours.len())
        .find(|&v| ours[v] != theirs[v])
        .map(|v| format!("vertex {}: definition says {}, oracle says {}", names[v], ours[v], theirs[v]))
}

pub fn random_complexes(seed: u64) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x46);
    (0..EXAMPLE46_COMPLEXES).map(|_| random_complex(&mut rng, 6)).collect()
}

pub fn random_preorders(seed: u64) -> Vec<RSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x45);
    (0..EXAMPLE46_PREORDERS).map(|_| random_preorder(&mut rng, 6)).collect()
}

/// Beat points of the r-set definition against upper/lower beat points of
/// preorders and against domination in simplicial complexes encoded with
/// arity `dim + 1`.
pub fn example46(seed: u64) -> Report {
    let mut report = Report::new("example46");
    for (i, p) in random_preorders(seed).iter().enumerate() {
        let result = (|| {
            let theirs = (0..p.len()).map(|v| oracle_poset_beat(p, v)).collect::<Result<Vec<_>>>()?;
            Ok(match disagreement(p.names(), &beat_flags(p), &theirs) {
                None => Outcome::Pass,
                Some(why) => Outcome::Fail(why),
            })
        })();
        report.record(format!("preorder #{i} ({} elements)", p.len()), result);
    }
    for (i, c) in random_complexes(seed).iter().enumerate() {
        let r = c.dim().unwrap_or(0) + 1;
        report.record(format!("complex #{i} (dim {}, r={r})", r - 1), complex_agreement(c, r));
    }
    report
}

/// Compares the two notions on one complex encoded with the given arity.
pub fn complex_agreement(c: &SimplicialComplex, arity: usize) -> Result<Outcome> {
    let x = simplicial_complex(arity, c)?;
    let theirs = (0..x.len())
        .map(|v| oracle_complex_dominated(c, v, arity))
        .collect::<Result<Vec<_>>>()?;
    Ok(match disagreement(x.names(), &beat_flags(&x), &theirs) {
        None => Outcome::Pass,
        Some(why) => Outcome::Fail(why),
    })
}

/// Whether some other element is equivalent to `x` in the preorder, the
/// form the r-set definition takes on 2-sets of preorders.
pub fn has_equivalent(p: &RSet, x: usize) -> bool {
    (0..p.len()).any(|y| y != x && p.contains(&[x, y]) && p.contains(&[y, x]))
}

/// Agreement counts behind the beat-point cross-check: the definition
/// against "has an equivalent element" on the random preorders, and against
/// domination on the random complexes encoded with arity `dim + 2`.
pub fn example46_diagnostics(seed: u64) -> Result<(usize, usize, usize, usize)> {
    let preorders = random_preorders(seed);
    let agree_preorders = preorders
        .iter()
        .filter(|p| {
            let flags = beat_flags(p);
            (0..p.len()).all(|v| flags[v] == has_equivalent(p, v))
        })
        .count();
    let complexes = random_complexes(seed);
    let mut agree_complexes = 0;
    for c in &complexes {
        if complex_agreement(c, c.dim().unwrap_or(0) + 2)? == Outcome::Pass {
            agree_complexes += 1;
        }
    }
    Ok((agree_preorders, preorders.len(), agree_complexes, complexes.len()))
}

/// Components of the maps `X -> X` under adjacency, with the identity's label.
fn endo_labels(x: &RSet, guards: &Guards) -> Result<(MapGraph, Vec<usize>, usize)> {
    let graph = MapGraph::new(x, x, guards)?;
    let labels = graph.component_labels();
    let id = labels[graph.index_of(&RMap::identity(x)).expect("identity is a map")];
    Ok((graph, labels, id))
}

/// On minimal r-sets the identity is alone in its component, and every
/// strong homotopy equivalence between minimal r-sets is an isomorphism.
pub fn minimal(corpus: &[Named], guards: &Guards) -> Report {
    let mut report = Report::new("minimal");
    let minimal: Vec<&Named> = corpus.iter().filter(|n| is_minimal(&n.rset)).collect();
    for n in &minimal {
        let result = (|| {
            let (_, labels, id) = endo_labels(&n.rset, guards)?;
            let size = labels.iter().filter(|&&l| l == id).count();
            Ok(check(size == 1, || format!("identity component has {size} maps")))
        })();
        report.record(format!("{} identity component", n.name), result);
    }
    for &a in &minimal {
        for &b in &minimal {
            if a.rset.arity() != b.rset.arity() {
                continue;
            }
            let result = (|| {
                let (x, y) = (&a.rset, &b.rset);
                let (gx, lx, idx) = endo_labels(x, guards)?;
                let (gy, ly, idy) = endo_labels(y, guards)?;
                let backwards = enumerate_rmaps(y, x, guards)?;
                for f in enumerate_rmaps(x, y, guards)? {
                    let is_equivalence = backwards.iter().any(|g| {
                        let gf = g.after(&f).expect("composable");
                        let fg = f.after(g).expect("composable");
                        lx[gx.index_of(&gf).unwrap()] == idx && ly[gy.index_of(&fg).unwrap()] == idy
                    });
                    if is_equivalence {
                        let iso = f.inverse().is_some_and(|inv| crate::rset::is_rmap(y, x, inv.images()).unwrap_or(false));
                        if !iso {
                            return Ok(Outcome::Fail(format!("equivalence {:?} is not an isomorphism", f.images())));
                        }
                    }
                }
                Ok(Outcome::Pass)
            })();
            report.record(format!("{} -> {} equivalences", a.name, b.name), result);
        }
    }
    report
}

/// π₀ shadows of functoriality: homotopic maps push components of
/// `Hom(Z, X)` to the same components of `Hom(Z, Y)`, and an equivalence
/// induces a bijection on components.
pub fn pi0_pushforward(z: &RSet, x: &RSet, y: &RSet, f: &RMap, g: &RMap, guards: &Guards) -> Result<bool> {
    let source = hom_poset(z, x, guards)?;
    let target = hom_poset(z, y, guards)?;
    let (ls, lt) = (poset_component_labels(&source), poset_component_labels(&target));
    let index = target.index_map();
    let mut seen: Vec<Option<usize>> = vec![None; source.len()];
    for (i, eta) in source.elements().iter().enumerate() {
        let a = lt[index[&pushforward(f, eta)?]];
        let b = lt[index[&pushforward(g, eta)?]];
        if a != b {
            return Ok(false);
        }
        match seen[ls[i]] {
            Some(prev) if prev != a => return Ok(false),
            _ => seen[ls[i]] = Some(a),
        }
    }
    Ok(true)
}

/// Whether `f_*` induces a bijection from the components of `Hom(Z, X)` to
/// those of `Hom(Z, Y)`.
pub fn pi0_bijection(z: &RSet, x: &RSet, y: &RSet, f: &RMap, guards: &Guards) -> Result<bool> {
    let source = hom_poset(z, x, guards)?;
    let target = hom_poset(z, y, guards)?;
    let (ls, lt) = (poset_component_labels(&source), poset_component_labels(&target));
    let index = target.index_map();
    let ns = ls.iter().max().map_or(0, |m| m + 1);
    let nt = lt.iter().max().map_or(0, |m| m + 1);
    let mut image = vec![None; ns];
    for (i, eta) in source.elements().iter().enumerate() {
        let t = lt[index[&pushforward(f, eta)?]];
        match image[ls[i]] {
            Some(prev) if prev != t => return Ok(false),
            _ => image[ls[i]] = Some(t),
        }
    }
    let mut hit = vec![false; nt];
    for t in image.into_iter().flatten() {
        if hit[t] {
            return Ok(false);
        }
        hit[t] = true;
    }
    Ok(hit.into_iter().all(|h| h))
}

/// Runs a suite by its command-line name.
pub fn run(name: &str, corpus: &[Named], seed: u64, guards: &Guards) -> Result<Report> {
    Ok(match name {
        "thm31" => thm31(corpus, guards),
        "prop44" => prop44(corpus, guards),
        "core-uniqueness" => core_uniqueness(seed, 100),
        "folds" => folds(seed, 100),
        "lemma27" => lemma27(guards),
        "lemma29" => lemma29(guards),
        "example46" => example46(seed),
        "minimal" => minimal(corpus, guards),
        other => return Err(Error::Invalid(format!("unknown suite `{other}`"))),
    })
}

pub const SUITES: &[&str] = &[
    "thm31",
    "prop44",
    "core-uniqueness",
    "folds",
    "lemma27",
    "lemma29",
    "example46",
    "minimal",
];
