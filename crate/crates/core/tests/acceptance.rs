//! One PASS/FAIL line per acceptance criterion. Every threshold below is
//! exact except the runtime budget of the first criterion.
//!
//! Criterion 8 is known not to hold for the definition of beat points as
//! stated (see `KNOWN_FAILURES`); its line still reports FAIL, and the
//! target only exits non-zero if a criterion outside that list fails or a
//! listed one starts passing.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{bareiss_det, naive_mul};

use rsets::algebra::{complex_chains, homology, normalized_chains, smith_normal_form, ChainComplex};
use rsets::complex::order_complex;
use rsets::corpus::builtin;
use rsets::hom::hom_poset;
use rsets::standard::complete_graph;
use rsets::verify::{self, Outcome, Report};
use rsets::{sing_truncated, Guards, Homology, Int, IntMatrix};

const SEED: u64 = 0;
const RANDOM_RSETS: usize = 100;
const THM31_BUDGET: Duration = Duration::from_secs(300);
const SNF_MATRICES: usize = 200;
const SNF_MAX_DIM: usize = 8;
const SNF_ENTRY: i64 = 5;
const KNOWN_FAILURES: &[u32] = &[8];

struct Line {
    criterion: u32,
    pass: bool,
    detail: String,
}

fn line(criterion: u32, pass: bool, detail: impl Into<String>) -> Line {
    Line {
        criterion,
        pass,
        detail: detail.into(),
    }
}

fn from_report(criterion: u32, r: &Report, extra: &str) -> Line {
    let mut detail = format!("{}{extra}", r.summary());
    if let Some(c) = r.first_failure() {
        if let Outcome::Fail(why) = &c.outcome {
            detail.push_str(&format!("; first failure: {}: {why}", c.name));
        }
    }
    line(criterion, r.ok(), detail)
}

fn only(r: &Report, suffix: &str) -> Report {
    Report {
        suite: format!("{} ({suffix})", r.suite),
        cases: r.cases.iter().filter(|c| c.name.contains(suffix)).cloned().collect(),
    }
}

fn criterion1(guards: &Guards) -> Line {
    let start = Instant::now();
    let r = verify::thm31(&builtin(), guards);
    let elapsed = start.elapsed();
    let mut l = from_report(1, &r, &format!(", {:.1}s", elapsed.as_secs_f64()));
    l.pass &= elapsed < THM31_BUDGET;
    l
}

/// Multi-maps K₂ → K₃ by brute force over all pairs of nonempty subsets.
fn brute_force_hom_k2_k3() -> (usize, usize) {
    let adjacent = |a: usize, b: usize| a != b;
    let mut elements = Vec::new();
    for s in 1u8..8 {
        for t in 1u8..8 {
            let ok = (0..3)
                .filter(|a| s >> a & 1 == 1)
                .all(|a| (0..3).filter(|b| t >> b & 1 == 1).all(|b| adjacent(a, b)));
            if ok {
                elements.push((s, t));
            }
        }
    }
    let sub = |x: u8, y: u8| x & !y == 0;
    let strict = elements
        .iter()
        .flat_map(|a| elements.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a != b && sub(a.0, b.0) && sub(a.1, b.1))
        .count();
    (elements.len(), strict)
}

fn is_circle(h: &Homology) -> bool {
    h.betti_numbers() == [1, 1, 0] && h.groups.iter().all(|g| g.torsion.is_empty())
}

fn criterion2(guards: &Guards) -> Line {
    let run = || -> rsets::Result<(usize, usize, Homology, Homology)> {
        let k2 = complete_graph(2)?;
        let k3 = complete_graph(3)?;
        let poset = hom_poset(&k2, &k3, guards)?;
        let hom = homology::<Int>(&complex_chains(&order_complex(&poset, guards)?), 2)?;
        let sing = homology::<Int>(&normalized_chains(&sing_truncated(&k2, &k3, 3, guards)?), 2)?;
        Ok((poset.len(), poset.strict_pairs().len(), hom, sing))
    };
    match run() {
        Ok((n, strict, hom, sing)) => {
            let (bn, bs) = brute_force_hom_k2_k3();
            let pass = n == 12 && bn == 12 && strict == bs && is_circle(&hom) && is_circle(&sing);
            line(
                2,
                pass,
                format!(
                    "{n} elements (brute force {bn}), {strict} strict relations (brute force {bs}); hom: {}; sing: {}",
                    hom.to_string().trim_end().replace('\n', ", "),
                    sing.to_string().trim_end().replace('\n', ", ")
                ),
            )
        }
        Err(e) => line(2, false, e.to_string()),
    }
}

fn snf_ok(m: &IntMatrix) -> Result<(), String> {
    let s = smith_normal_form(m);
    let um = naive_mul(&s.u, m);
    let um = IntMatrix::from_rows(um).unwrap();
    let umv = naive_mul(&um, &s.v);
    let d: Vec<Vec<BigInt>> = (0..s.d.rows()).map(|i| (0..s.d.cols()).map(|j| s.d.get(i, j).clone()).collect()).collect();
    if umv != d {
        return Err("U·M·V ≠ D".into());
    }
    if !bareiss_det(&s.u).abs().is_one() || !bareiss_det(&s.v).abs().is_one() {
        return Err("transform not unimodular".into());
    }
    let diag = s.d.diagonal();
    let off = (0..s.d.rows()).any(|i| (0..s.d.cols()).any(|j| i != j && !s.d.get(i, j).is_zero()));
    if off || diag.iter().any(|x| x.is_negative()) {
        return Err("D is not a nonnegative diagonal".into());
    }
    let nonzero: Vec<&BigInt> = diag.iter().filter(|x| !x.is_zero()).collect();
    if diag.iter().skip(nonzero.len()).any(|x| !x.is_zero()) {
        return Err("zeros precede nonzero diagonal entries".into());
    }
    if nonzero.windows(2).any(|w| !(w[1] % w[0]).is_zero()) {
        return Err("invariant factors do not divide each other".into());
    }
    Ok(())
}

/// Largest `rows × inner × cols` for which a composite of boundaries is
/// multiplied out densely as well.
const DENSE_CHECK_LIMIT: usize = 50_000_000;

/// `∂_n ∘ ∂_{n+1} = 0`, multiplied out densely where small enough.
fn squares_to_zero(c: &ChainComplex) -> bool {
    let top = c.top_degree().unwrap_or(0);
    (1..top).all(|n| {
        let ranks = c.ranks();
        if ranks[n - 1] * ranks[n] * ranks[n + 1] > DENSE_CHECK_LIMIT {
            return true;
        }
        let (a, b) = (c.boundary(n).unwrap().to_dense::<Int>(), c.boundary(n + 1).unwrap().to_dense::<Int>());
        naive_mul(&a, &b).iter().flatten().all(Zero::is_zero)
    })
}

fn criterion10(guards: &Guards) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut snf_failures = Vec::new();
    for k in 0..SNF_MATRICES {
        let (r, c) = (rng.gen_range(1..=SNF_MAX_DIM), rng.gen_range(1..=SNF_MAX_DIM));
        let rows: Vec<Vec<BigInt>> = (0..r)
            .map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-SNF_ENTRY..=SNF_ENTRY))).collect())
            .collect();
        if let Err(why) = snf_ok(&IntMatrix::from_rows(rows).unwrap()) {
            snf_failures.push(format!("matrix #{k}: {why}"));
        }
    }
    let mut complexes = 0;
    let mut bad_complexes = 0;
    let mut check = |c: ChainComplex| {
        complexes += 1;
        if !(c.is_complex() && squares_to_zero(&c)) {
            bad_complexes += 1;
        }
    };
    for k in verify::random_complexes(SEED) {
        check(complex_chains(&k));
    }
    let corpus = builtin();
    for (t, x) in rsets::corpus::pairs(&corpus) {
        if let Ok(s) = sing_truncated(&t.rset, &x.rset, 2, guards) {
            check(normalized_chains(&s));
        }
        if let Ok(p) = hom_poset(&t.rset, &x.rset, guards) {
            if let Ok(o) = rsets::complex::order_complex_truncated(&p, 3, guards) {
                check(complex_chains(&o));
            }
        }
    }
    let pass = snf_failures.is_empty() && bad_complexes == 0 && complexes > 0;
    let mut detail = format!(
        "{}/{SNF_MATRICES} SNF postconditions hold; boundary squares to zero on {}/{complexes} chain complexes",
        SNF_MATRICES - snf_failures.len(),
        complexes - bad_complexes
    );
    if let Some(f) = snf_failures.first() {
        detail.push_str(&format!("; {f}"));
    }
    line(10, pass, detail)
}

fn main() -> ExitCode {
    let guards = Guards::default();
    let mut lines = Vec::new();
    let mut info = Vec::new();

    lines.push(criterion1(&guards));
    lines.push(criterion2(&guards));
    lines.push(from_report(3, &verify::core_uniqueness(SEED, RANDOM_RSETS), ""));
    let folds = verify::folds(SEED, RANDOM_RSETS);
    lines.push(from_report(4, &folds, ""));
    lines.push(from_report(5, &verify::prop44(&builtin(), &guards), ""));
    let (l27, l29) = (verify::lemma27(&guards), verify::lemma29(&guards));
    let (h27, h29) = (only(&l27, "hom"), only(&l29, "hom"));
    let (s27, s29) = (only(&l27, "sing"), only(&l29, "sing"));
    let both = |criterion, a: &Report, b: &Report| {
        let merged = Report {
            suite: format!("{} + {}", a.suite, b.suite),
            cases: a.cases.iter().chain(&b.cases).cloned().collect(),
        };
        from_report(criterion, &merged, "")
    };
    lines.push(both(6, &h27, &h29));
    lines.push(both(7, &s27, &s29));
    lines.push(from_report(8, &verify::example46(SEED), ""));
    match verify::example46_diagnostics(SEED) {
        Ok((p, np, c, nc)) => {
            info.push(format!(
                "criterion 8: on preorders the definition marks exactly the elements with an equivalent element ({p}/{np} preorders)"
            ));
            info.push(format!(
                "criterion 8: with arity dim + 2 the definition agrees with domination on {c}/{nc} complexes"
            ));
        }
        Err(e) => info.push(format!("criterion 8 diagnostics failed: {e}")),
    }
    lines.push(from_report(9, &verify::minimal(&builtin(), &guards), ""));
    lines.push(criterion10(&guards));

    for l in &lines {
        println!("{} criterion {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.criterion, l.detail);
    }
    for i in &info {
        println!("INFO {i}");
    }
    let unexpected: Vec<u32> = lines
        .iter()
        .filter(|l| l.pass == KNOWN_FAILURES.contains(&l.criterion))
        .map(|l| l.criterion)
        .collect();
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("{passed}/{} criteria pass; known failures: {KNOWN_FAILURES:?}", lines.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
