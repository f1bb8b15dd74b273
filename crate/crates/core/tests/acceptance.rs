//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use face_monoid::{ActionKind, Gcm, IndexSet, Report, Suite, VerifyParams, WeylGroup, Word, DEFAULT_BUDGET};

fn group(m: &[&[i64]]) -> WeylGroup {
    WeylGroup::new(Gcm::new(m.iter().map(|r| r.to_vec()).collect()).unwrap())
}

fn set(items: &[usize]) -> IndexSet {
    IndexSet::from_one_based(items, 64).unwrap()
}

struct Matrices {
    fin: WeylGroup,
    aff: WeylGroup,
    ind2: WeylGroup,
    hyp: WeylGroup,
    dec: WeylGroup,
}

impl Matrices {
    fn new() -> Self {
        Matrices {
            fin: group(&[&[2, -1], &[-1, 2]]),
            aff: group(&[&[2, -2], &[-2, 2]]),
            ind2: group(&[&[2, -5], &[-1, 2]]),
            hyp: group(&[&[2, -2, -1], &[-2, 2, 0], &[-1, 0, 2]]),
            dec: group(&[&[2, -2, 0], &[-2, 2, 0], &[0, 0, 2]]),
        }
    }

    fn all(&self) -> [(&'static str, &WeylGroup); 5] {
        [("fin", &self.fin), ("aff", &self.aff), ("ind2", &self.ind2), ("hyp", &self.hyp), ("dec", &self.dec)]
    }
}

const SEED: u64 = 20_240_601;

/// Collected problems for one criterion.
#[derive(Default)]
struct Outcome {
    problems: Vec<String>,
    summary: String,
}

impl Outcome {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }

    fn suite(&mut self, name: &str, r: &Report) {
        for f in r.failures.iter().take(5) {
            self.problems.push(format!("{name}: {} {}: {}", r.suite, f.case, f.detail));
        }
        if r.failures.len() > 5 {
            self.problems.push(format!("{name}: {} more failures", r.failures.len() - 5));
        }
    }
}

fn params(samples: usize, max_len: usize) -> VerifyParams {
    VerifyParams { seed: SEED, samples, max_len, budget: DEFAULT_BUDGET }
}

fn c1_special_sets(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let expected: [(&str, Vec<IndexSet>); 5] = [
        ("fin", vec![IndexSet::EMPTY]),
        ("aff", vec![IndexSet::EMPTY, set(&[1, 2])]),
        ("ind2", vec![IndexSet::EMPTY, set(&[1, 2])]),
        ("hyp", vec![IndexSet::EMPTY, set(&[1, 2]), set(&[1, 2, 3])]),
        ("dec", vec![IndexSet::EMPTY, set(&[1, 2])]),
    ];
    let mut mismatches = 0;
    for ((name, g), (_, want)) in m.all().into_iter().zip(expected) {
        let mut got = g.special_subsets().to_vec();
        got.sort();
        if got != want {
            mismatches += 1;
            o.problems.push(format!("{name}: special subsets {got:?}, expected {want:?}"));
        }
        o.suite(name, &g.gcm_suite());
    }
    o.summary = format!("{mismatches} mismatches");
    o
}

fn c2_monoid_axioms(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let mut failures = 0;
    for (name, g) in m.all() {
        let r = g.run_suite(Suite::Monoid, &params(1000, 6));
        failures += r.failures.len();
        o.suite(name, &r);
    }
    o.summary = format!("{failures} failures over 5x1000 triples");
    o
}

fn c3_classical(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let g = &m.fin;
    let all = g.enumerate(6);
    o.require(all.len() == 6, || format!("enumerate(6) has {} elements", all.len()));
    o.require(all.iter().all(|x| x.is_unit()), || "non-unit element".into());
    let mut products = 0;
    for x in &all {
        for y in &all {
            products += 1;
            let got = g.monoid_mul(x, y);
            let want = g.unit_of(&g.mul(&x.left, &y.left));
            o.require(got == want, || format!("{x} * {y} = {got}, W gives {want}"));
        }
    }
    o.suite("fin", &g.run_suite(Suite::Classical, &params(0, 6)));
    o.summary = format!("{} elements, {products} products compared", all.len());
    o
}

fn c4_lattice(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let mut failures = 0;
    for (name, g) in m.all() {
        let r = g.run_suite(Suite::Lattice, &params(500, 6));
        failures += r.failures.len();
        o.suite(name, &r);
    }
    o.summary = format!("{failures} failures over 5x500 triples");
    o
}

fn c5_oracle(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let (mut violations, mut unknowns, mut points) = (0, 0, 0);
    for (name, g) in [("aff", &m.aff), ("hyp", &m.hyp), ("dec", &m.dec)] {
        let mut rng_seed = SEED;
        for _ in 0..200 {
            rng_seed = rng_seed.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1);
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(rng_seed);
            let a = g.random_face(&mut rng, 6);
            let b = g.random_face(&mut rng, 6);
            let out = g.oracle_meet_check(&a, &b, 50, rng_seed, DEFAULT_BUDGET);
            points += out.points;
            violations += out.violations.len();
            unknowns += out.unknowns;
            for v in out.violations.into_iter().take(3) {
                o.problems.push(format!("{name}: {v}"));
            }
        }
    }
    o.require(unknowns == 0, || format!("{unknowns} unknowns"));
    o.summary = format!("{violations} violations, {unknowns} unknowns, {points} points");
    o
}

fn c6_actions(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let mut failures = 0;
    let mut cases = 0;
    for (name, g) in m.all() {
        let r = g.run_suite(Suite::Actions, &params(1000, 6));
        failures += r.failures.len();
        cases += r.cases;
        o.suite(name, &r);
    }
    o.summary = format!("{failures} failures in {cases} cases");
    o
}

fn c7_order(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    for (name, g) in m.all() {
        for kind in [ActionKind::Good1, ActionKind::Good2] {
            let r = g.order_preservation_check(kind, 1000, SEED);
            o.suite(name, &r);
        }
    }
    let g = &m.hyp;
    let bad = g.order_preservation_check(ActionKind::Bad, 1000, SEED);
    o.require(!bad.failures.is_empty(), || "bad action: no order violation found on hyp".into());
    let e = Word::identity();
    let x = g.idempotent(set(&[1, 2])).unwrap();
    let (lo, hi) = (g.make_facet(&e, set(&[1, 2])), g.make_facet(&e, IndexSet::EMPTY));
    o.require(g.complex_leq(&lo, &hi), || "W_{1,2} <= W_∅ does not hold".into());
    let (ilo, ihi) = (g.act(ActionKind::Bad, &x, &lo), g.act(ActionKind::Bad, &x, &hi));
    o.require(ilo == g.make_facet(&e, set(&[1, 2])), || format!("image of W_{{1,2}} is {ilo}"));
    o.require(ihi == g.make_facet(&e, g.full()), || format!("image of W_∅ is {ihi}"));
    o.require(!g.complex_leq(&ilo, &ihi), || "images are comparable".into());
    o.summary = format!("bad action: {} sampled violations on hyp, counterexample {ilo} vs {ihi}", bad.failures.len());
    o
}

fn c8_good_witness(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let g = &m.hyp;
    let x = g.idempotent(set(&[1, 2])).unwrap();
    let c = g.make_facet(&g.normalize(&[3]).unwrap(), IndexSet::EMPTY);
    let e = Word::identity();
    let g1 = g.act(ActionKind::Good1, &x, &c);
    let g2 = g.act(ActionKind::Good2, &x, &c);
    o.require(g1 == g.make_facet(&e, set(&[1, 2, 3])), || format!("good1 gives {g1}"));
    o.require(g2 == g.make_facet(&e, set(&[1, 2])), || format!("good2 gives {g2}"));
    o.summary = format!("good1 {g1}, good2 {g2}");
    o
}

fn c9_middle_part(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let mut failures = 0;
    for (name, g) in m.all() {
        let r = g.run_suite(Suite::Middle, &params(500, 6));
        failures += r.failures.len();
        o.suite(name, &r);
    }
    o.summary = format!("{failures} failures over 5x500 samples");
    o
}

fn c10_stabilizers(m: &Matrices) -> Outcome {
    let mut o = Outcome::default();
    let mut cases = 0;
    for (name, g) in [("aff", &m.aff), ("dec", &m.dec), ("hyp", &m.hyp)] {
        let r = g.run_suite(Suite::Stabilizers, &params(100, 6));
        cases += r.cases;
        o.suite(name, &r);
    }
    o.summary = format!("{cases} cases");
    o
}

fn main() -> ExitCode {
    // Under `cargo test`, the harness passes filter arguments; run everything
    // regardless, but honour `--list` so test discovery stays quiet.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let m = Matrices::new();
    type Criterion = (u32, &'static str, Option<Duration>, fn(&Matrices) -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "classification and special subsets", Some(Duration::from_secs(1)), c1_special_sets),
        (2, "monoid axioms", Some(Duration::from_secs(60)), c2_monoid_axioms),
        (3, "classical case collapse", None, c3_classical),
        (4, "face lattice laws", None, c4_lattice),
        (5, "geometric oracle for meets", Some(Duration::from_secs(120)), c5_oracle),
        (6, "action suites", None, c6_actions),
        (7, "order behaviour", None, c7_order),
        (8, "good1/good2 witness", None, c8_good_witness),
        (9, "double coset middle-part identity", None, c9_middle_part),
        (10, "stabilizer geometry", None, c10_stabilizers),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (n, title, limit, run) in criteria {
        let start = Instant::now();
        let mut out = run(&m);
        let took = start.elapsed();
        if let Some(limit) = limit {
            out.require(took < limit, || format!("took {took:.2?}, limit {limit:?}"));
        }
        let status = if out.problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {status} [{took:>9.2?}] {title}: {}", out.summary);
        for p in &out.problems {
            println!("    {p}");
        }
        failed += usize::from(!out.problems.is_empty());
    }
    let took = total.elapsed();
    println!("acceptance: {} of 10 passed in {took:.2?}", 10 - failed);
    if failed == 0 && took < Duration::from_secs(300) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
