//! Deterministic verification suites. Each suite runs against one Weyl group
//! and returns a [`Report`] listing every failing case.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::actions::ActionKind;
use crate::cone::{Region, DEFAULT_BUDGET};
use crate::coxeter::{WeylGroup, Word};
use crate::faces::Face;
use crate::gcm::TypeClass;
use crate::monoid::{Element, NormalForm};
use crate::subset::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Violations that the suite expects to find (the bad action is not
    /// order preserving). They do not count as failures.
    #[serde(skip_serializing_if = "is_zero")]
    pub expected_violations: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), cases: 0, failures: Vec::new(), expected_violations: 0 }
    }

    pub fn fail(&mut self, case: impl fmt::Display, detail: impl Into<String>) {
        self.failures.push(Failure { case: case.to_string(), detail: detail.into() });
    }

    pub fn check(&mut self, ok: bool, case: impl fmt::Display, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(case, detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds `other` into `self`, prefixing its case names with its suite.
    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.expected_violations += other.expected_violations;
        for f in other.failures {
            self.failures.push(Failure { case: format!("{}/{}", other.suite, f.case), detail: f.detail });
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Gcm,
    Monoid,
    Classical,
    Lattice,
    Oracle,
    Actions,
    Order,
    Middle,
    Stabilizers,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Gcm,
        Suite::Monoid,
        Suite::Classical,
        Suite::Lattice,
        Suite::Oracle,
        Suite::Actions,
        Suite::Order,
        Suite::Middle,
        Suite::Stabilizers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gcm => "gcm",
            Suite::Monoid => "monoid",
            Suite::Classical => "classical",
            Suite::Lattice => "lattice",
            Suite::Oracle => "oracle",
            Suite::Actions => "actions",
            Suite::Order => "order",
            Suite::Middle => "middle",
            Suite::Stabilizers => "stabilizers",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    pub seed: u64,
    /// Random cases per property (pairs, triples, points per face, ...).
    pub samples: usize,
    /// Word length bound for random and enumerated elements.
    pub max_len: usize,
    pub budget: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { seed: 0, samples: 200, max_len: 6, budget: DEFAULT_BUDGET }
    }
}

/// Sampled points per check in the oracle suite.
pub const ORACLE_POINTS: usize = 50;
/// Word length bound for stabilizer elements in the stabilizers suite.
pub const STABILIZER_LEN: usize = 4;
/// Random faces (besides the special ones) in the stabilizers suite.
pub const STABILIZER_FACES: usize = 10;

impl WeylGroup {
    pub fn run_suite(&self, suite: Suite, p: &VerifyParams) -> Report {
        match suite {
            Suite::Gcm => self.gcm_suite(),
            Suite::Monoid => self.monoid_suite(p),
            Suite::Classical => self.classical_suite(p),
            Suite::Lattice => self.lattice_suite(p),
            Suite::Oracle => self.oracle_suite(p),
            Suite::Actions => self.actions_suite(p),
            Suite::Order => self.order_suite(p),
            Suite::Middle => self.middle_suite(p),
            Suite::Stabilizers => self.stabilizers_suite(p),
            Suite::All => {
                let mut all = Report::new("all");
                for s in Suite::EACH {
                    all.absorb(self.run_suite(s, p));
                }
                all
            }
        }
    }

    /// Special subsets and classification against exhaustive minor checks.
    pub fn gcm_suite(&self) -> Report {
        let mut r = Report::new("gcm");
        let a = self.gcm();
        let finite_by_minors = |c: IndexSet| c.subsets().filter(|s| !s.is_empty()).all(|s| a.principal_minor(s) > 0);
        let mut expected = Vec::new();
        for s in self.full().subsets() {
            let comps = a.components(s);
            for &c in &comps {
                let fin = finite_by_minors(c);
                let class = a.classify(c);
                r.check(matches!(class, Ok(TypeClass::Finite)) == fin, format!("classify {c}"), || {
                    format!("classified as {class:?}, minors say finite={fin}")
                });
            }
            if comps.iter().all(|&c| !finite_by_minors(c)) {
                expected.push(s);
            }
            let (fin, inf) = a.decompose_subset(s);
            r.check(fin.union(inf) == s && fin.is_disjoint(inf), format!("decompose {s}"), || {
                format!("got ({fin}, {inf})")
            });
        }
        let mut got = self.special_subsets().to_vec();
        got.sort();
        expected.sort();
        r.check(got == expected, "special_subsets", || format!("got {got:?}, exhaustive search gives {expected:?}"));
        r
    }

    /// Inverse-monoid axioms on random triples.
    pub fn monoid_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("monoid");
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        let one = self.unit();
        for case in 0..p.samples {
            let x = self.random_element(&mut rng, p.max_len);
            let y = self.random_element(&mut rng, p.max_len);
            let z = self.random_element(&mut rng, p.max_len);
            let m = |a: &Element, b: &Element| self.monoid_mul(a, b);
            let xy_z = m(&m(&x, &y), &z);
            let x_yz = m(&x, &m(&y, &z));
            r.check(xy_z == x_yz, case, || format!("associativity fails for {x}, {y}, {z}"));
            r.check(m(&one, &x) == x && m(&x, &one) == x, case, || format!("unit law fails for {x}"));
            let xi = self.monoid_inverse(&x);
            r.check(m(&m(&x, &xi), &x) == x && m(&m(&xi, &x), &xi) == xi, case, || {
                format!("inverse laws fail for {x} with inverse {xi}")
            });
            let e = m(&x, &xi);
            let f = m(&self.monoid_inverse(&y), &y);
            r.check(self.is_idempotent(&e) && self.is_idempotent(&f), case, || format!("{e} or {f} not idempotent"));
            r.check(m(&e, &f) == m(&f, &e), case, || format!("idempotents {e} and {f} do not commute"));
            let (l, t, rt) = self.normal_form(&x, NormalForm::II);
            let back = self.make_element(&l, &self.special_face(t).expect("special"), &rt);
            r.check(back == x, case, || format!("normal form II of {x} rebuilds {back}"));
        }
        r
    }

    /// Units multiply as in `W`; in finite type every element is a unit.
    pub fn classical_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("classical");
        let finite = self.special_subsets() == [IndexSet::EMPTY];
        if finite {
            let all = self.enumerate(p.max_len);
            let group = self.elements(p.max_len);
            r.check(all.len() == group.len(), "size", || {
                format!("{} monoid elements, {} group elements", all.len(), group.len())
            });
            r.check(all.iter().all(Element::is_unit), "units", || "non-unit element in finite type".into());
            for u in &group {
                for v in &group {
                    let got = self.monoid_mul(&self.unit_of(u), &self.unit_of(v));
                    r.check(got == self.unit_of(&self.mul(u, v)), format!("{u}*{v}"), || format!("got {got}"));
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            for case in 0..p.samples {
                let u = self.random_word(&mut rng, self.full(), p.max_len);
                let v = self.random_word(&mut rng, self.full(), p.max_len);
                let got = self.monoid_mul(&self.unit_of(&u), &self.unit_of(&v));
                r.check(got == self.unit_of(&self.mul(&u, &v)), case, || format!("{u}*{v} gives {got}"));
            }
        }
        r
    }

    /// Lattice laws of meet and join on random faces.
    pub fn lattice_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("lattice");
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        for case in 0..p.samples {
            let a = self.random_face(&mut rng, p.max_len);
            let b = self.random_face(&mut rng, p.max_len);
            let c = self.random_face(&mut rng, p.max_len);
            let meet = |x: &Face, y: &Face| self.face_meet(x, y);
            let join = |x: &Face, y: &Face| self.face_join(x, y);
            r.check(meet(&a, &a) == a && join(&a, &a) == a, case, || format!("idempotence fails for {a}"));
            r.check(meet(&a, &b) == meet(&b, &a), case, || format!("meet of {a}, {b} not commutative"));
            r.check(join(&a, &b) == join(&b, &a), case, || format!("join of {a}, {b} not commutative"));
            r.check(meet(&meet(&a, &b), &c) == meet(&a, &meet(&b, &c)), case, || {
                format!("meet not associative on {a}, {b}, {c}")
            });
            r.check(join(&join(&a, &b), &c) == join(&a, &join(&b, &c)), case, || {
                format!("join not associative on {a}, {b}, {c}")
            });
            r.check(meet(&a, &join(&a, &b)) == a && join(&a, &meet(&a, &b)) == a, case, || {
                format!("absorption fails on {a}, {b}")
            });
            let contains = self.face_contains(&a, &b);
            r.check(contains == (meet(&a, &b) == b) && contains == (join(&a, &b) == a), case, || {
                format!("containment {a} ⊇ {b} is {contains} but meet/join disagree")
            });
        }
        r
    }

    /// Sampled cone points against the combinatorial meet.
    pub fn oracle_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("oracle");
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        for case in 0..p.samples {
            let a = self.random_face(&mut rng, p.max_len);
            let b = self.random_face(&mut rng, p.max_len);
            let out = self.oracle_meet_check(&a, &b, ORACLE_POINTS, rng.gen(), p.budget);
            r.cases += 1;
            for v in out.violations {
                r.fail(case, v);
            }
            if out.unknowns > 0 {
                r.fail(case, format!("{} points of {a}, {b} not certified within the budget", out.unknowns));
            }
        }
        r
    }

    /// Action laws, stabilizers and the standard-parabolic criteria for all
    /// three actions.
    pub fn actions_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("actions");
        let enumerated = self.enumerate(p.max_len);
        for kind in ActionKind::ALL {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            for case in 0..p.samples {
                let x = self.random_element(&mut rng, p.max_len);
                let y = self.random_element(&mut rng, p.max_len);
                let c = self.random_coset(&mut rng, p.max_len);
                let lhs = self.act(kind, &x, &self.act(kind, &y, &c));
                let rhs = self.act(kind, &self.monoid_mul(&x, &y), &c);
                r.check(lhs == rhs, format!("{kind}/law#{case}"), || format!("{x}, {y}, {c}: {lhs} vs {rhs}"));
            }
            for j in self.full().subsets() {
                r.absorb(self.stabilizer_check_on(kind, j, &enumerated));
            }
            r.check(self.standard_parabolic_check(kind, p.max_len), format!("{kind}/standard-parabolic"), || {
                "some ve{R(Θ)}·σW_J is not a standard parabolic".into()
            });
            r.check(self.bottom_idempotent_check_on(kind, &enumerated), format!("{kind}/bottom-idempotent"), || {
                "ve{R(J^∞)}·W_J = W_J fails or disagrees with the parabolic submonoid fixing W_J".into()
            });
        }
        r
    }

    /// Good actions preserve order; the bad action is expected to violate it
    /// whenever some special `Θ` is neither empty nor all of `I`.
    pub fn order_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("order");
        for kind in [ActionKind::Good1, ActionKind::Good2] {
            r.absorb(self.order_preservation_check(kind, p.samples, p.seed));
        }
        let sampled = self.order_preservation_check(ActionKind::Bad, p.samples, p.seed);
        r.cases += sampled.cases;
        r.expected_violations += sampled.failures.len();
        let e = Word::identity();
        for &theta in self.special_subsets() {
            if theta.is_empty() || theta == self.full() {
                continue;
            }
            let x = self.idempotent(theta).expect("special");
            let (c1, c2) = (self.make_facet(&e, theta), self.make_facet(&e, IndexSet::EMPTY));
            let found = self.order_violation(ActionKind::Bad, &x, &c1, &c2).is_some();
            r.check(found, format!("bad/counterexample {theta}"), || {
                format!("{x} preserves W_{theta} <= W_∅ under the bad action")
            });
            r.expected_violations += usize::from(found);
        }
        r
    }

    /// `ve{R(Θ1)}·σ·ve{R(Θ2)} = ve{R(Θ1∪Θ2∪red σ)}·σ` for minimal double
    /// coset representatives `σ`.
    pub fn middle_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("middle");
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        let specials = self.special_subsets();
        for case in 0..p.samples {
            let t1 = specials[rng.gen_range(0..specials.len())];
            let t2 = specials[rng.gen_range(0..specials.len())];
            let w = self.random_word(&mut rng, self.full(), p.max_len);
            let (_, s, _) = self.double_coset_decompose(&w, self.normalizer_type(t1), self.normalizer_type(t2));
            let theta = t1.union(t2).union(s.support());
            let Ok(e) = self.idempotent(theta) else {
                r.fail(case, format!("{theta} is not special ({t1}, {s}, {t2})"));
                continue;
            };
            let sigma = self.unit_of(&s);
            let e1 = self.idempotent(t1).expect("special");
            let e2 = self.idempotent(t2).expect("special");
            let lhs = self.monoid_mul(&e1, &self.monoid_mul(&sigma, &e2));
            let rhs = self.monoid_mul(&e, &sigma);
            r.check(lhs == rhs, case, || format!("{t1}, {s}, {t2}: {lhs} vs {rhs}"));
        }
        r
    }

    /// Pointwise stabilizers fix sampled points of a face, setwise
    /// stabilizers fix the face.
    pub fn stabilizers_suite(&self, p: &VerifyParams) -> Report {
        let mut r = Report::new("stabilizers");
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        let mut faces: Vec<Face> =
            self.special_subsets().iter().map(|&t| self.special_face(t).expect("special")).collect();
        faces.extend((0..STABILIZER_FACES).map(|_| self.random_face(&mut rng, p.max_len)));
        for (fi, f) in faces.iter().enumerate() {
            let ((w, pointwise), (_, setwise)) = self.stabilizer_types(f);
            let winv = self.inverse(&w);
            let conj = |u: &Word| self.mul3(&w, u, &winv);
            let points = self.sample_points(rng.gen(), p.samples, Region::Face(f));
            for u in self.elements_in(pointwise, STABILIZER_LEN) {
                let s = conj(&u);
                for (pi, pt) in points.iter().enumerate() {
                    let img = self.act_on_profile(&s, pt);
                    r.check(img == *pt, format!("face#{fi}/point#{pi}"), || format!("{s} moves {pt} of {f} to {img}"));
                }
            }
            for u in self.elements_in(setwise, STABILIZER_LEN) {
                let s = conj(&u);
                let img = self.translate_face(&s, f);
                r.check(img == *f, format!("face#{fi}"), || format!("{s} maps {f} to {img}"));
            }
        }
        r
    }

    pub fn random_coset<R: Rng>(&self, rng: &mut R, max_len: usize) -> crate::faces::FacetLabel {
        let j = IndexSet::from_bits(rng.gen::<u64>()).intersection(self.full());
        let z = self.random_word(rng, self.full(), max_len);
        self.make_facet(&z, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    fn small() -> VerifyParams {
        VerifyParams { seed: 7, samples: 40, max_len: 4, budget: DEFAULT_BUDGET }
    }

    #[test]
    fn every_suite_passes_on_small_parameters() {
        for g in all_groups() {
            let r = g.run_suite(Suite::All, &small());
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let g = hyp();
        assert_eq!(g.run_suite(Suite::Order, &small()), g.run_suite(Suite::Order, &small()));
        assert_eq!(g.run_suite(Suite::Lattice, &small()), g.run_suite(Suite::Lattice, &small()));
    }

    #[test]
    fn order_suite_counts_bad_violations_as_expected() {
        let r = hyp().run_suite(Suite::Order, &small());
        assert!(r.passed());
        assert!(r.expected_violations >= 1);
        let r = a2().run_suite(Suite::Order, &small());
        assert_eq!(r.expected_violations, 0);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn report_serializes() {
        let mut r = Report::new("x");
        r.check(false, 3, || "bad".into());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v, serde_json::json!({"suite": "x", "cases": 1, "failures": [{"case": "3", "detail": "bad"}]}));
    }
}
