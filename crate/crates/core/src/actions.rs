//! Actions of `Ŵ` on the Coxeter complex `{σW_J}` (ordered by reverse
//! inclusion) and on points of the Tits cone, the facet projection onto a
//! face of the dual cone, and checkers for the stabilizer, order and
//! standard-parabolic properties of the three complex actions.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cone::ConeProfile;
use crate::coxeter::{WeylGroup, Word};
use crate::error::{Error, Result};
use crate::faces::FacetLabel;
use crate::monoid::Element;
use crate::subset::IndexSet;
use crate::verify::Report;

/// A coset `rep·W_J`, identified with the facet `rep·F_J`.
pub type ComplexElement = FacetLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Bad,
    Good1,
    Good2,
}

impl ActionKind {
    pub const ALL: [ActionKind; 3] = [ActionKind::Bad, ActionKind::Good1, ActionKind::Good2];
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionKind::Bad => "bad",
            ActionKind::Good1 => "good1",
            ActionKind::Good2 => "good2",
        })
    }
}

impl FromStr for ActionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bad" => Ok(ActionKind::Bad),
            "good1" => Ok(ActionKind::Good1),
            "good2" => Ok(ActionKind::Good2),
            _ => Err(format!("unknown action kind {s:?} (expected bad, good1 or good2)")),
        }
    }
}

/// The facet `rep·F^∨_J(Θ)` of the projection of the dual cone onto `R(Θ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LooFacetLabel {
    pub base_theta: IndexSet,
    pub rep: Word,
    pub jtype: IndexSet,
}

/// Word lengths used when sampling for [`WeylGroup::order_preservation_check`].
const ORDER_SAMPLE_LEN: usize = 4;

impl WeylGroup {
    /// `c1 ≤ c2` in the complex, i.e. `c1 ⊇ c2` as cosets.
    pub fn complex_leq(&self, c1: &ComplexElement, c2: &ComplexElement) -> bool {
        c2.jtype.is_subset(c1.jtype) && self.in_subgroup(&self.mul(&self.inverse(&c1.rep), &c2.rep), c1.jtype)
    }

    pub fn act(&self, kind: ActionKind, x: &Element, c: &ComplexElement) -> ComplexElement {
        let theta = x.theta;
        let perp = self.perp(theta);
        let mu = self.mul(&x.right, &c.rep);
        match kind {
            ActionKind::Bad => {
                if theta.is_subset(c.jtype) && self.double_coset_decompose(&mu, perp, c.jtype).1.is_empty() {
                    self.make_facet(&self.mul(&x.left, &mu), c.jtype)
                } else {
                    self.make_facet(&Word::identity(), self.full())
                }
            }
            ActionKind::Good1 => {
                let (a, y, _) = self.double_coset_decompose(&mu, theta.union(perp), c.jtype);
                let (_, a1) = self.split_commuting(&a, theta);
                self.make_facet(&self.mul(&x.left, &a1), theta.union(c.jtype).union(y.support()))
            }
            ActionKind::Good2 => {
                let ff = self.five_factor_decompose(&mu, theta.union(perp), c.jtype);
                let (_, a1) = self.split_commuting(&ff.a, theta);
                let (j_fin, j_inf) = self.gcm().decompose_subset(c.jtype);
                let xi = theta.union(j_inf).union(ff.x.support());
                let extra = self.translate_simple(&ff.c1, j_fin, self.perp(xi));
                self.make_facet(&self.mul(&x.left, &a1), xi.union(extra))
            }
        }
    }

    /// `(σ·ve{R})·λ = σλ` if `λ ∈ R`, else the apex. The zero profile is
    /// returned as the apex.
    pub fn act_on_point(&self, x: &Element, p: &ConeProfile, budget: usize) -> Result<ConeProfile> {
        if p.coords(self.rank()).iter().all(|c| *c == 0.into()) {
            return Ok(ConeProfile::Apex);
        }
        let (g, f) = self.element_pair(x);
        match self.face_membership(p, &f, budget) {
            None => Err(Error::NotInCone),
            Some(true) => Ok(self.act_on_profile(&g, p)),
            Some(false) => Ok(ConeProfile::Apex),
        }
    }

    /// Writes `τ = a·y·c` with `a ∈ W_{Θ⊥}`, `y ∈ ^{Θ⊥}W^J`, `c ∈ W_J` and
    /// returns `(Θ, a, Θ⊥ ∩ yJ)`.
    pub fn looijenga_project(&self, theta: IndexSet, tau: &Word, j: IndexSet) -> Result<LooFacetLabel> {
        self.special_face(theta)?;
        if !j.is_subset(self.full()) || self.gcm().finite_part(j) != j {
            return Err(Error::NotFiniteTypeJ(j));
        }
        let perp = self.perp(theta);
        let (a, y, _) = self.double_coset_decompose(tau, perp, j);
        let jtype = self.translate_simple(&y, j, perp);
        Ok(LooFacetLabel { base_theta: theta, rep: self.min_right_rep(&a, jtype), jtype })
    }

    /// Compares the fixers of `W_J` among enumerated elements with `Ŵ_J`.
    pub fn stabilizer_check(&self, kind: ActionKind, j: IndexSet, max_len: usize) -> Report {
        self.stabilizer_check_on(kind, j, &self.enumerate(max_len))
    }

    /// [`Self::stabilizer_check`] over a precomputed enumeration.
    pub fn stabilizer_check_on(&self, kind: ActionKind, j: IndexSet, elements: &[Element]) -> Report {
        let mut report = Report::new(format!("stabilizer/{kind}/J={j}"));
        let base = self.make_facet(&Word::identity(), j);
        for (case, x) in elements.iter().enumerate() {
            report.cases += 1;
            let fixes = self.act(kind, x, &base) == base;
            let inside = self.in_parabolic(x, j);
            if inside && !fixes {
                report.fail(case, format!("{x} lies in the parabolic submonoid for {j} but moves W_{j}"));
            } else if fixes && !inside {
                report.fail(case, format!("{x} fixes W_{j} but is outside the parabolic submonoid"));
            }
        }
        report
    }

    /// Samples comparable pairs `zW_J ≤ zW_K` (`K ⊆ J`) and random `x`, and
    /// reports every pair whose images are not comparable.
    pub fn order_preservation_check(&self, kind: ActionKind, samples: usize, seed: u64) -> Report {
        let mut report = Report::new(format!("order/{kind}"));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for case in 0..samples {
            let x = self.random_element(&mut rng, ORDER_SAMPLE_LEN);
            let z = self.random_word(&mut rng, self.full(), ORDER_SAMPLE_LEN);
            let j = IndexSet::from_bits(rng.gen::<u64>()).intersection(self.full());
            let k = IndexSet::from_bits(rng.gen::<u64>()).intersection(j);
            let (c1, c2) = (self.make_facet(&z, j), self.make_facet(&z, k));
            report.cases += 1;
            if let Some(detail) = self.order_violation(kind, &x, &c1, &c2) {
                report.fail(case, detail);
            }
        }
        report
    }

    /// `Some(description)` if `c1 ≤ c2` but `x·c1 ≰ x·c2`.
    pub fn order_violation(
        &self,
        kind: ActionKind,
        x: &Element,
        c1: &ComplexElement,
        c2: &ComplexElement,
    ) -> Option<String> {
        debug_assert!(self.complex_leq(c1, c2));
        let (i1, i2) = (self.act(kind, x, c1), self.act(kind, x, c2));
        (!self.complex_leq(&i1, &i2)).then(|| format!("{x}: {c1} <= {c2} but images {i1} and {i2} are not"))
    }

    /// Whether `ve{R(Θ)}` sends every `σW_J` with `σ ∈ ^{Θ∪Θ⊥}W^J`,
    /// `l(σ) ≤ max_len`, to a standard parabolic coset.
    pub fn standard_parabolic_check(&self, kind: ActionKind, max_len: usize) -> bool {
        let elems = self.elements(max_len);
        self.special_subsets().iter().all(|&theta| {
            let e = self.idempotent(theta).expect("special");
            let k = self.normalizer_type(theta);
            self.full().subsets().all(|j| {
                elems
                    .iter()
                    .filter(|s| self.is_min_left(s, k) && self.is_min_right(s, j))
                    .all(|s| self.act(kind, &e, &self.make_facet(s, j)).rep.is_empty())
            })
        })
    }

    /// Checks `ve{R(J^∞)}·W_J = W_J` for all `J`, and that this agrees with
    /// `Ŵ_J` fixing `W_J` on enumerated elements.
    pub fn bottom_idempotent_check(&self, kind: ActionKind, max_len: usize) -> bool {
        self.bottom_idempotent_check_on(kind, &self.enumerate(max_len))
    }

    pub fn bottom_idempotent_check_on(&self, kind: ActionKind, all: &[Element]) -> bool {
        let mut fixed_by_bottom = true;
        let mut fixed_by_submonoid = true;
        for j in self.full().subsets() {
            let base = self.make_facet(&Word::identity(), j);
            let e = self.idempotent(self.gcm().infinite_part(j)).expect("J^∞ is special");
            fixed_by_bottom &= self.act(kind, &e, &base) == base;
            fixed_by_submonoid &=
                all.iter().filter(|x| self.in_parabolic(x, j)).all(|x| self.act(kind, x, &base) == base);
        }
        fixed_by_bottom && fixed_by_bottom == fixed_by_submonoid
    }
}
