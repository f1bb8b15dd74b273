//! The face monoid `Ŵ`: classes of pairs `(σ, R)` with
//! `(σ,R)·(τ,S) = (στ, τ^{-1}R ∩ S)`, where `(σ,R) ~ (σ',R)` iff
//! `σ^{-1}σ' ∈ Z_W(R)`. Elements are stored in normal form I,
//! `σ1·ve{R(Θ)}·σ2` with `σ1 ∈ W^Θ` and `σ2 ∈ ^{Θ∪Θ⊥}W`.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::coxeter::{RawWord, Side, WeylGroup, Word};
use crate::error::Result;
use crate::faces::Face;
use crate::subset::IndexSet;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Element {
    pub left: Word,
    pub theta: IndexSet,
    pub right: Word,
}

/// Unvalidated element as read from JSON.
#[derive(Debug, Clone, Deserialize)]
pub struct ElementInput {
    #[serde(default)]
    pub left: RawWord,
    #[serde(default)]
    pub theta: IndexSet,
    #[serde(default)]
    pub right: RawWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalForm {
    /// `σ1 ∈ W^Θ`, `σ2 ∈ ^{Θ∪Θ⊥}W` (the stored form).
    I,
    /// `σ1 ∈ W^{Θ∪Θ⊥}`, `σ2 ∈ ^Θ W`.
    II,
}

impl Element {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0 && self.theta.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.theta.is_empty()
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.theta.cmp(&other.theta))
            .then_with(|| self.left.cmp(&other.left))
            .then_with(|| self.right.cmp(&other.right))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·e{}·{}", self.left, self.theta, self.right)
    }
}

impl WeylGroup {
    pub fn unit(&self) -> Element {
        Element { left: Word::identity(), theta: IndexSet::EMPTY, right: Word::identity() }
    }

    /// `w` as a unit of `Ŵ`.
    pub fn unit_of(&self, w: &Word) -> Element {
        Element { left: w.clone(), theta: IndexSet::EMPTY, right: Word::identity() }
    }

    /// `ve{R(Θ)}`.
    pub fn idempotent(&self, theta: IndexSet) -> Result<Element> {
        let f = self.special_face(theta)?;
        Ok(Element { left: Word::identity(), theta: f.theta, right: Word::identity() })
    }

    /// Normal form I of `α·ve{R(Θ)}·β`. `W_Θ` is absorbed on both sides and
    /// `W_{Θ⊥}` commutes with `ve{R(Θ)}`.
    fn canonical_element(&self, alpha: &Word, theta: IndexSet, beta: &Word) -> Element {
        let k = self.normalizer_type(theta);
        let (right, b) = self.coset_decompose(beta, k, Side::Left);
        let (_, b_perp) = self.split_commuting(&b, theta);
        let left = self.min_right_rep(&self.mul(alpha, &b_perp), theta);
        Element { left, theta, right }
    }

    /// `w1·ve{f}·w2`.
    pub fn make_element(&self, w1: &Word, f: &Face, w2: &Word) -> Element {
        let alpha = self.mul(w1, &f.rep);
        let beta = self.mul(&self.inverse(&f.rep), w2);
        self.canonical_element(&alpha, f.theta, &beta)
    }

    pub fn element_from_input(&self, input: &ElementInput) -> Result<Element> {
        let f = self.special_face(input.theta)?;
        let w1 = self.normalize(&input.left.0)?;
        let w2 = self.normalize(&input.right.0)?;
        Ok(self.make_element(&w1, &f, &w2))
    }

    /// The pair `(g, F)` with `x = g·ve{F}`.
    pub fn element_pair(&self, x: &Element) -> (Word, Face) {
        let g = self.mul(&x.left, &x.right);
        let f = self.make_face(&self.inverse(&x.right), x.theta).expect("theta is special");
        (g, f)
    }

    /// `g·ve{F}`.
    pub fn element_from_pair(&self, g: &Word, f: &Face) -> Element {
        self.make_element(g, f, &Word::identity())
    }

    pub fn monoid_mul(&self, x: &Element, y: &Element) -> Element {
        let (g1, f1) = self.element_pair(x);
        let (g2, f2) = self.element_pair(y);
        let moved = self.translate_face(&self.inverse(&g2), &f1);
        let f = self.face_meet(&moved, &f2);
        self.element_from_pair(&self.mul(&g1, &g2), &f)
    }

    /// Inverse-monoid inverse `(σ1 ve{R} σ2)^inv = σ2^{-1} ve{R} σ1^{-1}`.
    pub fn monoid_inverse(&self, x: &Element) -> Element {
        self.canonical_element(&self.inverse(&x.right), x.theta, &self.inverse(&x.left))
    }

    pub fn normal_form(&self, x: &Element, variant: NormalForm) -> (Word, IndexSet, Word) {
        match variant {
            NormalForm::I => (x.left.clone(), x.theta, x.right.clone()),
            NormalForm::II => {
                let k = self.normalizer_type(x.theta);
                let (left, c) = self.coset_decompose(&x.left, k, Side::Right);
                let (_, c_perp) = self.split_commuting(&c, x.theta);
                let right = self.min_left_rep(&self.mul(&c_perp, &x.right), x.theta);
                (left, x.theta, right)
            }
        }
    }

    pub fn is_idempotent(&self, x: &Element) -> bool {
        self.monoid_mul(x, x) == *x
    }

    /// `ve{f}`.
    pub fn idempotent_of(&self, f: &Face) -> Element {
        self.make_element(&Word::identity(), f, &Word::identity())
    }

    /// Membership in `Ŵ_J = W_J·ℰ_J`: in normal form I, `Θ ⊆ J` and both words
    /// lie in `W_J`.
    pub fn in_parabolic(&self, x: &Element, j: IndexSet) -> bool {
        x.theta.is_subset(j) && self.in_subgroup(&x.left, j) && self.in_subgroup(&x.right, j)
    }

    pub fn orbit_type(&self, x: &Element) -> IndexSet {
        x.theta
    }

    /// All elements with `l(left) + l(right) ≤ max_len`, sorted.
    pub fn enumerate(&self, max_len: usize) -> Vec<Element> {
        let elems = self.elements(max_len);
        let mut out = Vec::new();
        for &theta in self.special_subsets() {
            let k = self.normalizer_type(theta);
            let lefts: Vec<&Word> = elems.iter().filter(|w| self.is_min_right(w, theta)).collect();
            let rights: Vec<&Word> = elems.iter().filter(|w| self.is_min_left(w, k)).collect();
            for l in &lefts {
                for r in rights.iter().take_while(|r| l.len() + r.len() <= max_len) {
                    out.push(Element { left: (*l).clone(), theta, right: (*r).clone() });
                }
            }
        }
        out.sort();
        out
    }

    /// A random element `w1·ve{R(Θ)}·w2`: uniform special `Θ`, words of length
    /// at most `max_len`.
    pub fn random_element<R: Rng>(&self, rng: &mut R, max_len: usize) -> Element {
        let theta = self.special_subsets()[rng.gen_range(0..self.special_subsets().len())];
        let w1 = self.random_word(rng, self.full(), max_len);
        let w2 = self.random_word(rng, self.full(), max_len);
        let f = self.make_face(&Word::identity(), theta).expect("special");
        self.make_element(&w1, &f, &w2)
    }
}
