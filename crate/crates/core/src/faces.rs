//! Faces of the Tits cone `X`, stored as `rep·R(Θ)` with `Θ` special and
//! `rep ∈ W^{Θ∪Θ⊥}`, together with closed/open facet labels `rep·F_J`.
//!
//! Containment, meet and join reduce to the special-position formulas
//! `R(Θ1) ∩ τR(Θ2) = R(Θ1∪Θ2∪red τ)` and `R(Θ1) ∨ τR(Θ2) = R((Θ1∩τΘ2)^∞)`
//! after translating the first face to `R(Θ1)` and splitting the relative
//! position by a double coset decomposition.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::coxeter::{RawWord, WeylGroup, Word};
use crate::error::{Error, Result};
use crate::subset::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Face {
    pub theta: IndexSet,
    pub rep: Word,
}

/// The facet `rep·F_J` (or its closure, depending on context).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FacetLabel {
    pub rep: Word,
    pub jtype: IndexSet,
}

/// Unvalidated face as read from JSON.
#[derive(Debug, Clone, Deserialize)]
pub struct FaceInput {
    pub theta: IndexSet,
    #[serde(default)]
    pub rep: RawWord,
}

/// Unvalidated facet label / coset as read from JSON.
#[derive(Debug, Clone, Deserialize)]
pub struct FacetInput {
    #[serde(default)]
    pub rep: RawWord,
    pub jtype: IndexSet,
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}R({})", self.rep, self.theta)
    }
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}W_{}", self.rep, self.jtype)
    }
}

impl WeylGroup {
    /// `Θ ∪ Θ⊥`, the type of the setwise stabilizer of `R(Θ)`.
    pub fn normalizer_type(&self, theta: IndexSet) -> IndexSet {
        theta.union(self.perp(theta))
    }

    fn check_subset(&self, s: IndexSet) -> Result<()> {
        match s.difference(self.full()).iter().next() {
            Some(i) => Err(Error::BadGenerator { index: i + 1, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// The face `w·R(Θ)` in canonical form.
    pub fn make_face(&self, w: &Word, theta: IndexSet) -> Result<Face> {
        self.check_subset(theta)?;
        if !self.is_special(theta) {
            return Err(Error::NotSpecial(theta));
        }
        Ok(self.face_unchecked(w, theta))
    }

    fn face_unchecked(&self, w: &Word, theta: IndexSet) -> Face {
        debug_assert!(self.is_special(theta));
        Face { theta, rep: self.min_right_rep(w, self.normalizer_type(theta)) }
    }

    pub fn face_from_input(&self, input: &FaceInput) -> Result<Face> {
        let w = self.normalize(&input.rep.0)?;
        self.make_face(&w, input.theta)
    }

    /// The whole cone `X = R(∅)`.
    pub fn whole_cone(&self) -> Face {
        Face { theta: IndexSet::EMPTY, rep: Word::identity() }
    }

    pub fn special_face(&self, theta: IndexSet) -> Result<Face> {
        self.make_face(&Word::identity(), theta)
    }

    /// `w·f`.
    pub fn translate_face(&self, w: &Word, f: &Face) -> Face {
        self.face_unchecked(&self.mul(w, &f.rep), f.theta)
    }

    /// `f2 ⊆ f1`: `Θ2 ⊇ Θ1` and `rep1^{-1}·rep2 ∈ W_{Θ1⊥}·W_{Θ2}`.
    pub fn face_contains(&self, f1: &Face, f2: &Face) -> bool {
        if !f1.theta.is_subset(f2.theta) {
            return false;
        }
        let rel = self.mul(&self.inverse(&f1.rep), &f2.rep);
        let (_, x, _) = self.double_coset_decompose(&rel, self.perp(f1.theta), f2.theta);
        x.is_empty()
    }

    /// `rep1^{-1}·rep2 = a·τ·b` with `a ∈ W_{K1}`, `τ ∈ ^{K1}W^{K2}`, `b ∈ W_{K2}`.
    fn relative_position(&self, f1: &Face, f2: &Face) -> (Word, Word) {
        let rel = self.mul(&self.inverse(&f1.rep), &f2.rep);
        let (a, tau, _) =
            self.double_coset_decompose(&rel, self.normalizer_type(f1.theta), self.normalizer_type(f2.theta));
        (a, tau)
    }

    /// The intersection `f1 ∩ f2`.
    pub fn face_meet(&self, f1: &Face, f2: &Face) -> Face {
        let (a, tau) = self.relative_position(f1, f2);
        let theta = f1.theta.union(f2.theta).union(tau.support());
        assert!(self.is_special(theta), "meet type {} is not special", theta);
        self.face_unchecked(&self.mul(&f1.rep, &a), theta)
    }

    /// The smallest face containing `f1` and `f2`.
    pub fn face_join(&self, f1: &Face, f2: &Face) -> Face {
        let (a, tau) = self.relative_position(f1, f2);
        let common = self.translate_simple(&tau, f2.theta, f1.theta);
        let theta = self.gcm().infinite_part(common);
        self.face_unchecked(&self.mul(&f1.rep, &a), theta)
    }

    /// The facet label `w·W_J` with canonical (minimal) representative.
    pub fn make_facet(&self, w: &Word, jtype: IndexSet) -> FacetLabel {
        FacetLabel { rep: self.min_right_rep(w, jtype), jtype }
    }

    pub fn facet_from_input(&self, input: &FacetInput) -> Result<FacetLabel> {
        self.check_subset(input.jtype)?;
        let w = self.normalize(&input.rep.0)?;
        Ok(self.make_facet(&w, input.jtype))
    }

    /// `f ∩ closure(fac)`, itself a closed facet.
    pub fn face_meet_facet(&self, f: &Face, fac: &FacetLabel) -> FacetLabel {
        let k = self.normalizer_type(f.theta);
        let rel = self.mul(&self.inverse(&f.rep), &fac.rep);
        let (a, y, _) = self.double_coset_decompose(&rel, k, fac.jtype);
        let jtype = f.theta.union(fac.jtype).union(y.support());
        self.make_facet(&self.mul(&f.rep, &a), jtype)
    }

    /// Pointwise and setwise stabilizers of `f = w·R(Θ)` as conjugation data
    /// `(w, Θ)` and `(w, Θ∪Θ⊥)`, meaning `w·W_•·w^{-1}`.
    pub fn stabilizer_types(&self, f: &Face) -> ((Word, IndexSet), (Word, IndexSet)) {
        ((f.rep.clone(), f.theta), (f.rep.clone(), self.normalizer_type(f.theta)))
    }

    /// Reinterprets the face `w·R(Θ)` of the Tits cone of `A_J` as a face of
    /// `X`.
    pub fn sublattice_embed(&self, j: IndexSet, w: &Word, theta: IndexSet) -> Result<Face> {
        self.check_subset(j)?;
        let letters = w.support().union(theta);
        if !letters.is_subset(j) {
            return Err(Error::NotInSubgroup { letters, subset: j });
        }
        self.make_face(w, theta)
    }

    /// Whether `f` lies in the image of the embedding for `J`, i.e.
    /// `f ⊇ R(J^∞)`.
    pub fn image_test(&self, f: &Face, j: IndexSet) -> bool {
        let bottom = self.face_unchecked(&Word::identity(), self.gcm().infinite_part(j));
        self.face_contains(f, &bottom)
    }

    /// A random face: uniform special type, random representative of length
    /// at most `max_len`.
    pub fn random_face<R: Rng>(&self, rng: &mut R, max_len: usize) -> Face {
        let theta = self.special_subsets()[rng.gen_range(0..self.special_subsets().len())];
        let w = self.random_word(rng, self.full(), max_len);
        self.face_unchecked(&w, theta)
    }
}
