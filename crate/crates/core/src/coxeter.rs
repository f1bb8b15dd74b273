//! The Weyl group `W(A)`: canonical ShortLex reduced words, the action on the
//! root lattice, descents, Bruhat order, and (double) coset decompositions.
//!
//! Simple reflections act on roots by `σ_i α_j = α_j − a_ij α_i`. A word acts
//! rightmost letter first. Reducedness is maintained letter by letter with the
//! exchange property: walking a positive root through the word, deletion
//! happens exactly where the root becomes the simple root of the letter.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gcm::Gcm;
use crate::subset::IndexSet;

/// Coordinates in the basis of simple roots.
pub type RootVector = Vec<i64>;

/// A Weyl group element, stored as its ShortLex-least reduced word
/// (0-based letters). Only a [`WeylGroup`] creates these, so equality of
/// words is equality of elements.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// 0-based letters.
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&s| s as usize + 1).collect()
    }

    /// `red(w)`: the set of letters.
    pub fn support(&self) -> IndexSet {
        IndexSet::from_zero_based(self.0.iter().map(|&s| s as usize))
    }
}

// ShortLex: shorter words first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        f.write_str(")")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

/// Deserializes raw 1-based letters. The result is *not* normalized; pass it
/// through [`WeylGroup::normalize`] before use.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawWord(pub Vec<usize>);

impl<'de> Deserialize<'de> for RawWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(RawWord(Vec::<usize>::deserialize(d)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `w = a·x·c1·c2`, see [`WeylGroup::five_factor_decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveFactor {
    pub a: Word,
    pub x: Word,
    pub c1: Word,
    pub c2: Word,
}

/// The Weyl group of a generalized Cartan matrix. Carries the matrix and the
/// list of its special subsets; every other type in the crate is plain data
/// interpreted relative to one of these.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    gcm: Gcm,
    special: Vec<IndexSet>,
}

impl WeylGroup {
    pub fn new(gcm: Gcm) -> Self {
        let special = gcm.special_subsets();
        WeylGroup { gcm, special }
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn full(&self) -> IndexSet {
        self.gcm.full()
    }

    pub fn special_subsets(&self) -> &[IndexSet] {
        &self.special
    }

    pub fn is_special(&self, t: IndexSet) -> bool {
        self.special.binary_search(&t).is_ok()
    }

    pub fn perp(&self, j: IndexSet) -> IndexSet {
        self.gcm.perp(j)
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    /// Parses 1-based letters and returns the canonical word.
    pub fn normalize(&self, letters: &[usize]) -> Result<Word> {
        let n = self.rank();
        let mut raw = Vec::with_capacity(letters.len());
        for &s in letters {
            if s == 0 || s > n {
                return Err(Error::BadGenerator { index: s, rank: n });
            }
            raw.push((s - 1) as u8);
        }
        Ok(self.word_from_letters(&raw))
    }

    /// Canonical word of the product of 0-based letters.
    pub fn word_from_letters(&self, letters: &[u8]) -> Word {
        let mut w = Vec::with_capacity(letters.len());
        for &s in letters {
            assert!((s as usize) < self.rank(), "letter out of range");
            self.push_right(&mut w, s);
        }
        Word(self.canonical(w))
    }

    pub fn generator(&self, i: usize) -> Word {
        Word(vec![i as u8])
    }

    pub fn mul(&self, u: &Word, v: &Word) -> Word {
        let mut w = u.0.clone();
        for &s in &v.0 {
            self.push_right(&mut w, s);
        }
        Word(self.canonical(w))
    }

    pub fn mul3(&self, u: &Word, v: &Word, w: &Word) -> Word {
        let mut r = u.0.clone();
        for &s in v.0.iter().chain(&w.0) {
            self.push_right(&mut r, s);
        }
        Word(self.canonical(r))
    }

    pub fn inverse(&self, w: &Word) -> Word {
        let mut r = w.0.clone();
        r.reverse();
        Word(self.canonical(r))
    }

    pub fn is_right_descent(&self, w: &Word, i: usize) -> bool {
        self.right_exchange_pos(&w.0, i as u8).is_some()
    }

    pub fn is_left_descent(&self, w: &Word, i: usize) -> bool {
        self.left_exchange_pos(&w.0, i as u8).is_some()
    }

    pub fn right_descents(&self, w: &Word) -> IndexSet {
        IndexSet::from_zero_based((0..self.rank()).filter(|&i| self.is_right_descent(w, i)))
    }

    pub fn left_descents(&self, w: &Word) -> IndexSet {
        IndexSet::from_zero_based((0..self.rank()).filter(|&i| self.is_left_descent(w, i)))
    }

    /// `w ∈ W^J`: no right descents in `J`.
    pub fn is_min_right(&self, w: &Word, j: IndexSet) -> bool {
        j.iter().all(|i| !self.is_right_descent(w, i))
    }

    /// `w ∈ ^J W`: no left descents in `J`.
    pub fn is_min_left(&self, w: &Word, j: IndexSet) -> bool {
        j.iter().all(|i| !self.is_left_descent(w, i))
    }

    pub fn in_subgroup(&self, w: &Word, j: IndexSet) -> bool {
        w.support().is_subset(j)
    }

    pub fn act_on_root(&self, w: &Word, r: &[i64]) -> RootVector {
        let mut v = r.to_vec();
        for &s in w.0.iter().rev() {
            self.reflect(s as usize, &mut v);
        }
        v
    }

    /// `{i ∈ within : w^{-1}α_i = α_j for some j ∈ theta}`, i.e. `within ∩ wΘ`.
    pub fn translate_simple(&self, w: &Word, theta: IndexSet, within: IndexSet) -> IndexSet {
        IndexSet::from_zero_based(within.iter().filter(|&i| {
            let mut v = self.simple_root(i);
            for &s in &w.0 {
                self.reflect(s as usize, &mut v);
            }
            simple_index(&v).is_some_and(|j| theta.contains(j))
        }))
    }

    /// Bruhat order via the lifting property: for a right descent `s` of `w`,
    /// `u ≤ w` iff `min(u, us) ≤ ws`.
    pub fn bruhat_leq(&self, u: &Word, w: &Word) -> bool {
        let mut u = u.0.clone();
        let mut w = w.0.clone();
        loop {
            if u.len() > w.len() {
                return false;
            }
            if u.is_empty() {
                return true;
            }
            let s = w.pop().expect("w nonempty since l(u) <= l(w)");
            self.try_delete_right(&mut u, s);
        }
    }

    /// Right: `w = min·par`, `min ∈ W^J`, `par ∈ W_J`. Left: `w = par·min`,
    /// `min ∈ ^J W`. Lengths add in both cases.
    pub fn coset_decompose(&self, w: &Word, j: IndexSet, side: Side) -> (Word, Word) {
        let mut min = w.0.clone();
        let par = match side {
            Side::Right => self.strip_right(&mut min, j),
            Side::Left => self.strip_left(&mut min, j),
        };
        (Word(self.canonical(min)), Word(self.canonical(par)))
    }

    /// Minimal representative of `wW_J`.
    pub fn min_right_rep(&self, w: &Word, j: IndexSet) -> Word {
        self.coset_decompose(w, j, Side::Right).0
    }

    /// Minimal representative of `W_K w`.
    pub fn min_left_rep(&self, w: &Word, k: IndexSet) -> Word {
        self.coset_decompose(w, k, Side::Left).0
    }

    /// `w = a·x·b` with `a ∈ W_K`, `b ∈ W_J`, `x` minimal in `W_K w W_J`.
    /// `a` is taken first (`a·x·b` with `x·b ∈ ^K W`).
    pub fn double_coset_decompose(&self, w: &Word, k: IndexSet, j: IndexSet) -> (Word, Word, Word) {
        let mut x = w.0.clone();
        let a = self.strip_left(&mut x, k);
        let b = self.strip_right(&mut x, j);
        (Word(self.canonical(a)), Word(self.canonical(x)), Word(self.canonical(b)))
    }

    /// `w = a·x·c1·c2` with `a ∈ W_K`, `x ∈ ^K W^{J∞∪(J∞)⊥}`,
    /// `c1 ∈ (W_{(J∞)⊥})^{J0}`, `c2 ∈ W_J`, `x·c1 ∈ ^K W^J` and
    /// `x·c1·c2 ∈ ^K W`.
    pub fn five_factor_decompose(&self, w: &Word, k: IndexSet, j: IndexSet) -> FiveFactor {
        let (j_fin, j_inf) = self.gcm.decompose_subset(j);
        let inf_perp = self.perp(j_inf);
        let l = j_inf.union(inf_perp);
        let mut x = w.0.clone();
        let a = self.strip_left(&mut x, k);
        let c = self.strip_right(&mut x, l);
        // W_L = W_{J∞} × W_{(J∞)⊥}: the letters of c split accordingly.
        let mut c_perp: Vec<u8> = c.iter().copied().filter(|&s| inf_perp.contains(s as usize)).collect();
        let c_inf: Vec<u8> = c.iter().copied().filter(|&s| j_inf.contains(s as usize)).collect();
        let c2_fin = self.strip_right(&mut c_perp, j_fin);
        let c2: Vec<u8> = c2_fin.into_iter().chain(c_inf).collect();
        FiveFactor {
            a: Word(self.canonical(a)),
            x: Word(self.canonical(x)),
            c1: Word(self.canonical(c_perp)),
            c2: self.word_from_letters(&c2),
        }
    }

    /// Splits `w ∈ W_{A∪B}` with `A`, `B` disjoint and commuting into its `W_A`
    /// and `W_B` components, where `B` is everything outside `a`.
    pub fn split_commuting(&self, w: &Word, a: IndexSet) -> (Word, Word) {
        let (in_a, rest): (Vec<u8>, Vec<u8>) = w.0.iter().partition(|&&s| a.contains(s as usize));
        (Word(self.canonical(in_a)), Word(self.canonical(rest)))
    }

    /// All elements of `W_J` of length `≤ max_len`, in ShortLex order.
    pub fn elements_in(&self, j: IndexSet, max_len: usize) -> Vec<Word> {
        let mut all = vec![Word::identity()];
        let mut layer = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = HashSet::new();
            for w in &layer {
                for s in j.iter() {
                    if !self.is_right_descent(w, s) {
                        let mut raw = w.0.clone();
                        raw.push(s as u8);
                        next.insert(Word(self.canonical(raw)));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            let mut next: Vec<Word> = next.into_iter().collect();
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    /// All elements of `W` of length `≤ max_len`, in ShortLex order.
    pub fn elements(&self, max_len: usize) -> Vec<Word> {
        self.elements_in(self.full(), max_len)
    }

    /// A random word over the letters of `j` of length at most `max_len`,
    /// normalized.
    pub fn random_word<R: Rng>(&self, rng: &mut R, j: IndexSet, max_len: usize) -> Word {
        let letters: Vec<u8> = j.iter().map(|i| i as u8).collect();
        if letters.is_empty() {
            return Word::identity();
        }
        let len = rng.gen_range(0..=max_len);
        let raw: Vec<u8> = (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        self.word_from_letters(&raw)
    }

    // ─── raw reduced-word machinery ───

    #[inline]
    pub(crate) fn reflect(&self, i: usize, v: &mut [i64]) {
        let n = self.rank();
        let mut dot = 0i64;
        for (j, x) in v.iter().enumerate().take(n) {
            dot += self.gcm.get(i, j) * x;
        }
        v[i] -= dot;
    }

    /// If `w·σ_s` is shorter than `w`, the position whose deletion gives it.
    fn right_exchange_pos(&self, w: &[u8], s: u8) -> Option<usize> {
        let mut v = self.simple_root(s as usize);
        for k in (0..w.len()).rev() {
            if is_simple(&v, w[k] as usize) {
                return Some(k);
            }
            self.reflect(w[k] as usize, &mut v);
        }
        None
    }

    /// If `σ_s·w` is shorter than `w`, the position whose deletion gives it.
    fn left_exchange_pos(&self, w: &[u8], s: u8) -> Option<usize> {
        let mut v = self.simple_root(s as usize);
        for (k, &t) in w.iter().enumerate() {
            if is_simple(&v, t as usize) {
                return Some(k);
            }
            self.reflect(t as usize, &mut v);
        }
        None
    }

    /// Replaces reduced `w` by a reduced word for `w·σ_s`.
    fn push_right(&self, w: &mut Vec<u8>, s: u8) {
        match self.right_exchange_pos(w, s) {
            Some(k) => {
                w.remove(k);
            }
            None => w.push(s),
        }
    }

    fn try_delete_right(&self, w: &mut Vec<u8>, s: u8) -> bool {
        match self.right_exchange_pos(w, s) {
            Some(k) => {
                w.remove(k);
                true
            }
            None => false,
        }
    }

    fn try_delete_left(&self, w: &mut Vec<u8>, s: u8) -> bool {
        match self.left_exchange_pos(w, s) {
            Some(k) => {
                w.remove(k);
                true
            }
            None => false,
        }
    }

    /// Strips right descents in `j` from reduced `w`; returns `par` with
    /// `w_old = w_new·par`.
    fn strip_right(&self, w: &mut Vec<u8>, j: IndexSet) -> Vec<u8> {
        let mut par = Vec::new();
        'outer: loop {
            for i in j.iter() {
                if self.try_delete_right(w, i as u8) {
                    par.insert(0, i as u8);
                    continue 'outer;
                }
            }
            return par;
        }
    }

    /// Strips left descents in `k` from reduced `w`; returns `par` with
    /// `w_old = par·w_new`.
    fn strip_left(&self, w: &mut Vec<u8>, k: IndexSet) -> Vec<u8> {
        let mut par = Vec::new();
        'outer: loop {
            for i in k.iter() {
                if self.try_delete_left(w, i as u8) {
                    par.push(i as u8);
                    continue 'outer;
                }
            }
            return par;
        }
    }

    /// ShortLex-least reduced word of the element given by reduced `w`:
    /// repeatedly extract the smallest left descent.
    fn canonical(&self, mut rest: Vec<u8>) -> Vec<u8> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let first = rest[0];
            let mut taken = None;
            for i in 0..first {
                if let Some(k) = self.left_exchange_pos(&rest, i) {
                    taken = Some((i, k));
                    break;
                }
            }
            let (i, k) = taken.unwrap_or((first, 0));
            out.push(i);
            rest.remove(k);
        }
        out
    }
}

fn is_simple(v: &[i64], t: usize) -> bool {
    v.iter().enumerate().all(|(j, &x)| if j == t { x == 1 } else { x == 0 })
}

/// `Some(j)` if `v = α_j`.
pub(crate) fn simple_index(v: &[i64]) -> Option<usize> {
    let j = v.iter().position(|&x| x != 0)?;
    is_simple(v, j).then_some(j)
}
