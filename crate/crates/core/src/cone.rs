//! Geometric oracle on the Tits cone, working with pairing profiles
//! `v_i = λ(h_i)`.
//!
//! Profiles determine everything the oracle needs: `W` acts on them by
//! `σ_i: v_j ↦ v_j − a_ji·v_i`, the fundamental chamber is `v ≥ 0`, and a face
//! `R(Θ)` is `{λ ∈ X : v_i = 0 for i ∈ Θ}`. Membership in `X` is certified by
//! the numbers game, which fires negative coordinates until the profile is
//! dominant. Outside `X` the game never stops, so every query carries a
//! reflection budget and may answer `Unknown` (`None`).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coxeter::{WeylGroup, Word};
use crate::faces::{Face, FacetLabel};
use crate::subset::IndexSet;

pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ConeProfile {
    /// The cone point `0`.
    Apex,
    Point(Vec<Rational64>),
}

impl ConeProfile {
    pub fn from_integers(v: &[i64]) -> Self {
        ConeProfile::Point(v.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    /// Coordinates, with the apex read as the zero profile.
    pub fn coords(&self, n: usize) -> Vec<Rational64> {
        match self {
            ConeProfile::Apex => vec![Rational64::from_integer(0); n],
            ConeProfile::Point(v) => v.clone(),
        }
    }
}

impl fmt::Debug for ConeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ConeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeProfile::Apex => f.write_str("apex"),
            ConeProfile::Point(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

impl Serialize for ConeProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ConeProfile::Apex => s.serialize_str("apex"),
            ConeProfile::Point(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for ConeProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Tag(String),
            Coords(Vec<String>),
        }
        match Raw::deserialize(d)? {
            Raw::Tag(t) if t == "apex" => Ok(ConeProfile::Apex),
            Raw::Tag(t) => Err(serde::de::Error::custom(format!("unknown profile tag {t:?}"))),
            Raw::Coords(v) => v
                .iter()
                .map(|x| {
                    Rational64::from_str(x.trim()).map_err(|_| serde::de::Error::custom(format!("bad rational {x:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(ConeProfile::Point),
        }
    }
}

/// Result of [`WeylGroup::to_dominant`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance {
    /// `w·p = dom` with `dom ≥ 0`.
    Found {
        w: Word,
        dom: ConeProfile,
    },
    Unknown,
}

#[derive(Debug, Clone, Copy)]
pub enum Region<'a> {
    /// The open fundamental chamber.
    Chamber,
    Face(&'a Face),
    Anywhere,
}

/// Outcome of [`WeylGroup::oracle_meet_check`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleOutcome {
    pub points: usize,
    pub violations: Vec<String>,
    pub unknowns: usize,
}

impl OracleOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.unknowns == 0
    }
}

/// A profile over a common positive denominator.
#[derive(Clone)]
struct Scaled {
    num: Vec<i128>,
    den: i128,
}

impl Scaled {
    fn new(v: &[Rational64]) -> Self {
        let den = v.iter().fold(1i128, |acc, x| acc.lcm(&(*x.denom() as i128)));
        let num = v.iter().map(|x| *x.numer() as i128 * (den / *x.denom() as i128)).collect();
        Scaled { num, den }
    }

    fn to_profile(&self) -> Option<ConeProfile> {
        let den = i64::try_from(self.den).ok()?;
        self.num
            .iter()
            .map(|&x| i64::try_from(x).ok().map(|x| Rational64::new(x, den)))
            .collect::<Option<Vec<_>>>()
            .map(ConeProfile::Point)
    }
}

impl WeylGroup {
    fn reflect_profile(&self, i: usize, v: &mut [i128]) -> Option<()> {
        let vi = v[i];
        for (j, x) in v.iter_mut().enumerate() {
            let a = self.gcm().get(j, i) as i128;
            *x = x.checked_sub(a.checked_mul(vi)?)?;
        }
        Some(())
    }

    fn apply_scaled(&self, w: &Word, v: &mut Scaled) -> Option<()> {
        for &s in w.letters().iter().rev() {
            self.reflect_profile(s as usize, &mut v.num)?;
        }
        Some(())
    }

    /// `w·p`. Panics only if exact arithmetic leaves the 64-bit range.
    pub fn act_on_profile(&self, w: &Word, p: &ConeProfile) -> ConeProfile {
        match p {
            ConeProfile::Apex => ConeProfile::Apex,
            ConeProfile::Point(v) => {
                let mut s = Scaled::new(v);
                self.apply_scaled(w, &mut s).and_then(|_| s.to_profile()).expect("profile arithmetic overflow")
            }
        }
    }

    /// The numbers game: fire the smallest negative coordinate until the
    /// profile is dominant. Returns the minimal `w` with `w·p` dominant.
    pub fn to_dominant(&self, p: &ConeProfile, budget: usize) -> Dominance {
        let v = match p {
            ConeProfile::Apex => return Dominance::Found { w: Word::identity(), dom: ConeProfile::Apex },
            ConeProfile::Point(v) => v,
        };
        let mut s = Scaled::new(v);
        let mut fired: Vec<u8> = Vec::new();
        while let Some(i) = s.num.iter().position(|&x| x < 0) {
            if fired.len() >= budget || self.reflect_profile(i, &mut s.num).is_none() {
                return Dominance::Unknown;
            }
            fired.push(i as u8);
        }
        let Some(dom) = s.to_profile() else { return Dominance::Unknown };
        fired.reverse();
        let w = self.word_from_letters(&fired);
        // Everything sending p to dom lies in Stab(dom)·w = W_J·w.
        let zeros = zero_set(&s.num);
        Dominance::Found { w: self.min_left_rep(&w, zeros), dom }
    }

    /// `Some(true)` iff `p` is certified in `X`.
    pub fn in_cone(&self, p: &ConeProfile, budget: usize) -> Option<bool> {
        match self.to_dominant(p, budget) {
            Dominance::Found { .. } => Some(true),
            Dominance::Unknown => None,
        }
    }

    /// The open facet `rep·F_J` containing `p`.
    pub fn facet_of(&self, p: &ConeProfile, budget: usize) -> Option<FacetLabel> {
        match self.to_dominant(p, budget) {
            Dominance::Unknown => None,
            Dominance::Found { w, dom } => {
                let jtype = zero_set(&Scaled::new(&dom.coords(self.rank())).num);
                Some(self.make_facet(&self.inverse(&w), jtype))
            }
        }
    }

    /// `p ∈ f`, i.e. `p ∈ X` and `rep^{-1}·p` vanishes on `Θ`.
    pub fn face_membership(&self, p: &ConeProfile, f: &Face, budget: usize) -> Option<bool> {
        self.in_cone(p, budget)?;
        let q = self.act_on_profile(&self.inverse(&f.rep), p);
        let zeros = zero_set(&Scaled::new(&q.coords(self.rank())).num);
        Some(f.theta.is_subset(zeros))
    }

    /// `p ∈ ri(f)`, using `ri R(Θ) = ⋃ W_{Θ⊥}·F_{Θ∪J}` over `J ⊆ Θ⊥` of finite type.
    pub fn ri_membership(&self, p: &ConeProfile, f: &Face, budget: usize) -> Option<bool> {
        let q = self.act_on_profile(&self.inverse(&f.rep), p);
        let facet = self.facet_of(&q, budget)?;
        let perp = self.perp(f.theta);
        let extra = facet.jtype.difference(f.theta);
        Some(
            f.theta.is_subset(facet.jtype)
                && extra.is_subset(perp)
                && self.gcm().finite_part(extra) == extra
                && self.in_subgroup(&facet.rep, perp),
        )
    }

    fn random_rational<R: Rng>(rng: &mut R) -> Rational64 {
        Rational64::new(rng.gen_range(1..=6), rng.gen_range(1..=3))
    }

    /// A dominant profile vanishing on `zeros` and strictly positive elsewhere.
    fn random_dominant<R: Rng>(&self, rng: &mut R, zeros: IndexSet) -> ConeProfile {
        ConeProfile::Point(
            (0..self.rank())
                .map(|i| if zeros.contains(i) { Rational64::from_integer(0) } else { Self::random_rational(rng) })
                .collect(),
        )
    }

    /// Deterministic samples of cone points. Face samples are `rep·u·d` with
    /// `u ∈ W_{Θ⊥}` and `d` dominant, vanishing on `Θ` and on a random extra
    /// subset, so lower-dimensional strata of the face are hit too.
    pub fn sample_points(&self, seed: u64, count: usize, region: Region<'_>) -> Vec<ConeProfile> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| match region {
                Region::Chamber => self.random_dominant(&mut rng, IndexSet::EMPTY),
                Region::Face(f) => {
                    let extra = IndexSet::from_zero_based((0..self.rank()).filter(|_| rng.gen_ratio(1, 3)));
                    let d = self.random_dominant(&mut rng, f.theta.union(extra));
                    let u = self.random_word(&mut rng, self.perp(f.theta), 3);
                    self.act_on_profile(&self.mul(&f.rep, &u), &d)
                }
                Region::Anywhere => {
                    let extra = IndexSet::from_zero_based((0..self.rank()).filter(|_| rng.gen_ratio(1, 3)));
                    let d = self.random_dominant(&mut rng, extra);
                    let w = self.random_word(&mut rng, self.full(), 5);
                    self.act_on_profile(&w, &d)
                }
            })
            .collect()
    }

    /// Cross-checks `face_meet` on sampled points: points of the meet lie in
    /// both faces, and sampled points of either face lying in both faces lie
    /// in the meet. Also checks that the sampled span of the meet fits in the
    /// intersection of the sampled spans of the two faces.
    pub fn oracle_meet_check(&self, f1: &Face, f2: &Face, samples: usize, seed: u64, budget: usize) -> OracleOutcome {
        let m = self.face_meet(f1, f2);
        let mut out = OracleOutcome::default();
        let pm = self.sample_points(seed, samples, Region::Face(&m));
        let p1 = self.sample_points(seed.wrapping_add(1), samples, Region::Face(f1));
        let p2 = self.sample_points(seed.wrapping_add(2), samples, Region::Face(f2));
        for p in &pm {
            out.points += 1;
            for f in [f1, f2] {
                match self.face_membership(p, f, budget) {
                    None => out.unknowns += 1,
                    Some(false) => out.violations.push(format!("{p} in meet {m} but not in {f}")),
                    Some(true) => {}
                }
            }
        }
        for p in p1.iter().chain(&p2) {
            out.points += 1;
            let a = self.face_membership(p, f1, budget);
            let b = self.face_membership(p, f2, budget);
            match (a, b) {
                (None, _) | (_, None) => out.unknowns += 1,
                (Some(true), Some(true)) => match self.face_membership(p, &m, budget) {
                    None => out.unknowns += 1,
                    Some(false) => out.violations.push(format!("{p} in {f1} and {f2} but not in meet {m}")),
                    Some(true) => {}
                },
                _ => {}
            }
        }
        let n = self.rank();
        let rows = |pts: &[ConeProfile]| pts.iter().map(|p| p.coords(n)).collect::<Vec<_>>();
        let (r1, r2) = (rows(&p1), rows(&p2));
        let both: Vec<Vec<Rational64>> = r1.iter().chain(&r2).cloned().collect();
        let common = rank(&r1) + rank(&r2) - rank(&both);
        if rank(&rows(&pm)) > common {
            out.violations.push(format!("meet {m} spans more than the intersection of the spans of {f1} and {f2}"));
        }
        out
    }
}

fn zero_set(v: &[i128]) -> IndexSet {
    IndexSet::from_zero_based(v.iter().enumerate().filter(|(_, &x)| x == 0).map(|(i, _)| i))
}

/// Rank of a set of rational vectors (exact Gaussian elimination).
pub fn rank(rows: &[Vec<Rational64>]) -> usize {
    let mut m: Vec<Vec<Rational64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != Rational64::from_integer(0)) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != Rational64::from_integer(0) {
                let factor = m[i][c] / m[r][c];
                for k in c..cols {
                    let delta = factor * m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}
