//! Generalized Cartan matrices: validation, connected components, the
//! finite/affine/indefinite trichotomy, `Θ^0`, `Θ^∞`, `J^⊥` and special subsets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{IndexSet, MAX_RANK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeClass {
    Finite,
    Affine,
    Indefinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub indices: IndexSet,
    #[serde(rename = "type")]
    pub kind: TypeClass,
}

/// A validated generalized Cartan matrix. Entries are addressed 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gcm {
    n: usize,
    a: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct GcmFile {
    matrix: Vec<Vec<i64>>,
}

impl Serialize for Gcm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GcmFile { matrix: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gcm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = GcmFile::deserialize(d)?;
        Gcm::new(file.matrix).map_err(serde::de::Error::custom)
    }
}

impl Gcm {
    /// Validates a square integer matrix. Reports the first violation in
    /// row-major order.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if n > MAX_RANK {
            return Err(Error::RankTooLarge(n));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i + 1, len: row.len(), expected: n });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = matrix[i][j];
                if i == j {
                    if v != 2 {
                        return Err(Error::BadDiagonal { index: i + 1, value: v });
                    }
                } else if v > 0 {
                    return Err(Error::PositiveOffDiagonal { row: i + 1, col: j + 1, value: v });
                } else if (v == 0) != (matrix[j][i] == 0) {
                    return Err(Error::AsymmetricZero { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(Gcm { n, a: matrix.into_iter().flatten().collect() })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `a_ij`, 0-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn full(&self) -> IndexSet {
        IndexSet::full(self.n)
    }

    /// Connected components of the graph of `A_t` (edge `i ~ j` iff `a_ij ≠ 0`).
    pub fn components(&self, t: IndexSet) -> Vec<IndexSet> {
        let mut rest = t;
        let mut out = Vec::new();
        while let Some(start) = rest.iter().next() {
            let mut comp = IndexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(i) = frontier.pop() {
                for j in rest.iter() {
                    if !comp.contains(j) && self.get(i, j) != 0 {
                        comp = comp.with(j);
                        frontier.push(j);
                    }
                }
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, s: IndexSet) -> bool {
        self.components(s).len() == 1
    }

    /// Exact determinant of the principal submatrix `A_s` (1 for `s = ∅`).
    pub fn principal_minor(&self, s: IndexSet) -> i128 {
        let idx: Vec<usize> = s.iter().collect();
        let m: Vec<Vec<i128>> = idx.iter().map(|&i| idx.iter().map(|&j| self.get(i, j) as i128).collect()).collect();
        bareiss_det(m)
    }

    /// Kac type of an indecomposable principal submatrix.
    pub fn classify(&self, s: IndexSet) -> Result<TypeClass> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !self.is_connected(s) {
            return Err(Error::Decomposable(s));
        }
        let proper_positive = s.subsets().filter(|u| !u.is_empty() && *u != s).all(|u| self.principal_minor(u) > 0);
        let det = self.principal_minor(s);
        Ok(match (proper_positive, det) {
            (true, d) if d > 0 => TypeClass::Finite,
            (true, 0) => TypeClass::Affine,
            _ => TypeClass::Indefinite,
        })
    }

    /// The components of `A_t` with their types.
    pub fn classified_components(&self, t: IndexSet) -> Vec<Component> {
        self.components(t)
            .into_iter()
            .map(|c| Component { indices: c, kind: self.classify(c).expect("component is connected") })
            .collect()
    }

    /// `(Θ^0, Θ^∞)`: unions of the finite, resp. non-finite, components of `A_t`.
    pub fn decompose_subset(&self, t: IndexSet) -> (IndexSet, IndexSet) {
        let mut fin = IndexSet::EMPTY;
        let mut inf = IndexSet::EMPTY;
        for c in self.classified_components(t) {
            if c.kind == TypeClass::Finite {
                fin = fin.union(c.indices);
            } else {
                inf = inf.union(c.indices);
            }
        }
        (fin, inf)
    }

    pub fn finite_part(&self, t: IndexSet) -> IndexSet {
        self.decompose_subset(t).0
    }

    pub fn infinite_part(&self, t: IndexSet) -> IndexSet {
        self.decompose_subset(t).1
    }

    /// `J^⊥ = {i : a_ij = 0 for all j ∈ J}`.
    pub fn perp(&self, j: IndexSet) -> IndexSet {
        IndexSet::from_zero_based((0..self.n).filter(|&i| j.iter().all(|k| self.get(i, k) == 0)))
    }

    pub fn is_special(&self, t: IndexSet) -> bool {
        self.infinite_part(t) == t
    }

    /// All special subsets, sorted.
    pub fn special_subsets(&self) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = self.full().subsets().filter(|&t| self.is_special(t)).collect();
        out.sort();
        out
    }
}

fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
