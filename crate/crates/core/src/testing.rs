//! Shared fixtures for unit tests.

use crate::coxeter::{WeylGroup, Word};
use crate::gcm::Gcm;
use crate::subset::IndexSet;

pub fn group(m: Vec<Vec<i64>>) -> WeylGroup {
    WeylGroup::new(Gcm::new(m).unwrap())
}
pub fn a2() -> WeylGroup {
    group(vec![vec![2, -1], vec![-1, 2]])
}
pub fn aff() -> WeylGroup {
    group(vec![vec![2, -2], vec![-2, 2]])
}
pub fn hyp() -> WeylGroup {
    group(vec![vec![2, -2, -1], vec![-2, 2, 0], vec![-1, 0, 2]])
}
pub fn dec() -> WeylGroup {
    group(vec![vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 2]])
}
pub fn ind2() -> WeylGroup {
    group(vec![vec![2, -5], vec![-1, 2]])
}
pub fn all_groups() -> Vec<WeylGroup> {
    vec![a2(), aff(), hyp(), dec(), ind2()]
}
pub fn w(g: &WeylGroup, letters: &[usize]) -> Word {
    g.normalize(letters).unwrap()
}
pub fn set(items: &[usize]) -> IndexSet {
    IndexSet::from_one_based(items, 64).unwrap()
}
