//! Subgroup sets, closure, the subgroup lattice, and quotients.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::GroupError;
use crate::group::{Caps, FiniteGroup};

/// A set of element ids inside a parent group, with structural flags.
///
/// The member list is kept sorted, so equal sets compare equal and lattice
/// output order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgroupSet {
    members: Vec<usize>,
}

impl SubgroupSet {
    pub fn from_members(parent: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        debug_assert!(set.iter().all(|&m| m < parent.order()));
        SubgroupSet { members: set.into_iter().collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// True iff the set contains the identity and is closed under product
    /// and inverse.
    pub fn is_subgroup(&self, parent: &FiniteGroup) -> bool {
        self.first_closure_violation(parent).is_none() && self.contains(0)
    }

    /// The first pair (a, b) in scan order whose product escapes the set,
    /// if any. Inverse closure follows from product closure in a finite
    /// group, so only products are scanned.
    pub fn first_closure_violation(&self, parent: &FiniteGroup) -> Option<(usize, usize)> {
        for &a in &self.members {
            for &b in &self.members {
                if !self.contains(parent.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// True iff gHg⁻¹ = H for every g in the parent.
    pub fn is_normal(&self, parent: &FiniteGroup) -> Result<bool, GroupError> {
        if !self.is_subgroup(parent) {
            return Err(GroupError::NotASubgroup);
        }
        for g in 0..parent.order() {
            let gi = parent.inverse(g);
            for &h in &self.members {
                if !self.contains(parent.mul(parent.mul(g, h), gi)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff all members commute with each other.
    pub fn is_abelian(&self, parent: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| parent.mul(a, b) == parent.mul(b, a)))
    }

    /// The subgroup as a standalone group. Members are relabelled in
    /// sorted order, with the identity moved to id 0.
    pub fn as_group(&self, parent: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        if !self.is_subgroup(parent) {
            return Err(GroupError::NotASubgroup);
        }
        let index_of = |x: usize| self.members.binary_search(&x).unwrap();
        let k = self.members.len();
        let mut rows = vec![vec![0usize; k]; k];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                rows[i][j] = index_of(parent.mul(a, b));
            }
        }
        FiniteGroup::from_cayley_table_named(
            &rows,
            Some(&format!("{}|sub{}", parent.name(), k)),
        )
    }
}

/// Least subgroup of `parent` containing `seed`.
///
/// Idempotent and monotone; the empty seed yields the trivial subgroup.
pub fn closure(parent: &FiniteGroup, seed: &[usize]) -> SubgroupSet {
    let n = parent.order();
    let mut member = vec![false; n];
    member[0] = true;
    let mut worklist: Vec<usize> = vec![0];
    let gens: BTreeSet<usize> = seed.iter().copied().collect();
    for &g in &gens {
        if !member[g] {
            member[g] = true;
            worklist.push(g);
        }
    }
    let mut cursor = 0;
    while cursor < worklist.len() {
        let x = worklist[cursor];
        cursor += 1;
        for &g in &gens {
            let y = parent.mul(x, g);
            if !member[y] {
                member[y] = true;
                worklist.push(y);
            }
        }
    }
    SubgroupSet::from_members(parent, (0..n).filter(|&i| member[i]))
}

/// Every subgroup of `parent`, each exactly once, sorted by
/// (size, member list).
///
/// Starts from the cyclic subgroups and repeatedly joins pairs (closure of
/// the union) until a fixpoint; subset enumeration would be 2ⁿ.
pub fn all_subgroups(parent: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>, GroupError> {
    let n = parent.order();
    if n > caps.order_cap {
        return Err(GroupError::OrderCapExceeded { order: n, cap: caps.order_cap });
    }
    let mut found: BTreeSet<SubgroupSet> = BTreeSet::new();
    for a in 0..n {
        found.insert(closure(parent, &[a]));
    }
    loop {
        let snapshot: Vec<SubgroupSet> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, h) in snapshot.iter().enumerate() {
            for k in snapshot.iter().skip(i + 1) {
                if h.len() == n || k.len() == n {
                    continue;
                }
                let mut seed: Vec<usize> = h.members().to_vec();
                seed.extend_from_slice(k.members());
                let join = closure(parent, &seed);
                if !found.contains(&join) {
                    found.insert(join);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut result: Vec<SubgroupSet> = found.into_iter().collect();
    result.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    Ok(result)
}

/// The quotient G/N for a normal subgroup N.
///
/// Coset ids follow the smallest element of each coset; the coset of the
/// identity gets id 0.
pub fn quotient(parent: &FiniteGroup, normal: &SubgroupSet) -> Result<FiniteGroup, GroupError> {
    if !normal.is_normal(parent)? {
        return Err(GroupError::NotASubgroup);
    }
    let n = parent.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &h in normal.members() {
            coset_of[parent.mul(g, h)] = id;
        }
    }
    let k = reps.len();
    let mut rows = vec![vec![0usize; k]; k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            rows[i][j] = coset_of[parent.mul(a, b)];
        }
    }
    let name: String = format!("{}/N{}", parent.name(), normal.len());
    FiniteGroup::from_cayley_table_named(&rows, Some(&name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s3() -> FiniteGroup {
        catalog::make("S3", &Caps::default()).unwrap()
    }

    #[test]
    fn empty_seed_gives_trivial_subgroup() {
        let g = s3();
        assert_eq!(closure(&g, &[]).members(), &[0]);
    }

    #[test]
    fn closure_of_order_three_element_in_c12() {
        let c12 = FiniteGroup::cyclic(12);
        assert_eq!(closure(&c12, &[4]).members(), &[0, 4, 8]);
    }

    #[test]
    fn transposition_and_three_cycle_generate_s3() {
        let g = s3();
        let t = (1..6).find(|&a| g.element_order(a) == 2).unwrap();
        let c = (1..6).find(|&a| g.element_order(a) == 3).unwrap();
        assert_eq!(closure(&g, &[t, c]).len(), 6);
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let g = s3();
        for a in 0..6 {
            for b in 0..6 {
                let h = closure(&g, &[a, b]);
                assert!(h.contains(a) && h.contains(b));
                assert_eq!(closure(&g, h.members()), h);
            }
        }
    }

    #[test]
    fn s3_normality() {
        let g = s3();
        let three = closure(&g, &[(1..6).find(|&a| g.element_order(a) == 3).unwrap()]);
        assert!(three.is_normal(&g).unwrap());
        let two = closure(&g, &[(1..6).find(|&a| g.element_order(a) == 2).unwrap()]);
        assert!(!two.is_normal(&g).unwrap());
    }

    #[test]
    fn lattice_of_c6_and_s3() {
        let caps = Caps::default();
        let c6 = FiniteGroup::cyclic(6);
        let subs = all_subgroups(&c6, &caps).unwrap();
        let sizes: Vec<usize> = subs.iter().map(SubgroupSet::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);

        let subs = all_subgroups(&s3(), &caps).unwrap();
        let sizes: Vec<usize> = subs.iter().map(SubgroupSet::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn lattice_of_trivial_group() {
        let g = FiniteGroup::trivial();
        assert_eq!(all_subgroups(&g, &Caps::default()).unwrap().len(), 1);
    }

    #[test]
    fn quotient_of_s3_by_a3() {
        let g = s3();
        let a3 = closure(&g, &[(1..6).find(|&a| g.element_order(a) == 3).unwrap()]);
        let q = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn subgroup_as_group_validates() {
        let g = s3();
        let a3 = closure(&g, &[(1..6).find(|&a| g.element_order(a) == 3).unwrap()]);
        let h = a3.as_group(&g).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.is_abelian().0);
    }
}
