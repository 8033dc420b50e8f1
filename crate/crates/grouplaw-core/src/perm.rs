//! Permutations and groups generated by them.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::GroupError;
use crate::group::{Caps, FiniteGroup};

/// A permutation of `{0, …, degree−1}` in image form.
///
/// Composition is right-to-left: `(f * g)(x) = f(g(x))`, so in a product
/// of group elements the right factor acts first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds a permutation from its image array; `images[i]` is the image
    /// of point `i`. Fails if the array is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in &images {
            if v >= d || seen[v] {
                return Err(GroupError::BadSpec {
                    message: "image array is not a bijection".to_string(),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles,
    /// e.g. `&[&[0, 1, 2]]` for the 3-cycle (0 1 2).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || moved[from] {
                    return Err(GroupError::BadSpec {
                        message: format!("bad cycle point {from}"),
                    });
                }
                moved[from] = true;
                images[from] = to;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Materializes the group generated by `gens` and builds its Cayley table.
///
/// Element id 0 is the identity; the remaining ids follow deterministic
/// breadth-first discovery order from the sorted generator list, so the
/// table is reproducible across runs. Fails with `ClosureBudgetExceeded`
/// once the closure grows past `caps.closure_cap` elements.
pub fn from_permutations(gens: &[Permutation], caps: &Caps) -> Result<FiniteGroup, GroupError> {
    let degree = gens.first().map_or(1, Permutation::degree);
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
        }
    }
    let mut gens: Vec<Permutation> = gens.to_vec();
    gens.sort();
    gens.dedup();

    let mut elements = vec![Permutation::identity(degree)];
    let mut ids: BTreeMap<Permutation, usize> = BTreeMap::new();
    ids.insert(elements[0].clone(), 0);
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for g in &gens {
            let next = current.compose(g);
            if !ids.contains_key(&next) {
                if elements.len() >= caps.closure_cap {
                    return Err(GroupError::ClosureBudgetExceeded { cap: caps.closure_cap });
                }
                ids.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        frontier += 1;
    }

    let n = elements.len();
    let mut table = vec![0usize; n * n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            table[i * n + j] = ids[&a.compose(b)];
        }
    }
    Ok(FiniteGroup::from_valid_table(table, n, format!("Perm{n}")))
}
