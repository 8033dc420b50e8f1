//! Dense Cayley-table representation of a finite group.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::GroupError;

/// Resource caps for the expensive operations.
///
/// The defaults keep the O(n³) and backtracking algorithms at desk scale;
/// callers (the CLI in particular) may override them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Cap on |G| for subgroup-lattice and isomorphism work.
    pub order_cap: usize,
    /// Cap on the number of elements a generator closure may materialize.
    pub closure_cap: usize,
    /// Cap on the order passed to exhaustive enumeration.
    pub enum_cap: usize,
    /// Budget on the number of word evaluations in a universal law check.
    pub eval_budget: u64,
}

/// Hard ceiling on [`Caps::enum_cap`]; order 16 has the largest class
/// count within reach of the table-filling enumerator.
pub const ENUM_CAP_CEILING: usize = 16;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: 48,
            closure_cap: 10080,
            enum_cap: 12,
            eval_budget: 10_000_000,
        }
    }
}

/// A finite group given by its full multiplication table.
///
/// Element ids are `0..order` and the identity is always id 0; constructors
/// relabel their input to enforce this. The table, the inverse array and
/// the group axioms are validated at construction, so every method can
/// assume a genuine group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `table[i * order + j]` is the product i·j.
    table: Vec<usize>,
    inverse: Vec<usize>,
    name: String,
}

impl FiniteGroup {
    /// The one-element group.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            inverse: vec![0],
            name: "C1".to_owned(),
        }
    }

    /// The cyclic group of order `n` in additive form: i·j = (i + j) mod n.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push((i + j) % n);
            }
        }
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup {
            order: n,
            table,
            inverse,
            name: format!("C{n}"),
        }
    }

    /// Validates a raw n×n table and builds a group from it.
    ///
    /// The identity is relabelled to id 0 when the input places it
    /// elsewhere. Checks run in the order: shape and range, Latin square,
    /// identity, associativity, inverses; the first violation is reported
    /// with its cell or triple.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_cayley_table_named(raw, None)
    }

    /// Like [`from_cayley_table`](Self::from_cayley_table) with an explicit
    /// display name.
    pub fn from_cayley_table_named(
        raw: &[Vec<usize>],
        name: Option<&str>,
    ) -> Result<Self, GroupError> {
        let n = raw.len();
        if n == 0 || raw.iter().any(|row| row.len() != n) {
            return Err(GroupError::MalformedTable);
        }
        for (i, row) in raw.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
            }
        }

        // Latin square: every row and column is a permutation of 0..n.
        for (i, row) in raw.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in row {
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { row: true, index: i, symbol: v });
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in raw.iter() {
                let v = row[j];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { row: false, index: j, symbol: v });
                }
                seen[v] = true;
            }
        }

        let e = (0..n)
            .find(|&e| (0..n).all(|j| raw[e][j] == j) && (0..n).all(|i| raw[i][e] == i))
            .ok_or(GroupError::NoIdentity)?;

        // Relabel by the transposition (0 e) so the identity gets id 0.
        let relabel = |x: usize| {
            if x == 0 {
                e
            } else if x == e {
                0
            } else {
                x
            }
        };
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = relabel(raw[relabel(i)][relabel(j)]);
            }
        }

        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j];
                for k in 0..n {
                    let jk = table[j * n + k];
                    if table[ij * n + k] != table[i * n + jk] {
                        // Report the triple in the caller's labelling.
                        return Err(GroupError::NotAssociative {
                            i: relabel(i),
                            j: relabel(j),
                            k: relabel(k),
                        });
                    }
                }
            }
        }

        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            match (0..n).find(|&j| table[i * n + j] == 0 && table[j * n + i] == 0) {
                Some(j) => inverse[i] = j,
                None => return Err(GroupError::NoInverse { element: relabel(i) }),
            }
        }

        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            name: name.map(str::to_owned).unwrap_or_else(|| format!("G{n}")),
        })
    }

    /// Builds a group from a table already known to satisfy the axioms
    /// with identity 0. Debug builds re-validate.
    pub(crate) fn from_valid_table(table: Vec<usize>, order: usize, name: String) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0usize; order];
        for i in 0..order {
            inverse[i] = (0..order)
                .find(|&j| table[i * order + j] == 0)
                .expect("valid table has inverses");
        }
        let g = FiniteGroup { order, table, inverse, name };
        debug_assert!(g.check_axioms().is_ok());
        g
    }

    /// Re-runs the full axiom check on the stored table.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let rows: Vec<Vec<usize>> = (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect();
        let rebuilt = FiniteGroup::from_cayley_table_named(&rows, Some(&self.name))?;
        if rebuilt.table == self.table && rebuilt.inverse == self.inverse {
            Ok(())
        } else {
            Err(GroupError::NoIdentity)
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_owned();
    }

    /// The product a·b.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// a^k by binary exponentiation; negative k goes through the inverse.
    pub fn power(&self, a: usize, k: i64) -> usize {
        let (mut base, mut exp) = if k < 0 {
            (self.inverse[a], k.unsigned_abs())
        } else {
            (a, k as u64)
        };
        let mut acc = 0usize;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Least r ≥ 1 with a^r = e.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut r = 1;
        while x != 0 {
            x = self.mul(x, a);
            r += 1;
        }
        r
    }

    /// Least k ≥ 1 with x^k = e for every x.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, a| {
            let o = self.element_order(a);
            acc / gcd(acc, o) * o
        })
    }

    /// True iff the table is symmetric; on failure also the
    /// lexicographically first pair (a, b) with ab ≠ ba.
    pub fn is_abelian(&self) -> (bool, Option<(usize, usize)>) {
        for a in 0..self.order {
            for b in 0..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return (false, Some((a, b)));
                }
            }
        }
        (true, None)
    }

    /// Number of elements commuting with everything.
    pub fn center_size(&self) -> usize {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .count()
    }

    /// Multiset of element orders, as counts indexed by order (index 0 unused).
    pub fn order_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0usize; self.order + 1];
        for a in 0..self.order {
            hist[self.element_order(a)] += 1;
        }
        hist
    }

    /// Componentwise product on pairs; the pair (g, h) gets id
    /// `g·|H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup, caps: &Caps) -> Result<Self, GroupError> {
        let n = self
            .order
            .checked_mul(other.order)
            .filter(|&n| n <= caps.closure_cap)
            .ok_or(GroupError::OrderCapExceeded {
                order: self.order.saturating_mul(other.order),
                cap: caps.closure_cap,
            })?;
        let h = other.order;
        let mut table = vec![0usize; n * n];
        for g1 in 0..self.order {
            for h1 in 0..h {
                for g2 in 0..self.order {
                    for h2 in 0..h {
                        let a = g1 * h + h1;
                        let b = g2 * h + h2;
                        table[a * n + b] = self.mul(g1, g2) * h + other.mul(h1, h2);
                    }
                }
            }
        }
        let name = format!("{}x{}", self.name, other.name);
        Ok(FiniteGroup::from_valid_table(table, n, name))
    }

    /// Rows of the table, for serialization.
    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_abelian().0);
    }

    #[test]
    fn rejects_repeated_row_entry() {
        let err = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotLatinSquare { row: true, index: 1, symbol: 1 });
    }

    #[test]
    fn rejects_table_without_identity() {
        // The cyclic Latin square shifted so no row is the identity row.
        let raw = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        // Row 2 is the identity row and column 2 the identity column, so
        // this one actually has identity 2; relabelling must fix it.
        let g = FiniteGroup::from_cayley_table(&raw).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn rejects_nonassociative_latin_square() {
        // Order-5 Latin square with identity that fails associativity
        // (a loop that is not a group).
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_cayley_table(&raw) {
            Err(GroupError::NotAssociative { .. }) => {}
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn identity_relabelled_to_zero() {
        // C3 with identity at position 1.
        let raw = vec![vec![2, 0, 1], vec![0, 1, 2], vec![1, 2, 0]];
        let g = FiniteGroup::from_cayley_table(&raw).unwrap();
        assert_eq!(g.mul(0, 2), 2);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn cyclic_powers() {
        let c6 = FiniteGroup::cyclic(6);
        assert_eq!(c6.power(1, 3), 3);
        assert_eq!(c6.power(1, 0), 0);
        assert_eq!(c6.power(1, -1), 5);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.element_order(0), 1);
        assert_eq!(c6.exponent(), 6);
    }

    #[test]
    fn direct_product_orders() {
        let caps = Caps::default();
        let g = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3), &caps).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian().0);
        assert_eq!(g.element_order(1 * 3 + 1), 6);
    }
}
