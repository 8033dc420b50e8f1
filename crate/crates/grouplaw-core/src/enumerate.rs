//! Exhaustive enumeration of all groups of a small order, one per
//! isomorphism class.
//!
//! The search fills the Cayley table cell by cell (identity fixed at id 0,
//! row-major over the remaining cells) with Latin-square masks and
//! incremental associativity propagation. After each completed row a
//! partial canonicity test prunes tables that are provably not
//! lexicographically minimal over relabelings fixing 0; the test only ever
//! prunes on fully determined comparisons, so the minimal table of every
//! class survives and a final isomorphism pass removes the leftovers.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::GroupError;
use crate::group::{Caps, FiniteGroup, ENUM_CAP_CEILING};
use crate::iso::are_isomorphic;

const UNKNOWN: usize = usize::MAX;

struct Search<'a> {
    n: usize,
    table: Vec<usize>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    /// For each value v, the cells (i, j) currently holding v.
    preimages: Vec<Vec<(usize, usize)>>,
    orderly: bool,
    emit: &'a mut dyn FnMut(&[usize]),
}

impl<'a> Search<'a> {
    fn new(n: usize, orderly: bool, emit: &'a mut dyn FnMut(&[usize])) -> Self {
        let mut table = vec![UNKNOWN; n * n];
        let mut row_used = vec![0u32; n];
        let mut col_used = vec![0u32; n];
        let mut preimages = vec![Vec::new(); n];
        for j in 0..n {
            table[j] = j;
            row_used[0] |= 1 << j;
            col_used[j] |= 1 << j;
            preimages[j].push((0, j));
        }
        for i in 1..n {
            table[i * n] = i;
            row_used[i] |= 1 << i;
            col_used[0] |= 1 << i;
            preimages[i].push((i, 0));
        }
        Search { n, table, row_used, col_used, preimages, orderly, emit }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    fn run(&mut self) {
        self.fill(1, 1);
    }

    fn fill(&mut self, i: usize, j: usize) {
        let n = self.n;
        if i == n {
            let table = self.table.clone();
            (self.emit)(&table);
            return;
        }
        let (next_i, next_j) = if j + 1 == n { (i + 1, 1) } else { (i, j + 1) };
        let free = !(self.row_used[i] | self.col_used[j]) & ((1u32 << n) - 1);
        let mut mask = free;
        while mask != 0 {
            let k = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            // Canonicity is cheap to test cell-by-cell while the first two
            // rows are being chosen (they alone drive the branching there)
            // and worth testing only at row boundaries further down, where
            // the σ-search is more expensive.
            let row_done = j + 1 == n;
            let check = self.orderly && (i <= 2 || row_done);
            if self.place(i, j, k)
                && self.row_order_divides(i)
                && !(check && self.beaten_by_relabeling())
            {
                self.fill(next_i, next_j);
            }
            self.unplace(i, j, k);
        }
    }

    /// Sets cell (i, j) to k and checks every associativity triple that
    /// this cell completes. Returns false on contradiction (the cell stays
    /// placed; the caller always unplaces).
    fn place(&mut self, i: usize, j: usize, k: usize) -> bool {
        let n = self.n;
        self.table[i * n + j] = k;
        self.row_used[i] |= 1 << k as u32;
        self.col_used[j] |= 1 << k as u32;
        self.preimages[k].push((i, j));

        // Inverses are two-sided: i·j = e iff j·i = e.
        let opposite = self.at(j, i);
        if opposite != UNKNOWN && ((k == 0) != (opposite == 0)) {
            return false;
        }
        // Triples (i, j, z): (i·j)·z = i·(j·z), with i·j the new cell.
        for z in 0..n {
            let u = self.at(j, z);
            if u == UNKNOWN {
                continue;
            }
            let v = self.at(k, z);
            let w = self.at(i, u);
            if v != UNKNOWN && w != UNKNOWN && v != w {
                return false;
            }
        }
        // Triples (x, i, j): i·j is the inner product on the right.
        for x in 0..n {
            let u = self.at(x, i);
            if u == UNKNOWN {
                continue;
            }
            let v = self.at(u, j);
            let w = self.at(x, k);
            if v != UNKNOWN && w != UNKNOWN && v != w {
                return false;
            }
        }
        // Triples (x, y, j) with x·y = i: the new cell is (x·y)·z.
        for idx in 0..self.preimages[i].len() {
            let (x, y) = self.preimages[i][idx];
            let u = self.at(y, j);
            if u == UNKNOWN {
                continue;
            }
            let w = self.at(x, u);
            if w != UNKNOWN && w != k {
                return false;
            }
        }
        // Triples (i, y, z) with y·z = j: the new cell is x·(y·z).
        for idx in 0..self.preimages[j].len() {
            let (y, z) = self.preimages[j][idx];
            let u = self.at(i, y);
            if u == UNKNOWN {
                continue;
            }
            let v = self.at(u, z);
            if v != UNKNOWN && v != k {
                return false;
            }
        }
        true
    }

    fn unplace(&mut self, i: usize, j: usize, k: usize) {
        let n = self.n;
        self.table[i * n + j] = UNKNOWN;
        self.row_used[i] &= !(1 << k as u32);
        self.col_used[j] &= !(1 << k as u32);
        let popped = self.preimages[k].pop();
        debug_assert_eq!(popped, Some((i, j)));
    }

    /// The powers of element i are determined by row i alone: iterate
    /// x ← T[i][x]. In a group the chain from i reaches the identity and
    /// its length divides n (Lagrange), so a chain that closes a cycle
    /// without the identity or whose completed length fails to divide n
    /// dooms the prefix. An unknown cell ends the walk inconclusively, so
    /// the check already bites while the row is being filled.
    fn row_order_divides(&self, i: usize) -> bool {
        let n = self.n;
        let mut x = i;
        let mut steps = 1usize;
        while x != 0 {
            x = self.at(i, x);
            if x == UNKNOWN {
                return true;
            }
            steps += 1;
            if steps > n {
                return false;
            }
        }
        n % steps == 0
    }

    /// Order of element x when row x determines it, else None.
    fn partial_order(&self, x: usize) -> Option<usize> {
        let mut y = x;
        let mut steps = 1usize;
        while y != 0 {
            y = self.at(x, y);
            if y == UNKNOWN || steps > self.n {
                return None;
            }
            steps += 1;
        }
        Some(steps)
    }

    /// True iff some relabeling σ fixing 0 provably makes the filled
    /// row-major prefix lexicographically smaller. Comparisons touching
    /// unknown cells are inconclusive and never prune, so the minimal
    /// table of every class always survives.
    fn beaten_by_relabeling(&self) -> bool {
        let n = self.n;
        let mut sigma = vec![UNKNOWN; n];
        let mut sigma_inv = vec![UNKNOWN; n];
        sigma[0] = 0;
        sigma_inv[0] = 0;
        // σ(a) = b is only worth exploring if it can extend to an
        // order-preserving relabeling; incompatible known orders mean the
        // equality branch is dead (the occasional strict win such a σ
        // could still score is not worth the branching).
        let orders: Vec<usize> =
            (0..n).map(|x| self.partial_order(x).unwrap_or(UNKNOWN)).collect();
        self.beats(1, 1, &mut sigma, &mut sigma_inv, &orders)
    }

    /// Compares T^σ against T cell by cell from (i, j) onward, branching
    /// over the undetermined parts of σ. Row 0 and column 0 are fixed by
    /// σ(0) = 0 and never differ.
    fn beats(
        &self,
        i: usize,
        j: usize,
        sigma: &mut [usize],
        sigma_inv: &mut [usize],
        orders: &[usize],
    ) -> bool {
        let n = self.n;
        if i == n || self.at(i, j) == UNKNOWN {
            return false;
        }
        let compatible =
            |a: usize, b: usize| orders[a] == orders[b] || orders[a] == UNKNOWN || orders[b] == UNKNOWN;
        let (next_i, next_j) = if j + 1 == n { (i + 1, 1) } else { (i, j + 1) };

        // Resolve a = σ⁻¹(i), branching when unassigned.
        if sigma_inv[i] == UNKNOWN {
            for a in 1..n {
                if sigma[a] != UNKNOWN || !compatible(a, i) {
                    continue;
                }
                sigma[a] = i;
                sigma_inv[i] = a;
                let win = self.beats(i, j, sigma, sigma_inv, orders);
                sigma[a] = UNKNOWN;
                sigma_inv[i] = UNKNOWN;
                if win {
                    return true;
                }
            }
            return false;
        }
        if sigma_inv[j] == UNKNOWN {
            for b in 1..n {
                if sigma[b] != UNKNOWN || !compatible(b, j) {
                    continue;
                }
                sigma[b] = j;
                sigma_inv[j] = b;
                let win = self.beats(i, j, sigma, sigma_inv, orders);
                sigma[b] = UNKNOWN;
                sigma_inv[j] = UNKNOWN;
                if win {
                    return true;
                }
            }
            return false;
        }

        let v = self.at(sigma_inv[i], sigma_inv[j]);
        if v == UNKNOWN {
            return false;
        }
        let here = self.at(i, j);
        if sigma[v] != UNKNOWN {
            if sigma[v] != here {
                return sigma[v] < here;
            }
            return self.beats(next_i, next_j, sigma, sigma_inv, orders);
        }
        // σ(v) is free: any unused value below T[i][j] wins outright.
        if (0..here).any(|w| sigma_inv[w] == UNKNOWN) {
            return true;
        }
        if sigma_inv[here] == UNKNOWN {
            if !compatible(v, here) {
                return false;
            }
            sigma[v] = here;
            sigma_inv[here] = v;
            let win = self.beats(next_i, next_j, sigma, sigma_inv, orders);
            sigma[v] = UNKNOWN;
            sigma_inv[here] = UNKNOWN;
            return win;
        }
        false
    }
}

fn check_order(n: usize, caps: &Caps) -> Result<(), GroupError> {
    let cap = caps.enum_cap.min(ENUM_CAP_CEILING);
    if n == 0 || n > cap {
        return Err(GroupError::OrderCapExceeded { order: n, cap });
    }
    Ok(())
}

/// All isomorphism classes of groups of order `n`, one representative
/// each, named `order<n>#<index>`.
pub fn enumerate_order(n: usize, caps: &Caps) -> Result<Vec<FiniteGroup>, GroupError> {
    check_order(n, caps)?;
    let mut tables: Vec<Vec<usize>> = Vec::new();
    {
        let mut emit = |t: &[usize]| tables.push(t.to_vec());
        Search::new(n, true, &mut emit).run();
    }
    let iso_caps = Caps { order_cap: caps.order_cap.max(ENUM_CAP_CEILING), ..*caps };
    let mut classes: Vec<FiniteGroup> = Vec::new();
    for table in tables {
        let g = FiniteGroup::from_valid_table(table, n, String::new());
        let mut known = false;
        for rep in &classes {
            if are_isomorphic(rep, &g, &iso_caps)? {
                known = true;
                break;
            }
        }
        if !known {
            let mut g = g;
            g.set_name(&format!("order{n}#{}", classes.len()));
            classes.push(g);
        }
    }
    Ok(classes)
}

/// Number of group operations on `{0, …, n−1}` with identity 0, counted
/// with no canonicity pruning. Feasible only for small n; used to
/// cross-check the pruned search against an independent oracle.
pub fn labeled_table_count(n: usize, caps: &Caps) -> Result<u64, GroupError> {
    check_order(n, caps)?;
    let mut count = 0u64;
    {
        let mut emit = |_: &[usize]| count += 1;
        Search::new(n, false, &mut emit).run();
    }
    Ok(count)
}
