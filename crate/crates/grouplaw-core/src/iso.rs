//! Isomorphism testing by backtracking over generator images.

use alloc::vec::Vec;
use alloc::vec;

use crate::error::GroupError;
use crate::group::{Caps, FiniteGroup};
use crate::subgroup::closure;

/// Decides whether two groups are isomorphic.
///
/// Fast negative paths: differing order, abelian flag, element-order
/// histogram, or center size. Otherwise a greedy generating set of `g` is
/// found and a backtracking search tries order-preserving images in `h`;
/// each complete candidate map is verified to be a bijective homomorphism
/// before the search reports success.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<bool, GroupError> {
    for grp in [g, h] {
        if grp.order() > caps.order_cap {
            return Err(GroupError::OrderCapExceeded { order: grp.order(), cap: caps.order_cap });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.is_abelian().0 != h.is_abelian().0 {
        return Ok(false);
    }
    if g.order_histogram() != h.order_histogram() {
        return Ok(false);
    }
    if g.center_size() != h.center_size() {
        return Ok(false);
    }

    let gens = greedy_generators(g);
    let mut images = vec![0usize; gens.len()];
    Ok(search(g, h, &gens, &mut images, 0))
}

/// A small generating set, grown greedily: repeatedly adjoin the smallest
/// element outside the closure of what we have.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut have = closure(g, &gens);
    while have.len() < g.order() {
        let next = (0..g.order()).find(|&x| !have.contains(x)).unwrap();
        gens.push(next);
        have = closure(g, &gens);
    }
    gens
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return check_candidate(g, h, gens, images);
    }
    let want = g.element_order(gens[depth]);
    for cand in 0..h.order() {
        if h.element_order(cand) != want {
            continue;
        }
        images[depth] = cand;
        // Partial consistency: the chosen images must generate a subgroup
        // of the right size and admit a homomorphic extension so far.
        if partial_consistent(g, h, &gens[..=depth], &images[..=depth])
            && search(g, h, gens, images, depth + 1)
        {
            return true;
        }
    }
    false
}

/// Extends gens→images to the subgroup they generate by parallel BFS; any
/// conflict or size mismatch rules the partial choice out.
fn partial_consistent(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    match extend_map(g, h, gens, images) {
        Some(map) => {
            // Injectivity on the generated subgroup.
            let mut hit = vec![false; h.order()];
            for &v in map.iter().filter(|&&v| v != usize::MAX) {
                if hit[v] {
                    return false;
                }
                hit[v] = true;
            }
            true
        }
        None => false,
    }
}

/// BFS over ⟨gens⟩ defining φ(x·gᵢ) = φ(x)·φ(gᵢ); returns the partial map
/// (usize::MAX outside the generated subgroup) or None on conflict.
fn extend_map(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut worklist: Vec<usize> = vec![0];
    let mut cursor = 0;
    while cursor < worklist.len() {
        let x = worklist[cursor];
        cursor += 1;
        for (&gen, &img) in gens.iter().zip(images) {
            let y = g.mul(x, gen);
            let fy = h.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                worklist.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Full verification of a completed candidate: total, bijective, and a
/// homomorphism on every pair.
fn check_candidate(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    let map = match extend_map(g, h, gens, images) {
        Some(m) => m,
        None => return false,
    };
    if map.iter().any(|&v| v == usize::MAX) {
        return false;
    }
    let mut hit = vec![false; h.order()];
    for &v in &map {
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}
