//! Named group constructions and the batch scan harness.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::arith::{coprime, is_prime};
use crate::error::GroupError;
use crate::group::{Caps, FiniteGroup};
use crate::law::{satisfies_p, PropertyReport};
use crate::perm::{from_permutations, Permutation};

/// One base constructor in a group-spec expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    /// `C<n>`: cyclic of order n.
    Cyclic(usize),
    /// `D<n>`: dihedral of order 2n.
    Dihedral(usize),
    /// `S<n>`: symmetric on n points.
    Symmetric(usize),
    /// `A<n>`: alternating on n points.
    Alternating(usize),
    /// `Q8`: quaternion of order 8.
    Quaternion,
    /// `Heis<p>`: upper unitriangular 3×3 matrices over ℤ/p, order p³.
    Heisenberg(u64),
    /// `@<path>`: a Cayley-table file, resolved by the caller.
    External(String),
}

/// A parsed spec: one or more bases joined by `x`, associating left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub bases: Vec<BaseSpec>,
}

impl GroupSpec {
    /// Parses a spec string such as `S3`, `C2xC2`, `Heis3xC4` or `@g.tbl`.
    ///
    /// An `x` separates bases when the next character starts a base
    /// (`C D S A Q H @`); paths containing such a sequence cannot appear
    /// inside products.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(GroupError::BadSpec { message: "empty spec".to_string() });
        }
        let mut bases = Vec::new();
        let bytes = text.as_bytes();
        let mut start = 0usize;
        let mut i = 0usize;
        while i < bytes.len() {
            if bytes[i] == b'x'
                && i + 1 < bytes.len()
                && matches!(bytes[i + 1], b'C' | b'D' | b'S' | b'A' | b'Q' | b'H' | b'@')
            {
                bases.push(Self::parse_base(&text[start..i])?);
                start = i + 1;
                i += 1;
            }
            i += 1;
        }
        bases.push(Self::parse_base(&text[start..])?);
        Ok(GroupSpec { bases })
    }

    fn parse_base(token: &str) -> Result<BaseSpec, GroupError> {
        let bad = |message: String| GroupError::BadSpec { message };
        if let Some(path) = token.strip_prefix('@') {
            if path.is_empty() {
                return Err(bad("empty path after `@`".to_string()));
            }
            return Ok(BaseSpec::External(path.to_string()));
        }
        if token == "Q8" {
            return Ok(BaseSpec::Quaternion);
        }
        if let Some(digits) = token.strip_prefix("Heis") {
            let p: u64 = digits
                .parse()
                .map_err(|_| bad(format!("bad Heisenberg prime in `{token}`")))?;
            if p < 3 || !is_prime(p) {
                return Err(bad(format!("Heis needs an odd prime, got {p}")));
            }
            return Ok(BaseSpec::Heisenberg(p));
        }
        let (head, digits) = token.split_at(if token.is_empty() { 0 } else { 1 });
        let n: usize = digits
            .parse()
            .map_err(|_| bad(format!("bad base `{token}`")))?;
        if n < 1 {
            return Err(bad(format!("order parameter must be positive in `{token}`")));
        }
        match head {
            "C" => Ok(BaseSpec::Cyclic(n)),
            "D" => Ok(BaseSpec::Dihedral(n)),
            "S" => Ok(BaseSpec::Symmetric(n)),
            "A" => Ok(BaseSpec::Alternating(n)),
            _ => Err(bad(format!("unknown base `{token}`"))),
        }
    }
}

/// Builds a group from a spec string; `@path` bases are rejected (use
/// [`make_with`] and supply a resolver).
pub fn make(spec: &str, caps: &Caps) -> Result<FiniteGroup, GroupError> {
    make_with(spec, caps, &mut |path| {
        Err(GroupError::External { message: format!("no resolver for `@{path}`") })
    })
}

/// Builds a group from a spec string, resolving `@path` bases through the
/// supplied loader.
pub fn make_with(
    spec: &str,
    caps: &Caps,
    resolve: &mut dyn FnMut(&str) -> Result<FiniteGroup, GroupError>,
) -> Result<FiniteGroup, GroupError> {
    let parsed = GroupSpec::parse(spec)?;
    let mut acc: Option<FiniteGroup> = None;
    for base in &parsed.bases {
        let next = make_base(base, caps, resolve)?;
        acc = Some(match acc {
            None => next,
            Some(g) => g.direct_product(&next, caps)?,
        });
    }
    let mut g = acc.expect("spec has at least one base");
    if parsed.bases.len() == 1 {
        // Single-base names come from the constructor; keep the spec text
        // for products too so reports read naturally.
        if !matches!(parsed.bases[0], BaseSpec::External(_)) {
            g.set_name(spec);
        }
    } else {
        g.set_name(spec);
    }
    Ok(g)
}

fn make_base(
    base: &BaseSpec,
    caps: &Caps,
    resolve: &mut dyn FnMut(&str) -> Result<FiniteGroup, GroupError>,
) -> Result<FiniteGroup, GroupError> {
    let check_cap = |order: usize| {
        if order > caps.closure_cap {
            Err(GroupError::OrderCapExceeded { order, cap: caps.closure_cap })
        } else {
            Ok(())
        }
    };
    match base {
        BaseSpec::Cyclic(n) => {
            check_cap(*n)?;
            Ok(FiniteGroup::cyclic(*n))
        }
        BaseSpec::Dihedral(n) => {
            check_cap(2 * n)?;
            Ok(dihedral(*n))
        }
        BaseSpec::Symmetric(n) => {
            check_cap(factorial_capped(*n, caps.closure_cap))?;
            symmetric(*n, caps)
        }
        BaseSpec::Alternating(n) => {
            check_cap(factorial_capped(*n, caps.closure_cap) / 2.max(1))?;
            alternating(*n, caps)
        }
        BaseSpec::Quaternion => Ok(quaternion()),
        BaseSpec::Heisenberg(p) => {
            let order = (*p as usize).pow(3);
            check_cap(order)?;
            Ok(heisenberg(*p))
        }
        BaseSpec::External(path) => resolve(path),
    }
}

fn factorial_capped(n: usize, cap: usize) -> usize {
    let mut acc = 1usize;
    for k in 2..=n {
        acc = acc.saturating_mul(k);
        if acc > cap {
            return acc;
        }
    }
    acc
}

/// Dihedral group of order 2n, built directly on ids: 0..n are the
/// rotations rⁱ, n..2n the reflections s·rⁱ.
fn dihedral(n: usize) -> FiniteGroup {
    let size = 2 * n;
    let mut table = vec![0usize; size * size];
    for i in 0..size {
        for j in 0..size {
            let (ri, fi) = (i % n, i >= n);
            let (rj, fj) = (j % n, j >= n);
            // r^i · r^j = r^{i+j};      r^i · s r^j = s r^{j-i}
            // s r^i · r^j = s r^{i+j};  s r^i · s r^j = r^{j-i}
            table[i * size + j] = match (fi, fj) {
                (false, false) => (ri + rj) % n,
                (false, true) => n + (n + rj - ri) % n,
                (true, false) => n + (ri + rj) % n,
                (true, true) => (n + rj - ri) % n,
            };
        }
    }
    FiniteGroup::from_valid_table(table, size, format!("D{n}"))
}

fn symmetric(n: usize, caps: &Caps) -> Result<FiniteGroup, GroupError> {
    if n <= 1 {
        let mut g = FiniteGroup::trivial();
        g.set_name(&format!("S{n}"));
        return Ok(g);
    }
    let gens = vec![
        Permutation::from_cycles(n, &[&[0, 1]])?,
        Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])?,
    ];
    let mut g = from_permutations(&gens, caps)?;
    g.set_name(&format!("S{n}"));
    Ok(g)
}

fn alternating(n: usize, caps: &Caps) -> Result<FiniteGroup, GroupError> {
    if n <= 2 {
        let mut g = FiniteGroup::trivial();
        g.set_name(&format!("A{n}"));
        return Ok(g);
    }
    // All 3-cycles (0 1 k) generate A_n.
    let gens: Vec<Permutation> = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
        .collect::<Result<_, _>>()?;
    let mut g = from_permutations(&gens, caps)?;
    g.set_name(&format!("A{n}"));
    Ok(g)
}

/// Quaternion group {±1, ±i, ±j, ±k}: unit u encoded as 2·axis + sign,
/// axes 1, i, j, k.
fn quaternion() -> FiniteGroup {
    // Multiplication of the quaternion units via (axis, sign) pairs.
    // axis: 0 = 1, 1 = i, 2 = j, 3 = k.
    let mul_axis = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut table = vec![0usize; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (axis, flip) = mul_axis(a / 2, b / 2);
            let sign = (a % 2) ^ (b % 2) ^ usize::from(flip);
            table[a * 8 + b] = 2 * axis + sign;
        }
    }
    FiniteGroup::from_valid_table(table, 8, "Q8".to_string())
}

/// Heisenberg group mod p: triples (a, b, c) with
/// (a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b'). Nonabelian of order p³
/// and exponent p for odd p.
fn heisenberg(p: u64) -> FiniteGroup {
    let p = p as usize;
    let n = p * p * p;
    let id = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut table = vec![0usize; n * n];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let x = id(a1, b1, c1);
                            let y = id(a2, b2, c2);
                            table[x * n + y] =
                                id((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::from_valid_table(table, n, format!("Heis{p}"))
}

/// Spec strings for the named corpus used by batch drivers: cyclic groups
/// of every order up to `max_order`, the nonabelian families that fit, and
/// a spread of products. Sorted by (order, spec); entries whose order
/// exceeds `max_order` are dropped.
pub fn standard_specs(max_order: usize) -> Vec<String> {
    let mut specs: Vec<(usize, String)> = Vec::new();
    for n in 1..=max_order {
        specs.push((n, format!("C{n}")));
    }
    for n in 3..=max_order / 2 {
        specs.push((2 * n, format!("D{n}")));
    }
    for (order, spec) in [
        (6, "S3"),
        (24, "S4"),
        (12, "A4"),
        (8, "Q8"),
        (27, "Heis3"),
        (4, "C2xC2"),
        (8, "C2xC4"),
        (8, "C2xC2xC2"),
        (9, "C3xC3"),
        (12, "C2xC2xC3"),
        (16, "C2xC8"),
        (16, "C4xC4"),
        (16, "C2xC2xC4"),
        (16, "C2xC2xC2xC2"),
        (16, "C2xQ8"),
        (16, "C2xD4"),
        (18, "C3xS3"),
        (24, "C2xA4"),
        (24, "C3xQ8"),
        (24, "C2xC2xS3"),
        (27, "C3xC9"),
        (36, "C6xC6"),
        (36, "C3xA4"),
        (48, "C2xS4"),
    ] {
        if order <= max_order {
            specs.push((order, spec.to_string()));
        }
    }
    specs.sort();
    specs.into_iter().map(|(_, s)| s).collect()
}

/// Builds every group in [`standard_specs`].
pub fn standard_catalog(max_order: usize, caps: &Caps) -> Result<Vec<FiniteGroup>, GroupError> {
    standard_specs(max_order).iter().map(|s| make(s, caps)).collect()
}

/// One scanned (group, pair) row plus the aggregate counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub rows: Vec<PropertyReport>,
    pub satisfiers: usize,
    pub abelian: usize,
    /// Rows with satisfies 𝒫 ∧ nonabelian. Empty for finite groups is the
    /// assertion under test, not an assumption.
    pub counterexamples: Vec<PropertyReport>,
}

/// Runs `satisfies_p` over every (group, pair) cell.
///
/// Row order is deterministic: (group order, group name, pair). All pairs
/// must be coprime.
pub fn scan(groups: &[FiniteGroup], pairs: &[(u64, u64)]) -> Result<ScanReport, GroupError> {
    for &(m, n) in pairs {
        if !coprime(m, n) {
            return Err(GroupError::NotCoprime { m, n });
        }
    }
    let mut order_index: Vec<usize> = (0..groups.len()).collect();
    order_index.sort_by_key(|&i| (groups[i].order(), groups[i].name().to_string()));
    let mut rows = Vec::new();
    for &i in &order_index {
        for &(m, n) in pairs {
            rows.push(satisfies_p(&groups[i], m, n, false)?);
        }
    }
    let satisfiers = rows.iter().filter(|r| r.satisfies_p).count();
    let abelian = rows.iter().filter(|r| r.is_abelian).count();
    let counterexamples: Vec<PropertyReport> = rows
        .iter()
        .filter(|r| r.satisfies_p && !r.is_abelian)
        .cloned()
        .collect();
    Ok(ScanReport { rows, satisfiers, abelian, counterexamples })
}
