//! Branch-weight criteria for covering chains and stars, the invariants
//! `d_c` and `d_s`, and the combinatorial data of the associated
//! hyperelliptic curve.
//!
//! An `n`-edged tree covers the `d`-edged chain (star), `d | n`, iff `d`
//! divides the sum (difference) of the weights of every pair of adjacent
//! branches. `d_c` and `d_s` are taken as gcds that include `n`, so that
//! they always divide `n`: for an odd star every adjacent sum is 2, yet no
//! 2-edged chain is covered.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::tree::PlaneTree;

fn check_divisor(tree: &PlaneTree, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    if !tree.n().is_multiple_of(d) {
        return Err(Error::NotADivisor { d, n: tree.n() });
    }
    Ok(())
}

pub fn covers_chain_by_branches(tree: &PlaneTree, d: usize) -> Result<bool> {
    check_divisor(tree, d)?;
    Ok(tree
        .adjacent_branch_pairs()
        .iter()
        .all(|p| p.sum() % d == 0))
}

pub fn covers_star_by_branches(tree: &PlaneTree, d: usize) -> Result<bool> {
    check_divisor(tree, d)?;
    Ok(tree
        .adjacent_branch_pairs()
        .iter()
        .all(|p| p.abs_difference() % d == 0))
}

/// `gcd(n, all adjacent branch sums)`.
pub fn d_c(tree: &PlaneTree) -> usize {
    tree.adjacent_branch_pairs()
        .iter()
        .fold(tree.n(), |g, p| g.gcd(&p.sum()))
}

/// `gcd(n, all adjacent branch differences)`, with `gcd(x, 0) = x`.
pub fn d_s(tree: &PlaneTree) -> usize {
    tree.adjacent_branch_pairs()
        .iter()
        .fold(tree.n(), |g, p| g.gcd(&p.abs_difference()))
}

/// Gcd of adjacent sums without the `n` term.
pub fn bare_sum_gcd(tree: &PlaneTree) -> usize {
    tree.adjacent_branch_pairs()
        .iter()
        .fold(0, |g, p| g.gcd(&p.sum()))
}

/// Largest `d | n` for which `holds(d)`; `holds(1)` is assumed true.
pub fn max_divisor_where(n: usize, holds: impl Fn(usize) -> bool) -> usize {
    (1..=n)
        .rev()
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| holds(d))
        .unwrap_or(1)
}

/// Combinatorial shadow of the curve `w² = R(z)` attached to a tree: the
/// genus comes from the odd-valency vertices and the order of the divisor
/// at infinity is `n / d_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveData {
    pub n: usize,
    pub o: usize,
    pub genus: usize,
    pub d_c: usize,
    pub divisor_order: usize,
    pub d_s: usize,
}

pub fn curve_data(tree: &PlaneTree) -> CurveData {
    let o = tree.odd_vertex_count();
    let d_c = d_c(tree);
    CurveData {
        n: tree.n(),
        o,
        genus: (o - 2) / 2,
        d_c,
        divisor_order: tree.n() / d_c,
        d_s: d_s(tree),
    }
}

/// Under a chain covering of degree `n/d`, every branch at an odd-valency
/// vertex has weight divisible by `d`. Returns whether that holds.
pub fn odd_vertex_divisibility_check(tree: &PlaneTree, d: usize) -> Result<bool> {
    if !covers_chain_by_branches(tree, d)? {
        return Err(Error::Precondition(format!(
            "tree does not cover the {d}-edged chain"
        )));
    }
    let weights = tree.branch_weights();
    Ok(tree
        .map()
        .vertices()
        .iter()
        .filter(|cycle| cycle.len() % 2 == 1)
        .flatten()
        .all(|&x| weights[x].is_multiple_of(d)))
}
