//! Coverings between unicellular dessins, read off the normalized
//! involution.
//!
//! A dessin with `n` edges covers a `d`-edged dessin exactly when the
//! residue classes mod `2d` form a block system: `phi(i + 2d) ≡ phi(i)`
//! and `phi(i) ≢ i (mod 2d)` for all `i`. The quotient is `phi` reduced
//! mod `2d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::involution::DartInvolution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverFailure {
    /// `d` does not divide `n`.
    Divisibility,
    /// `phi(i + 2d) ≢ phi(i) (mod 2d)` for some `i`.
    Periodicity,
    /// Some residue block is mapped to itself.
    FixedBlock,
}

impl fmt::Display for CoverFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverFailure::Divisibility => "divisibility",
            CoverFailure::Periodicity => "periodicity",
            CoverFailure::FixedBlock => "fixed-block",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub d: usize,
    pub covers: bool,
    pub quotient: Option<DartInvolution>,
    pub reason: Option<CoverFailure>,
}

impl CoverReport {
    fn fail(d: usize, reason: CoverFailure) -> Self {
        Self {
            d,
            covers: false,
            quotient: None,
            reason: Some(reason),
        }
    }

    fn success(d: usize, quotient: DartInvolution) -> Self {
        Self {
            d,
            covers: true,
            quotient: Some(quotient),
            reason: None,
        }
    }
}

fn modulus(d: usize) -> i64 {
    2 * d as i64
}

fn periodic(inv: &DartInvolution, d: usize) -> bool {
    let m = modulus(d);
    (0..2 * inv.n() as i64).all(|i| (inv.phi_at(i + m) - inv.phi_at(i)).rem_euclid(m) == 0)
}

fn reduce(inv: &DartInvolution, d: usize) -> DartInvolution {
    let m = 2 * d;
    let phi = (0..m).map(|i| inv.get(i) % m).collect();
    DartInvolution::new(phi).expect("a block-preserving involution reduces to an involution")
}

/// Tests whether `inv` covers some `d`-edged unicellular dessin.
pub fn covers_dessin(inv: &DartInvolution, d: usize) -> Result<CoverReport> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    if !inv.n().is_multiple_of(d) {
        return Ok(CoverReport::fail(d, CoverFailure::Divisibility));
    }
    if !periodic(inv, d) {
        return Ok(CoverReport::fail(d, CoverFailure::Periodicity));
    }
    let m = 2 * d;
    if (0..inv.as_slice().len()).any(|i| inv.get(i) % m == i % m) {
        return Ok(CoverReport::fail(d, CoverFailure::FixedBlock));
    }
    Ok(CoverReport::success(d, reduce(inv, d)))
}

/// Covering test for trees, where only periodicity needs checking: every
/// `phi(i) - i` is odd, so no block is ever fixed.
pub fn covers_tree(inv: &DartInvolution, d: usize) -> Result<CoverReport> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    if !inv.is_tree() {
        return Err(Error::NotATree(inv.genus()));
    }
    if !inv.n().is_multiple_of(d) {
        return Ok(CoverReport::fail(d, CoverFailure::Divisibility));
    }
    if !periodic(inv, d) {
        return Ok(CoverReport::fail(d, CoverFailure::Periodicity));
    }
    Ok(CoverReport::success(d, reduce(inv, d)))
}

/// The `d`-edged dessin covered by `inv`.
pub fn quotient(inv: &DartInvolution, d: usize) -> Result<DartInvolution> {
    covers_dessin(inv, d)?
        .quotient
        .ok_or(Error::NoCovering { d })
}

/// Chain test by consecutive differences: `phi(i) - phi(i+1) ≡ 1 (mod 2n)`.
pub fn is_chain(inv: &DartInvolution) -> bool {
    let m = 2 * inv.n() as i64;
    (0..m).all(|i| (inv.phi_at(i) - inv.phi_at(i + 1) - 1).rem_euclid(m) == 0)
}

/// Chain test by explicit shape: `phi(0)` odd and `phi(j) = phi(0) - j`
/// up to `phi(0)`, `2n + phi(0) - j` past it.
pub fn is_chain_closed_form(inv: &DartInvolution) -> bool {
    let m = inv.as_slice().len();
    let p0 = inv.get(0);
    if p0.is_multiple_of(2) {
        return false;
    }
    (0..m).all(|j| {
        let expected = if j <= p0 { p0 - j } else { m + p0 - j };
        inv.get(j) == expected
    })
}

/// Star test: a valency-one vertex exists and
/// `phi(i) + phi(i+1) ≡ 2i + 1 (mod 2n)`.
pub fn is_star(inv: &DartInvolution) -> bool {
    inv.has_leaf() && satisfies_star_congruence(inv)
}

/// The star congruence alone, without the leaf hypothesis.
pub fn satisfies_star_congruence(inv: &DartInvolution) -> bool {
    let m = 2 * inv.n() as i64;
    (0..m).all(|i| (inv.phi_at(i) + inv.phi_at(i + 1) - 2 * i - 1).rem_euclid(m) == 0)
}

/// Star test by explicit shape: `phi(0) ∈ {1, 2n-1}` and
/// `phi(j) = j + (-1)^j phi(0)` reduced into `0..2n`.
pub fn is_star_closed_form(inv: &DartInvolution) -> bool {
    let m = inv.as_slice().len() as i64;
    let p0 = inv.get(0) as i64;
    if p0 != 1 && p0 != m - 1 {
        return false;
    }
    (0..m).all(|j| {
        let raw = if j % 2 == 0 { j + p0 } else { j - p0 };
        let expected = if raw > m - 1 {
            raw - m
        } else if raw < 0 {
            m + raw
        } else {
            raw
        };
        inv.get(j as usize) as i64 == expected
    })
}

/// Whether a tree covers the `d`-edged chain: `phi(i) - phi(i+1) ≡ 1 (mod 2d)`.
pub fn covers_chain(inv: &DartInvolution, d: usize) -> bool {
    if d == 0 || !inv.n().is_multiple_of(d) {
        return false;
    }
    let m = modulus(d);
    (0..2 * inv.n() as i64).all(|i| (inv.phi_at(i) - inv.phi_at(i + 1) - 1).rem_euclid(m) == 0)
}

/// Whether a tree covers the `d`-edged star: `phi(i) + phi(i+1) ≡ 2i + 1 (mod 2d)`.
pub fn covers_star(inv: &DartInvolution, d: usize) -> bool {
    if d == 0 || !inv.n().is_multiple_of(d) {
        return false;
    }
    let m = modulus(d);
    (0..2 * inv.n() as i64)
        .all(|i| (inv.phi_at(i) + inv.phi_at(i + 1) - 2 * i - 1).rem_euclid(m) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_walk;
    use crate::involution::to_involution;

    fn inv(v: &[usize]) -> DartInvolution {
        DartInvolution::new(v.to_vec()).unwrap()
    }

    fn walk(w: &str) -> DartInvolution {
        to_involution(parse_walk(w).unwrap().map()).unwrap()
    }

    // arms (1,1,1,3) around a common centre
    const X_TREE: &str = "()()()((()))";
    const Y_TREE: &str = "()()((()))";

    /// Eq. (1) checked literally over two full periods of the extension.
    fn brute_force_eq1(inv: &DartInvolution, d: usize) -> bool {
        let m = 2 * d as i64;
        let span = 4 * inv.n() as i64;
        inv.n().is_multiple_of(d)
            && (-span..span).all(|i| {
                (inv.phi_at(i + m) - inv.phi_at(i)).rem_euclid(m) == 0
                    && (inv.phi_at(i) - i).rem_euclid(m) != 0
            })
    }

    #[test]
    fn x_tree_covering() {
        let x = walk(X_TREE);
        assert!(brute_force_eq1(&x, 2));
        assert!(!brute_force_eq1(&x, 3));
        let r = covers_dessin(&x, 2).unwrap();
        assert!(r.covers);
        assert_eq!(r.quotient, Some(inv(&[1, 0, 3, 2])));
        let r = covers_dessin(&x, 3).unwrap();
        assert!(!r.covers);
        assert_eq!(r.reason, Some(CoverFailure::Periodicity));
        assert_eq!(
            covers_dessin(&x, 4).unwrap().reason,
            Some(CoverFailure::Divisibility)
        );
        assert_eq!(covers_dessin(&x, 0), Err(Error::ZeroDivisor));
    }

    #[test]
    fn identity_covering() {
        for phi in [
            vec![1, 0],
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 3, 0, 1],
            vec![3, 4, 5, 0, 1, 2],
        ] {
            let i = inv(&phi);
            let r = covers_dessin(&i, i.n()).unwrap();
            assert!(r.covers);
            assert_eq!(r.quotient, Some(i));
        }
    }

    #[test]
    fn fixed_block_fires_off_trees() {
        // genus-1 dessin with phi(i) - i = 2 for even i; reducing mod 2 fixes both blocks
        let i = inv(&[2, 3, 0, 1]);
        assert_eq!(
            covers_dessin(&i, 1).unwrap().reason,
            Some(CoverFailure::FixedBlock)
        );
    }

    #[test]
    fn tree_covering_examples() {
        let chain = walk("((()))");
        let r = covers_tree(&chain, 1).unwrap();
        assert!(r.covers);
        assert_eq!(r.quotient, Some(inv(&[1, 0])));
        for n in 1..=12 {
            let c = walk(&format!("{}{}", "(".repeat(n), ")".repeat(n)));
            for d in (1..=n).filter(|d| n % d == 0) {
                assert!(covers_tree(&c, d).unwrap().covers, "chain {n} over {d}");
            }
        }
        // five edges: only the trivial coverings exist
        let y = walk(Y_TREE);
        assert!(covers_tree(&y, 1).unwrap().covers);
        assert!(covers_tree(&y, 5).unwrap().covers);
        assert!(brute_force_eq1(&y, 5));
        for d in [2, 3, 4] {
            assert!(!covers_tree(&y, d).unwrap().covers);
        }
        assert!(covers_tree(&inv(&[2, 3, 0, 1]), 1).is_err());
    }

    #[test]
    fn quotient_examples() {
        let x = walk(X_TREE);
        assert_eq!(quotient(&x, 2).unwrap(), inv(&[1, 0, 3, 2]));
        assert_eq!(quotient(&x, 6).unwrap(), x);
        let star6 = walk("()()()()()()");
        let q = quotient(&star6, 3).unwrap();
        assert_eq!(q, inv(&[1, 0, 3, 2, 5, 4]));
        assert!(q.is_tree());
        assert_eq!(quotient(&x, 3), Err(Error::NoCovering { d: 3 }));
    }

    #[test]
    fn chain_and_star_recognizers() {
        let chain = inv(&[5, 4, 3, 2, 1, 0]);
        let star = inv(&[1, 0, 3, 2, 5, 4]);
        let edge = inv(&[1, 0]);
        assert!(is_chain(&chain) && is_chain_closed_form(&chain));
        assert!(!is_chain(&star) && !is_chain_closed_form(&star));
        assert!(is_chain(&edge) && is_chain_closed_form(&edge));
        assert!(is_star(&star) && is_star_closed_form(&star));
        assert!(!is_star(&chain) && !is_star_closed_form(&chain));
        assert!(is_star(&edge) && is_star_closed_form(&edge));
    }

    #[test]
    fn star_congruence_without_leaf() {
        // two trivalent vertices on a torus: satisfies the congruence, not a star
        let i = inv(&[3, 4, 5, 0, 1, 2]);
        assert!(!i.has_leaf());
        assert!(satisfies_star_congruence(&i));
        assert!(!is_star(&i));
        assert!(!is_star_closed_form(&i));
    }

    #[test]
    fn covers_chain_and_star_examples() {
        let x = walk(X_TREE);
        assert!(covers_chain(&x, 2));
        assert!(!covers_chain(&x, 6));
        // the 2-edged chain is also the 2-edged star
        assert!(covers_star(&x, 2));
        assert!(!covers_star(&x, 3));
        let star6 = walk("()()()()()()");
        assert!(covers_star(&star6, 3));
        for w in ["()", "((()))", X_TREE, Y_TREE] {
            assert!(covers_star(&walk(w), 1));
            assert!(covers_chain(&walk(w), 1));
        }
        assert!(!covers_chain(&x, 4));
    }
}
