//! Normalized dart involutions.
//!
//! Labelling the darts of a unicellular map along its boundary walk turns
//! the face permutation into the standard cycle `c = (0 1 … 2n-1)`; the
//! edge reversal read in that labelling is the involution `phi`. It is
//! well defined up to conjugation by powers of `c`.

use std::fmt;

use crate::error::{Error, Result};
use crate::map::CombinatorialMap;
use crate::perm;
use crate::tree::PlaneTree;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DartInvolution {
    phi: Vec<usize>,
}

impl DartInvolution {
    pub fn new(phi: Vec<usize>) -> Result<Self> {
        if phi.is_empty() || !phi.len().is_multiple_of(2) {
            return Err(Error::InvalidPermutation(format!(
                "involution domain must have positive even size, got {}",
                phi.len()
            )));
        }
        if !perm::is_fixed_point_free_involution(&phi) {
            return Err(Error::InvalidPermutation(
                "not a fixed-point-free involution".into(),
            ));
        }
        Ok(Self { phi })
    }

    /// Edge count.
    pub fn n(&self) -> usize {
        self.phi.len() / 2
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.phi
    }

    pub fn get(&self, i: usize) -> usize {
        self.phi[i]
    }

    /// `phi` extended to all integers by `phi(2n·l + j) = 2n·l + phi(j)`.
    pub fn phi_at(&self, j: i64) -> i64 {
        let len = self.phi.len() as i64;
        let l = j.div_euclid(len);
        let r = j.rem_euclid(len);
        len * l + self.phi[r as usize] as i64
    }

    /// The vertex rotation of the glued polygon, `rho0 = c ∘ phi`.
    pub fn vertex_rotation(&self) -> Vec<usize> {
        let len = self.phi.len();
        self.phi.iter().map(|&x| (x + 1) % len).collect()
    }

    /// Vertex count of the glued dessin.
    pub fn vertex_count(&self) -> usize {
        perm::cycle_count(&self.vertex_rotation())
    }

    pub fn genus(&self) -> usize {
        (self.n() + 1 - self.vertex_count()) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() == self.n() + 1
    }

    /// Whether some vertex has valency one, i.e. `c ∘ phi` has a fixed point.
    pub fn has_leaf(&self) -> bool {
        self.vertex_rotation()
            .iter()
            .enumerate()
            .any(|(i, &x)| i == x)
    }

    /// Conjugate `c^k ∘ phi ∘ c^-k`, i.e. `i ↦ phi(i - k) + k`.
    pub fn rotate(&self, k: usize) -> Self {
        let len = self.phi.len();
        let k = k % len;
        let phi = (0..len)
            .map(|i| (self.phi[(i + len - k) % len] + k) % len)
            .collect();
        Self { phi }
    }

    /// Lexicographically smallest conjugate under powers of `c`.
    pub fn canonical_form(&self) -> Self {
        (0..self.phi.len())
            .map(|k| self.rotate(k))
            .min()
            .expect("domain is non-empty")
    }

    pub fn is_canonical(&self) -> bool {
        let len = self.phi.len();
        // compare rotated sequences lazily; avoids allocating every conjugate
        (1..len).all(|k| {
            let rotated = (0..len).map(|i| (self.phi[(i + len - k) % len] + k) % len);
            rotated.cmp(self.phi.iter().copied()) != std::cmp::Ordering::Less
        })
    }

    /// Glues the edges of a `2n`-gon along `phi`.
    pub fn to_map(&self) -> CombinatorialMap {
        CombinatorialMap::new(self.vertex_rotation(), self.phi.clone())
            .expect("a glued polygon is a connected map")
    }

    /// The glued dessin as a plane tree, if it has genus 0.
    pub fn to_tree(&self) -> Result<PlaneTree> {
        PlaneTree::new(self.to_map())
    }

    /// Chords `(i, phi(i))` with `i < phi(i)` never cross.
    pub fn is_non_crossing(&self) -> bool {
        let mut stack = Vec::new();
        for i in 0..self.phi.len() {
            if self.phi[i] > i {
                stack.push(i);
            } else if stack.pop() != Some(self.phi[i]) {
                return false;
            }
        }
        true
    }

    /// Balanced parenthesis word of a non-crossing involution.
    pub fn to_walk(&self) -> Option<String> {
        if !self.is_non_crossing() {
            return None;
        }
        Some(
            self.phi
                .iter()
                .enumerate()
                .map(|(i, &x)| if x > i { '(' } else { ')' })
                .collect(),
        )
    }
}

impl fmt::Display for DartInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.phi.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Darts in boundary-walk order starting from dart 0.
pub fn face_order(map: &CombinatorialMap) -> Result<Vec<usize>> {
    let face = map.face_permutation();
    let mut order = Vec::with_capacity(face.len());
    let mut x = 0;
    loop {
        order.push(x);
        x = face[x];
        if x == 0 {
            break;
        }
    }
    if order.len() != face.len() {
        return Err(Error::NotUnicellular(map.face_count()));
    }
    Ok(order)
}

/// Normalizes a unicellular map, starting the boundary walk at dart 0.
pub fn to_involution(map: &CombinatorialMap) -> Result<DartInvolution> {
    let order = face_order(map)?;
    let mut label = vec![0; order.len()];
    for (k, &x) in order.iter().enumerate() {
        label[x] = k;
    }
    let rho1 = map.rho1();
    let phi = order.iter().map(|&x| label[rho1[x]]).collect();
    Ok(DartInvolution { phi })
}

pub fn from_involution(inv: &DartInvolution) -> CombinatorialMap {
    inv.to_map()
}

/// Checks `phi(i) - i ≡ 2|a_i| - 1 (mod 2n)` for every dart, with branch
/// weights computed by the tree walk rather than from `phi`.
pub fn verify_branch_formula(tree: &PlaneTree) -> bool {
    let order = face_order(tree.map()).expect("trees are unicellular");
    let inv = to_involution(tree.map()).expect("trees are unicellular");
    let weights = tree.branch_weights();
    let len = inv.phi.len();
    order.iter().enumerate().all(|(i, &dart)| {
        let lhs = (inv.phi[i] + len - i) % len;
        let rhs = (2 * weights[dart] - 1) % len;
        lhs == rhs
    })
}

/// `phi(i) - i` is odd for every `i`.
pub fn has_odd_displacements(inv: &DartInvolution) -> bool {
    inv.phi
        .iter()
        .enumerate()
        .all(|(i, &x)| x.abs_diff(i) % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(v: &[usize]) -> DartInvolution {
        DartInvolution::new(v.to_vec()).unwrap()
    }

    /// Conjugates built by explicit permutation composition.
    fn conjugates_by_composition(phi: &[usize]) -> Vec<Vec<usize>> {
        let len = phi.len();
        let c = perm::standard_cycle(len);
        let mut ck = (0..len).collect::<Vec<_>>();
        let mut out = Vec::new();
        for _ in 0..len {
            let conj = perm::compose(&ck, &perm::compose(phi, &perm::inverse(&ck)));
            out.push(conj);
            ck = perm::compose(&c, &ck);
        }
        out
    }

    #[test]
    fn rejects_invalid() {
        assert!(DartInvolution::new(vec![]).is_err());
        assert!(DartInvolution::new(vec![0, 1]).is_err());
        assert!(DartInvolution::new(vec![1, 2, 0, 3]).is_err());
        assert!(DartInvolution::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn phi_at_extends_periodically() {
        let chain = inv(&[5, 4, 3, 2, 1, 0]);
        assert_eq!(chain.phi_at(6), 11);
        assert_eq!(chain.phi_at(-1), -6);
        for j in 0..6 {
            assert_eq!(chain.phi_at(j as i64), chain.get(j) as i64);
        }
        assert_eq!(chain.phi_at(-7), -12);
    }

    #[test]
    fn gluing_examples() {
        let star = inv(&[1, 0, 3, 2, 5, 4]).to_map();
        assert_eq!(
            perm::cycles(star.rho0()),
            vec![vec![0, 2, 4], vec![1], vec![3], vec![5]]
        );
        let chain = inv(&[5, 4, 3, 2, 1, 0]).to_map();
        assert_eq!(
            perm::cycles(chain.rho0()),
            vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]
        );
        let torus = inv(&[2, 3, 0, 1]);
        let map = torus.to_map();
        assert_eq!(map.vertex_count(), 1);
        assert_eq!(map.face_count(), 1);
        assert_eq!(map.genus(), 1);
        assert_eq!(perm::cycles(map.rho0()), vec![vec![0, 3, 2, 1]]);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(inv(&[5, 4, 3, 2, 1, 0]).genus(), 0);
        assert_eq!(inv(&[2, 3, 0, 1]).genus(), 1);
        assert_eq!(inv(&[1, 0]).genus(), 0);
    }

    #[test]
    fn canonical_form_matches_brute_force() {
        for phi in [
            vec![5, 4, 3, 2, 1, 0],
            vec![1, 0],
            vec![1, 0, 3, 2, 5, 4],
            vec![2, 3, 0, 1],
            vec![3, 4, 5, 0, 1, 2],
        ] {
            let brute = conjugates_by_composition(&phi).into_iter().min().unwrap();
            assert_eq!(inv(&phi).canonical_form().as_slice(), &brute[..]);
        }
        // frozen from the brute-force minimum above
        assert_eq!(
            inv(&[5, 4, 3, 2, 1, 0]).canonical_form(),
            inv(&[1, 0, 5, 4, 3, 2])
        );
        assert_eq!(inv(&[1, 0]).canonical_form(), inv(&[1, 0]));
        assert_eq!(
            inv(&[1, 0, 3, 2, 5, 4]).canonical_form(),
            inv(&[1, 0, 3, 2, 5, 4])
        );
    }

    #[test]
    fn rotate_is_conjugation() {
        let phi = vec![5, 2, 1, 4, 3, 0];
        let by_composition = conjugates_by_composition(&phi);
        for (k, conj) in by_composition.iter().enumerate() {
            assert_eq!(inv(&phi).rotate(k).as_slice(), &conj[..]);
        }
    }

    #[test]
    fn is_canonical_agrees_with_canonical_form() {
        for phi in [
            vec![5, 4, 3, 2, 1, 0],
            vec![1, 0, 5, 4, 3, 2],
            vec![1, 0, 3, 2, 5, 4],
        ] {
            let i = inv(&phi);
            assert_eq!(i.is_canonical(), i.canonical_form() == i);
        }
    }

    #[test]
    fn non_crossing_and_walk() {
        assert_eq!(
            inv(&[5, 4, 3, 2, 1, 0]).to_walk().as_deref(),
            Some("((()))")
        );
        assert_eq!(
            inv(&[1, 0, 3, 2, 5, 4]).to_walk().as_deref(),
            Some("()()()")
        );
        assert_eq!(inv(&[2, 3, 0, 1]).to_walk(), None);
    }

    #[test]
    fn face_order_rejects_multiple_faces() {
        // one edge drawn as a loop on a single vertex has two faces
        let map = CombinatorialMap::new(vec![1, 0], vec![1, 0]).unwrap();
        assert_eq!(map.face_count(), 2);
        assert_eq!(to_involution(&map), Err(Error::NotUnicellular(2)));
    }
}
