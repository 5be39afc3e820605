//! Combinatorial maps: darts `0..2n` with a vertex rotation `rho0` and an
//! edge reversal `rho1`.
//!
//! Permutations act on the left, so the face permutation is
//! `rho0 ∘ rho1`, i.e. `face(x) = rho0(rho1(x))`.

use crate::error::{Error, Result};
use crate::perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    n: usize,
    rho0: Vec<usize>,
    rho1: Vec<usize>,
}

impl CombinatorialMap {
    /// Builds a map from its two permutations, checking that `rho1` is a
    /// fixed-point-free involution and that the map is connected.
    pub fn new(rho0: Vec<usize>, rho1: Vec<usize>) -> Result<Self> {
        if rho0.len() != rho1.len() {
            return Err(Error::InvalidPermutation(format!(
                "rho0 has {} darts but rho1 has {}",
                rho0.len(),
                rho1.len()
            )));
        }
        if rho0.is_empty() || !rho0.len().is_multiple_of(2) {
            return Err(Error::InvalidPermutation(format!(
                "dart count must be positive and even, got {}",
                rho0.len()
            )));
        }
        if !perm::is_permutation(&rho0) {
            return Err(Error::InvalidPermutation(
                "rho0 is not a permutation".into(),
            ));
        }
        if !perm::is_fixed_point_free_involution(&rho1) {
            return Err(Error::InvalidPermutation(
                "rho1 is not a fixed-point-free involution".into(),
            ));
        }
        if !perm::is_transitive(rho0.len(), &[&rho0, &rho1]) {
            return Err(Error::Disconnected);
        }
        Ok(Self {
            n: rho0.len() / 2,
            rho0,
            rho1,
        })
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dart_count(&self) -> usize {
        2 * self.n
    }

    pub fn rho0(&self) -> &[usize] {
        &self.rho0
    }

    pub fn rho1(&self) -> &[usize] {
        &self.rho1
    }

    /// The boundary walk `rho0 ∘ rho1`.
    pub fn face_permutation(&self) -> Vec<usize> {
        perm::compose(&self.rho0, &self.rho1)
    }

    /// Vertex cycles of `rho0`, ordered by first dart.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        perm::cycles(&self.rho0)
    }

    pub fn vertex_count(&self) -> usize {
        perm::cycle_count(&self.rho0)
    }

    pub fn face_count(&self) -> usize {
        perm::cycle_count(&self.face_permutation())
    }

    pub fn is_unicellular(&self) -> bool {
        self.face_count() == 1
    }

    /// Genus from the Euler relation `V - n + F = 2 - 2g`.
    pub fn genus(&self) -> usize {
        let chi = self.vertex_count() + self.face_count();
        // connectedness gives V + F <= n + 2 with matching parity
        (self.n + 2 - chi) / 2
    }

    /// Vertex valencies, one per `rho0` cycle in first-dart order.
    pub fn degree_profile(&self) -> Vec<usize> {
        self.vertices().iter().map(Vec::len).collect()
    }

    /// Vertex id of every dart's origin; ids follow first-dart order.
    pub fn vertex_of_dart(&self) -> Vec<usize> {
        let mut out = vec![0; self.dart_count()];
        for (v, cycle) in self.vertices().iter().enumerate() {
            for &x in cycle {
                out[x] = v;
            }
        }
        out
    }

    pub(crate) fn check_dart(&self, dart: usize) -> Result<()> {
        if dart < self.dart_count() {
            Ok(())
        } else {
            Err(Error::DartOutOfRange {
                dart,
                darts: self.dart_count(),
            })
        }
    }
}
