//! Plane trees: unicellular genus-0 maps, together with branches and
//! branch weights.
//!
//! The branch through a dart `x` is the maximal subtree that contains the
//! edge of `x` and meets the origin of `x` in that edge only. Its weight is
//! its edge count.

use crate::error::{Error, Result};
use crate::map::CombinatorialMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    map: CombinatorialMap,
    vertex_of_dart: Vec<usize>,
}

/// Weights of two cyclically consecutive branches growing from `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchPair {
    pub vertex: usize,
    pub weight_a: usize,
    pub weight_b: usize,
}

impl BranchPair {
    pub fn sum(&self) -> usize {
        self.weight_a + self.weight_b
    }

    pub fn abs_difference(&self) -> usize {
        self.weight_a.abs_diff(self.weight_b)
    }
}

impl PlaneTree {
    pub fn new(map: CombinatorialMap) -> Result<Self> {
        let faces = map.face_count();
        if faces != 1 {
            return Err(Error::NotUnicellular(faces));
        }
        let genus = map.genus();
        if genus != 0 {
            return Err(Error::NotATree(genus));
        }
        let vertex_of_dart = map.vertex_of_dart();
        Ok(Self {
            map,
            vertex_of_dart,
        })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn into_map(self) -> CombinatorialMap {
        self.map
    }

    pub fn n(&self) -> usize {
        self.map.n()
    }

    pub fn vertex_count(&self) -> usize {
        self.map.n() + 1
    }

    pub fn vertex_of_dart(&self) -> &[usize] {
        &self.vertex_of_dart
    }

    pub fn origin(&self, dart: usize) -> usize {
        self.vertex_of_dart[dart]
    }

    pub fn head(&self, dart: usize) -> usize {
        self.vertex_of_dart[self.map.rho1()[dart]]
    }

    pub fn degree_profile(&self) -> Vec<usize> {
        self.map.degree_profile()
    }

    /// Weight of the branch through `dart`, counted by walking the subtree
    /// beyond the head of `dart`.
    pub fn branch_weight(&self, dart: usize) -> Result<usize> {
        self.map.check_dart(dart)?;
        Ok(self.weight_unchecked(dart))
    }

    fn weight_unchecked(&self, dart: usize) -> usize {
        let rho0 = self.map.rho0();
        let rho1 = self.map.rho1();
        let mut edges = 1;
        // Each stacked dart points back towards `dart`'s origin; its siblings
        // under rho0 lead further away.
        let mut stack = vec![rho1[dart]];
        while let Some(back) = stack.pop() {
            let mut x = rho0[back];
            while x != back {
                edges += 1;
                stack.push(rho1[x]);
                x = rho0[x];
            }
        }
        edges
    }

    /// Branch weight of every dart, indexed by dart.
    pub fn branch_weights(&self) -> Vec<usize> {
        (0..self.map.dart_count())
            .map(|x| self.weight_unchecked(x))
            .collect()
    }

    /// All `2n` pairs of cyclically consecutive branches, vertex by vertex
    /// in id order. A leaf contributes its single branch paired with itself.
    pub fn adjacent_branch_pairs(&self) -> Vec<BranchPair> {
        let weights = self.branch_weights();
        let mut pairs = Vec::with_capacity(self.map.dart_count());
        for (vertex, cycle) in self.map.vertices().iter().enumerate() {
            for (j, &x) in cycle.iter().enumerate() {
                let next = cycle[(j + 1) % cycle.len()];
                pairs.push(BranchPair {
                    vertex,
                    weight_a: weights[x],
                    weight_b: weights[next],
                });
            }
        }
        pairs
    }

    /// Number of vertices of odd valency; always even, and 2 exactly for chains.
    pub fn odd_vertex_count(&self) -> usize {
        self.degree_profile()
            .iter()
            .filter(|&&k| k % 2 == 1)
            .count()
    }

    /// Path shape: every valency is 1 or 2.
    pub fn is_chain_shape(&self) -> bool {
        self.degree_profile().iter().all(|&k| k <= 2)
    }

    /// Star shape: one vertex carries every edge.
    pub fn is_star_shape(&self) -> bool {
        self.degree_profile().iter().any(|&k| k == self.n())
    }
}

impl TryFrom<CombinatorialMap> for PlaneTree {
    type Error = Error;

    fn try_from(map: CombinatorialMap) -> Result<Self> {
        PlaneTree::new(map)
    }
}
