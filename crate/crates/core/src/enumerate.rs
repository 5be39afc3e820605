//! Exhaustive generation of plane trees as non-crossing matchings.
//!
//! Rooted trees are streamed in lexicographic order of their boundary words
//! (`(` before `)`); unrooted trees are the rooted ones that are their own
//! canonical form.

use std::collections::BTreeSet;

use crate::invariants::{curve_data, CurveData};
use crate::involution::DartInvolution;
use crate::tree::PlaneTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Rooted,
    Unrooted,
}

/// Balanced words of length `2n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct BalancedWords {
    word: Vec<bool>, // true = '('
    started: bool,
    done: bool,
}

impl BalancedWords {
    pub fn new(n: usize) -> Self {
        let mut word = vec![true; n];
        word.extend(std::iter::repeat_n(false, n));
        Self {
            word,
            started: false,
            done: n == 0,
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.word.len();
        let mut depth = Vec::with_capacity(len);
        let mut b = 0usize;
        for &open in &self.word {
            depth.push(b);
            if open {
                b += 1;
            } else {
                b -= 1;
            }
        }
        let Some(i) = (0..len).rev().find(|&i| self.word[i] && depth[i] >= 1) else {
            return false;
        };
        let opens_before = self.word[..i].iter().filter(|&&o| o).count();
        let opens_after = len / 2 - opens_before;
        self.word[i] = false;
        for (k, slot) in self.word[i + 1..].iter_mut().enumerate() {
            *slot = k < opens_after;
        }
        true
    }

    fn to_involution(&self) -> DartInvolution {
        let mut phi = vec![0; self.word.len()];
        let mut open = Vec::new();
        for (i, &o) in self.word.iter().enumerate() {
            if o {
                open.push(i);
            } else {
                let j = open.pop().expect("word is balanced");
                phi[i] = j;
                phi[j] = i;
            }
        }
        DartInvolution::new(phi).expect("matching is a fixed-point-free involution")
    }
}

impl Iterator for BalancedWords {
    type Item = DartInvolution;

    fn next(&mut self) -> Option<DartInvolution> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(self.to_involution())
    }
}

/// Every rooted plane tree with `n` edges, i.e. every non-crossing
/// fixed-point-free matching on `2n` points.
pub fn rooted_trees(n: usize) -> BalancedWords {
    BalancedWords::new(n)
}

/// One canonical involution per plane tree with `n` edges.
pub fn unrooted_trees(n: usize) -> impl Iterator<Item = DartInvolution> {
    rooted_trees(n).filter(DartInvolution::is_canonical)
}

/// Same stream as [`unrooted_trees`], deduplicated through a set of
/// canonical forms instead of the self-canonical test.
pub fn unrooted_trees_by_set(n: usize) -> Vec<DartInvolution> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for inv in rooted_trees(n) {
        let canon = inv.canonical_form();
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out.sort_by_key(|i| i.to_walk());
    out
}

pub fn trees(n: usize, mode: Mode) -> Box<dyn Iterator<Item = DartInvolution>> {
    match mode {
        Mode::Rooted => Box::new(rooted_trees(n)),
        Mode::Unrooted => Box::new(unrooted_trees(n)),
    }
}

/// Every fixed-point-free involution on `2n` points, in lexicographic
/// order: all `n`-edged unicellular dessins with a marked dart.
pub fn all_involutions(n: usize) -> Vec<DartInvolution> {
    fn extend(phi: &mut Vec<Option<usize>>, out: &mut Vec<DartInvolution>) {
        let Some(i) = phi.iter().position(Option::is_none) else {
            let full = phi.iter().map(|x| x.expect("all assigned")).collect();
            out.push(DartInvolution::new(full).expect("pairing is an involution"));
            return;
        };
        for j in i + 1..phi.len() {
            if phi[j].is_none() {
                phi[i] = Some(j);
                phi[j] = Some(i);
                extend(phi, out);
                phi[i] = None;
                phi[j] = None;
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(&mut vec![None; 2 * n], &mut out);
    }
    out
}

/// A tree realizing a curve of the given genus with divisor order `m`.
#[derive(Debug, Clone)]
pub struct Witness {
    pub tree: PlaneTree,
    pub involution: DartInvolution,
    pub data: CurveData,
}

/// First tree with `2g + 2` odd-valency vertices and `n / d_c = m`,
/// scanning `n = m, 2m, …` up to `max_edges`.
pub fn search_genus_order(g: usize, m: usize, max_edges: usize) -> Option<Witness> {
    if m == 0 {
        return None;
    }
    (1..)
        .map(|k| k * m)
        .take_while(|&n| n <= max_edges)
        .find_map(|n| {
            unrooted_trees(n).find_map(|inv| {
                let tree = inv.to_tree().expect("matchings glue to trees");
                if tree.odd_vertex_count() != 2 * g + 2 {
                    return None;
                }
                let data = curve_data(&tree);
                (data.divisor_order == m).then_some(Witness {
                    tree,
                    involution: inv,
                    data,
                })
            })
        })
}
