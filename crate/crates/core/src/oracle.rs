//! Brute-force verifiers.
//!
//! Nothing here calls the congruence predicates of [`crate::cover`]: the
//! semiconjugacy check works with raw permutations and block images, and
//! the block-system check enumerates every equal-size partition. The
//! cross-check then compares four independent routes to covering.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::cover;
use crate::enumerate::{all_involutions, unrooted_trees};
use crate::error::{Error, Result};
use crate::invariants::{self, max_divisor_where};
use crate::involution::{self, DartInvolution};
use crate::map::CombinatorialMap;
use crate::perm;

/// Two or more methods disagree on `check` for `tree` (and divisor `d`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub tree: DartInvolution,
    pub d: Option<usize>,
    pub check: &'static str,
    pub methods: Vec<(&'static str, String)>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} tree=[{}]", self.check, self.tree)?;
        if let Some(d) = self.d {
            write!(f, " d={d}")?;
        }
        for (name, value) in &self.methods {
            write!(f, " {name}={value}")?;
        }
        Ok(())
    }
}

/// Quotient of a unicellular map by the residue blocks mod `2d` of its
/// face labelling started at `start`, if those blocks form a block system
/// with no reversal-fixed block.
pub fn semiconjugacy_quotient(
    map: &CombinatorialMap,
    d: usize,
    start: usize,
) -> Result<Option<DartInvolution>> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    let n = map.n();
    if !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { d, n });
    }
    map.check_dart(start)?;
    let face = map.face_permutation();
    let mut position = vec![usize::MAX; face.len()];
    let mut x = start;
    for k in 0..face.len() {
        if position[x] != usize::MAX {
            return Err(Error::NotUnicellular(map.face_count()));
        }
        position[x] = k;
        x = face[x];
    }
    let blocks = 2 * d;
    let f: Vec<usize> = position.iter().map(|&p| p % blocks).collect();

    // induced action of a generator on blocks, if well defined
    let induced = |g: &[usize]| -> Option<Vec<usize>> {
        let mut image = vec![usize::MAX; blocks];
        for dart in 0..g.len() {
            let (b, gb) = (f[dart], f[g[dart]]);
            if image[b] == usize::MAX {
                image[b] = gb;
            } else if image[b] != gb {
                return None;
            }
        }
        Some(image)
    };
    let (Some(rho0_q), Some(rho1_q), Some(face_q)) =
        (induced(map.rho0()), induced(map.rho1()), induced(&face))
    else {
        return Ok(None);
    };
    // semiconjugacy f ∘ g = g' ∘ f, re-checked dart by dart
    let semiconj = |g: &[usize], gq: &[usize]| (0..g.len()).all(|x| f[g[x]] == gq[f[x]]);
    if !semiconj(map.rho1(), &rho1_q) || !semiconj(&face, &face_q) {
        return Ok(None);
    }
    if (0..blocks).any(|b| rho1_q[b] == b) {
        return Ok(None);
    }
    debug_assert_eq!(face_q, perm::standard_cycle(blocks));
    debug_assert_eq!(perm::compose(&rho0_q, &rho1_q), face_q);
    Ok(DartInvolution::new(rho1_q).ok())
}

pub fn semiconjugacy_cover_check(map: &CombinatorialMap, d: usize) -> Result<bool> {
    Ok(semiconjugacy_quotient(map, d, 0)?.is_some())
}

/// Largest `n` accepted by [`block_system_uniqueness_check`].
pub const MAX_BLOCK_SCAN_EDGES: usize = 6;

/// Among all partitions of `0..2n` into `2d` blocks of equal size, exactly
/// one is preserved by the cycle `(0 1 … 2n-1)`, and it is the partition
/// into residues mod `2d`.
pub fn block_system_uniqueness_check(n: usize, d: usize) -> Result<bool> {
    if n > MAX_BLOCK_SCAN_EDGES {
        return Err(Error::Precondition(format!(
            "block scan limited to n <= {MAX_BLOCK_SCAN_EDGES}, got {n}"
        )));
    }
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    if n == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { d, n });
    }
    let len = 2 * n;
    let blocks = 2 * d;
    let size = len / blocks;
    let cycle = perm::standard_cycle(len);
    let mut preserved = Vec::new();
    let mut label = vec![usize::MAX; len];
    equal_partitions(&mut label, size, 0, &mut |label| {
        if preserves(label, &cycle, blocks) {
            preserved.push(label.to_vec());
        }
    });
    let residue_blocks: Vec<usize> = (0..len).map(|i| i % blocks).collect();
    Ok(preserved.len() == 1 && same_partition(&preserved[0], &residue_blocks))
}

fn equal_partitions(
    label: &mut Vec<usize>,
    size: usize,
    next_block: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    let Some(first) = label.iter().position(|&l| l == usize::MAX) else {
        visit(label);
        return;
    };
    label[first] = next_block;
    choose_rest(label, size - 1, first + 1, next_block, size, visit);
    label[first] = usize::MAX;
}

fn choose_rest(
    label: &mut Vec<usize>,
    remaining: usize,
    from: usize,
    block: usize,
    size: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        equal_partitions(label, size, block + 1, visit);
        return;
    }
    for i in from..label.len() {
        if label[i] == usize::MAX {
            label[i] = block;
            choose_rest(label, remaining - 1, i + 1, block, size, visit);
            label[i] = usize::MAX;
        }
    }
}

fn preserves(label: &[usize], g: &[usize], blocks: usize) -> bool {
    let mut image = vec![usize::MAX; blocks];
    for x in 0..g.len() {
        let (b, gb) = (label[x], label[g[x]]);
        if image[b] == usize::MAX {
            image[b] = gb;
        } else if image[b] != gb {
            return false;
        }
    }
    true
}

fn same_partition(a: &[usize], b: &[usize]) -> bool {
    let mut forward = BTreeMap::new();
    let mut backward = BTreeMap::new();
    a.iter()
        .zip(b)
        .all(|(&x, &y)| *forward.entry(x).or_insert(y) == y && *backward.entry(y).or_insert(x) == x)
}

/// For every `d1 * d2 | n` where `phi` covers the `d1*d2`-edged quotient,
/// reducing in two steps agrees with reducing directly.
pub fn quotient_tower_check(inv: &DartInvolution) -> bool {
    let n = inv.n();
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divisors.iter().all(|&outer| {
        let Ok(upper) = cover::quotient(inv, outer) else {
            return true;
        };
        divisors.iter().filter(|&&d1| outer % d1 == 0).all(|&d1| {
            match (cover::quotient(inv, d1), cover::quotient(&upper, d1)) {
                (Ok(a), Ok(b)) => a.canonical_form() == b.canonical_form(),
                (Err(_), Err(_)) => true,
                _ => false,
            }
        })
    })
}

/// Results of [`cross_check_all`].
#[derive(Debug, Clone, Default)]
pub struct CrossCheckReport {
    pub discrepancies: Vec<Discrepancy>,
    /// Unrooted trees processed per edge count.
    pub trees_per_n: BTreeMap<usize, usize>,
    /// (tree, divisor) pairs examined.
    pub divisor_checks: usize,
    /// Coverings found by the tree criterion.
    pub coverings: usize,
    pub chain_coverings: usize,
    pub star_coverings: usize,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

#[derive(Default)]
struct TreeOutcome {
    discrepancies: Vec<Discrepancy>,
    divisor_checks: usize,
    coverings: usize,
    chain_coverings: usize,
    star_coverings: usize,
}

fn fmt_bools(values: &[bool]) -> String {
    values.iter().map(|b| if *b { "1" } else { "0" }).collect()
}

fn check_tree(inv: &DartInvolution) -> TreeOutcome {
    let mut out = TreeOutcome::default();
    let mut flag = |d: Option<usize>, check: &'static str, methods: Vec<(&'static str, String)>| {
        out.discrepancies.push(Discrepancy {
            tree: inv.clone(),
            d,
            check,
            methods,
        });
    };
    let tree = match inv.to_tree() {
        Ok(t) => t,
        Err(e) => {
            flag(None, "tree", vec![("to_tree", e.to_string())]);
            return out;
        }
    };
    let map = tree.map();
    let n = tree.n();

    if !involution::verify_branch_formula(&tree) {
        flag(None, "branch_formula", vec![("holds", "false".into())]);
    }
    if !involution::has_odd_displacements(inv) {
        flag(None, "odd_displacement", vec![("holds", "false".into())]);
    }
    if !quotient_tower_check(inv) {
        flag(None, "quotient_tower", vec![("holds", "false".into())]);
    }

    for d in (1..=n).filter(|d| n % d == 0) {
        out.divisor_checks += 1;
        let dd = Some(d);

        // (a) branch weights
        let a_chain = invariants::covers_chain_by_branches(&tree, d).expect("d | n");
        let a_star = invariants::covers_star_by_branches(&tree, d).expect("d | n");
        // (b) congruences on phi
        let b_chain = cover::covers_chain(inv, d);
        let b_star = cover::covers_star(inv, d);
        // (c) periodicity quotient, then vertex-degree shape
        let tree_report = cover::covers_tree(inv, d).expect("input is a tree");
        let dessin_report = cover::covers_dessin(inv, d).expect("d > 0");
        let quotient_tree = tree_report.quotient.as_ref().map(|q| q.to_tree());
        let (c_chain, c_star) = match &quotient_tree {
            Some(Ok(q)) => (q.is_chain_shape(), q.is_star_shape()),
            _ => (false, false),
        };
        // (d) semiconjugacy oracle, then closed forms
        let oracle_q = semiconjugacy_quotient(map, d, 0).expect("d | n");
        let d_chain = oracle_q.as_ref().is_some_and(cover::is_chain_closed_form);
        let d_star = oracle_q.as_ref().is_some_and(cover::is_star_closed_form);

        let chains = [a_chain, b_chain, c_chain, d_chain];
        if chains.iter().any(|&x| x != a_chain) {
            flag(
                dd,
                "covers_chain",
                vec![("branches|congruence|shape|oracle", fmt_bools(&chains))],
            );
        }
        let stars = [a_star, b_star, c_star, d_star];
        if stars.iter().any(|&x| x != a_star) {
            flag(
                dd,
                "covers_star",
                vec![("branches|congruence|shape|oracle", fmt_bools(&stars))],
            );
        }

        let covers = [tree_report.covers, dessin_report.covers, oracle_q.is_some()];
        if covers.iter().any(|&x| x != tree_report.covers) {
            flag(
                dd,
                "covers_tree",
                vec![("tree|dessin|oracle", fmt_bools(&covers))],
            );
        }
        if tree_report.quotient != dessin_report.quotient || tree_report.quotient != oracle_q {
            flag(
                dd,
                "quotient",
                vec![
                    (
                        "tree",
                        format!("{:?}", tree_report.quotient.as_ref().map(|q| q.to_string())),
                    ),
                    (
                        "oracle",
                        format!("{:?}", oracle_q.as_ref().map(|q| q.to_string())),
                    ),
                ],
            );
        }

        if let Some(q) = &tree_report.quotient {
            out.coverings += 1;
            let sound =
                perm::is_fixed_point_free_involution(q.as_slice()) && q.n() == d && q.genus() == 0;
            if !sound {
                flag(
                    dd,
                    "quotient_soundness",
                    vec![("genus", q.genus().to_string())],
                );
            }
            if b_chain {
                out.chain_coverings += 1;
                let shape = matches!(&quotient_tree, Some(Ok(t)) if t.is_chain_shape());
                if !(cover::is_chain(q) && shape) {
                    flag(
                        dd,
                        "chain_quotient",
                        vec![("congruence|shape", fmt_bools(&[cover::is_chain(q), shape]))],
                    );
                }
                match invariants::odd_vertex_divisibility_check(&tree, d) {
                    Ok(true) => {}
                    other => flag(
                        dd,
                        "odd_vertex_divisibility",
                        vec![("result", format!("{other:?}"))],
                    ),
                }
            }
            if b_star {
                out.star_coverings += 1;
                let shape = matches!(&quotient_tree, Some(Ok(t)) if t.is_star_shape());
                if !(cover::is_star(q) && shape) {
                    flag(
                        dd,
                        "star_quotient",
                        vec![("congruence|shape", fmt_bools(&[cover::is_star(q), shape]))],
                    );
                }
            }
        }
    }

    let d_c = invariants::d_c(&tree);
    let d_c_branches = max_divisor_where(n, |d| {
        invariants::covers_chain_by_branches(&tree, d).expect("d | n")
    });
    let d_c_congruence = max_divisor_where(n, |d| cover::covers_chain(inv, d));
    if d_c != d_c_branches || d_c != d_c_congruence {
        flag(
            None,
            "d_c",
            vec![
                ("gcd", d_c.to_string()),
                ("branch_scan", d_c_branches.to_string()),
                ("congruence_scan", d_c_congruence.to_string()),
            ],
        );
    }
    let d_s = invariants::d_s(&tree);
    let d_s_branches = max_divisor_where(n, |d| {
        invariants::covers_star_by_branches(&tree, d).expect("d | n")
    });
    let d_s_congruence = max_divisor_where(n, |d| cover::covers_star(inv, d));
    if d_s != d_s_branches || d_s != d_s_congruence {
        flag(
            None,
            "d_s",
            vec![
                ("gcd", d_s.to_string()),
                ("branch_scan", d_s_branches.to_string()),
                ("congruence_scan", d_s_congruence.to_string()),
            ],
        );
    }
    out
}

/// Runs every covering route over all plane trees with at most
/// `max_edges` edges and every divisor of their edge count.
pub fn cross_check_all(max_edges: usize) -> CrossCheckReport {
    let mut report = CrossCheckReport::default();
    for n in 1..=max_edges {
        let trees: Vec<DartInvolution> = unrooted_trees(n).collect();
        let outcomes: Vec<TreeOutcome> = trees.par_iter().map(check_tree).collect();
        report.trees_per_n.insert(n, trees.len());
        for o in outcomes {
            report.discrepancies.extend(o.discrepancies);
            report.divisor_checks += o.divisor_checks;
            report.coverings += o.coverings;
            report.chain_coverings += o.chain_coverings;
            report.star_coverings += o.star_coverings;
        }
    }
    report
}

/// Unicellular dessins without a valency-one vertex that still satisfy the
/// star congruence, one per canonical form, for `n <= max_edges`.
pub fn leafless_star_congruence_scan(max_edges: usize) -> Vec<DartInvolution> {
    let mut found = Vec::new();
    for n in 1..=max_edges {
        let mut hits: Vec<DartInvolution> = all_involutions(n)
            .into_iter()
            .filter(|i| i.is_canonical() && !i.has_leaf() && cover::satisfies_star_congruence(i))
            .collect();
        found.append(&mut hits);
    }
    found
}
