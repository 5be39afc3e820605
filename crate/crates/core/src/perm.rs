//! Raw permutation helpers on `0..len`.
//!
//! This is the only code shared between the arithmetic predicates and the
//! brute-force oracles.

/// `(p ∘ q)(x) = p(q(x))`; permutations act on the left.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    debug_assert_eq!(p.len(), q.len());
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn is_fixed_point_free_involution(p: &[usize]) -> bool {
    p.iter()
        .enumerate()
        .all(|(i, &x)| x < p.len() && x != i && p[x] == i)
}

/// Cycles of `p`, each starting at its smallest element, ordered by that element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
        }
    }
    count
}

/// Whether the group generated by `gens` acts transitively on `0..len`.
pub fn is_transitive(len: usize, gens: &[&[usize]]) -> bool {
    if len == 0 {
        return true;
    }
    let mut seen = vec![false; len];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x];
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == len
}

/// The standard cycle `(0 1 … len-1)`.
pub fn standard_cycle(len: usize) -> Vec<usize> {
    (0..len).map(|i| (i + 1) % len).collect()
}
