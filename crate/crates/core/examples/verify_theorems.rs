//! Cross-checks every covering route on all small trees, then scans block
//! systems of the standard cycle.
//!
//!     cargo run --release -p dessin-cover --example verify_theorems [max_edges]

use dessin_cover::oracle::{
    block_system_uniqueness_check, cross_check_all, leafless_star_congruence_scan,
};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let report = cross_check_all(max);
    for (n, count) in &report.trees_per_n {
        println!("n={n}: {count} trees");
    }
    println!(
        "{} (tree, d) pairs, {} coverings ({} chain, {} star)",
        report.divisor_checks, report.coverings, report.chain_coverings, report.star_coverings
    );
    for d in &report.discrepancies {
        println!("DISCREPANCY {d}");
    }
    println!("discrepancies: {}", report.discrepancies.len());

    for n in 1..=6 {
        for d in (1..=n).filter(|d| n % d == 0) {
            let ok = block_system_uniqueness_check(n, d).expect("n <= 6");
            println!("block systems n={n} d={d}: residues unique = {ok}");
        }
    }

    let leafless = leafless_star_congruence_scan(4);
    println!(
        "{} leafless dessins satisfy the star congruence, e.g.:",
        leafless.len()
    );
    for inv in leafless.iter().take(3) {
        println!("    [{inv}] genus {}", inv.genus());
    }
}
