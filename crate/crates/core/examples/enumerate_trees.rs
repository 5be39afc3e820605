//! Counts rooted and unrooted plane trees and tabulates divisor orders.
//!
//!     cargo run -p dessin-cover --example enumerate_trees [max_edges]

use std::collections::BTreeMap;

use dessin_cover::enumerate::{rooted_trees, unrooted_trees};
use dessin_cover::invariants::curve_data;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    for n in 1..=max {
        let rooted = rooted_trees(n).count();
        let mut by_genus_order: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut unrooted = 0;
        for inv in unrooted_trees(n) {
            let c = curve_data(&inv.to_tree().expect("matchings are trees"));
            *by_genus_order
                .entry((c.genus, c.divisor_order))
                .or_default() += 1;
            unrooted += 1;
        }
        println!("n={n}: rooted={rooted} unrooted={unrooted}");
        for ((g, m), count) in by_genus_order {
            println!("    genus {g}, order {m}: {count}");
        }
    }
}
