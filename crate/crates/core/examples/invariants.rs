//! `d_c`, `d_s` and curve data for the X- and Y-trees, chains and stars.
//!
//!     cargo run -p dessin-cover --example invariants

use dessin_cover::format::parse_walk;
use dessin_cover::invariants::{bare_sum_gcd, curve_data};

fn main() -> dessin_cover::Result<()> {
    let trees = [
        ("X-tree (1,1,1,3)", "()()()((()))".to_string()),
        ("Y-tree (1,1,3)", "()()((()))".to_string()),
        ("Y-tree (1,2,2)", "()(())(())".to_string()),
        ("three 2-arms", "(())(())(())".to_string()),
        ("8-chain", format!("{}{}", "(".repeat(8), ")".repeat(8))),
        ("5-star", "()".repeat(5)),
    ];
    for (name, walk) in &trees {
        let tree = parse_walk(walk)?;
        let c = curve_data(&tree);
        println!(
            "{name:>18}: n={} o={} genus={} d_c={} d_s={} divisor order={} (bare sum gcd {})",
            c.n,
            c.o,
            c.genus,
            c.d_c,
            c.d_s,
            c.divisor_order,
            bare_sum_gcd(&tree)
        );
    }
    Ok(())
}
