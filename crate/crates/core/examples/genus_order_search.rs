//! Finds trees whose curve has genus `g` and a divisor of order `m`, for
//! every `m` between `g + 1` and `2g + 1`.
//!
//!     cargo run -p dessin-cover --example genus_order_search [max_genus]

use dessin_cover::enumerate::search_genus_order;

fn main() {
    let max_genus: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    for g in 1..=max_genus {
        for m in g + 1..=2 * g + 1 {
            match search_genus_order(g, m, 14) {
                Some(w) => println!(
                    "genus {g}, order {m}: {} (n={}, d_c={})",
                    w.involution.to_walk().expect("witness is a tree"),
                    w.data.n,
                    w.data.d_c
                ),
                None => println!("genus {g}, order {m}: none with at most 14 edges"),
            }
        }
    }
}
