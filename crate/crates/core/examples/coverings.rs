//! Covering tests and quotients on the X-tree and the 6-star.
//!
//!     cargo run -p dessin-cover --example coverings

use dessin_cover::cover::{covers_chain, covers_dessin, covers_star, is_chain, is_star};
use dessin_cover::format::parse_walk;
use dessin_cover::to_involution;

fn main() -> dessin_cover::Result<()> {
    for (name, walk) in [
        ("X-tree (1,1,1,3)", "()()()((()))"),
        ("6-star", "()()()()()()"),
    ] {
        let phi = to_involution(parse_walk(walk)?.map())?;
        println!("{name}: phi = [{phi}]");
        for d in 1..=phi.n() {
            let report = covers_dessin(&phi, d)?;
            match &report.quotient {
                Some(q) => println!(
                    "  d={d}: covers [{q}] chain={} star={} (quotient is_chain={} is_star={})",
                    covers_chain(&phi, d),
                    covers_star(&phi, d),
                    is_chain(q),
                    is_star(q)
                ),
                None => println!(
                    "  d={d}: no covering ({})",
                    report.reason.expect("failure has a reason")
                ),
            }
        }
    }
    Ok(())
}
