//! Branch weights and adjacent branch pairs of the X-tree with arms 1, 1, 1, 3.
//!
//!     cargo run -p dessin-cover --example branch_weights

use dessin_cover::format::parse_walk;

fn main() -> dessin_cover::Result<()> {
    let tree = parse_walk("()()()((()))")?;
    let weights = tree.branch_weights();
    for (v, darts) in tree.map().vertices().iter().enumerate() {
        let w: Vec<usize> = darts.iter().map(|&x| weights[x]).collect();
        println!("vertex {v}: valency {} branch weights {w:?}", darts.len());
    }
    for p in tree.adjacent_branch_pairs() {
        println!(
            "pair at {}: |a|={} |b|={} sum={} diff={}",
            p.vertex,
            p.weight_a,
            p.weight_b,
            p.sum(),
            p.abs_difference()
        );
    }
    println!("odd-valency vertices: {}", tree.odd_vertex_count());
    Ok(())
}
