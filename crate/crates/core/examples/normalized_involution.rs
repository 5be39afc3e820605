//! Normalized involutions: boundary labelling, extension to the integers,
//! canonical forms, genus, and the branch-weight displacement identity.
//!
//!     cargo run -p dessin-cover --example normalized_involution

use dessin_cover::format::parse_walk;
use dessin_cover::involution::verify_branch_formula;
use dessin_cover::{to_involution, DartInvolution};

fn main() -> dessin_cover::Result<()> {
    let chain = parse_walk("((()))")?;
    let phi = to_involution(chain.map())?;
    println!("3-chain phi = [{phi}]");
    for j in [-7, -1, 0, 5, 6, 11] {
        println!("  phi({j}) = {}", phi.phi_at(j));
    }
    for k in 0..6 {
        println!("  rotated by {k}: [{}]", phi.rotate(k));
    }
    println!("  canonical form: [{}]", phi.canonical_form());
    println!(
        "  phi(i) - i = 2|a_i| - 1 (mod 2n): {}",
        verify_branch_formula(&chain)
    );

    let torus = DartInvolution::new(vec![2, 3, 0, 1])?;
    println!(
        "[{torus}]: genus {} with {} vertex, non-crossing: {}",
        torus.genus(),
        torus.vertex_count(),
        torus.is_non_crossing()
    );
    Ok(())
}
