//! Reads one tree in each text format and prints it back in the others.
//!
//!     cargo run -p dessin-cover --example parse_formats

use dessin_cover::format::{emit, parse, Format};

fn main() -> dessin_cover::Result<()> {
    let inputs = [
        (Format::Walk, "()()()((()))"),
        (Format::Rotation, "0: 1 2 3\n1: 0\n2: 0\n3: 0\n"),
        (Format::Involution, "5 4 3 2 1 0"),
        (Format::Involution, "2 3 0 1"),
    ];
    for (format, text) in inputs {
        let parsed = parse(text, format)?;
        let map = parsed.map();
        println!("{format} input {:?}", text.trim());
        println!(
            "  edges={} vertices={} genus={}",
            map.n(),
            map.vertex_count(),
            map.genus()
        );
        println!("  involution: {}", emit(map, Format::Involution)?);
        match parsed.as_tree() {
            Some(_) => {
                println!("  walk: {}", emit(map, Format::Walk)?);
                println!(
                    "  rotation: {}",
                    emit(map, Format::Rotation)?.trim_end().replace('\n', "; ")
                );
            }
            None => println!("  not a tree: no walk or rotation form"),
        }
    }
    Ok(())
}
