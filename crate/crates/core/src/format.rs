//! Text formats for trees and unicellular dessins.
//!
//! * `walk`: a balanced word over `(` and `)`; position `i` is dart `i` of
//!   the boundary walk and matched positions are the two darts of an edge.
//! * `rotation`: one line per vertex, `v: u1 u2 … uk`, neighbours listed
//!   counterclockwise. A `;` may stand in for a line break.
//! * `involution`: the images `phi(0) … phi(2n-1)` on one line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::involution::{to_involution, DartInvolution};
use crate::map::CombinatorialMap;
use crate::tree::PlaneTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Walk,
    Rotation,
    Involution,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "walk" => Ok(Format::Walk),
            "rotation" => Ok(Format::Rotation),
            "involution" => Ok(Format::Involution),
            other => Err(Error::Parse(format!("unknown format '{other}'"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Walk => "walk",
            Format::Rotation => "rotation",
            Format::Involution => "involution",
        })
    }
}

impl Format {
    /// Guesses the format of `text` from its alphabet.
    pub fn detect(text: &str) -> Format {
        let t = text.trim();
        if t.contains(':') {
            Format::Rotation
        } else if !t.is_empty() && t.chars().all(|c| c == '(' || c == ')' || c.is_whitespace()) {
            Format::Walk
        } else {
            Format::Involution
        }
    }
}

/// A parsed input: trees stay trees, other unicellular dessins stay maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Tree(PlaneTree),
    Map(CombinatorialMap),
}

impl Parsed {
    pub fn map(&self) -> &CombinatorialMap {
        match self {
            Parsed::Tree(t) => t.map(),
            Parsed::Map(m) => m,
        }
    }

    pub fn as_tree(&self) -> Option<&PlaneTree> {
        match self {
            Parsed::Tree(t) => Some(t),
            Parsed::Map(_) => None,
        }
    }

    pub fn into_tree(self) -> Result<PlaneTree> {
        match self {
            Parsed::Tree(t) => Ok(t),
            Parsed::Map(m) => Err(Error::NotATree(m.genus())),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Parsed> {
    match format {
        Format::Walk => parse_walk(text).map(Parsed::Tree),
        Format::Rotation => parse_rotation(text).map(Parsed::Tree),
        Format::Involution => {
            let inv = parse_involution(text)?;
            let map = inv.to_map();
            if inv.is_tree() {
                Ok(Parsed::Tree(PlaneTree::new(map)?))
            } else {
                Ok(Parsed::Map(map))
            }
        }
    }
}

pub fn parse_walk(text: &str) -> Result<PlaneTree> {
    let word: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if word.is_empty() {
        return Err(Error::Parse("empty walk".into()));
    }
    if !word.len().is_multiple_of(2) {
        return Err(Error::Parse(format!("walk has odd length {}", word.len())));
    }
    let mut phi = vec![0; word.len()];
    let mut open = Vec::new();
    for (i, &c) in word.iter().enumerate() {
        match c {
            '(' => open.push(i),
            ')' => {
                let j = open
                    .pop()
                    .ok_or_else(|| Error::Parse(format!("unbalanced ')' at position {i}")))?;
                phi[i] = j;
                phi[j] = i;
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character '{other}' in walk"
                )))
            }
        }
    }
    if !open.is_empty() {
        return Err(Error::Parse(format!("{} unclosed '('", open.len())));
    }
    let inv = DartInvolution::new(phi)?;
    PlaneTree::new(inv.to_map())
}

pub fn parse_rotation(text: &str) -> Result<PlaneTree> {
    let mut rotations: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut seen_vertices = BTreeMap::new();
    for line in text.split(['\n', ';']) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("rotation line without ':': '{line}'")))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id '{}'", head.trim())))?;
        let neighbours = tail
            .split_whitespace()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad neighbour id '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if seen_vertices.insert(v, rotations.len()).is_some() {
            return Err(Error::Parse(format!("vertex {v} listed twice")));
        }
        rotations.push((v, neighbours));
    }
    if rotations.is_empty() {
        return Err(Error::Parse("empty rotation system".into()));
    }

    // darts are numbered in listing order
    let mut dart_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut rho0 = Vec::new();
    for (v, neighbours) in &rotations {
        let first = rho0.len();
        let k = neighbours.len();
        for (j, &u) in neighbours.iter().enumerate() {
            if u == *v {
                return Err(Error::Parse(format!("self-loop at vertex {v}")));
            }
            if !seen_vertices.contains_key(&u) {
                return Err(Error::Parse(format!(
                    "vertex {u} is referenced but not listed"
                )));
            }
            if dart_of.insert((*v, u), first + j).is_some() {
                return Err(Error::Parse(format!("edge {v}-{u} listed twice at {v}")));
            }
            rho0.push(first + (j + 1) % k);
        }
    }
    let mut rho1 = vec![0; rho0.len()];
    for (&(v, u), &x) in &dart_of {
        let y = dart_of
            .get(&(u, v))
            .ok_or_else(|| Error::Parse(format!("edge {v}-{u} missing from vertex {u}")))?;
        rho1[x] = *y;
    }
    if rho0.is_empty() {
        return Err(Error::Parse("rotation system has no edges".into()));
    }
    let edges = rho0.len() / 2;
    if rotations.len() != edges + 1 {
        return Err(Error::Parse(format!(
            "{} vertices and {} edges do not form a tree",
            rotations.len(),
            edges
        )));
    }
    let map = CombinatorialMap::new(rho0, rho1).map_err(|e| match e {
        Error::Disconnected => Error::Parse("rotation system is not connected".into()),
        other => other,
    })?;
    PlaneTree::new(map)
}

pub fn parse_involution(text: &str) -> Result<DartInvolution> {
    let phi = text
        .split_whitespace()
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad dart image '{s}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    if phi.len() % 2 != 0 {
        return Err(Error::Parse(format!(
            "involution needs an even number of images, got {}",
            phi.len()
        )));
    }
    DartInvolution::new(phi)
}

/// Boundary word of a tree, read from dart 0.
pub fn to_walk(tree: &PlaneTree) -> String {
    to_involution(tree.map())
        .expect("trees are unicellular")
        .to_walk()
        .expect("tree involutions are non-crossing")
}

/// Rotation lines, vertex ids in first-dart order, each rotation read from
/// the vertex's smallest dart.
pub fn to_rotation(map: &CombinatorialMap) -> String {
    let vertex_of = map.vertex_of_dart();
    let rho1 = map.rho1();
    let mut out = String::new();
    for (v, cycle) in map.vertices().iter().enumerate() {
        out.push_str(&v.to_string());
        out.push(':');
        for &x in cycle {
            out.push(' ');
            out.push_str(&vertex_of[rho1[x]].to_string());
        }
        out.push('\n');
    }
    out
}

/// Renders a unicellular map in `format`; walk needs genus 0.
pub fn emit(map: &CombinatorialMap, format: Format) -> Result<String> {
    match format {
        Format::Walk => {
            let inv = to_involution(map)?;
            inv.to_walk().ok_or(Error::NotATree(map.genus()))
        }
        Format::Rotation => {
            if map.genus() != 0 || !map.is_unicellular() {
                return Err(Error::NotATree(map.genus()));
            }
            Ok(to_rotation(map))
        }
        Format::Involution => Ok(to_involution(map)?.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walk_examples() {
        let edge = parse_walk("()").unwrap();
        assert_eq!(edge.n(), 1);
        assert_eq!(edge.vertex_count(), 2);

        let chain = parse_walk("((()))").unwrap();
        assert_eq!(chain.n(), 3);
        let mut profile = chain.degree_profile();
        profile.sort();
        assert_eq!(profile, vec![1, 1, 2, 2]);
        assert!(chain.is_chain_shape());

        let star = parse_walk("()()()").unwrap();
        let mut profile = star.degree_profile();
        profile.sort();
        assert_eq!(profile, vec![1, 1, 1, 3]);
    }

    #[test]
    fn walk_errors() {
        assert!(matches!(parse_walk(""), Err(Error::Parse(_))));
        assert!(matches!(parse_walk("(()"), Err(Error::Parse(_))));
        assert!(matches!(parse_walk(")("), Err(Error::Parse(_))));
        assert!(matches!(parse_walk("(("), Err(Error::Parse(_))));
        assert!(matches!(parse_walk("(x)"), Err(Error::Parse(_))));
    }

    #[test]
    fn rotation_star_and_chain() {
        let star = parse_rotation("0: 1 2 3\n1: 0\n2: 0\n3: 0\n").unwrap();
        assert_eq!(star.n(), 3);
        assert!(star.is_star_shape());
        let chain = parse_rotation("0: 1; 1: 0 2; 2: 1 3; 3: 2").unwrap();
        assert!(chain.is_chain_shape());
    }

    #[test]
    fn rotation_errors() {
        // cycle, not a tree
        assert!(parse_rotation("0: 1 2\n1: 2 0\n2: 0 1").is_err());
        // inconsistent edge
        assert!(parse_rotation("0: 1\n1:").is_err());
        // disconnected: 2 edges, 4 vertices
        assert!(parse_rotation("0: 1\n1: 0\n2: 3\n3: 2").is_err());
        assert!(parse_rotation("0: 0").is_err());
        assert!(parse_rotation("0: 5\n5: 0\n0: 5").is_err());
        assert!(parse_rotation("a: 1").is_err());
        assert!(parse_rotation("").is_err());
    }

    #[test]
    fn involution_errors() {
        assert!(parse_involution("1 0 2").is_err());
        assert!(parse_involution("0 1").is_err());
        assert!(parse_involution("1 x").is_err());
    }

    #[test]
    fn involution_genus_one_is_a_map() {
        match parse("2 3 0 1", Format::Involution).unwrap() {
            Parsed::Map(m) => assert_eq!(m.genus(), 1),
            Parsed::Tree(_) => panic!("torus dessin parsed as tree"),
        }
        assert!(matches!(
            parse("5 4 3 2 1 0", Format::Involution).unwrap(),
            Parsed::Tree(_)
        ));
    }

    #[test]
    fn emit_round_trips() {
        let tree = parse_walk("()()()((()))").unwrap();
        assert_eq!(to_walk(&tree), "()()()((()))");
        let rot = to_rotation(tree.map());
        let back = parse_rotation(&rot).unwrap();
        let a = to_involution(tree.map()).unwrap().canonical_form();
        let b = to_involution(back.map()).unwrap().canonical_form();
        assert_eq!(a, b);
        assert_eq!(
            emit(tree.map(), Format::Involution).unwrap(),
            to_involution(tree.map()).unwrap().to_string()
        );
    }

    #[test]
    fn detect_formats() {
        assert_eq!(Format::detect("(())"), Format::Walk);
        assert_eq!(Format::detect("0: 1\n1: 0"), Format::Rotation);
        assert_eq!(Format::detect("1 0"), Format::Involution);
    }
}
