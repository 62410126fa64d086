//! Test-side oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;
use threemove::burnside::ExponentThreeElement;
use threemove::groups::{coset_enumeration, CosetTable, EnumerationLimits, Presentation};
use threemove::rewrite::{enumerate_moves, MoveKinds};
use threemove::LinkDiagram;
use threemove::polyhedra::{load_config_catalog, parse_config_catalog, parse_graphs, ConfigPattern, MatchMode, PlaneQuarticGraph};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn fixture(cells: usize) -> Vec<PlaneQuarticGraph> {
    parse_graphs(&std::fs::read(data(&format!("plantri/c{cells}.pc"))).unwrap()).unwrap()
}

/// The 19 graphs on 13 vertices and the first 31 on 14.
pub fn corpus() -> Vec<PlaneQuarticGraph> {
    let mut gs = fixture(15);
    gs.extend(fixture(16).into_iter().take(31));
    gs
}

pub fn catalog() -> Vec<ConfigPattern> {
    load_config_catalog(&data("catalog.txt")).unwrap()
}

/// Catalog patterns plus small shapes that exercise multiplicities and
/// non-triangular containment.
pub fn patterns() -> Vec<ConfigPattern> {
    let extra = "\
pattern triangle
action reducible
vertices 3
edges 0-1 1-2 2-0
end
pattern square
action reducible
vertices 4
edges 0-1 1-2 2-3 3-0
end
pattern diamond
action reducible
vertices 4
edges 0-1 1-2 2-0 1-3 2-3
end
pattern k4
action reducible
vertices 4
edges 0-1 0-2 0-3 1-2 1-3 2-3
end
pattern double-edge
action reducible
vertices 2
edges 0-1 0-1
end
pattern bowtie
action reducible
vertices 5
edges 0-1 1-2 2-0 0-3 3-4 4-0
end
pattern star
action conditional
vertices 5
edges 0-1 0-2 0-3 0-4
end
";
    let mut ps = catalog();
    ps.extend(parse_config_catalog(extra).unwrap());
    ps
}

pub fn multiplicities(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<u8>> {
    let mut m = vec![vec![0u8; n]; n];
    for &(a, b) in edges {
        m[a as usize][b as usize] += 1;
        if a != b {
            m[b as usize][a as usize] += 1;
        }
    }
    m
}

/// Vertex sets of triangular faces, read off the rotation system.
pub fn triangle_faces(g: &PlaneQuarticGraph) -> HashSet<[usize; 3]> {
    g.faces()
        .into_iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let mut t = [f[0] / 4, f[1] / 4, f[2] / 4];
            t.sort_unstable();
            t
        })
        .collect()
}

pub fn pattern_triangles(n: usize, m: &[Vec<u8>]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if m[a][b] > 0 && m[b][c] > 0 && m[a][c] > 0 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Tries every injective vertex map.
pub fn brute_force_contains(g: &PlaneQuarticGraph, p: &ConfigPattern, mode: MatchMode) -> bool {
    let (n, k) = (g.vertex_count(), p.vertices);
    let host = multiplicities(n, &g.edges());
    let pat = multiplicities(k, &p.edges);
    let faces = triangle_faces(g);
    let tris = pattern_triangles(k, &pat);
    let mut img = vec![0usize; k];
    fn rec(
        i: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if i == img.len() {
            return check(img);
        }
        for t in 0..used.len() {
            if !used[t] {
                used[t] = true;
                img[i] = t;
                let hit = rec(i + 1, img, used, check);
                used[t] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let check = |img: &[usize]| {
        let edges_fit = (0..k).all(|a| (0..k).all(|b| host[img[a]][img[b]] >= pat[a][b]));
        edges_fit
            && (mode == MatchMode::Abstract
                || tris.iter().all(|t| {
                    let mut f = t.map(|v| img[v]);
                    f.sort_unstable();
                    faces.contains(&f)
                }))
    };
    rec(0, &mut img, &mut vec![false; n], &check)
}

pub fn cube_presentation(r: usize, max_len: usize) -> Presentation {
    let letters: Vec<i32> = (1..=r as i32).flat_map(|g| [g, -g]).collect();
    let mut level: Vec<Vec<i32>> = vec![vec![]];
    let mut rels = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        rels.extend(next.iter().map(|w| w.repeat(3)));
        level = next;
    }
    Presentation::new(r, rels).unwrap()
}

pub fn oracle(r: usize) -> CosetTable {
    coset_enumeration(&cube_presentation(r, 3), &[], &EnumerationLimits::default()).unwrap()
}

pub fn all_elements(r: usize) -> Vec<ExponentThreeElement> {
    let id = ExponentThreeElement::identity(r);
    let n = id.deg1.len() + id.deg2.len() + id.deg3.len();
    (0..3usize.pow(n as u32))
        .map(|mut k| {
            let mut digits = vec![0u8; n];
            for d in &mut digits {
                *d = (k % 3) as u8;
                k /= 3;
            }
            let (a, rest) = digits.split_at(r);
            let (b, c) = rest.split_at(id.deg2.len());
            ExponentThreeElement {
                deg1: a.to_vec(),
                deg2: b.to_vec(),
                deg3: c.to_vec(),
            }
        })
        .collect()
}

/// Diagrams are kept at or below this many crossings along a walk.
pub const MAX_WALK_CROSSINGS: usize = 14;

/// Applies one move per choice, skipping moves that would grow the diagram
/// past the bound.
pub fn walk(d: &LinkDiagram, kinds: MoveKinds, choices: &[usize]) -> (LinkDiagram, Vec<String>) {
    let mut cur = d.clone();
    let mut trace = Vec::new();
    for &c in choices {
        let moves: Vec<_> = enumerate_moves(&cur, kinds)
            .into_iter()
            .filter(|(_, e)| e.crossing_count() <= MAX_WALK_CROSSINGS)
            .collect();
        if moves.is_empty() {
            break;
        }
        let (site, next) = &moves[c % moves.len()];
        trace.push(site.to_string());
        cur = next.clone();
    }
    (cur, trace)
}
