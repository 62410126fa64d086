//! Plane quartic graphs: ingestion, the basic-polyhedron test, reducible
//! configuration filtering and decoration into link diagrams.

mod catalog;
mod matching;
mod planar_code;

pub use catalog::{load_config_catalog, parse_config_catalog, Action, ConfigPattern};
pub use matching::{contains_config, filter_polyhedra, FilterReport, MatchMode, Multigraph};
pub use planar_code::{parse_graphs, parse_planar_ascii, parse_planar_code, read_planar_code, write_planar_code, HEADER};

use crate::diagram::{signature, Crossing, LinkDiagram, LinkSignature, PdError};
use crate::parallel::Exec;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyhedraError {
    #[error("missing `>>planar_code<<` header")]
    MissingHeader,
    #[error("graph {id}: record is truncated")]
    Truncated { id: usize },
    #[error("graph {id}: vertex {vertex} has degree {degree}, expected 4")]
    Degree { id: usize, vertex: usize, degree: usize },
    #[error("graph {id}: {msg}")]
    Format { id: usize, msg: String },
    #[error("graph {id}: rotation system is not a sphere embedding")]
    NotSpherical { id: usize },
    #[error("graph with {0} vertices is too large to decorate")]
    TooLarge(usize),
    #[error("catalog line {line}: {msg}")]
    Catalog { line: usize, msg: String },
    #[error(transparent)]
    Pd(#[from] PdError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Largest vertex count accepted by [`decorate`].
pub const MAX_DECORATE_VERTICES: usize = 32;

/// A 4-regular plane multigraph. A dart is `4 * v + i`, the `i`-th edge end
/// at `v` in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneQuarticGraph {
    id: usize,
    rotation: Vec<[u32; 4]>,
    mate: Vec<u32>,
}

impl PlaneQuarticGraph {
    /// Builds a graph from clockwise neighbor lists. Parallel edges are
    /// paired so that the embedding is spherical.
    pub fn from_adjacency(id: usize, adj: &[Vec<u32>]) -> Result<Self, PolyhedraError> {
        let n = adj.len();
        let mut rotation = Vec::with_capacity(n);
        for (v, l) in adj.iter().enumerate() {
            let r: [u32; 4] = l
                .as_slice()
                .try_into()
                .map_err(|_| PolyhedraError::Degree { id, vertex: v, degree: l.len() })?;
            rotation.push(r);
        }
        // Group dart positions by unordered vertex pair.
        let mut groups: std::collections::BTreeMap<(u32, u32), (Vec<u32>, Vec<u32>)> = Default::default();
        for (v, r) in rotation.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                let d = 4 * v as u32 + i as u32;
                let v = v as u32;
                let e = groups.entry((v.min(w), v.max(w))).or_default();
                if v <= w {
                    e.0.push(d);
                } else {
                    e.1.push(d);
                }
            }
        }
        let mut choices: Vec<Vec<Vec<(u32, u32)>>> = Vec::new();
        for ((v, w), (a, b)) in &groups {
            let options = if v == w {
                loop_pairings(a)
            } else {
                if a.len() != b.len() {
                    return Err(PolyhedraError::Format {
                        id,
                        msg: format!("vertices {} and {} disagree on their edge count", v + 1, w + 1),
                    });
                }
                bijections(a, b)
            };
            choices.push(options);
        }
        let combos: usize = choices.iter().map(Vec::len).product();
        if combos > 100_000 {
            return Err(PolyhedraError::Format { id, msg: "too many parallel edges".into() });
        }
        let mut mate = vec![0u32; 4 * n];
        for k in 0..combos {
            let mut rest = k;
            for opts in &choices {
                for &(x, y) in &opts[rest % opts.len()] {
                    mate[x as usize] = y;
                    mate[y as usize] = x;
                }
                rest /= opts.len();
            }
            let g = PlaneQuarticGraph { id, rotation: rotation.clone(), mate: mate.clone() };
            if g.euler_characteristic() == 2 {
                return Ok(g);
            }
        }
        Err(PolyhedraError::NotSpherical { id })
    }

    /// Ordinal within the source file.
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn with_id(mut self, id: usize) -> Self {
        self.id = id;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.vertex_count()
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: usize) -> &[u32; 4] {
        &self.rotation[v]
    }

    /// The other end of the edge at dart `d`.
    pub fn mate(&self, d: usize) -> usize {
        self.mate[d] as usize
    }

    /// Edge id of every dart; edges are numbered by their smaller dart.
    pub fn dart_edges(&self) -> Vec<u32> {
        let mut e = vec![u32::MAX; self.mate.len()];
        let mut next = 0;
        for d in 0..self.mate.len() {
            if e[d] == u32::MAX {
                e[d] = next;
                e[self.mate(d)] = next;
                next += 1;
            }
        }
        e
    }

    /// Edges as vertex pairs, in edge id order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        (0..self.mate.len())
            .filter(|&d| d < self.mate(d))
            .map(|d| ((d / 4) as u32, (self.mate(d) / 4) as u32))
            .collect()
    }

    /// Faces as cyclic dart sequences: from a dart, cross its edge, then
    /// turn to the next dart clockwise.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.mate.len()];
        let mut faces = Vec::new();
        for start in 0..self.mate.len() {
            if seen[start] {
                continue;
            }
            let mut f = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                f.push(d);
                let m = self.mate(d);
                d = m - m % 4 + (m + 1) % 4;
            }
            faces.push(f);
        }
        faces
    }

    /// `V − E + F`, with `F` counted on the rotation system.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }

    /// Relabels vertices by `perm` (old → new) and rotates each rotation
    /// list by `shift[v]`; the result is the same plane graph.
    pub fn relabeled(&self, perm: &[usize], shift: &[usize]) -> PlaneQuarticGraph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            adj[perm[v]] = (0..4).map(|i| perm[self.rotation[v][(i + shift[v]) % 4] as usize] as u32).collect();
        }
        PlaneQuarticGraph::from_adjacency(self.id, &adj).expect("relabeling keeps the embedding")
    }
}

fn bijections(a: &[u32], b: &[u32]) -> Vec<Vec<(u32, u32)>> {
    let m = a.len();
    // Reversed orders first: the usual pairing for a plane rotation.
    let mut out: Vec<Vec<(u32, u32)>> = (0..m)
        .map(|k| (0..m).map(|i| (a[i], b[(k + m - i) % m])).collect())
        .collect();
    if m > 2 {
        let mut idx: Vec<usize> = (0..m).collect();
        permutations(&mut idx, 0, &mut |p| {
            let c: Vec<(u32, u32)> = (0..m).map(|i| (a[i], b[p[i]])).collect();
            if !out.contains(&c) {
                out.push(c);
            }
        });
    }
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

fn loop_pairings(a: &[u32]) -> Vec<Vec<(u32, u32)>> {
    if a.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in 1..a.len() {
        let rest: Vec<u32> = a[1..].iter().enumerate().filter(|&(i, _)| i + 1 != j).map(|(_, &x)| x).collect();
        for mut p in loop_pairings(&rest) {
            p.push((a[0], a[j]));
            out.push(p);
        }
    }
    out
}

/// Max-flow value between `s` and `t`, stopping at `cap`.
fn edge_connectivity(g: &PlaneQuarticGraph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.vertex_count();
    // Residual capacity per dart: an undirected unit edge is two unit arcs.
    let mut res = vec![1i32; 4 * n];
    let mut flow = 0;
    while flow < cap {
        let mut via = vec![usize::MAX; n];
        via[s] = 4 * n;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for d in 4 * v..4 * v + 4 {
                let w = g.mate(d) / 4;
                if res[d] > 0 && via[w] == usize::MAX {
                    via[w] = d;
                    queue.push_back(w);
                }
            }
        }
        if via[t] == usize::MAX {
            break;
        }
        let mut v = t;
        while v != s {
            let d = via[v];
            res[d] -= 1;
            res[g.mate(d)] += 1;
            v = d / 4;
        }
        flow += 1;
    }
    flow
}

fn has_cut_vertex(g: &PlaneQuarticGraph) -> bool {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    // Iterative DFS: (vertex, parent dart, next dart offset).
    let mut stack = vec![(0usize, usize::MAX, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    let mut root_children = 0;
    while let Some(top) = stack.last_mut() {
        let (v, pd) = (top.0, top.1);
        if top.2 < 4 {
            let d = 4 * v + top.2;
            top.2 += 1;
            if d == pd {
                continue;
            }
            let w = g.mate(d) / 4;
            if disc[w] == usize::MAX {
                time += 1;
                disc[w] = time;
                low[w] = time;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, g.mate(d), 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return true;
                }
            }
        }
    }
    root_children > 1 || disc.contains(&usize::MAX)
}

/// 4-edge-connected and 2-vertex-connected, without loops.
pub fn check_basic(g: &PlaneQuarticGraph) -> bool {
    let n = g.vertex_count();
    if n < 2 || (0..4 * n).any(|d| g.mate(d) / 4 == d / 4) {
        return false;
    }
    if has_cut_vertex(g) {
        return false;
    }
    (1..n).all(|t| edge_connectivity(g, 0, t, 4) >= 4)
}

/// One decorated diagram and the crossing choice that produced it.
#[derive(Clone, Debug)]
pub struct Decoration {
    /// Bit `v` set: the strand through darts 1 and 3 of vertex `v` is under.
    pub mask: u64,
    pub diagram: LinkDiagram,
    /// The lesser of the signatures of `diagram` and its crossing-flip.
    pub signature: LinkSignature,
}

#[derive(Clone, Copy, Debug)]
pub struct DecorateOptions {
    /// Drop diagrams with a monogon or bigon face.
    pub prune_reducing_faces: bool,
    pub exec: Exec,
}

impl Default for DecorateOptions {
    fn default() -> Self {
        DecorateOptions { prune_reducing_faces: true, exec: Exec::default() }
    }
}

/// The diagram with crossing choice `mask`.
pub fn decoration(g: &PlaneQuarticGraph, mask: u64) -> LinkDiagram {
    let e = g.dart_edges();
    let crossings = (0..g.vertex_count())
        .map(|v| {
            let l = |i: usize| e[4 * v + i] + 1;
            if mask >> v & 1 == 0 {
                Crossing::new(l(0), l(3), l(2), l(1))
            } else {
                Crossing::new(l(3), l(2), l(1), l(0))
            }
        })
        .collect();
    LinkDiagram::new(crossings, 0).expect("every edge has two ends").relabeled()
}

/// All crossing choices, one diagram per link type up to mirror image.
/// Vertex 0 keeps choice 0, since flipping every crossing gives a diagram of
/// the mirror. Diagrams are keyed by the lesser signature of `D` and its
/// flip, so the set of keys does not depend on the vertex numbering.
pub fn decorate(g: &PlaneQuarticGraph) -> Result<Vec<LinkDiagram>, PolyhedraError> {
    Ok(decorate_with(g, &DecorateOptions::default())?.into_iter().map(|d| d.diagram).collect())
}

pub fn decorate_with(g: &PlaneQuarticGraph, opts: &DecorateOptions) -> Result<Vec<Decoration>, PolyhedraError> {
    let n = g.vertex_count();
    if n == 0 || n > MAX_DECORATE_VERTICES {
        return Err(PolyhedraError::TooLarge(n));
    }
    let masks: Vec<u64> = (0..1u64 << (n - 1)).map(|m| m << 1).collect();
    let built = opts.exec.map(&masks, |&m| {
        let d = decoration(g, m);
        if opts.prune_reducing_faces && crate::rewrite::has_reducing_face(&d) {
            return None;
        }
        let signature = signature(&d).min(signature(&d.mirror()));
        Some(Decoration { mask: m, diagram: d, signature })
    });
    let mut seen = HashSet::new();
    Ok(built
        .into_iter()
        .flatten()
        .filter(|d| seen.insert(d.signature.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn octahedron() -> PlaneQuarticGraph {
        parse_planar_ascii("6 bcde,aefc,abfd,acfe,adfb,bedc").unwrap().remove(0)
    }

    #[test]
    fn octahedron_is_basic() {
        let g = octahedron();
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(g.faces().len(), 8);
        assert!(check_basic(&g));
    }

    #[test]
    fn two_edge_cut() {
        // Two octahedra, each with one edge removed, joined across the gap.
        let mut adj: Vec<Vec<u32>> = Vec::new();
        let o = octahedron();
        for k in 0..2u32 {
            for v in 0..6 {
                adj.push(o.neighbors(v).iter().map(|&w| w + 6 * k).collect());
            }
        }
        // Cut edge 0-1 in the first copy and 6-7 in the second; join 0-6, 1-7.
        let fix = |adj: &mut Vec<Vec<u32>>, v: usize, old: u32, new: u32| {
            let i = adj[v].iter().position(|&w| w == old).unwrap();
            adj[v][i] = new;
        };
        fix(&mut adj, 0, 1, 6);
        fix(&mut adj, 6, 7, 0);
        fix(&mut adj, 1, 0, 7);
        fix(&mut adj, 7, 6, 1);
        let g = PlaneQuarticGraph::from_adjacency(0, &adj).unwrap();
        assert_eq!(g.euler_characteristic(), 2);
        assert!(!check_basic(&g));
    }

    #[test]
    fn cut_vertex() {
        // Two copies of the 3-vertex "triangle with doubled edges" sharing
        // vertex 0 would not be quartic; instead glue two double-edged
        // triangles at a vertex: 0 is adjacent to 1,2 (first) and 3,4 (second).
        let adj = vec![vec![1, 2, 3, 4], vec![0, 2, 2, 2], vec![0, 1, 1, 1], vec![0, 4, 4, 4], vec![0, 3, 3, 3]];
        // Vertices 1,2 share a triple edge, which is planar.
        let g = PlaneQuarticGraph::from_adjacency(0, &adj).unwrap();
        assert!(!check_basic(&g));
        assert!(has_cut_vertex(&g));
    }

    #[test]
    fn loops_rejected() {
        let g = PlaneQuarticGraph::from_adjacency(0, &[vec![0, 0, 0, 0]]).unwrap();
        assert_eq!(g.euler_characteristic(), 2);
        assert!(!check_basic(&g));
    }

    #[test]
    fn octahedron_decorations() {
        let g = octahedron();
        let all = decorate_with(&g, &DecorateOptions { prune_reducing_faces: false, exec: Exec::Sequential }).unwrap();
        assert!(all.len() <= 32 && !all.is_empty());
        assert!(all.iter().all(|d| d.diagram.crossing_count() == 6));
        let perm = [3, 0, 5, 1, 4, 2];
        let h = g.relabeled(&perm, &[1, 0, 3, 2, 1, 0]);
        assert_eq!(decorate(&h).unwrap().len(), decorate(&g).unwrap().len());
    }
}
