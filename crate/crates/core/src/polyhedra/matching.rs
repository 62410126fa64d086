//! Subgraph search (vertex- and edge-injective, not induced) by
//! backtracking with degree and multiplicity pruning.

use super::{Action, ConfigPattern, PlaneQuarticGraph};
use crate::parallel::Exec;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MatchMode {
    /// Abstract multigraph containment.
    #[default]
    Abstract,
    /// Additionally every triangle of the pattern must land on a triangular
    /// face of the plane graph.
    Strict,
}

/// Edge multiplicities of an abstract multigraph; a loop counts once in
/// `mult` and twice in `degree`.
#[derive(Clone, Debug)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u8>,
    degree: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut mult = vec![0u8; n * n];
        let mut degree = vec![0u32; n];
        for &(a, b) in edges {
            let (a, b) = (a as usize, b as usize);
            mult[a * n + b] += 1;
            if a != b {
                mult[b * n + a] += 1;
            }
            degree[a] += 1;
            degree[b] += 1;
        }
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&w| w as usize != v && mult[v * n + w as usize] > 0).collect())
            .collect();
        Multigraph { n, mult, degree, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> u8 {
        self.mult[a * self.n + b]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    /// Distinct neighbors other than `v` itself.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn triangles(&self) -> Vec<[u32; 3]> {
        let mut t = Vec::new();
        for a in 0..self.n {
            for &b in self.neighbors(a).iter().filter(|&&b| b as usize > a) {
                for &c in self.neighbors(b as usize).iter().filter(|&&c| c > b) {
                    if self.multiplicity(a, c as usize) > 0 {
                        t.push([a as u32, b, c]);
                    }
                }
            }
        }
        t
    }
}

impl From<&PlaneQuarticGraph> for Multigraph {
    fn from(g: &PlaneQuarticGraph) -> Self {
        Multigraph::new(g.vertex_count(), &g.edges())
    }
}

impl From<&ConfigPattern> for Multigraph {
    fn from(p: &ConfigPattern) -> Self {
        Multigraph::new(p.vertices, &p.edges)
    }
}

fn triangular_faces(g: &PlaneQuarticGraph) -> HashSet<[u32; 3]> {
    g.faces()
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let mut t = [f[0] as u32 / 4, f[1] as u32 / 4, f[2] as u32 / 4];
            t.sort_unstable();
            t
        })
        .collect()
}

struct Search<'a> {
    host: &'a Multigraph,
    pat: &'a Multigraph,
    order: Vec<usize>,
    image: Vec<u32>,
    used: Vec<bool>,
    accept: &'a dyn Fn(&[u32]) -> bool,
}

impl Search<'_> {
    fn fits(&self, v: usize, t: usize) -> bool {
        if self.used[t] || self.host.degree(t) < self.pat.degree(v) || self.host.multiplicity(t, t) < self.pat.multiplicity(v, v) {
            return false;
        }
        self.pat
            .neighbors(v)
            .iter()
            .filter(|&&u| self.image[u as usize] != u32::MAX)
            .all(|&u| self.host.multiplicity(self.image[u as usize] as usize, t) >= self.pat.multiplicity(u as usize, v))
    }

    fn extend(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return (self.accept)(&self.image);
        }
        let v = self.order[k];
        // Later vertices have a mapped neighbor: candidates are its neighbors.
        let anchor = self.pat.neighbors(v).iter().find(|&&u| self.image[u as usize] != u32::MAX);
        let candidates: Vec<u32> = match anchor {
            Some(&u) => self.host.neighbors(self.image[u as usize] as usize).to_vec(),
            None => (0..self.host.vertex_count() as u32).collect(),
        };
        for t in candidates {
            if self.fits(v, t as usize) {
                self.image[v] = t;
                self.used[t as usize] = true;
                if self.extend(k + 1) {
                    return true;
                }
                self.used[t as usize] = false;
                self.image[v] = u32::MAX;
            }
        }
        false
    }
}

/// Whether `host` contains `pat` as a subgraph, with every full match also
/// passing `accept`.
pub(crate) fn find_subgraph(host: &Multigraph, pat: &Multigraph, accept: &dyn Fn(&[u32]) -> bool) -> bool {
    if pat.vertex_count() > host.vertex_count() {
        return false;
    }
    if pat.vertex_count() == 0 {
        return true;
    }
    // Breadth-first from a vertex of largest degree.
    let start = (0..pat.vertex_count()).max_by_key(|&v| (pat.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut order = vec![start];
    let mut seen = vec![false; pat.vertex_count()];
    seen[start] = true;
    let mut k = 0;
    while k < order.len() {
        for &w in pat.neighbors(order[k]) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                order.push(w as usize);
            }
        }
        k += 1;
    }
    order.extend((0..pat.vertex_count()).filter(|&v| !seen[v]));
    let mut s = Search {
        host,
        pat,
        order,
        image: vec![u32::MAX; pat.vertex_count()],
        used: vec![false; host.vertex_count()],
        accept,
    };
    s.extend(0)
}

pub fn contains_config(g: &PlaneQuarticGraph, p: &ConfigPattern, mode: MatchMode) -> bool {
    let host = Multigraph::from(g);
    contains_in(g, &host, p, mode)
}

fn contains_in(g: &PlaneQuarticGraph, host: &Multigraph, p: &ConfigPattern, mode: MatchMode) -> bool {
    let pat = Multigraph::from(p);
    match mode {
        MatchMode::Abstract => find_subgraph(host, &pat, &|_| true),
        MatchMode::Strict => {
            let faces = triangular_faces(g);
            let tris = pat.triangles();
            find_subgraph(host, &pat, &|img| {
                tris.iter().all(|t| {
                    let mut f = t.map(|v| img[v as usize]);
                    f.sort_unstable();
                    faces.contains(&f)
                })
            })
        }
    }
}

/// Per-graph matches and per-pattern hit counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FilterReport {
    /// Catalog indices of the patterns each graph contains.
    pub matches: Vec<Vec<usize>>,
    /// Number of graphs containing each pattern.
    pub pattern_hits: Vec<usize>,
    /// Graphs containing no `reducible` pattern, in input order.
    pub survivors: Vec<usize>,
}

/// Graphs with no reducible pattern. Patterns of other actions are only
/// counted.
pub fn filter_polyhedra(gs: &[PlaneQuarticGraph], catalog: &[ConfigPattern], mode: MatchMode, exec: Exec) -> FilterReport {
    let matches: Vec<Vec<usize>> = exec.map(gs, |g| {
        let host = Multigraph::from(g);
        (0..catalog.len()).filter(|&i| contains_in(g, &host, &catalog[i], mode)).collect()
    });
    let mut pattern_hits = vec![0; catalog.len()];
    for m in &matches {
        for &i in m {
            pattern_hits[i] += 1;
        }
    }
    let survivors = matches
        .iter()
        .enumerate()
        .filter(|(_, m)| m.iter().all(|&i| catalog[i].action != Action::Reducible))
        .map(|(k, _)| k)
        .collect();
    FilterReport { matches, pattern_hits, survivors }
}
