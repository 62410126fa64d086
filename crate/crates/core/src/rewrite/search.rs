//! Breadth-first searches over diagrams, deduplicated by signature.
//!
//! Each level of the frontier is expanded in signature order, so witnesses
//! are deterministic. Expansion of a level may run on the rayon pool; the
//! merge into the visited set is sequential.

use super::moves::{enumerate_moves, has_reducing_face, MoveKind, MoveKinds, MoveSite};
use crate::diagram::{signature, LinkDiagram, LinkSignature};
use crate::parallel::Exec;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Crossings allowed above the starting count.
    pub max_extra_crossings: usize,
    /// Distinct diagrams the search may visit.
    pub max_nodes: usize,
    pub max_depth: Option<usize>,
    pub exec: Exec,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_extra_crossings: 2,
            max_nodes: 1_000_000,
            max_depth: None,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("node limit of {0} diagrams reached")]
    NodeLimit(usize),
}

/// A move sequence from the start diagram to one meeting the search goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub moves: Vec<MoveSite>,
    pub diagram: LinkDiagram,
}

impl Witness {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// One move record per line.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Result of a search together with its counters.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub witness: Option<Witness>,
    /// Diagrams whose moves were enumerated; each signature at most once.
    pub expanded: usize,
    /// Distinct signatures seen.
    pub visited: usize,
    /// Stopped by `max_depth` rather than by exhausting the move graph.
    pub depth_cut: bool,
}

struct Node {
    parent: usize,
    mv: Option<MoveSite>,
}

fn bfs(
    start: &LinkDiagram,
    kinds: MoveKinds,
    max_crossings: usize,
    limits: &SearchLimits,
    goal: impl Fn(&LinkDiagram) -> bool + Sync,
) -> Result<SearchReport, SearchError> {
    let mut nodes = vec![Node { parent: usize::MAX, mv: None }];
    let mut seen: HashMap<LinkSignature, usize> = HashMap::new();
    seen.insert(signature(start), 0);
    let path = |nodes: &[Node], mut i: usize, d: LinkDiagram| {
        let mut moves = Vec::new();
        while let Some(m) = &nodes[i].mv {
            moves.push(m.clone());
            i = nodes[i].parent;
        }
        moves.reverse();
        Witness { moves, diagram: d }
    };
    let report = |nodes: &[Node], expanded, witness, depth_cut| SearchReport {
        witness,
        expanded,
        visited: nodes.len(),
        depth_cut,
    };
    if goal(start) {
        return Ok(report(&nodes, 0, Some(path(&nodes, 0, start.clone())), false));
    }
    let mut frontier = vec![(0usize, start.clone())];
    let mut expanded = 0;
    let mut depth = 0;
    while !frontier.is_empty() {
        if limits.max_depth.is_some_and(|m| depth >= m) {
            return Ok(report(&nodes, expanded, None, true));
        }
        let children = limits.exec.map(&frontier, |(_, d)| {
            let kinds = budget_kinds(kinds, d.crossing_count(), max_crossings);
            enumerate_moves(d, kinds)
                .into_iter()
                .filter(|(_, c)| c.crossing_count() <= max_crossings)
                .map(|(m, c)| (signature(&c), m, c))
                .collect::<Vec<_>>()
        });
        expanded += frontier.len();
        let mut next = Vec::new();
        for ((parent, _), kids) in frontier.iter().zip(children) {
            for (sig, m, c) in kids {
                if seen.contains_key(&sig) {
                    continue;
                }
                if nodes.len() >= limits.max_nodes {
                    return Err(SearchError::NodeLimit(limits.max_nodes));
                }
                let id = nodes.len();
                nodes.push(Node {
                    parent: *parent,
                    mv: Some(m),
                });
                if goal(&c) {
                    return Ok(report(&nodes, expanded, Some(path(&nodes, id, c)), false));
                }
                seen.insert(sig.clone(), id);
                next.push((sig, id, c));
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = next.into_iter().map(|(_, id, c)| (id, c)).collect();
        depth += 1;
    }
    Ok(report(&nodes, expanded, None, false))
}

/// Drops kinds whose fixed crossing gain would exceed the budget.
fn budget_kinds(kinds: MoveKinds, n: usize, max_crossings: usize) -> MoveKinds {
    let room = max_crossings.saturating_sub(n);
    let keep: Vec<MoveKind> = MoveKind::ALL
        .into_iter()
        .filter(|&k| kinds.contains(k))
        .filter(|&k| match k {
            MoveKind::R1Add => room >= 1,
            MoveKind::R2Add => room >= 2,
            MoveKind::ThreeAdd => room >= 3,
            _ => true,
        })
        .collect();
    MoveKinds::of(&keep)
}

/// R3 moves only, looking for a diagram with a monogon or bigon face.
pub fn r3_bigon_search(d: &LinkDiagram, limits: &SearchLimits) -> Result<SearchReport, SearchError> {
    bfs(d, MoveKinds::R3_ONLY, d.crossing_count(), limits, has_reducing_face)
}

/// All Reidemeister moves within `max_extra_crossings`, looking for a
/// diagram with the starting crossing count and a reducing face.
pub fn full_reduction_search(d: &LinkDiagram, limits: &SearchLimits) -> Result<SearchReport, SearchError> {
    let c = d.crossing_count();
    bfs(d, MoveKinds::REIDEMEISTER, c + limits.max_extra_crossings, limits, |e| {
        e.crossing_count() == c && has_reducing_face(e)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// Reduced to a diagram without crossings with this many components.
    TrivialLink(u32),
    /// No reduction found; the smallest diagram reached.
    Stuck(LinkDiagram),
    LimitHit,
}

/// Repeatedly searches, with Reidemeister moves and 3-moves, for any
/// diagram with fewer crossings than the current one and continues from
/// it. `max_nodes` applies to each search.
pub fn three_move_reduce(d: &LinkDiagram, limits: &SearchLimits) -> ReduceOutcome {
    three_move_reduce_traced(d, limits).0
}

/// As [`three_move_reduce`], also returning the concatenated move sequence.
pub fn three_move_reduce_traced(d: &LinkDiagram, limits: &SearchLimits) -> (ReduceOutcome, Vec<MoveSite>) {
    let mut cur = d.unoriented();
    let mut trace = Vec::new();
    loop {
        let c = cur.crossing_count();
        if c == 0 {
            return (ReduceOutcome::TrivialLink(cur.unknotted_extras()), trace);
        }
        let found = bfs(&cur, MoveKinds::ALL, c + limits.max_extra_crossings, limits, |e| {
            e.crossing_count() < c
        });
        match found {
            Err(_) => return (ReduceOutcome::LimitHit, trace),
            Ok(SearchReport {
                witness: Some(w), ..
            }) => {
                trace.extend(w.moves);
                cur = w.diagram;
            }
            Ok(r) if r.depth_cut => return (ReduceOutcome::LimitHit, trace),
            Ok(_) => return (ReduceOutcome::Stuck(cur), trace),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, parse_braid};
    use crate::diagram::parse_pd;

    fn closure(s: &str) -> LinkDiagram {
        braid_closure(&parse_braid(s).unwrap()).unoriented()
    }

    #[test]
    fn bigon_at_depth_zero() {
        let r = r3_bigon_search(&closure("n=2 1 1 1"), &SearchLimits::default()).unwrap();
        assert!(r.witness.unwrap().is_empty());
        let r = full_reduction_search(&closure("n=2 1 1 1"), &SearchLimits::default()).unwrap();
        assert!(r.witness.unwrap().is_empty());
    }

    #[test]
    fn trefoil_reduces_to_two_unknots() {
        let t = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(three_move_reduce(&t, &SearchLimits::default()), ReduceOutcome::TrivialLink(2));
        assert_eq!(
            three_move_reduce(&closure("n=2 1 1 1"), &SearchLimits::default()),
            ReduceOutcome::TrivialLink(2)
        );
    }

    #[test]
    fn node_limit_is_an_error() {
        // The alternating Borromean diagram has no reducing face anywhere in
        // its search space, so the search must visit every node.
        let d = closure("n=3 1 -2 1 -2 1 -2");
        let full = full_reduction_search(&d, &SearchLimits::default()).unwrap();
        assert!(full.witness.is_none() && full.visited > 1);
        let tight = SearchLimits {
            max_nodes: full.visited - 1,
            ..SearchLimits::default()
        };
        assert_eq!(full_reduction_search(&d, &tight).unwrap_err(), SearchError::NodeLimit(full.visited - 1));
        let exact = SearchLimits {
            max_nodes: full.visited,
            ..SearchLimits::default()
        };
        assert_eq!(full_reduction_search(&d, &exact).unwrap().visited, full.visited);
    }
}
