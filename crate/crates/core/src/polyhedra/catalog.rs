//! Catalog of configurations, one block per pattern:
//!
//! ```text
//! pattern three-triangle-fan
//! source three triangles fanned around one vertex
//! action reducible
//! vertices 5
//! edges 0-1 0-2 0-3 0-4 1-2 2-3 3-4
//! legs 8
//! end
//! ```
//!
//! `edges` may repeat; its lists are concatenated. `legs` is optional.
//! Blank lines and `#` comments are ignored.

use super::PolyhedraError;
use std::path::Path;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Any diagram on a graph containing the pattern reduces; the filter
    /// excludes such graphs.
    Reducible,
    Rotatable,
    Conditional,
}

impl FromStr for Action {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "reducible" => Ok(Action::Reducible),
            "rotatable" => Ok(Action::Rotatable),
            "conditional" => Ok(Action::Conditional),
            _ => Err(format!("unknown action `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigPattern {
    pub name: String,
    pub vertices: usize,
    /// Unordered pairs; repeats are parallel edges.
    pub edges: Vec<(u32, u32)>,
    pub legs: Option<usize>,
    pub source: String,
    pub action: Action,
}

impl ConfigPattern {
    /// Checks vertex ranges and connectivity.
    pub fn validate(&self) -> Result<(), String> {
        if self.vertices == 0 {
            return Err("pattern has no vertices".into());
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a.max(b) as usize >= self.vertices) {
            return Err(format!("edge {a}-{b} uses an undeclared vertex"));
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x as usize == v && !seen[y as usize] {
                        seen[y as usize] = true;
                        stack.push(y as usize);
                    }
                }
            }
        }
        if seen.contains(&false) {
            return Err("pattern is disconnected".into());
        }
        Ok(())
    }
}

pub fn parse_config_catalog(text: &str) -> Result<Vec<ConfigPattern>, PolyhedraError> {
    let mut out = Vec::new();
    let mut cur: Option<(usize, ConfigPattern, bool)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| PolyhedraError::Catalog { line, msg };
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let (key, rest) = l.split_once(char::is_whitespace).map_or((l, ""), |(k, r)| (k, r.trim()));
        match (key, &mut cur) {
            ("pattern", None) => {
                if rest.is_empty() {
                    return Err(err("pattern needs a name".into()));
                }
                let p = ConfigPattern {
                    name: rest.to_string(),
                    vertices: 0,
                    edges: Vec::new(),
                    legs: None,
                    source: String::new(),
                    action: Action::Reducible,
                };
                cur = Some((line, p, false));
            }
            ("pattern", Some(_)) => return Err(err("`pattern` inside an open block".into())),
            ("end", Some(_)) => {
                let (start, p, has_action) = cur.take().expect("block is open");
                if !has_action {
                    return Err(PolyhedraError::Catalog { line: start, msg: format!("`{}` has no action", p.name) });
                }
                p.validate().map_err(|m| PolyhedraError::Catalog { line: start, msg: format!("`{}`: {m}", p.name) })?;
                out.push(p);
            }
            (_, None) => return Err(err(format!("`{key}` outside a pattern block"))),
            ("source", Some((_, p, _))) => p.source = rest.to_string(),
            ("action", Some((_, p, has))) => {
                p.action = rest.parse().map_err(err)?;
                *has = true;
            }
            ("vertices", Some((_, p, _))) => p.vertices = rest.parse().map_err(|_| err("bad vertex count".into()))?,
            ("legs", Some((_, p, _))) => p.legs = Some(rest.parse().map_err(|_| err("bad leg count".into()))?),
            ("edges", Some((_, p, _))) => {
                for e in rest.split_whitespace() {
                    let (a, b) = e
                        .split_once('-')
                        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                        .ok_or_else(|| err(format!("bad edge `{e}`")))?;
                    p.edges.push((a, b));
                }
            }
            (k, Some(_)) => return Err(err(format!("unknown key `{k}`"))),
        }
    }
    if let Some((line, p, _)) = cur {
        return Err(PolyhedraError::Catalog { line, msg: format!("`{}` is not closed by `end`", p.name) });
    }
    Ok(out)
}

pub fn load_config_catalog(path: &Path) -> Result<Vec<ConfigPattern>, PolyhedraError> {
    parse_config_catalog(&std::fs::read_to_string(path)?)
}
