//! `key = value` run configuration. Relative paths are resolved against the
//! directory of the config file.

use super::PipelineError;
use crate::polyhedra::MatchMode;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConfigFilterOrder {
    /// Filter graphs before decorating them.
    #[default]
    Early,
    /// Filter only graphs that still carry diagrams after the Seifert stage.
    Late,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    /// planar_code or plantri ASCII files, processed in order.
    pub inputs: Vec<PathBuf>,
    pub catalog: Option<PathBuf>,
    pub output: PathBuf,
    pub match_mode: MatchMode,
    pub config_filter: ConfigFilterOrder,
    pub prune_reducing_faces: bool,
    pub r3_max_nodes: usize,
    pub full_max_nodes: usize,
    pub max_extra_crossings: usize,
    /// Diagrams with fewer Seifert circles in some orientation are excluded.
    pub min_seifert: usize,
    /// Coset table cache file for `C_5`.
    pub cache: Option<PathBuf>,
    pub parallel: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            inputs: Vec::new(),
            catalog: None,
            output: PathBuf::from("threemove-run"),
            match_mode: MatchMode::Abstract,
            config_filter: ConfigFilterOrder::Early,
            prune_reducing_faces: true,
            r3_max_nodes: 200_000,
            full_max_nodes: 200_000,
            max_extra_crossings: 2,
            min_seifert: 5,
            cache: None,
            parallel: true,
        }
    }
}

fn parse_bool(v: &str) -> Option<bool> {
    match v {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

impl PipelineConfig {
    pub fn parse(text: &str, base: &Path) -> Result<Self, PipelineError> {
        let mut c = PipelineConfig::default();
        let path = |v: &str| -> PathBuf {
            let p = PathBuf::from(v);
            if p.is_absolute() {
                p
            } else {
                base.join(p)
            }
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: String| PipelineError::Config { line, msg };
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            let (k, v) = l.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
            let (k, v) = (k.trim(), v.trim());
            let num = || v.parse::<usize>().map_err(|_| err(format!("`{k}` needs a number")));
            let flag = || parse_bool(v).ok_or_else(|| err(format!("`{k}` needs true or false")));
            match k {
                "inputs" => c.inputs = v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(path).collect(),
                "catalog" => c.catalog = (!v.is_empty()).then(|| path(v)),
                "output" => c.output = path(v),
                "strict_planar" => {
                    c.match_mode = if flag()? { MatchMode::Strict } else { MatchMode::Abstract };
                }
                "config_filter" => {
                    c.config_filter = match v {
                        "early" => ConfigFilterOrder::Early,
                        "late" => ConfigFilterOrder::Late,
                        _ => return Err(err("config_filter is `early` or `late`".into())),
                    }
                }
                "prune_reducing_faces" => c.prune_reducing_faces = flag()?,
                "r3_max_nodes" => c.r3_max_nodes = num()?,
                "full_max_nodes" => c.full_max_nodes = num()?,
                "max_extra_crossings" => c.max_extra_crossings = num()?,
                "min_seifert" => c.min_seifert = num()?,
                "cache" => c.cache = (!v.is_empty()).then(|| path(v)),
                "parallel" => c.parallel = flag()?,
                _ => return Err(err(format!("unknown key `{k}`"))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self, PipelineError> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys() {
        let c = PipelineConfig::parse(
            "# run\ninputs = a.pc, /x/b.pc\ncatalog = cat.txt\noutput = out\nstrict_planar = true\nconfig_filter = late\nr3_max_nodes = 10\nparallel = no\n",
            Path::new("/base"),
        )
        .unwrap();
        assert_eq!(c.inputs, vec![PathBuf::from("/base/a.pc"), PathBuf::from("/x/b.pc")]);
        assert_eq!(c.catalog, Some(PathBuf::from("/base/cat.txt")));
        assert_eq!((c.match_mode, c.config_filter, c.r3_max_nodes, c.parallel), (MatchMode::Strict, ConfigFilterOrder::Late, 10, false));
        assert!(PipelineConfig::parse("bogus = 1", Path::new(".")).is_err());
        assert!(PipelineConfig::parse("r3_max_nodes = many", Path::new(".")).is_err());
        assert!(PipelineConfig::parse("inputs", Path::new(".")).is_err());
    }
}
