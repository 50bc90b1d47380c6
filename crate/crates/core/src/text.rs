//! Line-based graph file format.
//!
//! ```text
//! # comments run to end of line
//! simplex n 2
//! vertices 4
//! region 0 1 2
//! region 1 2 3
//! modulus 2
//! labeling start 0 0 0 0
//! labeling goal 1 1 1 0
//! ```
//!
//! The `simplex` and `vertices` lines come first, in that order. `region`,
//! `modulus` and `labeling` lines may follow in any order. Unknown keywords
//! are errors, labelings require a modulus, and names must be unique.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimplexGraph;
use crate::labeling::Labeling;

/// Parsed contents of a graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: SimplexGraph,
    pub modulus: Option<u64>,
    pub labelings: Vec<(String, Labeling)>,
}

impl GraphFile {
    pub fn new(graph: SimplexGraph) -> Self {
        Self {
            graph,
            modulus: None,
            labelings: Vec::new(),
        }
    }

    pub fn labeling(&self, name: &str) -> Option<&Labeling> {
        self.labelings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, l)| l)
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());

        let err = |line: usize, message: String| Error::Parse { line, message };

        let (line, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing `simplex n <n>` header".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let dim = match tokens.as_slice() {
            ["simplex", "n", value] => number::<usize>(value, line)?,
            _ => return Err(err(line, "expected `simplex n <n>`".into())),
        };

        let (line, header) = lines
            .next()
            .ok_or_else(|| err(line + 1, "missing `vertices <v>` line".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let vertex_count = match tokens.as_slice() {
            ["vertices", value] => number::<usize>(value, line)?,
            _ => return Err(err(line, "expected `vertices <v>`".into())),
        };

        let mut regions = Vec::new();
        let mut modulus: Option<(usize, u64)> = None;
        let mut raw_labelings: Vec<(usize, String, Vec<u64>)> = Vec::new();
        for (line, text) in lines {
            let mut tokens = text.split_whitespace();
            match tokens.next() {
                Some("region") => {
                    let vertices = tokens
                        .map(|t| number::<usize>(t, line))
                        .collect::<Result<Vec<_>>>()?;
                    regions.push(vertices);
                }
                Some("modulus") => {
                    if modulus.is_some() {
                        return Err(err(line, "modulus given twice".into()));
                    }
                    let value = tokens
                        .next()
                        .ok_or_else(|| err(line, "modulus needs a value".into()))?;
                    if tokens.next().is_some() {
                        return Err(err(line, "trailing tokens after modulus".into()));
                    }
                    modulus = Some((line, number::<u64>(value, line)?));
                }
                Some("labeling") => {
                    let name = tokens
                        .next()
                        .ok_or_else(|| err(line, "labeling needs a name".into()))?
                        .to_string();
                    if raw_labelings.iter().any(|(_, n, _)| *n == name) {
                        return Err(err(line, format!("labeling `{name}` defined twice")));
                    }
                    let values = tokens
                        .map(|t| number::<u64>(t, line))
                        .collect::<Result<Vec<_>>>()?;
                    raw_labelings.push((line, name, values));
                }
                Some(other) => return Err(err(line, format!("unknown keyword `{other}`"))),
                None => unreachable!("blank lines are filtered"),
            }
        }

        let graph = SimplexGraph::new(dim, vertex_count, regions)?;
        if let Some((line, m)) = modulus {
            if m < 2 {
                return Err(err(line, format!("modulus must be at least 2, got {m}")));
            }
        }
        let mut labelings = Vec::with_capacity(raw_labelings.len());
        for (line, name, values) in raw_labelings {
            let Some((_, m)) = modulus else {
                return Err(err(line, "labeling given without a modulus line".into()));
            };
            if values.len() != vertex_count {
                return Err(err(
                    line,
                    format!(
                        "labeling `{name}` has {} values, expected {vertex_count}",
                        values.len()
                    ),
                ));
            }
            let labeling = Labeling::new(m, values).map_err(|e| err(line, e.to_string()))?;
            labelings.push((name, labeling));
        }
        Ok(GraphFile {
            graph,
            modulus: modulus.map(|(_, m)| m),
            labelings,
        })
    }

    /// Canonical text rendering; parses back to an equal value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        writeln!(out, "simplex n {}", g.dim()).unwrap();
        writeln!(out, "vertices {}", g.vertex_count()).unwrap();
        for region in g.regions() {
            writeln!(out, "region {}", join(region)).unwrap();
        }
        if let Some(m) = self.modulus {
            writeln!(out, "modulus {m}").unwrap();
        }
        for (name, l) in &self.labelings {
            writeln!(out, "labeling {name} {}", join(l.values())).unwrap();
        }
        out
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn number<T: FromStr>(token: &str, line: usize) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const STRIP: &str = "\
# a two-triangle strip
simplex n 2
vertices 4
region 0 1 2
region 3 2 1   # any vertex order
modulus 2
labeling start 0 0 0 0
labeling goal 1 1 1 0
";

    #[test]
    fn parses_strip() {
        let f = GraphFile::parse(STRIP).unwrap();
        assert_eq!(f.graph.regions(), &[vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(f.modulus, Some(2));
        assert_eq!(f.labeling("goal").unwrap().values(), &[1, 1, 1, 0]);
        assert!(f.labeling("missing").is_none());
        assert_eq!(GraphFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn strictness() {
        let unknown = "simplex n 2\nvertices 3\nregion 0 1 2\nface 0 1\n";
        assert!(matches!(
            GraphFile::parse(unknown),
            Err(Error::Parse { line: 4, .. })
        ));

        let order = "vertices 3\nsimplex n 2\nregion 0 1 2\n";
        assert!(matches!(
            GraphFile::parse(order),
            Err(Error::Parse { line: 1, .. })
        ));

        let no_mod = "simplex n 2\nvertices 3\nregion 0 1 2\nlabeling a 0 0 0\n";
        assert!(matches!(
            GraphFile::parse(no_mod),
            Err(Error::Parse { line: 4, .. })
        ));

        let short = "simplex n 2\nvertices 3\nregion 0 1 2\nmodulus 3\nlabeling a 0 0\n";
        assert!(matches!(
            GraphFile::parse(short),
            Err(Error::Parse { line: 5, .. })
        ));

        let big = "simplex n 2\nvertices 3\nregion 0 1 2\nmodulus 3\nlabeling a 0 0 3\n";
        assert!(matches!(
            GraphFile::parse(big),
            Err(Error::Parse { line: 5, .. })
        ));

        let twice = "simplex n 2\nvertices 3\nregion 0 1 2\nmodulus 3\nlabeling a 0 0 0\nlabeling a 1 1 1\n";
        assert!(matches!(
            GraphFile::parse(twice),
            Err(Error::Parse { line: 6, .. })
        ));

        let bad_number = "simplex n 2\nvertices x\n";
        assert!(matches!(
            GraphFile::parse(bad_number),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn graph_errors_pass_through() {
        let thin = "simplex n 2\nvertices 3\nregion 0 1\n";
        assert!(matches!(
            GraphFile::parse(thin),
            Err(Error::RegionSizeMismatch { region: 0, .. })
        ));
    }
}
