//! Deterministic board families.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimplexGraph;
use crate::labeling::Labeling;

/// A named board family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoardSpec {
    /// Triangular coin board with `rows` rows (n = 2).
    Triangular { rows: usize },
    /// `length` n-simplexes glued face to face in a line.
    Strip { dim: usize, length: usize },
    /// All (n+1)-subsets of n+2 vertices.
    CompletePlus { dim: usize },
    /// `count` triangles, consecutive ones sharing one vertex.
    SharedVertexChain { count: usize },
}

impl BoardSpec {
    pub fn build(&self) -> Result<SimplexGraph> {
        match *self {
            BoardSpec::Triangular { rows } => triangular_board(rows),
            BoardSpec::Strip { dim, length } => simplex_strip(dim, length),
            BoardSpec::CompletePlus { dim } => complete_plus(dim),
            BoardSpec::SharedVertexChain { count } => shared_vertex_chain(count),
        }
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoardSpec::Triangular { rows } => write!(f, "triangular {rows}"),
            BoardSpec::Strip { dim, length } => write!(f, "strip {dim} {length}"),
            BoardSpec::CompletePlus { dim } => write!(f, "kplus {dim}"),
            BoardSpec::SharedVertexChain { count } => write!(f, "chain {count}"),
        }
    }
}

/// Triangular board with `rows` rows, row `i` holding `i + 1` vertices,
/// numbered row-major. Regions are all upward and downward unit triangles.
pub fn triangular_board(rows: usize) -> Result<SimplexGraph> {
    if rows < 2 {
        return Err(Error::DomainError(format!(
            "triangular board needs at least 2 rows, got {rows}"
        )));
    }
    let at = |row: usize, col: usize| row * (row + 1) / 2 + col;
    let mut regions = Vec::with_capacity((rows - 1) * (rows - 1));
    for row in 0..rows - 1 {
        for col in 0..=row {
            regions.push(vec![at(row, col), at(row + 1, col), at(row + 1, col + 1)]);
            if col < row {
                regions.push(vec![at(row, col), at(row, col + 1), at(row + 1, col + 1)]);
            }
        }
    }
    SimplexGraph::new(2, rows * (rows + 1) / 2, regions)
}

/// Region `i` is `{i, i+1, ..., i+n}` for `i < length`.
pub fn simplex_strip(dim: usize, length: usize) -> Result<SimplexGraph> {
    if dim < 1 || length < 1 {
        return Err(Error::DomainError(format!(
            "strip needs n >= 1 and length >= 1, got n = {dim}, length = {length}"
        )));
    }
    let regions = (0..length).map(|i| (i..=i + dim).collect()).collect();
    SimplexGraph::new(dim, dim + length, regions)
}

/// `K_{n+2}` as its `n + 2` facets; never `(n+1)`-colorable.
pub fn complete_plus(dim: usize) -> Result<SimplexGraph> {
    if dim < 1 {
        return Err(Error::DomainError(format!(
            "complete_plus needs n >= 1, got {dim}"
        )));
    }
    let v = dim + 2;
    let regions = (0..v)
        .map(|skip| (0..v).filter(|&x| x != skip).collect())
        .collect();
    SimplexGraph::new(dim, v, regions)
}

/// Triangle `i` is `{2i, 2i+1, 2i+2}`.
pub fn shared_vertex_chain(count: usize) -> Result<SimplexGraph> {
    if count < 2 {
        return Err(Error::DomainError(format!(
            "chain needs at least 2 triangles, got {count}"
        )));
    }
    let regions = (0..count)
        .map(|i| vec![2 * i, 2 * i + 1, 2 * i + 2])
        .collect();
    SimplexGraph::new(2, 2 * count + 1, regions)
}

/// Coin face shown for a label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Face {
    Heads,
    Tails,
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Face::Heads => "H",
            Face::Tails => "T",
        })
    }
}

/// Heads while the label is below `threshold`, tails from there on.
pub fn memory_display(l: &Labeling, threshold: u64) -> Result<Vec<Face>> {
    if threshold == 0 || threshold >= l.modulus() {
        return Err(Error::DomainError(format!(
            "threshold must lie strictly between 0 and {}, got {threshold}",
            l.modulus()
        )));
    }
    Ok(l.values()
        .iter()
        .map(|&x| {
            if x < threshold {
                Face::Heads
            } else {
                Face::Tails
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_sizes() {
        let g = triangular_board(2).unwrap();
        assert_eq!((g.vertex_count(), g.region_count()), (3, 1));
        let g = triangular_board(3).unwrap();
        assert_eq!((g.vertex_count(), g.region_count()), (6, 4));
        let g = triangular_board(4).unwrap();
        assert_eq!((g.vertex_count(), g.region_count()), (10, 9));
        assert!(g.is_region_connected());
        for k in 2..9 {
            assert_eq!(
                triangular_board(k).unwrap().region_count(),
                (k - 1) * (k - 1)
            );
        }
        assert!(triangular_board(1).is_err());
    }

    #[test]
    fn strips() {
        let g = simplex_strip(2, 1).unwrap();
        assert_eq!(g.regions(), &[vec![0, 1, 2]]);
        let g = simplex_strip(2, 2).unwrap();
        assert_eq!(g.regions(), &[vec![0, 1, 2], vec![1, 2, 3]]);
        let g = simplex_strip(3, 4).unwrap();
        assert_eq!((g.vertex_count(), g.region_count()), (7, 4));
        for i in 0..3 {
            assert_eq!(g.shared_count(i, i + 1), 3);
        }
        assert!(simplex_strip(0, 2).is_err());
        assert!(simplex_strip(2, 0).is_err());
    }

    #[test]
    fn complete_plus_shapes() {
        let g = complete_plus(2).unwrap();
        assert_eq!((g.vertex_count(), g.region_count()), (4, 4));
        let g = complete_plus(1).unwrap();
        assert_eq!(g.regions(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        let g = complete_plus(3).unwrap();
        assert_eq!((g.vertex_count(), g.region_count()), (5, 5));
        assert!(complete_plus(0).is_err());
    }

    #[test]
    fn chains() {
        let g = shared_vertex_chain(2).unwrap();
        assert_eq!(g.regions(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        for count in 2..6 {
            assert!(!shared_vertex_chain(count).unwrap().is_region_connected());
        }
        assert!(shared_vertex_chain(1).is_err());
    }

    #[test]
    fn memory_display_examples() {
        let l = Labeling::new(6, vec![2, 4, 0, 3, 5]).unwrap();
        let faces = memory_display(&l, 3).unwrap();
        assert_eq!(faces[0], Face::Heads);
        assert_eq!(faces[1], Face::Tails);
        assert_eq!(faces[3], Face::Tails);

        let coins = Labeling::new(2, vec![0, 1]).unwrap();
        assert_eq!(
            memory_display(&coins, 1).unwrap(),
            vec![Face::Heads, Face::Tails]
        );
        assert!(memory_display(&coins, 0).is_err());
        assert!(memory_display(&coins, 2).is_err());
    }

    #[test]
    fn specs_build_reproducibly() {
        let spec = BoardSpec::Triangular { rows: 5 };
        assert_eq!(spec.build().unwrap(), spec.build().unwrap());
        assert_eq!(spec.to_string(), "triangular 5");
    }
}
