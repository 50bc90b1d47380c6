//! n-simplex graphs: validation, region adjacency and region-connectivity.
//!
//! A graph is stored purely by its regions (each an `(n+1)`-subset of the
//! dense vertex range `0..v`); edges and lower faces are implied and never
//! materialized. Regions are kept sorted, and the region list is kept in
//! lexicographic order, so region indices are canonical for a given complex.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A validated n-simplex graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplexGraph {
    dim: usize,
    vertex_count: usize,
    regions: Vec<Vec<usize>>,
}

impl SimplexGraph {
    /// Validates a raw region list and returns the canonical graph.
    ///
    /// Regions may list their vertices in any order. Errors name the first
    /// violated invariant; regions are checked in the order given.
    pub fn new(dim: usize, vertex_count: usize, regions: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(dim));
        }
        if regions.is_empty() || vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }

        let mut canonical = Vec::with_capacity(regions.len());
        for (index, raw) in regions.into_iter().enumerate() {
            if raw.len() != dim + 1 {
                return Err(Error::RegionSizeMismatch {
                    region: index,
                    expected: dim + 1,
                    found: raw.len(),
                });
            }
            if let Some(&vertex) = raw.iter().find(|&&x| x >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    region: index,
                    vertex,
                    vertex_count,
                });
            }
            let mut sorted = raw;
            sorted.sort_unstable();
            if let Some(pair) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInRegion {
                    region: index,
                    vertex: pair[0],
                });
            }
            if let Some(first) = canonical.iter().position(|r: &Vec<usize>| *r == sorted) {
                return Err(Error::DuplicateRegion {
                    region: index,
                    first,
                });
            }
            canonical.push(sorted);
        }

        let mut covered = vec![false; vertex_count];
        for region in &canonical {
            for &x in region {
                covered[x] = true;
            }
        }
        if let Some(vertex) = covered.iter().position(|&c| !c) {
            return Err(Error::UncoveredVertex(vertex));
        }

        canonical.sort();
        Ok(Self {
            dim,
            vertex_count,
            regions: canonical,
        })
    }

    /// Simplex dimension `n`; every region has `n + 1` vertices.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn regions(&self) -> &[Vec<usize>] {
        &self.regions
    }

    /// Sorted vertex list of region `index`.
    ///
    /// Panics if `index` is out of range.
    pub fn region(&self, index: usize) -> &[usize] {
        &self.regions[index]
    }

    pub fn check_region(&self, index: usize) -> Result<()> {
        if index < self.regions.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                limit: self.regions.len(),
            })
        }
    }

    pub fn check_vertex(&self, index: usize) -> Result<()> {
        if index < self.vertex_count {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                limit: self.vertex_count,
            })
        }
    }

    /// Number of vertices two regions share.
    pub fn shared_count(&self, a: usize, b: usize) -> usize {
        sorted_intersection(&self.regions[a], &self.regions[b]).len()
    }

    /// Regions `a` and `b` are adjacent when they share exactly `n` vertices.
    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.shared_count(a, b) == self.dim
    }

    /// For adjacent regions, the vertex of `a` missing from `b` and the
    /// vertex of `b` missing from `a`.
    pub fn exchange(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        if !self.are_adjacent(a, b) {
            return None;
        }
        let ra = &self.regions[a];
        let rb = &self.regions[b];
        let out = *ra.iter().find(|x| rb.binary_search(x).is_err())?;
        let into = *rb.iter().find(|x| ra.binary_search(x).is_err())?;
        Some((out, into))
    }

    /// Adjacency lists over region indices, each list ascending.
    pub fn region_adjacency(&self) -> Vec<Vec<usize>> {
        let r = self.regions.len();
        let mut adj = vec![Vec::new(); r];
        for a in 0..r {
            for b in (a + 1)..r {
                if self.are_adjacent(a, b) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        adj
    }

    /// Connected components of the region adjacency graph.
    pub fn region_components(&self) -> Connectivity {
        let adj = self.region_adjacency();
        let mut component_of = vec![usize::MAX; self.regions.len()];
        let mut components = Vec::new();
        for start in 0..self.regions.len() {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(cur) = queue.pop_front() {
                for &next in &adj[cur] {
                    if component_of[next] == usize::MAX {
                        component_of[next] = id;
                        members.push(next);
                        queue.push_back(next);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        Connectivity {
            components,
            component_of,
        }
    }

    pub fn is_region_connected(&self) -> bool {
        self.region_components().is_connected()
    }

    /// Sorted list of the vertices touched by a set of regions.
    pub fn vertices_of(&self, regions: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        for &r in regions {
            for &x in &self.regions[r] {
                seen[x] = true;
            }
        }
        (0..self.vertex_count).filter(|&x| seen[x]).collect()
    }

    /// The graph spanned by a subset of regions, with vertices renumbered
    /// densely. Returns the subgraph and the map from its vertex indices
    /// back to this graph's indices.
    pub fn subgraph(&self, regions: &[usize]) -> Result<(SimplexGraph, Vec<usize>)> {
        let vertices = self.vertices_of(regions);
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &x) in vertices.iter().enumerate() {
            local[x] = i;
        }
        let raw = regions
            .iter()
            .map(|&r| self.regions[r].iter().map(|&x| local[x]).collect())
            .collect();
        let sub = SimplexGraph::new(self.dim, vertices.len(), raw)?;
        Ok((sub, vertices))
    }
}

/// Partition of region indices into region-connected components.
///
/// Components are listed in order of their lowest region index, and each
/// component's regions are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

pub(crate) fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
