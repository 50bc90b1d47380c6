//! Class counting, colorability probes, component decomposition and move
//! bounds.
//!
//! Every count is exact. Measured values come from the Smith normal form of
//! the incidence matrix: the labelings reachable from a fixed labeling form
//! the image of `A` over `Z_m`, the push bags acting trivially form its
//! kernel, and the labeling classes are the cosets of the image.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::coloring::{
    propagate_coloring, verify_coloring, ColorConflict, Coloring, ColoringFailure, StitchConflict,
};
use crate::error::{Error, Result};
use crate::graph::{sorted_intersection, SimplexGraph};
use crate::labeling::{check_modulus, Labeling};
use crate::linalg::smith_normal_form;
use crate::solver::{action_sizes, incidence};

fn big_pow(base: u64, exp: usize) -> BigUint {
    Pow::pow(BigUint::from(base), exp)
}

/// Closed-form predictions next to the values measured from the incidence
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    /// `m^n`.
    pub predicted_class_count: BigUint,
    /// `m^(v-n)`.
    pub predicted_class_size: BigUint,
    /// `m^(r-v+n)`, or `None` when the exponent is negative.
    pub predicted_solution_count: Option<BigUint>,
    pub measured_orbit_size: BigUint,
    pub measured_class_count: BigUint,
    pub measured_solution_count: BigUint,
    /// Region-connected and `(n+1)`-colorable.
    pub hypotheses_hold: bool,
}

impl ClassReport {
    /// Predictions equal measurements for all three counts.
    pub fn predictions_match(&self) -> bool {
        self.predicted_class_count == self.measured_class_count
            && self.predicted_class_size == self.measured_orbit_size
            && self.predicted_solution_count.as_ref() == Some(&self.measured_solution_count)
    }
}

pub fn class_report(g: &SimplexGraph, modulus: u64) -> Result<ClassReport> {
    check_modulus(modulus)?;
    let (n, v, r) = (g.dim(), g.vertex_count(), g.region_count());
    let snf = smith_normal_form(&incidence(g));
    let sizes = action_sizes(&snf, r, modulus);
    let measured_class_count = big_pow(modulus, v) / &sizes.orbit_size;
    let hypotheses_hold = g.is_region_connected() && propagate_coloring(g).is_ok();
    Ok(ClassReport {
        predicted_class_count: big_pow(modulus, n),
        predicted_class_size: big_pow(modulus, v - n),
        predicted_solution_count: (r + n).checked_sub(v).map(|e| big_pow(modulus, e)),
        measured_orbit_size: sizes.orbit_size,
        measured_class_count,
        measured_solution_count: sizes.kernel_size,
        hypotheses_hold,
    })
}

/// Single-vertex move: adds `amount` mod `m` at `vertex`.
pub fn vertex_shift(l: &Labeling, vertex: usize, amount: i64) -> Result<Labeling> {
    l.shift(vertex, amount)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Colorable,
    NotColorable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Colorable => f.write_str("Colorable"),
            Verdict::NotColorable => f.write_str("NotColorable"),
        }
    }
}

/// Independent evidence for a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Coloring(Coloring),
    Failure(ColoringFailure),
}

impl Certificate {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Certificate::Coloring(c) => Some(c),
            Certificate::Failure(_) => None,
        }
    }

    pub fn conflict(&self) -> Option<&ColorConflict> {
        match self {
            Certificate::Failure(f) => f.as_conflict(),
            Certificate::Coloring(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorabilityVerdict {
    pub verdict: Verdict,
    pub class_count: BigUint,
    pub certificate: Certificate,
    /// `m^(r-n) + 1`.
    pub bound_moves: BigUint,
}

/// Decides `(n+1)`-colorability of a region-connected graph from its number
/// of labeling classes (`m^n` exactly when colorable), cross-checked against
/// coloring propagation.
///
/// Fails with [`Error::CriteriaDisagree`] when the two criteria differ.
pub fn probe_colorability(g: &SimplexGraph, modulus: u64) -> Result<ColorabilityVerdict> {
    check_modulus(modulus)?;
    let connectivity = g.region_components();
    if !connectivity.is_connected() {
        return Err(Error::NotRegionConnected {
            components: connectivity.components.len(),
        });
    }
    let report = class_report(g, modulus)?;
    let by_count = report.measured_class_count == report.predicted_class_count;
    let certificate = match propagate_coloring(g) {
        Ok(c) => Certificate::Coloring(c),
        Err(f) => Certificate::Failure(f),
    };
    let by_propagation = certificate.coloring().is_some();
    if by_count != by_propagation {
        return Err(Error::CriteriaDisagree {
            class_count: report.measured_class_count.to_string(),
            detail: format!(
                "count says {}, propagation says {}",
                if by_count {
                    "colorable"
                } else {
                    "not colorable"
                },
                if by_propagation {
                    "colorable"
                } else {
                    "not colorable"
                }
            ),
        });
    }
    Ok(ColorabilityVerdict {
        verdict: if by_count {
            Verdict::Colorable
        } else {
            Verdict::NotColorable
        },
        class_count: report.measured_class_count,
        certificate,
        bound_moves: probe_bound(g, modulus),
    })
}

/// Region-connected components and how they touch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Vec<usize>>,
    /// Component pairs `(i, j)`, `i < j`, whose shared vertices are nonempty
    /// and lie inside a single region of the graph.
    pub association_edges: Vec<(usize, usize)>,
    /// Component pairs sharing vertices that no single region contains.
    pub unassociated_overlaps: Vec<(usize, usize)>,
    /// The association graph is a forest.
    pub acyclic: bool,
}

pub fn decompose(g: &SimplexGraph) -> Decomposition {
    let components = g.region_components().components;
    let vertex_sets: Vec<Vec<usize>> = components.iter().map(|c| g.vertices_of(c)).collect();
    let mut association_edges = Vec::new();
    let mut unassociated_overlaps = Vec::new();
    for i in 0..components.len() {
        for j in (i + 1)..components.len() {
            let shared = sorted_intersection(&vertex_sets[i], &vertex_sets[j]);
            if shared.is_empty() {
                continue;
            }
            let inside_region = g
                .regions()
                .iter()
                .any(|r| shared.iter().all(|x| r.binary_search(x).is_ok()));
            if inside_region {
                association_edges.push((i, j));
            } else {
                unassociated_overlaps.push((i, j));
            }
        }
    }

    let mut forest = UnionFind::new(components.len());
    let acyclic = association_edges.iter().all(|&(a, b)| forest.union(a, b));
    Decomposition {
        components,
        association_edges,
        unassociated_overlaps,
        acyclic,
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind((0..size).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Colorability verdict assembled from per-component probes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedVerdict {
    pub verdict: Verdict,
    /// A stitched global coloring, or the failure (in global indices).
    pub certificate: Certificate,
    /// Per-component probes, in component order, indices local to each
    /// component's subgraph.
    pub components: Vec<ColorabilityVerdict>,
    /// `m^(r-n) + 1` for the whole graph.
    pub bound_moves: BigUint,
}

/// Probes each region-connected component and stitches their colorings along
/// the association forest.
///
/// Refuses cyclic association graphs ([`Error::CyclicAssociation`]) and
/// overlaps not contained in one region ([`Error::HypothesisViolation`]).
pub fn probe_colorability_decomposed(g: &SimplexGraph, modulus: u64) -> Result<DecomposedVerdict> {
    check_modulus(modulus)?;
    let decomposition = decompose(g);
    if !decomposition.acyclic {
        return Err(Error::CyclicAssociation);
    }
    if let Some(&(a, b)) = decomposition.unassociated_overlaps.first() {
        return Err(Error::HypothesisViolation(format!(
            "components {a} and {b} share vertices outside any single region"
        )));
    }

    let mut verdicts = Vec::with_capacity(decomposition.components.len());
    let mut vertex_maps = Vec::with_capacity(decomposition.components.len());
    for component in &decomposition.components {
        let (sub, map) = g.subgraph(component)?;
        debug_assert!(sub
            .regions()
            .iter()
            .zip(component)
            .all(|(local, &global)| local
                .iter()
                .map(|&x| map[x])
                .eq(g.region(global).iter().copied())));
        verdicts.push(probe_colorability(&sub, modulus)?);
        vertex_maps.push(map);
    }
    let bound_moves = probe_bound(g, modulus);

    if let Some(k) = verdicts
        .iter()
        .position(|v| v.verdict == Verdict::NotColorable)
    {
        let failure = match &verdicts[k].certificate {
            Certificate::Failure(ColoringFailure::Conflict(c)) => ColoringFailure::Conflict(
                globalize_conflict(c, &decomposition.components[k], &vertex_maps[k]),
            ),
            Certificate::Failure(ColoringFailure::Incompatible(_)) | Certificate::Coloring(_) => {
                ColoringFailure::Incompatible(StitchConflict {
                    components: vec![k],
                })
            }
        };
        return Ok(DecomposedVerdict {
            verdict: Verdict::NotColorable,
            certificate: Certificate::Failure(failure),
            components: verdicts,
            bound_moves,
        });
    }

    let certificate = match stitch_forest(g, &decomposition, &verdicts, &vertex_maps) {
        Ok(coloring) => {
            if !verify_coloring(g, &coloring)? {
                return Err(Error::InternalCheckFailed(
                    "stitched coloring is not proper".into(),
                ));
            }
            Certificate::Coloring(coloring)
        }
        Err(conflict) => Certificate::Failure(ColoringFailure::Incompatible(conflict)),
    };
    let verdict = if certificate.coloring().is_some() {
        Verdict::Colorable
    } else {
        Verdict::NotColorable
    };
    Ok(DecomposedVerdict {
        verdict,
        certificate,
        components: verdicts,
        bound_moves,
    })
}

fn globalize_conflict(c: &ColorConflict, regions: &[usize], vertices: &[usize]) -> ColorConflict {
    ColorConflict {
        vertex: vertices[c.vertex],
        forced_color_a: c.forced_color_a,
        forced_color_b: c.forced_color_b,
        witness_a: c.witness_a.iter().map(|&r| regions[r]).collect(),
        witness_b: c.witness_b.iter().map(|&r| regions[r]).collect(),
        seed_colors: c.seed_colors.clone(),
    }
}

/// Recolors each component to agree with its parent in the association
/// forest, visiting trees breadth-first from their lowest component.
fn stitch_forest(
    g: &SimplexGraph,
    decomposition: &Decomposition,
    verdicts: &[ColorabilityVerdict],
    vertex_maps: &[Vec<usize>],
) -> std::result::Result<Coloring, StitchConflict> {
    let q = decomposition.components.len();
    let dim = g.dim();
    let mut adj = vec![Vec::new(); q];
    for &(a, b) in &decomposition.association_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut global: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut visited = vec![false; q];
    for start in 0..q {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = VecDeque::from([(start, usize::MAX)]);
        while let Some((k, parent)) = queue.pop_front() {
            let local = verdicts[k]
                .certificate
                .coloring()
                .expect("component is colorable");
            let map = &vertex_maps[k];
            let mut perm: Vec<Option<usize>> = vec![None; dim + 1];
            let mut used = vec![false; dim + 1];
            for (lv, &gv) in map.iter().enumerate() {
                let Some(target) = global[gv] else { continue };
                let from = local.color(lv);
                match perm[from] {
                    Some(t) if t == target => {}
                    Some(_) => {
                        return Err(StitchConflict {
                            components: vec![parent, k],
                        })
                    }
                    None if used[target] => {
                        return Err(StitchConflict {
                            components: vec![parent, k],
                        })
                    }
                    None => {
                        perm[from] = Some(target);
                        used[target] = true;
                    }
                }
            }
            let mut free = (0..=dim).filter(|&c| !used[c]);
            let perm: Vec<usize> = perm
                .into_iter()
                .map(|p| p.unwrap_or_else(|| free.next().expect("enough colors")))
                .collect();
            for (lv, &gv) in map.iter().enumerate() {
                global[gv] = Some(perm[local.color(lv)]);
            }
            let mut next: Vec<usize> = adj[k].iter().copied().filter(|&j| !visited[j]).collect();
            next.sort_unstable();
            for j in next {
                visited[j] = true;
                queue.push_back((j, k));
            }
        }
    }
    let colors = global.into_iter().map(|c| c.unwrap_or(0)).collect();
    Ok(Coloring::new(dim, colors).expect("colors within range"))
}

/// `m^(r-n) + 1`: moves sufficient to separate the class counts.
pub fn moves_bound(r: usize, n: usize, modulus: u64) -> Result<BigUint> {
    if n < 1 || r <= n {
        return Err(Error::DomainError(format!(
            "moves bound needs r > n >= 1, got r = {r}, n = {n}"
        )));
    }
    check_modulus(modulus).map_err(|_| Error::DomainError(format!("modulus {modulus} < 2")))?;
    Ok(big_pow(modulus, r - n) + BigUint::one())
}

// Boards with r <= n fall outside moves_bound's domain; clamp the exponent.
fn probe_bound(g: &SimplexGraph, modulus: u64) -> BigUint {
    big_pow(modulus, g.region_count().saturating_sub(g.dim())) + BigUint::one()
}

/// `2^(2v-7) + 1`: the planar 3-colorability bound using `r <= 2v - 4`.
pub fn planar_moves_bound(v: usize) -> Result<BigUint> {
    if v < 4 {
        return Err(Error::DomainError(format!(
            "planar bound needs v >= 4, got {v}"
        )));
    }
    Ok(big_pow(2, 2 * v - 7) + BigUint::one())
}
