//! Proper `(n+1)`-colorings by forced propagation.
//!
//! Two adjacent regions share `n` vertices, so once one region is colored
//! the private vertex of its neighbour can only take the one color missing
//! from the shared face. Seeding one region per component and sweeping the
//! region adjacency graph breadth-first therefore either produces the unique
//! coloring (up to a permutation of the seed) or finds a vertex forced to two
//! different colors, which certifies that no proper `(n+1)`-coloring exists.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{check_dims, Error, Result};
use crate::graph::SimplexGraph;

/// Per-vertex color indices in `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// Wraps raw colors for a graph of dimension `dim`; colors must be in
    /// `0..=dim`. Properness is not checked here, see [`verify_coloring`].
    pub fn new(dim: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some(&color) = colors.iter().find(|&&c| c > dim) {
            return Err(Error::ColorOutOfRange { color, max: dim });
        }
        Ok(Self { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, vertex: usize) -> usize {
        self.colors[vertex]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Relabels every color through `perm` (color `c` becomes `perm[c]`).
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|&c| perm[c]).collect(),
        }
    }
}

/// Certificate that some vertex is forced to two different colors.
///
/// Both witnesses are region-paths starting at the same seed region, whose
/// vertices are colored with `seed_colors` in ascending vertex order.
/// Replaying either path with the forced-color rule lands on the vertex with
/// the stated color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorConflict {
    pub vertex: usize,
    pub forced_color_a: usize,
    pub forced_color_b: usize,
    pub witness_a: Vec<usize>,
    pub witness_b: Vec<usize>,
    pub seed_colors: Vec<usize>,
}

impl ColorConflict {
    /// Replays one witness path and returns the color it forces on
    /// [`ColorConflict::vertex`], or `None` if the path is not a valid
    /// region-path or never reaches the vertex.
    pub fn replay(&self, g: &SimplexGraph, path: &[usize]) -> Option<usize> {
        replay_path(g, path, &self.seed_colors).and_then(|colors| colors[self.vertex])
    }

    /// Both witnesses replay to their stated, distinct colors.
    pub fn verify(&self, g: &SimplexGraph) -> bool {
        self.forced_color_a != self.forced_color_b
            && self.witness_a.first() == self.witness_b.first()
            && self.replay(g, &self.witness_a) == Some(self.forced_color_a)
            && self.replay(g, &self.witness_b) == Some(self.forced_color_b)
    }
}

/// Region-connected pieces that are each colorable but cannot be recolored
/// to agree on the vertices they share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StitchConflict {
    /// Component indices (in [`SimplexGraph::region_components`] order)
    /// that could not be aligned.
    pub components: Vec<usize>,
}

/// Why [`propagate_coloring`] found no proper coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringFailure {
    Conflict(ColorConflict),
    Incompatible(StitchConflict),
}

impl ColoringFailure {
    pub fn as_conflict(&self) -> Option<&ColorConflict> {
        match self {
            ColoringFailure::Conflict(c) => Some(c),
            ColoringFailure::Incompatible(_) => None,
        }
    }
}

impl fmt::Display for ColorConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} forced to {} and {}",
            self.vertex, self.forced_color_a, self.forced_color_b
        )
    }
}

/// True iff every region's colors are pairwise distinct.
pub fn verify_coloring(g: &SimplexGraph, c: &Coloring) -> Result<bool> {
    Ok(first_improper_region(g, c)?.is_none())
}

pub(crate) fn first_improper_region(g: &SimplexGraph, c: &Coloring) -> Result<Option<usize>> {
    check_dims(g.vertex_count(), c.len())?;
    let mut seen = vec![false; g.dim() + 1];
    for (index, region) in g.regions().iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for &x in region {
            let color = c.color(x);
            if color > g.dim() || seen[color] {
                return Ok(Some(index));
            }
            seen[color] = true;
        }
    }
    Ok(None)
}

pub(crate) fn require_proper(g: &SimplexGraph, c: &Coloring) -> Result<()> {
    match first_improper_region(g, c)? {
        None => Ok(()),
        Some(region) => Err(Error::ImproperColoring { region }),
    }
}

fn missing_color(g: &SimplexGraph, shared: impl Iterator<Item = usize>) -> usize {
    let mut seen = vec![false; g.dim() + 1];
    for c in shared {
        seen[c] = true;
    }
    seen.iter().position(|&s| !s).unwrap_or(0)
}

fn replay_path(
    g: &SimplexGraph,
    path: &[usize],
    seed_colors: &[usize],
) -> Option<Vec<Option<usize>>> {
    let (&seed, rest) = path.split_first()?;
    if seed >= g.region_count() || seed_colors.len() != g.dim() + 1 {
        return None;
    }
    let mut colors = vec![None; g.vertex_count()];
    for (&x, &c) in g.region(seed).iter().zip(seed_colors) {
        colors[x] = Some(c);
    }
    let mut prev = seed;
    for &next in rest {
        if next >= g.region_count() {
            return None;
        }
        let (_, private) = g.exchange(prev, next)?;
        let mut shared = Vec::with_capacity(g.dim());
        for &x in g.region(next) {
            if x != private {
                shared.push(colors[x]?);
            }
        }
        colors[private] = Some(missing_color(g, shared.into_iter()));
        prev = next;
    }
    Some(colors)
}

/// Propagates colors through the component containing `seed_region`.
///
/// The seed region's vertices get `seed_colors` in ascending vertex order.
/// Returns colors for the vertices of that component (`None` elsewhere), or
/// the first vertex forced to two colors.
pub fn propagate_from(
    g: &SimplexGraph,
    seed_region: usize,
    seed_colors: &[usize],
) -> Result<std::result::Result<Vec<Option<usize>>, ColorConflict>> {
    g.check_region(seed_region)?;
    check_dims(g.dim() + 1, seed_colors.len())?;
    let mut sorted = seed_colors.to_vec();
    sorted.sort_unstable();
    if sorted != (0..=g.dim()).collect::<Vec<_>>() {
        return Err(Error::DomainError(
            "seed colors must be a permutation of 0..=n".into(),
        ));
    }

    let adj = g.region_adjacency();
    let mut colors: Vec<Option<usize>> = vec![None; g.vertex_count()];
    // region whose processing assigned the vertex its color
    let mut colored_by = vec![usize::MAX; g.vertex_count()];
    let mut parent = vec![usize::MAX; g.region_count()];
    let mut visited = vec![false; g.region_count()];

    for (&x, &c) in g.region(seed_region).iter().zip(seed_colors) {
        colors[x] = Some(c);
        colored_by[x] = seed_region;
    }
    visited[seed_region] = true;
    let mut queue = VecDeque::from([seed_region]);

    let path_to = |parent: &[usize], mut region: usize| {
        let mut path = vec![region];
        while parent[region] != usize::MAX {
            region = parent[region];
            path.push(region);
        }
        path.reverse();
        path
    };

    while let Some(cur) = queue.pop_front() {
        for &next in &adj[cur] {
            if visited[next] {
                continue;
            }
            visited[next] = true;
            parent[next] = cur;
            let (_, private) = g.exchange(cur, next).expect("adjacent regions");
            let missing = missing_color(
                g,
                g.region(next)
                    .iter()
                    .filter(|&&x| x != private)
                    .map(|&x| colors[x].expect("shared vertices are colored")),
            );
            match colors[private] {
                None => {
                    colors[private] = Some(missing);
                    colored_by[private] = next;
                }
                Some(existing) if existing == missing => {}
                Some(existing) => {
                    return Ok(Err(ColorConflict {
                        vertex: private,
                        forced_color_a: existing,
                        forced_color_b: missing,
                        witness_a: path_to(&parent, colored_by[private]),
                        witness_b: path_to(&parent, next),
                        seed_colors: seed_colors.to_vec(),
                    }));
                }
            }
            queue.push_back(next);
        }
    }
    Ok(Ok(colors))
}

/// Colors the whole graph, one independently seeded propagation per
/// region-connected component.
///
/// Each component's lowest-indexed region is seeded with colors `0..=n` in
/// ascending vertex order. When components share vertices, their colorings
/// are recolored by permutations (lexicographically first choice wins) until
/// shared vertices agree; if no choice of permutations works the failure is
/// [`ColoringFailure::Incompatible`]. Both failure kinds mean the graph has no
/// proper `(n+1)`-coloring.
pub fn propagate_coloring(g: &SimplexGraph) -> std::result::Result<Coloring, ColoringFailure> {
    let connectivity = g.region_components();
    let identity: Vec<usize> = (0..=g.dim()).collect();
    let mut locals = Vec::with_capacity(connectivity.components.len());
    for component in &connectivity.components {
        match propagate_from(g, component[0], &identity).expect("valid seed") {
            Ok(colors) => locals.push(colors),
            Err(conflict) => return Err(ColoringFailure::Conflict(conflict)),
        }
    }
    let colors =
        stitch(g.dim(), g.vertex_count(), &locals).map_err(ColoringFailure::Incompatible)?;
    Ok(Coloring { colors })
}

/// Aligns per-component partial colorings by searching color permutations.
fn stitch(
    dim: usize,
    vertex_count: usize,
    locals: &[Vec<Option<usize>>],
) -> std::result::Result<Vec<usize>, StitchConflict> {
    // clusters of components linked by shared vertices
    let q = locals.len();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for (k, local) in locals.iter().enumerate() {
        for (x, c) in local.iter().enumerate() {
            if c.is_some() {
                owners[x].push(k);
            }
        }
    }
    let mut linked = vec![Vec::new(); q];
    for list in &owners {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                linked[a].push(b);
                linked[b].push(a);
            }
        }
    }

    let mut global: Vec<Option<usize>> = vec![None; vertex_count];
    let mut seen = vec![false; q];
    for start in 0..q {
        if seen[start] {
            continue;
        }
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let cur = order[head];
            head += 1;
            let mut next: Vec<usize> = linked[cur].iter().copied().filter(|&k| !seen[k]).collect();
            next.sort_unstable();
            next.dedup();
            for k in next {
                seen[k] = true;
                order.push(k);
            }
        }
        if !assign_cluster(dim, locals, &order, &mut global) {
            let mut components = order.clone();
            components.sort_unstable();
            return Err(StitchConflict { components });
        }
    }
    Ok(global.into_iter().map(|c| c.unwrap_or(0)).collect())
}

fn assign_cluster(
    dim: usize,
    locals: &[Vec<Option<usize>>],
    order: &[usize],
    global: &mut Vec<Option<usize>>,
) -> bool {
    let Some((&first, rest)) = order.split_first() else {
        return true;
    };
    let local = &locals[first];
    // partial permutation forced by already-colored vertices
    let mut forced: Vec<Option<usize>> = vec![None; dim + 1];
    let mut used = vec![false; dim + 1];
    for (x, c) in local.iter().enumerate() {
        if let (Some(from), Some(to)) = (*c, global[x]) {
            match forced[from] {
                Some(t) if t != to => return false,
                Some(_) => {}
                None => {
                    if used[to] {
                        return false;
                    }
                    forced[from] = Some(to);
                    used[to] = true;
                }
            }
        }
    }

    let mut perm = forced.clone();
    let snapshot = global.clone();
    let mut found = false;
    complete_permutations(&mut perm, &mut used, 0, &mut |perm: &[Option<usize>]| {
        for (x, c) in local.iter().enumerate() {
            if let Some(from) = c {
                global[x] = perm[*from];
            }
        }
        if assign_cluster(dim, locals, rest, global) {
            found = true;
            return true;
        }
        global.clone_from(&snapshot);
        false
    });
    found
}

/// Visits completions of a partial permutation in lexicographic order until
/// `visit` returns true.
fn complete_permutations(
    perm: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    pos: usize,
    visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
) -> bool {
    if pos == perm.len() {
        return visit(perm);
    }
    if perm[pos].is_some() {
        return complete_permutations(perm, used, pos + 1, visit);
    }
    for target in 0..used.len() {
        if used[target] {
            continue;
        }
        used[target] = true;
        perm[pos] = Some(target);
        if complete_permutations(perm, used, pos + 1, visit) {
            return true;
        }
        perm[pos] = None;
        used[target] = false;
    }
    false
}
