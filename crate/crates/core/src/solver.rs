//! Reachability between labelings and construction of push solutions.
//!
//! Two independent backends:
//!
//! * [`solve_linear`] treats a push bag as `x ∈ Z_m^r` acting by
//!   `l ↦ l + A·x`, where `A` is the vertex-by-region incidence matrix, and
//!   solves `A·x ≡ l2 − l1 (mod m)` through the Smith normal form of `A` over
//!   the integers. It works for any modulus and any graph.
//! * [`solve_region_paths`] is the constructive route for region-connected
//!   graphs with a proper `(n+1)`-coloring: per color it walks region-paths,
//!   pushing adjacent pairs by `p` and `m − p` so that only the two exchanged
//!   vertices of that color move, funnels every discrepancy into a common
//!   root region, and finishes with a single push there.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive};

use crate::coloring::{first_improper_region, Coloring};
use crate::error::{check_dims, check_moduli, Error, Result};
use crate::graph::SimplexGraph;
use crate::invariant::compute_invariant;
use crate::labeling::{add_mod, Labeling, PushSequence, PushVector};
use crate::linalg::{smith_normal_form, solve_congruence, Matrix, Scalar, SmithForm};

/// Vertex-by-region 0/1 incidence matrix in any integer scalar.
pub fn incidence_as<T: Scalar>(g: &SimplexGraph) -> Matrix<T> {
    let mut a = Matrix::zeros(g.vertex_count(), g.region_count());
    for (j, region) in g.regions().iter().enumerate() {
        for &x in region {
            a[(x, j)] = T::one();
        }
    }
    a
}

/// Vertex-by-region incidence matrix over arbitrary-precision integers.
pub fn incidence(g: &SimplexGraph) -> Matrix<BigInt> {
    incidence_as(g)
}

/// Every push bag mapping one labeling to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub feasible: bool,
    pub particular: Option<PushVector>,
    /// Generators of the push bags that fix every labeling.
    pub kernel_basis: Vec<PushVector>,
    /// Size of that kernel subgroup; the number of solutions when feasible.
    pub solution_count: BigUint,
}

/// Image and kernel sizes of the push action over `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSizes {
    /// Labelings reachable from any one labeling.
    pub orbit_size: BigUint,
    /// Push bags acting trivially.
    pub kernel_size: BigUint,
}

/// Orbit and kernel sizes from a Smith form of the incidence matrix.
pub fn action_sizes(snf: &SmithForm<BigInt>, region_count: usize, modulus: u64) -> ActionSizes {
    let m = BigInt::from(modulus);
    let mut orbit = BigUint::one();
    let mut kernel = BigUint::from(modulus).pow((region_count - snf.rank()) as u32);
    for d in snf.invariant_factors() {
        let g = num_integer::Integer::gcd(d, &m);
        let g = g.to_biguint().expect("gcd is positive");
        orbit *= BigUint::from(modulus) / &g;
        kernel *= g;
    }
    ActionSizes {
        orbit_size: orbit,
        kernel_size: kernel,
    }
}

pub(crate) fn to_residues(values: Vec<BigInt>) -> Vec<u64> {
    values
        .into_iter()
        .map(|x| {
            debug_assert!(x.sign() != Sign::Minus);
            x.to_u64().expect("residue fits the modulus")
        })
        .collect()
}

/// Solves `A·x ≡ l2 − l1 (mod m)`.
pub fn solve_linear(g: &SimplexGraph, l1: &Labeling, l2: &Labeling) -> Result<SolutionSet> {
    check_moduli(l1.modulus(), l2.modulus())?;
    check_dims(g.vertex_count(), l1.len())?;
    check_dims(g.vertex_count(), l2.len())?;
    let snf = smith_normal_form(&incidence(g));
    solve_linear_with(g, &snf, l1, l2)
}

/// [`solve_linear`] reusing a precomputed Smith form of the incidence matrix.
pub fn solve_linear_with(
    g: &SimplexGraph,
    snf: &SmithForm<BigInt>,
    l1: &Labeling,
    l2: &Labeling,
) -> Result<SolutionSet> {
    check_moduli(l1.modulus(), l2.modulus())?;
    check_dims(g.vertex_count(), l1.len())?;
    check_dims(g.vertex_count(), l2.len())?;
    let modulus = l1.modulus();
    let diff = l2.sub(l1)?;
    let b: Vec<BigInt> = diff.values().iter().map(|&x| BigInt::from(x)).collect();
    let m = BigInt::from(modulus);
    let sol = solve_congruence(snf, &b, &m);

    let particular = sol
        .particular
        .map(|x| PushVector::new(modulus, to_residues(x)))
        .transpose()?;
    let kernel_basis = sol
        .kernel
        .into_iter()
        .map(|x| PushVector::new(modulus, to_residues(x)))
        .filter(|x| x.as_ref().map_or(true, |v| !v.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    let sizes = action_sizes(snf, g.region_count(), modulus);
    Ok(SolutionSet {
        feasible: particular.is_some(),
        particular,
        kernel_basis,
        solution_count: sizes.kernel_size,
    })
}

/// Checks that `g` is region-connected and `c` is a proper coloring of it.
pub fn check_hypotheses(g: &SimplexGraph, c: &Coloring) -> Result<()> {
    let connectivity = g.region_components();
    if !connectivity.is_connected() {
        return Err(Error::HypothesisViolation(format!(
            "graph is not region-connected ({} components)",
            connectivity.components.len()
        )));
    }
    if c.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            found: c.len(),
        });
    }
    if let Some(region) = first_improper_region(g, c)? {
        return Err(Error::HypothesisViolation(format!(
            "coloring is not proper on region {region}"
        )));
    }
    Ok(())
}

/// Reachability by comparing invariants; exact under the hypotheses of
/// [`check_hypotheses`].
pub fn decide_by_invariant(
    g: &SimplexGraph,
    c: &Coloring,
    l1: &Labeling,
    l2: &Labeling,
) -> Result<bool> {
    check_hypotheses(g, c)?;
    check_moduli(l1.modulus(), l2.modulus())?;
    Ok(compute_invariant(g, c, l1)? == compute_invariant(g, c, l2)?)
}

/// A walk through regions; consecutive regions are adjacent. Crossing and
/// retracing are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionPath(pub Vec<usize>);

impl RegionPath {
    pub fn regions(&self) -> &[usize] {
        &self.0
    }

    pub fn is_valid(&self, g: &SimplexGraph) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&r| r < g.region_count())
            && self.0.windows(2).all(|w| g.are_adjacent(w[0], w[1]))
    }
}

/// The region-path used for one color.
///
/// `pairs` lists positions `i` such that `(path[i], path[i + 1])` is a push
/// pair: the vertex of `path[i]` missing from `path[i + 1]` and the vertex
/// of `path[i + 1]` missing from `path[i]` both carry `color`. The first
/// region of a pair takes exponent `p`, the second `m − p`. Steps between
/// pairs are travel and carry no pushes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPath {
    pub color: usize,
    pub path: RegionPath,
    pub pairs: Vec<usize>,
}

impl ColorPath {
    /// The path ends at `root`, its pairs exchange `color`, and every vertex
    /// of that color other than the root's is the leading private vertex of
    /// some pair.
    pub fn satisfies_conditions(&self, g: &SimplexGraph, c: &Coloring, root: usize) -> bool {
        let regions = self.path.regions();
        if !self.path.is_valid(g) || regions.last() != Some(&root) {
            return false;
        }
        let mut fixed = vec![false; g.vertex_count()];
        for &i in &self.pairs {
            if i + 1 >= regions.len() {
                return false;
            }
            let Some((out, into)) = g.exchange(regions[i], regions[i + 1]) else {
                return false;
            };
            if c.color(out) != self.color || c.color(into) != self.color {
                return false;
            }
            fixed[out] = true;
        }
        if self.pairs.windows(2).any(|w| w[1] < w[0] + 2) {
            return false;
        }
        let Some(&root_vertex) = g.region(root).iter().find(|&&x| c.color(x) == self.color) else {
            return false;
        };
        (0..g.vertex_count())
            .filter(|&x| c.color(x) == self.color && x != root_vertex)
            .all(|x| fixed[x])
    }
}

struct SpanningTree {
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl SpanningTree {
    fn bfs(g: &SimplexGraph, root: usize) -> SpanningTree {
        let adj = g.region_adjacency();
        let mut parent = vec![usize::MAX; g.region_count()];
        let mut depth = vec![usize::MAX; g.region_count()];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(cur) = queue.pop_front() {
            for &next in &adj[cur] {
                if depth[next] == usize::MAX {
                    depth[next] = depth[cur] + 1;
                    parent[next] = cur;
                    queue.push_back(next);
                }
            }
        }
        SpanningTree { parent, depth }
    }

    /// Tree walk from `from` to `to`, both endpoints included.
    fn walk(&self, from: usize, to: usize) -> Vec<usize> {
        let (mut a, mut b) = (from, to);
        let mut up = vec![a];
        let mut down = vec![b];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a];
            up.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b];
            down.push(b);
        }
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
            up.push(a);
            down.push(b);
        }
        down.pop();
        up.extend(down.into_iter().rev());
        up
    }
}

/// Root region shared by every color path.
pub const PATH_ROOT: usize = 0;

/// One region-path per color, all ending at region [`PATH_ROOT`].
///
/// For each color `j`, the vertices colored `j` are linked through spanning
/// tree edges of the region adjacency graph whose exchanged vertices are
/// colored `j`. A breadth-first tree over those links, rooted at the root
/// region's `j`-vertex, gives each other `j`-vertex one pair that moves its
/// discrepancy one link closer to the root. Pairs are visited deepest first,
/// joined by tree walks.
pub fn build_color_paths(g: &SimplexGraph, c: &Coloring) -> Result<Vec<ColorPath>> {
    check_hypotheses(g, c)?;
    let tree = SpanningTree::bfs(g, PATH_ROOT);
    let dim = g.dim();

    // tree edges as (child region, parent region, child private, parent private)
    let mut links: Vec<(usize, usize, usize, usize)> = Vec::new();
    for region in 0..g.region_count() {
        let parent = tree.parent[region];
        if parent == usize::MAX {
            continue;
        }
        let (out, into) = g.exchange(region, parent).expect("tree edges are adjacent");
        links.push((region, parent, out, into));
    }

    let mut paths = Vec::with_capacity(dim + 1);
    for color in 0..=dim {
        let root_vertex = *g
            .region(PATH_ROOT)
            .iter()
            .find(|&&x| c.color(x) == color)
            .expect("proper coloring uses every color on a region");

        let mut neighbours: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); g.vertex_count()];
        for &(child, parent, out, into) in &links {
            if c.color(out) == color {
                neighbours[out].push((into, child, parent));
                neighbours[into].push((out, parent, child));
            }
        }

        // (vertex, region holding it, region holding its link parent)
        let mut depth = vec![usize::MAX; g.vertex_count()];
        let mut pair_of: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
        depth[root_vertex] = 0;
        let mut queue = VecDeque::from([root_vertex]);
        while let Some(cur) = queue.pop_front() {
            for &(next, cur_region, next_region) in &neighbours[cur] {
                if depth[next] == usize::MAX {
                    depth[next] = depth[cur] + 1;
                    pair_of[next] = Some((next_region, cur_region));
                    queue.push_back(next);
                }
            }
        }
        let mut targets: Vec<usize> = (0..g.vertex_count())
            .filter(|&x| c.color(x) == color && x != root_vertex)
            .collect();
        if let Some(&x) = targets.iter().find(|&&x| depth[x] == usize::MAX) {
            return Err(Error::InternalCheckFailed(format!(
                "vertex {x} of color {color} is not linked to the root"
            )));
        }
        targets.sort_by(|&a, &b| depth[b].cmp(&depth[a]).then(a.cmp(&b)));

        let mut regions: Vec<usize> = Vec::new();
        let mut pairs = Vec::with_capacity(targets.len());
        for x in targets {
            let (lead, follow) = pair_of[x].expect("linked vertex has a pair");
            match regions.last() {
                None => regions.push(lead),
                Some(&cur) => regions.extend(tree.walk(cur, lead).into_iter().skip(1)),
            }
            pairs.push(regions.len() - 1);
            regions.push(follow);
        }
        match regions.last() {
            None => regions.push(PATH_ROOT),
            Some(&cur) => regions.extend(tree.walk(cur, PATH_ROOT).into_iter().skip(1)),
        }
        paths.push(ColorPath {
            color,
            path: RegionPath(regions),
            pairs,
        });
    }
    Ok(paths)
}

/// Constructs an explicit push word taking `l1` to `l2`, or `None` when the
/// invariants differ (no word exists).
///
/// The returned word is re-applied to `l1` before returning; a mismatch is
/// reported as [`Error::InternalCheckFailed`].
pub fn solve_region_paths(
    g: &SimplexGraph,
    c: &Coloring,
    l1: &Labeling,
    l2: &Labeling,
) -> Result<Option<PushSequence>> {
    check_moduli(l1.modulus(), l2.modulus())?;
    check_dims(g.vertex_count(), l1.len())?;
    check_dims(g.vertex_count(), l2.len())?;
    if !decide_by_invariant(g, c, l1, l2)? {
        return Ok(None);
    }
    let m = l1.modulus();
    let paths = build_color_paths(g, c)?;
    let mut seq = PushSequence::new(m)?;
    let mut current = l1.values().to_vec();
    let target = l2.values();

    let push = |seq: &mut PushSequence, current: &mut Vec<u64>, region: usize, e: u64| {
        seq.push(region, e as i64);
        for &x in g.region(region) {
            current[x] = add_mod(current[x], e, m);
        }
    };

    for color_path in &paths {
        let regions = color_path.path.regions();
        for &i in &color_path.pairs {
            let (lead, follow) = (regions[i], regions[i + 1]);
            let (x, _) = g.exchange(lead, follow).expect("pair regions are adjacent");
            let p = add_mod(target[x], m - current[x], m);
            if p != 0 {
                push(&mut seq, &mut current, lead, p);
                push(&mut seq, &mut current, follow, m - p);
            }
        }
    }

    let anchor = *g
        .region(PATH_ROOT)
        .iter()
        .find(|&&x| c.color(x) == 0)
        .expect("root region carries color 0");
    let q = add_mod(target[anchor], m - current[anchor], m);
    if q != 0 {
        push(&mut seq, &mut current, PATH_ROOT, q);
    }

    if current != target {
        return Err(Error::InternalCheckFailed(
            "region-path pushes did not reach the target labeling".into(),
        ));
    }
    if &seq.apply(l1, g)? != l2 {
        return Err(Error::InternalCheckFailed(
            "replayed push word does not reach the target labeling".into(),
        ));
    }
    Ok(Some(seq))
}

/// Rank of the incidence matrix over `Z_p` for prime `p`, by Gaussian
/// elimination (independent of the Smith form).
pub fn rank_mod_prime(g: &SimplexGraph, p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = (0..g.vertex_count())
        .map(|_| vec![0u64; g.region_count()])
        .collect();
    for (j, region) in g.regions().iter().enumerate() {
        for &x in region {
            rows[x][j] = 1 % p;
        }
    }
    let mut rank = 0;
    for col in 0..g.region_count() {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}
