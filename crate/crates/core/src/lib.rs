//! Push games on n-simplex graphs with labels in `Z_m`.
//!
//! A [`SimplexGraph`] is a set of regions, each an `(n+1)`-subset of the
//! vertices. Pushing a region adds 1 (mod `m`) to every vertex in it. The
//! crate decides which labelings reach which, builds push sequences, counts
//! push-equivalence classes and checks colorability of the underlying graph.
//!
//! Exact linear algebra is generic over [`Scalar`]; [`IntMatrix`] and
//! [`SmithFormBig`] are the arbitrary-precision instances used by the
//! solver, [`Matrix64`] and [`SmithForm64`] the machine-word ones.

pub mod analysis;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod invariant;
pub mod labeling;
pub mod linalg;
pub mod oracle;
pub mod solver;
pub mod text;

pub use analysis::{
    class_report, decompose, moves_bound, planar_moves_bound, probe_colorability,
    probe_colorability_decomposed, vertex_shift, Certificate, ClassReport, ColorabilityVerdict,
    DecomposedVerdict, Decomposition, Verdict,
};
pub use coloring::{
    propagate_coloring, propagate_from, verify_coloring, ColorConflict, Coloring, ColoringFailure,
    StitchConflict,
};
pub use error::{Error, Result};
pub use generators::{
    complete_plus, memory_display, shared_vertex_chain, simplex_strip, triangular_board, BoardSpec,
    Face,
};
pub use graph::{Connectivity, SimplexGraph};
pub use invariant::{class_key, color_vector, compute_invariant, InvariantValue};
pub use labeling::{apply_push, apply_push_vector, Labeling, PushSequence, PushVector};
pub use linalg::{smith_normal_form, solve_congruence, Congruence, Matrix, Scalar, SmithForm};
pub use oracle::{
    count_solutions_brute, enumerate_orbit, partition_all_labelings, Orbit, OrbitReport, Partition,
};
pub use solver::{
    action_sizes, build_color_paths, check_hypotheses, decide_by_invariant, incidence,
    incidence_as, rank_mod_prime, solve_linear, solve_linear_with, solve_region_paths, ActionSizes,
    ColorPath, RegionPath, SolutionSet,
};
pub use text::GraphFile;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = Matrix<num_bigint::BigInt>;
/// Smith form over arbitrary-precision integers.
pub type SmithFormBig = SmithForm<num_bigint::BigInt>;
/// Machine-word integer matrix; entries can overflow on large inputs.
pub type Matrix64 = Matrix<i64>;
/// Smith form over machine words.
pub type SmithForm64 = SmithForm<i64>;
