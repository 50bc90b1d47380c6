#![allow(dead_code)]

use pushgame::{
    complete_plus, shared_vertex_chain, simplex_strip, triangular_board, Labeling, PushVector,
    SimplexGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generated boards that are region-connected and (n+1)-colorable.
pub fn hypothesis_suite() -> Vec<(String, SimplexGraph)> {
    let mut out = Vec::new();
    for rows in 2..=6 {
        out.push((
            format!("triangular {rows}"),
            triangular_board(rows).unwrap(),
        ));
    }
    for dim in 1..=4 {
        for length in 1..=5 {
            out.push((
                format!("strip {dim} {length}"),
                simplex_strip(dim, length).unwrap(),
            ));
        }
    }
    out
}

/// Every generator family, including boards that break the hypotheses.
pub fn full_suite() -> Vec<(String, SimplexGraph)> {
    let mut out = hypothesis_suite();
    for dim in 1..=4 {
        out.push((format!("kplus {dim}"), complete_plus(dim).unwrap()));
    }
    for count in 2..=4 {
        out.push((
            format!("chain {count}"),
            shared_vertex_chain(count).unwrap(),
        ));
    }
    out
}

pub fn random_labeling(rng: &mut impl Rng, m: u64, v: usize) -> Labeling {
    Labeling::new(m, (0..v).map(|_| rng.gen_range(0..m)).collect()).unwrap()
}

pub fn random_push(rng: &mut impl Rng, m: u64, r: usize) -> PushVector {
    PushVector::new(m, (0..r).map(|_| rng.gen_range(0..m)).collect()).unwrap()
}

pub fn graph(n: usize, v: usize, regions: &[&[usize]]) -> SimplexGraph {
    SimplexGraph::new(n, v, regions.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn pow(m: u64, e: usize) -> u64 {
    m.pow(e as u32)
}
