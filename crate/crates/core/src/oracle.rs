//! Brute-force ground truth for tiny instances.
//!
//! Nothing here touches the incidence matrix: orbits are closed under single
//! pushes via [`apply_push`], and solution counts walk every push bag with an
//! odometer that also advances by single pushes. Inputs past the size guards
//! are refused with [`Error::TooLarge`].

use std::collections::VecDeque;

use sha2::{Digest, Sha256};

use crate::error::{check_dims, check_moduli, Error, Result};
use crate::graph::SimplexGraph;
use crate::labeling::{apply_push, check_modulus, Labeling};

/// Guard on `m^v` for orbit enumeration and on `m^r` for solution counting.
pub const ENUMERATION_LIMIT: u128 = 1 << 20;
/// Guard on `m^v` for partitioning every labeling.
pub const PARTITION_LIMIT: u128 = 1 << 16;

fn guarded_power(base: u64, exp: usize, limit: u128) -> Result<u64> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > limit {
            return Err(Error::TooLarge { size: acc, limit });
        }
    }
    Ok(acc as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Size of the orbit of the starting labeling (the zero labeling when
    /// partitioning).
    pub orbit_size: u64,
    /// Sorted sizes of the orbits found.
    pub class_partition_sizes: Vec<u64>,
    /// SHA-256 hex digest of that orbit's sorted labeling codes.
    pub reachable_set_hash: String,
}

/// Push-orbit of one labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    modulus: u64,
    vertex_count: usize,
    codes: Vec<u64>,
    pub report: OrbitReport,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains(&self, l: &Labeling) -> bool {
        l.modulus() == self.modulus
            && l.len() == self.vertex_count
            && l.code()
                .is_some_and(|c| self.codes.binary_search(&c).is_ok())
    }

    /// Members in increasing code order.
    pub fn labelings(&self) -> impl Iterator<Item = Labeling> + '_ {
        self.codes.iter().map(move |&c| {
            Labeling::from_code(self.modulus, self.vertex_count, c).expect("valid modulus")
        })
    }
}

/// Orbit partition of every labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub report: OrbitReport,
    /// Orbit id per labeling code; ids number orbits by their smallest code.
    pub class_of: Vec<u32>,
}

impl Partition {
    pub fn class_count(&self) -> usize {
        self.report.class_partition_sizes.len()
    }

    pub fn same_orbit(&self, a: &Labeling, b: &Labeling) -> bool {
        match (a.code(), b.code()) {
            (Some(x), Some(y)) => self.class_of[x as usize] == self.class_of[y as usize],
            _ => false,
        }
    }
}

fn digest(modulus: u64, vertex_count: usize, codes: &[u64]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(modulus.to_le_bytes());
    hasher.update((vertex_count as u64).to_le_bytes());
    for c in codes {
        hasher.update(c.to_le_bytes());
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Breadth-first closure of `start` under single pushes.
fn closure(
    g: &SimplexGraph,
    start: &Labeling,
    mut visit: impl FnMut(u64) -> bool,
) -> Result<Vec<u64>> {
    let start_code = start.code().expect("guarded size");
    let mut members = vec![start_code];
    visit(start_code);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for region in 0..g.region_count() {
            let next = apply_push(&cur, g, region, 1)?;
            let code = next.code().expect("guarded size");
            if visit(code) {
                members.push(code);
                queue.push_back(next);
            }
        }
    }
    members.sort_unstable();
    Ok(members)
}

/// Every labeling reachable from `l0` by pushes.
pub fn enumerate_orbit(g: &SimplexGraph, l0: &Labeling) -> Result<Orbit> {
    check_dims(g.vertex_count(), l0.len())?;
    let m = l0.modulus();
    let total = guarded_power(m, g.vertex_count(), ENUMERATION_LIMIT)?;
    let mut seen = vec![false; total as usize];
    let codes = closure(g, l0, |c| !std::mem::replace(&mut seen[c as usize], true))?;
    let size = codes.len() as u64;
    Ok(Orbit {
        modulus: m,
        vertex_count: g.vertex_count(),
        report: OrbitReport {
            orbit_size: size,
            class_partition_sizes: vec![size],
            reachable_set_hash: digest(m, g.vertex_count(), &codes),
        },
        codes,
    })
}

/// Number of push bags `x ∈ Z_m^r` with `l1 + A·x ≡ l2`.
pub fn count_solutions_brute(g: &SimplexGraph, l1: &Labeling, l2: &Labeling) -> Result<u64> {
    check_moduli(l1.modulus(), l2.modulus())?;
    check_dims(g.vertex_count(), l1.len())?;
    check_dims(g.vertex_count(), l2.len())?;
    let m = l1.modulus();
    let total = guarded_power(m, g.region_count(), ENUMERATION_LIMIT)?;
    let r = g.region_count();

    // odometer over exponents; every increment is one push, wrap-arounds
    // included (m pushes restore the labels)
    let mut digits = vec![0u64; r];
    let mut current = l1.clone();
    let mut count = 0;
    for _ in 0..total {
        if &current == l2 {
            count += 1;
        }
        for (region, digit) in digits.iter_mut().enumerate() {
            current = apply_push(&current, g, region, 1)?;
            *digit += 1;
            if *digit < m {
                break;
            }
            *digit = 0;
        }
    }
    Ok(count)
}

/// Splits all `m^v` labelings into push-orbits.
pub fn partition_all_labelings(g: &SimplexGraph, modulus: u64) -> Result<Partition> {
    check_modulus(modulus)?;
    let v = g.vertex_count();
    let total = guarded_power(modulus, v, PARTITION_LIMIT)?;
    let mut class_of = vec![u32::MAX; total as usize];
    let mut sizes = Vec::new();
    let mut zero_report = None;
    for code in 0..total {
        if class_of[code as usize] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        let start = Labeling::from_code(modulus, v, code)?;
        let members = closure(g, &start, |c| {
            let slot = &mut class_of[c as usize];
            if *slot == u32::MAX {
                *slot = id;
                true
            } else {
                false
            }
        })?;
        if code == 0 {
            zero_report = Some((members.len() as u64, digest(modulus, v, &members)));
        }
        sizes.push(members.len() as u64);
    }
    let (orbit_size, reachable_set_hash) = zero_report.expect("code 0 is always visited");
    sizes.sort_unstable();
    Ok(Partition {
        report: OrbitReport {
            orbit_size,
            class_partition_sizes: sizes,
            reachable_set_hash,
        },
        class_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{apply_push_vector, PushVector};

    fn graph(n: usize, v: usize, regions: &[&[usize]]) -> SimplexGraph {
        SimplexGraph::new(n, v, regions.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn k4() -> SimplexGraph {
        graph(2, 4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    #[test]
    fn orbit_examples() {
        let t = graph(2, 3, &[&[0, 1, 2]]);
        let o = enumerate_orbit(&t, &Labeling::zeros(2, 3).unwrap()).unwrap();
        let members: Vec<Labeling> = o.labelings().collect();
        assert_eq!(
            members,
            vec![
                Labeling::zeros(2, 3).unwrap(),
                Labeling::new(2, vec![1, 1, 1]).unwrap()
            ]
        );

        let s = graph(2, 4, &[&[0, 1, 2], &[1, 2, 3]]);
        let o = enumerate_orbit(&s, &Labeling::zeros(2, 4).unwrap()).unwrap();
        assert_eq!(o.len(), 4);
        // the four push bags give four distinct labelings
        for code in 0..4u64 {
            let x = PushVector::new(2, vec![code & 1, code >> 1]).unwrap();
            let l = apply_push_vector(&Labeling::zeros(2, 4).unwrap(), &s, &x).unwrap();
            assert!(o.contains(&l));
        }

        let o = enumerate_orbit(&k4(), &Labeling::zeros(2, 4).unwrap()).unwrap();
        assert_eq!(o.len(), 16);
    }

    #[test]
    fn solution_count_examples() {
        let t = graph(2, 3, &[&[0, 1, 2]]);
        let z = Labeling::zeros(2, 3).unwrap();
        assert_eq!(count_solutions_brute(&t, &z, &z).unwrap(), 1);
        let off = Labeling::new(2, vec![1, 0, 0]).unwrap();
        assert_eq!(count_solutions_brute(&t, &z, &off).unwrap(), 0);
    }

    #[test]
    fn partition_examples() {
        let t = graph(2, 3, &[&[0, 1, 2]]);
        let p = partition_all_labelings(&t, 2).unwrap();
        assert_eq!(p.report.class_partition_sizes, vec![2, 2, 2, 2]);

        let s = graph(2, 4, &[&[0, 1, 2], &[1, 2, 3]]);
        let p = partition_all_labelings(&s, 3).unwrap();
        assert_eq!(p.report.class_partition_sizes, vec![9; 9]);

        let p = partition_all_labelings(&k4(), 2).unwrap();
        assert_eq!(p.report.class_partition_sizes, vec![16]);
    }

    #[test]
    fn guards() {
        let big = crate::generators::triangular_board(6).unwrap();
        // 2^21 labelings
        assert!(matches!(
            enumerate_orbit(&big, &Labeling::zeros(2, 21).unwrap()),
            Err(Error::TooLarge { .. })
        ));
        let mid = crate::generators::triangular_board(5).unwrap();
        assert!(matches!(
            partition_all_labelings(&mid, 3),
            Err(Error::TooLarge { .. })
        ));
        let z = Labeling::zeros(3, 21).unwrap();
        assert!(matches!(
            count_solutions_brute(&big, &z, &z),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn digest_is_stable() {
        let t = graph(2, 3, &[&[0, 1, 2]]);
        let a = enumerate_orbit(&t, &Labeling::zeros(2, 3).unwrap()).unwrap();
        let b = enumerate_orbit(&t, &Labeling::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(a.report.reachable_set_hash, b.report.reachable_set_hash);
        assert_eq!(a.report.reachable_set_hash.len(), 64);
    }
}
