//! The push invariant as an element of `Z_m^n`.
//!
//! Color `k < n` contributes the basis vector `e_k`; color `n` contributes
//! the all-`(m-1)` vector, so the `n + 1` color vectors of any region sum to
//! zero and a push never changes the label-weighted total.

use std::fmt;

use crate::coloring::{require_proper, Coloring};
use crate::error::{check_dims, Error, Result};
use crate::graph::SimplexGraph;
use crate::labeling::{add_mod, check_modulus, Labeling};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantValue {
    modulus: u64,
    coords: Vec<u64>,
}

impl InvariantValue {
    pub fn zero(dim: usize, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            modulus,
            coords: vec![0; dim],
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    fn add_scaled(&mut self, other: &InvariantValue, scale: u64) {
        let m = self.modulus as u128;
        for (a, &b) in self.coords.iter_mut().zip(&other.coords) {
            *a = ((*a as u128 + b as u128 * scale as u128) % m) as u64;
        }
    }

    pub fn add(&self, other: &InvariantValue) -> InvariantValue {
        let mut out = self.clone();
        for (a, &b) in out.coords.iter_mut().zip(&other.coords) {
            *a = add_mod(*a, b, self.modulus);
        }
        out
    }

    /// Injective byte encoding of `(m, coords)`.
    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + 8 * self.coords.len());
        out.extend_from_slice(&self.modulus.to_be_bytes());
        out.extend_from_slice(&(self.coords.len() as u64).to_be_bytes());
        for c in &self.coords {
            out.extend_from_slice(&c.to_be_bytes());
        }
        out
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(u64::to_string).collect();
        write!(f, "({}) mod {}", coords.join(", "), self.modulus)
    }
}

/// Additive image of the generator for `color`.
pub fn color_vector(color: usize, dim: usize, modulus: u64) -> Result<InvariantValue> {
    check_modulus(modulus)?;
    if color > dim {
        return Err(Error::ColorOutOfRange { color, max: dim });
    }
    let coords = if color < dim {
        let mut v = vec![0; dim];
        v[color] = 1;
        v
    } else {
        vec![modulus - 1; dim]
    };
    Ok(InvariantValue { modulus, coords })
}

/// `Σ_v l(v)·color_vector(c(v)) mod m`. The coloring must be proper.
pub fn compute_invariant(g: &SimplexGraph, c: &Coloring, l: &Labeling) -> Result<InvariantValue> {
    check_dims(g.vertex_count(), l.len())?;
    require_proper(g, c)?;
    let dim = g.dim();
    let m = l.modulus();
    let generators = (0..=dim)
        .map(|k| color_vector(k, dim, m))
        .collect::<Result<Vec<_>>>()?;
    let mut total = InvariantValue::zero(dim, m)?;
    for (vertex, &label) in l.values().iter().enumerate() {
        if label != 0 {
            total.add_scaled(&generators[c.color(vertex)], label);
        }
    }
    Ok(total)
}

/// Canonical key of the label-equivalence class of `l`.
pub fn class_key(g: &SimplexGraph, c: &Coloring, l: &Labeling) -> Result<Vec<u8>> {
    Ok(compute_invariant(g, c, l)?.key())
}
