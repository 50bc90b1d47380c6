//! Game states and the push action.

use crate::error::{check_dims, check_moduli, Error, Result};
use crate::graph::SimplexGraph;

/// Reduces a signed amount into `[0, m)`.
pub(crate) fn reduce(amount: i64, modulus: u64) -> u64 {
    (amount as i128).rem_euclid(modulus as i128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 + b as u128) % modulus as u128) as u64
}

pub(crate) fn check_modulus(modulus: u64) -> Result<()> {
    if modulus >= 2 {
        Ok(())
    } else {
        Err(Error::InvalidModulus(modulus))
    }
}

fn check_residues(values: &[u64], modulus: u64) -> Result<()> {
    check_modulus(modulus)?;
    match values.iter().position(|&x| x >= modulus) {
        Some(index) => Err(Error::ResidueOutOfRange {
            index,
            value: values[index],
            modulus,
        }),
        None => Ok(()),
    }
}

/// Per-vertex residues mod `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    modulus: u64,
    values: Vec<u64>,
}

impl Labeling {
    pub fn new(modulus: u64, values: Vec<u64>) -> Result<Self> {
        check_residues(&values, modulus)?;
        Ok(Self { modulus, values })
    }

    pub fn zeros(modulus: u64, len: usize) -> Result<Self> {
        Self::new(modulus, vec![0; len])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub(crate) fn check_graph(&self, g: &SimplexGraph) -> Result<()> {
        check_dims(g.vertex_count(), self.values.len())
    }

    /// Componentwise sum mod `m`.
    pub fn add(&self, other: &Labeling) -> Result<Labeling> {
        check_moduli(self.modulus, other.modulus)?;
        check_dims(self.values.len(), other.values.len())?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| add_mod(a, b, self.modulus))
            .collect();
        Ok(Labeling {
            modulus: self.modulus,
            values,
        })
    }

    /// Componentwise difference `self - other` mod `m`.
    pub fn sub(&self, other: &Labeling) -> Result<Labeling> {
        check_moduli(self.modulus, other.modulus)?;
        check_dims(self.values.len(), other.values.len())?;
        let m = self.modulus;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| add_mod(a, m - b, m))
            .collect();
        Ok(Labeling { modulus: m, values })
    }

    /// Adds `amount` at a single vertex.
    pub fn shift(&self, vertex: usize, amount: i64) -> Result<Labeling> {
        if vertex >= self.values.len() {
            return Err(Error::IndexOutOfRange {
                index: vertex,
                limit: self.values.len(),
            });
        }
        let mut values = self.values.clone();
        values[vertex] = add_mod(values[vertex], reduce(amount, self.modulus), self.modulus);
        Ok(Labeling {
            modulus: self.modulus,
            values,
        })
    }

    /// Mixed-radix code of the labeling, vertex 0 least significant.
    /// `None` on overflow.
    pub fn code(&self) -> Option<u64> {
        self.values.iter().rev().try_fold(0u64, |acc, &x| {
            acc.checked_mul(self.modulus)?.checked_add(x)
        })
    }

    /// Inverse of [`Labeling::code`].
    pub fn from_code(modulus: u64, len: usize, mut code: u64) -> Result<Labeling> {
        check_modulus(modulus)?;
        let mut values = Vec::with_capacity(len);
        for _ in 0..len {
            values.push(code % modulus);
            code /= modulus;
        }
        Ok(Labeling { modulus, values })
    }

    pub(crate) fn values_mut(&mut self) -> &mut [u64] {
        &mut self.values
    }
}

/// Per-region push exponents mod `m`: a commutative bag of pushes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PushVector {
    modulus: u64,
    exponents: Vec<u64>,
}

impl PushVector {
    pub fn new(modulus: u64, exponents: Vec<u64>) -> Result<Self> {
        check_residues(&exponents, modulus)?;
        Ok(Self { modulus, exponents })
    }

    pub fn zeros(modulus: u64, len: usize) -> Result<Self> {
        Self::new(modulus, vec![0; len])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &PushVector) -> Result<PushVector> {
        check_moduli(self.modulus, other.modulus)?;
        check_dims(self.exponents.len(), other.exponents.len())?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| add_mod(a, b, self.modulus))
            .collect();
        Ok(PushVector {
            modulus: self.modulus,
            exponents,
        })
    }

    pub fn neg(&self) -> PushVector {
        let m = self.modulus;
        PushVector {
            modulus: m,
            exponents: self.exponents.iter().map(|&e| (m - e) % m).collect(),
        }
    }

    /// One step per nonzero exponent, in region order.
    pub fn to_sequence(&self) -> PushSequence {
        PushSequence {
            modulus: self.modulus,
            steps: self
                .exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(r, &e)| (r, e))
                .collect(),
        }
    }
}

/// An ordered word of pushes `(region, exponent)` with exponents in `[1, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PushSequence {
    modulus: u64,
    steps: Vec<(usize, u64)>,
}

impl PushSequence {
    pub fn new(modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            modulus,
            steps: Vec::new(),
        })
    }

    pub fn from_steps(modulus: u64, steps: Vec<(usize, u64)>) -> Result<Self> {
        let mut seq = Self::new(modulus)?;
        for (region, exponent) in steps {
            seq.push(region, exponent as i64);
        }
        Ok(seq)
    }

    /// Appends a push; the exponent is reduced mod `m` and dropped when zero.
    pub fn push(&mut self, region: usize, exponent: i64) {
        let e = reduce(exponent, self.modulus);
        if e != 0 {
            self.steps.push((region, e));
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn steps(&self) -> &[(usize, u64)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Sums exponents per region.
    pub fn collapse(&self, region_count: usize) -> Result<PushVector> {
        let mut exponents = vec![0u64; region_count];
        for &(region, e) in &self.steps {
            if region >= region_count {
                return Err(Error::IndexOutOfRange {
                    index: region,
                    limit: region_count,
                });
            }
            exponents[region] = add_mod(exponents[region], e, self.modulus);
        }
        Ok(PushVector {
            modulus: self.modulus,
            exponents,
        })
    }

    /// Applies the steps one at a time, in order.
    pub fn apply(&self, l: &Labeling, g: &SimplexGraph) -> Result<Labeling> {
        check_moduli(l.modulus(), self.modulus)?;
        self.steps.iter().try_fold(l.clone(), |acc, &(region, e)| {
            apply_push(&acc, g, region, e as i64)
        })
    }
}

/// Adds `times` (mod `m`) to every vertex of one region.
pub fn apply_push(l: &Labeling, g: &SimplexGraph, region: usize, times: i64) -> Result<Labeling> {
    l.check_graph(g)?;
    g.check_region(region)?;
    let m = l.modulus();
    let step = reduce(times, m);
    let mut out = l.clone();
    let values = out.values_mut();
    for &x in g.region(region) {
        values[x] = add_mod(values[x], step, m);
    }
    Ok(out)
}

/// Applies every push of `x` at once: `l + A·x mod m`.
pub fn apply_push_vector(l: &Labeling, g: &SimplexGraph, x: &PushVector) -> Result<Labeling> {
    l.check_graph(g)?;
    check_dims(g.region_count(), x.len())?;
    check_moduli(l.modulus(), x.modulus())?;
    let m = l.modulus();
    let mut out = l.clone();
    let values = out.values_mut();
    for (region, &e) in x.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        for &v in g.region(region) {
            values[v] = add_mod(values[v], e, m);
        }
    }
    Ok(out)
}
