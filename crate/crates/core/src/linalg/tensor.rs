use std::collections::BTreeMap;

use num_traits::Zero;

use super::{zero_vector, Rational, Vector};

/// Sparse rank-3 rational tensor. Absent entries are zero and no zero is
/// ever stored, so two tensors are equal iff their entry maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    entries: BTreeMap<(usize, usize, usize), Rational>,
}

impl Tensor3 {
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        Tensor3 {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn check_index(&self, (i, j, k): (usize, usize, usize)) {
        assert!(
            i < self.dims.0 && j < self.dims.1 && k < self.dims.2,
            "tensor index ({i}, {j}, {k}) out of range {:?}",
            self.dims
        );
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.check_index((i, j, k));
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.check_index((i, j, k));
        if value.is_zero() {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), value);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        let v = self.get(i, j, k) + value;
        self.set(i, j, k, v);
    }

    /// Nonzero entries in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> {
        self.entries.iter().map(|(&idx, v)| (idx, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The vector `T(i, j, ·)`.
    pub fn fiber(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dims.2);
        for ((_, _, k), x) in self.entries.range((i, j, 0)..(i, j, self.dims.2)) {
            v[*k] = x.clone();
        }
        v
    }

    /// Overwrites the fiber `T(i, j, ·)`.
    pub fn set_fiber(&mut self, i: usize, j: usize, values: &[Rational]) {
        assert_eq!(values.len(), self.dims.2, "fiber has wrong length");
        for (k, x) in values.iter().enumerate() {
            self.set(i, j, k, x.clone());
        }
    }

    /// Bilinear evaluation `Σ u_i v_j T(i, j, ·)`.
    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Vector {
        assert_eq!(u.len(), self.dims.0, "left argument has wrong length");
        assert_eq!(v.len(), self.dims.1, "right argument has wrong length");
        let mut out = zero_vector(self.dims.2);
        for (&(i, j, k), x) in &self.entries {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            out[k] += &u[i] * &v[j] * x;
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Tensor3 {
        let mut out = Tensor3::zeros(self.dims);
        for (&(i, j, k), x) in &self.entries {
            out.set(i, j, k, s * x);
        }
        out
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims, "tensor sum shape mismatch");
        let mut out = self.clone();
        for ((i, j, k), x) in other.iter() {
            out.add_to(i, j, k, x);
        }
        out
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    /// Dense row-major flattening with index `(i * d1 + j) * d2 + k`.
    pub fn to_flat(&self) -> Vector {
        let (d0, d1, d2) = self.dims;
        let mut v = zero_vector(d0 * d1 * d2);
        for (&(i, j, k), x) in &self.entries {
            v[(i * d1 + j) * d2 + k] = x.clone();
        }
        v
    }

    pub fn from_flat(dims: (usize, usize, usize), flat: &[Rational]) -> Tensor3 {
        let (d0, d1, d2) = dims;
        assert_eq!(flat.len(), d0 * d1 * d2, "flat tensor has wrong length");
        let mut t = Tensor3::zeros(dims);
        for (idx, x) in flat.iter().enumerate() {
            if !x.is_zero() {
                t.entries
                    .insert((idx / (d1 * d2), (idx / d2) % d1, idx % d2), x.clone());
            }
        }
        t
    }
}
