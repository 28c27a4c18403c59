//! Exact rational linear algebra.
//!
//! Everything downstream reduces to a handful of kernels on dense rational
//! matrices: reduced row echelon form, rank, nullspace, particular solutions
//! and inverses. Pivoting is always "first nonzero entry, top to bottom", so
//! every basis this module returns is a deterministic function of its input.

mod matrix;
mod subspace;
mod tensor;

pub use matrix::{Echelon, Matrix};
pub use subspace::Subspace;
pub use tensor::Tensor3;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Coordinate vector over the rationals.
pub type Vector = Vec<Rational>;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the textual form `-?\d+(/\d+)?`. Returns `None` for anything else,
/// including a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

/// The `i`-th standard basis vector of length `len`.
pub fn unit_vector(len: usize, i: usize) -> Vector {
    let mut v = zero_vector(len);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(s: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

/// `acc += s * v`, skipping the work when `s` is zero.
pub fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Matrix of a linear map given as a closure on coordinates: column `c` is
/// the image of the `c`-th unit vector.
///
/// Every solver in the crate assembles its linear system this way, by
/// evaluating a residual that is linear in the unknowns.
pub fn matrix_of_linear_map<F>(inputs: usize, outputs: usize, map: F) -> Matrix
where
    F: Fn(&[Rational]) -> Vector,
{
    let mut m = Matrix::zeros(outputs, inputs);
    for c in 0..inputs {
        let image = map(&unit_vector(inputs, c));
        assert_eq!(image.len(), outputs, "linear map produced wrong length");
        for (r, x) in image.into_iter().enumerate() {
            if !x.is_zero() {
                m[(r, c)] = x;
            }
        }
    }
    m
}

/// Lowest-terms check, used by tests and by the file loader.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
