//! Balanced multigraded polynomials stored as dense coefficient tensors.
//!
//! A balanced polynomial in `d` color classes with `n_i` variables of color
//! `i` has exactly one variable of each color in every monomial, so it is a
//! `d`-way tensor of shape `(n_1, ..., n_d)`. All indices in this API are
//! 0-based; the text format and `Display` impls use 1-based indices.

pub mod text;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

/// Maximum number of color classes (color sets are `u32` bitmasks).
pub const MAX_COLORS: usize = 30;

/// `i mod k` with representative in `{1, ..., k}`; multiples of `k` map to `k`.
pub fn mod_rep(i: i64, k: i64) -> Result<i64> {
    if k <= 0 {
        return Err(Error::InvalidArgument(format!(
            "modulus {k} must be positive"
        )));
    }
    Ok((i - 1).rem_euclid(k) + 1)
}

/// Variable counts per color class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    n: Vec<usize>,
}

impl Shape {
    pub fn new(n: Vec<usize>) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::InvalidArgument(
                "shape needs at least one color".into(),
            ));
        }
        if n.len() > MAX_COLORS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_COLORS} colors supported, got {}",
                n.len()
            )));
        }
        if let Some(i) = n.iter().position(|&v| v == 0) {
            return Err(Error::InvalidArgument(format!(
                "color {} has no variables",
                i + 1
            )));
        }
        Ok(Shape { n })
    }

    /// Shape `(k, k, k, k)`.
    pub fn square(k: usize) -> Result<Self> {
        Shape::new(vec![k; 4])
    }

    pub fn d(&self) -> usize {
        self.n.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.n
    }

    /// Number of coefficients, `∏ n_i`.
    pub fn size(&self) -> usize {
        self.n.iter().product()
    }

    /// `dim R_{e_S} = ∏_{k ∈ S} n_k`.
    pub fn component_dim(&self, s: ColorSet) -> usize {
        s.colors().map(|c| self.n[c]).product()
    }

    /// Row-major offset of an index tuple (color 1 most significant).
    pub fn offset(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.d() {
            return Err(Error::IndexError(format!(
                "tuple has {} entries, shape has {} colors",
                tuple.len(),
                self.d()
            )));
        }
        let mut off = 0;
        for (c, (&j, &n)) in tuple.iter().zip(&self.n).enumerate() {
            if j >= n {
                return Err(Error::IndexError(format!(
                    "index {} out of range 1..={n} for color {}",
                    j + 1,
                    c + 1
                )));
            }
            off = off * n + j;
        }
        Ok(off)
    }

    pub fn tuple(&self, mut offset: usize) -> Vec<usize> {
        let mut t = vec![0; self.d()];
        for (slot, &n) in t.iter_mut().zip(&self.n).rev() {
            *slot = offset % n;
            offset /= n;
        }
        t
    }

    /// All index tuples in lexicographic order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.size()).map(|o| self.tuple(o))
    }

    fn without(&self, color: usize) -> Shape {
        let mut n = self.n.clone();
        n.remove(color);
        Shape { n }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.n.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The variable `x_{color, index}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub color: usize,
    pub index: usize,
}

impl VarId {
    pub fn new(color: usize, index: usize) -> Self {
        VarId { color, index }
    }
}

/// A subset of the colors `{0, ..., d-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(d: usize) -> Self {
        assert!(d <= MAX_COLORS);
        ColorSet(((1u64 << d) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn from_colors(colors: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &c in colors {
            if c >= MAX_COLORS {
                return Err(Error::IndexError(format!("color {} out of range", c + 1)));
            }
            bits |= 1 << c;
        }
        Ok(ColorSet(bits))
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn contains(&self, color: usize) -> bool {
        color < 32 && self.0 >> color & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_within(&self, d: usize) -> bool {
        self.0 & !ColorSet::full(d).0 == 0
    }

    pub fn complement(&self, d: usize) -> ColorSet {
        ColorSet(!self.0 & ColorSet::full(d).0)
    }

    pub fn insert(&self, color: usize) -> ColorSet {
        ColorSet(self.0 | 1 << color)
    }

    pub fn remove(&self, color: usize) -> ColorSet {
        ColorSet(self.0 & !(1 << color))
    }

    /// Member colors in ascending order.
    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(|&c| self.contains(c))
    }

    /// All subsets of `{0..d}` ordered by size, then lexicographically by
    /// sorted color list.
    pub fn all_by_size(d: usize) -> Vec<ColorSet> {
        let mut v: Vec<ColorSet> = (0..1u64 << d).map(|b| ColorSet(b as u32)).collect();
        v.sort_by_key(|s| (s.len(), s.colors().collect::<Vec<_>>()));
        v
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors().map(|c| (c + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.colors().map(|c| c + 1))
    }
}

/// A balanced polynomial: the dense coefficient tensor of
/// `Σ a_{j_1..j_d} x_{1,j_1} ⋯ x_{d,j_d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedPoly {
    shape: Shape,
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl BalancedPoly {
    pub fn zero(shape: Shape, field: FieldSpec) -> Self {
        let coeffs = vec![field.zero(); shape.size()];
        BalancedPoly {
            shape,
            field,
            coeffs,
        }
    }

    /// Sums `terms` into a tensor. Repeated tuples add in the field.
    pub fn from_terms<I, T>(shape: Shape, field: FieldSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Scalar, T)>,
        T: AsRef<[usize]>,
    {
        let mut f = BalancedPoly::zero(shape, field);
        for (c, tuple) in terms {
            let c = field.coerce(&c)?;
            let off = f.shape.offset(tuple.as_ref())?;
            f.coeffs[off] = &f.coeffs[off] + &c;
        }
        Ok(f)
    }

    /// Wraps a coefficient vector in lexicographic tuple order.
    pub fn from_coeffs(shape: Shape, field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != shape.size() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for shape {shape} of size {}",
                coeffs.len(),
                shape.size()
            )));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::mismatch(field, bad.field()));
        }
        Ok(BalancedPoly {
            shape,
            field,
            coeffs,
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn d(&self) -> usize {
        self.shape.d()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, tuple: &[usize]) -> Result<&Scalar> {
        Ok(&self.coeffs[self.shape.offset(tuple)?])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Nonzero terms in lexicographic tuple order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(o, c)| (self.shape.tuple(o), c))
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, s: &Scalar) -> BalancedPoly {
        BalancedPoly {
            shape: self.shape.clone(),
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `∂f/∂x_v`: the slice of the tensor at `index(v)` along `color(v)`.
    /// The result has that color removed, so a second derivative in the
    /// same color cannot be expressed.
    pub fn partial_derivative(&self, v: VarId) -> Result<BalancedPoly> {
        if v.color >= self.d() {
            return Err(Error::IndexError(format!(
                "color {} out of range 1..={}",
                v.color + 1,
                self.d()
            )));
        }
        let n = self.shape.n[v.color];
        if v.index >= n {
            return Err(Error::IndexError(format!(
                "index {} out of range 1..={n} for color {}",
                v.index + 1,
                v.color + 1
            )));
        }
        let outer: usize = self.shape.n[..v.color].iter().product();
        let inner: usize = self.shape.n[v.color + 1..].iter().product();
        let mut coeffs = Vec::with_capacity(outer * inner);
        for o in 0..outer {
            let base = (o * n + v.index) * inner;
            coeffs.extend_from_slice(&self.coeffs[base..base + inner]);
        }
        Ok(BalancedPoly {
            shape: self.shape.without(v.color),
            field: self.field,
            coeffs,
        })
    }

    /// The `S`-flattening: rows are tuples over the colors of `S`, columns
    /// tuples over the remaining colors, both lexicographic by ascending color.
    pub fn flatten(&self, s: ColorSet) -> Result<FlatteningMatrix> {
        let d = self.d();
        if !s.is_within(d) {
            return Err(Error::IndexError(format!(
                "color set {s} not within 1..={d}"
            )));
        }
        let rows = self.shape.component_dim(s);
        let cols = self.shape.component_dim(s.complement(d));
        let mut data = vec![self.field.zero(); rows * cols];
        for (off, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = self.shape.tuple(off);
            let (mut r, mut col) = (0, 0);
            for (color, &j) in t.iter().enumerate() {
                let n = self.shape.n[color];
                if s.contains(color) {
                    r = r * n + j;
                } else {
                    col = col * n + j;
                }
            }
            data[r * cols + col] = c.clone();
        }
        Ok(FlatteningMatrix {
            row_colors: s,
            matrix: Matrix::from_parts(self.field, rows, cols, data),
        })
    }

    /// `H(f, S)`: the dimension of the span of all derivatives of `f` taken
    /// once in each color of `S`.
    pub fn h_value(&self, s: ColorSet) -> Result<usize> {
        Ok(self.flatten(s)?.rank())
    }
}

/// A flattening of a coefficient tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatteningMatrix {
    row_colors: ColorSet,
    matrix: Matrix,
}

impl FlatteningMatrix {
    pub fn row_colors(&self) -> ColorSet {
        self.row_colors
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// True when every row and every column holds exactly one nonzero
    /// entry, and that entry is 1.
    pub fn is_permutation(&self) -> bool {
        let m = &self.matrix;
        if m.rows() != m.cols() {
            return false;
        }
        let mut col_hits = vec![0usize; m.cols()];
        for r in 0..m.rows() {
            let mut hits = 0;
            for (c, v) in m.row(r).iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                if !v.is_one() {
                    return false;
                }
                hits += 1;
                col_hits[c] += 1;
            }
            if hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&h| h == 1)
    }
}
