//! Graded pieces of the annihilator of `f` under differentiation.
//!
//! Since `f` has degree one in every color, only multidegrees `e_S` (one
//! variable from each color of `S`) carry information. Every component of a
//! multidegree with some coordinate `>= 2` lies wholly inside `ann(f)` and is
//! not materialized.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::mpoly::{BalancedPoly, ColorSet, VarId};
use crate::verify::HilbertTable;

/// `ann(f)` in multidegree `e_S`, as coefficient vectors over the monomials
/// of that degree (lex order). The basis is in reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnComponent {
    pub set: ColorSet,
    pub basis: Vec<Vec<Scalar>>,
}

impl AnnComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The left kernel of the `S`-flattening.
pub fn ann_component(f: &BalancedPoly, s: ColorSet) -> Result<AnnComponent> {
    let flat = f.flatten(s)?;
    Ok(AnnComponent {
        set: s,
        basis: flat.matrix().left_kernel(),
    })
}

/// `dim (R / ann f)_{e_S}` for all `S`, computed from kernel dimensions.
pub fn hilbert_function(f: &BalancedPoly) -> Result<HilbertTable> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.d();
    let values = (0..1u32 << d)
        .into_par_iter()
        .map(|bits| {
            let s = ColorSet::from_bits(bits);
            let ann = ann_component(f, s)?;
            Ok(f.shape().component_dim(s) - ann.dim())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertTable::from_values(d, values))
}

/// Position of color `c` once color `removed` is deleted.
fn shift_color(c: usize, removed: usize) -> usize {
    if c > removed {
        c - 1
    } else {
        c
    }
}

/// Matrix whose left kernel is `{g in R_{e_S} : x_{i,j} g in ann(f)}` for all
/// colors `i` outside `S` and all `j`. Each block of columns is the
/// `S`-flattening of `∂f/∂x_{i,j}`.
fn socle_conditions(f: &BalancedPoly, s: ColorSet) -> Result<Matrix> {
    let d = f.d();
    let rows = f.shape().component_dim(s);
    let mut blocks = Vec::new();
    for i in s.complement(d).colors() {
        let shifted = ColorSet::from_bits(
            s.colors()
                .map(|c| 1u32 << shift_color(c, i))
                .fold(0, |a, b| a | b),
        );
        for j in 0..f.shape().dims()[i] {
            let slice = f.partial_derivative(VarId::new(i, j))?;
            blocks.push(slice.flatten(shifted)?.matrix().clone());
        }
    }
    let cols: usize = blocks.iter().map(Matrix::cols).sum();
    let mut m = Matrix::zeros(f.field(), rows, cols);
    let mut base = 0;
    for b in &blocks {
        for r in 0..rows {
            for c in 0..b.cols() {
                m.set(r, base + c, b.get(r, c).clone());
            }
        }
        base += b.cols();
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleVerdict {
    pub passed: bool,
    /// Proper color sets where the socle condition picked up extra elements.
    pub failures: Vec<ColorSet>,
}

/// For each proper `S`, compares the socle-type space
/// `{g : x_{i,j} g in ann(f) for i outside S}` with `ann(f)_{e_S}`. They agree
/// exactly when nothing below the top degree is killed by every variable.
pub fn socle_check(f: &BalancedPoly) -> Result<SocleVerdict> {
    let d = f.d();
    let full = ColorSet::full(d);
    let failures = ColorSet::all_by_size(d)
        .into_par_iter()
        .filter(|s| *s != full)
        .map(|s| {
            let ann = ann_component(f, s)?;
            let socle = socle_conditions(f, s)?.left_kernel();
            Ok((s, socle != ann.basis))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(s, bad)| bad.then_some(s))
        .collect::<Vec<_>>();
    Ok(SocleVerdict {
        passed: failures.is_empty(),
        failures,
    })
}

/// `dim (R / ann f)` in the top multidegree: 1 for nonzero `f`, else 0.
pub fn top_socle_dim(f: &BalancedPoly) -> usize {
    f.h_value(ColorSet::full(f.d()))
        .expect("full color set is in range")
}
