//! Explicit balanced neighborly polynomials of type `(k, k, k, k)`.
//!
//! The four colors are written `x, y, z, w`. For even `k` the barred
//! variable `x̄_i` is `x_{i + k/2}`, and likewise for `y`, `z`, `w`.
//! Subscripts are reduced with [`mod_rep`] into `{1, ..., r}`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::mpoly::{mod_rep, BalancedPoly, Shape};

/// Which family produced a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConstructionKind {
    /// The six-term polynomial of type `(2,2,2,2)`; needs characteristic ≠ 2.
    Type2222CharNot2,
    OddK,
    FourM,
    FourMPlus2,
}

impl ConstructionKind {
    pub fn for_k(k: usize) -> Result<Self> {
        match k {
            0 => Err(Error::InvalidArgument("k must be positive".into())),
            2 => Ok(ConstructionKind::Type2222CharNot2),
            k if k % 2 == 1 => Ok(ConstructionKind::OddK),
            k if k % 4 == 0 => Ok(ConstructionKind::FourM),
            _ => Ok(ConstructionKind::FourMPlus2),
        }
    }

    /// Short machine-readable tag used in file headers.
    pub fn tag(&self) -> &'static str {
        match self {
            ConstructionKind::Type2222CharNot2 => "type2222",
            ConstructionKind::OddK => "odd",
            ConstructionKind::FourM => "4m",
            ConstructionKind::FourMPlus2 => "4m+2",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Header comment recording which family produced `k`.
pub fn provenance(kind: ConstructionKind, k: usize) -> String {
    format!("construction={} k={k}", kind.tag())
}

/// 1-based term tuple `(x, y, z, w)`.
type Term = [i64; 4];

const SIX_TERMS: [(i64, Term); 6] = [
    (-1, [1, 1, 2, 2]),
    (-1, [1, 2, 1, 1]),
    (1, [1, 2, 2, 2]),
    (-1, [2, 1, 1, 2]),
    (1, [2, 1, 2, 1]),
    (1, [2, 2, 2, 1]),
];

fn to_poly(k: usize, field: FieldSpec, terms: &[(i64, Term)]) -> Result<BalancedPoly> {
    BalancedPoly::from_terms(
        Shape::square(k)?,
        field,
        terms
            .iter()
            .map(|(c, t)| (field.from_i64(*c), t.map(|j| (j - 1) as usize))),
    )
}

fn unit_terms(terms: Vec<Term>) -> Vec<(i64, Term)> {
    terms.into_iter().map(|t| (1, t)).collect()
}

/// `-x1y1z2w2 - x1y2z1w1 + x1y2z2w2 - x2y1z1w2 + x2y1z2w1 + x2y2z2w1`.
pub fn construct_2222(field: FieldSpec) -> Result<BalancedPoly> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic {
            field,
            characteristic: 2,
        });
    }
    to_poly(2, field, &SIX_TERMS)
}

fn rep(i: i64, k: i64) -> i64 {
    mod_rep(i, k).expect("positive modulus")
}

/// Terms of `Σ_{i,j} x_i y_j z_{[j-i]_k} w_{[i+j]_k}` for odd `k`.
pub fn odd_terms(k: usize) -> Result<Vec<Term>> {
    if k % 2 == 0 {
        return Err(Error::InvalidArgument(format!("k = {k} is not odd")));
    }
    let k = k as i64;
    let mut out = Vec::with_capacity((k * k) as usize);
    for i in 1..=k {
        for j in 1..=k {
            out.push([i, j, rep(j - i, k), rep(i + j, k)]);
        }
    }
    Ok(out)
}

pub fn construct_odd(k: usize, field: FieldSpec) -> Result<BalancedPoly> {
    to_poly(k, field, &unit_terms(odd_terms(k)?))
}

/// The eight double sums shared by both even families, over
/// `1 <= i, j <= r` with subscripts reduced mod `r`, bar offset `h = k/2`
/// and shift `m`. For even `i`, the two sums whose `w` subscript carries
/// `+ m` use `even_shifted(i) + j + m` there.
fn eight_sums(r: i64, h: i64, m: i64, even_shifted: impl Fn(i64) -> i64) -> Vec<Term> {
    let mut out = Vec::with_capacity((4 * r * r) as usize);
    for i in 1..=r {
        for j in 1..=r {
            let z = rep(i + j - 1, r);
            if i % 2 == 1 {
                let a = (i - 1) / 2;
                let w = rep(a + j, r);
                let wm = rep(a + j + m, r);
                out.push([i, j, z, w]);
                out.push([i + h, j, z + h, wm + h]);
                out.push([i, j + h, z + h, w + h]);
                out.push([i + h, j + h, z, wm]);
            } else {
                let w = rep((i - 2) / 2 + j, r);
                let wm = rep(even_shifted(i) + j + m, r);
                out.push([i, j, z, w + h]);
                out.push([i + h, j, z + h, wm]);
                out.push([i, j + h, z + h, w]);
                out.push([i + h, j + h, z, wm + h]);
            }
        }
    }
    out
}

/// Terms of the `k = 4m` family (subscripts mod `2m`).
pub fn four_m_terms(k: usize) -> Result<Vec<Term>> {
    if k == 0 || k % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "k = {k} is not a positive multiple of 4"
        )));
    }
    let m = (k / 4) as i64;
    Ok(eight_sums(2 * m, 2 * m, m, |i| (i - 2) / 2))
}

pub fn construct_4m(k: usize, field: FieldSpec) -> Result<BalancedPoly> {
    to_poly(k, field, &unit_terms(four_m_terms(k)?))
}

/// Terms of the `k = 4m + 2` family (subscripts mod `2m + 1`), including the
/// two extra sums `x̄_{2m+1} y_j z̄_j w_j` and `x̄_{2m+1} ȳ_j z_j w̄_j`.
///
/// The even-`i` sums carrying `+ m` use `i/2` rather than `(i-2)/2` in the
/// `w` subscript, unlike the `4m` family; the other reading loses rank in
/// the `{1,2}` and `{1,3}` flattenings.
pub fn four_m_plus_2_terms(k: usize) -> Result<Vec<Term>> {
    if k % 4 != 2 || k < 6 {
        return Err(Error::InvalidArgument(format!(
            "k = {k} is not of the form 4m + 2 with m >= 1"
        )));
    }
    let m = ((k - 2) / 4) as i64;
    let r = 2 * m + 1;
    let h = r;
    let mut out = eight_sums(r, h, m, |i| i / 2);
    for j in 1..=r {
        out.push([r + h, j, j + h, j]);
        out.push([r + h, j + h, j, j + h]);
    }
    Ok(out)
}

pub fn construct_4m2(k: usize, field: FieldSpec) -> Result<BalancedPoly> {
    to_poly(k, field, &unit_terms(four_m_plus_2_terms(k)?))
}

/// A balanced neighborly polynomial of type `(k,k,k,k)` over `field`.
pub fn construct(k: usize, field: FieldSpec) -> Result<BalancedPoly> {
    match ConstructionKind::for_k(k)? {
        ConstructionKind::Type2222CharNot2 => construct_2222(field),
        ConstructionKind::OddK => construct_odd(k, field),
        ConstructionKind::FourM => construct_4m(k, field),
        ConstructionKind::FourMPlus2 => construct_4m2(k, field),
    }
}
