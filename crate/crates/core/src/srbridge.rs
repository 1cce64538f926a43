//! Balanced simplicial complexes, the colorful components of their
//! Stanley–Reisner ring modulo the colored linear system of parameters, and
//! the balanced polynomial whose annihilator recovers that quotient.
//!
//! A complex with `N_i` vertices of color `i` yields a polynomial of shape
//! `(N_1 - 1, ..., N_d - 1)`, and sphere-neighborliness is measured against
//! `∏_{k ∈ S} (N_k - 1)`, since modding out `θ_i` removes one dimension in
//! each single color.
//!
//! Facets file:
//!
//! ```text
//! # hexagon
//! 2 3 3
//! 1 1
//! 2 1
//! 1:2 2:2
//! ```
//!
//! The header is `d N_1 ... N_d`. Each facet line lists one vertex per color,
//! either positionally (`j_1 ... j_d`) or as `color:index` tokens in any
//! order. All indices are 1-based.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Matrix;
use crate::mpoly::text::{content_lines, parse_err, parse_usize, tokens};
use crate::mpoly::{BalancedPoly, ColorSet, Shape, MAX_COLORS};
use crate::verify::{h_table, HilbertTable, Witness};

/// Comment line written above extracted polynomials.
pub const SOURCE_COMMENT: &str = "source=srbridge";

/// Colorful components of `K[Δ]/(Θ)`, indexed like [`HilbertTable`].
pub type SphereHilbert = HilbertTable;

/// A pure balanced complex given by its facets. Each facet holds one
/// 0-based vertex index per color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedComplex {
    counts: Vec<usize>,
    facets: Vec<Vec<usize>>,
    /// All faces, as vectors with `None` for absent colors.
    faces: BTreeSet<Vec<Option<usize>>>,
}

impl BalancedComplex {
    /// Validates and canonicalizes (sorts, dedups) the facet list.
    pub fn new(counts: Vec<usize>, facets: Vec<Vec<usize>>) -> Result<Self> {
        let d = counts.len();
        if d == 0 || d > MAX_COLORS {
            return Err(Error::InvalidArgument(format!(
                "color count must be in 1..={MAX_COLORS}, found {d}"
            )));
        }
        let mut used: Vec<Vec<bool>> = counts.iter().map(|&n| vec![false; n]).collect();
        for (k, f) in facets.iter().enumerate() {
            if f.len() != d {
                return Err(Error::NotPure {
                    facet: k + 1,
                    size: f.len(),
                    expected: d,
                });
            }
            for (color, &j) in f.iter().enumerate() {
                if j >= counts[color] {
                    return Err(Error::IndexError(format!(
                        "facet {}: vertex {} out of range 1..={} for color {}",
                        k + 1,
                        j + 1,
                        counts[color],
                        color + 1
                    )));
                }
                used[color][j] = true;
            }
        }
        for (color, u) in used.iter().enumerate() {
            if let Some(j) = u.iter().position(|&b| !b) {
                return Err(Error::IsolatedVertex {
                    color: color + 1,
                    index: j + 1,
                });
            }
        }
        let facets: Vec<Vec<usize>> = facets
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut faces = BTreeSet::new();
        for f in &facets {
            for bits in 0..1u32 << d {
                faces.insert(
                    f.iter()
                        .enumerate()
                        .map(|(c, &j)| (bits & (1 << c) != 0).then_some(j))
                        .collect(),
                );
            }
        }
        Ok(BalancedComplex {
            counts,
            facets,
            faces,
        })
    }

    pub fn d(&self) -> usize {
        self.counts.len()
    }

    /// Vertex count per color.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Whether the colorful vertex set with `tuple[k]` of color `colors[k]`
    /// is a face.
    fn is_face(&self, colors: &[usize], tuple: &[usize]) -> bool {
        let mut key = vec![None; self.d()];
        for (&c, &j) in colors.iter().zip(tuple) {
            key[c] = Some(j);
        }
        self.faces.contains(&key)
    }
}

/// Parses the facets format.
pub fn parse_facets(src: &str) -> Result<BalancedComplex> {
    let mut lines = content_lines(src);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing header line `d N_1 ... N_d`"))?;
    let toks = tokens(header);
    let d = parse_usize(toks[0].1, hline, toks[0].0, "color count d")?;
    if d == 0 || d > MAX_COLORS {
        return Err(parse_err(
            hline,
            toks[0].0,
            format!("d must be in 1..={MAX_COLORS}"),
        ));
    }
    if toks.len() != d + 1 {
        return Err(parse_err(
            hline,
            toks.last().map_or(1, |t| t.0),
            format!(
                "header must have {} fields for d = {d}, found {}",
                d + 1,
                toks.len()
            ),
        ));
    }
    let mut counts = Vec::with_capacity(d);
    for &(col, tok) in &toks[1..] {
        counts.push(parse_usize(tok, hline, col, "vertex count")?);
    }

    let mut facets = Vec::new();
    for (k, (lno, line)) in lines.enumerate() {
        let toks = tokens(line);
        let colored = toks.iter().any(|(_, t)| t.contains(':'));
        let mut slots: Vec<Option<usize>> = vec![None; d];
        let mut size = 0;
        for (pos, &(col, tok)) in toks.iter().enumerate() {
            let (color, idx) = if colored {
                let (c, j) = tok.split_once(':').ok_or_else(|| {
                    parse_err(lno, col, format!("expected color:index, found {tok:?}"))
                })?;
                (parse_usize(c, lno, col, "color")?, j)
            } else {
                (pos + 1, tok)
            };
            if color == 0 || color > d {
                if !colored {
                    size = toks.len();
                    break;
                }
                return Err(parse_err(
                    lno,
                    col,
                    format!("color {color} out of range 1..={d}"),
                ));
            }
            let j = parse_usize(idx, lno, col, "vertex index")?;
            if j == 0 || j > counts[color - 1] {
                return Err(parse_err(
                    lno,
                    col,
                    format!(
                        "vertex {j} out of range 1..={} for color {color}",
                        counts[color - 1]
                    ),
                ));
            }
            if slots[color - 1].is_some() {
                return Err(Error::NotBalanced {
                    facet: k + 1,
                    color,
                });
            }
            slots[color - 1] = Some(j - 1);
            size += 1;
        }
        if size != d || slots.iter().any(Option::is_none) {
            return Err(Error::NotPure {
                facet: k + 1,
                size,
                expected: d,
            });
        }
        facets.push(slots.into_iter().map(|j| j.expect("checked")).collect());
    }
    BalancedComplex::new(counts, facets)
}

pub fn load_complex(path: &std::path::Path) -> Result<BalancedComplex> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    parse_facets(&src)
}

/// Mixed-radix tuples over `dims`, lex order.
fn tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = dims.iter().product();
    (0..total)
        .map(|mut off| {
            let mut t = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                t[k] = off % dims[k];
                off /= dims[k];
            }
            t
        })
        .collect()
}

/// Rank of the ideal `(I_Δ + Θ)` in multidegree `e_S`: non-face colorful
/// monomials, plus `θ_k x_H` for `k` in `S` and `H` colorful on `S ∖ {k}`.
fn ideal_rank(c: &BalancedComplex, s: ColorSet, field: FieldSpec) -> usize {
    let colors: Vec<usize> = s.colors().collect();
    let dims: Vec<usize> = colors.iter().map(|&k| c.counts[k]).collect();
    let basis = tuples(&dims);
    let cols = basis.len();
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    for (off, t) in basis.iter().enumerate() {
        if !c.is_face(&colors, t) {
            let mut r = vec![field.zero(); cols];
            r[off] = field.one();
            rows.push(r);
        }
    }
    for (pos, _) in colors.iter().enumerate() {
        let inner: usize = dims[pos + 1..].iter().product();
        let outer: usize = dims[..pos].iter().product();
        for o in 0..outer {
            for i in 0..inner {
                let mut r = vec![field.zero(); cols];
                for j in 0..dims[pos] {
                    r[(o * dims[pos] + j) * inner + i] = field.one();
                }
                rows.push(r);
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(field, cols, rows)
        .expect("rows have equal length")
        .rank()
}

/// `dim (K[Δ]/(Θ))_{e_S}` for every `S`.
pub fn quotient_dims(c: &BalancedComplex, field: FieldSpec) -> SphereHilbert {
    let d = c.d();
    let values = (0..1u32 << d)
        .into_par_iter()
        .map(|bits| {
            let s = ColorSet::from_bits(bits);
            let total: usize = s.colors().map(|k| c.counts[k]).product();
            total - ideal_rank(c, s, field)
        })
        .collect();
    HilbertTable::from_values(d, values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereVerdict {
    pub neighborly: bool,
    /// `(N_1 - 1, ..., N_d - 1)`.
    pub claimed_type: Vec<usize>,
    pub witness: Option<Witness>,
}

/// Compares `dims[S]` with `∏_{k ∈ S} (N_k - 1)` for `|S| <= ⌊d/2⌋`.
pub fn sphere_is_neighborly(c: &BalancedComplex, field: FieldSpec) -> SphereVerdict {
    let dims = quotient_dims(c, field);
    let claimed_type: Vec<usize> = c.counts.iter().map(|&n| n.saturating_sub(1)).collect();
    let d = c.d();
    let witness = ColorSet::all_by_size(d)
        .into_iter()
        .take_while(|s| s.len() <= d / 2)
        .find_map(|s| {
            let expected: usize = s.colors().map(|k| claimed_type[k]).product();
            let achieved = dims.get(s);
            (expected != achieved).then_some(Witness {
                set: s,
                expected,
                achieved,
            })
        });
    SphereVerdict {
        neighborly: witness.is_none(),
        claimed_type,
        witness,
    }
}

/// The polynomial of shape `(N_1 - 1, ..., N_d - 1)` whose annihilator is
/// the ideal of the quotient, normalized to leading coefficient 1.
///
/// Substituting `x_{i,N_i} = -(x_{i,1} + ... + x_{i,N_i - 1})` sends each
/// colorful monomial to a product of per-color vectors and every multiple of
/// `θ_i` to zero. The coefficient vector of the result is the one-dimensional
/// orthogonal complement of the images of the non-faces.
pub fn extract_polynomial(c: &BalancedComplex, field: FieldSpec) -> Result<BalancedPoly> {
    if c.counts.iter().any(|&n| n < 2) {
        return Err(Error::NotGorensteinTop { dimension: 0 });
    }
    let reduced: Vec<usize> = c.counts.iter().map(|&n| n - 1).collect();
    let shape = Shape::new(reduced.clone())?;
    let all: Vec<usize> = (0..c.d()).collect();
    let mut rows = Vec::new();
    for t in tuples(&c.counts) {
        if c.is_face(&all, &t) {
            continue;
        }
        let mut row = vec![field.one()];
        for (color, &j) in t.iter().enumerate() {
            let m = reduced[color];
            let factor: Vec<_> = if j < m {
                (0..m)
                    .map(|k| if k == j { field.one() } else { field.zero() })
                    .collect()
            } else {
                vec![-&field.one(); m]
            };
            row = row
                .iter()
                .flat_map(|a| factor.iter().map(move |b| a * b))
                .collect();
        }
        debug_assert_eq!(row.len(), shape.size());
        rows.push(row);
    }
    let kernel = if rows.is_empty() {
        Matrix::zeros(field, 1, shape.size()).right_kernel()
    } else {
        Matrix::from_rows(field, shape.size(), rows)?.right_kernel()
    };
    if kernel.len() != 1 {
        return Err(Error::NotGorensteinTop {
            dimension: kernel.len(),
        });
    }
    let mut alpha = kernel.into_iter().next().expect("one vector");
    let lead = alpha
        .iter()
        .find(|v| !v.is_zero())
        .expect("kernel vector is nonzero")
        .inv()?;
    for v in &mut alpha {
        *v = &*v * &lead;
    }
    BalancedPoly::from_coeffs(shape, field, alpha)
}

/// Both sides of the correspondence for one complex and field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCheck {
    pub poly: BalancedPoly,
    pub quotient: SphereHilbert,
    pub poly_table: HilbertTable,
    /// Sets where `H(f, S)` and the quotient dimension differ.
    pub mismatches: Vec<ColorSet>,
}

impl BridgeCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Extracts `f` and compares `H(f, S)` with the quotient dimension for all
/// `S`.
pub fn cross_check(c: &BalancedComplex, field: FieldSpec) -> Result<BridgeCheck> {
    let poly = extract_polynomial(c, field)?;
    let quotient = quotient_dims(c, field);
    let poly_table = h_table(&poly);
    let mismatches = ColorSet::all_by_size(c.d())
        .into_iter()
        .filter(|&s| quotient.get(s) != poly_table.get(s))
        .collect();
    Ok(BridgeCheck {
        poly,
        quotient,
        poly_table,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_neighborly;

    const OCTAHEDRON: &str = "3 2 2 2\n1 1 1\n1 1 2\n1 2 1\n1 2 2\n2 1 1\n2 1 2\n2 2 1\n2 2 2\n";
    const HEXAGON: &str = "# six-cycle\n2 3 3\n1 1\n2 1\n2 2\n3 2\n3 3\n1 3\n";

    fn hexagon_join() -> BalancedComplex {
        let edges = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)];
        let facets = edges
            .iter()
            .flat_map(|&(a, b)| edges.iter().map(move |&(c, d)| vec![a, b, c, d]))
            .collect();
        BalancedComplex::new(vec![3; 4], facets).unwrap()
    }

    fn fields() -> Vec<FieldSpec> {
        vec![
            FieldSpec::rationals(),
            FieldSpec::prime(2).unwrap(),
            FieldSpec::prime(3).unwrap(),
            FieldSpec::prime(5).unwrap(),
        ]
    }

    #[test]
    fn octahedron() {
        let c = parse_facets(OCTAHEDRON).unwrap();
        assert_eq!(c.facets().len(), 8);
        for field in fields() {
            let dims = quotient_dims(&c, field);
            assert!(dims.entries().iter().all(|&(_, v)| v == 1));
            let v = sphere_is_neighborly(&c, field);
            assert!(v.neighborly);
            assert_eq!(v.claimed_type, vec![1, 1, 1]);
            let f = extract_polynomial(&c, field).unwrap();
            assert_eq!(f.shape().dims(), [1, 1, 1]);
            assert!(f.coeff(&[0, 0, 0]).unwrap().is_one());
            assert!(cross_check(&c, field).unwrap().passed());
        }
    }

    #[test]
    fn hexagon() {
        let c = parse_facets(HEXAGON).unwrap();
        for field in fields() {
            let dims = quotient_dims(&c, field);
            assert_eq!(dims.by_size(), Some(vec![1, 2, 1]));
            let v = sphere_is_neighborly(&c, field);
            assert!(v.neighborly);
            assert_eq!(v.claimed_type, vec![2, 2]);
            let check = cross_check(&c, field).unwrap();
            assert!(check.passed(), "{field}");
            assert_eq!(check.poly.shape().dims(), [2, 2]);
            assert!(is_neighborly(&check.poly, &[2, 2]).unwrap().neighborly);
        }
    }

    #[test]
    fn ordering_does_not_matter() {
        let shuffled = "2 3 3\n3 3\n1 3\n2 2\n1 1\n3 2\n2 1\n";
        let a = parse_facets(HEXAGON).unwrap();
        let b = parse_facets(shuffled).unwrap();
        assert_eq!(a, b);
        let q = FieldSpec::rationals();
        assert_eq!(
            extract_polynomial(&a, q).unwrap(),
            extract_polynomial(&b, q).unwrap()
        );
    }

    #[test]
    fn colored_tokens() {
        let a = parse_facets("2 2 1\n2:1 1:1\n1:2 2:1\n").unwrap();
        assert_eq!(a.facets(), &[vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            parse_facets("3 2 2 1\n1:1 1:2 2:1\n"),
            Err(Error::NotBalanced { facet: 1, color: 1 })
        ));
        assert!(matches!(
            parse_facets("3 2 2 1\n1 1\n"),
            Err(Error::NotPure {
                facet: 1,
                size: 2,
                expected: 3
            })
        ));
        assert!(matches!(
            parse_facets("3 2 2 1\n1 1 1 1\n"),
            Err(Error::NotPure {
                facet: 1,
                size: 4,
                expected: 3
            })
        ));
        assert!(matches!(
            parse_facets("2 2 2\n1 1\n"),
            Err(Error::IsolatedVertex { color: 1, index: 2 })
        ));
        assert!(matches!(
            parse_facets("2 2 2\n1 3\n"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                ..
            })
        ));
    }

    #[test]
    fn disjoint_triangles_have_no_top() {
        let c = parse_facets("3 2 2 2\n1 1 1\n2 2 2\n").unwrap();
        let dims = quotient_dims(&c, FieldSpec::rationals());
        assert_eq!(dims.get(ColorSet::full(3)), 0);
        assert!(matches!(
            extract_polynomial(&c, FieldSpec::rationals()),
            Err(Error::NotGorensteinTop { dimension: 0 })
        ));
    }

    #[test]
    fn single_vertex_color_is_rejected() {
        let c = parse_facets("2 1 2\n1 1\n1 2\n").unwrap();
        assert!(matches!(
            extract_polynomial(&c, FieldSpec::rationals()),
            Err(Error::NotGorensteinTop { .. })
        ));
    }

    #[test]
    fn singleton_dims_are_always_count_minus_one() {
        let c = parse_facets("3 2 3 2\n1 1 1\n2 2 2\n1 3 2\n").unwrap();
        let dims = quotient_dims(&c, FieldSpec::rationals());
        for k in 0..3 {
            assert_eq!(dims.get(ColorSet::from_bits(1 << k)), c.counts()[k] - 1);
        }
    }

    /// The join of two hexagons is a sphere of type (2,2,2,2) that fails
    /// neighborliness on pairs, over every field.
    #[test]
    fn hexagon_join_is_not_neighborly() {
        let c = hexagon_join();
        assert_eq!(c.facets().len(), 36);
        for field in fields() {
            let dims = quotient_dims(&c, field);
            assert_eq!(dims.get(ColorSet::from_bits(0b0011)), 1);
            assert_eq!(dims.get(ColorSet::from_bits(0b0101)), 4);
            let v = sphere_is_neighborly(&c, field);
            assert!(!v.neighborly);
            assert_eq!(v.claimed_type, vec![2; 4]);
            assert_eq!(v.witness.unwrap().set, ColorSet::from_bits(0b0011));
            let check = cross_check(&c, field).unwrap();
            assert!(check.passed());
            assert!(!is_neighborly(&check.poly, &[2; 4]).unwrap().neighborly);
        }
    }
}
