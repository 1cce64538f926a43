//! Neighborliness verdicts and tables of `H(f, S)` over all color sets.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mpoly::{BalancedPoly, ColorSet};

/// `H(f, S)` for every `S ⊆ [d]`, indexed by the color-set bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    d: usize,
    values: Vec<usize>,
}

impl HilbertTable {
    pub fn from_values(d: usize, values: Vec<usize>) -> Self {
        assert_eq!(values.len(), 1 << d);
        HilbertTable { d, values }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, s: ColorSet) -> usize {
        self.values[s.bits() as usize]
    }

    /// Entries in size-then-lex order of `S`.
    pub fn entries(&self) -> Vec<(ColorSet, usize)> {
        ColorSet::all_by_size(self.d)
            .into_iter()
            .map(|s| (s, self.get(s)))
            .collect()
    }

    /// Color sets whose value differs from that of the complement.
    pub fn asymmetries(&self) -> Vec<ColorSet> {
        ColorSet::all_by_size(self.d)
            .into_iter()
            .filter(|s| self.get(*s) != self.get(s.complement(self.d)))
            .collect()
    }

    /// Values grouped by `|S|`, or `None` if some size class is not constant.
    pub fn by_size(&self) -> Option<Vec<usize>> {
        let mut out: Vec<Option<usize>> = vec![None; self.d + 1];
        for (s, v) in self.entries() {
            match out[s.len()] {
                None => out[s.len()] = Some(v),
                Some(w) if w != v => return None,
                _ => {}
            }
        }
        out.into_iter().collect()
    }
}

/// `H(f, S)` for all `2^d` color sets, evaluated in parallel.
pub fn h_table(f: &BalancedPoly) -> HilbertTable {
    let d = f.d();
    let values = (0..1u32 << d)
        .into_par_iter()
        .map(|bits| {
            f.h_value(ColorSet::from_bits(bits))
                .expect("color set within range")
        })
        .collect();
    HilbertTable { d, values }
}

/// A color set where `H(f, S)` misses `∏_{k ∈ S} n_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub set: ColorSet,
    pub expected: usize,
    pub achieved: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborlyVerdict {
    pub neighborly: bool,
    pub witness: Option<Witness>,
}

fn check_type(f: &BalancedPoly, ty: &[usize]) -> Result<()> {
    if ty != f.shape().dims() {
        return Err(Error::TypeMismatch {
            requested: ty.to_vec(),
            shape: f.shape().dims().to_vec(),
        });
    }
    Ok(())
}

/// Checks `H(f, S) = ∏_{k ∈ S} n_k` for every `|S| <= ⌊d/2⌋`. On failure the
/// witness is the first failing set in size-then-lex order.
pub fn is_neighborly(f: &BalancedPoly, ty: &[usize]) -> Result<NeighborlyVerdict> {
    check_type(f, ty)?;
    let d = f.d();
    for s in ColorSet::all_by_size(d) {
        if s.len() > d / 2 {
            break;
        }
        let expected = f.shape().component_dim(s);
        let achieved = f.h_value(s)?;
        if achieved != expected {
            return Ok(NeighborlyVerdict {
                neighborly: false,
                witness: Some(Witness {
                    set: s,
                    expected,
                    achieved,
                }),
            });
        }
    }
    Ok(NeighborlyVerdict {
        neighborly: true,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityVerdict {
    pub table: HilbertTable,
    pub violations: Vec<ColorSet>,
}

impl DualityVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Confirms `H(f, S) = H(f, [d] ∖ S)` for all `S`. A violation can only come
/// from a broken rank computation.
pub fn duality_check(f: &BalancedPoly) -> DualityVerdict {
    let table = h_table(f);
    let violations = table.asymmetries();
    DualityVerdict { table, violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TypeRule {
    /// Even `d` with unequal counts: no neighborly polynomial of this type.
    Impossible,
    Unknown,
}

/// For even `d`, complementary halves force `n_1 = ... = n_d`.
pub fn even_d_type_rule(ty: &[usize]) -> TypeRule {
    let equal = ty.windows(2).all(|w| w[0] == w[1]);
    if ty.len() % 2 == 0 && !equal {
        TypeRule::Impossible
    } else {
        TypeRule::Unknown
    }
}

/// One rendered table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub set: ColorSet,
    pub expected: usize,
    pub achieved: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ann_dim: Option<usize>,
}

/// The value a neighborly polynomial of type `ty` takes at `S`: the product
/// of `ty_k` over `S`, or over its complement when `|S| > d/2`.
pub fn neighborly_target(ty: &[usize], s: ColorSet) -> usize {
    let d = ty.len();
    let small = if s.len() <= d / 2 { s } else { s.complement(d) };
    small.colors().map(|c| ty[c]).product()
}

/// Rows comparing `table` against [`neighborly_target`].
pub fn table_rows(table: &HilbertTable, ty: &[usize]) -> Vec<TableRow> {
    table
        .entries()
        .into_iter()
        .map(|(s, achieved)| {
            let expected = neighborly_target(ty, s);
            TableRow {
                set: s,
                expected,
                achieved,
                ok: expected == achieved,
                ann_dim: None,
            }
        })
        .collect()
}

/// Tab-separated rendering: `S expected achieved ok [ann_dim]`.
pub fn render_tsv(rows: &[TableRow]) -> String {
    let with_ann = rows.iter().any(|r| r.ann_dim.is_some());
    let mut out = String::from("S\texpected\tachieved\tok");
    if with_ann {
        out.push_str("\tann_dim");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(out, "{}\t{}\t{}\t{}", r.set, r.expected, r.achieved, r.ok);
        if with_ann {
            let _ = write!(
                out,
                "\t{}",
                r.ann_dim.map_or_else(|| "-".to_string(), |v| v.to_string())
            );
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct, construct_2222, construct_odd};
    use crate::field::FieldSpec;
    use crate::mpoly::Shape;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn fp(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn random_poly(rng: &mut impl Rng, shape: &[usize], field: FieldSpec) -> BalancedPoly {
        let shape = Shape::new(shape.to_vec()).unwrap();
        let coeffs = (0..shape.size())
            .map(|_| field.from_i64(rng.gen_range(-3..4)))
            .collect();
        BalancedPoly::from_coeffs(shape, field, coeffs).unwrap()
    }

    #[test]
    fn unit_monomial_table_is_all_ones() {
        let f = construct_odd(1, q()).unwrap();
        let t = h_table(&f);
        assert!(t.entries().iter().all(|&(_, v)| v == 1));
        assert_eq!(t.entries().len(), 16);
    }

    #[test]
    fn six_term_table() {
        let t = h_table(&construct_2222(q()).unwrap());
        assert_eq!(t.by_size(), Some(vec![1, 2, 4, 2, 1]));
    }

    #[test]
    fn odd_three_over_f2() {
        let t = h_table(&construct_odd(3, fp(2)).unwrap());
        assert_eq!(t.by_size(), Some(vec![1, 3, 9, 3, 1]));
    }

    #[test]
    fn verdicts() {
        let v = is_neighborly(&construct(2, q()).unwrap(), &[2, 2, 2, 2]).unwrap();
        assert!(v.neighborly && v.witness.is_none());

        let z = BalancedPoly::zero(Shape::new(vec![1, 1, 1, 1]).unwrap(), q());
        let v = is_neighborly(&z, &[1, 1, 1, 1]).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness {
                set: ColorSet::EMPTY,
                expected: 1,
                achieved: 0
            })
        );

        let v = is_neighborly(&construct_odd(5, fp(3)).unwrap(), &[5, 5, 5, 5]).unwrap();
        assert!(v.neighborly);

        assert!(matches!(
            is_neighborly(&construct_odd(3, q()).unwrap(), &[3, 3, 3]),
            Err(Error::TypeMismatch { .. })
        ));
    }

    #[test]
    fn witness_is_first_in_size_then_lex_order() {
        // x1 y1 z1 w1 + x2 y2 z2 w2 over shape (2,2,2,2): singletons have
        // rank 2, every pair only rank 2 < 4; first pair is {1,2}.
        let f = BalancedPoly::from_terms(
            Shape::square(2).unwrap(),
            q(),
            [(q().one(), [0usize; 4]), (q().one(), [1usize; 4])],
        )
        .unwrap();
        let v = is_neighborly(&f, &[2, 2, 2, 2]).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.set.to_string(), "{1,2}");
        assert_eq!((w.expected, w.achieved), (4, 2));
    }

    #[test]
    fn duality_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let f = random_poly(&mut rng, &[2, 2, 2, 2], fp(5));
            assert!(duality_check(&f).passed());
        }
        let v = duality_check(&construct_2222(q()).unwrap());
        assert!(v.passed());
        assert_eq!(v.table.by_size(), Some(vec![1, 2, 4, 2, 1]));
        let z = BalancedPoly::zero(Shape::square(2).unwrap(), q());
        let v = duality_check(&z);
        assert!(v.passed());
        assert!(v.table.entries().iter().all(|&(_, h)| h == 0));
    }

    #[test]
    fn type_rule() {
        assert_eq!(even_d_type_rule(&[2, 3, 2, 3]), TypeRule::Impossible);
        assert_eq!(even_d_type_rule(&[3, 3, 3, 3]), TypeRule::Unknown);
        assert_eq!(even_d_type_rule(&[1, 2, 3]), TypeRule::Unknown);
    }

    #[test]
    fn unequal_even_type_never_neighborly() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..1000 {
            let f = random_poly(&mut rng, &[2, 3, 2, 3], fp(5));
            assert!(!is_neighborly(&f, &[2, 3, 2, 3]).unwrap().neighborly);
        }
    }

    #[test]
    fn yes_verdict_implies_full_table() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut yes = 0;
        for shape in [[2usize, 2, 2].as_slice(), &[2, 2, 2, 2], &[3, 3, 3, 3]] {
            for field in [q(), fp(2), fp(7)] {
                for _ in 0..20 {
                    let f = random_poly(&mut rng, shape, field);
                    let v = is_neighborly(&f, shape).unwrap();
                    let t = h_table(&f);
                    assert!(t.asymmetries().is_empty());
                    if v.neighborly {
                        yes += 1;
                        for row in table_rows(&t, shape) {
                            assert!(row.ok, "{}", row.set);
                        }
                    }
                }
            }
        }
        assert!(yes > 0);
    }

    #[test]
    fn tsv_rendering() {
        let f = construct_odd(1, q()).unwrap();
        let t = HilbertTable::from_values(2, vec![1, 1, 1, 1]);
        let mut rows = table_rows(&t, &[1, 1]);
        let tsv = render_tsv(&rows);
        assert_eq!(
            tsv,
            "S\texpected\tachieved\tok\n{}\t1\t1\ttrue\n{1}\t1\t1\ttrue\n{2}\t1\t1\ttrue\n{1,2}\t1\t1\ttrue\n"
        );
        rows[0].ann_dim = Some(0);
        assert!(render_tsv(&rows)
            .starts_with("S\texpected\tachieved\tok\tann_dim\n{}\t1\t1\ttrue\t0\n"));
        let json = serde_json::to_string(&table_rows(&h_table(&f), &[1, 1, 1, 1])[5]).unwrap();
        assert_eq!(json, r#"{"set":[1,2],"expected":1,"achieved":1,"ok":true}"#);
    }
}
