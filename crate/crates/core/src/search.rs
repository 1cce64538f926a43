//! Exhaustive search over all tensors of shape `(2,2,2,2)` over a small
//! prime field, and the symbolic determinant identity behind the
//! characteristic-2 obstruction.
//!
//! Candidate `i` in `0..p^16` is read as 16 base-`p` digits, most
//! significant first; digit `k` is the coefficient of the `k`-th index tuple
//! in lex order.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::mpoly::{BalancedPoly, ColorSet, Shape};

/// Upper bound on the candidate count accepted by the search.
pub const CANDIDATE_LIMIT: u64 = 50_000_000;

const WITNESS_CAP: usize = 10;
const DEFAULT_CHUNK: u64 = 1 << 14;

/// Row and column of each of the 16 coefficients in the flattenings along
/// `{1,2}`, `{1,3}` and `{1,4}`.
fn pair_layouts() -> [[(usize, usize); 16]; 3] {
    let shape = Shape::square(2).expect("valid shape");
    let mut out = [[(0, 0); 16]; 3];
    for (which, other) in (1..4).enumerate() {
        let s = ColorSet::from_bits(1 | (1 << other));
        for (off, t) in shape.tuples().enumerate() {
            let (mut r, mut c) = (0, 0);
            for (color, &j) in t.iter().enumerate() {
                if s.contains(color) {
                    r = r * 2 + j;
                } else {
                    c = c * 2 + j;
                }
            }
            out[which][off] = (r, c);
        }
    }
    out
}

/// Row and column of each coefficient in the four singleton flattenings.
fn singleton_layouts() -> [[(usize, usize); 16]; 4] {
    let shape = Shape::square(2).expect("valid shape");
    let mut out = [[(0, 0); 16]; 4];
    for (color, layout) in out.iter_mut().enumerate() {
        for (off, t) in shape.tuples().enumerate() {
            let c = t
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != color)
                .fold(0, |acc, (_, &j)| acc * 2 + j);
            layout[off] = (t[color], c);
        }
    }
    out
}

/// Nonsingularity of a 4×4 matrix over `F_2` given as row nibbles.
fn nonsingular_f2(mut rows: [u8; 4]) -> bool {
    for col in 0..4 {
        let bit = 1 << col;
        let Some(p) = (col..4).find(|&r| rows[r] & bit != 0) else {
            return false;
        };
        rows.swap(col, p);
        for r in col + 1..4 {
            if rows[r] & bit != 0 {
                rows[r] ^= rows[col];
            }
        }
    }
    true
}

/// Rank of a small matrix over `F_p` by residue elimination.
fn rank_mod_p<const C: usize>(rows: &mut [[u32; C]], p: u32) -> usize {
    let mut rank = 0;
    for col in 0..C {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = crate::field::inv_mod(rows[rank][col] as u64, p as u64) as u32;
        for r in rank + 1..rows.len() {
            let f = rows[r][col] * inv % p;
            if f != 0 {
                for c in col..C {
                    rows[r][c] = (rows[r][c] + (p - f) * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Per-candidate classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub pair_nonsingular: [bool; 3],
    /// `None` unless all three pair flattenings are nonsingular.
    pub singletons_full: Option<bool>,
}

impl Classification {
    pub fn neighborly(&self) -> bool {
        self.singletons_full == Some(true)
    }
}

struct Kernel {
    p: u32,
    pairs: [[(usize, usize); 16]; 3],
    singles: [[(usize, usize); 16]; 4],
}

impl Kernel {
    fn new(p: u32) -> Self {
        Kernel {
            p,
            pairs: pair_layouts(),
            singles: singleton_layouts(),
        }
    }

    fn pair_nonsingular(&self, which: usize, digits: &[u32; 16]) -> bool {
        let layout = &self.pairs[which];
        if self.p == 2 {
            let mut rows = [0u8; 4];
            for (off, &(r, c)) in layout.iter().enumerate() {
                rows[r] |= (digits[off] as u8) << c;
            }
            nonsingular_f2(rows)
        } else {
            let mut rows = [[0u32; 4]; 4];
            for (off, &(r, c)) in layout.iter().enumerate() {
                rows[r][c] = digits[off];
            }
            rank_mod_p(&mut rows, self.p) == 4
        }
    }

    fn singletons_full(&self, digits: &[u32; 16]) -> bool {
        self.singles.iter().all(|layout| {
            let mut rows = [[0u32; 8]; 2];
            for (off, &(r, c)) in layout.iter().enumerate() {
                rows[r][c] = digits[off];
            }
            rank_mod_p(&mut rows, self.p) == 2
        })
    }

    fn classify(&self, digits: &[u32; 16]) -> Classification {
        let pair_nonsingular = [0, 1, 2].map(|w| self.pair_nonsingular(w, digits));
        let singletons_full = pair_nonsingular
            .iter()
            .all(|&b| b)
            .then(|| self.singletons_full(digits));
        Classification {
            pair_nonsingular,
            singletons_full,
        }
    }
}

fn digits_of(p: u32, mut index: u64) -> [u32; 16] {
    let mut d = [0u32; 16];
    for k in (0..16).rev() {
        d[k] = (index % p as u64) as u32;
        index /= p as u64;
    }
    d
}

fn increment(p: u32, d: &mut [u32; 16]) {
    for k in (0..16).rev() {
        d[k] += 1;
        if d[k] < p {
            return;
        }
        d[k] = 0;
    }
}

fn small_prime(field: FieldSpec) -> Result<u32> {
    let p = field
        .modulus()
        .ok_or_else(|| Error::InvalidArgument("search needs a prime field".to_string()))?;
    let candidates = (p as u128).pow(16);
    if candidates >= CANDIDATE_LIMIT as u128 {
        return Err(Error::CandidateSpaceTooLarge {
            candidates,
            limit: CANDIDATE_LIMIT,
        });
    }
    Ok(p)
}

/// Classifies a single candidate by index.
pub fn classify_candidate(field: FieldSpec, index: u64) -> Result<Classification> {
    let p = small_prime(field)?;
    if index >= (p as u64).pow(16) {
        return Err(Error::IndexError(format!("candidate {index} out of range")));
    }
    Ok(Kernel::new(p).classify(&digits_of(p, index)))
}

/// The index of a shape-`(2,2,2,2)` tensor over a prime field.
pub fn candidate_index(f: &BalancedPoly) -> Result<u64> {
    let p = small_prime(f.field())?;
    if f.shape().dims() != [2, 2, 2, 2] {
        return Err(Error::TypeMismatch {
            requested: vec![2, 2, 2, 2],
            shape: f.shape().dims().to_vec(),
        });
    }
    Ok(f.coeffs().iter().fold(0u64, |acc, c| {
        acc * p as u64 + c.as_residue().expect("prime field") as u64
    }))
}

/// The tensor with the given candidate index.
pub fn candidate_poly(field: FieldSpec, index: u64) -> Result<BalancedPoly> {
    let p = small_prime(field)?;
    let coeffs = digits_of(p, index)
        .iter()
        .map(|&v| field.from_i64(v as i64))
        .collect();
    BalancedPoly::from_coeffs(Shape::square(2)?, field, coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchWitness {
    pub index: u64,
    /// Coefficients in lex order of the index tuples.
    pub coefficients: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchReport {
    pub field: FieldSpec,
    pub total_candidates: u64,
    pub neighborly_count: u64,
    /// Nonsingular counts for the flattenings along `{1,2}`, `{1,3}`, `{1,4}`.
    pub per_flattening_nonsingular_counts: [u64; 3],
    pub all_three_count: u64,
    /// Candidates whose singleton flattenings had to be examined.
    pub singleton_checks: u64,
    /// The first neighborly candidates by index, at most ten.
    pub witnesses: Vec<SearchWitness>,
}

impl SearchReport {
    fn empty(field: FieldSpec) -> Self {
        SearchReport {
            field,
            total_candidates: 0,
            neighborly_count: 0,
            per_flattening_nonsingular_counts: [0; 3],
            all_three_count: 0,
            singleton_checks: 0,
            witnesses: Vec::new(),
        }
    }

    fn merge(mut self, other: SearchReport) -> Self {
        self.total_candidates += other.total_candidates;
        self.neighborly_count += other.neighborly_count;
        for k in 0..3 {
            self.per_flattening_nonsingular_counts[k] += other.per_flattening_nonsingular_counts[k];
        }
        self.all_three_count += other.all_three_count;
        self.singleton_checks += other.singleton_checks;
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort_by_key(|w| w.index);
        self.witnesses.truncate(WITNESS_CAP);
        self
    }

    /// Witness tensors as polynomials.
    pub fn witness_polys(&self) -> Result<Vec<BalancedPoly>> {
        self.witnesses
            .iter()
            .map(|w| candidate_poly(self.field, w.index))
            .collect()
    }
}

fn scan(kernel: &Kernel, field: FieldSpec, start: u64, end: u64) -> SearchReport {
    let mut report = SearchReport::empty(field);
    let mut digits = digits_of(kernel.p, start);
    for index in start..end {
        let c = kernel.classify(&digits);
        report.total_candidates += 1;
        for k in 0..3 {
            report.per_flattening_nonsingular_counts[k] += c.pair_nonsingular[k] as u64;
        }
        if let Some(full) = c.singletons_full {
            report.all_three_count += 1;
            report.singleton_checks += 1;
            if full {
                report.neighborly_count += 1;
                if report.witnesses.len() < WITNESS_CAP {
                    report.witnesses.push(SearchWitness {
                        index,
                        coefficients: digits.to_vec(),
                    });
                }
            }
        }
        increment(kernel.p, &mut digits);
    }
    report
}

/// Scans candidates `range` in contiguous chunks. The report does not depend
/// on `jobs` or `chunk`.
pub fn enumerate_range(
    field: FieldSpec,
    range: std::ops::Range<u64>,
    jobs: usize,
    chunk: u64,
) -> Result<SearchReport> {
    let p = small_prime(field)?;
    let total = (p as u64).pow(16);
    if range.end > total || range.start > range.end {
        return Err(Error::InvalidArgument(format!(
            "candidate range {range:?} not within 0..{total}"
        )));
    }
    if chunk == 0 {
        return Err(Error::InvalidArgument("chunk size must be positive".into()));
    }
    let kernel = Kernel::new(p);
    let starts: Vec<u64> = (range.start..range.end).step_by(chunk as usize).collect();
    let run = || {
        starts
            .par_iter()
            .map(|&s| scan(&kernel, field, s, (s + chunk).min(range.end)))
            .collect::<Vec<_>>()
    };
    let parts = if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run)
    };
    Ok(parts
        .into_iter()
        .fold(SearchReport::empty(field), SearchReport::merge))
}

/// All `p^16` tensors of shape `(2,2,2,2)` over `F_p`. `jobs = 0` uses the
/// global thread pool.
pub fn enumerate_2222(field: FieldSpec, jobs: usize) -> Result<SearchReport> {
    let p = small_prime(field)?;
    enumerate_range(field, 0..(p as u64).pow(16), jobs, DEFAULT_CHUNK)
}

/// Integer polynomial in `a_1, ..., a_16` whose monomials are squarefree,
/// keyed by the bitmask of the variables present (bit `k` is `a_{k+1}`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolicPoly2 {
    terms: BTreeMap<u16, i64>,
}

impl SymbolicPoly2 {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u16, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    fn add_term(&mut self, mono: u16, coeff: i64) {
        let e = self.terms.entry(mono).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&mono);
        }
    }

    /// Leibniz expansion of a 4×4 matrix of distinct variables (0-based).
    pub fn determinant(vars: &[[u8; 4]; 4]) -> Self {
        let mut out = SymbolicPoly2::default();
        let mut perm = [0usize, 1, 2, 3];
        permutations(&mut perm, 0, &mut |p| {
            let inversions = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let mono = (0..4).fold(0u16, |m, r| m | 1 << vars[r][p[r]]);
            out.add_term(mono, sign);
        });
        out
    }

    pub fn sub(&self, other: &SymbolicPoly2) -> SymbolicPoly2 {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, -c);
        }
        out
    }

    pub fn reduce_mod2(&self) -> SymbolicPoly2 {
        SymbolicPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|(_, &c)| c.rem_euclid(2) != 0)
                .map(|(&m, _)| (m, 1))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[i64; 16]) -> i64 {
        self.terms
            .iter()
            .map(|(&m, &c)| {
                (0..16)
                    .filter(|k| m & (1 << k) != 0)
                    .fold(c, |acc, k| acc * point[k])
            })
            .sum()
    }
}

fn permutations(p: &mut [usize; 4], k: usize, visit: &mut impl FnMut(&[usize; 4])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

impl fmt::Display for SymbolicPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&m, &c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = (0..16)
                .filter(|k| m & (1 << k) != 0)
                .map(|k| format!("a{}", k + 1))
                .collect();
            let sign = if c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            if n > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}

/// The pair flattenings along `{1,2}`, `{1,3}`, `{1,4}` with `a_{k+1}` the
/// coefficient of the `k`-th tuple, as 0-based variable indices.
pub const DET_MATRICES: [[[u8; 4]; 4]; 3] = [
    [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], [12, 13, 14, 15]],
    [[0, 1, 4, 5], [2, 3, 6, 7], [8, 9, 12, 13], [10, 11, 14, 15]],
    [[0, 2, 4, 6], [1, 3, 5, 7], [8, 10, 12, 14], [9, 11, 13, 15]],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetIdentity {
    pub dets: [SymbolicPoly2; 3],
    /// `det M - det N - det P` over the integers.
    pub integer_residual: SymbolicPoly2,
    pub mod2_residual: SymbolicPoly2,
}

impl DetIdentity {
    pub fn holds_mod2(&self) -> bool {
        self.mod2_residual.is_zero()
    }

    pub fn holds_over_integers(&self) -> bool {
        self.integer_residual.is_zero()
    }
}

pub fn det_identity_check() -> DetIdentity {
    let dets = DET_MATRICES.map(|m| SymbolicPoly2::determinant(&m));
    let integer_residual = dets[0].sub(&dets[1]).sub(&dets[2]);
    let mod2_residual = integer_residual.reduce_mod2();
    DetIdentity {
        dets,
        integer_residual,
        mod2_residual,
    }
}

/// Coefficients of a shape-`(2,2,2,2)` tensor over `Q` with integer entries,
/// as an evaluation point for [`SymbolicPoly2::eval`].
pub fn integer_point(f: &BalancedPoly) -> Option<[i64; 16]> {
    if f.shape().dims() != [2, 2, 2, 2] {
        return None;
    }
    let mut out = [0i64; 16];
    for (k, c) in f.coeffs().iter().enumerate() {
        out[k] = integral(c)?;
    }
    Some(out)
}

fn integral(c: &Scalar) -> Option<i64> {
    use num_traits::ToPrimitive;
    let r = c.as_rational()?;
    if !r.is_integer() {
        return None;
    }
    r.to_integer().to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_2222;
    use crate::field::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    /// Ordered bases of `F_2^4`: each new vector avoids the span of the
    /// previous ones, with spans listed by subset sums.
    fn gl4_f2_order() -> u64 {
        fn extend(chosen: &mut Vec<u8>) -> u64 {
            if chosen.len() == 4 {
                return 1;
            }
            let span: Vec<u8> = (0..1u32 << chosen.len())
                .map(|mask| {
                    chosen
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .fold(0, |a, (_, &v)| a ^ v)
                })
                .collect();
            let mut total = 0;
            for v in 0..16u8 {
                if !span.contains(&v) {
                    chosen.push(v);
                    total += extend(chosen);
                    chosen.pop();
                }
            }
            total
        }
        extend(&mut Vec::new())
    }

    #[test]
    fn gl4_oracle() {
        assert_eq!(gl4_f2_order(), 20160);
    }

    #[test]
    fn f2_search() {
        let r = enumerate_2222(fp(2), 0).unwrap();
        let gl = gl4_f2_order();
        assert_eq!(r.total_candidates, 65536);
        assert_eq!(r.per_flattening_nonsingular_counts, [gl; 3]);
        assert_eq!(r.neighborly_count, 0);
        assert_eq!(r.all_three_count, 0);
        assert_eq!(r.singleton_checks, 0);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn report_independent_of_jobs_and_chunks() {
        let base = enumerate_range(fp(2), 0..65536, 1, 65536).unwrap();
        for (jobs, chunk) in [(2, 1000), (8, 4096), (8, 7), (3, 65536)] {
            assert_eq!(enumerate_range(fp(2), 0..65536, jobs, chunk).unwrap(), base);
        }
        let f3 = fp(3);
        let idx = candidate_index(&construct_2222(f3).unwrap()).unwrap();
        let range = idx.saturating_sub(20_000)..idx + 20_000;
        let a = enumerate_range(f3, range.clone(), 1, 40_000).unwrap();
        let b = enumerate_range(f3, range, 8, 333).unwrap();
        assert_eq!(a, b);
        assert!(a.neighborly_count >= 1);
        assert!(a.witnesses.iter().any(|w| w.index == idx) || a.witnesses.len() == 10);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate_2222(fp(5), 1),
            Err(Error::CandidateSpaceTooLarge { .. })
        ));
        assert!(enumerate_2222(FieldSpec::rationals(), 1).is_err());
        assert!(enumerate_range(fp(2), 0..70000, 1, 10).is_err());
    }

    #[test]
    fn six_term_tensor_is_a_witness_over_f3() {
        let f = construct_2222(fp(3)).unwrap();
        let idx = candidate_index(&f).unwrap();
        assert_eq!(candidate_poly(fp(3), idx).unwrap(), f);
        let c = classify_candidate(fp(3), idx).unwrap();
        assert!(c.neighborly());
        let v = crate::verify::is_neighborly(&f, &[2, 2, 2, 2]).unwrap();
        assert!(v.neighborly);
    }

    #[test]
    fn fast_test_agrees_with_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pairs = [0b0011u32, 0b0101, 0b1001].map(ColorSet::from_bits);
        for p in [2u32, 3] {
            for _ in 0..1000 {
                let idx = rng.gen_range(0..(p as u64).pow(16));
                let f = candidate_poly(fp(p), idx).unwrap();
                let c = classify_candidate(fp(p), idx).unwrap();
                for k in 0..3 {
                    assert_eq!(c.pair_nonsingular[k], f.h_value(pairs[k]).unwrap() == 4);
                }
                let v = crate::verify::is_neighborly(&f, &[2, 2, 2, 2]).unwrap();
                assert_eq!(c.neighborly(), v.neighborly);
            }
        }
    }

    #[test]
    fn det_matrices_match_flattenings() {
        let layouts = pair_layouts();
        for k in 0..3 {
            for (off, &(r, c)) in layouts[k].iter().enumerate() {
                assert_eq!(DET_MATRICES[k][r][c] as usize, off);
            }
        }
    }

    #[test]
    fn det_identity() {
        let id = det_identity_check();
        for d in &id.dets {
            assert_eq!(d.len(), 24);
        }
        assert!(id.holds_mod2());
        // Pinned: the identity fails over the integers; the residual has 24
        // monomials, all with coefficient +-2.
        assert!(!id.holds_over_integers());
        assert_eq!(id.integer_residual.len(), 24);
        assert!(id.integer_residual.terms().all(|(_, c)| c.abs() == 2));
        let six = construct_2222(FieldSpec::rationals()).unwrap();
        let pt = integer_point(&six).unwrap();
        let [m, n, p] = [0, 1, 2].map(|k| id.dets[k].eval(&pt));
        assert_eq!((m, n, p), (1, -1, -2));
        assert_eq!(id.integer_residual.eval(&pt), 4);
    }

    /// Numeric determinants by cofactor expansion at random integer points.
    #[test]
    fn det_identity_numeric() {
        fn det(m: [[i64; 4]; 4]) -> i64 {
            fn minor(m: &[Vec<i64>]) -> i64 {
                if m.len() == 1 {
                    return m[0][0];
                }
                (0..m.len())
                    .map(|c| {
                        let sub: Vec<Vec<i64>> = m[1..]
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .enumerate()
                                    .filter(|&(k, _)| k != c)
                                    .map(|(_, &v)| v)
                                    .collect()
                            })
                            .collect();
                        let s = if c % 2 == 0 { 1 } else { -1 };
                        s * m[0][c] * minor(&sub)
                    })
                    .sum()
            }
            minor(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
        }
        let id = det_identity_check();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut nonzero = 0;
        for _ in 0..100 {
            let pt: [i64; 16] = std::array::from_fn(|_| rng.gen_range(-5..6));
            let nums = DET_MATRICES.map(|m| det(m.map(|r| r.map(|v| pt[v as usize]))));
            for k in 0..3 {
                assert_eq!(id.dets[k].eval(&pt), nums[k]);
            }
            let residual = nums[0] - nums[1] - nums[2];
            assert_eq!(id.integer_residual.eval(&pt), residual);
            assert_eq!(residual.rem_euclid(2), 0);
            nonzero += (residual != 0) as usize;
        }
        assert!(nonzero > 0);
    }

    #[test]
    fn display() {
        let d = SymbolicPoly2::determinant(&[
            [0, 1, 2, 3],
            [4, 5, 6, 7],
            [8, 9, 10, 11],
            [12, 13, 14, 15],
        ]);
        let s = d.to_string();
        assert!(s.contains("a1*a6*a11*a16"));
        assert_eq!(SymbolicPoly2::default().to_string(), "0");
    }
}
