//! Even positive-definite integral lattices.
//!
//! A lattice is described by an integer Gram matrix. This module validates
//! the defining properties (symmetric, even diagonal, positive definite),
//! enumerates vectors up to a norm bound, analyses the discriminant group
//! L*/L coset by coset, and forms direct sums.
//!
//! Enumeration uses floating point only to propose coordinate ranges; every
//! candidate is re-verified with exact arithmetic before it is reported, so
//! results never depend on rounding.

use crate::exact::{self, Int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Cap on how many candidate vectors an enumeration may explore before it
/// fails loudly instead of consuming unbounded time and memory.
pub const DEFAULT_VECTOR_CAP: u64 = 10_000_000;

/// Validation and resource errors for lattice construction and enumeration.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("gram matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("gram matrix is not symmetric at ({row},{col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("lattice is not even: diagonal entry at index {index} is odd")]
    NotEven { index: usize },
    #[error(
        "gram matrix is not positive definite: leading principal minor of order {order} is {value}"
    )]
    NotPositiveDefinite { order: usize, value: Int },
    #[error("operation requires rank >= 1")]
    RankZero,
    #[error("vector enumeration explored more than {cap} candidates")]
    TooManyVectors { cap: u64 },
}

/// An even positive-definite integral lattice, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    name: Option<String>,
    gram: Vec<Vec<i64>>,
    det: Int,
}

/// A lattice vector in basis coordinates, with its (even) norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVector {
    pub coords: Vec<i64>,
    pub norm: i64,
}

/// An element of a shifted lattice `shift + L`, with its rational norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedVector {
    pub coords: Vec<i64>,
    pub norm: Rat,
}

/// One coset of the discriminant group L*/L with its minimal-norm data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantCoset {
    /// Coset representative as rational coordinates in the lattice basis,
    /// reduced into [0, 1)^n.
    pub representative: Vec<Rat>,
    /// Smallest norm attained in the coset.
    pub min_norm: Rat,
    /// Number of coset elements attaining the smallest norm.
    pub min_count: u64,
}

/// Minimum-norm data and determinant of a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSummary {
    /// Minimum nonzero norm.
    pub mu: i64,
    /// Number of vectors of norm `mu`.
    pub min_count: u64,
    /// Determinant of the Gram matrix = order of L*/L.
    pub det: Int,
}

/// On-disk lattice description: `{"name": ..., "gram": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub gram: Vec<Vec<i64>>,
}

impl LatticeFile {
    pub fn into_lattice(self) -> Result<Lattice, LatticeError> {
        Lattice::new(self.name, self.gram)
    }
}

impl Lattice {
    /// Validate a Gram matrix and build the lattice. The rank-0 (empty)
    /// lattice is accepted; it acts as the identity for [`Lattice::direct_sum`].
    pub fn new(name: Option<String>, gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = gram.len();
        for (row, entries) in gram.iter().enumerate() {
            if entries.len() != n {
                return Err(LatticeError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
        }
        // The transpose comparison needs index pairs.
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric { row: i, col: j });
                }
            }
        }
        for (index, row) in gram.iter().enumerate() {
            if row[index].rem_euclid(2) != 0 {
                return Err(LatticeError::NotEven { index });
            }
        }
        let big = to_big(&gram);
        let minors = exact::leading_principal_minors(&big);
        if minors.len() < n || minors.last().is_some_and(|m| !m.is_positive()) {
            let order = minors.len();
            let value = minors.last().cloned().unwrap_or_else(Int::zero);
            return Err(LatticeError::NotPositiveDefinite { order, value });
        }
        let det = minors.last().cloned().unwrap_or_else(Int::one);
        Ok(Lattice { name, gram, det })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name for reports: the given name, or a description of the shape.
    pub fn display_name(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("unnamed-rank{}", self.rank()),
        }
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn det(&self) -> &Int {
        &self.det
    }

    /// Pairing a·b through the Gram matrix.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc: i128 = 0;
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc += self.gram[i][j] as i128 * *ai as i128 * *bj as i128;
            }
        }
        i64::try_from(acc).expect("pairing fits in 64 bits at supported sizes")
    }

    /// Norm v·v.
    pub fn norm_of(&self, coords: &[i64]) -> i64 {
        self.pairing(coords, coords)
    }

    /// All lattice vectors of norm at most `bound` (including 0), in
    /// lexicographic coordinate order.
    pub fn enumerate_vectors(&self, bound: i64) -> Result<Vec<LatticeVector>, LatticeError> {
        self.enumerate_vectors_capped(bound, DEFAULT_VECTOR_CAP)
    }

    /// [`Lattice::enumerate_vectors`] with an explicit candidate cap.
    pub fn enumerate_vectors_capped(
        &self,
        bound: i64,
        cap: u64,
    ) -> Result<Vec<LatticeVector>, LatticeError> {
        if self.rank() == 0 {
            return Ok(if bound >= 0 {
                vec![LatticeVector {
                    coords: vec![],
                    norm: 0,
                }]
            } else {
                vec![]
            });
        }
        if bound < 0 {
            return Ok(vec![]);
        }
        let shift = vec![Rat::zero(); self.rank()];
        let candidates = self.float_candidates(&shift, bound as f64, cap)?;
        let mut out: Vec<LatticeVector> = candidates
            .into_iter()
            .filter_map(|coords| {
                let norm = self.norm_of(&coords);
                (norm <= bound).then_some(LatticeVector { coords, norm })
            })
            .collect();
        out.sort_unstable_by(|a, b| a.coords.cmp(&b.coords));
        Ok(out)
    }

    /// All elements of the shifted lattice `shift + L` of norm at most
    /// `bound`, in lexicographic coordinate order. `coords` are the integer
    /// lattice part; the element is `coords + shift`.
    pub fn enumerate_shifted(
        &self,
        shift: &[Rat],
        bound: &Rat,
        cap: u64,
    ) -> Result<Vec<ShiftedVector>, LatticeError> {
        assert_eq!(shift.len(), self.rank(), "shift length must match rank");
        if self.rank() == 0 {
            return Ok(if !bound.is_negative() {
                vec![ShiftedVector {
                    coords: vec![],
                    norm: Rat::zero(),
                }]
            } else {
                vec![]
            });
        }
        if bound.is_negative() {
            return Ok(vec![]);
        }
        let bound_f = bound.to_f64().unwrap_or(f64::MAX);
        let candidates = self.float_candidates(shift, bound_f, cap)?;
        let mut out: Vec<ShiftedVector> = candidates
            .into_iter()
            .filter_map(|coords| {
                let norm = self.shifted_norm(&coords, shift);
                (&norm <= bound).then_some(ShiftedVector { coords, norm })
            })
            .collect();
        out.sort_unstable_by(|a, b| a.coords.cmp(&b.coords));
        Ok(out)
    }

    /// Exact norm of `coords + shift`.
    fn shifted_norm(&self, coords: &[i64], shift: &[Rat]) -> Rat {
        let n = self.rank();
        let y: Vec<Rat> = (0..n)
            .map(|i| Rat::from_integer(Int::from(coords[i])) + &shift[i])
            .collect();
        let mut acc = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                acc += Rat::from_integer(Int::from(self.gram[i][j])) * &y[i] * &y[j];
            }
        }
        acc
    }

    /// Propose all integer coordinate vectors that could satisfy
    /// `norm(x + shift) <= bound`, by recursive range bounding on the LDL^T
    /// form. The ranges carry slack and are widened by one on each side, so
    /// no true solution is pruned; callers re-verify each candidate exactly.
    fn float_candidates(
        &self,
        shift: &[Rat],
        bound: f64,
        cap: u64,
    ) -> Result<Vec<Vec<i64>>, LatticeError> {
        let n = self.rank();
        let (d_exact, mu_exact) = exact::ldl(&to_big(&self.gram));
        let d: Vec<f64> = d_exact.iter().map(|v| v.to_f64().unwrap()).collect();
        let mu: Vec<Vec<f64>> = mu_exact
            .iter()
            .map(|row| row.iter().map(|v| v.to_f64().unwrap()).collect())
            .collect();
        let shift_f: Vec<f64> = shift.iter().map(|v| v.to_f64().unwrap()).collect();
        let mut walk = RangeWalk {
            d,
            mu,
            shift: shift_f,
            slack: 1e-6 * (bound.abs() + 1.0),
            cap,
            explored: 0,
            xs: vec![0i64; n],
            ys: vec![0f64; n],
            out: Vec::new(),
        };
        walk.descend(n - 1, bound)?;
        Ok(walk.out)
    }

    /// Minimum nonzero norm, its vector count, and the determinant.
    pub fn summary(&self) -> Result<LatticeSummary, LatticeError> {
        if self.rank() == 0 {
            return Err(LatticeError::RankZero);
        }
        let min_diag = (0..self.rank())
            .map(|i| self.gram[i][i])
            .min()
            .expect("rank >= 1");
        let vectors = self.enumerate_vectors(min_diag)?;
        let mu = vectors
            .iter()
            .filter(|v| v.norm > 0)
            .map(|v| v.norm)
            .min()
            .expect("a basis vector has norm min_diag > 0");
        let min_count = vectors.iter().filter(|v| v.norm == mu).count() as u64;
        Ok(LatticeSummary {
            mu,
            min_count,
            det: self.det.clone(),
        })
    }

    /// All cosets of the discriminant group L*/L, each with its minimal norm
    /// and minimal-vector count, in a deterministic order derived from the
    /// Smith normal form of the Gram matrix.
    pub fn discriminant_cosets(&self) -> Result<Vec<DiscriminantCoset>, LatticeError> {
        let n = self.rank();
        if n == 0 {
            return Ok(vec![DiscriminantCoset {
                representative: vec![],
                min_norm: Rat::zero(),
                min_count: 1,
            }]);
        }
        let big = to_big(&self.gram);
        // L*/L in lattice-basis coordinates is G^{-1} Z^n / Z^n, isomorphic
        // to Z^n / G Z^n. With U G V = D in Smith form, x -> U x maps the
        // latter onto +/- Z^n / D Z^n, so residue tuples w (0 <= w_i < d_i)
        // enumerate the cosets and U^{-1} w lifts them back.
        let snf = exact::smith_normal_form(&big);
        let u_inv = exact::invert_int(&snf.left).expect("row transform is unimodular");
        let g_inv = exact::invert(&big).expect("a positive definite matrix is invertible");
        let mut cosets = Vec::new();
        let mut w = vec![Int::zero(); n];
        loop {
            let x: Vec<Int> = (0..n)
                .map(|i| {
                    let mut acc = Int::zero();
                    for (j, wj) in w.iter().enumerate() {
                        acc += &u_inv[i][j] * wj;
                    }
                    acc
                })
                .collect();
            let representative: Vec<Rat> = (0..n)
                .map(|i| {
                    let mut acc = Rat::zero();
                    for (j, xj) in x.iter().enumerate() {
                        acc += &g_inv[i][j] * Rat::from_integer(xj.clone());
                    }
                    &acc - acc.floor()
                })
                .collect();
            let (min_norm, min_count) = self.coset_minimum(&representative)?;
            cosets.push(DiscriminantCoset {
                representative,
                min_norm,
                min_count,
            });
            // Advance the mixed-radix counter (last index varies fastest).
            let mut idx = n;
            loop {
                if idx == 0 {
                    debug_assert_eq!(Int::from(cosets.len() as u64), self.det);
                    return Ok(cosets);
                }
                idx -= 1;
                w[idx] += 1;
                if w[idx] < snf.diag[idx] {
                    break;
                }
                w[idx] = Int::zero();
            }
        }
    }

    /// Minimal norm in the coset `shift + L` and how many elements attain it.
    /// Starts from the norm of the componentwise rounding (always a member of
    /// the coset) and expands the search radius until something is found.
    fn coset_minimum(&self, shift: &[Rat]) -> Result<(Rat, u64), LatticeError> {
        let rounded: Vec<i64> = shift
            .iter()
            .map(|s| {
                -s.round()
                    .to_integer()
                    .to_i64()
                    .expect("coset representatives have small entries")
            })
            .collect();
        let mut bound = self.shifted_norm(&rounded, shift);
        loop {
            let found = self.enumerate_shifted(shift, &bound, DEFAULT_VECTOR_CAP)?;
            if let Some(min_norm) = found.iter().map(|v| &v.norm).min().cloned() {
                let min_count = found.iter().filter(|v| v.norm == min_norm).count() as u64;
                return Ok((min_norm, min_count));
            }
            bound = if bound.is_zero() {
                Rat::one()
            } else {
                bound * Rat::from_integer(Int::from(2))
            };
        }
    }

    /// Orthogonal direct sum; the rank-0 lattice is the identity.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let n1 = self.rank();
        let n2 = other.rank();
        let n = n1 + n2;
        let mut gram = vec![vec![0i64; n]; n];
        for (row, src) in gram.iter_mut().zip(&self.gram) {
            row[..n1].copy_from_slice(src);
        }
        for (row, src) in gram.iter_mut().skip(n1).zip(&other.gram) {
            row[n1..].copy_from_slice(src);
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        Lattice::new(name, gram).expect("a block sum of valid lattices is valid")
    }

    /// An exact rational upper bound R for the squared covering radius:
    /// every point of the ambient space is within squared distance R of a
    /// lattice point. Uses R = (1/4) * sum of squared Gram-Schmidt lengths.
    pub fn covering_radius_bound(&self) -> Result<Rat, LatticeError> {
        if self.rank() == 0 {
            return Err(LatticeError::RankZero);
        }
        let (d, _) = exact::ldl(&to_big(&self.gram));
        let sum = d.iter().fold(Rat::zero(), |acc, v| acc + v);
        Ok(sum / Rat::from_integer(Int::from(4)))
    }
}

fn to_big(gram: &[Vec<i64>]) -> Vec<Vec<Int>> {
    gram.iter()
        .map(|row| row.iter().map(|&v| Int::from(v)).collect())
        .collect()
}

/// Depth-first walk of candidate coordinate ranges for the enumeration.
struct RangeWalk {
    d: Vec<f64>,
    mu: Vec<Vec<f64>>,
    shift: Vec<f64>,
    slack: f64,
    cap: u64,
    explored: u64,
    xs: Vec<i64>,
    ys: Vec<f64>,
    out: Vec<Vec<i64>>,
}

impl RangeWalk {
    /// Choose coordinate `level` (levels descend from n-1 to 0), given the
    /// remaining norm budget `rem` for levels <= `level`.
    fn descend(&mut self, level: usize, rem: f64) -> Result<(), LatticeError> {
        let center = self.shift[level]
            + (level + 1..self.ys.len())
                .map(|j| self.mu[level][j] * self.ys[j])
                .sum::<f64>();
        let radius = ((rem + self.slack).max(0.0) / self.d[level]).sqrt();
        let lo = (-center - radius).ceil() as i64 - 1;
        let hi = (-center + radius).floor() as i64 + 1;
        for x in lo..=hi {
            self.explored += 1;
            if self.explored > self.cap {
                return Err(LatticeError::TooManyVectors { cap: self.cap });
            }
            let offset = x as f64 + center;
            let next_rem = rem - self.d[level] * offset * offset;
            // True remainders are exact rationals; float error is far below
            // 0.25, so anything this negative is a genuine exclusion.
            if next_rem < -0.25 {
                continue;
            }
            self.xs[level] = x;
            self.ys[level] = x as f64 + self.shift[level];
            if level == 0 {
                self.out.push(self.xs.clone());
            } else {
                self.descend(level - 1, next_rem.max(0.0))?;
            }
        }
        Ok(())
    }
}
