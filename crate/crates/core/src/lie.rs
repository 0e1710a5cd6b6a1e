//! Finite-dimensional simple Lie algebra data: Cartan matrices, root
//! systems, highest-root marks, and Weyl dimensions of irreducible
//! representations.
//!
//! Simple roots are numbered as in Bourbaki. Weights are given by their
//! Dynkin labels (coefficients on the fundamental weights).

use crate::exact::{Int, Rat};
use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

/// The four classical families and five exceptional algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Errors from root-system construction and representation arithmetic.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("rank {rank} is not valid for family {family:?}")]
    BadRank { family: Family, rank: usize },
    #[error("cannot parse {0:?} as a simple Lie algebra name like A2 or E8")]
    BadName(String),
    #[error("Dynkin label at position {index} is negative")]
    NegativeLabel { index: usize },
}

/// A simple root system with everything needed for dimension formulas.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths of the simple roots, normalized so long roots
    /// get 1 (so short roots get 1/2 or 1/3).
    half_norms: Vec<Rat>,
    /// All positive roots, as coordinate vectors in the simple-root basis.
    positive_roots: Vec<Vec<i64>>,
    /// The highest root in the simple-root basis.
    highest_root: Vec<i64>,
    /// Marks: coefficients of the highest root on the simple roots.
    marks: Vec<i64>,
    /// Comarks: marks rescaled by the root half-norms; integers for every
    /// simple algebra.
    comarks: Vec<i64>,
}

impl RootSystem {
    /// Build the root system for `family` at the given rank.
    pub fn new(family: Family, rank: usize) -> Result<RootSystem, LieError> {
        let cartan = cartan_matrix(family, rank)?;
        let half_norms = half_norms(family, rank);
        let positive_roots = positive_roots(&cartan);
        let highest_root = positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("a simple algebra has positive roots")
            .clone();
        let marks = highest_root.clone();
        let comarks: Vec<i64> = marks
            .iter()
            .zip(&half_norms)
            .map(|(m, d)| {
                let c = Rat::from_integer(Int::from(*m)) * d;
                assert!(c.is_integer(), "comarks are integers");
                c.to_integer().to_i64().expect("comark fits in i64")
            })
            .collect();
        Ok(RootSystem {
            family,
            rank,
            cartan,
            half_norms,
            positive_roots,
            highest_root,
            marks,
            comarks,
        })
    }

    /// Parse names like "A2", "E8", "G2".
    pub fn parse(name: &str) -> Result<RootSystem, LieError> {
        let err = || LieError::BadName(name.to_string());
        let mut chars = name.chars();
        let family = match chars.next().ok_or_else(err)? {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(err()),
        };
        let digits = chars.as_str();
        let rank: usize = digits.parse().map_err(|_| err())?;
        if digits != rank.to_string() {
            return Err(err());
        }
        RootSystem::new(family, rank).map_err(|_| err())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// The dual Coxeter number: 1 + sum of comarks.
    pub fn dual_coxeter_number(&self) -> i64 {
        1 + self.comarks.iter().sum::<i64>()
    }

    /// Inner product (root, weight-lambda + rho) needed by the Weyl
    /// dimension formula, where the root is in simple-root coordinates and
    /// the weight in Dynkin labels: (alpha, lambda) = sum_i c_i d_i
    /// lambda_i for alpha = sum c_i alpha_i.
    fn root_dot_weight(&self, root: &[i64], labels_plus_one: &[Int]) -> Rat {
        root.iter()
            .zip(&self.half_norms)
            .zip(labels_plus_one)
            .map(|((c, d), l)| Rat::from_integer(Int::from(*c) * l) * d)
            .sum()
    }

    /// Dimension of the irreducible representation with the given Dynkin
    /// labels (Weyl dimension formula, evaluated exactly).
    pub fn weyl_dim(&self, labels: &[i64]) -> Result<BigUint, LieError> {
        assert_eq!(labels.len(), self.rank, "one label per simple root");
        if let Some(index) = labels.iter().position(|l| *l < 0) {
            return Err(LieError::NegativeLabel { index });
        }
        let shifted: Vec<Int> = labels.iter().map(|l| Int::from(l + 1)).collect();
        let ones: Vec<Int> = vec![Int::one(); self.rank];
        let mut num = Rat::one();
        let mut den = Rat::one();
        for root in &self.positive_roots {
            num *= self.root_dot_weight(root, &shifted);
            den *= self.root_dot_weight(root, &ones);
        }
        let dim = num / den;
        assert!(
            dim.is_integer() && dim.is_positive(),
            "Weyl dims are positive integers"
        );
        Ok(dim.to_integer().to_biguint().expect("positive"))
    }

    /// All dominant weights admissible at the given level: Dynkin labels
    /// lambda with sum_i comark_i · lambda_i <= level, in lexicographic
    /// order.
    pub fn level_weights(&self, level: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        self.level_weights_rec(level, 0, &mut cur, &mut out);
        out
    }

    fn level_weights_rec(
        &self,
        budget: i64,
        slot: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if slot == self.rank {
            out.push(cur.clone());
            return;
        }
        let comark = self.comarks[slot];
        let max = budget / comark;
        for v in 0..=max {
            cur[slot] = v;
            self.level_weights_rec(budget - v * comark, slot + 1, cur, out);
        }
        cur[slot] = 0;
    }
}

/// The Cartan matrix a[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j) in
/// Bourbaki numbering.
fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>, LieError> {
    let bad = || LieError::BadRank { family, rank };
    let chain = |n: usize| {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    match family {
        Family::A => {
            if rank < 1 {
                return Err(bad());
            }
            Ok(chain(rank))
        }
        Family::B => {
            // Short root last: alpha_{r} short, a[r-2][r-1] = -2.
            if rank < 2 {
                return Err(bad());
            }
            let mut a = chain(rank);
            a[rank - 2][rank - 1] = -2;
            Ok(a)
        }
        Family::C => {
            // Long root last: transpose of B.
            if rank < 2 {
                return Err(bad());
            }
            let mut a = chain(rank);
            a[rank - 1][rank - 2] = -2;
            Ok(a)
        }
        Family::D => {
            if rank < 3 {
                return Err(bad());
            }
            let mut a = chain(rank - 1);
            a.iter_mut().for_each(|row| row.push(0));
            a.push(vec![0; rank]);
            a[rank - 1][rank - 1] = 2;
            // The fork: alpha_rank attaches to alpha_{rank-2}.
            a[rank - 3][rank - 1] = -1;
            a[rank - 1][rank - 3] = -1;
            Ok(a)
        }
        Family::E => {
            if !(6..=8).contains(&rank) {
                return Err(bad());
            }
            // Bourbaki: alpha_2 attaches to alpha_4; the chain is
            // 1-3-4-5-6(-7)(-8).
            let mut a = vec![vec![0i64; rank]; rank];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut link = |i: usize, j: usize| {
                a[i][j] = -1;
                a[j][i] = -1;
            };
            link(0, 2);
            link(1, 3);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            if rank >= 7 {
                link(5, 6);
            }
            if rank == 8 {
                link(6, 7);
            }
            Ok(a)
        }
        Family::F => {
            if rank != 4 {
                return Err(bad());
            }
            // 1-2=>3-4 with alpha_3, alpha_4 short.
            let mut a = chain(4);
            a[1][2] = -2;
            Ok(a)
        }
        Family::G => {
            if rank != 2 {
                return Err(bad());
            }
            // alpha_1 short, alpha_2 long.
            Ok(vec![vec![2, -1], vec![-3, 2]])
        }
    }
}

/// Half squared lengths d_i = (alpha_i, alpha_i)/2, normalized so long
/// roots get 1. Determined by d_j · a[j][i] = d_i · a[i][j].
fn half_norms(family: Family, rank: usize) -> Vec<Rat> {
    let one = Rat::one();
    let half = Rat::new(Int::one(), Int::from(2));
    let third = Rat::new(Int::one(), Int::from(3));
    match family {
        Family::A | Family::D | Family::E => vec![one; rank],
        Family::B => {
            let mut d = vec![one; rank];
            d[rank - 1] = half;
            d
        }
        Family::C => {
            let mut d = vec![half; rank];
            d[rank - 1] = one;
            d
        }
        Family::F => vec![one.clone(), one, half.clone(), half],
        Family::G => vec![third, one],
    }
}

/// All positive roots in simple-root coordinates, found by closing the
/// simple roots under root strings: beta + alpha_i is a root when the
/// alpha_i-string through beta continues, i.e. when the backward string
/// length p exceeds <beta, alpha_i^vee> - ... concretely when
/// p - sum_j beta_j a[j][i] > 0.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    use std::collections::BTreeSet;
    let rank = cartan.len();
    // Process strictly by height so that when a root is examined, every
    // root of smaller height (hence its whole backward string) is known.
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut alpha = vec![0i64; rank];
            alpha[i] = 1;
            alpha
        })
        .collect();
    known.extend(level.iter().cloned());
    while !level.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..rank {
                // Pairing <beta, alpha_i^vee> = sum_j beta_j a[j][i].
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                // Backward string length: how far beta - k·alpha_i stays a
                // root.
                let mut p = 0i64;
                let mut back = beta.clone();
                loop {
                    back[i] -= 1;
                    if back[i] >= 0 && known.contains(&back) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut fwd = beta.clone();
                    fwd[i] += 1;
                    next.insert(fwd);
                }
            }
        }
        level = next.into_iter().collect();
        known.extend(level.iter().cloned());
    }
    known.into_iter().collect()
}
