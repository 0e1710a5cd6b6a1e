//! Exact linear algebra over big integers and rationals.
//!
//! Everything that decides a result is computed exactly: fraction-free
//! elimination for determinants, gcd-normalized row echelon for ranks,
//! Smith normal form for finite abelian quotients, and a rational LDL^T
//! decomposition that later drives lattice point enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact integer used throughout the crate.
pub type Int = BigInt;

/// Exact rational used throughout the crate.
pub type Rat = BigRational;

/// Leading principal minors of a square integer matrix, by fraction-free
/// (Bareiss) elimination.
///
/// Minors are returned in order of size. Computation stops after the first
/// minor that is zero or negative, so the result has full length exactly when
/// every leading principal minor is positive (Sylvester's criterion for
/// positive definiteness); the last entry is then the determinant.
pub fn leading_principal_minors(m: &[Vec<Int>]) -> Vec<Int> {
    let n = m.len();
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut prev = Int::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if !pivot.is_positive() || k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &pivot - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free elimination divides exactly");
                a[i][j] = q;
            }
        }
        prev = pivot;
    }
    minors
}

/// Rank of an integer matrix whose rows arrive from an iterator.
///
/// Rows are consumed lazily and folded into a gcd-normalized echelon basis,
/// so callers may feed cheaply generated rows and rely on the early exit as
/// soon as the rank reaches `ncols`.
pub fn rank_of_rows<I>(rows: I, ncols: usize) -> usize
where
    I: IntoIterator<Item = Vec<Int>>,
{
    let mut echelon: Vec<(usize, Vec<Int>)> = Vec::new();
    for mut row in rows {
        debug_assert_eq!(row.len(), ncols);
        reduce_against_echelon(&mut row, &echelon);
        if let Some(pivot) = first_nonzero(&row) {
            normalize_primitive(&mut row);
            let pos = echelon.partition_point(|(p, _)| *p < pivot);
            echelon.insert(pos, (pivot, row));
            if echelon.len() == ncols {
                break;
            }
        }
    }
    echelon.len()
}

/// Eliminate `row` against echelon rows in ascending pivot order. Every base
/// row has zeros left of its own pivot, so earlier zeros are never destroyed.
fn reduce_against_echelon(row: &mut [Int], echelon: &[(usize, Vec<Int>)]) {
    for (pivot, base) in echelon {
        let c = row[*pivot].clone();
        if c.is_zero() {
            continue;
        }
        let p = base[*pivot].clone();
        let g = c.gcd(&p);
        let scale_row = &p / &g;
        let scale_base = &c / &g;
        for (r, b) in row.iter_mut().zip(base.iter()) {
            *r = &*r * &scale_row - b * &scale_base;
        }
        debug_assert!(row[*pivot].is_zero());
        strip_content(row);
    }
}

fn first_nonzero(row: &[Int]) -> Option<usize> {
    row.iter().position(|v| !v.is_zero())
}

/// Divide by the gcd of the entries (no-op on a zero row).
fn strip_content(row: &mut [Int]) {
    let mut g = Int::zero();
    for v in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Strip content and make the leading nonzero entry positive.
fn normalize_primitive(row: &mut [Int]) {
    strip_content(row);
    if let Some(c) = first_nonzero(row) {
        if row[c].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

/// Smith normal form data for a nonsingular square integer matrix.
pub struct Snf {
    /// Positive diagonal entries with `diag[0] | diag[1] | ...`.
    pub diag: Vec<Int>,
    /// Unimodular row transform: `left * m * v` is `diag` for some unimodular
    /// column transform `v` (which is not needed and not stored).
    pub left: Vec<Vec<Int>>,
}

/// Smith normal form of a nonsingular square integer matrix, tracking only
/// the row transform.
pub fn smith_normal_form(m: &[Vec<Int>]) -> Snf {
    let n = m.len();
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut u = identity(n);
    for t in 0..n {
        while let Some((bi, bj)) = min_abs_entry(&a, t) {
            a.swap(t, bi);
            u.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t]);
                if !q.is_zero() {
                    for j in 0..n {
                        let s = &a[t][j] * &q;
                        a[i][j] -= s;
                        let s = &u[t][j] * &q;
                        u[i][j] -= s;
                    }
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            match find_nondivisible(&a, t) {
                Some(i) => {
                    // Fold the offending row into row t so the Euclidean
                    // passes shrink the pivot to a divisor of everything.
                    for j in 0..n {
                        let s = a[i][j].clone();
                        a[t][j] += s;
                        let s = u[i][j].clone();
                        u[t][j] += s;
                    }
                }
                None => break,
            }
        }
    }
    for t in 0..n {
        if a[t][t].is_negative() {
            for v in a[t].iter_mut() {
                *v = -&*v;
            }
            for v in u[t].iter_mut() {
                *v = -&*v;
            }
        }
    }
    Snf {
        diag: (0..n).map(|t| a[t][t].clone()).collect(),
        left: u,
    }
}

/// Position of a nonzero entry of minimal absolute value in the trailing
/// submatrix starting at `(t, t)`.
fn min_abs_entry(a: &[Vec<Int>], t: usize) -> Option<(usize, usize)> {
    let n = a.len();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if a[i][j].is_zero() {
                continue;
            }
            match &best {
                Some((bi, bj)) if a[*bi][*bj].abs() <= a[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// A row below `t` whose trailing entries are not all divisible by the pivot
/// `a[t][t]`.
fn find_nondivisible(a: &[Vec<Int>], t: usize) -> Option<usize> {
    let n = a.len();
    let pivot = &a[t][t];
    (t + 1..n).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % pivot).is_zero()))
}

/// Identity matrix.
pub fn identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect()
}

/// Matrix product.
pub fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|arow| {
            (0..cols)
                .map(|j| {
                    let mut s = Int::zero();
                    for (av, brow) in arow.iter().zip(b.iter()) {
                        s += av * &brow[j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Matrix transpose.
pub fn transpose(a: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

/// Exact inverse of a square integer matrix, when it is nonsingular.
pub fn invert(m: &[Vec<Int>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|r| r.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let piv = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &piv;
            inv[col][j] /= &piv;
        }
        let arow = a[col].clone();
        let irow = inv[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let s = &arow[j] * &f;
                a[r][j] -= s;
                let s = &irow[j] * &f;
                inv[r][j] -= s;
            }
        }
    }
    Some(inv)
}

/// Exact inverse of a square integer matrix, when the inverse exists and is
/// itself integral (i.e. the matrix is unimodular).
pub fn invert_int(m: &[Vec<Int>]) -> Option<Vec<Vec<Int>>> {
    let inv = invert(m)?;
    let mut out = Vec::with_capacity(inv.len());
    for row in inv {
        let mut irow = Vec::with_capacity(row.len());
        for v in row {
            if !v.is_integer() {
                return None;
            }
            irow.push(v.to_integer());
        }
        out.push(irow);
    }
    Some(out)
}

/// Rational LDL^T data of a symmetric positive-definite integer matrix.
///
/// The quadratic form becomes `sum_i d[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2`;
/// `d[i]` is the squared length of the i-th Gram–Schmidt vector.
pub fn ldl(gram: &[Vec<Int>]) -> (Vec<Rat>, Vec<Vec<Rat>>) {
    let n = gram.len();
    let mut d = vec![Rat::zero(); n];
    let mut mu = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        let mut di = Rat::from_integer(gram[i][i].clone());
        for k in 0..i {
            di -= &d[k] * &mu[k][i] * &mu[k][i];
        }
        assert!(
            di.is_positive(),
            "LDL^T requires a positive-definite matrix"
        );
        d[i] = di;
        for j in i + 1..n {
            let mut v = Rat::from_integer(gram[i][j].clone());
            for k in 0..i {
                v -= &d[k] * &mu[k][i] * &mu[k][j];
            }
            mu[i][j] = v / &d[i];
        }
    }
    (d, mu)
}

/// A basis of the integer row lattice spanned by `rows`, via integer row
/// operations only (so the span is preserved exactly, not just the rank).
///
/// The result is in canonical echelon form: pivots are positive, entries
/// above each pivot are reduced into `[0, pivot)`, and rows are ordered by
/// pivot column. For full-rank square input this is a lattice basis.
pub fn row_lattice_basis(rows: Vec<Vec<Int>>, ncols: usize) -> Vec<Vec<Int>> {
    let mut basis: Vec<(usize, Vec<Int>)> = Vec::new();
    for row in rows {
        debug_assert_eq!(row.len(), ncols);
        insert_lattice_row(&mut basis, row);
    }
    // Back-reduce entries above each pivot into [0, pivot).
    for i in (0..basis.len()).rev() {
        let (pivot_col, pivot_row) = {
            let (c, r) = &basis[i];
            (*c, r.clone())
        };
        for (_, row_j) in basis.iter_mut().take(i) {
            let (q, _) = row_j[pivot_col].div_mod_floor(&pivot_row[pivot_col]);
            if q.is_zero() {
                continue;
            }
            for (v, p) in row_j.iter_mut().zip(pivot_row.iter()) {
                let s = p * &q;
                *v -= s;
            }
        }
    }
    basis.into_iter().map(|(_, r)| r).collect()
}

/// Fold one row into the echelon basis with Euclidean steps on each pivot
/// column, keeping the spanned row lattice unchanged.
fn insert_lattice_row(basis: &mut Vec<(usize, Vec<Int>)>, mut row: Vec<Int>) {
    loop {
        let Some(c) = first_nonzero(&row) else {
            return;
        };
        if row[c].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        let pos = basis.partition_point(|(p, _)| *p < c);
        if pos == basis.len() || basis[pos].0 != c {
            basis.insert(pos, (c, row));
            return;
        }
        let base = &mut basis[pos].1;
        let (q, r) = row[c].div_rem(&base[c]);
        if !q.is_zero() {
            for (v, b) in row.iter_mut().zip(base.iter()) {
                let s = b * &q;
                *v -= s;
            }
        }
        if !r.is_zero() {
            // The remainder at column c is smaller than the old pivot:
            // promote it to pivot and keep folding the displaced row.
            std::mem::swap(base, &mut row);
        }
        // Otherwise row[c] is now zero; continue with its next column.
    }
}

/// Binomial coefficient with big-integer result.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    num_integer::binomial(Int::from(n), Int::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect()
    }

    #[test]
    fn minors_of_root_lattice_grams() {
        let a2 = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(
            leading_principal_minors(&a2),
            vec![Int::from(2), Int::from(3)]
        );
        let a3 = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(
            leading_principal_minors(&a3),
            vec![Int::from(2), Int::from(3), Int::from(4)]
        );
    }

    #[test]
    fn minors_stop_at_first_nonpositive() {
        let indefinite = m(&[&[2, 3], &[3, 2]]);
        assert_eq!(
            leading_principal_minors(&indefinite),
            vec![Int::from(2), Int::from(-5)]
        );
        let zero_corner = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(leading_principal_minors(&zero_corner), vec![Int::from(0)]);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        assert_eq!(rank_of_rows(m(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank_of_rows(m(&[&[1, 0], &[0, 1], &[5, 7]]), 2), 2);
        assert_eq!(rank_of_rows(Vec::<Vec<Int>>::new(), 3), 0);
        assert_eq!(rank_of_rows(m(&[&[0, 0]]), 2), 0);
        assert_eq!(rank_of_rows(m(&[&[2, 4, 6], &[3, 6, 9], &[1, 0, 1]]), 3), 2);
    }

    #[test]
    fn rank_stops_consuming_rows_once_full() {
        let produced = Cell::new(0usize);
        let rows = (0..100u64).map(|i| {
            produced.set(produced.get() + 1);
            vec![Int::from(i % 7), Int::from(1)]
        });
        assert_eq!(rank_of_rows(rows, 2), 2);
        assert_eq!(produced.get(), 2);
    }

    fn check_snf(g: &[Vec<Int>], expected_diag: &[i64]) {
        let n = g.len();
        let snf = smith_normal_form(g);
        let expected: Vec<Int> = expected_diag.iter().map(|&v| Int::from(v)).collect();
        assert_eq!(snf.diag, expected);
        for i in 0..n {
            assert!(snf.diag[i].is_positive());
            if i + 1 < n {
                assert!((&snf.diag[i + 1] % &snf.diag[i]).is_zero());
            }
        }
        assert!(
            invert_int(&snf.left).is_some(),
            "row transform must be unimodular"
        );
        // left * g must equal diag * v for a unimodular v: divide rows by the
        // diagonal and demand an integral inverse.
        let ug = mat_mul(&snf.left, g);
        let mut v = ug;
        for (i, row) in v.iter_mut().enumerate() {
            for entry in row.iter_mut() {
                let (q, r) = entry.div_rem(&snf.diag[i]);
                assert!(r.is_zero());
                *entry = q;
            }
        }
        assert!(invert_int(&v).is_some(), "column transform must exist");
        let det = leading_principal_minors(g).last().unwrap().clone();
        let prod = snf.diag.iter().fold(Int::from(1), |acc, d| acc * d);
        assert_eq!(prod, det.abs());
    }

    #[test]
    fn smith_normal_form_of_small_grams() {
        check_snf(&m(&[&[2, 0], &[0, 2]]), &[2, 2]);
        check_snf(&m(&[&[2, -1], &[-1, 2]]), &[1, 3]);
        check_snf(&m(&[&[4, 2], &[2, 4]]), &[2, 6]);
        check_snf(&m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]), &[1, 1, 4]);
    }

    #[test]
    fn inverse_of_hexagonal_gram() {
        let g = m(&[&[2, -1], &[-1, 2]]);
        let inv = invert(&g).unwrap();
        let r = |num: i64, den: i64| Rat::new(Int::from(num), Int::from(den));
        assert_eq!(inv[0][0], r(2, 3));
        assert_eq!(inv[0][1], r(1, 3));
        assert_eq!(inv[1][0], r(1, 3));
        assert_eq!(inv[1][1], r(2, 3));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(invert(&singular).is_none());
        assert!(invert_int(&g).is_none());
        assert_eq!(
            invert_int(&m(&[&[1, 1], &[0, 1]])).unwrap(),
            m(&[&[1, -1], &[0, 1]])
        );
    }

    #[test]
    fn ldl_reconstructs_the_gram_matrix() {
        for g in [
            m(&[&[2, -1], &[-1, 2]]),
            m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            m(&[&[4, 1], &[1, 6]]),
        ] {
            let (d, mu) = ldl(&g);
            let coeff = |i: usize, j: usize| -> Rat {
                use std::cmp::Ordering::*;
                match i.cmp(&j) {
                    Equal => Rat::one(),
                    Less => mu[i][j].clone(),
                    Greater => Rat::zero(),
                }
            };
            for (i, g_row) in g.iter().enumerate() {
                for (j, g_ij) in g_row.iter().enumerate() {
                    let mut s = Rat::zero();
                    for (k, dk) in d.iter().enumerate() {
                        s += dk * &coeff(k, i) * &coeff(k, j);
                    }
                    assert_eq!(s, Rat::from_integer(g_ij.clone()));
                }
            }
        }
        let (d, mu) = ldl(&m(&[&[2, -1], &[-1, 2]]));
        assert_eq!(d[0], Rat::from_integer(Int::from(2)));
        assert_eq!(d[1], Rat::new(Int::from(3), Int::from(2)));
        assert_eq!(mu[0][1], Rat::new(Int::from(-1), Int::from(2)));
    }

    #[test]
    fn row_lattice_basis_is_canonical() {
        let basis = row_lattice_basis(m(&[&[2, 0], &[0, 2], &[1, 1]]), 2);
        assert_eq!(basis, m(&[&[1, 1], &[0, 2]]));
        let basis = row_lattice_basis(m(&[&[0, 3], &[3, 0]]), 2);
        assert_eq!(basis, m(&[&[3, 0], &[0, 3]]));
        // Order of input rows must not change the canonical form.
        let basis = row_lattice_basis(m(&[&[1, 1], &[2, 0], &[0, 2]]), 2);
        assert_eq!(basis, m(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(10, 3), Int::from(120));
        assert_eq!(binomial(4, 0), Int::from(1));
        assert_eq!(binomial(3, 5), Int::from(0));
        assert_eq!(binomial(121, 2), Int::from(7260));
    }
}
