//! Zhu-algebra dimensions for affine Lie-algebra vertex operator algebras,
//! the conjectured grade-by-grade description of the C2 algebra for sl(N),
//! and the degree-refined character of affine sl(2).
//!
//! The sl(N) description is conjectural beyond grade k (it is a theorem up
//! to there); this module evaluates it and reports agreement with Zhu's
//! algebra, never assuming it.

use crate::exact::Int;
use crate::lie::{Family, LieError, RootSystem};
use crate::qseries::{inv_pochhammer, LaurentPoly, SeriesError, TruncatedSeries};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

/// Errors from the affine-VOA computations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AffineError {
    #[error(
        "the grade-{grade} module list for sl({n}) at level {k} has negative \
         dimension {dim}, falsifying its conjectured description"
    )]
    ConjectureViolation {
        n: usize,
        k: i64,
        grade: u32,
        dim: Int,
    },
    #[error("resource limit exceeded: {what} reached {value}, cap {cap}")]
    ResourceLimit {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("result too large: {what} does not fit in 128 bits")]
    TooLarge { what: &'static str },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// dim A(V_{g,k}): the sum of squared Weyl dimensions over the dominant
/// weights admissible at level k.
pub fn affine_zhu_dim(rs: &RootSystem, level: i64) -> Result<BigUint, AffineError> {
    assert!(level >= 1, "the level must be a positive integer");
    let mut total = BigUint::zero();
    for weight in rs.level_weights(level) {
        let d = rs.weyl_dim(&weight)?;
        total += &d * &d;
    }
    Ok(total)
}

/// The module list conjectured for one grade of the sl(N) C2 algebra: a
/// plus-list and a minus-list of dominant weights whose squared Weyl
/// dimensions are added and subtracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeModules {
    pub grade: u32,
    /// Dynkin labels of the weights counted positively, in lexicographic
    /// order.
    pub plus: Vec<Vec<i64>>,
    /// Dynkin labels of the weights counted negatively.
    pub minus: Vec<Vec<i64>>,
    /// Sum over plus of (dim L)^2 minus the same over minus. Negative only
    /// if the conjectured description is wrong.
    pub dim: Int,
}

/// Grade-m module list for the sl(N) C2 algebra at level k.
///
/// With N-ality t(mu) = sum_i i·mu_i and mu_0 = k - sum_i mu_i:
///
/// * plus-list: mu dominant with mu_0 >= 0, t == m (mod N), t <= m, and
///   N·mu_0 + t >= m;
/// * minus-list: nu dominant with nu_0 >= 1, t == m-1 (mod N), t <= m-1,
///   and N·nu_0 + t >= m.
pub fn sln_c2_grade(n: usize, k: i64, m: u32) -> Result<GradeModules, AffineError> {
    assert!(n >= 2, "sl(N) needs N >= 2");
    assert!(k >= 1, "the level must be a positive integer");
    let rs = RootSystem::new(Family::A, n - 1)?;
    grade_modules(&rs, n, k, m)
}

fn grade_modules(rs: &RootSystem, n: usize, k: i64, m: u32) -> Result<GradeModules, AffineError> {
    let m = m as i64;
    let nality = |w: &[i64]| -> i64 { w.iter().enumerate().map(|(i, c)| (i as i64 + 1) * c).sum() };
    let zeroth = |w: &[i64]| -> i64 { k - w.iter().sum::<i64>() };
    // For sl(N) every comark is 1, so the level-k weights are exactly those
    // with mu_0 >= 0, and the level-(k-1) weights those with nu_0 >= 1.
    let plus: Vec<Vec<i64>> = rs
        .level_weights(k)
        .into_iter()
        .filter(|w| {
            let t = nality(w);
            t.rem_euclid(n as i64) == m.rem_euclid(n as i64)
                && t <= m
                && n as i64 * zeroth(w) + t >= m
        })
        .collect();
    let minus: Vec<Vec<i64>> = if k >= 1 {
        rs.level_weights(k - 1)
            .into_iter()
            .filter(|w| {
                let t = nality(w);
                t.rem_euclid(n as i64) == (m - 1).rem_euclid(n as i64)
                    && t < m
                    && n as i64 * zeroth(w) + t >= m
            })
            .collect()
    } else {
        vec![]
    };
    let square_sum = |list: &[Vec<i64>]| -> Result<Int, AffineError> {
        let mut acc = BigUint::zero();
        for w in list {
            let d = rs.weyl_dim(w)?;
            acc += &d * &d;
        }
        Ok(Int::from(acc))
    };
    let dim = square_sum(&plus)? - square_sum(&minus)?;
    Ok(GradeModules {
        grade: m as u32,
        plus,
        minus,
        dim,
    })
}

/// The full conjectured C2 profile for sl(N) at level k, compared against
/// the Zhu dimension.
#[derive(Debug, Clone)]
pub struct SlnC2 {
    pub n: usize,
    pub level: i64,
    /// Module lists for grades 0..=N·k.
    pub grades: Vec<GradeModules>,
    /// Nonnegative per-grade dimensions.
    pub per_grade: Vec<BigUint>,
    pub total: BigUint,
    pub zhu: BigUint,
    /// Whether the conjectured total equals the Zhu dimension; reported,
    /// never assumed.
    pub matches_zhu: bool,
}

/// Evaluate the conjectured grade-by-grade description for sl(N) at level
/// k across all grades 0..=N·k (everything beyond is provably zero, which
/// is asserted on a safety margin). A negative grade dimension falsifies
/// the description and is returned as an error with the evidence.
pub fn sln_c2_total(n: usize, k: i64) -> Result<SlnC2, AffineError> {
    assert!(n >= 2, "sl(N) needs N >= 2");
    assert!(k >= 1, "the level must be a positive integer");
    let rs = RootSystem::new(Family::A, n - 1)?;
    let top = n as i64 * k;
    let mut grades = Vec::with_capacity(top as usize + 1);
    let mut per_grade = Vec::with_capacity(top as usize + 1);
    let mut total = BigUint::zero();
    for m in 0..=top as u32 {
        let gm = grade_modules(&rs, n, k, m)?;
        if gm.dim < Int::zero() {
            return Err(AffineError::ConjectureViolation {
                n,
                k,
                grade: m,
                dim: gm.dim,
            });
        }
        let d = gm.dim.to_biguint().expect("checked nonnegative");
        total += &d;
        per_grade.push(d);
        grades.push(gm);
    }
    for m in (top + 1)..=(top + n as i64) {
        let gm = grade_modules(&rs, n, k, m as u32)?;
        assert!(
            gm.dim.is_zero() && gm.plus.is_empty() && gm.minus.is_empty(),
            "grades beyond N·k are empty because N·w_0 + t never exceeds N·k"
        );
    }
    let zhu = affine_zhu_dim(&rs, k)?;
    let matches_zhu = total == zhu;
    Ok(SlnC2 {
        n,
        level: k,
        grades,
        per_grade,
        total,
        zhu,
        matches_zhu,
    })
}

/// Cap on the estimated work (lattice-point triples times series length)
/// in [`sl2_refined_character`].
const CHARACTER_WORK_CAP: u64 = 50_000_000;

/// The degree-refined character of V_{sl(2),k}, exact to order q^trunc.
///
/// The series is the triple sum over vectors e, h, f in Z_{>=0}^k of
///
/// ```text
/// t^{|e|+|h|+|f|} z^{2(|e|-|f|)} q^{eAe + hAh + fAf + eBh + hBf}
///     / ( (q)_e (q)_h (q)_f )
/// ```
///
/// with |n| = sum_i i·n_i, A_ij = min{i,j}, B_ij = max{i+j-k, 0}, and
/// (q)_n = prod_i (q)_{n_i}. The q exponent tracks the grade (the L0
/// eigenvalue), the t exponent the degree (the number of creation
/// operators), and z the sl(2) weight. The summation domain is finite for
/// any truncation because the quadratic form alone reaches the q exponent:
/// its diagonal terms force n_i <= sqrt(trunc / i).
pub fn sl2_refined_character(k: i64, trunc: u32) -> Result<TruncatedSeries, AffineError> {
    assert!(k >= 1, "the level must be a positive integer");
    let k = k as usize;
    let a_mat: Vec<Vec<u64>> = (1..=k)
        .map(|i| (1..=k).map(|j| i.min(j) as u64).collect())
        .collect();
    let b_mat: Vec<Vec<u64>> = (1..=k)
        .map(|i| (1..=k).map(|j| (i + j).saturating_sub(k) as u64).collect())
        .collect();
    let quad = |u: &[u64], m: &Vec<Vec<u64>>, v: &[u64]| -> u64 {
        (0..k)
            .map(|i| (0..k).map(|j| u[i] * m[i][j] * v[j]).sum::<u64>())
            .sum()
    };
    // All single vectors whose own quadratic form fits the truncation; the
    // cross terms with B are nonnegative, so these are the only vectors any
    // admissible triple can use.
    let mut singles: Vec<Vec<u64>> = Vec::new();
    let mut stack = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == k {
            singles.push(prefix);
            continue;
        }
        let i = prefix.len() + 1;
        for v in 0..=isqrt(trunc as u64 / i as u64) {
            let mut next = prefix.clone();
            next.push(v);
            // Padding with zeros leaves the quadratic form unchanged, so
            // this prefix check never prunes a completable vector.
            let mut padded = next.clone();
            padded.resize(k, 0);
            if quad(&padded, &a_mat, &padded) <= trunc as u64 {
                stack.push(next);
            }
        }
    }
    let work = (singles.len() as u64)
        .pow(3)
        .saturating_mul(trunc as u64 + 1);
    if work > CHARACTER_WORK_CAP {
        return Err(AffineError::ResourceLimit {
            what: "character expansion work (triples × series length)",
            value: work,
            cap: CHARACTER_WORK_CAP,
        });
    }
    // Precompute the weighted size, self quadratic form, and denominator
    // expansion of every admissible vector.
    struct Single {
        v: Vec<u64>,
        weighted: u64,
        self_form: u64,
        denom: TruncatedSeries,
    }
    let singles: Vec<Single> = singles
        .into_iter()
        .map(|v| {
            let weighted = v.iter().enumerate().map(|(i, n)| (i as u64 + 1) * n).sum();
            let self_form = quad(&v, &a_mat, &v);
            let mut denom = TruncatedSeries::one(trunc);
            for &n in &v {
                if n > 0 {
                    denom = denom.mul(&inv_pochhammer(n as u32, trunc))?;
                }
            }
            Ok(Single {
                v,
                weighted,
                self_form,
                denom,
            })
        })
        .collect::<Result<_, AffineError>>()?;
    let mut sum = TruncatedSeries::zero(trunc);
    for e in &singles {
        for h in &singles {
            let eh = e.self_form + h.self_form + quad(&e.v, &b_mat, &h.v);
            if eh > trunc as u64 {
                continue;
            }
            let e_denom_h = e.denom.mul(&h.denom)?;
            for f in &singles {
                let q_exp = eh + f.self_form + quad(&h.v, &b_mat, &f.v);
                if q_exp > trunc as u64 {
                    continue;
                }
                let t_exp = e.weighted + h.weighted + f.weighted;
                let z_exp = 2 * (e.weighted as i64 - f.weighted as i64);
                let head = TruncatedSeries::term(
                    trunc,
                    q_exp as u32,
                    t_exp as u32,
                    LaurentPoly::monomial(z_exp, Int::one()),
                );
                sum = sum.add(&head.mul(&e_denom_h)?.mul(&f.denom)?)?;
            }
        }
    }
    Ok(sum)
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

/// The grade-m piece of the sl(2) C2 algebra at level k, as an sl(2)
/// character: sum_{a=0}^{min{m, 2k-m}} (-1)^{m+a} chi_a(z)^2, and zero
/// beyond grade 2k, where chi_a(z) = z^a + z^{a-2} + ... + z^{-a}.
pub fn sl2_c2_closed_form(k: i64, m: u32) -> LaurentPoly {
    assert!(k >= 1, "the level must be a positive integer");
    let m = m as i64;
    if m > 2 * k {
        return LaurentPoly::zero();
    }
    let mut out = LaurentPoly::zero();
    for a in 0..=m.min(2 * k - m) {
        let chi = sl2_irrep_character(a);
        let mut sq = chi.mul(&chi);
        if (m + a) % 2 != 0 {
            sq = sq.mul(&LaurentPoly::monomial(0, Int::from(-1)));
        }
        out.add_assign(&sq);
    }
    out
}

/// Character of the (a+1)-dimensional sl(2) irreducible:
/// z^a + z^{a-2} + ... + z^{-a}.
pub fn sl2_irrep_character(a: i64) -> LaurentPoly {
    let mut chi = LaurentPoly::zero();
    let mut e = a;
    while e >= -a {
        chi.add_assign(&LaurentPoly::monomial(e, Int::one()));
        e -= 2;
    }
    chi
}

/// The per-grade z-characters of the sl(2) C2 algebra read off from the
/// refined character: the part where the grade (q exponent) equals the
/// degree (t exponent). Returns grades 0..=trunc; the profile is complete
/// once trunc >= 2k.
pub fn sl2_c2_from_character(k: i64, trunc: u32) -> Result<Vec<LaurentPoly>, AffineError> {
    let chi = sl2_refined_character(k, trunc)?;
    Ok((0..=trunc).map(|m| chi.coeff(m, m)).collect())
}

/// Conjectured C2 data in the JSON report.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct C2Conjecture {
    pub per_grade: Vec<u128>,
    pub total: u128,
    pub matches_zhu: bool,
}

/// JSON report for the affine subcommands.
#[derive(Debug, Clone, Serialize)]
pub struct AffineReport {
    pub algebra: String,
    pub level: i64,
    pub zhu_dim: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2_conjecture: Option<C2Conjecture>,
}

/// Zhu-dimension report for any simple algebra name like "A2" or "E8".
pub fn affine_zhu_report(algebra: &str, level: i64) -> Result<AffineReport, AffineError> {
    let rs = RootSystem::parse(algebra)?;
    let zhu = affine_zhu_dim(&rs, level)?;
    Ok(AffineReport {
        algebra: algebra.to_string(),
        level,
        zhu_dim: zhu
            .to_u128()
            .ok_or(AffineError::TooLarge { what: "zhu_dim" })?,
        c2_conjecture: None,
    })
}

/// Full conjecture-vs-Zhu report for sl(N), i.e. the A-series algebra
/// A_{N-1}.
pub fn sln_c2_report(n: usize, level: i64) -> Result<AffineReport, AffineError> {
    let result = sln_c2_total(n, level)?;
    let per_grade = result
        .per_grade
        .iter()
        .map(|d| {
            d.to_u128()
                .ok_or(AffineError::TooLarge { what: "per_grade" })
        })
        .collect::<Result<_, _>>()?;
    Ok(AffineReport {
        algebra: format!("A{}", n - 1),
        level,
        zhu_dim: result
            .zhu
            .to_u128()
            .ok_or(AffineError::TooLarge { what: "zhu_dim" })?,
        c2_conjecture: Some(C2Conjecture {
            per_grade,
            total: result
                .total
                .to_u128()
                .ok_or(AffineError::TooLarge { what: "total" })?,
            matches_zhu: result.matches_zhu,
        }),
    })
}
