//! Virasoro minimal models: Zhu-algebra and C2-algebra dimensions.
//!
//! The (p, q) minimal model (coprime p, q >= 2) has (p-1)(q-1)/2
//! irreducible modules, each with a one-dimensional top space, so Zhu's
//! algebra has dimension (p-1)(q-1)/2. The C2 algebra is spanned by the
//! images of the powers of the conformal vector, and the vacuum null
//! vector truncates them at the same count: both dimensions are equal,
//! so no minimal model is anomalous.

use serde::Serialize;
use thiserror::Error;

/// Errors from minimal-model parameter validation.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MinimalError {
    #[error("the minimal model needs p, q >= 2; got ({p}, {q})")]
    OutOfRange { p: u64, q: u64 },
    #[error("the minimal model needs coprime p, q; got ({p}, {q}) with gcd {gcd}")]
    NotCoprime { p: u64, q: u64, gcd: u64 },
}

/// Dimensions of the two algebras for the (p, q) minimal model.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MinimalReport {
    pub p: u64,
    pub q: u64,
    pub zhu_dim: u64,
    pub c2_dim: u64,
    pub verdict: String,
}

/// Both dimensions equal (p-1)(q-1)/2.
pub fn minimal_dims(p: u64, q: u64) -> Result<MinimalReport, MinimalError> {
    if p < 2 || q < 2 {
        return Err(MinimalError::OutOfRange { p, q });
    }
    let gcd = num_integer::gcd(p, q);
    if gcd != 1 {
        return Err(MinimalError::NotCoprime { p, q, gcd });
    }
    let d = (p - 1) * (q - 1) / 2;
    Ok(MinimalReport {
        p,
        q,
        zhu_dim: d,
        c2_dim: d,
        verdict: "NonAnomalous".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_module_counts() {
        let cases = [
            (2, 3, 1),
            (2, 5, 2),
            (2, 7, 3),
            (2, 9, 4),
            (3, 4, 3),
            (3, 5, 4),
            (3, 7, 6),
            (4, 5, 6),
        ];
        for (p, q, d) in cases {
            let report = minimal_dims(p, q).unwrap();
            assert_eq!(report.zhu_dim, d, "({p}, {q})");
            assert_eq!(report.c2_dim, d);
            assert_eq!(report.verdict, "NonAnomalous");
        }
    }

    #[test]
    fn dimensions_are_symmetric_in_p_and_q() {
        for (p, q) in [(2, 3), (3, 8), (5, 12), (7, 10)] {
            assert_eq!(
                minimal_dims(p, q).unwrap().zhu_dim,
                minimal_dims(q, p).unwrap().zhu_dim
            );
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert_eq!(
            minimal_dims(1, 3).unwrap_err(),
            MinimalError::OutOfRange { p: 1, q: 3 }
        );
        assert_eq!(
            minimal_dims(3, 0).unwrap_err(),
            MinimalError::OutOfRange { p: 3, q: 0 }
        );
        assert_eq!(
            minimal_dims(4, 6).unwrap_err(),
            MinimalError::NotCoprime { p: 4, q: 6, gcd: 2 }
        );
        assert_eq!(
            minimal_dims(5, 5).unwrap_err(),
            MinimalError::NotCoprime { p: 5, q: 5, gcd: 5 }
        );
    }
}
