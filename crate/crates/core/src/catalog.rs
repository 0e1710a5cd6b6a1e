//! Named lattice constructors and name resolution.
//!
//! Root lattices are generated from their Dynkin diagrams (Gram matrix
//! 2I − adjacency, Bourbaki node numbering). The glued lattice D14A1_11 is
//! the index-2 extension of D14 ⊕ A1 by a glue vector in the
//! (spinor weight, A1 weight) class; its construction is cross-checked here
//! and audited against the published determinant and minimum-vector data in
//! the test suite.

use crate::exact::{self, Int, Rat};
use crate::lattice::Lattice;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Largest rank accepted by the name parser, so a typo cannot request an
/// absurd allocation.
const MAX_NAMED_RANK: usize = 256;

fn from_edges(name: String, rank: usize, edges: &[(usize, usize)]) -> Lattice {
    let mut gram = vec![vec![0i64; rank]; rank];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        gram[a][b] = -1;
        gram[b][a] = -1;
    }
    Lattice::new(Some(name), gram).expect("simply-laced diagram grams are valid")
}

/// Root lattice A_n (n ≥ 1): path diagram on n nodes.
pub fn a_n(n: usize) -> Lattice {
    assert!(n >= 1, "A_n requires n >= 1");
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    from_edges(format!("A{n}"), n, &edges)
}

/// Root lattice D_n (n ≥ 3): path on nodes 0..n-2 with the extra node n-1
/// forked off node n-3.
pub fn d_n(n: usize) -> Lattice {
    assert!(n >= 3, "D_n requires n >= 3");
    let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
    edges.push((n - 3, n - 1));
    from_edges(format!("D{n}"), n, &edges)
}

fn e_series(n: usize) -> Lattice {
    assert!((6..=8).contains(&n));
    let mut edges = vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)];
    if n >= 7 {
        edges.push((5, 6));
    }
    if n == 8 {
        edges.push((6, 7));
    }
    from_edges(format!("E{n}"), n, &edges)
}

/// Root lattice E6.
pub fn e6() -> Lattice {
    e_series(6)
}

/// Root lattice E7.
pub fn e7() -> Lattice {
    e_series(7)
}

/// Root lattice E8.
pub fn e8() -> Lattice {
    e_series(8)
}

/// Rank-1 lattice with Gram matrix [[2k]], named `Z<2k>`.
pub fn rank1(k: i64) -> Lattice {
    assert!(k >= 1, "rank-1 lattice needs k >= 1");
    Lattice::new(Some(format!("Z{}", 2 * k)), vec![vec![2 * k]])
        .expect("[[2k]] is even and positive definite")
}

/// The index-2 extension of D14 ⊕ A1 by a glue vector in the
/// (spinor weight, A1 weight) class. Determinant 2; 366 vectors of norm 2.
pub fn d14a1_11() -> Lattice {
    let d14 = d_n(14);
    let a1 = a_n(1);
    let base = d14.direct_sum(&a1);
    let base_big = to_big(base.gram());

    // Spinor fundamental weight of D14 in basis coordinates: the last column
    // of the inverse Gram matrix (its norm must be 14/4 = 7/2).
    let d14_inv = exact::invert(&to_big(d14.gram())).expect("positive definite");
    assert_eq!(d14_inv[13][13], Rat::new(Int::from(7), Int::from(2)));

    // Rows spanning 2·(extended lattice): 2·basis vectors and 2·glue.
    let mut rows = exact::identity(15);
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v *= 2;
        }
    }
    let mut two_glue: Vec<Int> = (0..14)
        .map(|i| {
            let doubled = &d14_inv[i][13] * Rat::from_integer(Int::from(2));
            assert!(
                doubled.is_integer(),
                "spinor weight has half-integer coordinates"
            );
            doubled.to_integer()
        })
        .collect();
    two_glue.push(Int::one()); // 2 · (A1 weight 1/2)
    rows.push(two_glue);

    let half_basis = exact::row_lattice_basis(rows, 15);
    assert_eq!(half_basis.len(), 15);
    let gram_x4 = exact::mat_mul(
        &exact::mat_mul(&half_basis, &base_big),
        &exact::transpose(&half_basis),
    );
    let gram: Vec<Vec<i64>> = gram_x4
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    let (q, r) = v.div_rem(&Int::from(4));
                    assert!(r.is_zero(), "glued pairings must be integral");
                    q.to_i64().expect("glued Gram entries are small")
                })
                .collect()
        })
        .collect();
    Lattice::new(Some("D14A1_11".into()), gram)
        .expect("the glued lattice is even and positive definite")
}

fn to_big(gram: &[Vec<i64>]) -> Vec<Vec<Int>> {
    gram.iter()
        .map(|row| row.iter().map(|&v| Int::from(v)).collect())
        .collect()
}

fn parse_index(rest: &str) -> Option<usize> {
    let n: usize = rest.parse().ok()?;
    // Insist on the canonical rendering so e.g. "A01" is rejected.
    if rest != n.to_string() || n > MAX_NAMED_RANK {
        return None;
    }
    Some(n)
}

/// Resolve a lattice by catalog name: `A<n>` (n ≥ 1), `D<n>` (n ≥ 3),
/// `E6`/`E7`/`E8`, `Z<2k>` (rank-1 Gram [[2k]]), and `D14A1_11`.
pub fn by_name(name: &str) -> Option<Lattice> {
    if name == "D14A1_11" {
        return Some(d14a1_11());
    }
    if let Some(rest) = name.strip_prefix('A') {
        let n = parse_index(rest)?;
        return (n >= 1).then(|| a_n(n));
    }
    if let Some(rest) = name.strip_prefix('D') {
        let n = parse_index(rest)?;
        return (n >= 3).then(|| d_n(n));
    }
    if let Some(rest) = name.strip_prefix('E') {
        let n = parse_index(rest)?;
        return (6..=8).contains(&n).then(|| e_series(n));
    }
    if let Some(rest) = name.strip_prefix('Z') {
        let m = parse_index(rest)?;
        return (m >= 2 && m % 2 == 0).then(|| rank1(m as i64 / 2));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeFile;

    #[test]
    fn root_lattice_determinants_and_kissing_numbers() {
        let table: Vec<(Lattice, i64, u64)> = vec![
            (a_n(1), 2, 2),
            (a_n(2), 3, 6),
            (a_n(3), 4, 12),
            (a_n(4), 5, 20),
            (d_n(4), 4, 24),
            (d_n(5), 4, 40),
            (e6(), 3, 72),
            (e7(), 2, 126),
            (e8(), 1, 240),
        ];
        for (l, det, kissing) in table {
            let s = l.summary().unwrap();
            assert_eq!(s.det.to_i64().unwrap(), det, "{} det", l.display_name());
            assert_eq!(s.mu, 2, "{} mu", l.display_name());
            assert_eq!(s.min_count, kissing, "{} kissing", l.display_name());
        }
    }

    #[test]
    fn d3_matches_a3_invariants() {
        let d3 = d_n(3).summary().unwrap();
        let a3 = a_n(3).summary().unwrap();
        assert_eq!((d3.mu, d3.min_count, d3.det), (a3.mu, a3.min_count, a3.det));
    }

    #[test]
    fn glued_lattice_passes_published_checks() {
        let l = d14a1_11();
        assert_eq!(l.rank(), 15);
        let s = l.summary().unwrap();
        assert_eq!(s.det, Int::from(2));
        assert_eq!(s.mu, 2);
        assert_eq!(s.min_count, 366);

        let cosets = l.discriminant_cosets().unwrap();
        assert_eq!(cosets.len(), 2);
        let mut data: Vec<(Rat, u64)> = cosets
            .iter()
            .map(|c| (c.min_norm.clone(), c.min_count))
            .collect();
        data.sort();
        assert_eq!(data[0], (Rat::zero(), 1));
        assert_eq!(data[1], (Rat::new(Int::from(3), Int::from(2)), 56));
    }

    #[test]
    fn name_resolution() {
        assert_eq!(by_name("A2").unwrap().gram(), a_n(2).gram());
        assert_eq!(by_name("D4").unwrap().gram(), d_n(4).gram());
        assert_eq!(by_name("E8").unwrap().gram(), e8().gram());
        assert_eq!(by_name("D14A1_11").unwrap().rank(), 15);
        assert_eq!(by_name("Z2").unwrap().gram(), &[vec![2]]);
        assert_eq!(by_name("Z6").unwrap().gram(), &[vec![6]]);
        for bad in [
            "A0", "D2", "E5", "E9", "Z3", "Z0", "Q5", "", "A01", "A-1", "A999999",
        ] {
            assert!(by_name(bad).is_none(), "{bad} should not resolve");
        }
    }

    fn catalog_dir() -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
    }

    fn shipped() -> Vec<(&'static str, &'static str)> {
        vec![
            ("roots", "A1"),
            ("roots", "A2"),
            ("roots", "A3"),
            ("roots", "A4"),
            ("roots", "D4"),
            ("roots", "E6"),
            ("roots", "E7"),
            ("roots", "E8"),
            ("glued", "D14A1_11"),
        ]
    }

    #[test]
    fn shipped_catalog_matches_constructors() {
        for (sub, name) in shipped() {
            let path = catalog_dir().join(sub).join(format!("{name}.json"));
            let text = std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
            let file: LatticeFile = serde_json::from_str(&text).unwrap();
            assert_eq!(file.name.as_deref(), Some(name));
            let expected = by_name(name).unwrap();
            assert_eq!(file.gram, expected.gram(), "{name} gram drifted");
        }
    }

    #[test]
    #[ignore = "rewrites the shipped catalog data files from the constructors"]
    fn regenerate_catalog_files() {
        for (sub, name) in shipped() {
            let dir = catalog_dir().join(sub);
            std::fs::create_dir_all(&dir).unwrap();
            let l = by_name(name).unwrap();
            let file = LatticeFile {
                name: Some(name.to_string()),
                gram: l.gram().to_vec(),
            };
            let mut json = serde_json::to_string_pretty(&file).unwrap();
            json.push('\n');
            std::fs::write(dir.join(format!("{name}.json")), json).unwrap();
        }
    }
}
