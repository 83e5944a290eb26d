//! McKay quivers, the Nakayama permutation and the arrow-adding transform.

mod export;
mod permutation;

use serde::{Deserialize, Serialize};

pub use permutation::Permutation;

use crate::chartab::{det_character, multiplicity, natural_character, CharacterTable};
use crate::error::{Error, Result};
use crate::matgroup::FiniteMatrixGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub index: usize,
    pub degree: u32,
}

/// Vertices are irreducible characters; `arrows[i][j]` counts arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Vec<u32>>,
    pub nakayama: Option<Permutation>,
    pub provenance: String,
}

impl Quiver {
    /// Checks shapes: square arrow matrix, vertex indices `0..k`, and a
    /// Nakayama permutation of the right size.
    pub fn new(
        degrees: &[u32],
        arrows: Vec<Vec<u32>>,
        nakayama: Option<Permutation>,
        provenance: impl Into<String>,
    ) -> Result<Quiver> {
        let k = degrees.len();
        if arrows.len() != k {
            return Err(Error::SizeMismatch {
                left: k,
                right: arrows.len(),
            });
        }
        if let Some(row) = arrows.iter().find(|r| r.len() != k) {
            return Err(Error::SizeMismatch {
                left: k,
                right: row.len(),
            });
        }
        if let Some(s) = &nakayama {
            if s.len() != k {
                return Err(Error::SizeMismatch {
                    left: k,
                    right: s.len(),
                });
            }
        }
        Ok(Quiver {
            vertices: degrees
                .iter()
                .enumerate()
                .map(|(index, &degree)| Vertex { index, degree })
                .collect(),
            arrows,
            nakayama,
            provenance: provenance.into(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.degree).collect()
    }

    pub fn arrow_count(&self) -> u64 {
        self.arrows.iter().flatten().map(|&a| a as u64).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.vertex_count();
        (0..k).all(|i| (0..k).all(|j| self.arrows[i][j] == self.arrows[j][i]))
    }

    /// `A·d = m·d` and `dᵀ·A = m·dᵀ`.
    pub fn satisfies_dimension_identity(&self, m: u32) -> bool {
        let d = self.degrees();
        let k = d.len();
        let rows = (0..k).all(|i| {
            (0..k)
                .map(|j| self.arrows[i][j] as u64 * d[j] as u64)
                .sum::<u64>()
                == m as u64 * d[i] as u64
        });
        let cols = (0..k).all(|j| {
            (0..k)
                .map(|i| d[i] as u64 * self.arrows[i][j] as u64)
                .sum::<u64>()
                == m as u64 * d[j] as u64
        });
        rows && cols
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Quiver {
        self.provenance = provenance.into();
        self
    }
}

/// `A[i][j] = ⟨χ_V·χ_i, χ_j⟩`, with the Nakayama permutation attached.
pub fn build_mckay(g: &FiniteMatrixGroup, table: &CharacterTable) -> Result<Quiver> {
    let chi_v = natural_character(g);
    let arrows = table
        .rows
        .iter()
        .map(|chi_i| {
            let product = &chi_v * chi_i;
            table
                .rows
                .iter()
                .map(|chi_j| multiplicity(g, &product, chi_j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sigma = nakayama_translation(g, table)?;
    Quiver::new(&table.degrees, arrows, Some(sigma), "")
}

/// `σ(i) = j` where `χ_j = χ_i·det`.
pub fn nakayama_translation(g: &FiniteMatrixGroup, table: &CharacterTable) -> Result<Permutation> {
    let det = det_character(g);
    let images = table
        .rows
        .iter()
        .enumerate()
        .map(|(i, chi)| {
            table
                .position(&(chi * &det))
                .ok_or_else(|| Error::RowNotFound {
                    context: format!("determinant twist of row {i}"),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// Adds one arrow `σ(i) → i` per vertex and drops `σ`.
pub fn add_nakayama_arrows(q: &Quiver) -> Result<Quiver> {
    let sigma = q.nakayama.as_ref().ok_or(Error::MissingNakayama)?;
    let mut arrows = q.arrows.clone();
    for i in 0..q.vertex_count() {
        arrows[sigma.apply(i)][i] += 1;
    }
    Ok(Quiver {
        vertices: q.vertices.clone(),
        arrows,
        nakayama: None,
        provenance: q.provenance.clone(),
    })
}

/// `A[πi][πj] = A[i][j]` and `d_{πi} = d_i` for all vertices.
pub fn is_automorphism(q: &Quiver, pi: &Permutation) -> bool {
    let k = q.vertex_count();
    pi.len() == k
        && (0..k).all(|i| {
            q.vertices[pi.apply(i)].degree == q.vertices[i].degree
                && (0..k).all(|j| q.arrows[pi.apply(i)][pi.apply(j)] == q.arrows[i][j])
        })
}

/// Degrees and arrows agree when vertex `i` of `a` is matched with vertex
/// `matching(i)` of `b`. Nakayama data is not compared.
pub fn quiver_equal(a: &Quiver, b: &Quiver, matching: &Permutation) -> Result<bool> {
    let k = a.vertex_count();
    if b.vertex_count() != k {
        return Err(Error::SizeMismatch {
            left: k,
            right: b.vertex_count(),
        });
    }
    if matching.len() != k {
        return Err(Error::SizeMismatch {
            left: k,
            right: matching.len(),
        });
    }
    let m = |i| matching.apply(i);
    Ok((0..k).all(|i| {
        a.vertices[i].degree == b.vertices[m(i)].degree
            && (0..k).all(|j| a.arrows[i][j] == b.arrows[m(i)][m(j)])
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{parse_cyc, CycElem};
    use crate::matgroup::{embed_det_inverse, CycMatrix, DEFAULT_MAX_ORDER};

    fn mat(rows: &[&[&str]], n: u32) -> CycMatrix {
        CycMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_cyc(s, n).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn quiver_of(gens: &[CycMatrix]) -> (FiniteMatrixGroup, CharacterTable, Quiver) {
        let g = FiniteMatrixGroup::enumerate(gens, DEFAULT_MAX_ORDER).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let q = build_mckay(&g, &t).unwrap();
        (g, t, q)
    }

    /// Index of the row whose value on the class of `x` is `v`, among linear rows.
    fn linear_row_with(g: &FiniteMatrixGroup, t: &CharacterTable, x: usize, v: &CycElem) -> usize {
        let c = g.class_of(x);
        (0..t.len())
            .find(|&i| t.degrees[i] == 1 && &t.rows[i].values[c] == v)
            .unwrap()
    }

    #[test]
    fn trivial_group_has_m_loops() {
        let (_, _, q) = quiver_of(&[CycMatrix::identity(4, 1)]);
        assert_eq!(q.arrows, vec![vec![4]]);
        assert!(q.nakayama.as_ref().unwrap().is_identity());
    }

    #[test]
    fn negative_identity() {
        let (_, _, q) = quiver_of(&[mat(&[&["-1", "0"], &["0", "-1"]], 1)]);
        assert_eq!(q.arrows, vec![vec![0, 2], vec![2, 0]]);
        assert!(q.satisfies_dimension_identity(2));
        assert!(is_automorphism(&q, &Permutation::new(vec![1, 0]).unwrap()));
    }

    #[test]
    fn scalar_six_in_dimension_four() {
        let z = CycElem::zeta_pow(6, 1);
        let (g, t, q) = quiver_of(&[CycMatrix::scalar(4, &z)]);
        assert_eq!(q.vertex_count(), 6);
        // label vertex i by the character sending ζ₆I to ζ₆^i
        let gen = g.find(&CycMatrix::scalar(4, &z)).unwrap();
        let label: Vec<usize> = (0..6)
            .map(|i| linear_row_with(&g, &t, gen, &CycElem::zeta_pow(6, i as i64)))
            .collect();
        for i in 0..6 {
            for j in 0..6 {
                let expected = if j == (i + 1) % 6 { 4 } else { 0 };
                assert_eq!(q.arrows[label[i]][label[j]], expected);
            }
            assert_eq!(
                q.nakayama.as_ref().unwrap().apply(label[i]),
                label[(i + 4) % 6]
            );
        }
        let sigma = q.nakayama.clone().unwrap();
        assert!(is_automorphism(&q, &sigma));
        let plus = add_nakayama_arrows(&q).unwrap();
        assert!(plus.nakayama.is_none());
        for i in 0..6 {
            assert_eq!(plus.arrows[label[(i + 4) % 6]][label[i]], 1);
        }
        assert!(plus.satisfies_dimension_identity(5));
    }

    #[test]
    fn klein_group_sigma_is_the_opposite_vertex() {
        let (g, t, q) = quiver_of(&[
            mat(&[&["-1", "0"], &["0", "-1"]], 1),
            mat(&[&["1", "0"], &["0", "-1"]], 1),
        ]);
        assert_eq!(q.arrow_count(), 8);
        assert!(q.is_symmetric());
        let sigma = q.nakayama.clone().unwrap();
        assert!(sigma.images().iter().enumerate().all(|(i, &j)| i != j));
        assert_eq!(sigma.order(), 2);
        // σ(i) is the one vertex not adjacent to i
        for i in 0..4 {
            let s = sigma.apply(i);
            assert_eq!(q.arrows[i][s], 0);
            assert!((0..4)
                .filter(|&j| j != i && j != s)
                .all(|j| q.arrows[i][j] == 1));
        }
        assert!(is_automorphism(&q, &sigma));
        // swapping two adjacent vertices breaks the 4-cycle
        let a = 0;
        let b = (0..4).find(|&j| q.arrows[a][j] == 1).unwrap();
        let mut images: Vec<usize> = (0..4).collect();
        images.swap(a, b);
        assert!(!is_automorphism(&q, &Permutation::new(images).unwrap()));
        let _ = (g, t);
    }

    #[test]
    fn embedding_adds_nakayama_arrows() {
        let gens = [
            mat(&[&["-1", "0"], &["0", "-1"]], 1),
            mat(&[&["1", "0"], &["0", "-1"]], 1),
        ];
        let (g, t, q) = quiver_of(&gens);
        let (f, _) = embed_det_inverse(&g);
        let tf = CharacterTable::compute(&f).unwrap();
        let qf = build_mckay(&f, &tf).unwrap();
        let matching =
            Permutation::new(crate::chartab::row_correspondence(&t, &tf).unwrap()).unwrap();
        assert!(quiver_equal(&add_nakayama_arrows(&q).unwrap(), &qf, &matching).unwrap());
        assert!(qf.nakayama.as_ref().unwrap().is_identity());
    }

    #[test]
    fn errors() {
        let q = Quiver::new(&[1], vec![vec![2]], None, "").unwrap();
        assert_eq!(add_nakayama_arrows(&q), Err(Error::MissingNakayama));
        let r = Quiver::new(&[1, 1], vec![vec![0, 1], vec![1, 0]], None, "").unwrap();
        assert_eq!(
            quiver_equal(&q, &r, &Permutation::identity(1)),
            Err(Error::SizeMismatch { left: 1, right: 2 })
        );
        assert!(Quiver::new(&[1, 1], vec![vec![0, 1]], None, "").is_err());
    }
}
