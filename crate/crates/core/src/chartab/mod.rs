//! Exact character tables.
//!
//! Tables are computed over a prime field first (Dixon's method) and then
//! lifted to exact cyclotomic values. The lifted rows form the complete set
//! of irreducible characters, possibly relabeled by one global Galois
//! automorphism relative to the residues; everything downstream works from
//! the exact rows only.

mod dixon;
mod lift;
mod linalg;

use std::ops::Mul;

use num_traits::{Signed, ToPrimitive, Zero};

pub use dixon::{
    class_structure_constants, dixon_modp_table, dixon_prime, select_prime, ModularTable,
    StructureConstants, PRIME_SEARCH_BOUND,
};
pub use lift::{lift_to_cyclotomic, value_conductor};

use crate::cyclotomic::{CycElem, Rational};
use crate::error::{Error, Result};
use crate::matgroup::{FiniteMatrixGroup, NormalEmbedding};
use crate::modp::ModPScalar;

/// One value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<CycElem>,
}

impl ClassFunction {
    pub fn new(values: Vec<CycElem>) -> Self {
        ClassFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction::new(self.values.iter().map(CycElem::conj).collect())
    }

    /// Values read through a class map, e.g. restriction along a fusion map.
    pub fn pull_back(&self, class_map: &[usize]) -> ClassFunction {
        ClassFunction::new(class_map.iter().map(|&c| self.values[c].clone()).collect())
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.len(), rhs.len(), "class functions of different groups");
        ClassFunction::new(
            self.values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }
}

/// Irreducible characters of a finite matrix group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub prime: u64,
    pub generator: u64,
    /// Conductor of the lifted values, `lcm(N, e)`.
    pub conductor: u32,
    pub degrees: Vec<u32>,
    pub modp_rows: Vec<Vec<ModPScalar>>,
    pub rows: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn compute(g: &FiniteMatrixGroup) -> Result<CharacterTable> {
        let modular = dixon_modp_table(g)?;
        let rows = lift_to_cyclotomic(g, &modular)?;
        let p = modular.prime;
        Ok(CharacterTable {
            prime: p,
            generator: modular.generator,
            conductor: value_conductor(g),
            degrees: modular.degrees,
            modp_rows: modular
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| ModPScalar::new(v, p)).collect())
                .collect(),
            rows,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Index of the row equal to `f`, if any.
    pub fn position(&self, f: &ClassFunction) -> Option<usize> {
        self.rows.iter().position(|r| r == f)
    }

    /// Indices of the one-dimensional characters.
    pub fn linear_characters(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degrees[i] == 1).collect()
    }

    /// Exact first orthogonality: `⟨χ_i, χ_j⟩ = δ_ij`.
    pub fn rows_orthonormal(&self, g: &FiniteMatrixGroup) -> bool {
        let one = Rational::from_integer(1.into());
        (0..self.len()).all(|i| {
            (i..self.len()).all(|j| {
                let expected = if i == j {
                    one.clone()
                } else {
                    Rational::zero()
                };
                inner_product(g, &self.rows[i], &self.rows[j]).ok() == Some(expected)
            })
        })
    }

    /// Exact second orthogonality: `Σ_i χ_i(C_k) conj(χ_i(C_l)) = δ_kl |G| / |C_k|`.
    pub fn columns_orthogonal(&self, g: &FiniteMatrixGroup) -> bool {
        let k = g.class_count();
        let conj: Vec<ClassFunction> = self.rows.iter().map(ClassFunction::conj).collect();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s = self
                    .rows
                    .iter()
                    .zip(&conj)
                    .fold(CycElem::zero(self.conductor), |acc, (r, c)| {
                        &acc + &(&r.values[a] * &c.values[b])
                    });
                let expected = if a == b {
                    (g.order() / g.classes()[a].size()) as i64
                } else {
                    0
                };
                s == CycElem::from_integer(expected, self.conductor)
            })
        })
    }

    /// Reduce the lifted rows modulo the table prime and match them against
    /// the residue rows. Returns the row permutation when one exists.
    pub fn modp_correspondence(&self) -> Option<Vec<usize>> {
        let reduced: Vec<Vec<ModPScalar>> = self
            .rows
            .iter()
            .map(|r| {
                r.values
                    .iter()
                    .map(|v| v.to_modp(self.prime, self.generator))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .ok()?;
        let mut used = vec![false; self.len()];
        let mut perm = Vec::with_capacity(self.len());
        for row in &reduced {
            let j = (0..self.len()).find(|&j| !used[j] && &self.modp_rows[j] == row)?;
            used[j] = true;
            perm.push(j);
        }
        Some(perm)
    }
}

/// `⟨α, β⟩ = (1/|G|) Σ_k |C_k| α(C_k) conj(β(C_k))`, which must be rational.
pub fn inner_product(
    g: &FiniteMatrixGroup,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<Rational> {
    let conductor = alpha.values.first().map_or(1, CycElem::conductor);
    let mut acc = CycElem::zero(conductor);
    for ((a, b), class) in alpha.values.iter().zip(&beta.values).zip(g.classes()) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let term = &(a * &b.conj()) * &CycElem::from_integer(class.size() as i64, conductor);
        acc = &acc + &term;
    }
    let total = acc
        .to_rational()
        .ok_or_else(|| Error::NonIntegerMultiplicity {
            value: acc.to_string(),
        })?;
    Ok(total / Rational::from_integer((g.order() as i64).into()))
}

/// Inner product that must be a nonnegative integer.
pub fn multiplicity(
    g: &FiniteMatrixGroup,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<u32> {
    let r = inner_product(g, alpha, beta)?;
    if !r.is_integer() || r.is_negative() {
        return Err(Error::NonIntegerMultiplicity {
            value: r.to_string(),
        });
    }
    r.to_integer()
        .to_u32()
        .ok_or_else(|| Error::NonIntegerMultiplicity {
            value: r.to_string(),
        })
}

/// Character of the defining representation: traces of class representatives.
pub fn natural_character(g: &FiniteMatrixGroup) -> ClassFunction {
    ClassFunction::new(
        g.classes()
            .iter()
            .map(|c| g.element(c.representative).trace())
            .collect(),
    )
}

/// The determinant as a one-dimensional character.
pub fn det_character(g: &FiniteMatrixGroup) -> ClassFunction {
    ClassFunction::new(
        g.classes()
            .iter()
            .map(|c| g.det(c.representative).clone())
            .collect(),
    )
}

/// Restriction data for `L ◁ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extendibility {
    /// `constituents[i][j]` = multiplicity of the `j`-th irreducible of `L`
    /// in the restriction of the `i`-th irreducible of `G`.
    pub constituents: Vec<Vec<u32>>,
    /// Per irreducible of `L`: some irreducible of `G` restricts to it exactly.
    pub extendible: Vec<bool>,
    /// One-dimensional characters of `G` that are trivial on `L`.
    pub deck_characters: Vec<usize>,
}

impl Extendibility {
    pub fn all_extendible(&self) -> bool {
        self.extendible.iter().all(|&e| e)
    }

    pub fn first_obstruction(&self) -> Option<usize> {
        self.extendible.iter().position(|&e| !e)
    }
}

pub fn restrict_and_check_extendible(
    emb: &NormalEmbedding,
    table_g: &CharacterTable,
    table_l: &CharacterTable,
) -> Result<Extendibility> {
    let sub = &emb.sub;
    let restricted: Vec<ClassFunction> = table_g
        .rows
        .iter()
        .map(|r| r.pull_back(&emb.fusion))
        .collect();
    let constituents = restricted
        .iter()
        .map(|res| {
            table_l
                .rows
                .iter()
                .map(|chi| multiplicity(sub, res, chi))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let extendible = (0..table_l.len())
        .map(|j| {
            constituents
                .iter()
                .any(|row| row[j] == 1 && row.iter().enumerate().all(|(t, &m)| t == j || m == 0))
        })
        .collect();
    let trivial_l = &table_l.rows[0];
    let deck_characters = table_g
        .linear_characters()
        .into_iter()
        .filter(|&i| &restricted[i] == trivial_l)
        .collect();
    Ok(Extendibility {
        constituents,
        extendible,
        deck_characters,
    })
}

/// Row matching between two tables of the same abstract group with the
/// same class indexing (for instance a group and its `det⁻¹` image).
pub fn row_correspondence(a: &CharacterTable, b: &CharacterTable) -> Result<Vec<usize>> {
    a.rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            b.position(r).ok_or_else(|| Error::RowNotFound {
                context: format!("row {i} has no counterpart"),
            })
        })
        .collect()
}
