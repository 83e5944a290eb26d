use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};

/// Square matrix over `Q(ζ_N)`, row-major, all entries at one conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    dim: usize,
    conductor: u32,
    entries: Vec<CycElem>,
}

impl CycMatrix {
    pub fn from_rows(rows: Vec<Vec<CycElem>>) -> Result<CycMatrix> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let conductor = rows[0][0].conductor();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for e in row {
                if e.conductor() != conductor {
                    return Err(Error::ConductorMismatch {
                        expected: conductor,
                        found: e.conductor(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(CycMatrix {
            dim,
            conductor,
            entries,
        })
    }

    pub fn identity(dim: usize, conductor: u32) -> CycMatrix {
        Self::scalar(dim, &CycElem::one(conductor))
    }

    pub fn scalar(dim: usize, value: &CycElem) -> CycMatrix {
        Self::diagonal(&vec![value.clone(); dim])
    }

    pub fn diagonal(values: &[CycElem]) -> CycMatrix {
        let dim = values.len();
        let conductor = values[0].conductor();
        let mut entries = vec![CycElem::zero(conductor); dim * dim];
        for (i, v) in values.iter().enumerate() {
            entries[i * dim + i] = v.lift(conductor);
        }
        CycMatrix {
            dim,
            conductor,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CycElem]> {
        self.entries.chunks(self.dim)
    }

    pub fn lift(&self, conductor: u32) -> CycMatrix {
        if conductor == self.conductor {
            return self.clone();
        }
        CycMatrix {
            dim: self.dim,
            conductor,
            entries: self.entries.iter().map(|e| e.lift(conductor)).collect(),
        }
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in product");
        if self.conductor != other.conductor {
            let m = crate::cyclotomic::lcm(self.conductor, other.conductor);
            return self.lift(m).mul(&other.lift(m));
        }
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycElem::zero(self.conductor);
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        CycMatrix {
            dim: n,
            conductor: self.conductor,
            entries,
        }
    }

    pub fn trace(&self) -> CycElem {
        (0..self.dim).fold(CycElem::zero(self.conductor), |acc, i| {
            &acc + self.get(i, i)
        })
    }

    /// Determinant by cofactor expansion; exact and division-free.
    pub fn det(&self) -> CycElem {
        let cols: Vec<usize> = (0..self.dim).collect();
        self.minor_det(0, &cols)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> CycElem {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = CycElem::zero(self.conductor);
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.minor_det(row + 1, &rest);
            acc = if pos % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// `diag(self, corner)` of size `dim + 1`.
    pub fn block_with(&self, corner: &CycElem) -> CycMatrix {
        let n = self.dim + 1;
        let conductor = crate::cyclotomic::lcm(self.conductor, corner.conductor());
        let mut entries = vec![CycElem::zero(conductor); n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * n + j] = self.get(i, j).lift(conductor);
            }
        }
        entries[n * n - 1] = corner.lift(conductor);
        CycMatrix {
            dim: n,
            conductor,
            entries,
        }
    }

    /// Upper-left `(dim - 1) × (dim - 1)` block.
    pub fn upper_left(&self) -> CycMatrix {
        let n = self.dim - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(i, j).clone());
            }
        }
        CycMatrix {
            dim: n,
            conductor: self.conductor,
            entries,
        }
    }

    pub(crate) fn key(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for e in &self.entries {
            e.key_into(&mut out);
        }
        out
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        self.rows()
            .map(|r| r.iter().map(CycElem::to_complex).collect())
            .collect()
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "\"{e}\"")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::parse_cyc;

    fn m(rows: &[&[&str]], n: u32) -> CycMatrix {
        CycMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_cyc(s, n).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_and_trace() {
        let a = m(&[&["1", "2", "0"], &["0", "z", "1"], &["3", "0", "1"]], 4);
        // 1*(z*1 - 0) - 2*(0 - 3) + 0 = z + 6
        assert_eq!(a.det(), parse_cyc("z + 6", 4).unwrap());
        assert_eq!(a.trace(), parse_cyc("2 + z", 4).unwrap());
    }

    #[test]
    fn product_of_quaternion_units() {
        let i = m(&[&["z", "0"], &["0", "-z"]], 4);
        let j = m(&[&["0", "1"], &["-1", "0"]], 4);
        let k = i.mul(&j);
        assert_eq!(k, m(&[&["0", "z"], &["z", "0"]], 4));
        assert_eq!(
            k.mul(&k),
            CycMatrix::scalar(2, &CycElem::from_integer(-1, 4))
        );
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![
            vec![CycElem::one(1), CycElem::zero(1)],
            vec![CycElem::one(1)],
        ];
        assert!(matches!(
            CycMatrix::from_rows(rows),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn block_and_upper_left_are_inverse() {
        let a = m(&[&["z", "0"], &["0", "z"]], 6);
        let b = a.block_with(&CycElem::zeta_pow(6, 4));
        assert_eq!(b.dim(), 3);
        assert!(b.det().is_one());
        assert_eq!(b.upper_left(), a);
    }
}
