//! Irreducible characters over a prime field from common eigenvectors of
//! the class multiplication matrices.

use super::linalg::{self, Mat};
use crate::cyclotomic::lcm;
use crate::error::{Error, Result};
use crate::matgroup::FiniteMatrixGroup;
use crate::modp::{self, add_mod, inv_mod, mul_mod, sub_mod};

/// Search bound for the Dixon prime.
pub const PRIME_SEARCH_BOUND: u64 = 1_000_000;

/// Class structure constants `c[j][k][l] = #{(x, y) ∈ C_j × C_k : xy = z}`
/// for a fixed `z ∈ C_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    classes: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    pub fn get(&self, j: usize, k: usize, l: usize) -> u64 {
        self.data[(j * self.classes + k) * self.classes + l]
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }
}

pub fn class_structure_constants(g: &FiniteMatrixGroup) -> StructureConstants {
    let k = g.class_count();
    let mut data = vec![0u64; k * k * k];
    for (l, cl) in g.classes().iter().enumerate() {
        let z = cl.representative;
        for (j, cj) in g.classes().iter().enumerate() {
            for &x in &cj.elements {
                let y = g.mul(g.inverse(x), z);
                data[(j * k + g.class_of(y)) * k + l] += 1;
            }
        }
    }
    StructureConstants { classes: k, data }
}

/// Character table over the prime field: rows are ordered trivial first,
/// then by ascending degree, ties broken by the residue vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularTable {
    pub prime: u64,
    pub generator: u64,
    pub degrees: Vec<u32>,
    pub rows: Vec<Vec<u64>>,
}

/// Smallest prime `p ≡ 1 (mod modulus)` with `p > lower`.
pub fn select_prime(modulus: u64, lower: u64) -> Result<u64> {
    let mut p = (lower / modulus + 1) * modulus + 1;
    while p < PRIME_SEARCH_BOUND {
        if p > lower && modp::is_prime(p) {
            return Ok(p);
        }
        p += modulus;
    }
    Err(Error::NoPrimeFound {
        bound: PRIME_SEARCH_BOUND,
    })
}

/// The prime used for a group: `p ≡ 1 (mod lcm(N, e))` and `p > 2 m |G|`.
pub fn dixon_prime(g: &FiniteMatrixGroup) -> Result<u64> {
    let modulus = lcm(g.conductor(), g.exponent() as u32) as u64;
    select_prime(modulus, 2 * g.dim() as u64 * g.order() as u64)
}

pub fn dixon_modp_table(g: &FiniteMatrixGroup) -> Result<ModularTable> {
    let p = dixon_prime(g)?;
    let generator = modp::primitive_root(p);
    let sc = class_structure_constants(g);
    let k = g.class_count();
    let sizes = g.class_sizes();
    let inv_class = g.inverse_class();

    let class_matrix = |j: usize| -> Mat {
        (0..k)
            .map(|r| (0..k).map(|l| sc.get(j, r, l) % p).collect())
            .collect()
    };
    let vectors = common_eigenvectors(k, p, class_matrix)?;

    let order = g.order() as u64 % p;
    let mut rows: Vec<(u32, Vec<u64>)> = Vec::with_capacity(k);
    for omega in vectors {
        // d² = |G| / Σ_k ω_k ω_{k*} / |C_k|
        let s = (0..k).fold(0u64, |acc, c| {
            let t = mul_mod(omega[c], omega[inv_class[c]], p);
            add_mod(acc, mul_mod(t, inv_mod(sizes[c] as u64 % p, p), p), p)
        });
        if s == 0 {
            return Err(Error::ModularSplitting("degenerate eigenvector".into()));
        }
        let d2 = mul_mod(order, inv_mod(s, p), p);
        let d = (d2 as f64).sqrt().round() as u64;
        if d == 0 || d * d != d2 || d2 > g.order() as u64 {
            return Err(Error::ModularSplitting(format!(
                "degree square {d2} is not a square ≤ |G|"
            )));
        }
        let theta = (0..k)
            .map(|c| mul_mod(mul_mod(d, omega[c], p), inv_mod(sizes[c] as u64 % p, p), p))
            .collect();
        rows.push((d as u32, theta));
    }
    rows.sort_by(|a, b| {
        let ta = a.1.iter().any(|&v| v != 1);
        let tb = b.1.iter().any(|&v| v != 1);
        (ta, a.0, &a.1).cmp(&(tb, b.0, &b.1))
    });
    let degrees: Vec<u32> = rows.iter().map(|r| r.0).collect();
    let sum_sq: u64 = degrees.iter().map(|&d| (d as u64).pow(2)).sum();
    if sum_sq != g.order() as u64 {
        return Err(Error::ModularSplitting(format!(
            "degree squares sum to {sum_sq}, expected {}",
            g.order()
        )));
    }
    Ok(ModularTable {
        prime: p,
        generator,
        degrees,
        rows: rows.into_iter().map(|r| r.1).collect(),
    })
}

/// Split `F_p^k` into one-dimensional common eigenspaces of the class
/// matrices `M_1, …, M_{k-1}` (class 0 is the identity and acts trivially).
/// Each returned vector is scaled so its identity-class entry is 1.
fn common_eigenvectors(
    k: usize,
    p: u64,
    class_matrix: impl Fn(usize) -> Mat,
) -> Result<Vec<Vec<u64>>> {
    let identity: Mat = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Mat> = vec![identity];
    for j in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(&m, space, p)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::ModularSplitting(
            "class matrices do not separate the characters".into(),
        ));
    }
    spaces
        .into_iter()
        .map(|mut s| {
            let v = s.pop().unwrap();
            if v[0] == 0 {
                return Err(Error::ModularSplitting(
                    "eigenvector vanishes on the identity class".into(),
                ));
            }
            let inv = inv_mod(v[0], p);
            Ok(v.into_iter().map(|x| mul_mod(x, inv, p)).collect())
        })
        .collect()
}

/// Eigenspace decomposition of `m` restricted to the invariant subspace
/// spanned by the (row-reduced) basis `space`.
fn split(m: &Mat, mut space: Mat, p: u64) -> Result<Vec<Mat>> {
    let pivots = linalg::rref(&mut space, p);
    let d = space.len();
    let k = m.len();
    // m b_s = Σ_t r[t][s] b_t, read off at the pivot columns
    let images: Vec<Vec<u64>> = space
        .iter()
        .map(|b| {
            (0..k)
                .map(|i| {
                    m[i].iter()
                        .zip(b)
                        .fold(0, |acc, (&x, &y)| add_mod(acc, mul_mod(x, y, p), p))
                })
                .collect()
        })
        .collect();
    let r: Mat = (0..d)
        .map(|t| (0..d).map(|s| images[s][pivots[t]]).collect())
        .collect();
    let poly = linalg::charpoly(&r, p);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in linalg::roots(&poly, p) {
        let shifted: Mat = r
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { sub_mod(x, lambda, p) } else { x })
                    .collect()
            })
            .collect();
        let coeffs = linalg::nullspace(&shifted, p);
        let mut vecs: Mat = coeffs
            .iter()
            .map(|c| {
                (0..k)
                    .map(|col| {
                        c.iter()
                            .zip(&space)
                            .fold(0, |acc, (&ci, b)| add_mod(acc, mul_mod(ci, b[col], p), p))
                    })
                    .collect()
            })
            .collect();
        linalg::rref(&mut vecs, p);
        total += vecs.len();
        out.push(vecs);
    }
    if total != d {
        return Err(Error::ModularSplitting(
            "class matrix is not diagonalizable".into(),
        ));
    }
    Ok(out)
}
