use num_bigint::BigInt;

use super::dixon::ModularTable;
use super::ClassFunction;
use crate::cyclotomic::{lcm, CycElem};
use crate::error::{Error, Result};
use crate::matgroup::FiniteMatrixGroup;
use crate::modp::{add_mod, inv_mod, mul_mod, pow_mod};

/// Conductor in which lifted character values are expressed: `lcm(N, e)`.
pub fn value_conductor(g: &FiniteMatrixGroup) -> u32 {
    lcm(g.conductor(), g.exponent() as u32)
}

/// Recover exact character values from residues.
///
/// For a class representative `r` of order `o`, the residues of `χ(r^j)`
/// determine the eigenvalue multiplicities `m_t` of `r` by a discrete
/// Fourier inversion with `z_o = g^{(p-1)/o}`; since `0 ≤ m_t ≤ χ(1) < p`
/// each is lifted uniquely and `χ(r) = Σ m_t ζ_o^t`.
pub fn lift_to_cyclotomic(
    g: &FiniteMatrixGroup,
    table: &ModularTable,
) -> Result<Vec<ClassFunction>> {
    let p = table.prime;
    let conductor = value_conductor(g);
    let reps: Vec<usize> = g.classes().iter().map(|c| c.representative).collect();
    table
        .rows
        .iter()
        .zip(&table.degrees)
        .map(|(theta, &degree)| {
            let values = reps
                .iter()
                .enumerate()
                .map(|(class, &r)| {
                    let o = g.element_order(r);
                    let powers = &g.power_map()[class];
                    let z_inv = inv_mod(pow_mod(table.generator, (p - 1) / o as u64, p), p);
                    let o_inv = inv_mod(o as u64 % p, p);
                    let step = (conductor as usize) / o;
                    let mut terms = Vec::new();
                    for t in 0..o {
                        // Σ_j θ(r^j) z_o^{-jt}
                        let w = pow_mod(z_inv, t as u64, p);
                        let mut s = 0u64;
                        let mut wj = 1u64;
                        for &c in powers {
                            s = add_mod(s, mul_mod(theta[c], wj, p), p);
                            wj = mul_mod(wj, w, p);
                        }
                        let m = mul_mod(s, o_inv, p);
                        if m > degree as u64 {
                            return Err(Error::LiftOutOfRange {
                                class,
                                value: m,
                                degree,
                            });
                        }
                        if m != 0 {
                            terms.push((t * step, BigInt::from(m)));
                        }
                    }
                    Ok(CycElem::from_exponent_coeffs(
                        conductor,
                        &terms,
                        BigInt::from(1),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ClassFunction::new(values))
        })
        .collect()
}
