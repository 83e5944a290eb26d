use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
///
/// Obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let n = n as usize;
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = div_monic(&poly, &cyclotomic_poly(d as u32));
        }
    }
    poly
}

/// Exact quotient of `num` by the monic polynomial `den`.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    q
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}

/// Precomputed reduction data for `Q(ζ_n)` in the power basis.
#[derive(Debug)]
pub(crate) struct Field {
    pub n: u32,
    pub phi: usize,
    /// `zeta_powers[k]` is `x^k mod Φ_n` for `0 <= k < n`.
    pub zeta_powers: Vec<Vec<i64>>,
}

impl Field {
    fn new(n: u32) -> Field {
        let poly = cyclotomic_poly(n);
        let phi = poly.len() - 1;
        let mut zeta_powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            zeta_powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_n
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * poly[i];
            }
            cur[0] = -top * poly[0];
        }
        Field {
            n,
            phi,
            zeta_powers,
        }
    }

    #[inline]
    pub fn power(&self, k: usize) -> &[i64] {
        &self.zeta_powers[k % self.n as usize]
    }
}

pub(crate) fn field(n: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("field cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(Field::new(n)))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..=60 {
            assert_eq!(cyclotomic_poly(n).len() - 1, euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1() {
        // oracle: multiply Φ_d over all d | n back together
        for n in 1..=30u32 {
            let mut prod = vec![1i64];
            for d in (1..=n).filter(|d| n % d == 0) {
                let f = cyclotomic_poly(d);
                let mut next = vec![0i64; prod.len() + f.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in f.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expected = vec![0i64; n as usize + 1];
            expected[0] = -1;
            expected[n as usize] = 1;
            assert_eq!(prod, expected);
        }
    }
}
