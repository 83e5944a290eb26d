//! Floating-point recomputation of arrow multiplicities, independent of the
//! exact trace, product and inner-product code.

use num_complex::Complex64;

use crate::pipeline::Analysis;

/// `a_ij` from numeric traces of class representatives and numerically
/// evaluated character values.
pub fn numeric_arrows(a: &Analysis) -> Vec<Vec<Complex64>> {
    let g = &a.group;
    let chi_v: Vec<Complex64> = g
        .classes()
        .iter()
        .map(|c| {
            let m = g.element(c.representative).to_complex();
            (0..m.len()).map(|i| m[i][i]).sum()
        })
        .collect();
    let rows: Vec<Vec<Complex64>> = a
        .table
        .rows
        .iter()
        .map(|r| r.values.iter().map(|v| v.to_complex()).collect())
        .collect();
    let sizes = g.class_sizes();
    let order = g.order() as f64;
    rows.iter()
        .map(|ri| {
            rows.iter()
                .map(|rj| {
                    let s: Complex64 = (0..sizes.len())
                        .map(|k| sizes[k] as f64 * chi_v[k] * ri[k] * rj[k].conj())
                        .sum();
                    s / order
                })
                .collect()
        })
        .collect()
}

/// Largest `|numeric - exact|` over all arrow counts.
pub fn max_deviation(a: &Analysis) -> f64 {
    let numeric = numeric_arrows(a);
    numeric
        .iter()
        .zip(&a.quiver.arrows)
        .flat_map(|(n, e)| n.iter().zip(e).map(|(x, &y)| (x - y as f64).norm()))
        .fold(0.0, f64::max)
}
