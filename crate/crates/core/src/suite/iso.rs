//! Backtracking search for degree-preserving quiver isomorphisms.

use crate::quiver::Permutation;

/// Finds `π` with `b[π i][π j] = a[i][j]` and `db[π i] = da[i]`; when both
/// permutations are given, also `σ_b ∘ π = π ∘ σ_a`.
pub fn find_isomorphism(
    a: &[Vec<u32>],
    da: &[u32],
    b: &[Vec<u32>],
    db: &[u32],
    sigmas: Option<(&Permutation, &Permutation)>,
) -> Option<Permutation> {
    let k = a.len();
    if b.len() != k || da.len() != k || db.len() != k {
        return None;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if extend(0, a, da, b, db, sigmas, &mut map, &mut used) {
        Permutation::new(map).ok()
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    i: usize,
    a: &[Vec<u32>],
    da: &[u32],
    b: &[Vec<u32>],
    db: &[u32],
    sigmas: Option<(&Permutation, &Permutation)>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let k = a.len();
    if i == k {
        return true;
    }
    for t in 0..k {
        if used[t] || db[t] != da[i] || b[t][t] != a[i][i] {
            continue;
        }
        let consistent = (0..i).all(|j| b[t][map[j]] == a[i][j] && b[map[j]][t] == a[j][i]);
        if !consistent {
            continue;
        }
        map[i] = t;
        let sigma_ok = sigmas.is_none_or(|(sa, sb)| {
            (0..=i).all(|j| {
                let s = sa.apply(j);
                s > i || sb.apply(map[j]) == map[s]
            })
        });
        if sigma_ok {
            used[t] = true;
            if extend(i + 1, a, da, b, db, sigmas, map, used) {
                return true;
            }
            used[t] = false;
        }
        map[i] = usize::MAX;
    }
    false
}
