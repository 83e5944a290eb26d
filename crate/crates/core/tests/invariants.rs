//! Structural invariants over the preset catalog and scalar extensions of
//! its special linear members.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use mckay_core::chartab::{det_character, multiplicity, natural_character};
use mckay_core::covers::{build_covering, compose_coverings, CoveringMap};
use mckay_core::matgroup::{
    cyclic_quotient, embed_det_inverse, scalar_extend, sl_kernel, strip_diagonal,
};
use mckay_core::presets::resolve;
use mckay_core::quiver::{add_nakayama_arrows, is_automorphism};
use mckay_core::suite::preset_instances;
use mckay_core::{Analysis, FiniteMatrixGroup, NormalEmbedding, DEFAULT_MAX_ORDER};
use proptest::prelude::*;

/// Preset specs, then `(spec, k)` extensions of the small special linear ones.
fn instances() -> &'static [(String, Option<u32>)] {
    static CELL: OnceLock<Vec<(String, Option<u32>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<(String, Option<u32>)> =
            preset_instances().into_iter().map(|s| (s, None)).collect();
        for s in [
            "trivial:2",
            "cyclic_sl2:3",
            "neg_identity_sl2",
            "binary_dihedral:2",
            "binary_tetrahedral",
        ] {
            for k in [2, 3, 4, 6] {
                out.push((s.to_string(), Some(k)));
            }
        }
        out
    })
}

fn analysis(i: usize) -> Arc<Analysis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Analysis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(&i) {
        return a.clone();
    }
    let (spec, k) = &instances()[i];
    let (p, n) = resolve(spec).unwrap();
    let mut g = p.group(n, DEFAULT_MAX_ORDER).unwrap();
    if let Some(k) = k {
        g = scalar_extend(&g, *k, DEFAULT_MAX_ORDER).unwrap();
    }
    let a = Arc::new(Analysis::new(g, spec).unwrap());
    cache.lock().unwrap().insert(i, a.clone());
    a
}

fn instance() -> impl Strategy<Value = usize> {
    0..instances().len()
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn multiplication_table_matches_matrices(i in instance(), x in any::<usize>(), y in any::<usize>()) {
        let a = analysis(i);
        let g = &a.group;
        let (x, y) = (x % g.order(), y % g.order());
        prop_assert_eq!(g.element(g.mul(x, y)), &g.element(x).mul(g.element(y)));
        prop_assert!(g.element(g.mul(x, g.inverse(x))).is_identity());
        prop_assert_eq!(g.order() % g.element_order(x), 0);
        prop_assert_eq!(g.det(g.mul(x, y)), &(g.det(x) * g.det(y)));
    }

    #[test]
    fn classes_partition_the_group(i in instance()) {
        let g = &analysis(i).group;
        prop_assert_eq!(g.class_sizes().iter().sum::<usize>(), g.order());
        for c in g.classes() {
            prop_assert_eq!(g.order() % c.elements.len(), 0);
            prop_assert_eq!(c.representative, c.elements[0]);
        }
        for x in 0..g.order() {
            prop_assert!(g.classes()[g.class_of(x)].elements.contains(&x));
        }
    }

    #[test]
    fn determinant_kernel(i in instance()) {
        let g = analysis(i).group.clone();
        let n = sl_kernel(&g);
        let (r, _) = cyclic_quotient(&n).unwrap();
        prop_assert_eq!(r * n.sub.order(), g.order());
        prop_assert_eq!(r == 1, g.is_special_linear());
        // the determinant values form a group of order r
        let mut dets: Vec<&_> = Vec::new();
        for d in g.dets() {
            if !dets.contains(&d) {
                dets.push(d);
            }
        }
        prop_assert_eq!(dets.len(), r);
    }

    #[test]
    fn embedding_is_faithful_and_special(i in instance()) {
        let g = &analysis(i).group;
        let (e, idx) = embed_det_inverse(g);
        prop_assert_eq!(e.order(), g.order());
        prop_assert_eq!(e.class_count(), g.class_count());
        prop_assert_eq!(e.dim(), g.dim() + 1);
        prop_assert!(e.is_special_linear());
        prop_assert_eq!(idx, (0..g.order()).collect::<Vec<_>>());
        let e = Arc::new(e);
        prop_assert_eq!(sl_kernel(&e).sub.order(), e.order());
    }

    #[test]
    fn strip_undoes_embedding_for_diagonal_groups(i in instance()) {
        let g = &analysis(i).group;
        prop_assume!(g.elements().iter().all(|m| m.is_diagonal()));
        let back = strip_diagonal(&embed_det_inverse(g).0).unwrap();
        prop_assert_eq!(back.order(), g.order());
        for m in g.elements() {
            prop_assert!(back.find(m).is_some());
        }
    }

    #[test]
    fn degrees_and_natural_character(i in instance()) {
        let a = analysis(i);
        let (g, t) = (&a.group, &a.table);
        prop_assert_eq!(t.len(), g.class_count());
        prop_assert_eq!(t.degrees.iter().map(|&d| d as usize * d as usize).sum::<usize>(), g.order());
        prop_assert!(t.degrees.iter().all(|&d| g.order() % d as usize == 0));
        prop_assert!(t.rows_orthonormal(g));
        prop_assert!(t.columns_orthogonal(g));
        let v = natural_character(g);
        let mut total = 0;
        for (row, d) in t.rows.iter().zip(&t.degrees) {
            total += multiplicity(g, &v, row).unwrap() * d;
        }
        prop_assert_eq!(total as usize, g.dim());
    }

    #[test]
    fn nakayama_permutation(i in instance()) {
        let a = analysis(i);
        let (g, q) = (&a.group, &a.quiver);
        let sigma = q.nakayama.clone().unwrap();
        prop_assert!(is_automorphism(q, &sigma));
        prop_assert_eq!(sigma.is_identity(), g.is_special_linear());
        let det = det_character(g);
        let det_order = (1..=g.order())
            .find(|&k| det.values.iter().all(|v| v.pow(k as u64).is_one()))
            .unwrap();
        prop_assert_eq!(det_order % sigma.order(), 0);
        // σ preserves degrees
        for v in 0..q.vertex_count() {
            prop_assert_eq!(q.vertices[sigma.apply(v)].degree, q.vertices[v].degree);
        }
    }

    #[test]
    fn dimension_identities(i in instance()) {
        let a = analysis(i);
        let m = a.group.dim() as u32;
        prop_assert!(a.quiver.satisfies_dimension_identity(m));
        prop_assert!(add_nakayama_arrows(&a.quiver).unwrap().satisfies_dimension_identity(m + 1));
        if a.group.is_special_linear() && m == 2 {
            prop_assert!(a.quiver.is_symmetric());
        }
    }
}

/// `Z_n ⊃ Z_{n/a} ⊃ Z_{n/ab} ⊃ 1` inside GL(1) and its three coverings.
fn cyclic_chain(n: u32, a: u32, b: u32) -> [CoveringMap; 3] {
    let (p, _) = resolve("cyclic_gl1").unwrap();
    let mut g: Arc<FiniteMatrixGroup> = Arc::new(p.group(Some(n), DEFAULT_MAX_ORDER).unwrap());
    let mut an = Analysis::new(g.clone(), "chain").unwrap();
    let mut out = Vec::new();
    for step in [a, b, g.order() as u32 / (a * b)] {
        let gen = g.generators()[0];
        let emb = NormalEmbedding::generated_by(g.clone(), &[g.pow(gen, step as usize)]).unwrap();
        let sub = Analysis::new(emb.sub.clone(), "chain").unwrap();
        out.push(build_covering(&emb, &an.table, &sub.table, &an.quiver, &sub.quiver).unwrap());
        g = emb.sub.clone();
        an = sub;
    }
    out.try_into().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn composition_is_associative(a in 1u32..4, b in 1u32..4, c in 1u32..4) {
        let [c1, c2, c3] = cyclic_chain(a * b * c, a, b);
        let left = compose_coverings(&compose_coverings(&c1, &c2, None).unwrap(), &c3, None).unwrap();
        let right = compose_coverings(&c1, &compose_coverings(&c2, &c3, None).unwrap(), None).unwrap();
        prop_assert_eq!(&left.vertex_map, &right.vertex_map);
        prop_assert_eq!(left.deck_order, right.deck_order);
        prop_assert_eq!(left.deck_order as u32, a * b * c);
    }
}
