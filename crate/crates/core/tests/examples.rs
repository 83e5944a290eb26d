//! Worked examples with known answers, each checked against an oracle that
//! does not share code with the algorithm under test.

use std::sync::Arc;

use mckay_core::chartab::{
    det_character, inner_product, natural_character, restrict_and_check_extendible,
};
use mckay_core::cyclotomic::cyclotomic_poly;
use mckay_core::groupfile::parse_group_file;
use mckay_core::matgroup::{
    cyclic_quotient, embed_det_inverse, scalar_extend, sl_kernel, strip_diagonal,
};
use mckay_core::presets::resolve;
use mckay_core::quiver::{add_nakayama_arrows, is_automorphism};
use mckay_core::{
    parse_cyc, CharacterTable, CycElem, CycMatrix, Error, FiniteMatrixGroup, NormalEmbedding,
    Permutation, Rational, DEFAULT_MAX_ORDER,
};
use num_complex::Complex64;

fn preset(spec: &str) -> FiniteMatrixGroup {
    let (p, n) = resolve(spec).unwrap();
    p.group(n, DEFAULT_MAX_ORDER).unwrap()
}

fn zeta(n: u32) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU / n as f64)
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
    assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    // oracle: every primitive 12th root is a root
    for k in [1u32, 5, 7, 11] {
        let z = zeta(12).powu(k);
        let v: Complex64 = cyclotomic_poly(12)
            .iter()
            .enumerate()
            .map(|(i, &c)| z.powu(i as u32) * c as f64)
            .sum();
        assert!(v.norm() < 1e-12);
    }
}

#[test]
fn parsing_reduces_modulo_the_cyclotomic_polynomial() {
    assert!(parse_cyc("0", 12).unwrap().is_zero());
    let i = parse_cyc("z^3", 12).unwrap();
    let r = |n: i64| Rational::from_integer(n.into());
    assert_eq!(i.coeffs(), vec![r(0), r(0), r(0), r(1)]);
    let zero = parse_cyc("1/2 + 1/2*z^6", 12).unwrap();
    assert!(zero.is_zero());
    assert!(zero.to_complex().norm() < 1e-12);
}

#[test]
fn field_arithmetic() {
    let a = parse_cyc("z^3", 12).unwrap();
    let b = parse_cyc("z^9", 12).unwrap();
    assert!((&a * &b).is_one());
    for k in 0..7 {
        assert_eq!(
            CycElem::zeta_pow(7, k).inv().unwrap(),
            CycElem::zeta_pow(7, 7 - k)
        );
    }
    let x = parse_cyc("1 + z", 5).unwrap();
    let y = parse_cyc("1 + z^4", 5).unwrap();
    let prod = &x * &y;
    assert_eq!(prod, parse_cyc("2 + z + z^4", 5).unwrap());
    let numeric =
        (Complex64::new(1.0, 0.0) + zeta(5)) * (Complex64::new(1.0, 0.0) + zeta(5).powu(4));
    assert!((prod.to_complex() - numeric).norm() < 1e-12);
    // mixed conductors meet at the lcm
    let s = &parse_cyc("z", 4).unwrap() + &parse_cyc("z", 6).unwrap();
    assert_eq!(s.conductor(), 12);
    assert!((s.to_complex() - (zeta(4) + zeta(6))).norm() < 1e-12);
}

#[test]
fn conjugation() {
    let r = parse_cyc("3/7", 12).unwrap();
    assert_eq!(r.conj(), r);
    assert_eq!(
        parse_cyc("z^3", 12).unwrap().conj(),
        parse_cyc("z^9", 12).unwrap()
    );
}

#[test]
fn reduction_mod_p() {
    assert_eq!(CycElem::zero(4).to_modp(5, 2).unwrap().value(), 0);
    assert_eq!(parse_cyc("z", 4).unwrap().to_modp(5, 2).unwrap().value(), 2);
    assert_eq!(
        parse_cyc("1/2", 4).unwrap().to_modp(5, 2).unwrap().value(),
        3
    );
    // oracle: 2 has multiplicative order 4 mod 5
    assert_eq!((1..=4).find(|&k| 2u64.pow(k) % 5 == 1), Some(4));
}

#[test]
fn enumeration_examples() {
    assert_eq!(preset("neg_identity_sl2").order(), 2);
    let d = preset("dbrane_scalar6");
    assert_eq!(d.order(), 6);
    assert!(d.is_abelian());
    let bt = preset("binary_tetrahedral");
    assert_eq!(bt.order(), 24);
    let mut sizes = bt.class_sizes();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 4, 4, 4, 4, 6]);
    let mut sizes = preset("q8").class_sizes();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    assert_eq!(preset("binary_icosahedral").order(), 120);
    assert_eq!(preset("binary_icosahedral").conductor(), 5);
    let k = preset("klein_gl2");
    assert_eq!((k.order(), k.class_count()), (4, 4));
    for n in 1..=6 {
        let g = preset(&format!("cyclic_gl1:{n}"));
        assert_eq!((g.order(), g.dim()), (n as usize, 1));
    }
}

#[test]
fn group_too_large() {
    let (p, _) = resolve("binary_icosahedral").unwrap();
    assert!(matches!(
        p.group(None, 119),
        Err(Error::GroupTooLarge { .. })
    ));
}

#[test]
fn determinant_kernels_and_quotients() {
    let d = Arc::new(preset("dbrane_scalar6"));
    let n = sl_kernel(&d);
    assert_eq!(n.sub.order(), 2);
    assert_eq!(cyclic_quotient(&n).unwrap().0, 3);
    let s = Arc::new(preset("scalar_i_gl2"));
    assert_eq!(sl_kernel(&s).sub.order(), 2);
    let bt = Arc::new(preset("binary_tetrahedral"));
    assert_eq!(sl_kernel(&bt).sub.order(), 24);
    assert_eq!(cyclic_quotient(&NormalEmbedding::whole(bt)).unwrap().0, 1);
    let q8 = Arc::new(preset("q8"));
    assert!(matches!(
        cyclic_quotient(&NormalEmbedding::center(q8)),
        Err(Error::QuotientNotCyclic { order: 4 })
    ));
}

#[test]
fn scalar_extensions() {
    assert_eq!(
        scalar_extend(&preset("trivial:4"), 6, DEFAULT_MAX_ORDER)
            .unwrap()
            .order(),
        6
    );
    let g = scalar_extend(&preset("neg_identity_sl2"), 4, DEFAULT_MAX_ORDER).unwrap();
    assert_eq!(g.order(), 4);
    let i = CycMatrix::scalar(2, &CycElem::zeta_pow(4, 1));
    assert!(g.find(&i).is_some());
    for n in 2..=5 {
        let h = scalar_extend(&preset("trivial:1"), n, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(h.order(), n as usize);
    }
    assert!(matches!(
        scalar_extend(&preset("scalar_i_gl2"), 2, DEFAULT_MAX_ORDER),
        Err(Error::NotSpecialLinear)
    ));
}

#[test]
fn class_fusion_in_q8() {
    let q8 = Arc::new(preset("q8"));
    let x = (0..q8.order()).find(|&a| q8.element_order(a) == 4).unwrap();
    let z4 = NormalEmbedding::generated_by(q8.clone(), &[x]).unwrap();
    let fused: Vec<usize> = (0..4)
        .filter(|&c| z4.sub.element_order(z4.sub.classes()[c].representative) == 4)
        .map(|c| z4.fusion[c])
        .collect();
    assert_eq!(fused.len(), 2);
    assert_eq!(fused[0], fused[1]);
    let s = Arc::new(preset("scalar_i_gl2"));
    let n = sl_kernel(&s);
    assert_ne!(n.fusion[0], n.fusion[1]);
}

#[test]
fn strip_examples() {
    for n in 2..=6 {
        let g = strip_diagonal(&preset(&format!("cyclic_sl2:{n}"))).unwrap();
        assert_eq!((g.order(), g.dim()), (n as usize, 1));
    }
    let t = strip_diagonal(&preset("trivial:3")).unwrap();
    assert_eq!((t.order(), t.dim()), (1, 2));
    let d = preset("dbrane_scalar6");
    let (e, _) = embed_det_inverse(&d);
    let back = strip_diagonal(&e).unwrap();
    assert_eq!(back.order(), 6);
    assert!(back
        .find(&CycMatrix::scalar(4, &CycElem::zeta_pow(6, 1)))
        .is_some());
    assert!(matches!(
        strip_diagonal(&preset("q8")),
        Err(Error::NotDiagonal)
    ));
}

#[test]
fn character_table_examples() {
    let degrees = |spec: &str| {
        let mut d = CharacterTable::compute(&preset(spec)).unwrap().degrees;
        d.sort();
        d
    };
    assert_eq!(degrees("neg_identity_sl2"), vec![1, 1]);
    assert_eq!(degrees("q8"), vec![1, 1, 1, 1, 2]);
    assert_eq!(degrees("binary_tetrahedral"), vec![1, 1, 1, 2, 2, 2, 3]);
    assert_eq!(degrees("binary_octahedral"), vec![1, 1, 2, 2, 2, 3, 3, 4]);
    assert_eq!(
        degrees("binary_icosahedral"),
        vec![1, 2, 2, 3, 3, 4, 4, 5, 6]
    );
}

#[test]
fn characters_against_traces() {
    let g = preset("binary_tetrahedral");
    let t = CharacterTable::compute(&g).unwrap();
    let nat = natural_character(&g);
    let idx = t
        .position(&nat)
        .expect("the natural representation is irreducible");
    assert_eq!(t.degrees[idx], 2);
    // an element of order 6 has trace 1
    let c = g
        .classes()
        .iter()
        .position(|c| g.element_order(c.representative) == 6)
        .unwrap();
    assert!(nat.values[c].is_one());
    let one = &t.rows[0];
    assert!(one.values.iter().all(CycElem::is_one));

    let k = preset("klein_gl2");
    let mut dets: Vec<i64> = det_character(&k)
        .values
        .iter()
        .map(|v| v.to_rational().unwrap().to_integer().try_into().unwrap())
        .collect();
    dets.sort();
    assert_eq!(dets, vec![-1, -1, 1, 1]);
}

#[test]
fn inner_products_for_the_sign_group() {
    let g = preset("neg_identity_sl2");
    let t = CharacterTable::compute(&g).unwrap();
    let v = natural_character(&g);
    let sign = (0..2).find(|&i| i != 0).unwrap();
    assert_eq!(
        inner_product(&g, &v, &t.rows[0]).unwrap(),
        Rational::from_integer(0.into())
    );
    assert_eq!(
        inner_product(&g, &v, &t.rows[sign]).unwrap(),
        Rational::from_integer(2.into())
    );
}

#[test]
fn extendibility_examples() {
    let bt = Arc::new(preset("binary_tetrahedral"));
    let whole = NormalEmbedding::whole(bt.clone());
    let t = CharacterTable::compute(&bt).unwrap();
    let e = restrict_and_check_extendible(&whole, &t, &t).unwrap();
    assert!(e.all_extendible());
    assert_eq!(e.deck_characters, vec![0]);

    let s = Arc::new(preset("scalar_i_gl2"));
    let n = sl_kernel(&s);
    let (ts, tn) = (
        CharacterTable::compute(&s).unwrap(),
        CharacterTable::compute(&n.sub).unwrap(),
    );
    let e = restrict_and_check_extendible(&n, &ts, &tn).unwrap();
    assert!(e.all_extendible());
    assert_eq!(e.deck_characters.len(), 2);
}

#[test]
fn quiver_examples() {
    let q = |spec: &str| {
        mckay_core::Analysis::new(preset(spec), spec)
            .unwrap()
            .quiver
    };
    assert_eq!(q("trivial:4").arrows, vec![vec![4]]);
    assert_eq!(q("neg_identity_sl2").arrows, vec![vec![0, 2], vec![2, 0]]);

    let d = q("dbrane_scalar6");
    assert_eq!(d.vertex_count(), 6);
    // vertices are ordered by residue; recover the cyclic labelling from the arrows
    let next: Vec<usize> = d
        .arrows
        .iter()
        .map(|r| r.iter().position(|&a| a == 4).unwrap())
        .collect();
    assert!(d.arrows.iter().all(|r| r.iter().sum::<u32>() == 4));
    let mut label = [0; 6];
    let mut v = 0;
    for i in 0..6 {
        label[v] = i;
        v = next[v];
    }
    assert_eq!(v, 0);
    let sigma = d.nakayama.clone().unwrap();
    for v in 0..6 {
        let expected = (label[v] + 4) % 6;
        assert_eq!(label[sigma.apply(v)], expected);
    }
    assert!(is_automorphism(&d, &sigma));

    let with = add_nakayama_arrows(&d).unwrap();
    assert!(with.nakayama.is_none());
    for v in 0..6 {
        assert_eq!(with.arrows[sigma.apply(v)][v], 1);
    }

    let klein = q("klein_gl2");
    let sigma = klein.nakayama.clone().unwrap();
    assert!(is_automorphism(&klein, &sigma));
    // swapping two adjacent vertices breaks the 4-cycle
    let j = klein.arrows[0].iter().position(|&a| a == 1).unwrap();
    let mut images: Vec<usize> = (0..4).collect();
    images.swap(0, j);
    assert!(!is_automorphism(&klein, &Permutation::new(images).unwrap()));
}

#[test]
fn group_file_examples() {
    let f = parse_group_file("conductor = 4\ndimension = 2\n\n[[generator]]\nrows = [[\"z\", \"0\"], [\"0\", \"z^-1\"]]\n")
        .unwrap();
    let g = FiniteMatrixGroup::enumerate(&f.generators, DEFAULT_MAX_ORDER).unwrap();
    assert_eq!(g.order(), 4);
    assert!(g.is_special_linear());

    let err =
        parse_group_file("conductor = 4\ndimension = 1\n\n[[generator]]\nrows = [[\"z^^2\"]]\n")
            .unwrap_err();
    assert_eq!(err.name(), "ParseError");

    let f = parse_group_file(
        "conductor = 6\ndimension = 4\n\n[[generator]]\nrows = [[\"z\",\"0\",\"0\",\"0\"],[\"0\",\"z\",\"0\",\"0\"],[\"0\",\"0\",\"z\",\"0\"],[\"0\",\"0\",\"0\",\"z\"]]\n",
    )
    .unwrap();
    let g = FiniteMatrixGroup::enumerate(&f.generators, DEFAULT_MAX_ORDER).unwrap();
    let p = preset("dbrane_scalar6");
    assert_eq!(g.order(), p.order());
    assert!(p.elements().iter().all(|m| g.find(m).is_some()));
}
