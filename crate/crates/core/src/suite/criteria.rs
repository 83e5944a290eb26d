use super::dynkin::{affine_a, affine_d, affine_e6, affine_e7, affine_e8, Diagram};
use super::iso::find_isomorphism;
use super::numeric::max_deviation;
use super::{Outcome, Recorder, Workbench};
use crate::covers::{build_covering, compose_coverings, verify_regular_covering};
use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};
use crate::matgroup::{scalar_extend, sl_kernel, CycMatrix, NormalEmbedding};
use crate::pipeline::{cover_between, Analysis};
use crate::quiver::{add_nakayama_arrows, is_automorphism, quiver_equal, Permutation};

type Check = fn(&mut Workbench, &mut Recorder) -> Result<()>;

const CRITERIA: &[(u32, &str, Check)] = &[
    (1, "ADE reproduction for finite subgroups of SL(2)", ade),
    (
        2,
        "cyclic tower in GL(1) and its det^-1 embedding",
        cyclic_tower,
    ),
    (
        3,
        "two-dimensional fixtures and their 3-McKay quivers",
        plane_fixtures,
    ),
    (
        4,
        "scalar extension by ζ₆ in GL(4) and its embedding",
        scalar_six,
    ),
    (5, "coverings induced by normal subgroups", coverings),
    (6, "composition of coverings", composition),
    (
        7,
        "non-extendible characters block the covering",
        negative_control,
    ),
    (8, "character table identities", character_tables),
    (
        9,
        "floating-point oracle for arrow multiplicities",
        float_oracle,
    ),
    (
        10,
        "det^-1 embedding adds one arrow σ(i) → i",
        embedding_identity,
    ),
    (
        11,
        "Nakayama permutation is a quiver automorphism",
        nakayama_automorphism,
    ),
];

/// Identifiers and titles of all criteria.
pub fn criteria() -> Vec<(u32, &'static str)> {
    CRITERIA.iter().map(|&(id, title, _)| (id, title)).collect()
}

pub fn run_criterion(id: u32, w: &mut Workbench) -> Option<Outcome> {
    let &(id, title, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let mut r = Recorder::default();
    let result = check(w, &mut r);
    Some(r.finish(id, title, result))
}

pub fn run_all(max_order: usize) -> Vec<Outcome> {
    let mut w = Workbench::new(max_order);
    CRITERIA
        .iter()
        .filter_map(|c| run_criterion(c.0, &mut w))
        .collect()
}

/// Preset specifications exercised by the table-wide criteria.
pub fn preset_instances() -> Vec<String> {
    let mut out: Vec<String> = (1..=4).map(|m| format!("trivial:{m}")).collect();
    out.extend((2..=8).map(|n| format!("cyclic_sl2:{n}")));
    out.extend((2..=8).map(|n| format!("cyclic_gl1:{n}")));
    out.extend((2..=5).map(|n| format!("binary_dihedral:{n}")));
    out.extend(
        [
            "binary_tetrahedral",
            "binary_octahedral",
            "binary_icosahedral",
            "neg_identity_sl2",
            "scalar_i_gl2",
            "klein_gl2",
            "q8",
            "dbrane_scalar6",
        ]
        .map(String::from),
    );
    out
}

fn stem(label: &str) -> String {
    label
        .chars()
        .filter_map(|c| match c {
            '(' | ',' => Some('_'),
            ')' | ' ' => None,
            c => Some(c),
        })
        .collect()
}

fn save(r: &mut Recorder, a: &Analysis, name: &str) {
    r.artifact(format!("{name}.json"), a.quiver.to_json());
    r.artifact(format!("{name}.dot"), a.quiver.to_dot());
}

fn matrix(k: usize, f: impl Fn(usize, usize) -> u32) -> Vec<Vec<u32>> {
    (0..k).map(|i| (0..k).map(|j| f(i, j)).collect()).collect()
}

/// `m[labels[i]][labels[j]]`.
fn relabel(m: &[Vec<u32>], labels: &[usize]) -> Vec<Vec<u32>> {
    matrix(labels.len(), |i, j| m[labels[i]][labels[j]])
}

/// For a cyclic group generated by element `x` of order `n`, `labels[i]` is
/// the vertex of the character with `χ(x) = ζ_n^i`.
fn cyclic_labels(a: &Analysis, x: usize, n: u32) -> Option<Vec<usize>> {
    let c = a.group.class_of(x);
    (0..n)
        .map(|i| {
            let target = CycElem::zeta_pow(n, i as i64);
            (0..a.table.len()).find(|&row| a.table.rows[row].values[c] == target)
        })
        .collect()
}

fn labels_or_fail(r: &mut Recorder, a: &Analysis, x: usize, n: u32) -> Option<Vec<usize>> {
    let labels = cyclic_labels(a, x, n);
    r.check(labels.is_some(), || {
        format!(
            "{}: characters are not labeled by powers of ζ_{n}",
            a.quiver.provenance
        )
    });
    labels
}

fn ade(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let mut cases: Vec<(String, Diagram, String)> = Vec::new();
    for n in 2..=8usize {
        cases.push((
            format!("cyclic_sl2:{n}"),
            affine_a(n - 1),
            format!("Ã_{}", n - 1),
        ));
    }
    for n in 2..=5usize {
        cases.push((
            format!("binary_dihedral:{n}"),
            affine_d(n + 2),
            format!("D̃_{}", n + 2),
        ));
    }
    cases.push(("binary_tetrahedral".into(), affine_e6(), "Ẽ_6".into()));
    cases.push(("binary_octahedral".into(), affine_e7(), "Ẽ_7".into()));
    cases.push(("binary_icosahedral".into(), affine_e8(), "Ẽ_8".into()));

    for (spec, (adj, marks), name) in cases {
        let a = w.preset(&spec)?;
        let q = &a.quiver;
        let label = q.provenance.clone();
        r.check(q.is_symmetric(), || {
            format!("{label}: adjacency is not symmetric")
        });
        let matched = find_isomorphism(&adj, &marks, &q.arrows, &q.degrees(), None).is_some();
        r.check(matched, || {
            format!("{label}: not the doubled {name} diagram")
        });
        r.check(q.satisfies_dimension_identity(2), || {
            format!("{label}: A·d ≠ 2d")
        });
        let sigma_id = q.nakayama.as_ref().is_some_and(Permutation::is_identity);
        r.check(sigma_id, || {
            format!("{label}: Nakayama permutation is not the identity")
        });
        r.note(format!(
            "{label}: {} vertices, doubled {name}",
            q.vertex_count()
        ));
        r.artifact(format!("ade_{}.json", stem(&label)), q.to_json());
    }
    Ok(())
}

fn cyclic_tower(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    for n in 2..=8u32 {
        let a = w.preset(&format!("cyclic_gl1:{n}"))?;
        let label = a.quiver.provenance.clone();
        let k = n as usize;
        let Some(l) = labels_or_fail(r, &a, a.group.generators()[0], n) else {
            continue;
        };
        let cycle = matrix(k, |i, j| u32::from(j == (i + 1) % k));
        r.check(relabel(&a.quiver.arrows, &l) == cycle, || {
            format!("{label}: not an oriented {n}-cycle")
        });
        let sigma = a.quiver.nakayama.clone().ok_or(Error::MissingNakayama)?;
        r.check((0..k).all(|i| sigma.apply(l[i]) == l[(i + 1) % k]), || {
            format!("{label}: σ(i) ≠ i + 1")
        });
        let plus = add_nakayama_arrows(&a.quiver)?;
        r.check(relabel(&plus.arrows, &l) == affine_a(k - 1).0, || {
            format!(
                "{label}: adding σ-arrows does not give the doubled Ã_{}",
                k - 1
            )
        });
        let (image, matching) = a.embedded()?;
        r.check(quiver_equal(&plus, &image.quiver, &matching)?, || {
            format!("{label}: embedded quiver differs from the σ-arrow quiver")
        });
        let sl = image.quiver.is_symmetric()
            && image
                .quiver
                .nakayama
                .as_ref()
                .is_some_and(Permutation::is_identity);
        r.check(sl, || {
            format!("{label}: embedded quiver is not a symmetric SL(2) quiver")
        });
    }
    r.note("cyclic_gl1(n), n = 2..8: oriented n-cycles, σ = rotation, embeddings of type Ã_{n-1}");
    Ok(())
}

fn plane_fixtures(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let pm = w.preset("neg_identity_sl2")?;
    r.check(pm.quiver.arrows == vec![vec![0, 2], vec![2, 0]], || {
        format!("neg_identity_sl2: arrows {:?}", pm.quiver.arrows)
    });
    save(r, &pm, "neg_identity_sl2");

    let si = w.preset("scalar_i_gl2")?;
    if let Some(l) = labels_or_fail(r, &si, si.group.generators()[0], 4) {
        r.check(
            relabel(&si.quiver.arrows, &l) == matrix(4, |i, j| 2 * u32::from(j == (i + 1) % 4)),
            || "scalar_i_gl2: not a doubled oriented 4-cycle".to_string(),
        );
    }
    save(r, &si, "scalar_i_gl2");

    let kl = w.preset("klein_gl2")?;
    let (cycle, ones) = affine_a(3);
    let half_turn = Permutation::rotation(4, 2);
    let sigma = kl.quiver.nakayama.clone().ok_or(Error::MissingNakayama)?;
    let matched = find_isomorphism(
        &cycle,
        &ones,
        &kl.quiver.arrows,
        &kl.quiver.degrees(),
        Some((&half_turn, &sigma)),
    );
    r.check(matched.is_some(), || {
        "klein_gl2: not a doubled 4-cycle with σ sending each vertex to the opposite one"
            .to_string()
    });
    save(r, &kl, "klein_gl2");

    // same arrows as ℤ₄ ⊂ SL(2); only the Nakayama permutations tell them apart
    let z4 = w.preset("cyclic_sl2:4")?;
    let same_arrows = find_isomorphism(
        &z4.quiver.arrows,
        &z4.quiver.degrees(),
        &kl.quiver.arrows,
        &kl.quiver.degrees(),
        None,
    );
    r.check(same_arrows.is_some(), || {
        "klein_gl2 and cyclic_sl2(4) have different arrows".to_string()
    });
    let z4_sigma = z4.quiver.nakayama.clone().ok_or(Error::MissingNakayama)?;
    r.check(z4_sigma.is_identity() && !sigma.is_identity(), || {
        "klein_gl2 and cyclic_sl2(4) should differ in their Nakayama permutations".to_string()
    });

    // vertices a, b, c, d in cycle order
    let from_scalar = matrix(4, |i, j| {
        2 * u32::from(j == (i + 1) % 4) + u32::from(j == (i + 2) % 4)
    });
    let from_klein = matrix(4, |i, j| {
        u32::from(j == (i + 1) % 4 || i == (j + 1) % 4) + u32::from(j == (i + 2) % 4)
    });
    r.check(
        find_isomorphism(&from_scalar, &ones, &from_klein, &ones, None).is_none(),
        || "the two 3-McKay fixtures are isomorphic".to_string(),
    );
    for (a, fixture, name) in [
        (&si, &from_scalar, "scalar_i_gl2"),
        (&kl, &from_klein, "klein_gl2"),
    ] {
        let (image, _) = a.embedded()?;
        let q = &image.quiver;
        r.check(
            find_isomorphism(fixture, &ones, &q.arrows, &q.degrees(), None).is_some(),
            || format!("{name}: embedded quiver in SL(3) does not match the 3-McKay fixture"),
        );
        r.check(q.satisfies_dimension_identity(3), || {
            format!("{name}: embedded A·d ≠ 3d")
        });
        save(r, &image, &format!("{name}_embedded"));
    }
    r.note("neg_identity_sl2 = [[0,2],[2,0]]; scalar_i_gl2 doubled oriented 4-cycle; klein_gl2 σ = half turn");
    r.note("klein_gl2 and cyclic_sl2(4): same doubled Ã_3, σ = half turn vs identity");
    r.note("SL(3) images: 2(i→i+1) + (i→i+2) and (i↔i+1) + (i→i+2)");
    Ok(())
}

fn scalar_six(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let t4 = w.preset("trivial:4")?;
    r.check(t4.quiver.arrows == vec![vec![4]], || {
        format!("trivial(4): arrows {:?}", t4.quiver.arrows)
    });
    save(r, &t4, "trivial_4");

    let max = w.max_order;
    let base = t4.group.clone();
    let g = w.analyse("scalar_extend(trivial(4), 6)", || {
        scalar_extend(&base, 6, max)
    })?;
    let x = g
        .group
        .find(&CycMatrix::scalar(4, &CycElem::zeta_pow(6, 1)))
        .ok_or(Error::ElementNotFound)?;
    r.check(g.group.order() == 6, || {
        format!("extension has order {}", g.group.order())
    });
    let Some(l) = labels_or_fail(r, &g, x, 6) else {
        return Ok(());
    };
    r.check(
        relabel(&g.quiver.arrows, &l) == matrix(6, |i, j| 4 * u32::from(j == (i + 1) % 6)),
        || "extension: arrows are not 4 × (i → i+1) on ℤ₆".to_string(),
    );
    let sigma = g.quiver.nakayama.clone().ok_or(Error::MissingNakayama)?;
    r.check((0..6).all(|i| sigma.apply(l[i]) == l[(i + 4) % 6]), || {
        "extension: σ(i) ≠ i + 4".to_string()
    });
    save(r, &g, "scalar_extend_trivial_4_6");

    let (image, m) = g.embedded()?;
    let expected = matrix(6, |i, j| {
        4 * u32::from(j == (i + 1) % 6) + u32::from(i == (j + 4) % 6)
    });
    let image_labels: Vec<usize> = l.iter().map(|&v| m.apply(v)).collect();
    r.check(
        relabel(&image.quiver.arrows, &image_labels) == expected,
        || "embedding: arrows are not 4 × (i → i+1) plus (i+4 → i)".to_string(),
    );
    r.check(image.quiver.satisfies_dimension_identity(5), || {
        "embedding: A·d ≠ 5d".to_string()
    });
    save(r, &image, "scalar_extend_trivial_4_6_embedded");

    let preset = w.preset("dbrane_scalar6")?;
    let same = find_isomorphism(
        &g.quiver.arrows,
        &g.quiver.degrees(),
        &preset.quiver.arrows,
        &preset.quiver.degrees(),
        Some((
            &sigma,
            preset
                .quiver
                .nakayama
                .as_ref()
                .ok_or(Error::MissingNakayama)?,
        )),
    )
    .is_some();
    r.check(same, || {
        "dbrane_scalar6 preset gives a different quiver".to_string()
    });
    r.note("trivial(4) = [[4]]; ⟨ζ₆I₄⟩: 4 arrows i → i+1, σ(i) = i+4; SL(5) image adds i+4 → i");
    Ok(())
}

fn extension_cases(w: &mut Workbench) -> Result<Vec<(String, Analysis, Vec<CycMatrix>)>> {
    let mut out = Vec::new();
    let bases: Vec<String> = (2..=6)
        .map(|n| format!("cyclic_sl2:{n}"))
        .chain(std::iter::once("binary_tetrahedral".to_string()))
        .collect();
    for spec in bases {
        let n = w.preset(&spec)?;
        for k in [2u32, 3, 4, 6] {
            let label = format!("scalar_extend({}, {k})", n.quiver.provenance);
            let max = w.max_order;
            let base = n.group.clone();
            let g = w.analyse(&label, || scalar_extend(&base, k, max))?;
            out.push((label, g, n.group.generator_matrices()));
        }
    }
    Ok(out)
}

fn coverings(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let mut cases: Vec<(String, Analysis, NormalEmbedding)> = Vec::new();
    let si = w.preset("scalar_i_gl2")?;
    let emb = sl_kernel(&si.group);
    cases.push(("scalar_i_gl2 over {±I}".into(), si, emb));
    let d6 = w.preset("dbrane_scalar6")?;
    let emb = NormalEmbedding::trivial(d6.group.clone());
    cases.push(("dbrane_scalar6 over trivial".into(), d6, emb));
    let kl = w.preset("klein_gl2")?;
    let minus = CycMatrix::scalar(2, &CycElem::from_integer(-1, 1));
    let emb = NormalEmbedding::locate(kl.group.clone(), &[minus])?;
    cases.push(("klein_gl2 over {±I}".into(), kl, emb));
    for (label, g, gens) in extension_cases(w)? {
        let emb = NormalEmbedding::locate(g.group.clone(), &gens)?;
        cases.push((format!("{label} over the base"), g, emb));
    }

    let count = cases.len();
    let mut commuting = 0;
    for (label, ambient, emb) in cases {
        let sub = Analysis::new(emb.sub.clone(), "subgroup")?;
        let ca = cover_between(&emb, ambient, sub)?;
        let c = &ca.covering;
        let r_expected = emb.index();
        r.check(ca.report.is_regular(), || format!("{label}: {}", ca.report));
        r.check(c.deck_order == r_expected, || {
            format!(
                "{label}: deck order {} ≠ |G/L| = {r_expected}",
                c.deck_order
            )
        });
        let fibers_ok = (0..c.target.vertex_count()).all(|t| c.fiber(t).len() == r_expected);
        r.check(fibers_ok, || {
            format!("{label}: a fiber has size ≠ {r_expected}")
        });
        // recorded only: nothing is claimed about the deck action and σ
        let commutes = match &c.source.nakayama {
            Some(sigma) => c.deck.iter().all(|t| t.compose(sigma) == sigma.compose(t)),
            None => false,
        };
        commuting += usize::from(commutes);
        r.note(format!(
            "{label}: {} → {} vertices, r = {r_expected}, deck commutes with σ: {commutes}",
            c.source.vertex_count(),
            c.target.vertex_count()
        ));
    }
    r.note(format!(
        "{count} coverings verified, {commuting} with deck commuting with σ"
    ));
    Ok(())
}

fn composition(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let top = w.preset("scalar_i_gl2")?;
    let mid = sl_kernel(&top.group);
    let middle = Analysis::new(mid.sub.clone(), "{±I}")?;
    let c1 = cover_between(&mid, top.clone(), middle.clone())?;
    let low = NormalEmbedding::trivial(mid.sub.clone());
    let bottom = Analysis::new(low.sub.clone(), "trivial")?;
    let c2 = cover_between(&low, middle, bottom.clone())?;
    let direct = cover_between(&NormalEmbedding::trivial(top.group.clone()), top, bottom)?;

    let composite = compose_coverings(&c1.covering, &c2.covering, None)?;
    r.check(composite.vertex_map == direct.covering.vertex_map, || {
        format!(
            "composite vertex map {:?} ≠ direct {:?}",
            composite.vertex_map, direct.covering.vertex_map
        )
    });
    r.check(
        composite.deck_order == 4 && direct.covering.deck_order == 4,
        || {
            format!(
                "deck orders {} and {}",
                composite.deck_order, direct.covering.deck_order
            )
        },
    );
    let report = verify_regular_covering(&composite);
    r.check(report.is_regular(), || format!("composite: {report}"));
    let with_deck = compose_coverings(
        &c1.covering,
        &c2.covering,
        Some(direct.covering.deck.clone()),
    )?;
    let report = verify_regular_covering(&with_deck);
    r.check(report.is_regular(), || {
        format!("composite with deck: {report}")
    });
    r.check(direct.report.is_regular(), || {
        format!("direct: {}", direct.report)
    });
    r.note(format!(
        "⟨iI₂⟩ → {{±I}} → trivial: vertex map {:?}, deck order {}",
        composite.vertex_map, composite.deck_order
    ));
    Ok(())
}

fn negative_control(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let q8 = w.preset("q8")?;
    let rotation = q8.group.generator_matrices()[0].clone();
    let emb = NormalEmbedding::locate(q8.group.clone(), &[rotation])?;
    r.check(emb.sub.order() == 4, || {
        format!("cyclic subgroup has order {}", emb.sub.order())
    });
    let sub = Analysis::new(emb.sub.clone(), "cyclic4")?;
    let result = build_covering(&emb, &q8.table, &sub.table, &q8.quiver, &sub.quiver);
    match &result {
        Err(e @ Error::NotExtendible { .. }) => {
            r.note(format!("build_covering(q8, ℤ₄): {}: {e}", e.name()))
        }
        other => {
            r.check(false, || format!("expected NotExtendible, got {other:?}"));
        }
    }
    let (n, m) = (q8.quiver.vertex_count(), sub.quiver.vertex_count());
    r.check(n == 5 && m == 4, || format!("vertex counts {n} and {m}"));
    r.check(n != 2 * m, || {
        "a 2-fold covering would be numerically possible".to_string()
    });
    r.note(format!("|Q(q8)| = {n}, |Q(ℤ₄)| = {m}, 2·{m} ≠ {n}"));
    Ok(())
}

fn character_tables(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let specs = preset_instances();
    for spec in &specs {
        let a = w.preset(spec)?;
        let label = &a.quiver.provenance;
        let sum: u64 = a.table.degrees.iter().map(|&d| (d as u64).pow(2)).sum();
        r.check(sum == a.group.order() as u64, || {
            format!("{label}: Σd² = {sum}")
        });
        r.check(a.table.rows_orthonormal(&a.group), || {
            format!("{label}: rows not orthonormal")
        });
        r.check(a.table.columns_orthogonal(&a.group), || {
            format!("{label}: columns not orthogonal")
        });
        r.check(a.table.modp_correspondence().is_some(), || {
            format!("{label}: reduced rows do not match the residue table")
        });
    }
    r.note(format!("{} preset groups", specs.len()));
    Ok(())
}

fn float_oracle(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let specs = preset_instances();
    let mut worst = 0.0f64;
    for spec in &specs {
        let a = w.preset(spec)?;
        let dev = max_deviation(&a);
        worst = worst.max(dev);
        r.check(dev < 1e-6, || {
            format!("{}: deviation {dev:e}", a.quiver.provenance)
        });
    }
    r.note(format!(
        "{} preset groups, largest deviation below 1e-6: {}",
        specs.len(),
        worst < 1e-6
    ));
    Ok(())
}

fn embedding_identity(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let mut count = 0;
    for spec in preset_instances() {
        let a = w.preset(&spec)?;
        if a.group.dim() > 4 {
            continue;
        }
        let plus = add_nakayama_arrows(&a.quiver)?;
        let (image, matching) = a.embedded()?;
        r.check(quiver_equal(&plus, &image.quiver, &matching)?, || {
            format!(
                "{}: embedded quiver ≠ quiver with σ-arrows",
                a.quiver.provenance
            )
        });
        count += 1;
    }
    r.note(format!("{count} preset groups with m ≤ 4"));
    Ok(())
}

fn nakayama_automorphism(w: &mut Workbench, r: &mut Recorder) -> Result<()> {
    let mut quivers = Vec::new();
    for spec in preset_instances() {
        let a = w.preset(&spec)?;
        let (image, _) = a.embedded()?;
        quivers.push(a.quiver);
        quivers.push(image.quiver);
    }
    for (_, g, _) in extension_cases(w)? {
        quivers.push(g.quiver);
    }
    for q in &quivers {
        let sigma = q.nakayama.as_ref().ok_or(Error::MissingNakayama)?;
        r.check(is_automorphism(q, sigma), || {
            format!("{}: σ is not an automorphism", q.provenance)
        });
    }
    r.note(format!("{} quivers", quivers.len()));
    Ok(())
}
