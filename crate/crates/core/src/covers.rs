//! Coverings of McKay quivers induced by normal subgroups with cyclic quotient.

use std::collections::BTreeSet;
use std::fmt;

use crate::chartab::{restrict_and_check_extendible, CharacterTable};
use crate::error::{Error, Result};
use crate::matgroup::{cyclic_quotient, NormalEmbedding};
use crate::quiver::{is_automorphism, Permutation, Quiver};

/// A vertex projection `π: Q_G → Q_L` with its deck transformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMap {
    pub source: Quiver,
    pub target: Quiver,
    pub vertex_map: Vec<usize>,
    pub deck: Vec<Permutation>,
    pub deck_order: usize,
}

impl CoveringMap {
    pub fn identity(q: &Quiver) -> CoveringMap {
        let k = q.vertex_count();
        CoveringMap {
            source: q.clone(),
            target: q.clone(),
            vertex_map: (0..k).collect(),
            deck: vec![Permutation::identity(k)],
            deck_order: 1,
        }
    }

    pub fn fiber(&self, w: usize) -> Vec<usize> {
        (0..self.vertex_map.len())
            .filter(|&v| self.vertex_map[v] == w)
            .collect()
    }

    /// A deck transformation generating the whole deck group, if it is cyclic.
    pub fn deck_generator(&self) -> Option<&Permutation> {
        self.deck.iter().find(|d| d.order() == self.deck.len())
    }
}

/// Builds `π` from restriction of characters and the deck group from
/// twists by one-dimensional characters of `G` trivial on `L`.
pub fn build_covering(
    emb: &NormalEmbedding,
    table_g: &CharacterTable,
    table_l: &CharacterTable,
    quiver_g: &Quiver,
    quiver_l: &Quiver,
) -> Result<CoveringMap> {
    if !emb.is_normal() {
        return Err(Error::NotNormal);
    }
    let (r, _) = cyclic_quotient(emb)?;
    let ext = restrict_and_check_extendible(emb, table_g, table_l)?;
    if let Some(character) = ext.first_obstruction() {
        return Err(Error::NotExtendible { character });
    }
    let vertex_map = table_g
        .rows
        .iter()
        .enumerate()
        .map(|(i, chi)| {
            table_l
                .position(&chi.pull_back(&emb.fusion))
                .ok_or_else(|| Error::RowNotFound {
                    context: format!("restriction of row {i} is reducible"),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let deck = ext
        .deck_characters
        .iter()
        .map(|&b| {
            let beta = &table_g.rows[b];
            let images = table_g
                .rows
                .iter()
                .enumerate()
                .map(|(i, chi)| {
                    table_g
                        .position(&(chi * beta))
                        .ok_or_else(|| Error::RowNotFound {
                            context: format!("twist of row {i} by row {b}"),
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    if deck.len() != r || table_g.len() != r * table_l.len() {
        return Err(Error::RowNotFound {
            context: format!(
                "{} rows over {} rows with {} deck characters, quotient order {r}",
                table_g.len(),
                table_l.len(),
                deck.len()
            ),
        });
    }
    Ok(CoveringMap {
        source: quiver_g.clone(),
        target: quiver_l.clone(),
        vertex_map,
        deck,
        deck_order: r,
    })
}

/// A failed covering condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexMapLength {
        expected: usize,
        found: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        image: usize,
    },
    DeckSize {
        expected: usize,
        found: usize,
    },
    FiberSize {
        target: usize,
        expected: usize,
        found: usize,
    },
    NotFree {
        vertex: usize,
    },
    NotTransitive {
        target: usize,
    },
    DeckMovesFiber {
        deck: usize,
        vertex: usize,
    },
    OutFiberSum {
        source: usize,
        target: usize,
        expected: u64,
        found: u64,
    },
    InFiberSum {
        source: usize,
        target: usize,
        expected: u64,
        found: u64,
    },
    DeckNotAutomorphism {
        deck: usize,
    },
    DeckNotCyclic,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexMapLength { expected, found } => {
                write!(f, "vertex map has {found} entries, expected {expected}")
            }
            Violation::VertexOutOfRange { vertex, image } => {
                write!(f, "vertex {vertex} maps to nonexistent target vertex {image}")
            }
            Violation::DeckSize { expected, found } => {
                write!(f, "{found} deck transformations, expected {expected}")
            }
            Violation::FiberSize { target, expected, found } => {
                write!(f, "fiber over {target} has size {found}, expected {expected}")
            }
            Violation::NotFree { vertex } => write!(f, "deck action is not free at vertex {vertex}"),
            Violation::NotTransitive { target } => write!(f, "deck action is not transitive on the fiber over {target}"),
            Violation::DeckMovesFiber { deck, vertex } => {
                write!(f, "deck transformation {deck} moves vertex {vertex} to another fiber")
            }
            Violation::OutFiberSum {
                source,
                target,
                expected,
                found,
            } => write!(
                f,
                "out-arrow fiber sum from {source} into fiber over {target} is {found}, expected {expected}"
            ),
            Violation::InFiberSum {
                source,
                target,
                expected,
                found,
            } => write!(
                f,
                "in-arrow fiber sum into {source} from fiber over {target} is {found}, expected {expected}"
            ),
            Violation::DeckNotAutomorphism { deck } => {
                write!(f, "deck transformation {deck} is not a quiver automorphism")
            }
            Violation::DeckNotCyclic => f.write_str("deck transformations do not form a cyclic group"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoveringReport {
    pub violations: Vec<Violation>,
}

impl CoveringReport {
    pub fn is_regular(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CoveringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("regular covering: all conditions hold");
        }
        writeln!(
            f,
            "not a regular covering ({} violations):",
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks the regular covering conditions at the level of arrow
/// multiplicities. Deck checks are skipped when `deck` is empty (an
/// unverified composite), but fiber sizes must still equal `deck_order`.
pub fn verify_regular_covering(c: &CoveringMap) -> CoveringReport {
    let mut out = Vec::new();
    let n = c.source.vertex_count();
    let k = c.target.vertex_count();
    let r = c.deck_order;
    if c.vertex_map.len() != n {
        out.push(Violation::VertexMapLength {
            expected: n,
            found: c.vertex_map.len(),
        });
        return CoveringReport { violations: out };
    }
    for (v, &w) in c.vertex_map.iter().enumerate() {
        if w >= k {
            out.push(Violation::VertexOutOfRange {
                vertex: v,
                image: w,
            });
        }
    }
    if !out.is_empty() {
        return CoveringReport { violations: out };
    }

    let fibers: Vec<Vec<usize>> = (0..k).map(|w| c.fiber(w)).collect();
    for (w, fiber) in fibers.iter().enumerate() {
        if fiber.len() != r {
            out.push(Violation::FiberSize {
                target: w,
                expected: r,
                found: fiber.len(),
            });
        }
    }

    let a = &c.source.arrows;
    let b = &c.target.arrows;
    for v in 0..n {
        for (w, fiber) in fibers.iter().enumerate() {
            let expected = b[c.vertex_map[v]][w] as u64;
            let found = fiber.iter().map(|&u| a[v][u] as u64).sum();
            if found != expected {
                out.push(Violation::OutFiberSum {
                    source: v,
                    target: w,
                    expected,
                    found,
                });
            }
            let expected = b[w][c.vertex_map[v]] as u64;
            let found = fiber.iter().map(|&u| a[u][v] as u64).sum();
            if found != expected {
                out.push(Violation::InFiberSum {
                    source: v,
                    target: w,
                    expected,
                    found,
                });
            }
        }
    }

    if !c.deck.is_empty() {
        out.extend(deck_violations(c, &fibers));
    }
    CoveringReport { violations: out }
}

fn deck_violations(c: &CoveringMap, fibers: &[Vec<usize>]) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = c.source.vertex_count();
    if c.deck.len() != c.deck_order {
        out.push(Violation::DeckSize {
            expected: c.deck_order,
            found: c.deck.len(),
        });
    }
    if let Some(bad) = c.deck.iter().position(|d| d.len() != n) {
        out.push(Violation::DeckNotAutomorphism { deck: bad });
        return out;
    }
    for (i, d) in c.deck.iter().enumerate() {
        if let Some(v) = (0..n).find(|&v| c.vertex_map[d.apply(v)] != c.vertex_map[v]) {
            out.push(Violation::DeckMovesFiber { deck: i, vertex: v });
        }
        if !is_automorphism(&c.source, d) {
            out.push(Violation::DeckNotAutomorphism { deck: i });
        }
    }
    for v in 0..n {
        let orbit: BTreeSet<usize> = c.deck.iter().map(|d| d.apply(v)).collect();
        if orbit.len() != c.deck.len() {
            out.push(Violation::NotFree { vertex: v });
        }
        let fiber: BTreeSet<usize> = fibers[c.vertex_map[v]].iter().copied().collect();
        if orbit != fiber
            && !out.contains(&Violation::NotTransitive {
                target: c.vertex_map[v],
            })
        {
            out.push(Violation::NotTransitive {
                target: c.vertex_map[v],
            });
        }
    }
    let cyclic = c.deck_generator().is_some_and(|g| {
        let powers: BTreeSet<Permutation> = (0..c.deck.len()).map(|j| g.pow(j)).collect();
        let given: BTreeSet<Permutation> = c.deck.iter().cloned().collect();
        powers == given
    });
    if !cyclic {
        out.push(Violation::DeckNotCyclic);
    }
    out
}

fn same_quiver(a: &Quiver, b: &Quiver) -> bool {
    a.vertices == b.vertices && a.arrows == b.arrows && a.nakayama == b.nakayama
}

/// `Q_G → Q_N → Q_L`. Without `deck` the composite carries no deck
/// transformations and must be checked with [`verify_regular_covering`].
pub fn compose_coverings(
    c1: &CoveringMap,
    c2: &CoveringMap,
    deck: Option<Vec<Permutation>>,
) -> Result<CoveringMap> {
    if !same_quiver(&c1.target, &c2.source) {
        return Err(Error::TargetSourceMismatch);
    }
    Ok(CoveringMap {
        source: c1.source.clone(),
        target: c2.target.clone(),
        vertex_map: c1.vertex_map.iter().map(|&v| c2.vertex_map[v]).collect(),
        deck: deck.unwrap_or_default(),
        deck_order: c1.deck_order * c2.deck_order,
    })
}
