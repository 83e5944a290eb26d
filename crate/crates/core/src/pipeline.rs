//! Group → character table → McKay quiver, and the derived constructions.

use std::sync::Arc;

use crate::chartab::{row_correspondence, CharacterTable};
use crate::covers::{build_covering, verify_regular_covering, CoveringMap, CoveringReport};
use crate::error::Result;
use crate::matgroup::{embed_det_inverse, FiniteMatrixGroup, NormalEmbedding};
use crate::quiver::{build_mckay, Permutation, Quiver};

/// A group with its character table and McKay quiver.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub group: Arc<FiniteMatrixGroup>,
    pub table: CharacterTable,
    pub quiver: Quiver,
}

impl Analysis {
    pub fn new(group: impl Into<Arc<FiniteMatrixGroup>>, provenance: &str) -> Result<Analysis> {
        let group = group.into();
        let table = CharacterTable::compute(&group)?;
        let quiver = build_mckay(&group, &table)?.with_provenance(provenance);
        Ok(Analysis {
            group,
            table,
            quiver,
        })
    }

    /// Analysis of the `det⁻¹` image in one dimension higher, with the
    /// vertex matching induced by `g ↦ f(g)`.
    pub fn embedded(&self) -> Result<(Analysis, Permutation)> {
        let (image, _) = embed_det_inverse(&self.group);
        let provenance = match self.quiver.provenance.as_str() {
            "" => "det^-1 embedding".to_string(),
            p => format!("det^-1 embedding of {p}"),
        };
        let image = Analysis::new(image, &provenance)?;
        let matching = Permutation::new(row_correspondence(&self.table, &image.table)?)?;
        Ok((image, matching))
    }
}

/// A covering built from group data together with its verification.
#[derive(Clone, Debug)]
pub struct CoverAnalysis {
    pub ambient: Analysis,
    pub sub: Analysis,
    pub covering: CoveringMap,
    pub report: CoveringReport,
}

pub fn analyse_cover(emb: &NormalEmbedding, provenance: &str) -> Result<CoverAnalysis> {
    let ambient = Analysis::new(emb.ambient.clone(), provenance)?;
    let sub = Analysis::new(emb.sub.clone(), &format!("subgroup of {provenance}"))?;
    cover_between(emb, ambient, sub)
}

/// Like [`analyse_cover`] but reusing analyses already computed for the
/// two groups (their vertex orders are then shared with other coverings).
pub fn cover_between(
    emb: &NormalEmbedding,
    ambient: Analysis,
    sub: Analysis,
) -> Result<CoverAnalysis> {
    let covering = build_covering(
        emb,
        &ambient.table,
        &sub.table,
        &ambient.quiver,
        &sub.quiver,
    )?;
    let report = verify_regular_covering(&covering);
    Ok(CoverAnalysis {
        ambient,
        sub,
        covering,
        report,
    })
}
