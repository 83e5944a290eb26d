use std::sync::Arc;

use super::group::FiniteMatrixGroup;
use super::matrix::CycMatrix;
use crate::error::{Error, Result};

/// A normal subgroup `L ◁ G` together with the index and class maps that
/// relate it to the ambient group.
#[derive(Clone, Debug)]
pub struct NormalEmbedding {
    pub ambient: Arc<FiniteMatrixGroup>,
    pub sub: Arc<FiniteMatrixGroup>,
    /// Sub element index → ambient element index.
    pub inclusion: Vec<usize>,
    /// Sub class index → ambient class index.
    pub fusion: Vec<usize>,
}

impl NormalEmbedding {
    /// The subgroup on a set of ambient element indices. Fails unless the
    /// set is a subgroup and is stable under conjugation.
    pub fn from_indices(
        ambient: Arc<FiniteMatrixGroup>,
        indices: &[usize],
    ) -> Result<NormalEmbedding> {
        let (sub, inclusion) = ambient.subgroup_on(indices)?;
        let mut member = vec![false; ambient.order()];
        for &a in &inclusion {
            member[a] = true;
        }
        for &g in ambient.generators() {
            if inclusion.iter().any(|&x| !member[ambient.conjugate(x, g)]) {
                return Err(Error::NotNormal);
            }
        }
        let fusion = sub
            .classes()
            .iter()
            .map(|c| ambient.class_of(inclusion[c.representative]))
            .collect();
        Ok(NormalEmbedding {
            ambient,
            sub: Arc::new(sub),
            inclusion,
            fusion,
        })
    }

    /// Normal closure is not taken: the generated subgroup must already be normal.
    pub fn generated_by(
        ambient: Arc<FiniteMatrixGroup>,
        gens: &[usize],
    ) -> Result<NormalEmbedding> {
        let idx = ambient.closure(gens);
        Self::from_indices(ambient, &idx)
    }

    /// Locate matrices inside the ambient group and take the subgroup they generate.
    pub fn locate(ambient: Arc<FiniteMatrixGroup>, gens: &[CycMatrix]) -> Result<NormalEmbedding> {
        let idx = gens
            .iter()
            .map(|g| ambient.find(g).ok_or(Error::ElementNotFound))
            .collect::<Result<Vec<_>>>()?;
        Self::generated_by(ambient, &idx)
    }

    pub fn whole(ambient: Arc<FiniteMatrixGroup>) -> NormalEmbedding {
        let idx: Vec<usize> = (0..ambient.order()).collect();
        Self::from_indices(ambient, &idx).expect("a group is normal in itself")
    }

    pub fn trivial(ambient: Arc<FiniteMatrixGroup>) -> NormalEmbedding {
        Self::from_indices(ambient, &[0]).expect("the trivial subgroup is normal")
    }

    pub fn center(ambient: Arc<FiniteMatrixGroup>) -> NormalEmbedding {
        let idx: Vec<usize> = ambient
            .classes()
            .iter()
            .filter(|c| c.size() == 1)
            .map(|c| c.representative)
            .collect();
        Self::from_indices(ambient, &idx).expect("the center is a normal subgroup")
    }

    /// Sub class → ambient class.
    pub fn class_fusion(&self) -> &[usize] {
        &self.fusion
    }

    /// Re-checks that the inclusion image is stable under conjugation.
    pub fn is_normal(&self) -> bool {
        let g = &self.ambient;
        let mut member = vec![false; g.order()];
        for &a in &self.inclusion {
            member[a] = true;
        }
        g.generators()
            .iter()
            .all(|&h| self.inclusion.iter().all(|&x| member[g.conjugate(x, h)]))
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.sub.order()
    }
}

/// `N = G ∩ SL(m)`, the kernel of the determinant.
pub fn sl_kernel(g: &Arc<FiniteMatrixGroup>) -> NormalEmbedding {
    let idx: Vec<usize> = (0..g.order()).filter(|&a| g.det(a).is_one()).collect();
    NormalEmbedding::from_indices(g.clone(), &idx)
        .expect("the determinant kernel is a normal subgroup")
}

/// Order `r` of `G/L` and the least element index whose coset generates it.
pub fn cyclic_quotient(emb: &NormalEmbedding) -> Result<(usize, usize)> {
    let g = &emb.ambient;
    let r = emb.index();
    let mut in_sub = vec![false; g.order()];
    for &a in &emb.inclusion {
        in_sub[a] = true;
    }
    // order of the coset aL is the least j with a^j ∈ L
    let coset_order = |a: usize| {
        let mut cur = a;
        let mut j = 1;
        while !in_sub[cur] {
            cur = g.mul(cur, a);
            j += 1;
        }
        j
    };
    (0..g.order())
        .find(|&a| coset_order(a) == r)
        .map(|a| (r, a))
        .ok_or(Error::QuotientNotCyclic { order: r })
}
