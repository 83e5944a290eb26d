use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;

use super::matrix::CycMatrix;
use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};

/// Default bound on the number of elements produced by [`FiniteMatrixGroup::enumerate`].
pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element index in the class.
    pub representative: usize,
    /// Element indices, ascending.
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// A fully enumerated finite subgroup of `GL(m, Q(ζ_N))`.
///
/// Element 0 is the identity. Products and inverses are answered from a
/// precomputed Cayley table, so no cyclotomic arithmetic happens after
/// enumeration. Classes are ordered by their least element index.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    dim: usize,
    conductor: u32,
    elements: Vec<CycMatrix>,
    generators: Vec<usize>,
    mult: Vec<u32>,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    exponent: usize,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    power_map: Vec<Vec<usize>>,
    dets: Vec<CycElem>,
    lookup: HashMap<Vec<BigInt>, usize>,
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of `generators` under right multiplication.
    pub fn enumerate(generators: &[CycMatrix], max_order: usize) -> Result<FiniteMatrixGroup> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let dim = first.dim();
        let conductor = first.conductor();
        let mut gen_dets = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.conductor() != conductor {
                return Err(Error::ConductorMismatch {
                    expected: conductor,
                    found: g.conductor(),
                });
            }
            let d = g.det();
            if d.is_zero() {
                return Err(Error::NotInvertible { index: i });
            }
            gen_dets.push(d);
        }

        let identity = CycMatrix::identity(dim, conductor);
        let mut lookup = HashMap::new();
        lookup.insert(identity.key(), 0usize);
        let mut elements = vec![identity];
        let mut dets = vec![CycElem::one(conductor)];
        // (parent, generator) with element = parent · generator
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];

        let mut h = 0;
        while h < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let prod = elements[h].mul(g);
                let key = prod.key();
                let idx = match lookup.get(&key) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= max_order {
                            return Err(Error::GroupTooLarge { limit: max_order });
                        }
                        lookup.insert(key, i);
                        dets.push(&dets[h] * &gen_dets[s]);
                        elements.push(prod);
                        parent.push((h, s));
                        i
                    }
                };
                right[s].push(idx as u32);
            }
            h += 1;
        }

        let n = elements.len();
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            mult[a * n] = a as u32;
        }
        for b in 1..n {
            let (pb, s) = parent[b];
            for a in 0..n {
                let ap = mult[a * n + pb] as usize;
                mult[a * n + b] = right[s][ap];
            }
        }
        let gen_idx = generators.iter().map(|g| lookup[&g.key()]).collect();
        Ok(Self::from_parts(
            dim, conductor, elements, gen_idx, mult, dets, lookup,
        ))
    }

    /// Assemble a group from its elements and Cayley table and derive all
    /// class data.
    pub(crate) fn from_parts(
        dim: usize,
        conductor: u32,
        elements: Vec<CycMatrix>,
        generators: Vec<usize>,
        mult: Vec<u32>,
        dets: Vec<CycElem>,
        lookup: HashMap<Vec<BigInt>, usize>,
    ) -> FiniteMatrixGroup {
        let n = elements.len();
        debug_assert_eq!(mult.len(), n * n);
        let mut orders = vec![0usize; n];
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            let mut prev = 0usize;
            let mut cur = a;
            let mut k = 1;
            while cur != 0 {
                prev = cur;
                cur = mult[cur * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
            // a^{ord} = 1, so a^{ord-1} is the inverse
            inverse[a] = if a == 0 { 0 } else { prev };
        }
        let exponent = orders
            .iter()
            .fold(1usize, |acc, &o| num_integer::lcm(acc, o));

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = Vec::new();
            for g in 0..n {
                let y = mult[mult[inverse[g] * n + x] as usize * n + g] as usize;
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: x,
                elements: members,
            });
        }
        let inverse_class = classes
            .iter()
            .map(|c| class_of[inverse[c.representative]])
            .collect();
        let power_map = classes
            .iter()
            .map(|c| {
                let r = c.representative;
                let mut out = Vec::with_capacity(orders[r]);
                let mut cur = 0usize;
                for _ in 0..orders[r] {
                    out.push(class_of[cur]);
                    cur = mult[cur * n + r] as usize;
                }
                out
            })
            .collect();

        FiniteMatrixGroup {
            dim,
            conductor,
            elements,
            generators,
            mult,
            inverse,
            orders,
            exponent,
            classes,
            class_of,
            inverse_class,
            power_map,
            dets,
            lookup,
        }
    }

    /// The subgroup on the given ambient element indices, with its Cayley
    /// table read off the ambient one. Returns the inclusion map.
    pub(crate) fn subgroup_on(&self, indices: &[usize]) -> Result<(FiniteMatrixGroup, Vec<usize>)> {
        let mut incl: Vec<usize> = indices.to_vec();
        incl.sort_unstable();
        incl.dedup();
        if incl.first() != Some(&0) {
            return Err(Error::NotSubgroup);
        }
        let n = self.order();
        let mut back = vec![usize::MAX; n];
        for (i, &a) in incl.iter().enumerate() {
            back[a] = i;
        }
        let m = incl.len();
        let mut mult = vec![0u32; m * m];
        for (i, &a) in incl.iter().enumerate() {
            for (j, &b) in incl.iter().enumerate() {
                let c = back[self.mul(a, b)];
                if c == usize::MAX {
                    return Err(Error::NotSubgroup);
                }
                mult[i * m + j] = c as u32;
            }
        }
        let elements: Vec<CycMatrix> = incl.iter().map(|&a| self.elements[a].clone()).collect();
        let dets = incl.iter().map(|&a| self.dets[a].clone()).collect();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.key(), i))
            .collect();
        let generators = greedy_generators(m, |a, b| mult[a * m + b] as usize);
        Ok((
            Self::from_parts(
                self.dim,
                self.conductor,
                elements,
                generators,
                mult,
                dets,
                lookup,
            ),
            incl,
        ))
    }

    /// Same abstract group (same Cayley table and element order), new matrices.
    pub(crate) fn with_matrices(
        &self,
        elements: Vec<CycMatrix>,
        dets: Vec<CycElem>,
    ) -> FiniteMatrixGroup {
        let dim = elements[0].dim();
        let conductor = elements[0].conductor();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.key(), i))
            .collect();
        Self::from_parts(
            dim,
            conductor,
            elements,
            self.generators.clone(),
            self.mult.clone(),
            dets,
            lookup,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &CycMatrix {
        &self.elements[i]
    }

    /// Indices of a generating set.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_matrices(&self) -> Vec<CycMatrix> {
        self.generators
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k % self.orders[a]).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g^{-1} x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse[g], x), g)
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Class of inverses, per class.
    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    /// `power_map()[c][j]` is the class of `r^j` for the representative `r` of class `c`.
    pub fn power_map(&self) -> &[Vec<usize>] {
        &self.power_map
    }

    pub fn det(&self, a: usize) -> &CycElem {
        &self.dets[a]
    }

    pub fn dets(&self) -> &[CycElem] {
        &self.dets
    }

    pub fn is_special_linear(&self) -> bool {
        self.dets.iter().all(CycElem::is_one)
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    /// Index of a matrix in the group, if present. Matrices over a divisor
    /// of the group conductor are lifted first.
    pub fn find(&self, m: &CycMatrix) -> Option<usize> {
        if m.dim() != self.dim {
            return None;
        }
        if m.conductor() == self.conductor {
            return self.lookup.get(&m.key()).copied();
        }
        if self.conductor.is_multiple_of(m.conductor()) {
            return self.lookup.get(&m.lift(self.conductor).key()).copied();
        }
        let l = crate::cyclotomic::lcm(m.conductor(), self.conductor);
        let target = m.lift(l);
        self.elements.iter().position(|e| e.lift(l) == target)
    }

    /// Element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(h, g);
                if !seen[p] {
                    seen[p] = true;
                    out.push(p);
                    queue.push_back(p);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Deterministic generating set: scan elements in index order and keep
/// those outside the span of the ones kept so far.
fn greedy_generators(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0usize];
    for x in 1..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut queue: VecDeque<usize> = members.iter().copied().collect();
        while let Some(h) = queue.pop_front() {
            for &g in &gens {
                let p = mul(h, g);
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                    queue.push_back(p);
                }
            }
        }
    }
    if gens.is_empty() {
        gens.push(0);
    }
    gens
}
