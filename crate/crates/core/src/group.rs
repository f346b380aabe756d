//! Permutation groups backed by a base and strong generating set.
//!
//! The stabilizer chain is built with a deterministic (non-randomized)
//! Schreier–Sims so that repeated runs construct identical data. Groups
//! are immutable after construction; all queries are read-only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound for full element enumeration.
pub const DEFAULT_ENUM_BOUND: u64 = 1_000_000;

/// Maximum supported number of points.
pub const DEGREE_CAP: usize = 100_000;

/// One level of the stabilizer chain: a base point, its basic orbit and
/// a transversal mapping each orbit point to a group element carrying
/// the base point there.
#[derive(Clone, Debug)]
struct ChainLevel {
    base: usize,
    strong_gens: Vec<Permutation>,
    /// orbit[point] = Some(u) with base^u = point.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl ChainLevel {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        ChainLevel {
            base,
            strong_gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    /// Recomputes orbit and transversal under the given generators (all
    /// strong generators living at this level or deeper).
    fn recompute_orbit(&mut self, degree: usize, gens: &[Permutation]) {
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            i += 1;
            for g in gens {
                let q = g.image(p);
                if self.transversal[q].is_none() {
                    let rep = self.transversal[p].as_ref().unwrap().compose(g);
                    self.transversal[q] = Some(rep);
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// A finite permutation group with cached order and stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<ChainLevel>,
    order: u64,
}

impl PermutationGroup {
    /// Trivial group of the given degree (degree >= 1).
    pub fn trivial(degree: usize) -> Self {
        assert!((1..=DEGREE_CAP).contains(&degree));
        PermutationGroup {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
            order: 1,
        }
    }

    /// Builds the group generated by `gens` via deterministic
    /// Schreier–Sims. All generators must share one degree.
    pub fn from_generators(gens: Vec<Permutation>) -> Result<Self> {
        let degree = match gens.first() {
            None => return Ok(Self::trivial(1)),
            Some(g) => g.degree(),
        };
        if degree > DEGREE_CAP {
            return Err(Error::InvalidPermutation(format!(
                "degree {degree} exceeds cap {DEGREE_CAP}"
            )));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut group = PermutationGroup {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
            order: 1,
        };
        for g in &gens {
            group.extend_with(g.clone());
        }
        group.generators = gens.into_iter().filter(|g| !g.is_identity()).collect();
        group.order = group.chain_order();
        Ok(group)
    }

    /// Builds a group from generators with an explicit degree (allows a
    /// generator list that is empty or fixes the last points).
    pub fn from_generators_with_degree(gens: Vec<Permutation>, degree: usize) -> Result<Self> {
        if gens.is_empty() {
            return Ok(Self::trivial(degree));
        }
        let g = Self::from_generators(gens)?;
        debug_assert_eq!(g.degree, degree);
        Ok(g)
    }

    fn chain_order(&self) -> u64 {
        self.chain.iter().map(|lvl| lvl.orbit.len() as u64).product()
    }

    /// Sifts `g` through the chain; returns the residue and the level at
    /// which sifting stopped.
    fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.chain.iter().enumerate() {
            let p = h.image(lvl.base);
            match &lvl.transversal[p] {
                None => return (h, i),
                Some(u) => h = h.compose(&u.inverse()),
            }
        }
        (h, self.chain.len())
    }

    /// Incrementally extends the chain with a new element (classic
    /// deterministic Schreier–Sims insertion).
    fn extend_with(&mut self, g: Permutation) {
        let (residue, level) = self.sift(&g);
        if residue.is_identity() {
            return;
        }
        // New base point: smallest point moved by the residue.
        if level == self.chain.len() {
            let base = (0..self.degree)
                .find(|&p| residue.image(p) != p)
                .expect("non-identity residue moves a point");
            self.chain.push(ChainLevel::new(base, self.degree));
        }
        self.chain[level].strong_gens.push(residue);
        self.refresh_orbits(0);
        self.close_chain();
        self.order = self.chain_order();
    }

    /// Strong generators valid at level `i`: those stored at level `i`
    /// or deeper (they fix all earlier base points).
    fn gens_at(&self, level: usize) -> Vec<Permutation> {
        self.chain[level..]
            .iter()
            .flat_map(|lvl| lvl.strong_gens.iter().cloned())
            .collect()
    }

    fn refresh_orbits(&mut self, from: usize) {
        for i in from..self.chain.len() {
            let gens = self.gens_at(i);
            self.chain[i].recompute_orbit(self.degree, &gens);
        }
    }

    /// Verifies the Schreier condition at every level, inserting failing
    /// Schreier generators and restarting until the chain is stable.
    fn close_chain(&mut self) {
        'outer: loop {
            for lvl_idx in 0..self.chain.len() {
                let gens = self.gens_at(lvl_idx);
                let mut schreier: Vec<Permutation> = Vec::new();
                {
                    let lvl = &self.chain[lvl_idx];
                    for &p in &lvl.orbit {
                        let u = lvl.transversal[p].as_ref().unwrap();
                        for s in &gens {
                            let q = s.image(p);
                            let uq = lvl.transversal[q].as_ref().unwrap();
                            let gen = u.compose(s).compose(&uq.inverse());
                            if !gen.is_identity() {
                                schreier.push(gen);
                            }
                        }
                    }
                }
                let mut changed = false;
                for gen in schreier {
                    let (residue, rel_level) = self.sift_from(&gen, lvl_idx + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if rel_level == self.chain.len() {
                        let base = (0..self.degree)
                            .find(|&p| residue.image(p) != p)
                            .expect("non-identity residue moves a point");
                        self.chain.push(ChainLevel::new(base, self.degree));
                    }
                    self.chain[rel_level].strong_gens.push(residue);
                    self.refresh_orbits(0);
                    changed = true;
                }
                if changed {
                    continue 'outer;
                }
            }
            break;
        }
    }

    fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in start..self.chain.len() {
            let p = h.image(self.chain[i].base);
            match &self.chain[i].transversal[p] {
                None => return (h, i),
                Some(u) => h = h.compose(&u.inverse()),
            }
        }
        (h, self.chain.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        let (residue, _) = self.sift(g);
        Ok(residue.is_identity())
    }

    /// Streams every element exactly once (deterministic order), if the
    /// order is within `bound`.
    pub fn elements_bounded(&self, bound: u64) -> Result<ElementIter<'_>> {
        if self.order > bound {
            return Err(Error::TooLargeToEnumerate {
                order: self.order,
                bound,
            });
        }
        Ok(ElementIter::new(self))
    }

    pub fn elements(&self) -> Result<ElementIter<'_>> {
        self.elements_bounded(DEFAULT_ENUM_BOUND)
    }

    /// All elements collected into a vector, with an index map.
    pub fn element_index(&self, bound: u64) -> Result<ElementIndex> {
        let mut elements = Vec::with_capacity(self.order as usize);
        let mut index = HashMap::with_capacity(self.order as usize);
        for g in self.elements_bounded(bound)? {
            index.insert(g.clone(), elements.len() as u32);
            elements.push(g);
        }
        Ok(ElementIndex { elements, index })
    }

    /// Rebuilds the group from the same generators but inserting them in
    /// reverse order, which typically selects a different base. Used by
    /// determinism checks.
    pub fn rebuilt_reversed(&self) -> Result<PermutationGroup> {
        let mut gens = self.generators.clone();
        gens.reverse();
        if gens.is_empty() {
            return Ok(Self::trivial(self.degree));
        }
        Self::from_generators(gens)
    }

    /// True iff every generator of `h` lies in `self`.
    pub fn is_supergroup_of(&self, h: &PermutationGroup) -> Result<bool> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, h.degree));
        }
        for g in &h.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Group equality as sets of permutations.
    pub fn same_group_as(&self, other: &PermutationGroup) -> Result<bool> {
        Ok(self.order == other.order
            && self.is_supergroup_of(other)?
            && other.is_supergroup_of(self)?)
    }
}

/// Full element enumeration: depth-first product of the chain
/// transversals.
pub struct ElementIter<'a> {
    group: &'a PermutationGroup,
    counters: Vec<usize>,
    done: bool,
}

impl<'a> ElementIter<'a> {
    fn new(group: &'a PermutationGroup) -> Self {
        ElementIter {
            group,
            counters: vec![0; group.chain.len()],
            done: false,
        }
    }
}

impl Iterator for ElementIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut g = Permutation::identity(self.group.degree);
        for (i, lvl) in self.group.chain.iter().enumerate().rev() {
            let p = lvl.orbit[self.counters[i]];
            g = g.compose(lvl.transversal[p].as_ref().unwrap());
        }
        // Odometer increment.
        let mut i = self.counters.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counters[i] += 1;
            if self.counters[i] < self.group.chain[i].orbit.len() {
                break;
            }
            self.counters[i] = 0;
            if i == 0 {
                self.done = true;
                break;
            }
        }
        if self.counters.is_empty() {
            self.done = true;
        }
        Some(g)
    }
}

/// Elements of a group with a reverse lookup table.
#[derive(Debug, Clone)]
pub struct ElementIndex {
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, u32>,
}

impl ElementIndex {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, g: &Permutation) -> Option<u32> {
        self.index.get(g).copied()
    }
}
