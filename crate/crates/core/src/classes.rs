//! Conjugacy classes and power maps.
//!
//! Classes are computed by full-orbit partitioning of the enumerated
//! group under conjugation by the generators. Representatives are the
//! lexicographically minimal elements of their classes; classes are
//! ordered by (representative order, representative image vector) with
//! the identity first.

use crate::error::{Error, Result};
use crate::group::{ElementIndex, PermutationGroup, DEFAULT_ENUM_BOUND};
use crate::perm::Permutation;

/// Partition of a group into conjugacy classes with element resolution.
#[derive(Debug, Clone)]
pub struct ConjugacyClassTable {
    group: PermutationGroup,
    reps: Vec<Permutation>,
    sizes: Vec<u64>,
    rep_orders: Vec<u64>,
    elements: ElementIndex,
    class_id: Vec<u32>,
}

impl ConjugacyClassTable {
    pub fn new(group: &PermutationGroup) -> Result<Self> {
        Self::with_bound(group, DEFAULT_ENUM_BOUND)
    }

    pub fn with_bound(group: &PermutationGroup, bound: u64) -> Result<Self> {
        let elements = group.element_index(bound)?;
        let n = elements.len();
        let gens: Vec<Permutation> = group.generators().to_vec();
        let mut class_of = vec![u32::MAX; n];
        // (min representative, member list) per raw class, later reordered.
        let mut raw: Vec<(Permutation, Vec<u32>)> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = raw.len() as u32;
            let mut members = vec![start as u32];
            let mut min_rep = elements.elements[start].clone();
            class_of[start] = cid;
            let mut head = 0;
            while head < members.len() {
                let x = elements.elements[members[head] as usize].clone();
                head += 1;
                for s in &gens {
                    let y = x.conjugate(s);
                    let yi = elements.position(&y).expect("closure") as usize;
                    if class_of[yi] == u32::MAX {
                        class_of[yi] = cid;
                        if y < min_rep {
                            min_rep = y.clone();
                        }
                        members.push(yi as u32);
                    }
                }
            }
            raw.push((min_rep, members));
        }
        // Deterministic class order: identity first, then by
        // (representative order, representative images).
        let mut order_keys: Vec<(u64, usize)> = raw
            .iter()
            .enumerate()
            .map(|(i, (rep, _))| (rep.order(), i))
            .collect();
        order_keys.sort_by(|a, b| {
            (a.0, &raw[a.1].0)
                .cmp(&(b.0, &raw[b.1].0))
        });
        let mut reps = Vec::with_capacity(raw.len());
        let mut sizes = Vec::with_capacity(raw.len());
        let mut rep_orders = Vec::with_capacity(raw.len());
        let mut class_id = vec![0u32; n];
        for (new_id, &(ord, old_id)) in order_keys.iter().enumerate() {
            let (rep, members) = &raw[old_id];
            reps.push(rep.clone());
            sizes.push(members.len() as u64);
            rep_orders.push(ord);
            for &m in members {
                class_id[m as usize] = new_id as u32;
            }
        }
        debug_assert!(reps[0].is_identity());
        Ok(ConjugacyClassTable {
            group: group.clone(),
            reps,
            sizes,
            rep_orders,
            elements,
            class_id,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn n_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }

    /// Class index of an element of the group.
    pub fn index_of(&self, g: &Permutation) -> Result<usize> {
        match self.elements.position(g) {
            Some(i) => Ok(self.class_id[i as usize] as usize),
            None => Err(Error::NotAMember(g.to_string())),
        }
    }

    /// All elements together with their class index.
    pub fn elements_with_class(&self) -> impl Iterator<Item = (&Permutation, usize)> {
        self.elements
            .elements
            .iter()
            .zip(self.class_id.iter().map(|&c| c as usize))
    }

    /// Exponent of the group: lcm of representative orders.
    pub fn exponent(&self) -> u64 {
        self.rep_orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Index of the class of inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.index_of(&self.reps[i].inverse()).expect("closure")
    }
}

/// Classes of powers of class representatives.
///
/// `full[i][l]` is the class of `reps[i]^l` for `0 <= l < rep_orders[i]`.
#[derive(Debug, Clone)]
pub struct PowerMap {
    rep_orders: Vec<u64>,
    full: Vec<Vec<u32>>,
}

impl PowerMap {
    pub fn new(table: &ConjugacyClassTable) -> Self {
        let mut full = Vec::with_capacity(table.n_classes());
        for (i, rep) in table.reps().iter().enumerate() {
            let o = table.rep_orders()[i];
            let mut row = Vec::with_capacity(o as usize);
            let mut p = Permutation::identity(rep.degree());
            for _ in 0..o {
                row.push(table.index_of(&p).expect("closure") as u32);
                p = p.compose(rep);
            }
            full.push(row);
        }
        PowerMap {
            rep_orders: table.rep_orders().to_vec(),
            full,
        }
    }

    /// Class of `reps[i]^l` for any integer `l`.
    pub fn power_class(&self, i: usize, l: i64) -> usize {
        let o = self.rep_orders[i] as i64;
        let l = l.rem_euclid(o);
        self.full[i][l as usize] as usize
    }

    /// Class of `reps[i]^j` for `j` coprime to the representative order.
    pub fn class_of_power(&self, i: usize, j: u64) -> usize {
        debug_assert_eq!(num_integer::gcd(j, self.rep_orders[i]), 1);
        self.power_class(i, j as i64)
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermutationGroup;
    use crate::perm::Permutation;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    fn group(gens: &[(&str, usize)]) -> PermutationGroup {
        let perms: Vec<_> = gens.iter().map(|&(t, d)| p(t, d)).collect();
        PermutationGroup::from_generators(perms).unwrap()
    }

    /// Independent oracle: class of x as {x^g : g in G} by brute force.
    fn brute_class(g: &PermutationGroup, x: &Permutation) -> Vec<Permutation> {
        let mut class: Vec<Permutation> = g
            .elements()
            .unwrap()
            .map(|h| x.conjugate(&h))
            .collect();
        class.sort();
        class.dedup();
        class
    }

    #[test]
    fn s3_three_classes() {
        let g = group(&[("(1,2)", 3), ("(1,2,3)", 3)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        assert_eq!(t.n_classes(), 3);
        let mut sizes = t.sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(t.sizes()[0], 1);
        // Cross-check sizes against the brute-force oracle.
        for (i, rep) in t.reps().iter().enumerate() {
            assert_eq!(brute_class(&g, rep).len() as u64, t.sizes()[i]);
        }
    }

    #[test]
    fn c4_singletons() {
        let g = group(&[("(1,2,3,4)", 4)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        assert_eq!(t.n_classes(), 4);
        assert!(t.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn a5_class_sizes() {
        let g = group(&[("(1,2,3,4,5)", 5), ("(3,4,5)", 5)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        assert_eq!(t.n_classes(), 5);
        let mut sizes = t.sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(t.sizes().iter().sum::<u64>(), 60);
    }

    #[test]
    fn conjugation_invariance_of_index() {
        let g = group(&[("(1,2,3,4)", 4), ("(1,3)", 4)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        let elems: Vec<_> = g.elements().unwrap().collect();
        for x in elems.iter() {
            let i = t.index_of(x).unwrap();
            for h in elems.iter() {
                assert_eq!(t.index_of(&x.conjugate(h)).unwrap(), i);
            }
        }
    }

    #[test]
    fn power_map_identity_and_composition() {
        let g = group(&[("(1,2,3,4,5)", 5), ("(3,4,5)", 5)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        let pm = PowerMap::new(&t);
        for i in 0..t.n_classes() {
            assert_eq!(pm.class_of_power(i, 1), i);
            let o = t.rep_orders()[i];
            for j in 1..o {
                if num_integer::gcd(j, o) != 1 {
                    continue;
                }
                for j2 in 1..o {
                    if num_integer::gcd(j2, o) != 1 {
                        continue;
                    }
                    let a = pm.class_of_power(pm.class_of_power(i, j), j2);
                    // Note rep_orders of the power class equal o for coprime powers.
                    let b = pm.class_of_power(i, (j * j2) % o);
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn a5_five_cycle_squares_to_other_class() {
        let g = group(&[("(1,2,3,4,5)", 5), ("(3,4,5)", 5)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        let pm = PowerMap::new(&t);
        let five: Vec<usize> = (0..t.n_classes())
            .filter(|&i| t.rep_orders()[i] == 5)
            .collect();
        assert_eq!(five.len(), 2);
        assert_eq!(pm.class_of_power(five[0], 2), five[1]);
        assert_eq!(pm.class_of_power(five[1], 2), five[0]);
    }

    #[test]
    fn c4_generator_cubed_is_inverse_class() {
        let g = group(&[("(1,2,3,4)", 4)]);
        let t = ConjugacyClassTable::new(&g).unwrap();
        let pm = PowerMap::new(&t);
        let gen_class = (0..4).find(|&i| t.rep_orders()[i] == 4).unwrap();
        let cube = pm.class_of_power(gen_class, 3);
        assert_ne!(cube, gen_class);
        assert_eq!(cube, t.inverse_class(gen_class));
    }

    #[test]
    fn class_equation() {
        for gens in [
            vec![("(1,2,3,4,5,6,7,8)", 8), ("(1,2)", 8)],
            vec![("(1,2,3,4,5)", 5), ("(3,4,5)", 5)],
        ] {
            let g = group(&gens);
            let t = ConjugacyClassTable::new(&g).unwrap();
            assert_eq!(t.sizes().iter().sum::<u64>(), g.order());
            for &s in t.sizes() {
                assert_eq!(g.order() % s, 0);
            }
        }
    }
}
