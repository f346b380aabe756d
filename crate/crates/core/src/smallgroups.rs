//! Exhaustive generation of the isomorphism classes of groups of the
//! catalog orders (1..=32, 42, 81), used offline to produce the
//! committed catalog file.
//!
//! Every group of these orders is solvable and therefore a cyclic
//! extension of a normal subgroup N of prime index p: G = ⟨N, t⟩ with
//! t·y·t⁻¹ = α(y) for an automorphism α of N and t^p = z ∈ N subject
//! to α^p = conjugation by z and α(z) = z. Enumerating all (N, p, α, z)
//! and deduplicating up to isomorphism yields every isomorphism class;
//! the per-order class counts are validated against the published
//! totals.

use std::collections::HashMap;

use crate::perm::Permutation;
use crate::group::PermutationGroup;

/// A finite group as a Cayley table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableGroup {
    pub n: usize,
    /// mul[a * n + b] = a·b.
    pub mul: Vec<u8>,
}

impl TableGroup {
    pub fn trivial() -> Self {
        TableGroup { n: 1, mul: vec![0] }
    }

    #[inline]
    pub fn prod(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n).find(|&b| self.prod(a, b) == 0).unwrap()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut o = 1;
        while x != 0 {
            x = self.prod(x, a);
            o += 1;
        }
        o
    }

    /// Sanity check of the table axioms (used in tests and on the
    /// extension constructor in debug builds).
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        if self.mul.len() != n * n {
            return false;
        }
        for a in 0..n {
            if self.prod(0, a) != a || self.prod(a, 0) != a {
                return false;
            }
            // Latin square rows/columns.
            let mut seen_r = vec![false; n];
            let mut seen_c = vec![false; n];
            for b in 0..n {
                let r = self.prod(a, b);
                let c = self.prod(b, a);
                if seen_r[r] || seen_c[c] {
                    return false;
                }
                seen_r[r] = true;
                seen_c[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.prod(self.prod(a, b), c) != self.prod(a, self.prod(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgroup closure of a set of elements (indices).
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut list = vec![0usize];
        let mut frontier: Vec<usize> = Vec::new();
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                list.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            let snapshot: Vec<usize> = list.clone();
            for &y in &snapshot {
                for z in [self.prod(x, y), self.prod(y, x)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        list.push(z);
                        frontier.push(z);
                    }
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// A minimal-length generating sequence (greedy).
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = vec![0usize];
        while generated.len() < self.n {
            // Prefer a high-order element outside the current subgroup.
            let next = (0..self.n)
                .filter(|x| generated.binary_search(x).is_err())
                .max_by_key(|&x| self.element_order(x))
                .unwrap();
            gens.push(next);
            let mut seed = gens.clone();
            seed.extend(generated.iter().copied());
            generated = self.closure(&seed);
        }
        gens
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.prod(a, b) == self.prod(b, a)))
    }

    fn commutator(&self, a: usize, b: usize) -> usize {
        let ai = self.inverse(a);
        let bi = self.inverse(b);
        self.prod(self.prod(ai, bi), self.prod(a, b))
    }

    /// Lower central series reaches the trivial subgroup.
    pub fn is_nilpotent(&self) -> bool {
        let mut term: Vec<usize> = (0..self.n).collect();
        loop {
            let mut comms = Vec::new();
            for &a in &term {
                for b in 0..self.n {
                    let c = self.commutator(b, a);
                    if c != 0 {
                        comms.push(c);
                    }
                }
            }
            let next = self.closure(&comms);
            if next.len() == term.len() {
                return next.len() == 1;
            }
            if next.len() == 1 {
                return true;
            }
            term = next;
        }
    }

    pub fn exponent(&self) -> usize {
        (0..self.n)
            .map(|a| self.element_order(a))
            .fold(1usize, num_integer::lcm)
    }

    /// Regular permutation representation (left multiplication by a
    /// generating sequence).
    pub fn regular_representation(&self) -> PermutationGroup {
        let gens: Vec<Permutation> = self
            .generating_sequence()
            .iter()
            .map(|&g| {
                let images: Vec<u16> = (0..self.n).map(|x| self.prod(g, x) as u16).collect();
                Permutation::from_images(images).unwrap()
            })
            .collect();
        PermutationGroup::from_generators_with_degree(gens, self.n.max(1)).unwrap()
    }

    /// Cayley table of an enumerable permutation group.
    pub fn from_permutation_group(g: &PermutationGroup) -> TableGroup {
        let elements: Vec<Permutation> = {
            let mut v: Vec<Permutation> = g.elements().unwrap().collect();
            v.sort();
            v
        };
        let n = elements.len();
        debug_assert!(elements[0].is_identity());
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mul = vec![0u8; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mul[a * n + b] = index[&pa.compose(pb)] as u8;
            }
        }
        TableGroup { n, mul }
    }

    /// Cheap isomorphism invariant: order histogram and a few subgroup
    /// sizes.
    pub fn fingerprint(&self) -> Vec<u64> {
        let mut order_hist: HashMap<usize, u64> = HashMap::new();
        for a in 0..self.n {
            *order_hist.entry(self.element_order(a)).or_default() += 1;
        }
        let mut hist: Vec<(usize, u64)> = order_hist.into_iter().collect();
        hist.sort_unstable();
        let center = (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.prod(a, b) == self.prod(b, a)))
            .count();
        let derived = {
            let comms: Vec<usize> = (0..self.n)
                .flat_map(|a| (0..self.n).map(move |b| (a, b)))
                .map(|(a, b)| self.commutator(a, b))
                .filter(|&c| c != 0)
                .collect();
            self.closure(&comms).len()
        };
        // Conjugacy class size histogram.
        let mut class_of = vec![usize::MAX; self.n];
        let mut class_sizes: Vec<u64> = Vec::new();
        for a in 0..self.n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = class_sizes.len();
            let mut size = 0;
            for g in 0..self.n {
                let c = self.prod(self.prod(self.inverse(g), a), g);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    size += 1;
                }
            }
            class_sizes.push(size);
        }
        class_sizes.sort_unstable();
        let mut fp = vec![self.n as u64, center as u64, derived as u64, self.exponent() as u64];
        for (o, c) in hist {
            fp.push(o as u64);
            fp.push(c);
        }
        fp.extend(class_sizes);
        fp
    }

    fn element_invariant(&self, a: usize) -> (usize, usize, usize) {
        let order = self.element_order(a);
        let centralizer = (0..self.n)
            .filter(|&b| self.prod(a, b) == self.prod(b, a))
            .count();
        let square_roots = (0..self.n).filter(|&b| self.prod(b, b) == a).count();
        (order, centralizer, square_roots)
    }
}

/// All automorphisms of `g`, as permutations of element indices.
pub fn automorphisms(g: &TableGroup) -> Vec<Vec<u8>> {
    let gens = g.generating_sequence();
    let invariants: Vec<(usize, usize, usize)> =
        (0..g.n).map(|a| g.element_invariant(a)).collect();
    let mut out = Vec::new();
    let mut map = vec![u8::MAX; g.n];
    map[0] = 0;
    extend_homomorphism(g, g, &gens, &invariants, &invariants, &mut map, 0, &mut |m| {
        out.push(m.to_vec());
        false
    });
    out
}

/// Whether `g` and `h` are isomorphic.
pub fn isomorphic(g: &TableGroup, h: &TableGroup) -> bool {
    if g.n != h.n {
        return false;
    }
    if g.fingerprint() != h.fingerprint() {
        return false;
    }
    let gens = g.generating_sequence();
    let inv_g: Vec<(usize, usize, usize)> = (0..g.n).map(|a| g.element_invariant(a)).collect();
    let inv_h: Vec<(usize, usize, usize)> = (0..h.n).map(|a| h.element_invariant(a)).collect();
    let mut map = vec![u8::MAX; g.n];
    map[0] = 0;
    let mut found = false;
    extend_homomorphism(g, h, &gens, &inv_g, &inv_h, &mut map, 0, &mut |_| {
        found = true;
        true
    });
    found
}

/// Backtracking search for isomorphisms g → h determined by the images
/// of a generating sequence; `emit` returns true to stop the search.
#[allow(clippy::too_many_arguments)]
fn extend_homomorphism(
    g: &TableGroup,
    h: &TableGroup,
    gens: &[usize],
    inv_g: &[(usize, usize, usize)],
    inv_h: &[(usize, usize, usize)],
    map: &mut Vec<u8>,
    next_gen: usize,
    emit: &mut dyn FnMut(&[u8]) -> bool,
) -> bool {
    if next_gen == gens.len() {
        return emit(map);
    }
    let gen = gens[next_gen];
    let used: Vec<bool> = {
        let mut u = vec![false; h.n];
        for &m in map.iter() {
            if m != u8::MAX {
                u[m as usize] = true;
            }
        }
        u
    };
    for cand in 0..h.n {
        if used[cand] || inv_h[cand] != inv_g[gen] {
            continue;
        }
        let saved = map.clone();
        if close_partial_map(g, h, map, gen, cand)
            && extend_homomorphism(g, h, gens, inv_g, inv_h, map, next_gen + 1, emit)
        {
            return true;
        }
        *map = saved;
    }
    false
}

/// Add gen ↦ cand to the partial map and close it under products,
/// checking homomorphism consistency and injectivity.
fn close_partial_map(g: &TableGroup, h: &TableGroup, map: &mut [u8], gen: usize, cand: usize) -> bool {
    if map[gen] != u8::MAX {
        return map[gen] as usize == cand;
    }
    map[gen] = cand as u8;
    let mut known: Vec<usize> = (0..g.n).filter(|&x| map[x] != u8::MAX).collect();
    let mut image_used = vec![false; h.n];
    for &x in &known {
        let y = map[x] as usize;
        if image_used[y] {
            return false;
        }
        image_used[y] = true;
    }
    // Product closure with a simple worklist.
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = known.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let c = g.prod(a, b);
                let hc = h.prod(map[a] as usize, map[b] as usize);
                if map[c] == u8::MAX {
                    if image_used[hc] {
                        return false;
                    }
                    map[c] = hc as u8;
                    image_used[hc] = true;
                    known.push(c);
                    changed = true;
                } else if map[c] as usize != hc {
                    return false;
                }
            }
        }
    }
    true
}

/// The cyclic extension of `n_group` by C_p along (α, z): the group
/// ⟨N, t | t y t⁻¹ = α(y), t^p = z⟩ on pairs (x, i) = index i·|N| + x.
pub fn cyclic_extension(n_group: &TableGroup, p: usize, alpha: &[u8], z: usize) -> TableGroup {
    let m = n_group.n;
    let total = m * p;
    // Powers of α.
    let mut alpha_pows: Vec<Vec<u8>> = vec![(0..m as u8).collect()];
    for _ in 1..p {
        let prev = alpha_pows.last().unwrap();
        alpha_pows.push((0..m).map(|x| alpha[prev[x] as usize]).collect());
    }
    let mut mul = vec![0u8; total * total];
    for i in 0..p {
        for x in 0..m {
            let a = i * m + x;
            for j in 0..p {
                for y in 0..m {
                    let b = j * m + y;
                    let mut w = n_group.prod(x, alpha_pows[i][y] as usize);
                    if i + j >= p {
                        w = n_group.prod(w, z);
                    }
                    mul[a * total + b] = (((i + j) % p) * m + w) as u8;
                }
            }
        }
    }
    TableGroup { n: total, mul }
}

/// Valid (α, z) pairs for extending `n_group` by C_p: α^p equals
/// conjugation by z and α fixes z.
fn extension_data(n_group: &TableGroup, p: usize, auts: &[Vec<u8>]) -> Vec<(Vec<u8>, usize)> {
    let m = n_group.n;
    let mut out = Vec::new();
    for alpha in auts {
        // α^p as a map.
        let mut ap: Vec<u8> = (0..m as u8).collect();
        for _ in 0..p {
            ap = (0..m).map(|x| alpha[ap[x] as usize]).collect();
        }
        for z in 0..m {
            if alpha[z] as usize != z {
                continue;
            }
            let zi = n_group.inverse(z);
            // conjugation by z: y ↦ z y z⁻¹.
            let matches = (0..m).all(|y| {
                ap[y] as usize == n_group.prod(n_group.prod(z, y), zi)
            });
            if matches {
                out.push((alpha.clone(), z));
            }
        }
    }
    out
}

fn prime_divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Published numbers of isomorphism classes for the catalog orders.
pub fn known_group_count(order: usize) -> Option<usize> {
    const COUNTS_1_TO_32: [usize; 32] = [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1,
        4, 1, 51,
    ];
    match order {
        1..=32 => Some(COUNTS_1_TO_32[order - 1]),
        42 => Some(6),
        81 => Some(15),
        _ => None,
    }
}

/// All isomorphism classes of groups of the given order, built
/// recursively by cyclic extensions. `cache` maps order → classes.
pub fn groups_of_order(order: usize, cache: &mut HashMap<usize, Vec<TableGroup>>) -> Vec<TableGroup> {
    if let Some(v) = cache.get(&order) {
        return v.clone();
    }
    let result = if order == 1 {
        vec![TableGroup::trivial()]
    } else {
        let mut reps: Vec<TableGroup> = Vec::new();
        let mut fingerprints: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        for p in prime_divisors(order) {
            let sub = groups_of_order(order / p, cache);
            for n_group in &sub {
                let auts = automorphisms(n_group);
                for (alpha, z) in extension_data(n_group, p, &auts) {
                    let g = cyclic_extension(n_group, p, &alpha, z);
                    debug_assert!(g.is_valid());
                    let fp = g.fingerprint();
                    let bucket = fingerprints.entry(fp).or_default();
                    if bucket.iter().any(|&i| isomorphic(&reps[i], &g)) {
                        continue;
                    }
                    bucket.push(reps.len());
                    reps.push(g);
                }
            }
        }
        reps
    };
    if let Some(expected) = known_group_count(order) {
        assert_eq!(
            result.len(),
            expected,
            "class count for order {order} must match the published total"
        );
    }
    cache.insert(order, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> TableGroup {
        let mut mul = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((a + b) % n) as u8;
            }
        }
        TableGroup { n, mul }
    }

    #[test]
    fn cyclic_tables_are_valid() {
        for n in 1..=12 {
            let g = cyclic(n);
            assert!(g.is_valid());
            assert!(g.is_abelian());
            assert_eq!(g.exponent(), n);
        }
    }

    #[test]
    fn automorphism_counts_of_cyclic_groups() {
        // |Aut(Cn)| = φ(n).
        for (n, phi) in [(2, 1), (3, 2), (4, 2), (5, 4), (6, 2), (8, 4), (12, 4)] {
            assert_eq!(automorphisms(&cyclic(n)).len(), phi);
        }
    }

    #[test]
    fn extension_builds_dihedral() {
        let c4 = cyclic(4);
        let auts = automorphisms(&c4);
        // Inversion: x ↦ -x.
        let inv = auts
            .iter()
            .find(|a| a[1] == 3)
            .expect("C4 has the inversion automorphism");
        let d8 = cyclic_extension(&c4, 2, inv, 0);
        assert!(d8.is_valid());
        assert_eq!(d8.n, 8);
        assert!(!d8.is_abelian());
        assert_eq!(d8.exponent(), 4);
        // Q8: same α but t² = the involution of C4.
        let q8 = cyclic_extension(&c4, 2, inv, 2);
        assert!(q8.is_valid());
        assert!(!isomorphic(&d8, &q8));
        assert_eq!(
            (0..8).filter(|&x| q8.element_order(x) == 2).count(),
            1,
            "Q8 has a unique involution"
        );
    }

    #[test]
    fn isomorphism_detects_cyclic_vs_klein() {
        let c4 = cyclic(4);
        let klein = {
            let c2 = cyclic(2);
            let id = vec![0u8, 1];
            cyclic_extension(&c2, 2, &id, 0)
        };
        assert!(!isomorphic(&c4, &klein));
        assert!(isomorphic(&c4, &c4));
        // C4 from extension of C2 by t² = generator.
        let c4b = {
            let c2 = cyclic(2);
            let id = vec![0u8, 1];
            cyclic_extension(&c2, 2, &id, 1)
        };
        assert!(isomorphic(&c4, &c4b));
    }

    #[test]
    fn group_counts_up_to_sixteen() {
        let mut cache = HashMap::new();
        for order in 1..=16 {
            let groups = groups_of_order(order, &mut cache);
            assert_eq!(groups.len(), known_group_count(order).unwrap(), "order {order}");
        }
    }

    #[test]
    fn regular_representation_round_trip() {
        let mut cache = HashMap::new();
        for g in groups_of_order(12, &mut cache) {
            let pg = g.regular_representation();
            assert_eq!(pg.order(), 12);
            let back = TableGroup::from_permutation_group(&pg);
            assert!(isomorphic(&g, &back));
        }
    }

    #[test]
    fn nilpotency_on_tables() {
        let mut cache = HashMap::new();
        // All order-8 groups are nilpotent; S3 is not.
        for g in groups_of_order(8, &mut cache) {
            assert!(g.is_nilpotent());
        }
        let s3 = groups_of_order(6, &mut cache)
            .into_iter()
            .find(|g| !g.is_abelian())
            .unwrap();
        assert!(!s3.is_nilpotent());
    }
}
