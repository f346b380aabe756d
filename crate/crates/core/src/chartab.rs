//! Exact irreducible character tables by the Dixon–Schneider method,
//! the Galois action on characters, character fields, and the
//! character-side cut criterion.
//!
//! The table is computed over a prime field F_p with p ≡ 1 (mod e)
//! and p > 2√|G| (e the group exponent): the class matrices are
//! simultaneously diagonalized over F_p, degrees are recovered from
//! the scaled eigenvectors, and the values are lifted to exact
//! cyclotomic numbers through a character-sum inversion. Everything is
//! integer arithmetic; results are bit-identical across runs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::classes::{ConjugacyClassTable, PowerMap};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::rationality::quadratic_discriminant_of;

/// Upper bound of the search for the working prime.
const PRIME_SEARCH_BOUND: u64 = 100_000_000;

// ---------------------------------------------------------------
// Arithmetic in F_p.

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p ≡ 1 (mod e) with p > 2√|G|.
fn working_prime(e: u64, order: u64) -> Result<u64> {
    let min = {
        // Smallest integer strictly above 2√order.
        let mut m = 2 * (order as f64).sqrt().floor() as u64;
        while m * m <= 4 * order {
            m += 1;
        }
        m
    };
    let mut p = e + 1;
    while p <= PRIME_SEARCH_BOUND {
        if p >= min && is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::NoModulusPrime { e, min })
}

fn factor(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

fn primitive_root(p: u64) -> u64 {
    let primes = factor(p - 1);
    (2..p)
        .find(|&g| primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

// ---------------------------------------------------------------
// Class algebra.

/// Class multiplication coefficients a[i][j][k] =
/// #{(x, y) ∈ C_i × C_j : xy = z_k} for the fixed representative z_k.
pub fn class_multiplication_coefficients(table: &ConjugacyClassTable) -> Vec<Vec<Vec<u64>>> {
    let k = table.n_classes();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (kk, z) in table.reps().iter().enumerate() {
        for (x, ci) in table.elements_with_class() {
            // y = x^{-1} z ranges over the unique completion of xy = z.
            let y = x.inverse().compose(z);
            let cj = table.index_of(&y).expect("closed");
            a[ci][cj][kk] += 1;
        }
    }
    a
}

// ---------------------------------------------------------------
// Linear algebra over F_p.

/// Characteristic polynomial (monic, low degree first) via reduction
/// to upper Hessenberg form and the standard determinant recurrence.
fn char_poly(mut m: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = m.len();
    // Similarity reduction to Hessenberg form.
    for c in 0..n.saturating_sub(2) {
        if let Some(r) = (c + 1..n).find(|&r| m[r][c] != 0) {
            m.swap(r, c + 1);
            for row in m.iter_mut() {
                row.swap(r, c + 1);
            }
            let inv = inv_mod(m[c + 1][c], p);
            for r2 in c + 2..n {
                if m[r2][c] != 0 {
                    let f = mul_mod(m[r2][c], inv, p);
                    for c2 in 0..n {
                        let t = mul_mod(f, m[c + 1][c2], p);
                        m[r2][c2] = (m[r2][c2] + p - t) % p;
                    }
                    // Column counterpart of the row operation.
                    for r3 in 0..n {
                        let t = mul_mod(f, m[r3][r2], p);
                        m[r3][c + 1] = (m[r3][c + 1] + t) % p;
                    }
                }
            }
        }
    }
    // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
    //          - Σ_i h[i][m-1] (Π_{j>i} h[j][j-1]) p_i(x).
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for mm in 1..=n {
        let mut next = vec![0u64; mm + 1];
        // (x - h) * p_{m-1}
        let prev = &polys[mm - 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            let t = mul_mod(m[mm - 1][mm - 1], c, p);
            next[d] = (next[d] + p - t) % p;
        }
        let mut sub_prod = 1u64;
        for i in (0..mm.saturating_sub(1)).rev() {
            sub_prod = mul_mod(sub_prod, m[i + 1][i], p);
            let f = mul_mod(m[i][mm - 1], sub_prod, p);
            if f != 0 {
                for (d, &c) in polys[i].iter().enumerate() {
                    let t = mul_mod(f, c, p);
                    next[d] = (next[d] + p - t) % p;
                }
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = (mul_mod(acc, x, p) + c) % p;
    }
    acc
}

/// Basis of the nullspace of `m` over F_p.
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0;
    for c in 0..cols {
        if let Some(r) = (rank..rows).find(|&r| m[r][c] != 0) {
            m.swap(rank, r);
            let inv = inv_mod(m[rank][c], p);
            for v in m[rank].iter_mut() {
                *v = mul_mod(*v, inv, p);
            }
            for r2 in 0..rows {
                if r2 != rank && m[r2][c] != 0 {
                    let f = m[r2][c];
                    for c2 in 0..cols {
                        let t = mul_mod(f, m[rank][c2], p);
                        m[r2][c2] = (m[r2][c2] + p - t) % p;
                    }
                }
            }
            pivot_of_col[c] = Some(rank);
            rank += 1;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for c in 0..cols {
            if let Some(r) = pivot_of_col[c] {
                v[c] = (p - m[r][free]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------
// The table.

#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: ConjugacyClassTable,
    power_map: PowerMap,
    exponent: u64,
    /// Rows sorted by (degree, value vector); values indexed by class.
    chars: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    modulus: u64,
}

impl CharacterTable {
    pub fn new(group: &PermutationGroup) -> Result<Self> {
        let classes = ConjugacyClassTable::new(group)?;
        Self::from_classes(classes)
    }

    pub fn with_bound(group: &PermutationGroup, bound: u64) -> Result<Self> {
        let classes = ConjugacyClassTable::with_bound(group, bound)?;
        Self::from_classes(classes)
    }

    pub fn from_classes(classes: ConjugacyClassTable) -> Result<Self> {
        let k = classes.n_classes();
        let order = classes.group().order();
        let e = classes.exponent();
        let p = working_prime(e, order)?;
        let power_map = PowerMap::new(&classes);
        let a = class_multiplication_coefficients(&classes);

        // Simultaneously diagonalize the class matrices
        // (M_i)_{j,k} = a[i][j][k]: split common eigenspaces.
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
            .map(|j| {
                let mut v = vec![0u64; k];
                v[j] = 1;
                v
            })
            .collect()];
        for i in 1..k {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let m_i: Vec<Vec<u64>> = (0..k)
                .map(|j| (0..k).map(|kk| a[i][j][kk] % p).collect())
                .collect();
            let mut next_spaces = Vec::new();
            for basis in spaces {
                if basis.len() == 1 {
                    next_spaces.push(basis);
                    continue;
                }
                next_spaces.extend(split_space(&m_i, basis, p));
            }
            spaces = next_spaces;
        }
        if spaces.iter().any(|s| s.len() != 1) {
            return Err(Error::SplitFailure);
        }

        // Central characters w with w[identity] = 1.
        let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(k);
        let sizes = classes.sizes();
        let z = primitive_root(p);
        for space in spaces {
            let v = &space[0];
            debug_assert_ne!(v[0], 0, "central character is 1 at the identity");
            let inv0 = inv_mod(v[0], p);
            let w: Vec<u64> = v.iter().map(|&x| mul_mod(x, inv0, p)).collect();

            // χ(1)^2 = |G| / Σ_j w_j w_{j*} / |C_j|  (mod p); the true
            // degree is the unique square root ≤ √|G| since p > 2√|G|.
            let mut s = 0u64;
            for j in 0..k {
                let jj = classes.inverse_class(j);
                let t = mul_mod(w[j], w[jj], p);
                s = (s + mul_mod(t, inv_mod(sizes[j] % p, p), p)) % p;
            }
            let deg_sq = mul_mod(order % p, inv_mod(s, p), p);
            let mut degree = 0u64;
            let mut d = 1u64;
            while d * d <= order {
                if mul_mod(d, d, p) == deg_sq {
                    degree = d;
                    break;
                }
                d += 1;
            }
            assert!(degree > 0, "degree recovery must succeed");

            // χ(g_j) mod p, then exact lift class by class.
            let chi_p: Vec<u64> = (0..k)
                .map(|j| mul_mod(mul_mod(w[j], degree, p), inv_mod(sizes[j] % p, p), p))
                .collect();
            let mut values = Vec::with_capacity(k);
            for j in 0..k {
                let o = classes.rep_orders()[j];
                // m_r = (1/o) Σ_l χ(g^l) θ^{-lr}, θ = z^{(p-1)/o}; each
                // m_r is the multiplicity of ζ_o^r, an integer in
                // [0, χ(1)] < p, so the lift is exact.
                let theta = pow_mod(z, (p - 1) / o, p);
                let theta_inv = inv_mod(theta, p);
                let o_inv = inv_mod(o % p, p);
                let mut terms = Vec::new();
                for r in 0..o {
                    let mut acc = 0u64;
                    let step = pow_mod(theta_inv, r, p);
                    let mut factor = 1u64;
                    for l in 0..o {
                        let cl = power_map.power_class(j, l as i64);
                        acc = (acc + mul_mod(chi_p[cl], factor, p)) % p;
                        factor = mul_mod(factor, step, p);
                    }
                    let m_r = mul_mod(acc, o_inv, p);
                    debug_assert!(m_r <= degree);
                    if m_r != 0 {
                        terms.push((r, BigRational::from_integer(BigInt::from(m_r))));
                    }
                }
                values.push(Cyclotomic::from_powers(o, terms));
            }
            debug_assert_eq!(
                values[0].as_rational(),
                Some(BigRational::from_integer(BigInt::from(degree)))
            );
            rows.push((degree, values));
        }

        rows.sort();
        let degrees: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
        let chars: Vec<Vec<Cyclotomic>> = rows.into_iter().map(|(_, v)| v).collect();
        debug_assert_eq!(
            degrees.iter().map(|d| d * d).sum::<u64>(),
            order,
            "degree squares sum to the group order"
        );
        Ok(CharacterTable {
            classes,
            power_map,
            exponent: e,
            chars,
            degrees,
            modulus: p,
        })
    }

    pub fn classes(&self) -> &ConjugacyClassTable {
        &self.classes
    }

    pub fn power_map(&self) -> &PowerMap {
        &self.power_map
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn n_chars(&self) -> usize {
        self.chars.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.chars[row][class]
    }

    pub fn row(&self, row: usize) -> &[Cyclotomic] {
        &self.chars[row]
    }

    /// The prime modulus the table was computed over (documentation of
    /// the deterministic choice).
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The row of χ^{σ_j} (values at g are values of χ at g^j), which
    /// must itself be in the table.
    pub fn galois_conjugate_row(&self, row: usize, j: u64) -> Option<usize> {
        let image: Vec<Cyclotomic> = (0..self.classes.n_classes())
            .map(|i| self.chars[row][self.power_map.class_of_power(i, j % self.exponent)].clone())
            .collect();
        self.chars.iter().position(|r| *r == image)
    }
}

/// Split an invariant subspace into eigenspaces of `m` restricted to
/// it. `basis` vectors live in the ambient coordinates.
fn split_space(m: &[Vec<u64>], basis: Vec<Vec<u64>>, p: u64) -> Vec<Vec<Vec<u64>>> {
    let dim = basis.len();
    let n = m.len();
    // Images of the basis vectors.
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..n)
                .map(|r| {
                    let mut acc = 0u64;
                    for c in 0..n {
                        if b[c] != 0 && m[r][c] != 0 {
                            acc = (acc + mul_mod(m[r][c], b[c], p)) % p;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    // Solve B·R = images to get the restriction R in basis coordinates
    // (B has the basis vectors as columns).
    let mut aug: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[r]).collect();
            row.extend(images.iter().map(|im| im[r]));
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut rank = 0;
    for c in 0..dim {
        let r = (rank..n).find(|&r| aug[r][c] != 0).expect("basis is independent");
        aug.swap(rank, r);
        let inv = inv_mod(aug[rank][c], p);
        for v in aug[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for r2 in 0..n {
            if r2 != rank && aug[r2][c] != 0 {
                let f = aug[r2][c];
                for c2 in 0..2 * dim {
                    let t = mul_mod(f, aug[rank][c2], p);
                    aug[r2][c2] = (aug[r2][c2] + p - t) % p;
                }
            }
        }
        pivot_rows.push(rank);
        rank += 1;
    }
    // R[s][t]: coefficient of basis[s] in the image of basis[t].
    let restriction: Vec<Vec<u64>> = (0..dim)
        .map(|s| (0..dim).map(|t| aug[pivot_rows[s]][dim + t]).collect())
        .collect();

    let poly = char_poly(restriction.clone(), p);
    let mut out = Vec::new();
    for lambda in 0..p {
        if poly_eval(&poly, lambda, p) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| {
                        let v = restriction[r][c];
                        if r == c {
                            (v + p - lambda) % p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let null = nullspace(shifted, p);
        if null.is_empty() {
            continue;
        }
        // Map eigenvectors back to ambient coordinates.
        let sub: Vec<Vec<u64>> = null
            .iter()
            .map(|coeffs| {
                let mut v = vec![0u64; n];
                for (t, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        for (r, item) in v.iter_mut().enumerate() {
                            *item = (*item + mul_mod(c, basis[t][r], p)) % p;
                        }
                    }
                }
                v
            })
            .collect();
        out.push(sub);
    }
    debug_assert_eq!(out.iter().map(|s| s.len()).sum::<usize>(), dim);
    out
}

// ---------------------------------------------------------------
// Character fields.

/// Field data of one character row, mirroring the element descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterFieldDescriptor {
    /// Sorted residues j mod e with χ^{σ_j} = χ.
    pub stabilizer: Vec<u64>,
    pub degree: u64,
    pub is_real: bool,
    pub is_rational: bool,
    pub is_imaginary_quadratic: bool,
    pub discriminant: Option<i64>,
}

/// Descriptor of row `r`, evaluated through the power map.
pub fn character_field(table: &CharacterTable, r: usize) -> CharacterFieldDescriptor {
    let e = table.exponent();
    let k = table.classes().n_classes();
    let units: Vec<u64> = (1..e.max(2)).filter(|j| j.gcd(&e) == 1).collect();
    let stabilizer: Vec<u64> = units
        .iter()
        .copied()
        .filter(|&j| {
            (0..k).all(|i| {
                table.value(r, table.power_map().class_of_power(i, j % e)) == table.value(r, i)
            })
        })
        .collect();
    let degree = (units.len() / stabilizer.len()) as u64;
    let minus_one = (e.max(2) - 1) % e.max(2);
    let is_real = e <= 2 || stabilizer.binary_search(&minus_one).is_ok();
    let is_rational = degree == 1;
    let is_imaginary_quadratic = degree == 2 && !is_real;
    let discriminant = if degree == 2 {
        Some(quadratic_discriminant_of(&stabilizer, e).expect("index is 2"))
    } else {
        None
    };
    CharacterFieldDescriptor {
        stabilizer,
        degree,
        is_real,
        is_rational,
        is_imaginary_quadratic,
        discriminant,
    }
}

/// Cut criterion on the character side: every Q(χ) is Q or an
/// imaginary quadratic field.
pub fn is_cut_by_characters(table: &CharacterTable) -> bool {
    (0..table.n_chars()).all(|r| {
        let d = character_field(table, r);
        d.is_rational || d.is_imaginary_quadratic
    })
}

pub fn count_rational_characters(table: &CharacterTable) -> usize {
    (0..table.n_chars())
        .filter(|&r| character_field(table, r).is_rational)
        .count()
}

pub fn count_real_characters(table: &CharacterTable) -> usize {
    (0..table.n_chars())
        .filter(|&r| table.row(r).iter().all(Cyclotomic::is_real))
        .count()
}

/// Every character field has degree at most 2.
pub fn is_quadratic_rational(table: &CharacterTable) -> bool {
    (0..table.n_chars()).all(|r| character_field(table, r).degree <= 2)
}

/// One Wedderburn component of the rational group algebra: a Galois
/// orbit of characters, with the field of a representative.
#[derive(Debug, Clone, Serialize)]
pub struct WedderburnComponent {
    pub representative_row: usize,
    pub orbit_size: usize,
    pub degree: u64,
    pub field: CharacterFieldDescriptor,
}

/// One entry per Galois orbit of Irr(G).
pub fn wedderburn_center_report(table: &CharacterTable) -> Vec<WedderburnComponent> {
    let e = table.exponent();
    let units: Vec<u64> = (1..e.max(2)).filter(|j| j.gcd(&e) == 1).collect();
    let mut assigned = vec![false; table.n_chars()];
    let mut out = Vec::new();
    for r in 0..table.n_chars() {
        if assigned[r] {
            continue;
        }
        let mut orbit = Vec::new();
        for &j in &units {
            let img = table
                .galois_conjugate_row(r, j)
                .expect("Galois conjugate of a character is a character");
            if !assigned[img] {
                assigned[img] = true;
                orbit.push(img);
            }
        }
        out.push(WedderburnComponent {
            representative_row: r,
            orbit_size: orbit.len(),
            degree: table.degrees()[r],
            field: character_field(table, r),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn pg(degree: usize, gens: &[&str]) -> PermutationGroup {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse(s, degree).unwrap())
            .collect();
        PermutationGroup::from_generators_with_degree(gens, degree).unwrap()
    }

    fn c3() -> PermutationGroup {
        pg(3, &["(1,2,3)"])
    }

    fn s3() -> PermutationGroup {
        pg(3, &["(1,2)", "(1,2,3)"])
    }

    fn s4() -> PermutationGroup {
        pg(4, &["(1,2)", "(1,2,3,4)"])
    }

    fn q8() -> PermutationGroup {
        pg(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"])
    }

    fn d16() -> PermutationGroup {
        pg(8, &["(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"])
    }

    fn check_orthogonality(t: &CharacterTable) {
        let order = t.classes().group().order();
        let k = t.classes().n_classes();
        let sizes = t.classes().sizes();
        for r in 0..t.n_chars() {
            for s in 0..t.n_chars() {
                let mut acc = Cyclotomic::zero();
                for i in 0..k {
                    let term = t.value(r, i).mul(&t.value(s, i).conjugate());
                    acc = acc.add(&term.scale(&BigRational::from_integer(sizes[i].into())));
                }
                let expected = if r == s { order } else { 0 };
                assert_eq!(
                    acc.as_rational().unwrap(),
                    BigRational::from_integer(expected.into()),
                    "row orthogonality ({r},{s})"
                );
            }
        }
        // Column orthogonality at the identity column.
        let sum_sq: u64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum_sq, order);
    }

    #[test]
    fn multiplication_coefficients_small_cases() {
        // Identity class: a[0][j][k] = δ_{jk}.
        let t = ConjugacyClassTable::new(&s3()).unwrap();
        let a = class_multiplication_coefficients(&t);
        let k = t.n_classes();
        for j in 0..k {
            for kk in 0..k {
                assert_eq!(a[0][j][kk], u64::from(j == kk));
            }
        }
        // S3, transposition class t: t·t reaches the identity in
        // |C_t| = 3 ways.
        let ti = (0..k).find(|&i| t.rep_orders()[i] == 2).unwrap();
        assert_eq!(a[ti][ti][0], 3);
        // Consistency: Σ_k a[i][j][k]|C_k| = |C_i||C_j|.
        for i in 0..k {
            for j in 0..k {
                let lhs: u64 = (0..k).map(|kk| a[i][j][kk] * t.sizes()[kk]).sum();
                assert_eq!(lhs, t.sizes()[i] * t.sizes()[j]);
            }
        }
        // C3: g·g = g².
        let t = ConjugacyClassTable::new(&c3()).unwrap();
        let a = class_multiplication_coefficients(&t);
        assert_eq!(a[1][1][2], 1);
    }

    #[test]
    fn c3_table_is_the_character_group() {
        let t = CharacterTable::new(&c3()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1]);
        let z = |k: i64| Cyclotomic::root_of_unity(3, k);
        let rows: Vec<Vec<Cyclotomic>> = (0..3).map(|r| t.row(r).to_vec()).collect();
        let expected_nontrivial = [
            vec![Cyclotomic::one(), z(1), z(2)],
            vec![Cyclotomic::one(), z(2), z(1)],
        ];
        assert!(rows.contains(&vec![Cyclotomic::one(); 3]));
        for e in expected_nontrivial {
            assert!(rows.contains(&e), "missing character row");
        }
        check_orthogonality(&t);
    }

    #[test]
    fn s3_degrees_and_rationality() {
        let t = CharacterTable::new(&s3()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(count_rational_characters(&t), 3);
        assert!(is_cut_by_characters(&t));
        check_orthogonality(&t);
    }

    #[test]
    fn q8_degrees() {
        let g = q8();
        assert_eq!(g.order(), 8);
        let t = CharacterTable::new(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        check_orthogonality(&t);
    }

    #[test]
    fn s4_is_cut_by_characters() {
        let t = CharacterTable::new(&s4()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
        assert!(is_cut_by_characters(&t));
        assert_eq!(count_rational_characters(&t), 5);
        check_orthogonality(&t);
    }

    #[test]
    fn d16_has_a_real_quadratic_character() {
        let t = CharacterTable::new(&d16()).unwrap();
        assert!(!is_cut_by_characters(&t));
        assert!(is_quadratic_rational(&t));
        // The witness field is Q(√2), discriminant 8.
        let descs: Vec<CharacterFieldDescriptor> =
            (0..t.n_chars()).map(|r| character_field(&t, r)).collect();
        assert!(descs
            .iter()
            .any(|d| d.degree == 2 && d.is_real && d.discriminant == Some(8)));
        check_orthogonality(&t);
    }

    #[test]
    fn character_fields_of_c3() {
        let t = CharacterTable::new(&c3()).unwrap();
        let mut rational = 0;
        let mut imaginary = 0;
        for r in 0..3 {
            let d = character_field(&t, r);
            if d.is_rational {
                rational += 1;
            } else {
                assert!(d.is_imaginary_quadratic);
                assert_eq!(d.discriminant, Some(-3));
                imaginary += 1;
            }
        }
        assert_eq!((rational, imaginary), (1, 2));
    }

    #[test]
    fn brauer_real_counts_agree_on_samples() {
        for g in [
            c3(),
            s3(),
            s4(),
            q8(),
            d16(),
            pg(5, &["(1,2,3,4,5)"]),
            pg(5, &["(1,2,3)", "(3,4,5)"]),
            pg(9, &["(1,2,3,4,5,6,7,8,9)", "(2,5,8)(3,9,6)"]),
        ] {
            let t = CharacterTable::new(&g).unwrap();
            let classes_report = crate::rationality::classify_from_table(t.classes());
            assert_eq!(
                count_real_characters(&t),
                classes_report.n_real_classes,
                "group of order {}",
                g.order()
            );
        }
    }

    #[test]
    fn galois_conjugates_stay_in_table() {
        for g in [c3(), s4(), q8(), pg(5, &["(1,2,3,4,5)"])] {
            let t = CharacterTable::new(&g).unwrap();
            let e = t.exponent();
            for r in 0..t.n_chars() {
                for j in (1..e.max(2)).filter(|j| j.gcd(&e) == 1) {
                    assert!(t.galois_conjugate_row(r, j).is_some());
                }
            }
        }
    }

    #[test]
    fn wedderburn_components() {
        let t = CharacterTable::new(&c3()).unwrap();
        let comps = wedderburn_center_report(&t);
        let mut degs: Vec<(usize, u64)> =
            comps.iter().map(|c| (c.orbit_size, c.field.degree)).collect();
        degs.sort();
        assert_eq!(degs, vec![(1, 1), (2, 2)]);

        let c4 = pg(4, &["(1,2,3,4)"]);
        let t = CharacterTable::new(&c4).unwrap();
        let comps = wedderburn_center_report(&t);
        let mut discs: Vec<Option<i64>> = comps.iter().map(|c| c.field.discriminant).collect();
        discs.sort();
        assert_eq!(comps.len(), 3);
        assert!(discs.contains(&Some(-4)));

        let t = CharacterTable::new(&s3()).unwrap();
        let comps = wedderburn_center_report(&t);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.field.is_rational));
    }

    #[test]
    fn class_and_character_criteria_agree_on_samples() {
        for g in [
            c3(),
            s3(),
            s4(),
            q8(),
            d16(),
            pg(5, &["(1,2,3,4,5)"]),
            pg(6, &["(1,2,3,4,5,6)"]),
        ] {
            let t = CharacterTable::new(&g).unwrap();
            let by_classes = crate::rationality::classify_from_table(t.classes()).is_cut;
            assert_eq!(is_cut_by_characters(&t), by_classes);
        }
    }
}
