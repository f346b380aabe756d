//! Exact arithmetic in cyclotomic fields.
//!
//! An element of Q(ζ_n) is held in canonical form: a sparse rational
//! polynomial in ζ_n reduced modulo the n-th cyclotomic polynomial, so
//! exponents stay below φ(n). Canonical form makes equality a plain
//! coefficient comparison once two elements are lifted to a common
//! conductor.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduction data for one conductor: φ(n) and the expansions of
/// ζ^k (φ(n) ≤ k < n) in the power basis {ζ^0, ..., ζ^{φ(n)-1}}.
struct Tables {
    phi: usize,
    rows: Vec<Vec<BigInt>>,
}

fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Coefficients of the n-th cyclotomic polynomial, low degree first,
/// by dividing x^n − 1 by the cyclotomic polynomials of the proper
/// divisors.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (monic divisor).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[k], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate().take(dd) {
            rem[k - dd + i] -= &c * d;
        }
        quot[k - dd] = c;
    }
    debug_assert!(rem.iter().all(BigInt::is_zero));
    quot
}

fn tables_for(n: u64) -> Arc<Tables> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let phi = euler_phi(n) as usize;
    let min_poly = cyclotomic_polynomial(n);
    debug_assert_eq!(min_poly.len(), phi + 1);
    // rows[k - phi] = ζ^k in the power basis. Row for ζ^phi comes
    // straight from the minimal polynomial; each next row is the
    // previous one shifted once and reduced.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize - phi);
    if phi < n as usize {
        let first: Vec<BigInt> = min_poly[..phi].iter().map(|c| -c).collect();
        rows.push(first);
        for _ in (phi + 1)..n as usize {
            let prev = rows.last().unwrap();
            let mut next = vec![BigInt::zero(); phi];
            // Multiply by ζ: shift, then fold the ζ^phi overflow back.
            let carry = prev[phi - 1].clone();
            for i in 1..phi {
                next[i] = prev[i - 1].clone();
            }
            if !carry.is_zero() {
                for (i, c) in rows[0].iter().enumerate() {
                    next[i] += &carry * c;
                }
            }
            rows.push(next);
        }
    }
    let t = Arc::new(Tables { phi, rows });
    cache.lock().unwrap().insert(n, Arc::clone(&t));
    t
}

/// An element of the n-th cyclotomic field in canonical reduced form.
/// The ordering is the deterministic (conductor, coefficients) order
/// used to stabilize table layouts; it has no analytic meaning.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    /// exponent → coefficient; exponents < φ(conductor); no zeros.
    coeffs: BTreeMap<u64, BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(0, q);
        }
        Cyclotomic { conductor: 1, coeffs }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u64;
        let mut raw = BTreeMap::new();
        raw.insert(k, BigRational::one());
        Self::reduce(n, raw)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical value of Σ c_k ζ_n^k, built in one reduction pass.
    pub fn from_powers(n: u64, terms: impl IntoIterator<Item = (u64, BigRational)>) -> Self {
        let mut raw: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (k, c) in terms {
            add_to(&mut raw, k % n, c);
        }
        Self::reduce(n, raw)
    }

    /// Canonical form from exponents < n (reduces mod Φ_n, then drops
    /// to the smallest conductor actually needed).
    fn reduce(n: u64, raw: BTreeMap<u64, BigRational>) -> Self {
        let tables = tables_for(n);
        let phi = tables.phi as u64;
        let mut coeffs: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (k, c) in raw {
            if c.is_zero() {
                continue;
            }
            debug_assert!(k < n);
            if k < phi {
                add_to(&mut coeffs, k, c);
            } else {
                for (i, r) in tables.rows[(k - phi) as usize].iter().enumerate() {
                    if !r.is_zero() {
                        add_to(&mut coeffs, i as u64, &c * BigRational::from_integer(r.clone()));
                    }
                }
            }
        }
        let mut out = Cyclotomic { conductor: n, coeffs };
        out.shrink_conductor();
        out
    }

    /// Replace the conductor by the smallest divisor over which the
    /// element is defined.
    fn shrink_conductor(&mut self) {
        if self.conductor == 1 {
            return;
        }
        let mut best = self.conductor;
        for d in 1..self.conductor {
            if self.conductor.is_multiple_of(d) {
                if let Some(lifted) = self.try_rewrite(d) {
                    *self = lifted;
                    best = d;
                    break;
                }
            }
        }
        let _ = best;
    }

    /// Attempt to express the element over conductor d | n by checking
    /// invariance under the Galois group elements fixing Q(ζ_d).
    fn try_rewrite(&self, d: u64) -> Option<Cyclotomic> {
        let n = self.conductor;
        // σ_j fixes Q(ζ_d) iff j ≡ 1 (mod d). The element lies in
        // Q(ζ_d) iff it is fixed by all such σ_j.
        for j in (1..n).filter(|j| j.gcd(&n) == 1 && j % d == 1 % d.max(1)) {
            if self.galois_raw(j) != *self {
                return None;
            }
        }
        // Rewrite: expand in ζ_d via the trace-free direct approach —
        // solve by expressing each basis power through ζ_d = ζ_n^{n/d}.
        // Every exponent of the reduced form must land in the image of
        // multiplication by n/d after reduction; reconstruct by
        // averaging over the fixing subgroup, which here is just a
        // change of basis: compute the element as a polynomial in
        // ζ_n and substitute.
        let step = n / d;
        // Try the straightforward rewrite: the canonical form over d
        // of the same value. Build candidate coefficients by matching
        // ζ_d^k = ζ_n^{k·step} against the current reduced form via
        // linear algebra over the rationals.
        let phi_d = euler_phi(d) as usize;
        let tables_n = tables_for(n);
        let phi_n = tables_n.phi;
        // Matrix columns: ζ_d^k reduced over conductor n.
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi_d);
        for k in 0..phi_d as u64 {
            let mut raw = BTreeMap::new();
            raw.insert((k * step) % n, BigRational::one());
            let reduced = Cyclotomic::reduce_no_shrink(n, raw);
            let mut col = vec![BigRational::zero(); phi_n];
            for (e, c) in reduced.coeffs {
                col[e as usize] = c;
            }
            cols.push(col);
        }
        let mut target = vec![BigRational::zero(); phi_n];
        for (e, c) in &self.coeffs {
            target[*e as usize] = c.clone();
        }
        let sol = solve_rational(&cols, &target)?;
        let mut coeffs = BTreeMap::new();
        for (k, c) in sol.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(k as u64, c);
            }
        }
        Some(Cyclotomic { conductor: d, coeffs })
    }

    fn reduce_no_shrink(n: u64, raw: BTreeMap<u64, BigRational>) -> Self {
        let tables = tables_for(n);
        let phi = tables.phi as u64;
        let mut coeffs: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (k, c) in raw {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                add_to(&mut coeffs, k, c);
            } else {
                for (i, r) in tables.rows[(k - phi) as usize].iter().enumerate() {
                    if !r.is_zero() {
                        add_to(&mut coeffs, i as u64, &c * BigRational::from_integer(r.clone()));
                    }
                }
            }
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// Lift to conductor m (a multiple of the current conductor),
    /// without shrinking back.
    fn lift(&self, m: u64) -> Cyclotomic {
        debug_assert_eq!(m % self.conductor, 0);
        let step = m / self.conductor;
        let mut raw = BTreeMap::new();
        for (k, c) in &self.coeffs {
            raw.insert(k * step, c.clone());
        }
        Cyclotomic::reduce_no_shrink(m, raw)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lift(m);
        let b = other.lift(m);
        let mut coeffs = a.coeffs;
        for (k, c) in b.coeffs {
            add_to(&mut coeffs, k, c);
        }
        let mut out = Cyclotomic { conductor: m, coeffs };
        out.shrink_conductor();
        out
    }

    pub fn neg(&self) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|(k, c)| (*k, -c)).collect();
        Cyclotomic {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lift(m);
        let b = other.lift(m);
        let mut raw: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (ka, ca) in &a.coeffs {
            for (kb, cb) in &b.coeffs {
                add_to(&mut raw, (ka + kb) % m, ca * cb);
            }
        }
        Cyclotomic::reduce(m, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        let coeffs = self.coeffs.iter().map(|(k, c)| (*k, c * q)).collect();
        Cyclotomic {
            conductor: self.conductor,
            coeffs,
        }
    }

    /// Galois action σ_j : ζ ↦ ζ^j, j coprime to the conductor.
    pub fn galois(&self, j: u64) -> Cyclotomic {
        let n = self.conductor;
        let j = j % n.max(2);
        assert_eq!(j.gcd(&n), 1, "σ_j needs j coprime to the conductor");
        self.galois_raw(j)
    }

    fn galois_raw(&self, j: u64) -> Cyclotomic {
        let n = self.conductor;
        let mut raw = BTreeMap::new();
        for (k, c) in &self.coeffs {
            add_to(&mut raw, (k * j) % n, c.clone());
        }
        Cyclotomic::reduce_no_shrink(n, raw)
    }

    /// Complex conjugation σ_{−1}.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        let mut out = self.galois_raw(self.conductor - 1);
        out.shrink_conductor();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.conductor == 1 || self.coeffs.keys().all(|&k| k == 0) {
            Some(
                self.coeffs
                    .get(&0)
                    .cloned()
                    .unwrap_or_else(BigRational::zero),
            )
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// The sparse coefficients on the power basis ζ^k, k < φ(conductor).
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Render using z(n) for ζ_n, e.g. `1 - z(5)^2 - z(5)^3`.
    pub fn render(&self) -> String {
        if let Some(q) = self.as_rational() {
            return q.to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in &self.coeffs {
            let base = if *k == 0 {
                String::new()
            } else if *k == 1 {
                format!("z({})", self.conductor)
            } else {
                format!("z({})^{}", self.conductor, k)
            };
            let piece = if base.is_empty() {
                c.to_string()
            } else if c.is_one() {
                base
            } else if (-c).is_one() {
                format!("-{base}")
            } else {
                format!("{c}*{base}")
            };
            parts.push(piece);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

fn add_to(map: &mut BTreeMap<u64, BigRational>, k: u64, c: BigRational) {
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Solve `cols * x = target` over the rationals (cols are the matrix
/// columns). Returns None when inconsistent.
fn solve_rational(cols: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let ncols = cols.len();
    // Augmented row-major matrix.
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c2 in 0..=ncols {
                    let delta = &f * &m[rank][c2];
                    m[r][c2] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Consistency: no row of the form (0 ... 0 | nonzero).
    for r in rank..rows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2u64, 3, 4, 5, 6, 7, 8, 9, 12] {
            let mut s = Cyclotomic::zero();
            for k in 0..n as i64 {
                s = s.add(&zeta(n, k));
            }
            assert!(s.is_zero(), "sum of all {n}-th roots");
        }
    }

    #[test]
    fn multiplicative_order() {
        let z = zeta(5, 1);
        let mut p = Cyclotomic::one();
        for _ in 0..5 {
            p = p.mul(&z);
        }
        assert_eq!(p, Cyclotomic::one());
        assert_eq!(z.mul(&zeta(5, 4)), Cyclotomic::one());
    }

    #[test]
    fn mixed_conductors() {
        // ζ_6 = -ζ_3^2 and ζ_2 = -1.
        assert_eq!(zeta(2, 1), Cyclotomic::from_integer(-1));
        assert_eq!(zeta(6, 1), zeta(3, 2).neg());
        let i = zeta(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
        // ζ_12^3 = i even though 12 and 4 differ.
        let z12 = zeta(12, 1);
        assert_eq!(z12.mul(&z12).mul(&z12), i);
    }

    #[test]
    fn conductor_shrinks_to_minimal() {
        // ζ_5 + ζ_5^4 + ζ_5^2 + ζ_5^3 = -1 is rational.
        let s = zeta(5, 1).add(&zeta(5, 2)).add(&zeta(5, 3)).add(&zeta(5, 4));
        assert_eq!(s.as_rational().unwrap(), BigRational::from_integer((-1).into()));
        assert_eq!(s.conductor(), 1);
        // ζ_8 + ζ_8^{-1} = √2 has conductor 8.
        let r = zeta(8, 1).add(&zeta(8, -1));
        assert_eq!(r.conductor(), 8);
        assert!(r.is_real());
        assert!(!r.is_rational());
        assert_eq!(
            r.mul(&r).as_rational().unwrap(),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn galois_and_conjugation() {
        let a = zeta(7, 1).add(&zeta(7, 2)).add(&zeta(7, 4));
        let b = a.galois(3);
        assert_ne!(a, b);
        assert_eq!(a.add(&b).as_rational().unwrap(), BigRational::from_integer((-1).into()));
        assert_eq!(a.conjugate(), b);
        assert!(!a.is_real());
        // Norm-like product: a·ā = a·b = 2 for this Gauss period.
        assert_eq!(a.mul(&b).as_rational().unwrap(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn golden_ratio_periods_are_real() {
        let a = zeta(5, 1).add(&zeta(5, 4));
        assert!(a.is_real());
        // a satisfies x^2 + x - 1 = 0.
        let lhs = a.mul(&a).add(&a).sub(&Cyclotomic::one());
        assert!(lhs.is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(Cyclotomic::from_integer(3).render(), "3");
        assert_eq!(zeta(3, 1).render(), "z(3)");
        assert_eq!(zeta(3, 1).add(&Cyclotomic::one()).render(), "1 + z(3)");
        assert_eq!(zeta(5, 2).neg().render(), "-z(5)^2");
    }
}
