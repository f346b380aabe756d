//! Element-level field descriptors and the class-based cut decision.
//!
//! For an element x of order n, the residues j with x^j conjugate to x
//! form a subgroup A of (Z/n)^*; the field generated by the values of
//! any character at x has degree [(Z/n)^* : A] over the rationals. The
//! element is inverse semi-rational exactly when A together with -A
//! fills (Z/n)^*, and a group is cut exactly when every element is
//! inverse semi-rational.

use num_integer::Integer;
use serde::Serialize;

use crate::classes::{ConjugacyClassTable, PowerMap};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;

/// The rationality data of one conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementFieldDescriptor {
    pub element_order: u64,
    /// Sorted residues A = {j coprime to n : x^j ~ x}.
    pub stabilizer: Vec<u64>,
    /// [(Z/n)^* : A] = [Q(x) : Q].
    pub degree: u64,
    pub is_real: bool,
    pub is_rational: bool,
    pub is_inverse_semi_rational: bool,
    /// Fundamental discriminant of Q(x), present iff degree = 2.
    pub quadratic_discriminant: Option<i64>,
}

fn unit_residues(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|j| j.gcd(&n) == 1).collect()
}

/// Descriptor of class `i`, read off the power map.
pub fn element_field(
    table: &ConjugacyClassTable,
    pmap: &PowerMap,
    i: usize,
) -> ElementFieldDescriptor {
    let n = table.rep_orders()[i];
    let units = unit_residues(n);
    let stabilizer: Vec<u64> = units
        .iter()
        .copied()
        .filter(|&j| pmap.class_of_power(i, j) == i)
        .collect();
    let degree = (units.len() / stabilizer.len()) as u64;
    let minus_one = (n.max(2) - 1) % n.max(2);
    let is_real = n <= 2 || stabilizer.binary_search(&minus_one).is_ok();
    let is_rational = degree == 1;
    // A·{±1} covers the units iff every unit or its negative lies in A.
    let is_inverse_semi_rational = units.iter().all(|&j| {
        stabilizer.binary_search(&j).is_ok()
            || stabilizer.binary_search(&((n.max(2) - j) % n.max(2))).is_ok()
    });
    debug_assert_eq!(
        is_inverse_semi_rational,
        degree == 1 || (degree == 2 && !is_real)
    );
    let quadratic_discriminant = if degree == 2 {
        Some(quadratic_discriminant_of(&stabilizer, n).expect("index is 2"))
    } else {
        None
    };
    ElementFieldDescriptor {
        element_order: n,
        stabilizer,
        degree,
        is_real,
        is_rational,
        is_inverse_semi_rational,
        quadratic_discriminant,
    }
}

/// Fundamental discriminant of the quadratic field fixed by the
/// index-2 residue subgroup `a` inside the n-th cyclotomic field.
///
/// The quadratic character with kernel `a` is reduced to its conductor
/// f; the field has discriminant ±f with the sign of χ(−1).
pub fn quadratic_discriminant_of(a: &[u64], n: u64) -> Result<i64> {
    let units = unit_residues(n);
    if a.len() * 2 != units.len() {
        return Err(Error::NotIndexTwo((units.len() / a.len().max(1)) as u64));
    }
    let chi = |j: u64| -> i64 {
        if a.binary_search(&(j % n)).is_ok() {
            1
        } else {
            -1
        }
    };
    // Conductor: least divisor f of n such that χ is trivial on the
    // units congruent to 1 mod f.
    let mut conductor = n;
    for f in 1..=n {
        if !n.is_multiple_of(f) {
            continue;
        }
        if units.iter().all(|&j| j % f != 1 % f.max(1) || chi(j) == 1) {
            conductor = f;
            break;
        }
    }
    let sign = chi(n - 1);
    let d = sign * conductor as i64;
    debug_assert!(d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1);
    Ok(d)
}

/// Witness for a failed cut decision: a class and a residue j for
/// which x^j is conjugate to neither x nor x^-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutFailureWitness {
    pub class: usize,
    pub residue: u64,
}

/// True iff every class representative is inverse semi-rational; on
/// failure, reports the first offending class and residue.
pub fn is_cut_by_classes(
    table: &ConjugacyClassTable,
    pmap: &PowerMap,
) -> (bool, Option<CutFailureWitness>) {
    for i in 0..table.n_classes() {
        let n = table.rep_orders()[i];
        let inverse = table.inverse_class(i);
        for j in unit_residues(n) {
            let c = pmap.class_of_power(i, j);
            if c != i && c != inverse {
                return (false, Some(CutFailureWitness { class: i, residue: j }));
            }
        }
    }
    (true, None)
}

/// Per-class row of a classification report.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub class: usize,
    pub size: u64,
    pub descriptor: ElementFieldDescriptor,
}

/// Group-level rationality summary.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub order: u64,
    pub is_cut: bool,
    pub is_rational_group: bool,
    pub is_real_group: bool,
    pub is_semi_rational_group: bool,
    pub n_classes: usize,
    pub n_rational_classes: usize,
    pub n_real_classes: usize,
    pub per_class: Vec<ClassReport>,
}

pub fn classify_from_table(table: &ConjugacyClassTable) -> ClassificationReport {
    let pmap = PowerMap::new(table);
    let mut per_class = Vec::with_capacity(table.n_classes());
    for i in 0..table.n_classes() {
        per_class.push(ClassReport {
            class: i,
            size: table.sizes()[i],
            descriptor: element_field(table, &pmap, i),
        });
    }
    let (is_cut, _) = is_cut_by_classes(table, &pmap);
    ClassificationReport {
        order: table.group().order(),
        is_cut,
        is_rational_group: per_class.iter().all(|c| c.descriptor.is_rational),
        is_real_group: per_class.iter().all(|c| c.descriptor.is_real),
        is_semi_rational_group: per_class.iter().all(|c| c.descriptor.degree <= 2),
        n_classes: per_class.len(),
        n_rational_classes: per_class.iter().filter(|c| c.descriptor.is_rational).count(),
        n_real_classes: per_class.iter().filter(|c| c.descriptor.is_real).count(),
        per_class,
    }
}

pub fn classify_group(group: &PermutationGroup) -> Result<ClassificationReport> {
    let table = ConjugacyClassTable::new(group)?;
    Ok(classify_from_table(&table))
}

pub fn count_rational_classes(group: &PermutationGroup) -> Result<usize> {
    Ok(classify_group(group)?.n_rational_classes)
}

pub fn count_real_classes(group: &PermutationGroup) -> Result<usize> {
    Ok(classify_group(group)?.n_real_classes)
}

pub fn is_cut(group: &PermutationGroup) -> Result<bool> {
    let table = ConjugacyClassTable::new(group)?;
    let pmap = PowerMap::new(&table);
    Ok(is_cut_by_classes(&table, &pmap).0)
}

/// For a 3-power-order class: inverse semi-rationality is equivalent
/// to conjugacy with the fourth power (orders 1 and 3 are always
/// inverse semi-rational).
pub fn is_isr_3_element_via_fourth_power(
    table: &ConjugacyClassTable,
    pmap: &PowerMap,
    i: usize,
) -> Result<bool> {
    let n = table.rep_orders()[i];
    let mut m = n;
    while m.is_multiple_of(3) {
        m /= 3;
    }
    if m != 1 {
        return Err(Error::NotThreePower);
    }
    if n <= 3 {
        return Ok(true);
    }
    Ok(pmap.class_of_power(i, 4) == i)
}
