//! Acceptance gate: one test per acceptance criterion, each ending in
//! a single PASS line (run with `--nocapture` to see them all).

use std::path::PathBuf;
use std::time::{Duration, Instant};

use cutkit::catalog::{self, CatalogFile};
use cutkit::chartab::{
    count_rational_characters, count_real_characters, is_cut_by_characters, CharacterTable,
};
use cutkit::classes::{ConjugacyClassTable, PowerMap};
use cutkit::cyclotomic::Cyclotomic;
use cutkit::group::PermutationGroup;
use cutkit::rationality::{classify_from_table, is_cut, is_cut_by_classes};
use cutkit::structure;
use cutkit::theorems;

fn catalog_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog.txt")
}

fn load() -> CatalogFile {
    catalog::load_catalog(&catalog_path()).expect("catalog loads and validates")
}

fn census(cat: &CatalogFile, order: u64) -> (usize, usize, usize) {
    let entries = cat.entries_of_order(order);
    assert_eq!(entries.len(), cat.declared_total(order).unwrap());
    let mut cut = 0;
    let mut rational = 0;
    for e in &entries {
        let g = catalog::realize(e).unwrap();
        let t = ConjugacyClassTable::new(&g).unwrap();
        let r = classify_from_table(&t);
        cut += r.is_cut as usize;
        rational += r.is_rational_group as usize;
    }
    (entries.len(), cut, rational)
}

fn assert_within(start: Instant, limit: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= limit,
        "{what} took {elapsed:?}, limit {limit:?}"
    );
}

#[test]
fn criterion_01_census_order_16() {
    let cat = load();
    let start = Instant::now();
    assert_eq!(census(&cat, 16), (14, 10, 3));
    assert_within(start, Duration::from_secs(5), "order-16 census");
    println!("PASS criterion 1: census order 16 = (14 total, 10 cut, 3 rational)");
}

#[test]
fn criterion_02_census_order_32() {
    let cat = load();
    let start = Instant::now();
    assert_eq!(census(&cat, 32), (51, 33, 10));
    assert_within(start, Duration::from_secs(60), "order-32 census");
    println!("PASS criterion 2: census order 32 = (51 total, 33 cut, 10 rational)");
}

#[test]
fn criterion_03_census_orders_27_and_81() {
    let cat = load();
    let start = Instant::now();
    let (t27, c27, _) = census(&cat, 27);
    assert_eq!((t27, c27), (5, 3));
    let (t81, c81, _) = census(&cat, 81);
    assert_eq!((t81, c81), (15, 4));
    assert_within(start, Duration::from_secs(60), "orders 27+81 census");
    println!("PASS criterion 3: census order 27 = (5, 3 cut); order 81 = (15, 4 cut)");
}

#[test]
fn criterion_04_census_orders_20_and_42() {
    let cat = load();
    let start = Instant::now();
    assert_eq!(census(&cat, 20), (5, 1, 0));
    assert_eq!(census(&cat, 42), (6, 2, 0));
    assert_within(start, Duration::from_secs(5), "orders 20+42 census");
    println!("PASS criterion 4: census order 20 = (5, 1, 0); order 42 = (6, 2, 0)");
}

#[test]
fn criterion_05_example_32_42_and_32_9() {
    let cat = load();
    let start = Instant::now();
    let expect = [("32.42", 10usize, 8usize), ("32.9", 6, 8)];
    for (id, irr_q, ccl_q) in expect {
        let g = catalog::realize(cat.entry(id).unwrap()).unwrap();
        let classes = ConjugacyClassTable::new(&g).unwrap();
        let report = classify_from_table(&classes);
        let table = CharacterTable::from_classes(classes).unwrap();
        assert_eq!(count_rational_characters(&table), irr_q, "{id} |Irr_Q|");
        assert_eq!(report.n_rational_classes, ccl_q, "{id} |ccl_Q|");
    }
    assert_within(start, Duration::from_secs(10), "32.42/32.9 reproduction");
    println!("PASS criterion 5: 32.42 has 10 rational chars / 8 rational classes; 32.9 has 6 / 8");
}

#[test]
fn criterion_06_simple_verdicts() {
    let start = Instant::now();
    let results = theorems::verify_simple_verdicts().unwrap();
    assert_eq!(results.len(), 11);
    for r in &results {
        assert!(r.conclusion_holds, "{}: {:?}", r.group_id, r.witness);
    }
    assert_within(start, Duration::from_secs(600), "simple verdicts");
    println!(
        "PASS criterion 6: cut(C2,C3,A7,A8,A9,L2(7),M11,M12) = true; cut(A5,A6,A10) = false"
    );
}

#[test]
fn criterion_07_table1_sylow3_classes() {
    let rows = theorems::table1_sylow3_classes().unwrap();
    let expected = [
        ("A7", 1),
        ("A8", 1),
        ("A9", 3),
        ("A12", 3),
        ("L2(7)", 1),
        ("M11", 1),
        ("M12", 2),
    ];
    assert_eq!(rows.len(), expected.len());
    for ((name, class), row) in expected.iter().zip(&rows) {
        assert_eq!(row.group, *name);
        assert_eq!(row.nilpotency_class, *class, "{name}");
        assert!(row.sylow3_cut, "{name}: Sylow 3-subgroup must be cut");
    }
    println!("PASS criterion 7: Sylow-3 classes A7:1 A8:1 A9:3 A12:3 L2(7):1 M11:1 M12:2, all cut");
}

fn realized_catalog(cat: &CatalogFile) -> Vec<(String, PermutationGroup)> {
    cat.entries
        .iter()
        .map(|e| (e.id.clone(), catalog::realize(e).unwrap()))
        .collect()
}

#[test]
fn criterion_08_property_suite_over_catalog() {
    let cat = load();
    let start = Instant::now();
    let mut checked = 0;
    for (id, g) in realized_catalog(&cat) {
        let classes = ConjugacyClassTable::new(&g).unwrap();
        let pmap = PowerMap::new(&classes);
        let by_classes = is_cut_by_classes(&classes, &pmap).0;
        let report = classify_from_table(&classes);
        let table = CharacterTable::from_classes(classes).unwrap();
        // Brauer identity.
        assert_eq!(
            count_real_characters(&table),
            report.n_real_classes,
            "{id}: real character/class counts must coincide"
        );
        // Criterion cross-check.
        assert_eq!(
            by_classes,
            is_cut_by_characters(&table),
            "{id}: the two cut criteria must agree"
        );
        // Rational counts coincide for cut groups.
        if by_classes {
            assert_eq!(
                count_rational_characters(&table),
                report.n_rational_classes,
                "{id}: rational character/class counts must coincide for cut groups"
            );
        }
        checked += 1;
    }
    assert!(checked >= 100);
    assert_within(start, Duration::from_secs(600), "property suite");
    println!("PASS criterion 8: Brauer + criteria-equivalence + rational-count identities over {checked} groups");
}

#[test]
fn criterion_09_condition_n_pinning_and_class2() {
    let cat = load();
    // The two counterexamples: condition (N) true, cut false, class > 2.
    let d16 = catalog::dihedral_of_order(16).unwrap();
    let (cond, _) = theorems::check_condition_n(&d16).unwrap();
    assert!(cond && !is_cut(&d16).unwrap());
    assert!(structure::nilpotency_class(&d16).unwrap() > 2);
    let g81 = catalog::realize(cat.entry("81.8").unwrap()).unwrap();
    let (cond, _) = theorems::check_condition_n(&g81).unwrap();
    assert!(cond && !is_cut(&g81).unwrap());
    assert!(structure::nilpotency_class(&g81).unwrap() > 2);
    // Class-2 equivalence across the whole catalog.
    for (id, g) in realized_catalog(&cat) {
        let r = theorems::verify_class2_criterion(&g, &id).unwrap();
        assert!(!r.is_failure(), "{id}: {:?}", r.witness);
    }
    println!("PASS criterion 9: condition (N) pins D16 and 81.8; class-2 criterion holds on catalog");
}

#[test]
fn criterion_10_sylow3_suites_over_catalog() {
    let cat = load();
    for (id, g) in realized_catalog(&cat) {
        let r = theorems::verify_lemma_3local(&g, &id).unwrap();
        assert!(!r.is_failure(), "3-locality on {id}: {:?}", r.witness);
        for p in [2, 3] {
            let r = theorems::verify_center_exponent_lemma(&g, p, &id).unwrap();
            assert!(!r.is_failure(), "center-exponent p={p} on {id}: {:?}", r.witness);
        }
        let r = theorems::verify_plength1_prop(&g, &id).unwrap();
        assert!(!r.is_failure(), "3-length proposition on {id}: {:?}", r.witness);
    }
    println!("PASS criterion 10: 3-locality, center-exponent (p=2,3), 3-length suites hold on catalog");
}

#[test]
fn criterion_11_orthogonality_and_degree_sums() {
    let cat = load();
    for (id, g) in realized_catalog(&cat) {
        let table = CharacterTable::new(&g).unwrap();
        let order = g.order();
        let sizes = table.classes().sizes().to_vec();
        let k = sizes.len();
        // Σ d² = |G|, exactly.
        let sum: u64 = table.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum, order, "{id}: degree squares must sum to the order");
        // Row orthogonality, exact cyclotomic arithmetic.
        for r in 0..table.n_chars() {
            for s in r..table.n_chars() {
                let mut acc = Cyclotomic::zero();
                for j in 0..k {
                    let term = table
                        .value(r, j)
                        .mul(&table.value(s, j).conjugate())
                        .scale(&num_rational::BigRational::from_integer(sizes[j].into()));
                    acc = acc.add(&term);
                }
                let expected = if r == s { order as i64 } else { 0 };
                assert_eq!(
                    acc,
                    Cyclotomic::from_integer(expected),
                    "{id}: row orthogonality ({r},{s})"
                );
            }
        }
    }
    println!("PASS criterion 11: exact row orthogonality and degree-square sums on every table");
}
