//! Generates the committed small-group catalog file.
//!
//! All isomorphism classes of groups of orders 1..=32, 42 and 81 are
//! produced by exhaustive cyclic extension, validated against the
//! published class counts, sorted by a deterministic invariant
//! fingerprint, and written as `entry <order>.<k> ...` records. The
//! ids 32.42, 32.9 and 81.8 are pinned to the classes isomorphic to
//! the corresponding presented groups; all other ids follow the
//! fingerprint ordering.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;

use cutkit::catalog::{
    group_32_42, group_32_9, group_81_8, mathieu_11, mathieu_12, psl_2_7, render_catalog,
    CatalogFile, Construction, GroupCatalogEntry,
};
use cutkit::smallgroups::{groups_of_order, isomorphic, known_group_count, TableGroup};

const ORDERS: [usize; 34] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25,
    26, 27, 28, 29, 30, 31, 32, 42, 81,
];

fn table_entry(id: String, table: &TableGroup, name: Option<String>) -> GroupCatalogEntry {
    let mut tags = BTreeSet::new();
    if table.is_abelian() {
        tags.insert("abelian".to_string());
    }
    if table.is_nilpotent() {
        tags.insert("nilpotent".to_string());
    }
    let rep = table.regular_representation();
    let is_cyclic = table.n == 1 || table.element_order(1) == table.n
        || (0..table.n).any(|x| table.element_order(x) == table.n);
    let construction = if tags.contains("abelian") && is_cyclic {
        // Cyclic groups keep a readable constructor expression.
        Construction::Expression(format!("C({})", table.n))
    } else {
        Construction::Permutations {
            degree: rep.degree(),
            gens: rep.generators().iter().map(|p| p.to_string()).collect(),
        }
    };
    GroupCatalogEntry {
        id,
        order: table.n as u64,
        name,
        tags,
        construction,
    }
}

fn perm_entry(
    id: &str,
    group: &cutkit::PermutationGroup,
    name: &str,
    tags: &[&str],
) -> GroupCatalogEntry {
    GroupCatalogEntry {
        id: id.to_string(),
        order: group.order(),
        name: Some(name.to_string()),
        tags: tags.iter().map(|t| t.to_string()).collect(),
        construction: Construction::Permutations {
            degree: group.degree(),
            gens: group.generators().iter().map(|p| p.to_string()).collect(),
        },
    }
}

/// Assign ids 1..=k to the classes of one order; `pins` maps a class
/// index (position after fingerprint sorting) to its required id.
fn assign_ids(count: usize, pins: &BTreeMap<usize, usize>) -> Vec<usize> {
    let pinned: BTreeSet<usize> = pins.values().copied().collect();
    let mut free = (1..=count).filter(|i| !pinned.contains(i));
    (0..count)
        .map(|idx| match pins.get(&idx) {
            Some(&id) => id,
            None => free.next().expect("enough free ids"),
        })
        .collect()
}

fn main() {
    let out_path: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data/catalog.txt"));

    let mut cache: HashMap<usize, Vec<TableGroup>> = HashMap::new();
    let mut entries: Vec<GroupCatalogEntry> = Vec::new();
    let mut complete: BTreeMap<u64, usize> = BTreeMap::new();

    let pinned_32_42 = TableGroup::from_permutation_group(&group_32_42());
    let pinned_32_9 = TableGroup::from_permutation_group(&group_32_9());
    let pinned_81_8 = TableGroup::from_permutation_group(&group_81_8());

    for order in ORDERS {
        eprintln!("generating order {order}...");
        let mut classes = groups_of_order(order, &mut cache);
        assert_eq!(classes.len(), known_group_count(order).unwrap());
        classes.sort_by_cached_key(|g| g.fingerprint());

        let mut pins: BTreeMap<usize, usize> = BTreeMap::new();
        let mut names: BTreeMap<usize, String> = BTreeMap::new();
        let pin = |classes: &[TableGroup],
                       pins: &mut BTreeMap<usize, usize>,
                       target: &TableGroup,
                       id: usize,
                       name: &str,
                       names: &mut BTreeMap<usize, String>| {
            let idx = classes
                .iter()
                .position(|g| isomorphic(g, target))
                .expect("pinned class must be generated");
            pins.insert(idx, id);
            names.insert(idx, name.to_string());
        };
        if order == 32 {
            pin(&classes, &mut pins, &pinned_32_42, 42, "g32", &mut names);
            pin(&classes, &mut pins, &pinned_32_9, 9, "h32", &mut names);
        }
        if order == 81 {
            pin(&classes, &mut pins, &pinned_81_8, 8, "g81", &mut names);
        }

        let ids = assign_ids(classes.len(), &pins);
        let mut block: Vec<(usize, GroupCatalogEntry)> = classes
            .iter()
            .enumerate()
            .map(|(idx, table)| {
                let id = ids[idx];
                (
                    id,
                    table_entry(format!("{order}.{id}"), table, names.get(&idx).cloned()),
                )
            })
            .collect();
        block.sort_by_key(|(id, _)| *id);
        entries.extend(block.into_iter().map(|(_, e)| e));
        complete.insert(order as u64, classes.len());
    }

    entries.push(perm_entry("psl_2_7", &psl_2_7(), "PSL(2,7)", &["simple"]));
    entries.push(perm_entry("m11", &mathieu_11(), "M11", &["simple"]));
    entries.push(perm_entry("m12", &mathieu_12(), "M12", &["simple"]));

    let file = CatalogFile {
        format_version: 1,
        complete,
        entries,
    };
    let header = [
        "Small-group catalog: every isomorphism class of the orders",
        "listed in the `complete` directives, plus named groups.",
        "Generated by cutkit-catgen; do not edit by hand.",
        "Ids are <order>.<k> with k following a deterministic invariant",
        "ordering, except 32.42, 32.9 and 81.8 which are pinned to the",
        "standard identifiers of their presented groups.",
    ];
    let text = render_catalog(&file, &header);
    if let Some(parent) = out_path.parent() {
        std::fs::create_dir_all(parent).expect("create output directory");
    }
    std::fs::write(&out_path, &text).expect("write catalog");
    eprintln!(
        "wrote {} entries to {}",
        file.entries.len(),
        out_path.display()
    );

    // Re-parse as a self-check (includes hard order validation).
    let reloaded = cutkit::catalog::load_catalog(&out_path).expect("catalog must re-validate");
    assert_eq!(reloaded.entries.len(), file.entries.len());
    eprintln!("re-validation passed");
}
