//! Command-line surface: classify groups, run the small-group census,
//! print character tables, run verification suites, and emit CSV/JSON
//! artifacts.
//!
//! Exit codes: 0 success, 1 gating verification failure, 2 input
//! error, 3 resource bound exceeded.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use cutkit::catalog::{self, CatalogFile, GroupCatalogEntry};
use cutkit::chartab::{
    character_field, count_rational_characters, count_real_characters, is_cut_by_characters,
    is_quadratic_rational, CharacterTable,
};
use cutkit::classes::{ConjugacyClassTable, PowerMap};
use cutkit::error::Error;
use cutkit::fpgroups::{perm_rep_bounded, Presentation, DEFAULT_MAX_COSETS};
use cutkit::group::{PermutationGroup, DEFAULT_ENUM_BOUND};
use cutkit::perm::Permutation;
use cutkit::rationality::{classify_from_table, is_cut_by_classes};
use cutkit::theorems;

#[derive(Parser)]
#[command(name = "cutkit", version, about = "Cut groups and rationality of finite groups")]
struct Cli {
    /// Catalog file (default: $CUTKIT_CATALOG, then data/catalog.txt)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,

    /// Coset enumeration bound for presentations
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,

    /// Element enumeration bound for class computations
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BOUND)]
    enum_bound: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single group: rationality taxonomy and cut verdicts
    Classify(ClassifyArgs),
    /// Per-order census of cut and rational groups (CSV)
    Census(CensusArgs),
    /// Print the character table of a group
    Chartab(ClassifyInput),
    /// Run a verification suite over the catalog (JSON lines)
    Verify(VerifyArgs),
    /// Cumulative percentage data for plotting (CSV)
    FigureData(FigureArgs),
}

#[derive(Args)]
struct ClassifyInput {
    /// Catalog id, or a path to a group / presentation file
    input: Option<String>,

    /// Build the group from a constructor expression, e.g. DP(C(4),S(3))
    #[arg(long)]
    constructor: Option<String>,

    /// Emit JSON instead of (or in addition to) the pretty form
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: ClassifyInput,
}

#[derive(Args)]
struct CensusArgs {
    /// Orders to tabulate, e.g. 16 32 27 81
    #[arg(required = true)]
    orders: Vec<u64>,

    /// Also write the CSV to this path
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: brauer, thm31, prop-equiv, class2, sylow3, simple, table1, all
    suite: String,
}

#[derive(Args)]
struct FigureArgs {
    /// Largest order to include; all orders up to it must be complete
    #[arg(long, default_value_t = 32)]
    max_order: u64,

    /// Also write the CSV to this path
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::TooLargeToEnumerate { .. }
        | Error::CosetBoundExceeded(_)
        | Error::IndexTooLarge { .. }
        | Error::NoModulusPrime { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Classify(args) => cmd_classify(&cli, args),
        Command::Census(args) => cmd_census(&cli, args),
        Command::Chartab(input) => cmd_chartab(&cli, input),
        Command::Verify(args) => cmd_verify(&cli, args),
        Command::FigureData(args) => cmd_figure_data(&cli, args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn catalog_path(cli: &Cli) -> PathBuf {
    cli.catalog
        .clone()
        .or_else(|| std::env::var_os("CUTKIT_CATALOG").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data/catalog.txt"))
}

fn load_catalog(cli: &Cli) -> Result<CatalogFile, Error> {
    catalog::load_catalog(&catalog_path(cli))
}

/// Group file format: `#` comments; first non-comment line is the
/// degree; each following line is one generator in cycle notation.
fn parse_group_file(text: &str) -> Result<PermutationGroup, Error> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                degree = Some(line.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("expected a degree, found {line:?}"),
                })?);
            }
            Some(d) => gens.push(Permutation::parse(line, d)?),
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        message: "empty group file".into(),
    })?;
    PermutationGroup::from_generators_with_degree(gens, degree)
}

/// Resolve a classify/chartab input to a permutation group.
fn resolve_input(cli: &Cli, input: &ClassifyInput) -> Result<(String, PermutationGroup), Error> {
    if let Some(expr) = &input.constructor {
        return Ok((expr.clone(), catalog::parse_expression(expr)?));
    }
    let Some(name) = &input.input else {
        return Err(Error::Parse {
            line: 0,
            message: "no input: give a catalog id, a file path, or --constructor".into(),
        });
    };
    let path = Path::new(name);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let group = if text.trim_start().starts_with("gens:") {
            perm_rep_bounded(&Presentation::parse(&text)?, cli.max_cosets)?
        } else {
            parse_group_file(&text)?
        };
        return Ok((name.clone(), group));
    }
    let cat = load_catalog(cli)?;
    let entry = cat.entry(name)?;
    Ok((name.clone(), catalog::realize(entry)?))
}

/// Full classification with both cut criteria and the agreement bit.
fn full_report(group: &PermutationGroup, bound: u64) -> Result<serde_json::Value, Error> {
    let classes = ConjugacyClassTable::with_bound(group, bound)?;
    let class_report = classify_from_table(&classes);
    let chartab = CharacterTable::from_classes(classes)?;
    let cut_by_chars = is_cut_by_characters(&chartab);
    let mut v = serde_json::to_value(&class_report).expect("report serializes");
    let o = v.as_object_mut().unwrap();
    o.insert("is_cut_by_characters".into(), json!(cut_by_chars));
    o.insert(
        "is_quadratic_rational".into(),
        json!(is_quadratic_rational(&chartab)),
    );
    o.insert(
        "n_rational_chars".into(),
        json!(count_rational_characters(&chartab)),
    );
    o.insert("n_real_chars".into(), json!(count_real_characters(&chartab)));
    o.insert(
        "criteria_agree".into(),
        json!(class_report.is_cut == cut_by_chars),
    );
    Ok(v)
}

fn cmd_classify(cli: &Cli, args: &ClassifyArgs) -> Result<ExitCode, Error> {
    let (name, group) = resolve_input(cli, &args.input)?;
    let report = full_report(&group, cli.enum_bound)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    if report["criteria_agree"] != json!(true) {
        eprintln!("DIAGNOSTIC: cut criteria disagree on {name}; dump above");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

struct CensusRow {
    order: u64,
    total: usize,
    cut: usize,
    rational: usize,
}

impl CensusRow {
    fn csv_line(&self) -> String {
        let pct = |k: usize| 100.0 * k as f64 / self.total as f64;
        format!(
            "{},{},{},{},{:.2},{:.2}",
            self.order,
            self.total,
            self.cut,
            self.rational,
            pct(self.cut),
            pct(self.rational)
        )
    }
}

fn census_rows(cat: &CatalogFile, orders: &[u64], bound: u64) -> Result<Vec<CensusRow>, Error> {
    let mut rows = Vec::new();
    for &order in orders {
        let total = cat.declared_total(order)?;
        let entries: Vec<&GroupCatalogEntry> = cat.entries_of_order(order);
        let reports: Vec<Result<(bool, bool), Error>> = entries
            .par_iter()
            .map(|e| {
                let g = catalog::realize(e)?;
                let t = ConjugacyClassTable::with_bound(&g, bound)?;
                let r = classify_from_table(&t);
                Ok((r.is_cut, r.is_rational_group))
            })
            .collect();
        let mut cut = 0;
        let mut rational = 0;
        for r in reports {
            let (c, q) = r?;
            cut += c as usize;
            rational += q as usize;
        }
        assert!(rational <= cut && cut <= total);
        rows.push(CensusRow {
            order,
            total,
            cut,
            rational,
        });
    }
    Ok(rows)
}

const CENSUS_HEADER: &str = "order,total,cut,rational,pct_cut,pct_rational";

fn cmd_census(cli: &Cli, args: &CensusArgs) -> Result<ExitCode, Error> {
    let cat = load_catalog(cli)?;
    let rows = census_rows(&cat, &args.orders, cli.enum_bound)?;
    let mut out = String::from(CENSUS_HEADER);
    out.push('\n');
    for row in &rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    print!("{out}");
    if let Some(path) = &args.csv {
        std::fs::write(path, &out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_chartab(cli: &Cli, input: &ClassifyInput) -> Result<ExitCode, Error> {
    let (name, group) = resolve_input(cli, input)?;
    let classes = ConjugacyClassTable::with_bound(&group, cli.enum_bound)?;
    let table = CharacterTable::from_classes(classes)?;
    let k = table.classes().n_classes();

    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "# {name}: order {}, {k} classes", group.order())?;
    let mut header = vec!["class".to_string()];
    header.extend((0..k).map(|j| format!("{}o{}", j + 1, table.classes().rep_orders()[j])));
    let mut grid: Vec<Vec<String>> = vec![header];
    let sizes: Vec<String> = std::iter::once("size".to_string())
        .chain(table.classes().sizes().iter().map(u64::to_string))
        .collect();
    grid.push(sizes);
    for r in 0..table.n_chars() {
        let mut row = vec![format!("X{}", r + 1)];
        row.extend((0..k).map(|j| table.value(r, j).render()));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=k)
        .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap())
        .collect();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        writeln!(stdout, "{}", line.join("  "))?;
    }
    if input.json {
        let chars: Vec<serde_json::Value> = (0..table.n_chars())
            .map(|r| {
                let field = character_field(&table, r);
                json!({
                    "degree": table.degrees()[r],
                    "field": field,
                    "values": table.row(r).iter().map(|v| json!({
                        "conductor": v.conductor(),
                        "coeffs": v.terms().map(|(e, c)| json!([e, c.to_string()]))
                            .collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({
            "group": name,
            "order": group.order(),
            "class_orders": table.classes().rep_orders(),
            "class_sizes": table.classes().sizes(),
            "characters": chars,
        });
        writeln!(stdout, "{}", serde_json::to_string(&doc).unwrap())?;
    }
    Ok(ExitCode::SUCCESS)
}

/// One verification outcome: JSON line plus gating flag.
struct SuiteOutcome {
    line: serde_json::Value,
    failed: bool,
}

fn outcome_from(result: theorems::TheoremCheckResult) -> SuiteOutcome {
    let failed = result.is_failure();
    SuiteOutcome {
        line: serde_json::to_value(&result).unwrap(),
        failed,
    }
}

fn catalog_groups(cat: &CatalogFile) -> Result<Vec<(String, PermutationGroup)>, Error> {
    cat.entries
        .iter()
        .map(|e| Ok((e.id.clone(), catalog::realize(e)?)))
        .collect()
}

fn suite_brauer(groups: &[(String, PermutationGroup)], bound: u64) -> Result<Vec<SuiteOutcome>, Error> {
    groups
        .par_iter()
        .map(|(id, g)| {
            let classes = ConjugacyClassTable::with_bound(g, bound)?;
            let report = classify_from_table(&classes);
            let table = CharacterTable::from_classes(classes)?;
            let real_chars = count_real_characters(&table);
            Ok(SuiteOutcome {
                failed: real_chars != report.n_real_classes,
                line: json!({
                    "theorem_id": "brauer-real-count",
                    "group_id": id,
                    "hypothesis_met": true,
                    "conclusion_holds": real_chars == report.n_real_classes,
                    "witness": { "n_real_chars": real_chars, "n_real_classes": report.n_real_classes },
                }),
            })
        })
        .collect()
}

fn suite_thm31(groups: &[(String, PermutationGroup)], bound: u64) -> Result<Vec<SuiteOutcome>, Error> {
    groups
        .par_iter()
        .map(|(id, g)| {
            let classes = ConjugacyClassTable::with_bound(g, bound)?;
            let report = classify_from_table(&classes);
            let table = CharacterTable::from_classes(classes)?;
            let rational_chars = count_rational_characters(&table);
            let holds = rational_chars == report.n_rational_classes;
            Ok(SuiteOutcome {
                failed: report.is_cut && !holds,
                line: json!({
                    "theorem_id": "cut-rational-count",
                    "group_id": id,
                    "hypothesis_met": report.is_cut,
                    "conclusion_holds": holds,
                    "witness": { "n_rational_chars": rational_chars,
                                 "n_rational_classes": report.n_rational_classes },
                }),
            })
        })
        .collect()
}

fn suite_prop_equiv(groups: &[(String, PermutationGroup)], bound: u64) -> Result<Vec<SuiteOutcome>, Error> {
    groups
        .par_iter()
        .map(|(id, g)| {
            let classes = ConjugacyClassTable::with_bound(g, bound)?;
            let pmap = PowerMap::new(&classes);
            let by_classes = is_cut_by_classes(&classes, &pmap).0;
            let table = CharacterTable::from_classes(classes)?;
            let by_chars = is_cut_by_characters(&table);
            Ok(SuiteOutcome {
                failed: by_classes != by_chars,
                line: json!({
                    "theorem_id": "cut-criteria-equivalence",
                    "group_id": id,
                    "hypothesis_met": true,
                    "conclusion_holds": by_classes == by_chars,
                    "witness": { "by_classes": by_classes, "by_characters": by_chars },
                }),
            })
        })
        .collect()
}

fn suite_class2(groups: &[(String, PermutationGroup)]) -> Result<Vec<SuiteOutcome>, Error> {
    groups
        .par_iter()
        .map(|(id, g)| Ok(outcome_from(theorems::verify_class2_criterion(g, id)?)))
        .collect()
}

fn suite_sylow3(groups: &[(String, PermutationGroup)]) -> Result<Vec<SuiteOutcome>, Error> {
    let mut out: Vec<SuiteOutcome> = groups
        .par_iter()
        .map(|(id, g)| {
            let mut v = vec![outcome_from(theorems::verify_lemma_3local(g, id)?)];
            for p in [2, 3] {
                v.push(outcome_from(theorems::verify_center_exponent_lemma(g, p, id)?));
            }
            v.push(outcome_from(theorems::verify_plength1_prop(g, id)?));
            Ok::<_, Error>(v)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    // Exploratory, non-gating.
    let five = theorems::exploratory_5local_counterexample()?;
    out.push(SuiteOutcome {
        line: serde_json::to_value(&five).unwrap(),
        failed: false,
    });
    Ok(out)
}

fn suite_simple() -> Result<Vec<SuiteOutcome>, Error> {
    Ok(theorems::verify_simple_verdicts()?
        .into_iter()
        .map(outcome_from)
        .collect())
}

const TABLE1_EXPECTED: [(&str, usize); 7] = [
    ("A7", 1),
    ("A8", 1),
    ("A9", 3),
    ("A12", 3),
    ("L2(7)", 1),
    ("M11", 1),
    ("M12", 2),
];

fn suite_table1() -> Result<Vec<SuiteOutcome>, Error> {
    let rows = theorems::table1_sylow3_classes()?;
    Ok(rows
        .into_iter()
        .map(|row| {
            let expected = TABLE1_EXPECTED
                .iter()
                .find(|(n, _)| *n == row.group)
                .map(|(_, c)| *c);
            let holds = expected == Some(row.nilpotency_class) && row.sylow3_cut;
            SuiteOutcome {
                failed: !holds,
                line: json!({
                    "theorem_id": "table1-sylow3-class",
                    "group_id": row.group,
                    "hypothesis_met": true,
                    "conclusion_holds": holds,
                    "witness": { "nilpotency_class": row.nilpotency_class,
                                 "expected": expected,
                                 "sylow3_order": row.sylow3_order,
                                 "sylow3_cut": row.sylow3_cut },
                }),
            }
        })
        .collect())
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, Error> {
    let needs_catalog = matches!(
        args.suite.as_str(),
        "brauer" | "thm31" | "prop-equiv" | "class2" | "sylow3" | "all"
    );
    let groups = if needs_catalog {
        catalog_groups(&load_catalog(cli)?)?
    } else {
        Vec::new()
    };
    let bound = cli.enum_bound;
    let mut outcomes = Vec::new();
    let run = |suite: &str, outcomes: &mut Vec<SuiteOutcome>| -> Result<(), Error> {
        match suite {
            "brauer" => outcomes.extend(suite_brauer(&groups, bound)?),
            "thm31" => outcomes.extend(suite_thm31(&groups, bound)?),
            "prop-equiv" => outcomes.extend(suite_prop_equiv(&groups, bound)?),
            "class2" => outcomes.extend(suite_class2(&groups)?),
            "sylow3" => outcomes.extend(suite_sylow3(&groups)?),
            "simple" => outcomes.extend(suite_simple()?),
            "table1" => outcomes.extend(suite_table1()?),
            other => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!(
                        "unknown suite {other:?}; expected one of brauer, thm31, \
                         prop-equiv, class2, sylow3, simple, table1, all"
                    ),
                })
            }
        }
        Ok(())
    };
    if args.suite == "all" {
        for s in ["brauer", "thm31", "prop-equiv", "class2", "sylow3", "simple", "table1"] {
            run(s, &mut outcomes)?;
        }
    } else {
        run(&args.suite, &mut outcomes)?;
    }
    let mut stdout = std::io::stdout().lock();
    let mut any_failed = false;
    for o in &outcomes {
        writeln!(stdout, "{}", serde_json::to_string(&o.line).unwrap())?;
        any_failed |= o.failed;
    }
    drop(stdout);
    if any_failed {
        eprintln!("verification FAILED");
        Ok(ExitCode::from(1))
    } else {
        eprintln!("verification passed: {} checks", outcomes.len());
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_figure_data(cli: &Cli, args: &FigureArgs) -> Result<ExitCode, Error> {
    let cat = load_catalog(cli)?;
    let orders: Vec<u64> = (1..=args.max_order).collect();
    for &o in &orders {
        // Refuse incomplete coverage up front (no silent partial data).
        cat.declared_total(o)?;
    }
    let rows = census_rows(&cat, &orders, cli.enum_bound)?;
    let mut out = String::from("order,pct_cut_upto,pct_rational_upto\n");
    let (mut total, mut cut, mut rational) = (0usize, 0usize, 0usize);
    for row in &rows {
        total += row.total;
        cut += row.cut;
        rational += row.rational;
        out.push_str(&format!(
            "{},{:.2},{:.2}\n",
            row.order,
            100.0 * cut as f64 / total as f64,
            100.0 * rational as f64 / total as f64
        ));
    }
    print!("{out}");
    if let Some(path) = &args.csv {
        std::fs::write(path, &out)?;
    }
    Ok(ExitCode::SUCCESS)
}
