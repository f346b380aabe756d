//! Constructors for standard group families, named groups, and the
//! line-oriented small-group catalog file.
//!
//! # Catalog file grammar
//!
//! UTF-8, line oriented; `#` starts a comment; blank lines ignored.
//!
//! ```text
//! format_version 1
//! complete <order> <count>          # order section is complete
//! entry <id> order=<n> [name=<s>] [tags=<t1,t2,...>] <construction>
//! ```
//!
//! A construction is one of
//!
//! ```text
//! perm <degree> <gen>;<gen>;...     # cycle notation, no spaces
//! pres <presentation text>          # `gens: ...; rels: ...`
//! expr <expression>                 # tiny prefix grammar, see below
//! ```
//!
//! Expressions: `C(n)` cyclic, `S(n)` symmetric, `A(n)` alternating,
//! `D(n)` dihedral of order n, `Q(n)` dicyclic of order n, `E(p,k)`
//! elementary abelian, `AB(n1,...,nk)` abelian with the given factors,
//! `DP(x,y)` direct product.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use crate::error::{Error, Result};
use crate::fpgroups::{perm_rep, Presentation};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

// ------------------------------------------------------------------
// Family constructors
// ------------------------------------------------------------------

pub fn cyclic(n: u64) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::InvalidConstructor("cyclic(0)".into()));
    }
    if n == 1 {
        return Ok(PermutationGroup::trivial(1));
    }
    let m = n as usize;
    let cycle: Vec<u16> = (0..m).map(|i| ((i + 1) % m) as u16).collect();
    PermutationGroup::from_generators(vec![Permutation::from_images(cycle)?])
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(factors: &[u64]) -> Result<PermutationGroup> {
    let mut g = PermutationGroup::trivial(1);
    for &f in factors {
        g = direct_product(&g, &cyclic(f)?)?;
    }
    Ok(g)
}

pub fn elementary_abelian(p: u64, k: u32) -> Result<PermutationGroup> {
    if !crate::chartab::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    abelian(&vec![p; k as usize])
}

/// Dihedral group of order `n` = 2m (m ≥ 1).
pub fn dihedral_of_order(n: u64) -> Result<PermutationGroup> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidConstructor(format!(
            "dihedral_of_order({n}): order must be even and positive"
        )));
    }
    let m = (n / 2) as usize;
    match m {
        1 => cyclic(2),
        2 => {
            let a = Permutation::parse("(1,2)", 4)?;
            let b = Permutation::parse("(3,4)", 4)?;
            PermutationGroup::from_generators(vec![a, b])
        }
        _ => {
            let rotation: Vec<u16> = (0..m).map(|i| ((i + 1) % m) as u16).collect();
            // Reflection fixing point 1: i ↦ m + 2 - i (1-based).
            let reflection: Vec<u16> = (0..m)
                .map(|i| if i == 0 { 0 } else { (m - i) as u16 })
                .collect();
            PermutationGroup::from_generators(vec![
                Permutation::from_images(rotation)?,
                Permutation::from_images(reflection)?,
            ])
        }
    }
}

/// Dicyclic group of order `n` = 4m (m ≥ 1): ⟨a, b | a^{2m} = 1,
/// b² = a^m, b⁻¹ a b = a⁻¹⟩. Q(8) is the quaternion group.
pub fn dicyclic_of_order(n: u64) -> Result<PermutationGroup> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::InvalidConstructor(format!(
            "dicyclic_of_order({n}): order must be a positive multiple of 4"
        )));
    }
    let m = n / 4;
    let text = format!(
        "gens: a b; rels: a^{}, b^2*(a^{})^-1, b^-1*a*b*a",
        2 * m,
        m
    );
    let pres = Presentation::parse(&text)?;
    let g = perm_rep(&pres)?;
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

pub fn symmetric(n: u64) -> Result<PermutationGroup> {
    match n {
        0 => Err(Error::InvalidConstructor("symmetric(0)".into())),
        1 => Ok(PermutationGroup::trivial(1)),
        _ => {
            let m = n as usize;
            let transposition = Permutation::parse("(1,2)", m)?;
            let cycle: Vec<u16> = (0..m).map(|i| ((i + 1) % m) as u16).collect();
            PermutationGroup::from_generators(vec![
                transposition,
                Permutation::from_images(cycle)?,
            ])
        }
    }
}

pub fn alternating(n: u64) -> Result<PermutationGroup> {
    match n {
        0 => Err(Error::InvalidConstructor("alternating(0)".into())),
        1 | 2 => Ok(PermutationGroup::trivial(n as usize)),
        _ => {
            let m = n as usize;
            let gens: Vec<Permutation> = (1..=m - 2)
                .map(|i| Permutation::parse(&format!("({},{},{})", i, i + 1, i + 2), m))
                .collect::<Result<_>>()?;
            PermutationGroup::from_generators(gens)
        }
    }
}

/// Direct product acting on disjoint point sets.
pub fn direct_product(a: &PermutationGroup, b: &PermutationGroup) -> Result<PermutationGroup> {
    let da = a.degree();
    let db = b.degree();
    let degree = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, item) in images.iter_mut().enumerate().take(da) {
            *item = g.image(i) as u16;
        }
        gens.push(Permutation::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in 0..db {
            images[da + i] = (da + g.image(i)) as u16;
        }
        gens.push(Permutation::from_images(images)?);
    }
    let product = PermutationGroup::from_generators_with_degree(gens, degree.max(1))?;
    debug_assert_eq!(product.order(), a.order() * b.order());
    Ok(product)
}

/// Semidirect product N ⋊ H. The action maps the i-th generator of H
/// to an automorphism of N given by `gen_images[i]`: the images of N's
/// generators, in order. The action must preserve all relations of N
/// (i.e. each image list must extend to an automorphism) or
/// [`Error::InvalidAction`] is returned. The product acts on the
/// points of the regular representation of N extended by H's points.
pub fn semidirect_product(
    n: &PermutationGroup,
    h: &PermutationGroup,
    gen_images: &[Vec<Permutation>],
) -> Result<PermutationGroup> {
    if gen_images.len() != h.generators().len() {
        return Err(Error::InvalidAction);
    }
    let elements: Vec<Permutation> = {
        let mut v: Vec<Permutation> = n.elements()?.collect();
        v.sort();
        v
    };
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let size = elements.len();
    let dh = h.degree();
    let degree = size + dh;

    let mut product_gens = Vec::new();
    // Right regular representation of N on points 1..=|N|.
    for g in n.generators() {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, x) in elements.iter().enumerate() {
            images[i] = *index
                .get(&x.compose(g))
                .expect("closure of the element list") as u16;
        }
        product_gens.push(Permutation::from_images(images)?);
    }
    // One generator per H-generator: the action automorphism on N's
    // points combined with the H-generator on its own points.
    for (hg, imgs) in h.generators().iter().zip(gen_images) {
        let phi = automorphism_point_map(n, &elements, &index, imgs)?;
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, item) in phi.iter().enumerate() {
            images[i] = *item as u16;
        }
        for i in 0..dh {
            images[size + i] = (size + hg.image(i)) as u16;
        }
        product_gens.push(Permutation::from_images(images)?);
    }
    let product = PermutationGroup::from_generators_with_degree(product_gens, degree)?;
    let expected = n.order() * h.order();
    if product.order() != expected {
        // The generator images did not define a homomorphism from H.
        return Err(Error::InvalidAction);
    }
    Ok(product)
}

/// The permutation of N's sorted-element points induced by the
/// endomorphism sending N's generators to `gen_images`, or
/// InvalidAction if the images do not extend to an automorphism.
fn automorphism_point_map(
    n: &PermutationGroup,
    elements: &[Permutation],
    index: &HashMap<&Permutation, usize>,
    imgs: &[Permutation],
) -> Result<Vec<usize>> {
    let gens = n.generators();
    if imgs.len() != gens.len() {
        return Err(Error::InvalidAction);
    }
    for im in imgs {
        if !n.contains(im)? {
            return Err(Error::InvalidAction);
        }
    }
    let size = elements.len();
    let identity_idx = *index.get(&n.identity()).expect("identity is listed");
    let mut phi: Vec<Option<usize>> = vec![None; size];
    let mut phi_elt: Vec<Option<Permutation>> = vec![None; size];
    phi[identity_idx] = Some(identity_idx);
    phi_elt[identity_idx] = Some(n.identity());
    // Breadth-first closure along right multiplication by generators.
    let mut queue = vec![identity_idx];
    while let Some(i) = queue.pop() {
        let x_img = phi_elt[i].clone().unwrap();
        for (g, g_img) in gens.iter().zip(imgs) {
            let y = elements[i].compose(g);
            let j = *index.get(&y).unwrap();
            let y_img = x_img.compose(g_img);
            match &phi_elt[j] {
                Some(existing) => {
                    if *existing != y_img {
                        return Err(Error::InvalidAction);
                    }
                }
                None => {
                    let k = *index.get(&y_img).unwrap();
                    phi_elt[j] = Some(y_img);
                    phi[j] = Some(k);
                    queue.push(j);
                }
            }
        }
    }
    // Full homomorphism check (not just tree edges) plus bijectivity.
    let mut seen = vec![false; size];
    for i in 0..size {
        let xi = phi[i].ok_or(Error::InvalidAction)?;
        if seen[xi] {
            return Err(Error::InvalidAction);
        }
        seen[xi] = true;
        for (g, g_img) in gens.iter().zip(imgs) {
            let j = *index.get(&elements[i].compose(g)).unwrap();
            let expected = phi_elt[i].as_ref().unwrap().compose(g_img);
            if *phi_elt[j].as_ref().unwrap() != expected {
                return Err(Error::InvalidAction);
            }
        }
    }
    Ok(phi.into_iter().map(|x| x.unwrap()).collect())
}

// ------------------------------------------------------------------
// Named groups
// ------------------------------------------------------------------

/// PSL(2,7) ≃ GL(3,2) acting on the projective line over F₇
/// (point 8 is ∞), order 168.
pub fn psl_2_7() -> PermutationGroup {
    let a = Permutation::parse("(1,2,3,4,5,6,7)", 8).unwrap();
    // x ↦ -1/x.
    let b = Permutation::parse("(1,8)(2,7)(3,4)(5,6)", 8).unwrap();
    let g = PermutationGroup::from_generators(vec![a, b]).unwrap();
    assert_eq!(g.order(), 168);
    g
}

/// The Mathieu group M₁₁ on 11 points, order 7920.
pub fn mathieu_11() -> PermutationGroup {
    let a = Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)", 11).unwrap();
    let b = Permutation::parse("(3,7,11,8)(4,10,5,6)", 11).unwrap();
    let g = PermutationGroup::from_generators(vec![a, b]).unwrap();
    assert_eq!(g.order(), 7920);
    g
}

/// The Mathieu group M₁₂ on 12 points, order 95040.
pub fn mathieu_12() -> PermutationGroup {
    let a = Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)", 12).unwrap();
    let b = Permutation::parse("(3,7,11,8)(4,10,5,6)", 12).unwrap();
    let c = Permutation::parse("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12).unwrap();
    let g = PermutationGroup::from_generators(vec![a, b, c]).unwrap();
    assert_eq!(g.order(), 95040);
    g
}

const PRES_32_42: &str =
    "gens: a b c; rels: a^2, b^2, c^8, [b,c], a^-1*b*a*(b*c^4)^-1, a^-1*c*a*(c^3)^-1";
const PRES_32_9: &str =
    "gens: a b c; rels: a^2, b^2, c^8, [b,c], [a,b], a^-1*c*a*(b*c^3)^-1";
const PRES_81_8: &str =
    "gens: a b c; rels: a^9, b^3, c^3, [a,b], c^-1*a*c*(a*b)^-1, c^-1*b*c*(a^3*b)^-1";

/// The group with catalog id 32.42: a central extension of C₄ by the
/// dihedral group of order 8. Real and quadratic rational but not cut.
pub fn group_32_42() -> PermutationGroup {
    let g = perm_rep(&Presentation::parse(PRES_32_42).unwrap()).unwrap();
    assert_eq!(g.order(), 32);
    g
}

/// The group with catalog id 32.9: an extension of a Klein four group
/// by the dihedral group of order 8.
pub fn group_32_9() -> PermutationGroup {
    let g = perm_rep(&Presentation::parse(PRES_32_9).unwrap()).unwrap();
    assert_eq!(g.order(), 32);
    g
}

/// The group with catalog id 81.8, isomorphic to (C₉ × C₃) ⋊ C₃: all
/// quotient centers have exponent 3, yet the group is not cut.
pub fn group_81_8() -> PermutationGroup {
    let g = perm_rep(&Presentation::parse(PRES_81_8).unwrap()).unwrap();
    assert_eq!(g.order(), 81);
    g
}

// ------------------------------------------------------------------
// Catalog file
// ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Permutation generators in cycle notation on `degree` points.
    Permutations { degree: usize, gens: Vec<String> },
    /// A presentation in the `gens: ...; rels: ...` grammar.
    Presentation(String),
    /// A constructor expression such as `DP(C(4),S(3))`.
    Expression(String),
}

#[derive(Debug, Clone)]
pub struct GroupCatalogEntry {
    pub id: String,
    pub order: u64,
    pub name: Option<String>,
    pub tags: BTreeSet<String>,
    pub construction: Construction,
}

#[derive(Debug, Clone)]
pub struct CatalogFile {
    pub format_version: u32,
    /// Orders whose section is complete, with the declared class count.
    pub complete: BTreeMap<u64, usize>,
    pub entries: Vec<GroupCatalogEntry>,
}

impl CatalogFile {
    pub fn entries_of_order(&self, order: u64) -> Vec<&GroupCatalogEntry> {
        self.entries.iter().filter(|e| e.order == order).collect()
    }

    pub fn entry(&self, id: &str) -> Result<&GroupCatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// The declared class count for a complete order.
    pub fn declared_total(&self, order: u64) -> Result<usize> {
        self.complete
            .get(&order)
            .copied()
            .ok_or(Error::IncompleteOrder(order))
    }
}

/// Realize an entry as a permutation group and validate its order.
pub fn realize(entry: &GroupCatalogEntry) -> Result<PermutationGroup> {
    let g = match &entry.construction {
        Construction::Permutations { degree, gens } => {
            let perms: Vec<Permutation> = gens
                .iter()
                .map(|s| Permutation::parse(s, *degree))
                .collect::<Result<_>>()?;
            PermutationGroup::from_generators_with_degree(perms, *degree)?
        }
        Construction::Presentation(text) => perm_rep(&Presentation::parse(text)?)?,
        Construction::Expression(text) => parse_expression(text)?,
    };
    if g.order() != entry.order {
        return Err(Error::OrderMismatch {
            id: entry.id.clone(),
            got: g.order(),
            want: entry.order,
        });
    }
    Ok(g)
}

/// Evaluate a constructor expression (`C`, `S`, `A`, `D`, `Q`, `E`,
/// `AB`, `DP`).
pub fn parse_expression(text: &str) -> Result<PermutationGroup> {
    let mut p = ExprParser {
        bytes: text.as_bytes(),
        pos: 0,
        text,
    };
    let g = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::InvalidConstructor(format!(
            "trailing input at byte {} in {text:?}",
            p.pos
        )));
    }
    Ok(g)
}

struct ExprParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl ExprParser<'_> {
    fn fail(&self, what: &str) -> Error {
        Error::InvalidConstructor(format!("{what} at byte {} in {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&format!("expected {:?}", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.fail("number out of range"))
    }

    fn head(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected a constructor name"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn expression(&mut self) -> Result<PermutationGroup> {
        let head = self.head()?;
        self.expect(b'(')?;
        let g = match head.as_str() {
            "C" | "S" | "A" | "D" | "Q" => {
                let n = self.number()?;
                match head.as_str() {
                    "C" => cyclic(n)?,
                    "S" => symmetric(n)?,
                    "A" => alternating(n)?,
                    "D" => dihedral_of_order(n)?,
                    _ => dicyclic_of_order(n)?,
                }
            }
            "E" => {
                let p = self.number()?;
                self.expect(b',')?;
                let k = self.number()?;
                elementary_abelian(p, k as u32)?
            }
            "AB" => {
                let mut factors = vec![self.number()?];
                loop {
                    self.skip_ws();
                    if self.pos < self.bytes.len() && self.bytes[self.pos] == b',' {
                        self.pos += 1;
                        factors.push(self.number()?);
                    } else {
                        break;
                    }
                }
                abelian(&factors)?
            }
            "DP" => {
                let a = self.expression()?;
                self.expect(b',')?;
                let b = self.expression()?;
                direct_product(&a, &b)?
            }
            other => return Err(self.fail(&format!("unknown constructor {other:?}"))),
        };
        self.expect(b')')?;
        Ok(g)
    }
}

/// Parse and validate a catalog file. Validation is hard: every entry
/// is realized and its order checked, and every complete order section
/// must contain exactly the declared number of entries.
pub fn load_catalog(path: &Path) -> Result<CatalogFile> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog(&text)
}

pub fn parse_catalog(text: &str) -> Result<CatalogFile> {
    let mut format_version: Option<u32> = None;
    let mut complete: BTreeMap<u64, usize> = BTreeMap::new();
    let mut entries: Vec<GroupCatalogEntry> = Vec::new();
    let mut ids: BTreeSet<String> = BTreeSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: lineno, message };
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "format_version" => {
                let v: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("format_version needs an integer".into()))?;
                if v != 1 {
                    return Err(err(format!("unsupported format_version {v}")));
                }
                format_version = Some(v);
            }
            "complete" => {
                let order: u64 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("complete needs an order".into()))?;
                let count: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("complete needs a count".into()))?;
                complete.insert(order, count);
            }
            "entry" => {
                let entry = parse_entry_line(line, lineno)?;
                if !ids.insert(entry.id.clone()) {
                    return Err(err(format!("duplicate id {:?}", entry.id)));
                }
                entries.push(entry);
            }
            other => return Err(err(format!("unknown directive {other:?}"))),
        }
    }

    let format_version = format_version.ok_or(Error::Parse {
        line: 0,
        message: "missing format_version".into(),
    })?;
    for (&order, &want) in &complete {
        let got = entries.iter().filter(|e| e.order == order).count();
        if got != want {
            return Err(Error::SectionCountMismatch { order, want, got });
        }
    }
    // Hard validation: every entry realizes to its declared order.
    for entry in &entries {
        realize(entry)?;
    }
    Ok(CatalogFile {
        format_version,
        complete,
        entries,
    })
}

fn parse_entry_line(line: &str, lineno: usize) -> Result<GroupCatalogEntry> {
    let err = |message: String| Error::Parse { line: lineno, message };
    let mut rest = line
        .strip_prefix("entry")
        .ok_or_else(|| err("not an entry line".into()))?
        .trim_start();
    let take_word = |s: &mut &str| -> Option<String> {
        let trimmed = s.trim_start();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let word = trimmed[..end].to_string();
        *s = &trimmed[end..];
        Some(word)
    };
    let id = take_word(&mut rest).ok_or_else(|| err("entry needs an id".into()))?;
    let mut order: Option<u64> = None;
    let mut name: Option<String> = None;
    let mut tags: BTreeSet<String> = BTreeSet::new();
    loop {
        let save = rest;
        let word = take_word(&mut rest).ok_or_else(|| err("entry needs a construction".into()))?;
        if let Some(v) = word.strip_prefix("order=") {
            order = Some(v.parse().map_err(|_| err(format!("bad order {v:?}")))?);
        } else if let Some(v) = word.strip_prefix("name=") {
            name = Some(v.to_string());
        } else if let Some(v) = word.strip_prefix("tags=") {
            tags = v.split(',').map(str::to_string).collect();
        } else {
            let payload = rest.trim().to_string();
            let construction = match word.as_str() {
                "perm" => {
                    let mut parts = payload.split_whitespace();
                    let degree: usize = parts
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| err("perm needs a degree".into()))?;
                    let gens_field = parts
                        .next()
                        .ok_or_else(|| err("perm needs generators".into()))?;
                    if parts.next().is_some() {
                        return Err(err("trailing tokens after perm generators".into()));
                    }
                    Construction::Permutations {
                        degree,
                        gens: gens_field.split(';').map(str::to_string).collect(),
                    }
                }
                "pres" => Construction::Presentation(payload),
                "expr" => Construction::Expression(payload),
                other => {
                    let _ = save;
                    return Err(err(format!("unknown construction kind {other:?}")));
                }
            };
            let order = order.ok_or_else(|| err("entry needs order=<n>".into()))?;
            return Ok(GroupCatalogEntry {
                id,
                order,
                name,
                tags,
                construction,
            });
        }
    }
}

/// Serialize a catalog file (used by the generator binary).
pub fn render_catalog(file: &CatalogFile, header_comments: &[&str]) -> String {
    let mut out = String::new();
    for c in header_comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("format_version {}\n", file.format_version));
    for (order, count) in &file.complete {
        out.push_str(&format!("complete {order} {count}\n"));
    }
    for e in &file.entries {
        out.push_str(&format!("entry {} order={}", e.id, e.order));
        if let Some(name) = &e.name {
            out.push_str(&format!(" name={name}"));
        }
        if !e.tags.is_empty() {
            let tags: Vec<&str> = e.tags.iter().map(String::as_str).collect();
            out.push_str(&format!(" tags={}", tags.join(",")));
        }
        match &e.construction {
            Construction::Permutations { degree, gens } => {
                out.push_str(&format!(" perm {degree} {}", gens.join(";")));
            }
            Construction::Presentation(p) => out.push_str(&format!(" pres {p}")),
            Construction::Expression(x) => out.push_str(&format!(" expr {x}")),
        }
        out.push('\n');
    }
    out
}
