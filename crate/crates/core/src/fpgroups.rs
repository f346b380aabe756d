//! Finitely presented groups: a small presentation grammar and HLT
//! coset enumeration, used to realize presented groups as permutation
//! groups via their regular representation.
//!
//! Presentation text format:
//!
//! ```text
//! gens: a b c; rels: a^2, b^2, c^8, [b,c], a^-1*b*a*(b*c^4)^-1
//! ```
//!
//! Words use `*` for products, `^` for integer powers (negative for
//! inverses), parentheses for grouping, and `[x,y]` for the commutator
//! x⁻¹y⁻¹xy.

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Default bound on the number of cosets defined during enumeration.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

/// A word over the generators: signed 1-based indices, negative for
/// inverses.
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Parse the `gens: ...; rels: ...` format.
    pub fn parse(text: &str) -> Result<Presentation> {
        Parser::new(text).parse()
    }

    pub fn n_generators(&self) -> usize {
        self.generator_names.len()
    }
}

// ---------------------------------------------------------------
// Parsing.

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    names: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text: text.as_bytes(),
            pos: 0,
            names: Vec::new(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let line = 1 + self.text[..self.pos.min(self.text.len())]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        Error::Parse {
            line,
            message: format!("at byte {}: {}", self.pos, message.into()),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            Ok(())
        } else {
            Err(self.error(format!("expected '{kw}'")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len()
            && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an identifier"));
        }
        Ok(String::from_utf8_lossy(&self.text[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected an integer"))
    }

    fn parse(mut self) -> Result<Presentation> {
        self.keyword("gens:")?;
        loop {
            match self.peek() {
                Some(b';') | None => break,
                _ => {
                    let name = self.ident()?;
                    if self.names.contains(&name) {
                        return Err(self.error(format!("duplicate generator '{name}'")));
                    }
                    self.names.push(name);
                }
            }
        }
        if self.names.is_empty() {
            return Err(self.error("a presentation needs at least one generator"));
        }
        self.expect(b';')?;
        self.keyword("rels:")?;
        let mut relators = Vec::new();
        if self.peek().is_some() {
            loop {
                let w = self.word()?;
                if w.is_empty() {
                    return Err(self.error("empty relator"));
                }
                relators.push(free_reduce(w));
                if !self.eat(b',') {
                    break;
                }
            }
        }
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.error("trailing input"));
        }
        Ok(Presentation {
            generator_names: self.names,
            relators,
        })
    }

    /// word := factor (('*')? factor)*
    fn word(&mut self) -> Result<Word> {
        let mut out = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    out.extend(self.factor()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'[' || c == b'_' => {
                    out.extend(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(out)
    }

    /// factor := primary ('^' integer)?
    fn factor(&mut self) -> Result<Word> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            Ok(word_pow(&base, e))
        } else {
            Ok(base)
        }
    }

    /// primary := generator | '(' word ')' | '[' word ',' word ']'
    fn primary(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(b',')?;
                let y = self.word()?;
                self.expect(b']')?;
                let mut w = word_inverse(&x);
                w.extend(word_inverse(&y));
                w.extend(x);
                w.extend(y);
                Ok(w)
            }
            _ => {
                let name = self.ident()?;
                let idx = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| self.error(format!("unknown generator '{name}'")))?;
                Ok(vec![idx as i32 + 1])
            }
        }
    }
}

pub fn word_inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&g| -g).collect()
}

fn word_pow(w: &[i32], e: i64) -> Word {
    let base: Word = if e < 0 { word_inverse(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
    for _ in 0..e.unsigned_abs() {
        out.extend(&base);
    }
    out
}

fn free_reduce(w: Word) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

// ---------------------------------------------------------------
// Coset enumeration (HLT with a deduction stack and coincidence
// merging via union-find; deterministic scan order).

#[derive(Debug, Clone)]
pub struct CosetTable {
    /// rows[coset][column]; column 2g for generator g+1, 2g+1 for its
    /// inverse. Complete tables have no gaps.
    pub rows: Vec<Vec<u32>>,
    pub n_cosets: usize,
    pub complete: bool,
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    n_live: usize,
    max_cosets: usize,
    queue: Vec<(u32, u32)>,
}

fn column(g: i32) -> usize {
    if g > 0 {
        2 * (g as usize - 1)
    } else {
        2 * ((-g) as usize - 1) + 1
    }
}

fn inverse_column(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn new(n_gens: usize, max_cosets: usize) -> Self {
        Enumerator {
            table: vec![vec![UNDEF; 2 * n_gens]],
            parent: vec![0],
            n_live: 1,
            max_cosets,
            queue: Vec::new(),
        }
    }

    fn rep(&mut self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            let up = self.parent[self.parent[a as usize] as usize];
            self.parent[a as usize] = up;
            a = up;
        }
        a
    }

    fn define(&mut self, a: u32, c: usize) -> Result<u32> {
        if self.n_live >= self.max_cosets {
            return Err(Error::CosetBoundExceeded(self.max_cosets));
        }
        let b = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.table[0].len()]);
        self.parent.push(b);
        self.n_live += 1;
        self.table[a as usize][c] = b;
        self.table[b as usize][inverse_column(c)] = a;
        Ok(b)
    }

    /// Record a·c = b, merging cosets when it contradicts the table.
    fn deduce(&mut self, a: u32, c: usize, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        let existing = self.table[a as usize][c];
        if existing == UNDEF {
            self.table[a as usize][c] = b;
            let back = self.table[b as usize][inverse_column(c)];
            if back == UNDEF {
                self.table[b as usize][inverse_column(c)] = a;
            } else if self.rep(back) != a {
                self.queue.push((back, a));
                self.process_coincidences();
            }
        } else if self.rep(existing) != b {
            self.queue.push((existing, b));
            self.process_coincidences();
        }
    }

    fn process_coincidences(&mut self) {
        while let Some((x, y)) = self.queue.pop() {
            let x = self.rep(x);
            let y = self.rep(y);
            if x == y {
                continue;
            }
            // Keep the smaller index as the representative.
            let (keep, drop) = if x < y { (x, y) } else { (y, x) };
            self.parent[drop as usize] = keep;
            self.n_live -= 1;
            for c in 0..self.table[0].len() {
                let d = self.table[drop as usize][c];
                if d == UNDEF {
                    continue;
                }
                let d = self.rep(d);
                let k = self.table[keep as usize][c];
                if k == UNDEF {
                    self.table[keep as usize][c] = d;
                    // Backward entry of d may point at drop; fix it.
                    let back = self.table[d as usize][inverse_column(c)];
                    if back == UNDEF || self.rep(back) == drop {
                        self.table[d as usize][inverse_column(c)] = keep;
                    }
                } else if self.rep(k) != d {
                    self.queue.push((k, d));
                }
            }
        }
    }

    /// Scan relator `w` from coset `a`, filling gaps (HLT style).
    fn scan_and_fill(&mut self, a: u32, w: &[i32]) -> Result<()> {
        let a = self.rep(a);
        // Forward pass.
        let mut f = a;
        let mut i = 0;
        while i < w.len() {
            let c = column(w[i]);
            let f2 = self.table[f as usize][c];
            if f2 == UNDEF {
                break;
            }
            f = self.rep(f2);
            i += 1;
        }
        if i == w.len() {
            if f != a {
                self.queue.push((f, a));
                self.process_coincidences();
            }
            return Ok(());
        }
        // Backward pass, stopping before it would cross the forward
        // stuck position.
        let mut b = a;
        let mut j = w.len();
        while j > i + 1 {
            let c = inverse_column(column(w[j - 1]));
            let b2 = self.table[b as usize][c];
            if b2 == UNDEF {
                break;
            }
            b = self.rep(b2);
            j -= 1;
        }
        if j == i + 1 {
            self.deduce(f, column(w[i]), b);
            return Ok(());
        }
        // Fill the gap with new cosets, then close.
        while j > i + 1 {
            let c = column(w[i]);
            let nf = self.define(f, c)?;
            f = nf;
            i += 1;
        }
        self.deduce(f, column(w[i]), b);
        Ok(())
    }

    fn is_live(&mut self, a: u32) -> bool {
        self.rep(a) == a
    }
}

/// Enumerate the cosets of the subgroup generated by `subgroup_words`
/// in the presented group.
pub fn coset_enumeration(
    pres: &Presentation,
    subgroup_words: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::CosetBoundExceeded(0));
    }
    let mut e = Enumerator::new(pres.n_generators(), max_cosets);
    for w in subgroup_words {
        e.scan_and_fill(0, w)?;
    }
    let mut a = 0u32;
    while (a as usize) < e.table.len() {
        if e.is_live(a) {
            for r in &pres.relators {
                if !e.is_live(a) {
                    break;
                }
                e.scan_and_fill(a, r)?;
            }
            // Fill any remaining empty entries of this row so the
            // final table is complete.
            if e.is_live(a) {
                let width = e.table[0].len();
                for c in 0..width {
                    if !e.is_live(a) {
                        break;
                    }
                    let r = e.rep(a);
                    if e.table[r as usize][c] == UNDEF {
                        e.define(r, c)?;
                    }
                }
            }
        }
        a += 1;
    }
    // Compress to live cosets.
    let total = e.table.len() as u32;
    let mut new_index = vec![UNDEF; total as usize];
    let mut n = 0u32;
    for i in 0..total {
        if e.rep(i) == i {
            new_index[i as usize] = n;
            n += 1;
        }
    }
    let mut rows = Vec::with_capacity(n as usize);
    let mut complete = true;
    for i in 0..total {
        if e.rep(i) != i {
            continue;
        }
        let row: Vec<u32> = (0..e.table[0].len())
            .map(|c| {
                let t = e.table[i as usize][c];
                if t == UNDEF {
                    complete = false;
                    UNDEF
                } else {
                    new_index[e.rep(t) as usize]
                }
            })
            .collect();
        rows.push(row);
    }
    Ok(CosetTable {
        n_cosets: rows.len(),
        rows,
        complete,
    })
}

/// Regular permutation representation: cosets of the trivial subgroup.
pub fn perm_rep(pres: &Presentation) -> Result<PermutationGroup> {
    perm_rep_bounded(pres, DEFAULT_MAX_COSETS)
}

pub fn perm_rep_bounded(pres: &Presentation, max_cosets: usize) -> Result<PermutationGroup> {
    let table = coset_enumeration(pres, &[], max_cosets)?;
    debug_assert!(table.complete);
    let degree = table.n_cosets;
    let gens: Result<Vec<Permutation>> = (0..pres.n_generators())
        .map(|g| {
            let images: Vec<u16> = (0..degree)
                .map(|i| table.rows[i][2 * g] as u16)
                .collect();
            Permutation::from_images(images)
        })
        .collect();
    let group = PermutationGroup::from_generators_with_degree(gens?, degree.max(1))?;
    debug_assert_eq!(group.order(), degree as u64, "regular representation");
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    #[test]
    fn parses_words_and_sugar() {
        let p = pres("gens: a b; rels: a^2, (a*b)^3, [a,b], a^-1*b*a*(b)^-1");
        assert_eq!(p.generator_names, vec!["a", "b"]);
        assert_eq!(p.relators[0], vec![1, 1]);
        assert_eq!(p.relators[1], vec![1, 2, 1, 2, 1, 2]);
        assert_eq!(p.relators[2], vec![-1, -2, 1, 2]);
        assert_eq!(p.relators[3], vec![-1, 2, 1, -2]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = Presentation::parse("gens: a; rels: a^2, q").unwrap_err();
        match e {
            Error::Parse { line, message } => {
                assert_eq!(line, 1);
                assert!(message.contains("unknown generator 'q'"), "{message}");
            }
            other => panic!("wrong error {other:?}"),
        }
        assert!(Presentation::parse("gens: ; rels: a").is_err());
        assert!(Presentation::parse("gens: a a; rels: a").is_err());
        assert!(Presentation::parse("rels: a").is_err());
    }

    #[test]
    fn cyclic_three_has_three_cosets() {
        let p = pres("gens: a; rels: a^3");
        let t = coset_enumeration(&p, &[], 100).unwrap();
        assert_eq!(t.n_cosets, 3);
        assert!(t.complete);
    }

    #[test]
    fn coxeter_presentation_of_s3() {
        let p = pres("gens: a b; rels: a^2, b^2, (a*b)^3");
        let t = coset_enumeration(&p, &[], 1000).unwrap();
        assert_eq!(t.n_cosets, 6);
        let g = perm_rep(&p).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(crate::structure::derived_subgroup(&g).unwrap().order(), 3);
    }

    #[test]
    fn subgroup_cosets_divide_group_order() {
        let p = pres("gens: a b; rels: a^2, b^2, (a*b)^3");
        // Index of <a> is 3.
        let t = coset_enumeration(&p, &[vec![1]], 1000).unwrap();
        assert_eq!(t.n_cosets, 3);
        assert_eq!(6 % t.n_cosets, 0);
    }

    #[test]
    fn relators_act_trivially_in_perm_rep() {
        let p = pres("gens: a b; rels: a^4, b^2, b*a*b*a");
        let g = perm_rep(&p).unwrap();
        assert_eq!(g.order(), 8); // D8
        for r in &p.relators {
            let mut prod = g.identity();
            for &l in r {
                let gen = &g.generators()[(l.unsigned_abs() - 1) as usize];
                let f = if l > 0 { gen.clone() } else { gen.inverse() };
                prod = prod.compose(&f);
            }
            assert!(prod.is_identity());
        }
    }

    #[test]
    fn quaternion_presentation() {
        let p = pres("gens: a b; rels: a^4, a^2*(b^2)^-1, b^-1*a*b*a");
        let g = perm_rep(&p).unwrap();
        assert_eq!(g.order(), 8);
        // Q8 has a unique involution.
        let involutions = g
            .elements()
            .unwrap()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn cyclic_four_regular_rep() {
        let p = pres("gens: a; rels: a^4");
        let g = perm_rep(&p).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn bound_exceeded_is_reported() {
        let p = pres("gens: a b; rels: a^2, b^2, (a*b)^3");
        assert!(matches!(
            coset_enumeration(&p, &[], 2),
            Err(Error::CosetBoundExceeded(_))
        ));
    }

    #[test]
    fn presented_order_32_group() {
        // a² = b² = c⁸ = 1, b commutes with c, b^a = bc⁴, c^a = c³.
        let p = pres(
            "gens: a b c; rels: a^2, b^2, c^8, [b,c], \
             a^-1*b*a*(b*c^4)^-1, a^-1*c*a*(c^3)^-1",
        );
        let g = perm_rep(&p).unwrap();
        assert_eq!(g.order(), 32);
    }

    #[test]
    fn coincidence_heavy_enumeration_collapses() {
        // Trivial group disguised: a = b and a³ = a² forces a = 1.
        let p = pres("gens: a b; rels: a*(b)^-1, a^3, a^2");
        let t = coset_enumeration(&p, &[], 100).unwrap();
        assert_eq!(t.n_cosets, 1);
    }
}
