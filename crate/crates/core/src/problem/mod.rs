//! The `.lct` problem format.
//!
//! ```text
//! # comments run to the end of the line
//! ring {
//!   base = QQ[x,y]          # ZZ, QQ, GF(p), optionally with [vars]
//!   vars = U1:1, U2:1       # graded variables with weights
//! }
//! ideal {
//!   f1 = x*U1 + y*U2
//! }
//! options {
//!   dmax = 8; minor_budget = 20000; alpha_max = 3; beta_max = 3
//! }
//! ```
//!
//! Entries end at `;` or at a newline, unless the line ends with an
//! operator or inside brackets. Expressions use integers, variable names,
//! `+ - * ^` and parentheses, and `/` by a nonzero constant over a field.

mod lexer;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{CoefficientRing, GradedRingSpec, R0Element, SPolynomial, ScalarRing};
use crate::error::Result;
use lexer::{tokenize, Tok, Token};

/// Optional settings carried by a problem file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemOptions {
    pub dmax: Option<u64>,
    pub minor_budget: Option<u64>,
    pub alpha_max: Option<u32>,
    pub beta_max: Option<u32>,
}

/// A parsed problem. Generators are polynomials over the ground ring in the
/// coefficient variables followed by the graded variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub coeff: CoefficientRing,
    pub u_vars: Vec<String>,
    pub weights: Vec<u64>,
    pub generators: Vec<(String, R0Element)>,
    pub options: ProblemOptions,
}

impl ProblemFile {
    /// All variable names, coefficient variables first.
    pub fn all_vars(&self) -> Vec<String> {
        self.coeff.vars().iter().chain(&self.u_vars).cloned().collect()
    }

    /// The ground ring with every variable of the file adjoined.
    pub fn flat_ring(&self) -> CoefficientRing {
        CoefficientRing::polynomial(self.coeff.base(), self.all_vars()).expect("names were validated")
    }

    pub fn spec(&self) -> Result<GradedRingSpec> {
        let gens = self
            .generators
            .iter()
            .map(|(_, g)| SPolynomial::from_flat(g, self.coeff.nvars()))
            .collect();
        GradedRingSpec::new(self.coeff.clone(), self.u_vars.clone(), self.weights.clone(), gens)
    }

    /// Canonical text; parsing it gives back an equal problem.
    pub fn to_text(&self) -> String {
        let mut out = String::from("ring {\n");
        out.push_str(&format!("  base = {}\n", self.coeff));
        let vars: Vec<String> = self
            .u_vars
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| format!("{v}:{w}"))
            .collect();
        out.push_str(&format!("  vars = {}\n}}\n", vars.join(", ")));
        out.push_str("ideal {\n");
        let names = self.all_vars();
        for (name, g) in &self.generators {
            out.push_str(&format!("  {name} = {}\n", g.display_with(&names)));
        }
        out.push_str("}\n");
        let o = &self.options;
        let entries: Vec<String> = [
            ("dmax", o.dmax.map(|v| v.to_string())),
            ("minor_budget", o.minor_budget.map(|v| v.to_string())),
            ("alpha_max", o.alpha_max.map(|v| v.to_string())),
            ("beta_max", o.beta_max.map(|v| v.to_string())),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| format!("  {k} = {v}\n")))
        .collect();
        if !entries.is_empty() {
            out.push_str("options {\n");
            out.extend(entries);
            out.push_str("}\n");
        }
        out
    }
}

struct Entry {
    key: Token,
    value: Vec<Token>,
    // The token that ended the value, for "expected ..." diagnostics.
    end: Token,
}

struct Block {
    name: Token,
    entries: Vec<Entry>,
}

fn is_sym(t: &Token, c: char) -> bool {
    t.tok == Tok::Sym(c)
}

fn continues_line(t: &Token) -> bool {
    matches!(t.tok, Tok::Sym(c) if "+-*/^,=:([".contains(c))
}

fn split_blocks(tokens: &[Token]) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut i = 0;
    let skip_separators = |i: &mut usize| {
        while matches!(tokens[*i].tok, Tok::Newline | Tok::Sym(';')) {
            *i += 1;
        }
    };
    loop {
        skip_separators(&mut i);
        let name = tokens[i].clone();
        match &name.tok {
            Tok::Eof => break,
            Tok::Ident(_) => {}
            _ => return Err(name.error(format!("expected a block name, found {}", name.describe()))),
        }
        i += 1;
        while tokens[i].tok == Tok::Newline {
            i += 1;
        }
        if !is_sym(&tokens[i], '{') {
            return Err(tokens[i].error(format!("expected `{{`, found {}", tokens[i].describe())));
        }
        i += 1;
        let mut entries = Vec::new();
        loop {
            skip_separators(&mut i);
            let key = tokens[i].clone();
            match &key.tok {
                Tok::Sym('}') => {
                    i += 1;
                    break;
                }
                Tok::Ident(_) => {}
                Tok::Eof => return Err(key.error("unterminated block, expected `}`")),
                _ => return Err(key.error(format!("expected an entry name, found {}", key.describe()))),
            }
            i += 1;
            if !is_sym(&tokens[i], '=') {
                return Err(tokens[i].error(format!("expected `=`, found {}", tokens[i].describe())));
            }
            i += 1;
            let mut value: Vec<Token> = Vec::new();
            let mut depth = 0usize;
            loop {
                let t = &tokens[i];
                match &t.tok {
                    Tok::Eof => break,
                    Tok::Sym('}') => break,
                    Tok::Sym(';') if depth == 0 => break,
                    Tok::Newline if depth == 0 && !value.last().is_some_and(continues_line) => break,
                    Tok::Newline => {}
                    Tok::Sym('(') | Tok::Sym('[') => {
                        depth += 1;
                        value.push(t.clone());
                    }
                    Tok::Sym(')') | Tok::Sym(']') => {
                        depth = depth.saturating_sub(1);
                        value.push(t.clone());
                    }
                    _ => value.push(t.clone()),
                }
                i += 1;
            }
            entries.push(Entry {
                key,
                value,
                end: tokens[i].clone(),
            });
        }
        blocks.push(Block { name, entries });
    }
    Ok(blocks)
}

fn ident(t: &Token) -> Option<&str> {
    match &t.tok {
        Tok::Ident(s) => Some(s),
        _ => None,
    }
}

/// Cursor over the tokens of one entry value.
struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    end: &'a Token,
}

impl<'a> Cursor<'a> {
    fn new(entry: &'a Entry) -> Self {
        Cursor {
            toks: &entry.value,
            pos: 0,
            end: &entry.end,
        }
    }

    fn peek(&self) -> &'a Token {
        self.toks.get(self.pos).unwrap_or(self.end)
    }

    fn next(&mut self) -> &'a Token {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn eat(&mut self, c: char) -> bool {
        if is_sym(self.peek(), c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let t = self.peek();
            Err(t.error(format!("expected `{c}`, found {}", t.describe())))
        }
    }

    fn ident(&mut self) -> Result<(&'a Token, &'a str)> {
        let t = self.next();
        ident(t)
            .map(|s| (t, s))
            .ok_or_else(|| t.error(format!("expected a name, found {}", t.describe())))
    }

    fn integer(&mut self) -> Result<(&'a Token, &'a BigInt)> {
        let t = self.next();
        match &t.tok {
            Tok::Int(v) => Ok((t, v)),
            _ => Err(t.error(format!("expected an integer, found {}", t.describe()))),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            let t = self.peek();
            Err(t.error(format!("unexpected {}", t.describe())))
        }
    }
}

fn small<T: TryFrom<u64>>(t: &Token, v: &BigInt, what: &str) -> Result<T> {
    v.to_u64()
        .and_then(|x| T::try_from(x).ok())
        .ok_or_else(|| t.error(format!("{what} {v} is out of range")))
}

fn parse_base(entry: &Entry) -> Result<CoefficientRing> {
    let mut c = Cursor::new(entry);
    let (t, name) = c.ident()?;
    let base = match name {
        "ZZ" => ScalarRing::Integers,
        "QQ" => ScalarRing::Rationals,
        "GF" => {
            c.expect('(')?;
            let (pt, p) = c.integer()?;
            c.expect(')')?;
            ScalarRing::prime_field(small(pt, p, "characteristic")?)
                .map_err(|_| pt.error(format!("{p} is not a prime")))?
        }
        other => return Err(t.error(format!("unknown base ring `{other}`; use ZZ, QQ or GF(p)"))),
    };
    let mut vars: Vec<String> = Vec::new();
    if c.eat('[') {
        loop {
            let (vt, v) = c.ident()?;
            if vars.iter().any(|w| w == v) {
                return Err(vt.error(format!("variable `{v}` declared twice")));
            }
            vars.push(v.to_string());
            if !c.eat(',') {
                break;
            }
        }
        c.expect(']')?;
    }
    c.finish()?;
    Ok(if vars.is_empty() {
        CoefficientRing::scalar(base)
    } else {
        CoefficientRing::polynomial(base, vars)?
    })
}

fn parse_vars(entry: &Entry, coeff: &CoefficientRing) -> Result<(Vec<String>, Vec<u64>)> {
    let mut c = Cursor::new(entry);
    let (mut names, mut weights) = (Vec::<String>::new(), Vec::new());
    while !c.at_end() {
        let (vt, v) = c.ident()?;
        if names.iter().any(|w| w == v) || coeff.vars().iter().any(|w| w == v) {
            return Err(vt.error(format!("variable `{v}` declared twice")));
        }
        let w = if c.eat(':') {
            let (wt, w) = c.integer()?;
            let w: u64 = small(wt, w, "weight")?;
            if w == 0 {
                return Err(wt.error("weights must be positive"));
            }
            w
        } else {
            1
        };
        names.push(v.to_string());
        weights.push(w);
        if !c.at_end() {
            c.expect(',')?;
        }
    }
    Ok((names, weights))
}

/// Recursive descent over `+ - * / ^ ( )` into a flat polynomial.
struct ExprParser<'a> {
    c: Cursor<'a>,
    base: ScalarRing,
    names: &'a [String],
}

impl ExprParser<'_> {
    fn expr(&mut self) -> Result<R0Element> {
        let mut acc = self.term()?;
        loop {
            if self.c.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.c.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<R0Element> {
        let mut acc = self.unary()?;
        loop {
            if self.c.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if is_sym(self.c.peek(), '/') {
                let slash = self.c.next();
                let d = self.unary()?;
                let inverse = d
                    .constant_value()
                    .filter(|_| self.base.is_field())
                    .and_then(|v| v.inverse());
                match inverse {
                    Some(inv) => acc = acc.scale(&inv),
                    None if !self.base.is_field() => return Err(slash.error("division needs a field of coefficients")),
                    None => return Err(slash.error("can only divide by a nonzero constant")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<R0Element> {
        if self.c.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.c.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<R0Element> {
        let base = self.atom()?;
        if self.c.eat('^') {
            let (t, e) = self.c.integer()?;
            let e: u32 = small(t, e, "exponent")?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<R0Element> {
        let t = self.c.next();
        let n = self.names.len();
        match &t.tok {
            Tok::Int(v) => Ok(R0Element::constant(self.base.from_bigint(v), n)),
            Tok::Ident(name) => match self.names.iter().position(|x| x == name) {
                Some(i) => Ok(R0Element::var(self.base, n, i)),
                None => Err(t.error(format!("unknown identifier `{name}`"))),
            },
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.c.expect(')')?;
                Ok(inner)
            }
            _ => Err(t.error(format!("expected an expression, found {}", t.describe()))),
        }
    }
}

fn parse_options(block: &Block) -> Result<ProblemOptions> {
    let mut o = ProblemOptions::default();
    for e in &block.entries {
        let mut c = Cursor::new(e);
        let (t, v) = c.integer()?;
        c.finish()?;
        let key = ident(&e.key).expect("entry keys are names");
        match key {
            "dmax" => o.dmax = Some(small(t, v, "dmax")?),
            "minor_budget" => o.minor_budget = Some(small(t, v, "minor_budget")?),
            "alpha_max" => o.alpha_max = Some(small(t, v, "alpha_max")?),
            "beta_max" => o.beta_max = Some(small(t, v, "beta_max")?),
            other => return Err(e.key.error(format!("unknown option `{other}`"))),
        }
    }
    Ok(o)
}

/// Parses a problem file. Generators must be homogeneous in the graded
/// variables; errors carry a 1-based line and column.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let tokens = tokenize(text)?;
    let blocks = split_blocks(&tokens)?;
    let find = |name: &str| -> Result<Option<&Block>> {
        let mut found = blocks.iter().filter(|b| ident(&b.name) == Some(name));
        let first = found.next();
        if let Some(dup) = found.next() {
            return Err(dup.name.error(format!("duplicate `{name}` block")));
        }
        Ok(first)
    };
    for b in &blocks {
        let name = ident(&b.name).expect("block names are names");
        if !matches!(name, "ring" | "ideal" | "options") {
            return Err(b.name.error(format!("unknown block `{name}`")));
        }
    }
    let Some(ring) = find("ring")? else {
        let t = tokens.last().expect("EOF token");
        return Err(t.error("missing `ring` block"));
    };
    let mut base_entry = None;
    let mut vars_entry = None;
    for e in &ring.entries {
        let slot = match ident(&e.key) {
            Some("base") => &mut base_entry,
            Some("vars") => &mut vars_entry,
            _ => return Err(e.key.error(format!("unknown ring entry {}", e.key.describe()))),
        };
        if slot.replace(e).is_some() {
            return Err(e.key.error(format!("duplicate entry {}", e.key.describe())));
        }
    }
    let base_entry = base_entry.ok_or_else(|| ring.name.error("ring block needs a `base` entry"))?;
    let coeff = parse_base(base_entry)?;
    let (u_vars, weights) = match vars_entry {
        Some(e) => parse_vars(e, &coeff)?,
        None => (Vec::new(), Vec::new()),
    };
    let names: Vec<String> = coeff.vars().iter().chain(&u_vars).cloned().collect();
    let mut generators: Vec<(String, R0Element)> = Vec::new();
    if let Some(ideal) = find("ideal")? {
        for e in &ideal.entries {
            let name = ident(&e.key).expect("entry keys are names").to_string();
            if generators.iter().any(|(n, _)| *n == name) {
                return Err(e.key.error(format!("generator `{name}` defined twice")));
            }
            let mut p = ExprParser {
                c: Cursor::new(e),
                base: coeff.base(),
                names: &names,
            };
            let g = p.expr()?;
            p.c.finish()?;
            if g.is_zero() && !u_vars.is_empty() {
                return Err(e.key.error(format!("generator {name} is zero")));
            }
            if !u_vars.is_empty() {
                let f = SPolynomial::from_flat(&g, coeff.nvars());
                if f.homogeneous_degree(&weights)?.is_none() {
                    return Err(e.key.error(format!("non-homogeneous generator {name}")));
                }
            }
            generators.push((name, g));
        }
    }
    let options = match find("options")? {
        Some(b) => parse_options(b)?,
        None => ProblemOptions::default(),
    };
    Ok(ProblemFile {
        coeff,
        u_vars,
        weights,
        generators,
        options,
    })
}
