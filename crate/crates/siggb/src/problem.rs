//! Problem files: the line-oriented ideal format, its parser and
//! renderer, and the cyclic/katsura benchmark generators.
//!
//! Format:
//! ```text
//! field 32003
//! vars x y z
//! order grevlex
//! polys
//! x^2*y + 6*x
//! x*y + 32002
//! ```
//! Declaration order of variables is their precedence (first is
//! largest). Terms are joined by `+`/`-`; a term is `[coeff*]`
//! variables with optional `^exp`, or a bare integer constant.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, PrimeField};
use crate::poly::{Exponent, Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenchmarkError {
    #[error("benchmark size {0} out of range [2, 7]")]
    SizeOutOfRange(usize),
}

/// A parsed ideal description.
#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub field: PrimeField,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub polys: Vec<Polynomial>,
}

impl ProblemFile {
    pub fn ring(&self) -> Ring {
        Ring::new(self.field, self.vars.len(), self.order)
    }

    /// Canonical rendering; `parse_problem(render())` reproduces the
    /// problem exactly.
    pub fn render(&self) -> String {
        let ring = self.ring();
        let mut out = String::new();
        out.push_str(&format!("field {}\n", self.field.characteristic()));
        out.push_str(&format!("vars {}\n", self.vars.join(" ")));
        out.push_str(&format!("order {}\n", self.order.name()));
        out.push_str("polys\n");
        for p in &self.polys {
            out.push_str(&ring.render(p, &self.vars));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (line_no, field_line) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty problem file"))?;
    let p_str = expect_keyword_rest(field_line, "field", line_no)?;
    let p: u64 = p_str
        .trim()
        .parse()
        .map_err(|_| ParseError::new(line_no, 1, format!("invalid characteristic `{}`", p_str.trim())))?;
    let field = PrimeField::new(p)
        .map_err(|_| ParseError::new(line_no, 1, format!("characteristic {p} is not prime")))?;

    let (line_no, vars_line) = lines
        .next()
        .ok_or_else(|| ParseError::new(line_no, 1, "expected `vars` line"))?;
    let rest = expect_keyword_rest(vars_line, "vars", line_no)?;
    let vars: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
    if vars.is_empty() {
        return Err(ParseError::new(line_no, 1, "at least one variable required"));
    }
    for v in &vars {
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(ParseError::new(line_no, 1, format!("invalid variable name `{v}`")));
        }
    }
    let mut index = HashMap::new();
    for (i, v) in vars.iter().enumerate() {
        if index.insert(v.clone(), i).is_some() {
            return Err(ParseError::new(line_no, 1, format!("duplicate variable `{v}`")));
        }
    }

    let (line_no, order_line) = lines
        .next()
        .ok_or_else(|| ParseError::new(line_no, 1, "expected `order` line"))?;
    let rest = expect_keyword_rest(order_line, "order", line_no)?;
    let order: MonomialOrder = rest
        .trim()
        .parse()
        .map_err(|e: String| ParseError::new(line_no, 1, e))?;

    let (line_no, polys_line) = lines
        .next()
        .ok_or_else(|| ParseError::new(line_no, 1, "expected `polys` line"))?;
    if polys_line.trim() != "polys" {
        return Err(ParseError::new(line_no, 1, "expected `polys` line"));
    }

    let ring = Ring::new(field, vars.len(), order);
    let mut polys = Vec::new();
    for (no, line) in lines {
        polys.push(parse_poly_line(line, no, &ring, &index)?);
    }
    if polys.is_empty() {
        return Err(ParseError::new(line_no, 1, "at least one polynomial required"));
    }

    Ok(ProblemFile {
        field,
        vars,
        order,
        polys,
    })
}

/// Parses a file of bare polynomial lines against an already-parsed
/// problem's variables and order (used by the basis checker).
pub fn parse_poly_list(text: &str, problem: &ProblemFile) -> Result<Vec<Polynomial>, ParseError> {
    let ring = problem.ring();
    let index: HashMap<String, usize> = problem
        .vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_poly_line(line, i + 1, &ring, &index)?);
    }
    Ok(out)
}

fn expect_keyword_rest<'a>(
    line: &'a str,
    keyword: &str,
    line_no: usize,
) -> Result<&'a str, ParseError> {
    let trimmed = line.trim_start();
    match trimmed.strip_prefix(keyword) {
        Some(rest) if rest.starts_with(char::is_whitespace) || rest.is_empty() => Ok(rest),
        _ => Err(ParseError::new(line_no, 1, format!("expected `{keyword}` line"))),
    }
}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    vars: &'a HashMap<String, usize>,
}

impl<'a> Scanner<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn number(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| ParseError::new(self.line, start + 1, format!("number `{text}` too large")))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
            while self
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                self.pos += 1;
            }
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// One `var[^exp]` factor; applied onto the exponent vector.
    fn factor(&mut self, exps: &mut [Exponent]) -> Result<(), ParseError> {
        let start_col = self.col();
        let name = self.ident();
        if name.is_empty() {
            return Err(self.err("expected a variable"));
        }
        let idx = *self
            .vars
            .get(&name)
            .ok_or_else(|| ParseError::new(self.line, start_col, format!("unknown variable `{name}`")))?;
        let mut exp: i64 = 1;
        if self.peek() == Some('^') {
            self.bump();
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.err("expected an exponent"));
            }
            exp = self.number()?;
        }
        let total = exps[idx] as i64 + exp;
        if total > Exponent::MAX as i64 {
            return Err(ParseError::new(self.line, start_col, "exponent overflow"));
        }
        exps[idx] = total as Exponent;
        Ok(())
    }

    /// One term: `coeff`, `coeff*factors` or `factors`.
    fn term(&mut self, field: PrimeField, nvars: usize) -> Result<(FieldElement, Monomial), ParseError> {
        self.skip_ws();
        let mut exps = vec![0 as Exponent; nvars];
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.number()?;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                self.factor(&mut exps)?;
                self.more_factors(&mut exps)?;
            }
            field.element(n)
        } else if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.factor(&mut exps)?;
            self.more_factors(&mut exps)?;
            field.one()
        } else {
            return Err(self.err("expected a term"));
        };
        Ok((coeff, Monomial::from_exps(&exps)))
    }

    fn more_factors(&mut self, exps: &mut [Exponent]) -> Result<(), ParseError> {
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                self.factor(exps)?;
            } else {
                return Ok(());
            }
        }
    }
}

fn parse_poly_line(
    line: &str,
    line_no: usize,
    ring: &Ring,
    vars: &HashMap<String, usize>,
) -> Result<Polynomial, ParseError> {
    let mut sc = Scanner {
        chars: line.chars().collect(),
        pos: 0,
        line: line_no,
        vars,
    };
    let mut terms = Vec::new();
    sc.skip_ws();
    let mut negate = false;
    if sc.peek() == Some('-') {
        sc.bump();
        negate = true;
    } else if sc.peek() == Some('+') {
        sc.bump();
    }
    loop {
        let (coeff, mono) = sc.term(ring.field, ring.nvars)?;
        terms.push((if negate { -coeff } else { coeff }, mono));
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some('+') => {
                sc.bump();
                negate = false;
            }
            Some('-') => {
                sc.bump();
                negate = true;
            }
            Some(c) => return Err(sc.err(format!("expected `+` or `-`, found `{c}`"))),
        }
    }
    Ok(ring.poly_from_terms(terms))
}

/// Benchmark families over GF(32003), grevlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Katsura,
}

/// The standard cyclic-n system (n cyclic sums plus product minus one)
/// or katsura-n (n+1 variables, one linear and n convolution equations).
pub fn gen_benchmark(family: Family, n: usize) -> Result<ProblemFile, BenchmarkError> {
    if !(2..=7).contains(&n) {
        return Err(BenchmarkError::SizeOutOfRange(n));
    }
    let field = PrimeField::new(32003).unwrap();
    match family {
        Family::Cyclic => {
            let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let ring = Ring::new(field, n, MonomialOrder::Grevlex);
            let mut polys = Vec::new();
            for k in 1..n {
                let mut terms = Vec::new();
                for i in 0..n {
                    let mut exps = vec![0 as Exponent; n];
                    for j in 0..k {
                        exps[(i + j) % n] += 1;
                    }
                    terms.push((field.one(), Monomial::from_exps(&exps)));
                }
                polys.push(ring.poly_from_terms(terms));
            }
            let product = Monomial::from_exps(&vec![1 as Exponent; n]);
            polys.push(ring.poly_from_terms(vec![
                (field.one(), product),
                (field.element(-1), Monomial::one(n)),
            ]));
            Ok(ProblemFile {
                field,
                vars,
                order: MonomialOrder::Grevlex,
                polys,
            })
        }
        Family::Katsura => {
            let nv = n + 1;
            let vars: Vec<String> = (0..nv).map(|i| format!("u{i}")).collect();
            let ring = Ring::new(field, nv, MonomialOrder::Grevlex);
            let mut polys = Vec::new();
            // u0 + 2*(u1 + ... + un) - 1
            let mut terms = vec![(field.one(), Monomial::var(nv, 0, 1))];
            for i in 1..nv {
                terms.push((field.element(2), Monomial::var(nv, i, 1)));
            }
            terms.push((field.element(-1), Monomial::one(nv)));
            polys.push(ring.poly_from_terms(terms));
            // sum over i+j = m of u_|i| * u_|j| = u_m
            for m in 0..n {
                let mut terms = Vec::new();
                for i in -(n as i64)..=(n as i64) {
                    let j = m as i64 - i;
                    if j.unsigned_abs() as usize > n {
                        continue;
                    }
                    let a = i.unsigned_abs() as usize;
                    let b = j.unsigned_abs() as usize;
                    let mut exps = vec![0 as Exponent; nv];
                    exps[a] += 1;
                    exps[b] += 1;
                    terms.push((field.one(), Monomial::from_exps(&exps)));
                }
                terms.push((field.element(-1), Monomial::var(nv, m, 1)));
                polys.push(ring.poly_from_terms(terms));
            }
            Ok(ProblemFile {
                field,
                vars,
                order: MonomialOrder::Grevlex,
                polys,
            })
        }
    }
}
