//! Text forms of field elements, polynomials and matrices.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer | '[' integer (',' integer)* ']' | name | '(' expr ')'
//! matrix  := '[' row (',' row)* ']'
//! row     := '[' expr (',' expr)* ']'
//! ```
//!
//! An integer is an element of `F_p`, reduced mod `p`. A bracketed list
//! `[c0,c1,...]` is the element `c0 + c1 x + ...` of `F_q = F_p[x]/(f)`.
//! Names depend on the context: `F` in twisted polynomials, `s` in
//! `F_q(s)` and in the skew field, `t` or `t1, ..., td` in `F_q(t_1..t_d)`.
//! Products are taken in the order written, so `F*[0,1]` is normalized to
//! `[0,1]^p * F`. Division is only available in fields.
//!
//! The formatters emit canonical strings in the same grammar, so parsing
//! a formatted value returns it unchanged.

use crate::algebra::fq::{FieldSpec, Fq};
use crate::algebra::linalg::Matrix;
use crate::algebra::mpoly::{MPoly, MRatFun, MRatFunField};
use crate::algebra::ratfun::{RatFun, RatFunField};
use crate::algebra::ring::{Field, Ring};
use crate::error::ParseError;
use crate::ore::{OrePoly, OreRing};
use crate::skew::{CenterPoly, SkewElem, SkewField};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let v = s[st..i]
                .parse::<i64>()
                .map_err(|_| ParseError::new(st, "integer out of range"))?;
            out.push((st, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Name(s[st..i].to_string())));
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::new(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Node {
    Lit(Vec<i64>),
    Var(usize, String),
    Neg(Box<Node>),
    Bin(usize, char, Box<Node>, Box<Node>),
    Pow(Box<Node>, u64),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(s)?,
            at: 0,
            end: s.len(),
        })
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.at) {
            Some((_, Tok::Sym(c))) => Some(*c),
            _ => None,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek_sym() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), format!("expected '{c}'")))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at == self.toks.len() {
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), "trailing input"))
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_sym() {
            let pos = self.pos();
            self.at += 1;
            let rhs = self.term()?;
            lhs = Node::Bin(pos, c, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_sym() {
            let pos = self.pos();
            self.at += 1;
            let rhs = self.unary()?;
            lhs = Node::Bin(pos, c, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if self.eat('-') {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.toks.get(self.at) {
                Some((_, Tok::Int(e))) => {
                    self.at += 1;
                    Ok(Node::Pow(Box::new(base), *e as u64))
                }
                _ => Err(ParseError::new(
                    pos,
                    "expected a nonnegative integer exponent",
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        match self.toks.get(self.at) {
            Some((_, Tok::Int(v))) => {
                self.at += 1;
                Ok(if neg { -v } else { *v })
            }
            _ => Err(ParseError::new(self.pos(), "expected an integer")),
        }
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Int(v))) => {
                self.at += 1;
                Ok(Node::Lit(vec![v]))
            }
            Some((_, Tok::Name(n))) => {
                self.at += 1;
                Ok(Node::Var(pos, n))
            }
            Some((_, Tok::Sym('('))) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some((_, Tok::Sym('['))) => {
                self.at += 1;
                let mut v = vec![self.signed_int()?];
                while self.eat(',') {
                    v.push(self.signed_int()?);
                }
                self.expect(']')?;
                Ok(Node::Lit(v))
            }
            _ => Err(ParseError::new(pos, "expected a value")),
        }
    }
}

struct Env<'a, R: Ring> {
    ring: &'a R,
    lit: &'a dyn Fn(&[i64]) -> R::Elem,
    var: &'a dyn Fn(&str) -> Option<R::Elem>,
    div: Option<&'a dyn Fn(&R::Elem, &R::Elem) -> Option<R::Elem>>,
}

fn eval<R: Ring>(env: &Env<'_, R>, n: &Node) -> Result<R::Elem, ParseError> {
    let r = env.ring;
    Ok(match n {
        Node::Lit(v) => (env.lit)(v),
        Node::Var(pos, name) => (env.var)(name)
            .ok_or_else(|| ParseError::new(*pos, format!("unknown name '{name}'")))?,
        Node::Neg(a) => r.neg(&eval(env, a)?),
        Node::Pow(a, e) => r.pow(&eval(env, a)?, *e),
        Node::Bin(pos, op, a, b) => {
            let (x, y) = (eval(env, a)?, eval(env, b)?);
            match op {
                '+' => r.add(&x, &y),
                '-' => r.sub(&x, &y),
                '*' => r.mul(&x, &y),
                _ => {
                    let div = env
                        .div
                        .ok_or_else(|| ParseError::new(*pos, "division is not available here"))?;
                    div(&x, &y).ok_or_else(|| ParseError::new(*pos, "division by zero"))?
                }
            }
        }
    })
}

fn parse_with<R: Ring>(s: &str, env: &Env<'_, R>) -> Result<R::Elem, ParseError> {
    let mut p = Parser::new(s)?;
    let n = p.expr()?;
    p.finish()?;
    eval(env, &n)
}

pub fn parse_fq(f: &FieldSpec, s: &str) -> Result<Fq, ParseError> {
    let lit = |v: &[i64]| f.elem(v);
    let var = |_: &str| None;
    let div = |a: &Fq, b: &Fq| f.inv_elem(*b).map(|bi| f.mul_elem(*a, bi));
    parse_with(
        s,
        &Env {
            ring: f,
            lit: &lit,
            var: &var,
            div: Some(&div),
        },
    )
}

/// A twisted polynomial in `F`.
pub fn parse_ore(ore: &OreRing, s: &str) -> Result<OrePoly, ParseError> {
    let f = ore.base().clone();
    let lit = |v: &[i64]| ore.constant(f.elem(v));
    let var = |n: &str| (n == "F").then(|| ore.f_pow(1));
    parse_with(
        s,
        &Env {
            ring: ore,
            lit: &lit,
            var: &var,
            div: None,
        },
    )
}

/// An element of `F_q(v)` where `v` is the given variable name.
pub fn parse_ratfun(rf: &RatFunField, var_name: &str, s: &str) -> Result<RatFun, ParseError> {
    let f = rf.base().clone();
    let lit = |v: &[i64]| rf.constant(f.elem(v));
    let var = |n: &str| (n == var_name).then(|| rf.s());
    let div = |a: &RatFun, b: &RatFun| rf.div(a, b);
    parse_with(
        s,
        &Env {
            ring: rf,
            lit: &lit,
            var: &var,
            div: Some(&div),
        },
    )
}

/// Index of a variable name of `F_q(t_1..t_d)`: `t1..td`, and `t` when `d = 1`.
pub fn mvar_index(d: usize, name: &str) -> Option<usize> {
    if d == 1 && name == "t" {
        return Some(0);
    }
    let i: usize = name.strip_prefix('t')?.parse().ok()?;
    (1..=d).contains(&i).then(|| i - 1)
}

pub fn mvar_name(d: usize, i: usize) -> String {
    if d == 1 {
        "t".to_string()
    } else {
        format!("t{}", i + 1)
    }
}

pub fn parse_mratfun(mf: &MRatFunField, s: &str) -> Result<MRatFun, ParseError> {
    let f = mf.base().clone();
    let d = mf.nvars();
    let lit = |v: &[i64]| mf.constant(f.elem(v));
    let var = |n: &str| mvar_index(d, n).map(|i| mf.var(i));
    let div = |a: &MRatFun, b: &MRatFun| mf.div(a, b);
    parse_with(
        s,
        &Env {
            ring: mf,
            lit: &lit,
            var: &var,
            div: Some(&div),
        },
    )
}

/// An element of the skew field, written with `F` and the central `s = F^ell`.
pub fn parse_skew(k: &SkewField, s: &str) -> Result<SkewElem, ParseError> {
    let f = k.base().clone();
    let lit = |v: &[i64]| k.from_ore(&k.ore().constant(f.elem(v)));
    let var = |n: &str| match n {
        "F" => Some(k.from_ore(&k.ore().f_pow(1))),
        "s" => Some(k.s()),
        _ => None,
    };
    let div = |a: &SkewElem, b: &SkewElem| k.div(a, b);
    parse_with(
        s,
        &Env {
            ring: k,
            lit: &lit,
            var: &var,
            div: Some(&div),
        },
    )
}

/// Splits `[[a, b], [c, d]]` into rows of entry strings.
pub fn split_matrix(s: &str) -> Result<Vec<Vec<String>>, ParseError> {
    let b = s.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < b.len() && (b[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    let expect = |i: &mut usize, c: u8| -> Result<(), ParseError> {
        skip_ws(i);
        if *i < b.len() && b[*i] == c {
            *i += 1;
            Ok(())
        } else {
            Err(ParseError::new(*i, format!("expected '{}'", c as char)))
        }
    };
    expect(&mut i, b'[')?;
    let mut rows = Vec::new();
    loop {
        expect(&mut i, b'[')?;
        let mut row = Vec::new();
        let mut depth = 0i32;
        let mut start = i;
        loop {
            if i >= b.len() {
                return Err(ParseError::new(i, "unterminated row"));
            }
            match b[i] {
                b'[' | b'(' => depth += 1,
                b')' => depth -= 1,
                b']' if depth > 0 => depth -= 1,
                b',' if depth == 0 => {
                    row.push(s[start..i].trim().to_string());
                    start = i + 1;
                }
                b']' => {
                    row.push(s[start..i].trim().to_string());
                    i += 1;
                    break;
                }
                _ => {}
            }
            i += 1;
        }
        if row.iter().any(|e| e.is_empty()) {
            return Err(ParseError::new(start, "empty matrix entry"));
        }
        rows.push(row);
        skip_ws(&mut i);
        if i < b.len() && b[i] == b',' {
            i += 1;
            continue;
        }
        expect(&mut i, b']')?;
        break;
    }
    skip_ws(&mut i);
    if i != b.len() {
        return Err(ParseError::new(i, "trailing input"));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(ParseError::new(0, "rows have different lengths"));
    }
    Ok(rows)
}

/// Builds a matrix from rows of entry strings.
pub fn matrix_from_strings<T: Clone>(
    rows: &[Vec<String>],
    mut parse: impl FnMut(&str) -> Result<T, ParseError>,
) -> Result<Matrix<T>, ParseError> {
    let parsed: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|e| parse(e)).collect::<Result<Vec<T>, _>>())
        .collect::<Result<_, _>>()?;
    if parsed.is_empty() || parsed[0].is_empty() {
        return Err(ParseError::new(0, "empty matrix"));
    }
    if parsed.iter().any(|r| r.len() != parsed[0].len()) {
        return Err(ParseError::new(0, "rows have different lengths"));
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn parse_matrix<T: Clone>(
    s: &str,
    parse: impl FnMut(&str) -> Result<T, ParseError>,
) -> Result<Matrix<T>, ParseError> {
    matrix_from_strings(&split_matrix(s)?, parse)
}

pub fn format_matrix<T: Clone>(m: &Matrix<T>, mut fmt: impl FnMut(&T) -> String) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let e: Vec<String> = (0..m.cols()).map(|j| fmt(m.get(i, j))).collect();
            format!("[{}]", e.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn format_fq(f: &FieldSpec, a: Fq) -> String {
    f.format(a)
}

fn power_name(var: &str, k: u64) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn join_term(coef: String, is_one: bool, mon: String) -> String {
    if mon.is_empty() {
        coef
    } else if is_one {
        mon
    } else {
        format!("{coef}*{mon}")
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// `c0 + c1*v + c2*v^2 + ...` with zero terms dropped.
pub fn format_upoly(f: &FieldSpec, p: &[Fq], var: &str) -> String {
    join_terms(
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| join_term(f.format(*c), *c == Fq::ONE, power_name(var, k as u64)))
            .collect(),
    )
}

/// Twisted polynomial with left coefficients: `a0 + a1*F + a2*F^2`.
pub fn format_ore(f: &FieldSpec, p: &OrePoly) -> String {
    format_upoly(f, p, "F")
}

fn grouped(s: String) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

pub fn format_ratfun(f: &FieldSpec, r: &RatFun, var: &str) -> String {
    let num = format_upoly(f, &r.num, var);
    if r.den.len() == 1 && r.den[0] == Fq::ONE {
        num
    } else {
        format!(
            "{} / {}",
            grouped(num),
            grouped(format_upoly(f, &r.den, var))
        )
    }
}

pub fn format_mpoly(f: &FieldSpec, p: &MPoly, d: usize) -> String {
    format_mpoly_with(f, p, |i| mvar_name(d, i))
}

/// Polynomial in coordinates `x1, x2, ...`.
pub fn format_coordinate_poly(f: &FieldSpec, p: &MPoly) -> String {
    format_mpoly_with(f, p, |i| format!("x{}", i + 1))
}

fn format_mpoly_with(f: &FieldSpec, p: &MPoly, name: impl Fn(usize) -> String) -> String {
    join_terms(
        p.terms()
            .iter()
            .map(|(m, c)| {
                let mon: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| power_name(&name(i), *e))
                    .collect();
                join_term(f.format(*c), *c == Fq::ONE, mon.join("*"))
            })
            .collect(),
    )
}

pub fn format_mratfun(mf: &MRatFunField, x: &MRatFun) -> String {
    let f = &**mf.base();
    let d = mf.nvars();
    let num = format_mpoly(f, &x.num, d);
    match x.den.as_constant() {
        Some(c) if c == Fq::ONE => num,
        _ => format!("{} / {}", grouped(num), grouped(format_mpoly(f, &x.den, d))),
    }
}

/// Polynomial in `x` over `F_p(s)`.
pub fn format_center_poly(f: &FieldSpec, q: &CenterPoly) -> String {
    join_terms(
        q.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let one = c.num == [Fq::ONE] && c.den == [Fq::ONE];
                let cs = format_ratfun(f, c, "s");
                let cs = if k > 0 { grouped(cs) } else { cs };
                join_term(cs, one, power_name("x", k as u64))
            })
            .collect(),
    )
}

/// Element of the skew field as `r0 + r1*F + ...` with `r_i` in `F_q(s)`.
pub fn format_skew(f: &FieldSpec, u: &SkewElem) -> String {
    join_terms(
        u.parts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let one = c.num == [Fq::ONE] && c.den == [Fq::ONE];
                let cs = format_ratfun(f, c, "s");
                let cs = if k > 0 { grouped(cs) } else { cs };
                join_term(cs, one, power_name("F", k as u64))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ore_normalizes_right_coefficients() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let ore = OreRing::new(f.clone());
        let w = f.elem(&[0, 1]);
        let p = parse_ore(&ore, "F*[0,1]").unwrap();
        assert_eq!(p, vec![Fq::ZERO, f.mul_elem(w, w)]);
        let q = parse_ore(&ore, "1 + [0,1]*F^2 - F").unwrap();
        assert_eq!(format_ore(&f, &q), "1 + F + [0,1]*F^2");
        assert_eq!(parse_ore(&ore, &format_ore(&f, &q)).unwrap(), q);
        assert!(parse_ore(&ore, "F / F").is_err());
        assert_eq!(parse_ore(&ore, "F + ?").unwrap_err().pos, 4);
    }

    #[test]
    fn rational_functions_roundtrip() {
        let f = FieldSpec::prime(3).unwrap();
        let rf = RatFunField::new(f.clone());
        let r = parse_ratfun(&rf, "s", "(s^2 + 1) / (s - 1)").unwrap();
        let txt = format_ratfun(&f, &r, "s");
        assert_eq!(txt, "(1 + s^2) / (2 + s)");
        assert_eq!(parse_ratfun(&rf, "s", &txt).unwrap(), r);
        let mf = MRatFunField::new(f.clone(), 2);
        let x = parse_mratfun(&mf, "t1^2*t2 / (t1 + 1)").unwrap();
        let y = parse_mratfun(&mf, &format_mratfun(&mf, &x)).unwrap();
        assert!(mf.equal(&x, &y));
        assert!(parse_mratfun(&mf, "t3").is_err());
    }

    #[test]
    fn matrices() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let ore = OreRing::new(f.clone());
        let m = parse_matrix("[[F, [1,2]*F], [0, 1 + F^2]]", |e| parse_ore(&ore, e)).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        let txt = format_matrix(&m, |p| format_ore(&f, p));
        assert_eq!(txt, "[[F, [1,2]*F], [0, 1 + F^2]]");
        assert!(parse_matrix("[[F], [F, F]]", |e| parse_ore(&ore, e)).is_err());
    }
}
