//! Element-expression grammar: tokenizer, recursive-descent parser, and
//! evaluators for the type-B and fused contexts.
//!
//!   expr   := term (('+' | '-') term)*
//!   term   := factor ('*' factor)*
//!   factor := '-' factor | atom
//!   atom   := INT | ring literal (q | a1 | a2, optional ^INT)
//!           | IDENT            (g0.., e0.., T, S0.., P)
//!           | IDENT '(' args ')' (E, tildeE, Lambda, P, U)
//!           | '(' expr ')'
//!
//! Parse errors report the byte position in the source string.

use fused_hecke::fused::{FusedContext, FusedElement};
use fused_hecke::hecke::{
    e_generator, quasi_idempotent_e, symmetriser_lambda, tilde_e, Ambient, EigenvaluePair,
    HeckeElement, TildeVariant,
};
use fused_hecke::quotient::embed;
use fused_hecke::ring::{LaurentPoly, Monomial, QSign, RatFunc};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    DotDot,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, String> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push(Spanned { tok: Tok::Plus, pos }),
            '-' => out.push(Spanned { tok: Tok::Minus, pos }),
            '*' => out.push(Spanned { tok: Tok::Star, pos }),
            '^' => out.push(Spanned { tok: Tok::Caret, pos }),
            '(' => out.push(Spanned { tok: Tok::LParen, pos }),
            ')' => out.push(Spanned { tok: Tok::RParen, pos }),
            ',' => out.push(Spanned { tok: Tok::Comma, pos }),
            '.' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'.' {
                    out.push(Spanned { tok: Tok::DotDot, pos });
                    i += 1;
                } else {
                    return Err(format!("at position {pos}: expected '..'"));
                }
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let v: i64 = src[i..j]
                    .parse()
                    .map_err(|_| format!("at position {pos}: integer overflow"))?;
                out.push(Spanned { tok: Tok::Int(v), pos });
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < bytes.len()
                    && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                out.push(Spanned { tok: Tok::Ident(src[i..j].to_string()), pos });
                i = j;
                continue;
            }
            _ => return Err(format!("at position {pos}: unexpected character '{c}'")),
        }
        i += 1;
    }
    Ok(out)
}

/// One argument inside a call like E(2, q, 1) or Lambda(-q^-1, 1..3).
#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Int(i64),
    Name(String),
    /// The literal -q^-1, the second eigenvalue choice.
    NegQInv,
    Range(usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    /// A ring literal: one of q, a1, a2 raised to an integer power.
    Ring(Monomial),
    Ident(String),
    Call(String, Vec<Arg>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
}

struct ParserState {
    toks: Vec<Spanned>,
    i: usize,
    len: usize,
}

impl ParserState {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|s| &s.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|s| s.pos).unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|s| s.tok.clone());
        self.i += 1;
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), String> {
        let pos = self.pos();
        match self.bump() {
            Some(got) if got == t => Ok(()),
            _ => Err(format!("at position {pos}: expected {what}")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, String> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(v),
            Some(Tok::Minus) => match self.bump() {
                Some(Tok::Int(v)) => Ok(-v),
                _ => Err(format!("at position {pos}: expected integer")),
            },
            _ => Err(format!("at position {pos}: expected integer")),
        }
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, String> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, String> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(Expr::Int(v)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                // Ring literals may carry an exponent; identifiers may open
                // a call.
                if matches!(name.as_str(), "q" | "a1" | "a2") {
                    let e = if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        self.signed_int()?
                    } else {
                        1
                    };
                    let e = i32::try_from(e)
                        .map_err(|_| format!("at position {pos}: exponent out of range"))?;
                    let m = match name.as_str() {
                        "q" => Monomial::q(e),
                        "a1" => Monomial::a1(e),
                        _ => Monomial::a2(e),
                    };
                    return Ok(Expr::Ring(m));
                }
                if self.peek() == Some(&Tok::LParen) {
                    self.bump();
                    let mut args = Vec::new();
                    if self.peek() != Some(&Tok::RParen) {
                        loop {
                            args.push(self.arg()?);
                            if self.peek() == Some(&Tok::Comma) {
                                self.bump();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen, "')'")?;
                    return Ok(Expr::Call(name, args));
                }
                Ok(Expr::Ident(name))
            }
            _ => Err(format!("at position {pos}: expected an atom")),
        }
    }

    fn arg(&mut self) -> Result<Arg, String> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => {
                if self.peek() == Some(&Tok::DotDot) {
                    self.bump();
                    let hi = self.signed_int()?;
                    let lo = usize::try_from(v)
                        .map_err(|_| format!("at position {pos}: range must be nonnegative"))?;
                    let hi = usize::try_from(hi)
                        .map_err(|_| format!("at position {pos}: range must be nonnegative"))?;
                    Ok(Arg::Range(lo, hi))
                } else {
                    Ok(Arg::Int(v))
                }
            }
            Some(Tok::Minus) => {
                // The eigenvalue literal -q^-1.
                match (self.bump(), self.bump(), self.bump()) {
                    (Some(Tok::Ident(q)), Some(Tok::Caret), Some(Tok::Minus)) if q == "q" => {
                        match self.bump() {
                            Some(Tok::Int(1)) => Ok(Arg::NegQInv),
                            _ => Err(format!("at position {pos}: expected -q^-1")),
                        }
                    }
                    _ => Err(format!("at position {pos}: expected -q^-1")),
                }
            }
            Some(Tok::Ident(s)) => Ok(Arg::Name(s)),
            _ => Err(format!("at position {pos}: expected an argument")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, String> {
    let toks = lex(src)?;
    let mut p = ParserState { toks, i: 0, len: src.len() };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return Err(format!("at position {}: trailing input", p.pos()));
    }
    Ok(e)
}

fn qsign_arg(a: &Arg) -> Result<QSign, String> {
    match a {
        Arg::Name(s) if s == "q" => Ok(QSign::Q),
        Arg::NegQInv => Ok(QSign::NegQInv),
        _ => Err("eigenvalue argument must be q or -q^-1".to_string()),
    }
}

fn usize_arg(a: &Arg, what: &str) -> Result<usize, String> {
    match a {
        Arg::Int(v) if *v >= 0 => Ok(*v as usize),
        _ => Err(format!("{what} must be a nonnegative integer")),
    }
}

fn scalar_from_monomial(m: &Monomial) -> RatFunc {
    RatFunc::from_poly(LaurentPoly::monomial(m.clone()))
}

/// Generator index parsed off a prefixed identifier like g0 or S2.
fn suffix_index(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

// ---------------------------------------------------------------------
// Evaluation in the type-B algebra H(n).
// ---------------------------------------------------------------------

enum HValue {
    Scalar(RatFunc),
    Elem(HeckeElement),
}

impl HValue {
    fn into_elem(self, n: usize) -> HeckeElement {
        match self {
            HValue::Elem(e) => e,
            HValue::Scalar(c) => HeckeElement::one(Ambient::TypeB(n)).scale(&c),
        }
    }
}

pub fn eval_hecke(e: &Expr, n: usize, spec_k: Option<u32>) -> Result<HeckeElement, String> {
    Ok(eval_h(e, n, spec_k)?.into_elem(n))
}

fn eval_h(e: &Expr, n: usize, spec_k: Option<u32>) -> Result<HValue, String> {
    let ambient = Ambient::TypeB(n);
    match e {
        Expr::Int(v) => Ok(HValue::Scalar(RatFunc::from_int(*v))),
        Expr::Ring(m) => Ok(HValue::Scalar(scalar_from_monomial(m))),
        Expr::Ident(name) => {
            if let Some(i) = suffix_index(name, "g") {
                if !ambient.valid_generator(i) {
                    return Err(format!("generator g{i} is out of range for n = {n}"));
                }
                return Ok(HValue::Elem(HeckeElement::generator(ambient, i)));
            }
            if let Some(i) = suffix_index(name, "e") {
                if !ambient.valid_generator(i) {
                    return Err(format!("generator e{i} is out of range for n = {n}"));
                }
                return Ok(HValue::Elem(e_generator(ambient, i, None)));
            }
            Err(format!(
                "unknown identifier '{name}' in the type-B context \
                 (fused-algebra atoms need --algebra fused)"
            ))
        }
        Expr::Call(name, args) => eval_h_call(name, args, n, spec_k),
        Expr::Neg(x) => Ok(match eval_h(x, n, spec_k)? {
            HValue::Scalar(c) => HValue::Scalar(-&c),
            HValue::Elem(e) => HValue::Elem(e.scale(&RatFunc::from_int(-1))),
        }),
        Expr::Mul(a, b) => {
            let a = eval_h(a, n, spec_k)?;
            let b = eval_h(b, n, spec_k)?;
            Ok(match (a, b) {
                (HValue::Scalar(x), HValue::Scalar(y)) => HValue::Scalar(&x * &y),
                (HValue::Scalar(x), HValue::Elem(e)) | (HValue::Elem(e), HValue::Scalar(x)) => {
                    HValue::Elem(e.scale(&x))
                }
                (HValue::Elem(x), HValue::Elem(y)) => HValue::Elem(x.mul(&y)),
            })
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sub = matches!(e, Expr::Sub(_, _));
            let a = eval_h(a, n, spec_k)?;
            let b = eval_h(b, n, spec_k)?;
            Ok(match (a, b) {
                (HValue::Scalar(x), HValue::Scalar(y)) => {
                    HValue::Scalar(if sub { &x - &y } else { &x + &y })
                }
                (a, b) => {
                    let (a, b) = (a.into_elem(n), b.into_elem(n));
                    HValue::Elem(if sub { a.sub(&b) } else { a.add(&b) })
                }
            })
        }
    }
}

fn eval_h_call(name: &str, args: &[Arg], n: usize, spec_k: Option<u32>) -> Result<HValue, String> {
    match name {
        "E" => {
            if args.len() != 3 {
                return Err("E takes (m, x, b)".to_string());
            }
            let m = usize_arg(&args[0], "E: m")?;
            if m < 1 || m > n {
                return Err(format!("E: need 1 <= m <= n = {n}"));
            }
            let x = qsign_arg(&args[1])?;
            let b = usize_arg(&args[2], "E: b")?;
            if b != 1 && b != 2 {
                return Err("E: b must be 1 or 2".to_string());
            }
            let e = quasi_idempotent_e(m, EigenvaluePair::new(x, b as u8));
            Ok(HValue::Elem(embed(&e, n)))
        }
        "tildeE" => {
            if args.len() != 2 {
                return Err("tildeE takes (m, variant) with variant in {A1, A2, C1, C2}".into());
            }
            let m = usize_arg(&args[0], "tildeE: m")?;
            if m < 1 || m > n {
                return Err(format!("tildeE: need 1 <= m <= n = {n}"));
            }
            let variant = match &args[1] {
                Arg::Name(s) if s == "A1" => TildeVariant::AMinusqAlpha1,
                Arg::Name(s) if s == "A2" => TildeVariant::AQAlpha2,
                Arg::Name(s) if s == "C1" => TildeVariant::C2QAlphab(1),
                Arg::Name(s) if s == "C2" => TildeVariant::C2QAlphab(2),
                _ => return Err("tildeE: variant must be A1, A2, C1 or C2".to_string()),
            };
            if matches!(variant, TildeVariant::C2QAlphab(_)) && spec_k.is_none() {
                return Err("tildeE: variants C1/C2 require --k (specialised form)".to_string());
            }
            let e = tilde_e(m, variant);
            let e = match spec_k {
                Some(k) => e.specialise(k),
                None => e,
            };
            // embed() preserves the specialisation tag; strip it so the
            // caller's uniform specialise pass is a no-op on literals.
            Ok(HValue::Elem(embed(&e, n).with_spec_k(None)))
        }
        "Lambda" => {
            if args.len() != 2 {
                return Err("Lambda takes (x, lo..hi)".to_string());
            }
            let x = qsign_arg(&args[0])?;
            let (lo, hi) = match args[1] {
                Arg::Range(lo, hi) => (lo, hi),
                _ => return Err("Lambda: second argument must be a range lo..hi".to_string()),
            };
            if lo < 1 || (lo <= hi && hi >= n) {
                return Err(format!("Lambda: need 1 <= lo and hi <= n - 1 = {}", n - 1));
            }
            Ok(HValue::Elem(symmetriser_lambda(Ambient::TypeB(n), x, lo, hi)))
        }
        "P" => Err("P(k) lives in the fused context; use --algebra fused".to_string()),
        "U" => Err("U(i) lives in the fused context; use --algebra fused".to_string()),
        _ => Err(format!("unknown function '{name}'")),
    }
}

// ---------------------------------------------------------------------
// Evaluation in the fused algebra.
// ---------------------------------------------------------------------

enum FValue {
    Scalar(RatFunc),
    Elem(FusedElement),
}

impl FValue {
    fn into_elem(self, fc: &FusedContext) -> FusedElement {
        match self {
            FValue::Elem(e) => e,
            FValue::Scalar(c) => fc.unit().scale(&c),
        }
    }
}

pub fn eval_fused(e: &Expr, fc: &FusedContext) -> Result<FusedElement, String> {
    Ok(eval_f(e, fc)?.into_elem(fc))
}

pub fn named_fused_element(name: &str, fc: &FusedContext) -> Result<FusedElement, String> {
    match name {
        "T" => Ok(fc.t()),
        "P" => Ok(fc.unit()),
        "S0" => Ok(fc.s_0()),
        _ => {
            if let Some(i) = suffix_index(name, "S") {
                return Ok(fc.s_i(i));
            }
            if let Some(i) = suffix_index(name, "U") {
                return Ok(fc.u_i(i));
            }
            Err(format!("unknown fused element '{name}' (expected T, P, S0, S1.., U1..)"))
        }
    }
}

fn eval_f(e: &Expr, fc: &FusedContext) -> Result<FValue, String> {
    match e {
        Expr::Int(v) => Ok(FValue::Scalar(RatFunc::from_int(*v))),
        Expr::Ring(m) => Ok(FValue::Scalar(scalar_from_monomial(m))),
        Expr::Ident(name) => Ok(FValue::Elem(named_fused_element(name, fc)?)),
        Expr::Call(name, args) => match name.as_str() {
            "U" => {
                if args.len() != 1 {
                    return Err("U takes (i)".to_string());
                }
                let i = usize_arg(&args[0], "U: i")?;
                Ok(FValue::Elem(fc.u_i(i)))
            }
            "P" => Ok(FValue::Elem(fc.unit())),
            _ => Err(format!("unknown function '{name}' in the fused context")),
        },
        Expr::Neg(x) => Ok(match eval_f(x, fc)? {
            FValue::Scalar(c) => FValue::Scalar(-&c),
            FValue::Elem(e) => FValue::Elem(e.scale(&RatFunc::from_int(-1))),
        }),
        Expr::Mul(a, b) => {
            let a = eval_f(a, fc)?;
            let b = eval_f(b, fc)?;
            Ok(match (a, b) {
                (FValue::Scalar(x), FValue::Scalar(y)) => FValue::Scalar(&x * &y),
                (FValue::Scalar(x), FValue::Elem(e)) | (FValue::Elem(e), FValue::Scalar(x)) => {
                    FValue::Elem(e.scale(&x))
                }
                (FValue::Elem(x), FValue::Elem(y)) => FValue::Elem(fc.mul(&x, &y)),
            })
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sub = matches!(e, Expr::Sub(_, _));
            let a = eval_f(a, fc)?;
            let b = eval_f(b, fc)?;
            Ok(match (a, b) {
                (FValue::Scalar(x), FValue::Scalar(y)) => {
                    FValue::Scalar(if sub { &x - &y } else { &x + &y })
                }
                (a, b) => {
                    let (a, b) = (a.into_elem(fc), b.into_elem(fc));
                    FValue::Elem(if sub { a.sub(&b) } else { a.add(&b) })
                }
            })
        }
    }
}

/// Renders a fused element as a sum over double-coset representatives.
pub fn display_fused(e: &FusedElement, fc: &FusedContext) -> String {
    let parts: Vec<String> = e
        .coords
        .iter()
        .zip(fc.reps())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, w)| format!("({c})·[{w}]"))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_sums() {
        let e = parse("g0*g1 + 2*e0 - q^-2").unwrap();
        match e {
            Expr::Sub(_, _) => {}
            other => panic!("unexpected shape: {other:?}"),
        }
    }

    #[test]
    fn reports_position() {
        let err = parse("g0 + ?").unwrap_err();
        assert!(err.contains("position 5"), "{err}");
    }

    #[test]
    fn call_arguments() {
        let e = parse("E(2, -q^-1, 1) * Lambda(q, 1..3)").unwrap();
        match e {
            Expr::Mul(a, b) => {
                assert_eq!(
                    *a,
                    Expr::Call(
                        "E".into(),
                        vec![Arg::Int(2), Arg::NegQInv, Arg::Int(1)]
                    )
                );
                assert_eq!(
                    *b,
                    Expr::Call("Lambda".into(), vec![Arg::Name("q".into()), Arg::Range(1, 3)])
                );
            }
            other => panic!("unexpected shape: {other:?}"),
        }
    }

    #[test]
    fn evaluates_quadratic_relation() {
        // g_i^2 = 1 + (q - q^-1) g_i.
        let lhs = eval_hecke(&parse("g1*g1").unwrap(), 2, None).unwrap();
        let rhs = eval_hecke(&parse("1 + q*g1 - q^-1*g1").unwrap(), 2, None).unwrap();
        assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn e_at_rank_one() {
        // E(1, q, 1) = 1 - a2^-1 g0.
        let lhs = eval_hecke(&parse("E(1, q, 1)").unwrap(), 1, None).unwrap();
        let rhs = eval_hecke(&parse("1 - a2^-1*g0").unwrap(), 1, None).unwrap();
        assert!(lhs.sub(&rhs).is_zero());
    }
}
