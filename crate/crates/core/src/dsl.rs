//! Text form of [`GraphExpr`].
//!
//! ```text
//! expr   := term { "+" term }
//! term   := factor { "u" factor }
//! factor := [ count "*" ] atom
//! atom   := "K" int | "(" expr ")"
//! ```
//!
//! `+` is join (left associative) and binds looser than `u` (union). A term
//! with a single uncounted factor is that factor's atom; any other term is a
//! union whose uncounted parts have count 1. Whitespace is ignored.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::GraphExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    K,
    U,
    Plus,
    Star,
    Open,
    Close,
    Int(BigUint),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            'K' => Tok::K,
            'u' => Tok::U,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '0'..='9' => {
                let mut digits = String::from(c);
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn positive_int(&mut self, what: &str) -> Result<BigUint> {
        match self.peek() {
            Some(Tok::Int(v)) if v.is_zero() => self.error(format!("{what} must be at least 1")),
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.at += 1;
                Ok(v)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let mut left = self.term()?;
        while self.eat(&Tok::Plus) {
            let right = self.term()?;
            left = GraphExpr::join(left, right);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GraphExpr> {
        let mut parts = vec![self.factor()?];
        while self.eat(&Tok::U) {
            parts.push(self.factor()?);
        }
        if let [(None, _)] = parts.as_slice() {
            return Ok(parts.pop().expect("one part").1);
        }
        Ok(GraphExpr::Union(
            parts
                .into_iter()
                .map(|(count, atom)| (count.unwrap_or_else(BigUint::one), atom))
                .collect(),
        ))
    }

    fn factor(&mut self) -> Result<(Option<BigUint>, GraphExpr)> {
        let count = if matches!(self.peek(), Some(Tok::Int(_))) {
            let c = self.positive_int("copy count")?;
            if !self.eat(&Tok::Star) {
                return self.error("expected '*' after copy count");
            }
            Some(c)
        } else {
            None
        };
        Ok((count, self.atom()?))
    }

    fn atom(&mut self) -> Result<GraphExpr> {
        if self.eat(&Tok::K) {
            return Ok(GraphExpr::Complete(self.positive_int("complete graph size")?));
        }
        if self.eat(&Tok::Open) {
            let inner = self.expr()?;
            if !self.eat(&Tok::Close) {
                return self.error("expected ')'");
            }
            return Ok(inner);
        }
        self.error("expected 'K' or '('")
    }
}

pub fn parse_expr(text: &str) -> Result<GraphExpr> {
    let mut parser = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.at != parser.toks.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(expr)
}

/// Canonical rendering: every union part carries its count, unions with two or
/// more parts are parenthesized inside a join, and the right operand of a join
/// is parenthesized when it is itself a join.
pub fn print_expr(e: &GraphExpr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

fn write_expr(e: &GraphExpr, out: &mut String) {
    match e {
        GraphExpr::Complete(k) => {
            out.push('K');
            out.push_str(&k.to_string());
        }
        GraphExpr::Union(parts) => {
            for (i, (count, part)) in parts.iter().enumerate() {
                if i > 0 {
                    out.push_str(" u ");
                }
                out.push_str(&count.to_string());
                out.push('*');
                write_atom(part, out);
            }
        }
        GraphExpr::Join(l, r) => {
            match l.as_ref() {
                GraphExpr::Union(parts) if parts.len() > 1 => write_parens(l, out),
                _ => write_expr(l, out),
            }
            out.push_str(" + ");
            match r.as_ref() {
                GraphExpr::Join(..) => write_parens(r, out),
                GraphExpr::Union(parts) if parts.len() > 1 => write_parens(r, out),
                _ => write_expr(r, out),
            }
        }
    }
}

fn write_atom(e: &GraphExpr, out: &mut String) {
    match e {
        GraphExpr::Complete(_) => write_expr(e, out),
        _ => write_parens(e, out),
    }
}

fn write_parens(e: &GraphExpr, out: &mut String) {
    out.push('(');
    write_expr(e, out);
    out.push(')');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::power_graph_expr_z2r4s;

    fn k(n: u32) -> GraphExpr {
        GraphExpr::Complete(BigUint::from(n))
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn parses_simple_join() {
        let e = parse_expr("K1 + 3*K2").unwrap();
        assert_eq!(e, GraphExpr::join(k(1), GraphExpr::Union(vec![(big(3), k(2))])));
    }

    #[test]
    fn parses_theorem_shape() {
        let e = parse_expr("K1 + (6*K1 u 1*(K1 + 4*K2))").unwrap();
        assert_eq!(e, power_graph_expr_z2r4s(2, 1).unwrap());
        // Union binds tighter than join, so the parentheses are optional.
        assert_eq!(parse_expr("K1 + 6*K1 u 1*(K1 + 4*K2)").unwrap(), e);
    }

    #[test]
    fn rejects_empty_graphs_and_zero_counts() {
        assert!(matches!(parse_expr("K0"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_expr("0*K1"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_expr("K1 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_expr("(K1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("K1 K2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_expr("K1 - K2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_expr("3 K1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn join_is_left_associative() {
        let e = parse_expr("K1 + K2 + K3").unwrap();
        assert_eq!(e, GraphExpr::join(GraphExpr::join(k(1), k(2)), k(3)));
        assert_eq!(print_expr(&e), "K1 + K2 + K3");
        let right = GraphExpr::join(k(1), GraphExpr::join(k(2), k(3)));
        assert_eq!(print_expr(&right), "K1 + (K2 + K3)");
        assert_eq!(parse_expr(&print_expr(&right)).unwrap(), right);
    }

    #[test]
    fn round_trips() {
        for text in [
            "K1 + 3*K2",
            "K1 + (6*K1 u 1*(K1 + 4*K2))",
            "K1 + 1*(K1 + 1*K2)",
            "2*(1*K1 u 1*K2)",
            "(1*K1 u 2*K3) + K4",
        ] {
            let e = parse_expr(text).unwrap();
            assert_eq!(print_expr(&e), text);
            assert_eq!(parse_expr(&print_expr(&e)).unwrap(), e);
        }
        // Non-canonical spellings settle on a canonical form.
        let e = parse_expr(" K2 u K3 ").unwrap();
        assert_eq!(print_expr(&e), "1*K2 u 1*K3");
        assert_eq!(print_expr(&parse_expr(&print_expr(&e)).unwrap()), "1*K2 u 1*K3");
    }
}
