//! Recursive-descent parser for the concrete term syntax:
//!
//! ```text
//! term ::= atom+                  (left-associative application)
//! atom ::= name | "\" name "." term | "(" term ")"
//! ```
//!
//! Whitespace is insignificant; a lambda body extends as far right as
//! possible. Contexts are not part of the syntax — they are supplied
//! separately.

use super::{Context, LinearTerm, Term, TermError};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> TermError {
        TermError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn name(&mut self) -> Result<String, TermError> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return Err(self.error("expected a variable name")),
        }
        while let Some(c) = self.bytes.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("name bytes are ASCII")
            .to_string())
    }

    fn expect(&mut self, c: u8) -> Result<(), TermError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            Some(b'\\') => {
                self.pos += 1;
                let binder = self.name()?;
                self.expect(b'.')?;
                let body = self.term()?;
                Ok(Term::abs(binder, body))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.term()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(Term::Var(self.name()?)),
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(b')') | None => return Ok(acc),
                Some(_) => {
                    let next = self.atom()?;
                    acc = Term::app(acc, next);
                }
            }
        }
    }
}

/// Parses program text as a term in the given context, then checks linearity.
pub fn parse_term(text: &str, context: &Context) -> Result<LinearTerm, TermError> {
    let mut parser = Parser::new(text);
    let term = parser.term()?;
    if parser.peek().is_some() {
        return Err(parser.error("trailing input"));
    }
    LinearTerm::new(context.clone(), term)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_lambdas_and_application() {
        let t = parse_term("\\x.\\y. x (\\z. y z)", &Context::empty()).unwrap();
        let expected = Term::abs(
            "x",
            Term::abs(
                "y",
                Term::app(
                    Term::var("x"),
                    Term::abs("z", Term::app(Term::var("y"), Term::var("z"))),
                ),
            ),
        );
        assert_eq!(t.term(), &expected);
    }

    #[test]
    fn single_variable() {
        let ctx = Context::parse("x").unwrap();
        let t = parse_term("x", &ctx).unwrap();
        assert_eq!(t.term(), &Term::var("x"));
    }

    #[test]
    fn nonlinear_use_is_reported() {
        let ctx = Context::parse("x").unwrap();
        assert_eq!(
            parse_term("x x", &ctx),
            Err(TermError::VariableUsedTwice("x".into()))
        );
    }

    #[test]
    fn application_is_left_associative_and_lambda_greedy() {
        let ctx = Context::parse("a,b,c").unwrap();
        let t = parse_term("a b c", &ctx).unwrap();
        assert_eq!(
            t.term(),
            &Term::app(Term::app(Term::var("a"), Term::var("b")), Term::var("c"))
        );
        let u = parse_term("\\x. x a b", &Context::parse("a,b").unwrap()).unwrap();
        assert_eq!(
            u.term(),
            &Term::abs(
                "x",
                Term::app(Term::app(Term::var("x"), Term::var("a")), Term::var("b"))
            )
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_term("\\x.", &Context::empty()) {
            Err(TermError::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_term("(x", &Context::parse("x").unwrap()) {
            Err(TermError::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_term("x ) y", &Context::parse("x,y").unwrap()),
            Err(TermError::Syntax { .. })
        ));
    }

    #[test]
    fn print_then_parse_is_identity_up_to_alpha() {
        let samples = [
            ("\\x.\\y.\\z.x (y z)", ""),
            ("\\x.\\y.\\z.x z y", ""),
            ("(\\x.x) (\\y.y)", ""),
            ("x (\\z.y z)", "x,y"),
        ];
        for (text, ctx_text) in samples {
            let ctx = Context::parse(ctx_text).unwrap();
            let t = parse_term(text, &ctx).unwrap();
            let reparsed = parse_term(&t.to_string(), &ctx).unwrap();
            assert!(t.alpha_eq(&reparsed), "term {text}");
        }
    }
}
