use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Expression, ExpressionError};
use crate::automata::WeightedAutomaton;

/// Parses the textual expression grammar
///
/// ```text
/// E := inf(ID) | sup(ID) | min(E,E) | max(E,E) | (E + E) | (E - E) | -E
/// ```
///
/// against a set of loaded automata. `#` starts a comment. `-E` and
/// `E1 - E2` are surface syntax only: they desugar at parse time into the
/// complement and a sum with a complement, so the core AST keeps exactly
/// five node kinds. An `ID` of the form `NAME!neg` resolves to the loaded
/// automaton `NAME` with negated weights, which makes printed complements
/// re-parseable.
pub fn parse_expression(
    text: &str,
    automata: &BTreeMap<String, Arc<WeightedAutomaton>>,
    origin: &str,
) -> Result<Expression, ExpressionError> {
    let tokens = tokenize(text, origin)?;
    let mut parser = Parser { tokens, pos: 0, automata, origin, alphabet: None };
    let expr = parser.expression()?;
    let trailing = parser.peek();
    if trailing.kind != TokenKind::Eof {
        return Err(parser.error_at(trailing.line, trailing.col, "trailing input after expression"));
    }
    Ok(expr)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

fn tokenize(text: &str, origin: &str) -> Result<Vec<Token>, ExpressionError> {
    let mut tokens = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            '#' => {
                while let Some(&c) = chars.peek() {
                    bump(&mut chars);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            '(' | ')' | ',' | '+' | '-' => {
                let kind = match bump(&mut chars) {
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ',' => TokenKind::Comma,
                    '+' => TokenKind::Plus,
                    _ => TokenKind::Minus,
                };
                tokens.push(Token { kind, line: tline, col: tcol });
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '!' {
                        ident.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                tokens.push(Token { kind: TokenKind::Ident(ident), line: tline, col: tcol });
            }
            other => {
                return Err(ExpressionError::Syntax {
                    origin: origin.to_string(),
                    line: tline,
                    col: tcol,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, line, col });
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    automata: &'a BTreeMap<String, Arc<WeightedAutomaton>>,
    origin: &'a str,
    alphabet: Option<Vec<String>>,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, line: usize, col: usize, message: impl Into<String>) -> ExpressionError {
        ExpressionError::Syntax {
            origin: self.origin.to_string(),
            line,
            col,
            message: message.into(),
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token, ExpressionError> {
        let t = self.advance();
        if t.kind == kind {
            Ok(t)
        } else {
            Err(self.error_at(t.line, t.col, format!("expected {what}")))
        }
    }

    fn expression(&mut self) -> Result<Expression, ExpressionError> {
        let t = self.advance();
        match t.kind {
            TokenKind::Minus => Ok(self.expression()?.complement()),
            TokenKind::Ident(word) => match word.as_str() {
                "inf" | "sup" => {
                    self.expect(TokenKind::LParen, "`(`")?;
                    let id = self.ident()?;
                    let automaton = self.resolve(&id.0, id.1, id.2)?;
                    self.expect(TokenKind::RParen, "`)`")?;
                    Ok(if word == "inf" {
                        Expression::AtomInf(automaton)
                    } else {
                        Expression::AtomSup(automaton)
                    })
                }
                "min" | "max" => {
                    self.expect(TokenKind::LParen, "`(`")?;
                    let a = self.expression()?;
                    self.expect(TokenKind::Comma, "`,`")?;
                    let b = self.expression()?;
                    self.expect(TokenKind::RParen, "`)`")?;
                    Ok(if word == "min" {
                        Expression::min(a, b)
                    } else {
                        Expression::max(a, b)
                    })
                }
                other => Err(self.error_at(
                    t.line,
                    t.col,
                    format!("expected `inf`, `sup`, `min`, `max`, `(` or `-`, found `{other}`"),
                )),
            },
            TokenKind::LParen => {
                let a = self.expression()?;
                let op = self.advance();
                let b = match op.kind {
                    TokenKind::Plus => self.expression()?,
                    TokenKind::Minus => self.expression()?.complement(),
                    _ => return Err(self.error_at(op.line, op.col, "expected `+` or `-`")),
                };
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(Expression::sum(a, b))
            }
            TokenKind::Eof => Err(self.error_at(t.line, t.col, "unexpected end of input")),
            _ => Err(self.error_at(t.line, t.col, "expected an expression")),
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), ExpressionError> {
        let t = self.advance();
        match t.kind {
            TokenKind::Ident(name) => Ok((name, t.line, t.col)),
            _ => Err(self.error_at(t.line, t.col, "expected an automaton name")),
        }
    }

    /// `NAME!neg...` resolves to the negation of whatever `NAME...` (minus
    /// one suffix) resolves to.
    fn resolve(
        &mut self,
        name: &str,
        line: usize,
        col: usize,
    ) -> Result<Arc<WeightedAutomaton>, ExpressionError> {
        let automaton = self.resolve_inner(name)?;
        match &self.alphabet {
            None => self.alphabet = Some(automaton.alphabet.clone()),
            Some(alphabet) => {
                if &automaton.alphabet != alphabet {
                    return Err(self.error_at(
                        line,
                        col,
                        format!("alphabet-mismatch: `{name}` does not share the expression alphabet"),
                    ));
                }
            }
        }
        Ok(automaton)
    }

    fn resolve_inner(&self, name: &str) -> Result<Arc<WeightedAutomaton>, ExpressionError> {
        if let Some(found) = self.automata.get(name) {
            return Ok(found.clone());
        }
        if let Some(base) = name.strip_suffix("!neg") {
            let inner = self.resolve_inner(base)?;
            return Ok(Arc::new(inner.negated()));
        }
        Err(ExpressionError::UnknownAutomaton(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::testutil::{a1, a2};

    fn workspace() -> BTreeMap<String, Arc<WeightedAutomaton>> {
        let mut m = BTreeMap::new();
        m.insert("A1".to_string(), Arc::new(a1()));
        m.insert("A2".to_string(), Arc::new(a2()));
        m
    }

    #[test]
    fn parses_min_of_atoms() {
        let ws = workspace();
        let e = parse_expression("min(inf(A1), inf(A2))", &ws, "test").unwrap();
        assert_eq!(e.to_string(), "min(inf(A1), inf(A2))");
    }

    #[test]
    fn difference_desugars_to_sum_with_complement() {
        let ws = workspace();
        let e = parse_expression("(inf(A1) - inf(A2))", &ws, "test").unwrap();
        match &e {
            Expression::Sum(a, b) => {
                assert_eq!(a.to_string(), "inf(A1)");
                assert_eq!(b.to_string(), "sup(A2!neg)");
            }
            other => panic!("expected sum, got {other:?}"),
        }
    }

    #[test]
    fn unbalanced_parenthesis_is_a_syntax_error() {
        let ws = workspace();
        let e = parse_expression("min(inf(A1)", &ws, "test").unwrap_err();
        match e {
            ExpressionError::Syntax { line, message, .. } => {
                assert_eq!(line, 1);
                assert!(message.contains("expected `,`"), "{message}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_automaton_is_reported() {
        let ws = workspace();
        let e = parse_expression("inf(A9)", &ws, "test").unwrap_err();
        assert!(matches!(e, ExpressionError::UnknownAutomaton(name) if name == "A9"));
    }

    #[test]
    fn comments_and_whitespace_are_skipped() {
        let ws = workspace();
        let text = "# running example\nmin(inf(A1),\n    inf(A2))  # trailing\n";
        assert!(parse_expression(text, &ws, "test").is_ok());
    }

    #[test]
    fn print_parse_round_trip() {
        let ws = workspace();
        for text in [
            "min(inf(A1), inf(A2))",
            "max(sup(A1), (inf(A2) + inf(A1)))",
            "-min(inf(A1), sup(A2))",
            "(inf(A1) - sup(A2))",
        ] {
            let e = parse_expression(text, &ws, "test").unwrap();
            let reparsed = parse_expression(&e.to_string(), &ws, "test").unwrap();
            assert_eq!(e, reparsed, "round trip failed for `{text}`");
        }
    }
}
