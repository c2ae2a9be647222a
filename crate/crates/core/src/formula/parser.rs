use std::fmt;

use thiserror::Error;

use super::Formula;
use crate::truth::TruthValue;

/// Maximum parenthesis/negation nesting accepted by the parser.
const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: expected {}, found {found}", join_expected(.expected))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("constant {value} at line {line}, column {column} is outside [0, 1]")]
    ConstantOutOfRange { line: usize, column: usize, value: f64 },
    #[error("formula nests deeper than {max} levels at line {line}, column {column}")]
    TooDeep { line: usize, column: usize, max: usize },
}

impl ParseError {
    /// 1-based (line, column) of the error.
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::ConstantOutOfRange { line, column, .. }
            | ParseError::TooDeep { line, column, .. } => (*line, *column),
        }
    }
}

fn join_expected(expected: &[String]) -> String {
    match expected {
        [] => "nothing".to_owned(),
        [one] => one.clone(),
        _ => format!("one of {}", expected.join(", ")),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "atom `{s}`"),
            Tok::Number(s) => write!(f, "constant `{s}`"),
            Tok::Not => f.write_str("`!`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, expected: &[&str], found: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let push = |out: &mut Vec<Spanned>, tok| {
            out.push(Spanned {
                tok,
                line: start_line,
                column: start_col,
            })
        };
        match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '!' | '¬' => push(&mut out, Tok::Not),
            '&' | '∧' => push(&mut out, Tok::And),
            '|' | '∨' => push(&mut out, Tok::Or),
            '→' => push(&mut out, Tok::Arrow),
            '(' => push(&mut out, Tok::LParen),
            ')' => push(&mut out, Tok::RParen),
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    push(&mut out, Tok::Arrow);
                    i += 2;
                    column += 2;
                    continue;
                }
                return Err(syntax(line, column, &["`->`"], "`-`"));
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text: String = chars[start..i].iter().collect();
                if text == "." {
                    return Err(syntax(line, column, &["a digit"], "`.`"));
                }
                column += i - start;
                push(&mut out, Tok::Number(text));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                column += i - start;
                let tok = match word.as_str() {
                    "not" => Tok::Not,
                    "and" => Tok::And,
                    "or" => Tok::Or,
                    _ => Tok::Ident(word),
                };
                push(&mut out, tok);
                continue;
            }
            other => {
                return Err(syntax(
                    line,
                    column,
                    &["an atom", "a constant", "an operator", "a parenthesis"],
                    format!("`{other}`"),
                ))
            }
        }
        i += 1;
        column += 1;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

const OPERAND: [&str; 5] = ["an atom", "a constant", "`!`", "`not`", "`(`"];

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let t = self.peek();
            return Err(ParseError::TooDeep {
                line: t.line,
                column: t.column,
                max: MAX_DEPTH,
            });
        }
        Ok(())
    }

    fn check_chain(&self, chain: usize) -> Result<(), ParseError> {
        if self.depth + chain > MAX_DEPTH {
            let t = self.peek();
            return Err(ParseError::TooDeep {
                line: t.line,
                column: t.column,
                max: MAX_DEPTH,
            });
        }
        Ok(())
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            self.descend()?;
            let rhs = self.implication()?;
            self.depth -= 1;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        let mut chain = 0;
        while self.peek().tok == Tok::Or {
            chain += 1;
            self.check_chain(chain)?;
            self.bump();
            let rhs = self.conjunction()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        let mut chain = 0;
        while self.peek().tok == Tok::And {
            chain += 1;
            self.check_chain(chain)?;
            self.bump();
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.peek().tok == Tok::Not {
            self.bump();
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Formula::not(inner));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => Ok(Formula::Atom(name)),
            Tok::Number(text) => {
                let value: f64 = text
                    .parse()
                    .map_err(|_| syntax(t.line, t.column, &["a constant"], format!("`{text}`")))?;
                TruthValue::new(value)
                    .map(Formula::Const)
                    .map_err(|_| ParseError::ConstantOutOfRange {
                        line: t.line,
                        column: t.column,
                        value,
                    })
            }
            Tok::LParen => {
                self.descend()?;
                let inner = self.implication()?;
                self.depth -= 1;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(syntax(
                        close.line,
                        close.column,
                        &["`)`", "`&`", "`|`", "`->`"],
                        close.tok.to_string(),
                    ));
                }
                Ok(inner)
            }
            other => Err(syntax(t.line, t.column, &OPERAND, other.to_string())),
        }
    }
}

/// Parses a formula. Positions in errors are 1-based and count characters.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    let f = p.implication()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(syntax(
            t.line,
            t.column,
            &["`&`", "`|`", "`->`", "end of input"],
            t.tok.to_string(),
        ));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(name: &str) -> Formula {
        Formula::Atom(name.to_owned())
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("!a -> b").unwrap(),
            Formula::implies(Formula::not(a("a")), a("b"))
        );
        assert_eq!(
            parse("a -> b -> c").unwrap(),
            Formula::implies(a("a"), Formula::implies(a("b"), a("c")))
        );
        assert_eq!(
            parse("a | b & c").unwrap(),
            Formula::or(a("a"), Formula::and(a("b"), a("c")))
        );
        assert_eq!(
            parse("a & b & c").unwrap(),
            Formula::and(Formula::and(a("a"), a("b")), a("c"))
        );
        assert_eq!(
            parse("a or b or c").unwrap(),
            Formula::or(Formula::or(a("a"), a("b")), a("c"))
        );
        assert_eq!(
            parse("a | b -> c & d").unwrap(),
            Formula::implies(Formula::or(a("a"), a("b")), Formula::and(a("c"), a("d")))
        );
        assert_eq!(parse("¬p ∧ q → r").unwrap(), parse("!p & q -> r").unwrap());
        assert_eq!(parse("not(a)").unwrap(), Formula::not(a("a")));
    }

    #[test]
    fn constants() {
        assert_eq!(parse("0.25").unwrap(), Formula::Const(TruthValue::new(0.25).unwrap()));
        assert_eq!(parse(".5").unwrap(), Formula::Const(TruthValue::new(0.5).unwrap()));
        assert_eq!(parse("1").unwrap(), Formula::Const(TruthValue::TRUE));
        assert_eq!(
            parse("a & 1.5"),
            Err(ParseError::ConstantOutOfRange {
                line: 1,
                column: 5,
                value: 1.5
            })
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("a & | b").unwrap_err();
        assert_eq!(err.position(), (1, 5));
        match &err {
            ParseError::Syntax { expected, found, .. } => {
                assert!(expected.iter().any(|e| e == "an atom"));
                assert_eq!(found, "`|`");
            }
            other => panic!("unexpected {other:?}"),
        }

        assert_eq!(parse("(a & b").unwrap_err().position(), (1, 7));
        assert_eq!(parse("a b").unwrap_err().position(), (1, 3));
        assert_eq!(parse("a -\n b").unwrap_err().position(), (1, 3));
        assert_eq!(parse("a &\n  # b").unwrap_err().position(), (2, 3));
        assert_eq!(parse("").unwrap_err().position(), (1, 1));
        assert_eq!(parse("a ->").unwrap_err().position(), (1, 5));
    }

    #[test]
    fn deep_nesting_is_rejected_not_overflowed() {
        let deep = format!("{}a{}", "(".repeat(10_000), ")".repeat(10_000));
        assert!(matches!(parse(&deep), Err(ParseError::TooDeep { .. })));
        let nots = format!("{}a", "!".repeat(10_000));
        assert!(matches!(parse(&nots), Err(ParseError::TooDeep { .. })));
        let chain = vec!["a"; 10_000].join(" & ");
        assert!(matches!(parse(&chain), Err(ParseError::TooDeep { .. })));
        let ok = format!("{}a{}", "(".repeat(100), ")".repeat(100));
        assert_eq!(parse(&ok).unwrap(), a("a"));
    }
}
