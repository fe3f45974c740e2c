//! The braid word grammar:
//!
//! ```text
//! WORD := TERM+
//! TERM := ATOM ['^' INT]
//! ATOM := 's' INT | 'Delta' | 'Delta2' | '(' WORD ')'
//! INT  := '-'? [0-9]+
//! ```
//!
//! Whitespace separates terms; generator indices are 1-based and checked
//! against the declared strand count at parse time.

use std::fmt;

use ordlib::braid::{delta, delta_squared, BraidWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordExpr {
    Gen(usize),
    Delta,
    Delta2,
    Pow(Box<WordExpr>, i64),
    Seq(Vec<WordExpr>),
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    strands: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_whitespace(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn parse_int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return self.syntax("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<i64>().or_else(|_| {
            self.syntax("integer literal out of range")
        })
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn parse_atom(&mut self) -> Result<WordExpr, ParseError> {
        match self.peek() {
            Some(b's') => {
                self.pos += 1;
                let index = self.parse_int()?;
                if index < 1 || index as usize >= self.strands {
                    return Err(ParseError::IndexOutOfRange {
                        index,
                        strands: self.strands,
                    });
                }
                Ok(WordExpr::Gen(index as usize))
            }
            Some(b'D') => {
                if self.eat_keyword("Delta2") {
                    Ok(WordExpr::Delta2)
                } else if self.eat_keyword("Delta") {
                    Ok(WordExpr::Delta)
                } else {
                    self.syntax("expected `Delta` or `Delta2`")
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_word()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    self.syntax("expected `)`")
                }
            }
            Some(c) => self.syntax(format!(
                "expected a generator, `Delta`, `Delta2` or `(`, found {:?}",
                c as char
            )),
            None => self.syntax("expected a term"),
        }
    }

    fn parse_term(&mut self) -> Result<WordExpr, ParseError> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exponent = self.parse_int()?;
            Ok(WordExpr::Pow(Box::new(atom), exponent))
        } else {
            Ok(atom)
        }
    }

    fn parse_word(&mut self) -> Result<WordExpr, ParseError> {
        let mut terms = Vec::new();
        loop {
            self.skip_whitespace();
            match self.peek() {
                None | Some(b')') => break,
                _ => terms.push(self.parse_term()?),
            }
        }
        match terms.len() {
            0 => self.syntax("empty word"),
            1 => Ok(terms.pop().expect("one term")),
            _ => Ok(WordExpr::Seq(terms)),
        }
    }
}

pub fn parse_word(text: &str, strands: usize) -> Result<WordExpr, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        strands,
    };
    let expr = parser.parse_word()?;
    parser.skip_whitespace();
    if parser.peek().is_some() {
        return parser.syntax("unexpected trailing input");
    }
    Ok(expr)
}

impl WordExpr {
    pub fn elaborate(&self, strands: usize) -> BraidWord {
        match self {
            WordExpr::Gen(i) => BraidWord::generator(strands, *i).expect("validated at parse time"),
            WordExpr::Delta => delta(strands),
            WordExpr::Delta2 => delta_squared(strands),
            WordExpr::Pow(base, k) => base.elaborate(strands).pow(*k),
            WordExpr::Seq(terms) => terms.iter().fold(BraidWord::empty(strands), |acc, t| {
                acc.multiply(&t.elaborate(strands)).expect("same strand count")
            }),
        }
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Gen(i) => write!(f, "s{i}"),
            WordExpr::Delta => write!(f, "Delta"),
            WordExpr::Delta2 => write!(f, "Delta2"),
            WordExpr::Pow(base, k) => match base.as_ref() {
                WordExpr::Seq(_) | WordExpr::Pow(..) => write!(f, "({base})^{k}"),
                atom => write!(f, "{atom}^{k}"),
            },
            WordExpr::Seq(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    match t {
                        WordExpr::Seq(_) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
