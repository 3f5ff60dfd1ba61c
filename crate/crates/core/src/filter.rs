//! A small filter expression language over scan report fields:
//! conjunctions of flag tests and numeric comparisons, with negation.
//!
//! Examples: `candidate`, `bipartite & db & conn=2 & !cycle`,
//! `mindeg>=3 & cutdist>=4`.

use crate::error::{Error, Result};
use crate::report::ScanReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    And(Vec<Expr>),
    Not(Box<Expr>),
    Flag(BoolField),
    Cmp(NumField, Cmp, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolField {
    Connected,
    Bipartite,
    Db,
    Sdb,
    Pcube,
    Cycle,
    Candidate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumField {
    Order,
    Size,
    MinDeg,
    Conn,
    /// Absent cut distances fail every comparison.
    CutDist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Expr {
    pub fn matches(&self, r: &ScanReport) -> bool {
        match self {
            Expr::And(terms) => terms.iter().all(|t| t.matches(r)),
            Expr::Not(inner) => !inner.matches(r),
            Expr::Flag(f) => match f {
                BoolField::Connected => r.flags.connected,
                BoolField::Bipartite => r.flags.bipartite,
                BoolField::Db => r.flags.distance_balanced,
                BoolField::Sdb => r.flags.strongly_db,
                BoolField::Pcube => r.flags.partial_cube,
                BoolField::Cycle => r.cycle,
                BoolField::Candidate => r.candidate,
            },
            Expr::Cmp(f, op, rhs) => {
                let lhs = match f {
                    NumField::Order => r.order as i64,
                    NumField::Size => r.size as i64,
                    NumField::MinDeg => r.flags.min_degree as i64,
                    NumField::Conn => r.flags.vertex_connectivity as i64,
                    NumField::CutDist => match r.cut_distance {
                        Some(d) => d as i64,
                        None => return false,
                    },
                };
                match op {
                    Cmp::Eq => lhs == *rhs,
                    Cmp::Ne => lhs != *rhs,
                    Cmp::Lt => lhs < *rhs,
                    Cmp::Le => lhs <= *rhs,
                    Cmp::Gt => lhs > *rhs,
                    Cmp::Ge => lhs >= *rhs,
                }
            }
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut parser = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::BadFilter(format!(
            "trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(expr)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(i64),
    Op(Cmp),
    Amp,
    Bang,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '&' => {
                tokens.push(Token::Amp);
                i += 1;
            }
            '!' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    tokens.push(Token::Op(Cmp::Ne));
                    i += 2;
                } else {
                    tokens.push(Token::Bang);
                    i += 1;
                }
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '=' => {
                tokens.push(Token::Op(Cmp::Eq));
                i += 1;
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    tokens.push(Token::Op(Cmp::Le));
                    i += 2;
                } else {
                    tokens.push(Token::Op(Cmp::Lt));
                    i += 1;
                }
            }
            '>' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    tokens.push(Token::Op(Cmp::Ge));
                    i += 2;
                } else {
                    tokens.push(Token::Op(Cmp::Gt));
                    i += 1;
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: i64 = input[start..i]
                    .parse()
                    .map_err(|_| Error::BadFilter(format!("bad number {}", &input[start..i])))?;
                tokens.push(Token::Number(num));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token::Ident(input[start..i].to_ascii_lowercase()));
            }
            _ => return Err(Error::BadFilter(format!("unexpected character {c:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Token::Amp) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::And(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Token::Bang) => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.term()?)))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(Error::BadFilter("missing closing parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                self.atom(&name)
            }
            other => Err(Error::BadFilter(format!("unexpected token {other:?}"))),
        }
    }

    fn atom(&mut self, name: &str) -> Result<Expr> {
        if let Some(Token::Op(op)) = self.peek().cloned() {
            self.pos += 1;
            let Some(Token::Number(rhs)) = self.peek().cloned() else {
                return Err(Error::BadFilter(format!(
                    "expected a number after the comparison on {name}"
                )));
            };
            self.pos += 1;
            let field = match name {
                "order" | "n" => NumField::Order,
                "size" | "edges" => NumField::Size,
                "mindeg" => NumField::MinDeg,
                "conn" => NumField::Conn,
                "cutdist" => NumField::CutDist,
                _ => return Err(Error::BadFilter(format!("unknown numeric field {name}"))),
            };
            return Ok(Expr::Cmp(field, op, rhs));
        }
        let field = match name {
            "connected" => BoolField::Connected,
            "bipartite" => BoolField::Bipartite,
            "db" => BoolField::Db,
            "sdb" => BoolField::Sdb,
            "pcube" => BoolField::Pcube,
            "cycle" => BoolField::Cycle,
            "candidate" => BoolField::Candidate,
            _ => return Err(Error::BadFilter(format!("unknown flag {name}"))),
        };
        Ok(Expr::Flag(field))
    }
}
