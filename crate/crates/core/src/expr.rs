//! Graph expressions.
//!
//! ```text
//! expr   := family | op '(' args ')'
//! family := NAME [INT] { INT }          e.g. P4, C 6, Kbar3, Kmp 2 3, Petersen
//! op     := join(expr, expr) | lex(expr, expr)
//!         | hjoin(expr; expr, ...) | corona(expr; expr, ...)
//!         | coalesce(expr @ INT, expr @ INT)
//! ```
//!
//! A family name is the longest known alias that prefixes the identifier; any
//! digits left over form the first parameter.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, FAMILY_NAMES};
use crate::operators::{coalescence, generalized_corona, h_join, join, JoinScheme};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Family { name: String, params: Vec<usize> },
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Lex(Box<GraphExpr>, Box<GraphExpr>),
    HJoin { host: Box<GraphExpr>, factors: Vec<GraphExpr> },
    Corona { host: Box<GraphExpr>, factors: Vec<GraphExpr> },
    Coalesce {
        left: Box<GraphExpr>,
        left_vertex: usize,
        right: Box<GraphExpr>,
        right_vertex: usize,
    },
}

impl GraphExpr {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Self::Family { name, params } => Graph::family(name, params),
            Self::Join(a, b) => Ok(join(&a.build()?, &b.build()?)),
            Self::Lex(..) | Self::HJoin { .. } => Ok(h_join(&self.join_scheme()?.expect("join node"))),
            Self::Corona { host, factors } => {
                let fs = factors.iter().map(GraphExpr::build).collect::<Result<Vec<_>>>()?;
                generalized_corona(&host.build()?, &fs)
            }
            Self::Coalesce {
                left,
                left_vertex,
                right,
                right_vertex,
            } => coalescence(&left.build()?, *left_vertex, &right.build()?, *right_vertex),
        }
    }

    /// The join scheme behind an `hjoin` or `lex` node.
    pub fn join_scheme(&self) -> Result<Option<JoinScheme>> {
        match self {
            Self::HJoin { host, factors } => {
                let fs = factors.iter().map(GraphExpr::build).collect::<Result<Vec<_>>>()?;
                JoinScheme::new(host.build()?, fs).map(Some)
            }
            Self::Lex(h, g) => {
                let h = h.build()?;
                let g = g.build()?;
                let k = h.order();
                JoinScheme::new(h, vec![g; k]).map(Some)
            }
            _ => Ok(None),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[GraphExpr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Family { name, params } => {
                write!(f, "{name}")?;
                for p in params {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
            Self::Join(a, b) => write!(f, "join({a}, {b})"),
            Self::Lex(a, b) => write!(f, "lex({a}, {b})"),
            Self::HJoin { host, factors } => {
                write!(f, "hjoin({host}; ")?;
                write_list(f, factors)?;
                write!(f, ")")
            }
            Self::Corona { host, factors } => {
                write!(f, "corona({host}; ")?;
                write_list(f, factors)?;
                write!(f, ")")
            }
            Self::Coalesce {
                left,
                left_vertex,
                right,
                right_vertex,
            } => write!(f, "coalesce({left} @ {left_vertex}, {right} @ {right_vertex})"),
        }
    }
}

/// Parses and builds a graph expression.
pub fn parse_graph(src: &str) -> Result<Graph> {
    GraphExpr::parse(src)?.build()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse {
                offset: start,
                message: "expected a non-negative integer".into(),
            })
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        self.skip_ws();
        let start = self.pos;
        let word = self.ident().to_string();
        if word.is_empty() {
            return Err(self.err("expected a graph expression"));
        }
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some('(') && matches!(word.as_str(), "join" | "lex" | "hjoin" | "corona" | "coalesce") {
            self.pos += 1;
            return self.operator(&word);
        }
        self.pos = save;
        self.family(start, &word)
    }

    fn operator(&mut self, op: &str) -> Result<GraphExpr> {
        let node = match op {
            "join" | "lex" => {
                let a = Box::new(self.expr()?);
                self.expect(',')?;
                let b = Box::new(self.expr()?);
                if op == "join" {
                    GraphExpr::Join(a, b)
                } else {
                    GraphExpr::Lex(a, b)
                }
            }
            "hjoin" | "corona" => {
                let host = Box::new(self.expr()?);
                self.expect(';')?;
                let mut factors = vec![self.expr()?];
                loop {
                    self.skip_ws();
                    if self.peek() != Some(',') {
                        break;
                    }
                    self.pos += 1;
                    factors.push(self.expr()?);
                }
                if op == "hjoin" {
                    GraphExpr::HJoin { host, factors }
                } else {
                    GraphExpr::Corona { host, factors }
                }
            }
            _ => {
                let left = Box::new(self.expr()?);
                self.expect('@')?;
                let left_vertex = self.int()?;
                self.expect(',')?;
                let right = Box::new(self.expr()?);
                self.expect('@')?;
                let right_vertex = self.int()?;
                GraphExpr::Coalesce {
                    left,
                    left_vertex,
                    right,
                    right_vertex,
                }
            }
        };
        self.expect(')')?;
        Ok(node)
    }

    fn family(&mut self, start: usize, word: &str) -> Result<GraphExpr> {
        let (name, rest) = FAMILY_NAMES
            .iter()
            .map(|(alias, _)| *alias)
            .filter(|alias| {
                word.strip_prefix(alias)
                    .is_some_and(|r| r.chars().all(|c| c.is_ascii_digit()))
            })
            .max_by_key(|alias| alias.len())
            .map(|alias| (alias, &word[alias.len()..]))
            .ok_or_else(|| Error::Parse {
                offset: start,
                message: format!("unknown graph family '{word}'"),
            })?;
        let mut params = Vec::new();
        if !rest.is_empty() {
            params.push(rest.parse().map_err(|_| Error::Parse {
                offset: start,
                message: "parameter out of range".into(),
            })?);
        }
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                params.push(self.int()?);
            } else {
                self.pos = save;
                break;
            }
        }
        Ok(GraphExpr::Family {
            name: name.to_string(),
            params,
        })
    }
}
