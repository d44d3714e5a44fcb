use std::collections::HashMap;

use super::lexer::{tokenize, Tok, Token};
use super::{DslError, ErrorKind, Pos};

const KEYWORDS: &[&str] =
    &["algebra", "filter", "on", "chain", "product", "interval", "quotient", "table", "size", "neg", "oplus"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementLiteral {
    /// Flat element index.
    Index(usize),
    /// Per-factor indices of a product element.
    Tuple(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    pub literal: ElementLiteral,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraExpr {
    Chain(usize),
    Product(Vec<Expr>),
    Interval(Box<Expr>, Elem),
    Quotient(Box<Expr>, Vec<Elem>),
    Table { size: usize, neg: Vec<usize>, oplus: Vec<usize> },
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: AlgebraExpr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Algebra { name: String, expr: Expr, pos: Pos },
    Filter { name: String, algebra: String, elements: Vec<Elem>, pos: Pos },
}

impl Binding {
    pub fn name(&self) -> &str {
        match self {
            Binding::Algebra { name, .. } | Binding::Filter { name, .. } => name,
        }
    }
}

/// Bindings in file order. Names are unique and every reference points at
/// an earlier algebra binding.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceFile {
    pub bindings: Vec<Binding>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Algebra,
    Filter,
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    names: HashMap<String, Kind>,
}

pub fn parse(text: &str) -> Result<SourceFile, DslError> {
    let mut p = Parser { tokens: tokenize(text)?, at: 0, names: HashMap::new() };
    let mut bindings = Vec::new();
    loop {
        match &p.peek().tok {
            Tok::Eof => break,
            Tok::Newline => {
                p.at += 1;
            }
            _ => {
                bindings.push(p.binding()?);
                let t = p.peek();
                if !matches!(t.tok, Tok::Newline | Tok::Eof) {
                    return Err(p.unexpected("end of line"));
                }
            }
        }
    }
    Ok(SourceFile { bindings })
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        let t = self.peek();
        DslError::new(t.pos, ErrorKind::Syntax(format!("expected {wanted}, found {}", t.tok.describe())))
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, DslError> {
        if self.peek().tok == tok {
            Ok(self.next().pos)
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<Pos, DslError> {
        match &self.peek().tok {
            Tok::Ident(w) if w == word => Ok(self.next().pos),
            _ => Err(self.unexpected(&format!("'{word}'"))),
        }
    }

    fn int(&mut self) -> Result<(usize, Pos), DslError> {
        match self.peek().tok {
            Tok::Int(n) => Ok((n, self.next().pos)),
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn ints(&mut self) -> Result<Vec<(usize, Pos)>, DslError> {
        let mut out = vec![self.int()?];
        while matches!(self.peek().tok, Tok::Int(_)) {
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn name(&mut self) -> Result<(String, Pos), DslError> {
        match &self.peek().tok {
            Tok::Ident(w) if KEYWORDS.contains(&w.as_str()) => {
                let t = self.peek();
                Err(DslError::new(t.pos, ErrorKind::Syntax(format!("'{w}' is a reserved word"))))
            }
            Tok::Ident(w) => {
                let w = w.clone();
                Ok((w, self.next().pos))
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn declare(&mut self, name: &str, pos: Pos, kind: Kind) -> Result<(), DslError> {
        if self.names.insert(name.to_string(), kind).is_some() {
            return Err(DslError::new(pos, ErrorKind::DuplicateName(name.to_string())));
        }
        Ok(())
    }

    fn resolve_algebra(&self, name: &str, pos: Pos) -> Result<(), DslError> {
        match self.names.get(name) {
            Some(Kind::Algebra) => Ok(()),
            Some(Kind::Filter) => Err(DslError::new(pos, ErrorKind::NotAnAlgebra(name.to_string()))),
            None => Err(DslError::new(pos, ErrorKind::UnresolvedReference(name.to_string()))),
        }
    }

    fn binding(&mut self) -> Result<Binding, DslError> {
        let pos = self.peek().pos;
        match &self.peek().tok {
            Tok::Ident(w) if w == "algebra" => {
                self.next();
                let (name, name_pos) = self.name()?;
                self.expect(Tok::Eq)?;
                let expr = self.expr()?;
                self.declare(&name, name_pos, Kind::Algebra)?;
                Ok(Binding::Algebra { name, expr, pos })
            }
            Tok::Ident(w) if w == "filter" => {
                self.next();
                let (name, name_pos) = self.name()?;
                self.keyword("on")?;
                let (algebra, alg_pos) = self.name()?;
                self.resolve_algebra(&algebra, alg_pos)?;
                self.expect(Tok::Eq)?;
                let elements = self.element_set()?;
                self.declare(&name, name_pos, Kind::Filter)?;
                Ok(Binding::Filter { name, algebra, elements, pos })
            }
            _ => Err(self.unexpected("'algebra' or 'filter'")),
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let pos = self.peek().pos;
        let word = match &self.peek().tok {
            Tok::Ident(w) => w.clone(),
            _ => return Err(self.unexpected("an algebra expression")),
        };
        let kind = match word.as_str() {
            "chain" => {
                self.next();
                AlgebraExpr::Chain(self.int()?.0)
            }
            "product" => {
                self.next();
                self.expect(Tok::LParen)?;
                let mut children = vec![self.expr()?];
                self.expect(Tok::Comma)?;
                children.push(self.expr()?);
                while self.peek().tok == Tok::Comma {
                    self.next();
                    children.push(self.expr()?);
                }
                self.expect(Tok::RParen)?;
                AlgebraExpr::Product(children)
            }
            "interval" => {
                self.next();
                self.expect(Tok::LParen)?;
                let child = self.expr()?;
                self.expect(Tok::Comma)?;
                let e = self.element()?;
                self.expect(Tok::RParen)?;
                AlgebraExpr::Interval(Box::new(child), e)
            }
            "quotient" => {
                self.next();
                self.expect(Tok::LParen)?;
                let child = self.expr()?;
                self.expect(Tok::Comma)?;
                let set = self.element_set()?;
                self.expect(Tok::RParen)?;
                AlgebraExpr::Quotient(Box::new(child), set)
            }
            "table" => {
                self.next();
                self.table()?
            }
            _ => {
                let (name, _) = self.name()?;
                self.resolve_algebra(&name, pos)?;
                AlgebraExpr::Ref(name)
            }
        };
        Ok(Expr { kind, pos })
    }

    fn table(&mut self) -> Result<AlgebraExpr, DslError> {
        self.expect(Tok::LBrace)?;
        self.keyword("size")?;
        let (size, size_pos) = self.int()?;
        if size == 0 {
            return Err(DslError::new(size_pos, ErrorKind::Syntax("table size must be positive".into())));
        }
        self.expect(Tok::Semi)?;
        let neg_pos = self.keyword("neg")?;
        let neg = self.table_row(size, size, neg_pos, "neg")?;
        self.expect(Tok::Semi)?;
        let oplus_pos = self.keyword("oplus")?;
        let oplus = self.table_row(size, size * size, oplus_pos, "oplus")?;
        self.expect(Tok::RBrace)?;
        Ok(AlgebraExpr::Table { size, neg, oplus })
    }

    fn table_row(&mut self, size: usize, len: usize, pos: Pos, what: &str) -> Result<Vec<usize>, DslError> {
        let row = self.ints()?;
        if row.len() != len {
            return Err(DslError::new(
                pos,
                ErrorKind::Syntax(format!("{what} needs {len} entries for size {size}, found {}", row.len())),
            ));
        }
        if let Some(&(v, p)) = row.iter().find(|(v, _)| *v >= size) {
            return Err(DslError::new(p, ErrorKind::ElementOutOfRange { element: v.to_string(), size }));
        }
        Ok(row.into_iter().map(|(v, _)| v).collect())
    }

    fn element(&mut self) -> Result<Elem, DslError> {
        let pos = self.peek().pos;
        match self.peek().tok {
            Tok::Int(n) => {
                self.next();
                Ok(Elem { literal: ElementLiteral::Index(n), pos })
            }
            Tok::LParen => {
                self.next();
                let mut coords = vec![self.int()?.0];
                self.expect(Tok::Comma)?;
                coords.push(self.int()?.0);
                while self.peek().tok == Tok::Comma {
                    self.next();
                    coords.push(self.int()?.0);
                }
                self.expect(Tok::RParen)?;
                Ok(Elem { literal: ElementLiteral::Tuple(coords), pos })
            }
            _ => Err(self.unexpected("an element (integer or tuple)")),
        }
    }

    fn element_set(&mut self) -> Result<Vec<Elem>, DslError> {
        self.expect(Tok::LBrace)?;
        let mut out = vec![self.element()?];
        while self.peek().tok == Tok::Comma {
            self.next();
            out.push(self.element()?);
        }
        self.expect(Tok::RBrace)?;
        Ok(out)
    }
}
