//! A small integer/boolean expression language over the variables `m` and `n`.
//!
//! ```text
//! expr  := or
//! or    := and ( "||" and )*
//! and   := cmp ( "&&" cmp )*
//! cmp   := sum ( ("=="|"!="|"<="|">="|"<"|">") sum )?
//! sum   := prod ( ("+"|"-") prod )*
//! prod  := unary ( ("*"|"/"|"%") unary )*
//! unary := ("-"|"!") unary | atom
//! atom  := integer | "m" | "n" | "true" | "false" | "(" expr ")"
//! ```
//!
//! `/` and `%` are Euclidean integer division and remainder.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("variable `{0}` is not bound")]
    Unbound(char),
    #[error("type mismatch: {0}")]
    Type(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("integer overflow")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Int(i64),
    Bool(bool),
    Var(char),
    Neg(Box<Node>),
    Not(Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
}

/// A parsed expression together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    source: String,
    root: Node,
}

/// Values for `m` and `n`; one-parameter families bind only `n`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bindings {
    pub m: Option<i64>,
    pub n: Option<i64>,
}

impl Bindings {
    pub fn from_params(params: &[i64]) -> Self {
        match params {
            [] => Bindings::default(),
            [n] => Bindings { m: None, n: Some(*n) },
            [m, n, ..] => Bindings { m: Some(*m), n: Some(*n) },
        }
    }
}

impl Expr {
    pub fn parse(source: &str) -> Result<Self, ExprError> {
        let mut p = Parser { src: source.as_bytes(), pos: 0 };
        let root = p.or()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(Expr { source: source.to_string(), root })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval(&self, b: Bindings) -> Result<Value, ExprError> {
        eval(&self.root, b)
    }

    pub fn eval_int(&self, b: Bindings) -> Result<i64, ExprError> {
        match self.eval(b)? {
            Value::Int(v) => Ok(v),
            Value::Bool(_) => Err(ExprError::Type("expected an integer expression")),
        }
    }

    pub fn eval_bool(&self, b: Bindings) -> Result<bool, ExprError> {
        match self.eval(b)? {
            Value::Bool(v) => Ok(v),
            Value::Int(_) => Err(ExprError::Type("expected a boolean expression")),
        }
    }

    /// Variables mentioned anywhere in the expression.
    pub fn variables(&self) -> Vec<char> {
        fn walk(n: &Node, out: &mut Vec<char>) {
            match n {
                Node::Var(c) if !out.contains(c) => out.push(*c),
                Node::Neg(a) | Node::Not(a) => walk(a, out),
                Node::Bin(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                _ => {}
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn eval(node: &Node, b: Bindings) -> Result<Value, ExprError> {
    use Value::{Bool, Int};
    let int = |v: Value| match v {
        Int(x) => Ok(x),
        Bool(_) => Err(ExprError::Type("arithmetic on a boolean")),
    };
    let boolean = |v: Value| match v {
        Bool(x) => Ok(x),
        Int(_) => Err(ExprError::Type("logic on an integer")),
    };
    Ok(match node {
        Node::Int(v) => Int(*v),
        Node::Bool(v) => Bool(*v),
        Node::Var('m') => Int(b.m.ok_or(ExprError::Unbound('m'))?),
        Node::Var('n') => Int(b.n.ok_or(ExprError::Unbound('n'))?),
        Node::Var(c) => return Err(ExprError::Unbound(*c)),
        Node::Neg(a) => Int(int(eval(a, b)?)?.checked_neg().ok_or(ExprError::Overflow)?),
        Node::Not(a) => Bool(!boolean(eval(a, b)?)?),
        Node::Bin(BinOp::And, x, y) => Bool(boolean(eval(x, b)?)? && boolean(eval(y, b)?)?),
        Node::Bin(BinOp::Or, x, y) => Bool(boolean(eval(x, b)?)? || boolean(eval(y, b)?)?),
        Node::Bin(op, x, y) => {
            let (x, y) = (int(eval(x, b)?)?, int(eval(y, b)?)?);
            match op {
                BinOp::Add => Int(x.checked_add(y).ok_or(ExprError::Overflow)?),
                BinOp::Sub => Int(x.checked_sub(y).ok_or(ExprError::Overflow)?),
                BinOp::Mul => Int(x.checked_mul(y).ok_or(ExprError::Overflow)?),
                BinOp::Div if y == 0 => return Err(ExprError::DivisionByZero),
                BinOp::Rem if y == 0 => return Err(ExprError::DivisionByZero),
                BinOp::Div => Int(x.div_euclid(y)),
                BinOp::Rem => Int(x.rem_euclid(y)),
                BinOp::Eq => Bool(x == y),
                BinOp::Ne => Bool(x != y),
                BinOp::Lt => Bool(x < y),
                BinOp::Le => Bool(x <= y),
                BinOp::Gt => Bool(x > y),
                BinOp::Ge => Bool(x >= y),
                BinOp::And | BinOp::Or => unreachable!(),
            }
        }
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ExprError {
        ExprError::Parse { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.and()?;
        while self.eat("||") {
            lhs = Node::Bin(BinOp::Or, Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.cmp()?;
        while self.eat("&&") {
            lhs = Node::Bin(BinOp::And, Box::new(lhs), Box::new(self.cmp()?));
        }
        Ok(lhs)
    }

    fn cmp(&mut self) -> Result<Node, ExprError> {
        let lhs = self.sum()?;
        // Two-character operators first so `<=` is not read as `<`.
        for (tok, op) in [
            ("==", BinOp::Eq),
            ("!=", BinOp::Ne),
            ("<=", BinOp::Le),
            (">=", BinOp::Ge),
            ("<", BinOp::Lt),
            (">", BinOp::Gt),
        ] {
            if self.eat(tok) {
                return Ok(Node::Bin(op, Box::new(lhs), Box::new(self.sum()?)));
            }
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.prod()?;
        loop {
            let op = if self.eat("+") {
                BinOp::Add
            } else if self.eat("-") {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Node::Bin(op, Box::new(lhs), Box::new(self.prod()?));
        }
    }

    fn prod(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat("*") {
                BinOp::Mul
            } else if self.eat("/") {
                BinOp::Div
            } else if self.eat("%") {
                BinOp::Rem
            } else {
                return Ok(lhs);
            };
            lhs = Node::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if self.eat("-") {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"!") && !self.src[self.pos..].starts_with(b"!=") {
            self.pos += 1;
            return Ok(Node::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        self.skip_ws();
        if self.eat("(") {
            let inner = self.or()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if word.is_empty() {
            if self.pos < self.src.len() && self.src[self.pos] == b'.' {
                return Err(self.error("only integer literals are allowed"));
            }
            return Err(self.error("expected a number, `m`, `n` or `(`"));
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            return Err(self.error("only integer literals are allowed"));
        }
        match word {
            "m" => Ok(Node::Var('m')),
            "n" => Ok(Node::Var('n')),
            "true" => Ok(Node::Bool(true)),
            "false" => Ok(Node::Bool(false)),
            w if w.bytes().all(|c| c.is_ascii_digit()) => w
                .parse()
                .map(Node::Int)
                .map_err(|_| ExprError::Parse { offset: start, message: "integer literal too large".into() }),
            w => Err(ExprError::Parse { offset: start, message: format!("unknown identifier `{w}`") }),
        }
    }
}
