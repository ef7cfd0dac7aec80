//! Text formats for ideals, complexes and graphs.
//!
//! ```text
//! ring x1..x5; ideal x1*x2, x2^3*x3;
//! complex on 5: {1,2},{2,3},{3,4},{4,5},{5,1};
//! big: complex on 3: {1,2},{2,3}; small: complex on 3: {2};
//! graph on 5: 1-2, 2-3, 3-4, 4-5, 5-1;
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end of the line.

use std::fmt;

use reltak::{Face, Graph, Monomial, MonomialIdeal, RelativePair, RingContext, SimplicialComplex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug)]
pub enum Input {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
    Pair(RelativePair),
    Graph(Graph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Ideal(_) => "ideal",
            Input::Complex(_) => "complex",
            Input::Pair(_) => "complex pair",
            Input::Graph(_) => "graph",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut k, mut line, mut col) = (0, 1, 1);
    let err = |line, col, msg: String| ParseError { line, col, msg };
    while k < chars.len() {
        let c = chars[k];
        let (l0, c0) = (line, col);
        if c == '\n' {
            k += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            k += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            col += k - start;
            out.push(Spanned {
                tok: Tok::Ident(chars[start..k].iter().collect()),
                line: l0,
                col: c0,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            col += k - start;
            let s: String = chars[start..k].iter().collect();
            let n = s
                .parse()
                .map_err(|_| err(l0, c0, format!("number `{s}` is too large")))?;
            out.push(Spanned {
                tok: Tok::Num(n),
                line: l0,
                col: c0,
            });
            continue;
        }
        if c == '.' && chars.get(k + 1) == Some(&'.') {
            k += 2;
            col += 2;
            out.push(Spanned {
                tok: Tok::Sym(".."),
                line: l0,
                col: c0,
            });
            continue;
        }
        let sym = match c {
            ';' => ";",
            ',' => ",",
            ':' => ":",
            '{' => "{",
            '}' => "}",
            '-' => "-",
            '^' => "^",
            '*' => "*",
            _ => return Err(err(l0, c0, format!("unexpected character `{c}`"))),
        };
        k += 1;
        col += 1;
        out.push(Spanned {
            tok: Tok::Sym(sym),
            line: l0,
            col: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    warnings: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.col)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.here();
        Err(ParseError {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Tok::Sym(s) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.eat(sym) {
            Ok(())
        } else {
            self.error(format!("expected `{sym}`, found {}", self.peek()))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            t => self.error(format!("expected `{kw}`, found {t}")),
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Tok::Num(n) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            t => self.error(format!("expected a number, found {t}")),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            t => self.error(format!("expected a name, found {t}")),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => self.error(format!("unexpected {t} after the end of the input")),
        }
    }

    /// `x1..x5` or `a, b, c`.
    fn ring(&mut self) -> Result<std::sync::Arc<RingContext>, ParseError> {
        self.keyword("ring")?;
        let (line, col) = self.here();
        let first = self.ident()?;
        let names = if self.eat("..") {
            let (l2, c2) = self.here();
            let last = self.ident()?;
            let (p1, a) = split_index(&first).ok_or(ParseError {
                line,
                col,
                msg: format!("range start `{first}` has no numeric suffix"),
            })?;
            let (p2, b) = split_index(&last).ok_or(ParseError {
                line: l2,
                col: c2,
                msg: format!("range end `{last}` has no numeric suffix"),
            })?;
            if p1 != p2 || a > b {
                return Err(ParseError {
                    line,
                    col,
                    msg: format!("bad variable range `{first}..{last}`"),
                });
            }
            (a..=b).map(|k| format!("{p1}{k}")).collect()
        } else {
            let mut names = vec![first];
            while self.eat(",") {
                names.push(self.ident()?);
            }
            names
        };
        self.expect(";")?;
        RingContext::new(names).map_err(|e| ParseError {
            line,
            col,
            msg: e.to_string(),
        })
    }

    fn ideal(&mut self, ring: std::sync::Arc<RingContext>) -> Result<MonomialIdeal, ParseError> {
        self.keyword("ideal")?;
        let n = ring.n();
        let mut gens = Vec::new();
        loop {
            let (line, col) = self.here();
            if let Tok::Num(0) = self.peek() {
                self.pos += 1;
            } else {
                let m = self.monomial(&ring)?;
                if m.is_one() {
                    self.warnings.push(format!(
                        "line {line}, column {col}: generator equals 1, the ideal is the unit ideal"
                    ));
                }
                gens.push(m);
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect(";")?;
        MonomialIdeal::minimize(ring, gens).map_err(|e| {
            let (line, col) = self.here();
            ParseError {
                line,
                col,
                msg: format!("{e} ({n} variables)"),
            }
        })
    }

    fn monomial(&mut self, ring: &RingContext) -> Result<Monomial, ParseError> {
        let mut exps = vec![0u32; ring.n()];
        loop {
            match self.peek().clone() {
                Tok::Num(1) => {
                    self.pos += 1;
                }
                Tok::Ident(name) => {
                    let Some(v) = ring.index_of(&name) else {
                        return self.error(format!("undeclared variable `{name}`"));
                    };
                    self.pos += 1;
                    let e = if self.eat("^") {
                        let e = self.number()?;
                        u32::try_from(e).or_else(|_| self.error("exponent too large"))?
                    } else {
                        1
                    };
                    exps[v] = exps[v]
                        .checked_add(e)
                        .map_or_else(|| self.error("exponent too large"), Ok)?;
                }
                t => return self.error(format!("expected a variable, found {t}")),
            }
            if !self.eat("*") {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }

    fn header(&mut self, kw: &str) -> Result<usize, ParseError> {
        self.keyword(kw)?;
        self.keyword("on")?;
        let n = self.number()?;
        if n == 0 || n > 63 {
            return self.error(format!("vertex count must be between 1 and 63, got {n}"));
        }
        self.expect(":")?;
        Ok(n as usize)
    }

    fn vertex(&mut self, n: usize) -> Result<usize, ParseError> {
        let (line, col) = self.here();
        let v = self.number()?;
        if v == 0 || v as usize > n {
            return Err(ParseError {
                line,
                col,
                msg: format!("vertex {v} out of range 1..{n}"),
            });
        }
        Ok(v as usize - 1)
    }

    /// Facet list; no facets means the void complex and `{}` the complex `{∅}`.
    fn complex(&mut self) -> Result<SimplicialComplex, ParseError> {
        let n = self.header("complex")?;
        let mut facets = Vec::new();
        if !self.eat(";") {
            loop {
                self.expect("{")?;
                let mut f = Face::EMPTY;
                if !self.eat("}") {
                    loop {
                        f = f.with(self.vertex(n)?);
                        if !self.eat(",") {
                            break;
                        }
                    }
                    self.expect("}")?;
                }
                facets.push(f);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(";")?;
        }
        SimplicialComplex::from_facets(n, facets).or_else(|e| self.error(e.to_string()))
    }

    fn graph(&mut self) -> Result<Graph, ParseError> {
        let n = self.header("graph")?;
        let mut edges = Vec::new();
        if !self.eat(";") {
            loop {
                let (line, col) = self.here();
                let u = self.vertex(n)?;
                self.expect("-")?;
                let v = self.vertex(n)?;
                if u == v {
                    return Err(ParseError {
                        line,
                        col,
                        msg: format!("loop edge at vertex {}", u + 1),
                    });
                }
                edges.push((u, v));
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(";")?;
        }
        Graph::from_edges(n, edges).or_else(|e| self.error(e.to_string()))
    }
}

fn split_index(name: &str) -> Option<(&str, u64)> {
    let cut = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if cut == name.len() || cut == 0 {
        return None;
    }
    Some((&name[..cut], name[cut..].parse().ok()?))
}

/// Parses any of the supported inputs, dispatching on the first keyword.
/// Returns the object together with warnings.
pub fn parse_input(text: &str) -> Result<(Input, Vec<String>), ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        warnings: Vec::new(),
    };
    let input = match p.peek().clone() {
        Tok::Ident(kw) if kw == "ring" => {
            let ring = p.ring()?;
            Input::Ideal(p.ideal(ring)?)
        }
        Tok::Ident(kw) if kw == "complex" => Input::Complex(p.complex()?),
        Tok::Ident(kw) if kw == "big" => {
            p.next();
            p.expect(":")?;
            let (line, col) = p.here();
            let big = p.complex()?;
            p.keyword("small")?;
            p.expect(":")?;
            let small = p.complex()?;
            Input::Pair(RelativePair::new(big, small).map_err(|e| ParseError {
                line,
                col,
                msg: e.to_string(),
            })?)
        }
        Tok::Ident(kw) if kw == "graph" => Input::Graph(p.graph()?),
        t => {
            return p.error(format!(
                "expected `ring`, `complex`, `big` or `graph`, found {t}"
            ))
        }
    };
    p.end()?;
    Ok((input, p.warnings))
}

pub fn parse_ideal(text: &str) -> Result<(MonomialIdeal, Vec<String>), ParseError> {
    match parse_input(text)? {
        (Input::Ideal(i), w) => Ok((i, w)),
        (other, _) => Err(ParseError {
            line: 1,
            col: 1,
            msg: format!("expected an ideal, found a {}", other.kind()),
        }),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    match parse_input(text)? {
        (Input::Graph(g), _) => Ok(g),
        (other, _) => Err(ParseError {
            line: 1,
            col: 1,
            msg: format!("expected a graph, found a {}", other.kind()),
        }),
    }
}
