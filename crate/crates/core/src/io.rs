//! The line-oriented matroid file format.
//!
//! ```text
//! %matroid v1
//! n 4
//! labels a b c d        # optional; defaults to e0 e1 ..
//! repr circuits
//! {a b c} {a b d} {a c d} {b c d}
//! ```
//!
//! Other bodies: `repr cyclic-flats` with lines `set {a b} rank 2`;
//! `repr uniform` with `r 2`; `repr graph` with `vertices 3` then
//! `edge <label> <u> <v>`; `repr laminar` with lines `cap {a b} 1`;
//! `repr transversal` with lines `block {a b}` in chain order.

use std::fmt;
use std::fmt::Write as _;

use crate::constructions::{
    cycle_matroid, laminar_matroid, transversal_matroid, uniform, LaminarCapacitySystem, Multigraph,
    NestedPresentation,
};
use crate::cyclic::{from_cyclic_flats, CyclicFlatFamily};
use crate::error::MatroidError;
use crate::matroid::{default_labels, Matroid, MAX_ELEMENTS};
use crate::subset::Subset;

pub const HEADER: &str = "%matroid v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    /// Malformed text at a 1-based line and column.
    Syntax { line: usize, column: usize, message: String },
    /// Well-formed text describing something that is not a matroid.
    Invalid(MatroidError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Syntax { line, column, message } => {
                write!(f, "line {line}, column {column}: {message}")
            }
            FormatError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<MatroidError> for FormatError {
    fn from(e: MatroidError) -> Self {
        FormatError::Invalid(e)
    }
}

/// Body kinds accepted after `repr`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repr {
    Circuits,
    CyclicFlats,
    Uniform,
    Graph,
    Laminar,
    Transversal,
}

impl Repr {
    pub fn keyword(self) -> &'static str {
        match self {
            Repr::Circuits => "circuits",
            Repr::CyclicFlats => "cyclic-flats",
            Repr::Uniform => "uniform",
            Repr::Graph => "graph",
            Repr::Laminar => "laminar",
            Repr::Transversal => "transversal",
        }
    }

    fn from_keyword(s: &str) -> Option<Repr> {
        [
            Repr::Circuits,
            Repr::CyclicFlats,
            Repr::Uniform,
            Repr::Graph,
            Repr::Laminar,
            Repr::Transversal,
        ]
        .into_iter()
        .find(|r| r.keyword() == s)
    }
}

#[derive(Debug, Clone)]
struct Token {
    text: String,
    column: usize,
}

struct Line {
    number: usize,
    tokens: Vec<Token>,
    /// Column just past the last character, for "expected more" errors.
    end: usize,
}

fn tokenize(number: usize, raw: &str) -> Line {
    let body = raw.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut current: Option<Token> = None;
    let mut end = 1;
    for (i, ch) in body.chars().enumerate() {
        let column = i + 1;
        end = column + 1;
        if ch.is_whitespace() || ch == '{' || ch == '}' {
            tokens.extend(current.take());
            if !ch.is_whitespace() {
                tokens.push(Token { text: ch.to_string(), column });
            }
        } else {
            current
                .get_or_insert_with(|| Token { text: String::new(), column })
                .text
                .push(ch);
        }
    }
    tokens.extend(current);
    Line { number, tokens, end }
}

struct Parser {
    lines: Vec<Line>,
    pos: usize,
    last_line: usize,
}

impl Parser {
    fn err<T>(&self, line: usize, column: usize, message: impl Into<String>) -> Result<T, FormatError> {
        Err(FormatError::Syntax { line, column, message: message.into() })
    }

    fn peek(&self) -> Option<&Line> {
        self.lines.get(self.pos)
    }

    /// Index of the next line, advancing past it.
    fn advance(&mut self, what: &str) -> Result<usize, FormatError> {
        if self.pos >= self.lines.len() {
            return self.err(self.last_line + 1, 1, format!("unexpected end of input, expected {what}"));
        }
        self.pos += 1;
        Ok(self.pos - 1)
    }
}

fn expect_keyword<'a>(p: &Parser, line: &'a Line, keyword: &str) -> Result<&'a [Token], FormatError> {
    match line.tokens.first() {
        Some(t) if t.text == keyword => Ok(&line.tokens[1..]),
        Some(t) => p.err(line.number, t.column, format!("expected `{keyword}`, found `{}`", t.text)),
        None => p.err(line.number, 1, format!("expected `{keyword}`")),
    }
}

fn parse_int(p: &Parser, line: &Line, tokens: &[Token], at: usize, what: &str) -> Result<usize, FormatError> {
    match tokens.get(at) {
        Some(t) => t
            .text
            .parse()
            .or_else(|_| p.err(line.number, t.column, format!("expected {what}, found `{}`", t.text))),
        None => p.err(line.number, line.end, format!("expected {what}")),
    }
}

fn no_trailing(p: &Parser, line: &Line, tokens: &[Token], used: usize) -> Result<(), FormatError> {
    match tokens.get(used) {
        Some(t) => p.err(line.number, t.column, format!("unexpected `{}`", t.text)),
        None => Ok(()),
    }
}

/// Parses one `{...}` group starting at `tokens[at]`; returns the set and the
/// index just past the closing brace.
fn parse_set(
    p: &Parser,
    line: &Line,
    tokens: &[Token],
    at: usize,
    labels: &[String],
) -> Result<(Subset, usize), FormatError> {
    match tokens.get(at) {
        Some(t) if t.text == "{" => {}
        Some(t) => return p.err(line.number, t.column, format!("expected `{{`, found `{}`", t.text)),
        None => return p.err(line.number, line.end, "expected `{`"),
    }
    let mut set = Subset::EMPTY;
    let mut i = at + 1;
    loop {
        let Some(t) = tokens.get(i) else {
            return p.err(line.number, line.end, "unclosed `{`");
        };
        match t.text.as_str() {
            "}" => return Ok((set, i + 1)),
            "{" => return p.err(line.number, t.column, "nested `{`"),
            label => match labels.iter().position(|l| l == label) {
                Some(e) if set.contains(e) => {
                    return p.err(line.number, t.column, format!("`{label}` repeated in set"))
                }
                Some(e) => set = set.with(e),
                None => return p.err(line.number, t.column, format!("unknown label `{label}`")),
            },
        }
        i += 1;
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid, FormatError> {
    let raw: Vec<&str> = text.lines().collect();
    let Some(first) = raw.first() else {
        return Err(FormatError::Syntax { line: 1, column: 1, message: "empty input".into() });
    };
    if first.trim_end() != HEADER {
        return Err(FormatError::Syntax {
            line: 1,
            column: 1,
            message: format!("expected header `{HEADER}`"),
        });
    }
    let lines: Vec<Line> = raw
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, l)| tokenize(i + 1, l))
        .filter(|l| !l.tokens.is_empty())
        .collect();
    let mut p = Parser { lines, pos: 0, last_line: raw.len() };

    let at = p.advance("`n <count>`")?;
    let line = &p.lines[at];
    let (number, tokens) = (line.number, expect_keyword(&p, line, "n")?);
    let n = parse_int(&p, line, tokens, 0, "an element count")?;
    no_trailing(&p, line, tokens, 1)?;
    if n > MAX_ELEMENTS {
        return p.err(number, tokens[0].column, format!("{n} elements exceeds the limit of {MAX_ELEMENTS}"));
    }

    let mut labels = default_labels(n);
    if p.peek().is_some_and(|l| l.tokens[0].text == "labels") {
        {
            let at = p.advance("labels")?;
            let line = &p.lines[at];
            let given: Vec<&Token> = line.tokens[1..].iter().collect();
            if let Some(t) = given.iter().find(|t| t.text == "{" || t.text == "}") {
                return p.err(line.number, t.column, "braces are not allowed in labels");
            }
            if given.len() != n {
                return p.err(line.number, line.tokens[0].column, format!("expected {n} labels, found {}", given.len()));
            }
            for (i, t) in given.iter().enumerate() {
                if given[..i].iter().any(|u| u.text == t.text) {
                    return p.err(line.number, t.column, format!("duplicate label `{}`", t.text));
                }
            }
            labels = given.iter().map(|t| t.text.clone()).collect();
        }
    }

    let at = p.advance("`repr <kind>`")?;
    let line = &p.lines[at];
    let tokens = expect_keyword(&p, line, "repr")?;
    let repr = match tokens.first() {
        Some(t) => Repr::from_keyword(&t.text)
            .map_or_else(|| p.err(line.number, t.column, format!("unknown repr `{}`", t.text)), Ok)?,
        None => return p.err(line.number, line.end, "expected a repr kind"),
    };
    no_trailing(&p, line, tokens, 1)?;

    let body: Vec<&Line> = p.lines[p.pos..].iter().collect();
    let matroid = match repr {
        Repr::Circuits => {
            let mut circuits = Vec::new();
            for line in &body {
                let mut at = 0;
                while at < line.tokens.len() {
                    let (set, next) = parse_set(&p, line, &line.tokens, at, &labels)?;
                    circuits.push(set);
                    at = next;
                }
            }
            Matroid::from_circuits(labels, &circuits)?
        }
        Repr::CyclicFlats => {
            let mut entries = Vec::new();
            for line in &body {
                let tokens = expect_keyword(&p, line, "set")?;
                let (set, next) = parse_set(&p, line, tokens, 0, &labels)?;
                match tokens.get(next) {
                    Some(t) if t.text == "rank" => {}
                    Some(t) => return p.err(line.number, t.column, format!("expected `rank`, found `{}`", t.text)),
                    None => return p.err(line.number, line.end, "expected `rank`"),
                }
                let r = parse_int(&p, line, tokens, next + 1, "a rank")?;
                no_trailing(&p, line, tokens, next + 2)?;
                entries.push((set, r));
            }
            from_cyclic_flats(&CyclicFlatFamily::new(labels, entries))?
        }
        Repr::Uniform => {
            let Some(line) = body.first() else {
                return p.err(p.last_line + 1, 1, "expected `r <rank>`");
            };
            let tokens = expect_keyword(&p, line, "r")?;
            let r = parse_int(&p, line, tokens, 0, "a rank")?;
            no_trailing(&p, line, tokens, 1)?;
            if let Some(extra) = body.get(1) {
                return p.err(extra.number, extra.tokens[0].column, "unexpected line after `r`");
            }
            uniform(r, n)?.relabeled(labels)?
        }
        Repr::Graph => {
            let Some(line) = body.first() else {
                return p.err(p.last_line + 1, 1, "expected `vertices <count>`");
            };
            let tokens = expect_keyword(&p, line, "vertices")?;
            let vertices = parse_int(&p, line, tokens, 0, "a vertex count")?;
            no_trailing(&p, line, tokens, 1)?;
            let mut slots: Vec<Option<(usize, usize)>> = vec![None; n];
            for line in &body[1..] {
                let tokens = expect_keyword(&p, line, "edge")?;
                let Some(name) = tokens.first() else {
                    return p.err(line.number, line.end, "expected an edge label");
                };
                let Some(e) = labels.iter().position(|l| *l == name.text) else {
                    return p.err(line.number, name.column, format!("unknown label `{}`", name.text));
                };
                if slots[e].is_some() {
                    return p.err(line.number, name.column, format!("edge `{}` given twice", name.text));
                }
                let u = parse_int(&p, line, tokens, 1, "a vertex")?;
                let v = parse_int(&p, line, tokens, 2, "a vertex")?;
                no_trailing(&p, line, tokens, 3)?;
                if u >= vertices || v >= vertices {
                    let col = tokens[if u >= vertices { 1 } else { 2 }].column;
                    return p.err(line.number, col, format!("vertex out of range 0..{vertices}"));
                }
                slots[e] = Some((u, v));
            }
            let mut g = Multigraph::new(vertices);
            for (e, slot) in slots.iter().enumerate() {
                let Some((u, v)) = *slot else {
                    return p.err(p.last_line + 1, 1, format!("no edge line for `{}`", labels[e]));
                };
                g.add_edge(labels[e].clone(), u, v)?;
            }
            cycle_matroid(&g)?
        }
        Repr::Laminar => {
            let mut family = Vec::new();
            for line in &body {
                let tokens = expect_keyword(&p, line, "cap")?;
                let (set, next) = parse_set(&p, line, tokens, 0, &labels)?;
                let c = parse_int(&p, line, tokens, next, "a capacity")?;
                no_trailing(&p, line, tokens, next + 1)?;
                family.push((set, c));
            }
            laminar_matroid(&LaminarCapacitySystem::new(labels, family)?)?
        }
        Repr::Transversal => {
            let mut chain = Vec::new();
            for line in &body {
                let tokens = expect_keyword(&p, line, "block")?;
                let (set, next) = parse_set(&p, line, tokens, 0, &labels)?;
                no_trailing(&p, line, tokens, next)?;
                chain.push(set);
            }
            transversal_matroid(&NestedPresentation::new(labels, chain)?)?
        }
    };
    Ok(matroid)
}

fn write_set(out: &mut String, labels: &[String], s: Subset) {
    out.push('{');
    for (i, e) in s.elements().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&labels[e]);
    }
    out.push('}');
}

fn write_preamble(labels: &[String], repr: Repr) -> String {
    let mut out = format!("{HEADER}\nn {}\nlabels", labels.len());
    for l in labels {
        out.push(' ');
        out.push_str(l);
    }
    let _ = writeln!(out, "\nrepr {}", repr.keyword());
    out
}

/// Circuit-list form: one line of brace-delimited sets.
pub fn serialize_matroid(m: &Matroid) -> String {
    let mut out = write_preamble(m.labels(), Repr::Circuits);
    let circuits = m.circuits();
    if !circuits.is_empty() {
        for (i, &c) in circuits.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write_set(&mut out, m.labels(), c);
        }
        out.push('\n');
    }
    out
}

/// Cyclic-flat form: one `set {..} rank r` line per cyclic flat.
pub fn serialize_cyclic_flats(m: &Matroid) -> String {
    serialize_cyclic_flat_family(&m.cyclic_flats())
}

/// Writes any candidate family, valid or not, in cyclic-flat form.
pub fn serialize_cyclic_flat_family(z: &CyclicFlatFamily) -> String {
    let mut out = write_preamble(z.labels(), Repr::CyclicFlats);
    for &(s, r) in z.entries() {
        out.push_str("set ");
        write_set(&mut out, z.labels(), s);
        let _ = writeln!(out, " rank {r}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, notk_cyclic_flats};

    fn syntax(text: &str) -> (usize, usize) {
        match parse_matroid(text) {
            Err(FormatError::Syntax { line, column, .. }) => (line, column),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn uniform_body() {
        let m = parse_matroid("%matroid v1\nn 4\nrepr uniform\nr 2\n").unwrap();
        assert_eq!(m, uniform(2, 4).unwrap());
    }

    #[test]
    fn round_trips_over_the_catalog() {
        for fam in catalog(9) {
            let m = fam.build().unwrap();
            assert_eq!(parse_matroid(&serialize_matroid(&m)).unwrap(), m, "{fam}");
            assert_eq!(parse_matroid(&serialize_cyclic_flats(&m)).unwrap(), m, "{fam}");
        }
        let free = uniform(3, 3).unwrap();
        assert_eq!(parse_matroid(&serialize_matroid(&free)).unwrap(), free);
        let empty = uniform(0, 0).unwrap();
        assert_eq!(parse_matroid(&serialize_matroid(&empty)).unwrap(), empty);
    }

    #[test]
    fn graph_laminar_transversal_bodies() {
        let text = "%matroid v1\nn 3\nlabels a b c\nrepr graph\nvertices 3\n\
                    edge c 2 0\nedge a 0 1 # first\nedge b 1 2\n";
        assert_eq!(parse_matroid(text).unwrap(), uniform(2, 3).unwrap().relabeled(vec!["a".into(), "b".into(), "c".into()]).unwrap());
        let text = "%matroid v1\nn 4\nrepr laminar\ncap {e0 e1 e2 e3} 2\ncap {e0 e1} 1\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert!(!m.is_independent(Subset(0b0011)));
        let text = "%matroid v1\nn 3\nrepr transversal\nblock {e0}\nblock {e0 e1 e2}\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert!(!m.is_independent(Subset(0b110)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(syntax("%matroid v2\n"), (1, 1));
        assert_eq!(syntax("%matroid v1\nn 3\nrepr circuits\n{e0 e1\n"), (4, 7));
        assert_eq!(syntax("%matroid v1\nn 3\nrepr circuits\n{e0 e1} e2}\n"), (4, 9));
        assert_eq!(syntax("%matroid v1\nn 3\nrepr circuits\n{e0 zz}\n"), (4, 5));
        assert_eq!(syntax("%matroid v1\nn 3\nrepr matrix\n"), (3, 6));
        assert_eq!(syntax("%matroid v1\nn x\n"), (2, 3));
        assert_eq!(syntax("%matroid v1\nn 2\nlabels a a\nrepr uniform\nr 1\n"), (3, 10));
        assert_eq!(syntax("%matroid v1\nn 2\n"), (3, 1));
        assert_eq!(syntax("%matroid v1\nn 17\n"), (2, 3));
    }

    #[test]
    fn non_matroidal_circuits_are_rejected() {
        let text = "%matroid v1\nn 4\nrepr circuits\n{e0 e1} {e1 e2}\n";
        assert!(matches!(parse_matroid(text), Err(FormatError::Invalid(MatroidError::Axiom(_)))));
        // a valid rank table whose circuits differ from the list
        let text = "%matroid v1\nn 3\nrepr circuits\n{e0 e1} {e0 e1 e2}\n";
        assert_eq!(parse_matroid(text), Err(FormatError::Invalid(MatroidError::NotMatroidal)));
    }

    #[test]
    fn notk_table_text_is_rejected_by_z3() {
        let text = serialize_cyclic_flat_family(&notk_cyclic_flats(4));
        assert!(text.contains("set {a2 a3 b1 c1 e} rank 4"));
        assert!(matches!(
            parse_matroid(&text),
            Err(FormatError::Invalid(MatroidError::CyclicFlats(crate::cyclic::ZViolation::Z3 { .. })))
        ));
    }
}
