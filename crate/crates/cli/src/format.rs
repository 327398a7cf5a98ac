//! Line-oriented text formats for relations, partitions, permutations, groups and operations.
//!
//! ```text
//! relation NAME arity H k K      partition NAME k K      group k K zero Z
//! 0 0 1                          0 1                     0 1 2
//! ...                            2                       1 2 0
//!                                partition OTHER k K     2 0 1
//!                                ...
//! ```
//!
//! A permutation is one line of cycles such as `(0 1)(2 3)`, optionally preceded by
//! `permutation NAME k K`. An operation is `operation NAME arity N k K` followed by one line
//! `a1 … aN value` per argument tuple. `#` starts a comment.

use std::fmt::{self, Write as _};

use subclone::constructions::GroupTable;
use subclone::finite::tuple::next_tuple;
use subclone::finite::{Elem, Operation, Partition, Permutation, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed input file.
#[derive(Debug, Clone)]
pub enum Document {
    Relation {
        name: String,
        relation: Relation,
    },
    Partitions(Vec<(String, Partition)>),
    /// Cycles as written; `k` is present only when the header was given.
    Permutation {
        name: Option<String>,
        k: Option<usize>,
        cycles: Vec<Vec<Elem>>,
    },
    Group(GroupTable),
    Operation {
        name: String,
        operation: Operation,
    },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Relation { .. } => "relation",
            Document::Partitions(_) => "partition",
            Document::Permutation { .. } => "permutation",
            Document::Group(_) => "group",
            Document::Operation { .. } => "operation",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

struct Line<'a> {
    number: usize,
    body: &'a str,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column: 1, message: message.into() }
    }

    fn end(&self) -> ParseError {
        let column = self.body.chars().count() + 1;
        ParseError { line: self.number, column, message: String::new() }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, (byte, c)) in body.char_indices().enumerate() {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some((byte, pos)),
                (true, Some((b, p))) => {
                    tokens.push(Token { text: &body[b..byte], line: i + 1, column: p + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, p)) = start {
            tokens.push(Token { text: &body[b..], line: i + 1, column: p + 1 });
        }
        if !tokens.is_empty() {
            out.push(Line { number: i + 1, body, tokens });
        }
    }
    out
}

fn number(tok: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    tok.text.parse::<usize>().map_err(|_| tok.error(format!("expected {what}, found `{}`", tok.text)))
}

fn element(tok: &Token<'_>, k: usize) -> Result<Elem, ParseError> {
    let x = number(tok, "an element")?;
    if x >= k {
        return Err(tok.error(format!("element {x} out of range for k = {k}")));
    }
    Ok(x as Elem)
}

fn keyword(line: &Line<'_>, index: usize, word: &str) -> Result<(), ParseError> {
    match line.tokens.get(index) {
        Some(t) if t.text == word => Ok(()),
        Some(t) => Err(t.error(format!("expected `{word}`, found `{}`", t.text))),
        None => Err(ParseError { message: format!("expected `{word}`"), ..line.end() }),
    }
}

fn field<'a>(line: &Line<'a>, index: usize, what: &str) -> Result<Token<'a>, ParseError> {
    line.tokens.get(index).copied().ok_or_else(|| ParseError { message: format!("expected {what}"), ..line.end() })
}

fn no_more(line: &Line<'_>, count: usize) -> Result<(), ParseError> {
    match line.tokens.get(count) {
        Some(t) => Err(t.error(format!("unexpected `{}`", t.text))),
        None => Ok(()),
    }
}

fn domain(line: &Line<'_>, index: usize) -> Result<usize, ParseError> {
    let tok = field(line, index, "the domain size")?;
    let k = number(&tok, "the domain size")?;
    if !(2..=255).contains(&k) {
        return Err(tok.error(format!("domain size {k} unsupported (need 2 <= k <= 255)")));
    }
    Ok(k)
}

fn elements(line: &Line<'_>, k: usize) -> Result<Vec<Elem>, ParseError> {
    line.tokens.iter().map(|t| element(t, k)).collect()
}

/// Parses any of the supported formats, dispatching on the first keyword.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let lines = lines(text);
    let Some(first) = lines.first() else {
        return Err(ParseError { line: 1, column: 1, message: "empty input".into() });
    };
    match first.tokens[0].text {
        "relation" => parse_relation(&lines),
        "partition" => parse_partitions(&lines),
        "permutation" => parse_permutation(&lines, true),
        "group" => parse_group(&lines),
        "operation" => parse_operation(&lines),
        t if t.starts_with('(') => parse_permutation(&lines, false),
        t => Err(first.tokens[0].error(format!(
            "unknown header `{t}` (expected relation, partition, permutation, group, operation or a cycle list)"
        ))),
    }
}

fn parse_relation(lines: &[Line<'_>]) -> Result<Document, ParseError> {
    let head = &lines[0];
    let name = field(head, 1, "a name")?.text.to_string();
    keyword(head, 2, "arity")?;
    let arity_tok = field(head, 3, "the arity")?;
    let arity = number(&arity_tok, "the arity")?;
    if arity == 0 {
        return Err(arity_tok.error("arity must be positive"));
    }
    keyword(head, 4, "k")?;
    let k = domain(head, 5)?;
    no_more(head, 6)?;
    let mut relation = Relation::empty(k, arity).map_err(|e| head.error(e.to_string()))?;
    for line in &lines[1..] {
        let t = elements(line, k)?;
        if t.len() != arity {
            let bad = line.tokens.get(arity).copied();
            return Err(match bad {
                Some(tok) => tok.error(format!("tuple has more than {arity} components")),
                None => ParseError { message: format!("tuple has {} of {arity} components", t.len()), ..line.end() },
            });
        }
        relation.insert(&t).map_err(|e| line.error(e.to_string()))?;
    }
    Ok(Document::Relation { name, relation })
}

fn parse_partitions(lines: &[Line<'_>]) -> Result<Document, ParseError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let head = &lines[i];
        keyword(head, 0, "partition")?;
        let name = field(head, 1, "a name")?.text.to_string();
        keyword(head, 2, "k")?;
        let k = domain(head, 3)?;
        no_more(head, 4)?;
        i += 1;
        let mut blocks = Vec::new();
        while i < lines.len() && lines[i].tokens[0].text != "partition" {
            blocks.push(elements(&lines[i], k)?);
            i += 1;
        }
        let p = Partition::new(k, blocks).map_err(|e| head.error(e.to_string()))?;
        out.push((name, p));
    }
    Ok(Document::Partitions(out))
}

fn parse_cycles(line: &Line<'_>) -> Result<Vec<Vec<Elem>>, ParseError> {
    let err = |pos: usize, m: &str| ParseError { line: line.number, column: pos + 1, message: m.into() };
    let mut cycles = Vec::new();
    let mut current: Option<Vec<Elem>> = None;
    let mut digits = String::new();
    let mut digits_at = 0;
    let chars: Vec<char> = line.body.chars().collect();
    for (pos, &c) in chars.iter().enumerate() {
        if c.is_ascii_digit() {
            if current.is_none() {
                return Err(err(pos, "element outside a cycle"));
            }
            if digits.is_empty() {
                digits_at = pos;
            }
            digits.push(c);
            continue;
        }
        if !digits.is_empty() {
            let x: usize = digits.parse().map_err(|_| err(digits_at, "element too large"))?;
            if x > Elem::MAX as usize {
                return Err(err(digits_at, "element too large"));
            }
            current.as_mut().expect("inside a cycle").push(x as Elem);
            digits.clear();
        }
        match c {
            '(' if current.is_none() => current = Some(Vec::new()),
            '(' => return Err(err(pos, "nested `(`")),
            ')' => match current.take() {
                Some(c) if c.is_empty() && !cycles.is_empty() => return Err(err(pos, "empty cycle")),
                Some(c) => {
                    if !c.is_empty() {
                        cycles.push(c);
                    }
                }
                None => return Err(err(pos, "unmatched `)`")),
            },
            ',' | ' ' | '\t' => {}
            _ => return Err(err(pos, &format!("unexpected `{c}`"))),
        }
    }
    if current.is_some() || !digits.is_empty() {
        return Err(err(chars.len(), "unterminated cycle"));
    }
    Ok(cycles)
}

fn parse_permutation(lines: &[Line<'_>], header: bool) -> Result<Document, ParseError> {
    let (name, k, body) = if header {
        let head = &lines[0];
        let name = field(head, 1, "a name")?.text.to_string();
        keyword(head, 2, "k")?;
        let k = domain(head, 3)?;
        no_more(head, 4)?;
        (Some(name), Some(k), 1)
    } else {
        (None, None, 0)
    };
    let line =
        lines.get(body).ok_or_else(|| ParseError { message: "expected a cycle line".into(), ..lines[0].end() })?;
    if let Some(extra) = lines.get(body + 1) {
        return Err(extra.error("a permutation is a single line of cycles"));
    }
    let cycles = parse_cycles(line)?;
    if let Some(k) = k {
        Permutation::from_cycles(k, &cycles).map_err(|e| line.error(e.to_string()))?;
    }
    Ok(Document::Permutation { name, k, cycles })
}

fn parse_group(lines: &[Line<'_>]) -> Result<Document, ParseError> {
    let head = &lines[0];
    keyword(head, 1, "k")?;
    let k = domain(head, 2)?;
    keyword(head, 3, "zero")?;
    let zero = element(&field(head, 4, "the neutral element")?, k)?;
    no_more(head, 5)?;
    let rows = &lines[1..];
    if rows.len() != k {
        let at = rows.get(k).map_or_else(|| lines.last().expect("header").end(), |l| l.error(""));
        return Err(ParseError { message: format!("expected {k} table rows, found {}", rows.len()), ..at });
    }
    let mut table = Vec::with_capacity(k * k);
    for row in rows {
        let r = elements(row, k)?;
        if r.len() != k {
            return Err(row.error(format!("table row has {} of {k} entries", r.len())));
        }
        table.extend(r);
    }
    let add = Operation::new(k, 2, table).map_err(|e| head.error(e.to_string()))?;
    let g = GroupTable::new(add, zero).map_err(|e| head.error(e.to_string()))?;
    Ok(Document::Group(g))
}

fn parse_operation(lines: &[Line<'_>]) -> Result<Document, ParseError> {
    let head = &lines[0];
    let name = field(head, 1, "a name")?.text.to_string();
    keyword(head, 2, "arity")?;
    let arity = number(&field(head, 3, "the arity")?, "the arity")?;
    keyword(head, 4, "k")?;
    let k = domain(head, 5)?;
    no_more(head, 6)?;
    let size =
        k.checked_pow(arity as u32).filter(|&s| s <= 1 << 24).ok_or_else(|| head.error("operation too large"))?;
    let mut table: Vec<Option<Elem>> = vec![None; size];
    for line in &lines[1..] {
        let t = elements(line, k)?;
        if t.len() != arity + 1 {
            return Err(line.error(format!("expected {arity} arguments and a value")));
        }
        let rank = t[..arity].iter().fold(0, |acc, &x| acc * k + x as usize);
        if table[rank].replace(t[arity]).is_some() {
            return Err(line.error("argument tuple listed twice"));
        }
    }
    let table: Option<Vec<Elem>> = table.into_iter().collect();
    let table = table.ok_or_else(|| head.error("operation table is incomplete"))?;
    let operation = Operation::new(k, arity, table).map_err(|e| head.error(e.to_string()))?;
    Ok(Document::Operation { name, operation })
}

fn join(xs: &[Elem]) -> String {
    let mut s = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        write!(s, "{x}").expect("string write");
    }
    s
}

/// Header plus the tuples in lexicographic order.
pub fn write_relation(name: &str, rho: &Relation) -> String {
    let mut s = format!("relation {name} arity {} k {}\n", rho.arity(), rho.k());
    for t in rho.iter() {
        s.push_str(&join(&t));
        s.push('\n');
    }
    s
}

pub fn write_partition(name: &str, p: &Partition) -> String {
    let mut s = format!("partition {name} k {}\n", p.k());
    for b in p.blocks() {
        s.push_str(&join(b));
        s.push('\n');
    }
    s
}

pub fn write_family(members: &[(String, Partition)]) -> String {
    members.iter().map(|(n, p)| write_partition(n, p)).collect()
}

pub fn write_permutation(name: &str, pi: &Permutation) -> String {
    format!("permutation {name} k {}\n{pi}\n", pi.k())
}

pub fn write_group(g: &GroupTable) -> String {
    let k = g.k();
    let mut s = format!("group k {k} zero {}\n", g.zero());
    for row in g.add().table().chunks(k) {
        s.push_str(&join(row));
        s.push('\n');
    }
    s
}

pub fn write_operation(name: &str, f: &Operation) -> String {
    let (k, n) = (f.k(), f.arity());
    let mut s = format!("operation {name} arity {n} k {k}\n");
    let mut t = vec![0 as Elem; n];
    for &v in f.table() {
        s.push_str(&join(&t));
        if n > 0 {
            s.push(' ');
        }
        writeln!(s, "{v}").expect("string write");
        if !next_tuple(k, &mut t) {
            break;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use subclone::fixtures::*;

    fn err(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn relation_round_trip() {
        let text = write_relation("upsilon2", &upsilon2());
        match parse(&text).unwrap() {
            Document::Relation { name, relation } => {
                assert_eq!(name, "upsilon2");
                assert_eq!(relation, upsilon2());
                assert_eq!(write_relation(&name, &relation), text);
            }
            d => panic!("parsed as {}", d.kind()),
        }
    }

    #[test]
    fn family_round_trip() {
        let members = vec![("theta6".to_string(), theta6()), ("theta7".to_string(), theta7())];
        let text = write_family(&members);
        match parse(&text).unwrap() {
            Document::Partitions(p) => assert_eq!(p, members),
            d => panic!("parsed as {}", d.kind()),
        }
    }

    #[test]
    fn permutation_forms() {
        let pi = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        match parse(&write_permutation("pi", &pi)).unwrap() {
            Document::Permutation { name, k, cycles } => {
                assert_eq!((name.as_deref(), k), (Some("pi"), Some(4)));
                assert_eq!(Permutation::from_cycles(4, &cycles).unwrap(), pi);
            }
            d => panic!("parsed as {}", d.kind()),
        }
        match parse("# swap pairs\n(0 1)(2 3)\n").unwrap() {
            Document::Permutation { k: None, cycles, .. } => assert_eq!(cycles, vec![vec![0, 1], vec![2, 3]]),
            d => panic!("parsed as {}", d.kind()),
        }
    }

    #[test]
    fn group_and_operation_round_trip() {
        let g = GroupTable::cyclic(3).unwrap();
        match parse(&write_group(&g)).unwrap() {
            Document::Group(h) => assert_eq!(write_group(&h), write_group(&g)),
            d => panic!("parsed as {}", d.kind()),
        }
        let f = Operation::from_fn(3, 2, |x| (x[0] + 2 * x[1]) % 3).unwrap();
        match parse(&write_operation("f", &f)).unwrap() {
            Document::Operation { operation, .. } => assert_eq!(operation, f),
            d => panic!("parsed as {}", d.kind()),
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header follows\nrelation r arity 2 k 2 # binary\n\n0 1 # one tuple\n";
        match parse(text).unwrap() {
            Document::Relation { relation, .. } => assert_eq!(relation.tuples(), vec![vec![0, 1]]),
            d => panic!("parsed as {}", d.kind()),
        }
    }

    #[test]
    fn diagnostics_carry_positions() {
        let e = err("relation r arity 2 k 3\n0 1\n0  7\n");
        assert_eq!((e.line, e.column), (3, 4));
        assert!(e.message.contains("out of range"));
        let e = err("relation r arty 2 k 3\n");
        assert_eq!((e.line, e.column), (1, 12));
        let e = err("relation r arity 2 k 3\n0 1 2\n");
        assert_eq!((e.line, e.column), (2, 5));
        let e = err("partition t k 3\n0 1\n");
        assert_eq!(e.line, 1);
        assert!(e.message.contains("partition"));
        let e = err("(0 1)(2 x)\n");
        assert_eq!((e.line, e.column), (1, 9));
        let e = err("group k 2 zero 0\n0 1\n");
        assert!(e.message.contains("table rows"));
        let e = err("tuple 0 1\n");
        assert_eq!((e.line, e.column), (1, 1));
        assert_eq!(err("# nothing\n").message, "empty input");
    }
}
