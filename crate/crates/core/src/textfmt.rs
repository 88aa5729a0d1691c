//! Line-oriented text format for bound quiver algebras.
//!
//! ```text
//! # comment
//! field Q            (or: field F 5)
//! vertex 135
//! arrow a5_135 : 135 -> 136
//! rel a3_136*a5_135
//! rel x*y - y*x + 2/3*u*v
//! ```
//!
//! `*` composes in right-to-left order: `b*a` means first a, then b.
//! A term may start with a coefficient (integer or fraction, optionally
//! negative); names must start with a letter so the two never collide.
//! Parsing a printed algebra reproduces it exactly.

use crate::algebra::{build_algebra, Algebra, Relation};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, PathWord, Quiver};
use crate::scalar::{Field, Scalar};

/// A parsed source file: everything needed to build the algebra, before
/// the (potentially failing) completion step runs.
#[derive(Debug, Clone)]
pub struct AlgebraSource {
    pub quiver: Quiver,
    pub field: Field,
    pub relations: Vec<Relation>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

fn parse_coeff(chunk: &str, field: Field) -> Option<Scalar> {
    let (num, den) = match chunk.split_once('/') {
        Some((n, d)) => (n, d),
        None => (chunk, "1"),
    };
    let n: i64 = num.parse().ok()?;
    let d: i64 = den.parse().ok()?;
    if d == 0 {
        return None;
    }
    Some(field.fraction(n, d))
}

fn parse_term(
    raw: &str,
    negate: bool,
    quiver: &Quiver,
    field: Field,
    lineno: usize,
) -> Result<(Scalar, PathWord)> {
    let (stripped, mut coeff) = match raw.strip_prefix('-') {
        Some(rest) => (rest, field.from_i64(-1)),
        None => (raw, field.one()),
    };
    if negate {
        coeff = coeff.neg();
    }
    let chunks: Vec<&str> = stripped.split('*').collect();
    let mut names = &chunks[..];
    if let Some(first) = chunks.first() {
        if first
            .chars()
            .next()
            .map_or(false, |c| c.is_ascii_digit())
        {
            match parse_coeff(first, field) {
                Some(c) => {
                    coeff = coeff.mul(&c);
                    names = &chunks[1..];
                }
                None => {
                    return Err(parse_err(
                        lineno,
                        format!("bad coefficient '{first}'"),
                    ))
                }
            }
        }
    }
    if names.is_empty() {
        return Err(parse_err(lineno, "term has no arrows"));
    }
    let mut arrows = Vec::with_capacity(names.len());
    // Listed in composition order; applied right to left.
    for name in names.iter().rev() {
        match quiver.arrow_index(name) {
            Some(i) => arrows.push(i),
            None => {
                return Err(parse_err(
                    lineno,
                    format!("unknown arrow '{name}'"),
                ))
            }
        }
    }
    for pair in arrows.windows(2) {
        if quiver.arrows[pair[0]].tgt != quiver.arrows[pair[1]].src {
            return Err(parse_err(
                lineno,
                format!(
                    "arrows '{}' and '{}' do not compose",
                    quiver.arrows[pair[0]].name, quiver.arrows[pair[1]].name
                ),
            ));
        }
    }
    let src = quiver.arrows[arrows[0]].src;
    Ok((coeff, PathWord { src, arrows }))
}

/// Split a relation body on ` + ` / ` - ` separators (spaces required, so
/// negative coefficients inside a term stay intact).
fn split_terms(body: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let mut rest = body;
    let mut negate = false;
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let cut = match (plus, minus) {
            (Some(p), Some(m)) => Some((p.min(m), p.min(m) == m)),
            (Some(p), None) => Some((p, false)),
            (None, Some(m)) => Some((m, true)),
            (None, None) => None,
        };
        match cut {
            Some((pos, is_minus)) => {
                out.push((negate, rest[..pos].trim()));
                negate = is_minus;
                rest = &rest[pos + 3..];
            }
            None => {
                out.push((negate, rest.trim()));
                return out;
            }
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSource> {
    let mut field: Option<Field> = None;
    let mut quiver = Quiver { vertices: Vec::new(), arrows: Vec::new() };
    let mut pending_rels: Vec<(usize, String)> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (head, body) = match line.split_once(char::is_whitespace) {
            Some((h, b)) => (h, b.trim()),
            None => (line, ""),
        };
        match head {
            "field" => {
                if field.is_some() {
                    return Err(parse_err(lineno, "field declared twice"));
                }
                let toks: Vec<&str> = body.split_whitespace().collect();
                field = Some(match toks.as_slice() {
                    ["Q"] => Field::Rationals,
                    ["F", p] => {
                        let p: u64 = p.parse().map_err(|_| {
                            parse_err(lineno, "bad prime")
                        })?;
                        Field::Prime(p)
                    }
                    _ => {
                        return Err(parse_err(
                            lineno,
                            "expected 'field Q' or 'field F <prime>'",
                        ))
                    }
                });
            }
            "vertex" => {
                if body.is_empty() || body.contains(char::is_whitespace) {
                    return Err(parse_err(lineno, "vertex needs one label"));
                }
                if quiver.vertex_index(body).is_some() {
                    return Err(parse_err(
                        lineno,
                        format!("duplicate vertex '{body}'"),
                    ));
                }
                quiver.vertices.push(body.to_string());
            }
            "arrow" => {
                let toks: Vec<&str> = body.split_whitespace().collect();
                let (name, src, tgt) = match toks.as_slice() {
                    [name, ":", src, "->", tgt] => (*name, *src, *tgt),
                    _ => {
                        return Err(parse_err(
                            lineno,
                            "expected 'arrow <name> : <src> -> <tgt>'",
                        ))
                    }
                };
                if !valid_name(name) {
                    return Err(parse_err(
                        lineno,
                        format!("arrow name '{name}' must start with a letter"),
                    ));
                }
                if quiver.arrow_index(name).is_some() {
                    return Err(parse_err(
                        lineno,
                        format!("duplicate arrow '{name}'"),
                    ));
                }
                let src = quiver.vertex_index(src).ok_or_else(|| {
                    parse_err(lineno, format!("unknown vertex '{src}'"))
                })?;
                let tgt = quiver.vertex_index(tgt).ok_or_else(|| {
                    parse_err(lineno, format!("unknown vertex '{tgt}'"))
                })?;
                quiver.arrows.push(Arrow {
                    name: name.to_string(),
                    src,
                    tgt,
                });
            }
            "rel" => {
                if body.is_empty() {
                    return Err(parse_err(lineno, "empty relation"));
                }
                pending_rels.push((lineno, body.to_string()));
            }
            other => {
                return Err(parse_err(
                    lineno,
                    format!("unknown directive '{other}'"),
                ))
            }
        }
    }

    let field =
        field.ok_or_else(|| parse_err(0, "missing 'field' declaration"))?;
    let mut relations = Vec::with_capacity(pending_rels.len());
    for (lineno, body) in pending_rels {
        let mut terms = Vec::new();
        for (negate, chunk) in split_terms(&body) {
            if chunk.is_empty() {
                return Err(parse_err(lineno, "empty term"));
            }
            terms.push(parse_term(chunk, negate, &quiver, field, lineno)?);
        }
        let rel = Relation { terms };
        rel.validate(&quiver, field)
            .map_err(|e| parse_err(lineno, e.to_string()))?;
        relations.push(rel);
    }
    Ok(AlgebraSource { quiver, field, relations })
}

/// Parse and build in one step.
pub fn build_from_text(text: &str, cap: usize) -> Result<Algebra> {
    let src = parse_algebra(text)?;
    build_algebra(src.quiver, src.field, src.relations, cap)
}

fn format_term(
    coeff: &Scalar,
    word: &PathWord,
    quiver: &Quiver,
    first: bool,
    out: &mut String,
) {
    let negative = coeff.is_negative();
    let mag = if negative { coeff.neg() } else { coeff.clone() };
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if !mag.is_one() {
        out.push_str(&mag.to_string());
        out.push('*');
    }
    let names: Vec<&str> = word
        .arrows
        .iter()
        .rev()
        .map(|&a| quiver.arrows[a].name.as_str())
        .collect();
    out.push_str(&names.join("*"));
}

/// Deterministic text rendering; parsing it back rebuilds the identical
/// algebra.
pub fn print_algebra(a: &Algebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("field {}\n", a.field));
    for v in &a.quiver.vertices {
        out.push_str(&format!("vertex {v}\n"));
    }
    for arr in &a.quiver.arrows {
        out.push_str(&format!(
            "arrow {} : {} -> {}\n",
            arr.name, a.quiver.vertices[arr.src], a.quiver.vertices[arr.tgt]
        ));
    }
    for rel in &a.relations {
        let mut terms = rel.terms.clone();
        terms.sort_by(|x, y| y.1.cmp_words(&x.1));
        out.push_str("rel ");
        let mut body = String::new();
        for (i, (c, w)) in terms.iter().enumerate() {
            format_term(c, w, &a.quiver, i == 0, &mut body);
        }
        out.push_str(&body);
        out.push('\n');
    }
    out
}
