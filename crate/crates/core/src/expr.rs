//! Textual module expressions: P(v), I(v), S(v) name the standard modules
//! at a vertex, sum(X,Y,...) forms direct sums, and omega, coomega, tau,
//! taum, tau2, taum2, nu apply the homological operators. The star P(*),
//! I(*), S(*) expands to one module per vertex. A comma-separated list at
//! the top level denotes a collection.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homology::{cosyzygy, nakayama, syzygy, tau_d, tau_d_inv};
use crate::rep::Representation;
use std::sync::Arc;

fn parse_err(msg: String) -> Error {
    Error::Parse { line: 1, msg }
}

/// Split at top-level commas, respecting parentheses.
fn split_list(text: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1).ok_or_else(|| {
                    parse_err(format!("unbalanced ')' in '{text}'"))
                })?;
            }
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced '(' in '{text}'")));
    }
    parts.push(&text[start..]);
    Ok(parts)
}

/// One expression, which may stand for several modules when it uses a star.
fn eval(algebra: &Arc<Algebra>, text: &str) -> Result<Vec<Representation>> {
    let text = text.trim();
    let open = text.find('(').ok_or_else(|| {
        parse_err(format!(
            "expected an expression like P(v) or tau2(...), got '{text}'"
        ))
    })?;
    if !text.ends_with(')') {
        return Err(parse_err(format!("missing closing ')' in '{text}'")));
    }
    let head = text[..open].trim();
    let inner = &text[open + 1..text.len() - 1];
    match head {
        "P" | "I" | "S" => {
            let arg = inner.trim();
            let make = |v: usize| match head {
                "P" => Representation::projective(algebra, v),
                "I" => Representation::injective(algebra, v),
                _ => Representation::simple(algebra, v),
            };
            if arg == "*" {
                return Ok((0..algebra.num_vertices()).map(make).collect());
            }
            let v = algebra.quiver.vertex_index(arg).ok_or_else(|| {
                Error::Input(format!("unknown vertex '{arg}'"))
            })?;
            Ok(vec![make(v)])
        }
        "sum" => {
            let mut parts = Vec::new();
            for piece in split_list(inner)? {
                parts.extend(eval(algebra, piece)?);
            }
            if parts.is_empty() {
                return Err(parse_err("empty sum".into()));
            }
            let refs: Vec<&Representation> = parts.iter().collect();
            Ok(vec![Representation::direct_sum(algebra, &refs)])
        }
        "omega" | "coomega" | "tau" | "taum" | "tau2" | "taum2" | "nu" => {
            let m = eval_module(algebra, inner)?;
            let out = match head {
                "omega" => syzygy(&m, 1)?,
                "coomega" => cosyzygy(&m, 1)?,
                "tau" => tau_d(&m, 1)?,
                "taum" => tau_d_inv(&m, 1)?,
                "tau2" => tau_d(&m, 2)?,
                "taum2" => tau_d_inv(&m, 2)?,
                _ => nakayama(&m)?,
            };
            Ok(vec![out])
        }
        _ => Err(parse_err(format!("unknown operator '{head}'"))),
    }
}

/// A single module; star and sum expansions are direct-summed.
pub fn eval_module(
    algebra: &Arc<Algebra>,
    text: &str,
) -> Result<Representation> {
    let mut parts = Vec::new();
    for piece in split_list(text)? {
        parts.extend(eval(algebra, piece)?);
    }
    match parts.len() {
        0 => Err(parse_err("empty module expression".into())),
        1 => Ok(parts.pop().unwrap()),
        _ => {
            let refs: Vec<&Representation> = parts.iter().collect();
            Ok(Representation::direct_sum(algebra, &refs))
        }
    }
}

/// A comma-separated list of expressions; stars contribute one entry per
/// vertex.
pub fn eval_collection(
    algebra: &Arc<Algebra>,
    text: &str,
) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    for piece in split_list(text)? {
        out.extend(eval(algebra, piece)?);
    }
    Ok(out)
}
