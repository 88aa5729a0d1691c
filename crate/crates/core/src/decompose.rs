//! Direct-sum decomposition and isomorphism testing.
//!
//! Splitting uses Fitting's lemma: for an endomorphism f and an eigenvalue
//! c, the module splits as ker((f-c)^N) + im((f-c)^N), proper whenever f-c
//! is neither nilpotent nor invertible. Candidate endomorphisms are the
//! basis of End(M), then seeded combinations; eigenvalues are the exact
//! roots of minimal polynomials (every element of a prime field, or a grid
//! of small rationals over the rationals).
//!
//! Indecomposability is certified, not assumed: over the rationals by the
//! trace form (its rank equals dim End/rad, and rank one forces a local
//! endomorphism ring), over a prime field by sweeping the whole finite
//! endomorphism ring when it is small enough. If neither a split nor a
//! certificate is found the routine reports Unsupported rather than
//! guessing.
//!
//! For indecomposable modules, isomorphism testing is complete: the
//! non-isomorphisms between two indecomposables form a linear subspace, so
//! if an isomorphism exists, some basis element of Hom is one.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rep::{hom_space, ModuleMap, Representation};
use crate::scalar::{Field, Scalar};
use crate::Rng;

/// Monic minimal polynomial of a square matrix, as coefficients from degree
/// zero upward (the leading one included).
fn min_poly(t: &Mat) -> Vec<Scalar> {
    let field = t.field;
    let n = t.rows;
    let mut powers = Mat::from_columns(
        field,
        n * n,
        vec![Mat::identity(field, n).vectorize()],
    );
    let mut cur = Mat::identity(field, n);
    loop {
        cur = t.mul(&cur);
        let flat = Mat::from_columns(field, n * n, vec![cur.vectorize()]);
        if let Some(sol) = powers.solve(&flat) {
            let mut coeffs: Vec<Scalar> =
                sol.column(0).iter().map(Scalar::neg).collect();
            coeffs.push(field.one());
            return coeffs;
        }
        powers = powers.hstack(&flat);
    }
}

fn eval_poly(coeffs: &[Scalar], x: &Scalar, field: Field) -> Scalar {
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Exact roots of the polynomial within the search set: every element of a
/// prime field, or small rationals p/q with |p|, q bounded. Roots outside
/// the grid are missed, which can only make a split go unfound, never
/// produce a wrong one.
fn field_roots(coeffs: &[Scalar], field: Field) -> Vec<Scalar> {
    let mut roots = Vec::new();
    match field {
        Field::Prime(p) => {
            for v in 0..p {
                let c = field.from_i64(v as i64);
                if eval_poly(coeffs, &c, field).is_zero() {
                    roots.push(c);
                }
            }
        }
        Field::Rationals => {
            for num in -12i64..=12 {
                for den in 1i64..=12 {
                    if num_integer::gcd(num.abs(), den) != 1 {
                        continue;
                    }
                    let c = field.fraction(num, den);
                    if eval_poly(coeffs, &c, field).is_zero()
                        && !roots.contains(&c)
                    {
                        roots.push(c);
                    }
                }
            }
        }
    }
    roots
}

/// If some eigenvalue of the endomorphism yields a proper Fitting split,
/// return the two complementary pieces.
fn fitting_split(
    m: &Representation,
    f: &ModuleMap,
) -> Result<Option<(Representation, Representation)>> {
    let field = m.algebra.field;
    let total = m.total_dim();
    let mut full = Mat::zero(field, 0, 0);
    for b in &f.blocks {
        let mut grown = Mat::zero(field, full.rows + b.rows, full.cols + b.cols);
        for i in 0..full.rows {
            for j in 0..full.cols {
                grown.set(i, j, full.at(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                grown.set(full.rows + i, full.cols + j, b.at(i, j).clone());
            }
        }
        full = grown;
    }
    let poly = min_poly(&full);
    for c in field_roots(&poly, field) {
        let mut ker_spans = Vec::with_capacity(f.blocks.len());
        let mut im_spans = Vec::with_capacity(f.blocks.len());
        for b in &f.blocks {
            let shifted = b.sub(&Mat::identity(field, b.rows).scale(&c));
            let powered = shifted.pow(total.max(1));
            ker_spans.push(powered.kernel_basis());
            im_spans.push(powered.column_space_basis());
        }
        let kdim: usize = ker_spans.iter().map(|s| s.cols).sum();
        if kdim == 0 || kdim == total {
            continue;
        }
        let (ker, _) = m.sub_from_subspaces(ker_spans)?;
        let (im, _) = m.sub_from_subspaces(im_spans)?;
        debug_assert_eq!(ker.total_dim() + im.total_dim(), total);
        return Ok(Some((ker, im)));
    }
    Ok(None)
}

/// Rank of the trace form on the span of the given endomorphisms. Over the
/// rationals this is the dimension of End modulo its radical.
fn trace_form_rank(end: &[ModuleMap], field: Field) -> usize {
    let fulls: Vec<Vec<Mat>> = end.iter().map(|f| f.blocks.clone()).collect();
    let e = end.len();
    let mut gram = Mat::zero(field, e, e);
    for i in 0..e {
        for j in 0..e {
            let mut tr = field.zero();
            for (a, b) in fulls[i].iter().zip(&fulls[j]) {
                let prod = a.mul(b);
                for d in 0..prod.rows {
                    tr = tr.add(prod.at(d, d));
                }
            }
            gram.set(i, j, tr);
        }
    }
    gram.rank()
}

/// Hom systems grow with the product of the dimension vectors; past this
/// many matrix cells the exact solve swamps memory, so the split and
/// isomorphism routines refuse instead of grinding.
const HOM_CELL_CAP: usize = 4096;

fn hom_cells(m: &Representation, n: &Representation) -> usize {
    m.dims.iter().zip(&n.dims).map(|(&a, &b)| a * b).sum()
}

fn try_split(
    m: &Representation,
) -> Result<Option<(Representation, Representation)>> {
    if hom_cells(m, m) > HOM_CELL_CAP {
        return Err(Error::Unsupported(format!(
            "the endomorphism ring of a module of total dimension {} is \
             too large to split",
            m.total_dim()
        )));
    }
    let end = hom_space(m, m);
    if end.len() <= 1 {
        return Ok(None);
    }
    for f in &end {
        if let Some(split) = fitting_split(m, f)? {
            return Ok(Some(split));
        }
    }
    let field = m.algebra.field;
    match field {
        Field::Rationals => {
            if trace_form_rank(&end, field) == 1 {
                return Ok(None);
            }
            // Seeded combinations sometimes separate what single basis
            // elements cannot.
            let mut rng = Rng::new(0x5eed);
            for _ in 0..64 {
                let mut combo = ModuleMap::zero(m, m);
                for f in &end {
                    let c = field.from_i64(rng.small_int(3));
                    combo = combo.add(&f.scale(&c));
                }
                if let Some(split) = fitting_split(m, &combo)? {
                    return Ok(Some(split));
                }
            }
            Err(Error::Unsupported(
                "indecomposability could not be certified over the rationals"
                    .into(),
            ))
        }
        Field::Prime(p) => {
            // The endomorphism ring is finite; sweep it entirely. Any
            // nontrivial idempotent is in the sweep, so finding no split
            // proves the module indecomposable.
            let count = (p as u128).checked_pow(end.len() as u32);
            match count {
                Some(c) if c <= 1 << 14 => {
                    let mut digits = vec![0u64; end.len()];
                    loop {
                        let mut done = true;
                        for d in digits.iter_mut() {
                            *d += 1;
                            if *d < p {
                                done = false;
                                break;
                            }
                            *d = 0;
                        }
                        if done {
                            break;
                        }
                        let mut combo = ModuleMap::zero(m, m);
                        for (f, &d) in end.iter().zip(&digits) {
                            if d != 0 {
                                combo = combo
                                    .add(&f.scale(&field.from_i64(d as i64)));
                            }
                        }
                        if let Some(split) = fitting_split(m, &combo)? {
                            return Ok(Some(split));
                        }
                    }
                    Ok(None)
                }
                _ => Err(Error::Unsupported(format!(
                    "endomorphism ring too large to sweep over F_{p}"
                ))),
            }
        }
    }
}

fn split_rec(m: &Representation, out: &mut Vec<Representation>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    match try_split(m)? {
        Some((a, b)) => {
            split_rec(&a, out)?;
            split_rec(&b, out)?;
        }
        None => out.push(m.clone()),
    }
    Ok(())
}

fn sort_key(m: &Representation) -> (usize, Vec<usize>, String) {
    let mut s = String::new();
    for b in &m.maps {
        for i in 0..b.rows {
            for j in 0..b.cols {
                s.push_str(&b.at(i, j).to_string());
                s.push(',');
            }
        }
        s.push(';');
    }
    (m.total_dim(), m.dims.clone(), s)
}

/// Indecomposable direct summands, in a deterministic order (ascending
/// total dimension, then dimension vector).
pub fn decompose(m: &Representation) -> Result<Vec<Representation>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    split_rec(m, &mut parts)?;
    parts.sort_by_key(sort_key);
    Ok(parts)
}

/// Exact isomorphism test. Complete for indecomposables via the Hom basis;
/// in general falls back to decomposing both sides and matching summands.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if hom_cells(m, n) > HOM_CELL_CAP {
        return Err(Error::Unsupported(format!(
            "modules of total dimension {} are too large to compare",
            m.total_dim()
        )));
    }
    let homs = hom_space(m, n);
    for h in &homs {
        if h.is_isomorphism() {
            return Ok(true);
        }
    }
    if homs.is_empty() {
        return Ok(false);
    }
    let field = m.algebra.field;
    let mut rng = Rng::new(0x15a);
    for _ in 0..60 {
        let mut combo = ModuleMap::zero(m, n);
        for h in &homs {
            let c = match field {
                Field::Rationals => field.from_i64(rng.small_int(3)),
                Field::Prime(p) => field.from_i64(rng.below(p) as i64),
            };
            combo = combo.add(&h.scale(&c));
        }
        if combo.is_isomorphism() {
            return Ok(true);
        }
    }
    // Summand matching; complete because the parts are indecomposable.
    let mut parts_m = decompose(m)?;
    let parts_n = decompose(n)?;
    if parts_m.len() != parts_n.len() {
        return Ok(false);
    }
    if parts_m.len() == 1 {
        // Both indecomposable. Non-isomorphisms between indecomposables
        // form a subspace, so a spanning set with no isomorphism in it
        // means there is none at all; the scans above were decisive.
        return Ok(false);
    }
    for pn in &parts_n {
        let mut found = None;
        for (i, pm) in parts_m.iter().enumerate() {
            if is_isomorphic(pm, pn)? {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                parts_m.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Does every indecomposable summand of M occur, up to isomorphism, in the
/// given list?
pub fn add_membership(m: &Representation, coll: &[Representation]) -> Result<bool> {
    for part in decompose(m)? {
        let mut hit = false;
        for c in coll {
            if is_isomorphic(&part, c)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drop later entries isomorphic to an earlier one. Entries are expected to
/// be indecomposable already.
pub fn dedupe(mods: Vec<Representation>) -> Result<Vec<Representation>> {
    let mut out: Vec<Representation> = Vec::new();
    for m in mods {
        let mut seen = false;
        for kept in &out {
            if is_isomorphic(kept, &m)? {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, DEFAULT_WORD_CAP};
    use crate::quiver::{Arrow, Quiver};
    use crate::testfix::{aus2, pi3};
    use std::sync::Arc;

    #[test]
    fn splits_a_direct_sum() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let s2 = Representation::simple(&a, 1);
        let sum = Representation::direct_sum(&a, &[&p1, &s2, &p1]);
        let parts = decompose(&sum).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].dims, vec![0, 1, 0]);
        assert_eq!(parts[1].dims, vec![1, 1, 0]);
        assert_eq!(parts[2].dims, vec![1, 1, 0]);
        assert!(is_isomorphic(&parts[1], &parts[2]).unwrap());
        assert!(is_isomorphic(&parts[1], &p1).unwrap());
    }

    #[test]
    fn indecomposables_stay_whole() {
        let p = pi3();
        let p2 = Representation::projective(&p, 1);
        let parts = decompose(&p2).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].dims, p2.dims);
    }

    #[test]
    fn isomorphism_for_projective_injective() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let i2 = Representation::injective(&a, 1);
        assert!(is_isomorphic(&p1, &i2).unwrap());
        let p2 = Representation::projective(&a, 1);
        assert!(!is_isomorphic(&p1, &p2).unwrap());
    }

    #[test]
    fn sum_order_does_not_matter() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let s2 = Representation::simple(&a, 1);
        let m = Representation::direct_sum(&a, &[&s2, &p1]);
        let n = Representation::direct_sum(&a, &[&p1, &s2]);
        assert!(is_isomorphic(&m, &n).unwrap());
    }

    #[test]
    fn membership_in_a_collection() {
        let a = aus2();
        let coll: Vec<Representation> =
            (0..3).map(|v| Representation::projective(&a, v)).collect();
        let p1 = Representation::projective(&a, 0);
        let p3 = Representation::projective(&a, 2);
        let sum = Representation::direct_sum(&a, &[&p1, &p3]);
        assert!(add_membership(&sum, &coll).unwrap());
        let s2 = Representation::simple(&a, 1);
        assert!(!add_membership(&s2, &coll).unwrap());
    }

    #[test]
    fn prime_field_decomposition_is_certified() {
        let q = Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow { name: "a".into(), src: 0, tgt: 1 }],
        };
        let alg =
            Arc::new(build_algebra(q, Field::Prime(2), vec![], DEFAULT_WORD_CAP).unwrap());
        let p1 = Representation::projective(&alg, 0);
        let sum = Representation::direct_sum(&alg, &[&p1, &p1]);
        let parts = decompose(&sum).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(is_isomorphic(&parts[0], &p1).unwrap());
        let single = decompose(&p1).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn dedupe_keeps_one_per_class() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let i2 = Representation::injective(&a, 1);
        let s1 = Representation::simple(&a, 0);
        let out = dedupe(vec![p1.clone(), i2, s1]).unwrap();
        assert_eq!(out.len(), 2);
    }
}
