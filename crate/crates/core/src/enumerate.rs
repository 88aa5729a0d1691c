//! Exhaustive search for indecomposable modules over a prime field, up to
//! a total dimension bound. Every indecomposable of total dimension within
//! the bound occurs among the enumerated representations (it is one), so
//! keeping the indecomposable ones and deduping up to isomorphism yields
//! the complete list below the bound.

use crate::algebra::Algebra;
use crate::decompose::{decompose, is_isomorphic};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rep::Representation;
use crate::scalar::Field;
use std::sync::Arc;

pub struct ModuleCollection {
    pub modules: Vec<Representation>,
    /// Set when indecomposables beyond the bound may exist. Only a
    /// semisimple algebra certifies completeness outright.
    pub partial: bool,
}

/// Advance a base-`radix` odometer; false once it wraps around to zero.
fn next_vector(digits: &mut [usize], radix: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radix) {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

pub fn enumerate_indecomposables(
    algebra: &Arc<Algebra>,
    dim_bound: usize,
) -> Result<ModuleCollection> {
    let p = match algebra.field {
        Field::Prime(p) => p as usize,
        Field::Rationals => {
            return Err(Error::Unsupported(
                "indecomposable enumeration needs a finite field".into(),
            ))
        }
    };
    let n = algebra.num_vertices();
    let mut found: Vec<Representation> = Vec::new();

    let mut dims = vec![0usize; n];
    let dim_radix = vec![dim_bound + 1; n];
    loop {
        let total: usize = dims.iter().sum();
        if total >= 1 && total <= dim_bound {
            collect_for_dims(algebra, &dims, p, &mut found)?;
        }
        if !next_vector(&mut dims, &dim_radix) {
            break;
        }
    }
    found.sort_by_key(|m| (m.total_dim(), m.dims.clone()));
    let semisimple = algebra.dim() == n;
    Ok(ModuleCollection {
        modules: found,
        partial: !(semisimple && dim_bound >= 1),
    })
}

fn collect_for_dims(
    algebra: &Arc<Algebra>,
    dims: &[usize],
    p: usize,
    found: &mut Vec<Representation>,
) -> Result<()> {
    let q = &algebra.quiver;
    let field = algebra.field;
    // One digit per matrix entry, all arrows flattened.
    let mut shapes = Vec::new();
    let mut entries = 0usize;
    for a in &q.arrows {
        let (r, c) = (dims[a.tgt], dims[a.src]);
        shapes.push((r, c));
        entries += r * c;
    }
    let mut digits = vec![0usize; entries];
    let radix = vec![p; entries];
    loop {
        let mut maps = Vec::with_capacity(shapes.len());
        let mut pos = 0;
        for &(r, c) in &shapes {
            let mut m = Mat::zero(field, r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, field.from_i64(digits[pos] as i64));
                    pos += 1;
                }
            }
            maps.push(m);
        }
        if let Ok(rep) =
            Representation::new(algebra.clone(), dims.to_vec(), maps)
        {
            if decompose(&rep)?.len() == 1 {
                let mut new = true;
                for seen in found.iter() {
                    if is_isomorphic(seen, &rep)? {
                        new = false;
                        break;
                    }
                }
                if new {
                    found.push(rep);
                }
            }
        }
        if entries == 0 || !next_vector(&mut digits, &radix) {
            break;
        }
    }
    Ok(())
}
