//! Representations of a bound quiver algebra and maps between them.
//!
//! A representation assigns a vector space to each vertex and a matrix to
//! each arrow (target dimension x source dimension). Construction verifies
//! that every defining relation evaluates to the zero matrix, so invalid
//! modules cannot circulate.
//!
//! Module maps are families of per-vertex blocks commuting with the arrow
//! action. Hom spaces are computed exactly as the kernel of the intertwining
//! system, with the canonical kernel basis, so results are deterministic.

use crate::algebra::{Algebra, IdealQuotient, VertexIdempotent};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::quiver::PathWord;
use crate::scalar::Scalar;
use std::sync::Arc;

#[derive(Clone, PartialEq)]
pub struct Representation {
    pub algebra: Arc<Algebra>,
    pub dims: Vec<usize>,
    /// One matrix per arrow, of shape dims[tgt] x dims[src].
    pub maps: Vec<Mat>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep{:?}", self.dims)
    }
}

impl Representation {
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let rep = Representation { algebra, dims, maps };
        rep.check()?;
        Ok(rep)
    }

    pub fn check(&self) -> Result<()> {
        let q = &self.algebra.quiver;
        if self.dims.len() != q.num_vertices() {
            return Err(Error::Input("dimension vector has wrong length".into()));
        }
        if self.maps.len() != q.arrows.len() {
            return Err(Error::Input("wrong number of arrow matrices".into()));
        }
        for (a, m) in self.maps.iter().enumerate() {
            let (s, t) = (q.arrows[a].src, q.arrows[a].tgt);
            if m.rows != self.dims[t] || m.cols != self.dims[s] {
                return Err(Error::Input(format!(
                    "matrix for arrow {} has shape {}x{}, expected {}x{}",
                    q.arrows[a].name, m.rows, m.cols, self.dims[t], self.dims[s]
                )));
            }
            if m.field != self.algebra.field {
                return Err(Error::Input(format!(
                    "matrix for arrow {} is over the wrong field",
                    q.arrows[a].name
                )));
            }
        }
        for r in &self.algebra.relations {
            let src = r.terms[0].1.src;
            let tgt = r.terms[0].1.tgt(q);
            let mut acc =
                Mat::zero(self.algebra.field, self.dims[tgt], self.dims[src]);
            for (c, w) in &r.terms {
                acc = acc.add(&self.eval_word(w).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::Input(format!(
                    "relation {} does not vanish on the representation",
                    r.display(q)
                )));
            }
        }
        Ok(())
    }

    /// The matrix of a path word acting on this module (composite of arrow
    /// matrices in application order).
    pub fn eval_word(&self, w: &PathWord) -> Mat {
        let q = &self.algebra.quiver;
        let mut acc = Mat::identity(self.algebra.field, self.dims[w.src]);
        for &a in &w.arrows {
            acc = self.maps[a].mul(&acc);
        }
        debug_assert_eq!(acc.rows, self.dims[w.tgt(q)]);
        acc
    }

    pub fn zero_module(algebra: Arc<Algebra>) -> Self {
        let q = &algebra.quiver;
        let dims = vec![0; q.num_vertices()];
        let maps = (0..q.arrows.len())
            .map(|_| Mat::zero(algebra.field, 0, 0))
            .collect();
        Representation { algebra, dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The same representation handed to a different (content-identical)
    /// instance of the algebra. Double duals and other round trips land on a
    /// rebuilt algebra value; this re-anchors them.
    pub fn rebase(&self, algebra: &Arc<Algebra>) -> Representation {
        assert_eq!(self.algebra.fingerprint(), algebra.fingerprint());
        Representation {
            algebra: algebra.clone(),
            dims: self.dims.clone(),
            maps: self.maps.clone(),
        }
    }

    /// The projective module at a vertex: basis words with that source,
    /// graded by target; arrows act by composing on the outside.
    pub fn projective(algebra: &Arc<Algebra>, v: usize) -> Self {
        let q = &algebra.quiver;
        let field = algebra.field;
        let piece = proj_pieces(algebra, v);
        let pos_of = positions(&piece, algebra.dim());
        let dims: Vec<usize> = piece.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arr) in q.arrows.iter().enumerate() {
            let mut m = Mat::zero(field, dims[arr.tgt], dims[arr.src]);
            for (col, &widx) in piece[arr.src].iter().enumerate() {
                for (c, pidx) in algebra.compose_basis(widx, algebra.arrow_idx(a)) {
                    let row = pos_of[*pidx].expect("product stays in the module");
                    m.set(row, col, m.at(row, col).add(c));
                }
            }
            maps.push(m);
        }
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// The injective module at a vertex: dual of the words with that target,
    /// graded by source; arrows act as transposes of prepending the arrow.
    pub fn injective(algebra: &Arc<Algebra>, v: usize) -> Self {
        let q = &algebra.quiver;
        let field = algebra.field;
        let mut piece: Vec<Vec<usize>> = vec![Vec::new(); q.num_vertices()];
        for &i in algebra.basis_into(v) {
            piece[algebra.basis[i].src].push(i);
        }
        let pos_of = positions(&piece, algebra.dim());
        let dims: Vec<usize> = piece.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arr) in q.arrows.iter().enumerate() {
            let mut m = Mat::zero(field, dims[arr.tgt], dims[arr.src]);
            for (row, &widx) in piece[arr.tgt].iter().enumerate() {
                for (c, pidx) in algebra.compose_basis(algebra.arrow_idx(a), widx) {
                    let col = pos_of[*pidx].expect("prepending stays in the module");
                    m.set(row, col, m.at(row, col).add(c));
                }
            }
            maps.push(m);
        }
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn simple(algebra: &Arc<Algebra>, v: usize) -> Self {
        let q = &algebra.quiver;
        let field = algebra.field;
        let dims: Vec<usize> =
            (0..q.num_vertices()).map(|u| usize::from(u == v)).collect();
        let maps = q
            .arrows
            .iter()
            .map(|a| Mat::zero(field, dims[a.tgt], dims[a.src]))
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[&Representation]) -> Self {
        let q = &algebra.quiver;
        let field = algebra.field;
        for p in parts {
            debug_assert_eq!(p.algebra.fingerprint(), algebra.fingerprint());
        }
        let dims: Vec<usize> = (0..q.num_vertices())
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arr) in q.arrows.iter().enumerate() {
            let mut m = Mat::zero(field, dims[arr.tgt], dims[arr.src]);
            let mut roff = 0;
            let mut coff = 0;
            for p in parts {
                let block = &p.maps[a];
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        m.set(roff + i, coff + j, block.at(i, j).clone());
                    }
                }
                roff += p.dims[arr.tgt];
                coff += p.dims[arr.src];
            }
            maps.push(m);
        }
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// The same structure viewed over the opposite algebra: identical vertex
    /// spaces, every arrow matrix transposed.
    pub fn dualize(&self) -> Result<Representation> {
        let op = self.algebra.op()?;
        let maps = self.maps.iter().map(Mat::transpose).collect();
        Representation::new(op, self.dims.clone(), maps)
    }

    /// Subrepresentation spanned by the given per-vertex column spans. The
    /// spans must be arrow-invariant and have independent columns; callers
    /// arrange both. Returns the subrepresentation and its inclusion.
    pub fn sub_from_subspaces(
        &self,
        spans: Vec<Mat>,
    ) -> Result<(Representation, ModuleMap)> {
        let q = &self.algebra.quiver;
        let dims: Vec<usize> = spans.iter().map(|u| u.cols).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arr) in q.arrows.iter().enumerate() {
            let rhs = self.maps[a].mul(&spans[arr.src]);
            let x = spans[arr.tgt].solve(&rhs).ok_or_else(|| {
                Error::Internal("subspaces are not arrow-invariant".into())
            })?;
            maps.push(x);
        }
        let sub = Representation { algebra: self.algebra.clone(), dims, maps };
        let incl = ModuleMap { blocks: spans };
        debug_assert!(incl.check(&sub, self).is_ok());
        Ok((sub, incl))
    }

    /// Quotient by the subrepresentation spanned by the given column spans.
    /// Returns the quotient and the projection onto it.
    pub fn quotient_by_subspaces(
        &self,
        spans: &[Mat],
    ) -> Result<(Representation, ModuleMap)> {
        let q = &self.algebra.quiver;
        let projs: Vec<Mat> = spans.iter().map(Mat::left_annihilator).collect();
        let dims: Vec<usize> = projs.iter().map(|p| p.rows).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arr) in q.arrows.iter().enumerate() {
            // Solve N_a * proj_src = proj_tgt * M_a; unique because the
            // projection is surjective.
            let b = projs[arr.tgt].mul(&self.maps[a]);
            let xt = projs[arr.src]
                .transpose()
                .solve(&b.transpose())
                .ok_or_else(|| {
                    Error::Internal("span is not arrow-invariant".into())
                })?;
            maps.push(xt.transpose());
        }
        let quo = Representation { algebra: self.algebra.clone(), dims, maps };
        let proj = ModuleMap { blocks: projs };
        debug_assert!(proj.check(self, &quo).is_ok());
        Ok((quo, proj))
    }

    /// Radical: the subrepresentation generated by all arrow images.
    pub fn radical_spans(&self) -> Vec<Mat> {
        let q = &self.algebra.quiver;
        (0..q.num_vertices())
            .map(|v| {
                let mut acc = Mat::zero(self.algebra.field, self.dims[v], 0);
                for a in q.arrows_into(v) {
                    acc = acc.hstack(&self.maps[a]);
                }
                acc.column_space_basis()
            })
            .collect()
    }

    pub fn top_projection(&self) -> Result<(Representation, ModuleMap)> {
        self.quotient_by_subspaces(&self.radical_spans())
    }

    /// Socle: everything annihilated by all arrows.
    pub fn socle_spans(&self) -> Vec<Mat> {
        let q = &self.algebra.quiver;
        (0..q.num_vertices())
            .map(|v| {
                let mut acc = Mat::zero(self.algebra.field, 0, self.dims[v]);
                for a in q.arrows_from(v) {
                    acc = acc.vstack(&self.maps[a]);
                }
                acc.kernel_basis()
            })
            .collect()
    }

    /// Largest subrepresentation whose components at the idempotent's
    /// vertices vanish. Shrinks vertexwise until arrow-invariant.
    pub fn killed_sub(&self, e: &VertexIdempotent) -> Result<(Representation, ModuleMap)> {
        let q = &self.algebra.quiver;
        let field = self.algebra.field;
        let n = q.num_vertices();
        let mut spans: Vec<Mat> = (0..n)
            .map(|v| {
                if e.contains(v) {
                    Mat::zero(field, self.dims[v], 0)
                } else {
                    Mat::identity(field, self.dims[v])
                }
            })
            .collect();
        loop {
            let mut changed = false;
            for v in 0..n {
                if spans[v].cols == 0 {
                    continue;
                }
                // Keep only vectors every arrow sends into the target span.
                let mut cond = Mat::zero(field, 0, self.dims[v]);
                for a in q.arrows_from(v) {
                    let ann = spans[q.arrows[a].tgt].left_annihilator();
                    cond = cond.vstack(&ann.mul(&self.maps[a]));
                }
                let restricted = cond.mul(&spans[v]);
                let keep = restricted.kernel_basis();
                if keep.cols < spans[v].cols {
                    spans[v] = spans[v].mul(&keep);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.sub_from_subspaces(spans)
    }

    /// Largest quotient whose components at the idempotent's vertices
    /// vanish: divide by the subrepresentation generated there.
    pub fn killed_quotient(
        &self,
        e: &VertexIdempotent,
    ) -> Result<(Representation, ModuleMap)> {
        let q = &self.algebra.quiver;
        let field = self.algebra.field;
        let n = q.num_vertices();
        let mut spans: Vec<Mat> = (0..n)
            .map(|v| {
                if e.contains(v) {
                    Mat::identity(field, self.dims[v])
                } else {
                    Mat::zero(field, self.dims[v], 0)
                }
            })
            .collect();
        loop {
            let mut changed = false;
            for (a, arr) in q.arrows.iter().enumerate() {
                let pushed = self.maps[a].mul(&spans[arr.src]);
                let joined = spans[arr.tgt].hstack(&pushed).column_space_basis();
                if joined.cols > spans[arr.tgt].cols {
                    spans[arr.tgt] = joined;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.quotient_by_subspaces(&spans)
    }
}

/// Basis word indices of the projective at v, grouped by target vertex,
/// ascending in the word order within each group. This is the basis layout
/// `projective` uses, exposed for code that indexes into it.
pub(crate) fn proj_pieces(algebra: &Algebra, v: usize) -> Vec<Vec<usize>> {
    let q = &algebra.quiver;
    let mut piece: Vec<Vec<usize>> = vec![Vec::new(); q.num_vertices()];
    for &i in algebra.basis_from(v) {
        piece[algebra.basis[i].tgt(q)].push(i);
    }
    piece
}

pub(crate) fn positions(piece: &[Vec<usize>], total: usize) -> Vec<Option<usize>> {
    let mut pos = vec![None; total];
    for part in piece {
        for (k, &i) in part.iter().enumerate() {
            pos[i] = Some(k);
        }
    }
    pos
}

/// View a module over the quotient by an idempotent ideal as a module over
/// the original algebra: removed vertices get the zero space, removed arrows
/// the zero map.
pub fn inflate(
    ambient: &Arc<Algebra>,
    quo: &IdealQuotient,
    m: &Representation,
) -> Result<Representation> {
    if m.algebra.fingerprint() != quo.algebra.fingerprint() {
        return Err(Error::Precondition(
            "module is not over the quotient algebra".into(),
        ));
    }
    let q = &ambient.quiver;
    let dims: Vec<usize> = (0..q.num_vertices())
        .map(|v| quo.vertex_map[v].map_or(0, |nv| m.dims[nv]))
        .collect();
    let maps: Vec<Mat> = (0..q.arrows.len())
        .map(|a| match quo.arrow_map[a] {
            Some(na) => m.maps[na].clone(),
            None => Mat::zero(
                ambient.field,
                dims[q.arrows[a].tgt],
                dims[q.arrows[a].src],
            ),
        })
        .collect();
    Representation::new(ambient.clone(), dims, maps)
}

/// Inverse of inflation: a module annihilated by the ideal, viewed over the
/// quotient algebra. Fails if the module does not vanish on the removed
/// vertices.
pub fn restrict_to_quotient(
    quo: &IdealQuotient,
    m: &Representation,
) -> Result<Representation> {
    let q = &m.algebra.quiver;
    for v in 0..q.num_vertices() {
        if quo.vertex_map[v].is_none() && m.dims[v] != 0 {
            return Err(Error::Precondition(format!(
                "module is nonzero at removed vertex {}",
                q.vertices[v]
            )));
        }
    }
    let nq = &quo.algebra.quiver;
    let mut dims = vec![0; nq.num_vertices()];
    for v in 0..q.num_vertices() {
        if let Some(nv) = quo.vertex_map[v] {
            dims[nv] = m.dims[v];
        }
    }
    let mut maps = vec![Mat::zero(quo.algebra.field, 0, 0); nq.arrows.len()];
    for a in 0..q.arrows.len() {
        if let Some(na) = quo.arrow_map[a] {
            maps[na] = m.maps[a].clone();
        }
    }
    Representation::new(quo.algebra.clone(), dims, maps)
}

/// A map of representations: one block per vertex, commuting with arrows.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    pub blocks: Vec<Mat>,
}

impl ModuleMap {
    pub fn new(
        from: &Representation,
        to: &Representation,
        blocks: Vec<Mat>,
    ) -> Result<Self> {
        let f = ModuleMap { blocks };
        f.check(from, to)?;
        Ok(f)
    }

    pub fn check(&self, from: &Representation, to: &Representation) -> Result<()> {
        let q = &from.algebra.quiver;
        if self.blocks.len() != q.num_vertices() {
            return Err(Error::Input("wrong number of blocks".into()));
        }
        for v in 0..q.num_vertices() {
            if self.blocks[v].rows != to.dims[v] || self.blocks[v].cols != from.dims[v]
            {
                return Err(Error::Input(format!(
                    "block at vertex {} has the wrong shape",
                    q.vertices[v]
                )));
            }
        }
        for (a, arr) in q.arrows.iter().enumerate() {
            let lhs = self.blocks[arr.tgt].mul(&from.maps[a]);
            let rhs = to.maps[a].mul(&self.blocks[arr.src]);
            if lhs != rhs {
                return Err(Error::Input(format!(
                    "blocks do not commute with arrow {}",
                    arr.name
                )));
            }
        }
        Ok(())
    }

    pub fn zero(from: &Representation, to: &Representation) -> Self {
        let field = from.algebra.field;
        ModuleMap {
            blocks: (0..from.dims.len())
                .map(|v| Mat::zero(field, to.dims[v], from.dims[v]))
                .collect(),
        }
    }

    pub fn identity(m: &Representation) -> Self {
        let field = m.algebra.field;
        ModuleMap {
            blocks: m.dims.iter().map(|&d| Mat::identity(field, d)).collect(),
        }
    }

    /// First self, then g.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&g.blocks)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Mat::is_invertible)
    }

    pub fn kernel(&self, domain: &Representation) -> Result<(Representation, ModuleMap)> {
        let spans: Vec<Mat> = self.blocks.iter().map(Mat::kernel_basis).collect();
        domain.sub_from_subspaces(spans)
    }

    pub fn image(&self, codomain: &Representation) -> Result<(Representation, ModuleMap)> {
        let spans: Vec<Mat> =
            self.blocks.iter().map(Mat::column_space_basis).collect();
        codomain.sub_from_subspaces(spans)
    }

    pub fn cokernel(
        &self,
        codomain: &Representation,
    ) -> Result<(Representation, ModuleMap)> {
        let spans: Vec<Mat> =
            self.blocks.iter().map(Mat::column_space_basis).collect();
        codomain.quotient_by_subspaces(&spans)
    }

    /// All blocks flattened into one coordinate vector, vertex by vertex.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for b in &self.blocks {
            out.extend(b.vectorize());
        }
        out
    }
}

/// Basis of the space of module maps M -> N: the canonical kernel basis of
/// the intertwining system, unflattened back into blocks.
pub fn hom_space(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    let field = m.algebra.field;
    let q = &m.algebra.quiver;
    debug_assert_eq!(m.algebra.fingerprint(), n.algebra.fingerprint());
    let nverts = q.num_vertices();
    let mut offset = vec![0usize; nverts + 1];
    for v in 0..nverts {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nverts];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, arr) in q.arrows.iter().enumerate() {
        let (s, t) = (arr.src, arr.tgt);
        // f_t * M_a - N_a * f_s = 0, one equation per entry (i, j).
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![field.zero(); unknowns];
                for k in 0..m.dims[t] {
                    let idx = offset[t] + i * m.dims[t] + k;
                    row[idx] = row[idx].add(m.maps[a].at(k, j));
                }
                for l in 0..n.dims[s] {
                    let idx = offset[s] + l * m.dims[s] + j;
                    row[idx] = row[idx].sub(n.maps[a].at(i, l));
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Mat::zero(field, 0, unknowns)
    } else {
        Mat::from_rows(field, rows)
    };
    let kernel = system.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols);
    for c in 0..kernel.cols {
        let col = kernel.column(c);
        let mut blocks = Vec::with_capacity(nverts);
        for v in 0..nverts {
            let mut b = Mat::zero(field, n.dims[v], m.dims[v]);
            for i in 0..n.dims[v] {
                for j in 0..m.dims[v] {
                    b.set(i, j, col[offset[v] + i * m.dims[v] + j].clone());
                }
            }
            blocks.push(b);
        }
        let f = ModuleMap { blocks };
        debug_assert!(f.check(m, n).is_ok());
        out.push(f);
    }
    out
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_space(m, n).len()
}

/// Coordinates of f in the given basis of the Hom space, or None if f lies
/// outside the span.
pub fn coordinates_in_hom_basis(
    basis: &[ModuleMap],
    f: &ModuleMap,
) -> Option<Vec<Scalar>> {
    let target = f.flatten();
    if basis.is_empty() {
        return if target.iter().all(Scalar::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let field = target
        .first()
        .map(Scalar::field)
        .unwrap_or(basis[0].blocks[0].field);
    let cols: Vec<Vec<Scalar>> = basis.iter().map(ModuleMap::flatten).collect();
    let h = Mat::from_columns(field, target.len(), cols);
    let rhs = Mat::from_columns(field, target.len(), vec![target]);
    let x = h.solve(&rhs)?;
    Some(x.column(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testfix::{a3_hereditary, aus2, pi3};

    #[test]
    fn projective_and_injective_shapes() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let p2 = Representation::projective(&a, 1);
        let p3 = Representation::projective(&a, 2);
        assert_eq!(p1.dims, vec![1, 1, 0]);
        assert_eq!(p2.dims, vec![0, 1, 1]);
        assert_eq!(p3.dims, vec![0, 0, 1]);
        let i1 = Representation::injective(&a, 0);
        let i2 = Representation::injective(&a, 1);
        let i3 = Representation::injective(&a, 2);
        assert_eq!(i1.dims, vec![1, 0, 0]);
        assert_eq!(i2.dims, vec![1, 1, 0]);
        assert_eq!(i3.dims, vec![0, 1, 1]);
        for m in [&p1, &p2, &p3, &i1, &i2, &i3] {
            m.check().unwrap();
        }
    }

    #[test]
    fn hom_from_projective_is_evaluation() {
        let p = pi3();
        let m = Representation::projective(&p, 1);
        for v in 0..3 {
            let pv = Representation::projective(&p, v);
            assert_eq!(hom_dim(&pv, &m), m.dims[v]);
        }
    }

    #[test]
    fn hom_dims_on_small_modules() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let p2 = Representation::projective(&a, 1);
        assert_eq!(hom_dim(&p1, &p1), 1);
        assert_eq!(hom_dim(&p1, &p2), 0);
        assert_eq!(hom_dim(&p2, &p1), 1);
    }

    #[test]
    fn radical_top_socle_of_projective() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let (rad, _) = p1.sub_from_subspaces(p1.radical_spans()).unwrap();
        assert_eq!(rad.dims, vec![0, 1, 0]);
        let (top, _) = p1.top_projection().unwrap();
        assert_eq!(top.dims, vec![1, 0, 0]);
        let (soc, _) = p1.sub_from_subspaces(p1.socle_spans()).unwrap();
        assert_eq!(soc.dims, vec![0, 1, 0]);
    }

    #[test]
    fn kernel_image_cokernel_of_a_map() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let p2 = Representation::projective(&a, 1);
        let homs = hom_space(&p2, &p1);
        assert_eq!(homs.len(), 1);
        let f = &homs[0];
        let (ker, _) = f.kernel(&p2).unwrap();
        assert_eq!(ker.dims, vec![0, 0, 1]);
        let (im, _) = f.image(&p1).unwrap();
        assert_eq!(im.dims, vec![0, 1, 0]);
        let (coker, _) = f.cokernel(&p1).unwrap();
        assert_eq!(coker.dims, vec![1, 0, 0]);
    }

    #[test]
    fn double_dual_is_identity() {
        let p = pi3();
        let m = Representation::projective(&p, 0);
        let dd = m.dualize().unwrap().dualize().unwrap();
        assert_eq!(dd.dims, m.dims);
        assert_eq!(dd.maps, m.maps);
        assert_eq!(dd.algebra.fingerprint(), m.algebra.fingerprint());
    }

    #[test]
    fn killed_sub_and_quotient() {
        let a = aus2();
        let e = VertexIdempotent::from_names(&a.quiver, &["2"]).unwrap();
        let p1 = Representation::projective(&a, 0);
        let (quo, _) = p1.killed_quotient(&e).unwrap();
        assert_eq!(quo.dims, vec![1, 0, 0]);
        let (sub, _) = p1.killed_sub(&e).unwrap();
        assert!(sub.is_zero());
        let s1 = Representation::simple(&a, 0);
        let (sub1, _) = s1.killed_sub(&e).unwrap();
        assert_eq!(sub1.dims, vec![1, 0, 0]);
    }

    #[test]
    fn inflate_restrict_round_trip() {
        let a = aus2();
        let e = VertexIdempotent::from_names(&a.quiver, &["2"]).unwrap();
        let quo = a.quotient_by_idempotent_ideal(&e).unwrap();
        let s = Representation::simple(&quo.algebra, 0);
        let up = inflate(&a, &quo, &s).unwrap();
        assert_eq!(up.dims, vec![1, 0, 0]);
        let back = restrict_to_quotient(&quo, &up).unwrap();
        assert_eq!(back.dims, s.dims);
    }

    #[test]
    fn direct_sum_and_hom_additivity() {
        let h = a3_hereditary();
        let p1 = Representation::projective(&h, 0);
        let p2 = Representation::projective(&h, 1);
        let sum = Representation::direct_sum(&h, &[&p1, &p2]);
        assert_eq!(sum.total_dim(), p1.total_dim() + p2.total_dim());
        assert_eq!(
            hom_dim(&sum, &p1),
            hom_dim(&p1, &p1) + hom_dim(&p2, &p1)
        );
    }

    #[test]
    fn hom_coordinates_round_trip() {
        let a = aus2();
        let p1 = Representation::projective(&a, 0);
        let basis = hom_space(&p1, &p1);
        assert_eq!(basis.len(), 1);
        let two = a.field.from_i64(2);
        let f = basis[0].scale(&two);
        let coords = coordinates_in_hom_basis(&basis, &f).unwrap();
        assert_eq!(coords, vec![two]);
    }

    #[test]
    fn rejects_relation_violation() {
        let a = aus2();
        let f = a.field;
        // One-dimensional everywhere with identity arrows: b*a acts as 1,
        // violating b*a = 0.
        let maps = vec![Mat::identity(f, 1), Mat::identity(f, 1)];
        match Representation::new(a.clone(), vec![1, 1, 1], maps) {
            Err(Error::Input(_)) => {}
            other => panic!("expected input error, got {other:?}"),
        }
    }
}
