//! Finite-dimensional bound quiver algebras.
//!
//! An algebra is presented by a quiver, a coefficient field, and admissible
//! relations (combinations of parallel paths of length at least two).
//! Building it completes the relations into a rewriting system, enumerates
//! the irreducible words as a basis, and tabulates all products of basis
//! words. Associativity is then verified on every composable basis triple;
//! this is a genuine check that the completed system is confluent, not an
//! assertion of something already known.
//!
//! Basis layout: words are sorted by (length, arrow sequence, source), so
//! the trivial path at vertex v sits at index v and the single-arrow word
//! for arrow a sits at index (number of vertices) + a. Build asserts both.

use crate::error::{Error, Result};
use crate::quiver::{PathWord, Quiver};
use crate::rewrite::{self, Poly};
use crate::scalar::{Field, Scalar};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// Word length bound used when callers do not override it. Completion and
/// basis enumeration abort past this length instead of running forever.
pub const DEFAULT_WORD_CAP: usize = 30;

/// A defining relation: a linear combination of parallel paths, equated to
/// zero. All terms must share a source and a target, and every path must
/// have length at least two.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Scalar, PathWord)>,
}

impl Relation {
    pub fn validate(&self, q: &Quiver, field: Field) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::Input("relation has no terms".into()));
        }
        let src = self.terms[0].1.src;
        let tgt = self.terms[0].1.tgt(q);
        for (c, w) in &self.terms {
            if c.field() != field {
                return Err(Error::Input(
                    "relation coefficient is not in the algebra's field".into(),
                ));
            }
            if w.len() < 2 {
                return Err(Error::Input(format!(
                    "relation term {} has length {}; relations must be \
                     combinations of paths of length at least 2",
                    w.display(q),
                    w.len()
                )));
            }
            if w.src != src || w.tgt(q) != tgt {
                return Err(Error::Input(format!(
                    "relation mixes paths with different endpoints: {} does \
                     not run {} -> {}",
                    w.display(q),
                    q.vertices[src],
                    q.vertices[tgt]
                )));
            }
        }
        Ok(())
    }

    fn to_poly(&self) -> Poly {
        Poly::new(self.terms.clone())
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            if i == 0 {
                if cs != "1" {
                    out.push_str(&cs);
                    out.push(' ');
                }
            } else if cs.starts_with('-') {
                out.push_str(" - ");
                if cs != "-1" {
                    out.push_str(cs.trim_start_matches('-'));
                    out.push(' ');
                }
            } else {
                out.push_str(" + ");
                if cs != "1" {
                    out.push_str(&cs);
                    out.push(' ');
                }
            }
            out.push_str(&w.display(q).to_string());
        }
        out
    }
}

/// A sum of vertex idempotents, given by the set of vertices. These are the
/// idempotents the ideal theory works with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexIdempotent {
    vertices: Vec<usize>,
}

impl VertexIdempotent {
    pub fn new(q: &Quiver, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= q.num_vertices()) {
            return Err(Error::Input(format!("vertex index {v} out of range")));
        }
        Ok(VertexIdempotent { vertices })
    }

    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self> {
        let mut vs = Vec::new();
        for n in names {
            let v = q
                .vertex_index(n)
                .ok_or_else(|| Error::Input(format!("unknown vertex {n}")))?;
            vs.push(v);
        }
        VertexIdempotent::new(q, vs)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn complement(&self, q: &Quiver) -> VertexIdempotent {
        VertexIdempotent {
            vertices: (0..q.num_vertices()).filter(|&v| !self.contains(v)).collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let names: Vec<&str> =
            self.vertices.iter().map(|&v| q.vertices[v].as_str()).collect();
        format!("e({})", names.join(","))
    }
}

pub struct Algebra {
    pub quiver: Quiver,
    pub field: Field,
    pub relations: Vec<Relation>,
    /// Irreducible words, sorted by (length, arrow sequence, source).
    pub basis: Vec<PathWord>,
    pub cap: usize,
    word_index: HashMap<PathWord, usize>,
    /// table[first * dim + later] = product "first, then later" expanded in
    /// the basis. Empty when the endpoints do not match.
    table: Vec<Vec<(Scalar, usize)>>,
    from_vertex: Vec<Vec<usize>>,
    into_vertex: Vec<Vec<usize>>,
    fingerprint: u64,
    op_cache: OnceLock<Arc<Algebra>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            quiver: self.quiver.clone(),
            field: self.field,
            relations: self.relations.clone(),
            basis: self.basis.clone(),
            cap: self.cap,
            word_index: self.word_index.clone(),
            table: self.table.clone(),
            from_vertex: self.from_vertex.clone(),
            into_vertex: self.into_vertex.clone(),
            fingerprint: self.fingerprint,
            op_cache: OnceLock::new(),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.quiver == other.quiver
            && self.field == other.field
            && self.relations == other.relations
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra({} vertices, {} arrows, {} relations, dim {})",
            self.quiver.num_vertices(),
            self.quiver.arrows.len(),
            self.relations.len(),
            self.dim()
        )
    }
}

fn fnv1a(bytes: &[u8], mut h: u64) -> u64 {
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn content_fingerprint(q: &Quiver, field: Field, relations: &[Relation]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    h = fnv1a(format!("{field}").as_bytes(), h);
    for v in &q.vertices {
        h = fnv1a(v.as_bytes(), h);
        h = fnv1a(b";", h);
    }
    for a in &q.arrows {
        h = fnv1a(format!("{}:{}>{}", a.name, a.src, a.tgt).as_bytes(), h);
    }
    for r in relations {
        for (c, w) in &r.terms {
            h = fnv1a(format!("{c}@{}:{:?}", w.src, w.arrows).as_bytes(), h);
        }
        h = fnv1a(b"|", h);
    }
    h
}

fn validate_quiver(q: &Quiver) -> Result<()> {
    for (i, v) in q.vertices.iter().enumerate() {
        if v.is_empty() {
            return Err(Error::Input("empty vertex name".into()));
        }
        if q.vertices[..i].contains(v) {
            return Err(Error::Input(format!("duplicate vertex name {v}")));
        }
    }
    for (i, a) in q.arrows.iter().enumerate() {
        if a.name.is_empty() {
            return Err(Error::Input("empty arrow name".into()));
        }
        if q.arrows[..i].iter().any(|b| b.name == a.name) {
            return Err(Error::Input(format!("duplicate arrow name {}", a.name)));
        }
        if a.src >= q.num_vertices() || a.tgt >= q.num_vertices() {
            return Err(Error::Input(format!(
                "arrow {} has an endpoint outside the vertex range",
                a.name
            )));
        }
    }
    Ok(())
}

pub fn build_algebra(
    quiver: Quiver,
    field: Field,
    relations: Vec<Relation>,
    cap: usize,
) -> Result<Algebra> {
    validate_quiver(&quiver)?;
    for r in &relations {
        r.validate(&quiver, field)?;
    }
    // Canonical term order (and merged duplicates) so that two builds of
    // the same presentation always agree, fingerprint included.
    let relations: Vec<Relation> = relations
        .into_iter()
        .map(|r| {
            let mut terms: Vec<(Scalar, PathWord)> = Vec::new();
            let mut sorted = r.terms;
            sorted.sort_by(|x, y| y.1.cmp_words(&x.1));
            for (c, w) in sorted {
                match terms.last_mut() {
                    Some((lc, lw)) if *lw == w => *lc = lc.add(&c),
                    _ => terms.push((c, w)),
                }
            }
            terms.retain(|(c, _)| !c.is_zero());
            Relation { terms }
        })
        .filter(|r| !r.terms.is_empty())
        .collect();
    let polys: Vec<Poly> =
        relations.iter().map(Relation::to_poly).filter(|p| !p.is_zero()).collect();
    let rw = rewrite::complete(&quiver, field, polys, cap)?;
    let basis = rw.irreducible_words()?;

    let n = quiver.num_vertices();
    for v in 0..n {
        debug_assert_eq!(basis[v], PathWord::trivial(v));
    }
    for (a, _) in quiver.arrows.iter().enumerate() {
        debug_assert_eq!(basis[n + a].arrows, vec![a]);
    }

    let mut word_index = HashMap::with_capacity(basis.len());
    for (i, w) in basis.iter().enumerate() {
        word_index.insert(w.clone(), i);
    }

    let dim = basis.len();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            if basis[i].tgt(&quiver) != basis[j].src {
                continue;
            }
            let prod = basis[i].compose(&quiver, &basis[j]);
            let nf = rw.reduce_word(&prod);
            let mut entry: Vec<(Scalar, usize)> = nf
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), word_index[w]))
                .collect();
            entry.sort_by_key(|&(_, k)| k);
            table[i * dim + j] = entry;
        }
    }

    // The relations must be identically zero in the quotient.
    for r in &relations {
        if !rw.reduce(r.to_poly()).is_zero() {
            return Err(Error::Internal(
                "a defining relation does not reduce to zero".into(),
            ));
        }
    }

    let mut from_vertex = vec![Vec::new(); n];
    let mut into_vertex = vec![Vec::new(); n];
    for (i, w) in basis.iter().enumerate() {
        from_vertex[w.src].push(i);
        into_vertex[w.tgt(&quiver)].push(i);
    }

    let fingerprint = content_fingerprint(&quiver, field, &relations);
    let alg = Algebra {
        quiver,
        field,
        relations,
        basis,
        cap,
        word_index,
        table,
        from_vertex,
        into_vertex,
        fingerprint,
        op_cache: OnceLock::new(),
    };
    alg.check_associativity()?;
    Ok(alg)
}

impl Algebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Basis index of the trivial path at v.
    pub fn trivial_idx(&self, v: usize) -> usize {
        v
    }

    /// Basis index of the single-arrow word for arrow a.
    pub fn arrow_idx(&self, a: usize) -> usize {
        self.num_vertices() + a
    }

    pub fn word_index(&self, w: &PathWord) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    /// Basis words with the given source, ascending in the word order.
    pub fn basis_from(&self, v: usize) -> &[usize] {
        &self.from_vertex[v]
    }

    /// Basis words with the given target, ascending in the word order.
    pub fn basis_into(&self, v: usize) -> &[usize] {
        &self.into_vertex[v]
    }

    /// Product of basis words: first `first`, then `later` (printed
    /// later*first). Empty slice when the endpoints do not meet.
    pub fn compose_basis(&self, first: usize, later: usize) -> &[(Scalar, usize)] {
        &self.table[first * self.dim() + later]
    }

    /// Product of general elements given as coefficient vectors over the
    /// basis; x is applied first.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        let mut out = vec![self.field.zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (c, k) in self.compose_basis(i, j) {
                    out[*k] = out[*k].add(&xi.mul(yj).mul(c));
                }
            }
        }
        out
    }

    fn mul_terms(&self, terms: &[(Scalar, usize)], later: usize) -> Vec<(Scalar, usize)> {
        let mut acc: Vec<(Scalar, usize)> = Vec::new();
        for (c, m) in terms {
            for (d, k) in self.compose_basis(*m, later) {
                acc.push((c.mul(d), *k));
            }
        }
        acc.sort_by_key(|&(_, k)| k);
        let mut merged: Vec<(Scalar, usize)> = Vec::new();
        for (c, k) in acc {
            match merged.last_mut() {
                Some((mc, mk)) if *mk == k => *mc = mc.add(&c),
                _ => merged.push((c, k)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        merged
    }

    fn check_associativity(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.compose_basis(i, j);
                if ij.is_empty() && self.basis[i].tgt(&self.quiver) != self.basis[j].src
                {
                    continue;
                }
                for k in 0..dim {
                    let left = self.mul_terms(ij, k);
                    let jk = self.compose_basis(j, k).to_vec();
                    let mut right: Vec<(Scalar, usize)> = Vec::new();
                    for (c, m) in &jk {
                        for (d, t) in self.compose_basis(i, *m) {
                            right.push((c.mul(d), *t));
                        }
                    }
                    right.sort_by_key(|&(_, t)| t);
                    let mut rm: Vec<(Scalar, usize)> = Vec::new();
                    for (c, t) in right {
                        match rm.last_mut() {
                            Some((mc, mt)) if *mt == t => *mc = mc.add(&c),
                            _ => rm.push((c, t)),
                        }
                    }
                    rm.retain(|(c, _)| !c.is_zero());
                    if left != rm {
                        return Err(Error::Internal(format!(
                            "multiplication is not associative on basis triple \
                             ({i},{j},{k}); the rewriting system is not confluent"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra: reversed quiver, every relation word reversed.
    /// Built once and cached; the opposite of the opposite has identical
    /// content to the original.
    pub fn op(&self) -> Result<Arc<Algebra>> {
        if let Some(a) = self.op_cache.get() {
            return Ok(a.clone());
        }
        let opq = self.quiver.opposite();
        let rels: Vec<Relation> = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, w)| {
                        let mut arrows = w.arrows.clone();
                        arrows.reverse();
                        (c.clone(), PathWord { src: w.tgt(&self.quiver), arrows })
                    })
                    .collect(),
            })
            .collect();
        let op = Arc::new(build_algebra(opq, self.field, rels, self.cap)?);
        let _ = self.op_cache.set(op);
        Ok(self.op_cache.get().expect("just set").clone())
    }

    /// Quotient by the two-sided ideal generated by the vertex idempotent e:
    /// vertices in e disappear, arrows touching them disappear, and relation
    /// terms using a removed arrow are dropped (they land in the ideal).
    /// What remains is a presentation of the quotient on the smaller quiver.
    pub fn quotient_by_idempotent_ideal(
        &self,
        e: &VertexIdempotent,
    ) -> Result<IdealQuotient> {
        let q = &self.quiver;
        let mut vertex_map = vec![None; q.num_vertices()];
        let mut vertices = Vec::new();
        for v in 0..q.num_vertices() {
            if !e.contains(v) {
                vertex_map[v] = Some(vertices.len());
                vertices.push(q.vertices[v].clone());
            }
        }
        let mut arrow_map = vec![None; q.arrows.len()];
        let mut arrows = Vec::new();
        for (i, a) in q.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (vertex_map[a.src], vertex_map[a.tgt]) {
                arrow_map[i] = Some(arrows.len());
                arrows.push(crate::quiver::Arrow { name: a.name.clone(), src: s, tgt: t });
            }
        }
        let new_quiver = Quiver { vertices, arrows };
        let mut relations = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for (c, w) in &r.terms {
                let mapped: Option<Vec<usize>> =
                    w.arrows.iter().map(|&a| arrow_map[a]).collect();
                if let Some(arrows) = mapped {
                    let src = vertex_map[w.src].expect("surviving arrows imply surviving source");
                    terms.push((c.clone(), PathWord { src, arrows }));
                }
            }
            if !terms.is_empty() && !Poly::new(terms.clone()).is_zero() {
                relations.push(Relation { terms });
            }
        }
        let algebra = Arc::new(build_algebra(new_quiver, self.field, relations, self.cap)?);
        Ok(IdealQuotient { algebra, vertex_map, arrow_map })
    }
}

/// Result of quotienting by an idempotent ideal, with the vertex and arrow
/// correspondences back into the original quiver.
pub struct IdealQuotient {
    pub algebra: Arc<Algebra>,
    pub vertex_map: Vec<Option<usize>>,
    pub arrow_map: Vec<Option<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn aus2() -> Algebra {
        // 1 -a-> 2 -b-> 3 with b*a = 0.
        let q = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 2 },
            ],
        };
        let f = Field::Rationals;
        let rel = Relation {
            terms: vec![(f.one(), PathWord::from_arrows(&q, vec![0, 1]))],
        };
        build_algebra(q, f, vec![rel], DEFAULT_WORD_CAP).unwrap()
    }

    fn pi3() -> Algebra {
        // Preprojective algebra of 1 - 2 - 3.
        let q = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 2 },
                Arrow { name: "a~".into(), src: 1, tgt: 0 },
                Arrow { name: "b~".into(), src: 2, tgt: 1 },
            ],
        };
        let f = Field::Rationals;
        let one = f.one();
        let neg = f.from_i64(-1);
        let rels = vec![
            Relation { terms: vec![(one.clone(), PathWord::from_arrows(&q, vec![0, 2]))] },
            Relation {
                terms: vec![
                    (one.clone(), PathWord::from_arrows(&q, vec![2, 0])),
                    (neg, PathWord::from_arrows(&q, vec![1, 3])),
                ],
            },
            Relation { terms: vec![(one, PathWord::from_arrows(&q, vec![3, 1]))] },
        ];
        build_algebra(q, f, rels, DEFAULT_WORD_CAP).unwrap()
    }

    #[test]
    fn basis_layout_and_products() {
        let a = aus2();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.trivial_idx(1), 1);
        assert_eq!(a.basis[a.arrow_idx(0)].arrows, vec![0]);
        // b after a is the zero product; e_1 after a is a itself... applied
        // the other way: a after e_1.
        assert!(a.compose_basis(a.arrow_idx(0), a.arrow_idx(1)).is_empty()
            || a.compose_basis(a.arrow_idx(0), a.arrow_idx(1)).iter().all(|(c, _)| c.is_zero()));
        let e1_then_a = a.compose_basis(a.trivial_idx(0), a.arrow_idx(0));
        assert_eq!(e1_then_a, &[(Field::Rationals.one(), a.arrow_idx(0))]);
    }

    #[test]
    fn preprojective_dimension_and_quotient() {
        let p = pi3();
        assert_eq!(p.dim(), 10);
        // Killing the idempotent at the end vertex 3 leaves the smaller
        // preprojective algebra on 1 - 2, of dimension 4.
        let e = VertexIdempotent::from_names(&p.quiver, &["3"]).unwrap();
        let quo = p.quotient_by_idempotent_ideal(&e).unwrap();
        assert_eq!(quo.algebra.dim(), 4);
        assert_eq!(quo.algebra.quiver.vertices, vec!["1", "2"]);
        assert_eq!(quo.algebra.quiver.arrows.len(), 2);
        assert_eq!(quo.algebra.relations.len(), 2);
    }

    #[test]
    fn quotient_by_middle_vertex_splits() {
        let a = aus2();
        let e = VertexIdempotent::from_names(&a.quiver, &["2"]).unwrap();
        let quo = a.quotient_by_idempotent_ideal(&e).unwrap();
        assert_eq!(quo.algebra.dim(), 2);
        assert!(quo.algebra.quiver.arrows.is_empty());
    }

    #[test]
    fn quotient_by_empty_idempotent_is_identity() {
        let a = aus2();
        let e = VertexIdempotent::new(&a.quiver, vec![]).unwrap();
        let quo = a.quotient_by_idempotent_ideal(&e).unwrap();
        assert_eq!(quo.algebra.fingerprint(), a.fingerprint());
    }

    #[test]
    fn opposite_is_content_involutive() {
        let p = pi3();
        let op = p.op().unwrap();
        assert_eq!(op.dim(), 10);
        assert_ne!(op.fingerprint(), p.fingerprint());
        let opop = op.op().unwrap();
        assert_eq!(opop.fingerprint(), p.fingerprint());
        assert_eq!(opop.quiver, p.quiver);
    }

    #[test]
    fn rejects_inadmissible_relations() {
        let q = Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow { name: "a".into(), src: 0, tgt: 1 }],
        };
        let f = Field::Rationals;
        let rel = Relation {
            terms: vec![(f.one(), PathWord::from_arrows(&q, vec![0]))],
        };
        match build_algebra(q, f, vec![rel], DEFAULT_WORD_CAP) {
            Err(Error::Input(_)) => {}
            other => panic!("expected input error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_mixed_endpoints() {
        let q = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 2 },
                Arrow { name: "c".into(), src: 1, tgt: 0 },
            ],
        };
        let f = Field::Rationals;
        let rel = Relation {
            terms: vec![
                (f.one(), PathWord::from_arrows(&q, vec![0, 1])),
                (f.one(), PathWord::from_arrows(&q, vec![0, 2])),
            ],
        };
        match build_algebra(q, f, vec![rel], DEFAULT_WORD_CAP) {
            Err(Error::Input(_)) => {}
            other => panic!("expected input error, got {other:?}"),
        }
    }
}
