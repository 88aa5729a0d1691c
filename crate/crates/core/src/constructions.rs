//! Generators for the algebras the project works with: the subset-move
//! construction, preprojective algebras of type A, and the four packaged
//! fixtures with their distinguished idempotents and module collections.

use crate::algebra::{
    build_algebra, Algebra, IdealQuotient, Relation, VertexIdempotent,
    DEFAULT_WORD_CAP,
};
use crate::error::{Error, Result};
use crate::homology::translate_closure;
use crate::quiver::{Arrow, PathWord, Quiver};
use crate::rep::Representation;
use crate::scalar::Field;
use crate::textfmt::build_from_text;
use std::collections::HashMap;
use std::sync::Arc;

/// A family of (d+1)-subsets of {1,...,n}, the vertex data for the subset
/// algebra. With `cyclic` set, successor arithmetic wraps n back to 1.
#[derive(Debug, Clone)]
pub struct SubsetCollection {
    pub n: usize,
    pub d: usize,
    pub sets: Vec<Vec<usize>>,
    pub cyclic: bool,
}

impl SubsetCollection {
    pub fn new(
        n: usize,
        d: usize,
        sets: Vec<Vec<usize>>,
        cyclic: bool,
    ) -> Result<SubsetCollection> {
        let mut seen = Vec::new();
        let mut sorted_sets = Vec::with_capacity(sets.len());
        for mut s in sets {
            s.sort_unstable();
            if s.len() != d + 1 {
                return Err(Error::Input(format!(
                    "subset {s:?} does not have {} elements",
                    d + 1
                )));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Input(format!(
                    "subset {s:?} has a repeated element"
                )));
            }
            if s.iter().any(|&x| x < 1 || x > n) {
                return Err(Error::Input(format!(
                    "subset {s:?} leaves the ground set 1..{n}"
                )));
            }
            if seen.contains(&s) {
                return Err(Error::Input(format!("duplicate subset {s:?}")));
            }
            seen.push(s.clone());
            sorted_sets.push(s);
        }
        Ok(SubsetCollection { n, d, sets: sorted_sets, cyclic })
    }

    fn successor(&self, i: usize) -> Option<usize> {
        if self.cyclic {
            Some(i % self.n + 1)
        } else if i + 1 <= self.n {
            Some(i + 1)
        } else {
            None
        }
    }

    /// Replace i by its successor; None if the successor leaves the ground
    /// set, already occurs, or equals i itself.
    fn shift(&self, set: &[usize], i: usize) -> Option<Vec<usize>> {
        let s = self.successor(i)?;
        if s == i || set.contains(&s) {
            return None;
        }
        let mut out: Vec<usize> =
            set.iter().copied().filter(|&x| x != i).collect();
        out.push(s);
        out.sort_unstable();
        Some(out)
    }
}

/// Vertex label for a subset: digits concatenated while the ground set is
/// single-digit, dot-separated otherwise.
pub fn subset_label(set: &[usize], n: usize) -> String {
    if n <= 9 {
        set.iter().map(|x| x.to_string()).collect()
    } else {
        set.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// The bound quiver algebra of a subset collection: one arrow per
/// single-element successor move between members, and for every member and
/// every pair of its elements the two move orders agree, a composite being
/// zero whenever its intermediate or final subset is absent.
pub fn subset_algebra(
    c: &SubsetCollection,
    field: Field,
) -> Result<Algebra> {
    let index: HashMap<&[usize], usize> = c
        .sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let vertices: Vec<String> =
        c.sets.iter().map(|s| subset_label(s, c.n)).collect();

    let mut arrows = Vec::new();
    // arrow_of[(vertex, element)] -> arrow index
    let mut arrow_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (vi, set) in c.sets.iter().enumerate() {
        for &i in set {
            let shifted = match c.shift(set, i) {
                Some(t) => t,
                None => continue,
            };
            let ti = match index.get(shifted.as_slice()) {
                Some(&t) => t,
                None => continue,
            };
            arrow_of.insert((vi, i), arrows.len());
            arrows.push(Arrow {
                name: format!("a{}_{}", i, vertices[vi]),
                src: vi,
                tgt: ti,
            });
        }
    }
    let quiver = Quiver { vertices, arrows };

    // A composite of two moves, as (first arrow, second arrow), or None if
    // either arrow is missing.
    let two_step = |vi: usize, set: &[usize], first: usize, second: usize| {
        let a1 = *arrow_of.get(&(vi, first))?;
        let mid = c.shift(set, first)?;
        let mi = *index.get(mid.as_slice())?;
        let a2 = *arrow_of.get(&(mi, second))?;
        Some((a1, a2))
    };

    let mut relations = Vec::new();
    for (vi, set) in c.sets.iter().enumerate() {
        for (pi, &i) in set.iter().enumerate() {
            for &j in &set[pi + 1..] {
                let via_i = two_step(vi, set, i, j);
                let via_j = two_step(vi, set, j, i);
                let word = |(a1, a2): (usize, usize)| PathWord {
                    src: vi,
                    arrows: vec![a1, a2],
                };
                match (via_i, via_j) {
                    (Some(p), Some(q)) => {
                        debug_assert_eq!(
                            quiver.arrows[p.1].tgt,
                            quiver.arrows[q.1].tgt
                        );
                        relations.push(Relation {
                            terms: vec![
                                (field.one(), word(p)),
                                (field.from_i64(-1), word(q)),
                            ],
                        });
                    }
                    (Some(p), None) => relations.push(Relation {
                        terms: vec![(field.one(), word(p))],
                    }),
                    (None, Some(q)) => relations.push(Relation {
                        terms: vec![(field.one(), word(q))],
                    }),
                    (None, None) => {}
                }
            }
        }
    }
    build_algebra(quiver, field, relations, DEFAULT_WORD_CAP)
}

/// Strict interleaving i_1 < j_1 < i_2 < ... < i_l < j_l of two equal-size
/// sorted subsets.
pub fn is_intertwining(i_set: &[usize], j_set: &[usize]) -> Result<bool> {
    if i_set.len() != j_set.len() {
        return Err(Error::Input(format!(
            "cannot intertwine sets of sizes {} and {}",
            i_set.len(),
            j_set.len()
        )));
    }
    let l = i_set.len();
    if l == 0 {
        return Ok(false);
    }
    for k in 0..l {
        if i_set[k] >= j_set[k] {
            return Ok(false);
        }
        if k + 1 < l && j_set[k] >= i_set[k + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Do there exist s, t, u, v in cyclic order around {1..n} with s, u in
/// I minus J and t, v in J minus I? Decided by exhausting all quadruples.
pub fn is_crossing(i_set: &[usize], j_set: &[usize], n: usize) -> bool {
    let only_i: Vec<usize> =
        i_set.iter().copied().filter(|x| !j_set.contains(x)).collect();
    let only_j: Vec<usize> =
        j_set.iter().copied().filter(|x| !i_set.contains(x)).collect();
    let gap = |a: usize, b: usize| (b + n - a) % n;
    for &s in &only_i {
        for &t in &only_j {
            for &u in &only_i {
                for &v in &only_j {
                    let (gt, gu, gv) = (gap(s, t), gap(s, u), gap(s, v));
                    if gt > 0 && gt < gu && gu < gv {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Preprojective algebra of linear type A: the doubled quiver with the
/// per-vertex loop relations.
#[allow(non_snake_case)]
pub fn preprojective_algebra_A(rank: usize, field: Field) -> Result<Algebra> {
    assert!(rank >= 1);
    let vertices: Vec<String> = (1..=rank).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for i in 1..rank {
        arrows.push(Arrow { name: format!("a{i}"), src: i - 1, tgt: i });
    }
    for i in 1..rank {
        arrows.push(Arrow { name: format!("b{i}"), src: i, tgt: i - 1 });
    }
    let fwd = |i: usize| i - 1; // arrow a{i}, 1-based i
    let bwd = |i: usize| rank - 1 + i - 1; // arrow b{i}
    let mut relations = Vec::new();
    for v in 1..=rank {
        let out_loop = (v < rank).then(|| PathWord {
            src: v - 1,
            arrows: vec![fwd(v), bwd(v)],
        });
        let in_loop = (v > 1).then(|| PathWord {
            src: v - 1,
            arrows: vec![bwd(v - 1), fwd(v - 1)],
        });
        let rel = match (in_loop, out_loop) {
            (Some(w_in), Some(w_out)) => Relation {
                terms: vec![
                    (field.one(), w_in),
                    (field.from_i64(-1), w_out),
                ],
            },
            (Some(w), None) | (None, Some(w)) => {
                Relation { terms: vec![(field.one(), w)] }
            }
            (None, None) => continue,
        };
        relations.push(rel);
    }
    let quiver = Quiver { vertices, arrows };
    build_algebra(quiver, field, relations, DEFAULT_WORD_CAP)
}

/// Undirected connected components of a quiver's underlying graph, each
/// sorted, listed by smallest member.
pub fn quiver_components(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.num_vertices();
    let mut comp: Vec<Option<usize>> = vec![None; n];
    let mut components = Vec::new();
    for start in 0..n {
        if comp[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = Some(id);
        while let Some(v) = stack.pop() {
            members.push(v);
            for a in &q.arrows {
                for (x, y) in [(a.src, a.tgt), (a.tgt, a.src)] {
                    if x == v && comp[y].is_none() {
                        comp[y] = Some(id);
                        stack.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// A packaged example: the algebra, its distinguished idempotent, the
/// quotient by that idempotent, and (pre)cluster-tilting collections on
/// both sides.
pub struct Fixture {
    pub name: &'static str,
    pub algebra: Arc<Algebra>,
    pub idempotent: VertexIdempotent,
    pub quotient: IdealQuotient,
    /// Collection in mod(A); 2-precluster-tilting for every fixture.
    pub coll_ambient: Vec<Representation>,
    /// Collection in mod(A/<e>); 2-precluster-tilting there.
    pub coll_quotient: Vec<Representation>,
}

pub const FIXTURE_NAMES: [&str; 4] = ["aus2", "pi3", "hnak", "boundary"];

pub fn fixture_text(name: &str) -> Result<&'static str> {
    match name {
        "aus2" => Ok(include_str!("../../../fixtures/aus2.alg")),
        "pi3" => Ok(include_str!("../../../fixtures/pi3.alg")),
        "hnak" => Ok(include_str!("../../../fixtures/hnak.alg")),
        "boundary" => Ok(include_str!("../../../fixtures/boundary.alg")),
        other => Err(Error::Input(format!("unknown fixture '{other}'"))),
    }
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let (static_name, e_vertices): (&'static str, &[&str]) = match name {
        "aus2" => ("aus2", &["2"]),
        "pi3" => ("pi3", &["2"]),
        "hnak" => ("hnak", &["04"]),
        "boundary" => {
            ("boundary", &["125", "236", "145", "367", "147"])
        }
        other => return Err(Error::Input(format!("unknown fixture '{other}'"))),
    };
    let algebra = Arc::new(build_from_text(fixture_text(name)?, DEFAULT_WORD_CAP)?);
    let idempotent = VertexIdempotent::from_names(&algebra.quiver, e_vertices)?;
    let quotient = algebra.quotient_by_idempotent_ideal(&idempotent)?;
    let coll_quotient = translate_closure(&quotient.algebra, 2)?;

    let coll_ambient = match static_name {
        // The paper's lists: the two outer simples and the projectives.
        "aus2" | "pi3" => {
            let s1 = Representation::simple(&algebra, 0);
            let s3 = Representation::simple(&algebra, 2);
            let mut coll = vec![s1, s3];
            for v in 0..algebra.num_vertices() {
                coll.push(Representation::projective(&algebra, v));
            }
            crate::decompose::dedupe(coll)?
        }
        "hnak" => translate_closure(&algebra, 2)?,
        // Lift the quotient collection and adjoin all projectives and
        // injectives.
        "boundary" => {
            let mut coll = Vec::new();
            for m in &coll_quotient {
                coll.push(crate::rep::inflate(&algebra, &quotient, m)?);
            }
            for v in 0..algebra.num_vertices() {
                coll.push(Representation::projective(&algebra, v));
                coll.push(Representation::injective(&algebra, v));
            }
            crate::decompose::dedupe(coll)?
        }
        _ => unreachable!(),
    };
    Ok(Fixture {
        name: static_name,
        algebra,
        idempotent,
        quotient,
        coll_ambient,
        coll_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{inj_dim, proj_dim, HomologicalDim};

    fn coll(
        n: usize,
        sets: &[&[usize]],
        cyclic: bool,
    ) -> SubsetCollection {
        SubsetCollection::new(
            n,
            sets[0].len() - 1,
            sets.iter().map(|s| s.to_vec()).collect(),
            cyclic,
        )
        .unwrap()
    }

    #[test]
    fn singleton_collection_is_one_point() {
        let c = coll(3, &[&[1, 2]], false);
        let a = subset_algebra(&c, Field::Rationals).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.quiver.arrows.is_empty());
    }

    #[test]
    fn chain_with_missing_branch_gets_zero_relation() {
        let c = coll(6, &[&[1, 3, 5], &[1, 3, 6], &[1, 4, 6]], false);
        let a = subset_algebra(&c, Field::Rationals).unwrap();
        assert_eq!(a.quiver.vertices, vec!["135", "136", "146"]);
        assert_eq!(a.quiver.arrows.len(), 2);
        assert_eq!(a.relations.len(), 1);
        assert_eq!(a.relations[0].terms.len(), 1);
        // three trivial paths + two arrows, composite dead
        assert_eq!(a.dim(), 5);
    }

    #[test]
    fn square_gets_commutativity_relation() {
        let c = coll(
            6,
            &[&[1, 3, 5], &[1, 3, 6], &[1, 4, 6], &[1, 4, 5]],
            false,
        );
        let a = subset_algebra(&c, Field::Rationals).unwrap();
        assert_eq!(a.quiver.arrows.len(), 4);
        let commuting: Vec<_> =
            a.relations.iter().filter(|r| r.terms.len() == 2).collect();
        assert_eq!(commuting.len(), 1);
        // 4 vertices + 4 arrows + one length-2 class
        assert_eq!(a.dim(), 9);
    }

    #[test]
    fn intertwining_matches_the_chain() {
        assert!(is_intertwining(&[1, 3], &[2, 4]).unwrap());
        assert!(!is_intertwining(&[1, 3], &[1, 3]).unwrap());
        assert!(!is_intertwining(&[1, 2], &[3, 4]).unwrap());
        assert!(is_intertwining(&[2, 4], &[3, 5]).unwrap());
        assert!(is_intertwining(&[1], &[2]).unwrap());
        assert!(is_intertwining(&[1, 3, 5], &[2, 4, 6]).unwrap());
        assert!(!is_intertwining(&[2, 4], &[1, 3]).unwrap());
        assert!(is_intertwining(&[1, 4], &[2, 6]).unwrap());
        assert!(!is_intertwining(&[1, 4], &[2, 3]).unwrap());
        assert!(is_intertwining(&[1, 2], &[2, 3]).is_ok());
        assert!(is_intertwining(&[1, 2], &[3]).is_err());
    }

    #[test]
    fn crossing_is_symmetric_and_matches_quadruples() {
        assert!(!is_crossing(&[1, 3], &[1, 3], 4));
        assert!(is_crossing(&[1, 3], &[2, 4], 4));
        assert!(is_crossing(&[2, 4], &[1, 3], 4));
        assert!(!is_crossing(&[1, 2], &[2, 3], 4));
        assert!(!is_crossing(&[1, 2], &[3, 4], 6));
        for i in 0..16u32 {
            for j in 0..16u32 {
                let set = |bits: u32| -> Vec<usize> {
                    (1..=4).filter(|k| bits & (1 << (k - 1)) != 0).collect()
                };
                assert_eq!(
                    is_crossing(&set(i), &set(j), 4),
                    is_crossing(&set(j), &set(i), 4),
                );
            }
        }
    }

    #[test]
    fn preprojective_dimensions() {
        assert_eq!(
            preprojective_algebra_A(1, Field::Rationals).unwrap().dim(),
            1
        );
        assert_eq!(
            preprojective_algebra_A(2, Field::Rationals).unwrap().dim(),
            4
        );
        assert_eq!(
            preprojective_algebra_A(3, Field::Rationals).unwrap().dim(),
            10
        );
    }

    #[test]
    fn pi3_fixture_file_matches_generator() {
        let from_file =
            build_from_text(fixture_text("pi3").unwrap(), DEFAULT_WORD_CAP)
                .unwrap();
        let generated =
            preprojective_algebra_A(3, Field::Rationals).unwrap();
        assert_eq!(from_file.fingerprint(), generated.fingerprint());
    }

    #[test]
    fn fixture_smoke() {
        let f = fixture("aus2").unwrap();
        assert_eq!(f.algebra.dim(), 5);
        assert_eq!(f.quotient.algebra.dim(), 2);
        assert_eq!(f.coll_ambient.len(), 4);
        assert_eq!(f.coll_quotient.len(), 2);
        let f = fixture("pi3").unwrap();
        assert_eq!(f.algebra.dim(), 10);
        assert_eq!(f.coll_ambient.len(), 5);
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn hnak_outer_simple_has_dimension_one_both_ways() {
        let f = fixture("hnak").unwrap();
        let v04 = f.algebra.quiver.vertex_index("04").unwrap();
        let s = Representation::simple(&f.algebra, v04);
        assert_eq!(proj_dim(&s, 16).unwrap(), HomologicalDim::Finite(1));
        assert_eq!(inj_dim(&s, 16).unwrap(), HomologicalDim::Finite(1));
    }

    #[test]
    fn boundary_quotient_splits_into_named_blocks() {
        let f = fixture("boundary").unwrap();
        let q = &f.quotient.algebra.quiver;
        let mut comps: Vec<Vec<String>> = quiver_components(q)
            .into_iter()
            .map(|c| c.into_iter().map(|v| q.vertices[v].clone()).collect())
            .collect();
        comps.sort_by_key(|c: &Vec<String>| (usize::MAX - c.len(), c[0].clone()));
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], vec!["135", "136", "146"]);
        assert_eq!(comps[1].len(), 1);
        assert_eq!(comps[2].len(), 1);
        let single: Vec<&str> =
            comps[1..].iter().map(|c| c[0].as_str()).collect();
        assert!(single.contains(&"256") && single.contains(&"347"));
    }
}
