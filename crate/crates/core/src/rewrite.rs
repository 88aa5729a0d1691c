//! Rewriting of path words modulo the defining relations.
//!
//! Relations are oriented into rules "largest word -> combination of smaller
//! words" under the word order from `quiver` (length, then arrow sequence,
//! then source). The initial rules are completed by resolving overlaps until
//! every critical pair reduces to zero, so every element of the quotient has
//! a unique normal form supported on irreducible words.
//!
//! Termination is guaranteed by the word-length cap: if completion derives a
//! rule longer than the cap, or an irreducible word longer than the cap
//! exists, the algebra is reported as not finite-dimensional within the cap
//! rather than looping. The cap is configurable by the caller.
//!
//! Confluence of the completed system is certified downstream: after the
//! multiplication table is built, associativity is checked on every basis
//! triple, which fails exactly when some overlap was left unresolved.

use crate::error::{Error, Result};
use crate::quiver::{PathWord, Quiver};
use crate::scalar::{Field, Scalar};
use std::collections::VecDeque;

/// Linear combination of path words, kept sorted with the largest word
/// first, coefficients nonzero, words distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub terms: Vec<(Scalar, PathWord)>,
}

impl Poly {
    pub fn new(terms: Vec<(Scalar, PathWord)>) -> Poly {
        let mut terms = terms;
        terms.sort_by(|a, b| b.1.cmp_words(&a.1));
        let mut merged: Vec<(Scalar, PathWord)> = Vec::with_capacity(terms.len());
        for (c, w) in terms {
            match merged.last_mut() {
                Some((mc, mw)) if *mw == w => *mc = mc.add(&c),
                _ => merged.push((c, w)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Poly { terms: merged }
    }

    pub fn single(c: Scalar, w: PathWord) -> Poly {
        Poly::new(vec![(c, w)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Poly::new(terms)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|(c, w)| (c.neg(), w.clone())));
        Poly::new(terms)
    }

}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: PathWord,
    pub rhs: Poly,
}

impl Rule {
    fn as_poly(&self, field: Field) -> Poly {
        Poly::single(field.one(), self.lhs.clone()).sub(&self.rhs)
    }
}

pub struct Rewriter {
    pub quiver: Quiver,
    pub field: Field,
    pub rules: Vec<Rule>,
    pub cap: usize,
}

/// Replace the arrows [pos, pos+len) of `word` by `repl`. Both segments have
/// the same endpoints, so the result is again a path with the same source.
fn splice(word: &PathWord, pos: usize, len: usize, repl: &PathWord) -> PathWord {
    let mut arrows = Vec::with_capacity(word.arrows.len() - len + repl.arrows.len());
    arrows.extend_from_slice(&word.arrows[..pos]);
    arrows.extend_from_slice(&repl.arrows);
    arrows.extend_from_slice(&word.arrows[pos + len..]);
    PathWord { src: word.src, arrows }
}

impl Rewriter {
    /// Leftmost match of any rule inside the word; ties at the same position
    /// broken by rule index.
    fn find_match(&self, word: &PathWord) -> Option<(usize, usize)> {
        for pos in 0..word.arrows.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.arrows.len();
                if pos + l <= word.arrows.len()
                    && word.arrows[pos..pos + l] == rule.lhs.arrows[..]
                {
                    return Some((ri, pos));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, word: &PathWord) -> bool {
        self.find_match(word).is_none()
    }

    /// Normal form: repeatedly rewrite the largest reducible term. Each step
    /// replaces a word by strictly smaller words, so this terminates.
    pub fn reduce(&self, mut p: Poly) -> Poly {
        loop {
            let hit = p
                .terms
                .iter()
                .enumerate()
                .find_map(|(ti, (_, w))| self.find_match(w).map(|(ri, pos)| (ti, ri, pos)));
            let Some((ti, ri, pos)) = hit else { return p };
            let (coeff, word) = p.terms.remove(ti);
            let rule = &self.rules[ri];
            let expansion: Vec<(Scalar, PathWord)> = rule
                .rhs
                .terms
                .iter()
                .map(|(c, rw)| (coeff.mul(c), splice(&word, pos, rule.lhs.len(), rw)))
                .collect();
            p = p.add(&Poly::new(expansion));
        }
    }

    pub fn reduce_word(&self, w: &PathWord) -> Poly {
        self.reduce(Poly::single(self.field.one(), w.clone()))
    }

    /// Reduce, then orient the remainder into a rule with monic leading word.
    fn orient(&self, p: Poly) -> Result<Option<Rule>> {
        let p = self.reduce(p);
        if p.is_zero() {
            return Ok(None);
        }
        let (c, lhs) = p.terms[0].clone();
        if lhs.is_empty() {
            return Err(Error::Input(
                "relations force a trivial path to vanish".into(),
            ));
        }
        if lhs.len() > self.cap {
            return Err(Error::NotFiniteDimensional { cap: self.cap });
        }
        let neg_inv = c.inverse().neg();
        let rhs = Poly::new(
            p.terms[1..]
                .iter()
                .map(|(a, w)| (a.mul(&neg_inv), w.clone()))
                .collect(),
        );
        Ok(Some(Rule { lhs, rhs }))
    }

    /// Critical-pair differences from the proper overlaps where a suffix of
    /// `a.lhs` equals a prefix of `b.lhs`. Containments need no pairs here:
    /// a new rule's left side is always in normal form, and existing rules
    /// whose left side it divides are retired when the rule is added.
    fn overlap_diffs(&self, a: &Rule, b: &Rule) -> Vec<Poly> {
        let la = &a.lhs.arrows;
        let lb = &b.lhs.arrows;
        let mut out = Vec::new();
        let max_o = la.len().min(lb.len());
        for o in 1..max_o {
            if la[la.len() - o..] != lb[..o] {
                continue;
            }
            let mut sup_arrows = la.clone();
            sup_arrows.extend_from_slice(&lb[o..]);
            let sup = PathWord { src: a.lhs.src, arrows: sup_arrows };
            let via_a = Poly::new(
                a.rhs
                    .terms
                    .iter()
                    .map(|(c, w)| (c.clone(), splice(&sup, 0, la.len(), w)))
                    .collect(),
            );
            let via_b = Poly::new(
                b.rhs
                    .terms
                    .iter()
                    .map(|(c, w)| (c.clone(), splice(&sup, la.len() - o, lb.len(), w)))
                    .collect(),
            );
            out.push(via_a.sub(&via_b));
        }
        out
    }

    /// All irreducible words, sorted in the word order. Extending an
    /// irreducible word by one arrow can only become reducible at a suffix,
    /// and prefixes of irreducible words are irreducible, so breadth-first
    /// extension is complete and stops at the first empty length level.
    pub fn irreducible_words(&self) -> Result<Vec<PathWord>> {
        let mut basis: Vec<PathWord> =
            (0..self.quiver.num_vertices()).map(PathWord::trivial).collect();
        let mut frontier = basis.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for a in self.quiver.arrows_from(w.tgt(&self.quiver)) {
                    let ext = w.then(&self.quiver, a);
                    if self.is_irreducible(&ext) {
                        if ext.len() > self.cap {
                            return Err(Error::NotFiniteDimensional { cap: self.cap });
                        }
                        next.push(ext);
                    }
                }
            }
            basis.extend(next.iter().cloned());
            frontier = next;
        }
        basis.sort_by(|a, b| a.cmp_words(b));
        Ok(basis)
    }
}

/// Complete the given relations into a rewriting system. Every polynomial in
/// the queue lies in the ideal generated by the relations; processing stops
/// when all of them reduce to zero.
pub fn complete(
    quiver: &Quiver,
    field: Field,
    relations: Vec<Poly>,
    cap: usize,
) -> Result<Rewriter> {
    let mut rw =
        Rewriter { quiver: quiver.clone(), field, rules: Vec::new(), cap };
    let mut queue: VecDeque<Poly> = relations.into_iter().collect();
    while let Some(p) = queue.pop_front() {
        let Some(rule) = rw.orient(p)? else { continue };

        // Retire rules whose left side the new rule divides; their content
        // re-enters the queue and is re-oriented against the new system.
        let mut retired = Vec::new();
        let mut kept = Vec::new();
        for old in rw.rules.drain(..) {
            let ol = &old.lhs.arrows;
            let nl = &rule.lhs.arrows;
            let divides = ol.len() >= nl.len()
                && (0..=ol.len() - nl.len()).any(|p| ol[p..p + nl.len()] == nl[..]);
            if divides {
                retired.push(old);
            } else {
                kept.push(old);
            }
        }
        rw.rules = kept;
        for old in retired {
            queue.push_back(old.as_poly(field));
        }

        for other in &rw.rules {
            queue.extend(rw.overlap_diffs(&rule, other));
            queue.extend(rw.overlap_diffs(other, &rule));
        }
        queue.extend(rw.overlap_diffs(&rule, &rule));
        rw.rules.push(rule);

        // Keep right sides in normal form so reductions stay canonical.
        let snapshot: Vec<Poly> =
            rw.rules.iter().map(|r| rw.reduce(r.rhs.clone())).collect();
        for (r, rhs) in rw.rules.iter_mut().zip(snapshot) {
            r.rhs = rhs;
        }
    }
    Ok(rw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn word(q: &Quiver, arrows: Vec<usize>) -> PathWord {
        PathWord::from_arrows(q, arrows)
    }

    fn zero_rel(field: Field, w: PathWord) -> Poly {
        Poly::single(field.one(), w)
    }

    #[test]
    fn linear_a3_with_zero_relation() {
        // 1 -a-> 2 -b-> 3 with b*a = 0: basis is the three trivial paths
        // plus the two arrows.
        let q = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 2 },
            ],
        };
        let f = Field::Rationals;
        let rel = zero_rel(f, word(&q, vec![0, 1]));
        let rw = complete(&q, f, vec![rel], 30).unwrap();
        let basis = rw.irreducible_words().unwrap();
        assert_eq!(basis.len(), 5);
        assert!(rw.reduce_word(&word(&q, vec![0, 1])).is_zero());
    }

    #[test]
    fn commuting_square() {
        // 1 -a-> 2 -b-> 4 and 1 -c-> 3 -d-> 4 with b*a = d*c: dim 9.
        let q = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into(), "4".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 3 },
                Arrow { name: "c".into(), src: 0, tgt: 2 },
                Arrow { name: "d".into(), src: 2, tgt: 3 },
            ],
        };
        let f = Field::Rationals;
        let rel = Poly::new(vec![
            (f.one(), word(&q, vec![0, 1])),
            (f.from_i64(-1), word(&q, vec![2, 3])),
        ]);
        let rw = complete(&q, f, vec![rel], 30).unwrap();
        let basis = rw.irreducible_words().unwrap();
        assert_eq!(basis.len(), 9);
        // d*c rewrites onto the representative b*a.
        let nf = rw.reduce_word(&word(&q, vec![2, 3]));
        assert_eq!(nf.terms.len(), 1);
        assert_eq!(nf.terms[0].1, word(&q, vec![0, 1]));
    }

    #[test]
    fn completion_derives_length_three_rules() {
        // Preprojective relations on 1 <=> 2 <=> 3. The defining relations
        // have length two, but b~*b*a and a~*b~*b vanish only after the
        // overlap between a~*a = 0 and a*a~ = b~*b is resolved.
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
        let rels = vec![
            zero_rel(f, word(&q, vec![0, 2])),
            Poly::new(vec![
                (f.one(), word(&q, vec![2, 0])),
                (f.from_i64(-1), word(&q, vec![1, 3])),
            ]),
            zero_rel(f, word(&q, vec![3, 1])),
        ];
        let rw = complete(&q, f, rels, 30).unwrap();
        let basis = rw.irreducible_words().unwrap();
        assert_eq!(basis.len(), 10);
        // Neither length-three product is reducible by the defining
        // relations alone; both must reduce to zero after completion.
        assert!(rw.reduce_word(&word(&q, vec![0, 1, 3])).is_zero());
        assert!(rw.reduce_word(&word(&q, vec![1, 3, 2])).is_zero());
    }

    #[test]
    fn containment_retires_subsumed_rules() {
        // b*a = d*c together with d*c = 0 forces b*a = 0 as well.
        let q = Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into(), "4".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 3 },
                Arrow { name: "c".into(), src: 0, tgt: 2 },
                Arrow { name: "d".into(), src: 2, tgt: 3 },
            ],
        };
        let f = Field::Rationals;
        let rels = vec![
            Poly::new(vec![
                (f.one(), word(&q, vec![0, 1])),
                (f.from_i64(-1), word(&q, vec![2, 3])),
            ]),
            zero_rel(f, word(&q, vec![2, 3])),
        ];
        let rw = complete(&q, f, rels, 30).unwrap();
        assert!(rw.reduce_word(&word(&q, vec![0, 1])).is_zero());
        assert!(rw.reduce_word(&word(&q, vec![2, 3])).is_zero());
        assert_eq!(rw.irreducible_words().unwrap().len(), 8);
    }

    #[test]
    fn loop_without_relations_exceeds_cap() {
        let q = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
        };
        let rw = complete(&q, Field::Rationals, vec![], 10).unwrap();
        match rw.irreducible_words() {
            Err(Error::NotFiniteDimensional { cap }) => assert_eq!(cap, 10),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn nilpotent_loop_is_finite() {
        let q = Quiver {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
        };
        let f = Field::Rationals;
        let rel = zero_rel(f, word(&q, vec![0, 0, 0]));
        let rw = complete(&q, f, vec![rel], 10).unwrap();
        // Basis e, x, x^2.
        assert_eq!(rw.irreducible_words().unwrap().len(), 3);
    }
}
