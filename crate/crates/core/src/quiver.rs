//! Quivers and path words.
//!
//! Vertices and arrows are referred to by index into the quiver's
//! declaration lists; names are kept for parsing and printing only.
//!
//! Composition convention: `b * a` means "first a, then b", so a word is
//! stored in application order [first, .., last] and displayed reversed with
//! `*` between arrow names. A word of length zero is the trivial path at a
//! vertex.
//!
//! Words are ordered by (length, arrow sequence in application order, source
//! vertex). This is the order used for rewriting: any rule rewrites a word
//! to a combination of strictly smaller words, so reduction terminates.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Arrows leaving the given vertex, in declaration order.
    pub fn arrows_from(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].src == v).collect()
    }

    /// Arrows entering the given vertex, in declaration order.
    pub fn arrows_into(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].tgt == v).collect()
    }

    /// The opposite quiver: same vertices, every arrow reversed. Arrow order
    /// and names are preserved, so the double opposite is identical.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src })
                .collect(),
        }
    }
}

/// A path in the quiver: either the trivial path at a vertex, or a nonempty
/// composable sequence of arrow indices in application order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathWord {
    /// Source vertex (the vertex itself for a trivial path).
    pub src: usize,
    /// Arrow indices, first applied first. Empty for a trivial path.
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> Self {
        PathWord { src: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Self {
        assert!(!arrows.is_empty(), "use trivial() for length-zero words");
        for w in arrows.windows(2) {
            assert_eq!(
                q.arrows[w[0]].tgt,
                q.arrows[w[1]].src,
                "arrows do not compose"
            );
        }
        PathWord { src: q.arrows[arrows[0]].src, arrows }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn tgt(&self, q: &Quiver) -> usize {
        match self.arrows.last() {
            Some(&a) => q.arrows[a].tgt,
            None => self.src,
        }
    }

    /// Extend by one arrow applied after this word.
    pub fn then(&self, q: &Quiver, arrow: usize) -> PathWord {
        debug_assert_eq!(self.tgt(q), q.arrows[arrow].src);
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        PathWord { src: self.src, arrows }
    }

    /// Concatenation: first self, then later. Requires tgt(self) = src(later).
    pub fn compose(&self, q: &Quiver, later: &PathWord) -> PathWord {
        debug_assert_eq!(self.tgt(q), later.src);
        if later.is_empty() {
            return self.clone();
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(later.arrows.iter().copied());
        PathWord { src: self.src, arrows }
    }

    /// The total order words are reduced along: length first, then the arrow
    /// index sequence in application order, then the source vertex (which
    /// only matters for trivial paths).
    pub fn cmp_words(&self, other: &PathWord) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.src.cmp(&other.src))
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathWordDisplay<'a> {
        PathWordDisplay { word: self, quiver: q }
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e[{}]", self.src)
        } else {
            let names: Vec<String> =
                self.arrows.iter().rev().map(|a| format!("#{a}")).collect();
            write!(f, "{}", names.join("*"))
        }
    }
}

pub struct PathWordDisplay<'a> {
    word: &'a PathWord,
    quiver: &'a Quiver,
}

impl fmt::Display for PathWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.arrows.is_empty() {
            write!(f, "e_{}", self.quiver.vertices[self.word.src])
        } else {
            let names: Vec<&str> = self
                .word
                .arrows
                .iter()
                .rev()
                .map(|&a| self.quiver.arrows[a].name.as_str())
                .collect();
            write!(f, "{}", names.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear_a3() -> Quiver {
        Quiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), src: 0, tgt: 1 },
                Arrow { name: "b".into(), src: 1, tgt: 2 },
            ],
        }
    }

    #[test]
    fn display_reverses_application_order() {
        let q = linear_a3();
        let w = PathWord::from_arrows(&q, vec![0, 1]);
        assert_eq!(w.display(&q).to_string(), "b*a");
        assert_eq!(w.src, 0);
        assert_eq!(w.tgt(&q), 2);
        let e = PathWord::trivial(1);
        assert_eq!(e.display(&q).to_string(), "e_2");
    }

    #[test]
    fn order_is_length_then_arrows_then_source() {
        let q = linear_a3();
        let e1 = PathWord::trivial(0);
        let e2 = PathWord::trivial(1);
        let a = PathWord::from_arrows(&q, vec![0]);
        let b = PathWord::from_arrows(&q, vec![1]);
        let ba = PathWord::from_arrows(&q, vec![0, 1]);
        assert_eq!(e1.cmp_words(&e2), Ordering::Less);
        assert_eq!(e2.cmp_words(&a), Ordering::Less);
        assert_eq!(a.cmp_words(&b), Ordering::Less);
        assert_eq!(b.cmp_words(&ba), Ordering::Less);
    }

    #[test]
    fn compose_checks_endpoints() {
        let q = linear_a3();
        let a = PathWord::from_arrows(&q, vec![0]);
        let b = PathWord::from_arrows(&q, vec![1]);
        let ba = a.compose(&q, &b);
        assert_eq!(ba.arrows, vec![0, 1]);
        let e = PathWord::trivial(1);
        assert_eq!(a.compose(&q, &e), a);
    }

    #[test]
    fn opposite_is_involutive() {
        let q = linear_a3();
        let op = q.opposite();
        assert_eq!(op.arrows[0].src, 1);
        assert_eq!(op.arrows[0].tgt, 0);
        assert_eq!(op.opposite(), q);
    }
}
