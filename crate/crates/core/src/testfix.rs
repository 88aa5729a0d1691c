//! Small algebras shared by unit tests across modules.

use crate::algebra::{build_algebra, Algebra, Relation, DEFAULT_WORD_CAP};
use crate::quiver::{Arrow, PathWord, Quiver};
use crate::scalar::Field;
use std::sync::Arc;

/// 1 -a-> 2 -b-> 3 with b*a = 0: the endomorphism algebra of the module
/// category of the two-vertex line, dimension 5, global dimension 2.
pub fn aus2() -> Arc<Algebra> {
    aus2_over(Field::Rationals)
}

pub fn aus2_over(f: Field) -> Arc<Algebra> {
    let q = Quiver {
        vertices: vec!["1".into(), "2".into(), "3".into()],
        arrows: vec![
            Arrow { name: "a".into(), src: 0, tgt: 1 },
            Arrow { name: "b".into(), src: 1, tgt: 2 },
        ],
    };
    let rel =
        Relation { terms: vec![(f.one(), PathWord::from_arrows(&q, vec![0, 1]))] };
    Arc::new(build_algebra(q, f, vec![rel], DEFAULT_WORD_CAP).unwrap())
}

/// Two isolated vertices, no arrows: the smallest semisimple example.
pub fn semisimple_two_vertices(f: Field) -> Arc<Algebra> {
    let q = Quiver {
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![],
    };
    Arc::new(build_algebra(q, f, vec![], DEFAULT_WORD_CAP).unwrap())
}

/// Preprojective algebra of the line 1 - 2 - 3, dimension 10, self-injective.
pub fn pi3() -> Arc<Algebra> {
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
    Arc::new(build_algebra(q, f, rels, DEFAULT_WORD_CAP).unwrap())
}

/// Hereditary path algebra of 1 -a-> 2 -b-> 3, dimension 6.
pub fn a3_hereditary() -> Arc<Algebra> {
    let q = Quiver {
        vertices: vec!["1".into(), "2".into(), "3".into()],
        arrows: vec![
            Arrow { name: "a".into(), src: 0, tgt: 1 },
            Arrow { name: "b".into(), src: 1, tgt: 2 },
        ],
    };
    Arc::new(build_algebra(q, Field::Rationals, vec![], DEFAULT_WORD_CAP).unwrap())
}
