//! Shared helpers for the integration suites: a deterministic generator
//! of small radical-cube-zero algebras and module-family shorthands. The
//! generator is seeded and self-contained so that the corpus never shifts
//! under toolchain or dependency upgrades.

use qtilt_core::algebra::DEFAULT_WORD_CAP;
use qtilt_core::textfmt::build_from_text;
use qtilt_core::{Algebra, Representation, VertexIdempotent};
use std::sync::Arc;

pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Text for a random bound quiver algebra on 2..=4 vertices with 1..=6
/// arrows. Every length-3 composite is a relation, so the radical cubes
/// to zero and the algebra is finite-dimensional regardless of cycles or
/// loops. Some length-2 composites are zeroed and some parallel pairs of
/// length-2 composites are set equal, to vary the relation shapes.
pub fn random_algebra_text(seed: u64) -> String {
    let mut rng = SplitMix64(seed ^ 0xa076_1d64_78bd_642f);
    let field = ["Q", "F 2", "F 3", "F 5"][rng.below(4) as usize];
    let n = 2 + rng.below(3);
    let m = 1 + rng.below(6);

    let mut text = format!("field {field}\n");
    for v in 1..=n {
        text.push_str(&format!("vertex {v}\n"));
    }
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for a in 0..m {
        let s = 1 + rng.below(n);
        let t = 1 + rng.below(n);
        src.push(s);
        tgt.push(t);
        text.push_str(&format!("arrow a{} : {s} -> {t}\n", a + 1));
    }

    let mut rels = Vec::new();
    let mut killed_pairs = Vec::new();
    let mut live_pairs = Vec::new();
    for i in 0..m as usize {
        for j in 0..m as usize {
            if tgt[i] != src[j] {
                continue;
            }
            if rng.chance(1, 3) {
                rels.push(format!("rel a{}*a{}", j + 1, i + 1));
                killed_pairs.push((i, j));
            } else {
                live_pairs.push((i, j));
            }
        }
    }
    for i in 0..m as usize {
        for j in 0..m as usize {
            for k in 0..m as usize {
                if tgt[i] == src[j] && tgt[j] == src[k] {
                    rels.push(format!("rel a{}*a{}*a{}", k + 1, j + 1, i + 1));
                }
            }
        }
    }
    for (x, p) in live_pairs.iter().enumerate() {
        for q in live_pairs.iter().skip(x + 1) {
            let same_ends = src[p.0] == src[q.0] && tgt[p.1] == tgt[q.1];
            if same_ends && p != q && rng.chance(1, 2) {
                rels.push(format!(
                    "rel a{}*a{} - a{}*a{}",
                    p.1 + 1,
                    p.0 + 1,
                    q.1 + 1,
                    q.0 + 1
                ));
            }
        }
    }
    let _ = killed_pairs;
    rels.sort();
    rels.dedup();
    for r in rels {
        text.push_str(&r);
        text.push('\n');
    }
    text
}

pub fn random_algebra(seed: u64) -> Arc<Algebra> {
    let text = random_algebra_text(seed);
    match build_from_text(&text, DEFAULT_WORD_CAP) {
        Ok(a) => Arc::new(a),
        Err(e) => panic!("seed {seed} produced an unbuildable algebra: {e}\n{text}"),
    }
}

/// A nonempty proper vertex subset, so both the quotient and the ideal
/// are nonzero.
pub fn random_proper_idempotent(
    rng: &mut SplitMix64,
    algebra: &Arc<Algebra>,
) -> VertexIdempotent {
    let n = algebra.num_vertices();
    loop {
        let mask = rng.below(1 << n);
        if mask == 0 || mask == (1 << n) - 1 {
            continue;
        }
        let vs = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        return VertexIdempotent::new(&algebra.quiver, vs).unwrap();
    }
}

pub fn simples(algebra: &Arc<Algebra>) -> Vec<Representation> {
    (0..algebra.num_vertices())
        .map(|v| Representation::simple(algebra, v))
        .collect()
}

pub fn projectives(algebra: &Arc<Algebra>) -> Vec<Representation> {
    (0..algebra.num_vertices())
        .map(|v| Representation::projective(algebra, v))
        .collect()
}

pub fn injectives(algebra: &Arc<Algebra>) -> Vec<Representation> {
    (0..algebra.num_vertices())
        .map(|v| Representation::injective(algebra, v))
        .collect()
}
