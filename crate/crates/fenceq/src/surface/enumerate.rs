use rand::seq::SliceRandom;
use rand::Rng;

use super::{Arc, PolygonTriangulation};

/// The Catalan number `C_k`.
pub fn catalan(k: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// All arcs of the `n`-gon, i.e. chords that are not sides, in canonical order.
pub fn all_arcs(n: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 2..=n {
            if !(a == 1 && b == n) {
                out.push(Arc::new(a, b));
            }
        }
    }
    out
}

fn triangulate(vs: &[usize]) -> Vec<Vec<Arc>> {
    if vs.len() < 3 {
        return vec![Vec::new()];
    }
    let last = vs.len() - 1;
    let mut out = Vec::new();
    for k in 1..last {
        let left = triangulate(&vs[..=k]);
        let right = triangulate(&vs[k..]);
        for l in &left {
            for r in &right {
                let mut d = l.clone();
                d.extend_from_slice(r);
                if k > 1 {
                    d.push(Arc::new(vs[0], vs[k]));
                }
                if k < last - 1 {
                    d.push(Arc::new(vs[k], vs[last]));
                }
                out.push(d);
            }
        }
    }
    out
}

/// Every triangulation of the `n`-gon; there are `catalan(n - 2)` of them.
pub fn all_triangulations(n: usize) -> Vec<PolygonTriangulation> {
    let vs: Vec<usize> = (1..=n).collect();
    let mut out: Vec<PolygonTriangulation> = triangulate(&vs)
        .into_iter()
        .map(|d| PolygonTriangulation::new(n, &d).expect("recursive construction is valid"))
        .collect();
    out.sort_by(|x, y| x.diagonals().cmp(y.diagonals()));
    out
}

/// Uniform random Dyck word with `m` pairs (true = open), by the cycle lemma.
fn random_dyck<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Vec<bool> {
    let mut seq: Vec<bool> = std::iter::repeat_n(true, m)
        .chain(std::iter::repeat_n(false, m + 1))
        .collect();
    seq.shuffle(rng);
    // rotate to start just after the first position of minimal prefix sum
    let mut sum = 0i64;
    let mut best = (0i64, 0usize);
    for (i, &open) in seq.iter().enumerate() {
        sum += if open { 1 } else { -1 };
        if sum < best.0 {
            best = (sum, i + 1);
        }
    }
    let len = seq.len();
    seq.rotate_left(best.1 % len);
    seq.pop();
    seq
}

fn tree_diagonals(word: &[bool], vs: &[usize], out: &mut Vec<Arc>) {
    if vs.len() < 3 {
        return;
    }
    // word = ( A ) B
    let mut depth = 0;
    let mut close = 0;
    for (i, &open) in word.iter().enumerate() {
        depth += if open { 1 } else { -1 };
        if depth == 0 {
            close = i;
            break;
        }
    }
    let left = &word[1..close];
    let right = &word[close + 1..];
    let k = left.len() / 2 + 1;
    let last = vs.len() - 1;
    if k > 1 {
        out.push(Arc::new(vs[0], vs[k]));
    }
    if k < last - 1 {
        out.push(Arc::new(vs[k], vs[last]));
    }
    tree_diagonals(left, &vs[..=k], out);
    tree_diagonals(right, &vs[k..], out);
}

/// Uniformly random triangulation of the `n`-gon, via a uniform binary tree.
pub fn random_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PolygonTriangulation {
    let word = random_dyck(n - 2, rng);
    let vs: Vec<usize> = (1..=n).collect();
    let mut diags = Vec::with_capacity(n - 3);
    tree_diagonals(&word, &vs, &mut diags);
    PolygonTriangulation::new(n, &diags).expect("tree construction is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    #[test]
    fn catalan_counts() {
        assert_eq!(catalan(7), 429);
        for n in 3..=10 {
            assert_eq!(all_triangulations(n).len() as u64, catalan(n - 2));
            assert_eq!(all_arcs(n).len(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn random_triangulations_cover_all_uniformly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen: HashMap<Vec<Arc>, usize> = HashMap::new();
        let draws = 14 * 500;
        for _ in 0..draws {
            let t = random_triangulation(6, &mut rng);
            *seen.entry(t.diagonals().to_vec()).or_default() += 1;
        }
        assert_eq!(seen.len(), 14);
        for &c in seen.values() {
            assert!((380..=620).contains(&c), "count {c}");
        }
    }
}
