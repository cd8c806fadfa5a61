//! Enumeration of the Weyl group of Sp(n) as signed permutations.

use super::Weight;

/// One Weyl group element of Sp(n): a permutation combined with per-coordinate
/// sign flips. `det` is the determinant of the corresponding orthogonal map,
/// i.e. the sign ε(w) entering alternating sums.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
    pub det: i64,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
            det: 1,
        }
    }

    /// Image of a weight: `y[i] = signs[i] * x[perm[i]]`.
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(
            self.perm
                .iter()
                .zip(&self.signs)
                .map(|(&p, &s)| s * w.0[p])
                .collect(),
        )
    }
}

/// All `2^n n!` signed permutations of `n` coordinates.
pub fn signed_permutations(n: usize) -> Vec<WeylElement> {
    let mut out = Vec::with_capacity((1usize << n) * factorial(n));
    for (perm, parity) in permutations_with_parity(n) {
        for mask in 0..(1u32 << n) {
            let mut signs = vec![1i64; n];
            let mut det = parity;
            for (i, s) in signs.iter_mut().enumerate() {
                if mask & (1 << i) != 0 {
                    *s = -1;
                    det = -det;
                }
            }
            out.push(WeylElement {
                perm: perm.clone(),
                signs,
                det,
            });
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

/// All permutations of `0..n` together with their parity, in a deterministic
/// order (lexicographic by the permutation vector).
fn permutations_with_parity(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    build(n, &mut current, &mut used, &mut out);
    out
}

fn build(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
    if current.len() == n {
        out.push((current.clone(), permutation_parity(current)));
        return;
    }
    for i in 0..n {
        if !used[i] {
            used[i] = true;
            current.push(i);
            build(n, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

fn permutation_parity(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut parity = 1i64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            parity = -parity;
        }
    }
    parity
}
