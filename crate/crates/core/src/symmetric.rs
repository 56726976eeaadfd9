//! Small symmetric groups: permutations of `0..k`, partitions, hook lengths,
//! standard tableaux and Young's seminormal representations.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A permutation of `0..k` given by its images.
pub type SmallPerm = Vec<usize>;

pub fn identity(k: usize) -> SmallPerm {
    (0..k).collect()
}

/// `a ∘ b`: apply `b` first.
pub fn compose(a: &[usize], b: &[usize]) -> SmallPerm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> SmallPerm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// All permutations of `0..k` in lexicographic order.
pub fn all_perms(k: usize) -> Vec<SmallPerm> {
    let mut out = Vec::new();
    let mut cur = identity(k);
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Index lookup for [`all_perms`].
pub fn perm_index(k: usize) -> HashMap<SmallPerm, usize> {
    all_perms(k).into_iter().enumerate().map(|(i, p)| (p, i)).collect()
}

/// Writes `σ = s_{j_1} ∘ s_{j_2} ∘ ... ∘ s_{j_r}` as a reduced word, where
/// `s_j` swaps `j` and `j + 1`.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    let mut w = sigma.to_vec();
    let mut right = Vec::new();
    while let Some(j) = (0..w.len().saturating_sub(1)).find(|&j| w[j] > w[j + 1]) {
        w.swap(j, j + 1);
        right.push(j);
    }
    right.reverse();
    right
}

/// Partitions of `k` in decreasing lexicographic order.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=k.min(max)).rev() {
            cur.push(p);
            rec(k - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the irreducible representation labelled by `shape`, by the
/// hook length formula.
pub fn hook_dimension(shape: &[usize]) -> u64 {
    let k: usize = shape.iter().sum();
    let mut num: u128 = 1;
    for i in 2..=k as u128 {
        num *= i;
    }
    let mut den: u128 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
            den *= (arm + leg + 1) as u128;
        }
    }
    (num / den) as u64
}

/// A standard Young tableau stored as `cell[v] = (row, col)` for the entry
/// `v` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    cells: Vec<(usize, usize)>,
}

impl Tableau {
    fn content(&self, v: usize) -> i64 {
        let (r, c) = self.cells[v];
        c as i64 - r as i64
    }
}

pub fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    fn rec(shape: &[usize], rows: &mut Vec<usize>, cells: &mut Vec<(usize, usize)>, out: &mut Vec<Tableau>) {
        if cells.len() == shape.iter().sum::<usize>() {
            out.push(Tableau { cells: cells.clone() });
            return;
        }
        for r in 0..shape.len() {
            if rows[r] < shape[r] && (r == 0 || rows[r - 1] > rows[r]) {
                cells.push((r, rows[r]));
                rows[r] += 1;
                rec(shape, rows, cells, out);
                rows[r] -= 1;
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut vec![0; shape.len()], &mut Vec::new(), &mut out);
    out
}

pub type QMatrix = Vec<Vec<BigRational>>;

fn q_identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect()
}

fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Young's seminormal representation of one shape. Column `a` of the matrix
/// of `s_j` is the image of the basis vector of tableau `a`.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    shape: Vec<usize>,
    generators: Vec<QMatrix>,
}

impl SeminormalRep {
    pub fn new(shape: &[usize]) -> Self {
        let tabs = standard_tableaux(shape);
        let index: HashMap<Tableau, usize> = tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let k: usize = shape.iter().sum();
        let f = tabs.len();
        let mut generators = Vec::new();
        for j in 0..k.saturating_sub(1) {
            let mut m = vec![vec![BigRational::zero(); f]; f];
            for (a, t) in tabs.iter().enumerate() {
                let rho = t.content(j + 1) - t.content(j);
                m[a][a] = BigRational::new(1.into(), rho.into());
                let (r1, c1) = t.cells[j];
                let (r2, c2) = t.cells[j + 1];
                if r1 != r2 && c1 != c2 {
                    let mut swapped = t.clone();
                    swapped.cells.swap(j, j + 1);
                    let b = index[&swapped];
                    m[b][a] = if rho > 0 {
                        BigRational::one()
                    } else {
                        BigRational::one() - BigRational::new(1.into(), (rho * rho).into())
                    };
                }
            }
            generators.push(m);
        }
        SeminormalRep { shape: shape.to_vec(), generators }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(1, Vec::len)
    }

    /// Matrix of the simple transposition `s_j`.
    pub fn generator(&self, j: usize) -> &QMatrix {
        &self.generators[j]
    }

    /// Matrix of an arbitrary permutation, with `ρ(a ∘ b) = ρ(a) ρ(b)`.
    pub fn matrix(&self, sigma: &[usize]) -> QMatrix {
        reduced_word(sigma)
            .iter()
            .fold(q_identity(self.dim()), |acc, &j| q_mul(&acc, &self.generators[j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(0), vec![Vec::<usize>::new()]);
        let a = vec![1, 2, 0];
        let b = vec![1, 0, 2];
        assert_eq!(compose(&a, &b), vec![2, 1, 0]);
        assert_eq!(compose(&a, &inverse(&a)), identity(3));
    }

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for k in 0..6 {
            for p in all_perms(k) {
                let w = reduced_word(&p);
                let mut acc = identity(k);
                for &j in &w {
                    let mut s = identity(k);
                    s.swap(j, j + 1);
                    acc = compose(&acc, &s);
                }
                assert_eq!(acc, p);
                let inversions = (0..k)
                    .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                assert_eq!(w.len(), inversions);
            }
        }
    }

    #[test]
    fn partition_counts_and_hooks() {
        let counts: Vec<usize> = (0..9).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(hook_dimension(&[2, 1]), 2);
        assert_eq!(hook_dimension(&[3, 2]), 5);
        assert_eq!(hook_dimension(&[4, 2, 1]), 35);
        for k in 0..9 {
            let total: u64 = partitions(k).iter().map(|p| hook_dimension(p).pow(2)).sum();
            assert_eq!(total, (1..=k as u64).product::<u64>());
            for p in partitions(k) {
                assert_eq!(standard_tableaux(&p).len() as u64, hook_dimension(&p));
            }
        }
    }

    #[test]
    fn seminormal_forms_are_representations() {
        for k in 1..6 {
            for shape in partitions(k) {
                let rep = SeminormalRep::new(&shape);
                let perms = all_perms(k);
                for a in &perms {
                    for b in perms.iter().step_by(7) {
                        assert_eq!(rep.matrix(&compose(a, b)), q_mul(&rep.matrix(a), &rep.matrix(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn seminormal_characters_are_orthonormal() {
        let k = 4;
        let perms = all_perms(k);
        let shapes = partitions(k);
        let chars: Vec<Vec<BigRational>> = shapes
            .iter()
            .map(|s| {
                let rep = SeminormalRep::new(s);
                perms
                    .iter()
                    .map(|p| {
                        let m = rep.matrix(p);
                        (0..m.len()).fold(BigRational::zero(), |acc, i| acc + &m[i][i])
                    })
                    .collect()
            })
            .collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let inner = a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y);
                let expected = if i == j { BigRational::from_integer(24.into()) } else { BigRational::zero() };
                assert_eq!(inner, expected);
            }
        }
    }
}
