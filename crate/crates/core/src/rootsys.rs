//! ADE root systems expressed in simple-root coordinates.
//!
//! Nodes are numbered from 0 in the API (node `i` carries the simple root
//! `α_{i+1}`); textual formats use the 1-based labels. The diagrams follow the
//! usual conventions:
//!
//! * `A_n`: the path `1 - 2 - ... - n`;
//! * `D_n`: nodes 1 and 2 both attached to node 3, then `3 - 4 - ... - n`;
//! * `E_n`: `1 - 3 - 4 - 5 - 6 (- 7 - 8)` with node 2 attached to node 4.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

/// A connected simply-laced Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramSpec {
    family: Family,
    rank: usize,
}

impl DiagramSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "{family}{rank}: A needs rank >= 1, D rank >= 4, E rank in 6..=8"
            )));
        }
        Ok(Self { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Diagram edges as 0-based node pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut edges = Vec::new();
        match self.family {
            Family::A => edges.extend((1..n).map(|i| (i - 1, i))),
            Family::D => {
                edges.push((0, 2));
                edges.push((1, 2));
                edges.extend((3..n).map(|i| (i - 1, i)));
            }
            Family::E => {
                edges.extend([(0, 2), (2, 3), (1, 3), (3, 4), (4, 5)]);
                edges.extend((6..n).map(|i| (i - 1, i)));
            }
        }
        edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges().contains(&(a, b))
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

impl fmt::Display for DiagramSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DiagramSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::InvalidSpec(format!("{s:?}: expected A<n>, D<n> or E<n>"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("{s:?}: rank is not a positive integer")))?;
        DiagramSpec::new(family, rank)
    }
}

impl Serialize for DiagramSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A root written as integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The simple root of node `i` (0-based) in rank `n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Returns the positive representative of `±self` and the sign used.
    pub fn normalize(&self) -> (Root, Sign) {
        if self.0.iter().all(|&c| c <= 0) {
            (self.negate(), Sign::Minus)
        } else {
            (self.clone(), Sign::Plus)
        }
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "α{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Positive roots of an ADE diagram together with lookup tables used by the
/// rest of the crate. Roots are addressed by their position in the canonical
/// order (height ascending, then lexicographic coefficients).
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: DiagramSpec,
    form: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    /// `gram[a * len + b] = (root_a, root_b)`.
    gram: Vec<i8>,
    /// `reflection[b * len + a]`: positive representative of `r_{root_a}(root_b)`
    /// and the sign that was removed.
    reflection: Vec<(u16, Sign)>,
    simple: Vec<usize>,
}

impl RootSystem {
    pub fn new(spec: DiagramSpec) -> Self {
        let n = spec.rank();
        let mut form = vec![vec![0i32; n]; n];
        for (i, row) in form.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in spec.edges() {
            form[i][j] = -1;
            form[j][i] = -1;
        }

        // Close the simple roots under the simple reflections. A simple
        // reflection permutes the positive roots other than its own root, so
        // every positive root is reached.
        let inner = |a: &[i32], b: &[i32]| -> i32 {
            let mut s = 0;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] * form[i][j] * b[j];
                }
            }
            s
        };
        let mut found: Vec<Vec<i32>> = (0..n).map(|i| Root::simple(n, i).0).collect();
        let mut seen: std::collections::HashSet<Vec<i32>> = found.iter().cloned().collect();
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    let c = inner(beta, &Root::simple(n, i).0);
                    let mut image = beta.clone();
                    image[i] -= c;
                    if image.iter().all(|&x| x >= 0) && seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
            found.extend(next.iter().cloned());
            frontier = next;
        }
        found.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        let len = found.len();
        let index: HashMap<Vec<i32>, usize> =
            found.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let mut gram = vec![0i8; len * len];
        for a in 0..len {
            for b in a..len {
                let v = inner(&found[a], &found[b]) as i8;
                gram[a * len + b] = v;
                gram[b * len + a] = v;
            }
        }
        let mut reflection = Vec::with_capacity(len * len);
        for b in 0..len {
            for a in 0..len {
                let c = gram[b * len + a] as i32;
                let image: Vec<i32> = found[b]
                    .iter()
                    .zip(&found[a])
                    .map(|(&x, &y)| x - c * y)
                    .collect();
                let (pos, sign) = Root(image).normalize();
                let k = index[&pos.0];
                reflection.push((k as u16, sign));
            }
        }
        let simple = (0..n).map(|i| index[&Root::simple(n, i).0]).collect();

        RootSystem {
            spec,
            form,
            roots: found.into_iter().map(Root).collect(),
            index,
            gram,
            reflection,
            simple,
        }
    }

    pub fn spec(&self) -> DiagramSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The bilinear form on simple roots.
    pub fn form(&self) -> &[Vec<i32>] {
        &self.form
    }

    /// Positive roots in canonical order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn height(&self, k: usize) -> i32 {
        self.roots[k].height()
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(&root.0).copied()
    }

    /// Index of the positive root `±root`, with the sign removed.
    pub fn signed_index_of(&self, root: &Root) -> Option<(usize, Sign)> {
        let (pos, sign) = root.normalize();
        self.index_of(&pos).map(|k| (k, sign))
    }

    /// Index of the simple root of node `i`.
    pub fn simple_index(&self, node: usize) -> usize {
        self.simple[node]
    }

    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.form[i][j] == -1
    }

    /// Inner product of two positive roots given by index.
    #[inline]
    pub fn inner_idx(&self, a: usize, b: usize) -> i32 {
        self.gram[a * self.roots.len() + b] as i32
    }

    pub fn inner(&self, a: &Root, b: &Root) -> Result<i32> {
        let n = self.rank();
        if a.rank() != n || b.rank() != n {
            return Err(Error::InvalidInput(format!(
                "root length mismatch: expected {n}, got {} and {}",
                a.rank(),
                b.rank()
            )));
        }
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a.0[i] * self.form[i][j] * b.0[j];
            }
        }
        Ok(s)
    }

    /// Reflection of positive root `beta` in positive root `alpha`, by index.
    #[inline]
    pub fn reflect_idx(&self, beta: usize, alpha: usize) -> (usize, Sign) {
        let (k, s) = self.reflection[beta * self.roots.len() + alpha];
        (k as usize, s)
    }

    /// Image of positive root `beta` under the simple reflection of `node`.
    #[inline]
    pub fn simple_reflect(&self, node: usize, beta: usize) -> (usize, Sign) {
        self.reflect_idx(beta, self.simple[node])
    }

    /// `β − (β, α) α`, returned as a positive root plus the removed sign.
    pub fn reflect(&self, beta: &Root, alpha: &Root) -> Result<(Root, Sign)> {
        let (b, bs) = self.lookup(beta)?;
        let (a, _) = self.lookup(alpha)?;
        let (k, s) = self.reflect_idx(b, a);
        let sign = if bs == Sign::Minus { s.flip() } else { s };
        Ok((self.roots[k].clone(), sign))
    }

    fn lookup(&self, root: &Root) -> Result<(usize, Sign)> {
        if root.rank() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "root {root} has length {}, expected {}",
                root.rank(),
                self.rank()
            )));
        }
        self.signed_index_of(root)
            .ok_or_else(|| Error::InvalidInput(format!("{root} is not a root of {}", self.spec)))
    }

    /// Coordinates of a root in the ε-realisation of `D_n`, where
    /// `α_1 = ε_2 − ε_1`, `α_2 = ε_2 + ε_1` and `α_i = ε_i − ε_{i−1}` for `i ≥ 3`.
    pub fn to_epsilon(&self, root: &Root) -> Result<Vec<i32>> {
        self.require_d()?;
        let n = self.rank();
        if root.rank() != n {
            return Err(Error::InvalidInput(format!("root {root} has wrong length")));
        }
        let c = root.coeffs();
        let mut e = vec![0; n];
        e[1] += c[0] + c[1];
        e[0] += c[1] - c[0];
        for i in 2..n {
            e[i] += c[i];
            e[i - 1] -= c[i];
        }
        Ok(e)
    }

    /// Inverse of [`Self::to_epsilon`].
    pub fn from_epsilon(&self, eps: &[i32]) -> Result<Root> {
        self.require_d()?;
        let n = self.rank();
        if eps.len() != n {
            return Err(Error::InvalidInput("ε-vector has wrong length".into()));
        }
        // Solve the triangular system from the top index down.
        let mut c = vec![0; n];
        let mut rest = eps.to_vec();
        for i in (2..n).rev() {
            c[i] = rest[i];
            rest[i - 1] += c[i];
        }
        // rest[1] = c0 + c1, rest[0] = c1 - c0
        let s = rest[1];
        let d = rest[0];
        if (s + d) % 2 != 0 {
            return Err(Error::InvalidInput("ε-vector is not in the root lattice".into()));
        }
        c[1] = (s + d) / 2;
        c[0] = (s - d) / 2;
        Ok(Root(c))
    }

    /// The involution `(ε_j ± ε_i)* = ε_j ∓ ε_i` on the positive roots of `D_n`.
    pub fn star(&self, root: &Root) -> Result<Root> {
        let eps = self.to_epsilon(root)?;
        if self.index_of(root).is_none() {
            return Err(Error::InvalidInput(format!("{root} is not a positive root")));
        }
        let low = eps
            .iter()
            .position(|&x| x != 0)
            .ok_or_else(|| Error::InvalidInput("zero vector".into()))?;
        let mut starred = eps;
        starred[low] = -starred[low];
        self.from_epsilon(&starred)
    }

    pub fn star_idx(&self, k: usize) -> Result<usize> {
        let r = self.star(&self.roots[k].clone())?;
        self.index_of(&r)
            .ok_or_else(|| Error::Violation(format!("star of {} is not a positive root", self.roots[k])))
    }

    fn require_d(&self) -> Result<()> {
        if self.spec.family() != Family::D {
            return Err(Error::InvalidInput(format!(
                "ε-realisation and star are defined for type D only, not {}",
                self.spec
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn spec_validation() {
        assert!(DiagramSpec::d(3).is_err());
        assert!(DiagramSpec::e(9).is_err());
        assert!(DiagramSpec::a(0).is_err());
        assert!("F4".parse::<DiagramSpec>().is_err());
        assert_eq!("e7".parse::<DiagramSpec>().unwrap(), DiagramSpec::e(7).unwrap());
    }

    #[test]
    fn a2_roots() {
        let rs = sys("A2");
        let got: Vec<_> = rs.roots().iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn counts_match_formulas() {
        for spec in ["A1", "A5", "A8", "D4", "D6", "D8", "E6", "E7", "E8"] {
            let rs = sys(spec);
            assert_eq!(rs.len(), rs.spec().positive_root_count(), "{spec}");
        }
        assert_eq!(sys("D4").len(), 12);
        assert_eq!(sys("E8").len(), 120);
    }

    #[test]
    fn inner_products() {
        let a2 = sys("A2");
        let d4 = sys("D4");
        assert_eq!(a2.inner(&Root::simple(2, 0), &Root::simple(2, 1)).unwrap(), -1);
        assert_eq!(d4.inner(&Root::simple(4, 0), &Root::simple(4, 1)).unwrap(), 0);
        let theta = d4.root(d4.highest_root()).clone();
        assert_eq!(d4.inner(&theta, &theta).unwrap(), 2);
        assert!(d4.inner(&Root::simple(3, 0), &theta).is_err());
    }

    #[test]
    fn reflect_examples() {
        let a2 = sys("A2");
        let a1 = Root::simple(2, 0);
        let a2r = Root::simple(2, 1);
        assert_eq!(a2.reflect(&a1, &a1).unwrap(), (a1.clone(), Sign::Minus));
        assert_eq!(a2.reflect(&a2r, &a1).unwrap(), (Root::new(vec![1, 1]), Sign::Plus));
        let d4 = sys("D4");
        let (x, y) = (Root::simple(4, 0), Root::simple(4, 1));
        assert_eq!(d4.reflect(&x, &y).unwrap(), (x, Sign::Plus));
    }

    #[test]
    fn height_one_roots_are_simple_and_highest_is_unique() {
        for spec in ["A6", "D7", "E6", "E7", "E8"] {
            let rs = sys(spec);
            let h1: Vec<_> = (0..rs.len()).filter(|&k| rs.height(k) == 1).collect();
            let mut simple: Vec<_> = (0..rs.rank()).map(|i| rs.simple_index(i)).collect();
            simple.sort();
            assert_eq!(h1, simple);
            let top = rs.height(rs.highest_root());
            assert_eq!((0..rs.len()).filter(|&k| rs.height(k) == top).count(), 1);
        }
    }

    #[test]
    fn reflections_close_up_to_sign() {
        for spec in ["A8", "D8", "E6", "E7", "E8"] {
            let rs = sys(spec);
            for b in 0..rs.len() {
                for a in 0..rs.len() {
                    let (k, _) = rs.reflect_idx(b, a);
                    let (back, _) = rs.reflect_idx(k, a);
                    assert_eq!(back, b);
                }
            }
        }
    }

    #[test]
    fn d_epsilon_realisation() {
        for n in 4..=8 {
            let rs = sys(&format!("D{n}"));
            let mut eps: Vec<Vec<i32>> =
                rs.roots().iter().map(|r| rs.to_epsilon(r).unwrap()).collect();
            eps.sort();
            let mut expected = Vec::new();
            for j in 0..n {
                for i in 0..j {
                    for s in [-1, 1] {
                        let mut v = vec![0; n];
                        v[j] = 1;
                        v[i] = s;
                        expected.push(v);
                    }
                }
            }
            expected.sort();
            assert_eq!(eps, expected);
            for r in rs.roots() {
                assert_eq!(&rs.from_epsilon(&rs.to_epsilon(r).unwrap()).unwrap(), r);
            }
        }
    }

    #[test]
    fn star_examples() {
        let d4 = sys("D4");
        assert_eq!(d4.star(&Root::simple(4, 0)).unwrap(), Root::simple(4, 1));
        assert_eq!(d4.star(&Root::simple(4, 3)).unwrap(), Root::new(vec![1, 1, 2, 1]));
        for k in 0..d4.len() {
            let s = d4.star_idx(k).unwrap();
            assert_eq!(d4.inner_idx(k, s), 0);
            assert_eq!(d4.star_idx(s).unwrap(), k);
        }
        assert!(sys("A3").star(&Root::simple(3, 0)).is_err());
    }

    #[test]
    fn star_matches_orthogonality_characterisation_above_rank_four() {
        for n in 5..=7 {
            let rs = sys(&format!("D{n}"));
            for a in 0..rs.len() {
                let perp: Vec<usize> = (0..rs.len()).filter(|&b| rs.inner_idx(a, b) == 0).collect();
                let cands: Vec<usize> = perp
                    .iter()
                    .copied()
                    .filter(|&c| perp.iter().all(|&b| b == c || rs.inner_idx(b, c) == 0))
                    .collect();
                assert_eq!(cands, vec![rs.star_idx(a).unwrap()], "D{n} root {}", rs.root(a));
            }
        }
    }

    #[test]
    fn star_characterisation_is_ambiguous_on_d4() {
        let rs = sys("D4");
        let a = rs.simple_index(0);
        let perp: Vec<usize> = (0..rs.len()).filter(|&b| rs.inner_idx(a, b) == 0).collect();
        let cands = perp
            .iter()
            .filter(|&&c| perp.iter().all(|&b| b == c || rs.inner_idx(b, c) == 0))
            .count();
        assert!(cands > 1);
    }
}
