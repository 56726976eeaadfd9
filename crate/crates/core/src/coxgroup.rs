//! Weyl groups and their parabolic subgroups as permutation groups on the
//! signed roots `±Φ⁺`, with orders from a Schreier–Sims stabiliser chain.
//!
//! Point `k < N` is the positive root with canonical index `k`; point `N + k`
//! is its negative. Permutations act on the right: `p^(gh) = (p^g)^h`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::admissible::{AdmissibleOrbit, RootSet};
use crate::error::{Error, Result};
use crate::rootsys::{DiagramSpec, Family, RootSystem, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidInput("images do not form a permutation".into()));
            }
        }
        Ok(Perm(images.into_iter().map(|x| x as u16).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm(inv)
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(i, &x)| i != x as usize)
    }
}

/// Signed-root permutation induced by the simple reflection of `node`.
pub fn simple_reflection_perm(rs: &RootSystem, node: usize) -> Perm {
    let n = rs.len();
    let mut img = vec![0u16; 2 * n];
    for k in 0..n {
        let (j, s) = rs.simple_reflect(node, k);
        let (pos, neg) = match s {
            Sign::Plus => (j, n + j),
            Sign::Minus => (n + j, j),
        };
        img[k] = pos as u16;
        img[n + k] = neg as u16;
    }
    Perm(img)
}

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[β]` maps the level's base point to `β`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut l = Level { point, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; degree] };
        l.rebuild();
        l
    }

    fn rebuild(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Perm::identity(degree));
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let c = g.image(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().then(g);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidInput("generator degree mismatch".into()));
        }
        let generators: Vec<Perm> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let mut group = PermutationGroup { degree, generators: generators.clone(), levels: Vec::new() };
        if !generators.is_empty() {
            group.levels.push(Level::new(greedy_first_point(degree, &generators), degree));
            group.levels[0].gens = generators;
            group.levels[0].rebuild();
            group.schreier_sims();
        }
        Ok(group)
    }

    /// Sifts `h` through the chain starting at `from`. Returns the residue and
    /// the level at which sifting stopped (`levels.len()` if it went through).
    fn strip(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let b = h.image(level.point);
            match &level.transversal[b] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &b in &orbit {
                let ub = self.levels[lvl].transversal[b].clone().unwrap();
                for s in &gens {
                    let c = s.image(b);
                    let uc = self.levels[lvl].transversal[c].as_ref().unwrap();
                    let h = ub.then(s).then(&uc.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = self.strip(h, lvl + 1);
                    if j < self.levels.len() || !res.is_identity() {
                        if j == self.levels.len() {
                            let p = res.first_moved().expect("non-identity residue");
                            self.levels.push(Level::new(p, self.degree));
                        }
                        for l in lvl + 1..=j {
                            self.levels[l].gens.push(res.clone());
                            self.levels[l].rebuild();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Union of the strong generators over all levels, without repeats.
    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut seen = BTreeSet::new();
        for l in &self.levels {
            for g in &l.gens {
                seen.insert(g.clone());
            }
        }
        seen.into_iter().collect()
    }

    /// Lengths of the basic orbits.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }
}

fn greedy_first_point(degree: usize, gens: &[Perm]) -> usize {
    let mut best = (0, usize::MAX);
    let mut seen = vec![false; degree];
    for p in 0..degree {
        if seen[p] {
            continue;
        }
        let mut orbit = vec![p];
        seen[p] = true;
        let mut head = 0;
        while head < orbit.len() {
            let b = orbit[head];
            head += 1;
            for g in gens {
                let c = g.image(b);
                if !seen[c] {
                    seen[c] = true;
                    orbit.push(c);
                }
            }
        }
        if orbit.len() > best.0 {
            best = (orbit.len(), p);
        }
    }
    best.1
}

/// Enumerates all group elements; intended for orders up to about `10^4`.
pub fn brute_force_order(degree: usize, generators: &[Perm], limit: usize) -> Option<usize> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(h);
            }
        }
    }
    Some(seen.len())
}

pub fn weyl_group(rs: &RootSystem) -> PermutationGroup {
    parabolic(rs, &(0..rs.rank()).collect::<Vec<_>>()).expect("all nodes are in range")
}

/// Subgroup generated by the simple reflections of `nodes` (0-based).
pub fn parabolic(rs: &RootSystem, nodes: &[usize]) -> Result<PermutationGroup> {
    check_nodes(rs, nodes)?;
    let gens = nodes.iter().map(|&i| simple_reflection_perm(rs, i)).collect();
    PermutationGroup::new(2 * rs.len(), gens)
}

fn check_nodes(rs: &RootSystem, nodes: &[usize]) -> Result<()> {
    match nodes.iter().find(|&&i| i >= rs.rank()) {
        Some(i) => Err(Error::OutOfBounds(format!("node {} not in {}", i + 1, rs.spec()))),
        None => Ok(()),
    }
}

/// Nodes whose simple root is orthogonal to every root of `x`.
pub fn centralizer_nodes(rs: &RootSystem, x: &RootSet) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| {
            let a = rs.simple_index(i);
            x.iter().all(|b| rs.inner_idx(a, b) == 0)
        })
        .collect()
}

/// Label of a connected simply-laced Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
}

impl TypeLabel {
    /// Order of the Weyl group from the closed formulas.
    pub fn standard_order(&self) -> BigUint {
        let fact = |k: usize| (1..=k).fold(BigUint::one(), |a, i| a * BigUint::from(i));
        match self.family {
            Family::A => fact(self.rank + 1),
            Family::D => (BigUint::one() << (self.rank - 1)) * fact(self.rank),
            Family::E => BigUint::from(match self.rank {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
        }
    }

    pub fn spec(&self) -> Result<DiagramSpec> {
        DiagramSpec::new(self.family, self.rank)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Connected components of the subdiagram induced on `nodes`, ordered by
/// their smallest node, each classified by shape.
pub fn identify_components(spec: DiagramSpec, nodes: &[usize]) -> Result<Vec<TypeLabel>> {
    let set: BTreeSet<usize> = nodes.iter().copied().collect();
    if let Some(i) = set.iter().find(|&&i| i >= spec.rank()) {
        return Err(Error::OutOfBounds(format!("node {} not in {spec}", i + 1)));
    }
    let edges: Vec<(usize, usize)> =
        spec.edges().into_iter().filter(|(a, b)| set.contains(a) && set.contains(b)).collect();
    let neighbours = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    };
    let mut seen = BTreeSet::new();
    let mut labels = Vec::new();
    for &start in &set {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            for w in neighbours(comp[head]) {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            head += 1;
        }
        labels.push(classify(&comp, &neighbours)?);
    }
    Ok(labels)
}

fn classify(comp: &[usize], neighbours: &dyn Fn(usize) -> Vec<usize>) -> Result<TypeLabel> {
    let n = comp.len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| neighbours(v).len() >= 3).collect();
    let bad = || Error::Violation(format!("component {comp:?} is not of type A, D or E"));
    match branch.as_slice() {
        [] => Ok(TypeLabel { family: Family::A, rank: n }),
        [centre] => {
            let nb = neighbours(*centre);
            if nb.len() != 3 {
                return Err(bad());
            }
            let mut legs: Vec<usize> = nb
                .iter()
                .map(|&first| {
                    let (mut prev, mut cur, mut len) = (*centre, first, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => return len,
                        }
                    }
                })
                .collect();
            legs.sort();
            match legs.as_slice() {
                [1, 1, _] => Ok(TypeLabel { family: Family::D, rank: n }),
                [1, 2, 2..=4] => Ok(TypeLabel { family: Family::E, rank: n }),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

/// `|W| / |orbit|`, by orbit-stabiliser.
pub fn stabilizer_order(weyl: &PermutationGroup, orbit: &AdmissibleOrbit) -> Result<BigUint> {
    let size = BigUint::from(orbit.size());
    let (q, r) = weyl.order().div_rem(&size);
    if !r.is_zero() {
        return Err(Error::Violation(format!(
            "orbit size {size} does not divide the group order {}",
            weyl.order()
        )));
    }
    Ok(q)
}
