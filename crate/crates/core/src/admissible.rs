//! Sets of mutually orthogonal positive roots, admissibility, admissible
//! closure, Weyl-group orbits and the monoidal poset on each orbit.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::braction::{self, Generator, GeneratorKind};
use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};

/// A set of positive roots, stored as a bitmask over canonical root indices.
///
/// The ordering compares the sorted index lists lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet(u128);

/// Largest number of positive roots a [`RootSet`] can address.
pub const MAX_ROOTS: usize = 128;

impl RootSet {
    pub fn empty() -> Self {
        RootSet(0)
    }

    pub fn singleton(k: usize) -> Self {
        RootSet(1u128 << k)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(RootSet(0), |s, k| s.with(k))
    }

    /// Builds a set from explicit roots; each must be a positive root of `rs`.
    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<Self> {
        check_capacity(rs)?;
        let mut s = RootSet::empty();
        for r in roots {
            let k = rs
                .index_of(r)
                .ok_or_else(|| Error::InvalidInput(format!("{r} is not a positive root of {}", rs.spec())))?;
            s = s.with(k);
        }
        Ok(s)
    }

    /// The set of simple roots of the given nodes (0-based).
    pub fn from_nodes(rs: &RootSystem, nodes: &[usize]) -> Result<Self> {
        check_capacity(rs)?;
        let mut s = RootSet::empty();
        for &i in nodes {
            if i >= rs.rank() {
                return Err(Error::OutOfBounds(format!("node {} not in {}", i + 1, rs.spec())));
            }
            s = s.with(rs.simple_index(i));
        }
        Ok(s)
    }

    pub fn bits(&self) -> u128 {
        self.0
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn with(self, k: usize) -> Self {
        RootSet(self.0 | 1u128 << k)
    }

    pub fn without(self, k: usize) -> Self {
        RootSet(self.0 & !(1u128 << k))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest canonical index in the set.
    pub fn first(&self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(k)
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.iter().map(|k| rs.root(k).clone()).collect()
    }

    pub fn coeffs(&self, rs: &RootSystem) -> Vec<Vec<i32>> {
        self.iter().map(|k| rs.root(k).coeffs().to_vec()).collect()
    }

    pub fn display<'a>(&self, rs: &'a RootSystem) -> RootSetDisplay<'a> {
        RootSetDisplay { set: *self, rs }
    }
}

impl Ord for RootSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        let above = |x: u128| d < 127 && x >> (d + 1) != 0;
        if self.0 >> d & 1 == 1 {
            // self has d next; other continues with something larger or stops
            if above(other.0) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if above(self.0) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct RootSetDisplay<'a> {
    set: RootSet,
    rs: &'a RootSystem,
}

impl fmt::Display for RootSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, k) in self.set.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.rs.root(k))?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_capacity(rs: &RootSystem) -> Result<()> {
    if rs.len() > MAX_ROOTS {
        return Err(Error::OutOfBounds(format!(
            "{} has {} positive roots; root sets address at most {MAX_ROOTS}",
            rs.spec(),
            rs.len()
        )));
    }
    Ok(())
}

pub fn is_orthogonal(rs: &RootSystem, b: &RootSet) -> bool {
    let idx = b.indices();
    idx.iter()
        .enumerate()
        .all(|(n, &x)| idx[n + 1..].iter().all(|&y| rs.inner_idx(x, y) == 0))
}

/// Image of `b` under the simple reflection of `node`.
pub fn reflect_simple(rs: &RootSystem, node: usize, b: &RootSet) -> RootSet {
    RootSet::from_indices(b.iter().map(|k| rs.simple_reflect(node, k).0))
}

/// Image of `b` under the reflection in the positive root with index `root`.
pub fn reflect_in(rs: &RootSystem, root: usize, b: &RootSet) -> RootSet {
    RootSet::from_indices(b.iter().map(|k| rs.reflect_idx(k, root).0))
}

/// Action of the Weyl group element `r_{w_1} r_{w_2} ... r_{w_k}` given as a
/// list of 0-based nodes; the rightmost reflection acts first.
pub fn w_action(rs: &RootSystem, word: &[usize], b: &RootSet) -> Result<RootSet> {
    check_capacity(rs)?;
    if let Some(&i) = word.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::OutOfBounds(format!("node {} not in {}", i + 1, rs.spec())));
    }
    Ok(word.iter().rev().fold(*b, |acc, &i| reflect_simple(rs, i, &acc)))
}

/// The least superset of `x` closed under adjoining `±(γ₁+γ₂+γ₃−2sγ)` for
/// distinct `γ₁, γ₂, γ₃` in the set and `γ ∈ Φ⁺` with `(γ, γ_i) = s = ±1` for
/// all three.
pub fn closure(rs: &RootSystem, x: &RootSet) -> Result<RootSet> {
    check_capacity(rs)?;
    if !is_orthogonal(rs, x) {
        return Err(Error::InvalidInput(format!(
            "{} is not mutually orthogonal",
            x.display(rs)
        )));
    }
    let mut b = *x;
    while let Some(add) = closure_step(rs, &b)? {
        if let Some(bad) = b.iter().find(|&y| rs.inner_idx(add, y) != 0) {
            return Err(Error::Violation(format!(
                "closure adjoined {} which is not orthogonal to {}",
                rs.root(add),
                rs.root(bad)
            )));
        }
        b = b.with(add);
    }
    Ok(b)
}

/// First root the closure rule would adjoin to `b`, if any.
fn closure_step(rs: &RootSystem, b: &RootSet) -> Result<Option<usize>> {
    let idx = b.indices();
    let n = rs.rank();
    for a in 0..idx.len() {
        for c in a + 1..idx.len() {
            for d in c + 1..idx.len() {
                let (g1, g2, g3) = (idx[a], idx[c], idx[d]);
                for g in 0..rs.len() {
                    let s = rs.inner_idx(g, g1);
                    if s.abs() != 1 || rs.inner_idx(g, g2) != s || rs.inner_idx(g, g3) != s {
                        continue;
                    }
                    let coeffs: Vec<i32> = (0..n)
                        .map(|k| {
                            rs.root(g1).coeffs()[k] + rs.root(g2).coeffs()[k] + rs.root(g3).coeffs()[k]
                                - 2 * s * rs.root(g).coeffs()[k]
                        })
                        .collect();
                    let cand = Root::new(coeffs);
                    let (k, _) = rs.signed_index_of(&cand).ok_or_else(|| {
                        Error::Violation(format!("closure rule produced the non-root {cand}"))
                    })?;
                    if !b.contains(k) {
                        return Ok(Some(k));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Admissibility {
    /// `r_i B' = r_j B'` whenever `i ≁ j` and `γ, γ − α_i + α_j ∈ B'`, for every
    /// `B'` in the Weyl-group orbit of `B`.
    OrbitLocal,
    /// Fixed point of the closure rule.
    ClosureRule,
}

/// Admissibility test; sets that are not mutually orthogonal are never
/// admissible.
pub fn is_admissible(rs: &RootSystem, b: &RootSet, variant: Admissibility) -> bool {
    if !is_orthogonal(rs, b) {
        return false;
    }
    match variant {
        Admissibility::ClosureRule => matches!(closure_step(rs, b), Ok(None)),
        Admissibility::OrbitLocal => weyl_orbit(rs, b).iter().all(|m| locally_admissible(rs, m)),
    }
}

/// The local condition of [`Admissibility::OrbitLocal`] for a single set.
pub fn locally_admissible(rs: &RootSystem, b: &RootSet) -> bool {
    let n = rs.rank();
    for i in 0..n {
        for j in 0..n {
            if i == j || rs.adjacent(i, j) {
                continue;
            }
            let hit = b.iter().any(|g| {
                let mut c = rs.root(g).coeffs().to_vec();
                c[i] -= 1;
                c[j] += 1;
                rs.index_of(&Root::new(c)).is_some_and(|k| b.contains(k))
            });
            if hit && reflect_simple(rs, i, b) != reflect_simple(rs, j, b) {
                return false;
            }
        }
    }
    true
}

/// Weyl-group orbit of `b`, sorted canonically.
pub fn weyl_orbit(rs: &RootSystem, b: &RootSet) -> Vec<RootSet> {
    let mut seen: HashSet<RootSet> = HashSet::from([*b]);
    let mut queue = VecDeque::from([*b]);
    while let Some(x) = queue.pop_front() {
        for i in 0..rs.rank() {
            let y = reflect_simple(rs, i, &x);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<RootSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// Every mutually orthogonal subset of `Φ⁺`, including `∅`.
pub fn all_orthogonal_sets(rs: &RootSystem) -> Result<Vec<RootSet>> {
    check_capacity(rs)?;
    fn rec(rs: &RootSystem, cur: RootSet, start: usize, out: &mut Vec<RootSet>) {
        for k in start..rs.len() {
            if cur.iter().all(|c| rs.inner_idx(c, k) == 0) {
                let next = cur.with(k);
                out.push(next);
                rec(rs, next, k + 1, out);
            }
        }
    }
    let mut out = vec![RootSet::empty()];
    rec(rs, RootSet::empty(), 0, &mut out);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationOptions {
    /// Allow `E_8`, whose enumeration takes noticeably longer.
    pub opt_in_e8: bool,
    /// Apply generators in reverse node order during the search and list
    /// members in descending canonical order. Used as an independent
    /// re-enumeration.
    pub alternate_order: bool,
}

/// A Weyl-group orbit of admissible sets with its action table and,
/// once built, its monoidal poset.
#[derive(Debug, Clone)]
pub struct AdmissibleOrbit {
    members: Vec<RootSet>,
    index: HashMap<RootSet, usize>,
    /// `action[k][i]`: member index of `R_i` applied to member `k`.
    action: Vec<Vec<u32>>,
    poset: Option<MonoidalPoset>,
}

impl AdmissibleOrbit {
    fn from_members(rs: &RootSystem, mut members: Vec<RootSet>, descending: bool) -> Self {
        members.sort();
        if descending {
            members.reverse();
        }
        let index: HashMap<RootSet, usize> = members.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let action = members
            .iter()
            .map(|m| (0..rs.rank()).map(|i| index[&reflect_simple(rs, i, m)] as u32).collect())
            .collect();
        AdmissibleOrbit { members, index, action, poset: None }
    }

    /// The first member in the orbit's member order (the canonical minimum
    /// unless the alternate order was requested).
    pub fn representative(&self) -> RootSet {
        self.members[0]
    }

    pub fn members(&self) -> &[RootSet] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn index_of(&self, b: &RootSet) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn contains(&self, b: &RootSet) -> bool {
        self.index.contains_key(b)
    }

    /// Member index of `R_node` applied to member `k`.
    pub fn act(&self, k: usize, node: usize) -> usize {
        self.action[k][node] as usize
    }

    /// Non-trivial action edges `(from, node, to)`.
    pub fn action_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, row) in self.action.iter().enumerate() {
            for (i, &to) in row.iter().enumerate() {
                if to as usize != k {
                    out.push((k, i, to as usize));
                }
            }
        }
        out
    }

    pub fn poset(&self) -> Option<&MonoidalPoset> {
        self.poset.as_ref()
    }

    /// The unique maximal member, once the poset has been built.
    pub fn maximal(&self) -> Option<RootSet> {
        self.poset.as_ref().map(|p| self.members[p.maximal])
    }
}

/// The orbit of an admissible seed under the simple reflections.
pub fn enumerate_orbit(rs: &RootSystem, seed: &RootSet) -> Result<AdmissibleOrbit> {
    check_capacity(rs)?;
    if !is_admissible(rs, seed, Admissibility::ClosureRule) {
        return Err(Error::InvalidInput(format!("{} is not admissible", seed.display(rs))));
    }
    Ok(AdmissibleOrbit::from_members(rs, weyl_orbit(rs, seed), false))
}

/// Strict partial order on an orbit generated by the lowering and raising
/// moves of the simple reflections.
#[derive(Debug, Clone)]
pub struct MonoidalPoset {
    generating: Vec<(usize, usize)>,
    hasse: Vec<(usize, usize)>,
    above: Vec<Vec<u64>>,
    maximal: usize,
    ties: usize,
}

impl MonoidalPoset {
    /// Whether member `a` lies strictly below member `b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a][b / 64] >> (b % 64) & 1 == 1
    }

    pub fn maximal(&self) -> usize {
        self.maximal
    }

    /// The moves `(lower, upper)` that generate the order.
    pub fn generating_edges(&self) -> &[(usize, usize)] {
        &self.generating
    }

    /// Covering relations `(lower, upper)`.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Number of moves left out because the minimal-height moved roots
    /// disagreed on the direction.
    pub fn ties(&self) -> usize {
        self.ties
    }
}

/// Direction of the move `B → R_i B`: `Some(true)` if it lowers, `Some(false)`
/// if it raises, `None` if `R_i` fixes `B` or the minimal-height moved roots
/// disagree.
fn move_direction(rs: &RootSystem, b: &RootSet, node: usize) -> Option<bool> {
    let a = rs.simple_index(node);
    let moved: Vec<usize> = b.iter().filter(|&x| x != a && rs.inner_idx(x, a) != 0).collect();
    let h = moved.iter().map(|&x| rs.height(x)).min()?;
    let mut lowers = false;
    let mut raises = false;
    for &x in moved.iter().filter(|&&x| rs.height(x) == h) {
        if rs.inner_idx(x, a) == 1 {
            lowers = true;
        } else {
            raises = true;
        }
    }
    match (lowers, raises) {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    }
}

/// Builds the monoidal poset of `orbit` and records its maximal element.
pub fn build_poset(rs: &RootSystem, orbit: &mut AdmissibleOrbit) -> Result<()> {
    let n = orbit.size();
    let mut ties = 0;
    let mut edges = Vec::new();
    for k in 0..n {
        for i in 0..rs.rank() {
            let j = orbit.act(k, i);
            if j == k {
                continue;
            }
            match move_direction(rs, &orbit.members[k], i) {
                Some(true) => edges.push((j, k)),
                Some(false) => edges.push((k, j)),
                None => ties += 1,
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(lo, hi) in &edges {
        up[lo].push(hi);
        indeg[hi] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut queue: VecDeque<usize> = (0..n).filter(|&k| indeg[k] == 0).collect();
    while let Some(k) = queue.pop_front() {
        order.push(k);
        for &h in &up[k] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                queue.push_back(h);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Violation(format!(
            "moves on the orbit of {} contain a cycle",
            orbit.representative().display(rs)
        )));
    }

    let words = n.div_ceil(64);
    let mut above = vec![vec![0u64; words]; n];
    for &k in order.iter().rev() {
        let mut acc = vec![0u64; words];
        for &h in &up[k] {
            acc[h / 64] |= 1 << (h % 64);
            for (w, x) in acc.iter_mut().zip(&above[h]) {
                *w |= x;
            }
        }
        above[k] = acc;
    }
    let mut hasse = Vec::new();
    for k in 0..n {
        let mut indirect = vec![0u64; words];
        for &h in &up[k] {
            for (w, x) in indirect.iter_mut().zip(&above[h]) {
                *w |= x;
            }
        }
        let mut covers: Vec<usize> =
            up[k].iter().copied().filter(|&h| indirect[h / 64] >> (h % 64) & 1 == 0).collect();
        covers.sort_unstable();
        covers.dedup();
        hasse.extend(covers.into_iter().map(|h| (k, h)));
    }
    let maxima: Vec<usize> = (0..n).filter(|&k| above[k].iter().all(|&w| w == 0)).collect();
    if maxima.len() != 1 {
        return Err(Error::Violation(format!(
            "orbit of {} has {} maximal elements",
            orbit.representative().display(rs),
            maxima.len()
        )));
    }
    orbit.poset = Some(MonoidalPoset { generating: edges, hasse, above, maximal: maxima[0], ties });
    Ok(())
}

fn check_bounds(rs: &RootSystem, opts: &EnumerationOptions) -> Result<()> {
    let spec = rs.spec();
    let ok = match spec.family() {
        Family::A | Family::D => spec.rank() <= 8,
        Family::E => spec.rank() < 8 || opts.opt_in_e8,
    };
    if !ok {
        let hint = if spec.family() == Family::E { " without the E8 opt-in" } else { "" };
        return Err(Error::OutOfBounds(format!(
            "orbit enumeration for {spec} is outside the supported range{hint} (A and D up to rank 8, E6, E7, E8 on request)"
        )));
    }
    check_capacity(rs)
}

/// All admissible sets: the closure of `{∅}` under every `R_i` and `E_i`,
/// sorted canonically.
pub fn admissible_sets(rs: &RootSystem, opts: &EnumerationOptions) -> Result<Vec<RootSet>> {
    check_bounds(rs, opts)?;
    let mut gens: Vec<Generator> = (0..rs.rank())
        .flat_map(|i| [Generator::new(GeneratorKind::R, i), Generator::new(GeneratorKind::E, i)])
        .collect();
    if opts.alternate_order {
        gens.reverse();
    }
    let mut seen: HashSet<RootSet> = HashSet::from([RootSet::empty()]);
    let mut queue = VecDeque::from([RootSet::empty()]);
    while let Some(b) = queue.pop_front() {
        for g in &gens {
            let c = braction::act(rs, *g, &b)?;
            if seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    let mut out: Vec<RootSet> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Partitions the admissible sets into Weyl-group orbits and builds each
/// orbit's poset. Orbits are listed by the size of their sets, then by
/// representative.
pub fn enumerate_all_orbits(rs: &RootSystem, opts: &EnumerationOptions) -> Result<Vec<AdmissibleOrbit>> {
    let sets = admissible_sets(rs, opts)?;
    let mut remaining: HashSet<RootSet> = sets.iter().copied().collect();
    let mut orbits = Vec::new();
    let order: Vec<RootSet> = if opts.alternate_order { sets.into_iter().rev().collect() } else { sets };
    for b in order {
        if !remaining.contains(&b) {
            continue;
        }
        let members = weyl_orbit(rs, &b);
        for m in &members {
            if !remaining.remove(m) {
                return Err(Error::Violation(format!(
                    "{} lies in an orbit that is not contained in the admissible sets",
                    m.display(rs)
                )));
            }
        }
        let mut orbit = AdmissibleOrbit::from_members(rs, members, opts.alternate_order);
        build_poset(rs, &mut orbit)?;
        orbits.push(orbit);
    }
    orbits.sort_by(|a, b| {
        let (x, y) = (a.members.iter().min().unwrap(), b.members.iter().min().unwrap());
        x.len().cmp(&y.len()).then(x.cmp(y))
    });
    if opts.alternate_order {
        orbits.reverse();
    }
    Ok(orbits)
}

/// A named orbit representative built from the closed-form list of
/// representatives for each family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceRepresentative {
    pub label: String,
    pub set: RootSet,
}

fn simple_label(nodes: &[usize]) -> String {
    let parts: Vec<String> = nodes.iter().map(|i| format!("α{}", i + 1)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Closed-form orbit representatives. The `D_n` rows use `α_n` as the leading
/// root and the `E_7` triple is read as `{α_7, α_5, α_2}`.
pub fn reference_representatives(rs: &RootSystem) -> Result<Vec<ReferenceRepresentative>> {
    check_capacity(rs)?;
    let n = rs.rank();
    let mut out = Vec::new();
    let mut push = |label: String, set: RootSet| out.push(ReferenceRepresentative { label, set });
    match rs.spec().family() {
        Family::A => {
            for t in 0..=n.div_ceil(2) {
                let nodes: Vec<usize> = (0..t).map(|i| 2 * i).filter(|&i| i < n).collect();
                if nodes.len() == t {
                    push(simple_label(&nodes), RootSet::from_nodes(rs, &nodes)?);
                }
            }
        }
        Family::D => {
            // Y(t) = {α_n, α_{n-2}, ..., α_{n+2-2t}}
            let y = |t: usize| -> Vec<usize> { (1..=t).map(|i| n + 1 - 2 * i).collect() };
            for t in 0..=n / 2 {
                let nodes = y(t);
                push(format!("Y({t}) = {}", simple_label(&nodes)), RootSet::from_nodes(rs, &nodes)?);
            }
            if n.is_multiple_of(2) {
                let mut nodes = y(n / 2 - 1);
                nodes.push(0);
                push(format!("even variant {}", simple_label(&nodes)), RootSet::from_nodes(rs, &nodes)?);
            }
            for t in 0..=n / 2 {
                let base = RootSet::from_nodes(rs, &y(t))?;
                let mut set = base;
                for k in base.iter() {
                    set = set.with(rs.star_idx(k)?);
                }
                push(format!("Y({t}) ∪ Y({t})*"), set);
            }
        }
        Family::E => {
            let rows: Vec<(Vec<usize>, bool)> = match n {
                6 => vec![(vec![], false), (vec![5], false), (vec![5, 3], false), (vec![5, 1, 2], true)],
                7 => vec![
                    (vec![], false),
                    (vec![6], false),
                    (vec![6, 4], false),
                    (vec![6, 4, 1], false),
                    (vec![6, 1, 2], true),
                    (vec![6, 4, 1, 2], true),
                ],
                _ => vec![
                    (vec![], false),
                    (vec![7], false),
                    (vec![7, 5], false),
                    (vec![7, 1, 2], true),
                    (vec![7, 4, 1, 2], true),
                ],
            };
            for (nodes, cl) in rows {
                let base = RootSet::from_nodes(rs, &nodes)?;
                let (label, set) = if cl {
                    (format!("{}^cl", simple_label(&nodes)), closure(rs, &base)?)
                } else {
                    (simple_label(&nodes), base)
                };
                push(label, set);
            }
        }
    }
    Ok(out)
}

/// How the closed-form representatives distribute over enumerated orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceComparison {
    /// `(label, orbit index)` for every representative found in some orbit.
    pub matched: Vec<(String, usize)>,
    /// Representatives that are not admissible or lie in no enumerated orbit.
    pub unmatched: Vec<String>,
    /// Orbits that contain no representative.
    pub uncovered_orbits: Vec<usize>,
}

impl ReferenceComparison {
    pub fn is_exact(&self) -> bool {
        self.unmatched.is_empty() && self.uncovered_orbits.is_empty()
    }
}

pub fn compare_with_reference(rs: &RootSystem, orbits: &[AdmissibleOrbit]) -> Result<ReferenceComparison> {
    let reps = reference_representatives(rs)?;
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    let mut covered = vec![false; orbits.len()];
    for r in reps {
        match orbits.iter().position(|o| o.contains(&r.set)) {
            Some(k) => {
                covered[k] = true;
                matched.push((r.label, k));
            }
            None => unmatched.push(r.label),
        }
    }
    let uncovered_orbits = (0..orbits.len()).filter(|&k| !covered[k]).collect();
    Ok(ReferenceComparison { matched, unmatched, uncovered_orbits })
}
