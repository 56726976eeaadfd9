//! The Brauer-monoid action on admissible sets, conjugate generators
//! `R_β`, `E_β`, and relation checks on the collection of admissible sets.
//!
//! Words act on the left: in `E1 R2` the generator `R2` acts first. The
//! parameter `δ` acts as the identity and is not represented.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::admissible::{self, check_capacity, reflect_in, reflect_simple, EnumerationOptions, RootSet};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    R,
    E,
}

/// `R_i` or `E_i` for a 0-based node `i`; displayed with the 1-based label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub node: usize,
}

impl Generator {
    pub fn new(kind: GeneratorKind, node: usize) -> Self {
        Generator { kind, node }
    }

    pub fn r(node: usize) -> Self {
        Self::new(GeneratorKind::R, node)
    }

    pub fn e(node: usize) -> Self {
        Self::new(GeneratorKind::E, node)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GeneratorKind::R => 'R',
            GeneratorKind::E => 'E',
        };
        write!(f, "{k}{}", self.node + 1)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('R' | 'r') => GeneratorKind::R,
            Some('E' | 'e') => GeneratorKind::E,
            _ => return Err(Error::InvalidInput(format!("{s:?}: expected R<i> or E<i>"))),
        };
        let label: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{s:?}: node label is not a positive integer")))?;
        if label == 0 {
            return Err(Error::InvalidInput(format!("{s:?}: node labels start at 1")));
        }
        Ok(Generator::new(kind, label - 1))
    }
}

/// A word in the generators, written left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonoidWord(pub Vec<Generator>);

impl MonoidWord {
    pub fn symbols(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|g| g.node >= rank) {
            Some(g) => Err(Error::OutOfBounds(format!("{g}: node out of range for rank {rank}"))),
            None => Ok(()),
        }
    }
}

impl FromStr for MonoidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(MonoidWord)
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn check_node(rs: &RootSystem, node: usize) -> Result<()> {
    if node >= rs.rank() {
        return Err(Error::OutOfBounds(format!("node {} not in {}", node + 1, rs.spec())));
    }
    Ok(())
}

/// Roots of `b` that are not orthogonal to `α_node`: the admissible choices
/// of `β` in the third case of the `E_i` action.
pub fn eligible_betas(rs: &RootSystem, node: usize, b: &RootSet) -> Vec<usize> {
    let a = rs.simple_index(node);
    b.iter().filter(|&x| rs.inner_idx(x, a) != 0).collect()
}

/// Action of one generator on an admissible set. In the third case of `E_i`
/// the canonically smallest eligible `β` is used.
pub fn act(rs: &RootSystem, g: Generator, b: &RootSet) -> Result<RootSet> {
    check_capacity(rs)?;
    check_node(rs, g.node)?;
    match g.kind {
        GeneratorKind::R => Ok(reflect_simple(rs, g.node, b)),
        GeneratorKind::E => {
            let a = rs.simple_index(g.node);
            if b.contains(a) {
                return Ok(*b);
            }
            match eligible_betas(rs, g.node, b).first() {
                None => admissible::closure(rs, &b.with(a)),
                Some(&beta) => Ok(reflect_in(rs, beta, &reflect_simple(rs, g.node, b))),
            }
        }
    }
}

/// `R_β R_i B` for an explicit choice of `β`.
pub fn e_action_with_beta(rs: &RootSystem, node: usize, b: &RootSet, beta: usize) -> Result<RootSet> {
    check_node(rs, node)?;
    if !eligible_betas(rs, node, b).contains(&beta) {
        return Err(Error::InvalidInput(format!(
            "{} is not a root of the set that is non-orthogonal to α{}",
            rs.root(beta),
            node + 1
        )));
    }
    Ok(reflect_in(rs, beta, &reflect_simple(rs, node, b)))
}

/// Applies a word, rightmost symbol first.
pub fn act_word(rs: &RootSystem, w: &MonoidWord, b: &RootSet) -> Result<RootSet> {
    w.check_rank(rs.rank())?;
    w.0.iter().rev().try_fold(*b, |acc, &g| act(rs, g, &acc))
}

/// For every positive root `β`, a shortest pair `(w, i)` with `β = w α_i`,
/// where `w = r_{w_1} ... r_{w_k}` is stored as its list of nodes.
#[derive(Debug, Clone)]
pub struct ReflectionWords {
    table: Vec<(Vec<usize>, usize)>,
}

impl ReflectionWords {
    pub fn new(rs: &RootSystem) -> Self {
        let mut table: Vec<Option<(Vec<usize>, usize)>> = vec![None; rs.len()];
        let mut queue = VecDeque::new();
        for i in 0..rs.rank() {
            let k = rs.simple_index(i);
            table[k] = Some((Vec::new(), i));
            queue.push_back(k);
        }
        while let Some(k) = queue.pop_front() {
            let (w, i) = table[k].clone().unwrap();
            for j in 0..rs.rank() {
                let (m, _) = rs.simple_reflect(j, k);
                if table[m].is_none() {
                    let mut w2 = vec![j];
                    w2.extend_from_slice(&w);
                    table[m] = Some((w2, i));
                    queue.push_back(m);
                }
            }
        }
        ReflectionWords { table: table.into_iter().map(|x| x.expect("every root is W-conjugate to a simple root")).collect() }
    }

    pub fn get(&self, root: usize) -> (&[usize], usize) {
        let (w, i) = &self.table[root];
        (w, *i)
    }
}

/// `w X_i w⁻¹` applied to `b`, with `w` given as a list of nodes.
pub fn conjugate_action_with(
    rs: &RootSystem,
    w: &[usize],
    node: usize,
    kind: GeneratorKind,
    b: &RootSet,
) -> Result<RootSet> {
    // w⁻¹ = r_{w_k} ... r_{w_1}: r_{w_1} acts first
    let inner = w.iter().fold(*b, |acc, &j| reflect_simple(rs, j, &acc));
    let moved = act(rs, Generator::new(kind, node), &inner)?;
    Ok(w.iter().rev().fold(moved, |acc, &j| reflect_simple(rs, j, &acc)))
}

/// Action of `R_β` or `E_β` on an admissible set.
pub fn conjugate_action(
    rs: &RootSystem,
    words: &ReflectionWords,
    beta: usize,
    kind: GeneratorKind,
    b: &RootSet,
) -> Result<RootSet> {
    if beta >= rs.len() {
        return Err(Error::OutOfBounds(format!("root index {beta} out of range")));
    }
    let (w, i) = words.get(beta);
    conjugate_action_with(rs, w, i, kind, b)
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    /// Number of node pairs the relation was instantiated for.
    pub instances: usize,
    pub passed: bool,
    /// First failing instance as `(i, j, set)` with 1-based nodes and the set
    /// in coefficient form.
    pub counterexample: Option<(usize, usize, Vec<Vec<i32>>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub spec: crate::rootsys::DiagramSpec,
    pub admissible_sets: usize,
    pub relations: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.relations.iter().all(|r| r.passed)
    }
}

/// Relations of the Brauer monoid, checked as identities of transformations
/// of the admissible sets with `δ` acting trivially.
pub fn check_relations(rs: &RootSystem, opts: &EnumerationOptions) -> Result<RelationReport> {
    let sets = admissible::admissible_sets(rs, opts)?;
    let n = rs.rank();
    let word = |gs: &[(GeneratorKind, usize)]| MonoidWord(gs.iter().map(|&(k, i)| Generator::new(k, i)).collect());
    use GeneratorKind::{E, R};

    type Pair = fn(usize, usize) -> (Vec<(GeneratorKind, usize)>, Vec<(GeneratorKind, usize)>);
    #[derive(Clone, Copy, PartialEq)]
    enum Scope {
        Single,
        Apart,
        Adjacent,
    }
    let table: Vec<(&str, Scope, Pair)> = vec![
        ("δ δ⁻¹ = 1", Scope::Single, |_, _| (vec![], vec![])),
        ("R_i R_i = 1", Scope::Single, |i, _| (vec![(R, i), (R, i)], vec![])),
        ("R_i E_i = E_i", Scope::Single, |i, _| (vec![(R, i), (E, i)], vec![(E, i)])),
        ("E_i R_i = E_i", Scope::Single, |i, _| (vec![(E, i), (R, i)], vec![(E, i)])),
        ("E_i E_i = δ E_i", Scope::Single, |i, _| (vec![(E, i), (E, i)], vec![(E, i)])),
        ("R_i R_j = R_j R_i for i ≁ j", Scope::Apart, |i, j| (vec![(R, i), (R, j)], vec![(R, j), (R, i)])),
        ("E_i R_j = R_j E_i for i ≁ j", Scope::Apart, |i, j| (vec![(E, i), (R, j)], vec![(R, j), (E, i)])),
        ("E_i E_j = E_j E_i for i ≁ j", Scope::Apart, |i, j| (vec![(E, i), (E, j)], vec![(E, j), (E, i)])),
        ("R_i R_j R_i = R_j R_i R_j for i ∼ j", Scope::Adjacent, |i, j| {
            (vec![(R, i), (R, j), (R, i)], vec![(R, j), (R, i), (R, j)])
        }),
        ("R_j R_i E_j = E_i E_j for i ∼ j", Scope::Adjacent, |i, j| {
            (vec![(R, j), (R, i), (E, j)], vec![(E, i), (E, j)])
        }),
        ("R_i E_j R_i = R_j E_i R_j for i ∼ j", Scope::Adjacent, |i, j| {
            (vec![(R, i), (E, j), (R, i)], vec![(R, j), (E, i), (R, j)])
        }),
    ];

    let mut relations = Vec::new();
    for (name, scope, build) in table {
        let mut pairs = Vec::new();
        for i in 0..n {
            match scope {
                Scope::Single => pairs.push((i, i)),
                _ => {
                    for j in 0..n {
                        if i != j && (rs.adjacent(i, j) == (scope == Scope::Adjacent)) {
                            pairs.push((i, j));
                        }
                    }
                }
            }
        }
        let mut counterexample = None;
        'pairs: for &(i, j) in &pairs {
            let (l, r) = build(i, j);
            let (l, r) = (word(&l), word(&r));
            for b in &sets {
                if act_word(rs, &l, b)? != act_word(rs, &r, b)? {
                    counterexample = Some((i + 1, j + 1, b.coeffs(rs)));
                    break 'pairs;
                }
            }
        }
        relations.push(RelationCheck {
            relation: name.to_string(),
            instances: pairs.len(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }
    Ok(RelationReport { spec: rs.spec(), admissible_sets: sets.len(), relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::{admissible_sets, all_orthogonal_sets, closure, is_admissible, Admissibility};

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn word_parsing() {
        let w: MonoidWord = "E1 R2  e3".parse().unwrap();
        assert_eq!(w.to_string(), "E1 R2 E3");
        assert!("E0".parse::<MonoidWord>().is_err());
        assert!("X1".parse::<MonoidWord>().is_err());
        assert!(w.check_rank(2).is_err());
        assert!("".parse::<MonoidWord>().unwrap().is_empty());
    }

    #[test]
    fn action_examples() {
        let a2 = sys("A2");
        let a1 = RootSet::from_nodes(&a2, &[0]).unwrap();
        let a2s = RootSet::from_nodes(&a2, &[1]).unwrap();
        assert_eq!(act(&a2, Generator::e(0), &RootSet::empty()).unwrap(), a1);
        assert_eq!(act(&a2, Generator::e(0), &a1).unwrap(), a1);
        assert_eq!(act(&a2, Generator::e(1), &a1).unwrap(), a2s);
        assert!(act(&a2, Generator::e(2), &a1).is_err());
    }

    #[test]
    fn word_examples() {
        let d4 = sys("D4");
        for b in admissible_sets(&d4, &Default::default()).unwrap() {
            assert_eq!(act_word(&d4, &MonoidWord::default(), &b).unwrap(), b);
            for i in 1..=4 {
                let ee: MonoidWord = format!("E{i} E{i}").parse().unwrap();
                let e: MonoidWord = format!("E{i}").parse().unwrap();
                let rr: MonoidWord = format!("R{i} R{i}").parse().unwrap();
                assert_eq!(act_word(&d4, &ee, &b).unwrap(), act_word(&d4, &e, &b).unwrap());
                assert_eq!(act_word(&d4, &rr, &b).unwrap(), b);
            }
        }
    }

    #[test]
    fn beta_choice_and_admissibility_preserved() {
        for spec in ["A3", "A5", "D4", "D5", "E6"] {
            let rs = sys(spec);
            for b in admissible_sets(&rs, &Default::default()).unwrap() {
                for i in 0..rs.rank() {
                    let out = act(&rs, Generator::e(i), &b).unwrap();
                    assert!(is_admissible(&rs, &out, Admissibility::ClosureRule));
                    if !b.contains(rs.simple_index(i)) {
                        for beta in eligible_betas(&rs, i, &b) {
                            assert_eq!(e_action_with_beta(&rs, i, &b, beta).unwrap(), out, "{spec}");
                        }
                    }
                    assert_eq!(act(&rs, Generator::e(i), &out).unwrap(), out);
                }
            }
        }
    }

    #[test]
    fn reflection_words_reach_each_root() {
        for spec in ["A4", "D5", "E7"] {
            let rs = sys(spec);
            let words = ReflectionWords::new(&rs);
            for k in 0..rs.len() {
                let (w, i) = words.get(k);
                let img = w.iter().rev().fold(RootSet::singleton(rs.simple_index(i)), |acc, &j| {
                    reflect_simple(&rs, j, &acc)
                });
                assert_eq!(img, RootSet::singleton(k));
            }
        }
    }

    #[test]
    fn conjugates_of_simple_roots_are_the_generators() {
        let rs = sys("D4");
        let words = ReflectionWords::new(&rs);
        for b in admissible_sets(&rs, &Default::default()).unwrap() {
            for i in 0..4 {
                let a = rs.simple_index(i);
                for kind in [GeneratorKind::R, GeneratorKind::E] {
                    assert_eq!(
                        conjugate_action(&rs, &words, a, kind, &b).unwrap(),
                        act(&rs, Generator::new(kind, i), &b).unwrap()
                    );
                }
            }
            for k in 0..rs.len() {
                assert_eq!(
                    conjugate_action(&rs, &words, k, GeneratorKind::R, &b).unwrap(),
                    reflect_in(&rs, k, &b)
                );
            }
        }
    }

    /// Every expression `β = w α_i` with `w` of length at most `max_len`.
    fn expressions(rs: &RootSystem, max_len: usize) -> Vec<Vec<(Vec<usize>, usize)>> {
        let mut out = vec![Vec::new(); rs.len()];
        let mut layer: Vec<(Vec<usize>, usize, usize)> =
            (0..rs.rank()).map(|i| (Vec::new(), i, rs.simple_index(i))).collect();
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for (w, i, k) in layer {
                out[k].push((w.clone(), i));
                for j in 0..rs.rank() {
                    let mut w2 = vec![j];
                    w2.extend_from_slice(&w);
                    next.push((w2, i, rs.simple_reflect(j, k).0));
                }
            }
            layer = next;
        }
        out
    }

    #[test]
    fn conjugate_action_is_independent_of_the_expression() {
        for spec in ["A3", "D4"] {
            let rs = sys(spec);
            let exprs = expressions(&rs, 4);
            let sets = admissible_sets(&rs, &Default::default()).unwrap();
            for (k, list) in exprs.iter().enumerate() {
                assert!(list.len() > 1, "{spec} root {k}");
                for kind in [GeneratorKind::R, GeneratorKind::E] {
                    for b in &sets {
                        let (w0, i0) = &list[0];
                        let first = conjugate_action_with(&rs, w0, *i0, kind, b).unwrap();
                        for (w, i) in &list[1..] {
                            assert_eq!(conjugate_action_with(&rs, w, *i, kind, b).unwrap(), first);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonal_conjugates_commute_and_build_closures() {
        let rs = sys("D4");
        let words = ReflectionWords::new(&rs);
        let sets = admissible_sets(&rs, &Default::default()).unwrap();
        for x in 0..rs.len() {
            for y in 0..rs.len() {
                if rs.inner_idx(x, y) != 0 {
                    continue;
                }
                for b in &sets {
                    let e = GeneratorKind::E;
                    let xy = conjugate_action(&rs, &words, y, e, &conjugate_action(&rs, &words, x, e, b).unwrap());
                    let yx = conjugate_action(&rs, &words, x, e, &conjugate_action(&rs, &words, y, e, b).unwrap());
                    assert_eq!(xy.unwrap(), yx.unwrap());
                }
            }
        }
        for x in all_orthogonal_sets(&rs).unwrap() {
            let mut acc = RootSet::empty();
            for k in x.iter() {
                acc = conjugate_action(&rs, &words, k, GeneratorKind::E, &acc).unwrap();
            }
            assert_eq!(acc, closure(&rs, &x).unwrap());
        }
    }

    #[test]
    fn relations_hold() {
        for spec in ["A3", "D4"] {
            let report = check_relations(&sys(spec), &Default::default()).unwrap();
            assert!(report.all_passed(), "{spec}: {report:?}");
            assert_eq!(report.relations.len(), 11);
        }
    }
}
