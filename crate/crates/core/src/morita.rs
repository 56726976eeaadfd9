//! Morita blocks and rank reports for Brauer and BMW algebras of simply-laced
//! type, Wedderburn sizes, the type D cell poset and quasi-heredity checks.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::admissible::{enumerate_all_orbits, AdmissibleOrbit, EnumerationOptions, RootSet};
use crate::coxgroup::{centralizer_nodes, identify_components, parabolic, TypeLabel};
use crate::diagram::{cell_gram, BrauerDiagram, MAX_STRANDS};
use crate::error::{Error, Result};
use crate::laurent::{ExactRational, LaurentPoly};
use crate::rootsys::{DiagramSpec, Family, Root, RootSystem};
use crate::symmetric::{hook_dimension, partitions};

/// Largest strand count for which the type A rank oracle enumerates diagrams.
const DIAGRAM_ORACLE_STRANDS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Brauer,
    Bmw,
}

impl AlgebraKind {
    /// Kind of algebra attached to each block.
    pub fn descriptor(self) -> &'static str {
        match self {
            AlgebraKind::Brauer => "group-algebra",
            AlgebraKind::Bmw => "hecke-algebra",
        }
    }
}

impl Serialize for AlgebraKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.descriptor())
    }
}

fn one_based<S: Serializer>(nodes: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(nodes.iter().map(|i| i + 1))
}

/// One W-orbit of admissible sets and the algebra it contributes.
#[derive(Debug, Clone, Serialize)]
pub struct MoritaBlock {
    pub orbit_id: usize,
    #[serde(skip)]
    pub representative: RootSet,
    #[serde(rename = "representative")]
    pub representative_roots: Vec<Root>,
    pub orbit_size: usize,
    #[serde(skip)]
    pub maximal: RootSet,
    #[serde(rename = "maximal_element")]
    pub maximal_roots: Vec<Root>,
    #[serde(serialize_with = "one_based")]
    pub centralizer_nodes: Vec<usize>,
    pub centralizer_types: Vec<TypeLabel>,
    pub group_order: u64,
    pub algebra: AlgebraKind,
}

impl MoritaBlock {
    /// `|𝔅|² · |W(C_𝔅)|`.
    pub fn contribution(&self) -> u128 {
        (self.orbit_size as u128).pow(2) * self.group_order as u128
    }
}

fn block_of(rs: &RootSystem, id: usize, orbit: &AdmissibleOrbit, algebra: AlgebraKind) -> Result<MoritaBlock> {
    let maximal = orbit
        .maximal()
        .ok_or_else(|| Error::Violation(format!("orbit {id} has no monoidal poset")))?;
    let nodes = centralizer_nodes(rs, &maximal);
    let types = identify_components(rs.spec(), &nodes)?;
    let closed_form = types.iter().fold(num_bigint::BigUint::from(1u32), |acc, t| acc * t.standard_order());
    let computed = parabolic(rs, &nodes)?.order();
    if computed != closed_form {
        return Err(Error::Violation(format!(
            "parabolic subgroup on nodes {nodes:?} has order {computed}, expected {closed_form}"
        )));
    }
    Ok(MoritaBlock {
        orbit_id: id,
        representative: orbit.representative(),
        representative_roots: orbit.representative().roots(rs),
        orbit_size: orbit.size(),
        maximal,
        maximal_roots: maximal.roots(rs),
        centralizer_nodes: nodes,
        centralizer_types: types,
        group_order: computed.to_u64().expect("parabolic orders fit in u64"),
        algebra,
    })
}

/// One block per W-orbit, with the centraliser taken at the orbit's maximal
/// element.
pub fn blocks(rs: &RootSystem, algebra: AlgebraKind, opts: &EnumerationOptions) -> Result<Vec<MoritaBlock>> {
    let orbits = enumerate_all_orbits(rs, opts)?;
    blocks_from_orbits(rs, &orbits, algebra)
}

pub fn blocks_from_orbits(
    rs: &RootSystem,
    orbits: &[AdmissibleOrbit],
    algebra: AlgebraKind,
) -> Result<Vec<MoritaBlock>> {
    orbits.iter().enumerate().map(|(id, o)| block_of(rs, id, o, algebra)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockContribution {
    pub orbit_id: usize,
    pub orbit_size: usize,
    pub group_order: u64,
    pub contribution: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    #[serde(serialize_with = "ser_display")]
    pub spec: DiagramSpec,
    pub blocks: Vec<BlockContribution>,
    pub total: u128,
    pub oracle_total: Option<u128>,
    /// How the oracle total was obtained.
    pub oracle: &'static str,
    pub matches: bool,
}

fn ser_display<T: fmt::Display, S: Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn contributions(blocks: &[MoritaBlock]) -> Vec<BlockContribution> {
    blocks
        .iter()
        .map(|b| BlockContribution {
            orbit_id: b.orbit_id,
            orbit_size: b.orbit_size,
            group_order: b.group_order,
            contribution: b.contribution(),
        })
        .collect()
}

/// Rank of the algebra as `Σ |𝔅|² |W(C_𝔅)|`, checked against an oracle: the
/// number of Brauer diagrams for small type A, otherwise a second
/// enumeration in the alternate generator order.
pub fn rank_check(rs: &RootSystem, opts: &EnumerationOptions) -> Result<RankReport> {
    let blocks = blocks(rs, AlgebraKind::Brauer, opts)?;
    let blocks = contributions(&blocks);
    let total: u128 = blocks.iter().map(|b| b.contribution).sum();
    let strands = rs.rank() + 1;
    let (oracle, oracle_total) = if rs.spec().family() == Family::A && strands <= DIAGRAM_ORACLE_STRANDS {
        ("diagram count", BrauerDiagram::all(strands).len() as u128)
    } else {
        let alt = EnumerationOptions { alternate_order: true, ..*opts };
        let other = contributions(&self::blocks(rs, AlgebraKind::Brauer, &alt)?);
        let mut a: Vec<(usize, u64)> = blocks.iter().map(|b| (b.orbit_size, b.group_order)).collect();
        let mut b: Vec<(usize, u64)> = other.iter().map(|b| (b.orbit_size, b.group_order)).collect();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::Violation(format!("{} blocks change under re-enumeration", rs.spec())));
        }
        ("re-enumeration", other.iter().map(|b| b.contribution).sum())
    };
    if total != oracle_total {
        return Err(Error::Violation(format!(
            "rank of {} is {total} but the {oracle} gives {oracle_total}",
            rs.spec()
        )));
    }
    Ok(RankReport { spec: rs.spec(), blocks, total, oracle_total: Some(oracle_total), oracle, matches: true })
}

/// An irreducible representation of a symmetric group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepDatum {
    pub partition: Vec<usize>,
    pub dimension: u64,
}

/// The irreducible representations of the symmetric group on `k` letters.
pub fn irreps(k: usize) -> Vec<IrrepDatum> {
    partitions(k)
        .into_iter()
        .map(|p| IrrepDatum { dimension: hook_dimension(&p), partition: p })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WedderburnBlock {
    pub orbit_id: usize,
    pub orbit_size: usize,
    pub centralizer_types: Vec<TypeLabel>,
    pub group_order: u64,
    /// Matrix sizes `|𝔅| · dim(τ)`, ascending; absent when the centraliser
    /// has a component outside type A.
    pub sizes: Option<Vec<u64>>,
    /// `Σ dim(τ)² = |W(C)|` over the type A components.
    pub burnside: bool,
}

impl WedderburnBlock {
    pub fn sum_of_squares(&self) -> Option<u128> {
        self.sizes.as_ref().map(|s| s.iter().map(|&x| (x as u128).pow(2)).sum())
    }
}

/// Semisimple decomposition of every block into matrix algebras.
pub fn wedderburn_sizes(rs: &RootSystem, opts: &EnumerationOptions) -> Result<Vec<WedderburnBlock>> {
    let mut out = Vec::new();
    for b in blocks(rs, AlgebraKind::Brauer, opts)? {
        let all_a = b.centralizer_types.iter().all(|t| t.family == Family::A);
        // dimensions of τ over the product of the type A components
        let mut dims: Vec<u64> = vec![1];
        let mut a_order: u64 = 1;
        for t in b.centralizer_types.iter().filter(|t| t.family == Family::A) {
            let factor = irreps(t.rank + 1);
            a_order *= (1..=t.rank as u64 + 1).product::<u64>();
            dims = dims.iter().flat_map(|&d| factor.iter().map(move |f| d * f.dimension)).collect();
        }
        let burnside = dims.iter().map(|&d| d * d).sum::<u64>() == a_order;
        let sizes = all_a.then(|| {
            let mut s: Vec<u64> = dims.iter().map(|&d| d * b.orbit_size as u64).collect();
            s.sort();
            s
        });
        let block = WedderburnBlock {
            orbit_id: b.orbit_id,
            orbit_size: b.orbit_size,
            centralizer_types: b.centralizer_types.clone(),
            group_order: b.group_order,
            sizes,
            burnside,
        };
        if !burnside || block.sum_of_squares().is_some_and(|s| s != b.contribution()) {
            return Err(Error::Violation(format!("Wedderburn sizes of block {} do not add up", b.orbit_id)));
        }
        out.push(block);
    }
    Ok(out)
}

/// A cell label for type `D_n`: `t` in the first family or `(t, θ)` in the
/// second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellLabel {
    Plain(usize),
    Theta(usize),
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Plain(t) => write!(f, "{t}"),
            CellLabel::Theta(t) => write!(f, "({t},θ)"),
        }
    }
}

impl Serialize for CellLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The partially ordered cell labels of type `D_n`.
#[derive(Debug, Clone, Serialize)]
pub struct CellPosetD {
    pub n: usize,
    pub elements: Vec<CellLabel>,
}

/// `Λ₁ = {0..⌊n/2⌋}` and `Λ₂ = {(t, θ) : 1 ≤ t ≤ ⌊(n+1)/2⌋}`.
pub fn cell_poset_d(n: usize) -> Result<CellPosetD> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("D_{n} needs n ≥ 4")));
    }
    let mut elements: Vec<CellLabel> = (0..=n / 2).map(CellLabel::Plain).collect();
    elements.extend((1..=n.div_ceil(2)).map(CellLabel::Theta));
    Ok(CellPosetD { n, elements })
}

impl CellPosetD {
    /// `a > b`: fewer arcs is larger within each family, and `t₁ > (t₂, θ)`
    /// whenever `t₁ ≤ t₂`.
    pub fn greater(&self, a: CellLabel, b: CellLabel) -> bool {
        use CellLabel::*;
        match (a, b) {
            (Plain(s), Plain(t)) | (Theta(s), Theta(t)) => s < t,
            (Plain(s), Theta(t)) => s <= t,
            (Theta(_), Plain(_)) => false,
        }
    }

    pub fn less(&self, a: CellLabel, b: CellLabel) -> bool {
        self.greater(b, a)
    }

    pub fn incomparable(&self, a: CellLabel, b: CellLabel) -> bool {
        a != b && !self.greater(a, b) && !self.greater(b, a)
    }

    pub fn is_total(&self) -> bool {
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| !self.incomparable(a, b)))
    }

    /// Covering pairs `(a, b)` with `a > b`.
    pub fn hasse_edges(&self) -> Vec<(CellLabel, CellLabel)> {
        let mut out = Vec::new();
        for &a in &self.elements {
            for &b in &self.elements {
                if self.greater(a, b)
                    && !self.elements.iter().any(|&c| self.greater(a, c) && self.greater(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Edges from every label to the largest smaller label of each family.
    /// This is the picture drawn as two chains; it contains the covering
    /// pairs together with the edges `t → (t', θ)` implied through `t + 1`.
    pub fn drawn_edges(&self) -> Vec<(CellLabel, CellLabel)> {
        let mut out = Vec::new();
        for &a in &self.elements {
            for family in [0, 1] {
                let candidates = self.elements.iter().copied().filter(|&b| {
                    matches!((family, b), (0, CellLabel::Plain(_)) | (1, CellLabel::Theta(_))) && self.greater(a, b)
                });
                // within one family the order is a chain
                if let Some(b) = candidates.reduce(|x, y| if self.greater(x, y) { x } else { y }) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph cells_D{} {{\n", self.n);
        for e in &self.elements {
            s.push_str(&format!("  \"{e}\";\n"));
        }
        for (a, b) in self.hasse_edges() {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiHereditaryCell {
    pub t: usize,
    pub det: LaurentPoly,
    #[serde(serialize_with = "ser_opt_rational")]
    pub value: Option<ExactRational>,
}

fn ser_opt_rational<S: Serializer>(q: &Option<ExactRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiHereditaryReport {
    pub m: usize,
    #[serde(serialize_with = "ser_opt_rational")]
    pub delta: Option<ExactRational>,
    pub cells: Vec<QuasiHereditaryCell>,
    /// Arc counts of cells whose form is singular.
    pub failing: Vec<usize>,
    pub quasi_hereditary: bool,
}

/// Non-singularity of every cell form of the diagram algebra on `m` strands,
/// generically (`x = None`) or at `δ = x`.
pub fn quasi_hereditary_report(m: usize, x: Option<&ExactRational>) -> Result<QuasiHereditaryReport> {
    if m > MAX_STRANDS {
        return Err(Error::OutOfBounds(format!("{m} strands exceeds the bound {MAX_STRANDS}")));
    }
    let mut cells = Vec::new();
    let mut failing = Vec::new();
    for t in 0..=m / 2 {
        let det = cell_gram(m, t)?.det;
        let value = x.map(|x| det.eval(x)).transpose()?;
        let singular = match &value {
            Some(v) => v.is_zero(),
            None => det.is_zero(),
        };
        if singular {
            failing.push(t);
        }
        cells.push(QuasiHereditaryCell { t, det, value });
    }
    Ok(QuasiHereditaryReport { m, delta: x.cloned(), quasi_hereditary: failing.is_empty(), cells, failing })
}

/// Whether the characteristic `p` (0 or a prime) avoids the exclusions for
/// the family.
pub fn char_condition(spec: DiagramSpec, p: u64) -> bool {
    let excluded: &[u64] = match (spec.family(), spec.rank()) {
        (Family::A, _) => &[],
        (Family::D, _) => &[2],
        (Family::E, 8) => &[2, 3, 5],
        (Family::E, _) => &[2, 3],
    };
    !excluded.contains(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::{stabilizer_order, weyl_group};

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn a2_blocks() {
        let r = rs("A2");
        let b = blocks(&r, AlgebraKind::Brauer, &Default::default()).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!((b[0].orbit_size, b[0].group_order), (1, 6));
        assert_eq!(b[0].centralizer_nodes, vec![0, 1]);
        assert_eq!((b[1].orbit_size, b[1].group_order), (3, 1));
        assert!(b[1].centralizer_types.is_empty());
        assert_eq!(b[1].maximal, RootSet::singleton(r.highest_root()));
    }

    #[test]
    fn small_rank_totals() {
        let report = rank_check(&rs("A2"), &Default::default()).unwrap();
        assert_eq!(report.total, 15);
        assert_eq!(report.oracle, "diagram count");
        let report = rank_check(&rs("A3"), &Default::default()).unwrap();
        let parts: Vec<u128> = report.blocks.iter().map(|b| b.contribution).collect();
        assert_eq!(parts, vec![24, 72, 9]);
        let report = rank_check(&rs("D4"), &Default::default()).unwrap();
        assert_eq!(report.oracle, "re-enumeration");
        assert_eq!(report.total, 1569);
    }

    #[test]
    fn bmw_blocks_have_identical_numerics() {
        let r = rs("D5");
        let a = blocks(&r, AlgebraKind::Brauer, &Default::default()).unwrap();
        let b = blocks(&r, AlgebraKind::Bmw, &Default::default()).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.contribution(), y.contribution());
            assert_eq!(y.algebra.descriptor(), "hecke-algebra");
        }
    }

    #[test]
    fn orbit_stabiliser() {
        for s in ["A3", "A4", "D4", "D5"] {
            let r = rs(s);
            let w = weyl_group(&r);
            for o in enumerate_all_orbits(&r, &Default::default()).unwrap() {
                let stab = stabilizer_order(&w, &o).unwrap();
                assert_eq!(stab * num_bigint::BigUint::from(o.size()), w.order());
            }
        }
    }

    #[test]
    fn wedderburn_a2() {
        let w = wedderburn_sizes(&rs("A2"), &Default::default()).unwrap();
        assert_eq!(w[0].sizes, Some(vec![1, 1, 2]));
        assert_eq!(w[0].sum_of_squares(), Some(6));
        assert_eq!(w[1].sizes, Some(vec![3]));
        assert_eq!(w[1].sum_of_squares(), Some(9));
    }

    #[test]
    fn wedderburn_degrades_outside_type_a() {
        let w = wedderburn_sizes(&rs("D5"), &Default::default()).unwrap();
        assert!(w[0].sizes.is_none());
        assert_eq!(w[0].centralizer_types[0].to_string(), "D5");
        assert!(w.iter().all(|b| b.burnside));
    }

    #[test]
    fn irreps_satisfy_burnside() {
        for k in 0..8 {
            let total: u64 = irreps(k).iter().map(|i| i.dimension.pow(2)).sum();
            assert_eq!(total, (1..=k as u64).product::<u64>());
        }
    }

    #[test]
    fn cell_poset_d4() {
        use CellLabel::*;
        let p = cell_poset_d(4).unwrap();
        assert_eq!(p.elements.len(), 5);
        assert!(p.incomparable(Plain(2), Theta(1)));
        assert!(!p.is_total());
        assert_eq!(
            p.hasse_edges(),
            vec![(Plain(0), Plain(1)), (Plain(1), Plain(2)), (Plain(1), Theta(1)), (Plain(2), Theta(2)), (Theta(1), Theta(2))]
        );
        let mut drawn = p.drawn_edges();
        drawn.sort();
        let mut expected = vec![
            (Plain(0), Plain(1)),
            (Plain(1), Plain(2)),
            (Plain(0), Theta(1)),
            (Plain(1), Theta(1)),
            (Plain(2), Theta(2)),
            (Theta(1), Theta(2)),
        ];
        expected.sort();
        assert_eq!(drawn, expected);
        let p5 = cell_poset_d(5).unwrap();
        assert_eq!(
            p5.elements,
            vec![Plain(0), Plain(1), Plain(2), Theta(1), Theta(2), Theta(3)]
        );
        assert!(cell_poset_d(3).is_err());
    }

    #[test]
    fn cell_poset_order_is_transitive_and_antisymmetric() {
        for n in 4..=9 {
            let p = cell_poset_d(n).unwrap();
            assert_eq!(p.elements.len(), n / 2 + 1 + (n + 1) / 2);
            for &a in &p.elements {
                assert!(!p.greater(a, a));
                for &b in &p.elements {
                    assert!(!(p.greater(a, b) && p.greater(b, a)));
                    for &c in &p.elements {
                        if p.greater(a, b) && p.greater(b, c) {
                            assert!(p.greater(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_heredity() {
        let q = |n: i64| ExactRational::from_integer(n.into());
        assert!(quasi_hereditary_report(3, None).unwrap().quasi_hereditary);
        assert_eq!(quasi_hereditary_report(3, Some(&q(1))).unwrap().failing, vec![1]);
        let r = quasi_hereditary_report(2, Some(&q(3))).unwrap();
        assert!(r.quasi_hereditary);
        assert_eq!(r.cells.iter().map(|c| c.value.clone().unwrap()).collect::<Vec<_>>(), vec![q(1), q(3)]);
    }

    #[test]
    fn characteristic_exclusions() {
        assert!(char_condition("A4".parse().unwrap(), 2));
        assert!(!char_condition("D5".parse().unwrap(), 2));
        assert!(char_condition("D5".parse().unwrap(), 3));
        assert!(!char_condition("E6".parse().unwrap(), 3));
        assert!(!char_condition("E8".parse().unwrap(), 5));
        assert!(char_condition("E8".parse().unwrap(), 7));
        assert!(char_condition("E7".parse().unwrap(), 0));
    }
}
