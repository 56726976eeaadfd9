//! The classical Brauer diagram algebra on `m` strands over `Z[δ, δ⁻¹]`,
//! realising the Brauer algebra of type `A_{m−1}`.
//!
//! Points `0..m` are the top row and `m..2m` the bottom row. In a product
//! `d1 · d2` the diagram `d1` is stacked on top of `d2`. Generator indices are
//! 0-based: `R_i` and `E_i` act on strands `i` and `i + 1`.

mod cell;
mod semisimple;

pub use cell::{
    cell_gram, gram_det, gram_det_direct, half_diagrams, CellDatum, GroupAlgebraElement, HalfDiagram,
    IsotypicFactor, MAX_STRANDS,
};
pub use semisimple::{
    d_semisimplicity_report, lambda2_gram_d, semisimple_at, trace_form_determinant, z_set, CellValue,
    DReport, DVerdict, SemisimplicityVerdict,
};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::admissible::{is_orthogonal, RootSet};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootsys::{Family, RootSystem};

/// A perfect matching on the `2m` boundary points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    partner: Vec<u8>,
}

impl BrauerDiagram {
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let n = partner.len();
        if !n.is_multiple_of(2) || n > 2 * u8::MAX as usize {
            return Err(Error::InvalidInput("a diagram needs an even number of points".into()));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= n || q == p || partner[q] != p {
                return Err(Error::InvalidInput(format!("point {p} is not properly paired")));
            }
        }
        Ok(BrauerDiagram { partner: partner.into_iter().map(|q| q as u8).collect() })
    }

    /// Builds a diagram from explicit pairs of points.
    pub fn from_pairs(m: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * m];
        for &(a, b) in pairs {
            if a >= 2 * m || b >= 2 * m || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidInput(format!("pair ({a}, {b}) is invalid")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Self::from_partner(partner)
    }

    pub fn identity(m: usize) -> Self {
        let partner = (0..2 * m).map(|p| if p < m { p + m } else { p - m }).collect();
        Self::from_partner(partner).expect("identity is a matching")
    }

    /// Diagram of the permutation sending top strand `i` to bottom `sigma[i]`.
    pub fn from_permutation(sigma: &[usize]) -> Result<Self> {
        let m = sigma.len();
        let pairs: Vec<(usize, usize)> = sigma.iter().enumerate().map(|(i, &j)| (i, m + j)).collect();
        Self::from_pairs(m, &pairs)
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    /// Transposition of strands `i` and `i + 1`.
    pub fn r(i: usize, m: usize) -> Result<Self> {
        check_gen(i, m)?;
        let mut sigma: Vec<usize> = (0..m).collect();
        sigma.swap(i, i + 1);
        Self::from_permutation(&sigma)
    }

    /// Cup joining top `i`, `i + 1` and cap joining bottom `i`, `i + 1`.
    pub fn e(i: usize, m: usize) -> Result<Self> {
        check_gen(i, m)?;
        Self::cup_cap(m, i, i + 1)
    }

    /// Arc `{a, b}` on both rows with all other strands vertical.
    pub fn cup_cap(m: usize, a: usize, b: usize) -> Result<Self> {
        if a >= m || b >= m || a == b {
            return Err(Error::OutOfBounds(format!("strands {a}, {b} invalid for {m} strands")));
        }
        let mut pairs = vec![(a, b), (m + a, m + b)];
        pairs.extend((0..m).filter(|&k| k != a && k != b).map(|k| (k, m + k)));
        Self::from_pairs(m, &pairs)
    }

    /// Mirror image in the horizontal axis.
    pub fn flip(&self) -> Self {
        let m = self.strands();
        let swap = |p: usize| if p < m { p + m } else { p - m };
        let partner = (0..2 * m).map(|p| swap(self.partner(swap(p)))).collect();
        Self::from_partner(partner).expect("flip preserves matchings")
    }

    /// Number of arcs within the top row.
    pub fn top_arcs(&self) -> usize {
        let m = self.strands();
        (0..m).filter(|&p| self.partner(p) < m && self.partner(p) > p).count()
    }

    /// `self` stacked on top of `other`, with the number of closed loops.
    pub fn compose(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        let m = self.strands();
        if other.strands() != m {
            return Err(Error::InvalidInput(format!(
                "strand mismatch: {m} against {}",
                other.strands()
            )));
        }
        // Result points: top of self (0..m) and bottom of other (m..2m).
        // Middle point k is self's bottom k and other's top k.
        let mut partner = vec![usize::MAX; 2 * m];
        let mut middle_seen = vec![false; m];
        for start in 0..2 * m {
            if partner[start] != usize::MAX {
                continue;
            }
            // (in_self, point in that diagram's numbering)
            let (mut in_self, mut p) = if start < m { (true, start) } else { (false, start) };
            let end = loop {
                let q = if in_self { self.partner(p) } else { other.partner(p) };
                if in_self {
                    if q < m {
                        break q;
                    }
                    middle_seen[q - m] = true;
                    in_self = false;
                    p = q - m;
                } else {
                    if q >= m {
                        break q;
                    }
                    middle_seen[q] = true;
                    in_self = true;
                    p = q + m;
                }
            };
            partner[start] = end;
            partner[end] = start;
        }
        let mut loops = 0;
        for k in 0..m {
            if middle_seen[k] {
                continue;
            }
            loops += 1;
            let mut p = k;
            loop {
                middle_seen[p] = true;
                let q = self.partner(p + m) - m;
                middle_seen[q] = true;
                p = other.partner(q);
                if p == k {
                    break;
                }
            }
        }
        Ok((BrauerDiagram::from_partner(partner)?, loops))
    }

    /// Every diagram on `m` strands, in increasing order.
    pub fn all(m: usize) -> Vec<BrauerDiagram> {
        fn rec(partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
            let Some(p) = partner.iter().position(|&q| q == usize::MAX) else {
                out.push(BrauerDiagram::from_partner(partner.clone()).unwrap());
                return;
            };
            for q in p + 1..partner.len() {
                if partner[q] == usize::MAX {
                    partner[p] = q;
                    partner[q] = p;
                    rec(partner, out);
                    partner[p] = usize::MAX;
                    partner[q] = usize::MAX;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![usize::MAX; 2 * m], &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.strands();
        let label = |p: usize| if p < m { format!("{}", p + 1) } else { format!("{}'", p - m + 1) };
        let mut first = true;
        for p in 0..2 * m {
            let q = self.partner(p);
            if q > p {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}-{}", label(p), label(q))?;
                first = false;
            }
        }
        Ok(())
    }
}

fn check_gen(i: usize, m: usize) -> Result<()> {
    if m < 2 || i + 1 >= m {
        return Err(Error::OutOfBounds(format!("generator index {} out of range for {m} strands", i + 1)));
    }
    Ok(())
}

/// A `Z[δ, δ⁻¹]`-linear combination of diagrams on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    strands: usize,
    terms: BTreeMap<BrauerDiagram, LaurentPoly>,
}

impl AlgebraElement {
    pub fn zero(m: usize) -> Self {
        AlgebraElement { strands: m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::from_diagram(BrauerDiagram::identity(m))
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        Self::term(d, LaurentPoly::one())
    }

    pub fn term(d: BrauerDiagram, c: LaurentPoly) -> Self {
        let mut e = Self::zero(d.strands());
        e.add_term(d, c);
        e
    }

    fn add_term(&mut self, d: BrauerDiagram, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.strands != other.strands {
            return Err(Error::InvalidInput("strand mismatch".into()));
        }
        let mut out = Self::zero(self.strands);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = d1.compose(d2)?;
                out.add_term(d, &(c1 * c2) * &LaurentPoly::monomial(1, loops as i64));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.strands != other.strands {
            return Err(Error::InvalidInput("strand mismatch".into()));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::add(self, rhs).expect("strand mismatch")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::mul(self, rhs).expect("strand mismatch")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})[{d}]")?;
        }
        Ok(())
    }
}

pub fn gen_r(i: usize, m: usize) -> Result<AlgebraElement> {
    Ok(AlgebraElement::from_diagram(BrauerDiagram::r(i, m)?))
}

pub fn gen_e(i: usize, m: usize) -> Result<AlgebraElement> {
    Ok(AlgebraElement::from_diagram(BrauerDiagram::e(i, m)?))
}

/// The element `δ^k` times the identity.
pub fn delta_power(m: usize, k: i64) -> AlgebraElement {
    AlgebraElement::term(BrauerDiagram::identity(m), LaurentPoly::monomial(1, k))
}

/// `E_X = ∏_{β∈X} E_β` for a mutually orthogonal set of positive roots of
/// `A_{m−1}`. The root `α_a + ... + α_b` corresponds to the strands `a` and
/// `b + 1`.
pub fn e_b(rs: &RootSystem, x: &RootSet) -> Result<AlgebraElement> {
    if rs.spec().family() != Family::A {
        return Err(Error::InvalidInput(format!("{} is not of type A", rs.spec())));
    }
    if !is_orthogonal(rs, x) {
        return Err(Error::InvalidInput(format!("{} is not mutually orthogonal", x.display(rs))));
    }
    let m = rs.rank() + 1;
    let mut acc = AlgebraElement::one(m);
    for k in x.iter() {
        let c = rs.root(k).coeffs();
        let a = c.iter().position(|&v| v != 0).unwrap();
        let b = c.iter().rposition(|&v| v != 0).unwrap() + 1;
        acc = acc.mul(&AlgebraElement::from_diagram(BrauerDiagram::cup_cap(m, a, b)?))?;
    }
    Ok(acc)
}

/// Outcome of one relation family checked in the diagram algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramRelation {
    pub relation: &'static str,
    pub instances: usize,
    pub passed: bool,
}

/// Checks every defining relation of the Brauer monoid of type `A_{m−1}` as
/// an identity in the diagram algebra.
pub fn check_diagram_relations(m: usize) -> Result<Vec<DiagramRelation>> {
    if m < 2 {
        return Err(Error::OutOfBounds("relations need at least two strands".into()));
    }
    let n = m - 1;
    let r = |i| gen_r(i, m).unwrap();
    let e = |i| gen_e(i, m).unwrap();
    let one = AlgebraElement::one(m);
    let delta = delta_power(m, 1);
    let p = |xs: &[&AlgebraElement]| xs.iter().fold(one.clone(), |acc, x| &acc * x);
    let mut out = Vec::new();
    let mut record = |relation: &'static str, checks: Vec<bool>| {
        out.push(DiagramRelation { relation, instances: checks.len(), passed: checks.iter().all(|&b| b) });
    };
    record("δ δ⁻¹ = 1", vec![&delta * &delta_power(m, -1) == one]);
    record("R_i R_i = 1", (0..n).map(|i| p(&[&r(i), &r(i)]) == one).collect());
    record(
        "R_i E_i = E_i R_i = E_i",
        (0..n).map(|i| p(&[&r(i), &e(i)]) == e(i) && p(&[&e(i), &r(i)]) == e(i)).collect(),
    );
    record("E_i E_i = δ E_i", (0..n).map(|i| p(&[&e(i), &e(i)]) == p(&[&delta, &e(i)])).collect());
    let apart: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i.abs_diff(j) > 1).collect();
    let adjacent: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i.abs_diff(j) == 1).collect();
    record("R_i R_j = R_j R_i for i ≁ j", apart.iter().map(|&(i, j)| p(&[&r(i), &r(j)]) == p(&[&r(j), &r(i)])).collect());
    record("E_i R_j = R_j E_i for i ≁ j", apart.iter().map(|&(i, j)| p(&[&e(i), &r(j)]) == p(&[&r(j), &e(i)])).collect());
    record("E_i E_j = E_j E_i for i ≁ j", apart.iter().map(|&(i, j)| p(&[&e(i), &e(j)]) == p(&[&e(j), &e(i)])).collect());
    record(
        "R_i R_j R_i = R_j R_i R_j for i ∼ j",
        adjacent.iter().map(|&(i, j)| p(&[&r(i), &r(j), &r(i)]) == p(&[&r(j), &r(i), &r(j)])).collect(),
    );
    record(
        "R_j R_i E_j = E_i E_j for i ∼ j",
        adjacent.iter().map(|&(i, j)| p(&[&r(j), &r(i), &e(j)]) == p(&[&e(i), &e(j)])).collect(),
    );
    record(
        "R_i E_j R_i = R_j E_i R_j for i ∼ j",
        adjacent.iter().map(|&(i, j)| p(&[&r(i), &e(j), &r(i)]) == p(&[&r(j), &e(i), &r(j)])).collect(),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::all_orthogonal_sets;
    use crate::braction::ReflectionWords;
    use crate::rootsys::DiagramSpec;
    use proptest::prelude::*;

    #[test]
    fn composition_examples() {
        let e = BrauerDiagram::e(0, 2).unwrap();
        assert_eq!(e.compose(&e).unwrap(), (e.clone(), 1));
        let r = BrauerDiagram::r(0, 3).unwrap();
        assert_eq!(r.compose(&r).unwrap(), (BrauerDiagram::identity(3), 0));
        let e3 = BrauerDiagram::e(0, 3).unwrap();
        assert_eq!(e3.compose(&r).unwrap(), (e3.clone(), 0));
        assert_eq!(r.compose(&e3).unwrap(), (e3.clone(), 0));
        assert!(e.compose(&r).is_err());
    }

    #[test]
    fn generator_bounds() {
        assert!(gen_r(2, 3).is_err());
        assert!(gen_e(0, 1).is_err());
        assert!(gen_e(1, 3).is_ok());
    }

    #[test]
    fn relation_examples() {
        let (r1, r2) = (gen_r(0, 3).unwrap(), gen_r(1, 3).unwrap());
        let (e1, e2) = (gen_e(0, 3).unwrap(), gen_e(1, 3).unwrap());
        assert_eq!(&(&r1 * &r2) * &r1, &(&r2 * &r1) * &r2);
        assert_eq!(&(&r2 * &r1) * &e2, &e1 * &e2);
        assert_eq!(&(&r1 * &e2) * &r1, &(&r2 * &e1) * &r2);
    }

    #[test]
    fn all_relations_hold() {
        for m in 2..=5 {
            for rel in check_diagram_relations(m).unwrap() {
                assert!(rel.passed, "m = {m}: {}", rel.relation);
            }
        }
    }

    #[test]
    fn diagram_counts() {
        let double_factorial = |m: usize| (1..=m).map(|k| 2 * k - 1).product::<usize>();
        for m in 0..=6 {
            assert_eq!(BrauerDiagram::all(m).len(), double_factorial(m));
        }
    }

    #[test]
    fn e_b_examples() {
        let a1 = RootSystem::new(DiagramSpec::a(1).unwrap());
        let x = RootSet::from_nodes(&a1, &[0]).unwrap();
        assert_eq!(e_b(&a1, &x).unwrap(), AlgebraElement::from_diagram(BrauerDiagram::e(0, 2).unwrap()));
        let a3 = RootSystem::new(DiagramSpec::a(3).unwrap());
        let x = RootSet::from_nodes(&a3, &[0, 2]).unwrap();
        let ex = e_b(&a3, &x).unwrap();
        assert_eq!(ex, &gen_e(0, 4).unwrap() * &gen_e(2, 4).unwrap());
        assert_eq!(&ex * &ex, ex.scale(&LaurentPoly::delta().pow(2)));
        assert!(e_b(&a3, &RootSet::from_nodes(&a3, &[0, 1]).unwrap()).is_err());
    }

    #[test]
    fn e_b_is_quasi_idempotent_and_matches_conjugation() {
        for n in 1..=4 {
            let rs = RootSystem::new(DiagramSpec::a(n).unwrap());
            let m = n + 1;
            let words = ReflectionWords::new(&rs);
            // E_β = w E_i w⁻¹ computed inside the algebra
            let conj = |k: usize| {
                let (w, i) = words.get(k);
                let wd = w.iter().fold(AlgebraElement::one(m), |acc, &j| &acc * &gen_r(j, m).unwrap());
                let winv = w.iter().rev().fold(AlgebraElement::one(m), |acc, &j| &acc * &gen_r(j, m).unwrap());
                &(&wd * &gen_e(i, m).unwrap()) * &winv
            };
            for k in 0..rs.len() {
                assert_eq!(e_b(&rs, &RootSet::singleton(k)).unwrap(), conj(k));
            }
            for x in all_orthogonal_sets(&rs).unwrap() {
                let ex = e_b(&rs, &x).unwrap();
                let hat = ex.scale(&LaurentPoly::monomial(1, -(x.len() as i64)));
                assert_eq!(&hat * &hat, hat);
                let idx = x.indices();
                for &a in &idx {
                    for &b in &idx {
                        let (ea, eb) = (e_b(&rs, &RootSet::singleton(a)).unwrap(), e_b(&rs, &RootSet::singleton(b)).unwrap());
                        assert_eq!(&ea * &eb, &eb * &ea);
                    }
                }
            }
        }
    }

    fn diagram_strategy(m: usize) -> impl Strategy<Value = BrauerDiagram> {
        let all = BrauerDiagram::all(m);
        (0..all.len()).prop_map(move |k| all[k].clone())
    }

    fn element_strategy(m: usize) -> impl Strategy<Value = AlgebraElement> {
        prop::collection::vec((diagram_strategy(m), -2i64..3, -1i64..2), 1..4).prop_map(move |terms| {
            terms.into_iter().fold(AlgebraElement::zero(m), |acc, (d, c, e)| {
                &acc + &AlgebraElement::term(d, LaurentPoly::monomial(c, e))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiplication_is_associative(
            (a, b, c) in (2usize..5).prop_flat_map(|m| (element_strategy(m), element_strategy(m), element_strategy(m)))
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn flip_is_an_anti_automorphism(
            (a, b) in (1usize..6).prop_flat_map(|m| (diagram_strategy(m), diagram_strategy(m)))
        ) {
            let (ab, l1) = a.compose(&b).unwrap();
            let (ba, l2) = b.flip().compose(&a.flip()).unwrap();
            prop_assert_eq!(ab.flip(), ba);
            prop_assert_eq!(l1, l2);
        }
    }
}
