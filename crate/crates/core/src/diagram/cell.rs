//! Half diagrams, layer decomposition and the Gram forms of cell modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::BrauerDiagram;
use crate::error::{Error, Result};
use crate::laurent::{det, ExactRational, LaurentPoly};
use crate::symmetric::{self, all_perms, hook_dimension, partitions, perm_index, SeminormalRep, SmallPerm};

/// Largest number of strands accepted by the Gram routines.
pub const MAX_STRANDS: usize = 6;

/// Scalar Gram matrices up to this size are expanded and factored directly.
const DIRECT_LIMIT: usize = 64;

/// One row of a diagram: `t` arcs and the remaining free points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HalfDiagram {
    m: usize,
    arcs: Vec<(usize, usize)>,
    free: Vec<usize>,
}

impl HalfDiagram {
    pub fn new(m: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; m];
        let mut sorted = Vec::with_capacity(arcs.len());
        for &(a, b) in arcs {
            let (a, b) = (a.min(b), a.max(b));
            if b >= m || a == b || used[a] || used[b] {
                return Err(Error::InvalidInput(format!("arc ({a}, {b}) is invalid on {m} points")));
            }
            used[a] = true;
            used[b] = true;
            sorted.push((a, b));
        }
        sorted.sort();
        let free = (0..m).filter(|&p| !used[p]).collect();
        Ok(HalfDiagram { m, arcs: sorted, free })
    }

    pub fn points(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    fn partner(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.m];
        for &(a, b) in &self.arcs {
            p[a] = Some(b);
            p[b] = Some(a);
        }
        p
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (a, b)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        f.write_str("}")
    }
}

/// All half diagrams with `t` arcs on `m` points, sorted.
pub fn half_diagrams(m: usize, t: usize) -> Vec<HalfDiagram> {
    fn rec(m: usize, t: usize, p: usize, used: &mut Vec<bool>, arcs: &mut Vec<(usize, usize)>, out: &mut Vec<HalfDiagram>) {
        if arcs.len() == t {
            out.push(HalfDiagram::new(m, arcs).unwrap());
            return;
        }
        let Some(a) = (p..m).find(|&q| !used[q]) else { return };
        // a stays free
        rec(m, t, a + 1, used, arcs, out);
        used[a] = true;
        for b in a + 1..m {
            if !used[b] {
                used[b] = true;
                arcs.push((a, b));
                rec(m, t, a + 1, used, arcs, out);
                arcs.pop();
                used[b] = false;
            }
        }
        used[a] = false;
    }
    if 2 * t > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(m, t, 0, &mut vec![false; m], &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl BrauerDiagram {
    /// Splits a diagram into its top row, bottom row and the permutation
    /// `σ` pairing the `i`-th free top point with the `σ[i]`-th free bottom
    /// point.
    pub fn decompose(&self) -> (HalfDiagram, HalfDiagram, SmallPerm) {
        let m = self.strands();
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for p in 0..2 * m {
            let q = self.partner(p);
            if q > p && q < m {
                top.push((p, q));
            } else if q > p && p >= m {
                bottom.push((p - m, q - m));
            }
        }
        let top = HalfDiagram::new(m, &top).unwrap();
        let bottom = HalfDiagram::new(m, &bottom).unwrap();
        let sigma = top
            .free
            .iter()
            .map(|&p| bottom.free.iter().position(|&q| q == self.partner(p) - m).unwrap())
            .collect();
        (top, bottom, sigma)
    }

    /// Inverse of [`BrauerDiagram::decompose`].
    pub fn assemble(top: &HalfDiagram, bottom: &HalfDiagram, sigma: &[usize]) -> Result<BrauerDiagram> {
        let m = top.m;
        if bottom.m != m || top.free.len() != bottom.free.len() || sigma.len() != top.free.len() {
            return Err(Error::InvalidInput("half diagrams do not match".into()));
        }
        let mut pairs: Vec<(usize, usize)> = top.arcs.clone();
        pairs.extend(bottom.arcs.iter().map(|&(a, b)| (a + m, b + m)));
        pairs.extend(top.free.iter().zip(sigma).map(|(&p, &j)| (p, bottom.free[j] + m)));
        BrauerDiagram::from_pairs(m, &pairs)
    }
}

/// An element of `Z[δ, δ⁻¹][S_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<SmallPerm, LaurentPoly>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: BTreeMap::new() }
    }

    pub fn term(sigma: SmallPerm, c: LaurentPoly) -> Self {
        let mut e = Self::zero(sigma.len());
        if !c.is_zero() {
            e.terms.insert(sigma, c);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SmallPerm, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Image under the anti-involution `σ ↦ σ⁻¹`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (s, c) in &self.terms {
            out.terms.insert(symmetric::inverse(s), c.clone());
        }
        out
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (s, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let img: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({c})[{}]", img.join(" "))?;
        }
        Ok(())
    }
}

/// `φ(h, h')`: stack `h` against `h'`. Zero when a free point of `h` is
/// joined to another free point of `h`.
fn pairing(h: &HalfDiagram, g: &HalfDiagram) -> GroupAlgebraElement {
    let m = h.m;
    let k = h.free.len();
    let hp = h.partner();
    let gp = g.partner();
    let mut seen = vec![false; m];
    let mut sigma = vec![0; k];
    for (i, &start) in h.free.iter().enumerate() {
        let mut p = start;
        seen[p] = true;
        loop {
            // step through g
            match gp[p] {
                None => {
                    sigma[i] = g.free.iter().position(|&q| q == p).unwrap();
                    break;
                }
                Some(q) => {
                    seen[q] = true;
                    match hp[q] {
                        None => return GroupAlgebraElement::zero(k),
                        Some(r) => {
                            seen[r] = true;
                            p = r;
                        }
                    }
                }
            }
        }
    }
    let mut loops = 0;
    for s in 0..m {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut p = s;
        loop {
            seen[p] = true;
            let q = gp[p].expect("unvisited points lie on closed loops");
            seen[q] = true;
            p = hp[q].expect("unvisited points lie on closed loops");
            if p == s {
                break;
            }
        }
    }
    GroupAlgebraElement::term(sigma, LaurentPoly::monomial(1, loops))
}

/// The determinant of one isotypic block of the scalar Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotypicFactor {
    pub shape: Vec<usize>,
    /// Dimension of the Specht module, which is also the exponent of this
    /// factor in the full determinant.
    pub multiplicity: u64,
    /// The block determinant is `numerator / denominator`.
    pub numerator: LaurentPoly,
    #[serde(serialize_with = "ser_bigint")]
    pub denominator: BigInt,
}

fn ser_bigint<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// The cell module of `m` strands with `t` arcs.
#[derive(Debug, Clone, Serialize)]
pub struct CellDatum {
    pub m: usize,
    pub t: usize,
    pub basis: Vec<HalfDiagram>,
    #[serde(skip)]
    pub gram: Vec<Vec<GroupAlgebraElement>>,
    pub factors: Vec<IsotypicFactor>,
    /// Determinant of [`CellDatum::scalar_gram`].
    pub det: LaurentPoly,
}

impl CellDatum {
    /// Number of propagating strands.
    pub fn propagating(&self) -> usize {
        self.m - 2 * self.t
    }

    /// Side of the scalar Gram matrix.
    pub fn size(&self) -> usize {
        self.basis.len() * factorial(self.propagating())
    }

    /// The Gram matrix blown up through the left regular representation of
    /// the symmetric group on the propagating strands.
    pub fn scalar_gram(&self) -> Vec<Vec<LaurentPoly>> {
        let k = self.propagating();
        let perms = all_perms(k);
        let index = perm_index(k);
        let f = perms.len();
        let n = self.basis.len();
        let mut out = vec![vec![LaurentPoly::zero(); n * f]; n * f];
        for a in 0..n {
            for b in 0..n {
                for (sigma, c) in self.gram[a][b].terms() {
                    for (ti, tau) in perms.iter().enumerate() {
                        let ri = index[&symmetric::compose(sigma, tau)];
                        out[a * f + ri][b * f + ti] += c;
                    }
                }
            }
        }
        out
    }

    /// Distinct rational zeros of the determinant.
    pub fn rational_roots(&self) -> Result<Vec<ExactRational>> {
        let mut roots = Vec::new();
        for fac in &self.factors {
            roots.extend(fac.numerator.rational_roots()?);
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn check_cell(m: usize, t: usize) -> Result<()> {
    if m > MAX_STRANDS {
        return Err(Error::OutOfBounds(format!("{m} strands exceeds the bound {MAX_STRANDS}")));
    }
    if 2 * t > m {
        return Err(Error::InvalidInput(format!("{t} arcs do not fit on {m} points")));
    }
    Ok(())
}

fn content(p: &LaurentPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c))
}

fn isotypic_factor(basis_len: usize, gram: &[Vec<GroupAlgebraElement>], shape: &[usize]) -> Result<IsotypicFactor> {
    let rep = SeminormalRep::new(shape);
    let d = rep.dim();
    let mut cache: HashMap<SmallPerm, Vec<Vec<ExactRational>>> = HashMap::new();
    for row in gram {
        for x in row {
            for (s, _) in x.terms() {
                cache.entry(s.clone()).or_insert_with(|| rep.matrix(s));
            }
        }
    }
    let den = cache
        .values()
        .flatten()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let n = basis_len;
    let mut mat = vec![vec![LaurentPoly::zero(); n * d]; n * d];
    for a in 0..n {
        for b in 0..n {
            for (s, c) in gram[a][b].terms() {
                let rho = &cache[s];
                for u in 0..d {
                    for v in 0..d {
                        let q = &rho[u][v];
                        if !q.is_zero() {
                            let scaled = q.numer() * (&den / q.denom());
                            mat[a * d + u][b * d + v] += &c.scale(&scaled);
                        }
                    }
                }
            }
        }
    }
    let numerator = det(&mat)?;
    let mut denominator = num_traits::pow(den, n * d);
    let g = content(&numerator).gcd(&denominator);
    let numerator = if g.is_zero() || g.is_one() { numerator } else { numerator.div_exact_scalar(&g)? };
    if !g.is_zero() {
        denominator /= &g;
    }
    if denominator.is_negative() {
        denominator = -denominator;
    }
    Ok(IsotypicFactor { shape: shape.to_vec(), multiplicity: hook_dimension(shape), numerator, denominator })
}

/// The Gram datum of the cell module with `t` arcs on `m` strands.
pub fn cell_gram(m: usize, t: usize) -> Result<CellDatum> {
    check_cell(m, t)?;
    let basis = half_diagrams(m, t);
    let gram: Vec<Vec<GroupAlgebraElement>> =
        basis.iter().map(|h| basis.iter().map(|g| pairing(h, g)).collect()).collect();
    let k = m - 2 * t;
    let factors = partitions(k)
        .iter()
        .map(|shape| isotypic_factor(basis.len(), &gram, shape))
        .collect::<Result<Vec<_>>>()?;
    let mut num = LaurentPoly::one();
    let mut den = BigInt::one();
    for f in &factors {
        num = &num * &f.numerator.pow(f.multiplicity as u32);
        den *= num_traits::pow(f.denominator.clone(), f.multiplicity as usize);
    }
    let product = num.div_exact_scalar(&den).map_err(|_| {
        Error::Violation(format!("isotypic determinants of cell ({m}, {t}) are not integral"))
    })?;
    let mut datum = CellDatum { m, t, basis, gram, factors, det: product };
    if datum.size() <= DIRECT_LIMIT {
        let direct = det(&datum.scalar_gram())?;
        if direct != datum.det {
            return Err(Error::Violation(format!("Gram determinant routes disagree on cell ({m}, {t})")));
        }
        datum.det = direct;
    }
    Ok(datum)
}

/// Determinant of the scalar Gram matrix of the cell `(m, t)`.
pub fn gram_det(m: usize, t: usize) -> Result<LaurentPoly> {
    Ok(cell_gram(m, t)?.det)
}

/// The same determinant computed only from the blown-up matrix.
pub fn gram_det_direct(m: usize, t: usize) -> Result<LaurentPoly> {
    check_cell(m, t)?;
    let basis = half_diagrams(m, t);
    let gram = basis.iter().map(|h| basis.iter().map(|g| pairing(h, g)).collect()).collect();
    let datum = CellDatum { m, t, basis, gram, factors: Vec::new(), det: LaurentPoly::zero() };
    det(&datum.scalar_gram())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::det_rational;
    use num_bigint::BigInt;

    fn double_factorial(m: usize) -> usize {
        (1..=m).map(|k| 2 * k - 1).product()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn half_diagram_counts() {
        for m in 0..=7 {
            for t in 0..=m / 2 {
                assert_eq!(half_diagrams(m, t).len(), binomial(m, 2 * t) * double_factorial(t), "m={m} t={t}");
            }
        }
        assert!(half_diagrams(3, 2).is_empty());
    }

    #[test]
    fn layers_account_for_every_diagram() {
        for m in 0..=6 {
            let total: usize =
                (0..=m / 2).map(|t| half_diagrams(m, t).len().pow(2) * factorial(m - 2 * t)).sum();
            assert_eq!(total, double_factorial(m));
        }
    }

    #[test]
    fn decompose_assemble_roundtrip() {
        for m in 0..=5 {
            for d in BrauerDiagram::all(m) {
                let (top, bottom, sigma) = d.decompose();
                assert_eq!(top.arcs().len(), d.top_arcs());
                assert_eq!(BrauerDiagram::assemble(&top, &bottom, &sigma).unwrap(), d);
            }
        }
    }

    /// Pairing read off from the diagram product of two layer elements.
    fn pairing_by_composition(h: &HalfDiagram, g: &HalfDiagram) -> GroupAlgebraElement {
        let k = h.free.len();
        let id: Vec<usize> = (0..k).collect();
        let top = BrauerDiagram::assemble(h, h, &id).unwrap();
        let bottom = BrauerDiagram::assemble(g, g, &id).unwrap();
        let (d, loops) = top.compose(&bottom).unwrap();
        let (_, _, sigma) = d.decompose();
        if d.top_arcs() != h.arcs.len() {
            return GroupAlgebraElement::zero(k);
        }
        GroupAlgebraElement::term(sigma, LaurentPoly::monomial(1, loops as i64))
    }

    #[test]
    fn pairing_agrees_with_diagram_product() {
        for m in 1..=6 {
            for t in 0..=m / 2 {
                let hs = half_diagrams(m, t);
                for h in &hs {
                    for g in &hs {
                        assert_eq!(pairing(h, g), pairing_by_composition(h, g), "{h} {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn gram_is_star_symmetric() {
        for m in 1..=6 {
            for t in 0..=m / 2 {
                let c = cell_gram(m, t).unwrap();
                for a in 0..c.basis.len() {
                    for b in 0..c.basis.len() {
                        assert_eq!(c.gram[a][b], c.gram[b][a].star());
                    }
                }
            }
        }
    }

    #[test]
    fn small_gram_determinants() {
        assert_eq!(gram_det(2, 1).unwrap(), LaurentPoly::delta());
        assert_eq!(gram_det(2, 0).unwrap(), LaurentPoly::one());
        // three half diagrams on four points, pairwise joined into one loop
        let d = LaurentPoly::delta();
        let two = LaurentPoly::constant(2);
        let expected = &(&(&d - &LaurentPoly::one()).pow(2) * &(&d + &two)) * &d.pow(3);
        assert_eq!(gram_det(4, 2).unwrap(), expected);
    }

    #[test]
    fn routes_agree() {
        for m in 1..=5 {
            for t in 0..=m / 2 {
                let direct = gram_det_direct(m, t).unwrap();
                let datum = cell_gram(m, t).unwrap();
                let mut num = LaurentPoly::one();
                let mut den = BigInt::one();
                for f in &datum.factors {
                    num = &num * &f.numerator.pow(f.multiplicity as u32);
                    den *= num_traits::pow(f.denominator.clone(), f.multiplicity as usize);
                }
                assert_eq!(num.div_exact_scalar(&den).unwrap(), direct, "m={m} t={t}");
                assert_eq!(datum.det, direct);
            }
        }
    }

    #[test]
    fn specialisation_commutes_with_determinant() {
        for (m, t) in [(3, 1), (4, 1), (5, 2)] {
            let c = cell_gram(m, t).unwrap();
            for x in [-3i64, 2, 5] {
                let xq = ExactRational::from_integer(x.into());
                let mat: Vec<Vec<ExactRational>> = c
                    .scalar_gram()
                    .iter()
                    .map(|row| row.iter().map(|p| p.eval(&xq).unwrap()).collect())
                    .collect();
                assert_eq!(det_rational(&mat).unwrap(), c.det.eval(&xq).unwrap());
            }
        }
    }

    #[test]
    fn bounds() {
        assert!(matches!(cell_gram(7, 1), Err(Error::OutOfBounds(_))));
        assert!(matches!(cell_gram(3, 2), Err(Error::InvalidInput(_))));
    }
}
