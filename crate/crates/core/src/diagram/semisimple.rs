//! Semisimplicity at a specialised parameter and the type D reporters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::cell::{cell_gram, gram_det, MAX_STRANDS};
use super::BrauerDiagram;
use crate::error::{Error, Result};
use crate::laurent::{det_rational, ExactRational, LaurentPoly};

/// Largest strand count accepted by [`trace_form_determinant`].
const TRACE_FORM_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellValue {
    pub t: usize,
    pub det: LaurentPoly,
    #[serde(serialize_with = "ser_rational")]
    pub value: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimplicityVerdict {
    pub m: usize,
    #[serde(serialize_with = "ser_rational")]
    pub delta: ExactRational,
    pub cells: Vec<CellValue>,
    /// Arc counts `t` of the cells whose form is singular at `delta`.
    pub vanishing: Vec<usize>,
    pub semisimple: bool,
}

fn ser_rational<S: serde::Serializer>(q: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Evaluates every cell determinant of the algebra on `m` strands at `x`.
pub fn semisimple_at(m: usize, x: &ExactRational) -> Result<SemisimplicityVerdict> {
    if m > MAX_STRANDS {
        return Err(Error::OutOfBounds(format!("{m} strands exceeds the bound {MAX_STRANDS}")));
    }
    let mut cells = Vec::new();
    for t in 0..=m / 2 {
        let det = cell_gram(m, t)?.det;
        let value = det.eval(x)?;
        cells.push(CellValue { t, det, value });
    }
    let vanishing: Vec<usize> = cells.iter().filter(|c| c.value.is_zero()).map(|c| c.t).collect();
    Ok(SemisimplicityVerdict { m, delta: x.clone(), semisimple: vanishing.is_empty(), cells, vanishing })
}

/// Determinant of the trace form `(a, b) ↦ tr(L_{ab})` of the left regular
/// representation at `δ = x`, in the diagram basis. Over a field of
/// characteristic zero it is nonzero exactly when the algebra is semisimple.
pub fn trace_form_determinant(m: usize, x: &ExactRational) -> Result<ExactRational> {
    if m > TRACE_FORM_LIMIT {
        return Err(Error::OutOfBounds(format!("trace form limited to {TRACE_FORM_LIMIT} strands")));
    }
    let diagrams = BrauerDiagram::all(m);
    let index: std::collections::HashMap<&BrauerDiagram, usize> =
        diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let power = |l: usize| -> ExactRational { num_traits::pow(x.clone(), l) };
    let n = diagrams.len();
    let mut products = vec![vec![(0usize, 0usize); n]; n];
    for (a, d) in diagrams.iter().enumerate() {
        for (b, e) in diagrams.iter().enumerate() {
            let (p, loops) = d.compose(e)?;
            products[a][b] = (index[&p], loops);
        }
    }
    let traces: Vec<ExactRational> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| products[a][b].0 == b)
                .fold(ExactRational::zero(), |acc, b| acc + power(products[a][b].1))
        })
        .collect();
    let form: Vec<Vec<ExactRational>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (p, loops) = products[a][b];
                    power(loops) * &traces[p]
                })
                .collect()
        })
        .collect();
    det_rational(&form)
}

/// `{i ∈ Z | 4 − 2n ≤ i ≤ n − 2}` without the odd `i` in `[4 − 2n, 3 − n]`.
pub fn z_set(n: usize) -> Vec<i64> {
    let n = n as i64;
    (4 - 2 * n..=n - 2).filter(|&i| !(i <= 3 - n && i % 2 != 0)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DVerdict {
    /// One of the obstructing hypotheses holds.
    NotSemisimple,
    /// Neither hypothesis holds; the criteria only ever prove failure of
    /// semisimplicity, so this is not a certificate.
    NoObstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DReport {
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub delta: ExactRational,
    /// `0` for the rationals, otherwise the prime characteristic.
    pub characteristic: u64,
    /// `δ² ∈ Z(n)` and `δ ≠ 0`.
    pub square_in_z: bool,
    /// `δ = 0` and `n ∉ {1, 3, 5}`.
    pub zero_exception: bool,
    /// `e ∤ n!`; always true in characteristic zero.
    pub char_coprime: bool,
    pub verdict: DVerdict,
}

fn is_prime(e: u64) -> bool {
    e >= 2 && (2..).take_while(|d| d * d <= e).all(|d| !e.is_multiple_of(d))
}

/// Residue of `x` modulo the prime `e`.
fn residue(x: &ExactRational, e: u64) -> Result<u64> {
    let eb = BigInt::from(e);
    let den = x.denom().mod_floor(&eb);
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("{x} has no image in characteristic {e}")));
    }
    // Fermat inverse of the denominator
    let inv = den.modpow(&(&eb - 2u32), &eb);
    let r = (x.numer().mod_floor(&eb) * inv).mod_floor(&eb);
    Ok(r.to_u64().expect("residue below a u64 modulus"))
}

/// Reports whether the type D criteria force non-semisimplicity at `δ = x`.
/// `char_e = None` means characteristic zero.
pub fn d_semisimplicity_report(n: usize, x: &ExactRational, char_e: Option<u64>) -> Result<DReport> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("rank {n} is below 2")));
    }
    let z = z_set(n);
    let exceptional = [1, 3, 5].contains(&n);
    let (characteristic, square_in_z, zero_exception, char_coprime) = match char_e {
        None | Some(0) => {
            let square = x * x;
            let in_z = square.is_integer() && square.to_integer().to_i64().is_some_and(|s| z.contains(&s));
            (0, in_z && !x.is_zero(), x.is_zero() && !exceptional, true)
        }
        Some(e) => {
            if !is_prime(e) {
                return Err(Error::InvalidInput(format!("characteristic {e} is not prime")));
            }
            let r = residue(x, e)? as u128;
            let e128 = e as u128;
            let in_z = z.iter().any(|&i| (r * r) % e128 == (i as i128).rem_euclid(e as i128) as u128);
            (e, in_z && r != 0, r == 0 && !exceptional, e as usize > n)
        }
    };
    let obstructed = (square_in_z || zero_exception) && char_coprime;
    Ok(DReport {
        n,
        delta: x.clone(),
        characteristic,
        square_in_z,
        zero_exception,
        char_coprime,
        verdict: if obstructed { DVerdict::NotSemisimple } else { DVerdict::NoObstruction },
    })
}

/// The type A Gram determinant with `δ` replaced by `δ²`, the form it takes
/// for the algebra of type `D_n`.
pub fn lambda2_gram_d(n: usize, t: usize) -> Result<LaurentPoly> {
    Ok(gram_det(n, t)?.substitute_square())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> ExactRational {
        ExactRational::from_integer(n.into())
    }

    #[test]
    fn verdict_examples() {
        let v = semisimple_at(3, &q(0)).unwrap();
        assert!(v.semisimple);
        assert_eq!(v.cells.iter().map(|c| c.value.clone()).collect::<Vec<_>>(), vec![q(1), q(2)]);
        assert_eq!(semisimple_at(3, &q(1)).unwrap().vanishing, vec![1]);
        assert_eq!(semisimple_at(2, &q(0)).unwrap().vanishing, vec![1]);
        assert!(semisimple_at(7, &q(1)).is_err());
    }

    #[test]
    fn trace_form_agrees_with_cell_forms() {
        for m in 1..=4 {
            for x in -3..=3 {
                let cells = semisimple_at(m, &q(x)).unwrap().semisimple;
                let trace = !trace_form_determinant(m, &q(x)).unwrap().is_zero();
                assert_eq!(cells, trace, "m={m} x={x}");
            }
        }
        let half = ExactRational::new(1.into(), 2.into());
        assert!(semisimple_at(4, &half).unwrap().semisimple);
        assert!(!trace_form_determinant(4, &half).unwrap().is_zero());
    }

    #[test]
    fn z_sets() {
        assert_eq!(z_set(2), vec![0]);
        assert_eq!(z_set(3), vec![-2, 0, 1]);
        assert_eq!(z_set(4), vec![-4, -2, 0, 1, 2]);
        assert!(z_set(1).is_empty());
    }

    #[test]
    fn d_report_examples() {
        let r = d_semisimplicity_report(4, &q(1), None).unwrap();
        assert_eq!(r.verdict, DVerdict::NotSemisimple);
        assert_eq!(d_semisimplicity_report(3, &q(0), None).unwrap().verdict, DVerdict::NoObstruction);
        assert_eq!(d_semisimplicity_report(4, &q(0), None).unwrap().verdict, DVerdict::NotSemisimple);
        assert_eq!(d_semisimplicity_report(4, &q(5), None).unwrap().verdict, DVerdict::NoObstruction);
        // 5 ≡ 1 in characteristic 2 would square into Z(4), but 2 | 4!
        assert_eq!(d_semisimplicity_report(4, &q(5), Some(2)).unwrap().verdict, DVerdict::NoObstruction);
        // 9 ∉ Z(4), but 9 ≡ 2 mod 7 and 2 ∈ Z(4)
        assert_eq!(d_semisimplicity_report(4, &q(3), None).unwrap().verdict, DVerdict::NoObstruction);
        assert_eq!(d_semisimplicity_report(4, &q(3), Some(7)).unwrap().verdict, DVerdict::NotSemisimple);
        assert_eq!(d_semisimplicity_report(4, &q(5), Some(7)).unwrap().verdict, DVerdict::NoObstruction);
        assert_eq!(d_semisimplicity_report(4, &q(7), Some(7)).unwrap().verdict, DVerdict::NotSemisimple);
        assert!(d_semisimplicity_report(4, &q(1), Some(6)).is_err());
        assert!(d_semisimplicity_report(4, &ExactRational::new(1.into(), 7.into()), Some(7)).is_err());
        assert!(d_semisimplicity_report(1, &q(1), None).is_err());
    }

    #[test]
    fn lambda2_examples() {
        let d2 = LaurentPoly::delta().pow(2);
        let one = LaurentPoly::one();
        let two = LaurentPoly::constant(2);
        assert_eq!(lambda2_gram_d(3, 1).unwrap(), &(&d2 - &one).pow(2) * &(&d2 + &two));
        assert_eq!(lambda2_gram_d(2, 1).unwrap(), d2);
        assert_eq!(lambda2_gram_d(5, 0).unwrap(), one);
    }
}
