//! Truncated Laurent series in the grading variable `t` with exact
//! [`Character`] coefficients, rational closed forms, and the fixed-point
//! localisation engine.
//!
//! A series of order `N` stores coefficients for degrees `d ∈ [−N, N]`;
//! degrees beyond the order are undefined, not zero, and comparisons only
//! look at the common window. All arithmetic is exact and deterministic.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charring::{Character, Weight};
use crate::error::{Error, Result};

/// A monomial `t^{t_deg} · t̃^{weight}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Monomial {
    #[serde(rename = "t")]
    pub t_deg: i64,
    #[serde(rename = "w")]
    pub weight: Weight,
}

impl Monomial {
    pub fn new(t_deg: i64, weight: Weight) -> Self {
        Monomial { t_deg, weight }
    }

    /// `t^d` with trivial torus part of the given rank.
    pub fn t_power(t_deg: i64, rank: usize) -> Self {
        Monomial {
            t_deg,
            weight: Weight::zero(rank),
        }
    }
}

/// A rational function `numerator / ∏_i (1 − t^{d_i} t̃^{w_i})` with a single
/// monomial numerator. Every denominator factor must have `d_i > 0`, which
/// fixes the expansion direction: each factor is expanded as a geometric
/// series in positive powers of `t`.
#[derive(Clone, Debug)]
pub struct RationalForm {
    pub numerator: Monomial,
    pub denominators: Vec<Monomial>,
}

impl RationalForm {
    pub fn new(numerator: Monomial, denominators: Vec<Monomial>) -> Self {
        RationalForm {
            numerator,
            denominators,
        }
    }

    fn rank(&self) -> usize {
        self.numerator.weight.len()
    }

    fn validate(&self) -> Result<()> {
        for d in &self.denominators {
            if d.weight.len() != self.rank() {
                return Err(Error::Dimension(format!(
                    "denominator weight length {} does not match numerator rank {}",
                    d.weight.len(),
                    self.rank()
                )));
            }
            if d.t_deg <= 0 {
                return Err(Error::AmbiguousExpansion(format!(
                    "denominator factor (1 - t^{} t̃^{}) must have positive t-degree",
                    d.t_deg, d.weight
                )));
            }
        }
        Ok(())
    }
}

/// Bundle and cotangent weights of one isolated torus fixed point: the
/// contribution `sign · t^{bundle} / ∏_i (1 − t^{m_i})` to a localised series.
///
/// `sign` supports the super-space variant with signed bundle weights; it
/// defaults to `+1` and is omitted from JSON when trivial.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedPointDatum {
    pub bundle: Monomial,
    #[serde(default = "default_sign", skip_serializing_if = "sign_is_one")]
    pub sign: i64,
    pub cotangent: Vec<Monomial>,
}

fn default_sign() -> i64 {
    1
}

#[allow(clippy::trivially_copy_pass_by_ref)]
fn sign_is_one(s: &i64) -> bool {
    *s == 1
}

impl FixedPointDatum {
    pub fn new(bundle: Monomial, cotangent: Vec<Monomial>) -> Self {
        FixedPointDatum {
            bundle,
            sign: 1,
            cotangent,
        }
    }

    pub fn rational_form(&self) -> RationalForm {
        RationalForm::new(self.bundle.clone(), self.cotangent.clone())
    }
}

/// Wire format for a list of fixed points: `{"points": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedPointSet {
    pub points: Vec<FixedPointDatum>,
}

/// A Laurent series in `t` truncated at order `N`, with character
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    order: i64,
    rank: usize,
    coeffs: BTreeMap<i64, Character>,
}

impl TruncatedSeries {
    pub fn zero(order: i64, rank: usize) -> Self {
        assert!(order >= 0, "series order must be nonnegative");
        TruncatedSeries {
            order,
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^d` (zero when nothing is stored). Only meaningful
    /// for `|d| ≤ order`.
    pub fn coeff(&self, d: i64) -> Character {
        debug_assert!(d.abs() <= self.order, "degree {d} beyond order");
        self.coeffs
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Character::zero(self.rank))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &Character)> {
        self.coeffs.iter()
    }

    pub fn set_coeff(&mut self, d: i64, c: Character) {
        assert!(
            d.abs() <= self.order,
            "degree {d} beyond order {}",
            self.order
        );
        assert_eq!(c.rank(), self.rank, "coefficient rank mismatch");
        if c.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, c);
        }
    }

    pub fn add_to_coeff(&mut self, d: i64, c: &Character) {
        let cur = self.coeff(d);
        self.set_coeff(d, cur.add(c));
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let (a, b) = unify_ranks(self, other);
        let order = a.order.min(b.order);
        let mut out = TruncatedSeries::zero(order, a.rank);
        for (&d, c) in a.coeffs.iter().chain(b.coeffs.iter()) {
            if d.abs() <= order {
                out.add_to_coeff(d, c);
            }
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.order, self.rank);
        if s.is_zero() {
            return out;
        }
        for (&d, c) in &self.coeffs {
            out.set_coeff(d, c.scale(s));
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let (a, b) = unify_ranks(self, other);
        let order = a.order.min(b.order);
        let mut out = TruncatedSeries::zero(order, a.rank);
        for (&da, ca) in &a.coeffs {
            for (&db, cb) in &b.coeffs {
                let d = da + db;
                if d.abs() <= order {
                    out.add_to_coeff(d, &ca.mul(cb));
                }
            }
        }
        out
    }

    /// Equality up to the smaller of the two orders.
    pub fn eq_up_to_order(&self, other: &TruncatedSeries) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let order = self.order.min(other.order);
        for d in -order..=order {
            if self.coeffs.get(&d) != other.coeffs.get(&d) {
                return false;
            }
        }
        true
    }

    /// Set the listed torus variables to 1, summing multiplicities over the
    /// forgotten coordinates.
    pub fn specialize(&self, vars: &[usize]) -> Result<TruncatedSeries> {
        let set: BTreeSet<usize> = vars.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&v| v >= self.rank) {
            return Err(Error::Dimension(format!(
                "variable index {bad} out of range for rank {}",
                self.rank
            )));
        }
        let mut out = TruncatedSeries::zero(self.order, self.rank - set.len());
        for (&d, c) in &self.coeffs {
            out.set_coeff(d, c.forget_vars(&set));
        }
        Ok(out)
    }

    /// Per-degree total rank: the coefficient evaluated at `t̃ = (1,…,1)`.
    pub fn rank_table(&self) -> Vec<(i64, BigInt)> {
        self.coeffs
            .iter()
            .map(|(&d, c)| (d, c.eval_at_ones()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(&d, c)| serde_json::json!({ "d": d, "char": c.to_json() }))
            .collect();
        serde_json::json!({ "order": self.order, "coeffs": coeffs })
    }

    pub fn from_json(rank: usize, v: &serde_json::Value) -> Result<TruncatedSeries> {
        let order = v
            .get("order")
            .and_then(|o| o.as_i64())
            .ok_or_else(|| Error::Parse("series is missing \"order\"".into()))?;
        if order < 0 {
            return Err(Error::Parse(format!("negative series order {order}")));
        }
        let mut out = TruncatedSeries::zero(order, rank);
        let coeffs = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::Parse("series is missing \"coeffs\"".into()))?;
        for entry in coeffs {
            let d = entry
                .get("d")
                .and_then(|d| d.as_i64())
                .ok_or_else(|| Error::Parse("series coefficient is missing \"d\"".into()))?;
            if d.abs() > order {
                return Err(Error::Parse(format!(
                    "coefficient degree {d} beyond order {order}"
                )));
            }
            let c = entry
                .get("char")
                .ok_or_else(|| Error::Parse("series coefficient is missing \"char\"".into()))?;
            out.set_coeff(d, Character::from_json(rank, c)?);
        }
        Ok(out)
    }
}

/// Zero series carry no terms, so their rank may be adopted from the other
/// operand; any other rank mismatch is a programming error.
fn unify_ranks<'a>(
    a: &'a TruncatedSeries,
    b: &'a TruncatedSeries,
) -> (&'a TruncatedSeries, &'a TruncatedSeries) {
    if a.rank != b.rank {
        assert!(
            a.is_zero() || b.is_zero(),
            "series rank mismatch: {} vs {}",
            a.rank,
            b.rank
        );
    }
    (a, b)
}

/// Expand a rational closed form around `t = 0`, exactly, to the given order.
pub fn expand(f: &RationalForm, order: i64) -> Result<TruncatedSeries> {
    if order < 0 {
        return Err(Error::Domain(format!(
            "order must be nonnegative, got {order}"
        )));
    }
    f.validate()?;
    let rank = f.rank();
    let base = f.numerator.t_deg;
    let mut out = TruncatedSeries::zero(order, rank);
    if base > order {
        return Ok(out);
    }

    // Product of the geometric factors, as a nonnegatively-graded series of
    // degree ≤ order − base; exact because every factor starts at t^0.
    let target = order - base;
    let mut acc: BTreeMap<i64, Character> = BTreeMap::new();
    acc.insert(0, Character::one(rank));
    for den in &f.denominators {
        let mut next: BTreeMap<i64, Character> = BTreeMap::new();
        for (&da, ca) in &acc {
            let mut j = 0i64;
            loop {
                let d = da + j * den.t_deg;
                if d > target {
                    break;
                }
                let shift = Weight(den.weight.0.iter().map(|x| x * j).collect());
                let term = ca.mul_monomial(&shift);
                next.entry(d)
                    .and_modify(|c| *c = c.add(&term))
                    .or_insert(term);
                j += 1;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }

    for (d, c) in acc {
        let shifted = d + base;
        if shifted.abs() <= order {
            out.set_coeff(shifted, c.mul_monomial(&f.numerator.weight));
        }
    }
    Ok(out)
}

/// Localisation over isolated fixed points: the sum of
/// `sign_p · t^{bundle_p} / ∏_i (1 − t^{m_{p,i}})` expanded to the given
/// order. An empty list yields the zero series.
pub fn localize(points: &[FixedPointDatum], order: i64) -> Result<TruncatedSeries> {
    let rank = points.first().map_or(0, |p| p.bundle.weight.len());
    let mut acc = TruncatedSeries::zero(order, rank);
    for p in points {
        if p.bundle.weight.len() != rank {
            return Err(Error::Dimension(format!(
                "fixed points mix torus ranks {} and {}",
                rank,
                p.bundle.weight.len()
            )));
        }
        let term = expand(&p.rational_form(), order)?;
        acc = acc.add(&term.scale(&BigInt::from(p.sign)));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::{weyl_character, GroupDescriptor};

    fn wt(coords: &[i64]) -> Weight {
        Weight(coords.to_vec())
    }

    fn int_series(order: i64, coeffs: &[(i64, i64)]) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order, 0);
        for &(d, c) in coeffs {
            s.set_coeff(d, Character::monomial(Weight(vec![]), c));
        }
        s
    }

    #[test]
    fn expand_inverse_square() {
        // 1/(1−t)² = 1 + 2t + 3t² + 4t³ + 5t⁴ + …
        let f = RationalForm::new(
            Monomial::t_power(0, 0),
            vec![Monomial::t_power(1, 0), Monomial::t_power(1, 0)],
        );
        let s = expand(&f, 4).unwrap();
        assert_eq!(s, int_series(4, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]));
    }

    #[test]
    fn expand_flat_rank_one() {
        // 1/((1−t t̃)(1−t t̃⁻¹)): the t^d coefficient is the Sp(1) character
        // of highest weight (d).
        let f = RationalForm::new(
            Monomial::t_power(0, 1),
            vec![Monomial::new(1, wt(&[1])), Monomial::new(1, wt(&[-1]))],
        );
        let s = expand(&f, 6).unwrap();
        for d in 0..=6i64 {
            let chi = weyl_character(GroupDescriptor::Sp1, &wt(&[d])).unwrap();
            assert_eq!(s.coeff(d), chi, "degree {d}");
        }
    }

    #[test]
    fn expand_shifted_geometric() {
        // t³/(1−t) = t³ + t⁴ + t⁵ + …
        let f = RationalForm::new(Monomial::t_power(3, 0), vec![Monomial::t_power(1, 0)]);
        let s = expand(&f, 5).unwrap();
        assert_eq!(s, int_series(5, &[(3, 1), (4, 1), (5, 1)]));
    }

    #[test]
    fn expand_rejects_zero_t_degree() {
        let f = RationalForm::new(Monomial::t_power(0, 1), vec![Monomial::new(0, wt(&[1]))]);
        assert!(matches!(expand(&f, 3), Err(Error::AmbiguousExpansion(_))));
    }

    #[test]
    fn localize_single_point_matches_expand() {
        let p = FixedPointDatum::new(
            Monomial::t_power(0, 1),
            vec![Monomial::new(1, wt(&[1])), Monomial::new(1, wt(&[-1]))],
        );
        let s = localize(std::slice::from_ref(&p), 20).unwrap();
        let e = expand(&p.rational_form(), 20).unwrap();
        assert_eq!(s, e);
    }

    #[test]
    fn localize_empty_is_zero() {
        let s = localize(&[], 5).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn localize_two_points() {
        // (1 + t²)/(1−t) = 1 + t + 2t² + 2t³ + … (hand expansion, cross-checked
        // against expand on each summand).
        let p1 = FixedPointDatum::new(Monomial::t_power(0, 0), vec![Monomial::t_power(1, 0)]);
        let p2 = FixedPointDatum::new(Monomial::t_power(2, 0), vec![Monomial::t_power(1, 0)]);
        let s = localize(&[p1, p2], 5).unwrap();
        assert_eq!(
            s,
            int_series(5, &[(0, 1), (1, 1), (2, 2), (3, 2), (4, 2), (5, 2)])
        );
    }

    #[test]
    fn series_ring_identities() {
        let one_plus_t = int_series(5, &[(0, 1), (1, 1)]);
        let one_minus_t = int_series(5, &[(0, 1), (1, -1)]);
        assert_eq!(
            one_plus_t.mul(&one_minus_t),
            int_series(5, &[(0, 1), (2, -1)])
        );

        let geo = RationalForm::new(Monomial::t_power(0, 0), vec![Monomial::t_power(1, 0)]);
        let sq = RationalForm::new(
            Monomial::t_power(0, 0),
            vec![Monomial::t_power(1, 0), Monomial::t_power(1, 0)],
        );
        let g = expand(&geo, 10).unwrap();
        assert!(expand(&sq, 10).unwrap().eq_up_to_order(&g.mul(&g)));
    }

    #[test]
    fn specialize_examples() {
        // t(t̃ + t̃⁻¹) with t̃ := 1 gives 2t.
        let mut s = TruncatedSeries::zero(2, 1);
        let mut c = Character::zero(1);
        c.add_term(wt(&[1]), 1.into());
        c.add_term(wt(&[-1]), 1.into());
        s.set_coeff(1, c);
        let sp = s.specialize(&[0]).unwrap();
        assert_eq!(sp, int_series(2, &[(1, 2)]));

        // Zero specialises to zero.
        let z = TruncatedSeries::zero(3, 2);
        assert!(z.specialize(&[0, 1]).unwrap().is_zero());
    }

    /// Number of monomials of total degree `d` in `v` variables, by direct
    /// recursive enumeration.
    fn monomial_count(v: usize, d: i64) -> i64 {
        if v == 0 {
            return i64::from(d == 0);
        }
        if v == 1 {
            return 1;
        }
        (0..=d).map(|j| monomial_count(v - 1, d - j)).sum()
    }

    #[test]
    fn specialize_flat_rank_two_counts_monomials() {
        let f = RationalForm::new(
            Monomial::t_power(0, 2),
            vec![
                Monomial::new(1, wt(&[1, 0])),
                Monomial::new(1, wt(&[-1, 0])),
                Monomial::new(1, wt(&[0, 1])),
                Monomial::new(1, wt(&[0, -1])),
            ],
        );
        let s = expand(&f, 6).unwrap().specialize(&[0, 1]).unwrap();
        for d in 0..=6i64 {
            assert_eq!(
                s.coeff(d).eval_at_ones(),
                BigInt::from(monomial_count(4, d)),
                "degree {d}"
            );
        }
    }

    #[test]
    fn expansion_is_deterministic() {
        let f = RationalForm::new(
            Monomial::t_power(0, 2),
            vec![
                Monomial::new(1, wt(&[1, 0])),
                Monomial::new(2, wt(&[-1, 1])),
                Monomial::new(1, wt(&[0, -1])),
            ],
        );
        assert_eq!(expand(&f, 9).unwrap(), expand(&f, 9).unwrap());
    }

    #[test]
    fn negative_numerator_degrees_are_clipped_consistently() {
        // t⁻³/(1−t) expanded to order 2 keeps degrees −3…−1 out of range
        // below −N? No: −3 ≥ −N only when N ≥ 3; at N=2 degrees −2..2 kept.
        let f = RationalForm::new(Monomial::t_power(-3, 0), vec![Monomial::t_power(1, 0)]);
        let s = expand(&f, 2).unwrap();
        assert_eq!(
            s,
            int_series(2, &[(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn signed_bundle_weights_supported() {
        let plus = FixedPointDatum::new(Monomial::t_power(0, 0), vec![Monomial::t_power(1, 0)]);
        let mut minus =
            FixedPointDatum::new(Monomial::t_power(1, 0), vec![Monomial::t_power(1, 0)]);
        minus.sign = -1;
        // 1/(1−t) − t/(1−t) = 1.
        let s = localize(&[plus, minus], 8).unwrap();
        assert_eq!(s, int_series(8, &[(0, 1)]));
    }

    #[test]
    fn series_json_round_trip() {
        let f = RationalForm::new(
            Monomial::t_power(0, 1),
            vec![Monomial::new(1, wt(&[1])), Monomial::new(1, wt(&[-1]))],
        );
        let s = expand(&f, 4).unwrap();
        let v = s.to_json();
        let back = TruncatedSeries::from_json(1, &v).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn fixed_point_set_json_round_trip() {
        let set = FixedPointSet {
            points: vec![FixedPointDatum::new(
                Monomial::t_power(0, 1),
                vec![Monomial::new(1, wt(&[1])), Monomial::new(1, wt(&[-1]))],
            )],
        };
        let text = serde_json::to_string(&set).unwrap();
        assert_eq!(
            text,
            "{\"points\":[{\"bundle\":{\"t\":0,\"w\":[0]},\"cotangent\":[{\"t\":1,\"w\":[1]},{\"t\":1,\"w\":[-1]}]}]}"
        );
        let back: FixedPointSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back.points.len(), 1);
        assert_eq!(back.points[0].sign, 1);
    }
}
