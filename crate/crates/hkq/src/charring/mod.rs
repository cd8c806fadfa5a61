//! Exact character ring of a compact group (torus, Sp(1), Sp(n)).
//!
//! Characters are integer Laurent polynomials in the variables of a maximal
//! torus, stored exactly with arbitrary-precision coefficients. The module
//! provides the Weyl character formula by alternating-sum quotient, and the
//! inductive recovery of irreducible multiplicities from a graded character:
//! pick a maximal weight, read off its coefficient, subtract that multiple of
//! the irreducible character, repeat until the polynomial vanishes.

mod weyl;

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genseries::TruncatedSeries;

pub use weyl::WeylElement;

/// An integer weight vector for a torus, i.e. the exponent `a` of the
/// monomial character `t̃^a`.
///
/// `Ord` is lexicographic, which is the tie-break order used when picking a
/// maximal weight during decomposition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The compact groups whose character theory is implemented.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupDescriptor {
    /// A torus of the given rank; trivial Weyl group, every weight dominant.
    Torus(usize),
    /// Sp(1) ≅ SU(2); rank 1, Weyl group Z/2 acting by sign.
    Sp1,
    /// Sp(n); rank n, Weyl group the signed permutations (order `2^n n!`).
    Sp(usize),
}

impl GroupDescriptor {
    /// Rank of the maximal torus.
    pub fn rank(&self) -> usize {
        match *self {
            GroupDescriptor::Torus(r) => r,
            GroupDescriptor::Sp1 => 1,
            GroupDescriptor::Sp(n) => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank() == 0 {
            return Err(Error::Domain("group rank must be at least 1".into()));
        }
        Ok(())
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        self.validate()?;
        if w.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "weight {w} has length {}, group rank is {}",
                w.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// Dominance test: for Sp(n) weakly decreasing nonnegative entries, for a
    /// torus every weight.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        match *self {
            GroupDescriptor::Torus(_) => true,
            GroupDescriptor::Sp1 | GroupDescriptor::Sp(_) => {
                w.0.windows(2).all(|p| p[0] >= p[1]) && w.0.last().is_none_or(|&c| c >= 0)
            }
        }
    }

    /// Half-sum of positive roots, `(n, n-1, …, 1)` for Sp(n).
    fn rho(&self) -> Weight {
        match *self {
            GroupDescriptor::Torus(r) => Weight::zero(r),
            GroupDescriptor::Sp1 => Weight(vec![1]),
            GroupDescriptor::Sp(n) => Weight((1..=n as i64).rev().collect()),
        }
    }

    fn weyl_elements(&self) -> Vec<WeylElement> {
        match *self {
            GroupDescriptor::Torus(r) => vec![WeylElement::identity(r)],
            GroupDescriptor::Sp1 => weyl::signed_permutations(1),
            GroupDescriptor::Sp(n) => weyl::signed_permutations(n),
        }
    }

    /// Generators of the Weyl group, enough to test invariance cheaply.
    fn weyl_generators(&self) -> Vec<WeylElement> {
        let n = self.rank();
        match *self {
            GroupDescriptor::Torus(_) => vec![],
            GroupDescriptor::Sp1 | GroupDescriptor::Sp(_) => {
                let mut gens = Vec::new();
                for i in 0..n.saturating_sub(1) {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(i, i + 1);
                    gens.push(WeylElement {
                        perm,
                        signs: vec![1; n],
                        det: -1,
                    });
                }
                let mut signs = vec![1i64; n];
                signs[n - 1] = -1;
                gens.push(WeylElement {
                    perm: (0..n).collect(),
                    signs,
                    det: -1,
                });
                gens
            }
        }
    }

    /// Parse a textual descriptor: `sp1`, `sp2`, …, or `torus:R`.
    pub fn parse(s: &str) -> Result<GroupDescriptor> {
        let s = s.trim().to_ascii_lowercase();
        let g = if let Some(rest) = s.strip_prefix("torus") {
            let rest = rest.trim_start_matches([':', '(']).trim_end_matches(')');
            let r: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad torus rank in {s:?}")))?;
            GroupDescriptor::Torus(r)
        } else if let Some(rest) = s.strip_prefix("sp") {
            let rest = rest.trim_start_matches('(').trim_end_matches(')');
            let n: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad symplectic rank in {s:?}")))?;
            if n == 1 {
                GroupDescriptor::Sp1
            } else {
                GroupDescriptor::Sp(n)
            }
        } else {
            return Err(Error::Parse(format!(
                "unknown group {s:?} (expected sp<N> or torus:<R>)"
            )));
        };
        g.validate()?;
        Ok(g)
    }
}

/// An integer Laurent polynomial in the torus variables: a finite map from
/// weights to nonzero multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(w: Weight, coeff: impl Into<BigInt>) -> Self {
        let mut c = Character::zero(w.len());
        c.add_term(w, coeff.into());
        c
    }

    pub fn one(rank: usize) -> Self {
        Character::monomial(Weight::zero(rank), 1)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `coeff · t̃^w`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, w: Weight, coeff: BigInt) {
        debug_assert_eq!(w.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        assert_eq!(self.rank, other.rank, "character rank mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        assert_eq!(self.rank, other.rank, "character rank mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> Character {
        if s.is_zero() {
            return Character::zero(self.rank);
        }
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(self.rank, other.rank, "character rank mismatch");
        let mut out = Character::zero(self.rank);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.add(wb), ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial `t̃^w`.
    pub fn mul_monomial(&self, w: &Weight) -> Character {
        assert_eq!(w.len(), self.rank);
        let mut out = Character::zero(self.rank);
        for (wa, ca) in &self.terms {
            out.terms.insert(wa.add(w), ca.clone());
        }
        out
    }

    /// Evaluation at `t̃ = (1,…,1)`: the dimension when `self` is a genuine
    /// character.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lexicographically largest weight with its coefficient.
    pub fn lex_max(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Invariance under the Weyl group of `g`, checked on generators.
    pub fn is_weyl_invariant(&self, g: GroupDescriptor) -> bool {
        g.weyl_generators().iter().all(|e| {
            self.terms
                .iter()
                .all(|(w, c)| self.terms.get(&e.apply(w)) == Some(c))
        })
    }

    /// Forget the listed torus variables (set them to 1), summing
    /// multiplicities over the removed coordinates.
    pub fn forget_vars(&self, vars: &BTreeSet<usize>) -> Character {
        let new_rank = self.rank - vars.len();
        let mut out = Character::zero(new_rank);
        for (w, c) in &self.terms {
            let kept: Vec<i64> =
                w.0.iter()
                    .enumerate()
                    .filter(|(i, _)| !vars.contains(i))
                    .map(|(_, &x)| x)
                    .collect();
            out.add_term(Weight(kept), c.clone());
        }
        out
    }

    fn min_exponents(&self) -> Weight {
        let mut m = vec![i64::MAX; self.rank];
        for w in self.terms.keys() {
            for (mi, &x) in m.iter_mut().zip(&w.0) {
                *mi = (*mi).min(x);
            }
        }
        Weight(m)
    }

    fn shifted(&self, by: &Weight) -> Character {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.terms.insert(w.add(by), c.clone());
        }
        out
    }

    /// Exact division in the Laurent polynomial ring. Both operands are
    /// shifted so their Newton polytopes touch the coordinate origin, then
    /// ordinary multivariate division by the lex-leading term runs; a leading
    /// term that fails to divide means the quotient does not exist.
    pub fn div_exact(&self, den: &Character) -> Result<Character> {
        assert_eq!(self.rank, den.rank, "character rank mismatch");
        if den.is_zero() {
            return Err(Error::Domain("division by the zero character".into()));
        }
        if self.is_zero() {
            return Ok(Character::zero(self.rank));
        }
        let nmin = self.min_exponents();
        let dmin = den.min_exponents();
        let num = self.shifted(&Weight::zero(self.rank).sub(&nmin));
        let den0 = den.shifted(&Weight::zero(self.rank).sub(&dmin));
        let (dw, dc) = {
            let (w, c) = den0.lex_max().expect("nonzero divisor");
            (w.clone(), c.clone())
        };

        let mut rem = num;
        let mut quot = Character::zero(self.rank);
        while let Some((rw, rc)) = rem.lex_max() {
            let qw = rw.sub(&dw);
            if qw.0.iter().any(|&x| x < 0) {
                return Err(Error::InexactDivision(format!(
                    "leading monomial {rw} not divisible by {dw}"
                )));
            }
            let (qc, rr) = rc.div_rem(&dc);
            if !rr.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {rc} not divisible by {dc}"
                )));
            }
            for (w, c) in &den0.terms {
                rem.add_term(w.add(&qw), -(c * &qc));
            }
            quot.add_term(qw, qc);
        }
        Ok(quot.shifted(&nmin.sub(&dmin)))
    }
}

/// A finite multiplicity table: dominant highest weight ↦ positive count.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Multiplicities {
    entries: BTreeMap<Weight, BigInt>,
}

impl Multiplicities {
    pub fn new() -> Self {
        Multiplicities::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, w: &Weight) -> Option<&BigInt> {
        self.entries.get(w)
    }

    pub fn insert(&mut self, w: Weight, m: BigInt) -> Result<()> {
        if m <= BigInt::zero() {
            return Err(Error::Domain(format!(
                "multiplicity of {w} must be positive, got {m}"
            )));
        }
        *self.entries.entry(w).or_insert_with(BigInt::zero) += m;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.entries.iter()
    }

    /// Rebuild the character `Σ m_λ χ_λ`.
    pub fn compose(&self, g: GroupDescriptor) -> Result<Character> {
        let mut acc = Character::zero(g.rank());
        for (lambda, m) in &self.entries {
            acc = acc.add(&weyl_character(g, lambda)?.scale(m));
        }
        Ok(acc)
    }
}

impl fmt::Display for Multiplicities {
    /// Compact map form, e.g. `{"(2)":1,"(0)":1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "\"{w}\":{m}")?;
        }
        write!(f, "}}")
    }
}

/// Full Weyl orbit of a weight with signs: all pairs `(w(x), ε(w))`.
///
/// Weights with nontrivial stabiliser can occur with both signs (e.g. the
/// zero weight of Sp(1)); the result is the set of distinct pairs.
pub fn weyl_group_orbit(g: GroupDescriptor, w: &Weight) -> Result<BTreeSet<(Weight, i64)>> {
    g.check_weight(w)?;
    let mut out = BTreeSet::new();
    for e in g.weyl_elements() {
        out.insert((e.apply(w), e.det));
    }
    Ok(out)
}

/// Alternating orbit sum `Σ_w ε(w) t̃^{w(x)}`.
fn alternating_sum(g: GroupDescriptor, x: &Weight) -> Character {
    let mut acc = Character::zero(g.rank());
    for e in g.weyl_elements() {
        acc.add_term(e.apply(x), BigInt::from(e.det));
    }
    acc
}

/// Irreducible character of highest weight `λ` by the Weyl character formula,
/// computed as an exact quotient of alternating sums. For a torus the
/// character is the monomial `t̃^λ` itself.
pub fn weyl_character(g: GroupDescriptor, lambda: &Weight) -> Result<Character> {
    g.check_weight(lambda)?;
    if !g.is_dominant(lambda) {
        return Err(Error::Domain(format!("weight {lambda} is not dominant")));
    }
    match g {
        GroupDescriptor::Torus(_) => Ok(Character::monomial(lambda.clone(), 1)),
        GroupDescriptor::Sp1 | GroupDescriptor::Sp(_) => {
            let rho = g.rho();
            let num = alternating_sum(g, &lambda.add(&rho));
            let den = alternating_sum(g, &rho);
            num.div_exact(&den)
                .map_err(|e| Error::InexactDivision(format!("Weyl character quotient failed: {e}")))
        }
    }
}

/// Dimension of the irreducible module of highest weight `λ` by the Weyl
/// dimension formula (product over positive roots). Independent of the
/// character expansion; used for bookkeeping and cross-checks.
pub fn dim_irrep(g: GroupDescriptor, lambda: &Weight) -> Result<BigInt> {
    g.check_weight(lambda)?;
    if !g.is_dominant(lambda) {
        return Err(Error::Domain(format!("weight {lambda} is not dominant")));
    }
    match g {
        GroupDescriptor::Torus(_) => Ok(BigInt::one()),
        GroupDescriptor::Sp1 | GroupDescriptor::Sp(_) => {
            let n = g.rank();
            let rho = g.rho();
            let l: Vec<i64> = lambda.add(&rho).0;
            let r: Vec<i64> = rho.0;
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for i in 0..n {
                // long root 2e_i
                num *= BigInt::from(l[i]);
                den *= BigInt::from(r[i]);
                for j in (i + 1)..n {
                    // e_i - e_j and e_i + e_j
                    num *= BigInt::from(l[i] - l[j]) * BigInt::from(l[i] + l[j]);
                    den *= BigInt::from(r[i] - r[j]) * BigInt::from(r[i] + r[j]);
                }
            }
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            Ok(q)
        }
    }
}

/// Largest weight occurring in `h`: lexicographically greatest, which is also
/// maximal in the dominance order among the occurring weights.
pub fn maximal_weight(g: GroupDescriptor, h: &Character) -> Result<Weight> {
    if h.rank() != g.rank() {
        return Err(Error::Dimension(format!(
            "character rank {} does not match group rank {}",
            h.rank(),
            g.rank()
        )));
    }
    h.lex_max()
        .map(|(w, _)| w.clone())
        .ok_or(Error::EmptyCharacter)
}

/// Decompose a genuine character into irreducible multiplicities.
///
/// The input is validated to be Weyl-invariant with nonnegative coefficients.
/// The loop subtracts `m_λ χ_λ` at the maximal weight until the polynomial
/// vanishes; a negative multiplicity or a non-dominant maximal weight along
/// the way means the input was not a character.
pub fn decompose_character(g: GroupDescriptor, h: &Character) -> Result<Multiplicities> {
    if h.rank() != g.rank() {
        return Err(Error::Dimension(format!(
            "character rank {} does not match group rank {}",
            h.rank(),
            g.rank()
        )));
    }
    if !h.has_nonnegative_coeffs() {
        return Err(Error::NotACharacter(
            "input has a negative multiplicity".into(),
        ));
    }
    if !h.is_weyl_invariant(g) {
        return Err(Error::NotACharacter("input is not Weyl-invariant".into()));
    }

    let mut rem = h.clone();
    let mut out = Multiplicities::new();
    while let Some((lambda, m)) = rem.lex_max().map(|(w, c)| (w.clone(), c.clone())) {
        if m.is_negative() {
            return Err(Error::NotACharacter(format!(
                "maximal weight {lambda} has negative coefficient {m}"
            )));
        }
        if !g.is_dominant(&lambda) {
            return Err(Error::NotACharacter(format!(
                "maximal weight {lambda} is not dominant"
            )));
        }
        let chi = weyl_character(g, &lambda)?;
        rem = rem.sub(&chi.scale(&m));
        out.insert(lambda, m)?;
    }
    Ok(out)
}

/// Replace each dominant-weight symbol `t̃^λ` in every coefficient of `series`
/// by the irreducible character `χ_λ`, degree by degree.
pub fn substitute_characters(
    g: GroupDescriptor,
    series: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    if series.rank() != g.rank() {
        return Err(Error::Dimension(format!(
            "series rank {} does not match group rank {}",
            series.rank(),
            g.rank()
        )));
    }
    let mut out = TruncatedSeries::zero(series.order(), series.rank());
    for (d, coeff) in series.coeffs() {
        let mut acc = Character::zero(g.rank());
        for (lambda, m) in coeff.terms() {
            if !g.is_dominant(lambda) {
                return Err(Error::Domain(format!(
                    "symbol weight {lambda} at degree {d} is not dominant"
                )));
            }
            acc = acc.add(&weyl_character(g, lambda)?.scale(m));
        }
        out.set_coeff(*d, acc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON representation
//
// Character: {"terms": [{"w": [ints], "m": int}, ...]}
// Multiplicities: the same shape.
// ---------------------------------------------------------------------------

pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    let n = serde_json::Number::from_str(&c.to_string())
        .expect("integer literal is a valid JSON number");
    serde_json::Value::Number(n)
}

pub(crate) fn serialize_bigint<S: serde::Serializer>(
    v: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    bigint_to_json(v).serialize(s)
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => {
            let s = n.to_string();
            if s.contains(['.', 'e', 'E']) {
                return Err(Error::Parse(format!("expected integer, got {s}")));
            }
            BigInt::from_str(&s).map_err(|e| Error::Parse(format!("bad integer {s}: {e}")))
        }
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

/// Terms are listed by descending weight (highest component first).
fn terms_to_json<'a>(
    terms: impl DoubleEndedIterator<Item = (&'a Weight, &'a BigInt)>,
) -> serde_json::Value {
    let list: Vec<serde_json::Value> = terms
        .rev()
        .map(|(w, m)| {
            serde_json::json!({
                "w": w.0,
                "m": bigint_to_json(m),
            })
        })
        .collect();
    serde_json::json!({ "terms": list })
}

fn terms_from_json(v: &serde_json::Value) -> Result<Vec<(Weight, BigInt)>> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| Error::Parse("expected object with a \"terms\" array".into()))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let w = t
            .get("w")
            .and_then(|w| w.as_array())
            .ok_or_else(|| Error::Parse("term is missing \"w\"".into()))?;
        let coords = w
            .iter()
            .map(|x| {
                x.as_i64()
                    .ok_or_else(|| Error::Parse(format!("bad weight entry {x}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        let m = t
            .get("m")
            .ok_or_else(|| Error::Parse("term is missing \"m\"".into()))?;
        out.push((Weight(coords), bigint_from_json(m)?));
    }
    Ok(out)
}

impl Character {
    pub fn to_json(&self) -> serde_json::Value {
        terms_to_json(self.terms.iter())
    }

    /// Parse the JSON form. `rank` disambiguates the zero character; weights
    /// of any term must match it.
    pub fn from_json(rank: usize, v: &serde_json::Value) -> Result<Character> {
        let mut c = Character::zero(rank);
        for (w, m) in terms_from_json(v)? {
            if w.len() != rank {
                return Err(Error::Dimension(format!(
                    "weight {w} has length {}, expected {rank}",
                    w.len()
                )));
            }
            c.add_term(w, m);
        }
        Ok(c)
    }
}

impl Multiplicities {
    pub fn to_json(&self) -> serde_json::Value {
        terms_to_json(self.entries.iter())
    }

    pub fn from_json(rank: usize, v: &serde_json::Value) -> Result<Multiplicities> {
        let mut out = Multiplicities::new();
        for (w, m) in terms_from_json(v)? {
            if w.len() != rank {
                return Err(Error::Dimension(format!(
                    "weight {w} has length {}, expected {rank}",
                    w.len()
                )));
            }
            out.insert(w, m)?;
        }
        Ok(out)
    }
}
