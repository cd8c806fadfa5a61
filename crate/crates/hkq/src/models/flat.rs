//! Flat quaternionic space of quaternionic dimension `n`.
//!
//! The grading torus fixes only the origin, with cotangent weights
//! `t·t̃_i` and `t·t̃_i⁻¹` there, so the rank-generating series have the
//! closed forms `H(t) = (1−t)^{−2n}` and
//! `H'(t, t̃) = ∏_i (1−t t̃_i)⁻¹ (1−t t̃_i⁻¹)⁻¹`. Each degree carries exactly
//! one irreducible, of highest weight `(d, 0, …, 0)`, with multiplicity one.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::charring::{bigint_to_json, Character, GroupDescriptor, Weight};
use crate::cp1rep::{cohomology_dims, super_hilbert_dims, LedgerEntry, QuantumLedger};
use crate::error::{Error, Result};
use crate::genseries::{expand, FixedPointDatum, Monomial, RationalForm, TruncatedSeries};

/// Flat model: quaternionic dimension and the quantisation parameter.
#[derive(Clone, Copy, Debug)]
pub struct FlatModel {
    pub n: usize,
    pub hbar: f64,
}

impl FlatModel {
    pub fn new(n: usize, hbar: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("quaternionic dimension must be ≥ 1".into()));
        }
        if !hbar.is_finite() || hbar <= 0.0 {
            return Err(Error::Domain(format!("ħ must be positive, got {hbar}")));
        }
        Ok(FlatModel { n, hbar })
    }

    pub fn group(&self) -> GroupDescriptor {
        if self.n == 1 {
            GroupDescriptor::Sp1
        } else {
            GroupDescriptor::Sp(self.n)
        }
    }
}

/// The single fixed point of the torus action: trivial bundle weight and the
/// `2n` cotangent weights `t·t̃_i^{±1}`.
pub fn flat_fixed_points(model: &FlatModel) -> Vec<FixedPointDatum> {
    let n = model.n;
    let mut cotangent = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut up = vec![0i64; n];
        up[i] = 1;
        let mut down = vec![0i64; n];
        down[i] = -1;
        cotangent.push(Monomial::new(1, Weight(up)));
        cotangent.push(Monomial::new(1, Weight(down)));
    }
    vec![FixedPointDatum::new(Monomial::t_power(0, n), cotangent)]
}

/// Closed form `H(t) = 1/(1−t)^{2n}` (no torus variables).
pub fn h_rational(n: usize) -> RationalForm {
    RationalForm::new(
        Monomial::t_power(0, 0),
        vec![Monomial::t_power(1, 0); 2 * n],
    )
}

/// Closed form `H'(t, t̃) = 1/∏_i (1−t t̃_i)(1−t t̃_i⁻¹)`.
pub fn hprime_rational(n: usize) -> RationalForm {
    let point = flat_fixed_points(&FlatModel { n, hbar: 1.0 });
    point[0].rational_form()
}

/// The graded character series `H'(t, t̃)` expanded to the given order.
pub fn hprime_series(n: usize, order: i64) -> Result<TruncatedSeries> {
    expand(&hprime_rational(n), order)
}

/// Multiplicity ledger: one entry `(d, (d,0,…,0), 1)` per degree `0 ≤ d ≤ dmax`.
pub fn flat_multiplicity_ledger(model: &FlatModel, dmax: i64) -> QuantumLedger {
    let mut entries = Vec::new();
    for d in 0..=dmax.max(-1) {
        let mut coords = vec![0i64; model.n];
        coords[0] = d;
        entries.push(LedgerEntry {
            d,
            lambda: Weight(coords),
            m: 1,
        });
    }
    QuantumLedger::new(entries)
}

/// Highest-weight symbol series `G(t, t̃) = Σ_d t^d t̃^{(d,0,…,0)}`.
pub fn g_series(model: &FlatModel, dmax: i64) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(dmax.max(0), model.n);
    for entry in flat_multiplicity_ledger(model, dmax).entries {
        s.set_coeff(entry.d, Character::monomial(entry.lambda, entry.m));
    }
    s
}

/// Closed-form Gaussian pairing `⟨z^α ψ₀, z^β ψ₀⟩` on `C^{2n}` with
/// `ψ₀ = e^{−‖v‖²/4ħ}`: zero off the diagonal, and
/// `∏_i (2ħ)^{α_i+1} α_i! π` on it.
pub fn gaussian_pairing(model: &FlatModel, alpha: &[u64], beta: &[u64]) -> Result<f64> {
    let v = 2 * model.n;
    if alpha.len() != v || beta.len() != v {
        return Err(Error::Dimension(format!(
            "multi-indices must have length {v}, got {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    if alpha != beta {
        return Ok(0.0);
    }
    let mut acc = 1.0f64;
    for &a in alpha {
        let mut fact = 1.0f64;
        for j in 1..=a {
            fact *= j as f64;
        }
        acc *= (2.0 * model.hbar).powi(a as i32 + 1) * fact * std::f64::consts::PI;
    }
    Ok(acc)
}

/// One row of the flat dimension table.
///
/// `even`/`odd` come from the cohomology bookkeeping (so `even` is
/// `(d+1)·binom(2n+d−1, d)`); `stated_even` is the alternative value
/// `(d+1)·binom(2n+d, d)` printed alongside for comparison — the two differ
/// and the table keeps both in view rather than hiding one.
#[derive(Clone, Debug, Serialize)]
pub struct FlatDimRow {
    pub d: i64,
    pub lambda: Weight,
    pub m: u64,
    #[serde(serialize_with = "ser_bigint")]
    pub even: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub odd: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub stated_even: BigInt,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    bigint_to_json(v).serialize(s)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Per-degree super dimensions of the flat quantisation, with the
/// alternative `(d+1)·binom(2n+d, d)` value side by side.
pub fn dimension_table(model: &FlatModel, dmax: i64) -> Result<Vec<FlatDimRow>> {
    let ledger = flat_multiplicity_ledger(model, dmax);
    let dims = super_hilbert_dims(&ledger, model.group())?;
    let n = model.n as i64;
    let mut rows = Vec::new();
    for entry in ledger.entries {
        let (even, odd) = dims
            .get(&entry.d)
            .cloned()
            .unwrap_or_else(|| (BigInt::zero(), BigInt::zero()));
        let w = cohomology_dims(entry.d);
        let stated_even = BigInt::from(w.even) * binomial(2 * n + entry.d, entry.d);
        rows.push(FlatDimRow {
            d: entry.d,
            lambda: entry.lambda,
            m: entry.m,
            even,
            odd,
            stated_even,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::{decompose_character, substitute_characters};
    use crate::genseries::localize;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixed_point_shapes() {
        let m1 = FlatModel::new(1, 1.0).unwrap();
        let pts = flat_fixed_points(&m1);
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].cotangent.len(), 2);
        assert_eq!(pts[0].cotangent[0], Monomial::new(1, Weight(vec![1])));
        assert_eq!(pts[0].cotangent[1], Monomial::new(1, Weight(vec![-1])));
        let m2 = FlatModel::new(2, 1.0).unwrap();
        assert_eq!(flat_fixed_points(&m2)[0].cotangent.len(), 4);
    }

    #[test]
    fn three_routes_to_the_same_series() {
        // Localisation, closed-form expansion, and the character-rebuilt
        // series from the ledger agree exactly.
        for n in 1..=3usize {
            let model = FlatModel::new(n, 1.0).unwrap();
            let order = 12;
            let local = localize(&flat_fixed_points(&model), order).unwrap();
            let closed = expand(&hprime_rational(n), order).unwrap();
            assert_eq!(local, closed, "n = {n}");
            let rebuilt = substitute_characters(model.group(), &g_series(&model, order)).unwrap();
            assert_eq!(local, rebuilt, "n = {n}");
        }
    }

    #[test]
    fn specialisation_matches_h() {
        for n in 1..=3usize {
            let model = FlatModel::new(n, 1.0).unwrap();
            let order = 10;
            let vars: Vec<usize> = (0..n).collect();
            let hp = localize(&flat_fixed_points(&model), order)
                .unwrap()
                .specialize(&vars)
                .unwrap();
            let h = expand(&h_rational(n), order).unwrap();
            assert_eq!(hp, h, "n = {n}");
        }
    }

    #[test]
    fn ledger_examples() {
        let model = FlatModel::new(1, 1.0).unwrap();
        let ledger = flat_multiplicity_ledger(&model, 2);
        assert_eq!(ledger.entries.len(), 3);
        assert_eq!(ledger.entries[2].lambda, Weight(vec![2]));
        assert_eq!(ledger.entries[2].m, 1);
        let trivial = flat_multiplicity_ledger(&model, 0);
        assert_eq!(trivial.entries.len(), 1);
        assert_eq!(trivial.entries[0].lambda, Weight(vec![0]));
    }

    #[test]
    fn per_degree_decomposition_is_one_symmetric_power() {
        for n in 1..=3usize {
            let model = FlatModel::new(n, 1.0).unwrap();
            let series = hprime_series(n, 8).unwrap();
            for d in 0..=8i64 {
                let mults = decompose_character(model.group(), &series.coeff(d)).unwrap();
                assert_eq!(mults.len(), 1, "n = {n}, d = {d}");
                let mut coords = vec![0i64; n];
                coords[0] = d;
                assert_eq!(
                    mults.get(&Weight(coords)),
                    Some(&BigInt::one()),
                    "n = {n}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn gaussian_pairing_diagonal_and_orthality() {
        let model = FlatModel::new(1, 1.0).unwrap();
        assert_eq!(gaussian_pairing(&model, &[1, 0], &[0, 1]).unwrap(), 0.0);
        let mass = gaussian_pairing(&model, &[0, 0], &[0, 0]).unwrap();
        let expected_mass = (2.0 * std::f64::consts::PI).powi(2);
        assert!((mass - expected_mass).abs() < 1e-12 * expected_mass);
        let first = gaussian_pairing(&model, &[1, 0], &[1, 0]).unwrap();
        assert!((first - 2.0 * expected_mass).abs() < 1e-12 * first);
    }

    #[test]
    fn gaussian_pairing_matches_monte_carlo() {
        // Importance-sample the Gaussian measure at n = 1 and compare the
        // moments within three standard errors.
        let model = FlatModel::new(1, 1.0).unwrap();
        let hbar = model.hbar;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let samples = 200_000usize;
        let mass = (2.0 * std::f64::consts::PI * hbar).powi(2);
        for alpha in [[0u64, 0], [1, 0], [2, 1]] {
            let mut sum = 0.0f64;
            let mut sumsq = 0.0f64;
            for _ in 0..samples {
                let mut prod = 1.0f64;
                for &a in &alpha {
                    let x = hbar.sqrt() * crate::models::standard_normal(&mut rng);
                    let y = hbar.sqrt() * crate::models::standard_normal(&mut rng);
                    prod *= (x * x + y * y).powi(a as i32);
                }
                sum += prod;
                sumsq += prod * prod;
            }
            let mean = sum / samples as f64;
            let var = (sumsq / samples as f64 - mean * mean).max(0.0);
            let stderr = (var / samples as f64).sqrt();
            let estimate = mass * mean;
            let exact = gaussian_pairing(&model, &alpha, &alpha).unwrap();
            assert!(
                (estimate - exact).abs() <= 3.0 * mass * stderr + 1e-9,
                "α = {alpha:?}: {estimate} vs {exact} (σ = {})",
                mass * stderr
            );
        }
    }

    /// Number of monomials of total degree `d` in `v` variables, by direct
    /// enumeration.
    fn monomial_count(v: usize, d: i64) -> BigInt {
        if v == 0 {
            return if d == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if v == 1 {
            return BigInt::one();
        }
        (0..=d).map(|j| monomial_count(v - 1, d - j)).sum()
    }

    #[test]
    fn localized_ranks_count_monomials() {
        for n in 1..=3usize {
            let model = FlatModel::new(n, 1.0).unwrap();
            let vars: Vec<usize> = (0..n).collect();
            let ranks = localize(&flat_fixed_points(&model), 12)
                .unwrap()
                .specialize(&vars)
                .unwrap();
            for d in 0..=12i64 {
                assert_eq!(
                    ranks.coeff(d).eval_at_ones(),
                    monomial_count(2 * n, d),
                    "n = {n}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn dimension_table_pins_binomial_to_monomial_count() {
        for n in 1..=3usize {
            let model = FlatModel::new(n, 1.0).unwrap();
            let rows = dimension_table(&model, 8).unwrap();
            for row in rows {
                let d = row.d;
                let count = monomial_count(2 * n, d);
                assert_eq!(row.even, BigInt::from(d + 1) * &count, "n = {n}, d = {d}");
                assert_eq!(row.odd, BigInt::zero());
                assert_eq!(count, binomial(2 * n as i64 + d - 1, d));
                // The alternative bookkeeping value stays visible and differs
                // for d ≥ 1.
                assert_eq!(
                    row.stated_even,
                    BigInt::from(d + 1) * binomial(2 * n as i64 + d, d)
                );
                if d >= 1 {
                    assert_ne!(row.stated_even, row.even);
                }
            }
        }
    }
}
