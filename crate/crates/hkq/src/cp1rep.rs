//! Dimension bookkeeping over the twistor sphere: cohomology of the line
//! bundles `O(d)` on the projective line, assembly of super Hilbert space
//! dimensions from a multiplicity ledger, and the trivialising twist.
//!
//! Dimensions follow standard Borel–Weil–Bott: `h⁰(O(d)) = d+1` for `d ≥ 0`,
//! `h¹(O(d)) = −d−1` for `d ≤ −2`, and both vanish at `d = −1`. In
//! particular `h¹(O) = 0` at `d = 0`, so the degree-zero super space is
//! `(1, 0)`; this is the convention every invariant below (Serre duality,
//! Riemann–Roch) requires.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::charring::{dim_irrep, GroupDescriptor, Weight};
use crate::error::{Error, Result};

/// Even/odd dimensions of a super vector space (here `H⁰ ⊕ H¹`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: i64,
    pub odd: i64,
}

impl SuperDim {
    pub fn euler_characteristic(&self) -> i64 {
        self.even - self.odd
    }
}

/// Cohomology dimensions of `O(d)` on the projective line.
pub fn cohomology_dims(d: i64) -> SuperDim {
    if d >= 0 {
        SuperDim {
            even: d + 1,
            odd: 0,
        }
    } else if d == -1 {
        SuperDim { even: 0, odd: 0 }
    } else {
        SuperDim {
            even: 0,
            odd: -d - 1,
        }
    }
}

/// One ledger row: at grading degree `d`, the highest weight `λ` occurs with
/// multiplicity `m ≥ 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub d: i64,
    pub lambda: Weight,
    pub m: u64,
}

/// Pure combinatorial record of the isotypical decomposition per degree.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct QuantumLedger {
    pub entries: Vec<LedgerEntry>,
}

impl QuantumLedger {
    pub fn new(entries: Vec<LedgerEntry>) -> Self {
        QuantumLedger { entries }
    }

    fn validate(&self, group: GroupDescriptor) -> Result<()> {
        for e in &self.entries {
            if e.lambda.len() != group.rank() {
                return Err(Error::Dimension(format!(
                    "ledger weight {} has length {}, group rank is {}",
                    e.lambda,
                    e.lambda.len(),
                    group.rank()
                )));
            }
            if !group.is_dominant(&e.lambda) {
                return Err(Error::Domain(format!(
                    "ledger weight {} is not dominant",
                    e.lambda
                )));
            }
            if e.m == 0 {
                return Err(Error::Domain(format!(
                    "ledger multiplicity at degree {} must be positive",
                    e.d
                )));
            }
        }
        Ok(())
    }
}

/// Per-degree even/odd dimensions of the quantum super Hilbert space: each
/// ledger row contributes `m · dim W^(d) · dim V_λ`, with `W^(d)` the degree-d
/// cohomology super space.
pub fn super_hilbert_dims(
    ledger: &QuantumLedger,
    group: GroupDescriptor,
) -> Result<BTreeMap<i64, (BigInt, BigInt)>> {
    ledger.validate(group)?;
    let mut out: BTreeMap<i64, (BigInt, BigInt)> = BTreeMap::new();
    for e in &ledger.entries {
        let w = cohomology_dims(e.d);
        let dim_v = dim_irrep(group, &e.lambda)?;
        let factor = BigInt::from(e.m) * &dim_v;
        let slot = out
            .entry(e.d)
            .or_insert_with(|| (BigInt::zero(), BigInt::zero()));
        slot.0 += BigInt::from(w.even) * &factor;
        slot.1 += BigInt::from(w.odd) * &factor;
    }
    Ok(out)
}

/// One row of the twisted table: after tensoring by the inverse line bundle,
/// the `(d, λ, j)` component has dimension `dim V_λ · dim W^(0)` — the
/// degree dependence of the sphere factor disappears.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwistRow {
    pub d: i64,
    pub lambda: Weight,
    pub j: u64,
    #[serde(serialize_with = "crate::charring::serialize_bigint")]
    pub dim: BigInt,
}

/// Twisted dimension table, one row per `(d, λ, j)` with `j = 1..=m`.
pub fn twist_dims(ledger: &QuantumLedger, group: GroupDescriptor) -> Result<Vec<TwistRow>> {
    ledger.validate(group)?;
    let w0 = cohomology_dims(0);
    let mut out = Vec::new();
    for e in &ledger.entries {
        let dim_v = dim_irrep(group, &e.lambda)?;
        for j in 1..=e.m {
            out.push(TwistRow {
                d: e.d,
                lambda: e.lambda.clone(),
                j,
                dim: BigInt::from(w0.even + w0.odd) * &dim_v,
            });
        }
    }
    Ok(out)
}
