//! Formal characters with arbitrary-precision multiplicities.

mod cache;
mod exterior;
mod freudenthal;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rootsystem::{GroupType, RootDatum, Weight};
use crate::{Error, Result};

pub use cache::{load_cache, save_cache, CACHE_MAGIC, CACHE_VERSION};
pub use exterior::{
    adams, exterior_algebra, exterior_power, exterior_power_direct, exterior_power_newton,
    DIRECT_EXTERIOR_LIMIT,
};
pub use freudenthal::{dominant_multiplicities, dual_weyl_character};

/// A finite formal sum of weights. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    ambient: GroupType,
    support: BTreeMap<Weight, BigInt>,
}

impl FormalCharacter {
    pub fn zero(ambient: GroupType) -> FormalCharacter {
        FormalCharacter {
            ambient,
            support: BTreeMap::new(),
        }
    }

    /// The character of the trivial one-dimensional module.
    pub fn trivial(ambient: GroupType) -> FormalCharacter {
        let r = ambient.rank();
        FormalCharacter::single(ambient, Weight::zero(r))
    }

    pub fn single(ambient: GroupType, w: Weight) -> FormalCharacter {
        let mut c = FormalCharacter::zero(ambient);
        c.support.insert(w, BigInt::from(1));
        c
    }

    /// Builds a character from `(weight, multiplicity)` pairs, summing repeats.
    pub fn from_terms<I, M>(ambient: GroupType, terms: I) -> Result<FormalCharacter>
    where
        I: IntoIterator<Item = (Weight, M)>,
        M: Into<BigInt>,
    {
        let mut c = FormalCharacter::zero(ambient);
        let rank = c.ambient.rank();
        for (w, m) in terms {
            w.check_len(rank)?;
            c.add_term(w, m.into());
        }
        Ok(c)
    }

    pub fn ambient(&self) -> &GroupType {
        &self.ambient
    }

    pub fn add_term(&mut self, w: Weight, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let slot = self.support.entry(w.clone()).or_default();
        *slot += m;
        if slot.is_zero() {
            self.support.remove(&w);
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> BigInt {
        self.support.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.support.iter()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Sum of multiplicities.
    pub fn dim(&self) -> BigInt {
        self.support.values().sum()
    }

    pub fn has_negative(&self) -> bool {
        self.support.values().any(|m| m.is_negative())
    }

    fn same_ambient(&self, other: &FormalCharacter) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ));
        }
        Ok(())
    }

    /// `self + k * other`.
    pub fn add_scaled(&mut self, other: &FormalCharacter, k: &BigInt) -> Result<()> {
        self.same_ambient(other)?;
        for (w, m) in &other.support {
            let slot = self.support.entry(w.clone()).or_default();
            *slot += m * k;
            if slot.is_zero() {
                self.support.remove(w);
            }
        }
        Ok(())
    }

    /// True if multiplicities are constant on Weyl orbits, checked via the
    /// simple reflections.
    pub fn is_symmetric(&self, rd: &RootDatum) -> bool {
        self.ambient == *rd.gtype()
            && self.support.iter().all(|(w, m)| {
                (0..rd.rank()).all(|i| rd.is_torus_coord(i) || &self.multiplicity(&rd.reflect(w, i)) == m)
            })
    }

    pub(crate) fn into_parts(self) -> (GroupType, BTreeMap<Weight, BigInt>) {
        (self.ambient, self.support)
    }

    pub(crate) fn from_map(ambient: GroupType, support: BTreeMap<Weight, BigInt>) -> FormalCharacter {
        let mut c = FormalCharacter { ambient, support };
        c.support.retain(|_, m| !m.is_zero());
        c
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, m) in &self.support {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{m}*{w}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn dim(chi: &FormalCharacter) -> BigInt {
    chi.dim()
}

/// Product of characters of the same group.
pub fn tensor(a: &FormalCharacter, b: &FormalCharacter) -> Result<FormalCharacter> {
    a.same_ambient(b)?;
    let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (u, m) in &a.support {
        for (v, n) in &b.support {
            *out.entry(u + v).or_default() += m * n;
        }
    }
    Ok(FormalCharacter::from_map(a.ambient.clone(), out))
}

/// Character of the external tensor product, a character of `a.ambient x b.ambient`.
pub fn external_tensor(a: &FormalCharacter, b: &FormalCharacter) -> FormalCharacter {
    let ambient = a.ambient.product(&b.ambient);
    let mut out = BTreeMap::new();
    for (u, m) in &a.support {
        for (v, n) in &b.support {
            let mut w = u.0.clone();
            w.extend_from_slice(&v.0);
            out.insert(Weight(w), m * n);
        }
    }
    FormalCharacter::from_map(ambient, out)
}

/// Coefficients of a character in the basis of dual Weyl characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualWeylDecomposition {
    pub terms: BTreeMap<Weight, BigInt>,
    /// False iff some coefficient is negative.
    pub exact: bool,
}

impl DualWeylDecomposition {
    pub fn highest_weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }
}

/// Writes a Weyl-invariant character as an integer combination of dual Weyl
/// characters by repeatedly removing the highest surviving dominant weight.
pub fn decompose_dual_weyl(rd: &RootDatum, chi: &FormalCharacter) -> Result<DualWeylDecomposition> {
    if chi.ambient != *rd.gtype() {
        return Err(Error::AmbientMismatch(
            rd.gtype().to_string(),
            chi.ambient.to_string(),
        ));
    }
    let not_symmetric = |w: &Weight| Error::NotSymmetric(w.to_string());
    if let Some(bad) = chi.support.iter().find(|(w, m)| {
        (0..rd.rank()).any(|i| !rd.is_torus_coord(i) && &chi.multiplicity(&rd.reflect(w, i)) != *m)
    }) {
        return Err(not_symmetric(bad.0));
    }
    let mut residual = chi.clone();
    let mut terms = BTreeMap::new();
    let mut exact = true;
    loop {
        let top = residual
            .support
            .keys()
            .filter(|w| rd.dominant_unchecked(w))
            .max_by(|a, b| rd.height(a).cmp(&rd.height(b)).then_with(|| a.cmp(b)))
            .cloned();
        let Some(top) = top else { break };
        let c = residual.support[&top].clone();
        if c.is_negative() {
            exact = false;
        }
        let nabla = dual_weyl_character(rd, &top)?;
        residual.add_scaled(&nabla, &-c.clone())?;
        terms.insert(top, c);
    }
    if let Some((w, _)) = residual.support.iter().next() {
        return Err(not_symmetric(w));
    }
    Ok(DualWeylDecomposition { terms, exact })
}

/// Rebuilds `sum terms[lambda] * chi(nabla(lambda))`.
pub fn character_of_decomposition(
    rd: &RootDatum,
    terms: &BTreeMap<Weight, BigInt>,
) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::zero(rd.gtype().clone());
    for (lambda, c) in terms {
        out.add_scaled(&dual_weyl_character(rd, lambda)?, c)?;
    }
    Ok(out)
}

/// True iff every non-torus coordinate of the dominant weight `lambda` is at most `p - 1`.
pub fn is_restricted(rd: &RootDatum, lambda: &Weight, p: u64) -> Result<bool> {
    rd.require_dominant(lambda)?;
    Ok(lambda
        .0
        .iter()
        .enumerate()
        .all(|(i, &x)| rd.is_torus_coord(i) || (x as i128) < p as i128))
}
