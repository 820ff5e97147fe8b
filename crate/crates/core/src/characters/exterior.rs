use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{tensor, FormalCharacter};
use crate::rootsystem::Weight;
use crate::{Error, Result};

/// Above this dimension [`exterior_power`] switches from the direct
/// expansion to Newton's identities.
pub const DIRECT_EXTERIOR_LIMIT: u64 = 24;

fn check_nonnegative(chi: &FormalCharacter) -> Result<()> {
    if chi.has_negative() {
        return Err(Error::NegativeInput);
    }
    Ok(())
}

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// The Adams operation `psi^k`: every weight multiplied by `k`.
pub fn adams(chi: &FormalCharacter, k: i64) -> FormalCharacter {
    let out = chi.iter().map(|(w, m)| (w.scaled(k), m.clone())).collect();
    FormalCharacter::from_map(chi.ambient().clone(), out)
}

/// `Lambda^0 .. Lambda^kmax` by expanding `prod_w (1 + t e^w)^{m_w}`, i.e.
/// by choosing subsets of the weight multiset.
fn direct_powers(chi: &FormalCharacter, kmax: usize) -> Vec<BTreeMap<Weight, BigInt>> {
    let rank = chi.ambient().rank();
    let mut e: Vec<BTreeMap<Weight, BigInt>> = vec![BTreeMap::new(); kmax + 1];
    e[0].insert(Weight::zero(rank), BigInt::from(1));
    for (w, m) in chi.iter() {
        let mut next: Vec<BTreeMap<Weight, BigInt>> = vec![BTreeMap::new(); kmax + 1];
        for (deg, layer) in e.iter().enumerate() {
            for (u, c) in layer {
                let mut j = 0usize;
                while deg + j <= kmax && BigInt::from(j) <= *m {
                    let shifted = u + &w.scaled(j as i64);
                    *next[deg + j].entry(shifted).or_default() += c * binomial(m, j);
                    j += 1;
                }
            }
        }
        e = next;
    }
    e
}

pub fn exterior_power_direct(chi: &FormalCharacter, k: usize) -> Result<FormalCharacter> {
    check_nonnegative(chi)?;
    let mut e = direct_powers(chi, k);
    Ok(FormalCharacter::from_map(chi.ambient().clone(), e.swap_remove(k)))
}

/// `Lambda^k` from Newton's identity `k Lambda^k = sum_j (-1)^(j-1) psi^j Lambda^(k-j)`.
pub fn exterior_power_newton(chi: &FormalCharacter, k: usize) -> Result<FormalCharacter> {
    check_nonnegative(chi)?;
    let ambient = chi.ambient().clone();
    let mut lam = vec![FormalCharacter::trivial(ambient.clone())];
    for n in 1..=k {
        let mut acc = FormalCharacter::zero(ambient.clone());
        for j in 1..=n {
            let term = tensor(&adams(chi, j as i64), &lam[n - j])?;
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc.add_scaled(&term, &BigInt::from(sign))?;
        }
        let (ambient, support) = acc.into_parts();
        let divided = support
            .into_iter()
            .map(|(w, m)| {
                let (q, r) = m.div_rem(&BigInt::from(n));
                debug_assert!(r.is_zero());
                (w, q)
            })
            .collect();
        lam.push(FormalCharacter::from_map(ambient, divided));
    }
    Ok(lam.swap_remove(k))
}

/// `Lambda^k` of a character with nonnegative multiplicities.
pub fn exterior_power(chi: &FormalCharacter, k: usize) -> Result<FormalCharacter> {
    check_nonnegative(chi)?;
    let small = chi.dim().to_u64().is_some_and(|d| d <= DIRECT_EXTERIOR_LIMIT);
    if small {
        exterior_power_direct(chi, k)
    } else {
        exterior_power_newton(chi, k)
    }
}

/// The full exterior algebra `sum_k Lambda^k`, i.e. `prod_w (1 + e^w)^{m_w}`.
pub fn exterior_algebra(chi: &FormalCharacter) -> Result<FormalCharacter> {
    check_nonnegative(chi)?;
    let rank = chi.ambient().rank();
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::from([(Weight::zero(rank), BigInt::from(1))]);
    for (w, m) in chi.iter() {
        let mcount = m.to_usize().expect("multiplicity fits in memory");
        let mut next: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (u, c) in &acc {
            for j in 0..=mcount {
                let shifted = u + &w.scaled(j as i64);
                *next.entry(shifted).or_default() += c * binomial(m, j);
            }
        }
        acc = next;
    }
    debug_assert!(acc.values().all(|m| !m.is_negative()));
    Ok(FormalCharacter::from_map(chi.ambient().clone(), acc))
}
