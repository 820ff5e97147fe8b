use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::FormalCharacter;
use crate::rootsystem::{GroupType, RootDatum, SimpleType, Weight};
use crate::Result;

pub(super) type DominantTable = Arc<Vec<(Weight, BigInt)>>;

/// Dominant multiplicities keyed by (factor label, highest weight).
pub(super) static MEMO: Lazy<RwLock<HashMap<(String, Vec<i64>), DominantTable>>> =
    Lazy::new(Default::default);

static DATA: Lazy<RwLock<HashMap<SimpleType, Arc<RootDatum>>>> = Lazy::new(Default::default);

fn factor_datum(f: SimpleType) -> Arc<RootDatum> {
    if let Some(rd) = DATA.read().get(&f) {
        return rd.clone();
    }
    let rd = Arc::new(RootDatum::new(&GroupType::new(vec![f])).expect("valid factor"));
    DATA.write().entry(f).or_insert(rd).clone()
}

/// Dominant weights of `nabla(lambda)` with their multiplicities, for a
/// single non-torus factor, sorted by decreasing height.
fn freudenthal(rd: &RootDatum, lambda: &Weight) -> Vec<(Weight, BigInt)> {
    let roots = rd.positive_roots();
    let root_wts = rd.positive_root_weights();
    let norms = rd.norms();

    // Dominant weights below lambda, with depth lambda - mu in root coordinates.
    let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
    depth.insert(lambda.clone(), vec![0; rd.rank()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu].clone();
        for (r, rw) in roots.iter().zip(root_wts) {
            let nu = &mu - rw;
            if !rd.dominant_unchecked(&nu) || depth.contains_key(&nu) {
                continue;
            }
            depth.insert(nu.clone(), d.iter().zip(r).map(|(a, b)| a + b).collect());
            queue.push_back(nu);
        }
    }
    let mut order: Vec<(Weight, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });

    let mut mult: HashMap<Weight, BigInt> = HashMap::with_capacity(order.len());
    let mut out = Vec::with_capacity(order.len());
    for (mu, gamma) in order {
        let m = if gamma.iter().all(|&g| g == 0) {
            BigInt::from(1)
        } else {
            // (lambda + rho)^2 - (mu + rho)^2 = (lambda - mu, lambda + mu + 2 rho)
            let den: i64 = (0..rd.rank())
                .map(|j| gamma[j] * norms[j] * (lambda.0[j] + mu.0[j] + 2))
                .sum();
            let mut num = BigInt::zero();
            for (r, rw) in roots.iter().zip(root_wts) {
                let mut nu = &mu + rw;
                loop {
                    let dom = rd.dominant_rep_unchecked(&nu);
                    let Some(mn) = mult.get(&dom) else { break };
                    num += mn * rd.pair_with_root(&nu, r);
                    nu = &nu + rw;
                }
            }
            num *= 2;
            let (q, rem) = num.div_rem(&BigInt::from(den));
            debug_assert!(rem.is_zero());
            q
        };
        if !m.is_zero() {
            mult.insert(mu.clone(), m.clone());
        }
        out.push((mu, m));
    }
    out.retain(|(_, m)| !m.is_zero());
    out
}

/// Dominant weights of the dual Weyl module of a single simple factor, memoised.
pub(super) fn factor_table(f: SimpleType, lambda: &[i64]) -> DominantTable {
    let key = (f.without_tilde().to_string(), lambda.to_vec());
    if let Some(t) = MEMO.read().get(&key) {
        return t.clone();
    }
    let rd = factor_datum(f.without_tilde());
    let table = Arc::new(freudenthal(&rd, &Weight(lambda.to_vec())));
    MEMO.write().entry(key).or_insert(table).clone()
}

/// Multiplicities of the dominant weights of `nabla(lambda)`, sorted.
pub fn dominant_multiplicities(rd: &RootDatum, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
    let chi = dual_weyl_character(rd, lambda)?;
    Ok(chi
        .iter()
        .filter(|(w, _)| rd.dominant_unchecked(w))
        .map(|(w, m)| (w.clone(), m.clone()))
        .collect())
}

/// Character of the dual Weyl module `nabla(lambda)`.
///
/// Each simple factor is handled by Freudenthal's recursion on its dominant
/// weights followed by Weyl-orbit expansion; torus coordinates are carried
/// unchanged.
pub fn dual_weyl_character(rd: &RootDatum, lambda: &Weight) -> Result<FormalCharacter> {
    rd.require_dominant(lambda)?;
    let gtype = rd.gtype();
    let mut acc: Vec<(Vec<i64>, BigInt)> = vec![(Vec::new(), BigInt::from(1))];
    for (f, off) in gtype.factors.iter().zip(gtype.offsets()) {
        let lam = &lambda.0[off..off + f.rank];
        let piece: Vec<(Vec<i64>, BigInt)> = if f.is_torus() {
            vec![(lam.to_vec(), BigInt::from(1))]
        } else {
            let frd = factor_datum(f.without_tilde());
            factor_table(*f, lam)
                .iter()
                .flat_map(|(mu, m)| {
                    frd.orbit_unchecked(mu)
                        .into_iter()
                        .map(move |w| (w.0, m.clone()))
                })
                .collect()
        };
        acc = acc
            .iter()
            .flat_map(|(a, m)| {
                piece.iter().map(move |(b, n)| {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    (w, m * n)
                })
            })
            .collect();
    }
    Ok(FormalCharacter::from_map(
        gtype.clone(),
        acc.into_iter().map(|(w, m)| (Weight(w), m)).collect(),
    ))
}
