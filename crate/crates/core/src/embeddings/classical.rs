//! Classical groups in epsilon coordinates.

use std::fmt;

use super::{alias_map, compose, WeightMap};
use crate::characters::dual_weyl_character;
use crate::rootsystem::{normal_form, GroupType, Letter, RootDatum, SimpleType, Weight};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalKind {
    SL,
    SO,
    Sp,
}

/// A classical group given by its natural module: `SL_n`, `SO_n` or `Sp_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Classical {
    pub kind: ClassicalKind,
    pub dim: usize,
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ClassicalKind::SL => "SL",
            ClassicalKind::SO => "SO",
            ClassicalKind::Sp => "Sp",
        };
        write!(f, "{k}{}", self.dim)
    }
}

fn cl(kind: ClassicalKind, dim: usize) -> Classical {
    Classical { kind, dim }
}

fn st(letter: Letter, rank: usize) -> SimpleType {
    SimpleType {
        letter,
        rank,
        short: false,
    }
}

impl Classical {
    /// Readings of a written factor as a classical group, up to isogeny.
    pub fn interpretations(f: SimpleType) -> Vec<Classical> {
        use ClassicalKind::*;
        let n = f.rank;
        let mut out = Vec::new();
        match f.letter {
            Letter::A => {
                out.push(cl(SL, n + 1));
                if n == 1 {
                    out.extend([cl(Sp, 2), cl(SO, 3)]);
                }
                if n == 3 {
                    out.push(cl(SO, 6));
                }
            }
            Letter::B => {
                out.push(cl(SO, 2 * n + 1));
                if n == 1 {
                    out.extend([cl(SL, 2), cl(Sp, 2)]);
                }
                if n == 2 {
                    out.push(cl(Sp, 4));
                }
            }
            Letter::C => {
                out.push(cl(Sp, 2 * n));
                if n == 1 {
                    out.extend([cl(SL, 2), cl(SO, 3)]);
                }
                if n == 2 {
                    out.push(cl(SO, 5));
                }
            }
            Letter::D => {
                out.push(cl(SO, 2 * n));
                if n == 3 {
                    out.push(cl(SL, 4));
                }
            }
            Letter::T if n == 1 => out.push(cl(SO, 2)),
            _ => {}
        }
        out
    }

    /// The standard root-system spelling: `A_{n-1}`, `B_n`, `C_n` or `D_n`.
    fn canonical_type(self) -> Option<SimpleType> {
        use ClassicalKind::*;
        let d = self.dim;
        Some(match self.kind {
            SL if d >= 2 => st(Letter::A, d - 1),
            SO if d >= 3 && d % 2 == 1 => st(Letter::B, d / 2),
            SO if d >= 2 && d % 2 == 0 => st(Letter::D, d / 2),
            Sp if d >= 2 && d % 2 == 0 => st(Letter::C, d / 2),
            _ => return None,
        })
    }

    /// Number of epsilon coordinates.
    fn eps_count(self) -> usize {
        match self.kind {
            ClassicalKind::SL => self.dim,
            _ => self.dim / 2,
        }
    }

    /// Fundamental weights of the canonical type in epsilon coordinates,
    /// doubled so that spin weights are integral.
    fn fundamental_eps2(self) -> Vec<Vec<i64>> {
        let t = self.canonical_type().expect("classical group of positive rank");
        let m = self.eps_count();
        let n = t.rank;
        let prefix = |k: usize| (0..m).map(|i| if i < k { 2 } else { 0 }).collect::<Vec<i64>>();
        (1..=n)
            .map(|k| match t.letter {
                Letter::B if k == n => vec![1; m],
                Letter::D if n == 1 => vec![2],
                Letter::D if k == n - 1 => (0..m).map(|i| if i + 1 == m { -1 } else { 1 }).collect(),
                Letter::D if k == n => vec![1; m],
                _ => prefix(k),
            })
            .collect()
    }

    /// Epsilon basis vectors in fundamental-weight coordinates of the
    /// canonical type.
    fn eps_in_fundamental(self) -> Vec<Vec<i64>> {
        let t = self.canonical_type().expect("classical group of positive rank");
        let n = t.rank;
        let unit = |k: usize| (0..n).map(|i| i64::from(i == k)).collect::<Vec<i64>>();
        let diff = |k: usize| -> Vec<i64> {
            // varpi_{k+1} - varpi_k (0-based k)
            let mut v = unit(k);
            if k > 0 {
                v[k - 1] -= 1;
            }
            v
        };
        match t.letter {
            Letter::A => {
                let mut out: Vec<_> = (0..n).map(diff).collect();
                let mut last = vec![0; n];
                last[n - 1] = -1;
                out.push(last);
                out
            }
            Letter::B => {
                let mut out: Vec<_> = (0..n - 1).map(diff).collect();
                let mut last = unit(n - 1);
                last[n - 1] = 2;
                if n >= 2 {
                    last[n - 2] -= 1;
                }
                out.push(last);
                out
            }
            Letter::C => (0..n).map(diff).collect(),
            Letter::D if n == 1 => vec![vec![1]],
            Letter::D => {
                let mut out: Vec<_> = (0..n - 2).map(diff).collect();
                let mut a = vec![0; n];
                a[n - 2] = 1;
                a[n - 1] = 1;
                if n >= 3 {
                    a[n - 3] -= 1;
                }
                let mut b = vec![0; n];
                b[n - 2] = -1;
                b[n - 1] = 1;
                out.push(a);
                out.push(b);
                out
            }
            _ => unreachable!(),
        }
    }

    /// Weights of the natural module in fundamental coordinates of the
    /// canonical type.
    fn natural_weights(self) -> Vec<Vec<i64>> {
        let eps = self.eps_in_fundamental();
        let neg = |v: &Vec<i64>| v.iter().map(|x| -x).collect::<Vec<i64>>();
        match self.kind {
            ClassicalKind::SL => eps,
            _ => {
                let mut out = Vec::new();
                for e in &eps {
                    out.push(e.clone());
                    out.push(neg(e));
                }
                if self.dim % 2 == 1 {
                    out.push(vec![0; eps[0].len()]);
                }
                out
            }
        }
    }
}

/// Natural-module weights of `c` written in the coordinates of `written`
/// (a spelling of the same type).
fn natural_weights_in(c: Classical, written: &GroupType) -> Result<Vec<Vec<i64>>> {
    let canon = GroupType::new(vec![c.canonical_type().expect("positive rank")]);
    let m = alias_map(&canon, written)?;
    Ok(c.natural_weights()
        .into_iter()
        .map(|w| m.apply(&Weight(w)).expect("rank matches").0)
        .collect())
}

/// Embeds per-factor weight lists into the coordinates of the full product.
fn place(weights: Vec<Vec<i64>>, offset: usize, total: usize) -> Vec<Vec<i64>> {
    weights
        .into_iter()
        .map(|w| {
            let mut v = vec![0; total];
            v[offset..offset + w.len()].copy_from_slice(&w);
            v
        })
        .collect()
}

/// Builds the restriction map for `sub -> amb` when `amb` is read as the
/// classical group `c` and the weights of its natural module, as seen by
/// `sub`, are `v`.
fn natural_map(c: Classical, amb: &GroupType, sub: &GroupType, mut v: Vec<Vec<i64>>) -> Result<WeightMap> {
    let no_map = |why: &str| Error::NoWeightMap(format!("{sub} -> {amb} as {c}: {why}"));
    if v.len() != c.dim {
        return Err(no_map("dimension mismatch"));
    }
    let r = sub.rank();
    let images: Vec<Vec<i64>> = match c.kind {
        ClassicalKind::SL => v,
        _ => {
            // Pair each weight with its negative; zero weights pair up among
            // themselves, leaving one over in odd dimension.
            v.sort();
            let mut out = Vec::new();
            let zero = vec![0; r];
            let zeros = v.iter().filter(|w| **w == zero).count();
            v.retain(|w| *w != zero);
            while let Some(w) = v.pop() {
                let neg: Vec<i64> = w.iter().map(|x| -x).collect();
                let pos = v.iter().position(|u| *u == neg).ok_or_else(|| no_map("module not self-dual"))?;
                v.remove(pos);
                out.push(w);
            }
            for _ in 0..zeros / 2 {
                out.push(zero.clone());
            }
            out
        }
    };
    debug_assert_eq!(images.len(), c.eps_count());
    let canon = GroupType::new(vec![c.canonical_type().expect("positive rank")]);
    let fund = c.fundamental_eps2();
    let mut matrix = vec![vec![0; fund.len()]; r];
    for (k, coeffs) in fund.iter().enumerate() {
        for row in 0..r {
            let twice: i64 = coeffs.iter().zip(&images).map(|(a, e)| a * e[row]).sum();
            if twice % 2 != 0 {
                return Err(no_map("spin weights do not restrict integrally"));
            }
            matrix[row][k] = twice / 2;
        }
    }
    let core = WeightMap::new(canon.clone(), sub.clone(), matrix)?;
    compose(&alias_map(amb, &canon)?, &core)
}

fn single_factor(g: &GroupType) -> Option<SimpleType> {
    match g.factors[..] {
        [f] => Some(f.without_tilde()),
        _ => None,
    }
}

/// A reading of `sub -> amb` as one of the classical-subgroup shapes,
/// together with the prime bound it requires.
pub(crate) fn classical_instance(sub: &GroupType, amb: &GroupType) -> Option<(Classical, Vec<Classical>, u64)> {
    use ClassicalKind::*;
    let a = single_factor(amb)?;
    let readings: Vec<Vec<Classical>> = sub
        .factors
        .iter()
        .map(|f| Classical::interpretations(f.without_tilde()))
        .collect();
    if sub.factors.is_empty() || readings.iter().any(|r| r.is_empty()) {
        return None;
    }
    let mut best: Option<(Classical, Vec<Classical>, u64)> = None;
    for big in Classical::interpretations(a) {
        for choice in cartesian(&readings) {
            let p = match (big.kind, &choice[..]) {
                (SL, [h]) if h.kind == SO && h.dim == big.dim && big.dim >= 3 => 3,
                (SL, [h]) if h.kind == Sp && h.dim == big.dim && big.dim >= 4 => 1,
                (SO, hs) if hs.iter().all(|h| h.kind == SO) => {
                    let total: usize = hs.iter().map(|h| h.dim).sum();
                    if total > big.dim || (hs.len() == 1 && total == big.dim) {
                        continue;
                    }
                    3
                }
                (Sp, hs) if hs.len() >= 2 && hs.iter().all(|h| h.kind == Sp) => {
                    if hs.iter().map(|h| h.dim).sum::<usize>() != big.dim {
                        continue;
                    }
                    1
                }
                _ => continue,
            };
            if best.as_ref().is_none_or(|b| p < b.2) {
                best = Some((big, choice, p));
            }
        }
    }
    best
}

fn cartesian(lists: &[Vec<Classical>]) -> Vec<Vec<Classical>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                l.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(*c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Restriction for the classical-subgroup clause: `SL_r > SO_r`,
/// `SL_2n > Sp_2n`, `SO_N > SO_r1 x ... x SO_rk` (sum at most `N`, the rest
/// acting trivially) and `Sp_N > Sp_r1 x ... x Sp_rk` (sum exactly `N`).
pub fn classical_map(sub: &GroupType, amb: &GroupType) -> Result<WeightMap> {
    let (big, pieces, _) = classical_instance(sub, amb)
        .ok_or_else(|| Error::NotAClause4Instance(format!("{sub} -> {amb}")))?;
    let total = sub.rank();
    let mut v = Vec::new();
    for ((f, off), c) in sub.factors.iter().zip(sub.offsets()).zip(&pieces) {
        let w = natural_weights_in(*c, &GroupType::new(vec![*f]))?;
        v.extend(place(w, off, total));
    }
    let filled: usize = pieces.iter().map(|c| c.dim).sum();
    v.extend((filled..big.dim).map(|_| vec![0; total]));
    natural_map(big, amb, sub, v)
}

/// A reading of `sub -> amb` as `V1 (x) V2` with `sub` acting on `V1`.
pub(crate) fn tensor_instance(sub: &GroupType, amb: &GroupType) -> Option<(Classical, Classical, usize)> {
    use ClassicalKind::*;
    let h = single_factor(sub)?;
    let a = single_factor(amb)?;
    for big in Classical::interpretations(a) {
        for small in Classical::interpretations(h) {
            if small.kind == SL || big.kind == SL || big.dim % small.dim != 0 {
                continue;
            }
            let s = big.dim / small.dim;
            if s < 2 || (small.kind != big.kind && s % 2 == 1) {
                continue;
            }
            return Some((big, small, s));
        }
    }
    None
}

/// Restriction for a tensor-product embedding `H -> H x K -> G`, where `K`
/// is a classical group acting on the second tensor factor.
pub fn tensor_map(sub: &GroupType, amb: &GroupType) -> Result<WeightMap> {
    let (big, small, s) = tensor_instance(sub, amb)
        .ok_or_else(|| Error::NotAClause7Instance(format!("{sub} -> {amb}")))?;
    let w = natural_weights_in(small, sub)?;
    let v: Vec<Vec<i64>> = w.iter().flat_map(|x| std::iter::repeat_n(x.clone(), s)).collect();
    natural_map(big, amb, sub, v)
}

/// Highest weight of the module `V` realising `sub -> SL(V) = amb` and the
/// prime bound of the pair.
pub(crate) fn resirr_instance(sub: &GroupType, amb: &GroupType) -> Option<(Vec<i64>, u64)> {
    let h = single_factor(sub)?;
    let norm = normal_form(&amb.without_tildes()).0;
    let [a] = norm.factors[..] else { return None };
    if a.letter != Letter::A {
        return None;
    }
    let n = a.rank;
    match (h.letter, h.rank, n) {
        (Letter::A, 1, _) => Some((vec![n as i64], super::next_prime_above(n as u64))),
        (Letter::A, 2, 7) => Some((vec![1, 1], 5)),
        (Letter::G, 2, 6) => Some((vec![1, 0], 5)),
        _ => None,
    }
}

/// Restriction along `H -> SL(V)` for the listed restricted irreducible `V`:
/// `(A_n, A1)` with `V = nabla(n)`, `(A7, A2)` adjoint, `(A6, G2)` seven-dimensional.
pub fn resirr_map(sub: &GroupType, amb: &GroupType) -> Result<WeightMap> {
    let (hw, _) = resirr_instance(sub, amb)
        .ok_or_else(|| Error::NotAClause6Instance(format!("{sub} -> {amb}")))?;
    let rd = RootDatum::new(sub)?;
    let chi = dual_weyl_character(&rd, &Weight(hw))?;
    let mut v = Vec::new();
    for (w, m) in chi.iter() {
        let m = usize::try_from(m).expect("small multiplicity");
        v.extend(std::iter::repeat_n(w.0.clone(), m));
    }
    let norm = normal_form(&amb.without_tildes()).0;
    let big = Classical {
        kind: ClassicalKind::SL,
        dim: norm.factors[0].rank + 1,
    };
    natural_map(big, amb, sub, v)
}
