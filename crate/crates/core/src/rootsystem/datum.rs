use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GroupType, Letter, SimpleType, Weight};
use crate::{Error, Result};

/// Simple roots of a non-torus factor in an orthonormal basis, all
/// coordinates doubled so that the `E` and `F4` roots stay integral.
/// Node order follows Bourbaki.
pub(crate) fn euclidean_simple_roots(f: SimpleType) -> Vec<Vec<i64>> {
    let n = f.rank;
    let unit = |dim: usize, i: usize, s: i64| {
        let mut v = vec![0; dim];
        v[i] = s;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = vec![0; dim];
        v[i] = 2;
        v[j] = -2;
        v
    };
    match f.letter {
        Letter::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        Letter::B => {
            let mut r: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            r.push(unit(n, n - 1, 2));
            r
        }
        Letter::C => {
            let mut r: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            r.push(unit(n, n - 1, 4));
            r
        }
        Letter::D => {
            assert!(n >= 2, "D1 has no roots");
            let mut r: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            last[n - 2] = 2;
            last[n - 1] = 2;
            r.push(last);
            r
        }
        Letter::E => {
            let mut r = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                vec![2, 2, 0, 0, 0, 0, 0, 0],
                diff(8, 1, 0),
            ];
            for i in 2..7 {
                r.push(diff(8, i, i - 1));
            }
            r.truncate(n);
            r
        }
        Letter::F => vec![
            diff(4, 1, 2),
            diff(4, 2, 3),
            unit(4, 3, 2),
            vec![1, -1, -1, -1],
        ],
        Letter::G => vec![vec![2, -2, 0], vec![-4, 2, 2]],
        Letter::T => unreachable!("torus has no roots"),
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>` and root norms
/// `(alpha_i, alpha_i) / 2` scaled so the shortest simple root has norm 1.
pub(crate) fn factor_cartan(f: SimpleType) -> (Vec<Vec<i64>>, Vec<i64>) {
    if f.is_torus() {
        return (vec![vec![0; f.rank]; f.rank], vec![0; f.rank]);
    }
    let roots = euclidean_simple_roots(f);
    let n = roots.len();
    let sq: Vec<i64> = roots.iter().map(|r| dot(r, r)).collect();
    let cartan = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let num = 2 * dot(&roots[i], &roots[j]);
                    debug_assert_eq!(num % sq[i], 0);
                    num / sq[i]
                })
                .collect()
        })
        .collect();
    let min = *sq.iter().min().unwrap();
    (cartan, sq.iter().map(|s| s / min).collect())
}

/// Cartan data, positive roots and Weyl-group combinatorics for a
/// [`GroupType`]. Built once, then read-only.
#[derive(Debug, Clone)]
pub struct RootDatum {
    gtype: GroupType,
    cartan: Vec<Vec<i64>>,
    torus: Vec<bool>,
    norms: Vec<i64>,
    factor_of: Vec<usize>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    root_weights: Vec<Weight>,
    two_rho_check: Vec<i64>,
}

impl RootDatum {
    pub fn new(gtype: &GroupType) -> Result<RootDatum> {
        let rank = gtype.rank();
        let mut cartan = vec![vec![0; rank]; rank];
        let mut torus = vec![false; rank];
        let mut norms = vec![0; rank];
        let mut factor_of = vec![0; rank];
        let mut positive_roots = Vec::new();
        for (fi, (f, off)) in gtype.factors.iter().zip(gtype.offsets()).enumerate() {
            let (c, nm) = factor_cartan(*f);
            for i in 0..f.rank {
                factor_of[off + i] = fi;
                torus[off + i] = f.is_torus();
                norms[off + i] = nm[i];
                for j in 0..f.rank {
                    cartan[off + i][off + j] = c[i][j];
                }
            }
            if !f.is_torus() {
                for r in positive_roots_of(&c) {
                    let mut full = vec![0; rank];
                    full[off..off + f.rank].copy_from_slice(&r);
                    positive_roots.push(full);
                }
            }
        }
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let positive_coroots = positive_roots
            .iter()
            .map(|r| {
                let len2: i64 = (0..rank)
                    .flat_map(|i| (0..rank).map(move |j| (i, j)))
                    .map(|(i, j)| r[i] * r[j] * cartan[i][j] * norms[i])
                    .sum();
                let d = len2 / 2;
                r.iter()
                    .zip(&norms)
                    .map(|(c, n)| {
                        debug_assert_eq!((c * n) % d, 0);
                        c * n / d
                    })
                    .collect::<Vec<i64>>()
            })
            .collect::<Vec<_>>();
        let mut two_rho_check = vec![0; rank];
        for c in &positive_coroots {
            for (h, x) in two_rho_check.iter_mut().zip(c) {
                *h += x;
            }
        }
        let mut rd = RootDatum {
            gtype: gtype.clone(),
            cartan,
            torus,
            norms,
            factor_of,
            positive_roots,
            positive_coroots,
            root_weights: Vec::new(),
            two_rho_check,
        };
        rd.root_weights = rd
            .positive_roots
            .iter()
            .map(|r| rd.root_to_weight(r))
            .collect();
        Ok(rd)
    }

    pub fn gtype(&self) -> &GroupType {
        &self.gtype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn is_torus_coord(&self, i: usize) -> bool {
        self.torus[i]
    }

    /// `(alpha_i, alpha_i) / 2` for each simple root (0 on torus coordinates).
    pub fn norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn factor_of(&self, i: usize) -> usize {
        self.factor_of[i]
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in simple-coroot coordinates, parallel to
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Positive roots as weights (fundamental-weight coordinates).
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.root_weights
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// Half the sum of positive roots: all ones on non-torus coordinates.
    pub fn rho(&self) -> Weight {
        Weight(self.torus.iter().map(|&t| if t { 0 } else { 1 }).collect())
    }

    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|k| (0..n).map(|i| root[i] * self.cartan[k][i]).sum())
                .collect(),
        )
    }

    /// `2 <lambda, rho^vee>`: the height functional used to order weights.
    pub fn height(&self, w: &Weight) -> i64 {
        dot(&self.two_rho_check, &w.0)
    }

    /// `(mu, beta)` for a root given in simple-root coordinates, with the
    /// invariant form normalised so short roots have squared length 2.
    pub fn pair_with_root(&self, mu: &Weight, root: &[i64]) -> i64 {
        root.iter()
            .zip(&mu.0)
            .zip(&self.norms)
            .map(|((c, m), d)| c * m * d)
            .sum()
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        w.check_len(self.rank())?;
        Ok(self.dominant_unchecked(w))
    }

    pub(crate) fn dominant_unchecked(&self, w: &Weight) -> bool {
        w.0.iter().zip(&self.torus).all(|(&x, &t)| t || x >= 0)
    }

    pub(crate) fn require_dominant(&self, w: &Weight) -> Result<()> {
        if !self.is_dominant(w)? {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// Applies the simple reflection `s_i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let a = w.0[i];
        let mut out = w.clone();
        if a != 0 {
            for (k, x) in out.0.iter_mut().enumerate() {
                *x -= a * self.cartan[k][i];
            }
        }
        out
    }

    pub fn dominant_representative(&self, w: &Weight) -> Result<Weight> {
        w.check_len(self.rank())?;
        Ok(self.dominant_rep_unchecked(w))
    }

    pub(crate) fn dominant_rep_unchecked(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = (0..self.rank()).find(|&i| !self.torus[i] && cur.0[i] < 0) {
            cur = self.reflect(&cur, i);
        }
        cur
    }

    /// The Weyl orbit of a dominant weight, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.require_dominant(w)?;
        Ok(self.orbit_unchecked(w))
    }

    pub(crate) fn orbit_unchecked(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                // Reflecting along a positive coordinate moves down the orbit;
                // every orbit element is reached this way from the dominant one.
                if self.torus[i] || cur.0[i] <= 0 {
                    continue;
                }
                let next = self.reflect(&cur, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Weyl dimension formula for the dual Weyl module of highest weight `lambda`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        self.require_dominant(lambda)?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for c in &self.positive_coroots {
            let ht: i64 = c.iter().zip(&self.torus).filter(|(_, &t)| !t).map(|(x, _)| x).sum();
            num *= dot(c, &lambda.0) + ht;
            den *= ht;
        }
        debug_assert!((&num % &den).is_zero());
        Ok(num / den)
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> BigInt {
        let fact = |n: usize| (1..=n).fold(BigInt::one(), |a, k| a * k);
        let mut out = BigInt::one();
        for f in &self.gtype.factors {
            if f.is_torus() {
                continue;
            }
            let n = f.rank;
            out *= match f.letter {
                Letter::A => fact(n + 1),
                Letter::B | Letter::C => fact(n) * (BigInt::one() << n),
                Letter::D => fact(n) * (BigInt::one() << (n - 1)),
                Letter::E => BigInt::from(match n {
                    6 => 51_840u64,
                    7 => 2_903_040,
                    _ => 696_729_600,
                }),
                Letter::F => BigInt::from(1152),
                Letter::G => BigInt::from(12),
                Letter::T => unreachable!(),
            };
        }
        out
    }

    /// Highest root of each simple factor, in simple-root coordinates.
    pub fn highest_roots(&self) -> Vec<Vec<i64>> {
        let mut best: HashMap<usize, &Vec<i64>> = HashMap::new();
        for r in &self.positive_roots {
            let fi = self.factor_of[r.iter().position(|&x| x != 0).unwrap()];
            let h: i64 = r.iter().sum();
            match best.get(&fi) {
                Some(b) if b.iter().sum::<i64>() >= h => {}
                _ => {
                    best.insert(fi, r);
                }
            }
        }
        let mut keys: Vec<_> = best.keys().copied().collect();
        keys.sort();
        keys.into_iter().map(|k| best[&k].clone()).collect()
    }
}

/// Positive roots of an irreducible Cartan matrix by the root-string method.
fn positive_roots_of(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut set: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // <beta, alpha_i^vee>
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let mut q = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if set.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}
