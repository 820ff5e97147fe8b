//! Which steps are instances of which clause, and at what prime bound.

use super::classical::{classical_instance, resirr_instance, tensor_instance};
use super::{
    alias_map, classical_map, compose, folding_map, levi_map, resirr_map, tensor_map, Clause,
    ClauseTag, EmbeddingStep, WeightMap,
};
use crate::rootsystem::{components, normal_form, GroupType, RootDatum};
use crate::{Error, Result};

/// Smallest prime strictly greater than `n`.
pub fn next_prime_above(n: u64) -> u64 {
    let is_prime = |k: u64| k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| k % d != 0);
    (n + 1..).find(|&k| is_prime(k)).expect("primes are unbounded")
}

/// The maximal-rank pairs `(G, H, p_min)`.
pub fn max_rank_pairs() -> Vec<(GroupType, GroupType, u64)> {
    [
        ("E8", "A2.E6", 7),
        ("E8", "D8", 3),
        ("E8", "A1.E7", 3),
        ("E7", "A1.D6", 3),
        ("F4", "B4", 3),
        ("F4", "A3.A1", 5),
        ("G2", "A1.A1", 1),
        ("E8", "A1.A2.A5", 7),
        ("E8", "A3.D5", 7),
        ("E8", "A4.A4", 7),
    ]
    .into_iter()
    .map(|(g, h, p)| (g.parse().unwrap(), h.parse().unwrap(), p))
    .collect()
}

fn norm(g: &GroupType) -> GroupType {
    normal_form(&g.without_tildes()).0
}

/// Looks up a maximal-rank pair (tildes ignored).
pub fn max_rank_step(amb: &GroupType, sub: &GroupType) -> Result<Clause> {
    let (a, s) = (norm(amb), norm(sub));
    max_rank_pairs()
        .into_iter()
        .find(|(g, h, _)| norm(g) == a && norm(h) == s)
        .map(|(_, _, p)| Clause {
            tag: ClauseTag::Max,
            p_min: p,
        })
        .ok_or_else(|| Error::NotAClause5Instance(format!("{sub} -> {amb}")))
}

/// Outcome of checking one chain step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepAnalysis {
    pub legal: bool,
    pub reason: String,
    /// Prime bound demanded by the clause itself.
    pub p_required: u64,
    /// `max(p_required, declared bound)`.
    pub p_min: u64,
    /// Restriction from `amb` to `sub`, when one is available.
    pub map: Option<WeightMap>,
    /// Why `map` is missing.
    pub map_note: Option<String>,
}

impl StepAnalysis {
    fn illegal(reason: String) -> StepAnalysis {
        StepAnalysis {
            legal: false,
            reason,
            p_required: 1,
            p_min: 1,
            map: None,
            map_note: None,
        }
    }

    fn legal(step: &EmbeddingStep, what: String, p: u64, map: Result<WeightMap>) -> StepAnalysis {
        let declared = step.declared_p();
        if p > declared {
            let ann = step.p_gt.map_or("none".to_string(), |n| format!("p>{n}"));
            return StepAnalysis {
                legal: false,
                reason: format!("{what} needs p >= {p}, annotation is {ann}"),
                p_required: p,
                p_min: p,
                map: None,
                map_note: None,
            };
        }
        let (map, map_note) = match map {
            Ok(m) => (Some(m), None),
            Err(Error::NoWeightMap(why)) => (None, Some(why)),
            Err(e) => (None, Some(e.to_string())),
        };
        StepAnalysis {
            legal: true,
            reason: what,
            p_required: p,
            p_min: p.max(declared),
            map,
            map_note,
        }
    }
}

fn sub_type(g: &GroupType, idx: &[usize]) -> GroupType {
    GroupType::new(idx.iter().map(|&i| g.factors[i]).collect())
}

#[derive(Debug, Clone)]
struct Block {
    sub: Vec<usize>,
    amb: Vec<usize>,
    /// `None` for a carried factor, otherwise the clause's prime bound.
    clause_p: Option<u64>,
}

fn clause_block_p(tag: ClauseTag, s: &GroupType, m: &GroupType) -> Option<u64> {
    match tag {
        ClauseTag::Diag => {
            let [h] = s.factors[..] else { return None };
            let h = norm(&GroupType::new(vec![h]));
            (m.factors.len() >= 2 && m.factors.iter().all(|f| norm(&GroupType::new(vec![*f])) == h)).then_some(1)
        }
        ClauseTag::Auto => folding_map(m, s).is_ok().then_some(1),
        ClauseTag::Class => classical_instance(s, m).map(|x| x.2),
        ClauseTag::Tensor => tensor_instance(s, m).map(|_| 3),
        ClauseTag::Resirr => resirr_instance(s, m).map(|x| x.1),
        ClauseTag::Max => max_rank_step(m, s).ok().map(|c| c.p_min),
        _ => None,
    }
}

fn block_map(tag: ClauseTag, s: &GroupType, m: &GroupType, carry: bool) -> Result<WeightMap> {
    if carry {
        return alias_map(m, s);
    }
    match tag {
        ClauseTag::Diag => {
            let mut matrix = vec![Vec::new(); s.rank()];
            for f in &m.factors {
                let piece = alias_map(&GroupType::new(vec![*f]), s)?;
                for (row, add) in matrix.iter_mut().zip(piece.matrix) {
                    row.extend(add);
                }
            }
            WeightMap::new(m.clone(), s.clone(), matrix)
        }
        ClauseTag::Auto => folding_map(m, s),
        ClauseTag::Class => classical_map(s, m),
        ClauseTag::Tensor => tensor_map(s, m),
        ClauseTag::Resirr => resirr_map(s, m),
        _ => Err(Error::NoWeightMap(format!("{tag} step {s} -> {m} is type-level only"))),
    }
}

fn subsets(mask: u32) -> impl Iterator<Item = u32> {
    (1..=mask).filter(move |s| s & !mask == 0)
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

struct Search<'a> {
    tag: ClauseTag,
    sub: &'a GroupType,
    amb: &'a GroupType,
    best: Option<(u64, Vec<Block>)>,
}

impl Search<'_> {
    fn run(&mut self, sub_left: u32, amb_left: u32, blocks: &mut Vec<Block>) {
        if amb_left == 0 {
            if sub_left != 0 {
                return;
            }
            let ps: Vec<u64> = blocks.iter().filter_map(|b| b.clause_p).collect();
            if ps.is_empty() {
                return;
            }
            let p = ps.into_iter().max().unwrap();
            if self.best.as_ref().is_none_or(|(q, _)| p < *q) {
                self.best = Some((p, blocks.clone()));
            }
            return;
        }
        let first = amb_left.trailing_zeros();
        for am in subsets(amb_left).filter(|m| m & (1 << first) != 0) {
            let a_idx = bits(am);
            let m = sub_type(self.amb, &a_idx);
            for sm in subsets(sub_left) {
                let s_idx = bits(sm);
                let s = sub_type(self.sub, &s_idx);
                let mut options = Vec::new();
                if a_idx.len() <= 2 && s_idx.len() <= 2 && norm(&s) == norm(&m) {
                    options.push(None);
                }
                if let Some(p) = clause_block_p(self.tag, &s, &m) {
                    options.push(Some(p));
                }
                for clause_p in options {
                    blocks.push(Block {
                        sub: s_idx.clone(),
                        amb: a_idx.clone(),
                        clause_p,
                    });
                    self.run(sub_left & !sm, amb_left & !am, blocks);
                    blocks.pop();
                }
            }
        }
    }
}

fn assemble(step: &EmbeddingStep, blocks: &[Block]) -> Result<WeightMap> {
    let (sub, amb) = (&step.sub, &step.amb);
    let (so, ao) = (sub.offsets(), amb.offsets());
    let mut matrix = vec![vec![0; amb.rank()]; sub.rank()];
    for b in blocks {
        let s = sub_type(sub, &b.sub);
        let m = sub_type(amb, &b.amb);
        let piece = block_map(step.tag, &s, &m, b.clause_p.is_none())?;
        let rows: Vec<usize> = b.sub.iter().flat_map(|&i| so[i]..so[i] + sub.factors[i].rank).collect();
        let cols: Vec<usize> = b.amb.iter().flat_map(|&j| ao[j]..ao[j] + amb.factors[j].rank).collect();
        for (r, row) in rows.iter().zip(&piece.matrix) {
            for (c, x) in cols.iter().zip(row) {
                matrix[*r][*c] = *x;
            }
        }
    }
    WeightMap::new(amb.clone(), sub.clone(), matrix)
}

fn describe(step: &EmbeddingStep, blocks: &[Block]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|b| {
            let s = sub_type(&step.sub, &b.sub);
            let m = sub_type(&step.amb, &b.amb);
            match b.clause_p {
                None => format!("{s} = {m}"),
                Some(_) => format!("{s} -{}-> {m}", step.tag),
            }
        })
        .collect();
    parts.join(", ")
}

fn analyze_levi(step: &EmbeddingStep) -> StepAnalysis {
    let (sub, amb) = (&step.sub, &step.amb);
    let ss = GroupType::new(sub.factors.iter().copied().filter(|f| !f.is_torus()).collect());
    let target = normal_form(&ss).0;
    let sub_torus = sub.rank() - ss.rank();
    let rd = match RootDatum::new(amb) {
        Ok(rd) => rd,
        Err(e) => return StepAnalysis::illegal(e.to_string()),
    };
    let k = ss.rank();
    let nodes: Vec<usize> = (0..rd.rank()).filter(|&i| !rd.is_torus_coord(i)).collect();
    if k > nodes.len() || sub_torus > rd.rank() - k {
        return StepAnalysis::illegal(format!("{sub} is too large to be a Levi subgroup of {amb}"));
    }
    // Among matching node sets prefer the one containing the most whole
    // factors of `amb`, so factors written on both sides line up.
    let whole = |set: &[usize]| {
        (0..amb.factors.len())
            .filter(|&f| {
                let mine: Vec<usize> = nodes.iter().copied().filter(|&i| rd.factor_of(i) == f).collect();
                !mine.is_empty() && mine.iter().all(|i| set.contains(i))
            })
            .count()
    };
    let mut found: Option<(usize, Vec<usize>)> = None;
    for set in choose(&nodes, k) {
        let comps = components(&rd, &set).expect("valid nodes");
        if normal_form(&GroupType::new(comps.iter().map(|c| c.stype).collect())).0 != target {
            continue;
        }
        let score = whole(&set);
        if found.as_ref().is_none_or(|(best, _)| score > *best) {
            found = Some((score, set));
        }
    }
    let found = found.map(|(_, set)| set);
    let Some(set) = found else {
        return StepAnalysis::illegal(format!("{ss} is not a Dynkin subdiagram of {amb}"));
    };
    let shown: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    let what = format!("Levi subgroup on nodes {{{}}} of {amb}", shown.join(","));
    let map = (|| {
        let (m, levi) = levi_map(&rd, &set)?;
        let corank = rd.rank() - k;
        let m = if sub_torus == corank {
            m
        } else if sub_torus == 0 {
            let keep = GroupType::new(levi.factors[..levi.factors.len() - usize::from(corank > 0)].to_vec());
            let matrix = m.matrix[..k].to_vec();
            WeightMap::new(m.source.clone(), keep, matrix)?
        } else {
            return Err(Error::NoWeightMap(format!(
                "rank-{sub_torus} torus inside the rank-{corank} centre of the Levi is not determined"
            )));
        };
        let target = m.target.clone();
        compose(&m, &alias_map(&target, sub)?)
    })();
    StepAnalysis::legal(step, what, 1, map)
}

fn choose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = choose(&items[1..], k - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0]);
            rest
        })
        .collect();
    out.extend(choose(&items[1..], k));
    out
}

/// Decides whether a step is an instance of its tagged clause, computes the
/// prime bound, and builds the restriction map where one is available.
///
/// Apart from `levi` and `alias`, a step is matched by splitting both sides
/// into blocks: each block either carries factors over unchanged (up to
/// renaming, at most two factors per side) or is an instance of the clause.
/// At least one block must use the clause; among all splittings the one with
/// the smallest prime bound is kept.
pub fn analyze_step(step: &EmbeddingStep) -> StepAnalysis {
    let (sub, amb) = (&step.sub, &step.amb);
    match step.tag {
        ClauseTag::Alias => {
            if norm(sub) != norm(amb) {
                return StepAnalysis::illegal(format!("{sub} and {amb} are different types"));
            }
            StepAnalysis::legal(step, format!("{sub} = {amb}"), 1, alias_map(amb, sub))
        }
        ClauseTag::Torus => {
            if !sub.is_torus() || sub.rank() > amb.rank() {
                return StepAnalysis::illegal(format!("{sub} is not a torus of {amb}"));
            }
            StepAnalysis::legal(
                step,
                format!("torus {sub} in {amb}"),
                1,
                Err(Error::NoWeightMap("torus steps carry no map".into())),
            )
        }
        ClauseTag::Levi => analyze_levi(step),
        tag => {
            if sub.factors.len() > 16 || amb.factors.len() > 16 {
                return StepAnalysis::illegal("too many factors".into());
            }
            let mut search = Search {
                tag,
                sub,
                amb,
                best: None,
            };
            let full = |n: usize| if n == 0 { 0 } else { (1u32 << n) - 1 };
            search.run(full(sub.factors.len()), full(amb.factors.len()), &mut Vec::new());
            match search.best {
                None => StepAnalysis::illegal(format!("{sub} -> {amb} is not a {tag} step")),
                Some((p, blocks)) => {
                    let what = describe(step, &blocks);
                    StepAnalysis::legal(step, what, p, assemble(step, &blocks))
                }
            }
        }
    }
}
