use std::collections::BTreeSet;

use super::datum::factor_cartan;
use super::{GroupType, Letter, RootDatum, SimpleType};
use crate::{Error, Result};

/// A connected piece of a Dynkin subdiagram. `nodes[k]` is the index (in the
/// surrounding datum) of Bourbaki node `k` of `stype`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub stype: SimpleType,
    pub nodes: Vec<usize>,
}

fn candidates(k: usize) -> Vec<SimpleType> {
    let mk = |letter, rank| SimpleType {
        letter,
        rank,
        short: false,
    };
    let mut out = vec![mk(Letter::A, k)];
    if k >= 2 {
        out.push(mk(Letter::B, k));
    }
    if k >= 3 {
        out.push(mk(Letter::C, k));
    }
    if k >= 4 {
        out.push(mk(Letter::D, k));
    }
    if (6..=8).contains(&k) {
        out.push(mk(Letter::E, k));
    }
    if k == 4 {
        out.push(mk(Letter::F, 4));
    }
    if k == 2 {
        out.push(mk(Letter::G, 2));
    }
    out
}

fn assign(
    canon: &[Vec<i64>],
    cartan: &[Vec<i64>],
    nodes: &[usize],
    sigma: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = sigma.len();
    if k == canon.len() {
        return true;
    }
    for (pos, &v) in nodes.iter().enumerate() {
        if used[pos] {
            continue;
        }
        let fits = sigma
            .iter()
            .enumerate()
            .all(|(a, &u)| canon[a][k] == cartan[u][v] && canon[k][a] == cartan[v][u]);
        if !fits {
            continue;
        }
        used[pos] = true;
        sigma.push(v);
        if assign(canon, cartan, nodes, sigma, used) {
            return true;
        }
        sigma.pop();
        used[pos] = false;
    }
    false
}

/// Identifies a connected set of nodes of `cartan` with a standard type and
/// returns the lexicographically first Bourbaki labelling.
fn identify(cartan: &[Vec<i64>], nodes: &[usize]) -> (SimpleType, Vec<usize>) {
    for cand in candidates(nodes.len()) {
        let (canon, _) = factor_cartan(cand);
        let mut sigma = Vec::new();
        let mut used = vec![false; nodes.len()];
        if assign(&canon, cartan, nodes, &mut sigma, &mut used) {
            return (cand, sigma);
        }
    }
    unreachable!("connected subdiagram of a finite Dynkin diagram is of finite type")
}

fn connected_pieces(cartan: &[Vec<i64>], nodes: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let mut left = nodes.clone();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut piece = vec![start];
        let mut i = 0;
        while i < piece.len() {
            let u = piece[i];
            let next: Vec<usize> = left.iter().copied().filter(|&v| cartan[u][v] != 0).collect();
            for v in next {
                left.remove(&v);
                piece.push(v);
            }
            i += 1;
        }
        piece.sort();
        out.push(piece);
    }
    out
}

/// Components of the Dynkin subdiagram on `nodes`, ordered by smallest node.
///
/// A type A component is marked short (`~`) when all of its roots are short
/// inside an `F4` or `G2` factor, or when it sits inside a factor that is
/// itself marked short.
pub fn components(rd: &RootDatum, nodes: &[usize]) -> Result<Vec<Component>> {
    let rank = rd.rank();
    let mut set = BTreeSet::new();
    for &i in nodes {
        if i >= rank {
            return Err(Error::BadIndex { index: i, rank });
        }
        if !rd.is_torus_coord(i) {
            set.insert(i);
        }
    }
    let factors = &rd.gtype().factors;
    Ok(connected_pieces(rd.cartan(), &set)
        .into_iter()
        .map(|piece| {
            let (mut stype, labels) = identify(rd.cartan(), &piece);
            let host = factors[rd.factor_of(piece[0])];
            let all_short = matches!(host.letter, Letter::F | Letter::G)
                && piece.iter().all(|&i| rd.norms()[i] == 1);
            stype.short = stype.letter == Letter::A && (host.short || all_short);
            Component {
                stype,
                nodes: labels,
            }
        })
        .collect())
}

/// Group type of the Levi subgroup generated by the simple roots in `nodes`:
/// its simple components followed by a central torus of the remaining rank.
pub fn subdiagram_type(rd: &RootDatum, nodes: &[usize]) -> Result<GroupType> {
    let comps = components(rd, nodes)?;
    let ss: usize = comps.iter().map(|c| c.stype.rank).sum();
    let mut g = GroupType::new(comps.into_iter().map(|c| c.stype).collect());
    g.factors.extend(GroupType::torus(rd.rank() - ss).factors);
    Ok(g)
}

/// Canonical form of a group type together with the coordinate permutation
/// realising it: coordinate `k` of the normal form is coordinate `perm[k]`
/// of `g`.
///
/// Low-rank aliases are resolved (`B1 = C1 = A1`, `D1 = T1`, `D2 = A1.A1`,
/// `D3 = A3`, `C2 = B2`), factors are sorted and torus factors merged into a
/// single trailing `T`. Tildes are kept.
pub fn normal_form(g: &GroupType) -> (GroupType, Vec<usize>) {
    let mut pieces: Vec<(SimpleType, Vec<usize>)> = Vec::new();
    let mut torus = Vec::new();
    for (f, off) in g.factors.iter().zip(g.offsets()) {
        if f.is_torus() {
            torus.extend(off..off + f.rank);
            continue;
        }
        let (cartan, _) = factor_cartan(*f);
        let all: BTreeSet<usize> = (0..f.rank).collect();
        for piece in connected_pieces(&cartan, &all) {
            let (mut stype, labels) = identify(&cartan, &piece);
            stype.short = f.short;
            pieces.push((stype, labels.into_iter().map(|i| i + off).collect()));
        }
    }
    pieces.sort_by_key(|(s, _)| *s);
    let mut factors: Vec<SimpleType> = pieces.iter().map(|(s, _)| *s).collect();
    let mut perm: Vec<usize> = pieces.into_iter().flat_map(|(_, p)| p).collect();
    factors.extend(GroupType::torus(torus.len()).factors);
    perm.extend(torus);
    (GroupType::new(factors), perm)
}

pub fn normalize_type(g: &GroupType) -> GroupType {
    normal_form(g).0
}
