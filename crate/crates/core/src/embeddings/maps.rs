use super::{compose, WeightMap};
use crate::linalg::integer_kernel;
use crate::rootsystem::{components, normal_form, GroupType, Letter, RootDatum, SimpleType};
use crate::{Error, Result};

/// Identification of two spellings of the same type (`B1.B6 = A1.B6`,
/// `D3 = A3`, ...). Tildes are ignored.
pub fn alias_map(source: &GroupType, target: &GroupType) -> Result<WeightMap> {
    let (ns, ps) = normal_form(&source.without_tildes());
    let (nt, pt) = normal_form(&target.without_tildes());
    if ns != nt {
        return Err(Error::TypeMismatch(source.to_string(), target.to_string()));
    }
    let mut matrix = vec![vec![0; source.rank()]; target.rank()];
    for (s, t) in ps.iter().zip(&pt) {
        matrix[*t][*s] = 1;
    }
    WeightMap::new(source.clone(), target.clone(), matrix)
}

/// Restriction from `h^s` to the diagonal copy of `h`.
pub fn diag_map(h: &GroupType, s: usize) -> WeightMap {
    let n = h.rank();
    let mut source = GroupType::trivial();
    for _ in 0..s {
        source = source.product(h);
    }
    let matrix = (0..n)
        .map(|i| (0..n * s).map(|j| i64::from(j % n == i)).collect())
        .collect();
    WeightMap {
        source,
        target: h.clone(),
        matrix,
    }
}

fn st(letter: Letter, rank: usize) -> SimpleType {
    SimpleType {
        letter,
        rank,
        short: false,
    }
}

/// The folding pairs in Bourbaki labelling, with the node-orbit assignment
/// (0-based amb node -> 0-based sub node).
fn folding_pairs(amb: &GroupType) -> Vec<(SimpleType, SimpleType, Vec<usize>)> {
    let norm = normal_form(&amb.without_tildes()).0;
    let [f] = norm.factors[..] else { return vec![] };
    let n = f.rank;
    let mut out = Vec::new();
    match f.letter {
        Letter::A if n >= 3 && n % 2 == 1 => {
            let k = (n + 1) / 2;
            out.push((f, st(Letter::C, k), (0..n).map(|i| i.min(n - 1 - i)).collect()));
        }
        Letter::D => {
            out.push((f, st(Letter::B, n - 1), (0..n).map(|i| i.min(n - 2)).collect()));
            if n == 4 {
                out.push((f, st(Letter::G, 2), vec![0, 1, 0, 0]));
            }
        }
        Letter::E if n == 6 => out.push((f, st(Letter::F, 4), vec![3, 0, 2, 1, 2, 3])),
        _ => {}
    }
    out
}

/// Restriction to the fixed points of a diagram automorphism:
/// `(A_{2n-1}, C_n)`, `(D_n, B_{n-1})`, `(D4, G2)`, `(E6, F4)`.
/// Each fundamental weight goes to the fundamental weight of its node orbit.
pub fn folding_map(amb: &GroupType, sub: &GroupType) -> Result<WeightMap> {
    let unknown = || Error::UnknownPair(amb.to_string(), sub.to_string());
    let sub_norm = normal_form(&sub.without_tildes()).0;
    for (a, s, orbit) in folding_pairs(amb) {
        let s_type = GroupType::new(vec![s]);
        if normal_form(&s_type).0 != sub_norm {
            continue;
        }
        let a_type = GroupType::new(vec![a]);
        let mut matrix = vec![vec![0; a.rank]; s.rank];
        for (i, &o) in orbit.iter().enumerate() {
            matrix[o][i] = 1;
        }
        let core = WeightMap::new(a_type.clone(), s_type.clone(), matrix)?;
        let m = compose(&alias_map(amb, &a_type)?, &core)?;
        return compose(&m, &alias_map(&s_type, sub)?);
    }
    Err(unknown())
}

/// Restriction to the Levi subgroup on the simple roots `nodes`.
///
/// The target lists the Levi's simple components (coordinates `lambda_j`,
/// `j` in `nodes`, in Bourbaki order per component) followed by a central
/// torus whose coordinates are `<lambda, y>` for a basis `y` of the
/// cocharacters orthogonal to the chosen roots.
pub fn levi_map(rd: &RootDatum, nodes: &[usize]) -> Result<(WeightMap, GroupType)> {
    let comps = components(rd, nodes)?;
    let rank = rd.rank();
    let mut factors = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut chosen = Vec::new();
    for c in &comps {
        factors.push(c.stype);
        for &i in &c.nodes {
            chosen.push(i);
            rows.push((0..rank).map(|j| i64::from(j == i)).collect());
        }
    }
    let constraints: Vec<Vec<i64>> = chosen
        .iter()
        .map(|&j| (0..rank).map(|i| rd.cartan()[i][j]).collect())
        .collect();
    let kernel = integer_kernel(&constraints, rank);
    debug_assert_eq!(kernel.len(), rank - chosen.len());
    rows.extend(kernel);
    let mut target = GroupType::new(factors);
    target.factors.extend(GroupType::torus(rank - chosen.len()).factors);
    let m = WeightMap::new(rd.gtype().clone(), target.clone(), rows)?;
    Ok((m, target))
}
