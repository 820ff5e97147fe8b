//! Independent oracles shared by several test targets.
//!
//! Classical nilpotents are built as explicit matrices, and their centralizers are found by
//! exact linear algebra rather than by any closed formula from the library.

#![allow(dead_code)]

use liechain::nilpotent::JordanKind;

pub type Mat = Vec<Vec<i64>>;

/// Rank over the rationals. Rows are kept primitive (content divided out)
/// so entries stay small; overflow would abort the test rather than
/// produce a wrong answer.
pub fn rank_q(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for i in 0..m.len() {
            if i == rank || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (pivot[c], m[i][c]);
            for j in 0..cols {
                m[i][j] = m[i][j]
                    .checked_mul(a)
                    .and_then(|x| x.checked_sub(pivot[j].checked_mul(b)?))
                    .expect("overflow in rational rank");
            }
            let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Rank over F_p.
pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, r);
        let k = inv(m[rank][c]);
        m[rank].iter_mut().for_each(|x| *x = *x * k % p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Null space over F_p, one basis vector per free column.
pub fn kernel_mod(rows: &[Vec<i64>], cols: usize, p: i64) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, r);
        let k = inv(m[rank][c]);
        m[rank].iter_mut().for_each(|x| *x = *x * k % p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (-m[r][free]).rem_euclid(p);
            }
            v
        })
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat, p: Option<i64>) -> Mat {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    if let Some(p) = p {
        c.iter_mut().flatten().for_each(|x| *x = x.rem_euclid(p));
    }
    c
}

/// Jordan partition of a nilpotent matrix from the ranks of its powers.
pub fn jordan_partition(x: &Mat, rank: impl Fn(&Mat) -> usize, p: Option<i64>) -> Vec<usize> {
    let n = x.len();
    let mut ranks = vec![n];
    let mut pow = x.clone();
    while *ranks.last().unwrap() > 0 {
        ranks.push(rank(&pow));
        pow = mat_mul(&pow, x, p);
        assert!(ranks.len() <= n + 1, "matrix is not nilpotent");
    }
    // at_least[k] = number of blocks of size >= k + 1.
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, c - next));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Explicit nilpotent of the given Jordan type in the algebra of `kind`,
/// with the Gram matrix of its invariant form and the diagonal of a
/// grading element `h` for which `x` has degree 2.
///
/// A single block string `v_1 -> ... -> v_s` carries the form
/// `B(v_i, v_j) = (-1)^i [i + j = s + 1]`, which is symmetric for odd `s`
/// and alternating for even `s`. Blocks whose form has the wrong symmetry
/// are paired with a copy and the two strings are put in duality.
pub struct Nilpotent {
    pub x: Mat,
    pub form: Option<Mat>,
    pub h: Vec<i64>,
}

pub fn build_nilpotent(kind: JordanKind, partition: &[usize]) -> Option<Nilpotent> {
    let n: usize = partition.iter().sum();
    let mut x = vec![vec![0; n]; n];
    let mut form = vec![vec![0; n]; n];
    let mut h = vec![0; n];
    let eps = if kind == JordanKind::Sp { -1 } else { 1 };
    let mut sizes: Vec<usize> = partition.to_vec();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut offset = 0;
    let mut place_string = |s: usize, x: &mut Mat, h: &mut Vec<i64>| {
        let start = offset;
        for k in 0..s {
            h[start + k] = 2 * k as i64 + 1 - s as i64;
            if k + 1 < s {
                x[start + k + 1][start + k] = 1;
            }
        }
        offset += s;
        start
    };
    let sign = |i: usize| if i % 2 == 0 { 1 } else { -1 };
    let mut i = 0;
    while i < sizes.len() {
        let s = sizes[i];
        let self_dual = kind == JordanKind::GL || (s % 2 == 1) == (eps == 1);
        if self_dual {
            let a = place_string(s, &mut x, &mut h);
            if kind != JordanKind::GL {
                for k in 0..s {
                    // 1-based i = k + 1 pairs with j = s - k.
                    form[a + k][a + s - 1 - k] = sign(k + 1);
                }
            }
            i += 1;
        } else {
            if sizes.get(i + 1) != Some(&s) {
                return None;
            }
            let a = place_string(s, &mut x, &mut h);
            let b = place_string(s, &mut x, &mut h);
            for k in 0..s {
                form[a + k][b + s - 1 - k] = sign(k + 1);
                form[b + s - 1 - k][a + k] = eps * sign(k + 1);
            }
            i += 2;
        }
    }
    Some(Nilpotent {
        x,
        form: (kind != JordanKind::GL).then_some(form),
        h,
    })
}

/// Linear equations on `y` (flattened row-major) for `[y, x] = 0` and, with
/// a form `J`, `y^T J + J y = 0`, restricted to the variables `vars`.
fn centralizer_equations(nil: &Nilpotent, vars: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let n = nil.x.len();
    let col: std::collections::HashMap<(usize, usize), usize> =
        vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // (yx - xy)_{ij} = sum_k y_ik x_kj - x_ik y_kj
            let mut row = vec![0; vars.len()];
            for k in 0..n {
                if let Some(&c) = col.get(&(i, k)) {
                    row[c] += nil.x[k][j];
                }
                if let Some(&c) = col.get(&(k, j)) {
                    row[c] -= nil.x[i][k];
                }
            }
            rows.push(row);
            if let Some(jm) = &nil.form {
                // (y^T J + J y)_{ij} = sum_k y_ki J_kj + J_ik y_kj
                let mut row = vec![0; vars.len()];
                for k in 0..n {
                    if let Some(&c) = col.get(&(k, i)) {
                        row[c] += jm[k][j];
                    }
                    if let Some(&c) = col.get(&(k, j)) {
                        row[c] += jm[i][k];
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Dimensions of the centralizer of `x` in each `ad h` degree.
pub fn graded_centralizer(nil: &Nilpotent) -> std::collections::BTreeMap<i64, usize> {
    let n = nil.x.len();
    let mut by_degree: std::collections::BTreeMap<i64, Vec<(usize, usize)>> = Default::default();
    for i in 0..n {
        for j in 0..n {
            by_degree.entry(nil.h[i] - nil.h[j]).or_default().push((i, j));
        }
    }
    by_degree
        .into_iter()
        .map(|(d, vars)| {
            let rows = centralizer_equations(nil, &vars);
            (d, vars.len() - rank_q(&rows))
        })
        .collect()
}

/// Dimension of the centralizer of `x`, all variables at once.
pub fn centralizer_kernel_dim(nil: &Nilpotent) -> usize {
    let n = nil.x.len();
    let vars: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let rows = centralizer_equations(nil, &vars);
    vars.len() - rank_q(&rows)
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Checks that `x` preserves its form and the form has the right symmetry
/// and is nondegenerate.
pub fn check_in_algebra(kind: JordanKind, nil: &Nilpotent) {
    let Some(j) = &nil.form else { return };
    let eps = if kind == JordanKind::Sp { -1 } else { 1 };
    assert_eq!(transpose(j), j.iter().map(|r| r.iter().map(|v| eps * v).collect()).collect::<Mat>());
    assert_eq!(rank_q(j), j.len());
    let a = mat_mul(&transpose(&nil.x), j, None);
    let b = mat_mul(j, &nil.x, None);
    for (ra, rb) in a.iter().zip(&b) {
        for (u, v) in ra.iter().zip(rb) {
            assert_eq!(u + v, 0);
        }
    }
}

/// Jordan partitions of all nilpotent elements of `sp_n` or `so_n` over F_p,
/// by enumerating the whole Lie algebra. Only for tiny `n`.
pub fn nilpotent_types_over_fp(kind: JordanKind, n: usize, p: i64) -> std::collections::BTreeSet<Vec<usize>> {
    assert!(kind != JordanKind::GL);
    // Antidiagonal Gram matrix, with signs for the alternating case.
    let mut j = vec![vec![0; n]; n];
    for i in 0..n {
        j[i][n - 1 - i] = if kind == JordanKind::Sp && i >= n / 2 { -1 } else { 1 };
    }
    let vars: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |k| (i, k))).collect();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![0; n * n];
            for k in 0..n {
                row[k * n + a] += j[k][b];
                row[k * n + b] += j[a][k];
            }
            rows.push(row);
        }
    }
    let basis = kernel_mod(&rows, vars.len(), p);
    let dim = basis.len();
    let mut out = std::collections::BTreeSet::new();
    let mut coeffs = vec![0i64; dim];
    loop {
        let mut y = vec![vec![0; n]; n];
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                for (k, v) in b.iter().enumerate() {
                    y[k / n][k % n] = (y[k / n][k % n] + c * v).rem_euclid(p);
                }
            }
        }
        let mut pow = y.clone();
        for _ in 1..n {
            pow = mat_mul(&pow, &y, Some(p));
        }
        if pow.iter().flatten().all(|&v| v == 0) {
            out.insert(jordan_partition(&y, |m| rank_mod(m, p), Some(p)));
        }
        // Next coefficient vector in base p.
        let mut k = 0;
        while k < dim {
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
        if k == dim {
            break;
        }
    }
    out
}
