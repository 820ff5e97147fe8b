//! Small exact integer linear algebra.

/// Basis of the integer kernel `{y in Z^n : A y = 0}` of an `m x n` matrix,
/// obtained from unimodular column reduction. The basis spans the kernel over
/// `Z`, not just over `Q`.
pub(crate) fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let m = a.len();
    let mut h: Vec<Vec<i64>> = a.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let col_op = |mat: &mut Vec<Vec<i64>>, j: usize, k: usize, c: [i64; 4]| {
        // (col_j, col_k) <- (c0 col_j + c1 col_k, c2 col_j + c3 col_k)
        for row in mat.iter_mut() {
            let (x, y) = (row[j], row[k]);
            row[j] = c[0] * x + c[1] * y;
            row[k] = c[2] * x + c[3] * y;
        }
    };
    let mut pivot_col = 0;
    for r in 0..m {
        if pivot_col == n {
            break;
        }
        for k in pivot_col + 1..n {
            let (x, y) = (h[r][pivot_col], h[r][k]);
            if y == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(x, y);
            let c = [s, t, -y / g, x / g];
            col_op(&mut h, pivot_col, k, c);
            col_op(&mut u, pivot_col, k, c);
        }
        if h[r][pivot_col] != 0 {
            pivot_col += 1;
        }
    }
    (pivot_col..n)
        .map(|j| (0..n).map(|i| u[i][j]).collect())
        .collect()
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}
