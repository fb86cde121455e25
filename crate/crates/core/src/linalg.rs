//! Small exact integer linear algebra: rank, determinants, primitive vectors.

use num_integer::Integer;

/// Divides a vector by the gcd of its entries. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank over Q, by fraction-free (Bareiss) elimination in i128.
pub fn rank(rows: &[&[i64]]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let cols = first.len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in c + 1..cols {
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix given by rows.
pub fn det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Generalized cross product of `m - 1` vectors in `Z^m`: a vector orthogonal to
/// all of them, nonzero exactly when they are linearly independent.
pub fn orthogonal_complement(vectors: &[&[i64]], dim: usize) -> Vec<i64> {
    debug_assert_eq!(vectors.len() + 1, dim);
    (0..dim)
        .map(|skip| {
            let minor: Vec<Vec<i64>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = det(&minor);
            let d = if skip % 2 == 0 { d } else { -d };
            i64::try_from(d).expect("cofactor overflows i64")
        })
        .collect()
}
