//! Small dense helpers for the iterative rankers.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Scales `a` to unit L2 norm; returns the previous norm. Zero vectors are
/// left untouched.
pub fn normalize_l2(a: &mut [f64]) -> f64 {
    let n = norm2(a);
    if n > 0.0 {
        a.iter_mut().for_each(|x| *x /= n);
    }
    n
}

/// Scales `a` to unit L1 mass (entries assumed non-negative).
pub fn normalize_l1(a: &mut [f64]) -> f64 {
    let s: f64 = a.iter().sum();
    if s > 0.0 {
        a.iter_mut().for_each(|x| *x /= s);
    }
    s
}

/// Modified Gram-Schmidt, two passes. Columns that collapse below
/// `1e-12` of their input norm are reported by index and zeroed.
pub fn orthonormalize(cols: &mut [Vec<f64>]) -> Vec<usize> {
    let mut collapsed = Vec::new();
    for j in 0..cols.len() {
        let before = norm2(&cols[j]);
        for _ in 0..2 {
            for i in 0..j {
                let (head, tail) = cols.split_at_mut(j);
                let c = dot(&head[i], &tail[0]);
                tail[0].iter_mut().zip(&head[i]).for_each(|(x, q)| *x -= c * q);
            }
        }
        let after = norm2(&cols[j]);
        if before == 0.0 || after <= 1e-12 * before {
            cols[j].iter_mut().for_each(|x| *x = 0.0);
            collapsed.push(j);
        } else {
            cols[j].iter_mut().for_each(|x| *x /= after);
        }
    }
    collapsed
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in descending order and the matching eigenvectors as
/// columns (`vectors[i]` is the i-th eigenvector).
pub fn symmetric_eigen(matrix: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let scale: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = idx.iter().map(|&i| a[i][i]).collect();
    let vectors = idx
        .iter()
        .map(|&i| (0..n).map(|k| v[k][i]).collect())
        .collect();
    (values, vectors)
}
