use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::int_matrix::IntMatrix;

/// Smith normal form `left * a * right = diag`, with `left` and `right`
/// unimodular and `diag[i] | diag[i+1]`, all diagonal entries non-negative.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut m = a.clone();
    let rows = m.rows;
    let cols = m.cols;
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);

    let swap_rows = |m: &mut IntMatrix, l: &mut IntMatrix, i: usize, j: usize| {
        if i == j {
            return;
        }
        for c in 0..m.cols {
            let tmp = m[(i, c)].clone();
            m[(i, c)] = m[(j, c)].clone();
            m[(j, c)] = tmp;
        }
        for c in 0..l.cols {
            let tmp = l[(i, c)].clone();
            l[(i, c)] = l[(j, c)].clone();
            l[(j, c)] = tmp;
        }
    };
    let swap_cols = |m: &mut IntMatrix, r: &mut IntMatrix, i: usize, j: usize| {
        if i == j {
            return;
        }
        for c in 0..m.rows {
            let tmp = m[(c, i)].clone();
            m[(c, i)] = m[(c, j)].clone();
            m[(c, j)] = tmp;
        }
        for c in 0..r.rows {
            let tmp = r[(c, i)].clone();
            r[(c, i)] = r[(c, j)].clone();
            r[(c, j)] = tmp;
        }
    };
    // row_i -= q * row_j, mirrored into `left`
    let add_row = |m: &mut IntMatrix, l: &mut IntMatrix, i: usize, j: usize, q: &BigInt| {
        for c in 0..m.cols {
            let s = q * &m[(j, c)];
            m[(i, c)] -= s;
        }
        for c in 0..l.cols {
            let s = q * &l[(j, c)];
            l[(i, c)] -= s;
        }
    };
    let add_col = |m: &mut IntMatrix, r: &mut IntMatrix, i: usize, j: usize, q: &BigInt| {
        for c in 0..m.rows {
            let s = q * &m[(c, j)];
            m[(c, i)] -= s;
        }
        for c in 0..r.rows {
            let s = q * &r[(c, j)];
            r[(c, i)] -= s;
        }
    };

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // Find a pivot of minimal absolute value in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if m[(i, j)].abs() < m[(pi, pj)].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut m, &mut left, t, pi);
        swap_cols(&mut m, &mut right, t, pj);

        // Clear row and column t; restart whenever a remainder shrinks the pivot.
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&m[(i, t)], &m[(t, t)]);
                add_row(&mut m, &mut left, i, t, &q);
                if !m[(i, t)].is_zero() {
                    swap_rows(&mut m, &mut left, t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&m[(t, j)], &m[(t, t)]);
                add_col(&mut m, &mut right, j, t, &q);
                if !m[(t, j)].is_zero() {
                    swap_cols(&mut m, &mut right, t, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }

        // Enforce divisibility of the remaining block by the pivot.
        let mut disturbed = false;
        'check: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[(i, j)] % &m[(t, t)]).is_zero() {
                    // Fold row i into row t and redo this pivot position.
                    let one = BigInt::from(-1);
                    add_row(&mut m, &mut left, t, i, &one);
                    disturbed = true;
                    break 'check;
                }
            }
        }
        if !disturbed {
            t += 1;
        }
    }

    // Normalize signs.
    for i in 0..n {
        if m[(i, i)].is_negative() {
            for c in 0..cols {
                let v = -m[(i, c)].clone();
                m[(i, c)] = v;
            }
            for c in 0..left.cols {
                let v = -left[(i, c)].clone();
                left[(i, c)] = v;
            }
        }
    }

    let diag = (0..n).map(|i| m[(i, i)].clone()).collect();
    SnfResult { diag, left, right }
}

/// Quotient rounded toward the nearest integer, so remainders have at most
/// half the pivot's magnitude (fast convergence of the reduction loop).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        // left * a * right must reproduce the diagonal.
        let prod = snf.left.mul(a).mul(&snf.right);
        for i in 0..prod.rows {
            for j in 0..prod.cols {
                let expect = if i == j && i < snf.diag.len() {
                    snf.diag[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(prod[(i, j)], expect, "entry ({i},{j})");
            }
        }
        // Unimodularity.
        assert_eq!(snf.left.det().abs(), BigInt::from(1));
        assert_eq!(snf.right.det().abs(), BigInt::from(1));
        // Divisibility chain.
        for w in snf.diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "chain {:?}", snf.diag);
            } else {
                assert!(w[1].is_zero());
            }
        }
        assert!(snf.diag.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn small_examples() {
        check(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]));
        check(&IntMatrix::from_rows(&[vec![0, 0], vec![0, 0]]));
        check(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]]));
        check(&IntMatrix::from_rows(&[vec![6, 4], vec![4, 6]]));
        check(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
    }

    #[test]
    fn rectangular() {
        check(&IntMatrix::from_rows(&[vec![3, 6, 9, 12], vec![2, 4, 6, 8]]));
        check(&IntMatrix::from_rows(&[vec![5], vec![10], vec![15]]));
    }
}
