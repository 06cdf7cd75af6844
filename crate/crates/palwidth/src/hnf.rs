//! Exact integer linear algebra: solves `A·x = b` over the integers by
//! column-style Hermite reduction with gcd pivoting. Sizes here are tiny
//! (spanning sets of commutator brackets), so clarity beats asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Solves `A·x = b` over Z. `columns` holds the columns of A, each of length
/// `rows`. Returns any integer solution, or `None` when none exists.
pub(crate) fn solve_integer_system(
    rows: usize,
    columns: &[Vec<BigInt>],
    b: &[BigInt],
) -> Option<Vec<BigInt>> {
    assert!(columns.iter().all(|c| c.len() == rows));
    assert_eq!(b.len(), rows);
    let cols = columns.len();

    // Working copy W and transformation U, as columns; the invariant
    // W[:,j] = A · U[:,j] holds under every column operation below.
    let mut w: Vec<Vec<BigInt>> = columns.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut e = vec![BigInt::zero(); cols];
            e[j] = BigInt::from(1);
            e
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut c = 0;
    for r in 0..rows {
        if c >= cols {
            break;
        }
        loop {
            let pivot = (c..cols)
                .filter(|&j| !w[j][r].is_zero())
                .min_by_key(|&j| w[j][r].abs());
            let Some(j0) = pivot else {
                break;
            };
            w.swap(c, j0);
            u.swap(c, j0);
            let mut eliminated = true;
            for j in (c + 1)..cols {
                if w[j][r].is_zero() {
                    continue;
                }
                let q = w[j][r].div_rem(&w[c][r]).0;
                if !q.is_zero() {
                    for k in 0..rows {
                        let t = &q * &w[c][k];
                        w[j][k] -= t;
                    }
                    for k in 0..cols {
                        let t = &q * &u[c][k];
                        u[j][k] -= t;
                    }
                }
                if !w[j][r].is_zero() {
                    eliminated = false;
                }
            }
            if eliminated {
                if w[c][r].is_negative() {
                    for k in 0..rows {
                        w[c][k] = -&w[c][k];
                    }
                    for k in 0..cols {
                        u[c][k] = -&u[c][k];
                    }
                }
                pivots.push((r, c));
                c += 1;
                break;
            }
        }
    }

    // Forward substitution against the echelon columns.
    let mut residual = b.to_vec();
    let mut y = vec![BigInt::zero(); cols];
    let mut next_pivot = 0;
    for r in 0..rows {
        if next_pivot < pivots.len() && pivots[next_pivot].0 == r {
            let col = pivots[next_pivot].1;
            let (q, rem) = residual[r].div_rem(&w[col][r]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for k in r..rows {
                    let t = &q * &w[col][k];
                    residual[k] -= t;
                }
            }
            y[col] = q;
            next_pivot += 1;
        } else if !residual[r].is_zero() {
            return None;
        }
    }

    // x = U · y.
    let mut x = vec![BigInt::zero(); cols];
    for j in 0..cols {
        if y[j].is_zero() {
            continue;
        }
        for k in 0..cols {
            let t = &y[j] * &u[j][k];
            x[k] += t;
        }
    }

    // The solve is exact by construction; this guards the solver itself.
    for r in 0..rows {
        let mut acc = BigInt::zero();
        for (j, col) in columns.iter().enumerate() {
            acc += &x[j] * &col[r];
        }
        if acc != b[r] {
            return None;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn cols(data: &[&[i64]]) -> Vec<Vec<BigInt>> {
        data.iter()
            .map(|c| c.iter().map(|&v| big(v)).collect())
            .collect()
    }

    #[test]
    fn solves_square_system() {
        // 2x + 3y = 12, x + 2y = 7  =>  x = 3, y = 2.
        let a = cols(&[&[2, 1], &[3, 2]]);
        let b = vec![big(12), big(7)];
        let x = solve_integer_system(2, &a, &b).unwrap();
        assert_eq!(x, vec![big(3), big(2)]);
    }

    #[test]
    fn detects_non_integral_solutions() {
        // 2x = 3 has no integer solution.
        let a = cols(&[&[2]]);
        assert!(solve_integer_system(1, &a, &[big(3)]).is_none());
        assert!(solve_integer_system(1, &a, &[big(4)]).is_some());
    }

    #[test]
    fn detects_inconsistent_systems() {
        // x = 1 and x = 2 simultaneously.
        let a = cols(&[&[1, 1]]);
        assert!(solve_integer_system(2, &a, &[big(1), big(2)]).is_none());
    }

    #[test]
    fn handles_underdetermined_systems() {
        // x + y = 5 over two unknowns.
        let a = cols(&[&[1], &[1]]);
        let x = solve_integer_system(1, &a, &[big(5)]).unwrap();
        assert_eq!(&x[0] + &x[1], big(5));
    }

    #[test]
    fn gcd_pivoting_combines_columns() {
        // 4x + 6y = 2 solvable over Z since gcd(4,6) = 2.
        let a = cols(&[&[4], &[6]]);
        let x = solve_integer_system(1, &a, &[big(2)]).unwrap();
        assert_eq!(&x[0] * 4 + &x[1] * 6, big(2));
        assert!(solve_integer_system(1, &a, &[big(3)]).is_none());
    }

    #[test]
    fn zero_matrix_and_zero_target() {
        let a = cols(&[&[0, 0], &[0, 0]]);
        assert!(solve_integer_system(2, &a, &[big(0), big(0)]).is_some());
        assert!(solve_integer_system(2, &a, &[big(1), big(0)]).is_none());
    }

    #[test]
    fn random_systems_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let rows = rng.gen_range(1..6);
            let cols_n = rng.gen_range(1..6);
            let a: Vec<Vec<BigInt>> = (0..cols_n)
                .map(|_| (0..rows).map(|_| big(rng.gen_range(-9..=9))).collect())
                .collect();
            let x0: Vec<BigInt> = (0..cols_n).map(|_| big(rng.gen_range(-9..=9))).collect();
            let b: Vec<BigInt> = (0..rows)
                .map(|r| a.iter().zip(&x0).map(|(col, x)| &col[r] * x).sum())
                .collect();
            let solved = solve_integer_system(rows, &a, &b).expect("constructed to be solvable");
            for r in 0..rows {
                let acc: BigInt = a.iter().zip(&solved).map(|(col, x)| &col[r] * x).sum();
                assert_eq!(acc, b[r]);
            }
        }
    }
}
