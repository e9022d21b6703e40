//! Integer row reduction for kernel lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn sub_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

/// Unimodular row reduction on the first `ncols` columns. Returns the pivot
/// positions `(row, col)`.
fn echelon(rows: &mut [Vec<BigInt>], ncols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next >= rows.len() {
            break;
        }
        let mut found = false;
        loop {
            let best = (next..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            found = true;
            rows.swap(next, best);
            let mut clean = true;
            for r in next + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[next][col]);
                sub_multiple(rows, r, next, &q);
                if !rows[r][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if found {
            pivots.push((next, col));
            next += 1;
        }
    }
    pivots
}

/// Hermite normal form of the row lattice; zero rows dropped.
pub(crate) fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let pivots = echelon(&mut rows, ncols);
    for &(r, c) in &pivots {
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for above in 0..r {
            let q = rows[above][c].div_floor(&rows[r][c]);
            if !q.is_zero() {
                sub_multiple(&mut rows, above, r, &q);
            }
        }
    }
    rows.truncate(pivots.len());
    rows
}

/// Z-basis, in Hermite normal form, of `{u : sum_i u_i * rows[i] = 0}`.
pub(crate) fn integer_left_kernel(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigInt>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|j| BigInt::from(u8::from(i == j))));
            v
        })
        .collect();
    echelon(&mut aug, m);
    let kernel: Vec<Vec<BigInt>> = aug
        .into_iter()
        .filter(|row| row[..m].iter().all(Zero::is_zero))
        .map(|row| row[m..].to_vec())
        .collect();
    if kernel.is_empty() {
        return kernel;
    }
    hermite_rows(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // u0*(2) + u1*(3) = 0  ->  (3,-2) up to sign, HNF makes pivot positive.
        let k = integer_left_kernel(&[v(&[2]), v(&[3])]);
        assert_eq!(k, vec![v(&[3, -2])]);
    }

    #[test]
    fn kernel_is_saturated() {
        // rows 2 and 4: kernel spanned by (2,-1), not (4,-2).
        let k = integer_left_kernel(&[v(&[2]), v(&[4])]);
        assert_eq!(k, vec![v(&[2, -1])]);
    }

    #[test]
    fn zero_map_gives_identity() {
        let k = integer_left_kernel(&[v(&[0, 0]), v(&[0, 0])]);
        assert_eq!(k, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_rows(vec![v(&[2, 3]), v(&[1, 1])]);
        let b = hermite_rows(vec![v(&[3, 4]), v(&[-1, -1])]);
        assert_eq!(a, b);
        assert_eq!(a, vec![v(&[1, 0]), v(&[0, 1])]);
    }
}
