//! Exact rank computations.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::Scalar;

/// Rank of a dense matrix over a field by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot_row: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                let sub = &factor * y;
                *x = &*x - &sub;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Rank over the rationals of an integer matrix by fraction-free (Bareiss)
/// elimination; all intermediate values stay integral.
pub fn rank_integer(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            for c in col + 1..ncols {
                let v = &rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank modulo a prime of an integer matrix.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u32) -> usize {
    let m = p as i64;
    rank_residues(
        rows.iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(m) as u64).collect())
            .collect(),
        p as u64,
    )
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Gaussian elimination on residues in `[0, p)`, `p < 2^32` prime.
pub fn rank_residues(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                *x = (*x + (p - f) * y) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// The image of an exact scalar in `F_p`, if its denominator is a unit there.
pub fn residue(s: &Scalar, p: u32) -> Option<u64> {
    match s {
        Scalar::Prime { value, modulus } => (*modulus == p).then_some(*value as u64),
        Scalar::Rational(q) => {
            let pb = BigInt::from(p);
            let num = (q.numer() % &pb + &pb) % &pb;
            let den = (q.denom() % &pb + &pb) % &pb;
            let num = u64::try_from(num).ok()?;
            let den = u64::try_from(den).ok()?;
            if den == 0 {
                return None;
            }
            Some(num * pow_mod(den, p as u64 - 2, p as u64) % p as u64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn ranks_agree_with_hand_computation() {
        let m: &[&[i64]] = &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]];
        assert_eq!(rank_integer(int_rows(m)), 2);
        let q: Vec<Vec<Scalar>> = m
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_i64(Field::Rational, x)).collect())
            .collect();
        assert_eq!(rank(q), 2);
    }

    #[test]
    fn characteristic_matters() {
        // determinant 2: full rank over Q, rank 1 over F_2
        let m: &[&[i64]] = &[&[1, 1], &[1, -1]];
        assert_eq!(rank_integer(int_rows(m)), 2);
        assert_eq!(rank_mod_p(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), 2), 1);
    }

    #[test]
    fn empty_and_zero_matrices() {
        assert_eq!(rank(Vec::new()), 0);
        assert_eq!(rank_integer(int_rows(&[&[0, 0], &[0, 0]])), 0);
    }
}
