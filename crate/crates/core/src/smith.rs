//! Smith normal form over the integers with unimodular transforms.
//!
//! Pivot rule: smallest absolute value among the nonzero entries of the
//! remaining block, ties broken by row-major position. The rule is fixed so
//! that repeated runs produce identical decompositions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::matrix::IntegerMatrix;

/// U * M * V = S with U, V unimodular and S diagonal with a divisibility
/// chain s_1 | s_2 | ..., all entries nonnegative, zeros last.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
    pub factors: Vec<BigInt>,
}

struct Snf {
    m: IntegerMatrix,
    u: IntegerMatrix,
    v: IntegerMatrix,
}

impl Snf {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.m.cols() {
            let t = self.m[(a, j)].clone();
            self.m[(a, j)] = self.m[(b, j)].clone();
            self.m[(b, j)] = t;
        }
        for j in 0..self.u.cols() {
            let t = self.u[(a, j)].clone();
            self.u[(a, j)] = self.u[(b, j)].clone();
            self.u[(b, j)] = t;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m.rows() {
            let t = self.m[(i, a)].clone();
            self.m[(i, a)] = self.m[(i, b)].clone();
            self.m[(i, b)] = t;
        }
        for i in 0..self.v.rows() {
            let t = self.v[(i, a)].clone();
            self.v[(i, a)] = self.v[(i, b)].clone();
            self.v[(i, b)] = t;
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.m.cols() {
            let t = q * &self.m[(src, j)];
            self.m[(dst, j)] -= t;
        }
        for j in 0..self.u.cols() {
            let t = q * &self.u[(src, j)];
            self.u[(dst, j)] -= t;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.m.rows() {
            let t = q * &self.m[(i, src)];
            self.m[(i, dst)] -= t;
        }
        for i in 0..self.v.rows() {
            let t = q * &self.v[(i, src)];
            self.v[(i, dst)] -= t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.m.cols() {
            let t = -&self.m[(r, j)];
            self.m[(r, j)] = t;
        }
        for j in 0..self.u.cols() {
            let t = -&self.u[(r, j)];
            self.u[(r, j)] = t;
        }
    }

    /// Smallest-abs nonzero entry of the block starting at (t, t), ties in
    /// row-major order.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m.rows() {
            for j in t..self.m.cols() {
                if self.m[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.m[(i, j)].abs() < self.m[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }

    fn clear_position(&mut self, t: usize) {
        loop {
            let (pi, pj) = match self.find_pivot(t) {
                Some(p) => p,
                None => return,
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            if self.m[(t, t)].is_negative() {
                self.negate_row(t);
            }
            let mut dirty = false;
            let pivot = self.m[(t, t)].clone();
            for i in t + 1..self.m.rows() {
                if !self.m[(i, t)].is_zero() {
                    let q = self.m[(i, t)].div_floor(&pivot);
                    self.row_sub(i, t, &q);
                    if !self.m[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..self.m.cols() {
                if !self.m[(t, j)].is_zero() {
                    let q = self.m[(t, j)].div_floor(&pivot);
                    self.col_sub(j, t, &q);
                    if !self.m[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear. Make the pivot divide the rest
            // of the block; a non-divisible entry is folded into column t.
            let mut offender = None;
            'scan: for i in t + 1..self.m.rows() {
                for j in t + 1..self.m.cols() {
                    if !self.m[(i, j)].mod_floor(&pivot).is_zero() {
                        offender = Some(j);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(j) => {
                    // col t += col j, then re-reduce
                    let minus_one = BigInt::from(-1);
                    self.col_sub(t, j, &minus_one);
                }
                None => return,
            }
        }
    }
}

/// Smith normal form of an arbitrary integer matrix.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<SmithDecomposition> {
    let mut snf = Snf {
        m: m.clone(),
        u: IntegerMatrix::identity(m.rows()),
        v: IntegerMatrix::identity(m.cols()),
    };
    let k = m.rows().min(m.cols());
    for t in 0..k {
        snf.clear_position(t);
    }
    let factors: Vec<BigInt> = (0..k).map(|i| snf.m[(i, i)].clone()).collect();
    Ok(SmithDecomposition { u: snf.u, s: snf.m, v: snf.v, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn check_decomposition(mat: &IntegerMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(mat).unwrap();
        // u * m * v = s
        let prod = snf.u.mul(mat).unwrap().mul(&snf.v).unwrap();
        assert_eq!(prod, snf.s, "u*m*v != s for {:?}", mat);
        // unimodular transforms
        assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::one());
        // divisibility chain, nonnegative, zeros last
        for w in snf.factors.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero(), "chain broken: {:?}", snf.factors);
            }
        }
        snf
    }

    #[test]
    fn already_diagonal() {
        let snf = check_decomposition(&m(&[vec![3, 0], vec![0, 0]]));
        assert_eq!(snf.factors, vec![BigInt::from(3), BigInt::zero()]);
    }

    #[test]
    fn two_by_two() {
        let snf = check_decomposition(&m(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(snf.factors, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn unimodular_input() {
        let snf = check_decomposition(&m(&[vec![1, -1], vec![-2, 1]]));
        assert_eq!(snf.factors, vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn non_square_inputs() {
        check_decomposition(&m(&[vec![2, 4, 4]]));
        check_decomposition(&m(&[vec![6], vec![10], vec![15]]));
    }

    #[test]
    fn deterministic() {
        let a = m(&[vec![4, -2, 7], vec![0, 3, 9], vec![5, 5, 5]]);
        let s1 = smith_normal_form(&a).unwrap();
        let s2 = smith_normal_form(&a).unwrap();
        assert_eq!(s1.u, s2.u);
        assert_eq!(s1.v, s2.v);
        assert_eq!(s1.factors, s2.factors);
    }
}
