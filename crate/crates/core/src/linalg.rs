//! Exact Gaussian elimination over `Q(z_n)`.

use crate::scalar::CycloScalar;

pub type Row = Vec<CycloScalar>;

/// Brings `rows` into reduced row echelon form in place, drops zero rows,
/// and returns the pivot columns. Pivots are normalized to 1.
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][col..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                if p.is_zero() {
                    continue;
                }
                *x = &*x - &(&f * p);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Reduces `v` against an RREF basis; returns the residue.
pub fn reduce(basis: &[Row], pivots: &[usize], v: &[CycloScalar]) -> Row {
    let mut v = v.to_vec();
    for (row, &col) in basis.iter().zip(pivots) {
        if v[col].is_zero() {
            continue;
        }
        let f = v[col].clone();
        for j in col..v.len() {
            if !row[j].is_zero() {
                let t = &f * &row[j];
                v[j] = &v[j] - &t;
            }
        }
    }
    v
}

/// Whether `v` lies in the row span of an RREF matrix.
pub fn in_row_span(basis: &[Row], pivots: &[usize], v: &[CycloScalar]) -> bool {
    reduce(basis, pivots, v).iter().all(|x| x.is_zero())
}

/// Basis of the right null space `{x : M x = 0}` of an RREF matrix with
/// `ncols` columns, one vector per free column.
pub fn null_space(basis: &[Row], pivots: &[usize], ncols: usize, conductor: u32) -> Vec<Row> {
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![CycloScalar::zero(conductor); ncols];
        x[free] = CycloScalar::one(conductor);
        for (row, &pc) in basis.iter().zip(pivots) {
            x[pc] = -&row[free];
        }
        out.push(x);
    }
    out
}

pub fn dot(a: &[CycloScalar], b: &[CycloScalar]) -> CycloScalar {
    let n = a.first().map_or(1, |x| x.conductor());
    a.iter().zip(b).fold(CycloScalar::zero(n), |acc, (x, y)| &acc + &(x * y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Row {
        v.iter().map(|&x| CycloScalar::from_int(x, 1)).collect()
    }

    #[test]
    fn rref_of_small_matrix() {
        let mut m = vec![row(&[1, 0, 0]), row(&[1, 1, 0])];
        let piv = rref(&mut m);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m, vec![row(&[1, 0, 0]), row(&[0, 1, 0])]);
    }

    #[test]
    fn rank_drops_dependent_rows() {
        let m = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn null_space_is_annihilated() {
        let mut m = vec![row(&[1, 2, 3, 4]), row(&[0, 1, -1, 2])];
        let piv = rref(&mut m);
        let ns = null_space(&m, &piv, 4, 1);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &m {
                assert!(dot(r, x).is_zero());
            }
        }
    }
}
