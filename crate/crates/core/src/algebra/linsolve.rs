//! Exact Gaussian elimination over the rationals.

use rug::Rational;

/// Solve `A x = b`. Returns one solution (free variables set to zero) and the
/// number of free variables, or `None` when the system is inconsistent.
pub fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<(Vec<Rational>, usize)> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::from(a[r][c].recip_ref());
        for j in c..cols {
            a[r][j] *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = Rational::from(&f * &a[r][j]);
                    a[i][j] -= t;
                }
                let t = Rational::from(&f * &b[r]);
                b[i] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| *x != 0) {
        return None;
    }
    let mut x = vec![Rational::new(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some((x, cols - pivots.len()))
}
