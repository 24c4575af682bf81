//! Solution subgroup of a homogeneous linear system over Z4.
//!
//! The matrix is brought to diagonal form `P·A·Q = D` with `d_i ∈ {1, 2}` on
//! the diagonal; only the column transform `Q` is tracked. Solutions of
//! `A z = 0` are then `z = Q w` with `w_i = 0` where `d_i = 1`,
//! `w_i ∈ {0, 2}` where `d_i = 2`, and `w_i` free past the diagonal.

/// Generators of `{ z ∈ Z4^n : A z = 0 }` for `A` given as rows of symbols.
pub(crate) fn z4_null_space(a: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    let mut a: Vec<Vec<u8>> = a.iter().map(|r| r.iter().map(|v| v & 3).collect()).collect();
    let m = a.len();
    // q[j] is column j of Q.
    let mut q: Vec<Vec<u8>> = (0..n)
        .map(|j| {
            let mut c = vec![0u8; n];
            c[j] = 1;
            c
        })
        .collect();
    let mut diag = Vec::new();

    let mut t = 0;
    while t < m.min(n) {
        let find = |want_unit: bool, a: &Vec<Vec<u8>>| {
            (t..m).find_map(|i| {
                (t..n).find(|&j| if want_unit { a[i][j] & 1 == 1 } else { a[i][j] != 0 }).map(|j| (i, j))
            })
        };
        let Some((pi, pj)) = find(true, &a).or_else(|| find(false, &a)) else { break };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            q.swap(t, pj);
        }
        if a[t][t] == 3 {
            for v in a[t].iter_mut() {
                *v = (4 - *v) & 3;
            }
        }
        let d = a[t][t];
        // d is 1, or 2 with every remaining entry even, so d divides them all.
        for i in t + 1..m {
            let f = a[i][t] / d;
            if f != 0 {
                let pivot = a[t].clone();
                for (x, p) in a[i][t..n].iter_mut().zip(&pivot[t..n]) {
                    *x = (*x + 16 - f * p) & 3;
                }
            }
        }
        for j in t + 1..n {
            let f = a[t][j] / d;
            if f != 0 {
                for row in a.iter_mut() {
                    row[j] = (row[j] + 16 - f * row[t]) & 3;
                }
                let qt = q[t].clone();
                for (x, y) in q[j].iter_mut().zip(&qt) {
                    *x = (*x + 16 - f * y) & 3;
                }
            }
        }
        diag.push(d);
        t += 1;
    }

    let mut gens = Vec::new();
    for (i, &d) in diag.iter().enumerate() {
        if d == 2 {
            gens.push(q[i].iter().map(|v| (2 * v) & 3).collect());
        }
    }
    gens.extend(q.into_iter().skip(diag.len()));
    gens
}
