//! Smith normal form over the integers, used to abelianize finite
//! presentations.

/// Invariant factors of the cokernel of the integer matrix `rows x cols`
/// acting on `Z^cols`: torsion coefficients (> 1, each dividing the next)
/// and the free rank.
pub fn invariant_factors(rows: usize, cols: usize, entries: &[i64]) -> (Vec<u64>, usize) {
    assert_eq!(entries.len(), rows * cols);
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|r| (0..cols).map(|c| entries[r * cols + c] as i128).collect())
        .collect();
    let mut diag: Vec<i128> = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;

    while top < rows && left < cols {
        // Pivot: nonzero entry of least absolute value in the working block.
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in left..cols {
                if m[r][c] != 0
                    && pivot
                        .map(|(pr, pc)| m[r][c].abs() < m[pr][pc].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((r, c));
                }
            }
        }
        let (pr, pc) = match pivot {
            Some(p) => p,
            None => break,
        };
        m.swap(top, pr);
        for row in m.iter_mut() {
            row.swap(left, pc);
        }

        // Clear the pivot row and column; restart if a remainder shrinks the
        // pivot.
        let mut again = true;
        while again {
            again = false;
            for r in top + 1..rows {
                if m[r][left] != 0 {
                    let q = m[r][left].div_euclid(m[top][left]);
                    for c in left..cols {
                        m[r][c] -= q * m[top][c];
                    }
                    if m[r][left] != 0 {
                        m.swap(top, r);
                        again = true;
                    }
                }
            }
            for c in left + 1..cols {
                if m[top][c] != 0 {
                    let q = m[top][c].div_euclid(m[top][left]);
                    for r in top..rows {
                        m[r][c] -= q * m[r][left];
                    }
                    if m[top][c] != 0 {
                        for row in m.iter_mut().skip(top) {
                            row.swap(left, c);
                        }
                        again = true;
                    }
                }
            }
        }
        diag.push(m[top][left].abs());
        top += 1;
        left += 1;
    }

    // Enforce the divisibility chain d1 | d2 | ... by gcd/lcm swaps.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len().saturating_sub(1) {
            if diag[i + 1] % diag[i] != 0 {
                let g = gcd(diag[i], diag[i + 1]);
                let l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }

    let rank = diag.iter().filter(|&&d| d != 0).count();
    let torsion: Vec<u64> = diag
        .iter()
        .filter(|&&d| d > 1)
        .map(|&d| u64::try_from(d).expect("torsion coefficient fits in u64"))
        .collect();
    (torsion, cols - rank)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn no_relations_is_free() {
        assert_eq!(invariant_factors(0, 1, &[]), (vec![], 1));
        assert_eq!(invariant_factors(0, 3, &[]), (vec![], 3));
    }

    #[test]
    fn known_small_cases() {
        // Z / 2 + Z / 2 from the infinite-dihedral style abelianization.
        let (t, r) = invariant_factors(2, 2, &[2, 0, 0, 2]);
        assert_eq!((t, r), (vec![2, 2], 0));
        // Coker of [[2, 4], [0, 4]] = Z/2 + Z/4... via minors: d1 = gcd = 2,
        // d2 = |det| = 8, factors 2, 4.
        let (t, r) = invariant_factors(2, 2, &[2, 4, 0, 4]);
        assert_eq!((t, r), (vec![2, 4], 0));
        // A relation that kills nothing new.
        let (t, r) = invariant_factors(2, 2, &[1, 0, 0, 0]);
        assert_eq!((t, r), (vec![], 1));
    }

    // Independent oracle: determinantal divisors. d_k = gcd of all k x k
    // minors; the k-th invariant factor is d_k / d_{k-1}.
    fn oracle(rows: usize, cols: usize, entries: &[i64]) -> (Vec<u64>, usize) {
        fn minor_gcd(rows: usize, cols: usize, m: &[i64], k: usize) -> i128 {
            fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
                if k == 0 {
                    return vec![vec![]];
                }
                if n < k {
                    return vec![];
                }
                let mut out = combos(n - 1, k);
                for mut c in combos(n - 1, k - 1) {
                    c.push(n - 1);
                    out.push(c);
                }
                out
            }
            fn det(sub: &mut Vec<Vec<i128>>) -> i128 {
                let n = sub.len();
                if n == 0 {
                    return 1;
                }
                if n == 1 {
                    return sub[0][0];
                }
                let mut total = 0i128;
                for i in 0..n {
                    let mut rest: Vec<Vec<i128>> = Vec::new();
                    for (r, row) in sub.iter().enumerate() {
                        if r == i {
                            continue;
                        }
                        rest.push(row[1..].to_vec());
                    }
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    total += sign * sub[i][0] * det(&mut rest);
                }
                total
            }
            let mut g = 0i128;
            for rsel in combos(rows, k) {
                for csel in combos(cols, k) {
                    let mut sub: Vec<Vec<i128>> = rsel
                        .iter()
                        .map(|&r| csel.iter().map(|&c| m[r * cols + c] as i128).collect())
                        .collect();
                    g = super::gcd(g, det(&mut sub));
                }
            }
            g
        }
        let maxk = rows.min(cols);
        let mut divisors = vec![1i128];
        for k in 1..=maxk {
            divisors.push(minor_gcd(rows, cols, entries, k));
        }
        let mut torsion = Vec::new();
        let mut rank = 0;
        for k in 1..=maxk {
            if divisors[k] == 0 {
                break;
            }
            rank = k;
            let f = divisors[k] / divisors[k - 1];
            if f > 1 {
                torsion.push(f as u64);
            }
        }
        (torsion, cols - rank)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_determinantal_divisors(
            rows in 1usize..4,
            cols in 1usize..4,
            seed in proptest::collection::vec(-6i64..7, 16),
        ) {
            let entries: Vec<i64> = (0..rows * cols).map(|i| seed[i % seed.len()]).collect();
            prop_assert_eq!(
                invariant_factors(rows, cols, &entries),
                oracle(rows, cols, &entries)
            );
        }
    }
}
