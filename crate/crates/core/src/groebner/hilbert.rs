use crate::polycore::Monomial;

/// Number of monomials of multidegree `target` (under per-variable weight
/// vectors `weights`) not divisible by any of `leads`. Every variable must
/// have a positive weight in some component.
pub fn count_standard(weights: &[Vec<i64>], target: &[i64], leads: &[&Monomial]) -> u64 {
    let n = weights.len();
    let mut exps = vec![0u32; n];
    let mut rem = target.to_vec();
    if rem.iter().any(|&r| r < 0) {
        return 0;
    }
    rec(weights, &mut rem, &mut exps, 0, leads)
}

fn rec(
    weights: &[Vec<i64>],
    rem: &mut [i64],
    exps: &mut [u32],
    i: usize,
    leads: &[&Monomial],
) -> u64 {
    if leads.iter().any(|l| prefix_divides(l, exps, i)) {
        return 0;
    }
    if i == weights.len() {
        return u64::from(rem.iter().all(|&r| r == 0));
    }
    let w = &weights[i];
    let mut total = 0;
    let mut e = 0u32;
    loop {
        total += rec(weights, rem, exps, i + 1, leads);
        // next exponent
        if rem.iter().zip(w).any(|(&r, &wk)| r - wk < 0) || w.iter().all(|&wk| wk == 0) {
            break;
        }
        for (r, wk) in rem.iter_mut().zip(w) {
            *r -= wk;
        }
        e += 1;
        exps[i] = e;
    }
    for (r, wk) in rem.iter_mut().zip(w) {
        *r += wk * e as i64;
    }
    exps[i] = 0;
    total
}

/// Does `l` divide the monomial whose first `upto` exponents are `exps` and
/// whose remaining exponents are zero?
fn prefix_divides(l: &Monomial, exps: &[u32], upto: usize) -> bool {
    let le = l.exponents();
    le[upto..].iter().all(|&e| e == 0) && le[..upto].iter().zip(exps).all(|(a, b)| a <= b)
}
