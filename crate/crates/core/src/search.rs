//! Small exhaustive-search helpers shared by the warping and region code.

use alloc::vec;
use alloc::vec::Vec;

/// Advances `xs` to the next permutation in lexicographic order; returns
/// false (leaving `xs` sorted) after the last one.
pub fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = Some((0..n).collect());
    core::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(out)
    })
}

/// Minimum-cost linear order of `0..n` where placing `a` anywhere before `b`
/// costs `cost[a][b]`. Exact, by dynamic programming over the set of items
/// already placed; ties go to the lexicographically smallest order.
pub fn min_linear_order(cost: &[Vec<u64>]) -> (u64, Vec<usize>) {
    let n = cost.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let full = (1usize << n) - 1;
    // best[mask] = cheapest cost of ordering the items *not* in mask after the
    // items in mask; filled from the full set downward so the choice of the
    // next item can be read off greedily in index order.
    let mut best = vec![u64::MAX; 1 << n];
    best[full] = 0;
    for mask in (0..full).rev() {
        let mut b = u64::MAX;
        for x in 0..n {
            if mask & (1 << x) != 0 {
                continue;
            }
            // x goes next: it comes after everything in mask and before the rest
            let rest = full & !mask & !(1 << x);
            let c: u64 = cost[x].iter().enumerate().filter(|&(y, _)| rest & (1 << y) != 0).map(|(_, &v)| v).sum();
            let total = c + best[mask | (1 << x)];
            b = b.min(total);
        }
        best[mask] = b;
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = 0usize;
    while mask != full {
        for x in 0..n {
            if mask & (1 << x) != 0 {
                continue;
            }
            let rest = full & !mask & !(1 << x);
            let c: u64 = (0..n).filter(|&y| rest & (1 << y) != 0).map(|y| cost[x][y]).sum();
            if c + best[mask | (1 << x)] == best[mask] {
                order.push(x);
                mask |= 1 << x;
                break;
            }
        }
    }
    (best[0], order)
}
