//! Small combinatorial helpers shared across modules.

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Advance `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct rearrangements of a multiset, in lexicographic order.
pub(crate) fn distinct_arrangements<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = items.to_vec();
    cur.sort();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Sign of a permutation of `0..n` given as an image vector.
pub(crate) fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i32;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Weak compositions of `total` into `parts` nonnegative summands, in
/// lexicographic order. `parts == 0` yields one empty composition when
/// `total == 0` and none otherwise.
pub(crate) fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; parts];
    fill_compositions(total, 0, &mut cur, &mut out);
    out
}

fn fill_compositions(rem: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = rem;
        out.push(cur.clone());
        return;
    }
    for v in 0..=rem {
        cur[pos] = v;
        fill_compositions(rem - v, pos + 1, cur, out);
    }
}

pub(crate) fn factorial(n: u64) -> u64 {
    (2..=n).product::<u64>().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count_and_sign() {
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(permutation_sign(&[0, 1, 2, 3]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2, 3]), -1);
        // 3-cycle is even
        assert_eq!(permutation_sign(&[1, 2, 0, 3]), 1);
    }

    #[test]
    fn arrangements_dedup() {
        let arr = distinct_arrangements(&[2, 2, 3]);
        assert_eq!(arr, vec![vec![2, 2, 3], vec![2, 3, 2], vec![3, 2, 2]]);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(weak_compositions(2, 3).len(), 6);
        assert_eq!(weak_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert_eq!(weak_compositions(1, 0).len(), 0);
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
    }
}
