use std::collections::{BTreeSet, HashMap};

use phirep::zeck::{luc_to_fib, lucas_subset_decompose, LucasWord, Parity};

fn fibs(len: usize) -> Vec<u64> {
    let mut f = vec![0u64, 1];
    while f.len() < len {
        let k = f.len();
        f.push(f[k - 1] + f[k - 2]);
    }
    f
}

/// `L_i = F_{i-1} + F_{i+1}`, with `L_0 = 2`.
fn lucas_from_fib(i: usize, f: &[u64]) -> u64 {
    if i == 0 {
        2
    } else {
        f[i - 1] + f[i + 1]
    }
}

#[test]
fn lucas_words_convert_to_zeckendorf() {
    let f = fibs(30);
    let lucas: Vec<u64> = (0..20).map(|i| lucas_from_fib(i, &f)).collect();
    for len in 0..=20usize {
        // words with a leading 1, plus the empty word
        let (lo, hi) = if len == 0 { (0, 1) } else { (1u32 << (len - 1), 1u32 << len) };
        for mask in lo..hi {
            let bits: Vec<bool> = (0..len).rev().map(|j| mask >> j & 1 == 1).collect();
            let expected: u64 = (0..len).filter(|&j| mask >> j & 1 == 1).map(|j| lucas[j]).sum();
            let z = luc_to_fib(&LucasWord::from_bits(bits)).unwrap();
            let zb = z.bits();
            assert!(zb.windows(2).all(|w| !(w[0] && w[1])), "{mask:b}");
            let value: u64 = zb
                .iter()
                .rev()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(j, _)| f[j + 2])
                .sum();
            assert_eq!(value, expected, "{mask:b}");
        }
    }
}

/// Subset sums by dynamic programming over the family, keeping every way.
fn subset_sum_ways(bound: u64, family: &[(u32, u64)]) -> HashMap<u64, Vec<BTreeSet<u32>>> {
    let mut ways: HashMap<u64, Vec<BTreeSet<u32>>> = HashMap::from([(0, vec![BTreeSet::new()])]);
    for &(i, l) in family {
        let current: Vec<(u64, Vec<BTreeSet<u32>>)> =
            ways.iter().map(|(k, v)| (*k, v.clone())).collect();
        for (sum, sets) in current {
            if sum + l <= bound {
                for mut s in sets {
                    s.insert(i);
                    ways.entry(sum + l).or_default().push(s);
                }
            }
        }
    }
    ways
}

#[test]
fn greedy_matches_subset_sums() {
    let f = fibs(40);
    let bound = 20_000u64;
    for (parity, first) in [
        (Parity::Odd, 1u32),
        (Parity::Even, 4),
        (Parity::Even, 0),
        (Parity::Odd, 5),
    ] {
        let family: Vec<(u32, u64)> = (first..)
            .filter(|&i| Parity::of(i as i64) == parity)
            .map(|i| (i, lucas_from_fib(i as usize, &f)))
            .take_while(|&(_, l)| l <= bound)
            .collect();
        let ways = subset_sum_ways(bound, &family);
        for m in 0..=bound {
            let expected = ways.get(&m).map(|v| {
                assert_eq!(v.len(), 1, "{m} has several representations");
                v[0].clone()
            });
            assert_eq!(
                lucas_subset_decompose(m, parity, first),
                expected,
                "{m} {parity:?} {first}"
            );
        }
    }
}
