//! LSD radix sorting on integer keys, used wherever letter sets or
//! position-tagged letters have to be sorted in linear time.

const BITS_PER_PASS: u32 = 11;
const BUCKETS: usize = 1 << BITS_PER_PASS;

/// Stable sort of `items` by `key`, in `O(len · passes + 2^11 · passes)`
/// where `passes = ceil(bits(max key) / 11)`.
pub fn sort_by_key<T: Copy>(items: &mut [T], key: impl Fn(&T) -> u32) {
    if items.len() < 2 {
        return;
    }
    let max = items.iter().map(&key).max().unwrap_or(0);
    let bits = 32 - max.leading_zeros();
    let mut scratch: Vec<T> = Vec::with_capacity(items.len());
    let mut shift = 0;
    while shift < bits {
        let mut counts = [0usize; BUCKETS + 1];
        for it in items.iter() {
            counts[((key(it) >> shift) as usize & (BUCKETS - 1)) + 1] += 1;
        }
        for b in 1..=BUCKETS {
            counts[b] += counts[b - 1];
        }
        scratch.clear();
        scratch.extend_from_slice(items);
        for it in scratch.iter() {
            let b = (key(it) >> shift) as usize & (BUCKETS - 1);
            items[counts[b]] = *it;
            counts[b] += 1;
        }
        shift += BITS_PER_PASS;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_stably() {
        let mut v: Vec<(u32, usize)> = vec![(5, 0), (1, 1), (5, 2), (70000, 3), (0, 4), (1, 5)];
        sort_by_key(&mut v, |p| p.0);
        assert_eq!(v, vec![(0, 4), (1, 1), (1, 5), (5, 0), (5, 2), (70000, 3)]);
    }

    #[test]
    fn matches_std_sort() {
        let mut x: u64 = 12345;
        let mut v: Vec<u32> = (0..5000)
            .map(|_| {
                x = x
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (x >> 40) as u32
            })
            .collect();
        let mut expected = v.clone();
        expected.sort();
        sort_by_key(&mut v, |&k| k);
        assert_eq!(v, expected);
    }
}
