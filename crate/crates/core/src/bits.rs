//! Word-packed bit rows used by the host matrix.

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[inline]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    (row[i / WORD] >> (i % WORD)) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize, value: bool) {
    let mask = 1u64 << (i % WORD);
    if value {
        row[i / WORD] |= mask;
    } else {
        row[i / WORD] &= !mask;
    }
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// Number of set bits of `row` inside `mask`.
#[inline]
pub(crate) fn count_and(row: &[u64], mask: &[u64]) -> usize {
    row.iter()
        .zip(mask)
        .map(|(a, b)| (a & b).count_ones() as usize)
        .sum()
}

pub(crate) fn from_indices(len: usize, indices: &[usize]) -> Vec<u64> {
    let mut row = vec![0; words_for(len)];
    for &i in indices {
        set(&mut row, i, true);
    }
    row
}

pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * WORD + bit)
            }
        })
    })
}
