//! Word-level bitset helpers shared by the checkers and oracles.
//!
//! Sets over `[0, n)` are stored as `&[u64]` slices of `words_for(n)`
//! words, least significant bit first. Keeping these as plain slices
//! lets the graph store its adjacency matrix as one flat allocation.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

pub(crate) fn zeroed(words: usize) -> Vec<u64> {
    vec![0u64; words]
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i / 64] & (1u64 << (i % 64)) != 0
}

/// True iff `a ∩ b = ∅`.
#[inline]
pub(crate) fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// True iff `a ⊆ b`.
#[inline]
pub(crate) fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

#[inline]
pub(crate) fn is_empty(a: &[u64]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub(crate) fn copy_into(dst: &mut [u64], src: &[u64]) {
    dst.copy_from_slice(src);
}

pub(crate) fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

pub(crate) fn and_not_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

pub(crate) fn and_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

pub(crate) fn clear_all(dst: &mut [u64]) {
    dst.fill(0);
}

/// Iterates the set bits of `a` in ascending order.
pub(crate) fn ones(a: &[u64]) -> Ones<'_> {
    Ones { words: a, word_idx: 0, current: a.first().copied().unwrap_or(0) }
}

pub(crate) struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

pub(crate) fn from_indices(words: usize, indices: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut bits = zeroed(words);
    for i in indices {
        set(&mut bits, i);
    }
    bits
}
