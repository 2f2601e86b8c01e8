//! Lexicographic combination enumeration without per-item allocation.

/// Enumerates all `r`-element index combinations of `0..m` in
/// lexicographic order, exposing each as a slice.
pub(crate) struct Combinations {
    idx: alloc::vec::Vec<usize>,
    m: usize,
    r: usize,
    started: bool,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(m: usize, r: usize) -> Self {
        Combinations { idx: (0..r).collect(), m, r, started: false, done: r > m }
    }

    /// Advances to the next combination, returning it as index slice.
    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        // Find the rightmost index that can still move right.
        let mut i = self.r;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] + (self.r - i) < self.m {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..self.r {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn collect(m: usize, r: usize) -> Vec<Vec<usize>> {
        let mut c = Combinations::new(m, r);
        let mut out = Vec::new();
        while let Some(ix) = c.next() {
            out.push(ix.to_vec());
        }
        out
    }

    #[test]
    fn lexicographic() {
        assert_eq!(collect(4, 2), [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
        assert_eq!(collect(3, 0), [Vec::new()]);
        assert_eq!(collect(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(collect(3, 3), [[0, 1, 2]]);
    }
}
