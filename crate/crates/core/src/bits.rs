//! Fixed-length packed bit vectors used as membership windows.

const WORD: usize = 64;

/// A fixed-length bit vector. Bits past `len` are always zero in storage.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub(crate) fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: vec![u64::MAX; len.div_ceil(WORD)],
        };
        b.trim();
        b
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if v {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    /// `self |= other << shift`, truncated to `self.len()`.
    pub(crate) fn or_shifted_up(&mut self, other: &Bits, shift: usize) {
        let n = self.words.len();
        let (ws, bs) = (shift / WORD, shift % WORD);
        for k in (ws..n).rev() {
            let src = k - ws;
            let mut v = other.words.get(src).copied().unwrap_or(0) << bs;
            if bs != 0 && src > 0 {
                v |= other.words.get(src - 1).copied().unwrap_or(0) >> (WORD - bs);
            }
            self.words[k] |= v;
        }
        self.trim();
    }

    /// Returns `self >> shift`, with the vacated high positions set to one.
    pub(crate) fn shifted_down_fill_ones(&self, shift: usize) -> Bits {
        let n = self.words.len();
        let (ws, bs) = (shift / WORD, shift % WORD);
        let word_at = |i: usize| -> u64 {
            // bits past len read as ones
            if i >= n {
                return u64::MAX;
            }
            let rem = self.len % WORD;
            if i == n - 1 && rem != 0 {
                self.words[i] | (u64::MAX << rem)
            } else {
                self.words[i]
            }
        };
        let mut out = Bits::zeros(self.len);
        for k in 0..n {
            let src = k + ws;
            let mut v = word_at(src) >> bs;
            if bs != 0 {
                v |= word_at(src + 1) << (WORD - bs);
            }
            out.words[k] = v;
        }
        out.trim();
        out
    }

    pub(crate) fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }
}
