//! Linear algebra over `F_2` on packed bit vectors.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn xor(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the highest set bit.
    pub fn pivot(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Row-echelon basis of a subspace, keyed by pivot.
#[derive(Debug, Clone, Default)]
pub struct Span {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        // rows are kept sorted by decreasing pivot
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.pivot() else { return false };
        let at = self.pivots.partition_point(|&q| q > p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }
}

/// Kernel basis and image span of the map sending basis vector `i` of the
/// source to `images[i]`.
pub fn kernel_and_image(images: &[BitVec]) -> (Vec<BitVec>, Span) {
    let n = images.len();
    // (reduced image, combination of source vectors producing it), pivot
    let mut rows: Vec<(BitVec, BitVec, usize)> = Vec::new();
    let mut kernel = Vec::new();
    let mut image = Span::new();
    for (i, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut combo = BitVec::zeros(n);
        combo.set(i);
        while let Some((rv, rc, _)) = v
            .pivot()
            .and_then(|p| rows.iter().find(|(_, _, q)| *q == p))
        {
            v.xor(rv);
            combo.xor(rc);
        }
        match v.pivot() {
            None => kernel.push(combo),
            Some(p) => {
                image.insert(&v);
                rows.push((v, combo, p));
            }
        }
    }
    (kernel, image)
}
