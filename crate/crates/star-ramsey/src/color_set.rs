//! Small sets of colors drawn from `{1, …, t}`, stored as bitmasks.
//!
//! Color `i` occupies bit `i - 1`, which caps the number of colors at
//! [`MAX_COLORS`]. Subsets of a fixed size are ordered colexicographically
//! throughout the crate; [`ColorSet::colex_rank`] is the position of a set in
//! that order and is what indexes the dense value tables of a star family.

/// Largest supported color count.
pub const MAX_COLORS: usize = 62;

/// A set of colors from `{1, …, t}` as a bitmask (color `i` is bit `i - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// Builds a set from 1-based colors. Returns `None` when a color is out of
    /// `1..=MAX_COLORS` or appears twice.
    pub fn from_colors<I: IntoIterator<Item = usize>>(colors: I) -> Option<ColorSet> {
        let mut set = ColorSet::EMPTY;
        for c in colors {
            if !(1..=MAX_COLORS).contains(&c) || set.contains(c) {
                return None;
            }
            set.insert(c);
        }
        Some(set)
    }

    /// The full set `{1, …, t}`.
    pub fn full(t: usize) -> ColorSet {
        debug_assert!(t <= MAX_COLORS);
        ColorSet(if t == 0 { 0 } else { (1u64 << t) - 1 })
    }

    pub fn contains(self, color: usize) -> bool {
        debug_assert!((1..=MAX_COLORS).contains(&color));
        self.0 & (1u64 << (color - 1)) != 0
    }

    pub fn insert(&mut self, color: usize) {
        debug_assert!((1..=MAX_COLORS).contains(&color));
        self.0 |= 1u64 << (color - 1);
    }

    pub fn remove(&mut self, color: usize) {
        debug_assert!((1..=MAX_COLORS).contains(&color));
        self.0 &= !(1u64 << (color - 1));
    }

    pub fn with(mut self, color: usize) -> ColorSet {
        self.insert(color);
        self
    }

    pub fn without(mut self, color: usize) -> ColorSet {
        self.remove(color);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(c)
            }
        })
    }

    /// Sorted 1-based color list.
    pub fn colors(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Rank of this set among all sets of the same size, in colex order
    /// (combinatorial number system): `rank = Σ_j C(c_j − 1, j)` for the
    /// ascending colors `c_1 < … < c_s`.
    pub fn colex_rank(self) -> usize {
        let mut rank = 0u64;
        for (j, c) in self.iter().enumerate() {
            rank += binomial(c - 1, j + 1);
        }
        rank as usize
    }
}

impl std::fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::fmt::Display for ColorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// `C(n, k)` as `u64`. All values needed here (`n ≤ 62`) fit.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    debug_assert!(acc <= u64::MAX as u128);
    acc as u64
}

/// All `s`-subsets of `{1, …, t}` in colex order.
pub fn subsets_colex(t: usize, s: usize) -> impl Iterator<Item = ColorSet> {
    debug_assert!(s <= t && t <= MAX_COLORS);
    let mut current: Option<Vec<usize>> = if s <= t {
        Some((1..=s).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let cur = current.as_mut()?;
        let result = ColorSet::from_colors(cur.iter().copied()).expect("valid subset");
        // Advance: bump the leftmost element that has room before its successor,
        // resetting everything to its left to the minimum.
        let mut advanced = false;
        for j in 0..cur.len() {
            let ceiling = if j + 1 < cur.len() { cur[j + 1] } else { t + 1 };
            if cur[j] + 1 < ceiling {
                cur[j] += 1;
                for (i, slot) in cur.iter_mut().enumerate().take(j) {
                    *slot = i + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            current = None;
        }
        Some(result)
    })
}
