//! Type A quivers, their staircase embedding and level-set combinatorics.
//!
//! Vertices are labelled `1..=n`. Position `i` of the orientation word
//! (`1 <= i < n`) describes the arrow between `i` and `i + 1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`all_orientations`].
pub const MAX_SWEEP_VERTICES: usize = 20;

/// Direction of the arrow between consecutive vertices `i` and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Arrow {
    /// `i -> i + 1`
    Right,
    /// `i + 1 -> i`
    Left,
}

impl Arrow {
    pub fn reversed(self) -> Arrow {
        match self {
            Arrow::Right => Arrow::Left,
            Arrow::Left => Arrow::Right,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Arrow::Right => 'R',
            Arrow::Left => 'L',
        }
    }
}

/// A quiver whose underlying graph is the path `1 - 2 - ... - n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeAQuiver {
    arrows: Vec<Arrow>,
}

impl TypeAQuiver {
    pub fn new(arrows: Vec<Arrow>) -> Self {
        TypeAQuiver { arrows }
    }

    /// Parses an orientation word such as `RRLRRLR`, optionally prefixed by
    /// the vertex count (`8:RRLRRLR`).
    pub fn parse(text: &str) -> Result<Self> {
        let (count, word) = match text.split_once(':') {
            Some((count, word)) => {
                let count =
                    count.trim().parse::<usize>().map_err(|_| Error::InvalidOrientation { found: ':', position: 0 })?;
                (Some(count), word)
            }
            None => (None, text),
        };
        let arrows = word
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'R' => Ok(Arrow::Right),
                'L' => Ok(Arrow::Left),
                other => Err(Error::InvalidOrientation { found: other, position: i + 1 }),
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(count) = count {
            if count != arrows.len() + 1 {
                return Err(Error::LengthMismatch { expected: count.saturating_sub(1), found: arrows.len() });
            }
        }
        Ok(TypeAQuiver { arrows })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.arrows.len() + 1
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// The arrow between `i` and `i + 1`, for `1 <= i < n`.
    pub fn arrow(&self, i: usize) -> Arrow {
        self.arrows[i - 1]
    }

    pub fn word(&self) -> String {
        self.arrows.iter().map(|a| a.letter()).collect()
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> TypeAQuiver {
        TypeAQuiver { arrows: self.arrows.iter().map(|a| a.reversed()).collect() }
    }

    pub fn is_equioriented(&self) -> bool {
        self.arrows.windows(2).all(|w| w[0] == w[1])
    }

    pub fn staircase_embedding(&self) -> EmbeddingMap {
        let mut x = Vec::with_capacity(self.n());
        let mut y = Vec::with_capacity(self.n());
        let (mut cx, mut cy) = (0, 0);
        x.push(cx);
        y.push(cy);
        for arrow in &self.arrows {
            match arrow {
                Arrow::Right => cx += 1,
                Arrow::Left => cy += 1,
            }
            x.push(cx);
            y.push(cy);
        }
        EmbeddingMap { x, y }
    }

    pub fn level_sets(&self) -> LevelDecomposition {
        let embedding = self.staircase_embedding();
        let x_levels = levels_of(&embedding.x);
        let y_levels = levels_of(&embedding.y);
        let x_chains = chains_of(&x_levels, self.n());
        let y_chains = chains_of(&y_levels, self.n());
        LevelDecomposition { x_levels, y_levels, x_chains, y_chains }
    }
}

impl FromStr for TypeAQuiver {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TypeAQuiver::parse(s)
    }
}

impl fmt::Display for TypeAQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

// Coordinates are nondecreasing along the path, so each level is a run of
// consecutive vertices.
fn levels_of(coord: &[usize]) -> Vec<VertexSet> {
    let mut levels: Vec<VertexSet> = Vec::new();
    let mut start = 0;
    for z in 1..=coord.len() {
        if z == coord.len() || coord[z] != coord[start] {
            levels.push(VertexSet::range(start + 1, z));
            start = z;
        }
    }
    levels
}

fn chains_of(levels: &[VertexSet], n: usize) -> Vec<VertexSet> {
    levels.iter().map(|level| VertexSet::range(level.min().unwrap_or(1), n)).collect()
}

/// Integer coordinates of the staircase drawing of a type A quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingMap {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl EmbeddingMap {
    /// `x(z)` for vertex `z` (1-indexed).
    pub fn x(&self, z: usize) -> usize {
        self.x[z - 1]
    }

    pub fn y(&self, z: usize) -> usize {
        self.y[z - 1]
    }

    pub fn xs(&self) -> &[usize] {
        &self.x
    }

    pub fn ys(&self) -> &[usize] {
        &self.y
    }
}

/// The level sets `X_k`, `Y_k` and their upward unions.
///
/// `x_chains[i]` is the union of `X_i, ..., X_{x(n)}`; likewise for `y`.
/// Both chains start at the full vertex set and shrink strictly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDecomposition {
    pub x_levels: Vec<VertexSet>,
    pub y_levels: Vec<VertexSet>,
    pub x_chains: Vec<VertexSet>,
    pub y_chains: Vec<VertexSet>,
}

/// A sorted set of vertex labels, printed as `{1,2,3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet((lo..=hi).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, z: usize) -> bool {
        self.0.binary_search(&z).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_interval(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&z| other.contains(z))
    }

    /// Indicator vector of length `n`.
    pub fn indicator(&self, n: usize) -> Vec<u32> {
        let mut d = vec![0; n];
        for &z in &self.0 {
            d[z - 1] = 1;
        }
        d
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, z) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{z}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// All `2^(n-1)` orientations of `A_n` in lexicographic word order.
pub fn all_orientations(n: usize) -> Result<Vec<TypeAQuiver>> {
    if n == 0 || n > MAX_SWEEP_VERTICES {
        return Err(Error::VertexCount { n, max: MAX_SWEEP_VERTICES });
    }
    let m = n - 1;
    // 'L' < 'R', so bit value 1 = R read most-significant first is lexicographic.
    Ok((0u64..1 << m)
        .map(|bits| {
            let arrows =
                (0..m).map(|i| if bits >> (m - 1 - i) & 1 == 1 { Arrow::Right } else { Arrow::Left }).collect();
            TypeAQuiver::new(arrows)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(word: &str) -> TypeAQuiver {
        word.parse().unwrap()
    }

    fn sets(v: &[VertexSet]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn parse_words() {
        let ex = q("RRLRRLR");
        assert_eq!(ex.n(), 8);
        assert_eq!(ex.arrow(3), Arrow::Left);
        assert_eq!(ex.arrow(7), Arrow::Right);
        assert_eq!(q("").n(), 1);
        assert_eq!(q("RR").arrows(), &[Arrow::Right, Arrow::Right]);
        assert_eq!(q("8:RRLRRLR"), ex);
        assert_eq!(TypeAQuiver::parse("RXL").unwrap_err(), Error::InvalidOrientation { found: 'X', position: 2 });
        assert!(TypeAQuiver::parse("r").is_err());
        assert!(TypeAQuiver::parse("3:R").is_err());
    }

    #[test]
    fn opposite_words() {
        assert_eq!(q("RRLRRLR").opposite().word(), "LLRLLRL");
        assert_eq!(q("").opposite().word(), "");
        assert_eq!(q("RLLR").opposite().opposite(), q("RLLR"));
    }

    #[test]
    fn embedding_examples() {
        let e = q("RRLRRLR").staircase_embedding();
        assert_eq!(e.xs(), &[0, 1, 2, 2, 3, 4, 4, 5]);
        assert_eq!(e.ys(), &[0, 0, 0, 1, 1, 1, 2, 2]);
        let e = q("").staircase_embedding();
        assert_eq!((e.xs(), e.ys()), (&[0][..], &[0][..]));
        let e = q("LL").staircase_embedding();
        assert_eq!((e.xs(), e.ys()), (&[0, 0, 0][..], &[0, 1, 2][..]));
    }

    #[test]
    fn level_examples() {
        let l = q("RRLRRLR").level_sets();
        assert_eq!(sets(&l.x_levels), ["{1}", "{2}", "{3,4}", "{5}", "{6,7}", "{8}"]);
        assert_eq!(sets(&l.y_levels), ["{1,2,3}", "{4,5,6}", "{7,8}"]);
        assert_eq!(
            sets(&l.x_chains),
            ["{1,2,3,4,5,6,7,8}", "{2,3,4,5,6,7,8}", "{3,4,5,6,7,8}", "{5,6,7,8}", "{6,7,8}", "{8}"]
        );
        assert_eq!(sets(&l.y_chains), ["{1,2,3,4,5,6,7,8}", "{4,5,6,7,8}", "{7,8}"]);

        let l = q("RR").level_sets();
        assert_eq!(sets(&l.x_levels), ["{1}", "{2}", "{3}"]);
        assert_eq!(sets(&l.y_levels), ["{1,2,3}"]);
    }

    #[test]
    fn orientation_lists() {
        let words = |n| all_orientations(n).unwrap().iter().map(|q| q.word()).collect::<Vec<_>>();
        assert_eq!(words(1), [""]);
        assert_eq!(words(3), ["LL", "LR", "RL", "RR"]);
        assert_eq!(words(4).len(), 8);
        assert!(all_orientations(0).is_err());
        assert!(all_orientations(MAX_SWEEP_VERTICES + 1).is_err());
    }

    #[test]
    fn vertex_set_format() {
        assert_eq!(VertexSet::new(vec![3, 1, 2, 3]).to_string(), "{1,2,3}");
        assert_eq!(VertexSet::default().to_string(), "{}");
        assert_eq!(VertexSet::range(2, 3).indicator(4), vec![0, 1, 1, 0]);
    }
}
