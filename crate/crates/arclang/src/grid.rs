//! Grid data model: the ten-color palette, rectangular grids, and the
//! dihedral transforms of the square used by the whole-image embedding check.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Number of colors in the palette.
pub const COLOR_COUNT: usize = 10;

/// Canonical color names, indexed by color value.
const COLOR_NAMES: [&str; COLOR_COUNT] = [
    "black", "blue", "red", "green", "yellow", "grey", "fuchsia", "orange", "cyan", "brown",
];

/// Maximum side length accepted by the task loader.
pub const MAX_SIDE: usize = 30;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("color index {0} is out of range (expected 0..=9)")]
    ColorOutOfRange(i64),
    #[error("unknown color name {0:?}")]
    UnknownColorName(String),
    #[error("grid has no cells")]
    EmptyGrid,
    #[error("ragged rows: row {row} has length {found}, expected {expected}")]
    RaggedRows {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("cell count {found} does not match {height}x{width}")]
    CellCountMismatch {
        height: usize,
        width: usize,
        found: usize,
    },
}

/// One of the ten palette colors. Each color has a canonical English name
/// used verbatim in scene descriptions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u8);

impl Color {
    pub const BLACK: Color = Color(0);

    pub fn new(index: u8) -> Result<Color, GridError> {
        if (index as usize) < COLOR_COUNT {
            Ok(Color(index))
        } else {
            Err(GridError::ColorOutOfRange(index as i64))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn name(self) -> &'static str {
        COLOR_NAMES[self.0 as usize]
    }

    pub fn from_name(name: &str) -> Option<Color> {
        COLOR_NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Color(i as u8))
    }

    pub fn all() -> impl Iterator<Item = Color> {
        (0..COLOR_COUNT as u8).map(Color)
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = u8::deserialize(deserializer)?;
        Color::new(value).map_err(de::Error::custom)
    }
}

/// A rectangular matrix of colors, stored row-major. Grids are immutable
/// after construction; transforms return new grids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    height: usize,
    width: usize,
    cells: Vec<Color>,
}

impl Grid {
    pub fn new(height: usize, width: usize, cells: Vec<Color>) -> Result<Grid, GridError> {
        if height == 0 || width == 0 {
            return Err(GridError::EmptyGrid);
        }
        if cells.len() != height * width {
            return Err(GridError::CellCountMismatch {
                height,
                width,
                found: cells.len(),
            });
        }
        Ok(Grid {
            height,
            width,
            cells,
        })
    }

    pub fn filled(height: usize, width: usize, color: Color) -> Grid {
        Grid::new(height, width, vec![color; height * width]).expect("non-zero dimensions")
    }

    /// Builds a grid from rows of raw color indices, validating rectangularity
    /// and color range.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Grid, GridError> {
        if rows.is_empty() || rows[0].as_ref().is_empty() {
            return Err(GridError::EmptyGrid);
        }
        let width = rows[0].as_ref().len();
        let mut cells = Vec::with_capacity(rows.len() * width);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != width {
                return Err(GridError::RaggedRows {
                    row: r,
                    found: row.len(),
                    expected: width,
                });
            }
            for &value in row {
                if !(0..COLOR_COUNT as i64).contains(&value) {
                    return Err(GridError::ColorOutOfRange(value));
                }
                cells.push(Color(value as u8));
            }
        }
        Grid::new(rows.len(), width, cells)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, row: usize, col: usize) -> Color {
        debug_assert!(row < self.height && col < self.width);
        self.cells[row * self.width + col]
    }

    pub fn cells(&self) -> &[Color] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.cells.chunks(self.width)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows()
            .map(|row| row.iter().map(|c| c.index()).collect())
            .collect()
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Grid {}x{}", self.height, self.width)?;
        for row in self.rows() {
            for cell in row {
                write!(f, "{}", cell.index())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

// Grids serialize as ARC-style arrays of arrays of color indices.
impl Serialize for Grid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Grid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        Grid::from_rows(&rows).map_err(de::Error::custom)
    }
}

/// Quarter-turn rotations, applied clockwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Rotation {
    R0,
    R90,
    R180,
    R270,
}

impl Rotation {
    pub const ALL: [Rotation; 4] = [Rotation::R0, Rotation::R90, Rotation::R180, Rotation::R270];

    pub fn quarter_turns(self) -> usize {
        match self {
            Rotation::R0 => 0,
            Rotation::R90 => 1,
            Rotation::R180 => 2,
            Rotation::R270 => 3,
        }
    }

    pub fn degrees(self) -> usize {
        self.quarter_turns() * 90
    }

    fn from_quarter_turns(turns: usize) -> Rotation {
        Rotation::ALL[turns % 4]
    }
}

/// One of the eight symmetries of the square: an optional horizontal mirror
/// (left-right flip) followed by a clockwise rotation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct D4Transform {
    pub rotation: Rotation,
    pub mirrored: bool,
}

impl D4Transform {
    pub const IDENTITY: D4Transform = D4Transform {
        rotation: Rotation::R0,
        mirrored: false,
    };

    /// All eight transforms in the fixed search order used by the embedding
    /// check: the four rotations unmirrored, then the four rotations mirrored.
    pub const ALL: [D4Transform; 8] = [
        D4Transform { rotation: Rotation::R0, mirrored: false },
        D4Transform { rotation: Rotation::R90, mirrored: false },
        D4Transform { rotation: Rotation::R180, mirrored: false },
        D4Transform { rotation: Rotation::R270, mirrored: false },
        D4Transform { rotation: Rotation::R0, mirrored: true },
        D4Transform { rotation: Rotation::R90, mirrored: true },
        D4Transform { rotation: Rotation::R180, mirrored: true },
        D4Transform { rotation: Rotation::R270, mirrored: true },
    ];

    /// The group inverse. Reflections are involutions; pure rotations invert
    /// to the complementary rotation.
    pub fn inverse(self) -> D4Transform {
        if self.mirrored {
            self
        } else {
            D4Transform {
                rotation: Rotation::from_quarter_turns(4 - self.rotation.quarter_turns()),
                mirrored: false,
            }
        }
    }

    /// Composition: the transform equivalent to applying `self` first and
    /// `then` second.
    pub fn compose(self, then: D4Transform) -> D4Transform {
        let a = self.rotation.quarter_turns();
        let b = then.rotation.quarter_turns();
        if then.mirrored {
            // M R_a = R_{-a} M, so R_b M R_a M^m = R_{b-a} M^{1+m}
            D4Transform {
                rotation: Rotation::from_quarter_turns((4 + b) - a),
                mirrored: !self.mirrored,
            }
        } else {
            D4Transform {
                rotation: Rotation::from_quarter_turns(a + b),
                mirrored: self.mirrored,
            }
        }
    }
}

fn mirror_lr(g: &Grid) -> Grid {
    let (h, w) = (g.height(), g.width());
    let mut cells = Vec::with_capacity(h * w);
    for r in 0..h {
        for c in 0..w {
            cells.push(g.get(r, w - 1 - c));
        }
    }
    Grid::new(h, w, cells).expect("same dimensions")
}

fn rotate_cw(g: &Grid) -> Grid {
    let (h, w) = (g.height(), g.width());
    let mut cells = Vec::with_capacity(h * w);
    for r in 0..w {
        for c in 0..h {
            cells.push(g.get(h - 1 - c, r));
        }
    }
    Grid::new(w, h, cells).expect("same cell count")
}

/// Applies a dihedral transform: mirror first (when set), then rotate
/// clockwise.
pub fn apply_transform(g: &Grid, t: D4Transform) -> Grid {
    let mut out = if t.mirrored { mirror_lr(g) } else { g.clone() };
    for _ in 0..t.rotation.quarter_turns() {
        out = rotate_cw(&out);
    }
    out
}

/// Replaces every cell with a `factor`x`factor` block of the same color.
pub fn scale_up(g: &Grid, factor: usize) -> Grid {
    assert!(factor >= 1, "scale factor must be at least 1");
    let (h, w) = (g.height() * factor, g.width() * factor);
    let mut cells = Vec::with_capacity(h * w);
    for r in 0..h {
        for c in 0..w {
            cells.push(g.get(r / factor, c / factor));
        }
    }
    Grid::new(h, w, cells).expect("non-zero factor")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grid_from(rows: &[&[i64]]) -> Grid {
        Grid::from_rows(rows).unwrap()
    }

    /// Independent per-cell coordinate oracle for each of the eight
    /// transforms, written directly from the definition (mirror = left-right
    /// flip applied before the clockwise rotation).
    fn transform_oracle(g: &Grid, t: D4Transform) -> Grid {
        let (h, w) = (g.height(), g.width());
        let src = |r: usize, c: usize| {
            if t.mirrored {
                g.get(r, w - 1 - c)
            } else {
                g.get(r, c)
            }
        };
        let (oh, ow) = match t.rotation {
            Rotation::R0 | Rotation::R180 => (h, w),
            Rotation::R90 | Rotation::R270 => (w, h),
        };
        let mut cells = Vec::with_capacity(h * w);
        for r in 0..oh {
            for c in 0..ow {
                let v = match t.rotation {
                    Rotation::R0 => src(r, c),
                    Rotation::R90 => src(h - 1 - c, r),
                    Rotation::R180 => src(h - 1 - r, w - 1 - c),
                    Rotation::R270 => src(c, w - 1 - r),
                };
                cells.push(v);
            }
        }
        Grid::new(oh, ow, cells).unwrap()
    }

    fn arb_grid() -> impl Strategy<Value = Grid> {
        (1usize..=8, 1usize..=8).prop_flat_map(|(h, w)| {
            proptest::collection::vec(0i64..10, h * w).prop_map(move |vals| {
                let cells = vals.into_iter().map(|v| Color::new(v as u8).unwrap()).collect();
                Grid::new(h, w, cells).unwrap()
            })
        })
    }

    #[test]
    fn color_names_are_a_bijection() {
        for color in Color::all() {
            assert_eq!(Color::from_name(color.name()), Some(color));
        }
        assert_eq!(Color::from_name("black").unwrap().index(), 0);
        assert_eq!(Color::from_name("cyan").unwrap().index(), 8);
        assert_eq!(Color::from_name("brown").unwrap().index(), 9);
        assert_eq!(Color::from_name("purple"), None);
        assert!(Color::new(10).is_err());
    }

    #[test]
    fn identity_transform_leaves_grid_unchanged() {
        let g = grid_from(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(apply_transform(&g, D4Transform::IDENTITY), g);
    }

    #[test]
    fn rotate_then_counter_rotate_restores_row() {
        let g = grid_from(&[&[1, 2, 3]]);
        let rotated = apply_transform(
            &g,
            D4Transform { rotation: Rotation::R90, mirrored: false },
        );
        assert_eq!((rotated.height(), rotated.width()), (3, 1));
        let back = apply_transform(
            &rotated,
            D4Transform { rotation: Rotation::R270, mirrored: false },
        );
        assert_eq!(back, g);
    }

    #[test]
    fn eight_transforms_of_asymmetric_grid_are_distinct() {
        let g = grid_from(&[
            &[1, 0, 0, 2, 0, 0, 3],
            &[0, 4, 0, 0, 0, 0, 0],
            &[0, 0, 5, 0, 0, 6, 0],
            &[7, 0, 0, 8, 0, 0, 0],
            &[0, 0, 9, 0, 1, 0, 2],
        ]);
        let images: Vec<Grid> = D4Transform::ALL.iter().map(|&t| apply_transform(&g, t)).collect();
        for i in 0..images.len() {
            for j in (i + 1)..images.len() {
                assert_ne!(images[i], images[j], "transforms {i} and {j} collide");
            }
        }
    }

    #[test]
    fn scale_up_examples() {
        let g = grid_from(&[&[2]]);
        let scaled = scale_up(&g, 3);
        assert_eq!(scaled, Grid::filled(3, 3, Color::new(2).unwrap()));

        let checker = grid_from(&[&[1, 0], &[0, 1]]);
        let scaled = scale_up(&checker, 2);
        assert_eq!((scaled.height(), scaled.width()), (4, 4));
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(scaled.get(r, c), checker.get(r / 2, c / 2));
            }
        }
        assert_eq!(scale_up(&checker, 1), checker);
    }

    #[test]
    #[should_panic(expected = "scale factor")]
    fn scale_up_rejects_zero() {
        let g = grid_from(&[&[1]]);
        let _ = scale_up(&g, 0);
    }

    #[test]
    fn grid_equality_examples() {
        let a = grid_from(&[&[1, 2], &[3, 4]]);
        assert_eq!(a, a.clone());
        let wider = grid_from(&[&[1, 2, 0], &[3, 4, 0]]);
        assert_ne!(a, wider);
        let one_off = grid_from(&[&[1, 2], &[3, 5]]);
        assert_ne!(a, one_off);
    }

    #[test]
    fn grid_serde_is_arc_json_shape() {
        let g = grid_from(&[&[0, 8], &[1, 2]]);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, "[[0,8],[1,2]]");
        let back: Grid = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Grid>("[[0,11]]").is_err());
        assert!(serde_json::from_str::<Grid>("[[0],[1,2]]").is_err());
    }

    proptest! {
        #[test]
        fn transform_matches_coordinate_oracle(g in arb_grid(), idx in 0usize..8) {
            let t = D4Transform::ALL[idx];
            prop_assert_eq!(apply_transform(&g, t), transform_oracle(&g, t));
        }

        #[test]
        fn transform_then_inverse_is_identity(g in arb_grid(), idx in 0usize..8) {
            let t = D4Transform::ALL[idx];
            let there = apply_transform(&g, t);
            prop_assert_eq!(apply_transform(&there, t.inverse()), g);
        }

        #[test]
        fn compose_matches_sequential_application(g in arb_grid(), i in 0usize..8, j in 0usize..8) {
            let (a, b) = (D4Transform::ALL[i], D4Transform::ALL[j]);
            let sequential = apply_transform(&apply_transform(&g, a), b);
            prop_assert_eq!(apply_transform(&g, a.compose(b)), sequential);
        }

        #[test]
        fn scale_then_downsample_restores(g in arb_grid(), k in 1usize..=3) {
            let scaled = scale_up(&g, k);
            prop_assert_eq!(scaled.height(), g.height() * k);
            prop_assert_eq!(scaled.width(), g.width() * k);
            for r in 0..scaled.height() {
                for c in 0..scaled.width() {
                    prop_assert_eq!(scaled.get(r, c), g.get(r / k, c / k));
                }
            }
        }
    }
}
