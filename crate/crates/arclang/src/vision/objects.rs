//! Background prediction and object extraction. Objects are 8-connected
//! components of non-background cells.

use crate::grid::{Color, Grid, COLOR_COUNT};
use serde::{Deserialize, Serialize};

/// A connected set of colored cells, stored relative to its tight bounding
/// box. `offset` locates the bounding-box top-left in the source grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectMask {
    offset: (usize, usize),
    height: usize,
    width: usize,
    cells: Vec<(usize, usize, Color)>,
}

impl ObjectMask {
    /// Builds a mask from absolute grid cells. The bounding box is computed,
    /// so it is tight by construction.
    pub fn from_absolute_cells(mut cells: Vec<(usize, usize, Color)>) -> ObjectMask {
        assert!(!cells.is_empty(), "an object mask needs at least one cell");
        cells.sort_by_key(|&(r, c, _)| (r, c));
        cells.dedup_by_key(|&mut (r, c, _)| (r, c));
        let top = cells.iter().map(|&(r, _, _)| r).min().unwrap();
        let left = cells.iter().map(|&(_, c, _)| c).min().unwrap();
        let bottom = cells.iter().map(|&(r, _, _)| r).max().unwrap();
        let right = cells.iter().map(|&(_, c, _)| c).max().unwrap();
        let cells = cells
            .into_iter()
            .map(|(r, c, color)| (r - top, c - left, color))
            .collect();
        ObjectMask {
            offset: (top, left),
            height: bottom - top + 1,
            width: right - left + 1,
            cells,
        }
    }

    /// A mask covering every cell of a grid, used by the whole-image path.
    pub fn whole_grid(g: &Grid) -> ObjectMask {
        let mut cells = Vec::with_capacity(g.height() * g.width());
        for r in 0..g.height() {
            for c in 0..g.width() {
                cells.push((r, c, g.get(r, c)));
            }
        }
        ObjectMask::from_absolute_cells(cells)
    }

    pub fn offset(&self) -> (usize, usize) {
        self.offset
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Cells relative to the bounding-box top-left, sorted by (row, col).
    pub fn cells(&self) -> &[(usize, usize, Color)] {
        &self.cells
    }

    pub fn contains(&self, dr: usize, dc: usize) -> bool {
        self.cells
            .binary_search_by_key(&(dr, dc), |&(r, c, _)| (r, c))
            .is_ok()
    }

    /// The single shared color, or `None` for multichromatic masks.
    pub fn monochromatic(&self) -> Option<Color> {
        let first = self.cells[0].2;
        self.cells.iter().all(|&(_, _, c)| c == first).then_some(first)
    }
}

/// Majority-color background heuristic: the most frequent color wins; ties go
/// to black when black is among the tied colors, otherwise to the lowest
/// index.
pub fn predict_background(g: &Grid) -> Color {
    let mut counts = [0usize; COLOR_COUNT];
    for &cell in g.cells() {
        counts[cell.index() as usize] += 1;
    }
    let best = *counts.iter().max().unwrap();
    let winner = (0..COLOR_COUNT).find(|&i| counts[i] == best).unwrap();
    Color::new(winner as u8).unwrap()
}

const NEIGHBORS_8: [(i32, i32); 8] = [
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -1),
    (0, 1),
    (1, -1),
    (1, 0),
    (1, 1),
];

/// Extracts all 8-connected components of cells different from `background`,
/// ordered by the row-major scan position of each component's first cell.
pub fn extract_objects(g: &Grid, background: Color) -> Vec<ObjectMask> {
    let (h, w) = (g.height(), g.width());
    let mut visited = vec![false; h * w];
    let mut objects = Vec::new();
    for seed_r in 0..h {
        for seed_c in 0..w {
            let idx = seed_r * w + seed_c;
            if visited[idx] || g.get(seed_r, seed_c) == background {
                continue;
            }
            let mut component = Vec::new();
            let mut stack = vec![(seed_r, seed_c)];
            visited[idx] = true;
            while let Some((r, c)) = stack.pop() {
                component.push((r, c, g.get(r, c)));
                for (dr, dc) in NEIGHBORS_8 {
                    let (nr, nc) = (r as i32 + dr, c as i32 + dc);
                    if nr < 0 || nc < 0 || nr >= h as i32 || nc >= w as i32 {
                        continue;
                    }
                    let (nr, nc) = (nr as usize, nc as usize);
                    let nidx = nr * w + nc;
                    if !visited[nidx] && g.get(nr, nc) != background {
                        visited[nidx] = true;
                        stack.push((nr, nc));
                    }
                }
            }
            objects.push(ObjectMask::from_absolute_cells(component));
        }
    }
    objects
}

/// Mirror symmetry of the binary mask within its bounding box. `horizontal`
/// is the top-bottom mirror, `vertical` the left-right mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryTag {
    pub horizontal: bool,
    pub vertical: bool,
}

pub fn detect_symmetry(mask: &ObjectMask) -> SymmetryTag {
    let (h, w) = (mask.height(), mask.width());
    let horizontal = mask
        .cells()
        .iter()
        .all(|&(dr, dc, _)| mask.contains(h - 1 - dr, dc));
    let vertical = mask
        .cells()
        .iter()
        .all(|&(dr, dc, _)| mask.contains(dr, w - 1 - dc));
    SymmetryTag {
        horizontal,
        vertical,
    }
}
