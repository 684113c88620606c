//! Whole-image embedding check: does one grid appear inside another under
//! some combination of rotation, reflection, and integer scaling?

use crate::grid::{apply_transform, scale_up, D4Transform, Grid};
use serde::{Deserialize, Serialize};

/// Which grid of a pair played the role of the embedded (smaller) image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EmbeddingDirection {
    InputInOutput,
    OutputInInput,
}

/// A witness that `transform`, then `scale`, then overlay at `offset` maps
/// the smaller grid onto a window of the larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingResult {
    pub transform: D4Transform,
    pub scale: usize,
    pub offset: (usize, usize),
    pub direction: EmbeddingDirection,
}

fn window_matches(pattern: &Grid, large: &Grid, at: (usize, usize)) -> bool {
    for r in 0..pattern.height() {
        for c in 0..pattern.width() {
            if pattern.get(r, c) != large.get(at.0 + r, at.1 + c) {
                return false;
            }
        }
    }
    true
}

/// Searches scales ascending, then the eight transforms in `D4Transform::ALL`
/// order, then offsets in row-major scan order, and returns the first match.
/// `direction` records which way the caller is comparing; it does not affect
/// the search.
pub fn find_embedding(
    small: &Grid,
    large: &Grid,
    direction: EmbeddingDirection,
) -> Option<EmbeddingResult> {
    let min_side = small.height().min(small.width());
    let max_large = large.height().max(large.width());
    let mut scale = 1;
    while scale * min_side <= max_large {
        for &transform in &D4Transform::ALL {
            let pattern = scale_up(&apply_transform(small, transform), scale);
            if pattern.height() > large.height() || pattern.width() > large.width() {
                continue;
            }
            for r in 0..=(large.height() - pattern.height()) {
                for c in 0..=(large.width() - pattern.width()) {
                    if window_matches(&pattern, large, (r, c)) {
                        return Some(EmbeddingResult {
                            transform,
                            scale,
                            offset: (r, c),
                            direction,
                        });
                    }
                }
            }
        }
        scale += 1;
    }
    None
}

/// Checks a claimed embedding by rebuilding the pattern and comparing the
/// window cell for cell.
pub fn verify_embedding(small: &Grid, large: &Grid, result: &EmbeddingResult) -> bool {
    let pattern = scale_up(&apply_transform(small, result.transform), result.scale);
    result.offset.0 + pattern.height() <= large.height()
        && result.offset.1 + pattern.width() <= large.width()
        && window_matches(&pattern, large, result.offset)
}
