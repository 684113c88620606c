//! Shape taxonomy: the closed set of object shapes the encoder names
//! directly, plus `Complex` for everything else. Classification looks only at
//! cell positions, never colors, so it is invariant under translation.

use crate::vision::objects::ObjectMask;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeClass {
    Pixel,
    Square,
    Rectangle,
    HorizontalLine,
    VerticalLine,
    DiagonalLineMain,
    DiagonalLineAnti,
    Cross,
    DiagonalCross,
    Complex,
}

/// Classifies the binary mask. Rules are checked in a fixed precedence order;
/// the first match wins and anything unmatched is `Complex`.
pub fn classify_shape(mask: &ObjectMask) -> ShapeClass {
    let (h, w, n) = (mask.height(), mask.width(), mask.cell_count());
    if h == 1 && w == 1 {
        return ShapeClass::Pixel;
    }
    if n == h * w {
        if h == w {
            return ShapeClass::Square;
        }
        if h == 1 {
            return ShapeClass::HorizontalLine;
        }
        if w == 1 {
            return ShapeClass::VerticalLine;
        }
        return ShapeClass::Rectangle;
    }
    if h == w && n == h && mask.cells().iter().all(|&(r, c, _)| r == c) {
        return ShapeClass::DiagonalLineMain;
    }
    if h == w && n == h && mask.cells().iter().all(|&(r, c, _)| r + c == w - 1) {
        return ShapeClass::DiagonalLineAnti;
    }
    if h % 2 == 1 && w % 2 == 1 && h >= 3 && w >= 3 {
        let (mid_r, mid_c) = (h / 2, w / 2);
        if n == h + w - 1
            && mask
                .cells()
                .iter()
                .all(|&(r, c, _)| r == mid_r || c == mid_c)
        {
            return ShapeClass::Cross;
        }
        if h == w
            && n == 2 * h - 1
            && mask
                .cells()
                .iter()
                .all(|&(r, c, _)| r == c || r + c == w - 1)
        {
            return ShapeClass::DiagonalCross;
        }
    }
    ShapeClass::Complex
}
