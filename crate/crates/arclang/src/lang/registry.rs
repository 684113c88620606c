//! Task-local shape registry. Complex objects are interned here under letter
//! IDs so the decoder can reconstruct them exactly; equal colored masks (up
//! to translation) share one ID across all images of a task.

use crate::grid::Color;
use crate::vision::objects::ObjectMask;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegistryError {
    #[error("shape registry exhausted: no letters left after 'Z'")]
    Exhausted,
    #[error("invalid shape id {0:?}: expected one or more uppercase letters")]
    InvalidId(String),
    #[error("malformed registry JSON: {0}")]
    MalformedJson(String),
}

/// A shape identifier: one or more uppercase ASCII letters. The encoder only
/// ever assigns single letters 'A'..'Z'.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ShapeId(String);

impl ShapeId {
    pub fn new(id: &str) -> Result<ShapeId, RegistryError> {
        if !id.is_empty() && id.bytes().all(|b| b.is_ascii_uppercase()) {
            Ok(ShapeId(id.to_string()))
        } else {
            Err(RegistryError::InvalidId(id.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ShapeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<String> for ShapeId {
    type Error = RegistryError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        ShapeId::new(&value)
    }
}

impl From<ShapeId> for String {
    fn from(id: ShapeId) -> String {
        id.0
    }
}

/// A colored mask with its bounding box moved to the origin: the unit of
/// comparison for shape identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedMask {
    pub height: usize,
    pub width: usize,
    /// (row, col, color) triples relative to the origin, sorted by position.
    pub cells: Vec<(usize, usize, Color)>,
}

impl NormalizedMask {
    pub fn from_object(mask: &ObjectMask) -> NormalizedMask {
        NormalizedMask {
            height: mask.height(),
            width: mask.width(),
            cells: mask.cells().to_vec(),
        }
    }

    pub fn monochromatic(&self) -> Option<Color> {
        let first = self.cells[0].2;
        self.cells.iter().all(|&(_, _, c)| c == first).then_some(first)
    }
}

/// Ordered map from shape ID to normalized mask. IDs are assigned in order of
/// first appearance: 'A', 'B', ...
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShapeRegistry {
    entries: Vec<(ShapeId, NormalizedMask)>,
}

impl ShapeRegistry {
    pub fn new() -> ShapeRegistry {
        ShapeRegistry::default()
    }

    /// Returns the existing ID for an equal mask, or assigns the next unused
    /// letter. Comparison includes colors.
    pub fn intern(&mut self, mask: NormalizedMask) -> Result<ShapeId, RegistryError> {
        if let Some((id, _)) = self.entries.iter().find(|(_, m)| *m == mask) {
            return Ok(id.clone());
        }
        if self.entries.len() >= 26 {
            return Err(RegistryError::Exhausted);
        }
        let letter = (b'A' + self.entries.len() as u8) as char;
        let id = ShapeId(letter.to_string());
        self.entries.push((id.clone(), mask));
        Ok(id)
    }

    pub fn get(&self, id: &ShapeId) -> Option<&NormalizedMask> {
        self.entries.iter().find(|(i, _)| i == id).map(|(_, m)| m)
    }

    pub fn contains(&self, id: &ShapeId) -> bool {
        self.get(id).is_some()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ShapeId, &NormalizedMask)> {
        self.entries.iter().map(|(id, m)| (id, m))
    }

    /// Serializes to the registry dump format: a JSON object keyed by shape
    /// ID, each entry carrying `height`, `width`, and sorted `cells` triples.
    pub fn to_json_string(&self) -> String {
        let map: BTreeMap<&str, &NormalizedMask> = self
            .entries
            .iter()
            .map(|(id, m)| (id.as_str(), m))
            .collect();
        serde_json::to_string_pretty(&map).expect("registry serialization cannot fail")
    }

    pub fn from_json_str(json: &str) -> Result<ShapeRegistry, RegistryError> {
        let map: BTreeMap<String, NormalizedMask> =
            serde_json::from_str(json).map_err(|e| RegistryError::MalformedJson(e.to_string()))?;
        let mut entries = Vec::with_capacity(map.len());
        for (key, mask) in map {
            if mask.cells.is_empty() {
                return Err(RegistryError::MalformedJson(format!(
                    "shape {key:?} has no cells"
                )));
            }
            entries.push((ShapeId::new(&key)?, mask));
        }
        Ok(ShapeRegistry { entries })
    }
}
