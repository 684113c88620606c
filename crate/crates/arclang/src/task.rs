//! Task data model and ARC JSON ingestion. One task file holds a `train`
//! array of input/output pairs and a `test` array whose outputs may be
//! withheld.

use crate::grid::{Grid, GridError, MAX_SIDE};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TaskError {
    #[error("malformed task JSON: {0}")]
    MalformedJson(#[from] serde_json::Error),
    #[error("{context}: {source}")]
    InvalidGrid {
        context: String,
        source: GridError,
    },
    #[error("{context}: side {side} exceeds the maximum of {MAX_SIDE}")]
    SideTooLarge { context: String, side: usize },
    #[error("train pair {index} has no output grid")]
    MissingTrainOutput { index: usize },
    #[error("task has no test pairs")]
    NoTestPairs,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("failed to parse {path}: {source}")]
    Task {
        path: String,
        source: TaskError,
    },
}

/// A demonstration pair: both grids are always present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainPair {
    pub input: Grid,
    pub output: Grid,
}

/// A test pair: the output is withheld on private evaluation sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestPair {
    pub input: Grid,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Grid>,
}

/// One ARC puzzle: ordered train pairs plus at least one test pair, keyed by
/// the task file stem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Task {
    pub id: String,
    pub train: Vec<TrainPair>,
    pub test: Vec<TestPair>,
}

#[derive(Deserialize, Serialize)]
struct RawPair {
    input: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<Vec<Vec<i64>>>,
}

#[derive(Deserialize, Serialize)]
struct RawTask {
    train: Vec<RawPair>,
    test: Vec<RawPair>,
}

fn grid_from_raw(rows: &[Vec<i64>], context: &str) -> Result<Grid, TaskError> {
    let grid = Grid::from_rows(rows).map_err(|source| TaskError::InvalidGrid {
        context: context.to_string(),
        source,
    })?;
    let side = grid.height().max(grid.width());
    if side > MAX_SIDE {
        return Err(TaskError::SideTooLarge {
            context: context.to_string(),
            side,
        });
    }
    Ok(grid)
}

/// Parses one ARC task file. Grids are validated for rectangularity, color
/// range, and the 30-cell side limit; test outputs are retained when present.
pub fn parse_task_json(bytes: &[u8], id: &str) -> Result<Task, TaskError> {
    let raw: RawTask = serde_json::from_slice(bytes)?;
    let mut train = Vec::with_capacity(raw.train.len());
    for (i, pair) in raw.train.iter().enumerate() {
        let input = grid_from_raw(&pair.input, &format!("train[{i}].input"))?;
        let output = match &pair.output {
            Some(rows) => grid_from_raw(rows, &format!("train[{i}].output"))?,
            None => return Err(TaskError::MissingTrainOutput { index: i }),
        };
        train.push(TrainPair { input, output });
    }
    let mut test = Vec::with_capacity(raw.test.len());
    for (i, pair) in raw.test.iter().enumerate() {
        let input = grid_from_raw(&pair.input, &format!("test[{i}].input"))?;
        let output = match &pair.output {
            Some(rows) => Some(grid_from_raw(rows, &format!("test[{i}].output"))?),
            None => None,
        };
        test.push(TestPair { input, output });
    }
    if test.is_empty() {
        return Err(TaskError::NoTestPairs);
    }
    if !(2..=6).contains(&train.len()) {
        log::warn!(
            "task {id}: {} train pairs (expected between 2 and 6)",
            train.len()
        );
    }
    Ok(Task {
        id: id.to_string(),
        train,
        test,
    })
}

/// Serializes a task back to the ARC file format (without the id, which lives
/// in the file name).
pub fn task_to_json(task: &Task) -> String {
    let raw = RawTask {
        train: task
            .train
            .iter()
            .map(|p| RawPair {
                input: rows_i64(&p.input),
                output: Some(rows_i64(&p.output)),
            })
            .collect(),
        test: task
            .test
            .iter()
            .map(|p| RawPair {
                input: rows_i64(&p.input),
                output: p.output.as_ref().map(rows_i64),
            })
            .collect(),
    };
    serde_json::to_string(&raw).expect("task serialization cannot fail")
}

fn rows_i64(g: &Grid) -> Vec<Vec<i64>> {
    g.rows()
        .map(|row| row.iter().map(|c| c.index() as i64).collect())
        .collect()
}

/// Loads a task from a single `.json` file; the file stem becomes the task id.
pub fn load_task_file(path: &Path) -> Result<Task, CorpusError> {
    let bytes = fs::read(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_task_json(&bytes, &id).map_err(|source| CorpusError::Task {
        path: path.display().to_string(),
        source,
    })
}

/// Loads every `.json` file in a directory, sorted by task id.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<Task>, CorpusError> {
    let entries = fs::read_dir(dir).map_err(|source| CorpusError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut paths: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    let mut tasks = Vec::with_capacity(paths.len());
    for path in paths {
        tasks.push(load_task_file(&path)?);
    }
    tasks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(tasks)
}
