mod bounds;
mod counterexamples;
mod model;
mod stokes;

use std::fs;
use std::path::Path;

use blockgap::gap::{parse_saddle, BlockSaddle};
use blockgap::linalg::Tolerances;

use crate::error::{CliError, CliResult, Context};

pub use bounds::run as bounds;
pub use counterexamples::run as counterexamples;
pub use model::run as model;
pub use stokes::run as stokes;

pub fn read_saddle(path: &Path, tol: Tolerances) -> CliResult<BlockSaddle> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })?;
    let blocks = parse_saddle(&text).map_err(|source| CliError::Syntax { path: path.to_owned(), source })?;
    blocks.into_saddle(tol).context("input matrix")
}
