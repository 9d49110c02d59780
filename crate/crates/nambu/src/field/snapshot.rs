//! Field snapshot files: flat little-endian binary with a JSON sidecar.

use std::fs;
use std::io::Write;
use std::path::Path;

use ndarray::Array3;
use serde::{Deserialize, Serialize};

use super::fields::ScalarField;
use super::grid::Grid3;
use crate::error::{Error, Result};

/// Sidecar describing one `.bin` snapshot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SnapshotMeta {
    pub grid_n: usize,
    pub fields: Vec<String>,
    pub time: f64,
}

/// Write named scalar fields to `<prefix>.bin` (64-bit reals, x varying
/// fastest, fields concatenated in order) plus `<prefix>.json`.
pub fn write_scalar_snapshot(
    prefix: &Path,
    named: &[(&str, &ScalarField)],
    time: f64,
) -> Result<()> {
    let grid_n = named
        .first()
        .map(|(_, f)| f.grid().n())
        .ok_or_else(|| Error::Config("snapshot needs at least one field".into()))?;

    let mut bin = fs::File::create(prefix.with_extension("bin"))?;
    let mut buf = Vec::with_capacity(grid_n * grid_n * grid_n * 8);
    for (_, field) in named {
        let data = field.data();
        for iz in 0..grid_n {
            for iy in 0..grid_n {
                for ix in 0..grid_n {
                    buf.extend_from_slice(&data[[ix, iy, iz]].to_le_bytes());
                }
            }
        }
    }
    bin.write_all(&buf)?;

    let meta = SnapshotMeta {
        grid_n,
        fields: named.iter().map(|(n, _)| n.to_string()).collect(),
        time,
    };
    fs::write(
        prefix.with_extension("json"),
        serde_json::to_string_pretty(&meta)?,
    )?;
    Ok(())
}

/// Read a snapshot back; inverse of [`write_scalar_snapshot`].
pub fn read_scalar_snapshot(prefix: &Path) -> Result<(SnapshotMeta, Vec<ScalarField>)> {
    let meta: SnapshotMeta = serde_json::from_str(&fs::read_to_string(prefix.with_extension("json"))?)?;
    let grid = Grid3::new(meta.grid_n)?;
    let n = meta.grid_n;
    let bytes = fs::read(prefix.with_extension("bin"))?;
    let expected = meta.fields.len() * n * n * n * 8;
    if bytes.len() != expected {
        return Err(Error::Config(format!(
            "snapshot payload is {} bytes, expected {expected}",
            bytes.len()
        )));
    }
    let mut fields = Vec::with_capacity(meta.fields.len());
    let mut offset = 0;
    for _ in &meta.fields {
        let mut data = Array3::zeros((n, n, n));
        for iz in 0..n {
            for iy in 0..n {
                for ix in 0..n {
                    let mut word = [0u8; 8];
                    word.copy_from_slice(&bytes[offset..offset + 8]);
                    data[[ix, iy, iz]] = f64::from_le_bytes(word);
                    offset += 8;
                }
            }
        }
        fields.push(ScalarField::from_data(grid, data)?);
    }
    Ok((meta, fields))
}
