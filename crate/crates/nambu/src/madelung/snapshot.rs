//! Spinor snapshot files: interleaved complex binary with a JSON sidecar.

use std::fs;
use std::io::Write;
use std::path::Path;

use ndarray::Array3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Grid3;

use super::spinor::SpinorField;

/// Sidecar describing one spinor `.bin` snapshot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinorSnapshotMeta {
    pub components: usize,
    pub hbar: f64,
    pub grid_n: usize,
    pub time: f64,
}

/// Write a spinor field to `<prefix>.bin` (interleaved re/im 64-bit reals,
/// x varying fastest, components concatenated) plus `<prefix>.json`.
pub fn write_spinor_snapshot(prefix: &Path, psi: &SpinorField, time: f64) -> Result<()> {
    let n = psi.grid().n();
    let mut bin = fs::File::create(prefix.with_extension("bin"))?;
    let mut buf = Vec::with_capacity(psi.components() * n * n * n * 16);
    for j in 0..psi.components() {
        let comp = psi.component(j);
        for iz in 0..n {
            for iy in 0..n {
                for ix in 0..n {
                    let z = comp[[ix, iy, iz]];
                    buf.extend_from_slice(&z.re.to_le_bytes());
                    buf.extend_from_slice(&z.im.to_le_bytes());
                }
            }
        }
    }
    bin.write_all(&buf)?;

    let meta = SpinorSnapshotMeta {
        components: psi.components(),
        hbar: psi.hbar(),
        grid_n: n,
        time,
    };
    fs::write(
        prefix.with_extension("json"),
        serde_json::to_string_pretty(&meta)?,
    )?;
    Ok(())
}

/// Read a spinor snapshot back; inverse of [`write_spinor_snapshot`].
pub fn read_spinor_snapshot(prefix: &Path) -> Result<(SpinorSnapshotMeta, SpinorField)> {
    let meta: SpinorSnapshotMeta =
        serde_json::from_str(&fs::read_to_string(prefix.with_extension("json"))?)?;
    let grid = Grid3::new(meta.grid_n)?;
    let n = meta.grid_n;
    let bytes = fs::read(prefix.with_extension("bin"))?;
    let expected = meta.components * n * n * n * 16;
    if bytes.len() != expected {
        return Err(Error::Config(format!(
            "spinor payload is {} bytes, expected {expected}",
            bytes.len()
        )));
    }
    let mut offset = 0;
    let mut word = |bytes: &[u8]| {
        let mut w = [0u8; 8];
        w.copy_from_slice(&bytes[offset..offset + 8]);
        offset += 8;
        f64::from_le_bytes(w)
    };
    let mut comps = Vec::with_capacity(meta.components);
    for _ in 0..meta.components {
        let mut data = Array3::zeros((n, n, n));
        for iz in 0..n {
            for iy in 0..n {
                for ix in 0..n {
                    let re = word(&bytes);
                    let im = word(&bytes);
                    data[[ix, iy, iz]] = Complex64::new(re, im);
                }
            }
        }
        comps.push(data);
    }
    let psi = SpinorField::new(grid, comps, meta.hbar)?;
    Ok((meta, psi))
}
