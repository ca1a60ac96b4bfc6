//! Trajectory output: one CSV of flat coordinates plus a JSON sidecar
//! recording the run configuration and a stable content hash.

use std::path::Path;

use serde::Serialize;

use crate::error::DynError;
use crate::integrate::Trajectory;
use crate::state::State;

/// Run description stored next to the trajectory.
#[derive(Debug, Clone, Serialize)]
pub struct Sidecar {
    pub family: String,
    pub algebra: String,
    pub dt: f64,
    pub n_steps: usize,
    pub field: String,
    pub config_hash: String,
}

/// Build the sidecar for a trajectory driven by the named field.
pub fn sidecar(traj: &Trajectory, field_name: &str) -> Sidecar {
    let algebra = traj.states[0].alg.name().to_string();
    let n_steps = traj.states.len() - 1;
    let mut hasher = Fnv1a::new();
    hasher.write(traj.family.token().as_bytes());
    hasher.write(algebra.as_bytes());
    hasher.write(&traj.dt.to_bits().to_le_bytes());
    hasher.write(&(n_steps as u64).to_le_bytes());
    hasher.write(field_name.as_bytes());
    for x in traj.states[0].flat() {
        hasher.write(&x.to_bits().to_le_bytes());
    }
    Sidecar {
        family: traj.family.token().to_string(),
        algebra,
        dt: traj.dt,
        n_steps,
        field: field_name.to_string(),
        config_hash: format!("{:016x}", hasher.finish()),
    }
}

/// Write `t` plus the flat state coordinates, one row per step.
pub fn write_csv(traj: &Trajectory, path: &Path) -> Result<(), DynError> {
    let mut writer = csv::Writer::from_path(path)
        .map_err(|e| DynError::Output(format!("open {}: {e}", path.display())))?;
    let alg = &traj.states[0].alg;
    let mut header = vec!["t".to_string()];
    header.extend(State::labels(traj.family, alg));
    writer
        .write_record(&header)
        .map_err(|e| DynError::Output(e.to_string()))?;
    for (t, s) in traj.times.iter().zip(&traj.states) {
        let mut row = vec![format_f64(*t)];
        row.extend(s.flat().iter().map(|x| format_f64(*x)));
        writer
            .write_record(&row)
            .map_err(|e| DynError::Output(e.to_string()))?;
    }
    writer
        .flush()
        .map_err(|e| DynError::Output(e.to_string()))?;
    Ok(())
}

/// Write the JSON sidecar next to the data.
pub fn write_sidecar(sidecar: &Sidecar, path: &Path) -> Result<(), DynError> {
    let body = serde_json::to_string_pretty(sidecar)
        .map_err(|e| DynError::Output(e.to_string()))?;
    std::fs::write(path, body + "\n")
        .map_err(|e| DynError::Output(format!("write {}: {e}", path.display())))
}

/// Shortest representation that round-trips; bytes are reproducible run to
/// run since the formatting is deterministic.
fn format_f64(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// 64-bit FNV-1a, stable across platforms and builds.
struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Self {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}
