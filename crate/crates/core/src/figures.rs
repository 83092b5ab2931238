//! Data behind the five eigenvalue plots: leading-order ball eigenvalues
//! against `k` (1, 2) and against `n` (3), disk eigenvalues against `k` (4)
//! and against `n` with the cubic-decay asymptote (5).

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{domain, io_error, Result};
use crate::np2d;
use crate::par;
use crate::record::{Dimension, EigenRecord};
use crate::sweep::{self, format_row, MethodChoice, SweepGrid, CSV_HEADER};

pub const FIG1_N: [u32; 5] = [0, 5, 10, 15, 20];
pub const FIG2_N: [u32; 4] = [6, 18, 30, 42];
pub const FIG3_K: [f64; 5] = [0.0, 7.5, 15.0, 22.5, 30.0];
pub const FIG3_N_MAX: u32 = 30;
pub const FIG4_N: [u32; 4] = [1, 10, 19, 28];
pub const FIG5_K: [f64; 4] = [0.1, 5.1, 10.1, 15.1];
pub const FIG5_N_MAX: u32 = 36;

/// `k` axis of the sweeps over `[0, 20]`.
pub const K_MAX: f64 = 20.0;
pub const K_STEPS: usize = 401;

/// Header of `fig5.csv`; the extra column is the large-order asymptote,
/// `NaN` where it is undefined (`n < 2`).
pub const FIG5_HEADER: &str = "dim,n,k,method,re,im,abs,asymptotic";

#[derive(Debug, Clone, PartialEq)]
pub struct FigureRow {
    pub record: EigenRecord,
    pub asymptotic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub which: u8,
    pub rows: Vec<FigureRow>,
}

impl FigureData {
    pub fn header(&self) -> &'static str {
        if self.which == 5 {
            FIG5_HEADER
        } else {
            CSV_HEADER
        }
    }

    pub fn file_name(&self) -> String {
        format!("fig{}.csv", self.which)
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{}", self.header())?;
        for row in &self.rows {
            let mut line = format_row(&row.record);
            if self.which == 5 {
                line.push(',');
                line.push_str(&row.asymptotic.unwrap_or(f64::NAN).to_string());
            }
            writeln!(out, "{line}")?;
        }
        out.flush()
    }
}

fn k_sweep(dimension: Dimension, n_list: &[u32], method: MethodChoice) -> Result<Vec<FigureRow>> {
    let grid = SweepGrid {
        dimension,
        n_list: n_list.to_vec(),
        k_min: 0.0,
        k_max: K_MAX,
        k_steps: K_STEPS,
        method,
        radius: 1.0,
    };
    Ok(sweep::evaluate_grid(&grid)?
        .into_iter()
        .map(|record| FigureRow {
            record,
            asymptotic: None,
        })
        .collect())
}

/// Rows ordered by `k` (one curve per caption value), then `n`.
fn n_sweep(
    dimension: Dimension,
    ks: &[f64],
    n_max: u32,
    method: MethodChoice,
) -> Result<Vec<FigureRow>> {
    let points: Vec<(f64, u32)> = ks
        .iter()
        .flat_map(|&k| (0..=n_max).map(move |n| (k, n)))
        .collect();
    par::try_map(&points, |&(k, n)| {
        let record = sweep::evaluate(dimension, n, k, 1.0, method)?;
        let asymptotic = match dimension {
            Dimension::Two if n >= 2 => Some(np2d::kappa_large_n(n, k)?.re),
            _ => None,
        };
        Ok(FigureRow { record, asymptotic })
    })
}

/// Computes the rows of figure `which` (1 to 5).
pub fn figure_data(which: u8) -> Result<FigureData> {
    let rows = match which {
        1 => k_sweep(Dimension::Three, &FIG1_N, MethodChoice::Leading)?,
        2 => k_sweep(Dimension::Three, &FIG2_N, MethodChoice::Leading)?,
        3 => n_sweep(Dimension::Three, &FIG3_K, FIG3_N_MAX, MethodChoice::Leading)?,
        4 => k_sweep(Dimension::Two, &FIG4_N, MethodChoice::B)?,
        5 => n_sweep(Dimension::Two, &FIG5_K, FIG5_N_MAX, MethodChoice::B)?,
        other => return Err(domain(format!("figure must be 1..=5, got {other}"))),
    };
    Ok(FigureData { which, rows })
}

/// Writes `fig{which}.csv` into `dir`, creating the directory if needed.
pub fn write_figure(which: u8, dir: &Path) -> Result<PathBuf> {
    let data = figure_data(which)?;
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let path = dir.join(data.file_name());
    let file = File::create(&path).map_err(|e| io_error(&path, e))?;
    data.write_to(BufWriter::new(file))
        .map_err(|e| io_error(&path, e))?;
    Ok(path)
}

pub fn write_all(dir: &Path) -> Result<Vec<PathBuf>> {
    (1..=5).map(|w| write_figure(w, dir)).collect()
}
