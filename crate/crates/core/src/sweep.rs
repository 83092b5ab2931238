//! Point evaluation dispatch, `(n, k)` sweeps and CSV output.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{domain, io_error, Error, Result};
use crate::record::{Dimension, EigenRecord, Method};
use crate::{np2d, np3d, oracle, par};

/// Header of every sweep CSV.
pub const CSV_HEADER: &str = "dim,n,k,method,re,im,abs";

/// Evaluation route requested on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    A,
    B,
    C,
    Leading,
    Auto,
    Oracle,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Self::A),
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            "leading" => Ok(Self::Leading),
            "auto" => Ok(Self::Auto),
            "oracle" => Ok(Self::Oracle),
            other => Err(domain(format!(
                "unknown method '{other}' (expected a, b, c, leading, auto or oracle)"
            ))),
        }
    }
}

/// Evaluates one eigenvalue. At `k * radius = 0` every exact route returns the
/// static limit.
pub fn evaluate(
    dim: Dimension,
    n: u32,
    k: f64,
    radius: f64,
    choice: MethodChoice,
) -> Result<EigenRecord> {
    match (dim, choice) {
        (Dimension::Three, MethodChoice::A) => np3d::tau_with(n, k, radius, Method::FormA),
        (Dimension::Three, MethodChoice::B | MethodChoice::Auto) => np3d::tau(n, k, radius),
        (Dimension::Three, MethodChoice::C) => np3d::tau_with(n, k, radius, Method::FormC),
        (Dimension::Two, MethodChoice::A) => np2d::kappa_with(n, k, radius, Method::FormA),
        (Dimension::Two, MethodChoice::B | MethodChoice::Auto) => np2d::kappa(n, k, radius),
        (Dimension::Two, MethodChoice::C) => {
            Err(domain("method c (boundary-moment form) exists only in 3D"))
        }
        (_, MethodChoice::Leading | MethodChoice::Oracle) => {
            // validate through the exact route so both share argument checks
            let base = evaluate(dim, n, k, radius, MethodChoice::B)?;
            let kr = k * radius;
            let (value, method) = match (dim, choice) {
                (Dimension::Three, MethodChoice::Leading) => {
                    (np3d::tau_leading(n, kr)?, Method::Leading)
                }
                (Dimension::Two, MethodChoice::Leading) => {
                    (np2d::kappa_large_n(n, kr)?, Method::LargeNAsymptotic)
                }
                _ if kr == 0.0 => return Ok(base),
                (Dimension::Three, _) => (oracle::tau_oracle(n, kr)?, Method::Oracle),
                (Dimension::Two, _) => (oracle::kappa_oracle(n, kr)?, Method::Oracle),
            };
            Ok(EigenRecord {
                value,
                method,
                ..base
            })
        }
    }
}

/// Cartesian `(n, k)` grid with a uniform, endpoint-inclusive `k` axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub dimension: Dimension,
    pub n_list: Vec<u32>,
    pub k_min: f64,
    pub k_max: f64,
    pub k_steps: usize,
    pub method: MethodChoice,
    pub radius: f64,
}

impl SweepGrid {
    pub fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() {
            return Err(domain("sweep needs at least one order n"));
        }
        let mut ns = self.n_list.clone();
        ns.sort_unstable();
        if let Some(w) = ns.windows(2).find(|w| w[0] == w[1]) {
            return Err(domain(format!("order n = {} listed twice", w[0])));
        }
        if !(self.k_min.is_finite() && self.k_max.is_finite())
            || self.k_min < 0.0
            || self.k_min > self.k_max
        {
            return Err(domain(format!(
                "sweep needs 0 <= k_min <= k_max, got [{}, {}]",
                self.k_min, self.k_max
            )));
        }
        if self.k_steps == 0 {
            return Err(domain("k_steps must be at least 1"));
        }
        if self.k_steps == 1 && self.k_min != self.k_max {
            return Err(domain("k_steps = 1 requires k_min = k_max"));
        }
        Ok(())
    }

    pub fn k_values(&self) -> Vec<f64> {
        if self.k_steps == 1 {
            return vec![self.k_min];
        }
        let last = (self.k_steps - 1) as f64;
        (0..self.k_steps)
            .map(|i| {
                if i + 1 == self.k_steps {
                    self.k_max
                } else {
                    self.k_min + (self.k_max - self.k_min) * (i as f64 / last)
                }
            })
            .collect()
    }

    /// Grid points ordered by `n`, then `k` ascending.
    pub fn points(&self) -> Vec<(u32, f64)> {
        let mut ns = self.n_list.clone();
        ns.sort_unstable();
        let ks = self.k_values();
        ns.iter()
            .flat_map(|&n| ks.iter().map(move |&k| (n, k)))
            .collect()
    }
}

/// Evaluates every grid point; order matches [`SweepGrid::points`].
pub fn evaluate_grid(grid: &SweepGrid) -> Result<Vec<EigenRecord>> {
    grid.validate()?;
    let points = grid.points();
    par::try_map(&points, |&(n, k)| {
        evaluate(grid.dimension, n, k, grid.radius, grid.method)
    })
}

/// One CSV row (no line terminator). Floats use Rust's shortest
/// round-trip formatting.
pub fn format_row(rec: &EigenRecord) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "{},{},{},{},{},{},{}",
        rec.dimension,
        rec.n,
        rec.k,
        rec.method,
        rec.value.re,
        rec.value.im,
        rec.value.norm()
    );
    s
}

pub fn write_csv<W: Write>(records: &[EigenRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for rec in records {
        writeln!(out, "{}", format_row(rec))?;
    }
    out.flush()
}

/// Evaluates `grid` and writes the CSV to `path`; returns the row count.
pub fn sweep_to_file(grid: &SweepGrid, path: &Path) -> Result<usize> {
    let records = evaluate_grid(grid)?;
    let file = File::create(path).map_err(|e| io_error(path, e))?;
    write_csv(&records, BufWriter::new(file)).map_err(|e| io_error(path, e))?;
    Ok(records.len())
}
