use num_complex::Complex64;
use serde::Serialize;
use std::fmt;

/// Ambient dimension of the inclusion: ball (3) or disk (2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Dimension {
    Two,
    Three,
}

impl Dimension {
    pub fn from_int(d: u8) -> Option<Self> {
        match d {
            2 => Some(Self::Two),
            3 => Some(Self::Three),
            _ => None,
        }
    }

    pub fn as_int(self) -> u8 {
        match self {
            Self::Two => 2,
            Self::Three => 3,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int())
    }
}

/// How an eigenvalue was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// `-1/2 - ...` form built on the derivative of the Hankel function.
    FormA,
    /// `+1/2 - ...` form built on the derivative of the Bessel function.
    FormB,
    /// Single-layer plus boundary-moment form (ball only).
    FormC,
    /// Leading large-order approximation on the ball.
    Leading,
    /// Value of the `k -> 0` limit.
    StaticLimit,
    /// Brute-force kernel quadrature.
    Oracle,
    /// Leading large-order approximation on the disk.
    LargeNAsymptotic,
    /// Small-`k` expansion of the `n = 0` disk eigenvalue.
    SmallKExpansion,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::FormA => "FormA",
            Self::FormB => "FormB",
            Self::FormC => "FormC",
            Self::Leading => "Leading",
            Self::StaticLimit => "StaticLimit",
            Self::Oracle => "Oracle",
            Self::LargeNAsymptotic => "LargeNAsymptotic",
            Self::SmallKExpansion => "SmallKExpansion",
        };
        f.write_str(s)
    }
}

/// One evaluated eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenRecord {
    pub dimension: Dimension,
    pub n: u32,
    pub k: f64,
    pub radius: f64,
    pub value: Complex64,
    pub method: Method,
}
