//! Power sums, iterated power sums and multizeta values.
//!
//! For a tuple `(k_1, ..., k_r)` the iterated power sum of degree `d` is
//! `S_d(k_1, ..., k_r) = S_d(k_1) S_{<d}(k_2, ..., k_r)`, a finite sum over
//! monic `a_1, ..., a_r` of strictly decreasing degrees starting at `d`. The
//! multizeta value is `sum_d S_d(tuple)` in the completion at infinity.
//!
//! [`PowerSums`] computes exact values in `K`; [`ZetaEngine`] computes the
//! same recursion on truncated expansions, which is what large weights need.
//! [`brute`] enumerates monic elements directly and serves as an oracle.

pub mod brute;
mod exact;
mod genus0;
pub mod linear;
mod relative;
mod zeta;

pub use exact::{frobenius_power_identity_check, iterated_power_sum, power_sum, PowerSums};
pub use genus0::{bracket, genus_zero_family_oracle, genus_zero_family_tuple, genus_zero_identity_holds};
pub use relative::{relative_power_sum, relative_zeta_check, RelativeCheck};
pub use zeta::{zeta_value, zeta_value_with, zetalike_check, ZetaEngine, ZetaOptions, ZetaValue, Zetalike};

use crate::curve::Curve;
use crate::error::{Error, Result};
use std::fmt;

/// Which degrees an iterated sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumMode {
    /// `S_d`: leading degree exactly `d`.
    At,
    /// `S_{<d}`.
    Below,
    /// `S_{<=d}`.
    UpTo,
}

/// An iterated power sum to evaluate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SumKey {
    pub curve: Curve,
    pub d: u32,
    pub tuple: Vec<u32>,
    pub mode: SumMode,
}

impl SumKey {
    pub fn new(curve: Curve, d: u32, tuple: &[u32], mode: SumMode) -> Result<SumKey> {
        check_tuple(tuple)?;
        Ok(SumKey { curve, d, tuple: tuple.to_vec(), mode })
    }

    pub fn at(curve: Curve, d: u32, tuple: &[u32]) -> Result<SumKey> {
        SumKey::new(curve, d, tuple, SumMode::At)
    }

    pub fn weight(&self) -> u32 {
        weight(&self.tuple)
    }

    pub fn depth(&self) -> usize {
        self.tuple.len()
    }
}

impl fmt::Display for SumKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.mode {
            SumMode::At => "",
            SumMode::Below => "<",
            SumMode::UpTo => "<=",
        };
        write!(f, "S_{s}{}({})", self.d, render_tuple(&self.tuple))
    }
}

pub fn weight(tuple: &[u32]) -> u32 {
    tuple.iter().sum()
}

pub fn render_tuple(tuple: &[u32]) -> String {
    tuple.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
}

/// Parse `"1,2"` (commas or spaces).
pub fn parse_tuple(s: &str) -> Result<Vec<u32>> {
    let t = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u32>().map_err(|_| Error::Parse(format!("bad tuple entry `{p}`"))))
        .collect::<Result<Vec<_>>>()?;
    check_tuple(&t)?;
    Ok(t)
}

pub(crate) fn check_tuple(tuple: &[u32]) -> Result<()> {
    if tuple.is_empty() {
        return Err(Error::InvalidSpec("empty tuple".into()));
    }
    if tuple.contains(&0) {
        return Err(Error::InvalidSpec("tuple entries must be positive".into()));
    }
    Ok(())
}
