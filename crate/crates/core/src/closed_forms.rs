//! Closed-form Euler Sombor values and bounds, evaluated term by term in
//! the grouping they are usually written in.

use serde::{Deserialize, Serialize};

use crate::constructions::H1Params;
use crate::error::{Error, Result};

/// Which branch of the unicyclic lower bound applies to `(n, g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundCase {
    GirthEqualsN,
    GirthEqualsNMinus1,
    GirthAtMostNMinus2,
}

impl BoundCase {
    pub fn of(n: usize, g: usize) -> Result<Self> {
        if g < 3 || g > n {
            return Err(Error::InvalidParams(format!(
                "need 3 <= g <= n, got n={n}, g={g}"
            )));
        }
        Ok(if g == n {
            BoundCase::GirthEqualsN
        } else if g + 1 == n {
            BoundCase::GirthEqualsNMinus1
        } else {
            BoundCase::GirthAtMostNMinus2
        })
    }
}

fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

/// EUS of the H1 family as a function of `n`, `k`, `l` (independent of `g`).
pub fn eus_h1(n: usize, g: usize, k: usize, l: usize) -> Result<f64> {
    H1Params::new(n, g, k, l)?;
    if g + 2 > n {
        return Err(Error::InvalidParams(format!(
            "closed form for H1 needs g <= n-2, got n={n}, g={g}"
        )));
    }
    let (n, k, l) = (n as f64, k as f64, l as f64);
    let hub = k + l + 2.0;
    Ok((l + 2.0) * sqrt(hub * hub + 2.0 * hub + 4.0)
        + l * sqrt(7.0)
        + k * sqrt(hub * hub + hub + 1.0)
        + (n - k - 2.0 * l - 2.0) * sqrt(12.0))
}

/// Minimum EUS over unicyclic (equivalently, connected) graphs of order
/// `n` and girth `g`.
pub fn unicyclic_min_bound(n: usize, g: usize) -> Result<f64> {
    let nf = n as f64;
    Ok(match BoundCase::of(n, g)? {
        BoundCase::GirthEqualsN => 2.0 * sqrt(3.0) * nf,
        BoundCase::GirthEqualsNMinus1 => {
            2.0 * sqrt(3.0) * (nf - 3.0) + 2.0 * sqrt(19.0) + sqrt(13.0)
        }
        BoundCase::GirthAtMostNMinus2 => {
            3.0 * sqrt(19.0) + 2.0 * (nf - 4.0) * sqrt(3.0) + sqrt(7.0)
        }
    })
}

/// Maximum EUS over connected graphs of order `n` with `p` pendant vertices.
pub fn knp_max_bound(n: usize, p: usize) -> Result<f64> {
    if n < p + 2 {
        return Err(Error::InvalidParams(format!(
            "need n - p >= 2, got n={n}, p={p}"
        )));
    }
    let c = (n - p - 1) as f64;
    let (n, p) = (n as f64, p as f64);
    let binom = c * (c - 1.0) / 2.0;
    Ok(sqrt(3.0) * binom * c
        + p * sqrt(n * n - n + 1.0)
        + c * sqrt((n - 1.0) * (2.0 * n - p - 2.0) + c * c))
}
