use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Path length in a graph with non-negative integer weights.
///
/// `Unreachable` is ordered after every finite value, so `min` picks the
/// finite side and `Ord` works as expected for shortest-path code.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(u64),
    #[default]
    Unreachable,
}

impl Distance {
    pub const ZERO: Distance = Distance::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    /// Adds an edge weight, saturating through `Unreachable`.
    pub fn plus(self, w: u64) -> Distance {
        match self {
            Distance::Finite(d) => Distance::Finite(d + w),
            Distance::Unreachable => Distance::Unreachable,
        }
    }
}

impl From<u64> for Distance {
    fn from(d: u64) -> Self {
        Distance::Finite(d)
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Unreachable,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("INF"),
        }
    }
}

impl std::str::FromStr for Distance {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "INF" {
            Ok(Distance::Unreachable)
        } else {
            s.parse().map(Distance::Finite)
        }
    }
}
