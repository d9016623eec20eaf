//! Forbidden and structural induced subgraphs.

mod detect;
mod embedding;
mod wheels;

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

pub use detect::{find_pattern, for_each_induced_path};
pub use embedding::Embedding;
pub use wheels::{
    classify_2wheel, enumerate_wheels, in_class_c, is_butterfly_neighborhood, is_cousin, is_cube, is_nested,
    rim_neighbors, sectors, ClassReport, TwoWheelClass, WheelCert, Witness,
};

/// The detectable pattern families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Theta,
    Pyramid,
    Prism,
    Square,
    EvenHole,
    EvenWheel,
    Wheel,
    Butterfly,
    Cube,
    CousinWheel,
    Nested2Wheel,
    Triangle,
    Clique(usize),
    Sijk(usize, usize, usize),
    Pan,
    Cap,
}

impl PatternKind {
    pub const ALL_FIXED: [PatternKind; 14] = [
        PatternKind::Theta,
        PatternKind::Pyramid,
        PatternKind::Prism,
        PatternKind::Square,
        PatternKind::EvenHole,
        PatternKind::EvenWheel,
        PatternKind::Wheel,
        PatternKind::Butterfly,
        PatternKind::Cube,
        PatternKind::CousinWheel,
        PatternKind::Nested2Wheel,
        PatternKind::Triangle,
        PatternKind::Pan,
        PatternKind::Cap,
    ];

    pub fn clique(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter("clique size must be at least 1".into()));
        }
        Ok(PatternKind::Clique(t))
    }

    pub fn sijk(i: usize, j: usize, k: usize) -> Result<Self> {
        if !(i <= j && j <= k) {
            return Err(Error::InvalidParameter(format!("sijk needs i <= j <= k, got {i},{j},{k}")));
        }
        Ok(PatternKind::Sijk(i, j, k))
    }

    fn check(self) -> Result<Self> {
        match self {
            PatternKind::Clique(t) => PatternKind::clique(t),
            PatternKind::Sijk(i, j, k) => PatternKind::sijk(i, j, k),
            other => Ok(other),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            PatternKind::Theta => "theta",
            PatternKind::Pyramid => "pyramid",
            PatternKind::Prism => "prism",
            PatternKind::Square => "square",
            PatternKind::EvenHole => "even-hole",
            PatternKind::EvenWheel => "even-wheel",
            PatternKind::Wheel => "wheel",
            PatternKind::Butterfly => "butterfly",
            PatternKind::Cube => "cube",
            PatternKind::CousinWheel => "cousin-wheel",
            PatternKind::Nested2Wheel => "nested-2wheel",
            PatternKind::Triangle => "triangle",
            PatternKind::Pan => "pan",
            PatternKind::Cap => "cap",
            PatternKind::Clique(t) => return write!(f, "clique:{t}"),
            PatternKind::Sijk(i, j, k) => return write!(f, "sijk:{i},{j},{k}"),
        };
        f.write_str(tag)
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown pattern tag {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("clique:") {
            return PatternKind::clique(num(rest)?);
        }
        if let Some(rest) = s.strip_prefix("sijk:") {
            let mut it = rest.split(',');
            let (Some(i), Some(j), Some(k), None) = (it.next(), it.next(), it.next(), it.next()) else {
                return Err(bad());
            };
            return PatternKind::sijk(num(i)?, num(j)?, num(k)?);
        }
        PatternKind::ALL_FIXED
            .iter()
            .copied()
            .find(|k| k.to_string() == s)
            .ok_or_else(bad)
            .and_then(PatternKind::check)
    }
}

pub(crate) fn tag_error(kind: PatternKind, msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(format!("{kind}: {}", msg.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for k in PatternKind::ALL_FIXED {
            assert_eq!(k.to_string().parse::<PatternKind>().unwrap(), k);
        }
        assert_eq!("sijk:1,2,3".parse::<PatternKind>().unwrap(), PatternKind::Sijk(1, 2, 3));
        assert_eq!("clique:4".parse::<PatternKind>().unwrap(), PatternKind::Clique(4));
        assert!("sijk:2,1,3".parse::<PatternKind>().is_err());
        assert!("clique:0".parse::<PatternKind>().is_err());
        assert!("hexagon".parse::<PatternKind>().is_err());
    }
}
