use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An element of `[m]^k`: `k` components, each at least 1.
///
/// Ordering is lexicographic, which for vectors of one fixed length is the
/// rank order of the box `[m]^k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(SmallVec<[u32; 6]>);

impl LatticeVector {
    pub fn new(components: &[u32]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidLabel("empty lattice vector".into()));
        }
        if components.contains(&0) {
            return Err(Error::InvalidLabel(format!(
                "lattice vector {components:?} has a zero component"
            )));
        }
        Ok(LatticeVector(SmallVec::from_slice(components)))
    }

    pub(crate) fn from_components_unchecked(components: &[u32]) -> Self {
        debug_assert!(!components.is_empty() && !components.contains(&0));
        LatticeVector(SmallVec::from_slice(components))
    }

    /// Number of coordinates.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    /// The `i`-th coordinate, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Largest component.
    pub fn max_component(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Returns the vector with coordinates reordered so that position `t`
    /// holds the old coordinate `perm[t]` (0-based).
    pub fn permuted(&self, perm: &[usize]) -> LatticeVector {
        LatticeVector(perm.iter().map(|&p| self.0[p]).collect())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (t, c) in self.0.iter().enumerate() {
            if t > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        LatticeVector::new(&v).map_err(serde::de::Error::custom)
    }
}

/// A vertex of a graph in this crate.
///
/// The derived order is the canonical vertex order: all base vertices, then
/// all lattice vertices (lexicographically), then plain vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    /// An element `i` of `[k]`, 1-based.
    Base(u32),
    /// An element of `[m]^k`.
    Lattice(LatticeVector),
    /// An unstructured vertex id.
    Plain(u32),
}

impl VertexLabel {
    /// Lattice label from raw components.
    ///
    /// # Panics
    ///
    /// Panics if `components` is empty or contains a zero.
    pub fn lattice(components: &[u32]) -> VertexLabel {
        VertexLabel::Lattice(LatticeVector::new(components).expect("valid lattice components"))
    }

    pub fn as_lattice(&self) -> Option<&LatticeVector> {
        match self {
            VertexLabel::Lattice(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_base(&self) -> Option<u32> {
        match self {
            VertexLabel::Base(i) => Some(*i),
            _ => None,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self {
            VertexLabel::Base(0) => Err(Error::InvalidLabel("base vertex index 0".into())),
            VertexLabel::Lattice(x) if x.0.is_empty() || x.0.contains(&0) => {
                Err(Error::InvalidLabel(format!("lattice vector {x}")))
            }
            _ => Ok(()),
        }
    }
}

impl From<LatticeVector> for VertexLabel {
    fn from(x: LatticeVector) -> Self {
        VertexLabel::Lattice(x)
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Base(i) => write!(f, "b{i}"),
            VertexLabel::Lattice(x) => write!(f, "{x}"),
            VertexLabel::Plain(id) => write!(f, "{id}"),
        }
    }
}

/// Parses the textual forms `b3`, `(1,2)` / `[1,2]`, and `7`.
impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot parse vertex {s:?}"));
        if let Some(rest) = s.strip_prefix('b') {
            let i: u32 = rest.parse().map_err(|_| bad())?;
            let v = VertexLabel::Base(i);
            v.validate()?;
            return Ok(v);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix('[').and_then(|r| r.strip_suffix(']')));
        if let Some(inner) = inner {
            let comps = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(VertexLabel::Lattice(LatticeVector::new(&comps)?));
        }
        s.parse().map(VertexLabel::Plain).map_err(|_| bad())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    Plain(u32),
    Lattice(Vec<u32>),
    Base(String),
}

/// JSON form: plain vertices are integers, lattice vertices integer arrays,
/// base vertices strings `"b<i>"`.
impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            VertexLabel::Plain(id) => s.serialize_u32(*id),
            VertexLabel::Lattice(x) => x.serialize(s),
            VertexLabel::Base(i) => s.serialize_str(&format!("b{i}")),
        }
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let label = match LabelRepr::deserialize(d)? {
            LabelRepr::Plain(id) => VertexLabel::Plain(id),
            LabelRepr::Lattice(v) => {
                VertexLabel::Lattice(LatticeVector::new(&v).map_err(serde::de::Error::custom)?)
            }
            LabelRepr::Base(s) => match s.parse::<VertexLabel>() {
                Ok(v @ VertexLabel::Base(_)) => v,
                _ => return Err(serde::de::Error::custom(format!("bad base vertex {s:?}"))),
            },
        };
        Ok(label)
    }
}
