//! Maps on oriented surfaces encoded as a pair of dart permutations.
//!
//! `x` rotates the darts pointing into each vertex, `y` swaps the two darts of
//! each edge. Faces are the cycles of `y x⁻¹`. A one-vertex map with `k` edges
//! fixes `x` to the standard `2k`-cycle, so it is determined by `y` alone.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::lcm;
use crate::perm::{parse_cycles, CycleList, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("edge permutation is not a free involution: {0}")]
    NotFreeInvolution(String),
    #[error("<x, y> is not transitive: orbit of dart 0 is {orbit:?} ({} of {degree} darts)", orbit.len())]
    NotTransitive { orbit: Vec<usize>, degree: usize },
    #[error("expected degree 2k = {expected}, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("bad map literal: {0}")]
    Literal(String),
}

/// A connected map: `y` a free involution and `<x, y>` transitive on the darts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DartMap {
    x: Permutation,
    y: Permutation,
}

impl DartMap {
    pub fn new(x: Permutation, y: Permutation) -> Result<DartMap, MapError> {
        if x.degree() != y.degree() {
            return Err(PermError::DegreeMismatch {
                left: x.degree(),
                right: y.degree(),
            }
            .into());
        }
        if !y.is_free_involution() {
            return Err(MapError::NotFreeInvolution(y.to_string()));
        }
        let orbit = x.joint_orbit(&y, 0);
        if orbit.len() != x.degree() {
            return Err(MapError::NotTransitive {
                orbit,
                degree: x.degree(),
            });
        }
        Ok(DartMap { x, y })
    }

    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn edges(&self) -> usize {
        self.degree() / 2
    }

    /// The face permutation `y x⁻¹`.
    pub fn face_permutation(&self) -> Permutation {
        self.y.compose(&self.x.inverse()).expect("degrees checked")
    }

    /// Cycles of `y x⁻¹`; each traverses one face boundary with the face on its left.
    pub fn face_circuits(&self) -> CycleList {
        self.face_permutation().cycle_decomposition()
    }

    pub fn profile(&self) -> MapProfile {
        let vertex_cycles = self.x.cycle_decomposition();
        let face_cycles = self.face_circuits();
        let vertices = vertex_cycles.len();
        let faces = face_cycles.len();
        let edges = self.edges();
        let euler = vertices as i64 - edges as i64 + faces as i64;
        assert!(
            euler <= 2 && euler % 2 == 0,
            "Euler characteristic {euler} is not of the form 2 - 2g"
        );
        let genus = ((2 - euler) / 2) as u64;

        let mut vertex_valences = vertex_cycles.lengths();
        let mut face_valences = face_cycles.lengths();
        vertex_valences.sort_unstable();
        face_valences.sort_unstable();
        let n = vertex_valences.iter().fold(1, |a, &b| lcm(a, b));
        let r = face_valences.iter().fold(1, |a, &b| lcm(a, b));
        let uniform = vertex_valences.iter().all(|&v| v == n) && face_valences.iter().all(|&f| f == r);
        MapProfile {
            vertices,
            edges,
            faces,
            genus,
            map_type: (n, r),
            vertex_valences,
            face_valences,
            uniform,
        }
    }
}

/// Counts, genus and type of a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapProfile {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: u64,
    /// `(n, r)`: lcm of vertex valences and lcm of face valences.
    pub map_type: (usize, usize),
    pub vertex_valences: Vec<usize>,
    pub face_valences: Vec<usize>,
    pub uniform: bool,
}

/// A map with one vertex and `k` edges; `x` is implicitly `(0 1 ... 2k-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneVertexMap {
    k: usize,
    y: Permutation,
}

impl OneVertexMap {
    pub fn new(k: usize, y: Permutation) -> Result<OneVertexMap, MapError> {
        if k == 0 || y.degree() != 2 * k {
            return Err(MapError::EdgeCount {
                expected: 2 * k,
                got: y.degree(),
            });
        }
        if !y.is_free_involution() {
            return Err(MapError::NotFreeInvolution(y.to_string()));
        }
        Ok(OneVertexMap { k, y })
    }

    pub fn parse(k: usize, y: &str) -> Result<OneVertexMap, MapError> {
        if k == 0 {
            return Err(MapError::EdgeCount { expected: 0, got: 0 });
        }
        OneVertexMap::new(k, parse_cycles(y, 2 * k)?)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn x(&self) -> Permutation {
        Permutation::standard_cycle(2 * self.k).expect("2k is even and positive")
    }

    pub fn as_dart_map(&self) -> DartMap {
        // A single 2k-cycle is already transitive.
        DartMap {
            x: self.x(),
            y: self.y.clone(),
        }
    }

    pub fn profile(&self) -> MapProfile {
        self.as_dart_map().profile()
    }
}

/// Text form of a map: `k=<int>; y=<cycles>` or `x=<cycles>; y=<cycles>; degree=<int>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapLiteral {
    OneVertex(OneVertexMap),
    General(DartMap),
}

impl FromStr for MapLiteral {
    type Err = MapError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut k = None;
        let mut x = None;
        let mut y = None;
        let mut degree = None;
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| MapError::Literal(format!("field `{field}` lacks `=`")))?;
            let value = value.trim();
            let parse_int = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| MapError::Literal(format!("`{v}` is not an integer")))
            };
            match key.trim() {
                "k" => k = Some(parse_int(value)?),
                "degree" => degree = Some(parse_int(value)?),
                "x" => x = Some(value.to_string()),
                "y" => y = Some(value.to_string()),
                other => return Err(MapError::Literal(format!("unknown key `{other}`"))),
            }
        }
        let y = y.ok_or_else(|| MapError::Literal("missing y".into()))?;
        match (k, x, degree) {
            (Some(k), None, None) => Ok(MapLiteral::OneVertex(OneVertexMap::parse(k, &y)?)),
            (None, Some(x), Some(n)) => Ok(MapLiteral::General(DartMap::new(
                parse_cycles(&x, n)?,
                parse_cycles(&y, n)?,
            )?)),
            _ => Err(MapError::Literal(
                "expected `k=..; y=..` or `x=..; y=..; degree=..`".into(),
            )),
        }
    }
}

impl fmt::Display for MapLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapLiteral::OneVertex(m) => write!(f, "k={}; y={}", m.k, m.y),
            MapLiteral::General(m) => write!(f, "x={}; y={}; degree={}", m.x, m.y, m.degree()),
        }
    }
}
