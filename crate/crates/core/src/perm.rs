//! Permutations of a dart set `{0, ..., n-1}` with disjoint-cycle I/O.
//!
//! Composition is functional (left action): `a.compose(&b)` applies `b` first,
//! then `a`. Under this convention the face permutation of a map with vertex
//! rotation `x` and edge involution `y` is `y.compose(&x.inverse())`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("image array is not a bijection of 0..{degree}")]
    NotBijection { degree: usize },
    #[error("standard cycle needs an even positive length, got {0}")]
    BadCycleLength(usize),
    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse {
        message: String,
        token: String,
        position: usize,
    },
}

/// A bijection of `{0, ..., degree-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree > 0, "permutation degree must be positive");
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for &i in &images {
            if i >= degree || seen[i] {
                return Err(PermError::NotBijection { degree });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; unnamed points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation, PermError> {
        let text: String = cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|i| i.to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect();
        parse_cycles(&text, degree)
    }

    /// The standard cycle `(0 1 2 ... two_k-1)`.
    pub fn standard_cycle(two_k: usize) -> Result<Permutation, PermError> {
        if two_k == 0 || two_k % 2 == 1 {
            return Err(PermError::BadCycleLength(two_k));
        }
        Ok(Permutation {
            images: (0..two_k).map(|i| (i + 1) % two_k).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        } else {
            Ok(())
        }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `self^n`; negative exponents use the inverse.
    pub fn power(&self, n: i64) -> Permutation {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = sq.compose(&acc).expect("same degree");
            }
            sq = sq.compose(&sq).expect("same degree");
            e >>= 1;
        }
        acc
    }

    /// `h⁻¹ g h` where `self` is `g`.
    pub fn conjugate(&self, h: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(h)?;
        h.inverse().compose(&self.compose(h)?)
    }

    pub fn commutes_with(&self, other: &Permutation) -> Result<bool, PermError> {
        self.check_degree(other)?;
        Ok((0..self.degree()).all(|i| self.images[other.images[i]] == other.images[self.images[i]]))
    }

    pub fn cycle_decomposition(&self) -> CycleList {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            cycles.push(cycle);
        }
        // Scanning starts in increasing order, so each cycle already begins at
        // its minimum and the list is sorted by minimum.
        CycleList { degree: n, cycles }
    }

    /// Cycle lengths including fixed points, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self
            .cycle_decomposition()
            .cycles
            .iter()
            .map(Vec::len)
            .collect();
        t.sort_unstable();
        t
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| self.images[j] == i)
    }

    /// An involution without fixed points.
    pub fn is_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| j != i && self.images[j] == i)
    }

    /// Orbit of `start` under `<self, other>`, sorted.
    pub fn joint_orbit(&self, other: &Permutation, start: usize) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut orbit = Vec::new();
        while let Some(i) = stack.pop() {
            orbit.push(i);
            for j in [self.images[i], other.images[i]] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_decomposition())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Disjoint cycles of a permutation, canonical: every cycle starts at its
/// minimum and cycles are sorted by minimum. Fixed points are kept as 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleList {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleList {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycle lengths in canonical cycle order.
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Cycle notation listing every cycle, fixed points included: `(0 4 2)(1)(3)(5)`.
    pub fn to_full_notation(&self) -> String {
        write_cycles(self.cycles.iter())
    }
}

fn write_cycles<'a>(cycles: impl Iterator<Item = &'a Vec<usize>>) -> String {
    let mut out = String::new();
    for c in cycles {
        out.push('(');
        for (n, i) in c.iter().enumerate() {
            if n > 0 {
                out.push(' ');
            }
            out.push_str(&i.to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Canonical form omits fixed points; the identity prints as `()`.
/// The alternate flag (`{:#}`) keeps fixed points.
impl fmt::Display for CycleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            f.write_str(&self.to_full_notation())
        } else {
            f.write_str(&write_cycles(self.cycles.iter().filter(|c| c.len() > 1)))
        }
    }
}

impl Serialize for CycleList {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_full_notation())
    }
}

fn parse_error(message: impl Into<String>, token: impl Into<String>, position: usize) -> PermError {
    PermError::Parse {
        message: message.into(),
        token: token.into(),
        position,
    }
}

/// Parses disjoint-cycle notation such as `"(0 10)(1 17)"` over `{0, ..., degree-1}`.
///
/// Grammar: `perm := cycle*`, `cycle := '(' int (ws int)* ')'`; whitespace is
/// allowed between tokens and `()` denotes the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    let bytes = text.as_bytes();
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(parse_error("expected `(`", token_at(text, pos), pos));
        }
        let open = pos;
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(parse_error("unclosed cycle", "(", open));
            }
            match bytes[pos] {
                b')' => {
                    pos += 1;
                    break;
                }
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let tok = &text[start..pos];
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_error("integer out of range", tok, start))?;
                    if v >= degree {
                        return Err(parse_error(
                            format!("symbol exceeds degree {degree}"),
                            tok,
                            start,
                        ));
                    }
                    if used[v] {
                        return Err(parse_error("repeated symbol", tok, start));
                    }
                    used[v] = true;
                    cycle.push(v);
                }
                _ => {
                    return Err(parse_error(
                        "expected integer or `)`",
                        token_at(text, pos),
                        pos,
                    ))
                }
            }
        }
        for w in 0..cycle.len() {
            images[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
    }
    Ok(Permutation { images })
}

fn token_at(text: &str, pos: usize) -> String {
    text[pos..]
        .chars()
        .take_while(|c| !c.is_whitespace())
        .take(8)
        .collect()
}

/// Parses cycle notation and infers the degree as one more than the largest symbol.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .filter_map(|t| t.parse::<usize>().ok())
            .max();
        parse_cycles(s, max.map_or(1, |m| m + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(0 1 2)(3 4 5)", 6).images(), &[1, 2, 0, 4, 5, 3]);
        assert_eq!(p("", 4).images(), &[0, 1, 2, 3]);
        assert_eq!(p("(0 3)(1 4)(2 5)", 6).images(), &[3, 4, 5, 0, 1, 2]);
        assert_eq!(p("()", 3), Permutation::identity(3));
        assert_eq!(p("  ( 0   10 ) (1 17)", 24).apply(10), 0);
    }

    #[test]
    fn parse_errors_name_token_and_position() {
        match parse_cycles("(0 1)(1 2)", 4) {
            Err(PermError::Parse { token, position, message }) => {
                assert_eq!(token, "1");
                assert_eq!(position, 6);
                assert!(message.contains("repeated"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_cycles("(0 7)", 6) {
            Err(PermError::Parse { token, position, .. }) => {
                assert_eq!((token.as_str(), position), ("7", 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_cycles("(0 1", 4), Err(PermError::Parse { position: 0, .. })));
        assert!(matches!(parse_cycles("0 1)", 4), Err(PermError::Parse { position: 0, .. })));
        assert!(matches!(parse_cycles("(0 x)", 4), Err(PermError::Parse { position: 3, .. })));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let x = p("(0 1 2 3)", 4);
        assert_eq!(x.compose(&x).unwrap().images(), &[2, 3, 0, 1]);
        let a = p("(0 1)", 3);
        let b = p("(1 2)", 3);
        // a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).unwrap().apply(1), 2);
        assert!(a.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn hexagonal_torus_face_step() {
        let x = p(
            "(0 1 2)(3 4 5)(6 7 8)(9 10 11)(12 13 14)(15 16 17)(18 19 20)(21 22 23)",
            24,
        );
        let y = p(
            "(0 10)(1 17)(2 3)(4 6)(5 13)(7 23)(8 9)(11 19)(12 22)(14 15)(16 18)(20 21)",
            24,
        );
        assert_eq!(y.compose(&x.inverse()).unwrap().apply(0), 3);
    }

    #[test]
    fn inverse_power_conjugate() {
        let c6 = Permutation::standard_cycle(6).unwrap();
        assert!(c6.power(6).is_identity());
        assert_eq!(c6.power(-1), c6.inverse());
        assert_eq!(c6.power(-7), c6.inverse());
        assert!(c6.compose(&c6.inverse()).unwrap().is_identity());
        let id = Permutation::identity(6);
        assert_eq!(c6.conjugate(&id).unwrap(), c6);

        // y commutes with x^2, so conjugating by x^2 returns y.
        let y = p("(0 1)(2 3)(4 5)", 6);
        assert_eq!(y.conjugate(&c6.power(2)).unwrap(), y);
        assert_ne!(y.conjugate(&c6).unwrap(), y);
        // h⁻¹gh: conj of (0 1) by (1 2) sends h⁻¹(g(h(i))); h(0)=0, g(0)=1, h⁻¹(1)=2.
        let g = p("(0 1)", 3);
        let h = p("(1 2)", 3);
        assert_eq!(g.conjugate(&h).unwrap(), p("(0 2)", 3));
    }

    #[test]
    fn cycles_and_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let f = p("(1 3 5)", 6);
        assert_eq!(f.cycle_decomposition().to_full_notation(), "(0)(1 3 5)(2)(4)");
        assert_eq!(f.cycle_type(), vec![1, 1, 1, 3]);
        assert_eq!(p("(5 0 3)(4 1)", 6).to_string(), "(0 3 5)(1 4)");
    }

    #[test]
    fn free_involutions() {
        assert!(p("(0 3)(1 4)(2 5)", 6).is_free_involution());
        assert!(!Permutation::identity(4).is_free_involution());
        assert!(!p("(0 1)(2 3)", 5).is_free_involution());
        assert!(!p("(0 1 2 3)", 4).is_free_involution());
    }

    #[test]
    fn standard_cycles() {
        assert_eq!(Permutation::standard_cycle(6).unwrap().to_string(), "(0 1 2 3 4 5)");
        assert_eq!(Permutation::standard_cycle(2).unwrap().to_string(), "(0 1)");
        assert_eq!(Permutation::standard_cycle(24).unwrap().power(3).apply(0), 3);
        assert!(Permutation::standard_cycle(5).is_err());
        assert!(Permutation::standard_cycle(0).is_err());
    }

    #[test]
    fn from_str_infers_degree() {
        let q: Permutation = "(0 3)(1 4)(2 5)".parse().unwrap();
        assert_eq!(q.degree(), 6);
    }
}
