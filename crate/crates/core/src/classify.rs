//! Regular and strictly edge-transitive one-vertex maps and the curves they
//! live on.
//!
//! A strictly edge-transitive one-vertex map with `k` edges is, up to
//! equivalence, `y: 2a <-> 2(a + t) + 1` for a shift `t`; its automorphism
//! group `Z_k` acts with signature `(0; k, l1, l2)` and generating vector
//! `<1, t, k - (t + 1)>`. When the full automorphism group of the surface is
//! larger, the signature extends along a catalogued pair `sigma < sigma'`, and
//! only a handful of curves arise.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::gcd;
use crate::census::{CommuterSpec, CyclePair};
use crate::maps::OneVertexMap;
use crate::perm::Permutation;
use crate::riemann::{
    classical_cyclic_action, n6_admissible, n8_admissible, normal_form_vector, rh_genus, vector_signature,
    CaseName, ClassicalCurve, ExtensionCase, GenVector, N8Case, Signature,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("k must be at least 1")]
    ZeroEdges,
    #[error("shift t = {t} out of range 0..{k}")]
    ShiftOutOfRange { k: u64, t: u64 },
    #[error("k = {k} is odd and t = {t} = (k-1)/2 gives y = x^k, a regular map; use the regular classification")]
    RegularParameter { k: u64, t: u64 },
    #[error("cross-check failed for k = {k}, t = {t}: {detail}")]
    CrossCheck { k: u64, t: u64, detail: String },
    #[error("g_max must be at least 1")]
    BadGenusBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeTransitiveDatum {
    pub k: u64,
    pub t: u64,
    pub canonical_t: u64,
    pub l1: u64,
    pub l2: u64,
    pub signature: Signature,
    pub vector: GenVector,
    pub genus: u64,
    /// `t = 0` or `t = k - 1`: the action is on the sphere with signature `(0; k, k)`.
    pub degenerate: bool,
    pub y: Permutation,
}

/// `y` pairing the even darts with the odd darts, shifted by `t` (`p = 2`).
pub fn shift_involution(k: u64, t: u64) -> Permutation {
    CommuterSpec {
        k: k as usize,
        p: 2,
        fixed_cycles: Vec::new(),
        pairs: vec![CyclePair {
            i: 0,
            j: 1,
            shift: t as usize,
        }],
    }
    .realize()
    .expect("valid two-cycle spec")
}

pub fn edge_transitive_datum(k: u64, t: u64) -> Result<EdgeTransitiveDatum, ClassifyError> {
    if k == 0 {
        return Err(ClassifyError::ZeroEdges);
    }
    if t >= k {
        return Err(ClassifyError::ShiftOutOfRange { k, t });
    }
    if k % 2 == 1 && 2 * t == k - 1 {
        return Err(ClassifyError::RegularParameter { k, t });
    }
    let canonical_t = t.min(k - 1 - t);
    let (c1, c2) = (gcd(t, k), gcd(t + 1, k));
    let (l1, l2) = (k / c1, k / c2);
    let signature = Signature::from_branch_orders(0, &[k, l1, l2]);
    let vector = normal_form_vector(k, t).expect("k >= 2 once the regular case is excluded");
    debug_assert_eq!(vector_signature(&vector).signature, signature);

    let y = shift_involution(k, t);
    let map = OneVertexMap::new(k as usize, y.clone()).expect("shift involutions are free");
    let fail = |detail: String| ClassifyError::CrossCheck { k, t, detail };

    let mut faces = map.as_dart_map().face_circuits().lengths();
    faces.sort_unstable();
    let mut expected: Vec<usize> = std::iter::repeat(l1 as usize)
        .take(c1 as usize)
        .chain(std::iter::repeat(l2 as usize).take(c2 as usize))
        .collect();
    expected.sort_unstable();
    if faces != expected {
        return Err(fail(format!("face lengths {faces:?}, predicted {expected:?}")));
    }
    let euler = map.profile().genus;
    let rh = rh_genus(k, &signature).map_err(|e| fail(e.to_string()))?;
    if euler != rh {
        return Err(fail(format!("Euler genus {euler} but Riemann-Hurwitz genus {rh}")));
    }

    Ok(EdgeTransitiveDatum {
        k,
        t,
        canonical_t,
        l1,
        l2,
        signature,
        vector,
        genus: euler,
        degenerate: l1 == 1 || l2 == 1,
        y,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    WimanI,
    WimanII,
    WimanIII,
    AccolaMaclachlan,
    Kulkarni,
    KleinQuartic,
    Z3SemidirectExtension { b: u64 },
    Z2SemidirectExtension { alpha: u64 },
    AutEqualsMapAut,
    NonHyperbolic,
}

impl Verdict {
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Verdict::WimanI
                | Verdict::WimanII
                | Verdict::WimanIII
                | Verdict::AccolaMaclachlan
                | Verdict::Kulkarni
                | Verdict::KleinQuartic
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::WimanI => write!(f, "Wiman type I"),
            Verdict::WimanII => write!(f, "Wiman type II"),
            Verdict::WimanIII => write!(f, "Wiman type III"),
            Verdict::AccolaMaclachlan => write!(f, "Accola-Maclachlan"),
            Verdict::Kulkarni => write!(f, "Kulkarni"),
            Verdict::KleinQuartic => write!(f, "Klein quartic"),
            Verdict::Z3SemidirectExtension { b } => write!(f, "Z_3 x| Z_k, beta(1) = {b}"),
            Verdict::Z2SemidirectExtension { alpha } => write!(f, "Z_2 x| Z_k, alpha(1) = {alpha}"),
            Verdict::AutEqualsMapAut => write!(f, "Aut(X) = Aut(M)"),
            Verdict::NonHyperbolic => write!(f, "non-hyperbolic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
}

impl GroupDescriptor {
    fn new(name: impl Into<String>, order: u64) -> GroupDescriptor {
        GroupDescriptor {
            name: name.into(),
            order,
            presentation: None,
        }
    }

    fn cyclic(n: u64) -> GroupDescriptor {
        GroupDescriptor::new(format!("Z_{n}"), n)
    }

    fn with_presentation(mut self, text: String) -> GroupDescriptor {
        self.presentation = Some(text);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub k: u64,
    /// Shift parameter of the reported representative; absent for regular maps.
    pub t: Option<u64>,
    pub regular: bool,
    pub genus: u64,
    pub signature: Signature,
    pub vector: GenVector,
    pub verdict: Verdict,
    pub aut_map_order: u64,
    /// Absent for genus 0 and 1, where the conformal group is infinite.
    pub aut_surface: Option<GroupDescriptor>,
    pub extension_chain: Vec<ExtensionCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_equation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub further_extension_note: Option<String>,
    pub notes: Vec<String>,
}

impl Classification {
    /// Product of the indices along the extension chain.
    pub fn chain_index(&self) -> u64 {
        self.extension_chain.iter().map(|e| e.index).product()
    }
}

fn ext(case: CaseName, k: u64, u: Option<u64>) -> ExtensionCase {
    ExtensionCase::instantiate(case, k, u).expect("row conditions hold by construction")
}

fn non_hyperbolic_notes(genus: u64) -> Vec<String> {
    match genus {
        0 => vec!["the map lies on the Riemann sphere".to_string()],
        _ => vec!["genus 1: the surface is an elliptic curve".to_string()],
    }
}

/// The regular map `y = x^k`, whose automorphism group `Z_2k` acts with
/// vector `<1, k-1, k>`.
pub fn classify_regular(k: u64) -> Result<Classification, ClassifyError> {
    if k == 0 {
        return Err(ClassifyError::ZeroEdges);
    }
    let n = 2 * k;
    let vector = normal_form_vector(n, k - 1).expect("n >= 2");
    let signature = vector_signature(&vector).signature;
    let y = Permutation::standard_cycle(n as usize).expect("n >= 2").power(k as i64);
    let map = OneVertexMap::new(k as usize, y).expect("x^k is a free involution");
    let genus = map.profile().genus;
    let rh = rh_genus(n, &signature).map_err(|e| ClassifyError::CrossCheck {
        k,
        t: k,
        detail: e.to_string(),
    })?;
    if rh != genus {
        return Err(ClassifyError::CrossCheck {
            k,
            t: k,
            detail: format!("Euler genus {genus} but Riemann-Hurwitz genus {rh}"),
        });
    }
    let g = genus;
    let mut out = Classification {
        k,
        t: None,
        regular: true,
        genus,
        signature,
        vector,
        verdict: Verdict::NonHyperbolic,
        aut_map_order: n,
        aut_surface: None,
        extension_chain: Vec::new(),
        curve_equation: None,
        further_extension_note: None,
        notes: Vec::new(),
    };
    if g <= 1 {
        out.notes = non_hyperbolic_notes(g);
        match k {
            3 => out.notes.push("elliptic curve of modulus e^{2 pi i/3}".to_string()),
            2 => out.notes.push("elliptic curve of modulus i".to_string()),
            _ => {}
        }
        return Ok(out);
    }
    if k % 2 == 1 {
        out.verdict = Verdict::WimanI;
        out.aut_surface = Some(GroupDescriptor::cyclic(4 * g + 2));
        out.curve_equation = Some(format!("w^2 = z^{} - 1", 2 * g + 1));
    } else {
        out.verdict = Verdict::WimanII;
        out.extension_chain = vec![ext(CaseName::N8, n, Some(2))];
        out.aut_surface = Some(semidihedral(g));
        out.curve_equation = Some(format!("w^2 = z*(z^{} - 1)", 2 * g));
        out.further_extension_note = wiman_ii_note(g);
    }
    Ok(out)
}

fn semidihedral(g: u64) -> GroupDescriptor {
    GroupDescriptor::new(format!("SD_{}", 8 * g), 8 * g).with_presentation(format!(
        "<a, b | a^{} = b^2 = 1, b^-1 a b = a^{}>",
        4 * g,
        2 * g - 1
    ))
}

fn wiman_ii_note(g: u64) -> Option<String> {
    (g == 2).then(|| "SD_16 extends to GL_2(Z_3), of order 48, with signature (0; 2, 3, 8)".to_string())
}

/// The strictly edge-transitive map with shift `t`. Both `t` and `k - 1 - t`
/// give the same classification.
pub fn classify_edge_transitive(k: u64, t: u64) -> Result<Classification, ClassifyError> {
    let given = edge_transitive_datum(k, t)?;
    let datum = if given.t == given.canonical_t {
        given
    } else {
        edge_transitive_datum(k, given.canonical_t)?
    };
    let tc = datum.canonical_t;
    let g = datum.genus;
    let mut out = Classification {
        k,
        t: Some(tc),
        regular: false,
        genus: g,
        signature: datum.signature.clone(),
        vector: normal_form_vector(k, tc).expect("k >= 2"),
        verdict: Verdict::NonHyperbolic,
        aut_map_order: k,
        aut_surface: None,
        extension_chain: Vec::new(),
        curve_equation: None,
        further_extension_note: None,
        notes: Vec::new(),
    };
    if g <= 1 {
        out.notes = non_hyperbolic_notes(g);
        return Ok(out);
    }
    out.aut_surface = Some(GroupDescriptor::cyclic(k));

    if k == 12 && tc == 3 {
        out.verdict = Verdict::WimanIII;
        out.extension_chain = vec![ext(CaseName::T10, 4, None)];
        out.aut_surface = Some(GroupDescriptor::new("H_48", 48));
        out.curve_equation = Some("w^3 = z^4 + 1".to_string());
        return Ok(finish(out));
    }

    if tc == 1 {
        if k % 2 == 1 {
            debug_assert_eq!(k, 2 * g + 1);
            out.verdict = Verdict::WimanI;
            out.extension_chain = vec![ext(CaseName::N8, k, Some(k))];
            out.aut_surface = Some(GroupDescriptor::cyclic(2 * k));
            out.curve_equation = Some(format!("w^2 = z^{} - 1", 2 * g + 1));
        } else {
            debug_assert_eq!(k, 2 * g + 2);
            out.verdict = Verdict::AccolaMaclachlan;
            out.extension_chain = vec![ext(CaseName::T9, k / 2, None)];
            out.aut_surface = Some(
                GroupDescriptor::new(format!("AM_{}", 8 * g + 8), 8 * g + 8)
                    .with_presentation(format!("<a, b | a^{} = b^4 = 1, (ab)^2 = [a, b^2] = 1>", 2 * g + 2)),
            );
            out.curve_equation = Some(format!("w^2 = z^{} - 1", 2 * g + 2));
            out.notes
                .push(format!("the N8 extension to Z_2 + Z_{k} is contained in the T9 extension"));
        }
        return Ok(finish(out));
    }

    if n6_admissible(k).contains(&tc) {
        debug_assert_eq!(k, 2 * g + 1);
        if k == 7 {
            out.verdict = Verdict::KleinQuartic;
            out.extension_chain = vec![ext(CaseName::T1, 7, None)];
            out.aut_surface = Some(GroupDescriptor::new("PSL_2(7)", 168));
            out.notes.push(format!(
                "the index 3 extension N6 to Z_3 x| Z_7, beta(1) = {tc}, is contained in the T1 extension"
            ));
        } else {
            out.verdict = Verdict::Z3SemidirectExtension { b: tc };
            out.extension_chain = vec![ext(CaseName::N6, k, None)];
            out.aut_surface = Some(GroupDescriptor::new(format!("Z_3 x|_beta Z_{k}"), 3 * k));
        }
        return Ok(finish(out));
    }

    let alpha = [tc, k - 1 - tc]
        .into_iter()
        .find_map(|a| match n8_admissible(k, a) {
            N8Case::NonAbelian { alpha } => Some(alpha),
            _ => None,
        });
    if let Some(alpha) = alpha {
        assert!(
            2 * g + 2 <= k && k <= 4 * g,
            "non-abelian N8 extension outside 2g+2 <= k <= 4g: k = {k}, g = {g}"
        );
        out.t = Some(alpha);
        out.vector = normal_form_vector(k, alpha).expect("k >= 2");
        out.signature = vector_signature(&out.vector).signature;
        if k == 2 * g + 2 && g % 4 == 3 && alpha == g + 2 {
            out.verdict = Verdict::Kulkarni;
            out.extension_chain = vec![ext(CaseName::T9, g + 1, None)];
            out.aut_surface = Some(
                GroupDescriptor::new(format!("K_{}", 8 * g + 8), 8 * g + 8).with_presentation(format!(
                    "<a, b | a^{} = b^4 = 1, (ab)^2 = 1, b^2 a b^2 = a^{}>",
                    2 * g + 2,
                    g + 2
                )),
            );
            if g == 3 {
                out.further_extension_note = Some(
                    "K_32 extends to a group of order 96 with signature (0; 2, 3, 8), via T4".to_string(),
                );
            }
        } else if k == 4 * g && alpha == 2 * g - 1 {
            out.verdict = Verdict::WimanII;
            out.extension_chain = vec![ext(CaseName::N8, k, Some(2))];
            out.aut_surface = Some(semidihedral(g));
            out.curve_equation = Some(format!("w^2 = z*(z^{} - 1)", 2 * g));
            out.notes.push(format!("Z_2 x|_alpha Z_{k} = SD_{}", 8 * g));
            out.further_extension_note = wiman_ii_note(g);
        } else if (k, g, alpha) == (12, 4, 7) || (k, g, alpha) == (24, 10, 19) {
            out.verdict = Verdict::Z2SemidirectExtension { alpha };
            out.extension_chain = vec![ext(CaseName::T8, k / 4, None)];
            out.aut_surface = Some(GroupDescriptor::new(
                format!("group of order {} containing Z_2 x|_alpha Z_{k} with index 3", 6 * k),
                6 * k,
            ));
            out.further_extension_note = Some(format!(
                "the N8 extension to Z_2 x|_alpha Z_{k} is contained with index 3 in the T8 extension"
            ));
        } else {
            out.verdict = Verdict::Z2SemidirectExtension { alpha };
            out.extension_chain = vec![ext(CaseName::N8, k, Some(k / gcd(alpha + 1, k)))];
            out.aut_surface = Some(GroupDescriptor::new(format!("Z_2 x|_alpha Z_{k}"), 2 * k));
        }
        return Ok(finish(out));
    }

    out.verdict = Verdict::AutEqualsMapAut;
    for curve in ClassicalCurve::ALL {
        if let Some(row) = classical_cyclic_action(curve, g) {
            if row.group_order == k && row.vector == out.vector {
                out.notes.push(format!(
                    "same signature and generating vector as the maximal cyclic action on the {} curve of genus {g}",
                    curve.name()
                ));
            }
        }
    }
    out.curve_equation = Some(format!(
        "w^{k} = z^{}*(z-1)^{}",
        k / datum.l1,
        k / datum.l2
    ));
    Ok(out)
}

fn finish(out: Classification) -> Classification {
    debug_assert!(out.extension_chain.iter().all(|e| e.sigma == out.signature));
    debug_assert_eq!(
        out.aut_surface.as_ref().map(|a| a.order),
        Some(out.aut_map_order * out.chain_index())
    );
    out
}

/// Every regular and strictly edge-transitive one-vertex map of genus at most
/// `g_max`, one per equivalence class, sorted by genus, then `k`, then `t`.
pub fn scan(g_max: u64) -> Result<Vec<Classification>, ClassifyError> {
    if g_max == 0 {
        return Err(ClassifyError::BadGenusBound);
    }
    let k_max = 4 * g_max + 2;
    let per_k: Result<Vec<Vec<Classification>>, ClassifyError> = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let mut found = vec![classify_regular(k)?];
            for t in (1..k).take_while(|&t| 2 * t + 1 < k) {
                found.push(classify_edge_transitive(k, t)?);
            }
            Ok(found)
        })
        .collect();
    let mut all: Vec<Classification> = per_k?
        .into_iter()
        .flatten()
        .filter(|c| c.genus <= g_max)
        .collect();
    all.sort_by_key(|c| (c.genus, c.k, !c.regular, c.t));
    for c in &all {
        assert!(
            c.genus < 2 || (c.k <= 4 * c.genus + 2 && c.k != 4 * c.genus + 1),
            "k = {} violates the bound for genus {}",
            c.k,
            c.genus
        );
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riemann::extension_matches;

    #[test]
    fn datum_examples() {
        let d = edge_transitive_datum(7, 2).unwrap();
        assert_eq!((d.l1, d.l2, d.genus), (7, 7, 3));
        assert_eq!(d.signature, Signature::triangle(7, 7, 7));
        assert_eq!(d.vector.entries(), [1, 2, 4]);

        let d = edge_transitive_datum(12, 3).unwrap();
        assert_eq!(d.signature.periods(), &[12, 4, 3]);
        assert_eq!(d.vector.entries(), [1, 3, 8]);
        assert_eq!(d.genus, 3);

        let d = edge_transitive_datum(4, 1).unwrap();
        assert_eq!(d.signature, Signature::triangle(4, 4, 2));
        assert_eq!(d.genus, 1);

        let d = edge_transitive_datum(8, 5).unwrap();
        assert_eq!(d.canonical_t, 2);
    }

    #[test]
    fn datum_degenerate_and_errors() {
        let d = edge_transitive_datum(3, 0).unwrap();
        assert!(d.degenerate);
        assert_eq!(d.genus, 0);
        assert_eq!(d.signature, Signature::new(0, vec![3, 3]).unwrap());
        assert_eq!(d.y.to_string(), "(0 1)(2 3)(4 5)");
        assert_eq!(edge_transitive_datum(3, 2).unwrap().y.to_string(), "(0 5)(1 2)(3 4)");

        assert!(matches!(
            edge_transitive_datum(7, 3),
            Err(ClassifyError::RegularParameter { k: 7, t: 3 })
        ));
        assert!(matches!(edge_transitive_datum(1, 0), Err(ClassifyError::RegularParameter { .. })));
        assert!(matches!(edge_transitive_datum(5, 5), Err(ClassifyError::ShiftOutOfRange { .. })));
        assert!(matches!(edge_transitive_datum(0, 0), Err(ClassifyError::ZeroEdges)));
    }

    #[test]
    fn regular_examples() {
        let c = classify_regular(3).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::NonHyperbolic, 1));
        assert!(c.notes.iter().any(|n| n.contains("e^{2 pi i/3}")));
        assert!(classify_regular(2).unwrap().notes.iter().any(|n| n.contains("modulus i")));
        assert_eq!(classify_regular(1).unwrap().genus, 0);

        let c = classify_regular(5).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::WimanI, 2));
        assert_eq!(c.signature, Signature::triangle(10, 5, 2));
        assert_eq!(c.aut_surface.as_ref().unwrap().name, "Z_10");
        assert!(extension_matches(&c.signature).is_empty());

        let c = classify_regular(8).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::WimanII, 4));
        let aut = c.aut_surface.as_ref().unwrap();
        assert_eq!((aut.name.as_str(), aut.order), ("SD_32", 32));
        assert_eq!(c.extension_chain[0].sigma_prime, Signature::triangle(2, 16, 4));

        assert!(classify_regular(4).unwrap().further_extension_note.unwrap().contains("GL_2(Z_3)"));
    }

    #[test]
    fn edge_transitive_examples() {
        let c = classify_edge_transitive(7, 2).unwrap();
        assert_eq!(c.verdict, Verdict::KleinQuartic);
        let aut = c.aut_surface.as_ref().unwrap();
        assert_eq!((aut.name.as_str(), aut.order), ("PSL_2(7)", 168));

        let c = classify_edge_transitive(7, 1).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::WimanI, 3));
        assert_eq!(c.aut_surface.unwrap().order, 14);

        let c = classify_edge_transitive(6, 1).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::AccolaMaclachlan, 2));
        assert_eq!(c.aut_surface.as_ref().unwrap().order, 24);
        assert_eq!(c.aut_surface.unwrap().name, "AM_24");

        let c = classify_edge_transitive(8, 5).unwrap();
        assert_eq!((c.verdict, c.genus, c.t), (Verdict::Kulkarni, 3, Some(5)));
        assert_eq!(c.vector.entries(), [1, 5, 2]);
        assert!(c.further_extension_note.unwrap().contains("96"));
        assert_eq!(classify_edge_transitive(8, 2).unwrap().verdict, Verdict::Kulkarni);

        let c = classify_edge_transitive(12, 3).unwrap();
        assert_eq!(c.verdict, Verdict::WimanIII);
        assert_eq!(c.aut_surface.unwrap().order, 48);

        let c = classify_edge_transitive(12, 5).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::WimanII, 3));
        assert_eq!(c.aut_surface.unwrap().name, "SD_24");

        let c = classify_edge_transitive(12, 7).unwrap();
        assert_eq!(c.verdict, Verdict::Z2SemidirectExtension { alpha: 7 });
        assert_eq!(c.genus, 4);
        assert_eq!(c.aut_surface.unwrap().order, 72);
        assert!(c.further_extension_note.is_some());

        let c = classify_edge_transitive(13, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Z3SemidirectExtension { b: 3 });
        assert_eq!(c.aut_surface.unwrap().order, 39);

        let c = classify_edge_transitive(9, 2).unwrap();
        assert_eq!(c.verdict, Verdict::AutEqualsMapAut);
        assert_eq!(c.curve_equation.as_deref(), Some("w^9 = z^1*(z-1)^3"));

        assert_eq!(classify_edge_transitive(4, 1).unwrap().verdict, Verdict::NonHyperbolic);

        let c = classify_edge_transitive(10, 4).unwrap();
        assert_eq!((c.verdict, c.genus), (Verdict::AutEqualsMapAut, 2));
        assert_eq!(c.signature, Signature::triangle(10, 5, 2));
        assert!(c.notes[0].contains("Wiman type I"));
        assert!(classify_edge_transitive(9, 2).unwrap().notes.is_empty());
    }

    #[test]
    fn scan_genus_three() {
        let all = scan(3).unwrap();
        let classical: Vec<(u64, Option<u64>, Verdict)> = all
            .iter()
            .filter(|c| !c.regular && c.verdict.is_classical())
            .map(|c| (c.k, c.t, c.verdict))
            .collect();
        let mut expected = vec![
            (5, Some(1), Verdict::WimanI),
            (6, Some(1), Verdict::AccolaMaclachlan),
            (8, Some(3), Verdict::WimanII),
            (7, Some(1), Verdict::WimanI),
            (7, Some(2), Verdict::KleinQuartic),
            (8, Some(1), Verdict::AccolaMaclachlan),
            (8, Some(5), Verdict::Kulkarni),
            (12, Some(3), Verdict::WimanIII),
            (12, Some(5), Verdict::WimanII),
        ];
        let mut got = classical.clone();
        got.sort_by_key(|e| (e.0, e.1));
        expected.sort_by_key(|e| (e.0, e.1));
        assert_eq!(got, expected);
        for c in &all {
            assert!(c.genus <= 3);
            if let Some(aut) = &c.aut_surface {
                assert_eq!(aut.order, c.aut_map_order * c.chain_index());
            }
            let matches = extension_matches(&c.signature);
            for e in &c.extension_chain {
                assert!(matches.iter().any(|m| m == e), "{e:?} not a match for {}", c.signature);
            }
        }
        let keys: Vec<_> = all.iter().map(|c| (c.genus, c.k, !c.regular, c.t)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn verdict_invariant_under_reflection() {
        for k in 2..=40u64 {
            for t in 0..k {
                if k % 2 == 1 && 2 * t == k - 1 {
                    continue;
                }
                assert_eq!(
                    classify_edge_transitive(k, t).unwrap(),
                    classify_edge_transitive(k, k - 1 - t).unwrap(),
                    "k = {k}, t = {t}"
                );
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(classify_edge_transitive(7, 2).unwrap()).unwrap();
        for key in [
            "k", "t", "genus", "signature", "vector", "verdict", "aut_map_order", "aut_surface",
            "extension_chain", "notes",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["signature"], "(0; 7, 7, 7)");
        assert_eq!(v["vector"], "<1, 2, 4> mod 7");
        assert_eq!(v["verdict"]["kind"], "KleinQuartic");
        assert_eq!(v["aut_surface"]["order"], 168);
        assert_eq!(v["extension_chain"][0]["index"], 24);

        let v = serde_json::to_value(classify_edge_transitive(9, 2).unwrap()).unwrap();
        assert_eq!(v["curve_equation"], "w^9 = z^1*(z-1)^3");
        let v = serde_json::to_value(classify_edge_transitive(13, 3).unwrap()).unwrap();
        assert_eq!(v["verdict"]["b"], 3);
    }

    #[test]
    fn bad_scan_bound() {
        assert!(matches!(scan(0), Err(ClassifyError::BadGenusBound)));
    }
}
