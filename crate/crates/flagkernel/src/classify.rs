//! Enumeration of painted Dynkin diagrams and the constant-Betti
//! classification.
//!
//! The enumeration is exhaustive over all simple types up to a rank guard;
//! nothing is filtered to match an expected answer. Identification labels
//! come from a static table of classical realizations (projective spaces
//! and odd quadrics) and are annotations, not computed facts; hits outside
//! the table are reported with an `unidentified-by-paper` flag.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{LieFamily, LieType, PaintedDiagram, RootSystem};
use crate::poincare::{poincare_polynomial, IntPolynomial};

/// Hard ceiling on the enumeration rank.
pub const MAX_SUPPORTED_RANK: usize = 12;

/// A diagram that survived the constant-Betti test.
#[derive(Debug, Clone)]
pub struct ClassificationHit {
    pub diagram: PaintedDiagram,
    /// Complex dimension n = degree of the Poincaré polynomial.
    pub dimension: usize,
    pub poincare: IntPolynomial,
    pub betti: Vec<u64>,
    /// Classical realization from the built-in table, if any.
    pub identification: Option<String>,
    pub flags: Vec<String>,
}

/// All painted diagrams with `black_count` black nodes over every simple
/// type of rank <= max_rank, in canonical order: family (A < B < ... < G),
/// then rank, then black subsets lexicographically. C_2 never appears (it
/// is served by B_2); C_p starts at p = 3.
pub fn enumerate_painted_diagrams(
    max_rank: usize,
    black_count: usize,
) -> Result<Vec<PaintedDiagram>> {
    if max_rank == 0 || max_rank > MAX_SUPPORTED_RANK {
        return Err(Error::invalid(format!(
            "max_rank must be in 1..={MAX_SUPPORTED_RANK}, got {max_rank}"
        )));
    }
    if black_count == 0 {
        return Err(Error::invalid("black_count must be at least 1"));
    }
    let mut types: Vec<LieType> = Vec::new();
    for rank in 1..=max_rank {
        types.push(LieType::new(LieFamily::A, rank).unwrap());
    }
    for rank in 2..=max_rank {
        types.push(LieType::new(LieFamily::B, rank).unwrap());
    }
    for rank in 3..=max_rank {
        types.push(LieType::new(LieFamily::C, rank).unwrap());
    }
    for rank in 4..=max_rank {
        types.push(LieType::new(LieFamily::D, rank).unwrap());
    }
    for rank in 6..=max_rank.min(8) {
        types.push(LieType::new(LieFamily::E, rank).unwrap());
    }
    if max_rank >= 4 {
        types.push(LieType::new(LieFamily::F, 4).unwrap());
    }
    if max_rank >= 2 {
        types.push(LieType::new(LieFamily::G, 2).unwrap());
    }
    types.sort();

    let mut out = Vec::new();
    for t in types {
        if t.rank() < black_count {
            continue;
        }
        let rs = RootSystem::new(t)?;
        for subset in subsets_lex(t.rank(), black_count) {
            out.push(PaintedDiagram::new(rs.clone(), subset)?);
        }
    }
    Ok(out)
}

/// Size-k subsets of 1..=n in lexicographic order.
fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

/// True iff no two black positive roots share a height.
pub fn distinct_heights_check(d: &PaintedDiagram) -> bool {
    let hs = d.heights_multiset();
    hs.windows(2).all(|w| w[0] != w[1])
}

/// True iff the heights are exactly {1, 2, ..., n}, each once.
pub fn heights_are_initial_segment(d: &PaintedDiagram) -> bool {
    d.heights_multiset()
        .iter()
        .enumerate()
        .all(|(i, &h)| h == i + 1)
}

fn identify(d: &PaintedDiagram) -> (Option<String>, Vec<String>) {
    let t = d.lie_type();
    let nodes: Vec<usize> = d.black_nodes().iter().copied().collect();
    if nodes.len() == 1 {
        let i = nodes[0];
        let p = t.rank();
        match t.family() {
            LieFamily::A if i == 1 || i == p => return (Some(format!("CP^{p}")), vec![]),
            LieFamily::B if i == 1 => return (Some(format!("Q_{}", 2 * p - 1)), vec![]),
            // B_2 with node 2 black is C_2 with node 1 black under the alias.
            LieFamily::B if p == 2 && i == 2 => {
                return (Some("CP^3".to_string()), vec!["c2-alias".to_string()])
            }
            LieFamily::C if i == 1 => return (Some(format!("CP^{}", 2 * p - 1)), vec![]),
            _ => {}
        }
    }
    (None, vec!["unidentified-by-paper".to_string()])
}

/// Classifies all single-black-node diagrams of rank <= max_rank with
/// constant Betti numbers. Raw combinatorial output: every survivor is
/// reported, labeled through the identification table when it is listed
/// there and flagged `unidentified-by-paper` otherwise.
///
/// Each hit is cross-checked against the height criterion (constant Betti
/// numbers iff the black-root heights are exactly {1..n}); a disagreement
/// is an internal-consistency error.
pub fn classify_constant_betti(max_rank: usize) -> Result<Vec<ClassificationHit>> {
    let diagrams = enumerate_painted_diagrams(max_rank, 1)?;
    let evaluated: Vec<Result<Option<ClassificationHit>>> = diagrams
        .into_par_iter()
        .map(|d| {
            let poly = poincare_polynomial(&d)?;
            let constant = poly.coeffs().iter().all(num_traits::One::is_one);
            let initial_segment = heights_are_initial_segment(&d);
            if constant != initial_segment {
                return Err(Error::internal(format!(
                    "{d}: constant-Betti ({constant}) disagrees with the height criterion ({initial_segment})"
                )));
            }
            if !constant {
                return Ok(None);
            }
            let betti = poly
                .coeffs()
                .iter()
                .map(|c| num_traits::ToPrimitive::to_u64(c).unwrap_or(0))
                .collect();
            let (identification, flags) = identify(&d);
            Ok(Some(ClassificationHit {
                dimension: d.complex_dimension(),
                poincare: poly,
                betti,
                identification,
                flags,
                diagram: d,
            }))
        })
        .collect();
    let mut hits = Vec::new();
    for e in evaluated {
        if let Some(hit) = e? {
            hits.push(hit);
        }
    }
    Ok(hits)
}

/// JSON-facing classification report, schema
/// `{"max_rank":N,"hits":[{"diagram":"B3:1","dimension":5,"betti":[...],
/// "identification":"Q_5","flags":[]}]}`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub max_rank: usize,
    pub hits: Vec<HitReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HitReport {
    pub diagram: String,
    pub dimension: usize,
    pub betti: Vec<u64>,
    pub identification: Option<String>,
    pub flags: Vec<String>,
}

impl ClassifyReport {
    pub fn from_hits(max_rank: usize, hits: &[ClassificationHit]) -> Self {
        ClassifyReport {
            max_rank,
            hits: hits
                .iter()
                .map(|h| HitReport {
                    diagram: h.diagram.to_string(),
                    dimension: h.dimension,
                    betti: h.betti.clone(),
                    identification: h.identification.clone(),
                    flags: h.flags.clone(),
                })
                .collect(),
        }
    }
}
