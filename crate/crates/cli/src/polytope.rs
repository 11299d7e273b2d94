//! Lattice points of the tensor product cone, annotated with the rules that
//! explain them.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use prv_core::prvkit::{self, RootRef};
use prv_core::{charkit, Result, RootDatum, Weight};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SegmentMarker {
    /// 1-based simple root index.
    pub alpha: usize,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopePoint {
    pub weight: Vec<i64>,
    pub mult: u64,
    pub prv: bool,
    pub segments: Vec<SegmentMarker>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopePoints {
    pub datum: String,
    pub points: Vec<PolytopePoint>,
}

/// Every component of `V(μ) ⊗ V(ν)` with its multiplicity, whether it is a
/// PRV component, and the `(α, k)` of the certificates that produce it.
pub fn emit_polytope_points(datum: &RootDatum, mu: &Weight, nu: &Weight, cap: u128) -> Result<PolytopePoints> {
    let decomposition = charkit::tensor_decompose(datum, mu, nu)?;
    let prv: BTreeSet<Weight> = prvkit::prv_components(datum, mu, nu, cap)?.into_iter().collect();
    let mut markers: BTreeMap<Weight, BTreeSet<SegmentMarker>> = BTreeMap::new();
    for c in prvkit::prv_ext_certificates(datum, mu, nu, cap)? {
        if let RootRef::Simple(i) = c.alpha {
            markers
                .entry(c.lambda)
                .or_default()
                .insert(SegmentMarker { alpha: i + 1, k: c.k });
        }
    }
    let points = decomposition
        .sorted(datum)
        .into_iter()
        .map(|(w, mult)| PolytopePoint {
            weight: datum.to_display(&w),
            mult,
            prv: prv.contains(&w),
            segments: markers.remove(&w).map(|s| s.into_iter().collect()).unwrap_or_default(),
        })
        .collect();
    Ok(PolytopePoints {
        datum: datum.name().to_string(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use prv_core::weyl::DEFAULT_WEYL_CAP;

    #[test]
    fn clebsch_gordan_points() {
        let a1 = RootDatum::parse("A1").unwrap();
        let one = a1.from_display(&[1]).unwrap();
        let pts = emit_polytope_points(&a1, &one, &one, DEFAULT_WEYL_CAP).unwrap();
        let got: Vec<_> = pts.points.iter().map(|p| (p.weight.clone(), p.prv)).collect();
        assert_eq!(got, vec![(vec![0], true), (vec![2], true)]);
    }

    #[test]
    fn sp4_segment_marker() {
        let c2 = RootDatum::parse("C2").unwrap();
        let w2 = c2.from_display(&[0, 1]).unwrap();
        let pts = emit_polytope_points(&c2, &w2, &w2, DEFAULT_WEYL_CAP).unwrap();
        let two_w1 = pts.points.iter().find(|p| p.weight == vec![2, 0]).unwrap();
        assert!(two_w1.segments.contains(&SegmentMarker { alpha: 2, k: 1 }));
        assert_eq!(pts.points.len(), 3);
    }
}
