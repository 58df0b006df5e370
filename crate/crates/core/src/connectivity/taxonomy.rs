//! Classification of a pair into the taxonomy of connectivity lattices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::limits::Limits;

use super::{ConnectivityPair, ESummary};

/// Evidence for a failed condition: the least offending element, pair or
/// set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
    Set(Vec<usize>),
}

/// The connectivity adjunction seen through its right adjoint `x ↦ C(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjointView {
    /// `C(0) = ∅`.
    pub preserves_bottom: bool,
    /// `C(x) = ∅` only for `x = 0`.
    pub reflects_bottom: bool,
    /// `⋁C(x) = x` for all `x`.
    pub right_inverse: bool,
    /// `C(⋁S) = S` for all `S` in the exterior of `C`.
    pub left_inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaxonomyReport {
    pub size: usize,
    pub connected: Vec<usize>,
    pub cl0: bool,
    pub cl1: bool,
    pub cl1_prime: bool,
    pub cl1_half: bool,
    pub cl2: bool,
    pub cl3: bool,
    pub preconnectivity: bool,
    pub connectivity: bool,
    pub kernel: bool,
    pub typical: bool,
    pub well_founded: bool,
    pub saturated: bool,
    pub separated: bool,
    pub serra: bool,
    pub absolute: bool,
    pub degenerate: bool,
    /// Present for connectivities only.
    pub adjoint: Option<AdjointView>,
    /// The class flags agree with their adjoint characterizations.
    pub views_agree: bool,
    /// Absent when the sets TMD in `L⁺` exceed the family limit.
    pub e_elements: Option<ESummary>,
    /// Keyed by the name of the failed flag.
    pub witnesses: BTreeMap<&'static str, Witness>,
}

pub fn classify(pair: &ConnectivityPair) -> Result<TaxonomyReport> {
    classify_with_limits(pair, &Limits::default())
}

pub fn classify_with_limits(pair: &ConnectivityPair, limits: &Limits) -> Result<TaxonomyReport> {
    let l = pair.lattice();
    let mut witnesses = BTreeMap::new();

    let cl0 = pair.cl0();
    if !cl0 {
        witnesses.insert("cl0", Witness::Element(l.bottom()));
    }
    let cl1_w = pair.cl1_witness();
    if let Some((a, b)) = cl1_w {
        witnesses.insert("cl1", Witness::Pair(a, b));
    }
    let cl1p_w = pair.cl1_prime_witness();
    if let Some((a, b)) = cl1p_w {
        witnesses.insert("cl1_prime", Witness::Pair(a, b));
    }
    let cl1h_w = pair.cl1_half_witness();
    if let Some(a) = cl1h_w {
        witnesses.insert("cl1_half", Witness::Element(a));
    }
    let cl2_w = pair.cl2_witness();
    if let Some(a) = cl2_w {
        witnesses.insert("cl2", Witness::Element(a));
    }
    let cl3_w = pair.cl3_witness(limits)?;
    if let Some(s) = &cl3_w {
        witnesses.insert("cl3", Witness::Set(s.to_vec()));
    }
    let pre_w = pair.preconnectivity_witness();
    if let Some((a, b)) = pre_w {
        witnesses.insert("preconnectivity", Witness::Pair(a, b));
    }
    let con_w = pair.connectivity_witness();
    if let Some((a, b)) = con_w {
        witnesses.insert("connectivity", Witness::Pair(a, b));
    }
    let degenerate = pair.is_degenerate();
    if let Some(x) = pair.poset().all().difference(pair.c()).first() {
        witnesses.insert("degenerate", Witness::Element(x));
    }

    let (cl1, cl1_prime, cl1_half, cl2, cl3) = (
        cl1_w.is_none(),
        cl1p_w.is_none(),
        cl1h_w.is_none(),
        cl2_w.is_none(),
        cl3_w.is_none(),
    );
    let connectivity = con_w.is_none();
    let typical = cl1 && !cl0;
    let absolute = connectivity && pair.is_absolute(limits)?;

    let adjoint = connectivity.then(|| AdjointView {
        preserves_bottom: pair.components(l.bottom()).is_empty(),
        reflects_bottom: pair
            .poset()
            .elements()
            .all(|x| x == l.bottom() || !pair.components(x).is_empty()),
        right_inverse: pair.poset().elements().all(|x| pair.kernel(x) == x),
        left_inverse: cl3,
    });

    let mut report = TaxonomyReport {
        size: pair.len(),
        connected: pair.c().to_vec(),
        cl0,
        cl1,
        cl1_prime,
        cl1_half,
        cl2,
        cl3,
        preconnectivity: pre_w.is_none(),
        connectivity,
        kernel: connectivity && cl0,
        typical,
        well_founded: connectivity && cl1_half,
        saturated: connectivity && cl2,
        separated: connectivity && cl3,
        serra: typical && cl2,
        absolute,
        degenerate,
        adjoint,
        views_agree: true,
        e_elements: match l.e_summary(limits) {
            Ok(e) => Some(e),
            Err(err) if err.is_limit() => None,
            Err(err) => return Err(err),
        },
        witnesses,
    };
    report.views_agree = report.adjoint.is_none_or(|v| views_agree(&report, &v));
    Ok(report)
}

fn views_agree(r: &TaxonomyReport, v: &AdjointView) -> bool {
    r.kernel == !v.preserves_bottom
        && r.well_founded == v.reflects_bottom
        && r.saturated == v.right_inverse
        && r.separated == v.left_inverse
        && r.absolute == (v.left_inverse && v.right_inverse)
        && r.serra == (v.right_inverse && v.preserves_bottom)
        && r.degenerate == (v.right_inverse && !v.preserves_bottom)
        && (r.well_founded && r.typical) == (v.preserves_bottom && v.reflects_bottom)
}
