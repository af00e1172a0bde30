//! Isotopy of two tangles from the three curves `G⁻¹F(∂E_i)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::batch;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::reducer::{self, Verdict};
use crate::weights::{CurveLabel, WeightVector};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Decide all three curves and reject exactly two disk-bounding ones.
    pub strict: bool,
    /// Keep the reduction trace of every curve in the report.
    pub trace: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    Isotopic,
    NotIsotopic,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Isotopic => "isotopic",
            Overall::NotIsotopic => "not isotopic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Words {
    pub f: String,
    pub g: String,
    pub f_normalized: String,
    pub g_normalized: String,
    /// `G⁻¹F`, the word applied to the three boundary curves.
    pub h: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub curve: CurveLabel,
    pub bounds: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub words: Words,
    /// Decided curves in label order; a curve skipped by the short-circuit is absent.
    pub curves: Vec<CurveReport>,
    pub overall: Overall,
    pub strict: bool,
}

impl EquivalenceReport {
    pub fn isotopic(&self) -> bool {
        self.overall == Overall::Isotopic
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// `h(∂E_c)` as weights.
pub fn curve_image(h: &BraidWord, c: CurveLabel) -> Result<WeightVector> {
    WeightVector::boundary(c).apply_word(h)
}

/// Reduction verdict for `h(∂E_c)`.
pub fn decide_curve(h: &BraidWord, c: CurveLabel) -> Result<Verdict> {
    reducer::decide_bounds_disk(&curve_image(h, c)?)
}

fn curve_report(h: &BraidWord, c: CurveLabel, keep_trace: bool) -> Result<CurveReport> {
    let mut verdict = decide_curve(h, c)?;
    if !keep_trace {
        verdict.trace.clear();
    }
    Ok(CurveReport { curve: c, bounds: verdict.bounds(), verdict })
}

/// Decides whether `F(ε)` and `G(ε)` are isotopic.
///
/// Two curves are decided first; the third only when they disagree. In strict
/// mode all three are decided, and exactly two bounding curves is an error.
pub fn equivalent(f: &BraidWord, g: &BraidWord, opts: Options) -> Result<EquivalenceReport> {
    let h = g.invert().compose(f);
    let words = Words {
        f: f.to_string(),
        g: g.to_string(),
        f_normalized: f.normalize_to_b5().to_string(),
        g_normalized: g.normalize_to_b5().to_string(),
        h: h.to_string(),
    };
    let keep = opts.trace;
    let [e1, e2, e3] = CurveLabel::ALL;
    let (r1, (r2, r3)) = batch::join(
        || curve_report(&h, e1, keep),
        || {
            batch::join(
                || curve_report(&h, e2, keep),
                || if opts.strict { Some(curve_report(&h, e3, keep)) } else { None },
            )
        },
    );
    let mut curves = vec![r1?, r2?];
    match r3 {
        Some(r) => curves.push(r?),
        None if curves[0].bounds != curves[1].bounds => curves.push(curve_report(&h, e3, keep)?),
        None => {}
    }
    let bounding = curves.iter().filter(|c| c.bounds).count();
    if opts.strict && bounding == 2 {
        let which: Vec<String> = curves.iter().filter(|c| c.bounds).map(|c| c.curve.to_string()).collect();
        return Err(Error::Contract(format!(
            "exactly two of the three curves bound disks ({}) for h = {h}",
            which.join(", ")
        )));
    }
    let overall = if bounding >= 2 { Overall::Isotopic } else { Overall::NotIsotopic };
    Ok(EquivalenceReport { words, curves, overall, strict: opts.strict })
}
