//! The reduction loop.
//!
//! Each round puts the curve in standard position, checks the terminal
//! conditions and otherwise applies one of the parameter changes induced by
//! `δ3^{±1}` or `(δ1 δ2⁻¹)^{±1}`. These maps extend over the tangle
//! complement, so they do not change whether the curve bounds, and each one
//! strictly lowers `p1 + p2 + p3`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dehn::{self, DehnParams};
use crate::error::{Error, Result};
use crate::standard::{self, Case, Selection, StandardWeights};
use crate::weights::{CurveLabel, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "1")]
    Delta3,
    #[serde(rename = "2")]
    Delta3Inverse,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4")]
    Four,
    #[serde(rename = "6a")]
    SixA,
    #[serde(rename = "6b")]
    SixB,
    #[serde(rename = "6ci")]
    SixCi,
    #[serde(rename = "6cii")]
    SixCii,
    /// Half turn about the centre of disk 1, swapping disks 2 and 3.
    #[serde(rename = "half-turn")]
    HalfTurn,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Delta3 => "1",
            Rule::Delta3Inverse => "2",
            Rule::Three => "3",
            Rule::Four => "4",
            Rule::SixA => "6a",
            Rule::SixB => "6b",
            Rule::SixCi => "6ci",
            Rule::SixCii => "6cii",
            Rule::HalfTurn => "half-turn",
        };
        f.write_str(s)
    }
}

/// How the loop stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Terminal {
    /// The curve is one of the disk boundaries.
    DiskBoundary,
    /// Every standard weight vanished.
    AllWeightsZero,
    /// `m1 = m3 = 1` and nothing else.
    Rule5,
    /// The curve misses disks 2 and 3.
    MissesDisks2And3,
    /// No pants arc returns to the disk it left.
    NoDiagonal,
    Condition3,
    Rule7,
    Rule8,
    Rule9,
}

impl Terminal {
    pub fn bounds(self) -> bool {
        matches!(self, Terminal::DiskBoundary | Terminal::AllWeightsZero | Terminal::Rule5 | Terminal::MissesDisks2And3)
    }
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Terminal::DiskBoundary => "disk boundary",
            Terminal::AllWeightsZero => "all standard weights zero",
            Terminal::Rule5 => "m1 = m3 = 1",
            Terminal::MissesDisks2And3 => "misses disks 2 and 3",
            Terminal::NoDiagonal => "no diagonal arc",
            Terminal::Condition3 => "condition (3)",
            Terminal::Rule7 => "rule (7): m1 + m3 < 2",
            Terminal::Rule8 => "rule (8): m3 <= m2 + 1",
            Terminal::Rule9 => "rule (9): m2 >= m1, m3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub case: Case,
    pub p: [i64; 3],
    pub q: [i64; 3],
    /// `q' = p t + q` with `t` from the case's standard diagram.
    pub qprime: [i64; 3],
    pub m: StandardWeights,
    pub p_after: [i64; 3],
    pub qprime_after: [i64; 3],
}

/// Result of one round.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Reduction {
    Step(ReductionStep),
    Done(Terminal),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub terminal: Terminal,
    /// Label of the disk boundary, when the input was one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<CurveLabel>,
    /// Parameters the loop started from, after rotation and untwisting.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<DehnParams>,
    pub rotation: i64,
    pub trace: Vec<ReductionStep>,
}

impl Verdict {
    pub fn bounds(&self) -> bool {
        self.terminal.bounds()
    }

    fn terminal(terminal: Terminal) -> Self {
        Verdict { terminal, boundary: None, start: None, rotation: 0, trace: Vec::new() }
    }
}

/// One round on `(p, q)`, with `q` reduced (`t = 0`).
///
/// `allow_half_turn` is cleared right after a half turn so that a curve with
/// `m3 = 0` on both sides falls through to the terminal checks instead of
/// flipping forever.
pub fn reduce_once(params: &DehnParams, allow_half_turn: bool) -> Result<Reduction> {
    let p = params.p;
    let q = params.q;
    if p == [0, 0, 0] {
        return Ok(Reduction::Done(Terminal::AllWeightsZero));
    }
    let [p1, p2, p3] = p;
    if p1 - p2 - p3 <= 0 {
        return Ok(Reduction::Done(Terminal::NoDiagonal));
    }
    let case = match standard::select_case(p, q) {
        Selection::RejectCondition3 => return Ok(Reduction::Done(Terminal::Condition3)),
        Selection::Case(c) => c,
    };
    let m = standard::standard_weights(p, q, case)?;
    let t = case.twist(p);
    let qp = [0, 1, 2].map(|i| p[i] * t[i] + q[i]);
    let (m1, m2, m3) = (m.m1, m.m2(), m.m3);
    let step = |rule, p_after, qprime_after| {
        Reduction::Step(ReductionStep { rule, case, p, q, qprime: qp, m, p_after, qprime_after })
    };

    if m.total() == 0 {
        return Ok(Reduction::Done(Terminal::AllWeightsZero));
    }
    if m1 == 1 && m3 == 1 && m.others() == 0 {
        return Ok(Reduction::Done(Terminal::Rule5));
    }
    if p2 == 0 && p3 == 0 {
        // a connected curve disjoint from the shadows of strands 2 and 3 with
        // x11 > 0 separates strand 1 from them, and all such curves are
        // images of one another under twists that extend over the complement
        return Ok(Reduction::Done(Terminal::MissesDisks2And3));
    }
    if m1 > 0 && m3 == 0 && allow_half_turn {
        // swaps disks 2 and 3; only q1 moves relative to the new labels
        let qprime_after = [q[0] + p2 - p3, q[2] + p3, q[1] - p2];
        return Ok(step(Rule::HalfTurn, [p1, p3, p2], qprime_after));
    }
    if m1 + m3 < 2 {
        return Ok(Reduction::Done(Terminal::Rule7));
    }
    if m2 > 0 && m3 > 0 && m1 == 0 && m3 <= m2 + 1 {
        return Ok(Reduction::Done(Terminal::Rule8));
    }
    if m1 > 0 && m2 > 0 && m3 > 0 && m2 >= m1 && m2 >= m3 {
        return Ok(Reduction::Done(Terminal::Rule9));
    }

    let [q1, q2, q3] = qp;
    let m1011 = m.m10() + m.m11();
    let out = if m.m2_1 > 0 && m3 > 0 && m1 == 0 && m3 > m2 + 1 {
        step(Rule::Delta3, [p1 - 2 * m2, p2, p3], [q1 + m2 - m1011, q2, q3 + 2 * m1011])
    } else if m.m2_2 > 0 && m3 > 0 && m1 == 0 && m3 > m2 + 1 {
        step(Rule::Delta3Inverse, [p1 - 2 * m2, p2, p3], [q1 - m2 + m1011, q2, q3 - 2 * m1011])
    } else if m3 > m2 && m2 > 0 {
        step(Rule::Three, [p1 - 2 * m2, p2, p3], [q1 + m2, q2, q3])
    } else if m1 > m2 && m2 >= m3 && m3 > 0 {
        step(Rule::Four, [p1 - 2 * m2, p2, p3], [q1 + (m3 - m2), q2, q3])
    } else if m1 == 0 && m2 == 0 && m3 >= 2 {
        let (m8, m11) = (m.m8(), m.m11());
        if m11 == 0 {
            step(Rule::SixA, [p1 - m8, p2, p3 - m8], [q1 - m.m8_1, q2, q3 + m8])
        } else if m8 == 0 {
            step(Rule::SixB, [p1 - m11, p2, p3 - m11], [q1 - m.m11_1, q2, q3 + m11])
        } else if (m.m8_1 > 0 && m.m11_1 > 0) || (m.m8_2 > 0 && m.m11_2 > 0) {
            return Err(Error::Internal(format!("m8 and m11 overlap on one side: {m:?}")));
        } else if m.m8_1 > 0 && m.m11_2 > 0 {
            let d = m.m8_1 - m.m11_2;
            step(Rule::SixCi, [p1 - d, p2, p3 - d], [q1 - m.m8_1, q2, q3 + m.m11_2])
        } else if m.m8_2 > 0 && m.m11_1 > 0 {
            let d = m.m8_2 - m.m11_1;
            step(Rule::SixCii, [p1 - d, p2, p3 - d], [q1 + m.m11_1, q2, q3 - m.m8_2])
        } else {
            return Err(Error::Internal(format!("rule 6 does not apply to p={p:?} q={q:?} m={m:?}")));
        }
    } else {
        return Err(Error::Internal(format!("no rule applies to p={p:?} q={q:?} case {case} m={m:?}")));
    };
    if let Reduction::Step(s) = &out {
        let before: i64 = p.iter().sum();
        let after: i64 = s.p_after.iter().sum();
        if after >= before || s.p_after.iter().any(|&v| v < 0) {
            return Err(Error::Internal(format!("rule {} does not shrink p={p:?} to {:?}", s.rule, s.p_after)));
        }
    }
    Ok(out)
}

/// Runs the loop from untwisted parameters.
pub fn reduce(start: DehnParams) -> Result<(Terminal, Vec<ReductionStep>)> {
    let mut params = DehnParams::from_qprime(start.p, start.q);
    let mut trace = Vec::new();
    let limit = 2 * start.sum_p() + 4;
    let mut allow_half_turn = true;
    for _ in 0..limit {
        match reduce_once(&params, allow_half_turn)? {
            Reduction::Done(t) => return Ok((t, trace)),
            Reduction::Step(s) => {
                allow_half_turn = s.rule != Rule::HalfTurn;
                params = DehnParams::from_qprime(s.p_after, s.qprime_after);
                trace.push(s);
            }
        }
    }
    Err(Error::Internal(format!("reduction from {:?} did not stop in {limit} rounds", start.p)))
}

/// Decides whether the single curve `w` bounds a disk in the tangle complement.
pub fn decide_bounds_disk(w: &WeightVector) -> Result<Verdict> {
    let p = dehn::p_values(w);
    if p == [0, 0, 0] {
        let label = dehn::boundary_label(w)
            .ok_or_else(|| Error::MalformedCurve("curve misses every disk but is no disk boundary".into()))?;
        return Ok(Verdict { boundary: Some(label), ..Verdict::terminal(Terminal::DiskBoundary) });
    }
    let pants = dehn::pants_weights(dehn::window_counts(w))?;
    if pants.diagonal().is_none() {
        return Ok(Verdict::terminal(Terminal::NoDiagonal));
    }
    let report = dehn::to_dehn(w)?;
    let (terminal, trace) = reduce(report.params)?;
    Ok(Verdict { terminal, boundary: None, start: Some(report.params), rotation: report.rotation, trace })
}
