//! Standard position of an untwisted curve in the thickened pair of pants.
//!
//! From `(p, q)` with a positive diagonal in disk 1 the curve is isotoped
//! into one of two standard diagrams, and the weights `m_k` of the eleven arc
//! types are closed-form in `p` and `q`. Throughout,
//! `x11 = p1 - p2 - p3`, `x12 = 2 p2` and `x13 = 2 p3`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "3a")]
    ThreeA,
    #[serde(rename = "3b1")]
    ThreeB1,
    #[serde(rename = "3b2i")]
    ThreeB2i,
    #[serde(rename = "3b2ii")]
    ThreeB2ii,
}

impl Case {
    pub fn id(self) -> &'static str {
        match self {
            Case::One => "1",
            Case::TwoA => "2a",
            Case::TwoB => "2b",
            Case::ThreeA => "3a",
            Case::ThreeB1 => "3b1",
            Case::ThreeB2i => "3b2i",
            Case::ThreeB2ii => "3b2ii",
        }
    }

    /// The standard diagram the case is drawn in: 1 for case 1, 2 otherwise.
    pub fn diagram(self) -> u8 {
        if self == Case::One {
            1
        } else {
            2
        }
    }

    /// Twisting that puts the curve into the case's standard diagram.
    pub fn twist(self, p: [i64; 3]) -> [i64; 3] {
        let t2 = if p[1] != 0 { -1 } else { 0 };
        if self == Case::One {
            [0, t2, 0]
        } else {
            [-1, t2, 0]
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    Case(Case),
    /// `x11 + x13 <= q1 + p1 < x11 + x12 + x13` with `x13 >= q1`: the curve is inessential.
    RejectCondition3,
}

pub fn select_case(p: [i64; 3], q: [i64; 3]) -> Selection {
    let [p1, p2, p3] = p;
    let q1 = q[0];
    let (x11, x12, x13) = (p1 - p2 - p3, 2 * p2, 2 * p3);
    if q1 + p1 < x11 + x13 {
        Selection::Case(Case::One)
    } else if q1 + p1 < x11 + x12 + x13 {
        if x13 >= q1 {
            Selection::RejectCondition3
        } else if q1 > x13 + x11 {
            Selection::Case(Case::TwoA)
        } else {
            Selection::Case(Case::TwoB)
        }
    } else if x13 >= q1 {
        Selection::Case(Case::ThreeA)
    } else if p1 >= 2 * q1 - x13 {
        Selection::Case(Case::ThreeB1)
    } else if q1 > x13 + x11 {
        Selection::Case(Case::ThreeB2i)
    } else {
        Selection::Case(Case::ThreeB2ii)
    }
}

/// Weights of the standard arc types. Types the tables do not split are
/// stored in the first slot (`m2_1`, `m10_1`, `m11_1`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardWeights {
    pub m1: i64,
    pub m2_1: i64,
    pub m2_2: i64,
    pub m3: i64,
    pub m4_1: i64,
    pub m4_2: i64,
    pub m5_1: i64,
    pub m5_2: i64,
    pub m6: i64,
    pub m7_1: i64,
    pub m7_2: i64,
    pub m8_1: i64,
    pub m8_2: i64,
    pub m9: i64,
    pub m10_1: i64,
    pub m10_2: i64,
    pub m11_1: i64,
    pub m11_2: i64,
}

impl StandardWeights {
    pub fn m2(&self) -> i64 {
        self.m2_1 + self.m2_2
    }

    pub fn m4(&self) -> i64 {
        self.m4_1 + self.m4_2
    }

    pub fn m5(&self) -> i64 {
        self.m5_1 + self.m5_2
    }

    pub fn m7(&self) -> i64 {
        self.m7_1 + self.m7_2
    }

    pub fn m8(&self) -> i64 {
        self.m8_1 + self.m8_2
    }

    pub fn m10(&self) -> i64 {
        self.m10_1 + self.m10_2
    }

    pub fn m11(&self) -> i64 {
        self.m11_1 + self.m11_2
    }

    fn entries(&self) -> [(&'static str, i64); 18] {
        [
            ("m1", self.m1),
            ("m2_1", self.m2_1),
            ("m2_2", self.m2_2),
            ("m3", self.m3),
            ("m4_1", self.m4_1),
            ("m4_2", self.m4_2),
            ("m5_1", self.m5_1),
            ("m5_2", self.m5_2),
            ("m6", self.m6),
            ("m7_1", self.m7_1),
            ("m7_2", self.m7_2),
            ("m8_1", self.m8_1),
            ("m8_2", self.m8_2),
            ("m9", self.m9),
            ("m10_1", self.m10_1),
            ("m10_2", self.m10_2),
            ("m11_1", self.m11_1),
            ("m11_2", self.m11_2),
        ]
    }

    pub fn total(&self) -> i64 {
        self.entries().iter().map(|e| e.1).sum()
    }

    /// Everything except `m1` and `m3`.
    pub fn others(&self) -> i64 {
        self.total() - self.m1 - self.m3
    }

    fn check(self, case: Case) -> Result<Self> {
        match self.entries().iter().find(|e| e.1 < 0) {
            Some((k, v)) => Err(Error::Internal(format!("case {case} produced {k} = {v}"))),
            None => Ok(self),
        }
    }
}

/// Evaluates the table of `case`.
pub fn standard_weights(p: [i64; 3], q: [i64; 3], case: Case) -> Result<StandardWeights> {
    let [p1, p2, p3] = p;
    let [q1, q2, q3] = q;
    let (x11, x13) = (p1 - p2 - p3, 2 * p3);
    let mut m = StandardWeights::default();
    match case {
        Case::One => {
            // the table's m3 = p3 - p2 - q1 is x11 - m2 before clamping m2
            m.m2_1 = (q1 + p1 - 2 * p3).max(0);
            m.m3 = x11 - m.m2_1;
            m.m7_1 = q2;
            m.m7_2 = p2 - q2;
            m.m6 = p2;
            let b = (x13 - (p1 + q1)).max(0);
            m.m10_1 = q1.min(p3 - q3);
            m.m10_2 = b.min(q3);
            m.m11_1 = (q1 - p3 + q3).max(0);
            m.m11_2 = (b - q3).max(0);
            m.m8_1 = (p3 - q3 - q1).max(0);
            m.m8_2 = (q3 - b).max(0);
            m.m9 = m.m10() + m.m8() - m.m11();
        }
        Case::TwoA | Case::TwoB => {
            m.m8_1 = p3 - q3;
            m.m8_2 = q3;
            m.m9 = p3;
            m.m5_1 = q2.min(p2 + p3 - q1);
            m.m7_1 = q2 - m.m5_1;
            m.m4_1 = p2 + p3 - q1 - m.m5_1;
            if case == Case::TwoA {
                m.m1 = x11;
                m.m5_2 = (p2 - q2).min(q1 + p2 - p1 - p3);
                m.m7_2 = p2 - q2 - m.m5_2;
                m.m4_2 = q1 + p2 - p1 - p3 - m.m5_2;
            } else {
                m.m1 = q1 - 2 * p3;
                m.m2_1 = p1 + p3 - p2 - q1;
                m.m7_2 = p2 - q2;
            }
            m.m6 = m.m5() + m.m7() - m.m4();
        }
        Case::ThreeA => {
            m.m3 = q1 - p2 - p3;
            m.m2_1 = p1 - q1;
            m.m7_1 = q2;
            m.m7_2 = p2 - q2;
            m.m6 = p2;
            m.m8_1 = q1.min(p3 - q3);
            m.m8_2 = (q3 - (2 * p3 - q1)).max(0);
            m.m10_1 = (2 * p3 - q1).min(q3);
            m.m11_1 = (2 * p3 - q1 - q3).max(0);
        }
        Case::ThreeB1 => {
            m.m2_2 = p1 + 2 * p3 - 2 * q1;
            m.m1 = q1 - 2 * p3;
            m.m3 = q1 - p2 - p3;
            m.m7_1 = q2;
            m.m7_2 = p2 - q2;
            m.m6 = p2;
            m.m8_1 = p3 - q3;
            m.m8_2 = q3;
            m.m9 = p3;
        }
        Case::ThreeB2i => {
            m.m2_1 = q1 - p2 - p3;
            m.m1 = p1 - q1;
            m.m7_1 = q2;
            m.m5_2 = (p2 - q2).min(q1 - x11 - x13);
            m.m7_2 = p2 - q2 - m.m5_2;
            m.m4_2 = q1 - x11 - x13 - m.m5_2;
            m.m6 = p2 - m.m4_2;
            m.m8_1 = p3 - q3;
            m.m8_2 = q3;
            m.m9 = p3;
        }
        Case::ThreeB2ii => {
            m.m2_1 = 2 * q1 - p1 - 2 * p3;
            m.m1 = p1 - q1;
            m.m3 = p1 + p3 - p2 - q1;
            m.m7_1 = q2;
            m.m7_2 = p2 - q2;
            m.m6 = p2;
            m.m8_1 = p3 - q3;
            m.m8_2 = q3;
            m.m9 = p3;
        }
    }
    m.check(case)
}
