//! The two worked trajectories, used by `selftest`.
//!
//! Both start from `∂E2`. The first applies `s1, s3, s2^-1, s1, s3, s5` one
//! letter at a time; the second continues with the crossing-reversed word.

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::weights::{CurveLabel, WeightVector};

type Entries = &'static [(usize, usize, i64)];

/// One intermediate curve.
pub struct Stage {
    pub name: &'static str,
    /// Letter applied to the previous stage.
    pub letter: (u8, i64),
    pub lower: Entries,
    pub upper: Entries,
}

impl Stage {
    pub fn weights(&self) -> WeightVector {
        WeightVector::from_entries(self.lower, self.upper)
    }
}

pub const EXAMPLE_ONE: &[Stage] = &[
    Stage { name: "f1", letter: (1, 1), lower: &[(1, 4, 1), (5, 6, 1)], upper: &[(1, 6, 1), (4, 5, 1)] },
    Stage {
        name: "f2",
        letter: (3, 1),
        lower: &[(1, 5, 1), (5, 6, 1), (3, 4, 1)],
        upper: &[(3, 5, 1), (4, 5, 1), (1, 6, 1)],
    },
    Stage {
        name: "f3",
        letter: (2, -1),
        lower: &[(1, 4, 1), (4, 6, 1), (3, 4, 1), (5, 6, 2)],
        upper: &[(3, 6, 1), (4, 6, 1), (1, 6, 1), (4, 5, 2)],
    },
    Stage {
        name: "f4",
        letter: (1, 1),
        lower: &[(1, 4, 2), (1, 5, 2), (3, 4, 1), (5, 6, 3)],
        upper: &[(1, 5, 1), (3, 5, 1), (1, 6, 3), (4, 5, 3)],
    },
    Stage {
        name: "f5",
        letter: (3, 1),
        lower: &[(1, 5, 4), (3, 4, 3), (5, 6, 3), (3, 5, 1)],
        upper: &[(1, 5, 1), (1, 6, 3), (4, 5, 3), (3, 5, 4)],
    },
    Stage {
        name: "f6",
        letter: (5, 1),
        lower: &[(1, 5, 4), (3, 4, 3), (5, 6, 3), (3, 5, 1)],
        upper: &[(1, 5, 1), (1, 6, 3), (4, 5, 3), (3, 5, 4)],
    },
];

pub const EXAMPLE_TWO: &[Stage] = &[
    Stage {
        name: "f7",
        letter: (5, 1),
        lower: &[(1, 5, 4), (3, 4, 3), (5, 6, 3), (3, 5, 1)],
        upper: &[(1, 5, 1), (1, 6, 3), (4, 5, 3), (3, 5, 4)],
    },
    Stage {
        name: "f8",
        letter: (3, 1),
        lower: &[(3, 4, 3), (5, 6, 3), (1, 5, 4), (3, 5, 4)],
        upper: &[(1, 5, 1), (1, 6, 3), (4, 5, 3), (3, 5, 7)],
    },
    Stage {
        name: "f9",
        letter: (1, 1),
        lower: &[(3, 4, 3), (5, 6, 3), (3, 5, 4), (1, 5, 7)],
        upper: &[(1, 6, 3), (4, 5, 3), (1, 5, 4), (3, 5, 7)],
    },
    Stage {
        name: "f10",
        letter: (2, -1),
        lower: &[(3, 4, 7), (1, 4, 7), (4, 6, 3), (5, 6, 14)],
        upper: &[(1, 6, 7), (3, 6, 7), (4, 6, 3), (4, 5, 14)],
    },
    Stage {
        name: "f11",
        letter: (3, 1),
        lower: &[(1, 5, 7), (3, 5, 7), (3, 4, 17), (5, 6, 17)],
        upper: &[(1, 6, 7), (3, 6, 10), (3, 5, 14), (4, 5, 17)],
    },
    Stage {
        name: "f12",
        letter: (1, 1),
        lower: &[(3, 5, 7), (3, 4, 17), (5, 6, 17), (1, 5, 24)],
        upper: &[(1, 5, 7), (1, 6, 17), (4, 5, 17), (3, 5, 24)],
    },
];

/// The word whose image of `∂E2` is the last stage, in the usual right-to-left order.
pub fn word_of(stages: &[Stage]) -> BraidWord {
    BraidWord::from_letters(
        stages.iter().rev().map(|s| Letter::new(s.letter.0, s.letter.1).expect("valid golden letter")),
    )
}

/// `s5 s3 s1 s2^-1 s3 s1`.
pub fn example_word() -> BraidWord {
    word_of(EXAMPLE_ONE)
}

/// The same word with every crossing reversed.
pub fn reversed_word() -> BraidWord {
    example_word().mirror()
}

/// Runs both trajectories from `∂E2`; the second continues from the end of the first.
pub fn check_all() -> Result<Vec<(&'static str, bool)>> {
    let e2 = WeightVector::boundary(CurveLabel::E2);
    let mut out = Vec::new();
    let mut w = e2;
    for s in EXAMPLE_ONE.iter().chain(EXAMPLE_TWO) {
        w = w.apply_generator(Letter::new(s.letter.0, s.letter.1)?)?;
        out.push((s.name, w == s.weights()));
    }
    if out.len() != 12 {
        return Err(Error::Internal("golden table has the wrong length".into()));
    }
    Ok(out)
}
