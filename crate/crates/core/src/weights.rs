//! Hexagon weight coordinates of curves on the six-punctured sphere.
//!
//! The punctures `1..=6` are the vertices of a hexagon `H`; its edges are
//! `a1..=a6` with `a1` joining punctures 1,2, `a6` joining 2,3, `a5` joining
//! 3,4, `a4` joining 4,5, `a3` joining 5,6 and `a2` joining 6,1. A curve in
//! minimal position is cut by the edges into arcs; `w_ij` counts arcs inside
//! `H` from `a_i` to `a_j` and `w^ij` counts arcs in the complement `H^c`.
//!
//! The action of `s1` (half twist along `a6`) is a closed formula; every
//! other generator is obtained by conjugating with a relabelling of the edge
//! indices, and inverses by exchanging the two families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Edges listed in their circular order around the boundary of `H`.
pub const CIRCULAR_EDGES: [usize; 6] = [1, 6, 5, 4, 3, 2];

/// Edge `a_k` that generator `s_k` twists along, i.e. `7 - k (mod 6)`.
pub fn generator_edge(index: u8) -> usize {
    (6 - index as usize) % 6 + 1
}

const fn pair_table() -> [[usize; 7]; 7] {
    let mut t = [[usize::MAX; 7]; 7];
    let mut n = 0;
    let mut i = 1;
    while i <= 6 {
        let mut j = i + 1;
        while j <= 6 {
            t[i][j] = n;
            t[j][i] = n;
            n += 1;
            j += 1;
        }
        i += 1;
    }
    t
}

const PAIR: [[usize; 7]; 7] = pair_table();

/// All unordered index pairs `(i, j)` with `i < j`, in storage order.
pub fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=6).flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
}

/// One of the three standard disk boundaries of the trivial tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveLabel {
    E1,
    E2,
    E3,
}

impl CurveLabel {
    pub const ALL: [CurveLabel; 3] = [CurveLabel::E1, CurveLabel::E2, CurveLabel::E3];

    /// The hexagon edge lying inside the disk (the strand's shadow).
    pub fn edge(self) -> usize {
        match self {
            CurveLabel::E1 => 1,
            CurveLabel::E2 => 5,
            CurveLabel::E3 => 3,
        }
    }

    pub fn number(self) -> usize {
        match self {
            CurveLabel::E1 => 1,
            CurveLabel::E2 => 2,
            CurveLabel::E3 => 3,
        }
    }

    pub fn from_number(n: usize) -> Option<Self> {
        match n {
            1 => Some(CurveLabel::E1),
            2 => Some(CurveLabel::E2),
            3 => Some(CurveLabel::E3),
            _ => None,
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.number())
    }
}

impl FromStr for CurveLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e1" | "1" => Ok(CurveLabel::E1),
            "e2" | "2" => Ok(CurveLabel::E2),
            "e3" | "3" => Ok(CurveLabel::E3),
            _ => Err(Error::UnknownCurve(s.to_string())),
        }
    }
}

/// The 30 hexagon weights of a multicurve.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct WeightVector {
    lower: [i64; 15],
    upper: [i64; 15],
}

impl WeightVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `w_ij` (arcs inside `H`); zero on the diagonal.
    pub fn lower(&self, i: usize, j: usize) -> i64 {
        if i == j {
            0
        } else {
            self.lower[PAIR[i][j]]
        }
    }

    /// `w^ij` (arcs in `H^c`); zero on the diagonal.
    pub fn upper(&self, i: usize, j: usize) -> i64 {
        if i == j {
            0
        } else {
            self.upper[PAIR[i][j]]
        }
    }

    pub fn set_lower(&mut self, i: usize, j: usize, v: i64) {
        assert!(i != j, "diagonal weights are not stored");
        self.lower[PAIR[i][j]] = v;
    }

    pub fn set_upper(&mut self, i: usize, j: usize, v: i64) {
        assert!(i != j, "diagonal weights are not stored");
        self.upper[PAIR[i][j]] = v;
    }

    /// Builds a vector from explicit `(i, j, value)` lists.
    pub fn from_entries(lower: &[(usize, usize, i64)], upper: &[(usize, usize, i64)]) -> Self {
        let mut w = WeightVector::zero();
        for &(i, j, v) in lower {
            w.set_lower(i, j, v);
        }
        for &(i, j, v) in upper {
            w.set_upper(i, j, v);
        }
        w
    }

    /// The boundary of one of the three standard disks.
    pub fn boundary(c: CurveLabel) -> Self {
        let (i, j) = match c {
            CurveLabel::E1 => (2, 6),
            CurveLabel::E2 => (4, 6),
            CurveLabel::E3 => (2, 4),
        };
        WeightVector::from_entries(&[(i, j, 1)], &[(i, j, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.lower.iter().chain(self.upper.iter()).all(|&v| v == 0)
    }

    /// Number of crossings of the curve with edge `a_e`, counted on the `H` side.
    pub fn edge_crossings(&self, e: usize) -> i64 {
        (1..=6).map(|j| self.lower(e, j)).sum()
    }

    fn edge_crossings_upper(&self, e: usize) -> i64 {
        (1..=6).map(|j| self.upper(e, j)).sum()
    }

    /// Total number of arcs over both families.
    pub fn total(&self) -> i64 {
        self.lower.iter().chain(self.upper.iter()).sum()
    }

    /// Relabels every index by `i -> i + steps (mod 6)` in both families.
    pub fn rotate(&self, steps: i64) -> Self {
        let f = |i: usize| ((i as i64 - 1 + steps).rem_euclid(6) + 1) as usize;
        let mut out = WeightVector::zero();
        for (i, j) in pairs() {
            out.set_lower(f(i), f(j), self.lower(i, j));
            out.set_upper(f(i), f(j), self.upper(i, j));
        }
        out
    }

    /// Exchanges the lower and upper families.
    pub fn swap_levels(&self) -> Self {
        WeightVector { lower: self.upper, upper: self.lower }
    }

    /// Image under the involution of the sphere that swaps `H` with `H^c`
    /// while fixing `a1` and `a4` (the half turn about the centre of the
    /// disk around `a1`). It exchanges the second and third strands.
    pub fn half_turn(&self) -> Self {
        const F: [usize; 7] = [0, 1, 6, 5, 4, 3, 2];
        let mut out = WeightVector::zero();
        for (i, j) in pairs() {
            out.set_lower(F[i], F[j], self.upper(i, j));
            out.set_upper(F[i], F[j], self.lower(i, j));
        }
        out
    }

    /// Checks non-negativity and that both sides of every edge agree.
    pub fn check_balance(&self) -> Result<()> {
        if let Some((i, j)) = pairs().find(|&(i, j)| self.lower(i, j) < 0 || self.upper(i, j) < 0) {
            return Err(Error::MalformedVector(format!("negative weight at {i}{j}")));
        }
        for e in 1..=6 {
            let (a, b) = (self.edge_crossings(e), self.edge_crossings_upper(e));
            if a != b {
                return Err(Error::MalformedVector(format!(
                    "edge a{e} is crossed {a} times from H but {b} times from H^c"
                )));
            }
        }
        Ok(())
    }

    /// Adjacent edges may carry arcs on only one side of their common puncture.
    pub fn check_adjacency(&self) -> Result<()> {
        for k in 0..6 {
            let (i, j) = (CIRCULAR_EDGES[k], CIRCULAR_EDGES[(k + 1) % 6]);
            if self.lower(i, j) != 0 && self.upper(i, j) != 0 {
                return Err(Error::MalformedVector(format!(
                    "w{0}{1} and W{0}{1} are both nonzero",
                    i.min(j),
                    i.max(j)
                )));
            }
        }
        Ok(())
    }

    pub fn check_invariants(&self) -> Result<()> {
        self.check_balance()?;
        self.check_adjacency()
    }

    /// The half twist `s1` along `a6`, with bigons already removed.
    pub fn apply_sigma1(&self) -> Result<Self> {
        let l = |i, j| self.lower(i, j) as i128;
        let u = |i, j| self.upper(i, j) as i128;
        let (l15, l16, l25, l35, l45, l56) = (l(1, 5), l(1, 6), l(2, 5), l(3, 5), l(4, 5), l(5, 6));
        let (u12, u13, u14, u15, u16, u56) = (u(1, 2), u(1, 3), u(1, 4), u(1, 5), u(1, 6), u(5, 6));
        let mut lo: [(usize, usize, i128); 15] = [(0, 0, 0); 15];
        let mut up: [(usize, usize, i128); 15] = [(0, 0, 0); 15];

        lo[0] = (1, 2, l(1, 2) + l(2, 6));
        lo[1] = (1, 3, l(1, 3) + l(3, 6));
        lo[2] = (1, 4, l(1, 4) + l(4, 6));
        lo[3] = (1, 5, (l15 + l56 - u56).max(0));
        lo[4] = (1, 6, u56.min(l15 + l56));
        lo[5] = (2, 3, l(2, 3));
        lo[6] = (2, 4, l(2, 4));
        lo[7] = (3, 4, l(3, 4));
        // arcs pushed off a5 absorb the a5-arcs nearest puncture 3 first:
        // those ending on a1, then a2, a3, a4
        lo[8] = (2, 5, l25.min((l15 + l25 + l56 - u56).max(0)));
        lo[9] = (2, 6, l25.min((u56 - l15 - l56).max(0)));
        lo[10] = (3, 5, l35.min((l15 + l25 + l35 + l56 - u56).max(0)));
        lo[11] = (3, 6, l35.min((u56 - l15 - l25 - l56).max(0)));
        lo[12] = (4, 5, l45.min((l15 + l25 + l35 + l45 + l56 - u56).max(0)));
        lo[13] = (4, 6, l45.min((u56 - l15 - l25 - l35 - l56).max(0)));
        lo[14] = (5, 6, l16 + l(2, 6) + l(3, 6) + l(4, 6) + l56 - u56);

        up[0] = (2, 5, u(2, 5) + u(2, 6));
        up[1] = (3, 5, u(3, 5) + u(3, 6));
        up[2] = (4, 5, u(4, 5) + u(4, 6));
        up[3] = (1, 5, (u15 + u16 - l16).max(0));
        up[4] = (5, 6, l16.min(u15 + u16));
        up[5] = (2, 3, u(2, 3));
        up[6] = (2, 4, u(2, 4));
        up[7] = (3, 4, u(3, 4));
        up[8] = (1, 2, u12.min((u12 + u13 + u14 + u15 + u16 - l16).max(0)));
        up[9] = (2, 6, u12.min((l16 - u13 - u14 - u15 - u16).max(0)));
        up[10] = (1, 3, u13.min((u13 + u14 + u15 + u16 - l16).max(0)));
        up[11] = (3, 6, u13.min((l16 - u14 - u15 - u16).max(0)));
        up[12] = (1, 4, u14.min((u14 + u15 + u16 - l16).max(0)));
        up[13] = (4, 6, u14.min((l16 - u15 - u16).max(0)));
        up[14] = (1, 6, u16 + u(2, 6) + u(3, 6) + u(4, 6) + u56 - l16);

        let mut out = WeightVector::zero();
        let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("s1".into()));
        for &(i, j, v) in &lo {
            out.set_lower(i, j, narrow(v)?);
        }
        for &(i, j, v) in &up {
            out.set_upper(i, j, narrow(v)?);
        }
        Ok(out)
    }

    /// Applies `s_index^exp`, one half twist at a time.
    pub fn apply_generator(&self, letter: Letter) -> Result<Self> {
        let shift = letter.index as i64 - 1;
        let mut w = *self;
        for _ in 0..letter.exp.unsigned_abs() {
            let v = if letter.exp > 0 { w } else { w.swap_levels() };
            let v = v.rotate(shift).apply_sigma1()?.rotate(-shift);
            w = if letter.exp > 0 { v } else { v.swap_levels() };
            debug_assert!(w.check_invariants().is_ok(), "{letter} broke invariants: {w}");
        }
        Ok(w)
    }

    /// Applies a word as a map: the rightmost letter acts first.
    pub fn apply_word(&self, word: &BraidWord) -> Result<Self> {
        word.letters().iter().rev().try_fold(*self, |w, &l| w.apply_generator(l))
    }

    /// Nonzero entries as `(key, value)` maps, keys like `"15"`.
    pub fn to_maps(&self) -> (BTreeMap<String, i64>, BTreeMap<String, i64>) {
        let collect = |f: &dyn Fn(usize, usize) -> i64| {
            pairs()
                .filter(|&(i, j)| f(i, j) != 0)
                .map(|(i, j)| (format!("{i}{j}"), f(i, j)))
                .collect::<BTreeMap<_, _>>()
        };
        (collect(&|i, j| self.lower(i, j)), collect(&|i, j| self.upper(i, j)))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVector({self})")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, up) = self.to_maps();
        let lo: Vec<String> = lo.iter().map(|(k, v)| format!("w{k}={v}")).collect();
        let up: Vec<String> = up.iter().map(|(k, v)| format!("W{k}={v}")).collect();
        write!(f, "{} | {}", lo.join(" "), up.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    #[serde(default)]
    w: BTreeMap<String, i64>,
    #[serde(default, rename = "W")]
    big_w: BTreeMap<String, i64>,
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (w, big_w) = self.to_maps();
        WeightJson { w, big_w }.serialize(s)
    }
}

fn parse_key(k: &str) -> Result<(usize, usize)> {
    let b = k.as_bytes();
    let digit = |c: u8| (b'1'..=b'6').contains(&c).then(|| (c - b'0') as usize);
    match (b.len(), b.first().and_then(|&c| digit(c)), b.get(1).and_then(|&c| digit(c))) {
        (2, Some(i), Some(j)) if i != j => Ok((i, j)),
        _ => Err(Error::MalformedVector(format!("bad key `{k}`"))),
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WeightJson::deserialize(d)?;
        let mut out = WeightVector::zero();
        for (k, &v) in &raw.w {
            let (i, j) = parse_key(k).map_err(D::Error::custom)?;
            out.set_lower(i, j, v);
        }
        for (k, &v) in &raw.big_w {
            let (i, j) = parse_key(k).map_err(D::Error::custom)?;
            out.set_upper(i, j, v);
        }
        Ok(out)
    }
}
