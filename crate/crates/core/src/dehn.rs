//! Dehn parameters of a curve with respect to the three standard disks.
//!
//! Disk `i` contains the edge `e(i)` (`a1`, `a5`, `a3`). `p_i` is half the
//! number of times the curve meets the disk boundary, which equals the number
//! of crossings with `e(i)`. The twisting `t_i` is found by twisting the disk
//! with `s0`, `s2`, `s4` until the left-twist test flips, and the offsets
//! `q_i` are then read from the untwisted weights.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::Letter;
use crate::error::{Error, Result};
use crate::weights::{CurveLabel, WeightVector};

/// Edge inside disk `i` (1-based).
pub const DISK_EDGES: [usize; 3] = [1, 5, 3];

/// Generator twisting disk `i` (1-based) counterclockwise.
const DISK_TWIST: [u8; 3] = [0, 2, 4];

/// Rotation steps taking disk `i`'s edge to `a1`.
pub const DISK_ROTATION: [i64; 3] = [0, 2, 4];

/// `(I1, I2, I3)`: crossings of the three disk boundaries, summed over both sides.
pub fn window_counts(w: &WeightVector) -> [i64; 3] {
    DISK_EDGES.map(|e| (1..=6).map(|j| w.lower(e, j) + w.upper(e, j)).sum())
}

/// `p = I / 2`.
pub fn p_values(w: &WeightVector) -> [i64; 3] {
    DISK_EDGES.map(|e| w.edge_crossings(e))
}

/// Weights `x_jk` of the standard arcs in the pair of pants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PantsWeights {
    x: [[i64; 3]; 3],
}

impl PantsWeights {
    /// `x_jk` for `1 <= j, k <= 3`.
    pub fn get(&self, j: usize, k: usize) -> i64 {
        self.x[j - 1][k - 1]
    }

    fn set(&mut self, j: usize, k: usize, v: i64) {
        self.x[j - 1][k - 1] = v;
        self.x[k - 1][j - 1] = v;
    }

    /// The disk with a positive diagonal weight, if any.
    pub fn diagonal(&self) -> Option<usize> {
        (1..=3).find(|&i| self.get(i, i) > 0)
    }

    pub fn to_map(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        for j in 1..=3 {
            for k in j..=3 {
                out.insert(format!("{j}{k}"), self.get(j, k));
            }
        }
        out
    }
}

impl Serialize for PantsWeights {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

pub fn pants_weights(i: [i64; 3]) -> Result<PantsWeights> {
    if i.iter().any(|&v| v < 0 || v % 2 != 0) {
        return Err(Error::MalformedVector(format!("window counts {i:?} must be even and non-negative")));
    }
    let mut x = PantsWeights::default();
    for a in 0..3 {
        let (b, c) = ((a + 1) % 3, (a + 2) % 3);
        if i[a] > i[b] + i[c] {
            x.set(a + 1, a + 1, (i[a] - i[b] - i[c]) / 2);
            x.set(a + 1, b + 1, i[b]);
            x.set(a + 1, c + 1, i[c]);
            return Ok(x);
        }
    }
    for a in 0..3 {
        let (b, c) = ((a + 1) % 3, (a + 2) % 3);
        x.set(b + 1, c + 1, (i[b] + i[c] - i[a]) / 2);
    }
    Ok(x)
}

fn left_twisted_first(w: &WeightVector) -> bool {
    let (l, u) = (|i, j| w.lower(i, j), |i, j| w.upper(i, j));
    if u(1, 5) + u(1, 6) > 0 {
        return true;
    }
    if u(1, 4) > 0 {
        let a = l(4, 5) + l(4, 6) + l(1, 4);
        let b = u(4, 5) + u(4, 6);
        if b < a {
            return true;
        }
        if a <= b && b < a + l(2, 4) && l(2, 6) + l(2, 5) + (b - a) < u(1, 2) {
            return true;
        }
    }
    false
}

/// Whether the curve is left-twisted in disk `disk`.
///
/// Disk 1 and disk 2 use their closed-form tests. Disk 3 evaluates the
/// disk 1 test after rotating the hexagon so that `a3` takes the place of
/// `a1`; the dedicated disk 3 expression does not terminate the untwisting
/// loop on every curve.
pub fn is_left_twisted(w: &WeightVector, disk: usize) -> Result<bool> {
    let p = p_values(w);
    if p[1] > p[0] + p[2] || p[2] > p[0] + p[1] {
        return Err(Error::Contract("left-twist tests need the diagonal arc in disk 1; rotate first".into()));
    }
    match disk {
        1 => Ok(left_twisted_first(w)),
        2 => Ok(w.upper(4, 5) > 0),
        3 => Ok(left_twisted_first(&w.rotate(-2))),
        _ => Err(Error::Contract(format!("no disk {disk}"))),
    }
}

/// Removes the twisting in each disk in turn, returning the untwisted curve and `t`.
pub fn untwist(w: &WeightVector) -> Result<(WeightVector, [i64; 3])> {
    let cap = 4 + w.total();
    let p = p_values(w);
    let mut w = *w;
    let mut t = [0i64; 3];
    for disk in 1..=3 {
        if p[disk - 1] == 0 {
            continue;
        }
        let ccw = Letter { index: DISK_TWIST[disk - 1], exp: 1 };
        let cw = ccw.inverse();
        let stuck = || Error::MalformedCurve(format!("twisting in disk {disk} did not settle within {cap} steps"));
        if is_left_twisted(&w, disk)? {
            while is_left_twisted(&w, disk)? {
                w = w.apply_generator(ccw)?;
                t[disk - 1] -= 1;
                if -t[disk - 1] > cap {
                    return Err(stuck());
                }
            }
        } else {
            loop {
                let next = w.apply_generator(cw)?;
                if is_left_twisted(&next, disk)? {
                    break;
                }
                w = next;
                t[disk - 1] += 1;
                if t[disk - 1] > cap {
                    return Err(stuck());
                }
            }
        }
    }
    Ok((w, t))
}

/// Reads `q` off an untwisted curve.
pub fn q_values(w: &WeightVector, x11: i64) -> Result<[i64; 3]> {
    let q = [w.upper(2, 6), w.upper(4, 6) - x11, w.upper(2, 4)];
    let p = p_values(w);
    for i in 0..3 {
        let ok = if p[i] == 0 { q[i] == 0 } else { (0..p[i]).contains(&q[i]) };
        if !ok {
            return Err(Error::MalformedCurve(format!("q{} = {} out of range for p{} = {}", i + 1, q[i], i + 1, p[i])));
        }
    }
    Ok(q)
}

/// Dehn parameters `(p_i, q_i, t_i)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DehnParams {
    pub p: [i64; 3],
    pub q: [i64; 3],
    pub t: [i64; 3],
    /// Set when every `p_i` is zero and the curve is one of the disk boundaries.
    pub boundary: Option<CurveLabel>,
}

impl DehnParams {
    pub fn qprime(&self) -> [i64; 3] {
        [0, 1, 2].map(|i| self.p[i] * self.t[i] + self.q[i])
    }

    /// Splits `q'` back into `q` and `t` with `0 <= q < p`.
    pub fn from_qprime(p: [i64; 3], qprime: [i64; 3]) -> Self {
        let mut out = DehnParams { p, ..Default::default() };
        for i in 0..3 {
            if p[i] > 0 {
                out.q[i] = qprime[i].rem_euclid(p[i]);
                out.t[i] = qprime[i].div_euclid(p[i]);
            }
        }
        out
    }

    pub fn sum_p(&self) -> i64 {
        self.p.iter().sum()
    }

    /// The nine numbers `(p1, q1, t1, p2, q2, t2, p3, q3, t3)`.
    pub fn nine(&self) -> [i64; 9] {
        let mut out = [0; 9];
        for i in 0..3 {
            out[3 * i] = self.p[i];
            out[3 * i + 1] = self.q[i];
            out[3 * i + 2] = self.t[i];
        }
        out
    }
}

/// Output of [`to_dehn`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DehnReport {
    pub params: DehnParams,
    pub pants: PantsWeights,
    /// Steps by which the input was rotated before untwisting.
    pub rotation: i64,
    pub untwisted: WeightVector,
}

#[derive(Serialize)]
struct DehnJson<'a> {
    p: [i64; 3],
    q: [i64; 3],
    t: [i64; 3],
    qprime: [i64; 3],
    x: &'a PantsWeights,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary: Option<CurveLabel>,
    rotation: i64,
}

impl DehnReport {
    pub fn to_json(&self) -> serde_json::Value {
        let p = &self.params;
        serde_json::to_value(DehnJson {
            p: p.p,
            q: p.q,
            t: p.t,
            qprime: p.qprime(),
            x: &self.pants,
            boundary: p.boundary,
            rotation: self.rotation,
        })
        .expect("plain data serializes")
    }
}

/// Which disk boundary a curve missing all three disks is.
pub fn boundary_label(w: &WeightVector) -> Option<CurveLabel> {
    CurveLabel::ALL.into_iter().find(|&c| WeightVector::boundary(c) == *w)
}

/// Full conversion: rotate the dominant disk to position 1, untwist, read `q`.
///
/// Curves without a positive diagonal are untwisted in place. They never
/// reach the reduction, and for a few of them the `q` read-off lands out of
/// range, which is reported as an error.
pub fn to_dehn(w: &WeightVector) -> Result<DehnReport> {
    let counts = window_counts(w);
    let pants = pants_weights(counts)?;
    let p = p_values(w);
    if p == [0, 0, 0] {
        let label = boundary_label(w)
            .ok_or_else(|| Error::MalformedCurve("curve misses every disk but is no disk boundary".into()))?;
        let params = DehnParams { boundary: Some(label), ..Default::default() };
        return Ok(DehnReport { params, pants, rotation: 0, untwisted: *w });
    }
    let rotation = pants.diagonal().map_or(0, |d| DISK_ROTATION[d - 1]);
    let v = w.rotate(rotation);
    let p = p_values(&v);
    let pants = pants_weights(window_counts(&v))?;
    let (untwisted, t) = untwist(&v)?;
    let q = q_values(&untwisted, pants.get(1, 1))?;
    Ok(DehnReport { params: DehnParams { p, q, t, boundary: None }, pants, rotation, untwisted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn alpha() -> WeightVector {
        let word: BraidWord = "s5 s3 s1 s2^-1 s3 s1".parse().unwrap();
        WeightVector::boundary(CurveLabel::E2).apply_word(&word).unwrap()
    }

    #[test]
    fn pants_examples() {
        let x = pants_weights([8, 16, 8]).unwrap();
        assert_eq!((x.get(1, 2), x.get(2, 3), x.get(1, 3)), (8, 8, 0));
        assert_eq!(x.diagonal(), None);
        let x = pants_weights([2, 2, 2]).unwrap();
        assert_eq!((x.get(1, 2), x.get(1, 3), x.get(2, 3)), (1, 1, 1));
        let x = pants_weights([10, 2, 4]).unwrap();
        assert_eq!((x.get(1, 1), x.get(1, 2), x.get(1, 3), x.get(2, 3)), (2, 2, 4, 0));
        assert!(pants_weights([3, 1, 2]).is_err());
    }

    #[test]
    fn alpha_windows() {
        assert_eq!(window_counts(&alpha()), [8, 16, 8]);
        assert_eq!(p_values(&alpha()), [4, 8, 4]);
    }

    #[test]
    fn boundaries_get_flag() {
        for c in CurveLabel::ALL {
            let r = to_dehn(&WeightVector::boundary(c)).unwrap();
            assert_eq!(r.params.boundary, Some(c));
            assert_eq!(r.params.nine(), [0; 9]);
        }
    }

    #[test]
    fn alpha_parameters() {
        assert!(is_left_twisted(&alpha(), 1).unwrap());
        let r = to_dehn(&alpha()).unwrap();
        assert_eq!(r.params.nine(), [4, 0, -1, 8, 1, -1, 4, 0, 0]);
        assert_eq!(r.rotation, 0);
        assert_eq!(window_counts(&r.untwisted), window_counts(&alpha()));
    }

    #[test]
    fn contract_on_wrong_diagonal() {
        let w = WeightVector::boundary(CurveLabel::E1).apply_word(&"s1^-1 s2^-2 s1^-1".parse().unwrap()).unwrap();
        assert_eq!(p_values(&w), [2, 0, 0]);
        assert!(is_left_twisted(&w, 1).is_ok());
        // moving disk 1 to the place of disk 2
        assert!(matches!(is_left_twisted(&w.rotate(4), 1), Err(Error::Contract(_))));
        assert!(matches!(is_left_twisted(&alpha(), 4), Err(Error::Contract(_))));
    }

    #[test]
    fn qprime_split() {
        let d = DehnParams::from_qprime([4, 0, 3], [-1, 0, 7]);
        assert_eq!((d.q, d.t), ([3, 0, 1], [-1, 0, 2]));
        assert_eq!(d.qprime(), [-1, 0, 7]);
    }
}
