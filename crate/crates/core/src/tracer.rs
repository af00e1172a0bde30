//! Rebuilding the curve from its weights, and its class in the free group.
//!
//! Crossings on each edge are numbered along the edge. Inside a region the
//! arcs leaving a crossing slot are grouped by destination edge, nearest
//! edge in the circular order first, and groups between two edges are
//! nested. The same rule is used for `H` and `H^c`; seen from the sphere the
//! two cyclic orders are mirror images, which is what makes the matchings
//! glue into closed curves.
//!
//! The edges `a1`, `a5`, `a3` are the shadows of the three strands. A loop
//! crossing one of them passes under the strand, so each crossing records
//! the letter `a`, `b` or `c`, with sign `+` when the crossing is reached
//! from `H`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_group::{FreeLetter, FreeWord, Generator};
use crate::weights::{WeightVector, CIRCULAR_EDGES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    #[serde(rename = "H")]
    Inside,
    #[serde(rename = "Hc")]
    Outside,
}

/// A crossing of the curve with an edge, and the region of the arc leaving it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceStep {
    pub edge: usize,
    pub slot: usize,
    pub region: Region,
}

/// One closed component as a cyclic sequence of crossings.
pub type Component = Vec<TraceStep>;

fn fence(edge: usize) -> Option<Generator> {
    match edge {
        1 => Some(Generator::A),
        5 => Some(Generator::B),
        3 => Some(Generator::C),
        _ => None,
    }
}

struct Matching {
    // partner[k] for global crossing id k
    partner: Vec<usize>,
}

/// Per-slot crossing counts and the global id offset of each slot.
fn layout(w: &WeightVector) -> ([usize; 6], [usize; 7]) {
    let mut count = [0usize; 6];
    for (s, c) in count.iter_mut().enumerate() {
        *c = w.edge_crossings(CIRCULAR_EDGES[s]) as usize;
    }
    let mut offset = [0usize; 7];
    for s in 0..6 {
        offset[s + 1] = offset[s] + count[s];
    }
    (count, offset)
}

fn matching(get: impl Fn(usize, usize) -> i64, offset: &[usize; 7]) -> Matching {
    // start[s][t]: first index on slot s of the group heading to slot t
    let mut start = [[0usize; 6]; 6];
    for s in 0..6 {
        let mut pos = 0;
        for d in 1..6 {
            let t = (s + 6 - d) % 6;
            start[s][t] = pos;
            pos += get(CIRCULAR_EDGES[s], CIRCULAR_EDGES[t]) as usize;
        }
    }
    let mut partner = vec![usize::MAX; offset[6]];
    for s in 0..6 {
        for t in s + 1..6 {
            let n = get(CIRCULAR_EDGES[s], CIRCULAR_EDGES[t]) as usize;
            let (a0, b0) = (start[s][t], start[t][s]);
            for k in 0..n {
                let x = offset[s] + a0 + k;
                let y = offset[t] + b0 + n - 1 - k;
                partner[x] = y;
                partner[y] = x;
            }
        }
    }
    Matching { partner }
}

fn locate(id: usize, offset: &[usize; 7]) -> (usize, usize) {
    let s = (0..6).rfind(|&s| offset[s] <= id).unwrap_or(0);
    (CIRCULAR_EDGES[s], id - offset[s])
}

/// Splits the curve described by `w` into its closed components.
pub fn trace(w: &WeightVector) -> Result<Vec<Component>> {
    w.check_balance()?;
    let (_, offset) = layout(w);
    let inner = matching(|i, j| w.lower(i, j), &offset);
    let outer = matching(|i, j| w.upper(i, j), &offset);
    let total = offset[6];
    let mut seen = vec![false; total];
    let mut comps = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut at = start;
        loop {
            let mid = inner.partner[at];
            if mid == usize::MAX || seen[at] || seen[mid] {
                return Err(Error::MalformedVector("matching does not close up".into()));
            }
            seen[at] = true;
            seen[mid] = true;
            let (edge, slot) = locate(at, &offset);
            comp.push(TraceStep { edge, slot, region: Region::Inside });
            let (edge, slot) = locate(mid, &offset);
            comp.push(TraceStep { edge, slot, region: Region::Outside });
            at = outer.partner[mid];
            if at == start {
                break;
            }
        }
        comps.push(comp);
    }
    Ok(comps)
}

/// Cyclically reduced class of a traced component.
pub fn pi1_word(component: &[TraceStep]) -> FreeWord {
    let n = component.len();
    let letters = (0..n).filter_map(|k| {
        let arrive = component[(k + 1) % n];
        let sign = if component[k].region == Region::Inside { 1 } else { -1 };
        fence(arrive.edge).map(|g| FreeLetter::new(g, sign))
    });
    FreeWord::from_letters(letters).cyclically_reduced()
}

/// True when the single curve `w` is null-homotopic in the tangle complement,
/// which for a curve on the boundary means it bounds a disk there.
pub fn oracle_bounds_disk(w: &WeightVector) -> Result<bool> {
    let comps = trace(w)?;
    if comps.len() != 1 {
        return Err(Error::NotConnected(comps.len()));
    }
    Ok(pi1_word(&comps[0]).is_identity())
}

/// The punctures on the side of the curve not containing puncture 1.
pub fn far_side(w: &WeightVector) -> Vec<usize> {
    // punctures k and k+1 are joined by the edge at circular slot k-1
    let mut side = [false; 7];
    for k in 1..6 {
        side[k + 1] = side[k] ^ (w.edge_crossings(CIRCULAR_EDGES[k - 1]) % 2 == 1);
    }
    (1..=6).filter(|&k| side[k]).collect()
}

/// The components as a JSON list of `(edge, slot, region)` triples.
pub fn dump_json(comps: &[Component]) -> serde_json::Value {
    serde_json::Value::Array(
        comps
            .iter()
            .map(|c| {
                serde_json::Value::Array(c.iter().map(|s| serde_json::json!([s.edge, s.slot, s.region])).collect())
            })
            .collect(),
    )
}
