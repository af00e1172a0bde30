//! A second route to the generator action on weights.
//!
//! The curve is read as the cyclic sequence of edges it crosses, rewritten
//! in the free group on the six loops around the punctures, pushed through
//! the Artin action of a half twist, and read back as weights. Nothing here
//! calls the library's tracer or its weight formulas.

use std::collections::HashMap;

use tangle3::WeightVector;

const SLOTS: [usize; 6] = [1, 6, 5, 4, 3, 2];

fn slot_of(edge: usize) -> usize {
    SLOTS.iter().position(|&e| e == edge).unwrap()
}

type Point = (usize, usize);

fn matching(get: impl Fn(usize, usize) -> i64) -> (HashMap<Point, Point>, [usize; 6]) {
    let mut cnt = [0usize; 6];
    let mut groups = HashMap::new();
    for s in 0..6 {
        let mut pos = 0;
        for d in 1..6 {
            let t = (s + 6 - d) % 6;
            let n = get(SLOTS[s], SLOTS[t]) as usize;
            groups.insert((s, t), (pos, n));
            pos += n;
        }
        cnt[s] = pos;
    }
    let mut m = HashMap::new();
    for s in 0..6 {
        for t in s + 1..6 {
            let (a0, n) = groups[&(s, t)];
            let (b0, _) = groups[&(t, s)];
            for k in 0..n {
                m.insert((s, a0 + k), (t, b0 + n - 1 - k));
                m.insert((t, b0 + n - 1 - k), (s, a0 + k));
            }
        }
    }
    (m, cnt)
}

fn get(w: &WeightVector, upper: bool) -> impl Fn(usize, usize) -> i64 + '_ {
    move |i, j| {
        if i == j {
            0
        } else if upper {
            w.upper(i, j)
        } else {
            w.lower(i, j)
        }
    }
}

/// Edges crossed by a single closed curve, each tagged `+1` when the arc
/// arriving at it ran through `H`.
fn crossing_word(w: &WeightVector) -> Vec<(usize, i8)> {
    let (mh, cnt) = matching(get(w, false));
    let (mc, cnt2) = matching(get(w, true));
    assert_eq!(cnt, cnt2, "unbalanced weights");
    let start = (0..6).find(|&s| cnt[s] > 0).map(|s| (s, 0)).expect("empty curve");
    let mut out = Vec::new();
    let mut p = start;
    let mut visited = 0;
    loop {
        let q = mh[&p];
        out.push((SLOTS[q.0], 1));
        let p2 = mc[&q];
        out.push((SLOTS[p2.0], -1));
        visited += 2;
        p = p2;
        if p == start {
            break;
        }
    }
    assert_eq!(visited, cnt.iter().sum::<usize>(), "more than one component");
    out
}

fn free_reduce<T: Copy + PartialEq>(word: impl IntoIterator<Item = (T, i8)>) -> Vec<(T, i8)> {
    let mut out: Vec<(T, i8)> = Vec::new();
    for x in word {
        match out.last() {
            Some(&(g, e)) if g == x.0 && e == -x.1 => {
                out.pop();
            }
            _ => out.push(x),
        }
    }
    out
}

fn cyclic_reduce(word: Vec<(usize, i8)>) -> Vec<(usize, i8)> {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0].0 == w[w.len() - 1].0 && w[0].1 == -w[w.len() - 1].1 {
        w = w[1..w.len() - 1].to_vec();
    }
    w
}

fn inverse(word: &[(usize, i8)]) -> Vec<(usize, i8)> {
    word.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

// loop around puncture P, written through the edges
fn loops_after(edge: usize) -> Vec<(usize, i8)> {
    (slot_of(edge) + 2..=6).map(|p| (p, 1)).collect()
}

fn to_loops(crossings: &[(usize, i8)]) -> Vec<(usize, i8)> {
    assert!(crossings.len().is_multiple_of(2));
    let mut out = Vec::new();
    for pair in crossings.chunks(2) {
        let ((i, a), (j, b)) = (pair[0], pair[1]);
        assert!(a == 1 && b == -1);
        out.extend(loops_after(i));
        out.extend(inverse(&loops_after(j)));
    }
    free_reduce(out)
}

fn to_crossings(loops: &[(usize, i8)]) -> Vec<(usize, i8)> {
    let mut out = Vec::new();
    for &(p, e) in loops {
        let pair = [(SLOTS[(p + 4) % 6], 1), (SLOTS[(p + 5) % 6], -1)];
        if e == 1 {
            out.extend(pair);
        } else {
            out.extend(inverse(&pair));
        }
    }
    out
}

/// Half twist exchanging punctures `p` and `p+1`; `positive` picks the direction.
fn twist(loops: &[(usize, i8)], p: usize, positive: bool) -> Vec<(usize, i8)> {
    let q = p % 6 + 1;
    let mut out = Vec::new();
    for &(g, e) in loops {
        let img: Vec<(usize, i8)> = if g == p {
            if positive {
                vec![(p, 1), (q, 1), (p, -1)]
            } else {
                vec![(q, 1)]
            }
        } else if g == q {
            if positive {
                vec![(p, 1)]
            } else {
                vec![(q, -1), (p, 1), (q, 1)]
            }
        } else {
            vec![(g, 1)]
        };
        if e == 1 {
            out.extend(img);
        } else {
            out.extend(inverse(&img));
        }
    }
    free_reduce(out)
}

fn weights_of(crossings: Vec<(usize, i8)>) -> WeightVector {
    let mut d = cyclic_reduce(crossings);
    if d.first().is_some_and(|x| x.1 == -1) {
        d.rotate_left(1);
    }
    let n = d.len();
    let mut lo = HashMap::<(usize, usize), i64>::new();
    let mut up = HashMap::<(usize, usize), i64>::new();
    for k in 0..n {
        let ((i, a), (j, _)) = (d[k], d[(k + 1) % n]);
        let key = (i.min(j), i.max(j));
        *if a == 1 { &mut up } else { &mut lo }.entry(key).or_default() += 1;
    }
    let lo: Vec<_> = lo.into_iter().map(|((i, j), v)| (i, j, v)).collect();
    let up: Vec<_> = up.into_iter().map(|((i, j), v)| (i, j, v)).collect();
    WeightVector::from_entries(&lo, &up)
}

/// `s_k^exp (w)` computed through the puncture loops.
pub fn apply(w: &WeightVector, k: u8, exp: i64) -> WeightVector {
    let edge = (6 - k as usize) % 6 + 1;
    let p = slot_of(edge) + 1;
    let mut loops = to_loops(&crossing_word(w));
    for _ in 0..exp.unsigned_abs() {
        loops = twist(&loops, p, exp > 0);
    }
    weights_of(to_crossings(&loops))
}
