//! Combinatorial knot diagrams: a closed walk visiting 4-valent crossings,
//! with Gauss and PD code export and PD parsing.
//!
//! Conventions, fixed once and consistently with the projection and bracket
//! code:
//! - edges are labeled 1..2c along the orientation; edge k runs from the
//!   k-th passage to the next one;
//! - a PD tuple `X[a,b,c,d]` lists the four incident edge ends
//!   counterclockwise (as seen by the viewer) starting from the incoming
//!   under-edge `a`; the outgoing under-edge is always `c = succ(a)`;
//! - at a positive crossing the over-strand leaves through slot `b`, at a
//!   negative crossing through slot `d`.

use crate::error::{Error, Result};

/// One visit of the strand to a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

/// A knot diagram: the cyclic passage walk plus per-crossing signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    passages: Vec<Passage>,
    signs: Vec<i8>,
}

impl Diagram {
    /// A crossing-free diagram of the unknot.
    pub fn unknot() -> Diagram {
        Diagram {
            passages: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// Build a diagram and validate the 4-valence invariant: every crossing
    /// is visited exactly twice, once over and once under, and every sign
    /// is +-1.
    pub fn new(passages: Vec<Passage>, signs: Vec<i8>) -> Result<Diagram> {
        let c = signs.len();
        if passages.len() != 2 * c {
            return Err(Error::InvalidDiagram(format!(
                "{} passages for {c} crossings",
                passages.len()
            )));
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidDiagram("crossing sign must be +-1".into()));
        }
        let mut seen = vec![(false, false); c];
        for p in &passages {
            if p.crossing >= c {
                return Err(Error::InvalidDiagram(format!(
                    "crossing id {} out of range",
                    p.crossing
                )));
            }
            let slot = if p.over {
                &mut seen[p.crossing].0
            } else {
                &mut seen[p.crossing].1
            };
            if *slot {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {} visited twice with the same flag",
                    p.crossing
                )));
            }
            *slot = true;
        }
        if seen.iter().any(|&(o, u)| !o || !u) {
            return Err(Error::InvalidDiagram(
                "crossing missing an over or under passage".into(),
            ));
        }
        Ok(Diagram { passages, signs })
    }

    #[inline]
    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    #[inline]
    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    #[inline]
    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Signed Gauss sequence: crossings numbered 1.. in first-visit order,
    /// positive entries for over-passages, negative for under.
    pub fn gauss_code(&self) -> Vec<i64> {
        let mut label = vec![0i64; self.signs.len()];
        let mut next = 1i64;
        let mut out = Vec::with_capacity(self.passages.len());
        for p in &self.passages {
            if label[p.crossing] == 0 {
                label[p.crossing] = next;
                next += 1;
            }
            out.push(if p.over {
                label[p.crossing]
            } else {
                -label[p.crossing]
            });
        }
        out
    }

    pub fn gauss_string(&self) -> String {
        self.gauss_code()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// PD tuples, one per crossing, in first-under-visit order.
    pub fn pd_code(&self) -> Vec<[u32; 4]> {
        let n = self.passages.len();
        let in_edge = |p: usize| ((p + n - 1) % n + 1) as u32;
        let out_edge = |p: usize| (p + 1) as u32;

        let mut over_pos = vec![usize::MAX; self.signs.len()];
        let mut under_pos = vec![usize::MAX; self.signs.len()];
        for (i, p) in self.passages.iter().enumerate() {
            if p.over {
                over_pos[p.crossing] = i;
            } else {
                under_pos[p.crossing] = i;
            }
        }

        let mut order: Vec<usize> = (0..self.signs.len()).collect();
        order.sort_by_key(|&c| under_pos[c]);

        order
            .into_iter()
            .map(|c| {
                let (pu, po) = (under_pos[c], over_pos[c]);
                let (a, cc) = (in_edge(pu), out_edge(pu));
                let (oin, oout) = (in_edge(po), out_edge(po));
                if self.signs[c] > 0 {
                    [a, oout, cc, oin]
                } else {
                    [a, oin, cc, oout]
                }
            })
            .collect()
    }

    pub fn pd_string(&self) -> String {
        self.pd_code()
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse a PD code: whitespace- or newline-separated `X[a,b,c,d]`
    /// tuples. An empty code is the crossing-free unknot.
    pub fn from_pd(text: &str) -> Result<Diagram> {
        let mut tuples: Vec<[u32; 4]> = Vec::new();
        for token in text.split_whitespace() {
            let token = token.trim_end_matches(',');
            if token.is_empty() {
                continue;
            }
            let inner = token
                .strip_prefix("X[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected X[a,b,c,d], got {token}")))?;
            let fields: Vec<u32> = inner
                .split(',')
                .map(|f| {
                    f.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(e.to_string()))
                })
                .collect::<Result<_>>()?;
            if fields.len() != 4 {
                return Err(Error::Parse(format!("expected 4 entries in {token}")));
            }
            tuples.push([fields[0], fields[1], fields[2], fields[3]]);
        }
        Self::from_pd_tuples(&tuples)
    }

    /// Reconstruct a diagram from PD tuples with edges labeled 1..2c along
    /// the orientation.
    pub fn from_pd_tuples(tuples: &[[u32; 4]]) -> Result<Diagram> {
        let c = tuples.len();
        if c == 0 {
            return Ok(Diagram::unknot());
        }
        let m = 2 * c as u32;
        let succ = |e: u32| e % m + 1;

        let mut passages = vec![None::<Passage>; 2 * c];
        let mut signs = vec![0i8; c];
        // The passage whose incoming edge is e sits at walk position e mod 2c.
        let pos_of_in_edge = |e: u32| (e % m) as usize;

        for (cid, &[a, b, cc, d]) in tuples.iter().enumerate() {
            for e in [a, b, cc, d] {
                if e == 0 || e > m {
                    return Err(Error::InvalidDiagram(format!(
                        "edge label {e} out of range 1..{m}"
                    )));
                }
            }
            if succ(a) != cc {
                return Err(Error::InvalidDiagram(format!(
                    "under strand must run a -> succ(a); got X[{a},{b},{cc},{d}]"
                )));
            }
            // Over direction: the over-in slot is the one whose successor is
            // the other over slot.
            let (over_in, sign) = if succ(d) == b {
                (d, 1i8) // over runs d -> b: positive
            } else if succ(b) == d {
                (b, -1i8) // over runs b -> d: negative
            } else {
                return Err(Error::InvalidDiagram(format!(
                    "over slots {b},{d} are not consecutive edges"
                )));
            };
            signs[cid] = sign;

            let pu = pos_of_in_edge(a);
            let po = pos_of_in_edge(over_in);
            for (pos, over) in [(pu, false), (po, true)] {
                if passages[pos].is_some() {
                    return Err(Error::InvalidDiagram(format!(
                        "two passages claim walk position {pos}"
                    )));
                }
                passages[pos] = Some(Passage {
                    crossing: cid,
                    over,
                });
            }
        }
        let passages: Vec<Passage> = passages
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidDiagram("edge labels do not cover 1..2c".into()))?;
        Diagram::new(passages, signs)
    }
}

/// Assemble a diagram from per-strand-piece crossing events.
///
/// `events` holds `(piece index, parameter along piece, crossing id, over)`
/// entries; pieces are traversed in index order and events within a piece in
/// parameter order. Callers are responsible for parameter separation checks.
pub(crate) fn assemble(
    mut events: Vec<(usize, f64, usize, bool)>,
    signs: Vec<i8>,
) -> Result<Diagram> {
    events.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());
    let passages = events
        .into_iter()
        .map(|(_, _, crossing, over)| Passage { crossing, over })
        .collect();
    Diagram::new(passages, signs)
}
