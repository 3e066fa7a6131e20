//! Chord diagrams of arc diagrams, clean-chord reduction, canonical chord
//! codes and the adjoint chord diagrams of types I–IV.
//!
//! Each crossing becomes a based loop placed on the over-strand and each
//! endpoint becomes a based loop (`o_s`, `o_t`). Cutting the strand at its
//! over-passages yields chords joining consecutive loops; a chord passes
//! through the loop of every crossing it runs under.
//!
//! Every loop carries the counterclockwise ring of chord events on its
//! boundary. Reading events as darts (a loop is a fat vertex, consecutive
//! events of one chord are joined by an edge) gives a plane map whose faces
//! are those of the arc diagram.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;

use crate::diagram::ArcDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Event {
    Tail(usize),
    Head(usize),
    /// Chord entering the loop disk on its `j`-th passage.
    PassIn(usize, usize),
    PassOut(usize, usize),
}

impl Event {
    pub fn chord(&self) -> usize {
        match *self {
            Event::Tail(c) | Event::Head(c) | Event::PassIn(c, _) | Event::PassOut(c, _) => c,
        }
    }

    fn relabel(&self, f: &[usize]) -> Event {
        match *self {
            Event::Tail(c) => Event::Tail(f[c]),
            Event::Head(c) => Event::Head(f[c]),
            Event::PassIn(c, j) => Event::PassIn(f[c], j),
            Event::PassOut(c, j) => Event::PassOut(f[c], j),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub loop_id: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub tail: usize,
    pub head: usize,
    pub passes: Vec<Pass>,
    /// Chords crossed along the way, in order.
    pub crosses: Vec<usize>,
    pub extra: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedLoop {
    pub ring: Vec<Event>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    pub loops: Vec<BasedLoop>,
    pub chords: Vec<Chord>,
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdjointType {
    I,
    II,
    III,
    IV,
}

impl AdjointType {
    pub const ALL: [AdjointType; 4] = [AdjointType::I, AdjointType::II, AdjointType::III, AdjointType::IV];

    /// Number of adjoints of this type for `n` interior loops.
    pub fn count(self, n: usize) -> usize {
        match self {
            AdjointType::I => 2,
            AdjointType::II => 2 * n,
            AdjointType::III => n,
            AdjointType::IV => n * n.saturating_sub(1),
        }
    }
}

impl fmt::Display for AdjointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AdjointType::I => "I",
            AdjointType::II => "II",
            AdjointType::III => "III",
            AdjointType::IV => "IV",
        };
        f.write_str(s)
    }
}

/// One end pair of an additional chord.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Attachment {
    SelfAttach(usize),
    Join(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointDiagram {
    pub diagram: ChordDiagram,
    pub extra_pair: [Attachment; 2],
    pub type_tag: AdjointType,
    /// Position within its type, from 0.
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordCode(String);

impl ChordCode {
    /// Wrap code text read from a file; no validation is performed.
    pub fn from_text(text: &str) -> ChordCode {
        ChordCode(text.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ChordCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn chord_diagram_of(d: &ArcDiagram) -> ChordDiagram {
    let n = d.crossing_count();
    let mut chords = vec![Chord {
        tail: 0,
        head: 0,
        passes: Vec::new(),
        crosses: Vec::new(),
        extra: false,
    }];
    // event at every strand node for the forward and backward darts
    let mut fwd = vec![Event::Tail(0); 2 * n + 2];
    let mut back = vec![Event::Head(0); 2 * n + 2];
    for (i, v) in d.visits().iter().enumerate() {
        let node = i + 1;
        let k = chords.len() - 1;
        let lp = v.crossing + 1;
        if v.over {
            chords[k].head = lp;
            back[node] = Event::Head(k);
            chords.push(Chord {
                tail: lp,
                head: 0,
                passes: Vec::new(),
                crosses: Vec::new(),
                extra: false,
            });
            fwd[node] = Event::Tail(k + 1);
        } else {
            let j = chords[k].passes.len();
            chords[k].passes.push(Pass {
                loop_id: lp,
                sign: d.signs()[v.crossing],
            });
            back[node] = Event::PassIn(k, j);
            fwd[node] = Event::PassOut(k, j);
        }
    }
    let last = chords.len() - 1;
    chords[last].head = n + 1;
    back[2 * n + 1] = Event::Head(last);

    let dart_event = |dart: usize| {
        if dart.is_multiple_of(2) {
            fwd[dart / 2]
        } else {
            back[dart / 2 + 1]
        }
    };
    let mut loops = vec![BasedLoop {
        ring: vec![Event::Tail(0)],
    }];
    for c in 0..n {
        loops.push(BasedLoop {
            ring: d.rotation(c).iter().map(|&x| dart_event(x)).collect(),
        });
    }
    loops.push(BasedLoop {
        ring: vec![Event::Head(last)],
    });
    ChordDiagram {
        loops,
        chords,
        start: 0,
        end: n + 1,
    }
}

/// Plane map of a chord diagram with ring events as darts.
struct ChordMap {
    /// `(loop, ring position)` of each dart.
    darts: Vec<(usize, usize)>,
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    face: Vec<usize>,
    /// Dart id of `(loop, ring position)`.
    index: Vec<Vec<usize>>,
}

impl ChordMap {
    fn new(c: &ChordDiagram) -> ChordMap {
        let mut darts = Vec::new();
        let mut index = Vec::new();
        let mut at = std::collections::HashMap::new();
        for (l, lp) in c.loops.iter().enumerate() {
            let mut row = Vec::new();
            for (p, e) in lp.ring.iter().enumerate() {
                row.push(darts.len());
                at.insert(*e, darts.len());
                darts.push((l, p));
            }
            index.push(row);
        }
        let mut alpha = vec![usize::MAX; darts.len()];
        for (k, ch) in c.chords.iter().enumerate() {
            let mut seq = vec![Event::Tail(k)];
            for j in 0..ch.passes.len() {
                seq.push(Event::PassIn(k, j));
                seq.push(Event::PassOut(k, j));
            }
            seq.push(Event::Head(k));
            for pair in seq.chunks(2) {
                let (a, b) = (at[&pair[0]], at[&pair[1]]);
                alpha[a] = b;
                alpha[b] = a;
            }
        }
        let mut sigma = vec![0; darts.len()];
        for row in &index {
            for (p, &d) in row.iter().enumerate() {
                sigma[d] = row[(p + 1) % row.len()];
            }
        }
        let mut face = vec![usize::MAX; darts.len()];
        let mut next = 0;
        for s in 0..darts.len() {
            if face[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            while face[d] == usize::MAX {
                face[d] = next;
                d = sigma[alpha[d]];
            }
            next += 1;
        }
        ChordMap {
            darts,
            alpha,
            sigma,
            face,
            index,
        }
    }

    /// Face of the corner following ring position `p` of loop `l`.
    fn corner_face(&self, l: usize, p: usize) -> usize {
        self.face[self.sigma[self.index[l][p]]]
    }
}

/// A route for an additional chord: corners at both ends and the chords
/// whose edges it crosses.
struct Route {
    from_corner: usize,
    to_corner: usize,
    crosses: Vec<usize>,
}

/// Fewest edge crossings from a corner of loop `a` to a corner of loop `b`
/// through the faces of the map. Ties go to earlier corners and lower darts.
fn route(c: &ChordDiagram, map: &ChordMap, a: usize, b: usize) -> Route {
    let nf = map.face.iter().max().map_or(0, |m| m + 1);
    let mut darts_of_face: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (d, &f) in map.face.iter().enumerate() {
        darts_of_face[f].push(d);
    }
    let mut dist = vec![usize::MAX; nf];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; nf];
    let mut origin = vec![0usize; nf];
    let mut q = VecDeque::new();
    for p in 0..c.loops[a].ring.len() {
        let f = map.corner_face(a, p);
        if dist[f] == usize::MAX {
            dist[f] = 0;
            origin[f] = p;
            q.push_back(f);
        }
    }
    while let Some(f) = q.pop_front() {
        for &d in &darts_of_face[f] {
            let g = map.face[map.alpha[d]];
            if dist[g] == usize::MAX {
                dist[g] = dist[f] + 1;
                parent[g] = Some((f, d));
                origin[g] = origin[f];
                q.push_back(g);
            }
        }
    }
    let (to_corner, target) = (0..c.loops[b].ring.len())
        .map(|p| (p, map.corner_face(b, p)))
        .min_by_key(|&(p, f)| (dist[f], p))
        .expect("loop with no events");
    let mut crosses = Vec::new();
    let mut f = target;
    while let Some((g, d)) = parent[f] {
        let (l, p) = map.darts[d];
        crosses.push(c.loops[l].ring[p].chord());
        f = g;
    }
    crosses.reverse();
    Route {
        from_corner: origin[target],
        to_corner,
        crosses,
    }
}

impl ChordDiagram {
    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    /// Loops other than `o_s` and `o_t`, in index order.
    pub fn interior_loops(&self) -> Vec<usize> {
        (0..self.loops.len()).filter(|&l| l != self.start && l != self.end).collect()
    }

    pub fn without_extras(&self) -> ChordDiagram {
        let keep: Vec<usize> = (0..self.chords.len()).filter(|&k| !self.chords[k].extra).collect();
        self.keep_chords(&keep)
    }

    /// Restrict to the listed chords, renumbered in the given order.
    fn keep_chords(&self, keep: &[usize]) -> ChordDiagram {
        let mut map = vec![usize::MAX; self.chords.len()];
        for (i, &k) in keep.iter().enumerate() {
            map[k] = i;
        }
        let chords = keep
            .iter()
            .map(|&k| {
                let mut ch = self.chords[k].clone();
                ch.crosses = ch.crosses.iter().filter(|&&x| map[x] != usize::MAX).map(|&x| map[x]).collect();
                ch
            })
            .collect();
        let loops = self
            .loops
            .iter()
            .map(|l| BasedLoop {
                ring: l
                    .ring
                    .iter()
                    .filter(|e| map[e.chord()] != usize::MAX)
                    .map(|e| e.relabel(&map))
                    .collect(),
            })
            .collect();
        ChordDiagram {
            loops,
            chords,
            start: self.start,
            end: self.end,
        }
    }

    /// Add the two additional chords of an adjoint, routed on this diagram.
    pub fn with_extra_pair(&self, pair: [Attachment; 2]) -> ChordDiagram {
        let map = ChordMap::new(self);
        let mut out = self.clone();
        // (loop, ring position to insert after, events) collected first so
        // that both chords are routed on the unmodified diagram
        let mut inserts: Vec<(usize, usize, Vec<Event>)> = Vec::new();
        for att in pair {
            let k = out.chords.len();
            match att {
                Attachment::SelfAttach(l) => {
                    out.chords.push(Chord {
                        tail: l,
                        head: l,
                        passes: Vec::new(),
                        crosses: Vec::new(),
                        extra: true,
                    });
                    inserts.push((l, 0, vec![Event::Tail(k), Event::Head(k)]));
                }
                Attachment::Join(a, b) => {
                    let r = route(self, &map, a, b);
                    out.chords.push(Chord {
                        tail: a,
                        head: b,
                        passes: Vec::new(),
                        crosses: r.crosses,
                        extra: true,
                    });
                    inserts.push((a, r.from_corner, vec![Event::Tail(k)]));
                    inserts.push((b, r.to_corner, vec![Event::Head(k)]));
                }
            }
        }
        // later insertions in the same corner go nearer the corner's start
        for (l, p, evs) in inserts {
            let ring = &mut out.loops[l].ring;
            let base = &self.loops[l].ring[p];
            let at = ring.iter().position(|e| e == base).unwrap() + 1;
            for (i, e) in evs.into_iter().enumerate() {
                ring.insert(at + i, e);
            }
        }
        out
    }

    /// A chord joining two distinct loops that passes no loop and crosses
    /// no chord, excluding one that would merge `o_s` with `o_t`.
    fn clean_chord(&self) -> Option<usize> {
        (0..self.chords.len()).find(|&k| {
            let ch = &self.chords[k];
            let ends = [ch.tail, ch.head];
            ch.tail != ch.head
                && ch.passes.is_empty()
                && ch.crosses.is_empty()
                && !self.chords.iter().any(|o| o.crosses.contains(&k))
                && !(ends.contains(&self.start) && ends.contains(&self.end))
        })
    }
}

/// One merge performed by [`reduce_clean_chord`]: the loop kept, the loop
/// absorbed and the chord removed, in the numbering current at that step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Merge {
    pub kept: usize,
    pub absorbed: usize,
    pub chord: usize,
}

/// Repeatedly replace two loops joined by a clean chord with one loop.
pub fn reduce_clean_chord(c: &ChordDiagram) -> (ChordDiagram, Vec<Merge>) {
    let mut cur = c.clone();
    let mut log = Vec::new();
    while let Some(k) = cur.clean_chord() {
        let (a, b) = (cur.chords[k].tail, cur.chords[k].head);
        // keep the distinguished loop if one is involved
        let (kept, absorbed) = if b == cur.start || b == cur.end { (b, a) } else { (a, b) };
        let ra = &cur.loops[kept].ring;
        let rb = &cur.loops[absorbed].ring;
        let ia = ra.iter().position(|e| e.chord() == k).unwrap();
        let ib = rb.iter().position(|e| e.chord() == k).unwrap();
        let mut ring: Vec<Event> = ra[..ia].to_vec();
        ring.extend(rb[ib + 1..].iter().chain(rb[..ib].iter()).copied());
        ring.extend(ra[ia + 1..].iter().copied());

        let mut next = cur.clone();
        next.loops[kept].ring = ring;
        let fix = |l: usize| {
            let l = if l == absorbed { kept } else { l };
            if l > absorbed {
                l - 1
            } else {
                l
            }
        };
        for ch in next.chords.iter_mut() {
            ch.tail = fix(ch.tail);
            ch.head = fix(ch.head);
            for p in ch.passes.iter_mut() {
                p.loop_id = fix(p.loop_id);
            }
        }
        next.start = fix(next.start);
        next.end = fix(next.end);
        next.loops.remove(absorbed);
        let keep: Vec<usize> = (0..next.chords.len()).filter(|&x| x != k).collect();
        next = next.keep_chords(&keep);
        log.push(Merge {
            kept: fix(kept),
            absorbed,
            chord: k,
        });
        cur = next;
    }
    (cur, log)
}

/// The `n² + 2n + 2` adjoints of `c` in type order. `n` must equal the
/// number of interior loops.
pub fn enumerate_adjoints(c: &ChordDiagram, n: usize) -> Vec<AdjointDiagram> {
    let interior = c.interior_loops();
    assert_eq!(interior.len(), n, "loop count does not match n");
    let (s, t) = (c.start, c.end);
    use Attachment::{Join, SelfAttach};
    let mut pairs: Vec<(AdjointType, [Attachment; 2])> = vec![
        (AdjointType::I, [SelfAttach(s), SelfAttach(t)]),
        (AdjointType::I, [SelfAttach(s), Join(s, t)]),
    ];
    for &x in &interior {
        pairs.push((AdjointType::II, [SelfAttach(s), Join(t, x)]));
        pairs.push((AdjointType::II, [SelfAttach(t), Join(s, x)]));
    }
    for &x in &interior {
        pairs.push((AdjointType::III, [Join(s, t), Join(s, x)]));
    }
    for &x in &interior {
        for &y in &interior {
            if x != y {
                pairs.push((AdjointType::IV, [Join(s, x), Join(t, y)]));
            }
        }
    }
    let mut counters = [0usize; 4];
    pairs
        .into_iter()
        .map(|(ty, pair)| {
            let index = counters[ty as usize];
            counters[ty as usize] += 1;
            AdjointDiagram {
                diagram: c.with_extra_pair(pair),
                extra_pair: pair,
                type_tag: ty,
                index,
            }
        })
        .collect()
}

fn event_token(e: &Event, chord: &[usize]) -> String {
    match *e {
        Event::Tail(c) => format!("T{}", chord[c]),
        Event::Head(c) => format!("H{}", chord[c]),
        Event::PassIn(c, j) => format!("I{}.{}", chord[c], j),
        Event::PassOut(c, j) => format!("O{}.{}", chord[c], j),
    }
}

/// Code of `c` with loops and chords numbered by a traversal that starts
/// at ring position `p0` of `o_s`.
fn code_from(c: &ChordDiagram, p0: usize) -> String {
    let nl = c.loops.len();
    let nc = c.chords.len();
    let mut lab_loop = vec![usize::MAX; nl];
    let mut lab_chord = vec![usize::MAX; nc];
    let mut entry = vec![0usize; nl];
    let mut order = Vec::with_capacity(nl);
    let mut q = VecDeque::new();
    lab_loop[c.start] = 0;
    entry[c.start] = p0;
    q.push_back(c.start);
    let mut next_chord = 0;
    while let Some(l) = q.pop_front() {
        order.push(l);
        let ring = &c.loops[l].ring;
        for i in 0..ring.len() {
            let k = ring[(entry[l] + i) % ring.len()].chord();
            if lab_chord[k] != usize::MAX {
                continue;
            }
            lab_chord[k] = next_chord;
            next_chord += 1;
            let ch = &c.chords[k];
            let mut visits = vec![(ch.tail, Event::Tail(k))];
            for (j, p) in ch.passes.iter().enumerate() {
                visits.push((p.loop_id, Event::PassIn(k, j)));
            }
            visits.push((ch.head, Event::Head(k)));
            for (m, e) in visits {
                if lab_loop[m] == usize::MAX {
                    lab_loop[m] = order.len() + q.len();
                    entry[m] = c.loops[m].ring.iter().position(|x| *x == e).unwrap();
                    q.push_back(m);
                }
            }
        }
    }
    // chords not met from any loop ring cannot occur in a connected diagram
    for lab in lab_chord.iter_mut().filter(|x| **x == usize::MAX) {
        *lab = next_chord;
        next_chord += 1;
    }

    let mut s = String::new();
    writeln!(s, "CHORD 1 loops={} chords={}", nl, nc).unwrap();
    writeln!(s, "start: {} end: {}", lab_loop[c.start], lab_loop[c.end]).unwrap();
    for &l in &order {
        let ring = &c.loops[l].ring;
        let toks: Vec<String> = (0..ring.len())
            .map(|i| event_token(&ring[(entry[l] + i) % ring.len()], &lab_chord))
            .collect();
        writeln!(s, "loop {}: {}", lab_loop[l], toks.join(" ")).unwrap();
    }
    let mut by_label: Vec<usize> = (0..nc).collect();
    by_label.sort_by_key(|&k| lab_chord[k]);
    for k in by_label {
        let ch = &c.chords[k];
        write!(s, "chord {}: {} {}", lab_chord[k], lab_loop[ch.tail], lab_loop[ch.head]).unwrap();
        for p in &ch.passes {
            write!(s, " {}{}", lab_loop[p.loop_id], if p.sign > 0 { '+' } else { '-' }).unwrap();
        }
        if !ch.crosses.is_empty() {
            let xs: Vec<String> = ch.crosses.iter().map(|&x| lab_chord[x].to_string()).collect();
            write!(s, " x{}", xs.join(",")).unwrap();
        }
        if ch.extra {
            s.push_str(" extra");
        }
        s.push('\n');
    }
    s.pop();
    s
}

pub fn chord_code(c: &ChordDiagram) -> ChordCode {
    let n = c.loops[c.start].ring.len().max(1);
    let best = (0..n).map(|p| code_from(c, p)).min().unwrap();
    ChordCode(best)
}
