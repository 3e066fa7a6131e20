//! Knottedness oracle for adjoint chord diagrams and interval-valued
//! knotting probabilities.
//!
//! A chord from loop `a` to loop `b` passing loops `c_1 … c_r` with signs
//! `ε_i` gives the relator `W⁻¹ x_a W x_b⁻¹` with `W = x_{c_1}^{ε_1} ⋯ x_{c_r}^{ε_r}`.
//! For the chord diagram of an arc diagram this is a Wirtinger presentation
//! of the long knot.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arc::{reverse_arc, SpatialArc};
use crate::chord::{chord_code, chord_diagram_of, enumerate_adjoints, AdjointDiagram, AdjointType, ChordCode, ChordDiagram};
use crate::diagram::{diagram_along, ArcDiagram, DiagramError};
use crate::geom::{Direction, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnottingError {
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("invalid group table: {0}")]
    BadGroup(String),
    #[error("table line {line}: {msg}")]
    BadTable { line: usize, msg: String },
}

/// A letter `(generator, ±1)`.
pub type Letter = (usize, i8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<Letter>>) -> GroupPresentation {
        for r in &relators {
            for &(g, e) in r {
                assert!(g < generators && (e == 1 || e == -1), "bad letter ({}, {})", g, e);
            }
        }
        GroupPresentation { generators, relators }
    }

    /// Rank of the free part of the abelianization.
    pub fn abelian_rank(&self) -> usize {
        let mut rows: Vec<Vec<Rat>> = self
            .relators
            .iter()
            .map(|r| {
                let mut v = vec![0i64; self.generators];
                for &(g, e) in r {
                    v[g] += e as i64;
                }
                v.into_iter().map(Rat::from_int).collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.generators {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && !row[col].is_zero() {
                    let f = &row[col] / &pivot_row[col];
                    for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                        *x = &*x - &(&f * p);
                    }
                }
            }
            rank += 1;
        }
        self.generators - rank
    }
}

fn free_reduce(w: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in w {
        if out.last().is_some_and(|&(g, e)| g == l.0 && e == -l.1) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn presentation_of_chords(c: &ChordDiagram) -> GroupPresentation {
    let relators = c
        .chords
        .iter()
        .map(|ch| {
            let w: Vec<Letter> = ch.passes.iter().map(|p| (p.loop_id, p.sign)).collect();
            let mut r: Vec<Letter> = w.iter().rev().map(|&(g, e)| (g, -e)).collect();
            r.push((ch.tail, 1));
            r.extend(w.iter().copied());
            r.push((ch.head, -1));
            free_reduce(r)
        })
        .collect();
    GroupPresentation::new(c.loops.len(), relators)
}

pub fn presentation_of(a: &AdjointDiagram) -> GroupPresentation {
    presentation_of_chords(&a.diagram)
}

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks closure, associativity, that 0 is the identity and that
    /// inverses exist.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<FiniteGroup, KnottingError> {
        let n = table.len();
        let bad = |m: String| KnottingError::BadGroup(m);
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {} has {} entries, expected {}", i, row.len(), n)));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(bad(format!("entry {} out of range in row {}", v, i)));
            }
        }
        for (i, row) in table.iter().enumerate() {
            if row[0] != i || table[0][i] != i {
                return Err(bad("element 0 is not the identity".into()));
            }
        }
        let mut inverse = vec![0; n];
        for (i, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&j| table[i][j] == 0 && table[j][i] == 0)
                .ok_or_else(|| bad(format!("element {} has no inverse", i)))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({}, {}, {})", a, b, c)));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            table,
            inverse,
        })
    }

    /// Parse a whitespace-separated integer matrix, one row per line.
    pub fn parse_table(name: &str, text: &str) -> Result<FiniteGroup, KnottingError> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| KnottingError::BadGroup(format!("bad entry '{}'", t))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiniteGroup::from_table(name, rows)
    }

    /// Permutation group generated by `gens`, elements in discovery order
    /// from the identity.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> FiniteGroup {
        let k = gens[0].len();
        let id: Vec<usize> = (0..k).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..k).map(|i| p[q[i]]).collect() };
        let mut elems = vec![id];
        let mut idx: HashMap<Vec<usize>, usize> = HashMap::new();
        idx.insert(elems[0].clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let h = compose(&elems[i], g);
                if !idx.contains_key(&h) {
                    idx.insert(h.clone(), elems.len());
                    elems.push(h);
                }
            }
            i += 1;
        }
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| idx[&compose(a, b)]).collect())
            .collect();
        FiniteGroup::from_table(name, table).expect("permutation groups are groups")
    }

    pub fn symmetric3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn dihedral4() -> FiniteGroup {
        FiniteGroup::from_permutations("D4", &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    pub fn alternating4() -> FiniteGroup {
        FiniteGroup::from_permutations("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&format!("C{}", n), table).expect("cyclic group")
    }

    pub fn by_name(name: &str) -> Option<FiniteGroup> {
        match name {
            "S3" => Some(Self::symmetric3()),
            "D4" => Some(Self::dihedral4()),
            "A4" => Some(Self::alternating4()),
            _ => name
                .strip_prefix('C')
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 1)
                .map(Self::cyclic),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: i8) -> usize {
        if e > 0 {
            a
        } else {
            self.inverse[a]
        }
    }
}

pub const DEFAULT_GROUP_BOUND: usize = 120;

pub fn count_homs(p: &GroupPresentation, g: &FiniteGroup) -> Result<u64, KnottingError> {
    count_homs_bounded(p, g, DEFAULT_GROUP_BOUND, None)
}

/// Number of assignments of generators to elements of `g` (each drawn from
/// `allowed` when given) that satisfy every relator.
pub fn count_homs_bounded(
    p: &GroupPresentation,
    g: &FiniteGroup,
    bound: usize,
    allowed: Option<&[usize]>,
) -> Result<u64, KnottingError> {
    if g.order() > bound {
        return Err(KnottingError::GroupTooLarge {
            order: g.order(),
            bound,
        });
    }
    let all: Vec<usize> = (0..g.order()).collect();
    let mut allowed_mask = vec![false; g.order()];
    for &x in allowed.unwrap_or(&all) {
        allowed_mask[x] = true;
    }
    let mut s = Search {
        p,
        g,
        allowed: allowed_mask,
        value: vec![None; p.generators],
    };
    Ok(s.run())
}

struct Search<'a> {
    p: &'a GroupPresentation,
    g: &'a FiniteGroup,
    allowed: Vec<bool>,
    value: Vec<Option<usize>>,
}

enum Step {
    Conflict,
    Assigned(usize),
    Idle,
}

impl Search<'_> {
    fn product(&self, w: &[Letter]) -> usize {
        w.iter()
            .fold(0, |acc, &(x, e)| self.g.mul(acc, self.g.pow(self.value[x].unwrap(), e)))
    }

    /// Check or solve one relator.
    fn step(&mut self, r: &[Letter]) -> Step {
        let mut free: Option<usize> = None;
        let mut free_count = 0;
        for (i, &(x, _)) in r.iter().enumerate() {
            if self.value[x].is_none() {
                free_count += 1;
                if free.is_some_and(|f| r[f].0 != x) {
                    return Step::Idle;
                }
                free = Some(i);
            }
        }
        match (free, free_count) {
            (None, _) => {
                if self.product(r) == 0 {
                    Step::Idle
                } else {
                    Step::Conflict
                }
            }
            (Some(i), 1) => {
                // A x^e B = 1  ⇒  x^e = A⁻¹ B⁻¹
                let a = self.product(&r[..i]);
                let b = self.product(&r[i + 1..]);
                let xe = self.g.mul(self.g.inv(a), self.g.inv(b));
                let (x, e) = r[i];
                let v = self.g.pow(xe, e);
                if !self.allowed[v] {
                    return Step::Conflict;
                }
                self.value[x] = Some(v);
                Step::Assigned(x)
            }
            _ => Step::Idle,
        }
    }

    /// Propagate to a fixed point; returns the forced generators, or `None`
    /// on a conflict (after undoing them).
    fn propagate(&mut self) -> Option<Vec<usize>> {
        let mut forced = Vec::new();
        loop {
            let mut changed = false;
            for ri in 0..self.p.relators.len() {
                let r = &self.p.relators[ri];
                match self.step(r) {
                    Step::Conflict => {
                        for x in forced {
                            self.value[x] = None;
                        }
                        return None;
                    }
                    Step::Assigned(x) => {
                        forced.push(x);
                        changed = true;
                    }
                    Step::Idle => {}
                }
            }
            if !changed {
                return Some(forced);
            }
        }
    }

    fn run(&mut self) -> u64 {
        let Some(forced) = self.propagate() else {
            return 0;
        };
        let total = match self.value.iter().position(Option::is_none) {
            None => 1,
            Some(x) => {
                let mut t = 0;
                for v in 0..self.g.order() {
                    if self.allowed[v] {
                        self.value[x] = Some(v);
                        t += self.run();
                    }
                }
                self.value[x] = None;
                t
            }
        };
        for x in forced {
            self.value[x] = None;
        }
        total
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Knotted,
    Unknotted,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Table,
    HomCount { group: String, count: u64 },
    Plugin(String),
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub provenance: Provenance,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VerdictKind::Knotted => "knotted",
            VerdictKind::Unknotted => "unknotted",
            VerdictKind::Unknown => "unknown",
        };
        match &self.provenance {
            Provenance::Table => write!(f, "{} (table)", k),
            Provenance::HomCount { group, count } => write!(f, "{} (homs to {}: {})", k, group, count),
            Provenance::Plugin(id) => write!(f, "{} (plugin {})", k, id),
            Provenance::Undecided => f.write_str(k),
        }
    }
}

/// SHA-256 of the chord code text, lower-case hex.
pub fn code_hash(code: &ChordCode) -> String {
    Sha256::digest(code.as_str().as_bytes())
        .iter()
        .map(|b| format!("{:02x}", b))
        .collect()
}

/// User classifications keyed by chord-code hash.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationTable {
    entries: HashMap<String, VerdictKind>,
}

impl ClassificationTable {
    pub fn insert(&mut self, code: &ChordCode, kind: VerdictKind) {
        self.entries.insert(code_hash(code), kind);
    }

    pub fn get(&self, code: &ChordCode) -> Option<VerdictKind> {
        self.entries.get(&code_hash(code)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines `<key> <knotted|unknotted>`, where the key is a 64-digit hex
    /// hash or an inline chord code with its lines joined by `;`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<ClassificationTable, KnottingError> {
        let mut t = ClassificationTable::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| KnottingError::BadTable {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (key, verdict) = line.rsplit_once(char::is_whitespace).ok_or_else(|| err("expected '<key> <verdict>'"))?;
            let kind = match verdict {
                "knotted" => VerdictKind::Knotted,
                "unknotted" => VerdictKind::Unknotted,
                other => return Err(err(&format!("unknown verdict '{}'", other))),
            };
            let key = key.trim();
            let hash = if key.len() == 64 && key.bytes().all(|b| b.is_ascii_hexdigit()) {
                key.to_ascii_lowercase()
            } else {
                let code: Vec<&str> = key.split(';').map(str::trim).collect();
                if !code[0].starts_with("CHORD ") {
                    return Err(err("key is neither a hash nor an inline chord code"));
                }
                code_hash(&ChordCode::from_text(&code.join("\n")))
            };
            t.entries.insert(hash, kind);
        }
        Ok(t)
    }
}

pub type PluginFn = Arc<dyn Fn(&AdjointDiagram, &ChordCode) -> Option<VerdictKind> + Send + Sync>;

#[derive(Clone)]
pub struct OracleConfig {
    pub groups: Vec<FiniteGroup>,
    pub table: ClassificationTable,
    pub plugin: Option<(String, PluginFn)>,
    pub group_bound: usize,
}

impl fmt::Debug for OracleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleConfig")
            .field("groups", &self.groups.iter().map(|g| &g.name).collect::<Vec<_>>())
            .field("table_entries", &self.table.len())
            .field("plugin", &self.plugin.as_ref().map(|p| &p.0))
            .finish()
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            groups: vec![
                FiniteGroup::symmetric3(),
                FiniteGroup::dihedral4(),
                FiniteGroup::alternating4(),
            ],
            table: ClassificationTable::default(),
            plugin: None,
            group_bound: DEFAULT_GROUP_BOUND,
        }
    }
}

impl OracleConfig {
    /// No groups and no plugin: only table entries decide.
    pub fn table_only(table: ClassificationTable) -> OracleConfig {
        OracleConfig {
            groups: Vec::new(),
            table,
            plugin: None,
            group_bound: DEFAULT_GROUP_BOUND,
        }
    }
}

pub fn verdict(a: &AdjointDiagram, cfg: &OracleConfig) -> Verdict {
    let code = chord_code(&a.diagram);
    if let Some(kind) = cfg.table.get(&code) {
        return Verdict {
            kind,
            provenance: Provenance::Table,
        };
    }
    let p = presentation_of(a);
    for g in &cfg.groups {
        // groups above the bound are skipped rather than failing the verdict
        if let Ok(count) = count_homs_bounded(&p, g, cfg.group_bound, None) {
            if count > g.order() as u64 {
                return Verdict {
                    kind: VerdictKind::Knotted,
                    provenance: Provenance::HomCount {
                        group: g.name.clone(),
                        count,
                    },
                };
            }
        }
    }
    if let Some((id, f)) = &cfg.plugin {
        if let Some(kind) = f(a, &code) {
            if kind != VerdictKind::Unknown {
                return Verdict {
                    kind,
                    provenance: Provenance::Plugin(id.clone()),
                };
            }
        }
    }
    Verdict {
        kind: VerdictKind::Unknown,
        provenance: Provenance::Undecided,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeProbability {
    pub total: usize,
    pub knotted: usize,
    pub unknotted: usize,
}

impl TypeProbability {
    pub fn vacuous(&self) -> bool {
        self.total == 0
    }

    pub fn lower(&self) -> Rat {
        if self.total == 0 {
            Rat::zero()
        } else {
            Rat::new(self.knotted as i64, self.total as i64)
        }
    }

    pub fn upper(&self) -> Rat {
        if self.total == 0 {
            Rat::one()
        } else {
            Rat::new((self.total - self.unknotted) as i64, self.total as i64)
        }
    }

    pub fn decided(&self) -> bool {
        self.knotted + self.unknotted == self.total
    }
}

impl fmt::Display for TypeProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vacuous() {
            f.write_str("-")
        } else if self.decided() {
            write!(f, "{}", self.lower())
        } else {
            write!(f, "[{},{}]", self.lower(), self.upper())
        }
    }
}

/// The quadruple `(p^I, p^II, p^III, p^IV)` with interval bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnottingProbability {
    pub types: [TypeProbability; 4],
}

impl KnottingProbability {
    pub fn of(t: AdjointType) -> usize {
        t as usize
    }

    pub fn get(&self, t: AdjointType) -> &TypeProbability {
        &self.types[t as usize]
    }
}

impl fmt::Display for KnottingProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.types;
        write!(f, "({}, {}, {}, {})", t[0], t[1], t[2], t[3])
    }
}

/// Verdict for every adjoint of the unreduced chord diagram, in enumeration order.
pub fn adjoint_verdicts(d: &ArcDiagram, cfg: &OracleConfig) -> Vec<(AdjointDiagram, Verdict)> {
    let c = chord_diagram_of(d);
    let adj = enumerate_adjoints(&c, d.crossing_count());
    let verdicts: Vec<Verdict> = adj.par_iter().map(|a| verdict(a, cfg)).collect();
    adj.into_iter().zip(verdicts).collect()
}

pub fn probability_of_diagram(d: &ArcDiagram, cfg: &OracleConfig) -> KnottingProbability {
    let mut types: [TypeProbability; 4] = std::array::from_fn(|_| TypeProbability {
        total: 0,
        knotted: 0,
        unknotted: 0,
    });
    for (a, v) in adjoint_verdicts(d, cfg) {
        let t = &mut types[a.type_tag as usize];
        t.total += 1;
        match v.kind {
            VerdictKind::Knotted => t.knotted += 1,
            VerdictKind::Unknotted => t.unknotted += 1,
            VerdictKind::Unknown => {}
        }
    }
    KnottingProbability { types }
}

pub fn probability_of_arc(arc: &SpatialArc, u: &Direction, cfg: &OracleConfig) -> Result<KnottingProbability, DiagramError> {
    Ok(probability_of_diagram(&diagram_along(arc, u)?, cfg))
}

/// `p(L;u)` and `p(−L;u)` as an unordered pair, stored in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityPair {
    pub pair: [KnottingProbability; 2],
}

impl ProbabilityPair {
    /// Component-wise mean of the interval bounds; `None` for a type that is
    /// vacuous on both sides.
    pub fn average(&self) -> [Option<(Rat, Rat)>; 4] {
        std::array::from_fn(|i| {
            let (a, b) = (&self.pair[0].types[i], &self.pair[1].types[i]);
            if a.vacuous() && b.vacuous() {
                return None;
            }
            let half = Rat::new(1, 2);
            Some((
                &(a.lower() + b.lower()) * &half,
                &(a.upper() + b.upper()) * &half,
            ))
        })
    }
}

pub fn probability_pair(arc: &SpatialArc, u: &Direction, cfg: &OracleConfig) -> Result<ProbabilityPair, DiagramError> {
    let p = probability_of_arc(arc, u, cfg)?;
    let q = probability_of_arc(&reverse_arc(arc), u, cfg)?;
    let mut pair = [p, q];
    pair.sort();
    Ok(ProbabilityPair { pair })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_type() -> GroupPresentation {
        GroupPresentation::new(2, vec![vec![(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]])
    }

    #[test]
    fn builtin_groups() {
        assert_eq!(FiniteGroup::symmetric3().order(), 6);
        assert_eq!(FiniteGroup::dihedral4().order(), 8);
        assert_eq!(FiniteGroup::alternating4().order(), 12);
        assert_eq!(FiniteGroup::by_name("C5").unwrap().order(), 5);
        assert!(FiniteGroup::by_name("Q8").is_none());
    }

    #[test]
    fn table_validation() {
        assert!(FiniteGroup::parse_table("C2", "0 1\n1 0\n").is_ok());
        assert!(FiniteGroup::parse_table("bad", "0 1\n1 1\n").is_err());
        assert!(FiniteGroup::parse_table("bad", "0 1 2\n1 2 0\n").is_err());
        // a Latin square that is not associative
        let quasi = "0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0";
        assert!(matches!(FiniteGroup::parse_table("q", quasi), Err(KnottingError::BadGroup(_))));
    }

    #[test]
    fn hom_counts() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(count_homs(&GroupPresentation::new(1, vec![]), &s3).unwrap(), 6);
        assert_eq!(count_homs(&trefoil_type(), &s3).unwrap(), 12);
        let comm = GroupPresentation::new(2, vec![vec![(0, 1), (1, 1), (0, -1), (1, -1)]]);
        assert_eq!(count_homs(&comm, &s3).unwrap(), 18);
        assert_eq!(count_homs(&trefoil_type(), &FiniteGroup::cyclic(1)).unwrap(), 1);
        let big = FiniteGroup::cyclic(200);
        assert_eq!(
            count_homs(&trefoil_type(), &big),
            Err(KnottingError::GroupTooLarge { order: 200, bound: DEFAULT_GROUP_BOUND })
        );
    }

    #[test]
    fn restricted_counts() {
        // transpositions of S3 are the elements of order 2
        let s3 = FiniteGroup::symmetric3();
        let t: Vec<usize> = (1..6).filter(|&x| s3.mul(x, x) == 0).collect();
        assert_eq!(t.len(), 3);
        // Fox 3-colourings of the trefoil
        assert_eq!(count_homs_bounded(&trefoil_type(), &s3, 120, Some(&t)).unwrap(), 9);
    }

    #[test]
    fn abelian_ranks() {
        assert_eq!(trefoil_type().abelian_rank(), 1);
        assert_eq!(GroupPresentation::new(2, vec![]).abelian_rank(), 2);
        let comm = GroupPresentation::new(2, vec![vec![(0, 1), (1, 1), (0, -1), (1, -1)]]);
        assert_eq!(comm.abelian_rank(), 2);
    }

    #[test]
    fn interval_display() {
        let t = TypeProbability {
            total: 4,
            knotted: 1,
            unknotted: 2,
        };
        assert_eq!(t.to_string(), "[1/4,1/2]");
        let d = TypeProbability {
            total: 2,
            knotted: 2,
            unknotted: 0,
        };
        assert_eq!(d.to_string(), "1");
        let v = TypeProbability {
            total: 0,
            knotted: 0,
            unknotted: 0,
        };
        assert_eq!(v.to_string(), "-");
        assert!(v.lower() <= v.upper());
    }

    #[test]
    fn table_parsing() {
        let code = ChordCode::from_text("CHORD 1 loops=2 chords=1\nstart: 0 end: 1\nloop 0: T0\nloop 1: H0\nchord 0: 0 1");
        let h = code_hash(&code);
        let text = format!(
            "# comment\n{} knotted\nCHORD 1 loops=2 chords=1; start: 0 end: 1; loop 0: T0; loop 1: H0; chord 0: 0 1 unknotted\n",
            h
        );
        let t = ClassificationTable::parse(&text).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&code), Some(VerdictKind::Unknotted));
        assert!(matches!(
            ClassificationTable::parse("abc maybe"),
            Err(KnottingError::BadTable { line: 1, .. })
        ));
    }
}
