//! Univariate polynomials over the rationals with Sturm root counting.

use crate::geom::Rat;

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rat::from_int(i as i64))
                .collect(),
        )
    }

    /// Remainder of division by a nonzero `d`.
    pub fn rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let q = &r[k] / &lead;
            if !q.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    let idx = k - dd + i;
                    r[idx] = &r[idx] - &(&q * c);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// Divide out the largest power of `t` so that the constant term is nonzero.
    pub fn strip_zero_root(&self) -> Poly {
        let k = self.0.iter().take_while(|c| c.is_zero()).count();
        Poly(self.0[k..].to_vec())
    }

    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            seq.push(r);
        }
        seq.pop();
        seq
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    /// Neither endpoint may be a root.
    pub fn roots_between(&self, a: &Rat, b: &Rat) -> usize {
        let seq = self.sturm_sequence();
        let v = |x: &Rat| sign_changes(seq.iter().map(|p| p.eval(x).signum()));
        v(a).saturating_sub(v(b))
    }

    /// Whether the polynomial vanishes somewhere in `(0, x]`, ignoring a
    /// root at zero. `x` must be positive.
    pub fn has_root_in_unit_gap(&self, x: &Rat) -> bool {
        GapTester::new(self).has_root_in(x)
    }
}

/// Answers repeated `(0, x]` root queries for one polynomial with a single
/// Sturm sequence.
#[derive(Clone, Debug)]
pub struct GapTester {
    seq: Vec<Poly>,
    changes_at_zero: usize,
}

impl GapTester {
    pub fn new(p: &Poly) -> GapTester {
        let p = p.strip_zero_root();
        if p.degree().unwrap_or(0) == 0 {
            return GapTester {
                seq: Vec::new(),
                changes_at_zero: 0,
            };
        }
        let seq = p.sturm_sequence();
        let changes_at_zero = sign_changes(seq.iter().map(|q| q.coeffs().first().map_or(0, |c| c.signum())));
        GapTester { seq, changes_at_zero }
    }

    pub fn has_root_in(&self, x: &Rat) -> bool {
        if self.seq.is_empty() {
            return false;
        }
        if self.seq[0].eval(x).is_zero() {
            return true;
        }
        let v = sign_changes(self.seq.iter().map(|q| q.eval(x).signum()));
        self.changes_at_zero > v
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}
