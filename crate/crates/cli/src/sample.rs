//! Seeded direction sampling.

use std::collections::{BTreeMap, BTreeSet};

use arcknot_core::arc::SpatialArc;
use arcknot_core::diagram::diagram_of;
use arcknot_core::geom::{Direction, Vec3};
use arcknot_core::trace::{sign_vector, trace_circles, RegionFingerprint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;

pub struct SampleReport {
    samples: usize,
    rejected: usize,
    circles: usize,
    cones: usize,
    groups: usize,
    codes: usize,
    split_groups: usize,
    bound: usize,
}

impl SampleReport {
    pub fn text(&self) -> String {
        format!(
            "samples: {}\nrejected on walls: {}\ncircles: {}\ncones: {}\nfingerprint groups: {}\ngroups with more than one code: {}\ndistinct codes: {}\nbound m^2-m+2: {}\nwithin bound: {}",
            self.samples,
            self.rejected,
            self.circles,
            self.cones,
            self.groups,
            self.split_groups,
            self.codes,
            self.bound,
            if self.codes <= self.bound { "yes" } else { "no" }
        )
    }

    pub fn json(&self) -> Value {
        json!({
            "samples": self.samples,
            "rejected": self.rejected,
            "circles": self.circles,
            "cones": self.cones,
            "fingerprint_groups": self.groups,
            "split_groups": self.split_groups,
            "distinct_codes": self.codes,
            "bound": self.bound,
            "within_bound": self.codes <= self.bound,
        })
    }
}

/// Draw `count` integer directions off every wall, in sample order.
fn draw(arc: &SpatialArc, count: usize, seed: u64, height: i64) -> (Vec<(Direction, RegionFingerprint)>, usize) {
    let ts = trace_circles(arc);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let v = Vec3::ints(
            rng.gen_range(-height..=height),
            rng.gen_range(-height..=height),
            rng.gen_range(-height..=height),
        );
        let Ok(u) = Direction::new(&v) else { continue };
        match sign_vector(&ts, &u) {
            Ok(fp) => out.push((u, fp)),
            Err(_) => rejected += 1,
        }
    }
    (out, rejected)
}

pub fn run(arc: &SpatialArc, count: usize, seed: u64, height: i64) -> Result<SampleReport, CliError> {
    let ts = trace_circles(arc);
    let (dirs, rejected) = draw(arc, count, seed, height);
    let codes: Vec<String> = dirs
        .par_iter()
        .map(|(u, _)| diagram_of(arc, u).map(|c| c.into_string()))
        .collect::<Result<_, _>>()?;
    let mut groups: BTreeMap<&RegionFingerprint, BTreeSet<&str>> = BTreeMap::new();
    for ((_, fp), c) in dirs.iter().zip(&codes) {
        groups.entry(fp).or_default().insert(c);
    }
    let distinct: BTreeSet<&String> = codes.iter().collect();
    Ok(SampleReport {
        samples: count,
        rejected,
        circles: ts.circles.len(),
        cones: ts.cones.len(),
        groups: groups.len(),
        codes: distinct.len(),
        split_groups: groups.values().filter(|c| c.len() > 1).count(),
        bound: ts.circle_region_bound(),
    })
}
