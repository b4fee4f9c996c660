//! Exhaustive and seeded-sample checks of the Clifford pairing `Φ`.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use spincent_core::blade::Blade;
use spincent_core::tensor::{phi_degrees, phi_parity_check, phi_surjectivity_check};

use crate::error::Result;
use crate::report::ReportRow;

/// Every blade of `Cl_r` in a degree covered by the checks.
pub fn phi_blades(r: usize) -> Result<Vec<Blade>> {
    let mut out = Vec::new();
    for deg in phi_degrees(r)? {
        out.extend(Blade::of_grade(r, deg)?);
    }
    Ok(out)
}

/// Up to `per_degree` blades of each degree, drawn with a seeded RNG.
pub fn sample_blades(r: usize, per_degree: usize, seed: u64) -> Result<Vec<Blade>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for deg in phi_degrees(r)? {
        let all = Blade::of_grade(r, deg)?;
        out.extend(all.choose_multiple(&mut rng, per_degree).copied());
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiOutcome {
    pub r: usize,
    pub surjective: bool,
    pub parity: bool,
    pub blades_checked: usize,
    pub sampled: bool,
}

/// `sample = None` checks every blade; `Some((k, seed))` checks `k` per degree.
pub fn phi_check(r: usize, sample: Option<(usize, u64)>) -> Result<PhiOutcome> {
    let blades = match sample {
        None => phi_blades(r)?,
        Some((k, seed)) => sample_blades(r, k, seed)?,
    };
    Ok(PhiOutcome {
        r,
        surjective: phi_surjectivity_check(r)?,
        parity: phi_parity_check(r, &blades)?,
        blades_checked: blades.len(),
        sampled: sample.is_some(),
    })
}

/// The standard plan: full bases for `r = 2, 7`, three blades per degree for
/// `r = 9, 10`.
pub fn phi_plan(r_max: Option<usize>, seed: u64) -> Vec<(usize, Option<(usize, u64)>)> {
    [(2, None), (7, None), (9, Some((3, seed))), (10, Some((3, seed)))]
        .into_iter()
        .filter(|(r, _)| r_max.is_none_or(|m| *r <= m))
        .collect()
}

pub fn phi_row(out: &PhiOutcome) -> ReportRow {
    ReportRow {
        suite: "phi".into(),
        case: format!("r={}", out.r),
        source: format!("phi r≡{}", out.r % 8),
        expected_type: "surjective, parities".into(),
        expected_dim: None,
        computed_type: format!(
            "{}{}",
            if out.surjective { "surjective" } else { "not surjective" },
            if out.parity { ", parities" } else { ", parity violation" }
        ),
        computed_dim: None,
        center: None,
        derived: None,
        killing: None,
        detail: format!("{} blades{}", out.blades_checked, if out.sampled { " (sampled)" } else { "" }),
        pass: out.surjective && out.parity,
    }
}
