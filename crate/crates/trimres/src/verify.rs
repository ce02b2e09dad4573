//! Deterministic verification suites. Each suite runs a seeded battery of
//! instances against a stated invariant and reports one line per case;
//! any mathematical failure aborts the suite with a check error (mapped to
//! a nonzero exit by the CLI).

use crate::complex::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::invsys::{
    annihilator, genset_decomposition, inverse_system, phi_matrix, random_instance,
    tipping_point, CompressedInstance, InverseSystem,
};
use crate::monomial::strand_basis;
use crate::poly::HomogPoly;
use crate::profile::ArtinianProfile;
use crate::realize::realize;
use crate::resolution::{buchsbaum_eisenbud, minimal_free_resolution, resolution_from_gens};
use crate::tor::check_bounds;
use crate::trimming::TrimmingData;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub field: Field,
    pub seed: u64,
    pub s_values: Vec<usize>,
    /// Upper cap on ell; each s runs ell = 1..=min(cap, s+1).
    pub ell_cap: usize,
    pub trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            field: Field::Fp(crate::field::DEFAULT_PRIME),
            seed: 1,
            s_values: vec![3, 4, 5],
            ell_cap: 4,
            trials: 1,
        }
    }
}

impl SuiteOptions {
    fn cases(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for &s in &self.s_values {
            for ell in 1..=self.ell_cap.min(s + 1) {
                for t in 0..self.trials {
                    out.push((s, ell, self.case_seed(s, ell, t)));
                }
            }
        }
        out
    }

    fn case_seed(&self, s: usize, ell: usize, trial: usize) -> u64 {
        self.seed
            .wrapping_add((s as u64) << 24)
            .wrapping_add((ell as u64) << 16)
            .wrapping_add(trial as u64)
    }
}

pub const SUITES: &[&str] = &[
    "tipping",
    "compressed",
    "genset",
    "trim-resolution",
    "gortype",
    "tor-bounds",
    "pfaffian-tables",
    "realizability",
];

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<String>> {
    match name {
        "tipping" => suite_tipping(opts),
        "compressed" => suite_compressed(opts),
        "genset" => suite_genset(opts),
        "trim-resolution" => suite_trim_resolution(opts),
        "gortype" => suite_gortype(opts),
        "tor-bounds" => suite_tor_bounds(opts),
        "pfaffian-tables" => suite_pfaffian_tables(opts),
        "realizability" => suite_realizability(opts),
        other => Err(Error::Invalid(format!(
            "unknown suite `{}` (available: {})",
            other,
            SUITES.join(", ")
        ))),
    }
}

fn instance_for(opts: &SuiteOptions, s: usize, ell: usize, seed: u64) -> Result<CompressedInstance> {
    random_instance(opts.field, s, ell, seed)
}

/// Tipping point of every instance equals s; single generic duals tip at
/// half their degree and satisfy the transpose duality degree by degree.
fn suite_tipping(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for (s, ell, seed) in opts.cases() {
        let inst = instance_for(opts, s, ell, seed)?;
        let tp = tipping_point(&inst.system);
        if tp != s {
            return Err(Error::CheckFailed(format!(
                "tipping point {} != s = {} at (s={}, ell={}, seed={})",
                tp, s, s, ell, seed
            )));
        }
        lines.push(format!("tipping s={} ell={} seed={}: {}", s, ell, seed, tp));
    }
    // Single duals of degree 3..9, cycled for 20 draws.
    let mut rng = ChaCha12Rng::seed_from_u64(opts.seed ^ 0x5ab1e);
    for draw in 0..20 {
        let s = 3 + (draw % 7);
        let mut dual = HomogPoly::zero(opts.field, s);
        for m in strand_basis(s) {
            dual.add_term(m, &opts.field.random_nonzero(&mut rng));
        }
        let n = InverseSystem::new(opts.field, vec![dual])?;
        let tp = tipping_point(&n);
        if tp != s.div_ceil(2) {
            return Err(Error::CheckFailed(format!(
                "single dual of degree {} tips at {}, expected {}",
                s,
                tp,
                s.div_ceil(2)
            )));
        }
        for i in 0..=s {
            let a = phi_matrix(&n, i);
            let b = phi_matrix(&n, s - i);
            if a.mat.transpose() != b.mat {
                return Err(Error::CheckFailed(format!(
                    "transpose duality fails for degree {} at strand {}",
                    s, i
                )));
            }
            let surjective = a.rank() == a.mat.rows;
            let injective = b.rank() == b.mat.cols;
            if surjective != injective {
                return Err(Error::CheckFailed(format!(
                    "surjective/injective duality fails for degree {} at strand {}",
                    s, i
                )));
            }
        }
        lines.push(format!("single dual degree {}: tipping {}", s, tp));
    }
    Ok(lines)
}

/// The top-degree dual defines a compressed ring, and dropping any number
/// of the degree-s duals leaves a compressed ring with the predicted
/// socle.
fn suite_compressed(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for (s, ell, seed) in opts.cases() {
        let inst = instance_for(opts, s, ell, seed)?;
        for drop in 1..=ell {
            let keep = ell - drop;
            let mut gens: Vec<HomogPoly> =
                inst.system.generators[drop..ell].to_vec();
            gens.push(inst.system.generators[ell].clone());
            debug_assert_eq!(gens.len(), keep + 1);
            let sub = InverseSystem::new(opts.field, gens)?;
            let ideal = annihilator(&sub, 2 * s)?;
            let profile = ArtinianProfile::compute(&ideal, 2 * s + 1)?;
            if !profile.compressed {
                return Err(Error::CheckFailed(format!(
                    "dropping {} duals at (s={}, ell={}, seed={}) is not compressed",
                    drop, s, ell, seed
                )));
            }
            let expected_socle: Vec<(usize, usize)> = if keep == 0 {
                vec![(2 * s - 1, 1)]
            } else {
                vec![(s, keep), (2 * s - 1, 1)]
            };
            if profile.socle != expected_socle {
                return Err(Error::CheckFailed(format!(
                    "socle {:?} after dropping {} duals, expected {:?}",
                    profile.socle, drop, expected_socle
                )));
            }
        }
        lines.push(format!(
            "compressed s={} ell={} seed={}: all {} subsets ok",
            s, ell, seed, ell
        ));
    }
    Ok(lines)
}

/// The adapted generating-set identity, with the degree-(s+1) generator
/// count matching the graded Betti number of the Gorenstein quotient.
fn suite_genset(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for (s, ell, seed) in opts.cases() {
        let inst = instance_for(opts, s, ell, seed)?;
        let dec = genset_decomposition(&inst.ideal, &inst.gorenstein, s)?;
        if dec.ell != ell || dec.phis.len() != s + 1 || dec.psis.len() >= s + 1 {
            return Err(Error::CheckFailed(format!(
                "decomposition shape off at (s={}, ell={}, seed={})",
                s, ell, seed
            )));
        }
        let res = minimal_free_resolution(&inst.gorenstein, 2 * s + 1)?;
        let b_expected = res.betti_table().get(1, s as i64 + 1);
        if dec.psis.len() != b_expected {
            return Err(Error::CheckFailed(format!(
                "b = {} but beta_(1,s+1) = {} at (s={}, ell={}, seed={})",
                dec.psis.len(),
                b_expected,
                s,
                ell,
                seed
            )));
        }
        lines.push(format!(
            "genset s={} ell={} seed={}: identity holds, b={}",
            s,
            ell,
            seed,
            dec.psis.len()
        ));
    }
    Ok(lines)
}

/// The mapping cone built on the Gorenstein resolution resolves the
/// instance ideal, and all three Betti routes agree.
fn suite_trim_resolution(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for (s, ell, seed) in opts.cases() {
        let inst = instance_for(opts, s, ell, seed)?;
        let agreed = trim_routes_agree(&inst, s, ell, seed)?;
        lines.push(format!(
            "trim-resolution s={} ell={} seed={}: betti {:?}",
            s, ell, seed, agreed
        ));
    }
    Ok(lines)
}

/// Shared three-route check; returns the agreed totals.
pub fn trim_routes_agree(
    inst: &CompressedInstance,
    s: usize,
    ell: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    let field = inst.field;
    let dec = genset_decomposition(&inst.ideal, &inst.gorenstein, s)?;
    let gens = dec.gorenstein_generators();
    let resolution = resolution_from_gens(field, &gens, 2 * s + 1)?;
    let data = TrimmingData::with_irrelevant(&resolution, &dec.cut_indices())?;
    let formula = data.formula_betti()?;
    let cone = data.trimming_complex()?;
    let bound = inst.ideal.full_strand_degree(2 * s + 1)? as i64;
    cone.check_strand_exactness(bound)?;
    let minimal = cone.minimalized();
    let cone_betti = minimal.betti_table();
    if cone_betti.totals() != formula {
        return Err(Error::CheckFailed(format!(
            "formula {:?} vs cone {:?} at (s={}, ell={}, seed={})",
            formula,
            cone_betti.totals(),
            s,
            ell,
            seed
        )));
    }
    let presented = minimal.presented_ideal()?;
    if !presented.equals_through(&inst.ideal, bound as usize) {
        return Err(Error::CheckFailed(format!(
            "cone presents the wrong ideal at (s={}, ell={}, seed={})",
            s, ell, seed
        )));
    }
    let direct = minimal_free_resolution(&inst.ideal, 2 * s + 1)?;
    if direct.betti_table() != cone_betti {
        return Err(Error::CheckFailed(format!(
            "direct resolution disagrees with cone at (s={}, ell={}, seed={})",
            s, ell, seed
        )));
    }
    Ok(formula)
}

/// Trimming ell of the degree-s Pfaffian generators of the quadratic
/// families produces quotients of type ell + 1.
fn suite_gortype(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for m in 2..=3usize {
        for j in 0..=m {
            let s = 2 * m - j;
            let v = crate::pfaffian::v_matrix(opts.field, m, j)?;
            let resolution = buchsbaum_eisenbud(&v)?;
            let degree_s: Vec<usize> = (0..resolution.modules[1].rank())
                .filter(|&i| resolution.modules[1].twists[i] == s as i64)
                .collect();
            for ell in 1..=opts.ell_cap.min(s + 1) {
                let cut: Vec<usize> = degree_s[degree_s.len() - ell..].to_vec();
                let data = TrimmingData::with_irrelevant(&resolution, &cut)?;
                let formula = data.formula_betti()?;
                let cone_type = data
                    .trimming_complex()?
                    .minimalized()
                    .betti_table()
                    .totals()
                    .get(3)
                    .copied()
                    .unwrap_or(0);
                if formula[3] != ell + 1 || cone_type != ell + 1 {
                    return Err(Error::CheckFailed(format!(
                        "type after trimming {} gens of family (m={}, j={}): formula {}, cone {}, expected {}",
                        ell, m, j, formula[3], cone_type, ell + 1
                    )));
                }
                lines.push(format!(
                    "gortype m={} j={} ell={}: type {}",
                    m,
                    j,
                    ell,
                    ell + 1
                ));
            }
        }
    }
    Ok(lines)
}

/// Pairing-rank bound, conditional equality, and the graded dimension
/// counts on every instance.
fn suite_tor_bounds(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for (s, ell, seed) in opts.cases() {
        let inst = instance_for(opts, s, ell, seed)?;
        let shape = inst
            .profile
            .shape
            .ok_or_else(|| Error::CheckFailed("instance lost its socle shape".into()))?;
        let report = check_bounds(&inst.ideal, &inst.gorenstein, shape, 2 * s + 1)?;
        if !report.pass() {
            return Err(Error::CheckFailed(format!(
                "bounds fail at (s={}, ell={}, seed={}): {:?}",
                s, ell, seed, report
            )));
        }
        lines.push(format!(
            "tor-bounds s={} ell={} seed={}: delta={} lower={}{}",
            s,
            ell,
            seed,
            report.delta_rank,
            report.lower_bound,
            if report.hypothesis_holds {
                " (equality)"
            } else {
                ""
            }
        ));
    }
    Ok(lines)
}

/// Expected graded table of the Pfaffian family member (m, j).
pub fn family_table(m: usize, j: usize) -> BettiTable {
    let mut t = BettiTable::default();
    let lo = (2 * m - j) as i64;
    t.set(0, 0, 1);
    t.set(1, lo, 2 * m + 1 - j);
    t.set(1, lo + 1, j);
    t.set(2, lo + 1, j);
    t.set(2, lo + 2, 2 * m + 1 - j);
    t.set(3, (4 * m - 2 * j + 2) as i64, 1);
    t
}

/// Full graded Betti tables, socle degree, type and compressedness of the
/// skew families, for every m <= 4, j <= m, checked on both resolution
/// routes.
fn suite_pfaffian_tables(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for m in 1..=4usize {
        for j in 0..=m {
            let v = crate::pfaffian::v_matrix(opts.field, m, j)?;
            let be = buchsbaum_eisenbud(&v)?;
            let ideal = v.pfaffian_ideal()?;
            let expected = family_table(m, j);
            if be.betti_table() != expected {
                return Err(Error::CheckFailed(format!(
                    "family complex table off at (m={}, j={}):\n{}",
                    m,
                    j,
                    be.betti_table()
                )));
            }
            let direct = minimal_free_resolution(&ideal, 4 * m + 2)?;
            if direct.betti_table() != expected {
                return Err(Error::CheckFailed(format!(
                    "direct table off at (m={}, j={}):\n{}",
                    m,
                    j,
                    direct.betti_table()
                )));
            }
            let profile = ArtinianProfile::compute(&ideal, 4 * m + 2)?;
            if profile.top_socle_degree != 4 * m - 2 * j - 1
                || profile.ring_type != 1
                || !profile.compressed
            {
                return Err(Error::CheckFailed(format!(
                    "profile off at (m={}, j={}): socle degree {}, type {}, compressed {}",
                    m, j, profile.top_socle_degree, profile.ring_type, profile.compressed
                )));
            }
            lines.push(format!(
                "pfaffian-tables m={} j={}: table ok, socle degree {}",
                m,
                j,
                profile.top_socle_degree
            ));
        }
    }
    Ok(lines)
}

pub const REALIZABILITY_PAIRS: &[(usize, usize)] =
    &[(2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (5, 3)];

fn suite_realizability(opts: &SuiteOptions) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for &(r, n) in REALIZABILITY_PAIRS {
        let out = realize(opts.field, r, n)?;
        lines.push(format!(
            "realizability r={} n={}: mu={} type={} class={}",
            r, n, out.report.mu, out.report.ring_type, out.report.verdict
        ));
    }
    Ok(lines)
}

/// Extract the inverse system of an ideal and re-annihilate: a cheap
/// roundtrip exercised by the CLI and tests.
pub fn roundtrip_inverse_system(ideal: &Ideal, cap: usize) -> Result<bool> {
    let system = inverse_system(ideal, cap)?;
    let back = annihilator(&system, system.max_degree() + 1)?;
    let bound = ideal.full_strand_degree(cap)?;
    Ok(ideal.equals_through(&back, bound))
}

/// Draw a random homogeneous dual of the given degree (all coefficients
/// nonzero), used by a few suites and tests.
pub fn random_dense_dual(field: Field, degree: usize, rng: &mut impl Rng) -> HomogPoly {
    let mut out = HomogPoly::zero(field, degree);
    for m in strand_basis(degree) {
        out.add_term(m, &field.random_nonzero(rng));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_opts() -> SuiteOptions {
        SuiteOptions {
            s_values: vec![3],
            ell_cap: 2,
            trials: 1,
            ..Default::default()
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", &quick_opts()).is_err());
    }

    #[test]
    fn tipping_suite_smoke() {
        let lines = run_suite("tipping", &quick_opts()).unwrap();
        assert!(lines.len() > 20);
    }

    #[test]
    fn compressed_suite_smoke() {
        run_suite("compressed", &quick_opts()).unwrap();
    }

    #[test]
    fn genset_suite_smoke() {
        run_suite("genset", &quick_opts()).unwrap();
    }

    #[test]
    fn trim_resolution_suite_smoke() {
        run_suite("trim-resolution", &quick_opts()).unwrap();
    }

    #[test]
    fn roundtrip_helper() {
        let f = Field::Fp(32003);
        let ideal = Ideal::new(
            f,
            vec![
                crate::poly::parse_poly(f, "x^2").unwrap(),
                crate::poly::parse_poly(f, "y^3").unwrap(),
                crate::poly::parse_poly(f, "z").unwrap(),
            ],
        );
        assert!(roundtrip_inverse_system(&ideal, 8).unwrap());
    }
}
