//! Iterated trimming: split off free rank-1 summands of F_1 in a minimal
//! resolution, lift the stripped rows of d_2 through resolutions of the
//! scaling ideals, and assemble the mapping cone that resolves the
//! trimmed ideal. The total Betti numbers also come out of a closed
//! formula in the ranks of the lifted maps over k, giving a second route
//! that every construction is checked against.

use crate::complex::{mapping_cone, ChainComplex, ComplexMorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedFreeModule, GradedMap};
use crate::ideal::Ideal;
use crate::poly::HomogPoly;

/// The split-and-lift package: a minimal resolution F of R/I, chosen free
/// summands of F_1, scaling ideals a_i with resolutions G^i, and the
/// lifted maps q^i_k: F_{k+1} -> G^i_k(-t_i) making the trimming diagram
/// commute.
pub struct TrimmingData {
    pub field: Field,
    pub resolution: ChainComplex,
    /// Indices of the split generators within F_1.
    pub split: Vec<usize>,
    /// Twists of the split generators (degrees of the cut ideal gens).
    pub split_twists: Vec<i64>,
    pub scalings: Vec<Ideal>,
    pub scaling_resolutions: Vec<ChainComplex>,
    /// lifts[i][k-1] = q^i_k : F_{k+1} -> G^i_k(-t_i).
    pub lifts: Vec<Vec<GradedMap>>,
}

impl TrimmingData {
    /// Build the package with every scaling ideal equal to the irrelevant
    /// ideal, resolved by the Koszul complex.
    pub fn with_irrelevant(resolution: &ChainComplex, split: &[usize]) -> Result<Self> {
        let field = resolution.field;
        let scalings = vec![Ideal::irrelevant(field); split.len()];
        let gs = vec![ChainComplex::koszul(field); split.len()];
        TrimmingData::new(resolution, split, scalings, gs)
    }

    pub fn new(
        resolution: &ChainComplex,
        split: &[usize],
        scalings: Vec<Ideal>,
        scaling_resolutions: Vec<ChainComplex>,
    ) -> Result<Self> {
        let field = resolution.field;
        if resolution.modules[0].twists != vec![0] {
            return Err(Error::Invalid(
                "trimming expects a resolution of a cyclic quotient".into(),
            ));
        }
        let rank1 = resolution.modules[1].rank();
        let mut seen = vec![false; rank1];
        for &i in split {
            if i >= rank1 || seen[i] {
                return Err(Error::Invalid(format!(
                    "split index {} out of range or repeated",
                    i
                )));
            }
            seen[i] = true;
        }
        if scalings.len() != split.len() || scaling_resolutions.len() != split.len() {
            return Err(Error::Invalid(
                "one scaling ideal and resolution per split index".into(),
            ));
        }
        let split_twists: Vec<i64> = split
            .iter()
            .map(|&i| resolution.modules[1].twists[i])
            .collect();
        // Containment: every stripped row entry of d_2 must lie in its
        // scaling ideal, otherwise no lift can exist.
        if resolution.len() >= 2 {
            let d2 = &resolution.diffs[1];
            for (pos, &row) in split.iter().enumerate() {
                for entry in &d2.entries[row] {
                    if !entry.is_zero() && !scalings[pos].contains(entry) {
                        return Err(Error::Inconsistent(format!(
                            "row {} of the presentation is not contained in scaling ideal {}",
                            row, pos
                        )));
                    }
                }
            }
        }
        let mut data = TrimmingData {
            field,
            resolution: resolution.clone(),
            split: split.to_vec(),
            split_twists,
            scalings,
            scaling_resolutions,
            lifts: Vec::new(),
        };
        data.compute_lifts()?;
        Ok(data)
    }

    /// q^i_1 solves m^i_1 ∘ q = (row of d_2 at the split index); higher
    /// q^i_k solve m^i_k ∘ q = q^i_{k-1} ∘ d_{k+1}. Any exact solution is
    /// accepted; the commuting squares are re-verified after solving.
    fn compute_lifts(&mut self) -> Result<()> {
        let f = &self.resolution;
        let mut lifts = Vec::with_capacity(self.split.len());
        for (pos, &row) in self.split.iter().enumerate() {
            let t = self.split_twists[pos];
            let g = &self.scaling_resolutions[pos];
            let mut qs: Vec<GradedMap> = Vec::new();
            for k in 1..f.len() {
                // Source F_{k+1}, target G_k(-t).
                let source = f.modules[k + 1].clone();
                let target = g.modules.get(k).cloned().unwrap_or_default_module();
                let g_diff = g.diffs.get(k - 1).map(|d| d.twisted(t));
                let mut entries: Vec<Vec<HomogPoly>> = vec![Vec::new(); target.rank()];
                for col in 0..source.rank() {
                    let col_degree = source.twists[col];
                    let rhs: Vec<HomogPoly> = if k == 1 {
                        vec![f.diffs[1].entries[row][col].clone()]
                    } else {
                        let prev = &qs[k - 2];
                        let dk1 = &f.diffs[k];
                        let column: Vec<HomogPoly> = (0..dk1.target.rank())
                            .map(|r| dk1.entries[r][col].clone())
                            .collect();
                        prev.apply(&column, col_degree)
                    };
                    let solution = match &g_diff {
                        Some(m) => m.solve_preimage(&rhs, col_degree).ok_or_else(|| {
                            Error::Inconsistent(format!(
                                "no lift in homological degree {} for split {}",
                                k, pos
                            ))
                        })?,
                        None => {
                            if rhs.iter().any(|e| !e.is_zero()) {
                                return Err(Error::Inconsistent(format!(
                                    "scaling resolution too short at step {}",
                                    k
                                )));
                            }
                            vec![]
                        }
                    };
                    for (r, e) in solution.into_iter().enumerate() {
                        entries[r].push(e);
                    }
                }
                let target_twisted = target.twisted(t);
                let q = GradedMap::new(self.field, source, target_twisted, entries)?;
                qs.push(q);
            }
            // Verify the defining squares symbolically.
            for k in 1..f.len() {
                let lhs = self.scaling_resolutions[pos]
                    .diffs
                    .get(k - 1)
                    .map(|d| d.twisted(t).compose(&qs[k - 1]));
                let rhs: GradedMap = if k == 1 {
                    let d2 = &f.diffs[1];
                    let row_map = d2.select_rows(&[row]);
                    GradedMap {
                        field: self.field,
                        source: row_map.source.clone(),
                        // The stripped row lands in R(-t) = G_0(-t).
                        target: GradedFreeModule::free_rank_one(t),
                        entries: row_map.entries,
                    }
                } else {
                    qs[k - 2].compose(&f.diffs[k])
                };
                if let Some(lhs) = lhs {
                    let ok = lhs
                        .entries
                        .iter()
                        .zip(rhs.entries.iter())
                        .all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| x.sub(y).is_zero()));
                    if !ok {
                        return Err(Error::Inconsistent(format!(
                            "lift square fails at homological degree {}",
                            k
                        )));
                    }
                }
            }
            lifts.push(qs);
        }
        self.lifts = lifts;
        Ok(())
    }

    fn kept_indices(&self) -> Vec<usize> {
        (0..self.resolution.modules[1].rank())
            .filter(|i| !self.split.contains(i))
            .collect()
    }

    /// Generators of the trimmed ideal: the kept entries of d_1 and the
    /// scaling-ideal multiples of the split ones.
    pub fn trimmed_ideal(&self) -> Ideal {
        let d1 = &self.resolution.diffs[0];
        let mut gens: Vec<HomogPoly> = self
            .kept_indices()
            .into_iter()
            .map(|i| d1.entries[0][i].clone())
            .collect();
        for (pos, &i) in self.split.iter().enumerate() {
            gens.extend(self.scalings[pos].scaled_by(&d1.entries[0][i]));
        }
        Ideal::new(self.field, gens)
    }

    /// The mapping cone resolving the trimmed quotient: top row the
    /// resolution with its split rows stripped, bottom row the twisted
    /// scaling resolutions over R, connected by d_1 and the lifts.
    pub fn trimming_complex(&self) -> Result<ChainComplex> {
        let f = &self.resolution;
        let field = self.field;
        let kept = self.kept_indices();
        // Top: F_1' <- F_2 <- ... (d_2 rows restricted; higher d's as is).
        let mut top_modules = vec![GradedFreeModule::new(
            kept.iter().map(|&i| f.modules[1].twists[i]).collect(),
        )];
        for k in 2..=f.len() {
            top_modules.push(f.modules[k].clone());
        }
        let mut top_diffs = Vec::new();
        if f.len() >= 2 {
            top_diffs.push(f.diffs[1].select_rows(&kept));
            for k in 2..f.len() {
                top_diffs.push(f.diffs[k].clone());
            }
        }
        let top = ChainComplex::new(field, top_modules, top_diffs)?;
        // Bottom: R <- ⊕_i G^i_1(-t_i) <- ⊕_i G^i_2(-t_i) <- ...
        let glen = self
            .scaling_resolutions
            .iter()
            .map(|g| g.len())
            .max()
            .unwrap_or(0);
        let mut bottom_modules = vec![GradedFreeModule::free_rank_one(0)];
        for k in 1..=glen {
            let mut m = GradedFreeModule::zero();
            for (pos, g) in self.scaling_resolutions.iter().enumerate() {
                if k <= g.len() {
                    m = m.direct_sum(&g.modules[k].twisted(self.split_twists[pos]));
                }
            }
            bottom_modules.push(m);
        }
        let mut bottom_diffs = Vec::new();
        if glen >= 1 {
            // Augmentation: -m^i_1(-) · d_1(e_0^i), one block row.
            let d1 = &self.resolution.diffs[0];
            let mut entries = vec![Vec::new()];
            for (pos, g) in self.scaling_resolutions.iter().enumerate() {
                let phi = &d1.entries[0][self.split[pos]];
                for e in &g.diffs[0].entries[0] {
                    entries[0].push(e.mul(phi).neg());
                }
            }
            bottom_diffs.push(GradedMap::new(
                field,
                bottom_modules[1].clone(),
                bottom_modules[0].clone(),
                entries,
            )?);
            for k in 2..=glen {
                let mut block: Option<GradedMap> = None;
                for (pos, g) in self.scaling_resolutions.iter().enumerate() {
                    if k > g.len() {
                        continue;
                    }
                    let piece = g.diffs[k - 1].twisted(self.split_twists[pos]);
                    block = Some(match block {
                        None => piece,
                        Some(b) => b.direct_sum(&piece),
                    });
                }
                bottom_diffs.push(block.expect("glen bounds the block count"));
            }
        }
        let bottom = ChainComplex::new(field, bottom_modules, bottom_diffs)?;
        // Morphism: d_1 restricted to the kept summands, then the stacked
        // lifts.
        let mut maps = vec![self.resolution.diffs[0].select_columns(&kept)];
        for k in 1..f.len() {
            if k > bottom.len() {
                break;
            }
            let mut stacked: Option<GradedMap> = None;
            for qs in &self.lifts {
                let q = qs[k - 1].clone();
                stacked = Some(match stacked {
                    None => q,
                    Some(s) => s.stack(&q),
                });
            }
            let stacked = match stacked {
                Some(s) => s,
                None => break,
            };
            // Summands missing from shorter scaling resolutions were
            // skipped in the bottom module; shapes must agree.
            if stacked.target != bottom.modules[k] {
                return Err(Error::Graded(
                    "scaling resolutions of unequal length are not supported".into(),
                ));
            }
            maps.push(stacked);
        }
        let morphism = ComplexMorphism::new(top, bottom, maps)?;
        let cone = mapping_cone(&morphism);
        debug_assert!(cone.verify());
        Ok(cone)
    }

    /// Total Betti numbers of the trimmed quotient by the rank formula:
    /// b_1 = rank F_1 - m + Σ μ(a_i) - rank(q_1 ⊗ k), and for i >= 2
    /// b_i = rank F_i + Σ rank G^j_i - rank(q_i ⊗ k) - rank(q_{i-1} ⊗ k).
    /// Requires minimal F and G^j.
    pub fn formula_betti(&self) -> Result<Vec<usize>> {
        if self.resolution.diffs.iter().any(|d| d.has_unit_entry()) {
            return Err(Error::Invalid(
                "rank formula needs a minimal resolution".into(),
            ));
        }
        for g in &self.scaling_resolutions {
            if g.diffs.iter().any(|d| d.has_unit_entry()) {
                return Err(Error::Invalid(
                    "rank formula needs minimal scaling resolutions".into(),
                ));
            }
        }
        let f = &self.resolution;
        let len = usize::max(
            f.len(),
            self.scaling_resolutions
                .iter()
                .map(|g| g.len())
                .max()
                .unwrap_or(0),
        );
        // rank(q_k ⊗ k) of the stacked lift, 1-indexed by k.
        let mut qrank = vec![0usize; len + 2];
        for k in 1..f.len() {
            let mut stacked: Option<GradedMap> = None;
            for qs in &self.lifts {
                let q = qs[k - 1].clone();
                stacked = Some(match stacked {
                    None => q,
                    Some(s) => s.stack(&q),
                });
            }
            if let Some(s) = stacked {
                qrank[k] = s.scalar_part().rank();
            }
        }
        let rank_f = |i: usize| -> usize {
            if i <= f.len() {
                f.modules[i].rank()
            } else {
                0
            }
        };
        let rank_g = |i: usize| -> usize {
            self.scaling_resolutions
                .iter()
                .map(|g| if i <= g.len() { g.modules[i].rank() } else { 0 })
                .sum()
        };
        let mut betti = vec![0usize; len + 1];
        betti[0] = 1;
        if len >= 1 {
            let mu_scalings: usize = self.scalings.iter().map(|a| a.mu()).sum();
            betti[1] = rank_f(1) - self.split.len() + mu_scalings - qrank[1];
        }
        for (i, b) in betti.iter_mut().enumerate().skip(2) {
            *b = rank_f(i) + rank_g(i) - qrank[i] - qrank[i - 1];
        }
        Ok(betti)
    }
}

trait OrDefaultModule {
    fn unwrap_or_default_module(self) -> GradedFreeModule;
}

impl OrDefaultModule for Option<GradedFreeModule> {
    fn unwrap_or_default_module(self) -> GradedFreeModule {
        self.unwrap_or_else(GradedFreeModule::zero)
    }
}

/// kept generators + Σ a_i · (cut generator i), as an ideal. The index
/// lists refer to positions in `gens` and must partition it.
pub fn trim_ideal(
    field: Field,
    gens: &[HomogPoly],
    cut: &[usize],
    scalings: &[Ideal],
) -> Result<Ideal> {
    if scalings.len() != cut.len() {
        return Err(Error::Invalid("one scaling ideal per cut index".into()));
    }
    let mut seen = vec![false; gens.len()];
    for &i in cut {
        if i >= gens.len() || seen[i] {
            return Err(Error::Invalid(format!(
                "cut index {} out of range or repeated",
                i
            )));
        }
        seen[i] = true;
    }
    let mut out: Vec<HomogPoly> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if !seen[i] {
            out.push(g.clone());
        }
    }
    for (pos, &i) in cut.iter().enumerate() {
        out.extend(scalings[pos].scaled_by(&gens[i]));
    }
    Ok(Ideal::new(field, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::resolution::minimal_free_resolution;

    const F: Field = Field::Fp(32003);

    fn p(s: &str) -> HomogPoly {
        parse_poly(F, s).unwrap()
    }

    #[test]
    fn trim_last_variable_from_koszul() {
        // The worked micro-example: split the z generator, scale by the
        // irrelevant ideal. Lift ranks over k are 2 and 1, the trimmed
        // ideal is (x, y, z^2), and both Betti routes give (1, 3, 3, 1).
        let koszul = ChainComplex::koszul(F);
        let data = TrimmingData::with_irrelevant(&koszul, &[2]).unwrap();
        assert_eq!(data.lifts[0][0].scalar_part().rank(), 2);
        assert_eq!(data.lifts[0][1].scalar_part().rank(), 1);

        let trimmed = data.trimmed_ideal();
        let expect = Ideal::new(F, vec![p("x"), p("y"), p("z^2")]);
        assert!(trimmed.equals_through(&expect, 4));
        assert_eq!(trimmed.mu(), 3);

        let formula = data.formula_betti().unwrap();
        assert_eq!(formula, vec![1, 3, 3, 1]);

        let cone = data.trimming_complex().unwrap();
        assert!(cone.verify());
        let minimal = cone.minimalized();
        assert_eq!(minimal.betti_table().totals(), vec![1, 3, 3, 1]);

        // The cone presents the trimmed ideal.
        let presented = cone.presented_ideal().unwrap();
        assert!(presented.equals_through(&expect, 5));

        // And the direct resolution of (x, y, z^2) agrees.
        let direct = minimal_free_resolution(&expect, 8).unwrap();
        assert_eq!(direct.betti_table(), minimal.betti_table());
    }

    #[test]
    fn zero_splits_return_resolution() {
        let koszul = ChainComplex::koszul(F);
        let data = TrimmingData::with_irrelevant(&koszul, &[]).unwrap();
        let cone = data.trimming_complex().unwrap();
        assert_eq!(cone.betti_table(), koszul.betti_table());
        assert_eq!(data.formula_betti().unwrap(), vec![1, 3, 3, 1]);
        let trimmed = data.trimmed_ideal();
        assert!(trimmed.equals_through(&Ideal::irrelevant(F), 3));
    }

    #[test]
    fn split_everything() {
        // Splitting all of F_1 gives J = Σ a_i K_0^i = R_+ · (x, y, z) =
        // the square of the irrelevant ideal.
        let koszul = ChainComplex::koszul(F);
        let data = TrimmingData::with_irrelevant(&koszul, &[0, 1, 2]).unwrap();
        let trimmed = data.trimmed_ideal();
        let expect = Ideal::new(
            F,
            vec![p("x^2"), p("x*y"), p("x*z"), p("y^2"), p("y*z"), p("z^2")],
        );
        assert!(trimmed.equals_through(&expect, 4));
        let cone = data.trimming_complex().unwrap();
        let minimal = cone.minimalized();
        let direct = minimal_free_resolution(&expect, 8).unwrap();
        assert_eq!(minimal.betti_table(), direct.betti_table());
        assert_eq!(
            data.formula_betti().unwrap(),
            direct.betti_table().totals()
        );
    }

    #[test]
    fn trim_a_principal_ideal() {
        // Length-1 input resolution: R <- R(-1) presenting (x). Splitting
        // its only generator leaves an empty top row and a zero stripped
        // presentation, so all lifts vanish and the cone is the shifted
        // Koszul complex resolving R/(x^2, xy, xz).
        let f0 = GradedFreeModule::free_rank_one(0);
        let f1 = GradedFreeModule::free_rank_one(1);
        let d1 = GradedMap::new(F, f1.clone(), f0.clone(), vec![vec![p("x")]]).unwrap();
        let c = ChainComplex::new(F, vec![f0, f1], vec![d1]).unwrap();
        let data = TrimmingData::with_irrelevant(&c, &[0]).unwrap();
        let trimmed = data.trimmed_ideal();
        let expect = Ideal::new(F, vec![p("x^2"), p("x*y"), p("x*z")]);
        assert!(trimmed.equals_through(&expect, 5));
        assert_eq!(data.formula_betti().unwrap(), vec![1, 3, 3, 1]);
        let cone = data.trimming_complex().unwrap().minimalized();
        assert_eq!(cone.betti_table().totals(), vec![1, 3, 3, 1]);
        let presented = cone.presented_ideal().unwrap();
        assert!(presented.equals_through(&expect, 5));
    }

    #[test]
    fn trim_ideal_assembly() {
        let gens = vec![p("x"), p("y"), p("z")];
        let trimmed = trim_ideal(F, &gens, &[2], &[Ideal::irrelevant(F)]).unwrap();
        let expect = Ideal::new(F, vec![p("x"), p("y"), p("z^2")]);
        assert!(trimmed.equals_through(&expect, 4));
        // Empty cut returns the original.
        let same = trim_ideal(F, &gens, &[], &[]).unwrap();
        assert!(same.equals_through(&Ideal::irrelevant(F), 3));
        assert!(trim_ideal(F, &gens, &[5], &[Ideal::irrelevant(F)]).is_err());
    }
}
