//! Chain complexes of graded free modules: verification, Koszul complexes,
//! mapping cones, minimalization, and Betti tables.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedFreeModule, GradedMap};
use crate::ideal::Ideal;
use crate::poly::HomogPoly;
use std::collections::BTreeMap;
use std::fmt;

/// F_0 <- F_1 <- ... <- F_n with differentials diffs[k]: F_{k+1} -> F_k.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub field: Field,
    pub modules: Vec<GradedFreeModule>,
    pub diffs: Vec<GradedMap>,
}

impl ChainComplex {
    /// Build without checking d∘d = 0 (adjacency is still enforced).
    pub fn new_unchecked(
        field: Field,
        modules: Vec<GradedFreeModule>,
        diffs: Vec<GradedMap>,
    ) -> Result<Self> {
        if diffs.len() + 1 != modules.len() {
            return Err(Error::Graded(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source != modules[k + 1] || d.target != modules[k] {
                return Err(Error::Graded(format!(
                    "differential {} does not match adjacent modules",
                    k + 1
                )));
            }
        }
        Ok(ChainComplex {
            field,
            modules,
            diffs,
        })
    }

    pub fn new(field: Field, modules: Vec<GradedFreeModule>, diffs: Vec<GradedMap>) -> Result<Self> {
        let c = Self::new_unchecked(field, modules, diffs)?;
        if !c.verify() {
            return Err(Error::Graded("d∘d != 0".into()));
        }
        Ok(c)
    }

    /// True when all consecutive composites vanish identically.
    pub fn verify(&self) -> bool {
        self.diffs
            .windows(2)
            .all(|w| w[0].compose(&w[1]).is_zero())
    }

    /// Homological length (index of the last module).
    pub fn len(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Koszul complex on three homogeneous elements.
    pub fn koszul_on(field: Field, f: &[HomogPoly; 3]) -> ChainComplex {
        let d: Vec<i64> = f.iter().map(|g| g.degree as i64).collect();
        let f0 = GradedFreeModule::free_rank_one(0);
        let f1 = GradedFreeModule::new(d.clone());
        let f2 = GradedFreeModule::new(vec![d[0] + d[1], d[0] + d[2], d[1] + d[2]]);
        let f3 = GradedFreeModule::free_rank_one(d[0] + d[1] + d[2]);
        let z = |deg: i64| HomogPoly::zero(field, deg.max(0) as usize);
        let d1 = GradedMap::new(field, f1.clone(), f0.clone(), vec![f.to_vec()]).unwrap();
        let d2 = GradedMap::new(
            field,
            f2.clone(),
            f1.clone(),
            vec![
                vec![f[1].neg(), f[2].neg(), z(0)],
                vec![f[0].clone(), z(d[2] - d[1] + d[0]), f[2].neg()],
                vec![z(0), f[0].clone(), f[1].clone()],
            ],
        )
        .unwrap();
        let d3 = GradedMap::new(
            field,
            f3.clone(),
            f2.clone(),
            vec![vec![f[2].clone()], vec![f[1].neg()], vec![f[0].clone()]],
        )
        .unwrap();
        ChainComplex::new(field, vec![f0, f1, f2, f3], vec![d1, d2, d3])
            .expect("Koszul complex closes")
    }

    /// Koszul complex on the variables, resolving k = R/(x,y,z).
    pub fn koszul(field: Field) -> ChainComplex {
        let f = [
            HomogPoly::var(field, 0),
            HomogPoly::var(field, 1),
            HomogPoly::var(field, 2),
        ];
        Self::koszul_on(field, &f)
    }

    fn module_at(&self, k: isize) -> GradedFreeModule {
        if k < 0 || k as usize >= self.modules.len() {
            GradedFreeModule::zero()
        } else {
            self.modules[k as usize].clone()
        }
    }

    fn diff_at(&self, k: isize) -> GradedMap {
        // diffs[k-1]: modules[k] -> modules[k-1], as a zero map when absent.
        if k >= 1 && (k as usize) < self.modules.len() {
            self.diffs[k as usize - 1].clone()
        } else {
            GradedMap::zero(self.field, self.module_at(k), self.module_at(k - 1))
        }
    }

    /// The ideal presented by the complex: the image of d_1 in F_0 = R.
    pub fn presented_ideal(&self) -> Result<Ideal> {
        if self.modules[0].twists != vec![0] {
            return Err(Error::Graded(
                "complex does not present a cyclic quotient of R".into(),
            ));
        }
        Ok(Ideal::new(self.field, self.diffs[0].entries[0].clone()))
    }

    /// Strand-rank exactness in homological degrees >= 1, for every
    /// internal degree <= bound. This is the working notion of "is a
    /// resolution" for the Artinian quotients in play.
    pub fn check_strand_exactness(&self, bound: i64) -> Result<()> {
        for j in 0..=bound {
            for k in 1..=self.len() {
                let dk = self.diff_at(k as isize).strand(j);
                let dk1 = self.diff_at(k as isize + 1).strand(j);
                let dim = self.modules[k].strand_dim(j);
                if dk.rank() + dk1.rank() != dim {
                    return Err(Error::CheckFailed(format!(
                        "strand exactness fails at homological {} internal degree {}: {} + {} != {}",
                        k,
                        j,
                        dk.rank(),
                        dk1.rank(),
                        dim
                    )));
                }
            }
        }
        Ok(())
    }

    /// Homotopy-equivalent complex with no unit entries, by iterated
    /// cancellation: pivot on a unit, clear its row and column, drop the
    /// paired generators. Ranks strictly drop, so this terminates.
    pub fn minimalized(&self) -> ChainComplex {
        let mut modules = self.modules.clone();
        let mut diffs = self.diffs.clone();
        'outer: loop {
            for k in 0..diffs.len() {
                let d = &diffs[k];
                let mut pivot = None;
                'scan: for i in 0..d.target.rank() {
                    for j in 0..d.source.rank() {
                        if d.entries[i][j].unit_coeff().is_some() {
                            pivot = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                if let Some((i, j)) = pivot {
                    cancel_pair(&mut modules, &mut diffs, k, i, j);
                    continue 'outer;
                }
            }
            break;
        }
        while modules.len() > 1 && modules.last().unwrap().rank() == 0 {
            modules.pop();
            diffs.pop();
        }
        let c = ChainComplex::new_unchecked(self.field, modules, diffs)
            .expect("cancellation preserves adjacency");
        debug_assert!(c.verify());
        c
    }

    /// Betti table read off the twists. Meaningful when the complex is
    /// minimal; minimalize first otherwise.
    pub fn betti_table(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (i, module) in self.modules.iter().enumerate() {
            for &tw in &module.twists {
                *t.entries.entry((i, tw)).or_insert(0) += 1;
            }
        }
        t
    }
}

/// Cancel the unit at diffs[k][(i, j)]: generator j of modules[k+1] against
/// generator i of modules[k].
fn cancel_pair(
    modules: &mut [GradedFreeModule],
    diffs: &mut [GradedMap],
    k: usize,
    i: usize,
    j: usize,
) {
    let u_inv = diffs[k].entries[i][j]
        .unit_coeff()
        .expect("pivot is a unit")
        .inv();

    // Clear column j (row operations on the target side of d_k); maps out
    // of modules[k] pick up the inverse column operations.
    let row_factors: Vec<(usize, HomogPoly)> = (0..diffs[k].target.rank())
        .filter(|&r| r != i && !diffs[k].entries[r][j].is_zero())
        .map(|r| (r, diffs[k].entries[r][j].scale(&u_inv)))
        .collect();
    for (r, f) in &row_factors {
        for c in 0..diffs[k].source.rank() {
            let sub = diffs[k].entries[i][c].mul(f);
            diffs[k].entries[*r][c] = diffs[k].entries[*r][c].sub(&sub);
        }
    }
    if k > 0 {
        let e = &mut diffs[k - 1];
        for (r, f) in &row_factors {
            for row in 0..e.target.rank() {
                let add = e.entries[row][*r].mul(f);
                e.entries[row][i] = e.entries[row][i].add(&add);
            }
        }
    }

    // Clear row i (column operations on the source side of d_k); maps into
    // modules[k+1] pick up the inverse row operations.
    let col_factors: Vec<(usize, HomogPoly)> = (0..diffs[k].source.rank())
        .filter(|&c| c != j && !diffs[k].entries[i][c].is_zero())
        .map(|c| (c, diffs[k].entries[i][c].scale(&u_inv)))
        .collect();
    for (c, g) in &col_factors {
        for r in 0..diffs[k].target.rank() {
            let sub = diffs[k].entries[r][j].mul(g);
            diffs[k].entries[r][*c] = diffs[k].entries[r][*c].sub(&sub);
        }
    }
    if k + 1 < diffs.len() {
        let dd = &mut diffs[k + 1];
        for (c, g) in &col_factors {
            for col in 0..dd.source.rank() {
                let add = dd.entries[*c][col].mul(g);
                dd.entries[j][col] = dd.entries[j][col].add(&add);
            }
        }
        debug_assert!(dd.entries[j].iter().all(|e| e.is_zero()));
    }

    // Drop generator i of modules[k] and generator j of modules[k+1].
    modules[k].twists.remove(i);
    modules[k + 1].twists.remove(j);
    {
        let d = &mut diffs[k];
        d.entries.remove(i);
        for row in d.entries.iter_mut() {
            row.remove(j);
        }
        d.target.twists.remove(i);
        d.source.twists.remove(j);
    }
    if k > 0 {
        let e = &mut diffs[k - 1];
        for row in e.entries.iter_mut() {
            row.remove(i);
        }
        e.source.twists.remove(i);
    }
    if k + 1 < diffs.len() {
        let dd = &mut diffs[k + 1];
        dd.entries.remove(j);
        dd.target.twists.remove(j);
    }
}

/// A morphism of complexes top -> bottom: maps[j]: top_j -> bottom_j
/// commuting with the differentials.
pub struct ComplexMorphism {
    pub top: ChainComplex,
    pub bottom: ChainComplex,
    pub maps: Vec<GradedMap>,
}

impl ComplexMorphism {
    pub fn new(top: ChainComplex, bottom: ChainComplex, maps: Vec<GradedMap>) -> Result<Self> {
        for (j, m) in maps.iter().enumerate() {
            let src_ok = j <= top.len() && m.source == top.modules[j];
            let tgt_ok = j <= bottom.len() && m.target == bottom.modules[j];
            if !src_ok || !tgt_ok {
                return Err(Error::Graded(format!("morphism component {} misplaced", j)));
            }
        }
        let morphism = ComplexMorphism { top, bottom, maps };
        for j in 1..=morphism.top.len() {
            let lhs = morphism
                .map_at(j as isize - 1)
                .compose(&morphism.top.diffs[j - 1]);
            let rhs = morphism
                .bottom
                .diff_at(j as isize)
                .compose(&morphism.map_at(j as isize));
            let commutes = lhs
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| x.sub(y).is_zero()));
            if !commutes {
                return Err(Error::Graded(format!(
                    "morphism does not commute with differentials at step {}",
                    j
                )));
            }
        }
        Ok(morphism)
    }

    fn map_at(&self, j: isize) -> GradedMap {
        if j >= 0 && (j as usize) < self.maps.len() {
            self.maps[j as usize].clone()
        } else {
            GradedMap::zero(
                self.top.field,
                self.top.module_at(j),
                self.bottom.module_at(j),
            )
        }
    }
}

/// Mapping cone: Cone_k = Top_{k-1} ⊕ Bot_k with differential
/// [[-d_top, 0], [α, d_bot]].
pub fn mapping_cone(morphism: &ComplexMorphism) -> ChainComplex {
    let field = morphism.top.field;
    let n = usize::max(morphism.top.len() + 1, morphism.bottom.len());
    let cone_module = |k: isize| -> GradedFreeModule {
        morphism
            .top
            .module_at(k - 1)
            .direct_sum(&morphism.bottom.module_at(k))
    };
    let mut modules = Vec::new();
    let mut diffs = Vec::new();
    for k in 0..=n as isize {
        modules.push(cone_module(k));
    }
    for k in 1..=n as isize {
        let top_block = morphism.top.diff_at(k - 1).negated();
        let alpha = morphism.map_at(k - 1);
        let bot_block = morphism.bottom.diff_at(k);
        // Rows: Top_{k-2} then Bot_{k-1}; columns: Top_{k-1} then Bot_k.
        let zero_tr = GradedMap::zero(field, bot_block.source.clone(), top_block.target.clone());
        let upper = concat_columns(&top_block, &zero_tr);
        let lower = concat_columns(&alpha, &bot_block);
        let full = stack_rows(&upper, &lower);
        debug_assert_eq!(full.source, modules[k as usize]);
        debug_assert_eq!(full.target, modules[k as usize - 1]);
        diffs.push(full);
    }
    ChainComplex::new(field, modules, diffs).expect("mapping cone closes")
}

/// [a | b] with a shared target.
fn concat_columns(a: &GradedMap, b: &GradedMap) -> GradedMap {
    assert_eq!(a.target, b.target);
    let source = a.source.direct_sum(&b.source);
    let entries = a
        .entries
        .iter()
        .zip(b.entries.iter())
        .map(|(ra, rb)| {
            let mut row = ra.clone();
            row.extend(rb.iter().cloned());
            row
        })
        .collect();
    GradedMap {
        field: a.field,
        source,
        target: a.target.clone(),
        entries,
    }
}

/// [a; b] with a shared source.
fn stack_rows(a: &GradedMap, b: &GradedMap) -> GradedMap {
    assert_eq!(a.source, b.source);
    a.stack(b)
}

/// Graded Betti numbers: (homological index i, internal degree j) -> rank.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: i64, v: usize) {
        if v > 0 {
            self.entries.insert((i, j), v);
        }
    }

    /// Total Betti numbers by homological index.
    pub fn totals(&self) -> Vec<usize> {
        let n = self
            .entries
            .keys()
            .map(|&(i, _)| i)
            .max()
            .map_or(0, |m| m + 1);
        let mut out = vec![0; n];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    pub fn max_homological(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Key-value export, one `betti i j rank` line per entry.
    pub fn machine_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|(&(i, j), &v)| format!("betti {} {} {}", i, j, v))
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Rows labeled by j - i, columns by homological index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(empty)");
        }
        let maxi = self.max_homological();
        let minrow = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap();
        let maxrow = self.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap();
        let totals = self.totals();
        let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1) + 2;
        write!(f, "{:>8}", "")?;
        for i in 0..=maxi {
            write!(f, "{:>w$}", i, w = width)?;
        }
        writeln!(f)?;
        write!(f, "{:>8}", "total:")?;
        for t in &totals {
            write!(f, "{:>w$}", t, w = width)?;
        }
        writeln!(f)?;
        for row in minrow..=maxrow {
            write!(f, "{:>7}:", row)?;
            for i in 0..=maxi {
                let v = self.get(i, row + i as i64);
                if v == 0 {
                    write!(f, "{:>w$}", ".", w = width)?;
                } else {
                    write!(f, "{:>w$}", v, w = width)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
