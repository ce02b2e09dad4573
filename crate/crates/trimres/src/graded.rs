//! Twisted graded free modules and the degree-zero maps between them.
//!
//! A free module is a list of twists: ⊕_i R(-t_i). A graded map stores a
//! polynomial matrix whose (i,j) entry is forced to have degree
//! (source twist j) − (target twist i); zero entries carry that degree as
//! annotation. Strand evaluation turns a graded map into an exact matrix
//! over k, which is where all rank and kernel questions are answered.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{BasisLabel, Mat, StrandMatrix};
use crate::monomial::{strand_basis, strand_dim, strand_index};
use crate::poly::HomogPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    /// Twists t_i of the summands R(-t_i), in construction order.
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn free_rank_one(twist: i64) -> Self {
        GradedFreeModule { twists: vec![twist] }
    }

    pub fn zero() -> Self {
        GradedFreeModule { twists: Vec::new() }
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        GradedFreeModule { twists }
    }

    /// dim_k of the degree-d strand.
    pub fn strand_dim(&self, d: i64) -> usize {
        self.twists
            .iter()
            .filter(|&&t| d >= t)
            .map(|&t| strand_dim((d - t) as usize))
            .sum()
    }

    /// Basis labels of the degree-d strand, summand by summand.
    pub fn strand_labels(&self, d: i64) -> Vec<BasisLabel> {
        let mut out = Vec::new();
        for (j, &t) in self.twists.iter().enumerate() {
            if d < t {
                continue;
            }
            for m in strand_basis((d - t) as usize) {
                out.push(BasisLabel {
                    part: j,
                    monomial: m,
                });
            }
        }
        out
    }

    pub fn twisted(&self, by: i64) -> GradedFreeModule {
        GradedFreeModule {
            twists: self.twists.iter().map(|t| t + by).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub field: Field,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    /// entries[i][j]: target row i, source column j.
    pub entries: Vec<Vec<HomogPoly>>,
}

impl GradedMap {
    pub fn new(
        field: Field,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<HomogPoly>>,
    ) -> Result<Self> {
        if entries.len() != target.rank()
            || entries.iter().any(|row| row.len() != source.rank())
        {
            return Err(Error::Graded(format!(
                "matrix shape {}x{} does not match target rank {} / source rank {}",
                entries.len(),
                entries.first().map_or(0, |r| r.len()),
                target.rank(),
                source.rank()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let forced = source.twists[j] - target.twists[i];
                if forced < 0 || e.degree as i64 != forced {
                    return Err(Error::Graded(format!(
                        "entry ({},{}) has degree {}, expected {}",
                        i, j, e.degree, forced
                    )));
                }
            }
        }
        Ok(GradedMap {
            field,
            source,
            target,
            entries,
        })
    }

    /// Zero map with the forced entry degrees.
    pub fn zero(field: Field, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let entries = target
            .twists
            .iter()
            .map(|&ti| {
                source
                    .twists
                    .iter()
                    .map(|&sj| HomogPoly::zero(field, (sj - ti).max(0) as usize))
                    .collect()
            })
            .collect();
        GradedMap {
            field,
            source,
            target,
            entries,
        }
    }

    /// Single-row map F -> R given by a generator list.
    pub fn row_of(field: Field, gens: &[HomogPoly]) -> Self {
        let source = GradedFreeModule::new(gens.iter().map(|g| g.degree as i64).collect());
        let target = GradedFreeModule::free_rank_one(0);
        GradedMap {
            field,
            source,
            target,
            entries: vec![gens.to_vec()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(|e| e.is_zero()))
    }

    pub fn compose(&self, inner: &GradedMap) -> GradedMap {
        assert_eq!(
            self.source, inner.target,
            "composition of non-matching maps"
        );
        let mut entries = Vec::with_capacity(self.target.rank());
        for i in 0..self.target.rank() {
            let mut row = Vec::with_capacity(inner.source.rank());
            for j in 0..inner.source.rank() {
                let deg = (inner.source.twists[j] - self.target.twists[i]).max(0) as usize;
                let mut acc = HomogPoly::zero(self.field, deg);
                for k in 0..self.source.rank() {
                    let a = &self.entries[i][k];
                    let b = &inner.entries[k][j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                row.push(acc);
            }
            entries.push(row);
        }
        GradedMap {
            field: self.field,
            source: inner.source.clone(),
            target: self.target.clone(),
            entries,
        }
    }

    /// The degree-d strand as an exact matrix over k.
    pub fn strand(&self, d: i64) -> StrandMatrix {
        let col_labels = self.source.strand_labels(d);
        let row_labels = self.target.strand_labels(d);
        let mut mat = Mat::zeros(self.field, row_labels.len(), col_labels.len());
        // Row offsets per target summand.
        let mut row_offset = vec![0usize; self.target.rank()];
        {
            let mut off = 0usize;
            for (i, &t) in self.target.twists.iter().enumerate() {
                row_offset[i] = off;
                if d >= t {
                    off += strand_dim((d - t) as usize);
                }
            }
        }
        for (cj, cl) in col_labels.iter().enumerate() {
            let j = cl.part;
            for i in 0..self.target.rank() {
                let e = &self.entries[i][j];
                if e.is_zero() || d < self.target.twists[i] {
                    continue;
                }
                let prod = e.mul_monomial(&cl.monomial);
                debug_assert_eq!(prod.degree as i64, d - self.target.twists[i]);
                for (m, c) in prod.terms() {
                    mat.set(row_offset[i] + strand_index(m), cj, c.clone());
                }
            }
        }
        StrandMatrix {
            mat,
            row_labels,
            col_labels,
        }
    }

    /// Apply the map to a column vector of polynomials (one per source
    /// summand, with matching degrees).
    pub fn apply(&self, v: &[HomogPoly], v_degree: i64) -> Vec<HomogPoly> {
        assert_eq!(v.len(), self.source.rank());
        let mut out = Vec::with_capacity(self.target.rank());
        for i in 0..self.target.rank() {
            let deg = (v_degree - self.target.twists[i]).max(0) as usize;
            let mut acc = HomogPoly::zero(self.field, deg);
            for (j, comp) in v.iter().enumerate() {
                if comp.is_zero() || self.entries[i][j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.entries[i][j].mul(comp));
            }
            out.push(acc);
        }
        out
    }

    /// Solve self · x = rhs for a polynomial column x, where the rhs
    /// components live in degree `rhs_degree - target twist`. Returns None
    /// when no exact solution exists.
    pub fn solve_preimage(&self, rhs: &[HomogPoly], rhs_degree: i64) -> Option<Vec<HomogPoly>> {
        assert_eq!(rhs.len(), self.target.rank());
        let strand = self.strand(rhs_degree);
        let mut b = vec![self.field.zero(); strand.row_labels.len()];
        for (pos, lbl) in strand.row_labels.iter().enumerate() {
            b[pos] = rhs[lbl.part].coeff(&lbl.monomial);
        }
        // Components of rhs that fall outside the strand rows must be zero.
        for (i, r) in rhs.iter().enumerate() {
            if rhs_degree < self.target.twists[i] && !r.is_zero() {
                return None;
            }
        }
        let x = strand.solve(&b)?;
        let mut out: Vec<HomogPoly> = self
            .source
            .twists
            .iter()
            .map(|&t| HomogPoly::zero(self.field, (rhs_degree - t).max(0) as usize))
            .collect();
        for (pos, lbl) in strand.col_labels.iter().enumerate() {
            if !x[pos].is_zero() {
                out[lbl.part].add_term(lbl.monomial, &x[pos]);
            }
        }
        Some(out)
    }

    /// The scalar part of the map: the matrix over k of degree-zero
    /// entries (only possible where source and target twists agree).
    pub fn scalar_part(&self) -> Mat {
        let mut m = Mat::zeros(self.field, self.target.rank(), self.source.rank());
        for i in 0..self.target.rank() {
            for j in 0..self.source.rank() {
                if let Some(u) = self.entries[i][j].unit_coeff() {
                    m.set(i, j, u.clone());
                }
            }
        }
        m
    }

    /// Whether any entry is a unit (nonzero constant); minimal complexes
    /// have none.
    pub fn has_unit_entry(&self) -> bool {
        self.entries
            .iter()
            .any(|row| row.iter().any(|e| e.unit_coeff().is_some()))
    }

    /// Vertical stacking: [self; below] with a shared source.
    pub fn stack(&self, below: &GradedMap) -> GradedMap {
        assert_eq!(self.source, below.source);
        let target = self.target.direct_sum(&below.target);
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        GradedMap {
            field: self.field,
            source: self.source.clone(),
            target,
            entries,
        }
    }

    /// Block diagonal sum of two maps.
    pub fn direct_sum(&self, other: &GradedMap) -> GradedMap {
        let source = self.source.direct_sum(&other.source);
        let target = self.target.direct_sum(&other.target);
        let mut entries = Vec::with_capacity(target.rank());
        for i in 0..self.target.rank() {
            let mut row = self.entries[i].clone();
            for j in 0..other.source.rank() {
                let deg = (other.source.twists[j] - self.target.twists[i]).max(0) as usize;
                row.push(HomogPoly::zero(self.field, deg));
            }
            entries.push(row);
        }
        for i in 0..other.target.rank() {
            let mut row: Vec<HomogPoly> = self
                .source
                .twists
                .iter()
                .map(|&t| HomogPoly::zero(self.field, (t - other.target.twists[i]).max(0) as usize))
                .collect();
            row.extend(other.entries[i].iter().cloned());
            entries.push(row);
        }
        GradedMap {
            field: self.field,
            source,
            target,
            entries,
        }
    }

    pub fn negated(&self) -> GradedMap {
        GradedMap {
            field: self.field,
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e.neg()).collect())
                .collect(),
        }
    }

    /// Same matrix viewed with both modules twisted by `by`.
    pub fn twisted(&self, by: i64) -> GradedMap {
        GradedMap {
            field: self.field,
            source: self.source.twisted(by),
            target: self.target.twisted(by),
            entries: self.entries.clone(),
        }
    }

    /// Restrict to a subset of source columns (in the given order).
    pub fn select_columns(&self, cols: &[usize]) -> GradedMap {
        let source = GradedFreeModule::new(cols.iter().map(|&j| self.source.twists[j]).collect());
        let entries = self
            .entries
            .iter()
            .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
            .collect();
        GradedMap {
            field: self.field,
            source,
            target: self.target.clone(),
            entries,
        }
    }

    /// Restrict to a subset of target rows (in the given order).
    pub fn select_rows(&self, rows: &[usize]) -> GradedMap {
        let target = GradedFreeModule::new(rows.iter().map(|&i| self.target.twists[i]).collect());
        let entries = rows.iter().map(|&i| self.entries[i].clone()).collect();
        GradedMap {
            field: self.field,
            source: self.source.clone(),
            target,
            entries,
        }
    }
}

/// Rank of the degree-d strand of the scalar part, i.e. of (map ⊗ k)
/// restricted to summands of twist d on both sides.
pub fn scalar_rank_by_degree(map: &GradedMap) -> Vec<(i64, usize)> {
    let mut degrees: Vec<i64> = map
        .source
        .twists
        .iter()
        .chain(map.target.twists.iter())
        .cloned()
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    let full = map.scalar_part();
    let mut out = Vec::new();
    for d in degrees {
        let rows: Vec<usize> = (0..map.target.rank())
            .filter(|&i| map.target.twists[i] == d)
            .collect();
        let cols: Vec<usize> = (0..map.source.rank())
            .filter(|&j| map.source.twists[j] == d)
            .collect();
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let mut sub = Mat::zeros(map.field, rows.len(), cols.len());
        for (ri, &i) in rows.iter().enumerate() {
            for (cj, &j) in cols.iter().enumerate() {
                sub.set(ri, cj, full.get(i, j).clone());
            }
        }
        let r = sub.rank();
        if r > 0 {
            out.push((d, r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    const F: Field = Field::Fp(32003);

    fn p(s: &str) -> HomogPoly {
        parse_poly(F, s).unwrap()
    }

    #[test]
    fn graded_map_validation() {
        let src = GradedFreeModule::new(vec![1, 1, 1]);
        let tgt = GradedFreeModule::free_rank_one(0);
        let ok = GradedMap::new(F, src.clone(), tgt.clone(), vec![vec![p("x"), p("y"), p("z")]]);
        assert!(ok.is_ok());
        let bad = GradedMap::new(F, src, tgt, vec![vec![p("x"), p("y^2"), p("z")]]);
        assert!(bad.is_err());
    }

    #[test]
    fn strand_of_variable_row() {
        let map = GradedMap::row_of(F, &[p("x"), p("y"), p("z")]);
        let s2 = map.strand(2);
        assert_eq!(s2.mat.rows, 6);
        assert_eq!(s2.mat.cols, 9);
        assert_eq!(s2.rank(), 6);
        assert_eq!(s2.kernel_basis().len(), 3);
    }

    #[test]
    fn solve_preimage_in_irrelevant_ideal() {
        let map = GradedMap::row_of(F, &[p("x"), p("y"), p("z")]);
        let rhs = vec![p("x^2 + y*z")];
        let sol = map.solve_preimage(&rhs, 2).unwrap();
        let back = map.apply(&sol, 2);
        assert_eq!(back[0], rhs[0]);
        // Constants are not in (x,y,z).
        assert!(map.solve_preimage(&[p("1")], 0).is_none());
    }

    #[test]
    fn scalar_part_and_units() {
        let src = GradedFreeModule::new(vec![2, 3]);
        let tgt = GradedFreeModule::new(vec![2]);
        let map = GradedMap::new(F, src, tgt, vec![vec![p("5"), p("x")]]).unwrap();
        assert!(map.has_unit_entry());
        assert_eq!(map.scalar_part().rank(), 1);
        assert_eq!(scalar_rank_by_degree(&map), vec![(2, 1)]);
    }
}
