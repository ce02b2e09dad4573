//! Homogeneous ideals of k[x,y,z] and their degree strands.
//!
//! An ideal is just a generator list; everything observable (Hilbert
//! function, minimal generators, strand membership) is computed from the
//! degree-d strand I_d, spanned by the monomial multiples of the
//! generators landing in degree d.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{BasisLabel, Mat, SpanBuilder, StrandMatrix};
use crate::monomial::{strand_basis, strand_dim};
use crate::poly::HomogPoly;

#[derive(Clone, Debug)]
pub struct Ideal {
    pub field: Field,
    pub generators: Vec<HomogPoly>,
}

impl Ideal {
    pub fn new(field: Field, generators: Vec<HomogPoly>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { field, generators }
    }

    pub fn zero(field: Field) -> Self {
        Ideal {
            field,
            generators: Vec::new(),
        }
    }

    /// The irrelevant ideal (x, y, z).
    pub fn irrelevant(field: Field) -> Self {
        Ideal::new(field, (0..3).map(|i| HomogPoly::var(field, i)).collect())
    }

    /// Matrix whose columns are the monomial multiples m·g_i of the
    /// generators landing in degree d; its column space is I_d.
    pub fn strand_matrix(&self, d: usize) -> StrandMatrix {
        strand_multiplication_matrix(self.field, &self.generators, d)
    }

    /// dim_k I_d, via the rank of the strand matrix.
    pub fn strand_dim(&self, d: usize) -> usize {
        self.strand_span(d).rank()
    }

    /// Echelonized span of I_d, reusable for membership tests.
    pub fn strand_span(&self, d: usize) -> SpanBuilder {
        let mut sp = SpanBuilder::new(self.field, strand_dim(d));
        for g in &self.generators {
            if g.degree > d {
                continue;
            }
            for m in strand_basis(d - g.degree) {
                sp.insert(&g.mul_monomial(&m).to_vec());
            }
        }
        sp
    }

    pub fn contains(&self, f: &HomogPoly) -> bool {
        if f.is_zero() {
            return true;
        }
        self.strand_span(f.degree).contains(&f.to_vec())
    }

    /// Hilbert function of R/I in degree d.
    pub fn hilbert(&self, d: usize) -> usize {
        strand_dim(d) - self.strand_dim(d)
    }

    /// Hilbert function values 0..=top for an Artinian quotient, where top
    /// is the last degree with a nonzero value. Errors when the Hilbert
    /// function is still positive at the cap.
    pub fn hilbert_series(&self, cap: usize) -> Result<Vec<usize>> {
        let mut vals = Vec::new();
        for d in 0..=cap {
            let h = self.hilbert(d);
            if h == 0 {
                return Ok(vals);
            }
            vals.push(h);
        }
        Err(Error::NotArtinian(cap, *vals.last().unwrap()))
    }

    /// A minimal generating set, selected degree by degree: a generator of
    /// degree d survives exactly when it adds rank beyond R_1·I_{d-1}.
    pub fn minimal_generators(&self) -> Vec<HomogPoly> {
        let mut degrees: Vec<usize> = self.generators.iter().map(|g| g.degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut chosen: Vec<HomogPoly> = Vec::new();
        for d in degrees {
            let mut sp = SpanBuilder::new(self.field, strand_dim(d));
            for g in &chosen {
                for m in strand_basis(d - g.degree) {
                    sp.insert(&g.mul_monomial(&m).to_vec());
                }
            }
            for g in &self.generators {
                if g.degree != d {
                    continue;
                }
                if sp.insert(&g.to_vec()) {
                    chosen.push(g.clone());
                }
            }
        }
        chosen
    }

    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    /// Generators of the product a·(f), i.e. {a_j · f}.
    pub fn scaled_by(&self, f: &HomogPoly) -> Vec<HomogPoly> {
        self.generators.iter().map(|a| a.mul(f)).collect()
    }

    pub fn plus(&self, extra: &[HomogPoly]) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Ideal::new(self.field, gens)
    }

    /// Strandwise equality of two ideals through degree `bound`. When both
    /// strands are full at the bound this decides equality outright.
    pub fn equals_through(&self, other: &Ideal, bound: usize) -> bool {
        for d in 0..=bound {
            let a = self.strand_span(d);
            let b = other.strand_span(d);
            if a.rank() != b.rank() {
                return false;
            }
            let mut joint = self.strand_span(d);
            for g in &other.generators {
                if g.degree > d {
                    continue;
                }
                for m in strand_basis(d - g.degree) {
                    if joint.insert(&g.mul_monomial(&m).to_vec()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Degree past which strands of the Artinian quotient vanish, i.e.
    /// the bound at which strandwise comparisons become conclusive.
    pub fn full_strand_degree(&self, cap: usize) -> Result<usize> {
        Ok(self.hilbert_series(cap)?.len())
    }
}

/// Columns are the multiples m·g_i of degree d, rows the monomial basis of
/// S_d. Column labels record (generator index, multiplier monomial).
pub fn strand_multiplication_matrix(
    field: Field,
    gens: &[HomogPoly],
    d: usize,
) -> StrandMatrix {
    let row_basis = strand_basis(d);
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut col_labels = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.degree > d {
            continue;
        }
        for m in strand_basis(d - g.degree) {
            cols.push(g.mul_monomial(&m).to_vec());
            col_labels.push(BasisLabel {
                part: gi,
                monomial: m,
            });
        }
    }
    let mut mat = Mat::zeros(field, row_basis.len(), cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                mat.set(i, j, v.clone());
            }
        }
    }
    let row_labels = row_basis
        .into_iter()
        .map(|m| BasisLabel {
            part: 0,
            monomial: m,
        })
        .collect();
    StrandMatrix {
        mat,
        row_labels,
        col_labels,
    }
}
