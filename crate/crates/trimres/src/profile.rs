//! Numerical profile of an Artinian quotient R/I: Hilbert function, socle,
//! type, embedding dimension, compressedness, and the two-socle-degree
//! shape that drives the trimming constructions.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ideal::Ideal;
use crate::linalg::SpanBuilder;
use crate::monomial::{strand_basis, strand_dim, Monomial};
use std::fmt;

/// The degree-d strand of R/I in coordinates: an echelon basis of I_d and
/// the complementary (coset) monomials that represent a basis of (R/I)_d.
pub struct QuotientStrand {
    pub field: Field,
    pub degree: usize,
    span: SpanBuilder,
    /// Indices (into the monomial basis of S_d) of the coset basis.
    pub coset: Vec<usize>,
}

impl QuotientStrand {
    pub fn new(ideal: &Ideal, d: usize) -> Self {
        let field = ideal.field;
        let span = ideal.strand_span(d);
        let dim = strand_dim(d);
        let mut is_pivot = vec![false; dim];
        for &row in span.pivots() {
            is_pivot[row] = true;
        }
        let coset = (0..dim).filter(|&i| !is_pivot[i]).collect();
        QuotientStrand {
            field,
            degree: d,
            span,
            coset,
        }
    }

    pub fn dim(&self) -> usize {
        self.coset.len()
    }

    /// Quotient coordinates of a vector given in S_d coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.span.reduce(v);
        self.coset.iter().map(|&i| r[i].clone()).collect()
    }

    /// The monomial representing coset basis element i.
    pub fn coset_monomial(&self, i: usize) -> Monomial {
        strand_basis(self.degree)[self.coset[i]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianProfile {
    /// Hilbert function of R/I in degrees 0..=top socle degree.
    pub hilbert: Vec<usize>,
    /// Socle dimensions by degree, nonzero entries only.
    pub socle: Vec<(usize, usize)>,
    /// Largest degree with a nonzero strand (= largest socle degree).
    pub top_socle_degree: usize,
    /// Total socle dimension.
    pub ring_type: usize,
    pub embedding_dim: usize,
    pub compressed: bool,
    /// First degree where the compressed bound fails, when not compressed.
    pub compressed_witness: Option<usize>,
    /// Present when the socle is exactly k(-s)^ell ⊕ k(-2s+1) with s >= 2.
    pub shape: Option<SocleShape>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SocleShape {
    pub s: usize,
    pub ell: usize,
}

impl ArtinianProfile {
    pub fn compute(ideal: &Ideal, cap: usize) -> Result<ArtinianProfile> {
        let hilbert = ideal.hilbert_series(cap)?;
        if hilbert.is_empty() {
            return Err(Error::Invalid("unit ideal has an empty profile".into()));
        }
        let top = hilbert.len() - 1;
        let strands: Vec<QuotientStrand> =
            (0..=top + 1).map(|d| QuotientStrand::new(ideal, d)).collect();
        let mut socle = Vec::new();
        for d in 0..=top {
            let dim = socle_dim(ideal.field, &strands[d], &strands[d + 1]);
            if dim > 0 {
                socle.push((d, dim));
            }
        }
        let ring_type: usize = socle.iter().map(|&(_, c)| c).sum();
        let embedding_dim = if top >= 1 { hilbert[1] } else { 0 };
        let (compressed, compressed_witness) =
            compressed_check(&hilbert, embedding_dim, &socle, top);
        let shape = extract_shape(&socle);
        Ok(ArtinianProfile {
            hilbert,
            socle,
            top_socle_degree: top,
            ring_type,
            embedding_dim,
            compressed,
            compressed_witness,
            shape,
        })
    }

    pub fn socle_dim(&self, d: usize) -> usize {
        self.socle
            .iter()
            .find(|&&(deg, _)| deg == d)
            .map_or(0, |&(_, c)| c)
    }

    pub fn socle_polynomial_string(&self) -> String {
        if self.socle.is_empty() {
            return "0".into();
        }
        self.socle
            .iter()
            .map(|&(d, c)| {
                if c == 1 {
                    format!("z^{}", d)
                } else {
                    format!("{}*z^{}", c, d)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for ArtinianProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hf: Vec<String> = self.hilbert.iter().map(|h| h.to_string()).collect();
        writeln!(f, "hilbert: {}", hf.join(" "))?;
        writeln!(f, "socle polynomial: {}", self.socle_polynomial_string())?;
        writeln!(f, "top socle degree: {}", self.top_socle_degree)?;
        writeln!(f, "type: {}", self.ring_type)?;
        writeln!(f, "embedding dimension: {}", self.embedding_dim)?;
        match self.compressed_witness {
            None => writeln!(f, "compressed: true")?,
            Some(w) => writeln!(f, "compressed: false (fails at degree {})", w)?,
        }
        if let Some(shape) = self.shape {
            writeln!(f, "socle shape: s={} ell={}", shape.s, shape.ell)?;
        }
        Ok(())
    }
}

/// dim of the degree-d socle: kernel of multiplication (R/I)_d -> (R/I)_{d+1}^3.
fn socle_dim(field: Field, cur: &QuotientStrand, next: &QuotientStrand) -> usize {
    let n = cur.dim();
    if n == 0 {
        return 0;
    }
    let mut mat = crate::linalg::Mat::zeros(field, 3 * next.dim(), n);
    for col in 0..n {
        let m = cur.coset_monomial(col);
        for v in 0..3 {
            let prod = m.mul(&Monomial::var(v));
            let mut vec = vec![field.zero(); strand_dim(cur.degree + 1)];
            vec[crate::monomial::strand_index(&prod)] = field.one();
            let reduced = next.reduce(&vec);
            for (row, c) in reduced.into_iter().enumerate() {
                if !c.is_zero() {
                    mat.set(v * next.dim() + row, col, c);
                }
            }
        }
    }
    n - mat.rank()
}

pub fn binom(n: i64, k: i64) -> usize {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// The compressed bound in degree i: the Hilbert function of R/I must meet
/// min{dim of degree-i forms in e variables, sum_l c_l · (dual count)} for
/// every i up to the top socle degree.
fn compressed_check(
    hilbert: &[usize],
    e: usize,
    socle: &[(usize, usize)],
    top: usize,
) -> (bool, Option<usize>) {
    for i in 0..=top {
        let ambient = binom((e as i64 - 1) + i as i64, i as i64);
        let dual: usize = socle
            .iter()
            .map(|&(l, c)| c * binom(e as i64 - 1 + l as i64 - i as i64, l as i64 - i as i64))
            .sum();
        let bound = ambient.min(dual);
        if hilbert.get(i).copied().unwrap_or(0) != bound {
            return (false, Some(i));
        }
    }
    (true, None)
}

fn extract_shape(socle: &[(usize, usize)]) -> Option<SocleShape> {
    if socle.len() != 2 {
        return None;
    }
    let (s, ell) = socle[0];
    let (t, c) = socle[1];
    if c == 1 && s >= 2 && t == 2 * s - 1 {
        Some(SocleShape { s, ell })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    const F: Field = Field::Fp(32003);

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(
            F,
            gens.iter().map(|s| parse_poly(F, s).unwrap()).collect(),
        )
    }

    #[test]
    fn socle_of_irrelevant_ideal() {
        let p = ArtinianProfile::compute(&Ideal::irrelevant(F), 4).unwrap();
        assert_eq!(p.socle, vec![(0, 1)]);
        assert_eq!(p.ring_type, 1);
        assert_eq!(p.top_socle_degree, 0);
    }

    #[test]
    fn socle_of_square_ci() {
        // Complete intersection of quadrics: one socle generator, the
        // class of xyz in degree 3, and the quotient is compressed (it is
        // the annihilator of the dual cube monomial).
        let p = ArtinianProfile::compute(&ideal(&["x^2", "y^2", "z^2"]), 8).unwrap();
        assert_eq!(p.socle, vec![(3, 1)]);
        assert_eq!(p.ring_type, 1);
        assert_eq!(p.hilbert, vec![1, 3, 3, 1]);
        assert!(p.compressed);
    }

    #[test]
    fn non_compressed_witness() {
        // Socle degree 5 forces the compressed bound (1,3,6,6,3,1); the
        // actual Hilbert function (1,3,4,...) fails at degree 2.
        let p = ArtinianProfile::compute(&ideal(&["x^2", "y^2", "z^4"]), 10).unwrap();
        assert!(!p.compressed);
        assert_eq!(p.compressed_witness, Some(2));
    }

    #[test]
    fn low_embedding_dimension() {
        // R/(y, z, x^2) = k[x]/(x^2): e = 1, compressed.
        let p = ArtinianProfile::compute(&ideal(&["y", "z", "x^2"]), 5).unwrap();
        assert_eq!(p.embedding_dim, 1);
        assert_eq!(p.hilbert, vec![1, 1]);
        assert!(p.compressed);
        assert_eq!(p.socle, vec![(1, 1)]);
    }

    #[test]
    fn shape_extraction() {
        assert_eq!(
            extract_shape(&[(4, 2), (7, 1)]),
            Some(SocleShape { s: 4, ell: 2 })
        );
        assert_eq!(extract_shape(&[(4, 2), (8, 1)]), None);
        assert_eq!(extract_shape(&[(7, 1)]), None);
        assert_eq!(extract_shape(&[(4, 2), (7, 2)]), None);
    }

    #[test]
    fn binom_edge_cases() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(2, -1), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(5, 0), 1);
    }
}
