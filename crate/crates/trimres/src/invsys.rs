//! Macaulay inverse systems: the contraction action of R on dual
//! polynomials, the evaluation maps from polynomial strands against a
//! dual generator list, tipping points, annihilators, and seeded random
//! compressed instances with socle k(-s)^ell ⊕ k(-2s+1).
//!
//! Dual polynomials are ordinary `HomogPoly` values read in divided-power
//! coordinates. Contraction is exponent subtraction with coefficient 1;
//! that convention needs the characteristic to be zero or larger than
//! every degree in play, which `random_instance` enforces (p > 4s).

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ideal::Ideal;
use crate::linalg::{BasisLabel, Mat, SpanBuilder, StrandMatrix};
use crate::monomial::{strand_basis, strand_dim, strand_index, Monomial};
use crate::poly::HomogPoly;
use crate::profile::ArtinianProfile;
use rand_chacha::ChaCha12Rng;
use rand::SeedableRng;

/// A homogeneous element of the divided-power dual, in coordinates.
pub type DualPoly = HomogPoly;

#[derive(Clone, Debug)]
pub struct InverseSystem {
    pub field: Field,
    pub generators: Vec<DualPoly>,
}

impl InverseSystem {
    pub fn new(field: Field, generators: Vec<DualPoly>) -> Result<Self> {
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::Invalid("zero dual generator".into()));
        }
        Ok(InverseSystem { field, generators })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

/// Contraction f ∘ φ: the monomial with exponents a acts on the dual
/// monomial with exponents A as A ↦ A - a (zero when any coordinate would
/// go negative), extended bilinearly. Requires deg f <= deg φ.
pub fn contract(f: &HomogPoly, phi: &DualPoly) -> Result<DualPoly> {
    if f.degree > phi.degree {
        return Err(Error::Invalid(format!(
            "cannot contract degree {} against degree {}",
            f.degree, phi.degree
        )));
    }
    let mut out = HomogPoly::zero(f.field, phi.degree - f.degree);
    for (m, c) in f.terms() {
        for (n, d) in phi.terms() {
            if m.divides(n) {
                out.add_term(m.quotient(n), &c.mul(d));
            }
        }
    }
    Ok(out)
}

/// Matrix of the degree-i evaluation map S_i -> ⊕_j D_{s_j - i} sending a
/// monomial m to (m ∘ φ_1, ..., m ∘ φ_k). Codomain components with
/// s_j < i are omitted. Row labels carry the generator index.
pub fn phi_matrix(system: &InverseSystem, i: usize) -> StrandMatrix {
    let field = system.field;
    let cols = strand_basis(i);
    let mut row_labels = Vec::new();
    for (j, g) in system.generators.iter().enumerate() {
        if g.degree < i {
            continue;
        }
        for m in strand_basis(g.degree - i) {
            row_labels.push(BasisLabel {
                part: j,
                monomial: m,
            });
        }
    }
    let mut mat = Mat::zeros(field, row_labels.len(), cols.len());
    let mut row_offset = std::collections::BTreeMap::new();
    {
        let mut off = 0usize;
        for (j, g) in system.generators.iter().enumerate() {
            if g.degree < i {
                continue;
            }
            row_offset.insert(j, off);
            off += strand_dim(g.degree - i);
        }
    }
    for (cj, m) in cols.iter().enumerate() {
        let f = HomogPoly::monomial(field, *m);
        for (j, g) in system.generators.iter().enumerate() {
            if g.degree < i {
                continue;
            }
            let image = contract(&f, g).expect("degree checked");
            let off = row_offset[&j];
            for (n, c) in image.terms() {
                mat.set(off + strand_index(n), cj, c.clone());
            }
        }
    }
    let col_labels = cols
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

/// Least m for which the evaluation map in degree m is surjective. The
/// codomain eventually vanishes, so this terminates.
pub fn tipping_point(system: &InverseSystem) -> usize {
    let mut m = 0usize;
    loop {
        let phi = phi_matrix(system, m);
        if phi.rank() == phi.mat.rows {
            return m;
        }
        m += 1;
    }
}

/// The annihilator ideal of the dual system: generators of the kernel of
/// every evaluation map in degrees <= bound, minimalized degree by degree.
/// The bound must exceed the top dual generator degree (the resulting
/// ideal contains the full strand there, so nothing is missed).
pub fn annihilator(system: &InverseSystem, bound: usize) -> Result<Ideal> {
    if bound < system.max_degree() + 1 {
        return Err(Error::BoundTooSmall(
            bound,
            format!(
                "annihilator needs bound >= {} (top dual degree + 1)",
                system.max_degree() + 1
            ),
        ));
    }
    let field = system.field;
    let mut gens: Vec<HomogPoly> = Vec::new();
    let mut prev_kernel: Vec<HomogPoly> = Vec::new();
    for d in 0..=bound {
        let phi = phi_matrix(system, d);
        let kernel = phi.kernel_basis();
        let mut lower = SpanBuilder::new(field, strand_dim(d));
        for f in &prev_kernel {
            for v in 0..3 {
                lower.insert(&f.mul_monomial(&Monomial::var(v)).to_vec());
            }
        }
        let mut cur_kernel = Vec::with_capacity(kernel.len());
        for coords in kernel {
            let f = HomogPoly::from_vec(field, d, &coords);
            if lower.insert(&coords) {
                gens.push(f.clone());
            }
            cur_kernel.push(f);
        }
        prev_kernel = cur_kernel;
    }
    Ok(Ideal::new(field, gens))
}

/// Minimal generators of the inverse system of an Artinian ideal: the
/// orthogonal complements of the strands, stripped of everything reachable
/// by contracting higher-degree duals down.
pub fn inverse_system(ideal: &Ideal, cap: usize) -> Result<InverseSystem> {
    let field = ideal.field;
    let hf = ideal.hilbert_series(cap)?;
    if hf.is_empty() {
        return Err(Error::Invalid("unit ideal has a zero inverse system".into()));
    }
    let top = hf.len() - 1;
    // Dual strand bases M_d = (I_d)^⊥, top degree downward.
    let mut dual_strands: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let strand = ideal.strand_matrix(d);
        // Kernel of the transpose = orthogonal complement of the column
        // space under the monomial pairing.
        dual_strands.push(strand.mat.transpose().kernel_basis());
    }
    let mut gens: Vec<DualPoly> = Vec::new();
    for d in (0..=top).rev() {
        let mut from_above = SpanBuilder::new(field, strand_dim(d));
        if d < top {
            for v_coords in &dual_strands[d + 1] {
                let phi = HomogPoly::from_vec(field, d + 1, v_coords);
                for i in 0..3 {
                    let xi = HomogPoly::var(field, i);
                    let down = contract(&xi, &phi).expect("degree drop by one");
                    if !down.is_zero() {
                        from_above.insert(&down.to_vec());
                    }
                }
            }
        }
        for v_coords in &dual_strands[d] {
            if from_above.insert(v_coords) {
                gens.push(HomogPoly::from_vec(field, d, v_coords));
            }
        }
    }
    InverseSystem::new(field, gens)
}

/// A seeded random compressed instance: the annihilator of ell random
/// degree-s duals together with one random degree-(2s-1) dual, validated
/// to have socle exactly k(-s)^ell ⊕ k(-2s+1) and to be compressed, plus
/// the Gorenstein annihilator of the top dual alone.
#[derive(Clone, Debug)]
pub struct CompressedInstance {
    pub field: Field,
    pub s: usize,
    pub ell: usize,
    pub seed: u64,
    pub system: InverseSystem,
    pub ideal: Ideal,
    pub gorenstein: Ideal,
    pub profile: ArtinianProfile,
}

const INSTANCE_ATTEMPTS: u64 = 8;

pub fn random_instance(
    field: Field,
    s: usize,
    ell: usize,
    seed: u64,
) -> Result<CompressedInstance> {
    if s < 3 {
        return Err(Error::Invalid(format!("instance needs s >= 3, got {}", s)));
    }
    if ell < 1 || ell > s + 1 {
        return Err(Error::Invalid(format!(
            "instance needs 1 <= ell <= s+1 = {}, got {}",
            s + 1,
            ell
        )));
    }
    if let Field::Fp(p) = field {
        if p as usize <= 4 * s {
            return Err(Error::Invalid(format!(
                "characteristic {} too small for dual work at s = {} (need p > 4s)",
                p, s
            )));
        }
    }
    for attempt in 0..INSTANCE_ATTEMPTS {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9e3779b97f4a7c15)));
        let mut duals: Vec<DualPoly> = Vec::with_capacity(ell + 1);
        for _ in 0..ell {
            duals.push(random_dual(field, s, &mut rng));
        }
        let top_dual = random_dual(field, 2 * s - 1, &mut rng);
        duals.push(top_dual.clone());
        let system = InverseSystem::new(field, duals)?;
        let ideal = annihilator(&system, 2 * s)?;
        let profile = ArtinianProfile::compute(&ideal, 2 * s + 1)?;
        let shape_ok = profile
            .shape
            .map_or(false, |sh| sh.s == s && sh.ell == ell);
        if !shape_ok || !profile.compressed {
            continue;
        }
        let top_system = InverseSystem::new(field, vec![top_dual])?;
        let gorenstein = annihilator(&top_system, 2 * s)?;
        return Ok(CompressedInstance {
            field,
            s,
            ell,
            seed,
            system,
            ideal,
            gorenstein,
            profile,
        });
    }
    Err(Error::InstanceValidation(INSTANCE_ATTEMPTS as usize))
}

fn random_dual<R: rand::Rng>(field: Field, degree: usize, rng: &mut R) -> DualPoly {
    let mut out = HomogPoly::zero(field, degree);
    for m in strand_basis(degree) {
        out.add_term(m, &field.random_nonzero(rng));
    }
    out
}

/// The adapted generating set of the Gorenstein ideal attached to an
/// instance: degree-s generators extending a basis of I_s, the degree
/// s+1 completions, and the verified presentation of I as the kept
/// generators plus the irrelevant multiples of the cut ones.
#[derive(Clone, Debug)]
pub struct GensetDecomposition {
    /// All s+1 degree-s generators; the first s+1-ell span I_s.
    pub phis: Vec<HomogPoly>,
    /// The degree-(s+1) generators completing a minimal generating set.
    pub psis: Vec<HomogPoly>,
    pub ell: usize,
}

impl GensetDecomposition {
    /// kept ∪ psis ∪ R_+ · cut, the trimmed presentation of the instance
    /// ideal.
    pub fn trimmed_generators(&self, field: Field) -> Vec<HomogPoly> {
        let keep = self.phis.len() - self.ell;
        let mut gens: Vec<HomogPoly> = self.phis[..keep].to_vec();
        gens.extend(self.psis.iter().cloned());
        for cut in &self.phis[keep..] {
            for v in 0..3 {
                gens.push(cut.mul(&HomogPoly::var(field, v)));
            }
        }
        gens
    }

    /// Minimal generating set of the Gorenstein ideal in the adapted
    /// order: kept phis, cut phis, then psis.
    pub fn gorenstein_generators(&self) -> Vec<HomogPoly> {
        let mut gens = self.phis.clone();
        gens.extend(self.psis.iter().cloned());
        gens
    }

    /// Indices of the cut generators within `gorenstein_generators`.
    pub fn cut_indices(&self) -> Vec<usize> {
        let keep = self.phis.len() - self.ell;
        (keep..self.phis.len()).collect()
    }
}

pub fn genset_decomposition(
    ideal: &Ideal,
    gorenstein: &Ideal,
    s: usize,
) -> Result<GensetDecomposition> {
    let field = ideal.field;
    // Basis of I_s, extended to a basis of (I_t)_s by the cut generators.
    let dim_s = strand_dim(s);
    let mut phis: Vec<HomogPoly> = Vec::new();
    let mut span = SpanBuilder::new(field, dim_s);
    let i_strand = ideal.strand_matrix(s);
    for j in 0..i_strand.mat.cols {
        let col = i_strand.mat.col(j);
        if span.insert(&col) {
            phis.push(HomogPoly::from_vec(field, s, &col));
        }
    }
    let kept = phis.len();
    let t_strand = gorenstein.strand_matrix(s);
    for j in 0..t_strand.mat.cols {
        let col = t_strand.mat.col(j);
        if span.insert(&col) {
            phis.push(HomogPoly::from_vec(field, s, &col));
        }
    }
    if phis.len() != s + 1 {
        return Err(Error::CheckFailed(format!(
            "expected dim (I_t)_s = s+1 = {}, found {}",
            s + 1,
            phis.len()
        )));
    }
    let ell = phis.len() - kept;
    // Degree s+1: extend the multiples of all phis to (I_t)_{s+1}.
    let dim_s1 = strand_dim(s + 1);
    let mut span1 = SpanBuilder::new(field, dim_s1);
    for phi in &phis {
        for v in 0..3 {
            span1.insert(&phi.mul(&HomogPoly::var(field, v)).to_vec());
        }
    }
    let mut psis: Vec<HomogPoly> = Vec::new();
    let t1_strand = gorenstein.strand_matrix(s + 1);
    for j in 0..t1_strand.mat.cols {
        let col = t1_strand.mat.col(j);
        if span1.insert(&col) {
            psis.push(HomogPoly::from_vec(field, s + 1, &col));
        }
    }
    let decomposition = GensetDecomposition { phis, psis, ell };
    // The defining identity, checked strandwise through the conclusive
    // bound for both sides.
    let trimmed = Ideal::new(field, decomposition.trimmed_generators(field));
    let bound = ideal.full_strand_degree(4 * s)?;
    if !ideal.equals_through(&trimmed, bound) {
        return Err(Error::CheckFailed(
            "trimmed presentation does not reproduce the instance ideal".into(),
        ));
    }
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    const F: Field = Field::Fp(32003);

    fn p(s: &str) -> HomogPoly {
        parse_poly(F, s).unwrap()
    }

    fn dual(s: &str) -> DualPoly {
        parse_poly(F, s).unwrap()
    }

    #[test]
    fn contraction_basics() {
        // x acting on X^2 gives X; on Y it dies; xyz on XYZ gives 1.
        assert_eq!(contract(&p("x"), &dual("x^2")).unwrap(), dual("x"));
        assert!(contract(&p("x"), &dual("y")).unwrap().is_zero());
        assert_eq!(contract(&p("x*y*z"), &dual("x*y*z")).unwrap(), p("1"));
        assert!(contract(&p("x^2"), &dual("x")).is_err());
    }

    #[test]
    fn phi_matrix_single_linear_dual() {
        let n = InverseSystem::new(F, vec![dual("x")]).unwrap();
        let m = phi_matrix(&n, 1);
        assert_eq!(m.mat.rows, 1);
        assert_eq!(m.mat.cols, 3);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn phi_transpose_duality() {
        // For a single degree-s dual, the degree-i map and the degree-(s-i)
        // map are mutual transposes in the monomial bases.
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for s in [3usize, 4, 5] {
            let g = random_dual(F, s, &mut rng);
            let n = InverseSystem::new(F, vec![g]).unwrap();
            for i in 0..=s {
                let a = phi_matrix(&n, i);
                let b = phi_matrix(&n, s - i);
                assert_eq!(a.mat.transpose(), b.mat);
                // Surjective iff the complementary map is injective.
                let surj = a.rank() == a.mat.rows;
                let inj = b.rank() == b.mat.cols;
                assert_eq!(surj, inj);
            }
        }
    }

    #[test]
    fn tipping_point_of_monomial_dual() {
        // XYZ has tipping point 2 = ceil(3/2).
        let n = InverseSystem::new(F, vec![dual("x*y*z")]).unwrap();
        assert_eq!(tipping_point(&n), 2);
    }

    #[test]
    fn tipping_point_of_generic_dual_is_half_degree() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for s in 3..=7usize {
            let n = InverseSystem::new(F, vec![random_dual(F, s, &mut rng)]).unwrap();
            assert_eq!(tipping_point(&n), s.div_ceil(2));
        }
    }

    #[test]
    fn annihilator_of_linear_dual() {
        // ann(X) = (y, z, x^2), the dual of k[x]/(x^2).
        let n = InverseSystem::new(F, vec![dual("x")]).unwrap();
        let a = annihilator(&n, 2).unwrap();
        let expect = Ideal::new(F, vec![p("y"), p("z"), p("x^2")]);
        assert!(a.equals_through(&expect, 3));
        assert!(matches!(
            annihilator(&n, 1),
            Err(Error::BoundTooSmall(..))
        ));
    }

    #[test]
    fn annihilator_of_generic_dual_is_compressed_gorenstein() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let s = 3usize;
        let g = random_dual(F, 2 * s - 1, &mut rng);
        let n = InverseSystem::new(F, vec![g]).unwrap();
        let a = annihilator(&n, 2 * s).unwrap();
        let prof = ArtinianProfile::compute(&a, 2 * s + 1).unwrap();
        assert_eq!(prof.ring_type, 1);
        assert_eq!(prof.top_socle_degree, 2 * s - 1);
        assert!(prof.compressed);
    }

    #[test]
    fn inverse_system_roundtrip() {
        // Extracting the inverse system of an annihilator reproduces an
        // equivalent system: same annihilator back.
        let n = InverseSystem::new(F, vec![dual("x*y*z"), dual("x^2")]).unwrap();
        let a = annihilator(&n, 4).unwrap();
        let extracted = inverse_system(&a, 8).unwrap();
        let b = annihilator(&extracted, extracted.max_degree() + 1).unwrap();
        let bound = a.full_strand_degree(10).unwrap();
        assert!(a.equals_through(&b, bound));
        // The extraction finds the minimal generators: XYZ and X^2 both
        // minimal (X^2 is not a contraction of XYZ).
        let mut degs = extracted.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 3]);
    }

    #[test]
    fn instance_generation_and_shape() {
        let inst = random_instance(F, 3, 1, 42).unwrap();
        assert_eq!(inst.profile.shape.unwrap().s, 3);
        assert_eq!(inst.profile.shape.unwrap().ell, 1);
        assert_eq!(inst.profile.ring_type, 2);
        assert!(inst.profile.compressed);
        // Boundary ell = s+1 accepted; beyond rejected; s < 3 rejected.
        assert!(random_instance(F, 3, 4, 1).is_ok());
        assert!(matches!(random_instance(F, 3, 5, 1), Err(Error::Invalid(_))));
        assert!(matches!(random_instance(F, 2, 1, 1), Err(Error::Invalid(_))));
        assert!(matches!(
            random_instance(Field::Fp(11), 3, 1, 1),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn genset_identity_on_instance() {
        let inst = random_instance(F, 3, 2, 5).unwrap();
        let dec = genset_decomposition(&inst.ideal, &inst.gorenstein, 3).unwrap();
        assert_eq!(dec.ell, 2);
        assert_eq!(dec.phis.len(), 4);
        assert!(dec.psis.len() < 4);
        for phi in &dec.phis {
            assert_eq!(phi.degree, 3);
        }
        for psi in &dec.psis {
            assert_eq!(psi.degree, 4);
        }
    }

    #[test]
    fn genset_with_nothing_to_cut() {
        // Passing the Gorenstein ideal as both arguments: the split is
        // trivial, nothing is trimmed, and the identity is the ideal
        // itself.
        let inst = random_instance(F, 3, 1, 13).unwrap();
        let dec = genset_decomposition(&inst.gorenstein, &inst.gorenstein, 3).unwrap();
        assert_eq!(dec.ell, 0);
        assert_eq!(dec.phis.len(), 4);
        let trimmed = Ideal::new(F, dec.trimmed_generators(F));
        let bound = inst.gorenstein.full_strand_degree(12).unwrap();
        assert!(trimmed.equals_through(&inst.gorenstein, bound));
    }

    #[test]
    fn instances_work_over_the_rationals() {
        let inst = random_instance(Field::Rationals, 3, 1, 2).unwrap();
        assert_eq!(inst.profile.shape.unwrap().s, 3);
        assert_eq!(tipping_point(&inst.system), 3);
    }

    #[test]
    fn dual_route_matches_strand_intersection() {
        // The instance ideal is the annihilator of the joint system; the
        // presentation as an intersection of the per-generator
        // annihilators must agree strand by strand. Intersection dims via
        // dim(U ∩ W) = dim U + dim W - dim(U + W).
        let inst = random_instance(F, 3, 2, 9).unwrap();
        let parts: Vec<Ideal> = inst
            .system
            .generators
            .iter()
            .map(|g| {
                annihilator(
                    &InverseSystem::new(F, vec![g.clone()]).unwrap(),
                    g.degree + 1,
                )
                .unwrap()
            })
            .collect();
        for d in 0..=7usize {
            // Iterated intersection of the strands.
            let dim = strand_dim(d);
            let mut inter: Vec<Vec<Scalar>> = {
                let sp = parts[0].strand_span(d);
                basis_rows(&sp, dim)
            };
            for part in &parts[1..] {
                let w = basis_rows(&part.strand_span(d), dim);
                inter = intersect_spaces(&inter, &w, dim);
            }
            assert_eq!(inter.len(), inst.ideal.strand_dim(d), "degree {}", d);
        }
    }

    fn basis_rows(sp: &SpanBuilder, _dim: usize) -> Vec<Vec<Scalar>> {
        sp.rows().to_vec()
    }

    fn intersect_spaces(
        u: &[Vec<Scalar>],
        w: &[Vec<Scalar>],
        dim: usize,
    ) -> Vec<Vec<Scalar>> {
        // Kernel of [U^T | W^T] glued: vectors (a, b) with U a = W b; the
        // intersection is spanned by the U a parts.
        if u.is_empty() || w.is_empty() {
            return Vec::new();
        }
        let mut mat = Mat::zeros(F, dim, u.len() + w.len());
        for (j, row) in u.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    mat.set(i, j, c.clone());
                }
            }
        }
        for (j, row) in w.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    mat.set(i, u.len() + j, c.neg());
                }
            }
        }
        let mut out = Vec::new();
        let mut span = SpanBuilder::new(F, dim);
        for k in mat.kernel_basis() {
            let mut v = vec![F.zero(); dim];
            for (j, row) in u.iter().enumerate() {
                if k[j].is_zero() {
                    continue;
                }
                for (i, c) in row.iter().enumerate() {
                    v[i] = v[i].add(&k[j].mul(c));
                }
            }
            if span.insert(&v) {
                out.push(v);
            }
        }
        out
    }
}
